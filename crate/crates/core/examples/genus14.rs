//! Builds a (14, 8) curve on the eleven-point surface and links it by five quadrics to a
//! smooth (18, 14) curve. Set `LIAISON_LOG=info` to follow the stages.
//!
//! ```text
//! cargo run --release --example genus14 -- [seed]
//! ```

use curvelink::pipelines::{run_genus14, PipelineConfig, PipelineId};

fn main() {
    env_logger::Builder::from_env(env_logger::Env::new().filter("LIAISON_LOG")).init();
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let cert = run_genus14(&PipelineConfig::new(PipelineId::Genus14).with_seed(seed));
    print!("{}", cert.table());
    std::process::exit(if cert.pass { 0 } else { 1 });
}
