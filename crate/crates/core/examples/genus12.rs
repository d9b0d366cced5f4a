//! Builds a (15, 9) curve on the eleven-point surface and links it by five quadrics to a smooth (17, 12) curve.
//!
//! ```text
//! cargo run --release --example genus12 -- [seed]
//! ```

use curvelink::pipelines::{run_genus12, PipelineConfig, PipelineId};

fn main() {
    env_logger::Builder::from_env(env_logger::Env::new().filter("LIAISON_LOG")).init();
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let cert = run_genus12(&PipelineConfig::new(PipelineId::Genus12).with_seed(seed));
    print!("{}", cert.table());
    std::process::exit(if cert.pass { 0 } else { 1 });
}
