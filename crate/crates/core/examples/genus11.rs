//! Builds a (13, 9) curve in P^4 from a curve on a K3 surface and links it by three cubics to a smooth (14, 11) curve.
//!
//! ```text
//! cargo run --release --example genus11 -- [seed]
//! ```

use curvelink::pipelines::{run_genus11, PipelineConfig, PipelineId};

fn main() {
    env_logger::Builder::from_env(env_logger::Env::new().filter("LIAISON_LOG")).init();
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let cert = run_genus11(&PipelineConfig::new(PipelineId::Genus11).with_seed(seed));
    print!("{}", cert.table());
    std::process::exit(if cert.pass { 0 } else { 1 });
}
