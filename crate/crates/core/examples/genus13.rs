//! Links a (12, 8) curve in P^4 by three cubics to a (15, 14) curve with a single node at a chosen point.
//!
//! ```text
//! cargo run --release --example genus13 -- [seed]
//! ```

use curvelink::pipelines::{run_genus13, PipelineConfig, PipelineId};

fn main() {
    env_logger::Builder::from_env(env_logger::Env::new().filter("LIAISON_LOG")).init();
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let cert = run_genus13(&PipelineConfig::new(PipelineId::Genus13).with_seed(seed));
    print!("{}", cert.table());
    std::process::exit(if cert.pass { 0 } else { 1 });
}
