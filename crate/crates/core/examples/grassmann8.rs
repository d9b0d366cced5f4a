//! Slices G(2,6) in its Plücker embedding by a random P^7 and certifies a smooth canonical curve of genus 8.
//!
//! ```text
//! cargo run --release --example grassmann8 -- [seed]
//! ```

use curvelink::pipelines::{run_grassmann8, PipelineConfig, PipelineId};

fn main() {
    env_logger::Builder::from_env(env_logger::Env::new().filter("LIAISON_LOG")).init();
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let cert = run_grassmann8(&PipelineConfig::new(PipelineId::Grassmann8).with_seed(seed));
    print!("{}", cert.table());
    std::process::exit(if cert.pass { 0 } else { 1 });
}
