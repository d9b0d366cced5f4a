use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use log::info;
use serde_json::json;

use curvelink::groebner::io::{format_ideal, read_ideal, write_ideal};
use curvelink::groebner::{saturate_irrelevant, Ideal};
use curvelink::hilbert::hilbert_profile;
use curvelink::liaison::{link, Certificate, LiaisonSpec, LinkOptions, Sigma};
use curvelink::pipelines::{run, PipelineConfig, PipelineId};
use curvelink::poly::MonomialOrder;
use curvelink::Error;

#[derive(Parser)]
#[command(name = "curvelink", version, about = "Certified linkage of space curves over prime fields")]
struct Cli {
    /// Print JSON on stdout instead of tables.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a construction pipeline and write its certificate.
    Construct(ConstructArgs),
    /// Reduced Gröbner basis of an ideal file.
    Gb {
        #[arg(long = "in")]
        input: PathBuf,
        /// `degrevlex` or `elim:k` (eliminate the first k variables).
        #[arg(long, default_value = "degrevlex")]
        order: String,
    },
    /// Hilbert function values and polynomial of an ideal file.
    Hilbert {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: u32,
        /// Saturate with respect to the irrelevant ideal first.
        #[arg(long)]
        saturate: bool,
    },
    /// Link the curve in an ideal file by random forms of the given degrees.
    Link {
        #[arg(long = "in")]
        input: PathBuf,
        /// Degrees with multiplicities, e.g. `2^5` or `3^2,4`.
        #[arg(long)]
        sigma: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the residual ideal here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a certificate, optionally re-running its pipeline.
    Verify {
        #[arg(long)]
        cert: PathBuf,
        #[arg(long)]
        replay: bool,
    },
}

#[derive(Args)]
struct ConstructArgs {
    /// genus14, genus13, genus12, genus11, grassmann8, or `all`.
    #[arg(long)]
    pipeline: String,
    #[arg(long, default_value_t = 10007)]
    prime: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Attempts allowed per run.
    #[arg(long, default_value_t = 5)]
    retries: u32,
    /// Certificate file; a directory when running all pipelines.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write intermediate ideals into this directory.
    #[arg(long)]
    dump_ideals: Option<PathBuf>,
    /// Pipelines run concurrently when running all of them.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

/// Exit codes: 0 pass, 1 verified failure, 2 usage or parse error.
enum Outcome {
    Pass,
    Fail,
    Usage(String),
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        match e {
            Error::RegularityNotReached { .. } | Error::Verification { .. } => {
                eprintln!("error: {e}");
                Outcome::Fail
            }
            other => Outcome::Usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("LIAISON_LOG", "warn")).init();
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Construct(args) => construct(args, cli.json),
        Command::Gb { input, order } => gb(&input, &order, cli.json),
        Command::Hilbert { input, from, to, saturate } => hilbert(&input, from, to, saturate, cli.json),
        Command::Link { input, sigma, seed, out } => link_cmd(&input, &sigma, seed, out.as_deref(), cli.json),
        Command::Verify { cert, replay } => verify(&cert, replay, cli.json),
    };
    match outcome {
        Outcome::Pass => ExitCode::SUCCESS,
        Outcome::Fail => ExitCode::from(1),
        Outcome::Usage(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn verdict(pass: bool) -> Outcome {
    if pass {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

fn construct(args: ConstructArgs, as_json: bool) -> Outcome {
    let ids: Vec<PipelineId> = if args.pipeline == "all" {
        PipelineId::ALL.to_vec()
    } else {
        match args.pipeline.parse() {
            Ok(id) => vec![id],
            Err(e) => return Outcome::from(e),
        }
    };
    let mut configs = Vec::new();
    for &id in &ids {
        let cfg = PipelineConfig::new(id)
            .with_prime(args.prime)
            .and_then(|c| c.with_retries(args.retries))
            .map(|c| c.with_seed(args.seed));
        let mut cfg = match cfg {
            Ok(c) => c,
            Err(e) => return Outcome::Usage(e.to_string()),
        };
        if let Some(dir) = &args.dump_ideals {
            cfg = cfg.with_dump_dir(dir);
        }
        configs.push(cfg);
    }
    let certs = run_all(&configs, args.jobs.max(1));
    let mut pass = true;
    for cert in &certs {
        let path = match (&args.out, ids.len()) {
            (Some(p), 1) => p.clone(),
            (Some(dir), _) => dir.join(format!("{}.cert.json", cert.pipeline)),
            (None, _) => PathBuf::from(format!("{}.cert.json", cert.pipeline)),
        };
        if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
            if let Err(e) = std::fs::create_dir_all(parent) {
                return Outcome::Usage(e.to_string());
            }
        }
        if let Err(e) = std::fs::write(&path, cert.to_json()) {
            return Outcome::Usage(format!("{}: {e}", path.display()));
        }
        info!("certificate written to {}", path.display());
        pass &= cert.pass;
    }
    if as_json {
        let out: Vec<&Certificate> = certs.iter().collect();
        let value = if out.len() == 1 { serde_json::to_value(out[0]) } else { serde_json::to_value(&out) };
        println!("{}", value.expect("certificate serializes"));
    } else {
        for cert in &certs {
            print!("{}", cert.table());
            for n in &cert.notes {
                println!("  note: {n}");
            }
        }
    }
    verdict(pass)
}

/// Runs the configurations on up to `jobs` threads, returning certificates in input order.
fn run_all(configs: &[PipelineConfig], jobs: usize) -> Vec<Certificate> {
    let mut out: Vec<Option<Certificate>> = vec![None; configs.len()];
    for (chunk_cfgs, chunk_out) in configs.chunks(jobs).zip(out.chunks_mut(jobs)) {
        std::thread::scope(|s| {
            for (cfg, slot) in chunk_cfgs.iter().zip(chunk_out.iter_mut()) {
                s.spawn(move || *slot = Some(run(cfg)));
            }
        });
    }
    out.into_iter().map(|c| c.expect("pipeline finished")).collect()
}

fn parse_order(s: &str, nvars: usize) -> Result<MonomialOrder, String> {
    match s.split_once(':') {
        None if s == "degrevlex" => Ok(MonomialOrder::Degrevlex),
        Some(("elim", k)) => {
            let k: usize = k.parse().map_err(|e| format!("elim:{k}: {e}"))?;
            if k == 0 || k >= nvars {
                return Err(format!("elim:{k} needs 0 < k < {nvars}"));
            }
            Ok(MonomialOrder::Elimination { eliminate: ((1u32 << k) - 1) as u16 })
        }
        _ => Err(format!("unknown order {s:?}")),
    }
}

fn gb(input: &Path, order: &str, as_json: bool) -> Outcome {
    let ideal = match read_ideal(input) {
        Ok(i) => i,
        Err(e) => return Outcome::Usage(e.to_string()),
    };
    let order = match parse_order(order, ideal.ring().nvars) {
        Ok(o) => o,
        Err(e) => return Outcome::Usage(e),
    };
    let basis = ideal.gb_with(order);
    if as_json {
        let elems: Vec<String> = basis.elements().iter().map(|g| g.to_string()).collect();
        println!("{}", json!({ "order": format!("{order:?}"), "basis": elems }));
    } else {
        print!("{}", format_ideal(&Ideal::new(ideal.ring(), basis.elements().to_vec())));
    }
    Outcome::Pass
}

fn hilbert(input: &Path, from: u32, to: u32, saturate: bool, as_json: bool) -> Outcome {
    if from > to {
        return Outcome::Usage(format!("empty degree range {from}..{to}"));
    }
    let mut ideal = match read_ideal(input) {
        Ok(i) => i,
        Err(e) => return Outcome::Usage(e.to_string()),
    };
    if saturate {
        ideal = saturate_irrelevant(&ideal);
    }
    match hilbert_profile(&ideal, Some(from..=to)) {
        Ok(p) => {
            if as_json {
                println!("{}", p.to_json());
            } else {
                for (d, v) in &p.hf {
                    println!("HF({d}) = {v}");
                }
                println!("dim {} degree {} pa {}", p.dim, p.degree, p.pa);
            }
            Outcome::Pass
        }
        Err(Error::RegularityNotReached { values }) => {
            if as_json {
                println!("{}", json!({ "error": "regularity not reached", "hf": values }));
            } else {
                eprintln!("regularity not reached; raw values {values:?}");
            }
            Outcome::Fail
        }
        Err(e) => Outcome::from(e),
    }
}

fn link_cmd(input: &Path, sigma: &str, seed: u64, out: Option<&Path>, as_json: bool) -> Outcome {
    let sigma: Sigma = match sigma.parse() {
        Ok(s) => s,
        Err(e) => return Outcome::from(e),
    };
    let ideal = match read_ideal(input) {
        Ok(i) => saturate_irrelevant(&i),
        Err(e) => return Outcome::Usage(e.to_string()),
    };
    let result = hilbert_profile(&ideal, None)
        .and_then(|p| LiaisonSpec::new(ideal.ring().nvars as u32 - 1, sigma, p.degree, p.pa))
        .and_then(|spec| link(&ideal, &spec, seed, LinkOptions::default()));
    let res = match result {
        Ok(r) => r,
        Err(e) => return Outcome::from(e),
    };
    if let Some(path) = out {
        if let Err(e) = write_ideal(path, &res.i_d) {
            return Outcome::Usage(e.to_string());
        }
    }
    let claims = res.claims();
    let pass = claims.iter().all(|c| c.pass);
    if as_json {
        println!(
            "{}",
            json!({
                "sigma": res.spec.sigma.to_string(),
                "numerics": { "d_prime": res.numerics.d_prime, "g_prime": res.numerics.g_prime, "nodes": res.numerics.nodes },
                "measured": res.measured,
                "claims": claims,
                "pass": pass,
            })
        );
    } else {
        println!(
            "link by {}: expected D ({}, {}) with {} nodes on C∪D",
            res.spec.sigma, res.numerics.d_prime, res.numerics.g_prime, res.numerics.nodes
        );
        for c in &claims {
            println!("  {:<36} {:>8} {:>8}  {}", c.name, c.expected.to_string(), c.computed.to_string(), if c.pass { "pass" } else { "FAIL" });
        }
    }
    verdict(pass)
}

fn verify(path: &Path, replay: bool, as_json: bool) -> Outcome {
    let cert = match std::fs::read_to_string(path).map_err(Error::from).and_then(|s| Certificate::from_json(&s)) {
        Ok(c) => c,
        Err(e) => return Outcome::Usage(e.to_string()),
    };
    let mut problems = cert.inconsistencies();
    if replay {
        let cfg = cert
            .pipeline
            .parse::<PipelineId>()
            .and_then(|id| PipelineConfig::new(id).with_prime(cert.prime))
            .and_then(|c| c.with_retries(cert.retries + 1))
            .map(|c| c.with_seed(cert.seed));
        let cfg = match cfg {
            Ok(c) => c,
            Err(e) => return Outcome::Usage(e.to_string()),
        };
        let again = run(&cfg);
        if again.to_json() != cert.to_json() {
            let diverging = cert.diverging_claims(&again);
            if diverging.is_empty() {
                problems.push("replayed certificate differs outside the claims".into());
            }
            problems.extend(diverging.into_iter().map(|c| format!("claim {c:?} differs on replay")));
        }
    }
    if as_json {
        println!("{}", json!({ "certificate": path.display().to_string(), "replayed": replay, "problems": problems }));
    } else if problems.is_empty() {
        println!("{}: consistent{}", path.display(), if replay { ", replay identical" } else { "" });
    } else {
        for p in &problems {
            println!("{p}");
        }
    }
    verdict(problems.is_empty())
}
