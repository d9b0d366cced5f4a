//! Seeded end-to-end constructions, each producing a [`Certificate`].
//!
//! Every randomized choice is followed by an explicit check of the open condition it is
//! supposed to satisfy. When a check fails the whole attempt is redone with a derived seed,
//! up to the retry budget; the certificate records how many retries were used and why.

mod canonical;
mod grassmann8;
mod k3_links;
mod nodal_model;
mod surface;

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use log::{info, warn};

pub use canonical::{run_genus12, run_genus14};
pub use grassmann8::run_grassmann8;
pub use k3_links::{run_genus11, run_genus13};
pub use nodal_model::NodalPlaneModel;
pub use surface::{CurveOnSurface, ElevenPointSurface};

use crate::algebra::{PrimeField, DEFAULT_PRIME};
use crate::error::{Error, Result};
use crate::groebner::io::write_ideal;
use crate::groebner::Ideal;
use crate::liaison::{Certificate, Claim};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PipelineId {
    Genus14,
    Genus13,
    Genus12,
    Genus11,
    Grassmann8,
}

impl PipelineId {
    pub const ALL: [PipelineId; 5] =
        [PipelineId::Genus14, PipelineId::Genus13, PipelineId::Genus12, PipelineId::Genus11, PipelineId::Grassmann8];

    pub fn name(self) -> &'static str {
        match self {
            PipelineId::Genus14 => "genus14",
            PipelineId::Genus13 => "genus13",
            PipelineId::Genus12 => "genus12",
            PipelineId::Genus11 => "genus11",
            PipelineId::Grassmann8 => "grassmann8",
        }
    }
}

impl fmt::Display for PipelineId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PipelineId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PipelineId::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown pipeline {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct PipelineConfig {
    pub pipeline: PipelineId,
    pub field: PrimeField,
    pub seed: u64,
    /// Attempts allowed in total, at least 1.
    pub retries: u32,
    /// Where to write the intermediate ideals, if anywhere.
    pub dump_dir: Option<PathBuf>,
}

impl PipelineConfig {
    pub fn new(pipeline: PipelineId) -> Self {
        PipelineConfig {
            pipeline,
            field: PrimeField::new(DEFAULT_PRIME as u64).expect("default prime"),
            seed: 0,
            retries: 5,
            dump_dir: None,
        }
    }

    pub fn with_prime(mut self, p: u64) -> Result<Self> {
        self.field = PrimeField::new(p)?;
        Ok(self)
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_retries(mut self, retries: u32) -> Result<Self> {
        if retries == 0 {
            return Err(Error::Precondition("the retry budget must be at least 1".into()));
        }
        self.retries = retries;
        Ok(self)
    }

    pub fn with_dump_dir(mut self, dir: impl Into<PathBuf>) -> Self {
        self.dump_dir = Some(dir.into());
        self
    }

    /// Seed of attempt `k`; attempt 0 uses the configured seed itself.
    pub fn attempt_seed(&self, k: u32) -> u64 {
        if k == 0 {
            return self.seed;
        }
        // splitmix64 of (seed, k)
        let mut z = self.seed ^ (k as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15);
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    pub(crate) fn dump(&self, stage: &str, ideal: &Ideal) -> Result<()> {
        if let Some(dir) = &self.dump_dir {
            std::fs::create_dir_all(dir)?;
            write_ideal(&dir.join(format!("{}-{stage}.ideal", self.pipeline)), ideal)?;
        }
        Ok(())
    }
}

/// Runs the configured pipeline.
pub fn run(cfg: &PipelineConfig) -> Certificate {
    match cfg.pipeline {
        PipelineId::Genus14 => run_genus14(cfg),
        PipelineId::Genus13 => run_genus13(cfg),
        PipelineId::Genus12 => run_genus12(cfg),
        PipelineId::Genus11 => run_genus11(cfg),
        PipelineId::Grassmann8 => run_grassmann8(cfg),
    }
}

/// Repeats `attempt` with derived seeds until it yields a passing certificate.
///
/// An attempt pushes claims into the certificate as it goes and returns `Err` when a
/// construction step cannot continue. After the budget is spent the last attempt's
/// certificate is returned; if it stopped early it carries a failing
/// "construction completed" claim naming the condition that was not met.
pub(crate) fn drive(cfg: &PipelineConfig, attempt: impl Fn(&PipelineConfig, u64, &mut Certificate) -> Result<()>) -> Certificate {
    let mut history = Vec::new();
    let mut last = None;
    for k in 0..cfg.retries {
        let seed = cfg.attempt_seed(k);
        let mut cert = Certificate::new(cfg.pipeline.name(), cfg.field.modulus() as u64, cfg.seed);
        cert.retries = k;
        let outcome = attempt(cfg, seed, &mut cert);
        let reason = match &outcome {
            Err(e) => Some(e.to_string()),
            Ok(()) => cert.first_failure().map(|c| format!("claim {:?}: expected {}, computed {}", c.name, c.expected, c.computed)),
        };
        if let Err(e) = outcome {
            cert.push(Claim::new("construction completed", true, false));
            cert.note(format!("first unsatisfied condition: {e}"));
        }
        match reason {
            None => {
                info!("{}: attempt {k} passed", cfg.pipeline);
                cert.notes.splice(0..0, history);
                return cert;
            }
            Some(r) => {
                warn!("{}: attempt {k} (seed {seed}) failed: {r}", cfg.pipeline);
                history.push(format!("attempt {k} (seed {seed}) failed: {r}"));
                last = Some(cert);
            }
        }
    }
    let mut cert = last.expect("at least one attempt");
    history.pop();
    cert.notes.splice(0..0, history);
    cert
}
