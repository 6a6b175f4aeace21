use super::{run_config, Run, SweepResult};
use crate::registry::{Named, Registry};
use crate::storage::SimConfig;
use crate::Result;

/// A named preset of network and agent initialization.
pub trait TrialKind: Named + Send + Sync {
    /// Overwrites the fields that define the trial; everything else is kept.
    fn apply(&self, cfg: &mut SimConfig);
}

/// Random understandings and confidence on one ER network.
pub struct RandomGiant;

impl Named for RandomGiant {
    fn name(&self) -> &'static str {
        "random_giant"
    }
}

impl TrialKind for RandomGiant {
    fn apply(&self, cfg: &mut SimConfig) {
        cfg.network = "giant".into();
        cfg.polarization_index = 0.5;
        cfg.confidence_mode = "random".into();
    }
}

/// Polarized agents, each camp in its own community.
pub struct PolarizedCommunities;

impl Named for PolarizedCommunities {
    fn name(&self) -> &'static str {
        "polarized_communities"
    }
}

impl TrialKind for PolarizedCommunities {
    fn apply(&self, cfg: &mut SimConfig) {
        cfg.network = "communities".into();
        cfg.polarization_index = 0.8;
        cfg.confidence_mode = "polarized".into();
        cfg.a = 0.8;
    }
}

/// Polarized agents scattered at random over one ER network.
pub struct PolarizedGiant;

impl Named for PolarizedGiant {
    fn name(&self) -> &'static str {
        "polarized_giant"
    }
}

impl TrialKind for PolarizedGiant {
    fn apply(&self, cfg: &mut SimConfig) {
        cfg.network = "giant".into();
        cfg.polarization_index = 0.8;
        cfg.confidence_mode = "polarized".into();
        cfg.a = 0.8;
    }
}

pub fn trial_registry() -> Registry<dyn TrialKind> {
    Registry::<dyn TrialKind>::new("trial")
        .with(Box::new(RandomGiant))
        .with(Box::new(PolarizedCommunities))
        .with(Box::new(PolarizedGiant))
}

/// `base` with the preset of trial `kind` applied and validated.
pub fn trial_config(kind: &str, base: &SimConfig) -> Result<SimConfig> {
    let mut cfg = base.clone();
    trial_registry().resolve("trial", kind)?.apply(&mut cfg);
    cfg.validate()?;
    Ok(cfg)
}

pub fn run_trial(kind: &str, base: &SimConfig) -> Result<(Run, SweepResult)> {
    let cfg = trial_config(kind, base)?;
    let run = run_config(&cfg)?;
    let summary = run.summary("trial", 0.0);
    Ok((run, summary))
}
