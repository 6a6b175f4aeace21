use super::{init_confidence_polarized, init_confidence_random, ConfidenceMatrix};
use crate::registry::{Named, Registry};
use crate::storage::SimConfig;
use crate::Result;

/// Produces the step-0 confidence levels for a configured population.
pub trait ConfidenceInitializer: Named + Send + Sync {
    /// Whether the result depends on the per-agent group labels.
    fn uses_groups(&self) -> bool {
        false
    }

    fn init(&self, cfg: &SimConfig, groups: &[u8]) -> Result<ConfidenceMatrix>;
}

pub struct RandomConfidence;

impl Named for RandomConfidence {
    fn name(&self) -> &'static str {
        "random"
    }
}

impl ConfidenceInitializer for RandomConfidence {
    fn init(&self, cfg: &SimConfig, _groups: &[u8]) -> Result<ConfidenceMatrix> {
        init_confidence_random(cfg.n, cfg.m, cfg.seed)
    }
}

/// Two camps of opposite confidence, split by group label.
pub struct PolarizedConfidence;

impl Named for PolarizedConfidence {
    fn name(&self) -> &'static str {
        "polarized"
    }
}

impl ConfidenceInitializer for PolarizedConfidence {
    fn uses_groups(&self) -> bool {
        true
    }

    fn init(&self, cfg: &SimConfig, groups: &[u8]) -> Result<ConfidenceMatrix> {
        init_confidence_polarized(cfg.n, cfg.m, cfg.a, groups)
    }
}

pub fn confidence_registry() -> Registry<dyn ConfidenceInitializer> {
    Registry::<dyn ConfidenceInitializer>::new("confidence mode")
        .with(Box::new(RandomConfidence))
        .with(Box::new(PolarizedConfidence))
}
