use rayon::prelude::*;

use super::{run_config, SweepResult};
use crate::registry::{Named, Registry};
use crate::storage::SimConfig;
use crate::{Error, Result};

/// A model parameter that can be varied across runs.
pub trait SweepParameter: Named + Send + Sync {
    /// `base` with this parameter set to `value`.
    fn apply(&self, base: &SimConfig, value: f64) -> Result<SimConfig>;

    /// Grid used when the caller gives none.
    fn default_values(&self) -> Vec<f64>;
}

fn as_count(field: &str, value: f64) -> Result<usize> {
    if value.fract() != 0.0 || value < 1.0 || !value.is_finite() {
        return Err(Error::config(
            field,
            format!("sweep value must be a positive integer, got {value}"),
        ));
    }
    Ok(value as usize)
}

/// Mean degree `k` (and `k_in` for two-community networks).
pub struct Connectivity;

impl Named for Connectivity {
    fn name(&self) -> &'static str {
        "connectivity"
    }
}

impl SweepParameter for Connectivity {
    fn apply(&self, base: &SimConfig, value: f64) -> Result<SimConfig> {
        let mut cfg = base.clone();
        cfg.k = value;
        cfg.k_in = value;
        Ok(cfg)
    }

    fn default_values(&self) -> Vec<f64> {
        vec![10.0, 15.0, 20.0, 25.0, 30.0, 35.0, 40.0]
    }
}

/// Population size `n` at fixed mean degree.
pub struct Population;

impl Named for Population {
    fn name(&self) -> &'static str {
        "population"
    }
}

impl SweepParameter for Population {
    fn apply(&self, base: &SimConfig, value: f64) -> Result<SimConfig> {
        let mut cfg = base.clone();
        cfg.n = as_count("n", value)?;
        Ok(cfg)
    }

    fn default_values(&self) -> Vec<f64> {
        vec![100.0, 200.0, 400.0, 800.0]
    }
}

/// Polarization index of the understandings, with group-aligned polarized confidence.
pub struct PolarizationIndex;

impl Named for PolarizationIndex {
    fn name(&self) -> &'static str {
        "polarization_index"
    }
}

impl SweepParameter for PolarizationIndex {
    fn apply(&self, base: &SimConfig, value: f64) -> Result<SimConfig> {
        let mut cfg = base.clone();
        cfg.polarization_index = value;
        cfg.confidence_mode = "polarized".into();
        Ok(cfg)
    }

    fn default_values(&self) -> Vec<f64> {
        (0..=10).map(|i| f64::from(i) / 10.0).collect()
    }
}

/// Number of positive evidence items `m`.
pub struct EvidenceCount;

impl Named for EvidenceCount {
    fn name(&self) -> &'static str {
        "evidence_count"
    }
}

impl SweepParameter for EvidenceCount {
    fn apply(&self, base: &SimConfig, value: f64) -> Result<SimConfig> {
        let mut cfg = base.clone();
        cfg.m = as_count("m", value)?;
        Ok(cfg)
    }

    fn default_values(&self) -> Vec<f64> {
        vec![2.0, 5.0, 10.0, 20.0]
    }
}

pub fn sweep_registry() -> Registry<dyn SweepParameter> {
    Registry::<dyn SweepParameter>::new("sweep parameter")
        .with(Box::new(Connectivity))
        .with(Box::new(Population))
        .with(Box::new(PolarizationIndex))
        .with(Box::new(EvidenceCount))
}

/// Runs every `(value, c, seed)` combination and returns the results sorted
/// by that triple. Runs execute in parallel; ordering never depends on timing.
pub fn sweep(
    parameter: &str,
    values: &[f64],
    c_levels: &[f64],
    seeds: &[u64],
    base: &SimConfig,
) -> Result<Vec<SweepResult>> {
    let registry = sweep_registry();
    let param = registry.resolve("parameter", parameter)?;
    if values.is_empty() {
        return Err(Error::config("values", "sweep needs at least one value"));
    }
    if c_levels.is_empty() {
        return Err(Error::config(
            "c",
            "sweep needs at least one self-confidence level",
        ));
    }
    if seeds.is_empty() {
        return Err(Error::config("seeds", "sweep needs at least one seed"));
    }

    let mut jobs = Vec::with_capacity(values.len() * c_levels.len() * seeds.len());
    for &value in values {
        for &c in c_levels {
            for &seed in seeds {
                let mut cfg = param.apply(base, value)?;
                cfg.c = c;
                cfg.seed = seed;
                cfg.validate()?;
                jobs.push((value, cfg));
            }
        }
    }
    jobs.sort_by(|(va, a), (vb, b)| {
        va.total_cmp(vb)
            .then(a.c.total_cmp(&b.c))
            .then(a.seed.cmp(&b.seed))
    });

    let name = param.name();
    jobs.par_iter()
        .map(|(value, cfg)| run_config(cfg).map(|run| run.summary(name, *value)))
        .collect()
}
