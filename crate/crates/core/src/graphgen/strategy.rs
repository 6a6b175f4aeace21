//! Network generators selectable by name.

use super::{generate_er, generate_two_community, Graph};
use crate::registry::{Named, Registry};
use crate::storage::SimConfig;
use crate::{Error, Result};

pub trait NetworkGenerator: Named + Send + Sync {
    /// Checks the config fields this generator reads.
    fn validate(&self, cfg: &SimConfig) -> Result<()>;

    fn generate(&self, cfg: &SimConfig) -> Result<Graph>;
}

/// One Erdős–Rényi graph of mean degree `k`.
pub struct GiantComponent;

impl Named for GiantComponent {
    fn name(&self) -> &'static str {
        "giant"
    }
}

impl NetworkGenerator for GiantComponent {
    fn validate(&self, cfg: &SimConfig) -> Result<()> {
        if !cfg.k.is_finite() || cfg.k < 0.0 || cfg.k >= cfg.n as f64 {
            return Err(Error::config(
                "k",
                format!("must satisfy 0 <= k < n = {}, got {}", cfg.n, cfg.k),
            ));
        }
        Ok(())
    }

    fn generate(&self, cfg: &SimConfig) -> Result<Graph> {
        generate_er(cfg.n, cfg.k, cfg.seed)
    }
}

/// Two equal ER blocks joined by sparse bridges.
pub struct TwoCommunities;

impl Named for TwoCommunities {
    fn name(&self) -> &'static str {
        "communities"
    }
}

impl NetworkGenerator for TwoCommunities {
    fn validate(&self, cfg: &SimConfig) -> Result<()> {
        if !cfg.n.is_multiple_of(2) {
            return Err(Error::config(
                "n",
                format!("two-community networks need an even n, got {}", cfg.n),
            ));
        }
        let half = (cfg.n / 2) as f64;
        if !cfg.k_in.is_finite() || cfg.k_in <= 0.0 || cfg.k_in >= half {
            return Err(Error::config(
                "k_in",
                format!("must satisfy 0 < k_in < n/2 = {half}, got {}", cfg.k_in),
            ));
        }
        if !cfg.k_out.is_finite() || cfg.k_out < 0.0 || cfg.k_out >= cfg.n as f64 {
            return Err(Error::config(
                "k_out",
                format!("must satisfy 0 <= k_out < n = {}, got {}", cfg.n, cfg.k_out),
            ));
        }
        Ok(())
    }

    fn generate(&self, cfg: &SimConfig) -> Result<Graph> {
        generate_two_community(cfg.n, cfg.k_in, cfg.k_out, cfg.seed)
    }
}

pub fn network_registry() -> Registry<dyn NetworkGenerator> {
    Registry::<dyn NetworkGenerator>::new("network")
        .with(Box::new(GiantComponent))
        .with(Box::new(TwoCommunities))
}
