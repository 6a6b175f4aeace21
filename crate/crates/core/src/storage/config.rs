//! Simulation configuration and its JSON form.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::graphgen::network_registry;
use crate::model::confidence_registry;
use crate::{Error, Result};

/// Every model and experiment parameter plus the master seed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimConfig {
    /// Population size.
    pub n: usize,
    /// Number of positive evidence items; the pool has `2m` slots.
    pub m: usize,
    /// Mean degree of the single-component network.
    pub k: f64,
    /// Mean within-community degree of the two-community network.
    pub k_in: f64,
    /// Expected cross-community degree scale of the two-community network.
    pub k_out: f64,
    /// Network generator name (`giant` or `communities`).
    pub network: String,
    /// Probability that an agent's active slot in a pair is the positive one.
    pub polarization_index: f64,
    /// Confidence initializer name (`random` or `polarized`).
    pub confidence_mode: String,
    /// Polarized confidence level on the favoured side.
    pub a: f64,
    /// Self-confidence shared by every agent.
    pub c: f64,
    pub steps: usize,
    pub seed: u64,
    pub add_self_loops: bool,
    pub sinkhorn_tol: f64,
    pub sinkhorn_max_iter: usize,
    /// Also write per-step confidence levels.
    pub record_confidence: bool,
}

impl Default for SimConfig {
    fn default() -> Self {
        SimConfig {
            n: 400,
            m: 5,
            k: 10.0,
            k_in: 10.0,
            k_out: 0.5,
            network: "giant".into(),
            polarization_index: 0.5,
            confidence_mode: "random".into(),
            a: 0.8,
            c: 0.5,
            steps: 40,
            seed: 0,
            add_self_loops: true,
            sinkhorn_tol: 1e-9,
            sinkhorn_max_iter: 1000,
            record_confidence: false,
        }
    }
}

const FIELDS: &[&str] = &[
    "n",
    "m",
    "k",
    "k_in",
    "k_out",
    "network",
    "polarization_index",
    "confidence_mode",
    "a",
    "c",
    "steps",
    "seed",
    "add_self_loops",
    "sinkhorn_tol",
    "sinkhorn_max_iter",
    "record_confidence",
];

fn get_uint(obj: &Map<String, Value>, field: &str, min: u64, slot: &mut usize) -> Result<()> {
    if let Some(v) = obj.get(field) {
        let x = match (v.as_u64(), v.as_i64()) {
            (Some(x), _) => x,
            (None, Some(neg)) => {
                return Err(Error::config(field, format!("must be >= {min}, got {neg}")))
            }
            _ => {
                return Err(Error::config(
                    field,
                    format!("expected an integer, got {v}"),
                ))
            }
        };
        if x < min {
            return Err(Error::config(field, format!("must be >= {min}, got {x}")));
        }
        *slot = usize::try_from(x).map_err(|_| Error::config(field, "too large"))?;
    }
    Ok(())
}

fn get_f64(obj: &Map<String, Value>, field: &str, slot: &mut f64) -> Result<()> {
    if let Some(v) = obj.get(field) {
        *slot = v
            .as_f64()
            .ok_or_else(|| Error::config(field, format!("expected a number, got {v}")))?;
    }
    Ok(())
}

fn get_str(obj: &Map<String, Value>, field: &str, slot: &mut String) -> Result<()> {
    if let Some(v) = obj.get(field) {
        *slot = v
            .as_str()
            .ok_or_else(|| Error::config(field, format!("expected a string, got {v}")))?
            .to_string();
    }
    Ok(())
}

fn get_bool(obj: &Map<String, Value>, field: &str, slot: &mut bool) -> Result<()> {
    if let Some(v) = obj.get(field) {
        *slot = v
            .as_bool()
            .ok_or_else(|| Error::config(field, format!("expected true or false, got {v}")))?;
    }
    Ok(())
}

/// Parses a JSON config document, filling defaults and validating ranges.
pub fn parse_config(text: &str) -> Result<SimConfig> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::config("<root>", "config must be a JSON object"))?;
    if let Some(unknown) = obj.keys().find(|k| !FIELDS.contains(&k.as_str())) {
        return Err(Error::config(unknown.as_str(), "unknown field"));
    }

    let mut cfg = SimConfig::default();
    get_uint(obj, "n", 1, &mut cfg.n)?;
    get_uint(obj, "m", 1, &mut cfg.m)?;
    get_f64(obj, "k", &mut cfg.k)?;
    get_f64(obj, "k_in", &mut cfg.k_in)?;
    get_f64(obj, "k_out", &mut cfg.k_out)?;
    get_str(obj, "network", &mut cfg.network)?;
    get_f64(obj, "polarization_index", &mut cfg.polarization_index)?;
    get_str(obj, "confidence_mode", &mut cfg.confidence_mode)?;
    get_f64(obj, "a", &mut cfg.a)?;
    get_f64(obj, "c", &mut cfg.c)?;
    get_uint(obj, "steps", 1, &mut cfg.steps)?;
    if let Some(v) = obj.get("seed") {
        cfg.seed = v.as_u64().ok_or_else(|| {
            Error::config(
                "seed",
                format!("expected an unsigned 64-bit integer, got {v}"),
            )
        })?;
    }
    get_bool(obj, "add_self_loops", &mut cfg.add_self_loops)?;
    get_f64(obj, "sinkhorn_tol", &mut cfg.sinkhorn_tol)?;
    get_uint(obj, "sinkhorn_max_iter", 1, &mut cfg.sinkhorn_max_iter)?;
    get_bool(obj, "record_confidence", &mut cfg.record_confidence)?;
    cfg.validate()?;
    Ok(cfg)
}

fn unit_interval(field: &str, x: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::config(field, format!("must lie in [0, 1], got {x}")));
    }
    Ok(())
}

impl SimConfig {
    /// Checks every range and cross-field constraint.
    pub fn validate(&self) -> Result<()> {
        if self.n < 1 {
            return Err(Error::config("n", "must be >= 1"));
        }
        if self.m < 1 {
            return Err(Error::config("m", "must be >= 1"));
        }
        if self.steps < 1 {
            return Err(Error::config("steps", "must be >= 1"));
        }
        unit_interval("polarization_index", self.polarization_index)?;
        unit_interval("a", self.a)?;
        unit_interval("c", self.c)?;
        if !self.sinkhorn_tol.is_finite() || self.sinkhorn_tol <= 0.0 {
            return Err(Error::config(
                "sinkhorn_tol",
                format!("must be > 0, got {}", self.sinkhorn_tol),
            ));
        }
        if self.sinkhorn_max_iter < 1 {
            return Err(Error::config("sinkhorn_max_iter", "must be >= 1"));
        }
        confidence_registry().resolve("confidence_mode", &self.confidence_mode)?;
        network_registry()
            .resolve("network", &self.network)?
            .validate(self)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }
}
