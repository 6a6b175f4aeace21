//! Named trials, parameter sweeps and run summaries.

pub mod stats;
mod sweep;
mod trial;

pub use stats::{belief_histogram, belief_std};
pub use sweep::{sweep, sweep_registry, SweepParameter};
pub use trial::{run_trial, trial_config, trial_registry, TrialKind};

use serde::Serialize;

use crate::dynamics::{run_simulation, SimInputs, Trajectory};
use crate::graphgen::{network_registry, sinkhorn_normalize, Graph};
use crate::model::{confidence_registry, init_understanding, random_halves, SelfConfidence};
use crate::storage::SimConfig;
use crate::Result;

/// Outcome statistics of one run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepResult {
    pub parameter: String,
    pub value: f64,
    pub c: f64,
    pub seed: u64,
    /// Population std of beliefs at the last step.
    pub final_std: f64,
    pub final_mean: f64,
    /// Pressure averaged over all agents and all steps after the first.
    pub mean_pressure: f64,
    /// Largest pressure of any agent at any step.
    pub max_pressure: f64,
}

/// A finished simulation with everything needed to write it out.
#[derive(Clone, Debug)]
pub struct Run {
    pub config: SimConfig,
    pub graph: Graph,
    /// Camp labels of the agents: the confidence groups when the initializer
    /// uses them, otherwise the network's community labels.
    pub groups: Vec<u8>,
    pub inputs: SimInputs,
    pub trajectory: Trajectory,
}

/// Group labels used for polarized confidence: the network's own communities
/// when it has them, otherwise a random half of the population.
fn agent_groups(graph: &Graph, seed: u64) -> Vec<u8> {
    if graph.groups().contains(&1) {
        graph.groups().to_vec()
    } else {
        random_halves(graph.n(), seed)
    }
}

/// Builds the network, weights and agent state described by `cfg`.
pub fn assemble(cfg: &SimConfig) -> Result<(Graph, Vec<u8>, SimInputs)> {
    cfg.validate()?;
    let graph = network_registry()
        .resolve("network", &cfg.network)?
        .generate(cfg)?;
    let weights = sinkhorn_normalize(
        &graph,
        cfg.add_self_loops,
        cfg.sinkhorn_tol,
        cfg.sinkhorn_max_iter,
    )?;
    let understanding = init_understanding(cfg.n, cfg.m, cfg.polarization_index, cfg.seed)?;
    let init = confidence_registry();
    let init = init.resolve("confidence_mode", &cfg.confidence_mode)?;
    let groups = if init.uses_groups() {
        agent_groups(&graph, cfg.seed)
    } else {
        graph.groups().to_vec()
    };
    let confidence = init.init(cfg, &groups)?;
    let self_confidence = SelfConfidence::uniform(cfg.n, cfg.c)?;
    let inputs = SimInputs {
        weights,
        understanding,
        confidence,
        self_confidence,
    };
    Ok((graph, groups, inputs))
}

pub fn run_config(cfg: &SimConfig) -> Result<Run> {
    let (graph, groups, inputs) = assemble(cfg)?;
    let trajectory = run_simulation(&inputs, cfg.steps)?;
    Ok(Run {
        config: cfg.clone(),
        graph,
        groups,
        inputs,
        trajectory,
    })
}

pub fn summarize(parameter: &str, value: f64, cfg: &SimConfig, traj: &Trajectory) -> SweepResult {
    let last = traj.last();
    let later = &traj.states[1..];
    let count: usize = later.iter().map(|s| s.pressure.len()).sum();
    let total: f64 = later.iter().flat_map(|s| s.pressure.iter()).sum();
    let max_pressure = traj
        .states
        .iter()
        .flat_map(|s| s.pressure.iter().copied())
        .fold(0.0, f64::max);
    SweepResult {
        parameter: parameter.to_string(),
        value,
        c: cfg.c,
        seed: cfg.seed,
        final_std: belief_std(&last.beliefs),
        final_mean: stats::mean(&last.beliefs),
        mean_pressure: if count == 0 {
            0.0
        } else {
            total / count as f64
        },
        max_pressure,
    }
}

impl Run {
    pub fn summary(&self, parameter: &str, value: f64) -> SweepResult {
        summarize(parameter, value, &self.config, &self.trajectory)
    }
}
