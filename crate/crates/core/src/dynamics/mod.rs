//! Synchronous belief and evidence dynamics.
//!
//! One step first diffuses evidence confidence over the network
//! ([`step_evidence`]), then recomputes self-reasoning from the new
//! confidence and mixes it with the neighbours' previous beliefs
//! ([`step_beliefs`]). Every agent reads the same pre-step snapshot.

mod oracle;

pub use oracle::oracle_step;

use crate::graphgen::WeightMatrix;
use crate::model::{self_reasoning, ConfidenceMatrix, SelfConfidence, UnderstandingMatrix};
use crate::{Error, Result};

/// Snapshot of the population after `step` updates.
#[derive(Clone, Debug, PartialEq)]
pub struct SimState {
    pub step: usize,
    pub confidence: ConfidenceMatrix,
    pub beliefs: Vec<f64>,
    pub self_reasoning: Vec<f64>,
    /// `|belief - self_reasoning|` per agent.
    pub pressure: Vec<f64>,
}

impl SimState {
    pub fn n(&self) -> usize {
        self.beliefs.len()
    }
}

/// Everything a run needs besides the step count.
#[derive(Clone, Debug)]
pub struct SimInputs {
    pub weights: WeightMatrix,
    pub understanding: UnderstandingMatrix,
    pub confidence: ConfidenceMatrix,
    pub self_confidence: SelfConfidence,
}

/// States `0..=steps` of one run.
#[derive(Clone, Debug, PartialEq)]
pub struct Trajectory {
    pub states: Vec<SimState>,
}

impl Trajectory {
    pub fn initial(&self) -> &SimState {
        &self.states[0]
    }

    pub fn last(&self) -> &SimState {
        self.states
            .last()
            .expect("trajectory holds at least the initial state")
    }

    pub fn steps(&self) -> usize {
        self.states.len() - 1
    }

    pub fn n(&self) -> usize {
        self.initial().n()
    }
}

fn check_dims(
    weights: &WeightMatrix,
    understanding: &UnderstandingMatrix,
    confidence: &ConfidenceMatrix,
) -> Result<()> {
    let n = weights.n();
    if understanding.n() != n || confidence.n() != n {
        return Err(Error::Dimension(format!(
            "weights cover {n} agents, understanding {}, confidence {}",
            understanding.n(),
            confidence.n()
        )));
    }
    if understanding.pool() != confidence.pool() {
        return Err(Error::Dimension(format!(
            "understanding has {} slots, confidence {}",
            understanding.pool().slots(),
            confidence.pool().slots()
        )));
    }
    Ok(())
}

fn unit(x: f64) -> f64 {
    x.clamp(0.0, 1.0)
}

fn self_reasoning_all(
    confidence: &ConfidenceMatrix,
    understanding: &UnderstandingMatrix,
) -> Result<Vec<f64>> {
    (0..confidence.n())
        .map(|p| self_reasoning(confidence.row(p), understanding.row(p)).map(unit))
        .collect()
}

/// Step 0: beliefs equal self-reasoning, so pressure starts at exactly 0.
pub fn initial_state(
    weights: &WeightMatrix,
    understanding: &UnderstandingMatrix,
    confidence: &ConfidenceMatrix,
    self_confidence: &SelfConfidence,
) -> Result<SimState> {
    check_dims(weights, understanding, confidence)?;
    if self_confidence.len() != weights.n() {
        return Err(Error::Dimension(format!(
            "{} self-confidence values for {} agents",
            self_confidence.len(),
            weights.n()
        )));
    }
    let s = self_reasoning_all(confidence, understanding)?;
    Ok(SimState {
        step: 0,
        confidence: confidence.clone(),
        beliefs: s.clone(),
        pressure: vec![0.0; s.len()],
        self_reasoning: s,
    })
}

/// One synchronous round of evidence propagation.
///
/// For each receiver and each opposite pair `(k, l = k + m)` with at least one
/// active member at the receiver, every neighbour sends the member it holds
/// active. A neighbour active on `k` contributes `b_k(i)` to slot `k` and
/// `1 - b_k(i)` to slot `l`; one active on `l` contributes `b_l(i)` to `l` and
/// `1 - b_l(i)` to `k`. The receiver keeps weight `1 - sum(w_ip)` on its own
/// values. Neighbours with no active member in the pair send nothing.
pub fn step_evidence(
    state: &SimState,
    weights: &WeightMatrix,
    understanding: &UnderstandingMatrix,
) -> Result<ConfidenceMatrix> {
    let b = &state.confidence;
    check_dims(weights, understanding, b)?;
    let pool = b.pool();
    let m = pool.pairs();
    let n = b.n();
    let mut out = b.as_slice().to_vec();

    for p in 0..n {
        let neighbors: Vec<(usize, f64)> = weights.neighbors(p).collect();
        let row = &mut out[p * pool.slots()..(p + 1) * pool.slots()];
        for j in 0..m {
            if understanding.active_slot(p, j).is_none() {
                continue;
            }
            let (k, l) = (j, j + m);
            let (mut in_k, mut in_l, mut sent) = (0.0, 0.0, 0.0);
            for &(i, w) in &neighbors {
                let (vk, vl) = match understanding.active_slot(i, j) {
                    Some(s) if s == k => {
                        let x = b.get(i, k);
                        (x, 1.0 - x)
                    }
                    Some(_) => {
                        let x = b.get(i, l);
                        (1.0 - x, x)
                    }
                    None => continue,
                };
                in_k += w * vk;
                in_l += w * vl;
                sent += w;
            }
            let kept = 1.0 - sent;
            row[k] = unit(kept * b.get(p, k) + in_k);
            row[l] = unit(kept * b.get(p, l) + in_l);
        }
    }
    Ok(ConfidenceMatrix::from_flat(pool, n, out))
}

/// Beliefs, self-reasoning and pressure after a step.
///
/// Self-reasoning uses `new_confidence`; the social term uses the previous
/// beliefs, including the self-loop weight when present.
pub fn step_beliefs(
    state: &SimState,
    new_confidence: &ConfidenceMatrix,
    weights: &WeightMatrix,
    understanding: &UnderstandingMatrix,
    self_confidence: &SelfConfidence,
) -> Result<(Vec<f64>, Vec<f64>, Vec<f64>)> {
    check_dims(weights, understanding, new_confidence)?;
    let n = weights.n();
    if state.n() != n || self_confidence.len() != n {
        return Err(Error::Dimension(format!(
            "state has {} agents, self-confidence {}, weights {n}",
            state.n(),
            self_confidence.len()
        )));
    }
    let s = self_reasoning_all(new_confidence, understanding)?;
    let mut beliefs = Vec::with_capacity(n);
    let mut pressure = Vec::with_capacity(n);
    for (p, &sp) in s.iter().enumerate() {
        let c = self_confidence.get(p);
        let norm: f64 = weights
            .row(p)
            .iter()
            .map(|&(k, w)| w * state.beliefs[k])
            .sum();
        let x = unit(c * sp + (1.0 - c) * norm);
        beliefs.push(x);
        pressure.push((x - sp).abs());
    }
    Ok((beliefs, s, pressure))
}

/// [`step_evidence`] followed by [`step_beliefs`].
pub fn step(state: &SimState, inputs: &SimInputs) -> Result<SimState> {
    let confidence = step_evidence(state, &inputs.weights, &inputs.understanding)?;
    let (beliefs, self_reasoning, pressure) = step_beliefs(
        state,
        &confidence,
        &inputs.weights,
        &inputs.understanding,
        &inputs.self_confidence,
    )?;
    Ok(SimState {
        step: state.step + 1,
        confidence,
        beliefs,
        self_reasoning,
        pressure,
    })
}

pub fn run_simulation(inputs: &SimInputs, steps: usize) -> Result<Trajectory> {
    if steps == 0 {
        return Err(Error::config("steps", "must be >= 1"));
    }
    let mut states = Vec::with_capacity(steps + 1);
    states.push(initial_state(
        &inputs.weights,
        &inputs.understanding,
        &inputs.confidence,
        &inputs.self_confidence,
    )?);
    for _ in 0..steps {
        let next = step(states.last().unwrap(), inputs)?;
        states.push(next);
    }
    Ok(Trajectory { states })
}
