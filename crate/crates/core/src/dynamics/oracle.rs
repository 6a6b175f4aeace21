#![allow(clippy::needless_range_loop)]

//! Dense reference stepper.
//!
//! Deliberately naive: full `n x n` weights, explicit per-pair branches and
//! no shared helpers with the main engine, so the two can be checked against
//! each other on small instances.

use super::SimState;
use crate::graphgen::WeightMatrix;
use crate::model::{ConfidenceMatrix, SelfConfidence, UnderstandingMatrix};
use crate::Result;

/// One full step (evidence then beliefs) computed densely.
pub fn oracle_step(
    state: &SimState,
    weights: &WeightMatrix,
    understanding: &UnderstandingMatrix,
    self_confidence: &SelfConfidence,
) -> Result<SimState> {
    let n = weights.n();
    let w = weights.to_dense();
    let m = understanding.pool().pairs();
    let u: Vec<Vec<f64>> = (0..n).map(|p| understanding.row(p).to_vec()).collect();
    let b: Vec<Vec<f64>> = (0..n).map(|p| state.confidence.row(p).to_vec()).collect();

    let mut next_b = b.clone();
    for p in 0..n {
        for j in 0..m {
            let pos = j;
            let neg = j + m;
            if u[p][pos] == 0.0 && u[p][neg] == 0.0 {
                continue;
            }
            let mut keep = 1.0;
            let mut pos_total = 0.0;
            let mut neg_total = 0.0;
            for i in 0..n {
                if i == p || w[i][p] == 0.0 {
                    continue;
                }
                if u[i][pos] != 0.0 {
                    pos_total += w[i][p] * b[i][pos];
                    neg_total += w[i][p] * (1.0 - b[i][pos]);
                    keep -= w[i][p];
                } else if u[i][neg] != 0.0 {
                    pos_total += w[i][p] * (1.0 - b[i][neg]);
                    neg_total += w[i][p] * b[i][neg];
                    keep -= w[i][p];
                }
            }
            // rounding in `keep` can push a value a few ulps past the unit interval
            next_b[p][pos] = (keep * b[p][pos] + pos_total).clamp(0.0, 1.0);
            next_b[p][neg] = (keep * b[p][neg] + neg_total).clamp(0.0, 1.0);
        }
    }

    let mut s = vec![0.0; n];
    let mut x = vec![0.0; n];
    let mut pressure = vec![0.0; n];
    for p in 0..n {
        for i in 0..2 * m {
            s[p] += next_b[p][i] * u[p][i];
        }
        let mut social = 0.0;
        for k in 0..n {
            social += w[k][p] * state.beliefs[k];
        }
        let c = self_confidence.get(p);
        x[p] = c * s[p] + (1.0 - c) * social;
        pressure[p] = (x[p] - s[p]).abs();
    }

    Ok(SimState {
        step: state.step + 1,
        confidence: ConfidenceMatrix::from_rows(m, &next_b)?,
        beliefs: x,
        self_reasoning: s,
        pressure,
    })
}
