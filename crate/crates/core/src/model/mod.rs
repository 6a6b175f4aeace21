//! Agent state: evidence pool layout, structures of understanding,
//! confidence levels and self-confidence.

mod confidence;

pub use confidence::{
    confidence_registry, ConfidenceInitializer, PolarizedConfidence, RandomConfidence,
};

use rand::distributions::Open01;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::rng;
use crate::{Error, Result};

/// Layout of the evidence pool: slots `[0, m)` are positive evidence, slot
/// `j + m` is the negation of slot `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EvidencePool {
    m: usize,
}

impl EvidencePool {
    pub fn new(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::config("m", "must be >= 1"));
        }
        Ok(EvidencePool { m })
    }

    pub fn pairs(&self) -> usize {
        self.m
    }

    pub fn slots(&self) -> usize {
        2 * self.m
    }

    /// The opposite member of `slot`.
    pub fn opposite(&self, slot: usize) -> usize {
        if slot < self.m {
            slot + self.m
        } else {
            slot - self.m
        }
    }

    pub fn is_positive(&self, slot: usize) -> bool {
        slot < self.m
    }
}

/// Per-agent weights `u_i(p)` over the `2m` evidence slots.
///
/// Each row lies in `[0,1]`, sums to 1 within `1e-12` and has at most one
/// nonzero entry per opposite pair. The initializers always pick exactly one.
#[derive(Clone, Debug, PartialEq)]
pub struct UnderstandingMatrix {
    pool: EvidencePool,
    n: usize,
    values: Vec<f64>,
}

impl UnderstandingMatrix {
    pub fn from_rows(m: usize, rows: &[Vec<f64>]) -> Result<Self> {
        let pool = EvidencePool::new(m)?;
        let width = pool.slots();
        let mut values = Vec::with_capacity(rows.len() * width);
        for (p, row) in rows.iter().enumerate() {
            if row.len() != width {
                return Err(Error::Dimension(format!(
                    "understanding row {p} has {} slots, expected {width}",
                    row.len()
                )));
            }
            if row.iter().any(|&u| !(0.0..=1.0).contains(&u)) {
                return Err(Error::Dimension(format!(
                    "understanding row {p} has weights outside [0,1]"
                )));
            }
            let sum: f64 = row.iter().sum();
            if (sum - 1.0).abs() > 1e-12 {
                return Err(Error::Dimension(format!(
                    "understanding row {p} sums to {sum}"
                )));
            }
            if (0..m).any(|j| row[j] != 0.0 && row[j + m] != 0.0) {
                return Err(Error::Dimension(format!(
                    "understanding row {p} activates both members of a pair"
                )));
            }
            values.extend_from_slice(row);
        }
        Ok(UnderstandingMatrix {
            pool,
            n: rows.len(),
            values,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pool(&self) -> EvidencePool {
        self.pool
    }

    pub fn row(&self, p: usize) -> &[f64] {
        let w = self.pool.slots();
        &self.values[p * w..(p + 1) * w]
    }

    pub fn get(&self, p: usize, slot: usize) -> f64 {
        self.row(p)[slot]
    }

    /// The slot of pair `j` that agent `p` holds active, if any.
    pub fn active_slot(&self, p: usize, pair: usize) -> Option<usize> {
        let row = self.row(p);
        if row[pair] != 0.0 {
            Some(pair)
        } else if row[pair + self.pool.m] != 0.0 {
            Some(pair + self.pool.m)
        } else {
            None
        }
    }
}

/// Per-agent confidence `b_i(p)` in `[0,1]` for each evidence slot.
#[derive(Clone, Debug, PartialEq)]
pub struct ConfidenceMatrix {
    pool: EvidencePool,
    n: usize,
    values: Vec<f64>,
}

impl ConfidenceMatrix {
    pub fn from_rows(m: usize, rows: &[Vec<f64>]) -> Result<Self> {
        let pool = EvidencePool::new(m)?;
        let mut values = Vec::with_capacity(rows.len() * pool.slots());
        for (p, row) in rows.iter().enumerate() {
            if row.len() != pool.slots() {
                return Err(Error::Dimension(format!(
                    "confidence row {p} has {} slots, expected {}",
                    row.len(),
                    pool.slots()
                )));
            }
            if row.iter().any(|&b| !(0.0..=1.0).contains(&b)) {
                return Err(Error::Dimension(format!(
                    "confidence row {p} has entries outside [0,1]"
                )));
            }
            values.extend_from_slice(row);
        }
        Ok(ConfidenceMatrix {
            pool,
            n: rows.len(),
            values,
        })
    }

    pub(crate) fn from_flat(pool: EvidencePool, n: usize, values: Vec<f64>) -> Self {
        debug_assert_eq!(values.len(), n * pool.slots());
        ConfidenceMatrix { pool, n, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pool(&self) -> EvidencePool {
        self.pool
    }

    pub fn row(&self, p: usize) -> &[f64] {
        let w = self.pool.slots();
        &self.values[p * w..(p + 1) * w]
    }

    pub fn get(&self, p: usize, slot: usize) -> f64 {
        self.row(p)[slot]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.values
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.values.chunks(self.pool.slots())
    }
}

/// Self-confidence `c(p)` per agent.
#[derive(Clone, Debug, PartialEq)]
pub struct SelfConfidence(Vec<f64>);

impl SelfConfidence {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.iter().any(|c| !(0.0..=1.0).contains(c)) {
            return Err(Error::config("c", "self-confidence must lie in [0, 1]"));
        }
        Ok(SelfConfidence(values))
    }

    /// The same `c` for all `n` agents.
    pub fn uniform(n: usize, c: f64) -> Result<Self> {
        Self::new(vec![c; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, p: usize) -> f64 {
        self.0[p]
    }
}

fn check_dims(n: usize, m: usize) -> Result<EvidencePool> {
    if n == 0 {
        return Err(Error::config("n", "must be >= 1"));
    }
    EvidencePool::new(m)
}

/// Random structures of understanding.
///
/// For every agent and pair, the positive slot is made active with
/// probability `polarization_index` (otherwise its negation), the active slot
/// gets a uniform `(0,1)` weight, and the row is normalised to sum 1.
pub fn init_understanding(
    n: usize,
    m: usize,
    polarization_index: f64,
    seed: u64,
) -> Result<UnderstandingMatrix> {
    let pool = check_dims(n, m)?;
    if !(0.0..=1.0).contains(&polarization_index) {
        return Err(Error::config(
            "polarization_index",
            format!("must lie in [0, 1], got {polarization_index}"),
        ));
    }
    let mut rng = rng::stream(seed, rng::UNDERSTANDING);
    let mut values = vec![0.0; n * pool.slots()];
    for row in values.chunks_mut(pool.slots()) {
        for j in 0..m {
            let slot = if rng.gen_bool(polarization_index) {
                j
            } else {
                j + m
            };
            row[slot] = rng.sample::<f64, _>(Open01);
        }
        let total: f64 = row.iter().sum();
        for u in row.iter_mut() {
            *u /= total;
        }
    }
    Ok(UnderstandingMatrix { pool, n, values })
}

/// Independent uniform `[0,1)` confidence for every slot.
pub fn init_confidence_random(n: usize, m: usize, seed: u64) -> Result<ConfidenceMatrix> {
    let pool = check_dims(n, m)?;
    let mut rng = rng::stream(seed, rng::CONFIDENCE);
    let values = (0..n * pool.slots()).map(|_| rng.gen::<f64>()).collect();
    Ok(ConfidenceMatrix { pool, n, values })
}

/// Group 1 gets `a` on positive slots and `1 - a` on negations; group 0 the reverse.
pub fn init_confidence_polarized(
    n: usize,
    m: usize,
    a: f64,
    groups: &[u8],
) -> Result<ConfidenceMatrix> {
    let pool = check_dims(n, m)?;
    if !(0.0..=1.0).contains(&a) {
        return Err(Error::config("a", format!("must lie in [0, 1], got {a}")));
    }
    if groups.len() != n || groups.iter().any(|&g| g > 1) {
        return Err(Error::Dimension(format!(
            "expected {n} group labels in {{0,1}}"
        )));
    }
    let mut values = Vec::with_capacity(n * pool.slots());
    for &g in groups {
        let (pos, neg) = if g == 1 { (a, 1.0 - a) } else { (1.0 - a, a) };
        values.extend(std::iter::repeat_n(pos, m));
        values.extend(std::iter::repeat_n(neg, m));
    }
    Ok(ConfidenceMatrix { pool, n, values })
}

/// Labels `n / 2` randomly chosen agents with group 1, the rest with group 0.
pub fn random_halves(n: usize, seed: u64) -> Vec<u8> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng::stream(seed, rng::GROUPS));
    let mut groups = vec![0; n];
    for &p in &order[..n / 2] {
        groups[p] = 1;
    }
    groups
}

/// `sum_i b_i u_i`, the belief an agent would hold without social influence.
pub fn self_reasoning(b_row: &[f64], u_row: &[f64]) -> Result<f64> {
    if b_row.len() != u_row.len() {
        return Err(Error::Dimension(format!(
            "confidence row has {} slots, understanding row {}",
            b_row.len(),
            u_row.len()
        )));
    }
    Ok(b_row.iter().zip(u_row).map(|(b, u)| b * u).sum())
}
