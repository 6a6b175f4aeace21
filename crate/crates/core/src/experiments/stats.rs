//! Distribution statistics over a population.

/// Population standard deviation (divides by `n`); 0 for an empty slice.
pub fn belief_std(values: &[f64]) -> f64 {
    if values.is_empty() {
        return 0.0;
    }
    let mean = mean(values);
    let var = values.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / values.len() as f64;
    var.sqrt()
}

pub fn mean(values: &[f64]) -> f64 {
    if values.is_empty() {
        return 0.0;
    }
    values.iter().sum::<f64>() / values.len() as f64
}

pub fn min_max(values: &[f64]) -> (f64, f64) {
    values
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| {
            (lo.min(x), hi.max(x))
        })
}

/// `bins` equal-width bins over `[0,1]` as `(lower edge, count)`.
///
/// Bins are right-open except the last, which also takes 1.0. Values outside
/// the unit interval are clamped into the end bins so counts always sum to `n`.
pub fn belief_histogram(values: &[f64], bins: usize) -> Vec<(f64, usize)> {
    assert!(bins >= 1, "histogram needs at least one bin");
    let mut counts = vec![0usize; bins];
    for &x in values {
        let idx = ((x * bins as f64).floor().max(0.0) as usize).min(bins - 1);
        counts[idx] += 1;
    }
    counts
        .into_iter()
        .enumerate()
        .map(|(i, c)| (i as f64 / bins as f64, c))
        .collect()
}
