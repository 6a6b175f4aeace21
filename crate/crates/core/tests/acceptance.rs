//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::fs;
use std::process::Command;
use std::time::Instant;

use beliefnet::dynamics::{oracle_step, run_simulation, step, SimInputs, SimState, Trajectory};
use beliefnet::experiments::{
    belief_std, run_config, run_trial, stats, sweep, trial_config, Run, SweepResult,
};
use beliefnet::graphgen::{
    generate_er, generate_two_community, is_connected, sinkhorn_normalize, Graph, WeightMatrix,
};
use beliefnet::model::{init_confidence_random, init_understanding, SelfConfidence};
use beliefnet::storage::SimConfig;
use beliefnet::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEEDS: std::ops::Range<u64> = 0..10;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn seed_mean(rows: &[&SweepResult], f: impl Fn(&SweepResult) -> f64) -> f64 {
    rows.iter().map(|r| f(r)).sum::<f64>() / rows.len() as f64
}

fn trial_runs(kind: &str) -> Vec<Run> {
    SEEDS
        .map(|seed| {
            let base = SimConfig {
                seed,
                ..SimConfig::default()
            };
            run_trial(kind, &base).unwrap().0
        })
        .collect()
}

fn max_pressure_after(traj: &Trajectory, step: usize) -> f64 {
    traj.states[step + 1..]
        .iter()
        .flat_map(|s| s.pressure.iter().copied())
        .fold(0.0, f64::max)
}

fn c1_random_init() -> Outcome {
    let start = Instant::now();
    let runs = trial_runs("random_giant");
    let elapsed = start.elapsed().as_secs_f64();
    let stds: Vec<f64> = runs
        .iter()
        .map(|r| belief_std(&r.trajectory.last().beliefs))
        .collect();
    let mean_std = stats::mean(&stds);
    let widest = runs
        .iter()
        .map(|r| {
            let (lo, hi) = stats::min_max(&r.trajectory.last().beliefs);
            hi - lo
        })
        .fold(0.0, f64::max);
    let late_pressure = runs
        .iter()
        .map(|r| max_pressure_after(&r.trajectory, 5))
        .fold(0.0, f64::max);
    let pass = mean_std <= 0.01 && widest <= 0.05 && late_pressure <= 0.02 && elapsed <= 5.0;
    outcome(
        pass,
        format!(
            "seed-mean final std {mean_std:.5} (<= 0.01), widest final range {widest:.4} (<= 0.05), \
             max pressure after step 5 {late_pressure:.4} (<= 0.02), {elapsed:.2}s (<= 5s)"
        ),
    )
}

fn c2_degroot_reduction() -> Outcome {
    let mut cfg = SimConfig {
        c: 0.0,
        ..SimConfig::default()
    };
    let seed = (0..)
        .find(|&s| is_connected(&generate_er(cfg.n, cfg.k, s).unwrap()))
        .unwrap();
    cfg.seed = seed;
    let run = run_config(&trial_config("random_giant", &cfg).unwrap()).unwrap();
    let mean0 = stats::mean(&run.trajectory.initial().beliefs);
    let last = &run.trajectory.last().beliefs;
    let std = belief_std(last);
    let consensus = stats::mean(last);
    let dev = (consensus - mean0).abs();
    let (lo, hi) = stats::min_max(last);
    outcome(
        std < 1e-6 && dev <= 1e-6,
        format!(
            "seed {seed}: final std {std:.2e} (< 1e-6), |consensus - mean(X0)| {dev:.2e} (<= 1e-6), \
             final spread {:.2e}",
            hi - lo
        ),
    )
}

fn c3_full_self_confidence() -> Outcome {
    let mut worst_gap = 0.0_f64;
    let mut worst_pressure = 0.0_f64;
    for kind in ["random_giant", "polarized_communities", "polarized_giant"] {
        for seed in 0..3 {
            let base = SimConfig {
                c: 1.0,
                seed,
                ..SimConfig::default()
            };
            let (run, _) = run_trial(kind, &base).unwrap();
            for st in &run.trajectory.states {
                for p in 0..st.n() {
                    worst_gap = worst_gap.max((st.beliefs[p] - st.self_reasoning[p]).abs());
                    worst_pressure = worst_pressure.max(st.pressure[p]);
                }
            }
        }
    }
    outcome(
        worst_gap == 0.0 && worst_pressure == 0.0,
        format!("max |X - S| = {worst_gap:e}, max pressure = {worst_pressure:e} (both exactly 0)"),
    )
}

fn c4_pressure_at_origin() -> Outcome {
    let mut configs = 0;
    let mut worst = 0.0_f64;
    for kind in ["random_giant", "polarized_communities", "polarized_giant"] {
        for (n, m, c) in [(400, 5, 0.5), (100, 2, 0.0), (60, 10, 1.0), (200, 3, 0.25)] {
            let base = SimConfig {
                n,
                m,
                c,
                seed: configs,
                steps: 1,
                ..SimConfig::default()
            };
            let (run, _) = run_trial(kind, &base).unwrap();
            worst = worst.max(
                run.trajectory
                    .initial()
                    .pressure
                    .iter()
                    .copied()
                    .fold(0.0, f64::max),
            );
            configs += 1;
        }
    }
    outcome(
        worst == 0.0,
        format!("{configs} configurations, max step-0 pressure {worst:e}"),
    )
}

fn c5_complement_pairs() -> Outcome {
    let mut worst = 0.0_f64;
    for kind in ["polarized_communities", "polarized_giant"] {
        for run in trial_runs(kind).iter().take(3) {
            let m = run.config.m;
            for st in &run.trajectory.states {
                for row in st.confidence.rows() {
                    for j in 0..m {
                        worst = worst.max((row[j] + row[j + m] - 1.0).abs());
                    }
                }
            }
        }
    }
    outcome(
        worst <= 1e-12,
        format!("max |b_j + b_(j+m) - 1| over 40 steps = {worst:.2e} (<= 1e-12)"),
    )
}

fn c6_doubly_stochastic() -> Outcome {
    let mut worst = 0.0_f64;
    let mut symmetric = true;
    let mut count = 0;
    let mut check = |w: &WeightMatrix| {
        worst = worst.max(w.stochastic_residual());
        for i in 0..w.n() {
            for &(j, x) in w.row(i) {
                symmetric &= w.get(j, i) == x;
            }
        }
        count += 1;
    };
    for seed in 0..10 {
        for k in [2.0, 4.0, 10.0, 20.0, 40.0] {
            for n in [100, 400, 800] {
                check(
                    &sinkhorn_normalize(&generate_er(n, k, seed).unwrap(), true, 1e-9, 1000)
                        .unwrap(),
                );
            }
        }
        check(
            &sinkhorn_normalize(
                &generate_two_community(400, 10.0, 0.5, seed).unwrap(),
                true,
                1e-9,
                1000,
            )
            .unwrap(),
        );
    }
    let path = Graph::from_edges(3, [(0, 1), (1, 2)], None).unwrap();
    let path_err = matches!(
        sinkhorn_normalize(&path, false, 1e-9, 1000),
        Err(Error::NotScalable { .. })
    );
    outcome(
        worst <= 1e-9 && symmetric && path_err,
        format!(
            "{count} networks, max |sum - 1| {worst:.2e} (<= 1e-9), symmetric: {symmetric}, \
             path without self-loops rejected: {path_err}"
        ),
    )
}

fn c7_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst = 0.0_f64;
    for _ in 0..100 {
        let n = rng.gen_range(1..=6);
        let m = rng.gen_range(1..=3);
        let seed: u64 = rng.gen();
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen_bool(0.5) {
                    edges.push((a, b));
                }
            }
        }
        let g = Graph::from_edges(n, edges, None).unwrap();
        let inputs = SimInputs {
            weights: sinkhorn_normalize(&g, true, 1e-12, 100_000).unwrap(),
            understanding: init_understanding(n, m, rng.gen(), seed).unwrap(),
            confidence: init_confidence_random(n, m, seed).unwrap(),
            self_confidence: SelfConfidence::new((0..n).map(|_| rng.gen()).collect()).unwrap(),
        };
        let traj = run_simulation(&inputs, 10).unwrap();
        for state in &traj.states[..10] {
            let fast = step(state, &inputs).unwrap();
            let slow = oracle_step(
                state,
                &inputs.weights,
                &inputs.understanding,
                &inputs.self_confidence,
            )
            .unwrap();
            worst = worst.max(deviation(&fast, &slow));
        }
    }
    outcome(
        worst <= 1e-12,
        format!("100 instances x 10 steps, max deviation {worst:.2e} (<= 1e-12)"),
    )
}

fn deviation(a: &SimState, b: &SimState) -> f64 {
    a.beliefs
        .iter()
        .zip(&b.beliefs)
        .chain(a.self_reasoning.iter().zip(&b.self_reasoning))
        .chain(a.pressure.iter().zip(&b.pressure))
        .chain(a.confidence.as_slice().iter().zip(b.confidence.as_slice()))
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

fn c8_polarized_comparison() -> Outcome {
    let giant: Vec<SweepResult> = trial_runs("polarized_giant")
        .iter()
        .map(|r| r.summary("trial", 0.0))
        .collect();
    let comm: Vec<SweepResult> = trial_runs("polarized_communities")
        .iter()
        .map(|r| r.summary("trial", 0.0))
        .collect();
    let g: Vec<&SweepResult> = giant.iter().collect();
    let c: Vec<&SweepResult> = comm.iter().collect();
    let (g_std, c_std) = (
        seed_mean(&g, |r| r.final_std),
        seed_mean(&c, |r| r.final_std),
    );
    let (g_p, c_p) = (
        seed_mean(&g, |r| r.mean_pressure),
        seed_mean(&c, |r| r.mean_pressure),
    );
    let max_p: Vec<f64> = giant.iter().chain(&comm).map(|r| r.max_pressure).collect();
    let (lo, hi) = stats::min_max(&max_p);
    let std_ok = g_std < c_std;
    let pressure_ok = g_p > c_p;
    let range_ok = lo >= 0.05 && hi <= 0.3;
    outcome(
        std_ok && pressure_ok && range_ok,
        format!(
            "final std giant {g_std:.5} < communities {c_std:.5}: {std_ok}; \
             mean pressure giant {g_p:.5} > communities {c_p:.5}: {pressure_ok}; \
             max pressure range [{lo:.3}, {hi:.3}] within [0.05, 0.3]: {range_ok}"
        ),
    )
}

fn averaged(rows: &[SweepResult], value: f64, c: f64) -> f64 {
    let sel: Vec<&SweepResult> = rows
        .iter()
        .filter(|r| r.value == value && r.c == c)
        .collect();
    assert!(!sel.is_empty());
    seed_mean(&sel, |r| r.final_std)
}

fn c9_sweeps() -> Outcome {
    let start = Instant::now();
    let seeds: Vec<u64> = SEEDS.collect();
    let base = SimConfig::default();
    let c_levels = [0.0, 0.25, 0.5, 0.75, 1.0];
    let mut notes = Vec::new();
    let mut pass = true;

    let pop = [100.0, 200.0, 400.0, 800.0];
    let rows = sweep("population", &pop, &c_levels, &seeds, &base).unwrap();
    let by_c: Vec<f64> = c_levels
        .iter()
        .map(|&c| averaged(&rows, 400.0, c))
        .collect();
    let c_ok = by_c.windows(2).all(|w| w[0] <= w[1]);
    let by_n: Vec<f64> = pop.iter().map(|&n| averaged(&rows, n, 0.5)).collect();
    let n_ok = by_n.windows(2).all(|w| w[0] > w[1]);
    pass &= c_ok && n_ok;
    notes.push(format!("std over c {by_c:.4?} nondecreasing: {c_ok}"));
    notes.push(format!("std over n {by_n:.4?} decreasing: {n_ok}"));

    let ks = [10.0, 15.0, 20.0, 25.0, 30.0, 35.0, 40.0];
    let rows = sweep("connectivity", &ks, &[0.5], &seeds, &base).unwrap();
    let by_k: Vec<f64> = ks.iter().map(|&k| averaged(&rows, k, 0.5)).collect();
    let mean_k = stats::mean(&by_k);
    let (lo, hi) = stats::min_max(&by_k);
    let rel = (hi - lo) / mean_k;
    let k_ok = rel < 0.30;
    pass &= k_ok;
    notes.push(format!(
        "relative std variation over k = {rel:.3} (< 0.30): {k_ok}"
    ));

    let ms = [2.0, 5.0, 10.0, 20.0];
    let rows = sweep("evidence_count", &ms, &[0.5], &seeds, &base).unwrap();
    let by_m: Vec<f64> = ms.iter().map(|&m| averaged(&rows, m, 0.5)).collect();
    let m_ok = by_m.windows(2).all(|w| w[0] >= w[1]);
    pass &= m_ok;
    notes.push(format!("std over m {by_m:.4?} nonincreasing: {m_ok}"));

    let elapsed = start.elapsed().as_secs_f64();
    let time_ok = elapsed <= 300.0;
    pass &= time_ok;
    notes.push(format!("{elapsed:.1}s (<= 300s)"));
    outcome(pass, notes.join("; "))
}

fn c10_determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for attempt in ["a", "b"] {
        let out = dir.path().join(attempt);
        let status = Command::new(env!("CARGO_BIN_EXE_beliefnet"))
            .args([
                "trial",
                "polarized_giant",
                "--seed",
                "7",
                "--record-confidence",
                "--out",
            ])
            .arg(&out)
            .status()
            .unwrap();
        assert!(status.success());
        let mut files: Vec<(String, Vec<u8>)> = fs::read_dir(&out)
            .unwrap()
            .map(|e| {
                let e = e.unwrap();
                (
                    e.file_name().to_string_lossy().into_owned(),
                    fs::read(e.path()).unwrap(),
                )
            })
            .collect();
        files.sort();
        outputs.push(files);
    }
    let names: Vec<&str> = outputs[0].iter().map(|(n, _)| n.as_str()).collect();
    outcome(
        outputs[0] == outputs[1] && names.len() == 5,
        format!(
            "files {names:?} byte-identical across two invocations: {}",
            outputs[0] == outputs[1]
        ),
    )
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("random-init trial", c1_random_init),
        ("c=0 reduces to DeGroot consensus", c2_degroot_reduction),
        ("c=1 collapse", c3_full_self_confidence),
        ("pressure at origin", c4_pressure_at_origin),
        ("complement-pair invariant", c5_complement_pairs),
        ("doubly stochastic weights", c6_doubly_stochastic),
        ("oracle equivalence", c7_oracle),
        ("polarized giant vs communities", c8_polarized_comparison),
        ("sweep monotonicity", c9_sweeps),
        ("determinism", c10_determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let result = check();
        let tag = if result.pass { "PASS" } else { "FAIL" };
        println!("[{tag}] criterion {:>2} {name}: {}", i + 1, result.detail);
        if !result.pass {
            failed += 1;
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
