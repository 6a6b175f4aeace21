use std::fs;

use beliefnet::dynamics::{run_simulation, SimInputs};
use beliefnet::experiments::{run_config, sweep, trial_config};
use beliefnet::graphgen::{generate_er, sinkhorn_normalize, Graph};
use beliefnet::model::{ConfidenceMatrix, SelfConfidence, UnderstandingMatrix};
use beliefnet::storage::*;

fn two_agent_trajectory() -> beliefnet::dynamics::Trajectory {
    let g = Graph::from_edges(2, [(0, 1)], None).unwrap();
    let inputs = SimInputs {
        weights: sinkhorn_normalize(&g, true, 1e-9, 1000).unwrap(),
        understanding: UnderstandingMatrix::from_rows(1, &[vec![1.0, 0.0], vec![0.0, 1.0]])
            .unwrap(),
        confidence: ConfidenceMatrix::from_rows(1, &[vec![0.3, 0.7], vec![0.1, 0.9]]).unwrap(),
        self_confidence: SelfConfidence::uniform(2, 0.5).unwrap(),
    };
    run_simulation(&inputs, 1).unwrap()
}

#[test]
fn trajectory_file_layout_and_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join(TRAJECTORY_FILE);
    let traj = two_agent_trajectory();
    write_trajectory(&traj, &path).unwrap();
    let text = fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("step,agent,belief,self_reasoning,pressure\n"));
    assert!(!text.contains('\r'));
    let rows = read_trajectory(&path).unwrap();
    assert_eq!(rows.len(), 4);
    for row in &rows {
        let st = &traj.states[row.step];
        if row.step == 0 {
            assert_eq!(row.pressure, 0.0);
        }
        assert!((row.belief - st.beliefs[row.agent]).abs() <= 1e-12);
        assert!((row.self_reasoning - st.self_reasoning[row.agent]).abs() <= 1e-12);
        assert!((row.pressure - st.pressure[row.agent]).abs() <= 1e-12);
    }
}

#[test]
fn confidence_file_layout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join(CONFIDENCE_FILE);
    write_confidence(&two_agent_trajectory(), &path).unwrap();
    let text = fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("step,agent,evidence,confidence"));
    assert_eq!(lines.next(), Some("0,0,0,0.3"));
    assert_eq!(text.lines().count(), 1 + 2 * 2 * 2);
}

#[test]
fn complete_triangle_network_files() {
    let dir = tempfile::tempdir().unwrap();
    let g = Graph::from_edges(3, [(0, 1), (0, 2), (1, 2)], None).unwrap();
    let w = sinkhorn_normalize(&g, true, 1e-9, 1000).unwrap();
    write_network(&g, g.groups(), &w, dir.path()).unwrap();
    let nodes = fs::read_to_string(dir.path().join(NODES_FILE)).unwrap();
    assert_eq!(nodes, "agent,group,degree\n0,0,2\n1,0,2\n2,0,2\n");
    let edges = read_edges(&dir.path().join(EDGES_FILE)).unwrap();
    assert_eq!(edges.len(), 6);
    assert_eq!(edges.iter().filter(|e| e.0 == e.1).count(), 3);
    assert!(edges
        .iter()
        .all(|e| e.0 <= e.1 && (e.2 - 1.0 / 3.0).abs() < 1e-12));
}

#[test]
fn empty_network_files() {
    let dir = tempfile::tempdir().unwrap();
    let g = Graph::from_edges(2, [], None).unwrap();
    let w = sinkhorn_normalize(&g, false, 1e-9, 1000).unwrap();
    write_network(&g, g.groups(), &w, dir.path()).unwrap();
    let nodes = fs::read_to_string(dir.path().join(NODES_FILE)).unwrap();
    assert_eq!(nodes, "agent,group,degree\n0,0,0\n1,0,0\n");
    let edges = fs::read_to_string(dir.path().join(EDGES_FILE)).unwrap();
    assert_eq!(edges, "src,dst,weight\n0,0,1\n1,1,1\n");
}

#[test]
fn column_sums_from_edges_file() {
    let dir = tempfile::tempdir().unwrap();
    let g = generate_er(300, 8.0, 5).unwrap();
    let w = sinkhorn_normalize(&g, true, 1e-9, 1000).unwrap();
    write_network(&g, g.groups(), &w, dir.path()).unwrap();
    let mut sums = vec![0.0; 300];
    for (i, j, x) in read_edges(&dir.path().join(EDGES_FILE)).unwrap() {
        sums[j] += x;
        if i != j {
            sums[i] += x;
        }
    }
    for s in sums {
        assert!((s - 1.0).abs() <= 1e-9, "{s}");
    }
}

#[test]
fn summary_contents() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = SimConfig {
        n: 80,
        c: 1.0,
        steps: 5,
        ..SimConfig::default()
    };
    let run = run_config(&cfg).unwrap();
    let path = dir.path().join(SUMMARY_FILE);
    write_summary(&cfg, &run.trajectory, &path).unwrap();
    let summary: RunSummary = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(summary.config, cfg);
    assert_eq!(summary.max_pressure, 0.0);
    assert_eq!(summary.std_series.len(), 6);
    assert!(summary.final_min <= summary.final_mean && summary.final_mean <= summary.final_max);
}

#[test]
fn random_trial_summary_is_tight() {
    let mut total = 0.0;
    for seed in 0..10 {
        let cfg = trial_config(
            "random_giant",
            &SimConfig {
                seed,
                ..SimConfig::default()
            },
        )
        .unwrap();
        let run = run_config(&cfg).unwrap();
        total += RunSummary::new(&cfg, &run.trajectory).final_std;
    }
    assert!(total / 10.0 <= 0.01);
}

#[test]
fn sweep_table() {
    let dir = tempfile::tempdir().unwrap();
    let base = SimConfig {
        n: 40,
        k: 4.0,
        steps: 5,
        ..SimConfig::default()
    };
    let rows = sweep(
        "connectivity",
        &[3.0, 4.0, 5.0],
        &[0.0, 1.0],
        &[1, 2],
        &base,
    )
    .unwrap();
    let path = dir.path().join(SWEEP_FILE);
    write_sweep(&rows, &path).unwrap();
    let text = fs::read_to_string(&path).unwrap();
    assert!(text
        .starts_with("parameter,value,c,seed,final_std,final_mean,mean_pressure,max_pressure\n"));
    let back = read_sweep(&path).unwrap();
    assert_eq!(back.len(), 12);
    for (a, b) in rows.iter().zip(&back) {
        assert_eq!((a.value, a.c, a.seed), (b.value, b.c, b.seed));
        assert!((a.final_std - b.final_std).abs() <= 1e-12);
        assert!((a.mean_pressure - b.mean_pressure).abs() <= 1e-12);
    }
}

#[test]
fn writers_are_byte_deterministic() {
    let cfg = SimConfig {
        n: 60,
        k: 5.0,
        steps: 6,
        record_confidence: true,
        ..SimConfig::default()
    };
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let files_a = write_run(&run_config(&cfg).unwrap(), a.path()).unwrap();
    write_run(&run_config(&cfg).unwrap(), b.path()).unwrap();
    assert_eq!(files_a.len(), 5);
    for f in files_a {
        let name = f.file_name().unwrap();
        assert_eq!(
            fs::read(&f).unwrap(),
            fs::read(b.path().join(name)).unwrap()
        );
    }
}

#[test]
fn io_errors_carry_the_path() {
    let err = write_trajectory(
        &two_agent_trajectory(),
        std::path::Path::new("/nonexistent/dir/t.csv"),
    )
    .unwrap_err();
    assert_eq!(err.exit_code(), 2);
    assert!(err.to_string().contains("/nonexistent/dir/t.csv"));
}
