use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::SimConfig;
use crate::dynamics::Trajectory;
use crate::experiments::{stats, Run, SweepResult};
use crate::graphgen::{Graph, WeightMatrix};
use crate::{Error, Result};

pub const TRAJECTORY_FILE: &str = "trajectory.csv";
pub const CONFIDENCE_FILE: &str = "confidence.csv";
pub const NODES_FILE: &str = "nodes.csv";
pub const EDGES_FILE: &str = "edges.csv";
pub const SUMMARY_FILE: &str = "summary.json";
pub const SWEEP_FILE: &str = "sweep.csv";

/// Decimal rendering with 12 significant digits, trailing zeros trimmed.
pub fn format_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exponent = x.abs().log10().floor() as i32;
    let decimals = (11 - exponent).max(0) as usize;
    let mut s = format!("{x:.decimals$}");
    if s.contains('.') {
        let trimmed = s.trim_end_matches('0').trim_end_matches('.').len();
        s.truncate(trimmed);
    }
    s
}

fn csv_writer(path: &Path) -> Result<csv::Writer<fs::File>> {
    let file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    Ok(csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(file))
}

fn csv_err(path: &Path, e: csv::Error) -> Error {
    let source = match e.into_kind() {
        csv::ErrorKind::Io(io) => io,
        other => std::io::Error::new(std::io::ErrorKind::InvalidData, format!("{other:?}")),
    };
    Error::io(path, source)
}

/// Writes a CSV file from a header and pre-formatted rows.
fn write_rows<I>(path: &Path, header: &[&str], rows: I) -> Result<()>
where
    I: IntoIterator<Item = Vec<String>>,
{
    let mut w = csv_writer(path)?;
    w.write_record(header).map_err(|e| csv_err(path, e))?;
    for row in rows {
        w.write_record(&row).map_err(|e| csv_err(path, e))?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}

/// `step,agent,belief,self_reasoning,pressure`, one row per step and agent.
pub fn write_trajectory(traj: &Trajectory, path: &Path) -> Result<()> {
    let rows = traj.states.iter().flat_map(|st| {
        (0..st.n()).map(move |p| {
            vec![
                st.step.to_string(),
                p.to_string(),
                format_sig(st.beliefs[p]),
                format_sig(st.self_reasoning[p]),
                format_sig(st.pressure[p]),
            ]
        })
    });
    write_rows(
        path,
        &["step", "agent", "belief", "self_reasoning", "pressure"],
        rows,
    )
}

/// `step,agent,evidence,confidence`, one row per step, agent and slot.
pub fn write_confidence(traj: &Trajectory, path: &Path) -> Result<()> {
    let rows = traj.states.iter().flat_map(|st| {
        st.confidence.rows().enumerate().flat_map(move |(p, row)| {
            row.iter().enumerate().map(move |(i, &b)| {
                vec![
                    st.step.to_string(),
                    p.to_string(),
                    i.to_string(),
                    format_sig(b),
                ]
            })
        })
    });
    write_rows(path, &["step", "agent", "evidence", "confidence"], rows)
}

/// `nodes.csv` (`agent,group,degree`) and `edges.csv` (`src,dst,weight`) in `dir`.
///
/// Edge rows cover the upper triangle of the weights including the diagonal,
/// so self-loops appear as `src == dst`.
pub fn write_network(
    graph: &Graph,
    groups: &[u8],
    weights: &WeightMatrix,
    dir: &Path,
) -> Result<()> {
    if groups.len() != graph.n() || weights.n() != graph.n() {
        return Err(Error::Dimension(format!(
            "graph has {} nodes, groups {}, weights {}",
            graph.n(),
            groups.len(),
            weights.n()
        )));
    }
    let degrees = graph.degrees();
    write_rows(
        &dir.join(NODES_FILE),
        &["agent", "group", "degree"],
        (0..graph.n()).map(|p| vec![p.to_string(), groups[p].to_string(), degrees[p].to_string()]),
    )?;
    write_rows(
        &dir.join(EDGES_FILE),
        &["src", "dst", "weight"],
        weights
            .upper_entries()
            .map(|(i, j, w)| vec![i.to_string(), j.to_string(), format_sig(w)]),
    )
}

/// Contents of `summary.json`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunSummary {
    pub config: SimConfig,
    pub final_mean: f64,
    pub final_std: f64,
    pub final_min: f64,
    pub final_max: f64,
    pub mean_pressure: f64,
    pub max_pressure: f64,
    /// Belief std at every step, starting with step 0.
    pub std_series: Vec<f64>,
}

impl RunSummary {
    pub fn new(config: &SimConfig, traj: &Trajectory) -> Self {
        let stats_row = crate::experiments::summarize("run", 0.0, config, traj);
        let (final_min, final_max) = stats::min_max(&traj.last().beliefs);
        RunSummary {
            config: config.clone(),
            final_mean: stats_row.final_mean,
            final_std: stats_row.final_std,
            final_min,
            final_max,
            mean_pressure: stats_row.mean_pressure,
            max_pressure: stats_row.max_pressure,
            std_series: traj
                .states
                .iter()
                .map(|s| stats::belief_std(&s.beliefs))
                .collect(),
        }
    }
}

pub fn write_summary(config: &SimConfig, traj: &Trajectory, path: &Path) -> Result<()> {
    let summary = RunSummary::new(config, traj);
    let mut text = serde_json::to_string_pretty(&summary).expect("summary serializes");
    text.push('\n');
    let mut file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    file.write_all(text.as_bytes())
        .map_err(|e| Error::io(path, e))
}

/// `sweep.csv`, rows sorted by `(value, c, seed)`.
pub fn write_sweep(results: &[SweepResult], path: &Path) -> Result<()> {
    let mut sorted: Vec<&SweepResult> = results.iter().collect();
    sorted.sort_by(|a, b| {
        a.value
            .total_cmp(&b.value)
            .then(a.c.total_cmp(&b.c))
            .then(a.seed.cmp(&b.seed))
    });
    write_rows(
        path,
        &[
            "parameter",
            "value",
            "c",
            "seed",
            "final_std",
            "final_mean",
            "mean_pressure",
            "max_pressure",
        ],
        sorted.into_iter().map(|r| {
            vec![
                r.parameter.clone(),
                format_sig(r.value),
                format_sig(r.c),
                r.seed.to_string(),
                format_sig(r.final_std),
                format_sig(r.final_mean),
                format_sig(r.mean_pressure),
                format_sig(r.max_pressure),
            ]
        }),
    )
}

/// Writes trajectory, optional confidence, network and summary files for `run`.
pub fn write_run(run: &Run, dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut written = vec![dir.join(TRAJECTORY_FILE)];
    write_trajectory(&run.trajectory, &written[0])?;
    if run.config.record_confidence {
        let path = dir.join(CONFIDENCE_FILE);
        write_confidence(&run.trajectory, &path)?;
        written.push(path);
    }
    write_network(&run.graph, &run.groups, &run.inputs.weights, dir)?;
    written.push(dir.join(NODES_FILE));
    written.push(dir.join(EDGES_FILE));
    let path = dir.join(SUMMARY_FILE);
    write_summary(&run.config, &run.trajectory, &path)?;
    written.push(path);
    Ok(written)
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
pub struct TrajectoryRow {
    pub step: usize,
    pub agent: usize,
    pub belief: f64,
    pub self_reasoning: f64,
    pub pressure: f64,
}

fn read_records<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<Vec<T>> {
    let mut reader = csv::Reader::from_path(path).map_err(|e| csv_err(path, e))?;
    reader
        .deserialize()
        .collect::<std::result::Result<Vec<T>, _>>()
        .map_err(|e| csv_err(path, e))
}

pub fn read_trajectory(path: &Path) -> Result<Vec<TrajectoryRow>> {
    read_records(path)
}

/// `(src, dst, weight)` rows of an `edges.csv`.
pub fn read_edges(path: &Path) -> Result<Vec<(usize, usize, f64)>> {
    read_records(path)
}

pub fn read_sweep(path: &Path) -> Result<Vec<SweepResult>> {
    #[derive(Deserialize)]
    struct Row {
        parameter: String,
        value: f64,
        c: f64,
        seed: u64,
        final_std: f64,
        final_mean: f64,
        mean_pressure: f64,
        max_pressure: f64,
    }
    Ok(read_records::<Row>(path)?
        .into_iter()
        .map(|r| SweepResult {
            parameter: r.parameter,
            value: r.value,
            c: r.c,
            seed: r.seed,
            final_std: r.final_std,
            final_mean: r.final_mean,
            mean_pressure: r.mean_pressure,
            max_pressure: r.max_pressure,
        })
        .collect())
}
