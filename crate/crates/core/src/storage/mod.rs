//! Configuration parsing and the CSV/JSON files a run produces.

mod config;
mod writers;

pub use config::{parse_config, SimConfig};
pub use writers::{
    format_sig, read_edges, read_sweep, read_trajectory, write_confidence, write_network,
    write_run, write_summary, write_sweep, write_trajectory, RunSummary, TrajectoryRow,
    CONFIDENCE_FILE, EDGES_FILE, NODES_FILE, SUMMARY_FILE, SWEEP_FILE, TRAJECTORY_FILE,
};
