//! The `beliefnet` command line.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::experiments::{run_config, sweep, sweep_registry, trial_config};
use crate::storage::{parse_config, write_run, write_sweep, SimConfig, SWEEP_FILE};
use crate::{Error, Result};

#[derive(Debug, Parser)]
#[command(
    name = "beliefnet",
    version,
    about = "Evidence-based belief dynamics on social networks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one simulation as configured.
    Simulate {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        c: Option<f64>,
    },
    /// Run a named trial: random_giant, polarized_communities or polarized_giant.
    Trial {
        kind: String,
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        c: Option<f64>,
    },
    /// Sweep one parameter: connectivity, population, polarization_index or evidence_count.
    Sweep {
        parameter: String,
        /// Comma-separated parameter values; defaults to the parameter's grid.
        #[arg(long, value_delimiter = ',')]
        values: Vec<f64>,
        /// Comma-separated self-confidence levels.
        #[arg(long, value_delimiter = ',', default_value = "0,0.25,0.5,0.75,1")]
        c: Vec<f64>,
        /// Number of seeds per configuration, counted up from the base seed.
        #[arg(long, default_value_t = 10)]
        seeds: u64,
        /// Trial preset applied to the base config before sweeping.
        #[arg(long)]
        trial: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Parse and validate the config, then exit.
    Validate {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        c: Option<f64>,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    /// JSON config file; defaults apply when omitted.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Output directory.
    #[arg(long, default_value = "out")]
    pub out: PathBuf,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub steps: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<f64>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub polarization: Option<f64>,
    /// `giant` or `communities`.
    #[arg(long)]
    pub network: Option<String>,
    #[arg(long)]
    pub record_confidence: bool,
}

impl Common {
    fn load(&self) -> Result<SimConfig> {
        match &self.config {
            Some(path) => {
                let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
                parse_config(&text)
            }
            None => parse_config("{}"),
        }
    }

    fn merge(&self, cfg: &mut SimConfig, c: Option<f64>) {
        if let Some(v) = self.seed {
            cfg.seed = v;
        }
        if let Some(v) = self.steps {
            cfg.steps = v;
        }
        if let Some(v) = self.n {
            cfg.n = v;
        }
        if let Some(v) = self.k {
            cfg.k = v;
        }
        if let Some(v) = self.m {
            cfg.m = v;
        }
        if let Some(v) = self.polarization {
            cfg.polarization_index = v;
        }
        if let Some(v) = &self.network {
            cfg.network = v.clone();
        }
        if self.record_confidence {
            cfg.record_confidence = true;
        }
        if let Some(v) = c {
            cfg.c = v;
        }
    }

    /// File config with command-line overrides on top, validated.
    fn resolve(&self, c: Option<f64>) -> Result<SimConfig> {
        let mut cfg = self.load()?;
        self.merge(&mut cfg, c);
        cfg.validate()?;
        Ok(cfg)
    }
}

fn create_out(dir: &PathBuf) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))
}

pub fn execute(command: &Command) -> Result<()> {
    match command {
        Command::Validate { common, c } => {
            common.resolve(*c)?;
            eprintln!("config ok");
        }
        Command::Simulate { common, c } => {
            let cfg = common.resolve(*c)?;
            let run = run_config(&cfg)?;
            write_run(&run, &common.out)?;
            let s = run.summary("run", 0.0);
            eprintln!(
                "simulate seed={} final_std={:.6} max_pressure={:.6}",
                cfg.seed, s.final_std, s.max_pressure
            );
        }
        Command::Trial { kind, common, c } => {
            // preset first, so explicit flags win over it
            let mut cfg = trial_config(kind, &common.load()?)?;
            common.merge(&mut cfg, *c);
            cfg.validate()?;
            let run = run_config(&cfg)?;
            write_run(&run, &common.out)?;
            let s = run.summary(kind, 0.0);
            eprintln!(
                "trial {kind} seed={} final_std={:.6} max_pressure={:.6}",
                cfg.seed, s.final_std, s.max_pressure
            );
        }
        Command::Sweep {
            parameter,
            values,
            c,
            seeds,
            trial,
            common,
        } => {
            let mut base = common.load()?;
            if let Some(kind) = trial {
                base = trial_config(kind, &base)?;
            }
            common.merge(&mut base, None);
            base.validate()?;
            let registry = sweep_registry();
            let param = registry.resolve("parameter", parameter)?;
            let values = if values.is_empty() {
                param.default_values()
            } else {
                values.clone()
            };
            let seed_list: Vec<u64> = (0..*seeds).map(|i| base.seed.wrapping_add(i)).collect();
            let results = sweep(parameter, &values, c, &seed_list, &base)?;
            create_out(&common.out)?;
            write_sweep(&results, &common.out.join(SWEEP_FILE))?;
            eprintln!("sweep {parameter}: {} runs", results.len());
        }
    }
    Ok(())
}

/// Parses `argv` and runs the command, returning the process exit code.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            // help and version go to stdout, usage errors to stderr
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
