//! Evidence-based belief dynamics on social networks.
//!
//! Every agent holds a confidence level for each slot of a shared evidence
//! pool (`m` positive statements followed by their `m` negations) and a fixed
//! *structure of understanding*: a weight vector over the pool with one active
//! slot per opposite pair. Self-reasoning is the weighted sum of confidences;
//! belief mixes self-reasoning with the weighted beliefs of neighbours
//! (Friedkin-Johnsen style), and social pressure is the gap between the two.
//!
//! Confidence levels diffuse over a doubly stochastic social network. A
//! neighbour holding the opposite member of a pair pushes the receiver towards
//! the complement of its confidence, which is the model's backfire mechanism.
//!
//! The crate is organised as
//!
//! * [`graphgen`]: random networks and doubly stochastic weights,
//! * [`model`]: agent state and its initializers,
//! * [`dynamics`]: the synchronous stepper plus a dense reference stepper,
//! * [`experiments`]: named trials, parameter sweeps and statistics,
//! * [`storage`]: config parsing and CSV/JSON writers,
//! * [`cli`]: the `beliefnet` command line.
//!
//! Interchangeable pieces (network generators, confidence initializers,
//! trial presets, sweep parameters) sit behind small traits and are looked up
//! by name in a [`registry::Registry`].

pub mod cli;
pub mod dynamics;
pub mod error;
pub mod experiments;
pub mod graphgen;
pub mod model;
pub mod registry;
pub mod rng;
pub mod storage;

pub use error::{Error, Result};
