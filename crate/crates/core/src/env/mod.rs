//! Finite Dec-POMDP environments.
//!
//! Environments are pure state machines: all randomness enters through
//! explicit unit samples, so a given input always produces the same output.
//! Instances hold only configuration; episode state is passed in and out.

pub mod grid;
pub mod tiny;

pub use grid::{grid_reset, grid_step, Cell, Coupling, GridAction, GridConfig, GridState, GridWorld};
pub use tiny::{tiny_mdp_step, TinyMdp, TinyMdpSpec, TinyState};

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum EnvError {
    #[error("state position {0:?} is outside the grid or on a wall")]
    CorruptedState(grid::Cell),
    #[error("step called on a finished episode")]
    EpisodeDone,
    #[error("transition row for state {state} does not sum to 1 (sum = {sum})")]
    MalformedDistribution { state: usize, sum: String },
    #[error("action index {action} out of range for agent {agent}")]
    InvalidAction { agent: usize, action: usize },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

/// Result of one environment transition.
#[derive(Debug, Clone, PartialEq)]
pub struct StepOutcome<S, O> {
    pub next_state: S,
    /// Per-agent local observations generated by the new state.
    pub observations: Vec<O>,
    /// Shared reward generated by this transition.
    pub reward: f64,
    pub done: bool,
}

/// A finite Dec-POMDP with a shared reward and explicit sampling inputs.
///
/// The interface is N-agent; the shipped environments are two-agent.
pub trait Environment {
    type State: Clone;
    type Obs: Clone + PartialEq + Eq + std::hash::Hash + std::fmt::Debug;

    fn num_agents(&self) -> usize;

    /// Size of agent `i`'s action set. Independent of the current state.
    fn num_actions(&self, agent: usize) -> usize;

    /// Initial state. `unit_sample` drives the initial-state distribution
    /// where one exists; deterministic environments ignore it.
    fn reset(&self, unit_sample: f64) -> Self::State;

    /// Per-agent local observations of a state.
    fn observe(&self, state: &Self::State) -> Vec<Self::Obs>;

    fn step(
        &self,
        state: &Self::State,
        actions: &[usize],
        unit_sample: f64,
    ) -> Result<StepOutcome<Self::State, Self::Obs>, EnvError>;

    /// Canonical text form of a local observation, used in state keys.
    fn obs_key(&self, obs: &Self::Obs) -> String;

    /// Single-character form of an action, used in state keys.
    fn action_char(&self, agent: usize, action: usize) -> char;

    /// Canonical text form of the full state, used in trajectory records.
    fn state_key(&self, state: &Self::State) -> String;
}
