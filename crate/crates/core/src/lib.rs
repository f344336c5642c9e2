//! Delayed cooperative multi-agent reinforcement learning laboratory.
//!
//! The crate provides four layers:
//!
//! * [`env`] — finite Dec-POMDP environments: the two-agent grid world (with
//!   transition-independent and coupled variants) and a desk-scale tabular MDP
//!   used as an exact enumeration target.
//! * [`delay`] — the delay wrapper: per-agent FIFO action buffers, delayed
//!   observation buffers, a reward pipeline, warm/cold initialization, and
//!   augmented-state construction.
//! * [`learn`] — tabular independent Q-learning/SARSA over augmented states,
//!   with realigned and naive credit-assignment variants and the delayed
//!   reward treatments.
//! * [`equiv`] — mechanical equivalence verification: common-random-number
//!   trajectory replay, exact trajectory-distribution enumeration, mixed and
//!   additive delay reductions, cold-start inclusion, and the augmented-state
//!   sufficiency search.
//!
//! All stochasticity flows through [`crn::EpisodeStream`], a counter-based
//! sampling stream keyed by effective time, so runs under different delay
//! regimes consume identical randomness at identical effective times. That is
//! what turns distribution-level equivalence into testable bitwise equality.

pub mod config;
pub mod crn;
pub mod delay;
pub mod env;
pub mod equiv;
pub mod learn;
pub mod policy;
pub mod scalar;

/// Exact probability scalar used by the enumeration routines.
pub type Rational = num_rational::BigRational;

/// Small exact rational used for configuration inputs (transition rows,
/// policy rows, rewards). Converted into [`Rational`] or `f64` on use.
pub type Ratio64 = num_rational::Ratio<i64>;

/// Crate version embedded in all output file headers.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
