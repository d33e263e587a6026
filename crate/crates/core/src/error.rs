use thiserror::Error;

use crate::symalg::Var;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("the origin of C² is excluded (|z1|² + |z2|² must be positive)")]
    Origin,

    #[error("radius must be positive and finite, got {0}")]
    NonPositiveRadius(f64),

    #[error("polar angle {0} outside [0, π]")]
    PolarAngle(f64),

    #[error("evaluation at a branch point: {var} = 0 with exponent {exponent}")]
    BranchPoint { var: Var, exponent: String },

    #[error("exponent {num}/{den} is not on the quarter-integer lattice")]
    ExponentLattice { num: i64, den: i64 },

    #[error("charge must be an integer, got {0}")]
    NonIntegerCharge(String),

    #[error("restricted factor violates the equal-power condition in term {0}")]
    NotRestricted(String),

    #[error("ξ factor is not a pure phase: |ξ| = {0}")]
    NotPhase(f64),

    #[error("point lies on the polar axis (θ = {0}); the potential is singular there")]
    Pole(f64),

    #[error("charge eigen-relation failed: max deviation {0}")]
    ChargeInconsistent(f64),

    #[error("Monte-Carlo integrand diverges (estimate {estimate}, stderr {stderr})")]
    Divergent { estimate: f64, stderr: f64 },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("non-finite value encountered: {0}")]
    NonFinite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
