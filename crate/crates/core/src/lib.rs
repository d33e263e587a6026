//! Quantum mechanics on C² mapped onto R³ by the Hopf fibration x = z̄σz.
//!
//! Functions of z, z* that depend only on x are ordinary wave functions.
//! Multiplying them by the phase ξ_κ = e^{iκγ/2}e^{iδφ/2} along the fiber gives
//! states on which the velocity operators pick up a gauge potential, that of a
//! magnetic monopole of charge κ/2.
//!
//! - [`symalg`]: exact symbolic algebra over r^s z1^p1 z1*^q1 z2^p2 z2*^q2 with
//!   quarter-integer exponents and the Poisson bracket.
//! - [`operators`]: Δ, x̂, V̂, L̂ and V̂₄ acting on [`symalg::SymFunc`]s.
//! - [`monopole`]: ξ_κ, potential extraction, closed-form fields, strings, charge.
//! - [`numerics`]: finite differences, spherical curl and Monte-Carlo norms used
//!   as independent oracles.
//! - [`verify`]: the identity suite behind `monopole verify`.
//!
//! ```
//! use c2_monopole::monopole::{make_state, measure_charge};
//! use c2_monopole::symalg::SymFunc;
//!
//! let state = make_state(SymFunc::one(), 2, 0).unwrap();
//! assert_eq!(measure_charge(&state).unwrap(), 2);
//! ```

pub mod coords;
pub mod error;
pub mod monopole;
pub mod numerics;
pub mod operators;
pub mod restricted;
pub mod symalg;
pub mod verify;
