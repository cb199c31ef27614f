//! Verification toolkit for a conditional upper bound on `log|ζ(1/2 + it)|`
//! in terms of a Dirichlet polynomial over prime powers.
//!
//! The crate evaluates every closed-form ingredient of the bound numerically
//! (the weight function [`special_f`], the extremal Poisson-kernel
//! approximations in [`extremal_poisson`], both sides of the explicit
//! formula in [`explicit_formula`]) against an independent zeta oracle
//! ([`zeta_oracle`]), and derives the optimal lower-order bound
//! coefficients exactly with truncated power series ([`series_algebra`],
//! [`optimal_coeffs`]).

pub mod acceptance;
pub mod bound_engine;
pub mod cli;
pub mod explicit_formula;
pub mod extremal_poisson;
pub mod numerics;
pub mod optimal_coeffs;
pub mod prime_arith;
pub mod series_algebra;
pub mod special_f;
pub mod zeros_table;
pub mod zeta_oracle;
