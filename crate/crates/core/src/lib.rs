//! Exact structure constants and Chevalley commutator formulas for the
//! simple Lie algebra of type G2.
//!
//! The pipeline is:
//!
//! 1. [`constants::solve`] derives every `N_{r,s}` from four extraspecial
//!    seeds `ε1, 2ε2, 3ε3, ε4`, with coefficients in [`signs`].
//! 2. [`commutators`] turns the table into the commutator formula
//!    `[x_s(u), x_r(t)] = ∏ x_{ir+js}(C_{ij,rs} (-t)^i u^j)` for every pair.
//! 3. [`adjoint`] rebuilds the 14-dimensional adjoint representation for a
//!    concrete sign choice and checks each formula as an identity of
//!    polynomial matrices ([`polymat`]).

pub mod adjoint;
pub mod cli;
pub mod commutators;
pub mod constants;
pub mod emit;
pub mod error;
pub mod golden;
pub mod polymat;
pub mod report;
pub mod rootsys;
pub mod signs;

pub use error::{Error, Result};
