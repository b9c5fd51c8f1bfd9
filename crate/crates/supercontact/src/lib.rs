//! Exact symbolic kernel for the contact supergeometry of `R^{2l+1|n}`.
//!
//! The crate implements, with exact rational arithmetic throughout:
//!
//! - polynomial superfunctions over the Grassmann algebra of `n` odd
//!   coordinates ([`superfn`], [`parse`]),
//! - super vector fields as superderivations, their Lie superbracket,
//!   1-superforms and the evaluation pairing ([`fields`]),
//! - the standard contact structure `alpha = dz + sum(x_i dy_i - y_i dx_i)
//!   + sum(th_i dth_i)`, its tangent frame, the contact field `X_f` of a
//!   Hamiltonian superfunction and the Lagrange bracket ([`contact`]),
//! - the orthosymplectic matrix superalgebra `spo(2l+2|n)` ([`spo`]),
//! - the projective embedding of `spo(2l+2|n)` into vector fields and its
//!   identification with the degree-two contact fields ([`embedding`]),
//! - a deterministic verification suite over all of the above ([`verify`]).
//!
//! Because every coefficient is a reduced rational, each identity the
//! verifier checks is decided exactly; there are no tolerances anywhere.

pub mod cli;
pub mod contact;
pub mod dims;
pub mod embedding;
mod error;
pub mod fields;
pub mod parse;
pub mod rat;
pub mod sample;
pub mod spo;
pub mod superfn;
pub mod verify;

pub use crate::contact::ContactContext;
pub use crate::dims::{CoordId, Dims, Parity};
pub use crate::error::{Error, Result};
pub use crate::fields::{SuperOneForm, SuperVectorField};
pub use crate::parse::parse_expr;
pub use crate::rat::{Rat, RatMatrix};
pub use crate::spo::{GradedMatrix, OmegaStructure, SpoBasisLabel, SpoFamily};
pub use crate::superfn::{Monomial, Superfunction};
