//! Braided subspaces of diagonal type inside `M(C, ρ)`.
//!
//! Class elements are handled as permutations. Only the part of the class
//! that commutes with the basepoint is ever materialized, except in the
//! unreduced oracle paths, which are capped.

mod cliques;
mod diagonal;
mod diagram;
mod subrack;
mod yd;

pub use cliques::{
    maximal_abelian_subracks, maximal_cliques, neighborhood_orbits, unreduced_maximal_subracks, CliqueInventory,
    CommutingGraph, InventoryEntry, SubrackOrbit,
};
pub use diagonal::{commuting_subfamilies, diagonal_subspace, DiagonalSubspace};
pub use diagram::DynkinDiagram;
pub use subrack::Subrack;
pub use yd::YDModule;

use crate::exactla::LaError;
use crate::permgroup::PermError;
use crate::reps::RepError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BraidError {
    #[error("{0} and {1} do not commute")]
    NotCommuting(String, String),
    #[error("transporter {g} does not carry the basepoint to {t}")]
    BadTransporter { g: String, t: String },
    #[error("subrack repeats the element {0}")]
    Repeated(String),
    /// `ρ(γ_ab)` and `ρ(γ_cd)` do not commute, so no common eigenbasis exists.
    #[error("operators for pairs {first:?} and {second:?} do not commute")]
    NonSimultaneous {
        first: (usize, usize),
        second: (usize, usize),
    },
    #[error("{0}")]
    Unsupported(&'static str),
    #[error("cap exceeded: {what} would need {needed}, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        needed: u128,
        cap: u128,
    },
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    La(#[from] LaError),
    #[error(transparent)]
    Rep(#[from] RepError),
}
