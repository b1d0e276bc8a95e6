//! A workbench for finite ordered Γ-semigroups.
//!
//! - [`model`]: tables, orders and the axiom validators
//! - [`calculus`]: down-closures, Γ-products, bi-ideals and regularity
//! - [`theorems`]: one checker per regularity result, with replayable witnesses
//! - [`enumerate`] and [`sweep`]: exhaustive generation and theorem sweeps
//! - [`io`]: the structure file format and report documents

pub mod analysis;
pub mod calculus;
pub mod enumerate;
pub mod fixtures;
pub mod io;
pub mod model;
pub mod set;
pub mod sweep;
pub mod theorems;

pub use calculus::{RegularityKind, RegularityWitness};
pub use model::{GammaTables, OrderRelation, PoGammaSemigroup};
pub use set::ElementSet;
pub use theorems::{CheckReport, TheoremId};
