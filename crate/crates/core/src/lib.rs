//! Scarf complexes of monomial ideals and a test bench for Scarfness of ideals
//! built from graphs: edge ideals and their squarefree, symbolic and ordinary
//! powers, and cover ideals.
//!
//! The [`scarf`] module decides Scarfness directly from the Scarf complex; the
//! [`theorems`] module predicts it from graph structure alone; [`verify`]
//! compares the two across an exhaustive catalog of small graphs.

pub mod catalog;
pub mod error;
pub mod graph;
pub mod homology;
pub mod monomial;
pub mod scarf;
pub mod theorems;
pub mod verify;

pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use homology::{FieldSpec, SimplicialComplex};
pub use monomial::{Monomial, MonomialIdeal, VariableSet};
pub use scarf::{EngineConfig, ScarfComplex};
