//! Finite-hyperstructure verification engine.
//!
//! Starting from a table of additive conserved quantum numbers, the crate
//! derives the two-body interaction hyperoperation (every admissible outgoing
//! pair, collapsed to its element set), checks the hyperstructure axioms
//! exhaustively, enumerates all closed subsets with their inclusion lattice,
//! and compares every computed result against an embedded transcription of
//! the published reference data.
//!
//! The bundled carrier is the twelve-lepton set, but any particle family
//! with integer additive charges can be supplied through the definition-file
//! format handled by [`conservation::ParticleSet::parse_definition`].

pub mod axioms;
pub mod cli;
pub mod conservation;
pub mod error;
pub mod hypercore;
pub mod refdata;
pub mod render;
pub mod reproduce;
pub mod substructures;

pub use error::{Error, Result};
