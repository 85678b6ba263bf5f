//! Formal concept analysis engine.
//!
//! Builds binary formal contexts from many-valued tabular data, enumerates
//! all formal concepts, assembles the concept lattice with its cover
//! relation, checks attribute implications, and produces location-by-crime
//! cross tabulations and hotspot rankings. File formats (Burmeister CXT,
//! CSV tables, DOT line diagrams) and the `fca` command-line tool live in
//! [`io`] and [`cli`].

mod bits;

pub mod analytics;
pub mod cli;
pub mod context;
pub mod error;
pub mod implications;
pub mod io;
pub mod lattice;
pub mod scaling;

#[cfg(test)]
pub(crate) mod testdata;

pub use context::{AttributeSet, ContextId, FormalContext, ObjectSet};
pub use error::{Error, Result};
pub use lattice::{ConceptLattice, FormalConcept};
