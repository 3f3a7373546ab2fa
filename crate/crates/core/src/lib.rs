//! Formal concept analysis over finite cross tables.
//!
//! The crate covers the derivation operators and concept enumeration
//! ([`context`], [`lattice`]), the pre-weighted relevant graph of a context
//! ([`graph`]), attribute clarification and reduction ([`reduction`]), and a
//! differential test bench for three graph-based concept enumeration
//! procedures: [`replay`] executes their documented steps verbatim and
//! [`refute`] judges the output against the lattice oracle, fuzzes for new
//! failures and shrinks them.
//!
//! Contexts are read and written in the Burmeister `.cxt` format ([`cxt`]).
//! The `fca` binary exposes everything on the command line ([`cli`]).

pub mod builtin;
pub mod cli;
pub mod context;
pub mod cxt;
pub mod error;
pub mod graph;
pub mod lattice;
pub mod reduction;
pub mod refute;
pub mod replay;
pub mod subset;

pub use context::{FormalConcept, FormalContext};
pub use error::{Error, Result};
pub use subset::{AttributeSet, ObjectSet};
