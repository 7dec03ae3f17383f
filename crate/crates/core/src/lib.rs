//! Workbench for promise hypergraph colouring at desk scale.
//!
//! Everything a hardness argument for `PCSP(H_k, H_c)` leans on, as
//! executable, certificate-producing operations:
//!
//! - [`nae`]: NAE templates, 3-uniform hypergraphs, exhaustive colouring;
//! - [`graph`]: Kneser graphs, cliques, tensor and exponential graphs,
//!   exact chromatic numbers and homomorphism search;
//! - [`poly`]: polymorphism tables over `{0,1}^L`, NAE-preservation
//!   checking (fast path plus naive oracle), minors, generators,
//!   enumeration;
//! - [`avoid`]: C-avoiding sets, extraction and amplification of avoiding
//!   sets, the t(f)/sel(f) selection;
//! - [`chain`]: chains of minors and the pigeonhole consistency witness.
//!
//! All operations are pure: values are immutable after construction, results
//! are canonical (lexicographically least witnesses) and deterministic, and
//! every search is bounded by explicit [`Limits`].

pub mod avoid;
pub mod bits;
pub mod chain;
pub mod error;
pub mod graph;
pub mod limits;
pub mod nae;
pub mod poly;

pub use error::{Error, Result};
pub use limits::Limits;
