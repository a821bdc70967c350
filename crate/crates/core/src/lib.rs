//! Finite models of fuzzy topology and many-valued logic with exact
//! rational truth values.
//!
//! Everything here is desk-scale and exact: truth values are rationals in
//! `[0, 1]`, frames are finite distributive lattices given by tables,
//! satisfaction relations are matrices, and every algebraic law exposed by
//! the library is decidable by direct evaluation. The crate provides
//!
//! * [`truth`] — exact truth-value arithmetic, the Gödel arrow, and the
//!   uniform chains `n̄`;
//! * [`fuzzyset`] — fuzzy subsets of finite carriers, graded inclusion,
//!   α-cuts, images and preimages;
//! * [`lattice`] — finite posets, frames, frame homomorphisms, Birkhoff
//!   duality, frame products/coproducts, and graded frames;
//! * [`space`] — fuzzy topological spaces in several flavors plus the
//!   n-valued topological predicates (Kolmogorov, compact, zero-dimensional);
//! * [`system`] — fuzzy topological systems, their morphisms, the
//!   extent/points/spectrum constructions, quotients, sums and products;
//! * [`varbasis`] — systems over fuzzy carriers with fixed or variable value
//!   chains, proper functions, and α-cut subsystems;
//! * [`mvn`] — MVₙ/Łₙᶜ-algebras, n̄-filters, spectra, and n̄-fuzzy Boolean
//!   systems;
//! * [`logic`] — fuzzy geometric logic with graded consequence: syntax,
//!   graded satisfaction, rule soundness, derivation checking, and the
//!   Lindenbaum construction;
//! * [`cat`] — an instance-level harness that checks functor laws,
//!   adjunctions and equivalences on concrete finite instances;
//! * [`io`] — the self-describing JSON container format and DOT export.

pub mod cat;
pub mod error;
pub mod fuzzyset;
pub mod io;
pub mod lattice;
pub mod logic;
pub mod mvn;
pub mod report;
pub mod space;
pub mod system;
pub mod truth;
pub mod varbasis;

pub use error::Error;
pub use report::Report;
pub use truth::{TruthValue, ValueChain};
