//! Link-irregularity toolkit for small graphs.
//!
//! A graph is link-irregular when the links of its vertices (the subgraphs
//! induced by each vertex's neighborhood) are pairwise non-isomorphic. This
//! crate decides that property with certificates, enumerates small graphs
//! and regular graphs up to isomorphism to search for link-irregular ones,
//! tests planarity with embeddings or Kuratowski obstructions, and evaluates
//! the associated exact edge-count and counting bounds.
//!
//! Entry points:
//! * [`graph`] — the bit-row graph type and named constructions,
//! * [`iso`] — canonical forms and isomorphism tests,
//! * [`link`] — links and the link-irregularity verdict,
//! * [`enumerate`] — isomorph-free catalogs and the search driver,
//! * [`planar`] — planarity with certificates,
//! * [`bounds`] — exact bound and estimate calculators,
//! * [`graph6`] / [`edgelist`] — interchange formats,
//! * [`data`] — bundled reference graphs,
//! * [`report`] — deterministic text/JSON reports,
//! * [`verify`] — the built-in claim battery behind `verify-paper`.

pub mod bounds;
pub mod data;
pub mod edgelist;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod link;
pub mod planar;
pub mod report;
pub mod verify;

pub use graph::{Graph, GraphError};
pub use iso::{are_isomorphic, canonical_form, CanonCode, CanonicalForm};
pub use link::{is_link_irregular, link, link_degree_table, Verdict};
