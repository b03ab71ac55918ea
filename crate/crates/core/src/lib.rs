//! Integer additive set-labelings (IASLs) of signed graphs.
//!
//! Vertices carry finite sets of non-negative integers, edges carry the
//! sumset of their endpoint sets, and an edge is positive exactly when that
//! sumset has even size. On top of this the crate checks balance and
//! 2-clusterability, applies the usual graph transforms with induced
//! labelings, and runs bounded exhaustive experiments that either confirm a
//! claim about arithmetic labelings or return concrete counterexamples.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod balance;
pub mod error;
pub mod graph;
pub mod labeling;
pub mod sets;
pub mod transforms;
pub mod verify;

pub use balance::{
    clusterability, is_balanced_fast, is_balanced_oracle, Clustering, CycleSignSummary, CycleTable,
};
pub use error::{Error, Result};
pub use graph::{Bipartition, Edge, Graph, GraphBuilder, DEFAULT_CYCLE_BOUND};
pub use labeling::{derive, Labeling, Ratio, Sign, SignedLabeledGraph};
pub use sets::{
    ap_profile, ap_sumset_cardinality, set_parity, sumset, ApProfile, IntegerSet, Parity,
};
pub use transforms::{
    delete_vertex, elementary_transformation, spanned_subgraph, subdivide_edge, TransformOutcome,
};
pub use verify::{
    construct_balanced_bipartite_labeling, enumerate_aiasl, verify_theorem, SearchBounds,
    TheoremId, Verdict, VerificationReport,
};
