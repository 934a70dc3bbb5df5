//! Cyclic properties of L_1-graphs: hypothesis predicates, the exception
//! family K, certified cycle/path extension by at most two vertices,
//! Hamiltonian-cycle construction by iterated extension, cycles through a
//! prescribed vertex set, the bipartite L_1 classification, and independent
//! brute-force oracles to verify all of it.
//!
//! An L_1-graph satisfies `d(u) + d(v) >= |N(u) ∪ N(v) ∪ N(w)| - 1` for
//! every induced path u-w-v with d(u, v) = 2. The central hypothesis class
//! adds connectivity and at least two common neighbors for every
//! distance-2 pair; in that class every non-spanning cycle extends by one
//! or two vertices, except for (n-1)-cycles in graphs sandwiched between
//! K_{p,p+1} and K_p ∨ complement(K_{p+1}).

pub mod conditions;
pub mod corpus;
pub mod dot;
pub mod error;
pub mod extension;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod oracle;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSequence};
