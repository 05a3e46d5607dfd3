//! Hypergraph edge coloring toolkit.
//!
//! Builds the 2-section and line graph of a hypergraph, colors hyperedges
//! constructively (greedy, Brooks, Misra–Gries), computes the chromatic
//! index exactly by branch-and-bound, finds critical hyperedges, and checks
//! the bound `q(H) <= Δ([H]_2) + 1` together with the hypotheses of the
//! theorems that guarantee it.
//!
//! ```
//! use hyperchrom::{analysis, instances, oracle::OracleBudget};
//!
//! let fano = instances::fano();
//! let verdict = analysis::verify_conjecture(&fano, OracleBudget::default(), true);
//! assert_eq!(verdict.q.exact(), Some(7));
//! assert_eq!(verdict.bounds.bf, 7);
//! ```

pub mod analysis;
pub mod coloring;
pub mod error;
pub mod hgr;
pub mod hypergraph;
pub mod instances;
pub mod oracle;
pub mod report;
pub mod rng;
pub mod survey;
pub mod transforms;

pub use error::{Error, Result};
pub use hypergraph::{Hypergraph, HypergraphStats};
