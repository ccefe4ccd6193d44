//! Exact, all and minimal hitting sets of a hypergraph, enumerated in
//! compressed form as disjoint unions of wildcard rows.
//!
//! A wildcard row over `[w]` fixes some positions to 0 or 1, leaves some
//! free (`2`) and groups others into bubbles. A `g`-bubble asks for exactly
//! one 1, an `e`-bubble for at least one 1 and an `n`-bubble for at least one
//! 0. One row of width 200 can stand for `10^20` sets.
//!
//! ```
//! use minhit::{enumerate_ehs, Hypergraph};
//!
//! let h = Hypergraph::from_lists(9, [vec![2, 3, 4, 6], vec![1, 2, 3, 4, 5, 7], vec![2, 8, 9]]).unwrap();
//! let run = enumerate_ehs(&h).unwrap();
//! assert_eq!(run.rows.len(), 3);
//! assert_eq!(run.total.to_string(), "11");
//! ```
//!
//! The main entry points:
//!
//! - [`enumerate_ehs`]: exact hitting sets as `g`-rows.
//! - [`enumerate_hs`]: all hitting sets as semifinal `e`-rows.
//! - [`minhit`]: minimal hitting sets, exactly (first grade) or as an
//!   estimate (second grade).
//! - [`min_not_mc`] and [`enumerate_nc`]: the MC machinery behind the
//!   badness tests.

pub mod badness;
pub mod bits;
pub mod driver;
pub mod error;
pub mod exact;
pub mod hypergraph;
pub mod mc;
pub mod noncover;
pub mod reduce;
pub mod row;
pub mod spoiler;
pub mod transversal;
pub mod vlayout;

pub use badness::{badness, BadnessConfig, BadnessMethod, BadnessMode, BadnessVerdict};
pub use bits::VertexSet;
pub use driver::{
    classify_rows, estimate_total, expand_merely_good, minhit, minhit_with, random_hypergraph, sample_mhs,
    sample_min, BubbleChoice, Grade, MinhitConfig, MinhitResult, RowClass, RowVerdict, Signature,
};
pub use error::{Error, Result};
pub use exact::{enumerate_ehs, enumerate_ehs_with, stars_hypergraph, ExactConfig, ExactRun, Graph};
pub use hypergraph::{Hypergraph, SetFamily};
pub use mc::{killers, min_not_mc, mc_dud_test, MinNotMc};
pub use noncover::{e_intersect_n_empty, enumerate_nc, NoncoverSet};
pub use reduce::{inflate_rows, reduce_hypergraph, ClassMap};
pub use row::{Kind, PendingRow, WildcardRow};
pub use spoiler::{spoiler_count, SpoilerConfig, SpoilerDecision, SpoilerVerdict};
pub use transversal::{enumerate_hs, HsConfig, SemifinalSet};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/rows.md")]
    mod rows {}
    #[doc = include_str!("../../../book/src/exact.md")]
    mod exact {}
    #[doc = include_str!("../../../book/src/hitting_sets.md")]
    mod hitting_sets {}
    #[doc = include_str!("../../../book/src/mc.md")]
    mod mc {}
    #[doc = include_str!("../../../book/src/badness.md")]
    mod badness {}
    #[doc = include_str!("../../../book/src/pipeline.md")]
    mod pipeline {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
