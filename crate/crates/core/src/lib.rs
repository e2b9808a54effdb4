//! Combinatorial invariants of framed spherical braids.
//!
//! Given a braid word this crate computes the braid's action on the free
//! group of the punctured sphere, its Lefschetz number and Reidemeister
//! trace split into homological Nielsen classes, the resulting lower bounds
//! on Floer homology, and the fundamental group and characteristic numbers
//! of the symplectic 4-manifold obtained from the braid by fiber sums.
//!
//! ```
//! use braidfloer::{braid::parse_braid, free_group::artin_endo, nielsen};
//!
//! let b = parse_braid("d=3; s1 s2").unwrap();
//! let nd = nielsen::reidemeister_trace(&artin_endo(&b));
//! assert_eq!(nd.lefschetz(), &2.into());
//! assert_eq!(nd.bound(), 2.into());
//! ```

pub mod bigint_serde;
pub mod braid;
pub mod error;
pub mod floer;
pub mod four_manifold;
pub mod free_group;
pub mod matrix;
pub mod nielsen;
pub mod report;

pub use braid::{parse_braid, BraidWord, Permutation};
pub use error::{BraidError, ConfigError, FreeGroupError, ParseError};
