//! Exact knot-invariant engine built on pointed-Hopf-algebra braidings.
//!
//! The pipeline: the `taft` module models the underlying Hopf algebra, `ydmod`
//! builds its Yetter-Drinfeld modules `V_n`, `ribbon` derives braidings,
//! evaluation/coevaluation maps and twists from that data, `braid` parses and
//! represents braid words, and `invariant` contracts braid closures into
//! Laurent-polynomial link invariants (the Jones polynomial for `V_1`).
//! Everything runs over the exact scalar rings in `scalars`.

pub mod braid;
pub mod cli;
pub mod error;
pub mod invariant;
pub mod matrix;
pub mod report;
pub mod ribbon;
pub mod scalars;
pub mod taft;
pub mod ydmod;

pub use error::Error;
pub use matrix::Matrix;
pub use report::{Check, Report};
pub use scalars::{CycloRing, CycloScalar, LaurentRing, LaurentScalar, ScalarRing};
