//! Exact computations on F-stable maximal tori of `GL_n`, `Sp_2n` and
//! `SO_2n+1`, the coinvariant algebras of their Weyl groups, and the stable
//! twisted Betti numbers of the corresponding complex spaces of tori.
//!
//! All arithmetic is exact: rationals, polynomials and rational functions in
//! `q` (or `z`), and truncated power series with explicit orders.

pub mod betti;
pub mod charpoly;
pub mod coinvariant;
pub mod error;
pub mod exactmath;
pub mod partitions;
pub mod report;
pub mod symfunc;
pub mod tori;
pub mod verify;

pub use betti::{BettiGF, LinearRecurrence, Quasipolynomial};
pub use charpoly::{CharacterPolynomial, Monomial};
pub use coinvariant::{ClassFunction, GradedCharacter, GroupKind};
pub use error::{Error, Result};
pub use exactmath::{BigInt, BigRational, IntPoly, Poly, RationalFunction, TruncatedSeries};
pub use partitions::{DoublePartition, Partition};
