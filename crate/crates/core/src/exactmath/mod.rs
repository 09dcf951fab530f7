//! Exact arithmetic kernel: rationals, polynomials, reduced rational
//! functions and truncated power series over a generic coefficient ring.

mod poly;
mod ratfun;
mod rational;
mod ring;
mod series;

pub use poly::{poly_gcd, IntPoly, Poly};
pub use ratfun::RationalFunction;
pub use rational::{big, format_rational, int, parse_rational, rat};
pub use ring::{RationalAlgebra, Ring};
pub use series::{TruncatedSeries, EXACT};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
