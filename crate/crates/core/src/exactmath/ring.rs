//! The coefficient-ring contract used by [`TruncatedSeries`](super::TruncatedSeries).

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A commutative ring with unit.
///
/// Methods take references so that big-number types are not consumed.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    fn times(&self, other: &Self) -> Self;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negate())
    }

    /// Multiplicative inverse, when one exists in the ring.
    fn inverse(&self) -> Option<Self>;

    fn from_int(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }

    /// Image of an integer, by binary expansion unless overridden.
    fn from_bigint(n: &BigInt) -> Self {
        let mut acc = Self::zero();
        let mut pow = Self::one();
        let mag = n.magnitude();
        for bit in 0..mag.bits() {
            if mag.bit(bit) {
                acc = acc.plus(&pow);
            }
            pow = pow.plus(&pow);
        }
        if n.is_negative() {
            acc.negate()
        } else {
            acc
        }
    }
}

/// A ring containing the rationals.
pub trait RationalAlgebra: Ring {
    fn from_rational(r: &BigRational) -> Self;
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(n.into())
    }
    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
}

impl RationalAlgebra for BigRational {
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn inverse(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }
    fn from_int(n: i64) -> Self {
        n.into()
    }
    fn from_bigint(n: &BigInt) -> Self {
        n.clone()
    }
}
