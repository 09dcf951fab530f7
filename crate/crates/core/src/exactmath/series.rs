//! Truncated formal power series over an abstract coefficient ring.
//!
//! A series knows its truncation order `N` and never reports coefficients
//! beyond it. Binary operations truncate to the smaller of the two orders.
//! The special order [`EXACT`] marks a series that is known exactly (a
//! polynomial); it is the order of [`Ring::zero`] and [`Ring::one`], which
//! lets nested series (series whose coefficients are series) share the same
//! ring contract.

use num_rational::BigRational;

use super::ring::{RationalAlgebra, Ring};
use crate::error::{Error, Result};

/// Order of a series whose coefficients are all known.
pub const EXACT: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<R> {
    order: usize,
    // Dense, trailing zeros trimmed, never longer than order + 1.
    coeffs: Vec<R>,
}

impl<R: Ring> TruncatedSeries<R> {
    pub fn new(mut coeffs: Vec<R>, order: usize) -> Self {
        if order != EXACT && coeffs.len() > order + 1 {
            coeffs.truncate(order + 1);
        }
        while coeffs.last().is_some_and(R::is_zero) {
            coeffs.pop();
        }
        TruncatedSeries { order, coeffs }
    }

    /// A polynomial viewed as an exactly-known series.
    pub fn exact(coeffs: Vec<R>) -> Self {
        Self::new(coeffs, EXACT)
    }

    pub fn zero_to(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one_to(order: usize) -> Self {
        Self::new(vec![R::one()], order)
    }

    /// `c * t^k`, exact.
    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k];
        coeffs.push(c);
        Self::exact(coeffs)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_exact(&self) -> bool {
        self.order == EXACT
    }

    /// Stored coefficients (implicitly zero after the last one, up to the order).
    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// `[t^n]`. Asking past the order is an error, never a silent zero.
    pub fn coefficient(&self, n: usize) -> Result<R> {
        if n > self.order {
            return Err(Error::BeyondOrder {
                requested: n,
                order: self.order,
            });
        }
        Ok(self.coeffs.get(n).cloned().unwrap_or_else(R::zero))
    }

    /// All coefficients `0..=order` (order must be finite).
    pub fn dense(&self) -> Result<Vec<R>> {
        if self.is_exact() {
            return Err(Error::UnboundedOrder);
        }
        Ok((0..=self.order)
            .map(|n| self.coeffs.get(n).cloned().unwrap_or_else(R::zero))
            .collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.clone(), order.min(self.order))
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.plus(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::new(coeffs, order)
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(R::negate).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.times(c)).collect(), self.order)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        if self.is_zero() || other.is_zero() {
            return Self::zero_to(order);
        }
        let full = self.coeffs.len() + other.coeffs.len() - 1;
        let len = if order == EXACT { full } else { full.min(order + 1) };
        let mut coeffs = vec![R::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len {
                break;
            }
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].plus(&a.times(b));
                }
            }
        }
        Self::new(coeffs, order)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one_to(self.order);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplies by `t^k`; the order grows accordingly.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        let order = if self.is_exact() { EXACT } else { self.order + k };
        Self::new(coeffs, order)
    }

    /// Substitutes `t -> c t`.
    pub fn rescale(&self, c: &R) -> Self {
        let mut pow = R::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a.times(&pow));
            pow = pow.times(c);
        }
        Self::new(coeffs, self.order)
    }

    /// Series quotient, truncated at the smaller order (which must be finite).
    pub fn div(&self, divisor: &Self) -> Result<Self> {
        let order = self.order.min(divisor.order);
        self.div_to(divisor, order)
    }

    /// Series quotient to an explicit order.
    pub fn div_to(&self, divisor: &Self, order: usize) -> Result<Self> {
        let order = order.min(self.order).min(divisor.order);
        if order == EXACT {
            return Err(Error::UnboundedOrder);
        }
        let c0 = divisor.coeffs.first().ok_or(Error::NotInvertible)?;
        let inv = c0.inverse().ok_or(Error::NotInvertible)?;
        let sparse: Vec<(usize, &R)> = divisor
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut out: Vec<R> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs.get(n).cloned().unwrap_or_else(R::zero);
            for &(k, b) in &sparse {
                if k > n {
                    break;
                }
                if !out[n - k].is_zero() {
                    acc = acc.minus(&b.times(&out[n - k]));
                }
            }
            out.push(acc.times(&inv));
        }
        Ok(Self::new(out, order))
    }

    pub fn inverse(&self) -> Result<Self> {
        Self::one_to(self.order).div(self)
    }

    /// `(1 + sign * t^k)^e` for an integer exponent, to `order`.
    ///
    /// Nonnegative exponents are multiplied out exactly; negative ones use the
    /// generalized binomial series.
    pub fn pow_binomial_int(sign: i64, k: usize, e: i64, order: usize) -> Self {
        assert!(k >= 1, "binomial factor needs k >= 1");
        let mut coeffs: Vec<R> = Vec::new();
        let mut binom = BigRational::from_integer(1.into());
        let mut j: i64 = 0;
        let sign_r = BigRational::from_integer(sign.into());
        let mut sign_pow = BigRational::from_integer(1.into());
        loop {
            let idx = (j as usize) * k;
            if idx > order || binom == BigRational::from_integer(0.into()) {
                break;
            }
            if coeffs.len() < idx + 1 {
                coeffs.resize(idx + 1, R::zero());
            }
            coeffs[idx] = rational_to_ring::<R>(&(&binom * &sign_pow));
            // binom(e, j+1) = binom(e, j) * (e - j) / (j + 1)
            binom = binom * BigRational::from_integer((e - j).into())
                / BigRational::from_integer((j + 1).into());
            sign_pow = &sign_pow * &sign_r;
            j += 1;
        }
        Self::new(coeffs, order)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TruncatedSeries<S> {
        TruncatedSeries::new(self.coeffs.iter().map(f).collect(), self.order)
    }
}

/// Integer-valued rationals map into any ring; others need a rational algebra,
/// so this helper is only called with integer values for plain rings.
fn rational_to_ring<R: Ring>(r: &BigRational) -> R {
    assert!(r.is_integer(), "non-integer coefficient in a plain ring");
    R::from_bigint(&r.to_integer())
}

impl<R: RationalAlgebra> TruncatedSeries<R> {
    /// `exp(self)`; needs a zero constant term and a finite order.
    pub fn exp(&self) -> Result<Self> {
        if self.coeffs.first().is_some_and(|c| !c.is_zero()) {
            return Err(Error::NonZeroConstantTerm);
        }
        if self.is_exact() {
            return Err(Error::UnboundedOrder);
        }
        let order = self.order;
        // n e_n = sum_{k=1}^n k a_k e_{n-k}
        let mut e: Vec<R> = Vec::with_capacity(order + 1);
        e.push(R::one());
        let weighted: Vec<(usize, R)> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, a)| !a.is_zero())
            .map(|(k, a)| (k, a.times(&R::from_int(k as i64))))
            .collect();
        for n in 1..=order {
            let mut acc = R::zero();
            for (k, ka) in &weighted {
                if *k > n {
                    break;
                }
                if !e[n - k].is_zero() {
                    acc = acc.plus(&ka.times(&e[n - k]));
                }
            }
            let inv_n = R::from_rational(&BigRational::new(1.into(), (n as i64).into()));
            e.push(acc.times(&inv_n));
        }
        Ok(Self::new(e, order))
    }

    /// `(1 + sign * t^k)^e` with the exponent a ring element, via
    /// `sum_j binom(e, j) (sign t^k)^j`.
    pub fn pow_binomial(sign: i64, k: usize, exponent: &R, order: usize) -> Self {
        assert!(k >= 1, "binomial factor needs k >= 1");
        let mut coeffs: Vec<R> = Vec::new();
        let mut binom = R::one();
        let sign_r = R::from_int(sign);
        let mut sign_pow = R::one();
        let mut j = 0usize;
        while j * k <= order {
            let idx = j * k;
            coeffs.resize(idx + 1, R::zero());
            coeffs[idx] = binom.times(&sign_pow);
            let factor = exponent.minus(&R::from_int(j as i64));
            let inv = R::from_rational(&BigRational::new(1.into(), ((j + 1) as i64).into()));
            binom = binom.times(&factor).times(&inv);
            sign_pow = sign_pow.times(&sign_r);
            j += 1;
        }
        Self::new(coeffs, order)
    }
}

impl<R: Ring> Ring for TruncatedSeries<R> {
    fn zero() -> Self {
        Self::zero_to(EXACT)
    }
    fn one() -> Self {
        Self::one_to(EXACT)
    }
    fn is_zero(&self) -> bool {
        TruncatedSeries::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn negate(&self) -> Self {
        self.neg()
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn minus(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn inverse(&self) -> Option<Self> {
        TruncatedSeries::inverse(self).ok()
    }
    fn from_int(n: i64) -> Self {
        Self::exact(vec![R::from_int(n)])
    }
}

impl<R: RationalAlgebra> RationalAlgebra for TruncatedSeries<R> {
    fn from_rational(r: &BigRational) -> Self {
        Self::exact(vec![R::from_rational(r)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{RationalFunction, rat};

    type QSeries = TruncatedSeries<BigRational>;

    fn q(n: i64, d: i64) -> BigRational {
        rat(n, d)
    }

    #[test]
    fn exp_of_variable() {
        let u = QSeries::new(vec![q(0, 1), q(1, 1)], 3);
        let e = u.exp().unwrap();
        assert_eq!(e.dense().unwrap(), vec![q(1, 1), q(1, 1), q(1, 2), q(1, 6)]);
        assert_eq!(e.coefficient(2).unwrap(), q(1, 2));
    }

    #[test]
    fn geometric_series_over_rational_functions() {
        // 1 / (1 - u/q) to order 2
        let qq = RationalFunction::var();
        let inv_q = qq.inverse().unwrap();
        let denom = TruncatedSeries::new(vec![RationalFunction::one(), -&inv_q], 2);
        let s = TruncatedSeries::one_to(2).div(&denom).unwrap();
        assert_eq!(s.coefficient(0).unwrap(), RationalFunction::one());
        assert_eq!(s.coefficient(1).unwrap(), inv_q);
        assert_eq!(s.coefficient(2).unwrap(), inv_q.pow(2).unwrap());
    }

    #[test]
    fn coefficient_beyond_order_is_an_error() {
        let s = QSeries::one_to(1).div(&QSeries::new(vec![q(1, 1), q(-1, 1)], 4)).unwrap();
        assert_eq!(s.order(), 1);
        assert_eq!(s.coefficient(1).unwrap(), q(1, 1));
        assert_eq!(
            s.coefficient(2),
            Err(Error::BeyondOrder { requested: 2, order: 1 })
        );
    }

    #[test]
    fn exp_rejects_constant_term() {
        let s = QSeries::new(vec![q(1, 1), q(1, 1)], 3);
        assert_eq!(s.exp(), Err(Error::NonZeroConstantTerm));
    }

    #[test]
    fn division_needs_invertible_constant_term() {
        let s = QSeries::new(vec![q(0, 1), q(1, 1)], 3);
        assert_eq!(QSeries::one_to(3).div(&s), Err(Error::NotInvertible));
        let ints = TruncatedSeries::<num_bigint::BigInt>::new(vec![2.into(), 1.into()], 3);
        assert_eq!(TruncatedSeries::one_to(3).div(&ints), Err(Error::NotInvertible));
    }

    #[test]
    fn binary_ops_take_min_order() {
        let a = QSeries::new(vec![q(1, 1); 6], 5);
        let b = QSeries::new(vec![q(1, 1); 3], 2);
        assert_eq!(a.mul(&b).order(), 2);
        assert_eq!(a.add(&b).order(), 2);
        assert_eq!(a.mul(&QSeries::exact(vec![q(1, 1), q(1, 1)])).order(), 5);
    }

    #[test]
    fn integer_binomial_powers() {
        // (1 - t^2)^3 exactly; (1 + t)^-1 = 1 - t + t^2 - ...
        let s = QSeries::pow_binomial_int(-1, 2, 3, 10);
        assert_eq!(s.coeffs(), &[q(1, 1), q(0, 1), q(-3, 1), q(0, 1), q(3, 1), q(0, 1), q(-1, 1)]);
        let s = QSeries::pow_binomial_int(1, 1, -1, 3);
        assert_eq!(s.dense().unwrap(), vec![q(1, 1), q(-1, 1), q(1, 1), q(-1, 1)]);
    }

    #[test]
    fn nested_series_use_exact_units() {
        type Inner = TruncatedSeries<BigRational>;
        let inner = Inner::new(vec![q(1, 1), q(2, 1)], 3);
        let outer = TruncatedSeries::new(vec![inner.clone(), inner.clone()], 2);
        let sq = outer.mul(&outer);
        assert_eq!(sq.order(), 2);
        assert_eq!(sq.coefficient(1).unwrap(), inner.mul(&inner).add(&inner.mul(&inner)));
        assert_eq!(sq.coefficient(1).unwrap().order(), 3);
    }
}
