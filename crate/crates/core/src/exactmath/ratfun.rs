//! Reduced rational functions in one variable.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{IntPoly, Poly};
use super::ring::{self, RationalAlgebra};
use crate::error::{Error, Result};

/// A ratio of polynomials in canonical form.
///
/// Canonical form: numerator and denominator are coprime integer polynomials
/// whose coefficients jointly have content 1, and the denominator has a
/// positive leading coefficient. Zero is `0/1`. Equality is therefore
/// structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: IntPoly,
    den: IntPoly,
}

impl RationalFunction {
    /// Builds the canonical form of `num / den`.
    pub fn new(num: &Poly, den: &Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (cn, zn) = IntPoly::primitive_of(num);
        let (cd, zd) = IntPoly::primitive_of(den);
        let scale = cn / cd;
        Ok(Self::from_int_parts(
            zn.scale(scale.numer()),
            zd.scale(scale.denom()),
        ))
    }

    /// Canonical form of an integer-polynomial ratio.
    pub fn from_int_polys(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_int_parts(num, den))
    }

    fn from_int_parts(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_constant() {
            return Self::normalize_coprime(num, den);
        }
        let g = num.gcd(&den);
        if g.is_constant() {
            return Self::normalize_coprime(num, den);
        }
        let num = num.exact_div(&g).expect("gcd divides numerator");
        let den = den.exact_div(&g).expect("gcd divides denominator");
        Self::normalize_coprime(num, den)
    }

    /// Fixes content and sign for a ratio already coprime as polynomials.
    fn normalize_coprime(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let mut c = num.content().gcd(&den.content());
        if den.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        RationalFunction {
            num: num.div_scalar(&c),
            den: den.div_scalar(&c),
        }
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(&BigRational::one())
    }

    pub fn constant(c: &BigRational) -> Self {
        Self::normalize_coprime(
            IntPoly::constant(c.numer().clone()),
            IntPoly::constant(c.denom().clone()),
        )
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(&BigRational::from_integer(n.into()))
    }

    pub fn from_poly(p: &Poly) -> Self {
        Self::new(p, &Poly::one()).expect("nonzero denominator")
    }

    pub fn from_int_poly(p: IntPoly) -> Self {
        Self::normalize_coprime(p, IntPoly::one())
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(1)
    }

    /// `var^k`
    pub fn monomial(k: usize) -> Self {
        Self::from_int_poly(IntPoly::monomial(BigInt::one(), k))
    }

    /// `var^k + sign`
    pub fn power_plus(k: usize, sign: i64) -> Self {
        let mut p = IntPoly::monomial(BigInt::one(), k);
        p = &p + &IntPoly::constant(sign.into());
        Self::from_int_poly(p)
    }

    pub fn int_numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn int_denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn numerator(&self) -> Poly {
        self.num.to_poly()
    }

    pub fn denominator(&self) -> Poly {
        self.den.to_poly()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// The polynomial this function equals, if it is one.
    pub fn as_poly(&self) -> Option<Poly> {
        if !self.is_polynomial() {
            return None;
        }
        let d = BigRational::from_integer(self.den.coeff(0));
        Some(self.numerator().scale(&d.recip()))
    }

    /// The constant this function equals, if it is one.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.num.is_constant() && self.den.is_constant() {
            Some(BigRational::new(self.num.coeff(0), self.den.coeff(0)))
        } else {
            None
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let e = u32::try_from(e.unsigned_abs()).map_err(|_| Error::Internal("exponent too large".into()))?;
        Ok(RationalFunction {
            num: base.num.pow(e),
            den: base.den.pow(e),
        }
        .renormalized())
    }

    fn renormalized(self) -> Self {
        Self::normalize_coprime(self.num, self.den)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        // Content-only change: the polynomial parts stay coprime.
        Self::normalize_coprime(self.num.scale(c.numer()), self.den.scale(c.denom()))
    }

    /// Value at a rational point.
    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Pole);
        }
        Ok(self.num.eval(x) / d)
    }

    /// Taylor coefficients at 0 up to `order` inclusive.
    pub fn taylor(&self, order: usize) -> Result<Vec<BigRational>> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::Pole);
        }
        Ok(series_quotient(&self.num, &self.den, order))
    }

    /// Expansion around infinity in `x = 1/var`: returns `(v, c)` with
    /// `self = x^v * (c[0] + c[1] x + ... + c[order] x^order + ...)`.
    pub fn expand_at_infinity(&self, order: usize) -> (i64, Vec<BigRational>) {
        if self.is_zero() {
            return (0, vec![BigRational::zero(); order + 1]);
        }
        let dn = self.num.degree().unwrap();
        let dd = self.den.degree().unwrap();
        let rn = self.num.reversed(dn + 1);
        let rd = self.den.reversed(dd + 1);
        (dd as i64 - dn as i64, series_quotient(&rn, &rd, order))
    }

    /// Renders with an explicit variable name.
    pub fn display_with(&self, var: &str) -> String {
        let num = self.num.display_with(var);
        if self.den.is_one_poly() {
            return num;
        }
        let num_terms = self.num.coeffs().iter().filter(|c| !c.is_zero()).count();
        let den_terms = self.den.coeffs().iter().filter(|c| !c.is_zero()).count();
        let num = if num_terms > 1 { format!("({num})") } else { num };
        let den = self.den.display_with(var);
        let den = if den_terms > 1 || den.contains('*') { format!("({den})") } else { den };
        format!("{num}/{den}")
    }
}

impl IntPoly {
    fn is_one_poly(&self) -> bool {
        self.is_constant() && self.coeff(0).is_one()
    }
}

/// Power-series coefficients of `num / den` up to `order`, `den(0) != 0`.
fn series_quotient(num: &IntPoly, den: &IntPoly, order: usize) -> Vec<BigRational> {
    let d0 = BigRational::from_integer(den.coeff(0)).recip();
    let dc: Vec<BigRational> = den
        .coeffs()
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    let mut out: Vec<BigRational> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = BigRational::from_integer(num.coeff(n));
        for k in 1..dc.len().min(n + 1) {
            if !dc[k].is_zero() {
                acc -= &dc[k] * &out[n - k];
            }
        }
        out.push(acc * &d0);
    }
    out
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("q"))
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            return RationalFunction::from_int_parts(num, self.den.clone());
        }
        if self.den.is_constant() && rhs.den.is_constant() {
            let (a, b) = (self.den.coeff(0), rhs.den.coeff(0));
            let num = &self.num.scale(&b) + &rhs.num.scale(&a);
            return RationalFunction::normalize_coprime(num, IntPoly::constant(a * b));
        }
        let g = self.den.gcd(&rhs.den);
        let b1 = self.den.exact_div(&g).expect("gcd divides");
        let d1 = rhs.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &d1) + &(&rhs.num * &b1);
        let den = &(&b1 * &d1) * &g;
        if g.is_constant() {
            return RationalFunction::normalize_coprime(num, den);
        }
        // Any common factor of num and den divides g.
        let h = num.gcd(&g);
        if h.is_constant() {
            return RationalFunction::normalize_coprime(num, den);
        }
        RationalFunction::normalize_coprime(
            num.exact_div(&h).expect("gcd divides"),
            den.exact_div(&h).expect("gcd divides"),
        )
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        let cancel = |n: &IntPoly, d: &IntPoly| -> (IntPoly, IntPoly) {
            if n.is_constant() || d.is_constant() {
                return (n.clone(), d.clone());
            }
            let g = n.gcd(d);
            if g.is_constant() {
                (n.clone(), d.clone())
            } else {
                (n.exact_div(&g).unwrap(), d.exact_div(&g).unwrap())
            }
        };
        let (a, d) = cancel(&self.num, &rhs.den);
        let (c, b) = cancel(&rhs.num, &self.den);
        RationalFunction::normalize_coprime(&a * &c, &b * &d)
    }
}

impl Div<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    /// Panics on division by zero; see [`RationalFunction::checked_div`].
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl ring::Ring for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
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
        RationalFunction::inverse(self).ok()
    }
    fn from_int(n: i64) -> Self {
        RationalFunction::from_int(n)
    }
}

impl RationalAlgebra for RationalFunction {
    fn from_rational(r: &BigRational) -> Self {
        RationalFunction::constant(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(&Poly::from_ints(num), &Poly::from_ints(den)).unwrap()
    }

    #[test]
    fn cancels_common_factor() {
        assert_eq!(rf(&[-1, 0, 1], &[-1, 1]), rf(&[1, 1], &[1]));
    }

    #[test]
    fn removes_content() {
        let r = rf(&[0, 2], &[-2, 2]);
        assert_eq!(r.numerator(), Poly::from_ints(&[0, 1]));
        assert_eq!(r.denominator(), Poly::from_ints(&[-1, 1]));
    }

    #[test]
    fn already_reduced_table_entry_is_fixed_point() {
        // q^4 / ((q^2-1)(q^4-1))
        let den = &Poly::from_ints(&[-1, 0, 1]) * &Poly::from_ints(&[-1, 0, 0, 0, 1]);
        let r = RationalFunction::new(&Poly::from_ints(&[0, 0, 0, 0, 1]), &den).unwrap();
        assert_eq!(r.numerator(), Poly::from_ints(&[0, 0, 0, 0, 1]));
        assert_eq!(r.denominator(), den);
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert_eq!(
            RationalFunction::new(&Poly::one(), &Poly::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(
            Error::DivisionByZero.to_string(),
            "division by zero rational function"
        );
    }

    #[test]
    fn denominator_sign_is_positive() {
        let r = rf(&[1], &[1, -1]);
        assert_eq!(r.numerator(), Poly::from_ints(&[-1]));
        assert_eq!(r.denominator(), Poly::from_ints(&[-1, 1]));
    }

    #[test]
    fn arithmetic_matches_hand_computation() {
        // 1/(q-1) + 1/(q+1) = 2q/(q^2-1)
        let a = rf(&[1], &[-1, 1]);
        let b = rf(&[1], &[1, 1]);
        assert_eq!(&a + &b, rf(&[0, 2], &[-1, 0, 1]));
        assert_eq!(&a * &b, rf(&[1], &[-1, 0, 1]));
        assert_eq!(&(&a / &b) * &b, a);
        assert_eq!(&a - &a, RationalFunction::zero());
    }

    #[test]
    fn taylor_of_sym2_gf() {
        let num = Poly::from_ints(&[1, 0, 1, 0, -1]);
        let den = Poly::from_ints(&[1, 0, -1, 0, -1, 0, 1]);
        let c = RationalFunction::new(&num, &den).unwrap().taylor(8).unwrap();
        let ints: Vec<i64> = [1, 0, 2, 0, 2, 0, 3, 0, 3].to_vec();
        assert_eq!(c, ints.iter().map(|&x| BigRational::from_integer(x.into())).collect::<Vec<_>>());
    }

    #[test]
    fn expansion_at_infinity() {
        // q/(q-1) = 1 + x + x^2 + ...
        let (v, c) = rf(&[0, 1], &[-1, 1]).expand_at_infinity(3);
        assert_eq!(v, 0);
        assert!(c.iter().all(|x| x.is_one()));
    }

    #[test]
    fn display_format() {
        assert_eq!(rf(&[0, 1, 1], &[2]).to_string(), "(q + q^2)/2");
        assert_eq!(rf(&[0, 1], &[-1, 1]).to_string(), "q/(-1 + q)");
        assert_eq!(rf(&[3], &[1]).to_string(), "3");
        assert_eq!(rf(&[1], &[0, 0, 4]).to_string(), "1/(4*q^2)");
    }

    #[test]
    fn evaluation_and_poles() {
        let r = rf(&[0, 1], &[-1, 1]);
        assert_eq!(r.eval(&BigRational::from_integer(2.into())).unwrap(), BigRational::from_integer(2.into()));
        assert_eq!(r.eval(&BigRational::one()), Err(Error::Pole));
    }
}
