//! Dense univariate polynomials over the rationals and the integers.
//!
//! [`Poly`] is the user-facing type. [`IntPoly`] carries the integer kernel
//! (primitive parts, pseudo-remainders, gcd) that keeps rational-function
//! arithmetic free of rational coefficient blow-up.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Polynomial with rational coefficients, stored densely by exponent.
///
/// The highest stored coefficient is nonzero; the zero polynomial has no
/// coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: BigRational, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// The formal variable itself.
    pub fn var() -> Self {
        Poly::monomial(BigRational::one(), 1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Quotient and remainder of Euclidean division over the rationals.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Monic copy (the zero polynomial stays zero).
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Renders as `c0 + c1*x + c2*x^2 + ...` with zero terms omitted.
    pub fn display_with(&self, var: &str) -> String {
        render_terms(
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (c.clone(), k)),
            var,
        )
    }
}

pub(crate) fn render_terms(terms: impl Iterator<Item = (BigRational, usize)>, var: &str) -> String {
    let mut out = String::new();
    for (c, k) in terms {
        let negative = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let power = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        if k == 0 {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&power);
        } else {
            out.push_str(&format!("{mag}*{power}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("z"))
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::new(coeffs)
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Poly::new(coeffs)
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Poly, Add add, Sub sub, Mul mul);

/// Greatest common divisor over the rationals, normalized monic.
///
/// `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    let (_, za) = IntPoly::primitive_of(a);
    let (_, zb) = IntPoly::primitive_of(b);
    za.gcd(&zb).to_poly().monic()
}

/// Polynomial with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    /// `1 + sign * x^k`
    pub fn binomial_factor(sign: i64, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[0] += 1;
        coeffs[k] += sign;
        IntPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn to_poly(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().cloned().map(BigRational::from_integer).collect(),
        }
    }

    /// Splits a rational polynomial as `content * primitive` where the
    /// primitive part has coprime integer coefficients and positive leading
    /// coefficient.
    pub fn primitive_of(p: &Poly) -> (BigRational, IntPoly) {
        if p.is_zero() {
            return (BigRational::zero(), IntPoly::zero());
        }
        let den = p
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = p
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let z = IntPoly { coeffs: ints };
        let (c, prim) = z.content_primitive();
        (BigRational::new(c, den), prim)
    }

    /// Gcd of the coefficients (0 for the zero polynomial), always ≥ 0.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// `(content, primitive)` with the sign folded into the content so that
    /// the primitive part has a positive leading coefficient.
    pub fn content_primitive(&self) -> (BigInt, IntPoly) {
        if self.is_zero() {
            return (BigInt::zero(), IntPoly::zero());
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        (c.clone(), self.div_scalar(&c))
    }

    pub fn primitive(&self) -> IntPoly {
        self.content_primitive().1
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_scalar(&self, c: &BigInt) -> IntPoly {
        if c.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|x| x / c).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Lowest exponent with a nonzero coefficient.
    fn valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    fn shift_down(&self, k: usize) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    fn shift_up(&self, k: usize) -> IntPoly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Pseudo-remainder of `self` by `g`, with the leading coefficient of `g`
    /// folded in one step at a time.
    fn pseudo_rem(&self, g: &IntPoly) -> IntPoly {
        let dg = g.degree().expect("pseudo_rem by zero");
        let lg = &g.coeffs[dg];
        let mut r = self.coeffs.clone();
        while r.len() > dg {
            let lr = r.last().cloned().unwrap();
            let shift = r.len() - 1 - dg;
            let f = lg.gcd(&lr);
            let (mg, mr) = (lg / &f, lr / &f);
            if !mg.is_one() {
                for c in r.iter_mut() {
                    *c *= &mg;
                }
            }
            for (j, d) in g.coeffs.iter().enumerate() {
                r[shift + j] -= &mr * d;
            }
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        IntPoly { coeffs: r }
    }

    /// Primitive gcd with positive leading coefficient (`gcd(0,0) = 0`).
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive();
        }
        if other.is_zero() {
            return self.primitive();
        }
        let (va, vb) = (self.valuation(), other.valuation());
        let v = va.min(vb);
        let mut f = self.shift_down(va).primitive();
        let mut g = other.shift_down(vb).primitive();
        if f.degree() < g.degree() {
            std::mem::swap(&mut f, &mut g);
        }
        while !g.is_zero() {
            if g.is_constant() {
                return IntPoly::one().shift_up(v);
            }
            if f == g {
                break;
            }
            let r = f.pseudo_rem(&g).primitive();
            f = g;
            g = r;
        }
        f.shift_up(v)
    }

    /// Exact quotient `self / d` when `d` divides `self` over the integers.
    pub fn exact_div(&self, d: &IntPoly) -> Option<IntPoly> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.coeffs.len() <= dd {
            return None;
        }
        let ld = &d.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(ld);
            if !r.is_zero() {
                return None;
            }
            for (j, x) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * x;
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::new(quot))
    }

    /// Coefficients reversed over a window of `len` slots: `x^(len-1) p(1/x)`.
    pub fn reversed(&self, len: usize) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); len];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[len - 1 - k] = c.clone();
        }
        IntPoly::new(coeffs)
    }

    pub fn display_with(&self, var: &str) -> String {
        render_terms(
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (BigRational::from_integer(c.clone()), k)),
            var,
        )
    }
}

impl Add<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        IntPoly::new(coeffs)
    }
}

impl Sub<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        IntPoly::new(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        IntPoly::new(coeffs)
    }
}

forward_owned!(IntPoly, Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn gcd_with_common_factor() {
        // z^2 - 1, z - 1
        assert_eq!(poly_gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])), p(&[-1, 1]));
    }

    #[test]
    fn gcd_of_sym2_numerator_and_denominator_is_one() {
        let den = p(&[1, 0, -1, 0, -1, 0, 1]);
        let num = p(&[1, 0, 1, 0, -1]);
        assert_eq!(poly_gcd(&den, &num), Poly::one());
    }

    #[test]
    fn gcd_with_zero_is_monic_input() {
        let a = p(&[2, 4, 6]);
        assert_eq!(poly_gcd(&a, &Poly::zero()), a.monic());
        assert_eq!(poly_gcd(&Poly::zero(), &Poly::zero()), Poly::zero());
    }

    #[test]
    fn gcd_keeps_common_power_of_variable() {
        // z^3 (z+1) and z^2 (z+1)^2
        let a = p(&[0, 0, 0, 1, 1]);
        let b = p(&[0, 0, 1, 2, 1]);
        assert_eq!(poly_gcd(&a, &b), p(&[0, 0, 1, 1]));
    }

    #[test]
    fn euclidean_division_reconstructs_dividend() {
        let a = p(&[3, -1, 4, 1, -5, 9]);
        let b = p(&[2, 0, 7]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
        assert_eq!(a.div_rem(&Poly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn exact_division_detects_remainder() {
        let a = IntPoly::from_ints(&[-1, 0, 1]);
        assert_eq!(a.exact_div(&IntPoly::from_ints(&[-1, 1])), Some(IntPoly::from_ints(&[1, 1])));
        assert_eq!(a.exact_div(&IntPoly::from_ints(&[2, 1])), None);
    }

    #[test]
    fn display_uses_ascending_terms() {
        assert_eq!(p(&[1, 0, -2, 1]).display_with("q"), "1 - 2*q^2 + q^3");
        assert_eq!(Poly::zero().display_with("q"), "0");
        let half = Poly::new(vec![BigRational::new(1.into(), 2.into()), BigRational::new((-3).into(), 4.into())]);
        assert_eq!(half.display_with("t"), "1/2 - 3/4*t");
    }
}
