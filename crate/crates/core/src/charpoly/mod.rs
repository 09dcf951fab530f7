//! Character polynomials: elements of `ℚ[X_1, Y_1, X_2, Y_2, …]` where `X_r`
//! counts positive `r`-cycles and `Y_r` negative `r`-cycles of a signed
//! permutation. Type-A polynomials only involve the `X_r`.
//!
//! Storage is a sparse monomial map; the binomial basis
//! `binom(X, μ) binom(Y, λ)` is reached through [`CharacterPolynomial::to_binomial_basis`].

mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{self, RationalAlgebra};
use crate::partitions::{factorial, DoublePartition, Partition};

pub use parse::parse_char_poly;

/// Exponents `[a_1, b_1, a_2, b_2, …]` on `[X_1, Y_1, X_2, Y_2, …]`, with
/// trailing zeros trimmed.
///
/// The derived lexicographic order refines divisibility: a proper divisor is
/// always strictly smaller.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    fn from_vec(mut v: Vec<u32>) -> Self {
        while v.last() == Some(&0) {
            v.pop();
        }
        Monomial(v)
    }

    /// `X_r^e`
    pub fn x(r: usize, e: u32) -> Self {
        assert!(r >= 1, "cycle lengths start at 1");
        let mut v = vec![0; 2 * r - 1];
        v[2 * r - 2] = e;
        Monomial::from_vec(v)
    }

    /// `Y_r^e`
    pub fn y(r: usize, e: u32) -> Self {
        assert!(r >= 1, "cycle lengths start at 1");
        let mut v = vec![0; 2 * r];
        v[2 * r - 1] = e;
        Monomial::from_vec(v)
    }

    pub fn x_exp(&self, r: usize) -> u32 {
        self.0.get(2 * r - 2).copied().unwrap_or(0)
    }

    pub fn y_exp(&self, r: usize) -> u32 {
        self.0.get(2 * r - 1).copied().unwrap_or(0)
    }

    /// Largest `r` with a nonzero exponent on `X_r` or `Y_r` (0 for `1`).
    pub fn max_index(&self) -> usize {
        self.0.len().div_ceil(2)
    }

    /// Weighted degree with `deg X_r = deg Y_r = r`.
    pub fn degree(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &e)| (i / 2 + 1) * e as usize)
            .sum()
    }

    pub fn has_y(&self) -> bool {
        self.0.iter().skip(1).step_by(2).any(|&e| e > 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let len = self.0.len().max(other.0.len());
        let v = (0..len)
            .map(|i| self.0.get(i).unwrap_or(&0) + other.0.get(i).unwrap_or(&0))
            .collect();
        Monomial(v)
    }

    /// The binomial-basis label whose leading monomial is this one.
    fn basis_label(&self) -> DoublePartition {
        let mut xs = BTreeMap::new();
        let mut ys = BTreeMap::new();
        for r in 1..=self.max_index() {
            if self.x_exp(r) > 0 {
                xs.insert(r, self.x_exp(r) as usize);
            }
            if self.y_exp(r) > 0 {
                ys.insert(r, self.y_exp(r) as usize);
            }
        }
        DoublePartition::new(
            Partition::from_multiplicities(&xs),
            Partition::from_multiplicities(&ys),
        )
    }

    fn evaluate(&self, xs: &[BigInt], ys: &[BigInt]) -> BigInt {
        let mut acc = BigInt::one();
        for r in 1..=self.max_index() {
            for (e, vals) in [(self.x_exp(r), xs), (self.y_exp(r), ys)] {
                if e > 0 {
                    let v = vals.get(r).cloned().unwrap_or_default();
                    if v.is_zero() {
                        return BigInt::zero();
                    }
                    acc *= v.pow(e);
                }
            }
        }
        acc
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            let var = if i % 2 == 0 { 'X' } else { 'Y' };
            write!(f, "{var}{}", i / 2 + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// A polynomial in the cycle-counting class functions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CharacterPolynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

impl CharacterPolynomial {
    pub fn zero() -> Self {
        CharacterPolynomial::default()
    }

    pub fn one() -> Self {
        CharacterPolynomial::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        CharacterPolynomial::term(c, Monomial::one())
    }

    pub fn from_int(n: i64) -> Self {
        CharacterPolynomial::constant(BigRational::from_integer(n.into()))
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        CharacterPolynomial { terms }
    }

    /// `X_r`
    pub fn x(r: usize) -> Self {
        CharacterPolynomial::term(BigRational::one(), Monomial::x(r, 1))
    }

    /// `Y_r`
    pub fn y(r: usize) -> Self {
        CharacterPolynomial::term(BigRational::one(), Monomial::y(r, 1))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut p = CharacterPolynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coefficient(&Monomial::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// No `Y_r` appears.
    pub fn is_type_a(&self) -> bool {
        self.terms.keys().all(|m| !m.has_y())
    }

    /// Weighted degree; the zero polynomial has degree 0.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Largest `r` such that `X_r` or `Y_r` appears.
    pub fn max_index(&self) -> usize {
        self.terms.keys().map(Monomial::max_index).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return CharacterPolynomial::zero();
        }
        CharacterPolynomial {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(CharacterPolynomial::one(), |acc, _| &acc * self)
    }

    /// `binom(P, k) = P (P−1) ⋯ (P−k+1) / k!`
    pub fn binomial(&self, k: usize) -> Self {
        let mut acc = CharacterPolynomial::one();
        for j in 0..k {
            acc = &acc * &(self - &CharacterPolynomial::from_int(j as i64));
        }
        acc.scale(&BigRational::new(BigInt::one(), factorial(k)))
    }

    /// Value at a `B_n` class: `X_r ↦ n_r(μ)`, `Y_r ↦ n_r(λ)`.
    pub fn evaluate(&self, class: &DoublePartition) -> BigRational {
        let top = self.max_index();
        let counts = |p: &Partition| -> Vec<BigInt> {
            (0..=top).map(|r| BigInt::from(if r == 0 { 0 } else { p.multiplicity(r) })).collect()
        };
        let xs = counts(&class.positive);
        let ys = counts(&class.negative);
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let v = m.evaluate(&xs, &ys);
            if !v.is_zero() {
                acc += c * BigRational::from_integer(v);
            }
        }
        acc
    }

    /// Value at an `S_n` class, i.e. at `(λ, ∅)`.
    pub fn evaluate_a(&self, lambda: &Partition) -> BigRational {
        self.evaluate(&DoublePartition::type_a(lambda.clone()))
    }

    /// `∏_r binom(X_r, n_r(μ)) binom(Y_r, n_r(λ))` in monomials.
    pub fn binom_basis_element(mu: &Partition, lambda: &Partition) -> Self {
        let mut acc = CharacterPolynomial::one();
        for (r, m) in mu.multiplicities() {
            acc = &acc * &CharacterPolynomial::x(r).binomial(m);
        }
        for (r, m) in lambda.multiplicities() {
            acc = &acc * &CharacterPolynomial::y(r).binomial(m);
        }
        acc
    }

    /// Coefficients `c_{μ,λ}` with `P = Σ c_{μ,λ} binom(X, μ) binom(Y, λ)`.
    ///
    /// Repeatedly strips the lexicographically largest monomial, which is
    /// the leading monomial of exactly one basis element.
    pub fn to_binomial_basis(&self) -> BTreeMap<DoublePartition, BigRational> {
        let mut rest = self.clone();
        let mut out = BTreeMap::new();
        while let Some((m, c)) = rest.terms.last_key_value() {
            let label = m.basis_label();
            let lead: BigInt = (1..=m.max_index())
                .map(|r| factorial(m.x_exp(r) as usize) * factorial(m.y_exp(r) as usize))
                .product();
            let coeff = c * BigRational::from_integer(lead);
            let element = CharacterPolynomial::binom_basis_element(&label.positive, &label.negative);
            rest = &rest - &element.scale(&coeff);
            out.insert(label, coeff);
        }
        out
    }

    pub fn from_binomial_basis<'a>(
        basis: impl IntoIterator<Item = (&'a DoublePartition, &'a BigRational)>,
    ) -> Self {
        basis.into_iter().fold(CharacterPolynomial::zero(), |acc, (label, c)| {
            &acc + &CharacterPolynomial::binom_basis_element(&label.positive, &label.negative).scale(c)
        })
    }
}

/// Named polynomials for `ℂⁿ`, `Sym²ℂⁿ`, `∧²ℂⁿ`, `∧³ℂⁿ`, keyed by the CLI
/// preset names.
pub fn canonical_rep_char_polys() -> Vec<(&'static str, CharacterPolynomial)> {
    PRESETS.iter().map(|&name| (name, preset(name).unwrap())).collect()
}

pub const PRESETS: [&str; 4] = ["Cn", "Sym2Cn", "Wedge2Cn", "Wedge3Cn"];

pub fn preset(name: &str) -> Option<CharacterPolynomial> {
    type P = CharacterPolynomial;
    let x = P::x;
    let y = P::y;
    let p = match name {
        "Cn" => &x(1) - &y(1),
        "Sym2Cn" => {
            &(&(&(&(&(&x(1) + &x(1).binomial(2)) + &y(1)) + &y(1).binomial(2)) + &x(2)) - &y(2))
                - &(&x(1) * &y(1))
        }
        "Wedge2Cn" => {
            &(&(&(&x(1).binomial(2) + &y(1).binomial(2)) - &x(2)) + &y(2)) - &(&x(1) * &y(1))
        }
        "Wedge3Cn" => [
            x(1).binomial(3),
            -y(1).binomial(3),
            &x(1) * &y(1).binomial(2),
            -(&y(1) * &x(1).binomial(2)),
            -(&x(1) * &x(2)),
            &x(2) * &y(1),
            &y(2) * &x(1),
            -(&y(1) * &y(2)),
            x(3),
            -y(3),
        ]
        .iter()
        .fold(P::zero(), |acc, t| &acc + t),
        _ => return None,
    };
    Some(p)
}

fn render_coefficient(c: &BigRational, first: bool, unit: bool, out: &mut String) {
    let neg = c.is_negative();
    if first {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    let a = c.abs();
    if unit {
        out.push_str(&a.to_string());
    } else if !a.is_one() {
        out.push_str(&a.to_string());
        out.push('*');
    }
}

impl fmt::Display for CharacterPolynomial {
    /// Highest degree first, e.g. `1/2*X1^2 - X1*Y1 + X2 - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|(a, _), (b, _)| b.degree().cmp(&a.degree()).then_with(|| b.cmp(a)));
        let mut out = String::new();
        for (i, (m, c)) in ordered.into_iter().enumerate() {
            let unit = *m == Monomial::one();
            render_coefficient(c, i == 0, unit, &mut out);
            if !unit {
                out.push_str(&m.to_string());
            }
        }
        f.write_str(&out)
    }
}

impl FromStr for CharacterPolynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_char_poly(s)
    }
}

impl Add for &CharacterPolynomial {
    type Output = CharacterPolynomial;
    fn add(self, rhs: &CharacterPolynomial) -> CharacterPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &CharacterPolynomial {
    type Output = CharacterPolynomial;
    fn sub(self, rhs: &CharacterPolynomial) -> CharacterPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &CharacterPolynomial {
    type Output = CharacterPolynomial;
    fn neg(self) -> CharacterPolynomial {
        CharacterPolynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for CharacterPolynomial {
    type Output = CharacterPolynomial;
    fn neg(self) -> CharacterPolynomial {
        -&self
    }
}

impl Mul for &CharacterPolynomial {
    type Output = CharacterPolynomial;
    fn mul(self, rhs: &CharacterPolynomial) -> CharacterPolynomial {
        let mut out = CharacterPolynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for CharacterPolynomial {
            type Output = CharacterPolynomial;
            fn $method(self, rhs: CharacterPolynomial) -> CharacterPolynomial {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl exactmath::Ring for CharacterPolynomial {
    fn zero() -> Self {
        CharacterPolynomial::zero()
    }
    fn one() -> Self {
        CharacterPolynomial::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
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
        let c = self.as_constant()?;
        (!Zero::is_zero(&c)).then(|| CharacterPolynomial::constant(c.recip()))
    }
    fn from_bigint(n: &BigInt) -> Self {
        CharacterPolynomial::constant(BigRational::from_integer(n.clone()))
    }
}

impl RationalAlgebra for CharacterPolynomial {
    fn from_rational(r: &BigRational) -> Self {
        CharacterPolynomial::constant(r.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use crate::partitions::enumerate_double_partitions;

    fn cp(s: &str) -> CharacterPolynomial {
        s.parse().unwrap()
    }

    fn dp(s: &str) -> DoublePartition {
        s.parse().unwrap()
    }

    #[test]
    fn basis_elements() {
        let e = Partition::empty();
        assert_eq!(
            CharacterPolynomial::binom_basis_element(&"1".parse().unwrap(), &e),
            cp("X1")
        );
        assert_eq!(
            CharacterPolynomial::binom_basis_element(&"1,1".parse().unwrap(), &e),
            cp("1/2*X1^2 - 1/2*X1")
        );
        assert_eq!(
            CharacterPolynomial::binom_basis_element(&e, &"2".parse().unwrap()),
            cp("Y2")
        );
    }

    #[test]
    fn evaluation() {
        let cn = cp("X1 - Y1");
        assert_eq!(cn.evaluate(&dp("1,1|")), rat(2, 1));
        assert_eq!(cn.evaluate(&dp("|1,1")), rat(-2, 1));
        assert_eq!(preset("Sym2Cn").unwrap().evaluate(&dp("2|")), rat(1, 1));
        // indices beyond the class size evaluate to zero
        assert_eq!(cp("X5 + 3").evaluate(&dp("1|")), rat(3, 1));
    }

    #[test]
    fn binomial_basis_conversion() {
        let b = cp("X1^2").to_binomial_basis();
        assert_eq!(b.len(), 2);
        assert_eq!(b[&dp("1,1|")], rat(2, 1));
        assert_eq!(b[&dp("1|")], rat(1, 1));
        let one = CharacterPolynomial::one().to_binomial_basis();
        assert_eq!(one.into_iter().collect::<Vec<_>>(), vec![(DoublePartition::empty(), rat(1, 1))]);
    }

    #[test]
    fn sym2_binomial_expansion() {
        let b = preset("Sym2Cn").unwrap().to_binomial_basis();
        let expected = [
            ("1|", 1),
            ("1,1|", 1),
            ("|1", 1),
            ("|1,1", 1),
            ("2|", 1),
            ("|2", -1),
            ("1|1", -1),
        ];
        assert_eq!(b.len(), expected.len());
        for (label, c) in expected {
            assert_eq!(b[&dp(label)], rat(c, 1), "{label}");
        }
    }

    #[test]
    fn degree_and_type() {
        assert_eq!(cp("X1*Y3 + X2^2").degree(), 4);
        assert!(cp("X1 + X2").is_type_a());
        assert!(!cp("X1 + Y2").is_type_a());
        assert_eq!(preset("Wedge3Cn").unwrap().degree(), 3);
    }

    #[test]
    fn display_round_trip() {
        for s in ["1/2*X1^2*Y3 - X2", "X1 - Y1", "-1", "0", "-X1*Y1 + 3/4"] {
            let p = cp(s);
            assert_eq!(cp(&p.to_string()), p, "{s}");
        }
        assert_eq!(cp("X1 - Y1").to_string(), "X1 - Y1");
        assert_eq!(cp("Y2 + 2*X1^2 - 1").to_string(), "2*X1^2 + Y2 - 1");
    }

    #[test]
    fn wedge_presets_match_definition() {
        let w2 = cp("binom(X1,2) + binom(Y1,2) - X2 + Y2 - X1*Y1");
        assert_eq!(preset("Wedge2Cn").unwrap(), w2);
        // ∧³ as a trace identity on every class of B_3: it is e_3 of the eigenvalues.
        let w3 = preset("Wedge3Cn").unwrap();
        for c in enumerate_double_partitions(3) {
            let expected = if c.negative.len() % 2 == 0 { 1 } else { -1 }
                * if (c.positive.size() - c.positive.len()) % 2 == 0 { 1 } else { -1 }
                * if (c.negative.size() - c.negative.len()) % 2 == 0 { 1 } else { -1 };
            assert_eq!(w3.evaluate(&c), rat(expected, 1), "{c}");
        }
    }
}
