//! Class functions on `S_n` and `B_n`, graded characters of the coinvariant
//! algebras, and the character polynomials `Q_i` that describe them stably.
//!
//! Classes of both groups are keyed by [`DoublePartition`]; an `S_n` class
//! `λ` is stored as `(λ, ∅)`. All characters here are rational-valued, so
//! inner products never conjugate.

mod oracle;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::charpoly::CharacterPolynomial;
use crate::error::{Error, Result};
use crate::exactmath::{IntPoly, TruncatedSeries};
use crate::partitions::{
    class_size_a, enumerate_double_partitions, enumerate_partitions, factorial,
    hyperoctahedral_order, DoublePartition,
};

pub use oracle::{char_poly_coeffs, graded_char_a_oracle, graded_char_bc_oracle, SignedPermutation};

/// Which Weyl group: `S_n` (type A) or `B_n` (types B and C).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    A,
    #[serde(rename = "bc")]
    BC,
}

impl GroupKind {
    /// Conjugacy classes of the rank-`n` group in enumeration order.
    pub fn classes(self, n: usize) -> Vec<DoublePartition> {
        match self {
            GroupKind::A => enumerate_partitions(n)
                .into_iter()
                .map(DoublePartition::type_a)
                .collect(),
            GroupKind::BC => enumerate_double_partitions(n),
        }
    }

    pub fn group_order(self, n: usize) -> BigInt {
        match self {
            GroupKind::A => factorial(n),
            GroupKind::BC => hyperoctahedral_order(n),
        }
    }

    pub fn class_size(self, class: &DoublePartition) -> BigInt {
        match self {
            GroupKind::A => class_size_a(&class.positive),
            GroupKind::BC => class.class_size_bc(),
        }
    }

    /// Degree of the top graded piece of the coinvariant algebra.
    pub fn top_degree(self, n: usize) -> usize {
        match self {
            GroupKind::A => n * n.saturating_sub(1) / 2,
            GroupKind::BC => n * n,
        }
    }

    /// Whether `class` labels a class of this group (of any rank).
    pub fn accepts(self, class: &DoublePartition) -> bool {
        self == GroupKind::BC || class.negative.is_empty()
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupKind::A => "a",
            GroupKind::BC => "bc",
        })
    }
}

impl FromStr for GroupKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(GroupKind::A),
            "bc" | "b" | "c" => Ok(GroupKind::BC),
            _ => Err(Error::parse(0, format!("unknown family {s:?}, expected a or bc"))),
        }
    }
}

/// A rational-valued class function on `S_n` or `B_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    kind: GroupKind,
    n: usize,
    values: BTreeMap<DoublePartition, BigRational>,
}

impl ClassFunction {
    pub fn from_fn(kind: GroupKind, n: usize, f: impl Fn(&DoublePartition) -> BigRational) -> Self {
        let values = kind.classes(n).into_iter().map(|c| {
            let v = f(&c);
            (c, v)
        });
        ClassFunction { kind, n, values: values.collect() }
    }

    /// The class function a character polynomial defines on the rank-`n` group.
    pub fn from_char_poly(kind: GroupKind, n: usize, p: &CharacterPolynomial) -> Self {
        ClassFunction::from_fn(kind, n, |c| p.evaluate(c))
    }

    /// Builds from explicit values; every class must appear exactly once.
    pub fn from_values(
        kind: GroupKind,
        n: usize,
        values: BTreeMap<DoublePartition, BigRational>,
    ) -> Result<Self> {
        let classes = kind.classes(n);
        if values.len() != classes.len() || classes.iter().any(|c| !values.contains_key(c)) {
            return Err(Error::SizeMismatch { expected: classes.len(), actual: values.len() });
        }
        Ok(ClassFunction { kind, n, values })
    }

    pub fn trivial(kind: GroupKind, n: usize) -> Self {
        ClassFunction::from_fn(kind, n, |_| BigRational::one())
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self, class: &DoublePartition) -> Option<&BigRational> {
        self.values.get(class)
    }

    pub fn values(&self) -> &BTreeMap<DoublePartition, BigRational> {
        &self.values
    }

    fn group_label(&self) -> String {
        match self.kind {
            GroupKind::A => format!("S_{}", self.n),
            GroupKind::BC => format!("B_{}", self.n),
        }
    }
}

/// `(1/|G|) Σ_classes |class| f g`.
pub fn inner_product(f: &ClassFunction, g: &ClassFunction) -> Result<BigRational> {
    if f.kind != g.kind || f.n != g.n {
        return Err(Error::GroupMismatch(f.group_label(), g.group_label()));
    }
    let mut acc = BigRational::zero();
    for (c, v) in &f.values {
        let w = &g.values[c];
        if v.is_zero() || w.is_zero() {
            continue;
        }
        acc += BigRational::from_integer(f.kind.class_size(c)) * v * w;
    }
    Ok(acc / BigRational::from_integer(f.kind.group_order(f.n)))
}

/// `⟨P, χ⟩` where the character polynomial is evaluated on each class;
/// avoids materializing the class function of `P`.
pub fn inner_product_with_poly(p: &CharacterPolynomial, chi: &ClassFunction) -> BigRational {
    let kind = chi.kind;
    let mut acc = BigRational::zero();
    for (c, v) in &chi.values {
        if v.is_zero() {
            continue;
        }
        let pv = p.evaluate(c);
        if !pv.is_zero() {
            acc += BigRational::from_integer(kind.class_size(c)) * pv * v;
        }
    }
    acc / BigRational::from_integer(kind.group_order(chi.n))
}

/// `Σ_i χ_{R_n^i}(σ) z^i` for every class, as integer polynomials in `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedCharacter {
    kind: GroupKind,
    n: usize,
    polys: BTreeMap<DoublePartition, IntPoly>,
}

impl GradedCharacter {
    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn polys(&self) -> &BTreeMap<DoublePartition, IntPoly> {
        &self.polys
    }

    pub fn poly(&self, class: &DoublePartition) -> Option<&IntPoly> {
        self.polys.get(class)
    }

    pub fn top_degree(&self) -> usize {
        self.kind.top_degree(self.n)
    }

    /// The character of `R_n^i` (zero beyond the top degree).
    pub fn component(&self, i: usize) -> ClassFunction {
        let values = self
            .polys
            .iter()
            .map(|(c, p)| (c.clone(), BigRational::from_integer(p.coeff(i))))
            .collect();
        ClassFunction { kind: self.kind, n: self.n, values }
    }
}

/// `∏_{i≤n} (1 − z^{step·i})`, the numerator shared by every class.
fn degree_numerator(kind: GroupKind, n: usize) -> IntPoly {
    let step = match kind {
        GroupKind::A => 1,
        GroupKind::BC => 2,
    };
    (1..=n).fold(IntPoly::one(), |acc, i| &acc * &IntPoly::binomial_factor(-1, step * i))
}

/// `∏_r (1 − z^r)^{n_r(μ)} (1 + z^r)^{n_r(λ)}`; in type A only `μ` is present.
fn class_denominator(class: &DoublePartition) -> IntPoly {
    let mut acc = IntPoly::one();
    for &r in class.positive.parts() {
        acc = &acc * &IntPoly::binomial_factor(-1, r);
    }
    for &r in class.negative.parts() {
        acc = &acc * &IntPoly::binomial_factor(1, r);
    }
    acc
}

fn graded_poly(kind: GroupKind, class: &DoublePartition) -> Result<IntPoly> {
    let n = class.size();
    let q = degree_numerator(kind, n)
        .exact_div(&class_denominator(class))
        .ok_or_else(|| Error::Internal(format!("graded character of {class} is not a polynomial")))?;
    if q.degree() != Some(kind.top_degree(n)) {
        return Err(Error::Internal(format!(
            "graded character of {class} has degree {:?}, expected {}",
            q.degree(),
            kind.top_degree(n)
        )));
    }
    Ok(q)
}

/// Graded character of the coinvariant algebra of either family.
pub fn graded_char(kind: GroupKind, n: usize) -> Result<GradedCharacter> {
    let polys: Vec<_> = kind
        .classes(n)
        .into_par_iter()
        .map(|c| graded_poly(kind, &c).map(|p| (c, p)))
        .collect::<Result<_>>()?;
    Ok(GradedCharacter { kind, n, polys: polys.into_iter().collect() })
}

/// `∏(1 − z^{2i}) / ∏_r (1 − z^r)^{X_r} (1 + z^r)^{Y_r}` on every class of `B_n`.
pub fn graded_char_bc(n: usize) -> Result<GradedCharacter> {
    graded_char(GroupKind::BC, n)
}

/// `∏(1 − z^i) / ∏_r (1 − z^r)^{X_r}` on every class of `S_n`.
pub fn graded_char_a(n: usize) -> Result<GradedCharacter> {
    graded_char(GroupKind::A, n)
}

/// Coefficients `χ_{R_n^i}(class)` for `i ≤ order`, without forming the full
/// polynomial. `n` is the class size.
pub fn graded_char_truncated(kind: GroupKind, class: &DoublePartition, order: usize) -> Vec<BigInt> {
    let mut a = vec![BigInt::zero(); order + 1];
    a[0] = BigInt::one();
    let step = if kind == GroupKind::A { 1 } else { 2 };
    for i in 1..=class.size() {
        let s = step * i;
        for j in (s..=order).rev() {
            let t = a[j - s].clone();
            a[j] -= t;
        }
    }
    for &r in class.positive.parts() {
        for j in r..=order {
            let t = a[j - r].clone();
            a[j] += t;
        }
    }
    for &r in class.negative.parts() {
        for j in r..=order {
            let t = a[j - r].clone();
            a[j] -= t;
        }
    }
    a
}

/// Characters of `R_n^0, …, R_n^order` as class functions.
pub fn graded_components(kind: GroupKind, n: usize, order: usize) -> Vec<ClassFunction> {
    let rows: Vec<(DoublePartition, Vec<BigInt>)> = kind
        .classes(n)
        .into_par_iter()
        .map(|c| {
            let v = graded_char_truncated(kind, &c, order);
            (c, v)
        })
        .collect();
    (0..=order)
        .map(|i| ClassFunction {
            kind,
            n,
            values: rows
                .iter()
                .map(|(c, v)| (c.clone(), BigRational::from_integer(v[i].clone())))
                .collect(),
        })
        .collect()
}

/// `Q_0, …, Q_D` from `∏_k (1 − t^k)^{1 − X_k} (1 + t^k)^{1 − Y_k}`, each
/// factor expanded by the generalized binomial series. Factors with `k > D`
/// are `1 + O(t^{D+1})` and are skipped.
pub fn q_char_polys(max_degree: usize) -> Vec<CharacterPolynomial> {
    q_series(max_degree, max_degree)
        .dense()
        .expect("finite order")
}

fn q_series(max_degree: usize, factors: usize) -> TruncatedSeries<CharacterPolynomial> {
    let one = CharacterPolynomial::one();
    let mut s = TruncatedSeries::one_to(max_degree);
    for k in 1..=factors {
        let ex = &one - &CharacterPolynomial::x(k);
        let ey = &one - &CharacterPolynomial::y(k);
        s = s.mul(&TruncatedSeries::pow_binomial(-1, k, &ex, max_degree));
        s = s.mul(&TruncatedSeries::pow_binomial(1, k, &ey, max_degree));
    }
    s
}

/// Outcome of comparing `Q_i` with `χ_{R_n^i}` on every class of `B_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StableRangeReport {
    pub n: usize,
    /// Largest `i` with agreement for all `j ≤ i` (checked up to `2n + 2`).
    pub agree_through: Option<usize>,
    /// First `(i, class)` where they differ.
    pub first_mismatch: Option<(usize, String)>,
}

impl StableRangeReport {
    /// Agreement exactly for `i ≤ 2n + 1`.
    pub fn is_sharp(&self) -> bool {
        self.agree_through == Some(2 * self.n + 1)
            && self.first_mismatch.as_ref().map(|m| m.0) == Some(2 * self.n + 2)
    }
}

/// Checks agreement for `i ≤ 2n + 1` and disagreement at `i = 2n + 2`.
pub fn verify_stable_range(n: usize) -> Result<StableRangeReport> {
    let top = 2 * n + 2;
    let qs = q_char_polys(top);
    let gc = graded_char_bc(n)?;
    let mut report = StableRangeReport { n, agree_through: None, first_mismatch: None };
    'outer: for (i, q) in qs.iter().enumerate() {
        for (c, p) in gc.polys() {
            if q.evaluate(c) != BigRational::from_integer(p.coeff(i)) {
                report.first_mismatch = Some((i, c.to_string()));
                break 'outer;
            }
        }
        report.agree_through = Some(i);
    }
    if !report.is_sharp() {
        return Err(Error::Verification(format!(
            "stable range for B_{n}: agreement through {:?}, first mismatch {:?}",
            report.agree_through, report.first_mismatch
        )));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn dp(s: &str) -> DoublePartition {
        s.parse().unwrap()
    }

    fn ints(p: &IntPoly) -> Vec<i64> {
        p.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn small_graded_characters() {
        let g1 = graded_char_bc(1).unwrap();
        assert_eq!(ints(g1.poly(&dp("1|")).unwrap()), [1, 1]);
        assert_eq!(ints(g1.poly(&dp("|1")).unwrap()), [1, -1]);
        let g2 = graded_char_bc(2).unwrap();
        assert_eq!(ints(g2.poly(&dp("1,1|")).unwrap()), [1, 2, 2, 2, 1]);
        let a2 = graded_char_a(2).unwrap();
        assert_eq!(ints(a2.poly(&dp("1,1|")).unwrap()), [1, 1]);
        assert_eq!(ints(a2.poly(&dp("2|")).unwrap()), [1, -1]);
    }

    #[test]
    fn dimension_and_trivial_degree_zero() {
        for n in 0..=6 {
            for kind in [GroupKind::A, GroupKind::BC] {
                let g = graded_char(kind, n).unwrap();
                let id = DoublePartition::identity(n);
                let total: BigInt = g.poly(&id).unwrap().coeffs().iter().sum();
                assert_eq!(total, kind.group_order(n));
                for p in g.polys().values() {
                    assert_eq!(p.coeff(0), BigInt::one());
                }
            }
        }
    }

    #[test]
    fn identity_dimensions_are_palindromic() {
        for n in 0..=5 {
            for kind in [GroupKind::A, GroupKind::BC] {
                let g = graded_char(kind, n).unwrap();
                let id = DoublePartition::identity(n);
                let c = g.poly(&id).unwrap().coeffs().to_vec();
                let mut r = c.clone();
                r.reverse();
                assert_eq!(c, r);
            }
        }
    }

    #[test]
    fn trivial_appears_only_in_degree_zero() {
        for n in 0..=5 {
            let g = graded_char_bc(n).unwrap();
            let triv = ClassFunction::trivial(GroupKind::BC, n);
            for i in 0..=g.top_degree() {
                let ip = inner_product(&triv, &g.component(i)).unwrap();
                assert_eq!(ip, rat(if i == 0 { 1 } else { 0 }, 1), "n={n} i={i}");
            }
        }
    }

    #[test]
    fn truncated_matches_full() {
        for kind in [GroupKind::A, GroupKind::BC] {
            let g = graded_char(kind, 4).unwrap();
            for (c, p) in g.polys() {
                let t = graded_char_truncated(kind, c, 20);
                for (i, v) in t.iter().enumerate() {
                    assert_eq!(*v, p.coeff(i), "{c} {i}");
                }
            }
        }
    }

    #[test]
    fn inner_products() {
        let triv = ClassFunction::trivial(GroupKind::A, 3);
        assert_eq!(inner_product(&triv, &triv).unwrap(), rat(1, 1));
        let r1 = graded_char_bc(1).unwrap().component(1);
        let sign = ClassFunction::from_char_poly(GroupKind::BC, 1, &"X1 - Y1".parse().unwrap());
        assert_eq!(inner_product(&r1, &sign).unwrap(), rat(1, 1));
        let r = graded_char_bc(2).unwrap().component(1);
        let cn = ClassFunction::from_char_poly(GroupKind::BC, 2, &"X1 - Y1".parse().unwrap());
        assert_eq!(inner_product(&cn, &r).unwrap(), rat(1, 1));
        assert_eq!(inner_product_with_poly(&"X1 - Y1".parse().unwrap(), &r), rat(1, 1));
        assert!(matches!(inner_product(&triv, &r), Err(Error::GroupMismatch(..))));
    }

    #[test]
    fn q_polys_low_degree() {
        let qs = q_char_polys(2);
        assert_eq!(qs[0], CharacterPolynomial::one());
        assert_eq!(qs[1], "X1 - Y1".parse().unwrap());
        assert_eq!(
            qs[2],
            "-1 + 1/2*X1 + 1/2*Y1 + 1/2*X1^2 + 1/2*Y1^2 - X1*Y1 + X2 - Y2".parse().unwrap()
        );
    }

    #[test]
    fn extra_factor_does_not_change_low_degrees() {
        for d in 1..=5 {
            assert_eq!(q_series(d, d), q_series(d, d + 1));
        }
    }

    #[test]
    fn stable_range_is_sharp() {
        for n in 0..=3 {
            let r = verify_stable_range(n).unwrap();
            assert!(r.is_sharp());
        }
        let r0 = verify_stable_range(0).unwrap();
        assert_eq!(r0.first_mismatch, Some((2, "|".to_string())));
        let r1 = verify_stable_range(1).unwrap();
        assert_eq!(r1.first_mismatch.unwrap().0, 4);
    }
}
