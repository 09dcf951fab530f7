//! Stable twisted Betti numbers of the space of maximal tori in `Sp_2n(ℂ)`:
//! the rational generating function `Σ β_i z^i`, its linear recurrence and
//! quasipolynomial forms, direct computation from the coinvariant algebra,
//! and the double generating function in `u` and `z`.

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::charpoly::CharacterPolynomial;
use crate::coinvariant::{graded_char_truncated, GroupKind};
use crate::error::{Error, Result};
use crate::exactmath::{IntPoly, Poly, RationalFunction, TruncatedSeries};
use crate::partitions::DoublePartition;

/// `Σ_i β_i z^i` for a character polynomial, reduced to lowest terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiGF {
    poly: CharacterPolynomial,
    gf: RationalFunction,
}

/// `(1/(v_μ v_λ)) ∏ (1 − z^r)^{−n_r(μ)} (1 + z^r)^{−n_r(λ)}`.
pub fn binomial_element_gf(label: &DoublePartition) -> RationalFunction {
    let mut den = IntPoly::constant(label.centralizer_bc());
    for &r in label.positive.parts() {
        den = &den * &IntPoly::binomial_factor(-1, r);
    }
    for &r in label.negative.parts() {
        den = &den * &IntPoly::binomial_factor(1, r);
    }
    RationalFunction::from_int_polys(IntPoly::one(), den).expect("nonzero denominator")
}

/// The stable Betti generating function of `P`, by linearity over the
/// binomial basis.
pub fn stable_betti_gf(p: &CharacterPolynomial) -> BettiGF {
    let gf = p
        .to_binomial_basis()
        .iter()
        .fold(RationalFunction::zero(), |acc, (label, c)| &acc + &binomial_element_gf(label).scale(c));
    BettiGF { poly: p.clone(), gf }
}

impl BettiGF {
    pub fn poly(&self) -> &CharacterPolynomial {
        &self.poly
    }

    pub fn gf(&self) -> &RationalFunction {
        &self.gf
    }

    /// Numerator and denominator scaled so that the denominator has constant
    /// term 1.
    pub fn normalized_parts(&self) -> (Poly, Poly) {
        let num = self.gf.numerator();
        let den = self.gf.denominator();
        let c = den.coeff(0);
        let inv = c.recip();
        (num.scale(&inv), den.scale(&inv))
    }

    /// `β_0, …, β_n`.
    pub fn coeffs(&self, n: usize) -> Vec<BigRational> {
        self.gf.taylor(n).expect("denominator is a unit at z = 0")
    }

    /// `lcm{2k : k ≤ deg P}`.
    pub fn period_bound(&self) -> usize {
        (1..=self.poly.degree()).fold(1, |m, k| m.lcm(&(2 * k)))
    }

    /// Checks that every pole is a root of unity: the denominator divides
    /// `(1 − z^M)^D` with `M = lcm{2k : k ≤ D}`, `D = deg P`.
    pub fn check_poles(&self) -> Result<()> {
        let d = self.poly.degree();
        let bound = IntPoly::binomial_factor(-1, self.period_bound()).pow(d as u32);
        match bound.exact_div(&self.gf.int_denominator().primitive()) {
            Some(_) => Ok(()),
            None => Err(Error::Verification(format!(
                "denominator of {} does not divide (1 - z^{})^{d}",
                self.display(),
                self.period_bound()
            ))),
        }
    }

    pub fn display(&self) -> String {
        self.gf.display_with("z")
    }
}

/// `β_{i} = Σ_j d_j β_{i−j}` for `i ≥ valid_from`, with `β_{<0} = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRecurrence {
    /// `d_1, …, d_N`
    coefficients: Vec<BigRational>,
    valid_from: usize,
}

impl LinearRecurrence {
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    pub fn valid_from(&self) -> usize {
        self.valid_from
    }

    /// Lags `j` with `d_j ≠ 0`, paired with `d_j`.
    pub fn lags(&self) -> Vec<(usize, BigRational)> {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, d)| !d.is_zero())
            .map(|(j, d)| (j + 1, d.clone()))
            .collect()
    }

    fn predict(&self, seq: &[BigRational], i: usize) -> BigRational {
        self.lags()
            .iter()
            .filter(|(j, _)| *j <= i)
            .map(|(j, d)| d * &seq[i - j])
            .sum()
    }

    /// Extends the first `valid_from` terms to `len` terms.
    pub fn unroll(&self, initial: &[BigRational], len: usize) -> Result<Vec<BigRational>> {
        if initial.len() < self.valid_from {
            return Err(Error::SizeMismatch { expected: self.valid_from, actual: initial.len() });
        }
        let mut seq: Vec<BigRational> = initial[..self.valid_from.min(len)].to_vec();
        while seq.len() < len {
            let next = self.predict(&seq, seq.len());
            seq.push(next);
        }
        Ok(seq)
    }

    /// Index of the first term from `valid_from` on that breaks the relation.
    pub fn first_failure(&self, seq: &[BigRational]) -> Option<usize> {
        (self.valid_from..seq.len()).find(|&i| self.predict(seq, i) != seq[i])
    }
}

/// Recurrence from the reduced generating function `A/B`, `B(0) = 1`:
/// `d_j = −B_j` and `valid_from = deg A + 1`. Checked on `3N` terms past
/// `valid_from`, against `N ≤ 2 deg(P)²`, and against `N = deg P` when `P`
/// is a single binomial-basis element.
pub fn recurrence(gf: &BettiGF) -> Result<LinearRecurrence> {
    let (num, den) = gf.normalized_parts();
    let n = den.degree().unwrap_or(0);
    let coefficients = (1..=n).map(|j| -den.coeff(j)).collect();
    let valid_from = num.degree().map_or(0, |d| d + 1);
    let rec = LinearRecurrence { coefficients, valid_from };
    let seq = gf.coeffs(valid_from + 3 * n.max(1));
    if let Some(i) = rec.first_failure(&seq) {
        return Err(Error::Verification(format!("recurrence fails at β_{i} for {}", gf.poly)));
    }
    let deg = gf.poly.degree();
    if n > 2 * deg * deg {
        return Err(Error::Verification(format!("recurrence order {n} exceeds 2 deg(P)^2 = {}", 2 * deg * deg)));
    }
    let basis = gf.poly.to_binomial_basis();
    if basis.len() == 1 && n != deg {
        return Err(Error::Verification(format!("recurrence order {n} differs from deg P = {deg}")));
    }
    Ok(rec)
}

/// `β_i = polys[i mod period](i)` for `i ≥ valid_from`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quasipolynomial {
    period: usize,
    polys: Vec<Poly>,
    valid_from: usize,
}

impl Quasipolynomial {
    pub fn period(&self) -> usize {
        self.period
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn valid_from(&self) -> usize {
        self.valid_from
    }

    pub fn eval(&self, i: usize) -> BigRational {
        self.polys[i % self.period].eval(&BigRational::from_integer(i.into()))
    }

    /// Residue classes grouped by their polynomial, in order of first residue.
    pub fn cases(&self) -> Vec<(Vec<usize>, Poly)> {
        let mut out: Vec<(Vec<usize>, Poly)> = Vec::new();
        for (r, p) in self.polys.iter().enumerate() {
            match out.iter_mut().find(|(_, q)| q == p) {
                Some((rs, _)) => rs.push(r),
                None => out.push((vec![r], p.clone())),
            }
        }
        out
    }
}

/// Lagrange interpolation through `(x_k, y_k)`.
fn interpolate(points: &[(BigRational, BigRational)]) -> Poly {
    let mut acc = Poly::zero();
    for (k, (xk, yk)) in points.iter().enumerate() {
        let mut basis = Poly::constant(yk.clone());
        for (j, (xj, _)) in points.iter().enumerate() {
            if j != k {
                let factor = Poly::new(vec![-xj.clone(), BigRational::one()]);
                basis = (&basis * &factor).scale(&(xk - xj).recip());
            }
        }
        acc = &acc + &basis;
    }
    acc
}

/// Quasipolynomial form by interpolating `deg P` points in each residue
/// class. Candidate periods are the divisors of `lcm{2k : k ≤ deg P}` in
/// increasing order; a candidate is accepted once it reproduces every term
/// up to `valid_from + M·deg P + 2·period`, which pins down the sequence.
pub fn quasipolynomial(gf: &BettiGF) -> Result<Quasipolynomial> {
    let d = gf.poly.degree();
    let bound = gf.period_bound();
    let (num, den) = gf.normalized_parts();
    let valid_from = match (num.degree(), den.degree()) {
        (Some(a), Some(b)) if a >= b => a - b + 1,
        (Some(a), None) => a + 1,
        _ => 0,
    };
    let horizon = valid_from + bound * d.max(1) + 2 * bound;
    let seq = gf.coeffs(horizon);
    for period in (1..=bound).filter(|m| bound.is_multiple_of(*m)) {
        let polys: Vec<Poly> = (0..period)
            .map(|r| {
                let first = (valid_from..).find(|i| i % period == r).expect("unbounded range");
                let points: Vec<_> = (0..d)
                    .map(|k| {
                        let i = first + k * period;
                        (BigRational::from_integer(i.into()), seq[i].clone())
                    })
                    .collect();
                interpolate(&points)
            })
            .collect();
        let q = Quasipolynomial { period, polys, valid_from };
        if (valid_from..=horizon).all(|i| q.eval(i) == seq[i]) {
            return Ok(q);
        }
    }
    Err(Error::Verification(format!(
        "no quasipolynomial of degree < {d} with period dividing {bound} fits {}",
        gf.display()
    )))
}

/// `⟨P, χ_{R_n^i}⟩` for `i = 0..=order`, from truncated graded characters.
pub fn twisted_betti_numbers(kind: GroupKind, p: &CharacterPolynomial, n: usize, order: usize) -> Result<Vec<BigRational>> {
    if kind == GroupKind::A && !p.is_type_a() {
        return Err(Error::InvalidInput(format!("{p} involves Y_r, which type A does not have")));
    }
    let zero = || vec![BigRational::zero(); order + 1];
    let total = kind
        .classes(n)
        .par_iter()
        .map(|c| {
            let pv = p.evaluate(c);
            let mut row = zero();
            if pv.is_zero() {
                return row;
            }
            let w = BigRational::from_integer(kind.class_size(c)) * pv;
            for (slot, chi) in row.iter_mut().zip(graded_char_truncated(kind, c, order)) {
                if !chi.is_zero() {
                    *slot = &w * BigRational::from_integer(chi);
                }
            }
            row
        })
        .reduce(zero, |a, b| a.into_iter().zip(b).map(|(x, y)| x + y).collect());
    let order_g = BigRational::from_integer(kind.group_order(n));
    Ok(total.into_iter().map(|v| v / &order_g).collect())
}

/// A stable Betti number computed at `n* = deg P + i` and confirmed at `n* + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StableBetti {
    pub i: usize,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub value: BigRational,
    pub n_star: usize,
}

/// `β_i` for `i = 0..=max_i`. Each needed `n` is computed once; an
/// instability between `n*` and `n* + 1` is a verification failure.
pub fn stable_betti_direct_range(p: &CharacterPolynomial, max_i: usize) -> Result<Vec<StableBetti>> {
    let d = p.degree();
    let rows: Vec<Vec<BigRational>> = (d..=d + max_i + 1)
        .into_par_iter()
        .map(|n| twisted_betti_numbers(GroupKind::BC, p, n, max_i))
        .collect::<Result<_>>()?;
    (0..=max_i)
        .map(|i| {
            let (at, next) = (&rows[i][i], &rows[i + 1][i]);
            if at != next {
                return Err(Error::Verification(format!(
                    "⟨{p}, R_n^{i}⟩ is {at} at n = {} but {next} at n = {}",
                    d + i,
                    d + i + 1
                )));
            }
            Ok(StableBetti { i, value: at.clone(), n_star: d + i })
        })
        .collect()
}

pub fn stable_betti_direct(p: &CharacterPolynomial, i: usize) -> Result<StableBetti> {
    let d = p.degree();
    let at = twisted_betti_numbers(GroupKind::BC, p, d + i, i)?;
    let next = twisted_betti_numbers(GroupKind::BC, p, d + i + 1, i)?;
    if at[i] != next[i] {
        return Err(Error::Verification(format!(
            "⟨{p}, R_n^{i}⟩ is {} at n = {} but {} at n = {}",
            at[i],
            d + i,
            next[i],
            d + i + 1
        )));
    }
    Ok(StableBetti { i, value: at[i].clone(), n_star: d + i })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoubleGfReport {
    pub class: String,
    pub n_max: usize,
    pub z_order: usize,
    /// `[u^n]` of both sides, as `z`-coefficients.
    pub coefficients: Vec<Vec<String>>,
}

type ZSeries = TruncatedSeries<BigRational>;

/// Checks `Σ_n Σ_i β_i(n) z^i u^n / ∏_{k≤n}(1 − z^{2k})` against
/// `(1/(v_μ v_λ)) ∏ (u^r/(1 − z^r))^{n_r(μ)} (u^r/(1 + z^r))^{n_r(λ)} ∏_{r≥1} 1/(1 − u z^{2r−2})`
/// coefficientwise for `n ≤ n_max`, `i ≤ z_order`.
pub fn verify_double_gf(label: &DoublePartition, n_max: usize, z_order: usize) -> Result<DoubleGfReport> {
    let rhs = double_gf_rhs(label, n_max, z_order);
    let stat = CharacterPolynomial::binom_basis_element(&label.positive, &label.negative);
    let lhs: Vec<ZSeries> = (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let betti = twisted_betti_numbers(GroupKind::BC, &stat, n, z_order)?;
            let poincare = (1..=n).fold(ZSeries::one_to(z_order), |acc, k| {
                acc.mul(&ZSeries::pow_binomial_int(-1, 2 * k, -1, z_order))
            });
            Ok(ZSeries::new(betti, z_order).mul(&poincare))
        })
        .collect::<Result<_>>()?;
    let mut coefficients = Vec::new();
    for (n, (l, r)) in lhs.iter().zip(&rhs).enumerate() {
        let (l, r) = (l.dense()?, r.dense()?);
        if let Some(i) = (0..=z_order).find(|&i| l[i] != r[i]) {
            return Err(Error::Verification(format!(
                "double generating function for {label} differs at u^{n} z^{i}: {} vs {}",
                l[i], r[i]
            )));
        }
        coefficients.push(l.iter().map(ToString::to_string).collect());
    }
    Ok(DoubleGfReport { class: label.to_string(), n_max, z_order, coefficients })
}

/// The right-hand side as `u`-coefficients, each a `z`-series.
fn double_gf_rhs(label: &DoublePartition, n_max: usize, z_order: usize) -> Vec<ZSeries> {
    // ∏_{r≥1} 1/(1 − u z^{2r−2}); factors with 2r − 2 > z_order are 1 here
    let mut product: Vec<ZSeries> = (0..=n_max)
        .map(|n| if n == 0 { ZSeries::one_to(z_order) } else { ZSeries::zero_to(z_order) })
        .collect();
    for r in 1..=z_order / 2 + 1 {
        for n in 1..=n_max {
            let prev = product[n - 1].shift(2 * r - 2).truncate(z_order);
            product[n] = product[n].add(&prev);
        }
    }
    let mut pre = ZSeries::one_to(z_order).scale(&BigRational::from_integer(label.centralizer_bc()).recip());
    for &r in label.positive.parts() {
        pre = pre.mul(&ZSeries::pow_binomial_int(-1, r, -1, z_order));
    }
    for &r in label.negative.parts() {
        pre = pre.mul(&ZSeries::pow_binomial_int(1, r, -1, z_order));
    }
    let shift = label.size();
    (0..=n_max)
        .map(|n| if n < shift { ZSeries::zero_to(z_order) } else { pre.mul(&product[n - shift]) })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    pub poly: String,
    pub max_i: usize,
    pub values: Vec<StableBetti>,
}

/// Twisted homological stability: `⟨P, R_n^i⟩` agrees at `n = deg P + i` and
/// `n + 1` for every `i ≤ max_i`.
pub fn verify_twisted_stability(p: &CharacterPolynomial, max_i: usize) -> Result<StabilityReport> {
    Ok(StabilityReport { poly: p.to_string(), max_i, values: stable_betti_direct_range(p, max_i)? })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub poly: String,
    pub max_i: usize,
    pub betti: Vec<String>,
}

/// `betti_coeffs = stable_betti_direct = recurrence unrolling =
/// quasipolynomial evaluation` for `i ≤ max_i`.
pub fn verify_consistency(p: &CharacterPolynomial, max_i: usize) -> Result<ConsistencyReport> {
    let gf = stable_betti_gf(p);
    gf.check_poles()?;
    let series = gf.coeffs(max_i);
    let direct = stable_betti_direct_range(p, max_i)?;
    let rec = recurrence(&gf)?;
    let initial = gf.coeffs(rec.valid_from());
    let unrolled = rec.unroll(&initial[..rec.valid_from()], max_i + 1)?;
    let qp = quasipolynomial(&gf)?;
    for i in 0..=max_i {
        let from_qp = if i >= qp.valid_from() { qp.eval(i) } else { series[i].clone() };
        let values = [&direct[i].value, &unrolled[i], &from_qp];
        if values.iter().any(|v| **v != series[i]) {
            return Err(Error::Verification(format!(
                "β_{i} of {p}: series {}, direct {}, recurrence {}, quasipolynomial {}",
                series[i], values[0], values[1], values[2]
            )));
        }
    }
    Ok(ConsistencyReport { poly: p.to_string(), max_i, betti: series.iter().map(ToString::to_string).collect() })
}

/// Indices whose value is not a nonnegative integer.
pub fn non_integral_indices(values: &[BigRational]) -> Vec<usize> {
    values
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_integer() || *v < &BigRational::zero())
        .map(|(i, _)| i)
        .collect()
}
