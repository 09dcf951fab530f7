//! F-stable maximal tori of `GL_n` (type A) and `Sp_2n` / `SO_2n+1` (type
//! B/C): counts by type as functions of `q`, polynomial statistics, Lehrer's
//! identity, asymptotic limits and the generating functions behind them.
//!
//! Everything symbolic is a [`RationalFunction`] in `q`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::charpoly::CharacterPolynomial;
use crate::coinvariant::{graded_char, inner_product, ClassFunction, GroupKind};
use crate::error::{Error, Result};
use crate::exactmath::{IntPoly, Poly, RationalFunction, TruncatedSeries};
use crate::partitions::{DoublePartition, Partition};

type Series = TruncatedSeries<RationalFunction>;

fn q_pow(k: usize) -> RationalFunction {
    RationalFunction::monomial(k)
}

/// `|GL_n(F_q)| = q^{n(n−1)/2} ∏(q^i − 1)` or `|Sp_2n(F_q)| = q^{n²} ∏(q^{2i} − 1)`.
pub fn group_order_poly(kind: GroupKind, n: usize) -> IntPoly {
    let (shift, step) = match kind {
        GroupKind::A => (n * n.saturating_sub(1) / 2, 1),
        GroupKind::BC => (n * n, 2),
    };
    (1..=n).fold(IntPoly::monomial(BigInt::one(), shift), |acc, i| {
        &acc * &(-&IntPoly::binomial_factor(-1, step * i))
    })
}

pub fn group_order(kind: GroupKind, n: usize) -> RationalFunction {
    RationalFunction::from_int_poly(group_order_poly(kind, n))
}

/// Number of tori in total: `q^{n²−n}` or `q^{2n²}`.
pub fn total_tori(kind: GroupKind, n: usize) -> RationalFunction {
    q_pow(match kind {
        GroupKind::A => n * n - n,
        GroupKind::BC => 2 * n * n,
    })
}

/// `∏(q^r − 1)^{n_r(μ)} (q^r + 1)^{n_r(λ)}`, the order of `T^F`.
fn torus_order_poly(class: &DoublePartition) -> IntPoly {
    let mut acc = IntPoly::one();
    for &r in class.positive.parts() {
        acc = &acc * &(-&IntPoly::binomial_factor(-1, r));
    }
    for &r in class.negative.parts() {
        acc = &acc * &IntPoly::binomial_factor(1, r);
    }
    acc
}

fn centralizer(kind: GroupKind, class: &DoublePartition) -> BigInt {
    match kind {
        GroupKind::A => class.positive.z(),
        GroupKind::BC => class.centralizer_bc(),
    }
}

fn check_class(kind: GroupKind, class: &DoublePartition) -> Result<()> {
    if !kind.accepts(class) {
        return Err(Error::InvalidInput(format!("{class} is not a class of a type-A group")));
    }
    Ok(())
}

/// Count of tori of the given type as a polynomial in `q` with rational
/// coefficients.
fn count_tori_poly(kind: GroupKind, class: &DoublePartition) -> Result<Poly> {
    check_class(kind, class)?;
    let quot = group_order_poly(kind, class.size())
        .exact_div(&torus_order_poly(class))
        .ok_or_else(|| Error::Internal(format!("torus order does not divide group order for {class}")))?;
    let c = BigRational::from_integer(centralizer(kind, class)).recip();
    Ok(quot.to_poly().scale(&c))
}

/// Tori of type `class`: `|G^F| / (|C_W(w)| |T_w^F|)`.
pub fn count_tori(kind: GroupKind, class: &DoublePartition) -> Result<RationalFunction> {
    count_tori_poly(kind, class).map(|p| RationalFunction::from_poly(&p))
}

pub fn count_tori_a(lambda: &Partition, n: usize) -> Result<RationalFunction> {
    if lambda.size() != n {
        return Err(Error::SizeMismatch { expected: n, actual: lambda.size() });
    }
    count_tori(GroupKind::A, &DoublePartition::type_a(lambda.clone()))
}

pub fn count_tori_bc(class: &DoublePartition, n: usize) -> Result<RationalFunction> {
    if class.size() != n {
        return Err(Error::SizeMismatch { expected: n, actual: class.size() });
    }
    count_tori(GroupKind::BC, class)
}

/// The count at a specific `q`, without symbolic arithmetic.
pub fn count_tori_at(kind: GroupKind, class: &DoublePartition, q: &BigRational) -> Result<BigRational> {
    check_class(kind, class)?;
    let g = group_order_poly(kind, class.size()).eval(q);
    let t = torus_order_poly(class).eval(q);
    if t.is_zero() {
        return Err(Error::Pole);
    }
    Ok(g / (t * BigRational::from_integer(centralizer(kind, class))))
}

fn require_type(kind: GroupKind, p: &CharacterPolynomial) -> Result<()> {
    if kind == GroupKind::A && !p.is_type_a() {
        return Err(Error::InvalidInput(format!("{p} involves Y_r, which type A does not have")));
    }
    Ok(())
}

fn weighted_sum(kind: GroupKind, n: usize, value: impl Fn(&DoublePartition) -> BigRational + Sync) -> Result<RationalFunction> {
    let parts: Vec<Poly> = kind
        .classes(n)
        .par_iter()
        .map(|c| {
            let v = value(c);
            if v.is_zero() {
                Ok(Poly::zero())
            } else {
                count_tori_poly(kind, c).map(|p| p.scale(&v))
            }
        })
        .collect::<Result<_>>()?;
    let total = parts.iter().fold(Poly::zero(), |acc, p| &acc + p);
    Ok(RationalFunction::from_poly(&total))
}

/// `Σ_{T ∈ T(n,q)} P(T)`.
pub fn statistic_sum(kind: GroupKind, p: &CharacterPolynomial, n: usize) -> Result<RationalFunction> {
    require_type(kind, p)?;
    weighted_sum(kind, n, |c| p.evaluate(c))
}

/// `Σ_T χ(T)` for a class function on the Weyl group.
pub fn class_function_sum(chi: &ClassFunction) -> Result<RationalFunction> {
    weighted_sum(chi.kind(), chi.n(), |c| chi.value(c).cloned().unwrap_or_default())
}

/// `Σ_T P(T)` at a specific `q`.
pub fn statistic_sum_at(kind: GroupKind, p: &CharacterPolynomial, n: usize, q: &BigRational) -> Result<BigRational> {
    require_type(kind, p)?;
    let terms: Vec<BigRational> = kind
        .classes(n)
        .par_iter()
        .map(|c| {
            let v = p.evaluate(c);
            if v.is_zero() {
                Ok(v)
            } else {
                count_tori_at(kind, c, q).map(|k| k * v)
            }
        })
        .collect::<Result<_>>()?;
    Ok(terms.into_iter().sum())
}

/// `Σ_T P(T)` divided by the number of tori, at a specific `q`.
pub fn normalized_statistic_at(kind: GroupKind, p: &CharacterPolynomial, n: usize, q: &BigRational) -> Result<BigRational> {
    Ok(statistic_sum_at(kind, p, n, q)? / total_tori(kind, n).eval(q)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LehrerReport {
    pub family: GroupKind,
    pub n: usize,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

/// `Σ_T χ(T)` over the number of tori.
pub fn lehrer_lhs(chi: &ClassFunction) -> Result<RationalFunction> {
    Ok(&class_function_sum(chi)? / &total_tori(chi.kind(), chi.n()))
}

/// `Σ_i q^{−i} ⟨χ, χ_{R_n^i}⟩`.
pub fn lehrer_rhs(chi: &ClassFunction) -> Result<RationalFunction> {
    let graded = graded_char(chi.kind(), chi.n())?;
    let top = graded.top_degree();
    let mut coeffs = vec![BigRational::zero(); top + 1];
    for i in 0..=top {
        coeffs[top - i] = inner_product(chi, &graded.component(i))?;
    }
    Ok(&RationalFunction::from_poly(&Poly::new(coeffs)) / &q_pow(top))
}

/// Both sides of Lehrer's identity, compared as canonical rational functions.
pub fn lehrer_verify(chi: &ClassFunction) -> Result<LehrerReport> {
    let lhs = lehrer_lhs(chi)?;
    let rhs = lehrer_rhs(chi)?;
    let holds = lhs == rhs;
    if !holds {
        return Err(Error::Verification(format!(
            "Lehrer identity fails for family {} at n = {}: lhs {lhs}, rhs {rhs}",
            chi.kind(),
            chi.n()
        )));
    }
    Ok(LehrerReport {
        family: chi.kind(),
        n: chi.n(),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        holds,
    })
}

/// Limit of the normalized statistic `binom(X, μ) binom(Y, λ)`:
/// `(1/(v_μ v_λ)) ∏ (q^r/(q^r − 1))^{n_r(μ)} (q^r/(q^r + 1))^{n_r(λ)}`, or
/// `(1/z_λ) ∏ (q^r/(q^r − 1))^{n_r(λ)}` in type A.
pub fn asymptotic_limit_basis(kind: GroupKind, label: &DoublePartition) -> Result<RationalFunction> {
    check_class(kind, label)?;
    let mut acc = RationalFunction::constant(&BigRational::from_integer(centralizer(kind, label)).recip());
    for &r in label.positive.parts() {
        acc = &acc * &(&q_pow(r) / &RationalFunction::power_plus(r, -1));
    }
    for &r in label.negative.parts() {
        acc = &acc * &(&q_pow(r) / &RationalFunction::power_plus(r, 1));
    }
    Ok(acc)
}

/// `lim_n` of the normalized statistic, by linearity over the binomial basis.
pub fn asymptotic_limit(kind: GroupKind, p: &CharacterPolynomial) -> Result<RationalFunction> {
    require_type(kind, p)?;
    let mut acc = RationalFunction::zero();
    for (label, c) in p.to_binomial_basis() {
        acc = &acc + &asymptotic_limit_basis(kind, &label)?.scale(&c);
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvergenceReport {
    pub family: GroupKind,
    pub poly: String,
    pub q: u64,
    pub limit: String,
    /// `|normalized(n) − limit|` for `n = 1..=n_max`, rounded for display.
    pub abs_diffs: Vec<f64>,
    /// Exact `|diff|` at `n_max`.
    pub final_diff: String,
    pub tolerance: String,
    pub monotone_from: usize,
}

/// Evaluates the normalized statistic for `n = 1..=n_max` at `q` and checks
/// that `|diff|` is nonincreasing from `monotone_from` on and at most
/// `2 q^{−n_max}` at the end.
pub fn verify_convergence(
    kind: GroupKind,
    p: &CharacterPolynomial,
    n_max: usize,
    q: u64,
    monotone_from: usize,
) -> Result<ConvergenceReport> {
    if q < 2 {
        return Err(Error::InvalidInput("q must be at least 2".into()));
    }
    let qr = BigRational::from_integer(q.into());
    let limit_fn = asymptotic_limit(kind, p)?;
    let limit = limit_fn.eval(&qr)?;
    let diffs: Vec<BigRational> = (1..=n_max)
        .into_par_iter()
        .map(|n| normalized_statistic_at(kind, p, n, &qr).map(|v| (v - &limit).abs()))
        .collect::<Result<_>>()?;
    let tolerance = BigRational::from_integer(2.into()) / BigRational::from_integer(BigInt::from(q).pow(n_max as u32));
    for n in monotone_from.max(1)..n_max {
        if diffs[n] > diffs[n - 1] {
            return Err(Error::Verification(format!(
                "|diff| increases from n = {n} to n = {} for {p}",
                n + 1
            )));
        }
    }
    let last = diffs.last().cloned().unwrap_or_default();
    if last > tolerance {
        return Err(Error::Verification(format!(
            "|diff| = {} at n = {n_max} exceeds 2 q^-{n_max} for {p}",
            last.to_f64().unwrap_or(f64::NAN)
        )));
    }
    Ok(ConvergenceReport {
        family: kind,
        poly: p.to_string(),
        q,
        limit: limit_fn.to_string(),
        abs_diffs: diffs.iter().map(|d| d.to_f64().unwrap_or(f64::NAN)).collect(),
        final_diff: last.to_string(),
        tolerance: tolerance.to_string(),
        monotone_from,
    })
}

/// `[u^n]` of the geometric product in closed form: type A
/// `∏_{r≥1} 1/(1 − u/q^r)` has `q^{n(n−1)/2} / ∏_{i≤n}(q^i − 1)`; type B/C
/// `∏_{k≥1} 1/(1 − u/q^{2k−1})` has `q^{n²} / ∏_{i≤n}(q^{2i} − 1)`.
pub fn geometric_product_series(kind: GroupKind, order: usize) -> Series {
    let coeffs = (0..=order)
        .map(|n| {
            let (shift, step) = match kind {
                GroupKind::A => (n * n.saturating_sub(1) / 2, 1),
                GroupKind::BC => (n * n, 2),
            };
            let den = (1..=n).fold(IntPoly::one(), |acc, i| &acc * &(-&IntPoly::binomial_factor(-1, step * i)));
            RationalFunction::from_int_polys(IntPoly::monomial(BigInt::one(), shift), den).expect("nonzero")
        })
        .collect();
    Series::new(coeffs, order)
}

/// The exponential form: type A `∏_k exp[u^k / ((q^k − 1) k)]`, type B/C
/// `∏_k exp[u^k / ((q^k − 1) 2k) + u^k / ((q^k + 1) 2k)]`.
pub fn exp_product_series(kind: GroupKind, order: usize) -> Result<Series> {
    let mut arg = vec![RationalFunction::zero(); order + 1];
    for (k, slot) in arg.iter_mut().enumerate().skip(1) {
        let kk = RationalFunction::from_int(k as i64);
        *slot = match kind {
            GroupKind::A => (&RationalFunction::power_plus(k, -1) * &kk).inverse()?,
            GroupKind::BC => {
                let two_k = &kk * &RationalFunction::from_int(2);
                &(&RationalFunction::power_plus(k, -1) * &two_k).inverse()?
                    + &(&RationalFunction::power_plus(k, 1) * &two_k).inverse()?
            }
        };
    }
    Series::new(arg, order).exp()
}

/// The prefactor `(1/v_μ v_λ) ∏ (u^r/(q^r − 1))^{n_r(μ)} (u^r/(q^r + 1))^{n_r(λ)}`
/// (with `z_λ` in type A), times the geometric product.
pub fn average_gf_series(kind: GroupKind, label: &DoublePartition, order: usize) -> Result<Series> {
    check_class(kind, label)?;
    let torus = RationalFunction::from_int_poly(torus_order_poly(label));
    let c = &RationalFunction::from_int_poly(IntPoly::constant(centralizer(kind, label))) * &torus;
    let pre = Series::monomial(c.inverse()?, label.size()).truncate(order);
    Ok(pre.mul(&geometric_product_series(kind, order)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AverageGfReport {
    pub family: GroupKind,
    pub class: String,
    pub n_max: usize,
    /// `Σ_T binom(X, μ) binom(Y, λ)(T)` for `n = 0..=n_max`.
    pub sums: Vec<String>,
}

/// Checks `|G_n| [u^n] RHS = Σ_T binom(X, μ) binom(Y, λ)(T)` for `n ≤ n_max`,
/// after confirming that the exponential form equals the geometric product.
pub fn verify_average_gf(kind: GroupKind, label: &DoublePartition, n_max: usize) -> Result<AverageGfReport> {
    let geo = geometric_product_series(kind, n_max);
    let exp = exp_product_series(kind, n_max)?;
    if geo != exp {
        return Err(Error::Verification(format!("exponential and geometric products differ for family {kind}")));
    }
    let rhs = average_gf_series(kind, label, n_max)?;
    let stat = CharacterPolynomial::binom_basis_element(&label.positive, &label.negative);
    let mut sums = Vec::new();
    for n in 0..=n_max {
        let expected = &rhs.coefficient(n)? * &group_order(kind, n);
        let got = statistic_sum(kind, &stat, n)?;
        if expected != got {
            return Err(Error::Verification(format!(
                "average generating function for {label} at n = {n}: {expected} vs {got}"
            )));
        }
        sums.push(got.to_string());
    }
    Ok(AverageGfReport { family: kind, class: label.to_string(), n_max, sums })
}

/// `[u^n] ∏_{r=1}^{x_order} 1/(1 − u x^r)` as power series in `x` to `x_order`.
/// Factors with `r > x_order` only change terms beyond `x^{x_order}`.
fn truncated_product_in_x(order: usize, x_order: usize) -> Vec<TruncatedSeries<BigInt>> {
    let mut coeffs: Vec<TruncatedSeries<BigInt>> = (0..=order)
        .map(|n| if n == 0 { TruncatedSeries::one_to(x_order) } else { TruncatedSeries::zero_to(x_order) })
        .collect();
    for r in 1..=x_order {
        // multiplying by 1/(1 − u x^r): c_n ← c_n + x^r c_{n−1}
        for n in 1..=order {
            let prev = coeffs[n - 1].shift(r).truncate(x_order);
            coeffs[n] = coeffs[n].add(&prev);
        }
    }
    coeffs
}

/// `x`-expansion of a rational function in `q`, with `x = 1/q`.
fn expand_in_x(f: &RationalFunction, x_order: usize) -> Result<Vec<BigRational>> {
    let (v, c) = f.expand_at_infinity(x_order);
    if v < 0 {
        return Err(Error::Internal(format!("{f} grows at infinity")));
    }
    let v = v as usize;
    Ok((0..=x_order)
        .map(|k| if k < v { BigRational::zero() } else { c[k - v].clone() })
        .collect())
}

fn matches_product(series: &Series, order: usize, x_order: usize) -> Result<bool> {
    let product = truncated_product_in_x(order, x_order);
    for (n, expected) in product.iter().enumerate() {
        let got = expand_in_x(&series.coefficient(n)?, x_order)?;
        let want = expected.dense()?;
        if got.iter().zip(&want).any(|(a, b)| *a != BigRational::from_integer(b.clone())) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub order: usize,
    pub x_order: usize,
}

/// `∏_i exp[u^i / ((q^i − 1) i)] = ∏_r 1/(1 − u/q^r)` to `u^order`: exactly
/// against the closed-form coefficients, and as power series in `1/q` to
/// `x_order` against the product itself.
pub fn verify_exp_product_identity(order: usize, x_order: usize) -> Result<IdentityReport> {
    let exp = exp_product_series(GroupKind::A, order)?;
    if exp != geometric_product_series(GroupKind::A, order) {
        return Err(Error::Verification("exponential product differs from the closed form".into()));
    }
    if !matches_product(&exp, order, x_order)? {
        return Err(Error::Verification("exponential product differs from the geometric product".into()));
    }
    Ok(IdentityReport { identity: "exp-product".into(), order, x_order })
}

/// `∏_r 1/(1 − u/q^r) = 1 + Σ_n u^n / (q^n (1 − 1/q) ⋯ (1 − 1/q^n))` to
/// `u^order`, comparing each coefficient as a power series in `1/q`.
pub fn verify_euler_identity(order: usize, x_order: usize) -> Result<IdentityReport> {
    // closed form written directly in x = 1/q: x^n / ∏_{i≤n}(1 − x^i)
    let rhs: Vec<RationalFunction> = (0..=order)
        .map(|n| {
            let den = (1..=n).fold(IntPoly::one(), |acc, i| &acc * &IntPoly::binomial_factor(-1, i));
            RationalFunction::from_int_polys(IntPoly::monomial(BigInt::one(), n), den).expect("nonzero")
        })
        .collect();
    let product = truncated_product_in_x(order, x_order);
    for (n, f) in rhs.iter().enumerate() {
        let got = f.taylor(x_order)?;
        let want = product[n].dense()?;
        if got.iter().zip(&want).any(|(a, b)| *a != BigRational::from_integer(b.clone())) {
            return Err(Error::Verification(format!("Euler identity fails at u^{n}")));
        }
    }
    Ok(IdentityReport { identity: "euler".into(), order, x_order })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use crate::partitions::enumerate_partitions;

    fn dp(s: &str) -> DoublePartition {
        s.parse().unwrap()
    }

    fn cp(s: &str) -> CharacterPolynomial {
        s.parse().unwrap()
    }

    fn at(f: &RationalFunction, q: i64) -> BigRational {
        f.eval(&rat(q, 1)).unwrap()
    }

    #[test]
    fn small_counts() {
        let two = |s: &str| at(&count_tori(GroupKind::A, &dp(s)).unwrap(), 2);
        assert_eq!(two("1,1|"), rat(3, 1));
        assert_eq!(two("2|"), rat(1, 1));
        assert_eq!(count_tori_a(&"1".parse().unwrap(), 1).unwrap(), RationalFunction::one());
        let bc = count_tori_bc(&dp("1|"), 1).unwrap();
        assert_eq!(bc.to_string(), "(q + q^2)/2");
        assert_eq!(at(&bc, 2), rat(3, 1));
        assert_eq!(at(&count_tori_bc(&dp("|1"), 1).unwrap(), 2), rat(1, 1));
        assert!(count_tori_bc(&dp("|1"), 2).is_err());
        assert!(count_tori(GroupKind::A, &dp("|1")).is_err());
    }

    #[test]
    fn counts_are_nonnegative_integers() {
        for kind in [GroupKind::A, GroupKind::BC] {
            for n in 0..=4 {
                for c in kind.classes(n) {
                    let f = count_tori(kind, &c).unwrap();
                    for q in 2..=5 {
                        let v = at(&f, q);
                        assert!(v.is_integer() && !v.is_negative(), "{kind} {c} q={q}");
                        assert_eq!(v, count_tori_at(kind, &c, &rat(q, 1)).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn steinberg_totals() {
        for n in 0..=4 {
            assert_eq!(statistic_sum(GroupKind::A, &CharacterPolynomial::one(), n).unwrap(), total_tori(GroupKind::A, n));
            assert_eq!(statistic_sum(GroupKind::BC, &CharacterPolynomial::one(), n).unwrap(), total_tori(GroupKind::BC, n));
        }
        assert_eq!(total_tori(GroupKind::A, 3), q_pow(6));
        assert_eq!(total_tori(GroupKind::BC, 2), q_pow(8));
    }

    #[test]
    fn statistic_examples() {
        let s = statistic_sum(GroupKind::BC, &cp("X1"), 1).unwrap();
        assert_eq!(s, count_tori_bc(&dp("1|"), 1).unwrap());
        assert_eq!(at(&s, 2), rat(3, 1));
        // Σ_T X_1 over GL_2 tori: 2 · count(1,1) = q(q + 1)
        let a = statistic_sum(GroupKind::A, &cp("X1"), 2).unwrap();
        assert_eq!(a, &q_pow(2) + &q_pow(1));
        assert!(matches!(statistic_sum(GroupKind::A, &cp("Y1"), 2), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn lehrer_small_cases() {
        let triv = ClassFunction::trivial(GroupKind::A, 1);
        assert_eq!(lehrer_lhs(&triv).unwrap(), RationalFunction::one());
        lehrer_verify(&triv).unwrap();
        let triv_b = ClassFunction::trivial(GroupKind::BC, 1);
        assert_eq!(lehrer_rhs(&triv_b).unwrap(), RationalFunction::one());
        let sign = ClassFunction::from_char_poly(GroupKind::BC, 1, &cp("X1 - Y1"));
        let r = lehrer_verify(&sign).unwrap();
        assert_eq!(lehrer_lhs(&sign).unwrap(), q_pow(1).inverse().unwrap());
        assert!(r.holds);
        for n in 1..=4 {
            for lambda in enumerate_partitions(n) {
                lehrer_verify(&crate::symfunc::irreducible_character(&lambda)).unwrap();
            }
        }
    }

    #[test]
    fn limits_vanish_at_infinity() {
        for (kind, p, n) in [
            (GroupKind::A, "X1", 4),
            (GroupKind::A, "binom(X1,2) - X2", 4),
            (GroupKind::BC, "X1 + Y1", 3),
            (GroupKind::BC, "X2 - Y2", 3),
        ] {
            let p = cp(p);
            let normalized = &statistic_sum(kind, &p, n).unwrap() / &total_tori(kind, n);
            let diff = &normalized - &asymptotic_limit(kind, &p).unwrap();
            let num = diff.int_numerator().degree().unwrap_or(0);
            let den = diff.int_denominator().degree().unwrap_or(0);
            assert!(diff.is_zero() || num < den, "{p}: {diff}");
        }
    }

    #[test]
    fn asymptotic_examples() {
        assert_eq!(asymptotic_limit(GroupKind::A, &cp("X1")).unwrap().to_string(), "q/(-1 + q)");
        let half = asymptotic_limit(GroupKind::BC, &cp("X1")).unwrap();
        assert_eq!(half, &q_pow(1) / &(&RationalFunction::power_plus(1, -1) * &RationalFunction::from_int(2)));
    }

    #[test]
    fn convergence_type_a_trivial() {
        let r = verify_convergence(GroupKind::A, &CharacterPolynomial::one(), 6, 2, 1).unwrap();
        assert!(r.abs_diffs.iter().all(|&d| d == 0.0));
    }

    #[test]
    fn generating_functions() {
        let g = geometric_product_series(GroupKind::BC, 1);
        assert_eq!(g.coefficient(1).unwrap(), &q_pow(1) / &RationalFunction::from_int_poly(IntPoly::from_ints(&[-1, 0, 1])));
        for kind in [GroupKind::A, GroupKind::BC] {
            assert_eq!(exp_product_series(kind, 5).unwrap(), geometric_product_series(kind, 5));
        }
        verify_average_gf(GroupKind::BC, &dp("|"), 3).unwrap();
        verify_average_gf(GroupKind::BC, &dp("1|"), 2).unwrap();
        verify_average_gf(GroupKind::A, &dp("1|"), 3).unwrap();
        verify_exp_product_identity(5, 12).unwrap();
        verify_euler_identity(5, 12).unwrap();
    }
}
