//! The verification battery: every identity the library reproduces, as
//! thirteen numbered checks with a quick and a full parameter set.
//!
//! Full level uses the reference sizes; quick level shrinks them so the whole
//! battery finishes in a few seconds.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::betti::{quasipolynomial, recurrence, stable_betti_gf, verify_consistency, verify_double_gf, verify_twisted_stability};
use crate::charpoly::{canonical_rep_char_polys, preset, CharacterPolynomial, Monomial};
use crate::coinvariant::{
    graded_char, graded_char_a_oracle, graded_char_bc_oracle, q_char_polys, verify_stable_range, ClassFunction, GroupKind,
    SignedPermutation,
};
use crate::error::{Error, Result};
use crate::exactmath::{rat, IntPoly, Poly, RationalFunction};
use crate::partitions::{enumerate_double_partitions, enumerate_partitions, DoublePartition, Partition};
use crate::symfunc::{f_lambda_i, irreducible_character, verify_multiplicity_formula};
use crate::tori::{
    asymptotic_limit, lehrer_verify, statistic_sum, total_tori, verify_average_gf, verify_convergence, verify_euler_identity,
    verify_exp_product_identity,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Quick,
    Full,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Quick => "quick",
            Level::Full => "full",
        })
    }
}

impl FromStr for Level {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Level::Quick),
            "full" => Ok(Level::Full),
            _ => Err(Error::InvalidInput(format!("unknown level {s:?}, expected quick or full"))),
        }
    }
}

/// A numbered check with its time budget at full level.
#[derive(Clone, Copy, Debug)]
pub struct Criterion {
    pub id: usize,
    pub name: &'static str,
    pub budget: Duration,
    run: fn(Level, u64) -> Result<String>,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

pub const CRITERIA: [Criterion; 13] = [
    Criterion { id: 1, name: "steinberg counts", budget: secs(5), run: steinberg },
    Criterion { id: 2, name: "lehrer identity, type A", budget: secs(60), run: lehrer_a },
    Criterion { id: 3, name: "lehrer identity, type B/C", budget: secs(60), run: lehrer_bc },
    Criterion { id: 4, name: "graded characters vs determinant oracle", budget: secs(30), run: oracle },
    Criterion { id: 5, name: "multiplicity formula", budget: secs(60), run: multiplicity },
    Criterion { id: 6, name: "Q_i expansion and stable range", budget: secs(30), run: q_polys },
    Criterion { id: 7, name: "asymptotic tables", budget: secs(5), run: asymptotic_tables },
    Criterion { id: 8, name: "convergence to the limits", budget: secs(120), run: convergence },
    Criterion { id: 9, name: "stable Betti examples", budget: secs(10), run: betti_examples },
    Criterion { id: 10, name: "four-way Betti consistency", budget: secs(120), run: consistency },
    Criterion { id: 11, name: "double generating function", budget: secs(60), run: double_gf },
    Criterion { id: 12, name: "twisted homological stability", budget: secs(60), run: stability },
    Criterion { id: 13, name: "generating-function identities", budget: secs(60), run: gf_identities },
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub id: usize,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
    #[serde(skip)]
    pub budget: Duration,
}

impl CheckOutcome {
    pub fn within_budget(&self) -> bool {
        self.elapsed <= self.budget
    }
}

pub fn run_check(criterion: &Criterion, level: Level, seed: u64) -> CheckOutcome {
    let start = Instant::now();
    let result = (criterion.run)(level, seed);
    let elapsed = start.elapsed();
    let (passed, detail) = match result {
        Ok(d) => (true, d),
        Err(e) => (false, e.to_string()),
    };
    CheckOutcome { id: criterion.id, name: criterion.name.to_string(), passed, detail, elapsed, budget: criterion.budget }
}

/// Runs every criterion in order. Each check parallelizes internally.
pub fn run_all(level: Level, seed: u64) -> Vec<CheckOutcome> {
    CRITERIA.iter().map(|c| run_check(c, level, seed)).collect()
}

fn pick(level: Level, quick: usize, full: usize) -> usize {
    match level {
        Level::Quick => quick,
        Level::Full => full,
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Verification(msg()))
    }
}

fn cp(s: &str) -> CharacterPolynomial {
    s.parse().expect("built-in expression parses")
}

fn steinberg(level: Level, _: u64) -> Result<String> {
    let n_max = pick(level, 3, 5);
    for kind in [GroupKind::A, GroupKind::BC] {
        for n in 0..=n_max {
            let sum = statistic_sum(kind, &CharacterPolynomial::one(), n)?;
            ensure(sum == total_tori(kind, n), || format!("family {kind}, n = {n}: sum of counts is {sum}"))?;
        }
    }
    Ok(format!("sum of counts = q^(n^2-n) and q^(2n^2) for n <= {n_max}"))
}

fn lehrer_a(level: Level, _: u64) -> Result<String> {
    let n_max = pick(level, 4, 6);
    let mut count = 0;
    for n in 1..=n_max {
        for lambda in enumerate_partitions(n) {
            lehrer_verify(&irreducible_character(&lambda))?;
            count += 1;
        }
    }
    Ok(format!("{count} irreducible characters of S_n, n <= {n_max}"))
}

fn lehrer_bc(level: Level, _: u64) -> Result<String> {
    let n_max = pick(level, 2, 4);
    let mut polys = q_char_polys(6);
    polys.extend(canonical_rep_char_polys().into_iter().map(|(_, p)| p));
    for n in 0..=n_max {
        for p in &polys {
            lehrer_verify(&ClassFunction::from_char_poly(GroupKind::BC, n, p))?;
        }
    }
    Ok(format!("Q_0..Q_6 and the four named representations on B_n, n <= {n_max}"))
}

fn oracle(level: Level, _: u64) -> Result<String> {
    let (bc_max, a_max) = (pick(level, 3, 5), pick(level, 4, 6));
    for (kind, n_max) in [(GroupKind::BC, bc_max), (GroupKind::A, a_max)] {
        for n in 0..=n_max {
            let graded = graded_char(kind, n)?;
            for (class, poly) in graded.polys() {
                let sigma = SignedPermutation::class_representative(class);
                let expected = match kind {
                    GroupKind::A => graded_char_a_oracle(&sigma)?,
                    GroupKind::BC => graded_char_bc_oracle(&sigma)?,
                };
                ensure(*poly == expected, || format!("family {kind}, class {class}: {} vs oracle {}", poly.display_with("z"), expected.display_with("z")))?;
            }
        }
    }
    Ok(format!("B_n for n <= {bc_max}, S_n for n <= {a_max}"))
}

fn multiplicity(level: Level, _: u64) -> Result<String> {
    let n_max = pick(level, 4, 6);
    let f = f_lambda_i(&Partition::new(vec![2, 1, 1])?);
    ensure(f == BTreeMap::from([(3, 1), (4, 1), (5, 1)]), || format!("f_(2,1,1),i = {f:?}"))?;
    let checked: usize = (1..=n_max).map(verify_multiplicity_formula).map(|r| r.map(|r| r.checked)).sum::<Result<_>>()?;
    Ok(format!("{checked} pairs (lambda, i) for n <= {n_max}"))
}

/// The displayed expansion of `∏ (1 − t^k)^{1−X_k} (1 + t^k)^{1−Y_k}`
/// through `t^4`, one printed term per entry.
const PRINTED_Q: [&[&str]; 5] = [
    &["1"],
    &["X1", "-Y1"],
    &["-1", "1/2*X1", "1/2*Y1", "1/2*X1^2", "1/2*Y1^2", "-X1*Y1", "X2", "-Y2"],
    &[
        "-2/3*X1", "2/3*Y1", "1/2*X1^2", "-1/2*Y1^2", "1/6*X1^3", "-1/6*Y1^3", "-1/2*X1^2*Y1", "X1*X2", "Y1*Y2",
        "1/2*X1*Y1^2", "-X2*Y1", "-X1*Y2", "X3", "-Y3",
    ],
    &[
        "-1", "-1/4*X1", "-1/4*Y1", "-1/24*X1^2", "-1/24*Y1^2", "7/12*X1*Y1", "3/2*Y2", "-1/2*X2", "1/4*X1^3",
        "1/4*Y1^3", "-1/4*X1^2*Y1", "-1/4*X1*Y1^2", "1/2*X1*X2", "-1/2*X1*Y2", "-1/2*Y1*Y2", "1/2*X2*Y1",
        "1/24*X1^4", "1/24*Y1^4", "-1/6*X1^3*Y1", "-1/6*X1*Y1^3", "1/4*X1^2*Y1^2", "1/2*X1^2*X2", "-1/2*X1^2*Y2",
        "1/2*X2*Y1^2", "-1/2*Y1^2*Y2", "-1/2*Y1^2*Y2", "-X1*X2*Y1", "X1*Y1*Y2", "1/2*X2^2", "1/2*Y2^2", "X1*X3",
        "-X1*Y3", "-X3*Y1", "Y1*Y3", "-X2*Y2", "X4", "-Y4",
    ],
];

/// Compares a computed polynomial with a printed term list: same monomials,
/// and every printed term carries the computed coefficient. Returns the
/// monomials printed more than once.
fn match_printed(computed: &CharacterPolynomial, printed: &[&str]) -> Result<Vec<String>> {
    let mut seen: BTreeMap<Monomial, BigRational> = BTreeMap::new();
    let mut repeated = Vec::new();
    for text in printed {
        let term = cp(text);
        let (m, c) = term.terms().next().map(|(m, c)| (m.clone(), c.clone())).expect("single term");
        let actual = computed.coefficient(&m);
        ensure(actual == c, || format!("printed term {text} but computed coefficient of {m} is {actual}"))?;
        if seen.insert(m.clone(), c).is_some() {
            repeated.push(m.to_string());
        }
    }
    for (m, _) in computed.terms() {
        ensure(seen.contains_key(m), || format!("computed term {m} is not printed"))?;
    }
    Ok(repeated)
}

fn q_polys(level: Level, _: u64) -> Result<String> {
    let qs = q_char_polys(4);
    let mut notes = Vec::new();
    for (i, printed) in PRINTED_Q.iter().enumerate() {
        for m in match_printed(&qs[i], printed)? {
            notes.push(format!("Q_{i} prints {m} twice"));
        }
    }
    let n_max = pick(level, 2, 3);
    for n in 0..=n_max {
        verify_stable_range(n)?;
    }
    let empty = DoublePartition::empty();
    ensure(!Zero::is_zero(&qs[2].evaluate(&empty)), || "Q_2 vanishes on B_0".into())?;
    let on_b1 = GroupKind::BC.classes(1).iter().any(|c| !Zero::is_zero(&qs[4].evaluate(c)));
    ensure(on_b1, || "Q_4 vanishes on B_1".into())?;
    let mut detail = format!("Q_0..Q_4 match; stable range sharp for n <= {n_max}");
    if !notes.is_empty() {
        detail.push_str(&format!(" (note: {})", notes.join(", ")));
    }
    Ok(detail)
}

fn q() -> RationalFunction {
    RationalFunction::var()
}

fn qk(k: usize, sign: i64) -> RationalFunction {
    RationalFunction::power_plus(k, sign)
}

fn two() -> RationalFunction {
    RationalFunction::from_int(2)
}

fn asymptotic_tables(_: Level, _: u64) -> Result<String> {
    let one = RationalFunction::one();
    let inv_q = |k: usize| &one - &RationalFunction::monomial(k).inverse().expect("nonzero");
    let rows = [
        (GroupKind::A, "X1", &q() / &qk(1, -1)),
        (GroupKind::A, "binom(X1,2) - X2", (&(&q() * &inv_q(1)) * &inv_q(2)).inverse()?),
        (GroupKind::BC, "X1", &q() / &(&two() * &qk(1, -1))),
        (GroupKind::BC, "X1 + Y1", &RationalFunction::monomial(2) / &qk(2, -1)),
        (GroupKind::BC, "binom(X1 + Y1, 2) - (X2 + Y2)", &RationalFunction::monomial(4) / &(&qk(2, -1) * &qk(4, -1))),
        (GroupKind::BC, "X2 - Y2", &RationalFunction::monomial(2) / &(&two() * &qk(4, -1))),
    ];
    for (kind, p, expected) in &rows {
        let got = asymptotic_limit(*kind, &cp(p))?;
        ensure(got == *expected, || format!("family {kind}, {p}: limit {got}, table {expected}"))?;
    }
    Ok(format!("{} table entries", rows.len()))
}

fn convergence(level: Level, _: u64) -> Result<String> {
    let (a_max, bc_max) = (pick(level, 8, 14), pick(level, 6, 10));
    let cases = [
        (GroupKind::A, "X1", a_max),
        (GroupKind::BC, "X1", bc_max),
        (GroupKind::BC, "X1 + Y1", bc_max),
        (GroupKind::BC, "X2 - Y2", bc_max),
    ];
    let mut finals = Vec::new();
    for (kind, p, n_max) in cases {
        let r = verify_convergence(kind, &cp(p), n_max, 2, 3)?;
        finals.push(format!("{kind} {p}: |diff| = {:.3e} at n = {n_max}", r.abs_diffs[n_max - 1]));
    }
    Ok(finals.join("; "))
}

fn ip(coeffs: &[i64]) -> IntPoly {
    IntPoly::from_ints(coeffs)
}

fn factors(list: &[(i64, usize, u32)]) -> IntPoly {
    list.iter().fold(IntPoly::one(), |acc, &(s, k, e)| &acc * &IntPoly::binomial_factor(s, k).pow(e))
}

fn qpoly(c: &[(i64, i64)]) -> Poly {
    Poly::new(c.iter().map(|&(n, d)| rat(n, d)).collect())
}

/// A printed stable-Betti example.
struct BettiExample {
    name: &'static str,
    printed_poly: &'static [&'static str],
    gf: (IntPoly, IntPoly),
    /// Printed nonzero `(i, β_i)`; other indices up to `through` are zero.
    coeffs: Vec<(usize, i64)>,
    through: usize,
    lags: Vec<(usize, i64)>,
    /// The stated onset of the recurrence.
    recurrence_from: usize,
    period: usize,
    cases: Vec<(Vec<usize>, Poly)>,
}

fn betti_examples_data() -> Vec<BettiExample> {
    let odd = |start: usize, vals: &[i64]| vals.iter().enumerate().map(|(k, &v)| (start + 2 * k, v)).collect::<Vec<_>>();
    vec![
        BettiExample {
            name: "Cn",
            printed_poly: &["X1 - Y1", "binom:1| - binom:|1"],
            gf: (ip(&[0, 1]), factors(&[(-1, 1, 1), (1, 1, 1)])),
            coeffs: odd(1, &[1, 1, 1, 1, 1, 1]),
            through: 12,
            lags: vec![(2, 1)],
            recurrence_from: 3,
            period: 2,
            cases: vec![(vec![0], Poly::zero()), (vec![1], Poly::one())],
        },
        BettiExample {
            name: "Sym2Cn",
            printed_poly: &[
                "X1 + binom(X1,2) + Y1 + binom(Y1,2) + X2 - Y2 - X1*Y1",
                "binom:1| + binom:1,1| + binom:|1 + binom:|1,1 + binom:2| - binom:|2 - binom:1|1",
            ],
            gf: (ip(&[1, 0, 1, 0, -1]), factors(&[(-1, 2, 2), (1, 2, 1)])),
            coeffs: odd(0, &[1, 2, 2, 3, 3, 4, 4]),
            through: 12,
            lags: vec![(2, 1), (4, 1), (6, -1)],
            recurrence_from: 7,
            period: 4,
            cases: vec![
                (vec![0], qpoly(&[(1, 1), (1, 4)])),
                (vec![1, 3], Poly::zero()),
                (vec![2], qpoly(&[(3, 2), (1, 4)])),
            ],
        },
        BettiExample {
            name: "Wedge2Cn",
            printed_poly: &[
                "binom(X1,2) + binom(Y1,2) - X2 + Y2 - X1*Y1",
                "binom:1,1| + binom:|1,1 - binom:2| + binom:|2 - binom:1|1",
            ],
            gf: (ip(&[0, 0, 0, 0, 1]), factors(&[(-1, 2, 2), (1, 2, 1)])),
            coeffs: odd(4, &[1, 1, 2, 2, 3]),
            through: 12,
            lags: vec![(2, 1), (4, 1), (6, -1)],
            recurrence_from: 6,
            period: 4,
            cases: vec![
                (vec![0], qpoly(&[(0, 1), (1, 4)])),
                (vec![1, 3], Poly::zero()),
                (vec![2], qpoly(&[(-1, 2), (1, 4)])),
            ],
        },
        BettiExample {
            name: "Wedge3Cn",
            printed_poly: &[
                "binom(X1,3) - binom(Y1,3) + X1*binom(Y1,2) - Y1*binom(X1,2) - X1*X2 + X2*Y1 + Y2*X1 - Y1*Y2 + X3 - Y3",
            ],
            gf: (
                IntPoly::monomial(1.into(), 9),
                factors(&[(-1, 1, 2), (1, 1, 2), (1, 2, 1), (-1, 3, 1), (1, 3, 1)]),
            ),
            coeffs: odd(9, &[1, 1, 2, 3, 4, 5, 7, 8, 10, 12, 14, 16, 19, 21, 24, 27, 30, 33]),
            through: 43,
            lags: vec![(2, 1), (4, 1), (8, -1), (10, -1), (12, 1)],
            recurrence_from: 12,
            period: 12,
            cases: vec![
                (vec![0, 2, 4, 6, 8, 10], Poly::zero()),
                (vec![1, 5], qpoly(&[(5, 48), (-1, 8), (1, 48)])),
                (vec![3], qpoly(&[(9, 48), (-1, 8), (1, 48)])),
                (vec![7, 11], qpoly(&[(-7, 48), (-1, 8), (1, 48)])),
                (vec![9], qpoly(&[(21, 48), (-1, 8), (1, 48)])),
            ],
        },
    ]
}

fn check_betti_example(ex: &BettiExample) -> Result<()> {
    let name = ex.name;
    let p = preset(name).ok_or_else(|| Error::Internal(format!("missing preset {name}")))?;
    for text in ex.printed_poly {
        ensure(cp(text) == p, || format!("{name}: printed polynomial {text} differs from {p}"))?;
    }
    let gf = stable_betti_gf(&p);
    let expected = RationalFunction::from_int_polys(ex.gf.0.clone(), ex.gf.1.clone())?;
    ensure(*gf.gf() == expected, || format!("{name}: generating function {}", gf.display()))?;
    gf.check_poles()?;

    let coeffs = gf.coeffs(ex.through.max(40));
    let listed: BTreeMap<usize, i64> = ex.coeffs.iter().copied().collect();
    for (i, c) in coeffs.iter().enumerate().take(ex.through + 1) {
        let want = rat(listed.get(&i).copied().unwrap_or(0), 1);
        ensure(*c == want, || format!("{name}: beta_{i} = {c}, printed {want}"))?;
    }

    let rec = recurrence(&gf)?;
    let lags: Vec<(usize, BigRational)> = ex.lags.iter().map(|&(j, d)| (j, rat(d, 1))).collect();
    ensure(rec.lags() == lags, || format!("{name}: recurrence lags {:?}", rec.lags()))?;
    ensure(rec.valid_from() <= ex.recurrence_from, || {
        format!("{name}: recurrence holds only from {}, printed {}", rec.valid_from(), ex.recurrence_from)
    })?;
    ensure(rec.first_failure(&coeffs).is_none(), || format!("{name}: recurrence breaks within 40 terms"))?;

    let qp = quasipolynomial(&gf)?;
    ensure(qp.period() == ex.period, || format!("{name}: quasiperiod {}", qp.period()))?;
    ensure(qp.valid_from() == 0, || format!("{name}: quasipolynomial from {}", qp.valid_from()))?;
    for (residues, poly) in &ex.cases {
        for &r in residues {
            ensure(qp.polys()[r] == *poly, || format!("{name}: residue {r} gives {}", qp.polys()[r].display_with("d")))?;
        }
    }
    Ok(())
}

fn betti_examples(_: Level, _: u64) -> Result<String> {
    let data = betti_examples_data();
    for ex in &data {
        check_betti_example(ex)?;
    }
    Ok(format!("{} examples: polynomial, GF, coefficients, recurrence, quasipolynomial", data.len()))
}

/// `count` distinct random binomial-basis labels of size `1..=max_degree`.
pub fn random_basis_labels(seed: u64, count: usize, max_degree: usize) -> Vec<DoublePartition> {
    let mut pool: Vec<DoublePartition> = (1..=max_degree).flat_map(enumerate_double_partitions).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    pool.shuffle(&mut rng);
    pool.truncate(count);
    pool
}

fn consistency(level: Level, seed: u64) -> Result<String> {
    let max_i = pick(level, 6, 12);
    let random = pick(level, 3, 10);
    let mut polys: Vec<CharacterPolynomial> = canonical_rep_char_polys().into_iter().map(|(_, p)| p).collect();
    let labels = random_basis_labels(seed, random, 4);
    polys.extend(labels.iter().map(|l| CharacterPolynomial::binom_basis_element(&l.positive, &l.negative)));
    for p in &polys {
        verify_consistency(p, max_i)?;
    }
    let names: Vec<String> = labels.iter().map(ToString::to_string).collect();
    Ok(format!("i <= {max_i}; named polynomials and basis elements {}", names.join(" ")))
}

fn double_gf(level: Level, _: u64) -> Result<String> {
    let (n_max, z_order) = (pick(level, 3, 4), pick(level, 6, 8));
    let labels = ["|", "1|", "|1", "2|", "1|1"];
    for l in labels {
        verify_double_gf(&l.parse()?, n_max, z_order)?;
    }
    Ok(format!("{} labels, n <= {n_max}, z-order {z_order}", labels.len()))
}

fn stability(level: Level, _: u64) -> Result<String> {
    let max_i = pick(level, 4, 6);
    let max_deg = pick(level, 2, 4);
    // the binomial basis spans every polynomial of the given degree
    let labels: Vec<DoublePartition> = (0..=max_deg).flat_map(enumerate_double_partitions).collect();
    for l in &labels {
        verify_twisted_stability(&CharacterPolynomial::binom_basis_element(&l.positive, &l.negative), max_i)?;
    }
    Ok(format!("{} basis elements of degree <= {max_deg}, i <= {max_i}", labels.len()))
}

fn gf_identities(level: Level, _: u64) -> Result<String> {
    let order = pick(level, 6, 12);
    verify_exp_product_identity(order, 2 * order)?;
    verify_euler_identity(order, 2 * order)?;
    let n_max = pick(level, 3, 4);
    let mut labels = 0;
    for kind in [GroupKind::A, GroupKind::BC] {
        for size in 0..=n_max {
            for label in kind.classes(size) {
                verify_average_gf(kind, &label, n_max)?;
                labels += 1;
            }
        }
    }
    Ok(format!("identities to u^{order}; average-value GF for {labels} labels, n <= {n_max}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_text() {
        assert_eq!("quick".parse::<Level>().unwrap(), Level::Quick);
        assert!("slow".parse::<Level>().is_err());
        assert_eq!(Level::Full.to_string(), "full");
    }

    #[test]
    fn random_labels_are_deterministic() {
        let a = random_basis_labels(7, 10, 4);
        assert_eq!(a, random_basis_labels(7, 10, 4));
        assert_eq!(a.len(), 10);
        assert!(a.iter().all(|l| (1..=4).contains(&l.size())));
    }

    #[test]
    fn printed_term_mismatch_is_reported() {
        let p = cp("X1 - Y1");
        assert!(match_printed(&p, &["X1", "-Y1"]).unwrap().is_empty());
        assert!(match_printed(&p, &["X1", "Y1"]).is_err());
        assert!(match_printed(&p, &["X1"]).is_err());
        assert_eq!(match_printed(&p, &["X1", "-Y1", "-Y1"]).unwrap(), ["Y1"]);
    }

    #[test]
    fn quick_battery_passes() {
        for outcome in run_all(Level::Quick, 1) {
            assert!(outcome.passed, "{}: {}", outcome.name, outcome.detail);
        }
    }
}
