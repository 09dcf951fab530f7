//! One function per subcommand: parse the flag values, call the library, and
//! build a typed report with its text rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use torilab_core::betti::{
    quasipolynomial, recurrence, stable_betti_direct_range, stable_betti_gf, verify_double_gf, StableBetti,
};
use torilab_core::charpoly::CharacterPolynomial;
use torilab_core::coinvariant::{graded_char, q_char_polys, verify_stable_range, ClassFunction, GroupKind};
use torilab_core::exactmath::{format_rational, parse_rational};
use torilab_core::symfunc::{f_lambda_i, irreducible_character, CharacterTable};
use torilab_core::tori::{
    asymptotic_limit, count_tori, lehrer_lhs, lehrer_rhs, statistic_sum, total_tori, verify_convergence,
};
use torilab_core::verify::{run_check, Level, CRITERIA};
use torilab_core::{BigRational, DoublePartition, Partition, RationalFunction};

use crate::report::{CliError, Envelope};

type CmdResult = Result<Envelope, CliError>;

fn family(s: &str) -> Result<GroupKind, CliError> {
    s.parse().map_err(|e| CliError::from_core("--family", e))
}

fn poly(s: &str) -> Result<CharacterPolynomial, CliError> {
    s.parse().map_err(|e| CliError::from_core("--poly", e))
}

fn q_value(s: &str) -> Result<BigRational, CliError> {
    parse_rational(s).map_err(|e| CliError::from_core("--q", e))
}

fn partition(field: &str, s: &str) -> Result<Partition, CliError> {
    s.parse().map_err(|e| CliError::from_core(field, e))
}

/// A class of the given family: `μ|λ`, or a bare partition in type A.
fn class(kind: GroupKind, s: &str) -> Result<DoublePartition, CliError> {
    let c: DoublePartition = if kind == GroupKind::A && !s.contains('|') {
        DoublePartition::type_a(partition("--class", s)?)
    } else {
        s.parse().map_err(|e| CliError::from_core("--class", e))?
    };
    if !kind.accepts(&c) {
        return Err(CliError::invalid("--class", format!("{c} is not a class of a type-A group")));
    }
    Ok(c)
}

fn require_type(kind: GroupKind, p: &CharacterPolynomial) -> Result<(), CliError> {
    if kind == GroupKind::A && !p.is_type_a() {
        return Err(CliError::invalid("--poly", format!("{p} involves Y_r, which type A does not have")));
    }
    Ok(())
}

fn class_label(kind: GroupKind, c: &DoublePartition) -> String {
    match kind {
        GroupKind::A => c.positive.to_string(),
        GroupKind::BC => c.to_string(),
    }
}

fn evaluate(f: &RationalFunction, q: &BigRational) -> Result<String, CliError> {
    f.eval(q).map(|v| format_rational(&v)).map_err(|e| CliError::from_core("--q", e))
}

#[derive(Serialize)]
struct CountRow {
    class: String,
    count: String,
}

#[derive(Serialize)]
struct ToriCount {
    rows: Vec<CountRow>,
    total: String,
}

pub fn tori_count(fam: &str, n: usize, cls: Option<&str>, q: Option<&str>) -> CmdResult {
    let kind = family(fam)?;
    let q = q.map(q_value).transpose()?;
    let classes = match cls {
        Some(s) => {
            let c = class(kind, s)?;
            if c.size() != n {
                return Err(CliError::invalid("--class", format!("class {c} has size {}, not n = {n}", c.size())));
            }
            vec![c]
        }
        None => kind.classes(n),
    };
    let render = |f: &RationalFunction| match &q {
        Some(q) => evaluate(f, q),
        None => Ok(f.to_string()),
    };
    let mut rows = Vec::new();
    for c in &classes {
        let f = count_tori(kind, c).map_err(|e| CliError::from_core("--class", e))?;
        rows.push(CountRow { class: class_label(kind, c), count: render(&f)? });
    }
    let total = render(&total_tori(kind, n))?;
    let width = rows.iter().map(|r| r.class.len()).max().unwrap_or(0).max(5);
    let mut text = String::new();
    for r in &rows {
        let _ = writeln!(text, "{:<width$}  {}", r.class, r.count);
    }
    let _ = writeln!(text, "{:<width$}  {}", "total", total);
    let mut inputs = vec![("family", kind.to_string()), ("n", n.to_string())];
    if let Some(c) = cls {
        inputs.push(("class", c.to_string()));
    }
    if let Some(q) = &q {
        inputs.push(("q", format_rational(q)));
    }
    Ok(Envelope::new("tori count", &inputs, &ToriCount { rows, total }, text))
}

#[derive(Serialize)]
struct ToriStat {
    sum: String,
    tori: String,
    average: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    sum_at_q: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    average_at_q: Option<String>,
}

pub fn tori_stat(fam: &str, expr: &str, n: usize, q: Option<&str>) -> CmdResult {
    let kind = family(fam)?;
    let p = poly(expr)?;
    require_type(kind, &p)?;
    let q = q.map(q_value).transpose()?;
    let sum = statistic_sum(kind, &p, n)?;
    let tori = total_tori(kind, n);
    let average = &sum / &tori;
    let (sum_at_q, average_at_q) = match &q {
        Some(q) => (Some(evaluate(&sum, q)?), Some(evaluate(&average, q)?)),
        None => (None, None),
    };
    let mut text = format!("sum over tori   {sum}\nnumber of tori  {tori}\naverage         {average}\n");
    if let (Some(s), Some(a), Some(q)) = (&sum_at_q, &average_at_q, &q) {
        let _ = writeln!(text, "at q = {}: sum {s}, average {a}", format_rational(q));
    }
    let mut inputs = vec![("family", kind.to_string()), ("poly", p.to_string()), ("n", n.to_string())];
    if let Some(q) = &q {
        inputs.push(("q", format_rational(q)));
    }
    let report = ToriStat { sum: sum.to_string(), tori: tori.to_string(), average: average.to_string(), sum_at_q, average_at_q };
    Ok(Envelope::new("tori stat", &inputs, &report, text))
}

#[derive(Serialize)]
struct LehrerOut {
    lhs: String,
    rhs: String,
    holds: bool,
}

pub fn lehrer(fam: &str, n: usize, chi: &str) -> CmdResult {
    let kind = family(fam)?;
    let f = if let Some(expr) = chi.strip_prefix("poly:") {
        let p: CharacterPolynomial = expr.parse().map_err(|e| CliError::from_core("--chi", e))?;
        if kind == GroupKind::A && !p.is_type_a() {
            return Err(CliError::invalid("--chi", format!("{p} involves Y_r, which type A does not have")));
        }
        ClassFunction::from_char_poly(kind, n, &p)
    } else if let Some(shape) = chi.strip_prefix("irr:") {
        if kind != GroupKind::A {
            return Err(CliError::invalid("--chi", "irr:λ is available in type A only"));
        }
        let lambda = partition("--chi", shape)?;
        if lambda.size() != n {
            return Err(CliError::invalid("--chi", format!("λ = ({lambda}) has size {}, not n = {n}", lambda.size())));
        }
        irreducible_character(&lambda)
    } else {
        return Err(CliError::invalid("--chi", "expected poly:EXPR or irr:λ"));
    };
    let lhs = lehrer_lhs(&f)?;
    let rhs = lehrer_rhs(&f)?;
    let holds = lhs == rhs;
    let text = format!(
        "Σ_T χ(T) / #tori      = {lhs}\nΣ_i q^-i ⟨χ, R_n^i⟩  = {rhs}\n{}\n",
        if holds { "identity holds" } else { "IDENTITY FAILS" }
    );
    let inputs = [("family", kind.to_string()), ("n", n.to_string()), ("chi", chi.to_string())];
    let env = Envelope::new("lehrer", &inputs, &LehrerOut { lhs: lhs.to_string(), rhs: rhs.to_string(), holds }, text);
    Ok(if holds { env } else { env.failed() })
}

#[derive(Serialize)]
struct AsymptOut {
    limit: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    limit_at_q: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    convergence: Option<torilab_core::tori::ConvergenceReport>,
}

pub fn asympt(fam: &str, expr: &str, q: Option<u64>, n_max: Option<usize>, monotone_from: usize) -> CmdResult {
    let kind = family(fam)?;
    let p = poly(expr)?;
    require_type(kind, &p)?;
    let limit = asymptotic_limit(kind, &p)?;
    let limit_at_q = q.map(|q| evaluate(&limit, &BigRational::from_integer(q.into()))).transpose()?;
    let convergence = match n_max {
        Some(n_max) => Some(verify_convergence(kind, &p, n_max, q.unwrap_or(2), monotone_from)?),
        None => None,
    };
    let mut text = format!("limit  {limit}\n");
    if let Some(v) = &limit_at_q {
        let _ = writeln!(text, "at q = {}: {v}", q.unwrap_or(2));
    }
    if let Some(c) = &convergence {
        let _ = writeln!(text, "|average - limit| at q = {}:", c.q);
        for (i, d) in c.abs_diffs.iter().enumerate() {
            let _ = writeln!(text, "  n = {:>2}  {d:.6e}", i + 1);
        }
        let _ = writeln!(text, "within {} at n = {}", c.tolerance, c.abs_diffs.len());
    }
    let mut inputs = vec![("family", kind.to_string()), ("poly", p.to_string())];
    if let Some(q) = q {
        inputs.push(("q", q.to_string()));
    }
    if let Some(n) = n_max {
        inputs.push(("n_max", n.to_string()));
    }
    Ok(Envelope::new("asympt", &inputs, &AsymptOut { limit: limit.to_string(), limit_at_q, convergence }, text))
}

#[derive(Serialize)]
struct GradedRow {
    class: String,
    poly: Vec<String>,
}

pub fn coinv_graded(fam: &str, n: usize) -> CmdResult {
    let kind = family(fam)?;
    let graded = graded_char(kind, n)?;
    let rows: Vec<GradedRow> = graded
        .polys()
        .iter()
        .map(|(c, p)| GradedRow { class: class_label(kind, c), poly: p.coeffs().iter().map(ToString::to_string).collect() })
        .collect();
    let width = rows.iter().map(|r| r.class.len()).max().unwrap_or(0).max(1);
    let mut text = String::new();
    for (c, p) in graded.polys() {
        let _ = writeln!(text, "{:<width$}  {}", class_label(kind, c), p.display_with("z"));
    }
    let inputs = [("family", kind.to_string()), ("n", n.to_string())];
    Ok(Envelope::new("coinv graded", &inputs, &rows, text))
}

#[derive(Serialize)]
struct QRow {
    i: usize,
    poly: String,
}

pub fn coinv_qpoly(max_degree: usize) -> CmdResult {
    let rows: Vec<QRow> =
        q_char_polys(max_degree).iter().enumerate().map(|(i, p)| QRow { i, poly: p.to_string() }).collect();
    let mut text = String::new();
    for r in &rows {
        let _ = writeln!(text, "Q_{} = {}", r.i, r.poly);
    }
    Ok(Envelope::new("coinv qpoly", &[("max_degree", max_degree.to_string())], &rows, text))
}

pub fn coinv_stable_range(n: usize) -> CmdResult {
    let report = verify_stable_range(n)?;
    let mut text = match report.agree_through {
        Some(i) => format!("Q_i = χ(R_{n}^i) on B_{n} for i <= {i}\n"),
        None => format!("Q_0 already differs on B_{n}\n"),
    };
    if let Some((i, c)) = &report.first_mismatch {
        let _ = writeln!(text, "first difference: i = {i}, class {c}");
    }
    Ok(Envelope::new("coinv stable-range", &[("n", n.to_string())], &report, text))
}

#[derive(Serialize)]
struct GfOut {
    num: String,
    den: String,
}

#[derive(Serialize)]
struct RecurrenceOut {
    lags: Vec<usize>,
    coeffs: Vec<String>,
    valid_from: usize,
}

#[derive(Serialize)]
struct CaseOut {
    residues: Vec<usize>,
    poly: String,
}

#[derive(Serialize)]
struct QuasiOut {
    period: usize,
    valid_from: usize,
    cases: Vec<CaseOut>,
}

#[derive(Serialize)]
struct BettiOut {
    gf: GfOut,
    coeffs: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    recurrence: Option<RecurrenceOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    quasipolynomial: Option<QuasiOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    direct: Option<Vec<StableBetti>>,
}

pub fn betti(expr: &str, terms: usize, want_rec: bool, want_qp: bool, want_direct: bool) -> CmdResult {
    let p = poly(expr)?;
    let gf = stable_betti_gf(&p);
    gf.check_poles()?;
    let (num, den) = gf.normalized_parts();
    let coeffs: Vec<String> = gf.coeffs(terms).iter().map(format_rational).collect();
    let mut text = format!(
        "Σ β_i z^i = ({}) / ({})\nβ_0..β_{terms}: {}\n",
        num.display_with("z"),
        den.display_with("z"),
        coeffs.join(", ")
    );
    let recurrence = if want_rec {
        let rec = recurrence(&gf)?;
        let lags = rec.lags();
        let _ = writeln!(text, "recurrence: β_d = {} for d >= {}", recurrence_rhs(&lags), rec.valid_from());
        Some(RecurrenceOut {
            lags: lags.iter().map(|(j, _)| *j).collect(),
            coeffs: lags.iter().map(|(_, d)| format_rational(d)).collect(),
            valid_from: rec.valid_from(),
        })
    } else {
        None
    };
    let quasipolynomial = if want_qp {
        let qp = quasipolynomial(&gf)?;
        let _ = writeln!(text, "quasipolynomial, period {}, for d >= {}:", qp.period(), qp.valid_from());
        let cases: Vec<CaseOut> = qp
            .cases()
            .into_iter()
            .map(|(residues, poly)| CaseOut { residues, poly: poly.display_with("d") })
            .collect();
        for c in &cases {
            let rs: Vec<String> = c.residues.iter().map(ToString::to_string).collect();
            let _ = writeln!(text, "  d ≡ {} (mod {}):  {}", rs.join(","), qp.period(), c.poly);
        }
        Some(QuasiOut { period: qp.period(), valid_from: qp.valid_from(), cases })
    } else {
        None
    };
    let direct = if want_direct {
        let values = stable_betti_direct_range(&p, terms)?;
        for v in &values {
            let _ = writeln!(text, "direct β_{} = {} (stable from n = {})", v.i, format_rational(&v.value), v.n_star);
        }
        Some(values)
    } else {
        None
    };
    let report = BettiOut {
        gf: GfOut { num: num.display_with("z"), den: den.display_with("z") },
        coeffs,
        recurrence,
        quasipolynomial,
        direct,
    };
    let inputs = [("poly", p.to_string()), ("terms", terms.to_string())];
    Ok(Envelope::new("betti", &inputs, &report, text))
}

fn recurrence_rhs(lags: &[(usize, BigRational)]) -> String {
    let mut out = String::new();
    for (j, d) in lags {
        let negative = d < &BigRational::from_integer(0.into());
        let magnitude = if negative { -d } else { d.clone() };
        let sign = match (out.is_empty(), negative) {
            (true, false) => "",
            (true, true) => "-",
            (false, false) => " + ",
            (false, true) => " - ",
        };
        let coeff = if magnitude == BigRational::from_integer(1.into()) { String::new() } else { format!("{} ", format_rational(&magnitude)) };
        let _ = write!(out, "{sign}{coeff}β_(d-{j})");
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn betti_double_gf(cls: &str, n_max: usize, z_order: usize) -> CmdResult {
    let label = class(GroupKind::BC, cls)?;
    let report = verify_double_gf(&label, n_max, z_order)?;
    let mut text = format!("double generating function verified for {label}, n <= {n_max}, z^{z_order}\n");
    for (n, row) in report.coefficients.iter().enumerate() {
        let _ = writeln!(text, "[u^{n}] {}", row.join(" "));
    }
    let inputs = [("class", label.to_string()), ("n_max", n_max.to_string()), ("z_order", z_order.to_string())];
    Ok(Envelope::new("betti double-gf", &inputs, &report, text))
}

#[derive(Serialize)]
struct CharRow {
    mu: String,
    value: i64,
}

pub fn symfunc_mn(lambda: &str, mu: Option<&str>) -> CmdResult {
    let lambda = partition("--lambda", lambda)?;
    let mut table = CharacterTable::new();
    let mus = match mu {
        Some(m) => vec![partition("--mu", m)?],
        None => torilab_core::partitions::enumerate_partitions(lambda.size()),
    };
    let mut rows = Vec::new();
    for m in mus {
        let value = table.character(&lambda, &m).map_err(|e| CliError::from_core("--mu", e))?;
        rows.push(CharRow { mu: m.to_string(), value });
    }
    let width = rows.iter().map(|r| r.mu.len()).max().unwrap_or(0).max(2);
    let mut text = String::new();
    for r in &rows {
        let _ = writeln!(text, "{:<width$}  {}", r.mu, r.value);
    }
    let mut inputs = vec![("lambda", lambda.to_string())];
    if let Some(m) = mu {
        inputs.push(("mu", m.to_string()));
    }
    Ok(Envelope::new("symfunc mn", &inputs, &rows, text))
}

#[derive(Serialize)]
struct FmajOut {
    tableaux: u64,
    by_maj: BTreeMap<usize, u64>,
}

pub fn symfunc_fmaj(lambda: &str) -> CmdResult {
    let lambda = partition("--lambda", lambda)?;
    let by_maj = f_lambda_i(&lambda);
    let tableaux = by_maj.values().sum();
    let mut text = format!("{tableaux} standard tableaux of shape ({lambda})\n");
    for (i, c) in &by_maj {
        let _ = writeln!(text, "maj {i:>3}  {c}");
    }
    Ok(Envelope::new("symfunc fmaj", &[("lambda", lambda.to_string())], &FmajOut { tableaux, by_maj }, text))
}

#[derive(Serialize)]
struct CheckRow {
    id: usize,
    name: String,
    passed: bool,
    detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
}

#[derive(Serialize)]
struct VerifyOut {
    passed: usize,
    total: usize,
    checks: Vec<CheckRow>,
}

pub fn verify_all(level: &str, only: &[usize], seed: u64, timing: bool) -> CmdResult {
    let level: Level = level.parse().map_err(|e| CliError::from_core("--level", e))?;
    if let Some(bad) = only.iter().find(|id| !(1..=CRITERIA.len()).contains(id)) {
        return Err(CliError::invalid("--only", format!("no criterion {bad}; valid ids are 1..={}", CRITERIA.len())));
    }
    let selected: Vec<_> = CRITERIA.iter().filter(|c| only.is_empty() || only.contains(&c.id)).collect();
    let mut checks = Vec::new();
    let mut text = String::new();
    for criterion in selected {
        let o = run_check(criterion, level, seed);
        let _ = write!(text, "{} {:>2} {:<40} ", if o.passed { "PASS" } else { "FAIL" }, o.id, o.name);
        if timing {
            let _ = write!(text, "{:>8.2}s  ", o.elapsed.as_secs_f64());
        }
        let _ = writeln!(text, "{}", o.detail);
        checks.push(CheckRow {
            id: o.id,
            name: o.name,
            passed: o.passed,
            detail: o.detail,
            elapsed_ms: timing.then_some(o.elapsed.as_millis()),
        });
    }
    let passed = checks.iter().filter(|c| c.passed).count();
    let total = checks.len();
    let _ = writeln!(text, "{passed} of {total} checks passed");
    let inputs = [("level", level.to_string()), ("seed", seed.to_string())];
    let env = Envelope::new("verify all", &inputs, &VerifyOut { passed, total, checks }, text);
    Ok(if passed == total { env } else { env.failed() })
}
