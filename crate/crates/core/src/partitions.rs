//! Partitions and double partitions: conjugacy-class labels of `S_n` and of
//! the hyperoctahedral group `B_n`, with the centralizer orders `z_λ`, `v_μ`.
//!
//! Text forms: a partition is its comma-separated parts (`""` is empty); a
//! double partition is `"μ|λ"`, e.g. `"2,1|3"` for `μ = (2,1)`, `λ = (3)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// A weakly decreasing list of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts into decreasing order; zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::parse(0, "partition parts must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds from multiplicities `r -> n_r`.
    pub fn from_multiplicities(mult: &BTreeMap<usize, usize>) -> Self {
        let mut parts = Vec::new();
        for (&r, &m) in mult.iter().rev() {
            parts.extend(std::iter::repeat_n(r, m));
        }
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `|λ|`
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `n_r(λ)`, the number of parts equal to `r`.
    pub fn multiplicity(&self, r: usize) -> usize {
        self.0.iter().filter(|&&p| p == r).count()
    }

    /// Nonzero multiplicities keyed by part size.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=cols)
                .map(|c| self.0.iter().filter(|&&p| p >= c).count())
                .collect(),
        )
    }

    /// `z_λ = Π_r n_r! r^{n_r}`; `n!/z_λ` is the size of the class in `S_n`.
    pub fn z(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .map(|(r, m)| factorial(m) * BigInt::from(r).pow(m as u32))
            .product()
    }

    /// `v_μ = Π_r n_r! (2r)^{n_r}`.
    pub fn v(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .map(|(r, m)| factorial(m) * BigInt::from(2 * r).pow(m as u32))
            .product()
    }
}

/// `z_λ` as a free function.
pub fn z_lambda(lambda: &Partition) -> BigInt {
    lambda.z()
}

/// `v_μ` as a free function.
pub fn v_mu(mu: &Partition) -> BigInt {
    mu.v()
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `|B_n| = 2^n n!`
pub fn hyperoctahedral_order(n: usize) -> BigInt {
    factorial(n) << n
}

/// Size of the class of `λ` in `S_n`.
pub fn class_size_a(lambda: &Partition) -> BigInt {
    factorial(lambda.size()) / lambda.z()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        let mut offset = 0;
        for piece in s.split(',') {
            let p: usize = piece
                .trim()
                .parse()
                .map_err(|_| Error::parse(offset, format!("invalid part {:?}", piece.trim())))?;
            if p == 0 {
                return Err(Error::parse(offset, "partition parts must be positive"));
            }
            parts.push(p);
            offset += piece.len() + 1;
        }
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse-lexicographic order, e.g. for `n = 4`:
/// `4, 3+1, 2+2, 2+1+1, 1+1+1+1`. `n = 0` yields the empty partition.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for p in (1..=remaining.min(max)).rev() {
        current.push(p);
        fill(remaining - p, p, current, out);
        current.pop();
    }
}

/// A `B_n` conjugacy class: `positive` holds the lengths of the positive
/// cycles (`μ`), `negative` those of the negative cycles (`λ`).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DoublePartition {
    pub positive: Partition,
    pub negative: Partition,
}

impl DoublePartition {
    pub fn new(positive: Partition, negative: Partition) -> Self {
        DoublePartition { positive, negative }
    }

    /// A type-A class embedded as `(λ, ∅)`.
    pub fn type_a(lambda: Partition) -> Self {
        DoublePartition::new(lambda, Partition::empty())
    }

    pub fn empty() -> Self {
        DoublePartition::default()
    }

    /// The identity class `(1^n, ∅)`.
    pub fn identity(n: usize) -> Self {
        DoublePartition::type_a(Partition(vec![1; n]))
    }

    /// The ambient `n = |μ| + |λ|`.
    pub fn size(&self) -> usize {
        self.positive.size() + self.negative.size()
    }

    /// Centralizer order `v_μ v_λ` in `B_n`.
    pub fn centralizer_bc(&self) -> BigInt {
        self.positive.v() * self.negative.v()
    }

    /// Class size `2^n n! / (v_μ v_λ)` in `B_n`.
    pub fn class_size_bc(&self) -> BigInt {
        hyperoctahedral_order(self.size()) / self.centralizer_bc()
    }
}

impl fmt::Display for DoublePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.positive, self.negative)
    }
}

impl FromStr for DoublePartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (mu, la) = s
            .split_once('|')
            .ok_or_else(|| Error::parse(0, "double partition needs the form \"μ|λ\""))?;
        let positive = mu.parse()?;
        let negative = la.parse().map_err(|e| match e {
            Error::Parse { offset, message } => Error::Parse {
                offset: offset + mu.len() + 1,
                message,
            },
            other => other,
        })?;
        Ok(DoublePartition { positive, negative })
    }
}

/// All double partitions of `n`: `|μ|` runs from `n` down to `0`, and within
/// each split `μ` and then `λ` follow the partition order.
pub fn enumerate_double_partitions(n: usize) -> Vec<DoublePartition> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        let mus = enumerate_partitions(k);
        let lambdas = enumerate_partitions(n - k);
        for mu in &mus {
            for la in &lambdas {
                out.push(DoublePartition::new(mu.clone(), la.clone()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    // Independent counter: p(n, max part ≤ m) by the textbook recursion.
    fn count(n: usize, m: usize) -> usize {
        if n == 0 {
            return 1;
        }
        if m == 0 {
            return 0;
        }
        count(n, m - 1) + if m <= n { count(n - m, m) } else { 0 }
    }

    #[test]
    fn partition_counts() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(4).len(), 5);
        assert_eq!(count(10, 10), 42);
        assert_eq!(enumerate_partitions(10).len(), 42);
        for n in 0..15 {
            assert_eq!(enumerate_partitions(n).len(), count(n, n));
        }
    }

    #[test]
    fn reverse_lexicographic_order() {
        let got: Vec<String> = enumerate_partitions(4).iter().map(ToString::to_string).collect();
        assert_eq!(got, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
    }

    #[test]
    fn double_partition_counts() {
        let one: Vec<String> = enumerate_double_partitions(1).iter().map(ToString::to_string).collect();
        assert_eq!(one, ["1|", "|1"]);
        assert_eq!(enumerate_double_partitions(2).len(), 5);
        assert_eq!(enumerate_double_partitions(4).len(), 20);
    }

    #[test]
    fn centralizer_orders() {
        assert_eq!(p("1,1,1,1").z(), factorial(4));
        assert_eq!(p("2,1").z(), 2.into());
        assert_eq!(class_size_a(&p("2,1")), 3.into());
        assert_eq!(p("3").z(), 3.into());
        assert_eq!(class_size_a(&p("3")), 2.into());
        assert_eq!(p("1").v(), 2.into());
        assert_eq!(Partition::empty().z(), 1.into());
        assert_eq!(Partition::empty().v(), 1.into());
        let id: DoublePartition = "1|".parse().unwrap();
        assert_eq!(id.class_size_bc(), 1.into());
    }

    #[test]
    fn class_equations() {
        for n in 0..=12 {
            let total: BigInt = enumerate_partitions(n).iter().map(class_size_a).sum();
            assert_eq!(total, factorial(n));
        }
        for n in 0..=8 {
            let mut total = BigInt::from(0);
            for c in enumerate_double_partitions(n) {
                assert_eq!(&hyperoctahedral_order(n) % c.centralizer_bc(), BigInt::from(0));
                total += c.class_size_bc();
            }
            assert_eq!(total, hyperoctahedral_order(n));
        }
    }

    #[test]
    fn text_forms() {
        let d: DoublePartition = "2,1|3".parse().unwrap();
        assert_eq!(d.positive, p("2,1"));
        assert_eq!(d.negative, p("3"));
        assert_eq!(d.to_string(), "2,1|3");
        assert_eq!(p("1,2,1").to_string(), "2,1,1");
        assert_eq!("|".parse::<DoublePartition>().unwrap(), DoublePartition::empty());
        assert!(matches!("2,x|1".parse::<DoublePartition>(), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!("2|0".parse::<DoublePartition>(), Err(Error::Parse { offset: 2, .. })));
        assert!("21".parse::<DoublePartition>().is_err());
    }

    #[test]
    fn conjugate_and_multiplicities() {
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
        assert_eq!(p("2,2,1").multiplicity(2), 2);
        assert_eq!(Partition::from_multiplicities(&p("3,1,1").multiplicities()), p("3,1,1"));
    }
}
