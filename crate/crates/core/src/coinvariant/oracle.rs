//! Independent route to graded characters through explicit matrices:
//! `∏(1 − z^{d_i}) / det(1 − z M_σ)` with the determinant taken from the
//! characteristic polynomial of the (signed) permutation matrix.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{degree_numerator, GroupKind};
use crate::error::{Error, Result};
use crate::exactmath::IntPoly;
use crate::partitions::{DoublePartition, Partition};

/// A signed permutation of `{1, …, n}`: `word[i-1] = ±j` sends `e_i` to `±e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    word: Vec<i64>,
}

impl SignedPermutation {
    pub fn new(word: Vec<i64>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &w in &word {
            let j = w.unsigned_abs() as usize;
            if j == 0 || j > n || seen[j - 1] {
                return Err(Error::Internal(format!("{word:?} is not a signed permutation")));
            }
            seen[j - 1] = true;
        }
        Ok(SignedPermutation { word })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation { word: (1..=n as i64).collect() }
    }

    /// Deterministic representative: consecutive blocks, positive cycles
    /// first; a negative cycle carries a single sign flip on its closing edge.
    pub fn class_representative(class: &DoublePartition) -> Self {
        let mut word = Vec::with_capacity(class.size());
        let cycles = class
            .positive
            .parts()
            .iter()
            .map(|&r| (r, 1))
            .chain(class.negative.parts().iter().map(|&r| (r, -1)));
        for (r, sign) in cycles {
            let start = word.len() as i64 + 1;
            for k in 0..r as i64 - 1 {
                word.push(start + k + 1);
            }
            word.push(sign * start);
        }
        SignedPermutation { word }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[i64] {
        &self.word
    }

    /// The class `(μ, λ)`: cycles of `|σ|` split by the product of their signs.
    pub fn cycle_type(&self) -> DoublePartition {
        let n = self.n();
        let mut visited = vec![false; n];
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for s in 0..n {
            if visited[s] {
                continue;
            }
            let (mut len, mut sign, mut i) = (0, 1, s);
            while !visited[i] {
                visited[i] = true;
                len += 1;
                sign *= self.word[i].signum();
                i = self.word[i].unsigned_abs() as usize - 1;
            }
            if sign > 0 {
                pos.push(len);
            } else {
                neg.push(len);
            }
        }
        DoublePartition::new(Partition::new(pos).unwrap(), Partition::new(neg).unwrap())
    }

    /// The `n × n` signed permutation matrix.
    pub fn matrix(&self) -> Vec<Vec<BigRational>> {
        let n = self.n();
        let mut m = vec![vec![BigRational::zero(); n]; n];
        for (i, &w) in self.word.iter().enumerate() {
            m[w.unsigned_abs() as usize - 1][i] = BigRational::from_integer(w.signum().into());
        }
        m
    }

    /// All `2^n n!` signed permutations, in a fixed order.
    pub fn all(n: usize) -> Vec<SignedPermutation> {
        let mut out = Vec::new();
        for perm in permutations(n) {
            for mask in 0u32..(1 << n) {
                let word = perm
                    .iter()
                    .enumerate()
                    .map(|(i, &p)| if mask >> i & 1 == 1 { -(p as i64) } else { p as i64 })
                    .collect();
                out.push(SignedPermutation { word });
            }
        }
        out
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.word.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n);
            out.push(q);
        }
    }
    out
}

/// Coefficients `c_0, …, c_n` of `det(λI − A)` by Faddeev–LeVerrier.
pub fn char_poly_coeffs(a: &[Vec<BigRational>]) -> Vec<BigRational> {
    let n = a.len();
    let mut c = vec![BigRational::zero(); n + 1];
    c[n] = BigRational::one();
    let mut m = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = matmul(a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &c[n - k + 1];
        }
        m = next;
        let am = matmul(a, &m);
        let trace: BigRational = (0..n).map(|i| am[i][i].clone()).sum();
        c[n - k] = -trace / BigRational::from_integer(BigInt::from(k));
    }
    c
}

fn matmul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let mut out = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

/// `det(1 − zA)`, the reversal of the characteristic polynomial.
fn det_one_minus_z(a: &[Vec<BigRational>]) -> Result<IntPoly> {
    let c = char_poly_coeffs(a);
    let n = a.len();
    let coeffs = (0..=n)
        .map(|k| {
            let v = &c[n - k];
            if v.is_integer() {
                Ok(v.to_integer())
            } else {
                Err(Error::Internal("non-integral characteristic polynomial".into()))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPoly::new(coeffs))
}

fn oracle(kind: GroupKind, sigma: &SignedPermutation) -> Result<IntPoly> {
    let det = det_one_minus_z(&sigma.matrix())?;
    degree_numerator(kind, sigma.n())
        .exact_div(&det)
        .ok_or_else(|| Error::Internal(format!("det(1 - zM) does not divide for {sigma}")))
}

/// `∏_{i≤n}(1 − z^{2i}) / det(1 − z M_σ)`.
pub fn graded_char_bc_oracle(sigma: &SignedPermutation) -> Result<IntPoly> {
    oracle(GroupKind::BC, sigma)
}

/// `∏_{i≤n}(1 − z^i) / det(1 − z M_σ)` for an unsigned permutation.
pub fn graded_char_a_oracle(sigma: &SignedPermutation) -> Result<IntPoly> {
    if sigma.word.iter().any(|&w| w < 0) {
        return Err(Error::Internal(format!("{sigma} is not a permutation")));
    }
    oracle(GroupKind::A, sigma)
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::partitions::{enumerate_double_partitions, hyperoctahedral_order};

    fn ints(p: &IntPoly) -> Vec<i64> {
        p.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn determinants() {
        let neg = SignedPermutation::new(vec![-1]).unwrap();
        assert_eq!(ints(&det_one_minus_z(&neg.matrix()).unwrap()), [1, 1]);
        assert_eq!(ints(&graded_char_bc_oracle(&neg).unwrap()), [1, -1]);
        let swap = SignedPermutation::new(vec![2, 1]).unwrap();
        assert_eq!(ints(&det_one_minus_z(&swap.matrix()).unwrap()), [1, 0, -1]);
        let id = SignedPermutation::identity(2);
        assert_eq!(ints(&graded_char_bc_oracle(&id).unwrap()), [1, 2, 2, 2, 1]);
    }

    #[test]
    fn representatives_have_their_class() {
        for n in 0..=6 {
            for c in enumerate_double_partitions(n) {
                assert_eq!(SignedPermutation::class_representative(&c).cycle_type(), c);
            }
        }
    }

    #[test]
    fn brute_force_class_sizes() {
        for n in 0..=4 {
            let all = SignedPermutation::all(n);
            assert_eq!(all.len(), usize::try_from(hyperoctahedral_order(n)).unwrap());
            let mut counts: BTreeMap<DoublePartition, usize> = BTreeMap::new();
            for s in &all {
                *counts.entry(s.cycle_type()).or_default() += 1;
            }
            for c in enumerate_double_partitions(n) {
                assert_eq!(BigInt::from(counts[&c]), c.class_size_bc(), "{c}");
            }
        }
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(SignedPermutation::new(vec![1, 1]).is_err());
        assert!(SignedPermutation::new(vec![0]).is_err());
        assert!(graded_char_a_oracle(&SignedPermutation::new(vec![-1]).unwrap()).is_err());
    }
}
