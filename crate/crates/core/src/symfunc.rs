//! Type-A character theory: irreducible `S_n` characters by the
//! Murnaghan–Nakayama rule, standard Young tableaux with their major index,
//! and the multiplicities of irreducibles in the graded coinvariant algebra.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::coinvariant::{graded_char_a, inner_product, ClassFunction, GroupKind};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, factorial, Partition};

/// Memoized Murnaghan–Nakayama evaluator. The cache is owned, so a table is
/// used from one thread at a time; create one per worker for parallel use.
#[derive(Debug, Default)]
pub struct CharacterTable {
    memo: HashMap<(Vec<usize>, Vec<usize>), i64>,
}

impl CharacterTable {
    pub fn new() -> Self {
        CharacterTable::default()
    }

    /// `χ^λ_μ`.
    pub fn character(&mut self, lambda: &Partition, mu: &Partition) -> Result<i64> {
        if lambda.size() != mu.size() {
            return Err(Error::SizeMismatch { expected: lambda.size(), actual: mu.size() });
        }
        Ok(self.eval(lambda.parts().to_vec(), mu.parts()))
    }

    fn eval(&mut self, lambda: Vec<usize>, mu: &[usize]) -> i64 {
        let Some((&r, rest)) = mu.split_first() else {
            return 1;
        };
        let key = (lambda, mu.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let lambda = &key.0;
        // Beta-set of λ with k = ℓ(λ) beads: removing an r-strip moves one
        // bead down by r; the height is the number of beads jumped over.
        let k = lambda.len();
        let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + k - 1 - i).collect();
        let mut total = 0;
        for (idx, &b) in beta.iter().enumerate() {
            if b < r || beta.contains(&(b - r)) {
                continue;
            }
            let target = b - r;
            let height = beta.iter().filter(|&&x| x > target && x < b).count();
            let mut moved = beta.clone();
            moved[idx] = target;
            moved.sort_unstable_by(|a, b| b.cmp(a));
            let shape: Vec<usize> = moved
                .iter()
                .enumerate()
                .map(|(i, &x)| x - (k - 1 - i))
                .filter(|&p| p > 0)
                .collect();
            let sign = if height % 2 == 0 { 1 } else { -1 };
            total += sign * self.eval(shape, rest);
        }
        self.memo.insert(key, total);
        total
    }
}

/// `χ^λ_μ` with a fresh cache.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    CharacterTable::new().character(lambda, mu)
}

/// `χ^λ` as a class function on `S_{|λ|}`.
pub fn irreducible_character(lambda: &Partition) -> ClassFunction {
    let mut t = CharacterTable::new();
    let n = lambda.size();
    let values = GroupKind::A
        .classes(n)
        .into_iter()
        .map(|c| {
            let v = t.character(lambda, &c.positive).expect("sizes agree");
            (c, BigRational::from_integer(v.into()))
        })
        .collect();
    ClassFunction::from_values(GroupKind::A, n, values).expect("all classes present")
}

/// A filling of a Young diagram by `1..=n`, increasing along rows and columns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableauStats {
    pub descents: Vec<usize>,
    pub maj: usize,
}

impl StandardTableau {
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("rows are nonempty")
    }

    /// `i` is a descent when `i + 1` sits in a lower row than `i`.
    pub fn stats(&self) -> TableauStats {
        let n: usize = self.rows.iter().map(Vec::len).sum();
        let mut row_of = vec![0; n + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &e in row {
                row_of[e] = r;
            }
        }
        let descents: Vec<usize> = (1..n).filter(|&i| row_of[i + 1] > row_of[i]).collect();
        let maj = descents.iter().sum();
        TableauStats { descents, maj }
    }
}

/// All standard tableaux of shape `λ`, by placing `1, 2, …` in turn.
pub fn standard_tableaux(lambda: &Partition) -> Vec<StandardTableau> {
    let shape = lambda.parts();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
    let mut out = Vec::new();
    place(1, lambda.size(), shape, &mut rows, &mut out);
    out
}

fn place(next: usize, n: usize, shape: &[usize], rows: &mut [Vec<usize>], out: &mut Vec<StandardTableau>) {
    if next > n {
        out.push(StandardTableau { rows: rows.to_vec() });
        return;
    }
    for r in 0..shape.len() {
        let len = rows[r].len();
        if len < shape[r] && (r == 0 || rows[r - 1].len() > len) {
            rows[r].push(next);
            place(next + 1, n, shape, rows, out);
            rows[r].pop();
        }
    }
}

/// `f_{λ,i}`: the number of standard tableaux of shape `λ` with major index `i`.
pub fn f_lambda_i(lambda: &Partition) -> BTreeMap<usize, u64> {
    let mut counts = BTreeMap::new();
    for t in standard_tableaux(lambda) {
        *counts.entry(t.stats().maj).or_insert(0) += 1;
    }
    counts
}

/// `n! / ∏ hooks`.
pub fn hook_length_count(lambda: &Partition) -> BigInt {
    let conj = lambda.conjugate();
    let mut hooks = BigInt::from(1);
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = conj.parts()[j] - i - 1;
            hooks *= arm + leg + 1;
        }
    }
    factorial(lambda.size()) / hooks
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityReport {
    pub n: usize,
    /// Number of `(λ, i)` pairs compared.
    pub checked: usize,
}

/// Checks `⟨χ^λ, χ_{R_n^i}⟩ = f_{λ,i}` for all `λ ⊢ n` and all degrees `i`.
pub fn verify_multiplicity_formula(n: usize) -> Result<MultiplicityReport> {
    let graded = graded_char_a(n)?;
    let components: Vec<ClassFunction> = (0..=graded.top_degree()).map(|i| graded.component(i)).collect();
    let mut checked = 0;
    for lambda in enumerate_partitions(n) {
        let chi = irreducible_character(&lambda);
        let f = f_lambda_i(&lambda);
        for (i, comp) in components.iter().enumerate() {
            let mult = inner_product(&chi, comp)?;
            let expected = BigRational::from_integer(f.get(&i).copied().unwrap_or(0).into());
            if mult != expected {
                return Err(Error::Verification(format!(
                    "multiplicity of χ^({lambda}) in R_{n}^{i} is {mult}, tableaux give {expected}"
                )));
            }
            checked += 1;
        }
    }
    Ok(MultiplicityReport { n, checked })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_and_sign() {
        for n in 1..=6 {
            let row = Partition::new(vec![n]).unwrap();
            let col = Partition::new(vec![1; n]).unwrap();
            for mu in enumerate_partitions(n) {
                assert_eq!(mn_character(&row, &mu).unwrap(), 1);
                let sign = if (n - mu.len()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(mn_character(&col, &mu).unwrap(), sign);
            }
        }
    }

    #[test]
    fn standard_rep_of_s3() {
        // trace of a 3-cycle on the 2-dimensional standard representation
        assert_eq!(mn_character(&p("2,1"), &p("3")).unwrap(), -1);
        assert_eq!(mn_character(&p("2,1"), &p("2,1")).unwrap(), 0);
        assert_eq!(mn_character(&p("2,1"), &p("1,1,1")).unwrap(), 2);
        assert!(mn_character(&p("2,1"), &p("2")).is_err());
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=6 {
            let parts = enumerate_partitions(n);
            let mut t = CharacterTable::new();
            for mu in &parts {
                for nu in &parts {
                    let s: i64 = parts
                        .iter()
                        .map(|l| t.character(l, mu).unwrap() * t.character(l, nu).unwrap())
                        .sum();
                    let expected = if mu == nu { mu.z() } else { BigInt::from(0) };
                    assert_eq!(BigInt::from(s), expected, "{mu} {nu}");
                }
            }
        }
    }

    #[test]
    fn irreducibles_are_orthonormal() {
        for n in 1..=5 {
            let chars: Vec<_> = enumerate_partitions(n).iter().map(irreducible_character).collect();
            for (i, a) in chars.iter().enumerate() {
                for (j, b) in chars.iter().enumerate() {
                    let ip = inner_product(a, b).unwrap();
                    assert_eq!(ip, BigRational::from_integer((i == j).into()));
                }
            }
        }
    }

    #[test]
    fn major_index_counts() {
        let f = f_lambda_i(&p("2,1,1"));
        assert_eq!(f, BTreeMap::from([(3, 1), (4, 1), (5, 1)]));
        assert_eq!(f_lambda_i(&p("4")), BTreeMap::from([(0, 1)]));
        assert_eq!(f_lambda_i(&p("1,1,1")), BTreeMap::from([(3, 1)]));
        assert_eq!(f_lambda_i(&p("2,1")), BTreeMap::from([(1, 1), (2, 1)]));
    }

    #[test]
    fn tableau_counts() {
        for n in 1..=8 {
            let mut squares = BigInt::from(0);
            for lambda in enumerate_partitions(n) {
                let count = standard_tableaux(&lambda).len();
                assert_eq!(BigInt::from(count), hook_length_count(&lambda));
                let total: u64 = f_lambda_i(&lambda).values().sum();
                assert_eq!(total as usize, count);
                if n <= 7 {
                    squares += count * count;
                }
            }
            if n <= 7 {
                assert_eq!(squares, factorial(n));
            }
        }
    }

    #[test]
    fn tableaux_are_standard() {
        for t in standard_tableaux(&p("3,2,1")) {
            let rows = t.rows();
            for (r, row) in rows.iter().enumerate() {
                assert!(row.windows(2).all(|w| w[0] < w[1]));
                if r > 0 {
                    assert!(row.iter().zip(&rows[r - 1]).all(|(a, b)| a > b));
                }
            }
            assert_eq!(t.shape(), p("3,2,1"));
        }
    }

    #[test]
    fn multiplicity_formula_small() {
        for n in 1..=5 {
            verify_multiplicity_formula(n).unwrap();
        }
    }
}
