//! Cross-checks against element-by-element computations over the whole
//! hyperoctahedral group, independent of class sizes and centralizers.

use std::collections::BTreeMap;

use torilab_core::betti::twisted_betti_numbers;
use torilab_core::charpoly::preset;
use torilab_core::coinvariant::{graded_char, graded_char_bc_oracle, GroupKind, SignedPermutation};
use torilab_core::exactmath::{BigInt, BigRational, Poly, RationalFunction};
use torilab_core::partitions::DoublePartition;
use torilab_core::tori::{count_tori, total_tori};

#[test]
fn graded_characters_match_every_element() {
    for n in 0..=3 {
        let graded = graded_char(GroupKind::BC, n).unwrap();
        for sigma in SignedPermutation::all(n) {
            let oracle = graded_char_bc_oracle(&sigma).unwrap();
            assert_eq!(graded.poly(&sigma.cycle_type()), Some(&oracle), "{sigma}");
        }
    }
}

#[test]
fn twisted_betti_numbers_by_element_sum() {
    for n in 0..=3 {
        let all = SignedPermutation::all(n);
        let order = BigRational::from_integer(BigInt::from(all.len()));
        for (_, p) in torilab_core::charpoly::canonical_rep_char_polys() {
            let top = n * n;
            let mut sums = vec![BigRational::from_integer(0.into()); top + 1];
            for sigma in &all {
                let pv = p.evaluate(&sigma.cycle_type());
                let chi = graded_char_bc_oracle(sigma).unwrap();
                for (i, s) in sums.iter_mut().enumerate() {
                    *s += &pv * BigRational::from_integer(chi.coeff(i));
                }
            }
            let expected: Vec<BigRational> = sums.into_iter().map(|s| s / &order).collect();
            assert_eq!(twisted_betti_numbers(GroupKind::BC, &p, n, top).unwrap(), expected, "{p} n={n}");
        }
    }
}

#[test]
fn representation_multiplicities_are_natural_numbers() {
    for n in 1..=4 {
        for name in ["Cn", "Sym2Cn", "Wedge2Cn", "Wedge3Cn"] {
            let p = preset(name).unwrap();
            for v in twisted_betti_numbers(GroupKind::BC, &p, n, n * n).unwrap() {
                assert!(v.is_integer() && v >= BigRational::from_integer(0.into()), "{name} n={n}: {v}");
            }
        }
    }
}

/// Number of tori of each type from the graded character:
/// `q^{2n²} Σ_i χ_{R^i}(σ) q^{−i} / |C(σ)|`.
#[test]
fn counts_agree_with_graded_character_route() {
    for n in 0..=4 {
        let graded = graded_char(GroupKind::BC, n).unwrap();
        let top = total_tori(GroupKind::BC, n);
        for (class, chi) in graded.polys() {
            let coeffs: Vec<BigRational> = chi.coeffs().iter().cloned().map(BigRational::from_integer).collect();
            let degree = coeffs.len().saturating_sub(1);
            let reversed: Vec<BigRational> = coeffs.into_iter().rev().collect();
            // Σ χ_i q^{-i} = q^{-deg} Σ χ_i q^{deg-i}
            let sum = &RationalFunction::from_poly(&Poly::new(reversed)) / &RationalFunction::monomial(degree);
            let c = BigRational::from_integer(class.centralizer_bc()).recip();
            let expected = (&top * &sum).scale(&c);
            assert_eq!(count_tori(GroupKind::BC, class).unwrap(), expected, "{class}");
        }
    }
}

#[test]
fn class_sizes_from_all_elements() {
    let mut seen: BTreeMap<DoublePartition, usize> = BTreeMap::new();
    for sigma in SignedPermutation::all(3) {
        *seen.entry(sigma.cycle_type()).or_default() += 1;
    }
    for (class, count) in seen {
        assert_eq!(GroupKind::BC.class_size(&class), BigInt::from(count));
    }
}

#[test]
fn wedge_power_characters_from_matrices() {
    // ∧²: (tr(M)² − tr(M²)) / 2 on each element
    let wedge2 = preset("Wedge2Cn").unwrap();
    let sym2 = preset("Sym2Cn").unwrap();
    for sigma in SignedPermutation::all(3) {
        let m = sigma.matrix();
        let n = m.len();
        let tr: BigRational = (0..n).map(|i| m[i][i].clone()).sum();
        let tr2: BigRational = (0..n).flat_map(|i| (0..n).map(move |k| (i, k))).map(|(i, k)| &m[i][k] * &m[k][i]).sum();
        let half = BigRational::new(1.into(), 2.into());
        let c = sigma.cycle_type();
        assert_eq!(wedge2.evaluate(&c), (&tr * &tr - &tr2) * &half);
        assert_eq!(sym2.evaluate(&c), (&tr * &tr + &tr2) * &half);
    }
}
