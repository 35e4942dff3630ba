//! Structural properties of the characters: limits in `q`, independence of
//! the operator order inside a level, agreement of the two operator routes,
//! and the closed sl2 recursion.

use alloc::vec::Vec;

use num_bigint::BigInt;

use super::relations::grid_label;
use super::CheckReport;
use crate::characters::{top_component, CharacterCache, NVector};
use crate::error::Result;
use crate::poly::{Coeff, LaurentPoly, QPoly, SymPoly};
use crate::symfun::{schur_sym, Partition};

/// `chi_n` is a polynomial in `q^-1`, its `q^0` part is the Schur function of
/// the top component, and at `q = 1` it is the product of rectangular Schur
/// functions `s_{(i^a)}^{n_i^(a)}`.
pub fn check_limits(cache: &CharacterCache, grid: &[NVector]) -> Result<CheckReport> {
    let r = cache.rank();
    let nv = r + 1;
    let mut report = CheckReport::new(alloc::format!("q limits r={}", r), grid_label(grid));
    for n in grid {
        let chi = cache.chi(n)?;
        let positive = chi.terms().flat_map(|(_, c)| c.terms().map(|(e, _)| e)).find(|&e| e > 0);
        report.record(alloc::format!("n={} polynomial in q^-1", n), positive.is_none(), || {
            alloc::format!("q^{} occurs", positive.unwrap())
        });

        let leading = chi.map_coeffs(|c| c.coeff(0));
        let top = top_component(n);
        let want: SymPoly<BigInt> = schur_sym(&top, nv);
        report.record(alloc::format!("n={} top component", n), leading == want, || {
            alloc::format!("q^0 part {} is not s_{}", leading, top)
        });

        let at_one = chi.map_coeffs(|c| c.eval_one());
        let product = rectangle_product(n);
        report.record(alloc::format!("n={} q=1 factorization", n), at_one == product, || {
            alloc::format!("q=1 value {} differs from {}", at_one, product)
        });
    }
    Ok(report)
}

fn rectangle_product(n: &NVector) -> SymPoly<BigInt> {
    let nv = n.rank() + 1;
    let mut acc = SymPoly::one(nv);
    for i in 1..=n.level() {
        for a in 1..=n.rank() {
            let rect = Partition::new(alloc::vec![i as u32; a]).expect("rectangle is a partition");
            let s: SymPoly<BigInt> = schur_sym(&rect, nv);
            for _ in 0..n.get(a, i) {
                acc = acc.mul(&s);
            }
        }
    }
    acc
}

/// Within one level the operators `M_{a,i}` commute, so applying them with
/// `a` ascending gives the same character.
pub fn check_order_independence(cache: &CharacterCache, grid: &[NVector]) -> Result<CheckReport> {
    let r = cache.rank();
    let mut report = CheckReport::new(alloc::format!("order inside a level r={}", r), grid_label(grid));
    for n in grid {
        let mut sequence = Vec::new();
        for i in 1..=n.level() {
            for a in 1..=r {
                sequence.extend(core::iter::repeat_n((a, i as i64), n.get(a, i) as usize));
            }
        }
        let prefactor = QPoly::power(n.q_prefactor_doubled() / 2);
        let reordered = cache.m_product_in_order(&sequence).scale(&prefactor);
        let ok = reordered == cache.chi(n)?;
        report.record(alloc::format!("n={}", n), ok, || alloc::string::String::from("ascending order differs"));
    }
    Ok(report)
}

/// `v^X G_n` converts cleanly to a polynomial in `q` and equals `chi_n`.
pub fn check_path_consistency(cache: &CharacterCache, grid: &[NVector]) -> Result<CheckReport> {
    let r = cache.rank();
    let mut report = CheckReport::new(alloc::format!("M and D routes r={}", r), grid_label(grid));
    for n in grid {
        let chi = cache.chi(n)?;
        match cache.graded_character_via_d(n) {
            Ok(g) => {
                report.record(alloc::format!("n={}", n), g.chi == chi, || alloc::format!("D route gives {}", g.chi))
            }
            Err(e) => report.record(alloc::format!("n={}", n), false, || alloc::format!("conversion failed: {}", e)),
        }
    }
    Ok(report)
}

/// Level-one sl2: `chi_{n+1} + (1 - q^-n) chi_{n-1} = (z + z^-1) chi_n` with
/// `chi_0 = 1`, compared against the characters for `n <= max_n`.
pub fn check_sl2_recursion(max_n: u32) -> Result<CheckReport> {
    let cache = CharacterCache::new(1);
    let mut report = CheckReport::new("sl2 level-one recursion", alloc::format!("n <= {}", max_n));
    let z = LaurentPoly::from_terms(1, [(alloc::vec![1], QPoly::one()), (alloc::vec![-1], QPoly::one())]);
    let mut prev = LaurentPoly::<QPoly>::zero(1);
    let mut cur = LaurentPoly::<QPoly>::one(1);
    for n in 0..=max_n {
        let got = cache.chi(&NVector::level_one(&[n]))?.constrain();
        report.record(alloc::format!("n={}", n), got == cur, || {
            alloc::format!("character {} but recursion gives {}", got, cur)
        });
        let mut factor = QPoly::one();
        factor.sub_assign_ref(&QPoly::power(-(n as i64)));
        let mut next = z.mul(&cur);
        next.sub_assign(&prev.scale(&factor));
        prev = core::mem::replace(&mut cur, next);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::nvector_grid;

    #[test]
    fn limits_and_routes() {
        for r in 1..=2 {
            let cache = CharacterCache::new(r);
            let grid = nvector_grid(r, 2, 3);
            assert!(check_limits(&cache, &grid).unwrap().passed());
            assert!(check_order_independence(&cache, &grid).unwrap().passed());
            assert!(check_path_consistency(&cache, &grid).unwrap().passed());
        }
    }

    #[test]
    fn sl2_q_one_is_binomial() {
        let cache = CharacterCache::new(1);
        let chi = cache.chi(&NVector::level_one(&[3])).unwrap();
        let at_one = chi.map_coeffs(|c| c.eval_one()).to_laurent();
        let e1 = LaurentPoly::<BigInt>::from_terms(
            2,
            [(alloc::vec![1, 0], BigInt::from(1)), (alloc::vec![0, 1], BigInt::from(1))],
        );
        assert_eq!(at_one, e1.pow(3));
    }

    #[test]
    fn sl2_recursion() {
        assert!(check_sl2_recursion(6).unwrap().passed());
    }
}
