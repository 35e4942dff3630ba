//! Difference equations in `n` satisfied by the characters and by the
//! `D`-operator coefficients.

use alloc::string::String;

use super::CheckReport;
use crate::characters::{CharacterCache, NVector};
use crate::error::Result;
use crate::poly::{Coeff, QPoly, SymPoly, WPoly};
use crate::whittaker::level1_toda_residual;

fn v(e: i64) -> WPoly {
    WPoly::power(2 * e)
}

/// Level `k >= 2` equation:
///
/// ```text
/// sum_{a=1}^{r+1} chi_{n + e_{a-1,k-1} - e_{a,k-1} + e_{a,k} - e_{a-1,k}}
///   - sum_{a=1}^{r} q^{k-1-sum_i i n_i^(a)} chi_{n + e_{a-1,k-1} - e_{a,k-1} + e_{a+1,k} - e_{a,k}}
///   = e_1 chi_n
/// ```
///
/// modulo `z_1 ... z_{r+1} = 1`.
///
/// Grid points without `n_k^(a), n_{k-1}^(a) >= 1` for all `a` are skipped.
pub fn check_difference_equation(cache: &CharacterCache, level: usize, grid: &[NVector]) -> Result<CheckReport> {
    check_difference_equation_perturbed(cache, level, grid, 0)
}

/// As [`check_difference_equation`] with `q_shift` added to every
/// `q`-exponent of the second sum.
pub fn check_difference_equation_perturbed(
    cache: &CharacterCache,
    level: usize,
    grid: &[NVector],
    q_shift: i64,
) -> Result<CheckReport> {
    let r = cache.rank();
    let k = level;
    assert!(k >= 2, "level one is covered by the Toda form");
    let mut report = CheckReport::new(alloc::format!("difference equation r={} k={}", r, k), grid_label(grid));
    let nv = r + 1;
    let e1 = SymPoly::elementary(1, nv);
    for n in grid {
        assert_eq!(n.level(), k);
        let admissible = (1..=r).all(|a| n.get(a, k) >= 1 && n.get(a, k - 1) >= 1);
        if !admissible {
            continue;
        }
        let mut lhs = SymPoly::zero(nv);
        for a in 1..=r + 1 {
            let s = n.shifted(&[(a - 1, k - 1, 1), (a, k - 1, -1), (a, k, 1), (a - 1, k, -1)]);
            lhs.add_assign(&cache.chi_or_zero(s.as_ref())?);
        }
        for a in 1..=r {
            let weight: i64 = (1..=k).map(|i| i as i64 * n.get(a, i) as i64).sum();
            let s = n.shifted(&[(a - 1, k - 1, 1), (a, k - 1, -1), (a + 1, k, 1), (a, k, -1)]);
            let q = QPoly::power(k as i64 - 1 - weight + q_shift);
            lhs.sub_assign(&cache.chi_or_zero(s.as_ref())?.scale(&q));
        }
        let rhs = e1.mul(&cache.chi(n)?);
        let ok = lhs.eq_modulo_det(&rhs);
        report.record(n.to_text(), ok, || alloc::format!("residual {}", lhs.modulo_det().sub(&rhs.modulo_det())));
    }
    Ok(report)
}

/// Level-one equation in Toda form for every grid vector.
pub fn check_level1_toda_grid(cache: &CharacterCache, grid: &[NVector]) -> Result<CheckReport> {
    let mut report = CheckReport::new(alloc::format!("level-one Toda equation r={}", cache.rank()), grid_label(grid));
    for n in grid {
        let res = level1_toda_residual(cache, n)?;
        report.record(n.to_text(), res.is_zero(), || alloc::format!("residual {}", res));
    }
    Ok(report)
}

/// The five tabulated `sl(3)` level-one coefficients `G_{1,0}, G_{0,1},
/// G_{2,0}, G_{1,1}, G_{0,2}`, compared after `z_1 z_2 z_3 = 1`.
pub fn check_sl3_g_table(cache: &CharacterCache) -> Result<CheckReport> {
    assert_eq!(cache.rank(), 2);
    let e1 = SymPoly::<WPoly>::elementary(1, 3);
    let e2 = SymPoly::<WPoly>::elementary(2, 3);
    let one = SymPoly::<WPoly>::one(3);
    let gap = WPoly::one().sub_ref(&v(-3));
    let expected: [([u32; 2], SymPoly<WPoly>); 5] = [
        ([1, 0], e1.scale(&v(-4))),
        ([0, 1], e2.scale(&v(-4))),
        ([2, 0], e1.mul(&e1).scale(&v(-3)).add(&e2.scale(&gap)).scale(&v(-7))),
        ([1, 1], e1.mul(&e2).scale(&v(-3)).add(&one.scale(&gap)).scale(&v(-6))),
        ([0, 2], e2.mul(&e2).scale(&v(-3)).add(&e1.scale(&gap)).scale(&v(-7))),
    ];
    let mut report = CheckReport::new("tabulated sl3 level-one G", "n+p <= 2");
    for (n, want) in expected {
        let got = cache.g_coefficient(&NVector::level_one(&n))?;
        let want = want.constrain();
        report.record(alloc::format!("G_{{{},{}}}", n[0], n[1]), got == want, || {
            alloc::format!("got {} expected {}", got, want)
        });
    }
    Ok(report)
}

fn g2(cache: &CharacterCache, level1: [i64; 2], level2: [i64; 2]) -> Result<SymPoly<WPoly>> {
    let entries = [level1, level2];
    if entries.iter().flatten().any(|&x| x < 0) {
        return Ok(SymPoly::zero(3));
    }
    let levels = entries.iter().map(|l| l.iter().map(|&x| x as u32).collect()).collect();
    cache.g_sym(&NVector::new(2, levels)?)
}

fn g1(cache: &CharacterCache, n: i64, p: i64) -> Result<SymPoly<WPoly>> {
    if n < 0 || p < 0 {
        return Ok(SymPoly::zero(3));
    }
    cache.g_sym(&NVector::level_one(&[n as u32, p as u32]))
}

/// The two `sl(3)` level-one recursions for `G_{n,p}` (from the first and
/// second conserved quantities), modulo `z_1 z_2 z_3 = 1`.
pub fn check_sl3_level1_g(cache: &CharacterCache, max_sigma: u32) -> Result<CheckReport> {
    assert_eq!(cache.rank(), 2);
    let mut report = CheckReport::new("sl3 level-one G recursions", alloc::format!("n+p <= {}", max_sigma));
    let e1 = SymPoly::<WPoly>::elementary(1, 3);
    let e2 = SymPoly::<WPoly>::elementary(2, 3);
    let one = WPoly::one();
    for s in 0..=max_sigma as i64 {
        for n in 0..=s {
            let p = s - n;
            let g = g1(cache, n, p)?;
            let lhs = g1(cache, n + 1, p)?
                .scale(&v(3))
                .add(&g1(cache, n - 1, p + 1)?.scale(&v(-3 * n).sub_ref(&one)))
                .add(&g1(cache, n, p - 1)?.scale(&v(-3 - 3 * n).mul_ref(&v(-3 * p).sub_ref(&one))));
            let rhs = e1.mul(&g).scale(&v(-2 * n - p - 1));
            let ok = lhs.eq_modulo_det(&rhs);
            report.record(alloc::format!("C1 ({},{})", n, p), ok, || String::from("first recursion fails"));
            let lhs = g1(cache, n, p + 1)?
                .scale(&v(3))
                .add(&g1(cache, n + 1, p - 1)?.scale(&v(-3 * p).sub_ref(&one)))
                .add(&g1(cache, n - 1, p)?.scale(&v(-3 - 3 * p).mul_ref(&v(-3 * n).sub_ref(&one))));
            let rhs = e2.mul(&g).scale(&v(-n - 2 * p - 1));
            let ok = lhs.eq_modulo_det(&rhs);
            report.record(alloc::format!("C2 ({},{})", n, p), ok, || String::from("second recursion fails"));
        }
    }
    Ok(report)
}

/// Which right-hand side the second level-two relation uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sl3Level2Variant {
    Faithful,
    /// Replaces `e_2` by `e_1` in the second relation.
    E1ForE2,
}

/// Both `sl(3)` level-two relations at one point. `(n1, p1)` are the level-1
/// entries for `a = 1, 2` and `(n2, p2)` the level-2 entries.
pub fn check_sl3_level2_g(
    cache: &CharacterCache,
    [n1, p1, n2, p2]: [i64; 4],
    variant: Sl3Level2Variant,
) -> Result<CheckReport> {
    let mut report = CheckReport::new("sl3 level-two G relations", alloc::format!("({},{};{},{})", n1, p1, n2, p2));
    level2_point(cache, [n1, p1, n2, p2], variant, &mut report)?;
    Ok(report)
}

fn level2_point(
    cache: &CharacterCache,
    [n1, p1, n2, p2]: [i64; 4],
    variant: Sl3Level2Variant,
    report: &mut CheckReport,
) -> Result<()> {
    assert_eq!(cache.rank(), 2);
    let g = |a: i64, b: i64, c: i64, d: i64| g2(cache, [a, b], [c, d]);
    let e1 = SymPoly::<WPoly>::elementary(1, 3);
    let e2 = match variant {
        Sl3Level2Variant::Faithful => SymPoly::<WPoly>::elementary(2, 3),
        Sl3Level2Variant::E1ForE2 => e1.clone(),
    };
    let centre = g(n1, p1, n2, p2)?;
    let label = alloc::format!("({},{};{},{})", n1, p1, n2, p2);

    let mut lhs = g(n1 - 1, p1, n2 + 1, p2)?;
    lhs.add_assign(&g(n1 + 1, p1 - 1, n2 - 1, p2 + 1)?.scale(&v(-3 * n2)));
    lhs.add_assign(&g(n1, p1 + 1, n2, p2 - 1)?.scale(&v(-3 * n2 - 3 * p2)));
    lhs.sub_assign(&g(n1 - 1, p1, n2 - 1, p2 + 1)?.scale(&v(-3)));
    lhs.sub_assign(&g(n1 + 1, p1 - 1, n2, p2 - 1)?.scale(&v(-3 - 3 * n2)));
    let rhs = e1.mul(&centre).scale(&v(-1 - 2 * n2 - p2));
    report.record(alloc::format!("C1 {}", label), lhs.eq_modulo_det(&rhs), || String::from("first relation fails"));

    let mut lhs = g(n1, p1 - 1, n2, p2 + 1)?;
    lhs.add_assign(&g(n1 - 1, p1 + 1, n2 + 1, p2 - 1)?.scale(&v(-3 * p2)));
    lhs.add_assign(&g(n1 + 1, p1, n2 - 1, p2)?.scale(&v(-3 * n2 - 3 * p2)));
    lhs.sub_assign(&g(n1, p1 - 1, n2 + 1, p2 - 1)?.scale(&v(-3)));
    lhs.sub_assign(&g(n1 - 1, p1 + 1, n2 - 1, p2)?.scale(&v(-3 - 3 * p2)));
    let rhs = e2.mul(&centre).scale(&v(-1 - n2 - 2 * p2));
    report.record(alloc::format!("C2 {}", label), lhs.eq_modulo_det(&rhs), || String::from("second relation fails"));
    Ok(())
}

/// Both level-two relations at every point with entries in `1..=max_entry`,
/// the points where no shifted index is negative, plus the compatibility
/// `e_2 G_{1,0} = e_1 G_{0,1}` at level one.
pub fn check_sl3_level2_g_grid(cache: &CharacterCache, max_entry: i64) -> Result<CheckReport> {
    let mut report = CheckReport::new("sl3 level-two G relations", alloc::format!("entries in 1..={}", max_entry));
    for n1 in 1..=max_entry {
        for p1 in 1..=max_entry {
            for n2 in 1..=max_entry {
                for p2 in 1..=max_entry {
                    level2_point(cache, [n1, p1, n2, p2], Sl3Level2Variant::Faithful, &mut report)?;
                }
            }
        }
    }
    let e1 = SymPoly::<WPoly>::elementary(1, 3);
    let e2 = SymPoly::<WPoly>::elementary(2, 3);
    let lhs = e2.mul(&g1(cache, 1, 0)?);
    let rhs = e1.mul(&g1(cache, 0, 1)?);
    report.record("e2 G_{1,0} = e1 G_{0,1}", lhs.eq_modulo_det(&rhs), || String::from("compatibility fails"));
    Ok(report)
}

pub(super) fn grid_label(grid: &[NVector]) -> String {
    let max_sigma = grid.iter().map(NVector::sigma).max().unwrap_or(0);
    alloc::format!("{} vectors, sigma <= {}", grid.len(), max_sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::nvector_grid;

    #[test]
    fn tabulated_values() {
        let cache = CharacterCache::new(2);
        let r = check_sl3_g_table(&cache).unwrap();
        assert!(r.passed(), "{}", r);
    }

    #[test]
    fn sl2_level_two() {
        let cache = CharacterCache::new(1);
        let grid = nvector_grid(1, 2, 4);
        let r = check_difference_equation(&cache, 2, &grid).unwrap();
        assert!(r.passed(), "{}", r);
        let bad = check_difference_equation_perturbed(&cache, 2, &grid, 1).unwrap();
        assert!(!bad.passed());
    }

    #[test]
    fn sl3_relations_small() {
        let cache = CharacterCache::new(2);
        assert!(check_sl3_level1_g(&cache, 2).unwrap().passed());
        assert!(check_sl3_level2_g(&cache, [1, 1, 1, 1], Sl3Level2Variant::Faithful).unwrap().passed());
        assert!(!check_sl3_level2_g(&cache, [1, 1, 1, 1], Sl3Level2Variant::E1ForE2).unwrap().passed());
        // a level-1 entry of 0 sends a shifted index negative; the relations
        // are not expected there
        assert!(!check_sl3_level2_g(&cache, [0, 1, 1, 1], Sl3Level2Variant::Faithful).unwrap().passed());
        assert!(check_sl3_level2_g_grid(&cache, 2).unwrap().passed());
    }

    #[test]
    fn level_one_toda() {
        let cache = CharacterCache::new(2);
        let r = check_level1_toda_grid(&cache, &nvector_grid(2, 1, 3)).unwrap();
        assert!(r.passed(), "{}", r);
    }
}
