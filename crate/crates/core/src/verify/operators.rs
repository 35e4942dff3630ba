//! Operator identities checked on a monomial basis: the dual quantum
//! Q-system for `D` and `M`, and the eigenvalue equation of the level-one
//! characters.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cell::RefCell;

use super::relations::grid_label;
use super::CheckReport;
use crate::characters::{CharacterCache, NVector};
use crate::error::Result;
use crate::poly::{CartanData, Coeff, Exponent, QPoly, SymPoly, WPoly};
use crate::qdiff::RaisingEngine;
use crate::symfun::partitions_bounded;

/// Which operator family a relation is checked for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorForm {
    /// `D_{a,n}` with coefficients in `v = w^2`.
    D,
    /// `M_{a,n}` with coefficients in `q`.
    M,
}

type Apply<C> = fn(&RaisingEngine, usize, i64, &SymPoly<C>) -> SymPoly<C>;

/// Images of monomial symmetric functions, extended linearly.
struct LinearImages<'a, C> {
    engine: &'a RaisingEngine,
    apply: Apply<C>,
    images: RefCell<BTreeMap<(usize, i64, Exponent), SymPoly<C>>>,
}

impl<'a, C: Coeff> LinearImages<'a, C> {
    fn new(engine: &'a RaisingEngine, apply: Apply<C>) -> Self {
        LinearImages { engine, apply, images: RefCell::new(BTreeMap::new()) }
    }

    fn apply(&self, alpha: usize, n: i64, f: &SymPoly<C>) -> SymPoly<C> {
        let mut out = SymPoly::zero(f.nvars());
        for (key, c) in f.terms() {
            let cached = self.images.borrow().get(&(alpha, n, key.clone())).cloned();
            let image = cached.unwrap_or_else(|| {
                let img = (self.apply)(self.engine, alpha, n, &SymPoly::monomial(key.clone(), C::one()));
                self.images.borrow_mut().insert((alpha, n, key.clone()), img.clone());
                img
            });
            out.add_assign(&image.scale(c));
        }
        out
    }

    /// `A(B(f))` for operators given as `(alpha, n)`.
    fn compose(&self, outer: (usize, i64), inner: (usize, i64), f: &SymPoly<C>) -> SymPoly<C> {
        self.apply(outer.0, outer.1, &self.apply(inner.0, inner.1, f))
    }
}

fn monomial_basis(nvars: usize, degree_bound: u32) -> Vec<Exponent> {
    let mut out = Vec::new();
    for d in 0..=degree_bound {
        for p in partitions_bounded(d, nvars, d) {
            let mut e: Exponent = p.iter().map(|&x| x as i32).collect();
            e.resize(nvars, 0);
            out.push(e);
        }
    }
    out
}

struct Scalars<C> {
    /// Factor in `A_{a,n} A_{b,p} = f(a, b, p - n) A_{b,p} A_{a,n}`.
    commutation: fn(&CartanData, usize, usize, i64) -> C,
    /// `(c, d)` in `c A_{a,n+1} A_{a,n-1} = A_{a,n}^2 - d A_{a+1,n} A_{a-1,n}`.
    recursion: fn(&CartanData, usize, i64) -> (C, C),
}

fn d_scalars() -> Scalars<WPoly> {
    Scalars {
        commutation: |c, a, b, d| WPoly::power(-2 * c.lambda(a, b) * d),
        recursion: |c, a, shift| {
            (WPoly::power(-2 * c.lambda(a, a) + 2 * shift), WPoly::power(-2 * (c.rank() as i64 + 1)))
        },
    }
}

fn m_scalars() -> Scalars<QPoly> {
    Scalars {
        commutation: |_, a, b, d| QPoly::power(a.min(b) as i64 * d),
        recursion: |_, a, shift| (QPoly::power(a as i64 + shift), QPoly::one()),
    }
}

/// Commutation relations in the window `|p - n| <= |b - a| + 1` and the
/// Q-system recursion, for `a, b` in `0..=r+1` and `n, p` in `window`, on
/// every `m_mu` of degree at most `degree_bound`.
pub fn check_dual_qsystem(
    engine: &RaisingEngine,
    window: (i64, i64),
    degree_bound: u32,
    form: OperatorForm,
) -> CheckReport {
    check_dual_qsystem_perturbed(engine, window, degree_bound, form, 0)
}

/// As [`check_dual_qsystem`] with `shift` added to the exponent of the scalar
/// in front of `A_{a,n+1} A_{a,n-1}`.
pub fn check_dual_qsystem_perturbed(
    engine: &RaisingEngine,
    window: (i64, i64),
    degree_bound: u32,
    form: OperatorForm,
    shift: i64,
) -> CheckReport {
    match form {
        OperatorForm::D => run_qsystem(engine, window, degree_bound, shift, "D", RaisingEngine::apply_d, d_scalars()),
        OperatorForm::M => run_qsystem(engine, window, degree_bound, shift, "M", RaisingEngine::apply_m, m_scalars()),
    }
}

fn run_qsystem<C: Coeff>(
    engine: &RaisingEngine,
    (lo, hi): (i64, i64),
    degree_bound: u32,
    shift: i64,
    label: &str,
    apply: Apply<C>,
    scalars: Scalars<C>,
) -> CheckReport {
    let r = engine.rank();
    let nv = r + 1;
    let cartan = CartanData::new(r);
    let ops = LinearImages::new(engine, apply);
    let basis: Vec<SymPoly<C>> =
        monomial_basis(nv, degree_bound).into_iter().map(|e| SymPoly::monomial(e, C::one())).collect();
    let mut report = CheckReport::new(
        alloc::format!("dual Q-system ({} form) r={}", label, r),
        alloc::format!("n,p in [{},{}], degree <= {}, {} basis elements", lo, hi, degree_bound, basis.len()),
    );
    for a in 0..=nv {
        for b in 0..=nv {
            for n in lo..=hi {
                for p in lo..=hi {
                    if (p - n).abs() > (b as i64 - a as i64).abs() + 1 {
                        continue;
                    }
                    let factor = (scalars.commutation)(&cartan, a, b, p - n);
                    let bad = basis
                        .iter()
                        .find(|f| ops.compose((a, n), (b, p), f) != ops.compose((b, p), (a, n), f).scale(&factor));
                    report.record(alloc::format!("commute ({},{}) ({},{})", a, n, b, p), bad.is_none(), || {
                        alloc::format!("fails on {}", bad.unwrap())
                    });
                }
            }
        }
    }
    for a in 1..=r {
        for n in lo..=hi {
            let (c, d) = (scalars.recursion)(&cartan, a, shift);
            let bad = basis.iter().find(|f| {
                let lhs = ops.compose((a, n + 1), (a, n - 1), f).scale(&c);
                let square = ops.compose((a, n), (a, n), f);
                let cross = ops.compose((a + 1, n), (a - 1, n), f).scale(&d);
                lhs != square.sub(&cross)
            });
            report.record(alloc::format!("recursion a={} n={}", a, n), bad.is_none(), || {
                alloc::format!("fails on {}", bad.unwrap())
            });
        }
    }
    report
}

/// `M_{a,0} chi_n = q^{sum_b min(a,b) n^(b)} chi_n` for level-one `n`.
pub fn check_eigen(cache: &CharacterCache, grid: &[NVector]) -> Result<CheckReport> {
    check_eigen_perturbed(cache, grid, 0)
}

/// As [`check_eigen`] with `shift` added to the eigenvalue exponent.
pub fn check_eigen_perturbed(cache: &CharacterCache, grid: &[NVector], shift: i64) -> Result<CheckReport> {
    let r = cache.rank();
    let mut report = CheckReport::new(alloc::format!("eigenvalue equation r={}", r), grid_label(grid));
    for n in grid {
        assert_eq!(n.level(), 1, "eigenvalue equation is for level one");
        let chi = cache.chi(n)?;
        for a in 1..=r {
            let exponent: i64 = (1..=r).map(|b| a.min(b) as i64 * n.get(b, 1) as i64).sum::<i64>() + shift;
            let image = cache.engine().apply_m(a, 0, &chi);
            let ok = image == chi.scale(&QPoly::power(exponent));
            report.record(alloc::format!("n={} a={}", n, a), ok, || alloc::format!("eigenvalue q^{} fails", exponent));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::nvector_grid;

    #[test]
    fn qsystem_small() {
        let engine = RaisingEngine::new(2);
        for form in [OperatorForm::D, OperatorForm::M] {
            let r = check_dual_qsystem(&engine, (-1, 1), 3, form);
            assert!(r.passed(), "{}", r);
            assert!(!check_dual_qsystem_perturbed(&engine, (-1, 1), 3, form, 1).passed());
        }
    }

    #[test]
    fn eigen_small() {
        let cache = CharacterCache::new(2);
        let grid = nvector_grid(2, 1, 3);
        assert!(check_eigen(&cache, &grid).unwrap().passed());
        assert!(!check_eigen_perturbed(&cache, &grid, 1).unwrap().passed());
    }

    #[test]
    fn eigen_examples() {
        let cache = CharacterCache::new(3);
        let chi = cache.chi(&NVector::level_one(&[1, 0, 1])).unwrap();
        assert_eq!(cache.engine().apply_m(2, 0, &chi), chi.scale(&QPoly::power(3)));
        let one = SymPoly::<QPoly>::one(4);
        assert_eq!(cache.engine().apply_m(2, 0, &one), one);
    }
}
