//! The q-difference raising operators and the Macdonald operators.
//!
//! Two independent realizations are provided:
//!
//! * [`apply_m`], [`apply_d`], [`apply_macdonald_qt`] act on explicit Laurent
//!   polynomials. They sum the subset numerators over the common
//!   denominator `Delta(z) = prod_{i<j}(z_i - z_j)` and divide exactly.
//! * [`RaisingEngine`] acts on symmetric polynomials in the monomial basis.
//!   It antisymmetrizes a single block representative and reads the result
//!   off in the Schur basis, avoiding any polynomial division.
//!
//! The two are checked against each other in the tests.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::combinat::{distinct_permutations, permutations_with_sign, sort_strict_desc, subset_sign, subsets};
use crate::error::{Error, Result};
use crate::poly::{
    vandermonde, vandermonde_on, CartanData, Coeff, Exponent, LaurentPoly, QPoly, QtRational, SymPoly, WPoly,
};
use crate::symfun::KostkaTable;

/// Which operator family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// `M_{a,n} = sum_{|I|=a} z_I^n a_I(z) Gamma_I`, coefficients in `q`.
    M,
    /// `D_{a,n}`, the same sum with the shifts `D_I` and a `v` prefactor.
    D,
    /// The Macdonald operator `M_a^{q,t}`.
    MacdonaldQt,
}

/// One operator of a family, for rank `r` (so `r + 1` variables).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OperatorSpec {
    pub family: Family,
    pub alpha: usize,
    pub power: i64,
    pub rank: usize,
}

impl OperatorSpec {
    pub fn m(rank: usize, alpha: usize, power: i64) -> Self {
        OperatorSpec { family: Family::M, alpha, power, rank }
    }

    pub fn d(rank: usize, alpha: usize, power: i64) -> Self {
        OperatorSpec { family: Family::D, alpha, power, rank }
    }

    /// `alpha = 0` and `alpha = r + 1` are the boundary operators.
    pub fn is_boundary(&self) -> bool {
        self.alpha == 0 || self.alpha == self.rank + 1
    }
}

impl fmt::Display for OperatorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::M => write!(f, "M[{},{}]", self.alpha, self.power),
            Family::D => write!(f, "D[{},{}]", self.alpha, self.power),
            Family::MacdonaldQt => write!(f, "Mqt[{}]", self.alpha),
        }
    }
}

/// `w`-exponent of the `D_{a,n}` prefactor `v^(-Lambda_aa n / 2 - sum_b Lambda_ab)`.
pub fn d_prefactor_w_exponent(rank: usize, alpha: usize, n: i64) -> i64 {
    let c = CartanData::new(rank);
    -c.lambda(alpha, alpha) * n - 2 * c.row_sum(alpha)
}

fn check_input<C: Coeff>(rank: usize, alpha: usize, f: &LaurentPoly<C>) -> Result<()> {
    if f.nvars() != rank + 1 {
        return Err(Error::ArityMismatch { expected: rank + 1, found: f.nvars() });
    }
    if alpha > rank + 1 {
        return Err(Error::ArityMismatch { expected: rank + 1, found: alpha });
    }
    if !f.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(())
}

/// `sum_I sign(I) z_I^power Delta_I Delta_Ibar coupling(I, Ibar) shift_I(f)`
/// divided exactly by `Delta`.
fn vandermonde_cleared<C: Coeff>(
    f: &LaurentPoly<C>,
    alpha: usize,
    power: i64,
    coupling: impl Fn(&[usize], &[usize]) -> LaurentPoly<C>,
    shift: impl Fn(&[usize], &Exponent) -> C,
) -> Result<LaurentPoly<C>> {
    let n = f.nvars();
    let mut num = LaurentPoly::zero(n);
    for subset in subsets(n, alpha) {
        let rest: Vec<usize> = (0..n).filter(|i| !subset.contains(i)).collect();
        let mut zi = alloc::vec![0i32; n];
        for &i in &subset {
            zi[i] = power as i32;
        }
        let sign = C::from_int(subset_sign(&subset, n));
        let blocks = vandermonde_on::<C>(n, &subset).mul(&vandermonde_on(n, &rest)).mul(&coupling(&subset, &rest));
        let shifted = f.rescale(|e| shift(&subset, e));
        num.add_assign(&blocks.mul(&shifted).mul_monomial(&zi, &sign));
    }
    num.exact_div(&vandermonde(n))
}

fn subset_degree(subset: &[usize], e: &Exponent) -> i64 {
    subset.iter().map(|&i| e[i] as i64).sum()
}

/// `M_{alpha,n} f` for symmetric `f` in `r + 1` variables.
pub fn apply_m(rank: usize, alpha: usize, n: i64, f: &LaurentPoly<QPoly>) -> Result<LaurentPoly<QPoly>> {
    check_input(rank, alpha, f)?;
    if alpha == 0 {
        return Ok(f.clone());
    }
    let nv = rank + 1;
    vandermonde_cleared(
        f,
        alpha,
        n + (nv - alpha) as i64,
        |_, _| LaurentPoly::one(nv),
        |s, e| QPoly::power(subset_degree(s, e)),
    )
}

/// `D_{alpha,n} f` for symmetric `f` in `r + 1` variables, coefficients in `w`.
pub fn apply_d(rank: usize, alpha: usize, n: i64, f: &LaurentPoly<WPoly>) -> Result<LaurentPoly<WPoly>> {
    check_input(rank, alpha, f)?;
    if alpha == 0 {
        return Ok(f.clone());
    }
    let nv = rank + 1;
    let q_unit = -2 * nv as i64;
    let raised = vandermonde_cleared(
        f,
        alpha,
        n + (nv - alpha) as i64,
        |_, _| LaurentPoly::one(nv),
        |s, e| {
            let total: i64 = e.iter().map(|&x| x as i64).sum();
            WPoly::power(2 * alpha as i64 * total + q_unit * subset_degree(s, e))
        },
    )?;
    Ok(raised.scale(&WPoly::power(d_prefactor_w_exponent(rank, alpha, n))))
}

/// The Macdonald operator `M_alpha^{q,t}`, coefficients
/// `prod_{i in I, j not in I} (t z_i - z_j)/(z_i - z_j)` and shifts `z_i -> q z_i`
/// for `i in I`.
pub fn apply_macdonald_qt(alpha: usize, f: &LaurentPoly<QtRational>) -> Result<LaurentPoly<QtRational>> {
    let nv = f.nvars();
    check_input(nv - 1, alpha, f)?;
    if alpha == 0 {
        return Ok(f.clone());
    }
    let t = QtRational::t();
    vandermonde_cleared(
        f,
        alpha,
        0,
        |inside, outside| {
            let mut acc = LaurentPoly::one(nv);
            for &i in inside {
                for &j in outside {
                    let mut factor = LaurentPoly::var(nv, i).scale(&t);
                    factor.sub_assign(&LaurentPoly::var(nv, j));
                    acc = acc.mul(&factor);
                }
            }
            acc
        },
        |s, e| QtRational::q_power(subset_degree(s, e)),
    )
}

/// Multiplies the degree-`d` part by `v^(alpha d) = w^(2 alpha d)`.
pub fn dilate<C: Coeff>(f: &SymPoly<C>, alpha: usize, w_power: impl Fn(i64) -> C) -> SymPoly<C> {
    let mut out = SymPoly::zero(f.nvars());
    for (k, c) in f.terms() {
        let d: i64 = k.iter().map(|&x| x as i64).sum();
        out.add_term(k.clone(), &c.mul_ref(&w_power(2 * alpha as i64 * d)));
    }
    out
}

/// Raising operators on symmetric polynomials in the monomial basis.
///
/// For `f` symmetric, `Delta * M_{a,n} f` is the alternant of the block
/// representative `z_{I0}^(n+N-a) Delta_{I0} Delta_{I0bar} Gamma_{I0} f` divided by
/// `a! (N-a)!`. Keeping only exponents strictly decreasing inside each block
/// performs that division, and each surviving exponent `e` contributes
/// `+-s_{sort(e) - delta}`.
pub struct RaisingEngine {
    rank: usize,
    kostka: KostkaTable,
    // block Vandermonde terms `Delta_{I0} Delta_{I0bar}` for each `a`
    block_terms: Vec<Vec<(Exponent, i64)>>,
}

impl RaisingEngine {
    pub fn new(rank: usize) -> Self {
        let nv = rank + 1;
        let block_terms = (0..=nv)
            .map(|a| {
                let mut out = Vec::new();
                for (p1, s1) in permutations_with_sign(a) {
                    for (p2, s2) in permutations_with_sign(nv - a) {
                        let mut d = alloc::vec![0i32; nv];
                        for i in 0..a {
                            d[i] = (a - 1 - p1[i]) as i32;
                        }
                        for j in 0..nv - a {
                            d[a + j] = (nv - a - 1 - p2[j]) as i32;
                        }
                        out.push((d, s1 * s2));
                    }
                }
                out
            })
            .collect();
        RaisingEngine { rank, kostka: KostkaTable::new(nv), block_terms }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn kostka(&self) -> &KostkaTable {
        &self.kostka
    }

    /// Core routine: `sum_{|I|=a} z_I^n a_I Gamma_I` where `Gamma_I` multiplies
    /// `z^m` by `q_power(sum_{i in I} m_i)`.
    pub fn raise<C: Coeff>(&self, alpha: usize, n: i64, f: &SymPoly<C>, q_power: &dyn Fn(i64) -> C) -> SymPoly<C> {
        let nv = self.rank + 1;
        assert!(alpha <= nv && f.nvars() == nv);
        if alpha == 0 {
            return f.clone();
        }
        let shift = (n + (nv - alpha) as i64) as i32;
        let delta: Vec<i32> = (0..nv).map(|i| (nv - 1 - i) as i32).collect();
        let mut schur: BTreeMap<Exponent, C> = BTreeMap::new();
        let mut e = alloc::vec![0i32; nv];
        for (mu, c) in f.terms() {
            for m in distinct_permutations(mu) {
                let block_deg: i64 = m[..alpha].iter().map(|&x| x as i64).sum();
                let cq = c.mul_ref(&q_power(block_deg));
                for (d, s) in &self.block_terms[alpha] {
                    for i in 0..nv {
                        e[i] = m[i] + d[i] + if i < alpha { shift } else { 0 };
                    }
                    let block_ok =
                        e[..alpha].windows(2).all(|w| w[0] > w[1]) && e[alpha..].windows(2).all(|w| w[0] > w[1]);
                    if !block_ok {
                        continue;
                    }
                    let mut sorted = e.clone();
                    let Some(eps) = sort_strict_desc(&mut sorted) else { continue };
                    for i in 0..nv {
                        sorted[i] -= delta[i];
                    }
                    let term = if eps * s > 0 { cq.clone() } else { cq.neg_ref() };
                    match schur.entry(sorted) {
                        alloc::collections::btree_map::Entry::Vacant(v) => {
                            v.insert(term);
                        }
                        alloc::collections::btree_map::Entry::Occupied(mut o) => {
                            o.get_mut().add_assign_ref(&term);
                            if o.get().is_zero() {
                                o.remove();
                            }
                        }
                    }
                }
            }
        }
        self.kostka.from_schur(&schur)
    }

    /// `M_{alpha,n} f`.
    pub fn apply_m(&self, alpha: usize, n: i64, f: &SymPoly<QPoly>) -> SymPoly<QPoly> {
        self.raise(alpha, n, f, &QPoly::power)
    }

    /// `D_{alpha,n} f` with coefficients in `w`.
    pub fn apply_d(&self, alpha: usize, n: i64, f: &SymPoly<WPoly>) -> SymPoly<WPoly> {
        if alpha == 0 {
            return f.clone();
        }
        let q_unit = -2 * (self.rank as i64 + 1);
        let dilated = dilate(f, alpha, WPoly::power);
        let raised = self.raise(alpha, n, &dilated, &|k| WPoly::power(q_unit * k));
        raised.scale(&WPoly::power(d_prefactor_w_exponent(self.rank, alpha, n)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::{elementary, partitions_bounded};

    fn lift_q(f: &LaurentPoly<num_bigint::BigInt>) -> LaurentPoly<QPoly> {
        f.map_coeffs(QPoly::from_bigint)
    }

    fn one(nv: usize) -> LaurentPoly<QPoly> {
        LaurentPoly::one(nv)
    }

    #[test]
    fn m_on_one() {
        for r in 1..=3 {
            for a in 1..=r {
                assert_eq!(apply_m(r, a, 0, &one(r + 1)).unwrap(), one(r + 1));
                assert!(apply_m(r, a, -1, &one(r + 1)).unwrap().is_zero());
            }
        }
        assert_eq!(apply_m(2, 1, 1, &one(3)).unwrap(), lift_q(&elementary(1, 3)));
        let asym = LaurentPoly::<QPoly>::var(3, 0);
        assert_eq!(apply_m(2, 1, 0, &asym), Err(Error::NotSymmetric));
    }

    #[test]
    fn d_on_one() {
        for r in 1..=3 {
            let c = CartanData::new(r);
            for a in 1..=r {
                let d0 = apply_d(r, a, 0, &LaurentPoly::one(r + 1)).unwrap();
                assert_eq!(d0, LaurentPoly::constant(r + 1, WPoly::power(-2 * c.row_sum(a))));
                for p in 1..=(r + 1 - a) as i64 {
                    assert!(apply_d(r, a, -p, &LaurentPoly::one(r + 1)).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn macdonald_on_one() {
        let f = LaurentPoly::<QtRational>::one(3);
        let t = QtRational::t();
        let expected = QtRational::one().add_ref(&t).add_ref(&t.mul_ref(&t));
        assert_eq!(apply_macdonald_qt(1, &f).unwrap(), LaurentPoly::constant(3, expected));
    }

    #[test]
    fn fast_route_matches_literal_route() {
        for r in 1..=3usize {
            let nv = r + 1;
            let engine = RaisingEngine::new(r);
            for size in 0..=3u32 {
                for mu in partitions_bounded(size, nv, size) {
                    let mut key: Exponent = mu.iter().map(|&x| x as i32).collect();
                    key.resize(nv, 0);
                    let f = SymPoly::monomial(key, QPoly::one());
                    for a in 0..=nv {
                        for n in -1..=2 {
                            let fast = engine.apply_m(a, n, &f);
                            let slow = apply_m(r, a, n, &f.to_laurent()).unwrap();
                            assert_eq!(fast.to_laurent(), slow, "r={} a={} n={} f={}", r, a, n, f);
                            let fw = f.map_coeffs(|c| crate::poly::q_to_w(c, r));
                            let fast_d = engine.apply_d(a, n, &fw);
                            let slow_d = apply_d(r, a, n, &fw.to_laurent()).unwrap();
                            assert_eq!(fast_d.to_laurent(), slow_d);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn top_operator_is_determinant_times_shift() {
        let engine = RaisingEngine::new(2);
        let f = SymPoly::monomial(alloc::vec![2, 1, 0], QPoly::one());
        let out = engine.apply_m(3, 1, &f);
        assert_eq!(out, SymPoly::monomial(alloc::vec![3, 2, 1], QPoly::power(3)));
    }
}
