//! Level-one q-Toda relations and the fundamental `sl(2)` q-Whittaker
//! series, expanded in `u = q^-1` with coefficients rational in `p`.

use alloc::vec::Vec;
use core::fmt;

use crate::characters::{CharacterCache, NVector};
use crate::error::{Error, Result};
use crate::poly::{Coeff, PRational, QPoly, SymPoly};

/// `p^(half/2) * sum_{k <= order} c_k u^k`, with everything above `order`
/// discarded.
#[derive(Clone, PartialEq)]
pub struct TruncatedSeries {
    order: usize,
    half: i8,
    coeffs: Vec<PRational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { order, half: 0, coeffs: alloc::vec![PRational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, PRational::one())
    }

    pub fn constant(order: usize, c: PRational) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `sum_j c^j u^(step j)`, the expansion of `1 / (1 - c u^step)`.
    pub fn geometric(order: usize, step: usize, c: &PRational) -> Self {
        assert!(step > 0, "a constant geometric series does not truncate");
        let mut s = Self::zero(order);
        let mut pw = PRational::one();
        for k in (0..=order).step_by(step) {
            s.coeffs[k] = pw.clone();
            pw = pw.mul_ref(c);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Exponent of the symbolic `p^(1/2)` prefactor.
    pub fn half(&self) -> i8 {
        self.half
    }

    pub fn with_half(mut self, half: i8) -> Self {
        self.half = half;
        self
    }

    pub fn coeff(&self, k: usize) -> &PRational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[PRational] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, k: usize, c: PRational) {
        self.coeffs[k] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check(&self, rhs: &Self) {
        assert_eq!(self.order, rhs.order, "truncation orders differ");
        assert_eq!(self.half, rhs.half, "half-integer prefactors differ");
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&rhs.coeffs) {
            a.add_assign_ref(b);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&rhs.coeffs) {
            a.sub_assign_ref(b);
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.order, rhs.order, "truncation orders differ");
        let mut out = Self::zero(self.order).with_half(self.half + rhs.half);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=self.order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j].add_assign_ref(&a.mul_ref(b));
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &PRational) -> Self {
        let mut out = self.clone();
        for a in out.coeffs.iter_mut() {
            *a = a.mul_ref(c);
        }
        out
    }

    /// Multiply by `u^k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = Self::zero(self.order).with_half(self.half);
        for i in 0..=self.order.saturating_sub(k) {
            if k <= self.order {
                out.coeffs[i + k] = self.coeffs[i].clone();
            }
        }
        out
    }

    /// Highest `k` with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.half != 0 {
            write!(f, "p^({}/2)*[", self.half)?;
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({})*u^{}", c, k)?;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(u^{})", self.order + 1)?;
        if self.half != 0 {
            f.write_str("]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `prod_{i=1}^{order} 1 / (1 - c u^i)`.
fn inverse_product(order: usize, c: &PRational) -> TruncatedSeries {
    (1..=order).fold(TruncatedSeries::one(order), |acc, i| acc.mul(&TruncatedSeries::geometric(order, i, c)))
}

/// The fundamental series
/// `p^(n - 1/2) sum_a u^(a(n+1)) / prod_{i=1}^a (1 - u^i)(1 - p^2 u^i)`,
/// or its reflection `p -> p^-1` when `reflected`.
pub fn w_series(n: u32, reflected: bool, order: usize) -> TruncatedSeries {
    let sign = if reflected { -1 } else { 1 };
    let p2 = PRational::p_power(2 * sign);
    let one = TruncatedSeries::one(order);
    let mut sum = TruncatedSeries::zero(order);
    let mut denominator = one.clone();
    let mut a = 0usize;
    while a * (n as usize + 1) <= order {
        if a > 0 {
            denominator = denominator
                .mul(&TruncatedSeries::geometric(order, a, &PRational::one()))
                .mul(&TruncatedSeries::geometric(order, a, &p2));
        }
        sum = sum.add(&denominator.shift(a * (n as usize + 1)));
        a += 1;
    }
    sum.scale(&PRational::p_power(sign * n as i64)).with_half(-sign as i8)
}

/// `W(n+1) + (1 - u^n) W(n-1) - (p + p^-1) W(n)`.
///
/// At `n = 0` the middle term is `0` times a divergent sum; it is taken as
/// its limit `p^(-3/2) / prod_i (1 - u^i)(1 - p^2 u^i)`, the value the
/// factor `1 - u^n` extracts from the tail of the sum.
pub fn toda_residual(n: u32, reflected: bool, order: usize) -> TruncatedSeries {
    let w = |m: u32| w_series(m, reflected, order);
    toda_residual_of(&w, reflected, n, order)
}

fn toda_residual_of(w: &dyn Fn(u32) -> TruncatedSeries, reflected: bool, n: u32, order: usize) -> TruncatedSeries {
    let sign = if reflected { -1 } else { 1 };
    let middle = if n > 0 {
        let prev = w(n - 1);
        prev.sub(&prev.shift(n as usize))
    } else {
        inverse_product(order, &PRational::one())
            .mul(&inverse_product(order, &PRational::p_power(2 * sign)))
            .scale(&PRational::p_power(-sign))
            .with_half(-sign as i8)
    };
    let p_sum = PRational::p().add_ref(&PRational::p_power(-1));
    w(n + 1).add(&middle).sub(&w(n).scale(&p_sum))
}

/// The Toda relation for both fundamental series, all `n` in `n_range`.
pub fn check_toda_eigen(n_range: impl IntoIterator<Item = u32>, order: usize) -> bool {
    n_range.into_iter().all(|n| [false, true].iter().all(|&refl| toda_residual(n, refl, order).is_zero()))
}

/// Same check against a caller-supplied family of series.
pub fn check_toda_eigen_with(
    w: &dyn Fn(u32) -> TruncatedSeries,
    reflected: bool,
    n_range: impl IntoIterator<Item = u32>,
    order: usize,
) -> bool {
    n_range.into_iter().all(|n| toda_residual_of(w, reflected, n, order).is_zero())
}

/// `c_lambda W'_lambda(n) + c_{-lambda-2} W'_{-lambda-2}(n)` with
/// `c_lambda = p^(1/2) / ((1 - p^-2) prod_i (1 - p^-2 u^i))` and
/// `c_{-lambda-2}` its reflection.
pub fn class_one_series(n: u32, order: usize) -> TruncatedSeries {
    let coefficient = |sign: i64| {
        let c = PRational::p_power(-2 * sign);
        let first = PRational::one().sub_ref(&c).inverse().expect("nonzero");
        inverse_product(order, &c).scale(&first).with_half(sign as i8)
    };
    let direct = coefficient(1).mul(&w_series(n, false, order));
    let reflected = coefficient(-1).mul(&w_series(n, true, order));
    direct.add(&reflected)
}

/// `chi(q^-1, z)` for `sl(2)` as a series in `u = q^-1`, with `z_1 = p`,
/// `z_2 = p^-1`.
pub fn sl2_character_series(chi: &SymPoly<QPoly>, order: usize) -> Result<TruncatedSeries> {
    if chi.nvars() != 2 {
        return Err(Error::ArityMismatch { expected: 2, found: chi.nvars() });
    }
    let mut out = TruncatedSeries::zero(order);
    for (key, c) in chi.terms() {
        let d = (key[0] - key[1]) as i64;
        let orbit = if d == 0 { PRational::one() } else { PRational::p_power(d).add_ref(&PRational::p_power(-d)) };
        for (e, k) in c.terms() {
            if e > 0 {
                return Err(Error::NotLaurentInQ);
            }
            let idx = (-e) as usize;
            if idx <= order {
                out.coeffs[idx].add_assign_ref(&orbit.mul_int(i64::try_from(k.clone()).expect("small coefficient")));
            }
        }
    }
    Ok(out)
}

/// Compares the class-one combination with the `sl(2)` level-one
/// characters, to order `order`.
pub fn class_one_combination(n_range: impl IntoIterator<Item = u32>, order: usize) -> Result<bool> {
    let cache = CharacterCache::new(1);
    for n in n_range {
        let chi = cache.chi(&NVector::level_one(&[n]))?;
        if sl2_character_series(&chi, order)? != class_one_series(n, order) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `sum_{a=0}^{r} chi_{n - e_a + e_{a+1}} - sum_{a=1}^{r} q^{-n_a}
/// chi_{n - e_a + e_{a+1}} - e_1 chi_n`, modulo `z_1 ... z_{r+1} = 1`.
/// Vectors with a negative entry contribute zero.
pub fn level1_toda_residual(cache: &CharacterCache, n: &NVector) -> Result<SymPoly<QPoly>> {
    let r = cache.rank();
    let nv = r + 1;
    let mut lhs = SymPoly::zero(nv);
    for a in 0..=r {
        let shifted = n.shifted(&[(a, 1, -1), (a + 1, 1, 1)]);
        let chi = cache.chi_or_zero(shifted.as_ref())?;
        lhs.add_assign(&chi);
        if a >= 1 {
            lhs.sub_assign(&chi.scale(&QPoly::power(-(n.get(a, 1) as i64))));
        }
    }
    let rhs = SymPoly::elementary(1, nv).mul(&cache.chi(n)?);
    Ok(lhs.modulo_det().sub(&rhs.modulo_det()))
}

/// The level-one Toda relation for every vector in `grid`.
pub fn check_level1_toda<'a>(r: usize, grid: impl IntoIterator<Item = &'a NVector>) -> Result<bool> {
    let cache = CharacterCache::new(r);
    for n in grid {
        if !level1_toda_residual(&cache, n)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force(n: u32, order: usize) -> TruncatedSeries {
        // expands each 1/(1 - x) factor directly, one a at a time
        let p2 = PRational::p_power(2);
        let mut out = TruncatedSeries::zero(order);
        for a in 0..=order {
            let base = a * (n as usize + 1);
            if base > order {
                break;
            }
            let mut term = TruncatedSeries::one(order).shift(base);
            for i in 1..=a {
                let mut g1 = TruncatedSeries::zero(order);
                let mut g2 = TruncatedSeries::zero(order);
                let mut pw = PRational::one();
                let mut j = 0;
                while i * j <= order {
                    g1.set_coeff(i * j, PRational::one());
                    g2.set_coeff(i * j, pw.clone());
                    pw = pw.mul_ref(&p2);
                    j += 1;
                }
                term = term.mul(&g1).mul(&g2);
            }
            out = out.add(&term);
        }
        out.scale(&PRational::p_power(n as i64)).with_half(-1)
    }

    #[test]
    fn series_against_direct_expansion() {
        for n in 0..3 {
            assert_eq!(w_series(n, false, 6), brute_force(n, 6));
        }
        let w = w_series(0, false, 2);
        // u^2: 1 + p^2 from a = 1 and 1 from a = 2
        assert_eq!(*w.coeff(0), PRational::one());
        assert_eq!(*w.coeff(1), PRational::one());
        let c2 = PRational::from_int(2).add_ref(&PRational::p_power(2));
        assert_eq!(*w.coeff(2), c2);
        assert_eq!(w.half(), -1);
    }

    #[test]
    fn reflection_inverts_p() {
        let a = w_series(2, false, 5);
        let b = w_series(2, true, 5);
        assert_eq!(b.half(), 1);
        let inv = PRational::p_power(-1);
        for k in 0..=5 {
            let c = b.coeff(k);
            let num = c.numer().eval_with(&inv, PRational::from_bigint);
            let den = c.denom().eval_with(&inv, PRational::from_bigint);
            assert_eq!(num.div_exact(&den).unwrap(), *a.coeff(k));
        }
    }

    #[test]
    fn toda_relation() {
        assert!(check_toda_eigen(0..=3, 8));
        assert!(check_toda_eigen(0..=2, 0));
        let broken = |m: u32| {
            let mut s = w_series(m, false, 6);
            if m == 2 {
                s.set_coeff(3, s.coeff(3).add_ref(&PRational::one()));
            }
            s
        };
        assert!(check_toda_eigen_with(&|m| w_series(m, false, 6), false, 0..=3, 6));
        assert!(!check_toda_eigen_with(&broken, false, 0..=3, 6));
    }

    #[test]
    fn class_one_small() {
        assert_eq!(class_one_series(0, 8), TruncatedSeries::one(8));
        let chi1 = PRational::p().add_ref(&PRational::p_power(-1));
        assert_eq!(class_one_series(1, 8), TruncatedSeries::constant(8, chi1));
        assert!(class_one_combination(0..=3, 8).unwrap());
    }

    #[test]
    fn level_one_toda_small() {
        let grid: Vec<NVector> = (0..5).map(|n| NVector::level_one(&[n])).collect();
        assert!(check_level1_toda(1, &grid).unwrap());
        let grid: Vec<NVector> = [[0u32, 0], [1, 0], [1, 1], [2, 1]].iter().map(|n| NVector::level_one(n)).collect();
        assert!(check_level1_toda(2, &grid).unwrap());
    }
}
