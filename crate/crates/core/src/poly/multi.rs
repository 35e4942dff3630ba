//! Sparse multivariate Laurent polynomials in `z_1 .. z_N`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::combinat::{factorial, permutations_with_sign};
use crate::error::{Error, Result};

use super::coeff::Coeff;
use super::laurent1::{QPoly, WPoly};

/// Exponent vector of a monomial.
pub type Exponent = Vec<i32>;

/// `sum_e c_e z^e`, keyed by exponent vector in lexicographic order.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly<C> {
    nvars: usize,
    terms: BTreeMap<Exponent, C>,
}

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(alloc::vec![0; nvars], c)
    }

    /// `z_i` (zero based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = alloc::vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, C::one())
    }

    pub fn monomial(exp: Exponent, c: C) -> Self {
        let nvars = exp.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { nvars, terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponent, C)>>(nvars: usize, terms: I) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing lexicographic order of exponent.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &C)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[i32]) -> C {
        self.terms.get(exp).cloned().unwrap_or_else(C::zero)
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&Exponent, &C)> {
        self.terms.iter().next_back()
    }

    /// Adds `c z^e` in place.
    pub fn add_term(&mut self, exp: Exponent, c: &C) {
        debug_assert_eq!(exp.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                o.get_mut().add_assign_ref(c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, rhs: &Self) {
        self.check_arity(rhs);
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c);
        }
    }

    pub fn sub_assign(&mut self, rhs: &Self) {
        self.check_arity(rhs);
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), &c.neg_ref());
        }
    }

    fn check_arity(&self, rhs: &Self) {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .filter_map(|(e, a)| {
                let p = a.mul_ref(c);
                (!p.is_zero()).then(|| (e.clone(), p))
            })
            .collect();
        LaurentPoly { nvars: self.nvars, terms }
    }

    /// Multiply by `c z^exp`.
    pub fn mul_monomial(&self, exp: &[i32], c: &C) -> Self {
        let terms = self
            .terms
            .iter()
            .filter_map(|(e, a)| {
                let p = a.mul_ref(c);
                (!p.is_zero()).then(|| (e.iter().zip(exp).map(|(x, y)| x + y).collect(), p))
            })
            .collect();
        LaurentPoly { nvars: self.nvars, terms }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.check_arity(rhs);
        let (small, big) = if self.len() <= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = Self::zero(self.nvars);
        let mut key = alloc::vec![0; self.nvars];
        for (e1, c1) in &small.terms {
            for (e2, c2) in &big.terms {
                for i in 0..key.len() {
                    key[i] = e1[i] + e2[i];
                }
                out.add_term(key.clone(), &c1.mul_ref(c2));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg_ref())).collect() }
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> LaurentPoly<D> {
        LaurentPoly::from_terms(self.nvars, self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    /// Rebuilds from transformed terms, merging collisions.
    pub fn map_terms<D: Coeff>(&self, nvars: usize, f: impl Fn(&Exponent, &C) -> (Exponent, D)) -> LaurentPoly<D> {
        LaurentPoly::from_terms(nvars, self.terms.iter().map(|(e, c)| f(e, c)))
    }

    /// Multiplies each term by a factor depending on its exponent; this is
    /// how variable rescalings `z_i -> s_i z_i` act.
    pub fn rescale(&self, factor: impl Fn(&Exponent) -> C) -> Self {
        let terms = self
            .terms
            .iter()
            .filter_map(|(e, c)| {
                let p = c.mul_ref(&factor(e));
                (!p.is_zero()).then(|| (e.clone(), p))
            })
            .collect();
        LaurentPoly { nvars: self.nvars, terms }
    }

    /// Substitutes `z_i -> z_{perm[i]}`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne = alloc::vec![0; self.nvars];
                for (i, &x) in e.iter().enumerate() {
                    ne[perm[i]] = x;
                }
                (ne, c.clone())
            })
            .collect();
        LaurentPoly { nvars: self.nvars, terms }
    }

    /// Whether every permutation of the variables fixes `self`.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(e, c)| {
            (0..self.nvars.saturating_sub(1)).all(|i| {
                let mut s = e.clone();
                s.swap(i, i + 1);
                self.terms.get(&s) == Some(c)
            })
        })
    }

    /// Total degree if all terms share one; `Some(0)` for zero.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut degs = self.terms.keys().map(|e| e.iter().map(|&x| x as i64).sum::<i64>());
        let Some(d) = degs.next() else { return Some(0) };
        degs.all(|x| x == d).then_some(d)
    }

    /// Whether no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }

    /// Exact quotient `self / g`.
    ///
    /// Greedy leading-term division in lexicographic order. Any exact quotient
    /// lies in the box bounded coordinatewise by the supports of the operands,
    /// so a candidate quotient term outside it proves non-divisibility and
    /// guarantees termination.
    pub fn exact_div(&self, g: &Self) -> Result<Self> {
        self.check_arity(g);
        let (ge, gc) = g.leading_term().ok_or(Error::NotDivisible)?;
        let (ge, gc) = (ge.clone(), gc.clone());
        if self.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        let n = self.nvars;
        let (fmin, fmax) = self.support_box();
        let (gmin, gmax) = g.support_box();
        let lo: Vec<i32> = (0..n).map(|i| fmin[i] - gmin[i]).collect();
        let hi: Vec<i32> = (0..n).map(|i| fmax[i] - gmax[i]).collect();
        let mut rem = self.terms.clone();
        let mut quot = BTreeMap::new();
        while let Some((re, rc)) = rem.pop_last() {
            let qe: Exponent = re.iter().zip(&ge).map(|(a, b)| a - b).collect();
            if qe.iter().zip(lo.iter().zip(&hi)).any(|(x, (l, h))| x < l || x > h) {
                return Err(Error::NotDivisible);
            }
            let qc = rc.div_exact(&gc).ok_or(Error::NotDivisible)?;
            for (e, c) in g.terms.iter().rev().skip(1) {
                let key: Exponent = e.iter().zip(&qe).map(|(a, b)| a + b).collect();
                let delta = c.mul_ref(&qc);
                match rem.entry(key) {
                    alloc::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(delta.neg_ref());
                    }
                    alloc::collections::btree_map::Entry::Occupied(mut o) => {
                        o.get_mut().sub_assign_ref(&delta);
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                }
            }
            quot.insert(qe, qc);
        }
        Ok(LaurentPoly { nvars: n, terms: quot })
    }

    /// Coordinatewise minimum and maximum exponents over the support.
    pub fn support_box(&self) -> (Vec<i32>, Vec<i32>) {
        let mut lo = alloc::vec![i32::MAX; self.nvars];
        let mut hi = alloc::vec![i32::MIN; self.nvars];
        for e in self.terms.keys() {
            for i in 0..self.nvars {
                lo[i] = lo[i].min(e[i]);
                hi[i] = hi[i].max(e[i]);
            }
        }
        (lo, hi)
    }

    pub fn to_text(&self) -> String
    where
        C: fmt::Display,
    {
        alloc::format!("{}", self)
    }
}

/// `f / g` exactly, or `NotDivisible`.
pub fn exact_div<C: Coeff>(f: &LaurentPoly<C>, g: &LaurentPoly<C>) -> Result<LaurentPoly<C>> {
    f.exact_div(g)
}

/// `sum_sigma sgn(sigma) sigma(f)`, without the `1/N!` normalization.
pub fn alternant_sum<C: Coeff>(f: &LaurentPoly<C>) -> LaurentPoly<C> {
    let mut acc = LaurentPoly::zero(f.nvars);
    for (p, s) in permutations_with_sign(f.nvars) {
        let g = f.permute(&p);
        if s > 0 {
            acc.add_assign(&g);
        } else {
            acc.sub_assign(&g);
        }
    }
    acc
}

/// `sum_sigma sigma(f)`, without the `1/N!` normalization.
pub fn symmetric_sum<C: Coeff>(f: &LaurentPoly<C>) -> LaurentPoly<C> {
    let mut acc = LaurentPoly::zero(f.nvars);
    for (p, _) in permutations_with_sign(f.nvars) {
        acc.add_assign(&f.permute(&p));
    }
    acc
}

fn divide_by_int<C: Coeff>(f: &LaurentPoly<C>, d: i64) -> Result<LaurentPoly<C>> {
    let dc = C::from_int(d);
    let terms = f
        .terms()
        .map(|(e, c)| c.div_exact(&dc).map(|q| (e.clone(), q)).ok_or(Error::NotDivisible))
        .collect::<Result<Vec<_>>>()?;
    Ok(LaurentPoly::from_terms(f.nvars(), terms))
}

/// `(1/N!) sum_sigma sgn(sigma) sigma(f)`; `NotDivisible` when the integer
/// sum is not divisible by `N!` in the coefficient ring.
pub fn antisymmetrize<C: Coeff>(f: &LaurentPoly<C>) -> Result<LaurentPoly<C>> {
    divide_by_int(&alternant_sum(f), factorial(f.nvars()))
}

/// `(1/N!) sum_sigma sigma(f)`.
pub fn symmetrize<C: Coeff>(f: &LaurentPoly<C>) -> Result<LaurentPoly<C>> {
    divide_by_int(&symmetric_sum(f), factorial(f.nvars()))
}

/// `prod_{i<j} (z_i - z_j)`.
pub fn vandermonde<C: Coeff>(n: usize) -> LaurentPoly<C> {
    vandermonde_on(n, &(0..n).collect::<Vec<_>>())
}

/// Vandermonde product over the listed variables only, in `n` variables.
pub fn vandermonde_on<C: Coeff>(n: usize, vars: &[usize]) -> LaurentPoly<C> {
    let mut acc = LaurentPoly::one(n);
    for (a, &i) in vars.iter().enumerate() {
        for &j in &vars[a + 1..] {
            let mut f = LaurentPoly::var(n, i);
            f.sub_assign(&LaurentPoly::var(n, j));
            acc = acc.mul(&f);
        }
    }
    acc
}

/// Imposes `z_1 ... z_{r+1} = 1` by substituting `z_{r+1} = (z_1 ... z_r)^(-1)`.
pub fn constrain<C: Coeff>(f: &LaurentPoly<C>, rank: usize) -> Result<LaurentPoly<C>> {
    if f.nvars() != rank + 1 {
        return Err(Error::ArityMismatch { expected: rank + 1, found: f.nvars() });
    }
    Ok(f.map_terms(rank, |e, c| {
        let last = e[rank];
        (e[..rank].iter().map(|x| x - last).collect(), c.clone())
    }))
}

/// Maps `w^(-2(r+1)m)` to `q^m`.
pub fn w_to_q(c: &WPoly, rank: usize) -> Result<QPoly> {
    let d = -2 * (rank as i64 + 1);
    match c.terms().find(|(e, _)| e % d != 0) {
        Some((e, _)) => Err(Error::ExponentNotDivisible { exponent: e, divisor: d }),
        None => Ok(c.compress_exponents(d).expect("checked divisibility").rename()),
    }
}

/// Maps `q^m` to `w^(-2(r+1)m)`.
pub fn q_to_w(c: &QPoly, rank: usize) -> WPoly {
    c.scale_exponents(-2 * (rank as i64 + 1)).rename()
}

impl<C: Coeff> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let text = alloc::format!("{}", c);
            let is_const = e.iter().all(|&x| x == 0);
            let compound = text.contains(' ');
            match (is_const, text.as_str()) {
                (true, _) => f.write_str(&text)?,
                (false, "1") => {}
                (false, "-1") => f.write_str("-")?,
                _ if compound => write!(f, "({})*", text)?,
                _ => write!(f, "{}*", text)?,
            }
            let mut first = true;
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                write!(f, "z{}", i + 1)?;
                if x != 1 {
                    write!(f, "^{}", x)?;
                }
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<C: Coeff> Add for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: Self) -> LaurentPoly<C> {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl<C: Coeff> Sub for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: Self) -> LaurentPoly<C> {
        let mut out = self.clone();
        out.sub_assign(rhs);
        out
    }
}

impl<C: Coeff> Mul for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: Self) -> LaurentPoly<C> {
        LaurentPoly::mul(self, rhs)
    }
}

impl<C: Coeff> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use num_bigint::BigInt;

    type Zp = LaurentPoly<BigInt>;

    fn z(n: usize, i: usize) -> Zp {
        Zp::var(n, i)
    }

    #[test]
    fn difference_of_squares() {
        let f = &z(2, 0).pow(2) - &z(2, 1).pow(2);
        let g = &z(2, 0) - &z(2, 1);
        assert_eq!(f.exact_div(&g).unwrap(), &z(2, 0) + &z(2, 1));
    }

    #[test]
    fn inexact_division_detected() {
        let f = &z(2, 0).pow(2) + &z(2, 1);
        let g = &z(2, 0) - &z(2, 1);
        assert_eq!(f.exact_div(&g), Err(Error::NotDivisible));
        let h = Zp::constant(2, BigInt::from(3));
        assert_eq!(h.exact_div(&Zp::constant(2, BigInt::from(2))), Err(Error::NotDivisible));
    }

    #[test]
    fn laurent_division_with_negative_powers() {
        let a = Zp::monomial(alloc::vec![-2, 1], BigInt::from(1));
        let g = &(&z(2, 0) - &z(2, 1)) * &Zp::monomial(alloc::vec![0, -3], BigInt::from(1));
        let f = &a * &g;
        assert_eq!(f.exact_div(&g).unwrap(), a);
    }

    #[test]
    fn vandermonde_shapes() {
        assert_eq!(vandermonde::<BigInt>(1), Zp::one(1));
        assert_eq!(vandermonde::<BigInt>(2), &z(2, 0) - &z(2, 1));
        let v3 = vandermonde::<BigInt>(3);
        assert_eq!(v3.len(), 6);
        assert!(v3.terms().all(|(_, c)| c == &BigInt::from(1) || c == &BigInt::from(-1)));
    }

    #[test]
    fn antisymmetrization() {
        let v3 = vandermonde::<BigInt>(3);
        assert_eq!(antisymmetrize(&v3).unwrap(), v3);
        let sym = &z(2, 0) * &z(2, 1);
        assert!(antisymmetrize(&sym).unwrap().is_zero());
        // (z1 - z2)/2 has no integer representative
        assert_eq!(antisymmetrize(&z(2, 0)), Err(Error::NotDivisible));
        assert_eq!(alternant_sum(&z(2, 0)), &z(2, 0) - &z(2, 1));
        assert_eq!(symmetrize(&(&z(2, 0) * &z(2, 0))).map(|_| ()), Err(Error::NotDivisible));
        let s = symmetric_sum(&z(3, 0));
        assert_eq!(s, (&(&z(3, 0) + &z(3, 1)) + &z(3, 2)).scale(&BigInt::from(2)));
    }

    #[test]
    fn constrain_examples() {
        let e3 = &(&z(3, 0) * &z(3, 1)) * &z(3, 2);
        assert_eq!(constrain(&e3, 2).unwrap(), Zp::one(2));
        assert_eq!(constrain(&z(3, 2), 2).unwrap(), Zp::monomial(alloc::vec![-1, -1], BigInt::from(1)));
        assert!(constrain(&z(3, 2), 3).is_err());
    }

    #[test]
    fn w_to_q_examples() {
        assert_eq!(w_to_q(&WPoly::power(-6), 2).unwrap(), QPoly::power(1));
        assert_eq!(w_to_q(&WPoly::from_int(3), 2).unwrap(), QPoly::from_int(3));
        assert!(matches!(w_to_q(&WPoly::power(-3), 2), Err(Error::ExponentNotDivisible { .. })));
        assert_eq!(q_to_w(&QPoly::power(2), 1), WPoly::power(-8));
    }

    #[test]
    fn canonical_text() {
        let c = QPoly::one().sub_ref(&QPoly::power(-1));
        let f = LaurentPoly::monomial(alloc::vec![2, -1], c);
        assert_eq!(f.to_string(), "(1 - q^-1)*z1^2*z2^-1");
        let g = &LaurentPoly::<QPoly>::var(2, 0) + &LaurentPoly::constant(2, QPoly::power(-1));
        assert_eq!(g.to_string(), "z1 + q^-1");
    }

    #[test]
    fn symmetry_detection() {
        let e1 = &z(2, 0) + &z(2, 1);
        assert!(e1.is_symmetric());
        let bad = &z(2, 0) + &(&z(2, 1) + &z(2, 1));
        assert!(!bad.is_symmetric());
        assert_eq!(e1.homogeneous_degree(), Some(1));
    }
}
