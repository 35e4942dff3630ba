//! Symmetric Laurent polynomials stored in the monomial symmetric basis.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::combinat::distinct_permutations;
use crate::error::{Error, Result};

use super::coeff::Coeff;
use super::multi::{constrain, Exponent, LaurentPoly};

/// `sum_mu c_mu m_mu(z_1 .. z_N)`.
///
/// Keys are weakly decreasing integer vectors of length `N`; negative parts
/// are allowed, so Laurent symmetric polynomials are covered too.
#[derive(Clone, PartialEq, Eq)]
pub struct SymPoly<C> {
    nvars: usize,
    terms: BTreeMap<Exponent, C>,
}

fn is_dominant(e: &[i32]) -> bool {
    e.windows(2).all(|w| w[0] >= w[1])
}

impl<C: Coeff> SymPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        SymPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(alloc::vec![0; nvars], C::one())
    }

    /// `c * m_key`; the key is sorted into decreasing order.
    pub fn monomial(mut key: Exponent, c: C) -> Self {
        key.sort_unstable_by(|a, b| b.cmp(a));
        let mut p = Self::zero(key.len());
        p.add_term(key, &c);
        p
    }

    /// The elementary symmetric polynomial `e_m`.
    pub fn elementary(m: usize, nvars: usize) -> Self {
        if m > nvars {
            return Self::zero(nvars);
        }
        let key = (0..nvars).map(|i| i32::from(i < m)).collect();
        Self::monomial(key, C::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms `(mu, c_mu)` in increasing lexicographic order of `mu`.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &C)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &[i32]) -> C {
        self.terms.get(key).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, key: Exponent, c: &C) {
        debug_assert!(is_dominant(&key) && key.len() == self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
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
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), c);
        }
    }

    pub fn sub_assign(&mut self, rhs: &Self) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), &c.neg_ref());
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.sub_assign(rhs);
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.nvars);
        for (k, a) in &self.terms {
            out.add_term(k.clone(), &a.mul_ref(c));
        }
        out
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> SymPoly<D> {
        let mut out = SymPoly::zero(self.nvars);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), &f(c));
        }
        out
    }

    /// Product, computed orbit by orbit: the coefficient of `m_nu` is the
    /// coefficient of `z^nu`, so only dominant sums are kept.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        let rhs_orbits: Vec<(Vec<Exponent>, &C)> =
            rhs.terms.iter().map(|(k, c)| (distinct_permutations(k), c)).collect();
        let mut key = alloc::vec![0; self.nvars];
        for (k1, c1) in &self.terms {
            for a in distinct_permutations(k1) {
                for (orbit, c2) in &rhs_orbits {
                    let c = c1.mul_ref(c2);
                    for b in orbit {
                        for i in 0..self.nvars {
                            key[i] = a[i] + b[i];
                        }
                        if is_dominant(&key) {
                            out.add_term(key.clone(), &c);
                        }
                    }
                }
            }
        }
        out
    }

    /// Reads off the monomial symmetric expansion, after checking symmetry.
    pub fn from_laurent(f: &LaurentPoly<C>) -> Result<Self> {
        if !f.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let mut out = Self::zero(f.nvars());
        for (e, c) in f.terms() {
            if is_dominant(e) {
                out.add_term(e.clone(), c);
            }
        }
        Ok(out)
    }

    pub fn to_laurent(&self) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero(self.nvars);
        for (k, c) in &self.terms {
            for e in distinct_permutations(k) {
                out.add_term(e, c);
            }
        }
        out
    }

    /// Representative modulo `z_1 ... z_N = 1`: every key is shifted so that
    /// its last part is zero.
    pub fn modulo_det(&self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (k, c) in &self.terms {
            let last = *k.last().unwrap_or(&0);
            out.add_term(k.iter().map(|x| x - last).collect(), c);
        }
        out
    }

    /// Equality after imposing `z_1 ... z_N = 1`.
    pub fn eq_modulo_det(&self, rhs: &Self) -> bool {
        self.modulo_det() == rhs.modulo_det()
    }

    /// Restriction to `z_{r+1} = (z_1 ... z_r)^(-1)` as a Laurent polynomial
    /// in `r` variables.
    pub fn constrain(&self) -> LaurentPoly<C> {
        constrain(&self.to_laurent(), self.nvars - 1).expect("arity matches by construction")
    }

    /// Multiply by `(z_1 ... z_N)^k`.
    pub fn shift_det(&self, k: i32) -> Self {
        let mut out = Self::zero(self.nvars);
        for (key, c) in &self.terms {
            out.add_term(key.iter().map(|x| x + k).collect(), c);
        }
        out
    }

    /// Total degree if homogeneous.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut degs = self.terms.keys().map(|e| e.iter().map(|&x| x as i64).sum::<i64>());
        let Some(d) = degs.next() else { return Some(0) };
        degs.all(|x| x == d).then_some(d)
    }
}

impl<C: Coeff> fmt::Display for SymPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({})*m{}", c, crate::symfun::Partition::format_parts(k))?;
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for SymPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type S = SymPoly<BigInt>;

    #[test]
    fn round_trip_laurent() {
        let e2 = S::elementary(2, 3);
        let l = e2.to_laurent();
        assert_eq!(l.len(), 3);
        assert_eq!(S::from_laurent(&l).unwrap(), e2);
        let bad = LaurentPoly::<BigInt>::var(2, 0);
        assert_eq!(S::from_laurent(&bad), Err(Error::NotSymmetric));
    }

    #[test]
    fn product_matches_expanded_product() {
        let a = S::elementary(1, 3).add(&S::monomial(alloc::vec![2, 0, -1], BigInt::from(3)));
        let b = S::elementary(2, 3).add(&S::monomial(alloc::vec![1, 1, 0], BigInt::from(-2)));
        let direct = a.mul(&b);
        let expanded = S::from_laurent(&a.to_laurent().mul(&b.to_laurent())).unwrap();
        assert_eq!(direct, expanded);
    }

    #[test]
    fn determinant_shift() {
        let e3 = S::elementary(3, 3);
        assert!(e3.eq_modulo_det(&S::one(3)));
        assert_eq!(e3.constrain(), LaurentPoly::one(2));
        assert_eq!(S::one(3).shift_det(1), e3);
    }
}
