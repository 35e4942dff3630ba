//! Dense univariate polynomials over a gcd domain, with primitive-remainder
//! gcd. Nesting gives multivariate polynomial rings such as `Z[q][t]`.

use alloc::vec::Vec;
use core::fmt;
use core::marker::PhantomData;

use super::coeff::{Coeff, GcdDomain};
use super::laurent1::Symbol;

/// `sum c_i x^i`, trimmed so the last coefficient is nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct UPoly<S: Symbol, R> {
    coeffs: Vec<R>,
    _sym: PhantomData<S>,
}

impl<S: Symbol, R: Coeff> UPoly<S, R> {
    pub fn from_coeffs(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs, _sym: PhantomData }
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn monomial(c: R, e: usize) -> Self {
        let mut v: Vec<R> = (0..e).map(|_| R::zero()).collect();
        v.push(c);
        Self::from_coeffs(v)
    }

    pub fn constant(c: R) -> Self {
        Self::from_coeffs(alloc::vec![c])
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    /// Number of leading zero coefficients, i.e. the power of `x` dividing it.
    pub fn low_order(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    fn div_coeffs(&self, c: &R) -> Option<Self> {
        let v = self.coeffs.iter().map(|a| a.div_exact(c)).collect::<Option<Vec<_>>>()?;
        Some(Self::from_coeffs(v))
    }

    fn shifted(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut v: Vec<R> = (0..k).map(|_| R::zero()).collect();
        v.extend(self.coeffs.iter().cloned());
        Self::from_coeffs(v)
    }

    /// Evaluate by Horner's rule in a ring that contains `R`.
    pub fn eval_with<T: Coeff>(&self, x: &T, lift: impl Fn(&R) -> T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x);
            acc.add_assign_ref(&lift(c));
        }
        acc
    }
}

impl<S: Symbol, R: GcdDomain> UPoly<S, R> {
    /// Gcd of the coefficients, in normal form.
    pub fn content(&self) -> R {
        let mut g = R::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn primitive_part(&self) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let c = self.content();
        self.div_coeffs(&c).expect("content divides every coefficient")
    }

    /// `lc(b)^(deg a - deg b + 1) * a mod b`.
    fn pseudo_rem(a: &Self, b: &Self) -> Self {
        let db = b.degree().expect("nonzero divisor");
        let lb = b.leading().unwrap().clone();
        let mut r = a.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading().unwrap().clone();
            r = r.scale(&lb);
            r.sub_assign_ref(&b.scale(&lr).shifted(dr - db));
        }
        r
    }

    fn normalized(self) -> Self {
        if self.is_normal() {
            self
        } else {
            self.neg_ref()
        }
    }
}

impl<S: Symbol, R: Coeff> Coeff for UPoly<S, R> {
    fn zero() -> Self {
        Self::from_coeffs(Vec::new())
    }
    fn one() -> Self {
        Self::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), R::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            a.add_assign_ref(b);
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
    fn sub_assign_ref(&mut self, rhs: &Self) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), R::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            a.sub_assign_ref(b);
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out: Vec<R> = (0..self.coeffs.len() + rhs.coeffs.len() - 1).map(|_| R::zero()).collect();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j].add_assign_ref(&a.mul_ref(b));
            }
        }
        Self::from_coeffs(out)
    }
    fn neg_ref(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(Coeff::neg_ref).collect())
    }
    fn from_int(n: i64) -> Self {
        Self::constant(R::from_int(n))
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        let db = rhs.degree()?;
        let lb = rhs.leading().unwrap();
        let mut r = self.clone();
        let mut quot: Vec<R> = Vec::new();
        while let Some(dr) = r.degree() {
            if dr < db {
                return None;
            }
            let c = r.leading().unwrap().div_exact(lb)?;
            let k = dr - db;
            if quot.len() <= k {
                quot.resize(k + 1, R::zero());
            }
            r.sub_assign_ref(&rhs.scale(&c).shifted(k));
            quot[k] = c;
        }
        Some(Self::from_coeffs(quot))
    }
}

impl<S: Symbol, R: GcdDomain> GcdDomain for UPoly<S, R> {
    fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone().normalized();
        }
        if other.is_zero() {
            return self.clone().normalized();
        }
        if self.degree() == Some(0) || other.degree() == Some(0) {
            let c = self.content().gcd(&other.content());
            return Self::constant(c);
        }
        let c = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = Self::pseudo_rem(&a, &b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().normalized().scale(&c)
    }
    fn is_normal(&self) -> bool {
        self.leading().is_none_or(|c| c.is_normal())
    }
}

impl<S: Symbol, R: Coeff> fmt::Display for UPoly<S, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, c.is_one()) {
                (0, _) => write!(f, "({})", c)?,
                (_, true) => {}
                _ => write!(f, "({})*", c)?,
            }
            if i > 0 {
                f.write_str(S::NAME)?;
                if i > 1 {
                    write!(f, "^{}", i)?;
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl<S: Symbol, R: Coeff> fmt::Debug for UPoly<S, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::laurent1::{QSym, TSym};
    use num_bigint::BigInt;

    type Zq = UPoly<QSym, BigInt>;
    type Zqt = UPoly<TSym, Zq>;

    fn zq(c: &[i64]) -> Zq {
        Zq::from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn gcd_univariate() {
        // (q - 1)(q + 2) and (q - 1)(q - 3)
        let a = zq(&[-1, 1]).mul_ref(&zq(&[2, 1]));
        let b = zq(&[-1, 1]).mul_ref(&zq(&[-3, 1]));
        assert_eq!(a.gcd(&b), zq(&[-1, 1]));
        assert_eq!(zq(&[6, 4]).gcd(&zq(&[9, 6])), zq(&[3, 2]));
        assert_eq!(zq(&[-2]).gcd(&zq(&[4])), zq(&[2]));
    }

    #[test]
    fn gcd_bivariate() {
        // (t - q)(t + 1) and (t - q)(q t + 1)
        let t_minus_q = Zqt::from_coeffs(alloc::vec![zq(&[0, -1]), zq(&[1])]);
        let a = t_minus_q.mul_ref(&Zqt::from_coeffs(alloc::vec![zq(&[1]), zq(&[1])]));
        let b = t_minus_q.mul_ref(&Zqt::from_coeffs(alloc::vec![zq(&[1]), zq(&[0, 1])]));
        assert_eq!(a.gcd(&b), t_minus_q);
        assert_eq!(a.div_exact(&t_minus_q).unwrap().mul_ref(&t_minus_q), a);
        assert!(a.div_exact(&b).is_none());
    }
}
