//! Reduced fractions over a gcd domain: the `(q, t)` rational functions used
//! by the Macdonald oracle and the rational functions of `p` used by the
//! Whittaker series.

use core::fmt;

use num_bigint::BigInt;

use super::coeff::{Coeff, GcdDomain};
use super::laurent1::{PSym, QPoly, QSym, TSym};
use super::upoly::UPoly;

/// `num / den` with `gcd(num, den) = 1` and `den` in normal form.
#[derive(Clone, PartialEq, Eq)]
pub struct Frac<P> {
    num: P,
    den: P,
}

/// Integer polynomials in `q`.
pub type ZqPoly = UPoly<QSym, BigInt>;
/// Integer polynomials in `q` and `t`, with `t` outermost.
pub type ZqtPoly = UPoly<TSym, ZqPoly>;
/// Rational functions of `q` and `t`.
pub type QtRational = Frac<ZqtPoly>;
/// Rational functions of `q` alone.
pub type QRational = Frac<ZqPoly>;
/// Rational functions of `p`.
pub type PRational = Frac<UPoly<PSym, BigInt>>;

impl<P: GcdDomain> Frac<P> {
    /// Builds a reduced fraction; `None` when `den` is zero.
    pub fn new(num: P, den: P) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::reduced(num, den))
    }

    pub fn from_poly(p: P) -> Self {
        Frac { num: p, den: P::one() }
    }

    fn reduced(num: P, den: P) -> Self {
        if num.is_zero() {
            return Frac { num, den: P::one() };
        }
        let (mut num, mut den) = if den.is_one() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
            }
        };
        if !den.is_normal() {
            num = num.neg_ref();
            den = den.neg_ref();
        }
        Frac { num, den }
    }

    pub fn numer(&self) -> &P {
        &self.num
    }

    pub fn denom(&self) -> &P {
        &self.den
    }

    pub fn inverse(&self) -> Option<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }
}

impl<P: GcdDomain> Coeff for Frac<P> {
    fn zero() -> Self {
        Frac { num: P::zero(), den: P::one() }
    }
    fn one() -> Self {
        Frac { num: P::one(), den: P::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        if rhs.is_zero() {
            return;
        }
        if self.den == rhs.den {
            let mut num = core::mem::replace(&mut self.num, P::zero());
            num.add_assign_ref(&rhs.num);
            let den = core::mem::replace(&mut self.den, P::one());
            *self = Self::reduced(num, den);
            return;
        }
        let num = self.num.mul_ref(&rhs.den).add_ref(&rhs.num.mul_ref(&self.den));
        let den = self.den.mul_ref(&rhs.den);
        *self = Self::reduced(num, den);
    }
    fn sub_assign_ref(&mut self, rhs: &Self) {
        self.add_assign_ref(&rhs.neg_ref());
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Frac { num: self.num.mul_ref(&rhs.num), den: P::one() };
        }
        Self::reduced(self.num.mul_ref(&rhs.num), self.den.mul_ref(&rhs.den))
    }
    fn neg_ref(&self) -> Self {
        Frac { num: self.num.neg_ref(), den: self.den.clone() }
    }
    fn from_int(n: i64) -> Self {
        Self::from_poly(P::from_int(n))
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        Some(Self::reduced(self.num.mul_ref(&rhs.den), self.den.mul_ref(&rhs.num)))
    }
}

impl<P: GcdDomain> fmt::Display for Frac<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl<P: GcdDomain> fmt::Debug for Frac<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Integer Laurent polynomial in `q` as a `q`-only polynomial quotient.
fn qpoly_as_fraction(p: &QPoly) -> (ZqPoly, ZqPoly) {
    let low = p.valuation().unwrap_or(0);
    let shifted = p.shift(-low.min(0));
    let num = ZqPoly::from_coeffs(shifted.dense_nonnegative().expect("shifted to nonnegative"));
    let den = ZqPoly::monomial(BigInt::from(1), (-low.min(0)) as usize);
    (num, den)
}

impl QtRational {
    pub fn q() -> Self {
        Self::from_poly(ZqtPoly::constant(ZqPoly::var()))
    }

    pub fn t() -> Self {
        Self::from_poly(ZqtPoly::var())
    }

    /// Embeds a Laurent polynomial in `q`.
    pub fn from_qpoly(p: &QPoly) -> Self {
        let (num, den) = qpoly_as_fraction(p);
        Self::reduced(ZqtPoly::constant(num), ZqtPoly::constant(den))
    }

    /// `q^e` for any integer `e`.
    pub fn q_power(e: i64) -> Self {
        Self::from_qpoly(&QPoly::power(e))
    }

    /// The value at `t = 0`; `None` when the denominator vanishes there.
    pub fn at_t_zero(&self) -> Option<QRational> {
        let den = self.den.coeff(0);
        if den.is_zero() {
            return None;
        }
        QRational::new(self.num.coeff(0), den)
    }

    /// `lim_{t -> inf} t^(-d) * self`; `None` when the limit diverges.
    pub fn scaled_limit_t_infinity(&self, d: usize) -> Option<QRational> {
        if self.is_zero() {
            return Some(QRational::zero());
        }
        let dn = self.num.degree().unwrap();
        let dd = self.den.degree().unwrap();
        match (dn).cmp(&(dd + d)) {
            core::cmp::Ordering::Less => Some(QRational::zero()),
            core::cmp::Ordering::Equal => {
                QRational::new(self.num.leading().unwrap().clone(), self.den.leading().unwrap().clone())
            }
            core::cmp::Ordering::Greater => None,
        }
    }
}

impl QRational {
    /// Converts back to a Laurent polynomial when the denominator is a
    /// monomial `+-q^k`.
    pub fn to_qpoly(&self) -> Option<QPoly> {
        let shift = self.den.low_order();
        let den_unit = ZqPoly::monomial(BigInt::from(1), shift);
        let sign = if self.den == den_unit {
            1
        } else if self.den == den_unit.neg_ref() {
            -1
        } else {
            return None;
        };
        let terms = self.num.coeffs().iter().enumerate().map(|(i, c)| (i as i64 - shift as i64, c * sign));
        Some(QPoly::from_terms(terms))
    }
}

impl PRational {
    pub fn p() -> Self {
        Self::from_poly(UPoly::var())
    }

    /// `p^e` for any integer `e`.
    pub fn p_power(e: i64) -> Self {
        let m = UPoly::monomial(BigInt::from(1), e.unsigned_abs() as usize);
        if e >= 0 {
            Self::from_poly(m)
        } else {
            Self::reduced(UPoly::one(), m)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_sign() {
        let q = QtRational::q();
        let t = QtRational::t();
        let one = QtRational::one();
        // (t - q) / (q - t) = -1
        let a = t.sub_ref(&q).div_exact(&q.sub_ref(&t)).unwrap();
        assert_eq!(a, one.neg_ref());
        // 1/(1-t) + t/(1-t) = ... (1 + t)/(1 - t)
        let d = one.sub_ref(&t);
        let s = one.div_exact(&d).unwrap().add_ref(&t.div_exact(&d).unwrap());
        assert_eq!(s.mul_ref(&d), one.add_ref(&t));
        assert!(s.denom().is_normal());
    }

    #[test]
    fn endpoints() {
        let q = QtRational::q();
        let t = QtRational::t();
        let one = QtRational::one();
        // (1 - q t) / (1 - t) at t = 0 is 1; scaled limit with d = 0 is q
        let f = one.sub_ref(&q.mul_ref(&t)).div_exact(&one.sub_ref(&t)).unwrap();
        assert_eq!(f.at_t_zero().unwrap(), QRational::one());
        assert_eq!(f.scaled_limit_t_infinity(0).unwrap().to_qpoly().unwrap(), QPoly::power(1));
        assert!(t.scaled_limit_t_infinity(0).is_none());
        assert!(t.div_exact(&t.sub_ref(&q)).is_some());
        assert!(one.div_exact(&t).unwrap().at_t_zero().is_none());
    }

    #[test]
    fn q_laurent_round_trip() {
        let p = QPoly::from_terms([(-2, BigInt::from(3)), (1, BigInt::from(-1))]);
        let r = QtRational::from_qpoly(&p);
        assert_eq!(r.at_t_zero().unwrap().to_qpoly().unwrap(), p);
        let half = QRational::new(ZqPoly::one(), ZqPoly::from_int(2)).unwrap();
        assert!(half.to_qpoly().is_none());
    }

    #[test]
    fn p_powers() {
        let p = PRational::p();
        assert_eq!(PRational::p_power(-2).mul_ref(&p.mul_ref(&p)), PRational::one());
        assert_eq!(PRational::p_power(3), p.pow(3));
    }
}
