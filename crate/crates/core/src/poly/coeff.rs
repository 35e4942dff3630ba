//! The coefficient ring abstraction shared by every polynomial type.

use core::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

/// A commutative ring with exact (partial) division.
///
/// Every implementor keeps a canonical representation, so `==` is value
/// equality.
pub trait Coeff: Clone + PartialEq + Debug + Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign_ref(&mut self, rhs: &Self);
    fn sub_assign_ref(&mut self, rhs: &Self);
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_int(n: i64) -> Self;
    /// `Some(h)` with `self = rhs * h`, or `None` when no such `h` exists.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.sub_assign_ref(rhs);
        out
    }

    fn from_bigint(n: &BigInt) -> Self {
        // Generic fallback through repeated doubling; overridden where cheap.
        let mut acc = Self::zero();
        let mut base = Self::one();
        let mut m = n.abs();
        let two = BigInt::from(2u8);
        while !num_traits::Zero::is_zero(&m) {
            if m.is_odd() {
                acc.add_assign_ref(&base);
            }
            let b2 = base.clone();
            base.add_assign_ref(&b2);
            m /= &two;
        }
        if n.is_negative() {
            acc.neg_ref()
        } else {
            acc
        }
    }

    fn mul_int(&self, k: i64) -> Self {
        self.mul_ref(&Self::from_int(k))
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

/// Rings with a gcd, used to keep fractions reduced.
pub trait GcdDomain: Coeff {
    /// A greatest common divisor in normal form.
    fn gcd(&self, other: &Self) -> Self;
    /// Whether `self` is the preferred associate (positive leading sign).
    fn is_normal(&self) -> bool;
}

impl Coeff for BigInt {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn sub_assign_ref(&mut self, rhs: &Self) {
        *self -= rhs;
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_int(n: i64) -> Self {
        BigInt::from(n)
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if num_traits::Zero::is_zero(rhs) {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        num_traits::Zero::is_zero(&r).then_some(q)
    }
    fn is_one(&self) -> bool {
        num_traits::One::is_one(self)
    }
    fn from_bigint(n: &BigInt) -> Self {
        n.clone()
    }
    fn mul_int(&self, k: i64) -> Self {
        self * k
    }
}

impl GcdDomain for BigInt {
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn is_normal(&self) -> bool {
        !self.is_negative()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bigint_exact_division() {
        let a = BigInt::from(12);
        assert_eq!(a.div_exact(&BigInt::from(4)), Some(BigInt::from(3)));
        assert_eq!(a.div_exact(&BigInt::from(5)), None);
        assert_eq!(a.div_exact(&BigInt::from(0)), None);
    }

    #[test]
    fn integer_helpers() {
        let n = BigInt::from(-37);
        let mut acc = <BigInt as Coeff>::zero();
        for _ in 0..37 {
            acc.sub_assign_ref(&<BigInt as Coeff>::one());
        }
        assert_eq!(acc, <BigInt as Coeff>::from_bigint(&n));
        assert_eq!(BigInt::from(3).pow(5), BigInt::from(243));
    }
}
