//! Univariate Laurent polynomials over the integers, the scalar rings in `w`
//! (the square root of `v`) and in `q`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::marker::PhantomData;

use num_bigint::BigInt;
use num_traits::Signed;

use super::coeff::Coeff;

/// Names the indeterminate of a univariate ring, for printing only.
pub trait Symbol: Clone + Copy + PartialEq + Eq + fmt::Debug + Default + Ord + core::hash::Hash {
    const NAME: &'static str;
}

macro_rules! symbol {
    ($ty:ident, $name:literal) => {
        #[derive(Clone, Copy, PartialEq, Eq, Debug, Default, PartialOrd, Ord, Hash)]
        pub struct $ty;
        impl Symbol for $ty {
            const NAME: &'static str = $name;
        }
    };
}

symbol!(QSym, "q");
symbol!(WSym, "w");
symbol!(TSym, "t");
symbol!(PSym, "p");

/// Dense Laurent polynomial `sum c_i x^(low + i)` with integer coefficients.
///
/// Canonical form: no leading or trailing zero coefficients, and the zero
/// polynomial has `low == 0` and no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniLaurent<S: Symbol> {
    low: i64,
    coeffs: Vec<BigInt>,
    _sym: PhantomData<S>,
}

/// Laurent polynomials in `q`.
pub type QPoly = UniLaurent<QSym>;
/// Laurent polynomials in `w`, where `w^2 = v`.
pub type WPoly = UniLaurent<WSym>;

impl<S: Symbol> UniLaurent<S> {
    fn from_parts(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = UniLaurent { low, coeffs, _sym: PhantomData };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    /// `c * x^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        Self::from_parts(e, alloc::vec![c.into()])
    }

    /// `x^e`.
    pub fn power(e: i64) -> Self {
        Self::monomial(1, e)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I) -> Self {
        let items: Vec<(i64, BigInt)> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let Some(low) = items.iter().map(|(e, _)| *e).min() else { return Self::zero() };
        let high = items.iter().map(|(e, _)| *e).max().expect("nonempty");
        let mut coeffs = alloc::vec![BigInt::zero(); (high - low + 1) as usize];
        for (e, c) in items {
            coeffs[(e - low) as usize] += c;
        }
        Self::from_parts(low, coeffs)
    }

    /// Lowest exponent with a nonzero coefficient; `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient; `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        let i = e - self.low;
        if i < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(i as usize).cloned().unwrap_or_default()
    }

    /// Nonzero terms `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        UniLaurent { low: self.low + k, coeffs: self.coeffs.clone(), _sym: PhantomData }
    }

    /// Substitute `x -> x^k` (`k` may be negative).
    pub fn scale_exponents(&self, k: i64) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c.clone())))
    }

    /// Substitute `x -> x^(-1)`.
    pub fn invert_variable(&self) -> Self {
        self.scale_exponents(-1)
    }

    /// Value at `x = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Divide every exponent by `d`, if all are divisible.
    pub fn compress_exponents(&self, d: i64) -> Option<Self> {
        if self.terms().any(|(e, _)| e % d != 0) {
            return None;
        }
        Some(Self::from_terms(self.terms().map(|(e, c)| (e / d, c.clone()))))
    }

    /// Reinterpret the coefficient list under another symbol.
    pub fn rename<T: Symbol>(&self) -> UniLaurent<T> {
        UniLaurent { low: self.low, coeffs: self.coeffs.clone(), _sym: PhantomData }
    }

    /// If this is a single term `c x^e`, return it.
    pub fn as_monomial(&self) -> Option<(i64, &BigInt)> {
        (self.num_terms() == 1).then(|| self.terms().next().unwrap())
    }

    /// Coefficients of `x^0 .. x^deg` when there are no negative powers.
    pub fn dense_nonnegative(&self) -> Option<Vec<BigInt>> {
        if self.coeffs.is_empty() {
            return Some(Vec::new());
        }
        if self.low < 0 {
            return None;
        }
        let mut v = alloc::vec![BigInt::zero(); self.low as usize];
        v.extend(self.coeffs.iter().cloned());
        Some(v)
    }

    fn accumulate(&mut self, rhs: &Self, negate: bool) {
        if rhs.coeffs.is_empty() {
            return;
        }
        if self.coeffs.is_empty() {
            *self = if negate { rhs.neg_ref() } else { rhs.clone() };
            return;
        }
        let low = self.low.min(rhs.low);
        let high = self.degree().unwrap().max(rhs.degree().unwrap());
        if low < self.low {
            let pad = (self.low - low) as usize;
            let mut v = alloc::vec![BigInt::zero(); pad];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.low = low;
        }
        let len = (high - low + 1) as usize;
        self.coeffs.resize(len, BigInt::zero());
        let off = (rhs.low - low) as usize;
        for (i, c) in rhs.coeffs.iter().enumerate() {
            if negate {
                self.coeffs[off + i] -= c;
            } else {
                self.coeffs[off + i] += c;
            }
        }
        self.normalize();
    }

    pub fn to_text(&self) -> String {
        alloc::format!("{}", self)
    }
}

impl<S: Symbol> Coeff for UniLaurent<S> {
    fn zero() -> Self {
        UniLaurent { low: 0, coeffs: Vec::new(), _sym: PhantomData }
    }
    fn one() -> Self {
        Self::monomial(1, 0)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        self.accumulate(rhs, false);
    }
    fn sub_assign_ref(&mut self, rhs: &Self) {
        self.accumulate(rhs, true);
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = alloc::vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_parts(self.low + rhs.low, out)
    }
    fn neg_ref(&self) -> Self {
        UniLaurent { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect(), _sym: PhantomData }
    }
    fn from_int(n: i64) -> Self {
        Self::monomial(n, 0)
    }
    fn from_bigint(n: &BigInt) -> Self {
        Self::monomial(n.clone(), 0)
    }
    fn mul_int(&self, k: i64) -> Self {
        Self::from_parts(self.low, self.coeffs.iter().map(|c| c * k).collect())
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.coeffs.is_empty() {
            return None;
        }
        if self.coeffs.is_empty() {
            return Some(Self::zero());
        }
        // Both are x^low times a polynomial with nonzero constant term, and
        // units of the Laurent ring are monomials, so polynomial long division
        // of the shifted parts decides divisibility.
        let den = &rhs.coeffs;
        let dl = den.len();
        if self.coeffs.len() < dl {
            return None;
        }
        let lead = den.last().unwrap();
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dl + 1;
        let mut quot = alloc::vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = &rem[k + dl - 1];
            if top.is_zero() {
                continue;
            }
            let c = top.div_exact(lead)?;
            for (j, d) in den.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_parts(self.low - rhs.low, quot))
    }
}

impl<S: Symbol> fmt::Display for UniLaurent<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_univariate(f, S::NAME, self.terms().rev())
    }
}

impl<S: Symbol> fmt::Debug for UniLaurent<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Writes `c1*x^e1 + c2*x^e2 ...` with the terms in the given order.
pub(crate) fn write_univariate<'a>(
    f: &mut fmt::Formatter<'_>,
    var: &str,
    terms: impl Iterator<Item = (i64, &'a BigInt)>,
) -> fmt::Result {
    let mut first = true;
    for (e, c) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        if e == 0 {
            write!(f, "{}", mag)?;
            continue;
        }
        if !mag.is_one() {
            write!(f, "{}*", mag)?;
        }
        f.write_str(var)?;
        if e != 1 {
            write!(f, "^{}", e)?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}
