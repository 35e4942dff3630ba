//! Partitions, Schur and elementary symmetric functions, Kostka numbers.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;

use crate::combinat::permutations_with_sign;
use crate::error::{Error, Result};
use crate::poly::{vandermonde, Coeff, Exponent, LaurentPoly, SymPoly};

/// A partition, stored without trailing zeros.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(Self::format_parts(&parts)));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Accepts any weakly decreasing integer vector whose parts are `>= 0`.
    pub fn from_exponent(e: &[i32]) -> Result<Self> {
        if e.iter().any(|&x| x < 0) {
            return Err(Error::InvalidPartition(Self::format_parts(e)));
        }
        Self::new(e.iter().map(|&x| x as u32).collect::<Vec<_>>())
    }

    /// `lambda_a = sum_{b >= a} l_b` for a dominant weight `sum_a l_a omega_a`.
    pub fn from_weight(weight: &[u32]) -> Self {
        let mut parts: Vec<u32> = weight
            .iter()
            .rev()
            .scan(0, |acc, &x| {
                *acc += x;
                Some(*acc)
            })
            .collect();
        parts.reverse();
        Partition::new(parts).expect("suffix sums decrease")
    }

    /// Weight `l_a = lambda_a - lambda_{a+1}` for `a` in `1..=rank`, after
    /// removing full columns of height `rank + 1`.
    pub fn to_weight(&self, rank: usize) -> Vec<u32> {
        let p = self.padded(rank + 1);
        (0..rank).map(|a| (p[a] - p[a + 1]) as u32).collect()
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Parts padded with zeros (or truncated) to length `n`.
    pub fn padded(&self, n: usize) -> Exponent {
        (0..n).map(|i| self.0.get(i).copied().unwrap_or(0) as i32).collect()
    }

    pub fn conjugate(&self) -> Partition {
        let m = self.0.first().copied().unwrap_or(0);
        Partition((1..=m).map(|j| self.0.iter().filter(|&&x| x >= j).count() as u32).collect())
    }

    /// Dominance order: `self >= other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let n = self.len().max(other.len());
        let (a, b) = (self.padded(n), other.padded(n));
        let (mut sa, mut sb) = (0, 0);
        (0..n).all(|i| {
            sa += a[i];
            sb += b[i];
            sa >= sb
        })
    }

    /// `(2,1,0)` style text for any integer vector.
    pub fn format_parts<T: fmt::Display>(parts: &[T]) -> String {
        let mut s = String::from("(");
        for (i, p) in parts.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&alloc::format!("{}", p));
        }
        s.push(')');
        s
    }

    /// `(2,1,0)` text padded to `n` parts.
    pub fn to_padded_text(&self, n: usize) -> String {
        Self::format_parts(&self.padded(n))
    }

    /// Weight text such as `ω1+2ω3`, or `0` for the trivial weight.
    pub fn to_weight_text(&self, rank: usize) -> String {
        let mut s = String::new();
        for (a, &l) in self.to_weight(rank).iter().enumerate() {
            if l == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('+');
            }
            if l > 1 {
                s.push_str(&alloc::format!("{}", l));
            }
            s.push_str(&alloc::format!("ω{}", a + 1));
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }

    /// Parses `(2,1,0)`, `2,1,0`, or a weight such as `ω1+2ω2` (also `w1`).
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let t = text.trim();
        let bad = || Error::InvalidPartition(String::from(t));
        if t.contains('ω') || t.contains('w') || t == "0" {
            let mut weight = alloc::vec![0u32; rank];
            if t != "0" {
                for term in t.split('+') {
                    let term = term.trim();
                    let (mult, idx) = term.split_once('ω').or_else(|| term.split_once('w')).ok_or_else(bad)?;
                    let m: u32 = if mult.is_empty() { 1 } else { mult.parse().map_err(|_| bad())? };
                    let a: usize = idx.parse().map_err(|_| bad())?;
                    if a == 0 || a > rank {
                        return Err(bad());
                    }
                    weight[a - 1] += m;
                }
            }
            return Ok(Self::from_weight(&weight));
        }
        let inner = t.trim_start_matches('(').trim_end_matches(')');
        if inner.is_empty() {
            return Ok(Partition::default());
        }
        let parts = inner.split(',').map(|x| x.trim().parse::<u32>().map_err(|_| bad())).collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&Self::format_parts(&self.0))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `e_m(z_1 .. z_N)`.
pub fn elementary<C: Coeff>(m: usize, n: usize) -> LaurentPoly<C> {
    SymPoly::<C>::elementary(m, n).to_laurent()
}

/// `s_lambda(z_1 .. z_N)` as the ratio of the alternant `det(z_i^(lambda_j + N - j))`
/// by the Vandermonde product. Generalized `lambda` with negative parts is
/// allowed.
pub fn schur_of_exponent<C: Coeff>(lambda: &[i32]) -> LaurentPoly<C> {
    let n = lambda.len();
    let shifted: Vec<i32> = lambda.iter().enumerate().map(|(j, &l)| l + (n - 1 - j) as i32).collect();
    let mut num = LaurentPoly::zero(n);
    for (p, s) in permutations_with_sign(n) {
        let mut e = alloc::vec![0; n];
        for j in 0..n {
            e[p[j]] = shifted[j];
        }
        num.add_term(e, &C::from_int(s));
    }
    num.exact_div(&vandermonde(n)).expect("alternants are divisible by the Vandermonde product")
}

/// `s_lambda(z_1 .. z_N)`; zero when `lambda` has more than `N` parts.
pub fn schur<C: Coeff>(lambda: &Partition, n: usize) -> LaurentPoly<C> {
    if lambda.len() > n {
        return LaurentPoly::zero(n);
    }
    schur_of_exponent(&lambda.padded(n))
}

/// Schur expansion by repeated removal of the lexicographically leading
/// monomial.
pub fn schur_expand<C: Coeff>(f: &LaurentPoly<C>) -> Result<BTreeMap<Partition, C>> {
    if !f.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if !f.is_polynomial() {
        return Err(Error::NegativeExponent);
    }
    let n = f.nvars();
    let mut rem = f.clone();
    let mut out = BTreeMap::new();
    while let Some((e, c)) = rem.leading_term() {
        let lambda = Partition::from_exponent(e).map_err(|_| Error::NonzeroRemainder)?;
        if e.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NonzeroRemainder);
        }
        let c = c.clone();
        rem.sub_assign(&schur::<C>(&lambda, n).scale(&c));
        out.insert(lambda, c);
    }
    Ok(out)
}

/// All `mu` with `s_lambda e_m = sum s_mu`, at most `N` parts.
pub fn pieri_e(lambda: &Partition, m: usize, n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if lambda.len() > n {
        return out;
    }
    let base = lambda.padded(n);
    for mask in crate::combinat::subsets(n, m) {
        let mut mu = base.clone();
        for &i in &mask {
            mu[i] += 1;
        }
        if mu.windows(2).all(|w| w[0] >= w[1]) {
            out.push(Partition::from_exponent(&mu).expect("nonnegative"));
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Partitions of `total` with at most `max_len` parts, each at most `max_part`,
/// in decreasing lexicographic order.
pub fn partitions_bounded(total: u32, max_len: usize, max_part: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, len_left: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if len_left == 0 {
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            go(rest - p, len_left - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, max_len, max_part, &mut Vec::new(), &mut out);
    out
}

type KostkaMemo = BTreeMap<(Vec<u32>, Vec<u32>), u64>;
type MonomialExpansion = alloc::rc::Rc<Vec<(Exponent, i64)>>;

/// Memoized Kostka numbers and Schur-to-monomial expansions in `N` variables.
pub struct KostkaTable {
    nvars: usize,
    counts: RefCell<KostkaMemo>,
    expansions: RefCell<BTreeMap<Vec<u32>, MonomialExpansion>>,
}

impl KostkaTable {
    pub fn new(nvars: usize) -> Self {
        KostkaTable { nvars, counts: RefCell::new(BTreeMap::new()), expansions: RefCell::new(BTreeMap::new()) }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Number of semistandard tableaux of shape `lambda` and content `mu`.
    pub fn kostka(&self, lambda: &[u32], mu: &[u32]) -> u64 {
        let mut lam: Vec<u32> = lambda.iter().copied().filter(|&x| x > 0).collect();
        lam.sort_unstable_by(|a, b| b.cmp(a));
        let mut content: Vec<u32> = mu.iter().copied().filter(|&x| x > 0).collect();
        content.sort_unstable();
        self.kostka_sorted(&lam, &content)
    }

    // `content` is sorted increasingly, so its last entry (the largest
    // multiplicity) is stripped first as a horizontal strip.
    fn kostka_sorted(&self, lambda: &[u32], content: &[u32]) -> u64 {
        let size: u32 = lambda.iter().sum();
        if size != content.iter().sum::<u32>() {
            return 0;
        }
        if content.is_empty() {
            return 1;
        }
        if lambda.len() > content.len() {
            return 0;
        }
        let key = (lambda.to_vec(), content.to_vec());
        if let Some(&k) = self.counts.borrow().get(&key) {
            return k;
        }
        let (&m, rest) = content.split_last().unwrap();
        let mut total = 0u64;
        let mut nu = lambda.to_vec();
        self.strips(lambda, 0, m, &mut nu, &mut |nu: &[u32]| {
            let trimmed: Vec<u32> = nu.iter().copied().filter(|&x| x > 0).collect();
            total = total.checked_add(self.kostka_sorted(&trimmed, rest)).expect("Kostka number overflow");
        });
        self.counts.borrow_mut().insert(key, total);
        total
    }

    // Enumerates `nu` with `lambda / nu` a horizontal strip of size `left`.
    fn strips(&self, lambda: &[u32], i: usize, left: u32, nu: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
        if i == lambda.len() {
            if left == 0 {
                visit(nu);
            }
            return;
        }
        let floor = lambda.get(i + 1).copied().unwrap_or(0);
        let max_take = (lambda[i] - floor).min(left);
        for take in 0..=max_take {
            nu[i] = lambda[i] - take;
            self.strips(lambda, i + 1, left - take, nu, visit);
        }
        nu[i] = lambda[i];
    }

    /// `s_lambda = sum_mu K_{lambda mu} m_mu` for a generalized `lambda` of
    /// length `N` (negative parts allowed).
    pub fn schur_in_monomials(&self, lambda: &[i32]) -> alloc::rc::Rc<Vec<(Exponent, i64)>> {
        let shift = *lambda.last().unwrap_or(&0);
        let base: Vec<u32> = lambda.iter().map(|&x| (x - shift) as u32).collect();
        let cached = self.expansions.borrow().get(&base).cloned();
        let exp = match cached {
            Some(e) => e,
            None => {
                let size = base.iter().sum();
                let lam = Partition::new(base.clone()).expect("decreasing");
                let mut terms = Vec::new();
                for mu in partitions_bounded(size, self.nvars, base.first().copied().unwrap_or(0)) {
                    let mu_p = Partition(mu.clone());
                    if !lam.dominates(&mu_p) {
                        continue;
                    }
                    let k = self.kostka(&base, &mu);
                    if k > 0 {
                        terms.push((mu_p.padded(self.nvars), k as i64));
                    }
                }
                let e = alloc::rc::Rc::new(terms);
                self.expansions.borrow_mut().insert(base, e.clone());
                e
            }
        };
        if shift == 0 {
            return exp;
        }
        alloc::rc::Rc::new(exp.iter().map(|(k, c)| (k.iter().map(|x| x + shift).collect(), *c)).collect())
    }

    /// Symmetric polynomial from Schur coefficients keyed by generalized
    /// partitions of length `N`.
    pub fn from_schur<C: Coeff>(&self, schur: &BTreeMap<Exponent, C>) -> SymPoly<C> {
        let mut out = SymPoly::zero(self.nvars);
        for (lambda, c) in schur {
            for (mu, k) in self.schur_in_monomials(lambda).iter() {
                out.add_term(mu.clone(), &c.mul_int(*k));
            }
        }
        out
    }

    /// Schur coefficients of a symmetric polynomial, by peeling the
    /// lexicographically largest monomial.
    pub fn to_schur<C: Coeff>(&self, f: &SymPoly<C>) -> BTreeMap<Exponent, C> {
        let mut rem = f.clone();
        let mut out = BTreeMap::new();
        loop {
            let lead = rem.terms().next_back().map(|(l, c)| (l.clone(), c.clone()));
            let Some((lambda, c)) = lead else { break };
            for (mu, k) in self.schur_in_monomials(&lambda).iter() {
                rem.add_term(mu.clone(), &c.mul_int(-*k));
            }
            out.insert(lambda, c);
        }
        out
    }
}

/// `s_lambda` in the monomial basis of `N` variables.
pub fn schur_sym<C: Coeff>(lambda: &Partition, n: usize) -> SymPoly<C> {
    if lambda.len() > n {
        return SymPoly::zero(n);
    }
    let table = KostkaTable::new(n);
    let mut m = BTreeMap::new();
    m.insert(lambda.padded(n), C::one());
    table.from_schur(&m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn schur_small_cases() {
        assert_eq!(schur::<BigInt>(&part(&[1]), 3), elementary(1, 3));
        assert_eq!(schur::<BigInt>(&part(&[1, 1]), 3), elementary(2, 3));
        let s21 = schur::<BigInt>(&part(&[2, 1]), 3);
        assert_eq!(s21.len(), 7);
        let e1e2 = elementary::<BigInt>(1, 3).mul(&elementary(2, 3));
        assert_eq!(s21, &e1e2 - &elementary(3, 3));
        assert_eq!(s21.coeff(&[1, 1, 1]), BigInt::from(2));
    }

    #[test]
    fn expand_examples() {
        let e1e2 = elementary::<BigInt>(1, 3).mul(&elementary(2, 3));
        let exp = schur_expand(&e1e2).unwrap();
        assert_eq!(exp.len(), 2);
        assert_eq!(exp[&part(&[2, 1])], BigInt::from(1));
        assert_eq!(exp[&part(&[1, 1, 1])], BigInt::from(1));
        let bad = &LaurentPoly::<BigInt>::var(2, 0) + &LaurentPoly::var(2, 1).scale(&BigInt::from(2));
        assert_eq!(schur_expand(&bad), Err(Error::NotSymmetric));
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(pieri_e(&part(&[]), 2, 3), alloc::vec![part(&[1, 1])]);
        assert_eq!(pieri_e(&part(&[1]), 1, 2), alloc::vec![part(&[2]), part(&[1, 1])]);
        assert_eq!(pieri_e(&part(&[1, 1]), 1, 2), alloc::vec![part(&[2, 1])]);
    }

    #[test]
    fn kostka_matches_alternant() {
        for n in 1..=4usize {
            let table = KostkaTable::new(n);
            for size in 0..=5u32 {
                for lam in partitions_bounded(size, n, size) {
                    let lam = Partition(lam);
                    let direct = SymPoly::from_laurent(&schur::<BigInt>(&lam, n)).unwrap();
                    assert_eq!(schur_sym::<BigInt>(&lam, n), direct, "{:?} in {} vars", lam, n);
                    let back = table.to_schur(&direct);
                    assert_eq!(back.len(), 1);
                    assert_eq!(back[&lam.padded(n)], BigInt::from(1));
                }
            }
        }
    }

    #[test]
    fn generalized_schur_shift() {
        let table = KostkaTable::new(3);
        let lam = [1, 0, -1];
        let direct = SymPoly::from_laurent(&schur_of_exponent::<BigInt>(&lam)).unwrap();
        let mut m = BTreeMap::new();
        m.insert(lam.to_vec(), BigInt::from(1));
        assert_eq!(table.from_schur(&m), direct);
    }

    #[test]
    fn weights_and_text() {
        let p = part(&[2, 1]);
        assert_eq!(p.to_padded_text(3), "(2,1,0)");
        assert_eq!(p.to_weight(2), alloc::vec![1, 1]);
        assert_eq!(p.to_weight_text(2), "ω1+ω2");
        assert_eq!(Partition::parse("ω1+ω2", 2).unwrap(), p);
        assert_eq!(Partition::parse("(2,1,0)", 2).unwrap(), p);
        assert_eq!(Partition::parse("2w1", 1).unwrap(), part(&[2]));
        assert_eq!(Partition::from_weight(&[3]), part(&[3]));
        assert_eq!(part(&[3, 1]).conjugate(), part(&[2, 1, 1]));
        assert!(part(&[3, 1]).dominates(&part(&[2, 2])));
        assert!(!part(&[2, 2]).dominates(&part(&[3, 1])));
        assert!(Partition::new(alloc::vec![1, 2]).is_err());
    }
}
