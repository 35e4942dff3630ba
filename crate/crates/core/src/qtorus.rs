//! The quantum torus generated by the initial data `Q_{a,0}, Q_{a,1}` and
//! the quantum Q-system recursion inside it.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand_core::RngCore;

use crate::error::{Error, Result};
use crate::poly::{CartanData, Coeff, WPoly};

/// `Q_{1,0}^{a_1} .. Q_{r,0}^{a_r} Q_{1,1}^{b_1} .. Q_{r,1}^{b_r}`, normal
/// ordered with every `Q_{.,0}` on the left.
///
/// Ordered graded-lexicographically: total degree first, then `a`, then `b`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NcMonomial {
    pub a: Vec<i32>,
    pub b: Vec<i32>,
}

impl NcMonomial {
    pub fn one(rank: usize) -> Self {
        NcMonomial { a: alloc::vec![0; rank], b: alloc::vec![0; rank] }
    }

    fn degree(&self) -> i64 {
        self.a.iter().chain(&self.b).map(|&x| x as i64).sum()
    }

    fn combine(&self, rhs: &Self, sign: i32) -> Self {
        NcMonomial {
            a: self.a.iter().zip(&rhs.a).map(|(x, y)| x + sign * y).collect(),
            b: self.b.iter().zip(&rhs.b).map(|(x, y)| x + sign * y).collect(),
        }
    }

    fn coords(&self) -> impl Iterator<Item = i32> + '_ {
        self.a.iter().chain(&self.b).copied()
    }
}

impl Ord for NcMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.a.cmp(&other.a)).then_with(|| self.b.cmp(&other.b))
    }
}

impl PartialOrd for NcMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `w`-exponent picked up when `Q_{.,1}^{b}` moves left past `Q_{.,0}^{a}`:
/// `v^(-sum Lambda_{a,b} b_b a_a)`.
fn twist(c: &CartanData, b_left: &[i32], a_right: &[i32]) -> i64 {
    let r = c.rank();
    let mut e = 0i64;
    for al in 1..=r {
        if a_right[al - 1] == 0 {
            continue;
        }
        for be in 1..=r {
            e += c.lambda(al, be) * b_left[be - 1] as i64 * a_right[al - 1] as i64;
        }
    }
    -2 * e
}

struct SmallTerm<'a> {
    mono: &'a NcMonomial,
    low: i64,
    dense: Vec<i64>,
}

/// Element of the quantum torus with coefficients in `Z[w, w^-1]`.
#[derive(Clone, PartialEq, Eq)]
pub struct NcLaurent {
    rank: usize,
    terms: BTreeMap<NcMonomial, WPoly>,
}

impl NcLaurent {
    pub fn zero(rank: usize) -> Self {
        NcLaurent { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(NcMonomial::one(rank), WPoly::one())
    }

    pub fn monomial(m: NcMonomial, c: WPoly) -> Self {
        let mut out = Self::zero(m.a.len());
        out.add_term(m, &c);
        out
    }

    /// The generator `Q_{a,k}` for `k` in `{0, 1}`; `Q_{0,k} = Q_{r+1,k} = 1`.
    pub fn generator(rank: usize, alpha: usize, k: u8) -> Self {
        let mut m = NcMonomial::one(rank);
        if alpha >= 1 && alpha <= rank {
            match k {
                0 => m.a[alpha - 1] = 1,
                1 => m.b[alpha - 1] = 1,
                _ => panic!("only levels 0 and 1 are generators"),
            }
        }
        Self::monomial(m, WPoly::one())
    }

    pub fn rank(&self) -> usize {
        self.rank
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&NcMonomial, &WPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &NcMonomial) -> WPoly {
        self.terms.get(m).cloned().unwrap_or_else(WPoly::zero)
    }

    pub fn add_term(&mut self, m: NcMonomial, c: &WPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.sub_assign(rhs);
        out
    }

    fn sub_assign(&mut self, rhs: &Self) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), &c.neg_ref());
        }
    }

    pub fn scale(&self, c: &WPoly) -> Self {
        let mut out = Self::zero(self.rank);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), &a.mul_ref(c));
        }
        out
    }

    /// Multiply by `v^e`.
    pub fn scale_v(&self, e: i64) -> Self {
        self.scale(&WPoly::power(2 * e))
    }

    /// Product in the torus, re-normal-ordered.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        match (self.small_terms(), rhs.small_terms()) {
            (Some(l), Some(r)) => self.mul_small(&l, &r),
            _ => self.mul_big(rhs),
        }
    }

    fn mul_big(&self, rhs: &Self) -> Self {
        let c = CartanData::new(self.rank);
        let mut out = Self::zero(self.rank);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let t = twist(&c, &m1.b, &m2.a);
                out.add_term(m1.combine(m2, 1), &c1.mul_ref(c2).shift(t));
            }
        }
        out
    }

    /// Terms as `(monomial, lowest w-exponent, dense coefficients)` when every
    /// coefficient fits in an `i32`.
    fn small_terms(&self) -> Option<Vec<SmallTerm<'_>>> {
        self.terms
            .iter()
            .map(|(m, c)| {
                let low = c.terms().next().map_or(0, |(e, _)| e);
                let mut dense = Vec::new();
                for (e, k) in c.terms() {
                    let k = k.to_i32()?;
                    dense.resize((e - low) as usize, 0);
                    dense.push(k as i64);
                }
                Some(SmallTerm { mono: m, low, dense })
            })
            .collect()
    }

    /// Products of `i32` coefficients fit in an `i64`, and `i128` sums cannot
    /// overflow for any realistic number of terms.
    fn mul_small(&self, lhs: &[SmallTerm<'_>], rhs: &[SmallTerm<'_>]) -> Self {
        let r = self.rank;
        let c = CartanData::new(r);
        let lam = c.matrix();
        let mut acc: BTreeMap<Vec<i32>, (i64, Vec<i128>)> = BTreeMap::new();
        let mut key = alloc::vec![0i32; 2 * r];
        for t1 in lhs {
            // twist(b1, a2) = -2 <Lambda b1, a2>
            let lb: Vec<i64> = (0..r).map(|al| (0..r).map(|be| lam[al][be] * t1.mono.b[be] as i64).sum()).collect();
            for t2 in rhs {
                for i in 0..r {
                    key[i] = t1.mono.a[i] + t2.mono.a[i];
                    key[r + i] = t1.mono.b[i] + t2.mono.b[i];
                }
                let t = -2 * (0..r).map(|al| lb[al] * t2.mono.a[al] as i64).sum::<i64>();
                let low = t1.low + t2.low + t;
                let len = t1.dense.len() + t2.dense.len() - 1;
                let slot = match acc.get_mut(&key[..]) {
                    Some(s) => s,
                    None => acc.entry(key.clone()).or_insert((low, Vec::new())),
                };
                if slot.1.is_empty() {
                    slot.0 = low;
                }
                if low < slot.0 {
                    let pad = (slot.0 - low) as usize;
                    slot.1.splice(0..0, core::iter::repeat_n(0, pad));
                    slot.0 = low;
                }
                let off = (low - slot.0) as usize;
                if slot.1.len() < off + len {
                    slot.1.resize(off + len, 0);
                }
                for (i, x) in t1.dense.iter().enumerate() {
                    if *x == 0 {
                        continue;
                    }
                    for (j, y) in t2.dense.iter().enumerate() {
                        slot.1[off + i + j] += (*x as i128) * (*y as i128);
                    }
                }
            }
        }
        let mut out = Self::zero(r);
        for (k, (low, dense)) in acc {
            let coeff = WPoly::from_terms(
                dense.into_iter().enumerate().filter(|(_, x)| *x != 0).map(|(i, x)| (low + i as i64, BigInt::from(x))),
            );
            if !coeff.is_zero() {
                out.terms.insert(NcMonomial { a: k[..r].to_vec(), b: k[r..].to_vec() }, coeff);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.rank);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    fn leading(&self) -> Option<(&NcMonomial, &WPoly)> {
        self.terms.iter().next_back()
    }

    fn support_box(&self) -> (Vec<i32>, Vec<i32>) {
        let n = 2 * self.rank;
        let mut lo = alloc::vec![i32::MAX; n];
        let mut hi = alloc::vec![i32::MIN; n];
        for m in self.terms.keys() {
            for (i, x) in m.coords().enumerate() {
                lo[i] = lo[i].min(x);
                hi[i] = hi[i].max(x);
            }
        }
        (lo, hi)
    }

    /// Greedy leading-term division. `left` solves `divisor * X = self`,
    /// otherwise `X * divisor = self`.
    fn divide(&self, divisor: &Self, left: bool) -> Result<Self> {
        let (de, dc) = divisor.leading().map(|(m, c)| (m.clone(), c.clone())).ok_or(Error::NcNotDivisible)?;
        let mut quot = Self::zero(self.rank);
        if self.is_zero() {
            return Ok(quot);
        }
        let (flo, fhi) = self.support_box();
        let (dlo, dhi) = divisor.support_box();
        let lo: Vec<i32> = flo.iter().zip(&dlo).map(|(x, y)| x - y).collect();
        let hi: Vec<i32> = fhi.iter().zip(&dhi).map(|(x, y)| x - y).collect();
        let cartan = CartanData::new(self.rank);
        let mut rem = self.clone();
        while let Some((re, rc)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let qe = re.combine(&de, -1);
            if qe.coords().enumerate().any(|(i, x)| x < lo[i] || x > hi[i]) {
                return Err(Error::NcNotDivisible);
            }
            let t = if left { twist(&cartan, &de.b, &qe.a) } else { twist(&cartan, &qe.b, &de.a) };
            let qc = rc.div_exact(&dc.shift(t)).ok_or(Error::NcNotDivisible)?;
            let qterm = Self::monomial(qe.clone(), qc.clone());
            let product = if left { divisor.mul(&qterm) } else { qterm.mul(divisor) };
            rem.sub_assign(&product);
            quot.add_term(qe, &qc);
        }
        Ok(quot)
    }

    /// `X` with `X * divisor = self`.
    pub fn right_div(&self, divisor: &Self) -> Result<Self> {
        self.divide(divisor, false)
    }

    /// `X` with `divisor * X = self`.
    pub fn left_div(&self, divisor: &Self) -> Result<Self> {
        self.divide(divisor, true)
    }

    /// Smallest exponent of any `Q_{.,1}` in the support.
    pub fn min_b_exponent(&self) -> Option<i32> {
        self.terms.keys().flat_map(|m| m.b.iter().copied()).min()
    }

    pub fn to_text(&self) -> String {
        alloc::format!("{}", self)
    }
}

impl fmt::Display for NcLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({})", c)?;
            for (lvl, exps) in [(0, &m.a), (1, &m.b)] {
                for (al, &e) in exps.iter().enumerate() {
                    match e {
                        0 => {}
                        1 => write!(f, "*Q[{},{}]", al + 1, lvl)?,
                        _ => write!(f, "*Q[{},{}]^{}", al + 1, lvl, e)?,
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NcLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// How the `Q_{.,0}` are specialized after normal ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalMode {
    /// `Q_{a,0} = 1`.
    Ev,
    /// `Q_{a,0} = v^(-sum_b Lambda_{a,b})`.
    Ev0,
}

/// Specializes the `Q_{.,0}`; the result only involves `Q_{.,1}`.
pub fn evaluate(f: &NcLaurent, mode: EvalMode) -> NcLaurent {
    let c = CartanData::new(f.rank);
    let mut out = NcLaurent::zero(f.rank);
    for (m, coeff) in &f.terms {
        let shift = match mode {
            EvalMode::Ev => 0,
            EvalMode::Ev0 => -2 * (1..=f.rank).map(|al| m.a[al - 1] as i64 * c.row_sum(al)).sum::<i64>(),
        };
        let key = NcMonomial { a: alloc::vec![0; f.rank], b: m.b.clone() };
        out.add_term(key, &coeff.shift(shift));
    }
    out
}

/// All `Q_{a,k}` for `k_min <= k <= k_max`, obtained from the initial data
/// by exact division in the torus.
pub struct QSystem {
    rank: usize,
    k_min: i64,
    k_max: i64,
    values: BTreeMap<(usize, i64), NcLaurent>,
}

impl QSystem {
    pub fn new(rank: usize, k_min: i64, k_max: i64) -> Result<Self> {
        assert!(k_min <= 0 && k_max >= 1, "the window must contain levels 0 and 1");
        let c = CartanData::new(rank);
        let mut values = BTreeMap::new();
        for al in 0..=rank + 1 {
            for k in [0i64, 1] {
                values.insert((al, k), NcLaurent::generator(rank, al, k as u8));
            }
        }
        for al in [0, rank + 1] {
            for k in k_min..=k_max {
                values.insert((al, k), NcLaurent::one(rank));
            }
        }
        let get = |v: &BTreeMap<(usize, i64), NcLaurent>, al: usize, k: i64| v[&(al, k)].clone();
        // Q_{a,k+1} Q_{a,k-1} = v^(-Lambda_aa) (Q_{a,k}^2 - Q_{a+1,k} Q_{a-1,k})
        let numerator = |v: &BTreeMap<(usize, i64), NcLaurent>, al: usize, k: i64| {
            let qk = get(v, al, k);
            qk.mul(&qk).sub(&get(v, al + 1, k).mul(&get(v, al - 1, k))).scale_v(-c.lambda(al, al))
        };
        for k in 1..k_max {
            for al in 1..=rank {
                let next = numerator(&values, al, k).right_div(&get(&values, al, k - 1))?;
                values.insert((al, k + 1), next);
            }
        }
        for k in (k_min + 1..=0).rev() {
            for al in 1..=rank {
                let prev = numerator(&values, al, k).left_div(&get(&values, al, k + 1))?;
                values.insert((al, k - 1), prev);
            }
        }
        Ok(QSystem { rank, k_min, k_max, values })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn window(&self) -> (i64, i64) {
        (self.k_min, self.k_max)
    }

    /// `Q_{a,k}`, with `Q_{0,k} = Q_{r+1,k} = 1`.
    pub fn get(&self, alpha: usize, k: i64) -> &NcLaurent {
        &self.values[&(alpha, k)]
    }

    /// Product of the generators in `word`, left to right.
    pub fn word(&self, word: &[(usize, i64)]) -> NcLaurent {
        word.iter().fold(NcLaurent::one(self.rank), |acc, &(al, k)| acc.mul(self.get(al, k)))
    }

    /// `Q_{a,k} Q_{b,k'} = v^(Lambda_ab (k' - k)) Q_{b,k'} Q_{a,k}`.
    pub fn commutation_holds(&self, a: (usize, i64), b: (usize, i64)) -> bool {
        let c = CartanData::new(self.rank);
        let lhs = self.get(a.0, a.1).mul(self.get(b.0, b.1));
        let rhs = self.get(b.0, b.1).mul(self.get(a.0, a.1)).scale_v(c.lambda(a.0, b.0) * (b.1 - a.1));
        lhs == rhs
    }

    /// Pairs inside the window `|k - k'| <= |a - b| + 1` violating the
    /// commutation relation.
    pub fn commutation_failures(&self) -> Vec<((usize, i64), (usize, i64))> {
        let mut out = Vec::new();
        for a in 1..=self.rank {
            for b in 1..=self.rank {
                for k in self.k_min..=self.k_max {
                    for kp in self.k_min..=self.k_max {
                        if (k - kp).abs() <= (a as i64 - b as i64).abs() + 1 && !self.commutation_holds((a, k), (b, kp))
                        {
                            out.push(((a, k), (b, kp)));
                        }
                    }
                }
            }
        }
        out
    }

    /// Recomputes `Q_{a,k-1}` from `Q_{a,k+1}` and `Q_{a,k}` by left
    /// division and compares with the stored value.
    pub fn backward_consistent(&self, alpha: usize, k: i64) -> Result<bool> {
        let c = CartanData::new(self.rank);
        let qk = self.get(alpha, k);
        let num = qk.mul(qk).sub(&self.get(alpha + 1, k).mul(self.get(alpha - 1, k))).scale_v(-c.lambda(alpha, alpha));
        Ok(num.left_div(self.get(alpha, k + 1))? == *self.get(alpha, k - 1))
    }

    /// Text listing of every `Q_{a,k}`, one per line.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for k in self.k_min..=self.k_max {
            for al in 1..=self.rank {
                s.push_str(&alloc::format!("Q[{},{}] = {}\n", al, k, self.get(al, k)));
            }
        }
        s
    }
}

/// `true` iff `ev0` of the word has no negative power of any `Q_{.,1}`.
pub fn check_polynomiality(system: &QSystem, word: &[(usize, i64)]) -> bool {
    debug_assert!(word.iter().all(|&(_, k)| k >= 1));
    evaluate(&system.word(word), EvalMode::Ev0).min_b_exponent().is_none_or(|m| m >= 0)
}

/// `ev(Q_{1,1} .. Q_{r,1} f) == Q_{1,1} .. Q_{r,1} ev0(f)`.
pub fn equivev_holds(f: &NcLaurent) -> bool {
    let r = f.rank;
    let top = (1..=r).fold(NcLaurent::one(r), |acc, al| acc.mul(&NcLaurent::generator(r, al, 1)));
    evaluate(&top.mul(f), EvalMode::Ev) == top.mul(&evaluate(f, EvalMode::Ev0))
}

/// A random torus element with at most `terms` terms, exponents in
/// `[-spread, spread]` and small coefficients.
pub fn random_element(rank: usize, terms: usize, spread: i32, rng: &mut impl RngCore) -> NcLaurent {
    let width = (2 * spread + 1) as u32;
    let mut draw = |m: u32| (rng.next_u32() % m) as i32;
    let mut out = NcLaurent::zero(rank);
    for _ in 0..terms {
        let a = (0..rank).map(|_| draw(width) - spread).collect();
        let b = (0..rank).map(|_| draw(width) - spread).collect();
        let c = WPoly::from_terms((0..2).map(|_| (draw(7) as i64 - 3, BigInt::from(draw(5) - 2))));
        out.add_term(NcMonomial { a, b }, &c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn mono(a: &[i32], b: &[i32], c: WPoly) -> NcLaurent {
        NcLaurent::monomial(NcMonomial { a: a.to_vec(), b: b.to_vec() }, c)
    }

    #[test]
    fn generators_commute_as_expected() {
        let q11 = NcLaurent::generator(1, 1, 1);
        let q10 = NcLaurent::generator(1, 1, 0);
        assert_eq!(q11.mul(&q10), mono(&[1], &[1], WPoly::power(-2)));
        let x = NcLaurent::generator(2, 1, 1);
        let y = NcLaurent::generator(2, 2, 1);
        assert_eq!(x.mul(&y), y.mul(&x));
        assert_eq!(NcLaurent::one(2).mul(&x), x);
    }

    #[test]
    fn sl2_recursion() {
        let sys = QSystem::new(1, -1, 3).unwrap();
        let expected = mono(&[-1], &[2], WPoly::power(2)).sub(&mono(&[-1], &[0], WPoly::power(-2)));
        assert_eq!(*sys.get(1, 2), expected);
        let lhs = sys.get(1, 1).mul(sys.get(1, -1));
        let q10 = sys.get(1, 0);
        assert_eq!(lhs, q10.mul(q10).sub(&NcLaurent::one(1)).scale_v(-1));
        assert_eq!(*sys.get(0, 2), NcLaurent::one(1));
        assert_eq!(*sys.get(2, -1), NcLaurent::one(1));
    }

    #[test]
    fn evaluations() {
        let sys = QSystem::new(1, 0, 3).unwrap();
        let q12 = sys.get(1, 2);
        let ev = evaluate(q12, EvalMode::Ev);
        assert_eq!(ev, mono(&[0], &[2], WPoly::power(2)).sub(&NcLaurent::one(1).scale_v(-1)));
        let ev0 = evaluate(q12, EvalMode::Ev0);
        assert_eq!(ev0, mono(&[0], &[2], WPoly::power(4)).sub(&NcLaurent::one(1)));
        assert_eq!(evaluate(&NcLaurent::one(1), EvalMode::Ev), NcLaurent::one(1));
        assert!(check_polynomiality(&sys, &[(1, 2)]));
        assert!(check_polynomiality(&sys, &[(1, 3)]));
        assert!(check_polynomiality(&sys, &[(1, 1)]));
    }

    #[test]
    fn division_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let f = random_element(2, 4, 2, &mut rng);
            let g = random_element(2, 3, 2, &mut rng);
            if f.is_zero() || g.is_zero() {
                continue;
            }
            assert_eq!(f.mul(&g).right_div(&g).unwrap(), f);
            assert_eq!(g.mul(&f).left_div(&g).unwrap(), f);
        }
        let x = NcLaurent::generator(1, 1, 1).add(&NcLaurent::one(1));
        assert_eq!(NcLaurent::one(1).right_div(&x), Err(Error::NcNotDivisible));
    }

    #[test]
    fn small_and_big_products_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for r in 1..=3 {
            for _ in 0..20 {
                let f = random_element(r, 6, 3, &mut rng);
                let g = random_element(r, 6, 3, &mut rng);
                assert_eq!(f.mul(&g), f.mul_big(&g));
            }
        }
        // coefficients beyond i32 take the big-integer route
        let huge = NcLaurent::one(2).scale(&WPoly::from_terms([(0, BigInt::from(1u64 << 40))]));
        let x = NcLaurent::generator(2, 1, 1).add(&NcLaurent::generator(2, 2, 0));
        assert_eq!(huge.mul(&x).mul(&huge), x.scale(&WPoly::from_terms([(0, BigInt::from(1u128 << 80))])));
    }

    #[test]
    fn commutations_and_consistency_small() {
        let sys = QSystem::new(2, -1, 3).unwrap();
        assert!(sys.commutation_failures().is_empty());
        for al in 1..=2 {
            for k in 0..3 {
                assert!(sys.backward_consistent(al, k).unwrap());
            }
        }
    }

    #[test]
    fn equivev_on_random_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for r in 1..=3 {
            for _ in 0..10 {
                assert!(equivev_holds(&random_element(r, 5, 3, &mut rng)));
            }
        }
    }
}
