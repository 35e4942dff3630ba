//! Graded characters of fusion products, built by iterating the raising
//! operators on `1`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;

use crate::error::{Error, Result};
use crate::poly::{w_to_q, CartanData, Coeff, LaurentPoly, QPoly, SymPoly, WPoly};
use crate::qdiff::RaisingEngine;
use crate::symfun::Partition;

/// Occupation numbers `n_i^(a)` for `a` in `1..=r` and levels `i` in `1..=k`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NVector {
    rank: usize,
    // levels[i - 1][a - 1] = n_i^(a)
    levels: Vec<Vec<u32>>,
}

impl NVector {
    /// `levels[i]` lists `n_{i+1}^(1) .. n_{i+1}^(r)`.
    pub fn new(rank: usize, levels: Vec<Vec<u32>>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidNVector(String::from("rank must be at least 1")));
        }
        if levels.is_empty() {
            return Err(Error::InvalidNVector(String::from("level must be at least 1")));
        }
        if let Some(bad) = levels.iter().find(|l| l.len() != rank) {
            return Err(Error::InvalidNVector(alloc::format!(
                "expected {} entries per level, found {}",
                rank,
                bad.len()
            )));
        }
        Ok(NVector { rank, levels })
    }

    pub fn zero(rank: usize, level: usize) -> Self {
        NVector { rank, levels: alloc::vec![alloc::vec![0; rank]; level.max(1)] }
    }

    /// Level-1 vector with entries `n^(1) .. n^(r)`.
    pub fn level_one(entries: &[u32]) -> Self {
        NVector::new(entries.len(), alloc::vec![entries.to_vec()]).expect("nonempty level-one vector")
    }

    /// Parses `1,0;0,1` (levels separated by `;`).
    pub fn parse(text: &str, rank: usize, level: usize) -> Result<Self> {
        let bad = |why: &str| Error::InvalidNVector(alloc::format!("{}: {}", text, why));
        let levels = text
            .split(';')
            .map(|lvl| {
                lvl.split(',')
                    .map(|x| x.trim().parse::<u32>().map_err(|_| bad("entries must be nonnegative integers")))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if levels.len() != level {
            return Err(bad(&alloc::format!("expected {} levels", level)));
        }
        NVector::new(rank, levels)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn level(&self) -> usize {
        self.levels.len()
    }

    /// `n_i^(a)`, zero outside `a in 1..=r`, `i in 1..=k`.
    pub fn get(&self, alpha: usize, i: usize) -> u32 {
        if alpha == 0 || alpha > self.rank || i == 0 || i > self.levels.len() {
            return 0;
        }
        self.levels[i - 1][alpha - 1]
    }

    pub fn levels(&self) -> &[Vec<u32>] {
        &self.levels
    }

    /// Total number of tensor factors `sum n_i^(a)`.
    pub fn sigma(&self) -> u32 {
        self.levels.iter().flatten().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.sigma() == 0
    }

    /// Adds `sum delta * eps_{a,i}`. Shifts at `a = 0`, `a = r + 1` or level
    /// `0` are ignored; `None` if an entry would become negative.
    pub fn shifted(&self, shifts: &[(usize, usize, i64)]) -> Option<NVector> {
        let mut out = self.clone();
        for &(a, i, d) in shifts {
            if a == 0 || a > self.rank || i == 0 {
                continue;
            }
            assert!(i <= self.levels.len(), "level index out of range");
            let v = out.levels[i - 1][a - 1] as i64 + d;
            if v < 0 {
                return None;
            }
            out.levels[i - 1][a - 1] = v as u32;
        }
        Some(out)
    }

    /// Weight `l_a = sum_i i n_i^(a)` of the top component.
    pub fn top_weight(&self) -> Vec<u32> {
        (1..=self.rank).map(|a| (1..=self.level()).map(|i| i as u32 * self.get(a, i)).sum()).collect()
    }

    /// `2E` where `q^E` is the prefactor of the character formula in terms of
    /// the `M` operators.
    pub fn q_prefactor_doubled(&self) -> i64 {
        let (r, k) = (self.rank, self.level());
        let mut quad = 0i64;
        let mut lin = 0i64;
        for a in 1..=r {
            for i in 1..=k {
                let nai = self.get(a, i) as i64;
                lin += (i * a) as i64 * nai;
                for b in 1..=r {
                    for j in 1..=k {
                        quad += nai * (i.min(j) * a.min(b)) as i64 * self.get(b, j) as i64;
                    }
                }
            }
        }
        lin - quad
    }

    /// `2X` where `v^X` relates the `D`-operator coefficient to the
    /// character: `chi = v^X G`.
    pub fn v_prefactor_doubled(&self) -> i64 {
        let (r, k) = (self.rank, self.level());
        let c = CartanData::new(r);
        let mut lin = 0i64;
        let mut quad = 0i64;
        for a in 1..=r {
            for i in 1..=k {
                let nai = self.get(a, i) as i64;
                lin += nai * c.row_sum(a);
                for b in 1..=r {
                    for j in 1..=k {
                        quad += nai * i.min(j) as i64 * c.lambda(a, b) * self.get(b, j) as i64;
                    }
                }
            }
        }
        2 * lin + quad
    }

    /// The operator sequence, innermost first: level `1` before level `k`,
    /// and inside a level `a = r` down to `a = 1`.
    pub fn operator_sequence(&self) -> Vec<(usize, i64)> {
        let mut seq = Vec::new();
        for i in 1..=self.level() {
            for a in (1..=self.rank).rev() {
                for _ in 0..self.get(a, i) {
                    seq.push((a, i as i64));
                }
            }
        }
        seq
    }

    /// The outermost operator `(a, i)` and the vector it acts on.
    fn peel(&self) -> Option<((usize, i64), NVector)> {
        let (a, i) = self.operator_sequence().pop()?;
        Some(((a, i), self.shifted(&[(a, i as usize, -1)]).expect("entry is positive")))
    }

    /// `[[n_1^(1), ...], ...]` per level.
    pub fn to_text(&self) -> String {
        let lv: Vec<String> = self
            .levels
            .iter()
            .map(|l| l.iter().map(|x| alloc::format!("{}", x)).collect::<Vec<_>>().join(","))
            .collect();
        lv.join(";")
    }
}

impl fmt::Display for NVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for NVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n[{}]", self.to_text())
    }
}

/// How a character was computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Iterated `M` operators with the `q` prefactor.
    MPath,
    /// Iterated `D` operators with the `v` prefactor, converted to `q`.
    DPath,
}

/// `chi_n(q^-1, z)` in `r + 1` unconstrained variables.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedCharacter {
    pub n: NVector,
    /// Monomial symmetric expansion.
    pub chi: SymPoly<QPoly>,
    /// Schur expansion, keyed by partitions with at most `r + 1` parts.
    pub schur: BTreeMap<Partition, QPoly>,
    pub provenance: Provenance,
}

impl GradedCharacter {
    fn build(n: NVector, chi: SymPoly<QPoly>, engine: &RaisingEngine, provenance: Provenance) -> Result<Self> {
        let mut schur = BTreeMap::new();
        for (lambda, c) in engine.kostka().to_schur(&chi) {
            let p = Partition::from_exponent(&lambda).map_err(|_| Error::NegativeExponent)?;
            schur.insert(p, c);
        }
        Ok(GradedCharacter { n, chi, schur, provenance })
    }

    pub fn polynomial(&self) -> LaurentPoly<QPoly> {
        self.chi.to_laurent()
    }

    /// Schur coefficients with full columns of height `r + 1` removed.
    pub fn multiplicities(&self) -> BTreeMap<Partition, QPoly> {
        let nv = self.n.rank() + 1;
        let mut out = BTreeMap::new();
        for (lambda, c) in &self.schur {
            let padded = lambda.padded(nv);
            let last = padded[nv - 1];
            let reduced = Partition::from_exponent(&padded.iter().map(|x| x - last).collect::<Vec<_>>())
                .expect("reduced partition is nonnegative");
            let slot: &mut QPoly = out.entry(reduced).or_insert_with(QPoly::zero);
            slot.add_assign_ref(c);
        }
        out.retain(|_, c: &mut QPoly| !c.is_zero());
        out
    }
}

/// Memoized iterated products for one rank.
///
/// The unnormalized product for `n` is one operator applied to the product
/// for `n` minus its outermost factor, so neighbouring vectors share work.
pub struct CharacterCache {
    engine: RaisingEngine,
    m_products: RefCell<BTreeMap<NVector, SymPoly<QPoly>>>,
    d_products: RefCell<BTreeMap<NVector, SymPoly<WPoly>>>,
}

impl CharacterCache {
    pub fn new(rank: usize) -> Self {
        CharacterCache {
            engine: RaisingEngine::new(rank),
            m_products: RefCell::new(BTreeMap::new()),
            d_products: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn rank(&self) -> usize {
        self.engine.rank()
    }

    pub fn engine(&self) -> &RaisingEngine {
        &self.engine
    }

    fn check(&self, n: &NVector) -> Result<()> {
        if n.rank() != self.rank() {
            return Err(Error::InvalidNVector(alloc::format!(
                "rank {} given to a rank {} cache",
                n.rank(),
                self.rank()
            )));
        }
        Ok(())
    }

    /// `prod M_{a,i}^{n_i^(a)} 1` without prefactor.
    pub fn m_product(&self, n: &NVector) -> SymPoly<QPoly> {
        if let Some(p) = self.m_products.borrow().get(n) {
            return p.clone();
        }
        let out = match n.peel() {
            None => SymPoly::one(self.rank() + 1),
            Some(((a, i), inner)) => self.engine.apply_m(a, i, &self.m_product(&inner)),
        };
        self.m_products.borrow_mut().insert(n.clone(), out.clone());
        out
    }

    /// `prod D_{a,i}^{n_i^(a)} 1`, unconstrained.
    pub fn d_product(&self, n: &NVector) -> SymPoly<WPoly> {
        if let Some(p) = self.d_products.borrow().get(n) {
            return p.clone();
        }
        let out = match n.peel() {
            None => SymPoly::one(self.rank() + 1),
            Some(((a, i), inner)) => self.engine.apply_d(a, i, &self.d_product(&inner)),
        };
        self.d_products.borrow_mut().insert(n.clone(), out.clone());
        out
    }

    /// `prod M` applied to `1` in the given order, innermost first, without
    /// the cache.
    pub fn m_product_in_order(&self, sequence: &[(usize, i64)]) -> SymPoly<QPoly> {
        sequence.iter().fold(SymPoly::one(self.rank() + 1), |acc, &(a, i)| self.engine.apply_m(a, i, &acc))
    }

    /// `chi_n` as a symmetric polynomial (monomial basis).
    pub fn chi(&self, n: &NVector) -> Result<SymPoly<QPoly>> {
        self.check(n)?;
        let e2 = n.q_prefactor_doubled();
        if e2 % 2 != 0 {
            return Err(Error::ExponentNotDivisible { exponent: e2, divisor: 2 });
        }
        Ok(self.m_product(n).scale(&QPoly::power(e2 / 2)))
    }

    /// `chi_n`, or zero when `n` is `None` (a shifted vector left the
    /// nonnegative cone).
    pub fn chi_or_zero(&self, n: Option<&NVector>) -> Result<SymPoly<QPoly>> {
        match n {
            Some(n) => self.chi(n),
            None => Ok(SymPoly::zero(self.rank() + 1)),
        }
    }

    pub fn graded_character(&self, n: &NVector) -> Result<GradedCharacter> {
        let chi = self.chi(n)?;
        GradedCharacter::build(n.clone(), chi, &self.engine, Provenance::MPath)
    }

    /// The `D`-operator coefficient `G_n`, unconstrained.
    pub fn g_sym(&self, n: &NVector) -> Result<SymPoly<WPoly>> {
        self.check(n)?;
        Ok(self.d_product(n))
    }

    /// `G_n` or zero for a vector outside the cone.
    pub fn g_or_zero(&self, n: Option<&NVector>) -> Result<SymPoly<WPoly>> {
        match n {
            Some(n) => self.g_sym(n),
            None => Ok(SymPoly::zero(self.rank() + 1)),
        }
    }

    /// `G_n` restricted to `z_1 ... z_{r+1} = 1`.
    pub fn g_coefficient(&self, n: &NVector) -> Result<LaurentPoly<WPoly>> {
        Ok(self.g_sym(n)?.constrain())
    }

    /// `chi_n` recomputed as `v^X G_n`, converted to `q`. Fails with
    /// `ExponentNotDivisible` when some power of `v` is not a power of `q`.
    pub fn graded_character_via_d(&self, n: &NVector) -> Result<GradedCharacter> {
        let g = self.g_sym(n)?;
        let scaled = g.scale(&WPoly::power(n.v_prefactor_doubled()));
        let mut chi = SymPoly::zero(self.rank() + 1);
        for (k, c) in scaled.terms() {
            chi.add_term(k.clone(), &w_to_q(c, self.rank())?);
        }
        GradedCharacter::build(n.clone(), chi, &self.engine, Provenance::DPath)
    }
}

/// `chi_n(q^-1, z)` through the `M` operators.
pub fn graded_character(n: &NVector) -> Result<GradedCharacter> {
    CharacterCache::new(n.rank()).graded_character(n)
}

/// `G_n` through the `D` operators, constrained to `z_1 ... z_{r+1} = 1`.
pub fn g_coefficient(n: &NVector) -> Result<LaurentPoly<WPoly>> {
    CharacterCache::new(n.rank()).g_coefficient(n)
}

/// Schur coefficients of `chi_n` with full columns removed.
pub fn multiplicities(n: &NVector) -> Result<BTreeMap<Partition, QPoly>> {
    Ok(graded_character(n)?.multiplicities())
}

/// Partition of the top component `sum_a (sum_i i n_i^(a)) omega_a`.
pub fn top_component(n: &NVector) -> Partition {
    Partition::from_weight(&n.top_weight())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::{schur_sym, Partition};

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn s(p: &[u32], nv: usize) -> SymPoly<QPoly> {
        schur_sym(&part(p), nv)
    }

    #[test]
    fn zero_vector_gives_one() {
        for r in 1..=3 {
            let chi = graded_character(&NVector::zero(r, 2)).unwrap();
            assert_eq!(chi.chi, SymPoly::one(r + 1));
        }
    }

    #[test]
    fn small_sl3_characters() {
        let chi = graded_character(&NVector::level_one(&[1, 0])).unwrap();
        assert_eq!(chi.chi, s(&[1], 3));
        let chi = graded_character(&NVector::level_one(&[1, 1])).unwrap();
        let expected = s(&[2, 1], 3).add(&s(&[1, 1, 1], 3).scale(&QPoly::power(-1)));
        assert_eq!(chi.chi, expected);
        let mult = chi.multiplicities();
        assert_eq!(mult[&part(&[2, 1])], QPoly::one());
        assert_eq!(mult[&part(&[])], QPoly::power(-1));
    }

    #[test]
    fn sl2_square() {
        let chi = graded_character(&NVector::level_one(&[2])).unwrap();
        let expected = s(&[2], 2).add(&s(&[1, 1], 2).scale(&QPoly::power(-1)));
        assert_eq!(chi.chi, expected);
    }

    #[test]
    fn top_components() {
        assert_eq!(top_component(&NVector::level_one(&[1, 1])), part(&[2, 1]));
        assert_eq!(top_component(&NVector::zero(2, 1)), part(&[]));
        let n = NVector::new(1, alloc::vec![alloc::vec![1], alloc::vec![1]]).unwrap();
        assert_eq!(top_component(&n), part(&[3]));
    }

    #[test]
    fn parse_and_shift() {
        let n = NVector::parse("1,0;0,1", 2, 2).unwrap();
        assert_eq!(n.get(1, 1), 1);
        assert_eq!(n.get(2, 2), 1);
        assert_eq!(n.to_text(), "1,0;0,1");
        assert!(n.shifted(&[(2, 1, -1)]).is_none());
        assert_eq!(n.shifted(&[(0, 1, -1), (3, 2, 5), (1, 1, 1)]).unwrap().get(1, 1), 2);
        assert!(NVector::parse("1,0", 2, 2).is_err());
        assert!(NVector::parse("1,-1", 2, 1).is_err());
        assert!(NVector::parse("1", 2, 1).is_err());
    }

    #[test]
    fn d_path_reproduces_characters() {
        let cache = CharacterCache::new(2);
        for n in [[1u32, 0], [1, 1], [2, 0], [0, 2], [2, 1]] {
            let n = NVector::level_one(&n);
            let via_d = cache.graded_character_via_d(&n).unwrap();
            assert_eq!(via_d.chi, cache.chi(&n).unwrap());
        }
    }
}
