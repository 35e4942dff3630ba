//! Checks of the quantum Q-system solved in the torus of the initial data.

use alloc::vec::Vec;

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::CheckReport;
use crate::qtorus::{equivev_holds, evaluate, random_element, EvalMode, NcLaurent, QSystem};

/// Parameters of the torus checks.
#[derive(Clone, Debug)]
pub struct TorusBounds {
    /// Levels `k_min..=k_max` solved for.
    pub k_min: i64,
    pub k_max: i64,
    /// `(length, level)` pairs: a word is checked for `ev0` polynomiality
    /// when for some pair it has at most `length` letters, all of level at
    /// most `level`.
    pub word_tiers: Vec<(usize, i64)>,
    /// Random elements tested against the evaluation identity.
    pub samples: usize,
    pub seed: u64,
}

impl TorusBounds {
    /// Levels `-2..=6`. Words of length 4 over every level at rank 1; at
    /// higher rank the length-4 words stop at a lower level and shorter
    /// words reach level 6, since products of the large high-level elements
    /// dominate the cost.
    pub fn for_rank(rank: usize) -> Self {
        let word_tiers = match rank {
            1 => alloc::vec![(4, 6)],
            2 => alloc::vec![(4, 5), (3, 6)],
            _ => alloc::vec![(4, 4), (2, 6)],
        };
        TorusBounds { k_min: -2, k_max: 6, word_tiers, samples: 40, seed: 7 }
    }

    /// Caps every word length at `max_len`.
    pub fn with_max_word_length(mut self, max_len: usize) -> Self {
        for t in &mut self.word_tiers {
            t.0 = t.0.min(max_len);
        }
        self
    }

    fn describe_words(&self) -> alloc::string::String {
        let tiers: Vec<_> =
            self.word_tiers.iter().map(|(l, k)| alloc::format!("length <= {} in levels 1..={}", l, k)).collect();
        tiers.join(" or ")
    }
}

/// Exact solution of the recursion in both directions, in-window
/// commutation, backward consistency, polynomiality of `ev0` on words, and
/// the evaluation identity on random elements.
pub fn check_torus(rank: usize, bounds: &TorusBounds) -> Vec<CheckReport> {
    let window = alloc::format!("k in [{},{}]", bounds.k_min, bounds.k_max);
    let mut solve = CheckReport::new(alloc::format!("torus solution r={}", rank), window.clone());
    let system = match QSystem::new(rank, bounds.k_min, bounds.k_max) {
        Ok(s) => {
            solve.record("exact division", true, alloc::string::String::new);
            s
        }
        Err(e) => {
            solve.record("exact division", false, || alloc::format!("{}", e));
            return alloc::vec![solve];
        }
    };
    for k in bounds.k_min + 1..bounds.k_max {
        for a in 1..=rank {
            let ok = system.backward_consistent(a, k);
            solve.record(alloc::format!("backward a={} k={}", a, k), matches!(ok, Ok(true)), || {
                alloc::format!("{:?}", ok)
            });
        }
    }

    let mut commute = CheckReport::new(alloc::format!("torus commutation r={}", rank), window);
    for a in 1..=rank {
        for b in 1..=rank {
            for k in bounds.k_min..=bounds.k_max {
                for kp in bounds.k_min..=bounds.k_max {
                    if (k - kp).abs() <= (a as i64 - b as i64).abs() + 1 {
                        let ok = system.commutation_holds((a, k), (b, kp));
                        commute.record(alloc::format!("({},{}) ({},{})", a, k, b, kp), ok, alloc::string::String::new);
                    }
                }
            }
        }
    }

    let mut poly = CheckReport::new(
        alloc::format!("ev0 polynomiality r={}", rank),
        alloc::format!("words of {}", bounds.describe_words()),
    );
    let top = bounds.word_tiers.iter().map(|t| t.1).max().unwrap_or(0);
    let letters: Vec<(usize, i64)> = (1..=top).flat_map(|k| (1..=rank).map(move |a| (a, k))).collect();
    let mut walk =
        WordWalk { system: &system, letters: &letters, tiers: &bounds.word_tiers, word: Vec::new(), report: &mut poly };
    walk.visit(&NcLaurent::one(rank));
    poly.grid.push_str(&alloc::format!(", {} normal-form words", poly.points.len()));

    let mut ev = CheckReport::new(
        alloc::format!("evaluation identity r={}", rank),
        alloc::format!("{} random elements, seed {}", bounds.samples, bounds.seed),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    for i in 0..bounds.samples {
        let f = random_element(rank, 1 + i % 4, 2, &mut rng);
        ev.record(alloc::format!("sample {}", i), equivev_holds(&f), || alloc::format!("fails on {}", f));
    }
    alloc::vec![solve, commute, poly, ev]
}

/// In-window letters q-commute, so words that differ by swapping adjacent
/// commuting letters have proportional products. Only the lexicographically
/// least word of each such class is visited, and each product extends the
/// product of its prefix by one letter.
struct WordWalk<'a> {
    system: &'a QSystem,
    letters: &'a [(usize, i64)],
    tiers: &'a [(usize, i64)],
    word: Vec<(usize, i64)>,
    report: &'a mut CheckReport,
}

fn commute(x: (usize, i64), y: (usize, i64)) -> bool {
    (x.1 - y.1).abs() <= (x.0 as i64 - y.0 as i64).abs() + 1
}

impl WordWalk<'_> {
    fn visit(&mut self, prefix: &NcLaurent) {
        for &l in self.letters {
            if !self.is_normal_extension(l) {
                continue;
            }
            self.word.push(l);
            if !self.in_range() {
                self.word.pop();
                continue;
            }
            let product = prefix.mul(self.system.get(l.0, l.1));
            let ok = evaluate(&product, EvalMode::Ev0).min_b_exponent().is_none_or(|m| m >= 0);
            let word = &self.word;
            self.report.record(alloc::format!("{:?}", word), ok, || {
                alloc::string::String::from("negative power of Q_{.,1} after ev0")
            });
            self.visit(&product);
            self.word.pop();
        }
    }

    fn in_range(&self) -> bool {
        let len = self.word.len();
        let level = self.word.iter().map(|w| w.1).max().unwrap_or(0);
        self.tiers.iter().any(|&(l, k)| len <= l && level <= k)
    }

    /// Appending `l` keeps the word least in its class unless `l` can move
    /// left past a larger letter.
    fn is_normal_extension(&self, l: (usize, i64)) -> bool {
        for &x in self.word.iter().rev() {
            if !commute(x, l) {
                return true;
            }
            if x > l {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_torus() {
        let bounds = TorusBounds { k_min: -1, k_max: 3, word_tiers: alloc::vec![(2, 2), (1, 3)], samples: 5, seed: 1 };
        for r in 1..=2 {
            for rep in check_torus(r, &bounds) {
                assert!(rep.passed(), "{}", rep);
            }
        }
    }

    #[test]
    fn normal_forms_cover_each_class_once() {
        // rank 1, levels 1..=3: (1,1) and (1,3) do not commute, neighbours do
        let letters = [(1, 1), (1, 2), (1, 3)];
        let system = QSystem::new(1, 0, 3).unwrap();
        let mut report = CheckReport::new("", "");
        let mut walk =
            WordWalk { system: &system, letters: &letters, tiers: &[(2, 3)], word: Vec::new(), report: &mut report };
        walk.visit(&NcLaurent::one(1));
        let words: Vec<_> = report.points.iter().map(|p| p.point.clone()).collect();
        // 3 singletons, and of the 9 pairs the classes {12,21} and {23,32}
        // collapse to one word each
        assert_eq!(words.len(), 3 + 7);
        assert!(words.contains(&alloc::string::String::from("[(1, 3), (1, 1)]")));
        assert!(!words.contains(&alloc::string::String::from("[(1, 2), (1, 1)]")));
    }
}
