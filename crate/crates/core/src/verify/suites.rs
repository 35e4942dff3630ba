//! Named collections of checks with their default bounds.

use alloc::string::String;
use alloc::vec::Vec;

use super::lemmas::check_alternant_lemmas;
use super::operators::{check_dual_qsystem, check_eigen, OperatorForm};
use super::oracles::{check_class_one, check_macdonald, check_whittaker_toda};
use super::properties::{check_limits, check_order_independence, check_path_consistency, check_sl2_recursion};
use super::relations::{
    check_difference_equation, check_level1_toda_grid, check_sl3_g_table, check_sl3_level1_g, check_sl3_level2_g_grid,
};
use super::torus::{check_torus, TorusBounds};
use super::{nvector_grid, CheckReport};
use crate::characters::{CharacterCache, NVector};
use crate::error::{Error, Result};

/// Suite names accepted by [`run_suite`].
pub const SUITES: [&str; 9] =
    ["qsystem", "diffeq", "eigen", "lemmas", "limits", "torus", "macdonald", "whittaker", "all"];

/// Overrides of the default bounds. `None` keeps the default of each suite.
#[derive(Clone, Copy, Debug, Default)]
pub struct SuiteOptions {
    /// Restrict to one rank.
    pub rank: Option<usize>,
    /// Size bound: degree for `qsystem`, `sigma` for grids, `a, b` for
    /// `lemmas`, `|lambda|` for `macdonald`, word length for `torus`, `n`
    /// for `whittaker`.
    pub bound: Option<u32>,
    /// Series order for `whittaker`.
    pub order: Option<usize>,
}

impl SuiteOptions {
    fn ranks(&self, default: core::ops::RangeInclusive<usize>) -> Vec<usize> {
        match self.rank {
            Some(r) => alloc::vec![r],
            None => default.collect(),
        }
    }

    fn bound_or(&self, default: u32) -> u32 {
        self.bound.unwrap_or(default)
    }
}

/// Runs the named suite and returns its reports in a fixed order.
pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<Vec<CheckReport>> {
    match name {
        "qsystem" => Ok(qsystem(opts)),
        "diffeq" => diffeq(opts),
        "eigen" => eigen(opts),
        "lemmas" => check_alternant_lemmas(opts.bound_or(3) as usize),
        "limits" => limits(opts),
        "torus" => Ok(torus(opts)),
        "macdonald" => macdonald(opts),
        "whittaker" => whittaker(opts),
        "all" => {
            let mut out = Vec::new();
            for s in SUITES.iter().filter(|&&s| s != "all") {
                out.extend(run_suite(s, opts)?);
            }
            Ok(out)
        }
        other => Err(Error::UnknownSuite(String::from(other))),
    }
}

fn qsystem(opts: &SuiteOptions) -> Vec<CheckReport> {
    let degree = opts.bound_or(6);
    let mut out = Vec::new();
    for r in opts.ranks(2..=3) {
        let cache = CharacterCache::new(r);
        for form in [OperatorForm::D, OperatorForm::M] {
            out.push(check_dual_qsystem(cache.engine(), (-1, 2), degree, form));
        }
    }
    out
}

/// Vectors of the grid with `n_k, n_{k-1} >= 1` in every component. At rank
/// `r` the smallest of these has `sigma = 2r`, so the bound is raised to
/// `2r + 1` when lower, leaving at least one layer above the minimum.
pub fn admissible_grid(r: usize, k: usize, max_sigma: u32) -> Vec<NVector> {
    let sigma = max_sigma.max(2 * r as u32 + 1);
    let base = NVector::zero(r, k);
    let ones: Vec<(usize, usize, i64)> = (1..=r).flat_map(|a| [(a, k, 1), (a, k - 1, 1)]).collect();
    let lifted = base.shifted(&ones).expect("raising stays nonnegative");
    nvector_grid(r, k, sigma - lifted.sigma())
        .into_iter()
        .map(|n| {
            let mut levels = n.levels().to_vec();
            for (l, extra) in levels.iter_mut().zip(lifted.levels()) {
                for (x, e) in l.iter_mut().zip(extra) {
                    *x += e;
                }
            }
            NVector::new(r, levels).expect("same shape")
        })
        .collect()
}

fn diffeq(opts: &SuiteOptions) -> Result<Vec<CheckReport>> {
    let sigma = opts.bound_or(5);
    let mut out = Vec::new();
    for r in opts.ranks(1..=3) {
        let cache = CharacterCache::new(r);
        out.push(check_level1_toda_grid(&cache, &nvector_grid(r, 1, sigma))?);
        for k in 2..=3 {
            out.push(check_difference_equation(&cache, k, &admissible_grid(r, k, sigma))?);
        }
        if r == 1 {
            out.push(check_sl2_recursion(10)?);
        }
        if r == 2 {
            out.push(check_sl3_g_table(&cache)?);
            out.push(check_sl3_level1_g(&cache, sigma)?);
            out.push(check_sl3_level2_g_grid(&cache, 2)?);
        }
    }
    Ok(out)
}

fn eigen(opts: &SuiteOptions) -> Result<Vec<CheckReport>> {
    let sigma = opts.bound_or(4);
    opts.ranks(1..=3).into_iter().map(|r| check_eigen(&CharacterCache::new(r), &nvector_grid(r, 1, sigma))).collect()
}

fn limits(opts: &SuiteOptions) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for r in opts.ranks(1..=3) {
        let cache = CharacterCache::new(r);
        for level in 1..=3 {
            let grid = nvector_grid(r, level, opts.bound_or(if level == 3 { 4 } else { 6 }));
            out.push(check_limits(&cache, &grid)?);
            out.push(check_order_independence(&cache, &grid)?);
            out.push(check_path_consistency(&cache, &grid)?);
        }
    }
    Ok(out)
}

fn torus(opts: &SuiteOptions) -> Vec<CheckReport> {
    opts.ranks(1..=3)
        .into_iter()
        .flat_map(|r| {
            let bounds = TorusBounds::for_rank(r);
            let bounds = match opts.bound {
                Some(b) => bounds.with_max_word_length(b as usize),
                None => bounds,
            };
            check_torus(r, &bounds)
        })
        .collect()
}

fn macdonald(opts: &SuiteOptions) -> Result<Vec<CheckReport>> {
    let nv = opts.rank.map_or(3, |r| r + 1);
    Ok(alloc::vec![check_macdonald(opts.bound_or(4), nv)?])
}

fn whittaker(opts: &SuiteOptions) -> Result<Vec<CheckReport>> {
    let order = opts.order.unwrap_or(20);
    let toda_n = opts.bound_or(6);
    let class_n = opts.bound.unwrap_or(4);
    Ok(alloc::vec![check_whittaker_toda(toda_n, order), check_class_one(class_n, order)?])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        assert!(matches!(run_suite("nope", &SuiteOptions::default()), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn admissible_grid_shape() {
        let g = admissible_grid(3, 2, 5);
        // the minimal vector and its 6 single raises
        assert_eq!(g.len(), 7);
        assert_eq!(g.iter().map(NVector::sigma).min(), Some(6));
        let g = admissible_grid(1, 2, 3);
        assert!(g.iter().all(|n| n.get(1, 1) >= 1 && n.get(1, 2) >= 1 && n.sigma() <= 3));
        assert_eq!(g.len(), 3);
    }
}
