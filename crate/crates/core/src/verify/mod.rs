//! Exact checks of the operator identities, difference equations, limits
//! and lemmas, collected into named suites.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::characters::NVector;

mod lemmas;
mod operators;
mod oracles;
mod properties;
mod relations;
mod suites;
mod torus;

pub use lemmas::{
    alternant, check_alternant_lemmas, check_first_lemma, check_second_lemma, check_vanishing_corollary,
    check_vanishing_lemma, first_lemma_alternant, first_lemma_holds, second_lemma_holds,
};
pub use operators::{
    check_dual_qsystem, check_dual_qsystem_perturbed, check_eigen, check_eigen_perturbed, OperatorForm,
};
pub use oracles::{check_class_one, check_macdonald, check_whittaker_toda};
pub use properties::{check_limits, check_order_independence, check_path_consistency, check_sl2_recursion};
pub use relations::{
    check_difference_equation, check_difference_equation_perturbed, check_level1_toda_grid, check_sl3_g_table,
    check_sl3_level1_g, check_sl3_level2_g, check_sl3_level2_g_grid, Sl3Level2Variant,
};
pub use suites::{admissible_grid, run_suite, SuiteOptions, SUITES};
pub use torus::{check_torus, TorusBounds};

/// Outcome at one parameter point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointOutcome {
    pub point: String,
    pub passed: bool,
}

/// Result of one check over a parameter grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub grid: String,
    pub points: Vec<PointOutcome>,
    /// First failing point with a description of the mismatch.
    pub counterexample: Option<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>, grid: impl Into<String>) -> Self {
        CheckReport { name: name.into(), grid: grid.into(), points: Vec::new(), counterexample: None }
    }

    /// Records a point; `detail` is only evaluated on failure.
    pub fn record(&mut self, point: impl Into<String>, passed: bool, detail: impl FnOnce() -> String) {
        let point = point.into();
        if !passed && self.counterexample.is_none() {
            self.counterexample = Some(alloc::format!("{}: {}", point, detail()));
        }
        self.points.push(PointOutcome { point, passed });
    }

    pub fn passed(&self) -> bool {
        !self.points.is_empty() && self.points.iter().all(|p| p.passed)
    }

    pub fn failures(&self) -> usize {
        self.points.iter().filter(|p| !p.passed).count()
    }

    /// Appends the points of another report of the same check.
    pub fn merge(&mut self, other: CheckReport) {
        if self.counterexample.is_none() {
            self.counterexample = other.counterexample;
        }
        self.points.extend(other.points);
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{} {} [{}] {}/{} points",
            status,
            self.name,
            self.grid,
            self.points.len() - self.failures(),
            self.points.len()
        )?;
        if let Some(c) = &self.counterexample {
            write!(f, "; first counterexample {}", c)?;
        }
        Ok(())
    }
}

/// All vectors of the given rank and level with `sigma(n) <= max_sigma`,
/// ordered by `sigma` and then lexicographically.
pub fn nvector_grid(rank: usize, level: usize, max_sigma: u32) -> Vec<NVector> {
    let slots = rank * level;
    let mut out = Vec::new();
    for total in 0..=max_sigma {
        let mut cur = alloc::vec![0u32; slots];
        compositions(total, 0, &mut cur, &mut |entries| {
            let levels = entries.chunks(rank).map(|c| c.to_vec()).collect();
            out.push(NVector::new(rank, levels).expect("well-formed grid vector"));
        });
    }
    out
}

fn compositions(rest: u32, i: usize, cur: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
    if i + 1 == cur.len() {
        cur[i] = rest;
        visit(cur);
        return;
    }
    for x in (0..=rest).rev() {
        cur[i] = x;
        compositions(rest - x, i + 1, cur, visit);
    }
}
