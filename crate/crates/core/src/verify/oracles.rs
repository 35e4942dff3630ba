//! Comparison with routes that never touch the raising operators: the
//! Macdonald eigenproblem and the sl2 Whittaker series.

use alloc::vec::Vec;

use super::CheckReport;
use crate::characters::{CharacterCache, NVector};
use crate::error::Result;
use crate::macdonald::{degenerate_operator, macdonald_poly, qwhittaker_specialize};
use crate::poly::{Coeff, QPoly, SymPoly};
use crate::symfun::{partitions_bounded, Partition};
use crate::whittaker::{check_toda_eigen, class_one_combination};

/// For every partition with `|lambda| <= max_size` and at most `N` parts,
/// `N <= max_nvars`: the `t = 0`, `q -> q^-1` specialization of `P_lambda`
/// equals `e_N^{lambda_N} chi_n` with `n^(a) = lambda_a - lambda_{a+1}`, and
/// is an eigenfunction of each degenerate operator with eigenvalue
/// `q^{lambda_1 + ... + lambda_a}`.
pub fn check_macdonald(max_size: u32, max_nvars: usize) -> Result<CheckReport> {
    let mut report =
        CheckReport::new("Macdonald specialization", alloc::format!("|lambda| <= {}, N <= {}", max_size, max_nvars));
    for nv in 1..=max_nvars {
        let cache = (nv >= 2).then(|| CharacterCache::new(nv - 1));
        for size in 0..=max_size {
            for parts in partitions_bounded(size, nv, size) {
                let lambda = Partition::new(parts).expect("generated partitions are valid");
                let padded = lambda.padded(nv);
                let spec = qwhittaker_specialize(&macdonald_poly(&lambda, nv)?)?;
                let want = match &cache {
                    // one variable: P_(m) = z^m
                    None => SymPoly::monomial(padded.clone(), QPoly::one()),
                    Some(cache) => {
                        let n: Vec<u32> = padded.windows(2).map(|w| (w[0] - w[1]) as u32).collect();
                        cache.chi(&NVector::level_one(&n))?.shift_det(padded[nv - 1])
                    }
                };
                report.record(alloc::format!("N={} lambda={}", nv, lambda), spec == want, || {
                    alloc::format!("specialization {} differs from {}", spec, want)
                });
                for a in 1..=nv {
                    let eigen: i64 = padded[..a].iter().map(|&x| x as i64).sum();
                    let image = degenerate_operator(a, &spec)?;
                    report.record(
                        alloc::format!("N={} lambda={} a={}", nv, lambda, a),
                        image == spec.scale(&QPoly::power(eigen)),
                        || alloc::format!("eigenvalue q^{} fails", eigen),
                    );
                }
            }
        }
    }
    Ok(report)
}

/// Toda eigenvalue equation for the sl2 Whittaker series and both of their
/// reflections, for `n <= max_n`, to the given order in `q^-1`.
pub fn check_whittaker_toda(max_n: u32, order: usize) -> CheckReport {
    let mut report = CheckReport::new("Whittaker Toda equation", alloc::format!("n <= {}, order {}", max_n, order));
    for n in 0..=max_n {
        report.record(alloc::format!("n={}", n), check_toda_eigen(n..=n, order), || {
            alloc::string::String::from("residual series is nonzero")
        });
    }
    report
}

/// The class-one combination of Whittaker series reproduces `chi_n` to the
/// given order, for `n <= max_n`.
pub fn check_class_one(max_n: u32, order: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("class-one combination", alloc::format!("n <= {}, order {}", max_n, order));
    for n in 0..=max_n {
        let ok = class_one_combination(n..=n, order)?;
        report.record(alloc::format!("n={}", n), ok, || alloc::string::String::from("series differs from chi_n"));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_oracles() {
        assert!(check_macdonald(3, 3).unwrap().passed());
        assert!(check_whittaker_toda(3, 8).passed());
        assert!(check_class_one(2, 8).unwrap().passed());
    }
}
