//! Macdonald polynomials `P_lambda(q, t)` from the triangular eigenproblem of
//! the first Macdonald operator, and their `t = 0` and `t -> infinity`
//! degenerations.
//!
//! Nothing here uses the raising operators, so agreement with
//! [`crate::characters`] is an independent check.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::{Coeff, LaurentPoly, QPoly, QtRational, SymPoly};
use crate::qdiff::apply_macdonald_qt;
use crate::symfun::{partitions_bounded, Partition};

#[derive(Clone, Debug, PartialEq)]
pub struct MacdonaldPoly {
    pub partition: Partition,
    pub nvars: usize,
    /// Monomial expansion; monic on `m_lambda`.
    pub poly: SymPoly<QtRational>,
}

impl MacdonaldPoly {
    pub fn to_laurent(&self) -> LaurentPoly<QtRational> {
        self.poly.to_laurent()
    }
}

/// `sum_i q^{mu_i} t^{N - i}`.
pub fn first_eigenvalue(mu: &[i32]) -> QtRational {
    let n = mu.len();
    let t = QtRational::t();
    let mut acc = QtRational::zero();
    for (i, &m) in mu.iter().enumerate() {
        acc.add_assign_ref(&QtRational::q_power(m as i64).mul_ref(&t.pow((n - 1 - i) as u32)));
    }
    acc
}

fn apply_sym(alpha: usize, f: &SymPoly<QtRational>) -> Result<SymPoly<QtRational>> {
    SymPoly::from_laurent(&apply_macdonald_qt(alpha, &f.to_laurent())?)
}

/// Solves `M_1 P = E_lambda P` with `P = m_lambda + lower terms`.
pub fn macdonald_poly(lambda: &Partition, nvars: usize) -> Result<MacdonaldPoly> {
    if lambda.len() > nvars {
        return Err(Error::InvalidPartition(alloc::format!("{} has more than {} parts", lambda, nvars)));
    }
    let top = lambda.padded(nvars);
    let e_top = first_eigenvalue(&top);
    // Dominance-lower partitions, lex-largest first; every mu below nu in
    // dominance comes after nu.
    let mut lower: Vec<Vec<i32>> =
        partitions_bounded(lambda.size(), nvars, lambda.parts().first().copied().unwrap_or(0))
            .into_iter()
            .map(|p| Partition::new(p).expect("generated partitions are valid"))
            .filter(|p| lambda.dominates(p))
            .map(|p| p.padded(nvars))
            .collect();
    lower.sort_unstable_by(|a, b| b.cmp(a));

    let mut images: BTreeMap<Vec<i32>, SymPoly<QtRational>> = BTreeMap::new();
    let mut coeffs: BTreeMap<Vec<i32>, QtRational> = BTreeMap::new();
    coeffs.insert(top.clone(), QtRational::one());
    for mu in &lower {
        images.insert(mu.clone(), apply_sym(1, &SymPoly::monomial(mu.clone(), QtRational::one()))?);
        if *mu == top {
            continue;
        }
        let e_mu = first_eigenvalue(mu);
        let gap = e_top.sub_ref(&e_mu);
        if gap.is_zero() {
            return Err(Error::DegenerateEigenvalue(lambda.to_padded_text(nvars), Partition::format_parts(mu)));
        }
        let mut rhs = QtRational::zero();
        for (nu, c) in &coeffs {
            rhs.add_assign_ref(&c.mul_ref(&images[nu].coeff(mu)));
        }
        coeffs.insert(mu.clone(), rhs.div_exact(&gap).expect("nonzero divisor in a field"));
    }

    let mut poly = SymPoly::zero(nvars);
    for (mu, c) in coeffs {
        poly.add_term(mu, &c);
    }
    let image = apply_sym(1, &poly)?;
    if image != poly.scale(&e_top) {
        return Err(Error::NonzeroRemainder);
    }
    Ok(MacdonaldPoly { partition: lambda.clone(), nvars, poly })
}

/// `P(q, 0)` followed by `q -> q^-1`.
pub fn qwhittaker_specialize(p: &MacdonaldPoly) -> Result<SymPoly<QPoly>> {
    let mut out = SymPoly::zero(p.nvars);
    for (k, c) in p.poly.terms() {
        let at_zero = c.at_t_zero().ok_or(Error::PoleAtZero)?;
        let qpoly = at_zero.to_qpoly().ok_or(Error::NotLaurentInQ)?;
        out.add_term(k.clone(), &qpoly.invert_variable());
    }
    Ok(out)
}

/// `lim_{t -> infinity} t^{-a(N-a)} M_a^{q,t} f` for `f` with coefficients
/// in `q` only.
pub fn degenerate_operator(alpha: usize, f: &SymPoly<QPoly>) -> Result<SymPoly<QPoly>> {
    let nv = f.nvars();
    let lifted = f.map_coeffs(QtRational::from_qpoly);
    let image = apply_sym(alpha, &lifted)?;
    let mut out = SymPoly::zero(nv);
    for (k, c) in image.terms() {
        let lim = c.scaled_limit_t_infinity(alpha * (nv - alpha)).ok_or(Error::Divergent)?;
        out.add_term(k.clone(), &lim.to_qpoly().ok_or(Error::NotLaurentInQ)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{graded_character, NVector};

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn single_class_partitions() {
        let p = macdonald_poly(&part(&[1]), 3).unwrap();
        assert_eq!(p.poly, SymPoly::elementary(1, 3));
        let p = macdonald_poly(&part(&[1, 1]), 3).unwrap();
        assert_eq!(p.poly, SymPoly::elementary(2, 3));
    }

    #[test]
    fn two_row_in_two_variables() {
        // P_(2) = m_(2) + (1 + q)(1 - t) / (1 - q t) m_(1,1)
        let p = macdonald_poly(&part(&[2]), 2).unwrap();
        let (q, t) = (QtRational::q(), QtRational::t());
        let one = QtRational::one();
        let c = one.add_ref(&q).mul_ref(&one.sub_ref(&t)).div_exact(&one.sub_ref(&q.mul_ref(&t))).unwrap();
        assert_eq!(p.poly.coeff(&[1, 1]), c);
        assert_eq!(p.poly.coeff(&[2, 0]), one);
    }

    #[test]
    fn whittaker_limit_matches_character() {
        let p = macdonald_poly(&part(&[2, 1]), 3).unwrap();
        let w = qwhittaker_specialize(&p).unwrap();
        assert_eq!(w, graded_character(&NVector::level_one(&[1, 1])).unwrap().chi);
    }

    #[test]
    fn degenerate_operator_eigenvalue() {
        let chi = graded_character(&NVector::level_one(&[1, 1])).unwrap().chi;
        let image = degenerate_operator(1, &chi).unwrap();
        assert_eq!(image, chi.scale(&QPoly::power(2)));
    }
}
