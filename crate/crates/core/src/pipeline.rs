//! The four rank/dimension cases: `χ(𝒪_Z)` from the resolution against
//! `χ(𝒪_Z)` from the intersection numbers, and the certificate that their
//! difference has no root at an admissible degree.

use std::sync::Arc;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::degloc::{DegeneracyModel, IntersectionTable};
use crate::error::{Error, Result};
use crate::exactnum::{
    divide_by_stated_factors, integer_roots, integer_roots_at_least, parse_poly, MultiPoly, Rational,
};
use crate::golden::STATED_FACTORS;
use crate::ulrich::{solve_ulrich_chern, UlrichClassSolution};

/// `(n, r)` in report order.
pub const CASES: [(usize, usize); 4] = [(6, 4), (6, 5), (8, 6), (8, 7)];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseReport {
    pub n: usize,
    pub r: usize,
    pub table: IntersectionTable,
    pub chi_from_resolution: MultiPoly,
    pub chi_from_invariants: MultiPoly,
    /// Primitive integer form of the discrepancy, positive leading coefficient.
    pub difference: MultiPoly,
    /// `chi_from_resolution - chi_from_invariants = content * difference`.
    pub content: Rational,
    pub stated_factors: Vec<MultiPoly>,
    /// What is left of `difference` after dividing out the stated factors.
    pub cofactor: MultiPoly,
    /// Every division exact and the cofactor a nonzero constant.
    pub factorization_exact: bool,
    pub roots_ge_3: Vec<i64>,
    /// Integer roots below 3, informational.
    pub small_roots: Vec<i64>,
    pub verdict: Verdict,
}

impl CaseReport {
    pub fn id(&self) -> String {
        format!("case.{}.{}", self.n, self.r)
    }

    /// Whether the two values of `χ(𝒪_Z)` differ at the integer degree `d`.
    pub fn differs_at(&self, d: i64) -> bool {
        let a = self.chi_from_resolution.eval_d(d).expect("polynomial in d");
        let b = self.chi_from_invariants.eval_d(d).expect("polynomial in d");
        a != b
    }

    /// Product of the stated factors, as printed.
    pub fn stated_product_text(&self) -> String {
        self.stated_factors
            .iter()
            .map(|f| format!("({f})"))
            .collect::<Vec<_>>()
            .join("*")
    }
}

pub fn stated_factors(n: usize, r: usize) -> Result<Vec<MultiPoly>> {
    let (_, texts) = STATED_FACTORS
        .iter()
        .find(|(case, _)| *case == (n, r))
        .ok_or_else(|| unsupported(n, r))?;
    texts.iter().map(|t| parse_poly(t)).collect()
}

fn unsupported(n: usize, r: usize) -> Error {
    Error::Unsupported(format!(
        "no case (n={n}, r={r}); the cases are (6,4), (6,5), (8,6), (8,7)"
    ))
}

pub fn run_case(n: usize, r: usize) -> Result<CaseReport> {
    if !CASES.contains(&(n, r)) {
        return Err(unsupported(n, r));
    }
    run_case_with_solution(solve_ulrich_chern(n, r)?)
}

/// Same as [`run_case`] but with caller-supplied Ulrich classes.
pub fn run_case_with_solution(solution: Arc<UlrichClassSolution>) -> Result<CaseReport> {
    let (n, r) = (solution.n(), solution.r());
    let factors = stated_factors(n, r)?;
    let model = DegeneracyModel::with_solution(solution)?;
    let table = model.solve_intersections()?;
    let chi_from_resolution = table.chi_oz().clone();
    let chi_from_invariants = table.chi_from_invariants();
    let raw = &chi_from_resolution - &chi_from_invariants;

    let zero = Rational::from_integer(0.into());
    let (content, difference, cofactor, factorization_exact, roots_ge_3, small_roots) = if raw.is_zero() {
        (zero, raw, MultiPoly::zero(), false, Vec::new(), Vec::new())
    } else {
        let (content, prim) = raw.primitive_part()?;
        let (cofactor, exact) = divide_by_stated_factors(&prim, &factors)?;
        let exact = exact && cofactor.as_constant().is_some_and(|c| c != zero);
        let above = integer_roots_at_least(&prim, 3)?;
        let below = integer_roots(&prim)?.into_iter().filter(|&x| x < 3).collect();
        (content, prim, cofactor, exact, above, below)
    };
    let verdict = if factorization_exact && roots_ge_3.is_empty() && !difference.is_zero() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(CaseReport {
        n,
        r,
        table,
        chi_from_resolution,
        chi_from_invariants,
        difference,
        content,
        stated_factors: factors,
        cofactor,
        factorization_exact,
        roots_ge_3,
        small_roots,
        verdict,
    })
}

/// All four cases, in parallel, reported in [`CASES`] order.
pub fn run_all() -> Result<Vec<CaseReport>> {
    CASES.par_iter().map(|&(n, r)| run_case(n, r)).collect()
}

/// Summary line for a full run.
pub fn global_verdict(reports: &[CaseReport]) -> (Verdict, &'static str) {
    if reports.len() == CASES.len() && reports.iter().all(|c| c.verdict == Verdict::Pass) {
        (Verdict::Pass, "computational core verified: all four cases contradict")
    } else {
        (Verdict::Fail, "at least one case does not contradict")
    }
}

/// `C(d+n+1-r, n+1-r) >= r(n+2-r) + 1`, in exact integers.
pub fn check_dgr(n: i64, r: i64, d: i64) -> bool {
    assert!(r <= n + 1 && d >= 1, "need r <= n+1 and d >= 1");
    let k = n + 1 - r;
    let lhs = num_integer::binomial(BigInt::from(d + k), BigInt::from(k));
    lhs >= BigInt::from(r * (n + 2 - r) + 1)
}

/// Smallest `d` in `lo..=hi` from which [`check_dgr`] holds up to `hi`.
pub fn dgr_threshold(n: i64, r: i64, lo: i64, hi: i64) -> Option<i64> {
    let mut first = None;
    for d in (lo..=hi).rev() {
        if check_dgr(n, r, d) {
            first = Some(d);
        } else {
            break;
        }
    }
    first
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dgr_examples() {
        assert!(check_dgr(8, 6, 4));
        assert!(check_dgr(8, 7, 6));
        assert!(!check_dgr(8, 6, 3));
        assert_eq!(dgr_threshold(8, 6, 3, 10), Some(4));
        assert_eq!(dgr_threshold(8, 7, 3, 10), Some(6));
    }

    #[test]
    fn smallest_case() {
        let c = run_case(6, 4).unwrap();
        assert_eq!(c.verdict, Verdict::Pass);
        assert!(c.factorization_exact);
        assert_eq!(c.small_roots, vec![-1, 0, 1]);
        assert!((3..=20).all(|d| c.differs_at(d)));
    }

    #[test]
    fn unknown_case() {
        assert!(run_case(6, 6).is_err());
    }
}
