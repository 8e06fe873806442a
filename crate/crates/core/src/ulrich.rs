//! Chern classes forced on a rank-`r` Ulrich bundle by `χ(E(m)) = r d C(m+n, n)`.
//!
//! The unknowns `e_1, …, e_n` (with `c_i(E) = e_i H^i`) are solved from the
//! coefficients of `m^{n-1}, …, m^0`; each `e_j` first appears in the
//! `m^{n-j}` coefficient, linearly, so the system is triangular.
//!
//! The solution is formal: when `r < n` the `e_i` with `i > r` need not vanish.
//! [`UlrichClassSolution::bundle`] drops them, which is what exterior powers
//! and the geometric bundle see.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::charcls::{ch_from_total, exterior_power, BundleClass};
use crate::cohring::{GradedClass, HypersurfaceModel};
use crate::error::{Error, Result};
use crate::exactnum::univariate::div_exact;
use crate::exactnum::{binomial_poly, parse_poly, MultiPoly, Rational, Symbol};
use crate::golden::tables::TOP_CHERN;
use crate::hygeo::{chi_structure_twist, hrr_chi, hrr_with_todd, tangent_chern, todd_of_x};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UlrichClassSolution {
    n: usize,
    r: usize,
    e: Vec<MultiPoly>,
}

impl UlrichClassSolution {
    /// Wraps externally supplied classes, e.g. for perturbation experiments.
    pub fn from_classes(n: usize, r: usize, e: Vec<MultiPoly>) -> Result<UlrichClassSolution> {
        check_range(n, r)?;
        if e.len() != n {
            return Err(Error::Unsupported(format!("expected {n} classes, got {}", e.len())));
        }
        Ok(UlrichClassSolution { n, r, e })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn model(&self) -> HypersurfaceModel {
        HypersurfaceModel::new(self.n).expect("n >= 3")
    }

    /// `e_i` for `1 <= i <= n`.
    pub fn e(&self, i: usize) -> &MultiPoly {
        &self.e[i - 1]
    }

    pub fn classes(&self) -> &[MultiPoly] {
        &self.e
    }

    /// `1 + Σ e_i H^i` with every formal class kept.
    pub fn formal_total(&self) -> GradedClass {
        GradedClass::from_coeffs(
            self.model(),
            std::iter::once(MultiPoly::one()).chain(self.e.iter().cloned()),
        )
    }

    /// The rank-`r` bundle class: `e_i` for `i <= r` only.
    pub fn bundle(&self) -> BundleClass {
        BundleClass::truncated(self.r, self.formal_total()).expect("c_0 = 1")
    }

    /// `χ(E(s))` from the formal classes.
    pub fn chi_formal(&self, s: &MultiPoly) -> MultiPoly {
        let ch = ch_from_total(&MultiPoly::int(self.r as i64), &self.formal_total());
        hrr_with_todd(&ch, s, &todd_of_x(self.model()))
    }

    /// Degree `i` with `e_i` non-integral at some integer `d` in `[lo, hi]`.
    pub fn non_integral_at(&self, lo: i64, hi: i64) -> Vec<(usize, i64)> {
        let mut out = Vec::new();
        for (i, e) in self.e.iter().enumerate() {
            for d in lo..=hi {
                if !e.eval_d(d).expect("univariate in d").is_integer() {
                    out.push((i + 1, d));
                }
            }
        }
        out
    }
}

fn check_range(n: usize, r: usize) -> Result<()> {
    if !(3..=8).contains(&n) || !(1..=7).contains(&r) {
        return Err(Error::Unsupported(format!(
            "Ulrich classes need 3 <= n <= 8 and 1 <= r <= 7, got n={n}, r={r}"
        )));
    }
    Ok(())
}

/// `r d C(s+n, n)`.
pub fn ulrich_hilbert(n: usize, r: usize, s: &MultiPoly) -> MultiPoly {
    let d = MultiPoly::var(Symbol::D);
    &binomial_poly(&(s + &MultiPoly::int(n as i64)), n as u32) * &d.scale_int(r as i64)
}

/// Solves the triangular system directly.
pub fn solve_ulrich_chern_uncached(n: usize, r: usize) -> Result<UlrichClassSolution> {
    check_range(n, r)?;
    let model = HypersurfaceModel::new(n)?;
    let m = MultiPoly::var(Symbol::M);
    let unknown = GradedClass::from_coeffs(
        model,
        std::iter::once(MultiPoly::one()).chain((1..=n).map(|i| MultiPoly::var(Symbol::e(i)))),
    );
    let ch = ch_from_total(&MultiPoly::int(r as i64), &unknown);
    let chi = hrr_with_todd(&ch, &m, &todd_of_x(model));
    let target = ulrich_hilbert(n, r, &m);

    let mut solved: Vec<MultiPoly> = Vec::with_capacity(n);
    for j in 1..=n {
        let known = |s: Symbol| match s {
            Symbol::E(i) if (i as usize) < j => Some(solved[i as usize - 1].clone()),
            _ => None,
        };
        let coeff = chi.coeff_of(Symbol::M, (n - j) as u16).substitute(known);
        let ej = Symbol::e(j);
        if coeff.degree_in(ej).unwrap_or(0) > 1 {
            return Err(Error::Inconsistent(format!("e{j} enters non-linearly")));
        }
        let lin = coeff.coeff_of(ej, 1);
        let rest = coeff.coeff_of(ej, 0);
        if lin.is_zero() {
            return Err(Error::Inconsistent(format!("e{j} does not appear at m^{}", n - j)));
        }
        let rhs = target.coeff_of(Symbol::M, (n - j) as u16) - rest;
        solved.push(div_exact(&rhs, &lin, Symbol::D)?);
    }

    let sol = UlrichClassSolution { n, r, e: solved };
    let check = sol.chi_formal(&m);
    if check != target {
        return Err(Error::Inconsistent(format!(
            "solved classes leave χ(E(m)) - r d C(m+n,n) = {}",
            check - target
        )));
    }
    Ok(sol)
}

/// Memoized [`solve_ulrich_chern_uncached`]; concurrent writers store identical values.
pub fn solve_ulrich_chern(n: usize, r: usize) -> Result<Arc<UlrichClassSolution>> {
    type Cache = Mutex<HashMap<(usize, usize), Arc<UlrichClassSolution>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(s) = cache.lock().unwrap().get(&(n, r)) {
        return Ok(Arc::clone(s));
    }
    let s = Arc::new(solve_ulrich_chern_uncached(n, r)?);
    cache.lock().unwrap().insert((n, r), Arc::clone(&s));
    Ok(s)
}

/// Both sides of the top Chern class identity, integrated over `X`:
/// `(d e_n, L r (d - χ(𝒪_X)) + d P(e, c(X)))`.
pub fn top_chern_sides(n: usize, sol: &UlrichClassSolution) -> Result<(MultiPoly, MultiPoly)> {
    if !(3..=7).contains(&n) {
        return Err(Error::Unsupported(format!("top Chern identity needs 3 <= n <= 7, got {n}")));
    }
    let row = TOP_CHERN.iter().find(|row| row.n == n).expect("one row per n");
    let text = row.text.replace('r', &format!("({})", sol.r()));
    let formula = parse_poly(&text)?;
    let model = HypersurfaceModel::new(n)?;
    let tangent = tangent_chern(model);
    let chi_o = chi_structure_twist(model, &MultiPoly::zero());
    let d = model.degree();

    // the point-class part carries no Chern symbols, the rest is a degree-n class
    let number = formula.weighted_part(0);
    let class = formula.weighted_part(n as u32);
    if &number + &class != formula {
        return Err(Error::Inconsistent(format!("{} is not homogeneous", row.id)));
    }
    let subst = |s: Symbol| match s {
        Symbol::C(i) => Some(tangent.coeff(i as usize)),
        Symbol::E(i) if (i as usize) <= sol.n() => Some(sol.e(i as usize).clone()),
        Symbol::E(_) => Some(MultiPoly::zero()),
        Symbol::M => Some(chi_o.clone()),
        _ => None,
    };
    let rhs = number.substitute(subst) + &class.substitute(subst) * &d;
    let lhs = sol.e(n) * &d;
    Ok((lhs, rhs))
}

/// Whether the solution satisfies the dimension-`n` top Chern identity.
/// The solution must have been computed at dimension `n` or above.
pub fn top_chern_identity_check(n: usize, sol: &UlrichClassSolution) -> Result<bool> {
    if sol.n() < n {
        return Err(Error::Unsupported(format!("solution has only {} classes", sol.n())));
    }
    let restricted = UlrichClassSolution {
        n,
        r: sol.r(),
        e: sol.e[..n].to_vec(),
    };
    let (lhs, rhs) = top_chern_sides(n, &restricted)?;
    Ok(lhs == rhs)
}

/// `χ((Λ^p E)(s))` for the rank-`r` Ulrich class on `X_n`.
pub fn chi_exterior_ulrich(n: usize, r: usize, p: usize, shift: &MultiPoly) -> Result<MultiPoly> {
    let sol = solve_ulrich_chern(n, r)?;
    chi_exterior_of(&sol, p, shift)
}

/// Same as [`chi_exterior_ulrich`] for a given solution.
pub fn chi_exterior_of(sol: &UlrichClassSolution, p: usize, shift: &MultiPoly) -> Result<MultiPoly> {
    if p > sol.r() {
        return Err(Error::Unsupported(format!("Λ^{p} of a rank-{} bundle", sol.r())));
    }
    let wedge = exterior_power(&sol.bundle(), p)?;
    Ok(hrr_chi(sol.model(), &wedge, shift))
}

/// `u = r (d-1) / 2`, the twist with `det E = 𝒪_X(u)`.
pub fn half_det_twist(r: usize) -> MultiPoly {
    (MultiPoly::var(Symbol::D) - MultiPoly::one()).scale(&Rational::new(
        (r as i64).into(),
        2.into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn p(s: &str) -> MultiPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn first_two_classes() {
        let s = solve_ulrich_chern(6, 4).unwrap();
        assert_eq!(s.e(1), &p("2d-2"));
        assert_eq!(s.e(2), &p("(d-1)(10d-8)/6"));
        assert_eq!(s.e(2).eval_d(5).unwrap(), rat(28, 1));
        assert_eq!(s.e(3) * &p("d"), p("d(d-1)^2(2d-1)/3"));
    }

    #[test]
    fn rank_six_fifth_class() {
        let s = solve_ulrich_chern(8, 6).unwrap();
        assert_eq!(s.e(5), &p("(d-1)^2(2d-1)(2d-3)(3d-1)/40"));
    }

    #[test]
    fn defining_identity_holds() {
        let s = solve_ulrich_chern(5, 3).unwrap();
        let m = p("m");
        assert_eq!(s.chi_formal(&m), ulrich_hilbert(5, 3, &m));
    }

    #[test]
    fn out_of_range() {
        assert!(solve_ulrich_chern(2, 3).is_err());
        assert!(solve_ulrich_chern(6, 8).is_err());
        let s = solve_ulrich_chern(8, 4).unwrap();
        assert!(top_chern_identity_check(8, &s).is_err());
    }

    #[test]
    fn top_chern_small_cases() {
        let s = solve_ulrich_chern(3, 4).unwrap();
        assert!(top_chern_identity_check(3, &s).unwrap());
        let s = solve_ulrich_chern(5, 5).unwrap();
        assert!(top_chern_identity_check(5, &s).unwrap());
    }

    #[test]
    fn wedge_zero_is_structure_sheaf() {
        let s = p("m-2d+2");
        assert_eq!(
            chi_exterior_ulrich(6, 4, 0, &s).unwrap(),
            chi_structure_twist(HypersurfaceModel::new(6).unwrap(), &s)
        );
    }
}
