//! Tangent classes of a hypersurface, `χ(𝒪_X(m))`, and Hirzebruch–Riemann–Roch.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;

use crate::charcls::{chern_to_ch, todd_of_total, BundleClass};
use crate::cohring::{exp_h, GradedClass, HypersurfaceModel};
use crate::exactnum::{binomial_poly, MultiPoly, Rational};

/// `c_1(X), …, c_n(X)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentData {
    pub model: HypersurfaceModel,
    pub chern: Vec<GradedClass>,
}

impl TangentData {
    /// Coefficient of `H^i` in `c_i(X)`; `i = 0` gives 1.
    pub fn coeff(&self, i: usize) -> MultiPoly {
        if i == 0 {
            MultiPoly::one()
        } else {
            self.chern[i - 1].coeff(i).clone()
        }
    }

    pub fn total(&self) -> GradedClass {
        GradedClass::from_coeffs(self.model, (0..=self.model.dim()).map(|i| self.coeff(i)))
    }

    /// Coefficient of `H` in `K_X = -c_1(X)`, i.e. `d - n - 2`.
    pub fn canonical_coeff(&self) -> MultiPoly {
        -self.coeff(1)
    }
}

fn int_binomial(n: usize, k: usize) -> Rational {
    Rational::from_integer(num_integer::binomial(BigInt::from(n), BigInt::from(k)))
}

/// `c_i(X) = Σ_{k≤i} (-1)^{i-k} C(n+2, k) d^{i-k} H^i`.
pub fn tangent_chern(model: HypersurfaceModel) -> TangentData {
    let n = model.dim();
    let d = model.degree();
    let chern = (1..=n)
        .map(|i| {
            let c: MultiPoly = (0..=i)
                .map(|k| {
                    let t = d.pow((i - k) as u32).scale(&int_binomial(n + 2, k));
                    if (i - k) % 2 == 1 {
                        -t
                    } else {
                        t
                    }
                })
                .sum();
            GradedClass::monomial(model, c, i)
        })
        .collect();
    TangentData { model, chern }
}

/// Same classes from `c_i = C(n+2, i) H^i - d H c_{i-1}`.
pub fn tangent_chern_recursive(model: HypersurfaceModel) -> TangentData {
    let n = model.dim();
    let d = model.degree();
    let mut prev = MultiPoly::one();
    let mut chern = Vec::with_capacity(n);
    for i in 1..=n {
        let c = MultiPoly::constant(int_binomial(n + 2, i)) - &d * &prev;
        chern.push(GradedClass::monomial(model, c.clone(), i));
        prev = c;
    }
    TangentData { model, chern }
}

/// `χ(𝒪_X(s)) = C(s+n+1, n+1) - C(s-d+n+1, n+1)`.
pub fn chi_structure_twist(model: HypersurfaceModel, s: &MultiPoly) -> MultiPoly {
    let n = model.dim();
    let shift = MultiPoly::int(n as i64 + 1);
    let top = s + &shift;
    let bottom = &top - &model.degree();
    binomial_poly(&top, n as u32 + 1) - binomial_poly(&bottom, n as u32 + 1)
}

/// `Td(T_X)`, memoized per dimension.
pub fn todd_of_x(model: HypersurfaceModel) -> GradedClass {
    static CACHE: OnceLock<Mutex<HashMap<usize, GradedClass>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(td) = cache.lock().unwrap().get(&model.dim()) {
        return td.clone();
    }
    let td = todd_of_total(&tangent_chern(model).total());
    cache.lock().unwrap().insert(model.dim(), td.clone());
    td
}

/// `∫ ch · e^{sH} · td`, for any Chern character and Todd class.
pub fn hrr_with_todd(ch: &GradedClass, s: &MultiPoly, td: &GradedClass) -> MultiPoly {
    &hrr_density(ch, s, td) * &ch.model().degree()
}

/// Coefficient of `H^n` in `ch · e^{sH} · td`. With generic Chern symbols
/// this is the Riemann–Roch integrand with `∫ H^n` left out.
pub fn hrr_density(ch: &GradedClass, s: &MultiPoly, td: &GradedClass) -> MultiPoly {
    let twisted = if s.is_zero() {
        ch.clone()
    } else {
        ch * &exp_h(s, ch.model())
    };
    let n = ch.model().dim();
    let mut top = MultiPoly::zero();
    for i in 0..=n {
        let (x, y) = (twisted.coeff(i), td.coeff(n - i));
        if !x.is_zero() && !y.is_zero() {
            top += x * y;
        }
    }
    top
}

/// `χ(b(s)) = ∫_X ch(b) e^{sH} Td(X)`.
pub fn hrr_chi(model: HypersurfaceModel, b: &BundleClass, s: &MultiPoly) -> MultiPoly {
    hrr_with_todd(&chern_to_ch(b), s, &todd_of_x(model))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{parse_poly, rat};

    fn model(n: usize) -> HypersurfaceModel {
        HypersurfaceModel::new(n).unwrap()
    }

    fn p(s: &str) -> MultiPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn tangent_examples() {
        for n in 1..=8 {
            let t = tangent_chern(model(n));
            assert_eq!(t.coeff(1), p(&format!("{}-d", n + 2)));
            assert_eq!(t, tangent_chern_recursive(model(n)));
        }
        assert_eq!(tangent_chern(model(6)).coeff(2), p("28-8d+d^2"));
    }

    #[test]
    fn structure_sheaf_examples() {
        let m6 = model(6);
        assert_eq!(chi_structure_twist(m6, &MultiPoly::zero()).eval_d(3).unwrap(), rat(1, 1));
        assert_eq!(chi_structure_twist(m6, &p("3")).eval_d(3).unwrap(), rat(119, 1));
        let m8 = model(8);
        let expected = binomial_poly(&p("m+9"), 9) - binomial_poly(&p("m-d+9"), 9);
        assert_eq!(chi_structure_twist(m8, &p("m")), expected);
    }

    #[test]
    fn hrr_of_structure_sheaf() {
        for n in [2, 3, 6] {
            let m = model(n);
            let o = BundleClass::trivial(m, 1);
            assert_eq!(hrr_chi(m, &o, &p("m")), chi_structure_twist(m, &p("m")));
        }
    }

    #[test]
    fn hrr_of_zero_bundle() {
        let m = model(4);
        assert!(hrr_chi(m, &BundleClass::zero(m), &p("m")).is_zero());
    }

    #[test]
    fn canonical_class() {
        assert_eq!(tangent_chern(model(6)).canonical_coeff(), p("d-8"));
    }
}
