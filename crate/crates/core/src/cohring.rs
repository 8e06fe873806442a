//! The even-degree cohomology ring of a smooth degree-`d` hypersurface
//! `X ⊂ ℙ^{n+1}` generated by the hyperplane class `H`.
//!
//! A class is stored as its coefficients `(h_0, …, h_n)` on `1, H, …, H^n`.
//! Products truncate above degree `n` and `∫_X H^n = d`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactnum::{MultiPoly, Rational, Symbol};

/// Dimension data for `X`. The degree is always the formal symbol `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HypersurfaceModel {
    n: usize,
}

impl HypersurfaceModel {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Unsupported("hypersurface dimension must be >= 1".into()));
        }
        Ok(HypersurfaceModel { n })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// The degree symbol `d`.
    pub fn degree(&self) -> MultiPoly {
        MultiPoly::var(Symbol::D)
    }
}

/// `Σ h_i H^i`, truncated at `H^n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GradedClass {
    model: HypersurfaceModel,
    coeffs: Vec<MultiPoly>,
}

impl GradedClass {
    pub fn zero(model: HypersurfaceModel) -> Self {
        GradedClass {
            model,
            coeffs: vec![MultiPoly::zero(); model.n + 1],
        }
    }

    pub fn one(model: HypersurfaceModel) -> Self {
        GradedClass::scalar(model, MultiPoly::one())
    }

    pub fn scalar(model: HypersurfaceModel, c: MultiPoly) -> Self {
        GradedClass::monomial(model, c, 0)
    }

    /// `c · H^k` (zero when `k > n`).
    pub fn monomial(model: HypersurfaceModel, c: MultiPoly, k: usize) -> Self {
        let mut out = GradedClass::zero(model);
        if k <= model.n {
            out.coeffs[k] = c;
        }
        out
    }

    /// `H^k`.
    pub fn h_power(model: HypersurfaceModel, k: usize) -> Self {
        GradedClass::monomial(model, MultiPoly::one(), k)
    }

    /// Builds a class from leading coefficients; missing ones are zero and
    /// anything past degree `n` is dropped.
    pub fn from_coeffs(model: HypersurfaceModel, coeffs: impl IntoIterator<Item = MultiPoly>) -> Self {
        let mut out = GradedClass::zero(model);
        for (slot, c) in out.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        out
    }

    pub fn model(&self) -> HypersurfaceModel {
        self.model
    }

    pub fn coeff(&self, k: usize) -> &MultiPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<MultiPoly> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(MultiPoly::is_zero)
    }

    /// Degree-`k` homogeneous part as a class.
    pub fn part(&self, k: usize) -> GradedClass {
        GradedClass::monomial(self.model, self.coeffs[k].clone(), k)
    }

    fn check_model(&self, other: &GradedClass) -> Result<()> {
        if self.model != other.model {
            return Err(Error::ModelMismatch {
                left: self.model.n,
                right: other.model.n,
            });
        }
        Ok(())
    }

    /// Truncated product: degree-`k` coefficient is `Σ_{i+j=k} a_i b_j`.
    pub fn cup(&self, other: &GradedClass) -> Result<GradedClass> {
        self.check_model(other)?;
        let n = self.model.n;
        let mut out = GradedClass::zero(self.model);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &GradedClass) -> Result<GradedClass> {
        self.check_model(other)?;
        Ok(GradedClass {
            model: self.model,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &MultiPoly) -> GradedClass {
        GradedClass {
            model: self.model,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn scale_rational(&self, q: &Rational) -> GradedClass {
        GradedClass {
            model: self.model,
            coeffs: self.coeffs.iter().map(|a| a.scale(q)).collect(),
        }
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&MultiPoly) -> MultiPoly) -> GradedClass {
        GradedClass {
            model: self.model,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// `∫_X`: the `H^n` coefficient times `d`.
    pub fn integrate(&self) -> MultiPoly {
        &self.coeffs[self.model.n] * &self.model.degree()
    }

    /// `exp(x) = Σ x^j / j!` for a class with zero degree-0 part.
    pub fn exp_nilpotent(&self) -> GradedClass {
        assert!(self.coeffs[0].is_zero(), "exp needs a nilpotent class");
        let mut out = GradedClass::one(self.model);
        let mut term = GradedClass::one(self.model);
        for j in 1..=self.model.n {
            term = (&term * self).scale_rational(&Rational::new(BigInt::one(), BigInt::from(j)));
            if term.is_zero() {
                break;
            }
            out = &out + &term;
        }
        out
    }

    /// Replaces symbols inside every coefficient.
    pub fn substitute<F>(&self, map: F) -> GradedClass
    where
        F: Fn(Symbol) -> Option<MultiPoly>,
    {
        self.map_coeffs(|c| c.substitute(&map))
    }
}

/// `e^{tH} = Σ_{i≤n} t^i H^i / i!`.
pub fn exp_h(t_coeff: &MultiPoly, model: HypersurfaceModel) -> GradedClass {
    GradedClass::monomial(model, t_coeff.clone(), 1).exp_nilpotent()
}

/// Free-function form of [`GradedClass::cup`].
pub fn cup(a: &GradedClass, b: &GradedClass) -> Result<GradedClass> {
    a.cup(b)
}

/// Free-function form of [`GradedClass::integrate`].
pub fn integrate(a: &GradedClass) -> MultiPoly {
    a.integrate()
}

impl fmt::Debug for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedClass[n={}]({self})", self.model.n)
    }
}

impl fmt::Display for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*H")?,
                _ => write!(f, "({c})*H^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

// Operator forms panic on mismatched models; use the `Result` methods when
// the models are not known to agree.

impl Mul for &GradedClass {
    type Output = GradedClass;
    fn mul(self, rhs: &GradedClass) -> GradedClass {
        self.cup(rhs).expect("cup of classes on different models")
    }
}

impl Add for &GradedClass {
    type Output = GradedClass;
    fn add(self, rhs: &GradedClass) -> GradedClass {
        self.try_add(rhs).expect("sum of classes on different models")
    }
}

impl Sub for &GradedClass {
    type Output = GradedClass;
    fn sub(self, rhs: &GradedClass) -> GradedClass {
        self + &(-rhs)
    }
}

impl Neg for &GradedClass {
    type Output = GradedClass;
    fn neg(self) -> GradedClass {
        self.map_coeffs(|c| -c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::parse_poly;

    fn model(n: usize) -> HypersurfaceModel {
        HypersurfaceModel::new(n).unwrap()
    }

    fn class(n: usize, coeffs: &[&str]) -> GradedClass {
        GradedClass::from_coeffs(model(n), coeffs.iter().map(|s| parse_poly(s).unwrap()))
    }

    #[test]
    fn cup_examples() {
        let a = class(2, &["1", "1"]);
        let b = class(2, &["1", "-1"]);
        assert_eq!(a.cup(&b).unwrap(), class(2, &["1", "0", "-1"]));

        let h3 = GradedClass::h_power(model(6), 3);
        let h4 = GradedClass::h_power(model(6), 4);
        assert!(h3.cup(&h4).unwrap().is_zero());

        let x = GradedClass::monomial(model(6), MultiPoly::int(3), 1);
        let y = GradedClass::monomial(model(6), MultiPoly::int(4), 2);
        assert_eq!(x.cup(&y).unwrap(), GradedClass::monomial(model(6), MultiPoly::int(12), 3));
    }

    #[test]
    fn cup_rejects_mismatched_models() {
        let a = GradedClass::one(model(2));
        let b = GradedClass::one(model(3));
        assert_eq!(a.cup(&b), Err(Error::ModelMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn integrate_examples() {
        let m6 = model(6);
        assert_eq!(GradedClass::h_power(m6, 6).integrate(), MultiPoly::var(Symbol::D));
        assert!(GradedClass::one(m6).integrate().is_zero());
    }

    #[test]
    fn exp_h_examples() {
        assert_eq!(exp_h(&MultiPoly::zero(), model(4)), GradedClass::one(model(4)));
        assert_eq!(exp_h(&parse_poly("m").unwrap(), model(2)), class(2, &["1", "m", "m^2/2"]));
        let e = exp_h(&parse_poly("m-3d+3").unwrap(), model(8));
        assert_eq!(e.coeff(1), &parse_poly("m-3d+3").unwrap());
    }

    #[test]
    fn exp_h_is_a_homomorphism() {
        let m = model(5);
        let s = parse_poly("m-2d").unwrap();
        let t = parse_poly("t+1/3").unwrap();
        assert_eq!(exp_h(&(&s + &t), m), &exp_h(&s, m) * &exp_h(&t, m));
    }
}
