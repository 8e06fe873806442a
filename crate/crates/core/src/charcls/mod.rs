//! Chern classes of bundles on `X`, the Chern character, the Todd class and
//! the usual functorial operations.

mod lambda;
pub mod symmetric;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cohring::{GradedClass, HypersurfaceModel};
use crate::error::{Error, Result};
use crate::exactnum::{MultiPoly, Rational, Symbol};

pub use lambda::{exterior_power, exterior_power_uncached, lambda_formula, LambdaFormula, MAX_CACHED_RANK};
pub use symmetric::SymmetricContext;

/// Total Chern class of a bundle together with its rank.
///
/// `c_i = 0` above `min(rank, n)`. Rank 0 is the zero bundle: total class 1,
/// Chern character 0.
#[derive(Clone, PartialEq, Eq)]
pub struct BundleClass {
    rank: usize,
    total: GradedClass,
}

impl BundleClass {
    /// Checks `c_0 = 1` and `c_i = 0` for `i > rank`.
    pub fn new(rank: usize, total: GradedClass) -> Result<BundleClass> {
        if !total.coeff(0).is_one() {
            return Err(Error::NotUnipotent);
        }
        if let Some(i) = (rank + 1..total.coeffs().len()).find(|&i| !total.coeff(i).is_zero()) {
            return Err(Error::ChernAboveRank { index: i, rank });
        }
        Ok(BundleClass { rank, total })
    }

    /// Same as [`BundleClass::new`] but silently drops classes above the rank.
    pub fn truncated(rank: usize, total: GradedClass) -> Result<BundleClass> {
        let model = total.model();
        let coeffs = total.into_coeffs().into_iter().take(rank + 1);
        BundleClass::new(rank, GradedClass::from_coeffs(model, coeffs))
    }

    pub fn trivial(model: HypersurfaceModel, rank: usize) -> BundleClass {
        BundleClass {
            rank,
            total: GradedClass::one(model),
        }
    }

    pub fn zero(model: HypersurfaceModel) -> BundleClass {
        BundleClass::trivial(model, 0)
    }

    /// `𝒪_X(a H)`.
    pub fn line(model: HypersurfaceModel, a: MultiPoly) -> BundleClass {
        BundleClass {
            rank: 1,
            total: GradedClass::from_coeffs(model, [MultiPoly::one(), a]),
        }
    }

    /// Rank-`rank` bundle with `c_i = coeffs[i-1] · H^i`.
    pub fn from_coeffs(model: HypersurfaceModel, rank: usize, coeffs: &[MultiPoly]) -> Result<BundleClass> {
        let all = std::iter::once(MultiPoly::one()).chain(coeffs.iter().cloned());
        BundleClass::new(rank, GradedClass::from_coeffs(model, all))
    }

    /// Rank-`rank` bundle whose `c_i` is the bare symbol `family(i) · H^i`.
    pub fn generic(model: HypersurfaceModel, rank: usize, family: fn(usize) -> Symbol) -> BundleClass {
        let top = rank.min(model.dim()).min(crate::exactnum::MAX_INDEX as usize);
        let coeffs: Vec<MultiPoly> = (1..=top).map(|i| MultiPoly::var(family(i))).collect();
        BundleClass::from_coeffs(model, rank, &coeffs).expect("generic classes stop at the rank")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn model(&self) -> HypersurfaceModel {
        self.total.model()
    }

    pub fn total_chern(&self) -> &GradedClass {
        &self.total
    }

    /// Coefficient of `H^i` in `c_i`; zero past `n`.
    pub fn chern(&self, i: usize) -> MultiPoly {
        self.total.coeffs().get(i).cloned().unwrap_or_else(MultiPoly::zero)
    }

    pub fn substitute<F>(&self, map: F) -> BundleClass
    where
        F: Fn(Symbol) -> Option<MultiPoly>,
    {
        BundleClass {
            rank: self.rank,
            total: self.total.substitute(map),
        }
    }
}

impl fmt::Debug for BundleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BundleClass[rank={}]({})", self.rank, self.total)
    }
}

fn inverse_factorial(k: usize) -> Rational {
    let f: BigInt = (1..=k).map(BigInt::from).product();
    Rational::new(BigInt::one(), f)
}

/// Power sums `p_1..p_n` of the roots of a total Chern class, by Newton's
/// identities. Index 0 is left zero.
fn power_sums(total: &GradedClass) -> Vec<MultiPoly> {
    let n = total.model().dim();
    let c = total.coeffs();
    let mut p = vec![MultiPoly::zero(); n + 1];
    for k in 1..=n {
        let mut acc = c[k].scale_int(k as i64);
        if k % 2 == 0 {
            acc = -acc;
        }
        for i in 1..k {
            if c[i].is_zero() || p[k - i].is_zero() {
                continue;
            }
            let t = &c[i] * &p[k - i];
            if i % 2 == 1 {
                acc += t;
            } else {
                acc -= t;
            }
        }
        p[k] = acc;
    }
    p
}

/// `ch = rank + Σ p_k / k!` for any total class, including formal ones whose
/// Chern classes run past the rank.
pub fn ch_from_total(rank: &MultiPoly, total: &GradedClass) -> GradedClass {
    let p = power_sums(total);
    let coeffs = p
        .into_iter()
        .enumerate()
        .map(|(k, pk)| if k == 0 { rank.clone() } else { pk.scale(&inverse_factorial(k)) });
    GradedClass::from_coeffs(total.model(), coeffs)
}

/// Chern character, truncated at degree `n`.
pub fn chern_to_ch(b: &BundleClass) -> GradedClass {
    ch_from_total(&MultiPoly::int(b.rank as i64), &b.total)
}

/// Inverse of [`chern_to_ch`].
pub fn ch_to_chern(ch: &GradedClass, rank: usize) -> Result<BundleClass> {
    let r = MultiPoly::int(rank as i64);
    if ch.coeff(0) != &r {
        return Err(Error::RankMismatch {
            expected: r.to_string(),
            found: ch.coeff(0).to_string(),
        });
    }
    let model = ch.model();
    let n = model.dim();
    let p: Vec<MultiPoly> = (0..=n)
        .map(|k| {
            let f: BigInt = (1..=k).map(BigInt::from).product();
            ch.coeff(k).scale(&Rational::from_integer(f))
        })
        .collect();
    let mut e = vec![MultiPoly::one()];
    for k in 1..=n {
        let mut acc = MultiPoly::zero();
        for i in 1..=k {
            let t = &e[k - i] * &p[i];
            if i % 2 == 1 {
                acc += t;
            } else {
                acc -= t;
            }
        }
        e.push(acc.scale(&Rational::new(BigInt::one(), BigInt::from(k))));
    }
    BundleClass::new(rank, GradedClass::from_coeffs(model, e))
}

/// Coefficients `τ_k` of `log(x / (1 - e^{-x}))`, `k = 1..=n`.
fn todd_log_coeffs(n: usize) -> Vec<Rational> {
    // g = (1 - e^{-x})/x = Σ (-1)^j x^j/(j+1)!, so the series is -log g
    let g1: Vec<Rational> = (0..=n)
        .map(|j| {
            let v = inverse_factorial(j + 1);
            if j == 0 {
                Rational::zero()
            } else if j % 2 == 1 {
                -v
            } else {
                v
            }
        })
        .collect();
    let mul = |a: &[Rational], b: &[Rational]| {
        let mut out = vec![Rational::zero(); n + 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b[..=n - i].iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    };
    let mut log = vec![Rational::zero(); n + 1];
    let mut pow = g1.clone();
    for i in 1..=n {
        let w = Rational::new(BigInt::one(), BigInt::from(i));
        for (slot, v) in log.iter_mut().zip(&pow) {
            if i % 2 == 1 {
                *slot += v * &w;
            } else {
                *slot -= v * &w;
            }
        }
        pow = mul(&pow, &g1);
    }
    log.into_iter().map(|v| -v).collect()
}

/// Todd class from the pieces `c_1, …, c_n` of a total Chern class:
/// `Td = exp(Σ τ_k p_k)` with `p_k` the root power sums.
pub fn todd(model: HypersurfaceModel, c: &[GradedClass]) -> Result<GradedClass> {
    let mut total = GradedClass::one(model);
    for piece in c {
        total = total.try_add(piece)?;
    }
    Ok(todd_of_total(&total))
}

/// Todd class of a total Chern class `1 + c_1 + …`.
pub fn todd_of_total(total: &GradedClass) -> GradedClass {
    let n = total.model().dim();
    let tau = todd_log_coeffs(n);
    let p = power_sums(total);
    let log = GradedClass::from_coeffs(
        total.model(),
        (0..=n).map(|k| if k == 0 { MultiPoly::zero() } else { p[k].scale(&tau[k]) }),
    );
    log.exp_nilpotent()
}

/// `c_i(b^*) = (-1)^i c_i(b)`.
pub fn dual(b: &BundleClass) -> BundleClass {
    let coeffs = b
        .total
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() });
    BundleClass {
        rank: b.rank,
        total: GradedClass::from_coeffs(b.model(), coeffs),
    }
}

/// `b ⊗ 𝒪(sH)`: `c_k = Σ_i C(r-i, k-i) c_i s^{k-i}`.
pub fn twist(b: &BundleClass, s: &MultiPoly) -> BundleClass {
    let model = b.model();
    let n = model.dim();
    let r = b.rank;
    let mut s_pow = vec![MultiPoly::one()];
    for k in 1..=n {
        s_pow.push(&s_pow[k - 1] * s);
    }
    let coeffs = (0..=n).map(|k| {
        let mut acc = MultiPoly::zero();
        for i in 0..=k.min(r) {
            let c = b.chern(i);
            if c.is_zero() || k - i > r - i {
                continue;
            }
            let binom = num_integer::binomial(BigInt::from(r - i), BigInt::from(k - i));
            acc += (&c * &s_pow[k - i]).scale(&Rational::from_integer(binom));
        }
        acc
    });
    BundleClass {
        rank: r,
        total: GradedClass::from_coeffs(model, coeffs),
    }
}

/// Whitney sum.
pub fn direct_sum(a: &BundleClass, b: &BundleClass) -> Result<BundleClass> {
    Ok(BundleClass {
        rank: a.rank + b.rank,
        total: a.total.cup(&b.total)?,
    })
}

/// Tensor product via `ch(a ⊗ b) = ch(a) · ch(b)`.
pub fn tensor(a: &BundleClass, b: &BundleClass) -> Result<BundleClass> {
    let ch = chern_to_ch(a).cup(&chern_to_ch(b))?;
    ch_to_chern(&ch, a.rank * b.rank)
}

/// `det b = Λ^{rank} b`, a line bundle with `c_1 = c_1(b)`.
pub fn determinant(b: &BundleClass) -> BundleClass {
    BundleClass::line(b.model(), b.chern(1))
}
