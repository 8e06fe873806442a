//! Exterior powers. The generic formula for `c_k(Λ^p F)` in terms of
//! `c_1(F), …, c_r(F)` is derived once per `(rank, p, truncation)` and
//! memoized; specializing to a bundle is a substitution.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

use super::symmetric::{ElementaryTerm, SymmetricContext};
use super::BundleClass;
use crate::cohring::GradedClass;
use crate::error::{Error, Result};
use crate::exactnum::{Monomial, MultiPoly, Rational, Symbol, MAX_INDEX};

/// Largest rank served from the formula cache.
pub const MAX_CACHED_RANK: usize = 7;

/// `c_k(Λ^p F)` for `k = 0..=truncation`, each a sum of products of `c_i(F)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaFormula {
    rank: usize,
    power: usize,
    classes: Vec<Vec<ElementaryTerm>>,
}

impl LambdaFormula {
    /// Derives the formula from scratch in a ring of `rank` formal roots.
    pub fn derive(rank: usize, power: usize, truncation: usize) -> LambdaFormula {
        if power == 0 || power > rank {
            let mut classes = vec![Vec::new(); truncation + 1];
            classes[0] = vec![(vec![0; rank], 1)];
            return LambdaFormula { rank, power, classes };
        }
        let mut ctx = SymmetricContext::new(rank, truncation);
        let sigma = ctx.elementary_of_root_sums(power);
        let classes = sigma.iter().map(|s| ctx.express_in_elementary(s)).collect();
        LambdaFormula { rank, power, classes }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn power(&self) -> usize {
        self.power
    }

    pub fn truncation(&self) -> usize {
        self.classes.len() - 1
    }

    /// Rank of `Λ^p F`: `C(rank, p)`.
    pub fn output_rank(&self) -> usize {
        if self.power > self.rank {
            return 0;
        }
        let r: BigInt = num_integer::binomial(BigInt::from(self.rank), BigInt::from(self.power));
        r.try_into().expect("rank fits usize")
    }

    /// Terms of `c_k(Λ^p F)` as exponent vectors over `c_1..c_r`.
    pub fn terms(&self, k: usize) -> &[ElementaryTerm] {
        &self.classes[k]
    }

    /// `c_k(Λ^p F)` as a polynomial in the symbols `c1..c8`.
    pub fn chern_poly(&self, k: usize) -> Result<MultiPoly> {
        self.chern_poly_in(k, Symbol::c)
    }

    /// Same as [`LambdaFormula::chern_poly`] with another symbol family.
    pub fn chern_poly_in(&self, k: usize, family: fn(usize) -> Symbol) -> Result<MultiPoly> {
        if self.rank > MAX_INDEX as usize {
            return Err(Error::UnsupportedRank(self.rank));
        }
        if self.output_rank() == 0 {
            return Ok(if k == 0 { MultiPoly::one() } else { MultiPoly::zero() });
        }
        Ok(self.classes[k]
            .iter()
            .map(|(lambda, c)| {
                let mono = lambda
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .fold(Monomial::ONE, |m, (i, &e)| {
                        m.mul(&Monomial::power(family(i + 1), e as u16))
                    });
                MultiPoly::term(Rational::from_integer(BigInt::from(*c)), mono)
            })
            .sum())
    }

    /// Substitutes the Chern classes of `b` (which must have this rank).
    pub fn apply(&self, b: &BundleClass) -> Result<BundleClass> {
        if b.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank.to_string(),
                found: b.rank().to_string(),
            });
        }
        let model = b.model();
        let out_rank = self.output_rank();
        if out_rank == 0 {
            return Ok(BundleClass::zero(model));
        }
        let n = model.dim();
        let base: Vec<MultiPoly> = (1..=self.rank).map(|i| b.chern(i)).collect();
        let mut powers: HashMap<(usize, u32), MultiPoly> = HashMap::new();
        let mut coeffs = vec![MultiPoly::one()];
        for k in 1..=n.min(self.truncation()) {
            let mut acc = MultiPoly::zero();
            for (lambda, c) in &self.classes[k] {
                let mut term = MultiPoly::int(1);
                for (i, &e) in lambda.iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    let pw = powers.entry((i, e)).or_insert_with(|| base[i].pow(e));
                    term = &term * pw;
                    if term.is_zero() {
                        break;
                    }
                }
                if !term.is_zero() {
                    acc += term.scale(&Rational::from_integer(BigInt::from(*c)));
                }
            }
            coeffs.push(acc);
        }
        BundleClass::truncated(out_rank, GradedClass::from_coeffs(model, coeffs))
    }
}

type Cache = Mutex<HashMap<(usize, usize, usize), Arc<LambdaFormula>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Memoized generic formula for `Λ^p` of a rank-`rank` bundle.
///
/// Concurrent callers may both derive the same formula; the later insert wins.
pub fn lambda_formula(rank: usize, power: usize, truncation: usize) -> Result<Arc<LambdaFormula>> {
    if rank > MAX_CACHED_RANK {
        return Err(Error::UnsupportedRank(rank));
    }
    let key = (rank, power, truncation);
    if let Some(f) = cache().lock().unwrap().get(&key) {
        return Ok(Arc::clone(f));
    }
    let f = Arc::new(LambdaFormula::derive(rank, power, truncation));
    cache().lock().unwrap().insert(key, Arc::clone(&f));
    Ok(f)
}

fn trivial_cases(b: &BundleClass, p: usize) -> Option<BundleClass> {
    if p == 0 {
        Some(BundleClass::trivial(b.model(), 1))
    } else if p > b.rank() {
        Some(BundleClass::zero(b.model()))
    } else if p == 1 {
        Some(b.clone())
    } else {
        None
    }
}

/// `Λ^p b` via the cached generic formula; ranks above 7 are rejected.
pub fn exterior_power(b: &BundleClass, p: usize) -> Result<BundleClass> {
    if b.rank() > MAX_CACHED_RANK {
        return Err(Error::UnsupportedRank(b.rank()));
    }
    if let Some(out) = trivial_cases(b, p) {
        return Ok(out);
    }
    lambda_formula(b.rank(), p, b.model().dim())?.apply(b)
}

/// `Λ^p b` derived directly, bypassing the cache; any rank.
pub fn exterior_power_uncached(b: &BundleClass, p: usize) -> Result<BundleClass> {
    if let Some(out) = trivial_cases(b, p) {
        return Ok(out);
    }
    LambdaFormula::derive(b.rank(), p, b.model().dim()).apply(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohring::HypersurfaceModel;
    use crate::exactnum::parse_poly;

    fn p(s: &str) -> MultiPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn wedge_two_of_rank_four() {
        let f = lambda_formula(4, 2, 6).unwrap();
        assert_eq!(f.output_rank(), 6);
        assert_eq!(f.chern_poly(1).unwrap(), p("3c1"));
        assert_eq!(f.chern_poly(4).unwrap(), p("2c1^2c2+c2^2+c1c3-4c4"));
    }

    #[test]
    fn wedge_three_of_rank_seven() {
        let f = lambda_formula(7, 3, 2).unwrap();
        assert_eq!(f.chern_poly(1).unwrap(), p("15c1"));
    }

    #[test]
    fn line_bundle_oracle() {
        let m = HypersurfaceModel::new(6).unwrap();
        let lines = [1, 2, 3, 4].map(|a| BundleClass::line(m, MultiPoly::int(a)));
        let f = lines[1..]
            .iter()
            .fold(lines[0].clone(), |acc, l| super::super::direct_sum(&acc, l).unwrap());
        assert_eq!(f.chern(1), p("10"));
        assert_eq!(f.chern(2), p("35"));
        let w = exterior_power(&f, 2).unwrap();
        assert_eq!(w.rank(), 6);
        assert_eq!(w.chern(2), p("370"));
    }

    #[test]
    fn edge_powers() {
        let m = HypersurfaceModel::new(4).unwrap();
        let b = BundleClass::generic(m, 3, Symbol::c);
        assert_eq!(exterior_power(&b, 0).unwrap(), BundleClass::trivial(m, 1));
        assert_eq!(exterior_power(&b, 1).unwrap(), b);
        assert_eq!(exterior_power(&b, 4).unwrap(), BundleClass::zero(m));
        let det = exterior_power(&b, 3).unwrap();
        assert_eq!(det, BundleClass::line(m, p("c1")));
        let big = BundleClass::trivial(m, 8);
        assert_eq!(exterior_power(&big, 2), Err(Error::UnsupportedRank(8)));
        assert_eq!(exterior_power_uncached(&big, 2).unwrap().rank(), 28);
    }
}
