//! Polynomials in the single symbol `d`: exact division by a list of
//! factors and integer-root exclusion via the Cauchy bound.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::{Monomial, MultiPoly};
use super::symbol::Symbol;
use super::Rational;
use crate::error::{Error, Result};

/// `ell (ell-1) ... (ell-k+1) / k!`, the falling-factorial binomial; `1` for `k = 0`.
pub fn binomial_poly(ell: &MultiPoly, k: u32) -> MultiPoly {
    let mut acc = MultiPoly::one();
    let mut fact = BigInt::one();
    for j in 0..k {
        acc = &acc * &(ell - &MultiPoly::int(j as i64));
        fact *= j + 1;
    }
    acc.scale(&Rational::new(BigInt::one(), fact))
}

/// Dense coefficients `[a_0, a_1, …]` of a polynomial in `sym` alone.
pub fn dense_coeffs(p: &MultiPoly, sym: Symbol) -> Result<Vec<Rational>> {
    let mut out = Vec::new();
    for (m, c) in p.terms() {
        if let Some((s, _)) = m.symbols().find(|(s, _)| *s != sym) {
            return Err(Error::NotUnivariate {
                expected: sym,
                found: s,
            });
        }
        let k = m.exponent(sym) as usize;
        if out.len() <= k {
            out.resize(k + 1, Rational::zero());
        }
        out[k] = c.clone();
    }
    Ok(out)
}

pub fn from_dense(coeffs: &[Rational], sym: Symbol) -> MultiPoly {
    coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| MultiPoly::term(c.clone(), Monomial::power(sym, k as u16)))
        .sum()
}

/// Long division in `sym`; returns `(quotient, remainder)`.
pub fn div_rem(p: &MultiPoly, q: &MultiPoly, sym: Symbol) -> Result<(MultiPoly, MultiPoly)> {
    if q.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let mut rem = dense_coeffs(p, sym)?;
    let den = dense_coeffs(q, sym)?;
    let dl = den.len() - 1;
    let lead = den[dl].clone();
    if rem.len() <= dl {
        return Ok((MultiPoly::zero(), p.clone()));
    }
    let mut quot = vec![Rational::zero(); rem.len() - dl];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dl] / &lead;
        if !c.is_zero() {
            for (j, dj) in den.iter().enumerate() {
                rem[k + j] -= &c * dj;
            }
        }
        quot[k] = c;
    }
    rem.truncate(dl);
    Ok((from_dense(&quot, sym), from_dense(&rem, sym)))
}

/// Exact division of `p` by `q`, both univariate in `sym`; errors unless the
/// remainder vanishes.
pub fn div_exact(p: &MultiPoly, q: &MultiPoly, sym: Symbol) -> Result<MultiPoly> {
    let (quot, rem) = div_rem(p, q, sym)?;
    if rem.is_zero() {
        Ok(quot)
    } else {
        Err(Error::Inconsistent(format!(
            "({q}) does not divide ({p}); remainder {rem}"
        )))
    }
}

/// Divides `p` successively by each factor. `exact` is true iff every step
/// left a zero remainder; the quotient is the final cofactor.
pub fn divide_by_stated_factors(p: &MultiPoly, factors: &[MultiPoly]) -> Result<(MultiPoly, bool)> {
    dense_coeffs(p, Symbol::D)?;
    let mut cur = p.clone();
    let mut exact = true;
    for f in factors {
        let (q, r) = div_rem(&cur, f, Symbol::D)?;
        exact &= r.is_zero();
        cur = q;
    }
    Ok((cur, exact))
}

/// `1 + max_{i<n} |a_i| / |a_n|`; every complex root has modulus below it.
pub fn cauchy_bound(p: &MultiPoly) -> Result<Rational> {
    let coeffs = dense_coeffs(p, Symbol::D)?;
    let lead = coeffs.last().ok_or(Error::ZeroPolynomial)?.abs();
    let max = coeffs[..coeffs.len() - 1]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(Rational::zero);
    Ok(Rational::one() + max / lead)
}

/// Horner evaluation of integer coefficients.
fn horner(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    coeffs
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn integer_coeffs(p: &MultiPoly) -> Result<Vec<BigInt>> {
    let (_, prim) = p.primitive_part()?;
    Ok(dense_coeffs(&prim, Symbol::D)?
        .into_iter()
        .map(|c| c.to_integer())
        .collect())
}

/// Sieve modulus for [`integer_roots_in`].
const SIEVE_PRIME: u64 = 65_521;

/// All integer roots in `[lo, hi]`. Every integer of the window is accounted
/// for: a root reduces to a root mod [`SIEVE_PRIME`], and each integer in
/// those residue classes is evaluated exactly.
pub fn integer_roots_in(p: &MultiPoly, lo: &BigInt, hi: &BigInt) -> Result<Vec<BigInt>> {
    let coeffs = integer_coeffs(p)?;
    if lo > hi {
        return Ok(Vec::new());
    }
    let q = BigInt::from(SIEVE_PRIME);
    let reduced: Vec<u64> = coeffs
        .iter()
        .map(|c| c.mod_floor(&q).to_u64().expect("reduced below q"))
        .collect();
    let residues = (0..SIEVE_PRIME).filter(|&x| {
        reduced.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % SIEVE_PRIME) == 0
    });
    let base = lo.mod_floor(&q);
    let mut roots = Vec::new();
    for rho in residues {
        let mut x = lo + (BigInt::from(rho) - &base).mod_floor(&q);
        while &x <= hi {
            if horner(&coeffs, &x).is_zero() {
                roots.push(x.clone());
            }
            x += &q;
        }
    }
    roots.sort();
    Ok(roots)
}

/// Integer roots `>= lo`, found by sweeping `[lo, ceil(B)]` with `B` the
/// Cauchy bound.
pub fn integer_roots_at_least(p: &MultiPoly, lo: i64) -> Result<Vec<i64>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let bound = cauchy_bound(p)?.ceil().to_integer();
    let roots = integer_roots_in(p, &BigInt::from(lo), &bound)?;
    Ok(roots.iter().map(|r| r.to_i64().expect("root fits i64")).collect())
}

/// Every integer root, from the symmetric Cauchy window.
pub fn integer_roots(p: &MultiPoly) -> Result<Vec<i64>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let bound = cauchy_bound(p)?.ceil().to_integer();
    let roots = integer_roots_in(p, &-bound.clone(), &bound)?;
    Ok(roots.iter().map(|r| r.to_i64().expect("root fits i64")).collect())
}

/// `lcm` of the denominators of a list of rationals.
pub fn lcm_of_denominators<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    xs.into_iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::parse_poly;

    fn p(s: &str) -> MultiPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn binomial_examples() {
        let b = binomial_poly(&p("m+7"), 7);
        let v = b
            .evaluate(|s| (s == Symbol::M).then(|| Rational::from_integer(3.into())))
            .unwrap();
        assert_eq!(v, Rational::from_integer(120.into()));
        assert_eq!(binomial_poly(&p("7-d"), 7).eval_d(3).unwrap(), Rational::zero());
        assert_eq!(binomial_poly(&p("d^3+m"), 0), MultiPoly::one());
    }

    #[test]
    fn binomial_matches_integer_convention() {
        for v in -6i64..12 {
            for k in 0u32..8 {
                let got = binomial_poly(&p("d"), k).eval_d(v).unwrap();
                // falling factorial over k!
                let mut num = BigInt::one();
                let mut den = BigInt::one();
                for j in 0..k as i64 {
                    num *= v - j;
                    den *= j + 1;
                }
                assert_eq!(got, Rational::new(num, den), "C({v},{k})");
            }
        }
    }

    #[test]
    fn stated_factor_division() {
        let (q, exact) =
            divide_by_stated_factors(&p("d^3-d"), &[p("d"), p("d-1"), p("d+1")]).unwrap();
        assert!(exact);
        assert_eq!(q, MultiPoly::one());
        let (_, exact) = divide_by_stated_factors(&p("d^2+1"), &[p("d-1")]).unwrap();
        assert!(!exact);
        assert_eq!(
            divide_by_stated_factors(&p("d"), &[MultiPoly::zero()]),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn root_sweep_examples() {
        assert_eq!(integer_roots_at_least(&p("(d-1)*d*(2*d-1)"), 3).unwrap(), Vec::<i64>::new());
        assert_eq!(integer_roots_at_least(&p("(d-5)*(d+2)"), 3).unwrap(), vec![5]);
        assert_eq!(
            integer_roots_at_least(&p("281-4210*d^2+12569*d^4"), 3).unwrap(),
            Vec::<i64>::new()
        );
        assert_eq!(integer_roots(&p("(d-5)*(d+2)*(3*d-1)")).unwrap(), vec![-2, 5]);
        assert_eq!(integer_roots_at_least(&MultiPoly::zero(), 3), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn non_univariate_is_rejected() {
        assert!(matches!(
            integer_roots_at_least(&p("d*m"), 0),
            Err(Error::NotUnivariate { .. })
        ));
    }
}
