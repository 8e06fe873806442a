//! Exact rational arithmetic and multivariate polynomials over ℚ.

mod parse;
mod poly;
mod symbol;
pub mod univariate;

pub use parse::parse_poly;
pub use poly::{Monomial, MultiPoly};
pub use symbol::{Symbol, MAX_INDEX, NUM_SYMBOLS};
pub use univariate::{
    binomial_poly, divide_by_stated_factors, integer_roots, integer_roots_at_least,
};

/// Arbitrary-precision fraction, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Exact substitution of the listed values; errors if a symbol of `p` is unlisted.
pub fn evaluate(p: &MultiPoly, assignment: &[(Symbol, Rational)]) -> crate::Result<Rational> {
    p.evaluate(|s| {
        assignment
            .iter()
            .find(|(t, _)| *t == s)
            .map(|(_, v)| v.clone())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluate_examples() {
        let deg = parse_poly("d(d-1)^2(2d-1)/3").unwrap();
        assert_eq!(evaluate(&deg, &[(Symbol::D, rat(5, 1))]).unwrap(), rat(240, 1));
        assert_eq!(evaluate(&MultiPoly::zero(), &[]).unwrap(), rat(0, 1));
        let p = parse_poly("-13+61d^2").unwrap();
        assert_eq!(evaluate(&p, &[(Symbol::D, rat(2, 1))]).unwrap(), rat(231, 1));
        assert_eq!(
            evaluate(&p, &[(Symbol::M, rat(2, 1))]),
            Err(crate::Error::MissingSymbol(Symbol::D))
        );
    }
}
