use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::symbol::{Symbol, NUM_SYMBOLS};
use super::Rational;
use crate::error::{Error, Result};

/// A power product over the fixed symbol alphabet.
///
/// Ordering is graded lexicographic: total degree first, then exponents
/// compared in symbol order `d > m > t > c1 > … > c8 > f1 > … > e8`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: u16,
    exps: [u16; NUM_SYMBOLS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        degree: 0,
        exps: [0; NUM_SYMBOLS],
    };

    pub fn var(sym: Symbol) -> Monomial {
        Monomial::power(sym, 1)
    }

    pub fn power(sym: Symbol, k: u16) -> Monomial {
        let mut m = Monomial::ONE;
        m.exps[sym.index()] = k;
        m.degree = k;
        m
    }

    pub fn exponent(&self, sym: Symbol) -> u16 {
        self.exps[sym.index()]
    }

    pub fn total_degree(&self) -> u16 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Sum of `weight(symbol) * exponent`, the cohomological degree of a
    /// monomial in generic Chern classes.
    pub fn weight(&self) -> u32 {
        self.symbols()
            .map(|(s, e)| s.weight() * e as u32)
            .sum()
    }

    /// Nonzero `(symbol, exponent)` pairs in symbol order.
    pub fn symbols(&self) -> impl Iterator<Item = (Symbol, u16)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (Symbol::from_index(i), e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (a, b) in out.exps.iter_mut().zip(other.exps.iter()) {
            *a += *b;
        }
        out.degree += other.degree;
        out
    }

    /// Same monomial with `sym` removed.
    pub fn without(&self, sym: Symbol) -> Monomial {
        let mut out = *self;
        out.degree -= out.exps[sym.index()];
        out.exps[sym.index()] = 0;
        out
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (s, e) in self.symbols() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Exact multivariate polynomial with rational coefficients.
///
/// Zero coefficients are never stored, so two polynomials are equal exactly
/// when their term maps are equal.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> MultiPoly {
        MultiPoly::default()
    }

    pub fn one() -> MultiPoly {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(q: Rational) -> MultiPoly {
        MultiPoly::term(q, Monomial::ONE)
    }

    pub fn int(n: i64) -> MultiPoly {
        MultiPoly::constant(Rational::from_integer(n.into()))
    }

    pub fn ratio(num: i64, den: i64) -> MultiPoly {
        MultiPoly::constant(Rational::new(num.into(), den.into()))
    }

    pub fn var(sym: Symbol) -> MultiPoly {
        MultiPoly::term(Rational::one(), Monomial::var(sym))
    }

    pub fn term(coeff: Rational, mono: Monomial) -> MultiPoly {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mono, coeff);
        }
        MultiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// The value if the polynomial has no symbols.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Monomial::ONE)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn symbols(&self) -> BTreeSet<Symbol> {
        self.terms
            .keys()
            .flat_map(|m| m.symbols().map(|(s, _)| s))
            .collect()
    }

    pub fn degree_in(&self, sym: Symbol) -> Option<u16> {
        self.terms.keys().map(|m| m.exponent(sym)).max()
    }

    pub fn total_degree(&self) -> Option<u16> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// Leading term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, q: &Rational) -> MultiPoly {
        if q.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * q)).collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> MultiPoly {
        self.scale(&Rational::from_integer(n.into()))
    }

    fn add_term(&mut self, mono: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Coefficient of `sym^k`, as a polynomial in the remaining symbols.
    pub fn coeff_of(&self, sym: Symbol, k: u16) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            if m.exponent(sym) == k {
                out.terms.insert(m.without(sym), c.clone());
            }
        }
        out
    }

    /// Terms of cohomological weight `k` (see [`Monomial::weight`]).
    pub fn weighted_part(&self, k: u32) -> MultiPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.weight() == k)
            .map(|(m, c)| (*m, c.clone()))
            .collect();
        MultiPoly { terms }
    }

    /// Simultaneous substitution: every symbol for which `map` returns a
    /// polynomial is replaced by it; the others are kept.
    pub fn substitute<F>(&self, map: F) -> MultiPoly
    where
        F: Fn(Symbol) -> Option<MultiPoly>,
    {
        let mut powers: BTreeMap<(Symbol, u16), MultiPoly> = BTreeMap::new();
        let mut images: BTreeMap<Symbol, Option<MultiPoly>> = BTreeMap::new();
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut kept = Monomial::ONE;
            let mut acc = MultiPoly::constant(c.clone());
            for (s, e) in m.symbols() {
                let image = images.entry(s).or_insert_with(|| map(s));
                match image {
                    None => kept = kept.mul(&Monomial::power(s, e)),
                    Some(p) => {
                        let pw = powers.entry((s, e)).or_insert_with(|| p.pow(e as u32));
                        acc = &acc * &*pw;
                    }
                }
            }
            if !kept.is_one() {
                acc = acc.mul_monomial(&kept);
            }
            out += acc;
        }
        out
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(mono), c.clone()))
                .collect(),
        }
    }

    /// Substitute a single symbol.
    pub fn subs(&self, sym: Symbol, value: &MultiPoly) -> MultiPoly {
        self.substitute(|s| (s == sym).then(|| value.clone()))
    }

    /// Exact evaluation; every symbol of `self` must be assigned.
    pub fn evaluate<F>(&self, assignment: F) -> Result<Rational>
    where
        F: Fn(Symbol) -> Option<Rational>,
    {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (s, e) in m.symbols() {
                let x = assignment(s).ok_or(Error::MissingSymbol(s))?;
                v *= num_traits::pow(x, e as usize);
            }
            total += v;
        }
        Ok(total)
    }

    /// Evaluate a polynomial in `d` alone at an integer.
    pub fn eval_d(&self, d: i64) -> Result<Rational> {
        let v = Rational::from_integer(d.into());
        self.evaluate(|s| (s == Symbol::D).then(|| v.clone()))
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Writes `self = content * primitive`, where `primitive` has coprime
    /// integer coefficients and a positive leading coefficient.
    pub fn primitive_part(&self) -> Result<(Rational, MultiPoly)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let l = self.denominator_lcm();
        let g = self
            .terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(&(c.numer() * (&l / c.denom()))));
        let mut content = Rational::new(g, l);
        if self.leading_term().unwrap().1.is_negative() {
            content = -content;
        }
        let inv = content.recip();
        Ok((content, self.scale(&inv)))
    }

    /// Canonical text with the rational content pulled out, e.g.
    /// `(1/40)*(2*d^3 - d)`.
    pub fn to_factored_text(&self) -> String {
        match self.primitive_part() {
            Err(_) => "0".to_string(),
            Ok((content, prim)) => {
                if prim.num_terms() == 1 {
                    return self.to_string();
                }
                if content.is_one() {
                    prim.to_string()
                } else if (-content.clone()).is_one() {
                    format!("-({prim})")
                } else if content.is_integer() {
                    format!("{content}*({prim})")
                } else {
                    format!("({content})*({prim})")
                }
            }
        }
    }
}

impl From<Symbol> for MultiPoly {
    fn from(s: Symbol) -> Self {
        MultiPoly::var(s)
    }
}

impl From<i64> for MultiPoly {
    fn from(n: i64) -> Self {
        MultiPoly::int(n)
    }
}

impl From<Rational> for MultiPoly {
    fn from(q: Rational) -> Self {
        MultiPoly::constant(q)
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

impl fmt::Display for MultiPoly {
    /// Descending graded-lex order, explicit `*`, rationals as `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl AddAssign for MultiPoly {
    fn add_assign(&mut self, rhs: MultiPoly) {
        if self.terms.len() < rhs.terms.len() {
            let lhs = std::mem::replace(self, rhs);
            *self += &lhs;
        } else {
            for (m, c) in rhs.terms {
                self.add_term(m, c);
            }
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl SubAssign for MultiPoly {
    fn sub_assign(&mut self, rhs: MultiPoly) {
        *self -= &rhs;
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        self += rhs;
        self
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(mut self, rhs: MultiPoly) -> MultiPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero();
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let prod = ca * cb;
                match acc.entry(ma.mul(mb)) {
                    Entry::Vacant(v) => {
                        v.insert(prod);
                    }
                    Entry::Occupied(mut o) => *o.get_mut() += prod,
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MultiPoly { terms: acc }
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for MultiPoly {
    fn sum<I: Iterator<Item = MultiPoly>>(iter: I) -> MultiPoly {
        iter.fold(MultiPoly::zero(), |mut a, b| {
            a += b;
            a
        })
    }
}
