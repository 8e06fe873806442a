use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Largest index carried by the indexed symbol families.
pub const MAX_INDEX: u8 = 8;

/// Number of symbols in the closed alphabet.
pub const NUM_SYMBOLS: usize = 3 + 3 * MAX_INDEX as usize;

/// The closed set of formal symbols a [`MultiPoly`](super::MultiPoly) may use.
///
/// `d` is the degree of the hypersurface, `m` and `t` are twist parameters.
/// The indexed families hold generic Chern classes: `c1..c8` (usually the
/// tangent bundle, or the bundle whose exterior powers are taken), `f1..f8`
/// (a second generic bundle) and `e1..e8` (unknown Ulrich classes).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    D,
    M,
    T,
    C(u8),
    F(u8),
    E(u8),
}

impl Symbol {
    /// Position in the dense exponent vector; also the graded-lex priority
    /// (smaller index = more significant variable).
    pub fn index(self) -> usize {
        match self {
            Symbol::D => 0,
            Symbol::M => 1,
            Symbol::T => 2,
            Symbol::C(i) => 2 + i as usize,
            Symbol::F(i) => 2 + MAX_INDEX as usize + i as usize,
            Symbol::E(i) => 2 + 2 * MAX_INDEX as usize + i as usize,
        }
    }

    pub fn from_index(idx: usize) -> Symbol {
        let k = MAX_INDEX as usize;
        match idx {
            0 => Symbol::D,
            1 => Symbol::M,
            2 => Symbol::T,
            i if i < 3 + k => Symbol::C((i - 2) as u8),
            i if i < 3 + 2 * k => Symbol::F((i - 2 - k) as u8),
            i if i < NUM_SYMBOLS => Symbol::E((i - 2 - 2 * k) as u8),
            _ => panic!("symbol index {idx} out of range"),
        }
    }

    /// Checked constructors for the indexed families.
    pub fn c(i: usize) -> Symbol {
        assert!((1..=MAX_INDEX as usize).contains(&i), "c{i} out of range");
        Symbol::C(i as u8)
    }

    pub fn f(i: usize) -> Symbol {
        assert!((1..=MAX_INDEX as usize).contains(&i), "f{i} out of range");
        Symbol::F(i as u8)
    }

    pub fn e(i: usize) -> Symbol {
        assert!((1..=MAX_INDEX as usize).contains(&i), "e{i} out of range");
        Symbol::E(i as u8)
    }

    /// Cohomological weight when the symbol stands for a Chern class.
    pub fn weight(self) -> u32 {
        match self {
            Symbol::D | Symbol::M | Symbol::T => 0,
            Symbol::C(i) | Symbol::F(i) | Symbol::E(i) => i as u32,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::D => f.write_str("d"),
            Symbol::M => f.write_str("m"),
            Symbol::T => f.write_str("t"),
            Symbol::C(i) => write!(f, "c{i}"),
            Symbol::F(i) => write!(f, "f{i}"),
            Symbol::E(i) => write!(f, "e{i}"),
        }
    }
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || Error::UnknownSymbol(s.to_string());
        match s {
            "d" => return Ok(Symbol::D),
            "m" => return Ok(Symbol::M),
            "t" => return Ok(Symbol::T),
            _ => {}
        }
        let mut chars = s.chars();
        let family = chars.next().ok_or_else(unknown)?;
        let idx: u8 = chars.as_str().parse().map_err(|_| unknown())?;
        if !(1..=MAX_INDEX).contains(&idx) {
            return Err(unknown());
        }
        match family {
            'c' => Ok(Symbol::C(idx)),
            'f' => Ok(Symbol::F(idx)),
            'e' => Ok(Symbol::E(idx)),
            _ => Err(unknown()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_roundtrip() {
        for i in 0..NUM_SYMBOLS {
            let s = Symbol::from_index(i);
            assert_eq!(s.index(), i);
            assert_eq!(s.to_string().parse::<Symbol>().unwrap(), s);
        }
    }

    #[test]
    fn rejects_symbols_outside_alphabet() {
        for bad in ["x", "c0", "c9", "r", "e", "d1", ""] {
            assert!(bad.parse::<Symbol>().is_err(), "{bad}");
        }
    }
}
