//! Reference tables and the registry of named checks.

mod checks;
pub mod tables;

pub use checks::*;

/// `c_k(Λ^p F)` for a generic rank-`rank` bundle, in `c1..c8`.
#[derive(Debug, Clone, Copy)]
pub struct ExteriorRow {
    pub id: &'static str,
    pub rank: usize,
    pub power: usize,
    pub degree: usize,
    pub text: &'static str,
}

/// `χ(F)` on a generic sixfold: `c_i` of `X`, `f_i` of `F`.
#[derive(Debug, Clone, Copy)]
pub struct RrRow {
    pub id: &'static str,
    pub rank: usize,
    pub text: &'static str,
}

/// `χ((Λ² F)(t))` on a generic sixfold.
#[derive(Debug, Clone, Copy)]
pub struct ExteriorChiRow {
    pub id: &'static str,
    pub rank: usize,
    pub text: &'static str,
}

/// `χ((Λ^p E)(m - r(d-1)/2))` for the Ulrich class on `X_n`.
#[derive(Debug, Clone, Copy)]
pub struct UlrichRow {
    pub id: &'static str,
    pub n: usize,
    pub rank: usize,
    pub power: usize,
    pub text: &'static str,
}

/// `e_k` of a rank-`r` Ulrich class; `rank: None` rows hold for every rank.
#[derive(Debug, Clone, Copy)]
pub struct UlrichChernRow {
    pub id: &'static str,
    pub rank: Option<usize>,
    pub degree: usize,
    pub text: &'static str,
}

/// Right-hand side of the top Chern class identity on `X_n`.
#[derive(Debug, Clone, Copy)]
pub struct TopChernRow {
    pub id: &'static str,
    pub n: usize,
    pub text: &'static str,
}

/// Factors of the contradiction polynomial as printed, per `(n, r)`.
pub const STATED_FACTORS: &[((usize, usize), &[&str])] = &[
    ((6, 4), &["d-1", "d", "d+1", "2d-1", "2d+1", "4d-1", "4d+1"]),
    ((6, 5), &["d-1", "d", "d+1", "5d-1", "5d+1", "61d^2-13"]),
    ((8, 6), &["d-1", "d", "d+1", "2d-1", "2d+1", "3d-1", "3d+1", "6d-1", "6d+1"]),
    ((8, 7), &["d", "d-1", "d+1", "7d-1", "7d+1", "12569d^4-4210d^2+281"]),
];

/// `(id, n, r, factor, alpha, beta)`: `factor · c_2(Z) = alpha · H_Z² + beta · K_Z H_Z`.
pub const C2_RELATIONS: &[(&str, usize, usize, &str, &str, &str)] = &[
    ("x6z.iii", 6, 4, "2", "-(4/3)(2d-5)(5d-19)", "8d-22"),
    ("x6z.vii", 6, 5, "3", "-(1/8)(195d^2-1132d+1609)", "13d-34"),
    ("x8z.iii", 8, 6, "4", "-(393-253d+40d^2)", "19d-55"),
    ("x8z.vii", 8, 7, "5", "-(1/24)(12529-8592d+1463d^2)", "26d-71"),
];

/// `(id, n, r, beta, alpha)`: `K_Z² = beta · K_Z H_Z + alpha · deg Z`.
pub const CANONICAL_RELATIONS: &[(&str, usize, usize, &str, &str)] = &[
    ("x6z.vi", 6, 5, "7d-21", "-(1/4)(7d-21)^2"),
    ("x8z.vi", 8, 7, "9d-27", "-(1/4)(9d-27)^2"),
];

/// `(id, n, r)` for the degree entries in the locus table.
pub const DEGREE_IDS: &[(&str, usize, usize)] = &[
    ("x6z.ii", 6, 4),
    ("x6z.v", 6, 5),
    ("x8z.ii", 8, 6),
    ("x8z.v", 8, 7),
];
