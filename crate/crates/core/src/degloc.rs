//! The locus `Z` where a general map `𝒪_X² → E` drops rank, for an Ulrich
//! class `E` of rank `r` on `X_n`: degree, the two class relations coming
//! from adjunction and the normal bundle, `χ(𝒪_Z(m))` from the
//! Eagon–Northcott resolution, and the intersection numbers they determine.

use std::sync::Arc;

use crate::cohring::GradedClass;
use crate::error::{Error, Result};
use crate::exactnum::{MultiPoly, Rational, Symbol};
use crate::hygeo::{chi_structure_twist, tangent_chern};
use crate::ulrich::{chi_exterior_of, half_det_twist, solve_ulrich_chern, ulrich_hilbert, UlrichClassSolution};

/// `factor · lhs = alpha · H_Z² + beta · K_Z H_Z`, as a formal linear form.
///
/// Pairing substitutes the values of the two right-hand classes against
/// whatever complementary class is wanted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearRelation {
    pub factor: MultiPoly,
    pub alpha: MultiPoly,
    pub beta: MultiPoly,
}

impl LinearRelation {
    /// `(alpha · h + beta · k) / factor`, where `h` and `k` are the values of
    /// `H_Z²` and `K_Z H_Z` against the same complementary class.
    pub fn pair(&self, h: &MultiPoly, k: &MultiPoly) -> MultiPoly {
        let num = &self.alpha * h + &self.beta * k;
        let inv = self
            .factor
            .as_constant()
            .expect("relation factor is a number")
            .recip();
        num.scale(&inv)
    }
}

#[derive(Debug, Clone)]
pub struct DegeneracyModel {
    n: usize,
    r: usize,
    solution: Arc<UlrichClassSolution>,
}

impl DegeneracyModel {
    /// Needs `(n+1)/2 <= r <= n+1`, and an Ulrich solution for `(n, r)`.
    pub fn new(n: usize, r: usize) -> Result<DegeneracyModel> {
        let sol = solve_ulrich_chern(n, r)?;
        DegeneracyModel::with_solution(sol)
    }

    /// Uses the given classes instead of solving for them.
    pub fn with_solution(solution: Arc<UlrichClassSolution>) -> Result<DegeneracyModel> {
        let (n, r) = (solution.n(), solution.r());
        if 2 * r < n + 1 || r > n + 1 || r < 3 {
            return Err(Error::Unsupported(format!("no degeneracy locus model for n={n}, r={r}")));
        }
        Ok(DegeneracyModel { n, r, solution })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn dim_z(&self) -> usize {
        self.n + 1 - self.r
    }

    pub fn solution(&self) -> &UlrichClassSolution {
        &self.solution
    }

    /// `D = c_1(E) = u H` with `u = r(d-1)/2`.
    pub fn u(&self) -> MultiPoly {
        half_det_twist(self.r)
    }

    /// `K_X = k H` with `k = d - n - 2`.
    pub fn k(&self) -> MultiPoly {
        MultiPoly::var(Symbol::D) - MultiPoly::int(self.n as i64 + 2)
    }

    /// `(K_X + D)|_Z = a H_Z`.
    pub fn a_coeff(&self) -> MultiPoly {
        self.u() + self.k()
    }

    /// `∫ c_{r-1}(E) H^{n+1-r}`.
    pub fn degree_of_z(&self) -> MultiPoly {
        let model = self.solution.model();
        let class = self.solution.bundle().total_chern().part(self.r - 1);
        let h = GradedClass::h_power(model, self.dim_z());
        (&class * &h).integrate()
    }

    /// `K_Z² = 2a K_Z H_Z - a² H_Z²`, from `(K_Z - (K_X + D)|_Z)² = 0`.
    pub fn canonical_square_relation(&self) -> LinearRelation {
        let a = self.a_coeff();
        LinearRelation {
            factor: MultiPoly::one(),
            alpha: -(&a * &a),
            beta: a.scale_int(2),
        }
    }

    /// `(r-2) c_2(Z)` in terms of `H_Z²` and `K_Z H_Z`, from the normal
    /// bundle sequence with `N_{Z/X}` built from `E` and `D`.
    pub fn c2z_relation(&self) -> LinearRelation {
        let r = self.r as i64;
        let (k, u) = (self.k(), self.u());
        let x2 = tangent_chern(self.solution.model()).coeff(2);
        let e2 = self.solution.e(2).clone();
        let beta = k.scale_int(r - 2) + u.scale_int(r - 1);
        let alpha = (x2 - e2).scale_int(r - 2) - &k * &beta - &u * &u;
        LinearRelation {
            factor: MultiPoly::int(r - 2),
            alpha,
            beta,
        }
    }

    /// `χ(𝒪_Z(s)) = χ(𝒪_X(s)) - Σ_{i=1}^{r-1} (-1)^{i+1} i χ(Λ^{r-1-i} E (s - u))`.
    pub fn resolution_chi_oz(&self, s: &MultiPoly) -> Result<MultiPoly> {
        let model = self.solution.model();
        let shift = s - &self.u();
        let mut ideal = MultiPoly::zero();
        for i in 1..self.r {
            let p = self.r - 1 - i;
            let chi = match p {
                0 => chi_structure_twist(model, &shift),
                1 => ulrich_hilbert(self.n, self.r, &shift),
                _ => chi_exterior_of(&self.solution, p, &shift)?,
            };
            let term = chi.scale_int(i as i64);
            if i % 2 == 1 {
                ideal += term;
            } else {
                ideal -= term;
            }
        }
        Ok(chi_structure_twist(model, s) - ideal)
    }

    /// Runs the Riemann–Roch extraction on `χ(𝒪_Z(m))` for small `m`.
    pub fn solve_intersections(&self) -> Result<IntersectionTable> {
        let chi_m = self.resolution_chi_oz(&MultiPoly::var(Symbol::M))?;
        let chi = |m: i64| chi_m.subs(Symbol::M, &MultiPoly::int(m));
        let deg = self.degree_of_z();
        let k2 = self.canonical_square_relation();
        let c2 = self.c2z_relation();
        match self.dim_z() {
            2 => {
                let (chi0, chi1) = (chi(0), chi(1));
                let kz_hz = chi1.scale_int(-2) + chi0.scale_int(2) + deg.clone();
                let kz2 = k2.pair(&deg, &kz_hz);
                let c2_z = c2.pair(&deg, &kz_hz);
                Ok(IntersectionTable::Surface(SurfaceNumbers {
                    chi: vec![chi0, chi1],
                    deg_z: deg,
                    kz_hz,
                    kz2,
                    c2_z,
                }))
            }
            3 => {
                let (chi0, chi1, chi2) = (chi(0), chi(1), chi(2));
                let two_deg = deg.scale_int(2);
                let kz_hz2 = chi1.scale_int(4) - chi2.scale_int(2) - chi0.scale_int(2) + two_deg.clone();
                let sum = chi1.scale_int(12) - chi0.scale_int(12) - two_deg + kz_hz2.scale_int(3);
                let kz2_hz = k2.pair(&deg, &kz_hz2);
                let hz_c2z = c2.pair(&deg, &kz_hz2);
                let kz_c2z = c2.pair(&kz_hz2, &kz2_hz);
                Ok(IntersectionTable::Threefold(ThreefoldNumbers {
                    chi: vec![chi0, chi1, chi2],
                    deg_z: deg,
                    kz_hz2,
                    kz2_hz_plus_hz_c2z: sum,
                    kz2_hz,
                    hz_c2z,
                    kz_c2z,
                }))
            }
            dim => Err(Error::Unsupported(format!("intersection numbers on a {dim}-dimensional locus"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceNumbers {
    /// `χ(𝒪_Z(m))` for `m = 0, 1`.
    pub chi: Vec<MultiPoly>,
    pub deg_z: MultiPoly,
    pub kz_hz: MultiPoly,
    pub kz2: MultiPoly,
    pub c2_z: MultiPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreefoldNumbers {
    /// `χ(𝒪_Z(m))` for `m = 0, 1, 2`.
    pub chi: Vec<MultiPoly>,
    pub deg_z: MultiPoly,
    pub kz_hz2: MultiPoly,
    /// Straight from Riemann–Roch, before the split.
    pub kz2_hz_plus_hz_c2z: MultiPoly,
    pub kz2_hz: MultiPoly,
    pub hz_c2z: MultiPoly,
    pub kz_c2z: MultiPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntersectionTable {
    Surface(SurfaceNumbers),
    Threefold(ThreefoldNumbers),
}

impl IntersectionTable {
    pub fn deg_z(&self) -> &MultiPoly {
        match self {
            IntersectionTable::Surface(s) => &s.deg_z,
            IntersectionTable::Threefold(t) => &t.deg_z,
        }
    }

    /// `χ(𝒪_Z)` from the resolution.
    pub fn chi_oz(&self) -> &MultiPoly {
        match self {
            IntersectionTable::Surface(s) => &s.chi[0],
            IntersectionTable::Threefold(t) => &t.chi[0],
        }
    }

    /// `χ(𝒪_Z)` from Noether's formula or its threefold analogue.
    pub fn chi_from_invariants(&self) -> MultiPoly {
        match self {
            IntersectionTable::Surface(s) => (&s.kz2 + &s.c2_z).scale(&Rational::new(1.into(), 12.into())),
            IntersectionTable::Threefold(t) => t.kz_c2z.scale(&Rational::new((-1).into(), 24.into())),
        }
    }

    /// How far the split of `K_Z² H_Z + H_Z c_2(Z)` misses the Riemann–Roch
    /// value; zero for a consistent table.
    pub fn split_residual(&self) -> MultiPoly {
        match self {
            IntersectionTable::Surface(_) => MultiPoly::zero(),
            IntersectionTable::Threefold(t) => &t.kz2_hz_plus_hz_c2z - &(&t.kz2_hz + &t.hz_c2z),
        }
    }

    /// Named entries, in a fixed order.
    pub fn entries(&self) -> Vec<(String, MultiPoly)> {
        let mut out = Vec::new();
        match self {
            IntersectionTable::Surface(s) => {
                for (m, c) in s.chi.iter().enumerate() {
                    out.push((format!("chi_OZ[m={m}]"), c.clone()));
                }
                out.push(("KZ_HZ".into(), s.kz_hz.clone()));
                out.push(("KZ2".into(), s.kz2.clone()));
                out.push(("c2Z".into(), s.c2_z.clone()));
            }
            IntersectionTable::Threefold(t) => {
                for (m, c) in t.chi.iter().enumerate() {
                    out.push((format!("chi_OZ[m={m}]"), c.clone()));
                }
                out.push(("KZ_HZ2".into(), t.kz_hz2.clone()));
                out.push(("KZ2_HZ+HZ_c2Z".into(), t.kz2_hz_plus_hz_c2z.clone()));
                out.push(("HZ_c2Z".into(), t.hz_c2z.clone()));
                out.push(("KZ2_HZ".into(), t.kz2_hz.clone()));
                out.push(("KZ_c2Z".into(), t.kz_c2z.clone()));
            }
        }
        out
    }

    pub fn get(&self, name: &str) -> Option<MultiPoly> {
        self.entries().into_iter().find(|(k, _)| k == name).map(|(_, v)| v)
    }
}
