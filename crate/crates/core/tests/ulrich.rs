use hyperchern::charcls::{dual, exterior_power, twist};
use hyperchern::exactnum::{MultiPoly, Symbol};
use hyperchern::hygeo::hrr_chi;
use hyperchern::pipeline::CASES;
use hyperchern::ulrich::{chi_exterior_of, half_det_twist, solve_ulrich_chern, top_chern_identity_check};

fn m() -> MultiPoly {
    MultiPoly::var(Symbol::M)
}

/// The classes below the dimension do not depend on it.
#[test]
fn restriction_compatibility() {
    for r in 1..=7 {
        for n in 4..=8 {
            let big = solve_ulrich_chern(n, r).unwrap();
            let small = solve_ulrich_chern(n - 1, r).unwrap();
            for i in 1..n {
                assert_eq!(big.e(i), small.e(i), "e{i} for r={r}, n={n} vs n-1");
            }
        }
    }
}

#[test]
fn top_chern_identity_all_dimensions() {
    for n in 3..=7 {
        for r in 1..=7 {
            let sol = solve_ulrich_chern(n, r).unwrap();
            assert!(top_chern_identity_check(n, &sol).unwrap(), "n={n}, r={r}");
        }
    }
}

/// χ(Λ^p E(s)) = χ((Λ^{r-p} E)^∨(s + r(d-1)/2)).
#[test]
fn exterior_chi_duality() {
    for (n, r) in CASES {
        let sol = solve_ulrich_chern(n, r).unwrap();
        let e = sol.bundle();
        let u = half_det_twist(r);
        for p in 0..=r {
            let lhs = chi_exterior_of(&sol, p, &m()).unwrap();
            let other = dual(&exterior_power(&e, r - p).unwrap());
            let rhs = hrr_chi(sol.model(), &other, &(&m() + &u));
            assert_eq!(lhs, rhs, "n={n}, r={r}, p={p}");
        }
    }
}

/// χ(F(s)) = (-1)^n χ(F^∨(d - n - 2 - s)) on the truncated class.
#[test]
fn serre_duality() {
    for (n, r) in CASES {
        let sol = solve_ulrich_chern(n, r).unwrap();
        let e = sol.bundle();
        let k = MultiPoly::var(Symbol::D) - MultiPoly::int(n as i64 + 2);
        let lhs = hrr_chi(sol.model(), &e, &m());
        let rhs = hrr_chi(sol.model(), &twist(&dual(&e), &(&k - &m())), &MultiPoly::zero());
        let sign = if n % 2 == 0 { rhs } else { -rhs };
        assert_eq!(lhs, sign, "n={n}, r={r}");
    }
}

/// Ulrich twists have no cohomology: χ(E(-j)) = 0 for 1 <= j <= n.
#[test]
fn vanishing_twists() {
    for (n, r) in CASES {
        let sol = solve_ulrich_chern(n, r).unwrap();
        for j in 1..=n as i64 {
            assert!(sol.chi_formal(&MultiPoly::int(-j)).is_zero(), "n={n}, r={r}, j={j}");
        }
    }
}

#[test]
fn formal_class_above_rank() {
    let sol = solve_ulrich_chern(8, 6).unwrap();
    assert_eq!(sol.classes().len(), 8);
    assert_eq!(
        sol.e(8).to_string(),
        "-27/1400*d^8 + 3/112*d^6 - 79/9600*d^4 + 1/1344*d^2 - 1/67200"
    );
    assert!(sol.bundle().chern(7).is_zero());
}
