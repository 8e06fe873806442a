use hyperchern::charcls::{
    ch_to_chern, chern_to_ch, determinant, direct_sum, dual, exterior_power, tensor, twist, BundleClass,
};
use hyperchern::cohring::{exp_h, GradedClass, HypersurfaceModel};
use hyperchern::exactnum::univariate::divide_by_stated_factors;
use hyperchern::exactnum::{
    binomial_poly, integer_roots_at_least, parse_poly, rat, Monomial, MultiPoly, Rational, Symbol,
};
use hyperchern::hygeo::hrr_chi;
use proptest::prelude::*;

fn model(n: usize) -> HypersurfaceModel {
    HypersurfaceModel::new(n).unwrap()
}

/// Small polynomials in d, m, t.
fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((-5i64..=5, 0u16..3, 0u16..3, 0u16..2), 0..5).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(c, a, b, e)| {
                let mono = Monomial::power(Symbol::D, a)
                    .mul(&Monomial::power(Symbol::M, b))
                    .mul(&Monomial::power(Symbol::T, e));
                MultiPoly::term(rat(c, 1), mono)
            })
            .sum()
    })
}

fn point() -> impl Strategy<Value = [Rational; 3]> {
    prop::array::uniform3((-7i64..=7, 1i64..=4).prop_map(|(a, b)| rat(a, b)))
}

fn eval(p: &MultiPoly, at: &[Rational; 3]) -> Rational {
    p.evaluate(|s| match s {
        Symbol::D => Some(at[0].clone()),
        Symbol::M => Some(at[1].clone()),
        Symbol::T => Some(at[2].clone()),
        _ => None,
    })
    .unwrap()
}

fn class(n: usize) -> impl Strategy<Value = GradedClass> {
    prop::collection::vec(poly(), n + 1).prop_map(move |c| GradedClass::from_coeffs(model(n), c))
}

/// Integer-coefficient bundle of the given rank on `X_4`.
fn bundle(rank: usize) -> impl Strategy<Value = BundleClass> {
    prop::collection::vec(-3i64..=3, 4).prop_map(move |c| {
        let coeffs: Vec<MultiPoly> = c.iter().take(rank).map(|&x| MultiPoly::int(x)).collect();
        BundleClass::from_coeffs(model(4), rank, &coeffs).unwrap()
    })
}

fn lines(m: HypersurfaceModel, degrees: &[i64]) -> BundleClass {
    degrees
        .iter()
        .map(|&a| BundleClass::line(m, MultiPoly::int(a)))
        .reduce(|acc, l| direct_sum(&acc, &l).unwrap())
        .unwrap_or_else(|| BundleClass::zero(m))
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn evaluation_is_a_ring_map(p in poly(), q in poly(), at in point()) {
        prop_assert_eq!(eval(&(&p * &q), &at), eval(&p, &at) * eval(&q, &at));
        prop_assert_eq!(eval(&(&p + &q), &at), eval(&p, &at) + eval(&q, &at));
    }

    #[test]
    fn polynomial_ring_axioms(p in poly(), q in poly(), s in poly()) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &s, &p * &(&q * &s));
        prop_assert_eq!(&p * &(&q + &s), &(&p * &q) + &(&p * &s));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn canonical_text_reparses(p in poly()) {
        prop_assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn cup_is_a_commutative_ring(a in class(4), b in class(4), c in class(4)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &GradedClass::one(model(4)), a.clone());
    }

    #[test]
    fn integration_is_bilinear(a in class(3), b in class(3), c in class(3)) {
        let lhs = (&a * &(&b + &c)).integrate();
        prop_assert_eq!(lhs, (&a * &b).integrate() + (&a * &c).integrate());
    }

    #[test]
    fn exp_h_is_additive(s in poly(), t in poly()) {
        let m = model(3);
        prop_assert_eq!(exp_h(&(&s + &t), m), &exp_h(&s, m) * &exp_h(&t, m));
    }

    #[test]
    fn binomial_specializes_to_integers(v in -12i64..=12, k in 0u32..7) {
        let got = binomial_poly(&MultiPoly::int(v), k).as_constant().unwrap_or_else(|| rat(0, 1));
        let mut want = rat(1, 1);
        for j in 0..k as i64 {
            want *= rat(v - j, j + 1);
        }
        prop_assert_eq!(got, want);
    }

    #[test]
    fn stated_factor_division_remultiplies(
        linear in prop::collection::vec((1i64..=5, -6i64..=6), 1..5),
        scale in 1i64..=9,
    ) {
        let factors: Vec<MultiPoly> = linear
            .iter()
            .map(|&(a, b)| MultiPoly::var(Symbol::D).scale_int(a) + MultiPoly::int(b))
            .collect();
        let p = factors.iter().fold(MultiPoly::int(scale), |acc, f| &acc * f);
        let (q, exact) = divide_by_stated_factors(&p, &factors).unwrap();
        prop_assert!(exact);
        prop_assert_eq!(factors.iter().fold(q, |acc, f| &acc * f), p);
    }

    #[test]
    fn root_sweep_is_complete(roots in prop::collection::vec(-9i64..=12, 1..5), lo in -3i64..=4) {
        let d = MultiPoly::var(Symbol::D);
        let p = roots
            .iter()
            .fold(&d.scale_int(2) + &MultiPoly::one(), |acc, &x| &acc * &(&d - &MultiPoly::int(x)));
        let mut want: Vec<i64> = roots.iter().copied().filter(|&x| x >= lo).collect();
        want.sort();
        want.dedup();
        prop_assert_eq!(integer_roots_at_least(&p, lo).unwrap(), want);
    }

    /// Λ^p of a sum of line bundles against the elementary symmetric
    /// functions of the p-fold degree sums.
    #[test]
    fn splitting_oracle(degrees in prop::collection::vec(-3i64..=3, 1..=7), p_seed in 0usize..8) {
        let m = model(6);
        let k = degrees.len();
        let p = p_seed % (k + 2);
        let f = lines(m, &degrees);
        let got = exterior_power(&f, p).unwrap();
        let sums: Vec<i64> = subsets(k, p).iter().map(|s| s.iter().map(|&i| degrees[i]).sum()).collect();
        let want = if p > k { BundleClass::zero(m) } else { lines(m, &sums) };
        prop_assert_eq!(got.rank(), want.rank());
        prop_assert_eq!(got.total_chern(), want.total_chern());
    }

    #[test]
    fn exterior_power_duality(b in (1usize..=7).prop_flat_map(bundle), p_seed in 0usize..8) {
        let r = b.rank();
        let p = p_seed % (r + 1);
        let lhs = exterior_power(&b, r - p).unwrap();
        let rhs = tensor(&dual(&exterior_power(&b, p).unwrap()), &determinant(&b)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn top_power_is_determinant(b in (1usize..=7).prop_flat_map(bundle)) {
        prop_assert_eq!(exterior_power(&b, b.rank()).unwrap(), determinant(&b));
    }

    #[test]
    fn whitney_and_chern_character(a in (1usize..=4).prop_flat_map(bundle), b in (1usize..=4).prop_flat_map(bundle)) {
        let s = direct_sum(&a, &b).unwrap();
        prop_assert_eq!(s.total_chern(), &(a.total_chern() * b.total_chern()));
        prop_assert_eq!(chern_to_ch(&s), &chern_to_ch(&a) + &chern_to_ch(&b));
        let t = tensor(&a, &b).unwrap();
        prop_assert_eq!(chern_to_ch(&t), &chern_to_ch(&a) * &chern_to_ch(&b));
    }

    #[test]
    fn tensor_of_line_sums(x in prop::collection::vec(-3i64..=3, 1..=3), y in prop::collection::vec(-3i64..=3, 1..=3)) {
        let m = model(4);
        let pairs: Vec<i64> = x.iter().flat_map(|a| y.iter().map(move |b| a + b)).collect();
        prop_assert_eq!(tensor(&lines(m, &x), &lines(m, &y)).unwrap(), lines(m, &pairs));
    }

    #[test]
    fn chern_character_round_trip(b in bundle(4)) {
        prop_assert_eq!(ch_to_chern(&chern_to_ch(&b), 4).unwrap(), b);
    }

    #[test]
    fn dual_and_twist(b in (1usize..=4).prop_flat_map(bundle), s in -3i64..=3) {
        prop_assert_eq!(dual(&dual(&b)), b.clone());
        prop_assert_eq!(twist(&b, &MultiPoly::zero()), b.clone());
        let t = twist(&b, &MultiPoly::int(s));
        prop_assert_eq!(t.chern(1), b.chern(1) + MultiPoly::int(s * b.rank() as i64));
        prop_assert_eq!(t, tensor(&b, &BundleClass::line(model(4), MultiPoly::int(s))).unwrap());
    }

    #[test]
    fn riemann_roch_is_additive(a in (1usize..=3).prop_flat_map(bundle), b in (1usize..=3).prop_flat_map(bundle)) {
        let m = model(4);
        let s = MultiPoly::var(Symbol::M);
        prop_assert_eq!(hrr_chi(m, &direct_sum(&a, &b).unwrap(), &s), hrr_chi(m, &a, &s) + hrr_chi(m, &b, &s));
    }
}
