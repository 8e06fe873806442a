//! One line per acceptance criterion. Run with
//! `cargo test --test acceptance -- --nocapture` to see them.

use std::sync::Arc;
use std::time::Instant;

use hyperchern::charcls::{
    chern_to_ch, determinant, direct_sum, dual, exterior_power, tensor, BundleClass,
};
use hyperchern::cohring::HypersurfaceModel;
use hyperchern::exactnum::{MultiPoly, Symbol};
use hyperchern::golden::tables::EXTERIOR;
use hyperchern::golden::{exterior_entries, run_checks};
use hyperchern::pipeline::{run_case_with_solution, Verdict};
use hyperchern::report::ReportEntry;
use hyperchern::ulrich::{solve_ulrich_chern, top_chern_identity_check, UlrichClassSolution};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn all_pass(queries: &[&str]) -> Result<usize, String> {
    let mut n = 0;
    for q in queries {
        let entries = run_checks(Some(q));
        if entries.is_empty() {
            return Err(format!("no entries for {q}"));
        }
        if let Some(bad) = entries.iter().find(|e| !e.passed()) {
            return Err(format!("{} expected {} got {}", bad.id, bad.expected, bad.actual));
        }
        n += entries.len();
    }
    Ok(n)
}

fn expect_count(queries: &[&str], want: usize) -> Result<String, String> {
    let n = all_pass(queries)?;
    if n == want {
        Ok(format!("{n} entries"))
    } else {
        Err(format!("{n} entries, wanted {want}"))
    }
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

fn splitting_oracle(rng: &mut ChaCha8Rng, trials: usize) -> Result<(), String> {
    let m = HypersurfaceModel::new(6).unwrap();
    for _ in 0..trials {
        let k = rng.gen_range(1..=7);
        let degrees: Vec<i64> = (0..k).map(|_| rng.gen_range(-3..=3)).collect();
        let f = lines(m, &degrees);
        for p in 0..=k {
            let sums: Vec<i64> = subsets(k, p).iter().map(|s| s.iter().map(|&i| degrees[i]).sum()).collect();
            if exterior_power(&f, p).unwrap() != lines(m, &sums) {
                return Err(format!("Λ^{p} of {degrees:?}"));
            }
        }
    }
    Ok(())
}

fn random_bundle(rng: &mut ChaCha8Rng, m: HypersurfaceModel, rank: usize) -> BundleClass {
    let coeffs: Vec<MultiPoly> = (0..rank.min(4)).map(|_| MultiPoly::int(rng.gen_range(-3..=3))).collect();
    BundleClass::from_coeffs(m, rank, &coeffs).unwrap()
}

fn duality_and_whitney(rng: &mut ChaCha8Rng, trials: usize) -> Result<(), String> {
    let m = HypersurfaceModel::new(4).unwrap();
    for t in 0..trials {
        let r = rng.gen_range(1..=7);
        let b = random_bundle(rng, m, r);
        for p in 0..=r {
            let lhs = exterior_power(&b, r - p).unwrap();
            let rhs = tensor(&dual(&exterior_power(&b, p).unwrap()), &determinant(&b)).unwrap();
            if lhs != rhs {
                return Err(format!("duality, trial {t}, p={p}"));
            }
        }
        let ra = rng.gen_range(1..=4);
        let a = random_bundle(rng, m, ra);
        let s = direct_sum(&a, &b).unwrap();
        if chern_to_ch(&s) != &chern_to_ch(&a) + &chern_to_ch(&b) {
            return Err(format!("ch additivity, trial {t}"));
        }
        if chern_to_ch(&tensor(&a, &b).unwrap()) != &chern_to_ch(&a) * &chern_to_ch(&b) {
            return Err(format!("ch multiplicativity, trial {t}"));
        }
    }
    Ok(())
}

fn restriction() -> Result<(), String> {
    for r in 1..=7 {
        for n in 4..=8 {
            let big = solve_ulrich_chern(n, r).map_err(|e| e.to_string())?;
            let small = solve_ulrich_chern(n - 1, r).map_err(|e| e.to_string())?;
            if (1..n).any(|i| big.e(i) != small.e(i)) {
                return Err(format!("r={r}, n={n}"));
            }
        }
    }
    Ok(())
}

fn fault_injection() -> Result<(), String> {
    let mut rows = EXTERIOR.to_vec();
    let i = rows.iter().position(|r| r.id == "w7.12").unwrap();
    rows[i].text = Box::leak(format!("{}+c7", rows[i].text).into_boxed_str());
    let bad: Vec<String> = exterior_entries(&rows).into_iter().filter(|e| !e.passed()).map(|e| e.id).collect();
    if bad != ["w7.12"] {
        return Err(format!("perturbed w7.12, failing {bad:?}"));
    }
    let sol = solve_ulrich_chern(8, 7).unwrap();
    let mut classes = sol.classes().to_vec();
    classes[3] = &classes[3] + &MultiPoly::var(Symbol::D);
    let perturbed = UlrichClassSolution::from_classes(8, 7, classes).unwrap();
    match run_case_with_solution(Arc::new(perturbed)) {
        Ok(c) if c.verdict == Verdict::Fail => Ok(()),
        Ok(_) => Err("perturbed e4 still passes case 8.7".into()),
        Err(_) => Ok(()),
    }
}

fn criterion_8() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    splitting_oracle(&mut rng, 128)?;
    duality_and_whitney(&mut rng, 64)?;
    restriction()?;
    fault_injection()?;
    Ok("128 line-bundle sums, 64 duality/ch trials, restriction n=4..8, fault injection".into())
}

fn criterion_4() -> Result<String, String> {
    let n = all_pass(&["xne", "ulr"])?;
    for n in 3..=7 {
        for r in 1..=7 {
            let sol = solve_ulrich_chern(n, r).map_err(|e| e.to_string())?;
            if !top_chern_identity_check(n, &sol).map_err(|e| e.to_string())? {
                return Err(format!("top Chern identity n={n}, r={r}"));
            }
        }
    }
    Ok(format!("{n} entries"))
}

fn criterion_7() -> Result<String, String> {
    let mut constants = Vec::new();
    for id in ["case.6.4", "case.6.5", "case.8.6", "case.8.7"] {
        let entries: Vec<ReportEntry> = run_checks(Some(id));
        for sub in [id.to_string(), format!("{id}.pointwise")] {
            match entries.iter().find(|e| e.id == sub) {
                Some(e) if e.passed() => {}
                Some(e) => return Err(format!("{sub}: {}", e.detail)),
                None => return Err(format!("{sub} missing")),
            }
        }
        let head = entries.iter().find(|e| e.id == id).unwrap();
        let constant = head.detail.split("constant ").nth(1).and_then(|s| s.split(';').next()).unwrap_or("?");
        constants.push(format!("{id}: {constant}"));
    }
    Ok(constants.join(", "))
}

fn criterion_6() -> Result<String, String> {
    let mut n = 0;
    for id in ["case.6.4", "case.6.5", "case.8.6", "case.8.7"] {
        let subs: Vec<ReportEntry> = run_checks(Some(id))
            .into_iter()
            .filter(|e| e.id.starts_with(&format!("{id}.")) && !e.id.ends_with(".pointwise"))
            .collect();
        if let Some(bad) = subs.iter().find(|e| !e.passed()) {
            return Err(bad.id.clone());
        }
        n += subs.len();
    }
    n += all_pass(&["x6z", "x8z"])?;
    Ok(format!("{n} entries"))
}

#[test]
fn acceptance() {
    type Criterion = (u32, &'static str, fn() -> Result<String, String>);
    let criteria: [Criterion; 9] = [
        (1, "exterior powers", || expect_count(&["w4", "w5", "w6", "w7"], 44)),
        (2, "Todd class and Chern character", || expect_count(&["td", "ch"], 17)),
        (3, "Riemann-Roch", || all_pass(&["rr6", "rr10", "chiw24", "chiw25", "xn"]).map(|n| format!("{n} entries"))),
        (4, "Ulrich classes", criterion_4),
        (5, "exterior powers of the Ulrich class", || expect_count(&["suz4", "suz5", "suz6", "suz7"], 10)),
        (6, "intersection numbers", criterion_6),
        (7, "difference polynomials", criterion_7),
        (8, "property suites", criterion_8),
        (9, "degree thresholds", || expect_count(&["dgr"], 16)),
    ];
    let mut failed = Vec::new();
    let start = Instant::now();
    for (k, name, run) in criteria {
        let t = Instant::now();
        let result = run();
        let secs = t.elapsed().as_secs_f64();
        match result {
            Ok(note) => println!("criterion {k}: PASS  {name} ({note}; {secs:.2}s)"),
            Err(why) => {
                println!("criterion {k}: FAIL  {name} ({why}; {secs:.2}s)");
                failed.push(k);
            }
        }
    }
    println!("total {:.2}s", start.elapsed().as_secs_f64());
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
