use hyperchern::golden::tables::LOCUS_VALUES;
use hyperchern::golden::{run_checks, GROUPS, REGISTRY};
use hyperchern::pipeline::{run_all, global_verdict, Verdict};
use hyperchern::report::ReportEntry;

fn failures(entries: &[ReportEntry]) -> Vec<String> {
    entries
        .iter()
        .filter(|e| !e.passed())
        .map(|e| format!("{}: expected {} got {} ({})", e.id, e.expected, e.actual, e.detail))
        .collect()
}

#[test]
fn every_group_passes() {
    for g in GROUPS {
        let entries = (g.run)();
        assert!(!entries.is_empty(), "{} is empty", g.prefix);
        assert_eq!(failures(&entries), Vec::<String>::new(), "group {}", g.prefix);
    }
}

#[test]
fn registry_ids_resolve() {
    for id in REGISTRY {
        let query = id.split_once('-').map(|(a, _)| a.trim_end_matches(|c: char| c.is_ascii_digit()).trim_end_matches('.')).unwrap_or(id);
        assert!(!run_checks(Some(query)).is_empty(), "{id}");
    }
}

#[test]
fn entry_counts() {
    let count = |q| run_checks(Some(q)).len();
    assert_eq!(count("w4"), 6);
    assert_eq!(count("w5"), 6);
    assert_eq!(count("w6"), 16);
    assert_eq!(count("w7"), 16);
    assert_eq!(count("td"), 9);
    assert_eq!(count("ch"), 8);
    assert_eq!(count("suz4"), 1);
    assert_eq!(count("suz5"), 2);
    assert_eq!(count("suz6"), 3);
    assert_eq!(count("suz7"), 4);
    assert_eq!(count("dgr"), 16);
}

#[test]
fn query_matching() {
    assert_eq!(run_checks(Some("w7.9")).len(), 1);
    assert!(run_checks(Some("w7.1")).iter().all(|e| e.id == "w7.1"));
    assert!(run_checks(Some("xne.6")).iter().all(|e| e.id.starts_with("xne.6[")));
    assert!(run_checks(Some("nope")).is_empty());
}

#[test]
fn four_cases_contradict() {
    let reports = run_all().unwrap();
    for c in &reports {
        assert!(c.factorization_exact, "{}", c.id());
        assert!(c.roots_ge_3.is_empty(), "{}", c.id());
        assert_eq!(c.cofactor.to_string(), "1", "{}", c.id());
        assert_eq!(c.small_roots, vec![-1, 0, 1], "{}", c.id());
    }
    assert_eq!(
        global_verdict(&reports),
        (Verdict::Pass, "computational core verified: all four cases contradict")
    );
    assert_eq!(reports[1].difference.to_string(), {
        let f = hyperchern::pipeline::stated_factors(6, 5).unwrap();
        let p = f.iter().fold(hyperchern::exactnum::MultiPoly::one(), |a, b| &a * b);
        p.primitive_part().unwrap().1.to_string()
    });
    assert_eq!(reports[3].content.to_string(), "-1/28665446400");
}

#[test]
fn sextic_chi_coefficient() {
    let e = run_checks(Some("case.6.4.chi_OZ[m=0]"));
    assert_eq!(e.len(), 1);
    assert!(e[0].passed());
    let raw = LOCUS_VALUES.iter().find(|(k, _)| *k == "case.6.4.chi_OZ[m=0]").unwrap().1;
    assert!(raw.contains("97472d^4"));
}
