use hyperchern::exactnum::{MultiPoly, Symbol};
use hyperchern::golden::tables::{EXTERIOR, TODD, ULRICH_CHERN, ULRICH_EXTERIOR_CHI};
use hyperchern::golden::{
    exterior_entries, todd_entries, ulrich_chern_entries, ulrich_exterior_entries,
};
use hyperchern::pipeline::{run_case_with_solution, Verdict};
use hyperchern::report::{ReportDocument, ReportEntry};
use hyperchern::ulrich::{solve_ulrich_chern, UlrichClassSolution};
use std::sync::Arc;

/// Bumps the last digit of the first number in `text`.
fn perturb(text: &str) -> &'static str {
    let bytes = text.as_bytes();
    let start = bytes.iter().position(u8::is_ascii_digit).expect("a number");
    let end = start + bytes[start..].iter().take_while(|b| b.is_ascii_digit()).count();
    let mut out = text.to_string();
    let last = bytes[end - 1] - b'0';
    out.replace_range(end - 1..end, &(((last + 1) % 10).max(2)).to_string());
    Box::leak(out.into_boxed_str())
}

fn failed(entries: &[ReportEntry]) -> Vec<&str> {
    entries.iter().filter(|e| !e.passed()).map(|e| e.id.as_str()).collect()
}

#[test]
fn perturbed_exterior_row() {
    let mut rows = EXTERIOR.to_vec();
    let i = rows.iter().position(|r| r.id == "w6.9").unwrap();
    rows[i].text = perturb(rows[i].text);
    assert_eq!(failed(&exterior_entries(&rows)), vec!["w6.9"]);
}

#[test]
fn perturbed_ulrich_exterior_row() {
    let mut rows = ULRICH_EXTERIOR_CHI.to_vec();
    let i = rows.iter().position(|r| r.id == "suz7.3").unwrap();
    rows[i].text = perturb(rows[i].text);
    assert_eq!(failed(&ulrich_exterior_entries(&rows)), vec!["suz7.3"]);
}

#[test]
fn perturbed_ulrich_chern_row() {
    let mut rows = ULRICH_CHERN.to_vec();
    let i = rows.iter().position(|r| r.id == "xne.10").unwrap();
    rows[i].text = perturb(rows[i].text);
    assert_eq!(failed(&ulrich_chern_entries(&rows)), vec!["xne.10[n=8,r=7]"]);
}

#[test]
fn perturbed_todd_term() {
    let text = TODD.replacen("c1^2", "2c1^2", 1);
    assert_eq!(failed(&todd_entries(&text)), vec!["td[2]"]);
}

#[test]
fn perturbed_class_breaks_its_case() {
    let sol = solve_ulrich_chern(6, 5).unwrap();
    let mut classes = sol.classes().to_vec();
    classes[2] = &classes[2] + &MultiPoly::var(Symbol::D);
    let bad = UlrichClassSolution::from_classes(6, 5, classes).unwrap();
    let report = run_case_with_solution(Arc::new(bad)).unwrap();
    assert_eq!(report.verdict, Verdict::Fail);
    assert!(!report.factorization_exact);

    let honest = run_case_with_solution(sol).unwrap();
    assert_eq!(honest.verdict, Verdict::Pass);
}

#[test]
fn exit_code_follows_failures() {
    let mut rows = EXTERIOR.to_vec();
    assert_eq!(ReportDocument::new(exterior_entries(&rows)).exit_code(), 0);
    rows[0].text = perturb(rows[0].text);
    let doc = ReportDocument::new(exterior_entries(&rows));
    assert_eq!(doc.exit_code(), 1);
    assert_eq!(doc.failures().count(), 1);
}
