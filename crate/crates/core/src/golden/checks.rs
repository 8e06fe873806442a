//! Every reference value as a named check. Each group recomputes its values
//! from scratch and compares canonical text.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::tables::{
    CHERN_CHARACTER, EXTERIOR, EXTERIOR_CHI, LOCUS_VALUES, RIEMANN_ROCH, TODD, TOP_CHERN,
    ULRICH_CHERN, ULRICH_EXTERIOR_CHI,
};
use super::{ExteriorChiRow, ExteriorRow, UlrichChernRow, UlrichRow};
use super::{C2_RELATIONS, CANONICAL_RELATIONS, DEGREE_IDS};
use crate::charcls::{ch_from_total, chern_to_ch, exterior_power, lambda_formula, todd_of_total, BundleClass};
use crate::cohring::{GradedClass, HypersurfaceModel};
use crate::degloc::{DegeneracyModel, IntersectionTable};
use crate::error::Result;
use crate::exactnum::{parse_poly, MultiPoly, Symbol};
use crate::hygeo::{
    chi_structure_twist, hrr_chi, hrr_density, tangent_chern, tangent_chern_recursive,
};
use crate::pipeline::{check_dgr, run_case, Verdict};
use crate::report::ReportEntry;
use crate::ulrich::{
    chi_exterior_ulrich, half_det_twist, solve_ulrich_chern, top_chern_sides, ulrich_hilbert,
};

/// Ids accepted by `verify lemma`, as documented.
pub const REGISTRY: &[&str] = &[
    "xn", "xne.1", "xne.2", "xne.3", "xne.4", "xne.5", "xne.6", "xne.7", "xne.8", "xne.9",
    "xne.10", "w4.1-6", "w5.1-6", "w6.1-16", "w7.1-16", "td", "ch", "rr6", "rr10", "chiw24",
    "chiw25", "ulr", "suz4.1", "suz5.1-2", "suz6.1-3", "suz7.1-4", "x6z", "x8z", "case.6.4",
    "case.6.5", "case.8.6", "case.8.7", "dgr",
];

/// A block of checks sharing a prefix and a computation.
pub struct Group {
    pub prefix: &'static str,
    pub run: fn() -> Vec<ReportEntry>,
}

pub const GROUPS: &[Group] = &[
    Group { prefix: "xn", run: tangent_entries },
    Group { prefix: "xne", run: || ulrich_chern_entries(ULRICH_CHERN) },
    Group { prefix: "ulr", run: top_chern_entries },
    Group { prefix: "w4", run: || exterior_entries(&rows_with_prefix("w4")) },
    Group { prefix: "w5", run: || exterior_entries(&rows_with_prefix("w5")) },
    Group { prefix: "w6", run: || exterior_entries(&rows_with_prefix("w6")) },
    Group { prefix: "w7", run: || exterior_entries(&rows_with_prefix("w7")) },
    Group { prefix: "td", run: || todd_entries(TODD) },
    Group { prefix: "ch", run: || chern_character_entries(CHERN_CHARACTER) },
    Group { prefix: "rr6", run: || riemann_roch_entries("rr6") },
    Group { prefix: "rr10", run: || riemann_roch_entries("rr10") },
    Group { prefix: "chiw24", run: || exterior_chi_entries(&EXTERIOR_CHI[..1]) },
    Group { prefix: "chiw25", run: || exterior_chi_entries(&EXTERIOR_CHI[1..]) },
    Group { prefix: "suz4", run: || ulrich_exterior_entries(&suz_rows("suz4")) },
    Group { prefix: "suz5", run: || ulrich_exterior_entries(&suz_rows("suz5")) },
    Group { prefix: "suz6", run: || ulrich_exterior_entries(&suz_rows("suz6")) },
    Group { prefix: "suz7", run: || ulrich_exterior_entries(&suz_rows("suz7")) },
    Group { prefix: "x6z", run: || locus_entries("x6z") },
    Group { prefix: "x8z", run: || locus_entries("x8z") },
    Group { prefix: "case.6.4", run: || case_entries(6, 4) },
    Group { prefix: "case.6.5", run: || case_entries(6, 5) },
    Group { prefix: "case.8.6", run: || case_entries(8, 6) },
    Group { prefix: "case.8.7", run: || case_entries(8, 7) },
    Group { prefix: "dgr", run: dgr_entries },
];

/// `id` is selected by `query` if equal, or if `query` is a dotted or
/// bracketed prefix of it.
pub fn id_matches(id: &str, query: &str) -> bool {
    id == query
        || id
            .strip_prefix(query)
            .is_some_and(|rest| rest.starts_with('.') || rest.starts_with('['))
}

/// Runs every group that can produce an entry matching `query` (all groups
/// for `None`) and keeps the matching entries, in registry order.
pub fn run_checks(query: Option<&str>) -> Vec<ReportEntry> {
    let groups: Vec<&Group> = GROUPS
        .iter()
        .filter(|g| match query {
            None => true,
            Some(q) => id_matches(g.prefix, q) || id_matches(q, g.prefix),
        })
        .collect();
    let blocks: Vec<Vec<ReportEntry>> = groups.par_iter().map(|g| (g.run)()).collect();
    blocks
        .into_iter()
        .flatten()
        .filter(|e| query.is_none_or(|q| id_matches(&e.id, q)))
        .collect()
}

fn poly(text: &str) -> Result<MultiPoly> {
    parse_poly(text)
}

fn compare_polys(id: String, expected: &MultiPoly, actual: &MultiPoly, detail: impl Into<String>) -> ReportEntry {
    ReportEntry::compare(id, expected.to_string(), actual.to_string(), detail)
}

/// Parses the expected side and compares, turning any failure into a failing entry.
fn check(id: String, expected_text: &str, actual: impl FnOnce() -> Result<MultiPoly>, detail: impl Into<String>) -> ReportEntry {
    let expected = match poly(expected_text) {
        Ok(p) => p,
        Err(e) => return ReportEntry::error(id, expected_text.to_string(), e),
    };
    match actual() {
        Ok(a) => compare_polys(id, &expected, &a, detail),
        Err(e) => ReportEntry::error(id, expected.to_string(), e),
    }
}

fn model(n: usize) -> HypersurfaceModel {
    HypersurfaceModel::new(n).expect("n >= 1")
}

/// `1 + s_1 + … + s_n` with generic symbols of the given family.
fn generic_total(n: usize, family: fn(usize) -> Symbol) -> GradedClass {
    let m = model(n);
    GradedClass::from_coeffs(m, std::iter::once(MultiPoly::one()).chain((1..=n).map(|i| MultiPoly::var(family(i)))))
}

fn tangent_entries() -> Vec<ReportEntry> {
    let mut out = Vec::new();
    for n in 1..=8 {
        let closed = tangent_chern(model(n)).total();
        let rec = tangent_chern_recursive(model(n)).total();
        for i in 1..=n {
            out.push(compare_polys(
                format!("xn[n={n},i={i}]"),
                rec.coeff(i),
                closed.coeff(i),
                "closed form against the recursion",
            ));
        }
    }
    let m = MultiPoly::var(Symbol::M);
    for n in [6, 8] {
        let x = model(n);
        out.push(compare_polys(
            format!("xn.chi[n={n}]"),
            &chi_structure_twist(x, &m),
            &hrr_chi(x, &BundleClass::trivial(x, 1), &m),
            "Riemann-Roch for O_X(m) against the binomial formula",
        ));
    }
    out
}

fn substitute_rank(text: &str, r: usize) -> String {
    text.replace('r', &format!("({r})"))
}

/// Checks the solved classes against the closed forms; rows without a rank
/// are checked for every rank at `n = 6` and `n = 8`.
pub fn ulrich_chern_entries(rows: &[UlrichChernRow]) -> Vec<ReportEntry> {
    let mut out = Vec::new();
    for row in rows {
        let ranks: Vec<usize> = match row.rank {
            Some(r) => vec![r],
            None => (1..=7).collect(),
        };
        let dims: Vec<usize> = [6, 8].into_iter().filter(|&n| row.degree <= n).collect();
        for &n in &dims {
            for &r in &ranks {
                let id = format!("{}[n={n},r={r}]", row.id);
                out.push(check(
                    id,
                    &substitute_rank(row.text, r),
                    || Ok(solve_ulrich_chern(n, r)?.e(row.degree).clone()),
                    format!("e{} of the rank-{r} class on X_{n}", row.degree),
                ));
            }
        }
    }
    out
}

fn top_chern_entries() -> Vec<ReportEntry> {
    let mut out = Vec::new();
    for n in 3..=8 {
        for r in 1..=7 {
            out.push(check(
                format!("ulr.viii[n={n},r={r}]"),
                &ulrich_hilbert(n, r, &MultiPoly::var(Symbol::M)).to_string(),
                || Ok(solve_ulrich_chern(n, r)?.chi_formal(&MultiPoly::var(Symbol::M))),
                "χ(E(m)) against r d C(m+n, n)",
            ));
        }
    }
    for row in TOP_CHERN {
        for r in 1..=7 {
            let id = format!("{}[r={r}]", row.id);
            let sides = solve_ulrich_chern(row.n, r).and_then(|s| top_chern_sides(row.n, &s));
            out.push(match sides {
                Ok((lhs, rhs)) => compare_polys(id, &lhs, &rhs, format!("d e{} against the top Chern formula", row.n)),
                Err(e) => ReportEntry::error(id, String::new(), e),
            });
        }
    }
    out
}

fn rows_with_prefix(prefix: &str) -> Vec<ExteriorRow> {
    EXTERIOR
        .iter()
        .filter(|r| id_matches(r.id, prefix))
        .copied()
        .collect()
}

/// One entry per row: `c_k(Λ^p F)` from the splitting principle.
pub fn exterior_entries(rows: &[ExteriorRow]) -> Vec<ReportEntry> {
    let mut trunc: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for row in rows {
        let t = trunc.entry((row.rank, row.power)).or_default();
        *t = (*t).max(row.degree);
    }
    rows.iter()
        .map(|row| {
            check(
                row.id.to_string(),
                row.text,
                || lambda_formula(row.rank, row.power, trunc[&(row.rank, row.power)])?.chern_poly(row.degree),
                format!("c{}(Λ^{} F), rank {}", row.degree, row.power, row.rank),
            )
        })
        .collect()
}

/// Degree-by-degree Todd class in generic `c1..c8`.
pub fn todd_entries(text: &str) -> Vec<ReportEntry> {
    let expected = match poly(text) {
        Ok(p) => p,
        Err(e) => return vec![ReportEntry::error("td", text.to_string(), e)],
    };
    let td = todd_of_total(&generic_total(8, Symbol::c));
    (0..=8)
        .map(|k| compare_polys(format!("td[{k}]"), &expected.weighted_part(k as u32), td.coeff(k), format!("degree {k}")))
        .collect()
}

/// Degree-by-degree Chern character in generic `f1..f8`.
pub fn chern_character_entries(text: &str) -> Vec<ReportEntry> {
    let expected = match poly(text) {
        Ok(p) => p,
        Err(e) => return vec![ReportEntry::error("ch", text.to_string(), e)],
    };
    let ch = ch_from_total(&MultiPoly::zero(), &generic_total(8, Symbol::f));
    (1..=8)
        .map(|k| compare_polys(format!("ch[{k}]"), &expected.weighted_part(k as u32), ch.coeff(k), format!("degree {k}")))
        .collect()
}

fn generic_todd_6() -> GradedClass {
    todd_of_total(&generic_total(6, Symbol::c))
}

fn riemann_roch_entries(id: &str) -> Vec<ReportEntry> {
    let row = RIEMANN_ROCH.iter().find(|r| r.id == id).expect("known row");
    vec![check(
        row.id.to_string(),
        row.text,
        || {
            let ch = ch_from_total(&MultiPoly::int(row.rank as i64), &generic_total(6, Symbol::f));
            Ok(hrr_density(&ch, &MultiPoly::zero(), &generic_todd_6()))
        },
        format!("χ(F) for rank {} on a sixfold", row.rank),
    )]
}

/// `χ((Λ² F)(t))` on a generic sixfold.
pub fn exterior_chi_entries(rows: &[ExteriorChiRow]) -> Vec<ReportEntry> {
    rows.iter()
        .map(|row| {
            check(
                row.id.to_string(),
                row.text,
                || {
                    let f = BundleClass::generic(model(6), row.rank, Symbol::f);
                    let w = exterior_power(&f, 2)?;
                    let ch = chern_to_ch(&w);
                    Ok(hrr_density(&ch, &MultiPoly::var(Symbol::T), &generic_todd_6()))
                },
                format!("χ((Λ² F)(t)), rank {}", row.rank),
            )
        })
        .collect()
}

fn suz_rows(prefix: &str) -> Vec<UlrichRow> {
    ULRICH_EXTERIOR_CHI
        .iter()
        .filter(|r| id_matches(r.id, prefix))
        .copied()
        .collect()
}

/// `χ((Λ^p E)(m - r(d-1)/2))` for the Ulrich class.
pub fn ulrich_exterior_entries(rows: &[UlrichRow]) -> Vec<ReportEntry> {
    rows.iter()
        .map(|row| {
            let shift = MultiPoly::var(Symbol::M) - half_det_twist(row.rank);
            check(
                row.id.to_string(),
                row.text,
                || chi_exterior_ulrich(row.n, row.rank, row.power, &shift),
                format!("χ((Λ^{} E)(m - {}(d-1)/2)) on X_{}", row.power, row.rank, row.n),
            )
        })
        .collect()
}

fn locus_value(id: &str) -> &'static str {
    LOCUS_VALUES
        .iter()
        .find(|(k, _)| *k == id)
        .map(|(_, v)| *v)
        .expect("known locus value")
}

fn locus_entries(prefix: &str) -> Vec<ReportEntry> {
    let mut out = Vec::new();
    for &(id, n, r) in DEGREE_IDS.iter().filter(|(id, _, _)| id.starts_with(prefix)) {
        out.push(check(
            id.to_string(),
            locus_value(id),
            || Ok(DegeneracyModel::new(n, r)?.degree_of_z()),
            format!("deg Z for n={n}, r={r}"),
        ));
    }
    for &(id, n, r, factor, alpha, beta) in C2_RELATIONS.iter().filter(|e| e.0.starts_with(prefix)) {
        for (slot, text) in [("H_Z^2", alpha), ("K_ZH_Z", beta)] {
            let expected = format!("({text})/({factor})");
            out.push(check(
                format!("{id}[{slot}]"),
                &expected,
                || {
                    let rel = DegeneracyModel::new(n, r)?.c2z_relation();
                    let inv = rel.factor.as_constant().expect("number").recip();
                    let c = if slot == "H_Z^2" { rel.alpha } else { rel.beta };
                    Ok(c.scale(&inv))
                },
                format!("coefficient of {slot} in c2(Z)"),
            ));
        }
    }
    for &(id, n, r, beta, alpha) in CANONICAL_RELATIONS.iter().filter(|e| e.0.starts_with(prefix)) {
        for (slot, text) in [("K_ZH_Z", beta), ("deg", alpha)] {
            out.push(check(
                format!("{id}[{slot}]"),
                text,
                || {
                    let rel = DegeneracyModel::new(n, r)?.canonical_square_relation();
                    Ok(if slot == "deg" { rel.alpha } else { rel.beta })
                },
                format!("coefficient of {slot} in K_Z^2"),
            ));
        }
    }
    out
}

/// The case verdict followed by the intermediate numbers.
pub fn case_entries(n: usize, r: usize) -> Vec<ReportEntry> {
    let id = format!("case.{n}.{r}");
    let report = match run_case(n, r) {
        Ok(c) => c,
        Err(e) => return vec![ReportEntry::error(id, String::new(), e)],
    };
    let product = report
        .stated_factors
        .iter()
        .fold(MultiPoly::one(), |acc, f| &acc * f);
    let expected = product.primitive_part().map(|(_, p)| p).unwrap_or(product);
    let detail = format!(
        "factors {}; constant {}; cofactor {}; integer roots >= 3: {:?}; other integer roots: {:?}",
        report.stated_product_text(),
        report.content,
        report.cofactor,
        report.roots_ge_3,
        report.small_roots
    );
    let mut head = compare_polys(id.clone(), &expected, &report.difference, detail);
    if report.verdict == Verdict::Fail {
        head.status = crate::report::Status::Fail;
    }
    let mut out = vec![head];
    for (name, value) in report.table.entries() {
        let sub = format!("{id}.{name}");
        if let Some((_, text)) = LOCUS_VALUES.iter().find(|(k, _)| *k == sub) {
            out.push(check(sub, text, || Ok(value.clone()), "intersection number"));
        }
    }
    if matches!(report.table, IntersectionTable::Threefold(_)) {
        out.push(compare_polys(
            format!("{id}.split"),
            &MultiPoly::zero(),
            &report.table.split_residual(),
            "K_Z^2 H_Z + H_Z c2(Z) against its two parts",
        ));
    }
    let mismatch: Vec<i64> = (3..=20).filter(|&d| !report.differs_at(d)).collect();
    out.push(ReportEntry::compare(
        format!("{id}.pointwise"),
        "[]".into(),
        format!("{mismatch:?}"),
        "degrees 3..=20 where the two values of χ(O_Z) agree",
    ));
    out
}

fn dgr_entries() -> Vec<ReportEntry> {
    let mut out = Vec::new();
    for (n, r, from) in [(8, 6, 4), (8, 7, 6)] {
        for d in 3..=10 {
            out.push(ReportEntry::compare(
                format!("dgr[n={n},r={r},d={d}]"),
                (d >= from).to_string(),
                check_dgr(n, r, d).to_string(),
                format!("holds from d = {from}"),
            ));
        }
    }
    out
}
