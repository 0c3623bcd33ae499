//! Output rendering: aligned text tables, CSV, JSON documents that re-parse
//! to the originals, DOT export of the inclusion lattice, and the optional
//! unicode transliteration of element names.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::axioms::{AxiomReport, TripleViolation, ViolationLists};
use crate::error::{Error, Result};
use crate::hypercore::{Carrier, HyperTable, SubsetMask};
use crate::refdata::Fixtures;
use crate::reproduce::ReproductionReport;
use crate::substructures::{InclusionLattice, SubgroupCensus};

/// ASCII name -> display glyphs: `nu_mu` becomes νμ, `tau+` becomes τ⁺,
/// `nubar_e` becomes ν̄e.  Unknown names pass through unchanged.
pub fn display_name(name: &str, unicode: bool) -> String {
    if !unicode {
        return name.to_string();
    }
    let (base, plus) = match name.strip_suffix('+') {
        Some(base) => (base, "\u{207a}"),
        None => (name, ""),
    };
    let greek = |token: &str| match token {
        "mu" => "\u{03bc}".to_string(),
        "tau" => "\u{03c4}".to_string(),
        other => other.to_string(),
    };
    let body = if let Some(rest) = base.strip_prefix("nubar_") {
        format!("\u{03bd}\u{0304}{}", greek(rest))
    } else if let Some(rest) = base.strip_prefix("nu_") {
        format!("\u{03bd}{}", greek(rest))
    } else {
        greek(base)
    };
    format!("{body}{plus}")
}

fn cell_names(carrier: &Carrier, mask: &SubsetMask, unicode: bool) -> Vec<String> {
    mask.names(carrier)
        .map(|n| display_name(n, unicode))
        .collect()
}

fn cell_text(carrier: &Carrier, mask: &SubsetMask, unicode: bool) -> String {
    cell_names(carrier, mask, unicode).join(",")
}

// ---------------------------------------------------------------------------
// hypertable

pub fn render_table_text(t: &HyperTable, unicode: bool) -> String {
    let carrier = t.carrier();
    let n = t.size();
    let mut grid: Vec<Vec<String>> = Vec::with_capacity(n + 1);
    let mut header = vec!["(*)".to_string()];
    header.extend((0..n).map(|y| display_name(carrier.name(y), unicode)));
    grid.push(header);
    for x in 0..n {
        let mut row = vec![display_name(carrier.name(x), unicode)];
        row.extend((0..n).map(|y| cell_text(carrier, &t.cell(x, y), unicode)));
        grid.push(row);
    }
    let widths: Vec<usize> = (0..=n)
        .map(|c| {
            grid.iter()
                .map(|row| row[c].chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in &grid {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, cell)| {
                let pad = widths[c] - cell.chars().count();
                format!("{}{}", cell, " ".repeat(pad))
            })
            .collect();
        let _ = writeln!(out, "{}", line.join(" | ").trim_end());
    }
    out
}

pub fn render_table_csv(t: &HyperTable, unicode: bool) -> String {
    let carrier = t.carrier();
    let mut out = String::from("row,col,cell\n");
    for x in 0..t.size() {
        for y in 0..t.size() {
            let _ = writeln!(
                out,
                "{},{},{}",
                display_name(carrier.name(x), unicode),
                display_name(carrier.name(y), unicode),
                cell_names(carrier, &t.cell(x, y), unicode).join(" ")
            );
        }
    }
    out
}

pub fn parse_table_csv(text: &str) -> Result<HyperTable> {
    let mut rows: Vec<(String, String, Vec<String>)> = Vec::new();
    for (lineno, line) in text.lines().enumerate().skip(1) {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.splitn(3, ',').collect();
        if fields.len() != 3 {
            return Err(Error::Parse {
                line: lineno + 1,
                message: "expected row,col,cell".into(),
            });
        }
        rows.push((
            fields[0].to_string(),
            fields[1].to_string(),
            fields[2].split_whitespace().map(String::from).collect(),
        ));
    }
    let mut names: Vec<String> = Vec::new();
    for (row, _, _) in &rows {
        if !names.contains(row) {
            names.push(row.clone());
        }
    }
    let carrier = Carrier::new(names)?;
    let n = carrier.size();
    let mut cells = vec![SubsetMask::empty(n); n * n];
    for (row, col, members) in &rows {
        let x = carrier
            .index_of(row)
            .ok_or_else(|| Error::UnknownParticle(row.clone()))?;
        let y = carrier
            .index_of(col)
            .ok_or_else(|| Error::UnknownParticle(col.clone()))?;
        cells[x * n + y] = carrier.mask_of_names(members.iter().map(String::as_str))?;
    }
    HyperTable::new(carrier, cells)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDoc {
    pub carrier: Vec<String>,
    pub cells: Vec<Vec<Vec<String>>>,
}

pub fn table_doc(t: &HyperTable, unicode: bool) -> TableDoc {
    let carrier = t.carrier();
    TableDoc {
        carrier: carrier.names().map(|n| display_name(n, unicode)).collect(),
        cells: (0..t.size())
            .map(|x| {
                (0..t.size())
                    .map(|y| cell_names(carrier, &t.cell(x, y), unicode))
                    .collect()
            })
            .collect(),
    }
}

pub fn table_from_doc(doc: &TableDoc) -> Result<HyperTable> {
    let carrier = Carrier::new(doc.carrier.clone())?;
    let n = carrier.size();
    if doc.cells.len() != n || doc.cells.iter().any(|row| row.len() != n) {
        return Err(Error::CarrierMismatch {
            expected: n,
            found: doc.cells.len(),
        });
    }
    let mut cells = Vec::with_capacity(n * n);
    for row in &doc.cells {
        for cell in row {
            cells.push(carrier.mask_of_names(cell.iter().map(String::as_str))?);
        }
    }
    HyperTable::new(carrier, cells)
}

pub fn render_table_json(t: &HyperTable, unicode: bool) -> String {
    serde_json::to_string_pretty(&table_doc(t, unicode)).expect("doc serializes")
}

// ---------------------------------------------------------------------------
// axiom report

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDoc {
    pub carrier: Vec<String>,
    pub commutative: bool,
    pub reproductive: bool,
    pub weakly_associative: bool,
    pub strongly_associative: bool,
    pub classification: String,
    pub triples_checked: usize,
    pub unequal_triples: usize,
}

pub fn check_doc(
    t: &HyperTable,
    report: &AxiomReport,
    lists: &ViolationLists,
    unicode: bool,
) -> CheckDoc {
    CheckDoc {
        carrier: t
            .carrier()
            .names()
            .map(|n| display_name(n, unicode))
            .collect(),
        commutative: report.commutative,
        reproductive: report.reproductive,
        weakly_associative: report.weakly_associative,
        strongly_associative: report.strongly_associative,
        classification: report.classification.to_string(),
        triples_checked: t.size().pow(3),
        unequal_triples: lists.unequal.len(),
    }
}

pub fn render_check_text(doc: &CheckDoc) -> String {
    let verdict = |b: bool| if b { "holds" } else { "FAILS" };
    let mut out = String::new();
    let _ = writeln!(out, "carrier: {} elements", doc.carrier.len());
    let _ = writeln!(
        out,
        "commutative: {}",
        if doc.commutative { "yes" } else { "no" }
    );
    let _ = writeln!(
        out,
        "reproduction: {} for all {} elements",
        verdict(doc.reproductive),
        doc.carrier.len()
    );
    let _ = writeln!(
        out,
        "weak associativity: {} over all {} triples",
        verdict(doc.weakly_associative),
        doc.triples_checked
    );
    let _ = writeln!(
        out,
        "strong associativity: {} ({} unequal triples)",
        verdict(doc.strongly_associative),
        doc.unequal_triples
    );
    let prefix = if doc.commutative { "abelian " } else { "" };
    let _ = writeln!(out, "classification: {}{}", prefix, doc.classification);
    out
}

pub fn render_check_csv(doc: &CheckDoc) -> String {
    let mut out = String::from("key,value\n");
    let _ = writeln!(out, "carrier_size,{}", doc.carrier.len());
    let _ = writeln!(out, "commutative,{}", doc.commutative);
    let _ = writeln!(out, "reproductive,{}", doc.reproductive);
    let _ = writeln!(out, "weakly_associative,{}", doc.weakly_associative);
    let _ = writeln!(out, "strongly_associative,{}", doc.strongly_associative);
    let _ = writeln!(out, "classification,{}", doc.classification);
    let _ = writeln!(out, "triples_checked,{}", doc.triples_checked);
    let _ = writeln!(out, "unequal_triples,{}", doc.unequal_triples);
    out
}

// ---------------------------------------------------------------------------
// violations

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationEntry {
    pub a: String,
    pub b: String,
    pub c: String,
    pub kind: String,
    pub left: Vec<String>,
    pub right: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationListsDoc {
    pub right_not_in_left: Vec<ViolationEntry>,
    pub left_not_in_right: Vec<ViolationEntry>,
    pub unequal: Vec<ViolationEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationsDoc {
    pub carrier: Vec<String>,
    pub violations: ViolationListsDoc,
}

fn violation_entry(carrier: &Carrier, v: &TripleViolation, unicode: bool) -> ViolationEntry {
    ViolationEntry {
        a: display_name(carrier.name(v.a), unicode),
        b: display_name(carrier.name(v.b), unicode),
        c: display_name(carrier.name(v.c), unicode),
        kind: v.kind.to_string(),
        left: cell_names(carrier, &v.left, unicode),
        right: cell_names(carrier, &v.right, unicode),
    }
}

pub fn violations_doc(t: &HyperTable, lists: &ViolationLists, unicode: bool) -> ViolationsDoc {
    let carrier = t.carrier();
    let convert = |vs: &[TripleViolation]| {
        vs.iter()
            .map(|v| violation_entry(carrier, v, unicode))
            .collect::<Vec<_>>()
    };
    ViolationsDoc {
        carrier: carrier.names().map(|n| display_name(n, unicode)).collect(),
        violations: ViolationListsDoc {
            right_not_in_left: convert(&lists.right_not_in_left),
            left_not_in_right: convert(&lists.left_not_in_right),
            unequal: convert(&lists.unequal),
        },
    }
}

pub fn render_violations_text(doc: &ViolationsDoc) -> String {
    let mut out = String::new();
    let sections = [
        (
            "right-not-in-left  a(*)(b(*)c) not within (a(*)b)(*)c",
            &doc.violations.right_not_in_left,
        ),
        (
            "left-not-in-right  (a(*)b)(*)c not within a(*)(b(*)c)",
            &doc.violations.left_not_in_right,
        ),
        (
            "unequal            (a(*)b)(*)c differs from a(*)(b(*)c)",
            &doc.violations.unequal,
        ),
    ];
    for (title, entries) in sections {
        let _ = writeln!(out, "{title}: {} triples", entries.len());
        for e in entries.iter() {
            let _ = writeln!(
                out,
                "  [{},{},{}]  left={{{}}}  right={{{}}}",
                e.a,
                e.b,
                e.c,
                e.left.join(","),
                e.right.join(",")
            );
        }
    }
    out
}

pub fn render_violations_csv(doc: &ViolationsDoc) -> String {
    let mut out = String::from("a,b,c,kind,left,right\n");
    for list in [
        &doc.violations.right_not_in_left,
        &doc.violations.left_not_in_right,
        &doc.violations.unequal,
    ] {
        for e in list {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                e.a,
                e.b,
                e.c,
                e.kind,
                e.left.join(" "),
                e.right.join(" ")
            );
        }
    }
    out
}

// ---------------------------------------------------------------------------
// census and lattice

/// Deterministic labels for computed census members: position in the
/// bit-pattern-sorted list within each dimension.
pub fn census_labels(census: &SubgroupCensus) -> BTreeMap<SubsetMask, String> {
    let mut labels = BTreeMap::new();
    for (dim, list) in census.by_dimension() {
        for (i, mask) in list.iter().enumerate() {
            labels.insert(*mask, format!("L{}_{}", dim, i + 1));
        }
    }
    labels
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusDimDoc {
    pub dimension: usize,
    pub subgroups: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusDoc {
    pub carrier: Vec<String>,
    pub census: Vec<CensusDimDoc>,
    pub total: usize,
}

pub fn census_doc(t: &HyperTable, census: &SubgroupCensus, unicode: bool) -> CensusDoc {
    let carrier = t.carrier();
    CensusDoc {
        carrier: carrier.names().map(|n| display_name(n, unicode)).collect(),
        census: census
            .by_dimension()
            .iter()
            .map(|(dim, list)| CensusDimDoc {
                dimension: *dim,
                subgroups: list
                    .iter()
                    .map(|m| cell_names(carrier, m, unicode))
                    .collect(),
            })
            .collect(),
        total: census.total(),
    }
}

/// Text census listing.  When the carrier matches the reference fixtures, the
/// published label of each set (or "not listed") is shown so the two
/// enumerations can be matched set-wise.
pub fn render_census_text(
    t: &HyperTable,
    census: &SubgroupCensus,
    fixtures: Option<&Fixtures>,
    unicode: bool,
) -> String {
    let carrier = t.carrier();
    let labels = census_labels(census);
    let mut out = String::new();
    let counts: Vec<String> = census
        .by_dimension()
        .iter()
        .map(|(d, v)| format!("{}:{}", d, v.len()))
        .collect();
    let _ = writeln!(
        out,
        "closed subsets: {} total (by dimension {})",
        census.total(),
        counts.join(" ")
    );
    for (dim, list) in census.by_dimension() {
        let _ = writeln!(out, "dimension {dim}: {} subgroups", list.len());
        for mask in list {
            let label = &labels[mask];
            let annotation = match fixtures {
                Some(f) => match f.label_of(mask) {
                    Some(reference) => format!("  [reference {reference}]"),
                    None => "  [not listed in reference]".to_string(),
                },
                None => String::new(),
            };
            let _ = writeln!(
                out,
                "  {label} = {{{}}}{annotation}",
                cell_text(carrier, mask, unicode)
            );
        }
    }
    out
}

pub fn render_census_csv(t: &HyperTable, census: &SubgroupCensus, unicode: bool) -> String {
    let carrier = t.carrier();
    let labels = census_labels(census);
    let mut out = String::from("dimension,label,elements\n");
    for (dim, list) in census.by_dimension() {
        for mask in list {
            let _ = writeln!(
                out,
                "{dim},{},{}",
                labels[mask],
                cell_names(carrier, mask, unicode).join(" ")
            );
        }
    }
    out
}

/// DOT digraph of the Hasse reduction, deterministic node and edge order.
pub fn render_lattice_dot(
    t: &HyperTable,
    census: &SubgroupCensus,
    lattice: &InclusionLattice,
    unicode: bool,
) -> String {
    let carrier = t.carrier();
    let labels = census_labels(census);
    let mut out = String::from("digraph inclusion_lattice {\n");
    out.push_str("  rankdir=BT;\n  node [shape=box];\n");
    for mask in census.members() {
        let _ = writeln!(
            out,
            "  \"{}\" [label=\"{} = {{{}}}\"];",
            labels[&mask],
            labels[&mask],
            cell_text(carrier, &mask, unicode)
        );
    }
    for (small, large) in &lattice.hasse_edges {
        let _ = writeln!(out, "  \"{}\" -> \"{}\";", labels[small], labels[large]);
    }
    out.push_str("}\n");
    out
}

// ---------------------------------------------------------------------------
// reproduction report

pub fn render_reproduction_text(report: &ReproductionReport, fixtures: &Fixtures) -> String {
    let mut out = String::from("derived results vs embedded reference transcription\n\n");
    for claim in &report.claims {
        let tag = if claim.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "[{tag}] {} — {}", claim.name, claim.detail);
    }
    let failed = report.claims.len() - report.passed_count();
    let _ = writeln!(
        out,
        "\n{} claims: {} passed, {} failed",
        report.claims.len(),
        report.passed_count(),
        failed
    );
    let _ = writeln!(
        out,
        "\nnormalizations applied to the reference transcription:"
    );
    for note in &fixtures.typo_notes {
        let _ = writeln!(out, "  - {note}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms;
    use crate::conservation::ParticleSet;
    use crate::substructures;

    fn lepton_table() -> HyperTable {
        ParticleSet::leptons().derive_table()
    }

    #[test]
    fn display_names_transliterate() {
        assert_eq!(display_name("e", true), "e");
        assert_eq!(display_name("mu+", true), "\u{03bc}\u{207a}");
        assert_eq!(display_name("nu_tau", true), "\u{03bd}\u{03c4}");
        assert_eq!(display_name("nubar_e", true), "\u{03bd}\u{0304}e");
        assert_eq!(display_name("nubar_mu", false), "nubar_mu");
        assert_eq!(display_name("proton", true), "proton");
    }

    #[test]
    fn table_json_round_trips() {
        let t = lepton_table();
        let json = render_table_json(&t, false);
        let doc: TableDoc = serde_json::from_str(&json).unwrap();
        assert_eq!(doc, table_doc(&t, false));
        assert_eq!(table_from_doc(&doc).unwrap(), t);
    }

    #[test]
    fn table_csv_round_trips() {
        let t = lepton_table();
        let csv = render_table_csv(&t, false);
        assert_eq!(parse_table_csv(&csv).unwrap(), t);
    }

    #[test]
    fn table_text_shows_annihilation_row() {
        let t = lepton_table();
        let text = render_table_text(&t, false);
        // the (e, e+) cell lists the full carrier
        let row = text.lines().nth(1).unwrap();
        assert!(row.starts_with("e "));
        assert!(row.contains("e,nu_e,e+,nubar_e,mu,nu_mu,mu+,nubar_mu,tau,nu_tau,tau+,nubar_tau"));
    }

    #[test]
    fn check_doc_for_leptons() {
        let t = lepton_table();
        let report = axioms::classify(&t);
        let lists = axioms::associativity_violations(&t);
        let doc = check_doc(&t, &report, &lists, false);
        assert_eq!(doc.triples_checked, 1728);
        assert_eq!(doc.unequal_triples, 0);
        let text = render_check_text(&doc);
        assert!(text.contains("classification: abelian Hv-group and hypergroup"));
        let json: CheckDoc = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
        assert_eq!(json, doc);
    }

    #[test]
    fn violations_doc_round_trips() {
        let ps = ParticleSet::leptons();
        let t = ps.derive_table();
        // perturb to produce non-empty lists
        let row = ps.carrier().index_of("nubar_e").unwrap();
        let col = ps.carrier().index_of("e+").unwrap();
        let bad = ps.carrier().mask_of_names(["e+", "nubar_mu"]).unwrap();
        let t = t.with_cell(row, col, bad).unwrap();
        let lists = axioms::associativity_violations(&t);
        let doc = violations_doc(&t, &lists, false);
        let json: ViolationsDoc =
            serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
        assert_eq!(json, doc);
        let text = render_violations_text(&doc);
        assert!(text.contains("unequal"));
        assert!(render_violations_csv(&doc).lines().count() > 27);
    }

    #[test]
    fn census_doc_and_labels() {
        let t = lepton_table();
        let census = substructures::enumerate_subgroups(&t).unwrap();
        let doc = census_doc(&t, &census, false);
        assert_eq!(doc.total, 81);
        let labels = census_labels(&census);
        assert_eq!(labels.len(), 81);
        // smallest bit pattern at dimension 1 is {e}
        let e = t.carrier().mask_of_names(["e"]).unwrap();
        assert_eq!(labels[&e], "L1_1");
        let json: CensusDoc = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
        assert_eq!(json, doc);
    }

    #[test]
    fn lattice_dot_is_deterministic_and_well_formed() {
        let t = lepton_table();
        let census = substructures::enumerate_subgroups(&t).unwrap();
        let lattice = substructures::inclusion_lattice(&census);
        let dot = render_lattice_dot(&t, &census, &lattice, false);
        assert_eq!(dot, render_lattice_dot(&t, &census, &lattice, false));
        assert!(dot.starts_with("digraph inclusion_lattice {"));
        assert!(dot.trim_end().ends_with('}'));
        assert_eq!(dot.matches(" -> ").count(), lattice.hasse_edges.len());
    }
}
