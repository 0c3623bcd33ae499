//! Executable predicates for the hyperstructure hierarchy: commutativity,
//! reproduction, weak and strong associativity, and the exhaustive
//! associativity-violation scan.

use std::fmt;

use crate::hypercore::{subset_product, HyperTable, SubsetMask};

/// Where a structure lands in the hierarchy.
///
/// A hypergroup demands strong associativity plus reproduction; an Hv-group
/// weakens associativity to non-empty intersection of the two association
/// orders.  Strong associativity implies weak, so a hypergroup is always also
/// an Hv-group; the combined label records that both checks passed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Hypergroupoid,
    Semihypergroup,
    Hypergroup,
    HvGroup,
    HvGroupAndHypergroup,
}

impl Classification {
    /// True when the structure satisfies the Hv-group axioms (weak
    /// associativity and reproduction), possibly more.
    pub fn is_hv_group(&self) -> bool {
        matches!(
            self,
            Classification::HvGroup
                | Classification::Hypergroup
                | Classification::HvGroupAndHypergroup
        )
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Classification::Hypergroupoid => "hypergroupoid",
            Classification::Semihypergroup => "semihypergroup",
            Classification::Hypergroup => "hypergroup",
            Classification::HvGroup => "Hv-group",
            Classification::HvGroupAndHypergroup => "Hv-group and hypergroup",
        };
        f.write_str(s)
    }
}

/// Outcome of running every axiom predicate over one table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub commutative: bool,
    pub reproductive: bool,
    pub weakly_associative: bool,
    pub strongly_associative: bool,
    pub classification: Classification,
}

/// How one triple fails associativity, with `left` = (a⊗b)⊗c and
/// `right` = a⊗(b⊗c).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    /// right ⊄ left
    RightNotInLeft,
    /// left ⊄ right
    LeftNotInRight,
    /// left ≠ right
    Unequal,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ViolationKind::RightNotInLeft => "right-not-in-left",
            ViolationKind::LeftNotInRight => "left-not-in-right",
            ViolationKind::Unequal => "unequal",
        };
        f.write_str(s)
    }
}

/// One associativity failure at triple (a, b, c).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleViolation {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub left: SubsetMask,
    pub right: SubsetMask,
    pub kind: ViolationKind,
}

/// The three violation lists, each in lexicographic (a, b, c) order.
///
/// `unequal` always equals the union of the other two as a set of triples.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ViolationLists {
    pub right_not_in_left: Vec<TripleViolation>,
    pub left_not_in_right: Vec<TripleViolation>,
    pub unequal: Vec<TripleViolation>,
}

impl ViolationLists {
    pub fn is_empty(&self) -> bool {
        self.unequal.is_empty()
    }
}

fn assoc_sides(t: &HyperTable, a: usize, b: usize, c: usize) -> (SubsetMask, SubsetMask) {
    let sa = t.carrier().singleton(a).unwrap();
    let sc = t.carrier().singleton(c).unwrap();
    let left = subset_product(t, &t.cell(a, b), &sc).unwrap();
    let right = subset_product(t, &sa, &t.cell(b, c)).unwrap();
    (left, right)
}

/// cells[x][y] == cells[y][x] everywhere.
pub fn is_commutative(t: &HyperTable) -> bool {
    let n = t.size();
    (0..n).all(|x| (x..n).all(|y| t.cell(x, y) == t.cell(y, x)))
}

/// x ⊗ H = H ⊗ x = H for every x; returns the failing indices.
pub fn check_reproduction(t: &HyperTable) -> (bool, Vec<usize>) {
    let n = t.size();
    let full = t.carrier().full_mask();
    let mut failures = Vec::new();
    for x in 0..n {
        let mut row = SubsetMask::empty(n);
        let mut col = SubsetMask::empty(n);
        for y in 0..n {
            row = row.union(&t.cell(x, y));
            col = col.union(&t.cell(y, x));
        }
        if row != full || col != full {
            failures.push(x);
        }
    }
    (failures.is_empty(), failures)
}

/// (x⊗y)⊗z ∩ x⊗(y⊗z) ≠ ∅ for every triple; returns the failing triples.
pub fn check_weak_associativity(t: &HyperTable) -> (bool, Vec<(usize, usize, usize)>) {
    let n = t.size();
    let mut failures = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let (left, right) = assoc_sides(t, a, b, c);
                if left.intersection(&right).is_empty() {
                    failures.push((a, b, c));
                }
            }
        }
    }
    (failures.is_empty(), failures)
}

/// Scans all n^3 triples and collects every containment failure between the
/// two association orders.
pub fn associativity_violations(t: &HyperTable) -> ViolationLists {
    let n = t.size();
    let mut lists = ViolationLists::default();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let (left, right) = assoc_sides(t, a, b, c);
                if !right.is_subset(&left) {
                    lists.right_not_in_left.push(TripleViolation {
                        a,
                        b,
                        c,
                        left,
                        right,
                        kind: ViolationKind::RightNotInLeft,
                    });
                }
                if !left.is_subset(&right) {
                    lists.left_not_in_right.push(TripleViolation {
                        a,
                        b,
                        c,
                        left,
                        right,
                        kind: ViolationKind::LeftNotInRight,
                    });
                }
                if left != right {
                    lists.unequal.push(TripleViolation {
                        a,
                        b,
                        c,
                        left,
                        right,
                        kind: ViolationKind::Unequal,
                    });
                }
            }
        }
    }
    lists
}

/// (x⊗y)⊗z == x⊗(y⊗z) for every triple.
pub fn is_strongly_associative(t: &HyperTable) -> bool {
    associativity_violations(t).is_empty()
}

/// Runs every predicate and reports the resulting classification.
pub fn classify(t: &HyperTable) -> AxiomReport {
    let commutative = is_commutative(t);
    let (reproductive, _) = check_reproduction(t);
    let (weakly_associative, _) = check_weak_associativity(t);
    let strongly_associative = is_strongly_associative(t);
    let classification = match (weakly_associative, strongly_associative, reproductive) {
        (_, true, true) => Classification::HvGroupAndHypergroup,
        (true, false, true) => Classification::HvGroup,
        (_, true, false) => Classification::Semihypergroup,
        _ => Classification::Hypergroupoid,
    };
    AxiomReport {
        commutative,
        reproductive,
        weakly_associative,
        strongly_associative,
        classification,
    }
}

/// Convenience used by tests and the verification harness: all tables built
/// from 2 elements with every cell drawn from the non-empty subsets.
#[doc(hidden)]
pub fn all_two_element_tables() -> impl Iterator<Item = HyperTable> {
    let carrier = crate::hypercore::Carrier::new(vec!["0", "1"]).unwrap();
    let masks: Vec<SubsetMask> = (1..4u64)
        .map(|bits| SubsetMask::from_bits(bits, 2).unwrap())
        .collect();
    let mut tables = Vec::new();
    for c00 in &masks {
        for c01 in &masks {
            for c10 in &masks {
                for c11 in &masks {
                    tables.push(
                        HyperTable::new(carrier.clone(), vec![*c00, *c01, *c10, *c11]).unwrap(),
                    );
                }
            }
        }
    }
    tables.into_iter()
}
