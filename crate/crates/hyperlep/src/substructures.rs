//! Exhaustive enumeration of closed subsets (sub-Hv-groups), their dimension
//! census, and the strict-inclusion lattice with its Hasse reduction.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hypercore::{subset_product, HyperTable, SubsetMask};

/// Largest carrier we will scan all 2^n subsets of.
pub const EXHAUSTIVE_BOUND: usize = 24;

/// Every closed subset of a table, grouped by cardinality.
///
/// Lists are sorted by mask bit pattern, so two runs produce identical
/// censuses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupCensus {
    by_dimension: BTreeMap<usize, Vec<SubsetMask>>,
    total: usize,
}

impl SubgroupCensus {
    pub fn by_dimension(&self) -> &BTreeMap<usize, Vec<SubsetMask>> {
        &self.by_dimension
    }

    pub fn dimension(&self, dim: usize) -> &[SubsetMask] {
        self.by_dimension.get(&dim).map_or(&[], Vec::as_slice)
    }

    pub fn total(&self) -> usize {
        self.total
    }

    /// All members in (dimension, bit-pattern) order.
    pub fn members(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        self.by_dimension.values().flatten().copied()
    }

    pub fn contains(&self, mask: &SubsetMask) -> bool {
        self.by_dimension
            .get(&mask.len())
            .is_some_and(|list| list.binary_search(mask).is_ok())
    }
}

/// The strict-inclusion relation between census members, plus its transitive
/// reduction.  Pairs run (smaller, larger) and are sorted by size then bit
/// pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InclusionLattice {
    pub nodes: Vec<SubsetMask>,
    pub edges: Vec<(SubsetMask, SubsetMask)>,
    pub hasse_edges: Vec<(SubsetMask, SubsetMask)>,
}

fn closed_under(t: &HyperTable, k: &SubsetMask) -> bool {
    for a in k.iter() {
        for b in k.iter() {
            if !t.cell(a, b).is_subset(k) {
                return false;
            }
        }
    }
    true
}

/// True iff a ⊗ b ⊆ k for all a, b in k.
pub fn is_closed(t: &HyperTable, k: &SubsetMask) -> Result<bool> {
    if k.is_empty() {
        return Err(Error::EmptyOperand);
    }
    if k.carrier_size() != t.size() {
        return Err(Error::CarrierMismatch {
            expected: t.size(),
            found: k.carrier_size(),
        });
    }
    Ok(closed_under(t, k))
}

/// Scans all 2^n - 1 non-empty masks and collects every closed subset.
pub fn enumerate_subgroups(t: &HyperTable) -> Result<SubgroupCensus> {
    let n = t.size();
    if n > EXHAUSTIVE_BOUND {
        return Err(Error::EnumerationBound {
            size: n,
            bound: EXHAUSTIVE_BOUND,
        });
    }
    let mut by_dimension: BTreeMap<usize, Vec<SubsetMask>> = BTreeMap::new();
    let mut total = 0;
    for bits in 1..(1u64 << n) {
        let mask = SubsetMask::from_bits(bits, n).expect("bits < 2^n");
        if closed_under(t, &mask) {
            by_dimension.entry(mask.len()).or_default().push(mask);
            total += 1;
        }
    }
    // ascending bits is already sorted per dimension, by construction
    debug_assert!(by_dimension
        .values()
        .all(|v| v.windows(2).all(|w| w[0] < w[1])));
    Ok(SubgroupCensus {
        by_dimension,
        total,
    })
}

/// The least closed superset of `seed`: iterate k ← k ∪ (k ⊗ k) to fixpoint.
pub fn closure_of(t: &HyperTable, seed: &SubsetMask) -> Result<SubsetMask> {
    if seed.is_empty() {
        return Err(Error::EmptyOperand);
    }
    if seed.carrier_size() != t.size() {
        return Err(Error::CarrierMismatch {
            expected: t.size(),
            found: seed.carrier_size(),
        });
    }
    let mut current = *seed;
    loop {
        let next = current.union(&subset_product(t, &current, &current)?);
        if next == current {
            return Ok(current);
        }
        current = next;
    }
}

/// All strict-inclusion pairs between census members, with the Hasse
/// (transitive) reduction.
pub fn inclusion_lattice(census: &SubgroupCensus) -> InclusionLattice {
    let nodes: Vec<SubsetMask> = census.members().collect();
    let mut edges = Vec::new();
    for small in &nodes {
        for large in &nodes {
            if small != large && small.is_subset(large) {
                edges.push((*small, *large));
            }
        }
    }
    let sort_key = |p: &(SubsetMask, SubsetMask)| (p.0.len(), p.0.bits(), p.1.len(), p.1.bits());
    edges.sort_by_key(sort_key);
    let hasse_edges: Vec<(SubsetMask, SubsetMask)> = edges
        .iter()
        .filter(|(small, large)| {
            !nodes.iter().any(|mid| {
                mid != small && mid != large && small.is_subset(mid) && mid.is_subset(large)
            })
        })
        .copied()
        .collect();
    InclusionLattice {
        nodes,
        edges,
        hasse_edges,
    }
}

/// Stricter membership notion than closure: a ⊗ K = K for every a in K.
/// Requires a closed input.
pub fn verify_reproduction_within(t: &HyperTable, k: &SubsetMask) -> Result<bool> {
    if !is_closed(t, k)? {
        return Err(Error::NotClosed);
    }
    for a in k.iter() {
        let sa = t.carrier().singleton(a)?;
        if subset_product(t, &sa, k)? != *k {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conservation::ParticleSet;
    use crate::hypercore::Carrier;

    fn leptons() -> (ParticleSet, HyperTable) {
        let ps = ParticleSet::leptons();
        let t = ps.derive_table();
        (ps, t)
    }

    fn mask(t: &HyperTable, names: &[&str]) -> SubsetMask {
        t.carrier().mask_of_names(names.iter().copied()).unwrap()
    }

    #[test]
    fn closure_examples() {
        let (_, t) = leptons();
        assert!(is_closed(&t, &mask(&t, &["e"])).unwrap());
        assert!(is_closed(&t, &t.carrier().full_mask()).unwrap());
        // annihilation escapes any proper subset containing e and e+
        assert!(!is_closed(&t, &mask(&t, &["e", "e+"])).unwrap());
        assert_eq!(
            is_closed(&t, &SubsetMask::empty(12)),
            Err(Error::EmptyOperand)
        );
    }

    #[test]
    fn census_counts_for_the_derived_lepton_table() {
        // Exhaustive truth for the conservation-derived table.  The reference
        // transcription lists fewer sets at dimensions 2, 4, and 6; the
        // comparison lives in the reproduction harness.
        let (_, t) = leptons();
        let census = enumerate_subgroups(&t).unwrap();
        let counts: BTreeMap<usize, usize> = census
            .by_dimension()
            .iter()
            .map(|(d, v)| (*d, v.len()))
            .collect();
        let expected: BTreeMap<usize, usize> =
            [(1, 12), (2, 30), (3, 16), (4, 12), (6, 10), (12, 1)]
                .into_iter()
                .collect();
        assert_eq!(counts, expected);
        assert_eq!(census.total(), 81);
        for dim in [5, 7, 8, 9, 10, 11] {
            assert!(census.dimension(dim).is_empty());
        }
    }

    #[test]
    fn census_contains_published_examples() {
        let (_, t) = leptons();
        let census = enumerate_subgroups(&t).unwrap();
        assert!(census.contains(&mask(&t, &["e"])));
        assert!(census.contains(&mask(&t, &["e+", "mu+", "nu_tau"])));
        assert!(census.contains(&t.carrier().full_mask()));
        // the conjugate of {e, nu_e}, absent from the reference lists, is
        // genuinely closed
        assert!(census.contains(&mask(&t, &["e+", "nubar_e"])));
        assert!(!census.contains(&mask(&t, &["e", "e+"])));
    }

    #[test]
    fn one_element_table_has_one_subgroup() {
        let carrier = Carrier::new(vec!["n"]).unwrap();
        let t = HyperTable::new(carrier, vec![SubsetMask::full(1)]).unwrap();
        let census = enumerate_subgroups(&t).unwrap();
        assert_eq!(census.total(), 1);
        assert_eq!(census.dimension(1), &[SubsetMask::full(1)]);
    }

    #[test]
    fn enumeration_bound_is_enforced() {
        let names: Vec<String> = (0..25).map(|i| format!("x{i}")).collect();
        let n = names.len();
        let carrier = Carrier::new(names).unwrap();
        let t = HyperTable::new(carrier, vec![SubsetMask::full(n); n * n]).unwrap();
        assert_eq!(
            enumerate_subgroups(&t),
            Err(Error::EnumerationBound {
                size: 25,
                bound: EXHAUSTIVE_BOUND
            })
        );
    }

    #[test]
    fn closure_of_examples() {
        let (_, t) = leptons();
        let e = mask(&t, &["e"]);
        assert_eq!(closure_of(&t, &e).unwrap(), e);
        // e ⊗ e+ covers the carrier, so the closure is everything
        let seed = mask(&t, &["e", "e+"]);
        assert_eq!(closure_of(&t, &seed).unwrap(), t.carrier().full_mask());
        assert_eq!(
            closure_of(&t, &SubsetMask::empty(12)),
            Err(Error::EmptyOperand)
        );
    }

    #[test]
    fn closure_is_idempotent_and_agrees_with_is_closed() {
        let (_, t) = leptons();
        // exhaustive over all non-empty masks: closed ⇔ closure is a fixpoint
        for bits in 1..(1u64 << 12) {
            let m = SubsetMask::from_bits(bits, 12).unwrap();
            let closed = is_closed(&t, &m).unwrap();
            let closure = closure_of(&t, &m).unwrap();
            assert_eq!(closed, closure == m);
            assert_eq!(closure_of(&t, &closure).unwrap(), closure);
        }
    }

    #[test]
    fn lattice_contains_published_inclusions() {
        let (_, t) = leptons();
        let census = enumerate_subgroups(&t).unwrap();
        let lattice = inclusion_lattice(&census);
        let pair = (mask(&t, &["e"]), mask(&t, &["e", "mu"]));
        assert!(lattice.edges.contains(&pair));
        let pair = (mask(&t, &["e", "mu"]), mask(&t, &["e", "mu", "tau"]));
        assert!(lattice.edges.contains(&pair));
        // every 6-dimensional member sits below the full carrier
        let full = t.carrier().full_mask();
        for member in census.dimension(6) {
            assert!(lattice.edges.contains(&(*member, full)));
        }
    }

    #[test]
    fn lattice_stats_for_the_derived_census() {
        let (_, t) = leptons();
        let census = enumerate_subgroups(&t).unwrap();
        let lattice = inclusion_lattice(&census);
        assert_eq!(lattice.nodes.len(), 81);
        assert_eq!(lattice.edges.len(), 544);
        assert_eq!(lattice.hasse_edges.len(), 222);
    }

    #[test]
    fn hasse_reduction_reconstructs_edges_transitively() {
        let (_, t) = leptons();
        let census = enumerate_subgroups(&t).unwrap();
        let lattice = inclusion_lattice(&census);
        // transitive closure of hasse_edges == edges
        let mut reach: std::collections::BTreeSet<(SubsetMask, SubsetMask)> =
            lattice.hasse_edges.iter().copied().collect();
        loop {
            let mut grew = false;
            let snapshot: Vec<_> = reach.iter().copied().collect();
            for &(a, b) in &snapshot {
                for &(c, d) in &snapshot {
                    if b == c && reach.insert((a, d)) {
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        let edges: std::collections::BTreeSet<_> = lattice.edges.iter().copied().collect();
        assert_eq!(reach, edges);
        // no hasse edge is implied by two others
        for (a, b) in &lattice.hasse_edges {
            assert!(!lattice
                .nodes
                .iter()
                .any(|m| { m != a && m != b && a.is_subset(m) && m.is_subset(b) }));
        }
    }

    #[test]
    fn nonempty_intersections_of_closed_sets_are_closed() {
        let (_, t) = leptons();
        let census = enumerate_subgroups(&t).unwrap();
        let members: Vec<SubsetMask> = census.members().collect();
        for a in &members {
            for b in &members {
                let meet = a.intersection(b);
                if !meet.is_empty() {
                    assert!(is_closed(&t, &meet).unwrap());
                }
            }
        }
    }

    #[test]
    fn census_is_closed_under_conjugation() {
        let (ps, t) = leptons();
        let census = enumerate_subgroups(&t).unwrap();
        let conj = ps.conjugation();
        for member in census.members() {
            assert!(census.contains(&conj.apply_mask(&member)));
        }
    }

    #[test]
    fn reproduction_within_examples() {
        let (_, t) = leptons();
        assert!(verify_reproduction_within(&t, &mask(&t, &["e"])).unwrap());
        assert!(verify_reproduction_within(&t, &t.carrier().full_mask()).unwrap());
        assert_eq!(
            verify_reproduction_within(&t, &mask(&t, &["e", "e+"])),
            Err(Error::NotClosed)
        );
    }

    #[test]
    fn reproduction_within_holds_on_every_census_member() {
        // follows from closure plus {x, y} ⊆ x ⊗ y
        let (_, t) = leptons();
        let census = enumerate_subgroups(&t).unwrap();
        for member in census.members() {
            assert!(verify_reproduction_within(&t, &member).unwrap());
        }
    }
}
