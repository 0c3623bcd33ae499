//! Carrier sets, subset masks, finite binary hyperoperation tables, and the
//! general n-ary subset-extension machinery.
//!
//! A hyperoperation sends a pair of carrier elements to a *non-empty subset*
//! of the carrier.  Subsets are fixed-width bitmasks, so the exhaustive scans
//! elsewhere in the crate (all 2^n candidate subsets, all n^3 triples) reduce
//! to O(1) word operations per step.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Hard upper bound on carrier size imposed by the `u64` mask representation.
pub const MASK_BITS: usize = 64;

/// An ordered finite set of named elements.
///
/// Indices are assigned in declaration order and are the currency used by
/// every mask and table in the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Carrier {
    names: Vec<String>,
}

impl Carrier {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        if names.len() > MASK_BITS {
            return Err(Error::CarrierTooLarge {
                size: names.len(),
                bound: MASK_BITS,
            });
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::EmptyName);
            }
            if names[..i].contains(name) {
                return Err(Error::DuplicateName(name.clone()));
            }
        }
        Ok(Carrier { names })
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(String::as_str)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Mask with every element set.
    pub fn full_mask(&self) -> SubsetMask {
        SubsetMask::full(self.size())
    }

    pub fn singleton(&self, index: usize) -> Result<SubsetMask> {
        SubsetMask::singleton(index, self.size())
    }

    /// Mask built from element names; errors on unknown names.
    pub fn mask_of_names<'a, I: IntoIterator<Item = &'a str>>(
        &self,
        names: I,
    ) -> Result<SubsetMask> {
        let mut mask = SubsetMask::empty(self.size());
        for name in names {
            let idx = self
                .index_of(name)
                .ok_or_else(|| Error::UnknownParticle(name.to_string()))?;
            mask = mask.with(idx)?;
        }
        Ok(mask)
    }
}

/// A subset of a carrier, as a bitmask over element indices.
///
/// The empty mask is representable (it is the natural zero for unions) but is
/// never a legal hyperoperation output; table constructors reject it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetMask {
    bits: u64,
    carrier_size: u8,
}

impl SubsetMask {
    pub fn empty(carrier_size: usize) -> Self {
        debug_assert!(carrier_size <= MASK_BITS);
        SubsetMask {
            bits: 0,
            carrier_size: carrier_size as u8,
        }
    }

    pub fn full(carrier_size: usize) -> Self {
        debug_assert!((1..=MASK_BITS).contains(&carrier_size));
        let bits = if carrier_size == MASK_BITS {
            u64::MAX
        } else {
            (1u64 << carrier_size) - 1
        };
        SubsetMask {
            bits,
            carrier_size: carrier_size as u8,
        }
    }

    pub fn singleton(index: usize, carrier_size: usize) -> Result<Self> {
        Self::empty(carrier_size).with(index)
    }

    /// Mask from raw bits; rejects bits at or beyond `carrier_size`.
    pub fn from_bits(bits: u64, carrier_size: usize) -> Result<Self> {
        let full = Self::full(carrier_size);
        if bits & !full.bits != 0 {
            return Err(Error::IndexOutOfRange {
                index: (63 - (bits & !full.bits).leading_zeros()) as usize,
                size: carrier_size,
            });
        }
        Ok(SubsetMask {
            bits,
            carrier_size: carrier_size as u8,
        })
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(
        indices: I,
        carrier_size: usize,
    ) -> Result<Self> {
        let mut mask = Self::empty(carrier_size);
        for i in indices {
            mask = mask.with(i)?;
        }
        Ok(mask)
    }

    pub fn with(self, index: usize) -> Result<Self> {
        if index >= self.carrier_size as usize {
            return Err(Error::IndexOutOfRange {
                index,
                size: self.carrier_size as usize,
            });
        }
        Ok(SubsetMask {
            bits: self.bits | (1 << index),
            ..self
        })
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn carrier_size(&self) -> usize {
        self.carrier_size as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.carrier_size as usize && self.bits >> index & 1 == 1
    }

    pub fn is_subset(&self, other: &SubsetMask) -> bool {
        debug_assert_eq!(self.carrier_size, other.carrier_size);
        self.bits & !other.bits == 0
    }

    pub fn union(&self, other: &SubsetMask) -> SubsetMask {
        debug_assert_eq!(self.carrier_size, other.carrier_size);
        SubsetMask {
            bits: self.bits | other.bits,
            ..*self
        }
    }

    pub fn intersection(&self, other: &SubsetMask) -> SubsetMask {
        debug_assert_eq!(self.carrier_size, other.carrier_size);
        SubsetMask {
            bits: self.bits & other.bits,
            ..*self
        }
    }

    /// Indices of set bits, ascending.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let size = self.carrier_size as usize;
        (0..size).filter(move |i| self.bits >> i & 1 == 1)
    }

    /// Element names of set bits, in carrier order.
    pub fn names<'a>(&'a self, carrier: &'a Carrier) -> impl Iterator<Item = &'a str> {
        self.iter().map(|i| carrier.name(i))
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubsetMask({:#b}/{})", self.bits, self.carrier_size)
    }
}

/// A binary hyperoperation in extension: an n-by-n matrix of non-empty masks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperTable {
    carrier: Carrier,
    cells: Vec<SubsetMask>, // row-major, size * size
}

impl HyperTable {
    /// Builds a table from row-major cells, validating that every cell is a
    /// non-empty mask over `carrier`.
    pub fn new(carrier: Carrier, cells: Vec<SubsetMask>) -> Result<Self> {
        let n = carrier.size();
        if cells.len() != n * n {
            return Err(Error::CarrierMismatch {
                expected: n * n,
                found: cells.len(),
            });
        }
        for (k, cell) in cells.iter().enumerate() {
            if cell.carrier_size() != n {
                return Err(Error::CarrierMismatch {
                    expected: n,
                    found: cell.carrier_size(),
                });
            }
            if cell.is_empty() {
                return Err(Error::EmptyCell {
                    row: k / n,
                    col: k % n,
                });
            }
        }
        Ok(HyperTable { carrier, cells })
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn size(&self) -> usize {
        self.carrier.size()
    }

    pub fn cell(&self, row: usize, col: usize) -> SubsetMask {
        self.cells[row * self.size() + col]
    }

    /// Replaces one cell, revalidating non-emptiness.  Used by test harnesses
    /// that perturb a table on purpose.
    pub fn with_cell(&self, row: usize, col: usize, mask: SubsetMask) -> Result<Self> {
        if mask.is_empty() {
            return Err(Error::EmptyCell { row, col });
        }
        if mask.carrier_size() != self.size() {
            return Err(Error::CarrierMismatch {
                expected: self.size(),
                found: mask.carrier_size(),
            });
        }
        let mut cells = self.cells.clone();
        cells[row * self.size() + col] = mask;
        Ok(HyperTable {
            carrier: self.carrier.clone(),
            cells,
        })
    }
}

/// A ⊗ B: the union of cells over all element pairs drawn from A and B.
pub fn subset_product(table: &HyperTable, a: &SubsetMask, b: &SubsetMask) -> Result<SubsetMask> {
    let n = table.size();
    if a.carrier_size() != n || b.carrier_size() != n {
        let found = if a.carrier_size() != n {
            a.carrier_size()
        } else {
            b.carrier_size()
        };
        return Err(Error::CarrierMismatch { expected: n, found });
    }
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyOperand);
    }
    let mut out = SubsetMask::empty(n);
    for i in a.iter() {
        for j in b.iter() {
            out = out.union(&table.cell(i, j));
        }
    }
    Ok(out)
}

/// Callable view of a table lifted to operate on subsets.
///
/// Restricted to singletons it recovers the underlying table cell for cell.
pub struct PowersetLift<'a> {
    table: &'a HyperTable,
}

impl PowersetLift<'_> {
    pub fn apply(&self, a: &SubsetMask, b: &SubsetMask) -> Result<SubsetMask> {
        subset_product(self.table, a, b)
    }
}

pub fn lift_to_powerset(table: &HyperTable) -> PowersetLift<'_> {
    PowersetLift { table }
}

/// A general n-ary hyperoperation over possibly distinct input carriers.
///
/// Cells are stored sparsely, keyed by index tuple; outputs are masks over the
/// union carrier (inputs merged by name, first declaration wins the ordering).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NAryHyperOp {
    input_carriers: Vec<Carrier>,
    union_carrier: Carrier,
    cells: BTreeMap<Vec<usize>, SubsetMask>,
}

impl NAryHyperOp {
    pub fn new(
        input_carriers: Vec<Carrier>,
        cells: BTreeMap<Vec<usize>, SubsetMask>,
    ) -> Result<Self> {
        if input_carriers.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        let union_carrier = merge_carriers(&input_carriers)?;
        for (tuple, mask) in &cells {
            if tuple.len() != input_carriers.len() {
                return Err(Error::ArityMismatch {
                    expected: input_carriers.len(),
                    found: tuple.len(),
                });
            }
            for (pos, &idx) in tuple.iter().enumerate() {
                if idx >= input_carriers[pos].size() {
                    return Err(Error::IndexOutOfRange {
                        index: idx,
                        size: input_carriers[pos].size(),
                    });
                }
            }
            if mask.is_empty() {
                return Err(Error::MissingCell(tuple.clone()));
            }
            if mask.carrier_size() != union_carrier.size() {
                return Err(Error::CarrierMismatch {
                    expected: union_carrier.size(),
                    found: mask.carrier_size(),
                });
            }
        }
        Ok(NAryHyperOp {
            input_carriers,
            union_carrier,
            cells,
        })
    }

    /// Wraps a binary table as the n = 2 case.
    pub fn from_table(table: &HyperTable) -> Self {
        let n = table.size();
        let mut cells = BTreeMap::new();
        for x in 0..n {
            for y in 0..n {
                cells.insert(vec![x, y], table.cell(x, y));
            }
        }
        NAryHyperOp {
            input_carriers: vec![table.carrier().clone(), table.carrier().clone()],
            union_carrier: table.carrier().clone(),
            cells,
        }
    }

    pub fn arity(&self) -> usize {
        self.input_carriers.len()
    }

    pub fn input_carriers(&self) -> &[Carrier] {
        &self.input_carriers
    }

    pub fn union_carrier(&self) -> &Carrier {
        &self.union_carrier
    }

    pub fn cell(&self, tuple: &[usize]) -> Option<SubsetMask> {
        self.cells.get(tuple).copied()
    }
}

/// Union of input carriers, merged by name in first-declaration order.
fn merge_carriers(carriers: &[Carrier]) -> Result<Carrier> {
    let mut names: Vec<String> = Vec::new();
    for carrier in carriers {
        for name in carrier.names() {
            if !names.iter().any(|n| n == name) {
                names.push(name.to_string());
            }
        }
    }
    Carrier::new(names)
}

/// f(A_1, ..., A_n): union of cells over the Cartesian product of the
/// argument masks.
pub fn nary_subset_extension(op: &NAryHyperOp, args: &[SubsetMask]) -> Result<SubsetMask> {
    if args.len() != op.arity() {
        return Err(Error::ArityMismatch {
            expected: op.arity(),
            found: args.len(),
        });
    }
    for (pos, arg) in args.iter().enumerate() {
        if arg.carrier_size() != op.input_carriers[pos].size() {
            return Err(Error::CarrierMismatch {
                expected: op.input_carriers[pos].size(),
                found: arg.carrier_size(),
            });
        }
        if arg.is_empty() {
            return Err(Error::EmptyOperand);
        }
    }
    let mut out = SubsetMask::empty(op.union_carrier.size());
    let mut tuple: Vec<usize> = args.iter().map(|a| a.iter().next().unwrap()).collect();
    loop {
        let cell = op
            .cells
            .get(&tuple)
            .copied()
            .ok_or_else(|| Error::MissingCell(tuple.clone()))?;
        out = out.union(&cell);
        // odometer over the set bits of each argument mask
        let mut pos = args.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            if let Some(next) = args[pos].iter().find(|&i| i > tuple[pos]) {
                tuple[pos] = next;
                for (p, t) in tuple.iter_mut().enumerate().skip(pos + 1) {
                    *t = args[p].iter().next().unwrap();
                }
                break;
            }
        }
    }
}

/// An involutive permutation of carrier indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Involution {
    map: Vec<usize>,
}

impl Involution {
    pub fn apply(&self, index: usize) -> usize {
        self.map[index]
    }

    pub fn apply_mask(&self, mask: &SubsetMask) -> SubsetMask {
        let mut out = SubsetMask::empty(mask.carrier_size());
        for i in mask.iter() {
            out = out.with(self.map[i]).expect("involution preserves range");
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &j)| i == j)
    }
}

/// Builds the involution determined by a pairing of indices (self-pairs
/// allowed).  The pairing must cover every index exactly once.
pub fn conjugation_map(carrier: &Carrier, pairing: &[(usize, usize)]) -> Result<Involution> {
    let n = carrier.size();
    let mut map = vec![usize::MAX; n];
    for &(a, b) in pairing {
        if a >= n {
            return Err(Error::IndexOutOfRange { index: a, size: n });
        }
        if b >= n {
            return Err(Error::IndexOutOfRange { index: b, size: n });
        }
        for (from, to) in [(a, b), (b, a)] {
            if map[from] != usize::MAX && map[from] != to {
                return Err(Error::NonInvolutivePairing(from));
            }
            map[from] = to;
        }
    }
    if let Some(uncovered) = map.iter().position(|&m| m == usize::MAX) {
        return Err(Error::IncompletePairing(uncovered));
    }
    // pairwise assignment guarantees map[map[i]] == i
    debug_assert!((0..n).all(|i| map[map[i]] == i));
    Ok(Involution { map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conservation::ParticleSet;

    fn lepton_table() -> HyperTable {
        ParticleSet::leptons().derive_table()
    }

    fn mask(t: &HyperTable, names: &[&str]) -> SubsetMask {
        t.carrier().mask_of_names(names.iter().copied()).unwrap()
    }

    #[test]
    fn carrier_rejects_bad_names() {
        assert_eq!(Carrier::new(Vec::<String>::new()), Err(Error::EmptyCarrier));
        assert_eq!(Carrier::new(vec!["a", ""]), Err(Error::EmptyName));
        assert_eq!(
            Carrier::new(vec!["a", "a"]),
            Err(Error::DuplicateName("a".into()))
        );
        assert!(Carrier::new(vec!["a", "b"]).is_ok());
    }

    #[test]
    fn mask_bounds_are_enforced() {
        let m = SubsetMask::empty(3);
        assert_eq!(m.with(3), Err(Error::IndexOutOfRange { index: 3, size: 3 }));
        assert!(SubsetMask::from_bits(0b1000, 3).is_err());
        assert_eq!(SubsetMask::full(3).len(), 3);
    }

    #[test]
    fn subset_product_on_singletons_recovers_cells() {
        let t = lepton_table();
        let e = mask(&t, &["e"]);
        let prod = subset_product(&t, &e, &e).unwrap();
        assert_eq!(prod, mask(&t, &["e"]));
        for x in 0..t.size() {
            for y in 0..t.size() {
                let sx = t.carrier().singleton(x).unwrap();
                let sy = t.carrier().singleton(y).unwrap();
                assert_eq!(subset_product(&t, &sx, &sy).unwrap(), t.cell(x, y));
            }
        }
    }

    #[test]
    fn subset_product_of_full_masks_is_union_of_all_cells() {
        let t = lepton_table();
        let full = t.carrier().full_mask();
        let mut union = SubsetMask::empty(t.size());
        for x in 0..t.size() {
            for y in 0..t.size() {
                union = union.union(&t.cell(x, y));
            }
        }
        assert_eq!(subset_product(&t, &full, &full).unwrap(), union);
    }

    #[test]
    fn subset_product_unions_over_left_mask() {
        // {e,mu} ⊗ {nu_e} unions the (e, nu_e) and (mu, nu_e) cells
        let t = lepton_table();
        let a = mask(&t, &["e", "mu"]);
        let b = mask(&t, &["nu_e"]);
        let got = subset_product(&t, &a, &b).unwrap();
        assert_eq!(got, mask(&t, &["e", "mu", "nu_e", "nu_mu"]));
    }

    #[test]
    fn subset_product_errors() {
        let t = lepton_table();
        let empty = SubsetMask::empty(t.size());
        let e = mask(&t, &["e"]);
        assert_eq!(subset_product(&t, &empty, &e), Err(Error::EmptyOperand));
        let wrong = SubsetMask::full(3);
        assert_eq!(
            subset_product(&t, &wrong, &e),
            Err(Error::CarrierMismatch {
                expected: 12,
                found: 3
            })
        );
    }

    #[test]
    fn lift_restricted_to_singletons_round_trips() {
        let t = lepton_table();
        let lifted = lift_to_powerset(&t);
        for x in 0..t.size() {
            for y in 0..t.size() {
                let sx = t.carrier().singleton(x).unwrap();
                let sy = t.carrier().singleton(y).unwrap();
                assert_eq!(lifted.apply(&sx, &sy).unwrap(), t.cell(x, y));
            }
        }
    }

    #[test]
    fn lift_examples() {
        let t = lepton_table();
        let lifted = lift_to_powerset(&t);
        let got = lifted
            .apply(&mask(&t, &["e"]), &mask(&t, &["nu_e"]))
            .unwrap();
        assert_eq!(got, mask(&t, &["e", "nu_e"]));
        let got = lifted
            .apply(&mask(&t, &["e"]), &mask(&t, &["nu_mu"]))
            .unwrap();
        assert_eq!(got, mask(&t, &["e", "nu_mu", "mu", "nu_e"]));
    }

    #[test]
    fn nary_from_table_agrees_with_subset_product() {
        let t = lepton_table();
        let op = NAryHyperOp::from_table(&t);
        let a = mask(&t, &["e", "tau+"]);
        let b = mask(&t, &["nu_mu", "nubar_e", "mu"]);
        assert_eq!(
            nary_subset_extension(&op, &[a, b]).unwrap(),
            subset_product(&t, &a, &b).unwrap()
        );
    }

    #[test]
    fn nary_singleton_collapse_and_full_union() {
        let t = lepton_table();
        let op = NAryHyperOp::from_table(&t);
        let x = t.carrier().singleton(0).unwrap();
        let y = t.carrier().singleton(2).unwrap();
        assert_eq!(nary_subset_extension(&op, &[x, y]).unwrap(), t.cell(0, 2));
        let full = t.carrier().full_mask();
        assert_eq!(
            nary_subset_extension(&op, &[full, full]).unwrap(),
            subset_product(&t, &full, &full).unwrap()
        );
    }

    #[test]
    fn nary_extension_example() {
        // {e} x {e+, mu+}: the union of an annihilation cell (= everything)
        // with a 4-element cell is the whole carrier
        let t = lepton_table();
        let op = NAryHyperOp::from_table(&t);
        let got =
            nary_subset_extension(&op, &[mask(&t, &["e"]), mask(&t, &["e+", "mu+"])]).unwrap();
        assert_eq!(got, t.carrier().full_mask());
    }

    #[test]
    fn nary_arity_and_operand_errors() {
        let t = lepton_table();
        let op = NAryHyperOp::from_table(&t);
        let e = mask(&t, &["e"]);
        assert_eq!(
            nary_subset_extension(&op, &[e]),
            Err(Error::ArityMismatch {
                expected: 2,
                found: 1
            })
        );
        let empty = SubsetMask::empty(t.size());
        assert_eq!(
            nary_subset_extension(&op, &[e, empty]),
            Err(Error::EmptyOperand)
        );
    }

    #[test]
    fn heterogeneous_carriers_merge_by_name() {
        let c1 = Carrier::new(vec!["a", "b"]).unwrap();
        let c2 = Carrier::new(vec!["b", "c"]).unwrap();
        let mut cells = BTreeMap::new();
        for x in 0..2 {
            for y in 0..2 {
                cells.insert(vec![x, y], SubsetMask::singleton(x, 3).unwrap());
            }
        }
        let op = NAryHyperOp::new(vec![c1, c2], cells).unwrap();
        let merged: Vec<&str> = op.union_carrier().names().collect();
        assert_eq!(merged, vec!["a", "b", "c"]);
    }

    #[test]
    fn conjugation_examples() {
        let ps = ParticleSet::leptons();
        let inv = ps.conjugation();
        assert!(!inv.is_identity());
        let carrier = ps.carrier();
        // e <-> e+
        assert_eq!(
            inv.apply(carrier.index_of("e").unwrap()),
            carrier.index_of("e+").unwrap()
        );
        // applying twice to any mask of the full 2^12 space returns the original
        for bits in 0..(1u64 << carrier.size()) {
            let m = SubsetMask::from_bits(bits, carrier.size()).unwrap();
            assert_eq!(inv.apply_mask(&inv.apply_mask(&m)), m);
        }
    }

    #[test]
    fn identity_pairing_is_identity() {
        let c = Carrier::new(vec!["a", "b", "c"]).unwrap();
        let pairing: Vec<(usize, usize)> = (0..3).map(|i| (i, i)).collect();
        let inv = conjugation_map(&c, &pairing).unwrap();
        assert!(inv.is_identity());
    }

    #[test]
    fn bad_pairings_are_rejected() {
        let c = Carrier::new(vec!["a", "b", "c"]).unwrap();
        assert_eq!(
            conjugation_map(&c, &[(0, 1), (1, 2), (2, 0)]),
            Err(Error::NonInvolutivePairing(1))
        );
        assert_eq!(
            conjugation_map(&c, &[(0, 1)]),
            Err(Error::IncompletePairing(2))
        );
        assert_eq!(
            conjugation_map(&c, &[(0, 5)]),
            Err(Error::IndexOutOfRange { index: 5, size: 3 })
        );
    }

    #[test]
    fn table_constructor_rejects_empty_cells() {
        let c = Carrier::new(vec!["a", "b"]).unwrap();
        let ok = SubsetMask::singleton(0, 2).unwrap();
        let cells = vec![ok, ok, SubsetMask::empty(2), ok];
        assert_eq!(
            HyperTable::new(c, cells),
            Err(Error::EmptyCell { row: 1, col: 0 })
        );
    }
}
