//! Particle definitions with additive quantum numbers, and derivation of the
//! interaction hyperoperation from conservation.
//!
//! A two-body interaction x + y may produce any unordered pair (a, b) whose
//! summed quantum numbers equal those of (x, y).  Collapsing the admissible
//! outgoing pairs to their element sets yields one table cell; the table over
//! all (x, y) is the binary hyperoperation studied by the rest of the crate.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hypercore::{conjugation_map, Carrier, HyperTable, Involution, NAryHyperOp, SubsetMask};

/// Bundled particle definitions for the twelve leptons.
pub const LEPTON_DEFINITIONS: &str = include_str!("../data/leptons.def");

/// A vector of additive conserved integer charges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuantumNumbers(Vec<i32>);

impl QuantumNumbers {
    pub fn new(values: Vec<i32>) -> Self {
        QuantumNumbers(values)
    }

    pub fn values(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &QuantumNumbers) -> QuantumNumbers {
        debug_assert_eq!(self.0.len(), other.0.len());
        QuantumNumbers(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn negated(&self) -> QuantumNumbers {
        QuantumNumbers(self.0.iter().map(|v| -v).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&v| v == 0)
    }
}

/// A named carrier element with quantum numbers and a conjugate partner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Particle {
    pub name: String,
    pub numbers: QuantumNumbers,
    pub antiparticle: String,
}

/// An ordered set of particles defining a carrier and its derived
/// hyperoperation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParticleSet {
    axis_names: Vec<String>,
    particles: Vec<Particle>,
    carrier: Carrier,
}

impl ParticleSet {
    /// Validates name uniqueness, axis arity, and the antiparticle relation:
    /// conjugate numbers negate, the relation is symmetric, and an element is
    /// self-conjugate only when all its numbers vanish.
    pub fn new(axis_names: Vec<String>, particles: Vec<Particle>) -> Result<Self> {
        let carrier = Carrier::new(particles.iter().map(|p| p.name.clone()))?;
        for p in &particles {
            if p.numbers.len() != axis_names.len() {
                return Err(Error::BadAntiparticle {
                    name: p.name.clone(),
                    reason: format!(
                        "expected {} quantum numbers, found {}",
                        axis_names.len(),
                        p.numbers.len()
                    ),
                });
            }
            let anti_idx = carrier
                .index_of(&p.antiparticle)
                .ok_or_else(|| Error::UnknownParticle(p.antiparticle.clone()))?;
            let anti = &particles[anti_idx];
            if anti.antiparticle != p.name {
                return Err(Error::BadAntiparticle {
                    name: p.name.clone(),
                    reason: format!("`{}` does not point back to it", anti.name),
                });
            }
            if anti.numbers != p.numbers.negated() {
                return Err(Error::BadAntiparticle {
                    name: p.name.clone(),
                    reason: format!("`{}` does not negate its quantum numbers", anti.name),
                });
            }
            if anti.name == p.name && !p.numbers.is_zero() {
                return Err(Error::BadAntiparticle {
                    name: p.name.clone(),
                    reason: "self-conjugate particle with non-zero quantum numbers".into(),
                });
            }
        }
        Ok(ParticleSet {
            axis_names,
            particles,
            carrier,
        })
    }

    /// Parses the line-oriented definition format:
    /// `name, q1, q2, ..., antiparticle_name`, with `#` comments and an
    /// optional `#axes: ...` header naming the conserved quantities.
    pub fn parse_definition(text: &str) -> Result<Self> {
        let mut axis_names: Vec<String> = vec!["Q", "Le", "Lmu", "Ltau"]
            .into_iter()
            .map(String::from)
            .collect();
        let mut particles = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if let Some(axes) = line.strip_prefix("#axes:") {
                axis_names = axes.split(',').map(|s| s.trim().to_string()).collect();
                if axis_names.iter().any(String::is_empty) {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        message: "empty axis name".into(),
                    });
                }
                continue;
            }
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            if fields.len() != axis_names.len() + 2 {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: format!(
                        "expected {} fields (name, {} numbers, antiparticle), found {}",
                        axis_names.len() + 2,
                        axis_names.len(),
                        fields.len()
                    ),
                });
            }
            let name = fields[0];
            if name.is_empty() {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: "empty particle name".into(),
                });
            }
            let mut values = Vec::with_capacity(axis_names.len());
            for (k, field) in fields[1..fields.len() - 1].iter().enumerate() {
                let v: i32 = field.parse().map_err(|_| Error::Parse {
                    line: lineno + 1,
                    message: format!("field {} (`{}`) is not an integer", k + 2, field),
                })?;
                values.push(v);
            }
            particles.push(Particle {
                name: name.to_string(),
                numbers: QuantumNumbers::new(values),
                antiparticle: fields[fields.len() - 1].to_string(),
            });
        }
        ParticleSet::new(axis_names, particles).map_err(|e| match e {
            Error::Parse { .. } => e,
            other => Error::Parse {
                line: 0,
                message: other.to_string(),
            },
        })
    }

    /// The bundled twelve-lepton set.
    pub fn leptons() -> ParticleSet {
        ParticleSet::parse_definition(LEPTON_DEFINITIONS)
            .expect("bundled lepton definitions are valid")
    }

    pub fn axis_names(&self) -> &[String] {
        &self.axis_names
    }

    pub fn particles(&self) -> &[Particle] {
        &self.particles
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn size(&self) -> usize {
        self.particles.len()
    }

    pub fn numbers(&self, index: usize) -> &QuantumNumbers {
        &self.particles[index].numbers
    }

    /// The particle/antiparticle involution on carrier indices.
    pub fn conjugation(&self) -> Involution {
        let pairing: Vec<(usize, usize)> = self
            .particles
            .iter()
            .enumerate()
            .map(|(i, p)| (i, self.carrier.index_of(&p.antiparticle).unwrap()))
            .collect();
        conjugation_map(&self.carrier, &pairing).expect("validated antiparticle relation")
    }

    /// Componentwise sum of the members' quantum-number vectors.
    pub fn total_numbers(&self, members: &[usize]) -> Result<QuantumNumbers> {
        let mut iter = members.iter();
        let first = *iter.next().ok_or(Error::EmptyOperand)?;
        let mut total = self.check_index(first)?.clone();
        for &idx in iter {
            total = total.add(self.check_index(idx)?);
        }
        Ok(total)
    }

    fn check_index(&self, index: usize) -> Result<&QuantumNumbers> {
        self.particles
            .get(index)
            .map(|p| &p.numbers)
            .ok_or(Error::IndexOutOfRange {
                index,
                size: self.size(),
            })
    }

    /// All unordered pairs (a, b) whose summed numbers equal those of (x, y).
    /// Always contains (x, y) itself.
    pub fn allowed_outgoing_pairs(&self, x: usize, y: usize) -> Vec<(usize, usize)> {
        let target = self.numbers(x).add(self.numbers(y));
        let n = self.size();
        let mut pairs = Vec::new();
        for a in 0..n {
            for b in a..n {
                if self.numbers(a).add(self.numbers(b)) == target {
                    pairs.push((a, b));
                }
            }
        }
        pairs
    }

    /// One table cell: the admissible outgoing pairs for (x, y), collapsed to
    /// the set of participating elements.
    pub fn derive_cell(&self, x: usize, y: usize) -> SubsetMask {
        let mut mask = SubsetMask::empty(self.size());
        for (a, b) in self.allowed_outgoing_pairs(x, y) {
            mask = mask.with(a).unwrap().with(b).unwrap();
        }
        mask
    }

    /// The full conservation-derived binary hyperoperation.
    pub fn derive_table(&self) -> HyperTable {
        let n = self.size();
        let mut cells = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                cells.push(self.derive_cell(x, y));
            }
        }
        HyperTable::new(self.carrier.clone(), cells)
            .expect("derived cells contain the incoming pair, hence are non-empty")
    }

    /// General n_in -> n_out derivation: each input tuple maps to the union
    /// of all size-n_out multisets whose summed numbers match the input sum.
    /// Errors on the first tuple with no conserving output.
    pub fn derive_nary(&self, n_in: usize, n_out: usize) -> Result<NAryHyperOp> {
        if n_in == 0 || n_out == 0 {
            return Err(Error::EmptyOperand);
        }
        let n = self.size();
        let mut cells = BTreeMap::new();
        let mut tuple = vec![0usize; n_in];
        loop {
            let total = self.total_numbers(&tuple)?;
            let mut mask = SubsetMask::empty(n);
            let mut outgoing = vec![0usize; n_out];
            'mult: loop {
                let sum = self.total_numbers(&outgoing)?;
                if sum == total {
                    for &m in &outgoing {
                        mask = mask.with(m).unwrap();
                    }
                }
                // next non-decreasing multiset
                let mut pos = n_out;
                loop {
                    if pos == 0 {
                        break 'mult;
                    }
                    pos -= 1;
                    if outgoing[pos] + 1 < n {
                        let v = outgoing[pos] + 1;
                        for slot in outgoing.iter_mut().skip(pos) {
                            *slot = v;
                        }
                        break;
                    }
                }
            }
            if mask.is_empty() {
                let names = tuple
                    .iter()
                    .map(|&i| self.carrier.name(i).to_string())
                    .collect();
                return Err(Error::NoConservingOutput(names));
            }
            cells.insert(tuple.clone(), mask);
            // next input tuple (full Cartesian product)
            let mut pos = n_in;
            loop {
                if pos == 0 {
                    let carriers = vec![self.carrier.clone(); n_in];
                    return NAryHyperOp::new(carriers, cells);
                }
                pos -= 1;
                if tuple[pos] + 1 < n {
                    tuple[pos] += 1;
                    for t in tuple.iter_mut().skip(pos + 1) {
                        *t = 0;
                    }
                    break;
                }
            }
        }
    }
}
