//! Lattices of local approximation images, distributivity criteria on them,
//! and the concept lattice of the complementary incidence.

mod audit;
mod conditions;
mod fca;

use std::collections::BTreeMap;

use serde::Serialize;

pub use audit::{audit, claim_ids, claim_info};
pub use conditions::{
    ei_condition, tr23_condition, triagrp_condition, EiCheck, EiKind, PairWitnesses,
};
pub use fca::{
    concept_lattice, concepts, context_of, derive, th40_condition, Concept, FormalContext, Side,
};

use crate::approx::{approximate, OperatorId};
use crate::error::{Error, Result};
use crate::relcore::{check_bound, FiniteRelationSpace};
use crate::subset::Subset;

/// A family of subsets that is a lattice under inclusion, with its join
/// and meet tables (indices into `elements`, row-major).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLattice {
    elements: Vec<Subset>,
    join: Vec<usize>,
    meet: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl FiniteLattice {
    /// Computes least upper and greatest lower bounds inside the family.
    pub fn from_family(family: impl IntoIterator<Item = Subset>) -> Result<Self> {
        let mut elements: Vec<Subset> = family.into_iter().collect();
        elements.sort();
        elements.dedup();
        let m = elements.len();
        if m == 0 {
            return Err(Error::NotALattice("empty family".into()));
        }
        // the least upper bound, if any, is the intersection of all upper
        // bounds (dually for lower bounds)
        let bound = |a: usize, b: usize, upper: bool| -> Result<usize> {
            let (x, y) = (elements[a], elements[b]);
            let mut acc: Option<Subset> = None;
            for &z in &elements {
                let fits = if upper {
                    x.is_subset(z) && y.is_subset(z)
                } else {
                    z.is_subset(x) && z.is_subset(y)
                };
                if fits {
                    acc = Some(match acc {
                        None => z,
                        Some(t) if upper => t.intersection(z),
                        Some(t) => t.union(z),
                    });
                }
            }
            acc.and_then(|t| elements.binary_search(&t).ok())
                .ok_or_else(|| {
                    Error::NotALattice(format!(
                        "no {} bound for elements {a} and {b}",
                        if upper {
                            "least upper"
                        } else {
                            "greatest lower"
                        }
                    ))
                })
        };
        let mut join = Vec::with_capacity(m * m);
        let mut meet = Vec::with_capacity(m * m);
        for a in 0..m {
            for b in 0..m {
                join.push(bound(a, b, true)?);
                meet.push(bound(a, b, false)?);
            }
        }
        let bottom = (0..m).fold(0, |acc, x| meet[acc * m + x]);
        let top = (0..m).fold(0, |acc, x| join[acc * m + x]);
        Ok(Self {
            elements,
            join,
            meet,
            bottom,
            top,
        })
    }

    pub fn elements(&self) -> &[Subset] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, s: Subset) -> Option<usize> {
        self.elements.binary_search(&s).ok()
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.elements[a].is_subset(self.elements[b])
    }

    /// Covering pairs `(lower, upper)`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let m = self.len();
        let mut out = Vec::new();
        for a in 0..m {
            for b in 0..m {
                if a != b
                    && self.leq(a, b)
                    && !(0..m).any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b))
                {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn dump(&self, space: &FiniteRelationSpace) -> LatticeDump {
        let m = self.len();
        LatticeDump {
            elements: self.elements.iter().map(|&s| space.labels_of(s)).collect(),
            join: self.join.chunks(m).map(<[usize]>::to_vec).collect(),
            meet: self.meet.chunks(m).map(<[usize]>::to_vec).collect(),
            bottom: self.bottom,
            top: self.top,
            covers: self.covers(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LatticeDump {
    pub elements: Vec<Vec<String>>,
    pub join: Vec<Vec<usize>>,
    pub meet: Vec<Vec<usize>>,
    pub bottom: usize,
    pub top: usize,
    pub covers: Vec<(usize, usize)>,
}

/// Largest universe whose image lattices are built.
pub const LATTICE_BOUND: usize = 8;

/// The four local operators that carry a lattice of images.
pub const LATTICE_OPERATORS: [OperatorId; 4] = [
    OperatorId::TriUp,
    OperatorId::TriDown,
    OperatorId::BtriUp,
    OperatorId::BtriDown,
];

pub fn image_family(
    space: &FiniteRelationSpace,
    op: OperatorId,
    bound: usize,
) -> Result<Vec<Subset>> {
    check_bound(space.len(), bound)?;
    let mut out: Vec<Subset> = Subset::all(space.len())
        .map(|x| approximate(space, x, op))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// The images of `op` ordered by inclusion. Meets are the genuine greatest
/// lower bounds in the family; the closed-form meets are audited separately.
pub fn image_lattice(space: &FiniteRelationSpace, op: OperatorId) -> Result<FiniteLattice> {
    if !LATTICE_OPERATORS.contains(&op) {
        return Err(Error::Document(format!("`{op}` is not a local operator")));
    }
    FiniteLattice::from_family(image_family(space, op, LATTICE_BOUND)?)
}

/// Completely join-irreducible elements: those with exactly one lower cover.
pub fn cji(l: &FiniteLattice) -> Vec<usize> {
    let mut lower_covers = vec![0usize; l.len()];
    for (_, upper) in l.covers() {
        lower_covers[upper] += 1;
    }
    (0..l.len()).filter(|&x| lower_covers[x] == 1).collect()
}

/// Every element is the join of the completely join-irreducibles below it.
pub fn is_spatial(l: &FiniteLattice) -> bool {
    let irreducible = cji(l);
    (0..l.len()).all(|x| {
        let j = irreducible
            .iter()
            .filter(|&&c| l.leq(c, x))
            .fold(l.bottom(), |acc, &c| l.join(acc, c));
        j == x
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistributivityCheck {
    pub distributive: bool,
    /// Least `(x, y, z)` with `x ∧ (y ∨ z) ≠ (x ∧ y) ∨ (x ∧ z)`.
    pub witness: Option<(usize, usize, usize)>,
}

/// Binary distributivity, which for finite lattices is complete
/// distributivity.
pub fn is_completely_distributive(l: &FiniteLattice) -> DistributivityCheck {
    let m = l.len();
    for x in 0..m {
        for y in 0..m {
            for z in 0..m {
                if l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)) {
                    return DistributivityCheck {
                        distributive: false,
                        witness: Some((x, y, z)),
                    };
                }
            }
        }
    }
    DistributivityCheck {
        distributive: true,
        witness: None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualIsoCheck {
    /// Complement maps the `△` images onto the `▽` images.
    pub tri: bool,
    /// Complement maps the `▲` images onto the `▼` images.
    pub btri: bool,
    /// First image whose complement is missing, per failing pair.
    pub witnesses: BTreeMap<String, Vec<String>>,
}

impl DualIsoCheck {
    pub fn holds(&self) -> bool {
        self.tri && self.btri
    }
}

/// Complement is an inclusion-reversing bijection between each pair of
/// image families.
pub fn dual_iso_check(space: &FiniteRelationSpace) -> Result<DualIsoCheck> {
    let n = space.len();
    let mut witnesses = BTreeMap::new();
    let mut check = |up: OperatorId, down: OperatorId| -> Result<bool> {
        let ups = image_family(space, up, LATTICE_BOUND)?;
        let downs = image_family(space, down, LATTICE_BOUND)?;
        let mut mapped: Vec<Subset> = ups.iter().map(|z| z.complement(n)).collect();
        mapped.sort();
        if mapped == downs {
            return Ok(true);
        }
        let bad = ups
            .iter()
            .find(|z| downs.binary_search(&z.complement(n)).is_err())
            .or_else(|| ups.first())
            .copied()
            .unwrap_or(Subset::EMPTY);
        witnesses.insert(up.to_string(), space.labels_of(bad));
        Ok(false)
    };
    let tri = check(OperatorId::TriUp, OperatorId::TriDown)?;
    let btri = check(OperatorId::BtriUp, OperatorId::BtriDown)?;
    Ok(DualIsoCheck {
        tri,
        btri,
        witnesses,
    })
}
