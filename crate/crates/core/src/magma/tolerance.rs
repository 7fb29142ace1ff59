//! Compatible tolerances of small groupoids.

use super::FiniteGroupoid;
use crate::error::Result;
use crate::relcore::check_bound;
use crate::subset::Subset;

/// Largest groupoid whose tolerances are enumerated (`2^10` candidates).
pub const TOLERANCE_BOUND: usize = 5;

/// A reflexive symmetric relation, one neighbor mask per element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tolerance {
    rows: Vec<Subset>,
}

impl Tolerance {
    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut rows: Vec<Subset> = (0..n).map(Subset::singleton).collect();
        for (a, b) in pairs {
            rows[a] = rows[a].with(b);
            rows[b] = rows[b].with(a);
        }
        Self { rows }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.rows[a].contains(b)
    }

    pub fn neighbors(&self, a: usize) -> Subset {
        self.rows[a]
    }

    /// Pairs `a < b` in the relation.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|a| {
                self.rows[a]
                    .iter()
                    .filter(move |&b| b > a)
                    .map(move |b| (a, b))
            })
            .collect()
    }

    /// First `(a, b, c)` with `aTb`, `bTc`, not `aTc`.
    pub fn intransitive_triple(&self) -> Option<(usize, usize, usize)> {
        for a in 0..self.len() {
            for b in self.rows[a].iter() {
                if let Some(c) = self.rows[b].difference(self.rows[a]).first() {
                    return Some((a, b, c));
                }
            }
        }
        None
    }

    pub fn is_compatible(&self, g: &FiniteGroupoid) -> bool {
        let n = self.len();
        (0..n).all(|a| {
            self.rows[a].iter().all(|b| {
                (0..n).all(|c| {
                    self.rows[c]
                        .iter()
                        .all(|d| self.related(g.op(a, c), g.op(b, d)))
                })
            })
        })
    }
}

/// Every compatible tolerance, ordered by the bitmask of chosen off-diagonal
/// pairs (pairs `a < b` listed row-major). Always includes the diagonal and
/// the full relation.
pub fn compatible_tolerances(g: &FiniteGroupoid) -> Result<Vec<Tolerance>> {
    let n = g.len();
    check_bound(n, TOLERANCE_BOUND)?;
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << slots.len()) {
        let t = Tolerance::from_pairs(
            n,
            slots
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p),
        );
        if t.is_compatible(g) {
            out.push(t);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToleranceVerdict {
    pub trivial: bool,
    /// First compatible tolerance that is not transitive, with a violating triple.
    pub witness: Option<(Tolerance, (usize, usize, usize))>,
}

/// Trivial when every compatible tolerance is transitive (a congruence).
pub fn is_tolerance_trivial(g: &FiniteGroupoid) -> Result<ToleranceVerdict> {
    for t in compatible_tolerances(g)? {
        if let Some(triple) = t.intransitive_triple() {
            return Ok(ToleranceVerdict {
                trivial: false,
                witness: Some((t, triple)),
            });
        }
    }
    Ok(ToleranceVerdict {
        trivial: true,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::fixtures;
    use crate::magma::{build_updg, Canonical};

    fn labels(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn one_element_is_trivial() {
        let g = FiniteGroupoid::new(labels(1), vec![0]).unwrap();
        assert!(is_tolerance_trivial(&g).unwrap().trivial);
    }

    #[test]
    fn diagonal_and_full_always_present() {
        let g = build_updg(&fixtures::fork(), &Canonical).unwrap();
        let ts = compatible_tolerances(&g).unwrap();
        assert_eq!(ts.first().unwrap(), &Tolerance::from_pairs(3, []));
        assert_eq!(
            ts.last().unwrap(),
            &Tolerance::from_pairs(3, [(0, 1), (0, 2), (1, 2)])
        );
    }

    #[test]
    fn left_projection_has_intransitive_tolerances() {
        // every reflexive symmetric relation is compatible with x·y = x
        let g = FiniteGroupoid::from_fn(labels(3), |a, _| a).unwrap();
        assert_eq!(compatible_tolerances(&g).unwrap().len(), 8);
        let v = is_tolerance_trivial(&g).unwrap();
        assert!(!v.trivial);
        let (t, (a, b, c)) = v.witness.unwrap();
        assert!(t.related(a, b) && t.related(b, c) && !t.related(a, c));
    }

    #[test]
    fn bound_is_enforced() {
        let g = FiniteGroupoid::from_fn(labels(6), |a, _| a).unwrap();
        assert_eq!(
            compatible_tolerances(&g),
            Err(Error::BoundExceeded { size: 6, bound: 5 })
        );
    }
}
