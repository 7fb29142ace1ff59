//! Groupoids realizing a relation: `ab = b` when `Rab`, otherwise a chosen
//! common upper bound of `a` and `b`.

use rand::Rng;

use super::FiniteGroupoid;
use crate::error::{Error, Result};
use crate::relcore::FiniteRelationSpace;
use crate::subset::Subset;

/// Picks one element of the nonempty candidate set `U_R(a, b)`.
pub trait Chooser {
    fn choose(&self, a: usize, b: usize, candidates: Subset) -> usize;
}

/// Least candidate in universe order.
#[derive(Clone, Copy, Debug, Default)]
pub struct Canonical;

impl Chooser for Canonical {
    fn choose(&self, _a: usize, _b: usize, candidates: Subset) -> usize {
        candidates.first().expect("candidate set is nonempty")
    }
}

impl<F: Fn(usize, usize, Subset) -> usize> Chooser for F {
    fn choose(&self, a: usize, b: usize, candidates: Subset) -> usize {
        self(a, b, candidates)
    }
}

fn not_up_directed(space: &FiniteRelationSpace, a: usize, b: usize) -> Error {
    Error::NotUpDirected {
        a: space.label(a).into(),
        b: space.label(b).into(),
    }
}

/// Fails with the first unrelated pair that has no common upper bound.
fn require_realizable(space: &FiniteRelationSpace) -> Result<()> {
    match space.unfillable_pairs().first() {
        Some(&(a, b)) => Err(not_up_directed(space, a, b)),
        None => Ok(()),
    }
}

pub fn build_updg(space: &FiniteRelationSpace, chooser: &impl Chooser) -> Result<FiniteGroupoid> {
    let n = space.len();
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            if space.related(a, b) {
                table.push(b);
                continue;
            }
            let u = space.upper_bounds(a, b);
            if u.is_empty() {
                return Err(not_up_directed(space, a, b));
            }
            let c = chooser.choose(a, b, u);
            if !u.contains(c) {
                return Err(Error::InvalidChoice {
                    a: space.label(a).into(),
                    b: space.label(b).into(),
                    picked: space
                        .labels()
                        .get(c)
                        .cloned()
                        .unwrap_or_else(|| c.to_string()),
                });
            }
            table.push(c);
        }
    }
    FiniteGroupoid::new(space.labels().to_vec(), table)
}

/// `∏ |U_R(a,b)|` over unrelated pairs, saturating at `u128::MAX`.
pub fn count_updg(space: &FiniteRelationSpace) -> Result<u128> {
    require_realizable(space)?;
    let n = space.len();
    let mut count: u128 = 1;
    for a in 0..n {
        for b in 0..n {
            if !space.related(a, b) {
                count = count.saturating_mul(space.upper_bounds(a, b).len() as u128);
            }
        }
    }
    Ok(count)
}

/// A realizing groupoid with every free cell drawn uniformly from its
/// candidates.
pub fn random_updg(space: &FiniteRelationSpace, rng: &mut impl Rng) -> Result<FiniteGroupoid> {
    require_realizable(space)?;
    let n = space.len();
    let table = (0..n * n)
        .map(|i| {
            let (a, b) = (i / n, i % n);
            if space.related(a, b) {
                b
            } else {
                let u = space.upper_bounds(a, b);
                u.iter()
                    .nth(rng.random_range(0..u.len()))
                    .expect("index in range")
            }
        })
        .collect();
    FiniteGroupoid::new(space.labels().to_vec(), table)
}

/// Every realizing groupoid in lexicographic chooser order: free cells are
/// taken row-major, each ranging over its candidates in universe order, the
/// first free cell most significant.
pub fn enumerate_updg(space: &FiniteRelationSpace, limit: Option<usize>) -> Result<UpdgIter> {
    require_realizable(space)?;
    let n = space.len();
    let mut base = Vec::with_capacity(n * n);
    let mut free = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if space.related(a, b) {
                base.push(b);
            } else {
                let candidates: Vec<usize> = space.upper_bounds(a, b).iter().collect();
                base.push(candidates[0]);
                free.push((a * n + b, candidates));
            }
        }
    }
    Ok(UpdgIter {
        labels: space.labels().to_vec(),
        table: base,
        digits: vec![0; free.len()],
        free,
        remaining: limit,
        done: false,
    })
}

/// Stream returned by [`enumerate_updg`].
pub struct UpdgIter {
    labels: Vec<String>,
    table: Vec<usize>,
    free: Vec<(usize, Vec<usize>)>,
    digits: Vec<usize>,
    remaining: Option<usize>,
    done: bool,
}

impl Iterator for UpdgIter {
    type Item = FiniteGroupoid;

    fn next(&mut self) -> Option<FiniteGroupoid> {
        if self.done || self.remaining == Some(0) {
            return None;
        }
        if let Some(r) = self.remaining.as_mut() {
            *r -= 1;
        }
        let current = FiniteGroupoid {
            labels: self.labels.clone(),
            table: self.table.clone(),
        };
        // odometer step, last free cell least significant
        self.done = true;
        for (slot, (cell, candidates)) in self.digits.iter_mut().zip(&self.free).rev() {
            *slot += 1;
            if *slot < candidates.len() {
                self.table[*cell] = candidates[*slot];
                self.done = false;
                break;
            }
            *slot = 0;
            self.table[*cell] = candidates[0];
        }
        Some(current)
    }
}

/// Cells `(a, b)` where the table disagrees with the relation: `Rab` but
/// `ab ≠ b`, or `¬Rab` and `ab ∉ U_R(a, b)`. Row-major order.
pub fn realization_check(
    space: &FiniteRelationSpace,
    g: &FiniteGroupoid,
) -> Result<Vec<(usize, usize)>> {
    if space.labels() != g.labels() {
        return Err(Error::UniverseMismatch);
    }
    let n = space.len();
    let mut bad = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let c = g.op(a, b);
            let ok = if space.related(a, b) {
                c == b
            } else {
                space.upper_bounds(a, b).contains(c)
            };
            if !ok {
                bad.push((a, b));
            }
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn labeled(space: &FiniteRelationSpace, cells: &[(usize, usize)]) -> Vec<(String, String)> {
        cells
            .iter()
            .map(|&(a, b)| (space.label(a).to_string(), space.label(b).to_string()))
            .collect()
    }

    fn pairs(v: &[(&str, &str)]) -> Vec<(String, String)> {
        v.iter()
            .map(|&(a, b)| (a.to_string(), b.to_string()))
            .collect()
    }

    #[test]
    fn canonical_groupoid_of_ex1() {
        let ex1 = fixtures::ex1();
        let g = build_updg(&ex1, &Canonical).unwrap();
        let idx = |l| ex1.index_of(l).unwrap();
        assert_eq!(g.op(idx("a"), idx("c")), idx("c"));
        assert_eq!(g.op(idx("f"), idx("f")), idx("a"));
        assert!(realization_check(&ex1, &g).unwrap().is_empty());
    }

    #[test]
    fn fork_has_a_single_groupoid() {
        let fork = fixtures::fork();
        let g = build_updg(&fork, &Canonical).unwrap();
        assert_eq!(g.op(0, 1), 2);
        assert_eq!(count_updg(&fork).unwrap(), 1);
        assert_eq!(count_updg(&fixtures::toy2()).unwrap(), 1);
    }

    #[test]
    fn identity_relation_is_rejected() {
        let id2 = fixtures::id(2);
        assert_eq!(
            count_updg(&id2),
            Err(Error::NotUpDirected {
                a: "1".into(),
                b: "2".into()
            })
        );
        assert!(build_updg(&id2, &Canonical).is_err());
    }

    #[test]
    fn chooser_outside_candidates_is_rejected() {
        let fork = fixtures::fork();
        let bad = |_: usize, _: usize, _: Subset| 0usize;
        assert!(matches!(
            build_updg(&fork, &bad),
            Err(Error::InvalidChoice { .. })
        ));
    }

    #[test]
    fn stream_matches_count_and_starts_canonical() {
        let ex1 = fixtures::ex1();
        let count = count_updg(&ex1).unwrap();
        let all: Vec<_> = enumerate_updg(&ex1, None).unwrap().collect();
        assert_eq!(all.len() as u128, count);
        assert_eq!(all[0], build_updg(&ex1, &Canonical).unwrap());
        for g in &all {
            assert!(realization_check(&ex1, g).unwrap().is_empty());
        }
        assert_eq!(enumerate_updg(&ex1, Some(3)).unwrap().count(), 3);
    }

    #[test]
    fn printed_table_errata() {
        let t = fixtures::table1();
        let ex1 = fixtures::ex1();
        assert_eq!(
            labeled(&ex1, &realization_check(&ex1, &t).unwrap()),
            pairs(&[("b", "a"), ("b", "e")])
        );
        let raw = fixtures::ex1_raw();
        assert_eq!(
            labeled(&raw, &realization_check(&raw, &t).unwrap()),
            pairs(&[("b", "a"), ("b", "e"), ("e", "b")])
        );
        assert_eq!(
            realization_check(&fixtures::fork(), &t),
            Err(Error::UniverseMismatch)
        );
    }
}
