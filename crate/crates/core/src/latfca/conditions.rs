//! First-order conditions on the relation (or its groupoid) that
//! characterize distributivity of the image lattices.

use super::{cji, image_lattice, is_spatial};
use crate::approx::OperatorId;
use crate::error::{Error, Result};
use crate::magma::{realization_check, FiniteGroupoid};
use crate::relcore::FiniteRelationSpace;
use crate::subset::Subset;

/// Outcome of a `∀a,b ... ∃n,h` condition: the first `(n, h)` found for
/// each premise pair, or the first pair that has none.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairWitnesses {
    pub holds: bool,
    pub witnesses: Vec<((usize, usize), (usize, usize))>,
    pub failure: Option<(usize, usize)>,
}

fn scan_pairs(
    n: usize,
    premise: impl Fn(usize, usize) -> bool,
    witness: impl Fn(usize, usize, usize, usize) -> bool,
) -> PairWitnesses {
    let mut witnesses = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if !premise(a, b) {
                continue;
            }
            let found = (0..n)
                .flat_map(|m| (0..n).map(move |h| (m, h)))
                .find(|&(m, h)| witness(a, b, m, h));
            match found {
                Some(nh) => witnesses.push(((a, b), nh)),
                None => {
                    return PairWitnesses {
                        holds: false,
                        witnesses,
                        failure: Some((a, b)),
                    }
                }
            }
        }
    }
    PairWitnesses {
        holds: true,
        witnesses,
        failure: None,
    }
}

/// `Rab ⇒ ∃n,h: Ran ∧ Rhb ∧ ∀x (Rxn ⇒ [h]_i ⊆ [x]_i)`, with `[x]_i` the
/// successors of `x`. Witnesses are searched in lexicographic `(n, h)` order.
pub fn tr23_condition(space: &FiniteRelationSpace) -> PairWitnesses {
    scan_pairs(
        space.len(),
        |a, b| space.related(a, b),
        |a, b, m, h| {
            space.related(a, m)
                && space.related(h, b)
                && space
                    .predecessors(m)
                    .iter()
                    .all(|x| space.successors(h).is_subset(space.successors(x)))
        },
    )
}

/// `ab = b ⇒ ∃n,h ∀k,s: an = n ∧ hb = b ∧ (kn = n ⇒ (hs = s ⇒ ks = s))`.
pub fn triagrp_condition(space: &FiniteRelationSpace, g: &FiniteGroupoid) -> Result<PairWitnesses> {
    let bad = realization_check(space, g)?;
    if !bad.is_empty() {
        return Err(Error::RealizationMismatch(bad.len()));
    }
    let n = g.len();
    Ok(scan_pairs(
        n,
        |a, b| g.op(a, b) == b,
        |a, b, m, h| {
            (0..n).all(|k| {
                (0..n).all(|s| {
                    g.op(a, m) == m
                        && g.op(h, b) == b
                        && (g.op(k, m) != m || g.op(h, s) != s || g.op(k, s) == s)
                })
            })
        },
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EiKind {
    /// Successor granules in the `△` lattice.
    Ei3,
    /// Predecessor granules in the `▲` lattice.
    Ei4,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EiCheck {
    pub holds: bool,
    /// A point whose join-irreducible granule is covered by the granules
    /// not containing it.
    pub failure: Option<usize>,
}

/// For every `s` whose granule is completely join-irreducible in the
/// matching image lattice: the granule is not inside the union of the
/// granules that do not contain it.
pub fn ei_condition(space: &FiniteRelationSpace, which: EiKind) -> Result<EiCheck> {
    let (op, granule): (OperatorId, &dyn Fn(usize) -> Subset) = match which {
        EiKind::Ei3 => (OperatorId::TriUp, &|x| space.successors(x)),
        EiKind::Ei4 => (OperatorId::BtriUp, &|x| space.predecessors(x)),
    };
    let l = image_lattice(space, op)?;
    if !is_spatial(&l) {
        return Err(Error::PreconditionViolated("spatial".into()));
    }
    let irreducible: Vec<Subset> = cji(&l).iter().map(|&x| l.elements()[x]).collect();
    let n = space.len();
    for s in 0..n {
        let gs = granule(s);
        if !irreducible.contains(&gs) {
            continue;
        }
        let others = (0..n)
            .map(granule)
            .filter(|gx| !gs.is_subset(*gx))
            .fold(Subset::EMPTY, Subset::union);
        if gs.is_subset(others) {
            return Ok(EiCheck {
                holds: false,
                failure: Some(s),
            });
        }
    }
    Ok(EiCheck {
        holds: true,
        failure: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::latfca::is_completely_distributive;
    use crate::magma::{build_updg, directoid_from_poset, Canonical};

    #[test]
    fn transitive_fixtures_satisfy_tr23() {
        assert!(tr23_condition(&fixtures::ch3()).holds);
        let toy2 = tr23_condition(&fixtures::toy2());
        assert!(toy2.holds);
        assert_eq!(toy2.witnesses.len(), 3);
    }

    #[test]
    fn ei3_on_chain_and_identity() {
        assert!(ei_condition(&fixtures::ch3(), EiKind::Ei3).unwrap().holds);
        assert!(ei_condition(&fixtures::id(3), EiKind::Ei3).unwrap().holds);
    }

    #[test]
    fn triagrp_on_chain_directoid() {
        let ch3 = fixtures::ch3();
        let g = directoid_from_poset(&ch3, &Canonical).unwrap();
        assert!(triagrp_condition(&ch3, &g).unwrap().holds);
    }

    #[test]
    fn tr23_matches_distributivity_on_fixtures() {
        for (name, space) in fixtures::named_spaces() {
            let l = image_lattice(&space, OperatorId::TriUp).unwrap();
            let cd = is_completely_distributive(&l).distributive;
            assert_eq!(tr23_condition(&space).holds, cd, "{name}");
            if let Ok(g) = build_updg(&space, &Canonical) {
                assert_eq!(triagrp_condition(&space, &g).unwrap().holds, cd, "{name}");
            }
        }
    }

    #[test]
    fn triagrp_rejects_a_foreign_table() {
        assert_eq!(
            triagrp_condition(&fixtures::ex1(), &fixtures::table1()),
            Err(Error::RealizationMismatch(2))
        );
    }
}
