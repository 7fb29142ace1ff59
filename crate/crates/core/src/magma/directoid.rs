//! Join directoids and their construction from up-directed posets.

use super::updg::Chooser;
use super::{holds_identity, FiniteGroupoid, IdentityCheck};
use crate::error::{Error, Result};
use crate::relcore::{classify, FiniteRelationSpace, Property};
use crate::subset::Subset;

pub const DIRECTOID_AXIOMS: [(&str, &str); 4] = [
    ("dir1", "aa = a"),
    ("dir2", "(ab)a = ab"),
    ("dir3", "b(ab) = ab"),
    ("dir4", "a((ab)c) = (ab)c"),
];

#[derive(Clone, Debug)]
pub struct DirectoidCheck {
    pub axioms: Vec<(&'static str, IdentityCheck)>,
    /// `{(a, b) : ab = b}` when every axiom holds.
    pub order: Option<FiniteRelationSpace>,
}

impl DirectoidCheck {
    pub fn is_directoid(&self) -> bool {
        self.axioms.iter().all(|(_, c)| c.holds)
    }

    pub fn axiom(&self, name: &str) -> Option<&IdentityCheck> {
        self.axioms.iter().find(|(n, _)| *n == name).map(|(_, c)| c)
    }
}

pub fn directoid_check(g: &FiniteGroupoid) -> DirectoidCheck {
    let axioms: Vec<_> = DIRECTOID_AXIOMS
        .iter()
        .map(|&(name, text)| {
            (
                name,
                holds_identity(g, &text.parse().expect("axiom parses")),
            )
        })
        .collect();
    let all = axioms.iter().all(|(_, c)| c.holds);
    DirectoidCheck {
        axioms,
        order: all.then(|| g.induced_relation()),
    }
}

/// `ab = max(a, b)` on comparable pairs, otherwise a chosen common upper bound.
pub fn directoid_from_poset(
    space: &FiniteRelationSpace,
    chooser: &impl Chooser,
) -> Result<FiniteGroupoid> {
    let profile = classify(space);
    for p in [
        Property::Reflexive,
        Property::Antisymmetric,
        Property::Transitive,
        Property::UpDirected,
    ] {
        if !profile.holds(p) {
            return Err(Error::PreconditionViolated(p.name().into()));
        }
    }
    // Rab already yields b; the converse comparable case must yield a
    let max_first = |a: usize, b: usize, u: Subset| {
        if space.related(b, a) {
            a
        } else {
            chooser.choose(a, b, u)
        }
    };
    super::build_updg(space, &max_first)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::magma::Canonical;

    #[test]
    fn chain_gives_max() {
        let ch3 = fixtures::ch3();
        let g = directoid_from_poset(&ch3, &Canonical).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(g.op(a, b), a.max(b));
            }
        }
        let check = directoid_check(&g);
        assert!(check.is_directoid());
        assert_eq!(check.order.unwrap(), ch3);
    }

    #[test]
    fn fork_gives_directoid() {
        let fork = fixtures::fork();
        let g = directoid_from_poset(&fork, &Canonical).unwrap();
        let check = directoid_check(&g);
        assert!(check.is_directoid());
        assert_eq!(check.axiom("dir4").unwrap().assignments, 27);
        assert_eq!(check.order.unwrap(), fork);
    }

    #[test]
    fn printed_table_is_not_a_directoid() {
        let check = directoid_check(&fixtures::table1());
        assert!(!check.axiom("dir1").unwrap().holds);
        assert!(check.order.is_none());
    }

    #[test]
    fn preconditions_name_the_failing_flag() {
        assert_eq!(
            directoid_from_poset(&fixtures::ex1(), &Canonical),
            Err(Error::PreconditionViolated("reflexive".into()))
        );
        assert_eq!(
            directoid_from_poset(&fixtures::id(2), &Canonical),
            Err(Error::PreconditionViolated("up_directed".into()))
        );
    }
}
