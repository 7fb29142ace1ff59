use super::{
    concept_lattice, context_of, dual_iso_check, ei_condition, image_lattice,
    is_completely_distributive, th40_condition, tr23_condition, triagrp_condition, EiKind,
    FiniteLattice, LATTICE_BOUND,
};
use crate::approx::{approximate, OperatorId};
use crate::claims::{
    profiles, rng_for, sweep, AuditConfig, Binding, ClaimInfo, ClaimReport, Hypothesis,
    ReportBuilder, SweepMode, Witness, WitnessValue,
};
use crate::error::{Error, Result};
use crate::magma::{build_updg, Canonical};
use crate::relcore::{check_bound, FiniteRelationSpace, RelationProfile};
use crate::subset::Subset;

/// Everything the claims consult about one space, computed once.
struct Facts<'a> {
    space: &'a FiniteRelationSpace,
    profile: &'a RelationProfile,
    tri: FiniteLattice,
    btri: FiniteLattice,
    cd_tri: bool,
    cd_btri: bool,
}

impl<'a> Facts<'a> {
    fn new(space: &'a FiniteRelationSpace, profile: &'a RelationProfile) -> Result<Self> {
        let tri = image_lattice(space, OperatorId::TriUp)?;
        let btri = image_lattice(space, OperatorId::BtriUp)?;
        Ok(Self {
            space,
            profile,
            cd_tri: is_completely_distributive(&tri).distributive,
            cd_btri: is_completely_distributive(&btri).distributive,
            tri,
            btri,
        })
    }
}

type WholeCheck = fn(&Facts) -> Result<Vec<(&'static str, bool)>>;

enum Check {
    /// A statement about the whole space, reported with named flags.
    Whole(WholeCheck),
    /// A statement about every pair of elements of one image lattice.
    Pairs {
        lattice: OperatorId,
        check: fn(&Facts, &FiniteLattice, usize, usize) -> bool,
    },
}

struct Claim {
    info: ClaimInfo,
    check: Check,
}

const fn whole(id: &'static str, hypothesis: Hypothesis, f: WholeCheck) -> Claim {
    Claim {
        info: ClaimInfo {
            id,
            hypothesis,
            asserted: true,
        },
        check: Check::Whole(f),
    }
}

const fn pairs(
    id: &'static str,
    lattice: OperatorId,
    check: fn(&Facts, &FiniteLattice, usize, usize) -> bool,
) -> Claim {
    Claim {
        info: ClaimInfo {
            id,
            hypothesis: Hypothesis::Any,
            asserted: true,
        },
        check: Check::Pairs { lattice, check },
    }
}

/// `X^{first second}`, applying `first` then `second`.
fn composite(
    space: &FiniteRelationSpace,
    x: Subset,
    first: OperatorId,
    second: OperatorId,
) -> Subset {
    approximate(space, approximate(space, x, first), second)
}

fn meet_formula(
    f: &Facts,
    l: &FiniteLattice,
    a: usize,
    b: usize,
    first: OperatorId,
    second: OperatorId,
) -> bool {
    let e = l.elements();
    composite(f.space, e[a].intersection(e[b]), first, second) == e[l.meet(a, b)]
}

/// The union of the granules lying inside `A ∩ B`.
fn meet_granules(
    l: &FiniteLattice,
    a: usize,
    b: usize,
    granule: impl Fn(usize) -> Subset,
    n: usize,
) -> bool {
    let e = l.elements();
    let cap = e[a].intersection(e[b]);
    let inside = (0..n)
        .map(granule)
        .filter(|g| g.is_subset(cap))
        .fold(Subset::EMPTY, Subset::union);
    inside == e[l.meet(a, b)]
}

/// Both sides of an equivalence, holding when they agree.
fn iff(
    left: (&'static str, bool),
    right: (&'static str, bool),
) -> Result<Vec<(&'static str, bool)>> {
    Ok(vec![left, right])
}

static CLAIMS: &[Claim] = &[
    pairs("tr1.join", OperatorId::TriUp, |_, l, a, b| {
        let e = l.elements();
        e[l.join(a, b)] == e[a].union(e[b])
    }),
    pairs("tr1.meet-formula", OperatorId::TriUp, |f, l, a, b| {
        meet_formula(f, l, a, b, OperatorId::BtriDown, OperatorId::TriUp)
    }),
    pairs("tr1.meet-formula.rtl", OperatorId::TriUp, |f, l, a, b| {
        meet_formula(f, l, a, b, OperatorId::TriUp, OperatorId::BtriDown)
    }),
    pairs("tr1.meet-granules", OperatorId::TriUp, |f, l, a, b| {
        meet_granules(l, a, b, |x| f.space.successors(x), f.space.len())
    }),
    pairs("bt-join", OperatorId::BtriUp, |_, l, a, b| {
        let e = l.elements();
        e[l.join(a, b)] == e[a].union(e[b])
    }),
    pairs("bt-meet-formula", OperatorId::BtriUp, |f, l, a, b| {
        meet_formula(f, l, a, b, OperatorId::TriDown, OperatorId::BtriUp)
    }),
    pairs("bt-meet-formula.rtl", OperatorId::BtriUp, |f, l, a, b| {
        meet_formula(f, l, a, b, OperatorId::BtriUp, OperatorId::TriDown)
    }),
    pairs("bt-meet-granules", OperatorId::BtriUp, |f, l, a, b| {
        meet_granules(l, a, b, |x| f.space.predecessors(x), f.space.len())
    }),
    whole("tr2", Hypothesis::Any, |f| {
        Ok(vec![("dual", dual_iso_check(f.space)?.tri)])
    }),
    whole("tr3", Hypothesis::Any, |f| {
        Ok(vec![("dual", dual_iso_check(f.space)?.btri)])
    }),
    whole("tr23", Hypothesis::Any, |f| {
        iff(
            ("condition", tr23_condition(f.space).holds),
            ("cd", f.cd_tri),
        )
    }),
    whole("concept-cd", Hypothesis::Any, |f| {
        let concept =
            is_completely_distributive(&concept_lattice(&context_of(f.space))?).distributive;
        iff(("cd", f.cd_tri), ("concept_cd", concept))
    }),
    whole("tr24", Hypothesis::Any, |f| {
        iff(
            ("ei3", ei_condition(f.space, EiKind::Ei3)?.holds),
            ("cd", f.cd_tri),
        )
    }),
    whole("cor2.5", Hypothesis::Any, |f| {
        iff(
            ("ei4", ei_condition(f.space, EiKind::Ei4)?.holds),
            ("cd", f.cd_btri),
        )
    }),
    whole("cor2.6.i", Hypothesis::ReflexiveAntisymmetric, |f| {
        iff(("cd", f.cd_tri), ("transitive", f.profile.transitive))
    }),
    whole("cor2.6.ii", Hypothesis::ReflexiveAntisymmetric, |f| {
        iff(("cd", f.cd_tri), ("cd_btri", f.cd_btri))
    }),
    whole("th40", Hypothesis::Any, |f| {
        let ctx = context_of(f.space);
        let concept = is_completely_distributive(&concept_lattice(&ctx)?).distributive;
        iff(
            ("condition", th40_condition(&ctx).is_none()),
            ("concept_cd", concept),
        )
    }),
    whole("triagrp", Hypothesis::Realizable, |f| {
        let g = build_updg(f.space, &Canonical)?;
        iff(
            ("condition", triagrp_condition(f.space, &g)?.holds),
            ("cd", f.cd_tri),
        )
    }),
];

pub fn claim_ids() -> Vec<&'static str> {
    CLAIMS.iter().map(|c| c.info.id).collect()
}

pub fn claim_info(id: &str) -> Option<ClaimInfo> {
    CLAIMS.iter().find(|c| c.info.id == id).map(|c| c.info)
}

/// Whole-space claims hold when their two sides agree; pair claims sweep
/// every pair of lattice elements.
pub fn audit(
    spaces: &[&FiniteRelationSpace],
    claim_ids: &[&str],
    config: &AuditConfig,
) -> Result<Vec<ClaimReport>> {
    let claims = claim_ids
        .iter()
        .map(|id| {
            CLAIMS
                .iter()
                .find(|c| c.info.id == *id)
                .ok_or_else(|| Error::UnknownClaim(id.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    let bound = config.bound.min(LATTICE_BOUND);
    for s in spaces {
        check_bound(s.len(), bound)?;
    }
    let profiles = profiles(spaces);
    let facts = spaces
        .iter()
        .zip(&profiles)
        .map(|(s, p)| Facts::new(s, p))
        .collect::<Result<Vec<_>>>()?;
    let mut reports = Vec::with_capacity(claims.len());
    for claim in claims {
        let mut builder = ReportBuilder::new(claim.info, config.mode);
        let mut rng = rng_for(&config.mode);
        for (idx, f) in facts.iter().enumerate() {
            if config.respect_hypotheses && !claim.info.hypothesis.admits(f.space, f.profile) {
                builder.skip();
                continue;
            }
            match &claim.check {
                Check::Whole(check) => {
                    let flags = check(f)?;
                    let holds = match flags.as_slice() {
                        [(_, v)] => *v,
                        _ => flags.windows(2).all(|w| w[0].1 == w[1].1),
                    };
                    let witness = (!holds).then(|| Witness {
                        space: idx,
                        bindings: flags
                            .iter()
                            .map(|&(name, v)| Binding::new(name, WitnessValue::Flag(v)))
                            .collect(),
                    });
                    builder.record(1, witness);
                }
                Check::Pairs { lattice, check } => {
                    let l = if *lattice == OperatorId::TriUp {
                        &f.tri
                    } else {
                        &f.btri
                    };
                    let s = sweep(l.len(), 2, &config.mode, &mut rng, |v| {
                        check(f, l, v[0], v[1])
                    });
                    let witness = s.failure.map(|v| Witness {
                        space: idx,
                        bindings: ["A", "B"]
                            .iter()
                            .zip(v)
                            .map(|(&name, x)| Binding::set(name, f.space, l.elements()[x]))
                            .collect(),
                    });
                    builder.record(s.checked, witness);
                }
            }
        }
        reports.push(builder.finish(config.mode == SweepMode::Exhaustive));
    }
    Ok(reports)
}
