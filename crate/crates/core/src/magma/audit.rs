//! Claims about relation-derived groupoids, evaluated over families of spaces.

use std::sync::LazyLock;

use super::{
    build_updg, directoid_check, directoid_from_poset, enumerate_updg, holds_identity,
    pawlak_groupoid, random_updg, realization_check, Canonical, FiniteGroupoid, Identity,
    IdentityCheck, PAWLAK_AXIOMS, PAWLAK_CONSEQUENCES,
};
use crate::claims::{
    profiles, rng_for, AuditConfig, Binding, ClaimInfo, ClaimReport, Hypothesis, ReportBuilder,
    SweepMode, Witness, WitnessValue,
};
use crate::error::{Error, Result};
use crate::relcore::{
    classify, morphism_check, FiniteRelationSpace, MorphismKind, RelationProfile, SpaceMap,
};

/// Groupoids examined per space before a bridge claim is reported as sampled.
pub const BRIDGE_LIMIT: usize = 10_000;

/// Largest universe whose endomorphisms are enumerated.
const ENDOMORPHISM_BOUND: usize = 6;

fn parse(text: &str) -> Identity {
    text.parse().expect("built-in identity parses")
}

struct Laws {
    idempotent: Identity,
    symmetric: Identity,
    transitive: Identity,
    commutative: Identity,
    dir2: Identity,
    associative: Identity,
    absorb_left: Identity,
    absorb_right: Identity,
}

static LAWS: LazyLock<Laws> = LazyLock::new(|| Laws {
    idempotent: parse("aa = a"),
    symmetric: parse("(ab)a = a"),
    transitive: parse("a((ab)c) = (ab)c"),
    commutative: parse("ab = ba"),
    dir2: parse("(ab)a = ab"),
    associative: parse("(ab)c = a(bc)"),
    absorb_left: parse("a(ab) = ab"),
    absorb_right: parse("b(ab) = ab"),
});

fn element(g: &FiniteGroupoid, name: impl Into<String>, x: usize) -> Binding {
    Binding::new(name, WitnessValue::Element(g.label(x).to_string()))
}

fn assignment_bindings(g: &FiniteGroupoid, check: &IdentityCheck) -> Vec<Binding> {
    check
        .witness
        .iter()
        .flatten()
        .map(|&(v, x)| element(g, v.to_string(), x))
        .collect()
}

/// A violated per-groupoid condition, as bindings.
type Violation = Option<Vec<Binding>>;

/// `relation ⇔ identity` (or `⇒` when `one_way`), with flags and the
/// identity's failing assignment as witness.
fn link(g: &FiniteGroupoid, relation: bool, law: &Identity, one_way: bool) -> Violation {
    let check = holds_identity(g, law);
    let ok = if one_way {
        !check.holds || relation
    } else {
        relation == check.holds
    };
    if ok {
        return None;
    }
    let mut b = vec![
        Binding::new("relation", WitnessValue::Flag(relation)),
        Binding::new("identity", WitnessValue::Flag(check.holds)),
    ];
    b.extend(assignment_bindings(g, &check));
    Some(b)
}

type GroupoidCheck = fn(&FiniteRelationSpace, &RelationProfile, &FiniteGroupoid) -> Violation;

enum Kind {
    /// Identity on the space's `a·b = a if Rab else b` groupoid.
    Pawlak(&'static str),
    PawlakCancel,
    /// Condition on every groupoid realizing the relation.
    Realizing(GroupoidCheck),
    /// Forced cells commute with every endomorphism.
    Morphism,
    /// Construction from a directed poset yields a directoid recovering the order.
    DirectoidFromPoset,
}

struct Claim {
    info: ClaimInfo,
    kind: Kind,
}

const fn claim(id: &'static str, hypothesis: Hypothesis, kind: Kind) -> Claim {
    Claim {
        info: ClaimInfo {
            id,
            hypothesis,
            asserted: true,
        },
        kind,
    }
}

const EQ: Hypothesis = Hypothesis::Equivalence;
const RZ: Hypothesis = Hypothesis::Realizable;

fn thm2(_: &FiniteRelationSpace, p: &RelationProfile, g: &FiniteGroupoid) -> Violation {
    let laws = &*LAWS;
    let satisfied = [&laws.idempotent, &laws.absorb_left, &laws.absorb_right]
        .iter()
        .all(|law| holds_identity(g, law).holds);
    let forward = !p.reflexive || satisfied;
    let backward = !satisfied || {
        let r = g.induced_relation();
        let q = classify(&r);
        q.reflexive
            && q.up_directed
            && realization_check(&r, g)
                .map(|v| v.is_empty())
                .unwrap_or(false)
    };
    (!(forward && backward)).then(|| {
        vec![
            Binding::new("relation", WitnessValue::Flag(p.reflexive)),
            Binding::new("identity", WitnessValue::Flag(satisfied)),
        ]
    })
}

static CLAIMS: LazyLock<Vec<Claim>> = LazyLock::new(|| {
    let mut v: Vec<Claim> = PAWLAK_AXIOMS
        .iter()
        .chain(&PAWLAK_CONSEQUENCES)
        .map(|&(id, text)| claim(id, EQ, Kind::Pawlak(text)))
        .collect();
    v.push(claim("pawlak.cancel", EQ, Kind::PawlakCancel));
    v.extend([
        claim("thm2", RZ, Kind::Realizing(thm2)),
        claim(
            "thm3.star-up-directed",
            RZ,
            Kind::Realizing(|_, _, g| {
                let w = classify(&g.induced_star_relation())
                    .witnesses
                    .remove(&crate::relcore::Property::UpDirected);
                w.map(|pair| vec![element(g, "a", pair[0]), element(g, "b", pair[1])])
            }),
        ),
        claim(
            "thm3.r-eq-r-star",
            RZ,
            Kind::Realizing(|_, _, g| {
                let laws = &*LAWS;
                let premise = holds_identity(g, &laws.absorb_left).holds
                    && holds_identity(g, &laws.absorb_right).holds;
                (premise && g.induced_relation() != g.induced_star_relation()).then(Vec::new)
            }),
        ),
        claim(
            "thm3.round-trip",
            RZ,
            Kind::Realizing(|s, _, g| {
                let r = g.induced_relation();
                let n = s.len();
                (0..n * n)
                    .map(|i| (i / n, i % n))
                    .find(|&(a, b)| r.related(a, b) != s.related(a, b))
                    .map(|(a, b)| vec![element(g, "a", a), element(g, "b", b)])
            }),
        ),
        claim(
            "thm4.reflexive",
            RZ,
            Kind::Realizing(|_, p, g| link(g, p.reflexive, &LAWS.idempotent, false)),
        ),
        claim(
            "thm4.symmetric",
            RZ,
            Kind::Realizing(|_, p, g| link(g, p.symmetric, &LAWS.symmetric, false)),
        ),
        claim(
            "thm4.transitive",
            RZ,
            Kind::Realizing(|_, p, g| link(g, p.transitive, &LAWS.transitive, false)),
        ),
        claim(
            "thm4.commutative-antisymmetric",
            RZ,
            Kind::Realizing(|_, p, g| link(g, p.antisymmetric, &LAWS.commutative, true)),
        ),
        claim(
            "thm4.dir2-antisymmetric",
            RZ,
            Kind::Realizing(|_, p, g| link(g, p.antisymmetric, &LAWS.dir2, true)),
        ),
        claim(
            "thm4.associative-transitive",
            RZ,
            Kind::Realizing(|_, p, g| link(g, p.transitive, &LAWS.associative, true)),
        ),
        claim("morphism.forced-cells", RZ, Kind::Morphism),
        claim("thm17", Hypothesis::DirectedPoset, Kind::DirectoidFromPoset),
        claim(
            "prop9",
            Hypothesis::DirectedPoset,
            Kind::Realizing(|_, _, g| {
                // a realizing groupoid that is a directoid carries a partial
                // order with a, b ≤ ab and a ≤ b → ab = ba = b
                let check = directoid_check(g);
                let order = check.order?;
                let n = g.len();
                let q = classify(&order);
                if !q.is_partial_order() {
                    return Some(vec![Binding::new(
                        "partial_order",
                        WitnessValue::Flag(false),
                    )]);
                }
                for a in 0..n {
                    for b in 0..n {
                        let ab = g.op(a, b);
                        let jd1 = order.related(a, ab) && order.related(b, ab);
                        let jd2 = !order.related(a, b) || (ab == b && g.op(b, a) == b);
                        if !(jd1 && jd2) {
                            return Some(vec![element(g, "a", a), element(g, "b", b)]);
                        }
                    }
                }
                None
            }),
        ),
    ]);
    v
});

const BRIDGE_IDS: [&str; 11] = [
    "thm2",
    "thm3.star-up-directed",
    "thm3.r-eq-r-star",
    "thm3.round-trip",
    "thm4.reflexive",
    "thm4.symmetric",
    "thm4.transitive",
    "thm4.commutative-antisymmetric",
    "thm4.dir2-antisymmetric",
    "thm4.associative-transitive",
    "morphism.forced-cells",
];

pub fn claim_ids() -> Vec<&'static str> {
    CLAIMS.iter().map(|c| c.info.id).collect()
}

pub fn claim_info(id: &str) -> Option<ClaimInfo> {
    CLAIMS.iter().find(|c| c.info.id == id).map(|c| c.info)
}

fn find(id: &str) -> Result<&'static Claim> {
    CLAIMS
        .iter()
        .find(|c| c.info.id == id)
        .ok_or_else(|| Error::UnknownClaim(id.into()))
}

/// Checks one identity on a groupoid; the witness binds its variables.
pub(super) fn identity_report(
    id: &'static str,
    hypothesis: Hypothesis,
    g: &FiniteGroupoid,
    text: &str,
) -> ClaimReport {
    let info = ClaimInfo {
        id,
        hypothesis,
        asserted: true,
    };
    let mut b = ReportBuilder::new(info, SweepMode::Exhaustive);
    let (checked, witness) = identity_outcome(g, &parse(text), 0);
    b.record(checked, witness);
    b.finish(true)
}

fn identity_outcome(g: &FiniteGroupoid, law: &Identity, space: usize) -> (u64, Option<Witness>) {
    let check = holds_identity(g, law);
    let witness = (!check.holds).then(|| Witness {
        space,
        bindings: assignment_bindings(g, &check),
    });
    (check.assignments, witness)
}

/// For each `e`: `(∀a ∀x)(ex = ea → x = a)` iff `(∀x) xe = e`.
fn cancellation_outcome(g: &FiniteGroupoid, space: usize) -> (u64, Option<Witness>) {
    let n = g.len();
    for e in 0..n {
        let left_cancel = (0..n).all(|a| (0..n).all(|x| g.op(e, x) != g.op(e, a) || x == a));
        let absorbs = (0..n).all(|x| g.op(x, e) == e);
        if left_cancel != absorbs {
            return (
                (e + 1) as u64,
                Some(Witness {
                    space,
                    bindings: vec![
                        element(g, "e", e),
                        Binding::new("left_cancellative", WitnessValue::Flag(left_cancel)),
                        Binding::new("absorbing", WitnessValue::Flag(absorbs)),
                    ],
                }),
            );
        }
    }
    (n as u64, None)
}

pub(super) fn cancellation_report(g: &FiniteGroupoid) -> ClaimReport {
    let info = find("pawlak.cancel").expect("registered").info;
    let mut b = ReportBuilder::new(info, SweepMode::Exhaustive);
    let (checked, witness) = cancellation_outcome(g, 0);
    b.record(checked, witness);
    b.finish(true)
}

/// Endomorphisms `f` and pairs `Rab` with `f(ab) ≠ f(a)f(b)`.
fn morphism_outcome(
    s: &FiniteRelationSpace,
    g: &FiniteGroupoid,
    space: usize,
) -> (u64, Option<Witness>) {
    let n = s.len();
    let mut map = vec![0usize; n];
    let mut checked = 0;
    loop {
        let f = SpaceMap::new(s, s, map.clone()).expect("total map");
        if morphism_check(&f).kind != MorphismKind::NotMorphism {
            checked += 1;
            for (a, b) in s.pairs() {
                if map[g.op(a, b)] != g.op(map[a], map[b]) {
                    let image =
                        (0..n).map(|x| vec![s.label(x).to_string(), s.label(map[x]).to_string()]);
                    return (
                        checked,
                        Some(Witness {
                            space,
                            bindings: vec![
                                Binding::new("map", WitnessValue::Family(image.collect())),
                                element(g, "a", a),
                                element(g, "b", b),
                            ],
                        }),
                    );
                }
            }
        }
        if !crate::claims::advance(&mut map, n) {
            return (checked, None);
        }
    }
}

/// Runs each claim on every space of the family.
///
/// Claims about realizing groupoids enumerate up to [`BRIDGE_LIMIT`]
/// groupoids per space in exhaustive mode, or draw `samples` random ones in
/// sampled mode.
pub fn audit(
    spaces: &[&FiniteRelationSpace],
    claim_ids: &[&str],
    config: &AuditConfig,
) -> Result<Vec<ClaimReport>> {
    let claims = claim_ids
        .iter()
        .map(|id| find(id))
        .collect::<Result<Vec<_>>>()?;
    let profiles = profiles(spaces);
    let mut reports = Vec::with_capacity(claims.len());
    for claim in claims {
        let mut builder = ReportBuilder::new(claim.info, config.mode);
        let mut rng = rng_for(&config.mode);
        let mut complete = config.mode == SweepMode::Exhaustive;
        for (idx, (&space, profile)) in spaces.iter().zip(&profiles).enumerate() {
            let admitted = claim.info.hypothesis.admits(space, profile);
            if config.respect_hypotheses && !admitted {
                builder.skip();
                continue;
            }
            match &claim.kind {
                Kind::Pawlak(text) => {
                    let (c, w) = identity_outcome(&pawlak_groupoid(space), &parse(text), idx);
                    builder.record(c, w);
                }
                Kind::PawlakCancel => {
                    let (c, w) = cancellation_outcome(&pawlak_groupoid(space), idx);
                    builder.record(c, w);
                }
                Kind::Realizing(check) => {
                    if !space.unfillable_pairs().is_empty() {
                        builder.skip();
                        continue;
                    }
                    let groupoids: Box<dyn Iterator<Item = FiniteGroupoid>> = match config.mode {
                        SweepMode::Exhaustive => {
                            let count = super::count_updg(space)?;
                            if count > BRIDGE_LIMIT as u128 {
                                complete = false;
                            }
                            Box::new(enumerate_updg(space, Some(BRIDGE_LIMIT))?)
                        }
                        SweepMode::Sampled { samples, .. } => {
                            let drawn: Vec<_> = (0..samples)
                                .map(|_| random_updg(space, &mut rng))
                                .collect::<Result<_>>()?;
                            Box::new(drawn.into_iter())
                        }
                    };
                    let mut checked = 0;
                    let mut witness = None;
                    for (k, g) in groupoids.enumerate() {
                        checked += 1;
                        if let Some(mut bindings) = check(space, profile, &g) {
                            bindings.insert(
                                0,
                                Binding::new("groupoid", WitnessValue::Element(k.to_string())),
                            );
                            witness = Some(Witness {
                                space: idx,
                                bindings,
                            });
                            break;
                        }
                    }
                    builder.record(checked, witness);
                }
                Kind::Morphism => {
                    if space.len() > ENDOMORPHISM_BOUND || !space.unfillable_pairs().is_empty() {
                        builder.skip();
                        continue;
                    }
                    let g = build_updg(space, &Canonical)?;
                    let (c, w) = morphism_outcome(space, &g, idx);
                    builder.record(c, w);
                }
                Kind::DirectoidFromPoset => {
                    let outcome = directoid_from_poset(space, &Canonical);
                    let witness = match outcome {
                        Err(Error::PreconditionViolated(flag)) => {
                            Some(vec![Binding::new(flag, WitnessValue::Flag(false))])
                        }
                        Err(e) => return Err(e),
                        Ok(g) => {
                            let check = directoid_check(&g);
                            match (check.axioms.iter().find(|(_, c)| !c.holds), check.order) {
                                (Some((name, c)), _) => {
                                    let mut b =
                                        vec![Binding::new(*name, WitnessValue::Flag(false))];
                                    b.extend(assignment_bindings(&g, c));
                                    Some(b)
                                }
                                (None, Some(order)) if order != *space => Some(vec![Binding::new(
                                    "order_recovered",
                                    WitnessValue::Flag(false),
                                )]),
                                _ => None,
                            }
                        }
                    };
                    builder.record(
                        1,
                        witness.map(|bindings| Witness {
                            space: idx,
                            bindings,
                        }),
                    );
                }
            }
        }
        reports.push(builder.finish(complete));
    }
    Ok(reports)
}

/// The groupoid-correspondence claims for one space, over every realizing
/// groupoid (up to [`BRIDGE_LIMIT`]).
pub fn bridge_audit(space: &FiniteRelationSpace) -> Result<Vec<ClaimReport>> {
    if let Some(&(a, b)) = space.unfillable_pairs().first() {
        return Err(Error::NotUpDirected {
            a: space.label(a).into(),
            b: space.label(b).into(),
        });
    }
    audit(
        &[space],
        &BRIDGE_IDS,
        &AuditConfig::default().ignoring_hypotheses(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::claims::Verdict;
    use crate::fixtures;

    #[test]
    fn bridge_holds_on_small_fixtures() {
        for space in [fixtures::toy2(), fixtures::ch3(), fixtures::fork()] {
            for r in bridge_audit(&space).unwrap() {
                assert_eq!(
                    r.verdict,
                    Verdict::HoldsExhaustively,
                    "{} {:?}",
                    r.claim,
                    r.witness
                );
            }
        }
    }

    #[test]
    fn bridge_on_ex1_is_truncated_but_clean() {
        let ex1 = fixtures::ex1();
        assert!(crate::magma::count_updg(&ex1).unwrap() > BRIDGE_LIMIT as u128);
        for r in bridge_audit(&ex1).unwrap() {
            let expected = if r.claim == "morphism.forced-cells" {
                Verdict::HoldsExhaustively
            } else {
                Verdict::HoldsOnSample
            };
            assert_eq!(r.verdict, expected, "{}", r.claim);
        }
    }

    #[test]
    fn bridge_requires_fillable_relation() {
        assert!(matches!(
            bridge_audit(&fixtures::id(2)),
            Err(Error::NotUpDirected { .. })
        ));
    }

    #[test]
    fn canonical_groupoid_of_ex1_is_not_idempotent() {
        let g = build_updg(&fixtures::ex1(), &Canonical).unwrap();
        assert!(!holds_identity(&g, &LAWS.idempotent).holds);
    }

    #[test]
    fn pawlak_claims_gate_on_equivalences() {
        let part = FiniteRelationSpace::numbered(3, |a, b| (a == 0) == (b == 0)).unwrap();
        let ch3 = fixtures::ch3();
        let ids = claim_ids();
        let pawlak: Vec<&str> = ids
            .iter()
            .copied()
            .filter(|id| id.starts_with('E') || id.starts_with("pawlak"))
            .collect();
        let reports = audit(&[&part, &ch3], &pawlak, &AuditConfig::default()).unwrap();
        for r in reports {
            // the printed ninth consequence is refuted on this partition
            let expected = if r.claim == "pawlak.c9" {
                Verdict::Fails
            } else {
                Verdict::HoldsExhaustively
            };
            assert_eq!(r.verdict, expected, "{}", r.claim);
            assert_eq!(r.skipped, 1);
        }
    }

    #[test]
    fn directoid_claims_on_posets() {
        let reports = audit(
            &[&fixtures::ch3(), &fixtures::fork()],
            &["thm17", "prop9"],
            &AuditConfig::default(),
        )
        .unwrap();
        for r in reports {
            assert_eq!(r.verdict, Verdict::HoldsExhaustively, "{}", r.claim);
        }
    }
}
