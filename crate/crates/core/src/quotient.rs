//! Rough equalities on the powerset, the quotient by them, and the algebra
//! of class-level operations on the standard quotient.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::approx::{approximate, OperatorId};
use crate::claims::{
    profiles, rng_for, sweep, AuditConfig, Binding, ClaimInfo, ClaimReport, Hypothesis,
    ReportBuilder, SweepMode, Witness, WitnessValue,
};
use crate::error::{Error, Result};
use crate::magma::FiniteGroupoid;
use crate::powgrp::{lift_product, split_op, LiftedProductContext, SplitOp};
use crate::relcore::{check_bound, FiniteRelationSpace};
use crate::subset::Subset;

/// Largest universe whose powerset is partitioned into classes.
pub const QUOTIENT_BOUND: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RoughKind {
    /// Same lower and upper approximation.
    Standard,
    /// Same lower approximation.
    L,
    /// Same upper approximation.
    U,
}

impl FromStr for RoughKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" | "both" => Ok(Self::Standard),
            "l" => Ok(Self::L),
            "u" => Ok(Self::U),
            _ => Err(Error::Document(format!("unknown rough equality `{s}`"))),
        }
    }
}

fn lower(space: &FiniteRelationSpace, x: Subset) -> Subset {
    approximate(space, x, OperatorId::L)
}

fn upper(space: &FiniteRelationSpace, x: Subset) -> Subset {
    approximate(space, x, OperatorId::U)
}

pub fn rough_equal(space: &FiniteRelationSpace, a: Subset, b: Subset, kind: RoughKind) -> bool {
    let l = || lower(space, a) == lower(space, b);
    let u = || upper(space, a) == upper(space, b);
    match kind {
        RoughKind::Standard => l() && u(),
        RoughKind::L => l(),
        RoughKind::U => u(),
    }
}

/// `a ⊑ b`: the selected approximations of `a` are contained in those of `b`.
pub fn rough_leq(space: &FiniteRelationSpace, a: Subset, b: Subset, kind: RoughKind) -> bool {
    let l = || lower(space, a).is_subset(lower(space, b));
    let u = || upper(space, a).is_subset(upper(space, b));
    match kind {
        RoughKind::Standard => l() && u(),
        RoughKind::L => l(),
        RoughKind::U => u(),
    }
}

/// One class of a rough equality. Members are sorted by bitmask; the
/// representatives are the shared approximations (`None` when the kind
/// does not fix that side).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoughClass {
    pub kind: RoughKind,
    pub members: Vec<Subset>,
    pub lower: Option<Subset>,
    pub upper: Option<Subset>,
}

impl RoughClass {
    pub fn contains(&self, x: Subset) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// Union of all members.
    pub fn join(&self) -> Subset {
        self.members
            .iter()
            .fold(Subset::EMPTY, |acc, &m| acc.union(m))
    }

    pub fn dump(&self, space: &FiniteRelationSpace) -> ClassDump {
        ClassDump {
            kind: self.kind,
            members: self.members.iter().map(|&m| space.labels_of(m)).collect(),
            lower: self.lower.map(|s| space.labels_of(s)),
            upper: self.upper.map(|s| space.labels_of(s)),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassDump {
    pub kind: RoughKind,
    pub members: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper: Option<Vec<String>>,
}

/// The powerset partitioned by a rough equality.
#[derive(Clone, Debug)]
pub struct Quotient {
    space: FiniteRelationSpace,
    kind: RoughKind,
    classes: Vec<RoughClass>,
    class_of: Vec<usize>,
}

/// Classes are ordered by their least member.
pub fn quotient(space: &FiniteRelationSpace, kind: RoughKind) -> Result<Quotient> {
    quotient_bounded(space, kind, QUOTIENT_BOUND)
}

pub fn quotient_bounded(
    space: &FiniteRelationSpace,
    kind: RoughKind,
    bound: usize,
) -> Result<Quotient> {
    check_bound(space.len(), bound)?;
    let mut keys: Vec<(Option<Subset>, Option<Subset>)> = Vec::new();
    let mut classes: Vec<RoughClass> = Vec::new();
    let mut class_of = Vec::with_capacity(1 << space.len());
    for x in Subset::all(space.len()) {
        let key = (
            (kind != RoughKind::U).then(|| lower(space, x)),
            (kind != RoughKind::L).then(|| upper(space, x)),
        );
        let idx = match keys.iter().position(|k| *k == key) {
            Some(i) => i,
            None => {
                keys.push(key);
                classes.push(RoughClass {
                    kind,
                    members: Vec::new(),
                    lower: key.0,
                    upper: key.1,
                });
                classes.len() - 1
            }
        };
        classes[idx].members.push(x);
        class_of.push(idx);
    }
    Ok(Quotient {
        space: space.clone(),
        kind,
        classes,
        class_of,
    })
}

impl Quotient {
    pub fn space(&self) -> &FiniteRelationSpace {
        &self.space
    }

    pub fn kind(&self) -> RoughKind {
        self.kind
    }

    pub fn classes(&self) -> &[RoughClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_index(&self, x: Subset) -> usize {
        self.class_of[x.0 as usize]
    }

    pub fn class_of(&self, x: Subset) -> &RoughClass {
        &self.classes[self.class_index(x)]
    }

    /// Index of a class, or `ForeignClass` if it is not one of ours.
    pub fn index_of(&self, class: &RoughClass) -> Result<usize> {
        let first = *class.members.first().ok_or(Error::ForeignClass)?;
        if first.0 as usize >= self.class_of.len() {
            return Err(Error::ForeignClass);
        }
        let idx = self.class_index(first);
        if self.classes[idx] == *class {
            Ok(idx)
        } else {
            Err(Error::ForeignClass)
        }
    }

    /// Every class of this quotient lies inside one class of `coarser`.
    pub fn refines(&self, coarser: &Quotient) -> bool {
        self.classes.iter().all(|c| {
            let target = coarser.class_index(c.members[0]);
            c.members.iter().all(|&m| coarser.class_index(m) == target)
        })
    }
}

/// Splits a member of a standard class as `a_l ∪ K` with `K = X \ a_l`,
/// checking `K^l = ∅` and `a_l ∪ K^u = a_u`.
pub fn decompose(q: &Quotient, class: &RoughClass, x: Subset) -> Result<(Subset, Subset)> {
    q.index_of(class)?;
    if class.kind != RoughKind::Standard {
        return Err(Error::Representation(
            "decomposition needs a standard class".into(),
        ));
    }
    if !class.contains(x) {
        return Err(Error::Representation(format!(
            "{} is not a member",
            q.space.show(x)
        )));
    }
    let a_l = class
        .lower
        .expect("standard class has both representatives");
    let a_u = class
        .upper
        .expect("standard class has both representatives");
    let k = x.difference(a_l);
    let space = &q.space;
    if !lower(space, k).is_empty() {
        return Err(Error::Representation(format!(
            "K = {} has nonempty lower approximation {}",
            space.show(k),
            space.show(lower(space, k))
        )));
    }
    if a_l.union(upper(space, k)) != a_u {
        return Err(Error::Representation(format!(
            "a_l ∪ K^u = {} differs from a_u = {}",
            space.show(a_l.union(upper(space, k))),
            space.show(a_u)
        )));
    }
    Ok((a_l, k))
}

/// Operations on the standard quotient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RpaOp {
    /// Lifted groupoid product, class-wise.
    Product,
    Split(SplitOp),
    Union,
    Cap,
    /// Intersection of all pairwise member intersections.
    Star,
    Neg,
    L,
    U,
    /// Lower approximation of the union of the members.
    BigL,
    /// Upper approximation of the union of the members.
    BigU,
    Bottom,
    Top,
}

impl RpaOp {
    pub const ALL: [RpaOp; 17] = [
        Self::Product,
        Self::Split(SplitOp::N),
        Self::Split(SplitOp::I1),
        Self::Split(SplitOp::I2),
        Self::Split(SplitOp::O1),
        Self::Split(SplitOp::O2),
        Self::Split(SplitOp::O),
        Self::Union,
        Self::Cap,
        Self::Star,
        Self::Neg,
        Self::L,
        Self::U,
        Self::BigL,
        Self::BigU,
        Self::Bottom,
        Self::Top,
    ];

    pub fn arity(self) -> usize {
        match self {
            Self::Bottom | Self::Top => 0,
            Self::Neg | Self::L | Self::U | Self::BigL | Self::BigU => 1,
            _ => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Product => "product",
            Self::Split(op) => op.name(),
            Self::Union => "union",
            Self::Cap => "cap",
            Self::Star => "star",
            Self::Neg => "neg",
            Self::L => "L",
            Self::U => "U",
            Self::BigL => "bigL",
            Self::BigU => "bigU",
            Self::Bottom => "bot",
            Self::Top => "top",
        }
    }

    fn needs_groupoid(self) -> bool {
        matches!(self, Self::Product | Self::Split(_))
    }
}

impl fmt::Display for RpaOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RpaOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|op| op.name() == s)
            .ok_or_else(|| Error::Document(format!("unknown quotient operation `{s}`")))
    }
}

/// The standard quotient with a fixed realizing groupoid.
#[derive(Clone, Debug)]
pub struct Rpa {
    quotient: Quotient,
    ctx: std::result::Result<LiftedProductContext, Error>,
}

impl Rpa {
    /// Uses `groupoid` when given, otherwise the canonical one. Spaces with
    /// no realizing groupoid still support the groupoid-free operations.
    pub fn new(space: &FiniteRelationSpace, groupoid: Option<FiniteGroupoid>) -> Result<Self> {
        let quotient = quotient(space, RoughKind::Standard)?;
        let ctx = match groupoid {
            Some(g) => Ok(LiftedProductContext::new(space.clone(), g)?),
            None => LiftedProductContext::canonical(space),
        };
        Ok(Self { quotient, ctx })
    }

    pub fn quotient(&self) -> &Quotient {
        &self.quotient
    }

    pub fn has_groupoid(&self) -> bool {
        self.ctx.is_ok()
    }

    fn space(&self) -> &FiniteRelationSpace {
        &self.quotient.space
    }

    fn members(&self, c: usize) -> &[Subset] {
        &self.quotient.classes[c].members
    }

    fn over_pairs(
        &self,
        a: usize,
        b: usize,
        init: Subset,
        fold: impl Fn(Subset, Subset, Subset) -> Subset,
    ) -> Subset {
        let mut acc = init;
        for &f in self.members(a) {
            for &h in self.members(b) {
                acc = fold(acc, f, h);
            }
        }
        acc
    }

    fn over_members(&self, a: usize, map: impl Fn(Subset) -> Subset) -> Subset {
        self.members(a)
            .iter()
            .fold(Subset::EMPTY, |acc, &f| acc.union(map(f)))
    }

    /// The set whose class is the result, before taking the class.
    pub fn apply_raw(&self, op: RpaOp, args: &[usize]) -> Result<Subset> {
        if args.len() != op.arity() {
            return Err(Error::Document(format!(
                "`{op}` takes {} argument(s)",
                op.arity()
            )));
        }
        if let Some(&bad) = args.iter().find(|&&c| c >= self.quotient.len()) {
            return Err(Error::Document(format!("no class with index {bad}")));
        }
        if op.needs_groupoid() {
            if let Err(e) = &self.ctx {
                return Err(e.clone());
            }
        }
        let space = self.space();
        let n = space.len();
        let set = match op {
            RpaOp::Product => {
                let ctx = self.ctx.as_ref().expect("checked above");
                self.over_pairs(args[0], args[1], Subset::EMPTY, |acc, f, h| {
                    acc.union(lift_product(ctx, f, h))
                })
            }
            RpaOp::Split(which) => {
                let ctx = self.ctx.as_ref().expect("checked above");
                self.over_pairs(args[0], args[1], Subset::EMPTY, |acc, f, h| {
                    acc.union(split_op(ctx, which, f, h))
                })
            }
            RpaOp::Union => self.over_pairs(args[0], args[1], Subset::EMPTY, |acc, f, h| {
                acc.union(f.union(h))
            }),
            RpaOp::Cap => self.over_pairs(args[0], args[1], Subset::EMPTY, |acc, f, h| {
                acc.union(f.intersection(h))
            }),
            RpaOp::Star => self.over_pairs(args[0], args[1], space.universe(), |acc, f, h| {
                acc.intersection(f.intersection(h))
            }),
            RpaOp::Neg => self.over_members(args[0], |f| f.complement(n)),
            RpaOp::L => self.over_members(args[0], |f| lower(space, f)),
            RpaOp::U => self.over_members(args[0], |f| upper(space, f)),
            RpaOp::BigL => lower(space, self.quotient.classes[args[0]].join()),
            RpaOp::BigU => upper(space, self.quotient.classes[args[0]].join()),
            RpaOp::Bottom => Subset::EMPTY,
            RpaOp::Top => space.universe(),
        };
        Ok(set)
    }

    /// Result class index.
    pub fn apply_index(&self, op: RpaOp, args: &[usize]) -> Result<usize> {
        Ok(self.quotient.class_index(self.apply_raw(op, args)?))
    }

    pub fn apply(&self, op: RpaOp, args: &[&RoughClass]) -> Result<&RoughClass> {
        let idx = args
            .iter()
            .map(|c| self.quotient.index_of(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(&self.quotient.classes[self.apply_index(op, &idx)?])
    }

    fn lo(&self, c: usize) -> Subset {
        self.quotient.classes[c].lower.expect("standard class")
    }

    fn up(&self, c: usize) -> Subset {
        self.quotient.classes[c].upper.expect("standard class")
    }

    fn op(&self, op: RpaOp, args: &[usize]) -> usize {
        self.apply_index(op, args)
            .expect("arguments validated by the sweep")
    }

    /// `a ⊑ b` on classes: both representatives contained.
    fn class_leq(&self, a: usize, b: usize) -> bool {
        self.lo(a).is_subset(self.lo(b)) && self.up(a).is_subset(self.up(b))
    }

    fn set_leq(&self, x: Subset, y: Subset) -> bool {
        rough_leq(self.space(), x, y, RoughKind::Standard)
    }
}

/// Convenience wrapper for one-shot use.
pub fn rpa_apply<'a>(rpa: &'a Rpa, op: RpaOp, args: &[&RoughClass]) -> Result<&'a RoughClass> {
    rpa.apply(op, args)
}

#[derive(Clone, Copy)]
enum Domain {
    /// Tuples of subsets.
    Subsets,
    /// Tuples of standard classes.
    Classes,
}

struct Claim {
    info: ClaimInfo,
    domain: Domain,
    arity: usize,
    needs_groupoid: bool,
    check: fn(&Rpa, &[usize]) -> bool,
}

const fn claim(
    id: &'static str,
    hypothesis: Hypothesis,
    domain: Domain,
    arity: usize,
    check: fn(&Rpa, &[usize]) -> bool,
) -> Claim {
    Claim {
        info: ClaimInfo {
            id,
            hypothesis,
            asserted: true,
        },
        domain,
        arity,
        needs_groupoid: false,
        check,
    }
}

const fn expected_failure(
    id: &'static str,
    arity: usize,
    check: fn(&Rpa, &[usize]) -> bool,
) -> Claim {
    Claim {
        info: ClaimInfo {
            id,
            hypothesis: Hypothesis::Parthood,
            asserted: false,
        },
        domain: Domain::Classes,
        arity,
        needs_groupoid: false,
        check,
    }
}

fn sets<const K: usize>(v: &[usize]) -> [Subset; K] {
    std::array::from_fn(|i| Subset(v[i] as u64))
}

const LEQ_KINDS: [RoughKind; 3] = [RoughKind::L, RoughKind::U, RoughKind::Standard];
const RPA: Hypothesis = Hypothesis::Parthood;

static CLAIMS: &[Claim] = &[
    claim(
        "quasi-order",
        Hypothesis::UpDirected,
        Domain::Subsets,
        3,
        |r, v| {
            let [a, b, c] = sets(v);
            let s = r.space();
            LEQ_KINDS.iter().all(|&k| {
                rough_leq(s, a, a, k)
                    && (!(rough_leq(s, a, b, k) && rough_leq(s, b, c, k)) || rough_leq(s, a, c, k))
            })
        },
    ),
    Claim {
        info: ClaimInfo {
            id: "antisymmetry",
            hypothesis: Hypothesis::UpDirected,
            asserted: false,
        },
        domain: Domain::Subsets,
        arity: 2,
        needs_groupoid: false,
        check: |r, v| {
            let [a, b] = sets(v);
            let s = r.space();
            !(rough_leq(s, a, b, RoughKind::Standard) && rough_leq(s, b, a, RoughKind::Standard))
                || a == b
        },
    },
    claim("cs1", Hypothesis::UpDirected, Domain::Subsets, 3, |r, v| {
        let [a, b, c] = sets(v);
        let s = r.space();
        !rough_leq(s, a, b, RoughKind::L)
            || rough_leq(s, a.intersection(c), b.intersection(c), RoughKind::L)
    }),
    claim("cs2", Hypothesis::UpDirected, Domain::Subsets, 3, |r, v| {
        let [a, b, c] = sets(v);
        let s = r.space();
        !rough_leq(s, a, b, RoughKind::U) || rough_leq(s, a.union(c), b.union(c), RoughKind::U)
    }),
    claim("decompose", RPA, Domain::Subsets, 1, |r, v| {
        let [x] = sets(v);
        let q = r.quotient();
        decompose(q, q.class_of(x), x).is_ok()
    }),
    claim("Uu", RPA, Domain::Classes, 1, |r, v| {
        r.up(v[0]).is_subset(r.up(r.op(RpaOp::U, v)))
    }),
    claim("Ll", RPA, Domain::Classes, 1, |r, v| {
        let la = r.op(RpaOp::L, v);
        r.lo(v[0]) == r.lo(la) && r.lo(la).is_subset(r.lo(r.op(RpaOp::U, v)))
    }),
    claim("ujoins", RPA, Domain::Classes, 2, |r, v| {
        r.up(r.op(RpaOp::Union, v)) == r.up(v[0]).union(r.up(v[1]))
    }),
    claim("uc", RPA, Domain::Classes, 1, |r, v| {
        let n = r.space().len();
        r.up(r.op(RpaOp::Neg, v))
            .is_subset(upper(r.space(), r.lo(v[0]).complement(n)))
    }),
    claim("rep1", RPA, Domain::Classes, 1, |r, v| {
        let la = r.op(RpaOp::L, v);
        r.set_leq(r.lo(v[0]), r.lo(la)) && r.set_leq(r.lo(la), r.up(la))
    }),
    claim("rep1.converse", RPA, Domain::Classes, 1, |r, v| {
        let la = r.op(RpaOp::L, v);
        r.set_leq(r.lo(la), r.lo(v[0]))
    }),
    claim("rep2", RPA, Domain::Classes, 1, |r, v| {
        r.set_leq(r.up(v[0]), r.up(r.op(RpaOp::U, v)))
    }),
    claim("rep3", RPA, Domain::Classes, 2, |r, v| {
        r.lo(v[0]).is_subset(r.lo(r.op(RpaOp::Union, v)))
    }),
    claim("rep4", RPA, Domain::Classes, 2, |r, v| {
        r.up(v[0]).is_subset(r.up(r.op(RpaOp::Union, v)))
    }),
    expected_failure("rep5", 2, |r, v| {
        r.lo(r.op(RpaOp::Cap, v)).is_subset(r.lo(v[0]))
    }),
    expected_failure("rep6", 2, |r, v| {
        r.up(r.op(RpaOp::Cap, v)).is_subset(r.up(v[0]))
    }),
    claim("bL", RPA, Domain::Classes, 1, |r, v| {
        r.op(RpaOp::BigL, v) == r.op(RpaOp::L, v)
    }),
    claim("bU", RPA, Domain::Classes, 1, |r, v| {
        let (ua, bu) = (r.op(RpaOp::U, v), r.op(RpaOp::BigU, v));
        r.lo(ua).is_subset(r.lo(bu)) && r.up(ua).is_subset(r.up(bu))
    }),
    Claim {
        needs_groupoid: true,
        ..claim("n-idemp", RPA, Domain::Classes, 1, |r, v| {
            r.op(RpaOp::Split(SplitOp::N), &[v[0], v[0]]) == v[0]
        })
    },
    claim("join-comm", RPA, Domain::Classes, 2, |r, v| {
        r.op(RpaOp::Union, v) == r.op(RpaOp::Union, &[v[1], v[0]])
    }),
    claim("meet-comm", RPA, Domain::Classes, 2, |r, v| {
        r.op(RpaOp::Cap, v) == r.op(RpaOp::Cap, &[v[1], v[0]])
    }),
    claim("join-explosion", RPA, Domain::Classes, 1, |r, v| {
        r.class_leq(v[0], r.op(RpaOp::Union, &[v[0], v[0]]))
    }),
    claim("meet-explosion", RPA, Domain::Classes, 1, |r, v| {
        r.class_leq(v[0], r.op(RpaOp::Cap, &[v[0], v[0]]))
    }),
    claim("star-comm", RPA, Domain::Classes, 2, |r, v| {
        r.op(RpaOp::Star, v) == r.op(RpaOp::Star, &[v[1], v[0]])
    }),
    claim("abs-fail", RPA, Domain::Classes, 2, |r, v| {
        let j = r.op(RpaOp::Union, v);
        r.class_leq(v[0], r.op(RpaOp::Cap, &[j, v[0]]))
    }),
];

pub fn claim_ids() -> Vec<&'static str> {
    CLAIMS.iter().map(|c| c.info.id).collect()
}

pub fn claim_info(id: &str) -> Option<ClaimInfo> {
    CLAIMS.iter().find(|c| c.info.id == id).map(|c| c.info)
}

fn class_binding(name: &str, rpa: &Rpa, c: usize) -> Binding {
    let space = rpa.space();
    Binding::new(
        name,
        WitnessValue::Family(rpa.members(c).iter().map(|&m| space.labels_of(m)).collect()),
    )
}

const NAMES: [&str; 3] = ["a", "b", "c"];

/// Sweeps each claim over subsets or standard classes of every space, using
/// the canonical groupoid where one is needed.
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
    let bound = config.bound.min(QUOTIENT_BOUND);
    for s in spaces {
        check_bound(s.len(), bound)?;
    }
    let profiles = profiles(spaces);
    let rpas = spaces
        .iter()
        .map(|s| Rpa::new(s, None))
        .collect::<Result<Vec<_>>>()?;
    let mut reports = Vec::with_capacity(claims.len());
    for claim in claims {
        let mut builder = ReportBuilder::new(claim.info, config.mode);
        let mut rng = rng_for(&config.mode);
        for (idx, ((space, profile), rpa)) in spaces.iter().zip(&profiles).zip(&rpas).enumerate() {
            let admitted =
                !config.respect_hypotheses || claim.info.hypothesis.admits(space, profile);
            if !admitted || (claim.needs_groupoid && !rpa.has_groupoid()) {
                builder.skip();
                continue;
            }
            let domain = match claim.domain {
                Domain::Subsets => 1usize << space.len(),
                Domain::Classes => rpa.quotient.len(),
            };
            let s = sweep(domain, claim.arity, &config.mode, &mut rng, |v| {
                (claim.check)(rpa, v)
            });
            let witness = s.failure.map(|v| Witness {
                space: idx,
                bindings: NAMES
                    .iter()
                    .zip(v)
                    .map(|(&name, x)| match claim.domain {
                        Domain::Subsets => {
                            Binding::set(name.to_uppercase(), space, Subset(x as u64))
                        }
                        Domain::Classes => class_binding(name, rpa, x),
                    })
                    .collect(),
            });
            builder.record(s.checked, witness);
        }
        reports.push(builder.finish(config.mode == SweepMode::Exhaustive));
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::claims::Verdict;
    use crate::fixtures;

    #[test]
    fn rough_equality_examples() {
        let ex1 = fixtures::ex1();
        let ec = ex1.subset(["e", "c"]).unwrap();
        let e = ex1.subset(["e"]).unwrap();
        assert!(rough_equal(&ex1, ec, e, RoughKind::Standard));
        assert!(rough_leq(&ex1, ec, ec, RoughKind::Standard));
        let id2 = fixtures::id(2);
        assert!(!rough_equal(
            &id2,
            Subset::singleton(0),
            Subset::singleton(1),
            RoughKind::Standard
        ));
    }

    #[test]
    fn identity_quotient_is_discrete() {
        let q = quotient(&fixtures::id(2), RoughKind::Standard).unwrap();
        assert_eq!(q.len(), 4);
        assert!(q.classes().iter().all(|c| c.members.len() == 1));
    }

    #[test]
    fn ex1_class_and_decomposition() {
        let ex1 = fixtures::ex1();
        let q = quotient(&ex1, RoughKind::Standard).unwrap();
        let ec = ex1.subset(["e", "c"]).unwrap();
        let class = q.class_of(ec);
        assert!(class.contains(ex1.subset(["e"]).unwrap()));
        assert_eq!(decompose(&q, class, ec).unwrap(), (Subset::EMPTY, ec));
        let total: usize = q.classes().iter().map(|c| c.members.len()).sum();
        assert_eq!(total, 32);
    }

    #[test]
    fn standard_refines_both_one_sided_quotients() {
        let ex1 = fixtures::ex1();
        let std = quotient(&ex1, RoughKind::Standard).unwrap();
        assert!(std.refines(&quotient(&ex1, RoughKind::L).unwrap()));
        assert!(std.refines(&quotient(&ex1, RoughKind::U).unwrap()));
    }

    #[test]
    fn bound_is_enforced() {
        let big = FiniteRelationSpace::numbered(7, |a, b| a <= b).unwrap();
        assert!(matches!(
            quotient(&big, RoughKind::Standard),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn lower_of_a_class_keeps_its_lower_representative() {
        let toy2 = fixtures::toy2();
        let rpa = Rpa::new(&toy2, None).unwrap();
        for c in rpa.quotient().classes() {
            let la = rpa.apply(RpaOp::L, &[c]).unwrap();
            assert_eq!(la.lower, c.lower);
        }
    }

    #[test]
    fn negated_bottom_is_top_on_identity() {
        let rpa = Rpa::new(&fixtures::id(2), None).unwrap();
        let q = rpa.quotient();
        let bot = rpa.apply(RpaOp::Bottom, &[]).unwrap();
        let top = rpa.apply(RpaOp::Top, &[]).unwrap();
        assert_eq!(rpa.apply(RpaOp::Neg, &[bot]).unwrap(), top);
        assert!(matches!(
            rpa.apply(RpaOp::Product, &[bot, bot]),
            Err(Error::NotUpDirected { .. })
        ));
        assert_eq!(q.class_of(Subset::EMPTY), bot);
    }

    #[test]
    fn foreign_class_is_rejected() {
        let rpa = Rpa::new(&fixtures::toy2(), None).unwrap();
        let other = quotient(&fixtures::id(2), RoughKind::Standard).unwrap();
        assert_eq!(
            rpa.apply(RpaOp::Neg, &[&other.classes()[1]]).unwrap_err(),
            Error::ForeignClass
        );
    }

    #[test]
    fn rep1_and_converse_on_toy2() {
        let r = audit(
            &[&fixtures::toy2()],
            &["rep1", "rep1.converse"],
            &AuditConfig::default(),
        )
        .unwrap();
        assert_eq!(r[0].verdict, Verdict::HoldsExhaustively);
        assert_eq!(r[1].verdict, Verdict::HoldsExhaustively);
    }

    #[test]
    fn ex1_upper_representatives_grow() {
        let r = audit(
            &[&fixtures::ex1()],
            &["Uu"],
            &AuditConfig::default().ignoring_hypotheses(),
        )
        .unwrap();
        assert_eq!(r[0].verdict, Verdict::HoldsExhaustively);
    }
}
