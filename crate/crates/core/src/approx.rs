//! Granular, pointwise and local approximation operators, and the audit of
//! their algebraic properties over the powerset.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::claims::{
    lookup, profiles, rng_for, sweep, AuditConfig, Binding, ClaimInfo, ClaimReport, Hypothesis,
    ReportBuilder, SweepMode, Witness, WitnessValue,
};
use crate::error::{Error, Result};
use crate::relcore::{check_bound, FiniteRelationSpace};
use crate::subset::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OperatorId {
    L,
    LI,
    U,
    UI,
    LS,
    US,
    LPlus,
    UPlus,
    LiPlus,
    UiPlus,
    TriUp,
    TriDown,
    BtriUp,
    BtriDown,
}

impl OperatorId {
    pub const ALL: [OperatorId; 14] = [
        Self::L,
        Self::LI,
        Self::U,
        Self::UI,
        Self::LS,
        Self::US,
        Self::LPlus,
        Self::UPlus,
        Self::LiPlus,
        Self::UiPlus,
        Self::TriUp,
        Self::TriDown,
        Self::BtriUp,
        Self::BtriDown,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::L => "l",
            Self::LI => "l_i",
            Self::U => "u",
            Self::UI => "u_i",
            Self::LS => "l_s",
            Self::US => "u_s",
            Self::LPlus => "l_plus",
            Self::UPlus => "u_plus",
            Self::LiPlus => "li_plus",
            Self::UiPlus => "ui_plus",
            Self::TriUp => "tri_up",
            Self::TriDown => "tri_down",
            Self::BtriUp => "btri_up",
            Self::BtriDown => "btri_down",
        }
    }

    /// Expressible as a union of neighborhood granules.
    pub fn is_granular(self) -> bool {
        matches!(
            self,
            Self::L
                | Self::LI
                | Self::U
                | Self::UI
                | Self::LS
                | Self::US
                | Self::TriUp
                | Self::BtriUp
        )
    }

    pub fn is_lower(self) -> bool {
        matches!(
            self,
            Self::L
                | Self::LI
                | Self::LS
                | Self::LPlus
                | Self::LiPlus
                | Self::TriDown
                | Self::BtriDown
        )
    }
}

impl fmt::Display for OperatorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OperatorId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let op = match s {
            "l" => Self::L,
            "l_i" | "li" => Self::LI,
            "u" => Self::U,
            "u_i" | "ui" => Self::UI,
            "l_s" | "ls" | "l_o" => Self::LS,
            "u_s" | "us" | "u_o" => Self::US,
            "l_plus" | "l+" => Self::LPlus,
            "u_plus" | "u+" => Self::UPlus,
            "li_plus" | "li+" => Self::LiPlus,
            "ui_plus" | "ui+" => Self::UiPlus,
            "tri_up" | "△" => Self::TriUp,
            "tri_down" | "▽" => Self::TriDown,
            "btri_up" | "▲" => Self::BtriUp,
            "btri_down" | "▼" => Self::BtriDown,
            _ => return Err(Error::Document(format!("unknown operator `{s}`"))),
        };
        Ok(op)
    }
}

/// Union of the granules `g(x)` selected by `keep`.
#[inline]
fn granular(n: usize, g: impl Fn(usize) -> Subset, keep: impl Fn(Subset) -> bool) -> Subset {
    (0..n)
        .map(&g)
        .filter(|&s| keep(s))
        .fold(Subset::EMPTY, Subset::union)
}

/// Points `x` whose own granule satisfies `keep`.
#[inline]
fn pointwise(n: usize, g: impl Fn(usize) -> Subset, keep: impl Fn(Subset) -> bool) -> Subset {
    (0..n).filter(|&x| keep(g(x))).collect()
}

/// Applies one operator. `a` must be a subset of the universe.
pub fn approximate(space: &FiniteRelationSpace, a: Subset, op: OperatorId) -> Subset {
    let n = space.len();
    let plain = |x| space.predecessors(x);
    let inv = |x| space.successors(x);
    let sym = |x| space.predecessors(x).intersection(space.successors(x));
    let inside = |g: Subset| g.is_subset(a);
    let meets = |g: Subset| g.meets(a);
    match op {
        OperatorId::L => granular(n, plain, inside),
        OperatorId::LI => granular(n, inv, inside),
        OperatorId::U => granular(n, plain, meets),
        OperatorId::UI => granular(n, inv, meets),
        OperatorId::LS => granular(n, sym, inside),
        OperatorId::US => granular(n, sym, meets),
        OperatorId::LPlus => pointwise(n, plain, inside),
        OperatorId::UPlus => pointwise(n, plain, meets),
        OperatorId::LiPlus => pointwise(n, inv, inside),
        OperatorId::UiPlus => pointwise(n, inv, meets),
        OperatorId::TriUp => a.iter().map(inv).fold(Subset::EMPTY, Subset::union),
        OperatorId::TriDown => a.intersection(pointwise(n, inv, inside)),
        OperatorId::BtriUp => a.iter().map(plain).fold(Subset::EMPTY, Subset::union),
        OperatorId::BtriDown => a.intersection(pointwise(n, plain, inside)),
    }
}

/// Label-level wrapper: rejects labels outside the universe.
pub fn approximate_labels<S: AsRef<str>>(
    space: &FiniteRelationSpace,
    labels: &[S],
    op: OperatorId,
) -> Result<Vec<String>> {
    let a = space.subset(labels)?;
    Ok(space.labels_of(approximate(space, a, op)))
}

/// All fourteen operators applied to `a`, in [`OperatorId::ALL`] order.
pub fn approximate_all(space: &FiniteRelationSpace, a: Subset) -> Vec<(OperatorId, Subset)> {
    OperatorId::ALL
        .iter()
        .map(|&op| (op, approximate(space, a, op)))
        .collect()
}

/// Sets fixed by both operators: `A^lower = A = A^upper`.
pub fn definite_sets(
    space: &FiniteRelationSpace,
    lower: OperatorId,
    upper: OperatorId,
    bound: usize,
) -> Result<Vec<Subset>> {
    check_bound(space.len(), bound)?;
    Ok(Subset::all(space.len())
        .filter(|&a| approximate(space, a, lower) == a && approximate(space, a, upper) == a)
        .collect())
}

type Check = fn(&FiniteRelationSpace, &[Subset]) -> bool;

struct Claim {
    info: ClaimInfo,
    arity: usize,
    check: Check,
}

use OperatorId as Op;

fn ap(s: &FiniteRelationSpace, a: Subset, op: Op) -> Subset {
    approximate(s, a, op)
}

fn ap2(s: &FiniteRelationSpace, a: Subset, first: Op, then: Op) -> Subset {
    ap(s, ap(s, a, first), then)
}

fn l_id(s: &FiniteRelationSpace, x: &[Subset]) -> bool {
    let l = ap(s, x[0], Op::L);
    ap(s, l, Op::L) == l && l.is_subset(x[0])
}

fn lu_inc(s: &FiniteRelationSpace, x: &[Subset]) -> bool {
    let l = ap(s, x[0], Op::L);
    let lu = ap(s, l, Op::U);
    l.is_subset(lu) && lu.is_subset(ap(s, x[0], Op::U))
}

fn l_mo(s: &FiniteRelationSpace, x: &[Subset]) -> bool {
    !x[0].is_subset(x[1]) || ap(s, x[0], Op::L).is_subset(ap(s, x[1], Op::L))
}

fn u_mo(s: &FiniteRelationSpace, x: &[Subset]) -> bool {
    !x[0].is_subset(x[1]) || ap(s, x[0], Op::U).is_subset(ap(s, x[1], Op::U))
}

fn u_union(s: &FiniteRelationSpace, x: &[Subset]) -> bool {
    ap(s, x[0].union(x[1]), Op::U) == ap(s, x[0], Op::U).union(ap(s, x[1], Op::U))
}

fn l_union(s: &FiniteRelationSpace, x: &[Subset]) -> bool {
    ap(s, x[0], Op::L)
        .union(ap(s, x[1], Op::L))
        .is_subset(ap(s, x[0].union(x[1]), Op::L))
}

fn l_cap(s: &FiniteRelationSpace, x: &[Subset]) -> bool {
    ap(s, x[0].intersection(x[1]), Op::L).is_subset(ap(s, x[0], Op::L).intersection(ap(
        s,
        x[1],
        Op::L,
    )))
}

fn u_cap(s: &FiniteRelationSpace, x: &[Subset]) -> bool {
    ap(s, x[0].intersection(x[1]), Op::U).is_subset(ap(s, x[0], Op::U).intersection(ap(
        s,
        x[1],
        Op::U,
    )))
}

fn u_wid0(s: &FiniteRelationSpace, x: &[Subset]) -> bool {
    let u = ap(s, x[0], Op::U);
    u.is_subset(ap(s, u, Op::U))
}

fn union_of(
    s: &FiniteRelationSpace,
    a: Subset,
    g: impl Fn(&FiniteRelationSpace, usize) -> Subset,
) -> Subset {
    a.iter().map(|x| g(s, x)).fold(Subset::EMPTY, Subset::union)
}

fn tri_up_formula(s: &FiniteRelationSpace, x: &[Subset]) -> bool {
    ap(s, x[0], Op::TriUp) == union_of(s, x[0], |s, y| s.successors(y))
}

fn btri_up_formula(s: &FiniteRelationSpace, x: &[Subset]) -> bool {
    ap(s, x[0], Op::BtriUp) == union_of(s, x[0], |s, y| s.predecessors(y))
}

const fn claim(id: &'static str, hypothesis: Hypothesis, arity: usize, check: Check) -> Claim {
    Claim {
        info: ClaimInfo {
            id,
            hypothesis,
            asserted: true,
        },
        arity,
        check,
    }
}

const REF: Hypothesis = Hypothesis::ReflexiveUpDirected;
const UPD: Hypothesis = Hypothesis::UpDirected;

static CLAIMS: &[Claim] = &[
    // lower/upper laws for reflexive up-directed spaces
    claim("l-id", REF, 1, l_id),
    claim("u-wid", REF, 1, |s, x| {
        let u = ap(s, x[0], Op::U);
        x[0].is_subset(u) && u.is_subset(ap(s, u, Op::U))
    }),
    claim("lu-inc", REF, 1, lu_inc),
    claim("l-mo", REF, 2, l_mo),
    claim("u-mo", REF, 2, u_mo),
    claim("bnd", REF, 0, |s, _| {
        let full = s.universe();
        ap(s, full, Op::U) == full
            && ap(s, full, Op::L) == full
            && ap(s, Subset::EMPTY, Op::L).is_empty()
            && ap(s, Subset::EMPTY, Op::U).is_empty()
    }),
    claim("u-union", REF, 2, u_union),
    claim("l-union", REF, 2, l_union),
    claim("l-union0", REF, 2, |s, x| {
        x[0].meets(x[1])
            || ap(s, x[0], Op::L).union(ap(s, x[1], Op::L)) == ap(s, x[0].union(x[1]), Op::L)
    }),
    claim("l-cap", REF, 2, l_cap),
    claim("u-cap", REF, 2, u_cap),
    // the same laws without reflexivity
    claim("l-id0", UPD, 1, l_id),
    claim("u-wid0", UPD, 1, u_wid0),
    claim("thm7.lu-inc", UPD, 1, lu_inc),
    claim("thm7.l-mo", UPD, 2, l_mo),
    claim("thm7.u-mo", UPD, 2, u_mo),
    claim("bnd0", UPD, 0, |s, _| {
        let full = s.universe();
        let su = ap(s, full, Op::U);
        ap(s, full, Op::L) == su
            && su.is_subset(full)
            && ap(s, Subset::EMPTY, Op::L).is_empty()
            && ap(s, Subset::EMPTY, Op::U).is_empty()
    }),
    claim("thm7.u-union", UPD, 2, u_union),
    claim("thm7.l-union", UPD, 2, l_union),
    claim("thm7.l-cap", UPD, 2, l_cap),
    claim("thm7.u-cap", UPD, 2, u_cap),
    // triangle operators as granule unions, general up-directed spaces
    claim("prop4.tri-up-formula", UPD, 1, tri_up_formula),
    claim("prop4.tri-up-sub-u-plus", UPD, 1, |s, x| {
        ap(s, x[0], Op::TriUp).is_subset(ap(s, x[0], Op::UPlus))
    }),
    claim("prop4.u-plus-sub-u-i", UPD, 1, |s, x| {
        ap(s, x[0], Op::UPlus).is_subset(ap(s, x[0], Op::UI))
    }),
    claim("prop4.btri-up-formula", UPD, 1, btri_up_formula),
    claim("prop4.btri-up-sub-u", UPD, 1, |s, x| {
        ap(s, x[0], Op::BtriUp).is_subset(ap(s, x[0], Op::U))
    }),
    // reflexive identities; ".rtl" reads a composite superscript right to left
    claim("prop5.l-eq-tri-down-tri-up", REF, 1, |s, x| {
        ap(s, x[0], Op::L) == ap2(s, x[0], Op::TriDown, Op::TriUp)
    }),
    claim("prop5.l-eq-tri-down-tri-up.rtl", REF, 1, |s, x| {
        ap(s, x[0], Op::L) == ap2(s, x[0], Op::TriUp, Op::TriDown)
    }),
    claim("prop5.li-eq-btri-down-btri-up", REF, 1, |s, x| {
        ap(s, x[0], Op::LI) == ap2(s, x[0], Op::BtriDown, Op::BtriUp)
    }),
    claim("prop5.li-eq-btri-down-btri-up.rtl", REF, 1, |s, x| {
        ap(s, x[0], Op::LI) == ap2(s, x[0], Op::BtriUp, Op::BtriDown)
    }),
    claim("prop5.u-eq-tri-up-btri-up", REF, 1, |s, x| {
        ap(s, x[0], Op::U) == ap2(s, x[0], Op::TriUp, Op::BtriUp)
    }),
    claim("prop5.u-eq-tri-up-btri-up.rtl", REF, 1, |s, x| {
        ap(s, x[0], Op::U) == ap2(s, x[0], Op::BtriUp, Op::TriUp)
    }),
    claim("prop5.ui-eq-btri-up-tri-up", REF, 1, |s, x| {
        ap(s, x[0], Op::UI) == ap2(s, x[0], Op::BtriUp, Op::TriUp)
    }),
    claim("prop5.ui-eq-btri-up-tri-up.rtl", REF, 1, |s, x| {
        ap(s, x[0], Op::UI) == ap2(s, x[0], Op::TriUp, Op::BtriUp)
    }),
    claim("prop5.tri-up-chain", REF, 1, |s, x| {
        let t = ap(s, x[0], Op::TriUp);
        let up = ap(s, x[0], Op::UPlus);
        tri_up_formula(s, x) && t.is_subset(up) && up.is_subset(ap(s, x[0], Op::UI))
    }),
    claim("prop5.btri-up-chain", REF, 1, |s, x| {
        let t = ap(s, x[0], Op::BtriUp);
        btri_up_formula(s, x) && x[0].is_subset(t) && t.is_subset(ap(s, x[0], Op::U))
    }),
    claim("prop5.tri-down-sandwich", REF, 1, |s, x| {
        ap(s, x[0], Op::TriDown).is_subset(x[0]) && x[0].is_subset(ap(s, x[0], Op::TriUp))
    }),
    claim("prop5.btri-down-sandwich", REF, 1, |s, x| {
        ap(s, x[0], Op::BtriDown).is_subset(x[0]) && x[0].is_subset(ap(s, x[0], Op::BtriUp))
    }),
    claim("prop5.tri-up-complement", REF, 1, |s, x| {
        let n = s.len();
        ap(s, x[0], Op::TriUp).complement(n) == ap(s, x[0].complement(n), Op::TriDown)
    }),
    claim("prop5.tri-up-complement.rtl", REF, 1, |s, x| {
        let n = s.len();
        ap(s, x[0].complement(n), Op::TriUp) == ap(s, x[0], Op::TriDown).complement(n)
    }),
    claim("prop5.btri-up-complement", REF, 1, |s, x| {
        let n = s.len();
        ap(s, x[0], Op::BtriUp).complement(n) == ap(s, x[0].complement(n), Op::BtriDown)
    }),
    claim("prop5.btri-up-complement.rtl", REF, 1, |s, x| {
        let n = s.len();
        ap(s, x[0].complement(n), Op::BtriUp) == ap(s, x[0], Op::BtriDown).complement(n)
    }),
    // images of l and u are l-stable
    claim("images-l-stable", Hypothesis::Any, 1, |s, x| {
        let (l, u) = (ap(s, x[0], Op::L), ap(s, x[0], Op::U));
        ap(s, l, Op::L) == l && ap(s, u, Op::L) == u
    }),
];

/// Every claim id this module audits, in canonical order.
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

const SET_NAMES: [&str; 3] = ["A", "B", "C"];

/// Evaluates each claim over every space of the family; reports come back in
/// the order of `claim_ids`.
pub fn audit(
    spaces: &[&FiniteRelationSpace],
    claim_ids: &[&str],
    config: &AuditConfig,
) -> Result<Vec<ClaimReport>> {
    let claims = claim_ids
        .iter()
        .map(|id| find(id))
        .collect::<Result<Vec<_>>>()?;
    if config.mode == SweepMode::Exhaustive {
        for s in spaces {
            check_bound(s.len(), config.bound)?;
        }
    }
    let profiles = profiles(spaces);
    let infos: Vec<ClaimInfo> = claims.iter().map(|c| c.info).collect();
    let mut reports = Vec::with_capacity(claims.len());
    for claim in claims {
        debug_assert!(lookup(&infos, claim.info.id).is_some());
        let mut builder = ReportBuilder::new(claim.info, config.mode);
        let mut rng = rng_for(&config.mode);
        for (idx, (space, profile)) in spaces.iter().zip(&profiles).enumerate() {
            if config.respect_hypotheses && !claim.info.hypothesis.admits(space, profile) {
                builder.skip();
                continue;
            }
            let domain = 1usize << space.len();
            let mut args = vec![Subset::EMPTY; claim.arity];
            let outcome = sweep(domain, claim.arity, &config.mode, &mut rng, |t| {
                for (slot, &i) in args.iter_mut().zip(t) {
                    *slot = Subset(i as u64);
                }
                (claim.check)(space, &args)
            });
            let witness = outcome.failure.map(|t| Witness {
                space: idx,
                bindings: t
                    .iter()
                    .zip(SET_NAMES)
                    .map(|(&i, name)| Binding::set(name, space, Subset(i as u64)))
                    .collect(),
            });
            builder.record(outcome.checked, witness);
        }
        reports.push(builder.finish(config.mode == SweepMode::Exhaustive));
    }
    Ok(reports)
}

/// Re-evaluates a failing report's witness; `Ok(true)` means the witness
/// still violates the claim.
pub fn recheck(spaces: &[&FiniteRelationSpace], report: &ClaimReport) -> Result<bool> {
    let claim = find(&report.claim)?;
    let Some(w) = &report.witness else {
        return Ok(false);
    };
    let space = spaces
        .get(w.space)
        .ok_or_else(|| Error::Document("witness space index out of range".into()))?;
    let args = SET_NAMES[..claim.arity]
        .iter()
        .map(|name| match w.get(name) {
            Some(WitnessValue::Set(labels)) => space.subset(labels),
            _ => Err(Error::Document(format!("witness lacks set `{name}`"))),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(!(claim.check)(space, &args))
}
