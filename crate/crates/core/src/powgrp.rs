//! The groupoid operation lifted to subsets, its split into normal, inner
//! and outer parts, and the containment laws those parts satisfy.

use std::fmt;
use std::str::FromStr;

use crate::claims::{
    profiles, rng_for, sweep, AuditConfig, Binding, ClaimInfo, ClaimReport, Hypothesis,
    ReportBuilder, SweepMode, Witness,
};
use crate::error::{Error, Result};
use crate::magma::{build_updg, realization_check, Canonical, FiniteGroupoid};
use crate::relcore::{check_bound, FiniteRelationSpace};
use crate::subset::Subset;

/// A space together with one realizing groupoid.
#[derive(Clone, Debug)]
pub struct LiftedProductContext {
    space: FiniteRelationSpace,
    groupoid: FiniteGroupoid,
}

impl LiftedProductContext {
    pub fn new(space: FiniteRelationSpace, groupoid: FiniteGroupoid) -> Result<Self> {
        let bad = realization_check(&space, &groupoid)?;
        if !bad.is_empty() {
            return Err(Error::RealizationMismatch(bad.len()));
        }
        Ok(Self { space, groupoid })
    }

    /// Context on the canonical (least-candidate) groupoid.
    pub fn canonical(space: &FiniteRelationSpace) -> Result<Self> {
        let groupoid = build_updg(space, &Canonical)?;
        Ok(Self {
            space: space.clone(),
            groupoid,
        })
    }

    pub fn space(&self) -> &FiniteRelationSpace {
        &self.space
    }

    pub fn groupoid(&self) -> &FiniteGroupoid {
        &self.groupoid
    }

    fn cells(&self, a: Subset, b: Subset) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        a.iter()
            .flat_map(move |x| b.iter().map(move |y| (x, y, self.groupoid.op(x, y))))
    }
}

/// `A·B = {ab : a ∈ A, b ∈ B}`.
pub fn lift_product(ctx: &LiftedProductContext, a: Subset, b: Subset) -> Subset {
    ctx.cells(a, b).map(|(_, _, c)| c).collect()
}

pub fn lift_product_labels<S: AsRef<str>>(
    ctx: &LiftedProductContext,
    a: &[S],
    b: &[S],
) -> Result<Vec<String>> {
    let (a, b) = (ctx.space.subset(a)?, ctx.space.subset(b)?);
    Ok(ctx.space.labels_of(lift_product(ctx, a, b)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SplitOp {
    /// Products with `Rab`, which equal `b`.
    N,
    /// Chosen products inside `A`.
    I1,
    /// Chosen products inside `B`.
    I2,
    /// Chosen products outside `A`.
    O1,
    /// Chosen products outside `B`.
    O2,
    /// `o₁ ∩ o₂`.
    O,
}

impl SplitOp {
    pub const ALL: [SplitOp; 6] = [Self::N, Self::I1, Self::I2, Self::O1, Self::O2, Self::O];

    pub fn name(self) -> &'static str {
        match self {
            Self::N => "n",
            Self::I1 => "i1",
            Self::I2 => "i2",
            Self::O1 => "o1",
            Self::O2 => "o2",
            Self::O => "o",
        }
    }
}

impl fmt::Display for SplitOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SplitOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|op| op.name() == s)
            .ok_or_else(|| Error::Document(format!("unknown split operation `{s}`")))
    }
}

/// One of the six parts of `A·B`. Cells with `Rab` feed only `n`; the
/// others see only cells where the product was chosen from `U_R(a, b)`.
pub fn split_op(ctx: &LiftedProductContext, which: SplitOp, a: Subset, b: Subset) -> Subset {
    let chosen = |keep: &dyn Fn(usize) -> bool| -> Subset {
        ctx.cells(a, b)
            .filter(|&(x, y, c)| !ctx.space.related(x, y) && keep(c))
            .map(|(_, _, c)| c)
            .collect()
    };
    match which {
        SplitOp::N => ctx
            .cells(a, b)
            .filter(|&(x, y, _)| ctx.space.related(x, y))
            .map(|(_, _, c)| c)
            .collect(),
        SplitOp::I1 => chosen(&|c| a.contains(c)),
        SplitOp::I2 => chosen(&|c| b.contains(c)),
        SplitOp::O1 => chosen(&|c| !a.contains(c)),
        SplitOp::O2 => chosen(&|c| !b.contains(c)),
        SplitOp::O => {
            split_op(ctx, SplitOp::O1, a, b).intersection(split_op(ctx, SplitOp::O2, a, b))
        }
    }
}

/// What a claim quantifies over.
#[derive(Clone, Copy)]
enum Domain {
    Subsets,
    Elements,
}

struct Claim {
    info: ClaimInfo,
    domain: Domain,
    names: &'static [&'static str],
    check: fn(&LiftedProductContext, &[usize]) -> bool,
}

const fn claim(
    id: &'static str,
    hypothesis: Hypothesis,
    domain: Domain,
    names: &'static [&'static str],
    check: fn(&LiftedProductContext, &[usize]) -> bool,
) -> Claim {
    Claim {
        info: ClaimInfo {
            id,
            hypothesis,
            asserted: true,
        },
        domain,
        names,
        check,
    }
}

fn sets<const K: usize>(v: &[usize]) -> [Subset; K] {
    std::array::from_fn(|i| Subset(v[i] as u64))
}

fn comp(ctx: &LiftedProductContext, s: Subset) -> Subset {
    s.complement(ctx.space.len())
}

fn split(ctx: &LiftedProductContext, op: SplitOp, v: &[usize]) -> (Subset, Subset, Subset) {
    let [a, b] = sets(v);
    (split_op(ctx, op, a, b), a, b)
}

fn granules(ctx: &LiftedProductContext, v: &[usize]) -> [usize; 2] {
    [v[0], v[1]].map(|x| ctx.space.predecessors(x).0 as usize)
}

const ABH: &[&str] = &["A", "B", "H"];
const AB: &[&str] = &["A", "B"];
const A: &[&str] = &["A"];
const ELEMENTS: &[&str] = &["a", "b"];

static CLAIMS: &[Claim] = &[
    claim(
        "order-comp",
        Hypothesis::UpDirected,
        Domain::Subsets,
        ABH,
        |ctx, v| {
            let [a, b, c] = sets(v);
            !a.is_subset(b) || lift_product(ctx, a, c).is_subset(lift_product(ctx, b, c))
        },
    ),
    claim(
        "bnd2",
        Hypothesis::UpDirected,
        Domain::Subsets,
        A,
        |ctx, v| {
            let [a] = sets(v);
            let full = ctx.space.universe();
            lift_product(ctx, Subset::EMPTY, a).is_empty()
                && lift_product(ctx, a, Subset::EMPTY).is_empty()
                && lift_product(ctx, a, full).is_subset(full)
                && lift_product(ctx, full, a).is_subset(full)
        },
    ),
    claim(
        "comp2.union",
        Hypothesis::UpDirected,
        Domain::Subsets,
        ABH,
        |ctx, v| {
            let [a, b, h] = sets(v);
            lift_product(ctx, a.union(b), h)
                == lift_product(ctx, a, h).union(lift_product(ctx, b, h))
        },
    ),
    claim(
        "comp2.cap",
        Hypothesis::UpDirected,
        Domain::Subsets,
        ABH,
        |ctx, v| {
            let [a, b, h] = sets(v);
            lift_product(ctx, a.intersection(b), h)
                == lift_product(ctx, a, h).intersection(lift_product(ctx, b, h))
        },
    ),
    Claim {
        info: ClaimInfo {
            id: "complement-product",
            hypothesis: Hypothesis::UpDirected,
            asserted: false,
        },
        domain: Domain::Subsets,
        names: AB,
        check: |ctx, v| {
            let [a, h] = sets(v);
            lift_product(ctx, comp(ctx, a), h) == comp(ctx, lift_product(ctx, a, h))
        },
    },
    claim("n", Hypothesis::Parthood, Domain::Subsets, AB, |ctx, v| {
        let (s, _, b) = split(ctx, SplitOp::N, v);
        s.is_subset(b)
    }),
    claim("o1", Hypothesis::Parthood, Domain::Subsets, AB, |ctx, v| {
        let (s, a, _) = split(ctx, SplitOp::O1, v);
        s.is_subset(comp(ctx, a))
    }),
    claim("o2", Hypothesis::Parthood, Domain::Subsets, AB, |ctx, v| {
        let (s, _, b) = split(ctx, SplitOp::O2, v);
        s.is_subset(comp(ctx, b))
    }),
    claim("i1", Hypothesis::Parthood, Domain::Subsets, AB, |ctx, v| {
        let (s, a, _) = split(ctx, SplitOp::I1, v);
        s.is_subset(a)
    }),
    claim("i2", Hypothesis::Parthood, Domain::Subsets, AB, |ctx, v| {
        let (s, _, b) = split(ctx, SplitOp::I2, v);
        s.is_subset(b)
    }),
    claim("o", Hypothesis::Parthood, Domain::Subsets, AB, |ctx, v| {
        let (s, a, b) = split(ctx, SplitOp::O, v);
        s.is_subset(comp(ctx, a.union(b)))
    }),
    claim(
        "cor1.n-eq",
        Hypothesis::Parthood,
        Domain::Subsets,
        AB,
        |ctx, v| {
            let (s, a, b) = split(ctx, SplitOp::N, v);
            !b.is_subset(a) || s == b
        },
    ),
    claim(
        "cor1.i-chain",
        Hypothesis::Parthood,
        Domain::Subsets,
        AB,
        |ctx, v| {
            let (i1, a, b) = split(ctx, SplitOp::I1, v);
            let (i2, _, _) = split(ctx, SplitOp::I2, v);
            !b.is_subset(a) || (i2.is_subset(i1) && i1.is_subset(a))
        },
    ),
    claim(
        "cor1.o-chain",
        Hypothesis::Parthood,
        Domain::Subsets,
        AB,
        |ctx, v| {
            let (o1, a, b) = split(ctx, SplitOp::O1, v);
            let (o2, _, _) = split(ctx, SplitOp::O2, v);
            !b.is_subset(a) || o1.is_subset(o2)
        },
    ),
    claim(
        "summary",
        Hypothesis::Parthood,
        Domain::Subsets,
        AB,
        |ctx, v| {
            let (i1, a, b) = split(ctx, SplitOp::I1, v);
            let (o2, _, _) = split(ctx, SplitOp::O2, v);
            !b.is_subset(a) || lift_product(ctx, a, b) == b.union(i1).union(o2)
        },
    ),
    claim(
        "prop7.n",
        Hypothesis::Parthood,
        Domain::Elements,
        ELEMENTS,
        |ctx, v| {
            let (s, _, gb) = split(ctx, SplitOp::N, &granules(ctx, v));
            s.is_subset(gb)
        },
    ),
    claim(
        "prop7.i1",
        Hypothesis::Parthood,
        Domain::Elements,
        ELEMENTS,
        |ctx, v| {
            let (s, ga, _) = split(ctx, SplitOp::I1, &granules(ctx, v));
            s.is_subset(ga)
        },
    ),
    claim(
        "prop7.i2",
        Hypothesis::Parthood,
        Domain::Elements,
        ELEMENTS,
        |ctx, v| {
            let (s, _, gb) = split(ctx, SplitOp::I2, &granules(ctx, v));
            s.is_subset(gb)
        },
    ),
    claim(
        "prop7.o1",
        Hypothesis::Parthood,
        Domain::Elements,
        ELEMENTS,
        |ctx, v| {
            let (s, ga, _) = split(ctx, SplitOp::O1, &granules(ctx, v));
            s.is_subset(comp(ctx, ga))
        },
    ),
    claim(
        "prop7.o2",
        Hypothesis::Parthood,
        Domain::Elements,
        ELEMENTS,
        |ctx, v| {
            let (s, _, gb) = split(ctx, SplitOp::O2, &granules(ctx, v));
            s.is_subset(comp(ctx, gb))
        },
    ),
];

pub fn claim_ids() -> Vec<&'static str> {
    CLAIMS.iter().map(|c| c.info.id).collect()
}

pub fn claim_info(id: &str) -> Option<ClaimInfo> {
    CLAIMS.iter().find(|c| c.info.id == id).map(|c| c.info)
}

/// Sweeps each claim over subset tuples (or element pairs) of every context.
pub fn audit(
    ctxs: &[&LiftedProductContext],
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
    for ctx in ctxs {
        check_bound(ctx.space.len(), config.bound)?;
    }
    let spaces: Vec<&FiniteRelationSpace> = ctxs.iter().map(|c| &c.space).collect();
    let profiles = profiles(&spaces);
    let mut reports = Vec::with_capacity(claims.len());
    for claim in claims {
        let mut builder = ReportBuilder::new(claim.info, config.mode);
        let mut rng = rng_for(&config.mode);
        for (idx, (ctx, profile)) in ctxs.iter().zip(&profiles).enumerate() {
            let space = &ctx.space;
            if config.respect_hypotheses && !claim.info.hypothesis.admits(space, profile) {
                builder.skip();
                continue;
            }
            let domain = match claim.domain {
                Domain::Subsets => 1usize << space.len(),
                Domain::Elements => space.len(),
            };
            let s = sweep(domain, claim.names.len(), &config.mode, &mut rng, |v| {
                (claim.check)(ctx, v)
            });
            let witness = s.failure.map(|v| Witness {
                space: idx,
                bindings: claim
                    .names
                    .iter()
                    .zip(v)
                    .map(|(&name, x)| match claim.domain {
                        Domain::Subsets => Binding::set(name, space, Subset(x as u64)),
                        Domain::Elements => Binding::element(name, space, x),
                    })
                    .collect(),
            });
            builder.record(s.checked, witness);
        }
        reports.push(builder.finish(config.mode == SweepMode::Exhaustive));
    }
    Ok(reports)
}
