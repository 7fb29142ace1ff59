//! Formal contexts over a relation space and their concept lattices.

use super::FiniteLattice;
use crate::error::Result;
use crate::relcore::{check_bound, FiniteRelationSpace};
use crate::subset::Subset;

/// Largest context whose concepts are enumerated by attribute-subset closure.
pub const CONTEXT_BOUND: usize = 8;

/// Objects and attributes with the incidence stored as one attribute set
/// per object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalContext {
    pub objects: Vec<String>,
    pub attributes: Vec<String>,
    pub incidence: Vec<Subset>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Derive a set of objects into the attributes they all have.
    Objects,
    /// Derive a set of attributes into the objects having all of them.
    Attributes,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Concept {
    pub extent: Subset,
    pub intent: Subset,
}

impl FormalContext {
    pub fn incident(&self, g: usize, m: usize) -> bool {
        self.incidence[g].contains(m)
    }
}

/// Objects and attributes are the points; `I` is the complement of `R`.
pub fn context_of(space: &FiniteRelationSpace) -> FormalContext {
    let n = space.len();
    FormalContext {
        objects: space.labels().to_vec(),
        attributes: space.labels().to_vec(),
        incidence: (0..n).map(|g| space.successors(g).complement(n)).collect(),
    }
}

pub fn derive(ctx: &FormalContext, x: Subset, side: Side) -> Subset {
    match side {
        Side::Objects => x.iter().fold(Subset::full(ctx.attributes.len()), |acc, g| {
            acc.intersection(ctx.incidence[g])
        }),
        Side::Attributes => (0..ctx.objects.len())
            .filter(|&g| x.is_subset(ctx.incidence[g]))
            .collect(),
    }
}

/// All concepts, sorted by extent.
pub fn concepts(ctx: &FormalContext) -> Result<Vec<Concept>> {
    check_bound(ctx.attributes.len().max(ctx.objects.len()), CONTEXT_BOUND)?;
    let mut out: Vec<Concept> = Subset::all(ctx.attributes.len())
        .map(|y| {
            let extent = derive(ctx, y, Side::Attributes);
            Concept {
                extent,
                intent: derive(ctx, extent, Side::Objects),
            }
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Extents ordered by inclusion.
pub fn concept_lattice(ctx: &FormalContext) -> Result<FiniteLattice> {
    FiniteLattice::from_family(concepts(ctx)?.into_iter().map(|c| c.extent))
}

/// For every `(g, m) ∉ I` some `h`, `n` with `(g, n) ∉ I`, `(h, m) ∉ I` and
/// `h ∈ {k}^{II}` for every object `k` outside `{n}^I`. Returns the first
/// pair without such `h`, `n`.
pub fn th40_condition(ctx: &FormalContext) -> Option<(usize, usize)> {
    let objects = ctx.objects.len();
    let attributes = ctx.attributes.len();
    let all_objects = Subset::full(objects);
    let closure = |k: usize| {
        derive(
            ctx,
            derive(ctx, Subset::singleton(k), Side::Objects),
            Side::Attributes,
        )
    };
    for g in 0..objects {
        for m in 0..attributes {
            if ctx.incident(g, m) {
                continue;
            }
            let ok = (0..attributes).any(|n| {
                !ctx.incident(g, n)
                    && (0..objects).any(|h| {
                        !ctx.incident(h, m)
                            && all_objects
                                .difference(derive(ctx, Subset::singleton(n), Side::Attributes))
                                .iter()
                                .all(|k| closure(k).contains(h))
                    })
            });
            if !ok {
                return Some((g, m));
            }
        }
    }
    None
}
