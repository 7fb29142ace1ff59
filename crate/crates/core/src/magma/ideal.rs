//! g-ideals and g-filters: subgroupoids closed along `ab = b`.

use super::FiniteGroupoid;
use crate::error::Result;
use crate::relcore::check_bound;
use crate::subset::Subset;

fn product_closed(g: &FiniteGroupoid, a: Subset) -> bool {
    a.iter().all(|x| a.iter().all(|y| a.contains(g.op(x, y))))
}

/// Subgroupoid satisfying `ab = b & b ∈ A → a ∈ A`.
pub fn is_g_ideal(g: &FiniteGroupoid, a: Subset) -> bool {
    product_closed(g, a) && (0..g.len()).all(|x| a.iter().all(|b| g.op(x, b) != b || a.contains(x)))
}

/// Subgroupoid satisfying `ab = b & a ∈ B → b ∈ B`.
pub fn is_g_filter(g: &FiniteGroupoid, b: Subset) -> bool {
    product_closed(g, b)
        && b.iter()
            .all(|x| (0..g.len()).all(|y| g.op(x, y) != y || b.contains(y)))
}

/// `𝐈(A)`: alternately close under products and pull in every `x` with
/// `xb = b` for a member `b`, until stable.
pub fn g_ideal_closure(g: &FiniteGroupoid, a: Subset) -> Subset {
    let n = g.len();
    let mut cur = a;
    loop {
        let mut next = cur;
        for x in cur.iter() {
            for y in cur.iter() {
                next = next.with(g.op(x, y));
            }
        }
        for x in 0..n {
            if cur.iter().any(|b| g.op(x, b) == b) {
                next = next.with(x);
            }
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GIdeal {
    pub set: Subset,
    /// Elements whose principal g-ideal is this one.
    pub principal_generators: Subset,
}

impl GIdeal {
    pub fn is_principal(&self) -> bool {
        !self.principal_generators.is_empty()
    }
}

/// `𝓘(S)` in mask order.
pub fn enumerate_g_ideals(g: &FiniteGroupoid, bound: usize) -> Result<Vec<GIdeal>> {
    let n = g.len();
    check_bound(n, bound)?;
    let principal: Vec<Subset> = (0..n)
        .map(|x| g_ideal_closure(g, Subset::singleton(x)))
        .collect();
    Ok(Subset::all(n)
        .filter(|&s| is_g_ideal(g, s))
        .map(|set| GIdeal {
            set,
            principal_generators: (0..n).filter(|&x| principal[x] == set).collect(),
        })
        .collect())
}
