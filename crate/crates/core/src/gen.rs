//! Enumerations and random samples of small relations and groupoids.

use rand::Rng;

use crate::error::Result;
use crate::magma::FiniteGroupoid;
use crate::relcore::{check_bound, classify, FiniteRelationSpace};

/// Largest universe whose relations are enumerated (`2^(n²)` of them).
pub const RELATION_ENUM_BOUND: usize = 4;

/// Largest groupoid size enumerated (`n^(n²)` tables).
pub const GROUPOID_ENUM_BOUND: usize = 3;

fn from_mask(n: usize, mask: u64) -> FiniteRelationSpace {
    FiniteRelationSpace::numbered(n, |a, b| mask >> (a * n + b) & 1 == 1)
        .expect("numbered universe")
}

/// Every relation on `1..=n`, by increasing row-major bit mask.
pub fn all_relations(n: usize) -> Result<impl Iterator<Item = FiniteRelationSpace>> {
    check_bound(n, RELATION_ENUM_BOUND)?;
    Ok((0u64..1 << (n * n)).map(move |m| from_mask(n, m)))
}

pub fn reflexive_relations(n: usize) -> Result<impl Iterator<Item = FiniteRelationSpace>> {
    Ok(all_relations(n)?.filter(|s| (0..s.len()).all(|x| s.related(x, x))))
}

pub fn reflexive_antisymmetric_relations(
    n: usize,
) -> Result<impl Iterator<Item = FiniteRelationSpace>> {
    Ok(reflexive_relations(n)?.filter(|s| classify(s).antisymmetric))
}

/// Partial orders on `1..=n` (219 for `n = 4`).
pub fn posets(n: usize) -> Result<impl Iterator<Item = FiniteRelationSpace>> {
    Ok(reflexive_antisymmetric_relations(n)?.filter(|s| classify(s).transitive))
}

/// Every relation satisfying `keep`, from the full enumeration.
pub fn relations_where(
    n: usize,
    keep: impl Fn(&FiniteRelationSpace) -> bool,
) -> Result<impl Iterator<Item = FiniteRelationSpace>> {
    Ok(all_relations(n)?.filter(move |s| keep(s)))
}

/// Each pair related independently with probability `density`.
pub fn random_relation(n: usize, density: f64, rng: &mut impl Rng) -> FiniteRelationSpace {
    FiniteRelationSpace::numbered(n, |_, _| rng.random_bool(density)).expect("numbered universe")
}

/// Reflexive and antisymmetric: each pair of distinct elements is related
/// one way, the other way or not at all, uniformly.
pub fn random_reflexive_antisymmetric(n: usize, rng: &mut impl Rng) -> FiniteRelationSpace {
    let mut m = vec![false; n * n];
    for a in 0..n {
        m[a * n + a] = true;
        for b in 0..a {
            match rng.random_range(0..3) {
                0 => m[a * n + b] = true,
                1 => m[b * n + a] = true,
                _ => {}
            }
        }
    }
    FiniteRelationSpace::numbered(n, |a, b| m[a * n + b]).expect("numbered universe")
}

/// Random relations of the given size until `keep` accepts one.
pub fn random_relation_where(
    n: usize,
    density: f64,
    rng: &mut impl Rng,
    keep: impl Fn(&FiniteRelationSpace) -> bool,
) -> FiniteRelationSpace {
    loop {
        let s = random_relation(n, density, rng);
        if keep(&s) {
            return s;
        }
    }
}

/// Every groupoid on `1..=n`, tables in lexicographic order.
pub fn all_groupoids(n: usize) -> Result<impl Iterator<Item = FiniteGroupoid>> {
    check_bound(n, GROUPOID_ENUM_BOUND)?;
    let cells = n * n;
    let count = (n as u64).pow(cells as u32);
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    Ok((0..count).map(move |mut code| {
        let mut table = vec![0usize; cells];
        for slot in table.iter_mut().rev() {
            *slot = (code % n as u64) as usize;
            code /= n as u64;
        }
        FiniteGroupoid::new(labels.clone(), table).expect("entries in range")
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn enumeration_counts() {
        assert_eq!(all_relations(3).unwrap().count(), 512);
        assert_eq!(reflexive_relations(3).unwrap().count(), 64);
        assert_eq!(reflexive_antisymmetric_relations(3).unwrap().count(), 27);
        assert_eq!(posets(3).unwrap().count(), 19);
        assert_eq!(posets(4).unwrap().count(), 219);
        assert_eq!(all_groupoids(2).unwrap().count(), 16);
        assert_eq!(all_groupoids(3).unwrap().count(), 19_683);
        assert!(all_relations(5).is_err());
    }

    #[test]
    fn random_reflexive_antisymmetric_shape() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let p = classify(&random_reflexive_antisymmetric(5, &mut rng));
            assert!(p.reflexive && p.antisymmetric);
        }
    }
}
