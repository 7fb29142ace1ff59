//! Finite groupoids: operation tables, identities, relation-derived
//! groupoids, directoids, g-ideals and compatible tolerances.

mod audit;
mod directoid;
mod ideal;
mod pawlak;
mod term;
mod tolerance;
mod updg;

use std::collections::BTreeSet;
use std::fmt;

pub use audit::{audit, bridge_audit, claim_ids, claim_info, BRIDGE_LIMIT};
pub use directoid::{directoid_check, directoid_from_poset, DirectoidCheck, DIRECTOID_AXIOMS};
pub use ideal::{enumerate_g_ideals, g_ideal_closure, is_g_filter, is_g_ideal, GIdeal};
pub use pawlak::{pawlak_audit, pawlak_groupoid, PAWLAK_AXIOMS, PAWLAK_CONSEQUENCES};
pub use term::{eval_term, holds_identity, Identity, IdentityCheck, Term};
pub use tolerance::{
    compatible_tolerances, is_tolerance_trivial, Tolerance, ToleranceVerdict, TOLERANCE_BOUND,
};
pub use updg::{
    build_updg, count_updg, enumerate_updg, random_updg, realization_check, Canonical, Chooser,
    UpdgIter,
};

use crate::error::{Error, Result};
use crate::relcore::FiniteRelationSpace;
use crate::subset::MAX_UNIVERSE;

/// A finite set with a total binary operation, stored row-major
/// (`table[a * n + b] = a·b`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroupoid {
    labels: Vec<String>,
    table: Vec<usize>,
}

impl FiniteGroupoid {
    pub fn new(labels: Vec<String>, table: Vec<usize>) -> Result<Self> {
        let n = labels.len();
        if n > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge {
                size: n,
                max: MAX_UNIVERSE,
            });
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        if table.len() != n * n {
            return Err(Error::MalformedTable(format!(
                "expected {} cells, found {}",
                n * n,
                table.len()
            )));
        }
        if let Some(pos) = table.iter().position(|&c| c >= n) {
            return Err(Error::MalformedTable(format!(
                "cell ({}, {}) holds {} outside the universe",
                pos / n,
                pos % n,
                table[pos]
            )));
        }
        Ok(Self { labels, table })
    }

    /// Builds the table from a closure on indices.
    pub fn from_fn(labels: Vec<String>, mut op: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        let n = labels.len();
        let table = (0..n * n).map(|i| op(i / n, i % n)).collect();
        Self::new(labels, table)
    }

    /// Builds from rows of labels.
    pub fn from_label_rows<S: AsRef<str>>(labels: Vec<String>, rows: &[Vec<S>]) -> Result<Self> {
        let n = labels.len();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::MalformedTable(format!(
                "expected {n} rows of {n} cells"
            )));
        }
        let mut table = Vec::with_capacity(n * n);
        for cell in rows.iter().flatten() {
            let cell = cell.as_ref();
            let idx = labels
                .iter()
                .position(|l| l == cell)
                .ok_or_else(|| Error::UnknownLabel(cell.into()))?;
            table.push(idx);
        }
        Self::new(labels, table)
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.labels.len() + b]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.into()))
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.len().max(1))
            .map(<[usize]>::to_vec)
            .collect()
    }

    /// `ℜ(G)`: `(a, b)` related iff `ab = b`.
    pub fn induced_relation(&self) -> FiniteRelationSpace {
        FiniteRelationSpace::from_fn(self.labels.clone(), |a, b| self.op(a, b) == b)
            .expect("labels already validated")
    }

    /// `ℜ*(G)`: `a` and `b` are each related to `ab`.
    pub fn induced_star_relation(&self) -> FiniteRelationSpace {
        let n = self.len();
        let mut related = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                let c = self.op(a, b);
                related[a * n + c] = true;
                related[b * n + c] = true;
            }
        }
        FiniteRelationSpace::from_fn(self.labels.clone(), |a, b| related[a * n + b])
            .expect("labels already validated")
    }
}

impl fmt::Debug for FiniteGroupoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FiniteGroupoid {:?}", self.labels)?;
        for row in self.rows() {
            let cells: Vec<&str> = row.iter().map(|&c| self.label(c)).collect();
            writeln!(f, "  {}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// `(ℜ(G), ℜ*(G))`.
pub fn induced_relations(g: &FiniteGroupoid) -> (FiniteRelationSpace, FiniteRelationSpace) {
    (g.induced_relation(), g.induced_star_relation())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::relcore::classify;

    #[test]
    fn table_validation() {
        let labels = vec!["x".to_string(), "y".to_string()];
        assert!(matches!(
            FiniteGroupoid::new(labels.clone(), vec![0, 1, 1]),
            Err(Error::MalformedTable(_))
        ));
        assert!(matches!(
            FiniteGroupoid::new(labels.clone(), vec![0, 1, 1, 2]),
            Err(Error::MalformedTable(_))
        ));
        let g = FiniteGroupoid::new(labels, vec![0, 1, 1, 0]).unwrap();
        assert_eq!(g.op(1, 1), 0);
        assert_eq!(g.rows(), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn label_rows_round_trip() {
        let t = fixtures::table1();
        let rows: Vec<Vec<String>> = t
            .rows()
            .iter()
            .map(|r| r.iter().map(|&c| t.label(c).to_string()).collect())
            .collect();
        let back = FiniteGroupoid::from_label_rows(t.labels().to_vec(), &rows).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn induced_relations_of_table1() {
        let t = fixtures::table1();
        let (r, star) = induced_relations(&t);
        // row a: a·a = e, a·b = c, a·c = c, a·e = e, a·f = f
        assert!(r.related(0, 2) && r.related(0, 3) && r.related(0, 4));
        assert!(!r.related(0, 0));
        assert!(classify(&star).up_directed);
    }
}
