//! The groupoid `a·b = a if Rab else b` and its equational theory.

use super::audit::{cancellation_report, identity_report};
use super::FiniteGroupoid;
use crate::claims::{ClaimReport, Hypothesis};
use crate::relcore::FiniteRelationSpace;

pub const PAWLAK_AXIOMS: [(&str, &str); 5] = [
    ("E1", "xx = x"),
    ("E2", "x(az) = (xa)(xz)"),
    ("E3", "xax = x"),
    ("E4", "azxauz = auz"),
    ("E5", "u(azxa)z = uaz"),
];

pub const PAWLAK_CONSEQUENCES: [(&str, &str); 13] = [
    ("pawlak.c1", "x(ax) = x"),
    ("pawlak.c2", "x(xa) = xa"),
    ("pawlak.c3", "(xa)a = xa"),
    ("pawlak.c4", "x(xaz) = x(az)"),
    ("pawlak.c5", "(xz)(az) = xz"),
    ("pawlak.c6", "(xa)(zx) = xazx"),
    ("pawlak.c7", "xazxa = xa"),
    ("pawlak.c8", "xazaz = xaz"),
    ("pawlak.c9", "xcazaxa = xaza"),
    ("pawlak.c10", "(xazx)(za) = x(za)"),
    ("pawlak.c11", "x(az)a = xaza"),
    ("pawlak.c12", "(xaz)(ax) = (xza)(zx)"),
    ("pawlak.c13", "xazxz = xzaz"),
];

pub fn pawlak_groupoid(space: &FiniteRelationSpace) -> FiniteGroupoid {
    FiniteGroupoid::from_fn(space.labels().to_vec(), |a, b| {
        if space.related(a, b) {
            a
        } else {
            b
        }
    })
    .expect("labels already validated")
}

/// E1–E5, the thirteen listed consequences and the cancellation
/// equivalence, evaluated on the space's groupoid whatever the relation.
pub fn pawlak_audit(space: &FiniteRelationSpace) -> Vec<ClaimReport> {
    let g = pawlak_groupoid(space);
    let mut out: Vec<ClaimReport> = PAWLAK_AXIOMS
        .iter()
        .chain(&PAWLAK_CONSEQUENCES)
        .map(|&(id, text)| identity_report(id, Hypothesis::Equivalence, &g, text))
        .collect();
    out.push(cancellation_report(&g));
    out
}
