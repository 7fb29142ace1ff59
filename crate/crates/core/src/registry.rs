//! One entry point for every audited claim, whatever module owns it.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::claims::{AuditConfig, ClaimInfo, ClaimReport};
use crate::error::{Error, Result};
use crate::powgrp::LiftedProductContext;
use crate::relcore::FiniteRelationSpace;
use crate::{approx, imgalg, latfca, magma, powgrp, quotient};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Module {
    Approx,
    Magma,
    Imgalg,
    Powgrp,
    Quotient,
    Latfca,
}

impl Module {
    pub const ALL: [Module; 6] = [
        Self::Approx,
        Self::Magma,
        Self::Imgalg,
        Self::Powgrp,
        Self::Quotient,
        Self::Latfca,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Approx => "approx",
            Self::Magma => "magma",
            Self::Imgalg => "imgalg",
            Self::Powgrp => "powgrp",
            Self::Quotient => "quotient",
            Self::Latfca => "latfca",
        }
    }

    pub fn claim_ids(self) -> Vec<&'static str> {
        match self {
            Self::Approx => approx::claim_ids(),
            Self::Magma => magma::claim_ids(),
            Self::Imgalg => imgalg::claim_ids(),
            Self::Powgrp => powgrp::claim_ids(),
            Self::Quotient => quotient::claim_ids(),
            Self::Latfca => latfca::claim_ids(),
        }
    }

    pub fn claim_info(self, id: &str) -> Option<ClaimInfo> {
        match self {
            Self::Approx => approx::claim_info(id),
            Self::Magma => magma::claim_info(id),
            Self::Imgalg => imgalg::claim_info(id),
            Self::Powgrp => powgrp::claim_info(id),
            Self::Quotient => quotient::claim_info(id),
            Self::Latfca => latfca::claim_info(id),
        }
    }

    pub fn audit(
        self,
        spaces: &[&FiniteRelationSpace],
        ids: &[&str],
        config: &AuditConfig,
    ) -> Result<Vec<ClaimReport>> {
        match self {
            Self::Approx => approx::audit(spaces, ids, config),
            Self::Magma => magma::audit(spaces, ids, config),
            Self::Imgalg => imgalg::audit(spaces, ids, config),
            Self::Powgrp => audit_products(spaces, ids, config),
            Self::Quotient => quotient::audit(spaces, ids, config),
            Self::Latfca => latfca::audit(spaces, ids, config),
        }
    }
}

impl fmt::Display for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Module {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

/// Spaces without a canonical groupoid have no lifted product; they count as
/// skipped and witness indices refer back to `spaces`.
fn audit_products(
    spaces: &[&FiniteRelationSpace],
    ids: &[&str],
    config: &AuditConfig,
) -> Result<Vec<ClaimReport>> {
    let mut origin = Vec::new();
    let mut ctxs = Vec::new();
    for (i, s) in spaces.iter().enumerate() {
        if let Ok(ctx) = LiftedProductContext::canonical(s) {
            origin.push(i);
            ctxs.push(ctx);
        }
    }
    let refs: Vec<&LiftedProductContext> = ctxs.iter().collect();
    let mut reports = powgrp::audit(&refs, ids, config)?;
    for r in &mut reports {
        r.skipped += spaces.len() - ctxs.len();
        if let Some(w) = &mut r.witness {
            w.space = origin[w.space];
        }
    }
    Ok(reports)
}

/// Every claim id with its owning module, in module order.
pub fn all_claims() -> Vec<(Module, &'static str)> {
    Module::ALL
        .into_iter()
        .flat_map(|m| m.claim_ids().into_iter().map(move |id| (m, id)))
        .collect()
}

/// Expands a selector into claims. Accepted forms: a bare claim id, a
/// qualified `module:id`, a module name (all its claims) and `all`.
pub fn resolve(selector: &str) -> Result<Vec<(Module, &'static str)>> {
    if selector == "all" {
        return Ok(all_claims());
    }
    if let Ok(m) = selector.parse::<Module>() {
        return Ok(m.claim_ids().into_iter().map(|id| (m, id)).collect());
    }
    let (module, id) = match selector.split_once(':') {
        Some((m, id)) => (Some(m.parse::<Module>()?), id),
        None => (None, selector),
    };
    all_claims()
        .into_iter()
        .find(|&(m, c)| c == id && module.is_none_or(|want| want == m))
        .map(|found| vec![found])
        .ok_or_else(|| Error::UnknownClaim(selector.to_string()))
}

/// Audits the selected claims, one report per claim in selector order
/// (duplicates removed).
pub fn audit(
    spaces: &[&FiniteRelationSpace],
    selectors: &[&str],
    config: &AuditConfig,
) -> Result<Vec<(Module, ClaimReport)>> {
    let mut chosen: Vec<(Module, &'static str)> = Vec::new();
    for sel in selectors {
        for c in resolve(sel)? {
            if !chosen.contains(&c) {
                chosen.push(c);
            }
        }
    }
    let mut out = Vec::with_capacity(chosen.len());
    let mut start = 0;
    while start < chosen.len() {
        let module = chosen[start].0;
        let end = start + chosen[start..].iter().take_while(|c| c.0 == module).count();
        let ids: Vec<&str> = chosen[start..end].iter().map(|c| c.1).collect();
        out.extend(
            module
                .audit(spaces, &ids, config)?
                .into_iter()
                .map(|r| (module, r)),
        );
        start = end;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::claims::Verdict;
    use crate::fixtures;

    #[test]
    fn ids_are_unique_across_modules() {
        let all = all_claims();
        let mut ids: Vec<&str> = all.iter().map(|c| c.1).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), all.len());
    }

    #[test]
    fn selectors() {
        assert_eq!(resolve("tr23").unwrap(), vec![(Module::Latfca, "tr23")]);
        assert_eq!(
            resolve("approx:l-id").unwrap(),
            vec![(Module::Approx, "l-id")]
        );
        assert_eq!(resolve("imgalg").unwrap().len(), imgalg::claim_ids().len());
        assert_eq!(
            resolve("magma:tr23"),
            Err(Error::UnknownClaim("magma:tr23".into()))
        );
        assert!(resolve("nope").is_err());
    }

    #[test]
    fn mixed_audit_keeps_selector_order() {
        let toy2 = fixtures::toy2();
        let r = audit(
            &[&toy2],
            &["tr23", "l-id", "n", "tr23"],
            &AuditConfig::default(),
        )
        .unwrap();
        let ids: Vec<&str> = r.iter().map(|(_, r)| r.claim.as_str()).collect();
        assert_eq!(ids, ["tr23", "l-id", "n"]);
        assert!(r
            .iter()
            .all(|(_, r)| r.verdict == Verdict::HoldsExhaustively));
    }

    #[test]
    fn products_skip_spaces_without_a_groupoid() {
        // the empty relation on two points has no upper bounds at all
        let empty = FiniteRelationSpace::numbered(2, |_, _| false).unwrap();
        let toy2 = fixtures::toy2();
        let r = audit(
            &[&empty, &toy2],
            &["order-comp"],
            &AuditConfig::default().ignoring_hypotheses(),
        )
        .unwrap();
        assert_eq!(r[0].1.skipped, 1);
    }
}
