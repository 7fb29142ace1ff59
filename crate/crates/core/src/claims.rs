//! Claim reports and the assignment sweeps that produce them.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::relcore::{classify, FiniteRelationSpace, RelationProfile, DEFAULT_BOUND};
use crate::subset::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    HoldsExhaustively,
    HoldsOnSample,
    Fails,
    /// No space in the family satisfied the claim's hypothesis.
    NotApplicable,
}

impl Verdict {
    pub fn is_failure(self) -> bool {
        self == Verdict::Fails
    }
}

/// Which spaces a claim is stated for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Hypothesis {
    Any,
    UpDirected,
    /// Every unrelated pair has a common upper bound (enough to build an
    /// up-directed groupoid).
    Realizable,
    ReflexiveUpDirected,
    /// Up-directed, reflexive, antisymmetric.
    Parthood,
    ReflexiveAntisymmetric,
    Equivalence,
    PartialOrder,
    /// Partial order in which every pair has a common upper bound.
    DirectedPoset,
}

impl Hypothesis {
    pub fn admits(self, space: &FiniteRelationSpace, profile: &RelationProfile) -> bool {
        match self {
            Self::Any => true,
            Self::UpDirected => profile.up_directed,
            Self::Realizable => space.unfillable_pairs().is_empty(),
            Self::ReflexiveUpDirected => profile.reflexive && profile.up_directed,
            Self::Parthood => profile.is_parthood(),
            Self::ReflexiveAntisymmetric => profile.reflexive && profile.antisymmetric,
            Self::Equivalence => profile.is_equivalence(),
            Self::PartialOrder => profile.is_partial_order(),
            Self::DirectedPoset => profile.is_partial_order() && profile.up_directed,
        }
    }
}

/// A value bound in a counterexample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum WitnessValue {
    Element(String),
    Set(Vec<String>),
    Family(Vec<Vec<String>>),
    Flag(bool),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Binding {
    pub name: String,
    pub value: WitnessValue,
}

impl Binding {
    pub fn new(name: impl Into<String>, value: WitnessValue) -> Self {
        Self {
            name: name.into(),
            value,
        }
    }

    pub fn set(name: impl Into<String>, space: &FiniteRelationSpace, s: Subset) -> Self {
        Self::new(name, WitnessValue::Set(space.labels_of(s)))
    }

    pub fn element(name: impl Into<String>, space: &FiniteRelationSpace, x: usize) -> Self {
        Self::new(name, WitnessValue::Element(space.label(x).to_string()))
    }
}

/// A counterexample: the index of the space in the audited family plus the
/// bindings that violate the claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub space: usize,
    pub bindings: Vec<Binding>,
}

impl Witness {
    pub fn get(&self, name: &str) -> Option<&WitnessValue> {
        self.bindings
            .iter()
            .find(|b| b.name == name)
            .map(|b| &b.value)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClaimReport {
    pub claim: String,
    pub hypothesis: Hypothesis,
    /// Whether the claim is asserted as a law; unasserted claims are
    /// searches for the counterexamples a remark says exist.
    pub asserted: bool,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub sweep_size: u64,
    pub seed: Option<u64>,
    /// Spaces of the family skipped because they fail the hypothesis.
    pub skipped: usize,
}

impl ClaimReport {
    /// An asserted claim that was refuted.
    pub fn is_discrepancy(&self) -> bool {
        self.asserted && self.verdict.is_failure()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepMode {
    Exhaustive,
    /// Uniform random assignments from a seeded generator.
    Sampled {
        samples: u64,
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AuditConfig {
    pub mode: SweepMode,
    /// Skip spaces that fail a claim's hypothesis; when false every claim is
    /// evaluated on every space.
    pub respect_hypotheses: bool,
    pub bound: usize,
}

impl Default for AuditConfig {
    fn default() -> Self {
        Self {
            mode: SweepMode::Exhaustive,
            respect_hypotheses: true,
            bound: DEFAULT_BOUND,
        }
    }
}

impl AuditConfig {
    pub fn exhaustive() -> Self {
        Self::default()
    }

    pub fn sampled(samples: u64, seed: u64) -> Self {
        Self {
            mode: SweepMode::Sampled { samples, seed },
            ..Self::default()
        }
    }

    pub fn ignoring_hypotheses(mut self) -> Self {
        self.respect_hypotheses = false;
        self
    }
}

/// Static description of a claim.
#[derive(Clone, Copy, Debug)]
pub struct ClaimInfo {
    pub id: &'static str,
    pub hypothesis: Hypothesis,
    pub asserted: bool,
}

/// Result of sweeping one claim over one domain.
pub(crate) struct Sweep {
    pub checked: u64,
    pub failure: Option<Vec<usize>>,
}

/// Evaluates `check` on every tuple of `arity` indices below `domain`
/// (lexicographic, first position most significant) or on a sample.
/// Stops at the first failing tuple.
pub(crate) fn sweep(
    domain: usize,
    arity: usize,
    mode: &SweepMode,
    rng: &mut ChaCha8Rng,
    mut check: impl FnMut(&[usize]) -> bool,
) -> Sweep {
    let mut tuple = vec![0usize; arity];
    let mut checked = 0u64;
    if domain == 0 && arity > 0 {
        return Sweep {
            checked,
            failure: None,
        };
    }
    match *mode {
        SweepMode::Exhaustive => loop {
            checked += 1;
            if !check(&tuple) {
                return Sweep {
                    checked,
                    failure: Some(tuple),
                };
            }
            if !advance(&mut tuple, domain) {
                return Sweep {
                    checked,
                    failure: None,
                };
            }
        },
        SweepMode::Sampled { samples, .. } => {
            for _ in 0..samples {
                for slot in tuple.iter_mut() {
                    *slot = rng.random_range(0..domain);
                }
                checked += 1;
                if !check(&tuple) {
                    return Sweep {
                        checked,
                        failure: Some(tuple),
                    };
                }
            }
            Sweep {
                checked,
                failure: None,
            }
        }
    }
}

/// Odometer step; false once every tuple has been produced.
pub(crate) fn advance(tuple: &mut [usize], domain: usize) -> bool {
    for slot in tuple.iter_mut().rev() {
        *slot += 1;
        if *slot < domain {
            return true;
        }
        *slot = 0;
    }
    false
}

pub(crate) fn rng_for(mode: &SweepMode) -> ChaCha8Rng {
    match *mode {
        SweepMode::Sampled { seed, .. } => ChaCha8Rng::seed_from_u64(seed),
        SweepMode::Exhaustive => ChaCha8Rng::seed_from_u64(0),
    }
}

/// Accumulates one claim's outcome across a family of spaces.
pub(crate) struct ReportBuilder {
    info: ClaimInfo,
    mode: SweepMode,
    checked: u64,
    skipped: usize,
    evaluated: usize,
    witness: Option<Witness>,
}

impl ReportBuilder {
    pub fn new(info: ClaimInfo, mode: SweepMode) -> Self {
        Self {
            info,
            mode,
            checked: 0,
            skipped: 0,
            evaluated: 0,
            witness: None,
        }
    }

    pub fn skip(&mut self) {
        self.skipped += 1;
    }

    /// Records one space's sweep; the first failure across the family is kept.
    pub fn record(&mut self, checked: u64, witness: Option<Witness>) {
        self.evaluated += 1;
        self.checked += checked;
        if self.witness.is_none() {
            self.witness = witness;
        }
    }

    pub fn finish(self, exhaustive: bool) -> ClaimReport {
        let verdict = if self.witness.is_some() {
            Verdict::Fails
        } else if self.evaluated == 0 {
            Verdict::NotApplicable
        } else if exhaustive {
            Verdict::HoldsExhaustively
        } else {
            Verdict::HoldsOnSample
        };
        ClaimReport {
            claim: self.info.id.to_string(),
            hypothesis: self.info.hypothesis,
            asserted: self.info.asserted,
            verdict,
            witness: self.witness,
            sweep_size: self.checked,
            seed: match self.mode {
                SweepMode::Sampled { seed, .. } => Some(seed),
                SweepMode::Exhaustive => None,
            },
            skipped: self.skipped,
        }
    }
}

/// Profiles for a family, computed once per audit.
pub(crate) fn profiles(spaces: &[&FiniteRelationSpace]) -> Vec<RelationProfile> {
    spaces.iter().map(|s| classify(s)).collect()
}

pub(crate) fn lookup<'a>(table: &'a [ClaimInfo], id: &str) -> Option<&'a ClaimInfo> {
    table.iter().find(|c| c.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_sweep_is_lexicographic() {
        let mut seen = Vec::new();
        let mut rng = rng_for(&SweepMode::Exhaustive);
        let s = sweep(3, 2, &SweepMode::Exhaustive, &mut rng, |t| {
            seen.push(t.to_vec());
            true
        });
        assert_eq!(s.checked, 9);
        assert_eq!(seen[1], vec![0, 1]);
        assert_eq!(seen[3], vec![1, 0]);
    }

    #[test]
    fn sweep_reports_least_failure() {
        let mut rng = rng_for(&SweepMode::Exhaustive);
        let s = sweep(4, 2, &SweepMode::Exhaustive, &mut rng, |t| t[0] + t[1] < 3);
        assert_eq!(s.failure, Some(vec![0, 3]));
        assert_eq!(s.checked, 4);
    }

    #[test]
    fn sampled_sweep_is_reproducible() {
        let mode = SweepMode::Sampled {
            samples: 20,
            seed: 7,
        };
        let draw = || {
            let mut out = Vec::new();
            let mut rng = rng_for(&mode);
            sweep(10, 2, &mode, &mut rng, |t| {
                out.push(t.to_vec());
                true
            });
            out
        };
        assert_eq!(draw(), draw());
    }
}
