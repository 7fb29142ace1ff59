//! Finite relational spaces: a labeled universe with one binary relation.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_UNIVERSE};

/// Default cap on universe size for operations that enumerate `2^n` subsets.
pub const DEFAULT_BOUND: usize = 12;

/// A finite universe with a binary relation `R`.
///
/// The declared label order is the canonical order; every "least element"
/// tie-break downstream uses element indices, i.e. this order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteRelationSpace {
    labels: Vec<String>,
    // succ[x] = {z : Rxz}, pred[x] = {z : Rzx}
    succ: Vec<Subset>,
    pred: Vec<Subset>,
}

impl FiniteRelationSpace {
    /// Builds a space from labels and labeled pairs. Duplicate pairs are rejected.
    pub fn new<L, P, A, B>(labels: L, pairs: P) -> Result<Self>
    where
        L: IntoIterator,
        L::Item: Into<String>,
        P: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let mut space = Self::empty(labels)?;
        let index: HashMap<String, usize> = space
            .label_index()
            .into_iter()
            .map(|(l, i)| (l.to_string(), i))
            .collect();
        for (a, b) in pairs {
            let (a, b) = (a.as_ref(), b.as_ref());
            let i = *index.get(a).ok_or_else(|| Error::UnknownLabel(a.into()))?;
            let j = *index.get(b).ok_or_else(|| Error::UnknownLabel(b.into()))?;
            if space.related(i, j) {
                return Err(Error::DuplicatePair {
                    a: a.into(),
                    b: b.into(),
                    line: None,
                });
            }
            space.insert(i, j);
        }
        Ok(space)
    }

    /// Builds a space whose relation is given by a predicate on indices.
    pub fn from_fn<L>(labels: L, mut related: impl FnMut(usize, usize) -> bool) -> Result<Self>
    where
        L: IntoIterator,
        L::Item: Into<String>,
    {
        let mut space = Self::empty(labels)?;
        let n = space.len();
        for a in 0..n {
            for b in 0..n {
                if related(a, b) {
                    space.insert(a, b);
                }
            }
        }
        Ok(space)
    }

    /// Universe labeled `1..=n`.
    pub fn numbered(n: usize, related: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        Self::from_fn((1..=n).map(|i| i.to_string()), related)
    }

    /// Universe from labels and a successor mask per element (`succ[x] = [x]_i`).
    pub fn from_successors<L>(labels: L, succ: &[Subset]) -> Result<Self>
    where
        L: IntoIterator,
        L::Item: Into<String>,
    {
        let n = succ.len();
        let full = Subset::full(n);
        let space = Self::from_fn(labels, |a, b| succ[a].contains(b))?;
        if space.len() != n || succ.iter().any(|s| !s.is_subset(full)) {
            return Err(Error::Document(
                "successor masks do not match the universe".into(),
            ));
        }
        Ok(space)
    }

    fn empty<L>(labels: L) -> Result<Self>
    where
        L: IntoIterator,
        L::Item: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge {
                size: labels.len(),
                max: MAX_UNIVERSE,
            });
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        Ok(Self {
            labels,
            succ: vec![Subset::EMPTY; n],
            pred: vec![Subset::EMPTY; n],
        })
    }

    fn insert(&mut self, a: usize, b: usize) {
        self.succ[a] = self.succ[a].with(b);
        self.pred[b] = self.pred[b].with(a);
    }

    fn label_index(&self) -> HashMap<&str, usize> {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect()
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

    /// `Rab`.
    #[inline]
    pub fn related(&self, a: usize, b: usize) -> bool {
        self.succ[a].contains(b)
    }

    /// `[x]_i = {z : Rxz}`.
    #[inline]
    pub fn successors(&self, x: usize) -> Subset {
        self.succ[x]
    }

    /// `[x] = {z : Rzx}`.
    #[inline]
    pub fn predecessors(&self, x: usize) -> Subset {
        self.pred[x]
    }

    pub fn universe(&self) -> Subset {
        Subset::full(self.len())
    }

    /// All related pairs in row-major index order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.len()).flat_map(move |a| self.succ[a].iter().map(move |b| (a, b)))
    }

    pub fn pair_count(&self) -> usize {
        self.succ.iter().map(|s| s.len()).sum()
    }

    /// Resolves labels to a subset.
    pub fn subset<I, S>(&self, labels: I) -> Result<Subset>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        labels.into_iter().try_fold(Subset::EMPTY, |acc, l| {
            Ok(acc.with(self.index_of(l.as_ref())?))
        })
    }

    /// Labels of a subset in universe order.
    pub fn labels_of(&self, s: Subset) -> Vec<String> {
        s.iter().map(|x| self.labels[x].clone()).collect()
    }

    /// `{a,b}`-style rendering of a subset.
    pub fn show(&self, s: Subset) -> String {
        format!("{{{}}}", self.labels_of(s).join(","))
    }

    /// Same universe, relation `R^{-1}`.
    pub fn inverse(&self) -> Self {
        Self {
            labels: self.labels.clone(),
            succ: self.pred.clone(),
            pred: self.succ.clone(),
        }
    }

    /// Same universe, relation replaced by `related`.
    pub fn with_relation(&self, related: impl FnMut(usize, usize) -> bool) -> Self {
        Self::from_fn(self.labels.clone(), related).expect("labels already validated")
    }

    /// `U_R(a, b) = {x : Rax & Rbx}`.
    #[inline]
    pub fn upper_bounds(&self, a: usize, b: usize) -> Subset {
        self.succ[a].intersection(self.succ[b])
    }

    pub fn neighborhood(&self, x: usize, kind: NeighborhoodKind) -> Subset {
        match kind {
            NeighborhoodKind::Plain => self.pred[x],
            NeighborhoodKind::Inverse => self.succ[x],
            NeighborhoodKind::Symmetric => self.pred[x].intersection(self.succ[x]),
        }
    }

    /// `R ∪ Δ`.
    pub fn reflexive_closure(&self) -> Self {
        self.with_relation(|a, b| a == b || self.related(a, b))
    }

    /// Every ordered pair with `¬Rab` and `U_R(a,b) = ∅`, i.e. the cells an
    /// operation realizing `R` cannot fill.
    pub fn unfillable_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if !self.related(a, b) && self.upper_bounds(a, b).is_empty() {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

impl fmt::Debug for FiniteRelationSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self
            .pairs()
            .map(|(a, b)| format!("{}{}", self.labels[a], self.labels[b]))
            .collect();
        write!(
            f,
            "<{{{}}}, {{{}}}>",
            self.labels.join(","),
            pairs.join(",")
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NeighborhoodKind {
    /// `[x]`
    Plain,
    /// `[x]_i`
    Inverse,
    /// `[x]_o`
    Symmetric,
}

impl NeighborhoodKind {
    pub const ALL: [NeighborhoodKind; 3] = [Self::Plain, Self::Inverse, Self::Symmetric];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    UpDirected,
    Reflexive,
    Antisymmetric,
    Transitive,
    Symmetric,
}

impl Property {
    pub const ALL: [Property; 5] = [
        Self::UpDirected,
        Self::Reflexive,
        Self::Antisymmetric,
        Self::Transitive,
        Self::Symmetric,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::UpDirected => "up_directed",
            Self::Reflexive => "reflexive",
            Self::Antisymmetric => "antisymmetric",
            Self::Transitive => "transitive",
            Self::Symmetric => "symmetric",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Flags for the standard relation properties. A flag is false exactly when
/// `witnesses` holds a violating tuple (of element indices) for it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationProfile {
    pub up_directed: bool,
    pub reflexive: bool,
    pub antisymmetric: bool,
    pub transitive: bool,
    pub symmetric: bool,
    pub witnesses: BTreeMap<Property, Vec<usize>>,
}

impl RelationProfile {
    pub fn holds(&self, p: Property) -> bool {
        match p {
            Property::UpDirected => self.up_directed,
            Property::Reflexive => self.reflexive,
            Property::Antisymmetric => self.antisymmetric,
            Property::Transitive => self.transitive,
            Property::Symmetric => self.symmetric,
        }
    }

    pub fn witness(&self, p: Property) -> Option<&[usize]> {
        self.witnesses.get(&p).map(Vec::as_slice)
    }

    /// Up-directed, reflexive and antisymmetric.
    pub fn is_parthood(&self) -> bool {
        self.up_directed && self.reflexive && self.antisymmetric
    }

    pub fn is_equivalence(&self) -> bool {
        self.reflexive && self.symmetric && self.transitive
    }

    pub fn is_partial_order(&self) -> bool {
        self.reflexive && self.antisymmetric && self.transitive
    }
}

/// Exhaustive scan of the five standard properties, keeping the first
/// violation found in index order.
pub fn classify(space: &FiniteRelationSpace) -> RelationProfile {
    let n = space.len();
    let mut witnesses = BTreeMap::new();
    let mut note = |p: Property, w: Vec<usize>| {
        witnesses.entry(p).or_insert(w);
    };
    for a in 0..n {
        if !space.related(a, a) {
            note(Property::Reflexive, vec![a]);
        }
        for b in 0..n {
            if space.upper_bounds(a, b).is_empty() {
                note(Property::UpDirected, vec![a, b]);
            }
            let ab = space.related(a, b);
            if ab && !space.related(b, a) {
                note(Property::Symmetric, vec![a, b]);
            }
            if ab && a != b && space.related(b, a) {
                note(Property::Antisymmetric, vec![a, b]);
            }
            if ab {
                if let Some(c) = space.successors(b).difference(space.successors(a)).first() {
                    note(Property::Transitive, vec![a, b, c]);
                }
            }
        }
    }
    RelationProfile {
        up_directed: !witnesses.contains_key(&Property::UpDirected),
        reflexive: !witnesses.contains_key(&Property::Reflexive),
        antisymmetric: !witnesses.contains_key(&Property::Antisymmetric),
        transitive: !witnesses.contains_key(&Property::Transitive),
        symmetric: !witnesses.contains_key(&Property::Symmetric),
        witnesses,
    }
}

pub(crate) fn check_bound(n: usize, bound: usize) -> Result<()> {
    if n > bound {
        Err(Error::BoundExceeded { size: n, bound })
    } else {
        Ok(())
    }
}

/// `ℰ(S)`: every `A` with `[x] ⊆ A` for all `x ∈ A`, in mask order.
pub fn nbd_closed_family(space: &FiniteRelationSpace, bound: usize) -> Result<Vec<Subset>> {
    check_bound(space.len(), bound)?;
    Ok(Subset::all(space.len())
        .filter(|&a| a.iter().all(|x| space.predecessors(x).is_subset(a)))
        .collect())
}

/// A total map between the universes of two spaces.
#[derive(Clone, Debug)]
pub struct SpaceMap<'a> {
    source: &'a FiniteRelationSpace,
    target: &'a FiniteRelationSpace,
    assignment: Vec<usize>,
}

impl<'a> SpaceMap<'a> {
    pub fn new(
        source: &'a FiniteRelationSpace,
        target: &'a FiniteRelationSpace,
        assignment: Vec<usize>,
    ) -> Result<Self> {
        if assignment.len() != source.len() || assignment.iter().any(|&y| y >= target.len()) {
            return Err(Error::Document(
                "map is not total on the source universe".into(),
            ));
        }
        Ok(Self {
            source,
            target,
            assignment,
        })
    }

    /// Builds a map from `(source label, target label)` pairs.
    pub fn from_labels<A: AsRef<str>, B: AsRef<str>>(
        source: &'a FiniteRelationSpace,
        target: &'a FiniteRelationSpace,
        pairs: impl IntoIterator<Item = (A, B)>,
    ) -> Result<Self> {
        let mut assignment = vec![usize::MAX; source.len()];
        for (a, b) in pairs {
            assignment[source.index_of(a.as_ref())?] = target.index_of(b.as_ref())?;
        }
        Self::new(source, target, assignment)
    }

    pub fn identity(space: &'a FiniteRelationSpace) -> Self {
        Self {
            source: space,
            target: space,
            assignment: (0..space.len()).collect(),
        }
    }

    pub fn source(&self) -> &FiniteRelationSpace {
        self.source
    }

    pub fn target(&self) -> &FiniteRelationSpace {
        self.target
    }

    pub fn apply(&self, x: usize) -> usize {
        self.assignment[x]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MorphismKind {
    NotMorphism,
    Morphism,
    StrongMorphism,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismCheck {
    pub kind: MorphismKind,
    /// `NotMorphism`: a source pair `Rab` with `¬Q f(a) f(b)`.
    /// `Morphism`: a target pair `Qce` that is not the image of any `R`-pair.
    pub witness: Option<(usize, usize)>,
}

/// Checks `Rab → Q f(a) f(b)`, then whether every `Q`-pair is the image of
/// some `R`-pair.
pub fn morphism_check(map: &SpaceMap<'_>) -> MorphismCheck {
    let (src, dst) = (map.source, map.target);
    let mut images = vec![Subset::EMPTY; dst.len()];
    for (a, b) in src.pairs() {
        let (fa, fb) = (map.apply(a), map.apply(b));
        if !dst.related(fa, fb) {
            return MorphismCheck {
                kind: MorphismKind::NotMorphism,
                witness: Some((a, b)),
            };
        }
        images[fa] = images[fa].with(fb);
    }
    match dst.pairs().find(|&(c, e)| !images[c].contains(e)) {
        Some(pair) => MorphismCheck {
            kind: MorphismKind::Morphism,
            witness: Some(pair),
        },
        None => MorphismCheck {
            kind: MorphismKind::StrongMorphism,
            witness: None,
        },
    }
}

/// Distinct plain granules `{[x] : x ∈ S}`, sorted.
pub fn distinct_granules(space: &FiniteRelationSpace) -> Vec<Subset> {
    let set: BTreeSet<Subset> = (0..space.len()).map(|x| space.predecessors(x)).collect();
    set.into_iter().collect()
}

/// Two spaces correspond when their families of distinct plain granules have
/// the same cardinality.
pub fn granule_correspondence(a: &FiniteRelationSpace, b: &FiniteRelationSpace) -> bool {
    distinct_granules(a).len() == distinct_granules(b).len()
}
