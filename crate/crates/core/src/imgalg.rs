//! Algebras on the images of the lower and upper approximations, including
//! the partial algebra with restricted intersection and complement.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use serde::Serialize;

use crate::approx::{approximate, OperatorId};
use crate::claims::{
    profiles, rng_for, sweep, AuditConfig, Binding, ClaimInfo, ClaimReport, Hypothesis,
    ReportBuilder, SweepMode, Witness,
};
use crate::error::{Error, Result};
use crate::relcore::{check_bound, FiniteRelationSpace, DEFAULT_BOUND};
use crate::subset::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AlgebraKind {
    /// Carrier `{X^u}` with `∨ = ∪` and `∧ = (∩)^u`.
    Upper,
    /// Carrier `{X^l} ∪ {X^u}` with `⋒ = (∩)^l` and `⋓ = (∪)^u`.
    LowerUpper,
    /// `LowerUpper` plus intersection and complement where they stay in the carrier.
    Partial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AlgebraOp {
    /// `a ∪ b` on the upper carrier.
    Join,
    /// `(a ∩ b)^u`.
    Meet,
    /// Plain union, partial on the lower-upper carrier.
    Union,
    /// `(a ∩ b)^l`.
    Cap,
    /// `(a ∪ b)^u`.
    Cup,
    /// Intersection where it lands in the carrier.
    Sqcap,
    /// Complement where it lands in the carrier.
    Kappa,
    Lower,
    Upper,
}

impl AlgebraOp {
    pub const ALL: [AlgebraOp; 9] = [
        Self::Join,
        Self::Meet,
        Self::Union,
        Self::Cap,
        Self::Cup,
        Self::Sqcap,
        Self::Kappa,
        Self::Lower,
        Self::Upper,
    ];

    pub fn arity(self) -> usize {
        match self {
            Self::Kappa | Self::Lower | Self::Upper => 1,
            _ => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Join => "join",
            Self::Meet => "meet",
            Self::Union => "union",
            Self::Cap => "cap",
            Self::Cup => "cup",
            Self::Sqcap => "sqcap",
            Self::Kappa => "kappa",
            Self::Lower => "l",
            Self::Upper => "u",
        }
    }

    fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|op| op.name() == s)
    }
}

impl AlgebraKind {
    pub fn supports(self, op: AlgebraOp) -> bool {
        use AlgebraOp::*;
        match self {
            Self::Upper => matches!(op, Join | Meet | Union | Lower | Upper),
            Self::LowerUpper => matches!(op, Cap | Cup | Union | Lower | Upper),
            Self::Partial => !matches!(op, Join | Meet),
        }
    }
}

/// A finite image algebra. Elements are indices into the sorted carrier.
#[derive(Clone, Debug)]
pub struct ImageAlgebra {
    kind: AlgebraKind,
    space: FiniteRelationSpace,
    carrier: Vec<Subset>,
}

fn images(space: &FiniteRelationSpace, ops: &[OperatorId], bound: usize) -> Result<Vec<Subset>> {
    check_bound(space.len(), bound)?;
    let mut out: Vec<Subset> = Subset::all(space.len())
        .flat_map(|x| ops.iter().map(move |&op| approximate(space, x, op)))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// `S_u` with `∨`, `∧`, `∪` and the partial maps `l`, `u`.
pub fn build_upper_algebra(space: &FiniteRelationSpace) -> Result<ImageAlgebra> {
    Ok(ImageAlgebra {
        kind: AlgebraKind::Upper,
        carrier: images(space, &[OperatorId::U], DEFAULT_BOUND)?,
        space: space.clone(),
    })
}

/// `S_lu` with `⋒`, `⋓`, partial `∪`, `l` and `u`.
pub fn build_lu_algebra(space: &FiniteRelationSpace) -> Result<ImageAlgebra> {
    Ok(ImageAlgebra {
        kind: AlgebraKind::LowerUpper,
        carrier: images(space, &[OperatorId::L, OperatorId::U], DEFAULT_BOUND)?,
        space: space.clone(),
    })
}

/// Adds the partial `⊓` and `κ` to a lower-upper algebra.
pub fn extend_partial(ua: &ImageAlgebra) -> Result<ImageAlgebra> {
    if ua.kind != AlgebraKind::LowerUpper {
        return Err(Error::Document(
            "only a lower-upper image algebra can be extended".into(),
        ));
    }
    Ok(ImageAlgebra {
        kind: AlgebraKind::Partial,
        ..ua.clone()
    })
}

impl ImageAlgebra {
    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn space(&self) -> &FiniteRelationSpace {
        &self.space
    }

    pub fn carrier(&self) -> &[Subset] {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn element(&self, s: Subset) -> Option<usize> {
        self.carrier.binary_search(&s).ok()
    }

    pub fn set(&self, x: usize) -> Subset {
        self.carrier[x]
    }

    pub fn bottom(&self) -> usize {
        self.element(Subset::EMPTY).expect("empty set is an image")
    }

    pub fn top(&self) -> usize {
        let full = approximate(&self.space, self.space.universe(), OperatorId::U);
        self.element(full)
            .expect("upper image of the universe is in the carrier")
    }

    fn u(&self, s: Subset) -> Subset {
        approximate(&self.space, s, OperatorId::U)
    }

    fn l(&self, s: Subset) -> Subset {
        approximate(&self.space, s, OperatorId::L)
    }

    /// The set-level value of an operation, before the carrier check.
    pub fn raw(&self, op: AlgebraOp, args: &[usize]) -> Subset {
        let a = self.set(args[0]);
        let b = || self.set(args[1]);
        match op {
            AlgebraOp::Join | AlgebraOp::Union => a.union(b()),
            AlgebraOp::Meet => self.u(a.intersection(b())),
            AlgebraOp::Cap => self.l(a.intersection(b())),
            AlgebraOp::Cup => self.u(a.union(b())),
            AlgebraOp::Sqcap => a.intersection(b()),
            AlgebraOp::Kappa => a.complement(self.space.len()),
            AlgebraOp::Lower => self.l(a),
            AlgebraOp::Upper => self.u(a),
        }
    }

    /// `None` where the operation is undefined.
    pub fn apply(&self, op: AlgebraOp, args: &[usize]) -> Option<usize> {
        self.element(self.raw(op, args))
    }

    /// Whether `op` is defined on every argument tuple.
    pub fn is_total(&self, op: AlgebraOp) -> bool {
        let m = self.len();
        match op.arity() {
            1 => (0..m).all(|a| self.apply(op, &[a]).is_some()),
            _ => (0..m).all(|a| (0..m).all(|b| self.apply(op, &[a, b]).is_some())),
        }
    }

    /// Row-major table (binary) or vector (unary) with `None` where undefined.
    pub fn table(&self, op: AlgebraOp) -> Vec<Option<usize>> {
        let m = self.len();
        match op.arity() {
            1 => (0..m).map(|a| self.apply(op, &[a])).collect(),
            _ => (0..m * m)
                .map(|i| self.apply(op, &[i / m, i % m]))
                .collect(),
        }
    }

    pub fn dump(&self) -> AlgebraDump {
        AlgebraDump {
            kind: self.kind,
            universe: self.space.labels().to_vec(),
            carrier: self
                .carrier
                .iter()
                .map(|&s| self.space.labels_of(s))
                .collect(),
            bottom: self.bottom(),
            top: self.top(),
            operations: AlgebraOp::ALL
                .into_iter()
                .filter(|&op| self.kind.supports(op))
                .map(|op| (op.name().to_string(), self.table(op)))
                .collect(),
        }
    }
}

/// Serializable form of an algebra: carrier elements as label lists and one
/// table per operation, `null` marking undefined cells.
#[derive(Clone, Debug, Serialize)]
pub struct AlgebraDump {
    pub kind: AlgebraKind,
    pub universe: Vec<String>,
    pub carrier: Vec<Vec<String>>,
    pub bottom: usize,
    pub top: usize,
    pub operations: BTreeMap<String, Vec<Option<usize>>>,
}

/// A term over an image algebra's signature, written in function-call form:
/// `cup(a, u(b))`, `kappa(sqcap(a, b))`, `bot`, `top`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraTerm {
    Var(String),
    Bottom,
    Top,
    Apply(AlgebraOp, Vec<AlgebraTerm>),
}

impl AlgebraTerm {
    pub fn variables(&self, out: &mut Vec<String>) {
        match self {
            Self::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Self::Apply(_, args) => args.iter().for_each(|a| a.variables(out)),
            _ => {}
        }
    }

    fn check_signature(&self, kind: AlgebraKind) -> Result<()> {
        if let Self::Apply(op, args) = self {
            if !kind.supports(*op) {
                return Err(Error::TermParse {
                    input: self.to_string(),
                    reason: format!("`{}` is not an operation of this algebra", op.name()),
                });
            }
            for a in args {
                a.check_signature(kind)?;
            }
        }
        Ok(())
    }

    /// `Ok(None)` when some subterm is undefined.
    fn eval(&self, alg: &ImageAlgebra, vars: &[String], env: &[usize]) -> Option<usize> {
        match self {
            Self::Var(v) => Some(env[vars.iter().position(|w| w == v).expect("variable indexed")]),
            Self::Bottom => Some(alg.bottom()),
            Self::Top => Some(alg.top()),
            Self::Apply(op, args) => {
                let mut vals = [0usize; 2];
                for (slot, a) in vals.iter_mut().zip(args) {
                    *slot = a.eval(alg, vars, env)?;
                }
                alg.apply(*op, &vals[..args.len()])
            }
        }
    }
}

impl fmt::Display for AlgebraTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Var(v) => f.write_str(v),
            Self::Bottom => f.write_str("bot"),
            Self::Top => f.write_str("top"),
            Self::Apply(op, args) => {
                write!(f, "{}(", op.name())?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

struct TermParser<'a> {
    input: &'a str,
    rest: &'a str,
}

impl<'a> TermParser<'a> {
    fn fail<T>(&self, reason: impl Into<String>) -> Result<T> {
        Err(Error::TermParse {
            input: self.input.into(),
            reason: reason.into(),
        })
    }

    fn skip_ws(&mut self) {
        self.rest = self.rest.trim_start();
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        match self.rest.strip_prefix(c) {
            Some(r) => {
                self.rest = r;
                true
            }
            None => false,
        }
    }

    fn ident(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let end = self
            .rest
            .find(|c: char| !(c.is_alphanumeric() || c == '_'))
            .unwrap_or(self.rest.len());
        if end == 0 {
            return self.fail("expected a name");
        }
        let (id, rest) = self.rest.split_at(end);
        self.rest = rest;
        Ok(id)
    }

    fn term(&mut self) -> Result<AlgebraTerm> {
        let name = self.ident()?;
        if !self.eat('(') {
            return Ok(match name {
                "bot" => AlgebraTerm::Bottom,
                "top" => AlgebraTerm::Top,
                v => AlgebraTerm::Var(v.to_string()),
            });
        }
        let Some(op) = AlgebraOp::from_name(name) else {
            return self.fail(format!("unknown operation `{name}`"));
        };
        let mut args = vec![self.term()?];
        while self.eat(',') {
            args.push(self.term()?);
        }
        if !self.eat(')') {
            return self.fail("missing `)`");
        }
        if args.len() != op.arity() {
            return self.fail(format!("`{name}` takes {} argument(s)", op.arity()));
        }
        Ok(AlgebraTerm::Apply(op, args))
    }
}

impl FromStr for AlgebraTerm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = TermParser { input: s, rest: s };
        let t = p.term()?;
        p.skip_ws();
        if !p.rest.is_empty() {
            return p.fail(format!("trailing input `{}`", p.rest));
        }
        Ok(t)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EqualityMode {
    /// Both sides defined and equal.
    Strong,
    /// Equal wherever both sides are defined.
    Omega,
    /// Either side defined forces the other, and then they are equal.
    OmegaStar,
}

impl EqualityMode {
    fn accepts(self, l: Option<usize>, r: Option<usize>) -> bool {
        match self {
            Self::Strong => l.is_some() && l == r,
            Self::Omega => l.is_none() || r.is_none() || l == r,
            Self::OmegaStar => l == r,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakCheck {
    pub holds: bool,
    /// Least failing assignment, variables in order of first appearance.
    pub witness: Option<Vec<(String, Subset)>>,
    pub assignments: u64,
}

/// Checks `lhs = rhs` under `mode` for every assignment of carrier elements.
pub fn weak_equality(
    alg: &ImageAlgebra,
    lhs: &AlgebraTerm,
    rhs: &AlgebraTerm,
    mode: EqualityMode,
) -> Result<WeakCheck> {
    lhs.check_signature(alg.kind)?;
    rhs.check_signature(alg.kind)?;
    let mut vars = Vec::new();
    lhs.variables(&mut vars);
    rhs.variables(&mut vars);
    let mut rng = rng_for(&SweepMode::Exhaustive);
    let s = sweep(
        alg.len(),
        vars.len(),
        &SweepMode::Exhaustive,
        &mut rng,
        |env| mode.accepts(lhs.eval(alg, &vars, env), rhs.eval(alg, &vars, env)),
    );
    Ok(WeakCheck {
        holds: s.failure.is_none(),
        witness: s.failure.map(|env| {
            vars.iter()
                .cloned()
                .zip(env.iter().map(|&x| alg.set(x)))
                .collect()
        }),
        assignments: s.checked,
    })
}

struct Equation {
    lhs: AlgebraTerm,
    rhs: AlgebraTerm,
    mode: EqualityMode,
}

struct Claim {
    info: ClaimInfo,
    algebra: AlgebraKind,
    /// When present, the equations are only required where this one holds.
    premise: Option<Equation>,
    equations: Vec<Equation>,
    vars: Vec<String>,
}

impl Claim {
    fn holds(&self, alg: &ImageAlgebra, env: &[usize]) -> bool {
        let ok = |e: &Equation| {
            e.mode.accepts(
                e.lhs.eval(alg, &self.vars, env),
                e.rhs.eval(alg, &self.vars, env),
            )
        };
        if let Some(p) = &self.premise {
            if !ok(p) {
                return true;
            }
        }
        self.equations.iter().all(ok)
    }
}

type Spec = (&'static str, &'static str, EqualityMode);

use EqualityMode::{Omega, Strong};

const IDEMP3: [Spec; 2] = [
    ("cap(a, a)", "a", Strong),
    ("cap(cup(a, a), a)", "a", Strong),
];
const QUASI_IDEMP4: [Spec; 1] = [("cup(a, a)", "u(a)", Strong)];
const COMM12: [Spec; 2] = [
    ("cap(a, b)", "cap(b, a)", Strong),
    ("cup(a, b)", "cup(b, a)", Strong),
];
const HALF_ABSORPTION: [Spec; 1] = [("cap(a, cup(b, a))", "a", Strong)];
const QUASI_ASSOC1: [Spec; 1] = [("cup(a, cup(b, c))", "cup(cup(a, u(b)), u(c))", Strong)];
const QUASI_ASSOC0: [Spec; 1] = [(
    "cup(cup(a, cup(b, c)), cup(cup(a, b), c))",
    "cup(cup(cup(a, a), cup(b, b)), cup(cup(c, c), c))",
    Strong,
)];

fn build_claim(
    id: &'static str,
    hypothesis: Hypothesis,
    algebra: AlgebraKind,
    premise: Option<Spec>,
    specs: &[Spec],
) -> Claim {
    let eq = |&(l, r, mode): &Spec| Equation {
        lhs: l.parse().expect("built-in term parses"),
        rhs: r.parse().expect("built-in term parses"),
        mode,
    };
    let premise = premise.as_ref().map(eq);
    let equations: Vec<Equation> = specs.iter().map(eq).collect();
    let mut vars = Vec::new();
    for e in premise.iter().chain(&equations) {
        e.lhs.variables(&mut vars);
        e.rhs.variables(&mut vars);
    }
    vars.sort();
    Claim {
        info: ClaimInfo {
            id,
            hypothesis,
            asserted: true,
        },
        algebra,
        premise,
        equations,
        vars,
    }
}

static CLAIMS: LazyLock<Vec<Claim>> = LazyLock::new(|| {
    use AlgebraKind::{LowerUpper, Partial, Upper};
    let upd = Hypothesis::UpDirected;
    let ap = Hypothesis::Parthood;
    let app1: Vec<Spec> = [
        &IDEMP3[..],
        &QUASI_IDEMP4,
        &COMM12,
        &HALF_ABSORPTION,
        &QUASI_ASSOC1,
        &QUASI_ASSOC0,
    ]
    .concat();
    vec![
        build_claim(
            "idemp1",
            upd,
            Upper,
            None,
            &[("join(a, a)", "a", Strong), ("join(a, bot)", "a", Strong)],
        ),
        build_claim(
            "comm1",
            upd,
            Upper,
            None,
            &[("join(a, b)", "join(b, a)", Strong)],
        ),
        build_claim(
            "comm2",
            upd,
            Upper,
            None,
            &[("meet(a, b)", "meet(b, a)", Strong)],
        ),
        build_claim(
            "assoc1",
            upd,
            Upper,
            None,
            &[("join(a, join(b, c))", "join(join(a, b), c)", Strong)],
        ),
        build_claim(
            "absfail",
            upd,
            Upper,
            None,
            &[
                ("join(meet(a, a), a)", "meet(a, a)", Strong),
                ("meet(a, a)", "u(a)", Strong),
            ],
        ),
        build_claim(
            "mo1",
            upd,
            Upper,
            Some(("join(a, b)", "b", Strong)),
            &[("join(meet(a, c), meet(b, c))", "meet(b, c)", Strong)],
        ),
        build_claim("idemp3", ap, LowerUpper, None, &IDEMP3),
        build_claim("quasi-idemp4", ap, LowerUpper, None, &QUASI_IDEMP4),
        build_claim("comm12", ap, LowerUpper, None, &COMM12),
        build_claim("half-absorption", ap, LowerUpper, None, &HALF_ABSORPTION),
        build_claim("quasi-assoc1", ap, LowerUpper, None, &QUASI_ASSOC1),
        build_claim("quasi-assoc0", ap, LowerUpper, None, &QUASI_ASSOC0),
        build_claim("app1", upd, Partial, None, &app1),
        build_claim(
            "app2",
            upd,
            Partial,
            None,
            &[
                ("sqcap(a, a)", "a", Strong),
                ("sqcap(a, bot)", "bot", Strong),
                ("sqcap(a, top)", "a", Strong),
            ],
        ),
        build_claim(
            "app3",
            upd,
            Partial,
            None,
            &[
                ("sqcap(a, b)", "sqcap(b, a)", Omega),
                ("sqcap(a, sqcap(b, c))", "sqcap(sqcap(a, b), c)", Omega),
            ],
        ),
        build_claim(
            "app4",
            upd,
            Partial,
            None,
            &[
                ("sqcap(a, u(a))", "a", Strong),
                ("sqcap(a, l(a))", "a", Strong),
                ("kappa(kappa(a))", "a", Omega),
            ],
        ),
        build_claim(
            "app5",
            upd,
            Partial,
            None,
            &[
                (
                    "sqcap(a, union(b, c))",
                    "union(sqcap(a, b), sqcap(a, c))",
                    Omega,
                ),
                (
                    "union(a, sqcap(b, c))",
                    "sqcap(union(a, b), union(a, c))",
                    Omega,
                ),
            ],
        ),
        build_claim(
            "app6",
            upd,
            Partial,
            None,
            &[
                ("kappa(sqcap(a, b))", "union(kappa(a), kappa(b))", Omega),
                ("kappa(union(a, b))", "sqcap(kappa(a), kappa(b))", Omega),
            ],
        ),
    ]
});

pub fn claim_ids() -> Vec<&'static str> {
    CLAIMS.iter().map(|c| c.info.id).collect()
}

pub fn claim_info(id: &str) -> Option<ClaimInfo> {
    CLAIMS.iter().find(|c| c.info.id == id).map(|c| c.info)
}

/// Ids of the claims evaluated in algebras of `kind`.
pub fn claims_for(kind: AlgebraKind) -> Vec<&'static str> {
    CLAIMS
        .iter()
        .filter(|c| c.algebra == kind)
        .map(|c| c.info.id)
        .collect()
}

/// The three image algebras of one space, built on first use.
struct Algebras<'a> {
    space: &'a FiniteRelationSpace,
    upper: Option<ImageAlgebra>,
    lu: Option<ImageAlgebra>,
    partial: Option<ImageAlgebra>,
}

impl<'a> Algebras<'a> {
    fn get(&mut self, kind: AlgebraKind) -> Result<&ImageAlgebra> {
        let slot = match kind {
            AlgebraKind::Upper => &mut self.upper,
            AlgebraKind::LowerUpper => &mut self.lu,
            AlgebraKind::Partial => &mut self.partial,
        };
        if slot.is_none() {
            let built = match kind {
                AlgebraKind::Upper => build_upper_algebra(self.space)?,
                AlgebraKind::LowerUpper => build_lu_algebra(self.space)?,
                AlgebraKind::Partial => extend_partial(&build_lu_algebra(self.space)?)?,
            };
            *slot = Some(built);
        }
        Ok(slot.as_ref().expect("just built"))
    }
}

/// Sweeps each claim over the carrier of the matching algebra of every space.
pub fn audit(
    spaces: &[&FiniteRelationSpace],
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
    for s in spaces {
        check_bound(s.len(), config.bound)?;
    }
    let profiles = profiles(spaces);
    let mut cache: Vec<Algebras> = spaces
        .iter()
        .map(|&space| Algebras {
            space,
            upper: None,
            lu: None,
            partial: None,
        })
        .collect();
    let mut reports = Vec::with_capacity(claims.len());
    for claim in claims {
        let mut builder = ReportBuilder::new(claim.info, config.mode);
        let mut rng = rng_for(&config.mode);
        for (idx, (space, profile)) in spaces.iter().zip(&profiles).enumerate() {
            if config.respect_hypotheses && !claim.info.hypothesis.admits(space, profile) {
                builder.skip();
                continue;
            }
            let alg = cache[idx].get(claim.algebra)?;
            let s = sweep(alg.len(), claim.vars.len(), &config.mode, &mut rng, |env| {
                claim.holds(alg, env)
            });
            let witness = s.failure.map(|env| Witness {
                space: idx,
                bindings: claim
                    .vars
                    .iter()
                    .zip(env)
                    .map(|(v, x)| Binding::set(v.clone(), space, alg.set(x)))
                    .collect(),
            });
            builder.record(s.checked, witness);
        }
        reports.push(builder.finish(config.mode == SweepMode::Exhaustive));
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::claims::Verdict;
    use crate::fixtures;

    fn term(s: &str) -> AlgebraTerm {
        s.parse().unwrap()
    }

    #[test]
    fn identity_relation_gives_full_powerset() {
        let id2 = fixtures::id(2);
        let uua = build_upper_algebra(&id2).unwrap();
        assert_eq!(uua.len(), 4);
        for a in 0..4 {
            for b in 0..4 {
                let meet = uua.apply(AlgebraOp::Meet, &[a, b]).unwrap();
                assert_eq!(uua.set(meet), uua.set(a).intersection(uua.set(b)));
            }
        }
        let ua = extend_partial(&build_lu_algebra(&id2).unwrap()).unwrap();
        assert!(ua.is_total(AlgebraOp::Sqcap));
        assert!(ua.is_total(AlgebraOp::Kappa));
    }

    #[test]
    fn ex1_upper_carrier() {
        let ex1 = fixtures::ex1();
        let uua = build_upper_algebra(&ex1).unwrap();
        assert!(uua.element(Subset::EMPTY).is_some());
        assert!(uua.element(ex1.universe()).is_some());
        assert!(uua.is_total(AlgebraOp::Join));
        assert!(uua.is_total(AlgebraOp::Meet));
        assert!(uua.is_total(AlgebraOp::Upper));
    }

    #[test]
    fn lu_algebra_on_identity_is_boolean() {
        let id3 = fixtures::id(3);
        let ua = build_lu_algebra(&id3).unwrap();
        assert_eq!(ua.len(), 8);
        for a in 0..8 {
            for b in 0..8 {
                assert_eq!(
                    ua.raw(AlgebraOp::Cap, &[a, b]),
                    ua.set(a).intersection(ua.set(b))
                );
                assert_eq!(ua.raw(AlgebraOp::Cup, &[a, b]), ua.set(a).union(ua.set(b)));
            }
        }
    }

    #[test]
    fn top_meets_itself_on_reflexive_spaces() {
        let toy2 = fixtures::toy2();
        let uua = build_upper_algebra(&toy2).unwrap();
        let top = uua.top();
        assert_eq!(uua.apply(AlgebraOp::Meet, &[top, top]), Some(top));
    }

    #[test]
    fn term_parser() {
        let t = term("cup(a, u(b))");
        assert_eq!(t.to_string(), "cup(a, u(b))");
        assert!("cup(a)".parse::<AlgebraTerm>().is_err());
        assert!("frob(a, b)".parse::<AlgebraTerm>().is_err());
        assert!("cup(a, b".parse::<AlgebraTerm>().is_err());
        assert_eq!(
            term(" kappa( bot ) "),
            AlgebraTerm::Apply(AlgebraOp::Kappa, vec![AlgebraTerm::Bottom])
        );
    }

    #[test]
    fn signature_is_enforced() {
        let uua = build_upper_algebra(&fixtures::toy2()).unwrap();
        assert!(weak_equality(&uua, &term("cup(a, a)"), &term("a"), EqualityMode::Omega).is_err());
    }

    #[test]
    fn omega_is_vacuous_when_a_side_is_undefined() {
        // the complement of a carrier element is never defined when the
        // carrier is not closed under it
        let ua = extend_partial(&build_lu_algebra(&fixtures::ex1()).unwrap()).unwrap();
        let undefined = (0..ua.len()).find(|&x| ua.apply(AlgebraOp::Kappa, &[x]).is_none());
        assert!(undefined.is_some());
        let lhs = term("kappa(a)");
        let w = weak_equality(&ua, &lhs, &term("bot"), EqualityMode::Omega).unwrap();
        let ws = weak_equality(&ua, &lhs, &term("bot"), EqualityMode::OmegaStar).unwrap();
        assert!(!ws.holds || w.holds);
    }

    #[test]
    fn double_complement_under_omega() {
        let ua = extend_partial(&build_lu_algebra(&fixtures::ex1()).unwrap()).unwrap();
        let c = weak_equality(
            &ua,
            &term("kappa(kappa(a))"),
            &term("a"),
            EqualityMode::Omega,
        )
        .unwrap();
        assert!(c.holds);
    }

    #[test]
    fn half_absorption_on_toy2() {
        let r = audit(
            &[&fixtures::toy2()],
            &["half-absorption"],
            &AuditConfig::default(),
        )
        .unwrap();
        assert_eq!(r[0].verdict, Verdict::HoldsExhaustively);
    }

    #[test]
    fn absfail_on_identity() {
        let r = audit(
            &[&fixtures::id(2)],
            &["absfail"],
            &AuditConfig::default().ignoring_hypotheses(),
        )
        .unwrap();
        assert_eq!(r[0].verdict, Verdict::HoldsExhaustively);
    }

    #[test]
    fn dump_has_one_table_per_operation() {
        let ua = extend_partial(&build_lu_algebra(&fixtures::toy2()).unwrap()).unwrap();
        let d = ua.dump();
        assert_eq!(d.operations.len(), 7);
        assert_eq!(d.operations["sqcap"].len(), ua.len() * ua.len());
        assert_eq!(d.operations["kappa"].len(), ua.len());
        assert_eq!(d.carrier[d.bottom], Vec::<String>::new());
    }
}
