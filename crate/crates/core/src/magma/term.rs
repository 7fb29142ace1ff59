//! Groupoid terms over single-letter variables and identity checking.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::FiniteGroupoid;
use crate::claims::advance;
use crate::error::{Error, Result};

/// A product tree whose leaves are variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(char),
    App(Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(c: char) -> Self {
        Term::Var(c)
    }

    pub fn app(l: Term, r: Term) -> Self {
        Term::App(Box::new(l), Box::new(r))
    }

    pub fn variables(&self) -> BTreeSet<char> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<char>) {
        match self {
            Term::Var(c) => {
                out.insert(*c);
            }
            Term::App(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    /// Evaluates with `value(v)` supplying each variable.
    pub fn eval_with(
        &self,
        g: &FiniteGroupoid,
        value: &impl Fn(char) -> Option<usize>,
    ) -> Result<usize> {
        match self {
            Term::Var(c) => value(*c).ok_or_else(|| Error::UnboundVariable(c.to_string())),
            Term::App(l, r) => Ok(g.op(l.eval_with(g, value)?, r.eval_with(g, value)?)),
        }
    }

    /// Evaluation with variables already mapped to slots of `env`.
    fn eval_slots(&self, g: &FiniteGroupoid, vars: &[char], env: &[usize]) -> usize {
        match self {
            Term::Var(c) => env[vars.binary_search(c).expect("variable indexed")],
            Term::App(l, r) => g.op(l.eval_slots(g, vars, env), r.eval_slots(g, vars, env)),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(c) => write!(f, "{c}"),
            Term::App(l, r) => {
                write!(f, "{l}")?;
                match **r {
                    Term::Var(c) => write!(f, "{c}"),
                    _ => write!(f, "({r})"),
                }
            }
        }
    }
}

struct Parser<'a> {
    input: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Self {
        let chars = input
            .chars()
            .filter(|c| !c.is_whitespace() && !matches!(c, '*' | '·' | '.'))
            .collect();
        Self {
            input,
            chars,
            pos: 0,
        }
    }

    fn fail<T>(&self, reason: impl Into<String>) -> Result<T> {
        Err(Error::TermParse {
            input: self.input.into(),
            reason: reason.into(),
        })
    }

    /// A juxtaposition sequence, folded to the left.
    fn sequence(&mut self) -> Result<Term> {
        let mut acc: Option<Term> = None;
        while let Some(&c) = self.chars.get(self.pos) {
            let atom = if c == '(' {
                self.pos += 1;
                let inner = self.sequence()?;
                if self.chars.get(self.pos) != Some(&')') {
                    return self.fail("missing `)`");
                }
                self.pos += 1;
                inner
            } else if c.is_alphabetic() {
                self.pos += 1;
                Term::Var(c)
            } else {
                break;
            };
            acc = Some(match acc {
                None => atom,
                Some(l) => Term::app(l, atom),
            });
        }
        match acc {
            Some(t) => Ok(t),
            None => self.fail("expected a variable or `(`"),
        }
    }
}

impl FromStr for Term {
    type Err = Error;

    /// Juxtaposition is the product and binds to the left: `abc` is `(ab)c`.
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser::new(s);
        let t = p.sequence()?;
        if p.pos != p.chars.len() {
            return p.fail(format!("unexpected `{}`", p.chars[p.pos]));
        }
        Ok(t)
    }
}

/// `lhs = rhs`, universally quantified over the variables of both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identity {
    pub lhs: Term,
    pub rhs: Term,
    vars: Vec<char>,
}

impl Identity {
    pub fn new(lhs: Term, rhs: Term) -> Self {
        let mut vars = lhs.variables();
        vars.extend(rhs.variables());
        Self {
            lhs,
            rhs,
            vars: vars.into_iter().collect(),
        }
    }

    /// Sorted variables of both sides.
    pub fn variables(&self) -> &[char] {
        &self.vars
    }

    /// Evaluates both sides under an assignment ordered like `variables()`.
    pub fn sides(&self, g: &FiniteGroupoid, env: &[usize]) -> (usize, usize) {
        (
            self.lhs.eval_slots(g, &self.vars, env),
            self.rhs.eval_slots(g, &self.vars, env),
        )
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let Some((l, r)) = s.split_once('=') else {
            return Err(Error::TermParse {
                input: s.into(),
                reason: "expected `lhs = rhs`".into(),
            });
        };
        Ok(Self::new(l.parse()?, r.parse()?))
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

/// Outcome of checking an identity over every assignment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub holds: bool,
    /// Least failing assignment (variables in sorted order).
    pub witness: Option<Vec<(char, usize)>>,
    pub assignments: u64,
}

/// Evaluates `term` under `assignment` (variable, element index) pairs.
pub fn eval_term(g: &FiniteGroupoid, term: &Term, assignment: &[(char, usize)]) -> Result<usize> {
    term.eval_with(g, &|c| {
        assignment.iter().find(|(v, _)| *v == c).map(|&(_, x)| x)
    })
}

/// Checks `id` under every assignment, in lexicographic order over the
/// sorted variables.
pub fn holds_identity(g: &FiniteGroupoid, id: &Identity) -> IdentityCheck {
    let n = g.len();
    let k = id.variables().len();
    let mut env = vec![0usize; k];
    let mut assignments = 0u64;
    if n == 0 {
        return IdentityCheck {
            holds: true,
            witness: None,
            assignments,
        };
    }
    loop {
        assignments += 1;
        let (l, r) = id.sides(g, &env);
        if l != r {
            return IdentityCheck {
                holds: false,
                witness: Some(id.variables().iter().copied().zip(env).collect()),
                assignments,
            };
        }
        if !advance(&mut env, n) {
            return IdentityCheck {
                holds: true,
                witness: None,
                assignments,
            };
        }
    }
}
