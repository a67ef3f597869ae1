//! Possibly infinite semigroups described by constructor terms, and a
//! three-valued engine answering structural predicates about them.
//!
//! A term is either a finite Cayley table or one of a handful of infinite
//! commutative constructors combined with zero/unit adjunction and binary
//! products. Answers are [`Verdict`]s: `True` or `False` only when a sound
//! rule applies, `Unknown` otherwise, with the rules used recorded as a
//! trace.

mod parser;
mod rules;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::kernel::{direct_product, fixtures, one_extension, zero_extension, FiniteSemigroup};

pub use parser::{parse_dsl, parse_dsl_with};
pub use rules::{eval_predicate, Engine};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolicError {
    #[error("syntax error at offset {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("invalid argument at offset {position}: {message}")]
    InvalidArgument { position: usize, message: String },
    #[error("cannot load table {path}: {message}")]
    TableLoad { path: String, message: String },
    #[error("unknown predicate {0:?}")]
    UnknownPredicate(String),
}

/// Constructor term for a semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymbolicSemigroup {
    /// A finite Cayley table; `source` is how it was referred to.
    Table {
        source: String,
        semigroup: Arc<FiniteSemigroup>,
    },
    /// Cyclic group of order `n`.
    Cyclic(u64),
    /// Monogenic semigroup with `x^(index+period) = x^index`.
    Monogenic {
        index: u64,
        period: u64,
    },
    /// The natural numbers under `min`.
    OmegaChain,
    /// Countably infinite semigroup with every product equal to `0`.
    NullOmega,
    /// Quasicyclic `p`-group.
    Prufer(u64),
    /// Free commutative semigroup on `k` generators.
    FreeComm(u64),
    /// Direct sum of countably many copies of a finite abelian group.
    SumOmega(Box<SymbolicSemigroup>),
    Zero(Box<SymbolicSemigroup>),
    One(Box<SymbolicSemigroup>),
    Product(Box<SymbolicSemigroup>, Box<SymbolicSemigroup>),
}

/// Largest table the engine builds when expanding a finite term.
pub const DEFAULT_EXPANSION_LIMIT: usize = 256;

impl SymbolicSemigroup {
    pub fn table(source: impl Into<String>, semigroup: FiniteSemigroup) -> Self {
        SymbolicSemigroup::Table {
            source: source.into(),
            semigroup: Arc::new(semigroup),
        }
    }

    pub fn product(left: SymbolicSemigroup, right: SymbolicSemigroup) -> Self {
        SymbolicSemigroup::Product(Box::new(left), Box::new(right))
    }

    pub fn zero(inner: SymbolicSemigroup) -> Self {
        SymbolicSemigroup::Zero(Box::new(inner))
    }

    pub fn one(inner: SymbolicSemigroup) -> Self {
        SymbolicSemigroup::One(Box::new(inner))
    }

    /// `Sum(omega, G)`; fails unless `G` is a finite commutative group.
    pub fn sum_omega(group: SymbolicSemigroup) -> Result<Self, String> {
        check_finite_abelian_group(&group)?;
        Ok(SymbolicSemigroup::SumOmega(Box::new(group)))
    }

    /// Number of elements, or `None` for an infinite semigroup.
    pub fn finite_order(&self) -> Option<u128> {
        use SymbolicSemigroup::*;
        match self {
            Table { semigroup, .. } => Some(semigroup.order() as u128),
            Cyclic(n) => Some(u128::from(*n)),
            Monogenic { index, period } => Some(u128::from(index + period - 1)),
            OmegaChain | NullOmega | Prufer(_) | FreeComm(_) => None,
            SumOmega(g) => match g.finite_order()? {
                1 => Some(1),
                _ => None,
            },
            Zero(s) | One(s) => s.finite_order().map(|n| n + 1),
            Product(a, b) => a.finite_order()?.checked_mul(b.finite_order()?),
        }
    }

    /// Cayley table of a finite term with at most `limit` elements.
    pub fn to_finite(&self, limit: usize) -> Option<FiniteSemigroup> {
        use SymbolicSemigroup::*;
        if self.finite_order()? > limit as u128 {
            return None;
        }
        Some(match self {
            Table { semigroup, .. } => (**semigroup).clone(),
            Cyclic(n) => fixtures::cyclic_group(*n as usize),
            Monogenic { index, period } => fixtures::monogenic(*index as usize, *period as usize),
            SumOmega(_) => fixtures::trivial(),
            Zero(s) => zero_extension(&s.to_finite(limit)?),
            One(s) => one_extension(&s.to_finite(limit)?),
            Product(a, b) => direct_product(&a.to_finite(limit)?, &b.to_finite(limit)?),
            OmegaChain | NullOmega | Prufer(_) | FreeComm(_) => return None,
        })
    }

    /// Re-checks constructor arguments (parsing already enforces these).
    pub fn validate(&self) -> Result<(), String> {
        use SymbolicSemigroup::*;
        match self {
            Table { .. } | OmegaChain | NullOmega => Ok(()),
            Cyclic(n) => check_positive("C", *n),
            Monogenic { index, period } => {
                check_positive("M index", *index)?;
                check_positive("M period", *period)
            }
            Prufer(p) => check_prime(*p),
            FreeComm(k) => check_positive("FreeComm", *k),
            SumOmega(g) => {
                g.validate()?;
                check_finite_abelian_group(g)
            }
            Zero(s) | One(s) => s.validate(),
            Product(a, b) => {
                a.validate()?;
                b.validate()
            }
        }
    }
}

fn check_positive(what: &str, n: u64) -> Result<(), String> {
    if n >= 1 {
        Ok(())
    } else {
        Err(format!("{what} must be at least 1"))
    }
}

fn check_prime(p: u64) -> Result<(), String> {
    let prime = p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d));
    if prime {
        Ok(())
    } else {
        Err(format!("Prufer needs a prime, got {p}"))
    }
}

fn check_finite_abelian_group(g: &SymbolicSemigroup) -> Result<(), String> {
    if g.finite_order().is_none() {
        return Err(format!(
            "Sum(omega, _) needs a finite group, {g} is infinite"
        ));
    }
    let engine = Engine::default();
    if engine.eval(g, Predicate::Commutative).value != Truth::True {
        return Err(format!(
            "Sum(omega, _) needs a commutative group, {g} is not"
        ));
    }
    if engine.is_group(g).value != Truth::True {
        return Err(format!("Sum(omega, _) needs a group, {g} is not one"));
    }
    Ok(())
}

impl fmt::Display for SymbolicSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use SymbolicSemigroup::*;
        match self {
            Table { source, .. } => write!(f, "Table({source})"),
            Cyclic(n) => write!(f, "C({n})"),
            Monogenic { index, period } => write!(f, "M({index}, {period})"),
            OmegaChain => write!(f, "OmegaChain"),
            NullOmega => write!(f, "NullOmega"),
            Prufer(p) => write!(f, "Prufer({p})"),
            FreeComm(k) => write!(f, "FreeComm({k})"),
            SumOmega(g) => write!(f, "Sum(omega, {g})"),
            Zero(s) => write!(f, "Zero({s})"),
            One(s) => write!(f, "One({s})"),
            Product(a, b) => match **b {
                Product(..) => write!(f, "{a} * ({b})"),
                _ => write!(f, "{a} * {b}"),
            },
        }
    }
}

/// Kleene three-valued truth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Truth {
    True,
    False,
    Unknown,
}

impl Truth {
    pub fn and(self, other: Truth) -> Truth {
        match (self, other) {
            (Truth::False, _) | (_, Truth::False) => Truth::False,
            (Truth::True, Truth::True) => Truth::True,
            _ => Truth::Unknown,
        }
    }

    pub fn or(self, other: Truth) -> Truth {
        match (self, other) {
            (Truth::True, _) | (_, Truth::True) => Truth::True,
            (Truth::False, Truth::False) => Truth::False,
            _ => Truth::Unknown,
        }
    }

    pub fn is_known(self) -> bool {
        self != Truth::Unknown
    }

    /// `true` if both are known and differ.
    pub fn contradicts(self, other: Truth) -> bool {
        self.is_known() && other.is_known() && self != other
    }
}

impl std::ops::Not for Truth {
    type Output = Truth;

    fn not(self) -> Truth {
        match self {
            Truth::True => Truth::False,
            Truth::False => Truth::True,
            Truth::Unknown => Truth::Unknown,
        }
    }
}

impl From<bool> for Truth {
    fn from(b: bool) -> Truth {
        if b {
            Truth::True
        } else {
            Truth::False
        }
    }
}

impl fmt::Display for Truth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Truth::True => "true",
            Truth::False => "false",
            Truth::Unknown => "unknown",
        })
    }
}

/// Structural predicates the engine can evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Predicate {
    #[serde(rename = "finite")]
    Finite,
    #[serde(rename = "commutative")]
    Commutative,
    #[serde(rename = "chain_finite")]
    ChainFinite,
    #[serde(rename = "periodic")]
    Periodic,
    #[serde(rename = "bounded")]
    Bounded,
    #[serde(rename = "group_finite")]
    GroupFinite,
    #[serde(rename = "group_bounded")]
    GroupBounded,
    #[serde(rename = "group_commutative")]
    GroupCommutative,
    #[serde(rename = "clifford")]
    Clifford,
    #[serde(rename = "clifford_plus_finite")]
    CliffordPlusFinite,
    #[serde(rename = "nonsingular")]
    Nonsingular,
    #[serde(rename = "E_commutative")]
    ECommutative,
    #[serde(rename = "viable")]
    Viable,
    #[serde(rename = "Z_viable")]
    ZViable,
}

impl Predicate {
    pub const ALL: [Predicate; 14] = [
        Predicate::Finite,
        Predicate::Commutative,
        Predicate::ChainFinite,
        Predicate::Periodic,
        Predicate::Bounded,
        Predicate::GroupFinite,
        Predicate::GroupBounded,
        Predicate::GroupCommutative,
        Predicate::Clifford,
        Predicate::CliffordPlusFinite,
        Predicate::Nonsingular,
        Predicate::ECommutative,
        Predicate::Viable,
        Predicate::ZViable,
    ];

    /// Identifier used on the command line and in JSON.
    pub fn key(self) -> &'static str {
        match self {
            Predicate::Finite => "finite",
            Predicate::Commutative => "commutative",
            Predicate::ChainFinite => "chain_finite",
            Predicate::Periodic => "periodic",
            Predicate::Bounded => "bounded",
            Predicate::GroupFinite => "group_finite",
            Predicate::GroupBounded => "group_bounded",
            Predicate::GroupCommutative => "group_commutative",
            Predicate::Clifford => "clifford",
            Predicate::CliffordPlusFinite => "clifford_plus_finite",
            Predicate::Nonsingular => "nonsingular",
            Predicate::ECommutative => "E_commutative",
            Predicate::Viable => "viable",
            Predicate::ZViable => "Z_viable",
        }
    }

    /// Human-readable name used in classification conditions.
    pub fn label(self) -> &'static str {
        match self {
            Predicate::Finite => "X is finite",
            Predicate::Commutative => "commutative",
            Predicate::ChainFinite => "chain-finite",
            Predicate::Periodic => "periodic",
            Predicate::Bounded => "bounded",
            Predicate::GroupFinite => "group-finite",
            Predicate::GroupBounded => "group-bounded",
            Predicate::GroupCommutative => "group-commutative",
            Predicate::Clifford => "Clifford",
            Predicate::CliffordPlusFinite => "Clifford+finite",
            Predicate::Nonsingular => "nonsingular",
            Predicate::ECommutative => "E-commutative",
            Predicate::Viable => "viable",
            Predicate::ZViable => "Z-viable",
        }
    }
}

impl Predicate {
    /// Short name for use inside sentences.
    pub fn adjective(self) -> &'static str {
        match self {
            Predicate::Finite => "finite",
            other => other.label(),
        }
    }
}

impl FromStr for Predicate {
    type Err = SymbolicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Predicate::ALL
            .into_iter()
            .find(|p| p.key() == s || p.label() == s)
            .ok_or_else(|| SymbolicError::UnknownPredicate(s.to_string()))
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

/// `max index` and `lcm of periods` over all elements of a bounded
/// semigroup; the exponent is the least multiple of the latter reaching
/// the former.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct BoundProfile {
    pub max_index: u64,
    pub period_lcm: u64,
}

impl BoundProfile {
    pub(crate) fn exponent(self) -> u64 {
        crate::invariants::exponent_from_profile(self.max_index, self.period_lcm)
    }
}

/// Outcome of a rule application, with the sub-verdicts it consumed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub value: Truth,
    /// Identifier of the rule that produced the value.
    pub rule: String,
    /// Why the rule applies.
    pub citation: String,
    /// Least uniform idempotent power; set on `bounded` verdicts that are true.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exponent: Option<u64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub premises: Vec<Verdict>,
    #[serde(skip)]
    pub(crate) profile: Option<BoundProfile>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    pub depth: usize,
    pub rule: String,
    pub citation: String,
    pub value: Truth,
}

impl Verdict {
    pub fn new(value: Truth, rule: impl Into<String>, citation: impl Into<String>) -> Self {
        Verdict {
            value,
            rule: rule.into(),
            citation: citation.into(),
            exponent: None,
            premises: Vec::new(),
            profile: None,
        }
    }

    pub fn unknown(rule: impl Into<String>, citation: impl Into<String>) -> Self {
        Self::new(Truth::Unknown, rule, citation)
    }

    pub fn with_premises(mut self, premises: Vec<Verdict>) -> Self {
        self.premises = premises;
        self
    }

    pub(crate) fn with_profile(mut self, profile: Option<BoundProfile>) -> Self {
        if self.value == Truth::True {
            self.profile = profile;
            self.exponent = profile.map(BoundProfile::exponent);
        }
        self
    }

    /// Depth-first listing of this verdict and its premises.
    pub fn trace(&self) -> Vec<TraceEntry> {
        let mut out = Vec::new();
        self.collect_trace(0, &mut out);
        out
    }

    fn collect_trace(&self, depth: usize, out: &mut Vec<TraceEntry>) {
        out.push(TraceEntry {
            depth,
            rule: self.rule.clone(),
            citation: self.citation.clone(),
            value: self.value,
        });
        for p in &self.premises {
            p.collect_trace(depth + 1, out);
        }
    }
}
