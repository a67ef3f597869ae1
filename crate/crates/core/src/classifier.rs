//! Closedness verdicts assembled from predicate verdicts.
//!
//! For commutative inputs each class has an exact characterization by a
//! conjunction of structural predicates:
//!
//! | class | conditions |
//! |---|---|
//! | C-closed (`TzS ⊆ C ⊆ T1S`) | chain-finite, nonsingular, periodic, group-bounded |
//! | ideally / projectively closed | chain-finite, group-bounded, Clifford+finite |
//! | absolutely `T2S`-closed | chain-finite, bounded, group-finite, Clifford+finite |
//! | absolutely `T1S`-closed | finite |
//!
//! Verdicts are then closed under the implications
//! `absolutely_T1S ⇒ absolutely_T2S ⇒ projectively ⇒ ideally ⇒ C_closed`.
//! Noncommutative inputs only get a positive route through the
//! E-commutative bundle.

use std::fmt::{self, Write as _};

use serde::Serialize;
use thiserror::Error;

use crate::invariants::{self, lcm};
use crate::kernel::{ElementSet, FiniteSemigroup};
use crate::symbolic::{Engine, Predicate, SymbolicSemigroup, TraceEntry, Truth, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifierError {
    #[error("elements {0:?} are not idempotent")]
    NotIdempotents(Vec<usize>),
    #[error("element {element} is out of range for order {order}")]
    OutOfRange { element: usize, order: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClosednessClass {
    CClosed,
    IdeallyClosed,
    ProjectivelyClosed,
    AbsolutelyT2S,
    AbsolutelyT1S,
}

impl ClosednessClass {
    /// Weakest first.
    pub const CHAIN: [ClosednessClass; 5] = [
        ClosednessClass::CClosed,
        ClosednessClass::IdeallyClosed,
        ClosednessClass::ProjectivelyClosed,
        ClosednessClass::AbsolutelyT2S,
        ClosednessClass::AbsolutelyT1S,
    ];

    pub fn key(self) -> &'static str {
        match self {
            ClosednessClass::CClosed => "C_closed",
            ClosednessClass::IdeallyClosed => "ideally_closed",
            ClosednessClass::ProjectivelyClosed => "projectively_closed",
            ClosednessClass::AbsolutelyT2S => "absolutely_T2S_closed",
            ClosednessClass::AbsolutelyT1S => "absolutely_T1S_closed",
        }
    }

    /// Predicates whose conjunction characterizes the class for
    /// commutative semigroups, with the rule id naming the characterization.
    pub fn characterization(self) -> (&'static str, &'static [Predicate]) {
        use Predicate::*;
        match self {
            ClosednessClass::CClosed => (
                "closed-characterization",
                &[ChainFinite, Nonsingular, Periodic, GroupBounded],
            ),
            ClosednessClass::IdeallyClosed | ClosednessClass::ProjectivelyClosed => (
                "ideal-projective-characterization",
                &[ChainFinite, GroupBounded, CliffordPlusFinite],
            ),
            ClosednessClass::AbsolutelyT2S => (
                "absolute-T2S-characterization",
                &[ChainFinite, Bounded, GroupFinite, CliffordPlusFinite],
            ),
            ClosednessClass::AbsolutelyT1S => ("absolute-T1S-characterization", &[Finite]),
        }
    }

    fn position(self) -> usize {
        Self::CHAIN
            .iter()
            .position(|&c| c == self)
            .expect("in chain")
    }
}

impl fmt::Display for ClosednessClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

pub const IMPLICATION_RULE: &str = "implication-diagram";
pub const BUNDLE_RULE: &str = "E-commutative bundle";
const NOT_APPLICABLE: &str = "hypotheses not met: the characterizations need a commutative input";

/// One predicate consumed by a class verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Condition {
    /// Human-readable predicate name, e.g. `"chain-finite"`.
    pub predicate: String,
    pub key: String,
    pub verdict: Truth,
    pub citation: String,
    pub trace: Vec<TraceEntry>,
}

impl Condition {
    fn from_verdict(p: Predicate, v: &Verdict) -> Self {
        Condition {
            predicate: p.label().to_string(),
            key: p.key().to_string(),
            verdict: v.value,
            citation: format!("{}: {}", v.rule, v.citation),
            trace: v.trace(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassVerdict {
    pub value: Truth,
    /// Rule id and the condition list it rests on.
    pub citation: String,
    pub conditions: Vec<Condition>,
    /// Labels of the false conditions behind a `False` verdict, including
    /// those inherited from weaker classes.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failing_conditions: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[allow(non_snake_case)]
pub struct Classes {
    pub C_closed: ClassVerdict,
    pub ideally_closed: ClassVerdict,
    pub projectively_closed: ClassVerdict,
    pub absolutely_T2S_closed: ClassVerdict,
    pub absolutely_T1S_closed: ClassVerdict,
    /// Present only when forced by the absolute or plain verdicts.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub injectively_T2S_closed: Option<ClassVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub injectively_T1S_closed: Option<ClassVerdict>,
}

impl Classes {
    pub fn get(&self, c: ClosednessClass) -> &ClassVerdict {
        match c {
            ClosednessClass::CClosed => &self.C_closed,
            ClosednessClass::IdeallyClosed => &self.ideally_closed,
            ClosednessClass::ProjectivelyClosed => &self.projectively_closed,
            ClosednessClass::AbsolutelyT2S => &self.absolutely_T2S_closed,
            ClosednessClass::AbsolutelyT1S => &self.absolutely_T1S_closed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub input: String,
    pub commutative: Verdict,
    pub classes: Classes,
}

impl ClassificationReport {
    pub fn value(&self, c: ClosednessClass) -> Truth {
        self.classes.get(c).value
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# Classification of `{}`\n", self.input);
        let _ = writeln!(
            out,
            "Commutative: **{}** ({}: {})\n",
            self.commutative.value, self.commutative.rule, self.commutative.citation
        );
        let _ = writeln!(out, "| class | verdict | citation | failing conditions |");
        let _ = writeln!(out, "|---|---|---|---|");
        let mut rows: Vec<(&str, &ClassVerdict)> = ClosednessClass::CHAIN
            .iter()
            .map(|&c| (c.key(), self.classes.get(c)))
            .collect();
        if let Some(v) = &self.classes.injectively_T2S_closed {
            rows.push(("injectively_T2S_closed", v));
        }
        if let Some(v) = &self.classes.injectively_T1S_closed {
            rows.push(("injectively_T1S_closed", v));
        }
        for (name, v) in &rows {
            let _ = writeln!(
                out,
                "| {name} | {} | {} | {} |",
                v.value,
                v.citation,
                v.failing_conditions.join(", ")
            );
        }
        for (name, v) in &rows {
            if v.conditions.is_empty() {
                continue;
            }
            let _ = writeln!(out, "\n## {name}\n");
            for c in &v.conditions {
                let _ = writeln!(out, "- {}: **{}** ({})", c.predicate, c.verdict, c.citation);
            }
        }
        out
    }
}

/// Classifies with the default engine.
pub fn classify(s: &SymbolicSemigroup) -> ClassificationReport {
    classify_with(&Engine::default(), s)
}

pub fn classify_finite(s: &FiniteSemigroup, source: &str) -> ClassificationReport {
    classify(&SymbolicSemigroup::table(source, s.clone()))
}

pub fn classify_with(engine: &Engine, s: &SymbolicSemigroup) -> ClassificationReport {
    let commutative = engine.eval(s, Predicate::Commutative);
    let mut verdicts: Vec<ClassVerdict> = if commutative.value == Truth::True {
        ClosednessClass::CHAIN
            .iter()
            .map(|&c| characterized(engine, s, c))
            .collect()
    } else {
        let bundle = e_commutative_bundle_with(engine, s);
        ClosednessClass::CHAIN
            .iter()
            .map(|&c| {
                if c == ClosednessClass::AbsolutelyT2S && bundle.value == Truth::True {
                    ClassVerdict {
                        value: Truth::True,
                        citation: format!("{BUNDLE_RULE} [{}]", labels(&bundle_predicates())),
                        conditions: bundle_conditions(&bundle),
                        failing_conditions: Vec::new(),
                    }
                } else {
                    ClassVerdict {
                        value: Truth::Unknown,
                        citation: NOT_APPLICABLE.to_string(),
                        conditions: Vec::new(),
                        failing_conditions: Vec::new(),
                    }
                }
            })
            .collect()
    };
    propagate(&mut verdicts);
    let injective_t2 = injective(
        &verdicts,
        ClosednessClass::AbsolutelyT2S,
        commutative.value == Truth::True,
    );
    let injective_t1 = injective(&verdicts, ClosednessClass::AbsolutelyT1S, false);
    let mut it = verdicts.into_iter();
    let mut next = || it.next().expect("five classes");
    ClassificationReport {
        input: s.to_string(),
        commutative,
        classes: Classes {
            C_closed: next(),
            ideally_closed: next(),
            projectively_closed: next(),
            absolutely_T2S_closed: next(),
            absolutely_T1S_closed: next(),
            injectively_T2S_closed: injective_t2,
            injectively_T1S_closed: injective_t1,
        },
    }
}

fn labels(ps: &[Predicate]) -> String {
    ps.iter().map(|p| p.label()).collect::<Vec<_>>().join(", ")
}

fn characterized(engine: &Engine, s: &SymbolicSemigroup, c: ClosednessClass) -> ClassVerdict {
    let (rule, preds) = c.characterization();
    let conditions: Vec<Condition> = preds
        .iter()
        .map(|&p| Condition::from_verdict(p, &engine.eval(s, p)))
        .collect();
    let value = conditions
        .iter()
        .fold(Truth::True, |acc, cond| acc.and(cond.verdict));
    let failing_conditions = conditions
        .iter()
        .filter(|cond| cond.verdict == Truth::False)
        .map(|cond| cond.predicate.clone())
        .collect();
    ClassVerdict {
        value,
        citation: format!("{rule} [{}]", labels(preds)),
        conditions,
        failing_conditions,
    }
}

/// Closes `verdicts` (weakest first) under the implication chain: truth
/// flows downward, falsity upward.
fn propagate(verdicts: &mut [ClassVerdict]) {
    for i in (0..verdicts.len() - 1).rev() {
        if verdicts[i + 1].value == Truth::True && verdicts[i].value != Truth::True {
            debug_assert_eq!(
                verdicts[i].value,
                Truth::Unknown,
                "characterizations disagree"
            );
            verdicts[i].value = Truth::True;
            verdicts[i].citation = format!(
                "{IMPLICATION_RULE}: implied by {}",
                ClosednessClass::CHAIN[i + 1].key()
            );
        }
    }
    for i in 1..verdicts.len() {
        if verdicts[i - 1].value == Truth::False {
            if verdicts[i].value != Truth::False {
                debug_assert_eq!(
                    verdicts[i].value,
                    Truth::Unknown,
                    "characterizations disagree"
                );
                verdicts[i].value = Truth::False;
                verdicts[i].citation = format!(
                    "{IMPLICATION_RULE}: {} fails",
                    ClosednessClass::CHAIN[i - 1].key()
                );
            }
            let inherited = verdicts[i - 1].failing_conditions.clone();
            for f in inherited {
                if !verdicts[i].failing_conditions.contains(&f) {
                    verdicts[i].failing_conditions.push(f);
                }
            }
        }
    }
}

/// Injective closedness sits between the absolute class and `C_closed`.
/// For commutative inputs absolute `T2S`-closedness is also equivalent to
/// being ideally closed, injectively closed and bounded, which decides the
/// injective class negatively when the other two hold.
fn injective(
    verdicts: &[ClassVerdict],
    absolute: ClosednessClass,
    commutative: bool,
) -> Option<ClassVerdict> {
    let abs = &verdicts[absolute.position()];
    let plain = &verdicts[ClosednessClass::CClosed.position()];
    if abs.value == Truth::True {
        return Some(ClassVerdict {
            value: Truth::True,
            citation: format!("{IMPLICATION_RULE}: implied by {}", absolute.key()),
            conditions: Vec::new(),
            failing_conditions: Vec::new(),
        });
    }
    if plain.value == Truth::False {
        return Some(ClassVerdict {
            value: Truth::False,
            citation: format!("{IMPLICATION_RULE}: C_closed fails"),
            conditions: Vec::new(),
            failing_conditions: plain.failing_conditions.clone(),
        });
    }
    if commutative && abs.value == Truth::False {
        let ideally = &verdicts[ClosednessClass::IdeallyClosed.position()];
        let bounded = abs
            .conditions
            .iter()
            .find(|c| c.key == Predicate::Bounded.key())
            .map(|c| c.verdict);
        if ideally.value == Truth::True && bounded == Some(Truth::True) {
            return Some(ClassVerdict {
                value: Truth::False,
                citation: "absolute-T2S-characterization: ideally closed and bounded, yet not absolutely closed"
                    .to_string(),
                conditions: Vec::new(),
                failing_conditions: abs.failing_conditions.clone(),
            });
        }
    }
    None
}

/// Checks the implication chain and that decided verdicts carry citations.
pub fn check_implication_chain(report: &ClassificationReport) -> Result<(), String> {
    type Named<'a> = (&'a str, &'a ClassVerdict);
    let chain: Vec<Named> = ClosednessClass::CHAIN
        .iter()
        .map(|&c| (c.key(), report.classes.get(c)))
        .collect();
    let mut pairs: Vec<(Named, Named)> = chain.windows(2).map(|w| (w[1], w[0])).collect();
    if let Some(v) = &report.classes.injectively_T2S_closed {
        pairs.push((chain[3], ("injectively_T2S_closed", v)));
        pairs.push((("injectively_T2S_closed", v), chain[0]));
    }
    if let Some(v) = &report.classes.injectively_T1S_closed {
        pairs.push((chain[4], ("injectively_T1S_closed", v)));
        pairs.push((("injectively_T1S_closed", v), chain[0]));
    }
    for ((strong_name, strong), (weak_name, weak)) in pairs {
        if strong.value == Truth::True && weak.value != Truth::True {
            return Err(format!(
                "{strong_name} is true but {weak_name} is {}",
                weak.value
            ));
        }
        if weak.value == Truth::False && strong.value != Truth::False {
            return Err(format!(
                "{weak_name} is false but {strong_name} is {}",
                strong.value
            ));
        }
    }
    for (name, v) in chain {
        if v.value.is_known() && v.citation.is_empty() {
            return Err(format!("{name} is decided without a citation"));
        }
    }
    Ok(())
}

fn bundle_predicates() -> [Predicate; 5] {
    [
        Predicate::ChainFinite,
        Predicate::GroupFinite,
        Predicate::Bounded,
        Predicate::CliffordPlusFinite,
        Predicate::ECommutative,
    ]
}

fn bundle_conditions(bundle: &Verdict) -> Vec<Condition> {
    bundle_predicates()
        .iter()
        .zip(&bundle.premises)
        .map(|(&p, v)| Condition::from_verdict(p, v))
        .collect()
}

/// Chain-finite, group-finite, bounded, Clifford+finite and
/// E-commutative: together sufficient for absolute `T2S`-closedness
/// without commutativity.
pub fn e_commutative_bundle(s: &SymbolicSemigroup) -> Verdict {
    e_commutative_bundle_with(&Engine::default(), s)
}

pub fn e_commutative_bundle_with(engine: &Engine, s: &SymbolicSemigroup) -> Verdict {
    let premises: Vec<Verdict> = bundle_predicates()
        .iter()
        .map(|&p| engine.eval(s, p))
        .collect();
    let value = premises.iter().fold(Truth::True, |acc, v| acc.and(v.value));
    let failing: Vec<&str> = bundle_predicates()
        .iter()
        .zip(&premises)
        .filter(|(_, v)| v.value == Truth::False)
        .map(|(p, _)| p.label())
        .collect();
    let citation = if failing.is_empty() {
        format!("[{}]", labels(&bundle_predicates()))
    } else {
        format!("fails: {}", failing.join(", "))
    };
    Verdict::new(value, BUNDLE_RULE, citation).with_premises(premises)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentroboundWitness {
    #[serde(rename = "A")]
    pub idempotents: Vec<usize>,
    pub n: u64,
}

fn check_idempotent_set(s: &FiniteSemigroup, a: &ElementSet) -> Result<(), ClassifierError> {
    if a.order() != s.order() {
        return Err(ClassifierError::OutOfRange {
            element: a.order(),
            order: s.order(),
        });
    }
    let bad: Vec<usize> = a
        .iter()
        .filter(|&x| !invariants::is_idempotent(s, x))
        .collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(ClassifierError::NotIdempotents(bad))
    }
}

/// Central quotients `(xe)(ye)^-1` over `e` in `A` and `x, y` in the
/// intersection of the local coideals of `A`.
pub fn central_quotients(
    s: &FiniteSemigroup,
    a: &ElementSet,
) -> Result<Vec<(usize, usize)>, ClassifierError> {
    check_idempotent_set(s, a)?;
    let mut joint = ElementSet::full(s.order());
    for e in a.iter() {
        joint = joint.intersection(&invariants::local_coideal(s, e).expect("checked idempotent"));
    }
    let z = invariants::center(s);
    let mut out = Vec::new();
    for e in a.iter() {
        for x in joint.iter() {
            for y in joint.iter() {
                let ye = s.mul(y, e);
                let inv = invariants::group_inverse(s, e, ye).expect("ye lies in H_e");
                let q = s.mul(s.mul(x, e), inv);
                if z.contains(q) {
                    out.push((e, q));
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Least `n` with every central quotient's `n`-th power idempotent.
pub fn centrobounded_witness(
    s: &FiniteSemigroup,
    a: &ElementSet,
) -> Result<CentroboundWitness, ClassifierError> {
    let n = central_quotients(s, a)?
        .into_iter()
        .map(|(e, q)| invariants::group_element_order(s, e, q).expect("q lies in H_e"))
        .fold(1, lcm);
    Ok(CentroboundWitness {
        idempotents: a.to_vec(),
        n,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralRootExcess {
    pub elements: Vec<usize>,
    pub verdict: Verdict,
}

/// Central elements with a power in `VE(S)` that lie outside the Clifford part.
pub fn central_root_excess(s: &FiniteSemigroup) -> CentralRootExcess {
    let ve = invariants::viable_idempotents(s);
    let set = invariants::center(s)
        .intersection(&invariants::roots_all(s, &ve))
        .difference(&invariants::clifford_part(s));
    let elements = set.to_vec();
    let verdict = Verdict::new(
        Truth::True,
        "central-root-excess",
        format!(
            "{} central roots of viable idempotents lie outside H",
            elements.len()
        ),
    );
    CentralRootExcess { elements, verdict }
}
