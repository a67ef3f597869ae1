//! Semigroup polynomials `x ↦ a₀·x·a₁·x⋯x·aₙ` with coefficients in the
//! 1-extension, polybounded covers and polyfinite witnesses.
//!
//! Covers are found by a truncated search (bounded degree and a bounded
//! number of non-unit coefficients), so a failed search never means the
//! semigroup is not polybounded. Polyfinite witnesses, by contrast, are
//! checked exactly: the pair-state search in [`pair_witness`] ranges over
//! every polynomial of bounded degree with arbitrary coefficients.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::kernel::{ElementSet, FiniteSemigroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolynomialError {
    #[error("a polynomial needs at least two coefficients, got {0}")]
    TooFewCoefficients(usize),
    #[error("coefficient {coefficient} is outside the semigroup of order {order}")]
    CoefficientOutOfRange { coefficient: usize, order: usize },
    #[error("cover misses element {0}")]
    InvalidCover(usize),
    #[error("cover item targets element {target} outside the semigroup")]
    TargetOutOfRange { target: usize },
    #[error("witness recipe failed on the pair ({x}, {y})")]
    RecipeFailed { x: usize, y: usize },
}

/// An element of `S¹`; serialized as its index, with the unit as `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "i64", try_from = "i64")]
pub enum Coefficient {
    Unit,
    Element(usize),
}

impl From<Coefficient> for i64 {
    fn from(c: Coefficient) -> i64 {
        match c {
            Coefficient::Unit => -1,
            Coefficient::Element(x) => x as i64,
        }
    }
}

impl TryFrom<i64> for Coefficient {
    type Error = String;

    fn try_from(v: i64) -> Result<Self, String> {
        match v {
            -1 => Ok(Coefficient::Unit),
            v if v >= 0 => Ok(Coefficient::Element(v as usize)),
            v => Err(format!("invalid coefficient {v}; use -1 for the unit")),
        }
    }
}

impl Coefficient {
    fn mul(self, other: Coefficient, s: &FiniteSemigroup) -> Coefficient {
        match (self, other) {
            (Coefficient::Unit, c) | (c, Coefficient::Unit) => c,
            (Coefficient::Element(a), Coefficient::Element(b)) => Coefficient::Element(s.mul(a, b)),
        }
    }

    fn times_element(self, x: usize, s: &FiniteSemigroup) -> usize {
        match self {
            Coefficient::Unit => x,
            Coefficient::Element(a) => s.mul(a, x),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Coefficient>", into = "Vec<Coefficient>")]
pub struct SemigroupPolynomial {
    coefficients: Vec<Coefficient>,
}

impl SemigroupPolynomial {
    pub fn new(coefficients: Vec<Coefficient>) -> Result<Self, PolynomialError> {
        if coefficients.len() < 2 {
            return Err(PolynomialError::TooFewCoefficients(coefficients.len()));
        }
        Ok(SemigroupPolynomial { coefficients })
    }

    /// `f(x) = x`.
    pub fn identity() -> Self {
        SemigroupPolynomial {
            coefficients: vec![Coefficient::Unit; 2],
        }
    }

    /// `f(x) = xⁿ`.
    pub fn power(n: usize) -> Self {
        assert!(n >= 1);
        SemigroupPolynomial {
            coefficients: vec![Coefficient::Unit; n + 1],
        }
    }

    /// Builds from optional element indices, `None` standing for the unit.
    pub fn from_options(coefficients: &[Option<usize>]) -> Result<Self, PolynomialError> {
        Self::new(
            coefficients
                .iter()
                .map(|c| c.map_or(Coefficient::Unit, Coefficient::Element))
                .collect(),
        )
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[Coefficient] {
        &self.coefficients
    }

    pub fn check(&self, s: &FiniteSemigroup) -> Result<(), PolynomialError> {
        for c in &self.coefficients {
            if let Coefficient::Element(x) = *c {
                if x >= s.order() {
                    return Err(PolynomialError::CoefficientOutOfRange {
                        coefficient: x,
                        order: s.order(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Left-to-right product `a₀·x·a₁·…·x·aₙ`.
    pub fn eval(&self, s: &FiniteSemigroup, x: usize) -> usize {
        let mut acc = self.coefficients[0].times_element(x, s);
        for c in &self.coefficients[1..self.coefficients.len() - 1] {
            let prefix = match *c {
                Coefficient::Unit => acc,
                Coefficient::Element(a) => s.mul(acc, a),
            };
            acc = s.mul(prefix, x);
        }
        match *self.coefficients.last().expect("at least two coefficients") {
            Coefficient::Unit => acc,
            Coefficient::Element(a) => s.mul(acc, a),
        }
    }

    /// The function table `x ↦ f(x)`.
    pub fn table(&self, s: &FiniteSemigroup) -> Vec<usize> {
        s.elements().map(|x| self.eval(s, x)).collect()
    }

    /// `self ∘ inner`, with adjacent constants multiplied out.
    pub fn compose(&self, inner: &SemigroupPolynomial, s: &FiniteSemigroup) -> SemigroupPolynomial {
        let a = &self.coefficients;
        let b = &inner.coefficients;
        let (n, m) = (a.len() - 1, b.len() - 1);
        let mut out = Vec::with_capacity(n * m + 1);
        out.push(a[0].mul(b[0], s));
        for (k, &ak) in a.iter().enumerate().skip(1) {
            out.extend_from_slice(&b[1..m]);
            let joint = b[m].mul(ak, s);
            out.push(if k < n { joint.mul(b[0], s) } else { joint });
        }
        SemigroupPolynomial { coefficients: out }
    }
}

impl TryFrom<Vec<Coefficient>> for SemigroupPolynomial {
    type Error = PolynomialError;

    fn try_from(coefficients: Vec<Coefficient>) -> Result<Self, PolynomialError> {
        Self::new(coefficients)
    }
}

impl From<SemigroupPolynomial> for Vec<Coefficient> {
    fn from(f: SemigroupPolynomial) -> Self {
        f.coefficients
    }
}

impl fmt::Display for SemigroupPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.coefficients.iter().enumerate() {
            if k > 0 {
                parts.push("x".to_string());
            }
            if let Coefficient::Element(a) = c {
                parts.push(a.to_string());
            }
        }
        write!(f, "{}", parts.join("·"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverItem {
    pub polynomial: SemigroupPolynomial,
    pub target: usize,
}

/// Items `(f, b)` whose fibres `f⁻¹(b)` are meant to cover the semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PolyboundedCover {
    pub items: Vec<CoverItem>,
}

impl PolyboundedCover {
    pub fn new(items: Vec<(SemigroupPolynomial, usize)>) -> Self {
        PolyboundedCover {
            items: items
                .into_iter()
                .map(|(polynomial, target)| CoverItem { polynomial, target })
                .collect(),
        }
    }

    /// `{(identity, b) : b ∈ S}`, valid for every finite semigroup.
    pub fn trivial(s: &FiniteSemigroup) -> Self {
        Self::new(
            s.elements()
                .map(|b| (SemigroupPolynomial::identity(), b))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    fn first_uncovered(&self, s: &FiniteSemigroup) -> Option<usize> {
        s.elements().find(|&x| {
            !self
                .items
                .iter()
                .any(|item| item.polynomial.eval(s, x) == item.target)
        })
    }
}

pub fn verify_cover(s: &FiniteSemigroup, cover: &PolyboundedCover) -> bool {
    cover
        .items
        .iter()
        .all(|item| item.target < s.order() && item.polynomial.check(s).is_ok())
        && cover.first_uncovered(s).is_none()
}

/// Truncation of the polynomial search space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchSpace {
    /// Largest degree tried.
    pub max_degree: usize,
    /// Largest number of non-unit coefficients in one polynomial.
    pub max_constants: usize,
}

impl Default for SearchSpace {
    fn default() -> Self {
        SearchSpace {
            max_degree: 3,
            max_constants: 2,
        }
    }
}

/// Polynomials inside `space`, one per distinct function, in order of
/// increasing degree.
pub fn candidate_polynomials(s: &FiniteSemigroup, space: SearchSpace) -> Vec<SemigroupPolynomial> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for degree in 1..=space.max_degree {
        let slots = degree + 1;
        let mut coefficients = vec![Coefficient::Unit; slots];
        enumerate_constants(
            s,
            space.max_constants,
            0,
            &mut coefficients,
            &mut |coeffs| {
                let f = SemigroupPolynomial {
                    coefficients: coeffs.to_vec(),
                };
                if seen.insert(f.table(s)) {
                    out.push(f);
                }
            },
        );
    }
    out
}

fn enumerate_constants(
    s: &FiniteSemigroup,
    budget: usize,
    slot: usize,
    coefficients: &mut Vec<Coefficient>,
    visit: &mut impl FnMut(&[Coefficient]),
) {
    if slot == coefficients.len() {
        visit(coefficients);
        return;
    }
    coefficients[slot] = Coefficient::Unit;
    enumerate_constants(s, budget, slot + 1, coefficients, visit);
    if budget > 0 {
        for a in s.elements() {
            coefficients[slot] = Coefficient::Element(a);
            enumerate_constants(s, budget - 1, slot + 1, coefficients, visit);
        }
        coefficients[slot] = Coefficient::Unit;
    }
}

/// A cover with the fewest items (at most `max_k`) among fibres of the
/// polynomials in `space`, or `None` if the truncated space has none.
pub fn search_polybounded(
    s: &FiniteSemigroup,
    max_k: usize,
    space: SearchSpace,
) -> Option<PolyboundedCover> {
    let mut fibres: Vec<(ElementSet, usize, usize)> = Vec::new();
    let candidates = candidate_polynomials(s, space);
    let mut seen = HashSet::new();
    for (idx, f) in candidates.iter().enumerate() {
        let table = f.table(s);
        for b in s.elements() {
            let fibre = ElementSet::from_predicate(s.order(), |x| table[x] == b);
            if !fibre.is_empty() && seen.insert(fibre.clone()) {
                fibres.push((fibre, idx, b));
            }
        }
    }
    // a fibre contained in another can be dropped without losing covers
    let maximal: Vec<_> = fibres
        .iter()
        .enumerate()
        .filter(|(i, (a, _, _))| {
            !fibres
                .iter()
                .enumerate()
                .any(|(j, (b, _, _))| j != *i && a != b && a.is_subset(b))
        })
        .map(|(_, f)| f.clone())
        .collect();

    for k in 1..=max_k {
        let mut chosen = Vec::new();
        if cover_dfs(&maximal, &ElementSet::empty(s.order()), k, &mut chosen) {
            return Some(PolyboundedCover::new(
                chosen
                    .into_iter()
                    .map(|i| (candidates[maximal[i].1].clone(), maximal[i].2))
                    .collect(),
            ));
        }
    }
    None
}

fn cover_dfs(
    fibres: &[(ElementSet, usize, usize)],
    covered: &ElementSet,
    remaining: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    let Some(first) = covered.complement().iter().next() else {
        return true;
    };
    if remaining == 0 {
        return false;
    }
    for (i, (fibre, _, _)) in fibres.iter().enumerate() {
        if fibre.contains(first) {
            chosen.push(i);
            if cover_dfs(fibres, &covered.union(fibre), remaining - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// `d` and `F` such that every pair is sent into `F` by some polynomial of
/// degree at most `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolyfiniteWitness {
    #[serde(rename = "d")]
    pub degree_bound: usize,
    #[serde(rename = "F")]
    pub set: ElementSet,
}

/// Builds a polyfinite witness from a cover `{(fᵢ, bᵢ)}`:
/// `F = {bᵢ} ∪ {fᵢ(bⱼ)}` and `d = max deg(fᵢ∘fⱼ)`.
///
/// For every pair `(x, y)` the composite `fⱼ∘fᵢ` is checked, where `fᵢ(x) = bᵢ`
/// and `fⱼ(fᵢ(y)) = bⱼ`.
pub fn polyfinite_from_polybounded(
    s: &FiniteSemigroup,
    cover: &PolyboundedCover,
) -> Result<PolyfiniteWitness, PolynomialError> {
    for item in &cover.items {
        item.polynomial.check(s)?;
        if item.target >= s.order() {
            return Err(PolynomialError::TargetOutOfRange {
                target: item.target,
            });
        }
    }
    if let Some(x) = cover.first_uncovered(s) {
        return Err(PolynomialError::InvalidCover(x));
    }
    let items = &cover.items;
    let mut set = ElementSet::from_indices(s.order(), items.iter().map(|it| it.target));
    for fi in items {
        for bj in items {
            set.insert(fi.polynomial.eval(s, bj.target));
        }
    }
    let degree_bound = items
        .iter()
        .flat_map(|fi| {
            items
                .iter()
                .map(move |fj| fi.polynomial.degree() * fj.polynomial.degree())
        })
        .max()
        .expect("a valid cover of a nonempty semigroup is nonempty");

    let first_hit = |z: usize| {
        items
            .iter()
            .position(|it| it.polynomial.eval(s, z) == it.target)
            .expect("cover verified above")
    };
    for x in s.elements() {
        for y in s.elements() {
            let i = first_hit(x);
            let j = first_hit(items[i].polynomial.eval(s, y));
            let f = items[j].polynomial.compose(&items[i].polynomial, s);
            let (fx, fy) = (f.eval(s, x), f.eval(s, y));
            if f.degree() > degree_bound || !set.contains(fx) || !set.contains(fy) {
                return Err(PolynomialError::RecipeFailed { x, y });
            }
        }
    }
    Ok(PolyfiniteWitness { degree_bound, set })
}

/// A polynomial of degree in `1..=max_degree` sending both `x` and `y` into
/// `target`, searching over all coefficients in `S¹`.
///
/// States are pairs `(p(x), p(y))` for prefixes `p = a₀·x·a₁⋯x·aₖ` with
/// `k ≥ 1`; each step appends `·x·a`. Reaching a state again at a later
/// depth adds nothing, so one visit per state suffices.
pub fn pair_witness(
    s: &FiniteSemigroup,
    x: usize,
    y: usize,
    max_degree: usize,
    target: &ElementSet,
) -> Option<SemigroupPolynomial> {
    let unit = s.order();
    let times = |a: usize, b: usize| -> usize {
        match (a == unit, b == unit) {
            (true, _) => b,
            (_, true) => a,
            _ => s.mul(a, b),
        }
    };
    let coeff = |a: usize| {
        if a == unit {
            Coefficient::Unit
        } else {
            Coefficient::Element(a)
        }
    };
    #[derive(Clone, Copy, PartialEq, Eq, Hash)]
    enum Node {
        Start(usize),
        Pair(usize, usize),
    }
    let mut parent: HashMap<Node, (Node, usize)> = HashMap::new();
    let mut frontier: VecDeque<(Node, usize)> = (0..=unit).map(|a| (Node::Start(a), 0)).collect();
    while let Some((node, depth)) = frontier.pop_front() {
        if depth == max_degree {
            continue;
        }
        let (u, v) = match node {
            Node::Start(a) => (times(a, x), times(a, y)),
            Node::Pair(p, q) => (times(p, x), times(q, y)),
        };
        for a in 0..=unit {
            let next = Node::Pair(times(u, a), times(v, a));
            if parent.contains_key(&next) {
                continue;
            }
            parent.insert(next, (node, a));
            let Node::Pair(fx, fy) = next else {
                unreachable!()
            };
            if target.contains(fx) && target.contains(fy) {
                let mut coefficients = Vec::new();
                let mut cur = next;
                while let Node::Pair(..) = cur {
                    let (prev, c) = parent[&cur];
                    coefficients.push(coeff(c));
                    cur = prev;
                }
                let Node::Start(a0) = cur else { unreachable!() };
                coefficients.push(coeff(a0));
                coefficients.reverse();
                return Some(SemigroupPolynomial { coefficients });
            }
            frontier.push_back((next, depth + 1));
        }
    }
    None
}

/// Whether every pair `(x, y)` is sent into `F` by a polynomial of degree
/// at most `d`.
pub fn verify_polyfinite(s: &FiniteSemigroup, witness: &PolyfiniteWitness) -> bool {
    if witness.degree_bound == 0 {
        return false;
    }
    let pairs: Vec<(usize, usize)> = s
        .elements()
        .flat_map(|x| s.elements().map(move |y| (x, y)))
        .collect();
    pairs.par_iter().all(|&(x, y)| {
        pair_witness(s, x, y, witness.degree_bound, &witness.set)
            .is_some_and(|f| f.degree() <= witness.degree_bound)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::fixtures::*;
    use proptest::prelude::*;

    fn poly(c: &[Option<usize>]) -> SemigroupPolynomial {
        SemigroupPolynomial::from_options(c).unwrap()
    }

    #[test]
    fn eval_examples() {
        let id = SemigroupPolynomial::identity();
        for s in [s2(), z3(), lz2(), m21()] {
            assert_eq!(id.table(&s), s.elements().collect::<Vec<_>>());
        }
        let z = z2();
        assert_eq!(SemigroupPolynomial::power(2).eval(&z, 1), 0);
        // a·x·a·x
        let f = poly(&[Some(1), Some(1), None]);
        assert_eq!(f.eval(&z, 0), 0);
        assert_eq!(f.eval(&z, 1), 0);
    }

    #[test]
    fn eval_respects_coefficient_order() {
        // in LZ2, x·y = x: f(x) = y·x is constantly y, g(x) = x·y is the identity
        let lz = lz2();
        assert_eq!(poly(&[Some(1), None]).table(&lz), vec![1, 1]);
        assert_eq!(poly(&[None, Some(1)]).table(&lz), vec![0, 1]);
    }

    #[test]
    fn rejects_degree_zero() {
        assert_eq!(
            SemigroupPolynomial::new(vec![Coefficient::Unit]).unwrap_err(),
            PolynomialError::TooFewCoefficients(1)
        );
        assert!(poly(&[Some(3), None]).check(&s2()).is_err());
    }

    #[test]
    fn compose_examples() {
        let z = z2();
        let g = poly(&[None, Some(1)]);
        assert_eq!(SemigroupPolynomial::identity().compose(&g, &z), g);
        let sq = SemigroupPolynomial::power(2);
        assert_eq!(sq.compose(&sq, &z).degree(), 4);
        let f = poly(&[Some(1), None]);
        let fg = f.compose(&g, &z);
        assert_eq!(fg, poly(&[Some(1), Some(1)]));
        for x in z.elements() {
            assert_eq!(fg.eval(&z, x), z.mul(z.mul(1, x), 1));
        }
    }

    #[test]
    fn cover_examples() {
        for s in [s2(), z3(), lz2(), m21(), n2()] {
            assert!(verify_cover(&s, &PolyboundedCover::trivial(&s)));
        }
        let z = z2();
        assert!(verify_cover(
            &z,
            &PolyboundedCover::new(vec![(SemigroupPolynomial::power(2), 0)])
        ));
        let s = s2();
        let times_zero = poly(&[None, Some(0)]);
        assert!(verify_cover(
            &s,
            &PolyboundedCover::new(vec![(times_zero, 0)])
        ));
        assert!(!verify_cover(
            &s,
            &PolyboundedCover::new(vec![(SemigroupPolynomial::identity(), 0)])
        ));
    }

    #[test]
    fn search_finds_single_fibre_covers() {
        for s in [s2(), z2(), z3(), n2(), m21()] {
            let cover = search_polybounded(&s, 4, SearchSpace::default()).unwrap();
            assert!(verify_cover(&s, &cover));
            assert_eq!(cover.len(), 1, "{s}");
        }
    }

    #[test]
    fn search_respects_max_k() {
        // in a left-zero band every polynomial is x ↦ a₀ or x ↦ x, so one
        // fibre covers via a constant polynomial
        let lz = left_zero(3);
        let cover = search_polybounded(&lz, 1, SearchSpace::default()).unwrap();
        assert_eq!(cover.len(), 1);
        // with no constants allowed only powers remain, which are the identity
        let tight = SearchSpace {
            max_degree: 3,
            max_constants: 0,
        };
        assert!(search_polybounded(&lz, 2, tight).is_none());
        assert_eq!(search_polybounded(&lz, 3, tight).unwrap().len(), 3);
    }

    #[test]
    fn witness_examples() {
        let z = z2();
        let cover = PolyboundedCover::new(vec![(SemigroupPolynomial::power(2), 0)]);
        let w = polyfinite_from_polybounded(&z, &cover).unwrap();
        assert_eq!(w.set.to_vec(), vec![0]);
        assert_eq!(w.degree_bound, 4);
        assert!(verify_polyfinite(&z, &w));

        let s = s2();
        let cover = PolyboundedCover::new(vec![(poly(&[None, Some(0)]), 0)]);
        let w = polyfinite_from_polybounded(&s, &cover).unwrap();
        assert_eq!(w.set.to_vec(), vec![0]);
        assert!(w.degree_bound <= 4);
        assert!(verify_polyfinite(&s, &w));

        let t = trivial();
        let w = polyfinite_from_polybounded(&t, &PolyboundedCover::trivial(&t)).unwrap();
        assert_eq!(w.set.to_vec(), vec![0]);
        assert_eq!(w.degree_bound, 1);
    }

    #[test]
    fn invalid_cover_is_rejected() {
        let s = s2();
        let bad = PolyboundedCover::new(vec![(SemigroupPolynomial::identity(), 0)]);
        assert_eq!(
            polyfinite_from_polybounded(&s, &bad).unwrap_err(),
            PolynomialError::InvalidCover(1)
        );
    }

    #[test]
    fn polyfinite_verification_examples() {
        let s = s2();
        let empty = PolyfiniteWitness {
            degree_bound: 1,
            set: ElementSet::empty(2),
        };
        assert!(!verify_polyfinite(&s, &empty));
        let zero = PolyfiniteWitness {
            degree_bound: 1,
            set: ElementSet::from_indices(2, [0]),
        };
        assert!(verify_polyfinite(&s, &zero));
        let f = pair_witness(&s, 1, 1, 1, &zero.set).unwrap();
        assert_eq!(f.degree(), 1);
        assert_eq!(f.eval(&s, 1), 0);
    }

    #[test]
    fn pair_witness_is_sound() {
        let s = monogenic(3, 2);
        let target = ElementSet::from_indices(s.order(), [2, 3]);
        for x in s.elements() {
            for y in s.elements() {
                if let Some(f) = pair_witness(&s, x, y, 3, &target) {
                    assert!(f.degree() <= 3);
                    assert!(target.contains(f.eval(&s, x)) && target.contains(f.eval(&s, y)));
                }
            }
        }
    }

    #[test]
    fn json_encodes_unit_as_minus_one() {
        let f = poly(&[None, Some(2), None]);
        assert_eq!(serde_json::to_string(&f).unwrap(), "[-1,2,-1]");
        let back: SemigroupPolynomial = serde_json::from_str("[-1,2,-1]").unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<SemigroupPolynomial>("[-2,0]").is_err());
        let w = PolyfiniteWitness {
            degree_bound: 4,
            set: ElementSet::from_indices(2, [0]),
        };
        assert_eq!(serde_json::to_string(&w).unwrap(), r#"{"d":4,"F":[0]}"#);
    }

    fn fixture(pick: usize) -> FiniteSemigroup {
        match pick % 6 {
            0 => s2(),
            1 => z3(),
            2 => lz2(),
            3 => m21(),
            4 => monogenic(2, 3),
            _ => crate::kernel::direct_product(&s2(), &z2()),
        }
    }

    fn reduce(coeffs: &[Option<usize>], order: usize) -> SemigroupPolynomial {
        let c: Vec<_> = coeffs.iter().map(|c| c.map(|a| a % order)).collect();
        SemigroupPolynomial::from_options(&c).unwrap()
    }

    proptest! {
        #[test]
        fn composition_is_pointwise(
            pick in 0usize..6,
            fc in proptest::collection::vec(proptest::option::of(0usize..8), 2..5),
            gc in proptest::collection::vec(proptest::option::of(0usize..8), 2..5),
        ) {
            let s = fixture(pick);
            let (f, g) = (reduce(&fc, s.order()), reduce(&gc, s.order()));
            let fg = f.compose(&g, &s);
            prop_assert_eq!(fg.degree(), f.degree() * g.degree());
            for x in s.elements() {
                prop_assert_eq!(fg.eval(&s, x), f.eval(&s, g.eval(&s, x)));
            }
        }
    }
}
