//! Structural invariants of finite semigroups: idempotents and their natural
//! order, maximal subgroups and the Clifford part, centers, viable
//! idempotents, the semilattice reflection, root sets and exponents.

use serde::Serialize;
use thiserror::Error;

use crate::kernel::{
    generated_congruence, is_coideal, quotient, Congruence, ElementSet, FiniteSemigroup,
    SemigroupMap,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("element {0} is not an idempotent")]
    NotIdempotent(usize),
}

pub fn is_idempotent(s: &FiniteSemigroup, x: usize) -> bool {
    s.mul(x, x) == x
}

/// `E(S)`.
pub fn idempotents(s: &FiniteSemigroup) -> ElementSet {
    ElementSet::from_predicate(s.order(), |x| is_idempotent(s, x))
}

/// Index, period and idempotent power of the monogenic subsemigroup `⟨x⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MonogenicData {
    pub element: usize,
    /// Least `i` such that `x^i` reappears later in the power sequence.
    pub index: u64,
    /// Least `p` with `x^(i+p) = x^i`.
    pub period: u64,
    /// The unique idempotent among the powers of `x`.
    pub pi: usize,
}

impl MonogenicData {
    /// Least `n` with `x^n` idempotent: the least multiple of the period
    /// that is at least the index.
    pub fn idempotent_exponent(&self) -> u64 {
        self.index.div_ceil(self.period) * self.period
    }
}

pub fn monogenic_data(s: &FiniteSemigroup, x: usize) -> MonogenicData {
    // first_seen[y] = k such that y = x^k
    let mut first_seen = vec![0u64; s.order()];
    let mut power = x;
    let mut k = 1u64;
    loop {
        if first_seen[power] != 0 {
            let index = first_seen[power];
            let period = k - index;
            let data = MonogenicData {
                element: x,
                index,
                period,
                pi: 0,
            };
            let pi = s.pow(x, data.idempotent_exponent());
            return MonogenicData { pi, ..data };
        }
        first_seen[power] = k;
        power = s.mul(power, x);
        k += 1;
    }
}

/// `π(x)`.
pub fn idempotent_power(s: &FiniteSemigroup, x: usize) -> usize {
    monogenic_data(s, x).pi
}

/// `E(S)` ordered by `e ≤ f ⇔ ef = fe = e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentPoset {
    elements: Vec<usize>,
    leq: Vec<Vec<bool>>,
}

impl IdempotentPoset {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    fn position(&self, x: usize) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }

    /// `None` if either argument is not an idempotent.
    pub fn leq(&self, e: usize, f: usize) -> Option<bool> {
        Some(self.leq[self.position(e)?][self.position(f)?])
    }

    /// Covering pairs `(lower, upper)` in semigroup indices.
    pub fn hasse_pairs(&self) -> Vec<(usize, usize)> {
        let k = self.elements.len();
        let mut out = Vec::new();
        for a in 0..k {
            for b in 0..k {
                if a == b || !self.leq[a][b] {
                    continue;
                }
                let covered = (0..k).any(|c| c != a && c != b && self.leq[a][c] && self.leq[c][b]);
                if !covered {
                    out.push((self.elements[a], self.elements[b]));
                }
            }
        }
        out
    }

    /// Number of elements in a longest chain.
    pub fn height(&self) -> usize {
        let k = self.elements.len();
        // idempotent indices are not topologically sorted, so relax k times
        let mut longest = vec![1usize; k];
        for _ in 0..k {
            for a in 0..k {
                for b in 0..k {
                    if a != b && self.leq[a][b] {
                        longest[b] = longest[b].max(longest[a] + 1);
                    }
                }
            }
        }
        longest.into_iter().max().unwrap_or(0)
    }

    pub fn is_antichain(&self) -> bool {
        self.hasse_pairs().is_empty()
    }

    /// Every infinite subset contains an incomparable pair. Vacuous for a
    /// finite poset, whose chains are bounded by [`Self::height`].
    pub fn is_chain_finite(&self) -> bool {
        true
    }

    /// Whether every nonempty subset has a minimal element; holds for any
    /// finite poset.
    pub fn is_well_founded(&self) -> bool {
        true
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        let k = self.elements.len();
        (0..k)
            .filter(|&b| !(0..k).any(|a| a != b && self.leq[a][b]))
            .map(|b| self.elements[b])
            .collect()
    }
}

pub fn natural_order(s: &FiniteSemigroup) -> IdempotentPoset {
    let elements = idempotents(s).to_vec();
    let leq = elements
        .iter()
        .map(|&e| {
            elements
                .iter()
                .map(|&f| s.mul(e, f) == e && s.mul(f, e) == e)
                .collect()
        })
        .collect();
    IdempotentPoset { elements, leq }
}

fn require_idempotent(s: &FiniteSemigroup, e: usize) -> Result<(), InvariantError> {
    if e < s.order() && is_idempotent(s, e) {
        Ok(())
    } else {
        Err(InvariantError::NotIdempotent(e))
    }
}

/// `H_e`: the units of the local monoid `eSe`.
pub fn maximal_subgroup(s: &FiniteSemigroup, e: usize) -> Result<ElementSet, InvariantError> {
    require_idempotent(s, e)?;
    let local: Vec<usize> = s
        .elements()
        .filter(|&x| s.mul(s.mul(e, x), e) == x)
        .collect();
    Ok(ElementSet::from_indices(
        s.order(),
        local
            .iter()
            .copied()
            .filter(|&x| local.iter().any(|&y| s.mul(x, y) == e && s.mul(y, x) == e)),
    ))
}

/// Inverse of `x` inside `H_e`, if `x ∈ H_e`.
pub fn group_inverse(s: &FiniteSemigroup, e: usize, x: usize) -> Option<usize> {
    if s.mul(s.mul(e, x), e) != x {
        return None;
    }
    s.elements()
        .find(|&y| s.mul(s.mul(e, y), e) == y && s.mul(x, y) == e && s.mul(y, x) == e)
}

/// Order of `x` in the group `H_e`, i.e. the least `k ≥ 1` with `x^k = e`.
pub fn group_element_order(s: &FiniteSemigroup, e: usize, x: usize) -> Option<u64> {
    group_inverse(s, e, x)?;
    let mut power = x;
    let mut k = 1;
    while power != e {
        power = s.mul(power, x);
        k += 1;
    }
    Some(k)
}

/// `H(S)`: union of the maximal subgroups.
pub fn clifford_part(s: &FiniteSemigroup) -> ElementSet {
    let mut h = ElementSet::empty(s.order());
    for e in idempotents(s).iter() {
        for x in maximal_subgroup(s, e).expect("e is idempotent").iter() {
            h.insert(x);
        }
    }
    h
}

/// `H(S)` computed element-wise: `x ∈ H(S) ⇔ x ∈ H_{π(x)}`.
pub fn clifford_part_by_powers(s: &FiniteSemigroup) -> ElementSet {
    ElementSet::from_predicate(s.order(), |x| {
        group_inverse(s, idempotent_power(s, x), x).is_some()
    })
}

/// `Z(S)`.
pub fn center(s: &FiniteSemigroup) -> ElementSet {
    ElementSet::from_predicate(s.order(), |z| {
        s.elements().all(|x| s.mul(z, x) == s.mul(x, z))
    })
}

/// `IZ(S) = {z ∈ Z(S) : zS ⊆ Z(S)}`.
pub fn ideal_center(s: &FiniteSemigroup) -> ElementSet {
    let z = center(s);
    ElementSet::from_predicate(s.order(), |c| {
        z.contains(c) && s.elements().all(|x| z.contains(s.mul(c, x)))
    })
}

/// `H_e/e = {x : xe = ex ∈ H_e}`.
pub fn local_coideal(s: &FiniteSemigroup, e: usize) -> Result<ElementSet, InvariantError> {
    let h = maximal_subgroup(s, e)?;
    Ok(ElementSet::from_predicate(s.order(), |x| {
        let xe = s.mul(x, e);
        xe == s.mul(e, x) && h.contains(xe)
    }))
}

/// Idempotents whose local coideal has an ideal complement.
pub fn viable_idempotents(s: &FiniteSemigroup) -> ElementSet {
    ElementSet::from_predicate(s.order(), |e| {
        is_idempotent(s, e) && is_coideal(s, &local_coideal(s, e).expect("e is idempotent"))
    })
}

/// Idempotents `e` such that every factorisation `xy = e` has both factors
/// commuting with `e`.
pub fn viable_idempotents_by_products(s: &FiniteSemigroup) -> ElementSet {
    ElementSet::from_predicate(s.order(), |e| {
        is_idempotent(s, e)
            && s.elements().all(|x| {
                s.elements().all(|y| {
                    s.mul(x, y) != e || (s.mul(x, e) == s.mul(e, x) && s.mul(y, e) == s.mul(e, y))
                })
            })
    })
}

/// The semilattice reflection `S/⇕` with its projection.
#[derive(Debug, Clone)]
pub struct ReflectionResult {
    pub reflection: FiniteSemigroup,
    pub projection: SemigroupMap,
    pub congruence: Congruence,
}

/// Quotient by the congruence generated by `x² ~ x` and `xy ~ yx`.
pub fn semilattice_reflection(s: &FiniteSemigroup) -> ReflectionResult {
    let squares = s.elements().map(|x| (s.mul(x, x), x));
    let swaps = s
        .elements()
        .flat_map(|x| s.elements().map(move |y| (x, y)))
        .map(|(x, y)| (s.mul(x, y), s.mul(y, x)));
    let congruence =
        generated_congruence(s, squares.chain(swaps)).expect("pairs lie inside the semigroup");
    let (reflection, projection) =
        quotient(s, &congruence).expect("generated congruence is compatible");
    ReflectionResult {
        reflection,
        projection,
        congruence,
    }
}

pub fn is_semilattice(s: &FiniteSemigroup) -> bool {
    s.is_commutative() && s.elements().all(|x| is_idempotent(s, x))
}

/// `ⁿ√A = {x : xⁿ ∈ A}`.
pub fn roots(s: &FiniteSemigroup, a: &ElementSet, n: u64) -> ElementSet {
    ElementSet::from_predicate(s.order(), |x| a.contains(s.pow(x, n)))
}

/// `ℕ√A`: every distinct power of `x` occurs among `x¹ .. x^(i+p-1)`.
pub fn roots_all(s: &FiniteSemigroup, a: &ElementSet) -> ElementSet {
    ElementSet::from_predicate(s.order(), |x| {
        let data = monogenic_data(s, x);
        let mut power = x;
        for _ in 1..data.index + data.period {
            if a.contains(power) {
                return true;
            }
            power = s.mul(power, x);
        }
        false
    })
}

/// Least uniform power sending a set into `E(S)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exponent {
    Finite(u64),
    /// No uniform power exists; reserved for infinite semigroups.
    Unbounded,
}

impl Serialize for Exponent {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Exponent::Finite(n) => s.serialize_u64(*n),
            Exponent::Unbounded => s.serialize_str("unbounded"),
        }
    }
}

impl Exponent {
    pub fn finite(self) -> Option<u64> {
        match self {
            Exponent::Finite(n) => Some(n),
            Exponent::Unbounded => None,
        }
    }
}

/// Least multiple of `period_lcm` that is `≥ max_index` (and `≥ 1`).
pub fn exponent_from_profile(max_index: u64, period_lcm: u64) -> u64 {
    max_index.max(1).div_ceil(period_lcm) * period_lcm
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// `exp(B) = min{n : xⁿ ∈ E(S) for all x ∈ B}`.
///
/// `xⁿ` is idempotent exactly when `n` is a multiple of the period of `x`
/// no smaller than its index, so the answer is the least multiple of the
/// lcm of periods that reaches the largest index.
pub fn exponent_of(s: &FiniteSemigroup, b: &ElementSet) -> Exponent {
    let (max_index, period_lcm) = b
        .iter()
        .map(|x| monogenic_data(s, x))
        .fold((1u64, 1u64), |(i, p), d| (i.max(d.index), lcm(p, d.period)));
    Exponent::Finite(exponent_from_profile(max_index, period_lcm))
}

#[derive(Debug, Clone, Serialize)]
pub struct SubgroupOrder {
    pub idempotent: usize,
    pub order: usize,
}

/// Per-semigroup summary emitted by the `analyze` command.
#[derive(Debug, Clone, Serialize)]
pub struct StructureReport {
    pub order: usize,
    pub commutative: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    pub idempotents: ElementSet,
    pub natural_order_hasse: Vec<(usize, usize)>,
    pub maximal_subgroup_orders: Vec<SubgroupOrder>,
    pub clifford_part: ElementSet,
    pub clifford_part_size: usize,
    pub center: ElementSet,
    pub center_size: usize,
    pub ideal_center: ElementSet,
    pub ideal_center_size: usize,
    pub viable_idempotents: ElementSet,
    pub reflection_order: usize,
    pub exponent: Exponent,
}

pub fn structure_report(s: &FiniteSemigroup) -> StructureReport {
    let e = idempotents(s);
    let (h, z, iz) = (clifford_part(s), center(s), ideal_center(s));
    StructureReport {
        order: s.order(),
        commutative: s.is_commutative(),
        names: s.names().map(<[String]>::to_vec),
        natural_order_hasse: natural_order(s).hasse_pairs(),
        maximal_subgroup_orders: e
            .iter()
            .map(|idempotent| SubgroupOrder {
                idempotent,
                order: maximal_subgroup(s, idempotent).expect("idempotent").len(),
            })
            .collect(),
        clifford_part_size: h.len(),
        clifford_part: h,
        center_size: z.len(),
        center: z,
        ideal_center_size: iz.len(),
        ideal_center: iz,
        viable_idempotents: viable_idempotents(s),
        reflection_order: semilattice_reflection(s).reflection.order(),
        exponent: exponent_of(s, &ElementSet::full(s.order())),
        idempotents: e,
    }
}
