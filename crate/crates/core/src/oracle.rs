//! Exhaustive enumeration of small semigroups and a suite of structural
//! laws checked over every enumerated table.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::invariants;
use crate::kernel::{self, ElementSet, FiniteSemigroup, SemigroupMap};
use crate::polynomials::{self, SearchSpace};

/// Environment variable overriding the enumeration order limit.
pub const MAX_ORDER_ENV: &str = "SEMICLOSE_MAX_ORDER";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(
        "order {order} exceeds the enumeration limit {limit} (set {MAX_ORDER_ENV} to override)"
    )]
    SpecTooLarge { order: usize, limit: usize },
    #[error("order must be at least 1")]
    EmptyOrder,
    #[error("{MAX_ORDER_ENV}={0:?} is not a positive integer")]
    InvalidOverride(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EnumerationSpec {
    pub order: usize,
    pub commutative_only: bool,
    pub up_to_isomorphism: bool,
}

impl EnumerationSpec {
    pub fn all(order: usize) -> Self {
        EnumerationSpec {
            order,
            commutative_only: false,
            up_to_isomorphism: false,
        }
    }

    pub fn commutative(mut self) -> Self {
        self.commutative_only = true;
        self
    }

    pub fn up_to_iso(mut self) -> Self {
        self.up_to_isomorphism = true;
        self
    }

    /// Default order limit: 5 for commutative tables up to isomorphism, 4 otherwise.
    pub fn default_limit(&self) -> usize {
        if self.commutative_only && self.up_to_isomorphism {
            5
        } else {
            4
        }
    }

    /// The limit in force, honouring [`MAX_ORDER_ENV`].
    pub fn limit(&self) -> Result<usize, OracleError> {
        match std::env::var(MAX_ORDER_ENV) {
            Ok(raw) => match raw.trim().parse::<usize>() {
                Ok(n) if n >= 1 => Ok(n),
                _ => Err(OracleError::InvalidOverride(raw)),
            },
            Err(_) => Ok(self.default_limit()),
        }
    }

    pub fn check(&self) -> Result<(), OracleError> {
        if self.order == 0 {
            return Err(OracleError::EmptyOrder);
        }
        let limit = self.limit()?;
        if self.order > limit {
            return Err(OracleError::SpecTooLarge {
                order: self.order,
                limit,
            });
        }
        Ok(())
    }
}

const UNSET: usize = usize::MAX;

struct Search {
    n: usize,
    commutative: bool,
    cells: Vec<(usize, usize)>,
}

impl Search {
    fn new(n: usize, commutative: bool) -> Self {
        let cells = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !commutative || i <= j)
            .collect();
        Search {
            n,
            commutative,
            cells,
        }
    }

    fn triple_ok(&self, t: &[usize], a: usize, b: usize, c: usize) -> bool {
        let n = self.n;
        let ab = t[a * n + b];
        let bc = t[b * n + c];
        if ab == UNSET || bc == UNSET {
            return true;
        }
        let left = t[ab * n + c];
        let right = t[a * n + bc];
        left == UNSET || right == UNSET || left == right
    }

    /// Associativity on every fully defined triple that reads cell `(i, j)`.
    fn cell_ok(&self, t: &[usize], i: usize, j: usize) -> bool {
        let n = self.n;
        for x in 0..n {
            if !self.triple_ok(t, i, j, x) || !self.triple_ok(t, x, i, j) {
                return false;
            }
        }
        for a in 0..n {
            for b in 0..n {
                if t[a * n + b] == i && !self.triple_ok(t, a, b, j) {
                    return false;
                }
                if t[a * n + b] == j && !self.triple_ok(t, i, a, b) {
                    return false;
                }
            }
        }
        true
    }

    fn assign(&self, t: &mut [usize], k: usize, v: usize) -> bool {
        let (i, j) = self.cells[k];
        t[i * self.n + j] = v;
        if self.commutative {
            t[j * self.n + i] = v;
        }
        self.cell_ok(t, i, j) && (!self.commutative || self.cell_ok(t, j, i))
    }

    /// Fills cells `k..stop`, calling `visit` on each consistent table.
    fn fill(&self, t: &mut Vec<usize>, k: usize, stop: usize, visit: &mut dyn FnMut(&[usize])) {
        if k == stop {
            visit(t);
            return;
        }
        let (i, j) = self.cells[k];
        let saved = (t[i * self.n + j], t[j * self.n + i]);
        for v in 0..self.n {
            if self.assign(t, k, v) {
                self.fill(t, k + 1, stop, visit);
            }
            t[i * self.n + j] = saved.0;
            t[j * self.n + i] = saved.1;
        }
    }
}

/// All tables of `spec.order` meeting `spec`, in lexicographic order of
/// their flattened tables.
pub fn enumerate(spec: &EnumerationSpec) -> Result<Vec<FiniteSemigroup>, OracleError> {
    spec.check()?;
    Ok(enumerate_unchecked(spec))
}

fn enumerate_unchecked(spec: &EnumerationSpec) -> Vec<FiniteSemigroup> {
    let n = spec.order;
    let search = Search::new(n, spec.commutative_only);
    let first_row = n.min(search.cells.len());
    let mut prefixes = Vec::new();
    let mut t = vec![UNSET; n * n];
    search.fill(&mut t, 0, first_row, &mut |p| prefixes.push(p.to_vec()));
    let perms = if spec.up_to_isomorphism {
        permutations(n)
    } else {
        Vec::new()
    };
    prefixes
        .into_par_iter()
        .map(|mut prefix| {
            let mut found = Vec::new();
            search.fill(&mut prefix, first_row, search.cells.len(), &mut |table| {
                if !spec.up_to_isomorphism || is_canonical(table, n, &perms) {
                    found.push(FiniteSemigroup::from_flat_trusted(n, table.to_vec()));
                }
            });
            found
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// Number of tables meeting `spec`.
pub fn count(spec: &EnumerationSpec) -> Result<usize, OracleError> {
    enumerate(spec).map(|v| v.len())
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                go(cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// Flattened table of the copy relabelled by `p` (element `x` becomes `p[x]`).
pub fn relabel(table: &[usize], n: usize, p: &[usize]) -> Vec<usize> {
    let mut out = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            out[p[a] * n + p[b]] = p[table[a * n + b]];
        }
    }
    out
}

fn is_canonical(table: &[usize], n: usize, perms: &[Vec<usize>]) -> bool {
    perms
        .iter()
        .all(|p| relabel(table, n, p).as_slice() >= table)
}

/// Lexicographically least flattened table over all relabellings.
pub fn canonical_form(s: &FiniteSemigroup) -> Vec<usize> {
    let n = s.order();
    permutations(n)
        .iter()
        .map(|p| relabel(s.flat_table(), n, p))
        .min()
        .expect("at least one permutation")
}

pub fn is_isomorphic(s: &FiniteSemigroup, t: &FiniteSemigroup) -> bool {
    s.order() == t.order() && canonical_form(s) == canonical_form(t)
}

/// Laws checked by [`run_lemma_suite`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SuiteCheck {
    IdealCenterIdempotents,
    ReflectionInjectiveOnViable,
    PrimeCoidealCharacteristic,
    ViabilityDefinitionsAgree,
    CommutativeViable,
    ReflectionUniversal,
    PolyboundedToPolyfinite,
}

impl SuiteCheck {
    pub const ALL: [SuiteCheck; 7] = [
        SuiteCheck::IdealCenterIdempotents,
        SuiteCheck::ReflectionInjectiveOnViable,
        SuiteCheck::PrimeCoidealCharacteristic,
        SuiteCheck::ViabilityDefinitionsAgree,
        SuiteCheck::CommutativeViable,
        SuiteCheck::ReflectionUniversal,
        SuiteCheck::PolyboundedToPolyfinite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteCheck::IdealCenterIdempotents => "ideal_center_idempotents",
            SuiteCheck::ReflectionInjectiveOnViable => "reflection_injective_on_viable",
            SuiteCheck::PrimeCoidealCharacteristic => "prime_coideal_characteristic",
            SuiteCheck::ViabilityDefinitionsAgree => "viability_definitions_agree",
            SuiteCheck::CommutativeViable => "commutative_viable",
            SuiteCheck::ReflectionUniversal => "reflection_universal",
            SuiteCheck::PolyboundedToPolyfinite => "polybounded_to_polyfinite",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            SuiteCheck::IdealCenterIdempotents => {
                "idempotents of IZ equal E(Z) ∩ IZ and are all viable"
            }
            SuiteCheck::ReflectionInjectiveOnViable => {
                "the semilattice reflection separates viable idempotents"
            }
            SuiteCheck::PrimeCoidealCharacteristic => {
                "a subset is a prime coideal iff its characteristic map to ({0,1}, min) is a homomorphism"
            }
            SuiteCheck::ViabilityDefinitionsAgree => {
                "coideal-based and product-based viability coincide"
            }
            SuiteCheck::CommutativeViable => "in a commutative semigroup every idempotent is viable",
            SuiteCheck::ReflectionUniversal => {
                "every homomorphism into a semilattice of order <= 3 factors through the reflection"
            }
            SuiteCheck::PolyboundedToPolyfinite => {
                "the (d, F) built from a found polybounded cover is a polyfinite witness"
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub name: &'static str,
    pub description: &'static str,
    pub cases: u64,
    pub passed: u64,
    pub failed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub check: &'static str,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    pub witness: String,
}

pub const SUITE_BANNER: &str =
    "Every check is a proved law; any counterexample indicates a bug in this implementation.";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub banner: &'static str,
    pub spec: EnumerationSpec,
    /// Orders `1..=spec.order` are all covered.
    pub semigroups_checked: u64,
    pub checks: Vec<CheckSummary>,
    pub counterexamples: Vec<Counterexample>,
    pub wall_time_seconds: f64,
}

impl SuiteReport {
    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn check(&self, c: SuiteCheck) -> &CheckSummary {
        self.checks
            .iter()
            .find(|s| s.name == c.name())
            .expect("every check is summarized")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

#[derive(Default)]
struct Tally {
    cases: [u64; 7],
    failed: [u64; 7],
    counterexamples: Vec<Counterexample>,
}

impl Tally {
    fn record(
        &mut self,
        s: &FiniteSemigroup,
        check: SuiteCheck,
        ok: bool,
        witness: impl FnOnce() -> String,
    ) {
        let k = check as usize;
        self.cases[k] += 1;
        if !ok {
            self.failed[k] += 1;
            self.counterexamples.push(Counterexample {
                check: check.name(),
                order: s.order(),
                table: s.rows(),
                witness: witness(),
            });
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        for k in 0..7 {
            self.cases[k] += other.cases[k];
            self.failed[k] += other.failed[k];
        }
        self.counterexamples.extend(other.counterexamples);
        self
    }
}

/// Labelled semilattices of order 1 to 3.
fn small_semilattices() -> Vec<FiniteSemigroup> {
    (1..=3)
        .flat_map(|n| enumerate_unchecked(&EnumerationSpec::all(n).commutative()))
        .filter(invariants::is_semilattice)
        .collect()
}

fn all_maps(n: usize, m: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = m.pow(n as u32);
    (0..total).map(move |mut code| {
        (0..n)
            .map(|_| {
                let d = code % m;
                code /= m;
                d
            })
            .collect()
    })
}

fn check_one(s: &FiniteSemigroup, targets: &[FiniteSemigroup]) -> Tally {
    let mut tally = Tally::default();
    let n = s.order();
    let e = invariants::idempotents(s);
    let z = invariants::center(s);
    let iz = invariants::ideal_center(s);
    let ve = invariants::viable_idempotents(s);

    // idempotents of IZ computed inside the subsemigroup IZ itself
    let e_iz = if iz.is_empty() {
        ElementSet::empty(n)
    } else {
        let (sub, inclusion) = kernel::restrict(s, &iz).expect("IZ is a subsemigroup");
        ElementSet::from_indices(
            n,
            invariants::idempotents(&sub)
                .iter()
                .map(|x| inclusion.apply(x)),
        )
    };
    let e_z_iz = e.intersection(&z).intersection(&iz);
    tally.record(
        s,
        SuiteCheck::IdealCenterIdempotents,
        e_iz == e_z_iz && e_iz.is_subset(&ve),
        || format!("E(IZ) = {e_iz:?}, E(Z) ∩ IZ = {e_z_iz:?}, VE = {ve:?}"),
    );

    let reflection = invariants::semilattice_reflection(s);
    tally.record(
        s,
        SuiteCheck::ReflectionInjectiveOnViable,
        reflection.projection.is_injective_on(&ve),
        || {
            format!(
                "projection {:?} identifies two of VE = {ve:?}",
                reflection.projection.image()
            )
        },
    );

    for mask in 0..(1u64 << n) {
        let c = ElementSet::from_mask(n, mask);
        let prime = kernel::is_prime_coideal(s, &c);
        let hom = kernel::characteristic_is_homomorphism(s, &c);
        tally.record(
            s,
            SuiteCheck::PrimeCoidealCharacteristic,
            prime == hom,
            || format!("C = {c:?}: prime coideal {prime}, characteristic homomorphism {hom}"),
        );
    }

    let by_products = invariants::viable_idempotents_by_products(s);
    tally.record(
        s,
        SuiteCheck::ViabilityDefinitionsAgree,
        ve == by_products,
        || format!("coideal-based {ve:?}, product-based {by_products:?}"),
    );

    if s.is_commutative() {
        tally.record(s, SuiteCheck::CommutativeViable, ve == e, || {
            format!("VE = {ve:?}, E = {e:?}")
        });
    }

    let classes = &reflection.congruence;
    let reflection_ok = invariants::is_semilattice(&reflection.reflection);
    tally.record(s, SuiteCheck::ReflectionUniversal, reflection_ok, || {
        "the reflection is not a semilattice".to_string()
    });
    for l in targets {
        for image in all_maps(n, l.order()) {
            let h = SemigroupMap::new(image, l.order());
            if !h.is_homomorphism(s, l) {
                continue;
            }
            let splits = s.elements().find(|&x| {
                s.elements()
                    .any(|y| classes.same(x, y) && h.apply(x) != h.apply(y))
            });
            tally.record(s, SuiteCheck::ReflectionUniversal, splits.is_none(), || {
                format!(
                    "homomorphism {:?} into {:?} separates {} from its reflection class",
                    h.image(),
                    l.rows(),
                    splits.unwrap_or_default()
                )
            });
        }
    }

    if let Some(cover) = polynomials::search_polybounded(s, n, SearchSpace::default()) {
        let outcome = polynomials::polyfinite_from_polybounded(s, &cover);
        let ok = matches!(&outcome, Ok(w) if polynomials::verify_polyfinite(s, w));
        tally.record(
            s,
            SuiteCheck::PolyboundedToPolyfinite,
            ok,
            || match &outcome {
                Ok(w) => format!(
                    "witness d = {}, F = {:?} fails verification",
                    w.degree_bound, w.set
                ),
                Err(err) => format!("cover {cover:?}: {err}"),
            },
        );
    }
    tally
}

/// Runs every [`SuiteCheck`] over all semigroups of orders `1..=spec.order`
/// meeting `spec`.
pub fn run_lemma_suite(spec: &EnumerationSpec) -> Result<SuiteReport, OracleError> {
    spec.check()?;
    let start = Instant::now();
    let targets = small_semilattices();
    let semigroups: Vec<FiniteSemigroup> = (1..=spec.order)
        .flat_map(|order| enumerate_unchecked(&EnumerationSpec { order, ..*spec }))
        .collect();
    let tallies: Vec<Tally> = semigroups
        .par_iter()
        .map(|s| check_one(s, &targets))
        .collect();
    let tally = tallies.into_iter().fold(Tally::default(), Tally::merge);
    let checks = SuiteCheck::ALL
        .iter()
        .map(|&c| {
            let k = c as usize;
            CheckSummary {
                name: c.name(),
                description: c.description(),
                cases: tally.cases[k],
                passed: tally.cases[k] - tally.failed[k],
                failed: tally.failed[k],
            }
        })
        .collect();
    Ok(SuiteReport {
        banner: SUITE_BANNER,
        spec: *spec,
        semigroups_checked: semigroups.len() as u64,
        checks,
        counterexamples: tally.counterexamples,
        wall_time_seconds: start.elapsed().as_secs_f64(),
    })
}
