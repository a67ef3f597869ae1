//! Finite semigroups given by Cayley tables, element subsets, congruences,
//! quotients and the small constructions (extensions, products) built on them.

mod congruence;
pub mod fixtures;
pub mod io;
mod set;
mod union_find;

use std::fmt;

use thiserror::Error;

pub use congruence::{generated_congruence, quotient, rees_quotient, Congruence};
pub use set::ElementSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("a semigroup must have at least one element")]
    EmptyOrder,
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedTable {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("table has {found} rows, expected {expected}")]
    RowCount { expected: usize, found: usize },
    #[error("entry ({i},{j}) = {value} is outside 0..{order}")]
    OutOfRangeEntry {
        i: usize,
        j: usize,
        value: usize,
        order: usize,
    },
    #[error("table is not associative: ({i}*{j})*{k} != {i}*({j}*{k})")]
    NonAssociative { i: usize, j: usize, k: usize },
    #[error("{found} element names given for order {expected}")]
    NameCount { expected: usize, found: usize },
    #[error("element {element} is outside 0..{order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("the given set is not an ideal")]
    NotAnIdeal,
    #[error("the given set is not a subsemigroup")]
    NotASubsemigroup,
    #[error("partition is not a congruence: {x}~{y} but their translates by {a} are separated")]
    IncompatiblePartition { x: usize, y: usize, a: usize },
    #[error("partition has {found} entries, expected {expected}")]
    PartitionSize { expected: usize, found: usize },
}

/// A finite semigroup stored as a dense row-major Cayley table.
///
/// Elements are the indices `0..order`; names are display metadata only.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<usize>,
    names: Option<Vec<String>>,
}

impl FiniteSemigroup {
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn flat_table(&self) -> &[usize] {
        &self.table
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Label of an element: its name if the table carries names, else its index.
    pub fn label(&self, x: usize) -> String {
        match &self.names {
            Some(names) => names[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self, KernelError> {
        if names.len() != self.order {
            return Err(KernelError::NameCount {
                expected: self.order,
                found: names.len(),
            });
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn without_names(mut self) -> Self {
        self.names = None;
        self
    }

    /// Builds and validates a semigroup from a multiplication function.
    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self, KernelError> {
        if order == 0 {
            return Err(KernelError::EmptyOrder);
        }
        let mut table = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                table.push(f(i, j));
            }
        }
        Self::from_flat(order, table)
    }

    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self, KernelError> {
        validate_table(rows.len(), rows)
    }

    pub(crate) fn from_flat(order: usize, table: Vec<usize>) -> Result<Self, KernelError> {
        if order == 0 {
            return Err(KernelError::EmptyOrder);
        }
        debug_assert_eq!(table.len(), order * order);
        for (idx, &value) in table.iter().enumerate() {
            if value >= order {
                return Err(KernelError::OutOfRangeEntry {
                    i: idx / order,
                    j: idx % order,
                    value,
                    order,
                });
            }
        }
        let s = FiniteSemigroup {
            order,
            table,
            names: None,
        };
        if let Some((i, j, k)) = s.first_nonassociative_triple() {
            return Err(KernelError::NonAssociative { i, j, k });
        }
        Ok(s)
    }

    /// Skips the associativity check; only for tables built by closed-form
    /// constructions that are associative by construction.
    pub(crate) fn from_flat_trusted(order: usize, table: Vec<usize>) -> Self {
        debug_assert!(order > 0 && table.len() == order * order);
        let s = FiniteSemigroup {
            order,
            table,
            names: None,
        };
        // cubic, so debug builds only spot-check small tables
        debug_assert!(order > 32 || s.first_nonassociative_triple().is_none());
        s
    }

    fn first_nonassociative_triple(&self) -> Option<(usize, usize, usize)> {
        for i in self.elements() {
            for j in self.elements() {
                let ij = self.mul(i, j);
                for k in self.elements() {
                    if self.mul(ij, k) != self.mul(i, self.mul(j, k)) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.first_nonassociative_triple().is_none()
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// `x^n` for `n >= 1`.
    pub fn pow(&self, x: usize, n: u64) -> usize {
        assert!(n >= 1, "semigroup powers start at 1");
        let mut acc = x;
        for _ in 1..n {
            acc = self.mul(acc, x);
        }
        acc
    }

    pub fn check_element(&self, x: usize) -> Result<(), KernelError> {
        if x < self.order {
            Ok(())
        } else {
            Err(KernelError::ElementOutOfRange {
                element: x,
                order: self.order,
            })
        }
    }
}

impl fmt::Display for FiniteSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .elements()
            .map(|x| self.label(x).chars().count())
            .max()
            .unwrap_or(1);
        write!(f, "{:>width$} |", "*")?;
        for j in self.elements() {
            write!(f, " {:>width$}", self.label(j))?;
        }
        writeln!(f)?;
        for i in self.elements() {
            write!(f, "{:>width$} |", self.label(i))?;
            for j in self.elements() {
                write!(f, " {:>width$}", self.label(self.mul(i, j)))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Checks shape, range and associativity of an `order × order` table.
pub fn validate_table(
    order: usize,
    table: Vec<Vec<usize>>,
) -> Result<FiniteSemigroup, KernelError> {
    if order == 0 {
        return Err(KernelError::EmptyOrder);
    }
    if table.len() != order {
        return Err(KernelError::RowCount {
            expected: order,
            found: table.len(),
        });
    }
    let mut flat = Vec::with_capacity(order * order);
    for (row, entries) in table.into_iter().enumerate() {
        if entries.len() != order {
            return Err(KernelError::RaggedTable {
                row,
                expected: order,
                found: entries.len(),
            });
        }
        flat.extend(entries);
    }
    FiniteSemigroup::from_flat(order, flat)
}

/// A map between two finite semigroups, one target index per source element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupMap {
    image: Vec<usize>,
    target_order: usize,
}

impl SemigroupMap {
    pub fn new(image: Vec<usize>, target_order: usize) -> Self {
        debug_assert!(image.iter().all(|&y| y < target_order));
        SemigroupMap {
            image,
            target_order,
        }
    }

    pub fn identity(order: usize) -> Self {
        SemigroupMap::new((0..order).collect(), order)
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn source_order(&self) -> usize {
        self.image.len()
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    pub fn is_homomorphism(&self, source: &FiniteSemigroup, target: &FiniteSemigroup) -> bool {
        source.order() == self.image.len()
            && target.order() == self.target_order
            && source.elements().all(|x| {
                source.elements().all(|y| {
                    self.apply(source.mul(x, y)) == target.mul(self.apply(x), self.apply(y))
                })
            })
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target_order];
        for &y in &self.image {
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// Injectivity of the restriction to `set`.
    pub fn is_injective_on(&self, set: &ElementSet) -> bool {
        let mut seen = vec![false; self.target_order];
        for x in set.iter() {
            let y = self.apply(x);
            if seen[y] {
                return false;
            }
            seen[y] = true;
        }
        true
    }
}

pub fn is_subsemigroup(s: &FiniteSemigroup, a: &ElementSet) -> bool {
    a.iter().all(|x| a.iter().all(|y| a.contains(s.mul(x, y))))
}

/// `A` is an ideal iff `AS ∪ SA ⊆ A`; the empty set qualifies.
pub fn is_ideal(s: &FiniteSemigroup, a: &ElementSet) -> bool {
    a.iter().all(|x| {
        s.elements()
            .all(|y| a.contains(s.mul(x, y)) && a.contains(s.mul(y, x)))
    })
}

pub fn is_coideal(s: &FiniteSemigroup, a: &ElementSet) -> bool {
    is_ideal(s, &a.complement())
}

/// A subsemigroup whose complement is an ideal.
pub fn is_prime_coideal(s: &FiniteSemigroup, c: &ElementSet) -> bool {
    is_subsemigroup(s, c) && is_coideal(s, c)
}

/// Whether the indicator function of `c` is a homomorphism onto the
/// two-element min-semilattice `{0, 1}`.
pub fn characteristic_is_homomorphism(s: &FiniteSemigroup, c: &ElementSet) -> bool {
    let chi = |x: usize| u8::from(c.contains(x));
    s.elements()
        .all(|x| s.elements().all(|y| chi(s.mul(x, y)) == chi(x).min(chi(y))))
}

fn fresh_name(names: &[String], base: &str) -> String {
    let mut candidate = base.to_string();
    while names.contains(&candidate) {
        candidate.push('\'');
    }
    candidate
}

fn extend_names(s: &FiniteSemigroup, base: &str) -> Option<Vec<String>> {
    s.names().map(|names| {
        let mut out = names.to_vec();
        out.push(fresh_name(names, base));
        out
    })
}

/// `S⁰`: adjoins a new absorbing element with index `order`.
pub fn zero_extension(s: &FiniteSemigroup) -> FiniteSemigroup {
    let n = s.order();
    let zero = n;
    let mut table = Vec::with_capacity((n + 1) * (n + 1));
    for i in 0..=n {
        for j in 0..=n {
            table.push(if i == zero || j == zero {
                zero
            } else {
                s.mul(i, j)
            });
        }
    }
    FiniteSemigroup {
        names: extend_names(s, "0"),
        ..FiniteSemigroup::from_flat_trusted(n + 1, table)
    }
}

/// `S¹`: adjoins a new two-sided unit with index `order`.
pub fn one_extension(s: &FiniteSemigroup) -> FiniteSemigroup {
    let n = s.order();
    let one = n;
    let mut table = Vec::with_capacity((n + 1) * (n + 1));
    for i in 0..=n {
        for j in 0..=n {
            table.push(match (i == one, j == one) {
                (true, _) => j,
                (false, true) => i,
                _ => s.mul(i, j),
            });
        }
    }
    FiniteSemigroup {
        names: extend_names(s, "1"),
        ..FiniteSemigroup::from_flat_trusted(n + 1, table)
    }
}

/// Componentwise product; the pair `(a, b)` has index `a * |T| + b`.
pub fn direct_product(s: &FiniteSemigroup, t: &FiniteSemigroup) -> FiniteSemigroup {
    let (n, m) = (s.order(), t.order());
    let order = n * m;
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        let (a, b) = (x / m, x % m);
        for y in 0..order {
            let (c, d) = (y / m, y % m);
            table.push(s.mul(a, c) * m + t.mul(b, d));
        }
    }
    let names = (s.names.is_some() || t.names.is_some()).then(|| {
        (0..order)
            .map(|x| format!("({},{})", s.label(x / m), t.label(x % m)))
            .collect()
    });
    FiniteSemigroup {
        names,
        ..FiniteSemigroup::from_flat_trusted(order, table)
    }
}

/// The subsemigroup on `a`, re-indexed in increasing order of the original
/// indices, together with its inclusion map.
pub fn restrict(
    s: &FiniteSemigroup,
    a: &ElementSet,
) -> Result<(FiniteSemigroup, SemigroupMap), KernelError> {
    if a.is_empty() {
        return Err(KernelError::EmptyOrder);
    }
    if !is_subsemigroup(s, a) {
        return Err(KernelError::NotASubsemigroup);
    }
    let members = a.to_vec();
    let mut position = vec![usize::MAX; s.order()];
    for (k, &x) in members.iter().enumerate() {
        position[x] = k;
    }
    let k = members.len();
    let mut table = Vec::with_capacity(k * k);
    for &x in &members {
        for &y in &members {
            table.push(position[s.mul(x, y)]);
        }
    }
    let names = s
        .names()
        .map(|names| members.iter().map(|&x| names[x].clone()).collect());
    let sub = FiniteSemigroup {
        names,
        ..FiniteSemigroup::from_flat_trusted(k, table)
    };
    Ok((sub, SemigroupMap::new(members, s.order())))
}
