use std::collections::VecDeque;

use super::union_find::UnionFind;
use super::{is_ideal, ElementSet, FiniteSemigroup, KernelError, SemigroupMap};

/// A partition of a semigroup compatible with multiplication.
///
/// Class ids are `0..k` in order of first occurrence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Congruence {
    class_of: Vec<usize>,
    classes: usize,
}

impl Congruence {
    /// Validates an arbitrary labelling; ids are renumbered canonically.
    pub fn new(s: &FiniteSemigroup, labels: &[usize]) -> Result<Self, KernelError> {
        if labels.len() != s.order() {
            return Err(KernelError::PartitionSize {
                expected: s.order(),
                found: labels.len(),
            });
        }
        let c = Self::canonical(labels);
        c.check_compatible(s)?;
        Ok(c)
    }

    pub fn identity(order: usize) -> Self {
        Congruence {
            class_of: (0..order).collect(),
            classes: order,
        }
    }

    pub fn full(order: usize) -> Self {
        Congruence {
            class_of: vec![0; order],
            classes: usize::from(order > 0),
        }
    }

    fn canonical(labels: &[usize]) -> Self {
        let mut renumber = std::collections::HashMap::new();
        let class_of = labels
            .iter()
            .map(|&l| {
                let next = renumber.len();
                *renumber.entry(l).or_insert(next)
            })
            .collect();
        Congruence {
            class_of,
            classes: renumber.len(),
        }
    }

    fn check_compatible(&self, s: &FiniteSemigroup) -> Result<(), KernelError> {
        // Compatibility with left and right translations by every element
        // implies two-sided compatibility; comparing each element with its
        // class representative suffices.
        let reps = self.representatives();
        for x in s.elements() {
            let r = reps[self.class_of[x]];
            if r == x {
                continue;
            }
            for a in s.elements() {
                if !self.same(s.mul(a, x), s.mul(a, r)) || !self.same(s.mul(x, a), s.mul(r, a)) {
                    return Err(KernelError::IncompatiblePartition { x, y: r, a });
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn labels(&self) -> &[usize] {
        &self.class_of
    }

    pub fn num_classes(&self) -> usize {
        self.classes
    }

    pub fn same(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    /// Smallest element of each class, indexed by class id.
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps = vec![usize::MAX; self.classes];
        for (x, &c) in self.class_of.iter().enumerate() {
            if reps[c] == usize::MAX {
                reps[c] = x;
            }
        }
        reps
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.classes];
        for (x, &c) in self.class_of.iter().enumerate() {
            out[c].push(x);
        }
        out
    }
}

/// Smallest congruence containing `pairs`.
///
/// Every merge performed by the union-find is queued; popping `(x, y)` merges
/// its left and right translates `(ax, ay)` and `(xa, ya)`. The queue drains
/// after at most `|S|` successful merges.
pub fn generated_congruence(
    s: &FiniteSemigroup,
    pairs: impl IntoIterator<Item = (usize, usize)>,
) -> Result<Congruence, KernelError> {
    let mut uf = UnionFind::new(s.order());
    let mut queue = VecDeque::new();
    for (x, y) in pairs {
        s.check_element(x)?;
        s.check_element(y)?;
        if uf.union(x, y) {
            queue.push_back((x, y));
        }
    }
    while let Some((x, y)) = queue.pop_front() {
        for a in s.elements() {
            for (u, v) in [(s.mul(a, x), s.mul(a, y)), (s.mul(x, a), s.mul(y, a))] {
                if uf.union(u, v) {
                    queue.push_back((u, v));
                }
            }
        }
    }
    let class_of = uf.canonical_classes();
    let classes = class_of.iter().max().map_or(0, |m| m + 1);
    Ok(Congruence { class_of, classes })
}

/// The quotient semigroup on congruence classes and its projection.
pub fn quotient(
    s: &FiniteSemigroup,
    congruence: &Congruence,
) -> Result<(FiniteSemigroup, SemigroupMap), KernelError> {
    if congruence.class_of.len() != s.order() {
        return Err(KernelError::PartitionSize {
            expected: s.order(),
            found: congruence.class_of.len(),
        });
    }
    congruence.check_compatible(s)?;
    let reps = congruence.representatives();
    let k = congruence.num_classes();
    let mut table = Vec::with_capacity(k * k);
    for &x in &reps {
        for &y in &reps {
            table.push(congruence.class_of(s.mul(x, y)));
        }
    }
    let names = s.names().map(|_| {
        congruence
            .classes()
            .iter()
            .map(|members| {
                if members.len() == 1 {
                    s.label(members[0])
                } else {
                    let labels: Vec<_> = members.iter().map(|&x| s.label(x)).collect();
                    format!("[{}]", labels.join(","))
                }
            })
            .collect()
    });
    let q = FiniteSemigroup {
        names,
        ..FiniteSemigroup::from_flat_trusted(k, table)
    };
    Ok((q, SemigroupMap::new(congruence.class_of.clone(), k)))
}

/// `S/I`: collapses a nonempty ideal to a single zero; `S/∅` is `S` itself.
pub fn rees_quotient(
    s: &FiniteSemigroup,
    ideal: &ElementSet,
) -> Result<(FiniteSemigroup, SemigroupMap), KernelError> {
    if ideal.order() != s.order() || !is_ideal(s, ideal) {
        return Err(KernelError::NotAnIdeal);
    }
    let Some(first) = ideal.iter().next() else {
        return Ok((s.clone(), SemigroupMap::identity(s.order())));
    };
    let labels: Vec<usize> = s
        .elements()
        .map(|x| if ideal.contains(x) { first } else { x })
        .collect();
    let congruence = Congruence::canonical(&labels);
    quotient(s, &congruence)
}
