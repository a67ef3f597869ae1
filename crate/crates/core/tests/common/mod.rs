//! Brute-force reference computations shared by the integration tests.
//! Everything here works straight from definitions on the flat table and
//! deliberately avoids the library's own algorithms.

#![allow(dead_code)]

use std::sync::OnceLock;

use proptest::prelude::*;
use semiclose::kernel::{direct_product, fixtures, one_extension, zero_extension};
use semiclose::oracle::{self, EnumerationSpec};
use semiclose::{FiniteSemigroup, SymbolicSemigroup};

/// Labelled semigroups of order at most 3 and order-4 isomorphism classes.
pub fn small_corpus() -> &'static [FiniteSemigroup] {
    static CORPUS: OnceLock<Vec<FiniteSemigroup>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut all = Vec::new();
        for n in 1..=3 {
            all.extend(oracle::enumerate(&EnumerationSpec::all(n)).unwrap());
        }
        all.extend(oracle::enumerate(&EnumerationSpec::all(4).up_to_iso()).unwrap());
        all
    })
}

pub fn arb_small() -> impl Strategy<Value = FiniteSemigroup> {
    (0..small_corpus().len()).prop_map(|i| small_corpus()[i].clone())
}

/// Small semigroups, their 0/1-extensions and pairwise products (order ≤ 16).
pub fn arb_semigroup() -> impl Strategy<Value = FiniteSemigroup> {
    prop_oneof![
        3 => arb_small(),
        1 => arb_small().prop_map(|s| zero_extension(&s)),
        1 => arb_small().prop_map(|s| one_extension(&s)),
        2 => (arb_small(), arb_small())
            .prop_filter("order at most 16", |(a, b)| a.order() * b.order() <= 16)
            .prop_map(|(a, b)| direct_product(&a, &b)),
    ]
}

pub fn arb_commutative() -> impl Strategy<Value = FiniteSemigroup> {
    arb_semigroup().prop_filter("commutative", |s| s.is_commutative())
}

pub fn mul(s: &FiniteSemigroup, a: usize, b: usize) -> usize {
    s.flat_table()[a * s.order() + b]
}

pub fn naive_associative(n: usize, t: &[usize]) -> bool {
    (0..n)
        .all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]])))
}

/// Every associative table of order `n`, found by trying all `n^(n²)` tables.
pub fn naive_tables(n: usize, commutative: bool) -> Vec<Vec<usize>> {
    let cells = n * n;
    let total = n.pow(cells as u32);
    (0..total)
        .map(|mut code| {
            (0..cells)
                .map(|_| {
                    let d = code % n;
                    code /= n;
                    d
                })
                .collect::<Vec<_>>()
        })
        .filter(|t| naive_associative(n, t))
        .filter(|t| !commutative || (0..n).all(|a| (0..n).all(|b| t[a * n + b] == t[b * n + a])))
        .collect()
}

pub fn is_idem(s: &FiniteSemigroup, x: usize) -> bool {
    mul(s, x, x) == x
}

/// `H_e` straight from the definition: elements of `eSe` with an inverse relative to `e`.
pub fn group_of(s: &FiniteSemigroup, e: usize) -> Vec<usize> {
    let n = s.order();
    (0..n)
        .filter(|&x| mul(s, e, x) == x && mul(s, x, e) == x)
        .filter(|&x| {
            (0..n).any(|y| {
                mul(s, e, y) == y && mul(s, y, e) == y && mul(s, x, y) == e && mul(s, y, x) == e
            })
        })
        .collect()
}

pub fn inverse_in(s: &FiniteSemigroup, e: usize, x: usize) -> usize {
    (0..s.order())
        .find(|&y| mul(s, e, y) == y && mul(s, y, e) == y && mul(s, x, y) == e && mul(s, y, x) == e)
        .expect("x lies in H_e")
}

pub fn is_central(s: &FiniteSemigroup, z: usize) -> bool {
    (0..s.order()).all(|x| mul(s, z, x) == mul(s, x, z))
}

pub fn power(s: &FiniteSemigroup, x: usize, n: u64) -> usize {
    (1..n).fold(x, |acc, _| mul(s, acc, x))
}

/// `{x : xe = ex ∈ H_e}`.
pub fn local_coideal(s: &FiniteSemigroup, e: usize) -> Vec<usize> {
    let h = group_of(s, e);
    (0..s.order())
        .filter(|&x| mul(s, x, e) == mul(s, e, x) && h.contains(&mul(s, x, e)))
        .collect()
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

/// Least `n ≥ 1` with `x^n` idempotent for every `x`.
pub fn brute_exponent(s: &FiniteSemigroup) -> u64 {
    (1..)
        .find(|&n| (0..s.order()).all(|x| is_idem(s, power(s, x, n))))
        .expect("finite semigroups are bounded")
}

/// Number of automorphisms, by trying all relabellings.
pub fn automorphisms(s: &FiniteSemigroup) -> usize {
    let n = s.order();
    semiclose::oracle::permutations(n)
        .into_iter()
        .filter(|p| (0..n).all(|a| (0..n).all(|b| p[mul(s, a, b)] == mul(s, p[a], p[b]))))
        .count()
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// A finite subsemigroup of `term` growing with `level`: `n`-chains,
/// `n`-element null semigroups, `Z/p^n`, `G^n`, with adjunctions and
/// products taken factorwise. `None` for terms without finite subsemigroups
/// of this shape or past `max_order` elements.
pub fn truncation(
    term: &SymbolicSemigroup,
    level: u32,
    max_order: usize,
) -> Option<FiniteSemigroup> {
    use SymbolicSemigroup::*;
    let t = match term {
        Table { semigroup, .. } => (**semigroup).clone(),
        Cyclic(n) => fixtures::cyclic_group(*n as usize),
        Monogenic { index, period } => fixtures::monogenic(*index as usize, *period as usize),
        OmegaChain => fixtures::chain(level as usize + 1),
        NullOmega => fixtures::null_semigroup(level as usize + 1),
        Prufer(p) => {
            let order = (*p as usize).checked_pow(level)?;
            if order > max_order {
                return None;
            }
            fixtures::cyclic_group(order)
        }
        FreeComm(_) => return None,
        SumOmega(g) => {
            let g = truncation(g, level, max_order)?;
            let mut acc = g.clone();
            for _ in 1..level {
                if acc.order() * g.order() > max_order {
                    return None;
                }
                acc = direct_product(&acc, &g);
            }
            acc
        }
        Zero(a) => zero_extension(&truncation(a, level, max_order)?),
        One(a) => one_extension(&truncation(a, level, max_order)?),
        Product(a, b) => {
            let (x, y) = (
                truncation(a, level, max_order)?,
                truncation(b, level, max_order)?,
            );
            if x.order() * y.order() > max_order {
                return None;
            }
            direct_product(&x, &y)
        }
    };
    (t.order() <= max_order).then_some(t)
}

/// Constructor terms exercising every rule: atoms, adjunctions of atoms,
/// and binary products of atoms.
pub fn term_corpus() -> Vec<String> {
    let atoms = [
        "OmegaChain",
        "NullOmega",
        "Prufer(2)",
        "Prufer(3)",
        "FreeComm(1)",
        "FreeComm(2)",
        "Sum(omega, C(2))",
        "Sum(omega, C(3))",
        "Sum(omega, C(2) * C(2))",
        "Sum(omega, C(1))",
        "C(2)",
        "C(3)",
        "M(2,1)",
        "M(3,2)",
    ];
    let mut out: Vec<String> = atoms.iter().map(|a| a.to_string()).collect();
    for a in atoms {
        out.push(format!("Zero({a})"));
        out.push(format!("One({a})"));
    }
    for a in atoms {
        for b in atoms {
            out.push(format!("{a} * {b}"));
        }
    }
    for a in ["OmegaChain", "NullOmega", "Prufer(2)", "Sum(omega, C(2))"] {
        out.push(format!("Zero({a} * M(2,1))"));
        out.push(format!("One(C(2) * {a})"));
        out.push(format!("{a} * Zero(C(2)) * One(NullOmega)"));
    }
    out
}
