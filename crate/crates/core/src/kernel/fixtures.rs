//! Small named semigroups used throughout the tests and examples.

use super::FiniteSemigroup;

fn named(s: FiniteSemigroup, names: &[&str]) -> FiniteSemigroup {
    s.with_names(names.iter().map(|n| n.to_string()).collect())
        .expect("fixture names match order")
}

/// The one-element semigroup.
pub fn trivial() -> FiniteSemigroup {
    FiniteSemigroup::from_flat_trusted(1, vec![0])
}

/// `{0, 1}` under `min`.
pub fn s2() -> FiniteSemigroup {
    named(chain(2), &["0", "1"])
}

/// `{0, .., n-1}` under `min`.
pub fn chain(n: usize) -> FiniteSemigroup {
    assert!(n >= 1);
    FiniteSemigroup::from_flat_trusted(n, (0..n * n).map(|k| (k / n).min(k % n)).collect())
}

/// Cyclic group `Z/n`; element `k` is `a^k`, so `0` is the identity.
pub fn cyclic_group(n: usize) -> FiniteSemigroup {
    assert!(n >= 1);
    let s =
        FiniteSemigroup::from_flat_trusted(n, (0..n * n).map(|k| (k / n + k % n) % n).collect());
    let names: Vec<String> = (0..n)
        .map(|k| match k {
            0 => "e".to_string(),
            1 => "a".to_string(),
            _ => format!("a^{k}"),
        })
        .collect();
    s.with_names(names).expect("names match order")
}

pub fn z2() -> FiniteSemigroup {
    cyclic_group(2)
}

pub fn z3() -> FiniteSemigroup {
    cyclic_group(3)
}

/// Left-zero band on `n` elements: `xy = x`.
pub fn left_zero(n: usize) -> FiniteSemigroup {
    assert!(n >= 1);
    FiniteSemigroup::from_flat_trusted(n, (0..n * n).map(|k| k / n).collect())
}

/// Left-zero band `{x, y}`.
pub fn lz2() -> FiniteSemigroup {
    named(left_zero(2), &["x", "y"])
}

/// Null semigroup on `n` elements: every product is `0`.
pub fn null_semigroup(n: usize) -> FiniteSemigroup {
    assert!(n >= 1);
    FiniteSemigroup::from_flat_trusted(n, vec![0; n * n])
}

/// Null semigroup `{0, a}`.
pub fn n2() -> FiniteSemigroup {
    named(null_semigroup(2), &["0", "a"])
}

/// Monogenic semigroup `⟨x | x^(index+period) = x^index⟩`; element `k`
/// is `x^(k+1)`.
pub fn monogenic(index: usize, period: usize) -> FiniteSemigroup {
    assert!(index >= 1 && period >= 1);
    let n = index + period - 1;
    let reduce = |m: usize| {
        if m < index + period {
            m
        } else {
            index + (m - index) % period
        }
    };
    let s = FiniteSemigroup::from_flat_trusted(
        n,
        (0..n * n)
            .map(|k| reduce(k / n + 1 + k % n + 1) - 1)
            .collect(),
    );
    let names = (1..=n)
        .map(|k| {
            if k == 1 {
                "x".to_string()
            } else {
                format!("x^{k}")
            }
        })
        .collect();
    s.with_names(names).expect("names match order")
}

/// `{x, x²}` with `x³ = x²`.
pub fn m21() -> FiniteSemigroup {
    monogenic(2, 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_associative() {
        let all = [
            trivial(),
            s2(),
            chain(5),
            z2(),
            z3(),
            cyclic_group(6),
            lz2(),
            left_zero(3),
            n2(),
            null_semigroup(4),
            m21(),
            monogenic(3, 2),
            monogenic(1, 4),
        ];
        for s in all {
            assert!(s.is_associative(), "{s}");
        }
    }

    #[test]
    fn m21_relations() {
        let m = m21();
        assert_eq!(m.mul(0, 0), 1);
        assert_eq!(m.mul(1, 0), 1);
        assert_eq!(m.mul(1, 1), 1);
    }

    #[test]
    fn monogenic_one_period_is_cyclic() {
        let m = monogenic(1, 3);
        // x^3 is the identity
        for x in m.elements() {
            assert_eq!(m.mul(2, x), x);
        }
    }
}
