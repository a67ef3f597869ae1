//! Compositional rules for [`Predicate`]s over [`SymbolicSemigroup`] terms.

use crate::invariants::{self, lcm};
use crate::kernel::FiniteSemigroup;

use super::{BoundProfile, Predicate, SymbolicSemigroup, Truth, Verdict, DEFAULT_EXPANSION_LIMIT};

/// Evaluates predicates over terms.
///
/// With `expand_finite` set, any finite term of at most `expansion_limit`
/// elements is multiplied out and decided on its Cayley table; otherwise
/// only `Table` leaves are decided that way and everything else goes
/// through the constructor rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Engine {
    pub expand_finite: bool,
    pub expansion_limit: usize,
}

impl Default for Engine {
    fn default() -> Self {
        Engine {
            expand_finite: true,
            expansion_limit: DEFAULT_EXPANSION_LIMIT,
        }
    }
}

/// Evaluates one predicate with the default engine.
pub fn eval_predicate(s: &SymbolicSemigroup, p: Predicate) -> Verdict {
    Engine::default().eval(s, p)
}

impl Engine {
    pub fn rules_only() -> Self {
        Engine {
            expand_finite: false,
            ..Engine::default()
        }
    }

    pub fn eval_all(&self, s: &SymbolicSemigroup) -> Vec<(Predicate, Verdict)> {
        Predicate::ALL
            .into_iter()
            .map(|p| (p, self.eval(s, p)))
            .collect()
    }

    pub fn eval(&self, s: &SymbolicSemigroup, p: Predicate) -> Verdict {
        use SymbolicSemigroup::*;
        if let Table { source, semigroup } = s {
            return table_verdict(semigroup, p, "table", &format!("Table({source})"));
        }
        if self.expand_finite {
            if let Some(t) = s.to_finite(self.expansion_limit) {
                return table_verdict(&t, p, "finite-expansion", &s.to_string());
            }
        }
        match s {
            Table { .. } => unreachable!(),
            Cyclic(n) => cyclic(*n, p),
            Monogenic { index, period } => monogenic(*index, *period, p),
            OmegaChain => omega_chain(p),
            NullOmega => null_omega(p),
            Prufer(q) => prufer(*q, p),
            FreeComm(k) => free_comm(*k, p),
            SumOmega(g) => self.sum_omega(g, p),
            Zero(inner) => self.adjoin(inner, p, "zero-adjoin", "an absorbing idempotent"),
            One(inner) => self.adjoin(inner, p, "one-adjoin", "an identity"),
            Product(a, b) => self.product(a, b, p),
        }
    }

    /// Whether the term is a group.
    pub fn is_group(&self, s: &SymbolicSemigroup) -> Verdict {
        use SymbolicSemigroup::*;
        let fixed =
            |value: bool, why: &str| Verdict::new(value.into(), "group-shape", why.to_string());
        match s {
            Table { semigroup, .. } => {
                let e = invariants::idempotents(semigroup);
                let group =
                    e.len() == 1 && invariants::clifford_part(semigroup).len() == semigroup.order();
                fixed(group, "decided on the Cayley table")
            }
            Cyclic(_) | Prufer(_) | SumOmega(_) => fixed(true, "constructor denotes a group"),
            Monogenic { index, .. } => fixed(
                *index == 1,
                "a monogenic semigroup is a group iff its index is 1",
            ),
            OmegaChain | NullOmega | FreeComm(_) => fixed(false, "constructor is not a group"),
            Zero(_) | One(_) => fixed(
                false,
                "an adjoined zero or identity leaves the original elements without inverses",
            ),
            Product(a, b) => {
                let (va, vb) = (self.is_group(a), self.is_group(b));
                Verdict::new(
                    va.value.and(vb.value),
                    "product-group",
                    "a product is a group iff both factors are",
                )
                .with_premises(vec![va, vb])
            }
        }
    }

    /// Whether the term has at least one idempotent.
    pub fn has_idempotents(&self, s: &SymbolicSemigroup) -> Verdict {
        use SymbolicSemigroup::*;
        match s {
            FreeComm(_) => Verdict::new(
                Truth::False,
                "idempotent-free",
                "no nonempty product of generators is idempotent",
            ),
            Product(a, b) => {
                let (va, vb) = (self.has_idempotents(a), self.has_idempotents(b));
                Verdict::new(
                    va.value.and(vb.value),
                    "product-idempotents",
                    "(e,f) is idempotent iff e and f are",
                )
                .with_premises(vec![va, vb])
            }
            Zero(_) | One(_) => Verdict::new(
                Truth::True,
                "adjoined-idempotent",
                "the adjoined element is idempotent",
            ),
            _ => Verdict::new(
                Truth::True,
                "has-idempotent",
                "finite, periodic or group terms contain an idempotent",
            ),
        }
    }

    fn sum_omega(&self, g: &SymbolicSemigroup, p: Predicate) -> Verdict {
        let group_bounded = self.eval(g, Predicate::Bounded);
        let profile = group_bounded.profile;
        let nontrivial = g.finite_order().is_none_or(|n| n > 1);
        let exp = profile.map(BoundProfile::exponent).unwrap_or(0);
        let (value, why) = match p {
            Predicate::Finite if nontrivial => {
                (false, "infinitely many copies of a nontrivial group")
            }
            Predicate::GroupFinite if nontrivial => {
                (false, "the whole semigroup is an infinite subgroup")
            }
            Predicate::Finite | Predicate::GroupFinite => {
                (true, "a direct sum of trivial groups is trivial")
            }
            Predicate::Bounded => (
                true,
                "every element has order dividing the exponent of the summand",
            ),
            _ => (true, "an abelian group of finite exponent"),
        };
        let citation = if p == Predicate::Bounded {
            format!("{why} ({exp})")
        } else {
            why.to_string()
        };
        Verdict::new(value.into(), "sum-omega", citation)
            .with_premises(vec![group_bounded])
            .with_profile(profile)
    }

    fn adjoin(&self, inner: &SymbolicSemigroup, p: Predicate, rule: &str, what: &str) -> Verdict {
        let v = self.eval(inner, p);
        let profile = v.profile;
        Verdict::new(
            v.value,
            rule,
            format!("adjoining {what} preserves and reflects {}", p.adjective()),
        )
        .with_premises(vec![v])
        .with_profile(profile)
    }

    fn product(&self, a: &SymbolicSemigroup, b: &SymbolicSemigroup, p: Predicate) -> Verdict {
        let pa = self.eval(a, p);
        let pb = self.eval(b, p);
        match p {
            Predicate::Finite
            | Predicate::Commutative
            | Predicate::Periodic
            | Predicate::Clifford => conjunction(p, pa, pb),
            Predicate::Bounded => {
                let profile = match (pa.profile, pb.profile) {
                    (Some(x), Some(y)) => Some(BoundProfile {
                        max_index: x.max_index.max(y.max_index),
                        period_lcm: lcm(x.period_lcm, y.period_lcm),
                    }),
                    _ => None,
                };
                conjunction(p, pa, pb).with_profile(profile)
            }
            Predicate::GroupFinite
            | Predicate::GroupBounded
            | Predicate::GroupCommutative
            | Predicate::ECommutative => self.idempotentwise(a, b, p, pa, pb),
            Predicate::Viable => {
                let comm = self.eval(
                    &SymbolicSemigroup::product(a.clone(), b.clone()),
                    Predicate::Commutative,
                );
                if comm.value == Truth::True {
                    return Verdict::new(
                        Truth::True,
                        "commutative-viable",
                        "commutative semigroups are viable",
                    )
                    .with_premises(vec![comm]);
                }
                self.idempotentwise(a, b, p, pa, pb)
            }
            Predicate::ZViable => {
                let comm = self.eval(
                    &SymbolicSemigroup::product(a.clone(), b.clone()),
                    Predicate::Commutative,
                );
                if comm.value == Truth::True {
                    return Verdict::new(
                        Truth::True,
                        "commutative-viable",
                        "commutative semigroups are viable",
                    )
                    .with_premises(vec![comm]);
                }
                let value = match pa.value.and(pb.value) {
                    Truth::True => Truth::True,
                    _ => Truth::Unknown,
                };
                Verdict::new(
                    value,
                    "product-z-viable",
                    "a central idempotent (e,f) is viable when e and f are",
                )
                .with_premises(vec![pa, pb])
            }
            Predicate::CliffordPlusFinite => {
                let cl_a = self.eval(a, Predicate::Clifford);
                let cl_b = self.eval(b, Predicate::Clifford);
                let fin_a = self.eval(a, Predicate::Finite);
                let fin_b = self.eval(b, Predicate::Finite);
                let left = cl_a.value.or(pa.value.and(fin_b.value));
                let right = cl_b.value.or(pb.value.and(fin_a.value));
                Verdict::new(
                    left.and(right),
                    "product-clifford-plus-finite",
                    "the non-Clifford part of A x B is (A \\ H(A)) x B together with A x (B \\ H(B))",
                )
                .with_premises(vec![pa, pb, cl_a, cl_b, fin_a, fin_b])
            }
            Predicate::ChainFinite | Predicate::Nonsingular => {
                self.inherited_by_slices(a, b, p, pa, pb)
            }
        }
    }

    /// Rule for predicates that hold in `A x B` iff they hold at every
    /// pair of idempotents `(e, f)`; vacuous when a factor has none.
    fn idempotentwise(
        &self,
        a: &SymbolicSemigroup,
        b: &SymbolicSemigroup,
        p: Predicate,
        pa: Verdict,
        pb: Verdict,
    ) -> Verdict {
        let ea = self.has_idempotents(a);
        let eb = self.has_idempotents(b);
        let vacuous = (!ea.value).or(!eb.value);
        if vacuous == Truth::True {
            return Verdict::new(
                Truth::True,
                "product-idempotent-free",
                format!("{} holds vacuously without idempotents", p.adjective()),
            )
            .with_premises(vec![ea, eb]);
        }
        Verdict::new(
            vacuous.or(pa.value.and(pb.value)),
            "product-idempotentwise",
            format!(
                "{} of A x B is decided factorwise at each idempotent (e,f)",
                p.adjective()
            ),
        )
        .with_premises(vec![ea, eb, pa, pb])
    }

    /// Chain-finiteness and nonsingularity: true when both factors are
    /// finite or both are groups; false when one factor fails and the other
    /// has an idempotent `f`, since `A x {f}` is then a copy of `A`.
    fn inherited_by_slices(
        &self,
        a: &SymbolicSemigroup,
        b: &SymbolicSemigroup,
        p: Predicate,
        pa: Verdict,
        pb: Verdict,
    ) -> Verdict {
        let fin_a = self.eval(a, Predicate::Finite);
        let fin_b = self.eval(b, Predicate::Finite);
        if fin_a.value.and(fin_b.value) == Truth::True {
            return Verdict::new(
                Truth::True,
                "product-finite",
                "a product of finite semigroups is finite",
            )
            .with_premises(vec![fin_a, fin_b]);
        }
        let ga = self.is_group(a);
        let gb = self.is_group(b);
        if ga.value.and(gb.value) == Truth::True {
            return Verdict::new(
                Truth::True,
                "product-groups",
                format!(
                    "a product of groups is a group, and groups are {}",
                    p.adjective()
                ),
            )
            .with_premises(vec![ga, gb]);
        }
        let ea = self.has_idempotents(a);
        let eb = self.has_idempotents(b);
        let fails_left = pa.value == Truth::False && eb.value == Truth::True;
        let fails_right = pb.value == Truth::False && ea.value == Truth::True;
        if fails_left || fails_right {
            let (bad, idem) = if fails_left { (pa, eb) } else { (pb, ea) };
            return Verdict::new(
                Truth::False,
                "product-slice",
                format!(
                    "A x {{f}} for an idempotent f is a copy of the failing factor, so {} fails",
                    p.adjective()
                ),
            )
            .with_premises(vec![bad, idem]);
        }
        Verdict::unknown(
            "product-open",
            format!("no sound product rule decides {} here", p.adjective()),
        )
        .with_premises(vec![pa, pb])
    }
}

fn conjunction(p: Predicate, pa: Verdict, pb: Verdict) -> Verdict {
    Verdict::new(
        pa.value.and(pb.value),
        "product-conjunction",
        format!("A x B is {} iff both factors are", p.adjective()),
    )
    .with_premises(vec![pa, pb])
}

fn fixed(value: bool, rule: &str, why: impl Into<String>) -> Verdict {
    Verdict::new(value.into(), rule, why)
}

fn bounded(rule: &str, why: &str, profile: BoundProfile) -> Verdict {
    fixed(
        true,
        rule,
        format!("{why} (exponent {})", profile.exponent()),
    )
    .with_profile(Some(profile))
}

fn cyclic(n: u64, p: Predicate) -> Verdict {
    match p {
        Predicate::Bounded => bounded(
            "cyclic-group",
            "x^n is the identity for every x",
            BoundProfile {
                max_index: 1,
                period_lcm: n,
            },
        ),
        _ => fixed(true, "cyclic-group", format!("finite abelian group C({n})")),
    }
}

fn monogenic(index: u64, period: u64, p: Predicate) -> Verdict {
    match p {
        Predicate::Bounded => bounded(
            "monogenic",
            "the idempotent power is reached at a multiple of the period past the index",
            BoundProfile {
                max_index: index,
                period_lcm: period,
            },
        ),
        Predicate::Clifford => fixed(
            index == 1,
            "monogenic",
            "x lies in a subgroup iff the index is 1",
        ),
        _ => fixed(
            true,
            "monogenic",
            format!("finite commutative M({index}, {period})"),
        ),
    }
}

fn omega_chain(p: Predicate) -> Verdict {
    let rule = "omega-chain";
    match p {
        Predicate::Finite => fixed(false, rule, "infinite"),
        Predicate::ChainFinite => fixed(
            false,
            rule,
            "every pair in the infinite set of all elements satisfies xy = min(x,y)",
        ),
        Predicate::Nonsingular => {
            fixed(true, rule, "every element is idempotent, so AA contains A")
        }
        Predicate::Bounded => bounded(
            rule,
            "every element is idempotent",
            BoundProfile {
                max_index: 1,
                period_lcm: 1,
            },
        ),
        _ => fixed(
            true,
            rule,
            "a semilattice: all subgroups trivial, all elements idempotent",
        ),
    }
}

fn null_omega(p: Predicate) -> Verdict {
    let rule = "null-omega";
    match p {
        Predicate::Finite => fixed(false, rule, "infinite"),
        Predicate::Clifford | Predicate::CliffordPlusFinite => fixed(
            false,
            rule,
            "the Clifford part is {0}, leaving infinitely many elements outside",
        ),
        Predicate::Nonsingular => fixed(false, rule, "A = X \\ {0} is infinite with AA = {0}"),
        Predicate::ChainFinite => fixed(
            true,
            rule,
            "xy = 0 lies outside {x,y} whenever x,y are nonzero",
        ),
        Predicate::Bounded => bounded(
            rule,
            "x^2 = 0 for every x",
            BoundProfile {
                max_index: 2,
                period_lcm: 1,
            },
        ),
        _ => fixed(true, rule, "a single idempotent 0 with trivial subgroup"),
    }
}

fn prufer(q: u64, p: Predicate) -> Verdict {
    let rule = "prufer";
    match p {
        Predicate::Finite => fixed(false, rule, "infinite"),
        Predicate::Bounded | Predicate::GroupBounded => fixed(
            false,
            rule,
            format!("contains elements of order {q}^k for every k"),
        ),
        Predicate::GroupFinite => fixed(false, rule, "the whole semigroup is an infinite subgroup"),
        Predicate::Nonsingular => fixed(true, rule, "in a group |AA| >= |A|"),
        Predicate::ChainFinite => fixed(
            true,
            rule,
            "in a group xy in {x,y} forces x or y to be the identity",
        ),
        _ => fixed(true, rule, "an abelian torsion group"),
    }
}

fn free_comm(k: u64, p: Predicate) -> Verdict {
    let rule = "free-commutative";
    match p {
        Predicate::Finite => fixed(false, rule, "infinite"),
        Predicate::Periodic | Predicate::Bounded => {
            fixed(false, rule, "no power of a generator is idempotent")
        }
        Predicate::Clifford | Predicate::CliffordPlusFinite => {
            fixed(false, rule, "no element lies in a subgroup")
        }
        Predicate::ChainFinite => fixed(true, rule, "word lengths add, so xy differs from x and y"),
        Predicate::Nonsingular => fixed(
            true,
            rule,
            "cancellative, so aA is infinite for infinite A and any a in A",
        ),
        _ => fixed(
            true,
            rule,
            format!("holds vacuously: FreeComm({k}) has no idempotents"),
        ),
    }
}

fn table_profile(s: &FiniteSemigroup) -> BoundProfile {
    s.elements().fold(
        BoundProfile {
            max_index: 1,
            period_lcm: 1,
        },
        |acc, x| {
            let d = invariants::monogenic_data(s, x);
            BoundProfile {
                max_index: acc.max_index.max(d.index),
                period_lcm: lcm(acc.period_lcm, d.period),
            }
        },
    )
}

fn table_verdict(s: &FiniteSemigroup, p: Predicate, rule: &str, what: &str) -> Verdict {
    let finite_holds = |why: &str| fixed(true, rule, format!("{what} is finite: {why}"));
    match p {
        Predicate::Finite => fixed(true, rule, format!("{what} has {} elements", s.order())),
        Predicate::ChainFinite => finite_holds("it has no infinite subsets"),
        Predicate::Nonsingular => finite_holds("it has no infinite subsets"),
        Predicate::Periodic => finite_holds("every element has an idempotent power"),
        Predicate::GroupFinite | Predicate::GroupBounded => {
            finite_holds("all subgroups are finite")
        }
        Predicate::CliffordPlusFinite => finite_holds("the non-Clifford part is finite"),
        Predicate::Bounded => {
            let profile = table_profile(s);
            fixed(
                true,
                rule,
                format!(
                    "exponent {} computed on the Cayley table of {what}",
                    profile.exponent()
                ),
            )
            .with_profile(Some(profile))
        }
        Predicate::Commutative => {
            let witness = pairs(s).find(|&(x, y)| s.mul(x, y) != s.mul(y, x));
            decided(
                rule,
                what,
                p,
                witness.map(|(x, y)| describe_pair(s, "xy != yx", x, y)),
            )
        }
        Predicate::Clifford => {
            let h = invariants::clifford_part(s);
            let witness = s.elements().find(|&x| !h.contains(x));
            decided(
                rule,
                what,
                p,
                witness.map(|x| format!("{} lies in no subgroup", s.label(x))),
            )
        }
        Predicate::GroupCommutative => {
            let witness = invariants::idempotents(s).iter().find_map(|e| {
                let h = invariants::maximal_subgroup(s, e).expect("idempotent");
                let hv = h.to_vec();
                hv.iter()
                    .flat_map(|&x| hv.iter().map(move |&y| (x, y)))
                    .find(|&(x, y)| s.mul(x, y) != s.mul(y, x))
            });
            decided(
                rule,
                what,
                p,
                witness.map(|(x, y)| describe_pair(s, "in a subgroup xy != yx", x, y)),
            )
        }
        Predicate::ECommutative => {
            let e = invariants::idempotents(s).to_vec();
            let witness = e
                .iter()
                .flat_map(|&x| e.iter().map(move |&y| (x, y)))
                .find(|&(x, y)| s.mul(x, y) != s.mul(y, x));
            decided(
                rule,
                what,
                p,
                witness.map(|(x, y)| describe_pair(s, "idempotents with xy != yx", x, y)),
            )
        }
        Predicate::Viable => {
            let ve = invariants::viable_idempotents(s);
            let witness = invariants::idempotents(s).iter().find(|&e| !ve.contains(e));
            decided(
                rule,
                what,
                p,
                witness.map(|e| format!("idempotent {} is not viable", s.label(e))),
            )
        }
        Predicate::ZViable => {
            let ve = invariants::viable_idempotents(s);
            let z = invariants::center(s);
            let witness = invariants::idempotents(s)
                .iter()
                .find(|&e| z.contains(e) && !ve.contains(e));
            decided(
                rule,
                what,
                p,
                witness.map(|e| format!("central idempotent {} is not viable", s.label(e))),
            )
        }
    }
}

fn pairs(s: &FiniteSemigroup) -> impl Iterator<Item = (usize, usize)> + '_ {
    s.elements()
        .flat_map(move |x| s.elements().map(move |y| (x, y)))
}

fn describe_pair(s: &FiniteSemigroup, what: &str, x: usize, y: usize) -> String {
    format!("{what} for x = {}, y = {}", s.label(x), s.label(y))
}

fn decided(rule: &str, what: &str, p: Predicate, counterexample: Option<String>) -> Verdict {
    match counterexample {
        None => fixed(
            true,
            rule,
            format!("{what} is {} (checked on the Cayley table)", p.adjective()),
        ),
        Some(w) => fixed(false, rule, format!("{what} is not {}: {w}", p.adjective())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::fixtures;
    use crate::symbolic::parse_dsl;

    fn eval(text: &str, p: Predicate) -> Verdict {
        eval_predicate(&parse_dsl(text).unwrap(), p)
    }

    #[test]
    fn constructor_examples() {
        assert_eq!(
            eval("OmegaChain", Predicate::ChainFinite).value,
            Truth::False
        );
        assert_eq!(eval("Prufer(5)", Predicate::Bounded).value, Truth::False);
        assert_eq!(eval("Prufer(5)", Predicate::Periodic).value, Truth::True);
        let g = eval("Sum(omega, C(2))", Predicate::GroupFinite);
        assert_eq!(g.value, Truth::False);
        assert!(g.citation.contains("whole"));
        let b = eval("Sum(omega, C(2))", Predicate::Bounded);
        assert_eq!((b.value, b.exponent), (Truth::True, Some(2)));
        assert_eq!(
            eval("NullOmega", Predicate::Nonsingular).value,
            Truth::False
        );
        assert_eq!(eval("FreeComm(1)", Predicate::Periodic).value, Truth::False);
    }

    #[test]
    fn bounded_exponents_compose() {
        let b = eval("Sum(omega, C(2)) * Sum(omega, C(3))", Predicate::Bounded);
        assert_eq!(b.exponent, Some(6));
        let b = eval("NullOmega * Sum(omega, C(2))", Predicate::Bounded);
        assert_eq!(b.exponent, Some(2));
        let b = eval("NullOmega * Sum(omega, C(3))", Predicate::Bounded);
        assert_eq!(b.exponent, Some(3));
        let b = eval("Zero(NullOmega) * OmegaChain", Predicate::Bounded);
        assert_eq!(b.exponent, Some(2));
        assert_eq!(eval("Prufer(2) * C(2)", Predicate::Bounded).exponent, None);
    }

    #[test]
    fn product_vacuity_without_idempotents() {
        let v = eval("Prufer(2) * FreeComm(1)", Predicate::GroupFinite);
        assert_eq!(v.value, Truth::True);
        assert_eq!(v.rule, "product-idempotent-free");
        assert_eq!(
            eval("Prufer(2) * C(3)", Predicate::GroupFinite).value,
            Truth::False
        );
    }

    #[test]
    fn product_slices() {
        assert_eq!(
            eval("OmegaChain * C(2)", Predicate::ChainFinite).value,
            Truth::False
        );
        assert_eq!(
            eval("OmegaChain * FreeComm(1)", Predicate::ChainFinite).value,
            Truth::Unknown
        );
        assert_eq!(
            eval("Prufer(3) * Sum(omega, C(2))", Predicate::ChainFinite).value,
            Truth::True
        );
        assert_eq!(
            eval("NullOmega * C(2)", Predicate::Nonsingular).value,
            Truth::False
        );
        assert_eq!(
            eval("FreeComm(1) * NullOmega", Predicate::ChainFinite).value,
            Truth::Unknown
        );
    }

    #[test]
    fn clifford_plus_finite_products() {
        assert_eq!(
            eval(
                "Sum(omega, C(2)) * OmegaChain",
                Predicate::CliffordPlusFinite
            )
            .value,
            Truth::True
        );
        assert_eq!(
            eval("M(2,1) * C(3)", Predicate::CliffordPlusFinite).value,
            Truth::True
        );
        assert_eq!(
            eval("M(2,1) * OmegaChain", Predicate::CliffordPlusFinite).value,
            Truth::False
        );
        assert_eq!(
            eval("NullOmega * C(2)", Predicate::CliffordPlusFinite).value,
            Truth::False
        );
    }

    #[test]
    fn table_leaves_are_decided() {
        let lz = SymbolicSemigroup::table("lz2", fixtures::lz2());
        let e = Engine::rules_only();
        for p in Predicate::ALL {
            assert!(e.eval(&lz, p).value.is_known(), "{p}");
        }
        assert_eq!(e.eval(&lz, Predicate::ECommutative).value, Truth::False);
        assert_eq!(e.eval(&lz, Predicate::Commutative).value, Truth::False);
        assert_eq!(e.is_group(&lz).value, Truth::False);
        let z3 = SymbolicSemigroup::table("z3", fixtures::z3());
        assert_eq!(e.is_group(&z3).value, Truth::True);
    }

    #[test]
    fn expansion_toggle_agrees_on_finite_terms() {
        let terms = [
            "C(4)",
            "M(3,2)",
            "Zero(C(2)) * One(M(2,1))",
            "Sum(omega, C(1)) * C(3)",
            "One(One(C(2)))",
        ];
        for t in terms {
            let s = parse_dsl(t).unwrap();
            for p in Predicate::ALL {
                let a = Engine::default().eval(&s, p);
                let b = Engine::rules_only().eval(&s, p);
                assert!(a.value.is_known(), "{t} {p}");
                assert!(!a.value.contradicts(b.value), "{t} {p}: {a:?} vs {b:?}");
                if p == Predicate::Bounded {
                    assert_eq!(a.exponent, b.exponent, "{t}");
                }
            }
        }
    }
}
