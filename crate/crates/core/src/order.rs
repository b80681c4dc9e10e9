//! Partially ordered monoids: the value carriers for every distance in this
//! crate.
//!
//! A carrier bundles a partial-order predicate, a smallest element θ, an
//! associative addition that respects the order, and an optional supremum.
//! The pieces are closures rather than trait impls so one carrier type can
//! host many structures — the built-in non-negative reals, their
//! componentwise products, and deliberately broken negative controls that
//! the axiom suites must catch.
//!
//! Incomparability is first-class: `leq(m,n)` and `leq(n,m)` may both be
//! false. Order comparisons are exact — no epsilon anywhere. Tolerances
//! belong to quadrature, not to order axioms.

use std::fmt::Debug;
use std::sync::Arc;

use crate::report::{witness_tuple, AxiomReport, LawScan, Witness};
use crate::sample::{for_each_pair, for_each_triple, Sample};

/// The pair had no least upper bound in this carrier. Elements are kept in
/// rendered form so the error is printable for any carrier type.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("no supremum of {left} and {right} in this carrier")]
pub struct NoSupremum {
    pub left: String,
    pub right: String,
}

type Pred<M> = Arc<dyn Fn(&M, &M) -> bool + Send + Sync>;
type BinOp<M> = Arc<dyn Fn(&M, &M) -> M + Send + Sync>;
type PartialBinOp<M> = Arc<dyn Fn(&M, &M) -> Option<M> + Send + Sync>;

/// A partially ordered monoid over carrier `M`.
pub struct OrderedMonoid<M> {
    leq: Pred<M>,
    plus: BinOp<M>,
    theta: M,
    sup: Option<PartialBinOp<M>>,
}

impl<M: Clone> Clone for OrderedMonoid<M> {
    fn clone(&self) -> Self {
        OrderedMonoid {
            leq: Arc::clone(&self.leq),
            plus: Arc::clone(&self.plus),
            theta: self.theta.clone(),
            sup: self.sup.as_ref().map(Arc::clone),
        }
    }
}

impl<M: Clone + Debug> OrderedMonoid<M> {
    pub fn new(
        theta: M,
        leq: impl Fn(&M, &M) -> bool + Send + Sync + 'static,
        plus: impl Fn(&M, &M) -> M + Send + Sync + 'static,
    ) -> Self {
        OrderedMonoid { leq: Arc::new(leq), plus: Arc::new(plus), theta, sup: None }
    }

    /// Attach a supremum. Returning `None` from the closure means the pair
    /// has no least upper bound; a carrier built without any closure treats
    /// every pair that way.
    pub fn with_sup(mut self, sup: impl Fn(&M, &M) -> Option<M> + Send + Sync + 'static) -> Self {
        self.sup = Some(Arc::new(sup));
        self
    }

    pub fn leq(&self, a: &M, b: &M) -> bool {
        (self.leq)(a, b)
    }

    /// Order-equality: ≤ both ways. Under antisymmetry this coincides with
    /// carrier equality; negative controls may break that, which is exactly
    /// what the poset suite looks for.
    pub fn eq(&self, a: &M, b: &M) -> bool {
        self.leq(a, b) && self.leq(b, a)
    }

    pub fn plus(&self, a: &M, b: &M) -> M {
        (self.plus)(a, b)
    }

    pub fn theta(&self) -> &M {
        &self.theta
    }

    /// Least upper bound of `a` and `b`, if the instance defines one.
    pub fn sup(&self, a: &M, b: &M) -> Result<M, NoSupremum> {
        let missing = || NoSupremum { left: format!("{a:?}"), right: format!("{b:?}") };
        match &self.sup {
            Some(sup) => sup(a, b).ok_or_else(missing),
            None => Err(missing()),
        }
    }
}

/// ℝ₊ with the usual order, addition, and max as supremum.
pub fn nonneg_reals() -> OrderedMonoid<f64> {
    OrderedMonoid::new(0.0, |a: &f64, b: &f64| a <= b, |a: &f64, b: &f64| a + b)
        .with_sup(|a: &f64, b: &f64| Some(a.max(*b)))
}

/// ℝ₊ᵏ with componentwise order, addition, and max. Vectors of mismatched
/// length indicate a wiring bug and panic.
pub fn nonneg_vectors(dim: usize) -> OrderedMonoid<Vec<f64>> {
    let check = move |v: &Vec<f64>| {
        assert_eq!(v.len(), dim, "carrier element has wrong dimension");
    };
    OrderedMonoid::new(
        vec![0.0; dim],
        move |a: &Vec<f64>, b: &Vec<f64>| {
            check(a);
            check(b);
            a.iter().zip(b).all(|(x, y)| x <= y)
        },
        move |a: &Vec<f64>, b: &Vec<f64>| {
            check(a);
            check(b);
            a.iter().zip(b).map(|(x, y)| x + y).collect()
        },
    )
    .with_sup(move |a: &Vec<f64>, b: &Vec<f64>| {
        check(a);
        check(b);
        Some(a.iter().zip(b).map(|(x, y)| x.max(*y)).collect())
    })
}

/// Negative controls: structures that break exactly one axiom, so each
/// suite has a fixture it must fail on.
pub mod controls {
    use super::*;

    /// Order predicate that always answers true: antisymmetry is gone.
    pub fn always_leq() -> OrderedMonoid<f64> {
        OrderedMonoid::new(0.0, |_: &f64, _: &f64| true, |a: &f64, b: &f64| a + b)
    }

    /// ℝ₊ with m⊕n = |m−n|: θ stays neutral, but translation by p can flip
    /// an order relation (1 ≤ 2 yet |1−2| > |2−2|).
    pub fn absdiff_plus() -> OrderedMonoid<f64> {
        OrderedMonoid::new(0.0, |a: &f64, b: &f64| a <= b, |a: &f64, b: &f64| (a - b).abs())
    }

    /// Two incomparable tops above θ, and no sup closure for them. Used to
    /// drive `NoSupremum` through the metric construction.
    pub fn flat_pair() -> OrderedMonoid<f64> {
        // Carrier: {0} ∪ {1, 2} where 1 and 2 are incomparable.
        OrderedMonoid::new(
            0.0,
            |a: &f64, b: &f64| a == b || *a == 0.0,
            |a: &f64, b: &f64| if *a == 0.0 { *b } else if *b == 0.0 { *a } else { *a },
        )
        .with_sup(|a: &f64, b: &f64| {
            if a == b || *a == 0.0 {
                Some(*b)
            } else if *b == 0.0 {
                Some(*a)
            } else {
                None
            }
        })
    }
}

/// Check reflexivity, antisymmetry, transitivity, and θ-smallest-element
/// over the sample. Carrier equality (for antisymmetry) is `PartialEq`.
pub fn check_poset_axioms<M>(
    mon: &OrderedMonoid<M>,
    sample: &Sample<M>,
    budget: usize,
) -> AxiomReport
where
    M: Clone + Debug + PartialEq,
{
    let mut report = AxiomReport::new("poset");

    let mut refl = LawScan::new("reflexivity");
    for m in &sample.elements {
        refl.case(mon.leq(m, m), || Witness {
            tuple: witness_tuple!(m = m),
            observed: "m ≤ m is false".into(),
        });
    }
    report.checks.push(refl.finish());

    let mut antisym = LawScan::new("antisymmetry");
    for_each_pair(sample, budget, |a, b| {
        let ok = !(mon.leq(a, b) && mon.leq(b, a)) || a == b;
        antisym.case(ok, || Witness {
            tuple: witness_tuple!(a = a, b = b),
            observed: "a ≤ b and b ≤ a for distinct elements".into(),
        });
    });
    report.checks.push(antisym.finish());

    let mut trans = LawScan::new("transitivity");
    for_each_triple(sample, budget, |a, b, c| {
        let ok = !(mon.leq(a, b) && mon.leq(b, c)) || mon.leq(a, c);
        trans.case(ok, || Witness {
            tuple: witness_tuple!(a = a, b = b, c = c),
            observed: "a ≤ b ≤ c but a ≤ c is false".into(),
        });
    });
    report.checks.push(trans.finish());

    let mut smallest = LawScan::new("theta-smallest");
    for m in &sample.elements {
        smallest.case(mon.leq(mon.theta(), m), || Witness {
            tuple: witness_tuple!(m = m),
            observed: format!("θ={:?} not ≤ m", mon.theta()),
        });
    }
    report.checks.push(smallest.finish());

    report
}

/// Check associativity, θ-neutrality, and order-translation
/// (m ≤ n ⟹ m+p ≤ n+p and p+m ≤ p+n) over the sample.
pub fn check_monoid_axioms<M>(
    mon: &OrderedMonoid<M>,
    sample: &Sample<M>,
    budget: usize,
) -> AxiomReport
where
    M: Clone + Debug + PartialEq,
{
    let mut report = AxiomReport::new("monoid");

    let mut assoc = LawScan::new("associativity");
    for_each_triple(sample, budget, |a, b, c| {
        let left = mon.plus(&mon.plus(a, b), c);
        let right = mon.plus(a, &mon.plus(b, c));
        assoc.case(left == right, || Witness {
            tuple: witness_tuple!(a = a, b = b, c = c),
            observed: format!("(a+b)+c={left:?} but a+(b+c)={right:?}"),
        });
    });
    report.checks.push(assoc.finish());

    let mut neutral = LawScan::new("theta-neutral");
    for m in &sample.elements {
        let left = mon.plus(mon.theta(), m);
        let right = mon.plus(m, mon.theta());
        neutral.case(&left == m && &right == m, || Witness {
            tuple: witness_tuple!(m = m),
            observed: format!("θ+m={left:?}, m+θ={right:?}"),
        });
    }
    report.checks.push(neutral.finish());

    let mut translate = LawScan::new("order-translation");
    for_each_triple(sample, budget, |m, n, p| {
        if !mon.leq(m, n) {
            return;
        }
        let right_ok = mon.leq(&mon.plus(m, p), &mon.plus(n, p));
        let left_ok = mon.leq(&mon.plus(p, m), &mon.plus(p, n));
        translate.case(right_ok && left_ok, || {
            let (mp, np) = (mon.plus(m, p), mon.plus(n, p));
            Witness {
                tuple: witness_tuple!(m = m, n = n, p = p),
                observed: format!("m ≤ n but m+p={mp:?} ≤ n+p={np:?} is {right_ok} (left side {left_ok})"),
            }
        });
    });
    report.checks.push(translate.finish());

    report
}
