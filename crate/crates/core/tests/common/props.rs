//! Randomised identity checks shared by the property tests and the
//! acceptance target. Each check returns the number of cases run.

use std::cell::Cell;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use trace_ideals::calculus;
use trace_ideals::enumerate::{self, EnumOptions};
use trace_ideals::lattice::Lattice;
use trace_ideals::ring::{min_valuation_element, LocalRing};
use trace_ideals::scalars::Field;
use trace_ideals::series::TruncatedSeries;

use super::polynomial;

pub const CASES: u32 = 500;

/// `t^a + c t^{a+gap}` (or just `t^a`), leading coefficient a unit of `K`.
#[derive(Debug, Clone)]
pub struct Binomial {
    a: i64,
    gap: i64,
    lead: [i64; 3],
    tail: [i64; 3],
    monomial: bool,
}

fn binomial() -> impl Strategy<Value = Binomial> {
    (
        0i64..24,
        1i64..6,
        any::<[u8; 3]>(),
        any::<[u8; 3]>(),
        any::<bool>(),
    )
        .prop_map(|(a, gap, l, t, monomial)| Binomial {
            a,
            gap,
            lead: [1, l[1] as i64 % 5, l[2] as i64 % 5],
            tail: [t[0] as i64 % 5 - 2, t[1] as i64 % 5, t[2] as i64 % 5],
            monomial,
        })
}

pub fn gens() -> impl Strategy<Value = Vec<Binomial>> {
    prop::collection::vec(binomial(), 1..=3)
}

/// Exponents are folded into `[0, c + 4)`.
pub fn make_series<F: Field>(r: &LocalRing<F>, gens: &[Binomial]) -> Vec<TruncatedSeries<F::Elem>> {
    let amb = r.ambient();
    let span = r.conductor() + 4;
    gens.iter()
        .map(|g| {
            let a = g.a % span;
            let mut terms = vec![(a, g.lead.to_vec())];
            if !g.monomial {
                terms.push((a + g.gap, g.tail.to_vec()));
            }
            polynomial(amb, &terms)
        })
        .collect()
}

pub fn make_ideal<F: Field>(r: &LocalRing<F>, gens: &[Binomial]) -> Lattice<F> {
    r.ideal(&make_series(r, gens)).unwrap()
}

fn runner() -> TestRunner {
    TestRunner::new(Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    })
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

fn run<S: Strategy>(
    strategy: &S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<u32, String> {
    runner()
        .run(strategy, test)
        .map(|_| CASES)
        .map_err(|e| e.to_string())
}

/// `R:(R:Y) = Y` for `Y = R:X`, bidual idempotence, and `I:I = a⁻¹I` when
/// `I² = aI`.
pub fn duality<F: Field>(name: &str, r: &LocalRing<F>) -> Result<u32, String> {
    let rl = r.lattice();
    let stable_seen = Cell::new(0usize);
    let n = run(&gens(), |g| {
        let x = make_ideal(r, &g);
        let y = rl.colon(&x).unwrap();
        check(rl.colon(&rl.colon(&y).unwrap()).unwrap() == y, || {
            format!("{name}: R:(R:Y) != Y for X = {}", x.describe())
        })?;
        let b = calculus::bidual(r, &x).unwrap();
        check(b.contains(&x), || {
            format!("{name}: bidual misses {}", x.describe())
        })?;
        check(calculus::bidual(r, &b).unwrap() == b, || {
            format!("{name}: bidual not idempotent on {}", x.describe())
        })?;
        if let Some(a) = calculus::stability_witness(&x).unwrap() {
            stable_seen.set(stable_seen.get() + 1);
            let end = x.colon(&x).unwrap();
            check(end.scale(&a).unwrap() == x, || {
                format!("{name}: I:I != a⁻¹I for {}", x.describe())
            })?;
        }
        Ok(())
    })?;
    if stable_seen.get() == 0 {
        return Err(format!("{name}: no stable ideal sampled"));
    }
    Ok(n)
}

/// Colon identities and independence of canonical bases from generators.
pub fn colons<F: Field>(name: &str, r: &LocalRing<F>) -> Result<u32, String> {
    let amb = r.ambient();
    run(&(gens(), gens(), gens()), |(gx, gy, gz)| {
        let (x, y, z) = (make_ideal(r, &gx), make_ideal(r, &gy), make_ideal(r, &gz));
        let lhs = x.colon(&y.product(&z)).unwrap();
        let rhs = x.colon(&y).unwrap().colon(&z).unwrap();
        check(lhs == rhs, || format!("{name}: X:(YZ) != (X:Y):Z"))?;
        let bigger = y.sum(&z);
        check(
            z.colon(&y).unwrap().contains(&z.colon(&bigger).unwrap()),
            || format!("{name}: colon not order-reversing"),
        )?;
        let xy = x.colon(&y).unwrap();
        check(x.contains(&xy.product(&y)), || {
            format!("{name}: (X:Y)·Y ⊄ X")
        })?;
        check(x.colon(&x).unwrap().contains(r.lattice()), || {
            format!("{name}: R ⊄ X:X")
        })?;
        let mut g = make_series(r, &gx);
        g.reverse();
        let g0 = g[0].clone();
        for h in g.iter_mut().skip(1) {
            *h = h.add(amb, &g0);
        }
        check(r.ideal(&g).unwrap() == x, || {
            format!("{name}: non-canonical basis")
        })?;
        let again = r.ideal(&[min_valuation_element(&x)]).unwrap().sum(&x);
        check(again == x, || {
            format!("{name}: sum with a member changed the lattice")
        })?;
        Ok(())
    })
}

/// Every verdict and canonical basis survives widening the window.
pub fn precision<F: Field>(name: &str, r: &LocalRing<F>) -> Result<u32, String> {
    let rl = r.lattice();
    run(&gens(), |g| {
        let x = make_ideal(r, &g);
        let wide = x.refine_precision(2 * x.hi() + 8);
        check(wide == x, || {
            format!("{name}: refinement changed the lattice")
        })?;
        check(rl.colon(&x).unwrap() == rl.colon(&wide).unwrap(), || {
            format!("{name}: colon")
        })?;
        check(
            rl.colon(&x).unwrap().refine_precision(4 * x.hi())
                == rl.refine_precision(3 * x.hi()).colon(&wide).unwrap(),
            || format!("{name}: widen and colon do not commute"),
        )?;
        let c1 = calculus::classify(r, &x, false).unwrap();
        let c2 = calculus::classify(r, &wide, false).unwrap();
        let key = |c: &calculus::IdealClassification| {
            (
                c.is_trace,
                c.is_stable,
                c.is_good,
                c.is_reflexive,
                c.is_principal,
                c.strongly_antistable,
                c.trace_closure.clone(),
                c.endomorphism_ring.clone(),
            )
        };
        check(key(&c1) == key(&c2), || {
            format!("{name}: classification of {} changed", x.describe())
        })?;
        Ok(())
    })
}

/// Descent from every trace ideal and ascent from every stable class
/// representative, with their postconditions asserted inside the calls.
pub fn descend_ascend<F: Field>(name: &str, r: &LocalRing<F>) -> Result<usize, String> {
    let err = |e: &dyn std::fmt::Display| format!("{name}: {e}");
    let opts = EnumOptions::default();
    let (x, _) = enumerate::enumerate_trace_ideals(r, &opts).map_err(|e| err(&e))?;
    let mut n = 0;
    for i in &x {
        let a = min_valuation_element(i);
        let j = calculus::lemma32_descend(r, i, &a).map_err(|e| err(&e))?;
        if !calculus::is_stable(&j).map_err(|e| err(&e))? {
            return Err(format!(
                "{name}: descent from {} is not stable",
                i.describe()
            ));
        }
        n += 1;
    }
    let y = enumerate::enumerate_overrings(r, &opts).map_err(|e| err(&e))?;
    for rep in enumerate::stable_class_reps(r, &y).map_err(|e| err(&e))? {
        let a = calculus::stability_witness(&rep)
            .map_err(|e| err(&e))?
            .ok_or_else(|| format!("{name}: representative {} not stable", rep.describe()))?;
        let j = calculus::lemma32_ascend(r, &rep, &a).map_err(|e| err(&e))?;
        if !x.contains(&j) {
            return Err(format!(
                "{name}: ascent from {} left the trace ideals",
                rep.describe()
            ));
        }
        n += 1;
    }
    Ok(n)
}
