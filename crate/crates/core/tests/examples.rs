mod common;

use std::collections::HashSet;

use common::*;
use trace_ideals::calculus;
use trace_ideals::enumerate::{self, CorrespondenceCase, EnumOptions};
use trace_ideals::lattice::Lattice;
use trace_ideals::ring::{AlmostGorenstein, LocalRing};
use trace_ideals::scalars::Field;

fn set<F: Field>(items: impl IntoIterator<Item = Lattice<F>>) -> HashSet<Lattice<F>> {
    items.into_iter().collect()
}

fn opts() -> EnumOptions {
    EnumOptions {
        scan_overrings: true,
        floor_check_width: 2,
        ..EnumOptions::default()
    }
}

/// Trace ideals and overrings of k[[t4,t5,t6]] against closed-form lists:
/// the monomial members plus one binomial member per field element.
fn check_456<F: Field>(amb: &std::sync::Arc<trace_ideals::series::Ambient<F>>) {
    let r = sg(amb, "4,5,6");
    let elems = amb.k.elements().unwrap();
    let q = elems.len();

    let mut want_x = set([
        ideal(&r, &["t8", "t9", "t10", "t11"]),
        ideal(&r, &["t6", "t8", "t9"]),
        ideal(&r, &["t5", "t6", "t8"]),
        ideal(&r, &["t4", "t5", "t6"]),
        r.lattice().clone(),
    ]);
    let mut want_y = set([
        r.lattice().clone(),
        ring(amb, &["t4", "t5", "t6", "t7"]).lattice().clone(),
        ring(amb, &["t3", "t4", "t5"]).lattice().clone(),
        ring(amb, &["t2", "t3"]).lattice().clone(),
        r.normalization(),
    ]);
    for a in &elems {
        let a = amb.k.format_elem(a);
        want_x.insert(ideal(&r, &[&format!("t4-({a})t5"), "t6"]));
        want_y.insert(ring(amb, &[&format!("t2+({a})t3"), "t5"]).lattice().clone());
    }
    assert_eq!(want_x.len(), 5 + q);
    assert_eq!(want_y.len(), 5 + q);

    let (x, cert) = enumerate::enumerate_trace_ideals(&r, &opts()).unwrap();
    assert_eq!(cert.scanned, cert.galois_number);
    assert_eq!(set(x), want_x);
    let y = enumerate::enumerate_overrings(&r, &opts()).unwrap();
    assert_eq!(set(y.iter().map(|a| a.lattice().clone())), want_y);

    let report = enumerate::verify_ring(&r, "sg:4,5,6", &opts()).unwrap();
    assert!(report.rho_bijective);
    assert!(!report.x_equals_g);
    assert_eq!(report.theorem12_case, CorrespondenceCase::Gorenstein);
    assert!(report.floor_check.unwrap().all_contain_conductor);
}

#[test]
fn semigroup_456_over_f2() {
    check_456(&f2());
}

#[test]
fn semigroup_456_over_f3() {
    check_456(&f3());
}

#[test]
fn semigroup_345_has_two_trace_ideals() {
    let amb = f2();
    let r = sg(&amb, "3,4,5");
    let report = enumerate::verify_ring(&r, "sg:3,4,5", &opts()).unwrap();
    let m = r.maximal_ideal().describe();
    assert_eq!(report.trace_ideals, vec![m, r.lattice().describe()]);
    let want_y = set([
        r.lattice().clone(),
        ring(&amb, &["t2", "t3"]).lattice().clone(),
        r.normalization(),
    ]);
    let y = enumerate::enumerate_overrings(&r, &opts()).unwrap();
    assert_eq!(set(y.iter().map(|a| a.lattice().clone())), want_y);
    assert!(!report.rho_surjective);
    assert_eq!(report.theorem12_case, CorrespondenceCase::RhoNotSurjective);
}

#[test]
fn residue_extension_of_degree_three() {
    let r = resext(3);
    let inv = r.invariants().unwrap();
    assert_eq!(inv.multiplicity, 3);
    assert_eq!(inv.cm_type, 2);
    assert!(!inv.gorenstein);
    assert_eq!(inv.almost_gorenstein, AlmostGorenstein::True);
    let m = r.maximal_ideal();
    let b = m.colon(m).unwrap();
    assert_eq!(b, r.normalization());
    assert_eq!(*m, b.shift(1));
    assert_eq!(r.special_residue_degree(), Some((3, true)));

    let report = enumerate::verify_ring(&r, "resext:F8/F2", &opts()).unwrap();
    assert_eq!(
        report.trace_ideals,
        vec![m.describe(), r.lattice().describe()]
    );
    assert_eq!(report.overrings, vec![r.lattice().describe(), b.describe()]);
    assert!(report.rho_bijective);
    assert_eq!(report.theorem12_case, CorrespondenceCase::Special);
}

#[test]
fn residue_extension_of_degree_two_is_gorenstein() {
    let r = resext(2);
    assert!(r.is_gorenstein().unwrap());
    let report = enumerate::verify_ring(&r, "resext:F4/F2", &opts()).unwrap();
    assert_eq!(report.theorem12_case, CorrespondenceCase::Gorenstein);
    assert!(report.x_equals_g);
}

#[test]
fn multiplicity_two_rings_have_only_good_trace_ideals() {
    for gens in ["2,3", "2,5", "2,7"] {
        for amb in [f2(), f3()] {
            let r = sg(&amb, gens);
            let report = enumerate::verify_ring(&r, gens, &opts()).unwrap();
            assert!(report.x_equals_g, "{gens}");
            assert!(report.all_overrings_gorenstein, "{gens}");
        }
    }
    let r = sg(&f2(), "4,5,6");
    let report = enumerate::verify_ring(&r, "4,5,6", &opts()).unwrap();
    assert!(!report.x_equals_g && !report.all_overrings_gorenstein);
}

#[test]
fn antistability_up_to_colength_six() {
    let amb = f2();
    let cusp = calculus::antistable_ring_check(&sg(&amb, "2,3"), 6, false).unwrap();
    assert!(cusp.antistable && cusp.exhaustive && cusp.failing_ideal.is_none());
    let r = sg(&amb, "4,5,6");
    let rep = calculus::antistable_ring_check(&r, 6, false).unwrap();
    assert!(!rep.antistable && rep.failing_ideal.is_some() && !rep.mismatch);
}

#[test]
fn monomial_slice_over_rationals() {
    let amb = q();
    let r = sg(&amb, "4,5,6");
    let opts = EnumOptions {
        monomial_only: true,
        ..EnumOptions::default()
    };
    let report = enumerate::verify_ring(&r, "sg:4,5,6", &opts).unwrap();
    assert_eq!(report.overrings.len(), 6);
    assert_eq!(report.trace_ideals.len(), 6);
    assert!(report.rho_bijective);
    assert!(enumerate::verify_ring(&r, "sg:4,5,6", &EnumOptions::default()).is_err());
}

#[test]
fn small_semigroup_sweep_over_f2() {
    let amb = f2();
    let mut rings = 0;
    for s in trace_ideals::semigroup::semigroups_of_genus_at_most(4) {
        let r = LocalRing::semigroup_ring(&amb, &s).unwrap();
        let report = enumerate::verify_ring(&r, &s.to_string(), &EnumOptions::default()).unwrap();
        assert_eq!(report.rho_surjective, report.invariants.gorenstein, "{s}");
        let mono = enumerate::verify_ring(
            &r,
            &s.to_string(),
            &EnumOptions {
                monomial_only: true,
                ..EnumOptions::default()
            },
        )
        .unwrap();
        assert_eq!(mono.overrings.len(), s.oversemigroups().len());
        rings += 1;
    }
    assert_eq!(rings, 1 + 1 + 2 + 4 + 7);
}

#[test]
fn bidual_of_456_ideal_is_a_fixed_point() {
    let r = sg(&f2(), "4,5,6");
    let i = ideal(&r, &["t4", "t5"]);
    let b = calculus::bidual(&r, &i).unwrap();
    assert!(b.contains(&i));
    assert_eq!(calculus::bidual(&r, &b).unwrap(), b);
}

#[test]
fn descend_and_ascend_on_enumerated_sets() {
    struct V;
    impl Visit for V {
        fn visit<F: Field>(&mut self, name: &str, r: &LocalRing<F>) {
            assert!(common::props::descend_ascend(name, r).unwrap() > 0);
        }
    }
    for_each_fixture(&mut V);
}
