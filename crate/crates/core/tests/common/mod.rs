#![allow(dead_code)]

pub mod props;

use std::sync::Arc;

use trace_ideals::lattice::Lattice;
use trace_ideals::ring::{LocalRing, DEFAULT_WINDOW_CAP};
use trace_ideals::scalars::{Field, FiniteField, Rationals};
use trace_ideals::semigroup::NumericalSemigroup;
use trace_ideals::series::{Ambient, TruncatedSeries};

pub fn f2() -> Arc<Ambient<FiniteField>> {
    Ambient::new(FiniteField::prime(2).unwrap())
}

pub fn f3() -> Arc<Ambient<FiniteField>> {
    Ambient::new(FiniteField::prime(3).unwrap())
}

pub fn q() -> Arc<Ambient<Rationals>> {
    Ambient::new(Rationals)
}

pub fn sg<F: Field>(amb: &Arc<Ambient<F>>, gens: &str) -> LocalRing<F> {
    let s: NumericalSemigroup = gens.parse().unwrap();
    LocalRing::semigroup_ring(amb, &s).unwrap()
}

pub fn series<F: Field>(amb: &Arc<Ambient<F>>, s: &str) -> TruncatedSeries<F::Elem> {
    TruncatedSeries::parse(amb, s).unwrap()
}

/// `k[[gens]]` as the closure of the listed series.
pub fn ring<F: Field>(amb: &Arc<Ambient<F>>, gens: &[&str]) -> LocalRing<F> {
    let g: Vec<_> = gens.iter().map(|s| series(amb, s)).collect();
    LocalRing::from_generators(amb, &g, DEFAULT_WINDOW_CAP).unwrap()
}

/// The ideal of `r` generated by the listed series.
pub fn ideal<F: Field>(r: &LocalRing<F>, gens: &[&str]) -> Lattice<F> {
    let g: Vec<_> = gens.iter().map(|s| series(r.ambient(), s)).collect();
    r.ideal(&g).unwrap()
}

pub fn resext(n: u32) -> LocalRing<FiniteField> {
    let ext = FiniteField::extension(2, n, None).unwrap();
    LocalRing::<FiniteField>::residue_extension_of(&ext)
        .unwrap()
        .1
}

/// Work done on each fixture ring, whatever its field.
pub trait Visit {
    fn visit<F: Field>(&mut self, name: &str, r: &LocalRing<F>);
}

pub const MONOMIAL_FIXTURES: &[(&str, &str)] = &[
    ("4,5,6", "F2"),
    ("4,5,6", "F3"),
    ("3,4,5", "F2"),
    ("2,3", "F2"),
    ("2,5", "F3"),
    ("2,5", "F2"),
    ("1", "F2"),
];

/// The finite-field fixture rings: the monomial ones, the residue
/// extensions of degree 2 and 3, and a binomial ring.
pub fn for_each_fixture(v: &mut impl Visit) {
    for (gens, field) in MONOMIAL_FIXTURES {
        let amb = if *field == "F2" { f2() } else { f3() };
        v.visit(&format!("sg:{gens}/{field}"), &sg(&amb, gens));
    }
    v.visit("resext:F8/F2", &resext(3));
    v.visit("resext:F4/F2", &resext(2));
    v.visit("gens:t2+t3,t5/F2", &ring(&f2(), &["t2+t3", "t5"]));
}

/// `Σ c_i t^{e_i}` with coefficients in `K` built from small integers.
pub fn polynomial<F: Field>(
    amb: &Ambient<F>,
    terms: &[(i64, Vec<i64>)],
) -> TruncatedSeries<F::Elem> {
    let mut f = TruncatedSeries::zero(amb);
    for (e, c) in terms {
        let coeff: Vec<F::Elem> = (0..amb.d())
            .map(|i| amb.k.from_i64(*c.get(i).unwrap_or(&0)))
            .collect();
        f = f.add(amb, &TruncatedSeries::monomial(amb, *e, coeff));
    }
    f
}
