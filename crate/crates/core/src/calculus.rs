//! Decision procedures on regular fractional ideals: trace, stable and good
//! ideals, the maps `ξ`, `η`, `ρ`, and anti-stability.

use serde::Serialize;
use thiserror::Error;

use crate::lattice::{Lattice, LatticeError};
use crate::ring::{min_valuation_element, LocalRing, RingError, RingKind};
use crate::scalars::Field;
use crate::series::TruncatedSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CalculusError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

type Res<T> = Result<T, CalculusError>;
type Series<F> = TruncatedSeries<<F as Field>::Elem>;

fn check(cond: bool, what: impl FnOnce() -> String) -> Res<()> {
    if cond {
        Ok(())
    } else {
        Err(CalculusError::Inconsistency(what()))
    }
}

/// `τ_R(I) = (R:I)·I`.
pub fn trace_closure<F: Field>(r: &LocalRing<F>, i: &Lattice<F>) -> Res<Lattice<F>> {
    Ok(r.lattice().colon(i)?.product(i))
}

/// `I:I = R:I`.
pub fn is_trace<F: Field>(r: &LocalRing<F>, i: &Lattice<F>) -> Res<bool> {
    Ok(i.colon(i)? == r.lattice().colon(i)?)
}

/// `I² = aI` for a least-valuation element `a ∈ I`; returns `a` on success.
pub fn stability_witness<F: Field>(i: &Lattice<F>) -> Res<Option<Series<F>>> {
    if i.is_zero() {
        return Err(CalculusError::Precondition(
            "zero ideal is not regular".into(),
        ));
    }
    let a = min_valuation_element(i);
    let ai = i.scale(&a)?;
    let sq = i.product(i);
    debug_assert!(sq.contains(&ai));
    Ok((sq == ai).then_some(a))
}

pub fn is_stable<F: Field>(i: &Lattice<F>) -> Res<bool> {
    Ok(stability_witness(i)?.is_some())
}

/// `(aR):_R I = (aR : I) ∩ R`.
pub fn colon_in_ring<F: Field>(r: &LocalRing<F>, a: &Series<F>, i: &Lattice<F>) -> Res<Lattice<F>> {
    let ar = r.lattice().scale(a)?;
    Ok(ar.colon(i)?.intersect(r.lattice()))
}

/// Good = trace and stable.
pub fn is_good<F: Field>(r: &LocalRing<F>, i: &Lattice<F>) -> Res<bool> {
    Ok(is_trace(r, i)? && is_stable(i)?)
}

/// The definition directly: `I² = aI` and `I = (a):_R I`.
pub fn is_good_by_definition<F: Field>(r: &LocalRing<F>, i: &Lattice<F>) -> Res<bool> {
    match stability_witness(i)? {
        None => Ok(false),
        Some(a) => Ok(colon_in_ring(r, &a, i)? == *i),
    }
}

fn overring<F: Field>(i: &Lattice<F>) -> Res<LocalRing<F>> {
    Ok(LocalRing::from_lattice(i.colon(i)?, RingKind::Overring)?)
}

/// `ξ(I) = I:I` on stable ideals.
pub fn xi<F: Field>(i: &Lattice<F>) -> Res<LocalRing<F>> {
    if !is_stable(i)? {
        return Err(CalculusError::Precondition(
            "ξ is defined on stable ideals".into(),
        ));
    }
    overring(i)
}

/// `ρ(I) = I:I` on trace ideals.
pub fn rho<F: Field>(r: &LocalRing<F>, i: &Lattice<F>) -> Res<LocalRing<F>> {
    if !is_trace(r, i)? {
        return Err(CalculusError::Precondition(
            "ρ is defined on trace ideals".into(),
        ));
    }
    overring(i)
}

/// `η(A) = R:A`, asserted to be a trace ideal.
pub fn eta<F: Field>(r: &LocalRing<F>, a: &LocalRing<F>) -> Res<Lattice<F>> {
    if !a.lattice().contains(r.lattice()) || !r.normalization().contains(a.lattice()) {
        return Err(CalculusError::Precondition("η needs R ⊆ A ⊆ V".into()));
    }
    let j = r.lattice().colon(a.lattice())?;
    check(is_trace(r, &j)?, || {
        format!(
            "R:A is not a trace ideal for A = {}",
            a.lattice().describe()
        )
    })?;
    Ok(j)
}

/// `R:(R:I)`.
pub fn bidual<F: Field>(r: &LocalRing<F>, i: &Lattice<F>) -> Res<Lattice<F>> {
    let rl = r.lattice();
    Ok(rl.colon(&rl.colon(i)?)?)
}

/// For a trace ideal `I` and `a ∈ I` of least valuation: `J = (a):_R I`,
/// with `J ⊆ I` and `J² = aJ` asserted.
pub fn lemma32_descend<F: Field>(
    r: &LocalRing<F>,
    i: &Lattice<F>,
    a: &Series<F>,
) -> Res<Lattice<F>> {
    if !is_trace(r, i)? || !i.member(a)? || a.valuation() != i.vmin() {
        return Err(CalculusError::Precondition(
            "needs a trace ideal and a least-valuation member".into(),
        ));
    }
    let j = colon_in_ring(r, a, i)?;
    check(i.contains(&j), || "descended ideal not inside I".into())?;
    check(j.product(&j) == j.scale(a)?, || {
        "descended ideal not stable with witness a".into()
    })?;
    Ok(j)
}

/// For `I² = aI`: `J = (a):_R I`, with `I ⊆ J` and `J` a trace ideal asserted.
pub fn lemma32_ascend<F: Field>(
    r: &LocalRing<F>,
    i: &Lattice<F>,
    a: &Series<F>,
) -> Res<Lattice<F>> {
    if i.product(i) != i.scale(a)? {
        return Err(CalculusError::Precondition("needs I² = aI".into()));
    }
    let j = colon_in_ring(r, a, i)?;
    check(j.contains(i), || "ascended ideal does not contain I".into())?;
    check(is_trace(r, &j)?, || {
        "ascended ideal is not a trace ideal".into()
    })?;
    Ok(j)
}

/// Whether `R:I = b·(I:I)` for a least-valuation `b ∈ R:I`. With
/// `paranoid`, also searches all least-valuation combinations of the basis
/// rows and requires the same verdict.
pub fn strongly_antistable_test<F: Field>(
    r: &LocalRing<F>,
    i: &Lattice<F>,
    paranoid: bool,
) -> Res<Option<Series<F>>> {
    let a = i.colon(i)?;
    let d = r.lattice().colon(i)?;
    let b = min_valuation_element(&d);
    let ba = a.scale(&b)?;
    check(d.contains(&ba), || "b·(I:I) not inside R:I".into())?;
    let pass = ba == d;
    if paranoid {
        let brute = brute_force_generator(&a, &d)?;
        check(brute.is_some() == pass, || {
            format!(
                "single-witness and brute-force anti-stability disagree on {}",
                i.describe()
            )
        })?;
    }
    Ok(pass.then_some(b))
}

const PARANOID_ROW_LIMIT: usize = 12;

fn brute_force_generator<F: Field>(a: &Lattice<F>, d: &Lattice<F>) -> Res<Option<Series<F>>> {
    let amb = d.ambient();
    let k = &amb.k;
    let Some(elems) = k.elements() else {
        return Err(CalculusError::Precondition(
            "brute-force search needs a finite field".into(),
        ));
    };
    let rows = d.elements();
    if rows.is_empty() {
        let b = min_valuation_element(d);
        return Ok((a.scale(&b)? == *d).then_some(b));
    }
    let others = &rows[1..rows.len().min(PARANOID_ROW_LIMIT)];
    let mut digits = vec![0usize; others.len()];
    loop {
        for c in elems.iter().filter(|c| !k.is_zero(c)) {
            let mut b = rows[0].scale(amb, c);
            for (row, &dg) in others.iter().zip(&digits) {
                if dg > 0 {
                    b = b.add(amb, &row.scale(amb, &elems[dg]));
                }
            }
            if a.scale(&b)? == *d {
                return Ok(Some(b));
            }
        }
        let mut pos = 0;
        loop {
            if pos == digits.len() {
                return Ok(None);
            }
            digits[pos] += 1;
            if digits[pos] < elems.len() {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AntistableReport {
    pub multiplicity: usize,
    /// `e(R) ≤ 2`.
    pub antistable: bool,
    pub exhaustive: bool,
    pub colength_bound: usize,
    /// Number of ideals of each colength `0..=bound` that were tested.
    pub ideals_per_colength: Vec<usize>,
    pub failing_ideal: Option<String>,
    pub failing_colength: Option<usize>,
    /// An ideal failed although `e(R) ≤ 2`.
    pub mismatch: bool,
}

/// Verdict `e(R) ≤ 2`; over a finite field with residue field `k`, every
/// ideal of colength at most `bound` is also tested individually.
pub fn antistable_ring_check<F: Field>(
    r: &LocalRing<F>,
    bound: usize,
    paranoid: bool,
) -> Res<AntistableReport> {
    let e = r.multiplicity()?;
    let antistable = e <= 2;
    let mut report = AntistableReport {
        multiplicity: e,
        antistable,
        exhaustive: false,
        colength_bound: bound,
        ideals_per_colength: Vec::new(),
        failing_ideal: None,
        failing_colength: None,
        mismatch: false,
    };
    if r.ambient().k.order().is_none() || r.residue_degree() != 1 {
        return Ok(report);
    }
    report.exhaustive = true;
    let levels = crate::enumerate::ideals_by_colength(r, bound)?;
    for (n, level) in levels.iter().enumerate() {
        report.ideals_per_colength.push(level.len());
        for i in level {
            if strongly_antistable_test(r, i, paranoid)?.is_none() && report.failing_ideal.is_none()
            {
                report.failing_ideal = Some(i.describe());
                report.failing_colength = Some(n);
            }
        }
    }
    report.mismatch = antistable && report.failing_ideal.is_some();
    Ok(report)
}

#[derive(Debug, Clone, Serialize)]
pub struct IdealClassification {
    pub ideal: String,
    pub is_trace: bool,
    pub is_stable: bool,
    pub is_good: bool,
    pub is_reflexive: bool,
    pub is_principal: bool,
    pub stability_witness: Option<String>,
    pub strongly_antistable: bool,
    pub antistable_witness: Option<String>,
    pub trace_closure: String,
    /// `I:I`.
    pub endomorphism_ring: String,
}

pub fn classify<F: Field>(
    r: &LocalRing<F>,
    i: &Lattice<F>,
    paranoid: bool,
) -> Res<IdealClassification> {
    if !r.is_fractional_ideal(i) {
        return Err(CalculusError::Precondition(format!(
            "{} is not a regular fractional ideal",
            i.describe()
        )));
    }
    let amb = r.ambient();
    let trace = is_trace(r, i)?;
    let witness = stability_witness(i)?;
    let good = trace && witness.is_some();
    check(good == is_good_by_definition(r, i)?, || {
        format!("good-ideal criteria disagree on {}", i.describe())
    })?;
    let tau = trace_closure(r, i)?;
    check(trace == (tau == *i), || {
        format!("trace criteria disagree on {}", i.describe())
    })?;
    let a = min_valuation_element(i);
    let principal = r.lattice().scale(&a)? == *i;
    check(!principal || witness.is_some(), || {
        "principal ideal not stable".into()
    })?;
    let anti = strongly_antistable_test(r, i, paranoid)?;
    Ok(IdealClassification {
        ideal: i.describe(),
        is_trace: trace,
        is_stable: witness.is_some(),
        is_good: good,
        is_reflexive: bidual(r, i)? == *i,
        is_principal: principal,
        stability_witness: witness.map(|w| w.format(amb)),
        strongly_antistable: anti.is_some(),
        antistable_witness: anti.map(|w| w.format(amb)),
        trace_closure: tau.describe(),
        endomorphism_ring: i.colon(i)?.describe(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{FiniteField, Rationals};
    use crate::semigroup::NumericalSemigroup;
    use crate::series::Ambient;
    use std::sync::Arc;

    fn sg<F: Field>(amb: &Arc<Ambient<F>>, g: &[u64]) -> LocalRing<F> {
        LocalRing::semigroup_ring(amb, &NumericalSemigroup::new(g).unwrap()).unwrap()
    }

    fn ideal<F: Field>(r: &LocalRing<F>, gens: &str) -> Lattice<F> {
        let amb = r.ambient();
        let g: Vec<_> = gens
            .split(',')
            .map(|s| TruncatedSeries::parse(amb, s).unwrap())
            .collect();
        r.ideal(&g).unwrap()
    }

    #[test]
    fn trace_tests_on_456() {
        let amb = Ambient::new(Rationals);
        let r = sg(&amb, &[4, 5, 6]);
        assert!(is_trace(&r, &ideal(&r, "t5,t6,t8")).unwrap());
        assert!(!is_trace(&r, &ideal(&r, "t4")).unwrap());
        assert!(is_trace(&r, r.lattice()).unwrap());
        assert_eq!(trace_closure(&r, &ideal(&r, "t4")).unwrap(), *r.lattice());
        let m = r.maximal_ideal().clone();
        assert_eq!(trace_closure(&r, &m).unwrap(), m);
        let rho_i = rho(&r, &ideal(&r, "t5,t6,t8")).unwrap();
        assert_eq!(rho_i, sg(&amb, &[3, 4, 5]));
    }

    #[test]
    fn stability_and_goodness() {
        let amb = Ambient::new(Rationals);
        let r345 = sg(&amb, &[3, 4, 5]);
        let m = r345.maximal_ideal().clone();
        assert!(is_stable(&m).unwrap());
        assert!(is_good(&r345, &m).unwrap());
        assert!(xi(&m).unwrap().is_dvr());
        let r = sg(&amb, &[4, 5, 6]);
        assert!(is_stable(&r.conductor_ideal()).unwrap());
        let i45 = ideal(&r, "t4,t5");
        assert!(!is_stable(&i45).unwrap());
        assert!(!is_good(&r, &i45).unwrap());
        assert!(is_good(&r, r.lattice()).unwrap());
        let b = bidual(&r, &i45).unwrap();
        assert_eq!(bidual(&r, &b).unwrap(), b);
    }

    #[test]
    fn eta_on_fixture_overrings() {
        let amb = Ambient::new(FiniteField::prime(2).unwrap());
        let r = sg(&amb, &[4, 5, 6]);
        let s = sg(&amb, &[4, 5, 6, 7]);
        assert_eq!(eta(&r, &s).unwrap(), *r.maximal_ideal());
        let p = |s: &str| TruncatedSeries::parse(&amb, s).unwrap();
        let b1 = LocalRing::from_generators(&amb, &[p("t2+t3"), p("t5")], 64).unwrap();
        assert_eq!(eta(&r, &b1).unwrap(), ideal(&r, "t4+t5,t6"));
        let b0 = sg(&amb, &[2, 5]);
        assert_eq!(eta(&r, &b0).unwrap(), ideal(&r, "t4,t6"));
    }

    #[test]
    fn lemma32_examples() {
        let amb = Ambient::new(Rationals);
        let r = sg(&amb, &[4, 5, 6]);
        let m = r.maximal_ideal().clone();
        let t4 = TruncatedSeries::t_power(&amb, 4);
        let j = lemma32_descend(&r, &m, &t4).unwrap();
        assert_eq!(j, m.colon(&m).unwrap().scale(&t4).unwrap());
        let c = r.conductor_ideal();
        let t8 = TruncatedSeries::t_power(&amb, 8);
        assert_eq!(lemma32_descend(&r, &c, &t8).unwrap(), c);
        let r345 = sg(&amb, &[3, 4, 5]);
        let m3 = r345.maximal_ideal().clone();
        let t3 = TruncatedSeries::t_power(&amb, 3);
        assert_eq!(lemma32_ascend(&r345, &m3, &t3).unwrap(), m3);
    }

    #[test]
    fn antistability() {
        let amb = Ambient::new(FiniteField::prime(2).unwrap());
        let r23 = sg(&amb, &[2, 3]);
        let rep = antistable_ring_check(&r23, 4, true).unwrap();
        assert!(rep.antistable && rep.failing_ideal.is_none() && !rep.mismatch);
        let r345 = sg(&amb, &[3, 4, 5]);
        let m = r345.maximal_ideal().clone();
        let w = strongly_antistable_test(&r345, &m, true).unwrap().unwrap();
        assert_eq!(w.valuation(), Some(0));
        let r = sg(&amb, &[4, 5, 6]);
        let rep = antistable_ring_check(&r, 4, false).unwrap();
        assert!(!rep.antistable && rep.failing_ideal.is_some() && !rep.mismatch);
    }
}
