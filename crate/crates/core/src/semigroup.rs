//! Numerical semigroups and their relative ideals.
//!
//! These are the combinatorial shadow of monomial rings `k[[t^s : s ∈ S]]`
//! and serve as an independent oracle for the lattice engine.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use std::sync::Arc;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::calculus::CalculusError;
use crate::lattice::Lattice;
use crate::ring::LocalRing;
use crate::scalars::Field;
use crate::series::{Ambient, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("generators {0:?} have gcd {1}, not 1")]
    NotCofinite(Vec<u64>, u64),
    #[error("a numerical semigroup needs at least one positive generator")]
    Empty,
    #[error("cannot parse generator list `{0}`")]
    Parse(String),
}

/// A cofinite submonoid of `ℕ`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    gens: Vec<u64>,
    /// `member[x]` for `0 <= x <= frobenius + 1`.
    member: Vec<bool>,
    frobenius: i64,
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.gens.iter().map(|x| x.to_string()).collect();
        write!(f, "<{}>", g.join(","))
    }
}

impl std::str::FromStr for NumericalSemigroup {
    type Err = SemigroupError;

    fn from_str(s: &str) -> Result<Self, SemigroupError> {
        let gens: Result<Vec<u64>, _> = s
            .trim()
            .trim_matches(|c| c == '<' || c == '>')
            .split(',')
            .map(|x| x.trim().parse::<u64>())
            .collect();
        NumericalSemigroup::new(&gens.map_err(|_| SemigroupError::Parse(s.to_string()))?)
    }
}

impl NumericalSemigroup {
    pub fn new(gens: &[u64]) -> Result<Self, SemigroupError> {
        let pos: Vec<u64> = gens.iter().copied().filter(|&g| g > 0).collect();
        if pos.is_empty() {
            return Err(SemigroupError::Empty);
        }
        let g = pos.iter().fold(0u64, |a, &b| a.gcd(&b));
        if g != 1 {
            return Err(SemigroupError::NotCofinite(gens.to_vec(), g));
        }
        let m = *pos.iter().min().unwrap() as usize;
        // membership table until m consecutive members appear
        let mut member = vec![true];
        let mut run = 1usize;
        let mut x = 0usize;
        while run < m {
            x += 1;
            let is = pos
                .iter()
                .any(|&g| (g as usize) <= x && member[x - g as usize]);
            member.push(is);
            run = if is { run + 1 } else { 0 };
        }
        // x is the end of the run; the Frobenius number precedes the run
        let frobenius = x as i64 - m as i64;
        member.truncate((frobenius + 2) as usize);
        let mut s = NumericalSemigroup {
            gens: Vec::new(),
            member,
            frobenius,
        };
        s.gens = s.compute_minimal_generators();
        Ok(s)
    }

    /// `ℕ` itself.
    pub fn naturals() -> Self {
        NumericalSemigroup::new(&[1]).expect("valid")
    }

    /// The semigroup with the given set of elements below its conductor.
    fn from_small_elements(small: &[u64], conductor: u64) -> Self {
        let mut gens: Vec<u64> = small.iter().copied().filter(|&x| x > 0).collect();
        gens.extend(conductor..=(2 * conductor).max(conductor + 1));
        NumericalSemigroup::new(&gens).expect("contains all large integers")
    }

    fn compute_minimal_generators(&self) -> Vec<u64> {
        let m = self.multiplicity();
        let bound = (self.conductor() + m).max(m + 1);
        (1..bound)
            .filter(|&x| self.contains(x as i64))
            .filter(|&x| !(1..x).any(|y| self.contains(y as i64) && self.contains((x - y) as i64)))
            .collect()
    }

    pub fn generators(&self) -> &[u64] {
        &self.gens
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            false
        } else if (x as usize) < self.member.len() {
            self.member[x as usize]
        } else {
            true
        }
    }

    pub fn multiplicity(&self) -> u64 {
        (1..).find(|&x| self.contains(x as i64)).unwrap()
    }

    /// Largest gap, `-1` for `ℕ`.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn conductor(&self) -> u64 {
        (self.frobenius + 1) as u64
    }

    pub fn gaps(&self) -> Vec<u64> {
        (1..self.conductor())
            .filter(|&x| !self.contains(x as i64))
            .collect()
    }

    pub fn genus(&self) -> usize {
        self.gaps().len()
    }

    /// Elements below the conductor.
    pub fn small_elements(&self) -> Vec<u64> {
        (0..self.conductor())
            .filter(|&x| self.contains(x as i64))
            .collect()
    }

    /// Least element in each residue class modulo `n`.
    pub fn apery(&self, n: u64) -> Vec<u64> {
        assert!(n > 0 && self.contains(n as i64));
        (0..n)
            .map(|r| {
                (0..)
                    .map(|j| r + j * n)
                    .find(|&x| self.contains(x as i64))
                    .unwrap()
            })
            .collect()
    }

    pub fn pseudo_frobenius(&self) -> Vec<i64> {
        let m = self.multiplicity();
        self.apery(m)
            .into_iter()
            .filter(|&w| w > 0)
            .filter(|&w| {
                // w is maximal in the Apéry set under the S-order
                self.apery(m)
                    .iter()
                    .all(|&u| u == w || !(u > w && self.contains((u - w) as i64)))
            })
            .map(|w| w as i64 - m as i64)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    pub fn semigroup_type(&self) -> usize {
        if self.frobenius < 0 {
            return 1;
        }
        self.pseudo_frobenius().len()
    }

    pub fn is_symmetric(&self) -> bool {
        let f = self.frobenius;
        (0..=f.max(0)).all(|x| self.contains(x) != self.contains(f - x)) || f < 0
    }

    /// PF-reflection criterion: with `PF = {f_1 < ... < f_t = F}`, almost
    /// symmetric iff `f_i + f_{t-i} = F` for `1 <= i < t`.
    pub fn is_almost_symmetric(&self) -> bool {
        if self.frobenius < 0 {
            return true;
        }
        let pf = self.pseudo_frobenius();
        let t = pf.len();
        let by_pf = (0..t - 1).all(|i| pf[i] + pf[t - 2 - i] == self.frobenius);
        let by_genus = 2 * self.genus() as i64 == self.frobenius + t as i64;
        debug_assert_eq!(
            by_pf, by_genus,
            "almost-symmetry criteria disagree on {self}"
        );
        by_pf
    }

    /// All numerical semigroups containing `self`, sorted by genus
    /// descending then by minimal generators.
    pub fn oversemigroups(&self) -> Vec<NumericalSemigroup> {
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        let mut stack = vec![self.clone()];
        let mut out = Vec::new();
        seen.insert(self.gaps());
        while let Some(t) = stack.pop() {
            for g in t.gaps() {
                let mut gens = t.generators().to_vec();
                gens.push(g);
                let u = NumericalSemigroup::new(&gens).expect("still cofinite");
                if seen.insert(u.gaps()) {
                    stack.push(u);
                }
            }
            out.push(t);
        }
        out.sort_by(|a, b| {
            b.genus()
                .cmp(&a.genus())
                .then_with(|| a.generators().cmp(b.generators()))
        });
        out
    }

    pub fn info(&self) -> SemigroupInfo {
        SemigroupInfo {
            generators: self.gens.clone(),
            multiplicity: self.multiplicity(),
            frobenius: self.frobenius,
            conductor: self.conductor(),
            genus: self.genus(),
            gaps: self.gaps(),
            apery: self.apery(self.multiplicity()),
            pseudo_frobenius: self.pseudo_frobenius(),
            semigroup_type: self.semigroup_type(),
            symmetric: self.is_symmetric(),
            almost_symmetric: self.is_almost_symmetric(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SemigroupInfo {
    pub generators: Vec<u64>,
    pub multiplicity: u64,
    pub frobenius: i64,
    pub conductor: u64,
    pub genus: usize,
    pub gaps: Vec<u64>,
    pub apery: Vec<u64>,
    pub pseudo_frobenius: Vec<i64>,
    #[serde(rename = "type")]
    pub semigroup_type: usize,
    pub symmetric: bool,
    pub almost_symmetric: bool,
}

/// All numerical semigroups of the given genus (by removing generators
/// larger than the Frobenius number, starting from `ℕ`).
pub fn semigroups_of_genus_at_most(max_genus: usize) -> Vec<NumericalSemigroup> {
    let mut out = vec![NumericalSemigroup::naturals()];
    let mut level = vec![NumericalSemigroup::naturals()];
    for _ in 0..max_genus {
        let mut next = Vec::new();
        for s in &level {
            for &g in s.generators() {
                if (g as i64) > s.frobenius() {
                    let small: Vec<u64> = (0..g + 1)
                        .filter(|&x| x != g && s.contains(x as i64))
                        .collect();
                    next.push(NumericalSemigroup::from_small_elements(&small, g + 1));
                }
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}

/// A relative ideal `E ⊆ ℤ` of a numerical semigroup: `E + S ⊆ E`,
/// bounded below. Stored by its members below its own conductor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SemigroupIdeal {
    members: BTreeSet<i64>,
    cond: i64,
}

impl SemigroupIdeal {
    fn canonical(s: &NumericalSemigroup, test: impl Fn(i64) -> bool, lo: i64, hi: i64) -> Self {
        // hi: every integer >= hi is known to be a member
        let mut cond = hi;
        while cond > lo && test(cond - 1) {
            cond -= 1;
        }
        let members = (lo..cond).filter(|&x| test(x)).collect();
        let _ = s;
        SemigroupIdeal { members, cond }
    }

    /// `⋃ (g + S)`.
    pub fn generated(s: &NumericalSemigroup, gens: &[i64]) -> Self {
        assert!(!gens.is_empty());
        let lo = *gens.iter().min().unwrap();
        let hi = gens.iter().max().unwrap() + s.conductor() as i64;
        SemigroupIdeal::canonical(s, |x| gens.iter().any(|&g| s.contains(x - g)), lo, hi)
    }

    /// `{x ≥ c}`.
    pub fn from_conductor(c: i64) -> Self {
        SemigroupIdeal {
            members: BTreeSet::new(),
            cond: c,
        }
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= self.cond || self.members.contains(&x)
    }

    pub fn min(&self) -> i64 {
        self.members.iter().next().copied().unwrap_or(self.cond)
    }

    pub fn conductor(&self) -> i64 {
        self.cond
    }

    /// Members below the conductor followed by the conductor.
    pub fn small_members(&self) -> Vec<i64> {
        self.members.iter().copied().collect()
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        (self.min()..self.cond.max(other.cond)).all(|x| !self.contains(x) || other.contains(x))
    }

    pub fn union(&self, s: &NumericalSemigroup, other: &Self) -> Self {
        let lo = self.min().min(other.min());
        let hi = self.cond.min(other.cond);
        SemigroupIdeal::canonical(s, |x| self.contains(x) || other.contains(x), lo, hi)
    }

    /// `E + F = {e + f}`.
    pub fn sum_set(&self, s: &NumericalSemigroup, other: &Self) -> Self {
        let lo = self.min() + other.min();
        let hi = (self.cond + other.min()).min(other.cond + self.min());
        let a: Vec<i64> = (self.min()..self.cond)
            .filter(|&x| self.contains(x))
            .collect();
        let b: Vec<i64> = (other.min()..other.cond)
            .filter(|&x| other.contains(x))
            .collect();
        let test = |x: i64| a.iter().any(|&e| b.contains(&(x - e))) || x >= hi;
        SemigroupIdeal::canonical(s, test, lo, hi)
    }

    /// `E − F = {z : z + F ⊆ E}`.
    pub fn colon(&self, s: &NumericalSemigroup, other: &Self) -> Self {
        let fmin = other.min();
        let lo = self.min() - fmin;
        let hi = self.cond - fmin;
        let test = |z: i64| {
            if z >= hi {
                return true;
            }
            (fmin..(self.cond - z)).all(|f| !other.contains(f) || self.contains(z + f))
        };
        SemigroupIdeal::canonical(s, test, lo, hi)
    }

    pub fn shift(&self, by: i64) -> Self {
        SemigroupIdeal {
            members: self.members.iter().map(|x| x + by).collect(),
            cond: self.cond + by,
        }
    }
}

/// The monomial lattice `span{t^e : e ∈ E}`.
pub fn monomial_lattice<F: Field>(amb: &Arc<Ambient<F>>, e: &SemigroupIdeal) -> Lattice<F> {
    let gens: Vec<TruncatedSeries<F::Elem>> = e
        .small_members()
        .iter()
        .map(|&x| TruncatedSeries::t_power(amb, x))
        .collect();
    Lattice::span(amb, &gens, Some(e.conductor())).expect("exact monomials")
}

#[derive(Debug, Clone, Serialize)]
pub struct CrossCheckReport {
    pub semigroup: String,
    pub ideals_checked: usize,
    pub trace: usize,
    pub stable: usize,
    pub good: usize,
    pub disagreements: Vec<String>,
}

/// Compares the lattice engine with set arithmetic on every monomial ideal
/// between the conductor and `R`, and the ring invariants with the
/// semigroup invariants.
pub fn monomial_cross_check<F: Field>(r: &LocalRing<F>) -> Result<CrossCheckReport, CalculusError> {
    let s = r
        .monomial_semigroup()
        .ok_or_else(|| CalculusError::Precondition("ring is not monomial".into()))?;
    let amb = r.ambient();
    let c = s.conductor() as i64;
    let whole = SemigroupIdeal::generated(&s, &[0]);
    let mut report = CrossCheckReport {
        semigroup: s.to_string(),
        ideals_checked: 0,
        trace: 0,
        stable: 0,
        good: 0,
        disagreements: Vec::new(),
    };
    let inv = r.invariants()?;
    if inv.multiplicity as u64 != s.multiplicity() {
        report.disagreements.push(format!(
            "multiplicity {} vs {}",
            inv.multiplicity,
            s.multiplicity()
        ));
    }
    if inv.cm_type != s.semigroup_type() {
        report
            .disagreements
            .push(format!("type {} vs {}", inv.cm_type, s.semigroup_type()));
    }
    if inv.gorenstein != s.is_symmetric() {
        report.disagreements.push("Gorenstein vs symmetric".into());
    }
    let small: Vec<i64> = s
        .small_elements()
        .iter()
        .map(|&x| x as i64)
        .filter(|&x| x > 0)
        .collect();
    let mut candidates: Vec<SemigroupIdeal> = vec![whole.clone()];
    for mask in 0u64..(1 << small.len()) {
        let mut gens: Vec<i64> = (0..small.len())
            .filter(|b| mask >> b & 1 == 1)
            .map(|b| small[b])
            .collect();
        gens.push(c);
        let e = SemigroupIdeal::generated(&s, &gens);
        // keep only sets that are already closed (one representative each)
        if (1..c).all(|x| e.contains(x) == (gens.contains(&x) || (x >= c))) {
            candidates.push(e);
        }
    }
    for e in candidates {
        report.ideals_checked += 1;
        let i = monomial_lattice(amb, &e);
        let set_trace = e.colon(&s, &e) == whole.colon(&s, &e);
        let set_stable = e.sum_set(&s, &e) == e.shift(e.min());
        let lat_trace = crate::calculus::is_trace(r, &i)?;
        let lat_stable = crate::calculus::is_stable(&i)?;
        let lat_good = crate::calculus::is_good(r, &i)?;
        let colon_ok = i.colon(&i)? == monomial_lattice(amb, &e.colon(&s, &e));
        if set_trace != lat_trace
            || set_stable != lat_stable
            || (set_trace && set_stable) != lat_good
            || !colon_ok
        {
            report.disagreements.push(i.describe());
        }
        report.trace += set_trace as usize;
        report.stable += set_stable as usize;
        report.good += (set_trace && set_stable) as usize;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::new(g).unwrap()
    }

    #[test]
    fn gaps_and_frobenius() {
        let s = sg(&[4, 5, 6]);
        assert_eq!(s.gaps(), vec![1, 2, 3, 7]);
        assert_eq!(s.frobenius(), 7);
        assert_eq!(s.apery(4), vec![0, 5, 6, 11]);
        let n = NumericalSemigroup::naturals();
        assert!(n.gaps().is_empty());
        assert_eq!(n.frobenius(), -1);
        let s = sg(&[3, 4, 5]);
        assert_eq!(s.gaps(), vec![1, 2]);
        assert_eq!(s.frobenius(), 2);
        assert_eq!(sg(&[4, 6, 7]).frobenius(), 9);
    }

    #[test]
    fn minimal_generators() {
        assert_eq!(sg(&[4, 5, 6, 8, 9, 10]).generators(), &[4, 5, 6]);
        assert_eq!(sg(&[2, 3, 4, 5]).generators(), &[2, 3]);
    }

    #[test]
    fn type_and_symmetry() {
        let s = sg(&[4, 5, 6]);
        assert_eq!(s.semigroup_type(), 1);
        assert!(s.is_symmetric());
        let s = sg(&[3, 4, 5]);
        assert_eq!(s.pseudo_frobenius(), vec![1, 2]);
        assert_eq!(s.semigroup_type(), 2);
        assert!(!s.is_symmetric());
        assert!(s.is_almost_symmetric());
        assert_eq!(NumericalSemigroup::naturals().semigroup_type(), 1);
        // <3,7,8>: PF = {4,5}, F = 5, 4 + 0 != 5 -> not almost symmetric
        let s = sg(&[3, 7, 8]);
        assert_eq!(s.pseudo_frobenius(), vec![4, 5]);
        assert!(!s.is_almost_symmetric());
    }

    #[test]
    fn oversemigroups_of_fixtures() {
        let names =
            |v: Vec<NumericalSemigroup>| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        assert_eq!(
            names(sg(&[4, 5, 6]).oversemigroups()),
            vec!["<4,5,6>", "<4,5,6,7>", "<2,5>", "<3,4,5>", "<2,3>", "<1>"]
        );
        assert_eq!(
            names(sg(&[3, 4, 5]).oversemigroups()),
            vec!["<3,4,5>", "<2,3>", "<1>"]
        );
        assert_eq!(
            names(NumericalSemigroup::naturals().oversemigroups()),
            vec!["<1>"]
        );
    }

    #[test]
    fn semigroup_counts_by_genus() {
        // 1, 1, 2, 4, 7, 12, 23, 39, 67 semigroups of genus 0..=8
        let all = semigroups_of_genus_at_most(8);
        let mut by_genus = vec![0usize; 9];
        for s in &all {
            by_genus[s.genus()] += 1;
        }
        assert_eq!(by_genus, vec![1, 1, 2, 4, 7, 12, 23, 39, 67]);
    }

    #[test]
    fn set_ideal_arithmetic() {
        let s = sg(&[4, 5, 6]);
        let sring = SemigroupIdeal::generated(&s, &[0]);
        let nat = SemigroupIdeal::from_conductor(0);
        assert_eq!(sring.colon(&s, &nat), SemigroupIdeal::from_conductor(8));
        let e = SemigroupIdeal::generated(&s, &[4, 5]);
        assert!(e.colon(&s, &e).contains(0));
        let a = SemigroupIdeal::generated(&s, &[3]);
        let b = SemigroupIdeal::generated(&s, &[4]);
        assert_eq!(a.sum_set(&s, &b), SemigroupIdeal::generated(&s, &[7]));
    }

    #[test]
    fn dual_engine_agreement() {
        use crate::scalars::FiniteField;
        for (p, g) in [(2u64, vec![4u64, 5, 6]), (3, vec![3, 4, 5]), (2, vec![1])] {
            let amb = Ambient::new(FiniteField::prime(p).unwrap());
            let r = LocalRing::semigroup_ring(&amb, &sg(&g)).unwrap();
            let rep = monomial_cross_check(&r).unwrap();
            assert!(rep.disagreements.is_empty(), "{rep:?}");
            assert!(rep.ideals_checked >= 1);
        }
    }
}
