//! One-dimensional complete local rings `k ⊆ R ⊆ K[[t]]` with finite
//! colength in `K[[t]]`, and their invariants.

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::lattice::{Lattice, LatticeError};
use crate::scalars::{is_prime, Field, FiniteField};
use crate::semigroup::{NumericalSemigroup, SemigroupError};
use crate::series::{Ambient, TruncatedSeries};

/// Upper bound for the closure window when generating a ring.
pub const DEFAULT_WINDOW_CAP: i64 = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error("not a ring: {0}")]
    NotARing(String),
    #[error("constant term of generator `{0}` is not in the base field")]
    ConstantNotInBase(String),
    #[error("generators have negative valuation")]
    NegativeValuation,
    #[error("the generated ring has infinite colength in K[[t]] (value gcd {gcd})")]
    InfiniteColength { gcd: i64 },
    #[error("closure did not certify a conductor below degree {window} (value gcd so far {gcd})")]
    NoStabilization { window: i64, gcd: i64 },
    #[error("residue extension needs a proper extension K/k")]
    NotAnExtension,
    #[error("Hilbert function did not stabilise by m^{0}")]
    HilbertUnstable(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingKind {
    Semigroup(NumericalSemigroup),
    Generators(Vec<String>),
    ResidueExtension(String),
    Overring,
}

/// Three-valued almost-Gorenstein verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AlmostGorenstein {
    True,
    False,
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingInvariants {
    pub conductor: i64,
    /// `dim_k(R/m)`.
    pub residue_degree: usize,
    /// `dim_k(m^n/m^{n+1})` for `n = 0, 1, ...` until stable.
    pub hilbert: Vec<usize>,
    pub multiplicity: usize,
    pub embedding_dimension: usize,
    pub cm_type: usize,
    /// Set when `cm_type` is the conventional value 1 for a DVR.
    pub type_is_dvr_convention: bool,
    pub gorenstein: bool,
    pub almost_gorenstein: AlmostGorenstein,
    /// `m·K[[t]] ⊆ R`.
    pub max_ideal_is_v_ideal: bool,
}

pub struct LocalRing<F: Field> {
    lat: Lattice<F>,
    kind: RingKind,
    maximal: Lattice<F>,
    residue_degree: usize,
    invariants: OnceLock<Result<RingInvariants, RingError>>,
}

impl<F: Field> Clone for LocalRing<F> {
    fn clone(&self) -> Self {
        let inv = OnceLock::new();
        if let Some(v) = self.invariants.get() {
            let _ = inv.set(v.clone());
        }
        LocalRing {
            lat: self.lat.clone(),
            kind: self.kind.clone(),
            maximal: self.maximal.clone(),
            residue_degree: self.residue_degree,
            invariants: inv,
        }
    }
}

impl<F: Field> fmt::Debug for LocalRing<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LocalRing({:?}, {})", self.kind, self.lat.describe())
    }
}

impl<F: Field> PartialEq for LocalRing<F> {
    fn eq(&self, other: &Self) -> bool {
        self.lat == other.lat
    }
}

/// Repeats `L ← L + L·L` until stable.
pub fn multiplicative_closure<F: Field>(lat: &Lattice<F>) -> Lattice<F> {
    let mut cur = lat.clone();
    loop {
        let next = cur.sum(&cur.product(&cur));
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

impl<F: Field> LocalRing<F> {
    /// Certifies that `lat` is a ring between `k` and `K[[t]]` with a conductor.
    pub fn from_lattice(lat: Lattice<F>, kind: RingKind) -> Result<Self, RingError> {
        let amb = lat.ambient().clone();
        if lat.cond().is_none() {
            return Err(RingError::NotARing("no conductor".into()));
        }
        if lat.vmin() != Some(0) {
            return Err(RingError::NotARing(
                "not contained in K[[t]] or missing 1".into(),
            ));
        }
        if !lat.member(&TruncatedSeries::t_power(&amb, 0))? {
            return Err(RingError::NotARing("1 is not a member".into()));
        }
        if lat.product(&lat) != lat {
            return Err(RingError::NotARing(
                "not closed under multiplication".into(),
            ));
        }
        let maximal = lat.intersect(&Lattice::tail_from(&amb, 1));
        let residue_degree = lat.colength(&maximal)?;
        Ok(LocalRing {
            lat,
            kind,
            maximal,
            residue_degree,
            invariants: OnceLock::new(),
        })
    }

    pub fn semigroup_ring(
        amb: &Arc<Ambient<F>>,
        s: &NumericalSemigroup,
    ) -> Result<Self, RingError> {
        let gens: Vec<TruncatedSeries<F::Elem>> = s
            .small_elements()
            .into_iter()
            .map(|x| TruncatedSeries::t_power(amb, x as i64))
            .collect();
        let lat = Lattice::span(amb, &gens, Some(s.conductor() as i64))?;
        let r = LocalRing::from_lattice(lat, RingKind::Semigroup(s.clone()))?;
        debug_assert_eq!(r.conductor(), s.conductor() as i64);
        Ok(r)
    }

    /// The complete `k`-subalgebra generated by `gens`. Constant terms must
    /// lie in `k`; the window is doubled until the conductor is certified
    /// (`h − c ≥` least positive valuation) or `cap` is reached.
    pub fn from_generators(
        amb: &Arc<Ambient<F>>,
        gens: &[TruncatedSeries<F::Elem>],
        cap: i64,
    ) -> Result<Self, RingError> {
        let k = &amb.k;
        let mut shifted = Vec::new();
        let mut prec_limit = i64::MAX;
        for g in gens {
            prec_limit = prec_limit.min(g.precision());
            if g.valuation().is_some_and(|v| v < 0) {
                return Err(RingError::NegativeValuation);
            }
            let c0 =
                g.coeff(amb, 0)
                    .ok_or(RingError::Lattice(LatticeError::InsufficientPrecision {
                        known: g.precision(),
                        needed: 1,
                    }))?;
            if c0[1..].iter().any(|c| !k.is_zero(c)) {
                return Err(RingError::ConstantNotInBase(g.format(amb)));
            }
            let h = g.sub(amb, &TruncatedSeries::monomial(amb, 0, c0));
            if h.valuation().is_some() {
                shifted.push(h);
            }
        }
        let Some(e) = shifted.iter().filter_map(|g| g.valuation()).min() else {
            return Err(RingError::InfiniteColength { gcd: 0 });
        };
        // Exact generators supported on multiples of g > 1 lie in k[[t^g]].
        if shifted.iter().all(|g| g.is_exact()) {
            let support = shifted.iter().flat_map(|g| {
                g.coeffs()
                    .chunks(amb.d())
                    .enumerate()
                    .filter(|(_, c)| c.iter().any(|x| !k.is_zero(x)))
                    .map(move |(i, _)| g.lo() + i as i64)
            });
            let gcd = support.fold(0i64, |a, b| a.gcd(&b));
            if gcd > 1 {
                return Err(RingError::InfiniteColength { gcd });
            }
        }
        let names = gens.iter().map(|g| g.format(amb)).collect();
        let mut h = (4 * e).max(8);
        loop {
            let window = h.min(prec_limit).min(cap.max(e + 1));
            let mut spanning = vec![TruncatedSeries::t_power(amb, 0)];
            spanning.extend(shifted.iter().map(|g| g.truncate(amb, window)));
            let lat = multiplicative_closure(&Lattice::span(amb, &spanning, Some(window))?);
            let c = lat.cond().expect("tail present");
            if window - c >= e {
                return LocalRing::from_lattice(lat, RingKind::Generators(names));
            }
            let gcd = lat
                .pivots()
                .iter()
                .map(|&p| lat.lo() + (p / amb.d()) as i64)
                .fold(0i64, |a, b| a.gcd(&b));
            if window >= prec_limit {
                return Err(RingError::Lattice(LatticeError::InsufficientPrecision {
                    known: prec_limit,
                    needed: c + e,
                }));
            }
            if window >= cap {
                return Err(RingError::NoStabilization { window, gcd });
            }
            h *= 2;
        }
    }

    /// `k + t·K[[t]]` for the ambient `K/k`.
    pub fn residue_extension(amb: &Arc<Ambient<F>>) -> Result<Self, RingError> {
        if amb.d() < 2 {
            return Err(RingError::NotAnExtension);
        }
        let lat = Lattice::span(amb, &[TruncatedSeries::t_power(amb, 0)], Some(1))?;
        LocalRing::from_lattice(lat, RingKind::ResidueExtension(amb.descriptor()))
    }

    /// The smallest ring containing `self` and `f` (which must lie in `K[[t]]`).
    pub fn adjoin(&self, f: &TruncatedSeries<F::Elem>) -> Result<Self, RingError> {
        let fl = self.lat.scale(f)?;
        let lat = multiplicative_closure(&self.lat.sum(&fl));
        LocalRing::from_lattice(lat, RingKind::Overring)
    }

    pub fn lattice(&self) -> &Lattice<F> {
        &self.lat
    }

    pub fn ambient(&self) -> &Arc<Ambient<F>> {
        self.lat.ambient()
    }

    pub fn kind(&self) -> &RingKind {
        &self.kind
    }

    pub fn maximal_ideal(&self) -> &Lattice<F> {
        &self.maximal
    }

    pub fn residue_degree(&self) -> usize {
        self.residue_degree
    }

    pub fn conductor(&self) -> i64 {
        self.lat.cond().expect("rings carry a conductor")
    }

    /// `V = K[[t]]`.
    pub fn normalization(&self) -> Lattice<F> {
        Lattice::power_series(self.ambient())
    }

    /// `C = R : V`.
    pub fn conductor_ideal(&self) -> Lattice<F> {
        self.lat
            .colon(&self.normalization())
            .expect("ring has a conductor")
    }

    pub fn is_dvr(&self) -> bool {
        self.lat == self.normalization()
    }

    /// The value semigroup, when `R` is spanned by monomials over `K = k`.
    pub fn monomial_semigroup(&self) -> Option<NumericalSemigroup> {
        if let RingKind::Semigroup(s) = &self.kind {
            return Some(s.clone());
        }
        if self.ambient().d() != 1 {
            return None;
        }
        let k = &self.ambient().k;
        if !self
            .lat
            .rows()
            .iter()
            .all(|r| r.iter().filter(|c| !k.is_zero(c)).count() == 1)
        {
            return None;
        }
        let mut gens: Vec<u64> = self
            .lat
            .pivots()
            .iter()
            .map(|&p| p as u64)
            .filter(|&x| x > 0)
            .collect();
        let c = self.conductor() as u64;
        gens.extend(c.max(1)..=2 * c.max(1));
        NumericalSemigroup::new(&gens).ok()
    }

    /// The ideal generated by `gens`.
    pub fn ideal(&self, gens: &[TruncatedSeries<F::Elem>]) -> Result<Lattice<F>, RingError> {
        let span = Lattice::span(self.ambient(), gens, None)?;
        if span.is_zero() {
            return Err(RingError::Lattice(LatticeError::ZeroDivisor));
        }
        Ok(self.lat.product(&span))
    }

    /// Whether `lat` is a nonzero `R`-submodule of `K((t))` with a conductor.
    pub fn is_fractional_ideal(&self, lat: &Lattice<F>) -> bool {
        !lat.is_zero() && lat.cond().is_some() && lat.contains(&self.lat.product(lat))
    }

    pub fn invariants(&self) -> Result<RingInvariants, RingError> {
        self.invariants
            .get_or_init(|| self.compute_invariants())
            .clone()
    }

    pub fn multiplicity(&self) -> Result<usize, RingError> {
        Ok(self.invariants()?.multiplicity)
    }

    pub fn cm_type(&self) -> Result<usize, RingError> {
        Ok(self.invariants()?.cm_type)
    }

    pub fn is_gorenstein(&self) -> Result<bool, RingError> {
        Ok(self.invariants()?.gorenstein)
    }

    fn compute_invariants(&self) -> Result<RingInvariants, RingError> {
        let c = self.conductor();
        let rd = self.residue_degree;
        let m = &self.maximal;
        let cap = (2 * c + 8) as usize;
        let mut hilbert = vec![rd];
        let mut pw = m.clone();
        let mut m2 = None;
        for n in 1..=cap {
            let next = pw.product(m);
            if n == 1 {
                m2 = Some(next.clone());
            }
            hilbert.push(pw.colength(&next)?);
            let stable = n as i64 >= c.max(1) && hilbert.len() >= 3 && hilbert[n] == hilbert[n - 1];
            if stable {
                break;
            }
            if n == cap {
                return Err(RingError::HilbertUnstable(n));
            }
            pw = next;
        }
        let stable_value = *hilbert.last().unwrap();
        assert_eq!(
            stable_value % rd,
            0,
            "Hilbert function not a multiple of the residue degree"
        );
        let multiplicity = stable_value / rd;
        // e(R) = (least positive value) · [K : R/m]
        let by_value = m.vmin().expect("m is nonzero") as usize * self.ambient().d() / rd;
        assert_eq!(multiplicity, by_value, "multiplicity cross-check failed");
        let embedding_dimension = m.colength(m2.as_ref().unwrap())? / rd;
        let (cm_type, type_is_dvr_convention) = if multiplicity == 1 {
            (1, true)
        } else {
            let rm = self.lat.colon(m)?;
            (rm.colength(&self.lat)? / rd, false)
        };
        let gorenstein = cm_type == 1;
        let v = self.normalization();
        let max_ideal_is_v_ideal = self.lat.contains(&m.product(&v));
        let almost_gorenstein = if let Some(s) = self.monomial_semigroup() {
            if s.is_almost_symmetric() {
                AlmostGorenstein::True
            } else {
                AlmostGorenstein::False
            }
        } else if gorenstein || max_ideal_is_v_ideal {
            AlmostGorenstein::True
        } else {
            AlmostGorenstein::Undecided
        };
        if let Some(s) = self.monomial_semigroup() {
            assert_eq!(
                multiplicity as u64,
                s.multiplicity(),
                "semigroup multiplicity mismatch"
            );
            assert_eq!(cm_type, s.semigroup_type(), "semigroup type mismatch");
            assert_eq!(gorenstein, s.is_symmetric(), "semigroup symmetry mismatch");
        }
        Ok(RingInvariants {
            conductor: c,
            residue_degree: rd,
            hilbert,
            multiplicity,
            embedding_dimension,
            cm_type,
            type_is_dvr_convention,
            gorenstein,
            almost_gorenstein,
            max_ideal_is_v_ideal,
        })
    }

    /// For a ring with `B = m:m` a DVR and `J(B) = m`: the degree
    /// `[B/J(B) : R/m]`, and whether no field lies strictly between.
    pub fn special_residue_degree(&self) -> Option<(usize, bool)> {
        let b = self.lat.colon(&self.maximal).ok()?;
        let v = self.normalization();
        if b != v || self.maximal != Lattice::tail_from(self.ambient(), 1) {
            return None;
        }
        let n = self.ambient().d() / self.residue_degree;
        Some((n, is_prime(n as u64)))
    }
}

impl LocalRing<FiniteField> {
    /// Builds the ambient `K/k` for a finite extension field and the ring
    /// `k + tK[[t]]` inside it.
    pub fn residue_extension_of(
        ext: &FiniteField,
    ) -> Result<(Arc<Ambient<FiniteField>>, Self), RingError> {
        let amb = Ambient::residue_extension(ext);
        let r = LocalRing::residue_extension(&amb)?;
        Ok((amb, r))
    }
}

/// An element of least valuation in a nonzero lattice.
pub fn min_valuation_element<F: Field>(lat: &Lattice<F>) -> TruncatedSeries<F::Elem> {
    let amb = lat.ambient();
    match lat.elements().into_iter().next() {
        Some(e) => e,
        None => TruncatedSeries::t_power(amb, lat.cond().expect("nonzero lattice")),
    }
}
