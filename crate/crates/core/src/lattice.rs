//! Exact `k`-lattices in `K((t))`.
//!
//! A lattice is stored as `span_k(core rows) + t^cond K[[t]]`, where the
//! core rows are Laurent polynomials supported on `[vmin, cond)` and kept in
//! reduced row-echelon form. `cond` is always the true conductor (the least
//! `c` with `t^c K[[t]]` inside the lattice) and `vmin` the true minimal
//! valuation, so two lattices are equal iff `(vmin, cond, rows)` agree.
//! A lattice without a tail is an exact finite-dimensional span.
//!
//! Every row is a genuine element of the lattice, not a truncation, so the
//! window bound `hi` carried along is bookkeeping only: no answer depends
//! on it.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{intersect, kernel_of_images, Echelon};
use crate::scalars::Field;
use crate::series::{Ambient, SeriesError, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("insufficient precision: known below degree {known}, need {needed}")]
    InsufficientPrecision { known: i64, needed: i64 },
    #[error("operation needs a lattice with a certified conductor")]
    NoConductor,
    #[error("colon by the zero lattice")]
    ZeroDivisor,
    #[error("lattice is not contained in the larger one")]
    NotContained,
    #[error("colength of a lattice with a conductor over one without is infinite")]
    InfiniteColength,
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("malformed lattice data: {0}")]
    Malformed(String),
}

impl From<crate::scalars::FieldError> for LatticeError {
    fn from(e: crate::scalars::FieldError) -> Self {
        LatticeError::Series(SeriesError::Field(e))
    }
}

pub type Elements<F> = Vec<TruncatedSeries<<F as Field>::Elem>>;

pub struct Lattice<F: Field> {
    amb: Arc<Ambient<F>>,
    lo: i64,
    top: i64,
    tail: bool,
    ech: Echelon<F::Elem>,
    hi: i64,
}

impl<F: Field> Clone for Lattice<F> {
    fn clone(&self) -> Self {
        Lattice {
            amb: self.amb.clone(),
            lo: self.lo,
            top: self.top,
            tail: self.tail,
            ech: self.ech.clone(),
            hi: self.hi,
        }
    }
}

impl<F: Field> PartialEq for Lattice<F> {
    fn eq(&self, other: &Self) -> bool {
        self.lo == other.lo
            && self.top == other.top
            && self.tail == other.tail
            && self.ech.rows == other.ech.rows
    }
}

impl<F: Field> Eq for Lattice<F> {}

impl<F: Field> std::hash::Hash for Lattice<F> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.lo.hash(state);
        self.top.hash(state);
        self.tail.hash(state);
        self.ech.rows.hash(state);
    }
}

impl<F: Field> fmt::Debug for Lattice<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lattice({})", self.describe())
    }
}

/// Serialized form: field, window, bounds and rows as degree -> coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeJson {
    pub field: String,
    pub window: (i64, i64),
    pub vmin: Option<i64>,
    pub cond: Option<i64>,
    pub rows: Vec<BTreeMap<i64, Vec<String>>>,
}

impl<F: Field> Lattice<F> {
    /// Canonical form of `span(rows) (+ t^top K[[t]] if tail)`, rows given
    /// as coordinate vectors on `[lo, top)`.
    pub(crate) fn normalize(
        amb: &Arc<Ambient<F>>,
        lo: i64,
        top: i64,
        rows: Vec<Vec<F::Elem>>,
        tail: bool,
    ) -> Self {
        let d = amb.d();
        let k = &amb.k;
        let ncols = ((top - lo).max(0) as usize) * d;
        let mut ech = Echelon::from_rows(k, ncols, rows);
        let mut lo = lo;
        let mut top = top.max(lo);
        if tail {
            // peel off full degree slices just below the tail
            while top > lo {
                let start = ech.ncols - d;
                let full = ech.pivots.iter().filter(|&&p| p >= start).count() == d;
                if !full {
                    break;
                }
                let keep = ech.rank() - d;
                ech.rows.truncate(keep);
                ech.pivots.truncate(keep);
                for r in ech.rows.iter_mut() {
                    r.truncate(start);
                }
                ech.ncols = start;
                top -= 1;
            }
        } else {
            let last = ech
                .rows
                .iter()
                .filter_map(|r| r.iter().rposition(|c| !k.is_zero(c)))
                .max();
            match last {
                None => {
                    return Lattice::zero(amb);
                }
                Some(col) => {
                    let n = (col / d + 1) * d;
                    for r in ech.rows.iter_mut() {
                        r.truncate(n);
                    }
                    ech.ncols = n;
                    top = lo + (n / d) as i64;
                }
            }
        }
        if ech.rank() == 0 {
            lo = top;
            ech = Echelon::empty(0);
        } else {
            let skip = ech.pivots[0] / d;
            if skip > 0 {
                for r in ech.rows.iter_mut() {
                    r.drain(..skip * d);
                }
                for p in ech.pivots.iter_mut() {
                    *p -= skip * d;
                }
                ech.ncols -= skip * d;
                lo += skip as i64;
            }
        }
        Lattice {
            amb: amb.clone(),
            lo,
            top,
            tail,
            ech,
            hi: top + amb.guard(),
        }
    }

    pub fn zero(amb: &Arc<Ambient<F>>) -> Self {
        Lattice {
            amb: amb.clone(),
            lo: 0,
            top: 0,
            tail: false,
            ech: Echelon::empty(0),
            hi: amb.guard(),
        }
    }

    /// `t^c K[[t]]`.
    pub fn tail_from(amb: &Arc<Ambient<F>>, c: i64) -> Self {
        Lattice::normalize(amb, c, c, Vec::new(), true)
    }

    /// `K[[t]]`.
    pub fn power_series(amb: &Arc<Ambient<F>>) -> Self {
        Lattice::tail_from(amb, 0)
    }

    /// The `k`-span of `gens`, plus `t^tail K[[t]]` when given. Truncated
    /// generators are accepted only if known up to the tail.
    pub fn span(
        amb: &Arc<Ambient<F>>,
        gens: &[TruncatedSeries<F::Elem>],
        tail: Option<i64>,
    ) -> Result<Self, LatticeError> {
        let nonzero: Vec<&TruncatedSeries<F::Elem>> =
            gens.iter().filter(|g| g.valuation().is_some()).collect();
        for g in gens {
            match tail {
                None if !g.is_exact() => {
                    return Err(LatticeError::InsufficientPrecision {
                        known: g.precision(),
                        needed: i64::MAX,
                    })
                }
                Some(c) if g.precision() < c => {
                    return Err(LatticeError::InsufficientPrecision {
                        known: g.precision(),
                        needed: c,
                    })
                }
                _ => {}
            }
        }
        let mut lo = nonzero
            .iter()
            .filter_map(|g| g.valuation())
            .min()
            .unwrap_or(0);
        let top = match tail {
            Some(c) => {
                lo = lo.min(c);
                c
            }
            None => nonzero.iter().map(|g| g.hi()).max().unwrap_or(lo),
        };
        let mut rows = Vec::new();
        for g in nonzero {
            if let Some(v) = g.valuation() {
                if v >= top {
                    continue;
                }
            }
            rows.push(g.truncate(amb, top).to_vector(amb, lo, top)?);
        }
        Ok(Lattice::normalize(amb, lo, top, rows, tail.is_some()))
    }

    pub fn ambient(&self) -> &Arc<Ambient<F>> {
        &self.amb
    }

    pub fn is_zero(&self) -> bool {
        !self.tail && self.ech.rank() == 0
    }

    /// Least valuation of a nonzero element, `None` for the zero lattice.
    pub fn vmin(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.lo)
    }

    /// Least `c` with `t^c K[[t]]` inside, `None` if no tail.
    pub fn cond(&self) -> Option<i64> {
        self.tail.then_some(self.top)
    }

    /// Start of the stored window (equals `vmin` for nonzero lattices).
    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// End of the core window (the conductor, or the support bound).
    pub fn top(&self) -> i64 {
        self.top
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    /// Number of core rows, i.e. `dim_k(L / t^cond K[[t]])`.
    pub fn rank(&self) -> usize {
        self.ech.rank()
    }

    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.ech.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.ech.pivots
    }

    pub fn echelon(&self) -> &Echelon<F::Elem> {
        &self.ech
    }

    /// Widens the bookkeeping window. All answers are unchanged.
    pub fn refine_precision(&self, new_hi: i64) -> Self {
        let mut out = self.clone();
        out.hi = out.hi.max(new_hi);
        out
    }

    /// The core rows as exact series.
    pub fn elements(&self) -> Elements<F> {
        self.ech
            .rows
            .iter()
            .map(|r| TruncatedSeries::from_vector(&self.amb, self.lo, r.clone(), true))
            .collect()
    }

    /// A `k`-spanning set of elements, including `t^j x^i` for the first
    /// tail degrees up to `upto`.
    pub fn elements_upto(&self, upto: i64) -> Elements<F> {
        let mut out = self.elements();
        if self.tail {
            for j in self.top..upto {
                for i in 0..self.amb.d() {
                    out.push(TruncatedSeries::monomial(&self.amb, j, self.amb.kbasis(i)));
                }
            }
        }
        out
    }

    /// Coordinates of `f` on `[lo, top)`, assuming `v(f) >= lo`.
    fn coords_of(
        &self,
        f: &TruncatedSeries<F::Elem>,
        lo: i64,
        top: i64,
    ) -> Result<Vec<F::Elem>, LatticeError> {
        Ok(f.truncate(&self.amb, top).to_vector(&self.amb, lo, top)?)
    }

    pub fn member(&self, f: &TruncatedSeries<F::Elem>) -> Result<bool, LatticeError> {
        if f.is_zero() {
            return Ok(true);
        }
        let Some(v) = f.valuation() else {
            // no nonzero coefficient known below f.hi()
            if self.tail && f.hi() >= self.top && self.lo <= f.hi() {
                return Ok(true);
            }
            return Err(LatticeError::InsufficientPrecision {
                known: f.precision(),
                needed: self.top,
            });
        };
        if self.is_zero() || v < self.lo {
            return Ok(false);
        }
        if self.tail {
            if v >= self.top {
                return Ok(true);
            }
            if f.precision() < self.top {
                return Err(LatticeError::InsufficientPrecision {
                    known: f.precision(),
                    needed: self.top,
                });
            }
            let w = self.coords_of(f, self.lo, self.top)?;
            Ok(self.ech.contains(&self.amb.k, &w))
        } else {
            if !f.is_exact() {
                return Err(LatticeError::InsufficientPrecision {
                    known: f.precision(),
                    needed: i64::MAX,
                });
            }
            if f.hi() > self.top {
                return Ok(false);
            }
            let w = f.to_vector(&self.amb, self.lo, self.top)?;
            Ok(self.ech.contains(&self.amb.k, &w))
        }
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Self) -> bool {
        if other.is_zero() {
            return true;
        }
        if self.is_zero() {
            return false;
        }
        if other.tail && (!self.tail || self.top > other.top) {
            return false;
        }
        other
            .elements()
            .iter()
            .all(|e| self.member(e).expect("exact elements"))
    }

    /// Rows spanning `self` modulo `t^top`, as vectors on `[lo, top)`,
    /// including the tail slices in `[cond, top)`. Requires `lo <= vmin`.
    fn project(&self, lo: i64, top: i64) -> Vec<Vec<F::Elem>> {
        let d = self.amb.d();
        let width = ((top - lo).max(0) as usize) * d;
        let mut out = Vec::new();
        if self.is_zero() {
            return out;
        }
        let off = ((self.lo - lo) as usize) * d;
        for r in &self.ech.rows {
            let mut v = vec![self.amb.k.zero(); width];
            for (i, c) in r.iter().enumerate() {
                if off + i < width {
                    v[off + i] = c.clone();
                }
            }
            out.push(v);
        }
        if self.tail {
            for j in self.top.max(lo)..top {
                for i in 0..d {
                    let mut v = vec![self.amb.k.zero(); width];
                    v[((j - lo) as usize) * d + i] = self.amb.k.one();
                    out.push(v);
                }
            }
        }
        out
    }

    pub fn sum(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(other.lo);
        let tail = match (self.cond(), other.cond()) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        let top = tail.unwrap_or(self.top.max(other.top));
        let mut rows = self.project(lo, top);
        rows.extend(other.project(lo, top));
        Lattice::normalize(&self.amb, lo, top, rows, tail.is_some())
    }

    pub fn intersect(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Lattice::zero(&self.amb);
        }
        let lo = self.lo.min(other.lo);
        let top = self.top.max(other.top);
        let tail = self.tail && other.tail;
        let n = ((top - lo) as usize) * self.amb.d();
        let a = self.project(lo, top);
        let b = other.project(lo, top);
        let rows = intersect(&self.amb.k, n, &a, &b);
        Lattice::normalize(&self.amb, lo, top, rows, tail)
    }

    /// Product of two Laurent polynomials given as coordinate vectors,
    /// written into `out` (window starting at `out_lo`), truncated at the
    /// end of `out`.
    fn mul_rows_into(
        &self,
        a: &[F::Elem],
        alo: i64,
        b: &[F::Elem],
        blo: i64,
        out: &mut [F::Elem],
        out_lo: i64,
    ) {
        let amb = &self.amb;
        let d = amb.d();
        let out_deg = (out.len() / d) as i64;
        for (i, x) in a.chunks(d).enumerate() {
            if amb.kis_zero(x) {
                continue;
            }
            for (j, y) in b.chunks(d).enumerate() {
                let deg = alo + i as i64 + blo + j as i64 - out_lo;
                if deg >= out_deg {
                    break;
                }
                if amb.kis_zero(y) {
                    continue;
                }
                debug_assert!(deg >= 0);
                let p = amb.kmul(x, y);
                let at = (deg as usize) * d;
                for (o, c) in out[at..at + d].iter_mut().zip(&p) {
                    *o = amb.k.add(o, c);
                }
            }
        }
    }

    /// `X·Y`: the span of all products, plus the certified tail
    /// `t^B K[[t]]` with `B = min(cond X + vmin Y, cond Y + vmin X)`.
    pub fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Lattice::zero(&self.amb);
        }
        let d = self.amb.d();
        let bound = [
            self.cond().map(|c| c + other.lo),
            other.cond().map(|c| c + self.lo),
        ]
        .into_iter()
        .flatten()
        .min();
        let lo = self.lo + other.lo;
        let top = bound.unwrap_or(self.top + other.top - 1);
        let width = ((top - lo).max(0) as usize) * d;
        let mut rows = Vec::with_capacity(self.rank() * other.rank());
        for a in &self.ech.rows {
            for b in &other.ech.rows {
                let mut out = vec![self.amb.k.zero(); width];
                self.mul_rows_into(a, self.lo, b, other.lo, &mut out, lo);
                rows.push(out);
            }
        }
        Lattice::normalize(&self.amb, lo, top, rows, bound.is_some())
    }

    /// `f·X` for an exact nonzero series `f`.
    pub fn scale(&self, f: &TruncatedSeries<F::Elem>) -> Result<Self, LatticeError> {
        let fl = Lattice::span(&self.amb, std::slice::from_ref(f), None)?;
        Ok(fl.product(self))
    }

    /// `t^s·X`.
    pub fn shift(&self, s: i64) -> Self {
        let mut out = self.clone();
        if !out.is_zero() {
            out.lo += s;
            out.top += s;
            out.hi += s;
        }
        out
    }

    /// `X:Y = {f : f·Y ⊆ X}`.
    ///
    /// The unknown `f` lives on `[vmin X − vmin Y, cond X − vmin Y)`; above
    /// that window everything qualifies. Conditions are `f·y ∈ X` for the
    /// core rows `y` of `Y`, and, when `Y` has a tail, `f·t^j x^i ∈ X` for
    /// the tail degrees `j` that `f` can still push below `cond X`.
    pub fn colon(&self, other: &Self) -> Result<Self, LatticeError> {
        let Some(cx) = self.cond() else {
            return Err(LatticeError::NoConductor);
        };
        if other.is_zero() {
            return Err(LatticeError::ZeroDivisor);
        }
        let amb = &self.amb;
        let k = &amb.k;
        let d = amb.d();
        let (vx, vy) = (self.lo, other.lo);
        let flo = vx - vy;
        let fhi = cx - vy;
        if fhi <= flo {
            return Ok(Lattice::tail_from(amb, fhi));
        }
        let mut conds: Vec<(Vec<F::Elem>, i64)> =
            other.ech.rows.iter().map(|r| (r.clone(), vy)).collect();
        if let Some(cy) = other.cond() {
            for j in cy..(cx - vx + vy) {
                for i in 0..d {
                    conds.push((amb.kbasis(i), j));
                }
            }
        }
        let slot = ((cx - vx) as usize) * d;
        let nunk = ((fhi - flo) as usize) * d;
        let images: Vec<Vec<F::Elem>> = (0..nunk)
            .map(|u| {
                let e = amb.kbasis(u % d);
                let edeg = flo + (u / d) as i64;
                let mut img = Vec::with_capacity(conds.len() * slot);
                for (y, ylo) in &conds {
                    let mut out = vec![k.zero(); slot];
                    self.mul_rows_into(&e, edeg, y, *ylo, &mut out, vx);
                    self.ech.reduce(k, &mut out);
                    img.extend(out);
                }
                img
            })
            .collect();
        let ker = kernel_of_images(k, &images, conds.len() * slot);
        Ok(Lattice::normalize(amb, flo, fhi, ker, true))
    }

    /// `dim_k(self / sub)` for `sub ⊆ self`.
    pub fn colength(&self, sub: &Self) -> Result<usize, LatticeError> {
        if !self.contains(sub) {
            return Err(LatticeError::NotContained);
        }
        let d = self.amb.d() as i64;
        match (self.cond(), sub.cond()) {
            (Some(cx), Some(cy)) => {
                let n = self.rank() as i64 - sub.rank() as i64 + (cy - cx) * d;
                Ok(n as usize)
            }
            (None, None) => Ok(self.rank() - sub.rank()),
            (Some(_), None) => Err(LatticeError::InfiniteColength),
            (None, Some(_)) => unreachable!("containment checked"),
        }
    }

    /// A basis of `self / sub` for `sub ⊆ self`, as a [`Quotient`].
    pub fn quotient(&self, sub: &Self) -> Result<Quotient<F>, LatticeError> {
        if !self.contains(sub) {
            return Err(LatticeError::NotContained);
        }
        if self.tail != sub.tail {
            return Err(LatticeError::InfiniteColength);
        }
        let lo = self.lo.min(sub.lo);
        let top = self.top.max(sub.top);
        let n = ((top - lo).max(0) as usize) * self.amb.d();
        let mut ech = Echelon::from_rows(&self.amb.k, n, sub.project(lo, top));
        let mut reps = Vec::new();
        for v in self.project(lo, top) {
            if ech.insert(&self.amb.k, v.clone()) {
                reps.push(v);
            }
        }
        Ok(Quotient {
            base: sub.clone(),
            lo,
            top,
            reps,
        })
    }

    pub fn describe(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts: Vec<String> = self
            .elements()
            .iter()
            .map(|e| e.format(&self.amb))
            .collect();
        if self.tail {
            parts.push(match self.top {
                0 => "V".to_string(),
                1 => "tV".to_string(),
                c => format!("t{c}V"),
            });
        }
        format!("<{}>", parts.join(", "))
    }

    pub fn to_json(&self) -> LatticeJson {
        let d = self.amb.d();
        let rows = self
            .ech
            .rows
            .iter()
            .map(|r| {
                r.chunks(d)
                    .enumerate()
                    .filter(|(_, c)| !self.amb.kis_zero(c))
                    .map(|(i, c)| {
                        (
                            self.lo + i as i64,
                            c.iter().map(|x| self.amb.k.format_elem(x)).collect(),
                        )
                    })
                    .collect()
            })
            .collect();
        LatticeJson {
            field: self.amb.descriptor(),
            window: (self.lo, self.hi),
            vmin: self.vmin(),
            cond: self.cond(),
            rows,
        }
    }

    pub fn from_json(amb: &Arc<Ambient<F>>, json: &LatticeJson) -> Result<Self, LatticeError> {
        if json.field != amb.descriptor() {
            return Err(LatticeError::Malformed(format!(
                "field {} does not match {}",
                json.field,
                amb.descriptor()
            )));
        }
        let d = amb.d();
        let lo = json.window.0;
        let top = match json.cond {
            Some(c) => c,
            None => json
                .rows
                .iter()
                .flat_map(|r| r.keys().copied())
                .max()
                .map_or(lo, |m| m + 1),
        };
        let mut rows = Vec::new();
        for r in &json.rows {
            let mut v = vec![amb.k.zero(); ((top - lo).max(0) as usize) * d];
            for (&deg, coords) in r {
                if deg < lo || deg >= top || coords.len() != d {
                    return Err(LatticeError::Malformed(format!(
                        "row entry at degree {deg}"
                    )));
                }
                for (i, c) in coords.iter().enumerate() {
                    v[((deg - lo) as usize) * d + i] = amb.k.parse_elem(c)?;
                }
            }
            rows.push(v);
        }
        let mut lat = Lattice::normalize(amb, lo, top, rows, json.cond.is_some());
        lat.hi = lat.hi.max(json.window.1);
        if lat.vmin() != json.vmin {
            return Err(LatticeError::Malformed("vmin does not match rows".into()));
        }
        Ok(lat)
    }
}

/// Coordinates for `big / base`: lattices between `base` and `big` are
/// `base + span(combinations of reps)`.
pub struct Quotient<F: Field> {
    base: Lattice<F>,
    lo: i64,
    top: i64,
    reps: Vec<Vec<F::Elem>>,
}

impl<F: Field> Quotient<F> {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn base(&self) -> &Lattice<F> {
        &self.base
    }

    pub fn rep(&self, i: usize) -> TruncatedSeries<F::Elem> {
        TruncatedSeries::from_vector(self.base.ambient(), self.lo, self.reps[i].clone(), true)
    }

    /// `sum_j coeffs[j] * rep_j`.
    pub fn combination(&self, coeffs: &[F::Elem]) -> Vec<F::Elem> {
        let k = &self.base.ambient().k;
        let mut out = vec![k.zero(); self.reps.first().map_or(0, |r| r.len())];
        for (c, r) in coeffs.iter().zip(&self.reps) {
            if k.is_zero(c) {
                continue;
            }
            for (o, x) in out.iter_mut().zip(r) {
                *o = k.add(o, &k.mul(c, x));
            }
        }
        out
    }

    pub fn element(&self, coeffs: &[F::Elem]) -> TruncatedSeries<F::Elem> {
        TruncatedSeries::from_vector(self.base.ambient(), self.lo, self.combination(coeffs), true)
    }

    /// `base + span(rows · reps)` for a coefficient matrix `rows`.
    pub fn lift(&self, rows: &[Vec<F::Elem>]) -> Lattice<F> {
        let mut all = self.base.project(self.lo, self.top);
        all.extend(rows.iter().map(|r| self.combination(r)));
        Lattice::normalize(self.base.ambient(), self.lo, self.top, all, self.base.tail)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{FiniteField, Rationals};

    fn mono<F: Field>(amb: &Arc<Ambient<F>>, degs: &[i64]) -> Vec<TruncatedSeries<F::Elem>> {
        degs.iter()
            .map(|&e| TruncatedSeries::t_power(amb, e))
            .collect()
    }

    fn sg456<F: Field>(amb: &Arc<Ambient<F>>) -> Lattice<F> {
        Lattice::span(amb, &mono(amb, &[0, 4, 5, 6]), Some(8)).unwrap()
    }

    #[test]
    fn span_detects_conductor() {
        let amb = Ambient::new(Rationals);
        let l = Lattice::span(&amb, &mono(&amb, &[4, 5, 6, 7]), Some(8)).unwrap();
        assert_eq!(l, Lattice::tail_from(&amb, 4));
        assert_eq!(l.cond(), Some(4));
        let r = sg456(&amb);
        assert_eq!(r.cond(), Some(8));
        assert_eq!(r.rank(), 4);
    }

    #[test]
    fn membership() {
        let amb = Ambient::new(Rationals);
        let r = sg456(&amb);
        assert!(!r.member(&TruncatedSeries::t_power(&amb, 7)).unwrap());
        assert!(r.member(&TruncatedSeries::t_power(&amb, 9)).unwrap());
        assert!(r.member(&TruncatedSeries::zero(&amb)).unwrap());
        let f = TruncatedSeries::parse(&amb, "t4+t7")
            .unwrap()
            .truncate(&amb, 6);
        assert!(r.member(&f).is_err());
    }

    #[test]
    fn colon_by_normalization_is_conductor() {
        let amb = Ambient::new(FiniteField::prime(2).unwrap());
        let r = sg456(&amb);
        let v = Lattice::power_series(&amb);
        let c = r.colon(&v).unwrap();
        assert_eq!(c, Lattice::tail_from(&amb, 8));
        assert_eq!(r.colon(&r).unwrap(), r);
        assert_eq!(v.colength(&r).unwrap(), 4);
    }

    #[test]
    fn product_and_sum() {
        let amb = Ambient::new(Rationals);
        // m = t^3 V for <3,4,5>
        let m = Lattice::span(&amb, &mono(&amb, &[3, 4, 5]), Some(6)).unwrap();
        assert_eq!(m.product(&m), m.shift(3));
        let one = Lattice::span(&amb, &mono(&amb, &[0]), None).unwrap();
        assert_eq!(m.product(&one), m);
        let r = sg456(&amb);
        let s = r.sum(&Lattice::span(&amb, &mono(&amb, &[7]), None).unwrap());
        assert_eq!(s.colength(&r).unwrap(), 1);
        assert_ne!(s, r);
        assert_eq!(
            Lattice::tail_from(&amb, 8).sum(&Lattice::tail_from(&amb, 5)),
            Lattice::tail_from(&amb, 5)
        );
    }

    #[test]
    fn json_roundtrip() {
        let f8 = FiniteField::extension(2, 3, None).unwrap();
        let amb = Ambient::residue_extension(&f8);
        let g = TruncatedSeries::parse(&amb, "(x+1)t+t3").unwrap();
        let l = Lattice::span(&amb, &[g], Some(4)).unwrap();
        let j = l.to_json();
        let back = Lattice::from_json(&amb, &j).unwrap();
        assert_eq!(back, l);
        let text = serde_json::to_string(&j).unwrap();
        let j2: LatticeJson = serde_json::from_str(&text).unwrap();
        assert_eq!(j2, j);
    }
}
