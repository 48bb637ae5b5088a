//! Laurent series over `K` with an explicit precision, and the ambient
//! description of `K` as a `k`-vector space.
//!
//! A coefficient of `K` is stored as `d = [K:k]` coordinates over `k` with
//! respect to the power basis `1, x, ..., x^{d-1}` of `K = k[x]/(f)`.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::scalars::{Field, FieldError, FiniteField};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("cannot parse series `{0}`: {1}")]
    Parse(String, String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("series known only below degree {known}, but degree {needed} is required")]
    Precision { known: i64, needed: i64 },
    #[error("series is not invertible (zero or unknown valuation)")]
    NotInvertible,
}

/// The coefficient field `K` of the ambient `K((t))` presented over the
/// base field `k`, together with engine-wide precision settings.
#[derive(Debug, Clone)]
pub struct Ambient<F: Field> {
    pub k: F,
    d: usize,
    /// Monic modulus of `K` over `k`, lowest coefficient first.
    modulus: Vec<F::Elem>,
    /// `x^{d+i}` reduced modulo the modulus, for `0 <= i < d - 1`.
    high_powers: Vec<Vec<F::Elem>>,
    guard: i64,
    ext_descriptor: Option<String>,
}

pub const DEFAULT_GUARD: i64 = 4;

impl<F: Field> Ambient<F> {
    /// `K = k`.
    pub fn new(k: F) -> Arc<Self> {
        let modulus = vec![k.zero(), k.one()];
        Arc::new(Ambient {
            k,
            d: 1,
            modulus,
            high_powers: Vec::new(),
            guard: DEFAULT_GUARD,
            ext_descriptor: None,
        })
    }

    /// `K = k[x]/(modulus)`; the modulus must be monic and irreducible.
    pub fn with_modulus(k: F, modulus: Vec<F::Elem>, descriptor: String) -> Arc<Self> {
        let d = modulus.len() - 1;
        assert!(d >= 1 && k.is_one(&modulus[d]), "modulus must be monic");
        let mut high_powers = Vec::new();
        // x^d = -(m_0 + ... + m_{d-1} x^{d-1})
        let mut cur: Vec<F::Elem> = modulus[..d].iter().map(|c| k.neg(c)).collect();
        for _ in 0..d.saturating_sub(1) {
            high_powers.push(cur.clone());
            // multiply by x
            let top = cur[d - 1].clone();
            let mut next = vec![k.zero(); d];
            for i in (1..d).rev() {
                next[i] = cur[i - 1].clone();
            }
            for i in 0..d {
                next[i] = k.sub(&next[i], &k.mul(&top, &modulus[i]));
            }
            cur = next;
        }
        Arc::new(Ambient {
            k,
            d,
            modulus,
            high_powers,
            guard: DEFAULT_GUARD,
            ext_descriptor: Some(descriptor),
        })
    }

    pub fn with_guard(&self, guard: i64) -> Arc<Self> {
        let mut a = self.clone();
        a.guard = guard.max(1);
        Arc::new(a)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn guard(&self) -> i64 {
        self.guard
    }

    pub fn modulus(&self) -> &[F::Elem] {
        &self.modulus
    }

    /// Descriptor of the pair `K/k`, e.g. `F8/F2`, or of `k` when `K = k`.
    pub fn descriptor(&self) -> String {
        self.ext_descriptor
            .clone()
            .unwrap_or_else(|| self.k.descriptor())
    }

    pub fn kzero(&self) -> Vec<F::Elem> {
        vec![self.k.zero(); self.d]
    }

    pub fn kone(&self) -> Vec<F::Elem> {
        self.kbasis(0)
    }

    /// The basis vector `x^i` of `K` over `k`.
    pub fn kbasis(&self, i: usize) -> Vec<F::Elem> {
        let mut v = self.kzero();
        v[i] = self.k.one();
        v
    }

    pub fn kis_zero(&self, a: &[F::Elem]) -> bool {
        a.iter().all(|c| self.k.is_zero(c))
    }

    pub fn kadd(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        a.iter().zip(b).map(|(x, y)| self.k.add(x, y)).collect()
    }

    pub fn kmul(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let k = &self.k;
        if self.d == 1 {
            return vec![k.mul(&a[0], &b[0])];
        }
        let d = self.d;
        let mut prod = vec![k.zero(); 2 * d - 1];
        for (i, x) in a.iter().enumerate() {
            if k.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !k.is_zero(y) {
                    prod[i + j] = k.add(&prod[i + j], &k.mul(x, y));
                }
            }
        }
        let mut out = prod[..d].to_vec();
        for (i, c) in prod[d..].iter().enumerate() {
            if k.is_zero(c) {
                continue;
            }
            for (o, h) in out.iter_mut().zip(&self.high_powers[i]) {
                *o = k.add(o, &k.mul(c, h));
            }
        }
        out
    }

    /// Inverse in `K`, by solving the linear system `a * y = 1` over `k`.
    pub fn kinv(&self, a: &[F::Elem]) -> Option<Vec<F::Elem>> {
        if self.kis_zero(a) {
            return None;
        }
        if self.d == 1 {
            return self.k.inv(&a[0]).map(|x| vec![x]);
        }
        let images: Vec<Vec<F::Elem>> =
            (0..self.d).map(|i| self.kmul(a, &self.kbasis(i))).collect();
        // augmented solve: find y with sum y_i images[i] = 1
        let mut rows: Vec<Vec<F::Elem>> = images
            .iter()
            .enumerate()
            .map(|(i, img)| {
                let mut r = img.clone();
                r.extend(self.kbasis(i));
                r
            })
            .collect();
        let target = self.kone();
        let ech = crate::linalg::Echelon::from_rows(&self.k, 2 * self.d, std::mem::take(&mut rows));
        // rows whose pivot is in the image part express basis images; combine
        let mut y = self.kzero();
        let mut residual: Vec<F::Elem> = target.clone();
        for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
            if p >= self.d || self.k.is_zero(&residual[p]) {
                continue;
            }
            let c = residual[p].clone();
            for i in 0..self.d {
                residual[i] = self.k.sub(&residual[i], &self.k.mul(&c, &row[i]));
                y[i] = self.k.add(&y[i], &self.k.mul(&c, &row[self.d + i]));
            }
        }
        debug_assert!(self.kis_zero(&residual));
        Some(y)
    }

    pub fn format_k(&self, a: &[F::Elem]) -> String {
        if self.d == 1 {
            return self.k.format_elem(&a[0]);
        }
        let terms: Vec<String> = a
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !self.k.is_zero(c))
            .map(|(i, c)| {
                let cs = self.k.format_elem(c);
                let mono = match i {
                    0 => String::new(),
                    1 => "x".to_string(),
                    _ => format!("x^{i}"),
                };
                if i == 0 {
                    cs
                } else if self.k.is_one(c) {
                    mono
                } else {
                    format!("{cs}{mono}")
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }

    /// Parses a `K`-element: a base-field element, or for `d > 1` a
    /// polynomial in `x` with integer coefficients.
    pub fn parse_k(&self, s: &str) -> Result<Vec<F::Elem>, SeriesError> {
        if self.d == 1 {
            return Ok(vec![self.k.parse_elem(s)?]);
        }
        let bad = |why: &str| SeriesError::Parse(s.to_string(), why.to_string());
        let mut acc = self.kzero();
        for term in s.split('+') {
            let term = term.trim();
            let (coef, power) = match term.find('x') {
                None => (term, 0usize),
                Some(pos) => {
                    let rest = term[pos + 1..].trim_start_matches('^');
                    let e = if rest.is_empty() {
                        1
                    } else {
                        rest.parse::<usize>()
                            .map_err(|_| bad("bad exponent of x"))?
                    };
                    (term[..pos].trim_end_matches('*'), e)
                }
            };
            let c = if coef.is_empty() {
                self.k.one()
            } else {
                self.k.parse_elem(coef)?
            };
            let mut mono = self.kone();
            for _ in 0..power {
                mono = self.kmul(&mono, &self.kbasis(1));
            }
            let term_val: Vec<F::Elem> = mono.iter().map(|m| self.k.mul(m, &c)).collect();
            acc = self.kadd(&acc, &term_val);
        }
        Ok(acc)
    }
}

impl Ambient<FiniteField> {
    /// `K = ext` presented over its prime field.
    pub fn residue_extension(ext: &FiniteField) -> Arc<Self> {
        let base = ext.prime_subfield();
        let modulus = ext.modulus().to_vec();
        Ambient::with_modulus(base, modulus, ext.descriptor())
    }
}

/// An element of `K((t))` known on the degree window `[lo, hi)`.
///
/// When `exact` is set, every coefficient at degree `>= hi` is zero (the
/// series is a Laurent polynomial); otherwise those coefficients are unknown.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries<E> {
    lo: i64,
    coeffs: Vec<E>,
    d: usize,
    exact: bool,
}

impl<E: Clone + PartialEq + fmt::Debug> fmt::Debug for TruncatedSeries<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Series[lo={}, hi={}, exact={}, {:?}]",
            self.lo,
            self.hi(),
            self.exact,
            self.coeffs
        )
    }
}

impl<E: Clone + PartialEq> TruncatedSeries<E> {
    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + (self.coeffs.len() / self.d) as i64
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// Degree below which the series is known (`i64::MAX` when exact).
    pub fn precision(&self) -> i64 {
        if self.exact {
            i64::MAX
        } else {
            self.hi()
        }
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }
}

impl<E: Clone + PartialEq + fmt::Debug> TruncatedSeries<E> {
    pub fn zero<F: Field<Elem = E>>(amb: &Ambient<F>) -> Self {
        TruncatedSeries {
            lo: 0,
            coeffs: Vec::new(),
            d: amb.d(),
            exact: true,
        }
    }

    /// `c * t^deg` for a `K`-coefficient `c`.
    pub fn monomial<F: Field<Elem = E>>(amb: &Ambient<F>, deg: i64, c: Vec<E>) -> Self {
        assert_eq!(c.len(), amb.d());
        TruncatedSeries {
            lo: deg,
            coeffs: c,
            d: amb.d(),
            exact: true,
        }
        .normalized(amb)
    }

    pub fn t_power<F: Field<Elem = E>>(amb: &Ambient<F>, deg: i64) -> Self {
        Self::monomial(amb, deg, amb.kone())
    }

    /// Builds a series from `k`-coordinates on `[lo, lo + len/d)`.
    pub fn from_vector<F: Field<Elem = E>>(
        amb: &Ambient<F>,
        lo: i64,
        coeffs: Vec<E>,
        exact: bool,
    ) -> Self {
        assert_eq!(coeffs.len() % amb.d(), 0);
        TruncatedSeries {
            lo,
            coeffs,
            d: amb.d(),
            exact,
        }
        .normalized(amb)
    }

    /// Drops leading and (for exact series) trailing zero coefficients.
    fn normalized<F: Field<Elem = E>>(mut self, amb: &Ambient<F>) -> Self {
        let d = self.d;
        let k = &amb.k;
        let first = self.coeffs.iter().position(|c| !k.is_zero(c));
        match first {
            None => {
                if self.exact {
                    self.lo = 0;
                    self.coeffs.clear();
                } else {
                    self.lo = self.hi();
                    self.coeffs.clear();
                }
            }
            Some(pos) => {
                let skip = pos / d;
                self.coeffs.drain(..skip * d);
                self.lo += skip as i64;
                if self.exact {
                    let last = self.coeffs.iter().rposition(|c| !k.is_zero(c)).unwrap();
                    self.coeffs.truncate((last / d + 1) * d);
                }
            }
        }
        self
    }

    /// The coefficient at `deg`, or `None` if it is beyond the known window.
    pub fn coeff<F: Field<Elem = E>>(&self, amb: &Ambient<F>, deg: i64) -> Option<Vec<E>> {
        if deg < self.lo {
            return Some(amb.kzero());
        }
        if deg >= self.hi() {
            return if self.exact { Some(amb.kzero()) } else { None };
        }
        let i = ((deg - self.lo) as usize) * self.d;
        Some(self.coeffs[i..i + self.d].to_vec())
    }

    /// Least degree with a nonzero coefficient; `None` for the exact zero
    /// series or a truncated series with no known nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.lo)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.exact && self.coeffs.is_empty()
    }

    /// `k`-coordinates on `[lo, hi)`. Fails if the series is not known up to
    /// `hi` or has support below `lo`.
    pub fn to_vector<F: Field<Elem = E>>(
        &self,
        amb: &Ambient<F>,
        lo: i64,
        hi: i64,
    ) -> Result<Vec<E>, SeriesError> {
        if hi > self.precision() {
            return Err(SeriesError::Precision {
                known: self.precision(),
                needed: hi,
            });
        }
        if let Some(v) = self.valuation() {
            if v < lo {
                return Err(SeriesError::Precision {
                    known: v,
                    needed: lo,
                });
            }
        }
        let d = self.d;
        let mut out = vec![amb.k.zero(); ((hi - lo).max(0) as usize) * d];
        for (i, c) in self.coeffs.iter().enumerate() {
            let deg = self.lo + (i / d) as i64;
            if deg >= hi {
                break;
            }
            if deg >= lo {
                out[((deg - lo) as usize) * d + i % d] = c.clone();
            }
        }
        Ok(out)
    }

    /// Forgets all coefficients from degree `hi` on.
    pub fn truncate<F: Field<Elem = E>>(&self, amb: &Ambient<F>, hi: i64) -> Self {
        if hi >= self.hi() && !self.exact {
            return self.clone();
        }
        let keep = ((hi - self.lo).max(0) as usize * self.d).min(self.coeffs.len());
        let mut coeffs = self.coeffs[..keep].to_vec();
        let cur_hi = self.lo + (keep / self.d) as i64;
        if cur_hi < hi {
            coeffs.resize(((hi - self.lo).max(0) as usize) * self.d, amb.k.zero());
        }
        TruncatedSeries {
            lo: self.lo.min(hi),
            coeffs,
            d: self.d,
            exact: false,
        }
        .normalized(amb)
    }

    pub fn shift<F: Field<Elem = E>>(&self, _amb: &Ambient<F>, s: i64) -> Self {
        let mut out = self.clone();
        out.lo += s;
        out
    }

    pub fn scale<F: Field<Elem = E>>(&self, amb: &Ambient<F>, c: &E) -> Self {
        TruncatedSeries {
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|x| amb.k.mul(x, c)).collect(),
            d: self.d,
            exact: self.exact,
        }
        .normalized(amb)
    }

    pub fn neg<F: Field<Elem = E>>(&self, amb: &Ambient<F>) -> Self {
        TruncatedSeries {
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|x| amb.k.neg(x)).collect(),
            d: self.d,
            exact: self.exact,
        }
    }

    pub fn add<F: Field<Elem = E>>(&self, amb: &Ambient<F>, other: &Self) -> Self {
        let prec = self.precision().min(other.precision());
        let exact = prec == i64::MAX;
        let lo = match (self.valuation(), other.valuation()) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => 0,
        }
        .min(if exact { i64::MAX } else { prec });
        let hi = if exact {
            self.hi().max(other.hi()).max(lo)
        } else {
            prec
        };
        let a = self.to_vector(amb, lo, hi).expect("window covers both");
        let b = other.to_vector(amb, lo, hi).expect("window covers both");
        let coeffs = a.iter().zip(&b).map(|(x, y)| amb.k.add(x, y)).collect();
        TruncatedSeries::from_vector(amb, lo, coeffs, exact)
    }

    pub fn sub<F: Field<Elem = E>>(&self, amb: &Ambient<F>, other: &Self) -> Self {
        self.add(amb, &other.neg(amb))
    }

    /// Product with honest precision: if `a` is known below `h1` with
    /// valuation `v1` and `b` below `h2` with valuation `v2`, the product is
    /// known below `min(v1 + h2, v2 + h1)`.
    pub fn mul<F: Field<Elem = E>>(&self, amb: &Ambient<F>, other: &Self) -> Self {
        let d = self.d;
        let prec = match (self.valuation(), other.valuation()) {
            _ if self.exact && other.exact => i64::MAX,
            (Some(v1), Some(v2)) => {
                let p1 = if self.exact {
                    i64::MAX
                } else {
                    self.hi().saturating_add(v2)
                };
                let p2 = if other.exact {
                    i64::MAX
                } else {
                    other.hi().saturating_add(v1)
                };
                p1.min(p2)
            }
            (None, Some(v2)) => {
                if self.exact {
                    i64::MAX
                } else {
                    self.hi() + v2
                }
            }
            (Some(v1), None) => {
                if other.exact {
                    i64::MAX
                } else {
                    other.hi() + v1
                }
            }
            (None, None) => {
                if self.exact || other.exact {
                    i64::MAX
                } else {
                    self.hi() + other.hi()
                }
            }
        };
        if self.is_zero() || other.is_zero() {
            return TruncatedSeries::zero(amb);
        }
        let (Some(v1), Some(v2)) = (self.valuation(), other.valuation()) else {
            // one factor has no known nonzero coefficient
            let lo = prec;
            return TruncatedSeries {
                lo,
                coeffs: Vec::new(),
                d,
                exact: false,
            };
        };
        let lo = v1 + v2;
        let full_hi = self.hi() + other.hi() - 1;
        let hi = if prec == i64::MAX { full_hi } else { prec };
        let n = (hi - lo).max(0) as usize;
        let mut coeffs = vec![amb.k.zero(); n * d];
        let na = self.coeffs.len() / d;
        let nb = other.coeffs.len() / d;
        for i in 0..na {
            let a = &self.coeffs[i * d..(i + 1) * d];
            if amb.kis_zero(a) {
                continue;
            }
            for j in 0..nb {
                let deg = i + j;
                if deg >= n {
                    break;
                }
                let b = &other.coeffs[j * d..(j + 1) * d];
                if amb.kis_zero(b) {
                    continue;
                }
                let p = amb.kmul(a, b);
                for (c, x) in coeffs[deg * d..(deg + 1) * d].iter_mut().zip(&p) {
                    *c = amb.k.add(c, x);
                }
            }
        }
        TruncatedSeries::from_vector(amb, lo, coeffs, prec == i64::MAX)
    }

    /// Multiplicative inverse known below `prec` (a degree).
    pub fn inverse<F: Field<Elem = E>>(
        &self,
        amb: &Ambient<F>,
        prec: i64,
    ) -> Result<Self, SeriesError> {
        let v = self.valuation().ok_or(SeriesError::NotInvertible)?;
        // u = t^{-v} * self is a unit; need u known to relative precision prec + v
        let rel = prec + v;
        if rel > self.precision() - v && !self.exact {
            return Err(SeriesError::Precision {
                known: self.precision(),
                needed: rel + v,
            });
        }
        let n = (rel.max(0)) as usize;
        let d = self.d;
        let u: Vec<Vec<E>> = (0..n)
            .map(|i| self.coeff(amb, v + i as i64).unwrap_or_else(|| amb.kzero()))
            .collect();
        let u0_inv = amb.kinv(&u[0]).ok_or(SeriesError::NotInvertible)?;
        let mut w: Vec<Vec<E>> = Vec::with_capacity(n);
        for i in 0..n {
            if i == 0 {
                w.push(u0_inv.clone());
                continue;
            }
            let mut acc = amb.kzero();
            for j in 1..=i {
                let p = amb.kmul(&u[j], &w[i - j]);
                acc = amb.kadd(&acc, &p);
            }
            let neg: Vec<E> = acc.iter().map(|c| amb.k.neg(c)).collect();
            w.push(amb.kmul(&neg, &u0_inv));
        }
        let coeffs: Vec<E> = w.into_iter().flatten().collect();
        let _ = d;
        Ok(TruncatedSeries::from_vector(amb, -v, coeffs, false))
    }

    /// Parses sums of terms like `t4-1t5`, `2t3`, `1`, `(x+1)t^2`, `t^-1`.
    pub fn parse<F: Field<Elem = E>>(amb: &Ambient<F>, s: &str) -> Result<Self, SeriesError> {
        let err = |why: &str| SeriesError::Parse(s.to_string(), why.to_string());
        let src: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if src.is_empty() {
            return Err(err("empty"));
        }
        let mut acc = TruncatedSeries::zero(amb);
        let mut i = 0;
        while i < src.len() {
            let mut negative = false;
            if src[i] == '+' || src[i] == '-' {
                negative = src[i] == '-';
                i += 1;
            } else if i > 0 {
                return Err(err("expected + or -"));
            }
            // coefficient
            let coef: Vec<E> = if i < src.len() && src[i] == '(' {
                let close = src[i..]
                    .iter()
                    .position(|&c| c == ')')
                    .ok_or_else(|| err("unclosed parenthesis"))?;
                let inner: String = src[i + 1..i + close].iter().collect();
                i += close + 1;
                amb.parse_k(&inner)?
            } else {
                let start = i;
                while i < src.len() && (src[i].is_ascii_digit() || src[i] == '/') {
                    i += 1;
                }
                let text: String = src[start..i].iter().collect();
                if text.is_empty() {
                    amb.kone()
                } else {
                    amb.parse_k(&text)?
                }
            };
            let mut deg = 0i64;
            if i < src.len() && src[i] == 't' {
                i += 1;
                let mut exp_text = String::new();
                if i < src.len() && src[i] == '^' {
                    i += 1;
                    if i < src.len() && src[i] == '-' {
                        exp_text.push('-');
                        i += 1;
                    }
                }
                while i < src.len() && src[i].is_ascii_digit() {
                    exp_text.push(src[i]);
                    i += 1;
                }
                deg = if exp_text.is_empty() {
                    1
                } else {
                    exp_text.parse().map_err(|_| err("bad exponent"))?
                };
            }
            let mut term = TruncatedSeries::monomial(amb, deg, coef);
            if negative {
                term = term.neg(amb);
            }
            acc = acc.add(amb, &term);
        }
        Ok(acc)
    }

    pub fn format<F: Field<Elem = E>>(&self, amb: &Ambient<F>) -> String {
        let d = self.d;
        let mut parts: Vec<String> = Vec::new();
        for (i, chunk) in self.coeffs.chunks(d).enumerate() {
            if amb.kis_zero(chunk) {
                continue;
            }
            let deg = self.lo + i as i64;
            let mono = match deg {
                0 => String::new(),
                1 => "t".to_string(),
                e if e < 0 => format!("t^{e}"),
                e => format!("t{e}"),
            };
            let c = amb.format_k(chunk);
            let neg_one = d == 1 && amb.k.is_one(&amb.k.neg(&chunk[0])) && !amb.k.is_one(&chunk[0]);
            let coef = if d > 1 && c.contains(['+', 'x']) {
                format!("({c})")
            } else {
                c
            };
            let term = if deg == 0 {
                coef
            } else if amb.kis_zero(&amb.kadd(
                chunk,
                &amb.kone().iter().map(|x| amb.k.neg(x)).collect::<Vec<_>>(),
            )) {
                mono
            } else if neg_one {
                format!("-{mono}")
            } else {
                format!("{coef}{mono}")
            };
            parts.push(term);
        }
        let mut out = String::new();
        for (i, p) in parts.iter().enumerate() {
            if i > 0 && !p.starts_with('-') {
                out.push('+');
            }
            out.push_str(p);
        }
        if out.is_empty() {
            out.push('0');
        }
        if !self.exact {
            out.push_str(&format!("+O(t^{})", self.hi()));
        }
        out
    }
}
