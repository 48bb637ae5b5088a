//! Exact coefficient fields: the rationals, prime fields and small
//! extension fields `F_{p^n}`.
//!
//! Every engine type is generic over [`Field`]. A field value is a cheap,
//! shareable context (`Clone` is an `Arc` bump for finite fields) and
//! elements are plain canonical values, so two elements compare equal
//! exactly when they denote the same field element.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Largest field order for which we build log/exp tables.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("modulus {0:?} is not monic of degree {1}")]
    BadModulus(Vec<u32>, u32),
    #[error("modulus {0:?} is reducible over F_{1}")]
    ReducibleModulus(Vec<u32>, u32),
    #[error("field order {0} exceeds the supported maximum {MAX_FIELD_ORDER}")]
    SearchExhausted(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("coordinates over a base field are only defined for finite fields")]
    NoBaseField,
    #[error("cannot parse field descriptor `{0}`")]
    BadDescriptor(String),
    #[error("cannot parse field element `{0}`")]
    BadElement(String),
}

/// A field with canonical element representatives.
pub trait Field: Clone + Send + Sync + fmt::Debug + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + Ord + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// Number of elements, `None` for infinite fields.
    fn order(&self) -> Option<u64>;
    /// All elements in canonical order (zero first), for finite fields.
    fn elements(&self) -> Option<Vec<Self::Elem>>;
    fn format_elem(&self, a: &Self::Elem) -> String;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem, FieldError>;
    /// Short descriptor such as `Q`, `F2` or `F8/F2`.
    fn descriptor(&self) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, FieldError> {
        let bi = self.inv(b).ok_or(FieldError::DivisionByZero)?;
        Ok(self.mul(a, &bi))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// The field of rational numbers with arbitrary-precision entries.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn order(&self) -> Option<u64> {
        None
    }
    fn elements(&self) -> Option<Vec<BigRational>> {
        None
    }
    fn format_elem(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn parse_elem(&self, s: &str) -> Result<BigRational, FieldError> {
        let bad = || FieldError::BadElement(s.to_string());
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
                let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(FieldError::DivisionByZero);
                }
                Ok(BigRational::new(n, d))
            }
            None => Ok(BigRational::from_integer(
                BigInt::from_str(s).map_err(|_| bad())?,
            )),
        }
    }
    fn descriptor(&self) -> String {
        "Q".to_string()
    }
}

#[derive(Debug)]
struct FiniteInner {
    p: u32,
    n: u32,
    q: u32,
    /// Monic modulus, lowest coefficient first, length n + 1 (`[0, 1]` for prime fields).
    modulus: Vec<u32>,
    /// exp[i] = g^i for a primitive element g; empty for prime fields.
    exp: Vec<u32>,
    log: Vec<u32>,
    /// Addition table for small extension fields.
    add_table: Vec<u32>,
}

/// The finite field `F_{p^n}`. Elements are encoded as integers
/// `c_0 + c_1 p + ... + c_{n-1} p^{n-1}` for the residue class of
/// `c_0 + c_1 x + ... + c_{n-1} x^{n-1}` modulo the field's modulus.
#[derive(Clone)]
pub struct FiniteField(Arc<FiniteInner>);

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteField({})", self.descriptor())
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.modulus == other.0.modulus
    }
}
impl Eq for FiniteField {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Dense polynomials over F_p, lowest coefficient first, used only while
/// setting up extension fields.
mod fp_poly {
    pub fn trim(mut a: Vec<u32>) -> Vec<u32> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut r = trim(a.to_vec());
        let b = trim(b.to_vec());
        let db = b.len() - 1;
        let lead_inv = inv_mod(b[db], p);
        while r.len() > db {
            let dr = r.len() - 1;
            let c = (r[dr] as u64 * lead_inv as u64 % p as u64) as u32;
            for (i, &bc) in b.iter().enumerate() {
                let idx = dr - db + i;
                let sub = (c as u64 * bc as u64 % p as u64) as u32;
                r[idx] = (r[idx] + p - sub) % p;
            }
            r = trim(r);
        }
        r
    }

    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        trim(out.into_iter().map(|c| c as u32).collect())
    }

    pub fn inv_mod(a: u32, p: u32) -> u32 {
        let mut acc = 1u64;
        let mut base = a as u64 % p as u64;
        let mut e = p as u64 - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p as u64;
            }
            base = base * base % p as u64;
            e >>= 1;
        }
        acc as u32
    }

    /// Monic polynomial of the given degree whose lower coefficients are the
    /// base-p digits of `index`.
    pub fn monic_from_index(mut index: u64, degree: usize, p: u32) -> Vec<u32> {
        let mut coeffs = Vec::with_capacity(degree + 1);
        for _ in 0..degree {
            coeffs.push((index % p as u64) as u32);
            index /= p as u64;
        }
        coeffs.push(1);
        coeffs
    }

    /// Exhaustive trial division by every monic polynomial of degree at most n/2.
    pub fn is_irreducible(f: &[u32], p: u32) -> bool {
        let n = f.len() - 1;
        if n == 0 {
            return false;
        }
        for d in 1..=n / 2 {
            let count = (p as u64).pow(d as u32);
            for idx in 0..count {
                let g = monic_from_index(idx, d, p);
                if rem(f, &g, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

impl FiniteField {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if p > MAX_FIELD_ORDER {
            return Err(FieldError::SearchExhausted(p));
        }
        Ok(FiniteField(Arc::new(FiniteInner {
            p: p as u32,
            n: 1,
            q: p as u32,
            modulus: vec![0, 1],
            exp: Vec::new(),
            log: Vec::new(),
            add_table: Vec::new(),
        })))
    }

    /// `F_{p^n}`; with no modulus supplied the lexicographically least monic
    /// irreducible polynomial of degree n is used (compared from the
    /// highest non-leading coefficient down).
    pub fn extension(p: u64, n: u32, modulus: Option<Vec<u32>>) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if n == 1 && modulus.is_none() {
            return Self::prime(p);
        }
        let q = (p as u128).pow(n);
        if q > MAX_FIELD_ORDER as u128 {
            return Err(FieldError::SearchExhausted(q.min(u64::MAX as u128) as u64));
        }
        let p32 = p as u32;
        let modulus = match modulus {
            Some(m) => {
                if m.len() != n as usize + 1 || m[n as usize] != 1 || m.iter().any(|&c| c >= p32) {
                    return Err(FieldError::BadModulus(m, n));
                }
                if !fp_poly::is_irreducible(&m, p32) {
                    return Err(FieldError::ReducibleModulus(m, p32));
                }
                m
            }
            None => {
                let count = p.pow(n);
                // Lexicographic order with the x^{n-1} coefficient most significant
                // coincides with the integer order of the digit encoding.
                (0..count)
                    .map(|idx| fp_poly::monic_from_index(idx, n as usize, p32))
                    .find(|f| fp_poly::is_irreducible(f, p32))
                    .ok_or(FieldError::SearchExhausted(q as u64))?
            }
        };
        let q = q as u32;
        let decode = |mut e: u32| {
            let mut c = Vec::with_capacity(n as usize);
            for _ in 0..n {
                c.push(e % p32);
                e /= p32;
            }
            fp_poly::trim(c)
        };
        let encode = |c: &[u32]| {
            let mut e = 0u32;
            for &x in c.iter().rev() {
                e = e * p32 + x;
            }
            e
        };
        let mulmod = |a: u32, b: u32| {
            let prod = fp_poly::mul(&decode(a), &decode(b), p32);
            encode(&fp_poly::rem(&prod, &modulus, p32))
        };
        let order = (q - 1) as u64;
        let factors = prime_factors(order);
        let pow = |a: u32, mut e: u64| {
            let mut acc = 1u32;
            let mut base = a;
            while e > 0 {
                if e & 1 == 1 {
                    acc = mulmod(acc, base);
                }
                base = mulmod(base, base);
                e >>= 1;
            }
            acc
        };
        let generator = (2..q)
            .find(|&g| factors.iter().all(|&r| pow(g, order / r) != 1))
            .unwrap_or(1);
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![0u32; q as usize];
        let mut cur = 1u32;
        for i in 0..(q - 1) {
            exp.push(cur);
            log[cur as usize] = i;
            cur = mulmod(cur, generator);
        }
        let digit_add = |a: u32, b: u32| {
            let (mut a, mut b) = (a, b);
            let mut out = 0u32;
            let mut place = 1u32;
            for _ in 0..n {
                out += ((a % p32 + b % p32) % p32) * place;
                a /= p32;
                b /= p32;
                place *= p32;
            }
            out
        };
        let add_table = if q <= 256 {
            let mut t = Vec::with_capacity((q * q) as usize);
            for a in 0..q {
                for b in 0..q {
                    t.push(digit_add(a, b));
                }
            }
            t
        } else {
            Vec::new()
        };
        Ok(FiniteField(Arc::new(FiniteInner {
            p: p32,
            n,
            q,
            modulus,
            exp,
            log,
            add_table,
        })))
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.n
    }

    pub fn size(&self) -> u32 {
        self.0.q
    }

    /// Monic modulus, lowest coefficient first.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    /// Whether there is no field strictly between the prime field and this one.
    pub fn no_intermediate_field(&self) -> bool {
        self.0.n == 1 || is_prime(self.0.n as u64)
    }

    /// The prime subfield `F_p` as a field of its own.
    pub fn prime_subfield(&self) -> FiniteField {
        FiniteField::prime(self.0.p as u64).expect("characteristic is prime")
    }

    /// Coordinates with respect to the power basis `1, x, ..., x^{n-1}`.
    pub fn coords_over_base(&self, a: &u32) -> Vec<u32> {
        let mut e = *a;
        (0..self.0.n)
            .map(|_| {
                let c = e % self.0.p;
                e /= self.0.p;
                c
            })
            .collect()
    }

    pub fn from_coords(&self, coords: &[u32]) -> u32 {
        coords
            .iter()
            .rev()
            .fold(0u32, |acc, &c| acc * self.0.p + c % self.0.p)
    }

    fn digit_neg(&self, a: u32) -> u32 {
        let p = self.0.p;
        let mut a = a;
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.0.n {
            out += ((p - a % p) % p) * place;
            a /= p;
            place *= p;
        }
        out
    }

    fn digit_add(&self, a: u32, b: u32) -> u32 {
        let p = self.0.p;
        let (mut a, mut b) = (a, b);
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.0.n {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }
}

impl Field for FiniteField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let inner = &*self.0;
        if inner.n == 1 {
            let s = a + b;
            if s >= inner.p {
                s - inner.p
            } else {
                s
            }
        } else if !inner.add_table.is_empty() {
            inner.add_table[(*a * inner.q + *b) as usize]
        } else {
            self.digit_add(*a, *b)
        }
    }
    fn neg(&self, a: &u32) -> u32 {
        if self.0.n == 1 {
            if *a == 0 {
                0
            } else {
                self.0.p - a
            }
        } else {
            self.digit_neg(*a)
        }
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        let inner = &*self.0;
        if *a == 0 || *b == 0 {
            return 0;
        }
        if inner.n == 1 {
            (*a as u64 * *b as u64 % inner.p as u64) as u32
        } else {
            let l = inner.log[*a as usize] as u64 + inner.log[*b as usize] as u64;
            inner.exp[(l % (inner.q as u64 - 1)) as usize]
        }
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        let inner = &*self.0;
        if inner.n == 1 {
            Some(fp_poly::inv_mod(*a, inner.p))
        } else {
            let l = inner.log[*a as usize];
            let m = inner.q - 1;
            Some(inner.exp[((m - l) % m) as usize])
        }
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn from_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.0.p as i64) as u32
    }
    fn order(&self) -> Option<u64> {
        Some(self.0.q as u64)
    }
    fn elements(&self) -> Option<Vec<u32>> {
        Some((0..self.0.q).collect())
    }
    fn format_elem(&self, a: &u32) -> String {
        if self.0.n == 1 {
            return a.to_string();
        }
        let coords = self.coords_over_base(a);
        let terms: Vec<String> = coords
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                let mono = match i {
                    0 => String::new(),
                    1 => "x".to_string(),
                    _ => format!("x^{i}"),
                };
                match (c, i) {
                    (_, 0) => c.to_string(),
                    (1, _) => mono,
                    _ => format!("{c}{mono}"),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }
    fn parse_elem(&self, s: &str) -> Result<u32, FieldError> {
        let bad = || FieldError::BadElement(s.to_string());
        let s = s.trim();
        if let Ok(n) = s.parse::<i64>() {
            return Ok(self.from_i64(n));
        }
        if self.0.n == 1 {
            return Err(bad());
        }
        // polynomial in x with nonnegative integer coefficients, e.g. `x^2+x+1`
        let mut coords = vec![0u32; self.0.n as usize];
        let mut extra: Vec<u32> = Vec::new();
        for term in s.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(bad());
            }
            let (coef, power) = match term.find('x') {
                None => (term.parse::<i64>().map_err(|_| bad())?, 0usize),
                Some(pos) => {
                    let c = &term[..pos];
                    let c = if c.is_empty() {
                        1
                    } else {
                        c.trim_end_matches('*').parse::<i64>().map_err(|_| bad())?
                    };
                    let rest = &term[pos + 1..];
                    let e = if rest.is_empty() {
                        1
                    } else {
                        rest.trim_start_matches('^')
                            .parse::<usize>()
                            .map_err(|_| bad())?
                    };
                    (c, e)
                }
            };
            let c = coef.rem_euclid(self.0.p as i64) as u32;
            if power < coords.len() {
                coords[power] = (coords[power] + c) % self.0.p;
            } else {
                if extra.len() <= power {
                    extra.resize(power + 1, 0);
                }
                extra[power] = (extra[power] + c) % self.0.p;
            }
        }
        if !extra.is_empty() {
            for (i, c) in coords.iter().enumerate() {
                if i < extra.len() {
                    extra[i] = (extra[i] + c) % self.0.p;
                } else {
                    extra.push(*c);
                }
            }
            let r = fp_poly::rem(&extra, &self.0.modulus, self.0.p);
            coords = vec![0; self.0.n as usize];
            coords[..r.len()].copy_from_slice(&r);
        }
        Ok(self.from_coords(&coords))
    }
    fn descriptor(&self) -> String {
        if self.0.n == 1 {
            format!("F{}", self.0.p)
        } else {
            format!("F{}/F{}", self.0.q, self.0.p)
        }
    }
}

/// A parsed field descriptor (`Q`, `F3`, `F8/F2`, ...).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
    Extension { p: u64, n: u32 },
}

impl FromStr for FieldSpec {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, FieldError> {
        let bad = || FieldError::BadDescriptor(s.to_string());
        let s = s.trim();
        if s == "Q" || s == "QQ" {
            return Ok(FieldSpec::Rationals);
        }
        let order_of = |part: &str| -> Result<u64, FieldError> {
            part.strip_prefix('F')
                .ok_or_else(bad)?
                .parse::<u64>()
                .map_err(|_| bad())
        };
        match s.split_once('/') {
            None => {
                let q = order_of(s)?;
                if is_prime(q) {
                    Ok(FieldSpec::Prime(q))
                } else {
                    Err(bad())
                }
            }
            Some((top, base)) => {
                let q = order_of(top)?;
                let p = order_of(base)?;
                if !is_prime(p) {
                    return Err(FieldError::NotPrime(p));
                }
                let mut n = 0u32;
                let mut r = q;
                while r > 1 && r % p == 0 {
                    r /= p;
                    n += 1;
                }
                if r != 1 || n == 0 {
                    return Err(bad());
                }
                if n == 1 {
                    Ok(FieldSpec::Prime(p))
                } else {
                    Ok(FieldSpec::Extension { p, n })
                }
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
            FieldSpec::Extension { p, n } => write!(f, "F{}/F{p}", p.pow(*n)),
        }
    }
}

/// A constructed coefficient field.
#[derive(Debug, Clone)]
pub enum FieldCtx {
    Rationals(Rationals),
    Finite(FiniteField),
}

impl FieldCtx {
    pub fn degree_over_base(&self) -> u32 {
        match self {
            FieldCtx::Rationals(_) => 1,
            FieldCtx::Finite(f) => f.degree(),
        }
    }

    /// For extension fields: no field lies strictly between `F_p` and this field.
    pub fn no_intermediate_field(&self) -> bool {
        match self {
            FieldCtx::Rationals(_) => true,
            FieldCtx::Finite(f) => f.no_intermediate_field(),
        }
    }

    pub fn descriptor(&self) -> String {
        match self {
            FieldCtx::Rationals(q) => q.descriptor(),
            FieldCtx::Finite(f) => f.descriptor(),
        }
    }

    pub fn coords_over_base(&self, a: &u32) -> Result<Vec<u32>, FieldError> {
        match self {
            FieldCtx::Rationals(_) => Err(FieldError::NoBaseField),
            FieldCtx::Finite(f) => Ok(f.coords_over_base(a)),
        }
    }
}

/// Builds a field from its descriptor, optionally overriding the modulus of
/// an extension field.
pub fn make_field(spec: &FieldSpec, modulus: Option<Vec<u32>>) -> Result<FieldCtx, FieldError> {
    match spec {
        FieldSpec::Rationals => Ok(FieldCtx::Rationals(Rationals)),
        FieldSpec::Prime(p) => Ok(FieldCtx::Finite(FiniteField::prime(*p)?)),
        FieldSpec::Extension { p, n } => {
            Ok(FieldCtx::Finite(FiniteField::extension(*p, *n, modulus)?))
        }
    }
}

/// Parses `c0,c1,...,1` into a modulus coefficient vector.
pub fn parse_modulus(s: &str) -> Result<Vec<u32>, FieldError> {
    s.split(',')
        .map(|c| {
            c.trim()
                .parse::<u32>()
                .map_err(|_| FieldError::BadElement(s.to_string()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f8() -> FiniteField {
        FiniteField::extension(2, 3, None).unwrap()
    }

    #[test]
    fn f2_is_prime_field() {
        let f = make_field(&"F2".parse().unwrap(), None).unwrap();
        assert_eq!(f.degree_over_base(), 1);
        match f {
            FieldCtx::Finite(ff) => assert_eq!(ff.size(), 2),
            _ => panic!(),
        }
    }

    #[test]
    fn f8_modulus_and_flags() {
        let f = f8();
        assert_eq!(f.modulus(), &[1, 1, 0, 1]);
        assert!(f.no_intermediate_field());
        let f16 = FiniteField::extension(2, 4, None).unwrap();
        assert!(!f16.no_intermediate_field());
        assert_eq!(
            FiniteField::extension(3, 2, None).unwrap().modulus(),
            &[1, 0, 1]
        );
    }

    #[test]
    fn f8_arithmetic() {
        let f = f8();
        let x = f.parse_elem("x").unwrap();
        let x2 = f.parse_elem("x^2").unwrap();
        let x_plus_1 = f.parse_elem("x+1").unwrap();
        assert_eq!(f.mul(&x, &x2), x_plus_1);
        assert_eq!(f.coords_over_base(&x_plus_1), vec![1, 1, 0]);
        assert_eq!(f.coords_over_base(&x2), vec![0, 0, 1]);
        assert_eq!(f.format_elem(&x_plus_1), "x+1");
        // x^3 reduces by the modulus as well
        assert_eq!(f.parse_elem("x^3").unwrap(), x_plus_1);
    }

    #[test]
    fn prime_field_division() {
        let f = FiniteField::prime(5).unwrap();
        assert_eq!(f.div(&3, &4).unwrap(), 2);
        assert_eq!(f.div(&3, &0), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn rational_arithmetic() {
        let q = Rationals;
        let a = q.parse_elem("2/3").unwrap();
        let b = q.parse_elem("1/6").unwrap();
        assert_eq!(q.format_elem(&q.add(&a, &b)), "5/6");
        assert_eq!(q.format_elem(&q.parse_elem("-4/6").unwrap()), "-2/3");
    }

    #[test]
    fn descriptor_errors() {
        assert!("F4".parse::<FieldSpec>().is_err());
        assert!("F6/F2".parse::<FieldSpec>().is_err());
        assert!(matches!(
            FiniteField::prime(9),
            Err(FieldError::NotPrime(9))
        ));
        assert!(matches!(
            FiniteField::extension(2, 2, Some(vec![1, 0, 1])),
            Err(FieldError::ReducibleModulus(..))
        ));
        assert_eq!(
            "F9/F3".parse::<FieldSpec>().unwrap(),
            FieldSpec::Extension { p: 3, n: 2 }
        );
    }

    #[test]
    fn coords_not_defined_over_rationals() {
        let q = FieldCtx::Rationals(Rationals);
        assert_eq!(q.coords_over_base(&1), Err(FieldError::NoBaseField));
    }

    #[test]
    fn field_axioms_exhaustive_small_fields() {
        for f in [
            FiniteField::prime(2).unwrap(),
            FiniteField::prime(7).unwrap(),
            f8(),
            FiniteField::extension(3, 2, None).unwrap(),
            FiniteField::extension(2, 4, None).unwrap(),
        ] {
            let q = f.order().unwrap();
            for a in f.elements().unwrap() {
                assert_eq!(f.pow(&a, q), a);
                if a != 0 {
                    assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
                }
                for b in f.elements().unwrap() {
                    let ca = f.coords_over_base(&a);
                    let cb = f.coords_over_base(&b);
                    let cs = f.coords_over_base(&f.add(&a, &b));
                    let p = f.characteristic();
                    for i in 0..ca.len() {
                        assert_eq!(cs[i], (ca[i] + cb[i]) % p);
                    }
                    assert_eq!(f.sub(&f.add(&a, &b), &b), a);
                }
            }
        }
    }
}
