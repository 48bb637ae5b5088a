//! Row reduction, kernels, intersections and subspace enumeration over a
//! [`Field`].

use rayon::prelude::*;

use crate::scalars::Field;

/// A reduced row-echelon basis of a subspace of `k^ncols`.
///
/// Rows are sorted by pivot column; every pivot entry is one and every
/// other row is zero in each pivot column, so the basis is unique for the
/// subspace.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Echelon<E> {
    pub ncols: usize,
    pub rows: Vec<Vec<E>>,
    pub pivots: Vec<usize>,
}

impl<E: Clone + PartialEq> Echelon<E> {
    pub fn empty(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn from_rows<F: Field<Elem = E>>(field: &F, ncols: usize, rows: Vec<Vec<E>>) -> Self {
        let mut ech = Echelon::empty(ncols);
        for r in rows {
            ech.insert(field, r);
        }
        ech
    }

    /// Subtracts multiples of the basis rows so that `v` vanishes on all pivots.
    pub fn reduce<F: Field<Elem = E>>(&self, field: &F, v: &mut [E]) {
        debug_assert_eq!(v.len(), self.ncols);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if field.is_zero(&v[p]) {
                continue;
            }
            let c = v[p].clone();
            for (x, r) in v.iter_mut().zip(row).skip(p) {
                if !field.is_zero(r) {
                    *x = field.sub(x, &field.mul(&c, r));
                }
            }
        }
    }

    pub fn contains<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> bool {
        let mut w = v.to_vec();
        self.reduce(field, &mut w);
        w.iter().all(|x| field.is_zero(x))
    }

    /// Adds `v` to the span, keeping the basis reduced. Returns whether the
    /// rank grew.
    pub fn insert<F: Field<Elem = E>>(&mut self, field: &F, mut v: Vec<E>) -> bool {
        self.reduce(field, &mut v);
        let Some(p) = v.iter().position(|x| !field.is_zero(x)) else {
            return false;
        };
        let inv = field.inv(&v[p]).expect("nonzero pivot");
        for x in v.iter_mut().skip(p) {
            *x = field.mul(x, &inv);
        }
        for row in self.rows.iter_mut() {
            if field.is_zero(&row[p]) {
                continue;
            }
            let c = row[p].clone();
            for (x, r) in row.iter_mut().zip(&v).skip(p) {
                if !field.is_zero(r) {
                    *x = field.sub(x, &field.mul(&c, r));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }
}

/// Basis of `{ x : sum_j x_j * images[j] = 0 }`, returned in reduced
/// echelon form.
pub fn kernel_of_images<F: Field>(
    field: &F,
    images: &[Vec<F::Elem>],
    image_len: usize,
) -> Vec<Vec<F::Elem>> {
    let n = images.len();
    let mut aug = Echelon::empty(image_len + n);
    for (j, img) in images.iter().enumerate() {
        let mut row = img.clone();
        row.resize(image_len, field.zero());
        row.extend((0..n).map(|i| if i == j { field.one() } else { field.zero() }));
        aug.insert(field, row);
    }
    let kernel: Vec<Vec<F::Elem>> = aug
        .rows
        .iter()
        .zip(&aug.pivots)
        .filter(|(_, &p)| p >= image_len)
        .map(|(r, _)| r[image_len..].to_vec())
        .collect();
    Echelon::from_rows(field, n, kernel).rows
}

/// Intersection of two subspaces of `k^n` (Zassenhaus).
pub fn intersect<F: Field>(
    field: &F,
    n: usize,
    a: &[Vec<F::Elem>],
    b: &[Vec<F::Elem>],
) -> Vec<Vec<F::Elem>> {
    let mut ech = Echelon::empty(2 * n);
    for r in a {
        let mut row = r.clone();
        row.extend(r.iter().cloned());
        ech.insert(field, row);
    }
    for r in b {
        let mut row = r.clone();
        row.extend((0..n).map(|_| field.zero()));
        ech.insert(field, row);
    }
    let inter: Vec<Vec<F::Elem>> = ech
        .rows
        .iter()
        .zip(&ech.pivots)
        .filter(|(_, &p)| p >= n)
        .map(|(r, _)| r[n..].to_vec())
        .collect();
    Echelon::from_rows(field, n, inter).rows
}

/// Gaussian binomial coefficient `[n choose r]_q`.
pub fn gaussian_binomial(n: u32, r: u32, q: u64) -> u128 {
    if r > n {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..r {
        num *= q.pow(n - i) - 1;
        den *= q.pow(i + 1) - 1;
    }
    num / den
}

/// Total number of subspaces of `F_q^n`.
pub fn galois_number(n: u32, q: u64) -> u128 {
    (0..=n).map(|r| gaussian_binomial(n, r, q)).sum()
}

/// Calls `visit` on the reduced echelon basis of every subspace of `F_q^n`,
/// in parallel over pivot patterns, and collects the `Some` results in a
/// deterministic order. Also returns the number of subspaces visited.
pub fn scan_subspaces<F, T, V>(field: &F, n: usize, visit: V) -> (Vec<T>, u128)
where
    F: Field,
    T: Send,
    V: Fn(&[Vec<F::Elem>]) -> Option<T> + Sync,
{
    let elems = field
        .elements()
        .expect("subspace scan needs a finite field");
    let mut patterns: Vec<Vec<usize>> = Vec::new();
    for r in 0..=n {
        combinations(n, r, &mut Vec::new(), 0, &mut patterns);
    }
    let per_pattern: Vec<(Vec<T>, u128)> = patterns
        .par_iter()
        .map(|pivots| {
            let free: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(i, &p)| {
                    ((p + 1)..n)
                        .filter(|c| !pivots.contains(c))
                        .map(move |c| (i, c))
                })
                .collect();
            let mut digits = vec![0usize; free.len()];
            let mut out = Vec::new();
            let mut count: u128 = 0;
            loop {
                let mut rows: Vec<Vec<F::Elem>> = pivots
                    .iter()
                    .map(|&p| {
                        let mut row = vec![field.zero(); n];
                        row[p] = field.one();
                        row
                    })
                    .collect();
                for (&(i, c), &d) in free.iter().zip(&digits) {
                    rows[i][c] = elems[d].clone();
                }
                count += 1;
                if let Some(t) = visit(&rows) {
                    out.push(t);
                }
                // odometer
                let mut k = 0;
                loop {
                    if k == digits.len() {
                        return (out, count);
                    }
                    digits[k] += 1;
                    if digits[k] < elems.len() {
                        break;
                    }
                    digits[k] = 0;
                    k += 1;
                }
            }
        })
        .collect();
    let mut total = 0;
    let mut results = Vec::new();
    for (mut v, c) in per_pattern {
        total += c;
        results.append(&mut v);
    }
    (results, total)
}

fn combinations(n: usize, r: usize, cur: &mut Vec<usize>, start: usize, out: &mut Vec<Vec<usize>>) {
    if cur.len() == r {
        out.push(cur.clone());
        return;
    }
    for i in start..n {
        cur.push(i);
        combinations(n, r, cur, i + 1, out);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{FiniteField, Rationals};

    #[test]
    fn galois_numbers_match_known_counts() {
        let known = [1u128, 2, 5, 16, 67, 374, 2825, 29212, 417199];
        for (n, &g) in known.iter().enumerate() {
            assert_eq!(galois_number(n as u32, 2), g);
        }
        assert_eq!(galois_number(4, 3), 1 + 40 + 130 + 40 + 1);
    }

    #[test]
    fn scan_visits_every_subspace_once() {
        for (p, n) in [(2u64, 4usize), (3, 3), (5, 2)] {
            let f = FiniteField::prime(p).unwrap();
            let (bases, count) = scan_subspaces(&f, n, |rows| Some(rows.to_vec()));
            assert_eq!(count, galois_number(n as u32, p));
            let mut seen = std::collections::HashSet::new();
            for b in bases {
                let ech = Echelon::from_rows(&f, n, b.clone());
                assert_eq!(ech.rows, b, "scan output must already be reduced");
                assert!(seen.insert(b));
            }
        }
    }

    #[test]
    fn kernel_and_intersection_over_q() {
        let q = Rationals;
        let r = |v: &[i64]| v.iter().map(|&x| q.from_i64(x)).collect::<Vec<_>>();
        // images e1 + e2, 2 e1 + 2 e2, e3: kernel spanned by (2, -1, 0)
        let ker = kernel_of_images(&q, &[r(&[1, 1, 0]), r(&[2, 2, 0]), r(&[0, 0, 1])], 3);
        assert_eq!(ker.len(), 1);
        assert_eq!(
            ker[0],
            vec![q.one(), q.parse_elem("-1/2").unwrap(), q.zero()]
        );
        let inter = intersect(
            &q,
            3,
            &[r(&[1, 0, 0]), r(&[0, 1, 0])],
            &[r(&[1, 1, 1]), r(&[0, 1, 1])],
        );
        assert_eq!(inter, vec![r(&[1, 0, 0])]);
    }

    #[test]
    fn echelon_is_canonical() {
        let f = FiniteField::prime(3).unwrap();
        let a = Echelon::from_rows(&f, 3, vec![vec![1, 2, 0], vec![0, 1, 1]]);
        let b = Echelon::from_rows(&f, 3, vec![vec![1, 0, 1], vec![2, 1, 0]]);
        assert_eq!(a, b);
    }
}
