//! Exhaustive enumeration of trace ideals, birational overrings and stable
//! ideal classes over finite base fields, and the consistency report tying
//! them together.

use std::cmp::Reverse;
use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::calculus::{self, CalculusError};
use crate::lattice::{Lattice, LatticeError, Quotient};
use crate::linalg::{galois_number, kernel_of_images, scan_subspaces};
use crate::ring::{LocalRing, RingError, RingInvariants, RingKind};
use crate::scalars::Field;
use crate::semigroup::{monomial_lattice, SemigroupIdeal};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error(transparent)]
    Calculus(#[from] CalculusError),
    #[error("quotient dimension {dim} over F_{q} exceeds the cap {cap} (raise it with --max-dim)")]
    CapExceeded { dim: usize, cap: usize, q: u64 },
    #[error("{count} semigroup elements below the conductor exceed the monomial-scan cap {cap}")]
    TooManySubsets { count: usize, cap: usize },
    #[error("exhaustive enumeration needs a finite base field (use --monomial-only)")]
    InfiniteField,
    #[error("--monomial-only needs a monomial ring")]
    NotMonomial,
}

impl From<RingError> for EnumError {
    fn from(e: RingError) -> Self {
        EnumError::Calculus(e.into())
    }
}

impl From<LatticeError> for EnumError {
    fn from(e: LatticeError) -> Self {
        EnumError::Calculus(e.into())
    }
}

type Res<T> = Result<T, EnumError>;

fn inconsistency(msg: String) -> EnumError {
    EnumError::Calculus(CalculusError::Inconsistency(msg))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Res<()> {
    if cond {
        Ok(())
    } else {
        Err(inconsistency(msg()))
    }
}

#[derive(Debug, Clone, Default)]
pub struct EnumOptions {
    /// Overrides the default quotient-dimension cap.
    pub max_dim: Option<usize>,
    pub paranoid: bool,
    /// Also enumerate overrings by scanning every subspace of `V/R`.
    pub scan_overrings: bool,
    /// Take overrings from oversemigroups (monomial rings only).
    pub monomial_only: bool,
    /// Extra degrees below the conductor for the wider-floor check (0: off).
    pub floor_check_width: i64,
}

/// Default cap on quotient dimensions: 10 over F_2, 6 over F_3, and for
/// larger fields the largest dimension with no more subspaces than F_3^6.
pub fn default_dim_cap(q: u64) -> usize {
    match q {
        2 => 10,
        3 => 6,
        _ => {
            let budget = galois_number(6, 3);
            (1..)
                .take_while(|&n| galois_number(n, q) <= budget)
                .last()
                .unwrap_or(1) as usize
        }
    }
}

fn check_cap<F: Field>(r: &LocalRing<F>, dim: usize, opts: &EnumOptions) -> Res<u64> {
    let q = r.ambient().k.order().ok_or(EnumError::InfiniteField)?;
    let cap = opts.max_dim.unwrap_or_else(|| default_dim_cap(q));
    if dim > cap {
        return Err(EnumError::CapExceeded { dim, cap, q });
    }
    Ok(q)
}

/// Nonzero vectors of `k^n` whose first nonzero entry is one.
pub fn projective_points<F: Field>(k: &F, n: usize) -> Vec<Vec<F::Elem>> {
    let elems = k.elements().expect("finite field");
    let mut out = Vec::new();
    for lead in 0..n {
        let free = n - lead - 1;
        let total = elems.len().pow(free as u32);
        for mut idx in 0..total {
            let mut v = vec![k.zero(); n];
            v[lead] = k.one();
            for x in v.iter_mut().skip(lead + 1) {
                *x = elems[idx % elems.len()].clone();
                idx /= elems.len();
            }
            out.push(v);
        }
    }
    out
}

fn sort_rings<F: Field>(r: &LocalRing<F>, rings: &mut [LocalRing<F>]) {
    let v = r.normalization();
    rings.sort_by_cached_key(|a| {
        (
            Reverse(v.colength(a.lattice()).expect("overring inside V")),
            a.lattice().describe(),
        )
    });
}

fn sort_ideals<F: Field>(r: &LocalRing<F>, ideals: &mut [Lattice<F>]) {
    ideals.sort_by_cached_key(|i| {
        (
            Reverse(r.lattice().colength(i).expect("ideal inside R")),
            i.describe(),
        )
    });
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ScanCertificate {
    pub dimension: usize,
    pub scanned: u128,
    pub galois_number: u128,
    pub hits: usize,
}

/// Every ring `A` with `R ⊆ A ⊆ V`, by breadth-first adjunction of coset
/// representatives of `V/A`; with `opts.monomial_only`, the monomial rings
/// of the oversemigroups instead.
pub fn enumerate_overrings<F: Field>(
    r: &LocalRing<F>,
    opts: &EnumOptions,
) -> Res<Vec<LocalRing<F>>> {
    let amb = r.ambient();
    if opts.monomial_only {
        let s = r.monomial_semigroup().ok_or(EnumError::NotMonomial)?;
        let mut out = s
            .oversemigroups()
            .iter()
            .map(|t| LocalRing::semigroup_ring(amb, t))
            .collect::<Result<Vec<_>, _>>()?;
        sort_rings(r, &mut out);
        return Ok(out);
    }
    let v = r.normalization();
    let dim = v.colength(r.lattice())?;
    check_cap(r, dim, opts)?;
    let mut seen: HashSet<Lattice<F>> = HashSet::new();
    seen.insert(r.lattice().clone());
    let mut all = vec![r.clone()];
    let mut frontier = vec![r.clone()];
    while !frontier.is_empty() {
        let found: Vec<LocalRing<F>> = frontier
            .par_iter()
            .map(|a| -> Res<Vec<LocalRing<F>>> {
                let q = v.quotient(a.lattice())?;
                let mut local: HashMap<Lattice<F>, LocalRing<F>> = HashMap::new();
                for u in projective_points(&amb.k, q.dim()) {
                    let b = a.adjoin(&q.element(&u))?;
                    local.entry(b.lattice().clone()).or_insert(b);
                }
                Ok(local.into_values().collect())
            })
            .collect::<Res<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        frontier = Vec::new();
        for b in found {
            if seen.insert(b.lattice().clone()) {
                frontier.push(b.clone());
                all.push(b);
            }
        }
    }
    sort_rings(r, &mut all);
    Ok(all)
}

/// Overrings by scanning every subspace `U` of `V/R` and keeping the
/// multiplicatively closed `R + U`. The scan count certifies completeness.
pub fn scan_overrings<F: Field>(
    r: &LocalRing<F>,
    opts: &EnumOptions,
) -> Res<(Vec<LocalRing<F>>, ScanCertificate)> {
    let v = r.normalization();
    let q = v.quotient(r.lattice())?;
    let qsize = check_cap(r, q.dim(), opts)?;
    let (lats, scanned) = scan_subspaces(&r.ambient().k, q.dim(), |rows| {
        let l = q.lift(rows);
        (l.product(&l) == l).then_some(l)
    });
    let mut rings = lats
        .into_iter()
        .map(|l| LocalRing::from_lattice(l, RingKind::Overring))
        .collect::<Result<Vec<_>, _>>()?;
    sort_rings(r, &mut rings);
    let cert = ScanCertificate {
        dimension: q.dim(),
        scanned,
        galois_number: galois_number(q.dim() as u32, qsize),
        hits: rings.len(),
    };
    Ok((rings, cert))
}

fn scan_ideals_between<F: Field>(
    r: &LocalRing<F>,
    q: &Quotient<F>,
    opts: &EnumOptions,
) -> Res<(Vec<Lattice<F>>, ScanCertificate)> {
    let qsize = check_cap(r, q.dim(), opts)?;
    let rl = r.lattice();
    let (found, scanned) = scan_subspaces(&r.ambient().k, q.dim(), |rows| {
        let i = q.lift(rows);
        if !i.contains(&rl.product(&i)) {
            return None;
        }
        match calculus::is_trace(r, &i) {
            Ok(true) => Some(Ok(i)),
            Ok(false) => None,
            Err(e) => Some(Err(e)),
        }
    });
    let found = found.into_iter().collect::<Result<Vec<_>, _>>()?;
    let cert = ScanCertificate {
        dimension: q.dim(),
        scanned,
        galois_number: galois_number(q.dim() as u32, qsize),
        hits: found.len(),
    };
    Ok((found, cert))
}

/// Trace ideals `I` with `C ⊆ I ⊆ R` (ideals between `C` and `m`, plus `R`).
pub fn enumerate_trace_ideals<F: Field>(
    r: &LocalRing<F>,
    opts: &EnumOptions,
) -> Res<(Vec<Lattice<F>>, ScanCertificate)> {
    if r.is_dvr() {
        let cert = ScanCertificate {
            dimension: 0,
            scanned: 1,
            galois_number: 1,
            hits: 1,
        };
        return Ok((vec![r.lattice().clone()], cert));
    }
    if opts.monomial_only {
        return monomial_trace_ideals(r);
    }
    let c = r.conductor_ideal();
    let q = r.maximal_ideal().quotient(&c)?;
    let (mut found, mut cert) = scan_ideals_between(r, &q, opts)?;
    found.push(r.lattice().clone());
    cert.hits += 1;
    sort_ideals(r, &mut found);
    Ok((found, cert))
}

/// Monomial trace ideals between `C` and `R`: every subset of the nonzero
/// semigroup elements below the conductor is tried as a generating set.
fn monomial_trace_ideals<F: Field>(r: &LocalRing<F>) -> Res<(Vec<Lattice<F>>, ScanCertificate)> {
    const MAX_SMALL: usize = 20;
    let s = r.monomial_semigroup().ok_or(EnumError::NotMonomial)?;
    let c = s.conductor() as i64;
    let small: Vec<i64> = s
        .small_elements()
        .iter()
        .map(|&x| x as i64)
        .filter(|&x| x > 0 && x < c)
        .collect();
    if small.len() > MAX_SMALL {
        return Err(EnumError::TooManySubsets {
            count: small.len(),
            cap: MAX_SMALL,
        });
    }
    let total = 1u64 << small.len();
    let found = (0..total)
        .into_par_iter()
        .filter_map(|mask| {
            let mut gens: Vec<i64> = (0..small.len())
                .filter(|&b| mask >> b & 1 == 1)
                .map(|b| small[b])
                .collect();
            let n = gens.len();
            gens.extend(c..c + s.multiplicity() as i64);
            let e = SemigroupIdeal::generated(&s, &gens);
            // count each ideal once: by its full set of small members
            let members: Vec<i64> = small.iter().copied().filter(|&x| e.contains(x)).collect();
            if members.len() != n {
                return None;
            }
            let i = monomial_lattice(r.ambient(), &e);
            match calculus::is_trace(r, &i) {
                Ok(true) => Some(Ok(i)),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut found = found;
    found.push(r.lattice().clone());
    sort_ideals(r, &mut found);
    let cert = ScanCertificate {
        dimension: small.len(),
        scanned: total as u128,
        galois_number: total as u128,
        hits: found.len(),
    };
    Ok((found, cert))
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct FloorCheck {
    /// Ideals were scanned down to `t^(c + width) V`.
    pub width: i64,
    pub certificate: ScanCertificate,
    pub trace_ideals_found: usize,
    pub all_contain_conductor: bool,
}

/// Scans ideals between `t^{c+width} V` and `m` and reports whether every
/// trace ideal found contains the conductor.
pub fn wider_floor_check<F: Field>(
    r: &LocalRing<F>,
    width: i64,
    opts: &EnumOptions,
) -> Res<FloorCheck> {
    let floor = Lattice::tail_from(r.ambient(), r.conductor() + width);
    let c = r.conductor_ideal();
    let q = r.maximal_ideal().quotient(&floor)?;
    let (found, certificate) = scan_ideals_between(r, &q, opts)?;
    Ok(FloorCheck {
        width,
        certificate,
        trace_ideals_found: found.len() + 1,
        all_contain_conductor: found.iter().all(|i| i.contains(&c)),
    })
}

/// All ideals of `R` of colength `n` for `n = 0..=bound`, assuming
/// residue field `k`: each ideal of colength `n + 1` is `mJ + H` for some
/// `J` of colength `n` and a hyperplane `H` of `J/mJ`.
pub fn ideals_by_colength<F: Field>(
    r: &LocalRing<F>,
    bound: usize,
) -> Result<Vec<Vec<Lattice<F>>>, CalculusError> {
    let k = &r.ambient().k;
    if k.order().is_none() || r.residue_degree() != 1 {
        return Err(CalculusError::Precondition(
            "ideal enumeration by colength needs a finite residue field k".into(),
        ));
    }
    let m = r.maximal_ideal();
    let mut levels = vec![vec![r.lattice().clone()]];
    for _ in 0..bound {
        let prev = levels.last().unwrap();
        let next: Vec<Vec<Lattice<F>>> = prev
            .par_iter()
            .map(|j| -> Result<Vec<Lattice<F>>, CalculusError> {
                let mj = m.product(j);
                let q = j.quotient(&mj)?;
                let mut out = Vec::new();
                for phi in projective_points(k, q.dim()) {
                    let images: Vec<Vec<F::Elem>> = phi.iter().map(|x| vec![x.clone()]).collect();
                    let hyper = kernel_of_images(k, &images, 1);
                    out.push(q.lift(&hyper));
                }
                Ok(out)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut seen = HashSet::new();
        let mut level = Vec::new();
        for i in next.into_iter().flatten() {
            if seen.insert(i.clone()) {
                level.push(i);
            }
        }
        sort_ideals(r, &mut level);
        levels.push(level);
    }
    Ok(levels)
}

/// One stable ideal per overring: `t^{c_R}·A`, which lies in `R` and has
/// `ξ = A`.
pub fn stable_class_reps<F: Field>(
    r: &LocalRing<F>,
    overrings: &[LocalRing<F>],
) -> Res<Vec<Lattice<F>>> {
    let c = r.conductor();
    overrings
        .iter()
        .map(|a| {
            let rep = a.lattice().shift(c);
            ensure(r.lattice().contains(&rep), || {
                format!("t^c A not inside R for A = {}", a.lattice().describe())
            })?;
            let xi = calculus::xi(&rep)?;
            ensure(xi == *a, || {
                format!("ξ(t^c A) != A for A = {}", a.lattice().describe())
            })?;
            Ok(rep)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, Serialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum CorrespondenceCase {
    Gorenstein,
    Special,
    RhoNotSurjective,
}

#[derive(Debug, Clone, Serialize)]
pub struct EnumerationReport {
    pub schema: u32,
    pub ring: String,
    pub field: String,
    pub invariants: RingInvariants,
    /// `dim_k(V/R)`.
    pub quotient_dimension: usize,
    pub overring_search: String,
    pub trace_ideals: Vec<String>,
    pub overrings: Vec<String>,
    pub overring_gorenstein: Vec<bool>,
    pub stable_classes: Vec<String>,
    pub good_ideals: Vec<String>,
    /// Index into `overrings` of `ρ(I)` for each trace ideal.
    pub rho: Vec<usize>,
    /// Index into `trace_ideals` of `η(A)` for each overring.
    pub eta: Vec<usize>,
    /// Index into `overrings` of `ξ` of each stable class.
    pub xi: Vec<usize>,
    pub rho_surjective: bool,
    pub rho_injective: bool,
    pub rho_bijective: bool,
    pub eta_injective: bool,
    pub overrings_reflexive: bool,
    pub x_equals_g: bool,
    pub all_overrings_gorenstein: bool,
    pub theorem12_case: CorrespondenceCase,
    pub trace_scan: ScanCertificate,
    pub overring_scan: Option<ScanCertificate>,
    pub floor_check: Option<FloorCheck>,
}

/// The enumerated sets with their correspondence tables, after checking
/// every identity relating them; any failed identity is an error.
pub fn verify_ring<F: Field>(
    r: &LocalRing<F>,
    ring_name: &str,
    opts: &EnumOptions,
) -> Res<EnumerationReport> {
    let rl = r.lattice();
    let inv = r.invariants()?;
    let v = r.normalization();
    let (x, trace_scan) = enumerate_trace_ideals(r, opts)?;
    ensure(trace_scan.scanned == trace_scan.galois_number, || {
        "trace-ideal scan incomplete".into()
    })?;
    let y = enumerate_overrings(r, opts)?;
    let overring_scan = if opts.scan_overrings && !opts.monomial_only {
        let (scanned, cert) = scan_overrings(r, opts)?;
        ensure(cert.scanned == cert.galois_number, || {
            "overring scan incomplete".into()
        })?;
        let a: HashSet<&Lattice<F>> = y.iter().map(|a| a.lattice()).collect();
        let b: HashSet<&Lattice<F>> = scanned.iter().map(|a| a.lattice()).collect();
        ensure(a == b, || {
            "adjunction search and subspace scan found different overrings".into()
        })?;
        Some(cert)
    } else {
        None
    };
    let x_index: HashMap<&Lattice<F>, usize> = x.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let y_index: HashMap<&Lattice<F>, usize> = y
        .iter()
        .enumerate()
        .map(|(i, a)| (a.lattice(), i))
        .collect();

    // correspondence tables
    let mut rho = Vec::new();
    for i in &x {
        let a = calculus::rho(r, i)?;
        let idx = *y_index
            .get(a.lattice())
            .ok_or_else(|| inconsistency(format!("ρ({}) not among the overrings", i.describe())))?;
        rho.push(idx);
    }
    let mut eta = Vec::new();
    for a in &y {
        let j = calculus::eta(r, a)?;
        let idx = *x_index.get(&j).ok_or_else(|| {
            inconsistency(format!(
                "η({}) not among the trace ideals",
                a.lattice().describe()
            ))
        })?;
        eta.push(idx);
    }
    let reps = stable_class_reps(r, &y)?;
    let xi: Vec<usize> = (0..y.len()).collect();
    ensure(reps.iter().collect::<HashSet<_>>().len() == y.len(), || {
        "stable class representatives are not distinct".into()
    })?;

    // ρ surjective, η injective and every overring reflexive are equivalent
    let rho_image: HashSet<usize> = rho.iter().copied().collect();
    let rho_surjective = rho_image.len() == y.len();
    let rho_injective = rho_image.len() == x.len();
    let eta_injective = eta.iter().collect::<HashSet<_>>().len() == y.len();
    let reflexive: Vec<bool> = y
        .iter()
        .map(|a| Ok(rl.colon(&rl.colon(a.lattice())?)? == *a.lattice()))
        .collect::<Res<Vec<bool>>>()?;
    let overrings_reflexive = reflexive.iter().all(|&b| b);
    ensure(
        rho_surjective == eta_injective && eta_injective == overrings_reflexive,
        || {
            format!("surjectivity of ρ ({rho_surjective}), injectivity of η ({eta_injective}) and reflexivity ({overrings_reflexive}) disagree")
        },
    )?;

    // images of ρ and η are exactly the reflexive members
    let reflexive_y: HashSet<usize> = (0..y.len()).filter(|&j| reflexive[j]).collect();
    ensure(rho_image == reflexive_y, || {
        "ρ(X) differs from the reflexive overrings".into()
    })?;
    let eta_image: HashSet<usize> = eta.iter().copied().collect();
    let mut reflexive_x = HashSet::new();
    for (idx, i) in x.iter().enumerate() {
        if calculus::bidual(r, i)? == *i {
            reflexive_x.insert(idx);
        }
    }
    ensure(eta_image == reflexive_x, || {
        "η(Y) differs from the reflexive trace ideals".into()
    })?;

    // good = trace and stable, checked against the definition
    let mut good = Vec::new();
    for i in &x {
        let stable = calculus::is_stable(i)?;
        let by_def = calculus::is_good_by_definition(r, i)?;
        ensure(stable == by_def, || {
            format!("good-ideal criteria disagree on {}", i.describe())
        })?;
        if stable {
            good.push(i.clone());
        }
    }
    let x_equals_g = good.len() == x.len();

    // good ideals ↔ overrings A with R:A cyclic over A
    let mut cyclic = 0;
    for a in &y {
        let d = rl.colon(a.lattice())?;
        let b = crate::ring::min_valuation_element(&d);
        if a.lattice().scale(&b)? == d {
            cyclic += 1;
        }
    }
    ensure(cyclic == good.len(), || {
        format!(
            "{} good ideals but {cyclic} overrings with R:A cyclic",
            good.len()
        )
    })?;

    let overring_gorenstein = y
        .iter()
        .map(|a| a.is_gorenstein())
        .collect::<Result<Vec<bool>, _>>()?;
    let all_overrings_gorenstein = overring_gorenstein.iter().all(|&g| g);
    let e_le_2 = inv.multiplicity <= 2;

    if inv.gorenstein {
        // Gorenstein R: all overrings Gorenstein ⇔ X = G ⇔ e ≤ 2
        ensure(
            all_overrings_gorenstein == x_equals_g && x_equals_g == e_le_2,
            || {
                format!("Gorenstein overrings ({all_overrings_gorenstein}), X = G ({x_equals_g}) and e ≤ 2 ({e_le_2}) disagree")
            },
        )?;
        // Gorenstein R: ρ and η are mutually inverse
        for (i, &j) in rho.iter().enumerate() {
            ensure(eta[j] == i, || "η∘ρ is not the identity".into())?;
        }
        for (j, &i) in eta.iter().enumerate() {
            ensure(rho[i] == j, || "ρ∘η is not the identity".into())?;
        }
    }
    if e_le_2 {
        // e ≤ 2: every R:A is good
        for &i in &eta {
            ensure(good.contains(&x[i]), || {
                format!("R:A = {} is not good although e ≤ 2", x[i].describe())
            })?;
        }
    }

    // ρ is surjective exactly for Gorenstein rings and the special residue extensions
    let special = r.special_residue_degree().is_some_and(|(_, prime)| prime);
    let theorem12_case = if inv.gorenstein {
        CorrespondenceCase::Gorenstein
    } else if special {
        CorrespondenceCase::Special
    } else {
        CorrespondenceCase::RhoNotSurjective
    };
    ensure(
        rho_surjective == (theorem12_case != CorrespondenceCase::RhoNotSurjective),
        || format!("case {theorem12_case:?} inconsistent with ρ surjective = {rho_surjective}"),
    )?;

    // mV ⊆ R forces X = {m, R}
    if !r.is_dvr() && inv.max_ideal_is_v_ideal {
        let expected: HashSet<&Lattice<F>> = [r.maximal_ideal(), rl].into_iter().collect();
        let got: HashSet<&Lattice<F>> = x.iter().collect();
        ensure(expected == got, || "mV ⊆ R but X ≠ {m, R}".into())?;
    }

    let floor_check = if opts.floor_check_width > 0 && !r.is_dvr() && !opts.monomial_only {
        let fc = wider_floor_check(r, opts.floor_check_width, opts)?;
        ensure(fc.all_contain_conductor, || {
            "a trace ideal below the conductor floor misses C".into()
        })?;
        ensure(fc.trace_ideals_found == x.len(), || {
            "wider floor found extra trace ideals".into()
        })?;
        Some(fc)
    } else {
        None
    };

    Ok(EnumerationReport {
        schema: 1,
        ring: ring_name.to_string(),
        field: r.ambient().descriptor(),
        quotient_dimension: v.colength(rl)?,
        overring_search: if opts.monomial_only {
            "oversemigroups (monomial members only)"
        } else {
            "adjunction"
        }
        .into(),
        trace_ideals: x.iter().map(|i| i.describe()).collect(),
        overrings: y.iter().map(|a| a.lattice().describe()).collect(),
        overring_gorenstein,
        stable_classes: reps.iter().map(|i| i.describe()).collect(),
        good_ideals: good.iter().map(|i| i.describe()).collect(),
        rho,
        eta,
        xi,
        rho_surjective,
        rho_injective,
        rho_bijective: rho_surjective && rho_injective,
        eta_injective,
        overrings_reflexive,
        x_equals_g,
        all_overrings_gorenstein,
        theorem12_case,
        trace_scan,
        overring_scan,
        floor_check,
        invariants: inv,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::FiniteField;
    use crate::semigroup::NumericalSemigroup;
    use crate::series::Ambient;

    #[test]
    fn projective_point_counts() {
        let f3 = FiniteField::prime(3).unwrap();
        assert_eq!(projective_points(&f3, 3).len(), 13);
        assert_eq!(projective_points(&f3, 0).len(), 0);
    }

    #[test]
    fn overrings_of_345_over_f2() {
        let amb = Ambient::new(FiniteField::prime(2).unwrap());
        let r =
            LocalRing::semigroup_ring(&amb, &NumericalSemigroup::new(&[3, 4, 5]).unwrap()).unwrap();
        let y = enumerate_overrings(&r, &EnumOptions::default()).unwrap();
        assert_eq!(y.len(), 3);
        let (scanned, cert) = scan_overrings(&r, &EnumOptions::default()).unwrap();
        assert_eq!(scanned, y);
        assert_eq!(cert.scanned, cert.galois_number);
    }

    #[test]
    fn colength_levels_of_23() {
        let amb = Ambient::new(FiniteField::prime(2).unwrap());
        let r =
            LocalRing::semigroup_ring(&amb, &NumericalSemigroup::new(&[2, 3]).unwrap()).unwrap();
        let levels = ideals_by_colength(&r, 3).unwrap();
        // R; m; (t2,t3)->{t2+a t3, t3V...}: colength 2 ideals contain m^2 = t4V
        assert_eq!(levels[0].len(), 1);
        assert_eq!(levels[1].len(), 1);
        assert_eq!(levels[1][0], *r.maximal_ideal());
    }
}
