use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use trace_ideals::calculus::{self, AntistableReport, IdealClassification};
use trace_ideals::enumerate::{self, EnumOptions, EnumerationReport};
use trace_ideals::ring::{LocalRing, RingInvariants, DEFAULT_WINDOW_CAP};
use trace_ideals::scalars::{make_field, parse_modulus, Field, FieldCtx, FieldSpec, FiniteField};
use trace_ideals::semigroup::{self, CrossCheckReport, NumericalSemigroup, SemigroupInfo};
use trace_ideals::series::{Ambient, TruncatedSeries};

use crate::errors::CliError;
use crate::GlobalOpts;

/// Work that runs on a ring over whichever field the options select.
pub trait RingTask {
    type Output;
    fn run<F: Field>(self, r: &LocalRing<F>, name: &str) -> Result<Self::Output, CliError>;
}

#[derive(Debug, Deserialize, Default)]
struct Config {
    #[serde(default)]
    moduli: BTreeMap<String, Vec<u32>>,
}

fn modulus_for(g: &GlobalOpts, spec: &FieldSpec) -> Result<Option<Vec<u32>>, CliError> {
    if let Some(m) = &g.modulus {
        return Ok(Some(parse_modulus(m)?));
    }
    let (FieldSpec::Extension { p, n }, Some(path)) = (spec, &g.config) else {
        return Ok(None);
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    let cfg: Config =
        toml::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    let q = p.pow(*n);
    Ok(cfg
        .moduli
        .get(&spec.to_string())
        .or_else(|| cfg.moduli.get(&format!("F{q}")))
        .cloned())
}

/// Commas inside parentheses belong to a coefficient.
pub fn split_top_level(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur).trim().to_string());
                continue;
            }
            _ => {}
        }
        cur.push(ch);
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

fn parse_series<F: Field>(
    amb: &Ambient<F>,
    list: &str,
) -> Result<Vec<TruncatedSeries<F::Elem>>, CliError> {
    split_top_level(list)
        .iter()
        .map(|s| TruncatedSeries::parse(amb, s).map_err(CliError::from))
        .collect()
}

enum RingDesc {
    Semigroup(NumericalSemigroup),
    Generators(String),
    ResidueExtension(FieldSpec),
}

fn parse_ring(desc: &str) -> Result<RingDesc, CliError> {
    let (kind, body) = desc
        .split_once(':')
        .ok_or_else(|| CliError::Parse(format!("ring `{desc}`: expected sg:, gens: or resext:")))?;
    match kind {
        "sg" => body
            .parse()
            .map(RingDesc::Semigroup)
            .map_err(|e: semigroup::SemigroupError| CliError::Parse(e.to_string())),
        "gens" => Ok(RingDesc::Generators(body.to_string())),
        "resext" => Ok(RingDesc::ResidueExtension(body.parse()?)),
        _ => Err(CliError::Parse(format!("unknown ring kind `{kind}`"))),
    }
}

fn build<F: Field, T: RingTask>(
    k: F,
    desc: &RingDesc,
    g: &GlobalOpts,
    name: &str,
    task: T,
) -> Result<T::Output, CliError> {
    let amb = Ambient::new(k);
    let r = match desc {
        RingDesc::Semigroup(s) => LocalRing::semigroup_ring(&amb, s)?,
        RingDesc::Generators(list) => {
            let gens = parse_series(&amb, list)?;
            LocalRing::from_generators(&amb, &gens, g.window.unwrap_or(DEFAULT_WINDOW_CAP))?
        }
        RingDesc::ResidueExtension(_) => unreachable!("handled by the caller"),
    };
    task.run(&r, name)
}

/// Parses the ring descriptor, builds the coefficient field and runs `task`.
pub fn with_ring<T: RingTask>(g: &GlobalOpts, ring: &str, task: T) -> Result<T::Output, CliError> {
    let desc = parse_ring(ring)?;
    if let RingDesc::ResidueExtension(spec) = &desc {
        let FieldSpec::Extension { p, n } = spec else {
            return Err(CliError::Parse(format!(
                "resext needs a proper extension, got {spec}"
            )));
        };
        let ext = FiniteField::extension(*p, *n, modulus_for(g, spec)?)?;
        let (_, r) = LocalRing::<FiniteField>::residue_extension_of(&ext)?;
        return task.run(&r, ring);
    }
    let spec: FieldSpec = g.field.parse()?;
    match make_field(&spec, modulus_for(g, &spec)?)? {
        FieldCtx::Rationals(q) => build(q, &desc, g, ring, task),
        FieldCtx::Finite(f) => build(f, &desc, g, ring, task),
    }
}

pub struct EnumerateTask {
    pub opts: EnumOptions,
}

impl RingTask for EnumerateTask {
    type Output = EnumerationReport;

    fn run<F: Field>(self, r: &LocalRing<F>, name: &str) -> Result<EnumerationReport, CliError> {
        Ok(enumerate::verify_ring(r, name, &self.opts)?)
    }
}

pub struct AnalyzeTask {
    pub ideals: Vec<String>,
    pub antistable: Option<usize>,
    pub cross_check: bool,
    pub paranoid: bool,
}

#[derive(Debug, Serialize)]
pub struct IdealReport {
    #[serde(flatten)]
    pub classification: IdealClassification,
    /// `dim_k(R/I)`.
    pub colength: usize,
    /// `I:I` when `I` is a trace ideal.
    pub rho: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct AnalyzeReport {
    pub schema: u32,
    pub ring: String,
    pub field: String,
    pub lattice: String,
    pub invariants: RingInvariants,
    pub conductor_ideal: String,
    pub maximal_ideal: String,
    /// `m:m`.
    pub blowup: String,
    pub blowup_is_normalization: bool,
    /// `m = t·(m:m)`.
    pub maximal_is_t_blowup: bool,
    /// `dim_k(V/R)`.
    pub normalization_colength: usize,
    /// `dim_k(R/C)`.
    pub conductor_colength: usize,
    /// Length of `R/C` as an `R`-module.
    pub conductor_length: usize,
    pub special_residue_degree: Option<(usize, bool)>,
    pub semigroup: Option<SemigroupInfo>,
    pub ideals: Vec<IdealReport>,
    pub antistable: Option<AntistableReport>,
    pub cross_check: Option<CrossCheckReport>,
}

impl RingTask for AnalyzeTask {
    type Output = AnalyzeReport;

    fn run<F: Field>(self, r: &LocalRing<F>, name: &str) -> Result<AnalyzeReport, CliError> {
        let amb = Arc::clone(r.ambient());
        let rl = r.lattice();
        let m = r.maximal_ideal();
        let c = r.conductor_ideal();
        let v = r.normalization();
        let b = m.colon(m)?;
        let tb = b.shift(1);
        let cc = rl.colength(&c)?;
        let mut ideals = Vec::new();
        for spec in &self.ideals {
            let gens = parse_series(&amb, spec)?;
            let i = r.ideal(&gens)?;
            if !rl.contains(&i) || i.is_zero() {
                return Err(CliError::Other(format!(
                    "{} is not a nonzero ideal of R",
                    i.describe()
                )));
            }
            let classification = calculus::classify(r, &i, self.paranoid)?;
            let rho = if classification.is_trace {
                Some(calculus::rho(r, &i)?.lattice().describe())
            } else {
                None
            };
            ideals.push(IdealReport {
                classification,
                colength: rl.colength(&i)?,
                rho,
            });
        }
        let antistable = match self.antistable {
            Some(n) => Some(calculus::antistable_ring_check(r, n, self.paranoid)?),
            None => None,
        };
        let semigroup = r.monomial_semigroup();
        let cross_check = if self.cross_check {
            if semigroup.is_none() {
                return Err(CliError::Other(
                    "--cross-check needs a monomial ring".into(),
                ));
            }
            Some(semigroup::monomial_cross_check(r)?)
        } else {
            None
        };
        Ok(AnalyzeReport {
            schema: 1,
            ring: name.to_string(),
            field: amb.descriptor(),
            lattice: rl.describe(),
            invariants: r.invariants()?,
            conductor_ideal: c.describe(),
            maximal_ideal: m.describe(),
            blowup: b.describe(),
            blowup_is_normalization: b == v,
            maximal_is_t_blowup: *m == tb,
            normalization_colength: v.colength(rl)?,
            conductor_colength: cc,
            conductor_length: cc / r.residue_degree(),
            special_residue_degree: r.special_residue_degree(),
            semigroup: semigroup.map(|s| s.info()),
            ideals,
            antistable,
            cross_check,
        })
    }
}

pub fn analyze_text(a: &AnalyzeReport) -> String {
    let inv = &a.invariants;
    let mut out = vec![
        format!("R = {}  over {}", a.lattice, a.field),
        format!(
            "conductor {}  e = {}  embdim = {}  type = {}{}  Gorenstein {}  almost Gorenstein {:?}",
            inv.conductor,
            inv.multiplicity,
            inv.embedding_dimension,
            inv.cm_type,
            if inv.type_is_dvr_convention {
                " (DVR)"
            } else {
                ""
            },
            inv.gorenstein,
            inv.almost_gorenstein
        ),
        format!(
            "Hilbert function {:?}  residue degree {}",
            inv.hilbert, inv.residue_degree
        ),
        format!(
            "C = {}  dim R/C = {}  length R/C = {}  dim V/R = {}",
            a.conductor_ideal, a.conductor_colength, a.conductor_length, a.normalization_colength
        ),
        format!(
            "m = {}  m:m = {}  (m:m = V: {}, m = t(m:m): {})",
            a.maximal_ideal, a.blowup, a.blowup_is_normalization, a.maximal_is_t_blowup
        ),
    ];
    if let Some((n, prime)) = a.special_residue_degree {
        out.push(format!("residue extension of degree {n} (prime: {prime})"));
    }
    if let Some(s) = &a.semigroup {
        out.push(format!(
            "semigroup {:?}  gaps {:?}  PF {:?}",
            s.generators, s.gaps, s.pseudo_frobenius
        ));
    }
    for i in &a.ideals {
        let c = &i.classification;
        out.push(format!(
            "I = {}  colength {}  trace {}  stable {}  good {}  reflexive {}  principal {}  strongly antistable {}",
            c.ideal, i.colength, c.is_trace, c.is_stable, c.is_good, c.is_reflexive, c.is_principal, c.strongly_antistable
        ));
        out.push(format!(
            "    trace closure {}  I:I = {}",
            c.trace_closure, c.endomorphism_ring
        ));
        if let Some(rho) = &i.rho {
            out.push(format!("    rho(I) = {rho}"));
        }
    }
    if let Some(r) = &a.antistable {
        out.push(format!(
            "antistable (e <= 2): {}  ideals checked per colength {:?}{}",
            r.antistable,
            r.ideals_per_colength,
            r.failing_ideal
                .as_ref()
                .map(|f| format!("  first failure {f}"))
                .unwrap_or_default()
        ));
    }
    if let Some(x) = &a.cross_check {
        out.push(format!(
            "cross-check {}: {} monomial ideals, {} trace, {} stable, {} good, {} disagreements",
            x.semigroup,
            x.ideals_checked,
            x.trace,
            x.stable,
            x.good,
            x.disagreements.len()
        ));
    }
    out.join("\n")
}

pub fn enumerate_text(r: &EnumerationReport) -> String {
    let mut out = vec![format!(
        "R = {}  over {}  dim V/R = {}  overrings via {}",
        r.ring, r.field, r.quotient_dimension, r.overring_search
    )];
    out.push(format!("trace ideals ({}):", r.trace_ideals.len()));
    for (i, x) in r.trace_ideals.iter().enumerate() {
        out.push(format!("  X{i} = {x}  ->  rho = Y{}", r.rho[i]));
    }
    out.push(format!("overrings ({}):", r.overrings.len()));
    for (i, y) in r.overrings.iter().enumerate() {
        out.push(format!(
            "  Y{i} = {y}{}  ->  eta = X{}",
            if r.overring_gorenstein[i] {
                "  [Gorenstein]"
            } else {
                ""
            },
            r.eta[i]
        ));
    }
    out.push(format!("stable classes ({}):", r.stable_classes.len()));
    for (i, s) in r.stable_classes.iter().enumerate() {
        out.push(format!("  {s}  ->  xi = Y{}", r.xi[i]));
    }
    out.push(format!(
        "good ideals ({}): {}",
        r.good_ideals.len(),
        r.good_ideals.join(", ")
    ));
    out.push(format!(
        "rho surjective {}  injective {}  bijective {}  eta injective {}  X = G {}  case {:?}",
        r.rho_surjective,
        r.rho_injective,
        r.rho_bijective,
        r.eta_injective,
        r.x_equals_g,
        r.theorem12_case
    ));
    out.push(format!(
        "trace scan: {} of {} subspaces of a {}-dimensional space",
        r.trace_scan.scanned, r.trace_scan.galois_number, r.trace_scan.dimension
    ));
    if let Some(s) = &r.overring_scan {
        out.push(format!(
            "overring scan: {} of {} subspaces, {} rings",
            s.scanned, s.galois_number, s.hits
        ));
    }
    if let Some(f) = &r.floor_check {
        out.push(format!(
            "floor check (width {}): {} trace ideals, all contain the conductor: {}",
            f.width, f.trace_ideals_found, f.all_contain_conductor
        ));
    }
    out.join("\n")
}
