//! Subcommand implementations. Each returns a JSON document, a human table
//! and whether every mandatory check passed.

use std::fmt::{self, Write as _};

use nhom_core::catalog::{self, centrality_check, dual_relations_check, gl_invariance, CatalogEntry, Family};
use nhom_core::koszul::{
    assemble_probe, build_contraction_slice, build_koszul_slice, gorenstein_probe, homology, GorensteinVerdict,
    HomologyReport, ProbeVerdict,
};
use nhom_core::plactic::{enumerate_tableaux, knuth_agreement, Tableau};
use nhom_core::series::{chi_direct, poincare, q_series, IntSeries, KoszulVerdict};
use nhom_core::{Error, GradedAlgebra, MemoryGuard, Presentation, Scalar, Word};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::par::map_ordered;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug)]
pub enum RunError {
    Usage(String),
    Input(String),
    Compute(Error),
}

impl fmt::Display for RunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RunError::Usage(m) => write!(f, "usage: {m}"),
            RunError::Input(m) => write!(f, "input: {m}"),
            RunError::Compute(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for RunError {}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        RunError::Compute(e)
    }
}

pub type RunResult<T> = Result<T, RunError>;

#[derive(Debug, Clone, Copy)]
pub struct Settings {
    pub max_degree: usize,
    pub jobs: usize,
    pub guard: MemoryGuard,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AlgebraIdentity {
    pub name: String,
    pub generators: usize,
    pub relation_degree: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
}

impl fmt::Display for AlgebraIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.file, &self.q, &self.r) {
            (Some(path), _, _) => write!(f, "{path} (D={}, N={})", self.generators, self.relation_degree),
            (None, Some(q), Some(r)) => write!(f, "{}(q={q}, r={r})", self.name),
            _ => write!(f, "{}(D={})", self.name, self.generators),
        }
    }
}

/// A loaded algebra together with how it was named.
#[derive(Debug, Clone)]
pub struct AlgebraSpec {
    pub identity: AlgebraIdentity,
    pub family: Option<Family>,
    pub presentation: Presentation,
}

impl AlgebraSpec {
    pub fn catalog(family: Family) -> RunResult<Self> {
        let entry = CatalogEntry::new(family.clone())?;
        let (q, r) = match &family {
            Family::ArtinSchelter { q, r } => (Some(q.to_string()), Some(r.to_string())),
            _ => (None, None),
        };
        Ok(AlgebraSpec {
            identity: AlgebraIdentity {
                name: entry.name().to_string(),
                generators: entry.presentation.generators(),
                relation_degree: entry.presentation.degree(),
                q,
                r,
                file: None,
            },
            family: Some(family),
            presentation: entry.presentation,
        })
    }

    pub fn file(path: &str, presentation: Presentation) -> Self {
        AlgebraSpec {
            identity: AlgebraIdentity {
                name: "file".into(),
                generators: presentation.generators(),
                relation_degree: presentation.degree(),
                q: None,
                r: None,
                file: Some(path.to_string()),
            },
            family: None,
            presentation,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CommandOutput {
    pub json: String,
    pub table: String,
    pub ok: bool,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Envelope<'a, T: Serialize> {
    schema_version: u32,
    command: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    algebra: Option<&'a AlgebraIdentity>,
    max_degree: usize,
    ok: bool,
    #[serde(flatten)]
    body: &'a T,
}

fn finish<T: Serialize>(
    command: &str,
    algebra: Option<&AlgebraIdentity>,
    settings: &Settings,
    body: &T,
    table: String,
    ok: bool,
) -> CommandOutput {
    let envelope = Envelope {
        schema_version: SCHEMA_VERSION,
        command,
        algebra,
        max_degree: settings.max_degree,
        ok,
        body,
    };
    let json = serde_json::to_string_pretty(&envelope).expect("report types serialize");
    CommandOutput { json, table, ok }
}

fn with_dual(spec: &AlgebraSpec, s: &Settings) -> RunResult<GradedAlgebra> {
    Ok(GradedAlgebra::with_guard(spec.presentation.clone(), s.max_degree, s.guard)?)
}

fn quotient(p: &Presentation, s: &Settings) -> RunResult<GradedAlgebra> {
    Ok(GradedAlgebra::quotient_with_guard(p.clone(), s.max_degree, s.guard)?)
}

fn dims(a: &GradedAlgebra) -> RunResult<Vec<usize>> {
    Ok((0..=a.max_degree()).map(|n| a.component_dim(n)).collect::<Result<_, _>>()?)
}

fn dual_dims(a: &GradedAlgebra) -> RunResult<Vec<usize>> {
    Ok((0..=a.max_degree()).map(|n| a.dual_dim(n)).collect::<Result<_, _>>()?)
}

fn join<T: fmt::Display>(xs: &[T], sep: &str) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn need_degree(s: &Settings, min: usize) -> RunResult<()> {
    if s.max_degree < min {
        return Err(RunError::Usage(format!("--max-degree must be at least {min}")));
    }
    Ok(())
}

#[derive(Serialize)]
struct HilbertBody {
    poincare: Vec<usize>,
}

pub fn hilbert(spec: &AlgebraSpec, s: &Settings) -> RunResult<CommandOutput> {
    let a = quotient(&spec.presentation, s)?;
    let poincare = dims(&a)?;
    let mut t = format!("algebra: {}\n n  dim A_n\n", spec.identity);
    for (n, d) in poincare.iter().enumerate() {
        let _ = writeln!(t, "{n:>2}  {d}");
    }
    let _ = writeln!(t, "P_A: {}", join(&poincare, ","));
    Ok(finish("hilbert", Some(&spec.identity), s, &HilbertBody { poincare }, t, true))
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct DualCheckBody {
    passed: bool,
    relations_dim: usize,
    annihilator_dim: usize,
    explicit_dim: usize,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct DualBody {
    relations_dim: usize,
    annihilator_dim: usize,
    intersection_dims: Vec<usize>,
    dual_quotient_dims: Vec<usize>,
    routes_agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    dual_relations_check: Option<DualCheckBody>,
}

fn explicit_dual_check(spec: &AlgebraSpec) -> RunResult<Option<DualCheckBody>> {
    let Some(family @ (Family::Parafermion { .. } | Family::Plactic { .. })) = &spec.family else {
        return Ok(None);
    };
    if spec.presentation.degree() != 3 {
        return Ok(None);
    }
    let entry = CatalogEntry::new(family.clone())?;
    let report = dual_relations_check(&entry)?;
    Ok(Some(DualCheckBody {
        passed: report.passed(),
        relations_dim: report.relations_dim,
        annihilator_dim: report.annihilator_dim,
        explicit_dim: report.explicit_dim,
    }))
}

pub fn dual(spec: &AlgebraSpec, s: &Settings) -> RunResult<CommandOutput> {
    let p = &spec.presentation;
    let a = with_dual(spec, s)?;
    let intersection_dims = dual_dims(&a)?;
    let dual_quotient_dims = dims(&quotient(&p.dual(), s)?)?;
    let routes_agree = intersection_dims == dual_quotient_dims;
    let check = explicit_dual_check(spec)?;
    let ok = routes_agree && check.as_ref().is_none_or(|c| c.passed);
    let body = DualBody {
        relations_dim: p.relations().dim(),
        annihilator_dim: p.dual().relations().dim(),
        intersection_dims,
        dual_quotient_dims,
        routes_agree,
        dual_relations_check: check,
    };
    let mut t = format!(
        "algebra: {}\ndim R = {}, dim R^perp = {}\n n  dim A^!_n (intersections)  dim A^!_n (dual quotient)\n",
        spec.identity, body.relations_dim, body.annihilator_dim
    );
    for n in 0..=s.max_degree {
        let _ = writeln!(t, "{n:>2}  {:>25}  {:>25}", body.intersection_dims[n], body.dual_quotient_dims[n]);
    }
    let _ = writeln!(t, "routes agree: {}", if routes_agree { "yes" } else { "NO" });
    if let Some(c) = &body.dual_relations_check {
        let _ = writeln!(t, "explicit dual relations: {}", if c.passed { "pass" } else { "FAIL" });
    }
    Ok(finish("dual", Some(&spec.identity), s, &body, t, ok))
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct VerdictBody {
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    up_to: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    degree: Option<usize>,
}

impl VerdictBody {
    fn series(v: KoszulVerdict) -> Self {
        match v {
            KoszulVerdict::Consistent { up_to } => VerdictBody { status: "consistent", up_to: Some(up_to), degree: None },
            KoszulVerdict::Refuted { degree } => VerdictBody { status: "refuted", up_to: None, degree: Some(degree) },
        }
    }

    fn probe(v: ProbeVerdict) -> Self {
        match v {
            ProbeVerdict::Consistent { up_to } => VerdictBody { status: "acyclic", up_to: Some(up_to), degree: None },
            ProbeVerdict::NonzeroHomology { degree } => {
                VerdictBody { status: "nonzeroHomology", up_to: None, degree: Some(degree) }
            }
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ChiBody {
    poincare: Vec<i64>,
    q: Vec<i64>,
    chi_direct: Vec<i64>,
    chi_via_product: Vec<i64>,
    routes_agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<VerdictBody>,
}

fn series_verdict(chi: &IntSeries) -> KoszulVerdict {
    match (1..=chi.order()).find(|&n| chi.coeffs()[n] != 0) {
        Some(degree) => KoszulVerdict::Refuted { degree },
        None => KoszulVerdict::Consistent { up_to: chi.order() },
    }
}

pub fn chi(spec: &AlgebraSpec, s: &Settings) -> RunResult<CommandOutput> {
    need_degree(s, 1)?;
    let a = with_dual(spec, s)?;
    let p = poincare(&a, s.max_degree)?;
    let q = q_series(&a, s.max_degree)?;
    let direct = chi_direct(&a, s.max_degree)?;
    let product = p.mul(&q)?;
    let routes_agree = direct == product;
    let verdict = routes_agree.then(|| series_verdict(&direct));
    let mut t = format!("algebra: {}\nP(t) = {p}\nQ(t) = {q}\nχ = {direct}\n", spec.identity);
    if routes_agree {
        t.push_str("P·Q agrees with the direct Euler characteristic\n");
    } else {
        let _ = writeln!(t, "MISMATCH: P·Q = {product}");
    }
    match verdict {
        Some(KoszulVerdict::Refuted { degree }) => {
            let _ = writeln!(t, "verdict: refuted at {degree}");
        }
        Some(KoszulVerdict::Consistent { up_to }) => {
            let _ = writeln!(t, "verdict: consistent through {up_to} (necessary condition only)");
        }
        None => {}
    }
    let body = ChiBody {
        poincare: p.coeffs().to_vec(),
        q: q.coeffs().to_vec(),
        chi_direct: direct.coeffs().to_vec(),
        chi_via_product: product.coeffs().to_vec(),
        routes_agree,
        verdict: verdict.map(VerdictBody::series),
    };
    Ok(finish("chi", Some(&spec.identity), s, &body, t, routes_agree))
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct PositionBody {
    algebra_degree: usize,
    dual_degree: usize,
    dim: usize,
    kernel: usize,
    image: usize,
    homology: usize,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct SliceBody {
    degree: usize,
    euler_characteristic: i64,
    homology_euler: i64,
    acyclic: bool,
    positions: Vec<PositionBody>,
}

impl From<&HomologyReport> for SliceBody {
    fn from(r: &HomologyReport) -> Self {
        SliceBody {
            degree: r.total_degree,
            euler_characteristic: r.euler_characteristic,
            homology_euler: r.homology_euler(),
            acyclic: r.is_acyclic(),
            positions: r
                .positions
                .iter()
                .map(|p| PositionBody {
                    algebra_degree: p.algebra_degree,
                    dual_degree: p.dual_degree,
                    dim: p.dim,
                    kernel: p.kernel,
                    image: p.image,
                    homology: p.homology,
                })
                .collect(),
        }
    }
}

fn koszul_reports(a: &GradedAlgebra, s: &Settings) -> RunResult<Vec<HomologyReport>> {
    let degrees: Vec<usize> = (1..=s.max_degree).collect();
    Ok(map_ordered(s.jobs, &degrees, |n| homology(&build_koszul_slice(a, n)?))?)
}

#[derive(Serialize)]
struct KoszulBody {
    verdict: VerdictBody,
    slices: Vec<SliceBody>,
}

pub fn koszul(spec: &AlgebraSpec, s: &Settings) -> RunResult<CommandOutput> {
    need_degree(s, 1)?;
    let a = with_dual(spec, s)?;
    let probe = assemble_probe(&a, koszul_reports(&a, s)?)?;
    let mut t = format!("algebra: {}\n n  dims                      homology          χ\n", spec.identity);
    for r in &probe.reports {
        let dims: Vec<usize> = r.positions.iter().map(|p| p.dim).collect();
        let hom: Vec<usize> = r.positions.iter().map(|p| p.homology).collect();
        let _ = writeln!(t, "{:>2}  {:<24}  {:<16}  {}", r.total_degree, join(&dims, " "), join(&hom, " "), r.euler_characteristic);
    }
    match probe.verdict {
        ProbeVerdict::Consistent { up_to } => {
            let _ = writeln!(t, "verdict: Koszul slices acyclic in degrees 1..={up_to}");
        }
        ProbeVerdict::NonzeroHomology { degree } => {
            let _ = writeln!(t, "verdict: nonzero homology at degree {degree}, not Koszul");
        }
    }
    let body = KoszulBody {
        verdict: VerdictBody::probe(probe.verdict),
        slices: probe.reports.iter().map(SliceBody::from).collect(),
    };
    Ok(finish("koszul", Some(&spec.identity), s, &body, t, true))
}

#[derive(Serialize)]
struct HomologyBody {
    slices: Vec<SliceBody>,
}

pub fn homology_tables(spec: &AlgebraSpec, s: &Settings) -> RunResult<CommandOutput> {
    need_degree(s, 1)?;
    let a = with_dual(spec, s)?;
    let reports = koszul_reports(&a, s)?;
    let mut t = format!("algebra: {}\n", spec.identity);
    for r in &reports {
        let _ = writeln!(t, "degree {} (Euler characteristic {})", r.total_degree, r.euler_characteristic);
        let _ = writeln!(t, "  term           dim  kernel  image  homology");
        for p in &r.positions {
            let term = format!("A_{}⊗W_{}", p.algebra_degree, p.dual_degree);
            let _ = writeln!(t, "  {term:<12} {:>5} {:>7} {:>6} {:>9}", p.dim, p.kernel, p.image, p.homology);
        }
    }
    let body = HomologyBody { slices: reports.iter().map(SliceBody::from).collect() };
    Ok(finish("homology", Some(&spec.identity), s, &body, t, true))
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct GorensteinVerdictBody {
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    terminal_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_inexact_degree: Option<usize>,
    /// `[degree, dual degree, dimension]`.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    interior: Vec<[usize; 3]>,
    /// `[degree, dimension]`.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    terminal: Vec<[usize; 2]>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct GorensteinBody {
    resolution_exact: bool,
    verdict: GorensteinVerdictBody,
    cohomology: Vec<SliceBody>,
}

pub fn gorenstein(spec: &AlgebraSpec, s: &Settings) -> RunResult<CommandOutput> {
    let s5 = Settings { max_degree: s.max_degree.max(5), ..*s };
    let a = with_dual(spec, &s5)?;
    let report = gorenstein_probe(&a, s.max_degree)?;
    let mut t = format!("algebra: {}\n", spec.identity);
    let verdict = match &report.verdict {
        GorensteinVerdict::Consistent { terminal_degree } => {
            let _ = writeln!(t, "verdict: Gorenstein-consistent; one-dimensional cohomology at the terminal term in degree {terminal_degree}");
            GorensteinVerdictBody {
                status: "consistent",
                terminal_degree: Some(*terminal_degree),
                first_inexact_degree: None,
                interior: Vec::new(),
                terminal: Vec::new(),
            }
        }
        GorensteinVerdict::Violated { interior, terminal } => {
            let _ = writeln!(t, "verdict: not Gorenstein");
            for (n, m, dim) in interior {
                let _ = writeln!(t, "  interior cohomology: degree {n}, term W_{m}^*, dimension {dim}");
            }
            for (n, dim) in terminal {
                let _ = writeln!(t, "  terminal cohomology: degree {n}, dimension {dim}");
            }
            GorensteinVerdictBody {
                status: "violated",
                terminal_degree: None,
                first_inexact_degree: None,
                interior: interior.iter().map(|&(n, m, d)| [n, m, d]).collect(),
                terminal: terminal.iter().map(|&(n, d)| [n, d]).collect(),
            }
        }
        GorensteinVerdict::Inapplicable { first_inexact_degree } => {
            let _ = writeln!(t, "verdict: inapplicable, the Koszul resolution is inexact at degree {first_inexact_degree}");
            GorensteinVerdictBody {
                status: "inapplicable",
                terminal_degree: None,
                first_inexact_degree: Some(*first_inexact_degree),
                interior: Vec::new(),
                terminal: Vec::new(),
            }
        }
    };
    let body = GorensteinBody {
        resolution_exact: report.resolution_exact,
        verdict,
        cohomology: report.cohomology.iter().map(SliceBody::from).collect(),
    };
    Ok(finish("gorenstein", Some(&spec.identity), s, &body, t, true))
}

/// Parses `121` or `10.2.11`.
pub fn parse_word(token: &str) -> RunResult<Word> {
    let bad = || RunError::Input(format!("malformed word `{token}`"));
    let letters: Vec<u8> = if token.contains('.') {
        token.split('.').map(|p| p.parse::<u8>().map_err(|_| bad())).collect::<Result<_, _>>()?
    } else {
        token
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(bad))
            .collect::<Result<_, _>>()?
    };
    if letters.contains(&0) {
        return Err(RunError::Input(format!("letter 0 in `{token}`; letters start at 1")));
    }
    Word::new(&letters).map_err(|e| RunError::Input(e.to_string()))
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct NormalFormBody {
    word: String,
    generators: usize,
    tableau: Vec<Vec<u8>>,
    shape: Vec<usize>,
    reading_word: String,
}

pub fn plactic_normal_form(token: &str, generators: Option<usize>, s: &Settings) -> RunResult<CommandOutput> {
    let w = parse_word(token)?;
    let d = generators.unwrap_or((w.max_letter() as usize).max(1));
    if w.max_letter() as usize > d {
        return Err(RunError::Input(format!("letter {} in `{token}` outside 1..={d}", w.max_letter())));
    }
    let t = Tableau::from_word(&w);
    let table = if t.size() == 0 { "(empty tableau)\n".to_string() } else { format!("{t}\n") };
    let body = NormalFormBody {
        word: w.to_string(),
        generators: d,
        tableau: t.rows().to_vec(),
        shape: t.shape(),
        reading_word: t.reading_word().to_string(),
    };
    Ok(finish("plactic normal-form", None, s, &body, table, true))
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct CountRow {
    degree: usize,
    tableaux: usize,
    plactic_dim: usize,
    parafermion_dim: usize,
}

#[derive(Serialize)]
struct CountBody {
    generators: usize,
    counts: Vec<CountRow>,
}

pub fn plactic_count(generators: usize, s: &Settings) -> RunResult<CommandOutput> {
    let plactic = quotient(&catalog::plactic(generators)?, s)?;
    let parafermion = quotient(&catalog::parafermion(generators)?, s)?;
    let degrees: Vec<usize> = (0..=s.max_degree).collect();
    let tableaux = map_ordered(s.jobs, &degrees, |n| enumerate_tableaux(generators, n).map(|t| t.len()))?;
    let mut rows = Vec::new();
    let mut ok = true;
    let mut t = format!("generators: {generators}\n n  tableaux  dim P_n  dim B_n\n");
    for n in degrees {
        let row = CountRow {
            degree: n,
            tableaux: tableaux[n],
            plactic_dim: plactic.component_dim(n)?,
            parafermion_dim: parafermion.component_dim(n)?,
        };
        ok &= row.tableaux == row.plactic_dim && row.plactic_dim == row.parafermion_dim;
        let _ = writeln!(t, "{n:>2}  {:>8}  {:>7}  {:>7}", row.tableaux, row.plactic_dim, row.parafermion_dim);
        rows.push(row);
    }
    let _ = writeln!(t, "counts agree: {}", if ok { "yes" } else { "NO" });
    Ok(finish("plactic count", None, s, &CountBody { generators, counts: rows }, t, ok))
}

#[derive(Serialize)]
struct CheckResult {
    name: String,
    passed: bool,
    detail: String,
}

#[derive(Serialize)]
struct ChecksBody {
    checks: Vec<CheckResult>,
}

fn check(name: &str, outcome: RunResult<(bool, String)>) -> CheckResult {
    match outcome {
        Ok((passed, detail)) => CheckResult { name: name.into(), passed, detail },
        Err(e) => CheckResult { name: name.into(), passed: false, detail: e.to_string() },
    }
}

fn reversed(p: &Presentation) -> RunResult<Presentation> {
    let perm: Vec<u8> = (1..=p.generators() as u8).rev().collect();
    Ok(p.relabel(&perm)?)
}

pub fn checks(spec: &AlgebraSpec, s: &Settings) -> RunResult<CommandOutput> {
    need_degree(s, 1)?;
    let p = &spec.presentation;
    let d = p.generators();
    let nn = p.degree();
    let a = with_dual(spec, s)?;
    let max = s.max_degree;
    let degrees: Vec<usize> = (0..=max).collect();
    let mut results = Vec::new();

    results.push(check("ideal routes", (|| {
        let agree = map_ordered(s.jobs, &degrees, |n| {
            Ok::<_, Error>(&a.incremental_ideal(n)? == a.ideal_component(n)?)
        })?;
        Ok((agree.iter().all(|&x| x), format!("incremental and direct I_n agree for n ≤ {max}")))
    })()));

    results.push(check("dual routes", (|| {
        let inter = dual_dims(&a)?;
        let quot = dims(&quotient(&p.dual(), s)?)?;
        Ok((inter == quot, format!("dim A^!_n = {}", join(&inter, ","))))
    })()));

    results.push(check("double dual", Ok((&p.dual().dual() == p, "(R^perp)^perp = R".into()))));

    results.push(check("relation dimensions", (|| {
        let total = d.checked_pow(nn as u32).ok_or_else(|| RunError::Input("D^N overflows".into()))?;
        let sum = p.relations().dim() + p.dual().relations().dim();
        Ok((sum == total, format!("dim R + dim R^perp = {sum}, D^N = {total}")))
    })()));

    results.push(check("Euler characteristic", (|| {
        let direct = chi_direct(&a, max)?;
        let product = poincare(&a, max)?.mul(&q_series(&a, max)?)?;
        Ok((direct == product, format!("χ = {direct}")))
    })()));

    results.push(check("contractions compose to zero", (|| {
        let defects = map_ordered(s.jobs, &degrees, |n| {
            let mut bad = Vec::new();
            for pp in 1..nn {
                for r in 0..pp {
                    if build_contraction_slice(&a, pp, r, n)?.composition_defect().is_some() {
                        bad.push(format!("C_{pp},{r} at n={n}"));
                    }
                }
            }
            Ok::<_, Error>(bad)
        })?;
        let bad: Vec<String> = defects.into_iter().flatten().collect();
        let detail = if bad.is_empty() { format!("all C_p,r for n ≤ {max}") } else { bad.join("; ") };
        Ok((bad.is_empty(), detail))
    })()));

    let reports = koszul_reports(&a, s);
    results.push(check("Koszul homology matches χ", (|| {
        let probe = assemble_probe(&a, reports?)?;
        let detail = match probe.verdict {
            ProbeVerdict::Consistent { up_to } => format!("slices acyclic through n={up_to}"),
            ProbeVerdict::NonzeroHomology { degree } => format!("first nonzero homology at n={degree}"),
        };
        Ok((true, detail))
    })()));

    results.push(check("basis independence", (|| {
        let b = GradedAlgebra::with_guard(reversed(p)?, max, s.guard)?;
        let same_dims = dims(&a)? == dims(&b)? && dual_dims(&a)? == dual_dims(&b)?;
        let mut same_homology = true;
        for n in 1..=max {
            same_homology &= homology(&build_koszul_slice(&a, n)?)? == homology(&build_koszul_slice(&b, n)?)?;
        }
        Ok((same_dims && same_homology, "generators relabelled in reverse order".into()))
    })()));

    if let Some(c) = explicit_dual_check(spec)? {
        results.push(CheckResult {
            name: "explicit dual relations".into(),
            passed: c.passed,
            detail: format!("dim R^perp = {}, explicit span {}", c.annihilator_dim, c.explicit_dim),
        });
    }

    match &spec.family {
        Some(Family::Parafermion { .. } | Family::Paraboson { .. }) => {
            results.push(check("gl(D) invariance", (|| {
                let report = gl_invariance(p.relations(), d)?;
                Ok((report.invariant(), format!("{} derivations", report.derivations_checked)))
            })()));
        }
        Some(Family::Plactic { .. }) => {
            let top = max.min(5);
            results.push(check("Knuth agreement", (|| {
                let q = quotient(p, &Settings { max_degree: top, ..*s })?;
                let pairs: usize = (0..=top).map(|n| knuth_agreement(&q, n)).sum::<Result<_, _>>()?;
                Ok((true, format!("{pairs} word pairs through n={top}")))
            })()));
            results.push(check("tableau count", (|| {
                let counts: Vec<usize> =
                    (0..=max).map(|n| enumerate_tableaux(d, n).map(|t| t.len())).collect::<Result<_, _>>()?;
                Ok((counts == dims(&a)?, format!("#SSYT = {}", join(&counts, ","))))
            })()));
        }
        Some(Family::ArtinSchelter { q, r }) => {
            let param = if r.is_one() && !q.is_zero() {
                Some(q.clone())
            } else if q.is_one() && !r.is_zero() {
                Some(r.clone())
            } else {
                None
            };
            if let Some(param) = param.filter(|_| max >= 3) {
                results.push(check("centrality", (|| {
                    let report = centrality_check(&a, &param, max)?;
                    Ok((report.central(), format!("e1e2 - ({})^-1 e2e1 through n={}", param, report.verified_through)))
                })()));
            }
        }
        None => {}
    }

    let ok = results.iter().all(|c| c.passed);
    let mut t = format!("algebra: {}\n", spec.identity);
    for c in &results {
        let _ = writeln!(t, "[{}] {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
    }
    let passed = results.iter().filter(|c| c.passed).count();
    let _ = writeln!(t, "{passed} of {} checks passed", results.len());
    Ok(finish("checks", Some(&spec.identity), s, &ChecksBody { checks: results }, t, ok))
}

pub fn parse_scalar(flag: &str, text: &str) -> RunResult<Scalar> {
    text.trim()
        .parse::<Scalar>()
        .map_err(|_| RunError::Usage(format!("{flag} expects a rational like 2, -1 or 1/2, got `{text}`")))
}
