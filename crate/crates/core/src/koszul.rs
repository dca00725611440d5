//! Total-degree slices of the contractions of the N-complex `K(A)`.
//!
//! `K(A) = ⊕_m A ⊗ W_m` with `W_m = (A^!_m)^* ⊂ E^⊗m` and differential
//! `a ⊗ (e_0 ⊗ … ⊗ e_m) ↦ a e_0 ⊗ (e_1 ⊗ … ⊗ e_m)`. A power `d^j` splits off
//! the first `j` letters of each word; the remaining tail lies in `W_{m-j}` and
//! is re-expressed in its row basis. Slices are finite: position `(a, m)` has
//! dimension `dim A_a · dim W_m`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::exactlin::{Matrix, Scalar, TensorVector, Word};
use crate::homalg::{GradedAlgebra, Side};
use crate::series::{chi_direct, koszul_necessary, KoszulVerdict};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Position {
    pub algebra_degree: usize,
    pub dual_degree: usize,
    pub dim: usize,
}

/// A finite complex `… → P_2 → P_1 → P_0 → 0` with `matrices[i]: P_{i+1} → P_i`.
#[derive(Debug, Clone)]
pub struct ComplexSlice {
    pub total_degree: usize,
    pub positions: Vec<Position>,
    pub matrices: Vec<Matrix>,
}

impl ComplexSlice {
    /// Alternating sum of position dimensions, `P_0` counted positively.
    pub fn euler_characteristic(&self) -> i64 {
        alternating(self.positions.iter().map(|p| p.dim))
    }

    /// Index of the first consecutive pair whose composition is nonzero.
    pub fn composition_defect(&self) -> Option<usize> {
        self.matrices
            .windows(2)
            .position(|pair| !pair[0].mul(&pair[1]).is_zero())
    }
}

fn alternating<I: IntoIterator<Item = usize>>(dims: I) -> i64 {
    dims.into_iter()
        .enumerate()
        .map(|(i, d)| if i % 2 == 0 { d as i64 } else { -(d as i64) })
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PositionHomology {
    pub algebra_degree: usize,
    pub dual_degree: usize,
    pub dim: usize,
    /// Kernel of the outgoing map.
    pub kernel: usize,
    /// Image of the incoming map.
    pub image: usize,
    pub homology: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyReport {
    pub total_degree: usize,
    pub positions: Vec<PositionHomology>,
    pub euler_characteristic: i64,
}

impl HomologyReport {
    pub fn homology_euler(&self) -> i64 {
        alternating(self.positions.iter().map(|p| p.homology))
    }

    pub fn is_acyclic(&self) -> bool {
        self.positions.iter().all(|p| p.homology == 0)
    }

    pub fn total_homology(&self) -> usize {
        self.positions.iter().map(|p| p.homology).sum()
    }
}

/// Homology dimensions of a slice via exact ranks.
pub fn homology(slice: &ComplexSlice) -> Result<HomologyReport> {
    if let Some(i) = slice.composition_defect() {
        return Err(Error::Consistency(format!(
            "d∘d ≠ 0 between positions {} and {} of the degree-{} slice",
            i + 2,
            i,
            slice.total_degree
        )));
    }
    let ranks: Vec<usize> = slice.matrices.iter().map(Matrix::rank).collect();
    let positions = slice
        .positions
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let out_rank = if i == 0 { 0 } else { ranks[i - 1] };
            let kernel = p.dim - out_rank;
            let image = ranks.get(i).copied().unwrap_or(0);
            PositionHomology {
                algebra_degree: p.algebra_degree,
                dual_degree: p.dual_degree,
                dim: p.dim,
                kernel,
                image,
                homology: kernel - image,
            }
        })
        .collect();
    Ok(HomologyReport {
        total_degree: slice.total_degree,
        positions,
        euler_characteristic: slice.euler_characteristic(),
    })
}

/// Structure tensor of `d^j` on `W_m`: for each prefix `π` of length `j`, the
/// matrix (rows: basis of `W_{m-j}`, columns: basis of `W_m`) of `w ↦ t_π(w)`,
/// where `w = Σ_π π ⊗ t_π(w)`.
pub fn split_structure(a: &GradedAlgebra, m: usize, j: usize) -> Result<Vec<(Word, Matrix)>> {
    if j > m {
        return Err(Error::Parameter(format!("cannot split {j} letters off degree {m}")));
    }
    let source = a.dual_component_space(m)?;
    let target = a.dual_component_space(m - j)?;
    let mut tails: BTreeMap<Word, Vec<TensorVector>> = BTreeMap::new();
    for (col, row) in source.rows().iter().enumerate() {
        for (w, c) in row {
            let (prefix, tail) = w.split_at(j);
            let slot = tails
                .entry(prefix)
                .or_insert_with(|| alloc::vec![TensorVector::zero(m - j); source.dim()]);
            slot[col].add_term(tail, c.clone());
        }
    }
    let mut out = Vec::with_capacity(tails.len());
    for (prefix, columns) in tails {
        let mut mat = Matrix::zeros(target.dim(), source.dim());
        for (col, t) in columns.iter().enumerate() {
            let coords = target.coordinates(t)?.ok_or_else(|| {
                Error::Consistency(format!(
                    "tail {t} after prefix {prefix} is not in W_{} (nesting violated)",
                    m - j
                ))
            })?;
            for (i, x) in coords.into_iter().enumerate() {
                mat[(i, col)] = x;
            }
        }
        out.push((prefix, mat));
    }
    Ok(out)
}

/// Matrix of `d^j: A_a ⊗ W_m → A_{a+j} ⊗ W_{m-j}`.
///
/// Basis of `A_a ⊗ W_m` is ordered normal-monomial-major: index `b · dim W_m + w`.
pub fn differential_power(a: &GradedAlgebra, alg_degree: usize, m: usize, j: usize) -> Result<Matrix> {
    let structure = split_structure(a, m, j)?;
    let dw_src = a.dual_dim(m)?;
    let dw_tgt = a.dual_dim(m - j)?;
    let basis = a.normal_basis(alg_degree)?;
    let rows = a.component_dim(alg_degree + j)? * dw_tgt;
    let mut mat = Matrix::zeros(rows, basis.len() * dw_src);
    for (prefix, tail) in &structure {
        for (bi, b) in basis.iter().enumerate() {
            let product = a.reduce_word(&b.concat(prefix))?;
            for col in 0..dw_src {
                for i in 0..dw_tgt {
                    let t = &tail[(i, col)];
                    if t.is_zero() {
                        continue;
                    }
                    for (bj, c) in &product {
                        mat[(bj * dw_tgt + i, bi * dw_src + col)] += c * t;
                    }
                }
            }
        }
    }
    Ok(mat)
}

fn check_degree(a: &GradedAlgebra, n: usize) -> Result<()> {
    if n > a.max_degree() {
        return Err(Error::DegreeNotComputed {
            requested: n,
            max: a.max_degree(),
        });
    }
    Ok(())
}

/// Total-degree-`n` slice of the contraction `C_{p,r}`, which alternates
/// `d^{N-p}` and `d^p` starting from dual degree `r`.
pub fn build_contraction_slice(a: &GradedAlgebra, p: usize, r: usize, n: usize) -> Result<ComplexSlice> {
    let nn = a.relation_degree();
    if !(r < p && p < nn) {
        return Err(Error::Parameter(format!(
            "contraction needs 0 <= r < p <= N-1, got p={p}, r={r}, N={nn}"
        )));
    }
    check_degree(a, n)?;
    let mut duals = alloc::vec![r];
    let mut step = nn - p;
    while let Some(next) = duals.last().map(|m| m + step).filter(|&m| m <= n) {
        duals.push(next);
        step = nn - step;
    }
    let duals: Vec<usize> = duals.into_iter().filter(|&m| m <= n).collect();
    let positions = duals
        .iter()
        .map(|&m| {
            Ok(Position {
                algebra_degree: n - m,
                dual_degree: m,
                dim: a.component_dim(n - m)? * a.dual_dim(m)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let matrices = duals
        .windows(2)
        .map(|pair| differential_power(a, n - pair[1], pair[1], pair[1] - pair[0]))
        .collect::<Result<Vec<_>>>()?;
    Ok(ComplexSlice {
        total_degree: n,
        positions,
        matrices,
    })
}

/// Slice `C^{(n)}_{N-1,0}` of the Koszul complex:
/// `… → A_{n-N} ⊗ W_N → A_{n-1} ⊗ W_1 → A_n → 0`.
pub fn build_koszul_slice(a: &GradedAlgebra, n: usize) -> Result<ComplexSlice> {
    build_contraction_slice(a, a.relation_degree() - 1, 0, n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProbeVerdict {
    /// All slices `1..=up_to` are acyclic.
    Consistent { up_to: usize },
    NonzeroHomology { degree: usize },
}

#[derive(Debug, Clone)]
pub struct KoszulProbe {
    /// Reports for total degrees `1..=max_degree`.
    pub reports: Vec<HomologyReport>,
    pub verdict: ProbeVerdict,
}

/// Verdict from per-degree reports (degrees 1.. in order).
pub fn summarize(reports: &[HomologyReport]) -> ProbeVerdict {
    match reports.iter().find(|r| !r.is_acyclic()) {
        Some(r) => ProbeVerdict::NonzeroHomology { degree: r.total_degree },
        None => ProbeVerdict::Consistent {
            up_to: reports.last().map_or(0, |r| r.total_degree),
        },
    }
}

/// Acyclicity of the Koszul slices in degrees `1..=max_degree`.
pub fn koszul_probe(a: &GradedAlgebra, max_degree: usize) -> Result<KoszulProbe> {
    if max_degree < 1 {
        return Err(Error::Parameter("max degree must be at least 1".into()));
    }
    let reports = (1..=max_degree)
        .map(|n| homology(&build_koszul_slice(a, n)?))
        .collect::<Result<Vec<_>>>()?;
    assemble_probe(a, reports)
}

/// Builds the probe from reports for degrees `1, 2, …` (in order), however
/// they were computed.
///
/// Each slice's alternating homology sum is checked against `χ^(n)`, and a
/// refutation from the series test must show up here at or before its degree.
pub fn assemble_probe(a: &GradedAlgebra, reports: Vec<HomologyReport>) -> Result<KoszulProbe> {
    let max_degree = reports.len();
    if max_degree < 1 {
        return Err(Error::Parameter("max degree must be at least 1".into()));
    }
    let chi = chi_direct(a, max_degree)?;
    for (i, report) in reports.iter().enumerate() {
        let n = i + 1;
        if report.total_degree != n {
            return Err(Error::Parameter(format!(
                "report {i} is for degree {}, expected {n}",
                report.total_degree
            )));
        }
        if report.homology_euler() != chi.coeff(n)? {
            return Err(Error::Consistency(format!(
                "degree {n}: homology Euler sum {} but χ = {}",
                report.homology_euler(),
                chi.coeff(n)?
            )));
        }
    }
    let verdict = summarize(&reports);
    if let KoszulVerdict::Refuted { degree } = koszul_necessary(a, max_degree)? {
        let agrees = matches!(verdict, ProbeVerdict::NonzeroHomology { degree: d } if d <= degree);
        if !agrees {
            return Err(Error::Consistency(format!(
                "series refutes Koszulity at {degree} but the probe reports {verdict:?}"
            )));
        }
    }
    Ok(KoszulProbe { reports, verdict })
}

/// Dual degrees of the finite resolution `0 → A⊗W_4 → A⊗W_3 → A⊗W_1 → A`.
const RESOLUTION_DUALS: [usize; 4] = [0, 1, 3, 4];

/// Matrix of the transpose of `d^j: A⊗W_m → A⊗W_{m-j}` on `Hom_A(-, A)`:
/// `W_{m-j}^* ⊗ A_a → W_m^* ⊗ A_{a+j}`, where prefixes now multiply on the left.
///
/// Basis of `W^* ⊗ A_a` is ordered dual-major: index `w · dim A_a + b`.
pub fn transposed_differential(a: &GradedAlgebra, alg_degree: usize, m: usize, j: usize) -> Result<Matrix> {
    let structure = split_structure(a, m, j)?;
    let dw_big = a.dual_dim(m)?;
    let dw_small = a.dual_dim(m - j)?;
    let basis = a.normal_basis(alg_degree)?;
    let da_src = basis.len();
    let da_tgt = a.component_dim(alg_degree + j)?;
    let mut mat = Matrix::zeros(dw_big * da_tgt, dw_small * da_src);
    for (prefix, tail) in &structure {
        for (bi, b) in basis.iter().enumerate() {
            let product = a.reduce_word(&prefix.concat(b))?;
            for col in 0..dw_big {
                for i in 0..dw_small {
                    let t = &tail[(i, col)];
                    if t.is_zero() {
                        continue;
                    }
                    for (bj, c) in &product {
                        mat[(col * da_tgt + bj, i * da_src + bi)] += c * t;
                    }
                }
            }
        }
    }
    Ok(mat)
}

/// Degree-`n` slice of `Hom_A(resolution, A)`:
/// `W_0^*⊗A_{n-4} → W_1^*⊗A_{n-3} → W_3^*⊗A_{n-1} → W_4^*⊗A_n`.
///
/// Stored as a [`ComplexSlice`] with the terminal term `W_4^*⊗A_n` at
/// position 0, so cohomology at a term is the homology at its position.
pub fn build_dual_resolution_slice(a: &GradedAlgebra, n: usize) -> Result<ComplexSlice> {
    check_degree(a, n)?;
    let top = RESOLUTION_DUALS[3];
    let duals: Vec<usize> = RESOLUTION_DUALS
        .iter()
        .rev()
        .copied()
        .filter(|&m| n + m >= top)
        .collect();
    let positions = duals
        .iter()
        .map(|&m| {
            let alg = n + m - top;
            Ok(Position {
                algebra_degree: alg,
                dual_degree: m,
                dim: a.component_dim(alg)? * a.dual_dim(m)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let matrices = duals
        .windows(2)
        .map(|pair| {
            let (big, small) = (pair[0], pair[1]);
            transposed_differential(a, n + small - top, big, big - small)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ComplexSlice {
        total_degree: n,
        positions,
        matrices,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GorensteinVerdict {
    /// Only cohomology is one-dimensional, at the terminal term, in one degree.
    Consistent { terminal_degree: usize },
    Violated {
        /// `(degree, dual degree, dimension)` of nonzero non-terminal cohomology.
        interior: Vec<(usize, usize, usize)>,
        /// `(degree, dimension)` of nonzero terminal cohomology.
        terminal: Vec<(usize, usize)>,
    },
    /// The resolution is not exact, so dualizing it says nothing.
    Inapplicable { first_inexact_degree: usize },
}

#[derive(Debug, Clone)]
pub struct GorensteinReport {
    pub resolution_exact: bool,
    /// Cohomology of the dualized resolution for degrees `0..=max_degree`.
    pub cohomology: Vec<HomologyReport>,
    pub verdict: GorensteinVerdict,
}

/// Dualizes the length-3 resolution of `K` and inspects its cohomology.
///
/// Needs a cubic algebra with `W_5 = 0` (so `W_m = 0` for all `m ≥ 5`).
pub fn gorenstein_probe(a: &GradedAlgebra, max_degree: usize) -> Result<GorensteinReport> {
    if a.relation_degree() != 3 {
        return Err(Error::Inapplicable("the Gorenstein probe handles cubic algebras only".into()));
    }
    check_degree(a, max_degree.max(5))?;
    if a.dual_dim(5)? != 0 {
        return Err(Error::Inapplicable("W_5 is nonzero; the resolution is not of length 3".into()));
    }
    let mut first_inexact = None;
    for n in 1..=max_degree {
        if !homology(&build_koszul_slice(a, n)?)?.is_acyclic() {
            first_inexact = Some(n);
            break;
        }
    }
    if let Some(first_inexact_degree) = first_inexact {
        return Ok(GorensteinReport {
            resolution_exact: false,
            cohomology: Vec::new(),
            verdict: GorensteinVerdict::Inapplicable { first_inexact_degree },
        });
    }
    let cohomology = (0..=max_degree)
        .map(|n| homology(&build_dual_resolution_slice(a, n)?))
        .collect::<Result<Vec<_>>>()?;
    let top = RESOLUTION_DUALS[3];
    let mut interior = Vec::new();
    let mut terminal = Vec::new();
    for report in &cohomology {
        for p in &report.positions {
            if p.homology == 0 {
                continue;
            }
            if p.dual_degree == top {
                terminal.push((report.total_degree, p.homology));
            } else {
                interior.push((report.total_degree, p.dual_degree, p.homology));
            }
        }
    }
    let verdict = match terminal.as_slice() {
        [(n, 1)] if interior.is_empty() => GorensteinVerdict::Consistent { terminal_degree: *n },
        _ => GorensteinVerdict::Violated { interior, terminal },
    };
    Ok(GorensteinReport {
        resolution_exact: true,
        cohomology,
        verdict,
    })
}

/// Right multiplication by a word, as a matrix `A_n → A_{n+|w|}`, built from
/// the generator maps. Used to cross-check slice entries.
pub fn word_multiplication(a: &GradedAlgebra, n: usize, w: &Word, side: Side) -> Result<Matrix> {
    let mut acc = Matrix::identity(a.component_dim(n)?);
    let letters: Vec<u8> = match side {
        Side::Right => w.letters().collect(),
        Side::Left => w.letters().rev().collect(),
    };
    for (deg, l) in (n..).zip(letters) {
        acc = a.multiply_by_generator(deg, l, side)?.mul(&acc);
    }
    Ok(acc)
}

/// Column of `reduce_word` as a dense vector; test helper for callers.
pub fn normal_coordinates(a: &GradedAlgebra, w: &Word) -> Result<Vec<Scalar>> {
    a.reduce_to_normal(&TensorVector::from_word(*w))
}
