//! Dense eigendecomposition of graph Laplacians.
//!
//! Conventions, used everywhere downstream:
//!
//! - Eigenvalues are stored in descending order λ_1 ≥ … ≥ λ_n = 0.
//! - The constant eigenvector is replaced by the exact `(1/√n)·1` and is
//!   addressed as *layer 0*; layers `1..n-1` are the non-constant
//!   eigenvectors in descending eigenvalue order. For disconnected graphs the
//!   remaining zero-eigenvalue vectors are re-orthonormalized against the
//!   exact constant.
//! - Layers `1..n-1` are partitioned into multiplicity groups: maximal runs
//!   of numerically equal eigenvalues. Scores built from group totals do not
//!   depend on the solver's basis choice inside a degenerate eigenspace.

use nalgebra::DMatrix;
use thiserror::Error;

use crate::eigh;
use crate::graph::SymmetricMatrix;

#[derive(Debug, Error)]
pub enum SpectralError {
    #[error("matrix is not a Laplacian: row {row} sums to {sum:e}")]
    NotLaplacian { row: usize, sum: f64 },
    #[error("eigenvalue {value:e} is negative beyond tolerance")]
    NegativeEigenvalue { value: f64 },
    #[error("eigendecomposition failed verification: {check} error {error:e} exceeds {limit:e}")]
    VerificationFailed {
        check: &'static str,
        error: f64,
        limit: f64,
    },
    #[error("eigenvector basis degenerate at column {0} during re-orthonormalization")]
    DegenerateBasis(usize),
    #[error("eigensolver failed: {0}")]
    SolverFailed(String),
    #[error("eigenvalues must be sorted descending: position {0}")]
    NotDescending(usize),
    #[error("expected {expected} eigenpairs of dimension {expected}, got {got}")]
    ShapeMismatch { expected: usize, got: usize },
    #[error("order {order} out of range 0..={max}")]
    OrderOutOfRange { order: usize, max: usize },
    #[error("empty matrix")]
    Empty,
}

#[derive(Debug, Clone, Copy)]
pub struct SpectralOptions {
    /// Relative tolerance for reconstruction/orthonormality checks and for
    /// clamping numerically negative eigenvalues, scaled by max(1, λ_1).
    pub tol: f64,
    /// Relative tolerance for declaring two consecutive eigenvalues equal
    /// (multiplicity grouping), scaled by max(1, λ_1).
    pub group_tol: f64,
}

impl Default for SpectralOptions {
    fn default() -> Self {
        SpectralOptions {
            tol: 1e-7,
            group_tol: 1e-8,
        }
    }
}

/// Maximal run of layers `first..=last` whose eigenvalues are numerically
/// equal. Layer 0 (the constant vector) is never part of a group.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MultiplicityGroup {
    pub first: usize,
    pub last: usize,
    /// Representative eigenvalue (group mean).
    pub eigenvalue: f64,
}

impl MultiplicityGroup {
    pub fn len(&self) -> usize {
        self.last - self.first + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, layer: usize) -> bool {
        self.first <= layer && layer <= self.last
    }
}

/// Full eigendecomposition of a Laplacian, immutable after construction.
#[derive(Debug, Clone)]
pub struct Spectrum {
    n: usize,
    /// Descending; the final entry is exactly 0 and pairs with the constant.
    eigenvalues: Vec<f64>,
    /// Column c pairs with `eigenvalues[c]`; column n-1 is exactly (1/√n)·1.
    vectors: DMatrix<f64>,
    groups: Vec<MultiplicityGroup>,
}

impl Spectrum {
    /// Decompose a Laplacian with default tolerances.
    pub fn compute(l: &SymmetricMatrix) -> Result<Self, SpectralError> {
        Self::compute_with(l, &SpectralOptions::default())
    }

    pub fn compute_with(
        l: &SymmetricMatrix,
        opts: &SpectralOptions,
    ) -> Result<Self, SpectralError> {
        let n = l.dim();
        if n == 0 {
            return Err(SpectralError::Empty);
        }
        let max_abs = l
            .row(0)
            .iter()
            .chain((1..n).flat_map(|i| l.row(i).iter()))
            .fold(0.0f64, |m, &v| m.max(v.abs()));
        for i in 0..n {
            let sum = l.row_sum(i);
            if sum.abs() > opts.tol * max_abs.max(1.0) {
                return Err(SpectralError::NotLaplacian { row: i, sum });
            }
        }

        let (asc_values, asc_vectors) =
            eigh::symmetric_eigen(l.raw_data(), n).map_err(SpectralError::SolverFailed)?;
        // Reverse to descending; column c of the result pairs eigenvalue c.
        let eigenvalues: Vec<f64> = asc_values.iter().rev().copied().collect();
        let mut vectors = DMatrix::zeros(n, n);
        for c in 0..n {
            let src = n - 1 - c;
            for r in 0..n {
                vectors[(r, c)] = asc_vectors[src * n + r];
            }
        }

        let spectrum = finish(eigenvalues, vectors, opts)?;
        spectrum.verify(l, opts)?;
        Ok(spectrum)
    }

    /// Assemble a spectrum from externally produced eigenpairs.
    ///
    /// `columns[c]` is the eigenvector paired with `eigenvalues[c]`, which
    /// must be sorted descending. Orthonormality is verified and the zero
    /// eigenspace is canonicalized exactly as in [`Spectrum::compute`].
    pub fn from_parts(
        eigenvalues: Vec<f64>,
        columns: &[Vec<f64>],
        opts: &SpectralOptions,
    ) -> Result<Self, SpectralError> {
        let n = eigenvalues.len();
        if n == 0 {
            return Err(SpectralError::Empty);
        }
        if columns.len() != n || columns.iter().any(|c| c.len() != n) {
            return Err(SpectralError::ShapeMismatch {
                expected: n,
                got: columns.len(),
            });
        }
        for i in 1..n {
            if eigenvalues[i] > eigenvalues[i - 1] {
                return Err(SpectralError::NotDescending(i));
            }
        }
        let mut vectors = DMatrix::zeros(n, n);
        for (c, col) in columns.iter().enumerate() {
            for (r, &v) in col.iter().enumerate() {
                vectors[(r, c)] = v;
            }
        }
        // Validate the raw input before the canonicalization pass, which
        // would otherwise silently repair a non-orthonormal basis.
        let ortho = orthonormality_error(&vectors);
        let limit = opts.tol * eigenvalues[0].max(1.0);
        if ortho > limit {
            return Err(SpectralError::VerificationFailed {
                check: "orthonormality",
                error: ortho,
                limit,
            });
        }
        finish(eigenvalues, vectors, opts)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Eigenvalues in descending order, length n, trailing zeros exact.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// λ for a layer: layer 0 is the constant direction (λ = 0); layer
    /// s ≥ 1 is the s-th largest eigenvalue.
    pub fn lambda(&self, layer: usize) -> f64 {
        assert!(layer < self.n, "layer {layer} out of range");
        if layer == 0 {
            0.0
        } else {
            self.eigenvalues[layer - 1]
        }
    }

    fn column_of_layer(&self, layer: usize) -> usize {
        assert!(layer < self.n, "layer {layer} out of range");
        if layer == 0 {
            self.n - 1
        } else {
            layer - 1
        }
    }

    /// Component i of the layer-s eigenvector.
    pub fn component(&self, layer: usize, node: usize) -> f64 {
        self.vectors[(node, self.column_of_layer(layer))]
    }

    /// The layer-s eigenvector as an owned vector.
    pub fn layer(&self, layer: usize) -> Vec<f64> {
        let c = self.column_of_layer(layer);
        (0..self.n).map(|r| self.vectors[(r, c)]).collect()
    }

    pub fn groups(&self) -> &[MultiplicityGroup] {
        &self.groups
    }

    /// The multiplicity group containing a non-constant layer.
    pub fn group_of(&self, layer: usize) -> &MultiplicityGroup {
        assert!(
            layer >= 1 && layer < self.n,
            "layer {layer} out of range 1..n"
        );
        self.groups
            .iter()
            .find(|g| g.contains(layer))
            .expect("groups partition 1..n-1")
    }

    /// Whether an order is a group boundary (orders 0 and group-final layers).
    pub fn is_group_aligned(&self, order: usize) -> bool {
        order == 0 || (order < self.n && self.group_of(order).last == order)
    }

    /// Per-node total Σ_{s in group} q_s(i)², the basis-independent mass of a
    /// degenerate eigenspace.
    pub fn group_mass(&self, group: &MultiplicityGroup) -> Vec<f64> {
        let mut mass = vec![0.0; self.n];
        for layer in group.first..=group.last {
            let c = self.column_of_layer(layer);
            for (i, m) in mass.iter_mut().enumerate() {
                let q = self.vectors[(i, c)];
                *m += q * q;
            }
        }
        mass
    }

    pub fn total_eigenvalue(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    /// Fraction of the eigenvalue mass carried by the k largest eigenvalues.
    ///
    /// Returns 0 at k = 0 and 1 at k = n-1 (λ_n = 0). An edgeless graph has
    /// no eigenvalue mass at all; it reports 1 for every k ≥ 1.
    pub fn cumulative_fraction(&self, k: usize) -> Result<f64, SpectralError> {
        if k > self.n - 1 {
            return Err(SpectralError::OrderOutOfRange {
                order: k,
                max: self.n - 1,
            });
        }
        if k == 0 {
            return Ok(0.0);
        }
        let total = self.total_eigenvalue();
        if total == 0.0 {
            return Ok(1.0);
        }
        Ok(self.eigenvalues[..k].iter().sum::<f64>() / total)
    }

    /// Consecutive differences λ_k - λ_{k+1} for k = 1..n-1; length n-1,
    /// entries nonnegative.
    pub fn gap_profile(&self) -> Vec<f64> {
        (1..self.n)
            .map(|k| self.eigenvalues[k - 1] - self.eigenvalues[k])
            .collect()
    }

    fn scale(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0).max(1.0)
    }

    fn verify(&self, l: &SymmetricMatrix, opts: &SpectralOptions) -> Result<(), SpectralError> {
        let limit = opts.tol * self.scale();
        let ortho = orthonormality_error(&self.vectors);
        if ortho > limit {
            return Err(SpectralError::VerificationFailed {
                check: "orthonormality",
                error: ortho,
                limit,
            });
        }
        let lam = DMatrix::from_diagonal(&nalgebra::DVector::from_row_slice(&self.eigenvalues));
        let recon = &self.vectors * lam * self.vectors.transpose();
        let mut residual = 0.0f64;
        for i in 0..self.n {
            for j in 0..self.n {
                residual = residual.max((recon[(i, j)] - l.get(i, j)).abs());
            }
        }
        if residual > limit {
            return Err(SpectralError::VerificationFailed {
                check: "reconstruction",
                error: residual,
                limit,
            });
        }
        Ok(())
    }

    /// Export rows (1-based index, eigenvalue, cumulative fraction).
    pub fn summary_rows(&self) -> Vec<(usize, f64, f64)> {
        let total = self.total_eigenvalue();
        let mut cum = 0.0;
        self.eigenvalues
            .iter()
            .enumerate()
            .map(|(i, &ev)| {
                cum += ev;
                let frac = if total == 0.0 { 1.0 } else { cum / total };
                (i + 1, ev, frac)
            })
            .collect()
    }
}

/// Shared construction tail: clamp the zero eigenspace, install the exact
/// constant vector, re-orthonormalize every other column against it and its
/// predecessors (descending-eigenvalue order), and compute multiplicity
/// groups.
///
/// The re-orthonormalization tightens the solver's basis to machine
/// precision; each column moves by at most the solver's own orthogonality
/// error, so eigen-residuals are preserved.
fn finish(
    mut eigenvalues: Vec<f64>,
    vectors: DMatrix<f64>,
    opts: &SpectralOptions,
) -> Result<Spectrum, SpectralError> {
    let n = eigenvalues.len();
    let scale = eigenvalues[0].max(1.0);

    if eigenvalues[n - 1] < -opts.tol * scale {
        return Err(SpectralError::NegativeEigenvalue {
            value: eigenvalues[n - 1],
        });
    }
    if eigenvalues[n - 1] > opts.tol * scale {
        // A Laplacian always carries λ = 0.
        return Err(SpectralError::NotLaplacian {
            row: n - 1,
            sum: eigenvalues[n - 1],
        });
    }
    let zero_count = eigenvalues
        .iter()
        .rev()
        .take_while(|&&v| v.abs() <= opts.group_tol.max(opts.tol) * scale)
        .count();
    for v in eigenvalues[n - zero_count..].iter_mut() {
        *v = 0.0;
    }

    // The exact constant takes the final slot; the solver's n columns are
    // re-orthonormalized against it in order. Exactly one column (inside the
    // zero eigenspace, which already contains the constant) must collapse and
    // is dropped; zero-λ columns are interchangeable, so compaction keeps
    // every kept column paired with its eigenvalue.
    let inv_sqrt_n = 1.0 / (n as f64).sqrt();
    let constant = nalgebra::DVector::from_element(n, inv_sqrt_n);
    let mut cols: Vec<nalgebra::DVector<f64>> = Vec::with_capacity(n - 1);
    let mut dropped: Option<usize> = None;
    for c in 0..n {
        let mut v: nalgebra::DVector<f64> = vectors.column(c).into_owned();
        let proj = constant.dot(&v);
        v.axpy(-proj, &constant, 1.0);
        for p in &cols {
            let proj = p.dot(&v);
            v.axpy(-proj, p, 1.0);
        }
        let norm = v.norm();
        if norm < 1e-6 {
            if dropped.is_some() || c < n - zero_count {
                return Err(SpectralError::DegenerateBasis(c));
            }
            dropped = Some(c);
            continue;
        }
        cols.push(v / norm);
    }
    if cols.len() != n - 1 {
        return Err(SpectralError::DegenerateBasis(n - 1));
    }
    let mut vectors = DMatrix::zeros(n, n);
    for (c, col) in cols.iter().enumerate() {
        vectors.set_column(c, col);
    }
    vectors.set_column(n - 1, &constant);

    let mut groups = Vec::new();
    let mut first = 1usize;
    for layer in 1..n - 1 {
        let gap = eigenvalues[layer - 1] - eigenvalues[layer];
        if gap > opts.group_tol * scale {
            groups.push(make_group(first, layer, &eigenvalues));
            first = layer + 1;
        }
    }
    if n >= 2 {
        groups.push(make_group(first, n - 1, &eigenvalues));
    }

    Ok(Spectrum {
        n,
        eigenvalues,
        vectors,
        groups,
    })
}

fn make_group(first: usize, last: usize, eigenvalues: &[f64]) -> MultiplicityGroup {
    let sum: f64 = (first..=last).map(|layer| eigenvalues[layer - 1]).sum();
    MultiplicityGroup {
        first,
        last,
        eigenvalue: sum / (last - first + 1) as f64,
    }
}

fn orthonormality_error(q: &DMatrix<f64>) -> f64 {
    let gram = q.transpose() * q;
    let n = q.nrows();
    let mut err = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let target = if i == j { 1.0 } else { 0.0 };
            err = err.max((gram[(i, j)] - target).abs());
        }
    }
    err
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Graph, ParseOptions};

    fn plain(g: &Graph) -> Spectrum {
        Spectrum::compute(&g.laplacian()).unwrap()
    }

    #[test]
    fn star4_eigenvalues_and_groups() {
        let s = plain(&Graph::star(4).unwrap());
        let ev = s.eigenvalues();
        // Star on n nodes: {n, 1 (x n-2), 0}; the sum must equal trace(L) = 6.
        let expected = [4.0, 1.0, 1.0, 0.0];
        for (a, b) in ev.iter().zip(expected) {
            assert!((a - b).abs() < 1e-9, "{a} vs {b}");
        }
        assert_eq!(s.groups().len(), 2);
        assert_eq!((s.groups()[0].first, s.groups()[0].last), (1, 1));
        assert_eq!((s.groups()[1].first, s.groups()[1].last), (2, 3));
        assert!(s.is_group_aligned(0));
        assert!(s.is_group_aligned(1));
        assert!(!s.is_group_aligned(2));
        assert!(s.is_group_aligned(3));
    }

    #[test]
    fn complete_n_spectrum() {
        let s = plain(&Graph::complete(3).unwrap());
        let ev = s.eigenvalues();
        assert!((ev[0] - 3.0).abs() < 1e-9);
        assert!((ev[1] - 3.0).abs() < 1e-9);
        assert_eq!(ev[2], 0.0);
        assert_eq!(s.groups().len(), 1);
    }

    #[test]
    fn isolated_nodes_add_zero_eigenvalues() {
        let g = Graph::parse_edge_list("a b\nc\nd", &ParseOptions::default()).unwrap();
        let s = plain(&g);
        let zeros = s.eigenvalues().iter().filter(|&&v| v == 0.0).count();
        assert_eq!(zeros, 3); // k = 2 isolated nodes plus the constant layer
    }

    #[test]
    fn constant_layer_is_exact() {
        for g in [
            Graph::star(5).unwrap(),
            Graph::parse_edge_list("a b\nc d\ne", &ParseOptions::default()).unwrap(),
        ] {
            let s = plain(&g);
            let expect = 1.0 / (g.node_count() as f64).sqrt();
            for i in 0..g.node_count() {
                assert_eq!(s.component(0, i), expect);
            }
        }
    }

    #[test]
    fn disconnected_zero_space_is_orthonormal() {
        // Two components plus two isolated nodes: zero multiplicity 4.
        let g = Graph::parse_edge_list("a b\nb c\nd e\nf\ng", &ParseOptions::default()).unwrap();
        let s = plain(&g);
        let zeros = s.eigenvalues().iter().filter(|&&v| v == 0.0).count();
        assert_eq!(zeros, 4);
        // verify() already checked global orthonormality; spot-check the
        // replaced columns against the constant.
        let n = g.node_count();
        for layer in (n - zeros + 1)..n {
            let dot: f64 = (0..n)
                .map(|i| s.component(layer, i) * s.component(0, i))
                .sum();
            assert!(dot.abs() < 1e-10);
        }
    }

    #[test]
    fn cumulative_fraction_examples() {
        let s = plain(&Graph::star(4).unwrap());
        assert_eq!(s.cumulative_fraction(0).unwrap(), 0.0);
        // eigenvalues [4,1,1,0]: 4/6 at k = 1
        assert!((s.cumulative_fraction(1).unwrap() - 2.0 / 3.0).abs() < 1e-12);
        assert!((s.cumulative_fraction(3).unwrap() - 1.0).abs() < 1e-12);
        assert!(s.cumulative_fraction(4).is_err());

        let k3 = plain(&Graph::complete(3).unwrap());
        assert!((k3.cumulative_fraction(1).unwrap() - 0.5).abs() < 1e-12);

        let empty = plain(&Graph::parse_edge_list("a\nb\nc", &ParseOptions::default()).unwrap());
        assert_eq!(empty.cumulative_fraction(0).unwrap(), 0.0);
        assert_eq!(empty.cumulative_fraction(2).unwrap(), 1.0);
    }

    #[test]
    fn gap_profile_examples() {
        let star = plain(&Graph::star(4).unwrap());
        let gaps = star.gap_profile();
        assert_eq!(gaps.len(), 3);
        assert!((gaps[0] - 3.0).abs() < 1e-9);
        assert!(gaps[1].abs() < 1e-9);
        assert!((gaps[2] - 1.0).abs() < 1e-9);

        let k3 = plain(&Graph::complete(3).unwrap());
        let gaps = k3.gap_profile();
        assert!(gaps[0].abs() < 1e-9 && (gaps[1] - 3.0).abs() < 1e-9);

        let p2 = plain(&Graph::path(2).unwrap());
        assert_eq!(p2.gap_profile().len(), 1);
        assert!((p2.gap_profile()[0] - 2.0).abs() < 1e-9);
    }

    #[test]
    fn rejects_non_laplacian() {
        let mut m = SymmetricMatrix::zeros(2);
        m.set(0, 0, 1.0);
        m.set(1, 1, 1.0);
        m.set(0, 1, 0.5);
        assert!(matches!(
            Spectrum::compute(&m),
            Err(SpectralError::NotLaplacian { .. })
        ));
    }

    #[test]
    fn from_parts_accepts_exact_star4_table() {
        // Hand eigenpairs for the 4-star (constant vector last).
        let r12 = 12f64.sqrt();
        let r2 = 2f64.sqrt();
        let r6 = 6f64.sqrt();
        let cols = vec![
            vec![3.0 / r12, -1.0 / r12, -1.0 / r12, -1.0 / r12],
            vec![0.0, 0.0, -1.0 / r2, 1.0 / r2],
            vec![0.0, 2.0 / r6, -1.0 / r6, -1.0 / r6],
            vec![0.5, 0.5, 0.5, 0.5],
        ];
        let s = Spectrum::from_parts(vec![3.0, 1.0, 1.0, 0.0], &cols, &SpectralOptions::default())
            .unwrap();
        assert_eq!(s.component(0, 0), 0.5);
        assert_eq!(s.groups().len(), 2);
    }

    #[test]
    fn from_parts_rejects_bad_input() {
        let cols = vec![vec![1.0, 0.0], vec![1.0, 0.0]];
        assert!(matches!(
            Spectrum::from_parts(vec![2.0, 0.0], &cols, &SpectralOptions::default()),
            Err(SpectralError::VerificationFailed { .. })
        ));
        let cols = vec![vec![1.0, 0.0], vec![0.0, 1.0]];
        assert!(matches!(
            Spectrum::from_parts(vec![0.0, 2.0], &cols, &SpectralOptions::default()),
            Err(SpectralError::NotDescending(_))
        ));
    }

    #[test]
    fn group_mass_sums_to_group_size() {
        let s = plain(&Graph::core_periphery(12, 3).unwrap());
        for g in s.groups() {
            let mass = s.group_mass(g);
            let total: f64 = mass.iter().sum();
            assert!((total - g.len() as f64).abs() < 1e-9);
        }
    }
}
