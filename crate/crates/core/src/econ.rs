//! Quadratic coordination game on a network: equilibrium responses, shock
//! attenuation, public-information disclosure, and targeted interventions.
//!
//! Agents trade off adapting to a local state θ_i against coordinating with
//! neighbors at strength β; the equilibrium action profile is
//! `a = (I + βL)^{-1} θ`. Everything downstream of that solve (attenuation
//! factors, disclosure criteria, targeting gains) is a function of the
//! Laplacian spectrum.

use nalgebra::{Cholesky, DMatrix, DVector};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::lec::{Measure, ScoreVector};
use crate::spectral::Spectrum;

#[derive(Debug, Error)]
pub enum EconError {
    #[error("coordination strength beta must be nonnegative, got {0}")]
    NegativeBeta(f64),
    #[error("state vector has length {got}, expected {expected}")]
    ThetaLength { got: usize, expected: usize },
    #[error("action vector has length {got}, expected {expected}")]
    ActionLength { got: usize, expected: usize },
    #[error("feasible target set is empty")]
    EmptyTargetSet,
    #[error("target index {index} out of range for graph of size {n}")]
    TargetOutOfRange { index: usize, n: usize },
    #[error("equilibrium solve failed")]
    SolveFailed,
    #[error("layer index {layer} out of range for graph of size {n}")]
    LayerOutOfRange { layer: usize, n: usize },
}

/// A scenario for the coordination game, serializable for the CLI.
///
/// `theta` accepts the named shock forms `"uniform"`, `"eigvec:k"`,
/// `"unit:i"` or an explicit vector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EconScenario {
    pub beta: f64,
    pub theta: ThetaSpec,
    #[serde(default)]
    pub beta_tilde: f64,
    /// Feasible target set; `None` means every node.
    #[serde(default)]
    pub targets: Option<Vec<usize>>,
}

/// A state vector, either explicit or named.
#[derive(Debug, Clone, PartialEq)]
pub enum ThetaSpec {
    Uniform,
    /// Laplacian eigenvector layer k (1 = largest eigenvalue, 0 = constant).
    Eigvec(usize),
    /// Standard basis vector e_i.
    Unit(usize),
    Values(Vec<f64>),
}

impl ThetaSpec {
    pub fn parse(text: &str) -> Option<Self> {
        if text == "uniform" {
            return Some(ThetaSpec::Uniform);
        }
        if let Some(k) = text.strip_prefix("eigvec:") {
            return k.parse().ok().map(ThetaSpec::Eigvec);
        }
        if let Some(i) = text.strip_prefix("unit:") {
            return i.parse().ok().map(ThetaSpec::Unit);
        }
        None
    }

    /// Materialize the state vector; `spectrum` is required only for
    /// eigenvector shocks.
    pub fn resolve(&self, n: usize, spectrum: Option<&Spectrum>) -> Result<Vec<f64>, EconError> {
        match self {
            ThetaSpec::Uniform => Ok(vec![1.0; n]),
            ThetaSpec::Unit(i) => {
                if *i >= n {
                    return Err(EconError::TargetOutOfRange { index: *i, n });
                }
                let mut v = vec![0.0; n];
                v[*i] = 1.0;
                Ok(v)
            }
            ThetaSpec::Eigvec(k) => {
                let s = spectrum.expect("eigvec shock needs a spectrum");
                if *k >= n {
                    return Err(EconError::LayerOutOfRange { layer: *k, n });
                }
                Ok(s.layer(*k))
            }
            ThetaSpec::Values(v) => {
                if v.len() != n {
                    return Err(EconError::ThetaLength {
                        got: v.len(),
                        expected: n,
                    });
                }
                Ok(v.clone())
            }
        }
    }
}

impl Serialize for ThetaSpec {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        match self {
            ThetaSpec::Uniform => ser.serialize_str("uniform"),
            ThetaSpec::Eigvec(k) => ser.serialize_str(&format!("eigvec:{k}")),
            ThetaSpec::Unit(i) => ser.serialize_str(&format!("unit:{i}")),
            ThetaSpec::Values(v) => v.serialize(ser),
        }
    }
}

impl<'de> Deserialize<'de> for ThetaSpec {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Named(String),
            Values(Vec<f64>),
        }
        match Raw::deserialize(de)? {
            Raw::Named(s) => ThetaSpec::parse(&s)
                .ok_or_else(|| serde::de::Error::custom(format!("unknown theta form `{s}`"))),
            Raw::Values(v) => Ok(ThetaSpec::Values(v)),
        }
    }
}

fn coordination_matrix(g: &Graph, beta: f64) -> DMatrix<f64> {
    let n = g.node_count();
    let mut m = g.laplacian().to_dmatrix() * beta;
    for i in 0..n {
        m[(i, i)] += 1.0;
    }
    m
}

/// Equilibrium action profile a = (I + βL)^{-1} θ via an SPD factorization.
pub fn equilibrium(g: &Graph, beta: f64, theta: &[f64]) -> Result<Vec<f64>, EconError> {
    if beta < 0.0 {
        return Err(EconError::NegativeBeta(beta));
    }
    let n = g.node_count();
    if theta.len() != n {
        return Err(EconError::ThetaLength {
            got: theta.len(),
            expected: n,
        });
    }
    let chol = Cholesky::new(coordination_matrix(g, beta)).ok_or(EconError::SolveFailed)?;
    let a = chol.solve(&DVector::from_row_slice(theta));
    Ok(a.iter().copied().collect())
}

/// Maximum best-response violation max_i |a_i - BR_i(a, θ)| where
/// BR_i = (θ_i + β Σ_j g_ij a_j) / (1 + β d_i). Zero (to solver accuracy) at
/// equilibrium.
pub fn best_response_check(
    g: &Graph,
    beta: f64,
    actions: &[f64],
    theta: &[f64],
) -> Result<f64, EconError> {
    let n = g.node_count();
    if actions.len() != n {
        return Err(EconError::ActionLength {
            got: actions.len(),
            expected: n,
        });
    }
    if theta.len() != n {
        return Err(EconError::ThetaLength {
            got: theta.len(),
            expected: n,
        });
    }
    let adj = g.adjacency_list();
    let mut worst = 0.0f64;
    for i in 0..n {
        let neighbor_sum: f64 = adj[i].iter().map(|&j| actions[j]).sum();
        let br = (theta[i] + beta * neighbor_sum) / (1.0 + beta * adj[i].len() as f64);
        worst = worst.max((actions[i] - br).abs());
    }
    Ok(worst)
}

/// Aggregate quadratic loss a'a.
pub fn quadratic_loss(actions: &[f64]) -> f64 {
    actions.iter().map(|a| a * a).sum()
}

/// The unit shock direction with the smallest equilibrium footprint, and the
/// footprint itself.
#[derive(Debug, Clone)]
pub struct MinShock {
    /// The top Laplacian eigenvector q_1.
    pub direction: Vec<f64>,
    /// Attained a'a = 1/(1 + βλ_1)².
    pub value: f64,
    pub attenuation: f64,
}

/// Over unit shocks θ, equilibrium deviation a'a is minimized along q_1 with
/// value 1/(1+βλ_1)².
pub fn min_deviation_shock(s: &Spectrum, beta: f64) -> Result<MinShock, EconError> {
    if beta < 0.0 {
        return Err(EconError::NegativeBeta(beta));
    }
    let lambda1 = s.lambda(if s.dim() > 1 { 1 } else { 0 });
    let attenuation = 1.0 / (1.0 + beta * lambda1);
    Ok(MinShock {
        direction: s.layer(if s.dim() > 1 { 1 } else { 0 }),
        value: attenuation * attenuation,
        attenuation,
    })
}

/// Layers k (0-based, 0 = the constant statistic) whose statistic clears the
/// disclosure criterion 1/(2n) + (β/n)·λ_k ≥ β̃.
///
/// The constant statistic is also disclosed whenever any non-constant one is:
/// disclosing structure presumes disclosing its baseline.
pub fn disclosure_set(s: &Spectrum, beta: f64, beta_tilde: f64) -> Vec<usize> {
    let n = s.dim() as f64;
    let clears = |lambda: f64| 1.0 / (2.0 * n) + beta * lambda / n >= beta_tilde;
    let mut out: Vec<usize> = Vec::new();
    for layer in 1..s.dim() {
        if clears(s.lambda(layer)) {
            out.push(layer);
        }
    }
    if clears(0.0) || !out.is_empty() {
        out.insert(0, 0);
    }
    out
}

/// Diagonal of the projection onto the first r+1 disclosed eigenvector
/// statistics, computed explicitly from Q̄_r (Q̄_r' Q̄_r)^{-1} Q̄_r'.
///
/// The projection is basis-independent only at multiplicity-group boundaries;
/// a request strictly inside a group is extended to the group's last layer
/// and flagged via `adjusted`.
#[derive(Debug, Clone)]
pub struct InformativenessDiag {
    pub requested_order: usize,
    pub effective_order: usize,
    pub adjusted: bool,
    pub scores: ScoreVector,
}

pub fn informativeness_diag(s: &Spectrum, order: usize) -> Result<InformativenessDiag, EconError> {
    let n = s.dim();
    if order > n - 1 {
        return Err(EconError::LayerOutOfRange { layer: order, n });
    }
    let effective = if s.is_group_aligned(order) {
        order
    } else {
        s.group_of(order).last
    };
    let mut q = DMatrix::zeros(n, effective + 1);
    for layer in 0..=effective {
        let col = s.layer(layer);
        for (r, v) in col.iter().enumerate() {
            q[(r, layer)] = *v;
        }
    }
    let gram = q.transpose() * &q;
    let inv = gram.try_inverse().ok_or(EconError::SolveFailed)?;
    let proj = &q * inv * q.transpose();
    let scores: Vec<f64> = (0..n).map(|i| proj[(i, i)]).collect();
    Ok(InformativenessDiag {
        requested_order: order,
        effective_order: effective,
        adjusted: effective != order,
        scores: ScoreVector::new(
            Measure::InformativenessDiag {
                order: effective,
                adjusted: effective != order,
            },
            scores,
        ),
    })
}

/// Targeting gain φ(i) = Σ_{λ>0 layers} (1 - ω_j)·q_j(i)² with
/// ω_j = 1/(1+βλ_j)²: the reduction in aggregate loss from neutralizing a
/// uniform shock at agent i. Zero-eigenvalue layers carry weight 0, so
/// isolated agents gain nothing.
pub fn targeting_scores(s: &Spectrum, beta: f64) -> Result<ScoreVector, EconError> {
    if beta < 0.0 {
        return Err(EconError::NegativeBeta(beta));
    }
    let n = s.dim();
    let mut phi = vec![0.0; n];
    for group in s.groups() {
        let omega = {
            let f = 1.0 / (1.0 + beta * group.eigenvalue);
            f * f
        };
        let weight = 1.0 - omega;
        if weight == 0.0 {
            continue;
        }
        for (p, m) in phi.iter_mut().zip(s.group_mass(group)) {
            *p += weight * m;
        }
    }
    Ok(ScoreVector::new(Measure::TargetingGain { beta }, phi))
}

/// Post-intervention social loss for target i, computed directly: solve
/// a = (I + βL)^{-1}(1 - e_i) and return a'a. Serves as the oracle for the
/// spectral route (n - 1 - φ(i)).
pub fn social_loss_after_target(g: &Graph, beta: f64, target: usize) -> Result<f64, EconError> {
    let n = g.node_count();
    if target >= n {
        return Err(EconError::TargetOutOfRange { index: target, n });
    }
    let mut theta = vec![1.0; n];
    theta[target] = 0.0;
    let a = equilibrium(g, beta, &theta)?;
    Ok(quadratic_loss(&a))
}

/// Values within this margin of the best are treated as tied (smallest index
/// wins), keeping the spectral and direct routes consistent.
const TARGET_TIE_TOL: f64 = 1e-9;

/// The feasible target maximizing φ; ties go to the smallest node index.
pub fn optimal_target(s: &Spectrum, beta: f64, targets: &[usize]) -> Result<usize, EconError> {
    if targets.is_empty() {
        return Err(EconError::EmptyTargetSet);
    }
    let n = s.dim();
    for &t in targets {
        if t >= n {
            return Err(EconError::TargetOutOfRange { index: t, n });
        }
    }
    let phi = targeting_scores(s, beta)?.scores;
    let best = targets
        .iter()
        .map(|&t| phi[t])
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(targets
        .iter()
        .copied()
        .filter(|&t| phi[t] >= best - TARGET_TIE_TOL)
        .min()
        .expect("nonempty target set"))
}
