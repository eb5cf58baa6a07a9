//! Classical comparison centralities with the normalization conventions used
//! throughout the rest of the crate: zero-degree nodes are always retained
//! (they score 0 for adjacency-based measures), and decay factors for
//! Katz-Bonacich, Bonacich power, and (by default) diffusion centrality are
//! expressed as a fraction of the adjacency spectral radius μ.

use nalgebra::{Cholesky, DMatrix, DVector};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::eigh;
use crate::graph::Graph;
use crate::lec::{Measure, ScoreVector};

/// Decay fraction 0.8/μ shared by Katz-Bonacich and Bonacich power.
pub const DEFAULT_DECAY: f64 = 0.8;

#[derive(Debug, Error)]
pub enum CentralityError {
    #[error("graph has no edges: adjacency has no principal direction")]
    NoPrincipalDirection,
    #[error("decay fraction {0} out of range (0, 1)")]
    BadDecay(f64),
    #[error("iteration count must be at least 1")]
    NoIterations,
    #[error("linear system solve failed")]
    SolveFailed,
}

/// Scaling convention for eigenvector centrality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EigenvectorScale {
    /// Euclidean norm 1.
    Unit,
    /// Node-average 1, so group averages are comparable across networks of
    /// different sizes.
    MeanOne,
}

impl EigenvectorScale {
    pub fn name(&self) -> &'static str {
        match self {
            EigenvectorScale::Unit => "unit",
            EigenvectorScale::MeanOne => "mean_one",
        }
    }
}

/// Raw degree d_i.
pub fn degree_centrality(g: &Graph) -> ScoreVector {
    let scores = g.degrees().iter().map(|&d| d as f64).collect();
    ScoreVector::new(Measure::Degree, scores)
}

/// Largest adjacency eigenvalue μ (spectral radius for a nonnegative
/// symmetric matrix) and its eigenvector, oriented nonnegative.
fn principal_pair(g: &Graph) -> Option<(f64, Vec<f64>)> {
    if g.edge_count() == 0 {
        return None;
    }
    let n = g.node_count();
    let a = g.adjacency();
    let (values, vectors) =
        eigh::symmetric_eigen(a.raw_data(), n).expect("adjacency eigendecomposition");
    // Ascending order: the principal pair sits last.
    let mu = values[n - 1];
    let col = &vectors[(n - 1) * n..n * n];
    // Orient so the largest-magnitude entry is positive.
    let lead = col
        .iter()
        .copied()
        .max_by(|a, b| a.abs().total_cmp(&b.abs()))
        .unwrap_or(1.0);
    let sign = if lead < 0.0 { -1.0 } else { 1.0 };
    Some((mu, col.iter().map(|v| sign * v).collect()))
}

/// Adjacency spectral radius; 0 for an edgeless graph.
pub fn spectral_radius(g: &Graph) -> f64 {
    principal_pair(g).map_or(0.0, |(mu, _)| mu)
}

/// Principal eigenvector of the adjacency matrix, zero-degree nodes pinned to
/// exactly 0. Errors when the graph has no edges (no principal direction).
pub fn eigenvector_centrality(
    g: &Graph,
    scale: EigenvectorScale,
) -> Result<ScoreVector, CentralityError> {
    let (_, mut v) = principal_pair(g).ok_or(CentralityError::NoPrincipalDirection)?;
    let degrees = g.degrees();
    for (i, x) in v.iter_mut().enumerate() {
        if degrees[i] == 0 || *x < 0.0 {
            // Perron entries are nonnegative; negatives here are rounding
            // noise on non-dominant components. Zero-degree nodes score 0.
            *x = 0.0;
        }
    }
    match scale {
        EigenvectorScale::Unit => {
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            for x in &mut v {
                *x /= norm;
            }
        }
        EigenvectorScale::MeanOne => {
            let mean = v.iter().sum::<f64>() / v.len() as f64;
            for x in &mut v {
                *x /= mean;
            }
        }
    }
    Ok(ScoreVector::new(Measure::Eigenvector { scale }, v))
}

fn solve_spd(m: DMatrix<f64>, rhs: DVector<f64>) -> Result<Vec<f64>, CentralityError> {
    let chol = Cholesky::new(m).ok_or(CentralityError::SolveFailed)?;
    Ok(chol.solve(&rhs).iter().copied().collect())
}

/// Katz-Bonacich (alpha) centrality x = (I - αA)^{-1}·1 with α = decay/μ.
/// An edgeless graph yields the all-ones vector.
pub fn katz_bonacich(g: &Graph, decay: f64) -> Result<ScoreVector, CentralityError> {
    if !(decay > 0.0 && decay < 1.0) {
        return Err(CentralityError::BadDecay(decay));
    }
    let n = g.node_count();
    let measure = Measure::KatzBonacich { decay };
    let Some((mu, _)) = principal_pair(g) else {
        return Ok(ScoreVector::new(measure, vec![1.0; n]));
    };
    let alpha = decay / mu;
    // I - αA is symmetric positive definite for α < 1/μ.
    let mut m = g.adjacency().to_dmatrix() * (-alpha);
    for i in 0..n {
        m[(i, i)] += 1.0;
    }
    let x = solve_spd(m, DVector::from_element(n, 1.0))?;
    Ok(ScoreVector::new(measure, x))
}

/// Bonacich power (beta) centrality: raw x = (I - βA)^{-1} A·1 with
/// β = decay/μ, rescaled so Σ x_i² = n. An edgeless graph has A·1 = 0; the
/// rescaling is undefined and zeros are returned with the degenerate flag.
pub fn bonacich_power(g: &Graph, decay: f64) -> Result<ScoreVector, CentralityError> {
    if !(decay > 0.0 && decay < 1.0) {
        return Err(CentralityError::BadDecay(decay));
    }
    let n = g.node_count();
    let Some((mu, _)) = principal_pair(g) else {
        return Ok(ScoreVector::new(
            Measure::BonacichPower {
                decay,
                degenerate: true,
            },
            vec![0.0; n],
        ));
    };
    let beta = decay / mu;
    let a = g.adjacency().to_dmatrix();
    let mut m = &a * (-beta);
    for i in 0..n {
        m[(i, i)] += 1.0;
    }
    let deg = DVector::from_iterator(n, g.degrees().iter().map(|&d| d as f64));
    let mut x = solve_spd(m, deg)?;
    let sumsq: f64 = x.iter().map(|v| v * v).sum();
    let scale = (n as f64 / sumsq).sqrt();
    for v in &mut x {
        *v *= scale;
    }
    Ok(ScoreVector::new(
        Measure::BonacichPower {
            decay,
            degenerate: false,
        },
        x,
    ))
}

/// Diffusion centrality Σ_{t=1..T} (qA)^t·1. When `pass_prob` is omitted the
/// decay convention q = 0.8/μ is used (0 on an edgeless graph).
pub fn diffusion_centrality(
    g: &Graph,
    pass_prob: Option<f64>,
    iterations: usize,
) -> Result<ScoreVector, CentralityError> {
    if iterations == 0 {
        return Err(CentralityError::NoIterations);
    }
    let n = g.node_count();
    let q = match pass_prob {
        Some(q) => q,
        None => {
            let mu = spectral_radius(g);
            if mu > 0.0 {
                DEFAULT_DECAY / mu
            } else {
                0.0
            }
        }
    };
    let adj = g.adjacency_list();
    let mut acc = vec![0.0; n];
    let mut v = vec![1.0; n];
    for _ in 0..iterations {
        let mut next = vec![0.0; n];
        for (i, nbrs) in adj.iter().enumerate() {
            next[i] = q * nbrs.iter().map(|&j| v[j]).sum::<f64>();
        }
        for (a, x) in acc.iter_mut().zip(&next) {
            *a += x;
        }
        v = next;
    }
    Ok(ScoreVector::new(
        Measure::Diffusion {
            pass_prob: q,
            iterations,
        },
        acc,
    ))
}

/// Closeness (n-1)/Σ_j dist(i,j), distances taken within i's connected
/// component; isolated nodes score 0.
pub fn closeness_centrality(g: &Graph) -> ScoreVector {
    let n = g.node_count();
    let adj = g.adjacency_list();
    let mut scores = vec![0.0; n];
    let mut dist = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for i in 0..n {
        dist.fill(usize::MAX);
        dist[i] = 0;
        queue.clear();
        queue.push_back(i);
        let mut total = 0usize;
        let mut reached = 0usize;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    total += dist[w];
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        if reached > 0 {
            scores[i] = (n - 1) as f64 / total as f64;
        }
    }
    ScoreVector::new(Measure::Closeness, scores)
}

/// Unnormalized shortest-path betweenness via Brandes' dependency
/// accumulation; each unordered pair is counted once.
pub fn betweenness_centrality(g: &Graph) -> ScoreVector {
    let n = g.node_count();
    let adj = g.adjacency_list();
    let mut scores = vec![0.0; n];

    let mut stack: Vec<usize> = Vec::with_capacity(n);
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut sigma = vec![0.0f64; n];
    let mut dist = vec![i64::MAX; n];
    let mut delta = vec![0.0f64; n];
    let mut queue = std::collections::VecDeque::new();

    for s in 0..n {
        stack.clear();
        for p in preds.iter_mut() {
            p.clear();
        }
        sigma.fill(0.0);
        sigma[s] = 1.0;
        dist.fill(i64::MAX);
        dist[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            stack.push(v);
            for &w in &adj[v] {
                if dist[w] == i64::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    sigma[w] += sigma[v];
                    preds[w].push(v);
                }
            }
        }
        delta.fill(0.0);
        while let Some(w) = stack.pop() {
            for &v in &preds[w] {
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
            if w != s {
                scores[w] += delta[w];
            }
        }
    }
    // Undirected accumulation visits each pair from both endpoints.
    for v in &mut scores {
        *v /= 2.0;
    }
    ScoreVector::new(Measure::Betweenness, scores)
}
