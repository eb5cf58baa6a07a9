//! Laplacian eigenvector centrality (LEC) and its variants.
//!
//! The order-r score of node i is `1/n + Σ_{s=1..r} q_s(i)²` over the
//! descending non-constant layers. When r falls strictly inside a
//! multiplicity group the degenerate eigenspace is split pro rata by its
//! basis-independent group mass, so scores never depend on the solver's
//! choice of basis. All score computations here go through the group
//! structure, which makes that invariance structural rather than incidental.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::spectral::Spectrum;

#[derive(Debug, Error)]
pub enum LecError {
    #[error("order {order} out of range 0..={max}")]
    OrderOutOfRange { order: usize, max: usize },
    #[error("percentage {0} out of range (0, 100]")]
    BadPercentage(f64),
    #[error("threshold {0} out of range (0, 1)")]
    BadThreshold(f64),
    #[error("weight vector invalid: {0}")]
    BadWeights(String),
    #[error("weight vector has length {got}, expected {expected}")]
    WeightLength { got: usize, expected: usize },
}

/// Identifies the measure (and its parameters) that produced a score vector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "measure", rename_all = "snake_case")]
pub enum Measure {
    Lec {
        order: usize,
    },
    PlecProportional {
        pct: f64,
        order: usize,
    },
    PlecCumulative {
        threshold: f64,
        order: usize,
    },
    Glec {
        weights: Vec<f64>,
    },
    GlecDegree,
    Degree,
    Eigenvector {
        scale: crate::centrality::EigenvectorScale,
    },
    KatzBonacich {
        decay: f64,
    },
    BonacichPower {
        decay: f64,
        /// Set when the raw scores were identically zero (edgeless graph) and
        /// the Σx² = n rescaling is undefined; the scores are returned as 0.
        degenerate: bool,
    },
    Diffusion {
        pass_prob: f64,
        iterations: usize,
    },
    Closeness,
    Betweenness,
    TargetingGain {
        beta: f64,
    },
    InformativenessDiag {
        order: usize,
        /// True when the requested order fell inside a multiplicity group and
        /// was extended to the group boundary.
        adjusted: bool,
    },
}

impl Measure {
    pub fn name(&self) -> &'static str {
        match self {
            Measure::Lec { .. } => "lec",
            Measure::PlecProportional { .. } => "plec_proportional",
            Measure::PlecCumulative { .. } => "plec_cumulative",
            Measure::Glec { .. } => "glec",
            Measure::GlecDegree => "glec_degree",
            Measure::Degree => "degree",
            Measure::Eigenvector { .. } => "eigenvector",
            Measure::KatzBonacich { .. } => "katz_bonacich",
            Measure::BonacichPower { .. } => "bonacich_power",
            Measure::Diffusion { .. } => "diffusion",
            Measure::Closeness => "closeness",
            Measure::Betweenness => "betweenness",
            Measure::TargetingGain { .. } => "targeting_gain",
            Measure::InformativenessDiag { .. } => "informativeness_diag",
        }
    }

    /// Parameters as key=value pairs for self-describing CSV headers.
    pub fn params(&self) -> Vec<(String, String)> {
        fn fmt(v: f64) -> String {
            format!("{v}")
        }
        match self {
            Measure::Lec { order } => vec![("order".into(), order.to_string())],
            Measure::PlecProportional { pct, order } => vec![
                ("pct".into(), fmt(*pct)),
                ("order".into(), order.to_string()),
            ],
            Measure::PlecCumulative { threshold, order } => vec![
                ("threshold".into(), fmt(*threshold)),
                ("order".into(), order.to_string()),
            ],
            Measure::Glec { weights } => vec![
                ("weights_len".into(), weights.len().to_string()),
                ("w0".into(), fmt(weights.first().copied().unwrap_or(0.0))),
            ],
            Measure::GlecDegree => vec![],
            Measure::Degree => vec![],
            Measure::Eigenvector { scale } => vec![("scale".into(), scale.name().into())],
            Measure::KatzBonacich { decay } => vec![("decay".into(), fmt(*decay))],
            Measure::BonacichPower { decay, degenerate } => vec![
                ("decay".into(), fmt(*decay)),
                ("degenerate".into(), degenerate.to_string()),
            ],
            Measure::Diffusion {
                pass_prob,
                iterations,
            } => vec![
                ("pass_prob".into(), fmt(*pass_prob)),
                ("iterations".into(), iterations.to_string()),
            ],
            Measure::Closeness => vec![],
            Measure::Betweenness => vec![],
            Measure::TargetingGain { beta } => vec![("beta".into(), fmt(*beta))],
            Measure::InformativenessDiag { order, adjusted } => vec![
                ("order".into(), order.to_string()),
                ("adjusted".into(), adjusted.to_string()),
            ],
        }
    }
}

/// Per-node scores aligned with the producing graph's node order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoreVector {
    pub measure: Measure,
    pub scores: Vec<f64>,
}

impl ScoreVector {
    pub fn new(measure: Measure, scores: Vec<f64>) -> Self {
        debug_assert!(scores.iter().all(|v| v.is_finite()), "non-finite score");
        ScoreVector { measure, scores }
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }
}

/// Nonincreasing, nonnegative weights w_0 ≥ w_1 ≥ … ≥ w_{n-1} ≥ 0 for the
/// generalized LEC; w_0 weights the constant layer.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector(Vec<f64>);

impl WeightVector {
    pub fn new(weights: Vec<f64>) -> Result<Self, LecError> {
        if weights.is_empty() {
            return Err(LecError::BadWeights("empty".into()));
        }
        for (i, w) in weights.iter().enumerate() {
            if !w.is_finite() || *w < 0.0 {
                return Err(LecError::BadWeights(format!("w_{i} = {w}")));
            }
            if i > 0 && weights[i - 1] < *w {
                return Err(LecError::BadWeights(format!(
                    "not nonincreasing at index {i}: {} < {w}",
                    weights[i - 1]
                )));
            }
        }
        Ok(WeightVector(weights))
    }

    /// 0/1 indicator of the first `order + 1` layers; gives plain LEC of that
    /// order when the cut is group-aligned.
    pub fn indicator(n: usize, order: usize) -> Result<Self, LecError> {
        if order >= n {
            return Err(LecError::OrderOutOfRange { order, max: n - 1 });
        }
        let mut w = vec![0.0; n];
        for wi in w.iter_mut().take(order + 1) {
            *wi = 1.0;
        }
        Ok(WeightVector(w))
    }

    /// w_0 = 1, w_s = λ_s / n: yields the degree variant 1/n + d_i/n.
    pub fn degree_variant(s: &Spectrum) -> Self {
        let n = s.dim();
        let mut w = Vec::with_capacity(n);
        w.push(1.0);
        for layer in 1..n {
            w.push(s.lambda(layer) / n as f64);
        }
        WeightVector(w)
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

/// LEC of order r: `1/n + Σ_{s=1..r} q_s(i)²`, with the pro-rata group form
/// when r cuts a multiplicity group. Orders 0 and n-1 are exact by
/// definition (all 1/n and all 1).
pub fn lec(s: &Spectrum, order: usize) -> Result<ScoreVector, LecError> {
    let n = s.dim();
    if order > n - 1 {
        return Err(LecError::OrderOutOfRange { order, max: n - 1 });
    }
    let measure = Measure::Lec { order };
    if order == 0 {
        return Ok(ScoreVector::new(measure, vec![1.0 / n as f64; n]));
    }
    if order == n - 1 {
        return Ok(ScoreVector::new(measure, vec![1.0; n]));
    }
    let mut scores = vec![1.0 / n as f64; n];
    accumulate_layers(s, order, &mut scores);
    Ok(ScoreVector::new(measure, scores))
}

/// Add the (group-resolved) mass of layers 1..=order onto `scores`.
fn accumulate_layers(s: &Spectrum, order: usize, scores: &mut [f64]) {
    for group in s.groups() {
        if group.last <= order {
            for (sc, m) in scores.iter_mut().zip(s.group_mass(group)) {
                *sc += m;
            }
        } else if group.first <= order {
            // order cuts this group: k̲ ≤ r < k̄
            let frac = (order - (group.first - 1)) as f64 / (group.last - (group.first - 1)) as f64;
            for (sc, m) in scores.iter_mut().zip(s.group_mass(group)) {
                *sc += frac * m;
            }
            break;
        } else {
            break;
        }
    }
}

/// Resolve the s%-proportional order ⌈(pct/100)·n⌉, capped at n-1.
pub fn proportional_order(n: usize, pct: f64) -> Result<usize, LecError> {
    if !(pct > 0.0 && pct <= 100.0) {
        return Err(LecError::BadPercentage(pct));
    }
    // Multiply before dividing and shave an epsilon so that exactly-integer
    // products (e.g. 20% of 200) do not ceil upward off a rounding artifact.
    let raw = (pct * n as f64) / 100.0;
    let order = (raw - 1e-9).ceil().max(0.0) as usize;
    Ok(order.min(n - 1))
}

/// Proportional LEC: order set to ⌈(pct/100)·n⌉ (capped at n-1).
pub fn plec_proportional(s: &Spectrum, pct: f64) -> Result<ScoreVector, LecError> {
    let order = proportional_order(s.dim(), pct)?;
    let base = lec(s, order)?;
    Ok(ScoreVector::new(
        Measure::PlecProportional { pct, order },
        base.scores,
    ))
}

/// Cumulative-threshold LEC: the smallest order whose cumulative eigenvalue
/// fraction reaches the threshold. Returns the resolved order with the
/// scores.
pub fn plec_cumulative(s: &Spectrum, threshold: f64) -> Result<(usize, ScoreVector), LecError> {
    let order = cumulative_order(s, threshold)?;
    let base = lec(s, order)?;
    Ok((
        order,
        ScoreVector::new(Measure::PlecCumulative { threshold, order }, base.scores),
    ))
}

/// Smallest k with cumulative_fraction(k) ≥ threshold.
pub fn cumulative_order(s: &Spectrum, threshold: f64) -> Result<usize, LecError> {
    if !(threshold > 0.0 && threshold < 1.0) {
        return Err(LecError::BadThreshold(threshold));
    }
    let n = s.dim();
    for k in 0..n {
        let frac = s
            .cumulative_fraction(k)
            .expect("k in range by construction");
        if frac >= threshold {
            return Ok(k);
        }
    }
    Ok(n - 1)
}

/// Generalized LEC with weights w: `Σ_s w_s q_s(i)²`, where each multiplicity
/// group contributes its basis-independent mass scaled by the mean of the
/// group's weights. A 0/1 weight cut inside a group therefore reproduces the
/// pro-rata LEC form exactly.
pub fn glec(s: &Spectrum, w: &WeightVector) -> Result<ScoreVector, LecError> {
    let n = s.dim();
    let weights = w.as_slice();
    if weights.len() != n {
        return Err(LecError::WeightLength {
            got: weights.len(),
            expected: n,
        });
    }
    let mut scores = vec![weights[0] / n as f64; n];
    for group in s.groups() {
        let mean_w: f64 =
            weights[group.first..=group.last].iter().sum::<f64>() / group.len() as f64;
        if mean_w == 0.0 {
            continue;
        }
        for (sc, m) in scores.iter_mut().zip(s.group_mass(group)) {
            *sc += mean_w * m;
        }
    }
    Ok(ScoreVector::new(
        Measure::Glec {
            weights: weights.to_vec(),
        },
        scores,
    ))
}

/// Degree variant computed directly from degrees: 1/n + d_i/n. Coincides with
/// `glec` under `WeightVector::degree_variant`.
pub fn glec_degree_variant(g: &Graph) -> ScoreVector {
    let n = g.node_count() as f64;
    let scores = g.degrees().iter().map(|&d| (1.0 + d as f64) / n).collect();
    ScoreVector::new(Measure::GlecDegree, scores)
}

/// Order-selection policy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OrderPolicy {
    /// k in 1..=n-2 maximizing λ_k - λ_{k+1}; ties take the smallest k.
    LargestGap,
    /// Smallest order reaching the cumulative eigenvalue threshold.
    Cumulative(f64),
    /// Proportional ⌈(pct/100)·n⌉ rule.
    Proportional(f64),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrderSuggestion {
    pub order: usize,
    pub rationale: OrderRationale,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "policy", rename_all = "snake_case")]
pub enum OrderRationale {
    LargestGap { gap: f64 },
    Cumulative { threshold: f64, fraction: f64 },
    Proportional { pct: f64 },
}

/// Suggest an LEC order from the spectrum under the given policy.
pub fn suggest_order(s: &Spectrum, policy: OrderPolicy) -> Result<OrderSuggestion, LecError> {
    let n = s.dim();
    match policy {
        OrderPolicy::LargestGap => {
            if n == 1 {
                return Ok(OrderSuggestion {
                    order: 0,
                    rationale: OrderRationale::LargestGap { gap: 0.0 },
                });
            }
            // Candidates stop at n-2: order n-1 scores every node 1 and
            // discriminates nothing. For n = 2 only k = 1 exists.
            let hi = (n - 2).max(1);
            let mut gaps = s.gap_profile();
            // Eigenvalues inside one multiplicity group are equal; zero out
            // their noise-level gaps so ties resolve to the smallest k.
            for k in 1..n - 1 {
                if !s.is_group_aligned(k) {
                    gaps[k - 1] = 0.0;
                }
            }
            let mut best_k = 1usize;
            let mut best_gap = gaps[0];
            for k in 2..=hi {
                if gaps[k - 1] > best_gap {
                    best_gap = gaps[k - 1];
                    best_k = k;
                }
            }
            Ok(OrderSuggestion {
                order: best_k,
                rationale: OrderRationale::LargestGap { gap: best_gap },
            })
        }
        OrderPolicy::Cumulative(threshold) => {
            let order = cumulative_order(s, threshold)?;
            let fraction = s
                .cumulative_fraction(order)
                .expect("resolved order in range");
            Ok(OrderSuggestion {
                order,
                rationale: OrderRationale::Cumulative {
                    threshold,
                    fraction,
                },
            })
        }
        OrderPolicy::Proportional(pct) => {
            let order = proportional_order(n, pct)?;
            Ok(OrderSuggestion {
                order,
                rationale: OrderRationale::Proportional { pct },
            })
        }
    }
}
