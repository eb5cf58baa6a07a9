//! Correlation coefficients, percentile curves, and batch experiment tables.
//!
//! Kendall's τ here is the tie-corrected τ-b, computed by the merge-sort
//! inversion count (Knight's algorithm). All tie counts and the concordant
//! minus discordant total are exact integers, so the result is bit-identical
//! to a brute-force O(n²) pair classification.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::centrality::{self, EigenvectorScale, DEFAULT_DECAY};
use crate::graph::Graph;
use crate::lec::{self, ScoreVector};
use crate::randnet::GenSpec;
use crate::spectral::Spectrum;

#[derive(Debug, Error)]
pub enum StatsError {
    #[error("vectors have different lengths: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("need at least 2 observations, got {0}")]
    TooShort(usize),
    #[error("coefficient undefined for constant input")]
    ConstantInput,
    #[error("unknown measure spec `{0}`")]
    UnknownMeasure(String),
    #[error("unknown summary spec `{0}`")]
    UnknownSummary(String),
}

fn check_pair(x: &[f64], y: &[f64]) -> Result<(), StatsError> {
    if x.len() != y.len() {
        return Err(StatsError::LengthMismatch(x.len(), y.len()));
    }
    if x.len() < 2 {
        return Err(StatsError::TooShort(x.len()));
    }
    Ok(())
}

/// Pearson product-moment correlation.
pub fn pearson(x: &[f64], y: &[f64]) -> Result<f64, StatsError> {
    check_pair(x, y)?;
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    for (xi, yi) in x.iter().zip(y) {
        let dx = xi - mx;
        let dy = yi - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(StatsError::ConstantInput);
    }
    Ok((sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0))
}

/// Average ranks (1-based); ties share the mean of their positions.
pub fn average_ranks(x: &[f64]) -> Vec<f64> {
    let n = x.len();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| x[a].total_cmp(&x[b]));
    let mut ranks = vec![0.0; n];
    let mut start = 0;
    while start < n {
        let mut end = start;
        while end + 1 < n && x[idx[end + 1]] == x[idx[start]] {
            end += 1;
        }
        // positions start+1 ..= end+1; their mean is exactly representable.
        let rank = (start + end + 2) as f64 / 2.0;
        for &i in &idx[start..=end] {
            ranks[i] = rank;
        }
        start = end + 1;
    }
    ranks
}

/// Spearman rank correlation with average ranks for ties.
pub fn spearman(x: &[f64], y: &[f64]) -> Result<f64, StatsError> {
    check_pair(x, y)?;
    pearson(&average_ranks(x), &average_ranks(y))
}

/// Kendall τ-b.
pub fn kendall_tau_b(x: &[f64], y: &[f64]) -> Result<f64, StatsError> {
    check_pair(x, y)?;
    let n = x.len();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| x[a].total_cmp(&x[b]).then(y[a].total_cmp(&y[b])));

    let tie_pairs = |t: u64| t * (t - 1) / 2;

    // Ties in x, and joint ties, from runs of the (x, y)-sorted order.
    let mut xtie: u64 = 0;
    let mut xytie: u64 = 0;
    {
        let mut i = 0;
        while i < n {
            let mut j = i;
            while j + 1 < n && x[idx[j + 1]] == x[idx[i]] {
                j += 1;
            }
            xtie += tie_pairs((j - i + 1) as u64);
            let mut k = i;
            while k <= j {
                let mut l = k;
                while l < j && y[idx[l + 1]] == y[idx[k]] {
                    l += 1;
                }
                xytie += tie_pairs((l - k + 1) as u64);
                k = l + 1;
            }
            i = j + 1;
        }
    }

    // Ties in y from a sort of y alone.
    let mut ys: Vec<f64> = y.to_vec();
    ys.sort_by(f64::total_cmp);
    let mut ytie: u64 = 0;
    {
        let mut i = 0;
        while i < n {
            let mut j = i;
            while j + 1 < n && ys[j + 1] == ys[i] {
                j += 1;
            }
            ytie += tie_pairs((j - i + 1) as u64);
            i = j + 1;
        }
    }

    // Discordant pairs = strict y-inversions in the (x, y)-sorted order
    // (within an x-run y is ascending, so no intra-run inversions).
    let mut seq: Vec<f64> = idx.iter().map(|&i| y[i]).collect();
    let mut buf = vec![0.0; n];
    let discordant = merge_count(&mut seq, &mut buf, 0, n);

    let tot = tie_pairs(n as u64);
    let denom_x = tot - xtie;
    let denom_y = tot - ytie;
    if denom_x == 0 || denom_y == 0 {
        return Err(StatsError::ConstantInput);
    }
    let con_minus_dis =
        tot as i64 - xtie as i64 - ytie as i64 + xytie as i64 - 2 * discordant as i64;
    let tau = con_minus_dis as f64 / ((denom_x as f64).sqrt() * (denom_y as f64).sqrt());
    Ok(tau.clamp(-1.0, 1.0))
}

/// Merge sort over `seq[lo..hi)` counting strict inversions.
fn merge_count(seq: &mut [f64], buf: &mut [f64], lo: usize, hi: usize) -> u64 {
    if hi - lo <= 1 {
        return 0;
    }
    let mid = (lo + hi) / 2;
    let mut inv = merge_count(seq, buf, lo, mid) + merge_count(seq, buf, mid, hi);
    let (mut i, mut j, mut k) = (lo, mid, lo);
    while i < mid && j < hi {
        if seq[i] <= seq[j] {
            buf[k] = seq[i];
            i += 1;
        } else {
            inv += (mid - i) as u64;
            buf[k] = seq[j];
            j += 1;
        }
        k += 1;
    }
    while i < mid {
        buf[k] = seq[i];
        i += 1;
        k += 1;
    }
    while j < hi {
        buf[k] = seq[j];
        j += 1;
        k += 1;
    }
    seq[lo..hi].copy_from_slice(&buf[lo..hi]);
    inv
}

/// Scores sorted ascending with percentile ranks k/n for the k-th sorted
/// node (1-based).
pub fn percentile_curve(scores: &[f64]) -> Vec<(f64, f64)> {
    let n = scores.len();
    let mut sorted = scores.to_vec();
    sorted.sort_by(f64::total_cmp);
    sorted
        .into_iter()
        .enumerate()
        .map(|(k, s)| ((k + 1) as f64 / n as f64, s))
        .collect()
}

/// A centrality measure to evaluate inside a batch experiment.
#[derive(Debug, Clone, PartialEq)]
pub enum MeasureSpec {
    Lec {
        order: usize,
    },
    PlecProportional {
        pct: f64,
    },
    PlecCumulative {
        threshold: f64,
    },
    GlecDegree,
    Degree,
    Eigenvector {
        scale: EigenvectorScale,
    },
    KatzBonacich {
        decay: f64,
    },
    BonacichPower {
        decay: f64,
    },
    Diffusion {
        pass_prob: Option<f64>,
        iterations: usize,
    },
    Closeness,
    Betweenness,
}

impl MeasureSpec {
    /// Parse CLI forms like `lec:3`, `plec:20`, `plec-cum:0.5`, `degree`,
    /// `eigenvector`, `eigenvector-mean1`, `katz`, `katz:0.6`, `power`,
    /// `diffusion:7`, `diffusion:7:0.2`, `closeness`, `betweenness`,
    /// `glec-degree`.
    pub fn parse(text: &str) -> Result<Self, StatsError> {
        let bad = || StatsError::UnknownMeasure(text.to_string());
        let mut parts = text.split(':');
        let head = parts.next().unwrap_or("");
        let arg1 = parts.next();
        let arg2 = parts.next();
        if parts.next().is_some() {
            return Err(bad());
        }
        let f = |s: Option<&str>| s.and_then(|v| v.parse::<f64>().ok());
        let u = |s: Option<&str>| s.and_then(|v| v.parse::<usize>().ok());
        match head {
            "lec" => Ok(MeasureSpec::Lec {
                order: u(arg1).ok_or_else(bad)?,
            }),
            "plec" => Ok(MeasureSpec::PlecProportional {
                pct: f(arg1).ok_or_else(bad)?,
            }),
            "plec-cum" => Ok(MeasureSpec::PlecCumulative {
                threshold: f(arg1).ok_or_else(bad)?,
            }),
            "glec-degree" => Ok(MeasureSpec::GlecDegree),
            "degree" => Ok(MeasureSpec::Degree),
            "eigenvector" => Ok(MeasureSpec::Eigenvector {
                scale: EigenvectorScale::Unit,
            }),
            "eigenvector-mean1" => Ok(MeasureSpec::Eigenvector {
                scale: EigenvectorScale::MeanOne,
            }),
            "katz" => Ok(MeasureSpec::KatzBonacich {
                decay: f(arg1).unwrap_or(DEFAULT_DECAY),
            }),
            "power" => Ok(MeasureSpec::BonacichPower {
                decay: f(arg1).unwrap_or(DEFAULT_DECAY),
            }),
            "diffusion" => Ok(MeasureSpec::Diffusion {
                iterations: u(arg1).ok_or_else(bad)?,
                pass_prob: f(arg2),
            }),
            "closeness" => Ok(MeasureSpec::Closeness),
            "betweenness" => Ok(MeasureSpec::Betweenness),
            _ => Err(bad()),
        }
    }

    pub fn needs_spectrum(&self) -> bool {
        matches!(
            self,
            MeasureSpec::Lec { .. }
                | MeasureSpec::PlecProportional { .. }
                | MeasureSpec::PlecCumulative { .. }
        )
    }

    pub fn name(&self) -> String {
        match self {
            MeasureSpec::Lec { order } => format!("lec_{order}"),
            MeasureSpec::PlecProportional { pct } => format!("plec_ns{pct}pct"),
            MeasureSpec::PlecCumulative { threshold } => {
                format!("plec_cum{}pct", threshold * 100.0)
            }
            MeasureSpec::GlecDegree => "glec_degree".into(),
            MeasureSpec::Degree => "degree".into(),
            MeasureSpec::Eigenvector { scale } => match scale {
                EigenvectorScale::Unit => "eigenvector".into(),
                EigenvectorScale::MeanOne => "eigenvector_mean1".into(),
            },
            MeasureSpec::KatzBonacich { decay } => format!("katz_{decay}"),
            MeasureSpec::BonacichPower { decay } => format!("power_{decay}"),
            MeasureSpec::Diffusion {
                iterations,
                pass_prob,
            } => match pass_prob {
                Some(q) => format!("diffusion_t{iterations}_q{q}"),
                None => format!("diffusion_t{iterations}"),
            },
            MeasureSpec::Closeness => "closeness".into(),
            MeasureSpec::Betweenness => "betweenness".into(),
        }
    }

    /// Evaluate on a graph; `spectrum` must be provided when
    /// [`MeasureSpec::needs_spectrum`] is true.
    pub fn compute(&self, g: &Graph, spectrum: Option<&Spectrum>) -> Result<ScoreVector, String> {
        let s = |m: &str| -> Result<&Spectrum, String> {
            spectrum.ok_or_else(|| format!("{m} requires a spectrum"))
        };
        match self {
            MeasureSpec::Lec { order } => lec::lec(s("lec")?, *order).map_err(|e| e.to_string()),
            MeasureSpec::PlecProportional { pct } => {
                lec::plec_proportional(s("plec")?, *pct).map_err(|e| e.to_string())
            }
            MeasureSpec::PlecCumulative { threshold } => {
                lec::plec_cumulative(s("plec")?, *threshold)
                    .map(|(_, sv)| sv)
                    .map_err(|e| e.to_string())
            }
            MeasureSpec::GlecDegree => Ok(lec::glec_degree_variant(g)),
            MeasureSpec::Degree => Ok(centrality::degree_centrality(g)),
            MeasureSpec::Eigenvector { scale } => {
                centrality::eigenvector_centrality(g, *scale).map_err(|e| e.to_string())
            }
            MeasureSpec::KatzBonacich { decay } => {
                centrality::katz_bonacich(g, *decay).map_err(|e| e.to_string())
            }
            MeasureSpec::BonacichPower { decay } => {
                centrality::bonacich_power(g, *decay).map_err(|e| e.to_string())
            }
            MeasureSpec::Diffusion {
                pass_prob,
                iterations,
            } => centrality::diffusion_centrality(g, *pass_prob, *iterations)
                .map_err(|e| e.to_string()),
            MeasureSpec::Closeness => Ok(centrality::closeness_centrality(g)),
            MeasureSpec::Betweenness => Ok(centrality::betweenness_centrality(g)),
        }
    }
}

/// Per-graph summary statistics to emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SummarySpec {
    /// Full cumulative eigenvalue curve, keyed by k.
    CumulativeCurve,
    /// Percentile curve per measure, keyed by percentile.
    PercentileCurve,
    /// One coefficient per measure against the degree vector.
    CorrelationVsDegree(CorrMethod),
}

impl SummarySpec {
    pub fn parse(text: &str) -> Result<Self, StatsError> {
        match text {
            "cumulative" => Ok(SummarySpec::CumulativeCurve),
            "percentile" => Ok(SummarySpec::PercentileCurve),
            "corr-pearson" => Ok(SummarySpec::CorrelationVsDegree(CorrMethod::Pearson)),
            "corr-spearman" => Ok(SummarySpec::CorrelationVsDegree(CorrMethod::Spearman)),
            "corr-kendall" => Ok(SummarySpec::CorrelationVsDegree(CorrMethod::KendallTauB)),
            _ => Err(StatsError::UnknownSummary(text.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorrMethod {
    Pearson,
    Spearman,
    KendallTauB,
}

impl CorrMethod {
    pub fn name(&self) -> &'static str {
        match self {
            CorrMethod::Pearson => "pearson",
            CorrMethod::Spearman => "spearman",
            CorrMethod::KendallTauB => "kendall_tau_b",
        }
    }

    pub fn compute(&self, x: &[f64], y: &[f64]) -> Result<f64, StatsError> {
        match self {
            CorrMethod::Pearson => pearson(x, y),
            CorrMethod::Spearman => spearman(x, y),
            CorrMethod::KendallTauB => kendall_tau_b(x, y),
        }
    }
}

/// One long-format result row: (spec, measure, statistic, key) -> value.
#[derive(Debug, Clone, Serialize)]
pub struct ExperimentRow {
    pub spec_id: usize,
    pub model: String,
    pub n: usize,
    pub param: String,
    pub seed: u64,
    pub measure: String,
    pub statistic: String,
    pub key: String,
    pub value: f64,
}

/// Generate each spec, evaluate each measure, and emit each summary as
/// long-format rows. Per-graph failures become rows with
/// `statistic = "error"` (value NaN) instead of aborting the batch. Specs are
/// evaluated in parallel; row order is deterministic by spec index.
pub fn batch_experiment(
    specs: &[GenSpec],
    measures: &[MeasureSpec],
    summaries: &[SummarySpec],
) -> Vec<ExperimentRow> {
    let per_spec: Vec<Vec<ExperimentRow>> = specs
        .par_iter()
        .enumerate()
        .map(|(id, spec)| run_one(id, spec, measures, summaries))
        .collect();
    per_spec.into_iter().flatten().collect()
}

fn run_one(
    id: usize,
    spec: &GenSpec,
    measures: &[MeasureSpec],
    summaries: &[SummarySpec],
) -> Vec<ExperimentRow> {
    let mut rows = Vec::new();
    let row = |measure: &str, statistic: &str, key: String, value: f64| ExperimentRow {
        spec_id: id,
        model: spec.model_name().to_string(),
        n: spec.node_count(),
        param: spec.param_string(),
        seed: spec.seed(),
        measure: measure.to_string(),
        statistic: statistic.to_string(),
        key,
        value,
    };
    let error_row = |measure: &str, msg: String| row(measure, "error", msg, f64::NAN);

    let graph = match spec.generate() {
        Ok(g) => g,
        Err(e) => {
            rows.push(error_row("", e.to_string()));
            return rows;
        }
    };

    let needs_spectrum = measures.iter().any(MeasureSpec::needs_spectrum)
        || summaries.contains(&SummarySpec::CumulativeCurve);
    let spectrum = if needs_spectrum {
        match Spectrum::compute(&graph.laplacian()) {
            Ok(s) => Some(s),
            Err(e) => {
                rows.push(error_row("spectrum", e.to_string()));
                return rows;
            }
        }
    } else {
        None
    };

    if summaries.contains(&SummarySpec::CumulativeCurve) {
        let s = spectrum.as_ref().expect("computed above");
        for (k, _, frac) in s.summary_rows() {
            rows.push(row("spectrum", "cumulative_fraction", k.to_string(), frac));
        }
    }

    let degrees: Vec<f64> = graph.degrees().iter().map(|&d| d as f64).collect();
    for m in measures {
        let name = m.name();
        let sv = match m.compute(&graph, spectrum.as_ref()) {
            Ok(sv) => sv,
            Err(e) => {
                rows.push(error_row(&name, e));
                continue;
            }
        };
        for summary in summaries {
            match summary {
                SummarySpec::CumulativeCurve => {}
                SummarySpec::PercentileCurve => {
                    for (p, v) in percentile_curve(&sv.scores) {
                        rows.push(row(&name, "percentile", format!("{p}"), v));
                    }
                }
                SummarySpec::CorrelationVsDegree(method) => {
                    match method.compute(&sv.scores, &degrees) {
                        Ok(c) => rows.push(row(
                            &name,
                            &format!("{}_vs_degree", method.name()),
                            String::new(),
                            c,
                        )),
                        Err(e) => rows.push(error_row(&name, e.to_string())),
                    }
                }
            }
        }
    }
    rows
}
