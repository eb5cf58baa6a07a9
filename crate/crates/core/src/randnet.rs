//! Seeded random-graph generators.
//!
//! All generators draw from a ChaCha8 stream seeded with the 64-bit spec
//! seed, so a given spec reproduces the same graph on every platform. Batch
//! runs that need independent graphs should vary the seed per spec; nothing
//! here shares generator state.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error)]
pub enum GenError {
    #[error("edge probability {0} out of range [0, 1]")]
    BadProbability(f64),
    #[error("attachment count m={m} out of range 1 <= m < n={n}")]
    BadAttachment { m: usize, n: usize },
    #[error("node count must be at least 1")]
    EmptySpec,
    #[error(
        "clustered spec needs at least 2 clusters of at least 1 node, got k={k}, n_per={n_per}"
    )]
    BadClusterSpec { k: usize, n_per: usize },
    #[error("rewire probability {0} out of range [0, 1]")]
    BadRewireProbability(f64),
}

/// A reproducible random-graph specification.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum GenSpec {
    ErdosRenyi { n: usize, p: f64, seed: u64 },
    BarabasiAlbert { n: usize, m: usize, seed: u64 },
}

impl GenSpec {
    /// ER spec with edge probability chosen for a target average degree,
    /// p = avg_deg / (n - 1).
    pub fn erdos_renyi_avg_degree(n: usize, avg_deg: f64, seed: u64) -> Self {
        GenSpec::ErdosRenyi {
            n,
            p: avg_deg / (n as f64 - 1.0),
            seed,
        }
    }

    pub fn generate(&self) -> Result<Graph, GenError> {
        match *self {
            GenSpec::ErdosRenyi { n, p, seed } => erdos_renyi(n, p, seed),
            GenSpec::BarabasiAlbert { n, m, seed } => barabasi_albert(n, m, seed),
        }
    }

    pub fn model_name(&self) -> &'static str {
        match self {
            GenSpec::ErdosRenyi { .. } => "er",
            GenSpec::BarabasiAlbert { .. } => "ba",
        }
    }

    pub fn node_count(&self) -> usize {
        match *self {
            GenSpec::ErdosRenyi { n, .. } | GenSpec::BarabasiAlbert { n, .. } => n,
        }
    }

    pub fn seed(&self) -> u64 {
        match *self {
            GenSpec::ErdosRenyi { seed, .. } | GenSpec::BarabasiAlbert { seed, .. } => seed,
        }
    }

    pub fn param_string(&self) -> String {
        match *self {
            GenSpec::ErdosRenyi { p, .. } => format!("p={p}"),
            GenSpec::BarabasiAlbert { m, .. } => format!("m={m}"),
        }
    }
}

/// G(n, p): each unordered pair is an edge independently with probability p.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph, GenError> {
    if n == 0 {
        return Err(GenError::EmptySpec);
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(GenError::BadProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen::<f64>() < p {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("generator emits valid simple edges"))
}

/// Barabási–Albert preferential attachment: a clique on m+1 seed nodes, then
/// each arriving node attaches m distinct edges with probability proportional
/// to degree at arrival time.
pub fn barabasi_albert(n: usize, m: usize, seed: u64) -> Result<Graph, GenError> {
    if n == 0 {
        return Err(GenError::EmptySpec);
    }
    if m == 0 || m >= n {
        return Err(GenError::BadAttachment { m, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    // One endpoint entry per edge end; sampling an index uniformly samples a
    // node with probability proportional to its degree.
    let mut endpoints: Vec<usize> = Vec::new();
    for i in 0..=m {
        for j in (i + 1)..=m {
            edges.push((i, j));
            endpoints.push(i);
            endpoints.push(j);
        }
    }
    for v in (m + 1)..n {
        let snapshot_len = endpoints.len();
        let mut targets: Vec<usize> = Vec::with_capacity(m);
        while targets.len() < m {
            let t = endpoints[rng.gen_range(0..snapshot_len)];
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for t in targets {
            edges.push((t, v));
            endpoints.push(t);
            endpoints.push(v);
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("generator emits valid simple edges"))
}

/// k ER(n_per, p_within) blocks; each within-cluster edge is independently
/// rewired with probability `rewire`: a uniformly chosen endpoint is kept and
/// the other is redirected to a uniform node in another cluster. Collisions
/// with existing edges are resampled (bounded retries, then the original edge
/// is kept), so the edge count is preserved and the graph stays simple.
pub fn clustered_er(
    clusters: usize,
    nodes_per_cluster: usize,
    p_within: f64,
    rewire: f64,
    seed: u64,
) -> Result<Graph, GenError> {
    if clusters < 2 || nodes_per_cluster == 0 {
        return Err(GenError::BadClusterSpec {
            k: clusters,
            n_per: nodes_per_cluster,
        });
    }
    if !(0.0..=1.0).contains(&p_within) {
        return Err(GenError::BadProbability(p_within));
    }
    if !(0.0..=1.0).contains(&rewire) {
        return Err(GenError::BadRewireProbability(rewire));
    }
    let n = clusters * nodes_per_cluster;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut within: Vec<(usize, usize)> = Vec::new();
    for c in 0..clusters {
        let base = c * nodes_per_cluster;
        for i in 0..nodes_per_cluster {
            for j in (i + 1)..nodes_per_cluster {
                if rng.gen::<f64>() < p_within {
                    within.push((base + i, base + j));
                }
            }
        }
    }

    let mut edge_set: std::collections::BTreeSet<(usize, usize)> = within.iter().copied().collect();
    let cluster_of = |v: usize| v / nodes_per_cluster;
    for &(a, b) in &within {
        if rng.gen::<f64>() >= rewire {
            continue;
        }
        let keep = if rng.gen::<bool>() { a } else { b };
        edge_set.remove(&(a, b));
        let mut placed = false;
        for _ in 0..100 {
            let t = rng.gen_range(0..n);
            if cluster_of(t) == cluster_of(keep) {
                continue;
            }
            let e = (keep.min(t), keep.max(t));
            if !edge_set.contains(&e) {
                edge_set.insert(e);
                placed = true;
                break;
            }
        }
        if !placed {
            edge_set.insert((a, b));
        }
    }

    let edges: Vec<(usize, usize)> = edge_set.into_iter().collect();
    Ok(Graph::from_edges(n, &edges).expect("generator emits valid simple edges"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn er_extremes() {
        let g = erdos_renyi(6, 0.0, 1).unwrap();
        assert_eq!(g.edge_count(), 0);
        let g = erdos_renyi(6, 1.0, 1).unwrap();
        assert_eq!(g.edge_count(), 15);
        assert!(erdos_renyi(6, 1.5, 1).is_err());
    }

    #[test]
    fn er_deterministic_and_seed_sensitive() {
        let a = erdos_renyi(40, 0.2, 99).unwrap();
        let b = erdos_renyi(40, 0.2, 99).unwrap();
        assert_eq!(a, b);
        let c = erdos_renyi(40, 0.2, 100).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn er_mean_degree_near_target() {
        // avg degree 8 at n=600; sample mean over 10 seeds within +-0.5.
        let mut total = 0.0;
        for seed in 0..10 {
            let g = GenSpec::erdos_renyi_avg_degree(600, 8.0, seed)
                .generate()
                .unwrap();
            total += 2.0 * g.edge_count() as f64 / 600.0;
        }
        let mean = total / 10.0;
        assert!((mean - 8.0).abs() < 0.5, "mean degree {mean}");
    }

    #[test]
    fn ba_tree_when_m_is_one() {
        let g = barabasi_albert(50, 1, 7).unwrap();
        assert_eq!(g.edge_count(), 49);
        let (_, comps) = g.components();
        assert_eq!(comps, 1);
    }

    #[test]
    fn ba_average_degree_and_validation() {
        let g = barabasi_albert(200, 4, 11).unwrap();
        let avg = 2.0 * g.edge_count() as f64 / 200.0;
        assert!((avg - 8.0).abs() < 0.5, "avg degree {avg}");
        assert!(barabasi_albert(5, 0, 1).is_err());
        assert!(barabasi_albert(5, 5, 1).is_err());
    }

    #[test]
    fn ba_heavy_tail() {
        let mut max_deg = 0usize;
        let mut mean = 0.0;
        for seed in 0..10 {
            let g = barabasi_albert(600, 2, seed).unwrap();
            let d = g.degrees();
            max_deg = max_deg.max(*d.iter().max().unwrap());
            mean += d.iter().sum::<usize>() as f64 / 600.0;
        }
        mean /= 10.0;
        assert!(
            max_deg as f64 > 5.0 * mean,
            "max degree {max_deg} vs mean {mean}"
        );
    }

    #[test]
    fn ba_deterministic() {
        assert_eq!(
            barabasi_albert(100, 3, 5).unwrap(),
            barabasi_albert(100, 3, 5).unwrap()
        );
    }

    #[test]
    fn clustered_no_rewire_disconnected() {
        let g = clustered_er(5, 50, 0.1, 0.0, 3).unwrap();
        assert_eq!(g.node_count(), 250);
        let (_, comps) = g.components();
        assert!(comps >= 5);
    }

    #[test]
    fn clustered_standard_parameters() {
        // 5 clusters of ER(50, 0.1) with 5% rewiring.
        let g = clustered_er(5, 50, 0.1, 0.05, 9).unwrap();
        assert_eq!(g.node_count(), 250);
        let cross = g.edges().filter(|&(a, b)| a / 50 != b / 50).count();
        assert!(cross > 0, "rewiring produced no cross-cluster edges");
    }

    #[test]
    fn clustered_rewire_preserves_edge_count() {
        for rewire in [0.05, 1.0] {
            let base = clustered_er(4, 30, 0.15, 0.0, 21).unwrap();
            let moved = clustered_er(4, 30, 0.15, rewire, 21).unwrap();
            assert_eq!(base.edge_count(), moved.edge_count(), "rewire={rewire}");
        }
    }

    #[test]
    fn genspec_json_round_trip() {
        let spec = GenSpec::BarabasiAlbert {
            n: 100,
            m: 4,
            seed: 42,
        };
        let json = serde_json::to_string(&spec).unwrap();
        let back: GenSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(spec, back);
    }
}
