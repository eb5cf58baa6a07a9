//! Undirected simple graphs with stable string labels, plus their adjacency,
//! degree, and Laplacian matrices.
//!
//! Nodes are identified by opaque string labels (numeric tokens in a file are
//! treated as strings, not reordered); internal indices `0..n` follow first
//! appearance. Matrices are dense: the intended scale is n up to a couple of
//! thousand nodes, where a full eigendecomposition is practical.

use std::collections::BTreeSet;
use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

/// Bundled Padgett Florentine marriage network (16 families, Pucci isolated).
const FLORENTINE_EDGES: &str = include_str!("../data/florentine.edges");

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("line {line}: self-loop on `{label}`")]
    SelfLoop { line: usize, label: String },
    #[error("line {line}: expected one or two node tokens, got {count}: `{content}`")]
    MalformedLine {
        line: usize,
        count: usize,
        content: String,
    },
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("graph family `{family}` needs {requirement}, got n={n}{k}", k = .k.map(|k| format!(", k={k}")).unwrap_or_default())]
    BadFamilyParams {
        family: &'static str,
        requirement: &'static str,
        n: usize,
        k: Option<usize>,
    },
    #[error("self-loop on node index {0}")]
    SelfLoopIndex(usize),
    #[error("node index {index} out of range for graph of size {n}")]
    IndexOutOfRange { index: usize, n: usize },
}

/// An undirected simple graph: unique string labels, an edge set of unordered
/// index pairs, no self-loops, no duplicates. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    /// Stored as (i, j) with i < j.
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    /// Build a graph from explicit labels and index pairs.
    pub fn from_labeled_edges<L, S>(labels: L, edges: &[(usize, usize)]) -> Result<Self, GraphError>
    where
        L: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(GraphError::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        let mut set = BTreeSet::new();
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(GraphError::IndexOutOfRange { index: a.max(b), n });
            }
            if a == b {
                return Err(GraphError::SelfLoopIndex(a));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Graph {
            labels,
            index,
            edges: set,
        })
    }

    /// Convenience constructor with labels `"0".."n-1"`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::from_labeled_edges((0..n).map(|i| i.to_string()), edges)
    }

    /// Parse an edge-list text: one edge per line as two node tokens
    /// (whitespace- or comma-delimited), `#` starts a comment, and a line
    /// holding a single token declares an isolated node. Duplicate and
    /// reversed-duplicate edges collapse to one; labels keep first-appearance
    /// order.
    pub fn parse_edge_list(text: &str, options: &ParseOptions) -> Result<Self, GraphError> {
        let mut labels: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();

        let intern = |tok: &str, labels: &mut Vec<String>, index: &mut HashMap<String, usize>| {
            if let Some(&i) = index.get(tok) {
                i
            } else {
                let i = labels.len();
                labels.push(tok.to_string());
                index.insert(tok.to_string(), i);
                i
            }
        };

        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let data = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let tokens: Vec<&str> = match options.delimiter {
                Delimiter::Auto => {
                    if data.contains(',') {
                        data.split(',')
                            .map(str::trim)
                            .filter(|t| !t.is_empty())
                            .collect()
                    } else {
                        data.split_whitespace().collect()
                    }
                }
                Delimiter::Whitespace => data.split_whitespace().collect(),
                Delimiter::Comma => data
                    .split(',')
                    .map(str::trim)
                    .filter(|t| !t.is_empty())
                    .collect(),
            };
            match tokens.as_slice() {
                [] => continue,
                [single] => {
                    intern(single, &mut labels, &mut index);
                }
                [a, b] => {
                    if a == b {
                        return Err(GraphError::SelfLoop {
                            line,
                            label: a.to_string(),
                        });
                    }
                    let ia = intern(a, &mut labels, &mut index);
                    let ib = intern(b, &mut labels, &mut index);
                    edges.insert((ia.min(ib), ia.max(ib)));
                }
                more => {
                    return Err(GraphError::MalformedLine {
                        line,
                        count: more.len(),
                        content: data.trim().to_string(),
                    });
                }
            }
        }
        Ok(Graph {
            labels,
            index,
            edges,
        })
    }

    /// Serialize to the edge-list format accepted by [`Graph::parse_edge_list`].
    ///
    /// Every label is declared first (one per line, fixing label order and
    /// covering isolated nodes), followed by the edges sorted by index pair.
    /// Parsing the output reproduces the graph exactly, and a second
    /// serialization is byte-identical.
    pub fn to_edge_list_string(&self) -> String {
        let mut out = String::new();
        for l in &self.labels {
            let _ = writeln!(out, "{l}");
        }
        for &(i, j) in &self.edges {
            let _ = writeln!(out, "{} {}", self.labels[i], self.labels[j]);
        }
        out
    }

    /// Star on `n` nodes: node 0 adjacent to all others.
    pub fn star(n: usize) -> Result<Self, GraphError> {
        if n < 1 {
            return Err(GraphError::BadFamilyParams {
                family: "star",
                requirement: "n >= 1",
                n,
                k: None,
            });
        }
        let edges: Vec<_> = (1..n).map(|j| (0, j)).collect();
        Self::from_edges(n, &edges)
    }

    /// Complete graph on `n` nodes.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        if n < 1 {
            return Err(GraphError::BadFamilyParams {
                family: "complete",
                requirement: "n >= 1",
                n,
                k: None,
            });
        }
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                edges.push((i, j));
            }
        }
        Self::from_edges(n, &edges)
    }

    /// Path (chain) on `n` nodes.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        if n < 1 {
            return Err(GraphError::BadFamilyParams {
                family: "path",
                requirement: "n >= 1",
                n,
                k: None,
            });
        }
        let edges: Vec<_> = (1..n).map(|j| (j - 1, j)).collect();
        Self::from_edges(n, &edges)
    }

    /// Core-periphery graph: nodes `0..k` are hubs adjacent to every node
    /// (including each other); nodes `k..n` are adjacent only to the hubs.
    pub fn core_periphery(n: usize, k: usize) -> Result<Self, GraphError> {
        if n < 1 || k < 1 || k >= n {
            return Err(GraphError::BadFamilyParams {
                family: "core_periphery",
                requirement: "1 <= k < n",
                n,
                k: Some(k),
            });
        }
        let mut edges = Vec::new();
        for i in 0..k {
            for j in (i + 1)..n {
                edges.push((i, j));
            }
        }
        Self::from_edges(n, &edges)
    }

    /// The bundled 16-family Padgett Florentine marriage network, including
    /// the isolated Pucci family.
    pub fn florentine() -> Self {
        Self::parse_edge_list(FLORENTINE_EDGES, &ParseOptions::default())
            .expect("bundled florentine data is valid")
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Edges as (i, j) pairs with i < j, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.node_count()];
        for &(i, j) in &self.edges {
            d[i] += 1;
            d[j] += 1;
        }
        d
    }

    pub fn degree(&self, i: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == i || b == i)
            .count()
    }

    /// Neighbor lists, each sorted ascending.
    pub fn adjacency_list(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.node_count()];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }

    pub fn adjacency(&self) -> SymmetricMatrix {
        let mut m = SymmetricMatrix::zeros(self.node_count());
        for &(i, j) in &self.edges {
            m.set(i, j, 1.0);
        }
        m
    }

    /// Laplacian L = D - A. Diagonal holds the (integer) degrees, so row sums
    /// are exactly zero in floating point.
    pub fn laplacian(&self) -> SymmetricMatrix {
        let n = self.node_count();
        let mut m = SymmetricMatrix::zeros(n);
        for (i, &d) in self.degrees().iter().enumerate() {
            m.set(i, i, d as f64);
        }
        for &(i, j) in &self.edges {
            m.set(i, j, -1.0);
        }
        m
    }

    /// Connected components as a node -> component-id map plus the count.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let n = self.node_count();
        let adj = self.adjacency_list();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp[start] = count;
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }
}

/// Token delimiter handling for [`Graph::parse_edge_list`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Delimiter {
    /// Comma if the line contains one, otherwise whitespace.
    #[default]
    Auto,
    Whitespace,
    Comma,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ParseOptions {
    pub delimiter: Delimiter,
}

/// Dense symmetric matrix stored row-major; writes mirror both triangles, so
/// `entries[i][j] == entries[j][i]` holds exactly as stored.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(n: usize) -> Self {
        SymmetricMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Set entry (i, j) and its mirror (j, i).
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
        self.data[j * self.n + i] = v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn row_sum(&self, i: usize) -> f64 {
        self.row(i).iter().sum()
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.n);
        (0..self.n)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub(crate) fn to_dmatrix(&self) -> nalgebra::DMatrix<f64> {
        // Row-major vs column-major is immaterial for a symmetric matrix.
        nalgebra::DMatrix::from_column_slice(self.n, self.n, &self.data)
    }

    pub(crate) fn raw_data(&self) -> &[f64] {
        &self.data
    }
}
