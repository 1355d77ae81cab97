//! Per-pass syndrome graphs and shortest-path machinery.
//!
//! Each decoding pass works on a graph whose vertices are the pass's
//! generators; every data qubit that the pass can blame becomes either an
//! edge between the two generators it flips or, on the lattice boundary, a
//! dangling edge to a virtual boundary. Edge weights are the per-qubit
//! weights from the preprocessing step.
//!
//! All arithmetic is done in integral tenths so path costs compare exactly.
//! With non-negative weights distances come from Dijkstra; once a -0.1 edge
//! is present Dijkstra is unsound and an exact branch-and-bound over simple
//! paths takes over, pruned by a clamped-weight Dijkstra lower bound.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::code::StabilizerCode;
use crate::error::Error;
use crate::pauli::Pauli;

pub(crate) fn f64_to_tenths(w: f64) -> i64 {
    (w * 10.0).round() as i64
}

pub(crate) fn tenths_to_f64(t: i64) -> f64 {
    t as f64 / 10.0
}

/// Static per-pass graph, built once per code.
#[derive(Clone, Debug)]
pub(crate) struct PassGraph {
    /// H row index of each graph node.
    pub gens: Vec<usize>,
    /// H row -> node index.
    pub node_of_row: Vec<Option<usize>>,
    /// node -> (neighbor node, qubit), ascending by qubit.
    pub adj: Vec<Vec<(usize, usize)>>,
    /// node -> boundary qubits.
    pub boundary: Vec<Vec<usize>>,
    /// qubit -> Pauli this pass applies when the qubit lies on a correction path.
    pub correction: Vec<Option<Pauli>>,
}

impl PassGraph {
    /// Builds the graph for the generator rows `rows`, where a qubit carries
    /// the pass correction `correction(qubit)`.
    pub fn build(
        code: &StabilizerCode,
        rows: std::ops::Range<usize>,
        correction: impl Fn(usize) -> Pauli,
    ) -> PassGraph {
        let n = code.n();
        let gens: Vec<usize> = rows.clone().collect();
        let mut node_of_row = vec![None; code.generator_count()];
        for (node, &row) in gens.iter().enumerate() {
            node_of_row[row] = Some(node);
        }
        let mut adj = vec![Vec::new(); gens.len()];
        let mut boundary = vec![Vec::new(); gens.len()];
        let mut corr = vec![None; n];
        for q in 0..n {
            let p = correction(q);
            let flipped: Vec<usize> = gens
                .iter()
                .enumerate()
                .filter(|&(_, &row)| code.row(row).get(q).anticommutes(p))
                .map(|(node, _)| node)
                .collect();
            match flipped.len() {
                0 => {}
                1 => {
                    boundary[flipped[0]].push(q);
                    corr[q] = Some(p);
                }
                2 => {
                    adj[flipped[0]].push((flipped[1], q));
                    adj[flipped[1]].push((flipped[0], q));
                    corr[q] = Some(p);
                }
                more => panic!("qubit {} flips {} generators in one pass", q + 1, more),
            }
        }
        PassGraph { gens, node_of_row, adj, boundary, correction: corr }
    }

    fn node_count(&self) -> usize {
        self.gens.len()
    }

    fn min_edge_weight(&self, w: &[i64]) -> i64 {
        let mut min = i64::MAX;
        for (node, nbrs) in self.adj.iter().enumerate() {
            for &(_, q) in nbrs {
                min = min.min(w[q]);
            }
            for &q in &self.boundary[node] {
                min = min.min(w[q]);
            }
        }
        min
    }

    /// Sum of all negative edge weights; admissible slack for the
    /// branch-and-bound lower bound.
    fn negative_total(&self, w: &[i64]) -> i64 {
        let mut total = 0;
        for (node, nbrs) in self.adj.iter().enumerate() {
            for &(nb, q) in nbrs {
                if nb > node && w[q] < 0 {
                    total += w[q];
                }
            }
            for &q in &self.boundary[node] {
                if w[q] < 0 {
                    total += w[q];
                }
            }
        }
        total
    }
}

/// Which of the two matching passes a distance computation refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecodePass {
    /// Pass over the X-side generators (vertex generators for XZZX);
    /// its corrections address the Z-like error components.
    X,
    /// Pass over the Z-side generators (ZY generators included).
    Z,
}

/// Exact pairwise shortest-path costs between the highlighted ancillas of one
/// pass, plus each ancilla's cheapest route to the lattice boundary. Paths
/// are kept so matched pairs can be turned into corrections.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    nodes: Vec<usize>,
    dist: Vec<Vec<i64>>,
    paths: Vec<Vec<Vec<usize>>>,
    boundary_dist: Vec<i64>,
    boundary_paths: Vec<Vec<usize>>,
}

impl DistanceMatrix {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// H row index of highlighted ancilla `i`.
    pub fn node_row(&self, i: usize) -> usize {
        self.nodes[i]
    }

    pub fn cost_tenths(&self, i: usize, j: usize) -> i64 {
        self.dist[i][j]
    }

    pub fn cost(&self, i: usize, j: usize) -> f64 {
        tenths_to_f64(self.dist[i][j])
    }

    pub fn boundary_cost_tenths(&self, i: usize) -> i64 {
        self.boundary_dist[i]
    }

    pub fn boundary_cost(&self, i: usize) -> f64 {
        tenths_to_f64(self.boundary_dist[i])
    }

    /// Qubits along the chosen shortest path between highlighted ancillas.
    pub fn path(&self, i: usize, j: usize) -> &[usize] {
        &self.paths[i][j]
    }

    pub fn boundary_path(&self, i: usize) -> &[usize] {
        &self.boundary_paths[i]
    }

    pub(crate) fn permute_qubits(&mut self, perm: &[usize]) {
        for row in &mut self.paths {
            for path in row.iter_mut() {
                for q in path.iter_mut() {
                    *q = perm[*q];
                }
            }
        }
        for path in &mut self.boundary_paths {
            for q in path.iter_mut() {
                *q = perm[*q];
            }
        }
    }
}

/// Computes the distance matrix for the highlighted rows of a pass.
pub(crate) fn distances(
    graph: &PassGraph,
    weights: &[i64],
    highlighted_rows: &[usize],
) -> Result<DistanceMatrix, Error> {
    let nodes: Vec<usize> = highlighted_rows
        .iter()
        .map(|&row| {
            graph.node_of_row[row].ok_or_else(|| {
                Error::internal(format!("row {row} is not part of this pass"))
            })
        })
        .collect::<Result<_, _>>()?;
    let k = nodes.len();
    let mut dist = vec![vec![0i64; k]; k];
    let mut paths = vec![vec![Vec::new(); k]; k];
    let mut boundary_dist = vec![0i64; k];
    let mut boundary_paths = vec![Vec::new(); k];

    if graph.min_edge_weight(weights) >= 0 {
        for (i, &src) in nodes.iter().enumerate() {
            let (d, parent) = dijkstra(graph, weights, src);
            for (j, &dst) in nodes.iter().enumerate() {
                if i == j {
                    continue;
                }
                if d[dst] == INF {
                    return Err(Error::internal("disconnected ancilla in pass graph".into()));
                }
                dist[i][j] = d[dst];
                paths[i][j] = walk_back(&parent, dst);
            }
            let (bd, bpath) = best_boundary(graph, weights, &d, &parent)?;
            boundary_dist[i] = bd;
            boundary_paths[i] = bpath;
        }
    } else {
        let neg_total = graph.negative_total(weights);
        // Lower bounds from clamped weights are admissible once the total
        // negative mass is added back.
        let clamped: Vec<i64> = weights.iter().map(|&w| w.max(0)).collect();
        for (i, &src) in nodes.iter().enumerate() {
            for (j, &dst) in nodes.iter().enumerate().skip(i + 1) {
                let (lb, _) = dijkstra(graph, &clamped, dst);
                let (cost, path) =
                    bnb_simple_path(graph, weights, src, Target::Node(dst), &lb, neg_total)?;
                dist[i][j] = cost;
                dist[j][i] = cost;
                paths[i][j] = path.clone();
                paths[j][i] = path;
            }
            let lb = boundary_lower_bounds(graph, &clamped);
            let (cost, path) =
                bnb_simple_path(graph, weights, src, Target::Boundary, &lb, neg_total)?;
            boundary_dist[i] = cost;
            boundary_paths[i] = path;
        }
    }

    Ok(DistanceMatrix {
        nodes: highlighted_rows.to_vec(),
        dist,
        paths,
        boundary_dist,
        boundary_paths,
    })
}

const INF: i64 = i64::MAX / 4;

/// Deterministic Dijkstra; ties pop the smaller node index first and a
/// settled parent is never replaced by an equal-cost alternative.
fn dijkstra(graph: &PassGraph, w: &[i64], src: usize) -> (Vec<i64>, Vec<Option<(usize, usize)>>) {
    let n = graph.node_count();
    let mut dist = vec![INF; n];
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut heap = BinaryHeap::new();
    dist[src] = 0;
    heap.push(Reverse((0i64, src)));
    while let Some(Reverse((d, v))) = heap.pop() {
        if d > dist[v] {
            continue;
        }
        for &(nb, q) in &graph.adj[v] {
            let nd = d + w[q];
            if nd < dist[nb] {
                dist[nb] = nd;
                parent[nb] = Some((v, q));
                heap.push(Reverse((nd, nb)));
            }
        }
    }
    (dist, parent)
}

fn walk_back(parent: &[Option<(usize, usize)>], mut v: usize) -> Vec<usize> {
    let mut path = Vec::new();
    while let Some((prev, q)) = parent[v] {
        path.push(q);
        v = prev;
    }
    path.reverse();
    path
}

fn best_boundary(
    graph: &PassGraph,
    w: &[i64],
    dist: &[i64],
    parent: &[Option<(usize, usize)>],
) -> Result<(i64, Vec<usize>), Error> {
    let mut best: Option<(i64, usize, usize)> = None;
    for (v, qubits) in graph.boundary.iter().enumerate() {
        if dist[v] == INF {
            continue;
        }
        for &q in qubits {
            let cost = dist[v] + w[q];
            if best.map_or(true, |(c, _, _)| cost < c) {
                best = Some((cost, v, q));
            }
        }
    }
    let (cost, v, q) = best.ok_or_else(|| Error::internal("pass graph has no boundary".into()))?;
    let mut path = walk_back(parent, v);
    path.push(q);
    Ok((cost, path))
}

/// Multi-source clamped Dijkstra giving each node's cheapest non-negative
/// route to any boundary edge.
fn boundary_lower_bounds(graph: &PassGraph, clamped: &[i64]) -> Vec<i64> {
    let n = graph.node_count();
    let mut dist = vec![INF; n];
    let mut heap = BinaryHeap::new();
    for (v, qubits) in graph.boundary.iter().enumerate() {
        for &q in qubits {
            let d = clamped[q];
            if d < dist[v] {
                dist[v] = d;
                heap.push(Reverse((d, v)));
            }
        }
    }
    while let Some(Reverse((d, v))) = heap.pop() {
        if d > dist[v] {
            continue;
        }
        for &(nb, q) in &graph.adj[v] {
            let nd = d + clamped[q];
            if nd < dist[nb] {
                dist[nb] = nd;
                heap.push(Reverse((nd, nb)));
            }
        }
    }
    dist
}

enum Target {
    Node(usize),
    Boundary,
}

/// Exact cheapest simple path from `src` to the target under possibly
/// negative weights. `lb[v]` must lower-bound the remaining clamped cost from
/// v, and `neg_total` is the (non-positive) sum of all negative edge weights.
fn bnb_simple_path(
    graph: &PassGraph,
    w: &[i64],
    src: usize,
    target: Target,
    lb: &[i64],
    neg_total: i64,
) -> Result<(i64, Vec<usize>), Error> {
    struct Search<'a> {
        graph: &'a PassGraph,
        w: &'a [i64],
        lb: &'a [i64],
        neg_total: i64,
        target_node: Option<usize>,
        best: i64,
        best_path: Vec<usize>,
        visited: Vec<bool>,
        path: Vec<usize>,
    }

    impl Search<'_> {
        fn dfs(&mut self, v: usize, cost: i64) {
            if let Some(t) = self.target_node {
                if v == t {
                    if cost < self.best {
                        self.best = cost;
                        self.best_path = self.path.clone();
                    }
                    return;
                }
            } else {
                for &q in &self.graph.boundary[v] {
                    let total = cost + self.w[q];
                    if total < self.best {
                        self.best = total;
                        self.best_path = self.path.clone();
                        self.best_path.push(q);
                    }
                }
            }
            if cost + self.lb[v] + self.neg_total >= self.best {
                return;
            }
            for &(nb, q) in &self.graph.adj[v] {
                if self.visited[nb] {
                    continue;
                }
                self.visited[nb] = true;
                self.path.push(q);
                self.dfs(nb, cost + self.w[q]);
                self.path.pop();
                self.visited[nb] = false;
            }
        }
    }

    let mut search = Search {
        graph,
        w,
        lb,
        neg_total,
        target_node: match target {
            Target::Node(t) => Some(t),
            Target::Boundary => None,
        },
        best: INF,
        best_path: Vec::new(),
        visited: vec![false; graph.node_count()],
        path: Vec::new(),
    };
    search.visited[src] = true;
    search.dfs(src, 0);
    if search.best >= INF {
        return Err(Error::internal("branch-and-bound found no path to target".into()));
    }
    Ok((search.best, search.best_path))
}
