//! Immutable simple undirected graphs with sorted adjacency lists.
//!
//! `Graph` is the universe of every computation in this crate: vertices are
//! `0..n`, adjacency lists are strictly increasing, and symmetry/loop-freeness
//! are enforced at construction. All operations are pure; a `Graph` can be
//! shared freely across threads.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Construction and precondition errors for graph operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    SelfLoop { v: usize },
    VertexOutOfRange { v: usize, n: usize },
    /// Two vertices in different components, reported by operations that
    /// require connectivity.
    Disconnected { a: usize, b: usize },
    NoEdges,
    NotAnEdge { x: usize, y: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::SelfLoop { v } => write!(f, "self-loop at vertex {v}"),
            GraphError::VertexOutOfRange { v, n } => {
                write!(f, "vertex {v} out of range for {n}-vertex graph")
            }
            GraphError::Disconnected { a, b } => {
                write!(f, "graph is disconnected: no path between {a} and {b}")
            }
            GraphError::NoEdges => write!(f, "graph has no edges"),
            GraphError::NotAnEdge { x, y } => write!(f, "{x} and {y} are not adjacent"),
        }
    }
}

impl core::error::Error for GraphError {}

/// BFS distances from a single source. `None` marks unreachable vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceRow {
    source: usize,
    dist: Vec<Option<u32>>,
}

impl DistanceRow {
    pub fn source(&self) -> usize {
        self.source
    }

    pub fn get(&self, v: usize) -> Option<u32> {
        self.dist[v]
    }

    /// Largest finite distance in the row.
    pub fn eccentricity(&self) -> Option<u32> {
        if self.dist.iter().any(|d| d.is_none()) {
            return None;
        }
        self.dist.iter().map(|d| d.unwrap()).max()
    }

    /// First vertex not reached from the source, if any.
    pub fn unreached(&self) -> Option<usize> {
        self.dist.iter().position(|d| d.is_none())
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }
}

/// Partition of the neighborhoods of an edge `xy`: common neighbors,
/// neighbors of `x` only, and neighbors of `y` only (`x` and `y` excluded).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborhoodSplit {
    pub common: Vec<usize>,
    pub only_x: Vec<usize>,
    pub only_y: Vec<usize>,
}

/// Finite simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.vertex_count(), self.m)
    }
}

impl Graph {
    /// Build a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph::from_sorted_adj(adj))
    }

    /// Internal constructor; `adj` must already be symmetric, loop-free and
    /// strictly increasing per vertex.
    pub(crate) fn from_sorted_adj(adj: Vec<Vec<usize>>) -> Graph {
        let m = adj.iter().map(|l| l.len()).sum::<usize>() / 2;
        let g = Graph { adj, m };
        debug_assert!(g.invariants_ok());
        g
    }

    fn invariants_ok(&self) -> bool {
        let n = self.vertex_count();
        let mut degsum = 0usize;
        for (v, list) in self.adj.iter().enumerate() {
            degsum += list.len();
            for w in list.windows(2) {
                if w[0] >= w[1] {
                    return false;
                }
            }
            for &u in list {
                if u >= n || u == v || self.adj[u].binary_search(&v).is_err() {
                    return false;
                }
            }
        }
        degsum == 2 * self.m
    }

    #[doc(hidden)]
    pub fn assert_valid(&self) {
        assert!(self.invariants_ok(), "graph invariants violated");
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.vertex_count() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> core::ops::Range<usize> {
        0..self.vertex_count()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        n > 0 && self.m == n * (n - 1) / 2
    }

    pub fn is_regular(&self) -> Option<usize> {
        let n = self.vertex_count();
        if n == 0 {
            return Some(0);
        }
        let d = self.degree(0);
        self.vertices().all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn bfs_row(&self, x: usize) -> DistanceRow {
        let n = self.vertex_count();
        assert!(x < n, "bfs source out of range");
        let mut dist = vec![None; n];
        dist[x] = Some(0);
        let mut queue = VecDeque::new();
        queue.push_back(x);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        DistanceRow { source: x, dist }
    }

    /// One BFS row per vertex, in vertex order.
    pub fn distance_rows(&self) -> Vec<DistanceRow> {
        self.vertices().map(|v| self.bfs_row(v)).collect()
    }

    /// `Some((a, b))` with `a`, `b` in different components, if any.
    pub fn disconnected_witness(&self) -> Option<(usize, usize)> {
        if self.vertex_count() == 0 {
            return None;
        }
        let row = self.bfs_row(0);
        row.unreached().map(|b| (0, b))
    }

    pub fn is_connected(&self) -> bool {
        self.disconnected_witness().is_none()
    }

    pub fn diameter(&self) -> Result<u32, GraphError> {
        if let Some((a, b)) = self.disconnected_witness() {
            return Err(GraphError::Disconnected { a, b });
        }
        Ok(self
            .vertices()
            .map(|v| self.bfs_row(v).eccentricity().unwrap())
            .max()
            .unwrap_or(0))
    }

    /// Length of a shortest cycle; `None` for forests.
    ///
    /// BFS from every vertex; a non-tree edge `uw` seen from root `r` closes
    /// a walk of length `d(r,u) + d(r,w) + 1` that contains a cycle no longer
    /// than itself, and for a root on a shortest cycle the bound is attained.
    pub fn girth(&self) -> Option<u32> {
        let n = self.vertex_count();
        let mut best: Option<u32> = None;
        for r in 0..n {
            let mut dist = vec![u32::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[r] = 0;
            let mut queue = VecDeque::new();
            queue.push_back(r);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if dist[w] == u32::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w && parent[w] != u && u < w {
                        let cand = dist[u] + dist[w] + 1;
                        if best.map_or(true, |b| cand < b) {
                            best = Some(cand);
                        }
                    }
                }
            }
        }
        best
    }

    /// Line graph: vertices are the edges of `self` in lexicographic order,
    /// adjacent when they share an endpoint.
    pub fn line_graph(&self) -> Result<Graph, GraphError> {
        if self.m == 0 {
            return Err(GraphError::NoEdges);
        }
        let edges: Vec<(usize, usize)> = self.edges().collect();
        let mut incident = vec![Vec::new(); self.vertex_count()];
        for (idx, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(idx);
            incident[v].push(idx);
        }
        let mut adj = vec![Vec::new(); edges.len()];
        for bundle in &incident {
            for (i, &e) in bundle.iter().enumerate() {
                for &f in &bundle[i + 1..] {
                    adj[e].push(f);
                    adj[f].push(e);
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph::from_sorted_adj(adj))
    }

    /// Cartesian product; vertex `(a, b)` gets index `a * other.n + b`.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let nb = other.vertex_count();
        let mut adj = vec![Vec::new(); self.vertex_count() * nb];
        for a in self.vertices() {
            for (b, bn) in other.adj.iter().enumerate() {
                let base = a * nb + b;
                for &b2 in bn {
                    adj[base].push(a * nb + b2);
                }
                for &a2 in &self.adj[a] {
                    adj[base].push(a2 * nb + b);
                }
                adj[base].sort_unstable();
            }
        }
        Graph::from_sorted_adj(adj)
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let mut adj = vec![Vec::new(); n];
        for u in 0..n {
            for v in 0..n {
                if v != u && !self.has_edge(u, v) {
                    adj[u].push(v);
                }
            }
        }
        Graph::from_sorted_adj(adj)
    }

    /// Subgraph induced by `s`, relabeled `0..s.len()` in sorted vertex
    /// order. Panics on out-of-range or duplicate vertices.
    pub fn induced(&self, s: &[usize]) -> Graph {
        let mut verts: Vec<usize> = s.to_vec();
        verts.sort_unstable();
        for w in verts.windows(2) {
            assert!(w[0] != w[1], "duplicate vertex in induced set");
        }
        if let Some(&last) = verts.last() {
            assert!(last < self.vertex_count(), "vertex out of range");
        }
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![Vec::new(); verts.len()];
        for (i, &v) in verts.iter().enumerate() {
            for &w in &self.adj[v] {
                if index[w] != usize::MAX {
                    adj[i].push(index[w]);
                }
            }
        }
        Graph::from_sorted_adj(adj)
    }

    /// Subgraph induced by the neighbors of `v`.
    pub fn local_graph(&self, v: usize) -> Graph {
        self.induced(&self.adj[v])
    }

    /// Split the neighborhoods of the edge `xy` into common neighbors and
    /// exclusive sides.
    pub fn neighborhood_split(&self, x: usize, y: usize) -> Result<NeighborhoodSplit, GraphError> {
        if !self.has_edge(x, y) {
            return Err(GraphError::NotAnEdge { x, y });
        }
        let mut split = NeighborhoodSplit {
            common: Vec::new(),
            only_x: Vec::new(),
            only_y: Vec::new(),
        };
        for &w in &self.adj[x] {
            if w == y {
                continue;
            }
            if self.has_edge(w, y) {
                split.common.push(w);
            } else {
                split.only_x.push(w);
            }
        }
        for &w in &self.adj[y] {
            if w != x && !self.has_edge(w, x) {
                split.only_y.push(w);
            }
        }
        Ok(split)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::build(n, &edges).unwrap()
    }

    #[test]
    fn build_triangle() {
        let g = Graph::build(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        g.assert_valid();
        assert_eq!(g.edge_count(), 3);
        assert!(g.vertices().all(|v| g.degree(v) == 2));
    }

    #[test]
    fn build_rejects_self_loop_and_range() {
        assert_eq!(
            Graph::build(2, &[(0, 0)]),
            Err(GraphError::SelfLoop { v: 0 })
        );
        assert_eq!(
            Graph::build(2, &[(0, 5)]),
            Err(GraphError::VertexOutOfRange { v: 5, n: 2 })
        );
    }

    #[test]
    fn build_collapses_duplicates() {
        let g = Graph::build(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn pentagon_metrics() {
        let g = cycle(5);
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.diameter(), Ok(2));
        assert_eq!(g.girth(), Some(5));
    }

    #[test]
    fn girth_cases() {
        assert_eq!(cycle(4).girth(), Some(4));
        assert_eq!(cycle(7).girth(), Some(7));
        // path: acyclic
        let p = Graph::build(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p.girth(), None);
        // triangle with pendant
        let g = Graph::build(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(g.girth(), Some(3));
        // two squares sharing an edge: girth 4
        let g = Graph::build(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(g.girth(), Some(4));
    }

    #[test]
    fn diameter_disconnected_names_components() {
        let g = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.diameter(), Err(GraphError::Disconnected { a: 0, b: 2 }));
    }

    #[test]
    fn bfs_row_basics() {
        let g = cycle(6);
        let row = g.bfs_row(0);
        assert_eq!(row.get(0), Some(0));
        assert_eq!(row.get(3), Some(3));
        assert_eq!(row.eccentricity(), Some(3));
    }

    #[test]
    fn line_graph_of_cycle_is_cycle() {
        let g = cycle(5);
        let l = g.line_graph().unwrap();
        assert_eq!(l.vertex_count(), 5);
        assert!(l.vertices().all(|v| l.degree(v) == 2));
        assert_eq!(l.girth(), Some(5));
    }

    #[test]
    fn line_graph_regular_degree_law() {
        // 3-regular K4: line graph is 4-regular on 6 vertices
        let k4 = Graph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let l = k4.line_graph().unwrap();
        assert_eq!(l.vertex_count(), 6);
        assert!(l.vertices().all(|v| l.degree(v) == 4));
    }

    #[test]
    fn line_graph_needs_edges() {
        let g = Graph::build(3, &[]).unwrap();
        assert_eq!(g.line_graph(), Err(GraphError::NoEdges));
    }

    #[test]
    fn product_of_two_k2_is_c4() {
        let k2 = Graph::build(2, &[(0, 1)]).unwrap();
        let p = k2.cartesian_product(&k2);
        assert_eq!(p.vertex_count(), 4);
        assert!(p.vertices().all(|v| p.degree(v) == 2));
        assert_eq!(p.girth(), Some(4));
    }

    #[test]
    fn product_diameter_adds() {
        let c5 = cycle(5);
        let c4 = cycle(4);
        let p = c5.cartesian_product(&c4);
        assert_eq!(
            p.diameter().unwrap(),
            c5.diameter().unwrap() + c4.diameter().unwrap()
        );
    }

    #[test]
    fn complement_of_complete_is_empty() {
        let k4 = Graph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.complement().edge_count(), 0);
        assert_eq!(k4.complement().complement(), k4);
    }

    #[test]
    fn neighborhood_split_k4() {
        let k4 = Graph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let s = k4.neighborhood_split(0, 1).unwrap();
        assert_eq!(s.common, vec![2, 3]);
        assert!(s.only_x.is_empty() && s.only_y.is_empty());
        assert_eq!(
            k4.neighborhood_split(0, 0),
            Err(GraphError::NotAnEdge { x: 0, y: 0 })
        );
    }

    #[test]
    fn induced_and_local() {
        let g = cycle(5);
        let loc = g.local_graph(0);
        assert_eq!(loc.vertex_count(), 2);
        assert_eq!(loc.edge_count(), 0);
        let path = g.induced(&[0, 1, 2]);
        assert_eq!(path.edge_count(), 2);
    }
}
