//! Independent brute-force oracles and exhaustive small-graph enumeration
//! for the test suites.
//!
//! The Wasserstein oracle here deliberately shares no machinery with the
//! transport solver under test: it maximizes the Kantorovich dual objective
//! by exhaustive enumeration of integer-valued 1-Lipschitz potentials. On a
//! connected graph the 1-Lipschitz condition reduces to `|f(u)-f(v)| <= 1`
//! across edges, the dual optimum is attained at an integer-valued potential
//! (the constraint matrix is a network matrix, hence totally unimodular),
//! and fixing `f(start) = 0` loses nothing. Enumerating assignments in BFS
//! order with the edge constraint keeps the search tree at or below 3^(n-1).

use lly_core::rat::Rational;
use lly_core::Graph;
use num_traits::Zero;

/// Exact W1 between two equal-mass nonnegative measures on a connected
/// graph, by exhaustive dual enumeration. Panics if the graph is
/// disconnected or the totals differ (oracle misuse, not data).
pub fn wasserstein_dual_oracle(
    g: &Graph,
    mu1: &[(usize, Rational)],
    mu2: &[(usize, Rational)],
) -> Rational {
    assert!(g.is_connected(), "oracle requires a connected graph");
    let n = g.vertex_count();
    assert!(n > 0);
    let total1: Rational = mu1.iter().map(|(_, m)| m.clone()).sum();
    let total2: Rational = mu2.iter().map(|(_, m)| m.clone()).sum();
    assert_eq!(total1, total2, "oracle requires balanced measures");

    // net signed mass per vertex
    let mut net = vec![Rational::zero(); n];
    for (v, m) in mu1 {
        net[*v] += m.clone();
    }
    for (v, m) in mu2 {
        net[*v] -= m.clone();
    }

    // BFS order: each vertex after the first has an already-placed neighbor
    let mut order = Vec::with_capacity(n);
    let mut anchor = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    seen[0] = true;
    queue.push_back(0usize);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                anchor[w] = v;
                queue.push_back(w);
            }
        }
    }
    assert_eq!(order.len(), n, "oracle requires a connected graph");

    let mut f = vec![0i64; n];
    let mut assigned = vec![false; n];
    let mut best: Option<Rational> = None;
    enumerate(g, &order, &anchor, &net, 0, &mut f, &mut assigned, &mut best);
    best.expect("at least the zero potential is feasible")
}

#[allow(clippy::too_many_arguments)]
fn enumerate(
    g: &Graph,
    order: &[usize],
    anchor: &[usize],
    net: &[Rational],
    depth: usize,
    f: &mut [i64],
    assigned: &mut [bool],
    best: &mut Option<Rational>,
) {
    if depth == order.len() {
        let mut obj = Rational::zero();
        for (v, w) in net.iter().enumerate() {
            if !w.is_zero() {
                obj += Rational::from_integer(f[v].into()) * w.clone();
            }
        }
        if best.as_ref().map_or(true, |b| obj > *b) {
            *best = Some(obj);
        }
        return;
    }
    let v = order[depth];
    let candidates: [i64; 3] = if anchor[v] == usize::MAX {
        [0, 0, 0] // root: fix f = 0
    } else {
        let base = f[anchor[v]];
        [base - 1, base, base + 1]
    };
    let upto = if anchor[v] == usize::MAX { 1 } else { 3 };
    'cand: for &val in candidates.iter().take(upto) {
        for &u in g.neighbors(v) {
            if assigned[u] && (f[u] - val).abs() > 1 {
                continue 'cand;
            }
        }
        f[v] = val;
        assigned[v] = true;
        enumerate(g, order, anchor, net, depth + 1, f, assigned, best);
        assigned[v] = false;
    }
}

/// All labelled graphs on `n` vertices (edge subsets of K_n). `n <= 7`.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 7, "exhaustive enumeration capped at 7 vertices");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let m = pairs.len();
    (0u32..1 << m).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::build(n, &edges).unwrap()
    })
}

/// All connected labelled graphs on `n` vertices.
pub fn connected_graphs(n: usize) -> impl Iterator<Item = Graph> {
    all_graphs(n).filter(|g| g.is_connected())
}
