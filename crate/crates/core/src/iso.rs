//! Small-graph isomorphism testing by color refinement plus backtracking.
//!
//! Internal utility: the public classification paths use it for graphs with
//! at most a few dozen vertices, and the test suites use it to pin generator
//! labelings. It is exact (no hashing shortcuts) but makes no attempt to be
//! fast on large or adversarial inputs.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

fn signature_pass(colors: &[usize], g: &Graph, table: &mut BTreeMap<(usize, Vec<usize>), usize>) -> Vec<usize> {
    (0..g.vertex_count())
        .map(|v| {
            let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&u| colors[u]).collect();
            nb.sort_unstable();
            let next = table.len();
            *table.entry((colors[v], nb)).or_insert(next)
        })
        .collect()
}

fn histogram(colors: &[usize]) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for &c in colors {
        *m.entry(c).or_insert(0usize) += 1;
    }
    m
}

fn distinct(colors: &[usize]) -> usize {
    histogram(colors).len()
}

/// Stable color refinement run on both graphs through a shared signature
/// table, so color ids are comparable across the two. `None` when the color
/// histograms diverge (the graphs cannot be isomorphic).
fn refine_pair(g: &Graph, h: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut cg: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    let mut ch: Vec<usize> = (0..h.vertex_count()).map(|v| h.degree(v)).collect();
    if histogram(&cg) != histogram(&ch) {
        return None;
    }
    loop {
        let mut table = BTreeMap::new();
        let ng = signature_pass(&cg, g, &mut table);
        let nh = signature_pass(&ch, h, &mut table);
        if histogram(&ng) != histogram(&nh) {
            return None;
        }
        let done = distinct(&ng) == distinct(&cg);
        cg = ng;
        ch = nh;
        if done {
            return Some((cg, ch));
        }
    }
}

/// Exact isomorphism test.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    let Some((cg, ch)) = refine_pair(g, h) else {
        return false;
    };

    // BFS order from a vertex in the rarest color class keeps early
    // assignments maximally constrained by adjacency.
    let class_size = histogram(&cg);
    let start = (0..n)
        .min_by_key(|&v| (class_size[&cg[v]], v))
        .expect("nonempty");
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    seen[start] = true;
    queue.push_back(start);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    for v in 0..n {
        if !seen[v] {
            order.push(v); // remaining components in index order
        }
    }

    let mut map = vec![usize::MAX; n];
    let mut inv = vec![usize::MAX; n];
    backtrack(g, h, &cg, &ch, &order, 0, &mut map, &mut inv)
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    g: &Graph,
    h: &Graph,
    cg: &[usize],
    ch: &[usize],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    inv: &mut [usize],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    'cand: for w in 0..h.vertex_count() {
        if inv[w] != usize::MAX || ch[w] != cg[v] {
            continue;
        }
        for &u in g.neighbors(v) {
            if map[u] != usize::MAX && !h.has_edge(w, map[u]) {
                continue 'cand;
            }
        }
        for &x in h.neighbors(w) {
            if inv[x] != usize::MAX && !g.has_edge(v, inv[x]) {
                continue 'cand;
            }
        }
        map[v] = w;
        inv[w] = v;
        if backtrack(g, h, cg, ch, order, depth + 1, map, inv) {
            return true;
        }
        map[v] = usize::MAX;
        inv[w] = usize::MAX;
    }
    false
}
