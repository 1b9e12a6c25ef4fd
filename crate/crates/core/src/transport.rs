//! Exact optimal transport over rational measures, p-Ollivier curvature,
//! and the Lin–Lu–Yau curvature with machine-checkable certificates.
//!
//! W1 is solved as a min-cost transportation problem on the bipartite
//! support, by successive shortest paths under integer node potentials
//! (all costs are BFS hop counts, so Dijkstra runs in pure integer
//! arithmetic; only flow amounts are rationals). Every plan retains its
//! dual potentials so optimality can be re-audited after the fact:
//! feasibility `u(x) + v(y) <= d(x,y)` on all support pairs, complementary
//! slackness on the support of the plan, and a zero duality gap.
//!
//! The Lin–Lu–Yau limit is evaluated at the idleness `p* = L/(L+1)` with
//! `L = lcm(deg x, deg y)` and certified by a second evaluation at
//! `p** = (2L+1)/(2L+2)`: since `p -> kappa_p` is concave and vanishes at
//! `p = 1`, the chord slope `kappa_p/(1-p)` is non-increasing in `p`, so
//! equality of the two slopes pins the slope of the final linear segment,
//! which is the limit. A mismatch is reported as an internal error, never
//! silently interpolated.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::graph::{DistanceRow, Graph};
use crate::rat::{int, rat, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TransportError {
    /// Idleness outside [0, 1].
    InvalidIdleness,
    IsolatedVertex { v: usize },
    SameVertex { v: usize },
    NotAnEdge { x: usize, y: usize },
    VertexOutOfRange { v: usize, n: usize },
    /// Mass must move between different components.
    Unreachable { a: usize, b: usize },
    Disconnected { a: usize, b: usize },
    NoEdges,
    /// The two-point collinearity certificate failed; this is an internal
    /// invariant violation, not a property of the input.
    CertificateMismatch { x: usize, y: usize },
    /// verify_simple_plan preconditions.
    SimplePlanPrereq { reason: &'static str },
    Measure(MeasureError),
}

impl fmt::Display for TransportError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransportError::InvalidIdleness => write!(f, "idleness must lie in [0, 1]"),
            TransportError::IsolatedVertex { v } => write!(f, "vertex {v} has no neighbors"),
            TransportError::SameVertex { v } => write!(f, "need two distinct vertices, got {v}"),
            TransportError::NotAnEdge { x, y } => write!(f, "{x} and {y} are not adjacent"),
            TransportError::VertexOutOfRange { v, n } => {
                write!(f, "vertex {v} out of range for {n}-vertex graph")
            }
            TransportError::Unreachable { a, b } => {
                write!(f, "no path between {a} and {b}")
            }
            TransportError::Disconnected { a, b } => {
                write!(f, "graph is disconnected: no path between {a} and {b}")
            }
            TransportError::NoEdges => write!(f, "graph has no edges"),
            TransportError::CertificateMismatch { x, y } => write!(
                f,
                "internal error: curvature certificate mismatch on edge ({x},{y})"
            ),
            TransportError::SimplePlanPrereq { reason } => {
                write!(f, "simple-plan check precondition failed: {reason}")
            }
            TransportError::Measure(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for TransportError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MeasureError {
    NonPositiveMass { v: usize },
    TotalNotOne,
}

impl fmt::Display for MeasureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeasureError::NonPositiveMass { v } => {
                write!(f, "mass at vertex {v} must be positive")
            }
            MeasureError::TotalNotOne => write!(f, "total mass must be exactly 1"),
        }
    }
}

impl core::error::Error for MeasureError {}

/// Probability measure with sparse positive rational masses summing to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbMeasure {
    mass: BTreeMap<usize, Rational>,
}

impl ProbMeasure {
    /// Build from entries; duplicate vertices accumulate. Zero-mass entries
    /// are rejected rather than dropped so callers notice bad inputs.
    pub fn from_entries(
        entries: impl IntoIterator<Item = (usize, Rational)>,
    ) -> Result<ProbMeasure, MeasureError> {
        let mut mass: BTreeMap<usize, Rational> = BTreeMap::new();
        for (v, m) in entries {
            if !m.is_positive() {
                return Err(MeasureError::NonPositiveMass { v });
            }
            *mass.entry(v).or_insert_with(Rational::zero) += m;
        }
        let total: Rational = mass.values().cloned().sum();
        if !total.is_one() {
            return Err(MeasureError::TotalNotOne);
        }
        Ok(ProbMeasure { mass })
    }

    pub fn mass(&self, v: usize) -> Rational {
        self.mass.get(&v).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.mass.iter().map(|(&v, m)| (v, m))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.mass.keys().copied()
    }

    pub fn support_len(&self) -> usize {
        self.mass.len()
    }

    pub fn max_vertex(&self) -> Option<usize> {
        self.mass.keys().next_back().copied()
    }
}

/// The lazy random-walk measure: mass `p` at `x`, `(1-p)/deg(x)` at each
/// neighbor.
pub fn measure_mu(g: &Graph, x: usize, p: &Rational) -> Result<ProbMeasure, TransportError> {
    if x >= g.vertex_count() {
        return Err(TransportError::VertexOutOfRange { v: x, n: g.vertex_count() });
    }
    if p.is_negative() || p > &int(1) {
        return Err(TransportError::InvalidIdleness);
    }
    let deg = g.degree(x);
    if deg == 0 {
        return Err(TransportError::IsolatedVertex { v: x });
    }
    let mut entries = Vec::new();
    if p.is_positive() {
        entries.push((x, p.clone()));
    }
    let spread = (int(1) - p.clone()) / int(deg as i64);
    if spread.is_positive() {
        for &w in g.neighbors(x) {
            entries.push((w, spread.clone()));
        }
    }
    ProbMeasure::from_entries(entries).map_err(TransportError::Measure)
}

/// An optimal transport plan with its integer dual potentials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransportPlan {
    /// Positive masses keyed by (source vertex, target vertex).
    pub entries: BTreeMap<(usize, usize), Rational>,
    /// Total cost, sum of distance times mass.
    pub cost: Rational,
    /// Dual potential on the source support.
    pub source_potential: BTreeMap<usize, i64>,
    /// Dual potential on the target support.
    pub target_potential: BTreeMap<usize, i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlanAuditError {
    RowMarginal { v: usize },
    ColMarginal { v: usize },
    CostMismatch,
    DualInfeasible { x: usize, y: usize },
    SlacknessViolated { x: usize, y: usize },
    DualityGap,
}

impl fmt::Display for PlanAuditError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanAuditError::RowMarginal { v } => write!(f, "row marginal at {v} is off"),
            PlanAuditError::ColMarginal { v } => write!(f, "column marginal at {v} is off"),
            PlanAuditError::CostMismatch => write!(f, "stored cost disagrees with entries"),
            PlanAuditError::DualInfeasible { x, y } => {
                write!(f, "dual potentials violate u({x}) + v({y}) <= d({x},{y})")
            }
            PlanAuditError::SlacknessViolated { x, y } => {
                write!(f, "complementary slackness fails on ({x},{y})")
            }
            PlanAuditError::DualityGap => write!(f, "dual value differs from primal cost"),
        }
    }
}

impl TransportPlan {
    /// Post-hoc optimality audit: exact marginals, recomputed cost, dual
    /// feasibility on every support pair, complementary slackness, and a
    /// zero duality gap.
    pub fn audit(
        &self,
        g: &Graph,
        mu1: &ProbMeasure,
        mu2: &ProbMeasure,
    ) -> Result<(), PlanAuditError> {
        let mut rows: BTreeMap<usize, Rational> = BTreeMap::new();
        let mut cols: BTreeMap<usize, Rational> = BTreeMap::new();
        for (&(x, y), m) in &self.entries {
            *rows.entry(x).or_insert_with(Rational::zero) += m.clone();
            *cols.entry(y).or_insert_with(Rational::zero) += m.clone();
        }
        for (v, m) in mu1.iter() {
            if rows.remove(&v).unwrap_or_else(Rational::zero) != *m {
                return Err(PlanAuditError::RowMarginal { v });
            }
        }
        if let Some((&v, _)) = rows.iter().next() {
            return Err(PlanAuditError::RowMarginal { v });
        }
        for (v, m) in mu2.iter() {
            if cols.remove(&v).unwrap_or_else(Rational::zero) != *m {
                return Err(PlanAuditError::ColMarginal { v });
            }
        }
        if let Some((&v, _)) = cols.iter().next() {
            return Err(PlanAuditError::ColMarginal { v });
        }

        let rows_by_source: BTreeMap<usize, DistanceRow> =
            mu1.support().map(|v| (v, g.bfs_row(v))).collect();
        let dist = |x: usize, y: usize| rows_by_source[&x].get(y).expect("audited plan connects");

        let mut cost = Rational::zero();
        for (&(x, y), m) in &self.entries {
            cost += int(dist(x, y) as i64) * m.clone();
        }
        if cost != self.cost {
            return Err(PlanAuditError::CostMismatch);
        }

        for x in mu1.support() {
            for y in mu2.support() {
                let u = self.source_potential[&x];
                let v = self.target_potential[&y];
                if u + v > dist(x, y) as i64 {
                    return Err(PlanAuditError::DualInfeasible { x, y });
                }
            }
        }
        for (&(x, y), m) in &self.entries {
            if m.is_positive()
                && self.source_potential[&x] + self.target_potential[&y] != dist(x, y) as i64
            {
                return Err(PlanAuditError::SlacknessViolated { x, y });
            }
        }
        let mut dual = Rational::zero();
        for (v, m) in mu1.iter() {
            dual += int(self.source_potential[&v]) * m.clone();
        }
        for (v, m) in mu2.iter() {
            dual += int(self.target_potential[&v]) * m.clone();
        }
        if dual != self.cost {
            return Err(PlanAuditError::DualityGap);
        }
        Ok(())
    }
}

/// Exact Wasserstein distance with an optimal plan attaining it.
pub fn wasserstein(
    g: &Graph,
    mu1: &ProbMeasure,
    mu2: &ProbMeasure,
) -> Result<(Rational, TransportPlan), TransportError> {
    let n = g.vertex_count();
    for m in [mu1, mu2] {
        if let Some(v) = m.max_vertex() {
            if v >= n {
                return Err(TransportError::VertexOutOfRange { v, n });
            }
        }
    }
    let supplies: Vec<(usize, Rational)> = mu1.iter().map(|(v, m)| (v, m.clone())).collect();
    let demands: Vec<(usize, Rational)> = mu2.iter().map(|(v, m)| (v, m.clone())).collect();
    let plan = solve_transport(g, &supplies, &demands)?;
    Ok((plan.cost.clone(), plan))
}

/// Min-cost transportation between balanced positive supplies and demands.
/// Successive shortest paths with integer potentials, warm-started with the
/// in-place mass `min(supply(v), demand(v))` (cost 0, trivially optimal for
/// its value, so the SSP invariant holds from the start).
fn solve_transport(
    g: &Graph,
    supplies: &[(usize, Rational)],
    demands: &[(usize, Rational)],
) -> Result<TransportPlan, TransportError> {
    let s = supplies.len();
    let t = demands.len();
    debug_assert!(s > 0 && t > 0);
    debug_assert_eq!(
        supplies.iter().map(|(_, m)| m.clone()).sum::<Rational>(),
        demands.iter().map(|(_, m)| m.clone()).sum::<Rational>(),
    );

    // integer hop costs from each source atom
    let mut cost = vec![vec![0u32; t]; s];
    for (i, &(sv, _)) in supplies.iter().enumerate() {
        let row = g.bfs_row(sv);
        for (j, &(tv, _)) in demands.iter().enumerate() {
            cost[i][j] = row
                .get(tv)
                .ok_or(TransportError::Unreachable { a: sv, b: tv })?;
        }
    }

    let mut rem_a: Vec<Rational> = supplies.iter().map(|(_, m)| m.clone()).collect();
    let mut rem_b: Vec<Rational> = demands.iter().map(|(_, m)| m.clone()).collect();
    let mut flow = vec![vec![Rational::zero(); t]; s];

    // warm start: keep shared mass in place
    let sink_index: BTreeMap<usize, usize> =
        demands.iter().enumerate().map(|(j, &(v, _))| (v, j)).collect();
    for (i, &(sv, _)) in supplies.iter().enumerate() {
        if let Some(&j) = sink_index.get(&sv) {
            let keep = rem_a[i].clone().min(rem_b[j].clone());
            if keep.is_positive() {
                flow[i][j] = keep.clone();
                rem_a[i] -= keep.clone();
                rem_b[j] -= keep;
            }
        }
    }

    let nodes = s + t;
    let mut pot = vec![0i64; nodes];
    let mut guard = 0usize;
    while rem_a.iter().any(|m| m.is_positive()) {
        guard += 1;
        assert!(guard <= 4 * nodes * nodes + 16, "SSP failed to terminate");

        // Dijkstra over reduced costs (O(V^2); supports are small)
        let mut dist: Vec<Option<i64>> = vec![None; nodes];
        let mut parent: Vec<usize> = vec![usize::MAX; nodes];
        let mut done = vec![false; nodes];
        for (i, m) in rem_a.iter().enumerate() {
            if m.is_positive() {
                dist[i] = Some(0);
            }
        }
        loop {
            let mut pick = None;
            for v in 0..nodes {
                if !done[v] {
                    if let Some(dv) = dist[v] {
                        if pick.map_or(true, |(du, _)| dv < du) {
                            pick = Some((dv, v));
                        }
                    }
                }
            }
            let Some((dv, v)) = pick else { break };
            done[v] = true;
            if v < s {
                for j in 0..t {
                    let rc = cost[v][j] as i64 + pot[v] - pot[s + j];
                    debug_assert!(rc >= 0, "reduced cost invariant");
                    let nd = dv + rc;
                    if dist[s + j].map_or(true, |old| nd < old) && !done[s + j] {
                        dist[s + j] = Some(nd);
                        parent[s + j] = v;
                    }
                }
            } else {
                let j = v - s;
                for i in 0..s {
                    if flow[i][j].is_positive() {
                        let rc = -(cost[i][j] as i64) + pot[v] - pot[i];
                        debug_assert!(rc >= 0, "reduced cost invariant");
                        let nd = dv + rc;
                        if dist[i].map_or(true, |old| nd < old) && !done[i] {
                            dist[i] = Some(nd);
                            parent[i] = v;
                        }
                    }
                }
            }
        }

        let target = (0..t)
            .filter(|&j| rem_b[j].is_positive() && dist[s + j].is_some())
            .min_by_key(|&j| (dist[s + j].unwrap(), j))
            .expect("balanced problem always offers an augmenting path");
        let dt = dist[s + target].unwrap();
        for v in 0..nodes {
            pot[v] += dist[v].map_or(dt, |dv| dv.min(dt));
        }

        // walk back to the starting source, collecting the path
        let mut path = Vec::new(); // (source, sink, forward?)
        let mut v = s + target;
        while parent[v] != usize::MAX {
            let u = parent[v];
            if u < s {
                path.push((u, v - s, true));
            } else {
                path.push((v, u - s, false));
            }
            v = u;
        }
        let start = v;
        debug_assert!(start < s && rem_a[start].is_positive());

        let mut amount = rem_a[start].clone().min(rem_b[target].clone());
        for &(i, j, forward) in &path {
            if !forward {
                amount = amount.min(flow[i][j].clone());
            }
        }
        debug_assert!(amount.is_positive());
        for &(i, j, forward) in &path {
            if forward {
                flow[i][j] += amount.clone();
            } else {
                flow[i][j] -= amount.clone();
            }
        }
        rem_a[start] -= amount.clone();
        rem_b[target] -= amount;
    }

    let mut entries = BTreeMap::new();
    let mut total = Rational::zero();
    for (i, &(sv, _)) in supplies.iter().enumerate() {
        for (j, &(tv, _)) in demands.iter().enumerate() {
            if flow[i][j].is_positive() {
                total += int(cost[i][j] as i64) * flow[i][j].clone();
                entries.insert((sv, tv), flow[i][j].clone());
            }
        }
    }
    let source_potential = supplies
        .iter()
        .enumerate()
        .map(|(i, &(v, _))| (v, -pot[i]))
        .collect();
    let target_potential = demands
        .iter()
        .enumerate()
        .map(|(j, &(v, _))| (v, pot[s + j]))
        .collect();
    Ok(TransportPlan { entries, cost: total, source_potential, target_potential })
}

/// p-Ollivier curvature `1 - W1(mu_x^p, mu_y^p) / d(x,y)` for distinct
/// vertices in one component.
pub fn kappa_p(g: &Graph, x: usize, y: usize, p: &Rational) -> Result<Rational, TransportError> {
    if x == y {
        return Err(TransportError::SameVertex { v: x });
    }
    let dxy = g
        .bfs_row(x)
        .get(y)
        .ok_or(TransportError::Unreachable { a: x, b: y })?;
    let mx = measure_mu(g, x, p)?;
    let my = measure_mu(g, y, p)?;
    let (w, _) = wasserstein(g, &mx, &my)?;
    Ok(int(1) - w / int(dxy as i64))
}

/// The two idleness sample points `(p, kappa_p)` backing a curvature value;
/// both chords through `(1, 0)` have slope `kappa`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvatureCertificate {
    pub low: (Rational, Rational),
    pub high: (Rational, Rational),
}

impl CurvatureCertificate {
    /// Slopes of both sample chords through (1, 0); equal by construction.
    pub fn slopes(&self) -> (Rational, Rational) {
        let s = |(p, k): &(Rational, Rational)| k.clone() / (int(1) - p.clone());
        (s(&self.low), s(&self.high))
    }
}

/// Lin–Lu–Yau curvature of the edge `xy`, with its two-point certificate.
pub fn lly_curvature(
    g: &Graph,
    x: usize,
    y: usize,
) -> Result<(Rational, CurvatureCertificate), TransportError> {
    if !g.has_edge(x, y) {
        return Err(TransportError::NotAnEdge { x, y });
    }
    let l = g.degree(x).lcm(&g.degree(y)) as i64;
    let p_low = rat(l, l + 1);
    let p_high = rat(2 * l + 1, 2 * l + 2);
    let k_low = kappa_p(g, x, y, &p_low)?;
    let k_high = kappa_p(g, x, y, &p_high)?;
    let slope_low = k_low.clone() / (int(1) - p_low.clone());
    let slope_high = k_high.clone() / (int(1) - p_high.clone());
    if slope_low != slope_high {
        return Err(TransportError::CertificateMismatch { x, y });
    }
    Ok((
        slope_low,
        CurvatureCertificate { low: (p_low, k_low), high: (p_high, k_high) },
    ))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCurvature {
    pub x: usize,
    pub y: usize,
    pub kappa: Rational,
    pub certificate: CurvatureCertificate,
}

/// Exact curvature of every edge plus the extremes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvatureReport {
    /// One entry per edge `(x, y)` with `x < y`, in lexicographic order.
    pub edges: Vec<EdgeCurvature>,
    pub kappa_min: Rational,
    pub kappa_max: Rational,
}

impl CurvatureReport {
    /// Assemble a report from per-edge values (used by parallel drivers;
    /// callers must supply every edge exactly once).
    pub fn from_edge_values(mut edges: Vec<EdgeCurvature>) -> Result<Self, TransportError> {
        if edges.is_empty() {
            return Err(TransportError::NoEdges);
        }
        edges.sort_by_key(|e| (e.x, e.y));
        let kappa_min = edges.iter().map(|e| e.kappa.clone()).min().unwrap();
        let kappa_max = edges.iter().map(|e| e.kappa.clone()).max().unwrap();
        Ok(CurvatureReport { edges, kappa_min, kappa_max })
    }

    pub fn constant_value(&self) -> Option<&Rational> {
        (self.kappa_min == self.kappa_max).then_some(&self.kappa_min)
    }
}

/// Curvature of every edge of a connected graph.
pub fn curvature_report(g: &Graph) -> Result<CurvatureReport, TransportError> {
    if let Some((a, b)) = g.disconnected_witness() {
        return Err(TransportError::Disconnected { a, b });
    }
    if g.edge_count() == 0 {
        return Err(TransportError::NoEdges);
    }
    let mut edges = Vec::with_capacity(g.edge_count());
    for (x, y) in g.edges() {
        let (kappa, certificate) = lly_curvature(g, x, y)?;
        edges.push(EdgeCurvature { x, y, kappa, certificate });
    }
    CurvatureReport::from_edge_values(edges)
}

/// Mechanically check that a simple plan (shared mass kept in place,
/// `pi(x,y) = p - (1-p)/deg(y)`) achieves the unrestricted optimum for the
/// edge `xy` at idleness `p`. Requires `deg(x) >= deg(y)` and
/// `p >= 1/(1 + deg(y))`.
pub fn verify_simple_plan(
    g: &Graph,
    x: usize,
    y: usize,
    p: &Rational,
) -> Result<bool, TransportError> {
    if !g.has_edge(x, y) {
        return Err(TransportError::NotAnEdge { x, y });
    }
    let (dx, dy) = (g.degree(x), g.degree(y));
    if dx < dy {
        return Err(TransportError::SimplePlanPrereq { reason: "need deg(x) >= deg(y)" });
    }
    if p > &int(1) || p < &rat(1, 1 + dy as i64) {
        return Err(TransportError::SimplePlanPrereq { reason: "need p in [1/(1+deg y), 1]" });
    }
    let mx = measure_mu(g, x, p)?;
    let my = measure_mu(g, y, p)?;
    let (full, _) = wasserstein(g, &mx, &my)?;

    // fixed part of the simple plan
    let fxy = p.clone() - (int(1) - p.clone()) / int(dy as i64);
    let mut supplies = Vec::new();
    let mut demands = Vec::new();
    for (v, m) in mx.iter() {
        let mut remaining = m.clone() - my.mass(v); // minus kept mass min(mx, my)
        if my.mass(v) > *m {
            remaining = Rational::zero();
        }
        if v == x {
            remaining -= fxy.clone();
        }
        debug_assert!(!remaining.is_negative(), "simple plan overcommits row {v}");
        if remaining.is_positive() {
            supplies.push((v, remaining));
        }
    }
    for (v, m) in my.iter() {
        let mut remaining = m.clone() - mx.mass(v);
        if mx.mass(v) > *m {
            remaining = Rational::zero();
        }
        if v == y {
            remaining -= fxy.clone();
        }
        debug_assert!(!remaining.is_negative(), "simple plan overcommits column {v}");
        if remaining.is_positive() {
            demands.push((v, remaining));
        }
    }
    let residual_cost = if supplies.is_empty() {
        debug_assert!(demands.is_empty());
        Rational::zero()
    } else {
        solve_transport(g, &supplies, &demands)?.cost
    };
    // the fixed x->y unit travels distance 1; kept mass costs nothing
    let restricted = fxy + residual_cost;
    Ok(restricted == full)
}
