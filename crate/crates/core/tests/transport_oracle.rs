//! Transport solver vs the independent dual-enumeration oracle, plus
//! exact-arithmetic property suites for plans and curvature.

use lly_core::families;
use lly_core::rat::{int, rat, Rational};
use lly_core::transport::{
    curvature_report, kappa_p, lly_curvature, measure_mu, verify_simple_plan, wasserstein,
    ProbMeasure,
};
use lly_core::Graph;
use lly_testkit::{connected_graphs, wasserstein_dual_oracle};
use num_traits::Signed;

fn as_pairs(m: &ProbMeasure) -> Vec<(usize, Rational)> {
    m.iter().map(|(v, r)| (v, r.clone())).collect()
}

/// Deterministic low-state PRNG so the sampled cases are reproducible.
struct Lcg(u64);

impl Lcg {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0 >> 11
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

/// A random probability measure supported on up to `k` vertices with small
/// denominators.
fn random_measure(g: &Graph, rng: &mut Lcg, k: usize) -> ProbMeasure {
    let n = g.vertex_count();
    let mut weights: Vec<(usize, i64)> = Vec::new();
    for _ in 0..k {
        let v = rng.below(n);
        let w = 1 + rng.below(6) as i64;
        weights.push((v, w));
    }
    let total: i64 = weights.iter().map(|(_, w)| w).sum();
    ProbMeasure::from_entries(weights.into_iter().map(|(v, w)| (v, rat(w, total)))).unwrap()
}

#[test]
fn solver_matches_oracle_on_all_connected_graphs_up_to_5() {
    let mut checked = 0usize;
    for n in 2..=5 {
        for g in connected_graphs(n) {
            for (x, y) in g.edges() {
                for p in [rat(1, 2), rat(3, 4)] {
                    let mx = measure_mu(&g, x, &p).unwrap();
                    let my = measure_mu(&g, y, &p).unwrap();
                    let (w, plan) = wasserstein(&g, &mx, &my).unwrap();
                    let oracle = wasserstein_dual_oracle(&g, &as_pairs(&mx), &as_pairs(&my));
                    assert_eq!(w, oracle, "graph {g:?} edge ({x},{y}) p={p}");
                    plan.audit(&g, &mx, &my).unwrap();
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 1000, "exhaustive sweep looks too small: {checked}");
}

#[test]
fn solver_matches_oracle_on_random_measures() {
    let g = families::petersen();
    let mut rng = Lcg(7);
    for _ in 0..150 {
        let mu1 = random_measure(&g, &mut rng, 4);
        let mu2 = random_measure(&g, &mut rng, 4);
        let (w, plan) = wasserstein(&g, &mu1, &mu2).unwrap();
        assert_eq!(w, wasserstein_dual_oracle(&g, &as_pairs(&mu1), &as_pairs(&mu2)));
        plan.audit(&g, &mu1, &mu2).unwrap();
    }
}

#[test]
fn w1_is_a_metric_on_random_triples() {
    let g = families::dodecahedron();
    let mut rng = Lcg(99);
    for _ in 0..120 {
        let a = random_measure(&g, &mut rng, 3);
        let b = random_measure(&g, &mut rng, 3);
        let c = random_measure(&g, &mut rng, 3);
        let ab = wasserstein(&g, &a, &b).unwrap().0;
        let ba = wasserstein(&g, &b, &a).unwrap().0;
        let bc = wasserstein(&g, &b, &c).unwrap().0;
        let ac = wasserstein(&g, &a, &c).unwrap().0;
        assert_eq!(ab, ba, "symmetry");
        assert!(ac <= ab.clone() + bc.clone(), "triangle inequality");
        assert!(!ab.is_negative());
    }
}

#[test]
fn kappa_p_is_concave_in_p() {
    let graphs = [
        families::petersen(),
        families::icosahedron(),
        families::cycle(6).unwrap(),
        families::shrikhande(),
    ];
    let mut rng = Lcg(2024);
    for g in &graphs {
        let edges: Vec<_> = g.edges().collect();
        for _ in 0..25 {
            let (x, y) = edges[rng.below(edges.len())];
            // three sorted idleness samples with denominator <= 24
            let mut ps: Vec<Rational> = (0..3)
                .map(|_| {
                    let den = 2 + rng.below(23) as i64;
                    rat(rng.below(den as usize + 1) as i64, den)
                })
                .collect();
            ps.sort();
            ps.dedup();
            if ps.len() < 3 {
                continue;
            }
            let k: Vec<Rational> = ps.iter().map(|p| kappa_p(g, x, y, p).unwrap()).collect();
            // chord from (p0,k0) to (p2,k2) evaluated at p1 must not exceed k1
            let lhs = k[1].clone() * (ps[2].clone() - ps[0].clone());
            let rhs = k[0].clone() * (ps[2].clone() - ps[1].clone())
                + k[2].clone() * (ps[1].clone() - ps[0].clone());
            assert!(lhs >= rhs, "concavity failed on {g:?} edge ({x},{y}) at {ps:?}");
        }
    }
}

#[test]
fn certificate_slope_matches_dense_idleness_sweep() {
    let graphs = [families::petersen(), families::cycle(5).unwrap(), families::icosahedron()];
    for g in &graphs {
        for (x, y) in g.edges().take(4) {
            let (kappa, cert) = lly_curvature(g, x, y).unwrap();
            let (s1, s2) = cert.slopes();
            assert_eq!(s1, kappa);
            assert_eq!(s2, kappa);
            // a denser sweep toward p = 1 keeps producing the same slope
            for den in [100i64, 400, 1000] {
                let p = rat(den - 1, den);
                let k = kappa_p(g, x, y, &p).unwrap();
                assert_eq!(k / (int(1) - p), kappa);
            }
        }
    }
}

#[test]
fn simple_plan_optimality_on_applicable_samples() {
    let graphs = [
        families::petersen(),
        families::icosahedron(),
        families::hamming(2, 3).unwrap(),
        families::heawood(),
    ];
    let mut rng = Lcg(5);
    for g in &graphs {
        let edges: Vec<_> = g.edges().collect();
        for _ in 0..30 {
            let (a, b) = edges[rng.below(edges.len())];
            let (x, y) = if g.degree(a) >= g.degree(b) { (a, b) } else { (b, a) };
            let dy = g.degree(y) as i64;
            // p uniform in [1/(1+dy), 1] with denominator (1+dy)*4
            let den = (1 + dy) * 4;
            let lo = 4; // 1/(1+dy) scaled
            let num = lo + rng.below((den - lo + 1) as usize) as i64;
            let p = rat(num, den);
            assert_eq!(verify_simple_plan(g, x, y, &p), Ok(true), "p={p} on {g:?}");
        }
    }
}

#[test]
fn curvature_bound_from_common_neighbors_on_regular_graphs() {
    // kappa(x,y) <= (2 + |N_xy|) / d on every edge of a d-regular graph
    for g in [
        families::petersen(),
        families::icosahedron(),
        families::shrikhande(),
        families::heawood(),
        families::hamming(2, 4).unwrap(),
    ] {
        let d = g.is_regular().unwrap() as i64;
        let report = curvature_report(&g).unwrap();
        for e in &report.edges {
            let split = g.neighborhood_split(e.x, e.y).unwrap();
            let bound = rat(2 + split.common.len() as i64, d);
            assert!(e.kappa <= bound, "edge ({},{})", e.x, e.y);
        }
    }
}
