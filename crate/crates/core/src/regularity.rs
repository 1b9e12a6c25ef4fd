//! Regularity structure: amply regular parameters, intersection arrays,
//! Terwilliger checks, and the closed-neighborhood quotient.
//!
//! Every rejection carries a concrete witness (a vertex or vertex pair) so
//! that failures in table reproduction are debuggable rather than boolean.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::graph::Graph;

/// Parameters (n, d, alpha, beta) of an amply regular graph: `d`-regular,
/// connected, non-complete; adjacent pairs share `alpha` neighbors, pairs at
/// distance two share `beta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AmplyParams {
    pub n: usize,
    pub d: usize,
    pub alpha: usize,
    pub beta: usize,
}

impl fmt::Display for AmplyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.n, self.d, self.alpha, self.beta)
    }
}

/// Why a graph is not amply regular, with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotAmply {
    Disconnected { a: usize, b: usize },
    Complete,
    /// No pair at distance two exists (covers the complete case too).
    Irregular { u: usize, du: usize, v: usize, dv: usize },
    AdjacentMismatch { x: usize, y: usize, got: usize, expected: usize },
    DistanceTwoMismatch { x: usize, y: usize, got: usize, expected: usize },
}

impl fmt::Display for NotAmply {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotAmply::Disconnected { a, b } => write!(f, "disconnected ({a} vs {b})"),
            NotAmply::Complete => write!(f, "complete graph"),
            NotAmply::Irregular { u, du, v, dv } => {
                write!(f, "irregular: deg({u})={du}, deg({v})={dv}")
            }
            NotAmply::AdjacentMismatch { x, y, got, expected } => write!(
                f,
                "adjacent pair ({x},{y}) has {got} common neighbors, expected {expected}"
            ),
            NotAmply::DistanceTwoMismatch { x, y, got, expected } => write!(
                f,
                "distance-2 pair ({x},{y}) has {got} common neighbors, expected {expected}"
            ),
        }
    }
}

impl core::error::Error for NotAmply {}

/// `d` if all degrees equal, `None` on irregular or empty input.
pub fn regular_degree(g: &Graph) -> Option<usize> {
    g.is_regular()
}

/// Number of common neighbors of `u` and `v` (sorted-list intersection).
pub fn common_neighbor_count(g: &Graph, u: usize, v: usize) -> usize {
    common_neighbors(g, u, v).len()
}

pub fn common_neighbors(g: &Graph, u: usize, v: usize) -> Vec<usize> {
    let (a, b) = (g.neighbors(u), g.neighbors(v));
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Certify (n, d, alpha, beta) or reject with a witness. Requires a
/// connected, non-complete input with at least one distance-2 pair.
pub fn amply_params(g: &Graph) -> Result<AmplyParams, NotAmply> {
    if let Some((a, b)) = g.disconnected_witness() {
        return Err(NotAmply::Disconnected { a, b });
    }
    let n = g.vertex_count();
    if g.is_complete() || n < 2 {
        return Err(NotAmply::Complete);
    }
    let d = g.degree(0);
    for v in g.vertices() {
        if g.degree(v) != d {
            return Err(NotAmply::Irregular { u: 0, du: d, v, dv: g.degree(v) });
        }
    }
    let mut alpha: Option<(usize, (usize, usize))> = None;
    for (x, y) in g.edges() {
        let c = common_neighbor_count(g, x, y);
        match alpha {
            None => alpha = Some((c, (x, y))),
            Some((a, _)) if a != c => {
                return Err(NotAmply::AdjacentMismatch { x, y, got: c, expected: a })
            }
            _ => {}
        }
    }
    let mut beta: Option<usize> = None;
    for x in g.vertices() {
        let row = g.bfs_row(x);
        for y in x + 1..n {
            if row.get(y) == Some(2) {
                let c = common_neighbor_count(g, x, y);
                match beta {
                    None => beta = Some(c),
                    Some(b) if b != c => {
                        return Err(NotAmply::DistanceTwoMismatch { x, y, got: c, expected: b })
                    }
                    _ => {}
                }
            }
        }
    }
    // connected + non-complete guarantees a distance-2 pair and an edge
    let alpha = alpha.expect("non-complete connected graph has an edge").0;
    let beta = beta.expect("non-complete connected graph has a distance-2 pair");
    Ok(AmplyParams { n, d, alpha, beta })
}

/// Intersection array {b_0, ..., b_{D-1}; c_1, ..., c_D} of a
/// distance-regular graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionArray {
    pub b: Vec<usize>,
    pub c: Vec<usize>,
}

impl IntersectionArray {
    pub fn diameter(&self) -> usize {
        self.c.len()
    }

    pub fn degree(&self) -> usize {
        self.b[0]
    }

    /// b_i with the convention b_D = 0.
    pub fn b_at(&self, i: usize) -> usize {
        if i < self.b.len() {
            self.b[i]
        } else {
            0
        }
    }

    /// c_i with the convention c_0 = 0 (c_1 is `self.c[0]`).
    pub fn c_at(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.c[i - 1]
        }
    }

    /// a_i = b_0 - b_i - c_i.
    pub fn a_at(&self, i: usize) -> usize {
        self.degree() - self.b_at(i) - self.c_at(i)
    }

    /// alpha = b_0 - b_1 - 1, defined for diameter >= 2.
    pub fn alpha(&self) -> Option<usize> {
        (self.diameter() >= 2).then(|| self.degree() - self.b[1] - 1)
    }

    /// beta = c_2, defined for diameter >= 2.
    pub fn beta(&self) -> Option<usize> {
        (self.diameter() >= 2).then(|| self.c[1])
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[usize]| {
            let mut s = String::new();
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                s.push_str(&format!("{x}"));
            }
            s
        };
        write!(f, "{{{}; {}}}", join(&self.b), join(&self.c))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotDistanceRegular {
    Disconnected { a: usize, b: usize },
    /// Distance-partition count from (base, vertex) disagrees with the value
    /// established by an earlier pair at the same distance.
    CountMismatch {
        base: usize,
        vertex: usize,
        distance: usize,
        kind: char, // 'b' or 'c'
        got: usize,
        expected: usize,
    },
}

impl fmt::Display for NotDistanceRegular {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotDistanceRegular::Disconnected { a, b } => write!(f, "disconnected ({a} vs {b})"),
            NotDistanceRegular::CountMismatch { base, vertex, distance, kind, got, expected } => {
                write!(
                    f,
                    "{kind}_{distance} from base {base} at vertex {vertex} is {got}, expected {expected}"
                )
            }
        }
    }
}

impl core::error::Error for NotDistanceRegular {}

/// Compute the intersection array, verifying the distance-partition counts
/// for every base vertex, or reject with the first mismatch.
pub fn intersection_array(g: &Graph) -> Result<IntersectionArray, NotDistanceRegular> {
    if let Some((a, b)) = g.disconnected_witness() {
        return Err(NotDistanceRegular::Disconnected { a, b });
    }
    let diam = g.diameter().expect("connected") as usize;
    let mut b = vec![None; diam + 1];
    let mut c = vec![None; diam + 1];
    for x in g.vertices() {
        let row = g.bfs_row(x);
        for y in g.vertices() {
            let i = row.get(y).expect("connected") as usize;
            let mut closer = 0usize;
            let mut farther = 0usize;
            for &z in g.neighbors(y) {
                let dz = row.get(z).expect("connected") as usize;
                if dz + 1 == i {
                    closer += 1;
                } else if dz == i + 1 {
                    farther += 1;
                }
            }
            for (store, kind, got) in [(&mut c, 'c', closer), (&mut b, 'b', farther)] {
                match store[i] {
                    None => store[i] = Some(got),
                    Some(expected) if expected != got => {
                        return Err(NotDistanceRegular::CountMismatch {
                            base: x,
                            vertex: y,
                            distance: i,
                            kind,
                            got,
                            expected,
                        });
                    }
                    _ => {}
                }
            }
        }
    }
    let b: Vec<usize> = (0..diam).map(|i| b[i].unwrap()).collect();
    let c: Vec<usize> = (1..=diam).map(|i| c[i].unwrap()).collect();
    debug_assert!(c.is_empty() || c[0] == 1);
    Ok(IntersectionArray { b, c })
}

/// Preconditions shared by the Terwilliger and reduced-parameter checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RegularityError {
    Disconnected { a: usize, b: usize },
    Complete,
}

impl fmt::Display for RegularityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegularityError::Disconnected { a, b } => write!(f, "disconnected ({a} vs {b})"),
            RegularityError::Complete => write!(f, "complete graph"),
        }
    }
}

impl core::error::Error for RegularityError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TerwilligerWitness {
    /// Common neighbors `u`, `v` of the distance-2 pair (x, y) are not adjacent.
    MissingEdge { x: usize, y: usize, u: usize, v: usize },
    SizeMismatch { x: usize, y: usize, got: usize, expected: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TerwilligerVerdict {
    /// Every distance-2 pair's common neighborhood is a clique of this size.
    Yes { beta: usize },
    No(TerwilligerWitness),
}

/// Decide the Terwilliger property. Requires a connected, non-complete graph.
pub fn is_terwilliger(g: &Graph) -> Result<TerwilligerVerdict, RegularityError> {
    if let Some((a, b)) = g.disconnected_witness() {
        return Err(RegularityError::Disconnected { a, b });
    }
    if g.is_complete() || g.vertex_count() < 2 {
        return Err(RegularityError::Complete);
    }
    let mut beta: Option<usize> = None;
    for x in g.vertices() {
        let row = g.bfs_row(x);
        for y in x + 1..g.vertex_count() {
            if row.get(y) != Some(2) {
                continue;
            }
            let common = common_neighbors(g, x, y);
            match beta {
                None => beta = Some(common.len()),
                Some(b) if b != common.len() => {
                    return Ok(TerwilligerVerdict::No(TerwilligerWitness::SizeMismatch {
                        x,
                        y,
                        got: common.len(),
                        expected: b,
                    }))
                }
                _ => {}
            }
            for (i, &u) in common.iter().enumerate() {
                for &v in &common[i + 1..] {
                    if !g.has_edge(u, v) {
                        return Ok(TerwilligerVerdict::No(TerwilligerWitness::MissingEdge {
                            x,
                            y,
                            u,
                            v,
                        }));
                    }
                }
            }
        }
    }
    let beta = beta.expect("non-complete connected graph has a distance-2 pair");
    Ok(TerwilligerVerdict::Yes { beta })
}

/// Quotient of a graph by the equivalence x ~ y iff the closed neighborhoods
/// agree. Classes are listed by smallest member.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub graph: Graph,
    pub classes: Vec<Vec<usize>>,
}

pub fn reduce_quotient(g: &Graph) -> Quotient {
    let n = g.vertex_count();
    let mut class_of = vec![usize::MAX; n];
    let mut key_to_class: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        let mut closed: Vec<usize> = g.neighbors(v).to_vec();
        closed.push(v);
        closed.sort_unstable();
        let next = classes.len();
        let id = *key_to_class.entry(closed).or_insert(next);
        if id == classes.len() {
            classes.push(Vec::new());
        }
        classes[id].push(v);
        class_of[v] = id;
    }
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        if class_of[u] != class_of[v] {
            edges.push((class_of[u], class_of[v]));
        }
    }
    Quotient {
        graph: Graph::build(classes.len(), &edges).unwrap(),
        classes,
    }
}

/// Parameters of the reduced local graph of an amply regular Terwilliger
/// graph with beta > 1, after certifying integrality and the divisibility
/// and size side conditions. All values are exact integers once certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReducedLocalParams {
    /// Common size of the closed-neighborhood classes of the local graph.
    pub s: usize,
    pub n_bar: i64,
    pub d_bar: i64,
    pub alpha_bar: i64,
    pub beta_bar: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReducedLocalError {
    NotAmply(NotAmply),
    NotTerwilliger,
    BetaIsOne,
    UnequalClassSizes { a: usize, b: usize },
    NonIntegral { name: &'static str },
    ConditionFailed { name: &'static str },
    /// The reduced local graph's measured parameters disagree with the
    /// formula values.
    LocalParamsMismatch { formula: (i64, i64, i64, i64) },
}

impl fmt::Display for ReducedLocalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReducedLocalError::NotAmply(w) => write!(f, "not amply regular: {w}"),
            ReducedLocalError::NotTerwilliger => write!(f, "not a Terwilliger graph"),
            ReducedLocalError::BetaIsOne => write!(f, "beta = 1 leaves no reduced structure"),
            ReducedLocalError::UnequalClassSizes { a, b } => {
                write!(f, "class sizes differ: {a} vs {b}")
            }
            ReducedLocalError::NonIntegral { name } => write!(f, "{name} is not an integer"),
            ReducedLocalError::ConditionFailed { name } => write!(f, "condition failed: {name}"),
            ReducedLocalError::LocalParamsMismatch { formula } => write!(
                f,
                "reduced local graph does not realize ({},{},{},{})",
                formula.0, formula.1, formula.2, formula.3
            ),
        }
    }
}

impl core::error::Error for ReducedLocalError {}

/// Reduce the local graph at `gamma` and evaluate the reduced parameter
/// formulas, checking integrality, the side conditions, and that the reduced
/// graph actually realizes the computed parameters.
pub fn reduced_local_params(g: &Graph, gamma: usize) -> Result<ReducedLocalParams, ReducedLocalError> {
    let ap = amply_params(g).map_err(ReducedLocalError::NotAmply)?;
    match is_terwilliger(g) {
        Ok(TerwilligerVerdict::Yes { .. }) => {}
        Ok(TerwilligerVerdict::No(_)) => return Err(ReducedLocalError::NotTerwilliger),
        Err(RegularityError::Complete) => return Err(ReducedLocalError::NotAmply(NotAmply::Complete)),
        Err(RegularityError::Disconnected { a, b }) => {
            return Err(ReducedLocalError::NotAmply(NotAmply::Disconnected { a, b }))
        }
    }
    if ap.beta <= 1 {
        return Err(ReducedLocalError::BetaIsOne);
    }
    let local = g.local_graph(gamma);
    let q = reduce_quotient(&local);
    let s = q.classes[0].len();
    for class in &q.classes {
        if class.len() != s {
            return Err(ReducedLocalError::UnequalClassSizes { a: s, b: class.len() });
        }
    }
    let (d, alpha, beta) = (ap.d as i64, ap.alpha as i64, ap.beta as i64);
    let si = s as i64;
    let exact = |num: i64, den: i64, name: &'static str| {
        if den != 0 && num % den == 0 {
            Ok(num / den)
        } else {
            Err(ReducedLocalError::NonIntegral { name })
        }
    };
    let n_bar = exact(d, si, "d/s")?;
    let d_bar = exact(alpha - si + 1, si, "(alpha-s+1)/s")?;
    let beta_bar = exact(beta - 1, si, "(beta-1)/s")?;
    let alpha_bar = exact(
        (alpha - si + 1) * (alpha - 2 * si + 1) - (beta - 1) * (d - alpha - 1),
        si * (alpha - si + 1),
        "alpha_bar",
    )?;
    // side conditions
    if !(beta == si + 1 || beta >= si * si + si + 1) {
        return Err(ReducedLocalError::ConditionFailed { name: "beta = s+1 or beta >= s^2+s+1" });
    }
    let g3 = d.gcd(&(alpha + 1)).gcd(&(beta - 1));
    if g3 % si != 0 {
        return Err(ReducedLocalError::ConditionFailed { name: "s | gcd(d, alpha+1, beta-1)" });
    }
    if (alpha - si + 1) == 0 || ((beta - 1) * (d - si)) % (alpha - si + 1) != 0 {
        return Err(ReducedLocalError::ConditionFailed { name: "(alpha-s+1) | (beta-1)(d-s)" });
    }
    if si > alpha_bar + 1 {
        return Err(ReducedLocalError::ConditionFailed { name: "s <= alpha_bar + 1" });
    }
    // the reduced local graph must realize the parameters
    let formula = (n_bar, d_bar, alpha_bar, beta_bar);
    let ok = match amply_params(&q.graph) {
        Ok(rp) => {
            rp.n as i64 == n_bar
                && rp.d as i64 == d_bar
                && rp.alpha as i64 == alpha_bar
                && rp.beta as i64 == beta_bar
        }
        Err(_) => false,
    };
    if !ok {
        return Err(ReducedLocalError::LocalParamsMismatch { formula });
    }
    Ok(ReducedLocalParams { s, n_bar, d_bar, alpha_bar, beta_bar })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn regular_degree_cases() {
        assert_eq!(regular_degree(&families::petersen()), Some(3));
        let p3 = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(regular_degree(&p3), None);
        assert_eq!(regular_degree(&families::gosset()), Some(27));
    }

    #[test]
    fn amply_named_graphs() {
        let lp = families::petersen().line_graph().unwrap();
        assert_eq!(
            amply_params(&lp),
            Ok(AmplyParams { n: 15, d: 4, alpha: 1, beta: 1 })
        );
        assert_eq!(
            amply_params(&families::icosahedron()),
            Ok(AmplyParams { n: 12, d: 5, alpha: 2, beta: 2 })
        );
        assert_eq!(
            amply_params(&families::petersen()),
            Ok(AmplyParams { n: 10, d: 3, alpha: 0, beta: 1 })
        );
        assert_eq!(
            amply_params(&families::complete(4).unwrap()),
            Err(NotAmply::Complete)
        );
        let path = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(amply_params(&path), Err(NotAmply::Irregular { .. })));
    }

    #[test]
    fn cocktail_party_params() {
        for n in 2..6 {
            let g = families::cocktail_party(n).unwrap();
            assert_eq!(
                amply_params(&g),
                Ok(AmplyParams { n: 2 * n, d: 2 * n - 2, alpha: 2 * n - 4, beta: 2 * n - 2 })
            );
        }
    }

    #[test]
    fn intersection_arrays() {
        let ico = intersection_array(&families::icosahedron()).unwrap();
        assert_eq!(ico.b, vec![5, 2, 1]);
        assert_eq!(ico.c, vec![1, 2, 5]);
        assert_eq!(format!("{ico}"), "{5,2,1; 1,2,5}");
        assert_eq!(ico.alpha(), Some(2));
        assert_eq!(ico.beta(), Some(2));

        let lp = intersection_array(&families::petersen().line_graph().unwrap()).unwrap();
        assert_eq!(lp.b, vec![4, 2, 1]);
        assert_eq!(lp.c, vec![1, 1, 4]);

        let kn = intersection_array(&families::complete(5).unwrap()).unwrap();
        assert_eq!(kn.b, vec![4]);
        assert_eq!(kn.c, vec![1]);
    }

    #[test]
    fn line_graph_of_dodecahedron_not_distance_regular() {
        let l = families::dodecahedron().line_graph().unwrap();
        assert!(matches!(
            intersection_array(&l),
            Err(NotDistanceRegular::CountMismatch { .. })
        ));
    }

    #[test]
    fn terwilliger_verdicts() {
        assert_eq!(
            is_terwilliger(&families::petersen()),
            Ok(TerwilligerVerdict::Yes { beta: 1 })
        );
        assert_eq!(
            is_terwilliger(&families::icosahedron()),
            Ok(TerwilligerVerdict::Yes { beta: 2 })
        );
        // grid has an induced quadrangle
        assert!(matches!(
            is_terwilliger(&families::hamming(2, 3).unwrap()),
            Ok(TerwilligerVerdict::No(TerwilligerWitness::MissingEdge { .. }))
        ));
        assert_eq!(
            is_terwilliger(&families::complete(3).unwrap()),
            Err(RegularityError::Complete)
        );
    }

    #[test]
    fn quotient_cases() {
        let k4 = families::complete(4).unwrap();
        let q = reduce_quotient(&k4);
        assert_eq!(q.graph.vertex_count(), 1);
        assert_eq!(q.classes, vec![vec![0, 1, 2, 3]]);

        let ico = families::icosahedron();
        let q = reduce_quotient(&ico);
        assert_eq!(q.graph, ico);

        // two triangles sharing an edge: the shared edge's endpoints collapse
        let g = Graph::build(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
        let q = reduce_quotient(&g);
        assert_eq!(q.graph.vertex_count(), 3);
        assert!(q.classes.contains(&vec![0, 1]));
    }

    #[test]
    fn reduced_local_params_icosahedron() {
        let ico = families::icosahedron();
        for gamma in ico.vertices() {
            let rp = reduced_local_params(&ico, gamma).unwrap();
            assert_eq!(
                rp,
                ReducedLocalParams { s: 1, n_bar: 5, d_bar: 2, alpha_bar: 0, beta_bar: 1 }
            );
        }
    }

    #[test]
    fn reduced_local_params_preconditions() {
        assert_eq!(
            reduced_local_params(&families::petersen(), 0),
            Err(ReducedLocalError::BetaIsOne)
        );
        assert_eq!(
            reduced_local_params(&families::hamming(2, 3).unwrap(), 0),
            Err(ReducedLocalError::NotTerwilliger)
        );
    }
}
