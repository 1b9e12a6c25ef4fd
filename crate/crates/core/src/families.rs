//! Deterministic generators for the named graph families, plus Seidel
//! switching and the switching sets that turn the triangular graph T(8)
//! into the three Chang graphs.
//!
//! Every generator documents its canonical vertex labeling so downstream
//! tests are reproducible. All constructions are integer-only.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;

/// Named graph families exposed by the generator (and by the CLI).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Complete,
    Cycle,
    CocktailParty,
    Hamming,
    Johnson,
    DemiCube,
    Triangular,
    Petersen,
    Icosahedron,
    Shrikhande,
    Clebsch,
    Schlafli,
    Gosset,
    HoffmanSingleton,
    Doob,
    Dodecahedron,
    Heawood,
}

impl Family {
    pub const ALL: [Family; 17] = [
        Family::Complete,
        Family::Cycle,
        Family::CocktailParty,
        Family::Hamming,
        Family::Johnson,
        Family::DemiCube,
        Family::Triangular,
        Family::Petersen,
        Family::Icosahedron,
        Family::Shrikhande,
        Family::Clebsch,
        Family::Schlafli,
        Family::Gosset,
        Family::HoffmanSingleton,
        Family::Doob,
        Family::Dodecahedron,
        Family::Heawood,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::Cycle => "cycle",
            Family::CocktailParty => "cocktail_party",
            Family::Hamming => "hamming",
            Family::Johnson => "johnson",
            Family::DemiCube => "demi_cube",
            Family::Triangular => "triangular",
            Family::Petersen => "petersen",
            Family::Icosahedron => "icosahedron",
            Family::Shrikhande => "shrikhande",
            Family::Clebsch => "clebsch",
            Family::Schlafli => "schlafli",
            Family::Gosset => "gosset",
            Family::HoffmanSingleton => "hoffman_singleton",
            Family::Doob => "doob",
            Family::Dodecahedron => "dodecahedron",
            Family::Heawood => "heawood",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == name)
    }

    /// Number of integer parameters the family takes.
    pub fn arity(self) -> usize {
        match self {
            Family::Complete
            | Family::Cycle
            | Family::CocktailParty
            | Family::DemiCube
            | Family::Triangular => 1,
            Family::Hamming | Family::Johnson | Family::Doob => 2,
            _ => 0,
        }
    }
}

/// A family together with its parameters, e.g. `hamming 2 4`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyError {
    WrongArity {
        family: Family,
        expected: usize,
        got: usize,
    },
    OutOfRange {
        family: Family,
        reason: &'static str,
    },
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::WrongArity {
                family,
                expected,
                got,
            } => write!(
                f,
                "{} takes {expected} parameter(s), got {got}",
                family.name()
            ),
            FamilyError::OutOfRange { family, reason } => {
                write!(f, "{} parameter out of range: {reason}", family.name())
            }
        }
    }
}

impl core::error::Error for FamilyError {}

/// Keep generated graphs at a size the exact pipelines can handle.
const MAX_VERTICES: usize = 1 << 20;

fn range_err(family: Family, reason: &'static str) -> FamilyError {
    FamilyError::OutOfRange { family, reason }
}

/// Generate the graph a [`FamilySpec`] describes.
pub fn generate(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    let f = spec.family;
    let p = &spec.params;
    if p.len() != f.arity() {
        return Err(FamilyError::WrongArity {
            family: f,
            expected: f.arity(),
            got: p.len(),
        });
    }
    match f {
        Family::Complete => complete(p[0]).ok_or(range_err(f, "need n >= 1")),
        Family::Cycle => cycle(p[0]).ok_or(range_err(f, "need n >= 3")),
        Family::CocktailParty => cocktail_party(p[0]).ok_or(range_err(f, "need n >= 2")),
        Family::Hamming => hamming(p[0], p[1]).ok_or(range_err(f, "need d >= 1, n >= 2, n^d bounded")),
        Family::Johnson => johnson(p[0], p[1]).ok_or(range_err(f, "need 1 <= k <= n-1")),
        Family::DemiCube => demi_cube(p[0]).ok_or(range_err(f, "need 2 <= n <= 21")),
        Family::Triangular => triangular(p[0]).ok_or(range_err(f, "need n >= 4")),
        Family::Petersen => Ok(petersen()),
        Family::Icosahedron => Ok(icosahedron()),
        Family::Shrikhande => Ok(shrikhande()),
        Family::Clebsch => Ok(clebsch()),
        Family::Schlafli => Ok(schlafli()),
        Family::Gosset => Ok(gosset()),
        Family::HoffmanSingleton => Ok(hoffman_singleton()),
        Family::Doob => doob(p[0], p[1]).ok_or(range_err(f, "need n + m >= 1, 4^(n+2m) bounded")),
        Family::Dodecahedron => Ok(dodecahedron()),
        Family::Heawood => Ok(heawood()),
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// K_n for n >= 1.
pub fn complete(n: usize) -> Option<Graph> {
    if n < 1 || n > MAX_VERTICES {
        return None;
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Some(Graph::build(n, &edges).unwrap())
}

/// C_n for n >= 3.
pub fn cycle(n: usize) -> Option<Graph> {
    if n < 3 || n > MAX_VERTICES {
        return None;
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Some(Graph::build(n, &edges).unwrap())
}

/// CP(n) = K_{2n} minus the perfect matching {(0,1),(2,3),...}, n >= 2.
pub fn cocktail_party(n: usize) -> Option<Graph> {
    if n < 2 || 2 * n > MAX_VERTICES {
        return None;
    }
    let mut edges = Vec::new();
    for u in 0..2 * n {
        for v in u + 1..2 * n {
            if v != u ^ 1 {
                edges.push((u, v));
            }
        }
    }
    Some(Graph::build(2 * n, &edges).unwrap())
}

/// H(d,n): the d-fold Cartesian power of K_n. Vertex indices read the base-n
/// digit string most significant first: `(a_0,...,a_{d-1}) -> sum a_i n^(d-1-i)`.
pub fn hamming(d: usize, n: usize) -> Option<Graph> {
    if d < 1 || n < 2 {
        return None;
    }
    let size = n.checked_pow(u32::try_from(d).ok()?)?;
    if size > MAX_VERTICES {
        return None;
    }
    let kn = complete(n)?;
    let mut g = kn.clone();
    for _ in 1..d {
        g = g.cartesian_product(&kn);
    }
    Some(g)
}

fn binomial_capped(n: usize, k: usize) -> Option<usize> {
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > MAX_VERTICES as u128 {
            return None;
        }
    }
    Some(acc as usize)
}

/// J(n,k): vertices are the k-subsets of `0..n` in lexicographic order,
/// adjacent when the intersection has size k-1. Requires 1 <= k <= n-1.
pub fn johnson(n: usize, k: usize) -> Option<Graph> {
    if n < 2 || k < 1 || k > n - 1 {
        return None;
    }
    binomial_capped(n, k)?;
    let sets = combinations(n, k);
    let mut edges = Vec::new();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if intersection_size(&sets[i], &sets[j]) == k - 1 {
                edges.push((i, j));
            }
        }
    }
    Some(Graph::build(sets.len(), &edges).unwrap())
}

/// T(n) = J(n,2), n >= 4.
pub fn triangular(n: usize) -> Option<Graph> {
    if n < 4 {
        return None;
    }
    johnson(n, 2)
}

/// The demi-cube on even-weight binary n-strings (ascending as integers),
/// adjacent at Hamming distance 2. n >= 2.
pub fn demi_cube(n: usize) -> Option<Graph> {
    if !(2..=21).contains(&n) {
        return None;
    }
    let verts: Vec<u32> = (0u32..1 << n).filter(|x| x.count_ones() % 2 == 0).collect();
    let mut edges = Vec::new();
    for i in 0..verts.len() {
        for j in i + 1..verts.len() {
            if (verts[i] ^ verts[j]).count_ones() == 2 {
                edges.push((i, j));
            }
        }
    }
    Some(Graph::build(verts.len(), &edges).unwrap())
}

/// Petersen graph: 2-subsets of `0..5` in lexicographic order, adjacent when
/// disjoint (the Kneser graph K(5,2)).
pub fn petersen() -> Graph {
    let sets = combinations(5, 2);
    let mut edges = Vec::new();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if intersection_size(&sets[i], &sets[j]) == 0 {
                edges.push((i, j));
            }
        }
    }
    Graph::build(sets.len(), &edges).unwrap()
}

/// Icosahedron as a gyroelongated pentagonal bipyramid: pole 0, upper
/// pentagon 1..=5, lower pentagon 6..=10, pole 11.
pub fn icosahedron() -> Graph {
    let mut edges = vec![];
    for i in 0..5 {
        edges.push((0, 1 + i));
        edges.push((11, 6 + i));
        edges.push((1 + i, 1 + (i + 1) % 5));
        edges.push((6 + i, 6 + (i + 1) % 5));
        // upper i sits over lower i and lower i+1
        edges.push((1 + i, 6 + i));
        edges.push((1 + i, 6 + (i + 1) % 5));
    }
    Graph::build(12, &edges).unwrap()
}

/// Shrikhande graph: Cayley graph on Z4 x Z4 (vertex (a,b) -> 4a+b) with
/// connection set {±(1,0), ±(0,1), ±(1,1)}.
pub fn shrikhande() -> Graph {
    let mut edges = Vec::new();
    let idx = |a: usize, b: usize| 4 * (a % 4) + (b % 4);
    for a in 0..4 {
        for b in 0..4 {
            for (da, db) in [(1, 0), (0, 1), (1, 1)] {
                edges.push((idx(a, b), idx(a + da, b + db)));
            }
        }
    }
    Graph::build(16, &edges).unwrap()
}

/// Clebsch graph (the 16-vertex, 10-regular one): the demi-cube on 5 bits.
pub fn clebsch() -> Graph {
    demi_cube(5).unwrap()
}

/// Gosset graph: signed 2-subsets of `0..8`. Vertices 0..28 are the plus
/// copies in lexicographic order, 28..56 the minus copies. Equal signs are
/// adjacent when the subsets meet in one point; opposite signs when disjoint.
pub fn gosset() -> Graph {
    let sets = combinations(8, 2);
    let m = sets.len();
    let mut edges = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let meet = intersection_size(&sets[i], &sets[j]);
            if i < j && meet == 1 {
                edges.push((i, j)); // plus-plus
                edges.push((m + i, m + j)); // minus-minus
            }
            if meet == 0 {
                edges.push((i, m + j)); // plus-minus
            }
        }
    }
    Graph::build(2 * m, &edges).unwrap()
}

/// Schläfli graph: the local graph of the Gosset graph at vertex 0.
pub fn schlafli() -> Graph {
    gosset().local_graph(0)
}

/// Hoffman–Singleton graph. Five pentagons P_h (vertices 5h+j) and five
/// pentagrams Q_i (vertices 25+5i+j); P_h(j) ~ P_h(j±1), Q_i(j) ~ Q_i(j±2),
/// and P_h(j) ~ Q_i(h·i+j mod 5).
pub fn hoffman_singleton() -> Graph {
    let mut edges = Vec::new();
    let p = |h: usize, j: usize| 5 * h + j % 5;
    let q = |i: usize, j: usize| 25 + 5 * i + j % 5;
    for h in 0..5 {
        for j in 0..5 {
            edges.push((p(h, j), p(h, j + 1)));
            edges.push((q(h, j), q(h, j + 2)));
        }
    }
    for h in 0..5 {
        for i in 0..5 {
            for j in 0..5 {
                edges.push((p(h, j), q(i, (h * i + j) % 5)));
            }
        }
    }
    Graph::build(50, &edges).unwrap()
}

/// Doob(n,m): Cartesian product of n copies of K4 and m copies of the
/// Shrikhande graph (K4 factors leftmost). Requires n + m >= 1.
pub fn doob(n: usize, m: usize) -> Option<Graph> {
    if n + m < 1 {
        return None;
    }
    let size = 4usize.checked_pow(u32::try_from(n + 2 * m).ok()?)?;
    if size > MAX_VERTICES {
        return None;
    }
    let mut factors = Vec::new();
    for _ in 0..n {
        factors.push(complete(4).unwrap());
    }
    for _ in 0..m {
        factors.push(shrikhande());
    }
    let mut g = factors[0].clone();
    for f in &factors[1..] {
        g = g.cartesian_product(f);
    }
    Some(g)
}

/// Dodecahedron as the generalized Petersen graph GP(10,2): outer cycle
/// 0..10, inner vertices 10+i with 10+i ~ 10+((i+2) mod 10), spokes i ~ 10+i.
pub fn dodecahedron() -> Graph {
    let mut edges = Vec::new();
    for i in 0..10 {
        edges.push((i, (i + 1) % 10));
        edges.push((10 + i, 10 + (i + 2) % 10));
        edges.push((i, 10 + i));
    }
    Graph::build(20, &edges).unwrap()
}

/// Heawood graph: 14-cycle plus chords (i, i+5 mod 14) for even i.
pub fn heawood() -> Graph {
    let mut edges = Vec::new();
    for i in 0..14 {
        edges.push((i, (i + 1) % 14));
        if i % 2 == 0 {
            edges.push((i, (i + 5) % 14));
        }
    }
    Graph::build(14, &edges).unwrap()
}

/// Seidel switching: complement every edge between `s` and its complement;
/// edges inside either side are untouched. Vertices outside range are ignored.
pub fn seidel_switch(g: &Graph, s: &[usize]) -> Graph {
    let n = g.vertex_count();
    let mut in_s = vec![false; n];
    for &v in s {
        if v < n {
            in_s[v] = true;
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let crossing = in_s[u] != in_s[v];
            if g.has_edge(u, v) != crossing {
                edges.push((u, v));
            }
        }
    }
    Graph::build(n, &edges).unwrap()
}

/// Lexicographic rank of the pair {a,b} among 2-subsets of `0..n`, matching
/// the labeling of `johnson(n, 2)`.
fn pair_rank(n: usize, a: usize, b: usize) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    // pairs starting below a, then offset within the block of a
    a * n - a * (a + 1) / 2 + (b - a - 1)
}

/// The three K8 edge sets whose T(8) switching classes produce the Chang
/// graphs, as vertex sets of `triangular(8)`: a perfect matching, an
/// 8-cycle, and a disjoint triangle plus pentagon.
pub fn chang_switching_sets() -> [Vec<usize>; 3] {
    let matching: &[(usize, usize)] = &[(0, 1), (2, 3), (4, 5), (6, 7)];
    let cycle8: &[(usize, usize)] = &[
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 5),
        (5, 6),
        (6, 7),
        (7, 0),
    ];
    let tri_pent: &[(usize, usize)] = &[
        (0, 1),
        (1, 2),
        (2, 0),
        (3, 4),
        (4, 5),
        (5, 6),
        (6, 7),
        (7, 3),
    ];
    let to_set = |pairs: &[(usize, usize)]| {
        let mut v: Vec<usize> = pairs.iter().map(|&(a, b)| pair_rank(8, a, b)).collect();
        v.sort_unstable();
        v
    };
    [to_set(matching), to_set(cycle8), to_set(tri_pent)]
}
