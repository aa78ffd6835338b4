//! Graph families and named fixtures.
//!
//! Vertex numbering is fixed per family and documented on each constructor,
//! so generated graphs (and the files written from them) are byte-stable.

use thiserror::Error;

use crate::count::{self, CountError};
use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("({0}, {1}, {2}, {3}) is not an induced 4-cycle of degree-3 vertices")]
    NotInducedFourCycle(usize, usize, usize, usize),
    #[error("graph minus the two extended edges is Hamiltonian")]
    HypothesisViolated,
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("fixture data is corrupt: {0}")]
    CorruptFixture(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Count(#[from] CountError),
}

/// A nanotube together with the edge cuts between consecutive layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayeredGraph {
    pub graph: Graph,
    /// `cuts[i]` holds the ids of the `width` edges joining layer `i` to layer `i + 1`,
    /// ordered by spoke label.
    pub cuts: Vec<Vec<usize>>,
    pub width: usize,
    pub length: usize,
}

/// Four vertices in cyclic order around a 4-cycle: edges `v1v2`, `v2v3`,
/// `v3v4`, `v4v1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FourCycleHandle {
    pub v1: usize,
    pub v2: usize,
    pub v3: usize,
    pub v4: usize,
}

impl FourCycleHandle {
    pub fn new(v1: usize, v2: usize, v3: usize, v4: usize) -> Self {
        FourCycleHandle { v1, v2, v3, v4 }
    }

    /// Whether this is an induced 4-cycle of `g` whose vertices all have degree 3.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let vs = [self.v1, self.v2, self.v3, self.v4];
        if vs.iter().any(|&v| v >= g.n() || g.degree(v) != 3) {
            return false;
        }
        let mut sorted = vs;
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        (0..4).all(|i| g.has_edge(vs[i], vs[(i + 1) % 4]))
            && !g.has_edge(self.v1, self.v3)
            && !g.has_edge(self.v2, self.v4)
    }

    /// After [`ladder_extension`] on a graph with `old_n` vertices, the new
    /// middle square `x1 x2 y2 y1`, oriented so that extending it again
    /// lengthens the same ladder.
    pub fn middle_after_extension(old_n: usize) -> Self {
        FourCycleHandle::new(old_n, old_n + 1, old_n + 3, old_n + 2)
    }
}

/// `P(m, k)`: outer vertices `u_i = i`, inner vertices `v_i = m + i`.
pub fn generalized_petersen(m: usize, k: usize) -> Result<Graph, GenError> {
    if m < 3 || k == 0 || 2 * k >= m {
        return Err(GenError::BadParameters(format!(
            "generalized Petersen graph needs m >= 3 and 1 <= k < m/2, got ({m}, {k})"
        )));
    }
    let mut edges = Vec::with_capacity(3 * m);
    for i in 0..m {
        edges.push((i, (i + 1) % m));
        edges.push((m + i, m + (i + k) % m));
        edges.push((i, m + i));
    }
    Ok(Graph::new(2 * m, edges)?)
}

/// `RL(m, k)`: ladder `L_i` owns ids `2ki .. 2k(i+1)`; its u-rail is
/// `u_j = 2ki + j - 1` and its v-rail is `v_j = 2ki + k + j - 1` for
/// `j = 1..=k`. `u_1` and `u_k` of `L_i` are joined to `v_1` and `v_k` of
/// `L_{i+1}`.
pub fn ring_of_ladders(m: usize, k: usize) -> Result<Graph, GenError> {
    if m < 2 || k < 2 {
        return Err(GenError::BadParameters(format!(
            "ring of ladders needs m >= 2 and k >= 2, got ({m}, {k})"
        )));
    }
    let u = |i: usize, j: usize| 2 * k * (i % m) + j - 1;
    let v = |i: usize, j: usize| 2 * k * (i % m) + k + j - 1;
    let mut edges = Vec::with_capacity(3 * m * k);
    for i in 0..m {
        for j in 1..=k {
            edges.push((u(i, j), v(i, j)));
            if j < k {
                edges.push((u(i, j), u(i, j + 1)));
                edges.push((v(i, j), v(i, j + 1)));
            }
        }
        edges.push((u(i, 1), v(i + 1, 1)));
        edges.push((u(i, k), v(i + 1, k)));
    }
    Ok(Graph::new(2 * m * k, edges)?)
}

/// `N(w, k)`, numbered layer by layer.
///
/// * start cycle `s_i = i`;
/// * internal layer `j` (`1..=k`) has `v_i = w + 2w(j-1) + i` and
///   `w_i = w + 2w(j-1) + w + i`, with in-layer edges `v_i w_i` and
///   `v_i w_{i+1}`;
/// * end cycle `t_i = w + 2wk + i`.
///
/// Spoke `i` of every cut joins position `i` on the left to position `i`
/// on the right: `s_i v_i`, `w_i v_i'` between internal layers, `w_i t_i`.
pub fn nanotube(w: usize, k: usize) -> Result<LayeredGraph, GenError> {
    if w < 3 || k < 1 {
        return Err(GenError::BadParameters(format!(
            "nanotube needs w >= 3 and k >= 1, got ({w}, {k})"
        )));
    }
    let n = 2 * w * (k + 1);
    let start = |i: usize| i % w;
    let left = |j: usize, i: usize| w + 2 * w * (j - 1) + i % w;
    let right = |j: usize, i: usize| w + 2 * w * (j - 1) + w + i % w;
    let end = |i: usize| w + 2 * w * k + i % w;

    let mut edges = Vec::with_capacity(3 * w * (k + 1));
    let mut spokes: Vec<Vec<(usize, usize)>> = Vec::with_capacity(k + 1);
    for i in 0..w {
        edges.push((start(i), start(i + 1)));
        edges.push((end(i), end(i + 1)));
    }
    for j in 1..=k {
        for i in 0..w {
            edges.push((left(j, i), right(j, i)));
            edges.push((left(j, i), right(j, i + 1)));
        }
    }
    spokes.push((0..w).map(|i| (start(i), left(1, i))).collect());
    for j in 1..k {
        spokes.push((0..w).map(|i| (right(j, i), left(j + 1, i))).collect());
    }
    spokes.push((0..w).map(|i| (right(k, i), end(i))).collect());
    edges.extend(spokes.iter().flatten().copied());

    let graph = Graph::new(n, edges)?;
    let cuts = spokes
        .iter()
        .map(|cut| {
            cut.iter()
                .map(|&(a, b)| graph.edge_index(a, b).expect("spoke was inserted"))
                .collect()
        })
        .collect();
    Ok(LayeredGraph {
        graph,
        cuts,
        width: w,
        length: k,
    })
}

/// Replaces `v1v2` by the path `v1 x1 x2 v2` and `v3v4` by `v3 y2 y1 v4`,
/// then adds the rungs `x1y1` and `x2y2`. The new vertices get ids
/// `x1 = n`, `x2 = n + 1`, `y1 = n + 2`, `y2 = n + 3`.
///
/// With `verify` set, the extension is refused unless `g` minus `v1v2` and
/// `v3v4` is non-Hamiltonian, which is what makes the Hamilton cycles of
/// `g` and the result correspond one to one.
pub fn ladder_extension(g: &Graph, c: &FourCycleHandle, verify: bool) -> Result<Graph, GenError> {
    if !c.is_valid_in(g) {
        return Err(GenError::NotInducedFourCycle(c.v1, c.v2, c.v3, c.v4));
    }
    let removed = [(c.v1, c.v2), (c.v3, c.v4)];
    if verify && count::is_hamiltonian(&g.without_edges(&removed))? {
        return Err(GenError::HypothesisViolated);
    }
    let n = g.n();
    let (x1, x2, y1, y2) = (n, n + 1, n + 2, n + 3);
    let kept = g.without_edges(&removed);
    let mut edges = kept.edges().to_vec();
    edges.extend([
        (c.v1, x1),
        (x1, x2),
        (x2, c.v2),
        (c.v3, y2),
        (y2, y1),
        (y1, c.v4),
        (x1, y1),
        (x2, y2),
    ]);
    Ok(Graph::new(n + 4, edges)?)
}

/// Names accepted by [`fixture`].
pub const FIXTURE_NAMES: [&str; 4] = ["base38", "cc5_64_a", "cc5_64_b", "fullerene56"];

const BASE38: &str = include_str!("../data/base38.txt");
const CC5_64_A: &str = include_str!("../data/cc5_64_a.txt");
const CC5_64_B: &str = include_str!("../data/cc5_64_b.txt");
const FULLERENE56: &str = include_str!("../data/fullerene56.txt");

pub fn fixture(name: &str) -> Result<Graph, GenError> {
    let data = match name {
        "base38" => BASE38,
        "cc5_64_a" => CC5_64_A,
        "cc5_64_b" => CC5_64_B,
        "fullerene56" => FULLERENE56,
        other => return Err(GenError::UnknownFixture(other.to_string())),
    };
    crate::io::read_edge_list(data.as_bytes())
        .map_err(|e| GenError::CorruptFixture(format!("{name}: {e}")))
}

// Ids for the 38-vertex graph: a_x = x (x in 0..20), b_x = 20 + x/2 for even
// x, and c_x = 30.. in the order of BASE38_INNER.
const BASE38_INNER: [usize; 8] = [1, 3, 7, 9, 11, 13, 17, 19];

fn base38_inner(x: usize) -> usize {
    30 + BASE38_INNER.iter().position(|&y| y == x).expect("inner label")
}

/// The 38-vertex cyclically 4-edge-connected graph with four Hamilton cycles.
pub fn base38() -> Graph {
    let a = |x: usize| x % 20;
    let b = |x: usize| 20 + (x % 20) / 2;
    let c = base38_inner;
    let mut edges = Vec::with_capacity(57);
    for x in 0..20 {
        edges.push((a(x), a(x + 1)));
    }
    for x in (0..20).step_by(2) {
        edges.push((b(x), b(x + 2)));
        edges.push((b(x), a(x)));
    }
    for x in BASE38_INNER {
        edges.push((c(x), a(x)));
    }
    edges.push((a(5), a(15)));
    edges.extend([(c(7), c(9)), (c(9), c(11)), (c(11), c(13)), (c(7), c(13))]);
    edges.extend([(c(17), c(19)), (c(19), c(1)), (c(1), c(3)), (c(17), c(3))]);
    Graph::new(38, edges).expect("base38 edge list is valid")
}

/// The two 4-cycles of [`base38`], oriented so that `v1v2` and `v3v4` are
/// the edges every Hamilton cycle uses (the extendable orientation).
pub fn base38_four_cycles() -> [FourCycleHandle; 2] {
    let c = base38_inner;
    [
        FourCycleHandle::new(c(7), c(13), c(11), c(9)),
        FourCycleHandle::new(c(17), c(3), c(1), c(19)),
    ]
}

/// All induced 4-cycles through degree-3 vertices, each listed once with
/// its least vertex first.
pub fn induced_four_cycles(g: &Graph) -> Vec<FourCycleHandle> {
    let mut found = Vec::new();
    for v1 in 0..g.n() {
        for &v2 in g.neighbors(v1) {
            for &v4 in g.neighbors(v1) {
                if v2 >= v4 || v2 < v1 || v4 < v1 {
                    continue;
                }
                for &v3 in g.neighbors(v2) {
                    if v3 <= v1 || !g.has_edge(v3, v4) {
                        continue;
                    }
                    let h = FourCycleHandle::new(v1, v2, v3, v4);
                    if h.is_valid_in(g) {
                        found.push(h);
                    }
                }
            }
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_family_shapes() {
        let p = generalized_petersen(5, 2).unwrap();
        assert_eq!((p.n(), p.edge_count()), (10, 15));
        assert!(p.is_cubic());
        assert_eq!(p.girth(), Ok(5));
        let cube = generalized_petersen(4, 1).unwrap();
        assert_eq!((cube.n(), cube.girth()), (8, Ok(4)));
        assert!(generalized_petersen(4, 2).is_err());
        assert!(generalized_petersen(2, 1).is_err());
        assert!(generalized_petersen(7, 0).is_err());
    }

    #[test]
    fn cube_is_bipartite() {
        let cube = generalized_petersen(4, 1).unwrap();
        let mut color = vec![usize::MAX; cube.n()];
        color[0] = 0;
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for &u in cube.neighbors(v) {
                if color[u] == usize::MAX {
                    color[u] = 1 - color[v];
                    stack.push(u);
                }
                assert_ne!(color[u], color[v]);
            }
        }
    }

    #[test]
    fn rings_of_ladders_are_cubic() {
        for (m, k) in [(2, 2), (3, 3), (5, 4), (4, 7)] {
            let g = ring_of_ladders(m, k).unwrap();
            assert_eq!(g.n(), 2 * m * k);
            assert!(g.is_cubic(), "RL({m},{k})");
            assert!(g.is_connected());
        }
        assert_eq!(ring_of_ladders(3, 3).unwrap().girth(), Ok(4));
        assert!(ring_of_ladders(1, 3).is_err());
    }

    #[test]
    fn nanotube_layout() {
        let lg = nanotube(5, 3).unwrap();
        assert_eq!(lg.graph.n(), 40);
        assert_eq!(lg.graph.edge_count(), 60);
        assert!(lg.graph.is_cubic());
        assert_eq!(lg.cuts.len(), 4);
        let mut all: Vec<usize> = lg.cuts.iter().flatten().copied().collect();
        all.sort_unstable();
        all.dedup();
        assert_eq!(all.len(), 20);
        for cut in &lg.cuts {
            assert_eq!(cut.len(), 5);
            let mut removed = vec![false; lg.graph.edge_count()];
            for &e in cut {
                removed[e] = true;
            }
            assert_eq!(lg.graph.component_count_without(&removed), 2);
        }
        assert!(nanotube(2, 3).is_err());
        assert!(nanotube(5, 0).is_err());
    }

    #[test]
    fn base38_shape() {
        let g = base38();
        assert_eq!((g.n(), g.edge_count()), (38, 57));
        assert!(g.is_cubic());
        let squares = induced_four_cycles(&g);
        assert_eq!(squares.len(), 2);
        for h in base38_four_cycles() {
            assert!(h.is_valid_in(&g));
        }
    }

    #[test]
    fn k4_square_is_not_induced() {
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let h = FourCycleHandle::new(0, 1, 2, 3);
        assert_eq!(
            ladder_extension(&k4, &h, false),
            Err(GenError::NotInducedFourCycle(0, 1, 2, 3))
        );
    }

    #[test]
    fn extension_keeps_old_edges() {
        let g = base38();
        let h = base38_four_cycles()[0];
        let ext = ladder_extension(&g, &h, false).unwrap();
        assert_eq!(ext.n(), 42);
        assert!(ext.is_cubic());
        let restricted: Vec<(usize, usize)> = ext
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| u < 38 && v < 38)
            .collect();
        let expected = g.without_edges(&[(h.v1, h.v2), (h.v3, h.v4)]);
        assert_eq!(restricted, expected.edges());
        assert!(FourCycleHandle::middle_after_extension(38).is_valid_in(&ext));
    }

    #[test]
    fn wrong_orientation_violates_hypothesis() {
        let g = base38();
        let h = base38_four_cycles()[0];
        let turned = FourCycleHandle::new(h.v2, h.v3, h.v4, h.v1);
        assert_eq!(ladder_extension(&g, &turned, true), Err(GenError::HypothesisViolated));
    }

    #[test]
    fn fixtures_load() {
        for name in FIXTURE_NAMES {
            let g = fixture(name).unwrap();
            assert!(g.is_cubic(), "{name}");
        }
        assert_eq!(fixture("cc5_64_a").unwrap().n(), 64);
        assert_eq!(fixture("fullerene56").unwrap().n(), 56);
        assert!(matches!(fixture("tutte"), Err(GenError::UnknownFixture(_))));
    }
}
