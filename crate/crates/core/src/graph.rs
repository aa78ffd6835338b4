//! Immutable simple undirected graphs and the structural queries the rest
//! of the crate relies on: girth, connectivity and cyclic edge-connectivity.
//!
//! Vertices are dense ids `0..n`. Edges are stored once, as `(u, v)` with
//! `u < v`, sorted lexicographically; an edge's id is its position in that
//! list and is stable for the lifetime of the graph.

use std::collections::VecDeque;
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::dsu::DisjointSets;

/// Largest `k` accepted by [`Graph::is_cyclically_k_edge_connected`].
pub const MAX_CYCLIC_K: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({0}, {1}) appears more than once")]
    DuplicateEdge(usize, usize),
    #[error("loop at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph has no cycle")]
    AcyclicGraph,
    #[error("cyclic connectivity check limited to k <= {MAX_CYCLIC_K}, got {0}")]
    KTooLarge(usize),
    #[error("graph is disconnected")]
    Disconnected,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

/// Builds a graph from an edge list, rejecting loops, repeats and
/// out-of-range endpoints.
pub fn build_graph<I>(n: usize, edges: I) -> Result<Graph, GraphError>
where
    I: IntoIterator<Item = (usize, usize)>,
{
    Graph::new(n, edges)
}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { vertex, n });
                }
            }
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &list {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Ok(Graph {
            n,
            adjacency,
            edges: list,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list; the index of an edge here is its id.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_cubic(&self) -> bool {
        self.adjacency.iter().all(|a| a.len() == 3)
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Ids of the edges incident to `v`, in neighbor order.
    pub fn incident_edges(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v]
            .iter()
            .map(move |&u| self.edge_index(u, v).expect("adjacency and edge list agree"))
    }

    /// A new graph with the given edges deleted. Edges not present are ignored.
    pub fn without_edges(&self, remove: &[(usize, usize)]) -> Graph {
        let drop: Vec<(usize, usize)> = remove.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        let edges = self.edges.iter().copied().filter(|e| !drop.contains(e));
        Graph::new(self.n, edges).expect("subgraph of a valid graph is valid")
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &self.adjacency[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n
    }

    /// Number of connected components after deleting the edges whose ids
    /// are flagged in `removed`.
    pub fn component_count_without(&self, removed: &[bool]) -> usize {
        let mut dsu = DisjointSets::new(self.n);
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            if !removed[id] {
                dsu.union(u, v);
            }
        }
        dsu.set_count()
    }

    /// Length of a shortest cycle.
    pub fn girth(&self) -> Result<usize, GraphError> {
        self.shortest_cycle().map(|c| c.len())
    }

    /// The vertices of one shortest cycle, in cyclic order.
    pub fn shortest_cycle(&self) -> Result<Vec<usize>, GraphError> {
        let mut best: Option<(usize, usize, usize, Vec<usize>)> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[root] = 0;
            queue.clear();
            queue.push_back(root);
            let bound = best.as_ref().map_or(usize::MAX, |b| b.0);
            'bfs: while let Some(x) = queue.pop_front() {
                if 2 * dist[x] + 1 >= bound {
                    break;
                }
                for &y in &self.adjacency[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        let len = dist[x] + dist[y] + 1;
                        if best.as_ref().is_none_or(|b| len < b.0) {
                            best = Some((len, x, y, parent.clone()));
                            if len == 3 {
                                break 'bfs;
                            }
                        }
                    }
                }
            }
            if best.as_ref().is_some_and(|b| b.0 == 3) {
                break;
            }
        }
        let (_, x, y, parent) = best.ok_or(GraphError::AcyclicGraph)?;
        let climb = |mut v: usize| {
            let mut path = vec![v];
            while parent[v] != usize::MAX {
                v = parent[v];
                path.push(v);
            }
            path
        };
        // Both climbs end at the BFS root; a minimum-length closed walk is a simple cycle.
        let mut cycle = climb(x);
        let mut back = climb(y);
        back.pop();
        back.reverse();
        cycle.extend(back);
        Ok(cycle)
    }

    /// Whether no set of fewer than `k` edges leaves two or more components
    /// that each contain a cycle. A graph with no cycle-separating edge set
    /// at all (K4, for instance) is reported as cyclically k-connected for
    /// every `k`.
    pub fn is_cyclically_k_edge_connected(&self, k: usize) -> Result<bool, GraphError> {
        Ok(self.cycle_separating_cut(k)?.is_none())
    }

    /// Searches for a cycle-separating edge set of size less than `k` and
    /// returns the edge ids of one, if any exists.
    pub fn cycle_separating_cut(&self, k: usize) -> Result<Option<Vec<usize>>, GraphError> {
        if k > MAX_CYCLIC_K {
            return Err(GraphError::KTooLarge(k));
        }
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        if k <= 1 {
            return Ok(None);
        }
        let m = self.edges.len();

        // The edges leaving a shortest cycle are the usual small witness.
        if let Ok(cycle) = self.shortest_cycle() {
            let mut on_cycle = vec![false; self.n];
            for &v in &cycle {
                on_cycle[v] = true;
            }
            let boundary: Vec<usize> = self
                .edges
                .iter()
                .enumerate()
                .filter(|(_, &(u, v))| on_cycle[u] != on_cycle[v])
                .map(|(id, _)| id)
                .collect();
            if boundary.len() < k && !boundary.is_empty() {
                let mut scratch = CutScratch::new(self);
                if scratch.separates(self, &boundary) {
                    return Ok(Some(boundary));
                }
            }
        }

        for size in 1..k.min(m + 1) {
            let found = (0..m).into_par_iter().find_map_first(|first| {
                let mut scratch = CutScratch::new(self);
                let mut chosen = vec![first];
                scan_combinations(self, &mut scratch, &mut chosen, first + 1, size)
            });
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}

fn scan_combinations(
    g: &Graph,
    scratch: &mut CutScratch,
    chosen: &mut Vec<usize>,
    next: usize,
    size: usize,
) -> Option<Vec<usize>> {
    if chosen.len() == size {
        return scratch.separates(g, chosen).then(|| chosen.clone());
    }
    let m = g.edges.len();
    let remaining = size - chosen.len();
    for e in next..=(m - remaining) {
        chosen.push(e);
        if let Some(cut) = scan_combinations(g, scratch, chosen, e + 1, size) {
            return Some(cut);
        }
        chosen.pop();
    }
    None
}

struct CutScratch {
    dsu: DisjointSets,
    removed: Vec<bool>,
    vertices: Vec<usize>,
    edges: Vec<usize>,
}

impl CutScratch {
    fn new(g: &Graph) -> Self {
        CutScratch {
            dsu: DisjointSets::new(g.n),
            removed: vec![false; g.edges.len()],
            vertices: vec![0; g.n],
            edges: vec![0; g.n],
        }
    }

    /// Whether deleting `cut` leaves at least two components with a cycle.
    fn separates(&mut self, g: &Graph, cut: &[usize]) -> bool {
        for &e in cut {
            self.removed[e] = true;
        }
        self.dsu.reset();
        for (id, &(u, v)) in g.edges.iter().enumerate() {
            if !self.removed[id] {
                self.dsu.union(u, v);
            }
        }
        let mut result = false;
        if self.dsu.set_count() >= 2 {
            self.vertices.fill(0);
            self.edges.fill(0);
            for v in 0..g.n {
                let r = self.dsu.find(v);
                self.vertices[r] += 1;
            }
            for (id, &(u, _)) in g.edges.iter().enumerate() {
                if !self.removed[id] {
                    let r = self.dsu.find(u);
                    self.edges[r] += 1;
                }
            }
            // A connected component contains a cycle iff it has at least as many edges as vertices.
            let cyclic = (0..g.n)
                .filter(|&r| self.vertices[r] > 0 && self.edges[r] >= self.vertices[r])
                .count();
            result = cyclic >= 2;
        }
        for &e in cut {
            self.removed[e] = false;
        }
        result
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn prism() -> Graph {
        Graph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
            .unwrap()
    }

    #[test]
    fn k4_is_cubic() {
        let g = k4();
        assert!(g.is_cubic());
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.girth(), Ok(3));
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(3, [(0, 1), (0, 1)]), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(Graph::new(3, [(1, 0), (0, 1)]), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(Graph::new(3, [(2, 2)]), Err(GraphError::LoopEdge(2)));
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn edges_are_canonical() {
        let g = Graph::new(4, [(3, 2), (1, 0), (2, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (2, 3)]);
        assert_eq!(g.neighbors(0), &[1, 2]);
        assert_eq!(g.edge_index(3, 2), Some(2));
        assert_eq!(g.edge_index(1, 3), None);
    }

    #[test]
    fn forest_has_no_girth() {
        let path = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(path.girth(), Err(GraphError::AcyclicGraph));
    }

    #[test]
    fn shortest_cycle_is_a_cycle() {
        let g = prism();
        let c = g.shortest_cycle().unwrap();
        assert_eq!(c.len(), 3);
        for i in 0..c.len() {
            assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
        }
    }

    #[test]
    fn k4_has_no_cycle_separating_cut() {
        for k in 0..=MAX_CYCLIC_K {
            assert_eq!(k4().is_cyclically_k_edge_connected(k), Ok(true));
        }
        assert_eq!(k4().is_cyclically_k_edge_connected(7), Err(GraphError::KTooLarge(7)));
    }

    #[test]
    fn prism_separates_with_three_edges() {
        let g = prism();
        assert_eq!(g.is_cyclically_k_edge_connected(3), Ok(true));
        assert_eq!(g.is_cyclically_k_edge_connected(4), Ok(false));
        let cut = g.cycle_separating_cut(4).unwrap().unwrap();
        assert_eq!(cut.len(), 3);
    }

    #[test]
    fn disconnected_graph_is_rejected() {
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(g.is_cyclically_k_edge_connected(3), Err(GraphError::Disconnected));
    }

    #[test]
    fn without_edges_drops_only_named_edges() {
        let g = k4().without_edges(&[(1, 0), (2, 3)]);
        assert_eq!(g.edge_count(), 4);
        assert!(!g.has_edge(0, 1));
        assert!(g.has_edge(0, 2));
    }
}
