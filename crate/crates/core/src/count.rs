//! Exact Hamilton-cycle counting by edge-state backtracking.
//!
//! Every edge is `In`, `Out` or undecided. After each decision the degree
//! constraints are propagated to a fixed point: a vertex with two `In`
//! edges forces its remaining edges out, a vertex that can only reach
//! degree two forces its remaining edges in. Partial paths are tracked by
//! their endpoints, so an edge that would close a cycle before all `n`
//! vertices are covered is rejected (or forced out in advance). Cycles are
//! counted as undirected edge sets: each one is reached by exactly one leaf
//! of the search.

use std::collections::BTreeMap;
use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::generators::LayeredGraph;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("Hamilton-cycle count overflowed 64 bits")]
    Overflow,
    #[error("time budget of {0:?} exceeded")]
    Timeout(Duration),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph needs at least 3 vertices, got {0}")]
    TooSmall(usize),
    #[error("a Hamilton cycle uses {counts:?} edges across consecutive cuts")]
    CutInvariantViolated { counts: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonCount {
    pub total: u64,
    /// Number of Hamilton cycles through each edge, indexed by edge id.
    pub per_edge: Option<Vec<u64>>,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CountOptions {
    pub per_edge: bool,
    pub budget: Option<Duration>,
}

pub fn count_hamilton_cycles(g: &Graph) -> Result<HamiltonCount, CountError> {
    count_with(g, CountOptions::default())
}

pub fn count_with(g: &Graph, opts: CountOptions) -> Result<HamiltonCount, CountError> {
    let start = Instant::now();
    let mut total: u64 = 0;
    let mut per_edge = opts.per_edge.then(|| vec![0u64; g.edge_count()]);
    let mut overflow = false;
    for_each_hamilton_cycle(g, opts.budget, |cycle| {
        match total.checked_add(1) {
            Some(t) => total = t,
            None => {
                overflow = true;
                return ControlFlow::Break(());
            }
        }
        if let Some(tally) = per_edge.as_mut() {
            for &e in cycle {
                tally[e] += 1;
            }
        }
        ControlFlow::Continue(())
    })?;
    if overflow {
        return Err(CountError::Overflow);
    }
    Ok(HamiltonCount {
        total,
        per_edge,
        elapsed: start.elapsed(),
    })
}

/// Stops at the first Hamilton cycle found.
pub fn is_hamiltonian(g: &Graph) -> Result<bool, CountError> {
    is_hamiltonian_within(g, None)
}

pub fn is_hamiltonian_within(g: &Graph, budget: Option<Duration>) -> Result<bool, CountError> {
    let mut found = false;
    for_each_hamilton_cycle(g, budget, |_| {
        found = true;
        ControlFlow::Break(())
    })?;
    Ok(found)
}

/// Buckets the Hamilton cycles of a nanotube by how many edges each one
/// uses in every layer cut.
pub fn count_by_crossing_type(lg: &LayeredGraph) -> Result<BTreeMap<usize, u64>, CountError> {
    count_by_crossing_type_within(lg, None)
}

pub fn count_by_crossing_type_within(
    lg: &LayeredGraph,
    budget: Option<Duration>,
) -> Result<BTreeMap<usize, u64>, CountError> {
    let g = &lg.graph;
    let mut cut_of = vec![usize::MAX; g.edge_count()];
    for (i, cut) in lg.cuts.iter().enumerate() {
        for &e in cut {
            cut_of[e] = i;
        }
    }
    let mut buckets = BTreeMap::new();
    let mut violation = None;
    let mut used = vec![0usize; lg.cuts.len()];
    for_each_hamilton_cycle(g, budget, |cycle| {
        used.fill(0);
        for &e in cycle {
            if cut_of[e] != usize::MAX {
                used[cut_of[e]] += 1;
            }
        }
        let first = used[0];
        if !first.is_multiple_of(2) || used.iter().any(|&u| u != first) {
            violation = Some(used.clone());
            return ControlFlow::Break(());
        }
        *buckets.entry(first).or_insert(0u64) += 1;
        ControlFlow::Continue(())
    })?;
    match violation {
        Some(counts) => Err(CountError::CutInvariantViolated { counts }),
        None => Ok(buckets),
    }
}

/// Calls `visit` with the edge ids of every Hamilton cycle of `g`, in
/// search order, until it breaks.
pub fn for_each_hamilton_cycle<F>(
    g: &Graph,
    budget: Option<Duration>,
    mut visit: F,
) -> Result<(), CountError>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if g.n() < 3 {
        return Err(CountError::TooSmall(g.n()));
    }
    if !g.is_connected() {
        return Err(CountError::Disconnected);
    }
    if (0..g.n()).any(|v| g.degree(v) < 2) {
        return Ok(());
    }
    let mut search = Search::new(g, budget);
    if !search.propagate_all() {
        return Ok(());
    }
    let _stopped = search.run(&mut visit)?;
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum EdgeState {
    Undecided,
    In,
    Out,
}

enum Undo {
    Edge(usize),
    End(usize, usize),
}

enum Step {
    Fail,
    Ok,
    Closed,
}

struct Search<'g> {
    g: &'g Graph,
    incident: Vec<Vec<usize>>,
    state: Vec<EdgeState>,
    deg_in: Vec<u32>,
    deg_open: Vec<u32>,
    /// For a path endpoint, the other endpoint of its path; isolated vertices point to themselves.
    other_end: Vec<usize>,
    in_count: usize,
    closed: bool,
    trail: Vec<Undo>,
    queue: Vec<usize>,
    nodes: u64,
    started: Instant,
    budget: Option<Duration>,
    cycle_buf: Vec<usize>,
    seen: Vec<u32>,
    stamp: u32,
    stack: Vec<usize>,
}

/// Outcome of a subtree: keep going, or stop everything.
type Flow = Result<ControlFlow<()>, CountError>;

impl<'g> Search<'g> {
    fn new(g: &'g Graph, budget: Option<Duration>) -> Self {
        let n = g.n();
        let incident: Vec<Vec<usize>> = (0..n).map(|v| g.incident_edges(v).collect()).collect();
        let deg_open = incident.iter().map(|i| i.len() as u32).collect();
        Search {
            g,
            incident,
            state: vec![EdgeState::Undecided; g.edge_count()],
            deg_in: vec![0; n],
            deg_open,
            other_end: (0..n).collect(),
            in_count: 0,
            closed: false,
            trail: Vec::with_capacity(4 * g.edge_count()),
            queue: Vec::with_capacity(n),
            nodes: 0,
            started: Instant::now(),
            budget,
            cycle_buf: Vec::with_capacity(n),
            seen: vec![0; n],
            stamp: 0,
            stack: Vec::with_capacity(n),
        }
    }

    fn propagate_all(&mut self) -> bool {
        self.queue.extend(0..self.g.n());
        self.propagate()
    }

    fn set_in(&mut self, e: usize) -> Step {
        match self.state[e] {
            EdgeState::In => return Step::Ok,
            EdgeState::Out => return Step::Fail,
            EdgeState::Undecided => {}
        }
        let (u, v) = self.g.edges()[e];
        if self.deg_in[u] >= 2 || self.deg_in[v] >= 2 {
            return Step::Fail;
        }
        let closes = self.other_end[u] == v;
        if closes && self.in_count + 1 != self.g.n() {
            return Step::Fail;
        }
        self.state[e] = EdgeState::In;
        self.trail.push(Undo::Edge(e));
        self.deg_in[u] += 1;
        self.deg_in[v] += 1;
        self.deg_open[u] -= 1;
        self.deg_open[v] -= 1;
        self.in_count += 1;
        if closes {
            self.closed = true;
            return Step::Closed;
        }
        let a = self.other_end[u];
        let b = self.other_end[v];
        self.trail.push(Undo::End(a, self.other_end[a]));
        self.trail.push(Undo::End(b, self.other_end[b]));
        self.other_end[a] = b;
        self.other_end[b] = a;
        self.queue.push(u);
        self.queue.push(v);
        self.queue.push(a);
        self.queue.push(b);
        Step::Ok
    }

    fn set_out(&mut self, e: usize) -> Step {
        match self.state[e] {
            EdgeState::Out => return Step::Ok,
            EdgeState::In => return Step::Fail,
            EdgeState::Undecided => {}
        }
        let (u, v) = self.g.edges()[e];
        self.state[e] = EdgeState::Out;
        self.trail.push(Undo::Edge(e));
        self.deg_open[u] -= 1;
        self.deg_open[v] -= 1;
        self.queue.push(u);
        self.queue.push(v);
        Step::Ok
    }

    /// Runs degree propagation to a fixed point. Returns `false` on contradiction.
    fn propagate(&mut self) -> bool {
        while let Some(x) = self.queue.pop() {
            if self.closed {
                self.queue.clear();
                return true;
            }
            let din = self.deg_in[x];
            let dopen = self.deg_open[x];
            if din + dopen < 2 {
                self.queue.clear();
                return false;
            }
            if dopen == 0 {
                continue;
            }
            if din == 2 || din + dopen == 2 {
                let force_in = din < 2;
                for i in 0..self.incident[x].len() {
                    let e = self.incident[x][i];
                    if self.state[e] != EdgeState::Undecided {
                        continue;
                    }
                    let step = if force_in { self.set_in(e) } else { self.set_out(e) };
                    match step {
                        Step::Fail => {
                            self.queue.clear();
                            return false;
                        }
                        Step::Closed => {
                            self.queue.clear();
                            return true;
                        }
                        Step::Ok => {}
                    }
                }
            } else if din == 1 && self.in_count + 1 < self.g.n() {
                // An edge joining the two ends of one path would close it too early.
                let end = self.other_end[x];
                for i in 0..self.incident[x].len() {
                    let e = self.incident[x][i];
                    if self.state[e] != EdgeState::Undecided {
                        continue;
                    }
                    let (a, b) = self.g.edges()[e];
                    if a + b - x == end {
                        if let Step::Fail = self.set_out(e) {
                            self.queue.clear();
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().expect("trail longer than mark") {
                Undo::Edge(e) => {
                    let (u, v) = self.g.edges()[e];
                    if self.state[e] == EdgeState::In {
                        self.deg_in[u] -= 1;
                        self.deg_in[v] -= 1;
                        self.in_count -= 1;
                    }
                    self.deg_open[u] += 1;
                    self.deg_open[v] += 1;
                    self.state[e] = EdgeState::Undecided;
                }
                Undo::End(x, old) => self.other_end[x] = old,
            }
        }
        self.closed = false;
    }

    /// The `In` and undecided edges must still span one connected piece.
    fn still_connected(&mut self) -> bool {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.seen.fill(0);
            self.stamp = 1;
        }
        let stamp = self.stamp;
        self.stack.clear();
        self.stack.push(0);
        self.seen[0] = stamp;
        let mut reached = 1;
        while let Some(x) = self.stack.pop() {
            for &e in &self.incident[x] {
                if self.state[e] == EdgeState::Out {
                    continue;
                }
                let (a, b) = self.g.edges()[e];
                let y = a + b - x;
                if self.seen[y] != stamp {
                    self.seen[y] = stamp;
                    reached += 1;
                    self.stack.push(y);
                }
            }
        }
        reached == self.g.n()
    }

    fn choose_edge(&self) -> Option<usize> {
        // Prefer extending a path: an endpoint has exactly one of its open edges to pick.
        let mut fallback = None;
        let mut best: Option<(u32, usize)> = None;
        for x in 0..self.g.n() {
            let open = self.deg_open[x];
            if open == 0 {
                continue;
            }
            if self.deg_in[x] == 1 {
                if best.is_none_or(|(o, _)| open < o) {
                    best = Some((open, x));
                    if open == 2 {
                        break;
                    }
                }
            } else if fallback.is_none() {
                fallback = Some(x);
            }
        }
        let x = best.map(|(_, x)| x).or(fallback)?;
        self.incident[x]
            .iter()
            .copied()
            .find(|&e| self.state[e] == EdgeState::Undecided)
    }

    fn check_budget(&mut self) -> Result<(), CountError> {
        self.nodes += 1;
        if let Some(budget) = self.budget {
            if self.nodes & 0x3ff == 0 && self.started.elapsed() > budget {
                return Err(CountError::Timeout(budget));
            }
        }
        Ok(())
    }

    fn run<F>(&mut self, visit: &mut F) -> Flow
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        self.check_budget()?;
        if self.closed {
            self.cycle_buf.clear();
            self.cycle_buf.extend(
                (0..self.state.len()).filter(|&e| self.state[e] == EdgeState::In),
            );
            return Ok(visit(&self.cycle_buf));
        }
        if !self.still_connected() {
            return Ok(ControlFlow::Continue(()));
        }
        let Some(e) = self.choose_edge() else {
            return Ok(ControlFlow::Continue(()));
        };
        for take in [true, false] {
            let mark = self.trail.len();
            let step = if take { self.set_in(e) } else { self.set_out(e) };
            let ok = match step {
                Step::Fail => false,
                Step::Closed => true,
                Step::Ok => self.propagate(),
            };
            let flow = if ok { self.run(visit) } else { Ok(ControlFlow::Continue(())) };
            self.undo_to(mark);
            if flow? == ControlFlow::Break(()) {
                return Ok(ControlFlow::Break(()));
            }
        }
        Ok(ControlFlow::Continue(()))
    }
}
