use rayon::prelude::*;

use crate::dsu::DisjointSets;

use super::{TerminalPartition, TransferError, MAX_WIDTH};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TileKind {
    Internal,
    End,
}

/// A path endpoint at spoke position `i`, on the side facing the start
/// (`Left`) or the end (`Right`) of the tube. End tiles only use `Left`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Endpoint {
    Left(usize),
    Right(usize),
}

/// The part of a Hamilton cycle inside one layer.
///
/// Internal layers are the `2w`-cycle `v_0 w_1 v_1 w_2 … v_{w-1} w_0`, where
/// `v_i` carries the left spoke `i` and `w_i` the right spoke `i`. Bit `i`
/// of `edges` is `v_i w_i`, bit `w + i` is `v_i w_{i+1}`. End layers are the
/// `w`-cycle on positions `0..w`; bit `i` is the edge from `i` to `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tile {
    pub kind: TileKind,
    pub width: usize,
    pub edges: u32,
    /// Degree-1 vertices on the left side (all of them, for end tiles).
    pub left_terminals: u32,
    pub right_terminals: u32,
    pub paths: Vec<(Endpoint, Endpoint)>,
}

impl Tile {
    pub fn terminal_count(&self) -> usize {
        (self.left_terminals.count_ones() + self.right_terminals.count_ones()) as usize
    }
}

fn check_params(w: usize, c: usize) -> Result<(), TransferError> {
    if c == 0 || 2 * c > w {
        return Err(TransferError::BadParameters(format!(
            "need 1 <= 2c <= w, got w = {w}, c = {c}"
        )));
    }
    if w > MAX_WIDTH {
        return Err(TransferError::WidthTooLarge(w));
    }
    Ok(())
}

fn rotl(x: u32, w: usize) -> u32 {
    let full = (1u32 << w) - 1;
    ((x << 1) | (x >> (w - 1))) & full
}

/// Maximal runs of present edges on a cycle of `len` nodes where edge `t`
/// joins nodes `t` and `t + 1`. At least one edge must be absent.
fn runs(cycle_mask: u64, len: usize) -> Vec<(usize, usize)> {
    let gap = (0..len).find(|&t| cycle_mask >> t & 1 == 0).expect("tile is not a full cycle");
    let mut out = Vec::new();
    let mut start = None;
    for step in 1..=len {
        let t = (gap + step) % len;
        let present = cycle_mask >> t & 1 == 1;
        match (present, start) {
            (true, None) => start = Some(t),
            (false, Some(s)) => {
                out.push((s, t));
                start = None;
            }
            _ => {}
        }
    }
    out
}

/// All internal tiles with `2c` terminals on each side, ordered by edge mask.
pub fn internal_tiles(w: usize, c: usize) -> Result<Vec<Tile>, TransferError> {
    check_params(w, c)?;
    let full = (1u32 << w) - 1;
    let tiles = (0..1u64 << (2 * w))
        .into_par_iter()
        .filter_map(|mask| {
            let mask = mask as u32;
            let a = mask & full;
            let b = mask >> w;
            let b_shift = rotl(b, w);
            if a | b != full || a | b_shift != full {
                return None;
            }
            let left = a ^ b;
            let right = a ^ b_shift;
            if left.count_ones() as usize != 2 * c {
                return None;
            }
            Some(internal_tile(w, mask, left, right))
        })
        .collect();
    Ok(tiles)
}

fn internal_tile(w: usize, mask: u32, left: u32, right: u32) -> Tile {
    // Cycle node 2i is v_i, node 2i+1 is w_{i+1}; cycle edge 2i is b_i and
    // cycle edge 2i+1 is a_{i+1}.
    let mut cycle = 0u64;
    for i in 0..w {
        if mask >> (w + i) & 1 == 1 {
            cycle |= 1 << (2 * i);
        }
        if mask >> ((i + 1) % w) & 1 == 1 {
            cycle |= 1 << (2 * i + 1);
        }
    }
    let node = |x: usize| {
        if x.is_multiple_of(2) {
            Endpoint::Left(x / 2)
        } else {
            Endpoint::Right((x / 2 + 1) % w)
        }
    };
    let mut paths: Vec<(Endpoint, Endpoint)> = runs(cycle, 2 * w)
        .into_iter()
        .map(|(s, e)| {
            let (x, y) = (node(s), node(e));
            (x.min(y), x.max(y))
        })
        .collect();
    paths.sort_unstable();
    Tile {
        kind: TileKind::Internal,
        width: w,
        edges: mask,
        left_terminals: left,
        right_terminals: right,
        paths,
    }
}

/// All end tiles with exactly `2c` terminals, ordered by edge mask. The same
/// list serves both ends of the tube.
pub fn end_tiles(w: usize, c: usize) -> Result<Vec<Tile>, TransferError> {
    check_params(w, c)?;
    let full = (1u32 << w) - 1;
    let tiles = (0..1u32 << w)
        .filter_map(|mask| {
            // Vertex i meets edges i - 1 and i.
            let prev = rotl(mask, w);
            if mask | prev != full {
                return None;
            }
            let terminals = mask ^ prev;
            if terminals.count_ones() as usize != 2 * c {
                return None;
            }
            let mut paths: Vec<(Endpoint, Endpoint)> = runs(mask as u64, w)
                .into_iter()
                .map(|(s, e)| (Endpoint::Left(s.min(e)), Endpoint::Left(s.max(e))))
                .collect();
            paths.sort_unstable();
            Some(Tile {
                kind: TileKind::End,
                width: w,
                edges: mask,
                left_terminals: terminals,
                right_terminals: 0,
                paths,
            })
        })
        .collect();
    Ok(tiles)
}

/// Terminal partition produced by a start tile.
pub fn start_partition(tile: &Tile) -> TerminalPartition {
    let pairs = tile.paths.iter().map(|&(a, b)| match (a, b) {
        (Endpoint::Left(x), Endpoint::Left(y)) => (x, y),
        _ => unreachable!("end tiles have left endpoints only"),
    });
    TerminalPartition::new(tile.width, pairs).expect("path endpoints are distinct")
}

fn node_id(w: usize, e: Endpoint) -> usize {
    match e {
        Endpoint::Left(i) => i,
        Endpoint::Right(i) => w + i,
    }
}

/// Pushes partition `pi` through internal tile `t`. Returns `None` when the
/// tile does not fit `pi` or when joining them closes a cycle early.
pub fn transfer_step(
    w: usize,
    pi: &TerminalPartition,
    t: &Tile,
) -> Result<Option<TerminalPartition>, TransferError> {
    for found in [pi.width(), t.width] {
        if found != w {
            return Err(TransferError::WidthMismatch { expected: w, found });
        }
    }
    if t.kind != TileKind::Internal {
        return Err(TransferError::BadParameters("transfer_step needs an internal tile".into()));
    }
    if t.left_terminals != pi.terminal_mask() {
        return Ok(None);
    }
    let mut dsu = DisjointSets::new(2 * w);
    for &(a, b) in pi.pairs() {
        dsu.union(a, b);
    }
    for &(x, y) in &t.paths {
        if !dsu.union(node_id(w, x), node_id(w, y)) {
            return Ok(None);
        }
    }
    let rights: Vec<usize> = (0..w).filter(|&i| t.right_terminals >> i & 1 == 1).collect();
    let mut pairs = Vec::with_capacity(rights.len() / 2);
    for (idx, &i) in rights.iter().enumerate() {
        let root = dsu.find(w + i);
        if let Some(&j) = rights[idx + 1..].iter().find(|&&j| dsu.find(w + j) == root) {
            pairs.push((i, j));
        }
    }
    Ok(Some(TerminalPartition::new(w, pairs)?))
}

/// Whether end tile `t` closes partition `pi` into exactly one cycle.
pub fn closes_single_cycle(pi: &TerminalPartition, t: &Tile) -> Result<bool, TransferError> {
    let w = pi.width();
    if t.width != w {
        return Err(TransferError::WidthMismatch { expected: w, found: t.width });
    }
    if t.kind != TileKind::End {
        return Err(TransferError::BadParameters("closing needs an end tile".into()));
    }
    if t.left_terminals != pi.terminal_mask() {
        return Ok(false);
    }
    let mut dsu = DisjointSets::new(w);
    for &(a, b) in pi.pairs() {
        dsu.union(a, b);
    }
    for &(x, y) in &t.paths {
        dsu.union(node_id(w, x), node_id(w, y));
    }
    // 2c terminals joined by 2c edges form one cycle exactly when connected.
    let mut terminals = (0..w).filter(|&i| t.left_terminals >> i & 1 == 1);
    let first = terminals.next().expect("c >= 1");
    Ok(terminals.all(|i| dsu.same(first, i)))
}
