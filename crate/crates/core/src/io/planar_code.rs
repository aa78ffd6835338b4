//! plantri's `planar_code`: an optional `>>planar_code<<` header, then per
//! graph one byte `n` followed by, for each vertex `1..=n`, its neighbors
//! in rotation order as 1-based bytes terminated by `0`.
//!
//! The rotation order is read but not kept; nothing downstream uses the
//! embedding. Only the one-byte form (`n <= 255`) is supported.

use std::io::{Read, Write};

use crate::graph::Graph;

use super::IoError;

pub const PLANAR_CODE_HEADER: &[u8] = b">>planar_code<<";

pub fn read_planar_code<R: Read>(mut source: R) -> Result<Vec<Graph>, IoError> {
    let mut bytes = Vec::new();
    source.read_to_end(&mut bytes)?;
    parse_planar_code(&bytes)
}

pub fn parse_planar_code(bytes: &[u8]) -> Result<Vec<Graph>, IoError> {
    let mut pos = 0;
    if bytes.starts_with(b">>") {
        if !bytes.starts_with(PLANAR_CODE_HEADER) {
            let end = bytes.iter().position(|&b| b == b'<').unwrap_or(bytes.len().min(20));
            return Err(IoError::BadHeader(String::from_utf8_lossy(&bytes[..end]).into_owned()));
        }
        pos = PLANAR_CODE_HEADER.len();
    }
    let mut graphs = Vec::new();
    while pos < bytes.len() {
        let graph_index = graphs.len();
        let n = bytes[pos] as usize;
        pos += 1;
        if n == 0 {
            return Err(IoError::UnsupportedSize { graph: graph_index });
        }
        let mut lists = Vec::with_capacity(n);
        for _ in 0..n {
            let mut list = Vec::with_capacity(3);
            loop {
                let &b = bytes
                    .get(pos)
                    .ok_or(IoError::TruncatedStream { graph: graph_index })?;
                pos += 1;
                if b == 0 {
                    break;
                }
                let nb = b as usize;
                if nb > n {
                    return Err(IoError::BadNeighbor {
                        graph: graph_index,
                        neighbor: nb,
                        n,
                    });
                }
                list.push(nb - 1);
            }
            lists.push(list);
        }
        graphs.push(graph_from_lists(graph_index, &lists)?);
    }
    Ok(graphs)
}

fn graph_from_lists(graph: usize, lists: &[Vec<usize>]) -> Result<Graph, IoError> {
    let multiplicity = |a: usize, b: usize| lists[a].iter().filter(|&&x| x == b).count();
    let mut edges = Vec::new();
    for (u, list) in lists.iter().enumerate() {
        for &v in list {
            if multiplicity(u, v) != multiplicity(v, u) {
                return Err(IoError::AsymmetricAdjacency { graph, u, v });
            }
            if u <= v {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::new(lists.len(), edges)?)
}

/// Writes graphs in planar_code with the header. Neighbors are emitted in
/// ascending order, which is a valid rotation only if the caller's graph
/// happens to be embedded that way; readers here ignore rotations.
pub fn write_planar_code<W: Write>(graphs: &[Graph], mut sink: W) -> Result<(), IoError> {
    sink.write_all(PLANAR_CODE_HEADER)?;
    for (index, g) in graphs.iter().enumerate() {
        if g.n() == 0 || g.n() > 255 {
            return Err(IoError::UnsupportedSize { graph: index });
        }
        let mut buf = Vec::with_capacity(1 + g.n() + 2 * g.edge_count());
        buf.push(g.n() as u8);
        for v in 0..g.n() {
            buf.extend(g.neighbors(v).iter().map(|&u| (u + 1) as u8));
            buf.push(0);
        }
        sink.write_all(&buf)?;
    }
    Ok(())
}
