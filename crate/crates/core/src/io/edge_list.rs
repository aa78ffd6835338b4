use std::io::{self, BufRead, Write};

use crate::graph::Graph;

use super::IoError;

/// Writes `n m` followed by one `u v` line per edge, in canonical order.
pub fn write_edge_list<W: Write>(g: &Graph, mut sink: W) -> io::Result<()> {
    writeln!(sink, "{} {}", g.n(), g.edge_count())?;
    for &(u, v) in g.edges() {
        writeln!(sink, "{u} {v}")?;
    }
    Ok(())
}

pub fn edge_list_string(g: &Graph) -> String {
    let mut buf = Vec::new();
    write_edge_list(g, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("edge list is ASCII")
}

pub fn read_edge_list<R: BufRead>(source: R) -> Result<Graph, IoError> {
    let mut lines = source.lines().enumerate();
    let mut next_pair = |what: &str| -> Result<Option<(usize, usize, usize)>, IoError> {
        for (idx, line) in lines.by_ref() {
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            let lineno = idx + 1;
            let mut fields = trimmed.split_whitespace();
            let mut field = || -> Result<usize, IoError> {
                let tok = fields.next().ok_or_else(|| IoError::Parse {
                    line: lineno,
                    message: format!("expected two integers on the {what} line"),
                })?;
                tok.parse().map_err(|_| IoError::Parse {
                    line: lineno,
                    message: format!("{tok:?} is not a non-negative integer"),
                })
            };
            let a = field()?;
            let b = field()?;
            if let Some(extra) = fields.next() {
                return Err(IoError::Parse {
                    line: lineno,
                    message: format!("unexpected trailing token {extra:?}"),
                });
            }
            return Ok(Some((lineno, a, b)));
        }
        Ok(None)
    };

    let (_, n, m) = next_pair("header")?.ok_or_else(|| IoError::Parse {
        line: 1,
        message: "missing \"n m\" header".into(),
    })?;
    let mut edges = Vec::with_capacity(m);
    while let Some((lineno, u, v)) = next_pair("edge")? {
        if u >= v || v >= n {
            return Err(IoError::Parse {
                line: lineno,
                message: format!("edge {u} {v} must satisfy 0 <= u < v < {n}"),
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(IoError::InconsistentCounts {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(Graph::new(n, edges)?)
}
