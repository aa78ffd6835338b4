use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::partition::{noncrossing_pair_partitions, rotation_orbits};
use super::tile::{closes_single_cycle, end_tiles, internal_tiles, start_partition, transfer_step, Tile};
use super::{TerminalPartition, TransferError, MAX_WIDTH};

/// `M`, `v_s` and `v_f` for crossing type `2c` on width `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferSystem {
    pub width: usize,
    pub pairs: usize,
    /// Indexed by rotation orbits when set, by single partitions otherwise.
    pub reduced: bool,
    /// Orbit representatives, or all partitions, in sorted order.
    pub index: Vec<TerminalPartition>,
    pub matrix: Vec<Vec<BigUint>>,
    pub start: Vec<BigUint>,
    pub finish: Vec<BigUint>,
}

impl TransferSystem {
    pub fn dim(&self) -> usize {
        self.index.len()
    }

    /// `v_s^T M^k v_f`, using repeated squaring.
    pub fn count(&self, k: u64) -> BigUint {
        let mv = mat_vec(&mat_pow(&self.matrix, k), &self.finish);
        dot(&self.start, &mv)
    }

    /// `v_s^T M^j v_f` for `j = 0..=k`.
    pub fn counts_up_to(&self, k: usize) -> Vec<BigUint> {
        let mut row = self.start.clone();
        let mut out = Vec::with_capacity(k + 1);
        for _ in 0..=k {
            out.push(dot(&row, &self.finish));
            row = vec_mat(&row, &self.matrix);
        }
        out
    }

    /// Stable text form: the index, `M`, `v_s` and `v_f`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let kind = if self.reduced { "orbits" } else { "partitions" };
        let _ = writeln!(out, "w = {}, c = {}, {} {}", self.width, self.pairs, self.dim(), kind);
        for (i, p) in self.index.iter().enumerate() {
            let _ = writeln!(out, "  [{i}] {p}");
        }
        let line = |v: &[BigUint]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        let _ = writeln!(out, "M =");
        for row in &self.matrix {
            let _ = writeln!(out, "  {}", line(row));
        }
        let _ = writeln!(out, "v_s = {}", line(&self.start));
        let _ = writeln!(out, "v_f = {}", line(&self.finish));
        out
    }
}

/// Tile lists and the column index for one `(w, c)`: anything needed to
/// compute a row of `M` for an arbitrary partition.
pub struct TransferBuilder {
    width: usize,
    pairs: usize,
    reduced: bool,
    index: Vec<TerminalPartition>,
    column: HashMap<TerminalPartition, usize>,
    by_left: HashMap<u32, Vec<Tile>>,
    ends: Vec<Tile>,
}

impl TransferBuilder {
    pub fn new(w: usize, c: usize, reduced: bool) -> Result<Self, TransferError> {
        if w > MAX_WIDTH {
            return Err(TransferError::WidthTooLarge(w));
        }
        let parts = noncrossing_pair_partitions(w, c)?;
        let (index, column) = if reduced {
            let orbits = rotation_orbits(w, &parts)?;
            let mut column = HashMap::new();
            for (i, o) in orbits.iter().enumerate() {
                for m in &o.members {
                    column.insert(m.clone(), i);
                }
            }
            (orbits.into_iter().map(|o| o.representative).collect(), column)
        } else {
            let column = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
            (parts, column)
        };
        let mut by_left: HashMap<u32, Vec<Tile>> = HashMap::new();
        for t in internal_tiles(w, c)? {
            by_left.entry(t.left_terminals).or_default().push(t);
        }
        Ok(TransferBuilder {
            width: w,
            pairs: c,
            reduced,
            index,
            column,
            by_left,
            ends: end_tiles(w, c)?,
        })
    }

    pub fn index(&self) -> &[TerminalPartition] {
        &self.index
    }

    /// Column of `p` in the system, i.e. its orbit in the reduced case.
    pub fn column_of(&self, p: &TerminalPartition) -> Result<usize, TransferError> {
        self.column
            .get(p)
            .copied()
            .ok_or_else(|| TransferError::Unindexed(p.to_string()))
    }

    /// Internal tiles whose left terminals match `pi`, including those that
    /// would close a cycle early.
    pub fn matching_tiles(&self, pi: &TerminalPartition) -> &[Tile] {
        self.by_left.get(&pi.terminal_mask()).map_or(&[], Vec::as_slice)
    }

    /// Tiles that extend `pi` without closing a cycle, with the partition
    /// each one produces.
    pub fn consistent_tiles(&self, pi: &TerminalPartition) -> Result<Vec<(&Tile, TerminalPartition)>, TransferError> {
        let mut out = Vec::new();
        for t in self.matching_tiles(pi) {
            if let Some(next) = transfer_step(self.width, pi, t)? {
                out.push((t, next));
            }
        }
        Ok(out)
    }

    /// Number of tiles taking `pi` into each column.
    pub fn row_for(&self, pi: &TerminalPartition) -> Result<Vec<BigUint>, TransferError> {
        let mut row = vec![0u64; self.index.len()];
        for (_, next) in self.consistent_tiles(pi)? {
            row[self.column_of(&next)?] += 1;
        }
        Ok(row.into_iter().map(BigUint::from).collect())
    }

    /// Number of end tiles closing `pi` into a single cycle.
    pub fn finish_for(&self, pi: &TerminalPartition) -> Result<BigUint, TransferError> {
        let mut n = 0u64;
        for t in &self.ends {
            if closes_single_cycle(pi, t)? {
                n += 1;
            }
        }
        Ok(BigUint::from(n))
    }

    pub fn build(&self) -> Result<TransferSystem, TransferError> {
        let matrix = self.index.iter().map(|p| self.row_for(p)).collect::<Result<Vec<_>, _>>()?;
        let mut start = vec![BigUint::zero(); self.index.len()];
        for t in &self.ends {
            start[self.column_of(&start_partition(t))?] += 1u32;
        }
        let finish = self.index.iter().map(|p| self.finish_for(p)).collect::<Result<Vec<_>, _>>()?;
        Ok(TransferSystem {
            width: self.width,
            pairs: self.pairs,
            reduced: self.reduced,
            index: self.index.clone(),
            matrix,
            start,
            finish,
        })
    }
}

pub fn build_transfer_system(w: usize, c: usize, reduced: bool) -> Result<TransferSystem, TransferError> {
    TransferBuilder::new(w, c, reduced)?.build()
}

fn dot(a: &[BigUint], b: &[BigUint]) -> BigUint {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn mat_vec(m: &[Vec<BigUint>], v: &[BigUint]) -> Vec<BigUint> {
    m.iter().map(|row| dot(row, v)).collect()
}

fn vec_mat(v: &[BigUint], m: &[Vec<BigUint>]) -> Vec<BigUint> {
    let n = m.len();
    (0..n)
        .map(|j| v.iter().zip(m).filter(|(x, _)| !x.is_zero()).map(|(x, row)| x * &row[j]).sum())
        .collect()
}

fn mat_mul(a: &[Vec<BigUint>], b: &[Vec<BigUint>]) -> Vec<Vec<BigUint>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n)
                        .filter(|&l| !a[i][l].is_zero())
                        .map(|l| &a[i][l] * &b[l][j])
                        .sum()
                })
                .collect()
        })
        .collect()
}

fn mat_pow(m: &[Vec<BigUint>], mut k: u64) -> Vec<Vec<BigUint>> {
    let n = m.len();
    let mut result: Vec<Vec<BigUint>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigUint::one() } else { BigUint::zero() }).collect())
        .collect();
    let mut base = m.to_vec();
    while k > 0 {
        if k & 1 == 1 {
            result = mat_mul(&result, &base);
        }
        k >>= 1;
        if k > 0 {
            base = mat_mul(&base, &base);
        }
    }
    result
}
