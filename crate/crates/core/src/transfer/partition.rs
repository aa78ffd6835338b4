use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::TransferError;

/// A set of disjoint pairs on positions `0..width`; every other position
/// is a singleton. Stored canonically as a sorted list of `(a, b)`, `a < b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TerminalPartition {
    width: usize,
    pairs: Vec<(usize, usize)>,
}

impl TerminalPartition {
    /// Canonicalises `pairs`; they must be disjoint and inside `0..width`.
    pub fn new(width: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, TransferError> {
        if width > super::MAX_WIDTH {
            return Err(TransferError::WidthTooLarge(width));
        }
        let mut used = vec![false; width];
        let mut list = Vec::new();
        for (a, b) in pairs {
            let (a, b) = (a.min(b), a.max(b));
            if b >= width || a == b || used[a] || used[b] {
                return Err(TransferError::BadPartition(format!(
                    "pair ({a}, {b}) is not a fresh pair inside 0..{width}"
                )));
            }
            used[a] = true;
            used[b] = true;
            list.push((a, b));
        }
        list.sort_unstable();
        Ok(TerminalPartition { width, pairs: list })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    /// Bit `i` set iff position `i` lies in a pair.
    pub fn terminal_mask(&self) -> u32 {
        self.pairs.iter().fold(0, |m, &(a, b)| m | (1 << a) | (1 << b))
    }

    /// Whether two pairs interleave in the order `0..width`.
    pub fn is_noncrossing(&self) -> bool {
        self.pairs.iter().enumerate().all(|(i, &(a, b))| {
            self.pairs[i + 1..]
                .iter()
                .all(|&(c, d)| !(a < c && c < b && b < d) && !(c < a && a < d && d < b))
        })
    }

    /// Image under `i ↦ i + shift (mod width)`.
    pub fn rotated(&self, shift: usize) -> Self {
        let w = self.width;
        let mut pairs: Vec<(usize, usize)> = self
            .pairs
            .iter()
            .map(|&(a, b)| {
                let (x, y) = ((a + shift) % w, (b + shift) % w);
                (x.min(y), x.max(y))
            })
            .collect();
        pairs.sort_unstable();
        TerminalPartition { width: w, pairs }
    }

    /// Lexicographically least pair list among all rotations.
    pub fn canonical_rotation(&self) -> Self {
        (0..self.width.max(1))
            .map(|s| self.rotated(s))
            .min()
            .expect("at least one rotation")
    }
}

/// Cells listed by least element, positions concatenated when the width
/// fits in single digits (`{04|13|2}`), comma-separated otherwise.
impl fmt::Display for TerminalPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut cells: Vec<Vec<usize>> = Vec::new();
        let mut paired = vec![false; self.width];
        for &(a, b) in &self.pairs {
            paired[a] = true;
            paired[b] = true;
            cells.push(vec![a, b]);
        }
        cells.extend((0..self.width).filter(|&i| !paired[i]).map(|i| vec![i]));
        cells.sort();
        let sep = if self.width <= 10 { "" } else { "," };
        let body: Vec<String> = cells
            .iter()
            .map(|c| c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep))
            .collect();
        write!(f, "{{{}}}", body.join("|"))
    }
}

/// Parses the `Display` form; every position `0..width` must appear once,
/// which fixes the width.
impl FromStr for TerminalPartition {
    type Err = TransferError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || TransferError::BadPartition(format!("cannot parse {s:?}"));
        let inner = s.trim().strip_prefix('{').and_then(|r| r.strip_suffix('}')).ok_or_else(bad)?;
        let raw: Vec<&str> = inner.split('|').map(str::trim).collect();
        // Widths above 10 write positions in full, separated by commas.
        let wide = inner.contains(',') || raw.len() > 10;
        let cells: Vec<Vec<usize>> = raw
            .iter()
            .map(|cell| {
                if wide {
                    cell.split(',').map(|t| t.trim().parse().map_err(|_| bad())).collect()
                } else {
                    cell.chars()
                        .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                        .collect()
                }
            })
            .collect::<Result<_, _>>()?;
        let width: usize = cells.iter().map(Vec::len).sum();
        let mut pairs = Vec::new();
        let mut seen = vec![false; width];
        for cell in &cells {
            for &x in cell {
                if x >= width || seen[x] {
                    return Err(bad());
                }
                seen[x] = true;
            }
            match cell.as_slice() {
                [_] => {}
                [a, b] => pairs.push((*a, *b)),
                _ => return Err(bad()),
            }
        }
        TerminalPartition::new(width, pairs)
    }
}

/// All non-crossing partitions of `0..w` into `c` pairs and `w - 2c` singletons, sorted.
pub fn noncrossing_pair_partitions(w: usize, c: usize) -> Result<Vec<TerminalPartition>, TransferError> {
    if c == 0 || 2 * c > w {
        return Err(TransferError::BadParameters(format!(
            "need 1 <= 2c <= w, got w = {w}, c = {c}"
        )));
    }
    if w > super::MAX_WIDTH {
        return Err(TransferError::WidthTooLarge(w));
    }
    let mut out = Vec::new();
    let mut pairs = Vec::new();
    extend_matching(w, c, 0, &mut vec![false; w], &mut pairs, &mut out);
    out.sort();
    Ok(out)
}

fn extend_matching(
    w: usize,
    c: usize,
    from: usize,
    used: &mut Vec<bool>,
    pairs: &mut Vec<(usize, usize)>,
    out: &mut Vec<TerminalPartition>,
) {
    if pairs.len() == c {
        let p = TerminalPartition::new(w, pairs.iter().copied()).expect("disjoint by construction");
        if p.is_noncrossing() {
            out.push(p);
        }
        return;
    }
    for a in from..w {
        if used[a] {
            continue;
        }
        used[a] = true;
        for b in a + 1..w {
            if used[b] {
                continue;
            }
            used[b] = true;
            pairs.push((a, b));
            extend_matching(w, c, a + 1, used, pairs, out);
            pairs.pop();
            used[b] = false;
        }
        used[a] = false;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub representative: TerminalPartition,
    /// Sorted members; `members[0] == representative`.
    pub members: Vec<TerminalPartition>,
}

impl Orbit {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Splits `parts` into orbits of the rotation `i ↦ i + 1 (mod w)`, sorted by representative.
pub fn rotation_orbits(w: usize, parts: &[TerminalPartition]) -> Result<Vec<Orbit>, TransferError> {
    let mut sorted: Vec<TerminalPartition> = parts.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut by_rep: BTreeMap<TerminalPartition, Vec<TerminalPartition>> = BTreeMap::new();
    for p in &sorted {
        if p.width() != w {
            return Err(TransferError::WidthMismatch { expected: w, found: p.width() });
        }
        let image = p.rotated(1);
        if sorted.binary_search(&image).is_err() {
            return Err(TransferError::NotRotationClosed(p.to_string()));
        }
        by_rep.entry(p.canonical_rotation()).or_default().push(p.clone());
    }
    Ok(by_rep
        .into_iter()
        .map(|(representative, members)| Orbit { representative, members })
        .collect())
}
