//! Partitions, cells, dominoes placed on diagrams, and the 2-core / 2-quotient
//! machinery.
//!
//! Diagrams use English coordinates: rows are numbered top-down and columns
//! left-right, both starting at 1.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty sequence is ∅.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    pub fn transpose(self) -> Self {
        Cell::new(self.col, self.row)
    }

    pub fn is_adjacent(self, other: Cell) -> bool {
        (self.row == other.row && self.col.abs_diff(other.col) == 1)
            || (self.col == other.col && self.row.abs_diff(other.row) == 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// Two edge-adjacent cells, identified by the topmost-leftmost one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Domino {
    pub anchor: Cell,
    pub orientation: Orientation,
}

impl Domino {
    pub const fn horizontal(row: usize, col: usize) -> Self {
        Domino { anchor: Cell::new(row, col), orientation: Orientation::Horizontal }
    }

    pub const fn vertical(row: usize, col: usize) -> Self {
        Domino { anchor: Cell::new(row, col), orientation: Orientation::Vertical }
    }

    pub fn from_cells(a: Cell, b: Cell) -> Result<Self> {
        if !a.is_adjacent(b) {
            return Err(Error::InvalidDomino(format!("{a:?} and {b:?} are not adjacent")));
        }
        let anchor = a.min(b);
        let orientation =
            if a.row == b.row { Orientation::Horizontal } else { Orientation::Vertical };
        Ok(Domino { anchor, orientation })
    }

    pub fn cells(&self) -> [Cell; 2] {
        let Cell { row, col } = self.anchor;
        match self.orientation {
            Orientation::Horizontal => [Cell::new(row, col), Cell::new(row, col + 1)],
            Orientation::Vertical => [Cell::new(row, col), Cell::new(row + 1, col)],
        }
    }

    pub fn is_vertical(&self) -> bool {
        self.orientation == Orientation::Vertical
    }

    pub fn transpose(&self) -> Self {
        let orientation = match self.orientation {
            Orientation::Horizontal => Orientation::Vertical,
            Orientation::Vertical => Orientation::Horizontal,
        };
        Domino { anchor: self.anchor.transpose(), orientation }
    }

    pub fn left_col(&self) -> usize {
        self.anchor.col
    }

    pub fn right_col(&self) -> usize {
        match self.orientation {
            Orientation::Horizontal => self.anchor.col + 1,
            Orientation::Vertical => self.anchor.col,
        }
    }

    pub fn top_row(&self) -> usize {
        self.anchor.row
    }

    pub fn bottom_row(&self) -> usize {
        match self.orientation {
            Orientation::Horizontal => self.anchor.row,
            Orientation::Vertical => self.anchor.row + 1,
        }
    }

    /// Every cell of `self` lies in a column strictly left of every cell of `other`.
    pub fn strictly_left_of(&self, other: &Domino) -> bool {
        self.right_col() < other.left_col()
    }

    /// Every cell of `self` lies in a row strictly above every cell of `other`.
    pub fn strictly_above(&self, other: &Domino) -> bool {
        self.bottom_row() < other.top_row()
    }
}

/// Statistics of a shape: odd rows, odd columns, and the two floor sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeStats {
    pub o: usize,
    pub o_conj: usize,
    pub d: usize,
    pub v: usize,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Length of row `row` (1-indexed); zero past the last row.
    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return usize::MAX;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    /// Length of column `col` (1-indexed).
    pub fn col_len(&self, col: usize) -> usize {
        if col == 0 {
            return usize::MAX;
        }
        self.parts.iter().take_while(|&&p| p >= col).count()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        Partition { parts: (1..=width).map(|c| self.col_len(c)).collect() }
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |c| Cell::new(i + 1, c)))
    }

    pub fn cell_set(&self) -> BTreeSet<Cell> {
        self.cells().collect()
    }

    /// The partition whose diagram is exactly `cells`, if such a partition exists.
    pub fn from_cells(cells: &BTreeSet<Cell>) -> Option<Partition> {
        let rows = cells.iter().map(|c| c.row).max().unwrap_or(0);
        let mut parts = vec![0usize; rows];
        for c in cells {
            if c.row == 0 || c.col == 0 {
                return None;
            }
            parts[c.row - 1] += 1;
        }
        let p = Partition::new(parts).ok()?;
        if p.cells().all(|c| cells.contains(&c)) && p.size() == cells.len() {
            Some(p)
        } else {
            None
        }
    }

    /// Cells of `self` not in `inner`, row-major.
    pub fn skew_cells(&self, inner: &Partition) -> Vec<Cell> {
        self.cells().filter(|c| !inner.contains_cell(*c)).collect()
    }

    /// The domino `self / inner`, if the skew shape is exactly one domino.
    pub fn skew_domino(&self, inner: &Partition) -> Option<Domino> {
        if !self.contains(inner) {
            return None;
        }
        match self.skew_cells(inner).as_slice() {
            [a, b] => Domino::from_cells(*a, *b).ok(),
            _ => None,
        }
    }

    /// `self` with `cells` added, if the result is a partition.
    pub fn with_cells(&self, cells: &[Cell]) -> Option<Partition> {
        let mut set = self.cell_set();
        for c in cells {
            if !set.insert(*c) {
                return None;
            }
        }
        Partition::from_cells(&set)
    }

    /// `self` with two cells appended to row `row` (1-indexed; may be one past the end).
    pub fn add_two_to_row(&self, row: usize) -> Option<Partition> {
        let len = self.row_len(row);
        self.with_cells(&[Cell::new(row, len + 1), Cell::new(row, len + 2)])
    }

    /// `self` with two cells appended to column `col`.
    pub fn add_two_to_col(&self, col: usize) -> Option<Partition> {
        let len = self.col_len(col);
        self.with_cells(&[Cell::new(len + 1, col), Cell::new(len + 2, col)])
    }

    pub fn staircase(r: usize) -> Partition {
        Partition { parts: (1..=r).rev().collect() }
    }

    /// `Some(r)` when `self` is the staircase δ_r.
    pub fn staircase_rank(&self) -> Option<usize> {
        let r = self.len();
        (self.parts.iter().enumerate().all(|(i, &p)| p == r - i)).then_some(r)
    }

    /// All μ ⊋ λ with μ/λ a single domino, sorted by placement.
    pub fn domino_successors(&self) -> Vec<(Partition, Domino)> {
        let mut out = Vec::new();
        for row in 1..=self.len() + 1 {
            let len = self.row_len(row);
            if row == 1 || self.row_len(row - 1) >= len + 2 {
                let d = Domino::horizontal(row, len + 1);
                let mut parts = self.parts.clone();
                if row > parts.len() {
                    parts.push(0);
                }
                parts[row - 1] += 2;
                out.push((Partition { parts }, d));
            }
            if self.row_len(row + 1) == len && (row == 1 || self.row_len(row - 1) > len) {
                let d = Domino::vertical(row, len + 1);
                let mut parts = self.parts.clone();
                parts.resize(parts.len().max(row + 1), 0);
                parts[row - 1] += 1;
                parts[row] += 1;
                out.push((Partition { parts }, d));
            }
        }
        out.sort_by_key(|(_, d)| *d);
        out
    }

    /// All μ ⊊ λ with λ/μ a single domino, sorted by placement.
    pub fn domino_predecessors(&self) -> Vec<(Partition, Domino)> {
        let mut out = Vec::new();
        for row in 1..=self.len() {
            let len = self.row_len(row);
            if len >= 2 && self.row_len(row + 1) + 2 <= len {
                let mut parts = self.parts.clone();
                parts[row - 1] -= 2;
                out.push((Partition::new(parts).expect("removal keeps order"), Domino::horizontal(row, len - 1)));
            }
            if self.row_len(row + 1) == len && self.row_len(row + 2) < len {
                let mut parts = self.parts.clone();
                parts[row - 1] -= 1;
                parts[row] -= 1;
                out.push((Partition::new(parts).expect("removal keeps order"), Domino::vertical(row, len)));
            }
        }
        out.sort_by_key(|(_, d)| *d);
        out
    }

    /// The 2-core, obtained by stripping dominoes off the rim until none is removable.
    pub fn two_core(&self) -> Partition {
        let mut current = self.clone();
        while let Some((smaller, _)) = current.domino_predecessors().into_iter().next() {
            current = smaller;
        }
        current
    }

    /// The rank `r` of the 2-core δ_r.
    pub fn core_rank(&self) -> usize {
        self.two_core().staircase_rank().expect("every 2-core is a staircase")
    }

    /// The 2-quotient (λ⁽⁰⁾, λ⁽¹⁾) read off a 2-abacus with an even number of beads.
    pub fn two_quotient(&self) -> (Partition, Partition) {
        let beads = self.len() + self.len() % 2;
        let mut runners: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
        for i in 0..beads {
            let beta = self.row_len(i + 1) + beads - 1 - i;
            runners[beta % 2].push(beta / 2);
        }
        let read = |positions: &Vec<usize>| {
            let m = positions.len();
            let parts = positions.iter().enumerate().map(|(j, &p)| p - (m - 1 - j)).collect();
            Partition::new(parts).expect("bead positions are strictly decreasing")
        };
        (read(&runners[0]), read(&runners[1]))
    }

    pub fn stats(&self) -> ShapeStats {
        let odd = |p: &Partition| p.parts.iter().filter(|&&x| x % 2 == 1).count();
        ShapeStats {
            o: odd(self),
            o_conj: odd(&self.conjugate()),
            d: self.parts.iter().skip(1).step_by(2).map(|&x| x / 2).sum(),
            v: self.parts.iter().map(|&x| x / 2).sum(),
        }
    }

    pub fn is_hook(&self) -> bool {
        self.parts.get(1).is_none_or(|&p| p <= 1)
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            for part in (1..=max.min(remaining)).rev() {
                prefix.push(part);
                rec(remaining - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// P_r(n): partitions with 2-core δ_r and |λ| = |δ_r| + 2n, in decreasing lexicographic order.
    pub fn with_core(r: usize, n: usize) -> Vec<Partition> {
        let total = r * (r + 1) / 2 + 2 * n;
        let core = Partition::staircase(r);
        Partition::all_of(total).into_iter().filter(|p| p.two_core() == core).collect()
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Accepts `3,1,1`, `(3,1,1)`, `3 1 1`, `[3,1,1]`, or an empty string / `∅` for the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_matches(|c| matches!(c, '(' | ')' | '[' | ']'));
        if trimmed.is_empty() || trimmed == "∅" || trimmed == "0" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        let mut position = 0;
        for token in trimmed.split(|c: char| c == ',' || c.is_whitespace()) {
            if !token.is_empty() {
                let part = token.parse::<usize>().map_err(|e| Error::Parse {
                    position,
                    message: format!("bad part {token:?}: {e}"),
                })?;
                parts.push(part);
            }
            position += token.len() + 1;
        }
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Brute force: all μ ⊢ |λ|+2 containing λ whose extra cells are adjacent.
    fn successors_oracle(lambda: &Partition) -> Vec<Partition> {
        let mut out: Vec<_> = Partition::all_of(lambda.size() + 2)
            .into_iter()
            .filter(|mu| mu.contains(lambda))
            .filter(|mu| {
                let extra = mu.skew_cells(lambda);
                extra.len() == 2 && extra[0].is_adjacent(extra[1])
            })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn rejects_increasing_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(p(&[2, 1, 0, 0]).parts(), &[2, 1]);
    }

    #[test]
    fn two_core_examples() {
        assert_eq!(p(&[5, 5, 4, 1, 1]).two_core(), Partition::empty());
        assert_eq!(Partition::empty().two_core(), Partition::empty());
        assert_eq!(p(&[2, 1]).two_core(), p(&[2, 1]));
        assert_eq!(p(&[3, 1, 1]).two_core(), p(&[1]));
    }

    fn all_cores(lambda: &Partition, seen: &mut BTreeSet<Partition>) {
        let preds = lambda.domino_predecessors();
        if preds.is_empty() {
            seen.insert(lambda.clone());
        }
        for (mu, _) in preds {
            all_cores(&mu, seen);
        }
    }

    #[test]
    fn two_core_independent_of_removal_order() {
        for n in 0..=10 {
            for lambda in Partition::all_of(n) {
                let mut seen = BTreeSet::new();
                all_cores(&lambda, &mut seen);
                assert_eq!(seen.len(), 1, "{lambda}");
                assert_eq!(seen.into_iter().next().unwrap(), lambda.two_core());
            }
        }
    }

    #[test]
    fn two_quotient_examples() {
        assert_eq!(p(&[2, 2]).two_quotient(), (p(&[1]), p(&[1])));
        assert_eq!(p(&[3, 1, 1]).two_quotient(), (p(&[1]), p(&[1])));
        assert_eq!(Partition::empty().two_quotient(), (Partition::empty(), Partition::empty()));
    }

    #[test]
    fn staircases() {
        assert_eq!(Partition::staircase(0), Partition::empty());
        assert_eq!(Partition::staircase(1), p(&[1]));
        assert_eq!(Partition::staircase(3), p(&[3, 2, 1]));
        assert_eq!(p(&[3, 2, 1]).staircase_rank(), Some(3));
        assert_eq!(p(&[3, 1]).staircase_rank(), None);
    }

    #[test]
    fn shape_stats_examples() {
        let s = Partition::staircase(1).stats();
        assert_eq!((s.o, s.o_conj, s.d), (1, 1, 0));
        assert_eq!(p(&[2, 2]).stats(), ShapeStats { o: 0, o_conj: 0, d: 1, v: 2 });
    }

    #[test]
    fn shape_invariants_up_to_twelve() {
        for n in 0..=12 {
            for lambda in Partition::all_of(n) {
                let core = lambda.two_core();
                assert!(core.staircase_rank().is_some(), "{lambda}");
                let (q0, q1) = lambda.two_quotient();
                assert_eq!(lambda.size(), core.size() + 2 * (q0.size() + q1.size()), "{lambda}");
                let s = lambda.stats();
                assert_eq!(s.d, lambda.conjugate().stats().d, "{lambda}");
                assert_eq!(2 * s.v + s.o, n);
                assert_eq!(lambda.conjugate().conjugate(), lambda);
            }
        }
    }

    #[test]
    fn successors_match_brute_force() {
        assert_eq!(
            Partition::empty().domino_successors(),
            vec![(p(&[2]), Domino::horizontal(1, 1)), (p(&[1, 1]), Domino::vertical(1, 1))]
        );
        for n in 0..=9 {
            for lambda in Partition::all_of(n) {
                let mut got: Vec<_> = lambda.domino_successors().into_iter().map(|(m, _)| m).collect();
                got.sort();
                assert_eq!(got, successors_oracle(&lambda), "{lambda}");
                for (mu, d) in lambda.domino_successors() {
                    assert_eq!(mu.skew_domino(&lambda), Some(d));
                }
            }
        }
    }

    #[test]
    fn successor_examples() {
        let succ: Vec<_> = p(&[1]).domino_successors().into_iter().map(|(m, _)| m).collect();
        assert_eq!(succ, vec![p(&[3]), p(&[1, 1, 1])]);
        let succ: Vec<_> = p(&[2, 1]).domino_successors().into_iter().map(|(m, _)| m).collect();
        assert_eq!(succ, vec![p(&[4, 1]), p(&[2, 1, 1, 1])]);
    }

    #[test]
    fn predecessors_invert_successors() {
        for n in 0..=9 {
            for lambda in Partition::all_of(n) {
                for (mu, d) in lambda.domino_successors() {
                    assert!(mu.domino_predecessors().contains(&(lambda.clone(), d)));
                }
            }
        }
    }

    #[test]
    fn with_core_examples() {
        assert_eq!(Partition::with_core(0, 1), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(Partition::with_core(1, 0), vec![p(&[1])]);
        assert_eq!(
            Partition::with_core(0, 2),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
    }

    #[test]
    fn parses_and_prints() {
        assert_eq!("3,1,1".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert_eq!("(2, 2)".parse::<Partition>().unwrap(), p(&[2, 2]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert_eq!(p(&[3, 3, 2]).to_string(), "(3,3,2)");
        assert_eq!(serde_json::to_string(&p(&[2, 1])).unwrap(), "[2,1]");
    }
}
