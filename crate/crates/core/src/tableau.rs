//! Standard, semistandard and column-semistandard domino tableaux.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Cell, Domino, Orientation, Partition};
use crate::poly::QHalfPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Entry {
    pub value: u32,
    pub domino: Domino,
}

impl Entry {
    pub const fn new(value: u32, domino: Domino) -> Self {
        Entry { value, domino }
    }
}

/// A tiling of `shape / core` by labelled dominoes, where `core` is a staircase.
///
/// Construction checks the tiling and that each prefix `{value ≤ j}` together
/// with the core is a partition. Row or column monotonicity is reported by
/// [`is_standard`](Self::is_standard), [`is_semistandard`](Self::is_semistandard)
/// and [`is_column_semistandard`](Self::is_column_semistandard).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TableauJson", into = "TableauJson")]
pub struct DominoTableau {
    core: Partition,
    shape: Partition,
    entries: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableauStats {
    pub weight: Vec<usize>,
    pub v: usize,
    pub ov: usize,
    pub ev: usize,
}

pub type YoungTableau = Vec<Vec<u32>>;

impl DominoTableau {
    pub fn new(core: Partition, mut entries: Vec<Entry>) -> Result<Self> {
        if core.staircase_rank().is_none() {
            return Err(Error::InvalidTableau(format!("core {core} is not a staircase")));
        }
        entries.sort_by_key(|e| (e.value, e.domino.anchor));
        let mut cells = core.cell_set();
        let values: Vec<u32> = entries.iter().map(|e| e.value).dedup().collect();
        let mut i = 0;
        for j in values {
            if j == 0 {
                return Err(Error::InvalidTableau("values are positive".into()));
            }
            while i < entries.len() && entries[i].value == j {
                for c in entries[i].domino.cells() {
                    if c.row == 0 || c.col == 0 || !cells.insert(c) {
                        return Err(Error::InvalidTableau(format!("cell {c:?} covered twice")));
                    }
                }
                i += 1;
            }
            if Partition::from_cells(&cells).is_none() {
                return Err(Error::InvalidTableau(format!("values ≤ {j} do not form a partition")));
            }
        }
        let shape = Partition::from_cells(&cells).expect("checked above");
        Ok(DominoTableau { core, shape, entries })
    }

    pub fn empty(core: Partition) -> Self {
        DominoTableau { shape: core.clone(), core, entries: Vec::new() }
    }

    /// The standard tableau encoded by a domino chain `core = λ⁰ ⊂ λ¹ ⊂ … ⊂ λⁿ`.
    pub fn from_chain(chain: &[Partition]) -> Result<Self> {
        let core = chain.first().cloned().unwrap_or_default();
        let entries = chain
            .iter()
            .tuple_windows()
            .enumerate()
            .map(|(i, (a, b))| {
                b.skew_domino(a)
                    .map(|d| Entry::new(i as u32 + 1, d))
                    .ok_or_else(|| Error::InvalidTableau(format!("{b} / {a} is not a domino")))
            })
            .collect::<Result<Vec<_>>>()?;
        DominoTableau::new(core, entries)
    }

    /// The shapes `core ∪ {value ≤ j}` for j = 0, 1, …, max value.
    pub fn chain(&self) -> Vec<Partition> {
        let mut out = vec![self.core.clone()];
        for j in 1..=self.max_value() {
            out.push(self.restrict(j).shape);
        }
        out
    }

    pub fn core(&self) -> &Partition {
        &self.core
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_value(&self) -> u32 {
        self.entries.last().map_or(0, |e| e.value)
    }

    pub fn get(&self, value: u32) -> Option<Domino> {
        self.entries.iter().find(|e| e.value == value).map(|e| e.domino)
    }

    /// Entries with value at most `j`.
    pub fn restrict(&self, j: u32) -> DominoTableau {
        let entries: Vec<Entry> = self.entries.iter().copied().filter(|e| e.value <= j).collect();
        DominoTableau::new(self.core.clone(), entries).expect("prefixes of a tableau are tableaux")
    }

    /// Cell → value, with core cells mapped to 0.
    pub fn cell_values(&self) -> BTreeMap<Cell, u32> {
        let mut map: BTreeMap<Cell, u32> = self.core.cells().map(|c| (c, 0)).collect();
        for e in &self.entries {
            for c in e.domino.cells() {
                map.insert(c, e.value);
            }
        }
        map
    }

    pub fn weight(&self) -> Vec<usize> {
        let mut w = vec![0; self.max_value() as usize];
        for e in &self.entries {
            w[e.value as usize - 1] += 1;
        }
        w
    }

    /// Number of vertical dominoes; the spin is half of this.
    pub fn v(&self) -> usize {
        self.entries.iter().filter(|e| e.domino.is_vertical()).count()
    }

    pub fn ov(&self) -> usize {
        self.entries.iter().filter(|e| e.domino.is_vertical() && e.domino.left_col() % 2 == 1).count()
    }

    pub fn ev(&self) -> usize {
        self.entries.iter().filter(|e| e.domino.is_vertical() && e.domino.left_col() % 2 == 0).count()
    }

    pub fn stats(&self) -> TableauStats {
        TableauStats { weight: self.weight(), v: self.v(), ov: self.ov(), ev: self.ev() }
    }

    /// For each cell not in the core, compare with its left and upper neighbours in other dominoes.
    fn monotone(&self, row_strict: bool, col_strict: bool) -> bool {
        let values = self.cell_values();
        let owner: BTreeMap<Cell, usize> = self
            .entries
            .iter()
            .enumerate()
            .flat_map(|(i, e)| e.domino.cells().map(|c| (c, i)))
            .collect();
        owner.iter().all(|(&c, &i)| {
            let check = |n: Cell, strict: bool| match (values.get(&n), owner.get(&n)) {
                (_, Some(&k)) if k == i => true,
                (Some(&v), _) => v < values[&c] || (!strict && v == values[&c]),
                (None, _) => true,
            };
            (c.col < 2 || check(Cell::new(c.row, c.col - 1), row_strict))
                && (c.row < 2 || check(Cell::new(c.row - 1, c.col), col_strict))
        })
    }

    pub fn is_standard(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, e)| e.value == i as u32 + 1)
    }

    /// Rows weakly increase, columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        self.monotone(false, true)
    }

    /// Columns weakly increase, rows strictly increase.
    pub fn is_column_semistandard(&self) -> bool {
        self.monotone(true, false)
    }

    fn relabel(&self, key: impl Fn(&Domino) -> usize) -> DominoTableau {
        let mut order: Vec<Entry> = self.entries.clone();
        order.sort_by_key(|e| (e.value, key(&e.domino)));
        let entries = order.iter().enumerate().map(|(i, e)| Entry::new(i as u32 + 1, e.domino)).collect();
        DominoTableau::new(self.core.clone(), entries).expect("relabelling a valid tableau")
    }

    /// Relabel each value class 1, 2, … from left to right.
    pub fn standardize(&self) -> Result<DominoTableau> {
        if !self.is_semistandard() {
            return Err(Error::InvalidTableau("standardisation needs a semistandard tableau".into()));
        }
        Ok(self.relabel(|d| d.left_col()))
    }

    /// Relabel each value class from top to bottom.
    pub fn standardize_columns(&self) -> Result<DominoTableau> {
        if !self.is_column_semistandard() {
            return Err(Error::InvalidTableau("needs a column-semistandard tableau".into()));
        }
        Ok(self.relabel(|d| d.top_row()))
    }

    fn collapse(&self, weight: &[usize]) -> Result<DominoTableau> {
        if !self.is_standard() || weight.iter().sum::<usize>() != self.len() {
            return Err(Error::ShapeMismatch(format!(
                "weight {weight:?} does not fit a standard tableau with {} dominoes",
                self.len()
            )));
        }
        let block: Vec<u32> =
            weight.iter().enumerate().flat_map(|(i, &m)| std::iter::repeat_n(i as u32 + 1, m)).collect();
        let entries = self.entries.iter().map(|e| Entry::new(block[e.value as usize - 1], e.domino)).collect();
        DominoTableau::new(self.core.clone(), entries)
    }

    /// Inverse of [`standardize`](Self::standardize) for the given weight, if the result is semistandard.
    pub fn destandardize(&self, weight: &[usize]) -> Result<DominoTableau> {
        let d = self.collapse(weight)?;
        if d.is_semistandard() && d.standardize()? == *self {
            Ok(d)
        } else {
            Err(Error::InvalidTableau(format!("weight {weight:?} does not destandardise this tableau")))
        }
    }

    pub fn destandardize_columns(&self, weight: &[usize]) -> Result<DominoTableau> {
        let d = self.collapse(weight)?;
        if d.is_column_semistandard() && d.standardize_columns()? == *self {
            Ok(d)
        } else {
            Err(Error::InvalidTableau(format!("weight {weight:?} does not column-destandardise this tableau")))
        }
    }

    /// Transpose the core, the shape and every domino.
    pub fn conjugate(&self) -> DominoTableau {
        let entries = self.entries.iter().map(|e| Entry::new(e.value, e.domino.transpose())).collect();
        DominoTableau::new(self.core.conjugate(), entries).expect("transpose of a tableau")
    }

    /// The standard Young tableau T(D) for core ∅ or δ_1.
    pub fn young_tableau(&self) -> Result<YoungTableau> {
        let offset = match self.core.staircase_rank() {
            Some(0) => 0,
            Some(1) => 1,
            _ => return Err(Error::UnsupportedCore(self.core.to_string(), "T(D) needs core ∅ or (1)".into())),
        };
        let mut rows: YoungTableau = self.shape.parts().iter().map(|&p| vec![0; p]).collect();
        if offset == 1 {
            rows[0][0] = 1;
        }
        for (i, e) in self.entries.iter().enumerate() {
            let base = 2 * i as u32 + 1 + offset;
            let [a, b] = e.domino.cells();
            rows[a.row - 1][a.col - 1] = base;
            rows[b.row - 1][b.col - 1] = base + 1;
        }
        Ok(rows)
    }

    /// Sign of the row reading word of T(D).
    pub fn sign(&self) -> Result<i8> {
        Ok(reading_sign(&self.young_tableau()?))
    }

    pub fn values(&self) -> Vec<u32> {
        self.entries.iter().map(|e| e.value).collect()
    }

    /// A copy with `value` placed on `domino`; fails on a collision or invalid result.
    pub fn with_entry(&self, value: u32, domino: Domino) -> Result<DominoTableau> {
        if self.entries.iter().any(|e| e.value == value) {
            return Err(Error::ValueCollision(value));
        }
        let mut entries = self.entries.clone();
        entries.push(Entry::new(value, domino));
        DominoTableau::new(self.core.clone(), entries)
    }
}

/// Sign of the permutation read row by row.
pub fn reading_sign(t: &YoungTableau) -> i8 {
    let word: Vec<u32> = t.iter().flatten().copied().collect();
    let inversions = word.iter().tuple_combinations().filter(|(a, b)| a > b).count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All standard domino tableaux of shape `lambda`, in a fixed order.
pub fn enumerate_sdt(lambda: &Partition) -> Vec<DominoTableau> {
    fn rec(current: &Partition, core: &Partition, suffix: &mut Vec<Partition>, out: &mut Vec<Vec<Partition>>) {
        if current == core {
            let mut chain = suffix.clone();
            chain.push(core.clone());
            chain.reverse();
            out.push(chain);
            return;
        }
        if current.size() <= core.size() {
            return;
        }
        suffix.push(current.clone());
        for (smaller, _) in current.domino_predecessors() {
            rec(&smaller, core, suffix, out);
        }
        suffix.pop();
    }
    let core = lambda.two_core();
    let mut chains = Vec::new();
    rec(lambda, &core, &mut Vec::new(), &mut chains);
    chains.iter().map(|c| DominoTableau::from_chain(c).expect("chains of dominoes")).collect()
}

/// All weak compositions of `n` into `k` parts, in lexicographic order.
pub fn weak_compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in weak_compositions(n - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All semistandard domino tableaux of shape `lambda` with entries in 1..=max_value.
pub fn enumerate_ssdt(lambda: &Partition, max_value: usize) -> Vec<DominoTableau> {
    let sdt = enumerate_sdt(lambda);
    let n = sdt.first().map_or(0, |d| d.len());
    let mut out = Vec::new();
    for weight in weak_compositions(n, max_value) {
        out.extend(sdt.iter().filter_map(|d| d.destandardize(&weight).ok()));
    }
    out
}

/// d^λ(q) = Σ q^{sp(D)} over standard domino tableaux of shape λ, in s = q^{1/2}.
pub fn d_poly(lambda: &Partition) -> QHalfPoly {
    let mut p = QHalfPoly::zero();
    for d in enumerate_sdt(lambda) {
        p.add_s_power(d.v(), 1);
    }
    p
}

/// Twice the maximal spin over tableaux of shape λ.
pub fn mspin_numerator(lambda: &Partition) -> usize {
    enumerate_sdt(lambda).iter().map(|d| d.v()).max().unwrap_or(0)
}

/// mspin(λ) − sp(D), an integer.
pub fn cospin(d: &DominoTableau) -> usize {
    let gap = mspin_numerator(d.shape()) - d.v();
    assert!(gap.is_multiple_of(2), "cospin is integral");
    gap / 2
}

/// f^λ via the hook length formula.
pub fn syt_count(lambda: &Partition) -> u128 {
    let conj = lambda.conjugate();
    let n = lambda.size() as u128;
    let num: u128 = (1..=n).product();
    let den: u128 = lambda
        .cells()
        .map(|c| (lambda.row_len(c.row) - c.col + conj.row_len(c.col) - c.row + 1) as u128)
        .product();
    num / den
}

/// All standard Young tableaux of shape λ.
pub fn enumerate_syt(lambda: &Partition) -> Vec<YoungTableau> {
    fn rec(shape: &Partition, t: &mut YoungTableau, out: &mut Vec<YoungTableau>) {
        let n = shape.size() as u32;
        if n == 0 {
            out.push(t.clone());
            return;
        }
        for row in 1..=shape.len() {
            let len = shape.row_len(row);
            if shape.row_len(row + 1) < len {
                let mut parts = shape.parts().to_vec();
                parts[row - 1] -= 1;
                t[row - 1][len - 1] = n;
                rec(&Partition::new(parts).expect("removing a corner"), t, out);
            }
        }
    }
    let mut t: YoungTableau = lambda.parts().iter().map(|&p| vec![0; p]).collect();
    let mut out = Vec::new();
    rec(lambda, &mut t, &mut out);
    out
}

#[derive(Serialize, Deserialize)]
struct DominoJson {
    value: u32,
    row: usize,
    col: usize,
    orient: Orientation,
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    core: Partition,
    dominoes: Vec<DominoJson>,
}

impl TryFrom<TableauJson> for DominoTableau {
    type Error = Error;

    fn try_from(j: TableauJson) -> Result<Self> {
        let entries = j
            .dominoes
            .into_iter()
            .map(|d| Entry::new(d.value, Domino { anchor: Cell::new(d.row, d.col), orientation: d.orient }))
            .collect();
        DominoTableau::new(j.core, entries)
    }
}

impl From<DominoTableau> for TableauJson {
    fn from(t: DominoTableau) -> Self {
        let dominoes = t
            .entries
            .iter()
            .map(|e| DominoJson {
                value: e.value,
                row: e.domino.anchor.row,
                col: e.domino.anchor.col,
                orient: e.domino.orientation,
            })
            .collect();
        TableauJson { core: t.core, dominoes }
    }
}

impl fmt::Debug for DominoTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} core {} [", self.shape, self.core)?;
        for (i, e) in self.entries.iter().enumerate() {
            let o = if e.domino.is_vertical() { 'V' } else { 'H' };
            let sep = if i == 0 { "" } else { " " };
            write!(f, "{sep}{}:{o}({},{})", e.value, e.domino.anchor.row, e.domino.anchor.col)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::partition::Domino as Dm;

    pub(crate) fn sample_tableau() -> DominoTableau {
        DominoTableau::new(
            Partition::empty(),
            vec![
                Entry::new(1, Dm::vertical(1, 1)),
                Entry::new(1, Dm::horizontal(1, 2)),
                Entry::new(1, Dm::horizontal(1, 4)),
                Entry::new(2, Dm::horizontal(2, 2)),
                Entry::new(2, Dm::horizontal(2, 4)),
                Entry::new(3, Dm::horizontal(3, 1)),
                Entry::new(4, Dm::vertical(4, 1)),
                Entry::new(4, Dm::horizontal(3, 3)),
            ],
        )
        .unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn sample_statistics_and_standardisation() {
        let d = sample_tableau();
        assert!(d.is_semistandard());
        assert_eq!(d.shape(), &p("5,5,4,1,1"));
        assert_eq!(d.weight(), vec![3, 2, 1, 2]);
        assert_eq!((d.v(), d.ov(), d.ev()), (2, 2, 0));
        let st = d.standardize().unwrap();
        let expected = [
            (1, Dm::vertical(1, 1)),
            (2, Dm::horizontal(1, 2)),
            (3, Dm::horizontal(1, 4)),
            (4, Dm::horizontal(2, 2)),
            (5, Dm::horizontal(2, 4)),
            (6, Dm::horizontal(3, 1)),
            (7, Dm::vertical(4, 1)),
            (8, Dm::horizontal(3, 3)),
        ];
        for (v, dom) in expected {
            assert_eq!(st.get(v), Some(dom));
        }
        assert_eq!(st.destandardize(&[3, 2, 1, 2]).unwrap(), d);
        assert!(st.destandardize(&[2, 3, 1, 2]).is_err());
    }

    #[test]
    fn conjugate_of_sample() {
        let d = sample_tableau();
        let c = d.conjugate();
        assert_eq!(c.shape(), &p("5,5,4,1,1").conjugate());
        assert_eq!(c.v(), 6);
        assert!(c.is_column_semistandard());
        assert!(!c.is_semistandard());
        assert_eq!(c.conjugate(), d);
    }

    #[test]
    fn small_standardisations() {
        let d = DominoTableau::new(
            Partition::empty(),
            vec![Entry::new(1, Dm::horizontal(1, 3)), Entry::new(1, Dm::horizontal(1, 1))],
        )
        .unwrap();
        let st = d.standardize().unwrap();
        assert_eq!(st.get(1), Some(Dm::horizontal(1, 1)));
        assert_eq!(st.get(2), Some(Dm::horizontal(1, 3)));
        assert_eq!(st.standardize().unwrap(), st);
    }

    #[test]
    fn rejects_bad_tilings() {
        let overlap = vec![Entry::new(1, Dm::horizontal(1, 1)), Entry::new(2, Dm::vertical(1, 2))];
        assert!(DominoTableau::new(Partition::empty(), overlap).is_err());
        let gap = vec![Entry::new(1, Dm::horizontal(1, 2))];
        assert!(DominoTableau::new(Partition::empty(), gap).is_err());
        let out_of_order = vec![Entry::new(2, Dm::horizontal(1, 1)), Entry::new(1, Dm::horizontal(1, 3))];
        assert!(DominoTableau::new(Partition::empty(), out_of_order).is_err());
        assert!(DominoTableau::new(p("2"), vec![]).is_err());
    }

    #[test]
    fn d_poly_examples() {
        assert_eq!(d_poly(&p("3,1,1")), QHalfPoly::from_coeffs(vec![0, 2]));
        assert_eq!(d_poly(&p("2,2")), QHalfPoly::from_coeffs(vec![1, 0, 1]));
        assert_eq!(d_poly(&Partition::staircase(3)), QHalfPoly::one());
        assert_eq!(enumerate_sdt(&p("2")).len(), 1);
    }

    #[test]
    fn mspin_and_cospin() {
        assert_eq!(mspin_numerator(&p("2,2")), 2);
        let spins: Vec<usize> = enumerate_sdt(&p("2,2")).iter().map(cospin).sorted().collect();
        assert_eq!(spins, vec![0, 1]);
        assert_eq!(mspin_numerator(&p("3,1,1")), 1);
        assert!(enumerate_sdt(&p("3,1,1")).iter().all(|d| cospin(d) == 0));
        assert_eq!(mspin_numerator(&Partition::staircase(2)), 0);
    }

    #[test]
    fn chain_roundtrip() {
        for lambda in Partition::with_core(1, 4) {
            for d in enumerate_sdt(&lambda) {
                assert_eq!(DominoTableau::from_chain(&d.chain()).unwrap(), d);
                assert!(d.is_standard() && d.is_semistandard());
            }
        }
    }

    #[test]
    fn sdt_counts_match_quotient_hook_lengths() {
        for r in 0..=3 {
            for n in 0..=6 {
                for lambda in Partition::with_core(r, n) {
                    let (a, b) = lambda.two_quotient();
                    let binom: u128 = (1..=n as u128).product::<u128>()
                        / ((1..=a.size() as u128).product::<u128>() * (1..=b.size() as u128).product::<u128>());
                    let expected = binom * syt_count(&a) * syt_count(&b);
                    assert_eq!(enumerate_sdt(&lambda).len() as u128, expected, "{lambda}");
                }
            }
        }
    }

    #[test]
    fn ov_minus_ev_is_a_shape_statistic() {
        for r in 0..=2 {
            for n in 0..=5 {
                for lambda in Partition::with_core(r, n) {
                    let lhs = (lambda.stats().o - Partition::staircase(r).stats().o) as i64;
                    for d in enumerate_sdt(&lambda) {
                        assert_eq!(2 * (d.ov() as i64 - d.ev() as i64), lhs, "{d:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn mspin_splits_into_column_maxima() {
        for n in 0..=5 {
            for lambda in Partition::with_core(0, n).into_iter().chain(Partition::with_core(1, n)) {
                let all = enumerate_sdt(&lambda);
                let max_ov = all.iter().map(|d| d.ov()).max().unwrap();
                let max_ev = all.iter().map(|d| d.ev()).max().unwrap();
                assert_eq!(mspin_numerator(&lambda), max_ov + max_ev);
            }
        }
    }

    #[test]
    fn young_tableau_examples() {
        let col = DominoTableau::new(Partition::empty(), vec![Entry::new(1, Dm::vertical(1, 1))]).unwrap();
        assert_eq!(col.young_tableau().unwrap(), vec![vec![1], vec![2]]);
        assert_eq!(col.sign().unwrap(), 1);
        let square = DominoTableau::new(
            Partition::empty(),
            vec![Entry::new(1, Dm::vertical(1, 1)), Entry::new(2, Dm::vertical(1, 2))],
        )
        .unwrap();
        assert_eq!(square.young_tableau().unwrap(), vec![vec![1, 3], vec![2, 4]]);
        assert_eq!(square.sign().unwrap(), -1);
        assert_eq!(square.ev(), 1);
        assert!(DominoTableau::empty(Partition::staircase(2)).young_tableau().is_err());
    }

    #[test]
    fn sign_is_parity_of_even_column_verticals() {
        for r in 0..=1 {
            for n in 0..=4 {
                for lambda in Partition::with_core(r, n) {
                    for d in enumerate_sdt(&lambda) {
                        let expected = if d.ev() % 2 == 0 { 1 } else { -1 };
                        assert_eq!(d.sign().unwrap(), expected, "{d:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn young_tableaux_are_standard() {
        for n in 1..=4 {
            for lambda in Partition::with_core(1, n) {
                for d in enumerate_sdt(&lambda) {
                    let t = d.young_tableau().unwrap();
                    let rows_ok = t.iter().all(|row| row.windows(2).all(|w| w[0] < w[1]));
                    let cols_ok = (1..t.len()).all(|i| (0..t[i].len()).all(|j| t[i - 1][j] < t[i][j]));
                    assert!(rows_ok && cols_ok, "{t:?}");
                }
            }
        }
    }

    /// Fill every domino tiling of λ with values in 1..=k and keep the semistandard ones.
    fn ssdt_oracle(lambda: &Partition, k: u32) -> Vec<DominoTableau> {
        fn tilings(cells: &std::collections::BTreeSet<Cell>) -> Vec<Vec<Domino>> {
            let Some(&first) = cells.iter().next() else { return vec![Vec::new()] };
            let mut out = Vec::new();
            for d in [Dm::horizontal(first.row, first.col), Dm::vertical(first.row, first.col)] {
                let [_, b] = d.cells();
                if cells.contains(&b) {
                    let mut rest = cells.clone();
                    rest.remove(&first);
                    rest.remove(&b);
                    for mut t in tilings(&rest) {
                        t.push(d);
                        out.push(t);
                    }
                }
            }
            out
        }
        let core = lambda.two_core();
        let cells: std::collections::BTreeSet<Cell> = lambda.skew_cells(&core).into_iter().collect();
        let mut out = Vec::new();
        for tiling in tilings(&cells) {
            if tiling.is_empty() {
                out.push(DominoTableau::empty(core.clone()));
                continue;
            }
            for labels in (0..tiling.len()).map(|_| 1..=k).multi_cartesian_product() {
                let entries = tiling.iter().zip(&labels).map(|(&d, &v)| Entry::new(v, d)).collect();
                if let Ok(t) = DominoTableau::new(core.clone(), entries) {
                    if t.is_semistandard() {
                        out.push(t);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn ssdt_enumeration_matches_fillings() {
        for r in 0..=2 {
            for n in 0..=3 {
                for lambda in Partition::with_core(r, n) {
                    for k in 1..=3 {
                        let mut a: Vec<String> = enumerate_ssdt(&lambda, k).iter().map(|d| format!("{d:?}")).collect();
                        let mut b: Vec<String> =
                            ssdt_oracle(&lambda, k as u32).iter().map(|d| format!("{d:?}")).collect();
                        a.sort();
                        b.sort();
                        assert_eq!(a, b, "{lambda} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn standardisation_commutes_with_conjugation() {
        for n in 1..=4 {
            for lambda in Partition::with_core(0, n) {
                for d in enumerate_ssdt(&lambda, 3) {
                    let lhs = d.standardize().unwrap().conjugate();
                    let rhs = d.conjugate().standardize_columns().unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn syt_enumeration_matches_hook_lengths() {
        for n in 0..=7 {
            for lambda in Partition::all_of(n) {
                assert_eq!(enumerate_syt(&lambda).len() as u128, syt_count(&lambda));
            }
        }
    }

    #[test]
    fn json_roundtrip() {
        let d = sample_tableau();
        let json = serde_json::to_string(&d).unwrap();
        assert!(json.starts_with("{\"core\":[],\"dominoes\":[{\"value\":1,\"row\":1,\"col\":1,\"orient\":\"vertical\"}"));
        assert_eq!(serde_json::from_str::<DominoTableau>(&json).unwrap(), d);
    }
}
