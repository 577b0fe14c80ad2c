//! Growth diagrams for signed permutation matrices.
//!
//! `grid[i][j]` (0 ≤ i, j ≤ n) is the shape of the insertion tableau after the
//! first `i` letters, restricted to values at most `j`. Row `n` is the P chain
//! and column `n` is the Q chain.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Cell, Partition};
use crate::tableau::DominoTableau;
use crate::words::{ColoredPermutation, Letter};

/// An n×n matrix over {−1, 0, 1} with one nonzero entry per row and column.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i8>>", into = "Vec<Vec<i8>>")]
pub struct SignedPermutationMatrix {
    perm: ColoredPermutation,
}

impl SignedPermutationMatrix {
    pub fn from_permutation(perm: ColoredPermutation) -> Self {
        SignedPermutationMatrix { perm }
    }

    pub fn from_rows(rows: Vec<Vec<i8>>) -> Result<Self> {
        let n = rows.len();
        let mut word = Vec::with_capacity(n);
        for (i, row) in rows.iter().enumerate() {
            let nonzero: Vec<(usize, i8)> =
                row.iter().copied().enumerate().filter(|&(_, x)| x != 0).collect();
            match (row.len() == n, nonzero.as_slice()) {
                (true, [(j, x)]) if x.abs() == 1 => {
                    word.push(Letter { value: *j as u32 + 1, barred: *x < 0 })
                }
                _ => {
                    return Err(Error::InvalidWord(format!(
                        "row {} of the matrix needs exactly one entry ±1",
                        i + 1
                    )))
                }
            }
        }
        Ok(SignedPermutationMatrix { perm: ColoredPermutation::new(word)? })
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    /// M(i, j) for 1 ≤ i, j ≤ n.
    pub fn get(&self, i: usize, j: usize) -> i8 {
        let l = self.perm.word()[i - 1];
        match (l.value as usize == j, l.barred) {
            (false, _) => 0,
            (true, false) => 1,
            (true, true) => -1,
        }
    }

    pub fn rows(&self) -> Vec<Vec<i8>> {
        (1..=self.n()).map(|i| (1..=self.n()).map(|j| self.get(i, j)).collect()).collect()
    }

    pub fn permutation(&self) -> &ColoredPermutation {
        &self.perm
    }

    pub fn transpose(&self) -> Self {
        SignedPermutationMatrix { perm: self.perm.inverse() }
    }
}

impl TryFrom<Vec<Vec<i8>>> for SignedPermutationMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<i8>>) -> Result<Self> {
        SignedPermutationMatrix::from_rows(rows)
    }
}

impl From<SignedPermutationMatrix> for Vec<Vec<i8>> {
    fn from(m: SignedPermutationMatrix) -> Self {
        m.rows()
    }
}

fn step_ok(small: &Partition, big: &Partition) -> bool {
    small == big || big.skew_domino(small).is_some()
}

/// ρ from λ, μ, ν and the matrix entry of the square.
pub fn forward_rule(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    m: i8,
) -> std::result::Result<Partition, String> {
    if !step_ok(lambda, mu) || !step_ok(lambda, nu) {
        return Err(format!("{mu} and {nu} do not both extend {lambda} by at most a domino"));
    }
    let grown = match m {
        1 | -1 if lambda != mu || lambda != nu => {
            return Err(format!("nonzero entry needs λ = μ = ν, got {lambda}, {mu}, {nu}"))
        }
        1 => lambda.add_two_to_row(1),
        -1 => lambda.add_two_to_col(1),
        0 if lambda == mu => Some(nu.clone()),
        0 if lambda == nu => Some(mu.clone()),
        0 => {
            let g = mu.skew_domino(lambda).expect("checked by step_ok");
            let h = nu.skew_domino(lambda).expect("checked by step_ok");
            if g == h {
                if g.is_vertical() {
                    mu.add_two_to_col(g.left_col() + 1)
                } else {
                    mu.add_two_to_row(g.top_row() + 1)
                }
            } else {
                let gc = g.cells();
                let hc: Vec<Cell> = h.cells().into_iter().filter(|c| !gc.contains(c)).collect();
                match hc.as_slice() {
                    [a, b] => mu.with_cells(&[*a, *b]),
                    [a] => {
                        let shared = h.cells().into_iter().find(|c| gc.contains(c)).expect("one shared cell");
                        mu.with_cells(&[*a, Cell::new(shared.row + 1, shared.col + 1)])
                    }
                    _ => None,
                }
            }
        }
        _ => return Err(format!("matrix entry {m} is not in {{-1, 0, 1}}")),
    };
    grown.ok_or_else(|| format!("local rule on {lambda}, {mu}, {nu} leaves the partitions"))
}

/// λ and M(i, j) from ρ, μ, ν.
pub fn reverse_rule(rho: &Partition, mu: &Partition, nu: &Partition) -> std::result::Result<(Partition, i8), String> {
    let bad = || format!("({rho}, {mu}, {nu}) is not produced by any local rule");
    let candidate = if mu == nu {
        if rho == mu {
            (rho.clone(), 0)
        } else {
            let d = rho.skew_domino(mu).ok_or_else(bad)?;
            match (d.is_vertical(), d.top_row(), d.left_col()) {
                (false, 1, _) => (mu.clone(), 1),
                (true, _, 1) => (mu.clone(), -1),
                (false, k, _) => {
                    let len = mu.row_len(k - 1);
                    if len < 2 {
                        return Err(bad());
                    }
                    (remove(mu, &[Cell::new(k - 1, len - 1), Cell::new(k - 1, len)]).ok_or_else(bad)?, 0)
                }
                (true, _, c) => {
                    let len = mu.col_len(c - 1);
                    if len < 2 {
                        return Err(bad());
                    }
                    (remove(mu, &[Cell::new(len - 1, c - 1), Cell::new(len, c - 1)]).ok_or_else(bad)?, 0)
                }
            }
        }
    } else if rho == nu {
        (mu.clone(), 0)
    } else if rho == mu {
        (nu.clone(), 0)
    } else {
        let (ms, ns) = (mu.cell_set(), nu.cell_set());
        let mut inter: BTreeSet<Cell> = ms.intersection(&ns).copied().collect();
        let extra: Vec<Cell> = rho.cells().filter(|c| !ms.contains(c) && !ns.contains(c)).collect();
        match extra.as_slice() {
            [] => {}
            [c] if c.row > 1 && c.col > 1 => {
                inter.remove(&Cell::new(c.row - 1, c.col - 1));
            }
            _ => return Err(bad()),
        }
        (Partition::from_cells(&inter).ok_or_else(bad)?, 0)
    };
    match forward_rule(&candidate.0, mu, nu, candidate.1) {
        Ok(r) if r == *rho => Ok(candidate),
        _ => Err(bad()),
    }
}

fn remove(p: &Partition, cells: &[Cell]) -> Option<Partition> {
    let mut set = p.cell_set();
    for c in cells {
        if !set.remove(c) {
            return None;
        }
    }
    Partition::from_cells(&set)
}

/// Number of vertical dominoes in `big / small` (0 or 1).
fn vertical(small: &Partition, big: &Partition) -> usize {
    big.skew_domino(small).map_or(0, |d| d.is_vertical() as usize)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthDiagram {
    core: Partition,
    matrix: SignedPermutationMatrix,
    grid: Vec<Vec<Partition>>,
}

impl GrowthDiagram {
    /// Fill the diagram row by row from the δ_r boundary.
    pub fn forward(matrix: &SignedPermutationMatrix, r: usize) -> Result<Self> {
        let n = matrix.n();
        let order: Vec<(usize, usize)> = (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
        GrowthDiagram::forward_in_order(matrix, r, &order)
    }

    /// Fill the squares in the given order; each square's λ, μ, ν must already be known.
    pub fn forward_in_order(matrix: &SignedPermutationMatrix, r: usize, order: &[(usize, usize)]) -> Result<Self> {
        let n = matrix.n();
        let core = Partition::staircase(r);
        let mut grid: Vec<Vec<Option<Partition>>> = vec![vec![None; n + 1]; n + 1];
        for k in 0..=n {
            grid[0][k] = Some(core.clone());
            grid[k][0] = Some(core.clone());
        }
        for &(i, j) in order {
            let missing = || Error::LocalRule { i, j, message: "square visited before its neighbours".into() };
            let lambda = grid[i - 1][j - 1].as_ref().ok_or_else(missing)?;
            let mu = grid[i][j - 1].as_ref().ok_or_else(missing)?;
            let nu = grid[i - 1][j].as_ref().ok_or_else(missing)?;
            let rho = forward_rule(lambda, mu, nu, matrix.get(i, j)).map_err(|message| Error::LocalRule { i, j, message })?;
            grid[i][j] = Some(rho);
        }
        let grid = grid
            .into_iter()
            .enumerate()
            .map(|(i, row)| {
                row.into_iter()
                    .enumerate()
                    .map(|(j, p)| p.ok_or(Error::LocalRule { i, j, message: "square never visited".into() }))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GrowthDiagram { core, matrix: matrix.clone(), grid })
    }

    /// Rebuild the diagram from its P and Q chains by running the local rules backwards.
    pub fn reverse(p_chain: &[Partition], q_chain: &[Partition]) -> Result<Self> {
        let n = p_chain.len().checked_sub(1).ok_or_else(|| Error::ShapeMismatch("empty chain".into()))?;
        if q_chain.len() != n + 1 || p_chain[n] != q_chain[n] || p_chain[0] != q_chain[0] {
            return Err(Error::ShapeMismatch(format!(
                "chains end at {} and {}",
                p_chain[n],
                q_chain.last().map(|p| p.to_string()).unwrap_or_default()
            )));
        }
        let core = p_chain[0].clone();
        if core.staircase_rank().is_none() {
            return Err(Error::UnsupportedCore(core.to_string(), "chains must start at a staircase".into()));
        }
        let mut grid = vec![vec![Partition::empty(); n + 1]; n + 1];
        grid[n] = p_chain.to_vec();
        for (i, q) in q_chain.iter().enumerate() {
            grid[i][n] = q.clone();
        }
        let mut word = vec![None; n];
        for i in (1..=n).rev() {
            for j in (1..=n).rev() {
                let (lambda, m) = reverse_rule(&grid[i][j], &grid[i][j - 1], &grid[i - 1][j])
                    .map_err(|message| Error::LocalRule { i, j, message })?;
                grid[i - 1][j - 1] = lambda;
                if m != 0 {
                    if word[i - 1].is_some() {
                        return Err(Error::LocalRule { i, j, message: "two nonzero entries in one row".into() });
                    }
                    word[i - 1] = Some(Letter { value: j as u32, barred: m < 0 });
                }
            }
        }
        let boundary_ok = (0..=n).all(|k| grid[0][k] == core && grid[k][0] == core);
        let word: Option<Vec<Letter>> = word.into_iter().collect();
        match (boundary_ok, word) {
            (true, Some(word)) => {
                let matrix = SignedPermutationMatrix::from_permutation(ColoredPermutation::new(word)?);
                Ok(GrowthDiagram { core, matrix, grid })
            }
            _ => Err(Error::ShapeMismatch("chains do not close up to a growth diagram".into())),
        }
    }

    pub fn n(&self) -> usize {
        self.matrix.n()
    }

    pub fn core(&self) -> &Partition {
        &self.core
    }

    pub fn matrix(&self) -> &SignedPermutationMatrix {
        &self.matrix
    }

    /// λ at `(i, j)`, 0-indexed.
    pub fn at(&self, i: usize, j: usize) -> &Partition {
        &self.grid[i][j]
    }

    pub fn grid(&self) -> &[Vec<Partition>] {
        &self.grid
    }

    pub fn p_chain(&self) -> Vec<Partition> {
        self.grid[self.n()].clone()
    }

    pub fn q_chain(&self) -> Vec<Partition> {
        self.grid.iter().map(|row| row[self.n()].clone()).collect()
    }

    pub fn p_tableau(&self) -> DominoTableau {
        DominoTableau::from_chain(&self.p_chain()).expect("boundary of a growth diagram")
    }

    pub fn q_tableau(&self) -> DominoTableau {
        DominoTableau::from_chain(&self.q_chain()).expect("boundary of a growth diagram")
    }

    /// Check the boundary, adjacency and every local rule.
    pub fn verify(&self) -> Result<()> {
        let n = self.n();
        for k in 0..=n {
            if self.grid[0][k] != self.core || self.grid[k][0] != self.core {
                return Err(Error::LocalRule { i: 0, j: k, message: "boundary is not the core".into() });
            }
        }
        for i in 1..=n {
            for j in 1..=n {
                let g = &self.grid;
                let rho = forward_rule(&g[i - 1][j - 1], &g[i][j - 1], &g[i - 1][j], self.matrix.get(i, j))
                    .map_err(|message| Error::LocalRule { i, j, message })?;
                if rho != g[i][j] {
                    return Err(Error::LocalRule { i, j, message: format!("expected {rho}, found {}", g[i][j]) });
                }
            }
        }
        Ok(())
    }

    /// Per square, twice the spin balance: v(ρ/μ) + v(ρ/ν) − v(μ/λ) − v(ν/λ) − 2[M = −1], which should vanish.
    pub fn spin_defects(&self) -> Vec<((usize, usize), i64)> {
        let g = &self.grid;
        let n = self.n();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                let (lambda, mu, nu, rho) = (&g[i - 1][j - 1], &g[i][j - 1], &g[i - 1][j], &g[i][j]);
                let lhs = (vertical(mu, rho) + vertical(nu, rho)) as i64;
                let rhs = (vertical(lambda, mu) + vertical(lambda, nu)) as i64 + 2 * (self.matrix.get(i, j) == -1) as i64;
                out.push(((i, j), lhs - rhs));
            }
        }
        out
    }
}

/// (P, Q) for a colored permutation via its growth diagram.
pub fn growth_insert(pi: &ColoredPermutation, r: usize) -> (DominoTableau, DominoTableau) {
    let g = GrowthDiagram::forward(&SignedPermutationMatrix::from_permutation(pi.clone()), r)
        .expect("local rules apply to every signed permutation matrix");
    (g.p_tableau(), g.q_tableau())
}

/// The colored permutation with insertion tableau `p` and recording tableau `q`.
pub fn growth_reverse(p: &DominoTableau, q: &DominoTableau) -> Result<ColoredPermutation> {
    if !p.is_standard() || !q.is_standard() {
        return Err(Error::InvalidTableau("reverse insertion needs standard tableaux".into()));
    }
    if p.shape() != q.shape() || p.core() != q.core() {
        return Err(Error::ShapeMismatch(format!("{} vs {}", p.shape(), q.shape())));
    }
    let g = GrowthDiagram::reverse(&p.chain(), &q.chain())?;
    Ok(g.matrix().permutation().clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn example() -> ColoredPermutation {
        "3' 4 2 1'".parse().unwrap()
    }

    #[test]
    fn running_example_grid() {
        let m = SignedPermutationMatrix::from_permutation(example());
        let g = GrowthDiagram::forward(&m, 0).unwrap();
        let expected: &[((usize, usize), &str)] = &[
            ((2, 4), "1,1"),
            ((2, 5), "1,1"),
            ((3, 4), "1,1"),
            ((3, 5), "3,1"),
            ((4, 3), "2"),
            ((4, 4), "2,2"),
            ((4, 5), "3,3"),
            ((5, 2), "1,1"),
            ((5, 3), "2,2"),
            ((5, 4), "2,2,2"),
            ((5, 5), "3,3,2"),
        ];
        for i in 1..=5 {
            for j in 1..=5 {
                let want = expected.iter().find(|(ij, _)| *ij == (i, j)).map_or(Partition::empty(), |(_, s)| p(s));
                assert_eq!(g.at(i - 1, j - 1), &want, "({i},{j})");
            }
        }
        g.verify().unwrap();
    }

    #[test]
    fn empty_matrix() {
        let m = SignedPermutationMatrix::from_rows(vec![]).unwrap();
        let g = GrowthDiagram::forward(&m, 2).unwrap();
        assert_eq!(g.grid(), &[vec![Partition::staircase(2)]]);
    }

    #[test]
    fn matrix_rows() {
        let m = SignedPermutationMatrix::from_permutation(example());
        assert_eq!(m.rows(), vec![vec![0, 0, -1, 0], vec![0, 0, 0, 1], vec![0, 1, 0, 0], vec![-1, 0, 0, 0]]);
        assert_eq!(SignedPermutationMatrix::from_rows(m.rows()).unwrap(), m);
        assert!(SignedPermutationMatrix::from_rows(vec![vec![1, 1], vec![0, 0]]).is_err());
        assert!(SignedPermutationMatrix::from_rows(vec![vec![2]]).is_err());
    }

    #[test]
    fn nonzero_entry_needs_equal_corners() {
        let err = forward_rule(&Partition::empty(), &p("2"), &Partition::empty(), 1);
        assert!(err.is_err());
    }

    #[test]
    fn reverse_single_domino() {
        let chain = vec![Partition::empty(), p("2")];
        let g = GrowthDiagram::reverse(&chain, &chain).unwrap();
        assert_eq!(g.matrix().rows(), vec![vec![1]]);
    }

    #[test]
    fn reverse_rejects_unequal_shapes() {
        let a = vec![Partition::empty(), p("2")];
        let b = vec![Partition::empty(), p("1,1")];
        assert!(matches!(GrowthDiagram::reverse(&a, &b), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn local_rules_are_reversible() {
        for n in 0..=4 {
            for pi in ColoredPermutation::all(n) {
                for r in 0..=2 {
                    let g = GrowthDiagram::forward(&SignedPermutationMatrix::from_permutation(pi.clone()), r).unwrap();
                    let back = GrowthDiagram::reverse(&g.p_chain(), &g.q_chain()).unwrap();
                    assert_eq!(back, g);
                }
            }
        }
    }

    #[test]
    fn spin_balances_on_every_square() {
        for pi in ColoredPermutation::all(4) {
            for r in 0..=2 {
                let g = GrowthDiagram::forward(&SignedPermutationMatrix::from_permutation(pi.clone()), r).unwrap();
                assert!(g.spin_defects().iter().all(|&(_, d)| d == 0), "{pi} r={r}");
            }
        }
    }

    #[test]
    fn evaluation_order_is_irrelevant() {
        for pi in ColoredPermutation::all(3).into_iter().chain(ColoredPermutation::all(4).into_iter().step_by(7)) {
            let m = SignedPermutationMatrix::from_permutation(pi);
            let n = m.n();
            let by_rows = GrowthDiagram::forward(&m, 1).unwrap();
            let mut diagonals: Vec<(usize, usize)> = (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
            diagonals.sort_by_key(|&(i, j)| (i + j, j));
            let by_columns: Vec<(usize, usize)> = (1..=n).flat_map(|j| (1..=n).map(move |i| (i, j))).collect();
            assert_eq!(GrowthDiagram::forward_in_order(&m, 1, &diagonals).unwrap(), by_rows);
            assert_eq!(GrowthDiagram::forward_in_order(&m, 1, &by_columns).unwrap(), by_rows);
        }
        let m = SignedPermutationMatrix::from_permutation("2 1".parse().unwrap());
        assert!(GrowthDiagram::forward_in_order(&m, 0, &[(2, 2), (1, 1), (1, 2), (2, 1)]).is_err());
    }

    #[test]
    fn transposed_matrix_swaps_chains() {
        for pi in ColoredPermutation::all(3) {
            let m = SignedPermutationMatrix::from_permutation(pi);
            let g = GrowthDiagram::forward(&m, 0).unwrap();
            let t = GrowthDiagram::forward(&m.transpose(), 0).unwrap();
            assert_eq!(g.p_chain(), t.q_chain());
            assert_eq!(g.q_chain(), t.p_chain());
        }
    }
}
