//! ASCII pictures of domino tableaux and growth diagrams.

use std::collections::BTreeMap;

use crate::insertion::GrowthDiagram;
use crate::partition::{Cell, Partition};
use crate::tableau::DominoTableau;

/// Boxes for every cell of the shape; edges inside a domino are left open.
/// Each domino shows its value once; core cells show `.`.
pub fn render_tableau(d: &DominoTableau) -> String {
    let shape = d.shape();
    if shape.size() == 0 {
        return "(empty)\n".into();
    }
    // label and the number of cells it is centred across
    let mut labels: BTreeMap<Cell, (String, usize)> = d.core().cells().map(|c| (c, (".".to_string(), 1))).collect();
    let mut owner: BTreeMap<Cell, usize> = BTreeMap::new();
    for (i, e) in d.entries().iter().enumerate() {
        let [a, b] = e.domino.cells();
        let span = if a.row == b.row { 2 } else { 1 };
        labels.insert(a.min(b), (e.value.to_string(), span));
        owner.insert(a, i);
        owner.insert(b, i);
    }
    let w = labels.values().map(|(s, _)| s.len()).max().unwrap_or(1) + 2;
    let (rows, cols) = (shape.len(), shape.row_len(1));
    let mut canvas = vec![vec![' '; (w + 1) * cols + 1]; 2 * rows + 1];
    for c in shape.cells() {
        let (y, x) = (2 * (c.row - 1), (w + 1) * (c.col - 1));
        for dx in 1..=w {
            canvas[y][x + dx] = '-';
            canvas[y + 2][x + dx] = '-';
        }
        canvas[y + 1][x] = '|';
        canvas[y + 1][x + w + 1] = '|';
        for (yy, xx) in [(y, x), (y, x + w + 1), (y + 2, x), (y + 2, x + w + 1)] {
            canvas[yy][xx] = '+';
        }
    }
    for c in shape.cells() {
        let same = |o: Cell| owner.contains_key(&c) && owner.get(&c) == owner.get(&o);
        let (y, x) = (2 * (c.row - 1), (w + 1) * (c.col - 1));
        if same(Cell::new(c.row, c.col + 1)) {
            canvas[y + 1][x + w + 1] = ' ';
        }
        if same(Cell::new(c.row + 1, c.col)) {
            for dx in 1..=w {
                canvas[y + 2][x + dx] = ' ';
            }
        }
    }
    tidy_corners(&mut canvas);
    for (c, (label, span)) in &labels {
        let (y, x) = (2 * (c.row - 1), (w + 1) * (c.col - 1));
        let start = x + 1 + (span * (w + 1) - 1 - label.len()) / 2;
        for (k, ch) in label.chars().enumerate() {
            canvas[y + 1][start + k] = ch;
        }
    }
    canvas.iter().map(|row| row.iter().collect::<String>().trim_end().to_string() + "\n").collect()
}

/// A `+` with no vertical edge through it becomes `-`, and with no horizontal edge `|`.
fn tidy_corners(canvas: &mut [Vec<char>]) {
    let at = |c: &[Vec<char>], y: isize, x: isize| -> char {
        if y < 0 || x < 0 {
            return ' ';
        }
        c.get(y as usize).and_then(|r| r.get(x as usize)).copied().unwrap_or(' ')
    };
    let snapshot = canvas.to_vec();
    for (y, row) in canvas.iter_mut().enumerate() {
        for (x, ch) in row.iter_mut().enumerate() {
            if *ch != '+' {
                continue;
            }
            let (y, x) = (y as isize, x as isize);
            let vertical = at(&snapshot, y - 1, x) == '|' || at(&snapshot, y + 1, x) == '|';
            let horizontal = at(&snapshot, y, x - 1) == '-' || at(&snapshot, y, x + 1) == '-';
            *ch = match (vertical, horizontal) {
                (false, true) => '-',
                (true, false) => '|',
                (false, false) => ' ',
                _ => '+',
            };
        }
    }
}

/// One-line summary: shape, spin and the tableau picture.
pub fn render_with_stats(name: &str, d: &DominoTableau) -> String {
    format!(
        "{name}: shape {} core {} spin {} (ov {} ev {})\n{}",
        d.shape(),
        d.core(),
        spin(d.v()),
        d.ov(),
        d.ev(),
        render_tableau(d)
    )
}

/// v/2 as `0`, `1/2`, `1`, `3/2`, ...
pub fn spin(v: usize) -> String {
    if v.is_multiple_of(2) {
        (v / 2).to_string()
    } else {
        format!("{v}/2")
    }
}

fn ascii_partition(p: &Partition) -> String {
    if p.size() == 0 {
        "()".into()
    } else {
        p.to_string()
    }
}

/// The grid with i running rightwards and j upwards, origin at the bottom left.
/// Between partition rows, `X` marks a +1 entry of the matrix and `X'` a −1.
pub fn render_growth(g: &GrowthDiagram) -> String {
    let n = g.n();
    let labels: Vec<Vec<String>> = (0..=n).map(|i| (0..=n).map(|j| ascii_partition(g.at(i, j))).collect()).collect();
    let w = labels.iter().flatten().map(String::len).max().unwrap_or(2) + 2;
    let mut out = String::new();
    for j in (0..=n).rev() {
        let line: String = (0..=n).map(|i| format!("{:^w$}", labels[i][j])).collect();
        out += line.trim_end();
        out.push('\n');
        if j > 0 {
            let mut marks = " ".repeat(w / 2);
            for i in 1..=n {
                let m = match g.matrix().get(i, j) {
                    1 => "X",
                    -1 => "X'",
                    _ => "",
                };
                marks += &format!("{m:^w$}");
            }
            out += marks.trim_end();
            out.push('\n');
        }
    }
    out
}

/// Like [`render_growth`] but each partition is drawn as a small Young diagram of `#`.
pub fn render_growth_cells(g: &GrowthDiagram) -> String {
    let n = g.n();
    let height = g.grid().iter().flatten().map(Partition::len).max().unwrap_or(0).max(1);
    let width = g.grid().iter().flatten().map(|p| p.row_len(1)).max().unwrap_or(0).max(1) + 2;
    let mut out = String::new();
    for j in (0..=n).rev() {
        for line in 0..height {
            let mut row = String::new();
            for i in 0..=n {
                let p = g.at(i, j);
                let text = if p.size() == 0 && line == 0 { ".".to_string() } else { "#".repeat(p.row_len(line + 1)) };
                row += &format!("{text:<width$}");
            }
            out += row.trim_end();
            out.push('\n');
        }
        out.push('\n');
    }
    out
}
