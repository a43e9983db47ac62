//! Stairs, landings and the `m`-landing staircase of a distinct-part partition.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::DistinctPartition;

/// A cell of the Ferrers diagram, 1-based. Row 1 is the longest row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CellClass {
    /// Last cell of a row.
    RowEndStair,
    /// Top cell of one of the `λ_n - m - 1` leftmost columns.
    ColumnTopStair,
    /// Non-stair cell with nothing above it.
    Landing,
    Interior,
}

impl CellClass {
    pub fn is_stair(self) -> bool {
        matches!(self, CellClass::RowEndStair | CellClass::ColumnTopStair)
    }

    fn symbol(self) -> char {
        match self {
            CellClass::RowEndStair | CellClass::ColumnTopStair => 'S',
            CellClass::Landing => 'L',
            CellClass::Interior => '.',
        }
    }
}

/// Classification of every cell of a diagram; `rows[i][j]` is cell `(i+1, j+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellGrid {
    rows: Vec<Vec<CellClass>>,
}

impl CellGrid {
    pub fn class(&self, cell: Cell) -> Option<CellClass> {
        self.rows
            .get(cell.row.checked_sub(1)?)?
            .get(cell.col.checked_sub(1)?)
            .copied()
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Cell, CellClass)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(move |(j, &c)| (Cell::new(i + 1, j + 1), c))
        })
    }

    pub fn cells_of(&self, class: CellClass) -> Vec<Cell> {
        self.iter()
            .filter(|&(_, c)| c == class)
            .map(|(cell, _)| cell)
            .collect()
    }

    pub fn stairs(&self) -> Vec<Cell> {
        self.iter()
            .filter(|&(_, c)| c.is_stair())
            .map(|(cell, _)| cell)
            .collect()
    }
}

fn check_input(lambda: &DistinctPartition, m: usize) -> Result<()> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    lambda.check_parts_exceed(m)
}

/// Landing columns of row `i` from right to left.
fn landing_columns(lambda: &DistinctPartition, m: usize, i: usize) -> std::ops::Range<usize> {
    let n = lambda.len();
    let len = lambda.row(i);
    if i < n {
        lambda.row(i + 1) + 1..len
    } else {
        len - m..len
    }
}

pub fn classify_cells(lambda: &DistinctPartition, m: usize) -> Result<CellGrid> {
    check_input(lambda, m)?;
    let n = lambda.len();
    let top = lambda.top();
    let mut rows = Vec::with_capacity(n);
    for i in 1..=n {
        let len = lambda.row(i);
        let landings = landing_columns(lambda, m, i);
        let row = (1..=len)
            .map(|j| {
                if j == len {
                    CellClass::RowEndStair
                } else if i == n && j < top - m {
                    CellClass::ColumnTopStair
                } else if landings.contains(&j) {
                    CellClass::Landing
                } else {
                    CellClass::Interior
                }
            })
            .collect();
        rows.push(row);
    }
    Ok(CellGrid { rows })
}

/// The `m`-landing staircase `S_m(λ)`.
///
/// Cells are listed in walk order starting at the end of row 1. Every step
/// moves one column to the left, staying in the row or climbing by one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Staircase {
    cells: Vec<Cell>,
    landing_rows: Vec<usize>,
    stair_count: usize,
    rows: usize,
}

impl Staircase {
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// `s_m(λ)`.
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Row index of each landing, in walk order.
    pub fn landing_rows(&self) -> &[usize] {
        &self.landing_rows
    }

    pub fn landing_count(&self) -> usize {
        self.landing_rows.len()
    }

    pub fn stair_count(&self) -> usize {
        self.stair_count
    }

    /// Number of staircase cells in `row`.
    pub fn cells_in_row(&self, row: usize) -> usize {
        self.cells.iter().filter(|c| c.row == row).count()
    }

    /// `|T(λ) ∩ S_m(λ)|`.
    pub fn top_overlap(&self) -> usize {
        self.cells_in_row(self.rows)
    }

    /// Whether the walk reached the stair at the end of the top row.
    pub fn reaches_top(&self) -> bool {
        self.stair_count == self.rows
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }
}

pub fn staircase(lambda: &DistinctPartition, m: usize) -> Result<Staircase> {
    check_input(lambda, m)?;
    let n = lambda.len();
    let mut cells = Vec::with_capacity(n + m);
    let mut landing_rows = Vec::with_capacity(m);
    let mut stair_count = 0;
    'walk: for i in 1..=n {
        cells.push(Cell::new(i, lambda.row(i)));
        stair_count += 1;
        for j in landing_columns(lambda, m, i).rev() {
            if landing_rows.len() == m {
                break 'walk;
            }
            cells.push(Cell::new(i, j));
            landing_rows.push(i);
        }
    }
    debug_assert_eq!(landing_rows.len(), m);
    Ok(Staircase {
        cells,
        landing_rows,
        stair_count,
        rows: n,
    })
}

/// Number of staircase cells lying in the top row.
pub fn top_overlap(lambda: &DistinctPartition, m: usize) -> Result<usize> {
    Ok(staircase(lambda, m)?.top_overlap())
}

/// Draws the diagram top row first using `S`, `L` and `.`.
///
/// With `mark_staircase` every cell takes three columns and staircase cells
/// are bracketed, e.g. `[S]`. Trailing blanks are trimmed and every line
/// ends in `\n`.
pub fn render_ferrers(lambda: &DistinctPartition, m: usize, mark_staircase: bool) -> Result<String> {
    let grid = classify_cells(lambda, m)?;
    let walk = if mark_staircase {
        Some(staircase(lambda, m)?)
    } else {
        None
    };
    let mut out = String::new();
    for i in (1..=grid.row_count()).rev() {
        let mut line = String::new();
        for (j, class) in grid.rows[i - 1].iter().enumerate() {
            let symbol = class.symbol();
            match &walk {
                Some(s) if s.contains(Cell::new(i, j + 1)) => {
                    let _ = write!(line, "[{symbol}]");
                }
                Some(_) => {
                    let _ = write!(line, " {symbol} ");
                }
                None => line.push(symbol),
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{base_partition, enumerate_distinct};

    fn p(parts: &[usize]) -> DistinctPartition {
        DistinctPartition::new(parts.to_vec()).unwrap()
    }

    fn cells(list: &[(usize, usize)]) -> Vec<Cell> {
        list.iter().map(|&(r, c)| Cell::new(r, c)).collect()
    }

    #[test]
    fn classify_worked_example() {
        let grid = classify_cells(&p(&[14, 11, 9, 8, 6]), 3).unwrap();
        let mut stairs = grid.stairs();
        stairs.sort();
        let mut expected = cells(&[(1, 14), (2, 11), (3, 9), (4, 8), (5, 6), (5, 1), (5, 2)]);
        expected.sort();
        assert_eq!(stairs, expected);
        let mut landings = grid.cells_of(CellClass::Landing);
        landings.sort();
        let mut expected = cells(&[(1, 13), (1, 12), (2, 10), (4, 7), (5, 5), (5, 4), (5, 3)]);
        expected.sort();
        assert_eq!(landings, expected);
    }

    #[test]
    fn classify_consecutive_parts() {
        let grid = classify_cells(&p(&[3, 2, 1]), 0).unwrap();
        assert!(grid.cells_of(CellClass::Landing).is_empty());
        // The top row has length 1, so no column-top stairs.
        assert!(grid.cells_of(CellClass::ColumnTopStair).is_empty());
        let grid = classify_cells(&p(&[4, 3]), 0).unwrap();
        assert_eq!(grid.cells_of(CellClass::ColumnTopStair), cells(&[(2, 1), (2, 2)]));
        assert!(grid.cells_of(CellClass::Landing).is_empty());
    }

    #[test]
    fn classify_single_row() {
        let grid = classify_cells(&p(&[5]), 1).unwrap();
        let classes: Vec<_> = (1..=5).map(|j| grid.class(Cell::new(1, j)).unwrap()).collect();
        assert_eq!(
            classes,
            vec![
                CellClass::ColumnTopStair,
                CellClass::ColumnTopStair,
                CellClass::ColumnTopStair,
                CellClass::Landing,
                CellClass::RowEndStair,
            ]
        );
    }

    #[test]
    fn input_errors() {
        assert_eq!(classify_cells(&DistinctPartition::empty(), 0), Err(Error::EmptyPartition));
        assert_eq!(
            staircase(&p(&[5, 3]), 3),
            Err(Error::PartTooSmall { part: 3, m: 3 })
        );
        assert!(render_ferrers(&DistinctPartition::empty(), 1, false).is_err());
    }

    #[test]
    fn staircase_worked_example() {
        let s = staircase(&p(&[14, 11, 9, 8, 6]), 3).unwrap();
        assert_eq!(
            s.cells(),
            cells(&[(1, 14), (1, 13), (1, 12), (2, 11), (2, 10), (3, 9), (4, 8)]).as_slice()
        );
        assert_eq!(s.len(), 7);
        assert_eq!(s.landing_rows(), &[1, 1, 2]);
        assert_eq!(s.stair_count(), 4);
    }

    #[test]
    fn staircase_of_base_partition() {
        for m in 0..5 {
            for n in 1..6 {
                let lambda = base_partition(n, m);
                let s = staircase(&lambda, m).unwrap();
                assert_eq!(s.len(), m + n);
                assert_eq!(s.stair_count(), n);
                assert!(s.landing_rows().iter().all(|&r| r == n));
                assert_eq!(s.top_overlap(), m + 1);
            }
        }
    }

    #[test]
    fn staircase_case_one_example() {
        let s = staircase(&p(&[11, 10, 8, 5]), 1).unwrap();
        assert_eq!(s.cells(), cells(&[(1, 11), (2, 10), (2, 9), (3, 8)]).as_slice());
        assert_eq!(s.top_overlap(), 0);
    }

    #[test]
    fn top_overlap_examples() {
        assert_eq!(top_overlap(&p(&[9, 7, 6, 5]), 1).unwrap(), 1);
        assert_eq!(top_overlap(&p(&[11, 10, 8, 5]), 1).unwrap(), 0);
    }

    #[test]
    fn render_worked_example() {
        let text = render_ferrers(&p(&[14, 11, 9, 8, 6]), 3, false).unwrap();
        let expected = "\
SSLLLS
......LS
........S
.........LS
...........LLS
";
        assert_eq!(text, expected);
        let marked = render_ferrers(&p(&[14, 11, 9, 8, 6]), 3, true).unwrap();
        let expected = [
            " S  S  L  L  L  S",
            " .  .  .  .  .  .  L [S]",
            " .  .  .  .  .  .  .  . [S]",
            " .  .  .  .  .  .  .  .  . [L][S]",
            " .  .  .  .  .  .  .  .  .  .  . [L][L][S]",
        ]
        .map(|line| format!("{line}\n"))
        .concat();
        assert_eq!(marked, expected);
    }

    #[test]
    fn render_single_row() {
        assert_eq!(render_ferrers(&p(&[5]), 1, false).unwrap(), "SSSLS\n");
    }

    #[test]
    fn staircase_bounds_and_shape() {
        for m in 0..=4 {
            for size in 1..=45 {
                for lambda in enumerate_distinct(size, m) {
                    let n = lambda.len();
                    let s = staircase(&lambda, m).unwrap();
                    assert!(m < s.len() && s.len() <= m + n, "{lambda} m={m}");
                    assert_eq!(s.landing_count(), m);
                    assert!((1..=n).contains(&s.stair_count()));
                    for w in s.cells().windows(2) {
                        assert_eq!(w[1].col + 1, w[0].col);
                        assert!(w[1].row == w[0].row || w[1].row == w[0].row + 1);
                    }
                    assert_eq!(s.len() == m + n, s.reaches_top());
                    let grid = classify_cells(&lambda, m).unwrap();
                    let top_landings = grid
                        .cells_of(CellClass::Landing)
                        .iter()
                        .filter(|c| c.row == n)
                        .count();
                    assert_eq!(top_landings, m);
                    for (k, cell) in s.cells().iter().enumerate() {
                        let class = grid.class(*cell).unwrap();
                        assert_ne!(class, CellClass::ColumnTopStair);
                        assert_ne!(class, CellClass::Interior);
                        if k == 0 {
                            assert_eq!(class, CellClass::RowEndStair);
                        }
                    }
                }
            }
        }
    }
}
