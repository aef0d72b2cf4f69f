//! Rook placements on the upper-triangular boards `T_n = {(i, j) : 1 ≤ i ≤ j ≤ n}`.
//!
//! A partition `π` of `[n]` corresponds to the rook `R_π` on `T_{n-1}` with a
//! one at `(i, j)` whenever `i` and `j + 1` are adjacent in a block. The unit
//! rook (board `-1`) corresponds to the trivial partition and is the identity
//! of the rook algebra.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::RookError;
use crate::lincomb::LinComb;
use crate::partition::{normalize, SetPartition};

/// A rook placement on `T_board`. Cells are 1-based `(row, column)` pairs
/// kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RookPlacement {
    board: i64,
    ones: BTreeSet<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RookJson {
    board: i64,
    ones: Vec<[usize; 2]>,
}

impl RookPlacement {
    pub fn new<I>(board: i64, ones: I) -> Result<Self, RookError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if board < -1 {
            return Err(RookError::InvalidBoard(board));
        }
        let mut rows = BTreeSet::new();
        let mut cols = BTreeSet::new();
        let mut cells = BTreeSet::new();
        for (i, j) in ones {
            if i < 1 || i > j || j as i64 > board {
                return Err(RookError::CellOutsideBoard(i, j, board));
            }
            if !cells.insert((i, j)) {
                continue;
            }
            if !rows.insert(i) {
                return Err(RookError::RowConflict(i));
            }
            if !cols.insert(j) {
                return Err(RookError::ColumnConflict(j));
            }
        }
        Ok(Self { board, ones: cells })
    }

    /// The single rook on `T_{-1}`.
    pub fn unit() -> Self {
        Self {
            board: -1,
            ones: BTreeSet::new(),
        }
    }

    /// The rook with no ones on `T_board`.
    pub fn empty(board: usize) -> Self {
        Self {
            board: board as i64,
            ones: BTreeSet::new(),
        }
    }

    /// The identity permutation matrix seen as a rook on `T_board`.
    pub fn diagonal(board: usize) -> Self {
        Self {
            board: board as i64,
            ones: (1..=board).map(|i| (i, i)).collect(),
        }
    }

    pub fn board(&self) -> i64 {
        self.board
    }

    pub fn is_unit(&self) -> bool {
        self.board == -1
    }

    pub fn ones(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.ones.iter().copied()
    }

    pub fn num_ones(&self) -> usize {
        self.ones.len()
    }

    pub fn contains(&self, row: usize, column: usize) -> bool {
        self.ones.contains(&(row, column))
    }

    fn side(&self) -> usize {
        self.board.max(0) as usize
    }

    /// Canonical compact JSON: `{"board":n,"ones":[[i,j],…]}` with sorted cells.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&RookJson {
            board: self.board,
            ones: self.ones.iter().map(|&(i, j)| [i, j]).collect(),
        })
        .expect("rook JSON serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, RookError> {
        let raw: RookJson =
            serde_json::from_str(text).map_err(|e| RookError::Parse(e.to_string()))?;
        Self::new(raw.board, raw.ones.into_iter().map(|[i, j]| (i, j)))
    }

    /// ASCII rendering, one line per row, `1` for a rook and `.` otherwise.
    /// Cells below the diagonal are blank.
    pub fn grid(&self) -> String {
        let n = self.side();
        let mut out = String::new();
        for i in 1..=n {
            for j in 1..=n {
                out.push(if j < i {
                    ' '
                } else if self.contains(i, j) {
                    '1'
                } else {
                    '.'
                });
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for RookPlacement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}

impl FromStr for RookPlacement {
    type Err = RookError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::from_json(s)
    }
}

impl Serialize for RookPlacement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RookJson {
            board: self.board,
            ones: self.ones.iter().map(|&(i, j)| [i, j]).collect(),
        }
        .serialize(serializer)
    }
}

/// A permutation matrix stored by the column of the one in each row.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PermutationMatrix {
    column_of: Vec<usize>,
}

impl PermutationMatrix {
    pub fn new(column_of: Vec<usize>) -> Option<Self> {
        let n = column_of.len();
        let mut seen = vec![false; n + 1];
        for &c in &column_of {
            if c == 0 || c > n || std::mem::replace(&mut seen[c], true) {
                return None;
            }
        }
        Some(Self { column_of })
    }

    pub fn size(&self) -> usize {
        self.column_of.len()
    }

    pub fn column_of(&self) -> &[usize] {
        &self.column_of
    }

    /// Whether the matrix agrees with `rook` on every cell of its board.
    pub fn agrees_on_board(&self, rook: &RookPlacement) -> bool {
        self.size() == rook.side()
            && self.column_of.iter().enumerate().all(|(r, &c)| {
                let i = r + 1;
                c < i || rook.contains(i, c)
            })
            && rook.ones().all(|(i, j)| self.column_of[i - 1] == j)
    }
}

pub type RookAlgebraElement = LinComb<RookPlacement>;

impl LinComb<RookPlacement> {
    /// The unit rook with coefficient one.
    pub fn one() -> Self {
        Self::basis(RookPlacement::unit())
    }
}

/// The rook `R_π` on `T_{n-1}`; the unit rook for the trivial partition.
pub fn partition_to_rook(partition: &SetPartition) -> RookPlacement {
    let ones = partition
        .blocks()
        .iter()
        .flat_map(|b| b.windows(2).map(|w| (w[0], w[1] - 1)))
        .collect();
    RookPlacement {
        board: partition.n() as i64 - 1,
        ones,
    }
}

/// The partition `π_R` of `[board + 1]`.
pub fn rook_to_partition(rook: &RookPlacement) -> SetPartition {
    let n = (rook.board + 1) as usize;
    let mut next = vec![0usize; n + 1];
    let mut has_prev = vec![false; n + 1];
    for (i, j) in rook.ones() {
        next[i] = j + 1;
        has_prev[j + 1] = true;
    }
    let blocks = (1..=n)
        .filter(|&s| !has_prev[s])
        .map(|start| {
            let mut block = vec![start];
            let mut cur = start;
            while next[cur] != 0 {
                cur = next[cur];
                block.push(cur);
            }
            block
        })
        .collect();
    normalize(blocks).expect("a valid rook yields a partition")
}

/// Extended direct sum `R ⊕ (0) ⊕ S`. The unit rook is a two-sided identity.
pub fn edsum(left: &RookPlacement, right: &RookPlacement) -> RookPlacement {
    let offset = (left.board + 1) as usize;
    let mut ones = left.ones.clone();
    ones.extend(right.ones().map(|(i, j)| (i + offset, j + offset)));
    RookPlacement {
        board: left.board + right.board + 1,
        ones,
    }
}

/// Every `m` with `R = R' ⊕̂ R''` and `R'` on `T_{m-1}`: no one sits in row
/// `≤ m` and column `≥ m` at the same time.
pub fn slash_decompositions(rook: &RookPlacement) -> Vec<usize> {
    (1..=rook.side())
        .filter(|&m| !rook.ones().any(|(i, j)| i <= m && m <= j))
        .collect()
}

/// Splits a rook at every cut point into edsum-indecomposable factors.
pub fn edsum_factor(rook: &RookPlacement) -> Vec<RookPlacement> {
    if rook.is_unit() {
        return Vec::new();
    }
    let mut bounds = slash_decompositions(rook);
    bounds.push(rook.side() + 1);
    let mut lo = 1;
    bounds
        .into_iter()
        .map(|m| {
            let ones = rook
                .ones()
                .filter(|&(i, _)| i >= lo && i < m)
                .map(|(i, j)| (i + 1 - lo, j + 1 - lo))
                .collect();
            let factor = RookPlacement {
                board: (m - lo) as i64,
                ones,
            };
            lo = m + 1;
            factor
        })
        .collect()
}

/// The first paired zero row and zero column that block an extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    pub k: usize,
    pub row: usize,
    pub column: usize,
}

fn zero_lines(rook: &RookPlacement) -> (Vec<usize>, Vec<usize>) {
    let n = rook.side();
    let mut row_used = vec![false; n + 1];
    let mut col_used = vec![false; n + 1];
    for (i, j) in rook.ones() {
        row_used[i] = true;
        col_used[j] = true;
    }
    let rows: Vec<usize> = (1..=n).filter(|&i| !row_used[i]).collect();
    let cols: Vec<usize> = (1..=n).filter(|&j| !col_used[j]).collect();
    assert_eq!(
        rows.len(),
        cols.len(),
        "rook invariant violated: zero row and zero column counts differ"
    );
    (rows, cols)
}

/// Pairs the zero rows `i_1 < … < i_r` with the zero columns `j_1 < … < j_r`
/// and reports the first `k` with `i_k ≤ j_k`, if any.
pub fn extension_obstruction(rook: &RookPlacement) -> Result<Option<Obstruction>, RookError> {
    if rook.is_unit() {
        return Err(RookError::UnitRook);
    }
    let (rows, cols) = zero_lines(rook);
    Ok(rows
        .into_iter()
        .zip(cols)
        .enumerate()
        .find(|(_, (i, j))| i <= j)
        .map(|(k, (row, column))| Obstruction {
            k: k + 1,
            row,
            column,
        }))
}

/// Linear-time extendability test: `i_k > j_k` for every paired zero row and
/// zero column.
pub fn is_extendable(rook: &RookPlacement) -> Result<bool, RookError> {
    Ok(extension_obstruction(rook)?.is_none())
}

/// Completes an extendable rook to a permutation matrix by adding ones at
/// `(i_k, j_k)`, all strictly below the diagonal.
pub fn extend(rook: &RookPlacement) -> Result<PermutationMatrix, RookError> {
    if let Some(Obstruction { k, row, column }) = extension_obstruction(rook)? {
        return Err(RookError::NotExtendable { k, row, column });
    }
    let n = rook.side();
    let mut column_of = vec![0; n];
    for (i, j) in rook.ones() {
        column_of[i - 1] = j;
    }
    let (rows, cols) = zero_lines(rook);
    for (i, j) in rows.into_iter().zip(cols) {
        column_of[i - 1] = j;
    }
    Ok(PermutationMatrix { column_of })
}

/// Searches all `board!` permutation matrices for one agreeing with `rook` on
/// `T_board`.
pub fn is_extendable_bruteforce(rook: &RookPlacement) -> Result<bool, RookError> {
    if rook.is_unit() {
        return Err(RookError::UnitRook);
    }
    if rook.board > 8 {
        return Err(RookError::BoardTooLarge(rook.board));
    }
    let n = rook.side();
    Ok((1..=n).permutations(n).any(|perm| {
        (0..n).all(|r| {
            let (i, c) = (r + 1, perm[r]);
            // upper-triangular cells of row i must match the rook exactly
            (c < i || rook.contains(i, c)) && rook.ones().all(|(a, b)| a != i || b == c)
        })
    }))
}

/// Every rook on `T_board`, built row by row; independent of the partition
/// bijection.
pub fn enumerate_rooks(board: usize) -> Vec<RookPlacement> {
    fn go(
        row: usize,
        board: usize,
        used: &mut Vec<bool>,
        cells: &mut Vec<(usize, usize)>,
        out: &mut Vec<RookPlacement>,
    ) {
        if row > board {
            out.push(RookPlacement {
                board: board as i64,
                ones: cells.iter().copied().collect(),
            });
            return;
        }
        go(row + 1, board, used, cells, out);
        for col in row..=board {
            if !used[col] {
                used[col] = true;
                cells.push((row, col));
                go(row + 1, board, used, cells, out);
                cells.pop();
                used[col] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(
        1,
        board,
        &mut vec![false; board + 1],
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// Product in the rook algebra: bilinear extension of [`edsum`].
pub fn rook_product(u: &RookAlgebraElement, v: &RookAlgebraElement) -> RookAlgebraElement {
    u.bilinear(v, edsum)
}
