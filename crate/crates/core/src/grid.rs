//! The Klein bottle grid graph: cells, edges, and quadrilateral faces.
//!
//! Rows and columns are 1-based throughout the public surface. The m-th row
//! is glued to the first with a column reversal (the twisted seam), and
//! column n wraps to column 1.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Grid dimensions. `m` rows, `n` columns.
///
/// Any `m >= 2`, `n >= 3` is accepted so that nonexistence of magic
/// labelings on odd-column grids stays observable; everything that needs an
/// even column count checks for it separately.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GridDims {
    m: usize,
    n: usize,
}

impl GridDims {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::RowCountTooSmall { m });
        }
        if n < 3 {
            return Err(Error::ColCountTooSmall { n });
        }
        Ok(GridDims { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> usize {
        self.m * self.n
    }

    /// floor(m/2)
    pub fn half_rows(&self) -> usize {
        self.m / 2
    }

    /// floor((m+1)/2); the number of odd rows.
    pub fn half_rows_up(&self) -> usize {
        (self.m + 1) / 2
    }

    /// n/2, the column count of one half of an even-column grid.
    pub fn half_cols(&self) -> usize {
        self.n / 2
    }

    /// n/2 - 1, the number of consecutive column pairs in one half.
    pub fn pair_sum_count(&self) -> usize {
        self.n / 2 - 1
    }

    /// m*n/2, the number of complementary label pairs (even n).
    pub fn pair_count(&self) -> usize {
        self.m * self.n / 2
    }

    pub fn require_even_cols(&self) -> Result<()> {
        if self.n % 2 != 0 {
            return Err(Error::ColCountOdd { n: self.n });
        }
        Ok(())
    }

    pub fn require_odd_rows(&self) -> Result<()> {
        if self.m % 2 == 0 {
            return Err(Error::RowCountEven { m: self.m });
        }
        Ok(())
    }

    /// Column index wrapped into 1..=n (residue 0 maps to n).
    pub(crate) fn wrap_col(&self, c: i64) -> usize {
        let n = self.n as i64;
        (((c - 1).rem_euclid(n)) + 1) as usize
    }
}

/// A 1-based cell position.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CellIndex {
    pub i: usize,
    pub j: usize,
}

impl CellIndex {
    pub fn new(i: usize, j: usize) -> Self {
        CellIndex { i, j }
    }
}

/// A quadrilateral face, stored as the ordered quadruple of its cells.
///
/// The order matters: on a 2-row grid the seam face at column n/2 has the
/// same cell set as an interior face but a different bounding cycle.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Face {
    cells: [CellIndex; 4],
}

impl Face {
    pub fn cells(&self) -> &[CellIndex; 4] {
        &self.cells
    }
}

/// All 2mn edges as unordered cell pairs, normalized (smaller endpoint first).
///
/// Horizontal edges wrap column n to column 1; vertical edges join
/// consecutive rows; the seam joins (m,j) to (1,n+1-j). On the degenerate
/// m = 2, odd-n grids the middle seam edge coincides with a vertical edge
/// and the set has 2mn - 1 elements.
pub fn edges(dims: GridDims) -> BTreeSet<(CellIndex, CellIndex)> {
    let (m, n) = (dims.m(), dims.n());
    let mut set = BTreeSet::new();
    let mut push = |a: CellIndex, b: CellIndex| {
        let pair = if a <= b { (a, b) } else { (b, a) };
        set.insert(pair);
    };
    for i in 1..=m {
        for j in 1..n {
            push(CellIndex::new(i, j), CellIndex::new(i, j + 1));
        }
        push(CellIndex::new(i, n), CellIndex::new(i, 1));
    }
    for i in 1..m {
        for j in 1..=n {
            push(CellIndex::new(i, j), CellIndex::new(i + 1, j));
        }
    }
    for j in 1..=n {
        push(CellIndex::new(m, j), CellIndex::new(1, n + 1 - j));
    }
    set
}

/// All mn faces: for each row pair (i, i+1) the faces {(i,j),(i,j+1),
/// (i+1,j),(i+1,j+1)} with the column wrap, and across the seam the faces
/// {(m,j),(m,j+1),(1,n-j),(1,n-j+1)} with column arithmetic mod n.
pub fn faces(dims: GridDims) -> Vec<Face> {
    let (m, n) = (dims.m(), dims.n());
    let mut out = Vec::with_capacity(m * n);
    for i in 1..m {
        for j in 1..=n {
            out.push(Face {
                cells: [
                    CellIndex::new(i, j),
                    CellIndex::new(i, dims.wrap_col(j as i64 + 1)),
                    CellIndex::new(i + 1, j),
                    CellIndex::new(i + 1, dims.wrap_col(j as i64 + 1)),
                ],
            });
        }
    }
    for j in 1..=n {
        out.push(Face {
            cells: [
                CellIndex::new(m, j),
                CellIndex::new(m, dims.wrap_col(j as i64 + 1)),
                CellIndex::new(1, dims.wrap_col(n as i64 - j as i64)),
                CellIndex::new(1, dims.wrap_col(n as i64 - j as i64 + 1)),
            ],
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_degenerate_dims() {
        assert_eq!(GridDims::new(1, 5), Err(Error::RowCountTooSmall { m: 1 }));
        assert_eq!(GridDims::new(3, 2), Err(Error::ColCountTooSmall { n: 2 }));
        assert!(GridDims::new(2, 3).is_ok());
    }

    #[test]
    fn wrap_col_maps_zero_to_n() {
        let d = GridDims::new(3, 10).unwrap();
        assert_eq!(d.wrap_col(0), 10);
        assert_eq!(d.wrap_col(11), 1);
        assert_eq!(d.wrap_col(10), 10);
    }

    #[test]
    fn two_row_odd_grid_merges_one_seam_edge() {
        let d = GridDims::new(2, 3).unwrap();
        assert_eq!(edges(d).len(), 2 * d.cells() - 1);
    }
}
