//! Labelings of the grid cells and the face-magic / balance checks.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::grid::{faces, Face, GridDims};
use crate::Label;

/// A bijection from the grid cells onto 1..=m*n, stored row-major.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Labeling {
    dims: GridDims,
    values: Vec<Label>,
}

impl Labeling {
    /// Builds a labeling from row-major values, checking the bijection.
    pub fn new(dims: GridDims, values: Vec<Label>) -> Result<Self> {
        let cells = dims.cells();
        if values.len() != cells {
            return Err(Error::ValueCount {
                expected: cells,
                got: values.len(),
            });
        }
        let mut seen = vec![false; cells + 1];
        for &v in &values {
            if v == 0 || v as usize > cells {
                return Err(Error::LabelRange {
                    value: v,
                    max: cells as Label,
                });
            }
            if seen[v as usize] {
                return Err(Error::LabelRepeated { value: v });
            }
            seen[v as usize] = true;
        }
        Ok(Labeling { dims, values })
    }

    /// Builds a labeling from m rows of n values each.
    pub fn from_rows(dims: GridDims, rows: &[Vec<Label>]) -> Result<Self> {
        if rows.len() != dims.m() || rows.iter().any(|r| r.len() != dims.n()) {
            return Err(Error::ValueCount {
                expected: dims.cells(),
                got: rows.iter().map(|r| r.len()).sum(),
            });
        }
        let mut values = Vec::with_capacity(dims.cells());
        for r in rows {
            values.extend_from_slice(r);
        }
        Labeling::new(dims, values)
    }

    pub fn dims(&self) -> GridDims {
        self.dims
    }

    /// The value at 1-based cell (i, j).
    pub fn get(&self, i: usize, j: usize) -> Label {
        debug_assert!(i >= 1 && i <= self.dims.m() && j >= 1 && j <= self.dims.n());
        self.values[(i - 1) * self.dims.n() + (j - 1)]
    }

    pub fn values(&self) -> &[Label] {
        &self.values
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Label]> {
        self.values.chunks(self.dims.n())
    }
}

/// The magic face sum 2(mn+1), defined for every grid; only even-column
/// grids can realize it.
pub(crate) fn face_target(dims: GridDims) -> i64 {
    2 * (dims.cells() as i64 + 1)
}

/// The magic value S = 2(mn+1). Errors on odd n, where no face-magic
/// labeling exists.
pub fn magic_value(dims: GridDims) -> Result<Label> {
    dims.require_even_cols()?;
    Ok(face_target(dims) as Label)
}

/// Outcome of checking every face sum against S = 2(mn+1).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerifyReport {
    magic_value: Label,
    violations: Vec<(Face, Label)>,
}

impl VerifyReport {
    pub fn is_magic(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn magic_value(&self) -> Label {
        self.magic_value
    }

    /// Every face whose sum differs from the magic value, with the observed sum.
    pub fn violations(&self) -> &[(Face, Label)] {
        &self.violations
    }
}

/// Checks every face of the grid. Deliberately accepts odd-column grids so
/// that the nonexistence of magic labelings there is testable; the target
/// sum is 2(mn+1) either way (any constant-sum labeling is forced to it).
pub fn verify(x: &Labeling) -> VerifyReport {
    let dims = x.dims();
    let target = face_target(dims);
    let mut violations = Vec::new();
    for face in faces(dims) {
        let sum: i64 = face.cells().iter().map(|c| x.get(c.i, c.j) as i64).sum();
        if sum != target {
            violations.push((face, sum as Label));
        }
    }
    VerifyReport {
        magic_value: target as Label,
        violations,
    }
}

/// True iff x_{i,j} + x_{i,n+1-j} = mn+1 for every cell in the left half.
pub fn is_equatorially_balanced(x: &Labeling) -> Result<bool> {
    let dims = x.dims();
    dims.require_even_cols()?;
    let half = (dims.cells() + 1) as i64;
    for i in 1..=dims.m() {
        for j in 1..=dims.half_cols() {
            if x.get(i, j) as i64 + x.get(i, dims.n() + 1 - j) as i64 != half {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The consecutive sums along row 1: a_j = x_{1,j} + x_{1,j+1} for
/// j = 1..=n/2-1.
pub fn row_pair_sums(x: &Labeling) -> Result<Vec<Label>> {
    let dims = x.dims();
    dims.require_even_cols()?;
    Ok((1..dims.half_cols())
        .map(|j| x.get(1, j) + x.get(1, j + 1))
        .collect())
}

/// The odd-m structural characterization of magic labelings: odd rows repeat
/// row 1's pair sums on the left half, even rows realize them on mirrored
/// columns, and both halves mirror to mn+1. Requires odd m and even n.
pub fn row_structure_holds(x: &Labeling) -> Result<bool> {
    let dims = x.dims();
    dims.require_even_cols()?;
    dims.require_odd_rows()?;
    let n = dims.n();
    let half = (dims.cells() + 1) as i64;
    let a = row_pair_sums(x)?;
    for i in 1..=dims.half_rows_up() {
        let r = 2 * i - 1;
        for (j, &aj) in a.iter().enumerate() {
            if x.get(r, j + 1) + x.get(r, j + 2) != aj {
                return Ok(false);
            }
        }
        for j in 1..=dims.half_cols() {
            if x.get(r, n + 1 - j) as i64 != half - x.get(r, j) as i64 {
                return Ok(false);
            }
        }
    }
    for i in 1..=dims.half_rows() {
        let r = 2 * i;
        for (j, &aj) in a.iter().enumerate() {
            let j = j + 1;
            if x.get(r, n - j) + x.get(r, n - j + 1) != aj {
                return Ok(false);
            }
        }
        for j in 1..=dims.half_cols() {
            if x.get(r, j) as i64 != half - x.get(r, n + 1 - j) as i64 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Helper for formula-driven constructions: a partially filled table with
/// set-once cells, converted into a checked `Labeling` at the end.
pub(crate) struct TableBuilder {
    dims: GridDims,
    cells: Vec<i64>,
}

impl TableBuilder {
    pub(crate) fn new(dims: GridDims) -> Self {
        TableBuilder {
            dims,
            cells: vec![0; dims.cells()],
        }
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, v: i64) {
        let idx = (i - 1) * self.dims.n() + (j - 1);
        debug_assert_eq!(self.cells[idx], 0, "cell ({i},{j}) written twice");
        self.cells[idx] = v;
    }

    pub(crate) fn get(&self, i: usize, j: usize) -> i64 {
        self.cells[(i - 1) * self.dims.n() + (j - 1)]
    }

    pub(crate) fn finish(self) -> Result<Labeling> {
        let max = self.dims.cells() as i64;
        let mut values = Vec::with_capacity(self.cells.len());
        for v in self.cells {
            if v < 1 || v > max {
                return Err(Error::LabelRange {
                    value: v.clamp(0, Label::MAX as i64) as Label,
                    max: max as Label,
                });
            }
            values.push(v as Label);
        }
        Labeling::new(self.dims, values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(m: usize, n: usize) -> GridDims {
        GridDims::new(m, n).unwrap()
    }

    #[test]
    fn bijection_is_enforced() {
        let d = dims(2, 4);
        assert_eq!(
            Labeling::new(d, vec![1, 2, 3, 4, 5, 6, 7]),
            Err(Error::ValueCount { expected: 8, got: 7 })
        );
        assert_eq!(
            Labeling::new(d, vec![1, 2, 3, 4, 5, 6, 7, 9]),
            Err(Error::LabelRange { value: 9, max: 8 })
        );
        assert_eq!(
            Labeling::new(d, vec![1, 2, 3, 4, 5, 6, 4, 8]),
            Err(Error::LabelRepeated { value: 4 })
        );
    }

    #[test]
    fn magic_value_rejects_odd_columns() {
        assert_eq!(magic_value(dims(2, 4)), Ok(18));
        assert_eq!(magic_value(dims(3, 5)), Err(Error::ColCountOdd { n: 5 }));
    }
}
