//! Dense linear algebra over GF(2) for systems with at most 64 unknowns.

/// Row-major matrix over GF(2); bit `j` of a row is the coefficient of
/// unknown `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: Vec<u64>,
    cols: u32,
}

/// Solution set `particular + span(kernel)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub particular: u64,
    pub kernel: Vec<u64>,
}

impl Solution {
    /// Every solution, in no particular order. Only sensible for small kernels.
    pub fn all(&self) -> Vec<u64> {
        let mut out = vec![self.particular];
        for &k in &self.kernel {
            let shifted: Vec<u64> = out.iter().map(|s| s ^ k).collect();
            out.extend(shifted);
        }
        out
    }
}

impl BitMatrix {
    pub fn from_rows(rows: Vec<u64>, cols: u32) -> Self {
        assert!(cols <= 64);
        BitMatrix { rows, cols }
    }

    /// Matrix of a linear map given the images of the unit vectors:
    /// `images[j]` is column `j`, with `nrows` output coordinates.
    pub fn from_columns(images: &[u64], nrows: u32) -> Self {
        let cols = images.len() as u32;
        let rows = (0..nrows)
            .map(|i| {
                images
                    .iter()
                    .enumerate()
                    .fold(0u64, |row, (j, &col)| row | (((col >> i) & 1) << j))
            })
            .collect();
        Self::from_rows(rows, cols)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> u32 {
        self.cols
    }

    pub fn apply(&self, x: u64) -> u64 {
        self.rows
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &r)| acc | ((((r & x).count_ones() & 1) as u64) << i))
    }

    pub fn rank(&self) -> u32 {
        self.reduce(0).1.len() as u32
    }

    /// Gauss-Jordan elimination of `[A | rhs]`. Returns the reduced rows with
    /// their right-hand sides and the pivot column of each nonzero row.
    fn reduce(&self, rhs: u64) -> (Vec<(u64, bool)>, Vec<u32>) {
        let mut rows: Vec<(u64, bool)> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, &r)| (r, (rhs >> i) & 1 == 1))
            .collect();
        let mut pivots = Vec::new();
        let mut next = 0usize;
        for col in 0..self.cols {
            let bit = 1u64 << col;
            let Some(p) = (next..rows.len()).find(|&r| rows[r].0 & bit != 0) else {
                continue;
            };
            rows.swap(next, p);
            let pivot = rows[next];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != next && row.0 & bit != 0 {
                    row.0 ^= pivot.0;
                    row.1 ^= pivot.1;
                }
            }
            pivots.push(col);
            next += 1;
        }
        (rows, pivots)
    }

    /// Solves `A x = rhs` (bit `i` of `rhs` is the `i`-th equation).
    pub fn solve(&self, rhs: u64) -> Option<Solution> {
        let (rows, pivots) = self.reduce(rhs);
        if rows[pivots.len()..].iter().any(|&(_, b)| b) {
            return None;
        }
        let particular = pivots
            .iter()
            .zip(&rows)
            .fold(0u64, |x, (&p, &(_, b))| x | ((b as u64) << p));
        let kernel = (0..self.cols)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                pivots
                    .iter()
                    .zip(&rows)
                    .fold(1u64 << free, |v, (&p, &(r, _))| v | (((r >> free) & 1) << p))
            })
            .collect();
        Some(Solution { particular, kernel })
    }
}
