//! Small dense matrices over GF(3).

use super::poly::{add3, inv3, mul3, sub3};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat3 {
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl Mat3 {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u8>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged matrix");
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, v % 3);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| add3(acc, mul3(a, b)))
            })
            .collect()
    }

    pub fn mul(&self, other: &Mat3) -> Mat3 {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat3::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = add3(out.get(i, j), mul3(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Mat3 {
        let mut t = Mat3::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    let (a, b) = (self.get(r, j), self.get(p, j));
                    self.set(r, j, b);
                    self.set(p, j, a);
                }
            }
            let s = inv3(self.get(r, c));
            for j in 0..self.cols {
                let v = mul3(self.get(r, j), s);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                let f = self.get(i, c);
                if i == r || f == 0 {
                    continue;
                }
                for j in 0..self.cols {
                    let v = sub3(self.get(i, j), mul3(f, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Mat3> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Mat3::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Mat3::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j));
            }
        }
        Some(inv)
    }

    /// Basis of the right null space `{x : A x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<u8>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![0u8; self.cols];
                x[f] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    x[pc] = sub3(0, m.get(r, f));
                }
                x
            })
            .collect()
    }
}
