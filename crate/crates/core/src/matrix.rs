//! Small dense square matrices of reals.
//!
//! Everything here operates on graphs of at most a few dozen vertices,
//! so plain row-major storage and textbook algorithms are used
//! throughout.

use std::fmt;

/// A square matrix of `f64`, indexed by the canonical vertex order of
/// the graph it was derived from.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix {
    order: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(order: usize) -> DenseMatrix {
        DenseMatrix {
            order,
            data: vec![0.0; order * order],
        }
    }

    pub fn identity(order: usize) -> DenseMatrix {
        let mut m = DenseMatrix::zeros(order);
        for i in 0..order {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.order + j] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks(self.order.max(1))
    }

    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.order {
            for j in (i + 1)..self.order {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |acc, v| acc.max(v.abs()))
    }

    /// Maximum absolute row sum.
    pub fn inf_norm(&self) -> f64 {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.get(i, j).abs()).sum())
            .fold(0.0, f64::max)
    }

    pub fn mul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.order, other.order, "order mismatch");
        let n = self.order;
        let mut out = DenseMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(self.order, v.len(), "length mismatch");
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    pub fn add(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.order, other.order, "order mismatch");
        DenseMatrix {
            order: self.order,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, factor: f64) -> DenseMatrix {
        DenseMatrix {
            order: self.order,
            data: self.data.iter().map(|v| v * factor).collect(),
        }
    }

    /// Solves `self * x = rhs` by Gaussian elimination with partial
    /// pivoting. Returns `None` for a (numerically) singular system.
    pub fn solve(&self, rhs: &[f64]) -> Option<Vec<f64>> {
        assert_eq!(self.order, rhs.len(), "length mismatch");
        let n = self.order;
        let mut a = self.data.clone();
        let mut b = rhs.to_vec();

        for col in 0..n {
            let pivot_row =
                (col..n).max_by(|&r, &s| a[r * n + col].abs().total_cmp(&a[s * n + col].abs()))?;
            if a[pivot_row * n + col].abs() < 1e-12 {
                return None;
            }
            if pivot_row != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot_row * n + j);
                }
                b.swap(col, pivot_row);
            }
            let pivot = a[col * n + col];
            for row in (col + 1)..n {
                let factor = a[row * n + col] / pivot;
                if factor == 0.0 {
                    continue;
                }
                for j in col..n {
                    a[row * n + j] -= factor * a[col * n + j];
                }
                b[row] -= factor * b[col];
            }
        }

        let mut x = vec![0.0; n];
        for row in (0..n).rev() {
            let mut acc = b[row];
            for j in (row + 1)..n {
                acc -= a[row * n + j] * x[j];
            }
            x[row] = acc / a[row * n + row];
        }
        Some(x)
    }

    /// Matrix exponential by scaling and squaring with a truncated
    /// Taylor series. The scaled series is summed until terms fall
    /// below 1e-16, which keeps the final absolute entry error well
    /// inside 1e-9 for adjacency-sized inputs.
    pub fn exp(&self) -> DenseMatrix {
        let n = self.order;
        if n == 0 {
            return DenseMatrix::zeros(0);
        }
        let norm = self.inf_norm();
        let squarings = if norm > 0.5 {
            (norm / 0.5).log2().ceil() as u32
        } else {
            0
        };
        let scaled = self.scale(1.0 / f64::powi(2.0, squarings as i32));

        let mut sum = DenseMatrix::identity(n);
        let mut term = DenseMatrix::identity(n);
        for k in 1..=64 {
            term = term.mul(&scaled).scale(1.0 / k as f64);
            sum = sum.add(&term);
            if term.max_abs() < 1e-16 {
                break;
            }
        }
        for _ in 0..squarings {
            sum = sum.mul(&sum);
        }
        sum
    }
}

impl fmt::Display for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows().take(self.order) {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:.3}")).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_solve() {
        let m = DenseMatrix::identity(3);
        let x = m.solve(&[1.0, 2.0, 3.0]).unwrap();
        assert_eq!(x, vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn solve_small_system() {
        // [2 1; 1 3] x = [3; 5] -> x = [4/5, 7/5]
        let mut m = DenseMatrix::zeros(2);
        m.set(0, 0, 2.0);
        m.set(0, 1, 1.0);
        m.set(1, 0, 1.0);
        m.set(1, 1, 3.0);
        let x = m.solve(&[3.0, 5.0]).unwrap();
        assert!((x[0] - 0.8).abs() < 1e-12);
        assert!((x[1] - 1.4).abs() < 1e-12);
    }

    #[test]
    fn solve_singular_is_none() {
        let mut m = DenseMatrix::zeros(2);
        m.set(0, 0, 1.0);
        m.set(0, 1, 1.0);
        m.set(1, 0, 1.0);
        m.set(1, 1, 1.0);
        assert!(m.solve(&[1.0, 2.0]).is_none());
    }

    #[test]
    fn exp_of_zero_is_identity() {
        assert_eq!(DenseMatrix::zeros(4).exp(), DenseMatrix::identity(4));
    }

    #[test]
    fn exp_of_diagonal() {
        let mut m = DenseMatrix::zeros(2);
        m.set(0, 0, 1.0);
        m.set(1, 1, 2.0);
        let e = m.exp();
        assert!((e.get(0, 0) - 1f64.exp()).abs() < 1e-12);
        assert!((e.get(1, 1) - 2f64.exp()).abs() < 1e-12);
        assert!(e.get(0, 1).abs() < 1e-15);
    }
}
