//! Dense complex linear algebra: LU with partial pivoting, determinants,
//! solves, a one-norm condition estimate, and a power-iteration spectral
//! norm.  Matrices are row-major `Vec<C>`.

use crate::{Result, WhError, C, ZERO};

/// Row-major dense complex matrix.
#[derive(Clone, Debug)]
pub struct Mat {
    pub n_rows: usize,
    pub n_cols: usize,
    pub data: Vec<C>,
}

impl Mat {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        Mat { n_rows, n_cols, data: vec![ZERO; n_rows * n_cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = C::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(n_rows: usize, n_cols: usize, mut f: impl FnMut(usize, usize) -> C) -> Self {
        let mut m = Mat::zeros(n_rows, n_cols);
        for i in 0..n_rows {
            for j in 0..n_cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn matmul(&self, other: &Mat) -> Mat {
        assert_eq!(self.n_cols, other.n_rows);
        let mut out = Mat::zeros(self.n_rows, other.n_cols);
        for i in 0..self.n_rows {
            for k in 0..self.n_cols {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                let row = &other.data[k * other.n_cols..(k + 1) * other.n_cols];
                let orow = &mut out.data[i * other.n_cols..(i + 1) * other.n_cols];
                for j in 0..other.n_cols {
                    orow[j] += a * row[j];
                }
            }
        }
        out
    }

    pub fn add_scaled(&mut self, other: &Mat, s: C) {
        assert_eq!(self.data.len(), other.data.len());
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += s * b;
        }
    }

    pub fn matvec(&self, x: &[C]) -> Vec<C> {
        assert_eq!(self.n_cols, x.len());
        let mut y = vec![ZERO; self.n_rows];
        for i in 0..self.n_rows {
            let row = &self.data[i * self.n_cols..(i + 1) * self.n_cols];
            let mut s = ZERO;
            for j in 0..self.n_cols {
                s += row[j] * x[j];
            }
            y[i] = s;
        }
        y
    }

    /// Conjugate-transpose matrix-vector product.
    pub fn matvec_adj(&self, x: &[C]) -> Vec<C> {
        assert_eq!(self.n_rows, x.len());
        let mut y = vec![ZERO; self.n_cols];
        for i in 0..self.n_rows {
            let row = &self.data[i * self.n_cols..(i + 1) * self.n_cols];
            let xi = x[i].conj();
            for j in 0..self.n_cols {
                y[j] += (row[j] * xi).conj();
            }
        }
        y
    }

    pub fn one_norm(&self) -> f64 {
        let mut best = 0.0f64;
        for j in 0..self.n_cols {
            let mut s = 0.0;
            for i in 0..self.n_rows {
                s += self[(i, j)].norm();
            }
            best = best.max(s);
        }
        best
    }

    /// Spectral norm estimate by power iteration on `A* A`.
    pub fn spectral_norm(&self) -> f64 {
        let n = self.n_cols;
        if n == 0 {
            return 0.0;
        }
        // deterministic pseudo-random start vector
        let mut x: Vec<C> = (0..n)
            .map(|j| {
                let t = (j as f64 * 0.7548776662466927 + 0.1).fract();
                C::new(t - 0.5, (1.3 * t + 0.21).fract() - 0.5)
            })
            .collect();
        let mut norm = 0.0;
        for _ in 0..60 {
            let y = self.matvec(&x);
            let z = self.matvec_adj(&y);
            let zn = z.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
            if zn == 0.0 {
                return 0.0;
            }
            norm = zn.sqrt();
            for v in x.iter_mut().zip(&z) {
                *v.0 = v.1 / zn;
            }
        }
        norm
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = C;
    fn index(&self, (i, j): (usize, usize)) -> &C {
        &self.data[i * self.n_cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C {
        &mut self.data[i * self.n_cols + j]
    }
}

/// LU factorization with partial pivoting of a square matrix.
pub struct Lu {
    n: usize,
    lu: Vec<C>,
    piv: Vec<usize>,
    swaps: usize,
}

impl Lu {
    pub fn factor(a: &Mat) -> Result<Lu> {
        assert_eq!(a.n_rows, a.n_cols);
        let n = a.n_rows;
        let mut lu = a.data.clone();
        let mut piv = vec![0usize; n];
        let mut swaps = 0usize;
        for k in 0..n {
            let mut pk = k;
            let mut best = lu[k * n + k].norm();
            for i in k + 1..n {
                let v = lu[i * n + k].norm();
                if v > best {
                    best = v;
                    pk = i;
                }
            }
            if best == 0.0 {
                return Err(WhError::NearSingularTruncation { cond: f64::INFINITY });
            }
            piv[k] = pk;
            if pk != k {
                for j in 0..n {
                    lu.swap(k * n + j, pk * n + j);
                }
                swaps += 1;
            }
            let pivot = lu[k * n + k];
            for i in k + 1..n {
                let m = lu[i * n + k] / pivot;
                lu[i * n + k] = m;
                if m != ZERO {
                    for j in k + 1..n {
                        let v = lu[k * n + j];
                        lu[i * n + j] -= m * v;
                    }
                }
            }
        }
        Ok(Lu { n, lu, piv, swaps })
    }

    pub fn det(&self) -> C {
        let mut d = if self.swaps % 2 == 0 { C::new(1.0, 0.0) } else { C::new(-1.0, 0.0) };
        for k in 0..self.n {
            d *= self.lu[k * self.n + k];
        }
        d
    }

    pub fn solve_in_place(&self, b: &mut [C]) {
        let n = self.n;
        assert_eq!(b.len(), n);
        for k in 0..n {
            b.swap(k, self.piv[k]);
            let bk = b[k];
            if bk != ZERO {
                for i in k + 1..n {
                    let m = self.lu[i * n + k];
                    b[i] -= m * bk;
                }
            }
        }
        for k in (0..n).rev() {
            b[k] /= self.lu[k * n + k];
            let bk = b[k];
            if bk != ZERO {
                for i in 0..k {
                    let u = self.lu[i * n + k];
                    b[i] -= u * bk;
                }
            }
        }
    }

    pub fn solve(&self, b: &[C]) -> Vec<C> {
        let mut x = b.to_vec();
        self.solve_in_place(&mut x);
        x
    }

    /// Solve `A^T x = b` (plain transpose, no conjugation).
    pub fn solve_transpose(&self, b: &[C]) -> Vec<C> {
        let n = self.n;
        let mut x = b.to_vec();
        // A^T = (P^T L U)^T = U^T L^T P  =>  forward with U^T, back with L^T,
        // then unpivot.
        for k in 0..n {
            let mut s = x[k];
            for i in 0..k {
                s -= self.lu[i * n + k] * x[i];
            }
            x[k] = s / self.lu[k * n + k];
        }
        for k in (0..n).rev() {
            let mut s = x[k];
            for i in k + 1..n {
                s -= self.lu[i * n + k] * x[i];
            }
            x[k] = s;
        }
        for k in (0..n).rev() {
            x.swap(k, self.piv[k]);
        }
        x
    }

    /// Hager-style one-norm estimate of `||A^{-1}||_1`.
    pub fn inv_one_norm_estimate(&self) -> f64 {
        let n = self.n;
        let mut x = vec![C::new(1.0 / n as f64, 0.0); n];
        let mut est = 0.0;
        for _ in 0..5 {
            let y = self.solve(&x);
            let ynorm: f64 = y.iter().map(|v| v.norm()).sum();
            est = ynorm;
            // sign vector
            let s: Vec<C> = y
                .iter()
                .map(|v| if v.norm() == 0.0 { C::new(1.0, 0.0) } else { v / v.norm() })
                .collect();
            let z = self.solve_transpose(&s);
            let (mut jbest, mut zbest) = (0usize, 0.0f64);
            for (j, v) in z.iter().enumerate() {
                if v.norm() > zbest {
                    zbest = v.norm();
                    jbest = j;
                }
            }
            let xnorm_dot: f64 = z.iter().zip(&x).map(|(a, b)| (a.conj() * b).re).sum();
            if zbest <= xnorm_dot.abs() + 1e-14 {
                break;
            }
            x = vec![ZERO; n];
            x[jbest] = C::new(1.0, 0.0);
        }
        est
    }

    pub fn n(&self) -> usize {
        self.n
    }
}
