//! Minimal dense complex matrices for operator algebra checks and the
//! matrix-exponential route. Row-major storage; sized for 2^n with small n.

use num_complex::Complex64;

#[derive(Debug, Clone, PartialEq)]
pub struct CMat {
    dim: usize,
    data: Vec<Complex64>,
}

impl CMat {
    pub fn zeros(dim: usize) -> Self {
        CMat {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = CMat::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mul(&self, other: &CMat) -> CMat {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = CMat::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn adjoint(&self) -> CMat {
        let n = self.dim;
        let mut out = CMat::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn scale(&self, s: Complex64) -> CMat {
        CMat {
            dim: self.dim,
            data: self.data.iter().map(|&x| x * s).collect(),
        }
    }

    pub fn add(&self, other: &CMat) -> CMat {
        assert_eq!(self.dim, other.dim);
        CMat {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &CMat) -> CMat {
        assert_eq!(self.dim, other.dim);
        CMat {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &CMat) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Maximum absolute row sum (induced infinity norm).
    pub fn norm_inf(&self) -> f64 {
        let n = self.dim;
        (0..n)
            .map(|i| (0..n).map(|j| self[(i, j)].norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Matrix exponential by scaling-and-squaring with a Taylor series run
    /// to `tol` on the scaled matrix.
    pub fn expm(&self, tol: f64) -> CMat {
        let norm = self.norm_inf();
        let squarings = if norm > 0.5 {
            (norm / 0.5).log2().ceil() as u32
        } else {
            0
        };
        let scaled = self.scale(Complex64::new(1.0 / 2f64.powi(squarings as i32), 0.0));

        let mut result = CMat::identity(self.dim);
        let mut term = CMat::identity(self.dim);
        for k in 1..=64u32 {
            term = term.mul(&scaled).scale(Complex64::new(1.0 / k as f64, 0.0));
            result = result.add(&term);
            if term.max_abs() < tol {
                break;
            }
        }
        for _ in 0..squarings {
            result = result.mul(&result);
        }
        result
    }

    /// Apply to a state vector.
    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }
}

impl std::ops::Index<(usize, usize)> for CMat {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.dim + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expm_of_pauli_rotation() {
        // exp(i theta X) = cos(theta) I + i sin(theta) X
        let theta = 0.63;
        let mut x = CMat::zeros(2);
        x[(0, 1)] = Complex64::new(0.0, theta);
        x[(1, 0)] = Complex64::new(0.0, theta);
        let e = x.expm(1e-14);
        assert!((e[(0, 0)].re - theta.cos()).abs() < 1e-13);
        assert!((e[(0, 1)].im - theta.sin()).abs() < 1e-13);
    }

    #[test]
    fn expm_matches_squaring_identity() {
        // exp(A)^2 = exp(2A) for commuting (same) matrix
        let mut a = CMat::zeros(2);
        a[(0, 0)] = Complex64::new(0.2, 0.1);
        a[(0, 1)] = Complex64::new(-0.4, 0.0);
        a[(1, 0)] = Complex64::new(0.4, 0.0);
        a[(1, 1)] = Complex64::new(-0.2, -0.1);
        let e1 = a.expm(1e-14);
        let e2 = a.scale(Complex64::new(2.0, 0.0)).expm(1e-14);
        assert!(e1.mul(&e1).max_abs_diff(&e2) < 1e-12);
    }
}
