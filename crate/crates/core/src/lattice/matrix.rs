use num_complex::Complex;

use crate::scalar::Real;

/// Dense square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix<T> {
    dim: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> ComplexMatrix<T> {
    pub fn zeros(dim: usize) -> Self {
        ComplexMatrix {
            dim,
            data: vec![Complex::new(T::zero(), T::zero()); dim * dim],
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let data = (0..dim * dim).map(|idx| f(idx / dim, idx % dim)).collect();
        ComplexMatrix { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex<T> {
        self.data[row * self.dim + col]
    }

    pub fn row(&self, row: usize) -> &[Complex<T>] {
        &self.data[row * self.dim..(row + 1) * self.dim]
    }

    /// Matrix product. Zero entries of `self` are skipped, as are the
    /// all-zero rows of `rhs`, so products with single-site projectors cost
    /// `O(L²)` rather than `O(L³)`.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let zero = Complex::new(T::zero(), T::zero());
        let rhs_nonzero: Vec<bool> = (0..n)
            .map(|k| rhs.row(k).iter().any(|z| *z != zero))
            .collect();
        let mut out = Self::zeros(n);
        for i in 0..n {
            let out_row = &mut out.data[i * n..(i + 1) * n];
            for (k, &a) in self.row(i).iter().enumerate() {
                if a == zero || !rhs_nonzero[k] {
                    continue;
                }
                for (o, &b) in out_row.iter_mut().zip(rhs.row(k)) {
                    *o = *o + a * b;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Complex<T>]) -> Vec<Complex<T>> {
        assert_eq!(self.dim, v.len(), "dimension mismatch");
        (0..self.dim)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .map(|(&a, &x)| a * x)
                    .fold(Complex::new(T::zero(), T::zero()), |s, t| s + t)
            })
            .collect()
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }

    /// Largest entry modulus.
    pub fn max_norm(&self) -> T {
        self.data.iter().map(|z| z.norm()).fold(T::zero(), T::max)
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.dim)
            .map(|i| self.get(i, i))
            .fold(Complex::new(T::zero(), T::zero()), |s, t| s + t)
    }

    /// `trace(self · rhs)` without forming the product.
    pub fn trace_of_product(&self, rhs: &Self) -> Complex<T> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut acc = Complex::new(T::zero(), T::zero());
        for q in 0..self.dim {
            for q2 in 0..self.dim {
                acc = acc + self.get(q, q2) * rhs.get(q2, q);
            }
        }
        acc
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self.get(c, r).conj())
    }

    /// Relabels sites by the shift `q → q + δ (mod L)`: the result has
    /// entry `[i][j] = self[i − δ][j − δ]`.
    pub fn shift_sites(&self, delta: i64) -> Self {
        let n = self.dim as i64;
        let back = |i: usize| (i as i64 - delta).rem_euclid(n) as usize;
        Self::from_fn(self.dim, |r, c| self.get(back(r), back(c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn product_matches_hand_computation() {
        // [[1, i], [2, 0]] · [[0, 1], [1, 1]] = [[i, 1 + i], [0, 2]]
        let a = ComplexMatrix::from_fn(2, |r, k| {
            [[c(1.0, 0.0), c(0.0, 1.0)], [c(2.0, 0.0), c(0.0, 0.0)]][r][k]
        });
        let b = ComplexMatrix::from_fn(2, |r, k| {
            [[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(1.0, 0.0)]][r][k]
        });
        let p = a.mul(&b);
        assert_eq!(p.get(0, 0), c(0.0, 1.0));
        assert_eq!(p.get(0, 1), c(1.0, 1.0));
        assert_eq!(p.get(1, 0), c(0.0, 0.0));
        assert_eq!(p.get(1, 1), c(2.0, 0.0));
        assert_eq!(a.trace_of_product(&b), p.trace());
        assert_eq!(
            a.mul_vec(&[c(1.0, 0.0), c(1.0, 0.0)]),
            vec![c(1.0, 1.0), c(2.0, 0.0)]
        );
    }

    #[test]
    fn shift_round_trip() {
        let a = ComplexMatrix::from_fn(5, |r, k| c(r as f64, k as f64));
        assert_eq!(a.shift_sites(0), a);
        assert_eq!(a.shift_sites(3).shift_sites(-3), a);
        assert_eq!(a.shift_sites(5), a);
        assert_eq!(a.shift_sites(1).get(1, 2), a.get(0, 1));
    }
}
