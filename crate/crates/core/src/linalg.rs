//! Exact dense linear algebra over the rationals.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Square matrix of exact rationals, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalMatrix {
    n: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(n: usize) -> Self {
        RationalMatrix {
            n,
            data: vec![BigRational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = BigRational::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> &BigRational {
        &self.data[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: BigRational) {
        self.data[row * self.n + col] = value;
    }

    fn row_mut(&mut self, row: usize) -> &mut [BigRational] {
        &mut self.data[row * self.n..(row + 1) * self.n]
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<RationalMatrix> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if pivot != col {
                for k in 0..n {
                    a.data.swap(pivot * n + k, col * n + k);
                    inv.data.swap(pivot * n + k, col * n + k);
                }
            }
            let p = a.get(col, col).clone();
            if !p.is_one() {
                for x in a.row_mut(col) {
                    *x = &*x / &p;
                }
                for x in inv.row_mut(col) {
                    *x = &*x / &p;
                }
            }
            let pivot_row = a.data[col * n..(col + 1) * n].to_vec();
            let pivot_inv = inv.data[col * n..(col + 1) * n].to_vec();
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for k in 0..n {
                    if !pivot_row[k].is_zero() {
                        let v = a.get(r, k) - &factor * &pivot_row[k];
                        a.set(r, k, v);
                    }
                    if !pivot_inv[k].is_zero() {
                        let v = inv.get(r, k) - &factor * &pivot_inv[k];
                        inv.set(r, k, v);
                    }
                }
            }
        }
        Some(inv)
    }

    /// Row vector times matrix.
    pub fn left_mul(&self, v: &[BigRational]) -> Vec<BigRational> {
        let n = self.n;
        let mut out = vec![BigRational::zero(); n];
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let m = self.get(i, j);
                if !m.is_zero() {
                    *o += x * m;
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            let v: Vec<BigRational> = (0..n).map(|k| self.get(i, k).clone()).collect();
            let prod = other.left_mul(&v);
            for (j, x) in prod.into_iter().enumerate() {
                out.set(i, j, x);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn inverse_of_small_matrix() {
        let mut m = RationalMatrix::zeros(3);
        let vals = [[0, 2, 1], [1, 1, 0], [3, 0, 1]];
        for (i, row) in vals.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, r(v, 1));
            }
        }
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), RationalMatrix::identity(3));
        assert_eq!(inv.mul(&m), RationalMatrix::identity(3));
        // det = -5, cofactor (0,0) = 1
        assert_eq!(inv.get(0, 0), &r(-1, 5));
    }

    #[test]
    fn singular_matrix() {
        let mut m = RationalMatrix::zeros(2);
        m.set(0, 0, r(1, 2));
        m.set(0, 1, r(1, 1));
        m.set(1, 0, r(1, 1));
        m.set(1, 1, r(2, 1));
        assert!(m.inverse().is_none());
    }
}
