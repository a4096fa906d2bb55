//! Dense exact linear algebra over the coefficient field.
//!
//! Rank and determinant use fraction-free Bareiss elimination when the
//! scalar type asks for it (the rationals, to control coefficient growth);
//! prime fields use ordinary elimination. Pivots are the first nonzero
//! entry in column order; there are no numerical pivot heuristics in exact
//! arithmetic.

use thiserror::Error;

use crate::field::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    Shape(String),
}

/// Row-major dense matrix of field elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix<K: Scalar> {
    rows: usize,
    cols: usize,
    entries: Vec<K>,
}

impl<K: Scalar> ExactMatrix<K> {
    pub fn new(rows: usize, cols: usize, entries: Vec<K>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        ExactMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![K::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = K::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols));
        ExactMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut out = ExactMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out: ExactMatrix<K> = ExactMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a.clone() * other[(k, j)].clone();
                    out[(i, j)] = out[(i, j)].clone() + prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[K]) -> Vec<K> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(K::zero(), |acc, j| {
                    acc + self[(i, j)].clone() * v[j].clone()
                })
            })
            .collect()
    }

    /// Exact rank.
    pub fn rank(&self) -> usize {
        if K::PREFER_FRACTION_FREE {
            self.rank_bareiss()
        } else {
            self.rank_plain()
        }
    }

    fn rank_plain(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(pivot) = (rank..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(rank, pivot);
            let inv = m[(rank, col)].inv().expect("pivot is nonzero");
            for r in rank + 1..m.rows {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone() * inv.clone();
                for c in col..m.cols {
                    let delta = factor.clone() * m[(rank, c)].clone();
                    m[(r, c)] = m[(r, c)].clone() - delta;
                }
            }
            rank += 1;
        }
        rank
    }

    fn rank_bareiss(&self) -> usize {
        let mut m = self.clone();
        for r in 0..m.rows {
            K::clear_denominators(&mut m.entries[r * m.cols..(r + 1) * m.cols]);
        }
        let mut prev = K::one();
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(pivot) = (rank..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(rank, pivot);
            let pivot_val = m[(rank, col)].clone();
            for r in rank + 1..m.rows {
                for c in col + 1..m.cols {
                    let num = m[(r, c)].clone() * pivot_val.clone()
                        - m[(r, col)].clone() * m[(rank, c)].clone();
                    m[(r, c)] = num
                        .div_exact(&prev)
                        .expect("Bareiss division is exact");
                }
                m[(r, col)] = K::zero();
            }
            prev = pivot_val;
            rank += 1;
        }
        rank
    }

    /// One exact solution of `self * x = rhs`, or `None` when inconsistent.
    /// Free variables are set to zero.
    pub fn solve(&self, rhs: &[K]) -> Option<Vec<K>> {
        assert_eq!(rhs.len(), self.rows, "rhs length must equal row count");
        let mut m = self.clone();
        let mut b = rhs.to_vec();
        let mut pivot_cols = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            b.swap(row, p);
            let inv = m[(row, col)].inv().expect("pivot is nonzero");
            for c in col..m.cols {
                m[(row, c)] = m[(row, c)].clone() * inv.clone();
            }
            b[row] = b[row].clone() * inv;
            for r in 0..m.rows {
                if r == row || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for c in col..m.cols {
                    let delta = factor.clone() * m[(row, c)].clone();
                    m[(r, c)] = m[(r, c)].clone() - delta;
                }
                let delta = factor * b[row].clone();
                b[r] = b[r].clone() - delta;
            }
            pivot_cols.push(col);
            row += 1;
        }
        // Rows of zeros must have zero right-hand side.
        for r in row..m.rows {
            if !b[r].is_zero() {
                return None;
            }
        }
        let mut x = vec![K::zero(); self.cols];
        for (r, &col) in pivot_cols.iter().enumerate() {
            x[col] = b[r].clone();
        }
        Some(x)
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> Result<K, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(K::one());
        }
        let mut m = self.clone();
        let mut scale = K::one();
        for r in 0..n {
            let factor = K::clear_denominators(&mut m.entries[r * n..(r + 1) * n]);
            scale = scale * factor;
        }
        let mut sign_flip = false;
        let mut prev = K::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !m[(r, k)].is_zero()) else {
                    return Ok(K::zero());
                };
                m.swap_rows(k, p);
                sign_flip = !sign_flip;
            }
            let pivot = m[(k, k)].clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let num =
                        m[(i, j)].clone() * pivot.clone() - m[(i, k)].clone() * m[(k, j)].clone();
                    m[(i, j)] = num
                        .div_exact(&prev)
                        .expect("Bareiss division is exact");
                }
                m[(i, k)] = K::zero();
            }
            prev = pivot;
        }
        let mut d = m[(n - 1, n - 1)].clone();
        if sign_flip {
            d = -d;
        }
        d.div_exact(&scale).ok_or(LinalgError::Singular)
    }

    /// Inverse via Gauss-Jordan; `Err(Singular)` when not invertible.
    pub fn inverse(&self) -> Result<Self, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut inv: ExactMatrix<K> = ExactMatrix::identity(n);
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return Err(LinalgError::Singular);
            };
            m.swap_rows(col, p);
            inv.swap_rows(col, p);
            let pivot_inv = m[(col, col)].inv().expect("pivot is nonzero");
            for c in 0..n {
                m[(col, c)] = m[(col, c)].clone() * pivot_inv.clone();
                inv[(col, c)] = inv[(col, c)].clone() * pivot_inv.clone();
            }
            for r in 0..n {
                if r == col || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for c in 0..n {
                    let dm = factor.clone() * m[(col, c)].clone();
                    m[(r, c)] = m[(r, c)].clone() - dm;
                    let di = factor.clone() * inv[(col, c)].clone();
                    inv[(r, c)] = inv[(r, c)].clone() - di;
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl<K: Scalar> std::ops::Index<(usize, usize)> for ExactMatrix<K> {
    type Output = K;
    fn index(&self, (r, c): (usize, usize)) -> &K {
        &self.entries[r * self.cols + c]
    }
}

impl<K: Scalar> std::ops::IndexMut<(usize, usize)> for ExactMatrix<K> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut K {
        &mut self.entries[r * self.cols + c]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, PrimeField, Rationals};
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rat(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn random_fp_matrix(rows: usize, cols: usize, seed: u64) -> ExactMatrix<Fp> {
        let field = PrimeField::new(10007).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let entries = (0..rows * cols)
            .map(|_| Fp::new(&field, rng.gen_range(0..10007)))
            .collect();
        ExactMatrix::new(rows, cols, entries)
    }

    /// Independent oracle: determinant as the signed sum over permutations.
    fn det_leibniz<K: Scalar>(m: &ExactMatrix<K>) -> K {
        fn go<K: Scalar>(m: &ExactMatrix<K>, cols: &mut Vec<usize>, row: usize, even: bool) -> K {
            if cols.is_empty() {
                return if even { K::one() } else { -K::one() };
            }
            let mut acc = K::zero();
            for i in 0..cols.len() {
                let col = cols.remove(i);
                let sub = go(m, cols, row + 1, even == (i % 2 == 0));
                acc = acc + m[(row, col)].clone() * sub;
                cols.insert(i, col);
            }
            acc
        }
        let mut cols: Vec<usize> = (0..m.cols()).collect();
        go(m, &mut cols, 0, true)
    }

    #[test]
    fn rank_identity_and_zero() {
        assert_eq!(ExactMatrix::<BigRational>::identity(5).rank(), 5);
        assert_eq!(ExactMatrix::<BigRational>::zero(3, 7).rank(), 0);
        assert_eq!(ExactMatrix::<Fp>::identity(5).rank(), 5);
    }

    #[test]
    fn rank_equals_transpose_rank() {
        for seed in 0..6 {
            let m = random_fp_matrix(7, 11, seed);
            assert_eq!(m.rank(), m.transpose().rank());
        }
    }

    #[test]
    fn rank_invariant_under_row_operations() {
        let field = PrimeField::new(10007).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let m = random_fp_matrix(5, 8, 3);
        let before = m.rank();
        // Multiply on the left by a random invertible matrix.
        let g = loop {
            let candidate = ExactMatrix::new(
                5,
                5,
                (0..25)
                    .map(|_| Fp::new(&field, rng.gen_range(0..10007)))
                    .collect(),
            );
            if candidate.rank() == 5 {
                break candidate;
            }
        };
        assert_eq!(g.mul(&m).rank(), before);
    }

    #[test]
    fn solve_examples() {
        let id = ExactMatrix::<BigRational>::identity(4);
        let v: Vec<_> = (1..=4).map(rat).collect();
        assert_eq!(id.solve(&v).unwrap(), v);

        let zero = ExactMatrix::<BigRational>::zero(3, 3);
        assert!(zero.solve(&[rat(0), rat(1), rat(0)]).is_none());
        assert_eq!(zero.solve(&[rat(0), rat(0), rat(0)]).unwrap(), vec![rat(0); 3]);
    }

    #[test]
    fn solve_round_trip_over_fp() {
        let field = PrimeField::new(10007).unwrap();
        for seed in 0..8 {
            let m = random_fp_matrix(6, 9, seed);
            let mut rng = ChaCha8Rng::seed_from_u64(1000 + seed);
            let x0: Vec<Fp> = (0..9).map(|_| Fp::new(&field, rng.gen_range(0..10007))).collect();
            let rhs = m.mul_vec(&x0);
            let x = m.solve(&rhs).expect("constructed system is consistent");
            assert_eq!(m.mul_vec(&x), rhs);
        }
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(ExactMatrix::<BigRational>::identity(4).det().unwrap(), rat(1));
        let diag = ExactMatrix::from_rows(vec![
            vec![rat(2), rat(0), rat(0)],
            vec![rat(0), rat(3), rat(0)],
            vec![rat(0), rat(0), rat(5)],
        ]);
        assert_eq!(diag.det().unwrap(), rat(30));
        assert!(ExactMatrix::<BigRational>::zero(2, 3).det().is_err());
    }

    #[test]
    fn determinant_matches_cofactor_oracle() {
        for n in 1..=5 {
            for seed in 0..4 {
                let m = random_fp_matrix(n, n, 100 * n as u64 + seed);
                assert_eq!(m.det().unwrap(), det_leibniz(&m), "n={n} seed={seed}");
            }
        }
        // Rational entries with denominators exercise the clearing step.
        let m = ExactMatrix::from_rows(vec![
            vec![
                BigRational::new(BigInt::from(1), BigInt::from(2)),
                BigRational::new(BigInt::from(1), BigInt::from(3)),
            ],
            vec![
                BigRational::new(BigInt::from(5), BigInt::from(6)),
                BigRational::new(BigInt::from(7), BigInt::from(4)),
            ],
        ]);
        assert_eq!(m.det().unwrap(), det_leibniz(&m));
    }

    #[test]
    fn inverse_round_trip() {
        let m = ExactMatrix::from_rows(vec![
            vec![rat(2), rat(1), rat(0)],
            vec![rat(1), rat(3), rat(1)],
            vec![rat(0), rat(1), rat(4)],
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), ExactMatrix::identity(3));
        assert!(ExactMatrix::<BigRational>::zero(2, 2).inverse().is_err());
    }
}
