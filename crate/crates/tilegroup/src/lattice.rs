//! Exact integer matrix algebra: Smith normal form, integer linear solving,
//! and isomorphism types of lattice quotients.
//!
//! All arithmetic is over arbitrary-precision integers; elimination on
//! incidence matrices can blow entries up well past machine width.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// A dense matrix of arbitrary-precision integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<IntMatrix> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::OutOfRange("ragged rows in matrix literal".into()));
        }
        let data = rows.iter().flatten().map(|&v| BigInt::from(v)).collect();
        Ok(IntMatrix { rows: rows.len(), cols, data })
    }

    /// A matrix with the given column count and no rows.
    pub fn empty_with_cols(cols: usize) -> IntMatrix {
        IntMatrix { rows: 0, cols, data: Vec::new() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.data.clone();
        let at = |a: &Vec<BigInt>, i: usize, j: usize| a[i * n + j].clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if at(&a, k, k).is_zero() {
                match (k + 1..n).find(|&i| !at(&a, i, k).is_zero()) {
                    Some(i) => {
                        for j in 0..n {
                            a.swap(k * n + j, i * n + j);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (at(&a, i, j) * at(&a, k, k) - at(&a, i, k) * at(&a, k, j)) / &prev;
                    a[i * n + j] = v;
                }
            }
            prev = at(&a, k, k);
        }
        sign * at(&a, n - 1, n - 1)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(i * self.cols + k, j * self.cols + k);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for k in 0..self.cols {
            let idx = i * self.cols + k;
            let v = std::mem::take(&mut self.data[idx]);
            self.data[idx] = -v;
        }
    }

    /// row[i] += q * row[j]
    fn add_row_multiple(&mut self, i: usize, j: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for k in 0..self.cols {
            let v = self.get(j, k) * q;
            let idx = i * self.cols + k;
            self.data[idx] += v;
        }
    }

    /// col[i] += q * col[j]
    fn add_col_multiple(&mut self, i: usize, j: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = self.get(r, j) * q;
            let idx = r * self.cols + i;
            self.data[idx] += v;
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// D = U * A * V with U, V unimodular and D diagonal with a divisibility
/// chain d1 | d2 | ... and non-negative entries.
#[derive(Debug, Clone)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols)).map(|i| self.d.get(i, i).clone()).collect()
    }
}

/// Pivot choice: smallest non-zero absolute value in the trailing submatrix,
/// ties broken by (row, col) position. Keeps output deterministic and entry
/// growth tame.
fn pick_pivot(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let v = d.get(i, j);
            if v.is_zero() {
                continue;
            }
            match best {
                None => best = Some((i, j)),
                Some((bi, bj)) => {
                    if v.abs() < d.get(bi, bj).abs() {
                        best = Some((i, j));
                    }
                }
            }
        }
    }
    best
}

/// Computes the Smith normal form of `a`.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    for t in 0..m.min(n) {
        'pivot: loop {
            let Some((pi, pj)) = pick_pivot(&d, t) else {
                break;
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            // Clear the rest of column t and row t. Floor division leaves
            // remainders strictly smaller than the pivot, so the loop
            // terminates by descent on the pivot's absolute value.
            let mut dirty = false;
            for i in t + 1..m {
                if !d.get(i, t).is_zero() {
                    let q = -d.get(i, t).div_floor(d.get(t, t));
                    d.add_row_multiple(i, t, &q);
                    u.add_row_multiple(i, t, &q);
                    if !d.get(i, t).is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..n {
                if !d.get(t, j).is_zero() {
                    let q = -d.get(t, j).div_floor(d.get(t, t));
                    d.add_col_multiple(j, t, &q);
                    v.add_col_multiple(j, t, &q);
                    if !d.get(t, j).is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue 'pivot;
            }
            // Enforce the divisibility chain: fold any non-divisible entry
            // into row t and re-eliminate.
            for i in t + 1..m {
                for j in t + 1..n {
                    if !d.get(i, j).mod_floor(d.get(t, t)).is_zero() {
                        d.add_row_multiple(t, i, &BigInt::one());
                        u.add_row_multiple(t, i, &BigInt::one());
                        continue 'pivot;
                    }
                }
            }
            if d.get(t, t).is_negative() {
                d.negate_row(t);
                u.negate_row(t);
            }
            break;
        }
    }
    SmithDecomposition { u, d, v }
}

/// The isomorphism type of a finitely generated abelian group: free rank
/// plus the invariant-factor torsion chain (each entry >= 2, each dividing
/// the next).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupShape {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl GroupShape {
    pub fn free(rank: usize) -> GroupShape {
        GroupShape { free_rank: rank, torsion: Vec::new() }
    }
}

impl fmt::Display for GroupShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" x "))
        }
    }
}

/// The isomorphism type of Z^ambient_rank modulo the lattice spanned by the
/// rows of `span_rows`.
pub fn quotient_shape(span_rows: &IntMatrix, ambient_rank: usize) -> GroupShape {
    assert_eq!(span_rows.cols(), ambient_rank, "span rows must live in the ambient lattice");
    let snf = smith_normal_form(span_rows);
    let diag = snf.diagonal();
    let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
    let torsion: Vec<BigInt> = diag.into_iter().filter(|d| !d.is_zero() && !d.is_one()).collect();
    GroupShape { free_rank: ambient_rank - nonzero, torsion }
}

/// Solves A w = b exactly over the integers; `None` iff `b` is not in the
/// column lattice of A.
pub fn solve_linear_integer(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length must match row count");
    let snf = smith_normal_form(a);
    let c = snf.u.mul_vec(b);
    let r = a.rows().min(a.cols());
    let mut y = vec![BigInt::zero(); a.cols()];
    for i in 0..a.rows() {
        if i < r && !snf.d.get(i, i).is_zero() {
            let (q, rem) = c[i].div_mod_floor(snf.d.get(i, i));
            if !rem.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !c[i].is_zero() {
            return None;
        }
    }
    let w = snf.v.mul_vec(&y);
    debug_assert_eq!(a.mul_vec(&w), b);
    Some(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag_i64(snf: &SmithDecomposition) -> Vec<i64> {
        snf.diagonal().iter().map(|d| i64::try_from(d).unwrap()).collect()
    }

    fn check_decomposition(a: &IntMatrix) -> SmithDecomposition {
        let snf = smith_normal_form(a);
        assert_eq!(snf.u.mul(a).mul(&snf.v), snf.d, "U*A*V != D");
        assert_eq!(snf.u.det().abs(), BigInt::one());
        assert_eq!(snf.v.det().abs(), BigInt::one());
        let diag = snf.diagonal();
        for w in diag.windows(2) {
            if !w[0].is_zero() {
                assert!(w[1].mod_floor(&w[0]).is_zero(), "divisibility chain broken: {diag:?}");
            } else {
                assert!(w[1].is_zero());
            }
        }
        // Off-diagonal must be zero.
        for i in 0..snf.d.rows() {
            for j in 0..snf.d.cols() {
                if i != j {
                    assert!(snf.d.get(i, j).is_zero());
                }
            }
        }
        snf
    }

    #[test]
    fn snf_single_row() {
        let a = IntMatrix::from_rows(&[vec![2, -2]]).unwrap();
        let snf = check_decomposition(&a);
        assert_eq!(diag_i64(&snf), vec![2]);
    }

    #[test]
    fn snf_identity_and_zero() {
        let id = IntMatrix::identity(3);
        let snf = check_decomposition(&id);
        assert_eq!(diag_i64(&snf), vec![1, 1, 1]);

        let z = IntMatrix::zeros(2, 3);
        let snf = check_decomposition(&z);
        assert_eq!(diag_i64(&snf), vec![0, 0]);
    }

    #[test]
    fn snf_classic_example() {
        // A standard example with torsion: diag(1, 2, 6) up to chain form.
        let a = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]).unwrap();
        let snf = check_decomposition(&a);
        assert_eq!(diag_i64(&snf), vec![2, 2, 156]);
    }

    #[test]
    fn quotient_shapes() {
        let span = IntMatrix::from_rows(&[vec![2, -2]]).unwrap();
        let shape = quotient_shape(&span, 2);
        assert_eq!(shape, GroupShape { free_rank: 1, torsion: vec![BigInt::from(2)] });
        assert_eq!(shape.to_string(), "Z x Z/2");

        let empty = IntMatrix::empty_with_cols(3);
        assert_eq!(quotient_shape(&empty, 3), GroupShape::free(3));

        let id = IntMatrix::identity(2);
        let trivial = quotient_shape(&id, 2);
        assert_eq!(trivial, GroupShape { free_rank: 0, torsion: vec![] });
        assert_eq!(trivial.to_string(), "0");
    }

    #[test]
    fn quotient_shape_ignores_row_order_and_signs() {
        let a = IntMatrix::from_rows(&[vec![1, 2, 0], vec![0, 4, 2]]).unwrap();
        let b = IntMatrix::from_rows(&[vec![0, -4, -2], vec![1, 2, 0]]).unwrap();
        assert_eq!(quotient_shape(&a, 3), quotient_shape(&b, 3));
    }

    #[test]
    fn integer_solving() {
        let a = IntMatrix::from_rows(&[vec![2]]).unwrap();
        assert!(solve_linear_integer(&a, &[BigInt::from(3)]).is_none());
        let w = solve_linear_integer(&a, &[BigInt::from(4)]).unwrap();
        assert_eq!(w, vec![BigInt::from(2)]);

        let id = IntMatrix::identity(2);
        let w = solve_linear_integer(&id, &[BigInt::from(5), BigInt::from(-7)]).unwrap();
        assert_eq!(w, vec![BigInt::from(5), BigInt::from(-7)]);

        let a = IntMatrix::from_rows(&[vec![2, 3], vec![4, 6]]).unwrap();
        // (2,3) and (4,6) are parallel; b=(1,2) is solvable, b=(1,1) is not.
        assert!(solve_linear_integer(&a, &[BigInt::from(1), BigInt::from(2)]).is_some());
        assert!(solve_linear_integer(&a, &[BigInt::from(1), BigInt::from(1)]).is_none());
    }

    #[test]
    fn determinant() {
        let a = IntMatrix::from_rows(&[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(a.det(), BigInt::from(-2));
        let s = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(s.det(), BigInt::from(-1));
        assert_eq!(IntMatrix::identity(4).det(), BigInt::one());
        let z = IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(z.det(), BigInt::zero());
    }
}
