use std::fmt;

use rayon::prelude::*;

use super::{ExactError, Field, Ring};

/// Dense matrix with exact entries, stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> ExactMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, T::one())
    }

    pub fn scalar(n: usize, c: T) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn diagonal(entries: Vec<T>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m.data[i * n + i] = e;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, ExactError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(ExactError::Dimension("ragged rows".into()));
        }
        Ok(ExactMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> ExactMatrix<U> {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    fn check_same(&self, other: &Self) -> Result<(), ExactError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(ExactError::Dimension(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_same(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.plus(b))
            .collect();
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_same(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.minus(b))
            .collect();
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.times(c))
    }

    pub fn neg(&self) -> Self {
        self.map(|x| x.negate())
    }

    /// Matrix product; zero entries of the left factor are skipped and rows
    /// are computed in parallel.
    pub fn mul(&self, other: &Self) -> Result<Self, ExactError> {
        if self.cols != other.rows {
            return Err(ExactError::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let (n, m) = (self.rows, other.cols);
        let rows: Vec<Vec<T>> = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut acc = vec![T::zero(); m];
                for (k, a) in self.row(i).iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (j, b) in other.row(k).iter().enumerate() {
                        if !b.is_zero() {
                            acc[j] = acc[j].plus(&a.times(b));
                        }
                    }
                }
                acc
            })
            .collect();
        Ok(ExactMatrix {
            rows: n,
            cols: m,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &Self) -> Result<Self, ExactError> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn pow(&self, e: u32) -> Result<Self, ExactError> {
        self.require_square()?;
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn trace(&self) -> Result<T, ExactError> {
        self.require_square()?;
        Ok((0..self.rows).fold(T::zero(), |acc, i| acc.plus(self.get(i, i))))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// The scalar `c` if this matrix equals `c * Id`.
    pub fn as_scalar(&self) -> Option<T> {
        if !self.is_square() || !self.is_diagonal() {
            return None;
        }
        if self.rows == 0 {
            return Some(T::zero());
        }
        let c = self.get(0, 0).clone();
        (1..self.rows).all(|i| *self.get(i, i) == c).then_some(c)
    }

    pub fn diagonal_entries(&self) -> Vec<T> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    /// Copy of the block with top-left corner `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Self) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.set(r0 + i, c0 + j, b.get(i, j).clone());
            }
        }
    }

    fn require_square(&self) -> Result<(), ExactError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(ExactError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }
}

impl<T: Field> ExactMatrix<T> {
    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inverse().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j).times(&inv);
                m.set(r, j, v);
            }
            let pivot_row: Vec<T> = m.row(r).to_vec();
            let cols = m.cols;
            m.data
                .par_chunks_mut(cols)
                .enumerate()
                .for_each(|(i, row)| {
                    if i == r || row[c].is_zero() {
                        return;
                    }
                    let f = row[c].clone();
                    for j in c..cols {
                        if !pivot_row[j].is_zero() {
                            row[j] = row[j].minus(&f.times(&pivot_row[j]));
                        }
                    }
                });
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// One solution of `self * x = b` (free variables set to zero), or
    /// `None` when the system is inconsistent.
    pub fn solve(&self, b: &[T]) -> Result<Option<Vec<T>>, ExactError> {
        if b.len() != self.rows {
            return Err(ExactError::Dimension("right-hand side length".into()));
        }
        let aug = Self::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (red, piv) = aug.rref();
        if piv.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![T::zero(); self.cols];
        for (r, &c) in piv.iter().enumerate() {
            x[c] = red.get(r, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Basis of the right kernel.
    pub fn nullspace(&self) -> Vec<Vec<T>> {
        let (red, piv) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !piv.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![T::zero(); self.cols];
                v[f] = T::one();
                for (r, &c) in piv.iter().enumerate() {
                    v[c] = red.get(r, f).negate();
                }
                v
            })
            .collect()
    }
}

impl<T: Ring> fmt::Display for ExactMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

// Dense univariate polynomials, low degree first, no trailing zeros.

fn upoly_trim<T: Ring>(mut p: Vec<T>) -> Vec<T> {
    while p.last().is_some_and(Ring::is_zero) {
        p.pop();
    }
    p
}

fn upoly_sub<T: Ring>(a: &[T], b: &[T]) -> Vec<T> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x.minus(y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.negate(),
            (None, None) => T::zero(),
        })
        .collect();
    upoly_trim(out)
}

fn upoly_mul<T: Ring>(a: &[T], b: &[T]) -> Vec<T> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].plus(&x.times(y));
        }
    }
    upoly_trim(out)
}

/// Exact quotient by a monic divisor.
fn upoly_div_monic<T: Ring>(a: &[T], d: &[T]) -> Vec<T> {
    let dd = d.len() - 1;
    if a.len() < d.len() {
        debug_assert!(a.is_empty(), "inexact division");
        return Vec::new();
    }
    let mut rem = a.to_vec();
    let mut q = vec![T::zero(); a.len() - dd];
    for k in (0..q.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in d.iter().enumerate() {
            rem[k + j] = rem[k + j].minus(&c.times(dj));
        }
        q[k] = c;
    }
    debug_assert!(rem.iter().all(Ring::is_zero), "inexact division");
    upoly_trim(q)
}

/// `det(t Id - M)` as coefficients `[c_0, c_1, ..., c_n = 1]`.
///
/// Fraction-free Bareiss elimination over `T[t]`: every leading principal
/// minor of `t Id - M` is monic, so no pivoting is needed and each division
/// is exact by a monic polynomial.
pub fn charpoly<T: Ring>(m: &ExactMatrix<T>) -> Result<Vec<T>, ExactError> {
    m.require_square()?;
    let n = m.rows;
    if n == 0 {
        return Ok(vec![T::one()]);
    }
    let mut a: Vec<Vec<Vec<T>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = m.get(i, j).negate();
                    if i == j {
                        upoly_trim(vec![c, T::one()])
                    } else {
                        upoly_trim(vec![c])
                    }
                })
                .collect()
        })
        .collect();
    let mut prev = vec![T::one()];
    for k in 0..n - 1 {
        let pivot = a[k][k].clone();
        let (head, tail) = a.split_at_mut(k + 1);
        let row_k = &head[k];
        tail.par_iter_mut().for_each(|row| {
            for j in k + 1..n {
                let num = upoly_sub(&upoly_mul(&pivot, &row[j]), &upoly_mul(&row[k], &row_k[j]));
                row[j] = upoly_div_monic(&num, &prev);
            }
        });
        prev = pivot;
    }
    let mut out = a[n - 1][n - 1].clone();
    out.resize(n + 1, T::zero());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, Rational};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ints(rows: &[&[i64]]) -> ExactMatrix<Rational> {
        ExactMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn cofactor_det(m: &[Vec<Vec<Rational>>]) -> Vec<Rational> {
        let n = m.len();
        if n == 0 {
            return vec![int(1)];
        }
        let mut acc: Vec<Rational> = Vec::new();
        for j in 0..n {
            let minor: Vec<Vec<Vec<Rational>>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let term = upoly_mul(&m[0][j], &cofactor_det(&minor));
            acc = if j % 2 == 0 {
                upoly_sub(&acc, &upoly_sub(&[], &term))
            } else {
                upoly_sub(&acc, &term)
            };
        }
        acc
    }

    fn cofactor_charpoly(m: &ExactMatrix<Rational>) -> Vec<Rational> {
        let n = m.rows();
        let tm: Vec<Vec<Vec<Rational>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = -m.get(i, j).clone();
                        upoly_trim(if i == j { vec![c, int(1)] } else { vec![c] })
                    })
                    .collect()
            })
            .collect();
        let mut p = cofactor_det(&tm);
        p.resize(n + 1, int(0));
        p
    }

    #[test]
    fn charpoly_examples() {
        let id = ExactMatrix::<Rational>::identity(2);
        assert_eq!(charpoly(&id).unwrap(), vec![int(1), int(-2), int(1)]);
        let yd = ints(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, -1]]);
        assert_eq!(
            charpoly(&yd).unwrap(),
            vec![int(0), int(-1), int(0), int(1)]
        );
        let z = ExactMatrix::<Rational>::zeros(4, 4);
        assert_eq!(
            charpoly(&z).unwrap(),
            vec![int(0), int(0), int(0), int(0), int(1)]
        );
        assert!(matches!(
            charpoly(&ExactMatrix::<Rational>::zeros(2, 3)),
            Err(ExactError::NotSquare { .. })
        ));
    }

    #[test]
    fn charpoly_matches_cofactor_expansion() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..400 {
            let n = rng.gen_range(1..=4);
            let vals: Vec<Vec<Rational>> = (0..n)
                .map(|_| (0..n).map(|_| int(rng.gen_range(-5..=5))).collect())
                .collect();
            let m = ExactMatrix::from_rows(vals).unwrap();
            assert_eq!(charpoly(&m).unwrap(), cofactor_charpoly(&m), "{m}");
        }
    }

    #[test]
    fn rank_solve_nullspace() {
        let m = ints(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let x = m.solve(&[int(6), int(12), int(2)]).unwrap().unwrap();
        let check = m
            .mul(&ExactMatrix::from_rows(x.iter().map(|v| vec![v.clone()]).collect()).unwrap())
            .unwrap();
        assert_eq!(check.to_rows().concat(), vec![int(6), int(12), int(2)]);
        assert!(m.solve(&[int(1), int(0), int(0)]).unwrap().is_none());
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        let v = ExactMatrix::from_rows(ns[0].iter().map(|v| vec![v.clone()]).collect()).unwrap();
        assert!(m.mul(&v).unwrap().is_zero());
    }

    #[test]
    fn scalar_detection_and_commutator() {
        assert_eq!(
            ExactMatrix::scalar(3, rat(1, 2)).as_scalar(),
            Some(rat(1, 2))
        );
        let a = ints(&[&[0, 1], &[0, 0]]);
        let b = ints(&[&[0, 0], &[1, 0]]);
        assert_eq!(a.commutator(&b).unwrap(), ints(&[&[1, 0], &[0, -1]]));
        assert!(a.as_scalar().is_none());
    }
}
