//! Small exact linear algebra over the rationals: reduced row echelon form,
//! kernels, span membership and linear solving. The systems here are tiny
//! (dimension at most a few dozen), so plain Gaussian elimination is enough.

use num::{One, Zero};

use crate::rat::{rat, Rat};

#[derive(Clone, Debug, PartialEq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![rat(0); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = rat(1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c));
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(rat(0), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = Rat::one() / self[(r, c)].clone();
            for j in c..self.cols {
                let v = self[(r, j)].clone() * &inv;
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let f = self[(i, c)].clone();
                    for j in c..self.cols {
                        let v = self[(i, j)].clone() - &f * &self[(r, j)];
                        self[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel.
    pub fn kernel(&self) -> Vec<Vec<Rat>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.sort_unstable();
        let mut basis = Vec::new();
        for &f in &free {
            let mut v = vec![rat(0); self.cols];
            v[f] = rat(1);
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[(r, f)].clone();
            }
            basis.push(v);
        }
        basis
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

/// Solves `A x = b`. Returns `None` when inconsistent; free variables are set
/// to zero, so the result is deterministic.
pub fn solve(a: &Mat, b: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(a.rows, b.len());
    let mut aug = Mat::zeros(a.rows, a.cols + 1);
    for i in 0..a.rows {
        for j in 0..a.cols {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, a.cols)] = b[i].clone();
    }
    let pivots = aug.rref();
    if pivots.contains(&a.cols) {
        return None;
    }
    let mut x = vec![rat(0); a.cols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = aug[(r, a.cols)].clone();
    }
    Some(x)
}

/// True when `v` lies in the span of `basis`.
pub fn in_span(basis: &[Vec<Rat>], v: &[Rat]) -> bool {
    if v.iter().all(|c| c.is_zero()) {
        return true;
    }
    if basis.is_empty() {
        return false;
    }
    let cols = basis.len();
    let rows = v.len();
    let mut a = Mat::zeros(rows, cols);
    for (j, b) in basis.iter().enumerate() {
        assert_eq!(b.len(), rows);
        for i in 0..rows {
            a[(i, j)] = b[i].clone();
        }
    }
    solve(&a, v).is_some()
}

/// True when the two spans are the same subspace.
pub fn same_span(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> bool {
    a.iter().all(|v| in_span(b, v)) && b.iter().all(|v| in_span(a, v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn solve_unique() {
        let a = Mat::from_rows(vec![v(&[2, 1]), v(&[1, -1])]);
        let x = solve(&a, &v(&[3, 0])).unwrap();
        assert_eq!(x, v(&[1, 1]));
    }

    #[test]
    fn solve_inconsistent() {
        let a = Mat::from_rows(vec![v(&[1, 1]), v(&[2, 2])]);
        assert!(solve(&a, &v(&[1, 3])).is_none());
    }

    #[test]
    fn kernel_dimension() {
        let a = Mat::from_rows(vec![v(&[1, 2, 3]), v(&[2, 4, 6])]);
        let k = a.kernel();
        assert_eq!(k.len(), 2);
        for b in &k {
            assert!(a.mul_vec(b).iter().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn span_membership() {
        let basis = vec![v(&[1, 0, 1]), v(&[0, 1, 1])];
        assert!(in_span(&basis, &v(&[2, 3, 5])));
        assert!(!in_span(&basis, &v(&[0, 0, 1])));
    }
}
