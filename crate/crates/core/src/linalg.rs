//! Dense exact linear algebra over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rat = BigRational;
pub type Matrix = Vec<Vec<Rat>>;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn zeros(rows: usize, cols: usize) -> Matrix {
    vec![vec![Rat::zero(); cols]; rows]
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r][c..].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in c..cols {
                    let t = &m[r][k] * &f;
                    m[i][k] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

/// Basis of the row space, in reduced echelon form.
pub fn row_basis(m: &Matrix) -> Matrix {
    let mut a = m.clone();
    rref(&mut a);
    a
}

/// Basis of `{v : m v = 0}` for a matrix with `cols` columns.
pub fn kernel(m: &Matrix, cols: usize) -> Matrix {
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); cols];
            v[f] = Rat::one();
            for (row, &p) in a.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

pub fn matmul(a: &Matrix, b: &Matrix, inner: usize, cols: usize) -> Matrix {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut s = Rat::zero();
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            s += &row[k] * &b[k][j];
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

pub fn transpose(a: &Matrix, cols: usize) -> Matrix {
    (0..cols)
        .map(|j| a.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// Solves `x A = b` for row vector `x` if possible (A given as rows).
pub fn solve_left(a: &Matrix, b: &[Rat]) -> Option<Vec<Rat>> {
    let rows = a.len();
    let cols = b.len();
    // columns of the augmented system: unknowns x_i, equations per column j
    let mut sys: Matrix = (0..cols)
        .map(|j| {
            let mut r: Vec<Rat> = (0..rows).map(|i| a[i][j].clone()).collect();
            r.push(b[j].clone());
            r
        })
        .collect();
    let pivots = rref(&mut sys);
    if pivots.contains(&rows) {
        return None;
    }
    let mut x = vec![Rat::zero(); rows];
    for (row, &p) in sys.iter().zip(&pivots) {
        x[p] = row[rows].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&a), 2);
        let k = kernel(&a, 3);
        assert_eq!(k.len(), 1);
        let prod = matmul(&a, &transpose(&k, 3), 3, 1);
        assert!(prod.iter().all(|r| r[0].is_zero()));
    }

    #[test]
    fn left_solve() {
        let a = m(&[&[1, 0], &[1, 1]]);
        assert_eq!(solve_left(&a, &[rat(3), rat(2)]).unwrap(), vec![rat(1), rat(2)]);
        let s = m(&[&[1, 1], &[2, 2]]);
        assert!(solve_left(&s, &[rat(1), rat(0)]).is_none());
    }
}
