//! Column Hermite normal form over the integers.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::Matrix;

/// `A·V = H` with `V` unimodular and `H` in reduced column echelon form:
/// column `k < rank` has its first nonzero entry (positive) at row `pivots[k]`,
/// pivot rows strictly increase, entries left of a pivot are reduced into
/// `[0, pivot)` and columns `rank..` are zero.
#[derive(Clone, Debug)]
pub struct ColumnHermite {
    pub h: Matrix,
    pub v: Matrix,
    pub pivots: Vec<usize>,
}

impl ColumnHermite {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Columns of `V` spanning the kernel of `A` (a lattice basis).
    pub fn kernel(&self) -> Matrix {
        let r = self.rank();
        let keep: Vec<usize> = (r..self.v.cols()).collect();
        self.v.select_columns(&keep)
    }

    /// Nonzero columns of `H`: a canonical basis of the column lattice of `A`.
    pub fn basis(&self) -> Matrix {
        let keep: Vec<usize> = (0..self.rank()).collect();
        self.h.select_columns(&keep)
    }
}

pub fn column_hermite(a: &Matrix) -> ColumnHermite {
    column_hermite_impl(a, true)
}

/// Hermite form without tracking the transform.
pub fn column_hermite_basis(a: &Matrix) -> Matrix {
    column_hermite_impl(a, false).basis()
}

fn column_hermite_impl(a: &Matrix, track: bool) -> ColumnHermite {
    let (m, n) = a.shape();
    let mut h = a.clone();
    let mut v = if track { Matrix::identity(n) } else { Matrix::zeros(0, n) };
    let mut pivots = Vec::new();
    let mut c = 0;
    for r in 0..m {
        if c == n {
            break;
        }
        // gcd-combine the entries of row r in columns c.. into column c
        loop {
            let mut best: Option<usize> = None;
            for j in c..n {
                if h[(r, j)].is_zero() {
                    continue;
                }
                if best.is_none_or(|b| h[(r, j)].abs() < h[(r, b)].abs()) {
                    best = Some(j);
                }
            }
            let Some(b) = best else { break };
            h.swap_cols(c, b);
            v.swap_cols(c, b);
            let mut done = true;
            for j in c + 1..n {
                if h[(r, j)].is_zero() {
                    continue;
                }
                let q = -h[(r, j)].div_floor(&h[(r, c)]);
                h.add_col_multiple(j, c, &q);
                v.add_col_multiple(j, c, &q);
                done &= h[(r, j)].is_zero();
            }
            if done {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            h.negate_col(c);
            v.negate_col(c);
        }
        let p = h[(r, c)].clone();
        for j in 0..c {
            let q = -h[(r, j)].div_floor(&p);
            h.add_col_multiple(j, c, &q);
            v.add_col_multiple(j, c, &q);
        }
        pivots.push(r);
        c += 1;
    }
    ColumnHermite { h, v, pivots }
}

/// Solves `H·y = b` for the echelon part of a Hermite form, column by column
/// of `b`. Returns `None` if some column has no integral solution.
pub(crate) fn echelon_solve(herm: &ColumnHermite, b: &Matrix) -> Option<Matrix> {
    let r = herm.rank();
    let mut y = Matrix::zeros(r, b.cols());
    for col in 0..b.cols() {
        let mut res = b.column(col);
        let mut next_pivot = 0;
        for i in 0..res.len() {
            if next_pivot < r && herm.pivots[next_pivot] == i {
                let k = next_pivot;
                let p = &herm.h[(i, k)];
                let (q, rem) = res[i].div_mod_floor(p);
                if !rem.is_zero() {
                    return None;
                }
                if !q.is_zero() {
                    for (row, slot) in res.iter_mut().enumerate().skip(i) {
                        *slot -= &q * &herm.h[(row, k)];
                    }
                }
                y[(k, col)] = q;
                next_pivot += 1;
            } else if !res[i].is_zero() {
                return None;
            }
        }
    }
    Some(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn transform_identity_holds() {
        let a = Matrix::from_rows(&[vec![2, 4, 6], vec![1, 3, 5], vec![0, 0, 7]]);
        let hf = column_hermite(&a);
        assert_eq!(a.mul(&hf.v), hf.h);
        assert_eq!(hf.rank(), 3);
        let k = column_hermite(&Matrix::from_rows(&[vec![1, 1]])).kernel();
        assert_eq!(k.shape(), (2, 1));
        assert_eq!(&k[(0, 0)] + &k[(1, 0)], BigInt::zero());
    }

    #[test]
    fn echelon_solve_detects_parity() {
        let hf = column_hermite(&Matrix::from_rows(&[vec![2]]));
        assert!(echelon_solve(&hf, &Matrix::from_rows(&[vec![1]])).is_none());
        let y = echelon_solve(&hf, &Matrix::from_rows(&[vec![4]])).unwrap();
        assert_eq!(y, Matrix::from_rows(&[vec![2]]));
    }
}
