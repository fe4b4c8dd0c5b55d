//! Smith normal form over the integers with unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::Matrix;

/// `U·A·V = D` with `U`, `V` unimodular and `D` diagonal with `d_1 | d_2 | …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: Matrix,
    pub d: Matrix,
    pub v: Matrix,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }

    /// Nonzero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n)
            .map(|i| self.d[(i, i)].clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }
}

/// Smith normal form of an integer matrix.
///
/// Pivot rule: the nonzero entry of least absolute value in the active
/// submatrix, ties broken by lowest `(row, col)`. Deterministic for a fixed input.
pub fn smith_normal_form(a: &Matrix) -> SmithDecomposition {
    let (m, n) = a.shape();
    let mut d = a.clone();
    let mut u = Matrix::identity(m);
    let mut v = Matrix::identity(n);

    let mut t = 0;
    while t < m.min(n) {
        let Some((pr, pc)) = min_abs_entry(&d, t) else {
            break;
        };
        d.swap_rows(t, pr);
        u.swap_rows(t, pr);
        d.swap_cols(t, pc);
        v.swap_cols(t, pc);

        loop {
            // clear column t below the pivot
            let mut dirty = false;
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -d[(i, t)].div_floor(&d[(t, t)]);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                dirty |= !d[(i, t)].is_zero();
            }
            // clear row t right of the pivot
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -d[(t, j)].div_floor(&d[(t, t)]);
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                dirty |= !d[(t, j)].is_zero();
            }
            if dirty {
                // a remainder smaller than the pivot survived; re-pivot on row t / column t
                let (pr, pc) = min_abs_in_cross(&d, t);
                d.swap_rows(t, pr);
                u.swap_rows(t, pr);
                d.swap_cols(t, pc);
                v.swap_cols(t, pc);
                continue;
            }
            // divisibility: the pivot must divide the whole remaining block
            let bad = (t + 1..m)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !d[(i, j)].is_multiple_of(&d[(t, t)]));
            match bad {
                Some((i, _)) => {
                    let one = BigInt::from(1);
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    SmithDecomposition { u, d, v }
}

fn min_abs_entry(d: &Matrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = &d[(i, j)];
            if x.is_zero() {
                continue;
            }
            let a = x.abs();
            if best.as_ref().is_none_or(|(b, _, _)| a < *b) {
                best = Some((a, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Least nonzero entry on row `t` / column `t` of the active block. The pivot
/// itself is included, so a result always exists.
fn min_abs_in_cross(d: &Matrix, t: usize) -> (usize, usize) {
    let mut best = (d[(t, t)].abs(), t, t);
    for i in t + 1..d.rows() {
        let a = d[(i, t)].abs();
        if !a.is_zero() && a < best.0 {
            best = (a, i, t);
        }
    }
    for j in t + 1..d.cols() {
        let a = d[(t, j)].abs();
        if !a.is_zero() && a < best.0 {
            best = (a, t, j);
        }
    }
    (best.1, best.2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn check(a: &Matrix) -> SmithDecomposition {
        let s = smith_normal_form(a);
        assert_eq!(s.u.mul(a).mul(&s.v), s.d);
        assert!(s.u.determinant().abs().is_one());
        assert!(s.v.determinant().abs().is_one());
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        let f = s.invariant_factors();
        for w in f.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        s
    }

    #[test]
    fn diag_2_3() {
        let s = check(&Matrix::from_rows(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(s.d, Matrix::from_rows(&[vec![1, 0], vec![0, 6]]));
    }

    #[test]
    fn zero_and_identity() {
        let z = Matrix::zeros(2, 2);
        let s = check(&z);
        assert_eq!(s.d, z);
        assert_eq!(s.u, Matrix::identity(2));
        assert_eq!(s.v, Matrix::identity(2));
        let s = check(&Matrix::identity(3));
        assert_eq!(s.d, Matrix::identity(3));
    }

    #[test]
    fn rectangular_and_empty() {
        check(&Matrix::from_rows(&[vec![4, 6, 8], vec![6, 9, 12]]));
        check(&Matrix::zeros(0, 3));
        check(&Matrix::zeros(3, 0));
        let s = check(&Matrix::from_rows(&[vec![-5]]));
        assert_eq!(s.d, Matrix::from_rows(&[vec![5]]));
    }
}
