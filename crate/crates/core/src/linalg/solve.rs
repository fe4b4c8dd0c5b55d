use num_bigint::BigInt;

use super::hermite::{column_hermite, column_hermite_basis, echelon_solve};
use super::howell::{from_rows, howell_rows, to_rows};
use super::Matrix;
use crate::error::{Error, Result};
use crate::ring::Ring;

/// Some `X` with `A·X = B` over `ring`, or `None` when no solution exists.
pub fn solve_right(a: &Matrix, b: &Matrix, ring: Ring) -> Result<Option<Matrix>> {
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch(format!(
            "solve_right: A is {}x{}, B is {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    Ok(match ring {
        Ring::Integers => solve_integers(a, b),
        Ring::IntegersMod(m) => solve_modular(a, b, m),
    })
}

/// Generators of `{x : A·x = 0}`. Over `Z` the columns form a lattice basis
/// in column Hermite form; over `Z/m` they are the rows of the Howell form of
/// the kernel, so the output is canonical in both cases.
pub fn kernel_basis(a: &Matrix, ring: Ring) -> Matrix {
    match ring {
        Ring::Integers => {
            let k = column_hermite(a).kernel();
            column_hermite_basis(&k)
        }
        Ring::IntegersMod(m) => kernel_modular(a, m),
    }
}

/// Canonical generators of the column span of `a` over `ring`.
pub fn column_span_basis(a: &Matrix, ring: Ring) -> Matrix {
    match ring {
        Ring::Integers => column_hermite_basis(a),
        Ring::IntegersMod(m) => super::howell::howell_form(&a.transpose(), m)
            .form
            .transpose(),
    }
}

/// Whether every column of `b` lies in the column span of `a`.
pub fn in_column_span(a: &Matrix, b: &Matrix, ring: Ring) -> bool {
    matches!(solve_right(a, b, ring), Ok(Some(_)))
}

fn solve_integers(a: &Matrix, b: &Matrix) -> Option<Matrix> {
    let herm = column_hermite(a);
    let y = echelon_solve(&herm, b)?;
    let r = herm.rank();
    let head: Vec<usize> = (0..r).collect();
    Some(herm.v.select_columns(&head).mul(&y))
}

/// Howell form of `[Aᵀ | I]`: reducing `[bᵀ | 0]` against the rows with a
/// pivot in the `Aᵀ` block leaves `[0 | -xᵀ]` exactly when `b = A·x`.
fn solve_modular(a: &Matrix, b: &Matrix, m: u64) -> Option<Matrix> {
    let (r, c) = a.shape();
    let rows = howell_rows(to_rows(&a.transpose().hstack(&Matrix::identity(c)), m), m);
    let bt = to_rows(&b.transpose(), m);
    let mut x = Matrix::zeros(c, b.cols());
    for (col, target) in bt.into_iter().enumerate() {
        let mut v: Vec<u64> = target;
        v.extend(std::iter::repeat_n(0, c));
        for row in &rows {
            let Some(p) = row[..r].iter().position(|&e| e != 0) else {
                break;
            };
            let piv = row[p];
            if !v[p].is_multiple_of(piv) {
                return None;
            }
            let q = v[p] / piv;
            for (slot, &e) in v.iter_mut().zip(row) {
                let t = ((q as u128 * e as u128) % m as u128) as u64;
                *slot = (*slot + m - t) % m;
            }
        }
        if v[..r].iter().any(|&e| e != 0) {
            return None;
        }
        for j in 0..c {
            x[(j, col)] = BigInt::from((m - v[r + j]) % m);
        }
    }
    Some(x)
}

fn kernel_modular(a: &Matrix, m: u64) -> Matrix {
    let (r, c) = a.shape();
    let rows = howell_rows(to_rows(&a.transpose().hstack(&Matrix::identity(c)), m), m);
    let kernel_rows: Vec<Vec<u64>> = rows
        .into_iter()
        .filter(|row| row[..r].iter().all(|&e| e == 0))
        .map(|row| row[r..].to_vec())
        .collect();
    from_rows(&kernel_rows, c).transpose()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> Ring {
        Ring::Integers
    }

    #[test]
    fn forced_and_parity() {
        let a = Matrix::from_rows(&[vec![2]]);
        let x = solve_right(&a, &Matrix::from_rows(&[vec![4]]), z()).unwrap().unwrap();
        assert_eq!(x, Matrix::from_rows(&[vec![2]]));
        assert!(solve_right(&a, &Matrix::from_rows(&[vec![1]]), z()).unwrap().is_none());
    }

    #[test]
    fn modular_solution_is_a_unit() {
        // exhaustive over Z/4: the solutions of 2x = 2 are exactly {1, 3}
        let a = Matrix::from_rows(&[vec![2]]);
        let b = Matrix::from_rows(&[vec![2]]);
        let sols: Vec<u64> = (0..4u64).filter(|x| (2 * x) % 4 == 2).collect();
        assert_eq!(sols, vec![1, 3]);
        let x = solve_right(&a, &b, Ring::IntegersMod(4)).unwrap().unwrap();
        let x0 = u64::try_from(&x[(0, 0)]).unwrap();
        assert!(sols.contains(&x0));
    }

    #[test]
    fn dimension_mismatch() {
        let a = Matrix::zeros(2, 2);
        let b = Matrix::zeros(3, 1);
        assert!(solve_right(&a, &b, z()).is_err());
    }

    #[test]
    fn kernels() {
        let k = kernel_basis(&Matrix::from_rows(&[vec![1, 1]]), z());
        assert_eq!(k.shape(), (2, 1));
        assert_eq!(Matrix::from_rows(&[vec![1, 1]]).mul(&k), Matrix::zeros(1, 1));
        assert_eq!(kernel_basis(&Matrix::identity(3), z()).cols(), 0);
        let k4 = kernel_basis(&Matrix::from_rows(&[vec![2]]), Ring::IntegersMod(4));
        assert_eq!(k4, Matrix::from_rows(&[vec![2]]));
    }

    #[test]
    fn empty_systems() {
        let a = Matrix::zeros(0, 3);
        let b = Matrix::zeros(0, 2);
        let x = solve_right(&a, &b, z()).unwrap().unwrap();
        assert_eq!(x.shape(), (3, 2));
        let a = Matrix::zeros(2, 0);
        assert!(solve_right(&a, &Matrix::zeros(2, 1), Ring::IntegersMod(3))
            .unwrap()
            .is_some());
        assert!(solve_right(&a, &Matrix::from_rows(&[vec![1], vec![0]]), z())
            .unwrap()
            .is_none());
        assert_eq!(kernel_basis(&Matrix::zeros(0, 2), z()), Matrix::identity(2));
    }
}
