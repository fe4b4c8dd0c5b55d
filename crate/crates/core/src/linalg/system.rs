//! Flattened linear systems in matrix unknowns.
//!
//! Every lifting, homotopy and well-definedness question in the crate is an
//! equation of the form `Σ_k L_k·X_k·R_k = C` in matrix unknowns `X_k`. The
//! builder turns such systems into a single `A·x = b` through column-major
//! vectorization, `vec(L·X·R) = (Rᵀ ⊗ L)·vec(X)`, so they can all be handed to
//! [`solve_right`](super::solve_right) in one joint solve.

use num_bigint::BigInt;

use super::{kernel_basis, solve_right, Matrix};
use crate::error::Result;
use crate::ring::Ring;

/// Handle to a matrix unknown.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Unknown(usize);

struct Term {
    unknown: Unknown,
    left: Matrix,
    right: Matrix,
}

struct Equation {
    rows: usize,
    cols: usize,
    terms: Vec<Term>,
}

/// Equations are indexed in insertion order; right-hand sides are supplied
/// per solve so one coefficient matrix can serve many targets.
pub struct LinearSystem {
    ring: Ring,
    shapes: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    equations: Vec<Equation>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EquationId(usize);

impl LinearSystem {
    pub fn new(ring: Ring) -> Self {
        LinearSystem {
            ring,
            shapes: Vec::new(),
            offsets: Vec::new(),
            equations: Vec::new(),
        }
    }

    pub fn unknown(&mut self, rows: usize, cols: usize) -> Unknown {
        let offset = self.num_variables();
        self.shapes.push((rows, cols));
        self.offsets.push(offset);
        Unknown(self.shapes.len() - 1)
    }

    pub fn num_variables(&self) -> usize {
        self.shapes.iter().map(|(r, c)| r * c).sum()
    }

    pub fn num_equations(&self) -> usize {
        self.equations.iter().map(|e| e.rows * e.cols).sum()
    }

    pub fn shape(&self, x: Unknown) -> (usize, usize) {
        self.shapes[x.0]
    }

    /// Starts an equation whose value is a `rows × cols` matrix.
    pub fn equation(&mut self, rows: usize, cols: usize) -> EquationId {
        self.equations.push(Equation {
            rows,
            cols,
            terms: Vec::new(),
        });
        EquationId(self.equations.len() - 1)
    }

    /// Adds the term `left · x · right` to equation `eq`.
    pub fn term(&mut self, eq: EquationId, left: Matrix, x: Unknown, right: Matrix) {
        let (xr, xc) = self.shapes[x.0];
        let e = &self.equations[eq.0];
        assert_eq!(left.cols(), xr, "left factor does not match unknown rows");
        assert_eq!(right.rows(), xc, "right factor does not match unknown cols");
        assert_eq!((left.rows(), right.cols()), (e.rows, e.cols), "term shape");
        self.equations[eq.0].terms.push(Term {
            unknown: x,
            left,
            right,
        });
    }

    /// `left · x`
    pub fn left_term(&mut self, eq: EquationId, left: Matrix, x: Unknown) {
        let c = self.shapes[x.0].1;
        self.term(eq, left, x, Matrix::identity(c));
    }

    /// `x · right`
    pub fn right_term(&mut self, eq: EquationId, x: Unknown, right: Matrix) {
        let r = self.shapes[x.0].0;
        self.term(eq, Matrix::identity(r), x, right);
    }

    pub fn coefficients(&self) -> Matrix {
        let mut a = Matrix::zeros(self.num_equations(), self.num_variables());
        let mut row0 = 0;
        for e in &self.equations {
            for t in &e.terms {
                let block = t.right.transpose().kron(&t.left);
                let col0 = self.offsets[t.unknown.0];
                for i in 0..block.rows() {
                    for j in 0..block.cols() {
                        let v = &block[(i, j)];
                        if !num_traits::Zero::is_zero(v) {
                            a[(row0 + i, col0 + j)] += v;
                        }
                    }
                }
            }
            row0 += e.rows * e.cols;
        }
        a.reduce(self.ring)
    }

    /// Stacks one right-hand side (one matrix per equation, in order) into a column.
    pub fn rhs_column(&self, rhs: &[Matrix]) -> Vec<BigInt> {
        assert_eq!(rhs.len(), self.equations.len(), "one rhs per equation");
        let mut v = Vec::with_capacity(self.num_equations());
        for (e, m) in self.equations.iter().zip(rhs) {
            assert_eq!(m.shape(), (e.rows, e.cols), "rhs shape");
            v.extend(m.vectorize());
        }
        v
    }

    /// Solves for every right-hand side jointly; one solution column per rhs.
    pub fn solve_many(&self, rhs: &[Vec<Matrix>]) -> Result<Option<Vec<Solution>>> {
        let a = self.coefficients();
        let n = self.num_equations();
        let mut data = vec![BigInt::from(0); n * rhs.len()];
        for (k, r) in rhs.iter().enumerate() {
            for (i, v) in self.rhs_column(r).into_iter().enumerate() {
                data[i * rhs.len() + k] = v;
            }
        }
        let b = Matrix::from_vec(n, rhs.len(), data).reduce(self.ring);
        let Some(x) = solve_right(&a, &b, self.ring)? else {
            return Ok(None);
        };
        Ok(Some(
            (0..rhs.len())
                .map(|k| Solution {
                    values: x.column(k),
                })
                .collect(),
        ))
    }

    /// Solves a single system, or `None` if it is infeasible.
    pub fn solve(&self, rhs: &[Matrix]) -> Result<Option<Solution>> {
        Ok(self
            .solve_many(&[rhs.to_vec()])?
            .map(|mut v| v.swap_remove(0)))
    }

    /// Solves each right-hand side independently, reporting feasibility per rhs.
    pub fn solve_each(&self, rhs: &[Vec<Matrix>]) -> Result<Vec<Option<Solution>>> {
        if rhs.is_empty() {
            return Ok(Vec::new());
        }
        if let Some(all) = self.solve_many(rhs)? {
            return Ok(all.into_iter().map(Some).collect());
        }
        let a = self.coefficients();
        rhs.iter()
            .map(|r| {
                let b = Matrix::column_vector(self.rhs_column(r)).reduce(self.ring);
                Ok(solve_right(&a, &b, self.ring)?.map(|x| Solution { values: x.column(0) }))
            })
            .collect()
    }

    /// Generators of the homogeneous solution space.
    pub fn homogeneous_generators(&self) -> Vec<Solution> {
        let k = kernel_basis(&self.coefficients(), self.ring);
        (0..k.cols())
            .map(|j| Solution { values: k.column(j) })
            .collect()
    }

    pub fn extract(&self, sol: &Solution, x: Unknown) -> Matrix {
        let (r, c) = self.shapes[x.0];
        let off = self.offsets[x.0];
        Matrix::unvectorize(r, c, &sol.values[off..off + r * c]).reduce(self.ring)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }
}

/// A solution vector of a [`LinearSystem`]; read blocks with [`LinearSystem::extract`].
#[derive(Clone, Debug)]
pub struct Solution {
    values: Vec<BigInt>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sylvester_style_system() {
        // find X with A·X - X·B = C over Z
        let a = Matrix::from_rows(&[vec![1, 1], vec![0, 1]]);
        let b = Matrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let x0 = Matrix::from_rows(&[vec![1, -2], vec![3, 4]]);
        let c = a.mul(&x0).sub(&x0.mul(&b));
        let mut sys = LinearSystem::new(Ring::Integers);
        let x = sys.unknown(2, 2);
        let e = sys.equation(2, 2);
        sys.left_term(e, a.clone(), x);
        sys.right_term(e, x, b.neg());
        let sol = sys.solve(std::slice::from_ref(&c)).unwrap().unwrap();
        let xs = sys.extract(&sol, x);
        assert_eq!(a.mul(&xs).sub(&xs.mul(&b)), c);
    }

    #[test]
    fn infeasible_and_mixed() {
        let mut sys = LinearSystem::new(Ring::Integers);
        let x = sys.unknown(1, 1);
        let e = sys.equation(1, 1);
        sys.left_term(e, Matrix::from_rows(&[vec![2]]), x);
        assert!(sys.solve(&[Matrix::from_rows(&[vec![3]])]).unwrap().is_none());
        let each = sys
            .solve_each(&[
                vec![Matrix::from_rows(&[vec![3]])],
                vec![Matrix::from_rows(&[vec![6]])],
            ])
            .unwrap();
        assert!(each[0].is_none());
        assert_eq!(sys.extract(each[1].as_ref().unwrap(), x), Matrix::from_rows(&[vec![3]]));
    }
}
