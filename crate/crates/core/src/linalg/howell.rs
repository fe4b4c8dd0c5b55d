//! Howell normal form over `Z/m`.
//!
//! A Howell form is a row echelon form whose pivots divide `m`, whose entries
//! above each pivot are reduced modulo the pivot, and which has the Howell
//! property: for every `k`, the rows with zeros in the first `k` columns span
//! exactly the elements of the row span with zeros in the first `k` columns.
//! It is unique, so two matrices have the same row span iff their Howell
//! forms agree.

use num_bigint::BigInt;

use super::Matrix;

/// Residue matrix as row vectors of `u64` in `[0, m)`.
pub(crate) type Rows = Vec<Vec<u64>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HowellForm {
    /// Nonzero rows of the canonical form.
    pub form: Matrix,
    /// `transform · A = form` over `Z/m`.
    pub transform: Matrix,
}

pub fn howell_form(a: &Matrix, modulus: u64) -> HowellForm {
    let (r, c) = a.shape();
    let rows = to_rows(&a.hstack(&Matrix::identity(r)), modulus);
    let reduced = howell_rows(rows, modulus);
    // rows with a pivot in the left block carry the Howell form of A
    let mut form = Vec::new();
    let mut transform = Vec::new();
    for row in reduced {
        if row[..c].iter().any(|&x| x != 0) {
            form.push(row[..c].to_vec());
            transform.push(row[c..].to_vec());
        }
    }
    HowellForm {
        form: from_rows(&form, c),
        transform: from_rows(&transform, r),
    }
}

/// Howell form of a residue matrix given by rows. Zero rows are dropped and
/// the result is ordered by pivot column, so for an augmented matrix `[A | B]`
/// the rows that vanish on the `A` block come last.
pub(crate) fn howell_rows(mut rows: Rows, m: u64) -> Rows {
    let width = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..width {
        // merge everything at or below r into a single entry in this column
        let mut i = r + 1;
        if r >= rows.len() {
            break;
        }
        while i < rows.len() {
            let b = rows[i][col];
            if b != 0 {
                let a = rows[r][col];
                let (s, t, u, v) = gcd_transform(a, b, m);
                let (top, bottom) = combine(&rows[r], &rows[i], s, t, u, v, m);
                rows[r] = top;
                rows[i] = bottom;
            }
            i += 1;
        }
        let a = rows[r][col];
        if a == 0 {
            continue;
        }
        let unit = normalizing_unit(a, m);
        scale_row(&mut rows[r], unit, m);
        let p = rows[r][col];
        for k in 0..r {
            let q = rows[k][col] / p;
            if q != 0 {
                let src = rows[r].clone();
                sub_multiple(&mut rows[k], &src, q, m);
            }
        }
        // the annihilator of the pivot times this row has zeros up to col
        if p != 1 {
            let ann = m / p;
            let mut extra = rows[r].clone();
            scale_row(&mut extra, ann, m);
            if extra.iter().any(|&x| x != 0) {
                rows.push(extra);
            }
        }
        r += 1;
    }
    rows.retain(|row| row.iter().any(|&x| x != 0));
    rows
}

fn gcd_transform(a: u64, b: u64, m: u64) -> (u64, u64, u64, u64) {
    // [s t; u v] has determinant 1 over Z, so it is invertible mod m
    let (g, x, y) = ext_gcd(a as i128, b as i128);
    let s = x.rem_euclid(m as i128) as u64;
    let t = y.rem_euclid(m as i128) as u64;
    let u = (-(b as i128) / g).rem_euclid(m as i128) as u64;
    let v = ((a as i128) / g).rem_euclid(m as i128) as u64;
    (s, t, u, v)
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A unit `u` of `Z/m` with `u·a ≡ gcd(a, m)`.
pub(crate) fn normalizing_unit(a: u64, m: u64) -> u64 {
    let g = gcd(a, m);
    let a1 = a / g;
    let m1 = m / g;
    // u ≡ a1⁻¹ (mod m1), lifted to a unit mod m
    let inv = if m1 == 1 {
        0
    } else {
        let (_, x, _) = ext_gcd(a1 as i128 % m1 as i128, m1 as i128);
        x.rem_euclid(m1 as i128) as u64
    };
    let mut u = inv;
    while gcd(u, m) != 1 {
        u += m1;
    }
    u % m
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn combine(x: &[u64], y: &[u64], s: u64, t: u64, u: u64, v: u64, m: u64) -> (Vec<u64>, Vec<u64>) {
    let top = x
        .iter()
        .zip(y)
        .map(|(&a, &b)| (mulmod(s, a, m) + mulmod(t, b, m)) % m)
        .collect();
    let bottom = x
        .iter()
        .zip(y)
        .map(|(&a, &b)| (mulmod(u, a, m) + mulmod(v, b, m)) % m)
        .collect();
    (top, bottom)
}

fn scale_row(row: &mut [u64], c: u64, m: u64) {
    for x in row.iter_mut() {
        *x = mulmod(*x, c, m);
    }
}

fn sub_multiple(dst: &mut [u64], src: &[u64], q: u64, m: u64) {
    for (d, &s) in dst.iter_mut().zip(src) {
        let t = mulmod(s, q, m);
        *d = (*d + m - t) % m;
    }
}

pub(crate) fn to_rows(a: &Matrix, m: u64) -> Rows {
    let ring = crate::ring::Ring::IntegersMod(m);
    (0..a.rows())
        .map(|i| a.row(i).iter().map(|x| ring.residue(x)).collect())
        .collect()
}

pub(crate) fn from_rows(rows: &Rows, cols: usize) -> Matrix {
    let data: Vec<BigInt> = rows.iter().flatten().map(|&x| BigInt::from(x)).collect();
    Matrix::from_vec(rows.len(), cols, data)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn span(rows: &Matrix, m: u64) -> std::collections::BTreeSet<Vec<u64>> {
        // brute-force row span over Z/m
        let r = to_rows(rows, m);
        let c = rows.cols();
        let mut set = std::collections::BTreeSet::new();
        let n = r.len();
        let total = (m as usize).pow(n as u32);
        for idx in 0..total {
            let mut coeffs = Vec::with_capacity(n);
            let mut k = idx;
            for _ in 0..n {
                coeffs.push((k % m as usize) as u64);
                k /= m as usize;
            }
            let mut v = vec![0u64; c];
            for (row, &co) in r.iter().zip(&coeffs) {
                for (slot, &x) in v.iter_mut().zip(row) {
                    *slot = (*slot + mulmod(co, x, m)) % m;
                }
            }
            set.insert(v);
        }
        set
    }

    #[test]
    fn already_canonical() {
        let h = howell_form(&Matrix::from_rows(&[vec![2]]), 4);
        assert_eq!(h.form, Matrix::from_rows(&[vec![2]]));
        let id = Matrix::identity(3);
        assert_eq!(howell_form(&id, 6).form, id);
    }

    #[test]
    fn spans_agree_with_enumeration() {
        let a = Matrix::from_rows(&[vec![2, 0], vec![0, 2], vec![2, 2]]);
        let h = howell_form(&a, 4);
        assert_eq!(h.form.rows(), 2);
        assert_eq!(span(&a, 4), span(&h.form, 4));
        assert_eq!(h.transform.mul(&a).reduce(crate::ring::Ring::IntegersMod(4)), h.form);
    }

    #[test]
    fn howell_property_needs_annihilator_rows() {
        // (2 1) over Z/4: the span contains (0 2), which must appear as its own row
        let a = Matrix::from_rows(&[vec![2, 1]]);
        let h = howell_form(&a, 4);
        assert_eq!(h.form, Matrix::from_rows(&[vec![2, 1], vec![0, 2]]));
    }

    #[test]
    fn normalizing_units() {
        for m in 2..40u64 {
            for a in 1..m {
                let u = normalizing_unit(a, m);
                assert_eq!(gcd(u, m), 1);
                assert_eq!(mulmod(u, a, m), gcd(a, m));
            }
        }
    }
}
