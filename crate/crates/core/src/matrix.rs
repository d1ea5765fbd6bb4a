//! Exact integer and rational linear algebra.
//!
//! Smith normal form over Z is the workhorse for every lattice quotient in
//! the crate: `snf` returns unimodular `U`, `V` with `U * M * V = D`, `D`
//! diagonal with a divisibility chain d1 | d2 | ... and nonnegative entries.
//! All entries are arbitrary-precision; intermediate SNF entries are allowed
//! to blow up and fixed-width arithmetic is never used.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Dense integer matrix, row-major, arbitrary-precision entries.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        let data = rows.into_iter().flatten().map(BigInt::from).collect();
        IntMatrix {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn from_bigint_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        let data = rows.into_iter().flatten().collect();
        IntMatrix {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn from_columns(cols: Vec<Vec<BigInt>>) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, |x| x.len());
        assert!(cols.iter().all(|x| x.len() == r), "ragged columns");
        let mut m = Self::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<BigInt>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.at(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.at(i, j) + a * other.at(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn neg(&self) -> Self {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.at(i, j) == self.at(j, i)))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> BigInt {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| self.at(i, j).clone()).collect())
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                // pivot search
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = num.checked_div(&prev).expect("bareiss divisibility");
                }
            }
            prev = a[k][k].clone();
        }
        sign * a[n - 1][n - 1].clone()
    }

    /// Leading principal minors all positive (exact positive-definiteness
    /// test for symmetric matrices).
    pub fn is_positive_definite(&self) -> bool {
        if !self.is_symmetric() {
            return false;
        }
        for k in 1..=self.rows {
            let mut sub = IntMatrix::zeros(k, k);
            for i in 0..k {
                for j in 0..k {
                    sub.set(i, j, self.at(i, j).clone());
                }
            }
            if !sub.det().is_positive() {
                return false;
            }
        }
        true
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Result of Smith normal form: `u * m * v = d` with `u`, `v` unimodular,
/// `d` diagonal, nonzero entries positive and d1 | d2 | ...
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub rank: usize,
}

impl SnfResult {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d.at(i, i).clone())
            .collect()
    }
}

pub fn snf(m: &IntMatrix) -> SnfResult {
    let mut d = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut v = IntMatrix::identity(m.cols);

    let limit = m.rows.min(m.cols);
    let mut t = 0;
    while t < limit {
        // Pick a nonzero pivot of minimal magnitude in the trailing block;
        // small pivots keep gcd chains short.
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..m.rows {
            for j in t..m.cols {
                if !d.at(i, j).is_zero() {
                    let better = match pivot {
                        None => true,
                        Some((pi, pj)) => d.at(i, j).abs() < d.at(pi, pj).abs(),
                    };
                    if better {
                        pivot = Some((i, j));
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        swap_rows(&mut d, &mut u, t, pi);
        swap_cols(&mut d, &mut v, t, pj);

        loop {
            // clear column t below the pivot by gcd row operations
            let mut progress = false;
            for i in t + 1..m.rows {
                if !d.at(i, t).is_zero() {
                    reduce_row_pair(&mut d, &mut u, t, i);
                    progress = true;
                }
            }
            // clear row t to the right of the pivot
            for j in t + 1..m.cols {
                if !d.at(t, j).is_zero() {
                    reduce_col_pair(&mut d, &mut v, t, j);
                    progress = true;
                }
            }
            let row_clear = (t + 1..m.cols).all(|j| d.at(t, j).is_zero());
            let col_clear = (t + 1..m.rows).all(|i| d.at(i, t).is_zero());
            if row_clear && col_clear {
                break;
            }
            if !progress {
                unreachable!("snf reduction stalled");
            }
        }

        // enforce divisibility of the whole trailing block by the pivot
        let piv = d.at(t, t).clone();
        let mut offender = None;
        'search: for i in t + 1..m.rows {
            for j in t + 1..m.cols {
                if !d.at(i, j).mod_floor(&piv).is_zero() {
                    offender = Some(i);
                    break 'search;
                }
            }
        }
        if let Some(i) = offender {
            // row t += row i, then redo this pivot position
            add_row(&mut d, &mut u, t, i, &BigInt::one());
            continue;
        }

        if d.at(t, t).is_negative() {
            negate_row(&mut d, &mut u, t);
        }
        t += 1;
    }

    let rank = t;
    let res = SnfResult { u, d, v, rank };
    debug_assert!(verify_snf(m, &res), "snf postcondition failed");
    res
}

/// Exact re-verification of the SNF postcondition: used in debug builds
/// after every call, and directly by tests.
pub fn verify_snf(m: &IntMatrix, res: &SnfResult) -> bool {
    let prod = res.u.mul(m).mul(&res.v);
    if prod != res.d {
        return false;
    }
    if res.u.det().abs() != BigInt::one() || res.v.det().abs() != BigInt::one() {
        return false;
    }
    // diagonal, nonnegative, chain
    for i in 0..res.d.rows {
        for j in 0..res.d.cols {
            if i != j && !res.d.at(i, j).is_zero() {
                return false;
            }
        }
    }
    let diag = res.diagonal();
    for w in diag.windows(2) {
        if !w[0].is_zero() && !w[1].is_zero() && !w[1].mod_floor(&w[0]).is_zero() {
            return false;
        }
        if w[0].is_zero() && !w[1].is_zero() {
            return false;
        }
    }
    diag.iter().all(|x| !x.is_negative())
}

fn swap_rows(d: &mut IntMatrix, u: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..d.cols {
        let t = d.at(a, j).clone();
        d.set(a, j, d.at(b, j).clone());
        d.set(b, j, t);
    }
    for j in 0..u.cols {
        let t = u.at(a, j).clone();
        u.set(a, j, u.at(b, j).clone());
        u.set(b, j, t);
    }
}

fn swap_cols(d: &mut IntMatrix, v: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..d.rows {
        let t = d.at(i, a).clone();
        d.set(i, a, d.at(i, b).clone());
        d.set(i, b, t);
    }
    for i in 0..v.rows {
        let t = v.at(i, a).clone();
        v.set(i, a, v.at(i, b).clone());
        v.set(i, b, t);
    }
}

/// row a += c * row b (on d and u)
fn add_row(d: &mut IntMatrix, u: &mut IntMatrix, a: usize, b: usize, c: &BigInt) {
    for j in 0..d.cols {
        let t = d.at(a, j) + c * d.at(b, j);
        d.set(a, j, t);
    }
    for j in 0..u.cols {
        let t = u.at(a, j) + c * u.at(b, j);
        u.set(a, j, t);
    }
}

/// col a += c * col b (on d and v)
fn add_col(d: &mut IntMatrix, v: &mut IntMatrix, a: usize, b: usize, c: &BigInt) {
    for i in 0..d.rows {
        let t = d.at(i, a) + c * d.at(i, b);
        d.set(i, a, t);
    }
    for i in 0..v.rows {
        let t = v.at(i, a) + c * v.at(i, b);
        v.set(i, a, t);
    }
}

fn negate_row(d: &mut IntMatrix, u: &mut IntMatrix, a: usize) {
    for j in 0..d.cols {
        let t = -d.at(a, j);
        d.set(a, j, t);
    }
    for j in 0..u.cols {
        let t = -u.at(a, j);
        u.set(a, j, t);
    }
}

/// Replace (d[t][t], d[i][t]) by (gcd, 0) with a unimodular 2x2 row block.
fn reduce_row_pair(d: &mut IntMatrix, u: &mut IntMatrix, t: usize, i: usize) {
    let a = d.at(t, t).clone();
    let b = d.at(i, t).clone();
    if b.is_zero() {
        return;
    }
    if !a.is_zero() {
        let (q, r) = b.div_rem(&a);
        if r.is_zero() {
            add_row(d, u, i, t, &-q);
            return;
        }
    }
    let ext = a.extended_gcd(&b);
    let (g, x, y) = (ext.gcd, ext.x, ext.y);
    // rows (t, i) <- (x*t + y*i, -(b/g)*t + (a/g)*i); det = 1
    let bg = &b / &g;
    let ag = &a / &g;
    for j in 0..d.cols {
        let rt = d.at(t, j).clone();
        let ri = d.at(i, j).clone();
        d.set(t, j, &x * &rt + &y * &ri);
        d.set(i, j, -&bg * &rt + &ag * &ri);
    }
    for j in 0..u.cols {
        let rt = u.at(t, j).clone();
        let ri = u.at(i, j).clone();
        u.set(t, j, &x * &rt + &y * &ri);
        u.set(i, j, -&bg * &rt + &ag * &ri);
    }
}

/// Column analogue of `reduce_row_pair`.
fn reduce_col_pair(d: &mut IntMatrix, v: &mut IntMatrix, t: usize, j: usize) {
    let a = d.at(t, t).clone();
    let b = d.at(t, j).clone();
    if b.is_zero() {
        return;
    }
    if !a.is_zero() {
        let (q, r) = b.div_rem(&a);
        if r.is_zero() {
            add_col(d, v, j, t, &-q);
            return;
        }
    }
    let ext = a.extended_gcd(&b);
    let (g, x, y) = (ext.gcd, ext.x, ext.y);
    let bg = &b / &g;
    let ag = &a / &g;
    for i in 0..d.rows {
        let ct = d.at(i, t).clone();
        let cj = d.at(i, j).clone();
        d.set(i, t, &ct * &x + &cj * &y);
        d.set(i, j, -&ct * &bg + &cj * &ag);
    }
    for i in 0..v.rows {
        let ct = v.at(i, t).clone();
        let cj = v.at(i, j).clone();
        v.set(i, t, &ct * &x + &cj * &y);
        v.set(i, j, -&ct * &bg + &cj * &ag);
    }
}

/// Inverse of a unimodular integer matrix, computed through SNF:
/// if A * M * B = I then M^{-1} = B * A.
pub fn inverse_unimodular(m: &IntMatrix) -> IntMatrix {
    assert!(m.is_square());
    let res = snf(m);
    assert!(
        res.diagonal().iter().all(|d| d.is_one()),
        "matrix is not unimodular"
    );
    let inv = res.v.mul(&res.u);
    debug_assert_eq!(inv.mul(m), IntMatrix::identity(m.rows));
    inv
}

/// Basis of the saturation of the column span of `m` inside Z^rows:
/// all v with k*v in span(m) for some k >= 1. Returned as a rows x rank
/// matrix whose columns form a basis.
pub fn saturation_basis(m: &IntMatrix) -> IntMatrix {
    let res = snf(m);
    let uinv = inverse_unimodular(&res.u);
    let cols: Vec<Vec<BigInt>> = (0..res.rank).map(|j| uinv.column(j)).collect();
    IntMatrix::from_columns(if cols.is_empty() { vec![] } else { cols })
}

/// Basis of the integer kernel of `m`: columns of V past the rank.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let res = snf(m);
    let cols: Vec<Vec<BigInt>> = (res.rank..m.cols).map(|j| res.v.column(j)).collect();
    let mut k = IntMatrix::zeros(m.cols, cols.len());
    for (j, col) in cols.iter().enumerate() {
        for (i, val) in col.iter().enumerate() {
            k.set(i, j, val.clone());
        }
    }
    k
}

/// Basis (as columns) of the lattice spanned by the columns of `m`:
/// the nonzero columns of U^{-1} * D.
pub fn lattice_basis(m: &IntMatrix) -> IntMatrix {
    let res = snf(m);
    let uinv = inverse_unimodular(&res.u);
    let diag = res.diagonal();
    let cols: Vec<Vec<BigInt>> = (0..res.rank)
        .map(|j| uinv.column(j).into_iter().map(|x| x * &diag[j]).collect())
        .collect();
    IntMatrix::from_columns(cols)
}

/// Dense rational matrix for the coweight/Gram layer.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_int(m: &IntMatrix) -> Self {
        let mut out = Self::zeros(m.rows, m.cols);
        for i in 0..m.rows {
            for j in 0..m.cols {
                out.set(i, j, BigRational::from_integer(m.at(i, j).clone()));
            }
        }
        out
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<BigRational> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.at(i, j) + a * other.at(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.at(i, j) == self.at(j, i)))
    }

    /// Gauss-Jordan inverse; None when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert!(self.rows == self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&i| !a.at(i, col).is_zero())?;
            if pivot != col {
                for j in 0..n {
                    let t = a.at(col, j).clone();
                    a.set(col, j, a.at(pivot, j).clone());
                    a.set(pivot, j, t);
                    let t = inv.at(col, j).clone();
                    inv.set(col, j, inv.at(pivot, j).clone());
                    inv.set(pivot, j, t);
                }
            }
            let p = a.at(col, col).clone();
            for j in 0..n {
                let v = a.at(col, j) / &p;
                a.set(col, j, v);
                let v = inv.at(col, j) / &p;
                inv.set(col, j, v);
            }
            for i in 0..n {
                if i == col || a.at(i, col).is_zero() {
                    continue;
                }
                let f = a.at(i, col).clone();
                for j in 0..n {
                    let v = a.at(i, j) - &f * a.at(col, j);
                    a.set(i, j, v);
                    let v = inv.at(i, j) - &f * inv.at(col, j);
                    inv.set(i, j, v);
                }
            }
        }
        Some(inv)
    }

    /// Solve `self * x = b` exactly; None when there is no (unique) solution
    /// on the column span. Requires full column rank.
    pub fn solve(&self, b: &[BigRational]) -> Option<Vec<BigRational>> {
        assert_eq!(self.rows, b.len());
        let n = self.rows;
        let m = self.cols;
        let mut a = self.clone();
        let mut rhs = b.to_vec();
        let mut pivot_of_col = vec![usize::MAX; m];
        let mut row = 0;
        for col in 0..m {
            let Some(p) = (row..n).find(|&i| !a.at(i, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..m {
                    let t = a.at(row, j).clone();
                    a.set(row, j, a.at(p, j).clone());
                    a.set(p, j, t);
                }
                rhs.swap(row, p);
            }
            let pv = a.at(row, col).clone();
            for j in 0..m {
                let v = a.at(row, j) / &pv;
                a.set(row, j, v);
            }
            rhs[row] = &rhs[row] / &pv;
            for i in 0..n {
                if i == row || a.at(i, col).is_zero() {
                    continue;
                }
                let f = a.at(i, col).clone();
                for j in 0..m {
                    let v = a.at(i, j) - &f * a.at(row, j);
                    a.set(i, j, v);
                }
                rhs[i] = &rhs[i] - &f * &rhs[row];
            }
            pivot_of_col[col] = row;
            row += 1;
        }
        // consistency of the remaining equations
        for i in row..n {
            if !rhs[i].is_zero() {
                return None;
            }
        }
        let mut x = vec![BigRational::zero(); m];
        for col in 0..m {
            if pivot_of_col[col] == usize::MAX {
                return None; // free column: solution not unique
            }
            x[col] = rhs[pivot_of_col[col]].clone();
        }
        Some(x)
    }
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn snf_identity() {
        let m = IntMatrix::identity(2);
        let r = snf(&m);
        assert!(verify_snf(&m, &r));
        assert_eq!(r.d, IntMatrix::identity(2));
        assert_eq!(r.rank, 2);
    }

    #[test]
    fn snf_diag_2_3() {
        // diag(2,3) has invariant factors 1, 6
        let m = IntMatrix::from_rows(vec![vec![2, 0], vec![0, 3]]);
        let r = snf(&m);
        assert!(verify_snf(&m, &r));
        assert_eq!(r.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn snf_2468() {
        let m = IntMatrix::from_rows(vec![vec![2, 4], vec![6, 8]]);
        let r = snf(&m);
        assert!(verify_snf(&m, &r));
        // gcd of entries is 2 and |det| = 8, so the chain is (2, 4)
        assert_eq!(r.diagonal(), vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn snf_zero_and_rectangular() {
        let m = IntMatrix::zeros(3, 2);
        let r = snf(&m);
        assert!(verify_snf(&m, &r));
        assert_eq!(r.rank, 0);

        let m = IntMatrix::from_rows(vec![vec![0, 0, 0], vec![0, 0, 1]]);
        let r = snf(&m);
        assert!(verify_snf(&m, &r));
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn det_examples() {
        assert_eq!(
            IntMatrix::from_rows(vec![vec![2, -1], vec![-1, 2]]).det(),
            BigInt::from(3)
        );
        assert_eq!(
            IntMatrix::from_rows(vec![vec![2, -1], vec![-3, 2]]).det(),
            BigInt::from(1)
        );
        assert_eq!(
            IntMatrix::from_rows(vec![vec![1, 2], vec![2, 4]]).det(),
            BigInt::zero()
        );
    }

    #[test]
    fn unimodular_inverse() {
        let m = IntMatrix::from_rows(vec![vec![1, 2], vec![1, 3]]);
        let inv = inverse_unimodular(&m);
        assert_eq!(m.mul(&inv), IntMatrix::identity(2));
    }

    #[test]
    fn saturation_examples() {
        // {(2,0)} saturates to {(1,0)}
        let m = IntMatrix::from_rows(vec![vec![2], vec![0]]);
        let s = saturation_basis(&m);
        assert_eq!(s.cols, 1);
        let c = s.column(0);
        assert_eq!(c[0].abs(), BigInt::one());
        assert_eq!(c[1], BigInt::zero());

        // {(2,2)} saturates to {(1,1)}
        let m = IntMatrix::from_rows(vec![vec![2], vec![2]]);
        let s = saturation_basis(&m);
        let c = s.column(0);
        assert_eq!(c[0].abs(), BigInt::one());
        assert_eq!(c[0], c[1]);

        // rank-2 sublattice of Z^2 saturates to Z^2 (basis has |det| = 1)
        let m = IntMatrix::from_rows(vec![vec![1, 0], vec![0, 2]]);
        let s = saturation_basis(&m);
        assert_eq!(s.det().abs(), BigInt::one());
    }

    #[test]
    fn kernel_examples() {
        let m = IntMatrix::from_rows(vec![vec![1, 2]]);
        let k = kernel_basis(&m);
        assert_eq!(k.cols, 1);
        let prod = m.mul(&k);
        assert!(prod.column(0).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn rational_inverse_and_solve() {
        let m = IntMatrix::from_rows(vec![vec![2, -1], vec![-1, 2]]);
        let r = RatMatrix::from_int(&m);
        let inv = r.inverse().unwrap();
        assert_eq!(r.mul(&inv), RatMatrix::identity(2));
        let b = vec![rat(1, 1), rat(0, 1)];
        let x = r.solve(&b).unwrap();
        assert_eq!(x, vec![rat(2, 3), rat(1, 3)]);
    }

    fn arb_matrix() -> impl Strategy<Value = IntMatrix> {
        (1usize..4, 1usize..4).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-9i64..10, r * c).prop_map(move |vals| {
                let rows = vals.chunks(c).map(|ch| ch.to_vec()).collect();
                IntMatrix::from_rows(rows)
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn snf_postcondition_random(m in arb_matrix()) {
            let r = snf(&m);
            prop_assert!(verify_snf(&m, &r));
        }

        #[test]
        fn saturation_idempotent_and_contains(m in arb_matrix()) {
            let s = saturation_basis(&m);
            if s.cols > 0 {
                let s2 = saturation_basis(&s);
                // same lattice: each basis expresses integrally in the other
                prop_assert_eq!(s.cols, s2.cols);
                let rs = RatMatrix::from_int(&s);
                for j in 0..s2.cols {
                    let col: Vec<BigRational> = s2.column(j).into_iter()
                        .map(BigRational::from_integer).collect();
                    let x = rs.solve(&col).unwrap();
                    prop_assert!(x.iter().all(|v| v.denom().is_one()));
                }
                // input columns lie in the saturation
                for j in 0..m.cols {
                    let col: Vec<BigRational> = m.column(j).into_iter()
                        .map(BigRational::from_integer).collect();
                    let x = rs.solve(&col).unwrap();
                    prop_assert!(x.iter().all(|v| v.denom().is_one()));
                }
            }
        }
    }
}
