//! Exact rational vectors and matrices, plus integer normal forms.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Error;

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_integral(x: &Rational) -> bool {
    x.denom().is_one()
}

/// Formats as `p` or `p/q`.
pub fn rational_to_string(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p, q))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

pub(crate) fn lcm_of_denominators<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// A column vector of rationals, ordered lexicographically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vector(Vec<Rational>);

impl Vector {
    pub fn new(coords: Vec<Rational>) -> Self {
        Vector(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn from_bigints(coords: &[BigInt]) -> Self {
        Vector(coords.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn zeros(d: usize) -> Self {
        Vector(vec![Rational::zero(); d])
    }

    pub fn unit(d: usize, i: usize) -> Self {
        let mut v = Self::zeros(d);
        v.0[i] = Rational::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn dot(&self, other: &Vector) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        let mut acc = Rational::zero();
        for (a, b) in self.0.iter().zip(&other.0) {
            if !a.is_zero() && !b.is_zero() {
                acc += a * b;
            }
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Vector {
        Vector(self.0.iter().map(|x| x * c).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(is_integral)
    }

    /// Integer coordinates; panics if some coordinate is fractional.
    pub fn to_bigints(&self) -> Vec<BigInt> {
        self.0
            .iter()
            .map(|x| {
                assert!(is_integral(x), "non-integral coordinate {x}");
                x.numer().clone()
            })
            .collect()
    }

    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|x| if is_integral(x) { x.numer().to_i64() } else { None })
            .collect()
    }

    /// The primitive integer vector positively parallel to `self`.
    pub fn primitive_integer(&self) -> Vector {
        let l = lcm_of_denominators(&self.0);
        let ints: Vec<BigInt> = self.0.iter().map(|x| (x * &l).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        if g.is_zero() {
            return self.clone();
        }
        Vector(ints.into_iter().map(|x| Rational::from_integer(x / &g)).collect())
    }

    /// Drops coordinate `j`.
    pub fn drop_coord(&self, j: usize) -> Vector {
        let mut c = self.0.clone();
        c.remove(j);
        Vector(c)
    }

    /// Inserts `x` at position `j`.
    pub fn insert_coord(&self, j: usize, x: Rational) -> Vector {
        let mut c = self.0.clone();
        c.insert(j, x);
        Vector(c)
    }

    pub fn select(&self, idx: &[usize]) -> Vector {
        Vector(idx.iter().map(|&i| self.0[i].clone()).collect())
    }

    pub fn concat(&self, other: &Vector) -> Vector {
        let mut c = self.0.clone();
        c.extend(other.0.iter().cloned());
        Vector(c)
    }
}

impl Index<usize> for Vector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), rhs.dim());
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), rhs.dim());
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

impl Add for Vector {
    type Output = Vector;
    fn add(self, rhs: Vector) -> Vector {
        &self + &rhs
    }
}

impl Sub for Vector {
    type Output = Vector;
    fn sub(self, rhs: Vector) -> Vector {
        &self - &rhs
    }
}

impl Neg for Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        -&self
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", rational_to_string(x))?;
        }
        write!(f, ")")
    }
}

/// Dense rational matrix. Columns of a basis matrix are the basis vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(d: usize) -> Self {
        let mut m = Self::zero(d, d);
        for i in 0..d {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_columns(cols: &[Vector]) -> Self {
        let rows = cols.first().map_or(0, Vector::dim);
        let mut m = Self::zero(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.dim(), rows, "ragged columns");
            for i in 0..rows {
                m.set(i, j, c[i].clone());
            }
        }
        m
    }

    pub fn from_rows(rows: &[Vector]) -> Self {
        Self::from_columns(rows).transpose()
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let rows: Vec<Vector> = rows.iter().map(|r| Vector::from_ints(r)).collect();
        Self::from_rows(&rows)
    }

    pub fn from_int_columns(cols: &[&[i64]]) -> Self {
        let cols: Vec<Vector> = cols.iter().map(|c| Vector::from_ints(c)).collect();
        Self::from_columns(&cols)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Rational) {
        self.data[i * self.cols + j] = x;
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.dim(), "dimension mismatch");
        Vector((0..self.rows).map(|i| self.row(i).dot(v)).collect())
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut m = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Rational::zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if !a.is_zero() {
                        acc += a * other.get(k, j);
                    }
                }
                m.set(i, j, acc);
            }
        }
        m
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(is_integral)
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    /// Row echelon reduction; returns the rank and the determinant factor
    /// (product of pivots with sign), which is the determinant when square
    /// and of full rank.
    fn eliminate(&self) -> (usize, Rational) {
        let mut a = self.clone();
        let mut rank = 0;
        let mut det = Rational::one();
        for c in 0..a.cols {
            if rank == a.rows {
                break;
            }
            let Some(p) = (rank..a.rows).find(|&r| !a.get(r, c).is_zero()) else {
                det = Rational::zero();
                continue;
            };
            if p != rank {
                a.swap_rows(p, rank);
                det = -det;
            }
            let pivot = a.get(rank, c).clone();
            det *= &pivot;
            for r in rank + 1..a.rows {
                let f = a.get(r, c) / &pivot;
                if f.is_zero() {
                    continue;
                }
                for k in c..a.cols {
                    let x = a.get(r, k) - &f * a.get(rank, k);
                    a.set(r, k, x);
                }
            }
            rank += 1;
        }
        (rank, det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for k in 0..self.cols {
            self.data.swap(a * self.cols + k, b * self.cols + k);
        }
    }

    pub fn rank(&self) -> usize {
        self.eliminate().0
    }

    pub fn det(&self) -> Rational {
        assert!(self.is_square(), "determinant of a non-square matrix");
        if self.rows == 0 {
            return Rational::one();
        }
        let (rank, det) = self.eliminate();
        if rank < self.rows {
            Rational::zero()
        } else {
            det
        }
    }

    pub fn inverse(&self) -> Result<Matrix, Error> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for c in 0..n {
            let p = (c..n).find(|&r| !a.get(r, c).is_zero()).ok_or(Error::SingularMatrix)?;
            a.swap_rows(p, c);
            inv.swap_rows(p, c);
            let pivot = a.get(c, c).clone();
            for k in 0..n {
                let x = a.get(c, k) / &pivot;
                a.set(c, k, x);
                let y = inv.get(c, k) / &pivot;
                inv.set(c, k, y);
            }
            for r in 0..n {
                if r == c {
                    continue;
                }
                let f = a.get(r, c).clone();
                if f.is_zero() {
                    continue;
                }
                for k in 0..n {
                    let x = a.get(r, k) - &f * a.get(c, k);
                    a.set(r, k, x);
                    let y = inv.get(r, k) - &f * inv.get(c, k);
                    inv.set(r, k, y);
                }
            }
        }
        Ok(inv)
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> Matrix {
        let mut m = Matrix::zero(self.rows - 1, self.cols - 1);
        for i in 0..self.rows {
            if i == skip_row {
                continue;
            }
            for j in 0..self.cols {
                if j == skip_col {
                    continue;
                }
                let ii = if i > skip_row { i - 1 } else { i };
                let jj = if j > skip_col { j - 1 } else { j };
                m.set(ii, jj, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn adjugate(&self) -> Matrix {
        assert!(self.is_square(), "adjugate of a non-square matrix");
        let n = self.rows;
        if n == 1 {
            return Matrix::identity(1);
        }
        let det = self.det();
        if !det.is_zero() {
            return self.inverse().expect("nonsingular").scale(&det);
        }
        let mut adj = Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                let c = self.minor(j, i).det();
                adj.set(i, j, if (i + j) % 2 == 0 { c } else { -c });
            }
        }
        adj
    }

    pub fn solve(&self, v: &Vector) -> Result<Vector, Error> {
        Ok(self.inverse()?.mul_vec(v))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{}", self.row(i))?;
        }
        write!(f, "]")
    }
}

pub fn det(m: &Matrix) -> Rational {
    m.det()
}

pub fn adjugate(m: &Matrix) -> Matrix {
    m.adjugate()
}

pub fn solve(m: &Matrix, v: &Vector) -> Result<Vector, Error> {
    m.solve(v)
}

/// Columns of the result are the dual basis: `<b_i, b_j*> = delta_ij`.
pub fn dual_basis(b: &Matrix) -> Result<Matrix, Error> {
    Ok(b.inverse()?.transpose())
}

/// Rank of a family of vectors.
pub fn rank(vectors: &[Vector]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Matrix::from_rows(vectors).rank()
}

/// Basis of `{x : <r, x> = 0 for all rows r}` over the rationals.
pub fn nullspace(rows: &[Vector], d: usize) -> Vec<Vector> {
    let mut a: Vec<Vec<Rational>> = rows.iter().map(|r| r.coords().to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..d {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(p, r);
        let pivot = a[r][c].clone();
        for x in a[r].iter_mut() {
            *x /= &pivot;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for k in 0..d {
                    let t = &f * &a[r][k];
                    a[i][k] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..d).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); d];
        v[free] = Rational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[row][free].clone();
        }
        basis.push(Vector(v));
    }
    basis
}

/// Indices of a maximal linearly independent subfamily, chosen greedily.
pub fn independent_subset(vectors: &[Vector]) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut rows: Vec<Vector> = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        rows.push(v.clone());
        if rank(&rows) == rows.len() {
            chosen.push(i);
        } else {
            rows.pop();
        }
        if let Some(first) = vectors.first() {
            if chosen.len() == first.dim() {
                break;
            }
        }
    }
    chosen
}

/// Extended Euclid: `(g, x, y)` with `x*a + y*b = g >= 0`.
pub(crate) fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let nr = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, nr);
        let ns = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, ns);
        let nt = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, nt);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Column-style Hermite normal form of an arbitrary integer matrix given
/// by rows. Returns `(H, U, rank)` with `H = A U`, `U` unimodular, and the
/// first `rank` columns of `H` in lower echelon form with positive pivots and
/// entries left of each pivot reduced into `[0, pivot)`; the remaining
/// columns are zero.
pub(crate) fn hnf_integer(a: &[Vec<BigInt>], n: usize) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>, usize) {
    let d = a.len();
    let mut h: Vec<Vec<BigInt>> = a.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();

    // Column operations applied to both H and U.
    fn combine(m: &mut [Vec<BigInt>], p: usize, j: usize, x: &BigInt, y: &BigInt, a: &BigInt, b: &BigInt) {
        for row in m.iter_mut() {
            let cp = &row[p] * x + &row[j] * y;
            let cj = &row[j] * a - &row[p] * b;
            row[p] = cp;
            row[j] = cj;
        }
    }
    fn axpy(m: &mut [Vec<BigInt>], target: usize, src: usize, q: &BigInt) {
        for row in m.iter_mut() {
            let t = &row[src] * q;
            row[target] -= t;
        }
    }
    fn negate(m: &mut [Vec<BigInt>], c: usize) {
        for row in m.iter_mut() {
            row[c] = -&row[c];
        }
    }

    let mut p = 0;
    for i in 0..d {
        if p == n {
            break;
        }
        for j in p + 1..n {
            if h[i][j].is_zero() {
                continue;
            }
            let (g, x, y) = ext_gcd(&h[i][p], &h[i][j]);
            let a = &h[i][p] / &g;
            let b = &h[i][j] / &g;
            combine(&mut h, p, j, &x, &y, &a, &b);
            combine(&mut u, p, j, &x, &y, &a, &b);
        }
        if h[i][p].is_zero() {
            continue;
        }
        if h[i][p].is_negative() {
            negate(&mut h, p);
            negate(&mut u, p);
        }
        for j in 0..p {
            let q = h[i][j].div_floor(&h[i][p]);
            if !q.is_zero() {
                axpy(&mut h, j, p, &q);
                axpy(&mut u, j, p, &q);
            }
        }
        p += 1;
    }
    (h, u, p)
}

pub(crate) fn to_int_rows(m: &Matrix) -> Vec<Vec<BigInt>> {
    (0..m.nrows())
        .map(|i| m.row(i).iter().map(|x| x.numer().clone()).collect())
        .collect()
}

pub(crate) fn from_int_rows(rows: &[Vec<BigInt>], ncols: usize) -> Matrix {
    let mut m = Matrix::zero(rows.len(), ncols);
    for (i, r) in rows.iter().enumerate() {
        for (j, x) in r.iter().enumerate() {
            m.set(i, j, Rational::from_integer(x.clone()));
        }
    }
    m
}

/// Hermite normal form by column operations: `H = M U`, `H` lower
/// triangular with nonnegative entries and each diagonal entry the strict
/// maximum of its row, `|det U| = 1`.
pub fn hnf(m: &Matrix) -> Result<(Matrix, Matrix), Error> {
    assert!(m.is_square(), "hnf of a non-square matrix");
    if !m.is_integral() {
        return Err(Error::InvalidParameters("hnf requires an integer matrix".into()));
    }
    let n = m.ncols();
    let (h, u, rank) = hnf_integer(&to_int_rows(m), n);
    if rank < n {
        return Err(Error::SingularMatrix);
    }
    Ok((from_int_rows(&h, n), from_int_rows(&u, n)))
}

/// Integer basis of `{z in Z^n : A z = 0}` for an integer matrix `A`.
pub fn integer_kernel(m: &Matrix) -> Vec<Vector> {
    let n = m.ncols();
    let (_, u, rank) = hnf_integer(&to_int_rows(m), n);
    (rank..n)
        .map(|j| Vector::from_bigints(&u.iter().map(|row| row[j].clone()).collect::<Vec<_>>()))
        .collect()
}
