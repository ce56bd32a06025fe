//! Full-rank lattices with rational bases.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::linalg::{self, dual_basis, lcm_of_denominators, Matrix, Rational, Vector};
use crate::Error;

/// A full-rank lattice spanned by the columns of `basis`.
#[derive(Clone, Debug)]
pub struct Lattice {
    basis: Matrix,
    inverse: Matrix,
}

impl Lattice {
    pub fn new(basis: Matrix) -> Result<Self, Error> {
        if !basis.is_square() {
            return Err(Error::DimensionMismatch { expected: basis.nrows(), found: basis.ncols() });
        }
        let inverse = basis.inverse()?;
        Ok(Lattice { basis, inverse })
    }

    pub fn from_columns(cols: &[Vector]) -> Result<Self, Error> {
        if let Some(bad) = cols.iter().find(|c| c.dim() != cols.len()) {
            return Err(Error::DimensionMismatch { expected: cols.len(), found: bad.dim() });
        }
        Self::new(Matrix::from_columns(cols))
    }

    pub fn from_int_columns(cols: &[&[i64]]) -> Result<Self, Error> {
        Self::from_columns(&cols.iter().map(|c| Vector::from_ints(c)).collect::<Vec<_>>())
    }

    /// `Z^d`.
    pub fn integer(d: usize) -> Self {
        Lattice { basis: Matrix::identity(d), inverse: Matrix::identity(d) }
    }

    /// `c Z^d`.
    pub fn scaled_integer(d: usize, c: i64) -> Self {
        Self::new(Matrix::identity(d).scale(&linalg::int(c))).expect("nonzero scale")
    }

    /// The lattice with basis `(l, 0), (s, h)`.
    pub fn hnf_2d(l: i64, h: i64, s: i64) -> Result<Self, Error> {
        Self::from_int_columns(&[&[l, 0], &[s, h]])
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.columns()
    }

    /// `|det B|`.
    pub fn det(&self) -> Rational {
        self.basis.det().abs()
    }

    /// Coordinates of `v` in the basis.
    pub fn coordinates(&self, v: &Vector) -> Vector {
        self.inverse.mul_vec(v)
    }

    pub fn point(&self, coords: &Vector) -> Vector {
        self.basis.mul_vec(coords)
    }

    pub fn contains(&self, v: &Vector) -> bool {
        v.dim() == self.dim() && self.coordinates(v).is_integral()
    }

    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        other.basis.columns().iter().all(|c| self.contains(c))
    }

    pub fn dual(&self) -> Lattice {
        Lattice { basis: dual_basis(&self.basis).expect("nonsingular"), inverse: self.basis.transpose() }
    }

    /// Columns of the dual basis as a matrix, so `u = D m` for `m` integral.
    pub fn dual_basis_matrix(&self) -> Matrix {
        self.inverse.transpose()
    }

    /// Image under the linear map `A`.
    pub fn transform(&self, a: &Matrix) -> Result<Lattice, Error> {
        Lattice::new(a.mul(&self.basis))
    }

    pub fn product(&self, other: &Lattice) -> Lattice {
        let (d1, d2) = (self.dim(), other.dim());
        let mut b = Matrix::zero(d1 + d2, d1 + d2);
        for i in 0..d1 {
            for j in 0..d1 {
                b.set(i, j, self.basis.get(i, j).clone());
            }
        }
        for i in 0..d2 {
            for j in 0..d2 {
                b.set(d1 + i, d1 + j, other.basis.get(i, j).clone());
            }
        }
        Lattice::new(b).expect("product of nonsingular bases")
    }

    /// The representative of `v + L` in the half-open cell `sum [0,1) b_i`.
    pub fn canonical_residue(&self, v: &Vector) -> Vector {
        let c = self.coordinates(v);
        let f = Vector::new(c.iter().map(|x| x - x.floor()).collect());
        self.point(&f)
    }

    /// `v` divided by the gcd of its lattice coordinates.
    pub fn primitive_part(&self, v: &Vector) -> Result<Vector, Error> {
        let c = self.coordinates(v);
        if !c.is_integral() {
            return Err(Error::NotInLattice(v.clone()));
        }
        if c.is_zero() {
            return Err(Error::ZeroVector);
        }
        let g = c.iter().fold(BigInt::zero(), |g, x| g.gcd(x.numer()));
        Ok(self.point(&c.scale(&Rational::new(BigInt::one(), g))))
    }

    /// The primitive vector of this lattice positively parallel to `v`.
    /// Every rational direction meets a rational lattice, so this only
    /// fails for the zero vector.
    pub fn primitive_along(&self, v: &Vector) -> Result<Vector, Error> {
        if v.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(self.point(&self.coordinates(v).primitive_integer()))
    }
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.contains_lattice(other) && other.contains_lattice(self)
    }
}

impl Eq for Lattice {}

/// `det(sub) / det(sup)` for a sublattice.
pub fn index(sub: &Lattice, sup: &Lattice) -> Result<u64, Error> {
    if sub.dim() != sup.dim() {
        return Err(Error::DimensionMismatch { expected: sup.dim(), found: sub.dim() });
    }
    if let Some(c) = sub.basis.columns().into_iter().find(|c| !sup.contains(c)) {
        return Err(Error::NotASublattice(c));
    }
    let q = sub.det() / sup.det();
    debug_assert!(linalg::is_integral(&q));
    Ok(q.to_integer().to_u64().expect("index fits in u64"))
}

/// All `(l, h, s)` with `l h = n` and `0 <= s < l`: the Hermite bases
/// `(l, 0), (s, h)` of the index-`n` sublattices of `Z^2`, one per lattice.
pub fn sublattices_of_integer_lattice_2d(n: u64) -> Vec<(u64, u64, u64)> {
    let mut out = Vec::new();
    for l in 1..=n {
        if n % l != 0 {
            continue;
        }
        let h = n / l;
        for s in 0..l {
            out.push((l, h, s));
        }
    }
    out
}

/// One side of a coordinate constraint.
#[derive(Clone, Debug)]
pub struct Bound {
    pub value: Rational,
    pub strict: bool,
}

impl Bound {
    pub fn closed(value: Rational) -> Self {
        Bound { value, strict: false }
    }

    pub fn open(value: Rational) -> Self {
        Bound { value, strict: true }
    }
}

fn smallest_above(x: &Rational, strict: bool) -> BigInt {
    if strict {
        x.floor().to_integer() + 1
    } else {
        x.ceil().to_integer()
    }
}

fn largest_below(x: &Rational, strict: bool) -> BigInt {
    if strict {
        x.ceil().to_integer() - 1
    } else {
        x.floor().to_integer()
    }
}

/// Enumerates integer `m` with `lower_i <= (A m)_i <= upper_i` (strictness
/// per bound) for a fixed nonsingular rational `A`.
///
/// `A` is scaled to an integer matrix and brought to Hermite form
/// `H = A U`; with `m = U z` the constraints become triangular in `z`, so
/// the nested loops visit only feasible prefixes.
#[derive(Clone, Debug)]
pub struct ParallelotopeEnumerator {
    scale: Rational,
    h: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
}

impl ParallelotopeEnumerator {
    pub fn new(a: &Matrix) -> Result<Self, Error> {
        let d = a.nrows();
        assert!(a.is_square());
        let scale = Rational::from_integer(lcm_of_denominators(a.entries()));
        let (h, u, rank) = linalg::hnf_integer(&linalg::to_int_rows(&a.scale(&scale)), d);
        if rank < d {
            return Err(Error::SingularMatrix);
        }
        Ok(ParallelotopeEnumerator { scale, h, u })
    }

    pub fn points(&self, lower: &[Bound], upper: &[Bound]) -> Vec<Vector> {
        let d = self.h.len();
        assert!(lower.len() == d && upper.len() == d);
        let c = &self.scale;
        let lo: Vec<Bound> = lower.iter().map(|b| Bound { value: &b.value * c, strict: b.strict }).collect();
        let hi: Vec<Bound> = upper.iter().map(|b| Bound { value: &b.value * c, strict: b.strict }).collect();
        let mut out = Vec::new();
        let mut z: Vec<BigInt> = Vec::with_capacity(d);
        self.rec(&lo, &hi, &mut z, &mut out);
        out
    }

    fn rec(&self, lo: &[Bound], hi: &[Bound], z: &mut Vec<BigInt>, out: &mut Vec<Vector>) {
        let d = self.h.len();
        let i = z.len();
        if i == d {
            let m: Vec<BigInt> = (0..d)
                .map(|r| (0..d).fold(BigInt::zero(), |acc, k| acc + &self.u[r][k] * &z[k]))
                .collect();
            out.push(Vector::from_bigints(&m));
            return;
        }
        let partial = (0..i).fold(BigInt::zero(), |acc, k| acc + &self.h[i][k] * &z[k]);
        let partial = Rational::from_integer(partial);
        let diag = Rational::from_integer(self.h[i][i].clone());
        let from = smallest_above(&((&lo[i].value - &partial) / &diag), lo[i].strict);
        let to = largest_below(&((&hi[i].value - &partial) / &diag), hi[i].strict);
        let mut zi = from;
        while zi <= to {
            z.push(zi.clone());
            self.rec(lo, hi, z, out);
            z.pop();
            zi += 1;
        }
    }
}

/// All integer `m` with `lower_i <= (A m)_i <= upper_i` for a nonsingular `A`.
pub fn integer_points_in_parallelotope(a: &Matrix, lower: &[Bound], upper: &[Bound]) -> Result<Vec<Vector>, Error> {
    Ok(ParallelotopeEnumerator::new(a)?.points(lower, upper))
}

/// Lattice vectors `u = D m` of `L*` with `|<v_i, u>| < bound` (or `<=`
/// when not strict) for linearly independent `v_1..v_d`.
pub fn dual_vectors_in_slab_box(l: &Lattice, directions: &[Vector], bound: &Rational, strict: bool) -> Result<Vec<Vector>, Error> {
    let d = l.dim();
    let v = Matrix::from_rows(directions);
    let dual = l.dual_basis_matrix();
    let a = v.mul(&dual);
    let lo: Vec<Bound> = (0..d).map(|_| Bound { value: -bound.clone(), strict }).collect();
    let hi: Vec<Bound> = (0..d).map(|_| Bound { value: bound.clone(), strict }).collect();
    let ms = integer_points_in_parallelotope(&a, &lo, &hi)?;
    Ok(ms.iter().map(|m| dual.mul_vec(m)).collect())
}
