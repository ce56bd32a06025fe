//! Finite point sets: covariograms, homometry, symmetry, direct sums and
//! lattice-convexity.

use std::collections::{BTreeMap, BTreeSet};

use crate::lattice::Lattice;
use crate::linalg::{self, Matrix, Rational, Vector};
use crate::polytope::Polytope;
use crate::Error;

/// A finite set of points kept sorted and duplicate-free.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointSet {
    dim: usize,
    points: Vec<Vector>,
}

impl PointSet {
    pub fn new(mut points: Vec<Vector>) -> Result<Self, Error> {
        let dim = points.first().ok_or(Error::EmptySet)?.dim();
        if let Some(bad) = points.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: bad.dim() });
        }
        points.sort();
        points.dedup();
        Ok(PointSet { dim, points })
    }

    pub fn empty(dim: usize) -> Self {
        PointSet { dim, points: Vec::new() }
    }

    pub fn from_ints(points: &[&[i64]]) -> Self {
        Self::new(points.iter().map(|p| Vector::from_ints(p)).collect()).expect("nonempty, consistent points")
    }

    pub fn from_ints_1d(points: &[i64]) -> Self {
        Self::new(points.iter().map(|&p| Vector::from_ints(&[p])).collect()).expect("nonempty")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vector] {
        &self.points
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Vector> {
        self.points.iter()
    }

    pub fn contains(&self, x: &Vector) -> bool {
        self.points.binary_search(x).is_ok()
    }

    pub fn lexmin(&self) -> Option<&Vector> {
        self.points.first()
    }

    pub fn lexmax(&self) -> Option<&Vector> {
        self.points.last()
    }

    fn map(&self, f: impl Fn(&Vector) -> Vector) -> PointSet {
        let mut points: Vec<Vector> = self.points.iter().map(f).collect();
        points.sort();
        PointSet { dim: self.dim, points }
    }

    pub fn translate(&self, t: &Vector) -> PointSet {
        self.map(|p| p + t)
    }

    pub fn negate(&self) -> PointSet {
        self.map(|p| -p)
    }

    pub fn linear_image(&self, a: &Matrix) -> PointSet {
        let mut points: Vec<Vector> = self.points.iter().map(|p| a.mul_vec(p)).collect();
        points.sort();
        points.dedup();
        PointSet { dim: a.nrows(), points }
    }

    /// Translate so that the lexicographic minimum sits at the origin.
    pub fn normalized(&self) -> PointSet {
        match self.lexmin() {
            Some(m) => self.translate(&-m),
            None => self.clone(),
        }
    }

    pub fn product(&self, other: &PointSet) -> PointSet {
        let mut points = Vec::with_capacity(self.len() * other.len());
        for a in &self.points {
            for b in &other.points {
                points.push(a.concat(b));
            }
        }
        points.sort();
        PointSet { dim: self.dim + other.dim, points }
    }

    pub fn union(&self, other: &PointSet) -> PointSet {
        let mut points = self.points.clone();
        points.extend(other.points.iter().cloned());
        points.sort();
        points.dedup();
        PointSet { dim: self.dim, points }
    }

    /// Affine dimension.
    pub fn affine_dim(&self) -> usize {
        match self.points.first() {
            None => 0,
            Some(p0) => linalg::rank(&self.points[1..].iter().map(|p| p - p0).collect::<Vec<_>>()),
        }
    }

    pub fn is_full_dimensional(&self) -> bool {
        !self.is_empty() && self.affine_dim() == self.dim
    }

    pub fn hull(&self) -> Result<Polytope, Error> {
        Polytope::hull(&self.points)
    }

    pub fn is_subset_of_lattice(&self, l: &Lattice) -> Option<&Vector> {
        self.points.iter().find(|p| !l.contains(p))
    }
}

/// Multiplicities `g_K(u) = |K ∩ (K + u)|` on the support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Covariogram {
    entries: BTreeMap<Vector, usize>,
}

impl Covariogram {
    pub fn value(&self, u: &Vector) -> usize {
        self.entries.get(u).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<Vector, usize> {
        &self.entries
    }

    pub fn support_size(&self) -> usize {
        self.entries.len()
    }
}

pub fn covariogram(k: &PointSet) -> Result<Covariogram, Error> {
    if k.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut entries = BTreeMap::new();
    for a in k.iter() {
        for b in k.iter() {
            *entries.entry(a - b).or_insert(0) += 1;
        }
    }
    Ok(Covariogram { entries })
}

pub fn homometric(k: &PointSet, l: &PointSet) -> Result<bool, Error> {
    if k.dim() != l.dim() {
        return Err(Error::DimensionMismatch { expected: k.dim(), found: l.dim() });
    }
    if k.len() != l.len() {
        return Ok(false);
    }
    Ok(covariogram(k)? == covariogram(l)?)
}

/// Whether `L = K + t` or `L = c - K` for some vectors `t`, `c`.
pub fn trivially_homometric(k: &PointSet, l: &PointSet) -> Result<bool, Error> {
    if k.is_empty() || l.is_empty() {
        return Err(Error::EmptySet);
    }
    if k.dim() != l.dim() || k.len() != l.len() {
        return Ok(false);
    }
    let nk = k.normalized();
    Ok(nk == l.normalized() || nk == l.negate().normalized())
}

/// A point reflection reverses lexicographic order, so the only possible
/// center is the midpoint of the lexicographic extremes.
pub fn centrally_symmetric(k: &PointSet) -> Result<bool, Error> {
    let (Some(lo), Some(hi)) = (k.lexmin(), k.lexmax()) else { return Err(Error::EmptySet) };
    let c = lo + hi;
    Ok(k.iter().all(|p| k.contains(&(&c - p))))
}

pub fn minkowski_sum(s: &PointSet, t: &PointSet) -> PointSet {
    let mut points = Vec::with_capacity(s.len() * t.len());
    for a in s.iter() {
        for b in t.iter() {
            points.push(a + b);
        }
    }
    points.sort();
    points.dedup();
    PointSet { dim: s.dim(), points }
}

pub fn is_direct_sum(s: &PointSet, t: &PointSet) -> bool {
    minkowski_sum(s, t).len() == s.len() * t.len()
}

pub fn direct_sum(s: &PointSet, t: &PointSet) -> Result<PointSet, Error> {
    let mut seen = BTreeSet::new();
    for a in s.iter() {
        for b in t.iter() {
            let x = a + b;
            if !seen.insert(x.clone()) {
                return Err(Error::NotDirect(x));
            }
        }
    }
    Ok(PointSet { dim: s.dim(), points: seen.into_iter().collect() })
}

/// A point of `conv(K) ∩ M` missing from `K`, if any.
pub fn lattice_convexity_gap(k: &PointSet, m: &Lattice) -> Result<Option<Vector>, Error> {
    if let Some(p) = k.is_subset_of_lattice(m) {
        return Err(Error::NotInLattice(p.clone()));
    }
    let inside = k.hull()?.lattice_points(m);
    if inside.len() == k.len() {
        return Ok(None);
    }
    Ok(inside.iter().find(|p| !k.contains(p)).cloned())
}

pub fn is_lattice_convex(k: &PointSet, m: &Lattice) -> Result<bool, Error> {
    Ok(lattice_convexity_gap(k, m)?.is_none())
}

/// Basis of the group generated by `D(K)` as columns, one per rank.
fn difference_group_basis(k: &PointSet) -> Vec<Vector> {
    let Some(p0) = k.lexmin() else { return Vec::new() };
    let diffs: Vec<Vector> = k.points[1..].iter().map(|p| p - p0).collect();
    if diffs.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_columns(&diffs);
    let c = Rational::from_integer(linalg::lcm_of_denominators(m.entries()));
    let scaled = m.scale(&c);
    let (h, _, rank) = linalg::hnf_integer(&linalg::to_int_rows(&scaled), diffs.len());
    let h = linalg::from_int_rows(&h, diffs.len());
    (0..rank).map(|j| h.column(j).scale(&c.recip())).collect()
}

/// The lattice generated by the differences `K - K`.
pub fn generated_lattice(k: &PointSet) -> Result<Lattice, Error> {
    let basis = difference_group_basis(k);
    if basis.len() < k.dim() {
        return Err(Error::DegenerateDifferences);
    }
    Lattice::from_columns(&basis)
}

/// Lattice-convexity with respect to the lattice generated by `D(K)`,
/// which every lattice containing a translate of `K` contains. When `D(K)`
/// has lower rank the test runs in coordinates of that rank.
pub fn intrinsically_lattice_convex(k: &PointSet) -> Result<bool, Error> {
    let basis = difference_group_basis(k);
    if basis.is_empty() {
        return if k.is_empty() { Err(Error::EmptySet) } else { Ok(true) };
    }
    let r = basis.len();
    let rows = Matrix::from_columns(&basis);
    let pivots = linalg::independent_subset(&rows.transpose().columns());
    // Coordinates in the basis, read off from r independent rows.
    let square = Matrix::from_rows(&pivots.iter().map(|&i| rows.row(i)).collect::<Vec<_>>());
    let inv = square.inverse()?;
    let p0 = k.lexmin().expect("nonempty").clone();
    let coords: Vec<Vector> = k.iter().map(|p| inv.mul_vec(&(p - &p0).select(&pivots))).collect();
    is_lattice_convex(&PointSet::new(coords)?, &Lattice::integer(r))
}
