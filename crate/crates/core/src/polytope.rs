//! Exact convex polytopes given by their vertices, with facet inequalities.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::lattice::Lattice;
use crate::linalg::{self, lcm_of_denominators, nullspace, Matrix, Rational, Vector};
use crate::pointset::PointSet;
use crate::Error;

/// The inequality `<normal, x> <= offset`, with `normal` a primitive
/// integer vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Facet {
    pub normal: Vector,
    pub offset: Rational,
}

impl Facet {
    fn normalized(normal: Vector, offset: Rational) -> Facet {
        let l = Rational::from_integer(lcm_of_denominators(normal.iter()));
        let ints = normal.scale(&l);
        let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x.numer()));
        let f = l / Rational::from_integer(g);
        Facet { normal: normal.scale(&f), offset: offset * f }
    }

    pub fn slack(&self, x: &Vector) -> Rational {
        &self.offset - self.normal.dot(x)
    }
}

/// A polytope stored by its extreme points. For a `k`-dimensional polytope
/// in `R^d` with `k < d`, `equalities` cut out the affine hull and `facets`
/// are the relative facets, so that the polytope is exactly the set
/// satisfying both.
#[derive(Clone, Debug)]
pub struct Polytope {
    ambient: usize,
    dim: usize,
    vertices: Vec<Vector>,
    facets: Vec<Facet>,
    equalities: Vec<(Vector, Rational)>,
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.vertices == other.vertices
    }
}

impl Eq for Polytope {}

struct HullData {
    facets: Vec<Facet>,
    vertices: Vec<usize>,
}

fn cross(o: &Vector, a: &Vector, b: &Vector) -> Rational {
    (&a[0] - &o[0]) * (&b[1] - &o[1]) - (&a[1] - &o[1]) * (&b[0] - &o[0])
}

/// Indices of the hull vertices of planar points in counterclockwise order,
/// starting from the lexicographically smallest point; collinear points
/// are dropped.
fn monotone_chain(points: &[Vector]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by(|&a, &b| points[a].cmp(&points[b]));
    idx.dedup_by(|a, b| points[*a] == points[*b]);
    if idx.len() < 3 {
        return idx;
    }
    let mut lower: Vec<usize> = Vec::new();
    for &i in &idx {
        while lower.len() >= 2
            && !cross(&points[lower[lower.len() - 2]], &points[lower[lower.len() - 1]], &points[i]).is_positive()
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in idx.iter().rev() {
        while upper.len() >= 2
            && !cross(&points[upper[upper.len() - 2]], &points[upper[upper.len() - 1]], &points[i]).is_positive()
        {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Vertices of a full-dimensional planar polygon in counterclockwise order.
pub fn ccw_polygon(points: &[Vector]) -> Vec<Vector> {
    monotone_chain(points).into_iter().map(|i| points[i].clone()).collect()
}

fn hull_1d(points: &[Vector]) -> HullData {
    let (mut lo, mut hi) = (0, 0);
    for (i, p) in points.iter().enumerate() {
        if p[0] < points[lo][0] {
            lo = i;
        }
        if p[0] > points[hi][0] {
            hi = i;
        }
    }
    HullData {
        facets: vec![
            Facet { normal: Vector::from_ints(&[-1]), offset: -points[lo][0].clone() },
            Facet { normal: Vector::from_ints(&[1]), offset: points[hi][0].clone() },
        ],
        vertices: vec![lo, hi],
    }
}

fn hull_2d(points: &[Vector]) -> HullData {
    let ring = monotone_chain(points);
    let mut facets = Vec::with_capacity(ring.len());
    for k in 0..ring.len() {
        let p = &points[ring[k]];
        let q = &points[ring[(k + 1) % ring.len()]];
        let n = Vector::new(vec![&q[1] - &p[1], &p[0] - &q[0]]);
        let c = n.dot(p);
        facets.push(Facet::normalized(n, c));
    }
    HullData { facets, vertices: ring }
}

/// Some facet of the hull of full-dimensional points: start from a
/// supporting hyperplane and rotate it about the current face until the
/// face has dimension `m - 1`.
fn initial_facet(points: &[Vector]) -> Facet {
    let m = points[0].dim();
    let mut n = -Vector::unit(m, 0);
    let mut c = points.iter().map(|p| n.dot(p)).max().expect("nonempty");
    loop {
        let face: Vec<&Vector> = points.iter().filter(|p| n.dot(p) == c).collect();
        let diffs: Vec<Vector> = face[1..].iter().map(|p| *p - face[0]).collect();
        let keep = linalg::independent_subset(&diffs);
        if keep.len() == m - 1 {
            return Facet::normalized(n, c);
        }
        let mut rows: Vec<Vector> = keep.iter().map(|&i| diffs[i].clone()).collect();
        rows.push(n.clone());
        let mut dir = nullspace(&rows, m).swap_remove(0);
        let mut cd = dir.dot(face[0]);
        if !points.iter().any(|p| dir.dot(p) > cd) {
            dir = -dir;
            cd = -cd;
        }
        let step = points
            .iter()
            .filter_map(|p| {
                let rise = dir.dot(p) - &cd;
                rise.is_positive().then(|| (&c - n.dot(p)) / rise)
            })
            .min()
            .expect("points are full-dimensional");
        let f = Facet::normalized(&n + &dir.scale(&step), &c + &cd * &step);
        n = f.normal;
        c = f.offset;
    }
}

/// Gift wrapping: every ridge of a known facet is rotated about until it
/// hits the neighbouring facet.
fn hull_wrap(points: &[Vector]) -> HullData {
    let first = initial_facet(points);
    let mut seen: HashSet<Vector> = HashSet::new();
    seen.insert(first.normal.clone());
    let mut stack = vec![first];
    let mut facets = Vec::new();
    let mut vertices = BTreeSet::new();
    while let Some(f) = stack.pop() {
        let members: Vec<usize> = (0..points.len()).filter(|&i| f.slack(&points[i]).is_zero()).collect();
        let j = (0..f.normal.dim()).find(|&j| !f.normal[j].is_zero()).expect("nonzero normal");
        let projected: Vec<Vector> = members.iter().map(|&i| points[i].drop_coord(j)).collect();
        let sub = full_hull(&projected);
        vertices.extend(sub.vertices.iter().map(|&k| members[k]));
        for ridge in sub.facets {
            let r = ridge.normal.insert_coord(j, Rational::zero());
            let t = points
                .iter()
                .filter(|p| f.slack(p).is_positive())
                .map(|p| (r.dot(p) - &ridge.offset) / f.slack(p))
                .max()
                .expect("points are full-dimensional");
            let next = Facet::normalized(&r + &f.normal.scale(&t), &ridge.offset + &f.offset * &t);
            if seen.insert(next.normal.clone()) {
                stack.push(next);
            }
        }
        facets.push(f);
    }
    HullData { facets, vertices: vertices.into_iter().collect() }
}

fn full_hull(points: &[Vector]) -> HullData {
    match points[0].dim() {
        1 => hull_1d(points),
        2 => hull_2d(points),
        _ => hull_wrap(points),
    }
}

fn scan_constraints(
    ineqs: &[(Vec<BigInt>, BigInt)],
    eqs: &[(Vec<BigInt>, BigInt)],
    lo: &[i64],
    hi: &[i64],
    strict: bool,
) -> Vec<Vec<i64>> {
    let d = lo.len();
    let mut out = Vec::new();
    let mut y = Vec::with_capacity(d);
    let ineq_partial = vec![BigInt::zero(); ineqs.len()];
    let eq_partial = vec![BigInt::zero(); eqs.len()];

    #[allow(clippy::too_many_arguments)]
    fn rec(
        level: usize,
        ineqs: &[(Vec<BigInt>, BigInt)],
        eqs: &[(Vec<BigInt>, BigInt)],
        ip: &[BigInt],
        ep: &[BigInt],
        lo: &[i64],
        hi: &[i64],
        strict: bool,
        y: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        let d = lo.len();
        if level + 1 == d {
            let mut from = BigInt::from(lo[level]);
            let mut to = BigInt::from(hi[level]);
            for ((a, b), p) in ineqs.iter().zip(ip) {
                let coef = &a[level];
                let rhs = b - p;
                if coef.is_zero() {
                    if rhs.is_negative() || (strict && rhs.is_zero()) {
                        return;
                    }
                } else if coef.is_positive() {
                    let t = if strict { ceil_div(&rhs, coef) - 1 } else { rhs.div_floor(coef) };
                    to = to.min(t);
                } else {
                    let t = if strict { rhs.div_floor(coef) + 1 } else { ceil_div(&rhs, coef) };
                    from = from.max(t);
                }
            }
            for ((a, b), p) in eqs.iter().zip(ep) {
                let coef = &a[level];
                let rhs = b - p;
                if coef.is_zero() {
                    if !rhs.is_zero() {
                        return;
                    }
                } else {
                    if !rhs.is_multiple_of(coef) {
                        return;
                    }
                    let t = rhs / coef;
                    from = from.max(t.clone());
                    to = to.min(t);
                }
            }
            let (Some(from), Some(to)) = (from.to_i64(), to.to_i64()) else { return };
            for t in from..=to {
                let mut p = y.clone();
                p.push(t);
                out.push(p);
            }
            return;
        }
        for v in lo[level]..=hi[level] {
            let vb = BigInt::from(v);
            let nip: Vec<BigInt> = ineqs.iter().zip(ip).map(|((a, _), p)| p + &a[level] * &vb).collect();
            let nep: Vec<BigInt> = eqs.iter().zip(ep).map(|((a, _), p)| p + &a[level] * &vb).collect();
            y.push(v);
            rec(level + 1, ineqs, eqs, &nip, &nep, lo, hi, strict, y, out);
            y.pop();
        }
    }
    rec(0, ineqs, eqs, &ineq_partial, &eq_partial, lo, hi, strict, &mut y, &mut out);
    out
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

/// Scales `<a, y> (<= or =) b` to integer coefficients.
fn integer_constraint(a: &Vector, b: &Rational) -> (Vec<BigInt>, BigInt) {
    let l = lcm_of_denominators(a.iter().chain(std::iter::once(b)));
    let l = Rational::from_integer(l);
    (a.iter().map(|x| (x * &l).to_integer()).collect(), (b * &l).to_integer())
}

impl Polytope {
    /// Convex hull of a nonempty point list.
    pub fn hull(points: &[Vector]) -> Result<Polytope, Error> {
        let first = points.first().ok_or(Error::EmptySet)?;
        let ambient = first.dim();
        if let Some(bad) = points.iter().find(|p| p.dim() != ambient) {
            return Err(Error::DimensionMismatch { expected: ambient, found: bad.dim() });
        }
        let mut pts = points.to_vec();
        pts.sort();
        pts.dedup();
        let p0 = pts[0].clone();
        let diffs: Vec<Vector> = pts[1..].iter().map(|p| p - &p0).collect();
        let keep = linalg::independent_subset(&diffs);
        let k = keep.len();
        if k == 0 {
            let equalities = (0..ambient).map(|i| (Vector::unit(ambient, i), p0[i].clone())).collect();
            return Ok(Polytope { ambient, dim: 0, vertices: vec![p0], facets: Vec::new(), equalities });
        }
        if k == ambient {
            let data = full_hull(&pts);
            let mut vertices: Vec<Vector> = data.vertices.iter().map(|&i| pts[i].clone()).collect();
            vertices.sort();
            return Ok(Polytope { ambient, dim: k, vertices, facets: data.facets, equalities: Vec::new() });
        }
        // Lower-dimensional: work in k coordinates on which the affine hull
        // projects bijectively.
        let spanning: Vec<Vector> = keep.iter().map(|&i| diffs[i].clone()).collect();
        let coords = linalg::independent_subset(&Matrix::from_rows(&spanning).columns());
        let projected: Vec<Vector> = pts.iter().map(|p| p.select(&coords)).collect();
        let data = full_hull(&projected);
        let lift = |n: &Vector| {
            let mut full = vec![Rational::zero(); ambient];
            for (c, &i) in coords.iter().enumerate() {
                full[i] = n[c].clone();
            }
            Vector::new(full)
        };
        let facets = data.facets.iter().map(|f| Facet { normal: lift(&f.normal), offset: f.offset.clone() }).collect();
        let equalities = nullspace(&spanning, ambient)
            .into_iter()
            .map(|a| {
                let a = a.primitive_integer();
                let b = a.dot(&p0);
                (a, b)
            })
            .collect();
        let mut vertices: Vec<Vector> = data.vertices.iter().map(|&i| pts[i].clone()).collect();
        vertices.sort();
        Ok(Polytope { ambient, dim: k, vertices, facets, equalities })
    }

    pub fn from_point_set(k: &PointSet) -> Result<Polytope, Error> {
        Self::hull(k.points())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Affine dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.ambient
    }

    /// Extreme points in lexicographic order.
    pub fn vertices(&self) -> &[Vector] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn equalities(&self) -> &[(Vector, Rational)] {
        &self.equalities
    }

    /// Vertices lying on the given facet.
    pub fn facet_vertices(&self, f: &Facet) -> Vec<Vector> {
        self.vertices.iter().filter(|v| f.slack(v).is_zero()).cloned().collect()
    }

    pub fn contains(&self, x: &Vector) -> bool {
        self.equalities.iter().all(|(a, b)| &a.dot(x) == b) && self.facets.iter().all(|f| !f.slack(x).is_negative())
    }

    pub fn support(&self, u: &Vector) -> Rational {
        self.vertices.iter().map(|v| u.dot(v)).max().expect("nonempty")
    }

    pub fn width(&self, u: &Vector) -> Rational {
        self.support(u) + self.support(&-u)
    }

    pub fn translate(&self, t: &Vector) -> Polytope {
        Polytope::hull(&self.vertices.iter().map(|v| v + t).collect::<Vec<_>>()).expect("nonempty")
    }

    pub fn scale(&self, c: &Rational) -> Polytope {
        Polytope::hull(&self.vertices.iter().map(|v| v.scale(c)).collect::<Vec<_>>()).expect("nonempty")
    }

    pub fn difference_body(&self) -> Polytope {
        let mut diffs = Vec::with_capacity(self.vertices.len() * self.vertices.len());
        for a in &self.vertices {
            for b in &self.vertices {
                diffs.push(a - b);
            }
        }
        Polytope::hull(&diffs).expect("nonempty")
    }

    /// `L ∩ P`, scanning the integer points of the image `B^{-1} P` row by
    /// row; along the last coordinate the feasible interval is solved
    /// exactly.
    pub fn lattice_points(&self, l: &Lattice) -> PointSet {
        self.scan_lattice(l, false)
    }

    /// `L ∩ int P` for a full-dimensional polytope.
    pub fn interior_lattice_points(&self, l: &Lattice) -> Result<PointSet, Error> {
        if !self.is_full_dimensional() {
            return Err(Error::LowerDimensional);
        }
        Ok(self.scan_lattice(l, true))
    }

    fn scan_lattice(&self, l: &Lattice, strict: bool) -> PointSet {
        let bt = l.basis().transpose();
        let ineqs: Vec<_> = self.facets.iter().map(|f| integer_constraint(&bt.mul_vec(&f.normal), &f.offset)).collect();
        let eqs: Vec<_> = self.equalities.iter().map(|(a, b)| integer_constraint(&bt.mul_vec(a), b)).collect();
        let images: Vec<Vector> = self.vertices.iter().map(|v| l.coordinates(v)).collect();
        let d = self.ambient;
        let mut lo = Vec::with_capacity(d);
        let mut hi = Vec::with_capacity(d);
        for i in 0..d {
            let min = images.iter().map(|y| &y[i]).min().expect("nonempty");
            let max = images.iter().map(|y| &y[i]).max().expect("nonempty");
            lo.push(min.ceil().to_integer().to_i64().expect("bounding box fits in i64"));
            hi.push(max.floor().to_integer().to_i64().expect("bounding box fits in i64"));
        }
        if lo.iter().zip(&hi).any(|(a, b)| a > b) {
            return PointSet::empty(d);
        }
        let hits = scan_constraints(&ineqs, &eqs, &lo, &hi, strict);
        if hits.is_empty() {
            return PointSet::empty(d);
        }
        PointSet::new(hits.iter().map(|y| l.point(&Vector::from_ints(y))).collect()).expect("consistent dimension")
    }

    /// The `d`-volume; zero for lower-dimensional polytopes.
    pub fn volume(&self) -> Rational {
        if !self.is_full_dimensional() {
            return Rational::zero();
        }
        pyramid_volume(&self.vertices, &self.facets)
    }

    /// `{x : <x, v> <= 1 for all v in P}`; requires the origin in the interior.
    pub fn polar_body(&self) -> Result<Polytope, Error> {
        if !self.is_full_dimensional() || self.facets.iter().any(|f| !f.offset.is_positive()) {
            return Err(Error::OriginNotInterior);
        }
        let vs: Vec<Vector> = self.facets.iter().map(|f| f.normal.scale(&f.offset.recip())).collect();
        Polytope::hull(&vs)
    }
}

/// Sum of pyramids over the facets with apex at the first vertex.
fn pyramid_volume(vertices: &[Vector], facets: &[Facet]) -> Rational {
    let m = vertices[0].dim();
    if m == 1 {
        let min = vertices.iter().map(|v| &v[0]).min().expect("nonempty");
        let max = vertices.iter().map(|v| &v[0]).max().expect("nonempty");
        return max - min;
    }
    let apex = &vertices[0];
    let mut total = Rational::zero();
    for f in facets {
        let height = f.slack(apex);
        if height.is_zero() {
            continue;
        }
        let j = (0..m).find(|&j| !f.normal[j].is_zero()).expect("nonzero normal");
        let on: Vec<Vector> = vertices.iter().filter(|v| f.slack(v).is_zero()).map(|v| v.drop_coord(j)).collect();
        let sub = full_hull(&on);
        let sub_vertices: Vec<Vector> = sub.vertices.iter().map(|&i| on[i].clone()).collect();
        let base = pyramid_volume(&sub_vertices, &sub.facets);
        total += height / f.normal[j].abs() * base;
    }
    total / Rational::from_integer(BigInt::from(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{frac, int};

    fn pts(v: &[&[i64]]) -> Vec<Vector> {
        v.iter().map(|p| Vector::from_ints(p)).collect()
    }

    fn cube(d: usize, lo: i64, hi: i64) -> Polytope {
        let mut vs = Vec::new();
        for mask in 0..(1u32 << d) {
            vs.push(Vector::from_ints(&(0..d).map(|i| if mask >> i & 1 == 1 { hi } else { lo }).collect::<Vec<_>>()));
        }
        Polytope::hull(&vs).unwrap()
    }

    #[test]
    fn hull_drops_interior_points() {
        let p = Polytope::hull(&[
            Vector::from_ints(&[0, 0]),
            Vector::from_ints(&[1, 0]),
            Vector::from_ints(&[0, 1]),
            Vector::new(vec![frac(1, 2), frac(1, 2)]),
        ])
        .unwrap();
        assert_eq!(p.vertices().len(), 3);
        let single = Polytope::hull(&pts(&[&[3, 4]])).unwrap();
        assert_eq!(single.dim(), 0);
    }

    #[test]
    fn pentagon_tile_has_four_vertices() {
        let t = pts(&[&[0, 0], &[1, 0], &[2, 0], &[0, 1], &[1, 1]]);
        let p = Polytope::hull(&t).unwrap();
        assert_eq!(p.vertices(), pts(&[&[0, 0], &[0, 1], &[1, 1], &[2, 0]]).as_slice());
        assert_eq!(p.support(&Vector::from_ints(&[1, 1])), int(2));
    }

    #[test]
    fn cube_facets_and_volume() {
        for d in 1..=4 {
            let c = cube(d, 0, 1);
            assert_eq!(c.facets().len(), 2 * d);
            assert_eq!(c.vertices().len(), 1 << d);
            assert_eq!(c.volume(), int(1));
            let sym = cube(d, -1, 1);
            let u = Vector::from_ints(&(0..d as i64).map(|i| i - 1).collect::<Vec<_>>());
            let l1: i64 = (0..d as i64).map(|i| (i - 1).abs()).sum();
            assert_eq!(sym.support(&u), int(l1));
        }
    }

    #[test]
    fn widths() {
        let sq = cube(2, 0, 1);
        assert_eq!(sq.width(&Vector::from_ints(&[1, 1])), int(2));
        let seg = Polytope::hull(&pts(&[&[0, 0], &[1, 0]])).unwrap();
        assert_eq!(seg.width(&Vector::from_ints(&[0, 1])), int(0));
    }

    #[test]
    fn difference_body_of_triangle_is_hexagon() {
        let tri = Polytope::hull(&pts(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap();
        let d = tri.difference_body();
        let mut want = pts(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1], &[1, -1], &[-1, 1]]);
        want.sort();
        assert_eq!(d.vertices(), want.as_slice());
        assert_eq!(d, tri.translate(&Vector::from_ints(&[5, -2])).difference_body());
    }

    #[test]
    fn lattice_points_small_cases() {
        assert_eq!(cube(2, 0, 1).lattice_points(&Lattice::integer(2)).len(), 4);
        let seg = Polytope::hull(&pts(&[&[0], &[15]])).unwrap();
        assert_eq!(seg.lattice_points(&Lattice::integer(1)).len(), 16);
        let sym = cube(2, -1, 1);
        assert_eq!(sym.interior_lattice_points(&Lattice::integer(2)).unwrap().len(), 1);
        let simplex = Polytope::hull(&pts(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap();
        assert!(simplex.interior_lattice_points(&Lattice::integer(3)).unwrap().is_empty());
        let hex = Polytope::hull(&pts(&[&[2, 0], &[-2, 0], &[0, 2], &[0, -2], &[2, 2], &[-2, -2]])).unwrap();
        assert_eq!(hex.interior_lattice_points(&Lattice::integer(2)).unwrap().len(), 7);
    }

    #[test]
    fn lattice_points_of_a_flat_polytope() {
        let seg = Polytope::hull(&pts(&[&[0, 0, 0], &[4, 2, 6]])).unwrap();
        assert_eq!(seg.dim(), 1);
        let got = seg.lattice_points(&Lattice::integer(3));
        assert_eq!(got.points(), pts(&[&[0, 0, 0], &[2, 1, 3], &[4, 2, 6]]).as_slice());
    }

    #[test]
    fn volumes() {
        let hex = Polytope::hull(&pts(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1], &[1, 1], &[-1, -1]])).unwrap();
        assert_eq!(hex.volume(), int(3));
        let tri = Polytope::hull(&pts(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap();
        let k = tri.scale(&frac(1, 2));
        assert_eq!(k.difference_body().polar_body().unwrap().volume(), int(12));
        let simplex = Polytope::hull(&pts(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap();
        assert_eq!(simplex.volume(), frac(1, 6));
    }

    #[test]
    fn polar_of_cube_is_cross_polytope() {
        let c = cube(3, -1, 1);
        let p = c.polar_body().unwrap();
        let mut want = Vec::new();
        for i in 0..3 {
            want.push(Vector::unit(3, i));
            want.push(-Vector::unit(3, i));
        }
        want.sort();
        assert_eq!(p.vertices(), want.as_slice());
        assert_eq!(p.polar_body().unwrap(), c);
        assert_eq!(cube(2, 0, 1).polar_body(), Err(Error::OriginNotInterior));
    }
}
