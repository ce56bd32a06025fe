//! Tilings `M = L ⊕ T`, thin-direction sets and the conditions deciding
//! lattice-convexity of `S ⊕ T`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::lattice::{self, dual_vectors_in_slab_box, integer_points_in_parallelotope, Bound, Lattice, ParallelotopeEnumerator};
use crate::linalg::{self, frac, int, nullspace, Matrix, Rational, Vector};
use crate::pointset::{self, PointSet};
use crate::polytope::{ccw_polygon, Polytope};
use crate::Error;

/// A triple `(M, L, T)`; `verified` is set only by [`Tiling::verify`].
#[derive(Clone, Debug)]
pub struct Tiling {
    m: Lattice,
    l: Lattice,
    t: PointSet,
    verified: bool,
}

impl Tiling {
    /// Checks `L ⊆ M`, `T ⊆ M`, `|T| = [M : L]`, distinct residues of `T`
    /// modulo `L`, and `M`-convexity of `T`.
    pub fn verify(m: Lattice, l: Lattice, t: PointSet) -> Result<Tiling, Error> {
        let d = m.dim();
        for dim in [l.dim(), t.dim()] {
            if dim != d {
                return Err(Error::DimensionMismatch { expected: d, found: dim });
            }
        }
        if t.is_empty() {
            return Err(Error::EmptySet);
        }
        let idx = lattice::index(&l, &m)?;
        if let Some(p) = t.is_subset_of_lattice(&m) {
            return Err(Error::NotInLattice(p.clone()));
        }
        if t.len() as u64 != idx {
            return Err(Error::NotATiling(format!("|T| = {} but [M : L] = {idx}", t.len())));
        }
        let mut residues: BTreeMap<Vector, &Vector> = BTreeMap::new();
        for p in t.iter() {
            if let Some(q) = residues.insert(l.canonical_residue(p), p) {
                return Err(Error::NotATiling(format!("{q} and {p} are congruent modulo L")));
            }
        }
        if let Some(gap) = pointset::lattice_convexity_gap(&t, &m)? {
            return Err(Error::NotLatticeConvex(gap));
        }
        Ok(Tiling { m, l, t, verified: true })
    }

    pub fn unverified(m: Lattice, l: Lattice, t: PointSet) -> Tiling {
        Tiling { m, l, t, verified: false }
    }

    pub fn m(&self) -> &Lattice {
        &self.m
    }

    pub fn l(&self) -> &Lattice {
        &self.l
    }

    pub fn t(&self) -> &PointSet {
        &self.t
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub fn dim(&self) -> usize {
        self.m.dim()
    }

    /// `(M1 × M2, L1 × L2, T1 × T2)`.
    pub fn product(&self, other: &Tiling) -> Tiling {
        Tiling {
            m: self.m.product(&other.m),
            l: self.l.product(&other.l),
            t: self.t.product(&other.t),
            verified: self.verified && other.verified,
        }
    }
}

pub fn verify_tiling(m: Lattice, l: Lattice, t: PointSet) -> Result<Tiling, Error> {
    Tiling::verify(m, l, t)
}

/// `max <u,x> - min <u,x>` over the points.
pub fn width_of_points(points: &[Vector], u: &Vector) -> Rational {
    let mut it = points.iter().map(|p| u.dot(p));
    let first = it.next().expect("nonempty");
    let (lo, hi) = it.fold((first.clone(), first), |(lo, hi), x| {
        if x < lo {
            (x, hi)
        } else if x > hi {
            (lo, x)
        } else {
            (lo, hi)
        }
    });
    hi - lo
}

pub fn width(t: &PointSet, u: &Vector) -> Rational {
    width_of_points(t.points(), u)
}

/// `d` linearly independent differences taken from the lexicographic
/// minimum.
fn spanning_differences(points: &[Vector]) -> Option<Vec<Vector>> {
    let p0 = points.first()?;
    let diffs: Vec<Vector> = points[1..].iter().map(|p| p - p0).collect();
    let keep = linalg::independent_subset(&diffs);
    (keep.len() == p0.dim()).then(|| keep.into_iter().map(|i| diffs[i].clone()).collect())
}

/// Nonzero `u ∈ L*` with `w(K, u) < bound` (or `<=` when not strict), with
/// their widths. `K` must be full-dimensional: then `|<v_i, u>| <= w(K, u)`
/// for the spanning differences `v_i` confines `u` to a finite box.
pub fn thin_dual_vectors(points: &[Vector], l: &Lattice, bound: &Rational, strict: bool) -> Result<Vec<(Vector, Rational)>, Error> {
    let dirs = spanning_differences(points).ok_or(Error::LowerDimensionalTile)?;
    let vertices = Polytope::hull(points)?.vertices().to_vec();
    let mut out: Vec<(Vector, Rational)> = dual_vectors_in_slab_box(l, &dirs, bound, strict)?
        .into_iter()
        .filter(|u| !u.is_zero())
        .filter_map(|u| {
            let w = width_of_points(&vertices, &u);
            let inside = if strict { &w < bound } else { &w <= bound };
            inside.then_some((u, w))
        })
        .collect();
    out.sort();
    Ok(out)
}

/// `W(T, L) = {u ∈ L* \ {o} : w(T, u) < 1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WSetResult {
    pub vectors: Vec<Vector>,
    pub widths: BTreeMap<Vector, Rational>,
}

impl WSetResult {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn contains(&self, u: &Vector) -> bool {
        self.widths.contains_key(u)
    }
}

pub fn w_set(t: &PointSet, l: &Lattice) -> Result<WSetResult, Error> {
    let found = thin_dual_vectors(t.points(), l, &Rational::one(), true)?;
    Ok(WSetResult { vectors: found.iter().map(|(u, _)| u.clone()).collect(), widths: found.into_iter().collect() })
}

/// `min { w(K, u) : u ∈ L* \ {o} }` with the lexicographically smallest
/// minimizer. A lower-dimensional `K` has width 0, witnessed by a primitive
/// dual vector orthogonal to its affine hull.
pub fn lattice_width(points: &[Vector], l: &Lattice) -> Result<(Rational, Vector), Error> {
    let p0 = points.first().ok_or(Error::EmptySet)?;
    let d = p0.dim();
    if spanning_differences(points).is_none() {
        let diffs: Vec<Vector> = points[1..].iter().map(|p| p - p0).collect();
        let normal = nullspace(&diffs, d).swap_remove(0);
        return Ok((Rational::zero(), l.dual().primitive_along(&normal)?));
    }
    let w0 = l.dual().basis_vectors().iter().map(|u| width_of_points(points, u)).min().expect("d >= 1");
    let candidates = thin_dual_vectors(points, l, &w0, false)?;
    let best = candidates.iter().map(|(_, w)| w).min().expect("a dual basis vector attains w0").clone();
    let u = candidates.into_iter().find(|(_, w)| *w == best).map(|(u, _)| u).expect("present");
    Ok((best, u))
}

pub fn lattice_width_of_set(k: &PointSet, l: &Lattice) -> Result<(Rational, Vector), Error> {
    lattice_width(k.points(), l)
}

/// `M ∩ (v + (0,1] b_1 + ... + (0,1] b_d)`.
pub fn dirichlet_tile(m: &Lattice, basis: &Matrix, v: &Vector) -> Result<PointSet, Error> {
    if let Some(c) = basis.columns().into_iter().find(|c| !m.contains(c)) {
        return Err(Error::NotASublattice(c));
    }
    let inv = basis.inverse()?;
    let a = inv.mul(m.basis());
    let c = inv.mul_vec(v);
    let lo: Vec<Bound> = c.iter().map(|x| Bound::open(x.clone())).collect();
    let hi: Vec<Bound> = c.iter().map(|x| Bound::closed(x + Rational::one())).collect();
    let ys = integer_points_in_parallelotope(&a, &lo, &hi)?;
    PointSet::new(ys.iter().map(|y| m.point(y)).collect())
}

/// Data of the slab family `T_q = {t ∈ Z^d : q_i + n_i <= <a_i, t> <= q_i + L}`
/// for an integer basis `B` with `L = det B > 0`, `a_i` the rows of
/// `adj(B)` and `n_i` their contents.
#[derive(Clone, Debug)]
pub struct TqSystem {
    pub adjugate: Matrix,
    pub contents: Vec<i64>,
    pub det: i64,
    enumerator: ParallelotopeEnumerator,
}

impl TqSystem {
    pub fn new(b: &Matrix) -> Result<TqSystem, Error> {
        if !b.is_square() || !b.is_integral() {
            return Err(Error::InvalidParameters("basis must be a square integer matrix".into()));
        }
        let det = b.det();
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        if det.is_negative() {
            return Err(Error::InvalidParameters("basis must have positive determinant".into()));
        }
        let adjugate = b.adjugate();
        let contents = (0..adjugate.nrows())
            .map(|i| {
                let g = adjugate.row(i).iter().fold(BigInt::zero(), |g, x| g.gcd(x.numer()));
                g.to_i64().expect("small content")
            })
            .collect();
        let enumerator = ParallelotopeEnumerator::new(&adjugate)?;
        Ok(TqSystem { adjugate, contents, det: det.to_integer().to_i64().expect("small determinant"), enumerator })
    }

    /// Number of admissible `q`: `prod L / n_i`.
    pub fn candidate_count(&self) -> u64 {
        self.contents.iter().map(|&n| (self.det / n) as u64).product()
    }

    /// All admissible `q` in lexicographic order.
    pub fn offsets(&self) -> Vec<Vec<i64>> {
        let mut out = vec![Vec::new()];
        for &n in &self.contents {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..self.det).step_by(n as usize).map(move |q| {
                        let mut p = prefix.clone();
                        p.push(q);
                        p
                    })
                })
                .collect();
        }
        out
    }

    pub fn tile(&self, q: &[i64]) -> PointSet {
        let lo: Vec<Bound> = q.iter().zip(&self.contents).map(|(&q, &n)| Bound::closed(int(q + n))).collect();
        let hi: Vec<Bound> = q.iter().map(|&q| Bound::closed(int(q + self.det))).collect();
        let pts = self.enumerator.points(&lo, &hi);
        PointSet::new(pts).unwrap_or_else(|_| PointSet::empty(q.len()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TqTile {
    pub q: Vec<i64>,
    pub tile: PointSet,
}

/// All distinct `T_q`, keyed by the first `q` producing each.
pub fn enumerate_tiles_tq(b: &Matrix) -> Result<Vec<TqTile>, Error> {
    let sys = TqSystem::new(b)?;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for q in sys.offsets() {
        let tile = sys.tile(&q);
        if !tile.is_empty() && seen.insert(tile.clone()) {
            out.push(TqTile { q, tile });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConditionWitness {
    /// A lattice point of the hull missing from the set.
    ConvexityGap(Vector),
    /// A facet whose primitive normal `u ∈ L*` has `w(T, u) >= 1`.
    ThickFacetNormal { normal: Vector, width: Rational },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    pub holds: bool,
    pub witness: Option<ConditionWitness>,
}

impl ConditionReport {
    fn ok() -> Self {
        ConditionReport { holds: true, witness: None }
    }

    fn fail(w: ConditionWitness) -> Self {
        ConditionReport { holds: false, witness: Some(w) }
    }
}

fn require_verified(t: &Tiling) -> Result<(), Error> {
    if t.is_verified() {
        Ok(())
    } else {
        Err(Error::UnverifiedTiling)
    }
}

fn require_in_l(s: &PointSet, t: &Tiling) -> Result<(), Error> {
    if s.dim() != t.dim() {
        return Err(Error::DimensionMismatch { expected: t.dim(), found: s.dim() });
    }
    match s.is_subset_of_lattice(t.l()) {
        Some(p) => Err(Error::NotInLattice(p.clone())),
        None => Ok(()),
    }
}

/// Checks facets of `conv(S)` selected by `include`: each must have its
/// primitive normal in `W(T, L)`.
fn facet_normals_thin(
    s: &PointSet,
    t: &Tiling,
    include: impl Fn(&Polytope) -> Result<bool, Error>,
) -> Result<ConditionReport, Error> {
    if !s.is_full_dimensional() {
        return Err(Error::LowerDimensional);
    }
    if let Some(gap) = pointset::lattice_convexity_gap(s, t.l())? {
        return Ok(ConditionReport::fail(ConditionWitness::ConvexityGap(gap)));
    }
    let hull = s.hull()?;
    let dual = t.l().dual();
    let mut facets = hull.facets().to_vec();
    facets.sort_by(|a, b| a.normal.cmp(&b.normal));
    for f in &facets {
        let face = Polytope::hull(&hull.facet_vertices(f))?;
        if !include(&face)? {
            continue;
        }
        let u = dual.primitive_along(&f.normal)?;
        let w = width(t.t(), &u);
        if w >= Rational::one() {
            return Ok(ConditionReport::fail(ConditionWitness::ThickFacetNormal { normal: u, width: w }));
        }
    }
    Ok(ConditionReport::ok())
}

/// `S` is `L`-convex and every facet of `conv(S)` has a normal in `W(T, L)`.
pub fn check_condition_a(s: &PointSet, t: &Tiling) -> Result<ConditionReport, Error> {
    require_verified(t)?;
    require_in_l(s, t)?;
    facet_normals_thin(s, t, |_| Ok(true))
}

/// `S ⊕ T` is `M`-convex, decided by brute force.
pub fn check_condition_b(s: &PointSet, t: &Tiling) -> Result<ConditionReport, Error> {
    require_verified(t)?;
    require_in_l(s, t)?;
    let sum = pointset::direct_sum(s, t.t())?;
    Ok(match pointset::lattice_convexity_gap(&sum, t.m())? {
        Some(gap) => ConditionReport::fail(ConditionWitness::ConvexityGap(gap)),
        None => ConditionReport::ok(),
    })
}

/// `S` is `L`-convex and every facet `F` with `aff(F) ⊆ F + L` has a normal
/// in `W(T, L)`.
pub fn check_condition_c(s: &PointSet, t: &Tiling) -> Result<ConditionReport, Error> {
    require_verified(t)?;
    require_in_l(s, t)?;
    if t.dim() > 3 {
        return Err(Error::UnsupportedDimension(t.dim()));
    }
    facet_normals_thin(s, t, |f| affine_covering_test(f, t.l()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbcReport {
    pub a: ConditionReport,
    pub b: ConditionReport,
    /// Absent in dimensions above 3.
    pub c: Option<ConditionReport>,
}

pub fn check_abc(s: &PointSet, t: &Tiling) -> Result<AbcReport, Error> {
    Ok(AbcReport {
        a: check_condition_a(s, t)?,
        b: check_condition_b(s, t)?,
        c: if t.dim() <= 3 { Some(check_condition_c(s, t)?) } else { None },
    })
}

/// Whether the translates `F + L` cover the affine hull of the facet `F`.
pub fn affine_covering_test(f: &Polytope, l: &Lattice) -> Result<bool, Error> {
    let d = f.ambient_dim();
    if d > 3 {
        return Err(Error::UnsupportedDimension(d));
    }
    if f.dim() + 1 != d {
        return Err(Error::InvalidParameters(format!("expected a facet of dimension {}", d - 1)));
    }
    let vs = f.vertices();
    match d {
        1 => Ok(true),
        2 => {
            let v = &vs[1] - &vs[0];
            let step = l.primitive_along(&v)?;
            let j = (0..2).find(|&j| !step[j].is_zero()).expect("nonzero");
            Ok((&v[j] / &step[j]).abs() >= Rational::one())
        }
        _ => {
            // Coordinates of F - f0 with respect to a basis of L ∩ lin(F - f0).
            let coords: Vec<Vector> = vs.iter().map(|p| l.coordinates(&(p - &vs[0]))).collect();
            let spanning = spanning_in_plane(&coords);
            let normal = nullspace(&spanning, 3).swap_remove(0).primitive_integer();
            let kernel = linalg::integer_kernel(&Matrix::from_rows(&[normal]));
            let k = Matrix::from_columns(&kernel);
            let rows = linalg::independent_subset(&k.transpose().columns());
            let square = Matrix::from_rows(&rows.iter().map(|&i| k.row(i)).collect::<Vec<_>>());
            let inv = square.inverse()?;
            let planar: Vec<Vector> = coords.iter().map(|c| inv.mul_vec(&c.select(&rows))).collect();
            Ok(polygon_covers_plane(&ccw_polygon(&planar)))
        }
    }
}

fn spanning_in_plane(coords: &[Vector]) -> Vec<Vector> {
    let diffs: Vec<Vector> = coords[1..].to_vec();
    linalg::independent_subset(&diffs).into_iter().map(|i| diffs[i].clone()).collect()
}

/// Whether `P + Z^2 = R^2` for a convex polygon `P` (counterclockwise).
///
/// Only translates meeting the unit square matter. Between consecutive
/// critical abscissae (vertices, pairwise edge crossings, edge crossings
/// with `y = 0` and `y = 1`) the vertical cross-sections keep their
/// combinatorial order, so one sample per open slab decides that slab; the
/// union of translates is closed, so covering all open slabs covers the
/// square.
pub fn polygon_covers_plane(polygon: &[Vector]) -> bool {
    if polygon.len() < 3 {
        return false;
    }
    let xs = || polygon.iter().map(|p| &p[0]);
    let ys = || polygon.iter().map(|p| &p[1]);
    let (xmin, xmax) = (xs().min().unwrap().clone(), xs().max().unwrap().clone());
    let (ymin, ymax) = (ys().min().unwrap().clone(), ys().max().unwrap().clone());
    let range = |lo: &Rational, hi: &Rational| {
        let from = (-hi).floor().to_integer().to_i64().expect("small");
        let to = (Rational::one() - lo).ceil().to_integer().to_i64().expect("small");
        from..=to
    };
    let mut pieces: Vec<Vec<Vector>> = Vec::new();
    for kx in range(&xmin, &xmax) {
        for ky in range(&ymin, &ymax) {
            let t = Vector::from_ints(&[kx, ky]);
            pieces.push(polygon.iter().map(|p| p + &t).collect());
        }
    }
    let edges: Vec<(Vector, Vector)> = pieces
        .iter()
        .flat_map(|poly| (0..poly.len()).map(move |i| (poly[i].clone(), poly[(i + 1) % poly.len()].clone())))
        .collect();

    let zero = Rational::zero();
    let one = Rational::one();
    let mut critical: BTreeSet<Rational> = BTreeSet::new();
    critical.insert(zero.clone());
    critical.insert(one.clone());
    let mut add = |x: Rational| {
        if x > zero && x < one {
            critical.insert(x);
        }
    };
    for poly in &pieces {
        for p in poly {
            add(p[0].clone());
        }
    }
    for (p, q) in &edges {
        for y in [&zero, &one] {
            if let Some(x) = crossing_with_horizontal(p, q, y) {
                add(x);
            }
        }
    }
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if let Some(x) = segment_crossing_x(&edges[i], &edges[j]) {
                add(x);
            }
        }
    }
    let critical: Vec<Rational> = critical.into_iter().collect();
    critical.windows(2).all(|w| {
        let mid = (&w[0] + &w[1]) / int(2);
        let mut spans: Vec<(Rational, Rational)> = pieces.iter().filter_map(|poly| vertical_section(poly, &mid)).collect();
        spans.sort();
        let mut reach = zero.clone();
        for (lo, hi) in spans {
            if lo > reach {
                break;
            }
            if hi > reach {
                reach = hi;
            }
        }
        reach >= one
    })
}

fn crossing_with_horizontal(p: &Vector, q: &Vector, y: &Rational) -> Option<Rational> {
    if p[1] == q[1] {
        return None;
    }
    let t = (y - &p[1]) / (&q[1] - &p[1]);
    (t >= Rational::zero() && t <= Rational::one()).then(|| &p[0] + t * (&q[0] - &p[0]))
}

fn segment_crossing_x((p, q): &(Vector, Vector), (r, s): &(Vector, Vector)) -> Option<Rational> {
    let d1 = q - p;
    let d2 = s - r;
    let denom = &d1[0] * &d2[1] - &d1[1] * &d2[0];
    if denom.is_zero() {
        return None;
    }
    let w = r - p;
    let t = (&w[0] * &d2[1] - &w[1] * &d2[0]) / &denom;
    let u = (&w[0] * &d1[1] - &w[1] * &d1[0]) / &denom;
    let unit = |x: &Rational| *x >= Rational::zero() && *x <= Rational::one();
    (unit(&t) && unit(&u)).then(|| &p[0] + t * &d1[0])
}

/// `y`-interval of the polygon on the line `x = x0` (not through a vertex).
fn vertical_section(poly: &[Vector], x0: &Rational) -> Option<(Rational, Rational)> {
    let mut ys: Vec<Rational> = Vec::new();
    for i in 0..poly.len() {
        let (p, q) = (&poly[i], &poly[(i + 1) % poly.len()]);
        if p[0] == q[0] {
            continue;
        }
        let (lo, hi) = if p[0] < q[0] { (&p[0], &q[0]) } else { (&q[0], &p[0]) };
        if x0 > lo && x0 < hi {
            ys.push(&p[1] + (x0 - &p[0]) * (&q[1] - &p[1]) / (&q[0] - &p[0]));
        }
    }
    let lo = ys.iter().min()?.clone();
    let hi = ys.iter().max()?.clone();
    Some((lo, hi))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityReport {
    pub holds: bool,
    /// Some `u ∈ L* \ {o}` with `w(T, 2u) < 1`.
    pub witness: Option<Vector>,
}

/// `2L* ∩ int D(T)° = {o}`, i.e. no nonzero `u ∈ L*` has `w(T, u) < 1/2`.
pub fn parity_check(t: &Tiling) -> Result<ParityReport, Error> {
    let thin = thin_dual_vectors(t.t().points(), t.l(), &frac(1, 2), true)?;
    let witness = thin.into_iter().next().map(|(u, _)| u);
    Ok(ParityReport { holds: witness.is_none(), witness })
}

/// The quantities that bound the number of thin directions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitenessReport {
    pub w_count: usize,
    pub count_bound: u64,
    /// `vol(conv(W ∪ {o}))`.
    pub w_hull_volume: Rational,
    /// `vol(D(T)°)`.
    pub polar_volume: Rational,
    /// `4^d / det L`.
    pub volume_bound: Rational,
}

impl FinitenessReport {
    pub fn holds(&self) -> bool {
        (self.w_count as u64) < self.count_bound
            && self.w_hull_volume < self.polar_volume
            && self.polar_volume <= self.volume_bound
    }
}

pub fn finiteness_report(t: &Tiling) -> Result<FinitenessReport, Error> {
    let d = t.dim();
    let w = w_set(t.t(), t.l())?;
    let mut pts = w.vectors.clone();
    pts.push(Vector::zeros(d));
    let w_hull_volume = Polytope::hull(&pts)?.volume();
    let polar_volume = t.t().hull()?.difference_body().polar_body()?.volume();
    let count_bound = 4u64.pow(d as u32);
    let volume_bound = Rational::from_integer(BigInt::from(count_bound)) / t.l().det();
    Ok(FinitenessReport { w_count: w.len(), count_bound, w_hull_volume, polar_volume, volume_bound })
}

/// `2 (3/2)^(d-2) (d!)^2`, rounded down.
pub fn coefficient_bound(d: usize) -> u64 {
    let fact: u64 = (1..=d as u64).product();
    let mut r = Rational::from_integer(BigInt::from(2 * fact * fact));
    for _ in 2..d {
        r *= frac(3, 2);
    }
    r.floor().to_integer().to_u64().expect("small")
}

/// Searches for a basis `b_1..b_d` of `L` with `|<b_i, w>| <= k` for all
/// `w ∈ W`, i.e. `W ⊆ sum {-k..k} b_i*` for the dual basis, trying
/// `k = 1, 2, ..` up to `max_k`. Returns the basis and the first `k` that
/// works, or `None` when `W` does not span or no basis is found.
pub fn bounded_dual_basis(w: &[Vector], l: &Lattice, max_k: u64) -> Option<(Vec<Vector>, u64)> {
    let d = l.dim();
    let keep = linalg::independent_subset(w);
    if keep.len() < d {
        return None;
    }
    let sel = Matrix::from_rows(&keep.iter().map(|&i| w[i].clone()).collect::<Vec<_>>());
    let a = sel.mul(l.basis());
    let det = l.det();
    for k in 1..=max_k {
        let kr = Rational::from_integer(BigInt::from(k));
        let lo: Vec<Bound> = (0..d).map(|_| Bound::closed(-kr.clone())).collect();
        let hi: Vec<Bound> = (0..d).map(|_| Bound::closed(kr.clone())).collect();
        let ys = integer_points_in_parallelotope(&a, &lo, &hi).ok()?;
        let mut cands: Vec<Vector> = ys
            .iter()
            .map(|y| l.point(y))
            .filter(|x| !x.is_zero() && x.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_positive()))
            .filter(|x| w.iter().all(|u| u.dot(x).abs() <= kr))
            .collect();
        cands.sort();
        if let Some(basis) = find_basis(&cands, d, &det) {
            return Some((basis, k));
        }
    }
    None
}

fn find_basis(cands: &[Vector], d: usize, det: &Rational) -> Option<Vec<Vector>> {
    fn rec(cands: &[Vector], start: usize, d: usize, det: &Rational, chosen: &mut Vec<Vector>) -> bool {
        if chosen.len() == d {
            return Matrix::from_columns(chosen).det().abs() == *det;
        }
        for i in start..cands.len() {
            chosen.push(cands[i].clone());
            if linalg::rank(chosen) == chosen.len() && rec(cands, i + 1, d, det, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::new();
    rec(cands, 0, d, det, &mut chosen).then_some(chosen)
}
