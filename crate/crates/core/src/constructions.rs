//! Explicit tilings, homometric pairs and counterexamples.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::lattice::{sublattices_of_integer_lattice_2d, Lattice};
use crate::linalg::{self, frac, int, lcm_of_denominators, Matrix, Rational, Vector};
use crate::pointset::{self, PointSet};
use crate::polytope::Polytope;
use crate::tiling::{self, Tiling, WSetResult};
use crate::Error;

/// `K = S ⊕ T` and `L = S ⊕ (-T)` for a tiling `(M, L, T)`.
#[derive(Clone, Debug)]
pub struct HomometricPair {
    pub sum: PointSet,
    pub mirrored_sum: PointSet,
    pub tiling: Tiling,
    pub s: PointSet,
    pub nontrivial: bool,
}

impl HomometricPair {
    pub fn new(s: PointSet, tiling: Tiling) -> Result<Self, Error> {
        let sum = pointset::direct_sum(&s, tiling.t())?;
        let mirrored_sum = pointset::direct_sum(&s, &tiling.t().negate())?;
        let nontrivial = !pointset::trivially_homometric(&sum, &mirrored_sum)?;
        Ok(HomometricPair { sum, mirrored_sum, tiling, s, nontrivial })
    }

    pub fn is_homometric(&self) -> bool {
        pointset::homometric(&self.sum, &self.mirrored_sum).unwrap_or(false)
    }
}

/// `T = {0..k} × {0} ∪ {0..k-1} × {1}` with `L` spanned by `(k+1, -1)`, `(k, 1)`.
pub fn planar_tiling(k: i64) -> Result<Tiling, Error> {
    if k < 1 {
        return Err(Error::InvalidParameters("k must be at least 1".into()));
    }
    generalized_tiling(2, k).map(|g| g.tiling)
}

/// The planar family with `S` defaulting to `{o, b_1, b_2}`. A supplied `S`
/// must be two-dimensional, `L`-convex, and have every edge parallel to
/// `b_1`, `b_2` or `b_2 - b_1`.
pub fn planar_family(k: i64, s: Option<PointSet>) -> Result<HomometricPair, Error> {
    let tiling = planar_tiling(k)?;
    let b = tiling.l().basis_vectors();
    let s = match s {
        None => PointSet::new(vec![Vector::zeros(2), b[0].clone(), b[1].clone()])?,
        Some(s) => {
            if s.dim() != 2 {
                return Err(Error::InvalidS(format!("expected planar points, got dimension {}", s.dim())));
            }
            if let Some(p) = s.is_subset_of_lattice(tiling.l()) {
                return Err(Error::InvalidS(format!("{p} is not in L")));
            }
            if !s.is_full_dimensional() {
                return Err(Error::InvalidS("S is not two-dimensional".into()));
            }
            if let Some(gap) = pointset::lattice_convexity_gap(&s, tiling.l())? {
                return Err(Error::InvalidS(format!("S is not L-convex: {gap} is missing")));
            }
            let dirs = [b[0].clone(), b[1].clone(), &b[1] - &b[0]];
            let hull = s.hull()?;
            for f in hull.facets() {
                if !dirs.iter().any(|v| f.normal.dot(v).is_zero()) {
                    let vs = hull.facet_vertices(f);
                    return Err(Error::InvalidS(format!("edge {} -- {} is not parallel to b_1, b_2 or b_2 - b_1", vs[0], vs[1])));
                }
            }
            s
        }
    };
    HomometricPair::new(s, tiling)
}

/// The `d`-dimensional generalization of the planar family.
#[derive(Clone, Debug)]
pub struct GeneralizedTiling {
    /// `a = sum ((i-1) k + 1) e_i`.
    pub a: Vector,
    /// `r = d k + 1`.
    pub r: i64,
    /// Basis `b_1..b_d` of `L = {z ∈ Z^d : <z, a> ∈ r Z}`.
    pub basis: Vec<Vector>,
    /// `b_i* = a / r - sum_{l > i} e_l`.
    pub dual_basis: Vec<Vector>,
    pub tiling: Tiling,
}

pub fn generalized_tiling(d: usize, k: i64) -> Result<GeneralizedTiling, Error> {
    if d < 2 || k < 1 {
        return Err(Error::InvalidParameters("need d >= 2 and k >= 1".into()));
    }
    let r = d as i64 * k + 1;
    let a = Vector::from_ints(&(0..d as i64).map(|i| i * k + 1).collect::<Vec<_>>());
    let e = |i: usize| Vector::unit(d, i);
    let ke1 = e(0).scale(&int(k));
    let mut basis = vec![&e(0).scale(&int(k + 1)) - &e(1)];
    for i in 1..d - 1 {
        basis.push(&(&ke1 + &e(i)) - &e(i + 1));
    }
    basis.push(&ke1 + &e(d - 1));
    let dual_basis = (0..d)
        .map(|i| {
            let mut v = a.scale(&frac(1, r));
            for l in i + 1..d {
                v = &v - &e(l);
            }
            v
        })
        .collect();
    let mut t = Vec::new();
    for x in 0..=k {
        t.push(e(0).scale(&int(x)));
    }
    for i in 1..d {
        for x in 0..k {
            t.push(&e(0).scale(&int(x)) + &e(i));
        }
    }
    let tiling = Tiling::verify(Lattice::integer(d), Lattice::from_columns(&basis)?, PointSet::new(t)?)?;
    Ok(GeneralizedTiling { a, r, basis, dual_basis, tiling })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneralizedVariant {
    /// `S = {o, b_1, ..., b_d}`.
    Simplex,
    /// `S = {sum i_j b_j : 0 <= i_j <= n, sum i_j <= m}` with `m < d n`.
    TruncatedBox { n: i64, m: i64 },
}

pub fn generalized_family(d: usize, k: i64, variant: GeneralizedVariant) -> Result<HomometricPair, Error> {
    let g = generalized_tiling(d, k)?;
    let s = match variant {
        GeneralizedVariant::Simplex => {
            let mut pts = vec![Vector::zeros(d)];
            pts.extend(g.basis.iter().cloned());
            PointSet::new(pts)?
        }
        GeneralizedVariant::TruncatedBox { n, m } => {
            if n < 1 || m < 1 || m >= d as i64 * n {
                return Err(Error::InvalidParameters("truncated box needs n >= 1 and 1 <= m < d n".into()));
            }
            let mut pts = Vec::new();
            let mut idx = vec![0i64; d];
            loop {
                if idx.iter().sum::<i64>() <= m {
                    let mut p = Vector::zeros(d);
                    for (c, b) in idx.iter().zip(&g.basis) {
                        p = &p + &b.scale(&int(*c));
                    }
                    pts.push(p);
                }
                let mut j = 0;
                while j < d && idx[j] == n {
                    idx[j] = 0;
                    j += 1;
                }
                if j == d {
                    break;
                }
                idx[j] += 1;
            }
            PointSet::new(pts)?
        }
    };
    HomometricPair::new(s, g.tiling)
}

/// Product of two pairs: `S_1 × S_2` over `(M_1 × M_2, L_1 × L_2, T_1 × T_2)`.
pub fn cartesian_product(p1: &HomometricPair, p2: &HomometricPair) -> Result<HomometricPair, Error> {
    HomometricPair::new(p1.s.product(&p2.s), p1.tiling.product(&p2.tiling))
}

/// The one-dimensional tiling `(Z, n Z, {0..n-1})` with `S = {0, n, .., (len-1) n}`.
pub fn interval_pair(n: i64, len: i64) -> Result<HomometricPair, Error> {
    if n < 1 || len < 1 {
        return Err(Error::InvalidParameters("need n >= 1 and len >= 1".into()));
    }
    let t = PointSet::from_ints_1d(&(0..n).collect::<Vec<_>>());
    let tiling = Tiling::verify(Lattice::integer(1), Lattice::scaled_integer(1, n), t)?;
    let s = PointSet::from_ints_1d(&(0..len).map(|i| i * n).collect::<Vec<_>>());
    HomometricPair::new(s, tiling)
}

/// Two elements of `W(T', L')` forming a basis of `L'*`, if any.
fn thin_dual_basis(w: &WSetResult, l: &Lattice) -> Option<(Vector, Vector)> {
    let det = l.dual().det();
    for (i, u) in w.vectors.iter().enumerate() {
        for v in &w.vectors[i + 1..] {
            if Matrix::from_columns(&[u.clone(), v.clone()]).det().abs() == det {
                return Some((u.clone(), v.clone()));
            }
        }
    }
    None
}

/// Lifts a planar tiling to `(M' × Z, L' × Z, T' × {0})` and takes `S` as
/// the lattice points of `[0,1] × P`, `P = conv{(i^2, i) : |i| <= N}`, in
/// coordinates where two thin directions of the base are the first two
/// dual basis vectors. Defaults to the planar family with `k = 2`.
pub fn parabola_construction(n: i64, base: Option<Tiling>) -> Result<HomometricPair, Error> {
    if n < 1 {
        return Err(Error::InvalidParameters("N must be at least 1".into()));
    }
    let base = match base {
        Some(b) => b,
        None => planar_tiling(2)?,
    };
    if base.dim() != 2 || !base.is_verified() {
        return Err(Error::InvalidBase("expected a verified planar tiling".into()));
    }
    if pointset::centrally_symmetric(base.t())? {
        return Err(Error::InvalidBase("tile is centrally symmetric".into()));
    }
    let w = tiling::w_set(base.t(), base.l()).map_err(|e| Error::InvalidBase(e.to_string()))?;
    let (u1, u2) = thin_dual_basis(&w, base.l())
        .ok_or_else(|| Error::InvalidBase("W(T', L') contains no basis of the dual lattice".into()))?;
    // Primal basis c_1, c_2 of L' dual to u_1, u_2.
    let c = linalg::dual_basis(&Matrix::from_columns(&[u1, u2]))?;
    let (c1, c2) = (c.column(0), c.column(1));
    let mut pts = Vec::new();
    let parabola: Vec<Vector> = (-n..=n).map(|i| Vector::from_ints(&[i * i, i])).collect();
    let p = Polytope::hull(&parabola)?;
    for q in p.lattice_points(&Lattice::integer(2)).iter() {
        for z1 in 0..=1 {
            let planar = &c1.scale(&int(z1)) + &c2.scale(&q[0]);
            pts.push(planar.concat(&Vector::new(vec![q[1].clone()])));
        }
    }
    let s = PointSet::new(pts)?;
    let t = base.t().product(&PointSet::from_ints_1d(&[0]));
    let tiling = Tiling::verify(base.m().product(&Lattice::integer(1)), base.l().product(&Lattice::integer(1)), t)?;
    HomometricPair::new(s, tiling)
}

/// An `S` together with a tiling.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub s: PointSet,
    pub tiling: Tiling,
}

/// `M = Z^d + Z a` with `a = (1/2) sum e_i`, `L = Z^d`, `T = {o, a}`,
/// `S = {o, e_1, ..., e_d}`.
pub fn counterexample_ab(d: usize) -> Result<Certificate, Error> {
    if d < 3 {
        return Err(Error::InvalidParameters("needs d >= 3".into()));
    }
    let a = Vector::new(vec![frac(1, 2); d]);
    let mut mb: Vec<Vector> = (0..d - 1).map(|i| Vector::unit(d, i)).collect();
    mb.push(a.clone());
    let tiling = Tiling::verify(Lattice::from_columns(&mb)?, Lattice::integer(d), PointSet::new(vec![Vector::zeros(d), a])?)?;
    let mut s = vec![Vector::zeros(d)];
    s.extend((0..d).map(|i| Vector::unit(d, i)));
    Ok(Certificate { s: PointSet::new(s)?, tiling })
}

/// `M = Z^d`, `L = d Z^d`, `S = {o, d e_1, ..., d e_d}`, `T = {0..d-1}^d`.
pub fn counterexample_bc(d: usize) -> Result<Certificate, Error> {
    if d < 3 {
        return Err(Error::InvalidParameters("needs d >= 3".into()));
    }
    let di = d as i64;
    let mut t = vec![Vec::new()];
    for _ in 0..d {
        t = t.into_iter().flat_map(|p: Vec<i64>| (0..di).map(move |x| [p.clone(), vec![x]].concat())).collect();
    }
    let t = PointSet::new(t.iter().map(|p| Vector::from_ints(p)).collect())?;
    let tiling = Tiling::verify(Lattice::integer(d), Lattice::scaled_integer(d, di), t)?;
    let mut s = vec![Vector::zeros(d)];
    s.extend((0..d).map(|i| Vector::unit(d, i).scale(&int(di))));
    Ok(Certificate { s: PointSet::new(s)?, tiling })
}

/// A named pair `S`, `T` in `Z^d` with its machine-checked properties.
#[derive(Clone, Debug)]
pub struct IrregularExample {
    pub name: &'static str,
    pub s: PointSet,
    pub t: PointSet,
    pub direct: bool,
    pub sum: Option<PointSet>,
    pub sum_lattice_convex: bool,
    pub mirrored_sum_lattice_convex: bool,
    pub s_intrinsically_convex: bool,
    pub t_intrinsically_convex: bool,
    pub homometric: bool,
    pub nontrivial: bool,
}

impl IrregularExample {
    pub fn analyze(name: &'static str, s: PointSet, t: PointSet) -> Result<Self, Error> {
        let m = Lattice::integer(s.dim());
        let direct = pointset::is_direct_sum(&s, &t);
        let (sum, mirrored) = if direct {
            (Some(pointset::direct_sum(&s, &t)?), Some(pointset::direct_sum(&s, &t.negate())?))
        } else {
            (None, None)
        };
        let convex = |k: &Option<PointSet>| -> Result<bool, Error> {
            match k {
                Some(k) => pointset::is_lattice_convex(k, &m),
                None => Ok(false),
            }
        };
        let (homometric, nontrivial) = match (&sum, &mirrored) {
            (Some(a), Some(b)) => (pointset::homometric(a, b)?, !pointset::trivially_homometric(a, b)?),
            _ => (false, false),
        };
        Ok(IrregularExample {
            name,
            sum_lattice_convex: convex(&sum)?,
            mirrored_sum_lattice_convex: convex(&mirrored)?,
            s_intrinsically_convex: pointset::intrinsically_lattice_convex(&s)?,
            t_intrinsically_convex: pointset::intrinsically_lattice_convex(&t)?,
            homometric,
            nontrivial,
            direct,
            sum,
            s,
            t,
        })
    }
}

pub fn irregular_examples() -> Result<Vec<IrregularExample>, Error> {
    let line_s = PointSet::from_ints_1d(&[0, 1, 4, 5]);
    let line_t = PointSet::from_ints_1d(&[0, 2, 8, 10]);
    let mut s3 = Vec::new();
    for x in [0, 2] {
        for (y, z) in [(0, 0), (1, -1), (2, 1)] {
            s3.push(Vector::from_ints(&[x, y, z]));
        }
    }
    s3.push(Vector::from_ints(&[4, 1, 0]));
    let mut t3 = Vec::new();
    for x in [0, 1] {
        for (y, z) in [(0, 0), (1, 0), (1, 1)] {
            t3.push(Vector::from_ints(&[x, y, z]));
        }
    }
    let mut out = vec![
        IrregularExample::analyze("line", line_s, line_t)?,
        IrregularExample::analyze("space", PointSet::new(s3)?, PointSet::new(t3)?)?,
    ];
    for (name, t) in ["plane-skew", "plane-box"].into_iter().zip(irregular_planar_tiles()) {
        let s = search_irregular_partner(&t, PLANAR_PARTNER_MAX)?.ok_or_else(|| Error::InvalidParameters(format!("no partner for {name}")))?;
        out.push(IrregularExample::analyze(name, s, t)?);
    }
    Ok(out)
}

const PLANAR_PARTNER_MAX: usize = 8;

/// The two planar tiles with irregular partners, the first not lattice-convex
/// for any lattice and the second `Z^2`-convex. Their partners `S` come from
/// [`search_irregular_partner`].
pub fn irregular_planar_tiles() -> [PointSet; 2] {
    [
        PointSet::from_ints(&[&[0, 0], &[1, 0], &[2, 1], &[1, 2]]),
        PointSet::from_ints(&[&[0, 0], &[1, 0], &[2, 0], &[0, 1], &[1, 1], &[2, 1]]),
    ]
}

/// Depth-first search for `S ∋ o` with at most `max_points` points such
/// that `S ⊕ T` is direct and `Z^d`-convex while `S` is full-dimensional and
/// not lattice-convex for any lattice. A nonconvex union is completed by
/// covering one missing hull point with each possible translate of `T`; a
/// convex union is grown by a translate touching it.
pub fn search_irregular_partner(t: &PointSet, max_points: usize) -> Result<Option<PointSet>, Error> {
    struct Search<'a> {
        t: &'a PointSet,
        zd: Lattice,
        max_points: usize,
        seen: BTreeSet<PointSet>,
    }

    impl Search<'_> {
        fn place(&self, s: &Vector, union: &BTreeSet<Vector>) -> Option<Vec<Vector>> {
            let placed: Vec<Vector> = self.t.iter().map(|x| s + x).collect();
            placed.iter().all(|x| !union.contains(x)).then_some(placed)
        }

        fn visit(&mut self, s: &mut Vec<Vector>, union: &mut BTreeSet<Vector>) -> Result<Option<PointSet>, Error> {
            let set = PointSet::new(s.clone())?;
            if !self.seen.insert(set.normalized()) {
                return Ok(None);
            }
            let u = PointSet::new(union.iter().cloned().collect())?;
            let gap = if u.is_full_dimensional() { pointset::lattice_convexity_gap(&u, &self.zd)? } else { None };
            let candidates: Vec<Vector> = match gap {
                None => {
                    if set.is_full_dimensional() && !pointset::intrinsically_lattice_convex(&set)? {
                        return Ok(Some(set.normalized()));
                    }
                    let mut c = BTreeSet::new();
                    for x in union.iter() {
                        for step in neighbourhood(x.dim()) {
                            for y in self.t.iter() {
                                c.insert(&(x + &step) - y);
                            }
                        }
                    }
                    c.into_iter().collect()
                }
                Some(g) => self.t.iter().map(|y| &g - y).collect(),
            };
            if s.len() >= self.max_points {
                return Ok(None);
            }
            for c in candidates {
                let Some(placed) = self.place(&c, union) else { continue };
                s.push(c);
                union.extend(placed.iter().cloned());
                let found = self.visit(s, union)?;
                for x in &placed {
                    union.remove(x);
                }
                s.pop();
                if found.is_some() {
                    return Ok(found);
                }
            }
            Ok(None)
        }
    }

    fn neighbourhood(d: usize) -> Vec<Vector> {
        let mut out = vec![Vec::new()];
        for _ in 0..d {
            out = out.into_iter().flat_map(|p: Vec<i64>| (-1..=1).map(move |x| [p.clone(), vec![x]].concat())).collect();
        }
        out.iter().map(|p| Vector::from_ints(p)).collect()
    }

    let d = t.dim();
    let mut search = Search { t, zd: Lattice::integer(d), max_points, seen: BTreeSet::new() };
    let mut s = vec![Vector::zeros(d)];
    let mut union: BTreeSet<Vector> = t.iter().cloned().collect();
    search.visit(&mut s, &mut union)
}

/// The truncated-cube `S` of the sufficient-condition construction: with
/// `u_1..u_d` linearly independent in `L*` and `b = u_{d+1}` not parallel to
/// any of them, `P = {x : |<u_i, x>| <= 1, <b, x> <= h(C, b) - eps}` and
/// `S = (k P) ∩ L`, where `k` is `scale` times the least factor making
/// `k P` an `L`-polytope. Every facet of `conv(S)` then has an outer normal
/// in `{±u_1, .., ±u_d, b}`.
pub fn build_truncated_cube_s(u_list: &[Vector], eps: &Rational, scale: u64, l: &Lattice) -> Result<PointSet, Error> {
    Ok(truncated_cube(u_list, eps, scale, l)?.lattice_points(l))
}

/// The `L`-polytope `k P` behind [`build_truncated_cube_s`].
pub fn truncated_cube(u_list: &[Vector], eps: &Rational, scale: u64, l: &Lattice) -> Result<Polytope, Error> {
    let d = l.dim();
    if u_list.len() != d + 1 || scale == 0 {
        return Err(Error::InvalidParameters(format!("need {} directions and a positive scale", d + 1)));
    }
    if let Some(u) = u_list.iter().find(|u| !l.dual().contains(u)) {
        return Err(Error::NotInLattice(u.clone()));
    }
    let base = Matrix::from_rows(&u_list[..d]);
    if base.det().is_zero() {
        return Err(Error::InvalidParameters("u_1..u_d are linearly dependent".into()));
    }
    let b = &u_list[d];
    // b in the basis u_1..u_d; h(C, b) is the l1 norm of these coefficients.
    let coeffs = base.transpose().solve(b)?;
    if coeffs.iter().filter(|c| !c.is_zero()).count() < 2 {
        return Err(Error::InvalidParameters("b is parallel to one of u_1..u_d".into()));
    }
    let h: Rational = coeffs.iter().map(|c| c.abs()).sum();
    if !eps.is_positive() || *eps >= h {
        return Err(Error::InvalidParameters("eps must lie in (0, h(C, b))".into()));
    }
    let mut rows: Vec<(Vector, Rational)> = Vec::new();
    for u in &u_list[..d] {
        rows.push((u.clone(), Rational::one()));
        rows.push((-u, Rational::one()));
    }
    rows.push((b.clone(), &h - eps));
    let vertices = vertex_enumeration(&rows, d)?;
    let coords: Vec<Vector> = vertices.iter().map(|v| l.coordinates(v)).collect();
    let k = Rational::from_integer(lcm_of_denominators(coords.iter().flat_map(|c| c.iter())) * BigInt::from(scale));
    let scaled: Vec<Vector> = vertices.iter().map(|v| v.scale(&k)).collect();
    Polytope::hull(&scaled)
}

/// Vertices of the bounded polyhedron `{x : <a, x> <= c}` by solving every
/// `d`-subset of the constraints.
pub fn vertex_enumeration(rows: &[(Vector, Rational)], d: usize) -> Result<Vec<Vector>, Error> {
    let mut out = Vec::new();
    let mut pick = Vec::new();
    fn rec(rows: &[(Vector, Rational)], d: usize, start: usize, pick: &mut Vec<usize>, out: &mut Vec<Vector>) {
        if pick.len() == d {
            let a = Matrix::from_rows(&pick.iter().map(|&i| rows[i].0.clone()).collect::<Vec<_>>());
            let c = Vector::new(pick.iter().map(|&i| rows[i].1.clone()).collect());
            if let Ok(x) = a.solve(&c) {
                if rows.iter().all(|(r, b)| r.dot(&x) <= *b) {
                    out.push(x);
                }
            }
            return;
        }
        for i in start..rows.len() {
            pick.push(i);
            rec(rows, d, i + 1, pick, out);
            pick.pop();
        }
    }
    rec(rows, d, 0, &mut pick, &mut out);
    out.sort();
    out.dedup();
    if out.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(out)
}

/// Whether some three vectors of the set are pairwise nonparallel.
pub fn has_three_directions(vectors: &[Vector]) -> bool {
    let mut dirs: Vec<Vector> = Vec::new();
    for v in vectors {
        let p = v.primitive_integer();
        let canonical = if p.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative()) { -p } else { p };
        if !dirs.contains(&canonical) {
            dirs.push(canonical);
        }
    }
    dirs.len() >= 3
}

/// Every sublattice `L ⊆ Z^2` of index `|T|` for which `(Z^2, L, T)` is a
/// tiling and `W(T, L)` has three pairwise nonparallel vectors. The search
/// is exhaustive, since a tiling lattice must have index `|T|`.
pub fn find_lattice_with_three_thin_directions(t: &PointSet) -> Result<Vec<(Lattice, WSetResult)>, Error> {
    if t.dim() != 2 {
        return Err(Error::UnsupportedDimension(t.dim()));
    }
    let mut out = Vec::new();
    for (l, h, s) in sublattices_of_integer_lattice_2d(t.len() as u64) {
        let lat = Lattice::hnf_2d(l as i64, h as i64, s as i64)?;
        let Ok(tiling) = Tiling::verify(Lattice::integer(2), lat.clone(), t.clone()) else { continue };
        let w = tiling::w_set(tiling.t(), tiling.l())?;
        if has_three_directions(&w.vectors) {
            out.push((lat, w));
        }
    }
    Ok(out)
}
