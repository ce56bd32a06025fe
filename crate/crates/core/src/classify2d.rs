//! Computer enumeration of planar tiles `T` with three thin directions.
//!
//! For every determinant `L` in range and every HNF basis `(l, 0), (s, h)`
//! whose half-cell triangle `Δ` has the right lattice width, all slab tiles
//! `T_q` are built and filtered by dimension, by the width along
//! `b_1* + b_2*` and by lattice width. Survivors are then grouped up to
//! affine unimodular maps.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::constructions::find_lattice_with_three_thin_directions;
use crate::lattice::Lattice;
use crate::linalg::{int, Matrix, Rational, Vector};
use crate::pointset::{self, PointSet};
use crate::tiling::{self, TqSystem, WSetResult};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub det_min: u64,
    pub det_max: u64,
    pub include_centrally_symmetric: bool,
    pub include_width_one_case: bool,
    pub workers: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { det_min: 7, det_max: 18, include_centrally_symmetric: false, include_width_one_case: false, workers: 1 }
    }
}

/// The HNF basis `(l, 0), (s, h)` of a sublattice of `Z^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Base {
    pub l: i64,
    pub h: i64,
    pub s: i64,
}

impl Base {
    pub fn det(&self) -> i64 {
        self.l * self.h
    }

    pub fn matrix(&self) -> Matrix {
        Matrix::from_int_columns(&[&[self.l, 0], &[self.s, self.h]])
    }

    pub fn lattice(&self) -> Lattice {
        Lattice::hnf_2d(self.l, self.h, self.s).expect("positive diagonal")
    }

    /// `Δ = conv{(0,0), (l,0), (s,h)}`.
    pub fn delta(&self) -> PointSet {
        PointSet::from_ints(&[&[0, 0], &[self.l, 0], &[self.s, self.h]])
    }

    /// `b_1* + b_2*`.
    pub fn diagonal(&self) -> Vector {
        let d = self.lattice().dual_basis_matrix();
        &d.column(0) + &d.column(1)
    }
}

pub fn delta_width(base: &Base) -> Rational {
    tiling::lattice_width_of_set(&base.delta(), &Lattice::integer(2)).expect("full-dimensional triangle").0
}

/// Bases `(l, 0), (s, h)` with `l h = det`, `h >= 3` and `0 <= s < h` whose
/// triangle `Δ` has lattice width 3 (any `det` in 7..=18) or 4 (`det` in
/// 12..=16). These are bases, not distinct lattices.
pub fn search_bases_with_det(det: u64) -> Vec<Base> {
    let det = det as i64;
    let mut out = Vec::new();
    for l in (1..=det).filter(|l| det % l == 0) {
        let h = det / l;
        if h < 3 {
            continue;
        }
        for s in 0..h {
            let base = Base { l, h, s };
            let w = delta_width(&base);
            if ((12..=16).contains(&det) && w == int(4)) || ((7..=18).contains(&det) && w == int(3)) {
                out.push(base);
            }
        }
    }
    out
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BaseStats {
    pub q_tried: u64,
    pub dimension_rejections: u64,
    pub diagonal_rejections: u64,
    pub width_rejections: u64,
    pub survivors: u64,
}

impl BaseStats {
    fn add(&mut self, o: &BaseStats) {
        self.q_tried += o.q_tried;
        self.dimension_rejections += o.dimension_rejections;
        self.diagonal_rejections += o.diagonal_rejections;
        self.width_rejections += o.width_rejections;
        self.survivors += o.survivors;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Survivor {
    pub base: Base,
    pub q: Vec<i64>,
    pub tile: PointSet,
    pub diagonal_width: Rational,
    pub lattice_width: Rational,
}

/// Runs the three filters over every `T_q` of one base.
pub fn search_tiles_with_base(base: Base) -> (Vec<Survivor>, BaseStats) {
    let sys = TqSystem::new(&base.matrix()).expect("positive determinant");
    let diagonal = base.diagonal();
    let z2 = Lattice::integer(2);
    let mut stats = BaseStats::default();
    let mut out = Vec::new();
    for q in sys.offsets() {
        stats.q_tried += 1;
        let tile = sys.tile(&q);
        if tile.is_empty() || !tile.is_full_dimensional() {
            stats.dimension_rejections += 1;
            continue;
        }
        let diagonal_width = tiling::width(&tile, &diagonal);
        if diagonal_width >= Rational::one() {
            stats.diagonal_rejections += 1;
            continue;
        }
        let (lattice_width, _) = tiling::lattice_width_of_set(&tile, &z2).expect("full-dimensional tile");
        if lattice_width <= Rational::one() {
            stats.width_rejections += 1;
            continue;
        }
        stats.survivors += 1;
        out.push(Survivor { base, q, tile, diagonal_width, lattice_width });
    }
    (out, stats)
}

/// An affine unimodular map `x -> U x + t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnimodularMap {
    pub matrix: Matrix,
    pub translation: Vector,
}

impl UnimodularMap {
    pub fn apply(&self, k: &PointSet) -> PointSet {
        k.linear_image(&self.matrix).translate(&self.translation)
    }
}

/// A map `U` with `det U = ±1` and `U(a) + t = b`, if one exists. The first
/// point of `a` and two further points spanning the plane with it are
/// anchored; every ordered choice of three images in `b` is tried.
pub fn unimodular_equivalent(a: &PointSet, b: &PointSet) -> Option<UnimodularMap> {
    if a.len() != b.len() || a.dim() != 2 || b.dim() != 2 || !a.is_full_dimensional() || !b.is_full_dimensional() {
        return None;
    }
    let pts = a.points();
    let a0 = &pts[0];
    let (i1, i2) = (1..pts.len())
        .flat_map(|i| (i + 1..pts.len()).map(move |j| (i, j)))
        .find(|&(i, j)| !Matrix::from_columns(&[&pts[i] - a0, &pts[j] - a0]).det().is_zero())?;
    let src = Matrix::from_columns(&[&pts[i1] - a0, &pts[i2] - a0]);
    let src_inv = src.inverse().ok()?;
    let bp = b.points();
    for b0 in bp {
        for b1 in bp {
            for b2 in bp {
                if b1 == b0 || b2 == b0 || b1 == b2 {
                    continue;
                }
                let u = Matrix::from_columns(&[b1 - b0, b2 - b0]).mul(&src_inv);
                if !u.is_integral() || u.det().abs() != Rational::one() {
                    continue;
                }
                let translation = b0 - &u.mul_vec(a0);
                let map = UnimodularMap { matrix: u, translation };
                if map.apply(a) == *b {
                    return Some(map);
                }
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassMember {
    pub base: Base,
    pub q: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TileClass {
    /// First survivor of the class, translated so its lexmin is the origin.
    pub representative: PointSet,
    pub base: Base,
    pub q: Vec<i64>,
    pub diagonal_width: Rational,
    pub lattice_width: Rational,
    pub members: Vec<ClassMember>,
    pub centrally_symmetric: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseReport {
    pub det: u64,
    pub base: Base,
    pub delta_width: Rational,
    pub stats: BaseStats,
}

/// A lattice making `W` of a `{0..k} × {0,1}` tile contain three directions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeDirectionLattice {
    pub k: i64,
    pub tile: PointSet,
    pub lattice: Lattice,
    pub w: Vec<Vector>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WidthOneTile {
    pub k: i64,
    pub l: i64,
    pub tile: PointSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub config: SearchConfig,
    pub bases: Vec<BaseReport>,
    pub totals: BaseStats,
    pub classes: Vec<TileClass>,
    pub three_direction_lattices: Vec<ThreeDirectionLattice>,
    pub width_one_family: Vec<WidthOneTile>,
}

impl ClassificationReport {
    pub fn noncentral_classes(&self) -> impl Iterator<Item = &TileClass> {
        self.classes.iter().filter(|c| !c.centrally_symmetric)
    }

    pub fn central_classes(&self) -> impl Iterator<Item = &TileClass> {
        self.classes.iter().filter(|c| c.centrally_symmetric)
    }
}

/// `{o, ±e_1, ±e_2, ±(e_1 + e_2)}`.
pub fn cross7() -> PointSet {
    PointSet::from_ints(&[&[0, 0], &[1, 0], &[-1, 0], &[0, 1], &[0, -1], &[1, 1], &[-1, -1]])
}

/// `{0..k} × {0} ∪ {0..l} × {1}`.
pub fn width_one_tile(k: i64, l: i64) -> PointSet {
    let mut pts: Vec<Vector> = (0..=k).map(|x| Vector::from_ints(&[x, 0])).collect();
    pts.extend((0..=l).map(|x| Vector::from_ints(&[x, 1])));
    PointSet::new(pts).expect("nonempty")
}

const REMARK_K_MAX: i64 = 4;
const WIDTH_ONE_MAX: i64 = 3;

pub fn classify(config: &SearchConfig) -> Result<ClassificationReport, Error> {
    if config.det_min == 0 || config.det_min > config.det_max {
        return Err(Error::InvalidParameters("det range must be a nonempty interval of positive integers".into()));
    }
    if config.workers == 0 {
        return Err(Error::InvalidParameters("workers must be positive".into()));
    }
    let cases: Vec<(u64, Base)> =
        (config.det_min..=config.det_max).flat_map(|det| search_bases_with_det(det).into_iter().map(move |b| (det, b))).collect();
    let run = |idx: &[usize]| -> Vec<(usize, Vec<Survivor>, BaseStats)> {
        idx.iter()
            .map(|&i| {
                let (s, st) = search_tiles_with_base(cases[i].1);
                (i, s, st)
            })
            .collect()
    };
    let mut results = if config.workers <= 1 {
        run(&(0..cases.len()).collect::<Vec<_>>())
    } else {
        let chunks: Vec<Vec<usize>> =
            (0..config.workers).map(|w| (w..cases.len()).step_by(config.workers).collect()).collect();
        std::thread::scope(|scope| {
            let handles: Vec<_> = chunks.iter().map(|c| scope.spawn(|| run(c))).collect();
            handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect::<Vec<_>>()
        })
    };
    results.sort_by_key(|r| r.0);

    let mut bases = Vec::new();
    let mut totals = BaseStats::default();
    let mut classes: Vec<TileClass> = Vec::new();
    for (i, survivors, stats) in results {
        let (det, base) = cases[i];
        totals.add(&stats);
        bases.push(BaseReport { det, base, delta_width: delta_width(&base), stats });
        for sv in survivors {
            let member = ClassMember { base: sv.base, q: sv.q.clone() };
            if let Some(c) = classes.iter_mut().find(|c| unimodular_equivalent(&c.representative, &sv.tile).is_some()) {
                c.members.push(member);
                continue;
            }
            classes.push(TileClass {
                representative: sv.tile.normalized(),
                centrally_symmetric: pointset::centrally_symmetric(&sv.tile)?,
                base: sv.base,
                q: sv.q,
                diagonal_width: sv.diagonal_width,
                lattice_width: sv.lattice_width,
                members: vec![member],
            });
        }
    }

    let mut three_direction_lattices = Vec::new();
    if config.include_centrally_symmetric {
        for k in 1..=REMARK_K_MAX {
            let tile = width_one_tile(k, k);
            for (lattice, w) in find_lattice_with_three_thin_directions(&tile)? {
                let WSetResult { vectors, .. } = w;
                three_direction_lattices.push(ThreeDirectionLattice { k, tile: tile.clone(), lattice, w: vectors });
            }
        }
    }
    let mut width_one_family = Vec::new();
    if config.include_width_one_case {
        for k in 0..=WIDTH_ONE_MAX {
            for l in 0..=WIDTH_ONE_MAX {
                width_one_family.push(WidthOneTile { k, l, tile: width_one_tile(k, l) });
            }
        }
    }
    Ok(ClassificationReport { config: config.clone(), bases, totals, classes, three_direction_lattices, width_one_family })
}

/// `gcd(h, s)` with `gcd(h, 0) = h`, the content of the first adjugate row.
pub fn first_content(base: &Base) -> i64 {
    base.h.gcd(&base.s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bases_have_tall_hnf() {
        for det in 7..=18 {
            for b in search_bases_with_det(det) {
                assert!(b.h >= 3);
                assert_eq!(b.det() as u64, det);
                let w = delta_width(&b);
                assert!(w == int(3) || w == int(4));
            }
        }
        assert!(search_bases_with_det(7).iter().all(|b| delta_width(b) == int(3)));
    }

    #[test]
    fn first_content_of_zero_shift() {
        assert_eq!(first_content(&Base { l: 1, h: 7, s: 0 }), 7);
        assert_eq!(first_content(&Base { l: 2, h: 6, s: 4 }), 2);
    }

    #[test]
    fn survivors_tile_the_plane() {
        let base = Base { l: 1, h: 7, s: 3 };
        let (survivors, stats) = search_tiles_with_base(base);
        assert!(!survivors.is_empty());
        assert_eq!(stats.q_tried, 7 * 7);
        for sv in &survivors {
            crate::tiling::Tiling::verify(Lattice::integer(2), base.lattice(), sv.tile.clone()).unwrap();
            assert!(unimodular_equivalent(&sv.tile, &cross7()).is_some());
        }
    }

    #[test]
    fn unimodular_maps() {
        let c = cross7();
        let shear = Matrix::from_int_columns(&[&[1, 1], &[0, 1]]);
        let img = c.linear_image(&shear).translate(&Vector::from_ints(&[3, -2]));
        let map = unimodular_equivalent(&c, &img).unwrap();
        assert_eq!(map.apply(&c), img);
        let tri = PointSet::from_ints(&[&[0, 0], &[1, 0], &[0, 1]]);
        let big = PointSet::from_ints(&[&[0, 0], &[2, 0], &[0, 1]]);
        assert!(unimodular_equivalent(&tri, &big).is_none());
        let rot = Matrix::from_int_columns(&[&[0, -1], &[1, 0]]);
        let t = PointSet::from_ints(&[&[0, 0], &[1, 0], &[2, 0], &[0, 1], &[1, 1]]);
        assert!(unimodular_equivalent(&t, &t.linear_image(&rot)).is_some());
    }
}
