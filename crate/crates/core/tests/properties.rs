use std::collections::BTreeSet;

use homometry::lattice::Lattice;
use homometry::linalg::{self, int, Matrix, Vector};
use homometry::pointset::{self, PointSet};
use homometry::polytope::Polytope;
use homometry::tiling::{self, Tiling};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn points(d: usize, max: usize, r: i64) -> impl Strategy<Value = PointSet> {
    prop::collection::vec(prop::collection::vec(-r..=r, d), 1..=max)
        .prop_map(|ps| PointSet::new(ps.iter().map(|p| Vector::from_ints(p)).collect()).unwrap())
}

fn full_dim_points(d: usize, max: usize, r: i64) -> impl Strategy<Value = PointSet> {
    points(d, max, r).prop_filter("full-dimensional", |k| k.is_full_dimensional())
}

fn unimodular_2d() -> impl Strategy<Value = Matrix> {
    prop::collection::vec((0..4usize, -2i64..=2), 0..5).prop_map(|ops| {
        let mut m = Matrix::identity(2);
        for (op, c) in ops {
            let e = match op {
                0 => Matrix::from_int_rows(&[&[1, c], &[0, 1]]),
                1 => Matrix::from_int_rows(&[&[1, 0], &[c, 1]]),
                2 => Matrix::from_int_rows(&[&[0, 1], &[1, 0]]),
                _ => Matrix::from_int_rows(&[&[-1, 0], &[0, 1]]),
            };
            m = m.mul(&e);
        }
        m
    })
}

fn sublattice_2d() -> impl Strategy<Value = Lattice> {
    (1i64..=5, 1i64..=5, 0i64..5).prop_map(|(l, h, s)| Lattice::hnf_2d(l, h, s % l).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn covariogram_is_even_and_sums_to_square(k in points(2, 12, 4)) {
        let g = pointset::covariogram(&k).unwrap();
        prop_assert_eq!(g.value(&Vector::zeros(2)), k.len());
        let total: usize = g.entries().values().sum();
        prop_assert_eq!(total, k.len() * k.len());
        for (u, v) in g.entries() {
            prop_assert_eq!(g.value(&-u), *v);
        }
    }

    #[test]
    fn reflections_and_translates_are_homometric(k in points(3, 10, 3), t in prop::collection::vec(-5i64..=5, 3)) {
        let t = Vector::from_ints(&t);
        let moved = k.translate(&t);
        let reflected = k.negate().translate(&t);
        prop_assert!(pointset::homometric(&k, &moved).unwrap());
        prop_assert!(pointset::homometric(&k, &reflected).unwrap());
        prop_assert!(pointset::trivially_homometric(&k, &reflected).unwrap());
    }

    #[test]
    fn direct_sums_are_homometric_to_mirrored_sums(s in points(2, 6, 4), t in points(2, 5, 2)) {
        if pointset::is_direct_sum(&s, &t) {
            let a = pointset::direct_sum(&s, &t).unwrap();
            let b = pointset::direct_sum(&s, &t.negate()).unwrap();
            prop_assert_eq!(a.len(), s.len() * t.len());
            prop_assert!(pointset::homometric(&a, &b).unwrap());
        }
    }

    #[test]
    fn lattice_convexity_is_unimodular_invariant(k in full_dim_points(2, 10, 3), u in unimodular_2d()) {
        let z2 = Lattice::integer(2);
        let image = k.linear_image(&u);
        prop_assert_eq!(pointset::is_lattice_convex(&k, &z2).unwrap(), pointset::is_lattice_convex(&image, &z2).unwrap());
        let hull_points = k.hull().unwrap().lattice_points(&z2);
        prop_assert!(pointset::is_lattice_convex(&hull_points, &z2).unwrap());
    }

    #[test]
    fn hull_contains_points_and_vertices_are_points(k in full_dim_points(3, 12, 3)) {
        let p = k.hull().unwrap();
        for x in k.iter() {
            prop_assert!(p.contains(x));
        }
        for v in p.vertices() {
            prop_assert!(k.contains(v));
        }
        for f in p.facets() {
            prop_assert!(p.facet_vertices(f).len() >= 3);
        }
    }

    #[test]
    fn width_is_support_sum(k in full_dim_points(2, 10, 4), u in prop::collection::vec(-3i64..=3, 2)) {
        let u = Vector::from_ints(&u);
        let p = k.hull().unwrap();
        prop_assert_eq!(tiling::width(&k, &u), &p.support(&u) + &p.support(&-&u));
    }

    #[test]
    fn lattice_width_matches_bounded_scan(k in full_dim_points(2, 8, 3), l in sublattice_2d()) {
        let (w, u) = tiling::lattice_width_of_set(&k, &l).unwrap();
        prop_assert!(l.dual().contains(&u));
        prop_assert_eq!(tiling::width(&k, &u), w.clone());
        let dual = l.dual();
        for a in -12i64..=12 {
            for b in -12i64..=12 {
                if a == 0 && b == 0 {
                    continue;
                }
                let v = dual.point(&Vector::from_ints(&[a, b]));
                prop_assert!(tiling::width(&k, &v) >= w);
            }
        }
    }

    #[test]
    fn dual_of_dual_is_identity(l in sublattice_2d(), u in unimodular_2d()) {
        let l = l.transform(&u).unwrap();
        prop_assert_eq!(l.dual().dual(), l.clone());
        prop_assert_eq!(&l.det() * &l.dual().det(), int(1));
    }

    #[test]
    fn hnf_is_a_unimodular_column_transform(rows in prop::collection::vec(prop::collection::vec(-6i64..=6, 3), 3)) {
        let a = Matrix::from_int_rows(&rows.iter().map(|r| r.as_slice()).collect::<Vec<_>>());
        prop_assume!(!a.det().is_zero());
        let (h, u) = linalg::hnf(&a).unwrap();
        prop_assert_eq!(a.mul(&u), h.clone());
        prop_assert_eq!(u.det().abs(), int(1));
        for i in 0..3 {
            prop_assert!(h.get(i, i) > &int(0));
            for j in i + 1..3 {
                prop_assert_eq!(h.get(i, j), &int(0));
            }
            for j in 0..i {
                prop_assert!(h.get(i, j) >= &int(0) && h.get(i, j) < h.get(i, i));
            }
        }
    }

    #[test]
    fn dirichlet_tiles_are_tilings(l in sublattice_2d(), u in unimodular_2d(), v in prop::collection::vec((-7i64..=7, 1i64..=5), 2)) {
        let basis = l.transform(&u).unwrap().basis().clone();
        let v = Vector::new(v.iter().map(|&(n, d)| linalg::frac(n, d)).collect());
        let t = tiling::dirichlet_tile(&Lattice::integer(2), &basis, &v).unwrap();
        let lat = Lattice::new(basis).unwrap();
        prop_assert_eq!(int(t.len() as i64), lat.det());
        let residues: BTreeSet<Vector> = t.iter().map(|x| lat.canonical_residue(x)).collect();
        prop_assert_eq!(residues.len(), t.len());
    }

    #[test]
    fn lattice_points_match_box_scan(k in full_dim_points(3, 8, 3), l in sublattice_2d()) {
        let p: Polytope = k.hull().unwrap();
        let z3 = Lattice::integer(3);
        let fast = p.lattice_points(&z3);
        let mut scan = Vec::new();
        for x in -3i64..=3 {
            for y in -3i64..=3 {
                for z in -3i64..=3 {
                    let q = Vector::from_ints(&[x, y, z]);
                    if p.contains(&q) {
                        scan.push(q);
                    }
                }
            }
        }
        let scanned = PointSet::new(scan).unwrap();
        prop_assert_eq!(fast.points(), scanned.points());
        let planar = PointSet::new(k.iter().map(|q| q.drop_coord(2)).collect()).unwrap();
        if planar.is_full_dimensional() {
            let pp = planar.hull().unwrap();
            let got = pp.lattice_points(&l);
            for x in -3i64..=3 {
                for y in -3i64..=3 {
                    let q = Vector::from_ints(&[x, y]);
                    prop_assert_eq!(got.contains(&q), pp.contains(&q) && l.contains(&q));
                }
            }
        }
    }
}

#[test]
fn classification_is_independent_of_worker_count() {
    use homometry::classify2d::{classify, SearchConfig};
    let one = classify(&SearchConfig { det_min: 7, det_max: 12, ..Default::default() }).unwrap();
    let four = classify(&SearchConfig { det_min: 7, det_max: 12, workers: 4, ..Default::default() }).unwrap();
    assert_eq!(one.classes, four.classes);
    assert_eq!(one.bases, four.bases);
}

#[test]
fn verified_tilings_reject_overlaps() {
    let t = PointSet::from_ints(&[&[0, 0], &[1, 0], &[2, 0], &[0, 1], &[1, 1]]);
    let bad = Lattice::hnf_2d(5, 1, 0).unwrap();
    assert!(Tiling::verify(Lattice::integer(2), bad, t).is_err());
}
