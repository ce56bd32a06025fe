//! Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
//! exact; the only tolerances are the wall-clock limits below.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use homometry::classify2d::{self, SearchConfig};
use homometry::constructions::{self, GeneralizedVariant};
use homometry::lattice::Lattice;
use homometry::linalg::{frac, int, Matrix, Rational, Vector};
use homometry::pointset::{self, PointSet};
use homometry::polytope::Polytope;
use homometry::tiling::{self, Tiling};
use num_traits::{Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const CLASSIFY_LIMIT: Duration = Duration::from_secs(300);
const HOMOMETRIC_SUITE_LIMIT: Duration = Duration::from_secs(30);
const ABC_INSTANCES: usize = 200;
const ORACLE_INSTANCES: usize = 500;
const SEED: u64 = 0x5eed_2d;
/// Instances whose `conv(S)` exceeds this many fundamental cells are skipped.
const MAX_S_VOLUME: i64 = 150;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err(e: homometry::Error) -> String {
    e.to_string()
}

fn classification() -> Outcome {
    let start = Instant::now();
    let report = classify2d::classify(&SearchConfig::default()).map_err(err)?;
    let elapsed = start.elapsed();
    ensure(elapsed <= CLASSIFY_LIMIT, format!("took {elapsed:?}"))?;
    let noncentral = report.noncentral_classes().count();
    ensure(noncentral == 0, format!("{noncentral} noncentrally symmetric classes"))?;
    ensure(report.classes.len() == 1, format!("{} classes", report.classes.len()))?;
    let rep = &report.classes[0].representative;
    ensure(classify2d::unimodular_equivalent(rep, &classify2d::cross7()).is_some(), "class is not the 7-point cross")?;
    Ok(format!(
        "{} bases, {} q tried, {} survivors, 1 class equivalent to {{o, ±e1, ±e2, ±(e1+e2)}}, {:.2?}",
        report.bases.len(),
        report.totals.q_tried,
        report.totals.survivors,
        elapsed
    ))
}

fn w_set_cardinality() -> Outcome {
    let t = constructions::planar_tiling(2).map_err(err)?;
    let w = tiling::w_set(t.t(), t.l()).map_err(err)?;
    ensure(w.len() == 6, format!("|W| = {}", w.len()))?;
    Ok("|W(T, L)| = 6 for k = 2".into())
}

fn suite_tilings() -> Result<Vec<(String, constructions::HomometricPair)>, String> {
    let mut out = Vec::new();
    for k in 1..=5 {
        out.push((format!("planar k={k}"), constructions::planar_family(k, None).map_err(err)?));
    }
    for d in 2..=4 {
        for k in 1..=3 {
            let p = constructions::generalized_family(d, k, GeneralizedVariant::Simplex).map_err(err)?;
            out.push((format!("generalized d={d} k={k}"), p));
        }
    }
    Ok(out)
}

fn homometric_suite() -> Outcome {
    let start = Instant::now();
    let pairs = suite_tilings()?;
    for (name, p) in &pairs {
        let g1 = pointset::covariogram(&p.sum).map_err(err)?;
        let g2 = pointset::covariogram(&p.mirrored_sum).map_err(err)?;
        ensure(g1 == g2, format!("{name}: covariograms differ"))?;
        ensure(!pointset::trivially_homometric(&p.sum, &p.mirrored_sum).map_err(err)?, format!("{name}: trivially homometric"))?;
        let m = p.tiling.m();
        ensure(pointset::is_lattice_convex(&p.sum, m).map_err(err)?, format!("{name}: S ⊕ T not M-convex"))?;
        ensure(pointset::is_lattice_convex(&p.mirrored_sum, m).map_err(err)?, format!("{name}: S ⊕ (-T) not M-convex"))?;
    }
    let fig = constructions::generalized_family(3, 4, GeneralizedVariant::Simplex).map_err(err)?;
    let expected = PointSet::from_ints(&[&[0, 0, 0], &[5, -1, 0], &[4, 1, -1], &[4, 0, 1]]);
    ensure(fig.s == expected, format!("d=3 k=4 gives S = {:?}", fig.s))?;
    let elapsed = start.elapsed();
    ensure(elapsed <= HOMOMETRIC_SUITE_LIMIT, format!("took {elapsed:?}"))?;
    Ok(format!("{} pairs nontrivially homometric and M-convex, d=3 k=4 S reproduced, {:.2?}", pairs.len(), elapsed))
}

fn random_unimodular(rng: &mut StdRng, d: usize) -> Matrix {
    let mut m = Matrix::identity(d);
    for _ in 0..rng.gen_range(0..4) {
        let i = rng.gen_range(0..d);
        let j = (i + rng.gen_range(1..d)) % d;
        let c = rng.gen_range(-1i64..=1);
        let mut e = Matrix::identity(d);
        e.set(i, j, int(c));
        m = m.mul(&e);
    }
    m
}

fn random_dirichlet_tiling(rng: &mut StdRng, d: usize) -> Option<Tiling> {
    let mut cols = Vec::new();
    for j in 0..d {
        let mut c = vec![0i64; d];
        c[j] = rng.gen_range(1..=if d == 2 { 5 } else { 3 });
        for x in c.iter_mut().take(j) {
            *x = rng.gen_range(0..3);
        }
        cols.push(Vector::from_ints(&c));
    }
    let basis = random_unimodular(rng, d).mul(&Matrix::from_columns(&cols));
    if basis.det().abs() < int(3) {
        return None;
    }
    let v = Vector::new((0..d).map(|_| frac(rng.gen_range(-9..=9), rng.gen_range(2..=5))).collect());
    let m = Lattice::integer(d);
    let t = tiling::dirichlet_tile(&m, &basis, &v).ok()?;
    if !t.is_full_dimensional() {
        return None;
    }
    Tiling::verify(m, Lattice::new(basis).ok()?, t).ok()
}

fn tiling_pool(rng: &mut StdRng) -> Result<Vec<Tiling>, String> {
    let mut pool = Vec::new();
    for k in 1..=4 {
        pool.push(constructions::planar_tiling(k).map_err(err)?);
    }
    for k in 1..=3 {
        pool.push(constructions::generalized_tiling(3, k).map_err(err)?.tiling);
    }
    let cross = classify2d::Base { l: 1, h: 7, s: 3 };
    let (survivors, _) = classify2d::search_tiles_with_base(cross);
    pool.push(Tiling::verify(Lattice::integer(2), cross.lattice(), survivors[0].tile.clone()).map_err(err)?);
    let mut tries = 0;
    while pool.len() < 24 && tries < 500 {
        tries += 1;
        let d = if tries % 2 == 0 { 2 } else { 3 };
        if let Some(t) = random_dirichlet_tiling(rng, d) {
            pool.push(t);
        }
    }
    Ok(pool)
}

fn random_dual(rng: &mut StdRng, l: &Lattice) -> Vector {
    loop {
        let c: Vec<i64> = (0..l.dim()).map(|_| rng.gen_range(-2..=2)).collect();
        if c.iter().any(|&x| x != 0) {
            return l.dual().point(&Vector::from_ints(&c));
        }
    }
}

fn abc_directions(rng: &mut StdRng, t: &Tiling, w: &[Vector]) -> Vec<Vector> {
    let d = t.dim();
    let from_w = !w.is_empty() && rng.gen_bool(0.6);
    (0..=d)
        .map(|_| if from_w { w[rng.gen_range(0..w.len())].clone() } else { random_dual(rng, t.l()) })
        .collect()
}

fn abc_suite() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED);
    let pool = tiling_pool(&mut rng)?;
    let ws: Vec<Vec<Vector>> = pool.iter().map(|t| tiling::w_set(t.t(), t.l()).map(|w| w.vectors).map_err(err)).collect::<Result<_, _>>()?;
    let (mut done, mut attempts) = (0usize, 0usize);
    let (mut a_true, mut b_true, mut c_true) = (0usize, 0usize, 0usize);
    let mut dims = [0usize; 2];
    while done < ABC_INSTANCES {
        attempts += 1;
        ensure(attempts < 50 * ABC_INSTANCES, format!("only {done} usable instances"))?;
        let want = 2 + done % 2;
        let same_dim: Vec<usize> = (0..pool.len()).filter(|&j| pool[j].dim() == want).collect();
        let i = same_dim[rng.gen_range(0..same_dim.len())];
        let t = &pool[i];
        let dirs = abc_directions(&mut rng, t, &ws[i]);
        let h_scale = frac(rng.gen_range(1..=3), 4);
        let Ok(p) = truncated_cube(&dirs, &h_scale, t.l()) else { continue };
        if p.volume() > &t.l().det() * int(MAX_S_VOLUME) {
            continue;
        }
        let s = p.lattice_points(t.l());
        if !s.is_full_dimensional() {
            continue;
        }
        let r = tiling::check_abc(&s, t).map_err(err)?;
        let c = r.c.expect("d <= 3").holds;
        ensure(!r.a.holds || r.b.holds, format!("(a) holds but (b) fails for tiling #{i}, S = {:?}", s))?;
        ensure(!r.b.holds || c, format!("(b) holds but (c) fails for tiling #{i}, S = {:?}", s))?;
        a_true += r.a.holds as usize;
        b_true += r.b.holds as usize;
        c_true += c as usize;
        dims[t.dim() - 2] += 1;
        done += 1;
    }
    ensure(a_true > 0, "no instance satisfies (a)")?;
    Ok(format!(
        "{done} instances ({} planar, {} spatial): (a) {a_true}, (b) {b_true}, (c) {c_true} true; 0 violations",
        dims[0], dims[1]
    ))
}

/// Truncated cube with `eps = h_scale * h(C, b)`.
fn truncated_cube(dirs: &[Vector], h_scale: &Rational, l: &Lattice) -> Result<Polytope, homometry::Error> {
    let d = l.dim();
    let base = Matrix::from_rows(&dirs[..d]);
    if base.det().is_zero() {
        return Err(homometry::Error::SingularMatrix);
    }
    let coeffs = base.transpose().solve(&dirs[d])?;
    let h: Rational = coeffs.iter().map(|c| c.abs()).sum();
    constructions::truncated_cube(dirs, &(&h * h_scale), 1, l)
}

fn counterexamples() -> Outcome {
    let ab = constructions::counterexample_ab(3).map_err(err)?;
    let r = tiling::check_abc(&ab.s, &ab.tiling).map_err(err)?;
    ensure(!r.a.holds && r.b.holds, format!("AB: (a) = {}, (b) = {}", r.a.holds, r.b.holds))?;
    let bc = constructions::counterexample_bc(3).map_err(err)?;
    let r = tiling::check_abc(&bc.s, &bc.tiling).map_err(err)?;
    let c = r.c.as_ref().map(|c| c.holds).unwrap_or(false);
    ensure(c && !r.b.holds, format!("BC: (c) = {c}, (b) = {}", r.b.holds))?;
    let sum = pointset::direct_sum(&bc.s, bc.tiling.t()).map_err(err)?;
    let witness = Vector::from_ints(&[3, 3, 3]);
    ensure(!sum.contains(&witness), "(3,3,3) lies in S ⊕ T")?;
    ensure(sum.hull().map_err(err)?.contains(&witness), "(3,3,3) is outside conv(S ⊕ T)")?;
    Ok("AB(3): (a) false, (b) true; BC(3): (c) true, (b) false, witness (3,3,3) in conv(S ⊕ T) \\ S ⊕ T".into())
}

fn finiteness_suite() -> Outcome {
    let mut tilings: Vec<Tiling> = suite_tilings()?.into_iter().map(|(_, p)| p.tiling).collect();
    tilings.push(constructions::planar_tiling(2).map_err(err)?);
    let mut rng = StdRng::seed_from_u64(SEED);
    tilings.extend(tiling_pool(&mut rng)?);
    let mut checked = 0;
    for t in &tilings {
        if !t.t().is_full_dimensional() {
            continue;
        }
        let f = tiling::finiteness_report(t).map_err(err)?;
        ensure(f.holds(), format!("bounds fail for T = {:?}: {:?}", t.t(), f))?;
        let p = tiling::parity_check(t).map_err(err)?;
        ensure(p.holds, format!("parity fails for T = {:?}: {:?}", t.t(), p.witness))?;
        let bound = Rational::from_integer(4.into()).pow(t.dim() as i32) / t.l().det();
        ensure(f.volume_bound == bound, "volume bound mismatch")?;
        checked += 1;
    }
    Ok(format!("{checked} tilings: |W| < 4^d, parity, vol(conv(W ∪ o)) < vol(D(T)°) <= 4^d / det L"))
}

fn irregular_catalog() -> Outcome {
    let cat = constructions::irregular_examples().map_err(err)?;
    let line = cat.iter().find(|e| e.name == "line").ok_or("missing line example")?;
    let expected = PointSet::from_ints_1d(&(0..16).collect::<Vec<_>>());
    ensure(line.sum.as_ref() == Some(&expected), "S ⊕ T != {0..15}")?;
    ensure(!line.s_intrinsically_convex && !line.t_intrinsically_convex, "a summand is lattice-convex")?;
    for name in ["plane-skew", "plane-box"] {
        let e = cat.iter().find(|e| e.name == name).ok_or("missing planar example")?;
        ensure(e.direct && e.sum_lattice_convex && !e.s_intrinsically_convex, format!("{name}: partner search result invalid"))?;
    }
    let space = cat.iter().find(|e| e.name == "space").ok_or("missing space example")?;
    ensure(space.sum_lattice_convex && space.mirrored_sum_lattice_convex, "a sum is not Z^3-convex")?;
    ensure(space.homometric && space.nontrivial, "sums are not nontrivially homometric")?;
    Ok("line: S ⊕ T = {0..15}, neither summand lattice-convex; space: both sums Z^3-convex, nontrivially homometric".into())
}

fn random_set(rng: &mut StdRng, d: usize, max: usize, r: i64) -> PointSet {
    let n = rng.gen_range(1..=max);
    PointSet::new((0..n).map(|_| Vector::from_ints(&(0..d).map(|_| rng.gen_range(-r..=r)).collect::<Vec<_>>())).collect()).unwrap()
}

fn naive_covariogram(k: &PointSet, u: &Vector) -> usize {
    k.iter().filter(|x| k.contains(&(*x - u))).count()
}

fn box_points(lo: &[i64], hi: &[i64]) -> Vec<Vector> {
    let mut out = vec![Vec::new()];
    for (a, b) in lo.iter().zip(hi) {
        out = out.into_iter().flat_map(|p: Vec<i64>| (*a..=*b).map(move |x| [p.clone(), vec![x]].concat())).collect();
    }
    out.iter().map(|p| Vector::from_ints(p)).collect()
}

fn oracle_equivalence() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED ^ 8);
    let (mut cov_checks, mut scans, mut direct) = (0usize, 0usize, 0usize);
    for i in 0..ORACLE_INSTANCES {
        let d = 1 + i % 3;
        let k = random_set(&mut rng, d, 40, 10);
        let g = pointset::covariogram(&k).map_err(err)?;
        for x in k.iter() {
            for y in k.iter() {
                let u = x - y;
                ensure(g.value(&u) == naive_covariogram(&k, &u), format!("covariogram mismatch at {u}"))?;
                cov_checks += 1;
            }
        }
        if k.is_full_dimensional() {
            let p = k.hull().map_err(err)?;
            let l = if rng.gen_bool(0.5) { Lattice::integer(d) } else { Lattice::scaled_integer(d, 2) };
            let fast = p.lattice_points(&l);
            let scan: Vec<Vector> = box_points(&vec![-10; d], &vec![10; d]).into_iter().filter(|x| l.contains(x) && p.contains(x)).collect();
            ensure(fast.points() == scan.as_slice() || (scan.is_empty() && fast.is_empty()), "latticePoints disagrees with box scan")?;
            scans += 1;
        }
        let s = random_set(&mut rng, d, 6, 4);
        let t = random_set(&mut rng, d, 6, 3);
        let mut sums = BTreeSet::new();
        let unique = s.iter().all(|a| t.iter().all(|b| sums.insert(a + b)));
        ensure(unique == pointset::is_direct_sum(&s, &t), "isDirectSum disagrees with decomposition count")?;
        direct += 1;
    }
    Ok(format!("{ORACLE_INSTANCES} sets: {cov_checks} covariogram values, {scans} lattice point scans, {direct} direct-sum checks agree"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("classification reproduction", classification),
        ("W-set cardinality", w_set_cardinality),
        ("homometric pair suite", homometric_suite),
        ("ABC implication suite", abc_suite),
        ("counterexample certificates", counterexamples),
        ("finiteness bounds suite", finiteness_suite),
        ("irregular catalog", irregular_catalog),
        ("oracle equivalence", oracle_equivalence),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS [{}] {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL [{}] {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
