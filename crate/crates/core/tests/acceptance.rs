//! Acceptance criteria 1–8.
//!
//! Runs without the libtest harness so that `cargo test` always prints one
//! PASS/FAIL line per criterion. Arithmetic is exact, so every
//! comparison has zero tolerance; the only tolerances are the wall-clock
//! limits pinned in `LIMITS`.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use multireg::cohomology::{
    cech_oracle_piece, coh_free_piece, mv_vanishing, reg_s_region, Dim, LocalCohomology, ModuleData, MonomialModule,
    OracleResult,
};
use multireg::family::{regbv_membership, IdealFamily};
use multireg::lattice::DegreeVector;
use multireg::linalg::Field;
use multireg::region::{dreg_enumerate, reg_of_j, DegreeBox, ResolutionTypeJ, SemigroupRegion};
use multireg::resolution::{check_degree_bounds, minimal_resolution, SyzygyBox};
use multireg::ring::{catalog, classify_coarsening, GradedRing};
use multireg::selftest;

/// Wall-clock limit per criterion, in seconds.
const LIMITS: [(usize, f64); 8] = [(1, 1.0), (2, 5.0), (3, 30.0), (4, 60.0), (5, 60.0), (6, 60.0), (7, 60.0), (8, 120.0)];

const SEED: u64 = 2024;

type Outcome = Result<String, String>;

type Criterion = (&'static str, fn() -> Outcome);

fn dv(c: &[i64]) -> DegreeVector {
    DegreeVector::new(c.to_vec())
}

fn ring(r: Result<GradedRing, multireg::ring::RingError>) -> GradedRing {
    r.expect("catalog ring builds")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: multireg::Error) -> String {
    e.to_string()
}

/// Classical correspondence on the projective plane.
fn classical() -> Outcome {
    let s = ring(catalog::standard(3));
    let eng = LocalCohomology::for_ring(&s).map_err(err)?;
    let reg_s = reg_s_region(&s, &eng, &DegreeBox::cube(1, -6, 6)).map_err(err)?;
    ensure(reg_s.generators() == [dv(&[0])], || format!("reg(S) = {}", reg_s.dump()))?;
    for m in [-2i64, 0, 3] {
        let j = ResolutionTypeJ::new((0..=6).map(|p| vec![dv(&[m + p])]).collect());
        let r = reg_of_j(&j, &reg_s).map_err(err)?;
        ensure(r.generators() == [dv(&[m])] && r.is_exact(), || format!("reg(J) for m={m}: {}", r.dump()))?;
        let d = SemigroupRegion::new(s.nc().clone(), vec![dv(&[m])]).map_err(err)?;
        let window = DegreeBox::cube(1, m - 5, m + 10);
        for p in 0..=6usize {
            let level = dreg_enumerate(&d, &reg_s, p, &window).map_err(err)?;
            ensure(level.maximal == [dv(&[m + p as i64])], || format!("K_{p} for m={m}: maximal {:?}", level.maximal))?;
        }
    }
    Ok("m ∈ {-2,0,3}, p ≤ 6".into())
}

/// Top cohomology and reg(S) of weighted polynomial rings.
fn weighted() -> Outcome {
    let mut details = Vec::new();
    for a in [vec![1i64, 2], vec![1, 1, 2], vec![2, 3, 5]] {
        let n = a.len();
        let c = a.iter().fold(1i64, |acc, &w| num_integer::lcm(acc, w));
        let s = ring(catalog::weighted(&a, c));
        let eng = LocalCohomology::for_ring(&s).map_err(err)?;
        let sum: i64 = a.iter().sum();
        let zero = [dv(&[0])];
        let top = |w: i64| coh_free_piece(&eng, &zero, n, &dv(&[w]));
        for w in (-sum + 1)..=(-sum + 60) {
            ensure(top(w) == Dim::zero(), || format!("a={a:?}: H^{n}_{w} = {}", top(w)))?;
        }
        ensure(top(-sum).is_zero() == Some(false), || format!("a={a:?}: H^{n} vanishes at {}", -sum))?;
        let bound = (n as i64 - 1) * c - sum + 1;
        let region = reg_s_region(&s, &eng, &DegreeBox::cube(1, bound - 2 * c, bound + 2 * c)).map_err(err)?;
        for u in bound..bound + 60 {
            ensure(region.contains_point(&dv(&[u])).map_err(err)?, || format!("a={a:?}: {u} not in reg(S)"))?;
        }
        details.push(format!("{a:?}: u ≥ {bound}"));
    }
    Ok(details.join(", "))
}

fn hirzebruch() -> Outcome {
    for t in 0..=3i64 {
        let s = ring(catalog::hirzebruch(t));
        let eng = LocalCohomology::for_ring(&s).map_err(err)?;
        let region = reg_s_region(&s, &eng, &DegreeBox::cube(2, -6, 6)).map_err(err)?;
        let mut want = if t <= 1 { vec![dv(&[0, 0])] } else { vec![dv(&[t - 1, 0]), dv(&[0, 1])] };
        want.sort();
        let mut got = region.generators().to_vec();
        got.sort();
        ensure(got == want && region.is_exact(), || format!("t={t}: {}", region.dump()))?;
    }
    Ok("t = 0..3".into())
}

fn multiprojective() -> Outcome {
    let mut checked = 0usize;
    for dims in [vec![1usize, 1], vec![1, 2]] {
        let s = ring(catalog::multiprojective(&dims));
        let l = dims.len();
        let fam = IdealFamily::from_fan(&s).and_then(|f| f.with_orthogonal_vectors(&s)).map_err(err)?;
        let vectors = fam.vectors().expect("orthogonal vectors");
        let window = DegreeBox::cube(l, -5, 5);
        for ((mask, eng), (_, v)) in fam.engines().iter().zip(&vectors) {
            for d in window.points() {
                for i in 0..=s.nvars() {
                    if v.dot(&d) >= 1 - i as i64 {
                        let h = eng.piece_dim(i, &d);
                        ensure(h == Dim::zero(), || format!("{dims:?}, I={mask:#b}: H^{i}_{d} = {h}"))?;
                        checked += 1;
                    }
                }
            }
        }
        let module = ModuleData::ring(l);
        for d in window.points() {
            let certified = regbv_membership(&fam, &module, &d).map_err(err)?.decision().is_yes();
            let in_nl = d.coords().iter().all(|&x| x >= 0);
            ensure(certified == in_nl, || format!("{dims:?}: reg_B*,v* at {d} is {certified}"))?;
        }
    }
    Ok(format!("{checked} vanishing checks"))
}

/// Syzygy boxes for random ideals, plus the classical bound d ≤ m + i.
fn syzygy_boxes() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let s = ring(catalog::multiprojective(&[1, 1]));
    let fam = IdealFamily::from_fan(&s).and_then(|f| f.with_orthogonal_vectors(&s)).map_err(err)?;
    let vectors: Vec<DegreeVector> = fam.vectors().expect("orthogonal vectors").into_iter().map(|(_, v)| v.clone()).collect();
    let cvs = vectors.iter().map(|v| classify_coarsening(&s, v)).collect::<multireg::Result<Vec<_>>>().map_err(err)?;
    let mut certified = 0usize;
    for k in 0..10 {
        let ideal = selftest::random_monomial_ideal(&mut rng, s.nvars(), 5, 2).map_err(err)?;
        let j = minimal_resolution(&s, &ideal).map_err(err)?.type_j();
        let module = ModuleData::Resolution(j.clone());
        for p in DegreeBox::cube(2, -2, 6).points() {
            if !regbv_membership(&fam, &module, &p).map_err(err)?.decision().is_yes() {
                continue;
            }
            certified += 1;
            let bx = SyzygyBox::new(cvs.clone(), vectors.iter().map(|v| v.dot(&p)).collect()).map_err(err)?;
            let checks = check_degree_bounds(&j, &bx);
            ensure(checks.iter().all(|c| c.passed()), || format!("ideal {k} ({ideal:?}) at p={p}: {checks:?}"))?;
        }
    }
    ensure(certified > 0, || "no certified degree in the window".into())?;
    let plane = ring(catalog::standard(3));
    let eng = LocalCohomology::for_ring(&plane).map_err(err)?;
    for k in 0..10 {
        let ideal = selftest::random_monomial_ideal(&mut rng, 3, 5, 3).map_err(err)?;
        let j = minimal_resolution(&plane, &ideal).map_err(err)?.type_j();
        let module = ModuleData::Resolution(j.clone());
        for m in -2..=12i64 {
            if !module.regular(&eng, &dv(&[m])).is_yes() {
                continue;
            }
            for (i, level) in j.levels().iter().enumerate() {
                ensure(level.iter().all(|d| d.coords()[0] <= m + i as i64), || {
                    format!("classical ideal {k}: J_{i} = {level:?} exceeds m + i for m={m}")
                })?;
            }
        }
    }
    Ok(format!("{certified} certified (ideal, p) pairs"))
}

fn oracle() -> Outcome {
    let mut compared = 0usize;
    let cases: [(GradedRing, Vec<Vec<DegreeVector>>); 3] = [
        (ring(catalog::standard(2)), vec![vec![dv(&[0])], vec![dv(&[1])], vec![dv(&[-2])], vec![dv(&[0]), dv(&[2])]]),
        (
            ring(catalog::multiprojective(&[1, 1])),
            vec![vec![dv(&[0, 0])], vec![dv(&[1, 0])], vec![dv(&[-1, 2])], vec![dv(&[0, 0]), dv(&[1, 1])]],
        ),
        (
            ring(catalog::hirzebruch(2)),
            vec![vec![dv(&[0, 0])], vec![dv(&[0, 1])], vec![dv(&[1, -1])], vec![dv(&[0, 0]), dv(&[-1, 1])]],
        ),
    ];
    for (s, modules) in &cases {
        let eng = LocalCohomology::for_ring(s).map_err(err)?;
        let window = if s.rank() == 1 { DegreeBox::cube(1, -5, 1) } else { DegreeBox::cube(2, -4, 2) };
        for shifts in modules {
            let m = MonomialModule::free(s.nvars(), shifts);
            for d in window.points() {
                for i in 0..=s.nvars() {
                    let want = coh_free_piece(&eng, shifts, i, &d);
                    // Widen the truncation until two consecutive windows agree.
                    let mut got = cech_oracle_piece(s, &m, i, &d, 6, Field::Rational).map_err(err)?;
                    for w in [10, 14, 20] {
                        if !matches!(got, OracleResult::Inconclusive { .. }) {
                            break;
                        }
                        got = cech_oracle_piece(s, &m, i, &d, w, Field::Rational).map_err(err)?;
                    }
                    let same = matches!((&want, &got), (Dim::Finite(a), OracleResult::Dim(b)) if *a == (*b).into());
                    ensure(same, || format!("shifts {shifts:?}, i={i}, d={d}: oracle {got}, patterns {want}"))?;
                    compared += 1;
                }
            }
        }
    }
    Ok(format!("{compared} pieces, 0 discrepancies"))
}

fn mayer_vietoris() -> Outcome {
    let mut certified = 0usize;
    for dims in [vec![1usize, 1], vec![2, 1]] {
        let s = ring(catalog::multiprojective(&dims));
        let fam = IdealFamily::from_fan(&s).map_err(err)?;
        let eng = LocalCohomology::for_ring(&s).map_err(err)?;
        let r = s.rank();
        let modules = [vec![DegreeVector::zero(r)], vec![dv(&[1, -1])], vec![dv(&[0, 0]), dv(&[-2, 1])]];
        for shifts in &modules {
            let module = ModuleData::Free(shifts.clone());
            for d in DegreeBox::cube(r, -4, 4).points() {
                for i in 0..=s.nvars() {
                    if mv_vanishing(fam.engines(), &module, i, &d).is_yes() {
                        certified += 1;
                        let h = coh_free_piece(&eng, shifts, i, &d);
                        ensure(h == Dim::zero(), || format!("{dims:?}, {shifts:?}: MV certifies H^{i}_{d} = 0, but it is {h}"))?;
                    }
                }
            }
        }
    }
    Ok(format!("{certified} certified pieces, 0 violations"))
}

fn property_suites() -> Outcome {
    let report = selftest::run_all(SEED);
    let checks: usize = report.suites.iter().map(|s| s.checks).sum();
    ensure(report.passed(), || report.to_string())?;
    Ok(format!("{} suites, {checks} checks", report.suites.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("classical correspondence", classical),
        ("weighted bound", weighted),
        ("Hirzebruch reg(S)", hirzebruch),
        ("multiprojective vanishing", multiprojective),
        ("syzygy boxes", syzygy_boxes),
        ("oracle equivalence", oracle),
        ("Mayer-Vietoris soundness", mayer_vietoris),
        ("property suites", property_suites),
    ];
    let mut failures = Vec::new();
    for ((name, f), (n, limit)) in criteria.iter().zip(LIMITS) {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs_f64(limit);
        let secs = elapsed.as_secs_f64();
        match (&outcome, in_time) {
            (Ok(detail), true) => println!("criterion {n} ({name}): PASS  {detail}; {secs:.2} s (limit {limit} s)"),
            (Ok(detail), false) => {
                println!("criterion {n} ({name}): FAIL  {detail}; {secs:.2} s exceeds limit {limit} s");
                failures.push(n);
            }
            (Err(e), _) => {
                println!("criterion {n} ({name}): FAIL  {e}; {secs:.2} s");
                failures.push(n);
            }
        }
    }
    if failures.is_empty() {
        println!("acceptance: all 8 criteria passed");
    } else {
        println!("acceptance: failed criteria {failures:?}");
        std::process::exit(1);
    }
}
