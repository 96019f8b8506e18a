//! Invariant suites over the built-in rings.
//!
//! Every suite draws its random inputs from a ChaCha stream seeded by the
//! caller, so a report is reproducible from its seed.

use std::collections::HashSet;
use std::fmt;
use std::time::{Duration, Instant};

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coarsen::{CoarseEngine, HalfPlaneData, MinMaxDot, RegNumber};
use crate::cohomology::{
    cech_oracle_piece, mv_vanishing, reg_s_region, PatternComplex, LocalCohomology, ModuleData,
    MonomialModule, OracleResult,
};
use crate::error::{Error, Result};
use crate::family::{primitive_collections, regbv_membership, regstar_membership, IdealFamily};
use crate::lattice::{shifted_region, AffineSemigroup, DegreeVector, GeneratorSet};
use crate::linalg::Field;
use crate::region::{reg_of_j, reg_of_j_level, DegreeBox, DregFamily, ResolutionTypeJ, SemigroupRegion};
use crate::resolution::{check_degree_bounds, hilbert_check, minimalize, taylor_complex, SyzygyBox};
use crate::ring::{catalog, classify_coarsening, monomials_of_degree, GradedRing, MonomialIdeal, RingError};

/// Outcome of one suite.
#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checks: usize,
    pub violations: Vec<String>,
    pub elapsed: Duration,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// All suite outcomes for one seed.
#[derive(Clone, Debug)]
pub struct SelftestReport {
    pub seed: u64,
    pub suites: Vec<SuiteResult>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "seed": self.seed,
            "passed": self.passed(),
            "suites": self.suites.iter().map(|s| serde_json::json!({
                "name": s.name,
                "checks": s.checks,
                "violations": s.violations,
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for SelftestReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "selftest seed {}", self.seed)?;
        for s in &self.suites {
            let status = if s.passed() { "ok" } else { "FAILED" };
            writeln!(f, "  {:<16} {:>6} checks  {status}", s.name, s.checks)?;
            for v in s.violations.iter().take(10) {
                writeln!(f, "    - {v}")?;
            }
        }
        write!(f, "{}", if self.passed() { "all suites passed" } else { "violations found" })
    }
}

/// Collects checks and violations for one suite.
struct Tally {
    checks: usize,
    violations: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { checks: 0, violations: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.violations.push(what());
        }
    }

    fn result(&mut self, r: Result<()>, context: &str) {
        if let Err(e) = r {
            self.checks += 1;
            self.violations.push(format!("{context}: {e}"));
        }
    }
}

type Suite = fn(&mut ChaCha8Rng, &mut Tally) -> Result<()>;

/// Names of the available suites, in run order.
pub const SUITES: &[&str] =
    &["shifted-regions", "semigroup", "correspondence", "ring", "cohomology", "resolution", "coarsen", "family"];

fn suite_fn(name: &str) -> Option<Suite> {
    Some(match name {
        "shifted-regions" => suite_shifted_regions,
        "semigroup" => suite_semigroup,
        "correspondence" => suite_correspondence,
        "ring" => suite_ring,
        "cohomology" => suite_cohomology,
        "resolution" => suite_resolution,
        "coarsen" => suite_coarsen,
        "family" => suite_family,
        _ => return None,
    })
}

/// Runs the named suite.
pub fn run_suite(name: &str, seed: u64) -> Result<SuiteResult> {
    let (name, f) = SUITES
        .iter()
        .find(|s| **s == name)
        .and_then(|s| suite_fn(s).map(|f| (*s, f)))
        .ok_or_else(|| Error::Invalid(format!("unknown suite {name:?}; known: {}", SUITES.join(", "))))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::new();
    let start = Instant::now();
    let r = f(&mut rng, &mut tally);
    tally.result(r, "suite aborted");
    Ok(SuiteResult { name, checks: tally.checks, violations: tally.violations, elapsed: start.elapsed() })
}

/// Runs every suite.
pub fn run_all(seed: u64) -> SelftestReport {
    let suites = SUITES.iter().map(|s| run_suite(s, seed).expect("listed suite exists")).collect();
    SelftestReport { seed, suites }
}

fn built(r: std::result::Result<GradedRing, RingError>) -> Result<GradedRing> {
    r.map_err(|e| Error::Invariant(format!("built-in ring: {e}")))
}

fn dv(c: &[i64]) -> DegreeVector {
    DegreeVector::new(c.to_vec())
}

fn random_degree(rng: &mut ChaCha8Rng, rank: usize, lo: i64, hi: i64) -> DegreeVector {
    DegreeVector::new((0..rank).map(|_| rng.random_range(lo..=hi)).collect())
}

/// A random monomial ideal with at most `max_gens` generators and
/// exponents at most `max_exp`.
pub fn random_monomial_ideal(rng: &mut impl Rng, nvars: usize, max_gens: usize, max_exp: u32) -> Result<MonomialIdeal> {
    let count = rng.random_range(1..=max_gens);
    let gens = (0..count)
        .map(|_| loop {
            let g: Vec<u32> = (0..nvars).map(|_| rng.random_range(0..=max_exp)).collect();
            if g.iter().any(|&e| e > 0) {
                break g;
            }
        })
        .collect();
    MonomialIdeal::new(nvars, gens)
}

fn configurations() -> Result<Vec<GeneratorSet>> {
    Ok(vec![
        GeneratorSet::from_coords([[1]])?,
        GeneratorSet::from_coords([[2], [3]])?,
        GeneratorSet::from_coords([[1, 0], [0, 1]])?,
        GeneratorSet::from_coords([[1, 0], [1, 2]])?,
    ])
}

/// Recursion identities of ℕC[k] and ℕC-closure, pointwise in a window.
fn suite_shifted_regions(_rng: &mut ChaCha8Rng, t: &mut Tally) -> Result<()> {
    for c in configurations()? {
        let nc = std::sync::Arc::new(AffineSemigroup::new(c.clone())?);
        let window = DegreeBox::cube(c.rank(), -7, 7);
        let points = window.points();
        for k in -3i64..=3 {
            let here = shifted_region(&nc, k)?;
            let below = shifted_region(&nc, k - 1)?;
            let translates: Vec<SemigroupRegion> = c.iter().map(|cj| here.translate(&-cj)).collect::<Result<_>>()?;
            for x in &points {
                let lhs = below.contains_point(x)?;
                let hits = translates.iter().map(|r| r.contains_point(x)).collect::<Result<Vec<_>>>()?;
                if k <= 0 {
                    t.check(lhs == hits.iter().any(|&h| h), || format!("C={:?} k={k}: union identity fails at {x}", c.vectors()));
                } else {
                    t.check(!lhs || hits.iter().all(|&h| h), || format!("C={:?} k={k}: intersection bound fails at {x}", c.vectors()));
                }
            }
            for g in here.generators() {
                for cj in c.iter() {
                    t.check(here.contains_point(&(g + cj))?, || format!("ℕC[{k}] not closed at {g} + {cj}"));
                }
            }
        }
    }
    Ok(())
}

/// Semigroup membership against breadth-first enumeration.
fn suite_semigroup(_rng: &mut ChaCha8Rng, t: &mut Tally) -> Result<()> {
    let cases = [
        GeneratorSet::from_coords([[3], [5]])?,
        GeneratorSet::from_coords([[1, 0], [1, 2], [0, 3]])?,
        GeneratorSet::from_coords([[2, 1], [1, 2], [1, -1]])?,
    ];
    for c in cases {
        let nc = AffineSemigroup::new(c.clone())?;
        let level_cap = 30;
        let mut reached: HashSet<DegreeVector> = HashSet::new();
        let mut frontier = vec![DegreeVector::zero(c.rank())];
        reached.insert(DegreeVector::zero(c.rank()));
        while let Some(x) = frontier.pop() {
            for g in c.iter() {
                let y = &x + g;
                if nc.level(&y).abs() <= level_cap && reached.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        for x in DegreeBox::cube(c.rank(), -12, 12).points() {
            if nc.level(&x).abs() > level_cap {
                continue;
            }
            let member = nc.contains_exact(&x)?;
            t.check(member == reached.contains(&x), || format!("membership of {x} in ℕ{:?}", c.vectors()));
        }
    }
    Ok(())
}

fn random_type(rng: &mut ChaCha8Rng, rank: usize) -> ResolutionTypeJ {
    let len = rng.random_range(1..=3);
    let levels =
        (0..len).map(|_| (0..rng.random_range(1..=2)).map(|_| random_degree(rng, rank, -2, 2)).collect()).collect();
    ResolutionTypeJ::new(levels)
}

/// The four reg/dreg correspondence properties, the level split of reg(J)
/// and invariance of dreg under redundant generators.
fn suite_correspondence(rng: &mut ChaCha8Rng, t: &mut Tally) -> Result<()> {
    let rings = [built(catalog::standard(2))?, built(catalog::multiprojective(&[1, 1]))?, built(catalog::hirzebruch(2))?];
    for ring in &rings {
        let r = ring.rank();
        let eng = LocalCohomology::for_ring(ring)?;
        let reg_s = reg_s_region(ring, &eng, &DegreeBox::cube(r, -6, 6))?;
        let nc = ring.nc().clone();
        let window = if r == 1 { DegreeBox::cube(1, -8, 8) } else { DegreeBox::cube(r, -4, 4) };
        let points = window.points();
        let max_p = 2;
        for _ in 0..20 {
            // (1) monotonicity of reg.
            let j = random_type(rng, r);
            let mut bigger = j.levels().to_vec();
            let p = rng.random_range(0..bigger.len());
            bigger[p].push(random_degree(rng, r, -2, 2));
            let bigger = ResolutionTypeJ::new(bigger);
            let reg_j = reg_of_j(&j, &reg_s)?;
            let reg_big = reg_of_j(&bigger, &reg_s)?;
            t.check(reg_j.contains_region(&reg_big)?, || format!("reg({j}) does not contain reg({bigger})"));

            // Level split: reg(J) = reg^0(J) ∩ reg^1(J).
            let split = reg_of_j_level(&j, &reg_s, 0)?.intersect(&reg_of_j_level(&j, &reg_s, 1)?)?;
            t.check(split.contains_region(&reg_j)? && reg_j.contains_region(&split)?, || format!("level split of reg({j})"));

            // (3) J ⊆ dreg(reg(J)).
            if !reg_j.is_empty() {
                let fam = DregFamily::new(reg_j.clone(), &reg_s, j.length())?;
                for (p, level) in j.levels().iter().enumerate() {
                    for d in level {
                        t.check(fam.contains(p, d)?, || format!("{d} ∈ J_{p} but not in dreg(reg({j}))_{p}"));
                    }
                }
            }

            // (2) antitonicity of dreg.
            let gens: Vec<DegreeVector> = (0..rng.random_range(1..=2)).map(|_| random_degree(rng, r, -2, 2)).collect();
            let d_small = SemigroupRegion::new(nc.clone(), gens.clone())?;
            let mut more = gens.clone();
            more.push(random_degree(rng, r, -2, 2));
            let d_big = SemigroupRegion::new(nc.clone(), more)?;
            let fam_small = DregFamily::new(d_small.clone(), &reg_s, max_p)?;
            let fam_big = DregFamily::new(d_big, &reg_s, max_p)?;
            for p in 0..=max_p {
                for x in &points {
                    if fam_big.contains(p, x)? {
                        t.check(fam_small.contains(p, x)?, || format!("dreg antitonicity at p={p}, {x}"));
                    }
                }
            }

            // dreg of D equals dreg of D with a redundant generator.
            let c0 = &ring.config().vectors()[0];
            let padded = SemigroupRegion::new(nc.clone(), gens.iter().cloned().chain([&gens[0] + c0]).collect())?;
            let fam_padded = DregFamily::new(padded, &reg_s, max_p)?;
            for x in points.iter().step_by(3) {
                t.check(fam_small.contains(1, x)? == fam_padded.contains(1, x)?, || format!("redundant generator changes dreg at {x}"));
            }

            // (4) D ⊆ reg(J) for J ⊆ dreg(D).
            let mut levels = Vec::new();
            for p in 0..=max_p {
                let k_p: Vec<&DegreeVector> =
                    points.iter().filter(|x| fam_small.contains(p, x).unwrap_or(false)).collect();
                if k_p.is_empty() {
                    break;
                }
                let pick = rng.random_range(1..=2.min(k_p.len()));
                levels.push(k_p.choose_multiple(rng, pick).map(|x| (*x).clone()).collect());
            }
            if !levels.is_empty() {
                let j = ResolutionTypeJ::new(levels);
                let reg_j = reg_of_j(&j, &reg_s)?;
                t.check(reg_j.contains_region(&d_small)?, || format!("D not inside reg({j}) although J ⊆ dreg(D)"));
            }
        }
    }
    Ok(())
}

/// Monomial counts by brute force and coarsening constants.
fn suite_ring(_rng: &mut ChaCha8Rng, t: &mut Tally) -> Result<()> {
    let rings = [
        built(catalog::standard(3))?,
        built(catalog::weighted(&[2, 3, 5], 30))?,
        built(catalog::multiprojective(&[1, 1]))?,
        built(catalog::hirzebruch(1))?,
        built(catalog::hirzebruch(3))?,
    ];
    for ring in &rings {
        let phi = ring.degree_semigroup().grading().to_vec();
        let degrees = ring.degrees();
        for d in DegreeBox::cube(ring.rank(), -2, 4).points() {
            let fast = monomials_of_degree(ring, &d)?.len();
            let bound: i64 = phi.iter().zip(d.coords()).map(|(a, b)| a * b).sum();
            let mut slow = 0usize;
            if bound >= 0 {
                let mut a = vec![0i64; degrees.len()];
                'outer: loop {
                    let deg = a.iter().zip(&degrees).fold(DegreeVector::zero(ring.rank()), |acc, (k, g)| &acc + &(g * *k));
                    if deg == d {
                        slow += 1;
                    }
                    for slot in a.iter_mut() {
                        *slot += 1;
                        if *slot <= bound {
                            continue 'outer;
                        }
                        *slot = 0;
                    }
                    break;
                }
            }
            t.check(fast == slow, || format!("{} monomials of degree {d}, brute force {slow}", fast));
        }
        for v in DegreeBox::cube(ring.rank(), 0, 3).points() {
            if let Ok(cv) = classify_coarsening(ring, &v) {
                let ok = cv.coarse_degrees().iter().filter(|&&x| x > 0).all(|&x| cv.c() % x == 0);
                t.check(ok, || format!("c_v of {v} is not a common multiple"));
            }
        }
    }
    Ok(())
}

/// Shift identity, pattern complexes, standard regularity, Čech oracle and
/// Mayer–Vietoris soundness.
fn suite_cohomology(rng: &mut ChaCha8Rng, t: &mut Tally) -> Result<()> {
    let p1p1 = built(catalog::multiprojective(&[1, 1]))?;
    let eng = LocalCohomology::for_ring(&p1p1)?;
    for _ in 0..40 {
        let e = random_degree(rng, 2, -3, 3);
        let d = random_degree(rng, 2, -5, 5);
        for i in 0..=4 {
            let lhs = eng.free_dim(std::slice::from_ref(&e), i, &d);
            let rhs = eng.piece_dim(i, &(&d - &e));
            t.check(lhs == rhs, || format!("shift identity at e={e}, i={i}, d={d}"));
        }
    }
    for ring in [built(catalog::hirzebruch(2))?, built(catalog::multiprojective(&[1, 2]))?] {
        let b = ring.irrelevant_ideal();
        for sigma in 0..(1u64 << ring.nvars()) {
            let c = PatternComplex::new(b, sigma)?;
            let h = c.cohomology(Field::Rational);
            let euler: i64 = h.iter().enumerate().map(|(p, &x)| if p % 2 == 0 { x as i64 } else { -(x as i64) }).sum();
            t.check(c.is_complex(), || format!("pattern {sigma:#b}: d∘d ≠ 0"));
            t.check(c.euler_characteristic() == euler, || format!("pattern {sigma:#b}: Euler characteristic"));
        }
    }
    for n in 1..=4 {
        let ring = built(catalog::standard(n))?;
        let eng = LocalCohomology::for_ring(&ring)?;
        let region = reg_s_region(&ring, &eng, &DegreeBox::cube(1, -6, 6))?;
        t.check(region.generators() == [dv(&[0])] && region.is_exact(), || format!("reg(S) for n={n} is {}", region.dump()));
    }
    let plane = built(catalog::standard(2))?;
    let plane_eng = LocalCohomology::for_ring(&plane)?;
    for e in [0i64, 2] {
        let m = MonomialModule::free(2, &[dv(&[e])]);
        for d in -4..=2 {
            for i in 0..=2 {
                let want = plane_eng.free_dim(&[dv(&[e])], i, &dv(&[d]));
                let got = cech_oracle_piece(&plane, &m, i, &dv(&[d]), 5, Field::Rational)?;
                let same = matches!((&want, &got), (crate::cohomology::Dim::Finite(a), OracleResult::Dim(b)) if *a == (*b).into());
                t.check(same, || format!("Čech oracle {got} vs {want} at e={e}, i={i}, d={d}"));
            }
        }
    }
    let mut mv_rings = vec![built(catalog::multiprojective(&[1, 1]))?];
    for tt in 0..=3 {
        mv_rings.push(built(catalog::hirzebruch(tt))?);
    }
    for ring in &mv_rings {
        let fam = IdealFamily::from_fan(ring)?;
        let eng = LocalCohomology::for_ring(ring)?;
        for _ in 0..30 {
            let e = random_degree(rng, 2, -2, 2);
            let d = random_degree(rng, 2, -4, 4);
            let module = ModuleData::Free(vec![e.clone()]);
            for i in 0..=ring.nvars() {
                if mv_vanishing(fam.engines(), &module, i, &d).is_yes() {
                    let direct = eng.free_dim(std::slice::from_ref(&e), i, &d);
                    t.check(direct.is_zero() == Some(true), || format!("MV certifies H^{i}(S(-{e}))_{d} = 0 but it is {direct}"));
                }
            }
        }
    }
    Ok(())
}

/// Complexes from random monomial ideals: validity, idempotence,
/// permutation invariance, Hilbert consistency and classical bounds.
fn suite_resolution(rng: &mut ChaCha8Rng, t: &mut Tally) -> Result<()> {
    let rings = [built(catalog::standard(3))?, built(catalog::multiprojective(&[1, 1]))?];
    for ring in &rings {
        for _ in 0..8 {
            let ideal = random_monomial_ideal(rng, ring.nvars(), 4, 2)?;
            let taylor = taylor_complex(ring, &ideal)?;
            t.result(taylor.validate(ring), "Taylor complex");
            let min = minimalize(&taylor);
            t.result(min.validate(ring), "minimalized complex");
            t.check(min.is_minimal(), || format!("minimalize left a unit for {ideal:?}"));
            let again = minimalize(&min);
            t.check(again.type_j() == min.type_j(), || "minimalize is not idempotent".into());
            let mut gens = ideal.generators().to_vec();
            gens.reverse();
            let permuted = MonomialIdeal::new(ring.nvars(), gens)?;
            let other = minimalize(&taylor_complex(ring, &permuted)?);
            t.check(other.type_j() == min.type_j(), || "J depends on generator order".into());
            let j = min.type_j();
            for d in DegreeBox::cube(ring.rank(), 0, 3).points() {
                let (alt, direct) = hilbert_check(ring, &ideal, &j, &d)?;
                t.check(alt == direct, || format!("Hilbert function at {d}: {alt} vs {direct}"));
            }
            if ring.rank() == 1 {
                let eng = LocalCohomology::for_ring(ring)?;
                let reg_s = reg_s_region(ring, &eng, &DegreeBox::cube(1, -6, 6))?;
                let region = reg_of_j(&j, &reg_s)?;
                if let Some(m) = region.generators().first() {
                    let cv = classify_coarsening(ring, &dv(&[1]))?;
                    let bx = SyzygyBox::new(vec![cv], vec![m.coords()[0]])?;
                    let ok = check_degree_bounds(&j, &bx).iter().all(|c| c.violations.is_empty());
                    t.check(ok, || format!("J = {j} leaves the classical bound for m = {m}"));
                }
            }
        }
    }
    Ok(())
}

/// Half-plane containment, monotonicity and shift covariance of vregnum.
fn suite_coarsen(rng: &mut ChaCha8Rng, t: &mut Tally) -> Result<()> {
    for c in configurations()? {
        let nc = std::sync::Arc::new(AffineSemigroup::new(c.clone())?);
        for _ in 0..5 {
            let v = random_degree(rng, c.rank(), 0, 3);
            if c.iter().any(|cj| v.dot(cj) < 0) {
                continue;
            }
            let mm = MinMaxDot::new(&v, &c)?;
            t.check(mm.min <= mm.max, || "min > max".into());
            for k in -3..=3 {
                let region = shifted_region(&nc, k)?;
                for x in region.points_in(&DegreeBox::cube(c.rank(), -8, 8))? {
                    t.check(v.dot(&x) >= mm.shifted_bound(k), || format!("{x} ∈ ℕC[{k}] below the half-plane for v={v}"));
                }
            }
            let b = num_rational::BigRational::new(rng.random_range(-6..=6).into(), rng.random_range(1..=3).into());
            let h = HalfPlaneData::new(v.clone(), b);
            for x in DegreeBox::cube(c.rank(), -3, 3).points() {
                t.check((h.in_plus(&x) && h.in_minus(&x)) == h.on_line(&x), || format!("P+ ∩ P- ≠ L at {x}"));
            }
        }
    }
    let cases: Vec<(GradedRing, DegreeVector)> = vec![
        (built(catalog::standard(3))?, dv(&[1])),
        (built(catalog::weighted(&[2, 3, 5], 30))?, dv(&[1])),
        (built(catalog::weighted(&[1, 2], 2))?, dv(&[1])),
        (built(catalog::multiprojective(&[1, 1]))?, dv(&[1, 1])),
        (built(catalog::multiprojective(&[1, 2]))?, dv(&[2, 1])),
        (built(catalog::hirzebruch(1))?, dv(&[1, 2])),
    ];
    for (ring, v) in &cases {
        let ce = CoarseEngine::new(ring, v)?;
        let s = ModuleData::ring(ring.rank());
        let base = ce.vregnum(&s);
        if let RegNumber::Finite { value, .. } = base {
            for q in value..=value + 10 {
                t.check(ce.vreg_membership(&s, q).is_yes(), || format!("q={q} ≥ vregnum={value} not regular for v={v}"));
            }
            t.check(ce.vreg_membership(&s, value - 1).is_no(), || format!("vregnum {value} is not least for v={v}"));
            if ce.coarsening().is_positive() {
                for _ in 0..5 {
                    let e = random_degree(rng, ring.rank(), -3, 3);
                    let shifted = ce.vregnum(&ModuleData::Free(vec![e.clone()]));
                    t.check(shifted.value() == Some(value + v.dot(&e)), || format!("shift covariance for e={e}, v={v}"));
                }
            }
        } else {
            t.check(false, || format!("vregnum of S for v={v} is {base}"));
        }
    }
    Ok(())
}

/// Primitive collections, orthogonal vectors and the chain
/// regBv ⊆ regstar ⊆ reg.
fn suite_family(_rng: &mut ChaCha8Rng, t: &mut Tally) -> Result<()> {
    let rings = [
        built(catalog::multiprojective(&[1, 1]))?,
        built(catalog::multiprojective(&[1, 2]))?,
        built(catalog::projective_plane())?,
        built(catalog::hirzebruch(0))?,
        built(catalog::hirzebruch(2))?,
    ];
    for ring in &rings {
        let fan = ring.fan().ok_or_else(|| Error::Invariant("catalog ring without fan".into()))?;
        for p in primitive_collections(fan)? {
            t.check(!fan.in_some_cone(p), || format!("collection {p:#b} lies in a cone"));
            for k in 0..64 {
                if p >> k & 1 == 1 {
                    t.check(fan.in_some_cone(p & !(1 << k)), || format!("proper subset of {p:#b} outside every cone"));
                }
            }
        }
        let fam = IdealFamily::from_fan(ring)?;
        t.check(fam.decomposes(ring)?, || "V(B) is not the union of the V(B_i)".into());
        let eng = LocalCohomology::for_ring(ring)?;
        let s = ModuleData::ring(ring.rank());
        let with_v = fam.clone().with_orthogonal_vectors(ring);
        let with_v = match with_v {
            Ok(f) => {
                t.check(f.is_orthogonal(ring), || "computed v_I are not orthogonal".into());
                Some(f)
            }
            Err(_) => None,
        };
        for m in DegreeBox::cube(ring.rank(), -3, 3).points() {
            let star = regstar_membership(ring, &fam, &s, &m)?;
            let full = s.regular(&eng, &m);
            if star.is_yes() {
                t.check(full.is_yes(), || format!("{m} ∈ regstar but not in reg"));
            }
            if let Some(f) = &with_v {
                if regbv_membership(f, &s, &m)?.decision().is_yes() {
                    t.check(star.is_yes(), || format!("{m} ∈ regBv but not in regstar"));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_suites_pass() {
        for name in ["shifted-regions", "semigroup", "coarsen"] {
            let r = run_suite(name, 7).unwrap();
            assert!(r.passed(), "{name}: {:?}", r.violations);
            assert!(r.checks > 0);
        }
        assert!(run_suite("nope", 0).is_err());
    }
}
