//! Regularity after collapsing the grading along a coarsening vector `v`.
//!
//! The coarse grading is `deg_v(d) = v·d`, local cohomology is taken with
//! respect to the ideal 𝔪 of variables of positive coarse degree and the
//! configuration is `{c_v}`. Each sign pattern of 𝔪 projects to a ray
//! `s_σ + ℕE_σ` of integers, which makes every question here a
//! one-dimensional semigroup test.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use crate::cohomology::{LocalCohomology, ModuleData};
use crate::error::{Error, Result};
use crate::lattice::{Decision, DegreeVector, GeneratorSet};
use crate::linalg::Field;
use crate::ring::{classify_coarsening, CoarseningVector, GradedRing};

/// A sign pattern of 𝔪 seen through `v`.
#[derive(Clone, Debug)]
struct CoarsePiece {
    /// `v·v_σ`.
    start: i64,
    /// Nonzero entries of `v·D_σ`.
    steps: Vec<i64>,
}

/// `x ∈ ℕ(gens)` for integers; zero generators are ignored.
fn in_line_semigroup(gens: &[i64], x: i64) -> bool {
    let pos = gens.iter().any(|&g| g > 0);
    let neg = gens.iter().any(|&g| g < 0);
    let g = gens.iter().fold(0i64, |acc, &a| acc.gcd(&a));
    if x == 0 {
        return true;
    }
    if g == 0 || x % g != 0 {
        return false;
    }
    if pos && neg {
        return true;
    }
    if (x > 0) != pos {
        return false;
    }
    // Numerical semigroup in units of g.
    let gens: Vec<i64> = gens.iter().filter(|&&a| a != 0).map(|a| a.abs() / g).collect();
    let y = x.abs() / g;
    let lo = *gens.iter().min().expect("nonzero generator");
    let hi = *gens.iter().max().expect("nonzero generator");
    // Every integer above (lo − 1)(hi − 1) lies in a semigroup of gcd 1.
    if y > (lo - 1) * (hi - 1) {
        return true;
    }
    let y = y as usize;
    let mut reach = vec![false; y + 1];
    reach[0] = true;
    for t in 1..=y {
        reach[t] = gens.iter().any(|&a| a as usize <= t && reach[t - a as usize]);
    }
    reach[y]
}

/// `vregnum(M)`: the least `p` with every `q ≥ p` in `reg_v(M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RegNumber {
    /// Every integer is regular, e.g. for the zero module.
    NegInfinity,
    /// `exact = false` marks an upper bound obtained from a resolution.
    Finite { value: i64, exact: bool },
    /// No integer is certified.
    Unbounded,
}

impl RegNumber {
    pub fn value(&self) -> Option<i64> {
        match self {
            RegNumber::Finite { value, .. } => Some(*value),
            _ => None,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            RegNumber::NegInfinity => serde_json::json!({ "value": "-inf" }),
            RegNumber::Finite { value, exact } => {
                serde_json::json!({ "value": value, "kind": if *exact { "exact" } else { "upper-bound" } })
            }
            RegNumber::Unbounded => serde_json::json!({ "value": "none" }),
        }
    }
}

impl fmt::Display for RegNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegNumber::NegInfinity => write!(f, "-inf"),
            RegNumber::Finite { value, exact: true } => write!(f, "{value}"),
            RegNumber::Finite { value, exact: false } => write!(f, "{value} (upper-bound)"),
            RegNumber::Unbounded => write!(f, "none certified"),
        }
    }
}

/// Coarse local cohomology for one coarsening vector.
#[derive(Clone, Debug)]
pub struct CoarseEngine {
    cv: CoarseningVector,
    engine: LocalCohomology,
    /// Pieces of `H^i_𝔪(S)` by index i.
    pieces: Vec<Vec<CoarsePiece>>,
}

impl CoarseEngine {
    pub fn new(ring: &GradedRing, v: &DegreeVector) -> Result<Self> {
        let cv = classify_coarsening(ring, v)?;
        let engine = LocalCohomology::new(ring, &cv.ideal(), Field::Rational)?;
        let top = engine.max_index().map_or(0, |t| t + 1);
        let pieces = (0..top)
            .map(|i| {
                engine
                    .support(i)
                    .into_iter()
                    .map(|p| CoarsePiece {
                        start: v.dot(p.offset()),
                        steps: p.directions().iter().map(|g| v.dot(g)).filter(|&x| x != 0).collect(),
                    })
                    .collect()
            })
            .collect();
        Ok(CoarseEngine { cv, engine, pieces })
    }

    pub fn coarsening(&self) -> &CoarseningVector {
        &self.cv
    }

    /// The multigraded engine for 𝔪.
    pub fn engine(&self) -> &LocalCohomology {
        &self.engine
    }

    /// Does `p + ℕc_v[k]` meet the coarse support of `H^idx_𝔪(S(−e))`?
    fn meets(&self, idx: usize, e: &DegreeVector, k: i64, p: i64) -> bool {
        let c = self.cv.c();
        let shift = self.cv.apply(e);
        self.pieces.get(idx).is_some_and(|ps| {
            ps.iter().any(|piece| {
                let mut gens = piece.steps.clone();
                gens.push(-c);
                in_line_semigroup(&gens, p + k * c - piece.start - shift)
            })
        })
    }

    /// Largest irregular `p` contributed by `H^idx(S(−e))` at shift `k`,
    /// `None` if there is none and `Err(())` if the irregular set is
    /// unbounded above.
    fn top_irregular(&self, idx: usize, e: &DegreeVector, k: i64) -> std::result::Result<Option<i64>, ()> {
        let c = self.cv.c();
        let shift = self.cv.apply(e);
        let mut best = None;
        for piece in self.pieces.get(idx).map_or(&[][..], Vec::as_slice) {
            if piece.steps.iter().any(|&s| s > 0) {
                return Err(());
            }
            let t = piece.start + shift - k * c;
            best = Some(best.map_or(t, |b: i64| b.max(t)));
        }
        Ok(best)
    }

    fn index_range(&self) -> usize {
        self.pieces.len()
    }

    /// `Yes` iff `p ∈ reg_v(M)` is established. Exact for free modules; for
    /// resolutions `No` only means "not certified".
    pub fn vreg_membership(&self, module: &ModuleData, p: i64) -> Decision {
        let top = self.index_range();
        for i in 0..top {
            for (level, shifts) in module.levels() {
                let idx = i + level;
                if idx >= top {
                    continue;
                }
                if shifts.iter().any(|e| self.meets(idx, e, 1 - i as i64, p)) {
                    return Decision::No;
                }
            }
        }
        Decision::Yes
    }

    /// `vregnum(M)`; exact for free modules, an upper bound for resolutions.
    pub fn vregnum(&self, module: &ModuleData) -> RegNumber {
        if module.is_zero() {
            return RegNumber::NegInfinity;
        }
        let top = self.index_range();
        let mut best: Option<i64> = None;
        for i in 0..top {
            for (level, shifts) in module.levels() {
                let idx = i + level;
                if idx >= top {
                    continue;
                }
                for e in shifts {
                    match self.top_irregular(idx, e, 1 - i as i64) {
                        Err(()) => return RegNumber::Unbounded,
                        Ok(Some(t)) => best = Some(best.map_or(t, |b| b.max(t))),
                        Ok(None) => {}
                    }
                }
            }
        }
        match best {
            None => RegNumber::NegInfinity,
            Some(t) => RegNumber::Finite { value: t + 1, exact: module.is_exact() },
        }
    }
}

/// `b_*`-regularity: `b_j ∈ reg_{v_j}(M)` for every j.
pub fn bstar_regular(ring: &GradedRing, module: &ModuleData, vs: &[DegreeVector], bs: &[i64]) -> Result<Decision> {
    if vs.len() != bs.len() {
        return Err(Error::Invalid(format!("{} coarsening vectors but {} bounds", vs.len(), bs.len())));
    }
    let mut out = Decision::Yes;
    for (v, &b) in vs.iter().zip(bs) {
        out = out.and(CoarseEngine::new(ring, v)?.vreg_membership(module, b));
        if out.is_no() {
            break;
        }
    }
    Ok(out)
}

/// `P^+ = {v·x ≥ b}`, `P^− = {v·x ≤ b}` and the line `L = {v·x = b}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfPlaneData {
    pub v: DegreeVector,
    pub b: BigRational,
}

impl HalfPlaneData {
    pub fn new(v: DegreeVector, b: BigRational) -> Self {
        HalfPlaneData { v, b }
    }

    fn value(&self, x: &DegreeVector) -> BigRational {
        BigRational::from_integer(BigInt::from(self.v.dot(x)))
    }

    pub fn in_plus(&self, x: &DegreeVector) -> bool {
        self.value(x) >= self.b
    }

    pub fn in_minus(&self, x: &DegreeVector) -> bool {
        self.value(x) <= self.b
    }

    pub fn on_line(&self, x: &DegreeVector) -> bool {
        self.value(x) == self.b
    }
}

/// Extreme values of `v·c_j` over the configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinMaxDot {
    pub min: i64,
    pub max: i64,
}

impl MinMaxDot {
    pub fn new(v: &DegreeVector, config: &GeneratorSet) -> Result<Self> {
        let dots: Vec<i64> = config.iter().map(|c| v.dot(c)).collect();
        match (dots.iter().min(), dots.iter().max()) {
            (Some(&min), Some(&max)) => Ok(MinMaxDot { min, max }),
            _ => Err(Error::EmptyGenerators),
        }
    }

    /// `m(k, i)`: `max` when `k − i < 0`, else `min`.
    pub fn m(&self, k: i64, i: i64) -> i64 {
        if k - i < 0 {
            self.max
        } else {
            self.min
        }
    }

    /// A bound `b` with `ℕC[k] ⊆ {v·x ≥ b}`.
    pub fn shifted_bound(&self, k: i64) -> i64 {
        if k >= 0 {
            k * self.min
        } else {
            k * self.max
        }
    }
}

/// Outcome of the half-plane test for one cohomological index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfPlaneStep {
    pub i: usize,
    /// `H^i(M)_d = 0` is required for `v·d ≥ threshold`.
    pub threshold: i64,
    /// `Yes` certifies `m + ℕC[k−i] ⊆ 𝒵^i(M)`.
    pub vanishing: Decision,
}

/// Per-index results and, for `k = 1`, the regularity conclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfPlaneVerdict {
    pub k: i64,
    pub steps: Vec<HalfPlaneStep>,
}

impl HalfPlaneVerdict {
    /// Conjunction of the per-index results.
    pub fn all(&self) -> Decision {
        self.steps.iter().fold(Decision::Yes, |acc, s| acc.and(s.vanishing.clone()))
    }

    /// `Yes` certifies `m ∈ reg(M)`; only meaningful for `k = 1`.
    pub fn regular(&self) -> Decision {
        if self.k == 1 {
            self.all()
        } else {
            Decision::Unknown("regularity follows only from k = 1".into())
        }
    }
}

/// Checks `H^i(M)_d = 0` on `{v·d ≥ v·m + (k−i)·m(k,i)}` for each i, which
/// gives `m + ℕC[k−i] ⊆ 𝒵^i(M)`.
pub fn halfplane_implies_reg(
    eng: &LocalCohomology,
    module: &ModuleData,
    m: &DegreeVector,
    v: &DegreeVector,
    k: i64,
) -> Result<HalfPlaneVerdict> {
    m.ensure_rank(eng.rank())?;
    v.ensure_rank(eng.rank())?;
    if let Some((j, c)) = eng.config().iter().enumerate().find(|(_, c)| v.dot(c) < 0) {
        return Err(Error::Precondition(format!("v·c_{} = {} < 0 for c_{} = {c}", j + 1, v.dot(c), j + 1)));
    }
    let mm = MinMaxDot::new(v, eng.config())?;
    let top = eng.max_index().map_or(0, |t| t + 1);
    let base = v.dot(m);
    let steps = (0..top)
        .map(|i| {
            let threshold = base + (k - i as i64) * mm.m(k, i as i64);
            HalfPlaneStep { i, threshold, vanishing: module.avoids_halfplane(eng, i, v, threshold) }
        })
        .collect();
    Ok(HalfPlaneVerdict { k, steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{combine, compositions};
    use crate::region::ResolutionTypeJ;
    use crate::ring::catalog;

    fn d<const N: usize>(c: [i64; N]) -> DegreeVector {
        DegreeVector::from(c)
    }

    #[test]
    fn line_semigroup_membership() {
        assert!(in_line_semigroup(&[-2, -3, -30], -1 - 4));
        assert!(!in_line_semigroup(&[-2, -3, -5, -30], -1));
        assert!(!in_line_semigroup(&[-2, -3], 2));
        assert!(in_line_semigroup(&[4, -6], 2));
        assert!(!in_line_semigroup(&[4, -6], 3));
        assert!(in_line_semigroup(&[-7, -9], -1000));
        assert!(!in_line_semigroup(&[-7, -9], -47));
    }

    #[test]
    fn standard_ring_is_zero_regular() {
        let ring = catalog::standard(3).unwrap();
        let ce = CoarseEngine::new(&ring, &d([1])).unwrap();
        let s = ModuleData::ring(1);
        assert!(ce.vreg_membership(&s, 0).is_yes());
        assert!(ce.vreg_membership(&s, -1).is_no());
        assert_eq!(ce.vregnum(&s), RegNumber::Finite { value: 0, exact: true });
        assert_eq!(ce.vregnum(&ModuleData::Free(vec![])), RegNumber::NegInfinity);
    }

    #[test]
    fn weighted_ring_threshold() {
        let ring = catalog::weighted(&[2, 3, 5], 30).unwrap();
        let ce = CoarseEngine::new(&ring, &d([1])).unwrap();
        let s = ModuleData::ring(1);
        assert_eq!(ce.vregnum(&s), RegNumber::Finite { value: 51, exact: true });
        assert!(ce.vreg_membership(&s, 51).is_yes());
        assert!(ce.vreg_membership(&s, 50).is_no());
        assert!(ce.vreg_membership(&s, 49).is_yes());
    }

    #[test]
    fn shift_covariance() {
        let ring = catalog::multiprojective(&[1, 1]).unwrap();
        let v = d([1, 2]);
        let ce = CoarseEngine::new(&ring, &v).unwrap();
        let base = ce.vregnum(&ModuleData::ring(2)).value().unwrap();
        for e in [d([1, 0]), d([-2, 3]), d([0, -1])] {
            let shifted = ce.vregnum(&ModuleData::Free(vec![e.clone()])).value().unwrap();
            assert_eq!(shifted, base + v.dot(&e));
        }
    }

    #[test]
    fn resolution_gives_upper_bound() {
        let ring = catalog::standard(2).unwrap();
        let ce = CoarseEngine::new(&ring, &d([1])).unwrap();
        let j: ResolutionTypeJ = "0:{(0)};1:{(2)}".parse().unwrap();
        let r = ce.vregnum(&ModuleData::Resolution(j));
        assert_eq!(r, RegNumber::Finite { value: 1, exact: false });
    }

    #[test]
    fn bstar_lists() {
        let ring = catalog::multiprojective(&[1, 1]).unwrap();
        let s = ModuleData::ring(2);
        assert!(bstar_regular(&ring, &s, &[], &[]).unwrap().is_yes());
        assert!(bstar_regular(&ring, &s, &[d([1, 0])], &[]).is_err());
        assert!(bstar_regular(&ring, &s, &[d([1, 0]), d([0, 1])], &[0, 0]).unwrap().is_yes());
        assert!(bstar_regular(&ring, &s, &[d([1, 0]), d([0, 1])], &[0, -1]).unwrap().is_no());
    }

    #[test]
    fn halfplane_sets() {
        let h = HalfPlaneData::new(d([1, 2]), BigRational::new(3.into(), 2.into()));
        for p in [d([0, 0]), d([2, 0]), d([1, 1]), d([-1, 1])] {
            assert_eq!(h.in_plus(&p) && h.in_minus(&p), h.on_line(&p));
        }
        let mm = MinMaxDot { min: 1, max: 3 };
        assert_eq!((mm.m(0, 2), mm.m(1, 1), mm.m(1, 0)), (3, 1, 1));
    }

    #[test]
    fn shifted_region_lies_in_halfplane() {
        let c = GeneratorSet::from_coords([[1, 0], [1, 2]]).unwrap();
        let v = d([2, 1]);
        let mm = MinMaxDot::new(&v, &c).unwrap();
        for k in -3i64..=3 {
            for w in compositions(k.unsigned_abs(), c.len()) {
                let corner = &combine(&c, &w) * k.signum();
                for extra in [d([0, 0]), d([1, 0]), d([2, 2]), d([4, 6])] {
                    assert!(v.dot(&(&corner + &extra)) >= mm.shifted_bound(k));
                }
            }
        }
    }

    #[test]
    fn classical_halfplane_criterion() {
        let ring = catalog::standard(2).unwrap();
        let eng = LocalCohomology::for_ring(&ring).unwrap();
        let s = ModuleData::ring(1);
        let ok = halfplane_implies_reg(&eng, &s, &d([0]), &d([1]), 1).unwrap();
        assert!(ok.regular().is_yes());
        assert_eq!(ok.steps.iter().map(|s| s.threshold).collect::<Vec<_>>(), vec![1, 0, -1]);
        assert!(halfplane_implies_reg(&eng, &s, &d([-1]), &d([1]), 1).unwrap().regular().is_no());
        assert!(matches!(halfplane_implies_reg(&eng, &s, &d([0]), &d([-1]), 1), Err(Error::Precondition(_))));
    }
}
