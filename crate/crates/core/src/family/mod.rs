//! Ideal families from fans and family regularity.
//!
//! A family `B_1, …, B_t` of variable ideals, one per primitive collection
//! of the fan, with the sums `B_I = Σ_{i∈I} B_i`. Local cohomology with
//! respect to each `B_I` is computed by its own engine; the regularity
//! notions here combine those engines.

mod fan;

pub use fan::{primitive_collections, FanData};

use num_bigint::BigInt;
use num_traits::One;

use crate::cohomology::{family_engines, LocalCohomology, ModuleData};
use crate::coarsen::{halfplane_implies_reg, CoarseEngine, HalfPlaneVerdict, MinMaxDot, RegNumber};
use crate::error::{Error, Result};
use crate::lattice::{lp, Decision, DegreeVector};
use crate::linalg::{solve_independent, Field};
use crate::region::ResolutionTypeJ;
use crate::resolution::{check_degree_bounds, LevelCheck, SyzygyBox};
use crate::ring::{classify_coarsening, GradedRing, MonomialIdeal};

/// The family `{B_i}` and the engines of every `B_I`.
#[derive(Clone, Debug)]
pub struct IdealFamily {
    collections: Vec<u64>,
    ideals: Vec<MonomialIdeal>,
    /// Keyed by the bitmask of I.
    engines: Vec<(u64, LocalCohomology)>,
    /// `v_I` in the order of `engines`.
    vectors: Option<Vec<DegreeVector>>,
}

impl IdealFamily {
    /// `B_i = ⟨x_k : k ∈ P_i⟩` for the given variable masks.
    pub fn new(ring: &GradedRing, collections: Vec<u64>) -> Result<Self> {
        if collections.is_empty() {
            return Err(Error::Invalid("a family needs at least one ideal".into()));
        }
        let n = ring.nvars();
        let ideals = collections
            .iter()
            .map(|&mask| {
                if mask == 0 || (n < 64 && mask >> n != 0) {
                    return Err(Error::Invalid(format!("variable set {mask:#b} is empty or out of range")));
                }
                let vars: Vec<usize> = (0..n).filter(|k| mask >> k & 1 == 1).collect();
                MonomialIdeal::variables(n, &vars)
            })
            .collect::<Result<Vec<_>>>()?;
        let engines = family_engines(ring, &ideals, Field::Rational)?;
        Ok(IdealFamily { collections, ideals, engines, vectors: None })
    }

    /// The family of primitive collections of the ring's fan; ray `k`
    /// corresponds to variable `k`.
    pub fn from_fan(ring: &GradedRing) -> Result<Self> {
        let fan = ring.fan().ok_or_else(|| Error::Precondition("the ring has no fan".into()))?;
        if fan.rays().len() != ring.nvars() {
            return Err(Error::RankMismatch { expected: ring.nvars(), found: fan.rays().len() });
        }
        Self::new(ring, primitive_collections(fan)?)
    }

    /// Primitive collections (or given variable sets) as masks.
    pub fn collections(&self) -> &[u64] {
        &self.collections
    }

    /// `B_1, …, B_t`.
    pub fn ideals(&self) -> &[MonomialIdeal] {
        &self.ideals
    }

    /// `(mask of I, engine for B_I)` for every nonempty I.
    pub fn engines(&self) -> &[(u64, LocalCohomology)] {
        &self.engines
    }

    /// Variables of `B_I`.
    pub fn variables_of(&self, mask: u64) -> u64 {
        (0..self.collections.len()).filter(|k| mask >> k & 1 == 1).fold(0, |acc, k| acc | self.collections[k])
    }

    /// `v_I` paired with the mask of I, if set.
    pub fn vectors(&self) -> Option<Vec<(u64, &DegreeVector)>> {
        self.vectors.as_ref().map(|vs| self.engines.iter().map(|(m, _)| *m).zip(vs.iter()).collect())
    }

    /// True iff `V(B) = ⋃ V(B_i)`, compared through minimal primes of the
    /// radical of B.
    pub fn decomposes(&self, ring: &GradedRing) -> Result<bool> {
        let n = ring.nvars();
        let radical: Vec<Vec<u32>> = ring
            .irrelevant_ideal()
            .generators()
            .iter()
            .map(|g| g.iter().map(|&e| u32::from(e > 0)).collect())
            .collect();
        let primes = MonomialIdeal::new(n, radical)?.minimal_primes()?;
        let mut expected: Vec<u64> =
            self.collections.iter().copied().filter(|&p| !self.collections.iter().any(|&q| q != p && q & p == q)).collect();
        expected.sort_unstable();
        expected.dedup();
        Ok(primes == expected)
    }

    /// Sets `v_I` to orthogonal coarsenings, computed per I.
    pub fn with_orthogonal_vectors(mut self, ring: &GradedRing) -> Result<Self> {
        let mut out = Vec::new();
        for (mask, _) in &self.engines {
            let vars = self.variables_of(*mask);
            let v = orthogonal_vector(ring, vars).ok_or_else(|| {
                Error::Precondition(format!(
                    "no coarsening vector is positive exactly on the variables of B_I for I = {}; \
                     the family bounds need deg_v(x) > 0 on B_I and 0 elsewhere",
                    mask_label(*mask)
                ))
            })?;
            out.push(v);
        }
        self.vectors = Some(out);
        Ok(self)
    }

    /// Sets `v_I` explicitly, in the order of `engines`.
    pub fn with_vectors(mut self, ring: &GradedRing, vectors: Vec<DegreeVector>) -> Result<Self> {
        if vectors.len() != self.engines.len() {
            return Err(Error::Invalid(format!("{} vectors for {} sets I", vectors.len(), self.engines.len())));
        }
        for v in &vectors {
            v.ensure_rank(ring.rank())?;
        }
        self.vectors = Some(vectors);
        Ok(self)
    }

    /// True iff every `v_I` is positive exactly on the variables of `B_I`.
    pub fn is_orthogonal(&self, ring: &GradedRing) -> bool {
        self.vectors().is_some_and(|vs| vs.iter().all(|(mask, v)| is_orthogonal(ring, v, self.variables_of(*mask))))
    }
}

/// `{1,3}`-style label of a set I of family indices, 1-based.
pub fn mask_label(mask: u64) -> String {
    let parts: Vec<String> = (0..64).filter(|k| mask >> k & 1 == 1).map(|k| (k + 1).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// `deg_v(x_k) > 0` iff `k ∈ vars`, and `= 0` otherwise.
pub fn is_orthogonal(ring: &GradedRing, v: &DegreeVector, vars: u64) -> bool {
    ring.degrees().iter().enumerate().all(|(k, a)| {
        let d = v.dot(a);
        if vars >> k & 1 == 1 {
            d > 0
        } else {
            d == 0
        }
    })
}

/// An integer `v` positive exactly on `vars`: first `deg_v = 1` on `vars`,
/// then any feasible integer functional.
pub fn orthogonal_vector(ring: &GradedRing, vars: u64) -> Option<DegreeVector> {
    let degrees: Vec<Vec<i64>> = ring.degrees().into_iter().map(DegreeVector::into_coords).collect();
    let r = ring.rank();
    let target: Vec<i64> = (0..degrees.len()).map(|k| i64::from(vars >> k & 1 == 1)).collect();
    let cols: Vec<Vec<i64>> = (0..r).map(|c| degrees.iter().map(|a| a[c]).collect()).collect();
    if let Some(x) = solve_independent(&cols, &target) {
        if x.iter().all(|q| q.denom() == &BigInt::one()) {
            let coords: Option<Vec<i64>> = x.iter().map(|q| i64::try_from(q.numer()).ok()).collect();
            if let Some(v) = coords.map(DegreeVector::new) {
                if is_orthogonal(ring, &v, vars) {
                    return Some(v);
                }
            }
        }
    }
    let (pos, null): (Vec<_>, Vec<_>) = degrees.into_iter().enumerate().partition(|(k, _)| vars >> k & 1 == 1);
    let pos: Vec<Vec<i64>> = pos.into_iter().map(|(_, a)| a).collect();
    let null: Vec<Vec<i64>> = null.into_iter().map(|(_, a)| a).collect();
    lp::integer_functional(&pos, &null, r).map(DegreeVector::new).filter(|v| is_orthogonal(ring, v, vars))
}

/// `Yes` iff `m + ℕC[1−i] ⊆ 𝒵^{i+#I−1}_{B_I}(M)` is established for every
/// nonempty I and every i with `i + #I − 1 ≤ n`.
pub fn regstar_membership(ring: &GradedRing, family: &IdealFamily, module: &ModuleData, m: &DegreeVector) -> Result<Decision> {
    m.ensure_rank(ring.rank())?;
    let n = ring.nvars();
    let mut out = Decision::Yes;
    for (mask, eng) in family.engines() {
        let extra = mask.count_ones() as usize - 1;
        for i in 0..=n.saturating_sub(extra) {
            out = out.and(module.avoids_translate(eng, i + extra, 1 - i as i64, m));
            if out.is_no() {
                return Ok(out);
            }
        }
    }
    Ok(out)
}

/// The half-plane verdict of one `B_I`.
#[derive(Clone, Debug)]
pub struct RegBvEntry {
    pub mask: u64,
    pub v: DegreeVector,
    pub verdict: HalfPlaneVerdict,
}

/// Per-I results of the `reg_{B_*,v_*}` test.
#[derive(Clone, Debug)]
pub struct RegBvReport {
    pub entries: Vec<RegBvEntry>,
}

impl RegBvReport {
    /// `Yes` certifies `m ∈ reg_{B,C}(M)`.
    pub fn decision(&self) -> Decision {
        self.entries.iter().fold(Decision::Yes, |acc, e| acc.and(e.verdict.regular()))
    }
}

/// Checks `H^i_{B_I}(M)_d = 0` on `{v_I·d ≥ v_I·m + (1−i)·m(1,i)}` for
/// every I and i.
pub fn regbv_membership(family: &IdealFamily, module: &ModuleData, m: &DegreeVector) -> Result<RegBvReport> {
    let vectors = family.vectors().ok_or_else(|| Error::Precondition("the family has no coarsening vectors v_I".into()))?;
    let mut entries = Vec::new();
    for ((mask, eng), (_, v)) in family.engines().iter().zip(vectors) {
        let verdict = halfplane_implies_reg(eng, module, m, v, 1).map_err(|e| match e {
            Error::Precondition(msg) => Error::Precondition(format!("I = {}: {msg}", mask_label(*mask))),
            other => other,
        })?;
        entries.push(RegBvEntry { mask: *mask, v: v.clone(), verdict });
    }
    Ok(RegBvReport { entries })
}

/// One inequality `v_I·m ≤ b_I + (1−i)(c_{v_I} − m(1,i))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VresInequality {
    pub mask: u64,
    pub i: usize,
    pub lhs: i64,
    pub rhs: i64,
}

impl VresInequality {
    pub fn holds(&self) -> bool {
        self.lhs <= self.rhs
    }
}

/// Outcome of the syzygy-bound pipeline.
#[derive(Clone, Debug)]
pub struct VresReport {
    pub regbv: RegBvReport,
    /// `(mask, v_I, b_I, vregnum upper bound)`.
    pub bounds: Vec<(u64, DegreeVector, i64, RegNumber)>,
    pub inequalities: Vec<VresInequality>,
    /// The type of the given resolution.
    pub resolution: ResolutionTypeJ,
    pub syzygy_box: SyzygyBox,
    /// Degrees of the resolution outside `K_p`, per level.
    pub checks: Vec<LevelCheck>,
}

impl VresReport {
    /// `Yes` when the hypotheses are certified; the degree checks then
    /// confirm `J_p ⊆ K_p`.
    pub fn hypotheses(&self) -> Decision {
        self.regbv.decision().and(Decision::from_bool(self.inequalities.iter().all(VresInequality::holds)))
    }

    pub fn degrees_in_boxes(&self) -> bool {
        self.checks.iter().all(|c| c.violations.is_empty())
    }

    /// Hypotheses certified and every syzygy degree inside its box.
    pub fn passed(&self) -> bool {
        self.hypotheses().is_yes() && self.degrees_in_boxes()
    }
}

/// Runs the family bound end to end for a module with resolution type `j`:
/// certifies `m ∈ reg_{B_*,v_*}`, checks `b_I ≥ vregnum_{v_I}`, checks the
/// inequalities for `i = 0..n` and tests `J_p ⊆ K_p(v_*, b_*)`.
/// `bounds = None` uses `b_I = v_I·m`.
pub fn vres_pipeline(
    ring: &GradedRing,
    family: &IdealFamily,
    j: &ResolutionTypeJ,
    m: &DegreeVector,
    bounds: Option<&[i64]>,
) -> Result<VresReport> {
    if !family.is_orthogonal(ring) {
        return Err(Error::Precondition(
            "the family needs coarsening vectors v_I with deg_v(x) > 0 exactly on the variables of B_I".into(),
        ));
    }
    j.check_rank(ring.rank())?;
    let vectors: Vec<(u64, DegreeVector)> =
        family.vectors().expect("orthogonal family has vectors").into_iter().map(|(k, v)| (k, v.clone())).collect();
    let bs: Vec<i64> = match bounds {
        Some(b) if b.len() != vectors.len() => {
            return Err(Error::Invalid(format!("{} bounds for {} sets I", b.len(), vectors.len())));
        }
        Some(b) => b.to_vec(),
        None => vectors.iter().map(|(_, v)| v.dot(m)).collect(),
    };
    let module = ModuleData::Resolution(j.clone());
    let regbv = regbv_membership(family, &module, m)?;
    let n = ring.nvars();
    let mut report_bounds = Vec::new();
    let mut inequalities = Vec::new();
    let mut cvs = Vec::new();
    for ((mask, v), &b) in vectors.iter().zip(&bs) {
        let ce = CoarseEngine::new(ring, v)?;
        let num = ce.vregnum(&module);
        match &num {
            RegNumber::Unbounded => {
                return Err(Error::Precondition(format!("I = {}: no certified v_I-regularity number", mask_label(*mask))));
            }
            RegNumber::Finite { value, .. } if b < *value => {
                return Err(Error::Precondition(format!(
                    "I = {}: b_I = {b} is below the certified bound {value} for vregnum",
                    mask_label(*mask)
                )));
            }
            _ => {}
        }
        let mm = MinMaxDot::new(v, ring.config())?;
        let c = ce.coarsening().c();
        for i in 0..=n {
            let rhs = b + (1 - i as i64) * (c - mm.m(1, i as i64));
            inequalities.push(VresInequality { mask: *mask, i, lhs: v.dot(m), rhs });
        }
        report_bounds.push((*mask, v.clone(), b, num));
        cvs.push(classify_coarsening(ring, v)?);
    }
    let syzygy_box = SyzygyBox::new(cvs, bs)?;
    let checks = check_degree_bounds(j, &syzygy_box);
    Ok(VresReport { regbv, bounds: report_bounds, inequalities, resolution: j.clone(), syzygy_box, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolution::minimal_resolution;
    use crate::ring::catalog;

    fn d<const N: usize>(c: [i64; N]) -> DegreeVector {
        DegreeVector::from(c)
    }

    #[test]
    fn product_family() {
        let ring = catalog::multiprojective(&[1, 1]).unwrap();
        let fam = IdealFamily::from_fan(&ring).unwrap();
        assert_eq!(fam.collections(), &[0b0011, 0b1100]);
        assert!(fam.decomposes(&ring).unwrap());
        let fam = fam.with_orthogonal_vectors(&ring).unwrap();
        let vs: Vec<DegreeVector> = fam.vectors().unwrap().into_iter().map(|(_, v)| v.clone()).collect();
        assert_eq!(vs, vec![d([1, 0]), d([0, 1]), d([1, 1])]);
        assert!(fam.is_orthogonal(&ring));
    }

    #[test]
    fn hirzebruch_family() {
        for t in 0..4 {
            let ring = catalog::hirzebruch(t).unwrap();
            let fam = IdealFamily::from_fan(&ring).unwrap();
            assert_eq!(fam.collections(), &[0b0101, 0b1010]);
            assert!(fam.decomposes(&ring).unwrap());
            assert_eq!(fam.with_orthogonal_vectors(&ring).is_ok(), t == 0);
        }
    }

    #[test]
    fn regstar_on_product_of_lines() {
        let ring = catalog::multiprojective(&[1, 1]).unwrap();
        let fam = IdealFamily::from_fan(&ring).unwrap();
        let s = ModuleData::ring(2);
        assert!(regstar_membership(&ring, &fam, &s, &d([0, 0])).unwrap().is_yes());
        assert!(regstar_membership(&ring, &fam, &s, &d([-1, 0])).unwrap().is_no());
    }

    #[test]
    fn trivial_family_matches_regularity() {
        let ring = catalog::projective_plane().unwrap();
        let fam = IdealFamily::new(&ring, vec![0b111]).unwrap();
        let eng = LocalCohomology::for_ring(&ring).unwrap();
        let s = ModuleData::ring(1);
        for m in -3..3 {
            let m = d([m]);
            assert_eq!(regstar_membership(&ring, &fam, &s, &m).unwrap(), s.regular(&eng, &m));
        }
    }

    #[test]
    fn regbv_certifies_orthant() {
        let ring = catalog::multiprojective(&[1, 1]).unwrap();
        let fam = IdealFamily::from_fan(&ring).unwrap().with_orthogonal_vectors(&ring).unwrap();
        let s = ModuleData::ring(2);
        assert!(regbv_membership(&fam, &s, &d([0, 0])).unwrap().decision().is_yes());
        assert!(regbv_membership(&fam, &s, &d([-1, 3])).unwrap().decision().is_no());
    }

    #[test]
    fn pipeline_on_small_quotient() {
        let ring = catalog::multiprojective(&[1, 1]).unwrap();
        let fam = IdealFamily::from_fan(&ring).unwrap().with_orthogonal_vectors(&ring).unwrap();
        let ideal = MonomialIdeal::new(4, vec![vec![1, 0, 1, 0], vec![1, 0, 0, 1]]).unwrap();
        let j = minimal_resolution(&ring, &ideal).unwrap().type_j();
        assert_eq!(j.to_string(), "0:{(0,0)};1:{(1,1),(1,1)};2:{(1,2)}");
        let report = vres_pipeline(&ring, &fam, &j, &d([1, 1]), None).unwrap();
        assert!(report.passed());
        assert!(matches!(vres_pipeline(&ring, &fam, &j, &d([1, 1]), Some(&[-5, 1, 2])), Err(Error::Precondition(_))));
    }
}
