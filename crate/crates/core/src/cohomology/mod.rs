//! Graded local cohomology of free modules over a Cox ring.
//!
//! `H^i_B(S)` is assembled from sign patterns: a fine degree `a ∈ ℤ^n` with
//! negative set σ contributes `h^i(σ)` copies of `K` in degree `Σ a_k 𝐚_k`.
//! The fine degrees with pattern σ have coarse degrees
//! `v_σ + ℕD_σ`, where `v_σ = −Σ_{k∈σ} 𝐚_k` and
//! `D_σ = {𝐚_j : j ∉ σ} ∪ {−𝐚_k : k ∈ σ}`, so every support question
//! reduces to affine semigroup membership.

mod oracle;
mod pattern;
mod regs;
mod torsion;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::Zero;
use serde_json::json;

use crate::error::{Error, Result};
use crate::lattice::{combine, compositions, AffineSemigroup, Decision, DegreeVector, GeneratorSet};
use crate::linalg::Field;
use crate::region::ResolutionTypeJ;
use crate::ring::{GradedRing, MonomialIdeal};

pub use oracle::{cech_oracle_piece, OracleResult};
pub use pattern::{pattern_cohomology, PatternComplex, SignPattern, PATTERN_GENERATOR_CAP};
pub use regs::{reg_s_membership, reg_s_region};
pub use torsion::{h0_torsion_piece, MonomialModule, TorsionMode, TorsionResult};

/// Largest number of variables for which sign patterns are enumerated.
pub const PATTERN_VARIABLE_CAP: usize = 20;

/// Dimension of a graded piece.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Dim {
    Finite(BigUint),
    Infinite,
    Unknown(String),
}

impl Dim {
    pub fn zero() -> Dim {
        Dim::Finite(BigUint::zero())
    }

    pub fn finite(n: u64) -> Dim {
        Dim::Finite(BigUint::from(n))
    }

    /// `Some(true)` for a zero piece, `None` when undecided.
    pub fn is_zero(&self) -> Option<bool> {
        match self {
            Dim::Finite(n) => Some(n.is_zero()),
            Dim::Infinite => Some(false),
            Dim::Unknown(_) => None,
        }
    }

    pub fn plus(self, other: Dim) -> Dim {
        match (self, other) {
            (Dim::Infinite, _) | (_, Dim::Infinite) => Dim::Infinite,
            (Dim::Unknown(r), _) | (_, Dim::Unknown(r)) => Dim::Unknown(r),
            (Dim::Finite(a), Dim::Finite(b)) => Dim::Finite(a + b),
        }
    }

    fn scale(self, k: usize) -> Dim {
        match self {
            _ if k == 0 => Dim::zero(),
            Dim::Finite(a) => Dim::Finite(a * BigUint::from(k)),
            other => other,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Dim::Finite(n) => json!(n.to_string()),
            Dim::Infinite => json!("infinite"),
            Dim::Unknown(r) => json!({ "unknown": r }),
        }
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dim::Finite(n) => write!(f, "{n}"),
            Dim::Infinite => write!(f, "infinite"),
            Dim::Unknown(r) => write!(f, "unknown ({r})"),
        }
    }
}

/// One sign pattern with nonzero cohomology.
#[derive(Clone, Debug)]
pub struct Pattern {
    sigma: SignPattern,
    h: Vec<usize>,
    offset: DegreeVector,
    directions: Arc<AffineSemigroup>,
    /// ℕ(D_σ ∪ −C).
    extended: Arc<AffineSemigroup>,
}

impl Pattern {
    pub fn sigma(&self) -> SignPattern {
        self.sigma
    }

    /// `h^i(σ)`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.h.get(i).copied().unwrap_or(0)
    }

    /// `v_σ`.
    pub fn offset(&self) -> &DegreeVector {
        &self.offset
    }

    /// `D_σ`.
    pub fn directions(&self) -> &GeneratorSet {
        self.directions.generators()
    }

    /// Number of fine degrees of pattern σ in coarse degree `d`.
    pub fn count(&self, d: &DegreeVector) -> Dim {
        let target = d - &self.offset;
        if self.directions.is_pointed() {
            match self.directions.count_representations(&target) {
                Ok(n) => Dim::Finite(n),
                Err(e) => Dim::Unknown(e.to_string()),
            }
        } else {
            match self.directions.contains(&target) {
                Decision::Yes => Dim::Infinite,
                Decision::No => Dim::zero(),
                Decision::Unknown(r) => Dim::Unknown(r),
            }
        }
    }
}

/// Local cohomology of shifted free modules with respect to one monomial
/// ideal. Built once; all queries are pure.
#[derive(Clone, Debug)]
pub struct LocalCohomology {
    ideal: MonomialIdeal,
    field: Field,
    rank: usize,
    config: GeneratorSet,
    names: Vec<String>,
    patterns: Vec<Pattern>,
    by_index: Vec<Vec<usize>>,
}

impl LocalCohomology {
    /// Cohomology with respect to the ring's irrelevant ideal over ℚ.
    pub fn for_ring(ring: &GradedRing) -> Result<Self> {
        Self::new(ring, ring.irrelevant_ideal(), Field::Rational)
    }

    pub fn new(ring: &GradedRing, ideal: &MonomialIdeal, field: Field) -> Result<Self> {
        let n = ring.nvars();
        if n > PATTERN_VARIABLE_CAP {
            return Err(Error::CapExceeded { what: "variables for sign patterns".into(), size: n, cap: PATTERN_VARIABLE_CAP });
        }
        if ideal.nvars() != n {
            return Err(Error::RankMismatch { expected: n, found: ideal.nvars() });
        }
        let degrees = ring.degrees();
        let rank = ring.rank();
        let neg_config: Vec<DegreeVector> = ring.config().iter().map(|c| -c).collect();
        let cap = crate::caps::enum_cap();
        let support = ideal.support();
        let mut patterns = Vec::new();
        let mut sigma = 0u64;
        loop {
            let h = pattern_cohomology(ideal, sigma, field)?;
            if h.iter().any(|&x| x > 0) {
                let mut offset = DegreeVector::zero(rank);
                let mut dirs = Vec::with_capacity(n);
                for (k, a) in degrees.iter().enumerate() {
                    if sigma >> k & 1 == 1 {
                        offset = &offset - a;
                        dirs.push(-a);
                    } else {
                        dirs.push(a.clone());
                    }
                }
                let extended: Vec<DegreeVector> = dirs.iter().cloned().chain(neg_config.iter().cloned()).collect();
                patterns.push(Pattern {
                    sigma,
                    h,
                    offset,
                    directions: Arc::new(AffineSemigroup::new(GeneratorSet::new(rank, dirs)?)?.with_cap(cap)),
                    extended: Arc::new(AffineSemigroup::new(GeneratorSet::new(rank, extended)?)?.with_cap(cap)),
                });
            }
            // Next submask of the ideal's support.
            if sigma == support {
                break;
            }
            sigma = ((sigma | !support).wrapping_add(1)) & support;
        }
        let top = patterns.iter().map(|p| p.h.len()).max().unwrap_or(0);
        let by_index = (0..top)
            .map(|i| (0..patterns.len()).filter(|&k| patterns[k].multiplicity(i) > 0).collect())
            .collect();
        Ok(LocalCohomology {
            ideal: ideal.clone(),
            field,
            rank,
            config: ring.config().clone(),
            names: ring.variable_names(),
            patterns,
            by_index,
        })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn config(&self) -> &GeneratorSet {
        &self.config
    }

    /// Largest i with `H^i(S) ≠ 0`, if any.
    pub fn max_index(&self) -> Option<usize> {
        (0..self.by_index.len()).rev().find(|&i| !self.by_index[i].is_empty())
    }

    /// Patterns contributing to `H^i`.
    pub fn support(&self, i: usize) -> Vec<&Pattern> {
        self.by_index.get(i).map_or_else(Vec::new, |ks| ks.iter().map(|&k| &self.patterns[k]).collect())
    }

    pub fn pattern_names(&self, sigma: SignPattern) -> String {
        let names: Vec<&str> =
            (0..self.names.len()).filter(|k| sigma >> k & 1 == 1).map(|k| self.names[k].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }

    /// `dim H^i(⊕ S(−e))_d`.
    pub fn free_dim(&self, shifts: &[DegreeVector], i: usize, d: &DegreeVector) -> Dim {
        shifts.iter().fold(Dim::zero(), |acc, e| acc.plus(self.piece_dim(i, &(d - e))))
    }

    /// `dim H^i(S)_d`.
    pub fn piece_dim(&self, i: usize, d: &DegreeVector) -> Dim {
        self.support(i).into_iter().fold(Dim::zero(), |acc, p| acc.plus(p.count(d).scale(p.multiplicity(i))))
    }

    /// Per-pattern contributions to `H^i(S(−e))_d`.
    pub fn contributions(&self, i: usize, e: &DegreeVector, d: &DegreeVector) -> Vec<(SignPattern, usize, Dim)> {
        let t = d - e;
        self.support(i)
            .into_iter()
            .map(|p| (p.sigma, p.multiplicity(i), p.count(&t)))
            .filter(|(_, _, c)| c.is_zero() != Some(true))
            .collect()
    }

    /// Is `d` in the support of `H^j(S(−e))`?
    pub fn in_support(&self, j: usize, e: &DegreeVector, d: &DegreeVector) -> Decision {
        let t = d - e;
        self.support(j).into_iter().fold(Decision::No, |acc, p| acc.or(p.directions.contains(&(&t - &p.offset))))
    }

    /// Does `m + ℕC[k]` meet the support of `H^j(S(−e))`?
    pub fn meets(&self, j: usize, e: &DegreeVector, k: i64, m: &DegreeVector) -> Decision {
        let pieces = self.support(j);
        if pieces.is_empty() {
            return Decision::No;
        }
        let sign = k.signum();
        let ws: Vec<DegreeVector> =
            compositions(k.unsigned_abs(), self.config.len()).iter().map(|w| &combine(&self.config, w) * sign).collect();
        let base = m - e;
        let mut out = Decision::No;
        for p in pieces {
            let b = &base - &p.offset;
            for w in &ws {
                out = out.or(p.extended.contains(&(&b + w)));
                if out.is_yes() {
                    return out;
                }
            }
        }
        out
    }

    /// True iff the support of `H^j(S(−e))` misses `{x : v·x ≥ t}`.
    pub fn avoids_halfplane(&self, j: usize, e: &DegreeVector, v: &DegreeVector, t: i64) -> bool {
        self.support(j).into_iter().all(|p| {
            p.directions().iter().all(|g| v.dot(g) <= 0) && v.dot(&(p.offset() + e)) < t
        })
    }
}

/// Module data accepted by the vanishing tests.
///
/// For `Free` every answer is exact. For `Resolution` the answers come from
/// the resolution and are one-directional: `Yes` certifies vanishing, `No`
/// only means "not certified".
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleData {
    Free(Vec<DegreeVector>),
    Resolution(ResolutionTypeJ),
}

impl ModuleData {
    /// The module S.
    pub fn ring(rank: usize) -> ModuleData {
        ModuleData::Free(vec![DegreeVector::zero(rank)])
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, ModuleData::Free(_))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ModuleData::Free(s) => s.is_empty(),
            ModuleData::Resolution(j) => j.is_zero(),
        }
    }

    /// `(p, J_p)` pairs; a free module is its own level 0.
    pub fn levels(&self) -> Vec<(usize, &[DegreeVector])> {
        match self {
            ModuleData::Free(s) => vec![(0, s.as_slice())],
            ModuleData::Resolution(j) => j.levels().iter().enumerate().map(|(p, l)| (p, l.as_slice())).collect(),
        }
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        for (_, level) in self.levels() {
            for d in level {
                d.ensure_rank(rank)?;
            }
        }
        Ok(())
    }

    /// `Yes` iff `H^j(M)_d = 0` is established.
    pub fn vanishes(&self, eng: &LocalCohomology, j: usize, d: &DegreeVector) -> Decision {
        self.for_levels(eng, j, |idx, e| eng.in_support(idx, e, d).negate())
    }

    /// `Yes` iff `(m + ℕC[k]) ∩ supp H^j(M) = ∅` is established.
    pub fn avoids_translate(&self, eng: &LocalCohomology, j: usize, k: i64, m: &DegreeVector) -> Decision {
        self.for_levels(eng, j, |idx, e| eng.meets(idx, e, k, m).negate())
    }

    /// `Yes` iff `H^j(M)_d = 0` for all `d` with `v·d ≥ t` is established.
    pub fn avoids_halfplane(&self, eng: &LocalCohomology, j: usize, v: &DegreeVector, t: i64) -> Decision {
        self.for_levels(eng, j, |idx, e| Decision::from_bool(eng.avoids_halfplane(idx, e, v, t)))
    }

    fn for_levels(&self, eng: &LocalCohomology, j: usize, test: impl Fn(usize, &DegreeVector) -> Decision) -> Decision {
        let top = eng.max_index();
        let mut out = Decision::Yes;
        for (p, level) in self.levels() {
            let idx = j + p;
            if top.is_none_or(|t| idx > t) {
                continue;
            }
            for e in level {
                out = out.and(test(idx, e));
                if out.is_no() {
                    return out;
                }
            }
        }
        out
    }

    /// `Yes` iff `m ∈ reg_{B,C}(M)` is established.
    pub fn regular(&self, eng: &LocalCohomology, m: &DegreeVector) -> Decision {
        let Some(top) = eng.max_index() else { return Decision::Yes };
        let mut out = Decision::Yes;
        for i in 0..=top {
            out = out.and(self.avoids_translate(eng, i, 1 - i as i64, m));
            if out.is_no() {
                break;
            }
        }
        out
    }
}

impl fmt::Display for ModuleData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleData::Free(s) => {
                let parts: Vec<String> = s.iter().map(|e| format!("S(-{e})")).collect();
                if parts.is_empty() {
                    write!(f, "0")
                } else {
                    write!(f, "{}", parts.join(" + "))
                }
            }
            ModuleData::Resolution(j) => write!(f, "resolution of type {j}"),
        }
    }
}

/// `dim H^i(⊕ S(−e))_d` for the ring's irrelevant ideal.
pub fn coh_free_piece(eng: &LocalCohomology, shifts: &[DegreeVector], i: usize, d: &DegreeVector) -> Dim {
    eng.free_dim(shifts, i, d)
}

/// Choice of regions `V^j ⊆ 𝒵^j_B(S)` used to propagate vanishing along a
/// resolution.
pub trait VanishingRegions {
    /// `Yes` iff `d ∈ V^j`.
    fn vanishes(&self, j: usize, d: &DegreeVector) -> Decision;
}

impl VanishingRegions for LocalCohomology {
    fn vanishes(&self, j: usize, d: &DegreeVector) -> Decision {
        if self.max_index().is_none_or(|t| j > t) {
            return Decision::Yes;
        }
        self.in_support(j, &DegreeVector::zero(self.rank), d).negate()
    }
}

/// Regions `V^j = {d : a·d ≥ b for all listed (a, b)} ∩ 𝒵^j_B(S)`.
/// Indices without constraints use the full vanishing set.
pub struct PolyhedralVanishing<'a> {
    exact: &'a LocalCohomology,
    constraints: std::collections::BTreeMap<usize, Vec<(DegreeVector, i64)>>,
}

impl<'a> PolyhedralVanishing<'a> {
    pub fn new(exact: &'a LocalCohomology) -> Self {
        PolyhedralVanishing { exact, constraints: Default::default() }
    }

    /// Restricts `V^j` to the half-space `a·d ≥ b`.
    pub fn restrict(mut self, j: usize, a: DegreeVector, b: i64) -> Self {
        self.constraints.entry(j).or_default().push((a, b));
        self
    }
}

impl VanishingRegions for PolyhedralVanishing<'_> {
    fn vanishes(&self, j: usize, d: &DegreeVector) -> Decision {
        let inside = self.constraints.get(&j).is_none_or(|cs| cs.iter().all(|(a, b)| a.dot(d) >= *b));
        if inside {
            self.exact.vanishes(j, d)
        } else {
            Decision::No
        }
    }
}

/// `Yes` iff `d ∈ ⋂_p ⋂_{𝐝 ∈ J_p} (𝐝 + V^{i+p})`, which certifies
/// `H^i_B(M)_d = 0` for every module with a resolution of type J.
pub fn resolution_vanishing(
    j: &ResolutionTypeJ,
    i: usize,
    d: &DegreeVector,
    regions: &dyn VanishingRegions,
) -> Decision {
    let mut out = Decision::Yes;
    for (p, level) in j.levels().iter().enumerate() {
        for dp in level {
            out = out.and(regions.vanishes(i + p, &(d - dp)));
            if out.is_no() {
                return out;
            }
        }
    }
    out
}

/// Engines for every `B_I = Σ_{i∈I} B_i`, keyed by the bitmask of I.
pub fn family_engines(ring: &GradedRing, ideals: &[MonomialIdeal], field: Field) -> Result<Vec<(u64, LocalCohomology)>> {
    if ideals.len() > 16 {
        return Err(Error::CapExceeded { what: "ideals in a family".into(), size: ideals.len(), cap: 16 });
    }
    let mut out = Vec::new();
    for mask in 1u64..(1 << ideals.len()) {
        let mut sum = MonomialIdeal::zero(ring.nvars());
        for (k, b) in ideals.iter().enumerate() {
            if mask >> k & 1 == 1 {
                sum = sum.sum(b)?;
            }
        }
        out.push((mask, LocalCohomology::new(ring, &sum, field)?));
    }
    Ok(out)
}

/// `Yes` iff `H^{i+#I−1}_{B_I}(M)_d = 0` is established for every nonempty
/// I, which certifies `H^i_B(M)_d = 0` when V(B) = ⋃ V(B_k).
pub fn mv_vanishing(engines: &[(u64, LocalCohomology)], module: &ModuleData, i: usize, d: &DegreeVector) -> Decision {
    let mut out = Decision::Yes;
    for (mask, eng) in engines {
        let j = i + mask.count_ones() as usize - 1;
        out = out.and(module.vanishes(eng, j, d));
        if out.is_no() {
            return out;
        }
    }
    out
}

/// A cohomology report entry for `H^i(M)_d`.
#[derive(Clone, Debug)]
pub struct PieceReport {
    pub i: usize,
    pub d: DegreeVector,
    pub dim: Dim,
    /// (pattern, h^i(σ), shift, fine-degree count)
    pub contributions: Vec<(String, usize, DegreeVector, Dim)>,
}

impl PieceReport {
    pub fn new(eng: &LocalCohomology, shifts: &[DegreeVector], i: usize, d: &DegreeVector) -> Self {
        let mut contributions = Vec::new();
        for e in shifts {
            for (sigma, h, c) in eng.contributions(i, e, d) {
                contributions.push((eng.pattern_names(sigma), h, e.clone(), c));
            }
        }
        PieceReport { i, d: d.clone(), dim: eng.free_dim(shifts, i, d), contributions }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "i": self.i,
            "d": self.d,
            "dim": self.dim.to_json(),
            "contributions": self.contributions.iter().map(|(s, h, e, c)| json!({
                "sigma": s, "h": h, "shift": e, "count": c.to_json()
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for PieceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H^{} in degree {}: {}", self.i, self.d, self.dim)?;
        for (s, h, e, c) in &self.contributions {
            write!(f, "\n  sigma={s} h={h} shift={e} count={c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::catalog;

    fn d<const N: usize>(c: [i64; N]) -> DegreeVector {
        DegreeVector::from(c)
    }

    #[test]
    fn standard_top_cohomology() {
        let ring = catalog::standard(3).unwrap();
        let eng = LocalCohomology::for_ring(&ring).unwrap();
        let s = vec![d([0])];
        assert_eq!(eng.free_dim(&s, 3, &d([-3])), Dim::finite(1));
        assert_eq!(eng.free_dim(&s, 3, &d([-4])), Dim::finite(3));
        assert_eq!(eng.free_dim(&s, 3, &d([-2])), Dim::zero());
        for i in 0..3 {
            assert_eq!(eng.free_dim(&s, i, &d([-5])), Dim::zero());
        }
        let sup = eng.support(3);
        assert_eq!(sup.len(), 1);
        assert_eq!(sup[0].offset(), &d([-3]));
        assert_eq!(eng.max_index(), Some(3));
    }

    #[test]
    fn product_line_supports() {
        let ring = catalog::multiprojective(&[1, 1]).unwrap();
        let eng = LocalCohomology::for_ring(&ring).unwrap();
        let sup = eng.support(2);
        let offsets: Vec<_> = sup.iter().map(|p| p.offset().clone()).collect();
        assert_eq!(offsets, vec![d([-2, 0]), d([0, -2])]);
        assert_eq!(sup[0].directions().vectors(), &[d([-1, 0]), d([-1, 0]), d([0, 1]), d([0, 1])]);
        assert!(eng.support(0).is_empty());
        // H^3 comes from σ = all four variables.
        assert_eq!(eng.piece_dim(3, &d([-2, -2])), Dim::finite(1));
    }

    #[test]
    fn shift_identity() {
        let ring = catalog::hirzebruch(2).unwrap();
        let eng = LocalCohomology::for_ring(&ring).unwrap();
        let e = d([1, -1]);
        for x in -3..3 {
            for y in -3..3 {
                for i in 0..4 {
                    let t = d([x, y]);
                    assert_eq!(eng.free_dim(std::slice::from_ref(&e), i, &t), eng.piece_dim(i, &(&t - &e)));
                }
            }
        }
    }

    #[test]
    fn meets_matches_direct_scan() {
        let ring = catalog::multiprojective(&[1, 1]).unwrap();
        let eng = LocalCohomology::for_ring(&ring).unwrap();
        // (−1,0) + ℕC[−1] contains (−2,0), where H^2 is nonzero.
        assert!(eng.meets(2, &d([0, 0]), -1, &d([-1, 0])).is_yes());
        assert!(eng.meets(2, &d([0, 0]), -1, &d([0, 0])).is_no());
        assert!(ModuleData::ring(2).regular(&eng, &d([0, 0])).is_yes());
        assert!(ModuleData::ring(2).regular(&eng, &d([-1, 0])).is_no());
    }

    #[test]
    fn resolution_certificate() {
        let ring = catalog::multiprojective(&[1, 1]).unwrap();
        let eng = LocalCohomology::for_ring(&ring).unwrap();
        let j: ResolutionTypeJ = "0:{(1,1),(1,1)};1:{(1,2)}".parse().unwrap();
        assert!(resolution_vanishing(&j, 1, &d([5, 5]), &eng).is_yes());
        let classical = catalog::standard(2).unwrap();
        let eng = LocalCohomology::for_ring(&classical).unwrap();
        let m = 2;
        let j = ResolutionTypeJ::new((0..3).map(|p| vec![d([m + p])]).collect());
        for i in 0..3usize {
            for deg in -6..8 {
                let certified = resolution_vanishing(&j, i, &d([deg]), &eng).is_yes();
                if i as i64 + deg > m {
                    assert!(certified, "i={i} d={deg}");
                }
            }
        }
    }

    #[test]
    fn mayer_vietoris_examples() {
        let ring = catalog::multiprojective(&[1, 1]).unwrap();
        let b1 = MonomialIdeal::variables(4, &[0, 1]).unwrap();
        let b2 = MonomialIdeal::variables(4, &[2, 3]).unwrap();
        let engines = family_engines(&ring, &[b1, b2], Field::Rational).unwrap();
        let s = ModuleData::ring(2);
        assert!(mv_vanishing(&engines, &s, 1, &d([-2, 0])).is_yes());
        assert!(mv_vanishing(&engines, &s, 2, &d([-2, 0])).is_no());
        let direct = LocalCohomology::for_ring(&ring).unwrap();
        assert_eq!(direct.piece_dim(2, &d([-2, 0])), Dim::finite(1));
    }

    #[test]
    fn polyhedral_regions_are_subsets() {
        let ring = catalog::standard(2).unwrap();
        let eng = LocalCohomology::for_ring(&ring).unwrap();
        let v = PolyhedralVanishing::new(&eng).restrict(2, d([1]), 0);
        assert!(v.vanishes(2, &d([0])).is_yes());
        assert!(v.vanishes(2, &d([-1])).is_no());
        assert!(eng.vanishes(2, &d([-1])).is_yes());
        assert!(eng.vanishes(2, &d([-2])).is_no());
    }
}
