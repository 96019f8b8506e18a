//! Finitely generated ℕC-module regions and the correspondence between
//! resolution degrees and regularity regions.
//!
//! A [`SemigroupRegion`] denotes `⋃_g (g + ℕC)` over a minimal generator
//! list. All operations keep generators minimal and sorted, so equal regions
//! have equal representations.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{combine, compositions, AffineSemigroup, DegreeVector, GeneratorSet};
use crate::linalg::solve_independent;

/// Points enumerated per principal intersection before falling back to a
/// window-verified answer.
pub const INTERSECTION_POINT_CAP: usize = 200_000;

/// Whether a region is known to be complete.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Exactness {
    Exact,
    /// Generators verified only up to bound `T`: a φ-level for
    /// intersections, a box half-width for window scans.
    Window(i64),
}

impl Exactness {
    pub fn meet(self, other: Exactness) -> Exactness {
        match (self, other) {
            (Exactness::Exact, e) | (e, Exactness::Exact) => e,
            (Exactness::Window(a), Exactness::Window(b)) => Exactness::Window(a.min(b)),
        }
    }
}

impl fmt::Display for Exactness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exactness::Exact => write!(f, "exact"),
            Exactness::Window(t) => write!(f, "window:{t}"),
        }
    }
}

/// A finitely generated ℕC-module inside G.
#[derive(Clone)]
pub struct SemigroupRegion {
    base: Arc<AffineSemigroup>,
    generators: Vec<DegreeVector>,
    exactness: Exactness,
}

impl fmt::Debug for SemigroupRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Region{:?}[{}]", self.generators, self.exactness)
    }
}

impl PartialEq for SemigroupRegion {
    fn eq(&self, other: &Self) -> bool {
        same_base(&self.base, &other.base) && self.generators == other.generators
    }
}

fn same_base(a: &Arc<AffineSemigroup>, b: &Arc<AffineSemigroup>) -> bool {
    Arc::ptr_eq(a, b) || a.generators() == b.generators()
}

impl SemigroupRegion {
    /// The region generated by `generators`, minimalized.
    pub fn new(base: Arc<AffineSemigroup>, generators: Vec<DegreeVector>) -> Result<Self> {
        if !base.is_pointed() {
            return Err(Error::NotPointed("region base semigroup".into()));
        }
        for g in &generators {
            g.ensure_rank(base.rank())?;
        }
        let generators = minimalize(&base, generators)?;
        Ok(SemigroupRegion { base, generators, exactness: Exactness::Exact })
    }

    pub fn empty(base: Arc<AffineSemigroup>) -> Self {
        SemigroupRegion { base, generators: Vec::new(), exactness: Exactness::Exact }
    }

    /// ℕC itself.
    pub fn semigroup(base: Arc<AffineSemigroup>) -> Result<Self> {
        let r = base.rank();
        SemigroupRegion::new(base, vec![DegreeVector::zero(r)])
    }

    pub fn base(&self) -> &Arc<AffineSemigroup> {
        &self.base
    }

    pub fn base_generators(&self) -> &GeneratorSet {
        self.base.generators()
    }

    pub fn generators(&self) -> &[DegreeVector] {
        &self.generators
    }

    pub fn exactness(&self) -> Exactness {
        self.exactness
    }

    pub fn is_exact(&self) -> bool {
        self.exactness == Exactness::Exact
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.base.rank()
    }

    pub fn with_exactness(mut self, exactness: Exactness) -> Self {
        self.exactness = exactness;
        self
    }

    fn check_base(&self, other: &SemigroupRegion) -> Result<()> {
        if same_base(&self.base, &other.base) {
            Ok(())
        } else {
            Err(Error::BaseMismatch)
        }
    }

    /// `d + R`.
    pub fn translate(&self, d: &DegreeVector) -> Result<Self> {
        d.ensure_rank(self.rank())?;
        let mut generators: Vec<DegreeVector> = self.generators.iter().map(|g| g + d).collect();
        generators.sort();
        Ok(SemigroupRegion { base: self.base.clone(), generators, exactness: self.exactness })
    }

    /// Union of a nonempty list of regions over a common base.
    pub fn union(regions: &[SemigroupRegion]) -> Result<Self> {
        let first = regions.first().ok_or_else(|| Error::Invalid("union of no regions".into()))?;
        let mut gens = Vec::new();
        let mut exactness = Exactness::Exact;
        for r in regions {
            first.check_base(r)?;
            gens.extend(r.generators.iter().cloned());
            exactness = exactness.meet(r.exactness);
        }
        Ok(SemigroupRegion::new(first.base.clone(), gens)?.with_exactness(exactness))
    }

    /// Intersection, distributing over generators.
    pub fn intersect(&self, other: &SemigroupRegion) -> Result<Self> {
        self.check_base(other)?;
        let mut gens = Vec::new();
        let mut exactness = self.exactness.meet(other.exactness);
        for a in &self.generators {
            for b in &other.generators {
                let (pts, ex) = principal_intersection(&self.base, a, b)?;
                gens.extend(pts);
                exactness = exactness.meet(ex);
            }
        }
        Ok(SemigroupRegion::new(self.base.clone(), gens)?.with_exactness(exactness))
    }

    /// Intersection of a list; `None` when the list is empty (all of G).
    pub fn intersect_all<'a, I>(regions: I) -> Result<Option<SemigroupRegion>>
    where
        I: IntoIterator<Item = &'a SemigroupRegion>,
    {
        let mut acc: Option<SemigroupRegion> = None;
        for r in regions {
            acc = Some(match acc {
                None => r.clone(),
                Some(a) => a.intersect(r)?,
            });
            if acc.as_ref().is_some_and(SemigroupRegion::is_empty) {
                break;
            }
        }
        Ok(acc)
    }

    /// Exact membership `d ∈ R`.
    pub fn contains_point(&self, d: &DegreeVector) -> Result<bool> {
        d.ensure_rank(self.rank())?;
        for g in &self.generators {
            let diff = d - g;
            if self.base.level(&diff) >= 0 && self.base.contains_exact(&diff)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// `other ⊆ self`.
    pub fn contains_region(&self, other: &SemigroupRegion) -> Result<bool> {
        self.check_base(other)?;
        for g in &other.generators {
            if !self.contains_point(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Minkowski sum `R + R'`.
    pub fn sum(&self, other: &SemigroupRegion) -> Result<Self> {
        self.check_base(other)?;
        let gens = self
            .generators
            .iter()
            .flat_map(|a| other.generators.iter().map(move |b| a + b))
            .collect();
        Ok(SemigroupRegion::new(self.base.clone(), gens)?.with_exactness(self.exactness.meet(other.exactness)))
    }

    /// `R + ℕC[k]`.
    pub fn plus_shifted(&self, k: i64) -> Result<Self> {
        self.sum(&crate::lattice::shifted_region(&self.base, k)?)
    }

    /// The largest region `X` with `X + ℕC[k] ⊆ R`, that is
    /// `⋂_{|w|=|k|} (R − sign(k)·Σ w_i c_i)`.
    pub fn residual(&self, k: i64) -> Result<Self> {
        let gens = self.base.generators();
        let sign = if k < 0 { -1 } else { 1 };
        let translates: Vec<SemigroupRegion> = compositions(k.unsigned_abs(), gens.len())
            .into_iter()
            .map(|w| self.translate(&(&combine(gens, &w) * (-sign))))
            .collect::<Result<_>>()?;
        Ok(SemigroupRegion::intersect_all(&translates)?.unwrap_or_else(|| self.clone()))
    }

    /// Points of the region inside a box.
    pub fn points_in(&self, window: &DegreeBox) -> Result<Vec<DegreeVector>> {
        window.points().into_iter().filter_map(|p| self.contains_point(&p).map(|b| b.then_some(p)).transpose()).collect()
    }

    /// Structured text dump shared with the command-line interface.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        s.push_str("region\n");
        s.push_str(&format!(
            "  base_C: {}\n",
            self.base.generators().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
        ));
        s.push_str(&format!("  generators: {}\n", self.generators.len()));
        for g in &self.generators {
            s.push_str(&format!("    {g}\n"));
        }
        s.push_str(&format!("  exactness: {}\n", self.exactness));
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "base_C": self.base.generators().vectors(),
            "generators": self.generators,
            "exactness": self.exactness.to_string(),
        })
    }
}

/// Drops duplicates and generators lying in `g' + ℕC` for another `g'`.
fn minimalize(base: &AffineSemigroup, mut gens: Vec<DegreeVector>) -> Result<Vec<DegreeVector>> {
    gens.sort();
    gens.dedup();
    // Visit in increasing φ-level: a generator can only be dominated by one of
    // lower level.
    let mut order: Vec<usize> = (0..gens.len()).collect();
    order.sort_by_key(|&i| (base.level(&gens[i]), i));
    let mut kept: Vec<DegreeVector> = Vec::new();
    for i in order {
        let g = &gens[i];
        let mut dominated = false;
        for k in &kept {
            let diff = g - k;
            if base.level(&diff) >= 0 && base.contains_exact(&diff)? {
                dominated = true;
                break;
            }
        }
        if !dominated {
            kept.push(g.clone());
        }
    }
    kept.sort();
    Ok(kept)
}

/// Generators of `(a + ℕC) ∩ (b + ℕC)`.
fn principal_intersection(
    base: &Arc<AffineSemigroup>,
    a: &DegreeVector,
    b: &DegreeVector,
) -> Result<(Vec<DegreeVector>, Exactness)> {
    let gens = base.generators();
    let diff = b - a;
    if gens.is_linearly_independent() {
        let cols = gens.coord_rows();
        let Some(delta) = solve_independent(&cols, diff.coords()) else {
            return Ok((Vec::new(), Exactness::Exact));
        };
        if delta.iter().any(|q| !q.is_integer()) {
            return Ok((Vec::new(), Exactness::Exact));
        }
        let mut x = a.clone();
        for (c, q) in gens.iter().zip(&delta) {
            if q.is_positive() {
                let k = q.to_integer().to_i64().ok_or_else(|| Error::Invalid("intersection offset overflow".into()))?;
                x = &x + &(c * k);
            }
        }
        return Ok((vec![x], Exactness::Exact));
    }
    general_principal_intersection(base, a, b)
}

/// Enumerates `a + ℕC` up to the φ-level that bounds every minimal solution
/// of `a + Cu = b + Cw`. The bound on `|u|_1 + |w|_1 + 1` is
/// `(1 + max_i Σ_j |A_ij|)^r` for `A = [C | −C | −(b−a)]`.
fn general_principal_intersection(
    base: &Arc<AffineSemigroup>,
    a: &DegreeVector,
    b: &DegreeVector,
) -> Result<(Vec<DegreeVector>, Exactness)> {
    let gens = base.generators();
    let r = base.rank();
    let diff = b - a;
    let row_norm = (0..r)
        .map(|i| {
            let s: i128 = gens.iter().map(|c| 2 * c.coords()[i].unsigned_abs() as i128).sum();
            s + diff.coords()[i].unsigned_abs() as i128
        })
        .max()
        .unwrap_or(0);
    let bound: Option<i128> = (1 + row_norm).checked_pow(r as u32);
    let max_phi = gens.iter().map(|c| base.level(c)).max().unwrap_or(1) as i128;
    let target_level: Option<i64> = bound
        .and_then(|p| (p - 1).checked_mul(max_phi))
        .and_then(|t| t.checked_add(base.level(a) as i128))
        .and_then(|t| i64::try_from(t).ok());

    let start_level = base.level(a);
    let limit = target_level.unwrap_or(i64::MAX);
    let mut seen: HashSet<DegreeVector> = HashSet::new();
    let mut by_level: std::collections::BTreeMap<i64, Vec<DegreeVector>> = Default::default();
    seen.insert(a.clone());
    by_level.entry(start_level).or_default().push(a.clone());
    let mut found = Vec::new();
    let mut complete_to = start_level - 1;
    let mut capped = false;
    while let Some((&level, _)) = by_level.iter().next() {
        if level > limit {
            break;
        }
        if seen.len() > INTERSECTION_POINT_CAP {
            capped = true;
            break;
        }
        let current = by_level.remove(&level).unwrap_or_default();
        for p in &current {
            let q = p - b;
            if base.level(&q) >= 0 && base.contains_exact(&q)? {
                found.push(p.clone());
            }
            for c in gens.iter() {
                let next = p + c;
                if seen.insert(next.clone()) {
                    by_level.entry(base.level(&next)).or_default().push(next);
                }
            }
        }
        complete_to = level;
    }
    let exactness = if capped { Exactness::Window(complete_to) } else { Exactness::Exact };
    Ok((found, exactness))
}

/// A finite integer box `lo ≤ d ≤ hi` (coordinatewise).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeBox {
    pub lo: DegreeVector,
    pub hi: DegreeVector,
}

impl DegreeBox {
    pub fn new(lo: DegreeVector, hi: DegreeVector) -> Result<Self> {
        if lo.rank() != hi.rank() {
            return Err(Error::RankMismatch { expected: lo.rank(), found: hi.rank() });
        }
        Ok(DegreeBox { lo, hi })
    }

    /// `[lo, hi]^rank`.
    pub fn cube(rank: usize, lo: i64, hi: i64) -> Self {
        DegreeBox { lo: DegreeVector::new(vec![lo; rank]), hi: DegreeVector::new(vec![hi; rank]) }
    }

    pub fn rank(&self) -> usize {
        self.lo.rank()
    }

    pub fn contains(&self, d: &DegreeVector) -> bool {
        d.rank() == self.rank()
            && d.coords().iter().zip(self.lo.coords()).zip(self.hi.coords()).all(|((x, l), h)| l <= x && x <= h)
    }

    /// Smallest distance from the origin to the box boundary, floored at 0.
    pub fn radius(&self) -> i64 {
        self.lo.coords().iter().map(|l| -l).chain(self.hi.coords().iter().copied()).min().unwrap_or(0).max(0)
    }

    /// All lattice points, lexicographically ordered.
    pub fn points(&self) -> Vec<DegreeVector> {
        let mut out = vec![Vec::new()];
        for (l, h) in self.lo.coords().iter().zip(self.hi.coords()) {
            out = out
                .into_iter()
                .flat_map(|p| {
                    (*l..=*h).map(move |x| {
                        let mut q = p.clone();
                        q.push(x);
                        q
                    })
                })
                .collect();
        }
        out.into_iter().map(DegreeVector::new).collect()
    }
}

impl FromStr for DegreeBox {
    type Err = Error;

    /// `lo..hi` applied to every coordinate (rank set later via
    /// [`DegreeBox::cube`]), or `(l1,l2)..(h1,h2)`.
    fn from_str(s: &str) -> Result<Self> {
        let (l, h) = s
            .split_once("..")
            .ok_or_else(|| Error::Invalid(format!("window '{s}' must have the form lo..hi")))?;
        Ok(DegreeBox { lo: l.parse()?, hi: h.parse()? })
    }
}

/// The multisets of shift degrees J_0, …, J_s of a free resolution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionTypeJ {
    levels: Vec<Vec<DegreeVector>>,
}

impl ResolutionTypeJ {
    /// Levels are stored sorted; trailing empty levels are dropped.
    pub fn new(mut levels: Vec<Vec<DegreeVector>>) -> Self {
        for l in levels.iter_mut() {
            l.sort();
        }
        while levels.len() > 1 && levels.last().is_some_and(Vec::is_empty) {
            levels.pop();
        }
        ResolutionTypeJ { levels }
    }

    /// The type of the free module `⊕ S(−d)` alone.
    pub fn free(shifts: Vec<DegreeVector>) -> Self {
        ResolutionTypeJ::new(vec![shifts])
    }

    pub fn levels(&self) -> &[Vec<DegreeVector>] {
        &self.levels
    }

    pub fn level(&self, p: usize) -> &[DegreeVector] {
        self.levels.get(p).map_or(&[], Vec::as_slice)
    }

    /// Index of the last level.
    pub fn length(&self) -> usize {
        self.levels.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.levels.iter().all(Vec::is_empty)
    }

    /// `J ⊆ J'` levelwise (as sets).
    pub fn is_contained_in(&self, other: &ResolutionTypeJ) -> bool {
        self.levels.iter().enumerate().all(|(p, l)| {
            let o: HashSet<&DegreeVector> = other.level(p).iter().collect();
            l.iter().all(|d| o.contains(d))
        })
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        self.levels.iter().flatten().try_for_each(|d| d.ensure_rank(rank))
    }
}

impl fmt::Display for ResolutionTypeJ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .levels
            .iter()
            .enumerate()
            .map(|(p, l)| format!("{p}:{{{}}}", l.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "{}", parts.join(";"))
    }
}

impl FromStr for ResolutionTypeJ {
    type Err = Error;

    /// Parses `0:{(0,0)};1:{(1,1),(1,1)}`; for rank one, `0:{3};1:{4,4}`.
    fn from_str(s: &str) -> Result<Self> {
        let mut levels: Vec<Vec<DegreeVector>> = Vec::new();
        for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (idx, body) = part
                .split_once(':')
                .ok_or_else(|| Error::Invalid(format!("level '{part}' must have the form p:{{...}}")))?;
            let p: usize = idx.trim().parse().map_err(|e| Error::Invalid(format!("bad level index '{idx}': {e}")))?;
            let body = body.trim();
            let inner = body
                .strip_prefix('{')
                .and_then(|b| b.strip_suffix('}'))
                .ok_or_else(|| Error::Invalid(format!("level body '{body}' must be wrapped in braces")))?;
            let degrees = parse_degree_list(inner)?;
            if levels.len() <= p {
                levels.resize(p + 1, Vec::new());
            }
            levels[p].extend(degrees);
        }
        if levels.is_empty() {
            return Err(Error::Invalid("empty resolution type".into()));
        }
        Ok(ResolutionTypeJ::new(levels))
    }
}

/// Parses `(1,2),(3,4)` or, for rank one, `1,2,3`.
pub fn parse_degree_list(s: &str) -> Result<Vec<DegreeVector>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if s.contains('(') {
        let mut out = Vec::new();
        let mut rest = s;
        while let Some(open) = rest.find('(') {
            let close = rest[open..]
                .find(')')
                .ok_or_else(|| Error::Invalid(format!("unbalanced parentheses in '{s}'")))?;
            out.push(rest[open..open + close + 1].parse()?);
            rest = &rest[open + close + 1..];
        }
        Ok(out)
    } else {
        s.split(',').map(|p| p.trim().parse::<DegreeVector>()).collect()
    }
}

fn universe_error() -> Error {
    Error::Precondition("the resolution type is empty, so the region is all of G".into())
}

/// reg(J) = X ∩ Y with X = ⋂_{d∈J_0} (d + regS) and
/// Y = ⋂_{p≥1, d∈J_p, j} (d − c_j + regS + ℕC[1−p]).
pub fn reg_of_j(j: &ResolutionTypeJ, reg_s: &SemigroupRegion) -> Result<SemigroupRegion> {
    j.check_rank(reg_s.rank())?;
    let cs = reg_s.base_generators().clone();
    let mut pieces = Vec::new();
    for (p, level) in j.levels().iter().enumerate() {
        if level.is_empty() {
            continue;
        }
        let shifted = reg_s.plus_shifted(1 - p as i64)?;
        let mut seen = HashSet::new();
        for d in level.iter().filter(|d| seen.insert(*d)) {
            if p == 0 {
                pieces.push(reg_s.translate(d)?);
            } else {
                for c in cs.iter() {
                    pieces.push(shifted.translate(&(d - c))?);
                }
            }
        }
    }
    SemigroupRegion::intersect_all(&pieces)?.ok_or_else(universe_error)
}

/// reg^i(J) = {m : m + ℕC[1−i] ⊆ ⋂_{p,d} (d + regS + ℕC[1−i−p])}.
pub fn reg_of_j_level(j: &ResolutionTypeJ, reg_s: &SemigroupRegion, i: usize) -> Result<SemigroupRegion> {
    j.check_rank(reg_s.rank())?;
    let mut pieces = Vec::new();
    for (p, level) in j.levels().iter().enumerate() {
        if level.is_empty() {
            continue;
        }
        let shifted = reg_s.plus_shifted(1 - i as i64 - p as i64)?;
        let mut seen = HashSet::new();
        for d in level.iter().filter(|d| seen.insert(*d)) {
            pieces.push(shifted.translate(d)?);
        }
    }
    let target = SemigroupRegion::intersect_all(&pieces)?.ok_or_else(universe_error)?;
    target.residual(1 - i as i64)
}

/// The downward-closed sets K_p of dreg(D), evaluated pointwise.
#[derive(Clone, Debug)]
pub struct DregFamily {
    d: SemigroupRegion,
    /// `regS + ℕC[−p]` and `regS + ℕC[1−p]` per level.
    shifted: Vec<(SemigroupRegion, SemigroupRegion)>,
}

/// The points of K_p inside a window, with its maximal elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DregLevel {
    pub p: usize,
    pub points: Vec<DegreeVector>,
    /// Points `d` with no `d + c_j` among `points`.
    pub maximal: Vec<DegreeVector>,
    /// `d ∈ K_p` and `d − c_j` in the window imply `d − c_j ∈ K_p`.
    pub downward_closed: bool,
}

impl DregFamily {
    /// Prepares levels `0..=max_p`.
    pub fn new(d: SemigroupRegion, reg_s: &SemigroupRegion, max_p: usize) -> Result<Self> {
        d.check_base(reg_s)?;
        let shifted = (0..=max_p)
            .map(|p| Ok((reg_s.plus_shifted(-(p as i64))?, reg_s.plus_shifted(1 - p as i64)?)))
            .collect::<Result<_>>()?;
        Ok(DregFamily { d, shifted })
    }

    pub fn max_level(&self) -> usize {
        self.shifted.len() - 1
    }

    /// `d ∈ K_p` iff `D ⊆ (d + regS + ℕC[−p]) ∩ ⋂_j (d − c_j + regS + ℕC[1−p])`.
    pub fn contains(&self, p: usize, d: &DegreeVector) -> Result<bool> {
        let (a, b) = self
            .shifted
            .get(p)
            .ok_or_else(|| Error::Invalid(format!("level {p} beyond prepared maximum {}", self.max_level())))?;
        let cs = self.d.base_generators();
        for g in self.d.generators() {
            let rel = g - d;
            if !a.contains_point(&rel)? {
                return Ok(false);
            }
            for c in cs.iter() {
                if !b.contains_point(&(&rel + c))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn enumerate(&self, p: usize, window: &DegreeBox) -> Result<DregLevel> {
        let mut points = Vec::new();
        for x in window.points() {
            if self.contains(p, &x)? {
                points.push(x);
            }
        }
        let set: HashSet<&DegreeVector> = points.iter().collect();
        let cs = self.d.base_generators();
        let maximal = points.iter().filter(|x| cs.iter().all(|c| !set.contains(&(*x + c)))).cloned().collect();
        let downward_closed = points.iter().all(|x| {
            cs.iter().all(|c| {
                let y = x - c;
                !window.contains(&y) || set.contains(&y)
            })
        });
        Ok(DregLevel { p, points, maximal, downward_closed })
    }
}

/// `d ∈ K_p` for the region `D`.
pub fn dreg_membership(d_region: &SemigroupRegion, reg_s: &SemigroupRegion, p: usize, d: &DegreeVector) -> Result<bool> {
    DregFamily::new(d_region.clone(), reg_s, p)?.contains(p, d)
}

/// Window points of K_p; errors if downward closure fails inside the window.
pub fn dreg_enumerate(
    d_region: &SemigroupRegion,
    reg_s: &SemigroupRegion,
    p: usize,
    window: &DegreeBox,
) -> Result<DregLevel> {
    let level = DregFamily::new(d_region.clone(), reg_s, p)?.enumerate(p, window)?;
    if !level.downward_closed {
        return Err(Error::Invariant(format!("K_{p} is not downward closed inside the window")));
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::pointed_semigroup;

    fn base(c: &[&[i64]]) -> Arc<AffineSemigroup> {
        pointed_semigroup(&GeneratorSet::from_coords(c.iter().map(|v| v.to_vec())).unwrap()).unwrap()
    }

    fn region(b: &Arc<AffineSemigroup>, gens: &[&[i64]]) -> SemigroupRegion {
        SemigroupRegion::new(b.clone(), gens.iter().map(|g| DegreeVector::new(g.to_vec())).collect()).unwrap()
    }

    fn dv(v: &[i64]) -> DegreeVector {
        DegreeVector::new(v.to_vec())
    }

    #[test]
    fn translate_union_examples() {
        let b = base(&[&[1, 0], &[0, 1]]);
        assert_eq!(region(&b, &[&[0, 0]]).translate(&dv(&[2, 1])).unwrap().generators(), &[dv(&[2, 1])]);
        let hirz = region(&b, &[&[1, 0], &[0, 1]]);
        assert_eq!(hirz.translate(&dv(&[1, 1])).unwrap().generators(), &[dv(&[1, 2]), dv(&[2, 1])]);
        assert!(SemigroupRegion::empty(b.clone()).translate(&dv(&[1, 1])).unwrap().is_empty());
        let u = SemigroupRegion::union(&[region(&b, &[&[0, 0]]), region(&b, &[&[1, 1]])]).unwrap();
        assert_eq!(u.generators(), &[dv(&[0, 0])]);
        let u = SemigroupRegion::union(&[region(&b, &[&[-2, 0]]), region(&b, &[&[-1, -1]]), region(&b, &[&[0, -2]])])
            .unwrap();
        assert_eq!(u.generators().len(), 3);
    }

    #[test]
    fn intersection_examples() {
        let b1 = base(&[&[1]]);
        let r = region(&b1, &[&[3]]).intersect(&region(&b1, &[&[5]])).unwrap();
        assert_eq!(r.generators(), &[dv(&[5])]);
        let b = base(&[&[1, 0], &[0, 1]]);
        let r = region(&b, &[&[1, 0]]).intersect(&region(&b, &[&[0, 1]])).unwrap();
        assert_eq!(r.generators(), &[dv(&[1, 1])]);
        let r = region(&b, &[&[1, 0], &[0, 1]]).intersect(&region(&b, &[&[0, 0]])).unwrap();
        assert_eq!(r.generators(), &[dv(&[0, 1]), dv(&[1, 0])]);
        assert!(r.is_exact());
    }

    #[test]
    fn non_free_intersection_matches_points() {
        let b = base(&[&[2], &[3]]);
        let x = region(&b, &[&[0]]);
        let y = region(&b, &[&[1]]);
        let r = x.intersect(&y).unwrap();
        assert!(r.is_exact());
        for d in -3..20 {
            let p = dv(&[d]);
            let expect = x.contains_point(&p).unwrap() && y.contains_point(&p).unwrap();
            assert_eq!(r.contains_point(&p).unwrap(), expect, "{d}");
        }
    }

    #[test]
    fn containment_examples() {
        let b = base(&[&[1, 0], &[0, 1]]);
        let n2 = region(&b, &[&[0, 0]]);
        let hirz = region(&b, &[&[1, 0], &[0, 1]]);
        assert!(hirz.contains_point(&dv(&[3, 0])).unwrap());
        assert!(!hirz.contains_point(&dv(&[0, 0])).unwrap());
        assert!(!SemigroupRegion::empty(b.clone()).contains_point(&dv(&[0, 0])).unwrap());
        assert!(n2.contains_region(&region(&b, &[&[2, 2]])).unwrap());
        assert!(!hirz.contains_region(&n2).unwrap());
        let b1 = base(&[&[1]]);
        assert!(region(&b1, &[&[4]]).contains_region(&region(&b1, &[&[5]])).unwrap());
    }

    #[test]
    fn classical_reg_of_j() {
        let b1 = base(&[&[1]]);
        let reg_s = region(&b1, &[&[0]]);
        for m in [-2i64, 0, 3] {
            let j = ResolutionTypeJ::new((0..=4).map(|p| vec![dv(&[m + p])]).collect());
            assert_eq!(reg_of_j(&j, &reg_s).unwrap().generators(), &[dv(&[m])]);
            let r0 = reg_of_j_level(&j, &reg_s, 0).unwrap();
            assert_eq!(r0.generators(), &[dv(&[m])]);
            let r5 = reg_of_j_level(&j, &reg_s, 5).unwrap();
            assert!(r5.contains_region(&r0).unwrap());
        }
        let j = ResolutionTypeJ::free(vec![dv(&[0])]);
        assert_eq!(reg_of_j(&j, &reg_s).unwrap(), reg_s);
    }

    #[test]
    fn classical_dreg() {
        let b1 = base(&[&[1]]);
        let reg_s = region(&b1, &[&[0]]);
        let m = 2;
        let d = region(&b1, &[&[m]]);
        for p in 0..=3usize {
            for x in m - 3..=m + 6 {
                let member = dreg_membership(&d, &reg_s, p, &dv(&[x])).unwrap();
                assert_eq!(member, x <= m + p as i64, "p={p} x={x}");
            }
        }
        let lvl = dreg_enumerate(&d, &reg_s, 1, &DegreeBox::cube(1, m - 3, m + 3)).unwrap();
        assert_eq!(lvl.maximal, vec![dv(&[m + 1])]);
        assert!(dreg_membership(&SemigroupRegion::empty(b1), &reg_s, 0, &dv(&[100])).unwrap());
    }

    #[test]
    fn parse_resolution_type() {
        let j: ResolutionTypeJ = "0:{(0,0)};1:{(1,1),(1,1)};2:{(1,2)}".parse().unwrap();
        assert_eq!(j.level(1).len(), 2);
        assert_eq!(j.to_string(), "0:{(0,0)};1:{(1,1),(1,1)};2:{(1,2)}");
        let j: ResolutionTypeJ = "0:{3};1:{4,4}".parse().unwrap();
        assert_eq!(j.level(1), &[dv(&[4]), dv(&[4])]);
    }
}
