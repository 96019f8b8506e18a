//! Exact arithmetic on the degree group ℤ^r, pointedness certificates,
//! affine-semigroup membership and the shifted regions ℕC[j].

mod hnf;
pub(crate) mod lp;
mod semigroup;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::region::SemigroupRegion;

pub(crate) use hnf::IntLattice;
pub use semigroup::{AffineSemigroup, DEFAULT_SEARCH_CAP};

/// A point of the degree group G = ℤ^r.
///
/// Arithmetic is checked: overflow of `i64` panics instead of wrapping.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeVector(Vec<i64>);

impl DegreeVector {
    pub fn new(coords: Vec<i64>) -> Self {
        DegreeVector(coords)
    }

    pub fn zero(rank: usize) -> Self {
        DegreeVector(vec![0; rank])
    }

    /// The `i`-th standard basis vector of ℤ^rank.
    pub fn unit(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        DegreeVector(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn dot(&self, other: &DegreeVector) -> i64 {
        dot(&self.0, &other.0)
    }

    pub fn checked_add(&self, other: &DegreeVector) -> Option<DegreeVector> {
        if self.rank() != other.rank() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b))
            .collect::<Option<Vec<_>>>()
            .map(DegreeVector)
    }

    pub fn checked_sub(&self, other: &DegreeVector) -> Option<DegreeVector> {
        if self.rank() != other.rank() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(DegreeVector)
    }

    pub fn checked_scale(&self, k: i64) -> Option<DegreeVector> {
        self.0.iter().map(|a| a.checked_mul(k)).collect::<Option<Vec<_>>>().map(DegreeVector)
    }

    pub fn ensure_rank(&self, rank: usize) -> Result<()> {
        if self.rank() == rank {
            Ok(())
        } else {
            Err(Error::RankMismatch { expected: rank, found: self.rank() })
        }
    }
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    let s: i128 = a.iter().zip(b).map(|(x, y)| *x as i128 * *y as i128).sum();
    i64::try_from(s).expect("dot product overflowed i64")
}

fn expect_rank(a: &DegreeVector, b: &DegreeVector) {
    assert_eq!(a.rank(), b.rank(), "degree vectors of different rank");
}

impl Add for &DegreeVector {
    type Output = DegreeVector;
    fn add(self, rhs: &DegreeVector) -> DegreeVector {
        expect_rank(self, rhs);
        self.checked_add(rhs).expect("degree addition overflowed i64")
    }
}

impl Add for DegreeVector {
    type Output = DegreeVector;
    fn add(self, rhs: DegreeVector) -> DegreeVector {
        &self + &rhs
    }
}

impl Sub for &DegreeVector {
    type Output = DegreeVector;
    fn sub(self, rhs: &DegreeVector) -> DegreeVector {
        expect_rank(self, rhs);
        self.checked_sub(rhs).expect("degree subtraction overflowed i64")
    }
}

impl Sub for DegreeVector {
    type Output = DegreeVector;
    fn sub(self, rhs: DegreeVector) -> DegreeVector {
        &self - &rhs
    }
}

impl Neg for &DegreeVector {
    type Output = DegreeVector;
    fn neg(self) -> DegreeVector {
        self.checked_scale(-1).expect("degree negation overflowed i64")
    }
}

impl Neg for DegreeVector {
    type Output = DegreeVector;
    fn neg(self) -> DegreeVector {
        -&self
    }
}

impl Mul<i64> for &DegreeVector {
    type Output = DegreeVector;
    fn mul(self, k: i64) -> DegreeVector {
        self.checked_scale(k).expect("degree scaling overflowed i64")
    }
}

impl From<Vec<i64>> for DegreeVector {
    fn from(v: Vec<i64>) -> Self {
        DegreeVector(v)
    }
}

impl<const N: usize> From<[i64; N]> for DegreeVector {
    fn from(v: [i64; N]) -> Self {
        DegreeVector(v.to_vec())
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for DegreeVector {
    type Err = Error;

    /// Accepts `(1,-2)`, `1,-2`, `[1, -2]` or a bare integer.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if t.trim().is_empty() {
            return Err(Error::Invalid(format!("empty degree vector '{s}'")));
        }
        t.split(',')
            .map(|p| {
                p.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Invalid(format!("bad degree coordinate '{}' in '{s}': {e}", p.trim())))
            })
            .collect::<Result<Vec<_>>>()
            .map(DegreeVector)
    }
}

/// A finite list of degree vectors of a common rank, such as C or the
/// variable degrees.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorSet {
    rank: usize,
    vectors: Vec<DegreeVector>,
}

impl GeneratorSet {
    pub fn new(rank: usize, vectors: Vec<DegreeVector>) -> Result<Self> {
        for v in &vectors {
            v.ensure_rank(rank)?;
        }
        Ok(GeneratorSet { rank, vectors })
    }

    /// Builds from coordinate lists; the rank is taken from the first vector.
    pub fn from_coords<I, V>(vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = V>,
        V: Into<Vec<i64>>,
    {
        let vectors: Vec<DegreeVector> = vectors.into_iter().map(|v| DegreeVector(v.into())).collect();
        let rank = vectors.first().map(DegreeVector::rank).ok_or(Error::EmptyGenerators)?;
        GeneratorSet::new(rank, vectors)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[DegreeVector] {
        &self.vectors
    }

    pub fn iter(&self) -> std::slice::Iter<'_, DegreeVector> {
        self.vectors.iter()
    }

    /// Duplicates removed, first occurrence kept.
    pub fn normalized(&self) -> GeneratorSet {
        let mut seen = std::collections::HashSet::new();
        let vectors = self.vectors.iter().filter(|v| seen.insert((*v).clone())).cloned().collect();
        GeneratorSet { rank: self.rank, vectors }
    }

    pub(crate) fn coord_rows(&self) -> Vec<Vec<i64>> {
        self.vectors.iter().map(|v| v.0.clone()).collect()
    }

    /// True iff the vectors are linearly independent over ℚ.
    pub fn is_linearly_independent(&self) -> bool {
        crate::linalg::rational_rank_i64(&self.coord_rows()) == self.vectors.len()
    }
}

/// Evidence for or against pointedness of `pos(gens)` with nonzero generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointednessCertificate {
    /// `φ·g ≥ 1` for every generator `g`.
    Pointed { functional: DegreeVector },
    /// Generator `index` is the zero vector.
    ZeroGenerator { index: usize },
    /// Nonnegative rationals, not all zero, with `Σ λ_i g_i = 0`.
    Line { coefficients: Vec<BigRational> },
}

impl PointednessCertificate {
    pub fn functional(&self) -> Option<&DegreeVector> {
        match self {
            PointednessCertificate::Pointed { functional } => Some(functional),
            _ => None,
        }
    }

    pub fn is_pointed(&self) -> bool {
        self.functional().is_some()
    }
}

impl fmt::Display for PointednessCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointednessCertificate::Pointed { functional } => write!(f, "pointed, functional {functional}"),
            PointednessCertificate::ZeroGenerator { index } => write!(f, "generator {index} is zero"),
            PointednessCertificate::Line { coefficients } => {
                write!(f, "nonnegative relation [")?;
                for (i, c) in coefficients.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "] sums the generators to zero")
            }
        }
    }
}

/// Decides pointedness of `pos(gens)` and absence of zero generators.
pub fn check_pointed(gens: &GeneratorSet) -> Result<PointednessCertificate> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    if let Some(index) = gens.iter().position(DegreeVector::is_zero) {
        return Ok(PointednessCertificate::ZeroGenerator { index });
    }
    let rows = gens.coord_rows();
    if let Some(coefficients) = lp::positive_relation(&rows) {
        return Ok(PointednessCertificate::Line { coefficients });
    }
    let phi = lp::integer_functional(&rows, &[], gens.rank())
        .ok_or_else(|| Error::Invariant("no separating functional for a pointed cone".into()))?;
    Ok(PointednessCertificate::Pointed { functional: DegreeVector(phi) })
}

/// Three-valued answer for searches that may hit a cap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Yes,
    No,
    Unknown(String),
}

impl Decision {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Decision::Yes
        } else {
            Decision::No
        }
    }

    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes)
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Decision::No)
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Decision::Unknown(_))
    }

    /// Conjunction: `No` dominates, then `Unknown`.
    pub fn and(self, other: Decision) -> Decision {
        match (self, other) {
            (Decision::No, _) | (_, Decision::No) => Decision::No,
            (Decision::Unknown(r), _) | (_, Decision::Unknown(r)) => Decision::Unknown(r),
            _ => Decision::Yes,
        }
    }

    /// Disjunction: `Yes` dominates, then `Unknown`.
    pub fn or(self, other: Decision) -> Decision {
        match (self, other) {
            (Decision::Yes, _) | (_, Decision::Yes) => Decision::Yes,
            (Decision::Unknown(r), _) | (_, Decision::Unknown(r)) => Decision::Unknown(r),
            _ => Decision::No,
        }
    }

    pub fn negate(self) -> Decision {
        match self {
            Decision::Yes => Decision::No,
            Decision::No => Decision::Yes,
            u => u,
        }
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Decision::Yes => write!(f, "yes"),
            Decision::No => write!(f, "no"),
            Decision::Unknown(r) => write!(f, "unknown ({r})"),
        }
    }
}

/// All `w ∈ ℕ^parts` with `Σ w = total`, in lexicographically decreasing order.
pub fn compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
    fn go(total: u64, parts: usize, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=total).rev() {
            prefix.push(first);
            go(total - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(total, parts, &mut Vec::new(), &mut out);
    out
}

/// `Σ w_i c_i`.
pub fn combine(gens: &GeneratorSet, w: &[u64]) -> DegreeVector {
    let mut acc = DegreeVector::zero(gens.rank());
    for (g, &k) in gens.iter().zip(w) {
        if k > 0 {
            acc = &acc + &(g * i64::try_from(k).expect("coefficient overflowed i64"));
        }
    }
    acc
}

/// Builds ℕC for a pointed `C`, refusing otherwise.
pub fn pointed_semigroup(c: &GeneratorSet) -> Result<Arc<AffineSemigroup>> {
    let cert = check_pointed(c)?;
    if !cert.is_pointed() {
        return Err(Error::NotPointed(cert.to_string()));
    }
    Ok(Arc::new(AffineSemigroup::new(c.clone())?))
}

/// Exact membership `d ∈ ℕC` with a witness `w`, `Σ w_i c_i = d`.
pub fn semigroup_member(c: &GeneratorSet, d: &DegreeVector) -> Result<Option<Vec<u64>>> {
    let nc = pointed_semigroup(c)?;
    nc.witness(d)
}

/// The region ℕC[j] = ⋃_{|w|=|j|} (sign(j)·Σ w_i c_i + ℕC).
pub fn shifted_region(nc: &Arc<AffineSemigroup>, j: i64) -> Result<SemigroupRegion> {
    let gens = nc.generators();
    let sign = if j < 0 { -1 } else { 1 };
    let translates = compositions(j.unsigned_abs(), gens.len())
        .into_iter()
        .map(|w| &combine(gens, &w) * sign)
        .collect();
    SemigroupRegion::new(nc.clone(), translates)
}
