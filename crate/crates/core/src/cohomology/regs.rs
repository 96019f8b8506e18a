//! reg_{B,C}(S): pointwise membership and region extraction.
//!
//! A region found by scanning a window is certified exact when every point
//! outside the upset of its generators is shown irregular. With C a basis
//! of a full-rank sublattice, each coset `ρ + ℤC` is a copy of `ℤ^r` in
//! coordinates `y`, and the complement of a finite upset there is a finite
//! union of sets `Q = {y : y_j ≤ β_j for j ∈ J}`. Each `Q` is checked to lie
//! inside one irregular translate `t + ℕE`, where `E = ℕ(D_σ ∪ −C)`.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::ToPrimitive;

use super::{LocalCohomology, ModuleData};
use crate::error::{Error, Result};
use crate::lattice::{combine, compositions, Decision, DegreeVector, IntLattice};
use crate::linalg::solve_independent;
use crate::region::{DegreeBox, Exactness, SemigroupRegion};
use crate::ring::GradedRing;

/// Largest number of complement pieces examined per coset.
const COMPLEMENT_PIECE_CAP: usize = 100_000;

/// `Yes` iff `m ∈ reg_{B,C}(S)`.
pub fn reg_s_membership(eng: &LocalCohomology, m: &DegreeVector) -> Decision {
    ModuleData::ring(eng.rank()).regular(eng, m)
}

/// reg_{B,C}(S) from a window scan, marked exact when certified. A region
/// declared in the ring file is returned as given.
pub fn reg_s_region(ring: &GradedRing, eng: &LocalCohomology, window: &DegreeBox) -> Result<SemigroupRegion> {
    let nc = ring.nc().clone();
    if let Some(gens) = ring.declared_reg_s() {
        return SemigroupRegion::new(nc, gens.to_vec());
    }
    window.lo.ensure_rank(ring.rank())?;
    let size = window
        .lo
        .coords()
        .iter()
        .zip(window.hi.coords())
        .try_fold(1usize, |acc, (l, h)| acc.checked_mul((h - l + 1).max(0) as usize));
    let cap = crate::caps::enum_cap();
    match size {
        Some(s) if s <= cap => {}
        _ => return Err(Error::CapExceeded { what: "window points".into(), size: size.unwrap_or(usize::MAX), cap }),
    }
    let mut found = Vec::new();
    let mut undecided = false;
    for p in window.points() {
        match reg_s_membership(eng, &p) {
            Decision::Yes => found.push(p),
            Decision::No => {}
            Decision::Unknown(_) => undecided = true,
        }
    }
    let region = SemigroupRegion::new(nc, found)?;
    let exact = !undecided && complement_is_irregular(ring, eng, region.generators())?;
    let marker = if exact { Exactness::Exact } else { Exactness::Window(window.radius()) };
    Ok(region.with_exactness(marker))
}

/// An irregular translate `t + ℕE` for one (i, σ, w).
struct Piece<'a> {
    corner: DegreeVector,
    eng_pattern: &'a super::Pattern,
}

fn irregular_pieces(eng: &LocalCohomology) -> Vec<Piece<'_>> {
    let Some(top) = eng.max_index() else { return Vec::new() };
    let config = eng.config();
    let mut out = Vec::new();
    for i in 0..=top {
        let k = 1 - i as i64;
        for w in compositions(k.unsigned_abs(), config.len()) {
            let shift = &combine(config, &w) * k.signum();
            for p in eng.support(i) {
                out.push(Piece { corner: p.offset() - &shift, eng_pattern: p });
            }
        }
    }
    out
}

fn complement_is_irregular(ring: &GradedRing, eng: &LocalCohomology, gens: &[DegreeVector]) -> Result<bool> {
    let config = ring.config();
    let r = ring.rank();
    if config.len() != r || !config.is_linearly_independent() {
        return Ok(false);
    }
    let cols = config.coord_rows();
    let lattice = IntLattice::from_generators(&cols, r);
    let to_y = |x: &DegreeVector, rho: &[i64]| -> Option<Vec<i64>> {
        let diff: Vec<i64> = x.coords().iter().zip(rho).map(|(a, b)| a - b).collect();
        let sol = solve_independent(&cols, &diff)?;
        sol.iter().map(|q| if q.is_integer() { q.to_integer().to_i64() } else { None }).collect()
    };
    let mut by_coset: BTreeMap<Vec<i64>, Vec<Vec<i64>>> = BTreeMap::new();
    for rho in lattice.coset_representatives() {
        by_coset.insert(lattice.reduce(&rho), Vec::new());
    }
    for g in gens {
        let rho = lattice.reduce(g.coords());
        let y = to_y(g, &rho).ok_or_else(|| Error::Invariant("generator outside its coset".into()))?;
        by_coset.get_mut(&rho).ok_or_else(|| Error::Invariant("unlisted coset".into()))?.push(y);
    }
    let pieces = irregular_pieces(eng);
    let free_ok: Vec<Vec<bool>> = pieces
        .iter()
        .map(|p| config.iter().map(|c| p.eng_pattern.extended.contains(c).is_yes()).collect())
        .collect();
    for (rho, ys) in &by_coset {
        let qs = complement_cover(ys, r)?;
        for (fixed, beta) in qs {
            let mut corner = DegreeVector::new(rho.clone());
            for (j, c) in config.iter().enumerate() {
                if fixed[j] {
                    corner = &corner + &(c * beta[j]);
                }
            }
            let covered = pieces.iter().zip(&free_ok).any(|(p, ok)| {
                (0..r).all(|j| fixed[j] || ok[j]) && p.eng_pattern.extended.contains(&(&corner - &p.corner)).is_yes()
            });
            if !covered {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Sets `{y : y_j ≤ β_j, j ∈ J}` (as `(J mask, β)`) whose union is the
/// complement of `⋃ (g + ℕ^r)`, with dominated sets removed.
fn complement_cover(gens: &[Vec<i64>], r: usize) -> Result<Vec<(Vec<bool>, Vec<i64>)>> {
    let total = (r as f64).powi(gens.len() as i32);
    if total > COMPLEMENT_PIECE_CAP as f64 {
        return Err(Error::CapExceeded { what: "complement pieces".into(), size: total as usize, cap: COMPLEMENT_PIECE_CAP });
    }
    let mut sets: Vec<(Vec<bool>, Vec<i64>)> = Vec::new();
    for choice in std::iter::repeat_n(0..r, gens.len()).multi_cartesian_product() {
        let mut fixed = vec![false; r];
        let mut beta = vec![i64::MAX; r];
        for (g, &j) in gens.iter().zip(&choice) {
            fixed[j] = true;
            beta[j] = beta[j].min(g[j] - 1);
        }
        for j in 0..r {
            if !fixed[j] {
                beta[j] = 0;
            }
        }
        sets.push((fixed, beta));
    }
    if gens.is_empty() {
        sets.push((vec![false; r], vec![0; r]));
    }
    sets.sort();
    sets.dedup();
    let contained = |a: &(Vec<bool>, Vec<i64>), b: &(Vec<bool>, Vec<i64>)| {
        (0..r).all(|j| !b.0[j] || (a.0[j] && a.1[j] <= b.1[j]))
    };
    let kept = sets
        .iter()
        .enumerate()
        .filter(|(i, a)| !sets.iter().enumerate().any(|(k, b)| k != *i && contained(a, b) && (!contained(b, a) || k < *i)))
        .map(|(_, a)| a.clone())
        .collect();
    Ok(kept)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::catalog;

    fn d<const N: usize>(c: [i64; N]) -> DegreeVector {
        DegreeVector::from(c)
    }

    #[test]
    fn hirzebruch_regions() {
        for (t, expected) in [(0, vec![d([0, 0])]), (1, vec![d([0, 0])]), (2, vec![d([0, 1]), d([1, 0])]), (3, vec![d([0, 1]), d([2, 0])])] {
            let ring = catalog::hirzebruch(t).unwrap();
            let eng = LocalCohomology::for_ring(&ring).unwrap();
            let region = reg_s_region(&ring, &eng, &DegreeBox::cube(2, -6, 6)).unwrap();
            assert_eq!(region.generators(), expected.as_slice(), "t={t}");
            assert!(region.is_exact(), "t={t}");
        }
    }

    #[test]
    fn weighted_region() {
        let ring = catalog::weighted(&[2, 3, 5], 30).unwrap();
        let eng = LocalCohomology::for_ring(&ring).unwrap();
        let region = reg_s_region(&ring, &eng, &DegreeBox::cube(1, -40, 100)).unwrap();
        assert!(region.is_exact());
        assert!(region.contains_point(&d([49])).unwrap());
        assert!(!region.contains_point(&d([50])).unwrap());
        for u in 51..200 {
            assert!(region.contains_point(&d([u])).unwrap());
        }
        for u in -100..49 {
            assert!(!region.contains_point(&d([u])).unwrap());
        }
    }

    #[test]
    fn small_window_is_not_certified() {
        let ring = catalog::hirzebruch(3).unwrap();
        let eng = LocalCohomology::for_ring(&ring).unwrap();
        let region = reg_s_region(&ring, &eng, &DegreeBox::cube(2, -1, 1)).unwrap();
        assert_eq!(region.exactness(), Exactness::Window(1));
    }

    #[test]
    fn cover_of_two_generators() {
        let cover = complement_cover(&[vec![1, 0], vec![0, 1]], 2).unwrap();
        assert_eq!(cover.len(), 3);
    }
}
