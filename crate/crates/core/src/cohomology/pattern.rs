//! Čech complexes of a monomial ideal restricted to one sign pattern.
//!
//! For a fine degree `a ∈ ℤ^n` with negative set σ, the piece of the
//! localization `S_{m_T}` in degree `a` is one-dimensional when σ is
//! contained in the support of `lcm(m_t : t ∈ T)` and zero otherwise. The
//! Čech complex in degree `a` is therefore the complex of surviving subsets
//! `T`, which depends on σ alone.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::linalg::{sparse_rank, Field, SparseRow};
use crate::ring::{support_mask, MonomialIdeal};

/// Largest number of ideal generators accepted (2^q cochains).
pub const PATTERN_GENERATOR_CAP: usize = 22;

/// A set of variables, as a bitmask.
pub type SignPattern = u64;

/// The Čech complex of `ideal` for sign pattern σ.
#[derive(Clone, Debug)]
pub struct PatternComplex {
    /// Surviving generator subsets, grouped by size.
    levels: Vec<Vec<u64>>,
}

impl PatternComplex {
    pub fn new(ideal: &MonomialIdeal, sigma: SignPattern) -> Result<Self> {
        let q = ideal.generators().len();
        if q > PATTERN_GENERATOR_CAP {
            return Err(Error::CapExceeded { what: "generators in a Čech complex".into(), size: q, cap: PATTERN_GENERATOR_CAP });
        }
        let supports: Vec<u64> = ideal.generators().iter().map(|g| support_mask(g)).collect();
        let unions = subset_unions(&supports);
        let cells = (0u64..(1 << q)).filter(|&t| if t == 0 { sigma == 0 } else { sigma & unions[t as usize] == sigma });
        Ok(Self::from_cells(q, cells))
    }

    /// The complex on an up-closed set of generator subsets.
    pub(crate) fn from_cells(q: usize, cells: impl IntoIterator<Item = u64>) -> Self {
        let mut levels = vec![Vec::new(); q + 1];
        for t in cells {
            levels[t.count_ones() as usize].push(t);
        }
        for l in &mut levels {
            l.sort_unstable();
        }
        PatternComplex { levels }
    }

    /// `dim C^p` for p = 0..=q.
    pub fn dimensions(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    /// Matrix of `d^p : C^p → C^{p+1}` as sparse rows, one per source cell.
    pub fn differential(&self, p: usize) -> Vec<SparseRow> {
        let Some(targets) = self.levels.get(p + 1) else {
            return vec![SparseRow::new(); self.levels.get(p).map_or(0, Vec::len)];
        };
        let index: HashMap<u64, usize> = targets.iter().enumerate().map(|(i, t)| (*t, i)).collect();
        let q = self.levels.len() - 1;
        self.levels[p]
            .iter()
            .map(|&t| {
                let mut row = SparseRow::new();
                for k in 0..q {
                    if t >> k & 1 == 1 {
                        continue;
                    }
                    if let Some(&col) = index.get(&(t | 1 << k)) {
                        let below = (t & ((1u64 << k) - 1)).count_ones();
                        row.insert(col, if below.is_multiple_of(2) { 1 } else { -1 });
                    }
                }
                row
            })
            .collect()
    }

    /// Cohomology dimensions `h^0..h^q`.
    pub fn cohomology(&self, field: Field) -> Vec<usize> {
        let dims = self.dimensions();
        let ranks: Vec<usize> = (0..dims.len()).map(|p| sparse_rank(field, &self.differential(p))).collect();
        (0..dims.len()).map(|p| dims[p] - ranks[p] - if p > 0 { ranks[p - 1] } else { 0 }).collect()
    }

    /// True iff `d^{p+1} ∘ d^p = 0` for every p, in exact integers.
    pub fn is_complex(&self) -> bool {
        (0..self.levels.len().saturating_sub(2)).all(|p| {
            let first = self.differential(p);
            let second = self.differential(p + 1);
            first.iter().all(|row| {
                let mut acc: HashMap<usize, i64> = HashMap::new();
                for (&mid, &a) in row {
                    for (&col, &b) in &second[mid] {
                        *acc.entry(col).or_default() += a * b;
                    }
                }
                acc.values().all(|&v| v == 0)
            })
        })
    }

    /// `Σ (−1)^p dim C^p`.
    pub fn euler_characteristic(&self) -> i64 {
        self.dimensions().iter().enumerate().map(|(p, &d)| if p % 2 == 0 { d as i64 } else { -(d as i64) }).sum()
    }
}

/// `unions[T]` = union of `supports[t]` over `t ∈ T`.
pub(crate) fn subset_unions(supports: &[u64]) -> Vec<u64> {
    let q = supports.len();
    let mut union = vec![0u64; 1 << q];
    for t in 1usize..(1 << q) {
        union[t] = union[t & (t - 1)] | supports[t.trailing_zeros() as usize];
    }
    union
}

/// Cohomology dimensions of the pattern complex of σ.
pub fn pattern_cohomology(ideal: &MonomialIdeal, sigma: SignPattern, field: Field) -> Result<Vec<usize>> {
    Ok(PatternComplex::new(ideal, sigma)?.cohomology(field))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    #[test]
    fn plane_maximal_ideal() {
        let b = ideal(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(pattern_cohomology(&b, 0b11, Field::Rational).unwrap(), vec![0, 0, 1]);
        assert_eq!(pattern_cohomology(&b, 0, Field::Rational).unwrap(), vec![0, 0, 0]);
    }

    #[test]
    fn product_of_lines() {
        let b = ideal(4, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]]);
        let h = pattern_cohomology(&b, 0b0011, Field::Rational).unwrap();
        assert_eq!(h, vec![0, 0, 1, 0, 0]);
        let c = PatternComplex::new(&b, 0b0011).unwrap();
        assert_eq!(c.dimensions(), vec![0, 0, 4, 4, 1]);
        assert!(c.is_complex());
        let euler: i64 = h.iter().enumerate().map(|(p, &d)| if p % 2 == 0 { d as i64 } else { -(d as i64) }).sum();
        assert_eq!(c.euler_characteristic(), euler);
    }

    #[test]
    fn all_patterns_are_complexes() {
        let b = ideal(4, &[&[1, 1, 0, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 0, 1, 1]]);
        for sigma in 0..16 {
            let c = PatternComplex::new(&b, sigma).unwrap();
            assert!(c.is_complex());
            let h = c.cohomology(Field::Rational);
            let euler: i64 = h.iter().enumerate().map(|(p, &d)| if p % 2 == 0 { d as i64 } else { -(d as i64) }).sum();
            assert_eq!(c.euler_characteristic(), euler);
        }
    }
}
