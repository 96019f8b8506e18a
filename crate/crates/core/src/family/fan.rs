//! Fans given by rays and maximal cones, and their primitive collections.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::rational_rank_i64;

/// A fan: integer rays and maximal cones as ray-index sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanData {
    rays: Vec<Vec<i64>>,
    cones: Vec<Vec<usize>>,
    simplicial: bool,
}

impl FanData {
    pub fn new(rays: Vec<Vec<i64>>, cones: Vec<Vec<usize>>) -> Result<Self> {
        let dim = rays.first().map_or(0, Vec::len);
        if rays.iter().any(|r| r.len() != dim) {
            return Err(Error::Invalid("rays have different lengths".into()));
        }
        for (i, r) in rays.iter().enumerate() {
            if r.iter().all(|&x| x == 0) {
                return Err(Error::Invalid(format!("ray {i} is zero")));
            }
            if rays[..i].contains(r) {
                return Err(Error::Invalid(format!("ray {i} is repeated")));
            }
        }
        if rays.len() > 64 {
            return Err(Error::CapExceeded { what: "fan rays".into(), size: rays.len(), cap: 64 });
        }
        let mut normalized = Vec::new();
        for cone in cones {
            let mut c = cone.clone();
            c.sort_unstable();
            c.dedup();
            if c.len() != cone.len() {
                return Err(Error::Invalid(format!("cone {cone:?} repeats a ray")));
            }
            if let Some(bad) = c.iter().find(|&&k| k >= rays.len()) {
                return Err(Error::Invalid(format!("cone {cone:?} refers to missing ray {bad}")));
            }
            normalized.push(c);
        }
        let simplicial = normalized.iter().all(|c| {
            let rows: Vec<Vec<i64>> = c.iter().map(|&k| rays[k].clone()).collect();
            rational_rank_i64(&rows) == c.len()
        });
        Ok(FanData { rays, cones: normalized, simplicial })
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn cones(&self) -> &[Vec<usize>] {
        &self.cones
    }

    pub fn is_simplicial(&self) -> bool {
        self.simplicial
    }

    fn cone_masks(&self) -> Vec<u64> {
        self.cones.iter().map(|c| c.iter().fold(0u64, |m, &k| m | (1 << k))).collect()
    }

    /// True iff the rays in `mask` all lie in one maximal cone.
    pub fn in_some_cone(&self, mask: u64) -> bool {
        self.cone_masks().iter().any(|c| mask & c == mask)
    }
}

/// All primitive collections as ray masks, ordered by size then mask.
pub fn primitive_collections(fan: &FanData) -> Result<Vec<u64>> {
    let n = fan.rays().len();
    let cap = crate::caps::ray_cap();
    if n > cap {
        return Err(Error::CapExceeded { what: "fan rays".into(), size: n, cap });
    }
    let cones = fan.cone_masks();
    let in_cone = |m: u64| cones.iter().any(|c| m & c == m);
    let mut out: Vec<u64> = (1u64..(1 << n))
        .filter(|&s| !in_cone(s))
        .filter(|&s| (0..n).filter(|k| s >> k & 1 == 1).all(|k| in_cone(s & !(1 << k))))
        .collect();
    out.sort_by_key(|m| (m.count_ones(), *m));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p2_has_one_collection() {
        let fan = FanData::new(vec![vec![1, 0], vec![0, 1], vec![-1, -1]], vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert!(fan.is_simplicial());
        assert_eq!(primitive_collections(&fan).unwrap(), vec![0b111]);
    }

    #[test]
    fn rejects_bad_cones() {
        assert!(FanData::new(vec![vec![1]], vec![vec![0, 0]]).is_err());
        assert!(FanData::new(vec![vec![1]], vec![vec![3]]).is_err());
    }
}
