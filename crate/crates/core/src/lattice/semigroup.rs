//! Membership, witnesses and representation counts in affine semigroups
//! ℕG, including non-pointed ones.
//!
//! The generators are split into those lying in the lineality space L of
//! pos(G) and the rest. The former span a group Λ = ℤ(G∩L) = ℕ(G∩L); the
//! latter are graded by an integer functional φ vanishing on L and at least
//! 1 on every other generator. Membership of b becomes a finite search over
//! the non-lineality coefficients, with remainders compared modulo Λ.

use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{dot, lp, Decision, DegreeVector, GeneratorSet, IntLattice};
use crate::error::{Error, Result};

/// Default number of memoized search states before a membership query
/// answers `Unknown`. Overridable per semigroup.
pub const DEFAULT_SEARCH_CAP: usize = 2_000_000;

/// The affine semigroup ℕG generated by a finite set of degree vectors.
#[derive(Debug, Clone)]
pub struct AffineSemigroup {
    generators: GeneratorSet,
    /// Indices of generators outside the lineality space, sorted by φ-degree descending.
    graded: Vec<usize>,
    /// Indices of generators inside the lineality space.
    units: Vec<usize>,
    unit_lattice: IntLattice,
    grading: Vec<i64>,
    cap: usize,
}

struct CapHit;

impl AffineSemigroup {
    pub fn new(generators: GeneratorSet) -> Result<Self> {
        let rank = generators.rank();
        let rows = generators.coord_rows();
        let mut units = Vec::new();
        let mut graded = Vec::new();
        for (i, g) in rows.iter().enumerate() {
            let neg: Vec<i64> = g.iter().map(|v| -v).collect();
            if g.iter().all(|&v| v == 0) || lp::cone_combination(&rows, &neg).is_some() {
                units.push(i);
            } else {
                graded.push(i);
            }
        }
        let unit_rows: Vec<Vec<i64>> = units.iter().map(|&i| rows[i].clone()).collect();
        let graded_rows: Vec<Vec<i64>> = graded.iter().map(|&i| rows[i].clone()).collect();
        let grading = if graded.is_empty() {
            vec![0; rank]
        } else {
            lp::integer_functional(&graded_rows, &unit_rows, rank)
                .ok_or_else(|| Error::Invariant("no grading functional for the pointed quotient".into()))?
        };
        graded.sort_by_key(|&i| std::cmp::Reverse(dot(&grading, &rows[i])));
        Ok(AffineSemigroup {
            unit_lattice: IntLattice::from_generators(&unit_rows, rank),
            generators,
            graded,
            units,
            grading,
            cap: DEFAULT_SEARCH_CAP,
        })
    }

    /// Replaces the state cap used by membership searches.
    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.generators.rank()
    }

    /// True iff pos(G) contains no line and no generator is zero.
    pub fn is_pointed(&self) -> bool {
        self.units.is_empty()
    }

    /// The grading functional: zero on the lineality space, ≥ 1 on the
    /// remaining generators.
    pub fn grading(&self) -> &[i64] {
        &self.grading
    }

    pub fn level(&self, d: &DegreeVector) -> i64 {
        dot(&self.grading, d.coords())
    }

    /// Exact membership test `d ∈ ℕG`.
    pub fn contains(&self, d: &DegreeVector) -> Decision {
        if d.rank() != self.rank() {
            return Decision::No;
        }
        let level = self.level(d);
        if level < 0 {
            return Decision::No;
        }
        if self.graded.is_empty() {
            return Decision::from_bool(self.unit_lattice.contains(d.coords()));
        }
        if level > 48 {
            let rows = self.generators.coord_rows();
            if lp::cone_combination(&rows, d.coords()).is_none() {
                return Decision::No;
            }
        }
        let mut failed = HashSet::new();
        match self.search(0, d.coords().to_vec(), level, &mut failed, &mut None) {
            Ok(b) => Decision::from_bool(b),
            Err(CapHit) => Decision::Unknown(format!("semigroup search exceeded {} states", self.cap)),
        }
    }

    /// Like [`contains`](Self::contains) but returns an error instead of `Unknown`.
    pub fn contains_exact(&self, d: &DegreeVector) -> Result<bool> {
        match self.contains(d) {
            Decision::Yes => Ok(true),
            Decision::No => Ok(false),
            Decision::Unknown(r) => Err(Error::CapExceeded { what: r, size: self.cap, cap: self.cap }),
        }
    }

    /// A witness `w ∈ ℕ^|G|` with `Σ w_i g_i = d` for a pointed semigroup.
    pub fn witness(&self, d: &DegreeVector) -> Result<Option<Vec<u64>>> {
        self.require_pointed()?;
        d.ensure_rank(self.rank())?;
        let level = self.level(d);
        if level < 0 {
            return Ok(None);
        }
        let mut path = Some(Vec::new());
        let mut failed = HashSet::new();
        match self.search(0, d.coords().to_vec(), level, &mut failed, &mut path) {
            Ok(true) => {
                let path = path.unwrap_or_default();
                let mut w = vec![0u64; self.generators.len()];
                for (k, y) in path.into_iter().enumerate() {
                    w[self.graded[k]] = y;
                }
                Ok(Some(w))
            }
            Ok(false) => Ok(None),
            Err(CapHit) => Err(Error::CapExceeded {
                what: "semigroup witness search".into(),
                size: self.cap,
                cap: self.cap,
            }),
        }
    }

    /// Number of `w ∈ ℕ^|G|` with `Σ w_i g_i = d`, for a pointed semigroup.
    pub fn count_representations(&self, d: &DegreeVector) -> Result<BigUint> {
        self.require_pointed()?;
        d.ensure_rank(self.rank())?;
        let level = self.level(d);
        if level < 0 {
            return Ok(BigUint::zero());
        }
        let mut memo = HashMap::new();
        self.count(0, d.coords().to_vec(), level, &mut memo)
    }

    /// All `w` with `Σ w_i g_i = d`, for a pointed semigroup, in a fixed
    /// deterministic order.
    pub fn representations(&self, d: &DegreeVector) -> Result<Vec<Vec<u64>>> {
        self.require_pointed()?;
        d.ensure_rank(self.rank())?;
        let level = self.level(d);
        let mut out = Vec::new();
        if level >= 0 {
            let mut prefix = Vec::new();
            self.enumerate(0, d.coords().to_vec(), level, &mut prefix, &mut out)?;
        }
        let mut full: Vec<Vec<u64>> = out
            .into_iter()
            .map(|p| {
                let mut w = vec![0u64; self.generators.len()];
                for (k, y) in p.into_iter().enumerate() {
                    w[self.graded[k]] = y;
                }
                w
            })
            .collect();
        full.sort();
        Ok(full)
    }

    fn require_pointed(&self) -> Result<()> {
        if self.is_pointed() {
            Ok(())
        } else {
            Err(Error::NotPointed(format!(
                "generators {} lie in the lineality space",
                self.units.iter().map(|&i| self.generators.vectors()[i].to_string()).collect::<Vec<_>>().join(", ")
            )))
        }
    }

    fn graded_vec(&self, k: usize) -> &[i64] {
        self.generators.vectors()[self.graded[k]].coords()
    }

    fn search(
        &self,
        k: usize,
        rem: Vec<i64>,
        level: i64,
        failed: &mut HashSet<(usize, Vec<i64>)>,
        path: &mut Option<Vec<u64>>,
    ) -> std::result::Result<bool, CapHit> {
        let n = self.graded.len();
        if k == n {
            return Ok(level == 0 && self.unit_lattice.contains(&rem));
        }
        let g = self.graded_vec(k);
        let gl = dot(&self.grading, g);
        if k + 1 == n {
            if level % gl != 0 {
                return Ok(false);
            }
            let y = level / gl;
            let rest: Vec<i64> = rem.iter().zip(g).map(|(r, v)| r - y * v).collect();
            let ok = self.unit_lattice.contains(&rest);
            if ok {
                if let Some(p) = path.as_mut() {
                    p.push(y as u64);
                }
            }
            return Ok(ok);
        }
        let key = (k, self.unit_lattice.reduce(&rem));
        if failed.contains(&key) {
            return Ok(false);
        }
        for y in 0..=level / gl {
            let next: Vec<i64> = rem.iter().zip(g).map(|(r, v)| r - y * v).collect();
            if let Some(p) = path.as_mut() {
                p.push(y as u64);
            }
            if self.search(k + 1, next, level - y * gl, failed, path)? {
                return Ok(true);
            }
            if let Some(p) = path.as_mut() {
                p.pop();
            }
        }
        failed.insert(key);
        if failed.len() > self.cap {
            return Err(CapHit);
        }
        Ok(false)
    }

    fn count(&self, k: usize, rem: Vec<i64>, level: i64, memo: &mut HashMap<(usize, Vec<i64>), BigUint>) -> Result<BigUint> {
        let n = self.graded.len();
        if k == n {
            return Ok(if rem.iter().all(|&v| v == 0) { BigUint::one() } else { BigUint::zero() });
        }
        let g = self.graded_vec(k);
        let gl = dot(&self.grading, g);
        if k + 1 == n {
            if level % gl != 0 {
                return Ok(BigUint::zero());
            }
            let y = level / gl;
            let exact = rem.iter().zip(g).all(|(r, v)| *r == y * v);
            return Ok(if exact { BigUint::one() } else { BigUint::zero() });
        }
        let key = (k, rem);
        if let Some(v) = memo.get(&key) {
            return Ok(v.clone());
        }
        let mut total = BigUint::zero();
        for y in 0..=level / gl {
            let next: Vec<i64> = key.1.iter().zip(g).map(|(r, v)| r - y * v).collect();
            total += self.count(k + 1, next, level - y * gl, memo)?;
        }
        if memo.len() > self.cap {
            return Err(Error::CapExceeded { what: "representation count".into(), size: memo.len(), cap: self.cap });
        }
        memo.insert(key, total.clone());
        Ok(total)
    }

    fn enumerate(
        &self,
        k: usize,
        rem: Vec<i64>,
        level: i64,
        prefix: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) -> Result<()> {
        let n = self.graded.len();
        if k == n {
            if rem.iter().all(|&v| v == 0) {
                out.push(prefix.clone());
            }
            return Ok(());
        }
        if out.len() > self.cap {
            return Err(Error::CapExceeded { what: "representation enumeration".into(), size: out.len(), cap: self.cap });
        }
        let g = self.graded_vec(k);
        let gl = dot(&self.grading, g);
        for y in 0..=level / gl {
            let next: Vec<i64> = rem.iter().zip(g).map(|(r, v)| r - y * v).collect();
            prefix.push(y as u64);
            self.enumerate(k + 1, next, level - y * gl, prefix, out)?;
            prefix.pop();
        }
        Ok(())
    }
}
