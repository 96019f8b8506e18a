//! B-torsion of monomial modules, `H^0_B(M)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::DegreeVector;
use crate::ring::{monomials_of_degree, support_mask, GradedRing, Monomial, MonomialIdeal};

/// `⊕_α S(−e_α)/I_α` with monomial ideals `I_α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialModule {
    summands: Vec<(DegreeVector, MonomialIdeal)>,
}

impl MonomialModule {
    pub fn new(summands: Vec<(DegreeVector, MonomialIdeal)>) -> Result<Self> {
        if let Some(n) = summands.first().map(|(_, i)| i.nvars()) {
            if summands.iter().any(|(_, i)| i.nvars() != n) {
                return Err(Error::Invalid("summand ideals live in different rings".into()));
            }
        }
        Ok(MonomialModule { summands })
    }

    /// `⊕ S(−e)`.
    pub fn free(nvars: usize, shifts: &[DegreeVector]) -> Self {
        MonomialModule { summands: shifts.iter().map(|e| (e.clone(), MonomialIdeal::zero(nvars))).collect() }
    }

    /// `S/I`.
    pub fn cyclic(rank: usize, ideal: MonomialIdeal) -> Self {
        MonomialModule { summands: vec![(DegreeVector::zero(rank), ideal)] }
    }

    pub fn summands(&self) -> &[(DegreeVector, MonomialIdeal)] {
        &self.summands
    }

    pub fn is_free(&self) -> bool {
        self.summands.iter().all(|(_, i)| i.is_zero())
    }

    /// Monomial basis of `M_d` as `(summand, exponent)` pairs.
    pub fn basis(&self, ring: &GradedRing, d: &DegreeVector) -> Result<Vec<(usize, Monomial)>> {
        let mut out = Vec::new();
        for (k, (e, ideal)) in self.summands.iter().enumerate() {
            for a in monomials_of_degree(ring, &(d - e))? {
                if !ideal.contains(&a) {
                    out.push((k, a));
                }
            }
        }
        Ok(out)
    }
}

/// How to decide torsion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorsionMode {
    /// Per-generator annihilator test on monomials; exact.
    Exact,
    /// Ascending kernel chain in `k`, stopped after `window` equal steps.
    Heuristic { window: usize },
}

impl Default for TorsionMode {
    fn default() -> Self {
        TorsionMode::Heuristic { window: 3 }
    }
}

/// `dim H^0_B(M)_d` with how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionResult {
    pub dim: usize,
    pub mode: TorsionMode,
    /// For the heuristic mode, the power at which the chain was stopped.
    pub stopped_at: Option<u32>,
    /// False when the value rests on the stabilization heuristic.
    pub exact: bool,
}

impl fmt::Display for TorsionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.dim)?;
        match (self.exact, self.stopped_at) {
            (true, _) => write!(f, " (exact)"),
            (false, Some(k)) => write!(f, " (heuristic-stabilized at power {k})"),
            (false, None) => write!(f, " (heuristic-stabilized)"),
        }
    }
}

/// `m_j^k · x^a ∈ I` for the generator `m_j` and power `k`.
fn killed_by_power(ideal: &MonomialIdeal, a: &[u32], m: &[u32], k: u32) -> bool {
    let shifted: Monomial = a.iter().zip(m).map(|(x, y)| x + k * y).collect();
    ideal.contains(&shifted)
}

/// Some power of `m` kills `x^a` in `S/I`.
fn eventually_killed(ideal: &MonomialIdeal, a: &[u32], m: &[u32]) -> bool {
    let s = support_mask(m);
    ideal.generators().iter().any(|g| g.iter().zip(a).enumerate().all(|(i, (gi, ai))| s >> i & 1 == 1 || gi <= ai))
}

/// `dim H^0_B(M)_d`.
pub fn h0_torsion_piece(ring: &GradedRing, module: &MonomialModule, d: &DegreeVector, mode: TorsionMode) -> Result<TorsionResult> {
    let basis = module.basis(ring, d)?;
    let b = ring.irrelevant_ideal().generators();
    if module.is_free() {
        return Ok(TorsionResult { dim: 0, mode, stopped_at: None, exact: true });
    }
    match mode {
        TorsionMode::Exact => {
            let dim = basis
                .iter()
                .filter(|(k, a)| {
                    let ideal = &module.summands[*k].1;
                    b.iter().all(|m| eventually_killed(ideal, a, m))
                })
                .count();
            Ok(TorsionResult { dim, mode, stopped_at: None, exact: true })
        }
        TorsionMode::Heuristic { window } => {
            let window = window.max(1);
            let mut last = None;
            let mut equal_steps = 0;
            let mut k = 1u32;
            loop {
                let dim = basis
                    .iter()
                    .filter(|(s, a)| {
                        let ideal = &module.summands[*s].1;
                        b.iter().all(|m| killed_by_power(ideal, a, m, k))
                    })
                    .count();
                if last == Some(dim) {
                    equal_steps += 1;
                } else {
                    equal_steps = 0;
                }
                last = Some(dim);
                if equal_steps >= window || dim == basis.len() {
                    return Ok(TorsionResult { dim, mode, stopped_at: Some(k), exact: dim == basis.len() });
                }
                k += 1;
            }
        }
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
    fn quotient_by_irrelevant_ideal() {
        let ring = catalog::multiprojective(&[1, 1]).unwrap();
        let m = MonomialModule::cyclic(2, ring.irrelevant_ideal().clone());
        for mode in [TorsionMode::Exact, TorsionMode::default()] {
            assert_eq!(h0_torsion_piece(&ring, &m, &d([1, 0]), mode).unwrap().dim, 2);
            assert_eq!(h0_torsion_piece(&ring, &m, &d([0, 0]), mode).unwrap().dim, 1);
            assert_eq!(h0_torsion_piece(&ring, &m, &d([1, 1]), mode).unwrap().dim, 0);
        }
        let s = MonomialModule::free(4, &[d([0, 0])]);
        assert_eq!(h0_torsion_piece(&ring, &s, &d([2, 3]), TorsionMode::Exact).unwrap().dim, 0);
    }

    #[test]
    fn torsion_needing_higher_powers() {
        // In S/(x^3, y) the class of x survives multiplication by x but not by x^2.
        let ring = catalog::standard(2).unwrap();
        let ideal = MonomialIdeal::new(2, vec![vec![3, 0], vec![0, 1]]).unwrap();
        let m = MonomialModule::cyclic(1, ideal);
        assert_eq!(h0_torsion_piece(&ring, &m, &d([1]), TorsionMode::Exact).unwrap().dim, 1);
        let heuristic = h0_torsion_piece(&ring, &m, &d([1]), TorsionMode::default()).unwrap();
        assert_eq!((heuristic.dim, heuristic.stopped_at), (1, Some(2)));
        let partial = MonomialModule::cyclic(1, MonomialIdeal::new(2, vec![vec![3, 1]]).unwrap());
        let h = h0_torsion_piece(&ring, &partial, &d([1]), TorsionMode::default()).unwrap();
        assert_eq!(h.dim, 0);
        assert!(!h.exact);
    }
}
