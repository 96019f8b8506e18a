//! Brute-force Čech cohomology of small monomial modules on a truncated
//! window of fine degrees. Used to cross-check the pattern machinery.

use std::collections::HashMap;
use std::fmt;

use super::pattern::{subset_unions, PatternComplex};
use super::MonomialModule;
use crate::error::{Error, Result};
use crate::lattice::DegreeVector;
use crate::linalg::Field;
use crate::ring::{support_mask, GradedRing};

/// Largest number of irrelevant-ideal generators the oracle accepts.
pub const ORACLE_GENERATOR_CAP: usize = 12;

/// Outcome of a truncated computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleResult {
    Dim(u64),
    /// The counts at windows `W` and `W + 1` differ.
    Inconclusive { at_window: u64, at_next: u64 },
}

impl fmt::Display for OracleResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleResult::Dim(n) => write!(f, "{n}"),
            OracleResult::Inconclusive { at_window, at_next } => {
                write!(f, "inconclusive ({at_window} vs {at_next}; enlarge the window)")
            }
        }
    }
}

/// Fine degrees `a ∈ [−w, w]^n` with `Σ a_k 𝐚_k = target`.
fn fine_degrees(degrees: &[Vec<i64>], target: &[i64], w: i64, cap: usize) -> Result<Vec<Vec<i64>>> {
    let n = degrees.len();
    let r = target.len();
    // Componentwise range of Σ_{k ≥ idx} a_k 𝐚_k.
    let mut lo = vec![vec![0i64; r]; n + 1];
    let mut hi = vec![vec![0i64; r]; n + 1];
    for k in (0..n).rev() {
        for c in 0..r {
            let x = degrees[k][c].abs() * w;
            lo[k][c] = lo[k + 1][c] - x;
            hi[k][c] = hi[k + 1][c] + x;
        }
    }
    let mut out = Vec::new();
    let mut a = Vec::with_capacity(n);
    let mut rest = target.to_vec();
    #[allow(clippy::too_many_arguments)]
    fn go(
        k: usize,
        degrees: &[Vec<i64>],
        lo: &[Vec<i64>],
        hi: &[Vec<i64>],
        w: i64,
        a: &mut Vec<i64>,
        rest: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
        cap: usize,
    ) -> Result<()> {
        if (0..rest.len()).any(|c| rest[c] < lo[k][c] || rest[c] > hi[k][c]) {
            return Ok(());
        }
        if k == degrees.len() {
            if out.len() >= cap {
                return Err(Error::CapExceeded { what: "oracle fine degrees".into(), size: out.len() + 1, cap });
            }
            out.push(a.clone());
            return Ok(());
        }
        for x in -w..=w {
            for c in 0..rest.len() {
                rest[c] -= x * degrees[k][c];
            }
            a.push(x);
            go(k + 1, degrees, lo, hi, w, a, rest, out, cap)?;
            a.pop();
            for c in 0..rest.len() {
                rest[c] += x * degrees[k][c];
            }
        }
        Ok(())
    }
    go(0, degrees, &lo, &hi, w, &mut a, &mut rest, &mut out, cap)?;
    Ok(out)
}

fn truncated_dim(ring: &GradedRing, module: &MonomialModule, i: usize, d: &DegreeVector, w: i64, field: Field) -> Result<u64> {
    let b = ring.irrelevant_ideal().generators();
    let q = b.len();
    let unions = subset_unions(&b.iter().map(|g| support_mask(g)).collect::<Vec<_>>());
    let degrees: Vec<Vec<i64>> = ring.degrees().into_iter().map(|x| x.into_coords()).collect();
    let cap = crate::caps::enum_cap();
    let mut memo: HashMap<Vec<u64>, Vec<usize>> = HashMap::new();
    let mut total = 0u64;
    for (e, ideal) in module.summands() {
        let target = d - e;
        for a in fine_degrees(&degrees, target.coords(), w, cap)? {
            let present = |u: u64| {
                let outside = |k: usize| u >> k & 1 == 0;
                (0..a.len()).all(|k| !outside(k) || a[k] >= 0)
                    && !ideal.generators().iter().any(|g| (0..a.len()).all(|k| !outside(k) || g[k] as i64 <= a[k]))
            };
            let cells: Vec<u64> = (0u64..(1 << q)).filter(|&t| present(unions[t as usize])).collect();
            if cells.is_empty() {
                continue;
            }
            let h = memo.entry(cells.clone()).or_insert_with(|| PatternComplex::from_cells(q, cells).cohomology(field));
            total += h.get(i).copied().unwrap_or(0) as u64;
        }
    }
    Ok(total)
}

/// `dim H^i_B(M)_d` by direct rank computation on fine degrees in
/// `[−w, w]^n` and `[−w−1, w+1]^n`; differing counts are reported as
/// inconclusive.
pub fn cech_oracle_piece(
    ring: &GradedRing,
    module: &MonomialModule,
    i: usize,
    d: &DegreeVector,
    w: i64,
    field: Field,
) -> Result<OracleResult> {
    let q = ring.irrelevant_ideal().generators().len();
    if q > ORACLE_GENERATOR_CAP {
        return Err(Error::CapExceeded { what: "generators for the Čech oracle".into(), size: q, cap: ORACLE_GENERATOR_CAP });
    }
    d.ensure_rank(ring.rank())?;
    let at_window = truncated_dim(ring, module, i, d, w, field)?;
    let at_next = truncated_dim(ring, module, i, d, w + 1, field)?;
    Ok(if at_window == at_next { OracleResult::Dim(at_window) } else { OracleResult::Inconclusive { at_window, at_next } })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::catalog;

    fn d<const N: usize>(c: [i64; N]) -> DegreeVector {
        DegreeVector::from(c)
    }

    #[test]
    fn plane_top_cohomology() {
        let ring = catalog::standard(2).unwrap();
        let s = MonomialModule::free(2, &[d([0])]);
        assert_eq!(cech_oracle_piece(&ring, &s, 2, &d([-2]), 6, Field::Rational).unwrap(), OracleResult::Dim(1));
        assert_eq!(cech_oracle_piece(&ring, &s, 2, &d([-4]), 6, Field::Rational).unwrap(), OracleResult::Dim(3));
        assert_eq!(cech_oracle_piece(&ring, &s, 0, &d([1]), 6, Field::Rational).unwrap(), OracleResult::Dim(0));
    }

    #[test]
    fn shifted_product_line() {
        let ring = catalog::multiprojective(&[1, 1]).unwrap();
        let m = MonomialModule::free(4, &[d([1, 1])]);
        assert_eq!(cech_oracle_piece(&ring, &m, 2, &d([-1, 1]), 6, Field::Rational).unwrap(), OracleResult::Dim(1));
    }

    #[test]
    fn quotient_torsion_matches() {
        let ring = catalog::multiprojective(&[1, 1]).unwrap();
        let m = MonomialModule::cyclic(2, ring.irrelevant_ideal().clone());
        assert_eq!(cech_oracle_piece(&ring, &m, 0, &d([1, 0]), 4, Field::Rational).unwrap(), OracleResult::Dim(2));
    }
}
