//! Exact two-phase simplex over the rationals.
//!
//! Problems are in equality form: minimize `c·x` subject to `A x = b`,
//! `x ≥ 0`. Bland's rule guarantees termination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum LpOutcome {
    Optimal(Vec<BigRational>),
    Infeasible,
    Unbounded,
}

pub(crate) fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

struct Tableau {
    rows: Vec<Vec<BigRational>>,
    obj: Vec<BigRational>,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn rhs(&self) -> usize {
        self.width
    }

    fn pivot(&mut self, r: usize, s: usize) {
        let p = self.rows[r][s].clone();
        for v in self.rows[r].iter_mut() {
            *v = &*v / &p;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[s].is_zero() {
                continue;
            }
            let f = row[s].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        if !self.obj[s].is_zero() {
            let f = self.obj[s].clone();
            for (v, pv) in self.obj.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        self.basis[r] = s;
    }

    /// Runs simplex iterations with entering columns restricted to `allowed`.
    /// Returns false when the objective is unbounded.
    fn optimize(&mut self, allowed: usize) -> bool {
        loop {
            let entering = (0..allowed).find(|&j| self.obj[j].is_negative());
            let Some(s) = entering else { return true };
            let rhs = self.rhs();
            let mut best: Option<(usize, BigRational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[s].is_positive() {
                    let ratio = &row[rhs] / &row[s];
                    let better = match &best {
                        None => true,
                        Some((bi, br)) => {
                            ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                        }
                    };
                    if better {
                        best = Some((i, ratio));
                    }
                }
            }
            match best {
                None => return false,
                Some((r, _)) => self.pivot(r, s),
            }
        }
    }

    fn set_objective(&mut self, cost: &[BigRational]) {
        let rhs = self.rhs();
        let mut obj = vec![BigRational::zero(); self.width + 1];
        obj[..cost.len()].clone_from_slice(cost);
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            let cb = if b < cost.len() { cost[b].clone() } else { BigRational::zero() };
            if cb.is_zero() {
                continue;
            }
            for j in 0..=rhs {
                if !row[j].is_zero() {
                    obj[j] -= &cb * &row[j];
                }
            }
        }
        self.obj = obj;
    }
}

/// Minimizes `c·x` subject to `a x = b`, `x ≥ 0`.
pub(crate) fn minimize(a: &[Vec<BigRational>], b: &[BigRational], c: &[BigRational]) -> LpOutcome {
    let m = a.len();
    let n = c.len();
    let width = n + m;
    let mut rows = Vec::with_capacity(m);
    for (i, row) in a.iter().enumerate() {
        let neg = b[i].is_negative();
        let mut t = vec![BigRational::zero(); width + 1];
        for (j, v) in row.iter().enumerate() {
            t[j] = if neg { -v.clone() } else { v.clone() };
        }
        t[n + i] = BigRational::one();
        t[width] = if neg { -b[i].clone() } else { b[i].clone() };
        rows.push(t);
    }
    let mut tab = Tableau { rows, obj: Vec::new(), basis: (n..n + m).collect(), width };

    let mut phase1 = vec![BigRational::zero(); width];
    for v in phase1.iter_mut().skip(n) {
        *v = BigRational::one();
    }
    tab.set_objective(&phase1);
    tab.optimize(width);
    if !tab.obj[width].is_zero() {
        return LpOutcome::Infeasible;
    }

    // Drive remaining artificial variables out of the basis.
    let mut r = 0;
    while r < tab.rows.len() {
        if tab.basis[r] >= n {
            match (0..n).find(|&j| !tab.rows[r][j].is_zero()) {
                Some(j) => tab.pivot(r, j),
                None => {
                    tab.rows.remove(r);
                    tab.basis.remove(r);
                    continue;
                }
            }
        }
        r += 1;
    }

    tab.set_objective(c);
    if !tab.optimize(n) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![BigRational::zero(); n];
    for (row, &bv) in tab.rows.iter().zip(&tab.basis) {
        if bv < n {
            x[bv] = row[width].clone();
        }
    }
    LpOutcome::Optimal(x)
}

/// Finds `λ ≥ 0` with `Σ λ_i g_i = target`.
pub(crate) fn cone_combination(gens: &[Vec<i64>], target: &[i64]) -> Option<Vec<BigRational>> {
    let r = target.len();
    let a: Vec<Vec<BigRational>> =
        (0..r).map(|k| gens.iter().map(|g| rat(g[k])).collect()).collect();
    let b: Vec<BigRational> = target.iter().map(|&t| rat(t)).collect();
    let c = vec![BigRational::zero(); gens.len()];
    match minimize(&a, &b, &c) {
        LpOutcome::Optimal(x) => Some(x),
        _ => None,
    }
}

/// Finds `λ ≥ 0`, `Σ λ = 1`, `Σ λ_i g_i = 0`.
pub(crate) fn positive_relation(gens: &[Vec<i64>]) -> Option<Vec<BigRational>> {
    let r = gens.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<BigRational>> =
        (0..r).map(|k| gens.iter().map(|g| rat(g[k])).collect()).collect();
    a.push(vec![BigRational::one(); gens.len()]);
    let mut b = vec![BigRational::zero(); r];
    b.push(BigRational::one());
    let c = vec![BigRational::zero(); gens.len()];
    match minimize(&a, &b, &c) {
        LpOutcome::Optimal(x) => Some(x),
        _ => None,
    }
}

/// Finds an integer functional `φ` with `φ·g ≥ 1` on `positive` and
/// `φ·g = 0` on `null`, scaled to primitive integer form.
pub(crate) fn integer_functional(positive: &[Vec<i64>], null: &[Vec<i64>], rank: usize) -> Option<Vec<i64>> {
    // Variables: φ⁺ (rank), φ⁻ (rank), one slack per positive generator.
    let nvars = 2 * rank + positive.len();
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (idx, g) in positive.iter().enumerate() {
        let mut row = vec![BigRational::zero(); nvars];
        for k in 0..rank {
            row[k] = rat(g[k]);
            row[rank + k] = rat(-g[k]);
        }
        row[2 * rank + idx] = rat(-1);
        a.push(row);
        b.push(BigRational::one());
    }
    for g in null {
        let mut row = vec![BigRational::zero(); nvars];
        for k in 0..rank {
            row[k] = rat(g[k]);
            row[rank + k] = rat(-g[k]);
        }
        a.push(row);
        b.push(BigRational::zero());
    }
    let mut c = vec![BigRational::zero(); nvars];
    for v in c.iter_mut().take(2 * rank) {
        *v = BigRational::one();
    }
    let x = match minimize(&a, &b, &c) {
        LpOutcome::Optimal(x) => x,
        _ => return None,
    };
    let phi: Vec<BigRational> = (0..rank).map(|k| &x[k] - &x[rank + k]).collect();
    let lcm = phi.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = phi.iter().map(|q| (q * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    let gcd = if gcd.is_zero() { BigInt::one() } else { gcd };
    ints.iter().map(|v| (v / &gcd).to_i64()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: i64) -> BigRational {
        rat(v)
    }

    #[test]
    fn simple_optimum() {
        // min -x - y s.t. x + y + s = 4, x + 3y + t = 6
        let a = vec![vec![r(1), r(1), r(1), r(0)], vec![r(1), r(3), r(0), r(1)]];
        let b = vec![r(4), r(6)];
        let c = vec![r(-1), r(-1), r(0), r(0)];
        match minimize(&a, &b, &c) {
            LpOutcome::Optimal(x) => assert_eq!(&x[0] + &x[1], r(4)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn infeasible_and_unbounded() {
        let a = vec![vec![r(1), r(1)]];
        assert_eq!(minimize(&a, &[r(-1)], &[r(0), r(0)]), LpOutcome::Infeasible);
        let a = vec![vec![r(1), r(-1)]];
        assert_eq!(minimize(&a, &[r(0)], &[r(-1), r(0)]), LpOutcome::Unbounded);
    }

    #[test]
    fn redundant_rows() {
        let a = vec![vec![r(1), r(1)], vec![r(2), r(2)]];
        let b = vec![r(2), r(4)];
        assert!(matches!(minimize(&a, &b, &[r(1), r(0)]), LpOutcome::Optimal(_)));
    }

    #[test]
    fn functional_for_hirzebruch_degrees() {
        let gens = vec![vec![1, 0], vec![-2, 1], vec![0, 1]];
        let phi = integer_functional(&gens, &[], 2).unwrap();
        for g in &gens {
            assert!(phi[0] * g[0] + phi[1] * g[1] >= 1);
        }
        assert!(positive_relation(&gens).is_none());
        assert!(positive_relation(&[vec![1], vec![-1]]).is_some());
    }
}
