//! Exact ranks of integer matrices over ℚ or a prime field.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// Coefficient field for rank computations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    #[default]
    Rational,
    /// ℤ/p for a prime `p < 2^32`.
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> crate::Result<Field> {
        let is_prime = (2..(1 << 32)).contains(&p) && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        if is_prime {
            Ok(Field::Prime(p))
        } else {
            Err(crate::Error::Invalid(format!("{p} is not a prime below 2^32")))
        }
    }
}

impl std::fmt::Display for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// A sparse row: column index to nonzero integer entry.
pub type SparseRow = BTreeMap<usize, i64>;

trait Arith {
    type E: Clone;
    fn lift(&self, v: i64) -> Self::E;
    fn is_zero(&self, v: &Self::E) -> bool;
    /// `a - f * b`
    fn sub_mul(&self, a: &Self::E, f: &Self::E, b: &Self::E) -> Self::E;
    fn div(&self, a: &Self::E, b: &Self::E) -> Self::E;
}

struct Q;

impl Arith for Q {
    type E = BigRational;
    fn lift(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self, v: &BigRational) -> bool {
        v.is_zero()
    }
    fn sub_mul(&self, a: &BigRational, f: &BigRational, b: &BigRational) -> BigRational {
        a - f * b
    }
    fn div(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a / b
    }
}

struct Fp(u64);

impl Fp {
    fn inv(&self, a: u64) -> u64 {
        let (mut base, mut exp, mut acc) = (a % self.0, self.0 - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.0;
            }
            base = base * base % self.0;
            exp >>= 1;
        }
        acc
    }
}

impl Arith for Fp {
    type E = u64;
    fn lift(&self, v: i64) -> u64 {
        v.rem_euclid(self.0 as i64) as u64
    }
    fn is_zero(&self, v: &u64) -> bool {
        *v == 0
    }
    fn sub_mul(&self, a: &u64, f: &u64, b: &u64) -> u64 {
        (a + self.0 - f * b % self.0) % self.0
    }
    fn div(&self, a: &u64, b: &u64) -> u64 {
        a * self.inv(*b) % self.0
    }
}

fn eliminate<A: Arith>(ar: &A, rows: &[SparseRow]) -> usize {
    // Pivot rows keyed by leading column; each pivot row is normalized to lead 1.
    let mut pivots: BTreeMap<usize, BTreeMap<usize, A::E>> = BTreeMap::new();
    for row in rows {
        let mut cur: BTreeMap<usize, A::E> =
            row.iter().filter(|(_, v)| **v != 0).map(|(c, v)| (*c, ar.lift(*v))).filter(|(_, v)| !ar.is_zero(v)).collect();
        while let Some((&lead, lead_val)) = cur.iter().next() {
            match pivots.get(&lead) {
                Some(prow) => {
                    let f = lead_val.clone();
                    for (c, pv) in prow {
                        let old = cur.get(c).cloned().unwrap_or_else(|| ar.lift(0));
                        let new = ar.sub_mul(&old, &f, pv);
                        if ar.is_zero(&new) {
                            cur.remove(c);
                        } else {
                            cur.insert(*c, new);
                        }
                    }
                }
                None => {
                    let lv = lead_val.clone();
                    let normalized = cur.into_iter().map(|(c, v)| (c, ar.div(&v, &lv))).collect();
                    pivots.insert(lead, normalized);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Rank of a sparse integer matrix given by rows.
pub fn sparse_rank(field: Field, rows: &[SparseRow]) -> usize {
    match field {
        Field::Rational => eliminate(&Q, rows),
        Field::Prime(p) => eliminate(&Fp(p), rows),
    }
}

/// Rank over ℚ of a dense integer matrix.
pub fn rational_rank_i64(rows: &[Vec<i64>]) -> usize {
    let sparse: Vec<SparseRow> = rows
        .iter()
        .map(|r| r.iter().enumerate().filter(|(_, v)| **v != 0).map(|(c, v)| (c, *v)).collect())
        .collect();
    sparse_rank(Field::Rational, &sparse)
}

/// Solves `Σ x_i cols_i = target` over ℚ for linearly independent columns.
/// Returns `None` if the target is outside their span. Free variables, if
/// any, are set to zero.
pub(crate) fn solve_independent(cols: &[Vec<i64>], target: &[i64]) -> Option<Vec<BigRational>> {
    let r = target.len();
    let l = cols.len();
    // Augmented matrix rows: equation k.
    let mut m: Vec<Vec<BigRational>> = (0..r)
        .map(|k| {
            let mut row: Vec<BigRational> = cols.iter().map(|c| BigRational::from_integer(BigInt::from(c[k]))).collect();
            row.push(BigRational::from_integer(BigInt::from(target[k])));
            row
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut top = 0;
    for col in 0..l {
        let Some(p) = (top..r).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(top, p);
        let lead = m[top][col].clone();
        for v in m[top].iter_mut() {
            *v = &*v / &lead;
        }
        let prow = m[top].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != top && !row[col].is_zero() {
                let f = row[col].clone();
                for (v, pv) in row.iter_mut().zip(&prow) {
                    *v -= &f * pv;
                }
            }
        }
        pivot_cols.push(col);
        top += 1;
    }
    if m[top..].iter().any(|row| !row[l].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); l];
    for (i, &c) in pivot_cols.iter().enumerate() {
        x[c] = m[i][l].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(entries: &[(usize, i64)]) -> SparseRow {
        entries.iter().copied().collect()
    }

    #[test]
    fn ranks_over_fields() {
        let m = vec![row(&[(0, 1), (1, 1)]), row(&[(0, 1), (1, -1)]), row(&[(0, 2)])];
        assert_eq!(sparse_rank(Field::Rational, &m), 2);
        // Over GF(2) the first two rows coincide and the third vanishes.
        assert_eq!(sparse_rank(Field::Prime(2), &m), 1);
        assert_eq!(rational_rank_i64(&[vec![1, 2], vec![2, 4]]), 1);
    }

    #[test]
    fn solve_simple() {
        let x = solve_independent(&[vec![1, 0], vec![1, 1]], &[3, 2]).unwrap();
        assert_eq!(x[0], BigRational::from_integer(1.into()));
        assert_eq!(x[1], BigRational::from_integer(2.into()));
        assert!(solve_independent(&[vec![1, 1]], &[1, 2]).is_none());
    }

    #[test]
    fn prime_validation() {
        assert!(Field::prime(7).is_ok());
        assert!(Field::prime(9).is_err());
    }
}
