//! Integer lattices in echelon (Hermite) form with canonical coset reduction.

/// A sublattice of ℤ^r kept as an echelon basis with positive pivots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct IntLattice {
    rank: usize,
    /// `(pivot column, row)` pairs with strictly increasing pivot columns.
    basis: Vec<(usize, Vec<i128>)>,
}

fn floor_div(a: i128, b: i128) -> i128 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

fn axpy(dst: &mut [i128], q: i128, src: &[i128]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d = s
            .checked_mul(q)
            .and_then(|p| d.checked_sub(p))
            .expect("lattice basis entries overflowed i128");
    }
}

impl IntLattice {
    /// The lattice spanned by `gens` inside ℤ^rank.
    pub(crate) fn from_generators(gens: &[Vec<i64>], rank: usize) -> Self {
        let mut rows: Vec<Vec<i128>> = gens
            .iter()
            .map(|g| g.iter().map(|&v| v as i128).collect())
            .filter(|g: &Vec<i128>| g.iter().any(|&v| v != 0))
            .collect();
        let mut basis = Vec::new();
        let mut top = 0;
        for col in 0..rank {
            loop {
                let mut best: Option<usize> = None;
                for i in top..rows.len() {
                    if rows[i][col] != 0 && best.is_none_or(|b| rows[i][col].abs() < rows[b][col].abs()) {
                        best = Some(i);
                    }
                }
                let Some(b) = best else { break };
                rows.swap(top, b);
                let pivot_row = rows[top].clone();
                let mut done = true;
                for row in rows.iter_mut().skip(top + 1) {
                    if row[col] != 0 {
                        let q = row[col] / pivot_row[col];
                        axpy(row, q, &pivot_row);
                        if row[col] != 0 {
                            done = false;
                        }
                    }
                }
                if done {
                    break;
                }
            }
            if top < rows.len() && rows[top][col] != 0 {
                if rows[top][col] < 0 {
                    for v in rows[top].iter_mut() {
                        *v = -*v;
                    }
                }
                top += 1;
                basis.push(col);
            }
        }
        rows.truncate(top);
        let mut basis: Vec<(usize, Vec<i128>)> = basis.into_iter().zip(rows).collect();
        // Reduce entries above each pivot into [0, pivot).
        for k in 0..basis.len() {
            let (col, row) = basis[k].clone();
            for above in basis.iter_mut().take(k) {
                let q = floor_div(above.1[col], row[col]);
                if q != 0 {
                    axpy(&mut above.1, q, &row);
                }
            }
        }
        IntLattice { rank, basis }
    }

    pub(crate) fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Canonical representative of `v` modulo the lattice.
    pub(crate) fn reduce(&self, v: &[i64]) -> Vec<i64> {
        if self.basis.is_empty() {
            return v.to_vec();
        }
        let mut x: Vec<i128> = v.iter().map(|&a| a as i128).collect();
        for (col, row) in &self.basis {
            let q = floor_div(x[*col], row[*col]);
            if q != 0 {
                axpy(&mut x, q, row);
            }
        }
        x.into_iter()
            .map(|a| i64::try_from(a).expect("coset representative overflowed i64"))
            .collect()
    }

    pub(crate) fn contains(&self, v: &[i64]) -> bool {
        self.reduce(v).iter().all(|&a| a == 0)
    }

    /// Canonical coset representatives of ℤ^r modulo a full-rank lattice.
    pub(crate) fn coset_representatives(&self) -> Vec<Vec<i64>> {
        assert_eq!(self.dimension(), self.rank, "coset enumeration needs a full-rank lattice");
        let mut reps = vec![vec![0i64; self.rank]];
        for (col, row) in &self.basis {
            let pivot = row[*col] as i64;
            reps = reps
                .into_iter()
                .flat_map(|r| {
                    (0..pivot).map(move |t| {
                        let mut r = r.clone();
                        r[*col] = t;
                        r
                    })
                })
                .collect();
        }
        reps
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_and_cosets() {
        let l = IntLattice::from_generators(&[vec![2, 0], vec![1, 3], vec![3, 3]], 2);
        assert_eq!(l.dimension(), 2);
        assert!(l.contains(&[2, 0]));
        assert!(l.contains(&[1, 3]));
        assert!(!l.contains(&[1, 0]));
        assert_eq!(l.coset_representatives().len(), 6);
        assert_eq!(l.reduce(&[5, 7]), l.reduce(&[5 - 2, 7]));
    }

    #[test]
    fn lower_dimensional() {
        let l = IntLattice::from_generators(&[vec![1, -1], vec![-2, 2]], 2);
        assert_eq!(l.dimension(), 1);
        assert!(l.contains(&[3, -3]));
        assert!(!l.contains(&[1, 1]));
        assert_eq!(l.reduce(&[4, 0]), l.reduce(&[0, 4]));
    }
}
