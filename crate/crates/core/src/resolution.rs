//! Free graded resolutions: Taylor complexes of monomial ideals, exact
//! minimalization, type-J extraction and syzygy degree bounds.
//!
//! A complex `F_s → … → F_1 → F_0` stores the shifts of each
//! `F_p = ⊕ S(−d)` and the matrices of `d_p : F_p → F_{p−1}` column by
//! column. An entry in row `t`, column `s` of `d_p` is homogeneous of degree
//! `shift_p(s) − shift_{p−1}(t)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::DegreeVector;
use crate::region::ResolutionTypeJ;
use crate::ring::{lcm, monomials_of_degree, CoarseningVector, GradedRing, Monomial, MonomialIdeal};

/// A polynomial with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn monomial(coef: BigRational, exponent: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(exponent, coef);
        }
        Polynomial { terms }
    }

    pub fn constant(c: i64, nvars: usize) -> Self {
        Polynomial::monomial(BigRational::from_integer(BigInt::from(c)), vec![0; nvars])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigRational> {
        &self.terms
    }

    /// The coefficient if the polynomial is a nonzero constant.
    pub fn as_unit(&self) -> Option<&BigRational> {
        match self.terms.iter().next() {
            Some((e, c)) if self.terms.len() == 1 && e.iter().all(|&x| x == 0) => Some(c),
            _ => None,
        }
    }

    fn add_scaled(&mut self, other: &Polynomial, factor: &BigRational) {
        for (e, c) in &other.terms {
            let entry = self.terms.entry(e.clone()).or_insert_with(BigRational::zero);
            *entry += c * factor;
            if entry.is_zero() {
                self.terms.remove(e);
            }
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Monomial = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_scaled(&Polynomial::monomial(c1 * c2, e), &BigRational::one());
            }
        }
        out
    }

    /// The common degree of all terms, or `None` if inhomogeneous or zero.
    pub fn degree(&self, ring: &GradedRing) -> Option<DegreeVector> {
        let mut degs = self.terms.keys().map(|e| ring.degree_of(e));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let m = crate::ring::monomial_string(e, names);
                if m == "1" {
                    c.to_string()
                } else if c.is_one() {
                    m
                } else if *c == -BigRational::one() {
                    format!("-{m}")
                } else {
                    format!("{c}*{m}")
                }
            })
            .collect();
        parts.join(" + ").replace("+ -", "- ")
    }
}

/// Sparse column: row index to nonzero entry.
type Column = BTreeMap<usize, Polynomial>;

/// A complex of free graded modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedComplex {
    nvars: usize,
    terms: Vec<Vec<DegreeVector>>,
    /// `differentials[p − 1]` holds the columns of `d_p`.
    differentials: Vec<Vec<Column>>,
}

impl GradedComplex {
    /// Builds a complex; `differentials[p-1][s]` lists `(row, entry)` of
    /// column `s` of `d_p`.
    pub fn new(nvars: usize, terms: Vec<Vec<DegreeVector>>, differentials: Vec<Vec<Vec<(usize, Polynomial)>>>) -> Result<Self> {
        if differentials.len() + 1 != terms.len().max(1) {
            return Err(Error::Invalid(format!("{} terms need {} differentials", terms.len(), terms.len().saturating_sub(1))));
        }
        let mut diffs = Vec::new();
        for (k, cols) in differentials.into_iter().enumerate() {
            let p = k + 1;
            if cols.len() != terms[p].len() {
                return Err(Error::Invalid(format!("d_{p} has {} columns, F_{p} has rank {}", cols.len(), terms[p].len())));
            }
            let mut out = Vec::new();
            for col in cols {
                let mut c = Column::new();
                for (row, entry) in col {
                    if row >= terms[p - 1].len() {
                        return Err(Error::Invalid(format!("d_{p} refers to row {row} of F_{}", p - 1)));
                    }
                    if entry.terms.keys().any(|e| e.len() != nvars) {
                        return Err(Error::RankMismatch { expected: nvars, found: 0 });
                    }
                    if !entry.is_zero() {
                        c.insert(row, entry);
                    }
                }
                out.push(c);
            }
            diffs.push(out);
        }
        Ok(GradedComplex { nvars, terms, differentials: diffs })
    }

    pub fn terms(&self) -> &[Vec<DegreeVector>] {
        &self.terms
    }

    pub fn length(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }

    /// Entry of `d_p` in row `t`, column `s`.
    pub fn entry(&self, p: usize, t: usize, s: usize) -> Option<&Polynomial> {
        self.differentials.get(p.checked_sub(1)?)?.get(s)?.get(&t)
    }

    /// Checks homogeneity of every entry and `d_{p−1} ∘ d_p = 0`.
    pub fn validate(&self, ring: &GradedRing) -> Result<()> {
        if ring.nvars() != self.nvars {
            return Err(Error::RankMismatch { expected: ring.nvars(), found: self.nvars });
        }
        for level in &self.terms {
            for d in level {
                d.ensure_rank(ring.rank())?;
            }
        }
        for (k, cols) in self.differentials.iter().enumerate() {
            let p = k + 1;
            for (s, col) in cols.iter().enumerate() {
                for (t, entry) in col {
                    let want = &self.terms[p][s] - &self.terms[p - 1][*t];
                    if entry.degree(ring).as_ref() != Some(&want) {
                        return Err(Error::Invariant(format!("d_{p} entry ({t},{s}) is not homogeneous of degree {want}")));
                    }
                }
            }
        }
        for p in 2..self.terms.len() {
            for (s, col) in self.differentials[p - 1].iter().enumerate() {
                let mut acc: BTreeMap<usize, Polynomial> = BTreeMap::new();
                for (mid, a) in col {
                    for (t, b) in &self.differentials[p - 2][*mid] {
                        acc.entry(*t).or_default().add_scaled(&b.mul(a), &BigRational::one());
                    }
                }
                if let Some((t, _)) = acc.iter().find(|(_, v)| !v.is_zero()) {
                    return Err(Error::Invariant(format!("d_{} ∘ d_{p} is nonzero in row {t}, column {s}", p - 1)));
                }
            }
        }
        Ok(())
    }

    /// True iff no differential has a unit entry.
    pub fn is_minimal(&self) -> bool {
        self.find_unit().is_none()
    }

    fn find_unit(&self) -> Option<(usize, usize, usize)> {
        for (k, cols) in self.differentials.iter().enumerate() {
            for (s, col) in cols.iter().enumerate() {
                if let Some((t, _)) = col.iter().find(|(_, e)| e.as_unit().is_some()) {
                    return Some((k + 1, s, *t));
                }
            }
        }
        None
    }

    /// Cancels the unit entry in row `t`, column `s` of `d_p`.
    fn cancel(&mut self, p: usize, s: usize, t: usize) {
        let pivot_col = self.differentials[p - 1][s].clone();
        let u = pivot_col[&t].as_unit().expect("pivot is a unit").clone();
        let cols = &mut self.differentials[p - 1];
        for (s2, col) in cols.iter_mut().enumerate() {
            if s2 == s {
                continue;
            }
            let Some(a) = col.get(&t).cloned() else { continue };
            let factor = -BigRational::one() / &u;
            for (t2, b) in &pivot_col {
                let entry = col.entry(*t2).or_default();
                entry.add_scaled(&a.mul(b), &factor);
                if entry.is_zero() {
                    col.remove(t2);
                }
            }
        }
        // Drop column s and row t of d_p.
        cols.remove(s);
        for col in cols.iter_mut() {
            *col = std::mem::take(col).into_iter().filter(|(r, _)| *r != t).map(|(r, e)| (if r > t { r - 1 } else { r }, e)).collect();
        }
        // Row s of d_{p+1}.
        if let Some(next) = self.differentials.get_mut(p) {
            for col in next.iter_mut() {
                *col = std::mem::take(col).into_iter().filter(|(r, _)| *r != s).map(|(r, e)| (if r > s { r - 1 } else { r }, e)).collect();
            }
        }
        // Column t of d_{p−1}.
        if p >= 2 {
            self.differentials[p - 2].remove(t);
        }
        self.terms[p].remove(s);
        self.terms[p - 1].remove(t);
    }

    /// Removes trailing zero terms.
    fn trim(&mut self) {
        while self.terms.len() > 1 && self.terms.last().is_some_and(Vec::is_empty) {
            self.terms.pop();
            self.differentials.pop();
        }
    }

    /// The shifts of each term as a type J.
    pub fn type_j(&self) -> ResolutionTypeJ {
        ResolutionTypeJ::new(self.terms.clone())
    }

    pub fn display_with(&self, names: &[String]) -> String {
        let mut out = String::new();
        for (p, level) in self.terms.iter().enumerate() {
            let shifts: Vec<String> = level.iter().map(ToString::to_string).collect();
            out.push_str(&format!("F_{p}: {}\n", shifts.join(" ")));
            if p >= 1 {
                for (s, col) in self.differentials[p - 1].iter().enumerate() {
                    for (t, e) in col {
                        out.push_str(&format!("  d_{p}[{t},{s}] = {}\n", e.display_with(names)));
                    }
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ComplexFile::from(self)).expect("complex serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: ComplexFile = serde_json::from_str(text).map_err(|e| Error::Invalid(format!("complex file: {e}")))?;
        file.try_into()
    }
}

impl fmt::Display for GradedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        write!(f, "{}", self.display_with(&names))
    }
}

#[derive(Serialize, Deserialize)]
struct TermFile {
    coef: String,
    exponent: Monomial,
}

#[derive(Serialize, Deserialize)]
struct EntryFile {
    row: usize,
    col: usize,
    terms: Vec<TermFile>,
}

/// Interchange format for complexes.
#[derive(Serialize, Deserialize)]
struct ComplexFile {
    nvars: usize,
    terms: Vec<Vec<DegreeVector>>,
    differentials: Vec<Vec<EntryFile>>,
}

impl From<&GradedComplex> for ComplexFile {
    fn from(c: &GradedComplex) -> Self {
        let differentials = c
            .differentials
            .iter()
            .map(|cols| {
                cols.iter()
                    .enumerate()
                    .flat_map(|(s, col)| {
                        col.iter().map(move |(t, e)| EntryFile {
                            row: *t,
                            col: s,
                            terms: e.terms.iter().map(|(x, q)| TermFile { coef: q.to_string(), exponent: x.clone() }).collect(),
                        })
                    })
                    .collect()
            })
            .collect();
        ComplexFile { nvars: c.nvars, terms: c.terms.clone(), differentials }
    }
}

impl TryFrom<ComplexFile> for GradedComplex {
    type Error = Error;

    fn try_from(file: ComplexFile) -> Result<Self> {
        let mut diffs = Vec::new();
        for (k, entries) in file.differentials.into_iter().enumerate() {
            let width = file.terms.get(k + 1).map_or(0, Vec::len);
            let mut cols: Vec<Vec<(usize, Polynomial)>> = vec![Vec::new(); width];
            for e in entries {
                let mut poly = Polynomial::zero();
                for t in e.terms {
                    let q = BigRational::from_str(&t.coef).map_err(|err| Error::Invalid(format!("coefficient '{}': {err}", t.coef)))?;
                    poly.add_scaled(&Polynomial::monomial(q, t.exponent), &BigRational::one());
                }
                cols.get_mut(e.col)
                    .ok_or_else(|| Error::Invalid(format!("d_{} has no column {}", k + 1, e.col)))?
                    .push((e.row, poly));
            }
            diffs.push(cols);
        }
        GradedComplex::new(file.nvars, file.terms, diffs)
    }
}

/// The Taylor resolution of `S/I`.
pub fn taylor_complex(ring: &GradedRing, ideal: &MonomialIdeal) -> Result<GradedComplex> {
    let gens = ideal.generators();
    let q = gens.len();
    let cap = crate::caps::taylor_cap();
    if q > cap {
        return Err(Error::CapExceeded { what: "Taylor complex generators".into(), size: q, cap });
    }
    let n = ring.nvars();
    let mut subsets: Vec<Vec<u64>> = vec![Vec::new(); q + 1];
    for t in 0u64..(1 << q) {
        subsets[t.count_ones() as usize].push(t);
    }
    let lcm_of = |t: u64| -> Monomial {
        (0..q).filter(|k| t >> k & 1 == 1).fold(vec![0; n], |acc, k| lcm(&acc, &gens[k]))
    };
    let terms: Vec<Vec<DegreeVector>> = subsets.iter().map(|l| l.iter().map(|&t| ring.degree_of(&lcm_of(t))).collect()).collect();
    let mut diffs = Vec::new();
    for p in 1..=q {
        let index: BTreeMap<u64, usize> = subsets[p - 1].iter().enumerate().map(|(i, t)| (*t, i)).collect();
        let cols = subsets[p]
            .iter()
            .map(|&t| {
                let top = lcm_of(t);
                (0..q)
                    .filter(|k| t >> k & 1 == 1)
                    .map(|k| {
                        let face = t & !(1 << k);
                        let below = (t & ((1u64 << k) - 1)).count_ones();
                        let quotient: Monomial = top.iter().zip(lcm_of(face)).map(|(a, b)| a - b).collect();
                        let sign = if below.is_multiple_of(2) { 1 } else { -1 };
                        (index[&face], Polynomial::monomial(BigRational::from_integer(sign.into()), quotient))
                    })
                    .collect()
            })
            .collect();
        diffs.push(cols);
    }
    GradedComplex::new(n, terms, diffs)
}

/// Cancels unit entries, lowest `(p, column, row)` first, until none remain.
pub fn minimalize(complex: &GradedComplex) -> GradedComplex {
    let mut c = complex.clone();
    while let Some((p, s, t)) = c.find_unit() {
        c.cancel(p, s, t);
    }
    c.trim();
    c
}

/// `J_p` = the multiset of shifts at level p.
pub fn extract_type_j(complex: &GradedComplex) -> ResolutionTypeJ {
    complex.type_j()
}

/// The minimal resolution of `S/I` via its Taylor complex.
pub fn minimal_resolution(ring: &GradedRing, ideal: &MonomialIdeal) -> Result<GradedComplex> {
    Ok(minimalize(&taylor_complex(ring, ideal)?))
}

/// The regions `K_p = {d : v_j·d ≤ b_j + p·s_j + c_j − 1 ∀j}`.
#[derive(Clone, Debug)]
pub struct SyzygyBox {
    vectors: Vec<CoarseningVector>,
    bounds: Vec<i64>,
}

impl SyzygyBox {
    pub fn new(vectors: Vec<CoarseningVector>, bounds: Vec<i64>) -> Result<Self> {
        if vectors.len() != bounds.len() {
            return Err(Error::Invalid(format!("{} coarsening vectors but {} bounds", vectors.len(), bounds.len())));
        }
        Ok(SyzygyBox { vectors, bounds })
    }

    /// Right-hand side of constraint `j` at level `p`.
    pub fn bound(&self, j: usize, p: usize) -> i64 {
        let v = &self.vectors[j];
        self.bounds[j] + p as i64 * v.s() + v.c() - 1
    }

    /// Indices of violated constraints for `d` at level `p`.
    pub fn violations(&self, p: usize, d: &DegreeVector) -> Vec<usize> {
        (0..self.vectors.len()).filter(|&j| self.vectors[j].apply(d) > self.bound(j, p)).collect()
    }

    pub fn contains(&self, p: usize, d: &DegreeVector) -> bool {
        self.violations(p, d).is_empty()
    }

    pub fn vectors(&self) -> &[CoarseningVector] {
        &self.vectors
    }
}

/// Result of a degree-bound check at one level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelCheck {
    pub p: usize,
    /// `(degree, violated constraint indices)`.
    pub violations: Vec<(DegreeVector, Vec<usize>)>,
}

impl LevelCheck {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every `d ∈ J_p` against `K_p`.
pub fn check_degree_bounds(j: &ResolutionTypeJ, bx: &SyzygyBox) -> Vec<LevelCheck> {
    j.levels()
        .iter()
        .enumerate()
        .map(|(p, level)| LevelCheck {
            p,
            violations: level
                .iter()
                .filter_map(|d| {
                    let v = bx.violations(p, d);
                    (!v.is_empty()).then(|| (d.clone(), v))
                })
                .collect(),
        })
        .collect()
}

/// `(Σ_p (−1)^p Σ_{d∈J_p} dim S_{t−d}, dim (S/I)_t)`; equal when J is the
/// type of a resolution of `S/I`.
pub fn hilbert_check(ring: &GradedRing, ideal: &MonomialIdeal, j: &ResolutionTypeJ, t: &DegreeVector) -> Result<(i64, i64)> {
    let mut alt = 0i64;
    for (p, level) in j.levels().iter().enumerate() {
        for d in level {
            let count = monomials_of_degree(ring, &(t - d))?.len() as i64;
            alt += if p % 2 == 0 { count } else { -count };
        }
    }
    let direct = monomials_of_degree(ring, t)?.iter().filter(|a| !ideal.contains(a)).count() as i64;
    Ok((alt, direct))
}
