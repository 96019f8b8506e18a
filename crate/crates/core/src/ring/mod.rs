//! The graded ring context: variables with degrees, the irrelevant ideal B,
//! the configuration C, coarsening vectors and graded-piece enumeration.

pub mod catalog;
mod ideal;
mod file;

use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use thiserror::Error;

use crate::error::{Error, Result};
use crate::family::FanData;
use crate::lattice::{check_pointed, AffineSemigroup, DegreeVector, GeneratorSet, PointednessCertificate};

pub use ideal::{divides, lcm, monomial_string, parse_monomial, support_mask, Monomial, MonomialIdeal};
pub use file::{load_ring, load_ring_file};

/// A polynomial variable with its degree in G.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    pub degree: DegreeVector,
}

/// A violated standing assumption of the ring context.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("the ring has no variables")]
    NoVariables,
    #[error("duplicate variable name '{0}'")]
    DuplicateVariable(String),
    #[error("zero-degree variable '{0}'")]
    ZeroDegree(String),
    #[error("variable degrees do not span a pointed cone: {0}")]
    DegreesNotPointed(String),
    #[error("{what} has rank {found}, expected {expected}")]
    RankMismatch { what: String, expected: usize, found: usize },
    #[error("empty configuration C")]
    EmptyConfiguration,
    #[error("configuration C is not pointed: {0}")]
    ConfigurationNotPointed(String),
    #[error("the irrelevant ideal B has no generators")]
    EmptyIrrelevantIdeal,
    #[error("irrelevant ideal generator {0} is the unit monomial")]
    UnitInIrrelevantIdeal(usize),
    #[error("invalid fan: {0}")]
    InvalidFan(String),
}

/// Failure to load a ring context.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("invalid ring: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    Violations(Vec<Violation>),
    #[error("cannot read ring file: {0}")]
    Io(String),
}

/// A polynomial ring graded by G = ℤ^r with irrelevant ideal B and
/// configuration C. Immutable after construction.
#[derive(Clone, Debug)]
pub struct GradedRing {
    rank: usize,
    variables: Vec<Variable>,
    irrelevant: MonomialIdeal,
    config: GeneratorSet,
    nc: Arc<AffineSemigroup>,
    degree_semigroup: Arc<AffineSemigroup>,
    pointedness: PointednessCertificate,
    fan: Option<FanData>,
    reg_s: Option<Vec<DegreeVector>>,
    kaehler: Option<String>,
    notes: Vec<String>,
}

impl GradedRing {
    /// Validates the standing assumptions and builds the context. B is
    /// minimalized by divisibility.
    pub fn new(
        rank: usize,
        variables: Vec<Variable>,
        irrelevant: Vec<Monomial>,
        config: Vec<DegreeVector>,
    ) -> std::result::Result<Self, RingError> {
        let mut violations = Vec::new();
        let n = variables.len();
        if n == 0 {
            violations.push(Violation::NoVariables);
        }
        for (i, v) in variables.iter().enumerate() {
            if variables[..i].iter().any(|w| w.name == v.name) {
                violations.push(Violation::DuplicateVariable(v.name.clone()));
            }
            if v.degree.rank() != rank {
                violations.push(Violation::RankMismatch {
                    what: format!("degree of {}", v.name),
                    expected: rank,
                    found: v.degree.rank(),
                });
            } else if v.degree.is_zero() {
                violations.push(Violation::ZeroDegree(v.name.clone()));
            }
        }
        for (k, c) in config.iter().enumerate() {
            if c.rank() != rank {
                violations.push(Violation::RankMismatch { what: format!("configuration vector {k}"), expected: rank, found: c.rank() });
            }
        }
        if config.is_empty() {
            violations.push(Violation::EmptyConfiguration);
        }
        let mut irrelevant_ok = true;
        for (k, m) in irrelevant.iter().enumerate() {
            if m.len() != n {
                violations.push(Violation::RankMismatch { what: format!("irrelevant ideal generator {k}"), expected: n, found: m.len() });
                irrelevant_ok = false;
            } else if m.iter().all(|&e| e == 0) {
                violations.push(Violation::UnitInIrrelevantIdeal(k));
            }
        }
        if irrelevant.is_empty() {
            violations.push(Violation::EmptyIrrelevantIdeal);
        }
        if !violations.is_empty() {
            return Err(RingError::Violations(violations));
        }

        let degrees = GeneratorSet::new(rank, variables.iter().map(|v| v.degree.clone()).collect())
            .map_err(|e| RingError::Violations(vec![Violation::DegreesNotPointed(e.to_string())]))?;
        let pointedness = check_pointed(&degrees).map_err(|e| RingError::Violations(vec![Violation::DegreesNotPointed(e.to_string())]))?;
        if !pointedness.is_pointed() {
            violations.push(Violation::DegreesNotPointed(pointedness.to_string()));
        }
        let config = GeneratorSet::new(rank, config).expect("ranks checked above");
        let config_cert = check_pointed(&config).map_err(|e| RingError::Violations(vec![Violation::ConfigurationNotPointed(e.to_string())]))?;
        if !config_cert.is_pointed() {
            violations.push(Violation::ConfigurationNotPointed(config_cert.to_string()));
        }
        if !violations.is_empty() {
            return Err(RingError::Violations(violations));
        }

        let mut notes = Vec::new();
        let ideal = MonomialIdeal::new(n, irrelevant.clone()).map_err(|e| RingError::Violations(vec![Violation::RankMismatch {
            what: format!("irrelevant ideal ({e})"),
            expected: n,
            found: n,
        }]))?;
        debug_assert!(irrelevant_ok);
        if ideal.generators().len() != irrelevant.len() {
            notes.push(format!(
                "irrelevant ideal minimalized from {} to {} generators",
                irrelevant.len(),
                ideal.generators().len()
            ));
        }
        let nc = Arc::new(AffineSemigroup::new(config.normalized()).map_err(|e| {
            RingError::Violations(vec![Violation::ConfigurationNotPointed(e.to_string())])
        })?);
        let degree_semigroup = Arc::new(
            AffineSemigroup::new(degrees).map_err(|e| RingError::Violations(vec![Violation::DegreesNotPointed(e.to_string())]))?,
        );
        Ok(GradedRing {
            rank,
            variables,
            irrelevant: ideal,
            config,
            nc,
            degree_semigroup,
            pointedness,
            fan: None,
            reg_s: None,
            kaehler: None,
            notes,
        })
    }

    /// Attaches a fan after checking it indexes the ring's variables.
    pub fn with_fan(mut self, fan: FanData) -> std::result::Result<Self, RingError> {
        if fan.rays().len() != self.variables.len() {
            return Err(RingError::Violations(vec![Violation::InvalidFan(format!(
                "{} rays for {} variables",
                fan.rays().len(),
                self.variables.len()
            ))]));
        }
        self.fan = Some(fan);
        Ok(self)
    }

    /// Declares reg(S) by generators, overriding the computed region.
    pub fn with_reg_s(mut self, generators: Vec<DegreeVector>) -> Result<Self> {
        for g in &generators {
            g.ensure_rank(self.rank)?;
        }
        self.reg_s = Some(generators);
        Ok(self)
    }

    /// Untrusted, unchecked metadata about the Kaehler cone.
    pub fn with_kaehler(mut self, text: String) -> Self {
        self.kaehler = Some(text);
        self
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn variable_names(&self) -> Vec<String> {
        self.variables.iter().map(|v| v.name.clone()).collect()
    }

    pub fn degrees(&self) -> Vec<DegreeVector> {
        self.variables.iter().map(|v| v.degree.clone()).collect()
    }

    pub fn degree_of(&self, exponent: &[u32]) -> DegreeVector {
        let mut d = DegreeVector::zero(self.rank);
        for (v, &e) in self.variables.iter().zip(exponent) {
            if e > 0 {
                d = &d + &(&v.degree * e as i64);
            }
        }
        d
    }

    pub fn irrelevant_ideal(&self) -> &MonomialIdeal {
        &self.irrelevant
    }

    pub fn config(&self) -> &GeneratorSet {
        &self.config
    }

    /// ℕC.
    pub fn nc(&self) -> &Arc<AffineSemigroup> {
        &self.nc
    }

    /// Q = ℕ{deg x_i}.
    pub fn degree_semigroup(&self) -> &Arc<AffineSemigroup> {
        &self.degree_semigroup
    }

    pub fn pointedness(&self) -> &PointednessCertificate {
        &self.pointedness
    }

    pub fn fan(&self) -> Option<&FanData> {
        self.fan.as_ref()
    }

    pub fn declared_reg_s(&self) -> Option<&[DegreeVector]> {
        self.reg_s.as_deref()
    }

    pub fn kaehler(&self) -> Option<&str> {
        self.kaehler.as_deref()
    }

    /// Informational messages produced while loading.
    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v.name == name)
    }

    pub fn format_monomial(&self, m: &[u32]) -> String {
        monomial_string(m, &self.variable_names())
    }
}

impl fmt::Display for GradedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring over Z^{} in {} variables", self.rank, self.nvars())?;
        for v in &self.variables {
            writeln!(f, "  deg {} = {}", v.name, v.degree)?;
        }
        writeln!(f, "  B = {}", self.irrelevant.display_with(&self.variable_names()))?;
        write!(f, "  C = {}", self.config.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
    }
}

/// A coarsening vector `v` with `v·deg x_i ≥ 0` and its constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoarseningVector {
    v: DegreeVector,
    degrees: Vec<i64>,
    positive_vars: Vec<usize>,
    c: i64,
    s: i64,
}

impl CoarseningVector {
    pub fn vector(&self) -> &DegreeVector {
        &self.v
    }

    /// `deg_v(x_i)` for each variable.
    pub fn coarse_degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn positive_variables(&self) -> &[usize] {
        &self.positive_vars
    }

    /// Variables of coarse degree zero, treated as constants.
    pub fn zero_variables(&self) -> Vec<usize> {
        (0..self.degrees.len()).filter(|i| self.degrees[*i] == 0).collect()
    }

    /// True iff every variable has positive coarse degree.
    pub fn is_positive(&self) -> bool {
        self.positive_vars.len() == self.degrees.len()
    }

    /// `c_v`: lcm of the positive coarse degrees.
    pub fn c(&self) -> i64 {
        self.c
    }

    /// `s_v = max(n'·c_v − Σ_{positive} deg_v, c_v)`.
    pub fn s(&self) -> i64 {
        self.s
    }

    /// `deg_v(d) = v·d`.
    pub fn apply(&self, d: &DegreeVector) -> i64 {
        self.v.dot(d)
    }

    /// The ideal 𝔪 of v-positive variables.
    pub fn ideal(&self) -> MonomialIdeal {
        MonomialIdeal::variables(self.degrees.len(), &self.positive_vars).expect("variable count checked at load")
    }
}

/// Computes coarse degrees and the constants `c_v`, `s_v`.
pub fn classify_coarsening(ring: &GradedRing, v: &DegreeVector) -> Result<CoarseningVector> {
    v.ensure_rank(ring.rank())?;
    let degrees: Vec<i64> = ring.variables().iter().map(|x| v.dot(&x.degree)).collect();
    if let Some((i, &d)) = degrees.iter().enumerate().find(|(_, d)| **d < 0) {
        return Err(Error::NotCoarsening { variable: ring.variables()[i].name.clone(), degree: d });
    }
    let positive_vars: Vec<usize> = (0..degrees.len()).filter(|&i| degrees[i] > 0).collect();
    if positive_vars.is_empty() {
        return Err(Error::Precondition(format!("coarsening vector {v} gives every variable degree zero")));
    }
    let c = positive_vars.iter().fold(1i64, |acc, &i| acc.lcm(&degrees[i]));
    let sum: i64 = positive_vars.iter().map(|&i| degrees[i]).sum();
    let s = (positive_vars.len() as i64 * c - sum).max(c);
    Ok(CoarseningVector { v: v.clone(), degrees, positive_vars, c, s })
}

/// All exponent vectors `a ∈ ℕ^n` of degree `d`.
pub fn monomials_of_degree(ring: &GradedRing, d: &DegreeVector) -> Result<Vec<Monomial>> {
    let reps = ring.degree_semigroup().representations(d)?;
    Ok(reps.into_iter().map(|w| w.into_iter().map(|e| e as u32).collect()).collect())
}
