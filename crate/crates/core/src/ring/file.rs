//! TOML ring files.
//!
//! ```toml
//! rank = 2
//! config_C = [[1, 0], [0, 1]]
//! irrelevant_ideal = ["x1*x2", [0, 1, 1, 0]]
//!
//! [[variables]]
//! name = "x1"
//! degree = [1, 0]
//!
//! [fan]
//! rays = [[1, 0], [0, 1], [-1, 0], [0, -1]]
//! cones = [[0, 1], [1, 2], [2, 3], [3, 0]]
//! ```
//!
//! Rank-one degrees may be written as bare integers. `regS` (a list of
//! degrees) overrides the computed reg(S); `[kaehler]` is kept verbatim.

use std::path::Path;

use serde::Deserialize;

use super::{parse_monomial, GradedRing, Monomial, RingError, Variable, Violation};
use crate::family::FanData;
use crate::lattice::DegreeVector;

#[derive(Deserialize)]
#[serde(untagged)]
enum DegreeSpec {
    Scalar(i64),
    Vector(Vec<i64>),
}

impl DegreeSpec {
    fn into_degree(self) -> DegreeVector {
        match self {
            DegreeSpec::Scalar(v) => DegreeVector::new(vec![v]),
            DegreeSpec::Vector(v) => DegreeVector::new(v),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum MonomialSpec {
    Text(String),
    Exponents(Vec<u32>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct VariableSpec {
    name: String,
    degree: DegreeSpec,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FanSpec {
    rays: Vec<Vec<i64>>,
    cones: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RingFile {
    rank: usize,
    variables: Vec<VariableSpec>,
    irrelevant_ideal: Vec<MonomialSpec>,
    #[serde(rename = "config_C")]
    config_c: Vec<DegreeSpec>,
    #[serde(rename = "regS", default)]
    reg_s: Option<Vec<DegreeSpec>>,
    #[serde(default)]
    fan: Option<FanSpec>,
    #[serde(default)]
    kaehler: Option<toml::Table>,
}

fn line_column(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rfind('\n').map_or(before.len(), |p| before.len() - p - 1) + 1;
    (line, column)
}

/// Parses and validates a ring from TOML text.
pub fn load_ring(text: &str) -> Result<GradedRing, RingError> {
    let parsed: RingFile = toml::from_str(text).map_err(|e| {
        let (line, column) = e.span().map_or((1, 1), |s| line_column(text, s.start));
        RingError::Parse { line, column, message: e.message().to_string() }
    })?;
    let variables: Vec<Variable> =
        parsed.variables.into_iter().map(|v| Variable { name: v.name, degree: v.degree.into_degree() }).collect();
    let names: Vec<String> = variables.iter().map(|v| v.name.clone()).collect();
    let mut irrelevant: Vec<Monomial> = Vec::new();
    for m in parsed.irrelevant_ideal {
        match m {
            MonomialSpec::Exponents(e) => irrelevant.push(e),
            MonomialSpec::Text(s) => {
                let mono = parse_monomial(&s, &names).map_err(|e| RingError::Parse {
                    line: text.find(&s).map_or(1, |o| line_column(text, o).0),
                    column: text.find(&s).map_or(1, |o| line_column(text, o).1),
                    message: e.to_string(),
                })?;
                irrelevant.push(mono);
            }
        }
    }
    let config: Vec<DegreeVector> = parsed.config_c.into_iter().map(DegreeSpec::into_degree).collect();
    let mut ring = GradedRing::new(parsed.rank, variables, irrelevant, config)?;
    if let Some(fan) = parsed.fan {
        let fan = FanData::new(fan.rays, fan.cones).map_err(|e| RingError::Violations(vec![Violation::InvalidFan(e.to_string())]))?;
        ring = ring.with_fan(fan)?;
    }
    if let Some(gens) = parsed.reg_s {
        let gens: Vec<DegreeVector> = gens.into_iter().map(DegreeSpec::into_degree).collect();
        ring = ring.with_reg_s(gens).map_err(|e| {
            RingError::Violations(vec![Violation::RankMismatch { what: format!("regS ({e})"), expected: parsed.rank, found: 0 }])
        })?;
    }
    if let Some(k) = parsed.kaehler {
        ring = ring.with_kaehler(k.to_string());
    }
    Ok(ring)
}

/// Reads and loads a ring file.
pub fn load_ring_file(path: impl AsRef<Path>) -> Result<GradedRing, RingError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| RingError::Io(format!("{}: {e}", path.display())))?;
    load_ring(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    const P1P1: &str = r#"
rank = 2
config_C = [[1, 0], [0, 1]]
irrelevant_ideal = ["x0*y0", "x0*y1", [0, 1, 1, 0], "x1*y1"]

[[variables]]
name = "x0"
degree = [1, 0]
[[variables]]
name = "x1"
degree = [1, 0]
[[variables]]
name = "y0"
degree = [0, 1]
[[variables]]
name = "y1"
degree = [0, 1]
"#;

    #[test]
    fn loads_product_ring() {
        let ring = load_ring(P1P1).unwrap();
        assert_eq!(ring.nvars(), 4);
        assert_eq!(ring.irrelevant_ideal().generators().len(), 4);
        assert!(ring.notes().is_empty());
    }

    #[test]
    fn reports_position() {
        let bad = "rank = 1\nconfig_C = [1]\nvariables = 3\n";
        match load_ring(bad) {
            Err(RingError::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn minimalizes_b() {
        let text = "rank = 1\nconfig_C = [1]\nirrelevant_ideal = [\"x\", \"x*y\", \"y\"]\n\
                    [[variables]]\nname = \"x\"\ndegree = 1\n[[variables]]\nname = \"y\"\ndegree = 1\n";
        let ring = load_ring(text).unwrap();
        assert_eq!(ring.irrelevant_ideal().generators().len(), 2);
        assert_eq!(ring.notes().len(), 1);
    }
}
