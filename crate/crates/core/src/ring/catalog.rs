//! Built-in rings used by the examples, tests and self-test.

use itertools::Itertools;

use super::{GradedRing, Monomial, RingError, Variable};
use crate::family::FanData;
use crate::lattice::DegreeVector;

fn var(name: impl Into<String>, degree: Vec<i64>) -> Variable {
    Variable { name: name.into(), degree: DegreeVector::new(degree) }
}

fn maximal_ideal(n: usize) -> Vec<Monomial> {
    (0..n)
        .map(|i| {
            let mut m = vec![0; n];
            m[i] = 1;
            m
        })
        .collect()
}

/// `K[x1..xn]` with every degree 1, B the maximal ideal and C = {1}.
pub fn standard(n: usize) -> Result<GradedRing, RingError> {
    weighted(&vec![1; n], 1)
}

/// Weighted grading `deg x_i = a_i`, B maximal, C = {c}.
pub fn weighted(a: &[i64], c: i64) -> Result<GradedRing, RingError> {
    let vars = a.iter().enumerate().map(|(i, &w)| var(format!("x{}", i + 1), vec![w])).collect();
    GradedRing::new(1, vars, maximal_ideal(a.len()), vec![DegreeVector::new(vec![c])])
}

/// Cox ring of `P^{m_1} × … × P^{m_l}` with variables `x{i}_{j}`, its
/// product fan, B the products of one variable per factor and C the
/// standard basis.
pub fn multiprojective(dims: &[usize]) -> Result<GradedRing, RingError> {
    let l = dims.len();
    let n: usize = dims.iter().map(|m| m + 1).sum();
    let ambient: usize = dims.iter().sum();
    let mut vars = Vec::new();
    let mut rays = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut offset = 0;
    for (f, &m) in dims.iter().enumerate() {
        let names: Vec<String> = if l == 2 && dims.iter().all(|&d| d == 1) {
            let letter = ["x", "y"][f];
            (0..=m).map(|j| format!("{letter}{j}")).collect()
        } else {
            (0..=m).map(|j| format!("x{}_{}", f + 1, j)).collect()
        };
        let mut block = Vec::new();
        for (j, name) in names.into_iter().enumerate() {
            let mut deg = vec![0; l];
            deg[f] = 1;
            vars.push(var(name, deg));
            let mut ray = vec![0i64; ambient];
            if j < m {
                ray[offset + j] = 1;
            } else {
                for r in ray.iter_mut().skip(offset).take(m) {
                    *r = -1;
                }
            }
            rays.push(ray);
            block.push(vars.len() - 1);
        }
        blocks.push(block);
        offset += m;
    }
    let irrelevant: Vec<Monomial> = blocks
        .iter()
        .multi_cartesian_product()
        .map(|choice| {
            let mut m = vec![0; n];
            for &&k in &choice {
                m[k] = 1;
            }
            m
        })
        .collect();
    let cones: Vec<Vec<usize>> = blocks
        .iter()
        .multi_cartesian_product()
        .map(|omitted| (0..n).filter(|k| !omitted.contains(&k)).collect())
        .collect();
    let config = (0..l).map(|i| DegreeVector::unit(l, i)).collect();
    let ring = GradedRing::new(l, vars, irrelevant, config)?;
    let fan = FanData::new(rays, cones).expect("product fan is well formed");
    ring.with_fan(fan)
}

/// Cox ring of the Hirzebruch surface `F_t` with its fan and C = {e1, e2}.
pub fn hirzebruch(t: i64) -> Result<GradedRing, RingError> {
    let vars = vec![var("x1", vec![1, 0]), var("x2", vec![-t, 1]), var("x3", vec![1, 0]), var("x4", vec![0, 1])];
    let irrelevant = vec![vec![1, 1, 0, 0], vec![1, 0, 0, 1], vec![0, 1, 1, 0], vec![0, 0, 1, 1]];
    let config = vec![DegreeVector::from([1, 0]), DegreeVector::from([0, 1])];
    let ring = GradedRing::new(2, vars, irrelevant, config)?;
    let rays = vec![vec![1, 0], vec![0, 1], vec![-1, t], vec![0, -1]];
    let cones = vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]];
    let fan = FanData::new(rays, cones).expect("Hirzebruch fan is well formed");
    ring.with_fan(fan)
}

/// Cox ring of `P^2` with its fan.
pub fn projective_plane() -> Result<GradedRing, RingError> {
    multiprojective(&[2])
}

/// Looks up a catalog ring by name: `standard:N`, `weighted:A1,A2,..`
/// (C = lcm), `multiproj:M1,M2,..`, `hirzebruch:T`, `p2`, `p1xp1`.
pub fn by_name(name: &str) -> Option<Result<GradedRing, RingError>> {
    let (kind, arg) = name.split_once(':').unwrap_or((name, ""));
    let ints = || -> Option<Vec<i64>> { arg.split(',').map(|s| s.trim().parse().ok()).collect() };
    match kind {
        "p2" => Some(projective_plane()),
        "p1xp1" => Some(multiprojective(&[1, 1])),
        "standard" => arg.parse().ok().map(standard),
        "hirzebruch" => arg.parse().ok().map(hirzebruch),
        "weighted" => {
            let a = ints()?;
            if a.iter().any(|&w| w <= 0) {
                return None;
            }
            let c = a.iter().fold(1i64, |acc, &w| num_integer::lcm(acc, w));
            Some(weighted(&a, c))
        }
        "multiproj" => {
            let dims = ints()?;
            if dims.iter().any(|&d| d <= 0) {
                return None;
            }
            Some(multiprojective(&dims.iter().map(|&d| d as usize).collect::<Vec<_>>()))
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hirzebruch_loads_for_small_t() {
        for t in 0..6 {
            let r = hirzebruch(t).unwrap();
            assert_eq!(r.irrelevant_ideal().generators().len(), 4);
        }
    }

    #[test]
    fn p1p2_irrelevant_ideal() {
        let r = multiprojective(&[1, 2]).unwrap();
        assert_eq!(r.nvars(), 5);
        assert_eq!(r.irrelevant_ideal().generators().len(), 6);
        assert_eq!(r.fan().unwrap().cones().len(), 6);
    }

    #[test]
    fn names() {
        assert!(by_name("weighted:2,3,5").unwrap().is_ok());
        assert!(by_name("bogus").is_none());
        assert_eq!(by_name("multiproj:1,1").unwrap().unwrap().variable_names(), vec!["x0", "x1", "y0", "y1"]);
    }
}
