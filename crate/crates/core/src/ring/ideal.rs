//! Monomial ideals stored by minimal generators.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An exponent vector in ℕ^n.
pub type Monomial = Vec<u32>;

/// Bitmask of variables appearing in a monomial (n ≤ 64).
pub fn support_mask(m: &[u32]) -> u64 {
    m.iter().enumerate().filter(|(_, e)| **e > 0).fold(0, |acc, (i, _)| acc | (1 << i))
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn lcm(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// A monomial ideal of `K[x_1..x_n]`; the zero ideal has no generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    nvars: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes by divisibility and sorts the generators.
    pub fn new(nvars: usize, generators: Vec<Monomial>) -> Result<Self> {
        if nvars > 64 {
            return Err(Error::CapExceeded { what: "number of variables".into(), size: nvars, cap: 64 });
        }
        for g in &generators {
            if g.len() != nvars {
                return Err(Error::RankMismatch { expected: nvars, found: g.len() });
            }
        }
        Ok(MonomialIdeal { nvars, generators: minimal_generators(generators) })
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, generators: Vec::new() }
    }

    /// The ideal generated by the listed variables.
    pub fn variables(nvars: usize, vars: &[usize]) -> Result<Self> {
        let gens = vars
            .iter()
            .map(|&v| {
                let mut m = vec![0; nvars];
                m[v] = 1;
                m
            })
            .collect();
        MonomialIdeal::new(nvars, gens)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// `x^a ∈ I`.
    pub fn contains(&self, a: &[u32]) -> bool {
        self.generators.iter().any(|g| divides(g, a))
    }

    /// `I + J`.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<Self> {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        MonomialIdeal::new(self.nvars, gens)
    }

    /// Variables dividing some generator.
    pub fn support(&self) -> u64 {
        self.generators.iter().fold(0, |acc, g| acc | support_mask(g))
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(|g| g.iter().all(|&e| e <= 1))
    }

    /// Minimal primes of a squarefree monomial ideal, as variable masks
    /// (minimal vertex covers of the generator supports).
    pub fn minimal_primes(&self) -> Result<Vec<u64>> {
        if !self.is_squarefree() {
            return Err(Error::Precondition("minimal primes are computed for squarefree ideals only".into()));
        }
        if self.nvars > 24 {
            return Err(Error::CapExceeded { what: "variables for prime decomposition".into(), size: self.nvars, cap: 24 });
        }
        let supports: Vec<u64> = self.generators.iter().map(|g| support_mask(g)).collect();
        let mut covers: Vec<u64> = (0u64..(1 << self.nvars))
            .filter(|mask| supports.iter().all(|s| s & mask != 0))
            .collect();
        covers.sort_by_key(|m| m.count_ones());
        let mut minimal: Vec<u64> = Vec::new();
        for c in covers {
            if minimal.iter().all(|m| m & c != *m) {
                minimal.push(c);
            }
        }
        minimal.sort();
        Ok(minimal)
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.generators.is_empty() {
            return "(0)".into();
        }
        let parts: Vec<String> = self.generators.iter().map(|g| monomial_string(g, names)).collect();
        format!("({})", parts.join(", "))
    }
}

pub fn monomial_string(g: &[u32], names: &[String]) -> String {
    let factors: Vec<String> = g
        .iter()
        .enumerate()
        .filter(|(_, e)| **e > 0)
        .map(|(i, e)| if *e == 1 { names[i].clone() } else { format!("{}^{}", names[i], e) })
        .collect();
    if factors.is_empty() {
        "1".into()
    } else {
        factors.join("*")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        write!(f, "{}", self.display_with(&names))
    }
}

fn minimal_generators(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|g| (g.iter().map(|&e| e as u64).sum::<u64>(), g.clone()));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    for g in gens {
        if !kept.iter().any(|k| divides(k, &g)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

/// Parses a product such as `x1*x2^2` against variable names.
pub fn parse_monomial(s: &str, names: &[String]) -> Result<Monomial> {
    let mut m = vec![0u32; names.len()];
    let s = s.trim();
    if s == "1" {
        return Ok(m);
    }
    for factor in s.split('*').map(str::trim) {
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => {
                let e: u32 = e.trim().parse().map_err(|err| Error::Invalid(format!("bad exponent in '{factor}': {err}")))?;
                (n.trim(), e)
            }
            None => (factor, 1),
        };
        let idx = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::Invalid(format!("unknown variable '{name}' in monomial '{s}'")))?;
        m[idx] += exp;
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimalization() {
        let i = MonomialIdeal::new(2, vec![vec![2, 1], vec![1, 0], vec![0, 3], vec![1, 0]]).unwrap();
        assert_eq!(i.generators(), &[vec![0, 3], vec![1, 0]]);
        assert!(i.contains(&[1, 5]));
        assert!(!i.contains(&[0, 2]));
    }

    #[test]
    fn primes_of_hirzebruch_ideal() {
        // (x1x2, x1x4, x2x3, x3x4) = (x1,x3) ∩ (x2,x4)
        let b = MonomialIdeal::new(
            4,
            vec![vec![1, 1, 0, 0], vec![1, 0, 0, 1], vec![0, 1, 1, 0], vec![0, 0, 1, 1]],
        )
        .unwrap();
        assert_eq!(b.minimal_primes().unwrap(), vec![0b0101, 0b1010]);
    }

    #[test]
    fn parsing() {
        let names: Vec<String> = ["x", "y"].iter().map(|s| s.to_string()).collect();
        assert_eq!(parse_monomial("x*y^2", &names).unwrap(), vec![1, 2]);
        assert!(parse_monomial("z", &names).is_err());
    }
}
