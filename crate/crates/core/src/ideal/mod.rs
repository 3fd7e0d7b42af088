//! Monomials, monomial ideals, the edge-ideal builders and polarization.

mod polarize;
mod primes;

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{LabeledGraph, VertexWeightedOrientedGraph, WeightedGraph};

pub use polarize::{polarize, PolarizedIdeal};
pub use primes::{height, is_unmixed, krull_dim, minimal_primes, PrimeList};
pub(crate) use primes::{min_transversal_size, minimal_transversals};

/// Largest accepted exponent.
pub const MAX_EXPONENT: u32 = 1 << 16;

/// Exponent vector of a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        if let Some(i) = exponents.iter().position(|&a| a > MAX_EXPONENT) {
            return Err(Error::InvalidMonomial(format!(
                "exponent {} of variable {i} exceeds {MAX_EXPONENT}",
                exponents[i]
            )));
        }
        Ok(Self(exponents))
    }

    /// The squarefree monomial with the given support.
    pub fn squarefree(nvars: usize, support: impl IntoIterator<Item = usize>) -> Self {
        let mut e = vec![0; nvars];
        for i in support {
            e[i] = 1;
        }
        Self(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&a| a as u64).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&a| a <= 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &a)| a > 0).map(|(i, _)| i)
    }

    /// Graded lexicographic order: lower degree first, then the larger
    /// exponent in the earliest differing variable first.
    pub fn grlex_cmp(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }

    /// Renders as e.g. `x1^2*x3` with 1-based variable names.
    pub fn display(&self) -> String {
        self.display_with(|i| format!("x{}", i + 1))
    }

    pub fn display_with(&self, name: impl Fn(usize) -> String) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| if a == 1 { name(i) } else { format!("{}^{a}", name(i)) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// A monomial ideal given by its minimal generators in graded lexicographic
/// order. An empty generator list is the zero ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes, deduplicates and sorts `gens`.
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Result<Self> {
        for (j, g) in gens.iter().enumerate() {
            if g.nvars() != nvars {
                return Err(Error::InvalidMonomial(format!(
                    "gens[{j}] has {} exponents, expected {nvars}",
                    g.nvars()
                )));
            }
            if g.is_unit() {
                return Err(Error::InvalidMonomial(format!("gens[{j}] is the unit monomial")));
            }
        }
        let mut sorted = gens;
        sorted.sort_by(|a, b| a.grlex_cmp(b));
        sorted.dedup();
        // a divisor has degree at most that of its multiple, so it comes first
        let mut minimal: Vec<Monomial> = Vec::with_capacity(sorted.len());
        for g in sorted {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        Ok(Self { nvars, gens: minimal })
    }

    pub fn zero(nvars: usize) -> Self {
        Self { nvars, gens: Vec::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Largest exponent of each variable over the generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        (0..self.nvars)
            .map(|i| self.gens.iter().map(|g| g.0[i]).max().unwrap_or(0))
            .collect()
    }

    /// Generator supports as bit masks.
    pub fn support_masks(&self) -> Result<Vec<u64>> {
        if self.nvars > 64 {
            return Err(Error::ResourceCap { what: "variables", got: self.nvars, limit: 64 });
        }
        Ok(self
            .gens
            .iter()
            .map(|g| crate::bits::from_iter(g.support()))
            .collect())
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(Monomial::display).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// The ideal generated by the minimal elements of `raw`.
pub fn minimal_generators(raw: Vec<Monomial>, nvars: usize) -> Result<MonomialIdeal> {
    if raw.is_empty() {
        return Err(Error::InvalidMonomial("empty generator list".into()));
    }
    MonomialIdeal::new(nvars, raw)
}

/// `(x_i x_j : ij ∈ E)`.
pub fn edge_ideal(g: &LabeledGraph) -> MonomialIdeal {
    let gens = g
        .edges()
        .iter()
        .map(|&(u, v)| Monomial::squarefree(g.n(), [u, v]))
        .collect();
    MonomialIdeal::new(g.n(), gens).expect("edges give proper quadrics")
}

/// `((x_i x_j)^{w(ij)} : ij ∈ E)`.
pub fn weighted_edge_ideal(gw: &WeightedGraph) -> MonomialIdeal {
    let n = gw.graph().n();
    let gens = gw
        .weighted_edges()
        .map(|(u, v, w)| {
            let mut e = vec![0; n];
            e[u] = w;
            e[v] = w;
            Monomial(e)
        })
        .collect();
    MonomialIdeal::new(n, gens).expect("weights are validated")
}

/// `(x_i x_j^{w_j} : (i, j) an arc)`.
pub fn oriented_edge_ideal(d: &VertexWeightedOrientedGraph) -> MonomialIdeal {
    let n = d.n();
    let gens = d
        .arcs()
        .iter()
        .map(|&(i, j)| {
            let mut e = vec![0; n];
            e[i] = 1;
            e[j] = d.weight(j);
            Monomial(e)
        })
        .collect();
    MonomialIdeal::new(n, gens).expect("weights are validated")
}
