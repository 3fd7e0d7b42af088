//! The oriented graph on eleven vertices whose weightings give unmixed,
//! non-Cohen-Macaulay ideals over a Cohen-Macaulay base graph, transcribed
//! together with the generator lists displayed alongside it.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeWeighting, LabeledGraph, VertexWeightedOrientedGraph, WeightedGraph};
use crate::io::Input;
use crate::ideal::{edge_ideal, oriented_edge_ideal, weighted_edge_ideal, Monomial, MonomialIdeal};

/// Vertex count.
pub const N: usize = 11;

/// Arcs `(tail, head)` with 1-based vertex names, in the displayed order.
pub const ARCS: [(usize, usize); 25] = [
    (1, 3), (1, 4), (7, 1), (1, 10), (1, 11), (2, 4), (2, 5),
    (2, 8), (2, 10), (2, 11), (3, 5), (3, 6), (3, 8), (3, 11),
    (4, 6), (4, 9), (4, 11), (7, 5), (5, 9), (11, 5), (6, 8),
    (6, 9), (9, 7), (7, 10), (8, 10),
];

/// A generator as `(variable, exponent)` pairs, 1-based variables.
type Gen = &'static [(usize, u32)];

/// Displayed generators of `I(D_1)` (vertex weight 2 on `x11`).
pub const I_D1: [Gen; 25] = [
    &[(1, 1), (3, 1)], &[(1, 1), (4, 1)], &[(1, 1), (7, 1)], &[(1, 1), (10, 1)], &[(1, 1), (11, 2)],
    &[(2, 1), (4, 1)], &[(2, 1), (5, 1)], &[(2, 1), (8, 1)], &[(2, 1), (10, 1)], &[(2, 1), (11, 2)],
    &[(3, 1), (5, 1)], &[(3, 1), (6, 1)], &[(3, 1), (8, 1)], &[(3, 1), (11, 2)], &[(4, 1), (6, 1)],
    &[(4, 1), (9, 1)], &[(4, 1), (11, 2)], &[(5, 1), (7, 1)], &[(5, 1), (9, 1)], &[(5, 1), (11, 1)],
    &[(6, 1), (8, 1)], &[(6, 1), (9, 1)], &[(7, 1), (9, 1)], &[(7, 1), (10, 1)], &[(8, 1), (10, 1)],
];

/// Displayed generators of `I(D_2)` (vertex weight 2 on `x7`).
pub const I_D2: [Gen; 25] = [
    &[(1, 1), (3, 1)], &[(1, 1), (4, 1)], &[(1, 1), (7, 1)], &[(1, 1), (10, 1)], &[(1, 1), (11, 1)],
    &[(2, 1), (4, 1)], &[(2, 1), (5, 1)], &[(2, 1), (8, 1)], &[(2, 1), (10, 1)], &[(2, 1), (11, 1)],
    &[(3, 1), (5, 1)], &[(3, 1), (6, 1)], &[(3, 1), (8, 1)], &[(3, 1), (11, 1)], &[(4, 1), (6, 1)],
    &[(4, 1), (9, 1)], &[(4, 1), (11, 1)], &[(5, 1), (7, 1)], &[(5, 1), (9, 1)], &[(5, 1), (11, 1)],
    &[(6, 1), (8, 1)], &[(6, 1), (9, 1)], &[(7, 2), (9, 1)], &[(7, 1), (10, 1)], &[(8, 1), (10, 1)],
];

/// Displayed generators of `I(G_{w_1})`: all edges weight 1 except `x8 x10`.
pub const I_GW1: [Gen; 25] = [
    &[(1, 1), (3, 1)], &[(1, 1), (4, 1)], &[(1, 1), (7, 1)], &[(1, 1), (10, 1)], &[(1, 1), (11, 1)],
    &[(2, 1), (4, 1)], &[(2, 1), (5, 1)], &[(2, 1), (8, 1)], &[(2, 1), (10, 1)], &[(2, 1), (11, 1)],
    &[(3, 1), (5, 1)], &[(3, 1), (6, 1)], &[(3, 1), (8, 1)], &[(3, 1), (11, 1)], &[(4, 1), (6, 1)],
    &[(4, 1), (9, 1)], &[(4, 1), (11, 1)], &[(5, 1), (7, 1)], &[(5, 1), (9, 1)], &[(5, 1), (11, 1)],
    &[(6, 1), (8, 1)], &[(6, 1), (9, 1)], &[(7, 1), (9, 1)], &[(7, 1), (10, 1)], &[(8, 2), (10, 2)],
];

/// Displayed generators of `I(G_{w_2})`: all edges weight 2 except `x8 x10`.
pub const I_GW2: [Gen; 25] = [
    &[(1, 2), (3, 2)], &[(1, 2), (4, 2)], &[(1, 2), (7, 2)], &[(1, 2), (10, 2)], &[(1, 2), (11, 2)],
    &[(2, 2), (4, 2)], &[(2, 2), (5, 2)], &[(2, 2), (8, 2)], &[(2, 2), (10, 2)], &[(2, 2), (11, 2)],
    &[(3, 2), (5, 2)], &[(3, 2), (6, 2)], &[(3, 2), (8, 2)], &[(3, 2), (11, 2)], &[(4, 2), (6, 2)],
    &[(4, 2), (9, 2)], &[(4, 2), (11, 2)], &[(5, 2), (7, 2)], &[(5, 2), (9, 2)], &[(5, 2), (11, 2)],
    &[(6, 2), (8, 2)], &[(6, 2), (9, 2)], &[(7, 2), (9, 2)], &[(7, 2), (10, 2)], &[(8, 1), (10, 1)],
];

/// The five named inputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Dataset {
    D1,
    D2,
    G,
    Gw1,
    Gw2,
}

/// Reference values. `None` where no value is asserted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub unmixed: bool,
    pub height: usize,
    pub dim: usize,
    pub cohen_macaulay_char0: bool,
    pub depth_char0: Option<usize>,
    /// Serre's `(S_2)` for the quotient by the (non-polarized) ideal. Only
    /// the polarized complex is tested here, so comparisons are exploratory.
    pub serre_s2: Option<bool>,
}

impl Dataset {
    pub const ALL: [Dataset; 5] = [Dataset::D1, Dataset::D2, Dataset::G, Dataset::Gw1, Dataset::Gw2];

    pub fn name(self) -> &'static str {
        match self {
            Dataset::D1 => "D1",
            Dataset::D2 => "D2",
            Dataset::G => "G",
            Dataset::Gw1 => "Gw1",
            Dataset::Gw2 => "Gw2",
        }
    }

    /// The ideal built from the graph data.
    pub fn ideal(self) -> MonomialIdeal {
        match self {
            Dataset::D1 => oriented_edge_ideal(&oriented(11)),
            Dataset::D2 => oriented_edge_ideal(&oriented(7)),
            Dataset::G => edge_ideal(&graph()),
            Dataset::Gw1 => weighted_edge_ideal(&weighted(1)),
            Dataset::Gw2 => weighted_edge_ideal(&weighted(2)),
        }
    }

    /// The dataset as a loadable input value.
    pub fn input(self) -> Input {
        match self {
            Dataset::D1 => Input::Oriented(oriented(11)),
            Dataset::D2 => Input::Oriented(oriented(7)),
            Dataset::G => Input::Graph { graph: WeightedGraph::unit(graph()), labeling: None, weighted: false },
            Dataset::Gw1 => Input::Graph { graph: weighted(1), labeling: None, weighted: true },
            Dataset::Gw2 => Input::Graph { graph: weighted(2), labeling: None, weighted: true },
        }
    }

    /// The ideal from the displayed generator list.
    pub fn displayed_ideal(self) -> MonomialIdeal {
        let table: &[Gen] = match self {
            Dataset::D1 => &I_D1,
            Dataset::D2 => &I_D2,
            Dataset::G => return edge_ideal(&graph()),
            Dataset::Gw1 => &I_GW1,
            Dataset::Gw2 => &I_GW2,
        };
        from_table(table)
    }

    pub fn expected(self) -> Expected {
        let base = Expected {
            unmixed: true,
            height: 8,
            dim: 3,
            cohen_macaulay_char0: false,
            depth_char0: None,
            serre_s2: None,
        };
        match self {
            Dataset::D1 => Expected { depth_char0: Some(2), serre_s2: Some(true), ..base },
            Dataset::D2 => Expected { depth_char0: Some(2), serre_s2: Some(false), ..base },
            Dataset::G => Expected { cohen_macaulay_char0: true, depth_char0: Some(3), ..base },
            Dataset::Gw1 => Expected { serre_s2: Some(false), ..base },
            Dataset::Gw2 => Expected { serre_s2: Some(true), ..base },
        }
    }
}

impl fmt::Display for Dataset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Dataset {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Dataset::ALL
            .into_iter()
            .find(|d| d.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownDataset(s.to_string()))
    }
}

fn from_table(table: &[Gen]) -> MonomialIdeal {
    let gens = table
        .iter()
        .map(|g| {
            let mut e = vec![0; N];
            for &(v, a) in g.iter() {
                e[v - 1] = a;
            }
            Monomial::new(e).expect("small exponents")
        })
        .collect();
    MonomialIdeal::new(N, gens).expect("valid table")
}

fn arcs0() -> Vec<(usize, usize)> {
    ARCS.iter().map(|&(a, b)| (a - 1, b - 1)).collect()
}

/// The oriented graph with weight 2 on the 1-based vertex `heavy`, 1 elsewhere.
pub fn oriented(heavy: usize) -> VertexWeightedOrientedGraph {
    let mut w = vec![1; N];
    w[heavy - 1] = 2;
    VertexWeightedOrientedGraph::new(N, arcs0(), w).expect("valid dataset")
}

/// The underlying graph.
pub fn graph() -> LabeledGraph {
    LabeledGraph::new(N, arcs0()).expect("valid dataset")
}

/// `which = 1`: weight 2 on `x8 x10`, 1 elsewhere; `which = 2`: weight 1 on
/// `x8 x10`, 2 elsewhere.
pub fn weighted(which: u8) -> WeightedGraph {
    let g = graph();
    let (special, rest) = if which == 1 { (2, 1) } else { (1, 2) };
    let w: EdgeWeighting = g
        .edges()
        .iter()
        .map(|&(u, v)| ((u, v), if (u, v) == (7, 9) { special } else { rest }))
        .collect();
    WeightedGraph::new(g, w).expect("valid dataset")
}
