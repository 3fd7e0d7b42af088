use std::collections::BTreeMap;

use super::labeling::{Side, VwcLabeling};
use super::LabeledGraph;
use crate::error::{Error, Result};

/// Largest accepted edge or vertex weight (it becomes a monomial exponent).
pub const MAX_WEIGHT: u32 = 1 << 16;

/// Positive integer weight per edge, keyed by `(min, max)` endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct EdgeWeighting(BTreeMap<(usize, usize), u32>);

impl EdgeWeighting {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn constant(g: &LabeledGraph, w: u32) -> Self {
        Self(g.edges().iter().map(|&e| (e, w)).collect())
    }

    pub fn set(&mut self, u: usize, v: usize, w: u32) {
        self.0.insert((u.min(v), u.max(v)), w);
    }

    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        self.0.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), u32)> + '_ {
        self.0.iter().map(|(&e, &w)| (e, w))
    }
}

impl FromIterator<((usize, usize), u32)> for EdgeWeighting {
    fn from_iter<I: IntoIterator<Item = ((usize, usize), u32)>>(iter: I) -> Self {
        let mut w = Self::new();
        for ((u, v), x) in iter {
            w.set(u, v, x);
        }
        w
    }
}

/// A graph together with an edge weighting whose domain is exactly the edge
/// set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightedGraph {
    graph: LabeledGraph,
    weights: EdgeWeighting,
}

impl WeightedGraph {
    pub fn new(graph: LabeledGraph, weights: EdgeWeighting) -> Result<Self> {
        for &(u, v) in graph.edges() {
            match weights.get(u, v) {
                None => {
                    return Err(Error::InvalidWeighting(format!("edge [{u},{v}] has no weight")))
                }
                Some(0) => {
                    return Err(Error::InvalidWeighting(format!("edge [{u},{v}] has weight 0")))
                }
                Some(w) if w > MAX_WEIGHT => {
                    return Err(Error::InvalidWeighting(format!(
                        "edge [{u},{v}] weight {w} exceeds {MAX_WEIGHT}"
                    )))
                }
                _ => {}
            }
        }
        if let Some(((u, v), _)) = weights.iter().find(|&((u, v), _)| !graph.has_edge(u, v)) {
            return Err(Error::InvalidWeighting(format!("[{u},{v}] is weighted but is not an edge")));
        }
        Ok(Self { graph, weights })
    }

    pub fn unit(graph: LabeledGraph) -> Self {
        let weights = EdgeWeighting::constant(&graph, 1);
        Self { graph, weights }
    }

    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    pub fn weights(&self) -> &EdgeWeighting {
        &self.weights
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<u32> {
        self.weights.get(u, v)
    }

    /// Weighted edges `(u, v, w)` in edge order.
    pub fn weighted_edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.graph
            .edges()
            .iter()
            .map(|&(u, v)| (u, v, self.weights.get(u, v).expect("validated")))
    }
}

/// Edge-weighted graph with a (*)-labeling.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightedVwcGraph {
    weighted: WeightedGraph,
    labeling: VwcLabeling,
}

impl WeightedVwcGraph {
    pub fn new(weighted: WeightedGraph, labeling: VwcLabeling) -> Result<Self> {
        labeling.validate(weighted.graph())?;
        Ok(Self { weighted, labeling })
    }

    pub fn graph(&self) -> &LabeledGraph {
        self.weighted.graph()
    }

    pub fn weighted(&self) -> &WeightedGraph {
        &self.weighted
    }

    pub fn labeling(&self) -> &VwcLabeling {
        &self.labeling
    }

    pub fn h(&self) -> usize {
        self.labeling.h()
    }

    pub fn has(&self, a: (Side, usize), b: (Side, usize)) -> bool {
        self.graph()
            .has_edge(self.labeling.vertex(a.0, a.1), self.labeling.vertex(b.0, b.1))
    }

    /// Weight of the edge between two labeled vertices, if present.
    pub fn w(&self, a: (Side, usize), b: (Side, usize)) -> Option<u32> {
        self.weighted
            .weight(self.labeling.vertex(a.0, a.1), self.labeling.vertex(b.0, b.1))
    }

    /// The same weighted graph under another labeling.
    pub fn relabeled(&self, labeling: VwcLabeling) -> Result<Self> {
        Self::new(self.weighted.clone(), labeling)
    }

    /// `Σ deg(y_i)`.
    pub fn y_degree_sum(&self) -> usize {
        self.labeling.y.iter().map(|&v| self.graph().degree(v)).sum()
    }
}

/// Moves every edge `x_k y_i` (`k ≠ i`) onto `x_k x_i`, keeping its weight.
/// `i` is a 1-based pair index.
pub fn o_i_operator(gw: &WeightedVwcGraph, i: usize) -> Result<WeightedVwcGraph> {
    let h = gw.h();
    if i == 0 || i > h {
        return Err(Error::Precondition(format!("pair index {i} outside 1..={h}")));
    }
    let i = i - 1;
    let l = gw.labeling();
    let (xi, yi) = (l.x[i], l.y[i]);
    let moved: Vec<usize> = (0..h)
        .filter(|&k| k != i && gw.graph().has_edge(l.x[k], yi))
        .collect();
    if moved.is_empty() {
        return Ok(gw.clone());
    }
    for &k in &moved {
        if gw.graph().has_edge(l.x[k], xi) {
            return Err(Error::OperatorConflict {
                pair: i + 1,
                first: VwcLabeling::name(Side::X, k),
                second: VwcLabeling::name(Side::X, i),
            });
        }
    }
    let mut edges = Vec::new();
    let mut weights = EdgeWeighting::new();
    for (u, v, w) in gw.weighted().weighted_edges() {
        let moved_from = moved.iter().find(|&&k| (u, v) == (l.x[k].min(yi), l.x[k].max(yi)));
        match moved_from {
            Some(&k) => {
                edges.push((l.x[k], xi));
                weights.set(l.x[k], xi, w);
            }
            None => {
                edges.push((u, v));
                weights.set(u, v, w);
            }
        }
    }
    let graph = LabeledGraph::new(gw.graph().n(), edges)?;
    WeightedVwcGraph::new(WeightedGraph::new(graph, weights)?, l.clone())
}
