use super::weighted::MAX_WEIGHT;
use super::LabeledGraph;
use crate::error::{Error, Result};

/// An oriented simple graph with a positive weight on every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexWeightedOrientedGraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    weights: Vec<u32>,
}

impl VertexWeightedOrientedGraph {
    pub fn new(n: usize, arcs: Vec<(usize, usize)>, weights: Vec<u32>) -> Result<Self> {
        if weights.len() != n {
            return Err(Error::InvalidWeighting(format!(
                "{} vertex weights for {n} vertices",
                weights.len()
            )));
        }
        if let Some(v) = weights.iter().position(|&w| w == 0 || w > MAX_WEIGHT) {
            return Err(Error::InvalidWeighting(format!(
                "vertex {v} has weight {} outside 1..={MAX_WEIGHT}",
                weights[v]
            )));
        }
        // validates range, loops, isolated vertices and both-way pairs
        LabeledGraph::new(n, arcs.iter().copied()).map_err(|e| match e {
            Error::InvalidGraph(msg) => Error::InvalidGraph(msg.replace("edges[", "arcs[")),
            other => other,
        })?;
        Ok(Self { n, arcs, weights })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Arcs `(tail, head)` in input order.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn weight(&self, v: usize) -> u32 {
        self.weights[v]
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn with_weights(&self, weights: Vec<u32>) -> Result<Self> {
        Self::new(self.n, self.arcs.clone(), weights)
    }

    pub fn underlying_graph(&self) -> LabeledGraph {
        LabeledGraph::new(self.n, self.arcs.iter().copied()).expect("validated at construction")
    }
}
