use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use super::{bipartite_perfect_matching, is_very_well_covered, maximal_independent_masks, LabeledGraph};
use crate::bits;
use crate::error::{Error, Result};
use crate::report::{CriterionReport, Violation};

/// A split of the vertices into pairs `(x_i, y_i)` such that the `x_i` form a
/// minimal vertex cover, the `y_i` a maximal independent set and every
/// `x_i y_i` is an edge. Pair indices are 0-based in the API and 1-based in
/// vertex names (`x1`, `y1`, ...).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VwcLabeling {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    X,
    Y,
}

impl VwcLabeling {
    /// Checks the labeling against `g`.
    pub fn new(g: &LabeledGraph, x: Vec<usize>, y: Vec<usize>) -> Result<Self> {
        let l = Self { x, y };
        l.validate(g)?;
        Ok(l)
    }

    pub fn h(&self) -> usize {
        self.x.len()
    }

    pub fn validate(&self, g: &LabeledGraph) -> Result<()> {
        let h = self.x.len();
        if self.y.len() != h {
            return Err(Error::InvalidLabeling(format!(
                "x has {} entries but y has {}",
                h,
                self.y.len()
            )));
        }
        if g.n() != 2 * h {
            return Err(Error::InvalidLabeling(format!(
                "graph has {} vertices, labeling covers {}",
                g.n(),
                2 * h
            )));
        }
        let mut seen = 0u64;
        for &v in self.x.iter().chain(&self.y) {
            if v >= g.n() {
                return Err(Error::InvalidLabeling(format!("vertex {v} out of range")));
            }
            if seen >> v & 1 == 1 {
                return Err(Error::InvalidLabeling(format!("vertex {v} labeled twice")));
            }
            seen |= 1 << v;
        }
        for i in 0..h {
            if !g.has_edge(self.x[i], self.y[i]) {
                return Err(Error::InvalidLabeling(format!(
                    "x{0}y{0} = {1}-{2} is not an edge",
                    i + 1,
                    self.x[i],
                    self.y[i]
                )));
            }
        }
        if !g.is_independent(self.y_mask()) {
            return Err(Error::InvalidLabeling("y is not an independent set".into()));
        }
        Ok(())
    }

    pub fn x_mask(&self) -> u64 {
        bits::from_iter(self.x.iter().copied())
    }

    pub fn y_mask(&self) -> u64 {
        bits::from_iter(self.y.iter().copied())
    }

    pub fn vertex(&self, side: Side, i: usize) -> usize {
        match side {
            Side::X => self.x[i],
            Side::Y => self.y[i],
        }
    }

    /// `(pair, side)` of vertex `v`.
    pub fn locate(&self, v: usize) -> Option<(usize, Side)> {
        if let Some(i) = self.x.iter().position(|&u| u == v) {
            return Some((i, Side::X));
        }
        self.y.iter().position(|&u| u == v).map(|i| (i, Side::Y))
    }

    pub fn name(side: Side, i: usize) -> String {
        match side {
            Side::X => format!("x{}", i + 1),
            Side::Y => format!("y{}", i + 1),
        }
    }

    pub fn vertex_name(&self, v: usize) -> String {
        match self.locate(v) {
            Some((i, s)) => Self::name(s, i),
            None => format!("v{v}"),
        }
    }

    /// Reorders the pairs: new pair `t` is old pair `order[t]`.
    pub fn permuted(&self, order: &[usize]) -> Self {
        Self {
            x: order.iter().map(|&i| self.x[i]).collect(),
            y: order.iter().map(|&i| self.y[i]).collect(),
        }
    }
}

/// A (*)-labeling of a very well-covered graph.
///
/// `Y` is chosen among the maximal independent sets admitting a perfect
/// matching onto their complement, minimising `Σ deg(y)` and then
/// lexicographically. Pairs are ordered by ascending `x`, partners found by
/// augmenting paths.
pub fn star_labeling(g: &LabeledGraph) -> Result<VwcLabeling> {
    if !is_very_well_covered(g)? {
        return Err(Error::NotVeryWellCovered);
    }
    let mut candidates = maximal_independent_masks(g)?;
    let deg_sum = |s: u64| bits::ones(s).map(|v| g.degree(v)).sum::<usize>();
    // stable sort keeps the lexicographic order among equal degree sums
    candidates.sort_by_key(|&s| deg_sum(s));
    for y_set in candidates {
        let x_set = g.vertex_mask() & !y_set;
        if let Some(pairs) = bipartite_perfect_matching(g, x_set, y_set) {
            let (x, y) = pairs.into_iter().unzip();
            return VwcLabeling::new(g, x, y);
        }
    }
    Err(Error::NotVeryWellCovered)
}

/// The structural characterisation of very well-covered graphs under a
/// (*)-labeling:
///
/// (i) `z_i x_j, y_j x_k ∈ E ⟹ z_i x_k ∈ E` for distinct `i, j, k`, `z_i ∈ {x_i, y_i}`;
/// (ii) `x_i y_j ∈ E ⟹ x_i x_j ∉ E`.
pub fn check_vwc_characterization(g: &LabeledGraph, l: &VwcLabeling) -> Result<CriterionReport> {
    l.validate(g)?;
    let h = l.h();
    let mut violations = Vec::new();
    for side in [Side::X, Side::Y] {
        for i in 0..h {
            let z = l.vertex(side, i);
            for j in (0..h).filter(|&j| j != i) {
                if !g.has_edge(z, l.x[j]) {
                    continue;
                }
                for k in (0..h).filter(|&k| k != i && k != j) {
                    if g.has_edge(l.y[j], l.x[k]) && !g.has_edge(z, l.x[k]) {
                        violations.push(
                            Violation::new(
                                "(i)",
                                format!(
                                    "{z}{xj} and {yj}{xk} are edges but {z}{xk} is not",
                                    z = VwcLabeling::name(side, i),
                                    xj = VwcLabeling::name(Side::X, j),
                                    yj = VwcLabeling::name(Side::Y, j),
                                    xk = VwcLabeling::name(Side::X, k),
                                ),
                            )
                            .with_indices([i + 1, j + 1, k + 1])
                            .with_vertices([
                                VwcLabeling::name(side, i),
                                VwcLabeling::name(Side::X, j),
                                VwcLabeling::name(Side::Y, j),
                                VwcLabeling::name(Side::X, k),
                            ]),
                        );
                    }
                }
            }
        }
    }
    for i in 0..h {
        for j in (0..h).filter(|&j| j != i) {
            if g.has_edge(l.x[i], l.y[j]) && g.has_edge(l.x[i], l.x[j]) {
                violations.push(
                    Violation::new(
                        "(ii)",
                        format!(
                            "x{a}y{b} and x{a}x{b} are both edges",
                            a = i + 1,
                            b = j + 1
                        ),
                    )
                    .with_indices([i + 1, j + 1])
                    .with_vertices([
                        VwcLabeling::name(Side::X, i),
                        VwcLabeling::name(Side::Y, j),
                        VwcLabeling::name(Side::X, j),
                    ]),
                );
            }
        }
    }
    Ok(CriterionReport::from_violations(violations))
}

/// Pair-index digraph of the cross edges: `i → j` for every edge `x_i y_j`,
/// `i ≠ j`.
fn cross_arcs(g: &LabeledGraph, l: &VwcLabeling) -> Vec<u64> {
    let h = l.h();
    (0..h)
        .map(|i| {
            (0..h)
                .filter(|&j| j != i && g.has_edge(l.x[i], l.y[j]))
                .fold(0u64, |m, j| m | 1 << j)
        })
        .collect()
}

/// Reorders the pairs so that every cross edge `x_i y_j` has `i ≤ j`, or
/// `None` when the cross-edge digraph has a cycle. Among valid orders the
/// smallest-index-first topological order is returned.
pub fn doublestar_relabeling(g: &LabeledGraph, l: &VwcLabeling) -> Result<Option<VwcLabeling>> {
    l.validate(g)?;
    let h = l.h();
    let arcs = cross_arcs(g, l);
    let mut indeg = vec![0usize; h];
    for out in &arcs {
        for j in bits::ones(*out) {
            indeg[j] += 1;
        }
    }
    let mut ready: BinaryHeap<Reverse<usize>> =
        (0..h).filter(|&i| indeg[i] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(h);
    while let Some(Reverse(i)) = ready.pop() {
        order.push(i);
        for j in bits::ones(arcs[i]) {
            indeg[j] -= 1;
            if indeg[j] == 0 {
                ready.push(Reverse(j));
            }
        }
    }
    if order.len() < h {
        return Ok(None);
    }
    Ok(Some(l.permuted(&order)))
}

/// A directed cycle `i_1 → i_2 → ... → i_1` (0-based pair indices) in the
/// cross-edge digraph, if any.
pub fn cross_edge_cycle(g: &LabeledGraph, l: &VwcLabeling) -> Option<Vec<usize>> {
    let arcs = cross_arcs(g, l);
    let h = l.h();
    // 0 = unvisited, 1 = on stack, 2 = done
    let mut state = vec![0u8; h];
    let mut stack = Vec::new();
    fn dfs(
        u: usize,
        arcs: &[u64],
        state: &mut [u8],
        stack: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        state[u] = 1;
        stack.push(u);
        for v in bits::ones(arcs[u]) {
            if state[v] == 1 {
                let pos = stack.iter().position(|&w| w == v).unwrap();
                return Some(stack[pos..].to_vec());
            }
            if state[v] == 0 {
                if let Some(c) = dfs(v, arcs, state, stack) {
                    return Some(c);
                }
            }
        }
        stack.pop();
        state[u] = 2;
        None
    }
    (0..h).find_map(|s| {
        if state[s] == 0 {
            dfs(s, &arcs, &mut state, &mut stack)
        } else {
            None
        }
    })
}
