//! Simple graphs, very well-covered structure, labelings and weightings.

mod generate;
mod labeling;
mod oriented;
mod weighted;

pub use generate::random_weighted_vwc;
pub use labeling::{
    check_vwc_characterization, cross_edge_cycle, doublestar_relabeling, star_labeling,
    Side, VwcLabeling,
};
pub use oriented::VertexWeightedOrientedGraph;
pub use weighted::{o_i_operator, EdgeWeighting, WeightedGraph, WeightedVwcGraph};

use crate::bits;
use crate::error::{Error, Result};

/// Maximal-independent-set enumeration refuses larger graphs.
pub const MIS_VERTEX_CAP: usize = 32;

/// Exhaustive perfect-matching search refuses larger graphs.
pub const MATCHING_VERTEX_CAP: usize = 20;

/// A finite simple graph on vertices `0..n` with no isolated vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<u64>,
}

impl LabeledGraph {
    pub const MAX_VERTICES: usize = 64;

    /// Builds a graph, rejecting loops, duplicates, out-of-range endpoints
    /// and isolated vertices. The error names the first offending entry.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n > Self::MAX_VERTICES {
            return Err(Error::InvalidGraph(format!(
                "{n} vertices exceeds the supported maximum of {}",
                Self::MAX_VERTICES
            )));
        }
        let mut adj = vec![0u64; n];
        let mut list = Vec::new();
        for (idx, (u, v)) in edges.into_iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edges[{idx}] = [{u},{v}]: vertex out of range 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("edges[{idx}] = [{u},{v}]: loop")));
            }
            if adj[u] >> v & 1 == 1 {
                return Err(Error::InvalidGraph(format!(
                    "edges[{idx}] = [{u},{v}]: duplicate edge"
                )));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            list.push((u.min(v), u.max(v)));
        }
        if let Some(v) = (0..n).find(|&v| adj[v] == 0) {
            return Err(Error::InvalidGraph(format!("vertex {v} is isolated")));
        }
        list.sort_unstable();
        Ok(Self { n, edges: list, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn vertex_mask(&self) -> u64 {
        bits::full(self.n)
    }

    pub fn is_independent(&self, set: u64) -> bool {
        bits::ones(set).all(|v| self.adj[v] & set == 0)
    }

    pub fn is_vertex_cover(&self, set: u64) -> bool {
        self.edges
            .iter()
            .all(|&(u, v)| set >> u & 1 == 1 || set >> v & 1 == 1)
    }

    /// A proper 2-colouring (`true` = second side), if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                let cu = color[u].unwrap();
                for v in bits::ones(self.adj[u]) {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            stack.push(v);
                        }
                        Some(cv) if cv == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }
}

/// All inclusion-maximal independent sets, each sorted, in lexicographic
/// order. Uses pivoting Bron–Kerbosch on the complement graph.
pub fn maximal_independent_sets(g: &LabeledGraph) -> Result<Vec<Vec<usize>>> {
    Ok(maximal_independent_masks(g)?.into_iter().map(bits::to_vec).collect())
}

pub(crate) fn maximal_independent_masks(g: &LabeledGraph) -> Result<Vec<u64>> {
    if g.n > MIS_VERTEX_CAP {
        return Err(Error::ResourceCap {
            what: "vertex count for independent-set enumeration",
            got: g.n,
            limit: MIS_VERTEX_CAP,
        });
    }
    let all = g.vertex_mask();
    let non_adj: Vec<u64> = (0..g.n).map(|v| all & !g.adj[v] & !(1 << v)).collect();
    let mut out = Vec::new();
    bron_kerbosch(&non_adj, 0, all, 0, &mut out);
    out.sort_by(|a, b| bits::ones(*a).cmp(bits::ones(*b)));
    Ok(out)
}

fn bron_kerbosch(nbr: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = bits::ones(p | x)
        .max_by_key(|&u| (p & nbr[u]).count_ones())
        .expect("p is nonempty");
    for v in bits::ones(p & !nbr[pivot]) {
        bron_kerbosch(nbr, r | 1 << v, p & nbr[v], x & nbr[v], out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

/// True iff `|V|` is even and every maximal independent set has `|V|/2`
/// elements.
pub fn is_very_well_covered(g: &LabeledGraph) -> Result<bool> {
    if g.n == 0 || g.n % 2 == 1 {
        return Ok(false);
    }
    let half = (g.n / 2) as u32;
    Ok(maximal_independent_masks(g)?
        .iter()
        .all(|s| s.count_ones() == half))
}

/// A perfect matching found by exhaustive search: the smallest unmatched
/// vertex is paired with its smallest available neighbour, backtracking on
/// failure. Deterministic for a fixed input.
pub fn find_perfect_matching(g: &LabeledGraph) -> Result<Option<Vec<(usize, usize)>>> {
    if g.n > MATCHING_VERTEX_CAP {
        return Err(Error::ResourceCap {
            what: "vertex count for exhaustive matching search",
            got: g.n,
            limit: MATCHING_VERTEX_CAP,
        });
    }
    if g.n % 2 == 1 {
        return Ok(None);
    }
    let mut pairs = Vec::with_capacity(g.n / 2);
    if match_rest(g, g.vertex_mask(), &mut pairs) {
        pairs.sort_unstable();
        Ok(Some(pairs))
    } else {
        Ok(None)
    }
}

fn match_rest(g: &LabeledGraph, free: u64, pairs: &mut Vec<(usize, usize)>) -> bool {
    if free == 0 {
        return true;
    }
    // a free vertex with no free neighbour can never be matched
    if bits::ones(free).any(|v| g.adj[v] & free == 0) {
        return false;
    }
    let v = free.trailing_zeros() as usize;
    for u in bits::ones(g.adj[v] & free) {
        pairs.push((v, u));
        if match_rest(g, free & !(1 << v) & !(1 << u), pairs) {
            return true;
        }
        pairs.pop();
    }
    false
}

/// Perfect matching between `left` and `right`, if one exists. Among all
/// perfect matchings returns the one whose partner sequence (left vertices
/// in ascending order) is lexicographically smallest.
pub(crate) fn bipartite_perfect_matching(
    g: &LabeledGraph,
    left: u64,
    right: u64,
) -> Option<Vec<(usize, usize)>> {
    if !has_perfect_matching(g, left, right) {
        return None;
    }
    let (mut left, mut right) = (left, right);
    let mut pairs = Vec::new();
    while left != 0 {
        let x = left.trailing_zeros() as usize;
        let y = bits::ones(g.adj[x] & right)
            .find(|&y| has_perfect_matching(g, left & !(1 << x), right & !(1 << y)))?;
        pairs.push((x, y));
        left &= !(1 << x);
        right &= !(1 << y);
    }
    Some(pairs)
}

/// Kuhn's augmenting paths.
fn has_perfect_matching(g: &LabeledGraph, left: u64, right: u64) -> bool {
    if left.count_ones() != right.count_ones() {
        return false;
    }
    let mut owner: Vec<Option<usize>> = vec![None; g.n];
    bits::ones(left).all(|x| {
        let mut seen = 0u64;
        augment(g, x, right, &mut owner, &mut seen)
    })
}

fn augment(
    g: &LabeledGraph,
    x: usize,
    right: u64,
    owner: &mut [Option<usize>],
    seen: &mut u64,
) -> bool {
    for y in bits::ones(g.adj[x] & right) {
        if *seen >> y & 1 == 1 {
            continue;
        }
        *seen |= 1 << y;
        let free = match owner[y] {
            None => true,
            Some(other) => augment(g, other, right, owner, seen),
        };
        if free {
            owner[y] = Some(x);
            return true;
        }
    }
    false
}
