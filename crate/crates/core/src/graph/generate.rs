use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::labeling::VwcLabeling;
use super::weighted::{EdgeWeighting, WeightedGraph, WeightedVwcGraph};
use super::LabeledGraph;
use crate::error::{Error, Result};

/// A random very well-covered weighted graph with `x_i = i`, `y_i = h + i`.
///
/// Starts from the matching `x_i y_i`, adds each `x_i x_j` and cross edge
/// `x_i y_j` with probability `density`, then repairs to a fixed point: a
/// missing edge forced by `z_i x_j, y_j x_k ⟹ z_i x_k` is added unless it was
/// deleted earlier, in which case the premise `y_j x_k` is deleted instead;
/// an `x_i x_j` coexisting with `x_i y_j` is deleted. Deleted edges are never
/// re-added, so the repair terminates. Weights are uniform in `1..=max_weight`.
pub fn random_weighted_vwc(h: usize, density: f64, max_weight: u32, seed: u64) -> Result<WeightedVwcGraph> {
    if h == 0 || 2 * h > LabeledGraph::MAX_VERTICES {
        return Err(Error::Precondition(format!("h = {h} outside 1..={}", LabeledGraph::MAX_VERTICES / 2)));
    }
    if max_weight == 0 {
        return Err(Error::Precondition("max weight must be at least 1".into()));
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::Precondition(format!("density {density} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = 2 * h;
    let x = |i: usize| i;
    let y = |i: usize| h + i;
    let key = |u: usize, v: usize| (u.min(v), u.max(v));

    let mut edges: HashSet<(usize, usize)> = (0..h).map(|i| key(x(i), y(i))).collect();
    for i in 0..h {
        for j in 0..h {
            if i < j && rng.gen_bool(density) {
                edges.insert(key(x(i), x(j)));
            }
            if i != j && rng.gen_bool(density) {
                edges.insert(key(x(i), y(j)));
            }
        }
    }

    let mut forbidden: HashSet<(usize, usize)> = HashSet::new();
    loop {
        let mut changed = false;
        for i in 0..h {
            for j in 0..h {
                if i != j && edges.contains(&key(x(i), y(j))) && edges.remove(&key(x(i), x(j))) {
                    forbidden.insert(key(x(i), x(j)));
                    changed = true;
                }
            }
        }
        for i in 0..h {
            for z in [x(i), y(i)] {
                for j in (0..h).filter(|&j| j != i) {
                    if !edges.contains(&key(z, x(j))) {
                        continue;
                    }
                    for k in (0..h).filter(|&k| k != i && k != j) {
                        if !edges.contains(&key(y(j), x(k))) || edges.contains(&key(z, x(k))) {
                            continue;
                        }
                        if forbidden.contains(&key(z, x(k))) {
                            edges.remove(&key(y(j), x(k)));
                            forbidden.insert(key(y(j), x(k)));
                        } else {
                            edges.insert(key(z, x(k)));
                        }
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }

    let mut list: Vec<_> = edges.into_iter().collect();
    list.sort_unstable();
    let mut weights = EdgeWeighting::new();
    for &(u, v) in &list {
        weights.set(u, v, rng.gen_range(1..=max_weight));
    }
    let graph = LabeledGraph::new(n, list)?;
    let labeling = VwcLabeling::new(&graph, (0..h).map(x).collect(), (0..h).map(y).collect())?;
    WeightedVwcGraph::new(WeightedGraph::new(graph, weights)?, labeling)
}
