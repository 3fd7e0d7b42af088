//! Reference implementations used only by the tests. They share no code with
//! the library beyond its input types.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use vwc_core::criteria::{campaign_instance, instance_seeds, CampaignConfig};
use vwc_core::graph::WeightedVwcGraph;
use vwc_core::ideal::MonomialIdeal;

pub const CORPUS: CampaignConfig = CampaignConfig { count: 500, h_max: 4, w_max: 3, seed: 20240601 };

/// The fuzz corpus: `(seed, graph)` pairs.
pub fn corpus(config: &CampaignConfig) -> Vec<(u64, WeightedVwcGraph)> {
    instance_seeds(config)
        .into_iter()
        .map(|s| (s, campaign_instance(s, config.h_max, config.w_max).unwrap()))
        .collect()
}

pub fn exponents(ideal: &MonomialIdeal) -> Vec<Vec<u32>> {
    ideal.gens().iter().map(|g| g.exponents().to_vec()).collect()
}

pub fn supports(gens: &[Vec<u32>]) -> Vec<u64> {
    gens.iter()
        .map(|g| g.iter().enumerate().filter(|(_, &e)| e > 0).fold(0u64, |m, (i, _)| m | 1 << i))
        .collect()
}

/// All inclusion-minimal vertex covers of the hypergraph, by trying every
/// subset of `0..n`.
pub fn brute_minimal_primes(n: usize, edges: &[u64]) -> Vec<u64> {
    assert!(n <= 20);
    let covers: Vec<u64> = (0u64..1 << n).filter(|&s| edges.iter().all(|&e| e & s != 0)).collect();
    let set: HashSet<u64> = covers.iter().copied().collect();
    let mut out: Vec<u64> = covers
        .into_iter()
        .filter(|&s| (0..n).all(|i| s >> i & 1 == 0 || !set.contains(&(s & !(1 << i)))))
        .collect();
    out.sort_unstable();
    out
}

pub fn brute_height(n: usize, edges: &[u64]) -> usize {
    (0u64..1 << n)
        .filter(|&s| edges.iter().all(|&e| e & s != 0))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn minimalize(mut gens: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    gens.sort();
    gens.dedup();
    let keep: Vec<Vec<u32>> =
        gens.iter().filter(|g| !gens.iter().any(|h| h != *g && divides(h, g))).cloned().collect();
    keep
}

fn split(gens: Vec<Vec<u32>>, seen: &mut HashSet<Vec<Vec<u32>>>, out: &mut BTreeSet<Vec<u32>>) {
    if !seen.insert(gens.clone()) {
        return;
    }
    let mixed = gens.iter().find(|g| g.iter().filter(|&&e| e > 0).count() >= 2).cloned();
    match mixed {
        None => {
            let mut q = vec![0; gens[0].len()];
            for g in &gens {
                let i = g.iter().position(|&e| e > 0).unwrap();
                q[i] = g[i];
            }
            out.insert(q);
        }
        Some(g) => {
            // (J + uv) = (J + u) ∩ (J + v) for coprime u, v
            let i = g.iter().position(|&e| e > 0).unwrap();
            let mut u = vec![0; g.len()];
            u[i] = g[i];
            let mut v = g.clone();
            v[i] = 0;
            for extra in [u, v] {
                let mut next = gens.clone();
                next.push(extra);
                split(minimalize(next), seen, out);
            }
        }
    }
}

/// Irredundant irreducible decomposition of a monomial ideal. Each
/// component `(x_i^{q_i} : q_i > 0)` is returned as the vector `q`.
pub fn irreducible_components(gens: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut all = BTreeSet::new();
    split(minimalize(gens.to_vec()), &mut HashSet::new(), &mut all);
    let all: Vec<Vec<u32>> = all.into_iter().collect();
    // Q' ⊆ Q iff every x_i^{q'_i} lies in Q
    let contains = |q: &[u32], qp: &[u32]| qp.iter().zip(q).all(|(&b, &a)| b == 0 || (a > 0 && a <= b));
    all.iter()
        .filter(|q| !all.iter().any(|qp| qp != *q && contains(q, qp)))
        .cloned()
        .collect()
}

/// Heights of the associated primes, from the irreducible decomposition.
pub fn associated_heights(gens: &[Vec<u32>]) -> BTreeSet<usize> {
    irreducible_components(gens)
        .iter()
        .map(|q| q.iter().filter(|&&e| e > 0).count())
        .collect()
}

pub fn oracle_unmixed(ideal: &MonomialIdeal) -> bool {
    associated_heights(&exponents(ideal)).len() == 1
}

/// Integer homology data of a complex given by facets (vertex lists):
/// invariant factors of every boundary map, from a Smith normal form.
pub struct SnfHomology {
    /// `dims[k]`: number of faces with `k` vertices (`k = 0` is the empty face).
    pub dims: Vec<usize>,
    /// `factors[k]`: nonzero invariant factors of `∂_k: C_k → C_{k-1}`
    /// (faces with `k + 1` vertices to faces with `k`), `k ≥ 0`.
    pub factors: Vec<Vec<i128>>,
}

impl SnfHomology {
    pub fn new(facets: &[Vec<usize>]) -> Self {
        let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
        for f in facets {
            let mut f = f.clone();
            f.sort_unstable();
            for mask in 0u32..1 << f.len() {
                let face: Vec<usize> = (0..f.len()).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect();
                faces.insert(face);
            }
        }
        let top = faces.iter().map(Vec::len).max().unwrap_or(0);
        let by_size: Vec<Vec<Vec<usize>>> =
            (0..=top).map(|k| faces.iter().filter(|f| f.len() == k).cloned().collect()).collect();
        let dims = by_size.iter().map(Vec::len).collect();
        let mut factors = Vec::new();
        for k in 1..=top {
            let rows = &by_size[k - 1];
            let cols = &by_size[k];
            let mut m = vec![vec![0i128; cols.len()]; rows.len()];
            for (c, face) in cols.iter().enumerate() {
                for drop in 0..face.len() {
                    let mut b = face.clone();
                    b.remove(drop);
                    let r = rows.binary_search(&b).unwrap();
                    m[r][c] = if drop % 2 == 0 { 1 } else { -1 };
                }
            }
            factors.push(smith_diagonal(m));
        }
        Self { dims, factors }
    }

    fn rank(&self, k: usize, p: u64) -> usize {
        self.factors
            .get(k)
            .map(|f| f.iter().filter(|&&d| p == 0 || d % p as i128 != 0).count())
            .unwrap_or(0)
    }

    /// Rank of `H̃_i` over `Q` (`p = 0`) or `GF(p)`, for `i ≥ -1`.
    pub fn reduced_rank(&self, i: i32, p: u64) -> usize {
        let k = (i + 1) as usize;
        let dim = self.dims.get(k).copied().unwrap_or(0);
        let out = if k == 0 { 0 } else { self.rank(k - 1, p) };
        dim - out - self.rank(k, p)
    }

    pub fn torsion(&self, i: i32) -> Vec<i128> {
        let k = (i + 1) as usize;
        self.factors.get(k).map(|f| f.iter().copied().filter(|&d| d > 1).collect()).unwrap_or_default()
    }
}

/// Nonzero diagonal entries of the Smith normal form, made positive.
pub fn smith_diagonal(mut a: Vec<Vec<i128>>) -> Vec<i128> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: smallest nonzero absolute value in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t];
            let mut changed = false;
            for i in t + 1..rows {
                let q = a[i][t] / p;
                if q != 0 {
                    for j in t..cols {
                        a[i][j] -= q * a[t][j];
                    }
                }
                if a[i][t] != 0 {
                    a.swap(t, i);
                    changed = true;
                    break;
                }
            }
            if changed {
                continue;
            }
            for j in t + 1..cols {
                let q = a[t][j] / p;
                if q != 0 {
                    for row in a.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                if a[t][j] != 0 {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    changed = true;
                    break;
                }
            }
            if changed {
                continue;
            }
            // the pivot must divide the rest of the block
            let bad = (t + 1..rows).flat_map(|i| (t + 1..cols).map(move |j| (i, j))).find(|&(i, j)| a[i][j] % p != 0);
            match bad {
                Some((i, _)) => {
                    for j in t..cols {
                        a[t][j] += a[i][j];
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

/// Reduced Euler characteristic from the face counts `f[k]` (faces with
/// `k` vertices).
pub fn euler_from_counts(f: &[u64]) -> i64 {
    f.iter().enumerate().map(|(k, &c)| if k % 2 == 1 { c as i64 } else { -(c as i64) }).sum()
}
