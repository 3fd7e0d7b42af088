//! Simplicial complexes stored by their minimal nonfaces (the supports of a
//! squarefree monomial ideal), with homotopy reductions that keep homology
//! computations small.

use std::collections::HashMap;

use super::linalg::{rank_mod, rank_rational, SparseRow, FILTER_PRIME};
use super::FieldSpec;
use crate::bits;
use crate::ideal::{min_transversal_size, minimal_transversals};

/// Complex on ground set `0..m` whose faces are the sets containing no
/// element of `gens`. `gens` is inclusion-minimal and sorted; it contains
/// the empty set only for the void complex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Nonfaces {
    pub m: usize,
    pub gens: Vec<u64>,
}

/// A complex split as `cone_apexes * core` after deleting vertices that are
/// not faces. `keep` maps core coordinates into the original ground set.
pub(crate) struct Stripped {
    pub core: Nonfaces,
    pub keep: u64,
    pub apexes: u64,
}

pub(crate) fn minimalize(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_by_key(|s| (s.count_ones(), *s));
    sets.dedup();
    let mut out: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !out.iter().any(|&t| t & s == t) {
            out.push(s);
        }
    }
    out.sort_unstable();
    out
}

impl Nonfaces {
    pub fn new(m: usize, gens: Vec<u64>) -> Self {
        Self { m, gens: minimalize(gens) }
    }

    /// Minimal nonfaces of the complex with the given facets: the minimal
    /// sets meeting every facet complement.
    pub fn from_facets(m: usize, facets: &[u64]) -> Self {
        let complements: Vec<u64> = facets.iter().map(|&f| bits::full(m) & !f).collect();
        Self::new(m, minimal_transversals(&complements))
    }

    pub fn is_void(&self) -> bool {
        self.gens.first() == Some(&0)
    }

    /// Dimension; `None` for the void complex.
    pub fn dim(&self) -> Option<i32> {
        let tau = if self.gens.is_empty() { 0 } else { min_transversal_size(&self.gens)? };
        Some(self.m as i32 - tau as i32 - 1)
    }

    /// Facets as complements of the minimal transversals.
    #[cfg(test)]
    pub fn facets(&self) -> Vec<u64> {
        if self.is_void() {
            return Vec::new();
        }
        if self.gens.is_empty() {
            return vec![bits::full(self.m)];
        }
        let mut f: Vec<u64> = minimal_transversals(&self.gens)
            .into_iter()
            .map(|t| bits::full(self.m) & !t)
            .collect();
        f.sort_by(|a, b| bits::cmp_sets(*a, *b));
        f
    }

    /// Link of a face, on the ground set minus the face (compressed).
    pub fn link(&self, face: u64) -> (Nonfaces, u64) {
        let keep = bits::full(self.m) & !face;
        let gens = self.gens.iter().map(|&g| bits::compress(g & !face, keep)).collect();
        (Nonfaces::new(keep.count_ones() as usize, gens), keep)
    }

    /// Induced subcomplex on `w` (compressed).
    pub fn restrict(&self, w: u64) -> Nonfaces {
        let gens = self
            .gens
            .iter()
            .filter(|&&g| g & w == g)
            .map(|&g| bits::compress(g, w))
            .collect();
        Nonfaces::new(w.count_ones() as usize, gens)
    }

    /// Drops non-vertices (singleton nonfaces) and splits off cone points
    /// (vertices in no nonface). Not meaningful for the void complex.
    pub fn strip(&self) -> Stripped {
        let ghosts = self.gens.iter().filter(|g| g.count_ones() == 1).fold(0, |a, &g| a | g);
        let used = self.gens.iter().filter(|g| g.count_ones() > 1).fold(0, |a, &g| a | g);
        let vertices = bits::full(self.m) & !ghosts;
        let keep = vertices & used;
        let apexes = vertices & !used;
        let gens = self
            .gens
            .iter()
            .filter(|g| g.count_ones() > 1)
            .map(|&g| bits::compress(g, keep))
            .collect();
        Stripped { core: Nonfaces { m: keep.count_ones() as usize, gens }, keep, apexes }
    }

    /// For each vertex, the set of generators containing it.
    fn incidence(&self) -> Vec<Vec<u64>> {
        let words = self.gens.len().div_ceil(64).max(1);
        let mut inc = vec![vec![0u64; words]; self.m];
        for (j, &g) in self.gens.iter().enumerate() {
            for v in bits::ones(g) {
                inc[v][j / 64] |= 1 << (j % 64);
            }
        }
        inc
    }

    /// A pair `(u, v)`, `u ≠ v`, such that every nonface containing `u`
    /// contains `v`. Then the deletion of `v` is a cone with apex `u`, so the
    /// complex is homotopy equivalent to the suspension of the link of `v`.
    fn dominated_pair(&self) -> Option<(usize, usize)> {
        let inc = self.incidence();
        for u in 0..self.m {
            for v in 0..self.m {
                if u != v && inc[u].iter().zip(&inc[v]).all(|(a, b)| a & b == *a) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    /// Number of faces of each size `0, 1, ...`, without trailing zeros;
    /// empty for the void complex. Counts by `f(Δ) = f(Δ - v) + t f(lk v)`
    /// after splitting off cone points.
    pub fn face_counts(&self) -> Vec<u64> {
        fn add_shifted(a: &mut Vec<u64>, b: &[u64], shift: usize) {
            if a.len() < b.len() + shift {
                a.resize(b.len() + shift, 0);
            }
            for (k, &c) in b.iter().enumerate() {
                a[k + shift] += c;
            }
        }
        fn times_cone(mut p: Vec<u64>, apexes: u32) -> Vec<u64> {
            for _ in 0..apexes {
                let prev = p.clone();
                add_shifted(&mut p, &prev, 1);
            }
            p
        }
        fn go(nf: &Nonfaces, memo: &mut HashMap<Nonfaces, Vec<u64>>) -> Vec<u64> {
            if nf.is_void() {
                return Vec::new();
            }
            let st = nf.strip();
            let core = st.core;
            if let Some(p) = memo.get(&core) {
                return times_cone(p.clone(), st.apexes.count_ones());
            }
            let p = if core.gens.is_empty() {
                times_cone(vec![1], core.m as u32)
            } else {
                let inc = core.incidence();
                let v = (0..core.m)
                    .max_by_key(|&v| inc[v].iter().map(|w| w.count_ones()).sum::<u32>())
                    .expect("core has vertices");
                let mut p = go(&core.restrict(bits::full(core.m) & !(1 << v)), memo);
                let link = go(&core.link(1 << v).0, memo);
                add_shifted(&mut p, &link, 1);
                p
            };
            memo.insert(core, p.clone());
            times_cone(p, st.apexes.count_ones())
        }
        let mut p = go(self, &mut HashMap::new());
        while p.last() == Some(&0) {
            p.pop();
        }
        p
    }

    /// Faces with at most `max_size` vertices, grouped by size and sorted.
    pub fn faces_upto(&self, max_size: usize) -> Vec<Vec<u64>> {
        let mut levels = vec![Vec::new(); max_size + 1];
        if self.is_void() {
            return levels;
        }
        // a nonface inside F ∪ {w}, w > max F, must have w as its largest element
        let mut by_top: Vec<Vec<u64>> = vec![Vec::new(); self.m];
        for &g in &self.gens {
            by_top[63 - g.leading_zeros() as usize].push(g);
        }
        let mut stack = vec![(0u64, 0usize)];
        while let Some((f, next)) = stack.pop() {
            levels[f.count_ones() as usize].push(f);
            if f.count_ones() as usize == max_size {
                continue;
            }
            for w in next..self.m {
                let g2 = f | 1 << w;
                if by_top[w].iter().all(|&g| g & g2 != g) {
                    stack.push((g2, w + 1));
                }
            }
        }
        for l in &mut levels {
            l.sort_unstable();
        }
        levels
    }
}

/// Reduced homology ranks `H̃_i` for `-1 ≤ i ≤ top`, at index `i + 1`.
pub(crate) fn homology(nf: &Nonfaces, field: FieldSpec, top: i32) -> Vec<usize> {
    let mut out = vec![0; (top + 2).max(0) as usize];
    if nf.is_void() || top < -1 {
        return out;
    }
    // H̃_i(original) = H̃_{i - shift}(current)
    let mut shift = 0i32;
    let mut cur = nf.clone();
    loop {
        let s = cur.strip();
        if s.apexes != 0 {
            return out;
        }
        let core = s.core;
        if top - shift < -1 {
            return out;
        }
        match core.dominated_pair() {
            Some((_, v)) => {
                cur = core.link(1 << v).0;
                shift += 1;
            }
            None => {
                let ranks = chain_homology(&core, field, top - shift);
                for (idx, r) in ranks.into_iter().enumerate() {
                    out[idx + shift as usize] = r;
                }
                return out;
            }
        }
    }
}

/// Homology from the reduced chain complex of all faces up to dimension
/// `top + 1`.
pub(crate) fn chain_homology(nf: &Nonfaces, field: FieldSpec, top: i32) -> Vec<usize> {
    let levels = nf.faces_upto((top + 2) as usize);
    let index: Vec<HashMap<u64, u32>> = levels
        .iter()
        .map(|l| l.iter().enumerate().map(|(i, &f)| (f, i as u32)).collect())
        .collect();
    // boundary[k]: faces of size k+1 → faces of size k, i.e. ∂_k
    let boundary = |k: usize| -> Vec<SparseRow> {
        levels[k + 1]
            .iter()
            .map(|&f| {
                let mut row: SparseRow = bits::ones(f)
                    .enumerate()
                    .map(|(pos, v)| {
                        let sign = if pos % 2 == 0 { 1 } else { -1 };
                        (index[k][&(f & !(1 << v))], sign)
                    })
                    .collect();
                row.sort_unstable();
                row
            })
            .collect()
    };
    let n_deg = (top + 2) as usize;
    let rank_with = |k: usize, p: Option<u64>| -> usize {
        if k + 1 >= levels.len() {
            return 0;
        }
        let rows = boundary(k);
        match p {
            Some(p) => rank_mod(&rows, levels[k].len(), p),
            None => rank_rational(&rows, levels[k].len()),
        }
    };
    let p = if field.is_rational() { FILTER_PRIME } else { field.characteristic() };
    // rank of ∂_k for k = 0..=n_deg (∂_k leaves C_{k-1}, i.e. level k+1 → k)
    let ranks_p: Vec<usize> = (0..=n_deg).map(|k| rank_with(k, Some(p))).collect();
    let h = |ranks: &dyn Fn(usize) -> usize, idx: usize| -> usize {
        // degree i = idx - 1 lives on level idx; ∂ out of it is rank(idx - 1)
        let out_rank = if idx == 0 { 0 } else { ranks(idx - 1) };
        levels[idx].len() - out_rank - ranks(idx)
    };
    let mut result: Vec<usize> = (0..n_deg).map(|idx| h(&|k| ranks_p[k], idx)).collect();
    if field.is_rational() {
        let mut exact: HashMap<usize, usize> = HashMap::new();
        for idx in 0..n_deg {
            if result[idx] == 0 {
                continue;
            }
            let mut get = |k: usize| *exact.entry(k).or_insert_with(|| rank_with(k, None));
            let out_rank = if idx == 0 { 0 } else { get(idx - 1) };
            let in_rank = get(idx);
            result[idx] = levels[idx].len() - out_rank - in_rank;
        }
    }
    result
}

/// A nonvanishing `H̃_degree(lk face)` of the given rank, where the link
/// has dimension `link_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct LinkWitness {
    pub face: u64,
    pub degree: i32,
    pub rank: usize,
    pub link_dim: i32,
}

/// Searches for a face `F` and a degree `i < bound(dim lk F)` with
/// `H̃_i(lk F) ≠ 0`. Faces are reached through vertex links; results are
/// memoized on the reduced representation.
pub(crate) struct LinkSearch<B: Fn(i32) -> i32> {
    field: FieldSpec,
    bound: B,
    memo: HashMap<Nonfaces, Option<LinkWitness>>,
}

impl<B: Fn(i32) -> i32> LinkSearch<B> {
    pub fn new(field: FieldSpec, bound: B) -> Self {
        Self { field, bound, memo: HashMap::new() }
    }

    pub fn run(&mut self, nf: &Nonfaces) -> Option<LinkWitness> {
        if nf.is_void() {
            return None;
        }
        // links of faces missing a cone apex are cones themselves
        let s = nf.strip();
        let w = self.run_core(&s.core)?;
        Some(LinkWitness { face: bits::expand(w.face, s.keep) | s.apexes, ..w })
    }

    fn run_core(&mut self, core: &Nonfaces) -> Option<LinkWitness> {
        if let Some(hit) = self.memo.get(core) {
            return hit.clone();
        }
        let dim = core.dim().expect("not void");
        let bound = (self.bound)(dim);
        let mut found = None;
        if bound > -1 {
            let h = homology(core, self.field, bound - 1);
            if let Some(idx) = h.iter().position(|&r| r > 0) {
                found = Some(LinkWitness { face: 0, degree: idx as i32 - 1, rank: h[idx], link_dim: dim });
            }
        }
        if found.is_none() {
            for v in 0..core.m {
                let (lk, keep) = core.link(1 << v);
                if let Some(w) = self.run(&lk) {
                    found = Some(LinkWitness { face: bits::expand(w.face, keep) | 1 << v, ..w });
                    break;
                }
            }
        }
        self.memo.insert(core.clone(), found.clone());
        found
    }
}
