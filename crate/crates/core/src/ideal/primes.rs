use super::{polarize, MonomialIdeal};
use crate::bits;
use crate::error::{Error, Result};
use crate::report::{CriterionReport, Violation};
use crate::Limits;

/// Minimal primes of a squarefree monomial ideal, each given by its set of
/// variables, sorted by size and then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeList {
    pub primes: Vec<Vec<usize>>,
}

impl PrimeList {
    pub fn heights(&self) -> Vec<usize> {
        self.primes.iter().map(Vec::len).collect()
    }

    pub fn is_equicardinal(&self) -> bool {
        self.primes.windows(2).all(|w| w[0].len() == w[1].len())
    }
}

/// Minimal primes of a squarefree ideal: the inclusion-minimal sets of
/// variables meeting every generator support.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<PrimeList> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let masks = ideal.support_masks()?;
    Ok(PrimeList { primes: minimal_transversals(&masks).into_iter().map(bits::to_vec).collect() })
}

/// Minimal transversals of a hypergraph (MMCS: branch on the uncovered edge
/// with fewest candidates, keep only sets in which every element still has a
/// private edge). Sorted by size, then lexicographically.
pub(crate) fn minimal_transversals(edges: &[u64]) -> Vec<u64> {
    if edges.iter().any(|&e| e == 0) {
        return Vec::new();
    }
    let ground = edges.iter().fold(0, |a, &e| a | e);
    let mut out = Vec::new();
    mmcs(edges, 0, ground, &mut out);
    out.sort_by(|a, b| bits::cmp_sets(*a, *b));
    out
}

fn mmcs(edges: &[u64], set: u64, mut cand: u64, out: &mut Vec<u64>) {
    let Some(&pick) = edges
        .iter()
        .filter(|&&e| e & set == 0)
        .min_by_key(|&&e| (e & cand).count_ones())
    else {
        out.push(set);
        return;
    };
    let branch = pick & cand;
    cand &= !branch;
    for v in bits::ones(branch) {
        let next = set | 1 << v;
        if every_element_critical(edges, next) {
            mmcs(edges, next, cand, out);
        }
        cand |= 1 << v;
    }
}

/// Every element of `set` is the only element of `set` in some edge.
fn every_element_critical(edges: &[u64], set: u64) -> bool {
    let mut critical = 0u64;
    for &e in edges {
        let hit = e & set;
        if hit.count_ones() == 1 {
            critical |= hit;
        }
    }
    critical == set
}

/// Smallest size of a transversal (branch and bound on the shortest
/// uncovered edge). `None` if some edge is empty.
pub(crate) fn min_transversal_size(edges: &[u64]) -> Option<usize> {
    if edges.iter().any(|&e| e == 0) {
        return None;
    }
    let mut best = edges.iter().fold(0u64, |a, &e| a | e).count_ones() as usize;
    min_transversal(edges, 0, 0, &mut best);
    Some(best)
}

fn min_transversal(edges: &[u64], set: u64, excluded: u64, best: &mut usize) {
    let size = set.count_ones() as usize;
    if size >= *best {
        return;
    }
    let Some(&pick) = edges
        .iter()
        .filter(|&&e| e & set == 0)
        .min_by_key(|&&e| (e & !excluded).count_ones())
    else {
        *best = size;
        return;
    };
    // a lower bound from greedily packing disjoint uncovered edges
    let mut packed = 0u64;
    let mut disjoint = 0;
    for &e in edges.iter().filter(|&&e| e & set == 0) {
        if e & packed == 0 {
            packed |= e;
            disjoint += 1;
        }
    }
    if size + disjoint >= *best {
        return;
    }
    let mut excluded = excluded;
    for v in bits::ones(pick & !excluded) {
        min_transversal(edges, set | 1 << v, excluded, best);
        excluded |= 1 << v;
    }
}

/// Height of a monomial ideal, computed on its polarization. The zero ideal
/// has height 0.
pub fn height(ideal: &MonomialIdeal) -> Result<usize> {
    let pol = polarize(ideal);
    let masks = pol.ideal.support_masks()?;
    Ok(min_transversal_size(&masks).expect("generators are proper"))
}

/// `dim S/I = nvars - height`.
pub fn krull_dim(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(ideal.nvars() - height(ideal)?)
}

/// Whether all minimal primes of the polarization have one size. On failure
/// the witness is the first prime of smallest size and the first of largest
/// size, named by polarized variables.
pub fn is_unmixed(ideal: &MonomialIdeal, limits: &Limits) -> Result<CriterionReport> {
    let pol = polarize(ideal);
    limits.check_vars(pol.nvars())?;
    let primes = minimal_transversals(&pol.ideal.support_masks()?);
    let (Some(&low), Some(&last)) = (primes.first(), primes.last()) else {
        return Ok(CriterionReport::pass());
    };
    if low.count_ones() == last.count_ones() {
        return Ok(CriterionReport::pass());
    }
    let high = *primes
        .iter()
        .find(|p| p.count_ones() == last.count_ones())
        .expect("last is a candidate");
    let v = Violation::new(
        "mixed-heights",
        format!(
            "minimal primes of heights {} and {}",
            low.count_ones(),
            high.count_ones()
        ),
    )
    .with_sets(vec![pol.names(low), pol.names(high)]);
    Ok(CriterionReport::from_violations(vec![v]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::Monomial;

    fn ideal(nvars: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(nvars, gens.iter().map(|e| Monomial::new(e.to_vec()).unwrap()).collect()).unwrap()
    }

    /// All inclusion-minimal transversals by checking every subset.
    fn brute_transversals(n: usize, edges: &[u64]) -> Vec<u64> {
        let hits = |s: u64| edges.iter().all(|&e| e & s != 0);
        let mut out: Vec<u64> = (0..1u64 << n)
            .filter(|&s| hits(s) && bits::ones(s).all(|v| !hits(s & !(1 << v))))
            .collect();
        out.sort_by(|a, b| bits::cmp_sets(*a, *b));
        out
    }

    #[test]
    fn triangle_and_path() {
        let tri = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(minimal_primes(&tri).unwrap().primes, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        // x1 y1 x2 y2 = 0 1 2 3
        let p4 = ideal(4, &[&[1, 1, 0, 0], &[1, 0, 1, 0], &[0, 0, 1, 1]]);
        let primes = minimal_primes(&p4).unwrap();
        assert_eq!(primes.primes, vec![vec![0, 2], vec![0, 3], vec![1, 2]]);
        assert!(primes.is_equicardinal());
    }

    #[test]
    fn non_squarefree_rejected() {
        assert_eq!(minimal_primes(&ideal(1, &[&[2]])), Err(Error::NotSquarefree));
    }

    #[test]
    fn heights() {
        assert_eq!(height(&ideal(2, &[&[2, 0], &[1, 1]])).unwrap(), 1);
        assert_eq!(height(&ideal(3, &[&[1, 2, 3]])).unwrap(), 1);
        assert_eq!(krull_dim(&ideal(2, &[&[1, 1]])).unwrap(), 1);
        assert_eq!(height(&MonomialIdeal::zero(3)).unwrap(), 0);
        assert_eq!(minimal_primes(&MonomialIdeal::zero(3)).unwrap().primes, vec![Vec::<usize>::new()]);
    }

    #[test]
    fn weighted_path_unmixedness() {
        // x1 y1 x2 y2 = 0 1 2 3; edges x1y1, x1x2, x2y2
        let limits = Limits::default();
        let good = ideal(4, &[&[2, 2, 0, 0], &[1, 0, 1, 0], &[0, 0, 3, 3]]);
        assert!(is_unmixed(&good, &limits).unwrap().verdict());

        let bad = ideal(4, &[&[1, 1, 0, 0], &[2, 0, 2, 0], &[0, 0, 1, 1]]);
        let r = is_unmixed(&bad, &limits).unwrap();
        assert!(!r.verdict());
        let sets = &r.violations()[0].sets;
        assert_eq!(sets[0], vec!["x1_1", "x3_1"]);
        assert_eq!(sets[1].len(), 3);
        // x1's second copy, y1 and y2
        assert_eq!(sets[1], vec!["x1_2", "x2_1", "x4_1"]);
    }

    #[test]
    fn cap_enforced() {
        let big = ideal(2, &[&[20, 20]]);
        let limits = Limits::default();
        assert!(matches!(is_unmixed(&big, &limits), Err(Error::ResourceCap { .. })));
    }

    #[test]
    fn mmcs_matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=12);
            let m = rng.gen_range(1..=10);
            let edges: Vec<u64> = (0..m)
                .map(|_| loop {
                    let e = rng.gen_range(1..1u64 << n) & rng.gen_range(1..1u64 << n);
                    if e != 0 {
                        break e;
                    }
                })
                .collect();
            let fast = minimal_transversals(&edges);
            assert_eq!(fast, brute_transversals(n, &edges), "edges {edges:?}");
            assert_eq!(
                min_transversal_size(&edges).unwrap(),
                fast.iter().map(|s| s.count_ones() as usize).min().unwrap()
            );
        }
    }
}
