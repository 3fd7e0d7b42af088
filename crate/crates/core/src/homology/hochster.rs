//! Betti numbers, projective dimension and depth from induced subcomplexes.

use std::collections::{BTreeMap, HashSet};

use super::nonface::{homology, Nonfaces};
use super::FieldSpec;
use crate::error::Result;
use crate::ideal::{polarize, MonomialIdeal};
use crate::Limits;

/// Graded Betti numbers of `S/I` keyed by `(i, degree)`, nonzero entries
/// only. Degrees refer to the polarization, whose total degrees agree with
/// those of `I`.
pub type BettiTable = BTreeMap<(usize, usize), usize>;

/// Unions of generator supports, including the empty set. Every other
/// vertex set `W` has a vertex in no nonface inside `W`, so `Δ_W` is a cone
/// and contributes nothing.
pub(crate) fn lcm_lattice(gens: &[u64]) -> Vec<u64> {
    let mut seen: HashSet<u64> = HashSet::from([0]);
    let mut queue = vec![0u64];
    while let Some(w) = queue.pop() {
        for &g in gens {
            let u = w | g;
            if seen.insert(u) {
                queue.push(u);
            }
        }
    }
    let mut out: Vec<u64> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

/// `β_{i,W} = rank H̃_{|W|-i-1}(Δ_W)` summed by `|W|`.
pub(crate) fn betti_from_nonfaces(nf: &Nonfaces, field: FieldSpec, sets: &[u64]) -> BettiTable {
    let mut table = BettiTable::new();
    for &w in sets {
        let size = w.count_ones() as usize;
        let h = homology(&nf.restrict(w), field, size as i32 - 1);
        for (idx, &r) in h.iter().enumerate() {
            if r > 0 {
                // idx = j + 1 for degree j, and i = |W| - 1 - j
                *table.entry((size - idx, size)).or_insert(0) += r;
            }
        }
    }
    table
}

fn table_of(ideal: &MonomialIdeal, field: FieldSpec, limits: &Limits) -> Result<BettiTable> {
    let pol = polarize(ideal);
    limits.check_vars(pol.nvars())?;
    let gens = pol.ideal.support_masks()?;
    let nf = Nonfaces::new(pol.nvars(), gens.clone());
    Ok(betti_from_nonfaces(&nf, field, &lcm_lattice(&gens)))
}

/// Graded Betti numbers of `S/I` over `field`, by Hochster's formula on the
/// polarization.
pub fn betti_numbers(ideal: &MonomialIdeal, field: FieldSpec, limits: &Limits) -> Result<BettiTable> {
    table_of(ideal, field, limits)
}

/// Projective dimension of `S/I`; it is unchanged by polarization.
pub fn projective_dimension(ideal: &MonomialIdeal, field: FieldSpec, limits: &Limits) -> Result<usize> {
    let table = table_of(ideal, field, limits)?;
    Ok(table.keys().map(|&(i, _)| i).max().unwrap_or(0))
}

/// `depth S/I = nvars - pd S/I` (Auslander-Buchsbaum).
pub fn depth_via_hochster(ideal: &MonomialIdeal, field: FieldSpec, limits: &Limits) -> Result<usize> {
    Ok(ideal.nvars() - projective_dimension(ideal, field, limits)?)
}
