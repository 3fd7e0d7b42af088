//! Stanley-Reisner complexes, reduced homology over the rationals and GF(p),
//! and the homological tests built on it (Reisner, Serre, Hochster).

mod hochster;
mod linalg;
mod nonface;

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::error::{Error, Result};
use crate::ideal::{minimal_primes, polarize, Monomial, MonomialIdeal};
use crate::report::{CriterionReport, Violation};
use crate::Limits;

pub use hochster::{betti_numbers, depth_via_hochster, projective_dimension, BettiTable};
pub(crate) use nonface::Nonfaces;
use nonface::{LinkSearch, LinkWitness};

/// Coefficient field: characteristic 0 (the rationals) or a prime `p < 2^32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct FieldSpec(u64);

impl FieldSpec {
    pub fn new(characteristic: u64) -> Result<Self> {
        if characteristic == 0 || (characteristic < 1 << 32 && is_prime(characteristic)) {
            Ok(Self(characteristic))
        } else {
            Err(Error::InvalidField(characteristic))
        }
    }

    pub fn rational() -> Self {
        Self(0)
    }

    pub fn characteristic(self) -> u64 {
        self.0
    }

    pub fn is_rational(self) -> bool {
        self.0 == 0
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        Self::rational()
    }
}

impl TryFrom<u64> for FieldSpec {
    type Error = Error;
    fn try_from(p: u64) -> Result<Self> {
        Self::new(p)
    }
}

impl From<FieldSpec> for u64 {
    fn from(f: FieldSpec) -> u64 {
        f.0
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Ranks of reduced homology `H̃_i` for `-1 ≤ i ≤ dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub field: FieldSpec,
    /// `ranks[i + 1]` is the rank of `H̃_i`; empty for the void complex.
    pub ranks: Vec<usize>,
}

impl HomologyProfile {
    pub fn rank(&self, i: i32) -> usize {
        usize::try_from(i + 1).ok().and_then(|k| self.ranks.get(k)).copied().unwrap_or(0)
    }

    /// `Σ (-1)^i rank H̃_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(k, &r)| if k % 2 == 1 { r as i64 } else { -(r as i64) })
            .sum()
    }

    /// Degrees with nonzero homology.
    pub fn nonzero(&self) -> Vec<(i32, usize)> {
        self.ranks
            .iter()
            .enumerate()
            .filter(|(_, &r)| r > 0)
            .map(|(k, &r)| (k as i32 - 1, r))
            .collect()
    }
}

/// A finite simplicial complex on vertices `0..nverts`, stored by facets.
/// No facets is the void complex; the single empty facet is `{∅}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    nverts: usize,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    pub fn new(nverts: usize, facets: Vec<Vec<usize>>) -> Result<Self> {
        if nverts > Limits::HARD_MAX_VARS {
            return Err(Error::ResourceCap { what: "vertices", got: nverts, limit: Limits::HARD_MAX_VARS });
        }
        let mut masks = Vec::with_capacity(facets.len());
        for (j, f) in facets.iter().enumerate() {
            let mut mask = 0u64;
            for &v in f {
                if v >= nverts {
                    return Err(Error::InvalidComplex(format!("facets[{j}] has vertex {v} >= nverts {nverts}")));
                }
                if mask >> v & 1 == 1 {
                    return Err(Error::InvalidComplex(format!("facets[{j}] repeats vertex {v}")));
                }
                mask |= 1 << v;
            }
            if let Some(k) = masks.iter().position(|&m: &u64| m & mask == mask || m & mask == m) {
                return Err(Error::InvalidComplex(format!("facets[{j}] and facets[{k}] are comparable")));
            }
            masks.push(mask);
        }
        Ok(Self::from_masks(nverts, masks))
    }

    pub(crate) fn from_masks(nverts: usize, mut facets: Vec<u64>) -> Self {
        facets.sort_by(|a, b| bits::cmp_sets(*a, *b));
        Self { nverts, facets }
    }

    pub fn void(nverts: usize) -> Self {
        Self { nverts, facets: Vec::new() }
    }

    pub fn simplex(nverts: usize) -> Self {
        Self { nverts, facets: vec![bits::full(nverts)] }
    }

    pub fn nverts(&self) -> usize {
        self.nverts
    }

    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&f| bits::to_vec(f)).collect()
    }

    pub fn facet_masks(&self) -> &[u64] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `None` for the void complex, `-1` for `{∅}`.
    pub fn dim(&self) -> Option<i32> {
        self.facets.iter().map(|f| f.count_ones() as i32 - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].count_ones() == w[1].count_ones())
    }

    pub fn is_face(&self, f: u64) -> bool {
        self.facets.iter().any(|&g| g & f == f)
    }

    /// Number of faces of each size `0..=dim+1`.
    pub fn f_vector(&self) -> Vec<u64> {
        self.nonfaces().face_counts()
    }

    /// `Σ_{F} (-1)^{dim F}`, including `-1` for the empty face.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 1 { c as i64 } else { -(c as i64) })
            .sum()
    }

    pub(crate) fn nonfaces(&self) -> Nonfaces {
        Nonfaces::from_facets(self.nverts, &self.facets)
    }
}

/// The complex whose faces are the sets of variables containing no
/// generator support; its facets complement the minimal primes.
pub fn stanley_reisner(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    let primes = minimal_primes(ideal)?;
    let full = bits::full(ideal.nvars());
    let facets = primes.primes.iter().map(|p| full & !bits::from_iter(p.iter().copied())).collect();
    Ok(SimplicialComplex::from_masks(ideal.nvars(), facets))
}

/// The squarefree ideal generated by the minimal nonfaces of `c`. The void
/// complex has no such ideal (it would be the unit ideal).
pub fn stanley_reisner_ideal(c: &SimplicialComplex) -> Result<MonomialIdeal> {
    if c.is_void() {
        return Err(Error::InvalidComplex("the void complex corresponds to the unit ideal".into()));
    }
    let gens = c
        .nonfaces()
        .gens
        .iter()
        .map(|&g| Monomial::squarefree(c.nverts, bits::ones(g)))
        .collect();
    MonomialIdeal::new(c.nverts, gens)
}

/// `lk F = {G : G ∩ F = ∅, G ∪ F ∈ Δ}` on the same vertex labels.
pub fn link(c: &SimplicialComplex, face: &[usize]) -> Result<SimplicialComplex> {
    let f = bits::from_iter(face.iter().copied().filter(|&v| v < 64));
    if face.iter().any(|&v| v >= c.nverts) || !c.is_face(f) {
        return Err(Error::NotAFace(format!("{face:?}")));
    }
    let facets = c.facets.iter().filter(|&&g| g & f == f).map(|&g| g & !f).collect();
    Ok(SimplicialComplex::from_masks(c.nverts, facets))
}

/// Reduced homology of a complex.
pub fn reduced_homology(c: &SimplicialComplex, field: FieldSpec, limits: &Limits) -> Result<HomologyProfile> {
    limits.check_vars(c.nverts)?;
    let ranks = match c.dim() {
        None => Vec::new(),
        Some(d) => nonface::homology(&c.nonfaces(), field, d),
    };
    Ok(HomologyProfile { field, ranks })
}

fn link_violation(clause: &str, w: &LinkWitness, names: Vec<String>, what: &str) -> Violation {
    Violation::new(
        clause,
        format!(
            "H̃_{}(lk F) has rank {} but {what} (dim lk F = {})",
            w.degree, w.rank, w.link_dim
        ),
    )
    .with_sets(vec![names])
    .with_homology(w.degree, w.rank)
}

fn reisner(nf: &Nonfaces, field: FieldSpec, names: impl Fn(u64) -> Vec<String>) -> CriterionReport {
    match LinkSearch::new(field, |d| d).run(nf) {
        None => CriterionReport::pass(),
        Some(w) => CriterionReport::from_violations(vec![link_violation(
            "reisner",
            &w,
            names(w.face),
            "must vanish below dim lk F",
        )]),
    }
}

fn serre(nf: &Nonfaces, s: u32, field: FieldSpec, names: impl Fn(u64) -> Vec<String>) -> Result<CriterionReport> {
    if s == 0 {
        return Err(Error::Precondition("Serre index must be at least 1".into()));
    }
    let s = s as i32;
    Ok(match LinkSearch::new(field, move |d| d.min(s - 1)).run(nf) {
        None => CriterionReport::pass(),
        Some(w) => CriterionReport::from_violations(vec![link_violation(
            "serre",
            &w,
            names(w.face),
            &format!("must vanish below min({}, dim lk F)", s - 1),
        )]),
    })
}

fn vertex_names(mask: u64) -> Vec<String> {
    bits::ones(mask).map(|v| v.to_string()).collect()
}

/// Reisner's criterion on a complex: `H̃_i(lk F) = 0` for all faces `F` and
/// all `i < dim lk F`. Reports at most one witness.
pub fn is_cm_complex(c: &SimplicialComplex, field: FieldSpec, limits: &Limits) -> Result<CriterionReport> {
    limits.check_vars(c.nverts)?;
    Ok(reisner(&c.nonfaces(), field, vertex_names))
}

/// Serre's condition `(S_s)` on a complex: `H̃_i(lk F) = 0` for all faces
/// `F` and all `i < min(s - 1, dim lk F)`.
pub fn serre_complex(c: &SimplicialComplex, s: u32, field: FieldSpec, limits: &Limits) -> Result<CriterionReport> {
    limits.check_vars(c.nverts)?;
    serre(&c.nonfaces(), s, field, vertex_names)
}

/// Cohen-Macaulayness of `S/I`, decided by Reisner's criterion on the
/// Stanley-Reisner complex of the polarization (polarization preserves the
/// Cohen-Macaulay property). Witness faces are named by polarized variables.
pub fn is_cm_reisner(ideal: &MonomialIdeal, field: FieldSpec, limits: &Limits) -> Result<CriterionReport> {
    let pol = polarize(ideal);
    limits.check_vars(pol.nvars())?;
    let nf = Nonfaces::new(pol.nvars(), pol.ideal.support_masks()?);
    Ok(reisner(&nf, field, |f| pol.names(f)))
}

/// Serre's condition `(S_s)` for a squarefree ideal via the link criterion.
/// Non-squarefree ideals must be polarized by the caller, who then owns the
/// question of whether the property transfers.
pub fn serre_sk(ideal: &MonomialIdeal, s: u32, field: FieldSpec, limits: &Limits) -> Result<CriterionReport> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    limits.check_vars(ideal.nvars())?;
    let nf = Nonfaces::new(ideal.nvars(), ideal.support_masks()?);
    serre(&nf, s, field, |f| bits::ones(f).map(|v| format!("x{}", v + 1)).collect())
}

/// Serre's condition `(S_s)` for the polarization of `ideal`, with witness
/// faces named by polarized variables. For squarefree input this is
/// [`serre_sk`] up to variable names.
pub fn serre_sk_polarized(ideal: &MonomialIdeal, s: u32, field: FieldSpec, limits: &Limits) -> Result<CriterionReport> {
    let pol = polarize(ideal);
    limits.check_vars(pol.nvars())?;
    let nf = Nonfaces::new(pol.nvars(), pol.ideal.support_masks()?);
    serre(&nf, s, field, |f| pol.names(f))
}
