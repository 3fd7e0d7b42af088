use super::{Monomial, MonomialIdeal};

/// A squarefree ideal obtained by polarization, with the variable map.
///
/// Copy `k` (1-based) of original variable `i` becomes variable
/// `offset(i) + k - 1`; copies are laid out variable by variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarizedIdeal {
    pub ideal: MonomialIdeal,
    /// `varmap[new] = (i, k)`.
    pub varmap: Vec<(usize, u32)>,
    /// `caps[i]`: largest exponent of `x_i` among the generators.
    pub caps: Vec<u32>,
}

impl PolarizedIdeal {
    pub fn nvars(&self) -> usize {
        self.varmap.len()
    }

    /// Display name `x{i}_{k}`, both 1-based.
    pub fn name(&self, new: usize) -> String {
        let (i, k) = self.varmap[new];
        format!("x{}_{k}", i + 1)
    }

    pub fn index(&self, i: usize, k: u32) -> Option<usize> {
        if k == 0 || k > self.caps[i] {
            return None;
        }
        let offset: u32 = self.caps[..i].iter().sum();
        Some((offset + k - 1) as usize)
    }

    /// Names of a set of polarized variables given as a mask.
    pub fn names(&self, mask: u64) -> Vec<String> {
        crate::bits::ones(mask).map(|v| self.name(v)).collect()
    }
}

/// Replaces each `x_i^a` in a generator by `x_{i1} ⋯ x_{ia}`.
pub fn polarize(ideal: &MonomialIdeal) -> PolarizedIdeal {
    let caps = ideal.max_exponents();
    let varmap: Vec<(usize, u32)> = caps
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| (1..=a).map(move |k| (i, k)))
        .collect();
    let mut offsets = Vec::with_capacity(caps.len());
    let mut acc = 0usize;
    for &a in &caps {
        offsets.push(acc);
        acc += a as usize;
    }
    let gens = ideal
        .gens()
        .iter()
        .map(|g| {
            let mut e = vec![0u32; varmap.len()];
            for (i, &a) in g.exponents().iter().enumerate() {
                for k in 0..a as usize {
                    e[offsets[i] + k] = 1;
                }
            }
            Monomial(e)
        })
        .collect();
    let ideal = MonomialIdeal::new(varmap.len(), gens).expect("polarized generators are proper");
    PolarizedIdeal { ideal, varmap, caps }
}
