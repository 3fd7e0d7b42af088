use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{cm_criterion_vwc, four_cycle_weight_property, unmixed_criterion_vwc};
use crate::error::{Error, Result};
use crate::graph::{
    doublestar_relabeling, o_i_operator, random_weighted_vwc, EdgeWeighting, Side, WeightedGraph, WeightedVwcGraph,
};
use crate::homology::{is_cm_reisner, FieldSpec};
use crate::ideal::{is_unmixed, weighted_edge_ideal};
use crate::Limits;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CampaignConfig {
    pub count: usize,
    pub h_max: usize,
    pub w_max: u32,
    pub seed: u64,
}

/// Outcome of a cross-validation run. Mismatches and violations are data;
/// `failures` keeps the first few, each tagged with its instance seed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CampaignSummary {
    pub instances: usize,
    pub skipped: usize,
    pub criterion_unmixed: usize,
    pub unmixed_mismatches: usize,
    pub cm_base: usize,
    pub cm_mismatches: usize,
    pub o_i_checks: usize,
    pub o_i_violations: usize,
    pub four_cycle_checks: usize,
    pub four_cycle_violations: usize,
    pub first_failing_seed: Option<u64>,
    pub failures: Vec<String>,
}

impl CampaignSummary {
    pub fn clean(&self) -> bool {
        self.unmixed_mismatches == 0
            && self.cm_mismatches == 0
            && self.o_i_violations == 0
            && self.four_cycle_violations == 0
    }

    fn fail(&mut self, seed: u64, what: String) {
        self.first_failing_seed.get_or_insert(seed);
        if self.failures.len() < 10 {
            self.failures.push(format!("seed {seed}: {what}"));
        }
    }
}

/// Instance seeds of a campaign, in order.
pub fn instance_seeds(config: &CampaignConfig) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    (0..config.count).map(|_| rng.next_u64()).collect()
}

/// The random weighted graph used for one campaign instance. Half of the
/// instances draw each non-matching weight below both matching weights at
/// its ends, so that clause (i) holds and unmixed inputs are common.
pub fn campaign_instance(seed: u64, h_max: usize, w_max: u32) -> Result<WeightedVwcGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let h = rng.gen_range(1..=h_max.max(1));
    let density = rng.gen_range(0.1..0.7);
    let gw = random_weighted_vwc(h, density, w_max, rng.next_u64())?;
    if rng.gen_bool(0.5) {
        return Ok(gw);
    }
    let l = gw.labeling();
    let matching = |v: usize| {
        let (i, _) = l.locate(v).expect("labeled");
        gw.w((Side::X, i), (Side::Y, i)).expect("matching edge")
    };
    let mut weights = EdgeWeighting::new();
    for (u, v, w) in gw.weighted().weighted_edges() {
        let (iu, _) = l.locate(u).expect("labeled");
        let (iv, _) = l.locate(v).expect("labeled");
        let w = if iu == iv { w } else { rng.gen_range(1..=matching(u).min(matching(v))) };
        weights.set(u, v, w);
    }
    WeightedVwcGraph::new(WeightedGraph::new(gw.graph().clone(), weights)?, l.clone())
}

/// Runs the criteria against the oracles on `config.count` random
/// instances:
///
/// - the unmixedness criterion against minimal primes of the polarization;
/// - on Cohen-Macaulay base graphs, the criterion against Reisner's
///   criterion in characteristic 0;
/// - from unmixed inputs on Cohen-Macaulay bases, in a labeling satisfying
///   `x_i y_j ∈ E ⟹ i ≤ j`, every applicable `O_i` keeps the ideal unmixed;
/// - the equal-weights property on 4-cycles whenever the criterion passes.
///
/// Instances whose polarization exceeds `limits` are skipped and counted.
pub fn cross_validate(config: &CampaignConfig, limits: &Limits) -> Result<CampaignSummary> {
    let mut s = CampaignSummary::default();
    for seed in instance_seeds(config) {
        let gw = campaign_instance(seed, config.h_max, config.w_max)?;
        match check_instance(&gw, seed, limits, &mut s) {
            Ok(()) => s.instances += 1,
            Err(Error::ResourceCap { .. }) => s.skipped += 1,
            Err(e) => s.fail(seed, format!("error: {e}")),
        }
    }
    Ok(s)
}

fn check_instance(gw: &WeightedVwcGraph, seed: u64, limits: &Limits, s: &mut CampaignSummary) -> Result<()> {
    let ideal = weighted_edge_ideal(gw.weighted());
    let criterion = unmixed_criterion_vwc(gw)?.verdict();
    let oracle = is_unmixed(&ideal, limits)?.verdict();
    let base_cm = cm_criterion_vwc(gw.graph())?.verdict();
    let reisner = if base_cm { Some(is_cm_reisner(&ideal, FieldSpec::rational(), limits)?.verdict()) } else { None };

    s.criterion_unmixed += criterion as usize;
    if criterion != oracle {
        s.unmixed_mismatches += 1;
        s.fail(seed, format!("criterion says unmixed = {criterion}, minimal primes say {oracle}"));
    }
    if let Some(cm) = reisner {
        s.cm_base += 1;
        if cm != criterion {
            s.cm_mismatches += 1;
            s.fail(seed, format!("criterion says {criterion} on a CM base, Reisner says CM = {cm}"));
        }
    }
    if criterion {
        s.four_cycle_checks += 1;
        if !four_cycle_weight_property(gw)?.verdict() {
            s.four_cycle_violations += 1;
            s.fail(seed, "unequal weights on a 4-cycle".into());
        }
    }
    if criterion && base_cm {
        let ordered = doublestar_relabeling(gw.graph(), gw.labeling())?.expect("CM base has an order");
        let gw = gw.relabeled(ordered)?;
        for i in 0..gw.h() {
            if gw.graph().degree(gw.labeling().y[i]) < 2 {
                continue;
            }
            s.o_i_checks += 1;
            let kept = o_i_operator(&gw, i + 1).and_then(|o| {
                let c = unmixed_criterion_vwc(&o)?.verdict();
                let u = is_unmixed(&weighted_edge_ideal(o.weighted()), limits)?.verdict();
                Ok(c && u)
            });
            if !matches!(kept, Ok(true)) {
                s.o_i_violations += 1;
                s.fail(seed, format!("O_{} does not keep the ideal unmixed: {kept:?}", i + 1));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_campaign() {
        let config = CampaignConfig { count: 20, h_max: 1, w_max: 3, seed: 1 };
        let s = cross_validate(&config, &Limits::default()).unwrap();
        assert!(s.clean(), "{s:?}");
        assert_eq!(s.instances, 20);
        assert_eq!(s.criterion_unmixed, 20);
    }

    #[test]
    fn deterministic() {
        let config = CampaignConfig { count: 15, h_max: 3, w_max: 2, seed: 5 };
        let l = Limits::default();
        assert_eq!(cross_validate(&config, &l).unwrap(), cross_validate(&config, &l).unwrap());
    }

    #[test]
    fn small_campaign_is_clean() {
        let config = CampaignConfig { count: 60, h_max: 3, w_max: 3, seed: 2024 };
        let s = cross_validate(&config, &Limits::default()).unwrap();
        assert!(s.clean(), "{s:?}");
        assert!(s.criterion_unmixed > 0 && s.criterion_unmixed < s.instances);
    }
}
