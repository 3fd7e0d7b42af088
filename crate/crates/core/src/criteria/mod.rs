//! Combinatorial criteria for unmixedness and Cohen-Macaulayness of weighted
//! very well-covered graphs, and the harness that checks them against the
//! algebraic oracles.

mod campaign;

use crate::error::{Error, Result};
use crate::graph::{
    check_vwc_characterization, cross_edge_cycle, doublestar_relabeling, star_labeling, LabeledGraph, Side,
    VwcLabeling, WeightedGraph, WeightedVwcGraph,
};
use crate::report::{CriterionReport, Violation};

pub use campaign::{campaign_instance, cross_validate, instance_seeds, CampaignConfig, CampaignSummary};

fn name(side: Side, i: usize) -> String {
    VwcLabeling::name(side, i)
}

fn require_vwc(gw: &WeightedVwcGraph) -> Result<()> {
    if check_vwc_characterization(gw.graph(), gw.labeling())?.verdict() {
        Ok(())
    } else {
        Err(Error::NotVeryWellCovered)
    }
}

fn inequality(
    clause: &str,
    indices: &[usize],
    (lhs, lw): ((Side, usize, Side, usize), u32),
    (rhs, rw): ((Side, usize, Side, usize), u32),
) -> Violation {
    let edge = |(a, i, b, j): (Side, usize, Side, usize)| format!("{}{}", name(a, i), name(b, j));
    Violation::new(
        clause,
        format!("w({}) = {lw} > w({}) = {rw}", edge(lhs), edge(rhs)),
    )
    .with_indices(indices.iter().map(|i| i + 1))
    .with_vertices([name(lhs.0, lhs.1), name(lhs.2, lhs.3), name(rhs.0, rhs.1), name(rhs.2, rhs.3)])
    .with_weights([lw, rw])
}

/// Unmixedness of `I(G_w)` for a very well-covered `G` with a (*)-labeling:
///
/// (i) `x_i z_j ∈ E` ⟹ `w(x_i z_j) ≤ w(x_i y_i)` and `w(x_i z_j) ≤ w(x_j y_j)`
/// for `i ≠ j`, `z_j ∈ {x_j, y_j}`;
///
/// (ii) `z_i x_j, y_j x_k ∈ E` ⟹ `w(z_i x_k) ≤ w(z_i x_j)` and
/// `w(z_i x_k) ≤ w(y_j x_k)`, for distinct `i, j, k` with `z_i ∈ {x_i, y_i}`,
/// and for `i = k ≠ j` with `z_i = y_i`.
///
/// Every failed inequality is listed. A missing edge `z_i x_k` in (ii) is
/// reported as a structural violation.
pub fn unmixed_criterion_vwc(gw: &WeightedVwcGraph) -> Result<CriterionReport> {
    require_vwc(gw)?;
    let h = gw.h();
    let mut violations = Vec::new();
    for i in 0..h {
        let wii = gw.w((Side::X, i), (Side::Y, i)).expect("matching edge");
        for j in (0..h).filter(|&j| j != i) {
            let wjj = gw.w((Side::X, j), (Side::Y, j)).expect("matching edge");
            for zs in [Side::X, Side::Y] {
                let Some(a) = gw.w((Side::X, i), (zs, j)) else { continue };
                let e = (Side::X, i, zs, j);
                if a > wii {
                    violations.push(inequality("(i)", &[i, j], (e, a), ((Side::X, i, Side::Y, i), wii)));
                }
                if a > wjj {
                    violations.push(inequality("(i)", &[i, j], (e, a), ((Side::X, j, Side::Y, j), wjj)));
                }
            }
        }
    }
    for i in 0..h {
        for zs in [Side::X, Side::Y] {
            for j in (0..h).filter(|&j| j != i) {
                let Some(e) = gw.w((zs, i), (Side::X, j)) else { continue };
                for k in 0..h {
                    let admissible = (k != i && k != j) || (k == i && zs == Side::Y);
                    if !admissible {
                        continue;
                    }
                    let Some(f) = gw.w((Side::Y, j), (Side::X, k)) else { continue };
                    let idx = [i, j, k];
                    let Some(d) = gw.w((zs, i), (Side::X, k)) else {
                        violations.push(
                            Violation::new(
                                "structural",
                                format!(
                                    "{}{} and {}{} are edges but {}{} is not",
                                    name(zs, i),
                                    name(Side::X, j),
                                    name(Side::Y, j),
                                    name(Side::X, k),
                                    name(zs, i),
                                    name(Side::X, k)
                                ),
                            )
                            .with_indices(idx.iter().map(|t| t + 1))
                            .with_vertices([name(zs, i), name(Side::X, j), name(Side::Y, j), name(Side::X, k)]),
                        );
                        continue;
                    };
                    let lhs = (zs, i, Side::X, k);
                    if d > e {
                        violations.push(inequality("(ii)", &idx, (lhs, d), ((zs, i, Side::X, j), e)));
                    }
                    if d > f {
                        violations.push(inequality("(ii)", &idx, (lhs, d), ((Side::Y, j, Side::X, k), f)));
                    }
                }
            }
        }
    }
    Ok(CriterionReport::from_violations(violations))
}

/// For unmixed `I(G_w)`: whenever `x_i y_j` and `x_j y_i` are both edges, the
/// four weights `w(x_i y_i), w(x_j y_j), w(x_i y_j), w(x_j y_i)` agree.
/// A violation here means the unmixedness criterion itself is wrong.
pub fn four_cycle_weight_property(gw: &WeightedVwcGraph) -> Result<CriterionReport> {
    if !unmixed_criterion_vwc(gw)?.verdict() {
        return Err(Error::Precondition("the unmixedness criterion fails for this weighting".into()));
    }
    let h = gw.h();
    let mut violations = Vec::new();
    for i in 0..h {
        for j in i + 1..h {
            let (Some(a), Some(b)) = (gw.w((Side::X, i), (Side::Y, j)), gw.w((Side::X, j), (Side::Y, i))) else {
                continue;
            };
            let ws = [
                gw.w((Side::X, i), (Side::Y, i)).expect("matching edge"),
                gw.w((Side::X, j), (Side::Y, j)).expect("matching edge"),
                a,
                b,
            ];
            if ws.iter().any(|&w| w != ws[0]) {
                violations.push(
                    Violation::new("four-cycle", format!("weights {ws:?} on the 4-cycle x{0}y{0}, x{1}y{1}, x{0}y{1}, x{1}y{0} differ", i + 1, j + 1))
                        .with_indices([i + 1, j + 1])
                        .with_weights(ws),
                );
            }
        }
    }
    Ok(CriterionReport::from_violations(violations))
}

/// Cohen-Macaulayness of a very well-covered graph: a reordering of the
/// pairs with `x_i y_j ∈ E ⟹ i ≤ j` must exist, and the structural
/// conditions must hold under it. A missing order is reported with a cycle
/// of pair indices in the cross-edge relation.
pub fn cm_criterion_vwc(g: &LabeledGraph) -> Result<CriterionReport> {
    let l = star_labeling(g)?;
    let Some(ordered) = doublestar_relabeling(g, &l)? else {
        let cycle = cross_edge_cycle(g, &l).expect("no order implies a cycle");
        let pairs: Vec<String> = cycle
            .iter()
            .zip(cycle.iter().cycle().skip(1))
            .map(|(&a, &b)| format!("{}{}", name(Side::X, a), name(Side::Y, b)))
            .collect();
        let v = Violation::new(
            "(**)",
            format!("cross edges {} force a cyclic order on the pairs", pairs.join(", ")),
        )
        .with_indices(cycle.iter().map(|i| i + 1))
        .with_vertices(cycle.iter().flat_map(|&i| [g_name(&l, Side::X, i), g_name(&l, Side::Y, i)]));
        return Ok(CriterionReport::from_violations(vec![v]));
    };
    check_vwc_characterization(g, &ordered)
}

/// `x3=v5`-style name tying a labeled vertex to its graph index.
fn g_name(l: &VwcLabeling, side: Side, i: usize) -> String {
    format!("{}=v{}", name(side, i), l.vertex(side, i))
}

/// Cohen-Macaulayness of `S/I(G_w)` when the base graph is Cohen-Macaulay
/// and very well-covered: it coincides with unmixedness, so the verdict and
/// witnesses are those of [`unmixed_criterion_vwc`].
pub fn cm_weighted_vwc(gw: &WeightedVwcGraph) -> Result<CriterionReport> {
    let base = cm_criterion_vwc(gw.graph())?;
    if !base.verdict() {
        return Err(Error::Precondition(
            "base graph is not Cohen-Macaulay (see cm_criterion_vwc); the weighted criterion does not apply".into(),
        ));
    }
    unmixed_criterion_vwc(gw)
}

/// The weighted Cohen-Macaulay criterion for a Cohen-Macaulay bipartite base
/// graph, with the (*)-labeling derived from the graph.
pub fn bipartite_corollary_check(gw: &WeightedGraph) -> Result<CriterionReport> {
    if gw.graph().bipartition().is_none() {
        return Err(Error::NotBipartite);
    }
    let labeling = match star_labeling(gw.graph()) {
        Ok(l) => l,
        Err(Error::NotVeryWellCovered) => {
            return Err(Error::Precondition(
                "bipartite graph is not unmixed, hence not Cohen-Macaulay".into(),
            ))
        }
        Err(e) => return Err(e),
    };
    cm_weighted_vwc(&WeightedVwcGraph::new(gw.clone(), labeling)?)
}
