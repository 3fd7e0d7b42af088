//! Small worked examples for every public operation, through the public API.

use vwc_core::criteria::{
    bipartite_corollary_check, cm_criterion_vwc, cm_weighted_vwc, cross_validate, four_cycle_weight_property,
    unmixed_criterion_vwc, CampaignConfig,
};
use vwc_core::datasets::{self, Dataset};
use vwc_core::graph::{
    check_vwc_characterization, doublestar_relabeling, find_perfect_matching, is_very_well_covered,
    maximal_independent_sets, o_i_operator, random_weighted_vwc, star_labeling, EdgeWeighting, LabeledGraph,
    VertexWeightedOrientedGraph, VwcLabeling, WeightedGraph, WeightedVwcGraph,
};
use vwc_core::homology::{
    depth_via_hochster, is_cm_reisner, link, reduced_homology, serre_complex, serre_sk, stanley_reisner, FieldSpec,
    SimplicialComplex,
};
use vwc_core::ideal::{
    edge_ideal, height, is_unmixed, krull_dim, minimal_generators, minimal_primes, oriented_edge_ideal, polarize,
    weighted_edge_ideal, Monomial, MonomialIdeal,
};
use vwc_core::{Error, Limits};

fn graph(n: usize, edges: &[(usize, usize)]) -> LabeledGraph {
    LabeledGraph::new(n, edges.iter().copied()).unwrap()
}

fn mono(e: &[u32]) -> Monomial {
    Monomial::new(e.to_vec()).unwrap()
}

fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::new(n, gens.iter().map(|e| mono(e)).collect()).unwrap()
}

fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
    SimplicialComplex::new(n, facets.iter().map(|f| f.to_vec()).collect()).unwrap()
}

fn q() -> FieldSpec {
    FieldSpec::rational()
}

fn edge() -> LabeledGraph {
    graph(2, &[(0, 1)])
}

fn path4() -> LabeledGraph {
    graph(4, &[(0, 1), (1, 2), (2, 3)])
}

fn triangle() -> LabeledGraph {
    graph(3, &[(0, 1), (1, 2), (0, 2)])
}

fn c4() -> LabeledGraph {
    graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)])
}

/// Path y1 - x1 - x2 - y2 on vertices 0 - 1 - 2 - 3.
fn weighted_path(w_x1y1: u32, w_x1x2: u32, w_x2y2: u32) -> WeightedVwcGraph {
    let g = path4();
    let w: EdgeWeighting = [((0, 1), w_x1y1), ((1, 2), w_x1x2), ((2, 3), w_x2y2)].into_iter().collect();
    let l = star_labeling(&g).unwrap();
    WeightedVwcGraph::new(WeightedGraph::new(g, w).unwrap(), l).unwrap()
}

/// Labeled graph on pairs `x_i = 2i`, `y_i = 2i + 1`.
fn paired(h: usize, extra: &[(usize, usize)]) -> (LabeledGraph, VwcLabeling) {
    let mut edges: Vec<(usize, usize)> = (0..h).map(|i| (2 * i, 2 * i + 1)).collect();
    edges.extend_from_slice(extra);
    let g = graph(2 * h, &edges);
    let l = VwcLabeling::new(&g, (0..h).map(|i| 2 * i).collect(), (0..h).map(|i| 2 * i + 1).collect()).unwrap();
    (g, l)
}

mod graphs {
    use super::*;

    #[test]
    fn construction_rejects_bad_graphs() {
        assert!(matches!(LabeledGraph::new(2, [(0, 0)]), Err(Error::InvalidGraph(_))));
        assert!(matches!(LabeledGraph::new(2, [(0, 1), (1, 0)]), Err(Error::InvalidGraph(_))));
        assert!(matches!(LabeledGraph::new(3, [(0, 1)]), Err(Error::InvalidGraph(_))));
    }

    #[test]
    fn independent_sets() {
        assert_eq!(maximal_independent_sets(&edge()).unwrap(), vec![vec![0], vec![1]]);
        assert_eq!(maximal_independent_sets(&path4()).unwrap(), vec![vec![0, 2], vec![0, 3], vec![1, 3]]);
        assert_eq!(maximal_independent_sets(&triangle()).unwrap(), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn very_well_covered() {
        assert!(is_very_well_covered(&edge()).unwrap());
        assert!(is_very_well_covered(&path4()).unwrap());
        assert!(!is_very_well_covered(&triangle()).unwrap());
    }

    #[test]
    fn perfect_matchings() {
        assert_eq!(find_perfect_matching(&edge()).unwrap(), Some(vec![(0, 1)]));
        assert_eq!(find_perfect_matching(&path4()).unwrap(), Some(vec![(0, 1), (2, 3)]));
        let star = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(find_perfect_matching(&star).unwrap(), None);
    }

    #[test]
    fn star_labelings() {
        // both labelings of an edge have degree sum 1; the smaller Y wins
        let l = star_labeling(&edge()).unwrap();
        assert_eq!((l.x, l.y), (vec![1], vec![0]));
        let l = star_labeling(&path4()).unwrap();
        assert_eq!((l.x, l.y), (vec![1, 2], vec![0, 3]));
        let l = star_labeling(&c4()).unwrap();
        assert_eq!((l.x, l.y), (vec![1, 3], vec![0, 2]));
        assert_eq!(star_labeling(&triangle()), Err(Error::NotVeryWellCovered));
    }

    #[test]
    fn characterization() {
        let g = path4();
        assert!(check_vwc_characterization(&g, &star_labeling(&g).unwrap()).unwrap().verdict());

        // x1y2 and x1x2 together break clause (ii)
        let (g, l) = paired(2, &[(0, 3), (0, 2)]);
        let r = check_vwc_characterization(&g, &l).unwrap();
        assert!(!r.verdict());
        assert!(r.violations().iter().any(|v| v.clause == "(ii)" && v.indices == vec![1, 2]));

        // x1x2 and y2x3 without x1x3 break clause (i)
        let (g, l) = paired(3, &[(0, 2), (3, 4)]);
        let r = check_vwc_characterization(&g, &l).unwrap();
        assert!(r.violations().iter().any(|v| v.clause == "(i)" && v.indices == vec![1, 2, 3]));
    }

    #[test]
    fn double_star_orders() {
        // x2y1 forces pair 2 before pair 1
        let (g, l) = paired(2, &[(2, 1)]);
        let q = doublestar_relabeling(&g, &l).unwrap().unwrap();
        assert_eq!((q.x, q.y), (vec![2, 0], vec![3, 1]));

        let g = c4();
        assert_eq!(doublestar_relabeling(&g, &star_labeling(&g).unwrap()).unwrap(), None);

        let (g, l) = paired(3, &[]);
        assert_eq!(doublestar_relabeling(&g, &l).unwrap(), Some(l));
    }

    #[test]
    fn o_i_moves_edges_onto_x_i() {
        let (g, l) = paired(2, &[(2, 1)]);
        let w: EdgeWeighting = [((0, 1), 1), ((2, 3), 3), ((1, 2), 2)].into_iter().collect();
        let gw = WeightedVwcGraph::new(WeightedGraph::new(g, w).unwrap(), l).unwrap();
        let out = o_i_operator(&gw, 1).unwrap();
        let edges: Vec<_> = out.weighted().weighted_edges().collect();
        assert_eq!(edges, vec![(0, 1, 1), (0, 2, 2), (2, 3, 3)]);
        // nothing hangs off y2
        assert_eq!(o_i_operator(&gw, 2).unwrap(), gw);
    }

    #[test]
    fn random_generator() {
        for seed in 0..20 {
            let gw = random_weighted_vwc(1, 0.5, 3, seed).unwrap();
            assert_eq!(gw.graph().edges().len(), 1);
            let gw = random_weighted_vwc(3, 0.5, 3, seed).unwrap();
            assert!(check_vwc_characterization(gw.graph(), gw.labeling()).unwrap().verdict());
            assert_eq!(random_weighted_vwc(3, 0.5, 3, seed).unwrap(), gw);
        }
    }

    #[test]
    fn oriented_graph_validation() {
        assert!(VertexWeightedOrientedGraph::new(2, vec![(0, 1)], vec![1]).is_err());
        assert!(VertexWeightedOrientedGraph::new(2, vec![(0, 1)], vec![1, 0]).is_err());
        assert!(VertexWeightedOrientedGraph::new(2, vec![(0, 1), (1, 0)], vec![1, 1]).is_err());
    }
}

mod ideals {
    use super::*;

    #[test]
    fn minimal_generating_sets() {
        let m = |e: &[u32]| mono(e);
        assert_eq!(minimal_generators(vec![m(&[2]), m(&[3])], 1).unwrap().gens(), &[m(&[2])]);
        let got = minimal_generators(vec![m(&[1, 1, 0]), m(&[0, 1, 1]), m(&[1, 1, 1])], 3).unwrap();
        assert_eq!(got, ideal(3, &[&[1, 1, 0], &[0, 1, 1]]));
        let anti = ideal(4, &[&[1, 1, 0, 0], &[1, 0, 1, 0], &[0, 0, 1, 1]]);
        assert_eq!(minimal_generators(anti.gens().to_vec(), 4).unwrap(), anti);
    }

    #[test]
    fn edge_ideals() {
        assert_eq!(edge_ideal(&edge()), ideal(2, &[&[1, 1]]));
        assert_eq!(edge_ideal(&triangle()), ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]));
        let g = edge_ideal(&datasets::graph());
        assert_eq!(g.gens().len(), 25);
        assert!(g.gens().iter().all(|m| m.degree() == 2 && m.is_squarefree()));
    }

    #[test]
    fn weighted_edge_ideals() {
        let w: EdgeWeighting = [((0, 1), 2)].into_iter().collect();
        let gw = WeightedGraph::new(edge(), w).unwrap();
        assert_eq!(weighted_edge_ideal(&gw), ideal(2, &[&[2, 2]]));

        let x8x10 = |a: u32| {
            let mut e = vec![0; 11];
            e[7] = a;
            e[9] = a;
            mono(&e)
        };
        let i1 = Dataset::Gw1.ideal();
        assert_eq!(i1.gens().len(), 25);
        assert!(i1.gens().contains(&x8x10(2)));
        assert_eq!(i1.gens().iter().filter(|m| !m.is_squarefree()).count(), 1);

        let i2 = Dataset::Gw2.ideal();
        assert!(i2.gens().contains(&x8x10(1)));
        assert_eq!(i2.gens().iter().filter(|m| m.is_squarefree()).count(), 1);
        assert!(i2.gens().iter().all(|m| m.is_squarefree() || m.exponents().iter().all(|&e| e == 0 || e == 2)));
    }

    #[test]
    fn oriented_edge_ideals() {
        let d = VertexWeightedOrientedGraph::new(2, vec![(0, 1)], vec![1, 3]).unwrap();
        assert_eq!(oriented_edge_ideal(&d), ideal(2, &[&[1, 3]]));

        let gen = |pairs: &[(usize, u32)]| {
            let mut e = vec![0; 11];
            for &(v, a) in pairs {
                e[v - 1] = a;
            }
            mono(&e)
        };
        let d1 = Dataset::D1.ideal();
        assert!(d1.gens().contains(&gen(&[(1, 1), (11, 2)])));
        assert!(d1.gens().contains(&gen(&[(5, 1), (11, 1)])));
        assert_eq!(d1, Dataset::D1.displayed_ideal());
        let d2 = Dataset::D2.ideal();
        assert!(d2.gens().contains(&gen(&[(7, 2), (9, 1)])));
        assert!(d2.gens().contains(&gen(&[(1, 1), (7, 1)])));
        assert_eq!(d2, Dataset::D2.displayed_ideal());
    }

    #[test]
    fn polarizations() {
        // (x^2, xy) on variables x, y
        let pol = polarize(&ideal(2, &[&[2, 0], &[1, 1]]));
        assert_eq!(pol.nvars(), 3);
        let shown: Vec<String> = pol.ideal.gens().iter().map(|g| g.display_with(|v| pol.name(v))).collect();
        assert_eq!(shown, vec!["x1_1*x1_2", "x1_1*x2_1"]);

        let gw = weighted_path(2, 1, 3);
        let pol = polarize(&weighted_edge_ideal(gw.weighted()));
        assert_eq!(pol.nvars(), 10);
        let mut sizes: Vec<u64> = pol.ideal.gens().iter().map(Monomial::degree).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 4, 6]);
        let shown: Vec<String> = pol.ideal.gens().iter().map(|g| g.display_with(|v| pol.name(v))).collect();
        assert!(shown.contains(&"x2_1*x3_1".to_string()), "{shown:?}");
        assert!(shown.contains(&"x1_1*x1_2*x2_1*x2_2".to_string()), "{shown:?}");

        let sq = edge_ideal(&path4());
        let pol = polarize(&sq);
        assert_eq!(pol.nvars(), 4);
        assert_eq!(pol.ideal.gens(), sq.gens());
    }
}

mod primes {
    use super::*;

    fn sets(ideal: &MonomialIdeal) -> Vec<Vec<usize>> {
        minimal_primes(ideal).unwrap().primes
    }

    #[test]
    fn minimal_prime_lists() {
        assert_eq!(sets(&edge_ideal(&triangle())), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(sets(&edge_ideal(&path4())), vec![vec![0, 2], vec![1, 2], vec![1, 3]]);
        let d1 = minimal_primes(&polarize(&Dataset::D1.ideal()).ideal).unwrap();
        assert!(d1.heights().iter().all(|&h| h == 8));
        assert!(matches!(minimal_primes(&ideal(1, &[&[2]])), Err(Error::NotSquarefree)));
    }

    #[test]
    fn heights_and_dimensions() {
        assert_eq!(height(&ideal(2, &[&[2, 0], &[1, 1]])).unwrap(), 1);
        assert_eq!(height(&ideal(3, &[&[1, 2, 1]])).unwrap(), 1);
        assert_eq!(height(&edge_ideal(&datasets::graph())).unwrap(), 8);
        assert_eq!(krull_dim(&Dataset::D1.ideal()).unwrap(), 3);
        assert_eq!(krull_dim(&Dataset::D2.ideal()).unwrap(), 3);
        assert_eq!(krull_dim(&edge_ideal(&edge())).unwrap(), 1);
    }

    #[test]
    fn unmixedness() {
        let limits = Limits::default();
        let ok = weighted_path(2, 1, 3);
        assert!(is_unmixed(&weighted_edge_ideal(ok.weighted()), &limits).unwrap().verdict());
        let bad = weighted_path(1, 2, 1);
        let r = is_unmixed(&weighted_edge_ideal(bad.weighted()), &limits).unwrap();
        assert!(!r.verdict());
        let v = &r.violations()[0];
        assert_eq!(v.clause, "mixed-heights");
        assert_eq!(v.sets.iter().map(Vec::len).collect::<Vec<_>>(), vec![2, 3]);
        for d in [Dataset::Gw1, Dataset::Gw2] {
            assert!(is_unmixed(&d.ideal(), &limits).unwrap().verdict(), "{d}");
        }
    }

    #[test]
    fn caps() {
        let big = ideal(1, &[&[40]]);
        assert!(matches!(is_unmixed(&big, &Limits::default()), Err(Error::ResourceCap { .. })));
        assert!(is_unmixed(&big, &Limits::new(40)).unwrap().verdict());
    }
}

mod homology {
    use super::*;

    #[test]
    fn stanley_reisner_complexes() {
        let c = stanley_reisner(&edge_ideal(&triangle())).unwrap();
        assert_eq!(c.facets(), vec![vec![0], vec![1], vec![2]]);
        let c = stanley_reisner(&edge_ideal(&edge())).unwrap();
        assert_eq!(c.facets(), vec![vec![0], vec![1]]);
        // y1 = 0, x1 = 1, x2 = 2, y2 = 3
        let mut facets = stanley_reisner(&edge_ideal(&path4())).unwrap().facets();
        facets.sort();
        assert_eq!(facets, vec![vec![0, 2], vec![0, 3], vec![1, 3]]);
    }

    #[test]
    fn links() {
        let bowtie = complex(5, &[&[0, 1, 2], &[0, 3, 4]]);
        assert_eq!(link(&bowtie, &[]).unwrap(), bowtie);
        assert_eq!(link(&bowtie, &[0, 1, 2]).unwrap(), complex(5, &[&[]]));
        assert_eq!(link(&bowtie, &[0]).unwrap(), complex(5, &[&[1, 2], &[3, 4]]));
        assert!(matches!(link(&bowtie, &[1, 3]), Err(Error::NotAFace(_))));
    }

    #[test]
    fn reduced_homology_examples() {
        let limits = Limits::default();
        let tetra = complex(4, &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]);
        let h = reduced_homology(&tetra, q(), &limits).unwrap();
        assert_eq!(h.nonzero(), vec![(2, 1)]);
        let rp2 = complex(
            6,
            &[&[0, 1, 2], &[0, 2, 3], &[0, 3, 4], &[0, 4, 5], &[0, 1, 5], &[1, 2, 4], &[2, 3, 5], &[1, 3, 4], &[2, 4, 5], &[1, 3, 5]],
        );
        assert_eq!(reduced_homology(&rp2, q(), &limits).unwrap().rank(1), 0);
        assert_eq!(reduced_homology(&rp2, FieldSpec::new(2).unwrap(), &limits).unwrap().rank(1), 1);
        let points = complex(2, &[&[0], &[1]]);
        assert_eq!(reduced_homology(&points, q(), &limits).unwrap().nonzero(), vec![(0, 1)]);
    }

    #[test]
    fn cohen_macaulay_examples() {
        let limits = Limits::default();
        assert!(is_cm_reisner(&edge_ideal(&datasets::graph()), q(), &limits).unwrap().verdict());
        assert!(!is_cm_reisner(&Dataset::D1.ideal(), q(), &limits).unwrap().verdict());
        for w in 1..=4 {
            assert!(is_cm_reisner(&ideal(2, &[&[w, w]]), q(), &limits).unwrap().verdict());
        }
    }

    #[test]
    fn depth_examples() {
        let limits = Limits::default();
        assert_eq!(depth_via_hochster(&ideal(2, &[&[1, 1]]), q(), &limits).unwrap(), 1);
        assert_eq!(depth_via_hochster(&Dataset::D1.ideal(), q(), &limits).unwrap(), 2);
        assert_eq!(depth_via_hochster(&Dataset::D2.ideal(), q(), &limits).unwrap(), 2);
    }

    #[test]
    fn serre_examples() {
        let limits = Limits::default();
        assert!(serre_sk(&MonomialIdeal::zero(3), 2, q(), &limits).unwrap().verdict());
        let two_edges = complex(4, &[&[0, 1], &[2, 3]]);
        let r = serre_complex(&two_edges, 2, q(), &limits).unwrap();
        assert!(!r.verdict());
        assert_eq!(r.violations()[0].sets, vec![Vec::<String>::new()]);
        let bowtie = complex(5, &[&[0, 1, 2], &[0, 3, 4]]);
        let r = serre_complex(&bowtie, 2, q(), &limits).unwrap();
        assert!(!r.verdict());
        assert_eq!(r.violations()[0].sets, vec![vec!["0".to_string()]]);
        assert_eq!(r.violations()[0].degree, Some(0));
        assert!(matches!(serre_sk(&ideal(1, &[&[2]]), 2, q(), &limits), Err(Error::NotSquarefree)));
    }

    #[test]
    fn field_validation() {
        assert!(FieldSpec::new(0).is_ok());
        assert!(FieldSpec::new(7).is_ok());
        assert_eq!(FieldSpec::new(1), Err(Error::InvalidField(1)));
        assert_eq!(FieldSpec::new(9), Err(Error::InvalidField(9)));
    }
}

mod criteria {
    use super::*;

    /// C4 with x1 = 1, x2 = 3, y1 = 0, y2 = 2.
    fn k22(w11: u32, w22: u32, w12: u32, w21: u32) -> WeightedVwcGraph {
        let g = c4();
        let l = star_labeling(&g).unwrap();
        let w: EdgeWeighting = [((0, 1), w11), ((2, 3), w22), ((1, 2), w12), ((0, 3), w21)].into_iter().collect();
        WeightedVwcGraph::new(WeightedGraph::new(g, w).unwrap(), l).unwrap()
    }

    #[test]
    fn unmixed_criterion_examples() {
        assert!(unmixed_criterion_vwc(&weighted_path(2, 1, 3)).unwrap().verdict());

        let r = unmixed_criterion_vwc(&weighted_path(1, 2, 1)).unwrap();
        let v = &r.violations()[0];
        assert_eq!((v.clause.as_str(), v.weights.as_slice()), ("(i)", &[2, 1][..]));
        assert_eq!(v.vertices[..2], ["x1".to_string(), "x2".to_string()]);

        let r = unmixed_criterion_vwc(&k22(1, 1, 2, 1)).unwrap();
        assert!(!r.verdict());
        assert!(r.violations().iter().any(|v| v.clause == "(i)"
            && v.vertices == ["x1", "y2", "x1", "y1"]
            && v.weights == [2, 1]));
    }

    #[test]
    fn four_cycles() {
        assert!(four_cycle_weight_property(&k22(3, 3, 3, 3)).unwrap().verdict());
        assert!(four_cycle_weight_property(&weighted_path(2, 1, 3)).unwrap().verdict());
        assert!(matches!(four_cycle_weight_property(&k22(1, 1, 2, 1)), Err(Error::Precondition(_))));
    }

    #[test]
    fn cm_criterion_examples() {
        assert!(cm_criterion_vwc(&path4()).unwrap().verdict());
        let r = cm_criterion_vwc(&c4()).unwrap();
        assert!(!r.verdict());
        assert_eq!(r.violations()[0].clause, "(**)");
        assert_eq!(r.violations()[0].indices, vec![1, 2]);
        let (matching, _) = paired(4, &[]);
        assert!(cm_criterion_vwc(&matching).unwrap().verdict());
        assert_eq!(cm_criterion_vwc(&triangle()), Err(Error::NotVeryWellCovered));
    }

    #[test]
    fn weighted_cm_examples() {
        assert!(cm_weighted_vwc(&weighted_path(2, 1, 3)).unwrap().verdict());
        assert!(!cm_weighted_vwc(&weighted_path(1, 2, 1)).unwrap().verdict());
        let w: EdgeWeighting = [((0, 1), 5)].into_iter().collect();
        let single = WeightedGraph::new(edge(), w).unwrap();
        let gw = WeightedVwcGraph::new(single.clone(), star_labeling(&edge()).unwrap()).unwrap();
        assert!(cm_weighted_vwc(&gw).unwrap().verdict());
        assert!(matches!(cm_weighted_vwc(&k22(1, 1, 1, 1)), Err(Error::Precondition(_))));

        assert!(bipartite_corollary_check(&single).unwrap().verdict());
        assert!(bipartite_corollary_check(weighted_path(2, 1, 3).weighted()).unwrap().verdict());
        assert!(matches!(bipartite_corollary_check(k22(1, 1, 1, 1).weighted()), Err(Error::Precondition(_))));
        let tri = WeightedGraph::unit(triangle());
        assert_eq!(bipartite_corollary_check(&tri), Err(Error::NotBipartite));
    }

    #[test]
    fn weighted_criterion_agrees_with_homology() {
        let limits = Limits::default();
        for gw in [weighted_path(2, 1, 3), weighted_path(1, 2, 1), weighted_path(3, 3, 1)] {
            let c = cm_weighted_vwc(&gw).unwrap().verdict();
            let h = is_cm_reisner(&weighted_edge_ideal(gw.weighted()), q(), &limits).unwrap().verdict();
            assert_eq!(c, h);
        }
    }

    #[test]
    fn campaigns() {
        let limits = Limits::default();
        let one = CampaignConfig { count: 30, h_max: 1, w_max: 3, seed: 9 };
        let s = cross_validate(&one, &limits).unwrap();
        assert!(s.clean());
        assert_eq!(s.instances, 30);
        let cfg = CampaignConfig { count: 40, h_max: 4, w_max: 3, seed: 77 };
        assert_eq!(cross_validate(&cfg, &limits).unwrap(), cross_validate(&cfg, &limits).unwrap());
    }
}
