//! JSON file formats.
//!
//! - graph: `{"n", "edges": [[u,v],...], "edge_weights": [[u,v,w],...]?, "labeling": {"x","y"}?}`
//! - oriented graph: `{"n", "arcs": [[u,v],...], "vertex_weights": [...]?}`
//! - ideal: `{"nvars", "gens": [[e_1,...,e_n],...]}`
//! - complex: `{"nverts", "facets": [[...],...]}`
//!
//! Vertices and variables are 0-based.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::graph::{EdgeWeighting, LabeledGraph, VertexWeightedOrientedGraph, VwcLabeling, WeightedGraph};
use crate::homology::{stanley_reisner_ideal, SimplicialComplex};
use crate::ideal::{oriented_edge_ideal, weighted_edge_ideal, Monomial, MonomialIdeal};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_weights: Option<Vec<[u64; 3]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labeling: Option<VwcLabeling>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrientedFile {
    pub n: usize,
    pub arcs: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_weights: Option<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealFile {
    pub nvars: usize,
    pub gens: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub nverts: usize,
    pub facets: Vec<Vec<usize>>,
}

/// A validated input of any of the four kinds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Graph {
        graph: WeightedGraph,
        labeling: Option<VwcLabeling>,
        /// Whether the file carried `edge_weights`.
        weighted: bool,
    },
    Oriented(VertexWeightedOrientedGraph),
    Ideal(MonomialIdeal),
    Complex(SimplicialComplex),
}

impl Input {
    pub fn kind(&self) -> &'static str {
        match self {
            Input::Graph { .. } => "graph",
            Input::Oriented(_) => "oriented graph",
            Input::Ideal(_) => "ideal",
            Input::Complex(_) => "complex",
        }
    }

    /// The monomial ideal the input stands for: the (weighted) edge ideal,
    /// the oriented edge ideal, the ideal itself, or the Stanley-Reisner
    /// ideal of a complex.
    pub fn ideal(&self) -> Result<MonomialIdeal> {
        match self {
            Input::Graph { graph, .. } => Ok(weighted_edge_ideal(graph)),
            Input::Oriented(d) => Ok(oriented_edge_ideal(d)),
            Input::Ideal(i) => Ok(i.clone()),
            Input::Complex(c) => stanley_reisner_ideal(c),
        }
    }

    pub fn to_json(&self) -> Value {
        let v = match self {
            Input::Graph { graph, labeling, weighted } => serde_json::to_value(graph_file(graph, labeling.clone(), *weighted)),
            Input::Oriented(d) => serde_json::to_value(oriented_file(d)),
            Input::Ideal(i) => serde_json::to_value(ideal_file(i)),
            Input::Complex(c) => serde_json::to_value(ComplexFile { nverts: c.nverts(), facets: c.facets() }),
        };
        v.expect("plain data serializes")
    }
}

pub fn graph_file(g: &WeightedGraph, labeling: Option<VwcLabeling>, weighted: bool) -> GraphFile {
    GraphFile {
        n: g.graph().n(),
        edges: g.graph().edges().iter().map(|&(u, v)| [u, v]).collect(),
        edge_weights: weighted.then(|| g.weighted_edges().map(|(u, v, w)| [u as u64, v as u64, w as u64]).collect()),
        labeling,
    }
}

pub fn oriented_file(d: &VertexWeightedOrientedGraph) -> OrientedFile {
    OrientedFile {
        n: d.n(),
        arcs: d.arcs().iter().map(|&(u, v)| [u, v]).collect(),
        vertex_weights: Some(d.weights().to_vec()),
    }
}

pub fn ideal_file(i: &MonomialIdeal) -> IdealFile {
    IdealFile { nvars: i.nvars(), gens: i.gens().iter().map(|g| g.exponents().to_vec()).collect() }
}

fn json_error(e: serde_json::Error) -> Error {
    let (line, column) = (e.line(), e.column());
    let full = e.to_string();
    let message = full.strip_suffix(&format!(" at line {line} column {column}")).unwrap_or(&full).to_string();
    Error::Json { line, column, message }
}

fn decode<T: for<'de> Deserialize<'de>>(v: Value, kind: &str) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::InvalidInput(format!("{kind} file: {e}")))
}

/// Parses and validates any input file, choosing the kind by its keys.
pub fn parse_input(text: &str) -> Result<Input> {
    let value: Value = serde_json::from_str(text).map_err(json_error)?;
    let Some(obj) = value.as_object() else {
        return Err(Error::InvalidInput("top level must be a JSON object".into()));
    };
    if obj.contains_key("arcs") {
        load_oriented(decode(value, "oriented graph")?).map(Input::Oriented)
    } else if obj.contains_key("edges") {
        let file: GraphFile = decode(value, "graph")?;
        let weighted = file.edge_weights.is_some();
        let (graph, labeling) = load_graph(file)?;
        Ok(Input::Graph { graph, labeling, weighted })
    } else if obj.contains_key("gens") {
        load_ideal(decode(value, "ideal")?).map(Input::Ideal)
    } else if obj.contains_key("facets") {
        let file: ComplexFile = decode(value, "complex")?;
        SimplicialComplex::new(file.nverts, file.facets).map(Input::Complex)
    } else {
        Err(Error::InvalidInput(
            "cannot tell the input kind: expected one of the keys edges, arcs, gens, facets".into(),
        ))
    }
}

pub fn load_graph(file: GraphFile) -> Result<(WeightedGraph, Option<VwcLabeling>)> {
    let g = LabeledGraph::new(file.n, file.edges.iter().map(|e| (e[0], e[1])))?;
    let weights = match &file.edge_weights {
        None => EdgeWeighting::constant(&g, 1),
        Some(entries) => {
            let mut w = EdgeWeighting::new();
            for (idx, &[u, v, x]) in entries.iter().enumerate() {
                let bad = |why: &str| Error::InvalidWeighting(format!("edge_weights[{idx}] = [{u},{v},{x}]: {why}"));
                let (u, v) = (usize::try_from(u).unwrap_or(usize::MAX), usize::try_from(v).unwrap_or(usize::MAX));
                if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
                    return Err(bad("not an edge"));
                }
                if w.get(u, v).is_some() {
                    return Err(bad("edge weighted twice"));
                }
                let x = u32::try_from(x).map_err(|_| bad("weight too large"))?;
                w.set(u, v, x);
            }
            w
        }
    };
    let graph = WeightedGraph::new(g, weights)?;
    let labeling = match file.labeling {
        None => None,
        Some(l) => Some(VwcLabeling::new(graph.graph(), l.x, l.y)?),
    };
    Ok((graph, labeling))
}

pub fn load_oriented(file: OrientedFile) -> Result<VertexWeightedOrientedGraph> {
    let w = file.vertex_weights.unwrap_or_else(|| vec![1; file.n]);
    VertexWeightedOrientedGraph::new(file.n, file.arcs.iter().map(|a| (a[0], a[1])).collect(), w)
}

pub fn load_ideal(file: IdealFile) -> Result<MonomialIdeal> {
    let mut gens = Vec::with_capacity(file.gens.len());
    for (j, e) in file.gens.into_iter().enumerate() {
        if e.len() != file.nvars {
            return Err(Error::InvalidMonomial(format!("gens[{j}] has {} exponents, expected {}", e.len(), file.nvars)));
        }
        let m = Monomial::new(e).map_err(|err| Error::InvalidMonomial(format!("gens[{j}]: {err}")))?;
        if m.is_unit() {
            return Err(Error::InvalidMonomial(format!("gens[{j}] is the unit monomial")));
        }
        gens.push(m);
    }
    MonomialIdeal::new(file.nvars, gens)
}
