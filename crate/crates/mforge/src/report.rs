//! JSON shapes of the reports printed by the CLI.

use mforge_core::characterizations::{
    AddVertexReport, AuditReport, SmallRegularReport, VidaReport,
};
use mforge_core::minor::MinorWitness;
use mforge_core::params::{Bramble, TreeDecomposition};
use mforge_core::search::{Filters, SearchOutcome, SearchSpec};
use mforge_core::{BlockNode, BlockTree, Graph, MembershipReport};
use serde::{Deserialize, Serialize};

use crate::graph6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipJson {
    pub graph: String,
    pub param: String,
    pub k: usize,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub failed_condition: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness_parts: Option<Vec<Vec<usize>>>,
    /// The witness minor itself, in graph6.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness_graph: Option<String>,
}

impl MembershipJson {
    pub fn new(g: &Graph, r: &MembershipReport) -> Self {
        MembershipJson {
            graph: graph6::encode(g),
            param: r.param.name().to_string(),
            k: r.k,
            verdict: r.verdict,
            failed_condition: r.failed.map(|c| c.tag().to_string()),
            witness_parts: r.witness.as_ref().map(|w| w.parts.parts.clone()),
            witness_graph: r.witness.as_ref().map(|w| graph6::encode(&w.graph)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorJson {
    pub graph: String,
    pub target: String,
    pub found: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub parts: Option<Vec<Vec<usize>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub graph: String,
    pub minor: String,
    pub parts: Vec<Vec<usize>>,
}

impl WitnessJson {
    pub fn new(host: &Graph, w: &MinorWitness) -> Self {
        WitnessJson {
            graph: graph6::encode(host),
            minor: graph6::encode(&w.graph),
            parts: w.parts.parts.clone(),
        }
    }
}

/// Bags as sorted vertex lists, `edges` as pairs of bag indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub width: usize,
    pub bags: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
}

impl From<&TreeDecomposition> for DecompositionJson {
    fn from(t: &TreeDecomposition) -> Self {
        let bags = t
            .bags
            .iter()
            .map(|b| {
                let mut b = b.clone();
                b.sort_unstable();
                b
            })
            .collect();
        DecompositionJson {
            width: t.width(),
            bags,
            edges: t.edges.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrambleJson {
    pub elements: Vec<Vec<usize>>,
}

impl From<&Bramble> for BrambleJson {
    fn from(b: &Bramble) -> Self {
        BrambleJson {
            elements: b
                .elements
                .iter()
                .map(|e| {
                    let mut e = e.clone();
                    e.sort_unstable();
                    e
                })
                .collect(),
        }
    }
}

impl From<BrambleJson> for Bramble {
    fn from(b: BrambleJson) -> Self {
        Bramble {
            elements: b.elements,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum BlockNodeJson {
    Block { vertices: Vec<usize> },
    Cut { vertex: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockTreeJson {
    pub nodes: Vec<BlockNodeJson>,
    pub edges: Vec<(usize, usize)>,
}

impl From<&BlockTree> for BlockTreeJson {
    fn from(t: &BlockTree) -> Self {
        BlockTreeJson {
            nodes: t
                .nodes
                .iter()
                .map(|x| match x {
                    BlockNode::Block(vs) => BlockNodeJson::Block {
                        vertices: vs.clone(),
                    },
                    BlockNode::CutVertex(c) => BlockNodeJson::Cut { vertex: *c },
                })
                .collect(),
            edges: t.edges.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltersJson {
    pub connected: bool,
    pub regular: Option<usize>,
    pub min_degree: Option<usize>,
}

impl From<&Filters> for FiltersJson {
    fn from(f: &Filters) -> Self {
        FiltersJson {
            connected: f.connected,
            regular: f.regular,
            min_degree: f.min_degree,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecJson {
    pub param: String,
    pub k: usize,
    pub max_order: usize,
    pub filters: FiltersJson,
}

impl From<&SearchSpec> for SpecJson {
    fn from(s: &SearchSpec) -> Self {
        SpecJson {
            param: s.f.name().to_string(),
            k: s.k,
            max_order: s.max_order,
            filters: (&s.filters).into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestJson {
    pub spec: SpecJson,
    pub count: usize,
    pub complete_up_to: usize,
    pub candidates: usize,
}

impl From<&SearchOutcome> for ManifestJson {
    fn from(o: &SearchOutcome) -> Self {
        ManifestJson {
            spec: (&o.spec).into(),
            count: o.obstructions.len(),
            complete_up_to: o.complete_up_to,
            candidates: o.candidates,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditJson {
    pub graph: String,
    pub k: usize,
    pub many_lows: bool,
    pub common_neighbour: bool,
    pub sparse_subgraph: bool,
    pub clique_neighbour: bool,
    pub all: bool,
}

impl AuditJson {
    pub fn new(g: &Graph, k: usize, r: &AuditReport) -> Self {
        AuditJson {
            graph: graph6::encode(g),
            k,
            many_lows: r.many_lows,
            common_neighbour: r.common_neighbour,
            sparse_subgraph: r.sparse_subgraph,
            clique_neighbour: r.clique_neighbour,
            all: r.all(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallRegularJson {
    pub graph: String,
    pub k: usize,
    pub n: usize,
    pub regular: bool,
    pub applies: bool,
    pub min_edge_triangles: Option<usize>,
    pub triangle_condition: bool,
    pub member: Option<bool>,
}

impl SmallRegularJson {
    pub fn new(g: &Graph, r: &SmallRegularReport) -> Self {
        SmallRegularJson {
            graph: graph6::encode(g),
            k: r.k,
            n: r.n,
            regular: r.regular,
            applies: r.applies,
            min_edge_triangles: r.min_edge_triangles,
            triangle_condition: r.triangle_condition,
            member: r.member,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AddVertexJson {
    pub graph: String,
    pub set: Vec<usize>,
    pub k: usize,
    pub extended_is_obstruction: bool,
    pub s_is_low_set: bool,
    pub agree: bool,
}

impl AddVertexJson {
    pub fn new(g: &Graph, set: &[usize], k: usize, r: &AddVertexReport) -> Self {
        AddVertexJson {
            graph: graph6::encode(g),
            set: set.to_vec(),
            k,
            extended_is_obstruction: r.extended_is_obstruction,
            s_is_low_set: r.s_is_low_set,
            agree: r.agree(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VidaJson {
    pub graph: String,
    pub k: usize,
    pub p: usize,
    pub few_lows: bool,
    pub highs_independent: bool,
    pub highs_dominate_lows: bool,
    pub holds: bool,
}

impl VidaJson {
    pub fn new(g: &Graph, r: &VidaReport) -> Self {
        VidaJson {
            graph: graph6::encode(g),
            k: r.k,
            p: r.p,
            few_lows: r.few_lows,
            highs_independent: r.highs_independent,
            highs_dominate_lows: r.highs_dominate_lows,
            holds: r.holds(),
        }
    }
}
