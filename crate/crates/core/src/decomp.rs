//! Null decomposition (support, core, N-vertices) of forests and unicyclic
//! graphs, the six-case structural computation, and the closed formulas for
//! the independence and matching numbers.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{GraphError, NullError};
use crate::graph::{CycleInfo, Graph, VertexSet};
use crate::linalg::null_space_basis;
use crate::tree::{core_and_rest, tree_decomposition, union_support, TreeDecomposition};
use crate::unicyclic::{classify, TypeIParts, UnicyclicClass, UnicyclicType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Case {
    /// Type I, `u, w` outside `Supp(G - G{v})`.
    #[serde(rename = "TI-1")]
    TypeI1,
    /// Type I, all neighbour sums vanish, `v` in `Core(G{v})`.
    #[serde(rename = "TI-2")]
    TypeI2,
    /// Type I, all neighbour sums vanish, `v` an N-vertex of `G{v}`.
    #[serde(rename = "TI-3")]
    TypeI3,
    /// Type I, some null vector of `G - G{v}` has `x_u + x_w != 0`.
    #[serde(rename = "TI-4")]
    TypeI4,
    #[serde(rename = "TII-non4k")]
    TypeIINon4k,
    #[serde(rename = "TII-4k")]
    TypeII4k,
    Forest,
}

impl Case {
    pub const ALL: [Case; 7] = [
        Case::TypeI1,
        Case::TypeI2,
        Case::TypeI3,
        Case::TypeI4,
        Case::TypeIINon4k,
        Case::TypeII4k,
        Case::Forest,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Case::TypeI1 => "TI-1",
            Case::TypeI2 => "TI-2",
            Case::TypeI3 => "TI-3",
            Case::TypeI4 => "TI-4",
            Case::TypeIINon4k => "TII-non4k",
            Case::TypeII4k => "TII-4k",
            Case::Forest => "Forest",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum GraphClass {
    Forest,
    Unicyclic(UnicyclicClass),
}

impl GraphClass {
    pub fn tag(&self) -> &'static str {
        match self {
            GraphClass::Forest => "forest",
            GraphClass::Unicyclic(c) if c.kind == UnicyclicType::TypeI => "type1",
            GraphClass::Unicyclic(_) => "type2",
        }
    }

    pub fn cycle(&self) -> Option<&CycleInfo> {
        match self {
            GraphClass::Forest => None,
            GraphClass::Unicyclic(c) => Some(&c.cycle),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Decomposition {
    pub support: VertexSet,
    pub core: VertexSet,
    pub n_vertices: VertexSet,
    pub s_graph_vertices: VertexSet,
    pub class: GraphClass,
    pub case: Case,
}

impl Decomposition {
    fn new(
        support: VertexSet,
        core: VertexSet,
        n_vertices: VertexSet,
        class: GraphClass,
        case: Case,
    ) -> Self {
        let s_graph_vertices = support.union(&core).copied().collect();
        Decomposition {
            support,
            core,
            n_vertices,
            s_graph_vertices,
            class,
            case,
        }
    }

    /// Set-level equality, ignoring how the decomposition was obtained.
    pub fn same_sets(&self, other: &Decomposition) -> bool {
        self.support == other.support
            && self.core == other.core
            && self.n_vertices == other.n_vertices
    }

    pub fn support_core_overlap(&self) -> VertexSet {
        self.support.intersection(&self.core).copied().collect()
    }

    pub fn cycle(&self) -> Option<&CycleInfo> {
        self.class.cycle()
    }

    /// Independence number by the closed formula.
    ///
    /// Forests: `|Supp| + |N|/2`. Unicyclic: `|Supp| + floor(|N|/2)` when the
    /// cycle lies inside the N-vertices, otherwise
    /// `|Supp| + ceil((|N| - |Supp ∩ Core|)/2)`.
    pub fn alpha(&self) -> Result<usize, NullError> {
        let s = self.support.len() as i64;
        let n = self.n_vertices.len() as i64;
        let value = match self.cycle() {
            None => s + even_half(n)?,
            Some(c) if c.vertices.iter().all(|v| self.n_vertices.contains(v)) => {
                s + n.div_euclid(2)
            }
            Some(_) => {
                let k = self.support_core_overlap().len() as i64;
                s + ceil_half(n - k)
            }
        };
        Ok(value as usize)
    }

    /// Matching number: `|Core| + floor((|N| - |Supp ∩ Core|)/2)` (for forests
    /// the overlap is empty and `|N|` even).
    pub fn nu(&self) -> Result<usize, NullError> {
        let c = self.core.len() as i64;
        let n = self.n_vertices.len() as i64;
        let value = match self.cycle() {
            None => c + even_half(n)?,
            Some(_) => {
                let k = self.support_core_overlap().len() as i64;
                c + (n - k).div_euclid(2)
            }
        };
        Ok(value as usize)
    }
}

fn even_half(n: i64) -> Result<i64, NullError> {
    if n % 2 != 0 {
        return Err(NullError::OddNSet(n as usize));
    }
    Ok(n / 2)
}

fn ceil_half(x: i64) -> i64 {
    -(-x).div_euclid(2)
}

/// Which of the six structural cases a unicyclic graph falls in.
pub fn structural_case(g: &Graph, cls: &UnicyclicClass) -> Result<Case, NullError> {
    match cls.kind {
        UnicyclicType::TypeII if cls.cycle.len().is_multiple_of(4) => Ok(Case::TypeII4k),
        UnicyclicType::TypeII => Ok(Case::TypeIINon4k),
        UnicyclicType::TypeI => {
            let parts = TypeIParts::new(g, cls)?;
            Ok(type1_case(&parts)?.0)
        }
    }
}

/// Case selection for Type I, returning the pendant tree decomposition that
/// the TI-2/TI-3 split needed.
fn type1_case(parts: &TypeIParts) -> Result<(Case, TreeDecomposition), NullError> {
    let basis = null_space_basis(&parts.complement.graph.adjacency_matrix());
    let pendant = tree_decomposition(&parts.pendant.graph)?.lift(&parts.pendant);
    if basis.iter().any(|x| !parts.neighbour_sum(x).is_zero()) {
        return Ok((Case::TypeI4, pendant));
    }
    let support = parts.complement.lift_set(&union_support(&basis));
    if !support.contains(&parts.u) && !support.contains(&parts.w) {
        return Ok((Case::TypeI1, pendant));
    }
    let v = parts.witness;
    if pendant.core.contains(&v) {
        Ok((Case::TypeI2, pendant))
    } else if pendant.n_vertices.contains(&v) {
        Ok((Case::TypeI3, pendant))
    } else {
        Err(NullError::CaseContradiction)
    }
}

/// Decomposition read directly off the canonical null-space basis.
pub fn decomposition_from_basis(g: &Graph) -> Result<Decomposition, NullError> {
    let (class, case) = if g.is_forest() {
        (GraphClass::Forest, Case::Forest)
    } else if g.is_unicyclic() {
        let cls = classify(g)?;
        let case = structural_case(g, &cls)?;
        (GraphClass::Unicyclic(cls), case)
    } else {
        return Err(GraphError::UnsupportedGraphClass.into());
    };
    let support = union_support(&null_space_basis(&g.adjacency_matrix()));
    let (core, n_vertices) = core_and_rest(g, &support);
    Ok(Decomposition::new(support, core, n_vertices, class, case))
}

fn union(sets: &[&VertexSet]) -> VertexSet {
    sets.iter().flat_map(|s| s.iter().copied()).collect()
}

/// Decomposition assembled from pendant trees and forests according to the
/// structural case of a unicyclic graph.
pub fn structural_decomposition(g: &Graph) -> Result<Decomposition, NullError> {
    let cls = classify(g)?;
    let (support, core, n_vertices, case) = match cls.kind {
        UnicyclicType::TypeI => {
            let parts = TypeIParts::new(g, &cls)?;
            let (case, pendant) = type1_case(&parts)?;
            let comp = tree_decomposition(&parts.complement.graph)?.lift(&parts.complement);
            let v = parts.witness;
            match case {
                Case::TypeI1 | Case::TypeI2 => (
                    union(&[&pendant.support, &comp.support]),
                    union(&[&pendant.core, &comp.core]),
                    union(&[&pendant.n_vertices, &comp.n_vertices]),
                    case,
                ),
                Case::TypeI3 => {
                    let mut core = union(&[&pendant.core, &comp.core]);
                    core.insert(v);
                    let mut n_vertices = union(&[&pendant.n_vertices, &comp.n_vertices]);
                    n_vertices.remove(&v);
                    (
                        union(&[&pendant.support, &comp.support]),
                        core,
                        n_vertices,
                        case,
                    )
                }
                Case::TypeI4 => {
                    let rest = tree_decomposition(&parts.pendant_minus_root.graph)?
                        .lift(&parts.pendant_minus_root);
                    let mut core = union(&[&rest.core, &comp.core]);
                    core.insert(v);
                    (
                        union(&[&rest.support, &comp.support]),
                        core,
                        union(&[&rest.n_vertices, &comp.n_vertices]),
                        case,
                    )
                }
                _ => return Err(NullError::CaseContradiction),
            }
        }
        UnicyclicType::TypeII if cls.cycle.len() % 4 != 0 => {
            let cycle = cls.cycle.vertex_set();
            let rest = g.without(&cycle);
            let d = tree_decomposition(&rest.graph)?.lift(&rest);
            (
                d.support,
                d.core,
                union(&[&cycle, &d.n_vertices]),
                Case::TypeIINon4k,
            )
        }
        UnicyclicType::TypeII => {
            let forest = g.pendant_trees_of(&cls.cycle);
            let mut support = VertexSet::new();
            let mut core = cls.cycle.vertex_set();
            let mut n_vertices = VertexSet::new();
            for tree in forest.trees.values() {
                let sub = g.induced(tree)?;
                let d = tree_decomposition(&sub.graph)?.lift(&sub);
                support.extend(d.support);
                core.extend(d.core);
                n_vertices.extend(d.n_vertices);
            }
            (support, core, n_vertices, Case::TypeII4k)
        }
    };
    Ok(Decomposition::new(
        support,
        core,
        n_vertices,
        GraphClass::Unicyclic(cls),
        case,
    ))
}

/// Induced subgraph on the support and core.
pub fn s_graph(g: &Graph, d: &Decomposition) -> Graph {
    g.induced_subgraph(&d.s_graph_vertices)
        .expect("decomposition sets are vertex subsets")
}

/// Induced subgraph on the N-vertices.
pub fn n_graph(g: &Graph, d: &Decomposition) -> Graph {
    g.induced_subgraph(&d.n_vertices)
        .expect("decomposition sets are vertex subsets")
}

pub fn alpha(g: &Graph) -> Result<usize, NullError> {
    decomposition_from_basis(g)?.alpha()
}

pub fn nu(g: &Graph) -> Result<usize, NullError> {
    decomposition_from_basis(g)?.nu()
}

/// Machine-readable summary of one analyzed graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub m: usize,
    pub class: String,
    pub case: Case,
    /// Cycle labels in canonical traversal order; empty for forests.
    pub cycle: Vec<String>,
    pub nullity: usize,
    pub support: Vec<String>,
    pub core: Vec<String>,
    pub n_vertices: Vec<String>,
    pub alpha: usize,
    pub nu: usize,
    pub checks: BTreeMap<String, bool>,
}

impl AnalysisReport {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.values().all(|&ok| ok)
    }
}

pub fn analyze(g: &Graph) -> Result<AnalysisReport, NullError> {
    let d = decomposition_from_basis(g)?;
    let nullity = null_space_basis(&g.adjacency_matrix()).len();
    Ok(AnalysisReport {
        n: g.n(),
        m: g.edge_count(),
        class: d.class.tag().to_string(),
        case: d.case,
        cycle: d
            .cycle()
            .map(|c| c.vertices.iter().map(|&v| g.label(v).to_string()).collect())
            .unwrap_or_default(),
        nullity,
        support: g.labels_of(&d.support),
        core: g.labels_of(&d.core),
        n_vertices: g.labels_of(&d.n_vertices),
        alpha: d.alpha()?,
        nu: d.nu()?,
        checks: BTreeMap::new(),
    })
}
