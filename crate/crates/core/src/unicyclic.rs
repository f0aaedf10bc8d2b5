//! Type I / Type II classification of unicyclic graphs and the explicit
//! null-space bases built from pendant trees.
//!
//! A unicyclic graph is Type I when some cycle vertex `v` lies outside the
//! support of its pendant tree `G{v}`; that vertex is the *witness*. The
//! Type I basis glues null vectors of `G{v}` and of `H = G - G{v}`, fixing at
//! most one vector with a correction term living on `G{v} - v`. The Type II
//! basis extends the null space of the forest `G - C` and, for cycles of
//! length divisible by four, adds two alternating-sign combinations of
//! normalized pendant-tree null vectors.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{GraphError, NullError};
use crate::graph::{CycleInfo, Graph, PendantForest, Subgraph, VertexSet};
use crate::linalg::{null_space_basis, nullity, Rational, RationalVector};
use crate::tree::{full_support_vector, full_support_vector_where, graph_support, union_support};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum UnicyclicType {
    TypeI,
    TypeII,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnicyclicClass {
    pub kind: UnicyclicType,
    /// Smallest-index cycle vertex outside the support of its pendant tree.
    pub witness: Option<usize>,
    pub cycle: CycleInfo,
}

/// How a basis vector was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Provenance {
    RrefCanonical,
    /// Null vector of the witness pendant tree, zero-padded.
    ExtendedPendant,
    /// Null vector of `G - G{v}` with vanishing sum at `u` and `w`, zero-padded.
    ExtendedComplement,
    /// The single vector combining the pivot complement vector with a
    /// full-support vector of `G{v} - v`.
    Corrected,
    /// Null vector of a forest component, zero-padded.
    ExtendedForest,
    /// One of the two alternating cycle vectors.
    CycleAlternating,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NullBasis {
    pub vectors: Vec<RationalVector>,
    pub provenance: Vec<Provenance>,
}

impl NullBasis {
    fn new() -> Self {
        NullBasis {
            vectors: Vec::new(),
            provenance: Vec::new(),
        }
    }

    fn push(&mut self, v: RationalVector, p: Provenance) {
        self.vectors.push(v);
        self.provenance.push(p);
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&RationalVector, Provenance)> {
        self.vectors.iter().zip(self.provenance.iter().copied())
    }

    pub fn support(&self) -> VertexSet {
        union_support(&self.vectors)
    }
}

/// Subgraphs around a Type I witness `v` with cycle neighbours `u`, `w`.
#[derive(Debug, Clone)]
pub struct TypeIParts {
    pub witness: usize,
    pub u: usize,
    pub w: usize,
    /// `G{v}`
    pub pendant: Subgraph,
    /// `G - G{v}`, a tree containing the rest of the cycle.
    pub complement: Subgraph,
    /// `G{v} - v`, a forest.
    pub pendant_minus_root: Subgraph,
}

impl TypeIParts {
    pub fn new(g: &Graph, cls: &UnicyclicClass) -> Result<Self, NullError> {
        let witness = match (cls.kind, cls.witness) {
            (UnicyclicType::TypeI, Some(v)) => v,
            _ => return Err(NullError::WrongType { expected: "Type I" }),
        };
        let pos = cls
            .cycle
            .position(witness)
            .ok_or(GraphError::NotUnicyclic)?;
        let (u, w) = cls.cycle.neighbours_at(pos);
        let forest = g.pendant_trees_of(&cls.cycle);
        let tree = forest.trees[&witness].clone();
        let pendant = g.induced(&tree)?;
        let complement = g.without(&tree);
        let mut rest = tree;
        rest.remove(&witness);
        let pendant_minus_root = g.induced(&rest)?;
        Ok(TypeIParts {
            witness,
            u,
            w,
            pendant,
            complement,
            pendant_minus_root,
        })
    }

    /// `x_u + x_w` for a vector on the complement.
    pub fn neighbour_sum(&self, x: &RationalVector) -> Rational {
        let ul = self.complement.local(self.u).expect("u lies in G - G{v}");
        let wl = self.complement.local(self.w).expect("w lies in G - G{v}");
        &x[ul] + &x[wl]
    }
}

fn require_unicyclic(g: &Graph) -> Result<CycleInfo, GraphError> {
    g.find_cycle()
}

/// Classifies a unicyclic graph by testing each cycle vertex against the
/// support of its pendant tree.
pub fn classify(g: &Graph) -> Result<UnicyclicClass, GraphError> {
    let cycle = require_unicyclic(g)?;
    let forest = g.pendant_trees_of(&cycle);
    Ok(classify_with(g, cycle, &forest))
}

pub(crate) fn classify_with(g: &Graph, cycle: CycleInfo, forest: &PendantForest) -> UnicyclicClass {
    // BTreeMap keys iterate in index order, so the first hit is the
    // smallest-index witness.
    let witness = forest.trees.iter().find_map(|(&v, tree)| {
        let sub = g.induced(tree).expect("pendant tree is a vertex subset");
        let root = sub.local(v).expect("root in its pendant tree");
        (!graph_support(&sub.graph).contains(&root)).then_some(v)
    });
    UnicyclicClass {
        kind: if witness.is_some() {
            UnicyclicType::TypeI
        } else {
            UnicyclicType::TypeII
        },
        witness,
        cycle,
    }
}

/// Zero-pads a vector indexed by `h_vertices` (in ascending order) to all
/// of `V(g)`.
pub fn extend_vector(
    x: &RationalVector,
    h_vertices: &VertexSet,
    g: &Graph,
) -> Result<RationalVector, NullError> {
    if x.len() != h_vertices.len() {
        return Err(NullError::DimensionMismatch {
            expected: h_vertices.len(),
            got: x.len(),
        });
    }
    if let Some(&bad) = h_vertices.iter().find(|&&v| v >= g.n()) {
        return Err(GraphError::UnknownVertex(bad).into());
    }
    let mut out = RationalVector::zeros(g.n());
    for (i, &v) in h_vertices.iter().enumerate() {
        out[v] = x[i].clone();
    }
    Ok(out)
}

fn extend(x: &RationalVector, sub: &Subgraph, n: usize) -> RationalVector {
    let mut out = RationalVector::zeros(n);
    for (i, &v) in sub.map.iter().enumerate() {
        out[v] = x[i].clone();
    }
    out
}

fn subgraph_nullity(sub: &Subgraph) -> usize {
    nullity(&sub.graph.adjacency_matrix())
}

fn cycle_nullity(k: usize) -> usize {
    if k.is_multiple_of(4) {
        2
    } else {
        0
    }
}

/// Nullity by the pendant-tree recursion, cross-checked against the rank of
/// `A(g)`.
pub fn unicyclic_nullity(g: &Graph) -> Result<usize, NullError> {
    let cls = classify(g)?;
    let recursion = recursion_nullity(g, &cls)?;
    let direct = nullity(&g.adjacency_matrix());
    if recursion != direct {
        return Err(NullError::RecursionMismatch { recursion, direct });
    }
    Ok(recursion)
}

/// Nullity from the recursion alone: `η(G{v}) + η(G - G{v})` for Type I and
/// `η(G - C) + η(C)` for Type II.
pub fn recursion_nullity(g: &Graph, cls: &UnicyclicClass) -> Result<usize, NullError> {
    Ok(match cls.kind {
        UnicyclicType::TypeI => {
            let parts = TypeIParts::new(g, cls)?;
            subgraph_nullity(&parts.pendant) + subgraph_nullity(&parts.complement)
        }
        UnicyclicType::TypeII => {
            let rest = g.without(&cls.cycle.vertex_set());
            subgraph_nullity(&rest) + cycle_nullity(cls.cycle.len())
        }
    })
}

/// Null basis of a Type I graph assembled from its witness pendant tree and
/// the complementary tree.
pub fn type1_null_basis(g: &Graph, cls: &UnicyclicClass) -> Result<NullBasis, NullError> {
    if !g.is_unicyclic() {
        return Err(GraphError::NotUnicyclic.into());
    }
    let parts = TypeIParts::new(g, cls)?;
    let n = g.n();
    let pendant_basis = null_space_basis(&parts.pendant.graph.adjacency_matrix());
    let complement_basis = null_space_basis(&parts.complement.graph.adjacency_matrix());
    let sums: Vec<Rational> = complement_basis
        .iter()
        .map(|x| parts.neighbour_sum(x))
        .collect();

    let mut basis = NullBasis::new();
    match sums.iter().position(|s| !s.is_zero()) {
        None => {
            for x in &complement_basis {
                basis.push(
                    extend(x, &parts.complement, n),
                    Provenance::ExtendedComplement,
                );
            }
        }
        Some(p) => {
            let pivot = &complement_basis[p];
            let pivot_sum = &sums[p];
            let corrected = corrected_vector(g, &parts, pivot, pivot_sum)?;
            basis.push(corrected, Provenance::Corrected);
            for (i, (x, s)) in complement_basis.iter().zip(&sums).enumerate() {
                if i == p {
                    continue;
                }
                let reduced = x.add_scaled(&(-(s / pivot_sum)), pivot);
                basis.push(
                    extend(&reduced, &parts.complement, n),
                    Provenance::ExtendedComplement,
                );
            }
        }
    }
    for x in &pendant_basis {
        basis.push(extend(x, &parts.pendant, n), Provenance::ExtendedPendant);
    }
    Ok(basis)
}

/// `c * pivot + y`, with `y` a full-support null vector of `G{v} - v` and
/// `c` chosen so the row of the witness vanishes.
fn corrected_vector(
    g: &Graph,
    parts: &TypeIParts,
    pivot: &RationalVector,
    pivot_sum: &Rational,
) -> Result<RationalVector, NullError> {
    let v = parts.witness;
    let forest = &parts.pendant_minus_root;
    let forest_basis = null_space_basis(&forest.graph.adjacency_matrix());
    let forest_support = union_support(&forest_basis);
    let touching: Vec<usize> = g
        .neighbors(v)
        .iter()
        .filter_map(|&t| forest.local(t))
        .filter(|t| forest_support.contains(t))
        .collect();
    if touching.is_empty() {
        return Err(NullError::EmptyNeighbourSupport(v));
    }
    let neighbour_total =
        |y: &RationalVector| -> Rational { touching.iter().map(|&t| y[t].clone()).sum() };
    // A vanishing total would make the corrected vector a pendant null vector
    // and break independence, so it is excluded along with cancellations.
    if forest_basis.iter().all(|b| neighbour_total(b).is_zero()) {
        return Err(NullError::DegenerateCorrection(v));
    }
    let y = full_support_vector_where(&forest_basis, |y| !neighbour_total(y).is_zero())?;
    let c = -neighbour_total(&y) / pivot_sum;
    let n = g.n();
    Ok(extend(pivot, &parts.complement, n)
        .scaled(&c)
        .add_scaled(&Rational::one(), &extend(&y, forest, n)))
}

/// Null basis of a Type II graph: the extended null space of `G - C`, plus
/// the two alternating cycle vectors when the cycle length is a multiple of
/// four.
pub fn type2_null_basis(g: &Graph, cls: &UnicyclicClass) -> Result<NullBasis, NullError> {
    if !g.is_unicyclic() {
        return Err(GraphError::NotUnicyclic.into());
    }
    if cls.kind != UnicyclicType::TypeII {
        return Err(NullError::WrongType {
            expected: "Type II",
        });
    }
    let n = g.n();
    let mut basis = forest_basis(g, &cls.cycle.vertex_set());
    if cls.cycle.len().is_multiple_of(4) {
        let forest = g.pendant_trees_of(&cls.cycle);
        let normalized = cls
            .cycle
            .vertices
            .iter()
            .map(|&v| normalized_pendant_vector(g, v, &forest.trees[&v]))
            .collect::<Result<Vec<_>, _>>()?;
        // z1 sums odd positions v1, v3, ...; z2 even positions v2, v4, ...;
        // the i-th term of each carries sign (-1)^i.
        for offset in 0..2 {
            let mut z = RationalVector::zeros(n);
            for (i, x) in normalized.iter().skip(offset).step_by(2).enumerate() {
                let sign = if i % 2 == 0 {
                    -Rational::one()
                } else {
                    Rational::one()
                };
                z = z.add_scaled(&sign, x);
            }
            basis.push(z, Provenance::CycleAlternating);
        }
    }
    Ok(basis)
}

/// Full-support null vector of `G{v}`, scaled to 1 at `v` and zero-padded.
fn normalized_pendant_vector(
    g: &Graph,
    v: usize,
    tree: &VertexSet,
) -> Result<RationalVector, NullError> {
    let sub = g.induced(tree)?;
    let local_basis = null_space_basis(&sub.graph.adjacency_matrix());
    if local_basis.is_empty() {
        return Err(NullError::NormalizationFailure(v));
    }
    let x = full_support_vector(&local_basis)?;
    let root = sub.local(v).expect("root in its pendant tree");
    if x[root].is_zero() {
        return Err(NullError::NormalizationFailure(v));
    }
    let scale = x[root].recip();
    Ok(extend(&x.scaled(&scale), &sub, g.n()))
}

/// Canonical bases of each component of `g - removed`, zero-padded.
fn forest_basis(g: &Graph, removed: &VertexSet) -> NullBasis {
    let rest = g.without(removed);
    let mut basis = NullBasis::new();
    for comp in rest.graph.components() {
        let sub = rest
            .graph
            .induced(&comp)
            .expect("component is a vertex subset");
        for x in null_space_basis(&sub.graph.adjacency_matrix()) {
            let in_rest = extend(&x, &sub, rest.graph.n());
            basis.push(extend(&in_rest, &rest, g.n()), Provenance::ExtendedForest);
        }
    }
    basis
}

/// Canonical RREF basis of `A(g)`.
pub fn rref_null_basis(g: &Graph) -> NullBasis {
    let mut basis = NullBasis::new();
    for x in null_space_basis(&g.adjacency_matrix()) {
        basis.push(x, Provenance::RrefCanonical);
    }
    basis
}

/// Structurally constructed basis: component-wise for forests, Type I or Type II
/// construction for unicyclic graphs.
pub fn structural_null_basis(g: &Graph) -> Result<NullBasis, NullError> {
    if g.is_forest() {
        return Ok(forest_basis(g, &VertexSet::new()));
    }
    if !g.is_unicyclic() {
        return Err(GraphError::UnsupportedGraphClass.into());
    }
    let cls = classify(g)?;
    match cls.kind {
        UnicyclicType::TypeI => type1_null_basis(g, &cls),
        UnicyclicType::TypeII => type2_null_basis(g, &cls),
    }
}
