//! Null decomposition of forests and the closed tree formulas for the
//! independence and matching numbers.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{GraphError, NullError};
use crate::graph::{Graph, Subgraph, VertexSet};
use crate::linalg::{null_space_basis, Rational, RationalVector};

/// Support, core and N-vertices of a forest. The three sets partition the
/// vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeDecomposition {
    pub support: VertexSet,
    pub core: VertexSet,
    pub n_vertices: VertexSet,
    pub nullity: usize,
}

impl TreeDecomposition {
    /// Re-expresses the sets in the parent graph's indices.
    pub fn lift(&self, sub: &Subgraph) -> TreeDecomposition {
        TreeDecomposition {
            support: sub.lift_set(&self.support),
            core: sub.lift_set(&self.core),
            n_vertices: sub.lift_set(&self.n_vertices),
            nullity: self.nullity,
        }
    }

    pub fn alpha(&self) -> Result<usize, NullError> {
        Ok(self.support.len() + self.half_n()?)
    }

    pub fn nu(&self) -> Result<usize, NullError> {
        Ok(self.core.len() + self.half_n()?)
    }

    fn half_n(&self) -> Result<usize, NullError> {
        let n = self.n_vertices.len();
        if n % 2 == 1 {
            return Err(NullError::OddNSet(n));
        }
        Ok(n / 2)
    }
}

fn require_forest(t: &Graph) -> Result<(), GraphError> {
    if t.is_forest() {
        Ok(())
    } else {
        Err(GraphError::NotForest)
    }
}

/// Union of the supports of a family of vectors.
pub fn union_support(vectors: &[RationalVector]) -> VertexSet {
    vectors.iter().flat_map(|v| v.support()).collect()
}

/// Support of the adjacency null space of any graph, read off the
/// canonical basis.
pub fn graph_support(g: &Graph) -> VertexSet {
    union_support(&null_space_basis(&g.adjacency_matrix()))
}

/// Core and N-vertices from a support set: the core is the neighbourhood of
/// the support, N-vertices are everything outside support and core.
pub fn core_and_rest(g: &Graph, support: &VertexSet) -> (VertexSet, VertexSet) {
    let core = g.neighbourhood(support);
    let rest = (0..g.n())
        .filter(|v| !support.contains(v) && !core.contains(v))
        .collect();
    (core, rest)
}

pub fn tree_support(t: &Graph) -> Result<VertexSet, GraphError> {
    require_forest(t)?;
    Ok(graph_support(t))
}

pub fn tree_decomposition(t: &Graph) -> Result<TreeDecomposition, GraphError> {
    require_forest(t)?;
    let basis = null_space_basis(&t.adjacency_matrix());
    let support = union_support(&basis);
    let (core, n_vertices) = core_and_rest(t, &support);
    Ok(TreeDecomposition {
        support,
        core,
        n_vertices,
        nullity: basis.len(),
    })
}

pub fn tree_alpha(t: &Graph) -> Result<usize, NullError> {
    tree_decomposition(t)?.alpha()
}

pub fn tree_nu(t: &Graph) -> Result<usize, NullError> {
    tree_decomposition(t)?.nu()
}

/// A vector in the span of `basis` whose support is the union of the basis
/// supports.
///
/// Tries the combination with coefficients `1, t, t^2, ...` for
/// `t = 1, 2, 3, ...`. A coordinate in the union support cancels only at
/// roots of a nonzero polynomial in `t`, so the search terminates.
pub fn full_support_vector(basis: &[RationalVector]) -> Result<RationalVector, NullError> {
    full_support_vector_where(basis, |_| true)
}

/// Like [`full_support_vector`], additionally requiring `accept`. `accept`
/// must reject only the roots of finitely many nonzero polynomials in `t`
/// (e.g. "a fixed linear functional that is nonzero on the span does not
/// vanish") or the search will not terminate.
pub fn full_support_vector_where<F>(
    basis: &[RationalVector],
    accept: F,
) -> Result<RationalVector, NullError>
where
    F: Fn(&RationalVector) -> bool,
{
    let first = basis.first().ok_or(NullError::EmptyBasis)?;
    let dim = first.len();
    if let Some(bad) = basis.iter().find(|b| b.len() != dim) {
        return Err(NullError::DimensionMismatch {
            expected: dim,
            got: bad.len(),
        });
    }
    let target = union_support(basis);
    let mut t: i64 = 1;
    loop {
        let step = Rational::from_integer(t.into());
        let mut coeff = Rational::one();
        let mut y = RationalVector::zeros(dim);
        for b in basis {
            y = y.add_scaled(&coeff, b);
            coeff *= &step;
        }
        if target.iter().all(|&i| !y[i].is_zero()) && accept(&y) {
            return Ok(y);
        }
        t += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_edge_list;

    fn labels(g: &Graph, set: &VertexSet) -> Vec<String> {
        g.labels_of(set)
    }

    #[test]
    fn supports_of_small_trees() {
        let p3 = parse_edge_list("a b\nb c").unwrap();
        assert_eq!(labels(&p3, &tree_support(&p3).unwrap()), ["a", "c"]);
        assert!(tree_support(&Graph::path(2)).unwrap().is_empty());
        let star = parse_edge_list("s x\ns y\ns z").unwrap();
        assert_eq!(
            labels(&star, &tree_support(&star).unwrap()),
            ["x", "y", "z"]
        );
        assert_eq!(tree_support(&Graph::cycle(4)), Err(GraphError::NotForest));
    }

    #[test]
    fn decompositions_of_small_trees() {
        let p3 = parse_edge_list("a b\nb c").unwrap();
        let d = tree_decomposition(&p3).unwrap();
        assert_eq!(labels(&p3, &d.support), ["a", "c"]);
        assert_eq!(labels(&p3, &d.core), ["b"]);
        assert!(d.n_vertices.is_empty());
        assert_eq!(d.nullity, 1);

        let d = tree_decomposition(&Graph::path(4)).unwrap();
        assert!(d.support.is_empty() && d.core.is_empty());
        assert_eq!(d.n_vertices.len(), 4);
        assert_eq!(d.nullity, 0);

        let d = tree_decomposition(&Graph::path(1)).unwrap();
        assert_eq!(d.support, VertexSet::from([0]));
        assert!(d.core.is_empty() && d.n_vertices.is_empty());
    }

    #[test]
    fn tree_formulas() {
        let p3 = parse_edge_list("a b\nb c").unwrap();
        assert_eq!((tree_alpha(&p3).unwrap(), tree_nu(&p3).unwrap()), (2, 1));
        let p4 = Graph::path(4);
        assert_eq!((tree_alpha(&p4).unwrap(), tree_nu(&p4).unwrap()), (2, 2));
        let star = parse_edge_list("s x\ns y\ns z").unwrap();
        assert_eq!(
            (tree_alpha(&star).unwrap(), tree_nu(&star).unwrap()),
            (3, 1)
        );
        // forests distribute over components
        let forest = parse_edge_list("a b\nb c\nd e\nf").unwrap();
        assert_eq!(tree_alpha(&forest).unwrap(), 2 + 1 + 1);
        assert_eq!(tree_nu(&forest).unwrap(), 1 + 1);
    }

    #[test]
    fn odd_n_set_is_reported() {
        let bogus = TreeDecomposition {
            support: VertexSet::new(),
            core: VertexSet::new(),
            n_vertices: VertexSet::from([0, 1, 2]),
            nullity: 0,
        };
        assert_eq!(bogus.alpha(), Err(NullError::OddNSet(3)));
    }

    #[test]
    fn full_support_examples() {
        let single = vec![RationalVector::from_i64(&[1, 0, -1])];
        assert_eq!(full_support_vector(&single).unwrap(), single[0]);

        let two = vec![
            RationalVector::from_i64(&[1, 0, -1, 0]),
            RationalVector::from_i64(&[0, 1, 0, -1]),
        ];
        assert_eq!(
            full_support_vector(&two).unwrap(),
            RationalVector::from_i64(&[1, 1, -1, -1])
        );

        // t = 1 cancels the second coordinate, t = 2 does not
        let cancelling = vec![
            RationalVector::from_i64(&[1, -1]),
            RationalVector::from_i64(&[1, 1]),
        ];
        assert_eq!(
            full_support_vector(&cancelling).unwrap(),
            RationalVector::from_i64(&[3, 1])
        );

        assert_eq!(full_support_vector(&[]), Err(NullError::EmptyBasis));
        assert!(matches!(
            full_support_vector(&[
                RationalVector::from_i64(&[1]),
                RationalVector::from_i64(&[1, 2])
            ]),
            Err(NullError::DimensionMismatch { .. })
        ));
    }
}
