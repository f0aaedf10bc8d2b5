//! Simple undirected graphs with dense indices, the edge-list codec, and the
//! structural queries needed for unicyclic graphs (unique cycle, pendant
//! trees, induced subgraphs).

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{GraphError, ParseError};
use crate::linalg::{Rational, RationalMatrix};

/// Set of dense vertex indices. Ordered so that every derived output is
/// deterministic.
pub type VertexSet = BTreeSet<usize>;

/// Labeled simple undirected graph.
///
/// Index `i` corresponds to `labels[i]`, and labels are kept in ascending
/// lexicographic order. Adjacency lists are sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    labels: Vec<String>,
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

/// The unique cycle of a unicyclic graph, in traversal order.
///
/// `vertices[0]` is the smallest cycle index and `vertices[1]` its smaller
/// cycle neighbour.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycleInfo {
    pub vertices: Vec<usize>,
}

impl CycleInfo {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    /// The two cycle neighbours of the vertex at position `pos`, as
    /// (predecessor, successor).
    pub fn neighbours_at(&self, pos: usize) -> (usize, usize) {
        let k = self.vertices.len();
        (
            self.vertices[(pos + k - 1) % k],
            self.vertices[(pos + 1) % k],
        )
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }
}

/// Pendant tree vertex sets, keyed by their cycle vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PendantForest {
    pub trees: BTreeMap<usize, VertexSet>,
}

impl PendantForest {
    pub fn tree(&self, v: usize) -> Option<&VertexSet> {
        self.trees.get(&v)
    }
}

/// An induced subgraph together with the map from its indices back to the
/// parent graph. Because labels are sorted, `map` is increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    pub map: Vec<usize>,
}

impl Subgraph {
    pub fn lift_set<'a, I: IntoIterator<Item = &'a usize>>(&self, set: I) -> VertexSet {
        set.into_iter().map(|&i| self.map[i]).collect()
    }

    pub fn lift(&self, i: usize) -> usize {
        self.map[i]
    }

    /// Index in the subgraph of parent vertex `v`, if present.
    pub fn local(&self, v: usize) -> Option<usize> {
        self.map.binary_search(&v).ok()
    }
}

impl Graph {
    /// Builds a graph from labels and label-pair edges.
    ///
    /// Labels are sorted to obtain indices; the caller guarantees the edge
    /// list is simple.
    fn from_parts(mut labels: Vec<String>, edges: &[(String, String)]) -> Graph {
        labels.sort();
        labels.dedup();
        let index: BTreeMap<&str, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let mut adjacency = vec![Vec::new(); labels.len()];
        for (a, b) in edges {
            let (i, j) = (index[a.as_str()], index[b.as_str()]);
            adjacency[i].push(j);
            adjacency[j].push(i);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            labels,
            adjacency,
            edge_count: edges.len(),
        }
    }

    /// Builds a graph from string label pairs and extra isolated labels.
    /// Panics on self-loops or duplicate edges; meant for tests and generators.
    pub fn from_edges<S: AsRef<str>>(edges: &[(S, S)], isolated: &[S]) -> Graph {
        let mut labels: Vec<String> = Vec::new();
        let mut pairs = Vec::new();
        let mut seen = HashSet::new();
        for (a, b) in edges {
            let (a, b) = (a.as_ref().to_string(), b.as_ref().to_string());
            assert_ne!(a, b, "self-loop");
            let key = if a < b {
                (a.clone(), b.clone())
            } else {
                (b.clone(), a.clone())
            };
            assert!(seen.insert(key), "duplicate edge {a}-{b}");
            labels.push(a.clone());
            labels.push(b.clone());
            pairs.push((a, b));
        }
        labels.extend(isolated.iter().map(|s| s.as_ref().to_string()));
        Graph::from_parts(labels, &pairs)
    }

    /// Cycle on `0..k` with numeric labels zero-padded so that label order
    /// matches numeric order.
    pub fn cycle(k: usize) -> Graph {
        let label = |i: usize| format!("{i:03}");
        let edges: Vec<(String, String)> = (0..k).map(|i| (label(i), label((i + 1) % k))).collect();
        Graph::from_edges(&edges, &[])
    }

    /// Path on `k` vertices labeled like [`Graph::cycle`].
    pub fn path(k: usize) -> Graph {
        let label = |i: usize| format!("{i:03}");
        let edges: Vec<(String, String)> = (1..k).map(|i| (label(i - 1), label(i))).collect();
        let isolated: Vec<String> = if k == 1 { vec![label(0)] } else { vec![] };
        Graph::from_edges(&edges, &isolated)
    }

    pub fn empty() -> Graph {
        Graph {
            labels: Vec::new(),
            adjacency: Vec::new(),
            edge_count: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.binary_search_by(|l| l.as_str().cmp(label)).ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Edges as index pairs `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(a, ns)| ns.iter().filter(move |&&b| b > a).map(move |&b| (a, b)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        (0..self.n()).collect()
    }

    pub fn labels_of<'a, I: IntoIterator<Item = &'a usize>>(&self, set: I) -> Vec<String> {
        let mut out: Vec<String> = set.into_iter().map(|&v| self.labels[v].clone()).collect();
        out.sort();
        out
    }

    /// Union of neighbourhoods of `set`.
    pub fn neighbourhood(&self, set: &VertexSet) -> VertexSet {
        set.iter()
            .flat_map(|&v| self.adjacency[v].iter().copied())
            .collect()
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter()
            .all(|&v| self.adjacency[v].iter().all(|u| !set.contains(u)))
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut comp = VertexSet::new();
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                for &u in &self.adjacency[v] {
                    if !seen[u] {
                        seen[u] = true;
                        queue.push_back(u);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.components().len() == 1
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count + self.components().len() == self.n()
    }

    pub fn is_unicyclic(&self) -> bool {
        self.is_connected() && self.edge_count == self.n()
    }

    /// The unique cycle, canonically oriented.
    pub fn find_cycle(&self) -> Result<CycleInfo, GraphError> {
        if !self.is_unicyclic() {
            return Err(GraphError::NotUnicyclic);
        }
        // Strip leaves until only the cycle remains.
        let mut degree: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; self.n()];
        let mut queue: VecDeque<usize> = (0..self.n()).filter(|&v| degree[v] == 1).collect();
        while let Some(v) = queue.pop_front() {
            removed[v] = true;
            for &u in &self.adjacency[v] {
                if !removed[u] {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        queue.push_back(u);
                    }
                }
            }
        }
        let on_cycle = |v: usize| !removed[v];
        let start = (0..self.n())
            .find(|&v| on_cycle(v))
            .ok_or(GraphError::NotUnicyclic)?;
        let cycle_nbrs = |v: usize| -> Vec<usize> {
            self.adjacency[v]
                .iter()
                .copied()
                .filter(|&u| on_cycle(u))
                .collect()
        };
        let mut vertices = vec![start];
        let mut prev = start;
        let mut cur = cycle_nbrs(start)[0];
        while cur != start {
            vertices.push(cur);
            let next = cycle_nbrs(cur)
                .into_iter()
                .find(|&u| u != prev)
                .ok_or(GraphError::NotUnicyclic)?;
            prev = cur;
            cur = next;
        }
        Ok(CycleInfo { vertices })
    }

    /// Pendant tree of every cycle vertex: the component containing it once
    /// all cycle edges are deleted.
    pub fn pendant_trees(&self) -> Result<PendantForest, GraphError> {
        let cycle = self.find_cycle()?;
        Ok(self.pendant_trees_of(&cycle))
    }

    pub(crate) fn pendant_trees_of(&self, cycle: &CycleInfo) -> PendantForest {
        let on_cycle = cycle.vertex_set();
        let mut trees = BTreeMap::new();
        for &root in &cycle.vertices {
            let mut set = VertexSet::from([root]);
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adjacency[v] {
                    if !on_cycle.contains(&u) && set.insert(u) {
                        queue.push_back(u);
                    }
                }
            }
            trees.insert(root, set);
        }
        PendantForest { trees }
    }

    /// Induced subgraph on `set`, labels preserved.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<Graph, GraphError> {
        Ok(self.induced(set)?.graph)
    }

    /// Induced subgraph plus the index map back into `self`.
    pub fn induced(&self, set: &VertexSet) -> Result<Subgraph, GraphError> {
        if let Some(&bad) = set.iter().find(|&&v| v >= self.n()) {
            return Err(GraphError::UnknownVertex(bad));
        }
        let map: Vec<usize> = set.iter().copied().collect();
        let local: BTreeMap<usize, usize> = map.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut adjacency = vec![Vec::new(); map.len()];
        let mut edge_count = 0;
        for (i, &v) in map.iter().enumerate() {
            for &u in &self.adjacency[v] {
                if let Some(&j) = local.get(&u) {
                    adjacency[i].push(j);
                    if j > i {
                        edge_count += 1;
                    }
                }
            }
        }
        let graph = Graph {
            labels: map.iter().map(|&v| self.labels[v].clone()).collect(),
            adjacency,
            edge_count,
        };
        Ok(Subgraph { graph, map })
    }

    /// `self - set`, with the index map.
    pub fn without(&self, set: &VertexSet) -> Subgraph {
        let keep: VertexSet = (0..self.n()).filter(|v| !set.contains(v)).collect();
        self.induced(&keep).expect("subset of own vertices")
    }

    /// Copy of the graph with the given edges removed.
    pub fn without_edges(&self, edges: &[(usize, usize)]) -> Graph {
        let drop: HashSet<(usize, usize)> =
            edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        let mut adjacency = self.adjacency.clone();
        for (v, list) in adjacency.iter_mut().enumerate() {
            list.retain(|&u| !drop.contains(&(v.min(u), v.max(u))));
        }
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        Graph {
            labels: self.labels.clone(),
            adjacency,
            edge_count,
        }
    }

    /// Dense 0/1 adjacency matrix in index order.
    pub fn adjacency_matrix(&self) -> RationalMatrix {
        let n = self.n();
        let mut m = RationalMatrix::zeros(n, n);
        for (a, b) in self.edges() {
            m[(a, b)] = Rational::from_integer(1.into());
            m[(b, a)] = Rational::from_integer(1.into());
        }
        m
    }

    /// Serializes to the edge-list format; isolated vertices get a
    /// single-token line.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (a, b) in self.edges() {
            out.push_str(&self.labels[a]);
            out.push(' ');
            out.push_str(&self.labels[b]);
            out.push('\n');
        }
        for v in 0..self.n() {
            if self.degree(v) == 0 {
                out.push_str(&self.labels[v]);
                out.push('\n');
            }
        }
        out
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

/// Parses the edge-list format: one edge per line as two whitespace
/// separated labels, a single label declares a vertex, `#` starts a comment
/// line and blank lines are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut labels: Vec<String> = Vec::new();
    let mut known: HashSet<String> = HashSet::new();
    let mut edges: Vec<(String, String)> = Vec::new();
    let mut seen: HashSet<(String, String)> = HashSet::new();
    let mut register = |l: &str, labels: &mut Vec<String>| {
        if known.insert(l.to_string()) {
            labels.push(l.to_string());
        }
    };
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        match tokens.as_slice() {
            [v] => register(v, &mut labels),
            [a, b] => {
                if a == b {
                    return Err(ParseError::SelfLoop {
                        line,
                        label: a.to_string(),
                    });
                }
                let key = if a < b {
                    (a.to_string(), b.to_string())
                } else {
                    (b.to_string(), a.to_string())
                };
                if !seen.insert(key) {
                    return Err(ParseError::DuplicateEdge {
                        line,
                        a: a.to_string(),
                        b: b.to_string(),
                    });
                }
                register(a, &mut labels);
                register(b, &mut labels);
                edges.push((a.to_string(), b.to_string()));
            }
            other => {
                return Err(ParseError::MalformedLine {
                    line,
                    found: other.len(),
                })
            }
        }
    }
    if labels.is_empty() {
        return Err(ParseError::EmptyInput);
    }
    Ok(Graph::from_parts(labels, &edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(g: &Graph, labels: &[&str]) -> VertexSet {
        labels.iter().map(|l| g.index_of(l).unwrap()).collect()
    }

    #[test]
    fn parses_small_path() {
        let g = parse_edge_list("a b\nb c").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.labels(), ["a", "b", "c"]);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
    }

    #[test]
    fn parse_errors_name_the_line() {
        assert_eq!(
            parse_edge_list("a a"),
            Err(ParseError::SelfLoop {
                line: 1,
                label: "a".into()
            })
        );
        assert!(matches!(
            parse_edge_list("a b\n# c\nb a"),
            Err(ParseError::DuplicateEdge { line: 3, .. })
        ));
        assert_eq!(parse_edge_list("\n# only\n"), Err(ParseError::EmptyInput));
        assert_eq!(
            parse_edge_list("a b\na b c"),
            Err(ParseError::MalformedLine { line: 2, found: 3 })
        );
    }

    #[test]
    fn isolated_vertex_lines() {
        let g = parse_edge_list("x\na b\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.degree(g.index_of("x").unwrap()), 0);
        assert_eq!(parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn type1_example_is_unicyclic() {
        let g = fixtures::type1_example();
        assert_eq!(g.n(), 18);
        assert_eq!(g.edge_count(), 18);
        assert!(g.is_unicyclic());
        assert!(Graph::cycle(4).is_unicyclic());
        assert!(!Graph::path(3).is_unicyclic());
    }

    #[test]
    fn cycles_are_canonical() {
        let c4 = Graph::cycle(4).find_cycle().unwrap();
        assert_eq!(c4.vertices, vec![0, 1, 2, 3]);

        let g = fixtures::square_example();
        let c = g.find_cycle().unwrap();
        assert_eq!(g.labels_of(&c.vertices), ["u", "v", "w", "z"]);
        assert_eq!(c.vertices[0], g.index_of("u").unwrap());
        assert_eq!(c.vertices[1], g.index_of("v").unwrap());

        let g1 = fixtures::type1_example();
        let c1 = g1.find_cycle().unwrap();
        assert_eq!(g1.labels_of(&c1.vertices), ["e", "f", "g", "v"]);
        // e < f < g < v: start e, smaller neighbour g (e's cycle nbrs are g, v)
        let labels: Vec<&str> = c1.vertices.iter().map(|&v| g1.label(v)).collect();
        assert_eq!(labels, ["e", "g", "f", "v"]);
        assert_eq!(c1, g1.find_cycle().unwrap());

        assert_eq!(Graph::path(3).find_cycle(), Err(GraphError::NotUnicyclic));
    }

    #[test]
    fn pendant_trees_of_examples() {
        let c4 = Graph::cycle(4).pendant_trees().unwrap();
        assert!(c4.trees.iter().all(|(v, t)| t.len() == 1 && t.contains(v)));

        let g = fixtures::type1_example();
        let pf = g.pendant_trees().unwrap();
        let tree = |l: &str| pf.tree(g.index_of(l).unwrap()).unwrap().clone();
        assert_eq!(tree("e"), set(&g, &["e"]));
        assert_eq!(tree("f"), set(&g, &["f", "h", "i"]));
        assert_eq!(tree("g"), set(&g, &["g", "q", "r"]));
        assert_eq!(tree("v").len(), 11);

        let g = fixtures::square_example();
        let pf = g.pendant_trees().unwrap();
        let tree = |l: &str| pf.tree(g.index_of(l).unwrap()).unwrap().clone();
        assert_eq!(tree("v"), set(&g, &["v"]));
        assert_eq!(tree("z"), set(&g, &["z", "a", "b"]));
        assert_eq!(tree("u"), set(&g, &["u", "i", "j", "ℓ"]));
        assert_eq!(tree("w"), set(&g, &["w", "f", "c", "d", "e", "g", "h"]));
    }

    #[test]
    fn induced_subgraphs() {
        let g = fixtures::star_example();
        assert_eq!(g.induced_subgraph(&g.vertex_set()).unwrap(), g);
        assert_eq!(g.induced_subgraph(&VertexSet::new()).unwrap().n(), 0);
        let star = g
            .induced_subgraph(&set(&g, &["v6", "v7", "v8", "v9"]))
            .unwrap();
        assert_eq!(star.edge_count(), 3);
        assert_eq!(star.degree(star.index_of("v6").unwrap()), 3);
        assert_eq!(
            g.induced_subgraph(&VertexSet::from([99])),
            Err(GraphError::UnknownVertex(99))
        );
    }

    #[test]
    fn components_after_removing_cycle() {
        let g = fixtures::square_example();
        let cycle = g.find_cycle().unwrap();
        let rest = g.without(&cycle.vertex_set());
        let comps: Vec<Vec<String>> = rest
            .graph
            .components()
            .iter()
            .map(|c| g.labels_of(&rest.lift_set(c)))
            .collect();
        assert_eq!(
            comps,
            vec![
                vec!["a", "b"],
                vec!["c", "d", "e", "f", "g", "h"],
                vec!["i", "j", "ℓ"],
            ]
        );
        assert_eq!(Graph::path(5).components().len(), 1);
        assert!(Graph::empty().components().is_empty());
    }

    #[test]
    fn adjacency_matrices() {
        let e = Graph::path(2).adjacency_matrix();
        assert_eq!(e.to_i64_rows(), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(
            Graph::path(1).adjacency_matrix().to_i64_rows(),
            vec![vec![0]]
        );
        assert_eq!(
            Graph::cycle(4).adjacency_matrix().to_i64_rows()[0],
            vec![0, 1, 0, 1]
        );
    }
}
