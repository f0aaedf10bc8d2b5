//! Brute-force ground truth for small graphs: independence and matching
//! numbers, maximum independent sets, maximum matchings, the Edmonds-Gallai
//! set and the intersection of all maximum independent sets.
//!
//! Vertex sets are `u64` bitmasks internally, so every budget is capped at
//! 64 vertices.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use crate::error::OracleError;
use crate::graph::{Graph, VertexSet};

const MASK_BITS: usize = 64;
const EDGE_SUBSET_LIMIT: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_vertices: usize,
    pub time_limit: Option<Duration>,
}

impl OracleBudget {
    pub const ENUMERATION_VERTICES: usize = 14;
    pub const COUNTING_VERTICES: usize = 22;

    pub fn new(max_vertices: usize) -> Self {
        assert!(
            (1..=MASK_BITS).contains(&max_vertices),
            "oracle budget must be between 1 and {MASK_BITS} vertices"
        );
        OracleBudget {
            max_vertices,
            time_limit: None,
        }
    }

    /// Budget for the set-valued enumerations.
    pub fn enumeration() -> Self {
        Self::new(Self::ENUMERATION_VERTICES)
    }

    /// Budget for the number-only searches.
    pub fn counting() -> Self {
        Self::new(Self::COUNTING_VERTICES)
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }

    fn admit(&self, g: &Graph) -> Result<Clock, OracleError> {
        if g.n() > self.max_vertices {
            return Err(OracleError::BudgetExceeded {
                n: g.n(),
                max: self.max_vertices,
            });
        }
        Ok(Clock {
            deadline: self.time_limit.map(|d| (Instant::now() + d, d)),
        })
    }
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self::enumeration()
    }
}

struct Clock {
    deadline: Option<(Instant, Duration)>,
}

impl Clock {
    fn tick(&self) -> Result<(), OracleError> {
        match self.deadline {
            Some((at, limit)) if Instant::now() > at => Err(OracleError::TimeLimitExceeded(limit)),
            _ => Ok(()),
        }
    }
}

fn masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
        .collect()
}

fn full_mask(n: usize) -> u64 {
    if n == MASK_BITS {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn to_set(mask: u64) -> VertexSet {
    (0..MASK_BITS).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Independence number by branch and bound. Vertices of degree at most one
/// are taken greedily; otherwise the search branches on a vertex of maximum
/// remaining degree.
pub fn brute_alpha(g: &Graph, budget: OracleBudget) -> Result<usize, OracleError> {
    let clock = budget.admit(g)?;
    let adj = masks(g);
    let mut best = 0;
    alpha_search(&adj, full_mask(g.n()), 0, &mut best, &clock)?;
    Ok(best)
}

fn alpha_search(
    adj: &[u64],
    mut rem: u64,
    mut cur: usize,
    best: &mut usize,
    clock: &Clock,
) -> Result<(), OracleError> {
    clock.tick()?;
    loop {
        if cur + rem.count_ones() as usize <= *best {
            return Ok(());
        }
        if rem == 0 {
            *best = cur;
            return Ok(());
        }
        let mut pick = None;
        let mut widest = (0, 0);
        let mut bits = rem;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let d = (adj[v] & rem).count_ones();
            if d <= 1 {
                pick = Some(v);
                break;
            }
            if d > widest.0 {
                widest = (d, v);
            }
        }
        match pick {
            Some(v) => {
                rem &= !(adj[v] | 1 << v);
                cur += 1;
            }
            None => {
                let v = widest.1;
                alpha_search(adj, rem & !(adj[v] | 1 << v), cur + 1, best, clock)?;
                rem &= !(1 << v);
            }
        }
    }
}

/// Matching number by memoized search: the lowest remaining vertex is either
/// left unmatched or matched to one of its remaining neighbours. Exact on
/// every graph, odd cycles included.
pub fn brute_nu(g: &Graph, budget: OracleBudget) -> Result<usize, OracleError> {
    let clock = budget.admit(g)?;
    let adj = masks(g);
    let mut memo = HashMap::new();
    nu_search(&adj, full_mask(g.n()), &mut memo, &clock)
}

fn nu_search(
    adj: &[u64],
    rem: u64,
    memo: &mut HashMap<u64, usize>,
    clock: &Clock,
) -> Result<usize, OracleError> {
    // vertices without remaining neighbours never contribute
    let mut live = rem;
    let mut bits = rem;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        if adj[v] & rem == 0 {
            live &= !(1 << v);
        }
    }
    if live == 0 {
        return Ok(0);
    }
    if let Some(&known) = memo.get(&live) {
        return Ok(known);
    }
    clock.tick()?;
    let v = live.trailing_zeros() as usize;
    let without_v = live & !(1 << v);
    let mut best = nu_search(adj, without_v, memo, clock)?;
    let mut partners = adj[v] & live;
    while partners != 0 {
        let u = partners.trailing_zeros() as usize;
        partners &= partners - 1;
        best = best.max(1 + nu_search(adj, without_v & !(1 << u), memo, clock)?);
    }
    memo.insert(live, best);
    Ok(best)
}

/// Matching number by trying every subset of edges. Only for validating
/// [`brute_nu`]; limited to graphs with at most 24 edges.
pub fn exhaustive_nu(g: &Graph) -> Result<usize, OracleError> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if edges.len() > EDGE_SUBSET_LIMIT {
        return Err(OracleError::BudgetExceeded {
            n: edges.len(),
            max: EDGE_SUBSET_LIMIT,
        });
    }
    let mut best = 0;
    for subset in 0u32..(1u32 << edges.len()) {
        let size = subset.count_ones() as usize;
        if size <= best {
            continue;
        }
        let mut covered = 0u64;
        let is_matching = edges.iter().enumerate().all(|(i, &(a, b))| {
            if subset >> i & 1 == 0 {
                return true;
            }
            let pair = 1u64 << a | 1u64 << b;
            let fresh = covered & pair == 0;
            covered |= pair;
            fresh
        });
        if is_matching {
            best = size;
        }
    }
    Ok(best)
}

/// Every maximum independent set, each as a sorted vertex set, in
/// lexicographic order of their bitmasks.
pub fn maximum_independent_sets(
    g: &Graph,
    budget: OracleBudget,
) -> Result<Vec<VertexSet>, OracleError> {
    let alpha = brute_alpha(g, budget)?;
    let clock = budget.admit(g)?;
    let adj = masks(g);
    let mut found = Vec::new();
    collect_independent(&adj, g.n(), 0, 0, 0, alpha, &mut found, &clock)?;
    Ok(found.into_iter().map(to_set).collect())
}

#[allow(clippy::too_many_arguments)]
fn collect_independent(
    adj: &[u64],
    n: usize,
    i: usize,
    chosen: u64,
    blocked: u64,
    target: usize,
    found: &mut Vec<u64>,
    clock: &Clock,
) -> Result<(), OracleError> {
    let size = chosen.count_ones() as usize;
    if size == target {
        found.push(chosen);
        return Ok(());
    }
    if size + (n - i) < target {
        return Ok(());
    }
    clock.tick()?;
    if blocked >> i & 1 == 0 {
        collect_independent(
            adj,
            n,
            i + 1,
            chosen | 1 << i,
            blocked | adj[i],
            target,
            found,
            clock,
        )?;
    }
    collect_independent(adj, n, i + 1, chosen, blocked, target, found, clock)
}

/// Every maximum matching, each as a sorted list of edges `(a, b)` with
/// `a < b`.
pub fn maximum_matchings(
    g: &Graph,
    budget: OracleBudget,
) -> Result<Vec<Vec<(usize, usize)>>, OracleError> {
    let nu = brute_nu(g, budget)?;
    let clock = budget.admit(g)?;
    let adj = masks(g);
    let mut found = Vec::new();
    let mut current = Vec::new();
    collect_matchings(&adj, full_mask(g.n()), nu, &mut current, &mut found, &clock)?;
    Ok(found)
}

fn collect_matchings(
    adj: &[u64],
    rem: u64,
    target: usize,
    current: &mut Vec<(usize, usize)>,
    found: &mut Vec<Vec<(usize, usize)>>,
    clock: &Clock,
) -> Result<(), OracleError> {
    if current.len() == target {
        found.push(current.clone());
        return Ok(());
    }
    if current.len() + rem.count_ones() as usize / 2 < target {
        return Ok(());
    }
    clock.tick()?;
    let v = rem.trailing_zeros() as usize;
    let without_v = rem & !(1 << v);
    let mut partners = adj[v] & without_v;
    while partners != 0 {
        let u = partners.trailing_zeros() as usize;
        partners &= partners - 1;
        current.push((v, u));
        collect_matchings(adj, without_v & !(1 << u), target, current, found, clock)?;
        current.pop();
    }
    collect_matchings(adj, without_v, target, current, found, clock)
}

/// Vertices missed by at least one maximum matching.
pub fn edmonds_gallai_set(g: &Graph, budget: OracleBudget) -> Result<VertexSet, OracleError> {
    let covered_by_all = maximum_matchings(g, budget)?
        .iter()
        .map(|m| m.iter().fold(0u64, |acc, &(a, b)| acc | 1 << a | 1 << b))
        .fold(full_mask(g.n()), |acc, cover| acc & cover);
    Ok(to_set(full_mask(g.n()) & !covered_by_all))
}

/// Intersection of all maximum independent sets.
pub fn max_independent_intersection(
    g: &Graph,
    budget: OracleBudget,
) -> Result<VertexSet, OracleError> {
    let sets = maximum_independent_sets(g, budget)?;
    let mut iter = sets.into_iter();
    let first = iter.next().unwrap_or_default();
    Ok(iter.fold(first, |acc, s| acc.intersection(&s).copied().collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::parse_edge_list;

    fn budget() -> OracleBudget {
        OracleBudget::counting()
    }

    fn names(g: &Graph, s: &VertexSet) -> Vec<String> {
        g.labels_of(s)
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(brute_alpha(&Graph::cycle(5), budget()).unwrap(), 2);
        assert_eq!(
            brute_alpha(&fixtures::type1_example(), budget()).unwrap(),
            10
        );
        assert_eq!(brute_alpha(&Graph::path(1), budget()).unwrap(), 1);
        assert_eq!(brute_alpha(&Graph::empty(), budget()).unwrap(), 0);
        assert_eq!(
            brute_alpha(&fixtures::square_example(), budget()).unwrap(),
            9
        );
    }

    #[test]
    fn nu_examples() {
        assert_eq!(brute_nu(&Graph::path(4), budget()).unwrap(), 2);
        assert_eq!(brute_nu(&fixtures::type1_example(), budget()).unwrap(), 8);
        assert_eq!(brute_nu(&Graph::cycle(5), budget()).unwrap(), 2);
        assert_eq!(brute_nu(&fixtures::square_example(), budget()).unwrap(), 6);
    }

    #[test]
    fn budget_is_enforced() {
        let g = Graph::path(15);
        assert_eq!(
            brute_alpha(&g, OracleBudget::enumeration()),
            Err(OracleError::BudgetExceeded { n: 15, max: 14 })
        );
        assert!(edmonds_gallai_set(&g, OracleBudget::enumeration()).is_err());
        let tight = OracleBudget::counting().with_time_limit(Duration::ZERO);
        std::thread::sleep(Duration::from_millis(1));
        assert!(matches!(
            brute_alpha(&fixtures::type1_example(), tight),
            Err(OracleError::TimeLimitExceeded(_))
        ));
    }

    #[test]
    fn edmonds_gallai_examples() {
        let p3 = parse_edge_list("a b\nb c").unwrap();
        assert_eq!(
            names(&p3, &edmonds_gallai_set(&p3, budget()).unwrap()),
            ["a", "c"]
        );
        assert!(edmonds_gallai_set(&Graph::path(2), budget())
            .unwrap()
            .is_empty());
        let star = parse_edge_list("s x\ns y\ns z").unwrap();
        assert_eq!(
            names(&star, &edmonds_gallai_set(&star, budget()).unwrap()),
            ["x", "y", "z"]
        );
    }

    #[test]
    fn intersection_examples() {
        let p3 = parse_edge_list("a b\nb c").unwrap();
        assert_eq!(
            names(&p3, &max_independent_intersection(&p3, budget()).unwrap()),
            ["a", "c"]
        );
        assert!(max_independent_intersection(&Graph::path(4), budget())
            .unwrap()
            .is_empty());
        assert!(max_independent_intersection(&Graph::path(2), budget())
            .unwrap()
            .is_empty());
        assert_eq!(
            maximum_independent_sets(&Graph::path(4), budget())
                .unwrap()
                .len(),
            3
        );
    }

    #[test]
    fn matchings_are_enumerated_once() {
        // C6 has two perfect matchings; K_{1,3} has three maximum matchings
        assert_eq!(
            maximum_matchings(&Graph::cycle(6), budget()).unwrap().len(),
            2
        );
        let star = parse_edge_list("s x\ns y\ns z").unwrap();
        assert_eq!(maximum_matchings(&star, budget()).unwrap().len(), 3);
        assert_eq!(
            maximum_matchings(&Graph::cycle(5), budget()).unwrap().len(),
            5
        );
    }

    #[test]
    fn nu_matches_edge_subset_search() {
        for g in [
            Graph::cycle(3),
            Graph::cycle(7),
            Graph::path(9),
            fixtures::square_example(),
            parse_edge_list("a b\nb c\nc a\nc d\nd e\ne f\nf d").unwrap(),
        ] {
            assert_eq!(brute_nu(&g, budget()).unwrap(), exhaustive_nu(&g).unwrap());
        }
    }
}
