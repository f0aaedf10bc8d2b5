//! Verification campaigns over batches of independently generated graphs.
//!
//! With the `parallel` feature the batch is spread over a rayon pool;
//! without it, or with [`Execution::Sequential`], graphs are checked one
//! after another. Results are always reported in graph-index order.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::checks::{run_checks, CheckConfig, CheckOutcome};
use crate::decomp::Case;
use crate::error::{GenerateError, NullError};
use crate::generate::{generate, ClassBias, GeneratorSpec};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Data-parallel when built with the `parallel` feature, sequential
    /// otherwise.
    #[default]
    Parallel,
}

impl Execution {
    pub fn is_parallel_available() -> bool {
        cfg!(feature = "parallel")
    }
}

#[derive(Debug, Clone, Copy)]
pub struct CampaignSpec {
    pub count: usize,
    pub min_n: usize,
    pub max_n: usize,
    pub seed: u64,
    pub cycle_length: Option<usize>,
    pub bias: ClassBias,
    pub checks: CheckConfig,
}

impl CampaignSpec {
    pub fn new(count: usize, min_n: usize, max_n: usize, seed: u64) -> Self {
        CampaignSpec {
            count,
            min_n,
            max_n,
            seed,
            cycle_length: None,
            bias: ClassBias::Any,
            checks: CheckConfig::default(),
        }
    }

    /// Generator spec of the `index`-th graph; independent of every other
    /// index so graphs can be produced in any order.
    pub fn graph_spec(&self, index: usize) -> GeneratorSpec {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index as u64);
        let n = rng.gen_range(self.min_n..=self.max_n);
        GeneratorSpec {
            n,
            cycle_length: self.cycle_length,
            seed: rng.gen(),
            class_bias: self.bias,
        }
    }

    fn validate(&self) -> Result<(), GenerateError> {
        if self.min_n > self.max_n {
            return Err(GenerateError::SpecInvalid(format!(
                "min-n {} exceeds max-n {}",
                self.min_n, self.max_n
            )));
        }
        GeneratorSpec {
            n: self.min_n,
            cycle_length: self.cycle_length,
            seed: self.seed,
            class_bias: self.bias,
        }
        .validate()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphResult {
    pub index: usize,
    pub spec: GeneratorSpec,
    pub edge_list: String,
    pub outcome: Result<CheckOutcome, String>,
}

impl GraphResult {
    pub fn passed(&self) -> bool {
        matches!(&self.outcome, Ok(o) if o.passed())
    }

    pub fn failed_checks(&self) -> Vec<String> {
        match &self.outcome {
            Ok(o) => o.failures().into_iter().map(str::to_string).collect(),
            Err(e) => vec![format!("error: {e}")],
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub index: usize,
    pub spec: GeneratorSpec,
    pub failed_checks: Vec<String>,
    /// Smallest failing graph found by stripping leaves off the original.
    pub reproduction: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CampaignSummary {
    pub total: usize,
    pub passed: usize,
    pub case_counts: BTreeMap<Case, usize>,
    pub first_failure: Option<Failure>,
}

impl CampaignSummary {
    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Campaign {
    pub results: Vec<GraphResult>,
    pub summary: CampaignSummary,
}

fn check_one(spec: &CampaignSpec, index: usize) -> Result<GraphResult, GenerateError> {
    let gspec = spec.graph_spec(index);
    let g = generate(&gspec)?;
    let outcome = run_checks(&g, &spec.checks).map_err(|e| e.to_string());
    Ok(GraphResult {
        index,
        spec: gspec,
        edge_list: g.to_edge_list(),
        outcome,
    })
}

/// Maps `f` over `0..count`, keeping index order.
pub fn map_indices<T, F>(count: usize, exec: Execution, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..count).into_par_iter().map(f).collect()
        }
        _ => (0..count).map(f).collect(),
    }
}

/// Runs the full check suite on graphs produced independently from `spec`.
pub fn run_campaign(spec: &CampaignSpec, exec: Execution) -> Result<Campaign, GenerateError> {
    spec.validate()?;
    let results = map_indices(spec.count, exec, |i| check_one(spec, i))
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    let mut case_counts = BTreeMap::new();
    for r in &results {
        if let Ok(o) = &r.outcome {
            *case_counts.entry(o.case).or_insert(0) += 1;
        }
    }
    let first_failure = results.iter().find(|r| !r.passed()).map(|r| {
        let g = crate::graph::parse_edge_list(&r.edge_list).expect("edge list round-trips");
        Failure {
            index: r.index,
            spec: r.spec,
            failed_checks: r.failed_checks(),
            reproduction: minimize(&g, |h| !graph_passes(h, &spec.checks)).to_edge_list(),
        }
    });
    let summary = CampaignSummary {
        total: results.len(),
        passed: results.iter().filter(|r| r.passed()).count(),
        case_counts,
        first_failure,
    };
    Ok(Campaign { results, summary })
}

/// Runs the check suite on each given graph, keeping input order.
pub fn check_graphs(
    graphs: &[Graph],
    cfg: &CheckConfig,
    exec: Execution,
) -> Vec<Result<CheckOutcome, NullError>> {
    map_indices(graphs.len(), exec, |i| run_checks(&graphs[i], cfg))
}

fn graph_passes(g: &Graph, cfg: &CheckConfig) -> bool {
    matches!(run_checks(g, cfg), Ok(o) if o.passed())
}

/// Greedily deletes leaves while `still_fails` holds, so the result stays in
/// the same graph class as the input.
pub fn minimize<F: Fn(&Graph) -> bool>(g: &Graph, still_fails: F) -> Graph {
    let mut current = g.clone();
    'outer: loop {
        for v in 0..current.n() {
            if current.degree(v) != 1 {
                continue;
            }
            let smaller = current.without(&VertexSet::from([v])).graph;
            if still_fails(&smaller) {
                current = smaller;
                continue 'outer;
            }
        }
        return current;
    }
}
