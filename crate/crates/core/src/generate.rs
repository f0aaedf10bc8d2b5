//! Seeded random unicyclic graphs: a cycle with the remaining vertices
//! attached by random-parent tree growth.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::GenerateError;
use crate::graph::Graph;
use crate::unicyclic::{classify, UnicyclicType};

/// Attempts allowed before a class bias is reported as unsatisfiable.
pub const MAX_ATTEMPTS: usize = 1000;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClassBias {
    #[default]
    Any,
    ForceTypeI,
    ForceTypeII,
}

impl ClassBias {
    fn accepts(self, kind: UnicyclicType) -> bool {
        match self {
            ClassBias::Any => true,
            ClassBias::ForceTypeI => kind == UnicyclicType::TypeI,
            ClassBias::ForceTypeII => kind == UnicyclicType::TypeII,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub n: usize,
    pub cycle_length: Option<usize>,
    pub seed: u64,
    pub class_bias: ClassBias,
}

impl GeneratorSpec {
    pub fn new(n: usize, seed: u64) -> Self {
        GeneratorSpec {
            n,
            cycle_length: None,
            seed,
            class_bias: ClassBias::Any,
        }
    }

    pub fn with_cycle_length(mut self, c: usize) -> Self {
        self.cycle_length = Some(c);
        self
    }

    pub fn with_bias(mut self, bias: ClassBias) -> Self {
        self.class_bias = bias;
        self
    }

    pub fn validate(&self) -> Result<(), GenerateError> {
        if self.n < 3 {
            return Err(GenerateError::SpecInvalid(format!(
                "a unicyclic graph needs at least 3 vertices, got {}",
                self.n
            )));
        }
        if let Some(c) = self.cycle_length {
            if c < 3 || c > self.n {
                return Err(GenerateError::SpecInvalid(format!(
                    "cycle length {c} outside 3..={}",
                    self.n
                )));
            }
        }
        Ok(())
    }
}

/// Generates a connected unicyclic graph; a pure function of `spec`.
///
/// Labels are zero-padded integers assigned by a random permutation, so the
/// cycle does not always occupy the smallest indices.
pub fn generate(spec: &GeneratorSpec) -> Result<Graph, GenerateError> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    for _ in 0..MAX_ATTEMPTS {
        let g = sample(spec, &mut rng);
        let cls = classify(&g).expect("generated graphs are unicyclic");
        if spec.class_bias.accepts(cls.kind) {
            return Ok(g);
        }
    }
    Err(GenerateError::BiasUnsatisfied(MAX_ATTEMPTS))
}

fn sample(spec: &GeneratorSpec, rng: &mut ChaCha8Rng) -> Graph {
    let n = spec.n;
    let c = spec.cycle_length.unwrap_or_else(|| rng.gen_range(3..=n));
    let mut edges: Vec<(usize, usize)> = (0..c).map(|i| (i, (i + 1) % c)).collect();
    for v in c..n {
        edges.push((rng.gen_range(0..v), v));
    }
    let width = (n - 1).to_string().len();
    let mut names: Vec<String> = (0..n).map(|i| format!("{i:0width$}")).collect();
    names.shuffle(rng);
    let labelled: Vec<(&str, &str)> = edges
        .iter()
        .map(|&(a, b)| (names[a].as_str(), names[b].as_str()))
        .collect();
    Graph::from_edges(&labelled, &[])
}
