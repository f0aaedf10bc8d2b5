//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use nulldecomp::campaign::{check_graphs, CampaignSpec, Execution};
use nulldecomp::checks::{
    CheckConfig, CheckOutcome, AGREEMENT_CHECKS, BASIS_CHECKS, ORACLE_CHECKS, STRUCTURE_CHECKS,
};
use nulldecomp::decomp::{decomposition_from_basis, Case};
use nulldecomp::fixtures;
use nulldecomp::generate::{generate, ClassBias, GeneratorSpec};
use nulldecomp::graph::Graph;
use nulldecomp::linalg::nullity;
use nulldecomp::oracle::{brute_alpha, brute_nu, OracleBudget};

const CORPUS_SIZE: usize = 600;
const CORPUS_SEED: u64 = 0x5eed_2024;
const MIN_N: usize = 5;
const MAX_N: usize = 14;
const ENUMERATION_N: usize = 12;
const CASE_QUOTA: usize = 10;
const TOP_UP_LIMIT: usize = 50_000;

const UNICYCLIC_CASES: [Case; 6] = [
    Case::TypeI1,
    Case::TypeI2,
    Case::TypeI3,
    Case::TypeI4,
    Case::TypeIINon4k,
    Case::TypeII4k,
];

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        ok,
        detail: detail.into(),
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Verdict) -> Verdict {
    let start = Instant::now();
    let v = f();
    let elapsed = start.elapsed();
    let in_time = elapsed < limit;
    verdict(
        v.ok && in_time,
        format!(
            "{} [{:.2?} of {:?}{}]",
            v.detail,
            elapsed,
            limit,
            if in_time { "" } else { ", too slow" }
        ),
    )
}

fn labels(g: &Graph, set: &nulldecomp::VertexSet) -> Vec<String> {
    g.labels_of(set)
}

fn golden_type1() -> Verdict {
    let g = fixtures::type1_example();
    let d = decomposition_from_basis(&g).unwrap();
    let (alpha, nu) = (d.alpha().unwrap(), d.nu().unwrap());
    let ok = labels(&g, &d.support) == ["a", "b", "e", "f", "i"]
        && labels(&g, &d.core) == ["c", "g", "h", "v"]
        && d.n_vertices.len() == 9
        && (alpha, nu) == (10, 8);
    verdict(
        ok,
        format!(
            "18-vertex Type I graph: |N| = {}, alpha {alpha}, nu {nu}",
            d.n_vertices.len()
        ),
    )
}

fn golden_pentagon() -> Verdict {
    let g = fixtures::pentagon_example();
    let d = decomposition_from_basis(&g).unwrap();
    let (alpha, nu) = (d.alpha().unwrap(), d.nu().unwrap());
    let wide = OracleBudget::new(g.n());
    let ok = labels(&g, &d.support) == ["g", "h", "j", "m", "t", "u", "v", "w", "y", "z", "ℓ"]
        && labels(&g, &d.core) == ["f", "i", "r", "s", "x"]
        && labels(&g, &d.n_vertices) == ["a", "b", "c", "d", "e", "n", "o", "p", "q"]
        && d.case == Case::TypeIINon4k
        && (alpha, nu) == (15, 9)
        && brute_alpha(&g, wide) == Ok(15)
        && brute_nu(&g, wide) == Ok(9);
    verdict(
        ok,
        format!(
            "25-vertex Type II pentagon graph: |Supp| {}, |Core| {}, |N| {}, alpha {alpha}, nu {nu}",
            d.support.len(),
            d.core.len(),
            d.n_vertices.len()
        ),
    )
}

fn golden_square() -> Verdict {
    let g = fixtures::square_example();
    let d = decomposition_from_basis(&g).unwrap();
    let (alpha, nu) = (d.alpha().unwrap(), d.nu().unwrap());
    let eta = nullity(&g.adjacency_matrix());
    let ok = labels(&g, &d.support) == ["b", "c", "d", "e", "j", "u", "v", "w", "z", "ℓ"]
        && labels(&g, &d.core) == ["a", "f", "i", "u", "v", "w", "z"]
        && labels(&g, &d.n_vertices) == ["g", "h"]
        && labels(&g, &d.support_core_overlap()) == ["u", "v", "w", "z"]
        && d.case == Case::TypeII4k
        && (alpha, nu, eta) == (9, 6, 5);
    verdict(
        ok,
        format!("15-vertex Type II square graph: alpha {alpha}, nu {nu}, nullity {eta}"),
    )
}

fn cycle_nullities() -> Verdict {
    let bad: Vec<usize> = (3..=17)
        .filter(|&k| {
            let expected = if k % 4 == 0 { 2 } else { 0 };
            nullity(&Graph::cycle(k).adjacency_matrix()) != expected
        })
        .collect();
    verdict(
        bad.is_empty(),
        format!("cycles of length 3..=17, mismatches {bad:?}"),
    )
}

/// Seeded corpus plus case-targeted top-ups until every unicyclic case has
/// its quota.
fn corpus() -> Vec<Graph> {
    let spec = CampaignSpec::new(CORPUS_SIZE, MIN_N, MAX_N, CORPUS_SEED);
    let mut graphs: Vec<Graph> = (0..CORPUS_SIZE)
        .map(|i| generate(&spec.graph_spec(i)).expect("corpus spec is valid"))
        .collect();
    let mut counts = case_counts(&graphs);
    let top_up = CampaignSpec::new(TOP_UP_LIMIT, MIN_N, MAX_N, CORPUS_SEED + 1);
    for i in 0..TOP_UP_LIMIT {
        let missing: Vec<Case> = UNICYCLIC_CASES
            .into_iter()
            .filter(|c| counts.get(c).copied().unwrap_or(0) < CASE_QUOTA)
            .collect();
        let Some(&want) = missing.first() else { break };
        let mut gspec: GeneratorSpec = top_up.graph_spec(i);
        gspec.class_bias = match want {
            Case::TypeIINon4k | Case::TypeII4k => ClassBias::ForceTypeII,
            _ => ClassBias::ForceTypeI,
        };
        if want == Case::TypeII4k {
            gspec.cycle_length = Some(if gspec.n >= 8 && i % 2 == 0 { 8 } else { 4 });
        }
        let Ok(g) = generate(&gspec) else { continue };
        let case = decomposition_from_basis(&g).unwrap().case;
        if missing.contains(&case) {
            *counts.entry(case).or_insert(0) += 1;
            graphs.push(g);
        }
    }
    graphs
}

fn case_counts(graphs: &[Graph]) -> BTreeMap<Case, usize> {
    let mut counts = BTreeMap::new();
    for g in graphs {
        *counts
            .entry(decomposition_from_basis(g).unwrap().case)
            .or_insert(0) += 1;
    }
    counts
}

fn outcomes(graphs: &[Graph]) -> Vec<CheckOutcome> {
    check_graphs(graphs, &CheckConfig::default(), Execution::Parallel)
        .into_iter()
        .map(|r| r.expect("check suite runs on corpus graphs"))
        .collect()
}

/// Counts graphs on which a named check is missing or false.
fn failures(outs: &[CheckOutcome], names: &[&str], required: &[&str]) -> BTreeMap<String, usize> {
    let mut bad = BTreeMap::new();
    for o in outs {
        for name in names {
            let failed = match o.get(name) {
                Some(ok) => !ok,
                None => required.contains(name),
            };
            if failed {
                *bad.entry(name.to_string()).or_insert(0) += 1;
            }
        }
    }
    bad
}

fn basis_exactness(graphs: &[Graph]) -> Verdict {
    let outs = outcomes(graphs);
    let bad = failures(&outs, BASIS_CHECKS, BASIS_CHECKS);
    let sizes_ok = graphs.iter().all(|g| (MIN_N..=MAX_N).contains(&g.n()));
    verdict(
        bad.is_empty() && sizes_ok && graphs.len() >= 500,
        format!(
            "{} graphs, n in {MIN_N}..={MAX_N}, failures {bad:?}",
            graphs.len()
        ),
    )
}

fn formula_vs_oracle(graphs: &[Graph]) -> Verdict {
    let outs = outcomes(graphs);
    let bad = failures(&outs, ORACLE_CHECKS, ORACLE_CHECKS);
    verdict(
        bad.is_empty(),
        format!(
            "{} graphs and their derived forests, failures {bad:?}",
            graphs.len()
        ),
    )
}

fn structure_suite(graphs: &[Graph]) -> Verdict {
    let small: Vec<Graph> = graphs
        .iter()
        .filter(|g| g.n() <= ENUMERATION_N)
        .cloned()
        .collect();
    let outs = outcomes(&small);
    let always = [
        "forest_eg_equals_support",
        "forest_mis_intersection_equals_support",
        "independence_dichotomy",
        "support_core_overlap",
    ];
    let bad = failures(&outs, STRUCTURE_CHECKS, &always);
    let type2 = outs
        .iter()
        .filter(|o| o.get("pendant_sum_identity").is_some())
        .count();
    let removals = outs
        .iter()
        .filter(|o| o.get("root_removal_identities").is_some())
        .count();
    let type1 = outs
        .iter()
        .filter(|o| o.get("pendant_support_inclusion").is_some())
        .count();
    verdict(
        bad.is_empty() && small.len() >= 200 && type1 > 0 && type2 > 0 && removals > 0,
        format!(
            "{} graphs with n <= {ENUMERATION_N} ({type1} Type I, {type2} Type II, {removals} with unsupported forest vertices), failures {bad:?}",
            small.len()
        ),
    )
}

fn structural_agreement(graphs: &[Graph]) -> Verdict {
    let outs = outcomes(graphs);
    let bad = failures(&outs, AGREEMENT_CHECKS, AGREEMENT_CHECKS);
    let mut counts = BTreeMap::new();
    for o in &outs {
        *counts.entry(o.case).or_insert(0usize) += 1;
    }
    let quota = UNICYCLIC_CASES
        .iter()
        .all(|c| counts.get(c).copied().unwrap_or(0) >= CASE_QUOTA);
    let tally: Vec<String> = counts.iter().map(|(c, k)| format!("{c} {k}")).collect();
    verdict(
        bad.is_empty() && quota,
        format!("case hits [{}], mismatches {bad:?}", tally.join(", ")),
    )
}

fn main() -> ExitCode {
    let second = Duration::from_secs(1);
    let mut verdicts = vec![
        ("1 golden Type I example", timed(second, golden_type1)),
        (
            "2 golden Type II pentagon example",
            timed(second, golden_pentagon),
        ),
        (
            "3 golden Type II square example",
            timed(second, golden_square),
        ),
        ("4 cycle nullity", timed(second, cycle_nullities)),
    ];
    let graphs = corpus();
    verdicts.push((
        "5 basis exactness and span",
        timed(Duration::from_secs(60), || basis_exactness(&graphs)),
    ));
    verdicts.push((
        "6 formulas versus oracle",
        timed(Duration::from_secs(120), || formula_vs_oracle(&graphs)),
    ));
    verdicts.push((
        "7 structural predicates",
        timed(Duration::from_secs(120), || structure_suite(&graphs)),
    ));
    verdicts.push((
        "8 structural versus basis agreement",
        timed(Duration::from_secs(120), || structural_agreement(&graphs)),
    ));

    let mut all_ok = true;
    for (name, v) in &verdicts {
        println!(
            "{} criterion {name}: {}",
            if v.ok { "PASS" } else { "FAIL" },
            v.detail
        );
        all_ok &= v.ok;
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
