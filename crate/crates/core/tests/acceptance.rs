//! Acceptance suite. Each criterion prints one `[PASS]`/`[FAIL]` line; the
//! test fails if any criterion fails.
//!
//! Run with `cargo test -p bottleneck-steiner --test acceptance -- --nocapture`
//! to see the report.

use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use bottleneck_steiner::io::generate::{generate, generate_instance, GenSpec};
use bottleneck_steiner::{
    all_pairs_steiner_paths, build_edge_list, build_threshold_graph, normalized_weight,
    parse_instance, ratio, render_svg, solve_bisect, solve_exact, solve_sweep, terminal_mst,
    ExactResult, Instance, SolveReport, Weight, WeightMatrix,
};

const SUITE_SIZE: usize = 300;
const SUITE_SEED: u64 = 0x6b62_7374;
const RATIO_TOL: f64 = 1e-9;
const SUITE_TIME_LIMIT: Duration = Duration::from_secs(60);
const PATH_ORACLE_INSTANCES: usize = 100;
const SMOKE_TIME_LIMIT: Duration = Duration::from_secs(10);
const SMOKE_MAX_SLOPE: f64 = 6.0;

struct Outcome {
    id: u32,
    name: &'static str,
    passed: bool,
    detail: String,
}

struct SuiteCase {
    spec: GenSpec,
    inst: Instance,
    sweep: SolveReport,
    bisect: SolveReport,
    exact: ExactResult,
}

/// n ∈ [2, 7], m ∈ [1, 8], k ∈ [0, min(4, m)], uniform in [0, 100]².
fn suite_specs() -> Vec<GenSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(SUITE_SEED);
    (0..SUITE_SIZE)
        .map(|_| {
            let n = rng.gen_range(2..=7);
            let m = rng.gen_range(1..=8);
            let k = rng.gen_range(0..=4usize.min(m));
            GenSpec::uniform(n, m, k, rng.gen())
        })
        .collect()
}

fn run_suite() -> (Vec<SuiteCase>, Duration) {
    let start = Instant::now();
    let cases = suite_specs()
        .into_iter()
        .map(|spec| {
            let inst = generate_instance(&spec).unwrap();
            let sweep = solve_sweep(&inst).unwrap();
            let bisect = solve_bisect(&inst).unwrap();
            let exact = solve_exact(&inst).unwrap();
            SuiteCase {
                spec,
                inst,
                sweep,
                bisect,
                exact,
            }
        })
        .collect();
    (cases, start.elapsed())
}

fn approximation_guarantee(cases: &[SuiteCase], elapsed: Duration) -> Outcome {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    let mut failures = Vec::new();
    for c in cases {
        let r = c.sweep.tree.bottleneck / c.exact.optimum_bottleneck;
        assert_eq!(r, ratio(&c.sweep, &c.exact));
        lo = lo.min(r);
        hi = hi.max(r);
        if !(1.0 - RATIO_TOL..=2.0 + RATIO_TOL).contains(&r) {
            failures.push(format!("seed {} ratio {r}", c.spec.seed));
        }
    }
    let in_time = elapsed < SUITE_TIME_LIMIT;
    Outcome {
        id: 1,
        name: "approximation guarantee",
        passed: failures.is_empty() && in_time && cases.len() >= SUITE_SIZE,
        detail: format!(
            "{} instances, ratio in [{lo:.6}, {hi:.6}], {:.2?} (limit {:?}){}",
            cases.len(),
            elapsed,
            SUITE_TIME_LIMIT,
            summarize(&failures)
        ),
    }
}

fn lower_bound(cases: &[SuiteCase]) -> Outcome {
    let failures: Vec<String> = cases
        .iter()
        .filter(|c| c.exact.optimum_bottleneck < c.sweep.tree.threshold_used)
        .map(|c| {
            format!(
                "seed {}: optimum {} < threshold {}",
                c.spec.seed, c.exact.optimum_bottleneck, c.sweep.tree.threshold_used
            )
        })
        .collect();
    let tight = cases
        .iter()
        .filter(|c| c.exact.optimum_bottleneck == c.sweep.tree.threshold_used)
        .count();
    Outcome {
        id: 2,
        name: "lower bound: optimum >= accepting threshold",
        passed: failures.is_empty(),
        detail: format!(
            "{} instances, {tight} with equality{}",
            cases.len(),
            summarize(&failures)
        ),
    }
}

fn tight_instance() -> Outcome {
    let inst = parse_instance("k 1\nT 0 0\nT 10 0\nS 5 0\n").unwrap();
    let approx = solve_sweep(&inst).unwrap();
    let exact = solve_exact(&inst).unwrap();
    let r = ratio(&approx, &exact);
    Outcome {
        id: 3,
        name: "tight instance",
        passed: approx.tree.bottleneck == 10.0 && exact.optimum_bottleneck == 5.0 && r == 2.0,
        detail: format!(
            "approx {}, exact {}, ratio {r}",
            approx.tree.bottleneck, exact.optimum_bottleneck
        ),
    }
}

fn normalized_weight_example() -> Outcome {
    // Terminals a, b, c, d joined by a–b (3), d–c (2), b–c (3); other pairs heavier.
    let table = [[0, 3, 5, 6], [3, 0, 3, 5], [5, 3, 0, 2], [6, 5, 2, 0]];
    let tree = terminal_mst(&WeightMatrix::from_fn(4, |p, q| {
        Weight::finite(table[p][q])
    }));
    let mut weights: Vec<u64> = tree.edges.iter().map(|e| e.w.get().unwrap()).collect();
    weights.sort();
    let direct = normalized_weight([3, 2, 3].map(Weight::finite));
    Outcome {
        id: 4,
        name: "normalized weight of {3, 2, 3}",
        passed: weights == [2, 3, 3]
            && tree.normalized_cost == Weight::finite(3)
            && direct == Weight::finite(3),
        detail: format!(
            "MST weights {weights:?}, C(T) = {}, direct sum = {direct}",
            tree.normalized_cost
        ),
    }
}

fn sweep_bisect_equivalence(cases: &[SuiteCase]) -> Outcome {
    let failures: Vec<String> = cases
        .iter()
        .filter(|c| {
            c.sweep.tree != c.bisect.tree || c.sweep.threshold_index != c.bisect.threshold_index
        })
        .map(|c| format!("seed {}", c.spec.seed))
        .collect();
    let sweep_probes: usize = cases.iter().map(|c| c.sweep.probes).sum();
    let bisect_probes: usize = cases.iter().map(|c| c.bisect.probes).sum();
    Outcome {
        id: 5,
        name: "sweep/bisect equivalence",
        passed: failures.is_empty(),
        detail: format!(
            "{} instances, probes sweep {sweep_probes} vs bisect {bisect_probes}{}",
            cases.len(),
            summarize(&failures)
        ),
    }
}

fn feasibility_invariants(cases: &[SuiteCase]) -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for c in cases {
        for (label, report) in [("sweep", &c.sweep), ("bisect", &c.bisect)] {
            checked += 1;
            let tree = &report.tree;
            let max_len = tree.edges.iter().map(|e| e.len).fold(0.0, f64::max);
            let result = tree.validate(&c.inst);
            if result.is_err()
                || tree.num_steiners() > c.inst.budget()
                || tree.bottleneck != max_len
                || tree.bottleneck > 2.0 * tree.threshold_used
            {
                failures.push(format!("seed {} {label}: {result:?}", c.spec.seed));
            }
        }
        if let Err(e) = c.exact.witness.validate(&c.inst) {
            failures.push(format!("seed {} exact witness: {e}", c.spec.seed));
        }
    }
    Outcome {
        id: 6,
        name: "feasibility invariants",
        passed: failures.is_empty(),
        detail: format!("{checked} solver trees checked{}", summarize(&failures)),
    }
}

/// Minimum number of interior vertices over all simple `p`–`q` paths whose
/// interior lies in `S` and whose edges are no longer than `t`.
fn brute_force_steiner_count(inst: &Instance, t: f64, p: usize, q: usize) -> Option<usize> {
    fn dfs(
        inst: &Instance,
        t: f64,
        at: usize,
        target: usize,
        interior: usize,
        visited: &mut Vec<bool>,
        best: &mut Option<usize>,
    ) {
        for v in 0..inst.num_vertices() {
            if visited[v] || inst.dist(at, v) > t {
                continue;
            }
            if v == target {
                *best = Some(best.map_or(interior, |b| b.min(interior)));
            } else if inst.is_steiner(v) {
                visited[v] = true;
                dfs(inst, t, v, target, interior + 1, visited, best);
                visited[v] = false;
            }
        }
    }
    if p == q {
        return Some(0);
    }
    let mut visited = vec![false; inst.num_vertices()];
    visited[p] = true;
    let mut best = None;
    dfs(inst, t, p, q, 0, &mut visited, &mut best);
    best
}

fn path_oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SUITE_SEED ^ 0x7061_7468);
    let mut failures = Vec::new();
    let mut comparisons = 0usize;
    for _ in 0..PATH_ORACLE_INSTANCES {
        let n = rng.gen_range(2..=5);
        let m = rng.gen_range(0..=8 - n);
        let inst = generate_instance(&GenSpec::uniform(n, m, 0, rng.gen())).unwrap();
        let edges = build_edge_list(&inst);
        for &t in edges.distinct_lengths() {
            let table = all_pairs_steiner_paths(&build_threshold_graph(&inst, &edges, t), &inst);
            for p in 0..n {
                for q in 0..n {
                    comparisons += 1;
                    let expected = brute_force_steiner_count(&inst, t, p, q);
                    let got = table.weight(p, q).get().map(|w| w as usize);
                    if got != expected {
                        failures.push(format!("t={t} ({p},{q}): got {got:?}, oracle {expected:?}"));
                    }
                }
            }
        }
    }
    Outcome {
        id: 7,
        name: "path oracle equivalence",
        passed: failures.is_empty(),
        detail: format!(
            "{PATH_ORACLE_INSTANCES} instances, {comparisons} pair/threshold comparisons{}",
            summarize(&failures)
        ),
    }
}

fn median_bisect_time(total: usize, seeds: &[u64]) -> Duration {
    let n = total / 4;
    let m = total - n;
    let k = n / 5;
    let mut times: Vec<Duration> = seeds
        .iter()
        .map(|&seed| {
            let inst = generate_instance(&GenSpec::uniform(n, m, k, seed)).unwrap();
            let start = Instant::now();
            let report = solve_bisect(&inst).unwrap();
            let elapsed = start.elapsed();
            assert!(report.tree.validate(&inst).is_ok());
            elapsed
        })
        .collect();
    times.sort();
    times[times.len() / 2]
}

fn complexity_smoke() -> Outcome {
    let seeds = [1, 2, 3, 4, 5];
    let sizes = [50usize, 100, 200];
    let medians: Vec<Duration> = sizes
        .iter()
        .map(|&s| median_bisect_time(s, &seeds))
        .collect();

    // Least-squares slope of log(time) against log(n + m).
    let xs: Vec<f64> = sizes.iter().map(|&s| (s as f64).ln()).collect();
    let ys: Vec<f64> = medians
        .iter()
        .map(|d| d.as_secs_f64().max(1e-6).ln())
        .collect();
    let mx = xs.iter().sum::<f64>() / xs.len() as f64;
    let my = ys.iter().sum::<f64>() / ys.len() as f64;
    let slope = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (x - mx) * (y - my))
        .sum::<f64>()
        / xs.iter().map(|x| (x - mx).powi(2)).sum::<f64>();

    let largest = *medians.last().unwrap();
    Outcome {
        id: 8,
        name: "complexity smoke",
        passed: largest < SMOKE_TIME_LIMIT && slope < SMOKE_MAX_SLOPE,
        detail: format!(
            "medians {:?} for n+m {sizes:?}; n=50 m=150 k=10 median {largest:.2?} (limit {SMOKE_TIME_LIMIT:?}); log-log slope {slope:.2} (limit {SMOKE_MAX_SLOPE})",
            medians
        ),
    }
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let bin = env!("CARGO_BIN_EXE_kbst");
    let mut failures = Vec::new();

    let gen_out = |name: &str| {
        let path = dir.path().join(name);
        let status = Command::new(bin)
            .args([
                "gen", "--n", "6", "--m", "9", "--k", "3", "--seed", "99", "-o",
            ])
            .arg(&path)
            .status()
            .unwrap();
        assert!(status.success());
        std::fs::read(path).unwrap()
    };
    let first = gen_out("a.txt");
    if first != gen_out("b.txt") {
        failures.push("gen output differs".to_string());
    }
    let spec = GenSpec::uniform(6, 9, 3, 99);
    if first != generate(&spec).unwrap().into_bytes() {
        failures.push("gen CLI differs from library generator".to_string());
    }

    let instance_path = dir.path().join("a.txt");
    let solve_out = |svg: &str| {
        let out = Command::new(bin)
            .arg("solve")
            .arg(&instance_path)
            .arg("--svg")
            .arg(dir.path().join(svg))
            .output()
            .unwrap();
        assert!(out.status.success());
        (out.stdout, std::fs::read(dir.path().join(svg)).unwrap())
    };
    let (stdout_a, svg_a) = solve_out("a.svg");
    let (stdout_b, svg_b) = solve_out("b.svg");
    if stdout_a != stdout_b {
        failures.push("solve stdout differs".to_string());
    }
    if svg_a != svg_b {
        failures.push("solve --svg output differs".to_string());
    }

    let inst = generate_instance(&spec).unwrap();
    let tree = solve_sweep(&inst).unwrap().tree;
    if render_svg(&inst, &tree) != render_svg(&inst, &solve_sweep(&inst).unwrap().tree) {
        failures.push("render_svg differs".to_string());
    }
    if render_svg(&inst, &tree).into_bytes() != svg_a {
        failures.push("CLI SVG differs from render_svg".to_string());
    }

    Outcome {
        id: 9,
        name: "determinism",
        passed: failures.is_empty(),
        detail: format!(
            "gen, solve (text + SVG) and render_svg repeated{}",
            summarize(&failures)
        ),
    }
}

fn summarize(failures: &[String]) -> String {
    match failures {
        [] => String::new(),
        [first, ..] => format!("; {} failure(s), first: {first}", failures.len()),
    }
}

#[test]
fn acceptance() {
    let (cases, elapsed) = run_suite();
    let outcomes = vec![
        approximation_guarantee(&cases, elapsed),
        lower_bound(&cases),
        tight_instance(),
        normalized_weight_example(),
        sweep_bisect_equivalence(&cases),
        feasibility_invariants(&cases),
        path_oracle_equivalence(),
        complexity_smoke(),
        determinism(),
    ];

    for o in &outcomes {
        println!(
            "[{}] criterion {}: {} ({})",
            if o.passed { "PASS" } else { "FAIL" },
            o.id,
            o.name,
            o.detail
        );
    }
    let failed: Vec<u32> = outcomes
        .iter()
        .filter(|o| !o.passed)
        .map(|o| o.id)
        .collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
