mod args;
mod manifest;

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::Parser;
use erogers::blowup::CliqueCover;
use erogers::efr::{efr_certificate, efr_hypergraph};
use erogers::io::{parse_graph, parse_hypergraph, write_graph, write_hypergraph};
use erogers::pipelines::{
    brute_force_f, ckfree_subset, ksfree_recursion, max_f_free_measure, ramsey_witness_check, random_girth_hypergraph,
    theorem1_build, theorem4_part1_build, theorem4_part2_build, CkFreeOptions, Theorem1Options, Theorem4Part1Options,
    Theorem4Part2Options,
};
use erogers::search::{
    dependent_random_choice, erdos_rado_sunflower, erdos_rado_threshold, find_k_cycle_within, max_independent_set,
    spencer_independent_set, DrcStatus, Optimality, SetSearch,
};
use erogers::subgraph::contains_subgraph;
use erogers::{Audit, Budget, Certificate, Embedding, Error, Hypergraph, SeededRng, VertexSet, Witness};

use args::{BudgetArgs, Cli, Command, Construct, OptOut, Oracle, Pipeline, Search, SeedArg, Verify};
use manifest::{Manifest, MANIFEST_SUFFIX};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;
const EXIT_FAULT: u8 = 4;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Core(Error::Io(e))
    }
}

/// What a command produced, before anything is written.
struct Outcome {
    summary: String,
    exit: u8,
    /// Bytes to write, keyed by path; only present when `--out` was given.
    files: Vec<(PathBuf, Vec<u8>)>,
    /// Where the manifest goes, when the command wrote anything.
    out: Option<PathBuf>,
    seed: Option<u64>,
}

impl Outcome {
    fn report(summary: String, exit: u8) -> Self {
        Outcome { summary, exit, files: Vec::new(), out: None, seed: None }
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: cannot start {t} threads: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let started = Instant::now();
    let result = match &cli.command {
        Command::Replay { manifest } => replay(manifest),
        command => run(command).and_then(|o| finish(o, command, &argv, started)),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => ExitCode::from(report_error(&e)),
    }
}

fn report_error(e: &CliError) -> u8 {
    match e {
        CliError::Usage(msg) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        CliError::Core(Error::Precondition { what, witness }) => {
            eprintln!("precondition failed: {what}");
            eprintln!("witness: {witness}");
            EXIT_PRECONDITION
        }
        CliError::Core(e @ Error::ValidationFault(_)) => {
            eprintln!("error: {e}");
            EXIT_FAULT
        }
        CliError::Core(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn replay(path: &Path) -> Result<u8, CliError> {
    let problems = manifest::replay(path)?;
    if problems.is_empty() {
        println!("replay: identical");
        Ok(0)
    } else {
        for p in &problems {
            println!("replay: {p}");
        }
        Ok(EXIT_FAIL)
    }
}

/// Writes the outputs and the manifest, then prints the summary.
fn finish(o: Outcome, command: &Command, argv: &[String], started: Instant) -> Result<u8, CliError> {
    let Some(out) = o.out else {
        println!("{}", o.summary);
        return Ok(o.exit);
    };
    let mut outputs = BTreeMap::new();
    for (path, bytes) in &o.files {
        fs::write(path, bytes)?;
        outputs.insert(path.display().to_string(), manifest::digest(bytes));
    }
    let parameters = serde_json::to_value(command).expect("arguments are plain data");
    let mut inputs = BTreeMap::new();
    for p in manifest::input_paths(&parameters) {
        inputs.insert(p.clone(), manifest::digest(&fs::read(&p)?));
    }
    let m = Manifest {
        argv: argv.to_vec(),
        command: manifest::command_name(&parameters),
        cwd: std::env::current_dir()?,
        inputs,
        outputs,
        parameters,
        seed: o.seed,
        version: env!("CARGO_PKG_VERSION").to_string(),
        wall_clock_ms: started.elapsed().as_millis() as u64,
    };
    fs::write(sibling(&out, MANIFEST_SUFFIX), m.to_json())?;
    println!("{}", o.summary);
    Ok(o.exit)
}

fn read_text(p: &Path) -> Result<String, CliError> {
    fs::read_to_string(p).map_err(|e| CliError::Usage(format!("{}: {e}", p.display())))
}

/// Parse errors keep their line number and gain the file name.
fn located<T>(p: &Path, r: Result<T, Error>) -> Result<T, CliError> {
    r.map_err(|e| match e {
        Error::Parse { .. } | Error::InvalidInput(_) => CliError::Usage(format!("{}: {e}", p.display())),
        e => e.into(),
    })
}

fn read_graph(p: &Path) -> Result<erogers::Graph, CliError> {
    located(p, parse_graph(&read_text(p)?))
}

fn read_hypergraph(p: &Path) -> Result<Hypergraph, CliError> {
    located(p, parse_hypergraph(&read_text(p)?))
}

fn sibling(path: &Path, suffix: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(suffix);
    s.into()
}

fn seed(arg: SeedArg) -> Result<u64, CliError> {
    match arg.seed {
        Some(s) => Ok(s),
        None if std::env::var("REQUIRE_SEED").is_ok_and(|v| v == "1") => {
            Err(CliError::Usage("REQUIRE_SEED=1: randomized commands need an explicit --seed".into()))
        }
        None => Ok(0),
    }
}

fn budget(b: BudgetArgs) -> Option<Budget> {
    if b.budget_nodes.is_none() && b.budget_ms.is_none() {
        return None;
    }
    Some(Budget { nodes: b.budget_nodes, time: b.budget_ms.map(Duration::from_millis) })
}

fn name(p: &Path) -> String {
    p.file_name().map_or_else(|| p.display().to_string(), |s| s.to_string_lossy().into_owned())
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "fail"
    }
}

fn status(s: Optimality) -> &'static str {
    match s {
        Optimality::Optimal => "optimal",
        Optimality::LowerBound => "lower-bound",
    }
}

fn cover_hypergraph(cover: &CliqueCover) -> Result<Hypergraph, Error> {
    Hypergraph::new(cover.host().n(), cover.cliques().iter().map(VertexSet::to_vec).collect(), None)
}

/// Certificate plus instance files under `--out`.
fn construct_outcome(
    out: &Path,
    instance: String,
    extra: Vec<(&str, String)>,
    cert: &Certificate,
    seed: Option<u64>,
    headline: String,
) -> Outcome {
    let mut files = vec![(out.to_path_buf(), instance.into_bytes())];
    for (suffix, text) in extra {
        files.push((sibling(out, suffix), text.into_bytes()));
    }
    let cert_path = sibling(out, ".cert.json");
    files.push((cert_path.clone(), cert.to_json().into_bytes()));
    let summary = format!("{headline} verdict={} certificate={}", verdict(cert.all_pass()), cert_path.display());
    Outcome { summary, exit: 0, files, out: Some(out.to_path_buf()), seed }
}

/// Certificate only, when `--out` was given.
fn search_outcome(out: &OptOut, cert: &Certificate, seed: Option<u64>, summary: String) -> Outcome {
    let files = out.out.iter().map(|p| (p.clone(), cert.to_json().into_bytes())).collect();
    Outcome { summary, exit: 0, files, out: out.out.clone(), seed }
}

fn run(command: &Command) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let ms = || started.elapsed().as_millis();
    match command {
        Command::Construct(c) => construct(c),
        Command::Verify(v) => verify(v),
        Command::Search(s) => search(s, ms),
        Command::Pipeline(p) => pipeline(p, ms),
        Command::Oracle(o) => oracle(o, ms),
        Command::Replay { .. } => unreachable!("handled in main"),
    }
}

fn construct(c: &Construct) -> Result<Outcome, CliError> {
    match c {
        Construct::Efr { d, r, big_r, out } => {
            let inst = efr_hypergraph(*d, *r, *big_r)?;
            let cert = efr_certificate(&inst);
            let h = &inst.hypergraph;
            let head = format!("construct=efr n={} edges={}", h.n(), h.edge_count());
            Ok(construct_outcome(&out.out, write_hypergraph(h), vec![], &cert, None, head))
        }
        Construct::Theorem1 { d, r, big_r, f, seed: s, budget: b, out } => {
            let seed = seed(*s)?;
            let f = read_graph(f)?;
            let mut opts = Theorem1Options::default();
            if let Some(b) = budget(*b) {
                opts.measure_budget = b;
            }
            let build = theorem1_build(*d, *r, *big_r, &f, &SeededRng::new(seed, "theorem1"), opts)?;
            let cover = write_hypergraph(&cover_hypergraph(&build.cover)?);
            let host = write_graph(build.cover.host());
            let g = &build.graph;
            let tf = build
                .certificate
                .verdict("theorem1.triangle_free")
                .map_or("unknown", |v| verdict(v == erogers::Verdict::Pass));
            let head = format!("construct=theorem1 n={} edges={} triangle_free={tf}", g.n(), g.edge_count());
            Ok(construct_outcome(
                &out.out,
                write_graph(g),
                vec![(".host.g", host), (".cover.hg", cover)],
                &build.certificate,
                Some(seed),
                head,
            ))
        }
        Construct::GirthHypergraph { t, r, seed: s, out } => {
            let seed = seed(*s)?;
            let gh = random_girth_hypergraph(*t, *r, &SeededRng::new(seed, "girth-hypergraph"))?;
            let h = &gh.hypergraph;
            let p = &gh.params;
            let mut cert = Certificate::new("girth-hypergraph");
            cert.param("fstar.t", p.t).param("fstar.r", p.r).seed("fstar", seed);
            cert.measure_f64("fstar.p", p.p).measure_f64("fstar.delta", p.delta);
            cert.measure("fstar.sampled_edges", p.sampled_edges).measure("fstar.surviving_edges", p.surviving_edges);
            for class in &p.pruning {
                cert.measure(format!("fstar.pruned.len{}", class.length), class.removed_edges);
            }
            match h.check_girth_at_least(p.r + 2) {
                Audit::Pass => cert.pass("fstar.girth_at_least_r_plus_2"),
                Audit::Violation(cyc) => cert.fail("fstar.girth_at_least_r_plus_2", h.edges_witness(&cyc.edges)),
            };
            let head =
                format!("construct=girth-hypergraph n={} edges={} girth_at_least={}", h.n(), h.edge_count(), p.r + 2);
            Ok(construct_outcome(&out.out, write_hypergraph(h), vec![], &cert, Some(seed), head))
        }
        Construct::Theorem4Part1 { g, f, n, d, girth_target, seed: s, budget: b, out } => {
            let seed = seed(*s)?;
            let (g, f) = (read_graph(g)?, read_graph(f)?);
            let mut opts = Theorem4Part1Options::default();
            if let Some(b) = budget(*b) {
                opts.budget = b;
                opts.measure_budget = b;
            }
            let rng = SeededRng::new(seed, "theorem4-part1");
            let build = theorem4_part1_build(&g, &f, *n, *d, *girth_target, &rng, opts)?;
            let cover = write_hypergraph(&cover_hypergraph(&build.cover)?);
            let host = write_graph(build.cover.host());
            let h = &build.graph;
            let head = format!("construct=theorem4-part1 n={} edges={}", h.n(), h.edge_count());
            Ok(construct_outcome(
                &out.out,
                write_graph(h),
                vec![(".host.g", host), (".cover.hg", cover)],
                &build.certificate,
                Some(seed),
                head,
            ))
        }
        Construct::Theorem4Part2 { g, t, pair, seed: s, budget: b, out } => {
            let seed = seed(*s)?;
            let g = read_graph(g)?;
            let mut opts = Theorem4Part2Options { pair: *pair, ..Default::default() };
            if let Some(b) = budget(*b) {
                opts.budget = b;
            }
            let build = theorem4_part2_build(&g, *t, &SeededRng::new(seed, "theorem4-part2"), opts)?;
            let fstar = write_hypergraph(&build.fstar.hypergraph);
            let h = &build.graph;
            let head = format!(
                "construct=theorem4-part2 pair={},{} n={} edges={}",
                build.family.v,
                build.family.w,
                h.n(),
                h.edge_count()
            );
            Ok(construct_outcome(
                &out.out,
                write_graph(h),
                vec![(".fstar.hg", fstar)],
                &build.certificate,
                Some(seed),
                head,
            ))
        }
    }
}

fn fail_with(what: &str, witness: Witness) -> Outcome {
    Outcome::report(format!("fail: {what}; witness {witness}"), EXIT_FAIL)
}

fn verify(v: &Verify) -> Result<Outcome, CliError> {
    let pass = || Outcome::report("pass".into(), 0);
    match v {
        Verify::Linear { input } => {
            let h = read_hypergraph(input)?;
            Ok(match h.check_linear() {
                Audit::Pass => pass(),
                Audit::Violation(pair) => fail_with("two edges share at least two vertices", h.edges_witness(&pair)),
            })
        }
        Verify::HyperTriangleFree { input } => {
            let h = read_hypergraph(input)?;
            Ok(match h.check_triangle_free() {
                Ok(Audit::Pass) => pass(),
                Ok(Audit::Violation(tri)) => fail_with("three edges form a triangle", h.edges_witness(&tri)),
                Err(Error::Precondition { what, witness }) => fail_with(&what, witness),
                Err(e) => return Err(e.into()),
            })
        }
        Verify::Girth { input, at_least } => {
            let h = read_hypergraph(input)?;
            Ok(match h.check_girth_at_least(*at_least) {
                Audit::Pass => pass(),
                Audit::Violation(c) => {
                    fail_with(&format!("loose cycle of length {}", c.len()), h.edges_witness(&c.edges))
                }
            })
        }
        Verify::SubgraphFree { input, pattern, budget: b } => {
            let (host, pat) = (read_graph(input)?, read_graph(pattern)?);
            Ok(match contains_subgraph(&host, &pat, budget(*b).unwrap_or(Budget::UNLIMITED))? {
                Embedding::Absent => pass(),
                Embedding::Found(map) => fail_with("pattern embeds", Witness::Map(map)),
                Embedding::Unknown => Outcome::report("unknown: budget exhausted before a proof".into(), EXIT_FAIL),
            })
        }
        Verify::CliqueCover { input, cliques } => {
            let g = read_graph(input)?;
            let h = read_hypergraph(cliques)?;
            if h.n() != g.n() {
                return Err(CliError::Usage(format!("cover has {} vertices, graph has {}", h.n(), g.n())));
            }
            let sets = h
                .edges()
                .iter()
                .map(|e| VertexSet::from_vertices(g.n(), e.iter().copied()))
                .collect::<Result<Vec<_>, _>>()?;
            let cover = CliqueCover::unchecked(g, sets)?;
            if let Audit::Violation((i, u, v)) = cover.check_cliques() {
                return Ok(fail_with(&format!("set {i} is not a clique"), Witness::Vertices(vec![u, v])));
            }
            if let Audit::Violation(pair) = cover.check_edge_disjoint() {
                return Ok(fail_with("two sets share an edge", h.edges_witness(&pair)));
            }
            if let Audit::Violation((u, v)) = cover.check_covering() {
                return Ok(fail_with("edge lies in no set", Witness::Vertices(vec![u, v])));
            }
            Ok(pass())
        }
    }
}

fn set_measurements(cert: &mut Certificate, r: &SetSearch) {
    cert.measure("size", r.size()).measure("set", r.set.to_vec());
    cert.measure("status", status(r.status)).measure("nodes", r.nodes);
}

fn search(s: &Search, ms: impl Fn() -> u128) -> Result<Outcome, CliError> {
    match s {
        Search::MaxFfree { input, f, budget: b, out } => {
            let (g, pat) = (read_graph(input)?, read_graph(f)?);
            let r = max_f_free_measure(&g, &pat, budget(*b).unwrap_or(Budget::UNLIMITED))?;
            let sub = g.induced_subgraph(&r.set)?;
            if !contains_subgraph(&sub, &pat, Budget::UNLIMITED)?.is_absent() {
                return Err(Error::ValidationFault("returned set contains F".into()).into());
            }
            let mut cert = Certificate::new("search.max-ffree");
            cert.param("F", &pat);
            set_measurements(&mut cert, &r);
            cert.pass("set_is_f_free");
            let summary = format!(
                "instance={} size={} status={} verdict=pass runtime_ms={}",
                name(input),
                r.size(),
                status(r.status),
                ms()
            );
            Ok(search_outcome(out, &cert, None, summary))
        }
        Search::IndependentSet { input, budget: b, out } => {
            let g = read_graph(input)?;
            let r = max_independent_set(&g, budget(*b).unwrap_or(Budget::UNLIMITED));
            if !g.is_independent(&r.set) {
                return Err(Error::ValidationFault("returned set is not independent".into()).into());
            }
            let mut cert = Certificate::new("search.independent-set");
            set_measurements(&mut cert, &r);
            cert.pass("set_is_independent");
            let summary = format!(
                "instance={} size={} status={} verdict=pass runtime_ms={}",
                name(input),
                r.size(),
                status(r.status),
                ms()
            );
            Ok(search_outcome(out, &cert, None, summary))
        }
        Search::Spencer { input, trials, seed: s, out } => {
            let seed = seed(*s)?;
            let h = read_hypergraph(input)?;
            let r = spencer_independent_set(&h, &SeededRng::new(seed, "spencer"), *trials)?;
            if !h.is_independent(&r.set) {
                return Err(Error::ValidationFault("returned set contains an edge".into()).into());
            }
            let meets = r.set.len() as f64 >= r.bound;
            let mut cert = Certificate::new("search.spencer");
            cert.param("trials", r.trials).param("k", r.k).seed("spencer", seed);
            cert.measure("size", r.set.len()).measure("set", r.set.to_vec()).measure("best_trial", r.best_trial);
            cert.measure_f64("average_degree", r.average_degree).measure_f64("p", r.p).measure_f64("bound", r.bound);
            cert.measure("meets_bound", meets).pass("set_is_independent");
            let summary = format!(
                "instance={} size={} bound={:.3} meets_bound={meets} verdict=pass runtime_ms={}",
                name(input),
                r.set.len(),
                r.bound,
                ms()
            );
            Ok(search_outcome(out, &cert, Some(seed), summary))
        }
        Search::Drc { input, x, y, s, trials, seed: sd, out } => {
            let seed = seed(*sd)?;
            let g = read_graph(input)?;
            let xs = VertexSet::from_vertices(g.n(), x.iter().copied())?;
            let ys = VertexSet::from_vertices(g.n(), y.iter().copied())?;
            let r = dependent_random_choice(&g, &xs, &ys, *s, &SeededRng::new(seed, "drc"), *trials)?;
            let met = r.status == DrcStatus::TargetMet;
            let mut cert = Certificate::new("search.drc");
            cert.param("s", r.s).param("retries", r.retries).seed("drc", seed);
            cert.measure("edges", r.edges).measure_f64("gamma", r.gamma);
            cert.measure_f64("pair_threshold", r.pair_threshold).measure_f64("size_target", r.size_target);
            cert.measure("size", r.z.len()).measure("z", r.z.to_vec()).measure("min_pair_common", r.min_pair_common);
            cert.measure("target_met", met).measure("best_retry", r.best_retry).pass("pairs_have_common_neighbors");
            let summary = format!(
                "instance={} size={} status={} verdict=pass runtime_ms={}",
                name(input),
                r.z.len(),
                if met { "target-met" } else { "target-missed" },
                ms()
            );
            Ok(search_outcome(out, &cert, Some(seed), summary))
        }
        Search::Sunflower { input, m, out } => {
            let h = read_hypergraph(input)?;
            let family = h.edges().to_vec();
            let found = erdos_rado_sunflower(&family, *m)?;
            let mut cert = Certificate::new("search.sunflower");
            cert.param("m", m).measure("family_size", family.len());
            if let Some(t) = h.uniformity() {
                cert.measure("threshold", erdos_rado_threshold(t, *m).map(|x| x.to_string()));
            }
            let summary = match &found {
                Some(sf) => {
                    if !sf.is_valid() {
                        return Err(Error::ValidationFault("sunflower petals do not meet in the core".into()).into());
                    }
                    cert.measure("petals", &sf.petals).measure("core", &sf.core);
                    cert.measure("by_recursion", sf.by_recursion).pass("sunflower_valid");
                    format!(
                        "instance={} found=true core={:?} petals={} verdict=pass runtime_ms={}",
                        name(input),
                        sf.core,
                        sf.petals.len(),
                        ms()
                    )
                }
                None => {
                    cert.measure("found", false);
                    format!("instance={} found=false verdict=pass runtime_ms={}", name(input), ms())
                }
            };
            Ok(search_outcome(out, &cert, None, summary))
        }
    }
}

fn ck_options(trials: usize, b: BudgetArgs) -> CkFreeOptions {
    let mut opts = CkFreeOptions { spencer_trials: trials, ..Default::default() };
    if let Some(b) = budget(b) {
        opts.budget = b;
    }
    opts
}

fn pipeline(p: &Pipeline, ms: impl Fn() -> u128) -> Result<Outcome, CliError> {
    match p {
        Pipeline::Ckfree { input, k, trials, seed: s, budget: b, out } => {
            let seed = seed(*s)?;
            let g = read_graph(input)?;
            let r = ckfree_subset(&g, *k, &SeededRng::new(seed, "ckfree"), ck_options(*trials, *b))?;
            if let Some(c) = find_k_cycle_within(&g, &r.set, *k)? {
                return Err(Error::ValidationFault(format!("returned set contains the cycle {c:?}")).into());
            }
            let summary = format!(
                "instance={} branch={} winner={} size={} verdict={} runtime_ms={}",
                name(input),
                r.branch,
                r.winner,
                r.set.len(),
                verdict(r.certificate.all_pass()),
                ms()
            );
            Ok(search_outcome(out, &r.certificate, Some(seed), summary))
        }
        Pipeline::Ksfree { input, s, k, trials, seed: sd, budget: b, out } => {
            let seed = seed(*sd)?;
            let g = read_graph(input)?;
            let r = ksfree_recursion(&g, *s, *k, &SeededRng::new(seed, "ksfree"), ck_options(*trials, *b))?;
            if let Some(c) = find_k_cycle_within(&g, &r.set, *k)? {
                return Err(Error::ValidationFault(format!("returned set contains the cycle {c:?}")).into());
            }
            let path: Vec<String> = r.trace.iter().map(|st| st.action.clone()).collect();
            let summary = format!(
                "instance={} branch={} size={} verdict={} runtime_ms={}",
                name(input),
                path.join(">"),
                r.set.len(),
                verdict(r.certificate.all_pass()),
                ms()
            );
            Ok(search_outcome(out, &r.certificate, Some(seed), summary))
        }
    }
}

fn oracle(o: &Oracle, ms: impl Fn() -> u128) -> Result<Outcome, CliError> {
    match o {
        Oracle::BruteForceF { f, g, n, budget: b, out } => {
            let (fg, gg) = (read_graph(f)?, read_graph(g)?);
            let r = brute_force_f(&fg, &gg, *n, budget(*b).unwrap_or(Budget::UNLIMITED))?;
            let mut cert = Certificate::new("oracle.brute-force-f");
            cert.param("F", &fg).param("G", &gg).param("n", n);
            cert.measure("value", r.value).measure("exact", r.exact).measure("graphs", r.graphs);
            if let Some(w) = &r.witness {
                cert.measure("witness", write_graph(w));
            }
            let value = r.value.map_or("none".to_string(), |v| v.to_string());
            let summary = format!("value={value} exact={} graphs={} n={n} runtime_ms={}", r.exact, r.graphs, ms());
            Ok(search_outcome(out, &cert, None, summary))
        }
        Oracle::RamseyWitness { h, f, g, t, rf_t, budget: b, out } => {
            let (hg, fg, gg) = (read_graph(h)?, read_graph(f)?, read_graph(g)?);
            let cert = ramsey_witness_check(&hg, &fg, &gg, *t, *rf_t, budget(*b).unwrap_or(Budget::UNLIMITED))?;
            let summary = format!(
                "instance={} verdict={} runtime_ms={}",
                name(h),
                if cert.all_pass() {
                    "pass"
                } else if cert.predicates.values().any(|p| p.verdict == erogers::Verdict::Fail) {
                    "fail"
                } else {
                    "unknown"
                },
                ms()
            );
            Ok(search_outcome(out, &cert, None, summary))
        }
    }
}
