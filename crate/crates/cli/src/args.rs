use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "erogers", version, about = "Constructions, audits and exact oracles for Erdős–Rogers functions")]
pub struct Cli {
    /// Worker threads (default: all cores). Results do not depend on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Build an instance and its certificate.
    #[command(subcommand)]
    Construct(Construct),
    /// Audit an existing file.
    #[command(subcommand)]
    Verify(Verify),
    /// Run one of the search engines.
    #[command(subcommand)]
    Search(Search),
    /// Run a subset-finding pipeline.
    #[command(subcommand)]
    Pipeline(Pipeline),
    /// Exact small-case oracles.
    #[command(subcommand)]
    Oracle(Oracle),
    /// Rerun a recorded manifest and compare outputs byte for byte.
    Replay { manifest: PathBuf },
}

#[derive(Args, Debug, Clone, Copy, Serialize)]
pub struct SeedArg {
    /// RNG seed (default 0; mandatory when REQUIRE_SEED=1).
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Args, Debug, Clone, Copy, Serialize)]
pub struct BudgetArgs {
    /// Search-node limit (deterministic).
    #[arg(long)]
    pub budget_nodes: Option<u64>,
    /// Wall-clock limit in milliseconds (not replay-stable).
    #[arg(long)]
    pub budget_ms: Option<u64>,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct OutArg {
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct OptOut {
    /// Write the certificate here (and a manifest beside it).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construct {
    /// Sphere-point progression hypergraph.
    Efr {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: u64,
        #[arg(long = "R")]
        big_r: usize,
        #[command(flatten)]
        #[serde(flatten)]
        out: OutArg,
    },
    /// Triangle-free graph with no large F-free set.
    Theorem1 {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: u64,
        #[arg(long = "R")]
        big_r: usize,
        #[arg(long = "f", alias = "pattern-f")]
        f: PathBuf,
        #[command(flatten)]
        #[serde(flatten)]
        seed: SeedArg,
        #[command(flatten)]
        #[serde(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        #[serde(flatten)]
        out: OutArg,
    },
    /// Random r-uniform hypergraph pruned to girth at least r + 2.
    GirthHypergraph {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        #[serde(flatten)]
        seed: SeedArg,
        #[command(flatten)]
        #[serde(flatten)]
        out: OutArg,
    },
    /// Random blowups over the square of a high-girth bipartite graph.
    Theorem4Part1 {
        #[arg(long = "g", alias = "pattern-g")]
        g: PathBuf,
        #[arg(long = "f", alias = "pattern-f")]
        f: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 12)]
        girth_target: usize,
        #[command(flatten)]
        #[serde(flatten)]
        seed: SeedArg,
        #[command(flatten)]
        #[serde(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        #[serde(flatten)]
        out: OutArg,
    },
    /// G-free graph from copies of G* in a high-girth hypergraph.
    Theorem4Part2 {
        #[arg(long = "g", alias = "pattern-g")]
        g: PathBuf,
        #[arg(long)]
        t: usize,
        /// Nonadjacent pair `v,w` (default: lexicographically first).
        #[arg(long, value_parser = parse_pair)]
        pair: Option<(usize, usize)>,
        #[command(flatten)]
        #[serde(flatten)]
        seed: SeedArg,
        #[command(flatten)]
        #[serde(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        #[serde(flatten)]
        out: OutArg,
    },
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verify {
    Linear {
        input: PathBuf,
    },
    HyperTriangleFree {
        input: PathBuf,
    },
    Girth {
        input: PathBuf,
        #[arg(long)]
        at_least: usize,
    },
    SubgraphFree {
        input: PathBuf,
        #[arg(long)]
        pattern: PathBuf,
        #[command(flatten)]
        #[serde(flatten)]
        budget: BudgetArgs,
    },
    /// Check that the sets of a hypergraph file are edge-disjoint cliques covering the graph.
    CliqueCover {
        input: PathBuf,
        #[arg(long)]
        cliques: PathBuf,
    },
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Search {
    MaxFfree {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long = "f", alias = "pattern-f")]
        f: PathBuf,
        #[command(flatten)]
        #[serde(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        #[serde(flatten)]
        out: OptOut,
    },
    IndependentSet {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        #[serde(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        #[serde(flatten)]
        out: OptOut,
    },
    Spencer {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[command(flatten)]
        #[serde(flatten)]
        seed: SeedArg,
        #[command(flatten)]
        #[serde(flatten)]
        out: OptOut,
    },
    Drc {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        x: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        y: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        s: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[command(flatten)]
        #[serde(flatten)]
        seed: SeedArg,
        #[command(flatten)]
        #[serde(flatten)]
        out: OptOut,
    },
    /// Sunflower among the edges of a uniform hypergraph file.
    Sunflower {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        #[serde(flatten)]
        out: OptOut,
    },
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Pipeline {
    Ckfree {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[command(flatten)]
        #[serde(flatten)]
        seed: SeedArg,
        #[command(flatten)]
        #[serde(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        #[serde(flatten)]
        out: OptOut,
    },
    Ksfree {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[command(flatten)]
        #[serde(flatten)]
        seed: SeedArg,
        #[command(flatten)]
        #[serde(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        #[serde(flatten)]
        out: OptOut,
    },
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Oracle {
    BruteForceF {
        #[arg(long = "f", alias = "pattern-f")]
        f: PathBuf,
        #[arg(long = "g", alias = "pattern-g")]
        g: PathBuf,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        #[serde(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        #[serde(flatten)]
        out: OptOut,
    },
    RamseyWitness {
        #[arg(long = "h")]
        h: PathBuf,
        #[arg(long = "f", alias = "pattern-f")]
        f: PathBuf,
        #[arg(long = "g", alias = "pattern-g")]
        g: PathBuf,
        #[arg(long)]
        t: usize,
        #[arg(long = "rft")]
        rf_t: usize,
        #[command(flatten)]
        #[serde(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        #[serde(flatten)]
        out: OptOut,
    },
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected v,w")?;
    let a = a.trim().parse().map_err(|e| format!("{e}"))?;
    let b = b.trim().parse().map_err(|e| format!("{e}"))?;
    Ok((a, b))
}
