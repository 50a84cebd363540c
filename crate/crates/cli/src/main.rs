//! `contractk` — command-line front end for the contraction solvers.
//!
//! Reports are line-oriented `key value` text. Everything up to the first
//! blank line is the decision section and is byte-deterministic for a given
//! input; timing follows after the blank line. Exit codes: 0 YES/VALID,
//! 1 NO/INVALID, 2 usage or parse error, 3 enumeration cap exceeded.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};

use contractk::bench::{bench_suite, render_cells, BenchConfig, BenchFamily};
use contractk::io;
use contractk::oracle::{
    oracle_contraction_capped, oracle_osdomatic, oracle_osds, oracle_rbds,
    DEFAULT_ENUMERATION_CAP,
};
use contractk::recognition::{check_split, check_threshold, is_clique, SplitCheck, ThresholdCheck};
use contractk::reductions;
use contractk::solvers::{
    clique_contraction_with_stats, split_contraction_with_stats,
    threshold_contraction_split_with_stats, SolveStats,
};
use contractk::verify::verify_certificate;
use contractk::{bits, Error, Graph, TargetClass};

#[derive(Parser)]
#[command(name = "contractk", version, about = "Edge-contraction solvers for split and threshold targets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test membership in a graph class, with a certificate either way.
    Recognize {
        class: ClassArg,
        input: PathBuf,
    },
    /// Decide a contraction problem with the search-tree solver.
    Solve {
        problem: ContractionProblem,
        input: PathBuf,
        #[command(flatten)]
        opts: BudgetOpts,
    },
    /// Decide a problem by brute force (ground truth).
    Oracle {
        problem: OracleProblem,
        input: PathBuf,
        #[command(flatten)]
        opts: BudgetOpts,
        /// Override the budget t carried in a bipartite instance file.
        #[arg(long)]
        t: Option<u32>,
    },
    /// Translate an instance into another problem, with provenance sidecar.
    Generate {
        reduction: ReductionArg,
        input: PathBuf,
        /// Budget for clique-to-split (the other reductions read t from the
        /// instance file).
        #[arg(long)]
        k: Option<u32>,
        /// Output path; the provenance sidecar goes to `<out>.roles`.
        #[arg(long)]
        out: PathBuf,
    },
    /// Check a certificate file against an instance.
    Verify {
        problem: ContractionProblem,
        input: PathBuf,
        /// Certificate: lines `e <u> <v>`.
        #[arg(long)]
        cert: PathBuf,
        #[arg(long)]
        k: u32,
    },
    /// Run a self-checking instance family (solver vs oracle agreement).
    Bench {
        #[arg(long)]
        family: BenchFamilyArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        cap: Option<u64>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct BudgetOpts {
    /// Contraction budget.
    #[arg(long)]
    k: Option<u32>,
    /// Cap on brute-force subset enumeration (default 10^8; env CONTRACTK_CAP).
    #[arg(long)]
    cap: Option<u64>,
    /// Report format (only `text` is supported).
    #[arg(long, default_value = "text")]
    format: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Split,
    Threshold,
    Clique,
}

#[derive(Clone, Copy, ValueEnum)]
enum ContractionProblem {
    #[value(name = "split-contraction")]
    Split,
    #[value(name = "threshold-contraction")]
    Threshold,
    #[value(name = "clique-contraction")]
    Clique,
}

impl ContractionProblem {
    fn target(self) -> TargetClass {
        match self {
            ContractionProblem::Split => TargetClass::Split,
            ContractionProblem::Threshold => TargetClass::Threshold,
            ContractionProblem::Clique => TargetClass::Clique,
        }
    }

    fn name(self) -> &'static str {
        match self {
            ContractionProblem::Split => "split-contraction",
            ContractionProblem::Threshold => "threshold-contraction",
            ContractionProblem::Clique => "clique-contraction",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleProblem {
    #[value(name = "split-contraction")]
    Split,
    #[value(name = "threshold-contraction")]
    Threshold,
    #[value(name = "clique-contraction")]
    Clique,
    Rbds,
    Osds,
    Osdomatic,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReductionArg {
    #[value(name = "clique-to-split")]
    CliqueToSplit,
    #[value(name = "rbds-to-split")]
    RbdsToSplit,
    #[value(name = "osds-to-osdomatic")]
    OsdsToOsdomatic,
    #[value(name = "osdomatic-to-threshold")]
    OsdomaticToThreshold,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchFamilyArg {
    #[value(name = "labeled-split")]
    LabeledSplit,
    #[value(name = "random-threshold")]
    RandomThreshold,
    #[value(name = "reduction-roundtrip")]
    ReductionRoundtrip,
}

impl BenchFamilyArg {
    fn family(self) -> BenchFamily {
        match self {
            BenchFamilyArg::LabeledSplit => BenchFamily::LabeledSplit,
            BenchFamilyArg::RandomThreshold => BenchFamily::RandomThreshold,
            BenchFamilyArg::ReductionRoundtrip => BenchFamily::ReductionRoundtrip,
        }
    }
}

/// Decision-section accumulator: `key value` lines, then a blank line and
/// the timing section when printed.
struct Report {
    lines: String,
    start: Instant,
}

impl Report {
    fn new(command: &str) -> Report {
        let mut r = Report {
            lines: String::new(),
            start: Instant::now(),
        };
        r.push("command", command);
        r
    }

    fn push(&mut self, key: &str, value: impl std::fmt::Display) {
        writeln!(self.lines, "{key} {value}").expect("string write");
    }

    fn finish(self) -> String {
        format!(
            "{}\ntime_ms {}\n",
            self.lines,
            self.start.elapsed().as_millis()
        )
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            let code = match err.downcast_ref::<Error>() {
                Some(Error::BudgetTooLarge { .. }) => 3,
                _ => 2,
            };
            ExitCode::from(code)
        }
    }
}

fn effective_cap(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("CONTRACTK_CAP")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(DEFAULT_ENUMERATION_CAP)
}

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    Ok(io::parse_graph(&text)?)
}

fn read_bipartite(path: &Path) -> anyhow::Result<contractk::BipartiteInstance> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    Ok(io::parse_bipartite(&text)?)
}

fn check_format(opts: &BudgetOpts) -> anyhow::Result<()> {
    if opts.format != "text" {
        anyhow::bail!("unsupported format '{}'; only 'text' is available", opts.format);
    }
    Ok(())
}

fn require_k(k: Option<u32>) -> anyhow::Result<u32> {
    k.ok_or_else(|| anyhow::anyhow!("--k is required for this problem"))
}

fn fmt_edges(edges: &[contractk::Edge]) -> String {
    if edges.is_empty() {
        "-".to_string()
    } else {
        edges
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn fmt_ids(ids: impl IntoIterator<Item = u32>) -> String {
    let v: Vec<String> = ids.into_iter().map(|i| i.to_string()).collect();
    if v.is_empty() {
        "-".to_string()
    } else {
        v.join(" ")
    }
}

fn run(command: Command) -> anyhow::Result<u8> {
    match command {
        Command::Recognize { class, input } => recognize(class, &input),
        Command::Solve {
            problem,
            input,
            opts,
        } => solve(problem, &input, &opts),
        Command::Oracle {
            problem,
            input,
            opts,
            t,
        } => oracle(problem, &input, &opts, t),
        Command::Generate {
            reduction,
            input,
            k,
            out,
        } => generate(reduction, &input, k, &out),
        Command::Verify {
            problem,
            input,
            cert,
            k,
        } => verify(problem, &input, &cert, k),
        Command::Bench {
            family,
            seed,
            cap,
            out,
        } => bench(family, seed, cap, out.as_deref()),
    }
}

fn recognize(class: ClassArg, input: &Path) -> anyhow::Result<u8> {
    let g = read_graph(input)?;
    let mut report = Report::new("recognize");
    report.push("input", input.display());
    report.push("n", g.vertex_count());
    report.push("m", g.edge_count());
    let yes = match class {
        ClassArg::Split => {
            report.push("class", "split");
            match check_split(&g) {
                SplitCheck::Split(p) => {
                    report.push("decision", "YES");
                    report.push("clique", fmt_ids(bits::iter(p.clique)));
                    report.push("independent", fmt_ids(bits::iter(p.independent)));
                    true
                }
                SplitCheck::NotSplit(occ) => {
                    report.push("decision", "NO");
                    report.push(
                        "witness",
                        format!("{} {}", occ.pattern.name(), fmt_ids(occ.vertices)),
                    );
                    false
                }
            }
        }
        ClassArg::Threshold => {
            report.push("class", "threshold");
            match check_threshold(&g) {
                ThresholdCheck::Threshold(ord) => {
                    report.push("decision", "YES");
                    report.push("clique_order", fmt_ids(ord.clique_order));
                    report.push("indep_order", fmt_ids(ord.indep_order));
                    true
                }
                ThresholdCheck::NotThreshold(occ) => {
                    report.push("decision", "NO");
                    report.push(
                        "witness",
                        format!("{} {}", occ.pattern.name(), fmt_ids(occ.vertices)),
                    );
                    false
                }
            }
        }
        ClassArg::Clique => {
            report.push("class", "clique");
            let yes = is_clique(&g);
            report.push("decision", if yes { "YES" } else { "NO" });
            yes
        }
    };
    print!("{}", report.finish());
    Ok(if yes { 0 } else { 1 })
}

fn push_stats(report: &mut Report, stats: &SolveStats) {
    report.push("branch_nodes", stats.branch_nodes);
    report.push("processed_leaves", stats.processed_leaves);
    report.push("subset_checks", stats.subset_checks);
    report.push("clique_calls", stats.clique_calls);
}

fn solve(problem: ContractionProblem, input: &Path, opts: &BudgetOpts) -> anyhow::Result<u8> {
    check_format(opts)?;
    let k = require_k(opts.k)?;
    let cap = effective_cap(opts.cap);
    let g = read_graph(input)?;
    let mut report = Report::new("solve");
    report.push("problem", problem.name());
    report.push("input", input.display());
    report.push("n", g.vertex_count());
    report.push("m", g.edge_count());
    report.push("k", k);
    let mut stats = SolveStats::default();
    let sol = match problem {
        ContractionProblem::Split => split_contraction_with_stats(&g, k, cap, &mut stats)?,
        ContractionProblem::Threshold => {
            threshold_contraction_split_with_stats(&g, k, &mut stats)?
        }
        ContractionProblem::Clique => clique_contraction_with_stats(&g, k, &mut stats),
    };
    let yes = match sol {
        Some(s) => {
            report.push("decision", "YES");
            report.push("certificate", fmt_edges(&s.edges));
            true
        }
        None => {
            report.push("decision", "NO");
            false
        }
    };
    push_stats(&mut report, &stats);
    print!("{}", report.finish());
    Ok(if yes { 0 } else { 1 })
}

fn oracle(
    problem: OracleProblem,
    input: &Path,
    opts: &BudgetOpts,
    t: Option<u32>,
) -> anyhow::Result<u8> {
    check_format(opts)?;
    let cap = effective_cap(opts.cap);
    let mut report = Report::new("oracle");
    let yes = match problem {
        OracleProblem::Split | OracleProblem::Threshold | OracleProblem::Clique => {
            let target = match problem {
                OracleProblem::Split => TargetClass::Split,
                OracleProblem::Threshold => TargetClass::Threshold,
                _ => TargetClass::Clique,
            };
            let k = require_k(opts.k)?;
            let g = read_graph(input)?;
            report.push(
                "problem",
                match target {
                    TargetClass::Split => "split-contraction",
                    TargetClass::Threshold => "threshold-contraction",
                    TargetClass::Clique => "clique-contraction",
                },
            );
            report.push("input", input.display());
            report.push("n", g.vertex_count());
            report.push("m", g.edge_count());
            report.push("k", k);
            let (sol, stats) = oracle_contraction_capped(&g, k, target, cap)?;
            report.push("subset_checks", stats.leaves);
            match sol {
                Some(s) => {
                    report.push("decision", "YES");
                    report.push("certificate", fmt_edges(&s.edges));
                    true
                }
                None => {
                    report.push("decision", "NO");
                    false
                }
            }
        }
        OracleProblem::Rbds | OracleProblem::Osds | OracleProblem::Osdomatic => {
            let mut inst = read_bipartite(input)?;
            if let Some(t) = t {
                inst = inst.with_budget(t);
            }
            report.push(
                "problem",
                match problem {
                    OracleProblem::Rbds => "rbds",
                    OracleProblem::Osds => "osds",
                    _ => "osdomatic",
                },
            );
            report.push("input", input.display());
            report.push("x", inst.x_count());
            report.push("y", inst.y_count());
            report.push("m", inst.edges().len());
            report.push("t", inst.budget());
            match problem {
                OracleProblem::Rbds => match oracle_rbds(&inst) {
                    Some(set) => {
                        report.push("decision", "YES");
                        report.push("solution", fmt_ids(set));
                        true
                    }
                    None => {
                        report.push("decision", "NO");
                        false
                    }
                },
                OracleProblem::Osds => match oracle_osds(&inst) {
                    Some(set) => {
                        report.push("decision", "YES");
                        report.push("solution", fmt_ids(set));
                        true
                    }
                    None => {
                        report.push("decision", "NO");
                        false
                    }
                },
                _ => match oracle_osdomatic(&inst) {
                    Some(blocks) => {
                        report.push("decision", "YES");
                        for (i, b) in blocks.iter().enumerate() {
                            report.push(&format!("block{i}"), fmt_ids(b.iter().copied()));
                        }
                        true
                    }
                    None => {
                        report.push("decision", "NO");
                        false
                    }
                },
            }
        }
    };
    print!("{}", report.finish());
    Ok(if yes { 0 } else { 1 })
}

fn generate(
    reduction: ReductionArg,
    input: &Path,
    k: Option<u32>,
    out: &Path,
) -> anyhow::Result<u8> {
    let mut report = Report::new("generate");
    report.push("input", input.display());
    let roles_path = {
        let mut s = out.as_os_str().to_owned();
        s.push(".roles");
        PathBuf::from(s)
    };
    match reduction {
        ReductionArg::CliqueToSplit => {
            let g = read_graph(input)?;
            let k = require_k(k)?;
            let art = reductions::split_from_clique(&g, k)?;
            report.push("reduction", "clique-to-split");
            report.push("budget", art.budget);
            report.push("n", art.graph.vertex_count());
            report.push("m", art.graph.edge_count());
            std::fs::write(out, io::format_graph(&art.graph)?)?;
            std::fs::write(&roles_path, io::format_roles(&art.roles))?;
        }
        ReductionArg::RbdsToSplit => {
            let inst = read_bipartite(input)?;
            let art = reductions::split_from_rbds(&inst)?;
            report.push("reduction", "rbds-to-split");
            report.push("budget", art.budget);
            report.push("n", art.graph.vertex_count());
            report.push("m", art.graph.edge_count());
            std::fs::write(out, io::format_graph(&art.graph)?)?;
            std::fs::write(&roles_path, io::format_roles(&art.roles))?;
        }
        ReductionArg::OsdsToOsdomatic => {
            let inst = read_bipartite(input)?;
            let art = reductions::osdomatic_from_osds(&inst)?;
            report.push("reduction", "osds-to-osdomatic");
            report.push("budget", art.instance.budget());
            report.push("x", art.instance.x_count());
            report.push("y", art.instance.y_count());
            report.push("m", art.instance.edges().len());
            std::fs::write(out, io::format_bipartite(&art.instance))?;
            std::fs::write(&roles_path, io::format_roles(&art.roles))?;
        }
        ReductionArg::OsdomaticToThreshold => {
            let inst = read_bipartite(input)?;
            let art = reductions::threshold_from_osdomatic(&inst)?;
            report.push("reduction", "osdomatic-to-threshold");
            report.push("budget", art.budget);
            report.push("n", art.graph.vertex_count());
            report.push("m", art.graph.edge_count());
            std::fs::write(out, io::format_graph(&art.graph)?)?;
            std::fs::write(&roles_path, io::format_roles(&art.roles))?;
        }
    }
    report.push("out", out.display());
    report.push("roles", roles_path.display());
    print!("{}", report.finish());
    Ok(0)
}

fn verify(
    problem: ContractionProblem,
    input: &Path,
    cert: &Path,
    k: u32,
) -> anyhow::Result<u8> {
    let g = read_graph(input)?;
    let cert_text = std::fs::read_to_string(cert)
        .with_context(|| format!("reading {}", cert.display()))?;
    let edges = io::parse_edge_list(&cert_text)?;
    let mut report = Report::new("verify");
    report.push("problem", problem.name());
    report.push("input", input.display());
    report.push("k", k);
    report.push("certificate", fmt_edges(&edges));
    let ok = verify_certificate(&g, &edges, problem.target(), k)?;
    report.push("decision", if ok { "VALID" } else { "INVALID" });
    print!("{}", report.finish());
    Ok(if ok { 0 } else { 1 })
}

fn bench(
    family: BenchFamilyArg,
    seed: u64,
    cap: Option<u64>,
    out: Option<&Path>,
) -> anyhow::Result<u8> {
    let cfg = BenchConfig {
        family: family.family(),
        seed,
        cap: effective_cap(cap),
    };
    let start = Instant::now();
    let report = bench_suite(&cfg)?;
    let mut text = String::new();
    writeln!(text, "command bench").unwrap();
    writeln!(text, "family {}", cfg.family.name()).unwrap();
    writeln!(text, "seed {}", cfg.seed).unwrap();
    text.push_str(&render_cells(&report));
    writeln!(text, "\ntime_ms {}", start.elapsed().as_millis()).unwrap();
    match out {
        Some(p) => std::fs::write(p, &text)?,
        None => print!("{text}"),
    }
    Ok(if report.total_disagreements() == 0 { 0 } else { 1 })
}
