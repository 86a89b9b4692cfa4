//! Command-line parsing and the three commands.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;
use symlab_core::autgrp::{automorphism_group_with, DEFAULT_VERTEX_CAP};
use symlab_core::classify::{classify_case, find_regular_subgroup, profile, EvidenceMode};
use symlab_core::constructions::{catalog, lemma_5_6_pipeline, PipelineOptions, Tier, CATALOG_NAMES};
use symlab_core::fp::{EnumOptions, DEFAULT_MAX_COSETS};
use symlab_core::{Error, Graph, Result};

use crate::report::{self, CheckJson, CriterionJson, RunReport};
use crate::verify::{self, Outcome};
use crate::{dot, exit_code, io, EXIT_DISCREPANCY, EXIT_OK};

#[derive(Debug, Parser)]
#[command(name = "symlab", version, about = "Cayley graphs, clique graphs and their symmetry")]
pub struct Cli {
    /// Upper bound on worker threads; the engine runs on one.
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,
    /// Reserved; results do not depend on it.
    #[arg(long, global = true, value_name = "N")]
    pub seed: Option<u64>,
    /// Include wall-clock timings in the JSON report.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TierArg {
    Fast,
    Full,
}

impl From<TierArg> for Tier {
    fn from(t: TierArg) -> Tier {
        match t {
            TierArg::Fast => Tier::Fast,
            TierArg::Full => Tier::Full,
        }
    }
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write the JSON report here; `-` is standard output.
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Write the graph in Graphviz format (at most 500 vertices).
    #[arg(long, value_name = "PATH")]
    pub dot: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a catalog entry and check its expected facts.
    Build {
        /// One of the catalog names, e.g. example-6.3.
        entry: String,
        /// Parameter of construction-II.
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, value_enum, default_value = "fast")]
        tier: TierArg,
        #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
        max_cosets: usize,
        /// Largest graph whose full automorphism group is computed.
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        aut_cap: usize,
        /// Realize groups marked best-effort instead of skipping them.
        #[arg(long)]
        realize_best_effort: bool,
        /// Write Γ as graph JSON.
        #[arg(long, value_name = "PATH")]
        graph_out: Option<PathBuf>,
        /// Write the clique graph Σ as graph JSON.
        #[arg(long, value_name = "PATH")]
        sigma_out: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Symmetry profile of a graph given as an edge list or graph JSON.
    Classify {
        graph: PathBuf,
        /// A group of automorphisms to use instead of the full group.
        #[arg(long, value_name = "PATH")]
        group: Option<PathBuf>,
        /// Largest graph whose full automorphism group is computed.
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        aut_cap: usize,
        /// Also decide whether the graph is a Cayley graph.
        #[arg(long)]
        cayley: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Run the acceptance criteria.
    VerifyPaper {
        #[arg(long, value_enum, default_value = "fast")]
        tier: TierArg,
        /// Run only these criteria.
        #[arg(long, value_delimiter = ',', value_name = "IDS")]
        criteria: Vec<u8>,
        /// Write the JSON report here; `-` is standard output.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
}

fn tier_name(t: TierArg) -> &'static str {
    verify::tier_name(t.into())
}

fn emit(path: &Path, text: &str) -> Result<()> {
    if path == Path::new("-") {
        let mut out = std::io::stdout().lock();
        out.write_all(text.as_bytes())
            .map_err(|e| Error::Input(format!("standard output: {e}")))
    } else {
        io::write(path, text)
    }
}

/// Prints to standard output unless it carries the JSON report.
fn say(json: &Option<PathBuf>, line: &str) {
    if json.as_deref() != Some(Path::new("-")) {
        println!("{line}");
    }
}

struct Session {
    report: RunReport,
    timing: BTreeMap<String, u64>,
    started: Instant,
}

impl Session {
    fn new(command: Vec<String>, tier: &str) -> Self {
        Session {
            report: RunReport::new(command, tier),
            timing: BTreeMap::new(),
            started: Instant::now(),
        }
    }

    fn lap(&mut self, name: &str) {
        self.timing
            .insert(name.to_string(), self.started.elapsed().as_millis() as u64);
    }

    /// Writes the report and returns the exit status.
    fn finish(mut self, res: Result<u8>, json: &Option<PathBuf>, timing: bool) -> u8 {
        let mut code = match &res {
            Ok(c) => *c,
            Err(e) => {
                log::error!("{e}");
                self.report.error = Some(e.to_string());
                exit_code(e)
            }
        };
        if code == EXIT_OK && !self.report.discrepancies.is_empty() {
            code = EXIT_DISCREPANCY;
        }
        if timing {
            self.lap("total");
            self.report.timing_ms = Some(self.timing);
        }
        if let Some(path) = json {
            if let Err(e) = emit(path, &self.report.to_json()) {
                log::error!("{e}");
                return exit_code(&e).max(code);
            }
        }
        code
    }
}

/// Parses the arguments, runs the command and returns the exit status.
pub fn run(cli: Cli) -> u8 {
    if let Some(t) = cli.threads {
        log::debug!("--threads {t}: the engine runs on one thread");
    }
    let timing = cli.timing;
    match cli.command {
        Command::Build {
            entry,
            n,
            tier,
            max_cosets,
            aut_cap,
            realize_best_effort,
            graph_out,
            sigma_out,
            out,
        } => {
            let mut command = vec!["build".to_string(), entry.clone(), "--tier".into(), tier_name(tier).into()];
            if let Some(n) = n {
                command.extend(["--n".into(), n.to_string()]);
            }
            if realize_best_effort {
                command.push("--realize-best-effort".into());
            }
            let mut s = Session::new(command, tier_name(tier));
            let opts = PipelineOptions {
                tier: tier.into(),
                enumeration: EnumOptions {
                    max_cosets,
                    ..EnumOptions::default()
                },
                vertex_cap: aut_cap,
                realize_best_effort,
                ..PipelineOptions::default()
            };
            let res = build(&mut s, &entry, n, &opts, graph_out.as_deref(), sigma_out.as_deref(), &out);
            s.finish(res, &out.json, timing)
        }
        Command::Classify {
            graph,
            group,
            aut_cap,
            cayley,
            out,
        } => {
            let mut command = vec!["classify".to_string()];
            if cayley {
                command.push("--cayley".into());
            }
            if group.is_some() {
                command.push("--group".into());
            }
            let mut s = Session::new(command, "full");
            let res = classify(&mut s, &graph, group.as_deref(), aut_cap, cayley, &out);
            s.finish(res, &out.json, timing)
        }
        Command::VerifyPaper { tier, criteria, json } => {
            let mut command = vec!["verify-paper".to_string(), "--tier".into(), tier_name(tier).into()];
            if !criteria.is_empty() {
                let ids: Vec<String> = criteria.iter().map(u8::to_string).collect();
                command.extend(["--criteria".into(), ids.join(",")]);
            }
            let mut s = Session::new(command, tier_name(tier));
            let res = verify_paper(&mut s, tier.into(), &criteria, &json);
            s.finish(res, &json, timing)
        }
    }
}

fn build(
    s: &mut Session,
    name: &str,
    n: Option<u32>,
    opts: &PipelineOptions,
    graph_out: Option<&Path>,
    sigma_out: Option<&Path>,
    out: &Output,
) -> Result<u8> {
    if !CATALOG_NAMES.contains(&name) {
        return Err(Error::Input(format!(
            "unknown entry '{name}'; known entries: {}",
            CATALOG_NAMES.join(", ")
        )));
    }
    let entry = catalog(name, n)?;
    log::info!("building {}", entry.name);
    let p = lemma_5_6_pipeline(&entry, opts)?;
    s.lap("pipeline");
    report::add_pipeline(&mut s.report, &p);
    for st in &p.stages {
        say(&out.json, &format!("{:<18} {:<7} {}", st.name, report::status_name(st.status), st.detail));
    }
    for d in &p.discrepancies {
        say(&out.json, &format!("discrepancy: {d}"));
    }
    if let (Some(path), Some(g)) = (graph_out, &p.gamma) {
        io::write(path, &io::graph_json(g))?;
    }
    if let (Some(path), Some(g)) = (sigma_out, &p.sigma) {
        io::write(path, &io::graph_json(g))?;
    }
    if let (Some(path), Some(g)) = (&out.dot, &p.gamma) {
        emit(path, &dot::to_dot(g, &entry.name)?)?;
    }
    Ok(if p.passed() { EXIT_OK } else { EXIT_DISCREPANCY })
}

fn classify(
    s: &mut Session,
    path: &Path,
    group: Option<&Path>,
    aut_cap: usize,
    cayley: bool,
    out: &Output,
) -> Result<u8> {
    let g: Graph = io::read_graph(path)?;
    if let Some(p) = &out.dot {
        emit(p, &dot::to_dot(&g, "graph")?)?;
    }
    let (group, mode) = match group {
        Some(p) => {
            let a = io::read_group(p)?;
            if a.degree() != g.order() {
                return Err(Error::Input(format!(
                    "group has degree {}, graph has {} vertices",
                    a.degree(),
                    g.order()
                )));
            }
            if let Some(bad) = a.generators().iter().find(|x| !g.preserves_adjacency(x.images())) {
                return Err(Error::Contract(format!(
                    "generator {:?} is not an automorphism",
                    bad.cycles()
                )));
            }
            (a, EvidenceMode::Structural)
        }
        None => {
            let a = automorphism_group_with(&g, &[], aut_cap)?;
            s.report.fact("aut_search_nodes", a.nodes);
            (a.group, EvidenceMode::Full)
        }
    };
    s.lap("automorphisms");
    s.report.evidence = Some(report::mode_name(mode).to_string());
    s.report.fact("aut_order", group.order().to_string());
    let prof = profile(&g, &group, mode)?;
    let case = match prof.locally_2kn {
        Some(_) => Some(classify_case(&g, &group, mode)?),
        None => None,
    };
    s.lap("profile");
    if cayley {
        let regular = find_regular_subgroup(&group)?;
        s.report.fact("cayley", Value::from(regular.is_some()));
    }
    let basics = g.basics();
    let pj = report::profile("graph", &prof, &basics, case.as_ref());
    say(&out.json, &format!("vertices {}, edges {}, |Aut| = {} ({})", basics.order, basics.size, pj.group_order, pj.mode));
    for (k, f) in &pj.flags {
        say(&out.json, &format!("{k:<28} {}", f.value));
    }
    if let Some(c) = &pj.case {
        say(&out.json, &format!("case: {}", c.label));
    }
    s.report.profiles.push(pj);
    Ok(EXIT_OK)
}

fn verify_paper(s: &mut Session, tier: Tier, ids: &[u8], json: &Option<PathBuf>) -> Result<u8> {
    let selected: Vec<&'static verify::Criterion> = if ids.is_empty() {
        verify::Verifier::selected(tier)
    } else {
        ids.iter()
            .map(|&i| verify::criterion(i).ok_or_else(|| Error::Input(format!("no criterion {i}"))))
            .collect::<Result<_>>()?
    };
    let results = verify::run_criteria(&selected, |r| say(json, &r.line()));
    let mut failed = false;
    for r in &results {
        s.timing
            .insert(format!("criterion-{}", r.criterion.id), r.elapsed.as_millis() as u64);
        if r.is_blocking_failure() {
            failed = true;
            s.report
                .discrepancies
                .push(format!("criterion {} failed: {}", r.criterion.id, r.criterion.title));
        }
        s.report.criteria.push(CriterionJson {
            id: r.criterion.id,
            title: r.criterion.title.to_string(),
            tier: verify::tier_name(r.criterion.tier).to_string(),
            status: r.outcome.name().to_string(),
            blocking: r.criterion.blocking,
            measured: r.measured.clone(),
            checks: r
                .checks
                .iter()
                .map(|c| CheckJson {
                    name: c.name.clone(),
                    passed: c.passed,
                    detail: strip_seconds(&c.name, &c.detail),
                })
                .collect(),
        });
    }
    let passed = results.iter().filter(|r| r.outcome == Outcome::Pass).count();
    say(json, &format!("{passed} of {} criteria passed", results.len()));
    Ok(if failed { EXIT_DISCREPANCY } else { EXIT_OK })
}

/// Budget checks report seconds, which vary between runs; the report keeps
/// only whether they passed.
fn strip_seconds(name: &str, detail: &str) -> String {
    if name.ends_with("within budget") || name == "budget" {
        String::new()
    } else {
        detail.to_string()
    }
}
