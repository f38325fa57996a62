use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use log::{info, warn};
use powdom::audit::{audit as audit_graph, BoundId, BoundReport};
use powdom::zero_forcing::forcing_run;
use powdom::{
    chains_and_reversal, check_reversal_lemma, emit_edge_list, emit_graph6, generate, is_zfs,
    parse_graph6, propagate, reverse_sequence, solve, Family, ForcingPolicy, Graph, SolveOptions,
    SolveResult, VertexSet,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::CliError;
use crate::input::{self, InputFormat, Named};
use crate::{Config, OutputFormat, PolicyArg};

/// Text for stdout plus an error to report after it has been written.
pub struct Output {
    pub text: String,
    pub failure: Option<CliError>,
}

impl Output {
    fn ok(text: String) -> Output {
        Output {
            text,
            failure: None,
        }
    }
}

fn pool(cfg: &Config) -> Result<rayon::ThreadPool, CliError> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cfg.threads {
        b = b.num_threads(t);
    }
    b.build()
        .map_err(|e| CliError::Usage(format!("thread pool: {e}")))
}

/// Options for one solve; `parallel` spreads a single search over the pool.
fn solve_opts(cfg: &Config, parallel: bool) -> SolveOptions {
    SolveOptions {
        max_n: cfg.max_n,
        threads: if parallel { 0 } else { 1 },
        per_component: cfg.per_component,
        all_pds_cap: cfg.all_pds_cap,
        ..Default::default()
    }
}

fn unsupported(cmd: &str, format: OutputFormat) -> CliError {
    CliError::Usage(format!("{cmd} does not support --format {format:?}").to_lowercase())
}

fn load(path: &Path, cfg: &Config) -> Result<Vec<Named>, CliError> {
    let text = input::read_text(path)?;
    let format = cfg
        .input_format
        .unwrap_or_else(|| InputFormat::detect(path, &text));
    if text.trim().is_empty() {
        return Err(CliError::Parse(format!(
            "{}: no graph in input",
            path.display()
        )));
    }
    input::parse_all(&text, format, cfg.indexing())
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// One object for a single graph, an array otherwise.
fn to_json_list<T: Serialize>(items: &[T]) -> String {
    match items {
        [one] => to_json(one),
        many => to_json(&many),
    }
}

fn set_str(s: VertexSet) -> String {
    s.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn ids(ids: impl Iterator<Item = BoundId>) -> Vec<String> {
    ids.map(|b| b.to_string()).collect()
}

#[derive(Serialize)]
struct AnalyzeRecord {
    id: String,
    graph6: String,
    graph: powdom::GraphJson,
    solve: SolveResult,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_labels: Option<Vec<String>>,
    report: BoundReport,
    violated: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<powdom::PropagationTrace>,
}

fn analyze_one(named: &Named, trace: bool, cfg: &Config) -> Result<AnalyzeRecord, CliError> {
    let g = &named.graph;
    let ctx = |e: CliError| e.context(&format!("graph {}", named.id));
    let res = solve(g, &solve_opts(cfg, true)).map_err(|e| ctx(CliError::from_core(e)))?;
    let report = audit_graph(g, &res, named.id.clone()).map_err(|e| ctx(CliError::from_core(e)))?;
    let violated = ids(report.violations().map(|e| e.bound_id));
    for v in &violated {
        warn!("graph {}: bound {v} violated", named.id);
    }
    let trace = match trace {
        true => Some(propagate(g, res.witness).map_err(|e| ctx(CliError::from_core(e)))?),
        false => None,
    };
    Ok(AnalyzeRecord {
        id: named.id.clone(),
        graph6: emit_graph6(g),
        graph: g.to_json(),
        witness_labels: g
            .labels()
            .map(|_| res.witness.iter().map(|v| g.label(v)).collect()),
        solve: res,
        report,
        violated,
        trace,
    })
}

pub fn analyze(
    path: &Path,
    format: OutputFormat,
    trace: bool,
    cfg: &Config,
) -> Result<Output, CliError> {
    if !matches!(
        format,
        OutputFormat::Json | OutputFormat::Table | OutputFormat::Graph6
    ) {
        return Err(unsupported("analyze", format));
    }
    let graphs = load(path, cfg)?;
    if format == OutputFormat::Graph6 {
        return Ok(Output::ok(
            graphs
                .iter()
                .map(|n| emit_graph6(&n.graph) + "\n")
                .collect(),
        ));
    }
    let pool = pool(cfg)?;
    let records: Vec<AnalyzeRecord> = pool.install(|| {
        graphs
            .iter()
            .map(|n| analyze_one(n, trace, cfg))
            .collect::<Result<_, _>>()
    })?;
    let text = match format {
        OutputFormat::Json => to_json_list(&records),
        _ => records
            .iter()
            .map(analyze_table)
            .collect::<Vec<_>>()
            .join("\n"),
    };
    Ok(Output::ok(text))
}

fn analyze_table(r: &AnalyzeRecord) -> String {
    let inv = &r.report.invariants;
    let mut s = String::new();
    let _ = writeln!(s, "graph {}  ({})", r.id, r.graph6);
    let _ = writeln!(
        s,
        "n = {}  m = {}  delta = {}  Delta = {}  omega = {}",
        inv.n,
        r.graph.edges.len(),
        inv.delta,
        inv.max_degree,
        inv.omega.map_or("-".into(), |w| w.to_string())
    );
    let _ = writeln!(
        s,
        "gamma_p = {}  rad_p = {}  witness = {}  minimum sets = {}",
        r.solve.gamma_p,
        r.solve.rad_p,
        r.solve.witness,
        r.solve.min_pds_count.map_or("-".into(), |c| c.to_string())
    );
    s.push_str(&bounds_table(&r.report));
    if let Some(t) = &r.trace {
        for (i, (layer, live)) in t.layers.iter().zip(&t.live).enumerate() {
            let _ = writeln!(s, "P{} = {layer}  L{} = {live}", i + 1, i + 1);
        }
    }
    s
}

fn bounds_table(rep: &BoundReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<7}{:<11}{:<4}{:>10}  {:<10}{:<7}reason",
        "bound", "applicable", "rel", "value", "satisfied", "tight"
    );
    for e in &rep.entries {
        let value = e.bound_value.map_or("-".into(), |v| format!("{v:.3}"));
        let _ = writeln!(
            s,
            "{:<7}{:<11}{:<4}{:>10}  {:<10}{:<7}{}",
            e.bound_id.to_string(),
            e.applicable,
            e.relation.to_string(),
            value,
            e.satisfied,
            e.tight,
            e.reason
        );
    }
    for note in &rep.notes {
        let _ = writeln!(s, "note: {note}");
    }
    s
}

#[derive(Serialize)]
struct FamilyRecord {
    family: String,
    params: BTreeMap<String, usize>,
    expected: powdom::ExpectedProfile,
    graph6: String,
    graph: powdom::GraphJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<Verification>,
}

#[derive(Serialize)]
struct Verification {
    gamma_p: usize,
    rad_p: usize,
    witness: VertexSet,
    matches: Option<bool>,
}

pub fn family(
    name: &str,
    params: &[String],
    format: OutputFormat,
    verify: bool,
    cfg: &Config,
) -> Result<Output, CliError> {
    if format == OutputFormat::Csv {
        return Err(unsupported("family", format));
    }
    let family: Family = name.parse().map_err(CliError::from_core)?;
    let params: Vec<usize> = params
        .iter()
        .map(|p| {
            p.parse().map_err(|_| {
                CliError::Usage(format!("parameter {p:?} is not a non-negative integer"))
            })
        })
        .collect::<Result<_, _>>()?;
    let inst = generate(family, &params).map_err(CliError::from_core)?;
    let title = format!(
        "{family}({})",
        params
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    );

    let verified = if verify {
        let mut opts = solve_opts(cfg, true);
        // The base graphs of F are disconnected and carry no claim.
        opts.per_component |= inst.expected.gamma_p.is_none();
        let res = pool(cfg)?
            .install(|| solve(&inst.graph, &opts))
            .map_err(CliError::from_core)?;
        let matches = inst
            .expected
            .gamma_p
            .zip(inst.expected.rad_p)
            .map(|want| want == (res.gamma_p, res.rad_p));
        if matches == Some(false) {
            return Err(CliError::Verify(format!(
                "{title}: expected (gamma_p, rad_p) = ({}, {}), solver found ({}, {})",
                inst.expected.gamma_p.unwrap(),
                inst.expected.rad_p.unwrap(),
                res.gamma_p,
                res.rad_p
            )));
        }
        Some(Verification {
            gamma_p: res.gamma_p,
            rad_p: res.rad_p,
            witness: res.witness,
            matches,
        })
    } else {
        None
    };

    let record = FamilyRecord {
        family: family.to_string(),
        params: inst.params.clone(),
        expected: inst.expected.clone(),
        graph6: emit_graph6(&inst.graph),
        graph: inst.graph.to_json(),
        verified,
    };
    let profile = profile_line(&title, &record);
    let text = match format {
        OutputFormat::Json => to_json(&record),
        OutputFormat::Graph6 => {
            eprintln!("{profile}");
            format!("{}\n", record.graph6)
        }
        OutputFormat::Edgelist => {
            eprintln!("{profile}");
            emit_edge_list(&inst.graph)
        }
        _ => format!(
            "{profile}\n{}\n{}",
            record.graph6,
            emit_edge_list(&inst.graph)
        ),
    };
    Ok(Output::ok(text))
}

fn profile_line(title: &str, r: &FamilyRecord) -> String {
    let e = &r.expected;
    let opt = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
    let mut s = format!(
        "{title}: n = {} delta = {} Delta = {} gamma_p = {} rad_p = {} ({:?})",
        e.n,
        e.delta,
        opt(e.max_degree),
        opt(e.gamma_p),
        opt(e.rad_p),
        e.status
    );
    if let Some(v) = &r.verified {
        let _ = write!(
            s,
            "; solver: gamma_p = {} rad_p = {} witness = {}",
            v.gamma_p, v.rad_p, v.witness
        );
    }
    s
}

#[derive(Serialize)]
struct BatchRecord {
    line: usize,
    graph6: String,
    n: usize,
    gamma_p: usize,
    rad_p: usize,
    witness: VertexSet,
    tight: Vec<String>,
    violated: Vec<String>,
}

#[derive(Serialize, Default)]
struct BatchSummary {
    graphs: usize,
    errors: usize,
    violations: usize,
    tight: BTreeMap<String, usize>,
    violated: BTreeMap<String, usize>,
}

fn batch_one(line: usize, text: &str, cfg: &Config) -> Result<BatchRecord, CliError> {
    let g = parse_graph6(text).map_err(CliError::from_core)?;
    let res = solve(&g, &solve_opts(cfg, false)).map_err(CliError::from_core)?;
    let rep = audit_graph(&g, &res, text).map_err(CliError::from_core)?;
    Ok(BatchRecord {
        line,
        graph6: text.to_string(),
        n: g.order(),
        gamma_p: res.gamma_p,
        rad_p: res.rad_p,
        witness: res.witness,
        tight: ids(rep
            .entries
            .iter()
            .filter(|e| e.applicable && e.tight)
            .map(|e| e.bound_id)),
        violated: ids(rep.violations().map(|e| e.bound_id)),
    })
}

pub fn batch(path: &Path, format: OutputFormat, cfg: &Config) -> Result<Output, CliError> {
    if !matches!(
        format,
        OutputFormat::Json | OutputFormat::Csv | OutputFormat::Table
    ) {
        return Err(unsupported("batch", format));
    }
    if cfg.input_format.is_some_and(|f| f != InputFormat::Graph6) {
        return Err(CliError::Usage("batch reads graph6 corpora only".into()));
    }
    let text = input::read_text(path)?;
    let lines: Vec<(usize, &str)> = input::graph6_lines(&text).collect();
    if lines.is_empty() {
        return Ok(Output::ok(String::new()));
    }
    let results: Vec<Result<BatchRecord, CliError>> = pool(cfg)?.install(|| {
        lines
            .par_iter()
            .map(|&(line, s)| batch_one(line, s, cfg))
            .collect()
    });

    let mut summary = BatchSummary::default();
    let mut records = Vec::with_capacity(results.len());
    for ((line, _), r) in lines.iter().zip(results) {
        match r {
            Ok(rec) => {
                summary.graphs += 1;
                for b in &rec.tight {
                    *summary.tight.entry(b.clone()).or_default() += 1;
                }
                for b in &rec.violated {
                    summary.violations += 1;
                    *summary.violated.entry(b.clone()).or_default() += 1;
                    warn!("line {line}: bound {b} violated by {}", rec.graph6);
                }
                records.push(rec);
            }
            Err(e) => {
                summary.errors += 1;
                warn!("line {line}: {e}");
            }
        }
    }
    info!(
        "batch: {} graphs, {} errors",
        summary.graphs, summary.errors
    );

    let mut out = String::new();
    match format {
        OutputFormat::Json => {
            for r in &records {
                out.push_str(&serde_json::to_string(r).expect("serializable"));
                out.push('\n');
            }
            out.push_str(&serde_json::to_string(&BTreeMap::from([("summary", &summary)])).unwrap());
            out.push('\n');
        }
        OutputFormat::Csv => {
            out.push_str("line,graph6,n,gamma_p,rad_p,witness,tight,violated\n");
            for r in &records {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    r.line,
                    r.graph6,
                    r.n,
                    r.gamma_p,
                    r.rad_p,
                    set_str(r.witness),
                    r.tight.join(" "),
                    r.violated.join(" ")
                );
            }
            let _ = writeln!(out, "# {}", summary_text(&summary));
        }
        _ => {
            let _ = writeln!(
                out,
                "{:>6}  {:<14}{:>4}{:>9}{:>7}  {:<14}{:<22}violated",
                "line", "graph6", "n", "gamma_p", "rad_p", "witness", "tight"
            );
            for r in &records {
                let _ = writeln!(
                    out,
                    "{:>6}  {:<14}{:>4}{:>9}{:>7}  {:<14}{:<22}{}",
                    r.line,
                    r.graph6,
                    r.n,
                    r.gamma_p,
                    r.rad_p,
                    r.witness.to_string(),
                    r.tight.join(" "),
                    r.violated.join(" ")
                );
            }
            let _ = writeln!(out, "{}", summary_text(&summary));
        }
    }
    let failure = (summary.violations > 0)
        .then(|| CliError::Invariant(format!("{} bound violation(s)", summary.violations)));
    Ok(Output { text: out, failure })
}

fn summary_text(s: &BatchSummary) -> String {
    let counts = |m: &BTreeMap<String, usize>| {
        m.iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    format!(
        "summary graphs={} errors={} violations={} tight: {} violated: {}",
        s.graphs,
        s.errors,
        s.violations,
        counts(&s.tight),
        counts(&s.violated)
    )
}

pub fn audit(path: &Path, format: OutputFormat, cfg: &Config) -> Result<Output, CliError> {
    if !matches!(
        format,
        OutputFormat::Json | OutputFormat::Csv | OutputFormat::Table
    ) {
        return Err(unsupported("audit", format));
    }
    let graphs = load(path, cfg)?;
    let reports: Vec<BoundReport> = pool(cfg)?.install(|| {
        graphs
            .par_iter()
            .map(|n| {
                let res = solve(&n.graph, &solve_opts(cfg, false)).map_err(CliError::from_core)?;
                audit_graph(&n.graph, &res, n.id.clone()).map_err(CliError::from_core)
            })
            .collect::<Result<_, _>>()
    })?;
    let text = match format {
        OutputFormat::Json => to_json_list(&reports),
        OutputFormat::Csv => {
            let mut s = format!("{}\n", BoundReport::csv_header());
            for r in &reports {
                for row in r.csv_rows() {
                    s.push_str(&row);
                    s.push('\n');
                }
            }
            s
        }
        _ => reports
            .iter()
            .map(|r| format!("graph {}\n{}", r.graph_id, bounds_table(r)))
            .collect::<Vec<_>>()
            .join("\n"),
    };
    let violations: usize = reports.iter().map(|r| r.violations().count()).sum();
    let failure =
        (violations > 0).then(|| CliError::Invariant(format!("{violations} bound violation(s)")));
    Ok(Output { text, failure })
}

#[derive(Serialize)]
struct ZfRecord {
    initial: VertexSet,
    policy: String,
    forces: Vec<(usize, usize)>,
    chains: Vec<Vec<usize>>,
    reversal: VertexSet,
    reversal_forces: Vec<(usize, usize)>,
    reversal_is_zfs: bool,
    lemma_trials: usize,
    lemma_seed: u64,
    lemma_holds: bool,
}

fn single_graph(path: &Path, cfg: &Config) -> Result<Graph, CliError> {
    let mut graphs = load(path, cfg)?;
    if graphs.len() != 1 {
        return Err(CliError::Usage(format!(
            "expected one graph, found {}",
            graphs.len()
        )));
    }
    Ok(graphs.pop().unwrap().graph)
}

pub fn zf(
    path: &Path,
    set: Option<&str>,
    policy: PolicyArg,
    priority: Option<&str>,
    trials: usize,
    format: OutputFormat,
    cfg: &Config,
) -> Result<Output, CliError> {
    if !matches!(format, OutputFormat::Json | OutputFormat::Table) {
        return Err(unsupported("zf", format));
    }
    let g = single_graph(path, cfg)?;
    let n = g.order();
    let in_range = |vs: Vec<usize>| -> Result<Vec<usize>, CliError> {
        match vs.iter().find(|&&v| v >= n) {
            Some(v) => Err(CliError::Usage(format!(
                "vertex {v} out of range for n = {n}"
            ))),
            None => Ok(vs),
        }
    };
    let initial: VertexSet = match set {
        Some(s) => in_range(input::parse_vertex_list(s, cfg.indexing())?)?
            .into_iter()
            .collect(),
        None => {
            let res = pool(cfg)?
                .install(|| solve(&g, &solve_opts(cfg, true)))
                .map_err(CliError::from_core)?;
            g.closed_neighborhood(res.witness)
        }
    };
    let policy = match (policy, priority) {
        (PolicyArg::Lowest, _) => ForcingPolicy::LowestIndex,
        (PolicyArg::Random, _) => ForcingPolicy::Random(cfg.seed),
        (PolicyArg::Priority, Some(p)) => {
            ForcingPolicy::Priority(in_range(input::parse_vertex_list(p, cfg.indexing())?)?)
        }
        (PolicyArg::Priority, None) => {
            return Err(CliError::Usage("--policy priority needs --priority".into()))
        }
    };
    if !is_zfs(&g, initial) {
        let run = forcing_run(&g, initial, &policy);
        return Err(CliError::Usage(format!(
            "{initial} is not a zero forcing set; it forces {}",
            run.closure()
        )));
    }
    let seq = forcing_run(&g, initial, &policy);
    let chains = chains_and_reversal(&seq);
    let reversed = reverse_sequence(&g, &seq).map_err(CliError::from_core)?;
    let record = ZfRecord {
        initial,
        policy: seq.policy_tag.clone(),
        forces: seq.forces.clone(),
        chains: chains.chains,
        reversal: chains.reversal,
        reversal_forces: reversed.forces,
        reversal_is_zfs: is_zfs(&g, chains.reversal),
        lemma_trials: trials,
        lemma_seed: cfg.seed,
        lemma_holds: check_reversal_lemma(&g, initial, trials.max(1), cfg.seed),
    };
    let text = match format {
        OutputFormat::Json => to_json(&record),
        _ => {
            let pairs = |fs: &[(usize, usize)]| {
                fs.iter()
                    .map(|(u, v)| format!("{u}->{v}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            let mut s = String::new();
            let _ = writeln!(
                s,
                "initial   {}  (policy {})",
                record.initial, record.policy
            );
            let _ = writeln!(s, "forces    {}", pairs(&record.forces));
            for c in &record.chains {
                let _ = writeln!(
                    s,
                    "chain     {}",
                    c.iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join("-")
                );
            }
            let _ = writeln!(
                s,
                "reversal  {}  (zero forcing: {})",
                record.reversal, record.reversal_is_zfs
            );
            let _ = writeln!(s, "reversed  {}", pairs(&record.reversal_forces));
            let _ = writeln!(
                s,
                "lemma     {} over {} trials, seed {}",
                record.lemma_holds, record.lemma_trials, record.lemma_seed
            );
            s
        }
    };
    let failure = (!record.reversal_is_zfs || !record.lemma_holds)
        .then(|| CliError::Invariant("reversal is not a zero forcing set".into()));
    Ok(Output { text, failure })
}
