//! The `mforge` command line.
//!
//! Graphs travel between invocations as graph6 lines; verdicts and
//! certificates are printed as one JSON document per input graph.
//!
//! Exit codes: 0 success, 1 negative verdict, 2 usage or input error,
//! 3 search budget exhausted.

use std::ffi::OsString;
use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mforge_core::blocks::TaggedTree;
use mforge_core::characterizations::{
    add_vertex_characterisation, audit_obstruction_properties, cmg_obstruction_predicate,
    find_4_connected_minor, find_k5_or_k222, small_regular_check, vida_conditions,
};
use mforge_core::constructions::{
    graph_from_block_tree, graph_from_low_high_tree, horned, named_graph, plus_construction,
    plus_min_degree, HornedKind, LowHighTree,
};
use mforge_core::minor::{down_parameter, has_minor, is_member, is_minimal_obstruction};
use mforge_core::params::{independence_and_clique, pathwidth, treewidth, vertex_connectivity};
use mforge_core::search::{enumerate_graphs, regular_family_sweep, Filters, SearchSpec};
use mforge_core::{block_tree, Budget, Graph, ParamKind};
use serde::Serialize;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::dot::to_dot;
use crate::graph6::{self, ParseError};
use crate::parallel;
use crate::report::{
    AddVertexJson, AuditJson, BlockTreeJson, DecompositionJson, ManifestJson, MembershipJson,
    MinorJson, SmallRegularJson, VidaJson, WitnessJson,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] mforge_core::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_budget() => 3,
            _ => 2,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(
    name = "mforge",
    version,
    about = "Exact minor-closed class toolkit: obstructions, widths, constructions"
)]
pub struct Cli {
    /// Worker threads for searches and batches.
    #[arg(long, global = true, env = "MFORGE_JOBS", default_value_t = 1)]
    pub jobs: usize,
    /// Most minor states one lattice search may visit.
    #[arg(long, global = true, env = "MFORGE_BUDGET_STATES")]
    pub max_states: Option<usize>,
    /// Largest graph accepted by the treewidth and pathwidth solvers.
    #[arg(long, global = true, env = "MFORGE_BUDGET_WIDTH_N")]
    pub width_max_n: Option<usize>,
    /// Largest host for searches over the full minor lattice.
    #[arg(long, global = true, env = "MFORGE_BUDGET_LATTICE_N")]
    pub lattice_max_n: Option<usize>,
    /// Largest order for isomorph-free enumeration.
    #[arg(long, global = true, env = "MFORGE_BUDGET_ENUMERATE_N")]
    pub enumerate_max_n: Option<usize>,
    /// Input graph as a generator name or graph6 string (repeatable);
    /// without it graph6 lines are read from stdin.
    #[arg(short, long = "graph", global = true, value_name = "GRAPH")]
    pub graphs: Vec<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a generated graph.
    Construct(ConstructArgs),
    /// Compute parameters of each input graph.
    Param(ParamArgs),
    /// Decide membership of X_{f,k}, or minimal-obstruction status.
    Check(CheckArgs),
    /// Look for a fixed minor in each input graph.
    Minor(MinorArgs),
    /// Print the block decomposition tree of each input graph.
    Blocktree,
    /// List all minimal forbidden minors up to a given order.
    Search(SearchArgs),
    /// Check the structural properties of a min-degree obstruction.
    Audit(AuditArgs),
    /// List all graphs of a given order (graph6, canonically sorted).
    Enumerate(EnumerateArgs),
    /// Evaluate the complete multipartite obstruction predicate.
    Cmg(CmgArgs),
    /// Check the small regular graph condition.
    SmallRegular(KArgs),
    /// Sweep all (k+1)-regular graphs below the small-order bound.
    RegularSweep(KArgs),
    /// Compare the add-vertex characterisation on both sides.
    AddVertex(AddVertexArgs),
    /// Check the dominating-vertex hypotheses.
    Vida,
    /// Find a 4-connected minor of a graph with minimum degree 4.
    FourConnected,
    /// Find a K5 or K2,2,2 minor of a 4-connected graph.
    Hj,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Dot,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    /// A named graph (icosahedron, d3, k6, cmg(2,2,2), tight(4), ...) or a
    /// family: horned-single, horned-double, lowhigh-star, lowhigh-path,
    /// lowhigh-binary, block-star.
    pub name: String,
    /// Numeric family parameters.
    pub params: Vec<usize>,
    /// Add this many dominating independent vertices.
    #[arg(long)]
    pub plus: Option<usize>,
    /// Add one vertex adjacent to every minimum-degree vertex.
    #[arg(long)]
    pub plus_min: bool,
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct ParamArgs {
    #[arg(long)]
    pub delta: bool,
    #[arg(long)]
    pub kappa: bool,
    #[arg(long)]
    pub tw: bool,
    #[arg(long)]
    pub pw: bool,
    #[arg(long)]
    pub alpha: bool,
    /// Report the down-parameter (maximum over all minors) of the selected
    /// class parameters instead of their values.
    #[arg(long)]
    pub down: bool,
    /// Include optimal decompositions for tw and pw.
    #[arg(long)]
    pub witness: bool,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[arg(long)]
    pub param: ParamKind,
    #[arg(long)]
    pub k: usize,
    /// Test for a minimal forbidden minor instead of class membership.
    #[arg(long)]
    pub obstruction: bool,
}

#[derive(Args, Debug)]
pub struct MinorArgs {
    /// The minor to look for, as a generator name or graph6.
    #[arg(long)]
    pub target: String,
}

#[derive(Args, Debug)]
pub struct FilterArgs {
    #[arg(long)]
    pub connected: bool,
    #[arg(long)]
    pub regular: Option<usize>,
    #[arg(long)]
    pub min_degree: Option<usize>,
}

impl FilterArgs {
    fn filters(&self) -> Filters {
        Filters {
            connected: self.connected,
            regular: self.regular,
            min_degree: self.min_degree,
        }
    }
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long)]
    pub param: ParamKind,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub max_order: usize,
    #[command(flatten)]
    pub filters: FilterArgs,
    /// Write the JSON manifest here instead of to stderr.
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct AuditArgs {
    #[arg(long)]
    pub k: usize,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub filters: FilterArgs,
}

#[derive(Args, Debug)]
pub struct CmgArgs {
    /// Part sizes, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub shape: Vec<usize>,
    #[arg(long)]
    pub param: ParamKind,
    #[arg(long)]
    pub k: usize,
    /// Also run the search-based obstruction test.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Args, Debug)]
pub struct KArgs {
    #[arg(long)]
    pub k: usize,
}

#[derive(Args, Debug)]
pub struct AddVertexArgs {
    #[arg(long)]
    pub k: usize,
    /// Neighbours of the new vertex, comma separated.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub set: Vec<usize>,
}

struct Ctx<'a> {
    budget: Budget,
    jobs: usize,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn json(&mut self, v: &impl Serialize) -> CliResult<()> {
        writeln!(
            self.out,
            "{}",
            serde_json::to_string(v).expect("serialisable report")
        )?;
        Ok(())
    }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match dispatch(cli, input, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn budget(cli: &Cli) -> Budget {
    let mut b = Budget::default();
    if let Some(s) = cli.max_states {
        b.max_states = s;
    }
    if let Some(n) = cli.width_max_n {
        b.width_max_n = n;
    }
    if let Some(n) = cli.lattice_max_n {
        b.lattice_max_n = n;
    }
    if let Some(n) = cli.enumerate_max_n {
        b.enumerate_max_n = n;
    }
    b
}

/// A generator name, falling back to graph6.
pub fn parse_graph(spec: &str) -> CliResult<Graph> {
    match named_graph(spec) {
        Ok(g) => Ok(g),
        Err(named) => graph6::decode(spec.trim()).map_err(|e| {
            CliError::Usage(format!(
                "`{spec}` is neither a known generator ({named}) nor valid graph6 ({e})"
            ))
        }),
    }
}

fn read_graphs(cli: &Cli, input: &mut dyn BufRead) -> CliResult<Vec<Graph>> {
    if !cli.graphs.is_empty() {
        return cli.graphs.iter().map(|s| parse_graph(s)).collect();
    }
    let mut gs = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let g =
            graph6::decode(line).map_err(|e| CliError::Usage(format!("line {}: {e}", i + 1)))?;
        gs.push(g);
    }
    if gs.is_empty() {
        return Err(CliError::Usage(
            "no input graphs (pass --graph or graph6 lines on stdin)".into(),
        ));
    }
    Ok(gs)
}

fn dispatch(
    cli: Cli,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult<i32> {
    let mut ctx = Ctx {
        budget: budget(&cli),
        jobs: cli.jobs.max(1),
        out,
        err,
    };
    match &cli.command {
        Command::Construct(a) => construct(&mut ctx, a),
        Command::Search(a) => search(&mut ctx, a),
        Command::Enumerate(a) => {
            for g in enumerate_graphs(a.n, &a.filters.filters(), &ctx.budget)? {
                writeln!(ctx.out, "{}", graph6::encode(&g))?;
            }
            Ok(0)
        }
        Command::Cmg(a) => cmg(&mut ctx, a),
        Command::RegularSweep(a) => regular_sweep(&mut ctx, a.k),
        cmd => {
            let gs = read_graphs(&cli, input)?;
            per_graph(&mut ctx, cmd, &gs)
        }
    }
}

fn construct(ctx: &mut Ctx, a: &ConstructArgs) -> CliResult<i32> {
    let p = &a.params;
    let want = |k: usize| -> CliResult<()> {
        if p.len() != k {
            return Err(CliError::Usage(format!(
                "`{}` takes {k} parameter(s), got {}",
                a.name,
                p.len()
            )));
        }
        Ok(())
    };
    let mut g = match a.name.as_str() {
        "horned-single" => {
            want(1)?;
            horned(HornedKind::Single { d: p[0] })?.graph
        }
        "horned-double" => {
            want(3)?;
            horned(HornedKind::Double {
                d: p[0],
                a: p[1],
                b: p[2],
            })?
            .graph
        }
        "lowhigh-star" => {
            want(1)?;
            graph_from_low_high_tree(&LowHighTree::star(p[0])?)?.graph
        }
        "lowhigh-path" => {
            want(1)?;
            graph_from_low_high_tree(&LowHighTree::path(p[0])?)?.graph
        }
        "lowhigh-binary" => {
            want(1)?;
            graph_from_low_high_tree(&LowHighTree::binary(p[0])?)?.graph
        }
        "block-star" => {
            want(1)?;
            graph_from_block_tree(&block_star(p[0]))?.graph
        }
        name if p.is_empty() => named_graph(name)?,
        name => {
            let args: Vec<String> = p.iter().map(|x| x.to_string()).collect();
            named_graph(&format!("{name}({})", args.join(",")))?
        }
    };
    if a.plus_min {
        g = plus_min_degree(&g);
    }
    if let Some(k) = a.plus {
        g = plus_construction(&g, k);
    }
    match a.format {
        Format::Graph6 => writeln!(ctx.out, "{}", graph6::encode(&g))?,
        Format::Dot => write!(ctx.out, "{}", to_dot(&g))?,
    }
    Ok(0)
}

/// A block node joined through `s` cut nodes to `s` leaf blocks.
pub fn block_star(s: usize) -> TaggedTree {
    let mut cut = vec![false];
    let mut edges = Vec::new();
    for _ in 0..s {
        let c = cut.len();
        cut.extend([true, false]);
        edges.extend([(0, c), (c, c + 1)]);
    }
    TaggedTree { cut, edges }
}

fn search(ctx: &mut Ctx, a: &SearchArgs) -> CliResult<i32> {
    let mut spec = SearchSpec::new(a.param, a.k, a.max_order);
    spec.filters = a.filters.filters();
    let outcome = parallel::obstruction_search(&spec, &ctx.budget, ctx.jobs)?;
    for g in &outcome.obstructions {
        writeln!(ctx.out, "{}", graph6::encode(g))?;
    }
    let manifest =
        serde_json::to_string_pretty(&ManifestJson::from(&outcome)).expect("serialisable manifest");
    match &a.manifest {
        Some(path) => std::fs::write(path, manifest + "\n")?,
        None => writeln!(ctx.err, "{manifest}")?,
    }
    Ok(0)
}

fn cmg(ctx: &mut Ctx, a: &CmgArgs) -> CliResult<i32> {
    let predicate = cmg_obstruction_predicate(&a.shape, a.param, a.k);
    let mut v = json!({
        "shape": a.shape,
        "param": a.param.name(),
        "k": a.k,
        "predicate": predicate,
    });
    let mut code = if predicate { 0 } else { 1 };
    if a.verify {
        let g = Graph::complete_multipartite(&a.shape)?;
        let truth = is_minimal_obstruction(&g, a.param, a.k, &ctx.budget)?.verdict;
        v["search"] = json!(truth);
        if truth != predicate {
            writeln!(ctx.err, "predicate and search disagree")?;
            code = 1;
        }
    }
    ctx.json(&v)?;
    Ok(code)
}

fn regular_sweep(ctx: &mut Ctx, k: usize) -> CliResult<i32> {
    let r = regular_family_sweep(k, &ctx.budget)?;
    let orders: Vec<Value> = r
        .orders
        .iter()
        .map(|&(n, graphs, members)| json!({"n": n, "graphs": graphs, "members": members}))
        .collect();
    let mut v = json!({
        "k": k,
        "orders": orders,
        "failures": r.failures.iter().map(graph6::encode).collect::<Vec<_>>(),
        "holds": r.holds(),
    });
    if let Some((g, member, w)) = &r.tight {
        v["tight"] = json!({
            "graph": graph6::encode(g),
            "member": member,
            "minor_parts": w.as_ref().map(|w| w.parts.parts.clone()),
        });
    }
    ctx.json(&v)?;
    Ok(if r.holds() { 0 } else { 1 })
}

fn per_graph(ctx: &mut Ctx, cmd: &Command, gs: &[Graph]) -> CliResult<i32> {
    let budget = ctx.budget;
    let results: Vec<CliResult<(Value, bool)>> =
        parallel::map_graphs(gs, ctx.jobs, |g| one_graph(cmd, g, &budget));
    let mut code = 0;
    for r in results {
        let (v, ok) = r?;
        match v {
            Value::String(s) => writeln!(ctx.out, "{s}")?,
            v => ctx.json(&v)?,
        }
        if !ok {
            code = 1;
        }
    }
    Ok(code)
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("serialisable report")
}

/// The report for one input graph and whether its verdict is positive.
/// A string value is printed verbatim.
fn one_graph(cmd: &Command, g: &Graph, budget: &Budget) -> CliResult<(Value, bool)> {
    Ok(match cmd {
        Command::Param(a) => (params(a, g, budget)?, true),
        Command::Check(a) => {
            let r = if a.obstruction {
                is_minimal_obstruction(g, a.param, a.k, budget)?
            } else {
                is_member(g, a.param, a.k, budget)?
            };
            (to_value(MembershipJson::new(g, &r)), r.verdict)
        }
        Command::Minor(a) => {
            let h = parse_graph(&a.target)?;
            let found = has_minor(g, &h, budget)?;
            let ok = found.is_some();
            let j = MinorJson {
                graph: graph6::encode(g),
                target: graph6::encode(&h),
                found: ok,
                parts: found.map(|p| p.parts),
            };
            (to_value(j), ok)
        }
        Command::Blocktree => (to_value(BlockTreeJson::from(&block_tree(g)?)), true),
        Command::Audit(a) => {
            if !is_minimal_obstruction(g, ParamKind::MinDegree, a.k, budget)?.verdict {
                let v = json!({"graph": graph6::encode(g), "k": a.k, "member": false});
                (v, false)
            } else {
                let r = audit_obstruction_properties(g, a.k, budget)?;
                let mut v = to_value(AuditJson::new(g, a.k, &r));
                v["member"] = json!(true);
                (v, r.all())
            }
        }
        Command::SmallRegular(a) => {
            let r = small_regular_check(g, a.k, budget)?;
            (
                to_value(SmallRegularJson::new(g, &r)),
                r.member == Some(true),
            )
        }
        Command::AddVertex(a) => {
            let r = add_vertex_characterisation(g, &a.set, a.k, budget)?;
            (
                to_value(AddVertexJson::new(g, &a.set, a.k, &r)),
                r.extended_is_obstruction,
            )
        }
        Command::Vida => {
            let r = vida_conditions(g)?;
            (to_value(VidaJson::new(g, &r)), r.holds())
        }
        Command::FourConnected => {
            let w = find_4_connected_minor(g)?;
            (to_value(WitnessJson::new(g, &w)), true)
        }
        Command::Hj => {
            let (t, w) = find_k5_or_k222(g, budget)?;
            let mut v = to_value(WitnessJson::new(g, &w));
            v["target"] = json!(format!("{t:?}"));
            (v, true)
        }
        Command::Construct(_)
        | Command::Search(_)
        | Command::Enumerate(_)
        | Command::Cmg(_)
        | Command::RegularSweep(_) => unreachable!("not a per-graph command"),
    })
}

fn params(a: &ParamArgs, g: &Graph, budget: &Budget) -> CliResult<Value> {
    let mut chosen: Vec<&str> = [
        (a.delta, "delta"),
        (a.kappa, "kappa"),
        (a.tw, "tw"),
        (a.pw, "pw"),
        (a.alpha, "alpha"),
    ]
    .into_iter()
    .filter_map(|(on, name)| on.then_some(name))
    .collect();
    if chosen.is_empty() {
        chosen = vec!["delta", "kappa", "tw", "pw", "alpha"];
    }
    if a.down && chosen.contains(&"alpha") {
        return Err(CliError::Usage(
            "--down applies to delta, kappa, tw and pw only".into(),
        ));
    }
    let mut m = Map::new();
    m.insert("graph".into(), json!(graph6::encode(g)));
    for &name in &chosen {
        let value = if a.down {
            down_parameter(g, name.parse::<ParamKind>()?, budget)?
        } else {
            match name {
                "delta" => {
                    if g.n() == 0 {
                        0
                    } else {
                        g.min_degree()
                    }
                }
                "kappa" => vertex_connectivity(g),
                "tw" | "pw" => {
                    let (w, dec) = if name == "tw" {
                        treewidth(g, budget)?
                    } else {
                        pathwidth(g, budget)?
                    };
                    if a.witness {
                        m.insert(
                            format!("{name}_decomposition"),
                            to_value(DecompositionJson::from(&dec)),
                        );
                    }
                    w
                }
                _ => independence_and_clique(g, budget)?.0,
            }
        };
        m.insert(name.to_string(), json!(value));
    }
    if chosen.len() == 1 && !a.witness {
        return Ok(Value::String(m[chosen[0]].to_string()));
    }
    Ok(Value::Object(m))
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdin = std::io::stdin();
    let mut input = stdin.lock();
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    let code = run(std::env::args_os(), &mut input, &mut out, &mut err);
    let _ = out.flush();
    code
}
