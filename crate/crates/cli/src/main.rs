//! `nilreal` command-line interface.
//!
//! Exit codes: 0 when everything passes, 1 on a verification failure, 2 on
//! usage or input errors.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use nilreal::duality::{dualize, pfaffian_pencil_classify};
use nilreal::graded::{chevalley, CartanType, GradedAlgebra, GradedContext};
use nilreal::lataut::{GramJson, GramLattice};
use nilreal::report::{self, VerifyOptions};
use nilreal::twostep::catalog::{format_weights, table_signature};
use nilreal::twostep::{catalog, lookup, parse_tensor, CatalogEntry, SkewTensor, TensorJson};
use nilreal::Error;

#[derive(Parser, Debug)]
#[command(name = "nilreal", version, about = "Exact verification of real two-step nilpotent Lie algebras of dimension 8")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List catalog rows or show one.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Fingerprint a tensor and match it against the catalog.
    Analyze(TensorArgs),
    /// Verify the catalog rows end to end.
    Verify {
        /// Only `tables` is accepted.
        #[arg(default_value = "tables")]
        target: String,
        #[arg(long)]
        table: Option<u8>,
        #[arg(long)]
        row: Option<String>,
        /// Include wall time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Build the homogeneous sl2-triple of a tensor.
    Triple(TensorArgs),
    /// Dualize a tensor of signature (m, n) to (m, C(m,2) - n).
    Dualize(TensorArgs),
    /// Classify a (4,2) tensor by its Pfaffian pencil.
    ClassifyPencil(TensorArgs),
    /// Automorphism group of a positive-definite Gram matrix given as {"gram": [[...]]}.
    Lataut {
        input: PathBuf,
        /// Print every element, not just generators.
        #[arg(long)]
        all: bool,
    },
    /// Dump a graded Chevalley algebra as JSON.
    DumpGraded {
        /// Signature `m,n` of the degree-1 tensor space.
        #[arg(long, value_parser = parse_signature, conflicts_with = "cartan_type")]
        signature: Option<(usize, usize)>,
        /// Cartan type such as `E7` or `D7`, graded by `--node`.
        #[arg(long = "type")]
        cartan_type: Option<String>,
        /// 1-based grading node for `--type`.
        #[arg(long, requires = "cartan_type")]
        node: Option<usize>,
    },
    /// Run the built-in self test.
    Selftest,
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    List,
    Show { table: u8, row: String },
}

#[derive(Args, Debug)]
struct TensorArgs {
    /// Tensor JSON file (`-` for stdin).
    input: Option<PathBuf>,
    /// Tensor expression such as `e127+e348-2*e568`.
    #[arg(long, requires = "signature", conflicts_with = "input")]
    expr: Option<String>,
    /// Signature `m,n` for `--expr`.
    #[arg(long, value_parser = parse_signature)]
    signature: Option<(usize, usize)>,
    /// Catalog table, with `--row`.
    #[arg(long, requires = "row", conflicts_with_all = ["input", "expr"])]
    table: Option<u8>,
    #[arg(long, requires = "table")]
    row: Option<String>,
}

fn parse_signature(s: &str) -> std::result::Result<(usize, usize), String> {
    let (m, n) = s.split_once(',').ok_or("expected m,n")?;
    Ok((m.trim().parse().map_err(|e| format!("{e}"))?, n.trim().parse().map_err(|e| format!("{e}"))?))
}

impl TensorArgs {
    fn load(&self) -> Result<SkewTensor> {
        if let (Some(t), Some(r)) = (self.table, &self.row) {
            return Ok(lookup(t, r)?.tensor.clone());
        }
        if let Some(expr) = &self.expr {
            let (m, n) = self.signature.expect("clap enforces --signature");
            return Ok(parse_tensor(expr, m, n)?);
        }
        let path = self.input.as_ref().ok_or_else(|| anyhow!("give a tensor file, --expr, or --table/--row"))?;
        let text = if path.as_os_str() == "-" {
            std::io::read_to_string(std::io::stdin())?
        } else {
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
        };
        let json: TensorJson = serde_json::from_str(&text).context("parsing tensor JSON")?;
        Ok(SkewTensor::from_json(&json)?)
    }
}

/// Structured outcome: `Ok(true)` passes, `Ok(false)` is a verification failure.
type Outcome = Result<bool>;

fn print_json<T: serde::Serialize>(v: &T) -> Result<()> {
    write_out(&serde_json::to_string_pretty(v)?)
}

fn write_out(text: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    writeln!(out, "{text}")?;
    out.flush()?;
    Ok(())
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.downcast_ref::<std::io::Error>().is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
}

fn bracket_table(e: &SkewTensor) -> Vec<String> {
    e.terms()
        .map(|(&(i, j, k), c)| {
            let coeff = nilreal::exact::rat::to_string(c);
            match coeff.as_str() {
                "1" => format!("[e{i},e{j}]=e{k}"),
                "-1" => format!("[e{i},e{j}]=-e{k}"),
                _ => format!("[e{i},e{j}]={coeff}*e{k}"),
            }
        })
        .collect()
}

#[derive(serde::Serialize)]
struct EntryJson<'a> {
    table: u8,
    row: &'a str,
    m: usize,
    n: usize,
    tensor: &'a str,
    brackets: Vec<String>,
    expected_gt: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    expected_pi0: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    expected_weights_u: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    expected_weights_v: Option<&'a str>,
    json: TensorJson,
}

fn entry_json(e: &CatalogEntry) -> EntryJson<'_> {
    EntryJson {
        table: e.table,
        row: e.row,
        m: e.m,
        n: e.n,
        tensor: e.source,
        brackets: bracket_table(&e.tensor),
        expected_gt: e.expected_gt,
        expected_pi0: e.expected_pi0,
        expected_weights_u: e.expected_weights_u,
        expected_weights_v: e.expected_weights_v,
        json: e.tensor.to_json(),
    }
}

fn cmd_catalog(cli: &Cli, action: &CatalogAction) -> Outcome {
    match action {
        CatalogAction::List => {
            if cli.json {
                print_json(&catalog().iter().map(entry_json).collect::<Vec<_>>())?;
            } else {
                for e in catalog() {
                    println!("{:<7} ({},{})  {:<14} {}", e.id(), e.m, e.n, e.expected_gt, e.source);
                }
            }
        }
        CatalogAction::Show { table, row } => {
            let e = lookup(*table, row)?;
            if cli.json {
                print_json(&entry_json(e))?;
            } else {
                println!("table {} row {}  signature ({},{})", e.table, e.row, e.m, e.n);
                println!("tensor   {}", e.tensor.render());
                println!("brackets {}", bracket_table(&e.tensor).join(" "));
                println!("gt       {}", e.expected_gt);
                if let Some(p) = e.expected_pi0 {
                    println!("pi0      {p}");
                }
                if let (Some(u), Some(v)) = (e.expected_weights_u, e.expected_weights_v) {
                    println!("rep U    {u}");
                    println!("rep V    {v}");
                }
            }
        }
    }
    Ok(true)
}

fn cmd_analyze(cli: &Cli, args: &TensorArgs) -> Outcome {
    let e = args.load()?;
    let r = match report::analyze(&e) {
        Err(Error::Degenerate { abelian_dim }) => bail!(
            "tensor is degenerate: the algebra splits off an abelian factor of dimension {abelian_dim} (see LieAlg::degenerate_split)"
        ),
        other => other?,
    };
    if cli.json {
        print_json(&r)?;
    } else {
        let f = &r.fingerprint;
        let d = &f.descriptor;
        println!("tensor        {}", r.tensor);
        println!("signature     ({},{})", f.m, f.n);
        println!("dim ge        {}", f.dim_ge);
        println!("gt            {} (dim {})", d.type_label, d.total_dim);
        println!("complex rank  {}", f.complex_rank);
        if let (Some(u), Some(v)) = (&d.weights_u, &d.weights_v) {
            println!("rep U         {}", format_weights(u));
            println!("rep V         {}", format_weights(v));
        }
        println!("matches       {}", if r.matches.is_empty() { "none".to_string() } else { r.matches.join(", ") });
    }
    Ok(true)
}

fn cmd_verify(cli: &Cli, target: &str, table: Option<u8>, row: Option<String>, timing: bool) -> Outcome {
    if target != "tables" {
        bail!("unknown verify target {target:?}; expected \"tables\"");
    }
    let r = report::verify_tables(&VerifyOptions { table, row, jobs: cli.jobs, timing })?;
    if cli.json {
        print_json(&r)?;
    } else {
        for row in &r.rows {
            let failed: Vec<&str> = row.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
            let label = row.fingerprint.as_ref().map_or("-", |f| f.descriptor.type_label.as_str());
            if failed.is_empty() {
                println!("PASS {}:{:<7} {:<14} {} checks", row.table, row.row, label, row.checks.len());
            } else {
                println!("FAIL {}:{:<7} {:<14} failed: {}", row.table, row.row, label, failed.join(", "));
            }
        }
        if let Some(d) = &r.duality {
            for x in &d.rows {
                println!("dual 3:{:<7} -> {:<14} {}", x.row, x.class.label, x.dual);
            }
        }
        let s = &r.summary;
        println!("{}/{} rows pass, {}/{} checks", s.rows_passed, s.rows, s.checks_passed, s.checks);
        if let Some(ms) = r.wall_time_ms {
            println!("wall time {ms} ms");
        }
    }
    Ok(r.pass())
}

fn cmd_triple(cli: &Cli, args: &TensorArgs) -> Outcome {
    let e = args.load()?;
    let (m, n) = e.signature();
    let ctx = GradedContext::get(m, n)?;
    let p = nilreal::realtype::run_pipeline(&e)?;
    let eig = p.triple.ad_h_eigenvalues(ctx)?;
    let ok = p.triple.relations_hold(ctx);
    if cli.json {
        #[derive(serde::Serialize)]
        struct Out {
            triple: nilreal::sl2::TripleJson,
            relations_hold: bool,
            ad_h_eigenvalues: Vec<i64>,
            centralizer_dim: usize,
        }
        print_json(&Out {
            triple: p.triple.to_json(ctx),
            relations_hold: ok,
            ad_h_eigenvalues: eig,
            centralizer_dim: p.centralizer.dim(),
        })?;
    } else {
        let j = p.triple.to_json(ctx);
        println!("h = {}", j.h.join(" "));
        println!("e = {}", j.e.join(" "));
        println!("f = {}", j.f.join(" "));
        println!("relations {}", if ok { "hold" } else { "FAIL" });
        println!("ad h eigenvalues {eig:?}");
        println!("centralizer dim {}", p.centralizer.dim());
    }
    Ok(ok)
}

fn cmd_dualize(cli: &Cli, args: &TensorArgs) -> Outcome {
    let d = dualize(&args.load()?)?;
    if cli.json {
        print_json(&d.to_json())?;
    } else {
        println!("({},{}) {}", d.m(), d.n(), d.render());
    }
    Ok(true)
}

fn cmd_classify(cli: &Cli, args: &TensorArgs) -> Outcome {
    let c = pfaffian_pencil_classify(&args.load()?)?;
    if cli.json {
        print_json(&c)?;
    } else {
        let q: Vec<String> = c.quadratic.iter().map(nilreal::exact::rat::to_string).collect();
        println!(
            "{} {}  Pf = ({})x^2 + ({})xy + ({})y^2  disc {}",
            c.tag,
            c.label,
            q[0],
            q[1],
            q[2],
            nilreal::exact::rat::to_string(&c.discriminant)
        );
    }
    Ok(true)
}

fn cmd_lataut(cli: &Cli, input: &PathBuf, all: bool) -> Outcome {
    let text = std::fs::read_to_string(input).with_context(|| format!("reading {}", input.display()))?;
    let gram: GramJson = serde_json::from_str(&text).context("parsing {\"gram\": [[...]]}")?;
    let group = GramLattice::from_json(&gram)?.aut_group()?;
    let generators = group.generators();
    let closed = group.is_closed();
    if cli.json {
        #[derive(serde::Serialize)]
        struct Out<'a> {
            order: usize,
            closed: bool,
            generators: &'a [Vec<Vec<i64>>],
            #[serde(skip_serializing_if = "Option::is_none")]
            elements: Option<&'a [Vec<Vec<i64>>]>,
        }
        print_json(&Out { order: group.order, closed, generators: &generators, elements: all.then_some(group.elements.as_slice()) })?;
    } else {
        println!("order {}", group.order);
        for g in &generators {
            println!("generator {g:?}");
        }
        if all {
            for g in &group.elements {
                println!("element {g:?}");
            }
        }
    }
    Ok(closed)
}

fn cmd_dump_graded(signature: Option<(usize, usize)>, cartan_type: Option<&str>, node: Option<usize>) -> Outcome {
    let json = match (signature, cartan_type) {
        (Some((m, n)), _) => GradedContext::get(m, n)?.graded.to_json(),
        (None, Some(t)) => {
            let chev = chevalley(CartanType::parse(t)?)?;
            let node = node.ok_or_else(|| anyhow!("--type needs --node"))?;
            if node == 0 || node > chev.rank() {
                bail!("node {node} out of range 1..={}", chev.rank());
            }
            GradedAlgebra::new(chev, node - 1)?.to_json()
        }
        (None, None) => bail!("give --signature m,n or --type T --node k"),
    };
    write_out(&serde_json::to_string(&json)?)?;
    Ok(true)
}

fn cmd_selftest(cli: &Cli) -> Outcome {
    let r = report::selftest(cli.seed)?;
    if cli.json {
        print_json(&r)?;
    } else {
        for c in &r.checks {
            println!("{} {:<32} expected {} computed {}", if c.pass { "PASS" } else { "FAIL" }, c.name, c.expected, c.computed);
        }
    }
    Ok(r.pass)
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Catalog { action } => cmd_catalog(cli, action),
        Command::Analyze(a) => cmd_analyze(cli, a),
        Command::Verify { target, table, row, timing } => {
            if let Some(t) = table {
                table_signature(*t).ok_or_else(|| anyhow!("unknown table {t}"))?;
            }
            cmd_verify(cli, target, *table, row.clone(), *timing)
        }
        Command::Triple(a) => cmd_triple(cli, a),
        Command::Dualize(a) => cmd_dualize(cli, a),
        Command::ClassifyPencil(a) => cmd_classify(cli, a),
        Command::Lataut { input, all } => cmd_lataut(cli, input, *all),
        Command::DumpGraded { signature, cartan_type, node } => cmd_dump_graded(*signature, cartan_type.as_deref(), *node),
        Command::Selftest => cmd_selftest(cli),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
