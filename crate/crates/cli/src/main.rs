use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use selfdual::analysis::{analyze, AnalysisOptions, EnumeratorReport, Family};
use selfdual::extension::{expand_x, extend, gray_image};
use selfdual::graph::{builtin_graph, default_face_pair, graph_to_selfdual_code, PlanarBicubicGraph};
use selfdual::lift::{
    complete_lower, decode_upper, random_lift, repair_hex, repair_substitution, search_lifts,
    SearchCriteria, RNG_NAME, UPPER_LEN,
};
use selfdual::repro::{reproduce, ReproOptions, TableId};
use selfdual::store::{CodeStoreEntry, Provenance, Store, STORE_ENV};
use selfdual::tables::{self, Base};
use selfdual::{BinaryCode, BinaryMatrix, Error};

type CliResult<T = ExitCode> = Result<T, Box<dyn std::error::Error>>;

#[derive(Parser)]
#[command(name = "selfdual", version, about = "Self-dual codes from bicubic planar graphs and R2 lifts")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Worker threads (0 = all available cores).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Code store directory.
    #[arg(long, global = true, env = STORE_ENV)]
    store: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Build, validate and analyse the self-dual code of a bicubic planar graph.
    Graph2code {
        /// Built-in graph (cube, G1, G2) or a graph file.
        graph: String,
        /// Two differently colored faces, 1-based, e.g. `1,2`.
        #[arg(long, value_parser = parse_faces)]
        faces: Option<(usize, usize)>,
        /// Store entry name (default: the graph name).
        #[arg(long)]
        name: Option<String>,
    },
    /// Complete and analyse an R2 lift of A1 or A2.
    Lift(LiftArgs),
    /// Analyse a generator matrix file.
    Analyze {
        file: PathBuf,
    },
    /// Building-up extension of a stored code or a table lift.
    Extend {
        /// Store entry or table lift name (K1..K5, L1..L15).
        base: String,
        /// Odd-weight vector; `1^{32}` / `0^{32}` repetition tokens allowed.
        x: String,
        #[arg(long)]
        name: Option<String>,
    },
    /// Rebuild a published table and compare with the published values.
    Reproduce {
        /// 1, 2, 3, equivalence or all.
        table: String,
        /// Try the documented recovery paths for rows that do not reproduce.
        #[arg(long)]
        repair: bool,
    },
    /// Random lift search.
    Search {
        /// A1 or A2.
        base: String,
        #[arg(long, default_value_t = 100)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 12)]
        min_distance: usize,
        /// Target family with optional parameter, e.g. `W64_1:16` or `W64_2`.
        #[arg(long = "target")]
        targets: Vec<String>,
    },
}

#[derive(Args)]
struct LiftArgs {
    /// A1, A2, or a file holding the redundancy block.
    base: String,
    /// Upper-triangular hex string (36 digits).
    hex: Option<String>,
    /// Draw the upper triangle at random.
    #[arg(long, conflicts_with = "hex", requires = "seed")]
    random: bool,
    #[arg(long)]
    seed: Option<u64>,
    /// Recover a malformed or non-reproducing string by single-digit edits.
    #[arg(long)]
    repair: bool,
    /// Expected family for --repair (default: from the matching table row).
    #[arg(long)]
    family: Option<String>,
    /// Expected parameter for --repair.
    #[arg(long)]
    beta: Option<u32>,
    #[arg(long)]
    name: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> CliResult {
    let g = &cli.global;
    match &cli.command {
        Command::Graph2code { graph, faces, name } => cmd_graph2code(g, graph, *faces, name.as_deref()),
        Command::Lift(args) => cmd_lift(g, args),
        Command::Analyze { file } => cmd_analyze(g, file),
        Command::Extend { base, x, name } => cmd_extend(g, base, x, name.as_deref()),
        Command::Reproduce { table, repair } => cmd_reproduce(g, table, *repair),
        Command::Search {
            base,
            budget,
            seed,
            min_distance,
            targets,
        } => cmd_search(g, base, *budget, *seed, *min_distance, targets),
    }
}

fn options(g: &Global) -> AnalysisOptions {
    AnalysisOptions::with_threads(g.threads)
}

fn store(g: &Global) -> CliResult<Store> {
    Ok(Store::open(Store::resolve_dir(g.store.as_deref()))?)
}

fn emit_report(g: &Global, label: &str, report: &EnumeratorReport, extra: serde_json::Value) {
    if g.json {
        let mut v = json!({ "name": label, "report": report });
        if let (Some(obj), serde_json::Value::Object(more)) = (v.as_object_mut(), extra) {
            obj.extend(more);
        }
        println!("{}", serde_json::to_string_pretty(&v).expect("json"));
    } else {
        println!("{label}: {}", report.summary());
        println!("  distribution: {}", report.distribution);
        for w in &report.warnings {
            println!("  warning: {w}");
        }
    }
}

fn save(g: &Global, name: &str, provenance: Provenance, code: &BinaryCode, report: &EnumeratorReport) -> CliResult<()> {
    let entry = CodeStoreEntry::new(name, provenance, code, report.clone());
    let path = store(g)?.save(&entry)?;
    if !g.json {
        println!("  stored: {}", path.display());
    }
    Ok(())
}

fn load_graph(spec: &str) -> CliResult<PlanarBicubicGraph> {
    match builtin_graph(spec) {
        Ok(graph) => Ok(graph),
        Err(e) if !Path::new(spec).exists() => Err(e.into()),
        Err(_) => Ok(PlanarBicubicGraph::parse(&fs::read_to_string(spec)?)?),
    }
}

fn parse_faces(s: &str) -> Result<(usize, usize), String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [a, b] = parts[..] else {
        return Err("expected two faces, e.g. 1,2".into());
    };
    let parse = |x: &str| match x.parse::<usize>() {
        Ok(v) if v >= 1 => Ok(v - 1),
        _ => Err(format!("invalid face {x:?} (faces are 1-based)")),
    };
    Ok((parse(a)?, parse(b)?))
}

fn cmd_graph2code(g: &Global, spec: &str, faces: Option<(usize, usize)>, name: Option<&str>) -> CliResult {
    let graph = load_graph(spec)?;
    let validation = graph.validate();
    if !validation.is_valid() {
        for c in validation.failures() {
            eprintln!("check {} failed: {}", c.name, c.detail);
        }
        validation.into_result()?;
    }
    let (f1, f2) = match faces {
        Some(pair) => pair,
        None => default_face_pair(&graph)?,
    };
    let code = graph_to_selfdual_code(&graph, f1, f2)?;
    let report = analyze(&code, &options(g))?;
    let label = name.unwrap_or(&graph.name).to_string();
    emit_report(g, &label, &report, json!({ "faces": [f1 + 1, f2 + 1] }));
    save(
        g,
        &label,
        Provenance::Graph {
            graph: graph.name.clone(),
            faces: [f1 + 1, f2 + 1],
        },
        &code,
        &report,
    )?;
    Ok(ExitCode::SUCCESS)
}

fn load_base(spec: &str) -> CliResult<(String, BinaryMatrix)> {
    match Base::parse(spec) {
        Some(b) => Ok((b.name().to_string(), b.matrix())),
        None => Ok((spec.to_string(), BinaryMatrix::parse_text(&fs::read_to_string(spec)?)?)),
    }
}

fn expected_for(args: &LiftArgs, hex: &str) -> CliResult<(Family, u32)> {
    if let (Some(f), Some(b)) = (&args.family, args.beta) {
        let family = Family::parse(f).ok_or_else(|| format!("unknown family {f}"))?;
        return Ok((family, b));
    }
    tables::TABLE1
        .iter()
        .chain(tables::TABLE2.iter())
        .find(|r| r.hex.eq_ignore_ascii_case(hex))
        .map(|r| (r.family, r.beta))
        .ok_or_else(|| "--repair needs --family and --beta for strings not in the tables".into())
}

fn cmd_lift(g: &Global, args: &LiftArgs) -> CliResult {
    let (base_name, base) = load_base(&args.base)?;
    let (hex, seed) = if args.random {
        let seed = args.seed.expect("clap requires --seed");
        let lift = random_lift(&base, seed)?;
        (lift.candidate.upper_hex(), Some(seed))
    } else {
        let hex = args.hex.clone().ok_or("give a hex string or --random --seed S")?;
        (hex.trim().to_ascii_uppercase(), None)
    };

    if args.repair {
        let expected = expected_for(args, &hex)?;
        let candidates = if hex.len() == UPPER_LEN {
            repair_substitution(&hex, &base, expected, g.threads)?
        } else {
            repair_hex(&hex, &base, expected, g.threads)?
        };
        if g.json {
            let list: Vec<_> = candidates
                .iter()
                .map(|c| json!({ "hex": c.hex, "report": c.report }))
                .collect();
            println!("{}", serde_json::to_string_pretty(&json!({ "input": hex, "repairs": list }))?);
        } else {
            println!("{} repair candidate(s) for beta={} in {}", candidates.len(), expected.1, expected.0);
            for c in &candidates {
                println!("  {}: {}", c.hex, c.report.summary());
            }
        }
        return Ok(if candidates.len() == 1 {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        });
    }

    let upper = match decode_upper(&hex) {
        Err(Error::HexLength { actual, expected }) => {
            return Err(format!(
                "upper-triangular hex string has {actual} digits, expected {expected}; \
                 treat it as an erratum and rerun with --repair"
            )
            .into())
        }
        other => other?,
    };
    let lifts = complete_lower(&upper, &base)?;
    let name = args.name.clone().unwrap_or_else(|| match seed {
        Some(s) => format!("{base_name}-seed{s}"),
        None => tables::TABLE1
            .iter()
            .chain(tables::TABLE2.iter())
            .find(|r| r.hex == hex)
            .map_or_else(|| format!("lift-{}", &hex[..8]), |r| r.name.to_string()),
    });
    for (i, lift) in lifts.iter().enumerate() {
        let code = gray_image(&lift.k)?;
        let report = analyze(&code, &options(g))?;
        let label = if lifts.len() == 1 {
            name.clone()
        } else {
            format!("{name}-{i}")
        };
        emit_report(
            g,
            &label,
            &report,
            json!({ "base": base_name, "hex": hex, "completions": lifts.len(), "seed": seed }),
        );
        save(
            g,
            &label,
            Provenance::Lift {
                base: base_name.clone(),
                hex: hex.clone(),
                seed,
                rng: seed.map(|_| RNG_NAME.to_string()),
            },
            &code,
            &report,
        )?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_analyze(g: &Global, file: &Path) -> CliResult {
    let m = BinaryMatrix::parse_text(&fs::read_to_string(file)?)?;
    let code = BinaryCode::new(m)?;
    let report = analyze(&code, &options(g))?;
    emit_report(g, &file.display().to_string(), &report, json!({}));
    Ok(ExitCode::SUCCESS)
}

/// A stored entry of that name, else the Gray image of the published lift.
fn base_code(g: &Global, name: &str) -> CliResult<BinaryCode> {
    let st = store(g)?;
    if st.list()?.iter().any(|n| n == name) {
        return Ok(st.load(name)?.code()?);
    }
    let row = tables::lift_row(name).ok_or_else(|| format!("no stored code or table lift named {name}"))?;
    let lifts = complete_lower(&decode_upper(row.hex)?, &row.base.matrix())?;
    Ok(gray_image(&lifts[0].k)?)
}

fn cmd_extend(g: &Global, base: &str, x: &str, name: Option<&str>) -> CliResult {
    let code = base_code(g, base)?;
    let xv = expand_x(x, code.n())?;
    let ext = extend(&code, &xv)?;
    let report = analyze(&ext, &options(g))?;
    let label = name.map_or_else(|| format!("{base}-ext"), str::to_string);
    emit_report(g, &label, &report, json!({ "base": base, "x": xv.to_string() }));
    save(
        g,
        &label,
        Provenance::Extension {
            base: base.to_string(),
            x: xv.to_string(),
        },
        &ext,
        &report,
    )?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_reproduce(g: &Global, table: &str, repair: bool) -> CliResult {
    let selection = TableId::parse_selection(table).ok_or_else(|| format!("unknown table {table}"))?;
    let report = reproduce(
        &selection,
        &ReproOptions {
            threads: g.threads,
            repair,
        },
    )?;
    if g.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    Ok(if report.success() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn parse_target(s: &str) -> CliResult<(Family, Option<u32>)> {
    let (f, b) = match s.split_once(':') {
        Some((f, b)) => (f, Some(b.parse::<u32>()?)),
        None => (s, None),
    };
    let family = Family::parse(f).ok_or_else(|| format!("unknown family {f}"))?;
    Ok((family, b))
}

fn cmd_search(g: &Global, base: &str, budget: u64, seed: u64, min_distance: usize, targets: &[String]) -> CliResult {
    let (base_name, matrix) = load_base(base)?;
    let criteria = SearchCriteria {
        min_distance,
        targets: targets.iter().map(|t| parse_target(t)).collect::<CliResult<_>>()?,
    };
    let found = search_lifts(&base_name, &matrix, &criteria, seed, budget, g.threads)?;
    let st = store(g)?;
    for d in &found {
        let lifts = complete_lower(&decode_upper(&d.hex)?, &matrix)?;
        let code = gray_image(&lifts[0].k)?;
        let report = analyze(&code, &options(g))?;
        let entry = CodeStoreEntry::new(
            &format!("{base_name}-seed{}", d.seed),
            Provenance::Lift {
                base: base_name.clone(),
                hex: d.hex.clone(),
                seed: Some(d.seed),
                rng: Some(d.rng.clone()),
            },
            &code,
            report,
        );
        st.save(&entry)?;
    }
    if g.json {
        println!("{}", serde_json::to_string_pretty(&found)?);
    } else {
        println!("{} discovery(ies) in {budget} draws from seed {seed}", found.len());
        for d in &found {
            let fam = d.family.map_or("-".to_string(), |f| f.to_string());
            let beta = d.beta.map_or("-".to_string(), |b| b.to_string());
            println!("  seed {}: {} beta={beta} in {fam}, A12 pairs={:?}", d.seed, d.hex, d.a12_pair);
        }
    }
    Ok(ExitCode::SUCCESS)
}
