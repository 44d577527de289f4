use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ldimkit::bounds::{
    check_ind_freq_claim, conflict_graph, independent_set, min_m_certifying, multiset_lower_bound,
    signature_audit, turan_independence_floor,
};
use ldimkit::fixtures::{emit_orders, parse_orders, Table};
use ldimkit::sat::{
    decode_realizer, encode_with, ldim_exact_with, parse_solver_output, resolve_solver,
    solve_instance, write_cnf, write_var_map, EncodeOptions, SolverStatus,
};
use ldimkit::singleton::{
    build_singleton_realizer, default_block_width, singleton_frequency_bound,
};
use ldimkit::{
    build_bn_realizer, build_standard_realizer, verify_local_realizer, Error, Poset, PosetSpec,
    RealizerFamily,
};

#[derive(Parser)]
#[command(name = "ldimkit", version, about = "Local dimension of posets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check that an orders file is a local realizer of a poset.
    Verify {
        #[arg(long)]
        poset: PosetSpec,
        #[arg(long)]
        orders: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Construct a realizer and write it as an orders file.
    Build {
        #[command(subcommand)]
        what: BuildKind,
    },
    /// Write the CNF instance "realizer with k orders and frequency <= d".
    Encode {
        #[arg(long)]
        poset: PosetSpec,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        /// Also write the variable map to this file.
        #[arg(long)]
        map: Option<PathBuf>,
        #[command(flatten)]
        encoding: EncodingFlags,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Solve one instance, or decode a solver output file with --model.
    Solve {
        #[arg(long)]
        poset: PosetSpec,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        solver: Option<String>,
        /// Decode this solver output instead of running a solver.
        #[arg(long)]
        model: Option<PathBuf>,
        #[command(flatten)]
        encoding: EncodingFlags,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Write the decoded realizer here.
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Exact local dimension by repeated SAT queries.
    Ldim {
        #[arg(long)]
        poset: PosetSpec,
        #[arg(long = "d-max")]
        d_max: Option<usize>,
        #[arg(long)]
        solver: Option<String>,
        #[command(flatten)]
        encoding: EncodingFlags,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Write the optimal realizer here.
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Evaluate lower bounds and audits.
    Analyze {
        #[command(subcommand)]
        what: AnalyzeKind,
    },
    /// Print an embedded realizer table.
    Tables {
        which: TableName,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Clone, Copy)]
struct EncodingFlags {
    /// Symmetry breaking: nonempty orders come first.
    #[arg(long)]
    used_orders_first: bool,
}

impl From<EncodingFlags> for EncodeOptions {
    fn from(f: EncodingFlags) -> Self {
        EncodeOptions {
            used_orders_first: f.used_orders_first,
        }
    }
}

#[derive(Subcommand)]
enum BuildKind {
    /// Realizer of boolean(n) with frequency ceil(5n/7).
    Bn {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// The n linear extensions realizing boolean(n).
    Standard {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Block construction for singleton(n).
    Singleton {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum AnalyzeKind {
    /// Frequency floor for realizers of singleton(n) with a given size.
    Turan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        size: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Lower bound on ldim of the multiset singleton poset.
    MultisetBound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Least m for which the multiset bound exceeds n - 1.
    MinM {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Conflict graph and independence claim for a realizer of singleton(n).
    Conflict {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        orders: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Interval-signature audit for a realizer of multiset-singleton(n, m).
    Signature {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        orders: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableName {
    B4,
    B7,
}

impl From<TableName> for Table {
    fn from(t: TableName) -> Self {
        match t {
            TableName::B4 => Table::B4,
            TableName::B7 => Table::B7,
        }
    }
}

/// Process outcome apart from errors: `Ok(true)` exits 0, `Ok(false)` exits 1.
type Outcome = Result<bool, Error>;

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Parameter(_) | Error::Range { .. } | Error::Parse { .. } => 2,
        Error::Contract(_) | Error::BoundExceeded(_) => 1,
        Error::Environment(_) | Error::Io(_) | Error::Protocol(_) | Error::Decode(_) => 3,
    }
}

fn read_orders(path: &Path) -> Result<RealizerFamily, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Environment(format!("cannot read {}: {e}", path.display())))?;
    parse_orders(&text)
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), Error> {
    match path {
        Some(p) => fs::write(p, text)
            .map_err(|e| Error::Environment(format!("cannot write {}: {e}", p.display()))),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn print_json(value: &impl Serialize) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report serializes")
    );
}

#[derive(Serialize)]
struct BuildSummary {
    poset: String,
    size: usize,
    frequency: usize,
    predicted_bound: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<usize>,
}

impl BuildSummary {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("summary serializes") + "\n",
            Format::Text => {
                let mut s = format!("poset: {}\n", self.poset);
                if let (Some(d), Some(r)) = (self.d, self.r) {
                    s += &format!("d: {d}\nr: {r}\n");
                }
                s += &format!(
                    "predicted bound: {}\nfrequency: {}\nsize: {}\n",
                    self.predicted_bound, self.frequency, self.size
                );
                s
            }
        }
    }
}

/// Orders go to `-o` or stdout; the summary goes to stdout when the orders
/// are in a file and to stderr otherwise.
fn emit_build(
    family: &RealizerFamily,
    summary: BuildSummary,
    format: Format,
    output: Option<&Path>,
) -> Outcome {
    write_output(output, &emit_orders(family))?;
    let text = summary.render(format);
    if output.is_some() {
        print!("{text}");
    } else {
        eprint!("{text}");
    }
    Ok(true)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Verify {
            poset,
            orders,
            format,
        } => {
            let poset = Poset::build(&poset)?;
            let family = read_orders(&orders)?;
            let report = verify_local_realizer(&poset, &family)?;
            match format {
                Format::Json => print_json(&report),
                Format::Text => {
                    println!("poset: {poset}");
                    println!("accepted: {}", report.accepted);
                    println!("size: {}", report.size);
                    println!("frequency: {}", report.frequency);
                    for (kind, count) in &report.totals {
                        println!("total {kind}: {count}");
                    }
                    for v in &report.violations {
                        println!("violation: {v}");
                    }
                }
            }
            Ok(report.accepted)
        }
        Command::Build { what } => match what {
            BuildKind::Bn { n, format, output } => {
                let family = build_bn_realizer(n)?;
                let summary = BuildSummary {
                    poset: PosetSpec::Boolean(n).to_string(),
                    size: family.size(),
                    frequency: family.frequency(),
                    predicted_bound: (5 * n).div_ceil(7),
                    d: None,
                    r: None,
                };
                emit_build(&family, summary, format, output.as_deref())
            }
            BuildKind::Standard { n, format, output } => {
                let family = build_standard_realizer(n)?;
                let summary = BuildSummary {
                    poset: PosetSpec::Boolean(n).to_string(),
                    size: family.size(),
                    frequency: family.frequency(),
                    predicted_bound: n,
                    d: None,
                    r: None,
                };
                emit_build(&family, summary, format, output.as_deref())
            }
            BuildKind::Singleton {
                n,
                d,
                format,
                output,
            } => {
                let d = match d {
                    Some(d) => d,
                    None => default_block_width(n)?,
                };
                let family = build_singleton_realizer(n, Some(d))?;
                let (block, big) = singleton_frequency_bound(n, d);
                let summary = BuildSummary {
                    poset: PosetSpec::Singleton(n).to_string(),
                    size: family.size(),
                    frequency: family.frequency(),
                    predicted_bound: block.max(big),
                    d: Some(d),
                    r: Some(n.div_ceil(d)),
                };
                emit_build(&family, summary, format, output.as_deref())
            }
        },
        Command::Encode {
            poset,
            k,
            d,
            map,
            encoding,
            output,
        } => {
            if k == 0 || d == 0 {
                return Err(Error::Parameter("k and d must be at least 1".into()));
            }
            let poset = Poset::build(&poset)?;
            let ((cnf, var_map), _) = encode_with(&poset, k, d, encoding.into());
            match output {
                Some(path) => write_cnf(&cnf, &mut fs::File::create(path)?)?,
                None => write_cnf(&cnf, &mut io::stdout().lock())?,
            }
            if let Some(path) = map {
                write_var_map(&var_map, &mut fs::File::create(path)?)?;
            }
            Ok(true)
        }
        Command::Solve {
            poset,
            k,
            d,
            solver,
            model,
            encoding,
            format,
            output,
        } => {
            if k == 0 || d == 0 {
                return Err(Error::Parameter("k and d must be at least 1".into()));
            }
            let poset = Poset::build(&poset)?;
            let (status, family) = match model {
                Some(path) => {
                    let text = fs::read_to_string(&path).map_err(|e| {
                        Error::Environment(format!("cannot read {}: {e}", path.display()))
                    })?;
                    let result = parse_solver_output(&text, None)?;
                    let family = match &result.model {
                        Some(model) => {
                            let ((_, map), _) = encode_with(&poset, k, d, encoding.into());
                            let family = decode_realizer(model, &map)?;
                            let report = verify_local_realizer(&poset, &family)?;
                            if !report.accepted || report.frequency > d {
                                return Err(Error::Decode(
                                    "model decodes to a family that fails verification".into(),
                                ));
                            }
                            Some(family)
                        }
                        None => None,
                    };
                    (result.status, family)
                }
                None => {
                    let solver = resolve_solver(solver.as_deref())?;
                    let outcome = solve_instance(&poset, k, d, &solver, encoding.into())?;
                    (outcome.status, outcome.realizer)
                }
            };
            report_solve(status, family.as_ref(), format, output.as_deref())
        }
        Command::Ldim {
            poset,
            d_max,
            solver,
            encoding,
            format,
            output,
        } => {
            let poset = Poset::build(&poset)?;
            let solver = resolve_solver(solver.as_deref())?;
            let search = ldim_exact_with(&poset, d_max, &solver, encoding.into())?;
            if let Some(path) = output.as_deref() {
                write_output(Some(path), &emit_orders(&search.certificate))?;
            }
            #[derive(Serialize)]
            struct Step {
                d: usize,
                k: usize,
                variables: usize,
                clauses: usize,
                status: &'static str,
            }
            #[derive(Serialize)]
            struct LdimOut {
                poset: String,
                ldim: usize,
                steps: Vec<Step>,
            }
            let out = LdimOut {
                poset: poset.to_string(),
                ldim: search.ldim,
                steps: search
                    .steps
                    .iter()
                    .map(|s| Step {
                        d: s.d,
                        k: s.k,
                        variables: s.variables,
                        clauses: s.clauses,
                        status: status_name(s.status),
                    })
                    .collect(),
            };
            match format {
                Format::Json => print_json(&out),
                Format::Text => {
                    println!("poset: {}", out.poset);
                    for s in &out.steps {
                        println!(
                            "d = {}, k = {}: {} ({} variables, {} clauses)",
                            s.d, s.k, s.status, s.variables, s.clauses
                        );
                    }
                    println!("ldim: {}", out.ldim);
                }
            }
            Ok(true)
        }
        Command::Analyze { what } => analyze(what),
        Command::Tables { which, output } => {
            let family = Table::from(which).family();
            write_output(output.as_deref(), &emit_orders(&family))?;
            Ok(true)
        }
    }
}

fn status_name(s: SolverStatus) -> &'static str {
    match s {
        SolverStatus::Sat => "sat",
        SolverStatus::Unsat => "unsat",
        SolverStatus::Unknown => "unknown",
    }
}

fn report_solve(
    status: SolverStatus,
    family: Option<&RealizerFamily>,
    format: Format,
    output: Option<&Path>,
) -> Outcome {
    if let (Some(path), Some(f)) = (output, family) {
        write_output(Some(path), &emit_orders(f))?;
    }
    #[derive(Serialize)]
    struct SolveOut {
        status: &'static str,
        #[serde(skip_serializing_if = "Option::is_none")]
        frequency: Option<usize>,
        #[serde(skip_serializing_if = "Option::is_none")]
        size: Option<usize>,
    }
    let out = SolveOut {
        status: status_name(status),
        frequency: family.map(RealizerFamily::frequency),
        size: family.map(RealizerFamily::size),
    };
    match format {
        Format::Json => print_json(&out),
        Format::Text => {
            println!("status: {}", out.status);
            if let (Some(f), Some(s)) = (out.frequency, out.size) {
                println!("frequency: {f}\nsize: {s}");
            }
            if output.is_none() {
                if let Some(f) = family {
                    print!("{}", emit_orders(f));
                }
            }
        }
    }
    match status {
        SolverStatus::Sat => Ok(true),
        SolverStatus::Unsat => Ok(false),
        SolverStatus::Unknown => Err(Error::Protocol("solver returned UNKNOWN".into())),
    }
}

fn analyze(what: AnalyzeKind) -> Outcome {
    match what {
        AnalyzeKind::Turan { n, size, format } => {
            let r = turan_independence_floor(n, size)?;
            match format {
                Format::Json => print_json(&r),
                Format::Text => {
                    println!("n: {n}\nsize: {size}\nc: {}", r.c.unwrap_or_default());
                    println!(
                        "independent set size: {}",
                        r.independence.unwrap_or_default()
                    );
                    println!("frequency floor: {}\nceiling: {}", r.bound, r.ceiling);
                }
            }
            Ok(true)
        }
        AnalyzeKind::MultisetBound { n, m, format } => {
            let r = multiset_lower_bound(n, m)?;
            match format {
                Format::Json => print_json(&r),
                Format::Text => {
                    println!("n: {n}\nm: {m}\nbound: {}\nceiling: {}", r.bound, r.ceiling);
                    println!("certifying: {}", r.certifying);
                }
            }
            Ok(true)
        }
        AnalyzeKind::MinM { n, format } => {
            let m = min_m_certifying(n)?;
            let r = multiset_lower_bound(n, m)?;
            match format {
                Format::Json => print_json(&r),
                Format::Text => println!("n: {n}\nmin m: {m}\nbound: {}", r.bound),
            }
            Ok(true)
        }
        AnalyzeKind::Conflict { n, orders, format } => {
            let family = read_orders(&orders)?;
            let graph = conflict_graph(&family, n)?;
            let set = independent_set(&graph);
            let claim_set: Vec<usize> = set.iter().copied().take(n.saturating_sub(2)).collect();
            let claim = check_ind_freq_claim(n, &family, &claim_set)?;
            let floor = turan_independence_floor(n, family.size())?;
            #[derive(Serialize)]
            struct ConflictOut {
                n: usize,
                size: usize,
                frequency: usize,
                edges: Vec<(usize, usize)>,
                independent_set: Vec<usize>,
                claim_holds: bool,
                turan: ldimkit::bounds::BoundReport,
            }
            let out = ConflictOut {
                n,
                size: family.size(),
                frequency: family.frequency(),
                edges: graph.edges.iter().copied().collect(),
                independent_set: set,
                claim_holds: claim,
                turan: floor,
            };
            match format {
                Format::Json => print_json(&out),
                Format::Text => {
                    println!(
                        "n: {}\nsize: {}\nfrequency: {}",
                        out.n, out.size, out.frequency
                    );
                    println!("edges: {}", out.edges.len());
                    println!("independent set: {:?}", out.independent_set);
                    println!("claim holds: {}", out.claim_holds);
                    println!("turan floor: {}", out.turan.bound);
                }
            }
            Ok(claim)
        }
        AnalyzeKind::Signature {
            n,
            m,
            orders,
            format,
        } => {
            let family = read_orders(&orders)?;
            let audit = signature_audit(n, m, &family)?;
            match format {
                Format::Json => print_json(&audit),
                Format::Text => {
                    println!(
                        "intervals: {} (bound {})",
                        audit.intervals, audit.interval_bound
                    );
                    println!(
                        "signatures: {} distinct for {} multisets",
                        audit.distinct_signatures, audit.non_singleton_count
                    );
                    println!("injective: {}", audit.injective);
                }
            }
            Ok(audit.holds())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("ERROR:{}: {err}", err.category());
            ExitCode::from(exit_code(&err))
        }
    }
}
