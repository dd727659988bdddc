use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use nclattice::acceptance::{self, Faults};
use nclattice::enumeration::{cross_check, Legs, DEFAULT_BRUTE_FORCE_POINTS};
use nclattice::geometry::{standard_config, Configuration, Family};
use nclattice::partition::DEFAULT_MAX_POINTS;
use nclattice::poset::{is_self_dual, NcLattice, DEFAULT_MAX_ISO_ELEMENTS};
use nclattice::scd::scd_family;
use nclattice::Error;

/// Noncrossing partition lattices of planar point configurations.
#[derive(Parser)]
#[command(name = "nclattice", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a configuration as JSON.
    Config(Source),
    /// Export the Hasse diagram of NC(P).
    Lattice {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = LatticeFormat::Json)]
        format: LatticeFormat,
        #[command(flatten)]
        caps: Caps,
    },
    /// Check order-theoretic properties of NC(P).
    Check {
        #[command(flatten)]
        source: Source,
        /// Comma-separated subset of graded, rank-symmetric, self-dual, lattice.
        #[arg(long, value_delimiter = ',', default_value = "graded,rank-symmetric")]
        properties: Vec<Property>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        #[command(flatten)]
        caps: Caps,
    },
    /// Build and verify a symmetric chain decomposition for a standard family.
    Scd {
        family: String,
        m: usize,
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
        #[command(flatten)]
        caps: Caps,
    },
    /// Counting tables with cross-checks between recurrence, series and brute force.
    Tables {
        family: String,
        m: usize,
        n: Option<usize>,
        /// Comma-separated subset of recurrence, series, brute.
        #[arg(long, value_delimiter = ',', default_value = "recurrence,series")]
        legs: Vec<Leg>,
        /// Largest configuration the brute-force leg enumerates.
        #[arg(long, default_value_t = DEFAULT_BRUTE_FORCE_POINTS)]
        brute_max_points: usize,
        #[arg(long, value_enum, default_value_t = TablesFormat::Csv)]
        format: TablesFormat,
    },
    /// Run the acceptance suite.
    VerifyPaper {
        /// Run only criteria whose id, tag or group matches.
        #[arg(long)]
        only: Option<String>,
        #[arg(long, hide = true)]
        inject_fault: Option<Fault>,
    },
}

/// A standard family with parameters, or a JSON file.
#[derive(Args)]
struct Source {
    /// P, Q, T, U, V or S.
    family: Option<String>,
    m: Option<usize>,
    n: Option<usize>,
    /// Read the configuration from a JSON file instead.
    #[arg(long, conflicts_with_all = ["family", "m", "n"])]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct Caps {
    #[arg(long, env = "NCLATTICE_MAX_POINTS", default_value_t = DEFAULT_MAX_POINTS)]
    max_points: usize,
    #[arg(long, env = "NCLATTICE_MAX_DUALITY_ELEMENTS", default_value_t = DEFAULT_MAX_ISO_ELEMENTS)]
    max_duality_elements: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum LatticeFormat {
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TablesFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Property {
    Graded,
    RankSymmetric,
    SelfDual,
    Lattice,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Leg {
    Recurrence,
    Series,
    Brute,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Fault {
    SOffByOne,
}

enum Failure {
    Usage(String),
    Lib(Error),
    Io(String),
    /// The report was printed; some check did not pass.
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Io(_) => 3,
            Failure::Checks => 1,
            Failure::Lib(e) => match e {
                Error::UnknownFamily(_) => 2,
                Error::Parse(_)
                | Error::DuplicatePoint { .. }
                | Error::LabelMismatch { .. }
                | Error::EmptyConfiguration => 3,
                Error::TooLarge { .. } => 4,
                Error::AssemblyFailure(_) => 5,
                _ => 1,
            },
        }
    }
}

type Outcome = std::result::Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = match cli.command {
        Command::Config(source) => load(&source).map(|c| c.to_json() + "\n"),
        Command::Lattice { source, format, caps } => lattice(&source, format, &caps),
        Command::Check {
            source,
            properties,
            format,
            caps,
        } => check(&source, &properties, format, &caps, &mut out),
        Command::Scd {
            family,
            m,
            n,
            format,
            caps,
        } => scd(&family, m, n, format, &caps),
        Command::Tables {
            family,
            m,
            n,
            legs,
            brute_max_points,
            format,
        } => tables(&family, m, n, &legs, brute_max_points, format, &mut out),
        Command::VerifyPaper { only, inject_fault } => verify(only.as_deref(), inject_fault, &mut out),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            print!("{out}");
            match &failure {
                Failure::Usage(msg) | Failure::Io(msg) => eprintln!("error: {msg}"),
                Failure::Lib(e) => eprintln!("error: {e}"),
                Failure::Checks => {}
            }
            ExitCode::from(failure.exit_code())
        }
    }
}

fn family_arg(name: &str) -> std::result::Result<Family, Failure> {
    match name.parse::<Family>() {
        Ok(Family::Generic) | Err(_) => Err(Failure::Usage(format!("unknown family `{name}`; expected P, Q, T, U, V or S"))),
        Ok(f) => Ok(f),
    }
}

fn load(source: &Source) -> std::result::Result<Configuration, Failure> {
    if let Some(path) = &source.input {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
        return Ok(Configuration::from_json(&text)?);
    }
    let Some(name) = &source.family else {
        return Err(Failure::Usage("give a family with parameters, or --input FILE".into()));
    };
    let family = family_arg(name)?;
    let Some(m) = source.m else {
        return Err(Failure::Usage(format!("family {family} needs a size parameter")));
    };
    if !family.is_single_parameter() && source.n.is_none() {
        return Err(Failure::Usage(format!("family {family} needs two parameters m n")));
    }
    Ok(standard_config(family, m, source.n.unwrap_or(0))?)
}

fn lattice(source: &Source, format: LatticeFormat, caps: &Caps) -> Outcome {
    let lattice = NcLattice::build(&load(source)?, caps.max_points)?;
    Ok(match format {
        LatticeFormat::Json => serde_json::to_string_pretty(&lattice.to_json()).expect("json") + "\n",
        LatticeFormat::Dot => lattice.to_dot(),
    })
}

struct PropertyResult {
    name: &'static str,
    pass: bool,
    detail: Value,
}

fn check(source: &Source, properties: &[Property], format: ReportFormat, caps: &Caps, out: &mut String) -> Outcome {
    let lattice = NcLattice::build(&load(source)?, caps.max_points)?;
    let info = lattice.gradedness();
    let mut results = Vec::new();
    for &p in properties {
        results.push(match p {
            Property::Graded => PropertyResult {
                name: "graded",
                pass: info.is_graded,
                detail: match info.witness {
                    None => json!({ "rank_vector": info.rank_vector }),
                    Some((a, b)) => json!({
                        "witness_cover": [lattice.label(a), lattice.label(b)],
                        "ranks": [lattice.poset().rank(a), lattice.poset().rank(b)],
                    }),
                },
            },
            Property::RankSymmetric => PropertyResult {
                name: "rank-symmetric",
                pass: lattice.is_rank_symmetric().unwrap_or(false),
                detail: if info.is_graded {
                    json!({ "rank_vector": info.rank_vector })
                } else {
                    json!({ "reason": "not graded" })
                },
            },
            Property::SelfDual => {
                let map = is_self_dual(lattice.poset(), caps.max_duality_elements)?;
                PropertyResult {
                    name: "self-dual",
                    pass: map.is_some(),
                    detail: json!({ "anti_automorphism": map }),
                }
            }
            Property::Lattice => {
                let bad = lattice_witness(&lattice);
                PropertyResult {
                    name: "lattice",
                    pass: bad.is_none(),
                    detail: match bad {
                        None => json!({ "elements": lattice.len() }),
                        Some((a, b)) => json!({ "pair_without_join": [lattice.label(a), lattice.label(b)] }),
                    },
                }
            }
        });
    }
    let report = match format {
        ReportFormat::Json => {
            let props: serde_json::Map<String, Value> = results
                .iter()
                .map(|r| (r.name.to_string(), json!({ "pass": r.pass, "detail": r.detail })))
                .collect();
            serde_json::to_string_pretty(&json!({ "elements": lattice.len(), "properties": props })).expect("json") + "\n"
        }
        ReportFormat::Text => {
            let mut s = String::new();
            for r in &results {
                let _ = writeln!(s, "{}: {} {}", r.name, if r.pass { "PASS" } else { "FAIL" }, r.detail);
            }
            s
        }
    };
    if results.iter().all(|r| r.pass) {
        Ok(report)
    } else {
        out.push_str(&report);
        Err(Failure::Checks)
    }
}

/// A pair whose upper bounds have no least element, if any.
fn lattice_witness(lattice: &NcLattice) -> Option<(usize, usize)> {
    let p = lattice.poset();
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            let mut bounds = p.up_set(a).clone();
            bounds.intersect_with(p.up_set(b));
            if p.up_set(lattice.join(a, b)) != &bounds {
                return Some((a, b));
            }
        }
    }
    None
}

fn scd(family: &str, m: usize, n: Option<usize>, format: ReportFormat, caps: &Caps) -> Outcome {
    let family = family_arg(family)?;
    if !family.is_single_parameter() && n.is_none() {
        return Err(Failure::Usage(format!("family {family} needs two parameters m n")));
    }
    let n = n.unwrap_or(0);
    let c = scd_family(family, m, n, caps.max_points)?;
    let lattice = &c.lattice;
    Ok(match format {
        ReportFormat::Json => {
            let chains: Vec<Vec<&nclattice::SetPartition>> = c
                .decomposition
                .chains
                .iter()
                .map(|ch| ch.iter().map(|&i| lattice.element(i)).collect())
                .collect();
            let doc = json!({
                "family": family.letter(),
                "m": m,
                "n": n,
                "labels": lattice.config().labels(),
                "elements": lattice.len(),
                "covered": c.decomposition.element_count(),
                "verified": true,
                "rank_vector": lattice.rank_vector()?,
                "pieces": c.pieces,
                "chains": chains,
            });
            serde_json::to_string_pretty(&doc).expect("json") + "\n"
        }
        ReportFormat::Text => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "{}({m},{n}): {} elements in {} chains, verified",
                family.letter(),
                lattice.len(),
                c.decomposition.len()
            );
            let mut lengths: Vec<usize> = c.decomposition.chains.iter().map(Vec::len).collect();
            lengths.sort_unstable_by(|a, b| b.cmp(a));
            lengths.dedup();
            for len in lengths {
                let group: Vec<&Vec<usize>> = c.decomposition.chains.iter().filter(|ch| ch.len() == len).collect();
                let _ = writeln!(s, "length {len}: {} chain(s)", group.len());
                for ch in group {
                    let labels: Vec<String> = ch.iter().map(|&i| format!("[{}]", lattice.label(i))).collect();
                    let _ = writeln!(s, "  {}", labels.join(" < "));
                }
            }
            s
        }
    })
}

fn tables(
    family: &str,
    m: usize,
    n: Option<usize>,
    legs: &[Leg],
    brute_max_points: usize,
    format: TablesFormat,
    out: &mut String,
) -> Outcome {
    let family = family_arg(family)?;
    let (m, n) = match (family, n) {
        (Family::T, None) => (0, m),
        (Family::U | Family::V | Family::S | Family::T, Some(n)) => (m, n),
        (Family::U | Family::V | Family::S, None) => {
            return Err(Failure::Usage(format!("family {family} needs two parameters M N")))
        }
        _ => return Err(Failure::Usage("tables exist for T, U, V and S".into())),
    };
    let legs = Legs {
        recurrence: legs.contains(&Leg::Recurrence),
        series: legs.contains(&Leg::Series),
        brute: legs.contains(&Leg::Brute),
    };
    let report = cross_check(family, m, n, legs, brute_max_points)?;
    let text = match format {
        TablesFormat::Json => serde_json::to_string_pretty(&report.to_json()).expect("json") + "\n",
        TablesFormat::Csv => {
            let mut s = String::new();
            for (name, table) in [("recurrence", &report.recurrence), ("series", &report.series)] {
                if let Some(t) = table {
                    let _ = writeln!(s, "# {name}");
                    s.push_str(&t.to_csv());
                }
            }
            if let Some(b) = &report.brute {
                let _ = writeln!(s, "# brute (cells above {brute_max_points} points left blank)");
                let _ = writeln!(
                    s,
                    "m\\n{}",
                    (0..b.first().map_or(0, Vec::len)).map(|n| format!(",{n}")).collect::<String>()
                );
                for (m, row) in b.iter().enumerate() {
                    let cells: String = row
                        .iter()
                        .map(|c| format!(",{}", c.as_ref().map(ToString::to_string).unwrap_or_default()))
                        .collect();
                    let _ = writeln!(s, "{m}{cells}");
                }
            }
            if report.agrees() {
                let _ = writeln!(s, "# agreement: all requested legs agree ({} brute-force cells)", report.brute_cells);
            } else {
                for x in &report.mismatches {
                    let _ = writeln!(
                        s,
                        "# mismatch ({},{}): {}={} but {}={}",
                        x.m, x.n, x.leg, x.found, x.against, x.expected
                    );
                }
            }
            s
        }
    };
    if report.agrees() {
        Ok(text)
    } else {
        out.push_str(&text);
        Err(Failure::Checks)
    }
}

fn verify(only: Option<&str>, fault: Option<Fault>, out: &mut String) -> Outcome {
    let selected = acceptance::select(only);
    if selected.is_empty() {
        return Err(Failure::Usage(format!("no criterion matches `{}`", only.unwrap_or_default())));
    }
    let faults = Faults {
        s_recurrence_off_by_one: fault == Some(Fault::SOffByOne),
    };
    let mut s = String::new();
    let mut all = true;
    for c in selected {
        let o = acceptance::run(c, faults);
        all &= o.passed;
        let _ = writeln!(s, "{}", o.line());
    }
    let passed = s.lines().filter(|l| l.starts_with("PASS")).count();
    let _ = writeln!(s, "{passed}/{} criteria passed", s.lines().count());
    if all {
        Ok(s)
    } else {
        out.push_str(&s);
        Err(Failure::Checks)
    }
}
