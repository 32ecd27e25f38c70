use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qtmac::macdonald::{
    hall_littlewood, hall_littlewood_root_power, integral_form_j, integral_form_j_m1, mn_macdonald,
    modified_macdonald, positivity_scan, series_truncation, HlVariant, Positivity,
};
use qtmac::oracle::{llt_schur, ribbons_from_subset};
use qtmac::shapes::ColumnDiagram;
use qtmac::suites::{run_suite, SuiteReport, SUITES};
use qtmac::{Composition, Error, Partition, SchurExpansion};

#[derive(Parser)]
#[command(
    name = "qtmac",
    version,
    about = "Exact raising-operator computations for Macdonald polynomials"
)]
struct Cli {
    #[command(flatten)]
    output: Output,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// JSON output (default)
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Human-readable output
    #[arg(long, global = true)]
    text: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Schur expansion of H~_mu
    Hmu {
        #[arg(long)]
        mu: Partition,
        /// Column order, a rearrangement of mu*
        #[arg(long)]
        beta: Option<Composition>,
    },
    /// Schur expansion of H~^{m,n}_mu
    Hmn {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        beta: Option<Composition>,
    },
    /// Integral form J_mu
    Jmu {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        beta: Option<Composition>,
        /// Use the m,1 formula with this m
        #[arg(long, default_value_t = 1)]
        m: usize,
    },
    /// Hall-Littlewood polynomial H_mu(X; t)
    Hl {
        #[arg(long)]
        mu: Partition,
        #[arg(long, value_enum, default_value_t = Variant::Root)]
        variant: Variant,
        /// Power of z_1...z_l in the root-side formula
        #[arg(long, default_value_t = 1)]
        n: i32,
    },
    /// LLT polynomial of the ribbon tuple nu(S)
    Llt {
        #[arg(long)]
        beta: Composition,
        /// 1-based positions in the list of vertical dominoes, comma separated
        #[arg(long = "S", value_delimiter = ',')]
        s: Vec<usize>,
    },
    /// pol((z_1...z_l)^a HS_mu), without omega
    Series {
        #[arg(long)]
        mu: Partition,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        shift: i32,
        #[arg(long)]
        beta: Option<Composition>,
    },
    /// Run verification suites
    Verify {
        #[arg(long)]
        suite: Option<String>,
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Schur positivity of H~^{1,n}_mu
    Scan {
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Root,
    Weight,
}

enum Outcome {
    Expansion(SchurExpansion),
    Report { json: Value, text: String, ok: bool },
}

fn run(command: Command) -> Result<Outcome, Error> {
    let out = match command {
        Command::Hmu { mu, beta } => modified_macdonald(&mu, beta.as_ref())?,
        Command::Hmn { mu, m, n, beta } => mn_macdonald(&mu, m, n, beta.as_ref())?,
        Command::Jmu { mu, beta, m } => match m {
            1 => integral_form_j(&mu, beta.as_ref())?,
            _ => integral_form_j_m1(&mu, m, beta.as_ref())?,
        },
        Command::Hl { mu, variant, n } => match (variant, n) {
            (Variant::Root, 1) => hall_littlewood(&mu, HlVariant::Root)?,
            (Variant::Root, n) => hall_littlewood_root_power(&mu, n)?,
            (Variant::Weight, 1) => hall_littlewood(&mu, HlVariant::Weight)?,
            (Variant::Weight, _) => {
                return Err(Error::Parse("--n applies to the root variant only".into()))
            }
        },
        Command::Llt { beta, s } => {
            let v = ColumnDiagram::new(&beta).vertical_dominoes();
            let mut dominoes = Vec::with_capacity(s.len());
            for k in s {
                let d = k.checked_sub(1).and_then(|i| v.get(i)).ok_or_else(|| {
                    Error::Parse(format!(
                        "--S position {k} out of range, diagram has {} vertical dominoes",
                        v.len()
                    ))
                })?;
                dominoes.push(*d);
            }
            llt_schur(&ribbons_from_subset(&beta, &dominoes)?)
        }
        Command::Series { mu, shift, beta } => series_truncation(&mu, shift, beta.as_ref())?,
        Command::Verify { suite, max_size } => return verify(suite, max_size),
        Command::Scan { max_size, max_n } => return scan(max_size, max_n),
    };
    Ok(Outcome::Expansion(out))
}

fn verify(suite: Option<String>, max_size: Option<usize>) -> Result<Outcome, Error> {
    let names: Vec<&str> = match &suite {
        Some(s) => vec![SUITES
            .iter()
            .find(|(n, _, _)| n == s)
            .map(|(n, _, _)| *n)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))?],
        None => SUITES.iter().map(|(n, _, _)| *n).collect(),
    };
    let mut reports: Vec<SuiteReport> = Vec::new();
    for name in names {
        let start = Instant::now();
        eprintln!("running {name}");
        let r = run_suite(name, max_size)?;
        eprintln!(
            "  {} checks in {:.1}s",
            r.checks.len(),
            start.elapsed().as_secs_f64()
        );
        reports.push(r);
    }
    let ok = reports.iter().all(SuiteReport::passed);
    let mut text = String::new();
    for r in &reports {
        text += &format!("{} {}: {}\n", status(r.passed()), r.suite, r.title);
        for c in &r.checks {
            text += &format!("  {} {}", status(c.passed), c.name);
            if !c.detail.is_empty() {
                text += &format!(": {}", c.detail);
            }
            text.push('\n');
        }
    }
    let json = json!({
        "passed": ok,
        "suites": reports.iter().map(|r| json!({
            "suite": r.suite,
            "passed": r.passed(),
            "checks": r.checks.iter().map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail})).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    });
    Ok(Outcome::Report { json, text, ok })
}

fn scan(max_size: usize, max_n: usize) -> Result<Outcome, Error> {
    eprintln!("scanning |mu| <= {max_size}, n <= {max_n}");
    let entries = positivity_scan(max_size, max_n)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut ok = true;
    for e in entries {
        let (line, row) = match &e.result {
            Positivity::Positive => (
                "positive".to_string(),
                json!({"mu": e.mu.parts(), "n": e.n, "positive": true}),
            ),
            Positivity::Counterexample { partition, coeff } => {
                ok = false;
                (
                    format!("negative coefficient {coeff} at s_{partition}"),
                    json!({"mu": e.mu.parts(), "n": e.n, "positive": false,
                           "partition": partition.parts(), "coeff": coeff.to_string()}),
                )
            }
        };
        text += &format!("mu={} n={}: {line}\n", e.mu, e.n);
        rows.push(row);
    }
    Ok(Outcome::Report {
        json: json!({"passed": ok, "entries": rows}),
        text,
        ok,
    })
}

fn status(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let text = cli.output.text;
    match run(cli.command) {
        Ok(Outcome::Expansion(f)) => {
            if text {
                println!("{f}");
            } else {
                println!("{}", f.to_json());
            }
            ExitCode::SUCCESS
        }
        Ok(Outcome::Report {
            json,
            text: rendered,
            ok,
        }) => {
            if text {
                print!("{rendered}");
            } else {
                println!("{json}");
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
