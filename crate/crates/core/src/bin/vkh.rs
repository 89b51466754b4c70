use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;
use vkh::corpus::{parse_corpus, shipped_corpus, verify_corpus, Outcome, VerifyReport};
use vkh::khovanov::{khovanov, BuilderKind};
use vkh::lee::rasmussen;
use vkh::oracle::bracket_oracle;
use vkh::report::{invariants_report, ColoringChoice};
use vkh::transforms::{dagger, reverse, star, star_dagger, supporting_genus};
use vkh::{coloring, parse_gauss_code, Diagram, Error};

/// Invariants of checkerboard-colorable virtual links from signed Gauss codes.
#[derive(Parser)]
#[command(name = "vkh", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Input {
    /// Signed Gauss code, e.g. 'O1-U2-O3-U1-O2-U3-'. Components are separated by ';'.
    code: Option<String>,
    /// Read the code from a file instead.
    #[arg(long, conflicts_with = "code")]
    file: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ColoringArg {
    Primal,
    Dual,
}

#[derive(Clone, Copy, ValueEnum)]
enum BuilderArg {
    Sourcesink,
    General,
}

#[derive(Clone, Copy, ValueEnum)]
enum MirrorOp {
    Reverse,
    Star,
    Dagger,
    Stardagger,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse and normalize a code.
    Parse(Input),
    /// Full report: genus, colorability, signatures, Kh, s, support lines, D_alt.
    Invariants {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "primal")]
        coloring: ColoringArg,
        #[arg(long, value_enum)]
        builder: Option<BuilderArg>,
    },
    /// Khovanov polynomial.
    Kh {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        builder: Option<BuilderArg>,
    },
    /// Rasmussen invariant from Lee homology.
    Rasmussen(Input),
    /// The alternating diagram D_alt.
    Alt {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "primal")]
        coloring: ColoringArg,
    },
    /// A mirror image or the reverse.
    Mirror {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        op: MirrorOp,
    },
    /// Unnormalized Jones polynomial by direct state sum.
    Bracket(Input),
    /// Recompute a corpus and compare with its expected values.
    Verify {
        /// Corpus JSON; the shipped corpus when omitted.
        corpus: Option<PathBuf>,
        #[arg(long, value_enum)]
        builder: Option<BuilderArg>,
    },
}

enum Failure {
    Usage(String),
    Pipeline(Error),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Pipeline(e)
    }
}

type CliResult = Result<(), Failure>;

fn builder(b: Option<BuilderArg>) -> Option<BuilderKind> {
    b.map(|b| match b {
        BuilderArg::Sourcesink => BuilderKind::SourceSink,
        BuilderArg::General => BuilderKind::General,
    })
}

fn coloring_choice(c: ColoringArg) -> ColoringChoice {
    match c {
        ColoringArg::Primal => ColoringChoice::Primal,
        ColoringArg::Dual => ColoringChoice::Dual,
    }
}

fn read_input(input: &Input) -> Result<Diagram, Failure> {
    let text = match (&input.code, &input.file) {
        (Some(c), _) => c.clone(),
        (None, Some(p)) => std::fs::read_to_string(p)
            .map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?,
        (None, None) => return Err(Failure::Usage("no Gauss code given".into())),
    };
    Ok(parse_gauss_code(text.trim())?)
}

fn print_json(v: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn default_builder(d: &Diagram) -> BuilderKind {
    if coloring::coloring_of(d).is_ok() {
        BuilderKind::SourceSink
    } else {
        BuilderKind::General
    }
}

fn cmd_parse(input: &Input, as_json: bool) -> CliResult {
    let d = read_input(input)?;
    let genus = if d.is_connected() {
        Some(supporting_genus(&d)?)
    } else {
        None
    };
    let crossings: Vec<_> = d
        .crossings()
        .iter()
        .map(|c| json!({"label": c.label, "sign": c.sign}))
        .collect();
    if as_json {
        print_json(&json!({
            "code": d.to_code(),
            "components": d.components().len(),
            "crossings": crossings,
            "n_plus": d.n_plus(),
            "n_minus": d.n_minus(),
            "connected": d.is_connected(),
            "alternating": d.is_alternating(),
            "genus": genus,
        }));
    } else {
        println!("code: {}", d.to_code());
        println!(
            "components: {}, crossings: {} ({} positive, {} negative)",
            d.components().len(),
            d.n(),
            d.n_plus(),
            d.n_minus()
        );
        println!(
            "connected: {}, alternating: {}",
            d.is_connected(),
            d.is_alternating()
        );
        if let Some(g) = genus {
            println!("genus: {g}");
        }
    }
    Ok(())
}

fn print_verify(r: &VerifyReport) {
    for e in &r.entries {
        match e.outcome {
            Outcome::Skipped => continue,
            Outcome::Pass => println!("PASS {} ({:.1} ms)", e.name, e.millis),
            Outcome::Fail => {
                println!("FAIL {}", e.name);
                if let Some(err) = &e.error {
                    println!("  error: {err}");
                }
                for c in e.checks.iter().filter(|c| !c.ok) {
                    println!("  {}: expected {}, got {}", c.field, c.expected, c.got);
                }
            }
        }
    }
    println!(
        "{} passed, {} failed, {} skipped in {:.0} ms",
        r.passed, r.failed, r.skipped, r.millis
    );
}

fn cmd_verify(path: Option<&PathBuf>, b: Option<BuilderArg>, as_json: bool) -> CliResult {
    let entries = match path {
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
            parse_corpus(&text)?
        }
        None => shipped_corpus(),
    };
    let r = verify_corpus(&entries, builder(b).unwrap_or(BuilderKind::General));
    if as_json {
        print_json(&r);
    } else {
        print_verify(&r);
    }
    if let Some(e) = r.entries.iter().find(|e| e.internal) {
        return Err(Failure::Pipeline(Error::Internal(format!(
            "{}: {}",
            e.name,
            e.error.as_deref().unwrap_or_default()
        ))));
    }
    if r.all_passed() {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn run(cli: Cli) -> CliResult {
    let as_json = cli.json;
    match &cli.cmd {
        Cmd::Parse(input) => cmd_parse(input, as_json),
        Cmd::Invariants {
            input,
            coloring,
            builder: b,
        } => {
            let d = read_input(input)?;
            let r = invariants_report(&d, coloring_choice(*coloring), builder(*b))?;
            if as_json {
                print_json(&r);
            } else {
                print!("{r}");
            }
            Ok(())
        }
        Cmd::Kh { input, builder: b } => {
            let d = read_input(input)?;
            let kind = builder(*b).unwrap_or_else(|| default_builder(&d));
            let p = khovanov(&d, kind)?;
            if as_json {
                print_json(
                    &json!({"polynomial": p.to_string(), "builder": kind, "terms": p.to_json()["terms"]}),
                );
            } else {
                println!("{p}");
            }
            Ok(())
        }
        Cmd::Rasmussen(input) => {
            let r = rasmussen(&read_input(input)?)?;
            if as_json {
                print_json(&r);
            } else {
                println!("s = {} (s_min = {}, s_max = {})", r.s, r.s_min, r.s_max);
            }
            Ok(())
        }
        Cmd::Alt { input, coloring: c } => {
            let d = read_input(input)?;
            let (s, col) = coloring::coloring_of(&d)?;
            let col = match c {
                ColoringArg::Primal => col,
                ColoringArg::Dual => col.dual(&s),
            };
            let alt = vkh::transforms::alternatize(&d, &col)?;
            let g = supporting_genus(&alt)?;
            if as_json {
                print_json(&json!({"code": alt.to_code(), "genus": g, "eta": col.eta}));
            } else {
                println!("{}", alt.to_code());
                println!("genus: {g}");
            }
            Ok(())
        }
        Cmd::Mirror { input, op } => {
            let d = read_input(input)?;
            let m = match op {
                MirrorOp::Reverse => reverse(&d),
                MirrorOp::Star => star(&d),
                MirrorOp::Dagger => dagger(&d),
                MirrorOp::Stardagger => star_dagger(&d),
            };
            if as_json {
                print_json(&json!({"code": m.to_code()}));
            } else {
                println!("{}", m.to_code());
            }
            Ok(())
        }
        Cmd::Bracket(input) => {
            let p = bracket_oracle(&read_input(input)?)?;
            if as_json {
                let terms: Vec<_> = p
                    .terms()
                    .map(|(e, c)| json!({"power": e, "coeff": c}))
                    .collect();
                print_json(&json!({"polynomial": p.to_string(), "terms": terms}));
            } else {
                println!("{p}");
            }
            Ok(())
        }
        Cmd::Verify { corpus, builder: b } => cmd_verify(corpus.as_ref(), *b, as_json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch) => ExitCode::from(2),
        Err(Failure::Pipeline(e)) => {
            eprintln!("error: {e}");
            if matches!(e, Error::Internal(_)) {
                ExitCode::from(3)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
