use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use kostant::g2::{partition_tarski, qpartition};
use kostant::qkwmf::{compute_abcdef, multiplicity, qmultiplicity_closed, qmultiplicity_weyl_sum, Method};
use kostant::rootsys::g2_data;
use kostant::sp4::{
    c2_data, compute_sp4_case, multiplicity_c2_closed, multiplicity_c2_weyl_sum, partition_c2_closed, qpartition_c2,
};
use kostant::verify::{table_rows, verify, write_table, Algebra};
use kostant::{Error, FundCoord, QPoly, RootCoord};

#[derive(Parser)]
#[command(name = "kostant", version, about = "Kostant partition functions and weight q-multiplicities for g2 and sp4")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value = "g2")]
    algebra: AlgebraArg,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct PartitionArgs {
    #[command(flatten)]
    common: Common,
    /// Coordinates as `c1,c2` (negative values allowed).
    #[arg(value_parser = parse_pair, allow_hyphen_values = true)]
    coords: (i64, i64),
    /// Basis of the coordinates; `fundamental` converts a dominant weight to root coordinates.
    #[arg(long, value_enum, default_value = "root")]
    basis: Basis,
}

#[derive(Args)]
struct WeightArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
    lambda: (i64, i64),
    #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
    mu: (i64, i64),
    /// Basis of `--lambda` and `--mu`; `root` converts to fundamental coordinates.
    #[arg(long, value_enum, default_value = "fundamental")]
    basis: Basis,
}

#[derive(Subcommand)]
enum Command {
    /// q-analog of the partition function, in root coordinates.
    Qpartition {
        #[command(flatten)]
        args: PartitionArgs,
        /// Evaluate at an integer q instead of printing the polynomial.
        #[arg(long, allow_hyphen_values = true)]
        at_q: Option<i64>,
    },
    /// Partition function value, in root coordinates.
    Partition {
        #[command(flatten)]
        args: PartitionArgs,
        #[arg(long, value_enum, default_value = "qpoly")]
        method: MethodArg,
    },
    /// Weight q-multiplicity, in fundamental coordinates.
    Qmult {
        #[command(flatten)]
        args: WeightArgs,
        #[arg(long, allow_hyphen_values = true)]
        at_q: Option<i64>,
    },
    /// Weight multiplicity, in fundamental coordinates.
    Mult {
        #[command(flatten)]
        args: WeightArgs,
        #[arg(long, value_enum, default_value = "closed")]
        method: MethodArg,
    },
    /// The values a..f (g2) or a, 2b, c, 2d (sp4) and the selected case.
    Case {
        #[command(flatten)]
        args: WeightArgs,
    },
    /// Run the oracle-equivalence suites and print a report.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 4)]
        max: u32,
    },
    /// Write the g2 case table for every (m,n,x,y) in [0,max]^4 as CSV.
    Table {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        max: u32,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgebraArg {
    G2,
    C2,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Basis {
    Root,
    Fundamental,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    /// Evaluate the q-analog at q = 1.
    Qpoly,
    /// The closed formula (Tarski regions for g2 partitions).
    Closed,
    /// Tarski closed forms for every partition value (g2 only).
    Tarski,
}

enum Failure {
    Lib(Error),
    Usage(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn parse_pair(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected two comma-separated integers, got {s:?}"))?;
    let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("{t:?}: {e}"));
    Ok((parse(a)?, parse(b)?))
}

fn fundamental(p: (i64, i64)) -> Result<FundCoord, Failure> {
    Ok(FundCoord::try_new(p.0, p.1)?)
}

fn weights(args: &WeightArgs) -> Result<(FundCoord, FundCoord), Failure> {
    let convert = |p: (i64, i64)| -> Result<FundCoord, Failure> {
        match args.basis {
            Basis::Fundamental => fundamental(p),
            Basis::Root => {
                let v = RootCoord::new(p.0, p.1);
                let w = match args.common.algebra {
                    AlgebraArg::G2 => g2_data::root_to_fund(v),
                    AlgebraArg::C2 => c2_data().root_to_fund(v)?,
                };
                w.ok_or_else(|| Failure::Usage(format!("{v} is not a dominant integral weight")))
            }
        }
    };
    Ok((convert(args.lambda)?, convert(args.mu)?))
}

fn root_coords(args: &PartitionArgs) -> Result<RootCoord, Failure> {
    match args.basis {
        Basis::Root => Ok(RootCoord::new(args.coords.0, args.coords.1)),
        Basis::Fundamental => {
            let w = fundamental(args.coords)?;
            match args.common.algebra {
                AlgebraArg::G2 => Ok(g2_data::fund_to_root(w)),
                AlgebraArg::C2 => c2_data()
                    .fund_to_root(w)?
                    .ok_or_else(|| Failure::Usage(format!("{w} is not in the root lattice"))),
            }
        }
    }
}

fn emit_poly(out: &mut impl Write, poly: &QPoly, at_q: Option<i64>, format: Format) -> Outcome {
    if let Some(q) = at_q {
        return emit_value(out, poly.eval_at(q)?, format);
    }
    match format {
        Format::Text => writeln!(out, "{poly}")?,
        Format::Latex => writeln!(out, "{}", poly.to_latex())?,
        Format::Json => writeln!(out, "{}", json!({ "coeffs": poly }))?,
    }
    Ok(())
}

fn emit_value(out: &mut impl Write, value: i64, format: Format) -> Outcome {
    match format {
        Format::Json => writeln!(out, "{}", json!({ "value": value }))?,
        Format::Text | Format::Latex => writeln!(out, "{value}")?,
    }
    Ok(())
}

fn tarski_only_g2() -> Failure {
    Failure::Usage("--method tarski is only available for g2".into())
}

fn run(command: Command, out: &mut impl Write) -> Outcome {
    match command {
        Command::Qpartition { args, at_q } => {
            let v = root_coords(&args)?;
            let poly = match args.common.algebra {
                AlgebraArg::G2 => qpartition::<i64>(v)?,
                AlgebraArg::C2 => qpartition_c2::<i64>(v)?,
            };
            emit_poly(out, &poly, at_q, args.common.format.unwrap_or(Format::Text))
        }
        Command::Partition { args, method } => {
            let v = root_coords(&args)?;
            let value = match (args.common.algebra, method) {
                (AlgebraArg::G2, MethodArg::Qpoly) => qpartition::<i64>(v)?.eval_at_one()?,
                (AlgebraArg::G2, MethodArg::Closed | MethodArg::Tarski) => {
                    if v.is_nonnegative() {
                        partition_tarski(v)?
                    } else {
                        0
                    }
                }
                (AlgebraArg::C2, MethodArg::Qpoly) => qpartition_c2::<i64>(v)?.eval_at_one()?,
                (AlgebraArg::C2, MethodArg::Closed) => {
                    if v.is_nonnegative() {
                        partition_c2_closed(v)?
                    } else {
                        0
                    }
                }
                (AlgebraArg::C2, MethodArg::Tarski) => return Err(tarski_only_g2()),
            };
            emit_value(out, value, args.common.format.unwrap_or(Format::Text))
        }
        Command::Qmult { args, at_q } => {
            let (lambda, mu) = weights(&args)?;
            let poly = match args.common.algebra {
                AlgebraArg::G2 => qmultiplicity_closed::<i64>(lambda, mu)?.mq,
                AlgebraArg::C2 => multiplicity_c2_weyl_sum::<i64>(lambda, mu)?,
            };
            emit_poly(out, &poly, at_q, args.common.format.unwrap_or(Format::Text))
        }
        Command::Mult { args, method } => {
            let (lambda, mu) = weights(&args)?;
            let value = match (args.common.algebra, method) {
                (AlgebraArg::G2, MethodArg::Closed) => multiplicity(lambda, mu, Method::QPoly)?,
                (AlgebraArg::G2, MethodArg::Tarski) => multiplicity(lambda, mu, Method::Tarski)?,
                (AlgebraArg::G2, MethodArg::Qpoly) => qmultiplicity_weyl_sum::<i64>(lambda, mu)?.eval_at_one()?,
                (AlgebraArg::C2, MethodArg::Closed) => multiplicity_c2_closed(lambda, mu)?.value,
                (AlgebraArg::C2, MethodArg::Qpoly) => multiplicity_c2_weyl_sum::<i64>(lambda, mu)?.eval_at_one()?,
                (AlgebraArg::C2, MethodArg::Tarski) => return Err(tarski_only_g2()),
            };
            emit_value(out, value, args.common.format.unwrap_or(Format::Text))
        }
        Command::Case { args } => {
            let (lambda, mu) = weights(&args)?;
            let json_out = args.common.format == Some(Format::Json);
            match args.common.algebra {
                AlgebraArg::G2 => {
                    let case = compute_abcdef(lambda, mu);
                    if json_out {
                        writeln!(out, "{}", serde_json::to_string(&case).expect("case data serializes"))?;
                    } else {
                        let [a, b, c, d, e, f] = case.values();
                        writeln!(out, "a={a} b={b} c={c} d={d} e={e} f={f} case={}", case.label)?;
                    }
                }
                AlgebraArg::C2 => {
                    let case = compute_sp4_case(lambda, mu);
                    if json_out {
                        writeln!(out, "{}", serde_json::to_string(&case).expect("case data serializes"))?;
                    } else {
                        writeln!(
                            out,
                            "a={} 2b={} c={} 2d={} case={}",
                            case.a, case.two_b, case.c, case.two_d, case.label
                        )?;
                    }
                }
            }
            Ok(())
        }
        Command::Verify { common, max } => {
            let algebra = match common.algebra {
                AlgebraArg::G2 => Algebra::G2,
                AlgebraArg::C2 => Algebra::C2,
            };
            let report = verify(algebra, max);
            match common.format.unwrap_or(Format::Json) {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&report).expect("report serializes"))?,
                Format::Text | Format::Latex => {
                    for c in &report.checks {
                        let status = if c.passed() { "ok" } else { "FAILED" };
                        writeln!(out, "{status:6} {} ({} cases, {} mismatches)", c.name, c.cases, c.mismatches)?;
                    }
                }
            }
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Mismatch)
            }
        }
        Command::Table { common, max, output } => {
            if common.algebra != AlgebraArg::G2 {
                return Err(Failure::Usage("table is only available for g2".into()));
            }
            let rows = table_rows(max)?;
            match output {
                Some(path) => {
                    let file = File::create(&path)
                        .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
                    write_table(&rows, BufWriter::new(file))?;
                }
                None => write_table(&rows, &mut *out)?,
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli.command, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_overflow() { 2 } else { 1 })
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch) => {
            eprintln!("error: verification found mismatches");
            ExitCode::from(1)
        }
    }
}
