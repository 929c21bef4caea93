//! Command line interface for the loop algebra toolkit: expression
//! evaluation, decompositions, ideal queries, group actions, the verification
//! suites and the closed-ideal census.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use tetra_core::expr::{self, Context, Value};
use tetra_core::extension::{fit_lifts, verify_extension, LiftTable};
use tetra_core::loop_alg::{
    grade_split, ideal_generated, ideal_member_g, omega_split, verify_phi_map,
    verify_tet_relations, verify_z_relations, LoopElem,
};
use tetra_core::nlrta;
use tetra_core::onsager::{census, ideal_member_o, verify_onsager};
use tetra_core::rat::{format_rat, rat};
use tetra_core::report::Report;
use tetra_core::ring::{ideal_normalize, to_k_basis};
use tetra_core::s4::{verify_s4_all, Perm4};

#[derive(Parser)]
#[command(
    name = "tetra",
    about = "Exact computations in the three-point sl2 loop algebra",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ContextArg {
    Loop,
    Onsager,
    Extension,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Plain,
    Records,
}

#[derive(Clone, Copy, ValueEnum)]
enum DecomposeBy {
    Grading,
    Omega,
    Kbasis,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifySuite {
    Tet,
    Z,
    Phi,
    S4,
    Onsager,
    Nlrta,
    Extension,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression to canonical form.
    Eval {
        expr: String,
        #[arg(long, value_enum, default_value = "loop")]
        context: ContextArg,
        #[arg(long, value_enum, default_value = "plain")]
        format: FormatArg,
    },
    /// Split an element into labeled components.
    Decompose {
        expr: String,
        #[arg(long, value_enum)]
        by: DecomposeBy,
        #[arg(long, value_enum, default_value = "plain")]
        format: FormatArg,
    },
    /// Ideal queries in the loop algebra.
    Ideal {
        #[command(subcommand)]
        op: IdealOp,
    },
    /// Ideal queries in the Onsager algebra.
    OnsagerIdeal {
        #[command(subcommand)]
        op: OnsagerIdealOp,
    },
    /// Apply a permutation (in cycle notation) to an element.
    Act {
        perm: String,
        expr: String,
        #[arg(long, value_enum, default_value = "loop")]
        context: ContextArg,
    },
    /// Run a verification suite; exits 0 iff every check passes.
    Verify {
        #[arg(value_enum)]
        suite: VerifySuite,
        #[arg(long, value_enum, default_value = "plain")]
        format: FormatArg,
        /// Also write the report to a file.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Census tables.
    Census {
        #[command(subcommand)]
        op: CensusOp,
    },
    /// Print the fitted lifts of the tetrahedron generators and the charges.
    Lifts,
}

#[derive(Subcommand)]
enum IdealOp {
    /// Smallest ideal containing the given elements.
    Gen { exprs: Vec<String> },
    /// Membership of an element in the ideal generated by `--in`.
    Member {
        expr: String,
        /// Ring expression generating the content ideal.
        #[arg(long = "in")]
        gen: String,
    },
}

#[derive(Subcommand)]
enum OnsagerIdealOp {
    /// Content ideal J of the ideal generated by the given elements.
    Gen { exprs: Vec<String> },
    /// Membership of an element in the ideal described by `--in`.
    Member {
        expr: String,
        /// Specification text, e.g. "J=t^2+1; typeII eta=1".
        #[arg(long = "in")]
        spec: String,
    },
}

#[derive(Subcommand)]
enum CensusOp {
    /// Table of ideals over a content ideal, with closedness and witnesses.
    ClosedIdeals {
        #[arg(long = "J")]
        j: String,
    },
}

enum CliError {
    Parse(String),
    VerifyFailed,
    Io(String),
}

impl From<expr::ParseError> for CliError {
    fn from(e: expr::ParseError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<expr::EvalError> for CliError {
    fn from(e: expr::EvalError) -> Self {
        CliError::Parse(e.to_string())
    }
}

fn lift_table() -> Result<LiftTable, CliError> {
    fit_lifts().map_err(|e| CliError::Parse(e.to_string()))
}

fn eval_in(input: &str, ctx: ContextArg) -> Result<Value, CliError> {
    let ast = expr::parse(input)?;
    let value = match ctx {
        ContextArg::Loop => expr::eval(&ast, &Context::Loop)?,
        ContextArg::Onsager => expr::eval(&ast, &Context::Onsager)?,
        ContextArg::Extension => {
            let table = lift_table()?;
            expr::eval(&ast, &Context::Extension(&table))?
        }
    };
    Ok(value)
}

fn eval_loop(input: &str) -> Result<LoopElem, CliError> {
    match eval_in(input, ContextArg::Loop)? {
        Value::Loop(e) => Ok(e),
        _ => unreachable!(),
    }
}

/// One record per component with a stable field order.
fn value_records(v: &Value) -> String {
    let mut out = String::new();
    match v {
        Value::Loop(e) => {
            for (name, c) in [("u0", &e.u0), ("u1", &e.u1), ("u2", &e.u2)] {
                let _ = writeln!(out, "{name}\t{c}");
            }
        }
        Value::Onsager(e) => {
            for (name, c) in [("v0", &e.p0), ("v1", &e.p1), ("v2", &e.p2)] {
                let _ = writeln!(out, "{name}\t{c}");
            }
        }
        Value::Ext(e) => {
            for (name, c) in [
                ("u0", &e.loop_part.u0),
                ("u1", &e.loop_part.u1),
                ("u2", &e.loop_part.u2),
            ] {
                let _ = writeln!(out, "{name}\t{c}");
            }
            let _ = writeln!(out, "K0\t{}", format_rat(&e.c0));
            let _ = writeln!(out, "K1\t{}", format_rat(&e.c1));
        }
    }
    out
}

fn run() -> Result<(), CliError> {
    let cli = Cli::parse();
    match cli.command {
        Command::Eval { expr: input, context, format } => {
            let v = eval_in(&input, context)?;
            match format {
                FormatArg::Plain => println!("{v}"),
                FormatArg::Records => print!("{}", value_records(&v)),
            }
        }
        Command::Decompose { expr: input, by, format } => match by {
            DecomposeBy::Kbasis => {
                let ring = expr::parse_ring(&input)?;
                let c = to_k_basis(&ring);
                let mut lines: Vec<(String, String)> = vec![("1".into(), format_rat(&c.c0))];
                for (n, v) in &c.ct {
                    lines.push((format!("t^{n}"), format_rat(v)));
                }
                for (n, v) in &c.ctp {
                    lines.push((format!("t'^{n}"), format_rat(v)));
                }
                for (n, v) in &c.ctpp {
                    lines.push((format!("t''^{n}"), format_rat(v)));
                }
                for (k, v) in lines {
                    match format {
                        FormatArg::Plain => println!("{k} = {v}"),
                        FormatArg::Records => println!("{k}\t{v}"),
                    }
                }
            }
            DecomposeBy::Grading => {
                let e = eval_loop(&input)?;
                let (g0, g1, g2) = grade_split(&e);
                for (name, part) in [("g0", g0), ("g1", g1), ("g2", g2)] {
                    match format {
                        FormatArg::Plain => println!("{name} = {part}"),
                        FormatArg::Records => println!("{name}\t{part}"),
                    }
                }
            }
            DecomposeBy::Omega => {
                let e = eval_loop(&input)?;
                let (w, wp, wpp) = omega_split(&e);
                for (name, part) in [("omega", w), ("omega'", wp), ("omega''", wpp)] {
                    match format {
                        FormatArg::Plain => println!("{name} = {part}"),
                        FormatArg::Records => println!("{name}\t{part}"),
                    }
                }
            }
        },
        Command::Ideal { op } => match op {
            IdealOp::Gen { exprs } => {
                let mut elems = Vec::new();
                for s in &exprs {
                    elems.push(eval_loop(s)?);
                }
                let ideal = ideal_generated(&elems);
                if ideal.content.is_zero() {
                    println!("zero ideal");
                } else {
                    println!("I = ({})", ideal.content.generator());
                }
            }
            IdealOp::Member { expr: input, gen } => {
                let e = eval_loop(&input)?;
                let g = expr::parse_ring(&gen)?;
                let ideal = tetra_core::loop_alg::GIdeal { content: ideal_normalize(&g) };
                println!("{}", ideal_member_g(&e, &ideal));
            }
        },
        Command::OnsagerIdeal { op } => match op {
            OnsagerIdealOp::Gen { exprs } => {
                let mut elems = Vec::new();
                for s in &exprs {
                    match eval_in(s, ContextArg::Onsager)? {
                        Value::Onsager(e) => elems.push(e),
                        _ => unreachable!(),
                    }
                }
                let j = tetra_core::onsager::extract_j(&elems);
                if j.is_zero() {
                    println!("zero ideal");
                } else {
                    println!("J = ({j})");
                }
            }
            OnsagerIdealOp::Member { expr: input, spec } => {
                let e = match eval_in(&input, ContextArg::Onsager)? {
                    Value::Onsager(e) => e,
                    _ => unreachable!(),
                };
                let spec = expr::parse_ideal_spec(&spec)?;
                println!("{}", ideal_member_o(&e, &spec));
            }
        },
        Command::Act { perm, expr: input, context } => {
            let p = Perm4::parse_cycles(&perm)
                .ok_or_else(|| CliError::Parse(format!("invalid permutation `{perm}`")))?;
            let applied = match context {
                ContextArg::Loop => {
                    let Value::Loop(e) = eval_in(&input, ContextArg::Loop)? else {
                        unreachable!()
                    };
                    Value::Loop(tetra_core::s4::apply(&p, &e))
                }
                ContextArg::Extension => {
                    let table = lift_table()?;
                    let ast = expr::parse(&input)?;
                    let Value::Ext(e) = expr::eval(&ast, &Context::Extension(&table))? else {
                        unreachable!()
                    };
                    Value::Ext(tetra_core::extension::s4_ext_apply(&p, &e, &table))
                }
                ContextArg::Onsager => {
                    return Err(CliError::Parse(
                        "permutations do not act in the Onsager context".into(),
                    ))
                }
            };
            println!("{applied}");
        }
        Command::Verify { suite, format, out } => {
            let report = run_suite(suite);
            let text = match format {
                FormatArg::Plain => report.to_string(),
                FormatArg::Records => report.to_records(),
            };
            print!("{text}");
            if let Some(path) = out {
                std::fs::write(&path, &text)
                    .map_err(|e| CliError::Io(format!("writing {}: {e}", path.display())))?;
            }
            if !report.all_pass() {
                return Err(CliError::VerifyFailed);
            }
        }
        Command::Census { op } => match op {
            CensusOp::ClosedIdeals { j } => {
                let ring = expr::parse_ring(&j)?;
                let q = ring
                    .as_poly()
                    .ok_or_else(|| CliError::Parse("J must be a polynomial".into()))?
                    .clone();
                if q.is_zero() {
                    return Err(CliError::Parse("J must be nonzero".into()));
                }
                let etas = [rat(1), rat(2), rat(-1)];
                let rows = census(&q, &etas);
                let mut closed_count = 0;
                for row in &rows {
                    let mut line = format!(
                        "{}\tideal={}\tclosed={}",
                        row.spec,
                        if row.is_ideal { "yes" } else { "no" },
                        if row.closed { "yes" } else { "no" }
                    );
                    if let Some(w) = &row.witness {
                        let _ = write!(line, "\twitness={w}");
                    }
                    println!("{line}");
                    if row.closed {
                        closed_count += 1;
                    }
                }
                println!("closed ideals: {closed_count}");
            }
        },
        Command::Lifts => {
            let table = lift_table()?;
            print!("{}", table.render());
        }
    }
    Ok(())
}

fn run_suite(suite: VerifySuite) -> Report {
    let mut report = Report::new("verification");
    match suite {
        VerifySuite::Tet => report.merge(verify_tet_relations()),
        VerifySuite::Z => report.merge(verify_z_relations()),
        VerifySuite::Phi => report.merge(verify_phi_map()),
        VerifySuite::S4 => report.merge(verify_s4_all()),
        VerifySuite::Onsager => report.merge(verify_onsager()),
        VerifySuite::Nlrta => report.merge(nlrta::verify_all()),
        VerifySuite::Extension => report.merge(verify_extension()),
        VerifySuite::All => {
            report.merge(verify_tet_relations());
            report.merge(verify_z_relations());
            report.merge(verify_phi_map());
            report.merge(verify_s4_all());
            report.merge(verify_onsager());
            report.merge(nlrta::verify_all());
            report.merge(verify_extension());
        }
    }
    report
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::VerifyFailed) => ExitCode::from(1),
        Err(CliError::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
