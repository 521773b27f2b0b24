//! Command-line front end for the ordinal/CSHP toolkit: expression
//! evaluation, the CSHP deciders, interval-homeomorphism evaluation, and the
//! finite-topology tools, plus an interactive shell with named bindings.
//!
//! All work happens in [`run`], which takes explicit argv and I/O handles so
//! the whole surface is testable in-process. Exit codes: 0 on success, 1 on
//! parse/domain errors, 2 on usage errors.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use cshp_core::cshp::{decide_coproduct, decide_ordinal, decide_product, explain, CshpVerdict};
use cshp_core::finitetop::{
    check_prop21, cofinal_thin, colimit_topology, notcolim_witness, parse_poset, parse_space,
};
use cshp_core::homeo::{
    f_delta_eval, probe_image, Direction, FDeltaSpec, FiniteSupportPermutation,
};
use cshp_core::{
    canonical_cofinal, compare, from_summands, parse_with, OrdinalTerm, ParseOptions,
    DEFAULT_MAX_DEPTH,
};
use serde_json::{json, Value};

/// Environment variable bounding expression nesting depth (default 32).
pub const MAX_DEPTH_ENV: &str = "ORDINAL_CSHP_MAX_DEPTH";

#[derive(Parser, Debug)]
#[command(
    name = "ordinal-cshp",
    version,
    about = "Exact ordinal arithmetic and CSHP decision procedures",
    after_help = "Run without a subcommand to enter the interactive shell."
)]
struct Cli {
    #[command(flatten)]
    flags: OutputFlags,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Args, Debug, Clone, Copy)]
struct OutputFlags {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Print the full rule/witness breakdown for verdicts.
    #[arg(long, global = true)]
    explain: bool,
    /// Log parsing and dispatch steps to stderr.
    #[arg(long, global = true)]
    trace: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an expression to its canonical form.
    Eval { expr: String },
    /// Compare two expressions; prints <, =, or >.
    Cmp { left: String, right: String },
    /// Print the Cantor normal form, one summand per line.
    Cnf { expr: String },
    /// Evaluate the canonical cofinal family of a limit ordinal at an index.
    Cf { beta: String, index: String },
    /// Decide the compactly supported homeomorphism property.
    #[command(subcommand)]
    Cshp(CshpCommand),
    /// Evaluate the interval homeomorphisms f_δ and their probe points.
    #[command(subcommand)]
    Homeo(HomeoCommand),
    /// Finite-topology tools over space and poset files.
    #[command(subcommand)]
    Finitetop(FinitetopCommand),
}

#[derive(Subcommand, Debug)]
enum CshpCommand {
    /// Decide CSHP for the ordinal space [0, λ).
    Ordinal { expr: String },
    /// Decide CSHP for a finite product of ordinal spaces.
    Product {
        #[arg(num_args = 1.., required = true)]
        factors: Vec<String>,
    },
    /// Decide CSHP for a coproduct of exactly two ordinal spaces.
    Coproduct {
        #[arg(num_args = 1.., required = true)]
        summands: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
enum HomeoCommand {
    /// Apply f_δ (or its inverse) to a point of [0, ω^β].
    Eval {
        /// Limit exponent β of the ambient interval [0, ω^β].
        #[arg(long)]
        beta: String,
        /// Index δ into the canonical cofinal family of β.
        #[arg(long)]
        delta: String,
        /// Finite-support permutation as cycles, e.g. "(0 1 2)(3 4)".
        /// It must move 0.
        #[arg(long)]
        phi: String,
        /// Apply the inverse map instead.
        #[arg(long)]
        inverse: bool,
        /// The point to map.
        point: String,
    },
    /// Image of the probe point ω^{γ+1} + 1 under f_δ.
    Probe {
        /// Limit exponent β of the ambient interval [0, ω^β].
        #[arg(long)]
        beta: String,
        /// Index δ into the canonical cofinal family of β.
        #[arg(long)]
        delta: String,
        /// Finite-support permutation as cycles, e.g. "(0 1 2)(3 4)".
        /// It must move 0.
        #[arg(long)]
        phi: String,
        /// Exponent γ with β_δ ≤ γ < β locating the probe point.
        #[arg(long)]
        gamma: String,
    },
}

#[derive(Subcommand, Debug)]
enum FinitetopCommand {
    /// Thin an enumerated poset file down to a cofinal subfamily.
    Thin { file: PathBuf },
    /// Glue the topology of a space file along its cover pieces.
    Colimit {
        file: PathBuf,
        /// Skip the directedness validation and instead search for a
        /// certificate that the glued topology differs from the base one.
        #[arg(long)]
        no_directedness_check: bool,
    },
    /// Scan all subsets of a space file for discreteness-reflection failures.
    #[command(name = "prop21-scan")]
    Prop21Scan {
        file: PathBuf,
        /// Largest piece-size bound τ to scan (τ ranges over 1..=this).
        #[arg(long, default_value_t = 4)]
        tau: usize,
    },
}

/// A command failure carrying the process exit code (1 domain, 2 usage).
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn domain(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

fn domain<E: std::fmt::Display>(e: E) -> Failure {
    Failure::domain(e.to_string())
}

struct Session {
    flags: OutputFlags,
    options: ParseOptions,
}

impl Session {
    fn parse(&self, text: &str, err: &mut dyn Write) -> Result<OrdinalTerm, Failure> {
        let value = parse_with(text, &self.options)
            .map_err(|e| Failure::domain(format!("in `{}`: {e}", text.trim())))?;
        if self.flags.trace {
            let _ = writeln!(err, "trace: `{}` parsed to {value}", text.trim());
        }
        Ok(value)
    }
}

/// Runs the tool on the given argv (element 0 is the program name) and I/O
/// handles, returning the process exit code.
pub fn run(
    argv: &[String],
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{rendered}");
                    2
                }
            };
        }
    };
    let max_depth = match max_depth_from_env() {
        Ok(d) => d,
        Err(message) => {
            let _ = writeln!(stderr, "error: {message}");
            return 2;
        }
    };
    let mut session = Session {
        flags: cli.flags,
        options: ParseOptions {
            max_depth,
            bindings: BTreeMap::new(),
        },
    };
    match cli.command {
        Some(command) => match dispatch(&session, command, stdout, stderr) {
            Ok(()) => 0,
            Err(f) => {
                let _ = writeln!(stderr, "error: {}", f.message);
                f.code
            }
        },
        None => repl(&mut session, stdin, stdout, stderr),
    }
}

fn max_depth_from_env() -> Result<usize, String> {
    match std::env::var(MAX_DEPTH_ENV) {
        Ok(raw) => match raw.trim().parse::<usize>() {
            Ok(d) if d > 0 => Ok(d),
            _ => Err(format!(
                "{MAX_DEPTH_ENV} must be a positive integer, got `{raw}`"
            )),
        },
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_MAX_DEPTH),
        Err(e) => Err(format!("{MAX_DEPTH_ENV}: {e}")),
    }
}

fn dispatch(
    session: &Session,
    command: Command,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), Failure> {
    match command {
        Command::Eval { expr } => cmd_eval(session, &expr, out, err),
        Command::Cmp { left, right } => cmd_cmp(session, &left, &right, out, err),
        Command::Cnf { expr } => cmd_cnf(session, &expr, out, err),
        Command::Cf { beta, index } => cmd_cf(session, &beta, &index, out, err),
        Command::Cshp(sub) => cmd_cshp(session, sub, out, err),
        Command::Homeo(sub) => cmd_homeo(session, sub, out, err),
        Command::Finitetop(sub) => cmd_finitetop(session, sub, out, err),
    }
}

fn emit_json(out: &mut dyn Write, value: &Value) {
    let _ = writeln!(out, "{value}");
}

fn cmd_eval(
    session: &Session,
    expr: &str,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), Failure> {
    let value = session.parse(expr, err)?;
    if session.flags.json {
        emit_json(
            out,
            &json!({ "value": value.to_string(), "class": value.classify().to_string() }),
        );
    } else {
        let _ = writeln!(out, "{value}");
        if session.flags.explain {
            let _ = writeln!(out, "class: {}", value.classify());
        }
    }
    Ok(())
}

fn cmd_cmp(
    session: &Session,
    left: &str,
    right: &str,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), Failure> {
    let a = session.parse(left, err)?;
    let b = session.parse(right, err)?;
    let symbol = match compare(&a, &b) {
        Ordering::Less => "<",
        Ordering::Equal => "=",
        Ordering::Greater => ">",
    };
    if session.flags.json {
        emit_json(out, &json!({ "ordering": symbol }));
    } else {
        let _ = writeln!(out, "{symbol}");
        if session.flags.explain {
            let _ = writeln!(out, "left: {a}");
            let _ = writeln!(out, "right: {b}");
        }
    }
    Ok(())
}

fn cmd_cnf(
    session: &Session,
    expr: &str,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), Failure> {
    let value = session.parse(expr, err)?;
    let view = value.cnf();
    if session.flags.json {
        let items: Vec<Value> = view
            .summands
            .iter()
            .map(|s| {
                json!({
                    "exponent": s.exponent.to_string(),
                    "coefficient": s.coefficient.to_string(),
                })
            })
            .collect();
        emit_json(out, &Value::Array(items));
    } else if view.summands.is_empty() {
        let _ = writeln!(out, "0");
    } else {
        for s in &view.summands {
            let monomial = from_summands([(s.exponent.clone(), s.coefficient.clone())]);
            let _ = writeln!(out, "{monomial}");
        }
    }
    Ok(())
}

fn cmd_cf(
    session: &Session,
    beta: &str,
    index: &str,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), Failure> {
    let beta = session.parse(beta, err)?;
    let index = session.parse(index, err)?;
    let value = canonical_cofinal(&beta, &index).map_err(domain)?;
    if session.flags.json {
        emit_json(out, &json!({ "value": value.to_string() }));
    } else {
        let _ = writeln!(out, "{value}");
    }
    Ok(())
}

fn cmd_cshp(
    session: &Session,
    sub: CshpCommand,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), Failure> {
    let verdict = match sub {
        CshpCommand::Ordinal { expr } => {
            let lambda = session.parse(&expr, err)?;
            decide_ordinal(&lambda).map_err(domain)?
        }
        CshpCommand::Product { factors } => {
            let parsed: Vec<OrdinalTerm> = factors
                .iter()
                .map(|f| session.parse(f, err))
                .collect::<Result<_, _>>()?;
            decide_product(&parsed).map_err(domain)?
        }
        CshpCommand::Coproduct { summands } => {
            if summands.len() != 2 {
                return Err(Failure::usage(format!(
                    "`cshp coproduct` takes exactly two summands (got {}); only the binary \
                     coproduct has a decision rule here — phrase larger coproducts as \
                     iterated binary questions",
                    summands.len()
                )));
            }
            let a = session.parse(&summands[0], err)?;
            let b = session.parse(&summands[1], err)?;
            decide_coproduct(&a, &b).map_err(domain)?
        }
    };
    if session.flags.trace {
        let _ = writeln!(err, "trace: decided by rule {}", verdict.rule.tag());
    }
    emit_verdict(session, &verdict, out);
    Ok(())
}

fn emit_verdict(session: &Session, v: &CshpVerdict, out: &mut dyn Write) {
    if session.flags.json {
        emit_json(out, &verdict_json(v));
        return;
    }
    let _ = writeln!(
        out,
        "{} ({})",
        if v.has_cshp { "YES" } else { "NO" },
        v.rule.tag()
    );
    if session.flags.explain {
        let _ = write!(out, "{}", explain(v));
    } else {
        let _ = writeln!(out, "{}", v.narrative);
    }
}

fn verdict_json(v: &CshpVerdict) -> Value {
    let witnesses = v.witnesses.as_ref().map(|w| {
        json!({
            "kappa": w.kappa.as_ref().map(|k| k.to_string()),
            "tau": w.tau.as_ref().map(|t| t.to_string()),
            "offending_factors": w.offending_factors,
            "decomposition": w.decomposition.as_ref().map(|d| {
                json!({ "prefix": d.prefix.to_string(), "tail": d.tail.to_string() })
            }),
        })
    });
    json!({
        "has_cshp": v.has_cshp,
        "rule": v.rule.tag(),
        "witnesses": witnesses,
        "narrative": v.narrative,
    })
}

fn parse_phi(text: &str) -> Result<FiniteSupportPermutation, Failure> {
    let cycles = parse_cycles(text)?;
    FiniteSupportPermutation::from_cycles(&cycles).map_err(domain)
}

fn parse_cycles(text: &str) -> Result<Vec<Vec<u64>>, Failure> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let Some(stripped) = rest.strip_prefix('(') else {
            return Err(Failure::domain(format!(
                "permutation cycles must be parenthesized, e.g. \"(0 1 2)(3 4)\"; got `{text}`"
            )));
        };
        let Some(close) = stripped.find(')') else {
            return Err(Failure::domain(format!("unclosed cycle in `{text}`")));
        };
        let body = &stripped[..close];
        let mut cycle = Vec::new();
        for item in body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
        {
            let value: u64 = item.parse().map_err(|_| {
                Failure::domain(format!("invalid cycle entry `{item}` in `{text}`"))
            })?;
            cycle.push(value);
        }
        if cycle.is_empty() {
            return Err(Failure::domain(format!("empty cycle in `{text}`")));
        }
        cycles.push(cycle);
        rest = stripped[close + 1..].trim_start();
    }
    Ok(cycles)
}

fn cmd_homeo(
    session: &Session,
    sub: HomeoCommand,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), Failure> {
    match sub {
        HomeoCommand::Eval {
            beta,
            delta,
            phi,
            inverse,
            point,
        } => {
            let beta = session.parse(&beta, err)?;
            let delta = session.parse(&delta, err)?;
            let phi = parse_phi(&phi)?;
            let spec = FDeltaSpec::from_index(beta, delta, phi).map_err(domain)?;
            if session.flags.trace {
                let _ = writeln!(
                    err,
                    "trace: β_δ = {}, interval [0, {}]",
                    spec.beta_delta(),
                    spec.alpha()
                );
            }
            let x = session.parse(&point, err)?;
            let direction = if inverse {
                Direction::Inverse
            } else {
                Direction::Forward
            };
            let image = f_delta_eval(&spec, &x, direction).map_err(domain)?;
            if session.flags.json {
                emit_json(
                    out,
                    &json!({ "point": x.to_string(), "image": image.to_string() }),
                );
            } else {
                let _ = writeln!(out, "{image}");
            }
        }
        HomeoCommand::Probe {
            beta,
            delta,
            phi,
            gamma,
        } => {
            let beta = session.parse(&beta, err)?;
            let delta = session.parse(&delta, err)?;
            let phi = parse_phi(&phi)?;
            let spec = FDeltaSpec::from_index(beta, delta, phi).map_err(domain)?;
            let gamma = session.parse(&gamma, err)?;
            let image = probe_image(&spec, &gamma).map_err(domain)?;
            if session.flags.json {
                emit_json(
                    out,
                    &json!({ "gamma": gamma.to_string(), "image": image.to_string() }),
                );
            } else {
                let _ = writeln!(out, "{image}");
            }
        }
    }
    Ok(())
}

fn mask_points(mask: u32) -> Vec<usize> {
    (0..u32::BITS as usize)
        .filter(|i| mask & (1 << i) != 0)
        .collect()
}

fn mask_display(mask: u32) -> String {
    let inner: Vec<String> = mask_points(mask).iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", inner.join(", "))
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::domain(format!("{}: {e}", path.display())))
}

fn cmd_finitetop(
    session: &Session,
    sub: FinitetopCommand,
    out: &mut dyn Write,
    _err: &mut dyn Write,
) -> Result<(), Failure> {
    match sub {
        FinitetopCommand::Thin { file } => {
            let poset = parse_poset(&read_file(&file)?).map_err(domain)?;
            let thin = cofinal_thin(&poset).map_err(domain)?;
            if session.flags.json {
                emit_json(
                    out,
                    &json!({ "elements": thin.elements, "picked_indices": thin.picked_indices }),
                );
            } else {
                let elements: Vec<String> = thin.elements.iter().map(|e| e.to_string()).collect();
                let indices: Vec<String> =
                    thin.picked_indices.iter().map(|i| i.to_string()).collect();
                let _ = writeln!(out, "cofinal subfamily: {}", elements.join(" "));
                let _ = writeln!(out, "picked enumeration indices: {}", indices.join(" "));
            }
        }
        FinitetopCommand::Colimit {
            file,
            no_directedness_check,
        } => {
            let (space, pieces) = parse_space(&read_file(&file)?).map_err(domain)?;
            if pieces.is_empty() {
                return Err(Failure::domain(
                    "the space file lists no `piece:` lines to glue along",
                ));
            }
            if no_directedness_check {
                match notcolim_witness(&space, &pieces).map_err(domain)? {
                    Some(cert) => {
                        if session.flags.json {
                            emit_json(
                                out,
                                &json!({
                                    "agrees": false,
                                    "witness": mask_points(cert.witness),
                                    "base_closure": mask_points(cert.base_closure),
                                    "piece_flags": cert.piece_flags,
                                }),
                            );
                        } else {
                            let _ =
                                writeln!(out, "the glued topology differs from the base topology");
                            let _ = writeln!(
                                out,
                                "witness {} is closed in every piece but not in the base space",
                                mask_display(cert.witness)
                            );
                            let _ = writeln!(
                                out,
                                "closure in the base topology: {}",
                                mask_display(cert.base_closure)
                            );
                        }
                    }
                    None => {
                        if session.flags.json {
                            emit_json(out, &json!({ "agrees": true }));
                        } else {
                            let _ =
                                writeln!(out, "the glued topology agrees with the base topology");
                        }
                    }
                }
            } else {
                let glued = colimit_topology(&space, &pieces).map_err(domain)?;
                let agrees = glued == space;
                if session.flags.json {
                    let opens: Vec<Value> = glued
                        .opens()
                        .map(|u| {
                            Value::Array(mask_points(u).into_iter().map(Value::from).collect())
                        })
                        .collect();
                    emit_json(out, &json!({ "opens": opens, "agrees": agrees }));
                } else {
                    let rendered: Vec<String> = glued.opens().map(mask_display).collect();
                    let _ = writeln!(out, "glued topology: {}", rendered.join(", "));
                    let _ = writeln!(
                        out,
                        "agrees with the base topology: {}",
                        if agrees { "yes" } else { "no" }
                    );
                }
            }
        }
        FinitetopCommand::Prop21Scan { file, tau } => {
            if tau == 0 {
                return Err(Failure::usage("--tau must be at least 1"));
            }
            let (space, _pieces) = parse_space(&read_file(&file)?).map_err(domain)?;
            let full = space.full_mask();
            let mut fail_list: Vec<(u32, usize)> = Vec::new();
            let mut checked = 0usize;
            for s in 0..=full {
                for t in 1..=tau {
                    checked += 1;
                    if !check_prop21(&space, s, t) {
                        fail_list.push((s, t));
                    }
                }
            }
            if session.flags.json {
                let failures: Vec<Value> = fail_list
                    .iter()
                    .map(|&(s, t)| json!({ "set": mask_points(s), "tau": t }))
                    .collect();
                emit_json(
                    out,
                    &json!({
                        "points": space.points(),
                        "max_tau": tau,
                        "checked": checked,
                        "failures": failures,
                    }),
                );
            } else {
                for &(s, t) in &fail_list {
                    let _ = writeln!(out, "reflection fails for S = {}, τ = {t}", mask_display(s));
                }
                let _ = writeln!(
                    out,
                    "{} of {} (set, τ) pairs fail the discreteness reflection",
                    fail_list.len(),
                    checked
                );
            }
        }
    }
    Ok(())
}

const REPL_HELP: &str = "\
<expression>                evaluate and print the canonical form
let <name> = <expression>   bind a name for later expressions
cmp <a>, <b>                compare two expressions
cnf <expression>            print the Cantor normal form summands
classify <expression>       zero / successor / limit
cf <beta>, <index>          canonical cofinal family of beta at an index
cshp ordinal <e>            decide CSHP for the ordinal space
cshp product <e1>, <e2>, …  decide CSHP for a product
cshp coproduct <e1>, <e2>   decide CSHP for a binary coproduct
bindings                    list current bindings
help                        show this text
exit                        leave the shell";

fn repl(
    session: &mut Session,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let _ = writeln!(
        err,
        "ordinal-cshp interactive shell; type `help` for commands, `exit` to leave."
    );
    loop {
        let _ = write!(err, "> ");
        let _ = err.flush();
        let mut line = String::new();
        match stdin.read_line(&mut line) {
            Ok(0) => return 0,
            Ok(_) => {}
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return 1;
            }
        }
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match repl_line(session, line, out, err) {
            Ok(true) => return 0,
            Ok(false) => {}
            Err(f) => {
                let _ = writeln!(err, "error: {}", f.message);
            }
        }
    }
}

fn split_word(line: &str) -> (&str, &str) {
    let trimmed = line.trim();
    match trimmed.find(char::is_whitespace) {
        Some(at) => (&trimmed[..at], trimmed[at..].trim()),
        None => (trimmed, ""),
    }
}

fn split_args(rest: &str) -> Vec<&str> {
    rest.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect()
}

fn two_args<'a>(rest: &'a str, usage: &str) -> Result<(&'a str, &'a str), Failure> {
    let parts = split_args(rest);
    match parts.as_slice() {
        [a, b] => Ok((a, b)),
        _ => Err(Failure::domain(format!("usage: {usage}"))),
    }
}

fn validate_binding_name(name: &str) -> Result<(), Failure> {
    let mut chars = name.chars();
    let valid = match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => chars.all(|c| c.is_ascii_alphanumeric() || c == '_'),
        _ => false,
    };
    if !valid {
        return Err(Failure::domain(format!(
            "`{name}` is not a valid name (letters, digits, and underscores, starting \
             with a letter)"
        )));
    }
    let reserved = name == "w"
        || name
            .strip_prefix("w_")
            .map(|tail| !tail.is_empty() && tail.bytes().all(|b| b.is_ascii_digit()))
            .unwrap_or(false);
    if reserved {
        return Err(Failure::domain(format!(
            "`{name}` is reserved by the term syntax"
        )));
    }
    Ok(())
}

fn repl_line(
    session: &mut Session,
    line: &str,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<bool, Failure> {
    let (word, rest) = split_word(line);
    match word {
        "exit" | "quit" => return Ok(true),
        "help" => {
            let _ = writeln!(out, "{REPL_HELP}");
        }
        "bindings" => {
            if session.options.bindings.is_empty() {
                let _ = writeln!(out, "(no bindings)");
            }
            for (name, value) in &session.options.bindings {
                let _ = writeln!(out, "{name} = {value}");
            }
        }
        "let" => {
            let (name, expr) = rest
                .split_once('=')
                .ok_or_else(|| Failure::domain("usage: let <name> = <expression>"))?;
            let name = name.trim();
            validate_binding_name(name)?;
            let value = session.parse(expr, err)?;
            let _ = writeln!(out, "{name} = {value}");
            session.options.bindings.insert(name.to_string(), value);
        }
        "cmp" => {
            let (a, b) = two_args(rest, "cmp <a>, <b>")?;
            cmd_cmp(session, a, b, out, err)?;
        }
        "cnf" => {
            cmd_cnf(session, rest, out, err)?;
        }
        "classify" => {
            let value = session.parse(rest, err)?;
            let _ = writeln!(out, "{}", value.classify());
        }
        "cf" => {
            let (a, b) = two_args(rest, "cf <beta>, <index>")?;
            cmd_cf(session, a, b, out, err)?;
        }
        "cshp" => {
            let (kind, tail) = split_word(rest);
            let verdict = match kind {
                "ordinal" => {
                    let lambda = session.parse(tail, err)?;
                    decide_ordinal(&lambda).map_err(domain)?
                }
                "product" => {
                    let parts = split_args(tail);
                    if parts.is_empty() {
                        return Err(Failure::domain("usage: cshp product <e1>, <e2>, …"));
                    }
                    let factors: Vec<OrdinalTerm> = parts
                        .iter()
                        .map(|p| session.parse(p, err))
                        .collect::<Result<_, _>>()?;
                    decide_product(&factors).map_err(domain)?
                }
                "coproduct" => {
                    let (a, b) = two_args(tail, "cshp coproduct <e1>, <e2>")?;
                    let a = session.parse(a, err)?;
                    let b = session.parse(b, err)?;
                    decide_coproduct(&a, &b).map_err(domain)?
                }
                other => {
                    return Err(Failure::domain(format!(
                        "unknown cshp form `{other}`; use ordinal, product, or coproduct"
                    )));
                }
            };
            if session.flags.trace {
                let _ = writeln!(err, "trace: decided by rule {}", verdict.rule.tag());
            }
            emit_verdict(session, &verdict, out);
        }
        _ => {
            let value = session.parse(line, err)?;
            let _ = writeln!(out, "{value}");
        }
    }
    Ok(false)
}
