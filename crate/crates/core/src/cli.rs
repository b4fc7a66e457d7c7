//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 computation error, 3 verification
//! mismatch. Errors go to stderr as one JSON object with a `code` field.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::assignments::enumerate_assignments;
use crate::charnorm::Coordinate;
use crate::coherent::{self, CohSpec, Method};
use crate::counting::{
    self, count_table, integral_characters, verify, CountOptions, CountResult, GroupSpec, Nu, OrbitSpec, USwap,
    VerifyReport,
};
use crate::diagrams::YoungDiagram;
use crate::error::Error;
use crate::paintings::{enumerate_paintings, Painting, PaintingType, Signature};
use crate::selftest;
use crate::symchar::FormalRepSum;

#[derive(Parser, Debug)]
#[command(name = "irrcount", version, about = "Count irreducible representations by infinitesimal character and nilpotent orbit")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Plain ASCII in text output (no box drawing, `*` for dots).
    #[arg(long, global = true)]
    ascii: bool,
    /// Worker threads for tables.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args, Debug, Clone)]
struct Readings {
    /// How the unitary general case attaches orbits to its integral factors.
    #[arg(long, default_value = "unswapped")]
    u_swap: String,
    /// Offset of μ for genuine representations of the double cover.
    #[arg(long, default_value = "1/2", allow_hyphen_values = true)]
    mu_offset: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count for one orbit.
    Count {
        #[arg(long)]
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        #[arg(long)]
        orbit: String,
        #[command(flatten)]
        readings: Readings,
    },
    /// Counts for every orbit.
    Table {
        #[arg(long)]
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        #[arg(long)]
        include_zeros: bool,
        #[command(flatten)]
        readings: Readings,
    },
    /// List paintings of a diagram.
    Paintings {
        #[arg(long)]
        shape: String,
        #[arg(long = "type", value_enum)]
        kind: PaintingKind,
        /// Keep only type-A paintings of this signature, as `p,q`.
        #[arg(long)]
        signature: Option<String>,
    },
    /// List assignments of a diagram with given content.
    Assignments {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        content: String,
    },
    /// Decomposed coherent continuation representation.
    Coh {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Strips)]
        method: MethodArg,
        /// For `U(p,p)`: the representation on the class `n/2 + Z`.
        #[arg(long)]
        half: bool,
    },
    /// Compare formula and character oracle; all integral patterns when `--nu` is absent.
    Verify {
        #[arg(long)]
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<String>,
        #[command(flatten)]
        readings: Readings,
    },
    /// Run the built-in acceptance checks.
    Selftest,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PaintingKind {
    Ar,
    Ah,
    A,
    ADegenerate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Strips,
    Oracle,
}

/// A fully validated request.
#[derive(Debug, Clone, PartialEq)]
pub enum Invocation {
    Count { group: GroupSpec, nu: Nu, orbit: OrbitSpec, opts: CountOptions },
    Table { group: GroupSpec, nu: Nu, include_zeros: bool, opts: CountOptions },
    Paintings { shape: YoungDiagram, kind: PaintingType, signature: Option<Signature> },
    Assignments { shape: YoungDiagram, content: YoungDiagram },
    Coh { spec: CohSpec, method: Method },
    Verify { group: GroupSpec, nu: Option<Nu>, opts: CountOptions },
    Selftest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Style {
    pub format: Format,
    pub ascii: bool,
}

#[derive(Debug)]
pub struct CliError {
    pub code: &'static str,
    pub message: String,
    pub exit: i32,
    pub detail: Option<serde_json::Value>,
}

impl CliError {
    fn usage(code: &'static str, message: impl Into<String>) -> Self {
        CliError { code, message: message.into(), exit: 1, detail: None }
    }

    fn from_input(e: Error, arg: &str) -> Self {
        let code = match e {
            Error::InvalidPartition(..) => "invalid_partition",
            Error::MalformedCoordinate(..) => "malformed_coordinate",
            Error::InvalidGroup(_) => "invalid_group",
            Error::Arity { .. } => "arity_mismatch",
            Error::SizeMismatch { .. } => "size_mismatch",
            _ => "usage",
        };
        Self::usage(code, format!("--{arg}: {e}"))
    }

    fn computation(e: impl std::fmt::Display) -> Self {
        CliError { code: "computation", message: e.to_string(), exit: 2, detail: None }
    }

    fn io(e: std::io::Error) -> Self {
        CliError { code: "io", message: e.to_string(), exit: 2, detail: None }
    }

    pub fn to_json(&self) -> String {
        let mut v = json!({ "code": self.code, "message": self.message });
        if let Some(d) = &self.detail {
            v["detail"] = d.clone();
        }
        v.to_string()
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn readings(r: &Readings, threads: usize) -> CliResult<CountOptions> {
    let u_swap: USwap = r.u_swap.parse().map_err(|e| CliError::from_input(e, "u-swap"))?;
    let mu: Coordinate = r.mu_offset.parse().map_err(|e| CliError::from_input(e, "mu-offset"))?;
    if mu.tag.is_some() {
        return Err(CliError::usage("malformed_coordinate", "--mu-offset: must be a rational number"));
    }
    Ok(CountOptions { u_swap, mu_offset: mu.offset, threads: threads.max(1), ..Default::default() })
}

fn group_arg(s: &str) -> CliResult<GroupSpec> {
    s.parse().map_err(|e| CliError::from_input(e, "group"))
}

fn diagram_arg(s: &str, arg: &str) -> CliResult<YoungDiagram> {
    s.parse().map_err(|e| CliError::from_input(e, arg))
}

fn nu_arg(group: GroupSpec, s: &str) -> CliResult<Nu> {
    let nu = Nu::parse(s).map_err(|e| CliError::from_input(e, "nu"))?;
    let arity = |v: &Vec<Coordinate>| {
        if v.len() == group.rank() {
            Ok(())
        } else {
            Err(CliError::from_input(Error::Arity { rank: group.rank(), got: v.len() }, "nu"))
        }
    };
    match (&nu, group.is_complex()) {
        (Nu::Pair(l, r), true) => {
            arity(l)?;
            arity(r)?;
        }
        (Nu::Single(v), false) => arity(v)?,
        (Nu::Single(_), true) => return Err(CliError::usage("arity_mismatch", "--nu: GLC needs two lists joined by ';'")),
        (Nu::Pair(..), false) => return Err(CliError::usage("arity_mismatch", format!("--nu: {group} takes one list"))),
    }
    Ok(nu)
}

fn orbit_arg(group: GroupSpec, s: &str) -> CliResult<OrbitSpec> {
    let orbit: OrbitSpec = s.parse().map_err(|e| CliError::from_input(e, "orbit"))?;
    let sizes = match &orbit {
        OrbitSpec::Single(a) if !group.is_complex() => vec![a.size()],
        OrbitSpec::Pair(a, b) if group.is_complex() => vec![a.size(), b.size()],
        _ => return Err(CliError::usage("size_mismatch", "--orbit: GLC orbits are pairs `[..]|[..]`, others single")),
    };
    if let Some(&got) = sizes.iter().find(|&&s| s != group.rank()) {
        return Err(CliError::from_input(Error::SizeMismatch { expected: group.rank(), got }, "orbit"));
    }
    Ok(orbit)
}

fn signature_arg(s: &str) -> CliResult<Signature> {
    let bad = || CliError::usage("usage", format!("--signature: expected `p,q`, got {s:?}"));
    let (p, q) = s.split_once(',').ok_or_else(bad)?;
    Ok(Signature { p: p.trim().parse().map_err(|_| bad())?, q: q.trim().parse().map_err(|_| bad())? })
}

/// Parses and validates arguments without computing anything.
pub fn parse_args<I, T>(argv: I) -> CliResult<(Invocation, Style)>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| {
        let exit = if e.use_stderr() { 1 } else { 0 };
        CliError { code: if exit == 0 { "help" } else { "usage" }, message: e.to_string(), exit, detail: None }
    })?;
    let style = Style { format: cli.format, ascii: cli.ascii };
    let threads = cli.threads;
    let inv = match cli.command {
        Command::Count { group, nu, orbit, readings: r } => {
            let group = group_arg(&group)?;
            Invocation::Count {
                nu: nu_arg(group, &nu)?,
                orbit: orbit_arg(group, &orbit)?,
                opts: readings(&r, threads)?,
                group,
            }
        }
        Command::Table { group, nu, include_zeros, readings: r } => {
            let group = group_arg(&group)?;
            Invocation::Table { nu: nu_arg(group, &nu)?, include_zeros, opts: readings(&r, threads)?, group }
        }
        Command::Paintings { shape, kind, signature } => {
            let kind = match kind {
                PaintingKind::Ar => PaintingType::AR,
                PaintingKind::Ah => PaintingType::AH,
                PaintingKind::A => PaintingType::A,
                PaintingKind::ADegenerate => PaintingType::ADegenerate,
            };
            let shape = diagram_arg(&shape, "shape")?;
            let signature = signature.as_deref().map(signature_arg).transpose()?;
            if let Some(sig) = signature {
                if kind != PaintingType::A && kind != PaintingType::ADegenerate {
                    return Err(CliError::usage("usage", "--signature applies to types a and a-degenerate"));
                }
                if sig.p + sig.q != shape.size() {
                    return Err(CliError::from_input(Error::SizeMismatch { expected: shape.size(), got: sig.p + sig.q }, "signature"));
                }
            }
            Invocation::Paintings { shape, kind, signature }
        }
        Command::Assignments { shape, content } => {
            let shape = diagram_arg(&shape, "shape")?;
            let content = diagram_arg(&content, "content")?;
            if shape.size() != content.size() {
                return Err(CliError::from_input(Error::SizeMismatch { expected: shape.size(), got: content.size() }, "content"));
            }
            Invocation::Assignments { shape, content }
        }
        Command::Coh { group, method, half } => {
            let group = group_arg(&group)?;
            let spec = match (group, half) {
                (GroupSpec::U(p, q) | GroupSpec::UGenuine(p, q), true) if p == q => CohSpec::UHalf(p),
                (_, true) => return Err(CliError::usage("invalid_group", "--half needs U(p,p)")),
                (GroupSpec::Glr(n), _) => CohSpec::Glr(n),
                (GroupSpec::Glh(n), _) => CohSpec::Glh(n),
                (GroupSpec::Glc(n), _) => CohSpec::Glc(n),
                (GroupSpec::U(p, q) | GroupSpec::UGenuine(p, q), _) => CohSpec::U(p, q),
            };
            let method = match method {
                MethodArg::Strips => Method::Strips,
                MethodArg::Oracle => Method::Oracle,
            };
            Invocation::Coh { spec, method }
        }
        Command::Verify { group, nu, readings: r } => {
            let group = group_arg(&group)?;
            let nu = nu.as_deref().map(|s| nu_arg(group, s)).transpose()?;
            Invocation::Verify { group, nu, opts: readings(&r, threads)? }
        }
        Command::Selftest => Invocation::Selftest,
    };
    Ok((inv, style))
}

fn rule(style: Style, width: usize) -> String {
    (if style.ascii { "-" } else { "─" }).repeat(width)
}

/// Left-aligned columns with a rule under the header.
fn write_table(out: &mut dyn Write, style: Style, header: &[&str], rows: &[Vec<String>]) -> std::io::Result<()> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    writeln!(out, "{}", line(header.iter().map(|s| s.to_string()).collect()))?;
    writeln!(out, "{}", line(widths.iter().map(|&w| rule(style, w)).collect()))?;
    for row in rows {
        writeln!(out, "{}", line(row.clone()))?;
    }
    Ok(())
}

#[derive(Serialize)]
struct CountOut<'a> {
    group: GroupSpec,
    nu: &'a Nu,
    orbit: &'a OrbitSpec,
    #[serde(flatten)]
    result: &'a CountResult,
}

#[derive(Serialize)]
struct TableOut<'a> {
    group: GroupSpec,
    nu: &'a Nu,
    total: u64,
    rows: Vec<CountOut<'a>>,
}

#[derive(Serialize)]
struct PaintingOut<'a> {
    #[serde(flatten)]
    painting: &'a Painting,
    #[serde(skip_serializing_if = "Option::is_none")]
    signature: Option<Signature>,
}

fn painting_text(p: &Painting, ascii: bool) -> String {
    p.rows()
        .iter()
        .map(|r| r.iter().map(|s| if ascii { s.ascii() } else { s.as_str() }).collect::<String>())
        .collect::<Vec<_>>()
        .join("/")
}

fn rep_rows(rep: &FormalRepSum) -> Vec<Vec<String>> {
    let mut rows: Vec<Vec<String>> = rep.iter().map(|(s, k)| vec![s.to_string(), k.to_string()]).collect();
    rows.reverse();
    rows
}

fn emit_verify(out: &mut dyn Write, style: Style, reports: &[VerifyReport]) -> std::io::Result<()> {
    match style.format {
        Format::Json => {
            for r in reports {
                writeln!(out, "{}", serde_json::to_string(r).expect("serializable"))?;
            }
        }
        Format::Text => {
            let rows: Vec<Vec<String>> = reports
                .iter()
                .flat_map(|r| {
                    r.rows.iter().map(move |row| {
                        let mark = if row.formula == row.oracle { "ok" } else { "MISMATCH" };
                        vec![r.nu.to_string(), row.orbit.to_string(), row.formula.to_string(), row.oracle.to_string(), mark.into()]
                    })
                })
                .collect();
            write_table(out, style, &["nu", "orbit", "formula", "oracle", ""], &rows)?;
        }
    }
    Ok(())
}

/// Executes a validated invocation.
pub fn run(inv: &Invocation, style: Style, out: &mut dyn Write) -> CliResult<()> {
    let json_line = |out: &mut dyn Write, v: &dyn erased::Json| writeln!(out, "{}", v.to_json()).map_err(CliError::io);
    match inv {
        Invocation::Count { group, nu, orbit, opts } => {
            let result = counting::count(*group, nu, orbit, opts).map_err(CliError::computation)?;
            match style.format {
                Format::Json => json_line(out, &CountOut { group: *group, nu, orbit, result: &result })?,
                Format::Text => {
                    let mut rows = vec![vec![orbit.to_string(), result.count.to_string()]];
                    for s in &result.breakdown {
                        let parts: Vec<String> = s.parts.iter().map(ToString::to_string).collect();
                        let factors: Vec<String> = s.factors.iter().map(ToString::to_string).collect();
                        rows.push(vec![format!("  {}", parts.join(" ")), format!("{} = {}", factors.join("·"), s.value)]);
                    }
                    writeln!(out, "{group}  nu = {nu}").map_err(CliError::io)?;
                    write_table(out, style, &["orbit", "count"], &rows).map_err(CliError::io)?;
                }
            }
        }
        Invocation::Table { group, nu, include_zeros, opts } => {
            let table = count_table(*group, nu, opts).map_err(CliError::computation)?;
            let total = table.iter().map(|(_, r)| r.count).sum();
            let kept: Vec<&(OrbitSpec, CountResult)> = table.iter().filter(|(_, r)| *include_zeros || r.count > 0).collect();
            match style.format {
                Format::Json => {
                    let rows = kept.iter().map(|(o, r)| CountOut { group: *group, nu, orbit: o, result: r }).collect();
                    json_line(out, &TableOut { group: *group, nu, total, rows })?;
                }
                Format::Text => {
                    let mut rows: Vec<Vec<String>> = kept.iter().map(|(o, r)| vec![o.to_string(), r.count.to_string()]).collect();
                    rows.push(vec!["total".into(), total.to_string()]);
                    writeln!(out, "{group}  nu = {nu}").map_err(CliError::io)?;
                    write_table(out, style, &["orbit", "count"], &rows).map_err(CliError::io)?;
                }
            }
        }
        Invocation::Paintings { shape, kind, signature } => {
            let all = enumerate_paintings(shape, *kind);
            let mut n = 0;
            for p in &all {
                let sig = p.signature().ok();
                if signature.is_some() && sig != *signature {
                    continue;
                }
                n += 1;
                match style.format {
                    Format::Json => json_line(out, &PaintingOut { painting: p, signature: sig })?,
                    Format::Text => writeln!(out, "{}", painting_text(p, style.ascii)).map_err(CliError::io)?,
                }
            }
            if style.format == Format::Text {
                writeln!(out, "{n} paintings").map_err(CliError::io)?;
            }
        }
        Invocation::Assignments { shape, content } => {
            let all = enumerate_assignments(shape, content).map_err(CliError::computation)?;
            for a in &all {
                match style.format {
                    Format::Json => json_line(out, a)?,
                    Format::Text => {
                        let rows: Vec<String> = a
                            .rows()
                            .iter()
                            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(if content.num_rows() > 9 { "," } else { "" }))
                            .collect();
                        writeln!(out, "{}", rows.join("/")).map_err(CliError::io)?;
                    }
                }
            }
            if style.format == Format::Text {
                writeln!(out, "{} assignments", all.len()).map_err(CliError::io)?;
            }
        }
        Invocation::Coh { spec, method } => {
            let rep = coherent::coh(*spec, *method).map_err(|e| CliError::usage("invalid_group", e.to_string()))?;
            match style.format {
                Format::Json => json_line(out, &rep)?,
                Format::Text => write_table(out, style, &["irrep", "mult"], &rep_rows(&rep)).map_err(CliError::io)?,
            }
        }
        Invocation::Verify { group, nu, opts } => {
            let nus = match nu {
                Some(nu) => vec![nu.clone()],
                None => integral_characters(*group, opts),
            };
            let reports = nus
                .iter()
                .map(|nu| verify(*group, nu, opts))
                .collect::<crate::error::Result<Vec<_>>>()
                .map_err(CliError::computation)?;
            emit_verify(out, style, &reports).map_err(CliError::io)?;
            if let Some(bad) = reports.iter().find(|r| !r.agree) {
                let row = bad.first_mismatch().expect("disagreeing report has a mismatch");
                let breakdown = counting::count(*group, &bad.nu, &row.orbit, opts).map_err(CliError::computation)?;
                return Err(CliError {
                    code: "mismatch",
                    message: format!("{group} nu={} orbit {}: formula {} oracle {}", bad.nu, row.orbit, row.formula, row.oracle),
                    exit: 3,
                    detail: Some(json!({ "group": group, "nu": bad.nu, "row": row, "formula": breakdown })),
                });
            }
        }
        Invocation::Selftest => {
            let mut io_err = None;
            let ok = selftest::run_all(|c, outcome| {
                let line = match style.format {
                    Format::Json => json!({
                        "id": c.id,
                        "title": c.title,
                        "pass": outcome.is_ok(),
                        "detail": outcome.as_ref().unwrap_or_else(|e| e),
                    })
                    .to_string(),
                    Format::Text => match outcome {
                        Ok(d) => format!("PASS {} {}: {d}", c.id, c.title),
                        Err(e) => format!("FAIL {} {}: {e}", c.id, c.title),
                    },
                };
                if let Err(e) = writeln!(out, "{line}") {
                    io_err.get_or_insert(e);
                }
            });
            if let Some(e) = io_err {
                return Err(CliError::io(e));
            }
            if !ok {
                return Err(CliError { code: "mismatch", message: "selftest failed".into(), exit: 3, detail: None });
            }
        }
    }
    Ok(())
}

mod erased {
    /// Object-safe JSON rendering for the output helpers.
    pub trait Json {
        fn to_json(&self) -> String;
    }

    impl<T: serde::Serialize> Json for T {
        fn to_json(&self) -> String {
            serde_json::to_string(self).expect("output types serialize")
        }
    }
}

/// Parses, runs and reports. Returns the process exit code.
pub fn main_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let result = parse_args(argv).and_then(|(inv, style)| run(&inv, style, out));
    match result {
        Ok(()) => 0,
        Err(e) if e.exit == 0 => {
            let _ = write!(out, "{}", e.message);
            0
        }
        Err(e) => {
            let _ = writeln!(err, "{}", e.to_json());
            e.exit
        }
    }
}
