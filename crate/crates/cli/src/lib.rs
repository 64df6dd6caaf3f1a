//! Argument parsing, dispatch and rendering for the `lorentzvol` binary.
//!
//! Kept in a library so tests can run commands in-process and inject a
//! Bernoulli source into `selfcheck`.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use lorentzvol::lattice::{
    coxeter_gram, diagram_ii17, gram_e8, gram_form_f, gram_hyperbolic_plane,
    gram_identity_lorentzian, gram_ii, GramMatrix,
};
use lorentzvol::mass::{mass_even_unimodular, volume_mass_ratio};
use lorentzvol::rational::{format_factored, BernoulliSource, ExactRational, Recurrence};
use lorentzvol::volume::{
    covolume_po_even_unimodular, covolume_pso_odd_unimodular, covolume_smallest_orbifold,
    coxeter_polytope_volume_17, evaluate, VolumeExpression,
};
use lorentzvol::{selfcheck, Error};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "lorentzvol", version, about = "Exact covolumes of unimodular Lorentzian lattice groups")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, clap::Args)]
struct Output {
    /// Working precision of the decimal value, in bits
    #[arg(long, env = "LORENTZVOL_PREC", default_value_t = 128)]
    prec: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Skip the decimal evaluation
    #[arg(long)]
    exact: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Covolume of a reflection orbifold in odd dimension n
    Volume {
        #[arg(allow_negative_numbers = true)]
        n: i64,
        #[arg(long, value_enum, default_value_t = Group::Smallest)]
        group: Group,
        #[command(flatten)]
        out: Output,
    },
    /// Volume of the 17-dimensional Coxeter polytope with its diagram certificate
    Coxeter17 {
        #[command(flatten)]
        out: Output,
    },
    /// Mass of the even unimodular lattices of rank m
    Mass {
        #[arg(allow_negative_numbers = true)]
        m: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Covolume of PO(II_{n,1}) divided by the mass in rank n - 1
    Ratio {
        #[arg(allow_negative_numbers = true)]
        n: i64,
        #[command(flatten)]
        out: Output,
    },
    /// Determinant, parity and signature of a Gram matrix
    Lattice {
        #[arg(value_enum, ignore_case = true)]
        kind: LatticeKind,
        #[arg(allow_negative_numbers = true)]
        n: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the exact identity suite
    Selfcheck {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Group {
    Smallest,
    PoEven,
    PsoOdd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LatticeKind {
    #[value(name = "II")]
    Ii,
    #[value(name = "I")]
    I,
    #[value(name = "f")]
    F,
    #[value(name = "E8")]
    E8,
    #[value(name = "U")]
    U,
}

impl LatticeKind {
    fn label(self) -> &'static str {
        match self {
            LatticeKind::Ii => "II",
            LatticeKind::I => "I",
            LatticeKind::F => "f",
            LatticeKind::E8 => "E8",
            LatticeKind::U => "U",
        }
    }
}

/// The JSON contract. Keys are emitted in sorted order and absent sections are omitted.
#[derive(Debug, Serialize)]
pub struct OutputRecord {
    pub command: String,
    pub input: Input,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<ExactOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mass: Option<RationalOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decimal: Option<DecimalOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lattice: Option<LatticeOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagram: Option<DiagramOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<CheckOut>>,
    pub status: String,
}

#[derive(Debug, Default, Serialize)]
pub struct Input {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub precision_bits: Option<u32>,
}

#[derive(Debug, Serialize)]
pub struct RationalOut {
    pub numerator: String,
    pub denominator: String,
    pub factored: String,
}

impl RationalOut {
    fn new(q: &ExactRational) -> Self {
        RationalOut {
            numerator: q.numer().to_string(),
            denominator: q.denom().to_string(),
            factored: format_factored(q),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ExactOut {
    pub coefficient: RationalOut,
    pub sqrt3_exponent: u32,
    pub pi_exponent: i64,
    pub zeta_factors: Vec<u32>,
    pub l3_factors: Vec<u32>,
    pub expression: String,
}

#[derive(Debug, Serialize)]
pub struct DecimalOut {
    pub value: String,
    pub abs_error: String,
}

#[derive(Debug, Serialize)]
pub struct LatticeOut {
    pub dimension: usize,
    pub determinant: String,
    pub even: bool,
    pub signature: String,
}

#[derive(Debug, Serialize)]
pub struct DiagramOut {
    pub node_count: usize,
    pub edge_count: usize,
    pub degree_sequence: Vec<usize>,
    pub signature: String,
    pub rank: usize,
}

#[derive(Debug, Serialize)]
pub struct CheckOut {
    pub name: String,
    pub passed: bool,
}

fn record(command: &str, input: Input) -> OutputRecord {
    OutputRecord {
        command: command.into(),
        input,
        exact: None,
        mass: None,
        decimal: None,
        lattice: None,
        diagram: None,
        checks: None,
        status: "ok".into(),
    }
}

fn exact_out(e: &VolumeExpression) -> ExactOut {
    ExactOut {
        coefficient: RationalOut::new(e.coefficient()),
        sqrt3_exponent: e.sqrt3_exponent(),
        pi_exponent: e.pi_exponent(),
        zeta_factors: e.zeta_factors().to_vec(),
        l3_factors: e.l3_factors().to_vec(),
        expression: e.to_string(),
    }
}

/// Significant digits that the posted bound supports at `prec` bits.
fn digits_for(prec: u32) -> usize {
    ((prec as f64 * std::f64::consts::LOG10_2) as usize).max(1)
}

fn decimal_out(e: &VolumeExpression, prec: u32) -> Result<DecimalOut, Error> {
    let v = evaluate(e, prec)?;
    Ok(DecimalOut { value: v.value_string(digits_for(prec)), abs_error: v.error_string() })
}

fn expression_record(command: &str, input: Input, e: &VolumeExpression, out: &Output) -> Result<OutputRecord, Error> {
    let mut r = record(command, input);
    r.exact = Some(exact_out(e));
    if !out.exact {
        r.decimal = Some(decimal_out(e, out.prec)?);
    }
    Ok(r)
}

fn lattice_out(g: &GramMatrix) -> Result<LatticeOut, Error> {
    Ok(LatticeOut {
        dimension: g.dimension(),
        determinant: g.determinant().to_string(),
        even: g.is_even()?,
        signature: g.signature().to_string(),
    })
}

fn render_text(r: &OutputRecord) -> String {
    let mut lines = Vec::new();
    let mut head = r.command.clone();
    let i = &r.input;
    if let Some(k) = &i.kind {
        head.push_str(&format!(" {k}"));
    }
    if let Some(n) = i.n {
        head.push_str(&format!(" n={n}"));
    }
    if let Some(m) = i.m {
        head.push_str(&format!(" m={m}"));
    }
    if let Some(g) = &i.group {
        head.push_str(&format!(" group={g}"));
    }
    lines.push(head);
    if let Some(e) = &r.exact {
        lines.push(format!("exact:     {}", e.expression));
        let tail = e.expression.split_once(" · ").map(|(_, t)| format!(" · {t}")).unwrap_or_default();
        lines.push(format!("factored:  {}{tail}", e.coefficient.factored));
    }
    if let Some(m) = &r.mass {
        lines.push(format!("mass:      {}/{}", m.numerator, m.denominator));
        lines.push(format!("factored:  {}", m.factored));
    }
    if let Some(d) = &r.decimal {
        let bits = i.precision_bits.map(|p| format!(" ({p} bits)")).unwrap_or_default();
        lines.push(format!("value:     {} ± {}{bits}", d.value, d.abs_error));
    }
    if let Some(l) = &r.lattice {
        lines.push(format!("dimension: {}", l.dimension));
        lines.push(format!("det:       {}", l.determinant));
        lines.push(format!("parity:    {}", if l.even { "even" } else { "odd" }));
        lines.push(format!("signature: ({})", l.signature));
    }
    if let Some(d) = &r.diagram {
        lines.push(format!("diagram:   {} nodes, {} edges", d.node_count, d.edge_count));
        let seq: Vec<String> = d.degree_sequence.iter().map(|k| k.to_string()).collect();
        lines.push(format!("degrees:   {}", seq.join(" ")));
        lines.push(format!("signature: ({}), rank {}", d.signature, d.rank));
    }
    if let Some(checks) = &r.checks {
        for c in checks {
            lines.push(format!("{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name));
        }
    }
    lines.push(String::new());
    lines.join("\n")
}

/// Pretty JSON with sorted keys; stable byte for byte across runs.
pub fn render_json(r: &OutputRecord) -> String {
    let value = serde_json::to_value(r).expect("plain data serializes");
    let mut s = serde_json::to_string_pretty(&value).expect("value serializes");
    s.push('\n');
    s
}

fn execute(cli: Cli, source: &dyn BernoulliSource) -> Result<(OutputRecord, Format), Error> {
    Ok(match cli.command {
        Command::Volume { n, group, out } => {
            let (name, e) = match group {
                Group::Smallest => ("smallest", covolume_smallest_orbifold(n)?),
                Group::PoEven => ("po-even", covolume_po_even_unimodular(n)?),
                Group::PsoOdd => ("pso-odd", covolume_pso_odd_unimodular(n)?),
            };
            let input = Input {
                n: Some(n),
                group: Some(name.into()),
                precision_bits: (!out.exact).then_some(out.prec),
                ..Input::default()
            };
            (expression_record("volume", input, &e, &out)?, out.format)
        }
        Command::Coxeter17 { out } => {
            let input = Input { precision_bits: (!out.exact).then_some(out.prec), ..Input::default() };
            let mut r = expression_record("coxeter17", input, &coxeter_polytope_volume_17(), &out)?;
            let d = diagram_ii17();
            let g = coxeter_gram(&d)?;
            r.diagram = Some(DiagramOut {
                node_count: d.node_count(),
                edge_count: d.edges().count(),
                degree_sequence: d.degree_sequence(),
                signature: g.signature().to_string(),
                rank: g.rank(),
            });
            (r, out.format)
        }
        Command::Mass { m, format } => {
            let mut r = record("mass", Input { m: Some(m), ..Input::default() });
            r.mass = Some(RationalOut::new(&mass_even_unimodular(m)?));
            (r, format)
        }
        Command::Ratio { n, out } => {
            let input = Input { n: Some(n), precision_bits: (!out.exact).then_some(out.prec), ..Input::default() };
            (expression_record("ratio", input, &volume_mass_ratio(n)?, &out)?, out.format)
        }
        Command::Lattice { kind, n, format } => {
            let need = |n: Option<i64>| {
                n.ok_or(Error::Dimension { n: 0, requirement: "this lattice kind needs a dimension argument n" })
            };
            let g = match kind {
                LatticeKind::Ii => gram_ii(need(n)?)?,
                LatticeKind::I => gram_identity_lorentzian(need(n)?)?,
                LatticeKind::F => gram_form_f(need(n)?)?,
                LatticeKind::E8 => gram_e8(),
                LatticeKind::U => gram_hyperbolic_plane(),
            };
            let mut r = record("lattice", Input { n, kind: Some(kind.label().into()), ..Input::default() });
            r.lattice = Some(lattice_out(&g)?);
            (r, format)
        }
        Command::Selfcheck { format } => {
            let checks = selfcheck::run_with(source);
            let mut r = record("selfcheck", Input::default());
            if checks.iter().any(|c| !c.passed) {
                r.status = "fail".into();
            }
            r.checks = Some(checks.into_iter().map(|c| CheckOut { name: c.name.into(), passed: c.passed }).collect());
            (r, format)
        }
    })
}

/// Parse `args` (including the program name), run, write to `out`/`err`, return the exit code.
pub fn run_with<I, T>(args: I, source: &dyn BernoulliSource, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match execute(cli, source) {
        Ok((record, format)) => {
            let text = match format {
                Format::Text => render_text(&record),
                Format::Json => render_json(&record),
            };
            let _ = out.write_all(text.as_bytes());
            if record.status == "ok" {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &Recurrence, out, err)
}
