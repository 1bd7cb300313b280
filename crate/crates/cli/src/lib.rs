//! Command-line surface for `ncborel`.
//!
//! [`run`] takes an argument vector and returns the exit code with the bytes
//! destined for stdout and stderr, so the binary is a thin wrapper and every
//! subcommand can be exercised in-process.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value as Json};

use ncborel::calculus::{d, partials, Form, Variant};
use ncborel::claims::{claims_report, ClaimReport};
use ncborel::hodge::{star, wave};
use ncborel::homology::{cohomology_dims, find_primitive, CohomologyTable, PrimitiveError};
use ncborel::symmetry::{adjoint_action, coregular_action, TIndex};
use ncborel::syntax::{
    document, format_form_latex, format_form_text, format_poly_latex, format_poly_text, form_json, parse_scalar,
    parse_value, poly_json, ParseError, Value,
};
use ncborel::waves::{
    plane_wave_series, wave_derivative_check, wave_eigenvalue_check, wave_matrix, Convention, WaveCheck, WaveOperator,
    WaveSpec,
};
use ncborel::NcPoly;

/// Exit status for a computation that is well-posed but has no answer.
pub const EXIT_DOMAIN: i32 = 1;
/// Exit status for bad flags or unparsable input.
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    D,
    Box,
}

#[derive(Parser, Debug)]
#[command(name = "ncborel", version, about = "Exact calculus on the noncommutative space R^3_lambda")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normal-order an expression.
    Mul {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Exterior derivative.
    D {
        #[arg(long, default_value = "consistent", value_parser = parse_variant)]
        variant: Variant,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Hodge star.
    Star {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Wave operator *d*d on functions and 1-forms.
    #[command(name = "box")]
    BoxOp {
        #[arg(long, default_value = "consistent", value_parser = parse_variant)]
        variant: Variant,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Partial derivatives of a function.
    Partials {
        #[arg(long, default_value = "consistent", value_parser = parse_variant)]
        variant: Variant,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Exact kernel of a wave operator in one grade.
    Kernel {
        #[arg(long, value_parser = parse_operator)]
        operator: WaveOperator,
        #[arg(long)]
        grade: u32,
        #[arg(long, default_value = "consistent", value_parser = parse_variant)]
        variant: Variant,
    },
    /// de Rham cohomology table.
    Cohomology {
        #[arg(long)]
        max_grade: u32,
    },
    /// Certified primitive of a closed form.
    Primitive {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, default_value_t = 8)]
        grade_bound: u32,
    },
    /// Truncated plane wave and its identity checks.
    Wave {
        #[arg(long)]
        order: usize,
        #[arg(long, value_parser = parse_convention)]
        convention: Convention,
        #[arg(long, value_enum)]
        check: Option<Check>,
        #[arg(long, default_value = "consistent", value_parser = parse_variant)]
        variant: Variant,
        /// Wave vector as three comma-separated scalars; formal k1,k2,k3 by default.
        #[arg(long)]
        k: Option<String>,
    },
    /// Quantum-double action on a function.
    Action {
        #[arg(long)]
        gen: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Adjudication of every located identity.
    Report,
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    s.parse()
}

fn parse_operator(s: &str) -> Result<WaveOperator, String> {
    s.parse()
}

fn parse_convention(s: &str) -> Result<Convention, String> {
    s.parse()
}

/// What a process invocation produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Outcome { code, stdout: String::new(), stderr }
    }
}

enum CliError {
    Parse(ParseError),
    Usage(String),
    Domain(String),
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

/// A rendered result in all three formats.
struct Rendered {
    text: String,
    latex: String,
    json: Json,
}

impl Rendered {
    fn pick(self, format: Format) -> String {
        let mut s = match format {
            Format::Text => self.text,
            Format::Latex => self.latex,
            Format::Json => serde_json::to_string_pretty(&document(self.json)).expect("json values serialize"),
        };
        if !s.ends_with('\n') {
            s.push('\n');
        }
        s
    }
}

fn value_rendered(v: &Value) -> Rendered {
    Rendered { text: v.text(), latex: v.latex(), json: v.to_json() }
}

fn form_rendered(f: Form) -> Rendered {
    value_rendered(&Value::from_form(f))
}

/// Runs the CLI, reading stdin only when an expression argument is `-`.
pub fn run<S: AsRef<str>>(argv: &[S]) -> Outcome {
    run_with_stdin(argv, &mut std::io::stdin())
}

pub fn run_with_stdin<S: AsRef<str>>(argv: &[S], stdin: &mut dyn Read) -> Outcome {
    let args: Vec<&str> = argv.iter().map(|s| s.as_ref()).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() { Outcome::fail(EXIT_USAGE, rendered) } else { Outcome::ok(rendered) };
        }
    };
    let format = cli.format;
    match execute(cli.command, stdin) {
        Ok(r) => {
            let bytes = r.pick(format);
            match cli.out {
                None => Outcome::ok(bytes),
                Some(path) => match std::fs::write(&path, &bytes) {
                    Ok(()) => Outcome::ok(String::new()),
                    Err(e) => Outcome::fail(EXIT_DOMAIN, format!("error: cannot write --out {}: {}\n", path.display(), e)),
                },
            }
        }
        Err(err) => {
            let (code, kind, message, offset) = match &err {
                CliError::Parse(p) => (EXIT_USAGE, p.kind(), p.to_string(), Some(p.offset())),
                CliError::Usage(m) => (EXIT_USAGE, "usage", m.clone(), None),
                CliError::Domain(m) => (EXIT_DOMAIN, "domain", m.clone(), None),
            };
            let stderr = if format == Format::Json {
                let mut doc = json!({"error": kind, "message": message});
                if let Some(o) = offset {
                    doc["offset"] = json!(o);
                }
                format!("{}\n", document(doc))
            } else {
                format!("error: {}\n", message)
            };
            Outcome::fail(code, stderr)
        }
    }
}

fn read_expr(src: &str, stdin: &mut dyn Read) -> Result<Value, CliError> {
    if src == "-" {
        let mut buf = String::new();
        stdin.read_to_string(&mut buf).map_err(|e| CliError::Usage(format!("cannot read EXPR from stdin: {}", e)))?;
        Ok(parse_value(buf.trim())?)
    } else {
        Ok(parse_value(src)?)
    }
}

fn require_poly(v: Value, what: &str) -> Result<NcPoly, CliError> {
    match v {
        Value::Poly(p) => Ok(p),
        Value::Form(f) => Err(CliError::Domain(format!("{} needs a function, got a {}-form", what, f.degree()))),
    }
}

fn execute(cmd: Command, stdin: &mut dyn Read) -> Result<Rendered, CliError> {
    match cmd {
        Command::Mul { expr } => Ok(value_rendered(&read_expr(&expr, stdin)?)),
        Command::D { variant, expr } => {
            let f = read_expr(&expr, stdin)?.into_form();
            if f.degree() >= 3 {
                return Ok(form_rendered(Form::zero(f.degree() + 1)));
            }
            Ok(form_rendered(d(&f, variant)))
        }
        Command::Star { expr } => Ok(form_rendered(star(&read_expr(&expr, stdin)?.into_form()))),
        Command::BoxOp { variant, expr } => {
            let f = read_expr(&expr, stdin)?.into_form();
            wave(&f, variant).map(form_rendered).map_err(|e| CliError::Domain(e.to_string()))
        }
        Command::Partials { variant, expr } => {
            let f = require_poly(read_expr(&expr, stdin)?, "partials")?;
            Ok(partials_rendered(&partials(&f, variant)))
        }
        Command::Kernel { operator, grade, variant } => Ok(kernel_rendered(operator, grade, variant)),
        Command::Cohomology { max_grade } => Ok(cohomology_rendered(&cohomology_dims(max_grade))),
        Command::Primitive { expr, grade_bound } => {
            let f = read_expr(&expr, stdin)?.into_form();
            match find_primitive(&f, grade_bound) {
                Ok(Some(eta)) => Ok(form_rendered(eta)),
                Ok(None) => Err(CliError::Domain(format!("no primitive found within --grade-bound {}", grade_bound))),
                Err(PrimitiveError::NotClosed { witness }) => {
                    Err(CliError::Domain(format!("form is not closed; its derivative is {}", format_form_text(&witness))))
                }
                Err(e) => Err(CliError::Domain(e.to_string())),
            }
        }
        Command::Wave { order, convention, check, variant, k } => {
            let mut spec = WaveSpec::formal(order, convention);
            if let Some(k) = k {
                let parts: Vec<&str> = k.split(',').collect();
                if parts.len() != 3 {
                    return Err(CliError::Usage(format!("--k expects three comma-separated scalars, got '{}'", k)));
                }
                for (slot, src) in spec.k.iter_mut().zip(parts) {
                    *slot = parse_scalar(src.trim())?;
                }
            }
            Ok(match check {
                None => value_rendered(&Value::Poly(plane_wave_series(&spec))),
                Some(c) => {
                    let result = match c {
                        Check::D => wave_derivative_check(&spec, variant),
                        Check::Box => wave_eigenvalue_check(&spec, variant),
                    };
                    wave_check_rendered(&spec, c, variant, &result)
                }
            })
        }
        Command::Action { gen, expr } => {
            let f = require_poly(read_expr(&expr, stdin)?, "action")?;
            let out = match gen.as_str() {
                "J1" => adjoint_action(1, &f),
                "J2" => adjoint_action(2, &f),
                "J3" => adjoint_action(3, &f),
                t => {
                    let idx = t
                        .strip_prefix('t')
                        .filter(|s| s.len() == 2)
                        .and_then(|s| {
                            let mut c = s.chars().map(|c| c.to_digit(10));
                            TIndex::new(c.next()?? as usize, c.next()?? as usize)
                        })
                        .ok_or_else(|| {
                            CliError::Usage(format!("invalid value '{}' for '--gen': expected J1, J2, J3, t11, t12, t21 or t22", t))
                        })?;
                    coregular_action(idx, &f)
                }
            };
            Ok(value_rendered(&Value::Poly(out)))
        }
        Command::Report => Ok(report_rendered(&claims_report())),
    }
}

fn partials_rendered(ps: &[NcPoly; 3]) -> Rendered {
    let mut text = String::new();
    let mut latex = String::new();
    for (a, p) in ps.iter().enumerate() {
        writeln!(text, "d{}: {}", a + 1, format_poly_text(p)).unwrap();
        writeln!(latex, "\\partial_{} f = {} \\\\", a + 1, format_poly_latex(p)).unwrap();
    }
    let json = json!({"kind": "partials", "partials": ps.iter().map(poly_json).collect::<Vec<_>>()});
    Rendered { text, latex, json }
}

fn kernel_rendered(op: WaveOperator, grade: u32, variant: Variant) -> Rendered {
    let m = wave_matrix(op, grade, variant);
    let basis: Vec<Form> = m.nullspace().iter().map(|v| m.source.to_form(v)).collect();
    let rank = m.source.len() - basis.len();
    let mut text = format!(
        "{} kernel at grade {} ({}): block {}, rank {}, kernel {}\n",
        op.name(),
        grade,
        variant.name(),
        m.source.len(),
        rank,
        basis.len()
    );
    let mut latex = String::from("\\begin{itemize}\n");
    for f in &basis {
        writeln!(text, "  {}", format_form_text(f)).unwrap();
        writeln!(latex, "  \\item ${}$", format_form_latex(f)).unwrap();
    }
    latex.push_str("\\end{itemize}");
    let json = json!({
        "kind": "kernel",
        "operator": op.name(),
        "grade": grade,
        "variant": variant.name(),
        "block_dim": m.source.len(),
        "rank": rank,
        "kernel": basis.iter().map(form_json).collect::<Vec<_>>(),
    });
    Rendered { text, latex, json }
}

fn cohomology_rendered(t: &CohomologyTable) -> Rendered {
    let mut latex = String::from("\\begin{tabular}{r|rrrr}\ngrade & $H^0$ & $H^1$ & $H^2$ & $H^3$ \\\\\n\\hline\n");
    for n in 0..=t.max_grade {
        let row: Vec<String> = (0..4).map(|k| t.dim(k, n).to_string()).collect();
        writeln!(latex, "{} & {} \\\\", n, row.join(" & ")).unwrap();
    }
    latex.push_str("\\end{tabular}");
    let totals: Vec<usize> = (0..4).map(|k| t.total(k)).collect();
    let json = json!({
        "kind": "cohomology",
        "max_grade": t.max_grade,
        "totals": totals,
        "entries": t.entries,
    });
    Rendered { text: t.to_string(), latex, json }
}

fn wave_check_rendered(spec: &WaveSpec, check: Check, variant: Variant, r: &WaveCheck) -> Rendered {
    let name = match check {
        Check::D => "d",
        Check::Box => "box",
    };
    let k: Vec<String> = spec.k.iter().map(|s| s.to_string()).collect();
    let verdict = if r.holds() { "PASS" } else { "FAIL" };
    let classical = if r.holds_classically() { "PASS" } else { "FAIL" };
    let mut text = format!(
        "plane-wave {} check: convention {}, variant {}, k = ({}), k-order <= {}\n",
        name,
        spec.convention.name(),
        variant.name(),
        k.join(", "),
        spec.order
    );
    let mut latex = String::from("\\begin{align*}\n");
    for (m, res) in r.residuals.iter().enumerate() {
        writeln!(text, "order {}: {}", m, format_form_text(res)).unwrap();
        writeln!(latex, "R_{} &= {} \\\\", m, format_form_latex(res)).unwrap();
    }
    latex.push_str("\\end{align*}");
    match r.first_failure() {
        Some(m) => writeln!(text, "verdict: {} (first nonzero residual at order {})", verdict, m).unwrap(),
        None => writeln!(text, "verdict: {}", verdict).unwrap(),
    }
    write!(text, "classical limit: {}", classical).unwrap();
    let json = json!({
        "kind": "wave-check",
        "check": name,
        "convention": spec.convention.name(),
        "variant": variant.name(),
        "k": k,
        "order": spec.order,
        "residuals": r.residuals.iter().map(form_json).collect::<Vec<_>>(),
        "first_failure": r.first_failure(),
        "status": verdict,
        "classical_status": classical,
    });
    Rendered { text, latex, json }
}

fn latex_escape(s: &str) -> String {
    s.replace('_', "\\_").replace('#', "\\#")
}

fn report_rendered(r: &ClaimReport) -> Rendered {
    let mut latex = String::from("\\begin{tabular}{lll}\nclaim & variant & status \\\\\n\\hline\n");
    for e in &r.entries {
        let variant = match &e.convention {
            Some(c) => format!("{}, {}", e.variant, c),
            None => e.variant.clone(),
        };
        writeln!(latex, "\\texttt{{{}}} & {} & {} \\\\", latex_escape(&e.id), variant, e.status.name()).unwrap();
    }
    latex.push_str("\\end{tabular}");
    let mut json = r.to_json();
    if let Json::Object(map) = &mut json {
        map.remove("schema");
    }
    Rendered { text: r.to_string(), latex, json }
}
