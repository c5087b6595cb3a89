//! The `abalg` command line.
//!
//! Exit codes: 0 success, 2 parse or usage error, 3 domain error,
//! 4 internal invariant violation.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::{One, Zero};

use crate::coeff::Coeff;
use crate::division::{divide, divide_linear, factor_homogeneous, invert, Factorization};
use crate::element::{signed_abs, AlgebraElement, Ordering};
use crate::error::AlgebraError;
use crate::fresco::Fresco;
use crate::json::{
    apoly_to_json, from_json, to_json, DivisionJson, ElementJson, FactoredProductJson, FactorizationJson, MatrixJson,
    PolyJson, PolySeriesJson, SeriesMatrixJson, SpectrumJson, SystemJson, XiJson,
};
use crate::module::{from_differential_system, SimplePoleModule};
use crate::oracle::{act, PolySeries};
use crate::parser::{parse_element, ParseError};
use crate::selftest;
use crate::series::APolynomial;
use crate::xi::{xi_act_a, xi_act_b, XiElement};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "abalg", version, about = "Exact arithmetic in the algebra ab - ba = b^2 and its modules")]
struct Cli {
    /// Truncation order: monomials of total degree above it are dropped.
    #[arg(long, global = true, default_value_t = 8)]
    order: u32,
    /// Print human-readable sums instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Form {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum XiOp {
    A,
    B,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rewrite an expression in left (a^p b^q) or right (b^q a^p) normal form.
    Normalize {
        #[arg(long, value_enum, default_value = "left")]
        form: Form,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Product of two expressions.
    Mul {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Two-sided inverse of a unit.
    Inv {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// X = Q (a - lambda b) + R with R a series in b.
    DivLinear {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// X = Q P + R for P given as a factored product (JSON file).
    Div {
        #[arg(long)]
        product: PathBuf,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// The automorphism a -> a + x b, b -> b.
    Tau {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// The anti-automorphism a -> a, b -> -b.
    AntiF {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Act on a truncated power series in z (JSON file).
    Act {
        #[arg(long)]
        input: PathBuf,
        /// Degree bound of the result; defaults to the input's.
        #[arg(long)]
        degree: Option<u32>,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Factor a homogeneous element into linear factors where possible.
    Factor {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Bernstein polynomial of E(theta): minimal polynomial of -theta.
    Bernstein {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Whether every eigenvalue of theta is a positive rational.
    Geometric {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// The structure ae = X(b)be attached to s dF/ds = M(s) F.
    Ode2ab {
        #[arg(long)]
        system: PathBuf,
    },
    /// Act on a class of the cyclic module B[a]/B[a]P.
    FrescoAct {
        #[arg(long)]
        product: PathBuf,
        /// Representative acted upon; defaults to the generator 1.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        r: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Apply a or b to a multivalued expansion (JSON file).
    XiAct {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        op: XiOp,
    },
    /// Run every invariant suite and print a pass/fail table.
    Selftest,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Domain(AlgebraError),
    Internal(String),
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        CliError::Domain(e)
    }
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Domain(_) => EXIT_DOMAIN,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(m) => m.clone(),
            CliError::Domain(e) => format!("domain error: {e}"),
            CliError::Internal(m) => format!("internal error: {m}"),
        }
    }
}

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = write!(err, "{}", e.render());
            return EXIT_USAGE;
        }
        Err(e) => {
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    match execute(&cli) {
        Ok(text) => {
            let _ = writeln!(out, "{text}");
            EXIT_OK
        }
        Err(CliError::Internal(table)) if matches!(cli.command, Command::Selftest) => {
            let _ = writeln!(out, "{table}");
            EXIT_INTERNAL
        }
        Err(e) => {
            let _ = writeln!(err, "{}", e.message());
            e.code()
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn read_json<T: for<'de> serde::Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = read_file(path)?;
    from_json(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

/// A constant expression such as `-1/2` or `(1 + i)`.
fn parse_scalar(text: &str) -> Result<Coeff, CliError> {
    let x = parse_element(text, 1)?;
    if x.terms().any(|(m, _)| m.degree() > 0) {
        return Err(CliError::Usage(format!("expected a constant, got {text:?}")));
    }
    Ok(x.constant_term())
}

fn render_sum(terms: impl IntoIterator<Item = (Coeff, String)>) -> String {
    let mut out = String::new();
    for (c, mono) in terms {
        let (neg, abs) = signed_abs(&c);
        let body = if mono.is_empty() {
            abs.to_string()
        } else if abs.is_one() {
            mono
        } else {
            format!("{abs}*{mono}")
        };
        let sign = match (out.is_empty(), neg) {
            (true, false) => "",
            (true, true) => "-",
            (false, false) => " + ",
            (false, true) => " - ",
        };
        out.push_str(sign);
        out.push_str(&body);
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

fn pretty_series(f: &PolySeries) -> String {
    render_sum(f.terms().map(|(m, c)| {
        let mono = match m {
            0 => String::new(),
            1 => "z".to_string(),
            _ => format!("z^{m}"),
        };
        (c.clone(), mono)
    }))
}

fn pretty_xi(xi: &XiElement) -> String {
    let mut lines = Vec::new();
    for (k, c) in xi.terms() {
        let coords: Vec<String> = c.iter().map(|x| x.to_string()).collect();
        let log = match k.j {
            0 => String::new(),
            1 => "*log(s)".to_string(),
            j => format!("*log(s)^{j}"),
        };
        lines.push(format!("s^({}){log} ⊗ [{}]", k.exponent(), coords.join(", ")));
    }
    if lines.is_empty() {
        "0".to_string()
    } else {
        lines.join("\n")
    }
}

fn pretty_factorization(f: &Factorization) -> String {
    let mut parts = Vec::new();
    if !f.unit.is_one() {
        parts.push(f.unit.to_string());
    }
    match f.b_power {
        0 => {}
        1 => parts.push("b".to_string()),
        j => parts.push(format!("b^{j}")),
    }
    if let Some(core) = &f.core {
        parts.push(format!("({core})"));
    }
    for l in &f.lambdas {
        let (neg, abs) = signed_abs(l);
        let factor = if l.is_zero() {
            "a".to_string()
        } else if abs.is_one() {
            format!("(a {} b)", if neg { "+" } else { "-" })
        } else {
            format!("(a {} {abs}*b)", if neg { "+" } else { "-" })
        };
        parts.push(factor);
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" * ")
    }
}

fn element_out(x: &AlgebraElement, pretty: bool) -> String {
    if pretty {
        x.to_string()
    } else {
        to_json(&ElementJson::from_element(x))
    }
}

fn division_out(q: &AlgebraElement, r: &AlgebraElement, pretty: bool) -> String {
    if pretty {
        format!("Q = {q}\nR = {}", r.to_left())
    } else {
        to_json(&DivisionJson::new(q, r))
    }
}

fn execute(cli: &Cli) -> Result<String, CliError> {
    let n = cli.order;
    let pretty = cli.pretty;
    let parse = |text: &str| parse_element(text, n);
    Ok(match &cli.command {
        Command::Normalize { form, expr } => {
            let target = match form {
                Form::Left => Ordering::Left,
                Form::Right => Ordering::Right,
            };
            element_out(&parse(expr)?.to_ordering(target), pretty)
        }
        Command::Mul { x, y } => element_out(&parse(x)?.try_mul(&parse(y)?)?, pretty),
        Command::Inv { expr } => {
            let x = parse(expr)?;
            let y = invert(&x)?;
            if !(&x * &y).same_value(&AlgebraElement::one(n))? {
                return Err(CliError::Internal("inverse check failed".into()));
            }
            element_out(&y, pretty)
        }
        Command::DivLinear { lambda, expr } => {
            let lambda = parse_scalar(lambda)?;
            let (q, r) = divide_linear(&parse(expr)?, &lambda);
            division_out(&q, r.as_element(), pretty)
        }
        Command::Div { product, expr } => {
            let p = read_json::<FactoredProductJson>(product)?.to_product(n)?;
            let x = parse(expr)?;
            let d = divide(&x, &p)?;
            let back = &(&d.quotient.with_order(n) * &p.expand()) + &d.remainder.to_element().to_left();
            if !back.same_value(&x)? {
                return Err(CliError::Internal("division identity failed".into()));
            }
            if pretty {
                division_out(&d.quotient, &d.remainder.to_element(), true)
            } else {
                to_json(&DivisionJson::from_result(&d))
            }
        }
        Command::Tau { x, expr } => element_out(&parse(expr)?.tau(&parse_scalar(x)?).to_left(), pretty),
        Command::AntiF { expr } => element_out(&parse(expr)?.anti_f(Ordering::Left), pretty),
        Command::Act { input, degree, expr } => {
            let f = read_json::<PolySeriesJson>(input)?.to_series()?;
            let d = degree.unwrap_or(f.degree());
            let f = PolySeries::from_terms(d, f.terms().map(|(m, c)| (m, c.clone())));
            let g = act(&parse(expr)?, &f);
            if pretty {
                pretty_series(&g)
            } else {
                to_json(&PolySeriesJson::from_series(&g))
            }
        }
        Command::Factor { expr } => {
            let x = parse(expr)?;
            let f = factor_homogeneous(&x)?;
            if !f.expand(n).same_value(&x)? {
                return Err(CliError::Internal("factorization does not re-expand".into()));
            }
            if pretty {
                pretty_factorization(&f)
            } else {
                to_json(&FactorizationJson::from_factorization(&f))
            }
        }
        Command::Bernstein { matrix } => {
            let theta = read_json::<MatrixJson>(matrix)?.to_matrix()?;
            let beta = SimplePoleModule::new(theta, n).bernstein();
            if pretty {
                beta.to_string()
            } else {
                to_json(&PolyJson::from_poly(&beta))
            }
        }
        Command::Geometric { matrix } => {
            let theta = read_json::<MatrixJson>(matrix)?.to_matrix()?;
            let report = SimplePoleModule::new(theta, n).is_geometric_spectrum();
            if pretty {
                let eig: Vec<String> = report.eigenvalues.iter().map(|(v, m)| format!("{v} (x{m})")).collect();
                let mut s = format!("geometric: {}\neigenvalues: {}", report.geometric, eig.join(", "));
                if let Some(d) = &report.diagnostic {
                    s.push_str(&format!("\ndiagnostic: {d}"));
                }
                s
            } else {
                to_json(&SpectrumJson::from_report(&report))
            }
        }
        Command::Ode2ab { system } => {
            let sys = read_json::<SystemJson>(system)?.to_system()?;
            let module = from_differential_system(&sys, n)?;
            if !sys.check(&module)? {
                return Err(CliError::Internal("defining identity fails after iteration".into()));
            }
            let x = module.matrix();
            if pretty {
                x.coeffs()
                    .iter()
                    .enumerate()
                    .filter(|(_, m)| !m.is_zero())
                    .map(|(j, m)| format!("b^{j}: {m}"))
                    .collect::<Vec<_>>()
                    .join("\n")
            } else {
                to_json(&SeriesMatrixJson::from_series_matrix(x))
            }
        }
        Command::FrescoAct { product, r, expr } => {
            let fresco = Fresco::new(read_json::<FactoredProductJson>(product)?.to_product(n)?);
            let rep = fresco.reduce(&parse(r)?)?;
            let out: APolynomial = fresco.act(&parse(expr)?, &rep)?;
            if pretty {
                out.to_element().to_string()
            } else {
                to_json(&apoly_to_json(&out))
            }
        }
        Command::XiAct { input, op } => {
            let xi = read_json::<XiJson>(input)?.to_xi()?;
            let out = match op {
                XiOp::A => xi_act_a(&xi),
                XiOp::B => xi_act_b(&xi),
            };
            if pretty {
                pretty_xi(&out)
            } else {
                to_json(&XiJson::from_xi(&out))
            }
        }
        Command::Selftest => {
            let results = selftest::run_all();
            let table: Vec<String> = results.iter().map(|r| r.to_string()).collect();
            let table = table.join("\n");
            if results.iter().all(|r| r.passed) {
                table
            } else {
                return Err(CliError::Internal(table));
            }
        }
    })
}
