//! Command-line grammar.

use clap::{Args, Parser, Subcommand, ValueEnum};
use darboux_core::{parse_rational, LVParams, LinForm, Poly, Rational};

#[derive(Parser, Debug)]
#[command(name = "darboux", version, about = "Darboux polynomials of the 3D Lotka-Volterra system")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Interaction parameters, each an integer or `p/q`.
#[derive(Args, Debug, Clone)]
pub struct ParamArgs {
    #[arg(long, allow_hyphen_values = true, value_parser = rational_arg)]
    pub r: Rational,
    #[arg(long, allow_hyphen_values = true, value_parser = rational_arg)]
    pub s: Rational,
    #[arg(long, allow_hyphen_values = true, value_parser = rational_arg)]
    pub t: Rational,
}

impl ParamArgs {
    pub fn params(&self) -> LVParams {
        LVParams::new(self.r.clone(), self.s.clone(), self.t.clone())
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List every homogeneous Darboux polynomial up to a degree, grouped by
    /// degree and cofactor.
    Search {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        max_degree: u32,
        /// Worker threads for the candidate solves; 1 runs sequentially.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        jobs: Option<u32>,
    },
    /// Split a Darboux polynomial into special linear factors and a first
    /// integral.
    Certify {
        #[command(flatten)]
        params: ParamArgs,
        /// Text (`x1^2*x2 - 1/2*x3`) or JSON term list.
        #[arg(long, allow_hyphen_values = true, value_parser = poly_arg)]
        poly: Poly,
    },
    /// Exponents of the Casimir `x1^a x2^b x3^c`.
    Casimir {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Parameter flags and the factorisation conditions at one degree.
    Conditions {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        max_degree: u32,
    },
    /// Verify the Poisson structure, optionally bracketing two polynomials.
    PoissonCheck {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, allow_hyphen_values = true, value_parser = poly_arg, requires = "g")]
        f: Option<Poly>,
        #[arg(long, allow_hyphen_values = true, value_parser = poly_arg, requires = "f")]
        g: Option<Poly>,
    },
    /// Integrate with RK4 and report drifts and Darboux residuals.
    Simulate {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_delimiter = ',', num_args = 1, allow_hyphen_values = true, required = true)]
        x0: Vec<f64>,
        #[arg(long)]
        step: f64,
        #[arg(long)]
        t_end: f64,
        /// Comma-separated: `H`, `casimir`, `lax`, `inv:<poly>` or
        /// `f:<poly>:<cofactor>`.
        #[arg(long, value_delimiter = ',', default_value = "H", value_parser = check_arg)]
        check: Vec<Check>,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub enum Check {
    Hamiltonian,
    Casimir,
    KmLax,
    Conserved(Poly),
    Darboux(Poly, LinForm),
}

fn rational_arg(text: &str) -> Result<Rational, String> {
    parse_rational(text).map_err(|e| e.to_string())
}

pub fn parse_poly_input(text: &str) -> Result<Poly, String> {
    if text.trim_start().starts_with('[') {
        serde_json::from_str(text).map_err(|e| format!("invalid JSON polynomial: {e}"))
    } else {
        text.parse().map_err(|e: darboux_core::Error| e.to_string())
    }
}

fn poly_arg(text: &str) -> Result<Poly, String> {
    parse_poly_input(text)
}

fn check_arg(text: &str) -> Result<Check, String> {
    match text {
        "H" => return Ok(Check::Hamiltonian),
        "casimir" => return Ok(Check::Casimir),
        "lax" => return Ok(Check::KmLax),
        _ => {}
    }
    let parts: Vec<&str> = text.split(':').collect();
    match parts.as_slice() {
        ["inv", f] => Ok(Check::Conserved(parse_poly_input(f)?)),
        ["f", f, cofactor] => {
            let f = parse_poly_input(f)?;
            let c = parse_poly_input(cofactor)?;
            let lambda = if c.is_zero() {
                LinForm::zero()
            } else {
                LinForm::from_poly(&c).ok_or_else(|| format!("cofactor {c} is not a linear form"))?
            };
            Ok(Check::Darboux(f, lambda))
        }
        _ => Err(format!("unknown check {text:?}; expected H, casimir, lax, inv:<poly> or f:<poly>:<cofactor>")),
    }
}
