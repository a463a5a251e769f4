//! Text, JSON and CSV renderings of command results.

use std::io::{self, Write};

use darboux_core::numeric::SimConfig;
use darboux_core::structure::{Certification, FactorExponents};
use darboux_core::{LVParams, LinForm, ParamClass, Poly, SearchResult};
use serde::Serialize;

use crate::Format;

fn json(out: &mut dyn Write, value: &impl Serialize) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

pub fn search(format: Format, p: &LVParams, results: &[SearchResult], out: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Json => json(out, &results),
        Format::Csv => {
            writeln!(out, "degree,alpha,beta,gamma,index,poly")?;
            for r in results {
                for (i, f) in r.basis.iter().enumerate() {
                    let c = &r.cofactor;
                    writeln!(out, "{},{},{},{},{},{}", r.degree, c.alpha, c.beta, c.gamma, i, f)?;
                }
            }
            Ok(())
        }
        Format::Text => {
            writeln!(out, "{p}")?;
            for r in results {
                writeln!(out, "degree {}  cofactor {}  dim {}", r.degree, r.cofactor, r.basis.len())?;
                for f in &r.basis {
                    writeln!(out, "  {f}")?;
                }
            }
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct Uncertified<'a> {
    cannot_certify: &'a darboux_core::structure::Uncertified,
}

fn exponent_fields(e: &FactorExponents) -> [(&'static str, u32); 6] {
    [("i", e.i), ("j", e.j), ("k", e.k), ("l12", e.l12), ("l23", e.l23), ("l13", e.l13)]
}

pub fn certification(format: Format, outcome: &Certification, out: &mut dyn Write) -> io::Result<()> {
    let (status, exps, remainder, cofactor, remainder_cofactor): (_, _, &Poly, &LinForm, Option<&LinForm>) = match outcome {
        Certification::Certified(c) => ("certified", &c.exponents, &c.remainder, &c.reconstructed_cofactor, None),
        Certification::CannotCertify(u) => {
            ("cannot_certify", &u.exponents, &u.remainder, &u.cofactor, Some(&u.remainder_cofactor))
        }
    };
    match format {
        Format::Json => match outcome {
            Certification::Certified(c) => json(out, c),
            Certification::CannotCertify(u) => json(out, &Uncertified { cannot_certify: u }),
        },
        Format::Csv => {
            writeln!(out, "status,i,j,k,l12,l23,l13,remainder,cofactor,remainder_cofactor")?;
            let e: Vec<String> = exponent_fields(exps).iter().map(|(_, v)| v.to_string()).collect();
            let rc = remainder_cofactor.map_or_else(|| "0".to_string(), |c| c.to_string());
            writeln!(out, "{status},{},{remainder},{cofactor},{rc}", e.join(","))
        }
        Format::Text => {
            writeln!(out, "{}", status.replace('_', " "))?;
            let e: Vec<String> = exponent_fields(exps).iter().map(|(k, v)| format!("{k} = {v}")).collect();
            writeln!(out, "{}", e.join(", "))?;
            writeln!(out, "remainder: {remainder}")?;
            if let Some(rc) = remainder_cofactor {
                writeln!(out, "remainder cofactor: {rc}")?;
            }
            writeln!(out, "cofactor: {cofactor}")
        }
    }
}

/// Exponents are decimal integer strings; `[a,b,c]` is valid JSON as is.
pub fn casimir(format: Format, exps: Option<&[String; 3]>, out: &mut dyn Write) -> io::Result<()> {
    match (format, exps) {
        (Format::Csv, Some(e)) => writeln!(out, "a,b,c\n{}", e.join(",")),
        (Format::Csv, None) => writeln!(out, "a,b,c"),
        (Format::Json, None) => writeln!(out, "null"),
        (Format::Text, None) => writeln!(out, "none (r = s = t = 0)"),
        (_, Some(e)) => writeln!(out, "[{}]", e.join(",")),
    }
}

pub fn conditions(format: Format, class: &ParamClass, out: &mut dyn Write) -> io::Result<()> {
    if format == Format::Json {
        return json(out, class);
    }
    let value = serde_json::to_value(class).map_err(io::Error::other)?;
    let serde_json::Value::Object(fields) = value else {
        unreachable!("ParamClass serializes to an object")
    };
    if format == Format::Csv {
        writeln!(out, "key,value")?;
    }
    for (key, v) in fields {
        let v = match v {
            serde_json::Value::String(s) => s,
            serde_json::Value::Null => "undefined".to_string(),
            other => other.to_string(),
        };
        match format {
            Format::Csv => writeln!(out, "{key},{v}")?,
            _ => writeln!(out, "{key}: {v}")?,
        }
    }
    Ok(())
}

#[derive(Serialize)]
pub struct PoissonReport {
    pub hamiltonian_consistent: bool,
    pub jacobi_identity: bool,
    pub casimir: Option<Vec<i64>>,
    pub casimir_conditions: bool,
    pub casimir_commutes: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bracket: Option<Poly>,
}

pub fn poisson(format: Format, report: &PoissonReport, out: &mut dyn Write) -> io::Result<()> {
    if format == Format::Json {
        return json(out, report);
    }
    let casimir = report
        .casimir
        .as_ref()
        .map_or_else(|| "none".to_string(), |e| format!("[{}]", e.iter().map(i64::to_string).collect::<Vec<_>>().join(",")));
    let mut rows = vec![
        ("hamiltonian_consistent", report.hamiltonian_consistent.to_string()),
        ("jacobi_identity", report.jacobi_identity.to_string()),
        ("casimir", casimir),
        ("casimir_conditions", report.casimir_conditions.to_string()),
        ("casimir_commutes", report.casimir_commutes.to_string()),
    ];
    if let Some(b) = &report.bracket {
        rows.push(("bracket", b.to_string()));
    }
    if format == Format::Csv {
        writeln!(out, "key,value")?;
    }
    for (k, v) in rows {
        match format {
            Format::Csv => writeln!(out, "{k},\"{v}\"")?,
            _ => writeln!(out, "{k}: {v}")?,
        }
    }
    Ok(())
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRow {
    pub check: String,
    pub kind: &'static str,
    pub value: f64,
}

impl CheckRow {
    pub fn drift(check: &str, value: f64) -> Self {
        CheckRow { check: check.to_string(), kind: "max_rel_drift", value }
    }

    pub fn residual(check: &str, value: f64) -> Self {
        CheckRow { check: check.to_string(), kind: "residual", value }
    }
}

#[derive(Serialize)]
pub struct SimulationReport {
    pub params: LVParams,
    pub config: SimConfig,
    pub samples: usize,
    pub final_state: [f64; 3],
    pub checks: Vec<CheckRow>,
}

pub fn simulation(format: Format, report: &SimulationReport, out: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Json => json(out, report),
        Format::Csv => {
            writeln!(out, "check,kind,value")?;
            for row in &report.checks {
                writeln!(out, "\"{}\",{},{:e}", row.check, row.kind, row.value)?;
            }
            Ok(())
        }
        Format::Text => {
            let [a, b, c] = report.final_state;
            writeln!(out, "{}", report.params)?;
            writeln!(out, "samples {}  final state ({a}, {b}, {c})", report.samples)?;
            let width = report.checks.iter().map(|r| r.check.len()).max().unwrap_or(0);
            for row in &report.checks {
                writeln!(out, "{:width$}  {:13}  {:.3e}", row.check, row.kind, row.value)?;
            }
            Ok(())
        }
    }
}
