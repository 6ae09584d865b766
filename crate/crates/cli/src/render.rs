//! JSON, CSV and Markdown emitters.
//!
//! JSON goes through `serde_json::Value`, whose map is ordered by key, so
//! emission is canonical and re-emitting parsed output is byte-identical.
//! Rationals are always strings.

use std::fmt::Write as _;

use anyhow::Result;
use mlde_core::classifier::ClassifiedCandidate;
use mlde_core::series::{QSeries, Rational};
use mlde_core::smatrix::{Matrix2, ResidualAnalysis};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::report::{
    format_matrix, printed_deviation, verdict_detail, Erratum, OracleCheck, Report, Table,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
}

pub fn to_json_string(value: &Value) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("Value always serializes");
    out.push('\n');
    out
}

pub fn rational(x: &Rational) -> Value {
    Value::String(x.to_string())
}

pub fn series_json(f: &QSeries) -> Value {
    json!({
        "exponent": rational(f.exponent()),
        "coefficients": f.coeffs().iter().map(rational).collect::<Vec<_>>(),
    })
}

fn complex_json(z: Complex64) -> Value {
    json!({ "re": z.re, "im": z.im })
}

fn matrix_json(m: &Matrix2) -> Value {
    Value::Array(
        m.iter()
            .map(|row| Value::Array(row.iter().map(|&z| complex_json(z)).collect()))
            .collect(),
    )
}

pub fn erratum_json(e: &Erratum) -> Value {
    json!({ "location": e.location, "printed": e.printed, "computed": e.computed })
}

pub fn table_json(t: &Table) -> Value {
    json!({
        "number": t.number,
        "title": t.title,
        "columns": t.columns,
        "rows": t.rows,
        "errata": t.errata.iter().map(erratum_json).collect::<Vec<_>>(),
    })
}

fn candidate_json(cc: &ClassifiedCandidate) -> Value {
    let x = &cc.candidate;
    json!({
        "s": x.s,
        "m": x.m,
        "c": rational(&x.c),
        "a": rational(&x.a),
        "b": rational(&x.b),
        "h": rational(&x.h),
        "c_tilde": rational(&x.c_tilde),
        "k1": rational(&x.k1),
        "verdict": cc.verdict.tag(),
        "detail": verdict_detail(cc),
    })
}

pub fn residual_json(r: &ResidualAnalysis) -> Value {
    let m = &r.s_matrix;
    let closed = match &r.closed_forms {
        Ok(forms) => json!({
            "f1": forms.formulas.0,
            "f2": forms.formulas.1,
            "errata": forms.errata.iter().map(|e| json!({
                "component": e.component,
                "printed": e.printed,
                "corrected": e.corrected,
            })).collect::<Vec<_>>(),
        }),
        Err(e) => json!({ "error": e.to_string() }),
    };
    json!({
        "c": r.c.value(),
        "a": rational(&r.a),
        "b": rational(&r.b),
        "entries": matrix_json(&m.entries),
        "fit_residual": m.fit_residual,
        "condition": m.condition,
        "witness_ratio": complex_json(m.witness_ratio),
        "symmetrizable": m.symmetrizable,
        "margin_holds": r.margin_holds,
        "s_squared_deviation": r.s_squared_deviation,
        "resample_deviation": r.resample_deviation,
        "inverse_deviation": r.inverse_deviation,
        "t_deviation": r.t_deviation,
        "printed_deviation": printed_deviation(r),
        "closed_forms": closed,
    })
}

fn oracle_json(o: &OracleCheck) -> Value {
    json!({ "name": o.name, "passed": o.passed, "detail": o.detail })
}

pub fn report_json(r: &Report) -> Value {
    let buckets: serde_json::Map<String, Value> = r
        .summary
        .buckets
        .iter()
        .map(|(k, cs)| {
            (
                k.to_string(),
                Value::Array(cs.iter().map(rational).collect()),
            )
        })
        .collect();
    let tables: serde_json::Map<String, Value> = r
        .tables
        .iter()
        .map(|t| (format!("table{}", t.number), table_json(t)))
        .collect();
    json!({
        "terms": r.terms,
        "tables": tables,
        "candidates": r.candidates.iter().map(candidate_json).collect::<Vec<_>>(),
        "verdict_summary": {
            "identified": r.summary.identified.iter().map(|v| v.name()).collect::<Vec<_>>(),
            "two_simple_modules": r.summary.two_simple_modules.iter().map(|v| v.name()).collect::<Vec<_>>(),
            "buckets": buckets,
            "survivors": r.summary.survivors,
            "late_eliminations": r.summary.late_eliminations,
        },
        "residual": r.residual.iter().map(residual_json).collect::<Vec<_>>(),
        "errata": r.errata.iter().map(erratum_json).collect::<Vec<_>>(),
        "notes": r.notes,
        "oracles": r.oracles.iter().map(oracle_json).collect::<Vec<_>>(),
        "oracles_pass": r.oracles_pass(),
    })
}

pub fn csv_string(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

pub fn series_csv(f: &QSeries) -> Result<String> {
    csv_string(
        &["power", "coefficient"],
        f.coeffs().iter().enumerate().map(|(n, c)| {
            vec![
                (f.exponent() + Rational::from_integer(n.into())).to_string(),
                c.to_string(),
            ]
        }),
    )
}

/// One row per candidate, in census order.
pub fn report_csv(r: &Report) -> Result<String> {
    csv_string(
        &["s", "m", "c", "a", "b", "h", "c_tilde", "verdict", "detail"],
        r.candidates.iter().map(|cc| {
            let x = &cc.candidate;
            vec![
                x.s.to_string(),
                x.m.to_string(),
                x.c.to_string(),
                x.a.to_string(),
                x.b.to_string(),
                x.h.to_string(),
                x.c_tilde.to_string(),
                cc.verdict.tag().to_string(),
                verdict_detail(cc),
            ]
        }),
    )
}

pub fn table_csv(t: &Table) -> Result<String> {
    csv_string(&t.columns, t.rows.iter().cloned())
}

pub fn coefficient_line(f: &QSeries) -> String {
    f.coeffs()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn series_md(label: &str, f: &QSeries) -> String {
    format!("{label} = {f}\ncoefficients: {}\n", coefficient_line(f))
}

fn md_table(columns: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "| {} |", columns.join(" | "));
    let _ = writeln!(out, "|{}", "---|".repeat(columns.len()));
    for row in rows {
        let _ = writeln!(out, "| {} |", row.join(" | "));
    }
    out
}

fn errata_md(errata: &[Erratum]) -> String {
    errata
        .iter()
        .map(|e| {
            format!(
                "- erratum: {}: printed {}, computed {}\n",
                e.location, e.printed, e.computed
            )
        })
        .collect()
}

pub fn table_md(t: &Table) -> String {
    let mut out = format!("## Table {}: {}\n\n", t.number, t.title);
    out.push_str(&md_table(&t.columns, &t.rows));
    if !t.errata.is_empty() {
        out.push('\n');
        out.push_str(&errata_md(&t.errata));
    }
    out
}

pub fn residual_md(r: &ResidualAnalysis) -> String {
    let m = &r.s_matrix;
    let mut out = String::new();
    let _ = writeln!(out, "### c = {} (a = {}, b = {})\n", r.c, r.a, r.b);
    let _ = writeln!(out, "- S = {}", format_matrix(&m.entries));
    let _ = writeln!(
        out,
        "- S12/S21 = {:.9}, symmetrizable: {}, margin holds: {}",
        m.witness_ratio.re, m.symmetrizable, r.margin_holds
    );
    let _ = writeln!(
        out,
        "- held-out fit residual {:.2e}, condition {:.2e}",
        m.fit_residual, m.condition
    );
    let _ = writeln!(
        out,
        "- |S^2 - I| {:.2e}, resample {:.2e}, inverse {:.2e}, |T - T(a,b)| {:.2e}",
        r.s_squared_deviation, r.resample_deviation, r.inverse_deviation, r.t_deviation
    );
    let _ = writeln!(
        out,
        "- deviation from printed matrix {:.2e}",
        printed_deviation(r)
    );
    match &r.closed_forms {
        Ok(forms) => {
            let _ = writeln!(
                out,
                "- closed forms: f1 = {}, f2 = {}",
                forms.formulas.0, forms.formulas.1
            );
        }
        Err(e) => {
            let _ = writeln!(out, "- closed forms: {e}");
        }
    }
    out
}

pub fn report_md(r: &Report) -> String {
    let mut out = format!("# Two-character classification (N = {})\n\n", r.terms);
    let s = &r.summary;
    let count = |tag: &str| s.buckets.get(tag).map_or(0, Vec::len);
    out.push_str("## Verdict summary\n\n");
    let _ = writeln!(
        out,
        "{} survivors: {} Identified + {} ResidualSMatrix + {} Eliminated\n",
        s.survivors,
        count("Identified"),
        count("ResidualSMatrix"),
        s.late_eliminations
    );
    let names = |v: &[mlde_core::classifier::KnownVoa]| {
        v.iter().map(|x| x.name()).collect::<Vec<_>>().join(", ")
    };
    let _ = writeln!(out, "- identified: {}", names(&s.identified));
    let _ = writeln!(
        out,
        "- two simple modules: {}",
        names(&s.two_simple_modules)
    );
    for (tag, cs) in &s.buckets {
        let list: Vec<String> = cs.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "- {tag} ({}): {}", cs.len(), list.join(", "));
    }
    out.push('\n');
    for t in &r.tables {
        out.push_str(&table_md(t));
        out.push('\n');
    }
    out.push_str("## Candidates\n\n");
    let rows: Vec<Vec<String>> = r
        .candidates
        .iter()
        .map(|cc| {
            let x = &cc.candidate;
            vec![
                x.s.to_string(),
                x.m.to_string(),
                x.c.to_string(),
                x.a.to_string(),
                x.b.to_string(),
                x.c_tilde.to_string(),
                cc.verdict.tag().to_string(),
                verdict_detail(cc),
            ]
        })
        .collect();
    out.push_str(&md_table(
        &["s", "m", "c", "a", "b", "c~", "verdict", "detail"],
        &rows,
    ));
    out.push_str("\n## Residual S-matrices\n\n");
    for res in &r.residual {
        out.push_str(&residual_md(res));
        out.push('\n');
    }
    out.push_str("## Errata\n\n");
    out.push_str(&errata_md(&r.errata));
    out.push_str("\n## Notes\n\n");
    for n in &r.notes {
        let _ = writeln!(out, "- {n}");
    }
    out.push_str("\n## Oracle checks\n\n");
    for o in &r.oracles {
        let _ = writeln!(
            out,
            "- {} {}: {}",
            if o.passed { "PASS" } else { "FAIL" },
            o.name,
            o.detail
        );
    }
    out
}
