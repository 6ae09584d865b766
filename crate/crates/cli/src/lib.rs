//! Command-line front end: catalog forms, MLDE solutions, characters, the
//! full classification report, residual S-matrices and reproduced tables.

pub mod render;
pub mod report;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand};
use mlde_core::forms::FormName;
use mlde_core::hypergeom::character_series;
use mlde_core::mlde::{indicial_roots, mlde_residual, MldeOrder2};
use mlde_core::series::{parse_rational, Rational, DEFAULT_TERMS};
use mlde_core::smatrix::{analyze_residual, ResidualCharge, DEFAULT_SMATRIX_TERMS, MIN_EVAL_TERMS};
use num_traits::Zero;
use serde_json::{json, Value};

use render::Format;

/// Below this the integrality and positivity filters cannot see the
/// eliminating coefficients.
pub const MIN_CLASSIFY_TERMS: usize = 10;

#[derive(Debug, Parser)]
#[command(
    name = "mlde",
    version,
    about = "Order-2 MLDE characters and two-character classification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value = "md", global = true)]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// q-expansion of a catalog form (E2, E4, E6, Delta, J, K, Eta, Delta3, I3).
    Forms {
        name: FormName,
        #[arg(long, default_value_t = DEFAULT_TERMS)]
        terms: usize,
    },
    /// Both Frobenius solutions of the MLDE with parameter k1.
    Mlde {
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        k1: Rational,
        #[arg(long, default_value_t = DEFAULT_TERMS)]
        terms: usize,
    },
    /// Hypergeometric character attached to indicial root a.
    Character {
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, default_value_t = DEFAULT_TERMS)]
        terms: usize,
    },
    /// Full classification report.
    Classify {
        #[arg(long, default_value_t = DEFAULT_TERMS)]
        terms: usize,
    },
    /// Numerical S-matrix for a residual central charge.
    Smatrix {
        #[arg(long, value_parser = charge_arg, allow_hyphen_values = true)]
        c: ResidualCharge,
        #[arg(long, default_value_t = mlde_core::smatrix::DEFAULT_TOLERANCE)]
        tolerance: f64,
        #[arg(long, default_value_t = DEFAULT_SMATRIX_TERMS)]
        terms: usize,
    },
    /// One reproduced table with errata annotations.
    Tables {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
        which: u8,
        #[arg(long, default_value_t = DEFAULT_TERMS)]
        terms: usize,
    },
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).ok_or_else(|| format!("malformed rational {s:?}; expected P/Q"))
}

fn charge_arg(s: &str) -> Result<ResidualCharge, String> {
    let c: i64 = s
        .trim()
        .parse()
        .map_err(|_| format!("malformed central charge {s:?}"))?;
    ResidualCharge::try_from(c).map_err(|e| e.to_string())
}

/// Rendered output plus whether every internal oracle agreed.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub text: String,
    pub oracles_pass: bool,
}

fn require_terms(terms: usize, min: usize) -> Result<()> {
    if terms < min {
        bail!("--terms {terms} is below the minimum {min}");
    }
    Ok(())
}

fn emit_value(
    format: Format,
    value: Value,
    csv: impl FnOnce() -> Result<String>,
    md: impl FnOnce() -> String,
) -> Result<String> {
    Ok(match format {
        Format::Json => render::to_json_string(&value),
        Format::Csv => csv()?,
        Format::Md => md(),
    })
}

pub fn run(cli: &Cli) -> Result<Output> {
    let format = cli.format;
    match &cli.command {
        Command::Forms { name, terms } => {
            require_terms(*terms, 1)?;
            let entry = name.entry();
            let f = name.series(*terms);
            let value = json!({
                "name": name.to_string(),
                "weight": render::rational(&entry.weight),
                "level": entry.level,
                "series": render::series_json(&f),
            });
            let text = emit_value(
                format,
                value,
                || render::series_csv(&f),
                || {
                    format!(
                        "{name} (weight {}, level {})\n{}",
                        entry.weight,
                        entry.level,
                        render::series_md(&name.to_string(), &f)
                    )
                },
            )?;
            Ok(Output {
                text,
                oracles_pass: true,
            })
        }
        Command::Mlde { k1, terms } => {
            require_terms(*terms, 1)?;
            let roots = indicial_roots(k1)?;
            let eq = MldeOrder2::new(k1.clone(), *terms);
            let mut solutions = Vec::new();
            let mut ok = true;
            for root in [&roots.roots.0, &roots.roots.1] {
                match eq.solve(root) {
                    Ok(f) => {
                        let exact = mlde_residual(&f, k1).coeffs().iter().all(Zero::is_zero);
                        ok &= exact;
                        solutions.push((root.clone(), Ok(f), exact));
                    }
                    Err(e) => solutions.push((root.clone(), Err(e.to_string()), true)),
                }
            }
            let value = json!({
                "k1": render::rational(k1),
                "roots": [render::rational(&roots.roots.0), render::rational(&roots.roots.1)],
                "solutions": solutions.iter().map(|(r, f, exact)| match f {
                    Ok(f) => json!({ "root": render::rational(r), "series": render::series_json(f), "residual_zero": exact }),
                    Err(e) => json!({ "root": render::rational(r), "error": e }),
                }).collect::<Vec<_>>(),
            });
            let text = emit_value(
                format,
                value,
                || {
                    let rows = solutions.iter().flat_map(|(r, f, _)| match f {
                        Ok(f) => f
                            .coeffs()
                            .iter()
                            .enumerate()
                            .map(|(n, c)| vec![r.to_string(), n.to_string(), c.to_string()])
                            .collect::<Vec<_>>(),
                        Err(_) => Vec::new(),
                    });
                    render::csv_string(&["root", "n", "coefficient"], rows)
                },
                || {
                    let mut out = format!(
                        "k1 = {k1}, indicial roots {} and {}\n",
                        roots.roots.0, roots.roots.1
                    );
                    for (r, f, _) in &solutions {
                        match f {
                            Ok(f) => out.push_str(&render::series_md(&format!("f[{r}]"), f)),
                            Err(e) => out.push_str(&format!("f[{r}]: {e}\n")),
                        }
                    }
                    out
                },
            )?;
            Ok(Output {
                text,
                oracles_pass: ok,
            })
        }
        Command::Character { a, terms } => {
            require_terms(*terms, 1)?;
            let f = character_series(a, *terms)?;
            let value = json!({ "a": render::rational(a), "series": render::series_json(&f) });
            let text = emit_value(
                format,
                value,
                || render::series_csv(&f),
                || render::series_md("f", &f),
            )?;
            Ok(Output {
                text,
                oracles_pass: true,
            })
        }
        Command::Classify { terms } => {
            require_terms(*terms, MIN_CLASSIFY_TERMS)?;
            let report = report::build_report(*terms)?;
            let text = emit_value(
                format,
                render::report_json(&report),
                || render::report_csv(&report),
                || render::report_md(&report),
            )?;
            Ok(Output {
                text,
                oracles_pass: report.oracles_pass(),
            })
        }
        Command::Smatrix {
            c,
            tolerance,
            terms,
        } => {
            require_terms(*terms, MIN_EVAL_TERMS)?;
            if !tolerance.is_finite() || *tolerance <= 0.0 {
                bail!("--tolerance must be positive and finite");
            }
            let analysis = analyze_residual(*c, *terms, *tolerance)?;
            let tol = *tolerance;
            let ok = analysis.s_matrix.fit_residual < report::FIT_RESIDUAL_MAX
                && analysis.s_squared_deviation < tol
                && analysis.resample_deviation < 10.0 * tol
                && analysis.inverse_deviation < tol
                && analysis.t_deviation < tol
                && analysis.closed_forms.is_ok();
            let text = emit_value(
                format,
                render::residual_json(&analysis),
                || {
                    let m = &analysis.s_matrix.entries;
                    render::csv_string(
                        &["row", "col", "re", "im"],
                        (0..2).flat_map(|i| {
                            (0..2).map(move |j| {
                                vec![
                                    i.to_string(),
                                    j.to_string(),
                                    m[i][j].re.to_string(),
                                    m[i][j].im.to_string(),
                                ]
                            })
                        }),
                    )
                },
                || render::residual_md(&analysis),
            )?;
            Ok(Output {
                text,
                oracles_pass: ok,
            })
        }
        Command::Tables { which, terms } => {
            require_terms(*terms, MIN_CLASSIFY_TERMS)?;
            let table = report::build_table(*which, *terms)?;
            let text = emit_value(
                format,
                render::table_json(&table),
                || render::table_csv(&table),
                || render::table_md(&table),
            )?;
            Ok(Output {
                text,
                oracles_pass: true,
            })
        }
    }
}
