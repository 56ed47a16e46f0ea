//! The `compute`, `oracle`, and `pell` subcommands.

use std::collections::HashMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use k3aut::aut::{
    aut_group_with, named_alphabet_with_inverses, named_word_ball, GlueAssumption,
    DEFAULT_CERTIFICATE_DEPTH, WORD_CLOSURE_LENGTH,
};
use k3aut::lattice::{
    brute_force_isometries, l_family_generators, m_family_generators, FormClass, GramForm, Mat2,
};
use k3aut::pell::{fundamental_unit, solution_stream, solve, PellOutcome, PellRhs};
use k3aut::quad::Radicand;
use k3aut::Big;

use crate::report::{self, matrix_dto, CertificateDto, ReportDocument};
use crate::{CliError, ComputeArgs, Family, Format, FormArgs, OracleArgs, PellArgs, RunOutput};

fn big(n: i64) -> Big {
    Big::from(n)
}

pub fn to_json(value: &impl Serialize) -> Result<String, CliError> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Failure(format!("cannot serialize report: {e}")))?;
    text.push('\n');
    Ok(text)
}

/// Resolve `--family L|M --d <d>` or `--gram g00,g01,g11` into a form.
pub fn resolve_form(args: &FormArgs) -> Result<GramForm<Big>, CliError> {
    match (&args.family, args.d, &args.gram) {
        (Some(family), Some(d), None) => {
            if d < 3 || d % 2 == 0 {
                return Err(CliError::Invalid(format!(
                    "family parameter d = {d} must be an odd integer ≥ 3"
                )));
            }
            match family {
                Family::L => GramForm::family_l(&big(d)),
                Family::M => GramForm::family_m(&big(d)),
            }
            .map_err(crate::form_error)
        }
        (None, None, Some(gram)) => {
            let parts: Vec<&str> = gram.split(',').map(str::trim).collect();
            if parts.len() != 3 {
                return Err(CliError::Invalid(format!(
                    "--gram expects three comma-separated integers g00,g01,g11, got {gram:?}"
                )));
            }
            let mut entries = Vec::with_capacity(3);
            for part in &parts {
                let value = part.parse::<Big>().map_err(|_| {
                    CliError::Invalid(format!("--gram entry {part:?} is not an integer"))
                })?;
                entries.push(value);
            }
            let g11 = entries.pop().expect("three entries");
            let g01 = entries.pop().expect("three entries");
            let g00 = entries.pop().expect("three entries");
            GramForm::new(g00, g01, g11).map_err(crate::form_error)
        }
        (Some(_), None, None) | (None, Some(_), None) => Err(CliError::Invalid(
            "--family and --d must be given together".to_string(),
        )),
        _ => Err(CliError::Invalid(
            "specify a lattice: either --family L|M with --d, or --gram g00,g01,g11".to_string(),
        )),
    }
}

/// Certificate depth: `--depth` wins over `K3AUT_DEPTH`, which wins over the
/// built-in default.
pub fn certificate_depth(flag: Option<u32>) -> Result<u32, CliError> {
    if let Some(depth) = flag {
        return Ok(depth);
    }
    match std::env::var("K3AUT_DEPTH") {
        Ok(raw) => raw.trim().parse::<u32>().map_err(|_| {
            CliError::Invalid(format!(
                "K3AUT_DEPTH = {raw:?} is not a non-negative integer"
            ))
        }),
        Err(_) => Ok(DEFAULT_CERTIFICATE_DEPTH),
    }
}

pub fn compute(args: &ComputeArgs, format: Format) -> Result<RunOutput, CliError> {
    if args.root_bound < 0 {
        return Err(CliError::Invalid(format!(
            "--root-bound {} must be ≥ 0",
            args.root_bound
        )));
    }
    let form = resolve_form(&args.form)?;
    form.require_hyperbolic().map_err(crate::form_error)?;
    let depth = certificate_depth(args.depth)?;

    let started = Instant::now();
    let report = aut_group_with(&form, GlueAssumption::Generic, depth, args.root_bound)
        .map_err(crate::form_error)?;
    let timing_ms = started.elapsed().as_millis() as u64;

    let text = match format {
        Format::Json => to_json(&ReportDocument::build(&report, depth, args.root_bound, timing_ms)?)?,
        Format::Text => report::render_text(&report, depth, args.root_bound, timing_ms),
    };
    Ok(RunOutput { text, exit: 0 })
}

#[derive(Serialize, Deserialize)]
struct OracleDocument {
    schema_version: String,
    gram: [String; 3],
    bound: i64,
    count: usize,
    /// Brute-force scan in canonical order; `word` is a shortest expression
    /// in the documented generators when the form belongs to a family.
    isometries: Vec<OracleRow>,
}

#[derive(Serialize, Deserialize)]
struct OracleRow {
    matrix: [i64; 4],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    word: Option<String>,
}

pub fn oracle(args: &OracleArgs, format: Format) -> Result<RunOutput, CliError> {
    if args.bound < 0 {
        return Err(CliError::Invalid(format!(
            "--bound {} must be ≥ 0",
            args.bound
        )));
    }
    let form = resolve_form(&args.form)?;
    let scan = brute_force_isometries(&form, args.bound);

    let letters: Option<Vec<(String, Mat2<Big>)>> = match form.classify() {
        FormClass::FamilyL { d } => Some(
            l_family_generators(&d)
                .into_iter()
                .map(|g| (g.name.to_string(), g.matrix))
                .collect(),
        ),
        FormClass::FamilyM { d } => Some(
            m_family_generators(&d)
                .into_iter()
                .map(|g| (g.name.to_string(), g.matrix))
                .collect(),
        ),
        FormClass::Generic => None,
    };
    let words: HashMap<[Big; 4], String> = match &letters {
        Some(letters) => {
            let alphabet = named_alphabet_with_inverses(letters);
            named_word_ball(&alphabet, WORD_CLOSURE_LENGTH)
                .into_iter()
                .map(|(word, m, _)| (m.row_major(), word))
                .collect()
        }
        None => HashMap::new(),
    };

    let mut rows = Vec::with_capacity(scan.len());
    for m in &scan {
        rows.push(OracleRow {
            matrix: matrix_dto(m)?,
            word: words.get(&m.row_major()).cloned(),
        });
    }

    let doc = OracleDocument {
        schema_version: "k3aut-oracle/1".to_string(),
        gram: [
            form.g00().to_string(),
            form.g01().to_string(),
            form.g11().to_string(),
        ],
        bound: args.bound,
        count: rows.len(),
        isometries: rows,
    };

    let text = match format {
        Format::Json => to_json(&doc)?,
        Format::Text => {
            let mut out = format!(
                "{} isometries of {} with entries ≤ {}\n",
                doc.count, form, doc.bound
            );
            for (m, row) in scan.iter().zip(&doc.isometries) {
                match (&letters, &row.word) {
                    (Some(_), Some(word)) => out.push_str(&format!("  {m}  =  {word}\n")),
                    (Some(_), None) => out.push_str(&format!(
                        "  {m}  (no word of length ≤ {WORD_CLOSURE_LENGTH} in the documented generators)\n"
                    )),
                    (None, _) => out.push_str(&format!("  {m}\n")),
                }
            }
            if letters.is_none() {
                out.push_str("(generic form: no documented generator set to match against)\n");
            }
            out
        }
    };
    Ok(RunOutput { text, exit: 0 })
}

#[derive(Serialize, Deserialize)]
struct PellDocument {
    schema_version: String,
    #[serde(rename = "D")]
    d: i64,
    #[serde(rename = "N")]
    n: i64,
    /// Fundamental unit of the order ℤ[(1+√D)/2] or ℤ[√D].
    fundamental_unit: UnitDto,
    solvable: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    fundamental_solution: Option<[String; 2]>,
    /// First `count` solutions `(x, y)` with `x, y > 0`, as decimal strings.
    solutions: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    certificate: Option<CertificateDto>,
}

#[derive(Serialize, Deserialize)]
struct UnitDto {
    text: String,
    norm: i8,
}

pub fn pell(args: &PellArgs, format: Format) -> Result<RunOutput, CliError> {
    let rad = Radicand::new(big(args.d))
        .map_err(|_| CliError::Invalid(format!("--D {} must be a positive non-square", args.d)))?;
    let rhs = PellRhs::from_value(&big(args.n)).ok_or_else(|| {
        CliError::Invalid(format!("--N must be one of 1, -1, 4, -4 (got {})", args.n))
    })?;

    let unit = fundamental_unit(&rad);
    let outcome = solve(&rad, rhs);
    let (fundamental_solution, solutions, certificate) = match &outcome {
        PellOutcome::Solvable { x, y } => {
            let listed: Vec<[String; 2]> = solution_stream(&rad, rhs)
                .expect("solvable equations have a stream")
                .take(args.count)
                .map(|(x, y)| [x.to_string(), y.to_string()])
                .collect();
            (Some([x.to_string(), y.to_string()]), listed, None)
        }
        PellOutcome::Unsolvable(cert) => (None, Vec::new(), Some(report::certificate_dto(cert)?)),
    };

    let doc = PellDocument {
        schema_version: "k3aut-pell/1".to_string(),
        d: args.d,
        n: args.n,
        fundamental_unit: UnitDto {
            text: unit.unit().to_string(),
            norm: unit.norm_sign(),
        },
        solvable: outcome.is_solvable(),
        fundamental_solution,
        solutions,
        certificate,
    };

    let text = match format {
        Format::Json => to_json(&doc)?,
        Format::Text => {
            let mut out = format!("equation: x² − {}·y² = {}\n", args.d, args.n);
            out.push_str(&format!(
                "fundamental unit: {}   (norm {})\n",
                doc.fundamental_unit.text,
                if doc.fundamental_unit.norm > 0 { "+1" } else { "-1" }
            ));
            match &outcome {
                PellOutcome::Solvable { x, y } => {
                    out.push_str(&format!("solvable: yes, least positive solution ({x}, {y})\n"));
                    if !doc.solutions.is_empty() {
                        out.push_str("solutions:\n");
                        for [sx, sy] in &doc.solutions {
                            out.push_str(&format!(
                                "  ({sx}, {sy})   check: {sx}² − {}·{sy}² = {}\n",
                                args.d, args.n
                            ));
                        }
                    }
                }
                PellOutcome::Unsolvable(cert) => {
                    out.push_str("solvable: no\n");
                    let detail = match cert {
                        k3aut::pell::Certificate::Residue { modulus } => format!(
                            "no solutions modulo {modulus} (all residue pairs checked)"
                        ),
                        k3aut::pell::Certificate::UnitNorm { fundamental } => format!(
                            "the fundamental unit {fundamental} has norm +1, so every unit has norm +1 and the negative equation is unsolvable"
                        ),
                    };
                    out.push_str(&format!("certificate: {detail}\n"));
                }
            }
            out
        }
    };
    Ok(RunOutput { text, exit: 0 })
}
