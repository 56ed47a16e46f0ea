//! Serializable report shapes for `compute`, and their text rendering.
//!
//! Conventions, shared by every subcommand that emits JSON:
//! * matrices are row-major arrays of four integers;
//! * quadratic irrationals are `{a, b, D, den}`, denoting
//!   `(a + b·√D)/(2·den)` with `D = 0` for rational values;
//! * potentially large scalars (Gram entries, determinants, Pell solutions)
//!   are decimal strings;
//! * field order is fixed, so output is deterministic byte-for-byte apart
//!   from the `timing_ms` field.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use k3aut::aut::{AutGenerator, AutReport};
use k3aut::cone::{Chamber, Ray, Wall, WallKind};
use k3aut::lattice::{FormClass, LatticeVector, Mat2, RootStatus};
use k3aut::pell::Certificate;
use k3aut::quad::QuadRat;
use k3aut::Big;

use crate::CliError;

pub const REPORT_SCHEMA: &str = "k3aut-report/1";

fn int64(v: &Big, what: &str) -> Result<i64, CliError> {
    v.to_i64()
        .ok_or_else(|| CliError::Failure(format!("{what} exceeds the 64-bit JSON integer range")))
}

#[derive(Serialize, Deserialize, Clone, PartialEq)]
pub struct ReportDocument {
    pub schema_version: String,
    pub input: InputEcho,
    pub class: ClassDto,
    /// Lattice determinant `g00·g11 − g01²`, as a decimal string.
    pub det: String,
    pub signature: [u8; 2],
    pub roots: RootsDto,
    pub chamber: ChamberDto,
    pub ambient: AmbientDto,
    pub infinite: bool,
    pub group: GroupDto,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matched: Option<String>,
    pub discrepancies: Vec<DiscrepancyDto>,
    pub timing_ms: u64,
}

#[derive(Serialize, Deserialize, Clone, PartialEq)]
pub struct InputEcho {
    /// Gram entries `[g00, g01, g11]` as decimal strings.
    pub gram: [String; 3],
    pub depth: u32,
    pub root_bound: i64,
}

#[derive(Serialize, Deserialize, Clone, PartialEq)]
pub struct ClassDto {
    /// `"L"`, `"M"`, or `"generic"`.
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<i64>,
}

#[derive(Serialize, Deserialize, Clone, PartialEq)]
pub struct RootsDto {
    pub classes: Vec<[i64; 2]>,
    /// `"complete"`, `"empty"`, `"infinite"`, or `"bounded-scan"`.
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateDto>,
}

#[derive(Serialize, Deserialize, Clone, PartialEq)]
pub struct CertificateDto {
    /// `"residue"` or `"unit-norm"`.
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<i64>,
    /// Fundamental unit `(a + b·√D)/2` witnessing norm `+1`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fundamental: Option<QuadDto>,
}

/// `(a + b·√D)/(2·den)`; `D = 0` means the value is rational.
#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
pub struct QuadDto {
    pub a: i64,
    pub b: i64,
    #[serde(rename = "D")]
    pub d: i64,
    pub den: i64,
}

#[derive(Serialize, Deserialize, Clone, PartialEq)]
pub struct RayDto {
    pub x: QuadDto,
    pub y: QuadDto,
}

#[derive(Serialize, Deserialize, Clone, PartialEq)]
pub struct WallDto {
    /// `"root_wall"` or `"boundary_ray"`.
    pub kind: String,
    pub ray: RayDto,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root: Option<[i64; 2]>,
}

#[derive(Serialize, Deserialize, Clone, PartialEq)]
pub struct ChamberDto {
    pub interior: [i64; 2],
    pub left: WallDto,
    pub right: WallDto,
}

#[derive(Serialize, Deserialize, Clone, PartialEq)]
pub struct GeneratorDto {
    pub name: String,
    pub matrix: [i64; 4],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<u32>,
    /// `+1` when the generator glues along `+id` on the discriminant group,
    /// `-1` along `-id`.
    pub disc_sign: i8,
}

#[derive(Serialize, Deserialize, Clone, PartialEq)]
pub struct AmbientDto {
    pub generators: Vec<GeneratorDto>,
    pub complete: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub search_bound: Option<i64>,
}

#[derive(Serialize, Deserialize, Clone, PartialEq)]
pub struct GroupDto {
    pub structure: String,
    pub generators: Vec<GeneratorDto>,
    pub relations: Vec<String>,
    pub certificate_depth: u32,
}

#[derive(Serialize, Deserialize, Clone, PartialEq)]
pub struct DiscrepancyDto {
    pub code: String,
    pub detail: String,
}

pub fn matrix_dto(m: &Mat2<Big>) -> Result<[i64; 4], CliError> {
    Ok([
        int64(&m.m00, "matrix entry")?,
        int64(&m.m01, "matrix entry")?,
        int64(&m.m10, "matrix entry")?,
        int64(&m.m11, "matrix entry")?,
    ])
}

pub fn vector_dto(v: &LatticeVector<Big>) -> Result<[i64; 2], CliError> {
    Ok([
        int64(&v.0, "vector coordinate")?,
        int64(&v.1, "vector coordinate")?,
    ])
}

pub fn quad_dto(q: &QuadRat<Big>) -> Result<QuadDto, CliError> {
    let (a, b, d, den) = q.doubled_parts();
    Ok(QuadDto {
        a: int64(&a, "quadratic part")?,
        b: int64(&b, "quadratic part")?,
        d: int64(&d, "radicand")?,
        den: int64(&den, "denominator")?,
    })
}

fn ray_dto(ray: &Ray<Big>) -> Result<RayDto, CliError> {
    Ok(RayDto {
        x: quad_dto(ray.x())?,
        y: quad_dto(ray.y())?,
    })
}

fn wall_dto(wall: &Wall<Big>) -> Result<WallDto, CliError> {
    let kind = match wall.kind {
        WallKind::Root => "root_wall",
        WallKind::ConeBoundary => "boundary_ray",
    };
    Ok(WallDto {
        kind: kind.to_string(),
        ray: ray_dto(&wall.ray)?,
        root: wall.root.as_ref().map(vector_dto).transpose()?,
    })
}

fn chamber_dto(chamber: &Chamber<Big>) -> Result<ChamberDto, CliError> {
    Ok(ChamberDto {
        interior: vector_dto(&chamber.interior)?,
        left: wall_dto(&chamber.left)?,
        right: wall_dto(&chamber.right)?,
    })
}

pub fn certificate_dto(cert: &Certificate<Big>) -> Result<CertificateDto, CliError> {
    Ok(match cert {
        Certificate::Residue { modulus } => CertificateDto {
            kind: "residue".to_string(),
            modulus: Some(int64(modulus, "certificate modulus")?),
            fundamental: None,
        },
        Certificate::UnitNorm { fundamental } => CertificateDto {
            kind: "unit-norm".to_string(),
            modulus: None,
            fundamental: Some(QuadDto {
                a: int64(fundamental.a(), "fundamental unit")?,
                b: int64(fundamental.b(), "fundamental unit")?,
                d: int64(fundamental.radicand().get(), "radicand")?,
                den: 1,
            }),
        },
    })
}

fn roots_dto(report: &AutReport<Big>) -> Result<RootsDto, CliError> {
    let (status, certificate) = match &report.roots.status {
        RootStatus::CompleteFinite => ("complete", None),
        RootStatus::Empty { certificate } => ("empty", Some(certificate_dto(certificate)?)),
        RootStatus::InfiniteFamily => ("infinite", None),
        RootStatus::BoundedScan => ("bounded-scan", None),
    };
    Ok(RootsDto {
        classes: report
            .roots
            .classes
            .iter()
            .map(vector_dto)
            .collect::<Result<_, _>>()?,
        status: status.to_string(),
        certificate,
    })
}

pub fn generator_dto(g: &AutGenerator<Big>) -> Result<GeneratorDto, CliError> {
    Ok(GeneratorDto {
        name: g.name.clone(),
        matrix: matrix_dto(&g.matrix)?,
        order: g.order,
        disc_sign: g.disc_sign,
    })
}

fn class_dto(class: &FormClass<Big>) -> Result<ClassDto, CliError> {
    Ok(match class {
        FormClass::FamilyL { d } => ClassDto {
            family: "L".to_string(),
            d: Some(int64(d, "family parameter")?),
        },
        FormClass::FamilyM { d } => ClassDto {
            family: "M".to_string(),
            d: Some(int64(d, "family parameter")?),
        },
        FormClass::Generic => ClassDto {
            family: "generic".to_string(),
            d: None,
        },
    })
}

impl ReportDocument {
    pub fn build(
        report: &AutReport<Big>,
        depth: u32,
        root_bound: i64,
        timing_ms: u64,
    ) -> Result<Self, CliError> {
        Ok(ReportDocument {
            schema_version: REPORT_SCHEMA.to_string(),
            input: InputEcho {
                gram: [
                    report.form.g00().to_string(),
                    report.form.g01().to_string(),
                    report.form.g11().to_string(),
                ],
                depth,
                root_bound,
            },
            class: class_dto(&report.class)?,
            det: report.form.det().to_string(),
            signature: {
                let (p, n) = report.form.signature();
                [p, n]
            },
            roots: roots_dto(report)?,
            chamber: chamber_dto(&report.chamber)?,
            ambient: AmbientDto {
                generators: report
                    .ambient_generators
                    .iter()
                    .map(generator_dto)
                    .collect::<Result<_, _>>()?,
                complete: report.ambient_complete,
                search_bound: report.ambient_search_bound,
            },
            infinite: report.infinite,
            group: GroupDto {
                structure: report.presentation.structure.tag().to_string(),
                generators: report
                    .presentation
                    .generators
                    .iter()
                    .map(generator_dto)
                    .collect::<Result<_, _>>()?,
                relations: report.presentation.relations.clone(),
                certificate_depth: report.presentation.certificate_depth,
            },
            matched: report.matched.map(str::to_string),
            discrepancies: report
                .discrepancies
                .iter()
                .map(|d| DiscrepancyDto {
                    code: d.code.to_string(),
                    detail: d.detail.clone(),
                })
                .collect(),
            timing_ms,
        })
    }
}

fn describe_certificate(cert: &Certificate<Big>, radicand: String) -> String {
    match cert {
        Certificate::Residue { modulus } => format!(
            "x² − {radicand}·y² = −4 has no solutions modulo {modulus}, checked over all residue pairs"
        ),
        Certificate::UnitNorm { fundamental } => format!(
            "the fundamental unit {fundamental} has norm +1, so no element of ℤ[√{radicand}]'s order has norm −1 and x² − {radicand}·y² = −4 is unsolvable"
        ),
    }
}

fn describe_generator(g: &AutGenerator<Big>) -> String {
    let order = match g.order {
        Some(o) => format!("order {o}"),
        None => "infinite order".to_string(),
    };
    let sign = if g.disc_sign >= 0 { "+id" } else { "-id" };
    format!(
        "  {} = {}   ({order}, acts as {sign} on the discriminant group)",
        g.name, g.matrix
    )
}

/// Human-readable rendering; contains the same matrices, structure tag, and
/// discrepancy codes as the JSON document.
pub fn render_text(report: &AutReport<Big>, depth: u32, root_bound: i64, timing_ms: u64) -> String {
    let mut out = String::new();
    let push = |out: &mut String, line: String| {
        out.push_str(&line);
        out.push('\n');
    };

    push(&mut out, format!("k3aut report ({REPORT_SCHEMA})"));
    let class = match report.form.classify() {
        FormClass::FamilyL { d } => format!("family L, d = {d}"),
        FormClass::FamilyM { d } => format!("family M, d = {d}"),
        FormClass::Generic => "generic".to_string(),
    };
    let (sp, sn) = report.form.signature();
    push(
        &mut out,
        format!(
            "form: {}   class: {class}   det: {}   signature: ({sp}, {sn})",
            report.form,
            report.form.det()
        ),
    );
    push(
        &mut out,
        format!("parameters: certificate depth {depth}, root bound {root_bound}"),
    );

    match &report.roots.status {
        RootStatus::CompleteFinite => {
            let list = report
                .roots
                .classes
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(", ");
            push(
                &mut out,
                format!(
                    "root classes (complete, up to sign): {}",
                    if list.is_empty() { "none" } else { &list }
                ),
            );
        }
        RootStatus::Empty { certificate } => {
            push(
                &mut out,
                format!(
                    "root classes: none — {}",
                    describe_certificate(certificate, report.form.disc().to_string())
                ),
            );
        }
        RootStatus::InfiniteFamily => {
            let list = report
                .roots
                .classes
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(", ");
            push(
                &mut out,
                format!("root classes (infinite family; listed up to the bound): {list}"),
            );
        }
        RootStatus::BoundedScan => {
            let list = report
                .roots
                .classes
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(", ");
            push(
                &mut out,
                format!(
                    "root classes (entries ≤ {root_bound}; completeness not certified): {}",
                    if list.is_empty() { "none" } else { &list }
                ),
            );
        }
    }

    let wall_line = |w: &Wall<Big>| -> String {
        match (&w.kind, &w.root) {
            (WallKind::Root, Some(r)) => format!("root wall of {r} on the ray {}", w.ray),
            (WallKind::Root, None) => format!("root wall on the ray {}", w.ray),
            (WallKind::ConeBoundary, _) => format!("cone boundary ray {}", w.ray),
        }
    };
    push(&mut out, "chamber:".to_string());
    push(
        &mut out,
        format!("  interior point: {}", report.chamber.interior),
    );
    push(
        &mut out,
        format!("  left wall:  {}", wall_line(&report.chamber.left)),
    );
    push(
        &mut out,
        format!("  right wall: {}", wall_line(&report.chamber.right)),
    );

    let completeness = if report.ambient_complete {
        "complete".to_string()
    } else {
        format!(
            "entries ≤ {}; completeness not certified",
            report.ambient_search_bound.unwrap_or(0)
        )
    };
    push(
        &mut out,
        format!("isometry group generators ({completeness}):"),
    );
    for g in &report.ambient_generators {
        push(&mut out, describe_generator(g));
    }

    push(
        &mut out,
        format!(
            "automorphism group: {}   (infinite: {})",
            report.presentation.structure, report.infinite
        ),
    );
    for g in &report.presentation.generators {
        push(&mut out, describe_generator(g));
    }
    if !report.presentation.relations.is_empty() {
        push(
            &mut out,
            format!("relations: {}", report.presentation.relations.join("; ")),
        );
    }
    if let Some(m) = report.matched {
        push(&mut out, format!("matched reference result: {m}"));
    }
    if report.discrepancies.is_empty() {
        push(&mut out, "discrepancies: none".to_string());
    } else {
        push(&mut out, "discrepancies:".to_string());
        for d in &report.discrepancies {
            push(&mut out, format!("  - {}: {}", d.code, d.detail));
        }
    }
    push(&mut out, format!("timing: {timing_ms} ms"));
    out
}
