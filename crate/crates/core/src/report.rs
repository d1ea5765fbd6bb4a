//! Batch interface: spec documents in, reports out.
//!
//! The input format is a single JSON document with exact rationals carried
//! as "p/q" strings; unknown fields are rejected. Reports are deterministic
//! (identical inputs give byte-identical JSON across runs) and every Q/Z
//! value is rendered as a reduced "p/q" in [0, 1). The advisory Gauss sum is
//! the only floating-point field anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::oracle::{brute_centre, exact_sequence_check, Cocycle3};
use crate::qform::gauss_sum;
use crate::qz::QZElem;
use crate::root_data::{Series, SimpleType};
use crate::string_centre::{
    loopgroup_flags, quotient_centre, sc_centre, GroupSpec, KernelGen, LoopGroupReport,
};
use crate::table::{generator_labels, printed_row};
use crate::torus::TorusLevel;

pub const DEFAULT_DENOMINATOR_BOUND: u64 = 1_000_000;

/// The versioned on-disk spec document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDocument {
    pub version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torus: Option<TorusDocument>,
    #[serde(default)]
    pub simples: Vec<SimpleDocument>,
    #[serde(default)]
    pub kernel: Vec<KernelDocument>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TorusDocument {
    pub rank: usize,
    pub j: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimpleDocument {
    pub series: String,
    pub rank: usize,
    pub level: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KernelDocument {
    #[serde(default)]
    pub torus: Vec<String>,
    #[serde(default)]
    pub simples: Vec<Vec<i64>>,
}

fn err_at(field: &str, message: impl Into<String>) -> Error {
    Error::SpecValidation {
        field: field.to_string(),
        message: message.into(),
    }
}

/// Parse and validate a spec document into a `GroupSpec`. Rationals are
/// exact; denominators above the bound are rejected as input sanity.
pub fn parse_spec(text: &str, denominator_bound: u64) -> Result<GroupSpec> {
    let doc: SpecDocument = serde_json::from_str(text).map_err(|e| {
        Error::SpecSyntax(format!("line {}, column {}: {}", e.line(), e.column(), e))
    })?;
    spec_from_document(&doc, denominator_bound)
}

pub fn spec_from_document(doc: &SpecDocument, denominator_bound: u64) -> Result<GroupSpec> {
    if doc.version != 1 {
        return Err(err_at(
            "version",
            format!("unsupported version {}", doc.version),
        ));
    }
    let torus = match &doc.torus {
        Some(t) => {
            if t.j.len() != t.rank || t.j.iter().any(|row| row.len() != t.rank) {
                return Err(err_at(
                    "torus.j",
                    format!("J must be a {0}x{0} integer matrix", t.rank),
                ));
            }
            if t.rank == 0 {
                None
            } else {
                Some(
                    TorusLevel::new(t.rank, IntMatrix::from_rows(t.j.clone()))
                        .map_err(|e| err_at("torus.j", e.to_string()))?,
                )
            }
        }
        None => None,
    };
    let mut simples = Vec::new();
    for (i, s) in doc.simples.iter().enumerate() {
        let series_char = {
            let mut chars = s.series.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => c,
                _ => {
                    return Err(err_at(
                        &format!("simples[{i}].series"),
                        format!("series must be one letter A-G, got '{}'", s.series),
                    ))
                }
            }
        };
        let series = Series::from_char(series_char).ok_or_else(|| {
            err_at(
                &format!("simples[{i}].series"),
                format!("unknown series '{}'", s.series),
            )
        })?;
        let t = SimpleType::new(series, s.rank)
            .map_err(|e| err_at(&format!("simples[{i}].rank"), e.to_string()))?;
        simples.push((t, s.level));
    }
    let mut kernel = Vec::new();
    for (i, k) in doc.kernel.iter().enumerate() {
        let mut torus_coords = Vec::new();
        for (j, s) in k.torus.iter().enumerate() {
            let q = QZElem::parse(s)
                .map_err(|e| err_at(&format!("kernel[{i}].torus[{j}]"), e.to_string()))?;
            if q.denominator() > &BigInt::from(denominator_bound) {
                return Err(err_at(
                    &format!("kernel[{i}].torus[{j}]"),
                    format!(
                        "denominator {} exceeds the bound {denominator_bound}",
                        q.denominator()
                    ),
                ));
            }
            torus_coords.push(q.as_ratio());
        }
        let simple_coords: Vec<Vec<BigInt>> = k
            .simples
            .iter()
            .map(|c| c.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        kernel.push(KernelGen {
            torus: torus_coords,
            simples: simple_coords,
        });
    }
    let spec = GroupSpec {
        torus,
        simples,
        kernel,
    };
    spec.validate().map_err(|e| match e {
        Error::KernelGenerator(msg) => err_at("kernel", msg),
        other => other,
    })?;
    Ok(spec)
}

/// Turn a `GroupSpec` back into a document (used for round-trip checks).
pub fn document_from_spec(spec: &GroupSpec) -> SpecDocument {
    let torus = spec.torus.as_ref().map(|t| TorusDocument {
        rank: t.rank,
        j: (0..t.rank)
            .map(|i| (0..t.rank).map(|j| int_to_i64(t.j.at(i, j))).collect())
            .collect(),
    });
    let simples = spec
        .simples
        .iter()
        .map(|(t, k)| SimpleDocument {
            series: t.series.as_char().to_string(),
            rank: t.rank,
            level: *k,
        })
        .collect();
    let kernel = spec
        .kernel
        .iter()
        .map(|g| KernelDocument {
            torus: g
                .torus
                .iter()
                .map(|r| QZElem::from_ratio(r).to_string())
                .collect(),
            simples: g
                .simples
                .iter()
                .map(|c| c.iter().map(int_to_i64).collect())
                .collect(),
        })
        .collect();
    SpecDocument {
        version: 1,
        torus,
        simples,
        kernel,
    }
}

fn int_to_i64(v: &BigInt) -> i64 {
    use num_traits::ToPrimitive;
    v.to_i64().expect("value fits i64 in documents")
}

/// The machine-readable result of a centre computation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDocument {
    pub descends: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pi0: Option<Pi0Document>,
    pub q_on_generators: Vec<String>,
    pub sigma_matrix: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gauss_sum: Option<String>,
    pub loopgroup: LoopGroupDocument,
    pub table_flags: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Pi0Document {
    pub vector_dim: usize,
    pub discrete_free_rank: usize,
    pub torus_dim: usize,
    pub invariant_factors: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LoopGroupDocument {
    pub semisimple: bool,
    pub positive_definite: bool,
    pub e8_level2: bool,
    pub applicable: bool,
    pub statement: String,
}

impl From<LoopGroupReport> for LoopGroupDocument {
    fn from(r: LoopGroupReport) -> Self {
        LoopGroupDocument {
            semisimple: r.semisimple,
            positive_definite: r.positive_definite,
            e8_level2: r.e8_level2,
            applicable: r.applicable,
            statement: r.statement,
        }
    }
}

/// Run the pipeline. Returns the report and the process exit code:
/// 0 on success, 2 when the level does not descend (the report is still
/// produced). Malformed input errors out of this function (exit 1).
pub fn run(spec: &GroupSpec) -> Result<(ReportDocument, i32)> {
    let result = quotient_centre(spec)?;
    let loopgroup = LoopGroupDocument::from(loopgroup_flags(spec));
    if !result.descends {
        return Ok((
            ReportDocument {
                descends: false,
                pi0: None,
                q_on_generators: vec![],
                sigma_matrix: vec![],
                name: None,
                gauss_sum: None,
                loopgroup,
                table_flags: result.table_flags,
            },
            2,
        ));
    }
    let centre = result.centre.expect("descends implies a centre");
    let m = centre.finite.rank();
    let q_on_generators: Vec<String> = centre
        .q_finite
        .diag()
        .iter()
        .map(|v| v.to_string())
        .collect();
    let sigma_matrix: Vec<Vec<String>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| centre.q_finite.sigma_gen(i, j).to_string())
                .collect()
        })
        .collect();
    let gauss = if centre.is_finite() {
        let g = gauss_sum(&centre.q_finite)?;
        Some(format!("{:.6}{:+.6}i", g.re, g.im))
    } else {
        None
    };
    let report = ReportDocument {
        descends: true,
        pi0: Some(Pi0Document {
            vector_dim: centre.vector_dim,
            discrete_free_rank: centre.discrete_free_rank,
            torus_dim: centre.torus_dim,
            invariant_factors: centre
                .finite
                .invariant_factors()
                .iter()
                .map(|d| d.to_string())
                .collect(),
        }),
        q_on_generators,
        sigma_matrix,
        name: result.name.map(|n| n.to_string()),
        gauss_sum: gauss,
        loopgroup,
        table_flags: result.table_flags,
    };
    Ok((report, 0))
}

pub fn render_report_text(r: &ReportDocument) -> String {
    let mut out = String::new();
    out.push_str(&format!("descends: {}\n", r.descends));
    if let Some(pi0) = &r.pi0 {
        out.push_str(&format!(
            "pi0: R^{} + Z^{} + T^{} + [{}]\n",
            pi0.vector_dim,
            pi0.discrete_free_rank,
            pi0.torus_dim,
            if pi0.invariant_factors.is_empty() {
                "0".to_string()
            } else {
                pi0.invariant_factors
                    .iter()
                    .map(|d| format!("Z/{d}"))
                    .collect::<Vec<_>>()
                    .join(" x ")
            }
        ));
        out.push_str(&format!(
            "q on generators: [{}]\n",
            r.q_on_generators.join(", ")
        ));
        if !r.sigma_matrix.is_empty() {
            out.push_str("sigma matrix:\n");
            for row in &r.sigma_matrix {
                out.push_str(&format!("  [{}]\n", row.join(", ")));
            }
        }
        if let Some(name) = &r.name {
            out.push_str(&format!("name: {name}\n"));
        }
        if let Some(g) = &r.gauss_sum {
            out.push_str(&format!("gauss sum (advisory): {g}\n"));
        }
    } else {
        out.push_str("level does not descend: no centre for this quotient\n");
    }
    out.push_str(&format!("loop group: {}\n", r.loopgroup.statement));
    for f in &r.table_flags {
        out.push_str(&format!("table flag: {f}\n"));
    }
    out
}

/// One cell of the results-table reproduction.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Table1Entry {
    pub label: String,
    pub computed: String,
    pub printed: String,
    pub matched: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Table1Row {
    pub group: String,
    pub series: String,
    pub rank: usize,
    pub level: i64,
    pub entries: Vec<Table1Entry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Table1Report {
    pub max_level: i64,
    pub rows: Vec<Table1Row>,
}

/// Reproduce the results table: for every type with nontrivial centre and
/// every level up to `max_level`, the computed q values next to the printed
/// ones with a MATCH/FLAG verdict.
pub fn table1(max_level: i64) -> Result<Table1Report> {
    assert!(max_level >= 1);
    let mut types: Vec<SimpleType> = Vec::new();
    for r in 1..=8 {
        types.push(SimpleType::new(Series::A, r)?);
    }
    for r in 2..=6 {
        types.push(SimpleType::new(Series::B, r)?);
    }
    for r in 2..=6 {
        types.push(SimpleType::new(Series::C, r)?);
    }
    for r in 3..=8 {
        types.push(SimpleType::new(Series::D, r)?);
    }
    types.push(SimpleType::new(Series::E, 6)?);
    types.push(SimpleType::new(Series::E, 7)?);
    let mut rows = Vec::new();
    for t in types {
        for k in 1..=max_level {
            let (group, form) = sc_centre(t, k)?;
            let printed = printed_row(t, k).expect("types listed here have centre rows");
            let labels = generator_labels(t);
            let gens = group.generators();
            let mut computed = Vec::new();
            for g in &gens {
                computed.push(form.eval(g)?);
            }
            if gens.len() == 2 {
                computed.push(form.eval(&group.add(&gens[0], &gens[1]))?);
            }
            let entries = labels
                .iter()
                .zip(printed.iter())
                .zip(computed.iter())
                .map(|((label, p), c)| Table1Entry {
                    label: label.clone(),
                    computed: c.to_string(),
                    printed: p.value.to_string(),
                    matched: p.value == *c,
                })
                .collect();
            rows.push(Table1Row {
                group: t.group_name(),
                series: t.series.as_char().to_string(),
                rank: t.rank,
                level: k,
                entries,
            });
        }
    }
    Ok(Table1Report { max_level, rows })
}

pub fn render_table1_text(rep: &Table1Report) -> String {
    let mut out = String::new();
    out.push_str("type   group      k  entry            computed  printed   verdict\n");
    for row in &rep.rows {
        for e in &row.entries {
            out.push_str(&format!(
                "{:<6} {:<10} {:<2} {:<16} {:<9} {:<9} {}\n",
                format!("{}{}", row.series, row.rank),
                row.group,
                row.level,
                e.label,
                e.computed,
                e.printed,
                if e.matched { "MATCH" } else { "FLAG" }
            ));
        }
    }
    out
}

/// Oracle subcommand result: the brute-force centre of Z/n with the
/// standard cocycle at class k, plus the exact-sequence verdict.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OracleReport {
    pub n: u64,
    pub k: i64,
    pub invariant_factors: Vec<String>,
    pub q_values: Vec<OracleValue>,
    pub exact_sequence: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OracleValue {
    pub element: Vec<String>,
    pub q: String,
}

pub fn oracle_report(n: u64, k: i64) -> Result<OracleReport> {
    let w = Cocycle3::standard(n, k)?;
    let oc = brute_centre(&w)?;
    let exact = exact_sequence_check(&w)?;
    let mut q_values = Vec::new();
    for e in oc.group.elements(4096)? {
        q_values.push(OracleValue {
            element: e.iter().map(|c| c.to_string()).collect(),
            q: oc.form.eval(&e)?.to_string(),
        });
    }
    Ok(OracleReport {
        n,
        k,
        invariant_factors: oc
            .group
            .invariant_factors()
            .iter()
            .map(|d| d.to_string())
            .collect(),
        q_values,
        exact_sequence: exact,
    })
}

pub fn render_oracle_text(r: &OracleReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "oracle: Z/{} with standard cocycle class {}\n",
        r.n, r.k
    ));
    out.push_str(&format!(
        "pi0 invariant factors: [{}]\n",
        r.invariant_factors.join(", ")
    ));
    out.push_str("q table:\n");
    for v in &r.q_values {
        out.push_str(&format!("  ({}) -> {}\n", v.element.join(", "), v.q));
    }
    out.push_str(&format!("exact sequence verified: {}\n", r.exact_sequence));
    out
}

/// The worked-example battery: named fixture specs run end to end.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExampleResult {
    pub label: String,
    pub report: ReportDocument,
}

pub fn examples_battery() -> Result<Vec<ExampleResult>> {
    use crate::string_centre::fixtures;
    let cases: Vec<(String, GroupSpec)> = vec![
        ("SU(2) level 2".into(), fixtures::su2(2)),
        ("SO(4) levels (1,1)".into(), fixtures::so4(1, 1)),
        ("SO(4) levels (2,2)".into(), fixtures::so4(2, 2)),
        ("SO(4) levels (4,4)".into(), fixtures::so4(4, 4)),
        ("SO(3) level 4".into(), fixtures::so3(4)),
        (
            "U(2) torus level 2, SU(2) level 2".into(),
            fixtures::u2(2, 2),
        ),
    ];
    let mut out = Vec::new();
    for (label, spec) in cases {
        let (report, _) = run(&spec)?;
        out.push(ExampleResult { label, report });
    }
    Ok(out)
}

pub fn render_examples_text(results: &[ExampleResult]) -> String {
    let mut out = String::new();
    for r in results {
        out.push_str(&format!("== {}\n", r.label));
        out.push_str(&render_report_text(&r.report));
        out.push('\n');
    }
    out
}

/// Serialise a rational as "p/q" (kept here so the CLI never prints floats
/// for exact data).
pub fn ratio_string(r: &BigRational) -> String {
    QZElem::from_ratio(r).to_string()
}
