//! Batch commands behind the command-line tool. Every command returns a
//! serializable report; the text form is rendered from the same JSON value
//! so both formats carry the same fields.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

use crate::codeword::{
    additive_span, cardinality_log2, closure_basis, enumerate_closure, enumerate_specs, spanning_keys, spanning_set,
    validate_spec, Ambient, CodeSet, CodeSpec, DEFAULT_BUDGET,
};
use crate::duality::{dual_report, DualReport};
use crate::error::{Error, Result};
use crate::gf2::{cyclotomic_class_count, factor, BinPoly};
use crate::gray::{
    export_binary_code, gray_dimension_formula, gray_image, gray_key, is_double_cyclic, min_distance_of_span,
    self_dual_transfer, Layout,
};
use crate::linalg::Basis;
use crate::report::{Row, Status};
use crate::structure::{
    cb_dimension, census_row, puncture_x, puncture_y, type_from_enumeration, type_from_formulas, CensusRow, CodeType,
};

pub const DEFAULT_SEED: u64 = 20_170_601;

/// Randomized pairs sampled by the Gray isometry check in `verify`.
const ISOMETRY_SAMPLES: usize = 2000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Settings {
    pub budget: u64,
    pub seed: u64,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            budget: DEFAULT_BUDGET,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorEntry {
    pub factor: String,
    pub degree: usize,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorReport {
    pub n: usize,
    pub factorization: String,
    pub factors: Vec<FactorEntry>,
    /// Number of 2-cyclotomic classes mod n, for odd n.
    pub cyclotomic_classes: Option<usize>,
}

pub fn run_factor(n: usize) -> Result<FactorReport> {
    if n == 0 {
        return Err(Error::NonPositive("n"));
    }
    let f = factor(&BinPoly::xn_minus_one(n))?;
    Ok(FactorReport {
        n,
        factorization: f.to_string(),
        factors: f
            .factors()
            .iter()
            .map(|(p, m)| FactorEntry {
                factor: p.to_string(),
                degree: p.degree().finite().unwrap_or(0),
                multiplicity: *m,
            })
            .collect(),
        cyclotomic_classes: if n % 2 == 1 {
            Some(cyclotomic_class_count(n)?)
        } else {
            None
        },
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstructReport {
    pub spec: String,
    pub violations: Vec<String>,
    pub size: u64,
    pub dimension: u32,
    pub constacyclic: bool,
    pub words: Option<Vec<String>>,
}

/// Builds the closure of the spec's generators. Violations are listed but
/// do not stop construction.
pub fn run_construct(spec: &CodeSpec, emit_words: bool, s: Settings) -> Result<ConstructReport> {
    let code = enumerate_closure(&spec.generators(), spec.alpha, spec.beta, s.budget)?;
    Ok(ConstructReport {
        spec: spec.to_string(),
        violations: validate_spec(spec).iter().map(|v| v.to_string()).collect(),
        size: code.len() as u64,
        dimension: code.dimension(),
        constacyclic: code.is_constacyclic(),
        words: emit_words.then(|| code.words().map(|w| w.to_string()).collect()),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ParamsReport {
    pub spec: String,
    pub formulas: CodeType,
    pub enumeration: CodeType,
    /// `dim C_b`, the looser reading of `k0`.
    pub cb_dimension: u32,
    pub rows: Vec<Row>,
}

fn type_rows(p: &CodeType, o: &CodeType) -> Vec<Row> {
    vec![
        Row::compare("k0", p.k0, o.k0),
        Row::compare("k1", p.k1, o.k1),
        Row::compare("k2", p.k2, o.k2),
        Row::compare("k0'", p.k0p, o.k0p),
        Row::compare("k0''", p.k0pp, o.k0pp),
        Row::compare("k2'", p.k2p, o.k2p),
        Row::compare("k2''", p.k2pp, o.k2pp),
    ]
}

fn require_valid(spec: &CodeSpec) -> Result<()> {
    match validate_spec(spec).first() {
        None => Ok(()),
        Some(v) => Err(Error::InvalidSpec(v.to_string())),
    }
}

pub fn run_params(spec: &CodeSpec, s: Settings) -> Result<ParamsReport> {
    require_valid(spec)?;
    let code = enumerate_closure(&spec.generators(), spec.alpha, spec.beta, s.budget)?;
    let formulas = type_from_formulas(spec)?;
    let enumeration = type_from_enumeration(&code)?;
    let cb = cb_dimension(&code)?;
    let mut rows = type_rows(&formulas, &enumeration);
    rows.extend(projection_rows(&formulas, &code)?);
    rows.push(Row::info("dim C_b", cb));
    Ok(ParamsReport {
        spec: spec.to_string(),
        formulas,
        enumeration,
        cb_dimension: cb,
        rows,
    })
}

/// Size identities for the code and its projections, predicted from the
/// formula Type and measured on the code.
fn projection_rows(t: &CodeType, code: &CodeSet) -> Result<Vec<Row>> {
    Ok(vec![
        Row::compare("log2 |C| = k1 + 2 k2", t.size_log2(), code.dimension()),
        Row::compare("log2 |C_X| = k0 + k2''", t.k0 + t.k2pp, puncture_x(code)?.dimension()),
        Row::compare(
            "log2 |C_Y| = k1 - k0' + 2 k2",
            t.k1 - t.k0p + 2 * t.k2,
            puncture_y(code)?.dimension(),
        ),
    ])
}

pub fn run_dual(spec: &CodeSpec, s: Settings) -> Result<DualReport> {
    dual_report(spec, s.budget)
}

#[derive(Clone, Debug, Serialize)]
pub struct GrayReport {
    pub spec: String,
    pub layout: Layout,
    pub n: u32,
    pub k: u32,
    pub d: u32,
    pub rows: Vec<Row>,
    pub words: Option<Vec<String>>,
}

pub fn run_gray(spec: &CodeSpec, layout: Layout, emit_words: bool, s: Settings) -> Result<GrayReport> {
    require_valid(spec)?;
    let code = enumerate_closure(&spec.generators(), spec.alpha, spec.beta, s.budget)?;
    let image = gray_image(&code, layout)?;
    let amb = code.ambient();
    let n = amb.bits() as u32;
    let d = min_distance_of_span(&Ambient::binary(amb.bits())?, image.basis()).unwrap_or(0);
    let mut rows = vec![
        Row::compare(
            "dimension of the image",
            gray_dimension_formula(spec)?,
            image.dimension(),
        ),
        Row::compare(
            "minimum distance equals minimum Lee weight",
            min_distance_of_span(&amb, code.basis()).unwrap_or(0),
            d,
        ),
    ];
    rows.push(double_cyclic_row(&image, spec, layout)?);
    let words = emit_words.then(|| {
        export_binary_code(&image, layout)
            .lines()
            .skip(1)
            .map(str::to_string)
            .collect()
    });
    Ok(GrayReport {
        spec: spec.to_string(),
        layout,
        n,
        k: image.dimension(),
        d,
        rows,
        words,
    })
}

fn double_cyclic_row(image: &CodeSet, spec: &CodeSpec, layout: Layout) -> Result<Row> {
    let check = "block: image is double cyclic";
    if layout != Layout::Block {
        return Ok(Row::not_applicable(check, "defined for the block layout"));
    }
    let ok = is_double_cyclic(image, spec.alpha, 2 * spec.beta)?;
    Ok(if spec.beta % 2 == 1 {
        Row::holds(check, ok)
    } else {
        Row::info(format!("{check} (even beta)"), ok)
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Stage {
    pub stage: String,
    pub rows: Vec<Row>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub spec: String,
    pub seed: u64,
    pub budget: u64,
    pub valid: bool,
    /// Measured `[n, k, d]` of the Gray image.
    pub gray_parameters: Option<String>,
    pub stages: Vec<Stage>,
    pub matches: usize,
    pub findings: usize,
}

fn stage(name: &str, rows: Vec<Row>) -> Stage {
    Stage {
        stage: name.to_string(),
        rows,
    }
}

/// Runs every check that applies to the spec. Formula mismatches become
/// rows with status `mismatch`; only internal errors are returned as `Err`.
pub fn run_verify(spec: &CodeSpec, s: Settings) -> Result<VerifyReport> {
    let violations = validate_spec(spec);
    let mut stages = Vec::new();
    let valid = violations.is_empty();
    if valid {
        stages.push(stage("validation", vec![Row::holds("generator conditions", true)]));
    } else {
        let rows = violations
            .iter()
            .map(|v| Row {
                check: "generator conditions".into(),
                predicted: "satisfied".into(),
                observed: v.to_string(),
                status: Status::Mismatch,
            })
            .collect();
        stages.push(stage("validation", rows));
        return Ok(finish(spec, s, false, None, stages));
    }

    let code = enumerate_closure(&spec.generators(), spec.alpha, spec.beta, s.budget)?;
    let amb = code.ambient();
    stages.push(stage(
        "closure",
        vec![
            Row::info("log2 |C|", code.dimension()),
            Row::holds("closure is constacyclic", code.is_constacyclic()),
        ],
    ));

    let span = spanning_set(spec)?;
    let keys = spanning_keys(&amb, &span);
    let span_code = additive_span(amb, keys.iter().copied());
    stages.push(stage(
        "spanning set",
        vec![
            Row::compare("log2 |span|", code.dimension(), span_code.dimension()),
            Row::holds("span equals closure", span_code == code),
            Row::holds("spanning set is minimal", spanning_set_minimal(&amb, &span)),
        ],
    ));

    stages.push(stage(
        "cardinality",
        vec![Row::compare("log2 |C|", cardinality_log2(spec)?, code.dimension())],
    ));

    let formulas = type_from_formulas(spec)?;
    let mut rows = type_rows(&formulas, &type_from_enumeration(&code)?);
    rows.extend(projection_rows(&formulas, &code)?);
    rows.push(Row::info("dim C_b", cb_dimension(&code)?));
    stages.push(stage("type", rows));

    let dual = dual_report(spec, s.budget)?;
    stages.push(stage("duality", dual.rows.clone()));

    let (rows, params) = gray_rows(spec, &code, s)?;
    stages.push(stage("gray", rows));

    Ok(finish(spec, s, true, Some(params), stages))
}

fn finish(spec: &CodeSpec, s: Settings, valid: bool, params: Option<String>, stages: Vec<Stage>) -> VerifyReport {
    let all = || stages.iter().flat_map(|st| st.rows.iter());
    let matches = all().filter(|r| r.status == Status::Match).count();
    let findings = all().filter(|r| r.is_finding()).count();
    VerifyReport {
        spec: spec.to_string(),
        seed: s.seed,
        budget: s.budget,
        valid,
        gray_parameters: params,
        stages,
        matches,
        findings,
    }
}

fn spanning_set_minimal(amb: &Ambient, span: &[crate::codeword::SpanElement]) -> bool {
    let full = Basis::from_vectors(spanning_keys(amb, span)).rank();
    (0..span.len()).all(|i| {
        let rest: Vec<_> = span
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, e)| e.clone())
            .collect();
        Basis::from_vectors(spanning_keys(amb, &rest)).rank() < full
    })
}

fn gray_rows(spec: &CodeSpec, code: &CodeSet, s: Settings) -> Result<(Vec<Row>, String)> {
    let amb = code.ambient();
    let n = amb.bits();
    let d = min_distance_of_span(&amb, code.basis()).unwrap_or(0);
    let params = format!("[{},{},{}]", n, code.dimension(), d);
    let mut rows = vec![Row::info("[n,k,d]", &params)];
    rows.push(Row::compare(
        "dimension of the image",
        gray_dimension_formula(spec)?,
        code.dimension(),
    ));
    let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
    let words = code.keys();
    for layout in [Layout::Interleaved, Layout::Block] {
        let mut ok = true;
        for _ in 0..ISOMETRY_SAMPLES {
            let x = words[rng.gen_range(0..words.len())];
            let y = words[rng.gen_range(0..words.len())];
            let lee = crate::gray::key_lee_weight(&amb, x ^ y);
            let ham = (gray_key(&amb, x, layout) ^ gray_key(&amb, y, layout)).count_ones();
            ok &= lee == ham;
        }
        rows.push(Row::holds(
            format!("{layout}: Lee distance equals Hamming distance"),
            ok,
        ));
        if layout == Layout::Block {
            rows.push(double_cyclic_row(&gray_image(code, layout)?, spec, layout)?);
        }
        if Ambient::binary(n)?.check_budget(s.budget).is_ok() {
            let t = self_dual_transfer(code, layout, s.budget)?;
            rows.push(Row::holds(
                format!("{layout}: image of the dual is the dual of the image"),
                t.dual_commutes,
            ));
            match t.image_self_dual {
                Some(ok) => rows.push(Row::holds(
                    format!("{layout}: self-dual code has a self-dual image"),
                    ok,
                )),
                None => rows.push(Row::not_applicable(
                    format!("{layout}: self-dual code has a self-dual image"),
                    "code is not self-dual",
                )),
            }
        } else {
            rows.push(Row::not_applicable(
                format!("{layout}: image of the dual is the dual of the image"),
                "ambient exceeds the budget",
            ));
        }
    }
    Ok((rows, params))
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub budget: u64,
    pub rows: Vec<CensusRow>,
}

pub fn run_census(alpha: usize, beta: usize, s: Settings) -> Result<CensusReport> {
    Ok(CensusReport {
        budget: s.budget,
        rows: vec![census_row(alpha, beta, s.budget)?],
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchRow {
    pub rank: usize,
    pub spec: String,
    pub n: u32,
    pub k: u32,
    pub d: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub alpha_max: usize,
    pub beta_max: usize,
    pub d_min: u32,
    pub rows: Vec<SearchRow>,
}

/// Every valid spec with `1 <= alpha <= alpha_max`, `1 <= beta <= beta_max`
/// whose Gray image has distance at least `d_min`, ranked by distance, then
/// dimension, then the serialized spec.
pub fn run_search(
    alpha_max: usize,
    beta_max: usize,
    d_min: u32,
    limit: Option<usize>,
    s: Settings,
) -> Result<SearchReport> {
    let mut found = Vec::new();
    for alpha in 1..=alpha_max {
        for beta in 1..=beta_max {
            let amb = Ambient::new(alpha, beta)?;
            amb.check_budget(s.budget)?;
            for spec in enumerate_specs(alpha, beta)? {
                let basis = closure_basis(amb, spec.generator_keys()?);
                let d = min_distance_of_span(&amb, &basis).unwrap_or(0);
                if d >= d_min && basis.rank() > 0 {
                    found.push((d, basis.rank(), spec.to_string(), amb.bits() as u32));
                }
            }
        }
    }
    found.sort_by(|x, y| y.0.cmp(&x.0).then(y.1.cmp(&x.1)).then(x.2.cmp(&y.2)));
    found.truncate(limit.unwrap_or(usize::MAX));
    Ok(SearchReport {
        alpha_max,
        beta_max,
        d_min,
        rows: found
            .into_iter()
            .enumerate()
            .map(|(i, (d, k, spec, n))| SearchRow {
                rank: i + 1,
                spec,
                n,
                k,
                d,
            })
            .collect(),
    })
}

/// Serializes a report to pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(report: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(report).map_err(|e| Error::Degenerate(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

/// Renders a report as indented `key: value` text. Arrays of objects are
/// written one object per line.
pub fn to_text<T: Serialize>(report: &T) -> Result<String> {
    let v = serde_json::to_value(report).map_err(|e| Error::Degenerate(e.to_string()))?;
    let mut out = String::new();
    render(&v, 0, &mut out);
    Ok(out)
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Object(m) => {
            let parts: Vec<String> = m.iter().map(|(k, v)| format!("{k}={}", scalar(v))).collect();
            parts.join("  ")
        }
        other => other.to_string(),
    }
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    let Value::Object(m) = v else {
        out.push_str(&format!("{pad}{}\n", scalar(v)));
        return;
    };
    for (k, v) in m {
        match v {
            Value::Object(_) => {
                out.push_str(&format!("{pad}{k}:\n"));
                render(v, indent + 1, out);
            }
            Value::Array(items) if items.iter().any(|i| i.is_object()) => {
                out.push_str(&format!("{pad}{k}:\n"));
                for item in items {
                    if item.get("rows").is_some() {
                        render(item, indent + 1, out);
                    } else {
                        out.push_str(&format!("{pad}  {}\n", scalar(item)));
                    }
                }
            }
            Value::Array(items) if items.iter().all(|i| i.is_string()) && !items.is_empty() => {
                out.push_str(&format!("{pad}{k}:\n"));
                for item in items {
                    out.push_str(&format!("{pad}  {}\n", scalar(item)));
                }
            }
            _ => out.push_str(&format!("{pad}{k}: {}\n", scalar(v))),
        }
    }
}
