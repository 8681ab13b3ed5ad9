//! Command implementations behind the `bentcat` binary: analysis reports,
//! recipe-driven construction, and theorem verification, all emitting a
//! schema-versioned JSON [`Report`].

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::anf::{degree, AnfPolynomial};
use crate::boolean::BooleanFunction;
use crate::construct::{
    extend_outside, find_invertible_pair, find_unique_msubspace_bent, find_unique_msubspace_permutation, ghgh,
    korsakova_pair, mm_function, rind_construction, theorem2_halfconcat, twist_pair, PermutationSpec,
};
use crate::error::{Error, Result};
use crate::matrix::BinaryMatrix;
use crate::sample::{random_bent, random_mm_bent};
use crate::search::{is_in_completed_mm, ClassVerdict, MSearch, DEFAULT_BUDGET};
use crate::text::{format_table, parse_function, parse_table_hex, table_hex};
use crate::verify::{verify, Check, TheoremId, VerifyInput};
use crate::walsh::{dual, walsh_transform, SpectrumClass};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabeledVerdict {
    pub subject: String,
    #[serde(flatten)]
    pub verdict: ClassVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumSummary {
    pub subject: String,
    pub n_vars: usize,
    pub degree: u32,
    #[serde(flatten)]
    pub class: SpectrumClass,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_m_dimension: Option<usize>,
}

/// Construction name and parameters of a generated function.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Provenance {
    pub construction: String,
    pub seed: u64,
    pub parameters: serde_json::Value,
    pub outputs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct BudgetUsage {
    pub budget: u64,
    pub exceeded: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: BTreeMap<String, String>,
    pub inputs: Vec<InputDigest>,
    pub verdicts: Vec<LabeledVerdict>,
    pub spectra: Vec<SpectrumSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<Check>,
    pub budget: BudgetUsage,
    pub failures: Vec<String>,
}

impl Report {
    fn new(command: &str, args: &[(&str, String)], budget: u64) -> Self {
        let mut echo = BTreeMap::new();
        echo.insert("name".to_string(), command.to_string());
        for (k, v) in args {
            echo.insert(k.to_string(), v.clone());
        }
        Self {
            schema_version: SCHEMA_VERSION,
            command: echo,
            inputs: vec![],
            verdicts: vec![],
            spectra: vec![],
            provenance: None,
            checks: vec![],
            budget: BudgetUsage {
                budget,
                exceeded: false,
            },
            failures: vec![],
        }
    }

    /// No disagreement and no exhausted budget.
    pub fn success(&self) -> bool {
        self.failures.is_empty() && !self.budget.exceeded
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    fn note_budget<T>(&mut self, r: Result<T>) -> Result<Option<T>> {
        match r {
            Ok(v) => Ok(Some(v)),
            Err(Error::BudgetExceeded { .. }) => {
                self.budget.exceeded = true;
                Ok(None)
            }
            Err(e) => Err(e),
        }
    }
}

fn read_input(path: &Path) -> Result<(String, InputDigest)> {
    let text = fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
    let digest = InputDigest {
        path: path.display().to_string(),
        sha256: format!("{:x}", Sha256::digest(text.as_bytes())),
    };
    Ok((text, digest))
}

fn spectrum_summary(subject: &str, f: &BooleanFunction, max_dim: Option<usize>) -> SpectrumSummary {
    let class = walsh_transform(f).classify();
    SpectrumSummary {
        subject: subject.into(),
        n_vars: f.n_vars(),
        degree: degree(f),
        dual: dual(f).ok().map(|d| table_hex(&d)),
        class,
        max_m_dimension: max_dim,
    }
}

/// Spectrum, degree, dual, maximal M-subspace dimension and M# verdict of
/// the function stored at `input`.
pub fn cmd_analyze(input: &Path, budget: Option<u64>) -> Result<Report> {
    let budget = budget.unwrap_or(DEFAULT_BUDGET);
    let mut report = Report::new("analyze", &[("input", input.display().to_string())], budget);
    let (text, digest) = read_input(input)?;
    report.inputs.push(digest);
    let f = parse_function(&text)?;
    let max_dim = report.note_budget(MSearch::single(&f).with_budget(budget).max_dimension())?;
    report.spectra.push(spectrum_summary("input", &f, max_dim));
    if f.n_vars() % 2 == 0 && crate::walsh::is_bent(&f) {
        if let Some(v) = report.note_budget(is_in_completed_mm(&f, Some(budget)))? {
            report.verdicts.push(LabeledVerdict {
                subject: "input".into(),
                verdict: v,
            });
        }
    }
    Ok(report)
}

/// Where a recipe takes a function from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FunctionSource {
    /// A truth-table or ANF file, relative to the recipe.
    File(PathBuf),
    Table { n: usize, hex: String },
    Anf { n: usize, expr: String },
    Mm { m: usize, images: Vec<String> },
    /// Seeded random MM bent function on `n` variables.
    RandomMm(usize),
    /// Seeded random bent function (EA image of an MM function).
    RandomBent(usize),
    /// Seeded search for a bent function with a unique `n/2`-dimensional M-subspace.
    UniqueSubspace(usize),
}

impl FunctionSource {
    fn load(&self, base: &Path, rng: &mut ChaCha8Rng, seed: u64) -> Result<BooleanFunction> {
        match self {
            FunctionSource::File(p) => parse_function(&fs::read_to_string(base.join(p)).map_err(|e| {
                Error::Invalid(format!("{}: {e}", p.display()))
            })?),
            FunctionSource::Table { n, hex } => parse_table_hex(*n, hex, 1),
            FunctionSource::Anf { n, expr } => AnfPolynomial::parse(*n, expr)?.to_function(),
            FunctionSource::Mm { m, images } => mm_function(&permutation(*m, images)?, None),
            FunctionSource::RandomMm(n) | FunctionSource::RandomBent(n) if n % 2 == 1 || *n > 16 => {
                Err(Error::Invalid(format!("bent functions need an even n <= 16, got {n}")))
            }
            FunctionSource::RandomMm(n) => Ok(random_mm_bent(*n, rng)),
            FunctionSource::RandomBent(n) => Ok(random_bent(*n, rng)),
            FunctionSource::UniqueSubspace(n) => find_unique_msubspace_bent(*n, 100_000, seed),
        }
    }
}

fn permutation(m: usize, images: &[String]) -> Result<PermutationSpec> {
    PermutationSpec::from_hex(m, m, images).map_err(|e| match e {
        Error::NotInjective => Error::NotPermutation,
        e => e,
    })
}

/// A construction recipe, tagged by `construction`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "construction", rename_all = "snake_case", deny_unknown_fields)]
pub enum Recipe {
    Mm {
        m: usize,
        images: Vec<String>,
        #[serde(default)]
        g: Option<FunctionSource>,
    },
    Thm2 {
        k: usize,
        pi1: Vec<String>,
        pi2: Vec<String>,
        #[serde(default)]
        h1: Option<FunctionSource>,
        #[serde(default)]
        h2: Option<FunctionSource>,
    },
    Ghgh {
        g: FunctionSource,
        h: FunctionSource,
    },
    Korsakova {
        g: FunctionSource,
        /// A hex vector, or `"all"` for the full sweep.
        alpha: String,
    },
    Rind {
        m: usize,
        #[serde(default)]
        images: Option<Vec<String>>,
        /// Matrix rows in hex; sampled from the seed when absent.
        #[serde(default)]
        matrix: Option<Vec<String>>,
    },
    Extend {
        g: FunctionSource,
        #[serde(default)]
        pool: Vec<FunctionSource>,
        #[serde(default)]
        variant: usize,
    },
    Twist {
        g: FunctionSource,
        q: FunctionSource,
    },
}

impl Recipe {
    pub fn name(&self) -> &'static str {
        match self {
            Recipe::Mm { .. } => "mm",
            Recipe::Thm2 { .. } => "thm2",
            Recipe::Ghgh { .. } => "ghgh",
            Recipe::Korsakova { .. } => "korsakova",
            Recipe::Rind { .. } => "rind",
            Recipe::Extend { .. } => "extend",
            Recipe::Twist { .. } => "twist",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }
}

fn hex_u32(s: &str) -> Result<u32> {
    u32::from_str_radix(s.trim_start_matches("0x"), 16).map_err(|_| Error::Invalid(format!("bad hex value {s:?}")))
}

/// First seeded `A` (with `I + A` invertible) that moves the unique subspace.
fn rind_matrix(pi: &PermutationSpec, seed: u64, budget: u64) -> Result<BinaryMatrix> {
    for s in seed..seed + 1000 {
        let a = find_invertible_pair(2 * pi.in_bits(), s)?;
        match rind_construction(pi, &a, Some(budget)) {
            Err(Error::SubspacePreserved) => continue,
            Err(e) => return Err(e),
            Ok(_) => return Ok(a),
        }
    }
    Err(Error::BudgetExhausted { sampled: 1000 })
}

/// Builds the function a recipe describes and writes it (plus a provenance
/// file) into `out_dir`. Every output is checked bent before it is written.
pub fn cmd_construct(recipe_path: &Path, seed: u64, budget: Option<u64>, out_dir: &Path) -> Result<Report> {
    let budget = budget.unwrap_or(DEFAULT_BUDGET);
    let mut report = Report::new(
        "construct",
        &[
            ("recipe", recipe_path.display().to_string()),
            ("seed", seed.to_string()),
        ],
        budget,
    );
    let (text, digest) = read_input(recipe_path)?;
    report.inputs.push(digest);
    let recipe = Recipe::parse(&text)?;
    let base = recipe_path.parent().unwrap_or(Path::new("."));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut outputs: Vec<(String, BooleanFunction)> = Vec::new();
    let mut params = serde_json::to_value(&recipe).expect("recipe serializes");
    match &recipe {
        Recipe::Mm { m, images, g } => {
            let g = g.as_ref().map(|s| s.load(base, &mut rng, seed)).transpose()?;
            outputs.push(("mm".into(), mm_function(&permutation(*m, images)?, g.as_ref())?));
        }
        Recipe::Thm2 { k, pi1, pi2, h1, h2 } => {
            let pi1 = PermutationSpec::from_hex(*k, k + 1, pi1)?;
            let pi2 = PermutationSpec::from_hex(*k, k + 1, pi2)?;
            let zero = BooleanFunction::zero(*k)?;
            let h1 = h1.as_ref().map_or(Ok(zero.clone()), |s| s.load(base, &mut rng, seed))?;
            let h2 = h2.as_ref().map_or(Ok(zero), |s| s.load(base, &mut rng, seed))?;
            outputs.push(("thm2".into(), theorem2_halfconcat(&pi1, &pi2, &h1, &h2)?));
        }
        Recipe::Ghgh { g, h } => {
            let g = g.load(base, &mut rng, seed)?;
            let h = h.load(base, &mut rng, seed)?;
            outputs.push(("ghgh".into(), ghgh(&g, &h)?));
        }
        Recipe::Korsakova { g, alpha } => {
            let g = g.load(base, &mut rng, seed)?;
            let alphas: Vec<u32> = if alpha == "all" {
                (0..g.size()).collect()
            } else {
                vec![hex_u32(alpha)?]
            };
            let base_verdict = report.note_budget(is_in_completed_mm(&g, Some(budget)))?;
            if let Some(v) = &base_verdict {
                report.verdicts.push(LabeledVerdict {
                    subject: "g".into(),
                    verdict: v.clone(),
                });
            }
            for a in alphas {
                let (f, f2) = korsakova_pair(&g, a)?;
                for (tag, h) in [("f", f), ("f-twisted", f2)] {
                    let name = format!("korsakova-{tag}-{a:x}");
                    if let Some(v) = report.note_budget(is_in_completed_mm(&h, Some(budget)))? {
                        if base_verdict.as_ref().is_some_and(|b| b.label() != v.label()) {
                            report.failures.push(format!("{name}: verdict {} differs from g", v.label()));
                        }
                        report.verdicts.push(LabeledVerdict {
                            subject: name.clone(),
                            verdict: v,
                        });
                    }
                    outputs.push((name, h));
                }
            }
        }
        Recipe::Rind { m, images, matrix } => {
            let (pi, a) = match (images, matrix) {
                (Some(images), Some(rows)) => (
                    permutation(*m, images)?,
                    BinaryMatrix::from_rows(2 * m, rows.iter().map(|r| hex_u32(r)).collect::<Result<_>>()?)?,
                ),
                (Some(images), None) => {
                    let pi = permutation(*m, images)?;
                    let a = rind_matrix(&pi, seed, budget)?;
                    (pi, a)
                }
                (None, _) => {
                    let pi = find_unique_msubspace_permutation(*m, 100_000, seed)?;
                    let a = rind_matrix(&pi, seed, budget)?;
                    (pi, a)
                }
            };
            let out = rind_construction(&pi, &a, Some(budget))?;
            params = serde_json::json!({
                "construction": "rind",
                "m": m,
                "images": pi.images_hex(),
                "matrix": a.rows().iter().map(|r| format!("{r:x}")).collect::<Vec<_>>(),
                "unique_subspace": out.subspace.basis_hex(),
                "sum_is_bent": out.sum_is_bent,
            });
            outputs.push(("rind".into(), out.function));
        }
        Recipe::Extend { g, pool, variant } => {
            let g = g.load(base, &mut rng, seed)?;
            let mut pool = pool
                .iter()
                .map(|s| s.load(base, &mut rng, seed))
                .collect::<Result<Vec<_>>>()?;
            if pool.is_empty() {
                pool.push(find_unique_msubspace_bent(g.n_vars(), 100_000, seed)?);
            }
            let out = extend_outside(&g, &pool, *variant, Some(budget))?;
            params["pair"] = serde_json::json!([format!("{:x}", out.pair.0), format!("{:x}", out.pair.1)]);
            params["matrix"] = serde_json::json!(out.matrix.rows().iter().map(|r| format!("{r:x}")).collect::<Vec<_>>());
            outputs.push(("extend".into(), out.function));
        }
        Recipe::Twist { g, q } => {
            let g = g.load(base, &mut rng, seed)?;
            let q = q.load(base, &mut rng, seed)?;
            let (inside, outside) = twist_pair(&g, &q, Some(budget))?;
            outputs.push(("twist-inside".into(), inside));
            outputs.push(("twist-outside".into(), outside));
        }
    }
    fs::create_dir_all(out_dir).map_err(|e| Error::Invalid(format!("{}: {e}", out_dir.display())))?;
    let mut names = Vec::new();
    let summarize = outputs.len() <= 4;
    for (name, f) in &outputs {
        if !crate::walsh::is_bent(f) {
            return Err(Error::NotBent);
        }
        let file = format!("{name}.txt");
        write(&out_dir.join(&file), &format_table(f))?;
        names.push(file);
        if summarize {
            report.spectra.push(spectrum_summary(name, f, None));
        }
    }
    let prov = Provenance {
        construction: recipe.name().into(),
        seed,
        parameters: params,
        outputs: names,
    };
    write(
        &out_dir.join(format!("{}.provenance.json", recipe.name())),
        &(serde_json::to_string_pretty(&prov).expect("provenance serializes") + "\n"),
    )?;
    report.provenance = Some(prov);
    Ok(report)
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

/// Runs the structural condition of `theorem` next to a direct search on
/// seeded samples (or on the supplied functions) and records every
/// disagreement as a failure.
pub fn cmd_verify(theorem: &str, inputs: &[PathBuf], seed: u64, budget: Option<u64>) -> Result<Report> {
    let budget = budget.unwrap_or(DEFAULT_BUDGET);
    let id: TheoremId = theorem.parse()?;
    let mut args = vec![("theorem", id.to_string()), ("seed", seed.to_string())];
    for (i, p) in inputs.iter().enumerate() {
        args.push((["input0", "input1", "input2", "input3"].get(i).copied().unwrap_or("input"), p.display().to_string()));
    }
    let mut report = Report::new("verify", &args, budget);
    let mut pieces = Vec::new();
    for p in inputs {
        let (text, digest) = read_input(p)?;
        report.inputs.push(digest);
        pieces.push(parse_function(&text)?);
    }
    let input = VerifyInput { pieces, seed, budget };
    if let Some(checks) = report.note_budget(verify(id, &input))? {
        for c in &checks {
            if !c.agree {
                report
                    .failures
                    .push(format!("{}: structural {} but direct {}", c.instance, c.structural, c.direct));
            }
        }
        report.checks = checks;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recipe_parsing() {
        let r = Recipe::parse(r#"{"construction": "mm", "m": 2, "images": ["0", "1", "2", "3"]}"#).unwrap();
        assert_eq!(r.name(), "mm");
        let r = Recipe::parse(r#"{"construction": "ghgh", "g": {"random_mm": 6}, "h": {"anf": {"n": 6, "expr": "x1*x4+x2*x5+x3*x6"}}}"#)
            .unwrap();
        assert_eq!(r.name(), "ghgh");
        let err = Recipe::parse("{\"construction\": \"mm\",\n \"m\": }").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn report_json_is_versioned() {
        let r = Report::new("analyze", &[("input", "x".into())], 5);
        let json = r.to_json();
        assert!(json.contains("\"schema_version\": 1"));
        assert!(r.success());
    }
}
