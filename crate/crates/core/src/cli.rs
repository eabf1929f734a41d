//! The `hhcalc` command line: problem specifications in TOML, classes and
//! reports in JSON.
//!
//! ```toml
//! p = 7                      # optional; searched for when absent
//! dim = 2
//! generators = [[[0, 1], [1, 0]]]
//! omega = "standard"         # or an explicit matrix; optional
//!
//! [options]
//! max_group_size = 256
//! max_poly_degree = 3
//! seed = 42
//! volume_normalization = "pfaffian"   # or "undivided-power"
//! ```
//!
//! Matrix entries are integers (reduced mod p) or roots of unity written
//! `z3`, `z3^2`, `-z4`, meaning powers of the primitive `m`-th root
//! `g0^((p-1)/m)` for the smallest primitive root `g0`.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::classfile::{self, ClassFile, SCHEMA_VERSION};
use crate::error::{Error, Result};
use crate::groups::{GroupData, DEFAULT_BOUND};
use crate::hhalgebra::HHRing;
use crate::linalg::Matrix;
use crate::multilinear::subsets;
use crate::oracle;
use crate::polyring::{monomials_of_degree, Monomial, Polynomial};
use crate::scalars::{is_prime, primitive_root_of_unity, PrimeField, Scalar};
use crate::symplectic::{self, SymplecticCtx, VolumeNormalization};
use crate::verify::{self, Property, Verifier, VerifyOptions};

/// Largest prime tried when `p` is not given.
pub const PRIME_SEARCH_LIMIT: u64 = 10_000;

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Symbol(String),
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum OmegaSpec {
    Named(String),
    Matrix(Vec<Vec<Entry>>),
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SpecOptions {
    #[serde(default = "default_bound")]
    pub max_group_size: usize,
    #[serde(default = "default_poly_degree")]
    pub max_poly_degree: u32,
    #[serde(default)]
    pub seed: u64,
    /// `"pfaffian"` (default) or `"undivided-power"`.
    #[serde(default)]
    pub volume_normalization: Option<String>,
}

fn default_bound() -> usize {
    DEFAULT_BOUND
}

fn default_poly_degree() -> u32 {
    3
}

impl Default for SpecOptions {
    fn default() -> Self {
        Self { max_group_size: DEFAULT_BOUND, max_poly_degree: 3, seed: 0, volume_normalization: None }
    }
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    pub p: Option<u64>,
    pub dim: usize,
    pub generators: Vec<Vec<Vec<Entry>>>,
    pub omega: Option<OmegaSpec>,
    #[serde(default)]
    pub options: SpecOptions,
}

/// A spec resolved over a concrete prime.
pub struct Problem {
    pub spec: ProblemSpec,
    pub group: GroupData,
    pub omega: Option<Matrix>,
    /// `"given"` or `"suggested"`.
    pub p_source: &'static str,
}

fn parse_symbol(field: PrimeField, s: &str) -> Result<Scalar> {
    let bad = || Error::Invalid(format!("cannot parse matrix entry {s:?}; expected an integer or z<m>[^<k>]"));
    let t = s.trim();
    let (neg, t) = match t.strip_prefix('-') {
        Some(rest) => (true, rest.trim()),
        None => (false, t),
    };
    let t = t.strip_prefix('z').ok_or_else(bad)?;
    let (m, k) = match t.split_once('^') {
        Some((m, k)) => (m, k.trim().parse::<u64>().map_err(|_| bad())?),
        None => (t, 1),
    };
    let m: u64 = m.trim().parse().map_err(|_| bad())?;
    let v = primitive_root_of_unity(field, m)?.pow(k);
    Ok(if neg { -v } else { v })
}

fn parse_matrix(field: PrimeField, n: usize, rows: &[Vec<Entry>], what: &str) -> Result<Matrix> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Invalid(format!("{what}: expected a {n}×{n} matrix")));
    }
    let mut data = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        let mut out = Vec::with_capacity(n);
        for (j, e) in row.iter().enumerate() {
            out.push(match e {
                Entry::Int(v) => field.elem(*v),
                Entry::Symbol(s) => parse_symbol(field, s).map_err(|e| Error::Invalid(format!("{what}[{i}][{j}]: {e}")))?,
            });
        }
        data.push(out);
    }
    Ok(Matrix::from_scalar_rows(field, &data))
}

impl ProblemSpec {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let spec: ProblemSpec = toml::from_str(text).map_err(|e| Error::Invalid(format!("problem spec: {e}")))?;
        if spec.dim == 0 {
            return Err(Error::Invalid("dim: must be positive".into()));
        }
        if spec.dim > 16 {
            return Err(Error::Invalid("dim: at most 16 is supported".into()));
        }
        if spec.generators.is_empty() {
            return Err(Error::Invalid("generators: at least one generator is required".into()));
        }
        if let Some(p) = spec.p {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
        }
        Ok(spec)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
        Self::from_toml_str(&text)
    }

    /// Builds the group over `p`.
    pub fn build(&self, p: u64) -> Result<(GroupData, Option<Matrix>)> {
        let field = PrimeField::new(p)?;
        let n = self.dim;
        let gens = self
            .generators
            .iter()
            .enumerate()
            .map(|(k, g)| parse_matrix(field, n, g, &format!("generators[{k}]")))
            .collect::<Result<Vec<_>>>()?;
        for (k, g) in gens.iter().enumerate() {
            g.inverse().map_err(|_| Error::Invalid(format!("generators[{k}]: not invertible mod {p}")))?;
        }
        let group = GroupData::generate(field, &gens, self.options.max_group_size)?;
        let omega = match &self.omega {
            None => None,
            Some(OmegaSpec::Named(s)) if s == "standard" => Some(symplectic::standard_omega(field, n)?),
            Some(OmegaSpec::Named(s)) => return Err(Error::Invalid(format!("omega: unknown name {s:?}; use \"standard\" or a matrix"))),
            Some(OmegaSpec::Matrix(rows)) => Some(parse_matrix(field, n, rows, "omega")?),
        };
        Ok((group, omega))
    }

    /// Smallest prime `p > 2 dim` over which the spec builds a group. The
    /// bound keeps every degree `i + j ≤ 2 dim` within reach of the oracle.
    pub fn suggest_prime(&self) -> Result<u64> {
        let mut last = None;
        for p in 2 * self.dim as u64 + 1..=PRIME_SEARCH_LIMIT {
            if !is_prime(p) {
                continue;
            }
            match self.build(p) {
                Ok(_) => return Ok(p),
                Err(e) => last = Some(e),
            }
        }
        Err(Error::Invalid(format!(
            "no prime up to {PRIME_SEARCH_LIMIT} works for this spec (last error: {})",
            last.map_or_else(|| "none".into(), |e| e.to_string())
        )))
    }

    pub fn resolve(self) -> Result<Problem> {
        let (p, p_source) = match self.p {
            Some(p) => (p, "given"),
            None => (self.suggest_prime()?, "suggested"),
        };
        let (group, omega) = self.build(p)?;
        Ok(Problem { spec: self, group, omega, p_source })
    }
}

impl Problem {
    pub fn symplectic(&self) -> Result<Option<SymplecticCtx<'_>>> {
        let normalization = match self.spec.options.volume_normalization.as_deref() {
            None | Some("pfaffian") => VolumeNormalization::Pfaffian,
            Some("undivided-power") => VolumeNormalization::UndividedPower,
            Some(other) => {
                return Err(Error::Invalid(format!(
                    "options.volume_normalization: unknown value {other:?}; use \"pfaffian\" or \"undivided-power\""
                )))
            }
        };
        self.omega.clone().map(|w| SymplecticCtx::with_normalization(&self.group, w, normalization)).transpose()
    }
}

fn residues(m: &Matrix) -> Vec<Vec<u64>> {
    m.to_residue_rows()
}

fn columns(m: &Matrix) -> Vec<Vec<u64>> {
    m.column_vectors().into_iter().map(|c| c.into_iter().map(|s| s.value()).collect()).collect()
}

#[derive(Serialize)]
struct ElementInfo {
    index: usize,
    matrix: Vec<Vec<u64>>,
    order: usize,
    codim: usize,
    fixed_basis: Vec<Vec<u64>>,
    complement_basis: Vec<Vec<u64>>,
    eigenvalues: Vec<u64>,
}

#[derive(Serialize)]
struct VolumeInfo {
    index: usize,
    /// `s_g` as a multiple of the complement frame volume.
    scale: u64,
}

#[derive(Serialize)]
struct SymplecticInfo {
    omega: Vec<Vec<u64>>,
    normalization: &'static str,
    volumes: Vec<VolumeInfo>,
}

#[derive(Serialize)]
struct GroupInfo {
    schema_version: u32,
    p: u64,
    p_source: &'static str,
    dim: usize,
    order: usize,
    exponent: u64,
    zeta: u64,
    elements: Vec<ElementInfo>,
    multiplication: Vec<Vec<usize>>,
    intersection_condition: Vec<Vec<bool>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    symplectic: Option<SymplecticInfo>,
}

pub fn group_info(problem: &Problem) -> Result<serde_json::Value> {
    let g = &problem.group;
    let n = g.order();
    let elements = (0..n)
        .map(|i| {
            let fr = g.frame(i);
            ElementInfo {
                index: i,
                matrix: residues(g.element(i)),
                order: g.element_order(i),
                codim: g.codim(i),
                fixed_basis: columns(&fr.tangent_basis()),
                complement_basis: columns(&fr.normal_basis()),
                eigenvalues: fr.eigenvalues().iter().map(|s| s.value()).collect(),
            }
        })
        .collect();
    let symplectic = problem.symplectic()?.map(|ctx| SymplecticInfo {
        omega: residues(ctx.omega()),
        normalization: ctx.normalization().name(),
        volumes: (0..n).map(|i| VolumeInfo { index: i, scale: ctx.volume_scale(i).value() }).collect(),
    });
    let info = GroupInfo {
        schema_version: SCHEMA_VERSION,
        p: g.field().modulus(),
        p_source: problem.p_source,
        dim: g.dim(),
        order: n,
        exponent: g.ctx().exponent(),
        zeta: g.ctx().zeta().value(),
        elements,
        multiplication: (0..n).map(|a| (0..n).map(|b| g.multiply(a, b)).collect()).collect(),
        intersection_condition: (0..n).map(|a| (0..n).map(|b| g.intersection_condition(a, b)).collect()).collect(),
        symplectic,
    };
    Ok(serde_json::to_value(info).expect("serializable"))
}

#[derive(Serialize)]
struct BasisElementCount {
    index: usize,
    codim: usize,
    dim: usize,
}

#[derive(Serialize)]
struct BasisReport {
    schema_version: u32,
    p: u64,
    degree: usize,
    poly_degree: u32,
    per_element: Vec<BasisElementCount>,
    total_dim: usize,
    invariant_dim: usize,
    invariant_basis: Vec<ClassFile>,
}

/// Dimensions of the degree-`i`, polynomial-degree-`D` part of
/// `⊕_g Λ^{i-d_g} V^g ⊗ Λ^{d_g}(V^g)^∨ ⊗ k[V^g]_D` and of its invariants,
/// with an echelon basis of the invariants.
pub fn hh_basis(problem: &Problem, degree: usize, poly_degree: u32) -> Result<serde_json::Value> {
    let grp = &problem.group;
    let field = grp.field();
    let ring = HHRing::new(grp);
    let mut keys: Vec<(usize, u64, Monomial)> = Vec::new();
    let mut per_element = Vec::new();
    for g in 0..grp.order() {
        let d = grp.codim(g);
        let r = grp.dim() - d;
        let before = keys.len();
        if degree >= d && degree - d <= r {
            let monos = monomials_of_degree(r, poly_degree);
            for m in subsets(r, degree - d) {
                for mono in &monos {
                    keys.push((g, m, mono.clone()));
                }
            }
        }
        per_element.push(BasisElementCount { index: g, codim: d, dim: keys.len() - before });
    }
    let index: BTreeMap<(usize, u64, Monomial), usize> = keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
    let mut rows = Vec::with_capacity(keys.len());
    for (g, m, mono) in &keys {
        let mut c = crate::hhalgebra::HHClass::zero(degree);
        c.add_raw(*g, *m, &Polynomial::monomial(field, mono.clone(), field.one()));
        let pc = ring.invariant_project(&c);
        let mut row = vec![field.zero(); keys.len()];
        for (h, comp) in pc.components() {
            for (&mask, f) in comp {
                for (mo, coef) in f.terms() {
                    row[index[&(h, mask, mo.clone())]] = coef;
                }
            }
        }
        rows.push(row);
    }
    let (invariant_dim, invariant_basis) = if keys.is_empty() {
        (0, Vec::new())
    } else {
        let (rref, pivots) = Matrix::from_scalar_rows(field, &rows).rref();
        let basis = (0..pivots.len())
            .map(|i| {
                let mut c = crate::hhalgebra::HHClass::zero(degree);
                for (k, (g, m, mono)) in keys.iter().enumerate() {
                    let v = rref[(i, k)];
                    if !v.is_zero() {
                        c.add_raw(*g, *m, &Polynomial::monomial(field, mono.clone(), v));
                    }
                }
                ClassFile::from_class(grp, &c, false)
            })
            .collect();
        (pivots.len(), basis)
    };
    let report = BasisReport {
        schema_version: SCHEMA_VERSION,
        p: field.modulus(),
        degree,
        poly_degree,
        per_element,
        total_dim: keys.len(),
        invariant_dim,
        invariant_basis,
    };
    Ok(serde_json::to_value(report).expect("serializable"))
}

fn load_class(problem: &Problem, path: &Path) -> Result<crate::hhalgebra::HHClass> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
    classfile::from_json(&text).and_then(|f| f.to_class(&problem.group)).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

#[derive(Serialize)]
struct ProductStatsReport {
    component_pairs: usize,
    term_pairs: usize,
    vanishing_component_pairs: usize,
    vanishing_term_pairs: usize,
    vanishing: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct OracleReport {
    product: ClassFile,
    equal: bool,
}

#[derive(Serialize)]
struct MultiplyReport {
    schema_version: u32,
    p: u64,
    degree: usize,
    product: ClassFile,
    stats: ProductStatsReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleReport>,
}

#[derive(Parser, Debug)]
#[command(name = "hhcalc", version, about = "Hochschild cohomology of k[G] ⋉ k[V] over F_p")]
pub struct Cli {
    /// Problem specification (TOML).
    #[arg(long, short, global = true)]
    pub spec: Option<PathBuf>,
    /// Write the JSON result here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Elements, eigenframes, support table and symplectic volumes.
    GroupInfo,
    /// Dimensions and an invariant basis in one bidegree.
    HhBasis {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        poly_degree: u32,
    },
    /// Product of two class files.
    Multiply {
        a: PathBuf,
        b: PathBuf,
        /// Also compute the cochain-level product and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Average a class over the conjugation action.
    InvariantProject { a: PathBuf },
    /// Run property checks; exit status 2 if any fails.
    Verify {
        /// Property name or `all`; repeatable.
        #[arg(long = "property", default_value = "all")]
        properties: Vec<String>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Defaults to the spec's `options.seed`.
        #[arg(long)]
        seed: Option<u64>,
        /// Defaults to the spec's `options.max_poly_degree`.
        #[arg(long)]
        max_poly_degree: Option<u32>,
    },
    /// Smallest prime over which the spec's generators give a usable group.
    SuggestPrime,
}

/// Outcome of a subcommand: JSON to emit and the exit status.
pub struct Outcome {
    pub json: String,
    pub status: i32,
}

fn pretty(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    let spec_path = cli.spec.as_deref().ok_or_else(|| Error::Invalid("--spec <FILE> is required".into()))?;
    let spec = ProblemSpec::load(spec_path)?;
    if let Command::SuggestPrime = cli.command {
        let p = spec.suggest_prime()?;
        let (group, _) = spec.build(p)?;
        let v = serde_json::json!({
            "schema_version": SCHEMA_VERSION,
            "p": p,
            "group_order": group.order(),
            "exponent": group.ctx().exponent(),
            "primitive_root": group.field().smallest_primitive_root().value(),
            "zeta": group.ctx().zeta().value(),
        });
        return Ok(Outcome { json: pretty(&v), status: 0 });
    }
    let problem = spec.resolve()?;
    let ok = |json| Ok(Outcome { json, status: 0 });
    match &cli.command {
        Command::GroupInfo => ok(pretty(&group_info(&problem)?)),
        Command::HhBasis { degree, poly_degree } => ok(pretty(&hh_basis(&problem, *degree, *poly_degree)?)),
        Command::Multiply { a, b, oracle: with_oracle } => {
            let (a, b) = (load_class(&problem, a)?, load_class(&problem, b)?);
            let ring = HHRing::new(&problem.group);
            let (prod, stats) = ring.product_with_stats(&a, &b)?;
            let oracle = if *with_oracle {
                let c = oracle::oracle_product(&problem.group, &a, &b)?;
                Some(OracleReport { equal: c == prod, product: ClassFile::from_class(&problem.group, &c, true) })
            } else {
                None
            };
            let status = if oracle.as_ref().is_some_and(|o| !o.equal) { 2 } else { 0 };
            let report = MultiplyReport {
                schema_version: SCHEMA_VERSION,
                p: problem.group.field().modulus(),
                degree: prod.degree(),
                product: ClassFile::from_class(&problem.group, &prod, true),
                stats: ProductStatsReport {
                    component_pairs: stats.component_pairs,
                    term_pairs: stats.term_pairs,
                    vanishing_component_pairs: stats.vanishing_component_pairs,
                    vanishing_term_pairs: stats.vanishing_term_pairs,
                    vanishing: stats.vanishing,
                },
                oracle,
            };
            Ok(Outcome { json: pretty(&report), status })
        }
        Command::InvariantProject { a } => {
            let a = load_class(&problem, a)?;
            let ring = HHRing::new(&problem.group);
            ok(pretty(&ClassFile::from_class(&problem.group, &ring.invariant_project(&a), true)))
        }
        Command::Verify { properties, trials, seed, max_poly_degree } => {
            let mut props = Vec::new();
            for name in properties {
                if name == "all" {
                    props.extend(Property::ALL);
                } else {
                    props.push(Property::from_name(name)?);
                }
            }
            props.sort();
            props.dedup();
            let opts = VerifyOptions {
                trials: *trials,
                seed: seed.unwrap_or(problem.spec.options.seed),
                max_poly_degree: max_poly_degree.unwrap_or(problem.spec.options.max_poly_degree),
                ..VerifyOptions::default()
            };
            let v = Verifier::new(&problem.group, problem.symplectic()?);
            let report = v.run_all(&props, &opts)?;
            let mut json = verify::report_json(&report);
            json.push('\n');
            Ok(Outcome { json, status: if report.all_passed { 0 } else { 2 } })
        }
        Command::SuggestPrime => unreachable!("handled above"),
    }
}

/// Parses `args`, runs, writes results; returns the process exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if e.use_stderr() { write!(stderr, "{e}") } else { write!(stdout, "{e}") };
            return code;
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &out.json).map_err(|e| format!("{}: {e}", path.display())),
                None => stdout.write_all(out.json.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return 1;
            }
            out.status
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SWAP: &str = "p = 7\ndim = 2\ngenerators = [[[0, 1], [1, 0]]]\n";

    #[test]
    fn parses_specs() {
        let spec = ProblemSpec::from_toml_str(SWAP).unwrap();
        assert_eq!(spec.options, SpecOptions::default());
        let problem = spec.resolve().unwrap();
        assert_eq!(problem.group.order(), 2);
        assert_eq!(problem.p_source, "given");
    }

    #[test]
    fn symbolic_entries() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(parse_symbol(f, "z3").unwrap().value(), 2);
        assert_eq!(parse_symbol(f, "z3^2").unwrap().value(), 4);
        assert_eq!(parse_symbol(f, "-z2").unwrap().value(), 1);
        assert!(parse_symbol(f, "z5").is_err());
        assert!(parse_symbol(f, "y3").is_err());
    }

    #[test]
    fn suggests_primes() {
        let text = "dim = 2\ngenerators = [[[\"z3\", 0], [0, \"z3^2\"]]]\nomega = \"standard\"\n";
        let spec = ProblemSpec::from_toml_str(text).unwrap();
        assert_eq!(spec.suggest_prime().unwrap(), 7);
        let problem = spec.resolve().unwrap();
        assert_eq!(problem.p_source, "suggested");
        assert_eq!(problem.group.order(), 3);
        assert!(problem.symplectic().unwrap().is_some());
        let neg = ProblemSpec::from_toml_str("dim = 2\ngenerators = [[[-1, 0], [0, -1]]]\n").unwrap();
        assert_eq!(neg.suggest_prime().unwrap(), 5);
        let s3 = ProblemSpec::from_toml_str("dim = 3\ngenerators = [[[0,1,0],[1,0,0],[0,0,1]], [[0,0,1],[1,0,0],[0,1,0]]]").unwrap();
        assert_eq!(s3.suggest_prime().unwrap(), 7);
    }

    #[test]
    fn validation_errors_name_the_field() {
        let e = ProblemSpec::from_toml_str("p = 8\ndim = 2\ngenerators = [[[1,0],[0,1]]]").unwrap_err();
        assert_eq!(e, Error::NotPrime(8));
        let e = ProblemSpec::from_toml_str("p = 7\ndim = 2\ngenerators = [[[1,0]]]").unwrap().resolve().err().unwrap();
        assert!(e.to_string().contains("generators[0]"), "{e}");
        let e = ProblemSpec::from_toml_str("p = 7\ndim = 2\ngenerators = [[[1,1],[1,1]]]").unwrap().resolve().err().unwrap();
        assert!(e.to_string().contains("not invertible"), "{e}");
        let e = ProblemSpec::from_toml_str("p = 7\ndim = 2\ngenerators = []\nbogus = 1").unwrap_err();
        assert!(e.to_string().contains("bogus"), "{e}");
        let e =
            ProblemSpec::from_toml_str("p = 7\ndim = 2\ngenerators = [[[0,1],[1,0]]]\nomega = \"weird\"").unwrap().resolve().err().unwrap();
        assert!(e.to_string().contains("omega"), "{e}");
    }

    #[test]
    fn basis_dimensions_for_the_swap() {
        let problem = ProblemSpec::from_toml_str(SWAP).unwrap().resolve().unwrap();
        // degree 0, D = 1: x1, x2 at e; only x1 + x2 is invariant
        let v = hh_basis(&problem, 0, 1).unwrap();
        assert_eq!((v["total_dim"].as_u64(), v["invariant_dim"].as_u64()), (Some(2), Some(1)));
        // degree 1, D = 0: v1, v2 at e and 1 ⊗ w2 at s, which the swap negates
        let v = hh_basis(&problem, 1, 0).unwrap();
        assert_eq!((v["total_dim"].as_u64(), v["invariant_dim"].as_u64()), (Some(3), Some(1)));
        // degree 2, D = 0: v1∧v2 at e and w1 ⊗ w2 at s are both negated
        let v = hh_basis(&problem, 2, 0).unwrap();
        assert_eq!((v["total_dim"].as_u64(), v["invariant_dim"].as_u64()), (Some(2), Some(0)));
    }
}
