//! Seeded property checks over a concrete group, reported as JSON.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classfile::ClassFile;
use crate::error::{Error, Result};
use crate::groups::GroupData;
use crate::hhalgebra::{HHClass, HHRing};
use crate::multilinear::{subsets, Mask};
use crate::oracle::{self, KoszulComplex};
use crate::polyring::{Monomial, Polynomial};
use crate::scalars::PrimeField;
use crate::symplectic::{self, SymplecticCtx, SymplecticHHClass};

pub const REPORT_SCHEMA_VERSION: u32 = 1;
const MAX_COUNTEREXAMPLES: usize = 3;

/// A polynomial with one to three terms of degree at most `max_degree`.
pub fn random_polynomial(rng: &mut impl Rng, field: PrimeField, nvars: usize, max_degree: u32) -> Polynomial {
    let mut out = Polynomial::zero(field, nvars);
    for _ in 0..rng.gen_range(1..=3) {
        let mut exps = vec![0u32; nvars];
        if nvars > 0 {
            for _ in 0..rng.gen_range(0..=max_degree) {
                exps[rng.gen_range(0..nvars)] += 1;
            }
        }
        let c = field.elem(rng.gen_range(1..field.modulus()) as i64);
        out.add_term(Monomial(exps), c);
    }
    out
}

/// A component at `g` for a class of the given degree, or `None` if `d_g` is too large.
pub fn random_component(rng: &mut impl Rng, group: &GroupData, g: usize, degree: usize, max_poly_degree: u32) -> Option<HHClass> {
    let d = group.codim(g);
    if degree < d || degree - d > group.dim() - d {
        return None;
    }
    let r = group.dim() - d;
    let masks = subsets(r, degree - d);
    let mut out = HHClass::zero(degree);
    for _ in 0..rng.gen_range(1..=2) {
        let mask = *masks.choose(rng)?;
        out.add_raw(g, mask, &random_polynomial(rng, group.field(), r, max_poly_degree));
    }
    Some(out)
}

/// Sum of components at up to three random elements admitting the degree.
pub fn random_class(rng: &mut impl Rng, group: &GroupData, degree: usize, max_poly_degree: u32) -> HHClass {
    let candidates: Vec<usize> = (0..group.order()).filter(|&g| group.codim(g) <= degree).collect();
    let k = rng.gen_range(1..=3.min(candidates.len().max(1)));
    let mut out = HHClass::zero(degree);
    for &g in candidates.choose_multiple(rng, k) {
        if let Some(c) = random_component(rng, group, g, degree, max_poly_degree) {
            out = out.add(&c).expect("same degree");
        }
    }
    out
}

/// Degree pairs `(i, j)` with `0 ≤ i, j ≤ n` and `i + j < p`.
pub fn admissible_degree_pairs(group: &GroupData) -> Vec<(usize, usize)> {
    let n = group.dim();
    let p = group.field().modulus() as usize;
    (0..=n).flat_map(|i| (0..=n).map(move |j| (i, j))).filter(|&(i, j)| i + j < p).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Property {
    KoszulDims,
    OracleEquivalence,
    Vanishing,
    UnitLaw,
    GradedCommutativity,
    Associativity,
    FixedSpaceIntersection,
    Equivariance,
    ProjectionIdempotent,
    HkrDegeneration,
    Symplectic,
    /// Associativity on classes that are not projected to invariants.
    /// Reported, never counted toward the verdict.
    AssociativityFull,
    /// Graded commutativity without projecting; informational as above.
    GradedCommutativityFull,
}

impl Property {
    pub const ALL: [Property; 13] = [
        Property::KoszulDims,
        Property::OracleEquivalence,
        Property::Vanishing,
        Property::UnitLaw,
        Property::GradedCommutativity,
        Property::Associativity,
        Property::FixedSpaceIntersection,
        Property::Equivariance,
        Property::ProjectionIdempotent,
        Property::HkrDegeneration,
        Property::Symplectic,
        Property::AssociativityFull,
        Property::GradedCommutativityFull,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::KoszulDims => "koszul-dims",
            Property::OracleEquivalence => "oracle-equivalence",
            Property::Vanishing => "vanishing",
            Property::UnitLaw => "unit-law",
            Property::GradedCommutativity => "graded-commutativity",
            Property::Associativity => "associativity",
            Property::FixedSpaceIntersection => "fixed-space-intersection",
            Property::Equivariance => "equivariance",
            Property::ProjectionIdempotent => "projection-idempotent",
            Property::HkrDegeneration => "hkr-degeneration",
            Property::Symplectic => "symplectic",
            Property::AssociativityFull => "associativity-full",
            Property::GradedCommutativityFull => "graded-commutativity-full",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|p| p.name() == name)
            .ok_or_else(|| Error::Invalid(format!("unknown property {name:?}; expected one of {}", Self::names().join(", "))))
    }

    pub fn names() -> Vec<&'static str> {
        Self::ALL.iter().map(|p| p.name()).collect()
    }

    pub fn informational(self) -> bool {
        matches!(self, Property::AssociativityFull | Property::GradedCommutativityFull)
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub trials: usize,
    pub seed: u64,
    pub max_poly_degree: u32,
    /// Polynomial degrees `0..=koszul_max_degree` for the Koszul comparison.
    pub koszul_max_degree: u32,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { trials: 100, seed: 0, max_poly_degree: 3, koszul_max_degree: 4 }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Counterexample {
    pub description: String,
    pub classes: Vec<ClassFile>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PropertyReport {
    pub name: String,
    pub status: Status,
    pub informational: bool,
    pub checks: usize,
    pub failures: usize,
    pub counters: BTreeMap<String, u64>,
    pub counterexamples: Vec<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl PropertyReport {
    fn new(p: Property) -> Self {
        Self {
            name: p.name().to_string(),
            status: Status::Pass,
            informational: p.informational(),
            checks: 0,
            failures: 0,
            counters: BTreeMap::new(),
            counterexamples: Vec::new(),
            note: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    fn check(&mut self, ok: bool, counterexample: impl FnOnce() -> Counterexample) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            self.status = Status::Fail;
            if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                self.counterexamples.push(counterexample());
            }
        }
    }

    fn bump(&mut self, key: &str, by: u64) {
        *self.counters.entry(key.to_string()).or_default() += by;
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub p: u64,
    pub dim: usize,
    pub group_order: usize,
    pub seed: u64,
    pub trials: usize,
    pub max_poly_degree: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub volume_normalization: Option<&'static str>,
    pub properties: Vec<PropertyReport>,
    pub all_passed: bool,
}

pub struct Verifier<'a> {
    group: &'a GroupData,
    ring: HHRing<'a>,
    sympl: Option<SymplecticCtx<'a>>,
}

fn only_component(a: &HHClass, g: usize) -> HHClass {
    let mut out = HHClass::zero(a.degree());
    if let Some(comp) = a.component(g) {
        for (&m, f) in comp {
            out.add_raw(g, m, f);
        }
    }
    out
}

impl<'a> Verifier<'a> {
    pub fn new(group: &'a GroupData, sympl: Option<SymplecticCtx<'a>>) -> Self {
        Self { group, ring: HHRing::new(group), sympl }
    }

    pub fn ring(&self) -> &HHRing<'a> {
        &self.ring
    }

    fn encode(&self, a: &HHClass) -> ClassFile {
        ClassFile::from_class(self.group, a, false)
    }

    fn example(&self, description: String, classes: &[&HHClass]) -> Counterexample {
        Counterexample { description, classes: classes.iter().map(|c| self.encode(c)).collect() }
    }

    pub fn run_all(&self, properties: &[Property], opts: &VerifyOptions) -> Result<VerifyReport> {
        let mut reports = Vec::new();
        for &p in properties {
            reports.push(self.run(p, opts)?);
        }
        let all_passed = reports.iter().all(|r| r.informational || r.passed());
        Ok(VerifyReport {
            schema_version: REPORT_SCHEMA_VERSION,
            p: self.group.field().modulus(),
            dim: self.group.dim(),
            group_order: self.group.order(),
            seed: opts.seed,
            trials: opts.trials,
            max_poly_degree: opts.max_poly_degree,
            volume_normalization: self.sympl.as_ref().map(|s| s.normalization().name()),
            properties: reports,
            all_passed,
        })
    }

    pub fn run(&self, property: Property, opts: &VerifyOptions) -> Result<PropertyReport> {
        let salt = (Property::ALL.iter().position(|&p| p == property).unwrap() as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ salt);
        let mut rep = PropertyReport::new(property);
        match property {
            Property::KoszulDims => self.koszul_dims(&mut rep, opts),
            Property::OracleEquivalence => self.oracle_equivalence(&mut rep, &mut rng, opts)?,
            Property::Vanishing => self.vanishing(&mut rep, &mut rng, opts)?,
            Property::UnitLaw => self.unit_law(&mut rep, &mut rng, opts)?,
            Property::GradedCommutativity => self.graded_commutativity(&mut rep, &mut rng, opts, true)?,
            Property::GradedCommutativityFull => self.graded_commutativity(&mut rep, &mut rng, opts, false)?,
            Property::Associativity => self.associativity(&mut rep, &mut rng, opts, true)?,
            Property::AssociativityFull => self.associativity(&mut rep, &mut rng, opts, false)?,
            Property::FixedSpaceIntersection => self.fixed_space_intersection(&mut rep),
            Property::Equivariance => self.equivariance(&mut rep, &mut rng, opts)?,
            Property::ProjectionIdempotent => self.projection(&mut rep, &mut rng, opts),
            Property::HkrDegeneration => self.hkr_degeneration(&mut rep, &mut rng, opts)?,
            Property::Symplectic => self.symplectic(&mut rep, &mut rng, opts)?,
        }
        Ok(rep)
    }

    fn random_degree(&self, rng: &mut ChaCha8Rng) -> usize {
        rng.gen_range(0..=self.group.dim())
    }

    fn koszul_dims(&self, rep: &mut PropertyReport, opts: &VerifyOptions) {
        let n = self.group.dim();
        for g in 0..self.group.order() {
            let k = KoszulComplex::new(self.group, g);
            for q in 0..=n {
                for dd in 0..=opts.koszul_max_degree {
                    let got = k.cohomology_dim(q, dd).expect("q ≤ n");
                    let want = oracle::closed_form_dim(self.group, g, q, dd);
                    rep.check(got == want, || Counterexample {
                        description: format!("element {g}, q = {q}, D = {dd}: Koszul {got}, closed form {want}"),
                        classes: vec![],
                    });
                    if q + 2 <= n {
                        let ok = k.square_vanishes(q, dd);
                        rep.check(ok, || Counterexample {
                            description: format!("element {g}: d∘d ≠ 0 at q = {q}, D = {dd}"),
                            classes: vec![],
                        });
                    }
                }
            }
        }
    }

    fn oracle_equivalence(&self, rep: &mut PropertyReport, rng: &mut ChaCha8Rng, opts: &VerifyOptions) -> Result<()> {
        let pairs = admissible_degree_pairs(self.group);
        for t in 0..opts.trials {
            let (i, j) = pairs[t % pairs.len()];
            let a = random_class(rng, self.group, i, opts.max_poly_degree);
            let b = random_class(rng, self.group, j, opts.max_poly_degree);
            let (closed, stats) = self.ring.product_with_stats(&a, &b)?;
            let cochain = oracle::oracle_product(self.group, &a, &b)?;
            rep.check(closed == cochain, || {
                self.example(format!("degrees ({i}, {j}): closed form differs from the cochain product"), &[&a, &b, &closed, &cochain])
            });
            rep.bump("term_pairs", stats.term_pairs as u64);
            rep.bump("vanishing_term_pairs", stats.vanishing_term_pairs as u64);
            rep.bump("vanishing_component_pairs", stats.vanishing_component_pairs as u64);
            if !closed.is_zero() {
                rep.bump("nonzero_products", 1);
            }
            for &(g, h) in &stats.vanishing {
                let (ag, bh) = (only_component(&a, g), only_component(&b, h));
                let c = oracle::oracle_product(self.group, &ag, &bh)?;
                rep.check(c.is_zero(), || {
                    self.example(
                        format!("pair ({g}, {h}) violates the support condition but the cochain product is nonzero"),
                        &[&ag, &bh, &c],
                    )
                });
                rep.bump("vanishing_confirmed_by_oracle", 1);
            }
        }
        Ok(())
    }

    fn vanishing(&self, rep: &mut PropertyReport, rng: &mut ChaCha8Rng, opts: &VerifyOptions) -> Result<()> {
        let n = self.group.dim();
        let p = self.group.field().modulus() as usize;
        for g in 0..self.group.order() {
            for h in 0..self.group.order() {
                if self.group.intersection_condition(g, h) {
                    continue;
                }
                rep.bump("pairs", 1);
                let (dg, dh) = (self.group.codim(g), self.group.codim(h));
                for _ in 0..opts.trials.clamp(1, 4) {
                    let i = rng.gen_range(dg..=n);
                    let j = rng.gen_range(dh..=n);
                    if i + j >= p {
                        continue;
                    }
                    let a = random_component(rng, self.group, g, i, opts.max_poly_degree).expect("degree admissible");
                    let b = random_component(rng, self.group, h, j, opts.max_poly_degree).expect("degree admissible");
                    let closed = self.ring.product(&a, &b)?;
                    let cochain = oracle::oracle_product(self.group, &a, &b)?;
                    rep.check(closed.is_zero() && cochain.is_zero(), || {
                        self.example(format!("elements ({g}, {h}) with overlapping complements"), &[&a, &b, &cochain])
                    });
                }
            }
        }
        Ok(())
    }

    fn unit_law(&self, rep: &mut PropertyReport, rng: &mut ChaCha8Rng, opts: &VerifyOptions) -> Result<()> {
        let unit = self.ring.unit();
        for _ in 0..opts.trials {
            let a = {
                let d = self.random_degree(rng);
                random_class(rng, self.group, d, opts.max_poly_degree)
            };
            let left = self.ring.product(&unit, &a)?;
            let right = self.ring.product(&a, &unit)?;
            rep.check(left == a && right == a, || self.example("1·a or a·1 differs from a".into(), &[&a, &left, &right]));
        }
        Ok(())
    }

    fn invariant_class(&self, rng: &mut ChaCha8Rng, degree: usize, opts: &VerifyOptions) -> HHClass {
        self.ring.invariant_project(&random_class(rng, self.group, degree, opts.max_poly_degree))
    }

    fn graded_commutativity(&self, rep: &mut PropertyReport, rng: &mut ChaCha8Rng, opts: &VerifyOptions, invariant: bool) -> Result<()> {
        let field = self.group.field();
        for _ in 0..opts.trials {
            let (i, j) = (self.random_degree(rng), self.random_degree(rng));
            let (a, b) = if invariant {
                (self.invariant_class(rng, i, opts), self.invariant_class(rng, j, opts))
            } else {
                (random_class(rng, self.group, i, opts.max_poly_degree), random_class(rng, self.group, j, opts.max_poly_degree))
            };
            let ab = self.ring.product(&a, &b)?;
            let ba = self.ring.product(&b, &a)?.scale(field.one().sign(i * j));
            if !ab.is_zero() {
                rep.bump("nonzero_products", 1);
            }
            rep.check(ab == ba, || self.example(format!("a·b ≠ (-1)^({i}·{j}) b·a"), &[&a, &b, &ab, &ba]));
        }
        if !invariant {
            rep.note = Some("classes are not projected to invariants; for nonabelian groups a·b and b·a live at gh and hg, so failures are expected and do not affect the verdict".into());
        }
        Ok(())
    }

    fn associativity(&self, rep: &mut PropertyReport, rng: &mut ChaCha8Rng, opts: &VerifyOptions, invariant: bool) -> Result<()> {
        for _ in 0..opts.trials {
            let degrees = [self.random_degree(rng), self.random_degree(rng), self.random_degree(rng)];
            let [a, b, c] = degrees.map(|d| {
                if invariant {
                    self.invariant_class(rng, d, opts)
                } else {
                    random_class(rng, self.group, d, opts.max_poly_degree)
                }
            });
            let left = self.ring.product(&self.ring.product(&a, &b)?, &c)?;
            let right = self.ring.product(&a, &self.ring.product(&b, &c)?)?;
            if !left.is_zero() {
                rep.bump("nonzero_products", 1);
            }
            rep.check(left == right, || self.example("(a·b)·c ≠ a·(b·c)".into(), &[&a, &b, &c, &left, &right]));
        }
        if !invariant {
            rep.note = Some(
                "classes are not projected to invariants; associativity is not expected there and this result does not affect the verdict"
                    .into(),
            );
        }
        Ok(())
    }

    fn fixed_space_intersection(&self, rep: &mut PropertyReport) {
        let grp = self.group;
        for g in 0..grp.order() {
            for h in 0..grp.order() {
                if !grp.intersection_condition(g, h) {
                    continue;
                }
                rep.bump("pairs_with_trivial_intersection", 1);
                let u = grp.multiply(g, h);
                let meet = grp.data(g).fixed.intersection(&grp.data(h).fixed);
                let ok = meet == grp.data(u).fixed;
                rep.check(ok, || Counterexample { description: format!("V^(gh) ≠ V^g ∩ V^h for g = {g}, h = {h}"), classes: vec![] });
            }
        }
    }

    fn equivariance(&self, rep: &mut PropertyReport, rng: &mut ChaCha8Rng, opts: &VerifyOptions) -> Result<()> {
        for _ in 0..opts.trials {
            let h = rng.gen_range(0..self.group.order());
            let a = {
                let d = self.random_degree(rng);
                random_class(rng, self.group, d, opts.max_poly_degree)
            };
            let b = {
                let d = self.random_degree(rng);
                random_class(rng, self.group, d, opts.max_poly_degree)
            };
            let lhs = self.ring.conjugation_action(h, &self.ring.product(&a, &b)?);
            let rhs = self.ring.product(&self.ring.conjugation_action(h, &a), &self.ring.conjugation_action(h, &b))?;
            rep.check(lhs == rhs, || self.example(format!("conjugation by element {h} does not commute with the product"), &[&a, &b]));
        }
        Ok(())
    }

    fn projection(&self, rep: &mut PropertyReport, rng: &mut ChaCha8Rng, opts: &VerifyOptions) {
        for _ in 0..opts.trials {
            let a = {
                let d = self.random_degree(rng);
                random_class(rng, self.group, d, opts.max_poly_degree)
            };
            let pa = self.ring.invariant_project(&a);
            let ppa = self.ring.invariant_project(&pa);
            rep.check(pa == ppa && self.ring.is_invariant(&pa), || {
                self.example("projection is not an idempotent onto invariants".into(), &[&a, &pa])
            });
        }
    }

    /// Ambient `Λ V ⊗ k[V]` form of a class supported at the identity.
    fn ambient(&self, a: &HHClass) -> Result<BTreeMap<Mask, Polynomial>> {
        let mut out: BTreeMap<Mask, Polynomial> = BTreeMap::new();
        for t in self.ring.terms(a) {
            let (xi, f) = oracle::include_term(self.group, &t)?;
            for (m, c) in xi.terms() {
                let add = f.scale(c);
                let merged = match out.remove(&m) {
                    Some(old) => &old + &add,
                    None => add,
                };
                if !merged.is_zero() {
                    out.insert(m, merged);
                }
            }
        }
        Ok(out)
    }

    fn hkr_degeneration(&self, rep: &mut PropertyReport, rng: &mut ChaCha8Rng, opts: &VerifyOptions) -> Result<()> {
        let field = self.group.field();
        for _ in 0..opts.trials {
            let (i, j) = (self.random_degree(rng), self.random_degree(rng));
            let a = random_component(rng, self.group, 0, i, opts.max_poly_degree).expect("identity admits every degree");
            let b = random_component(rng, self.group, 0, j, opts.max_poly_degree).expect("identity admits every degree");
            let prod = self.ring.product(&a, &b)?;
            let mut expected: BTreeMap<Mask, Polynomial> = BTreeMap::new();
            for (ma, fa) in self.ambient(&a)? {
                for (mb, fb) in self.ambient(&b)? {
                    let Some(neg) = crate::multilinear::merge_sign(ma, mb) else { continue };
                    let f = (&fa * &fb).scale(if neg { -field.one() } else { field.one() });
                    let merged = match expected.remove(&(ma | mb)) {
                        Some(old) => &old + &f,
                        None => f,
                    };
                    if !merged.is_zero() {
                        expected.insert(ma | mb, merged);
                    }
                }
            }
            let got = self.ambient(&prod)?;
            rep.check(got == expected && prod.support().all(|g| g == 0), || {
                self.example(format!("degrees ({i}, {j}): product differs from the wedge product"), &[&a, &b, &prod])
            });
        }
        Ok(())
    }

    fn symplectic(&self, rep: &mut PropertyReport, rng: &mut ChaCha8Rng, opts: &VerifyOptions) -> Result<()> {
        let Some(ctx) = &self.sympl else {
            rep.status = Status::Skipped;
            rep.note = Some("no symplectic form in the problem specification".into());
            return Ok(());
        };
        let grp = self.group;
        for g in 0..grp.order() {
            for h in 0..grp.order() {
                if grp.intersection_condition(g, h) {
                    rep.bump("multiplicativity_pairs", 1);
                    let ok = ctx.is_multiplicative_on(g, h)?;
                    rep.check(ok, || Counterexample {
                        description: format!("s_(gh) ≠ s_g ∧ s_h for g = {g}, h = {h}"), classes: vec![]
                    });
                }
            }
        }
        for _ in 0..opts.trials {
            let a = SymplecticHHClass({
                let d = self.random_degree(rng);
                random_class(rng, grp, d, opts.max_poly_degree)
            });
            let b = SymplecticHHClass({
                let d = self.random_degree(rng);
                random_class(rng, grp, d, opts.max_poly_degree)
            });
            let lhs = symplectic::trivialize(ctx, &symplectic::sympl_product(&self.ring, ctx, &a, &b)?);
            let rhs = self.ring.product(&symplectic::trivialize(ctx, &a), &symplectic::trivialize(ctx, &b))?;
            rep.bump("intertwining_trials", 1);
            rep.check(lhs == rhs, || self.example("trivialization does not intertwine the products".into(), &[a.inner(), b.inner()]));
        }
        Ok(())
    }
}

pub fn report_json(report: &VerifyReport) -> String {
    serde_json::to_string_pretty(report).expect("reports serialize")
}
