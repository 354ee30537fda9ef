//! One function per subcommand, each producing a [`Document`].

use std::collections::BTreeMap;

use anyhow::{bail, ensure, Context, Result};
use hopfchar::bundles::{self, BundleModel, CharacterKind};
use hopfchar::exactq::ratio;
use hopfchar::gradedalg::{enumerate_monomials, Monomial};
use hopfchar::nearprim::{
    near_primitive_basis_theorem, near_primitive_kernel, near_primitive_theorem_span, npd, verify_equivalence,
    NearPrimQuery, RestrictedOutcome,
};
use hopfchar::{Flavor, HopfModel, MmmAlgebra, ModelKind, Polynomial, Rational, TensorElement};
use num::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Map, Value};

use crate::document::{element, plain_element, rational_text, Check, Document, Element, Number};

pub const DEFAULT_SEED: u64 = 20_240_601;

/// Default degree bound when `--max-degree` is absent.
pub fn default_bound(kind: ModelKind) -> u32 {
    match kind {
        ModelKind::SpecialOrthogonal => 40,
        ModelKind::Unitary => 24,
    }
}

/// Largest bound accepted at all.
pub fn hard_cap(kind: ModelKind) -> u32 {
    match kind {
        ModelKind::SpecialOrthogonal => 80,
        ModelKind::Unitary => 48,
    }
}

/// The effective degree bound for a request.
pub fn bound(kind: ModelKind, requested: Option<u32>) -> Result<u32> {
    let b = requested.unwrap_or_else(|| default_bound(kind));
    ensure!(
        b <= hard_cap(kind),
        "--max-degree {b} exceeds the hard cap {} for model `{kind}`",
        hard_cap(kind)
    );
    Ok(b)
}

fn within(kind: ModelKind, what: &str, degree: u32, bound: u32) -> Result<()> {
    ensure!(
        degree <= bound,
        "{what} {degree} exceeds the degree bound {bound} for model `{kind}` (raise it with --max-degree)"
    );
    Ok(())
}

fn query(value: Value) -> Map<String, Value> {
    match value {
        Value::Object(map) => map,
        _ => unreachable!("queries are objects"),
    }
}

pub fn nearprim_basis(kind: ModelKind, degree: u32, order: u32, max: Option<u32>) -> Result<Document> {
    let b = bound(kind, max)?;
    within(kind, "degree", degree, b)?;
    let q = NearPrimQuery::new(kind, degree, order)?;
    let model = HopfModel::new(kind, degree);
    let basis = near_primitive_basis_theorem(&model, &q)?;
    let kernel = near_primitive_kernel(&model, &q)?;
    let span = near_primitive_theorem_span(&model, &q)?;
    let agrees = kernel.subspace_equal(&span)?;
    let doc = Document::new(query(json!({
        "command": "nearprim basis",
        "model": kind.token(),
        "degree": degree,
        "order": order,
    })))
    .with_basis(basis.iter().map(plain_element).collect());
    let mut doc = doc;
    doc.checks.push(Check::new(
        "defining kernel",
        agrees,
        format!("kernel dim {}, basis dim {}", kernel.dim(), span.dim()),
    ));
    Ok(doc)
}

pub fn nearprim_verify(kind: ModelKind, max: Option<u32>) -> Result<Document> {
    let b = bound(kind, max)?;
    let model = HopfModel::new(kind, b);
    let report = verify_equivalence(&model, b)?;
    let mut doc = Document::new(query(json!({
        "command": "nearprim verify",
        "model": kind.token(),
        "max_degree": b,
    })));
    for c in &report.checks {
        let witness = c
            .witnesses
            .first()
            .map(|w| format!("; witness {} via {}", w.polynomial, w.route))
            .unwrap_or_default();
        let tag = format!("m={} d={}", c.degree, c.order);
        doc.checks.push(Check::new(
            format!("explicit basis {tag}"),
            c.theorem_agrees,
            format!("kernel dim {}, basis dim {}", c.kernel_dim, c.theorem_dim),
        ));
        let (pass, detail) = match c.restricted {
            RestrictedOutcome::NotApplicable => (true, "no restricted counterpart".to_string()),
            RestrictedOutcome::Agrees { dim } => (true, format!("restricted kernel dim {dim}")),
            RestrictedOutcome::Differs { dim } => (
                false,
                format!("kernel dim {} vs restricted dim {dim}{witness}", c.kernel_dim),
            ),
        };
        doc.checks.push(Check::new(format!("restricted kernel {tag}"), pass, detail));
    }
    Ok(doc)
}

pub fn npd_slice(kind: ModelKind, d: u32, degree: u32, max: Option<u32>) -> Result<Document> {
    let b = bound(kind, max)?;
    within(kind, "degree", degree, b)?;
    let model = HopfModel::new(kind, degree.max(kind.step()));
    let space = npd(&model, d, degree)?;
    Ok(Document::new(query(json!({
        "command": "npd",
        "model": kind.token(),
        "d": d,
        "degree": degree,
    })))
    .with_basis(space.spanning_polynomials().iter().map(plain_element).collect()))
}

fn mmm_element(algebra: &MmmAlgebra, p: &Polynomial) -> Element {
    let alphabet = algebra.alphabet().clone();
    element(p, |i| algebra.display(&Polynomial::generator_at(&alphabet, i)))
}

fn flavor_query(command: &str, flavor: Flavor) -> Map<String, Value> {
    let token = match flavor {
        Flavor::Oriented(_) => "so",
        Flavor::Complex(_) => "u",
    };
    query(json!({ "command": command, "flavor": token, "d": flavor.d() }))
}

pub fn mmm_space(flavor: Flavor, degree: u32, max: Option<u32>) -> Result<Document> {
    let b = bound(flavor.kind(), max)?;
    within(flavor.kind(), "degree", degree, b)?;
    let algebra = MmmAlgebra::new(flavor, degree.max(1))?;
    let slice = algebra.bordism_invariant_space(degree)?;
    let mut q = flavor_query("mmm space", flavor);
    q.insert("degree".into(), degree.into());
    Ok(Document::new(q).with_basis(
        slice
            .spanning_polynomials(&algebra)
            .iter()
            .map(|p| mmm_element(&algebra, p))
            .collect(),
    ))
}

pub fn mmm_test(flavor: Flavor, expr: &str, degree: Option<u32>, max: Option<u32>) -> Result<Document> {
    let b = bound(flavor.kind(), max)?;
    if let Some(n) = degree {
        within(flavor.kind(), "degree", n, b)?;
    }
    let algebra = MmmAlgebra::new(flavor, degree.unwrap_or(b).max(1))?;
    let x = algebra.parse(expr).with_context(|| format!("cannot read class `{expr}`"))?;
    let n = match (degree, x.homogeneous_degree()?) {
        (Some(n), Some(found)) if n != found => bail!("`{expr}` has degree {found}, not {n}"),
        (_, Some(found)) => found,
        (Some(n), None) => n,
        (None, None) => bail!("`{expr}` is zero; pass --degree to test it"),
    };
    let verdict = algebra.is_bordism_invariant(&x, n)?;
    let mut q = flavor_query("mmm test", flavor);
    q.insert("expr".into(), expr.into());
    q.insert("degree".into(), n.into());
    let detail = match verdict.reason {
        None => "yes".to_string(),
        Some(reason) => format!("no, {reason}"),
    };
    let mut basis = Vec::new();
    if let Some(w) = &verdict.witness {
        basis.push(plain_element(w));
    }
    if let Some(k) = &verdict.k_correction {
        basis.push(mmm_element(&algebra, k));
    }
    let mut doc = Document::new(q).with_basis(basis);
    doc.checks.push(Check::new("bordism invariant", verdict.invariant, detail));
    Ok(doc)
}

pub fn lclass(k: usize, max: Option<u32>) -> Result<Document> {
    let kind = ModelKind::SpecialOrthogonal;
    ensure!(k >= 1, "L-class components start at k = 1");
    let degree = 4 * k as u32;
    within(kind, "degree", degree, bound(kind, max)?)?;
    let model = HopfModel::new(kind, degree);
    let l = model.l_class_component(k)?;
    let total = model.l_class_total();
    let mut expected = TensorElement::zero(model.generator_alphabet());
    for i in 0..=k {
        expected = expected.try_add(&TensorElement::tensor(&total[i], &total[k - i])?)?;
    }
    let grouplike = model.coproduct(l)? == expected;
    let mut doc = Document::new(query(json!({ "command": "lclass", "k": k }))).with_basis(vec![plain_element(l)]);
    doc.checks.push(Check::new(
        "group-like",
        grouplike,
        format!("coproduct of L{k} is the sum of L_i ⊗ L_(k-i)"),
    ));
    Ok(doc)
}

fn bundle_document(bundle: &BundleModel, mut q: Map<String, Value>, numbers: bool) -> Result<Document> {
    q.insert("numbers".into(), numbers.into());
    let mut doc = Document::new(q);
    for c in bundle.structure_checks()? {
        doc.checks.push(Check::new(c.name, c.pass, c.detail));
    }
    for id in bundle.motivating_identities()? {
        let name = match id.kind {
            CharacterKind::Pontrjagin => format!("identity s{}(p)", id.j),
            CharacterKind::Chern => format!("identity ch{}", id.j),
        };
        doc.checks.push(Check::new(
            name,
            id.holds(),
            format!(
                "on E {}, fibre integral {}",
                rational_text(&id.total_space),
                rational_text(&id.fibre_integrated)
            ),
        ));
    }
    if numbers {
        if bundle.rank() == 2 {
            for (name, v) in bundle.mmm_numbers()? {
                doc.result.numbers.push(Number::new(format!("{name}#"), &v));
            }
        }
        for (name, v) in bundle.total_space_char_numbers()? {
            doc.result.numbers.push(Number::new(format!("{name}[E]"), &v));
        }
    }
    Ok(doc)
}

pub fn bundle_hirzebruch(k: i64, numbers: bool) -> Result<Document> {
    let bundle = bundles::hirzebruch(k)?;
    bundle_document(&bundle, query(json!({ "command": "bundle hirzebruch", "k": k })), numbers)
}

pub fn bundle_custom(base: &str, twist: &str, numbers: bool) -> Result<Document> {
    let bundle = bundles::custom(base, twist)?;
    bundle_document(
        &bundle,
        query(json!({ "command": "bundle custom", "base": base, "twist": twist })),
        numbers,
    )
}

type Triple = BTreeMap<(Monomial, Monomial, Monomial), Rational>;

fn bump(acc: &mut Triple, key: (Monomial, Monomial, Monomial), c: Rational) {
    let entry = acc.entry(key.clone()).or_insert_with(Rational::zero);
    *entry += c;
    if entry.is_zero() {
        acc.remove(&key);
    }
}

fn coassociative(model: &HopfModel, x: &Polynomial) -> Result<bool> {
    let alphabet = x.alphabet().clone();
    let single = |m: &Monomial| Polynomial::from_monomial(&alphabet, m.clone(), Rational::one());
    let (mut left, mut right) = (Triple::new(), Triple::new());
    for ((a, b), c) in model.coproduct(x)?.terms() {
        for ((a1, a2), c2) in model.coproduct(&single(a))?.terms() {
            bump(&mut left, (a1.clone(), a2.clone(), b.clone()), c * c2);
        }
        for ((b1, b2), c2) in model.coproduct(&single(b))?.terms() {
            bump(&mut right, (a.clone(), b1.clone(), b2.clone()), c * c2);
        }
    }
    Ok(left == right)
}

fn random_polynomial(rng: &mut StdRng, model: &HopfModel, max: u32) -> Polynomial {
    let alphabet = model.generator_alphabet();
    let pool: Vec<Monomial> = (0..=max).flat_map(|d| enumerate_monomials(alphabet, d)).collect();
    let terms = (0..rng.gen_range(1..=4)).map(|_| {
        let m = pool[rng.gen_range(0..pool.len())].clone();
        (m, ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3)))
    });
    Polynomial::from_terms(alphabet, terms)
}

/// Seeded random checks of the bialgebra axioms plus primitivity of the
/// power sums.
pub fn hopf_check(kind: ModelKind, max: Option<u32>, seed: u64, samples: usize) -> Result<Document> {
    let b = bound(kind, max)?;
    let model = HopfModel::new(kind, b);
    let mut rng = StdRng::seed_from_u64(seed);
    let mut failures: BTreeMap<&str, Vec<String>> = BTreeMap::new();
    for _ in 0..samples {
        let x = random_polynomial(&mut rng, &model, b);
        let y = random_polynomial(&mut rng, &model, b / 2);
        let z = random_polynomial(&mut rng, &model, b - b / 2);
        let delta = model.coproduct(&x)?;
        if !coassociative(&model, &x)? {
            failures.entry("coassociative").or_default().push(x.to_string());
        }
        if delta.counit_left() != x || delta.counit_right() != x {
            failures.entry("counit").or_default().push(x.to_string());
        }
        let product = model.coproduct(&(&y * &z))?;
        if product != model.coproduct(&y)?.multiply(&model.coproduct(&z)?)? {
            failures.entry("multiplicative").or_default().push(format!("({y})*({z})"));
        }
    }
    let mut doc = Document::new(query(json!({
        "command": "hopf check",
        "model": kind.token(),
        "max_degree": b,
        "seed": seed,
        "samples": samples,
    })));
    for name in ["coassociative", "counit", "multiplicative"] {
        let bad = failures.get(name).cloned().unwrap_or_default();
        let detail = match bad.first() {
            None => format!("{samples} random samples"),
            Some(first) => format!("{} of {samples} samples fail, first {first}", bad.len()),
        };
        doc.checks.push(Check::new(name, bad.is_empty(), detail));
    }
    let count = (b / kind.step()) as usize;
    let mut not_primitive = Vec::new();
    for j in 1..=count {
        let s = model.power_sum(j)?;
        if !model.reduced_coproduct(s)?.is_zero() {
            not_primitive.push(format!("s{j}"));
        }
    }
    let detail = if not_primitive.is_empty() {
        format!("s1..s{count} have zero reduced coproduct")
    } else {
        format!("not primitive: {}", not_primitive.join(", "))
    };
    doc.checks.push(Check::new("power sums primitive", not_primitive.is_empty(), detail));
    Ok(doc)
}
