//! Near-primitive elements of order `d`.
//!
//! An element `x` of degree `m >= d` is near-primitive of order `d` when
//! `(id ⊗ proj)(Δ̄ x) = 0`, where `proj: H -> H/H^{<d}` keeps degrees `>= d`.
//! The space is computed three ways and cross-checked:
//!
//! * [`near_primitive_kernel`]: the defining kernel, by linear algebra on
//!   the monomial slice.
//! * [`near_primitive_basis_theorem`]: the explicit monomial basis in the
//!   primitives `Q_i`.
//! * [`near_primitive_kernel_restricted`]: the kernel after pushing the right
//!   tensor factor into `BSO(d)` (or `BU(d/2)` for even `d`).

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactq::{QMatrix, Rational, Subspace};
use crate::gradedalg::{
    degree_slice_vector, enumerate_monomials, poincare_series, vector_to_polynomial, GeneratorAlphabet, Monomial,
    Polynomial, TensorElement,
};
use crate::hopfmodel::{HopfModel, ModelKind, RestrictedModel};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NearPrimQuery {
    kind: ModelKind,
    degree: u32,
    order: u32,
}

impl NearPrimQuery {
    pub fn new(kind: ModelKind, degree: u32, order: u32) -> Result<Self> {
        if degree == 0 || degree % 2 == 1 {
            return Err(Error::invalid(format!("degree must be a positive even integer, got {degree}")));
        }
        if order == 0 {
            return Err(Error::invalid("order must be positive"));
        }
        if degree < order {
            return Err(Error::invalid(format!(
                "near-primitives of order {order} need degree at least {order}, got {degree}"
            )));
        }
        Ok(NearPrimQuery { kind, degree, order })
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    fn check(&self, model: &HopfModel) -> Result<()> {
        if model.kind() != self.kind {
            return Err(Error::invalid("query and model disagree on the model kind"));
        }
        model.check_degree(self.degree)
    }
}

/// The degree-`m` monomials of a model together with their reduced coproducts.
///
/// Building this once per degree lets a sweep over orders reuse it.
#[derive(Debug, Clone)]
pub struct Slice {
    degree: u32,
    basis: Vec<Monomial>,
    coproducts: Vec<TensorElement>,
}

impl Slice {
    pub fn new(model: &HopfModel, degree: u32) -> Result<Self> {
        model.check_degree(degree)?;
        let alphabet = model.generator_alphabet();
        let basis = enumerate_monomials(alphabet, degree);
        let coproducts = basis
            .iter()
            .map(|m| model.reduced_coproduct(&Polynomial::from_monomial(alphabet, m.clone(), Rational::one())))
            .collect::<Result<_>>()?;
        Ok(Slice {
            degree,
            basis,
            coproducts,
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Kernel of the linear map sending basis vector `j` to `images[j]`, where
/// each image is a sparse vector keyed by arbitrary coordinates.
fn kernel_of_images<K: Ord + Clone>(images: &[BTreeMap<K, Rational>]) -> Subspace {
    let mut index: BTreeMap<K, usize> = BTreeMap::new();
    for image in images {
        for key in image.keys() {
            let next = index.len();
            index.entry(key.clone()).or_insert(next);
        }
    }
    let mut matrix = QMatrix::zeros(index.len(), images.len());
    for (j, image) in images.iter().enumerate() {
        for (key, c) in image {
            matrix.set(index[key], j, c.clone());
        }
    }
    matrix.kernel_basis()
}

fn slice_kernel(slice: &Slice, order: u32) -> Subspace {
    let images: Vec<BTreeMap<(Monomial, Monomial), Rational>> = slice
        .coproducts
        .iter()
        .map(|t| {
            t.terms()
                .filter(|((_, b), _)| b.degree() >= order)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect()
        })
        .collect();
    kernel_of_images(&images)
}

/// The target of the restricted-kernel check for a given order, if any.
pub fn restriction_target(kind: ModelKind, order: u32) -> Result<RestrictedModel> {
    match kind {
        ModelKind::SpecialOrthogonal => RestrictedModel::new(kind, order),
        ModelKind::Unitary if order.is_multiple_of(2) => RestrictedModel::new(kind, order / 2),
        ModelKind::Unitary => Err(Error::invalid(format!(
            "order {order} is odd; over BU only even orders have a restricted counterpart"
        ))),
    }
}

fn restricted_slice_kernel(model: &HopfModel, slice: &Slice, order: u32) -> Result<Subspace> {
    let target = restriction_target(model.kind(), order)?;
    let alphabet = model.generator_alphabet();
    let mut restricted: BTreeMap<Monomial, Polynomial> = BTreeMap::new();
    let mut images = Vec::with_capacity(slice.dim());
    for t in &slice.coproducts {
        let mut image: BTreeMap<(Monomial, Monomial), Rational> = BTreeMap::new();
        for ((a, b), c) in t.terms() {
            if b.degree() < order {
                continue;
            }
            if !restricted.contains_key(b) {
                let poly = Polynomial::from_monomial(alphabet, b.clone(), Rational::one());
                restricted.insert(b.clone(), model.restrict(&target, &poly)?);
            }
            for (rb, rc) in restricted[b].terms() {
                let entry = image.entry((a.clone(), rb.clone())).or_insert_with(Rational::zero);
                *entry += c * rc;
            }
        }
        image.retain(|_, c| !c.is_zero());
        images.push(image);
    }
    Ok(kernel_of_images(&images))
}

/// The defining kernel, as a subspace of the degree-`m` monomial slice in the
/// Chern or Pontrjagin classes.
pub fn near_primitive_kernel(model: &HopfModel, q: &NearPrimQuery) -> Result<Subspace> {
    q.check(model)?;
    Ok(slice_kernel(&Slice::new(model, q.degree)?, q.order))
}

/// The kernel with the right factor restricted to `BSO(d)` or `BU(d/2)`.
pub fn near_primitive_kernel_restricted(model: &HopfModel, q: &NearPrimQuery) -> Result<Subspace> {
    q.check(model)?;
    restricted_slice_kernel(model, &Slice::new(model, q.degree)?, q.order)
}

/// Monomials in the `Q_i` of degree `m` whose factors all lie strictly
/// between `m - d` and `d`, followed by `Q_m` when `m` is a primitive degree.
/// Works for `m < d` too, in which case it lists the whole slice.
fn theorem_monomials(model: &HopfModel, degree: u32, order: u32) -> Result<Vec<Monomial>> {
    model.check_degree(degree)?;
    let alphabet = model.primitive_alphabet();
    let lower = degree as i64 - order as i64;
    let mut out: Vec<Monomial> = enumerate_monomials(alphabet, degree)
        .into_iter()
        .filter(|m| {
            m.support().all(|(i, _)| {
                let g = alphabet.degree(i) as i64;
                lower < g && g < order as i64
            })
        })
        .collect();
    if model.kind().is_primitive_degree(degree) {
        let top = Monomial::generator(alphabet, (degree / model.kind().step()) as usize - 1);
        if !out.contains(&top) {
            out.push(top);
        }
    }
    Ok(out)
}

/// The explicit basis, as monomials in the primitives `Q_i`.
pub fn near_primitive_basis_theorem(model: &HopfModel, q: &NearPrimQuery) -> Result<Vec<Polynomial>> {
    q.check(model)?;
    let alphabet = model.primitive_alphabet();
    Ok(theorem_monomials(model, q.degree, q.order)?
        .into_iter()
        .map(|m| Polynomial::from_monomial(alphabet, m, Rational::one()))
        .collect())
}

fn theorem_span(model: &HopfModel, slice: &Slice, order: u32) -> Result<Subspace> {
    let alphabet = model.primitive_alphabet();
    let vectors = theorem_monomials(model, slice.degree, order)?
        .into_iter()
        .map(|m| {
            let q = Polynomial::from_monomial(alphabet, m, Rational::one());
            degree_slice_vector(&model.from_primitive_basis(&q)?, slice.degree, &slice.basis)
        })
        .collect::<Result<Vec<_>>>()?;
    Subspace::span(slice.dim(), vectors)
}

/// Span of the explicit basis, rewritten in the generator monomial slice.
pub fn near_primitive_theorem_span(model: &HopfModel, q: &NearPrimQuery) -> Result<Subspace> {
    q.check(model)?;
    theorem_span(model, &Slice::new(model, q.degree)?, q.order)
}

/// Predicted dimension: the Poincaré coefficient in degree `m` of the
/// polynomial ring on `{Q_i : m - d < |Q_i| < d}`, plus one for `Q_m`.
pub fn theorem_dimension(kind: ModelKind, degree: u32, order: u32) -> Result<u64> {
    let q = NearPrimQuery::new(kind, degree, order)?;
    let step = kind.step();
    let entries = (1..)
        .map(|i| i * step)
        .take_while(|&g| g < q.order)
        .filter(|&g| g + q.order > q.degree)
        .map(|g| (format!("Q{}", g / step), g));
    let alphabet = GeneratorAlphabet::new(entries)?;
    let series = poincare_series(&alphabet, degree);
    Ok(series[degree as usize] + u64::from(kind.is_primitive_degree(degree)))
}

/// The primitives in degree `m`: the span of the power sum, or zero.
pub fn primitive_slice(model: &HopfModel, degree: u32) -> Result<Subspace> {
    model.check_degree(degree)?;
    let basis = enumerate_monomials(model.generator_alphabet(), degree);
    if !model.kind().is_primitive_degree(degree) {
        return Ok(Subspace::zero(basis.len()));
    }
    let s = model.power_sum((degree / model.kind().step()) as usize)?;
    Subspace::span(basis.len(), [degree_slice_vector(s, degree, &basis)?])
}

/// `NP_d` in degree `n`: the restriction of the order-`d` near-primitives
/// (order `2d` in the complex case) to `BSO(d)` or `BU(d)`.
#[derive(Debug, Clone)]
pub struct NpdSpace {
    pub target: RestrictedModel,
    pub degree: u32,
    pub basis: Vec<Monomial>,
    pub space: Subspace,
}

impl NpdSpace {
    pub fn spanning_polynomials(&self) -> Vec<Polynomial> {
        self.space
            .basis_vectors()
            .map(|v| vector_to_polynomial(self.target.alphabet(), &self.basis, v))
            .collect()
    }
}

pub fn npd(model: &HopfModel, rank: u32, degree: u32) -> Result<NpdSpace> {
    if degree == 0 {
        return Err(Error::invalid("NP_d is taken in positive degrees"));
    }
    let target = RestrictedModel::new(model.kind(), rank)?;
    let order = match model.kind() {
        ModelKind::SpecialOrthogonal => rank,
        ModelKind::Unitary => 2 * rank,
    };
    let basis = enumerate_monomials(target.alphabet(), degree);
    let qs = model.primitive_alphabet();
    let vectors = theorem_monomials(model, degree, order)?
        .into_iter()
        .map(|m| {
            let x = Polynomial::from_monomial(qs, m, Rational::one());
            degree_slice_vector(&model.restrict(&target, &x)?, degree, &basis)
        })
        .collect::<Result<Vec<_>>>()?;
    let space = Subspace::span(basis.len(), vectors)?;
    Ok(NpdSpace {
        target,
        degree,
        basis,
        space,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    ExplicitBasis,
    RestrictedKernel,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::ExplicitBasis => "explicit basis",
            Route::RestrictedKernel => "restricted kernel",
        })
    }
}

/// A vector lying in one of two compared spaces but not the other.
#[derive(Debug, Clone)]
pub struct Witness {
    pub route: Route,
    /// True when the vector is in the defining kernel but not in the other
    /// space, false for the reverse.
    pub in_kernel: bool,
    pub vector: Vec<Rational>,
    pub polynomial: Polynomial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RestrictedOutcome {
    NotApplicable,
    Agrees { dim: usize },
    Differs { dim: usize },
}

#[derive(Debug, Clone)]
pub struct EquivalenceCheck {
    pub degree: u32,
    pub order: u32,
    pub slice_dim: usize,
    pub kernel_dim: usize,
    pub theorem_dim: usize,
    pub theorem_agrees: bool,
    pub restricted: RestrictedOutcome,
    pub witnesses: Vec<Witness>,
}

impl EquivalenceCheck {
    pub fn passed(&self) -> bool {
        self.theorem_agrees && !matches!(self.restricted, RestrictedOutcome::Differs { .. })
    }
}

#[derive(Debug, Clone)]
pub struct EquivalenceReport {
    pub kind: ModelKind,
    pub max_degree: u32,
    pub checks: Vec<EquivalenceCheck>,
}

impl EquivalenceReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(EquivalenceCheck::passed)
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = &EquivalenceCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn theorem_failures(&self) -> impl Iterator<Item = &EquivalenceCheck> {
        self.checks.iter().filter(|c| !c.theorem_agrees)
    }

    pub fn restricted_failures(&self) -> impl Iterator<Item = &EquivalenceCheck> {
        self.checks
            .iter()
            .filter(|c| matches!(c.restricted, RestrictedOutcome::Differs { .. }))
    }
}

fn witness(model: &HopfModel, slice: &Slice, route: Route, kernel: &Subspace, other: &Subspace) -> Result<Option<Witness>> {
    let alphabet = model.generator_alphabet();
    for (in_kernel, a, b) in [(true, kernel, other), (false, other, kernel)] {
        for v in a.basis_vectors() {
            if !b.contains(v)? {
                return Ok(Some(Witness {
                    route,
                    in_kernel,
                    vector: v.to_vec(),
                    polynomial: vector_to_polynomial(alphabet, &slice.basis, v),
                }));
            }
        }
    }
    Ok(None)
}

fn check_pair(model: &HopfModel, slice: &Slice, order: u32) -> Result<EquivalenceCheck> {
    let kernel = slice_kernel(slice, order);
    let theorem = theorem_span(model, slice, order)?;
    let theorem_agrees = kernel.subspace_equal(&theorem)?;
    let mut witnesses = Vec::new();
    if !theorem_agrees {
        witnesses.extend(witness(model, slice, Route::ExplicitBasis, &kernel, &theorem)?);
    }
    let restricted = match restriction_target(model.kind(), order) {
        Err(_) => RestrictedOutcome::NotApplicable,
        Ok(_) => {
            let r = restricted_slice_kernel(model, slice, order)?;
            if kernel.subspace_equal(&r)? {
                RestrictedOutcome::Agrees { dim: r.dim() }
            } else {
                witnesses.extend(witness(model, slice, Route::RestrictedKernel, &kernel, &r)?);
                RestrictedOutcome::Differs { dim: r.dim() }
            }
        }
    };
    Ok(EquivalenceCheck {
        degree: slice.degree,
        order,
        slice_dim: slice.dim(),
        kernel_dim: kernel.dim(),
        theorem_dim: theorem.dim(),
        theorem_agrees,
        restricted,
        witnesses,
    })
}

/// Checks every even degree `m <= max_degree` against every order `d <= m`.
pub fn verify_equivalence(model: &HopfModel, max_degree: u32) -> Result<EquivalenceReport> {
    model.check_degree(max_degree)?;
    let degrees: Vec<u32> = (2..=max_degree).step_by(2).collect();
    let slices = degrees
        .par_iter()
        .map(|&m| Slice::new(model, m))
        .collect::<Result<Vec<_>>>()?;
    let pairs: Vec<(usize, u32)> = slices
        .iter()
        .enumerate()
        .flat_map(|(i, s)| (1..=s.degree).map(move |d| (i, d)))
        .collect();
    let checks = pairs
        .par_iter()
        .map(|&(i, d)| check_pair(model, &slices[i], d))
        .collect::<Result<Vec<_>>>()?;
    Ok(EquivalenceReport {
        kind: model.kind(),
        max_degree,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::rat;
    use crate::gradedalg::parse_polynomial;

    fn bso() -> HopfModel {
        HopfModel::new(ModelKind::SpecialOrthogonal, 40)
    }

    fn bu() -> HopfModel {
        HopfModel::new(ModelKind::Unitary, 24)
    }

    fn span_of(model: &HopfModel, degree: u32, texts: &[&str]) -> Subspace {
        let basis = enumerate_monomials(model.generator_alphabet(), degree);
        let vs = texts
            .iter()
            .map(|t| degree_slice_vector(&model.parse(t).unwrap(), degree, &basis).unwrap());
        Subspace::span(basis.len(), vs).unwrap()
    }

    fn query(kind: ModelKind, m: u32, d: u32) -> NearPrimQuery {
        NearPrimQuery::new(kind, m, d).unwrap()
    }

    fn names(ps: &[Polynomial]) -> Vec<String> {
        ps.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn queries_below_the_order_are_rejected() {
        assert!(NearPrimQuery::new(ModelKind::SpecialOrthogonal, 4, 8).is_err());
        assert!(NearPrimQuery::new(ModelKind::Unitary, 3, 1).is_err());
        assert!(NearPrimQuery::new(ModelKind::Unitary, 4, 0).is_err());
    }

    #[test]
    fn kernel_examples() {
        let m = bso();
        let so = ModelKind::SpecialOrthogonal;
        let k = near_primitive_kernel(&m, &query(so, 8, 5)).unwrap();
        assert!(k.subspace_equal(&span_of(&m, 8, &["p1^2", "p2"])).unwrap());
        let k = near_primitive_kernel(&m, &query(so, 8, 4)).unwrap();
        assert!(k.subspace_equal(&span_of(&m, 8, &["p1^2 - 2*p2"])).unwrap());
        let u = bu();
        let k = near_primitive_kernel(&u, &query(ModelKind::Unitary, 4, 4)).unwrap();
        assert_eq!(k.dim(), 2);
    }

    #[test]
    fn theorem_basis_examples() {
        let so = ModelKind::SpecialOrthogonal;
        let m = bso();
        assert_eq!(names(&near_primitive_basis_theorem(&m, &query(so, 8, 6)).unwrap()), ["Q1^2", "Q2"]);
        assert_eq!(names(&near_primitive_basis_theorem(&m, &query(so, 16, 4)).unwrap()), ["Q4"]);
        let u = bu();
        let b = near_primitive_basis_theorem(&u, &query(ModelKind::Unitary, 8, 6)).unwrap();
        assert_eq!(names(&b), ["Q2^2", "Q4"]);
    }

    #[test]
    fn restricted_examples() {
        let so = ModelKind::SpecialOrthogonal;
        let m = bso();
        let q = query(so, 8, 5);
        let r = near_primitive_kernel_restricted(&m, &q).unwrap();
        assert!(r.subspace_equal(&near_primitive_kernel(&m, &q).unwrap()).unwrap());
        let q = query(so, 12, 12);
        assert_eq!(near_primitive_kernel_restricted(&m, &q).unwrap().dim(), 3);

        let u = bu();
        let r = near_primitive_kernel_restricted(&u, &query(ModelKind::Unitary, 6, 2)).unwrap();
        assert!(r.subspace_equal(&span_of(&u, 6, &["Q3"])).unwrap());
        assert!(near_primitive_kernel_restricted(&u, &query(ModelKind::Unitary, 6, 3)).is_err());
    }

    #[test]
    fn npd_examples() {
        let m = bso();
        let np = npd(&m, 2, 8).unwrap();
        assert_eq!(names(&np.spanning_polynomials()), ["e^4"]);
        assert!(npd(&m, 2, 6).unwrap().space.is_zero());
        let u = bu();
        let np = npd(&u, 1, 6).unwrap();
        assert_eq!(names(&np.spanning_polynomials()), ["c1^3"]);
    }

    #[test]
    fn dimension_formula_matches_kernel() {
        let m = bso();
        for deg in (4..=32).step_by(4) {
            for d in 1..=deg {
                let k = near_primitive_kernel(&m, &query(ModelKind::SpecialOrthogonal, deg, d)).unwrap();
                let predicted = theorem_dimension(ModelKind::SpecialOrthogonal, deg, d).unwrap();
                assert_eq!(k.dim() as u64, predicted, "m = {deg}, d = {d}");
            }
        }
    }

    #[test]
    fn stability_and_saturation() {
        let u = bu();
        for deg in (2..=20).step_by(2) {
            let prim = primitive_slice(&u, deg).unwrap();
            for d in 1..=deg / 2 {
                let k = near_primitive_kernel(&u, &query(ModelKind::Unitary, deg, d)).unwrap();
                assert!(k.subspace_equal(&prim).unwrap());
            }
            let full = near_primitive_kernel(&u, &query(ModelKind::Unitary, deg, deg)).unwrap();
            assert_eq!(full.dim(), full.ambient_dim());
        }
    }

    #[test]
    fn reduced_coproduct_of_q_monomials_runs_over_proper_divisors() {
        let m = bso();
        let qs = m.primitive_alphabet();
        for text in ["Q1^3*Q2", "Q1^2*Q2^2*Q3", "Q2^4", "Q5"] {
            let mu = parse_polynomial(text, qs).unwrap();
            let (mono, _) = mu.terms().next().unwrap();
            let delta = m.reduced_coproduct(&mu).unwrap();
            let mut expected = TensorElement::zero(qs);
            for nu in enumerate_divisors(mono) {
                if nu.is_one() || &nu == mono {
                    continue;
                }
                let coeff = nu
                    .support()
                    .map(|(i, f)| binomial(mono.exponent(i), f))
                    .product::<i64>();
                let rest = nu.complement_in(mono, qs).unwrap();
                expected.add_term(nu, rest, rat(coeff));
            }
            assert_eq!(delta, expected, "{text}");
        }
    }

    fn binomial(n: u32, k: u32) -> i64 {
        (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
    }

    fn enumerate_divisors(m: &Monomial) -> Vec<Monomial> {
        let exps = m.exponents().to_vec();
        let mut out = vec![Vec::new()];
        for &e in &exps {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<u32>| {
                    (0..=e).map(move |f| {
                        let mut p = prefix.clone();
                        p.push(f);
                        p
                    })
                })
                .collect();
        }
        let alphabet = GeneratorAlphabet::indexed("Q", exps.len(), 4);
        out.into_iter()
            .map(|e| Monomial::from_exponents(&alphabet, e).unwrap())
            .collect()
    }

    #[test]
    fn sweep_passes_on_small_ranges() {
        let report = verify_equivalence(&bu(), 16).unwrap();
        assert!(report.all_pass());
        let so = verify_equivalence(&bso(), 24).unwrap();
        assert!(so.theorem_failures().next().is_none());
        assert!(so.restricted_failures().all(|c| c.order == 1));
    }

    #[test]
    fn corrupted_coproduct_is_pinpointed() {
        let broken = bso()
            .with_coproduct_perturbation(2, 1, rat(1))
            .unwrap();
        let report = verify_equivalence(&broken, 16).unwrap();
        let bad: Vec<(u32, u32)> = report.theorem_failures().map(|c| (c.degree, c.order)).collect();
        assert!(bad.contains(&(8, 4)), "{bad:?}");
        let check = report.checks.iter().find(|c| (c.degree, c.order) == (8, 4)).unwrap();
        assert!(!check.witnesses.is_empty());
    }
}
