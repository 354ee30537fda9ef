//! Algebras of generalized Miller–Morita–Mumford classes and the test for
//! which of their elements give bordism-invariant characteristic numbers.
//!
//! `𝒞_d` is free graded-commutative on `H^{>d}(BSO(d);Q)` shifted down by `d`
//! (exterior when `d` is odd); `𝒞ᶜ_d` is polynomial on `H^{>2d}(BU(d);Q)`
//! shifted down by `2d`. Generators are indexed by the canonical monomials of
//! the restricted model and named `E<degree>_<ordinal>`. For oriented `d = 2`
//! and complex `d = 1` the classical names `e_i = hat(e^{i+1})` are accepted
//! as well.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::exactq::{QMatrix, Rational, Subspace};
use crate::gradedalg::{
    degree_slice_vector, enumerate_monomials, parse_expr, vector_to_polynomial, GeneratorAlphabet, Monomial,
    Polynomial,
};
use crate::hopfmodel::{HopfModel, ModelKind, RestrictedModel};
use crate::nearprim::npd;

/// Largest slice of `𝒞` that the linear algebra here is willing to build.
pub const MAX_SLICE_DIM: usize = 50_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    Oriented(u32),
    Complex(u32),
}

impl Flavor {
    pub fn parse(token: &str, d: u32) -> Result<Self> {
        if d == 0 {
            return Err(Error::invalid("d must be positive"));
        }
        match token.parse::<ModelKind>()? {
            ModelKind::SpecialOrthogonal => Ok(Flavor::Oriented(d)),
            ModelKind::Unitary => Ok(Flavor::Complex(d)),
        }
    }

    pub fn d(self) -> u32 {
        match self {
            Flavor::Oriented(d) | Flavor::Complex(d) => d,
        }
    }

    pub fn kind(self) -> ModelKind {
        match self {
            Flavor::Oriented(_) => ModelKind::SpecialOrthogonal,
            Flavor::Complex(_) => ModelKind::Unitary,
        }
    }

    /// Fibre dimension: the amount by which degrees are shifted.
    pub fn shift(self) -> u32 {
        match self {
            Flavor::Oriented(d) => d,
            Flavor::Complex(d) => 2 * d,
        }
    }

    /// Whether the quotient by the `L`-class ideal applies.
    pub fn uses_k_ideal(self) -> bool {
        matches!(self, Flavor::Oriented(d) if d % 2 == 1)
    }

    fn has_classical_names(self) -> bool {
        matches!(self, Flavor::Oriented(2) | Flavor::Complex(1))
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(d={})", self.kind().token(), self.d())
    }
}

#[derive(Debug, Clone)]
pub struct MmmAlgebra {
    flavor: Flavor,
    bound: u32,
    model: HopfModel,
    restricted: RestrictedModel,
    alphabet: Arc<GeneratorAlphabet>,
    origins: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
}

impl MmmAlgebra {
    /// The algebra with generators in shifted degrees `1..=bound`.
    pub fn new(flavor: Flavor, bound: u32) -> Result<Self> {
        let shift = flavor.shift();
        let restricted = RestrictedModel::new(flavor.kind(), flavor.d())?;
        let model = HopfModel::new(flavor.kind(), bound + shift);
        let mut entries = Vec::new();
        let mut origins = Vec::new();
        for degree in shift + 1..=bound + shift {
            for (ordinal, m) in enumerate_monomials(restricted.alphabet(), degree).into_iter().enumerate() {
                entries.push((format!("E{}_{}", degree - shift, ordinal + 1), degree - shift));
                origins.push(m);
            }
        }
        let alphabet = GeneratorAlphabet::new(entries)?.shared();
        let index = origins.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Ok(MmmAlgebra {
            flavor,
            bound,
            model,
            restricted,
            alphabet,
            origins,
            index,
        })
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn alphabet(&self) -> &Arc<GeneratorAlphabet> {
        &self.alphabet
    }

    pub fn restricted(&self) -> &RestrictedModel {
        &self.restricted
    }

    pub fn model(&self) -> &HopfModel {
        &self.model
    }

    /// The restricted-model monomial that generator `i` is the hat of.
    pub fn origin(&self, i: usize) -> &Monomial {
        &self.origins[i]
    }

    pub fn describe_generator(&self, i: usize) -> String {
        format!(
            "{} = hat({})",
            self.alphabet.generator(i).name,
            self.origins[i].display(self.restricted.alphabet())
        )
    }

    fn check_degree(&self, degree: u32) -> Result<()> {
        if degree > self.bound {
            return Err(Error::DegreeBound {
                requested: degree,
                bound: self.bound,
            });
        }
        Ok(())
    }

    /// Canonical monomial basis of the degree-`n` slice.
    pub fn slice_basis(&self, degree: u32) -> Result<Vec<Monomial>> {
        self.check_degree(degree)?;
        let basis = enumerate_monomials(&self.alphabet, degree);
        if basis.len() > MAX_SLICE_DIM {
            return Err(Error::invalid(format!(
                "slice of degree {degree} has {} monomials, above the limit {MAX_SLICE_DIM}",
                basis.len()
            )));
        }
        Ok(basis)
    }

    fn resolve(&self, name: &str) -> Result<Polynomial> {
        if let Some(i) = self.alphabet.position(name) {
            return Ok(Polynomial::generator_at(&self.alphabet, i));
        }
        let unknown = || Error::UnknownGenerator(name.to_string());
        let alias = name
            .strip_prefix('e')
            .and_then(|rest| rest.parse::<u32>().ok())
            .filter(|_| self.flavor.has_classical_names())
            .ok_or_else(unknown)?;
        self.check_degree(2 * alias)?;
        let target = format!("E{}_1", 2 * alias);
        self.alphabet
            .position(&target)
            .map(|i| Polynomial::generator_at(&self.alphabet, i))
            .ok_or_else(unknown)
    }

    /// Parses a class written with `E<deg>_<ord>` names (or `e_i` aliases).
    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        parse_expr(text)?.evaluate(&self.alphabet, |f| self.resolve(&f.name))
    }

    /// Writes a polynomial of the algebra with `e_i` aliases where they apply.
    pub fn display(&self, x: &Polynomial) -> String {
        let text = x.to_string();
        if !self.flavor.has_classical_names() {
            return text;
        }
        let mut out = String::with_capacity(text.len());
        let mut rest = text.as_str();
        while let Some(pos) = rest.find('E') {
            out.push_str(&rest[..pos]);
            let tail = &rest[pos + 1..];
            let digits = tail.find('_').unwrap_or(0);
            let deg: u32 = tail[..digits].parse().unwrap_or(0);
            let after = &tail[digits + 1..];
            let ord_len = after.find(|c: char| !c.is_ascii_digit()).unwrap_or(after.len());
            out.push_str(&format!("e{}", deg / 2));
            rest = &after[ord_len..];
        }
        out.push_str(rest);
        out
    }

    /// `X ↦ X̂`: the generator-linear image of a homogeneous class of the
    /// restricted model. Classes of degree at most the shift map to zero.
    pub fn hat(&self, x: &Polynomial) -> Result<Polynomial> {
        if !Arc::ptr_eq(x.alphabet(), self.restricted.alphabet()) && **x.alphabet() != **self.restricted.alphabet() {
            return Err(Error::AlphabetMismatch);
        }
        let Some(degree) = x.homogeneous_degree()? else {
            return Ok(Polynomial::zero(&self.alphabet));
        };
        if degree <= self.flavor.shift() {
            return Ok(Polynomial::zero(&self.alphabet));
        }
        self.check_degree(degree - self.flavor.shift())?;
        let terms = x
            .terms()
            .map(|(m, c)| (Monomial::generator(&self.alphabet, self.index[m]), c.clone()));
        Ok(Polynomial::from_terms(&self.alphabet, terms))
    }

    /// Inverse of [`MmmAlgebra::hat`] on the generator-linear part; other
    /// terms are ignored.
    pub fn unhat(&self, x: &Polynomial) -> Polynomial {
        let terms = x.terms().filter(|(m, _)| m.length() == 1).map(|(m, c)| {
            let (i, _) = m.support().next().expect("linear monomial");
            (self.origins[i].clone(), c.clone())
        });
        Polynomial::from_terms(self.restricted.alphabet(), terms)
    }

    /// Hats of the restricted `L`-class components, for odd oriented `d`.
    pub fn k_ideal_generators(&self) -> Result<Vec<Polynomial>> {
        self.k_generators_up_to(self.bound)
    }

    fn k_generators_up_to(&self, degree: u32) -> Result<Vec<Polynomial>> {
        if !self.flavor.uses_k_ideal() {
            return Err(Error::invalid("the L-class ideal is only used for odd oriented d"));
        }
        let d = self.flavor.d();
        let mut out = Vec::new();
        for k in 1.. {
            let total = 4 * k;
            if total <= d {
                continue;
            }
            if total - d > degree {
                break;
            }
            let l = self.model.l_class_component(k as usize)?;
            let g = self.hat(&self.model.restrict(&self.restricted, l)?)?;
            if !g.is_zero() {
                out.push(g);
            }
        }
        Ok(out)
    }

    /// Products `μ·g` spanning the degree-`n` part of the ideal, split into
    /// the generator-linear ones (`μ = 1`) and the decomposable ones.
    fn k_spanning(&self, degree: u32) -> Result<(Vec<Polynomial>, Vec<Polynomial>)> {
        let mut linear = Vec::new();
        let mut decomposable = Vec::new();
        for g in self.k_generators_up_to(degree)? {
            let gd = g.homogeneous_degree()?.expect("nonzero generator");
            if gd == degree {
                linear.push(g);
                continue;
            }
            for mu in enumerate_monomials(&self.alphabet, degree - gd) {
                let product = Polynomial::from_monomial(&self.alphabet, mu, Rational::one()).multiply(&g)?;
                if !product.is_zero() {
                    decomposable.push(product);
                }
            }
        }
        Ok((linear, decomposable))
    }

    /// The degree-`n` slice of the ideal `K`.
    pub fn k_ideal_slice(&self, degree: u32) -> Result<MmmSlice> {
        let basis = self.slice_basis(degree)?;
        let (linear, decomposable) = self.k_spanning(degree)?;
        let vectors = linear
            .iter()
            .chain(&decomposable)
            .map(|p| degree_slice_vector(p, degree, &basis))
            .collect::<Result<Vec<_>>>()?;
        let space = Subspace::span(basis.len(), vectors)?;
        Ok(MmmSlice { degree, basis, space })
    }

    fn npd_image(&self, degree: u32) -> Result<crate::nearprim::NpdSpace> {
        npd(&self.model, self.flavor.d(), degree + self.flavor.shift())
    }

    /// Classes of degree `n` whose characteristic numbers are bordism
    /// invariants: `hat(NP_d)` in that degree, plus the ideal `K` for odd
    /// oriented `d`.
    pub fn bordism_invariant_space(&self, degree: u32) -> Result<MmmSlice> {
        if degree == 0 {
            return Err(Error::invalid("degree must be positive"));
        }
        let basis = self.slice_basis(degree)?;
        let np = self.npd_image(degree)?;
        let mut vectors = Vec::new();
        for x in np.spanning_polynomials() {
            vectors.push(degree_slice_vector(&self.hat(&x)?, degree, &basis)?);
        }
        if self.flavor.uses_k_ideal() {
            let (linear, decomposable) = self.k_spanning(degree)?;
            for p in linear.iter().chain(&decomposable) {
                vectors.push(degree_slice_vector(p, degree, &basis)?);
            }
        }
        let space = Subspace::span(basis.len(), vectors)?;
        Ok(MmmSlice { degree, basis, space })
    }

    /// Decides whether `x`, homogeneous of degree `n`, has bordism-invariant
    /// characteristic numbers, and produces a witness when it does.
    pub fn is_bordism_invariant(&self, x: &Polynomial, degree: u32) -> Result<InvarianceVerdict> {
        if !Arc::ptr_eq(x.alphabet(), &self.alphabet) && **x.alphabet() != *self.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        if let Some(found) = x.homogeneous_degree()? {
            if found != degree {
                return Err(Error::DegreeMismatch { expected: degree, found });
            }
        }
        if degree == 0 {
            return Err(Error::invalid("degree must be positive"));
        }
        self.check_degree(degree)?;
        let linear = x.filter_terms(|m| m.length() == 1);
        let decomposable = x.filter_terms(|m| m.length() != 1);

        let mut k_correction = Polynomial::zero(&self.alphabet);
        let (k_linear, k_decomposable) = if self.flavor.uses_k_ideal() {
            self.k_spanning(degree)?
        } else {
            (Vec::new(), Vec::new())
        };

        if !decomposable.is_zero() {
            match solve_in_span(&decomposable, &k_decomposable, degree, &self.alphabet)? {
                Some(combination) => k_correction = combination,
                None => return Ok(InvarianceVerdict::no(Reason::NotPrimitive)),
            }
        }

        // Linear part: hat(X) + Σ c_g g with X in NP_d, solved in the
        // restricted model where hat is an isomorphism.
        let np = self.npd_image(degree)?;
        let target = self.unhat(&linear);
        let k_unhatted: Vec<Polynomial> = k_linear.iter().map(|g| self.unhat(g)).collect();
        let mut columns: Vec<Polynomial> = np.spanning_polynomials();
        let np_count = columns.len();
        columns.extend(k_unhatted.iter().cloned());
        let restricted_degree = degree + self.flavor.shift();
        let alpha = self.restricted.alphabet();
        let Some(coeffs) = solve_coefficients(&target, &columns, restricted_degree, &np.basis)? else {
            return Ok(InvarianceVerdict::no(Reason::NotInNpdImage));
        };
        let mut witness = Polynomial::zero(alpha);
        for (c, p) in coeffs.iter().zip(&columns).take(np_count) {
            witness = &witness + &p.scale(c);
        }
        for (c, g) in coeffs.iter().skip(np_count).zip(&k_linear) {
            k_correction = &k_correction + &g.scale(c);
        }
        let verdict = InvarianceVerdict {
            invariant: true,
            witness: Some(witness),
            k_correction: self.flavor.uses_k_ideal().then_some(k_correction),
            reason: None,
        };
        debug_assert_eq!(verdict.reexpand(self)?, Some(x.clone()));
        Ok(verdict)
    }
}

/// Coefficients expressing `target` as a combination of `columns`, all
/// homogeneous of `degree` over the monomial `basis`.
fn solve_coefficients(
    target: &Polynomial,
    columns: &[Polynomial],
    degree: u32,
    basis: &[Monomial],
) -> Result<Option<Vec<Rational>>> {
    let b = degree_slice_vector(target, degree, basis)?;
    if columns.is_empty() {
        return Ok(b.iter().all(Zero::is_zero).then(Vec::new));
    }
    let cols = columns
        .iter()
        .map(|p| degree_slice_vector(p, degree, basis))
        .collect::<Result<Vec<_>>>()?;
    let rows = QMatrix::from_rows(basis.len(), cols)?.transpose();
    rows.solve(&b)
}

fn solve_in_span(
    target: &Polynomial,
    span: &[Polynomial],
    degree: u32,
    alphabet: &Arc<GeneratorAlphabet>,
) -> Result<Option<Polynomial>> {
    let basis = enumerate_monomials(alphabet, degree);
    Ok(solve_coefficients(target, span, degree, &basis)?.map(|coeffs| {
        coeffs
            .iter()
            .zip(span)
            .fold(Polynomial::zero(alphabet), |acc, (c, p)| &acc + &p.scale(c))
    }))
}

/// A subspace of one homogeneous slice of an MMM algebra.
#[derive(Debug, Clone)]
pub struct MmmSlice {
    pub degree: u32,
    pub basis: Vec<Monomial>,
    pub space: Subspace,
}

impl MmmSlice {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn spanning_polynomials(&self, algebra: &MmmAlgebra) -> Vec<Polynomial> {
        self.space
            .basis_vectors()
            .map(|v| vector_to_polynomial(algebra.alphabet(), &self.basis, v))
            .collect()
    }

    pub fn contains(&self, x: &Polynomial) -> Result<bool> {
        self.space.contains(&degree_slice_vector(x, self.degree, &self.basis)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reason {
    NotPrimitive,
    NotInNpdImage,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reason::NotPrimitive => "notPrimitive",
            Reason::NotInNpdImage => "notInNPdImage",
        })
    }
}

impl FromStr for Reason {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "notPrimitive" => Ok(Reason::NotPrimitive),
            "notInNPdImage" => Ok(Reason::NotInNpdImage),
            _ => Err(Error::invalid(format!("unknown reason `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvarianceVerdict {
    pub invariant: bool,
    /// `X` in `NP_d`, a class of the restricted model.
    pub witness: Option<Polynomial>,
    /// The element of `K` to add to `hat(X)` (odd oriented `d` only).
    pub k_correction: Option<Polynomial>,
    pub reason: Option<Reason>,
}

impl InvarianceVerdict {
    fn no(reason: Reason) -> Self {
        InvarianceVerdict {
            invariant: false,
            witness: None,
            k_correction: None,
            reason: Some(reason),
        }
    }

    /// `hat(X)` plus the correction, when there is a witness.
    pub fn reexpand(&self, algebra: &MmmAlgebra) -> Result<Option<Polynomial>> {
        let Some(x) = &self.witness else {
            return Ok(None);
        };
        let mut total = algebra.hat(x)?;
        if let Some(k) = &self.k_correction {
            total = total.try_add(k)?;
        }
        Ok(Some(total))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn oriented(d: u32, bound: u32) -> MmmAlgebra {
        MmmAlgebra::new(Flavor::Oriented(d), bound).unwrap()
    }

    #[test]
    fn generator_parities_follow_d() {
        let a = oriented(3, 12);
        assert!(a.alphabet().generators().iter().all(|g| g.degree % 2 == 1));
        let b = oriented(4, 12);
        assert!(b.alphabet().generators().iter().all(|g| g.degree % 2 == 0));
        let c = MmmAlgebra::new(Flavor::Complex(2), 12).unwrap();
        assert!(c.alphabet().generators().iter().all(|g| g.degree % 2 == 0));
        assert_eq!(a.describe_generator(0), "E1_1 = hat(p1)");
    }

    #[test]
    fn hat_examples() {
        let a = oriented(2, 20);
        let r = a.restricted();
        for i in 1..=5 {
            let x = r.parse(&format!("e^{}", i + 1)).unwrap();
            assert_eq!(a.hat(&x).unwrap(), a.parse(&format!("e{i}")).unwrap());
        }
        assert!(a.hat(&r.parse("e").unwrap()).unwrap().is_zero());
        let b = oriented(4, 20);
        assert!(b.hat(&b.restricted().parse("p1 + e").unwrap()).unwrap().is_zero());
        assert_eq!(
            a.hat(&r.parse("e + e^2").unwrap()),
            Err(Error::Inhomogeneous)
        );
    }

    #[test]
    fn k_ideal_examples() {
        let a = oriented(3, 12);
        let gens = a.k_ideal_generators().unwrap();
        assert_eq!(gens[0], a.parse("1/3*E1_1").unwrap());
        assert_eq!(gens[1], a.parse("-1/45*E5_1").unwrap());
        let five = oriented(5, 12);
        assert!(!five.k_ideal_generators().unwrap()[0].is_zero());
        assert!(oriented(2, 8).k_ideal_generators().is_err());

        let s1 = a.k_ideal_slice(1).unwrap();
        assert_eq!(s1.dim(), 1);
        assert!(s1.contains(&a.parse("E1_1").unwrap()).unwrap());
        assert!(a.k_ideal_slice(2).unwrap().space.is_zero());
        assert!(a.k_ideal_slice(5).unwrap().contains(&a.parse("E5_1").unwrap()).unwrap());
    }

    #[test]
    fn odd_generator_squares_vanish() {
        let a = oriented(3, 12);
        let g = a.parse("E1_1").unwrap();
        assert!((&g * &g).is_zero());
    }

    #[test]
    fn oriented_two_invariants() {
        let a = oriented(2, 24);
        for n in 1..=24 {
            let space = a.bordism_invariant_space(n).unwrap();
            if n % 4 == 2 {
                assert_eq!(space.dim(), 1, "n = {n}");
                let e = a.parse(&format!("e{}", n / 2)).unwrap();
                assert!(space.contains(&e).unwrap());
            } else {
                assert!(space.space.is_zero(), "n = {n}");
            }
        }
    }

    #[test]
    fn verdict_examples() {
        let a = oriented(2, 12);
        let v = a.is_bordism_invariant(&a.parse("e3").unwrap(), 6).unwrap();
        assert!(v.invariant);
        assert_eq!(v.witness.as_ref().unwrap().to_string(), "e^4");
        assert_eq!(v.reexpand(&a).unwrap().unwrap(), a.parse("e3").unwrap());

        let v = a.is_bordism_invariant(&a.parse("e2").unwrap(), 4).unwrap();
        assert_eq!(v.reason, Some(Reason::NotInNpdImage));
        let v = a.is_bordism_invariant(&a.parse("e1*e1").unwrap(), 4).unwrap();
        assert_eq!(v.reason, Some(Reason::NotPrimitive));
        assert!(matches!(
            a.is_bordism_invariant(&a.parse("e1").unwrap(), 4),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn odd_d_uses_k_correction() {
        let a = oriented(3, 12);
        // hat(p1) is a multiple of a K generator, so it qualifies with X = 0.
        let x = a.parse("E1_1").unwrap();
        let v = a.is_bordism_invariant(&x, 1).unwrap();
        assert!(v.invariant);
        assert_eq!(v.reexpand(&a).unwrap().unwrap(), x);

        // A decomposable element of K.
        let y = a.parse("E1_1*E5_1").unwrap();
        let v = a.is_bordism_invariant(&y, 6).unwrap();
        assert!(v.invariant, "{v:?}");
        assert_eq!(v.reexpand(&a).unwrap().unwrap(), y);
        assert!(a.bordism_invariant_space(6).unwrap().contains(&y).unwrap());
    }

    #[test]
    fn complex_one_invariants() {
        let a = MmmAlgebra::new(Flavor::Complex(1), 16).unwrap();
        for k in 1..=8 {
            let space = a.bordism_invariant_space(2 * k).unwrap();
            assert_eq!(space.dim(), 1);
            assert!(space.contains(&a.parse(&format!("e{k}")).unwrap()).unwrap());
            let v = a.is_bordism_invariant(&a.parse(&format!("e{k}")).unwrap(), 2 * k).unwrap();
            assert_eq!(v.witness.unwrap().to_string(), format!("c1^{}", k + 1));
        }
    }

    #[test]
    fn display_uses_aliases() {
        let a = oriented(2, 12);
        let x = a.parse("2*e1*e3 - 1/2*e5").unwrap();
        assert_eq!(a.display(&x), "2*e1*e3 - 1/2*e5");
        assert_eq!(a.parse(&a.display(&x)).unwrap(), x);
    }
}
