//! Projective bundles over products of projective spaces.
//!
//! `P(V) -> B` for a complex vector bundle `V` of rank `r` has cohomology
//! `H*(B)[ξ]/(ξ^r + c_1 ξ^{r-1} + ... + c_r)`. Fibre integration reads off the
//! `ξ^{r-1}` coefficient, and the vertical tangent bundle has
//! `c(TᵛE) = Σ c_i(V)(1+ξ)^{r-i}`. For `r = 2` the fibres are 2-spheres, so
//! these bundles carry MMM numbers of `𝒞_2` (and of `𝒞ᶜ_1`).

pub mod ring;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

pub use ring::{CohomologyRing, Rule};

use crate::error::{Error, Result};
use crate::exactq::{rat, Rational};
use crate::gradedalg::{enumerate_monomials, GeneratorAlphabet, Monomial, Polynomial};
use crate::hopfmodel::{HopfModel, ModelKind};
use crate::mmm::{Flavor, MmmAlgebra};

#[derive(Debug, Clone)]
pub struct BundleModel {
    label: String,
    base: CohomologyRing,
    total: CohomologyRing,
    rank: u32,
    chern: Vec<Polynomial>,
    vertical_chern: Polynomial,
}

/// A named pass/fail check with a short explanation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

/// Which additive class the identity is checked for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharacterKind {
    /// `s_j(p)`, in degree `4j`.
    Pontrjagin,
    /// `ch_j`, in degree `2j`.
    Chern,
}

impl fmt::Display for CharacterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CharacterKind::Pontrjagin => "s_j(p)",
            CharacterKind::Chern => "ch_j",
        })
    }
}

/// `<X(TE), [E]>` against `<π_! X(TᵛE), [B]>` for an additive class `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub kind: CharacterKind,
    pub j: u32,
    pub total_space: Rational,
    pub fibre_integrated: Rational,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.total_space == self.fibre_integrated
    }

    pub fn difference(&self) -> Rational {
        &self.total_space - &self.fibre_integrated
    }
}

fn check_chern_input(chern: &[Polynomial]) -> Result<()> {
    for (i, c) in chern.iter().enumerate() {
        if let Some(d) = c.homogeneous_degree()? {
            let expected = 2 * (i as u32 + 1);
            if d != expected {
                return Err(Error::DegreeMismatch { expected, found: d });
            }
        }
    }
    Ok(())
}

/// The projectivization of a rank-`r` bundle with Chern classes
/// `chern = [c_1, ..., c_r]` (zeros allowed) over `base`.
pub fn projectivize(base: &CohomologyRing, chern: &[Polynomial]) -> Result<BundleModel> {
    let r = chern.len() as u32;
    if r < 2 {
        return Err(Error::invalid("projective bundles need rank at least 2"));
    }
    check_chern_input(chern)?;
    let chern: Vec<Polynomial> = chern.iter().map(|c| base.reduce(c)).collect::<Result<_>>()?;

    let mut entries: Vec<(String, u32)> = base
        .alphabet()
        .generators()
        .iter()
        .map(|g| (g.name.clone(), g.degree))
        .collect();
    entries.push(("x".to_string(), 2));
    let alphabet = GeneratorAlphabet::new(entries)?.shared();
    let xi = base.alphabet().len();
    let pull = |p: &Polynomial| p.embed_into(&alphabet);

    let mut rules = base
        .rules()
        .iter()
        .map(|rule| {
            Ok(Rule {
                generator: rule.generator,
                power: rule.power,
                replacement: pull(&rule.replacement)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let x = Polynomial::generator_at(&alphabet, xi);
    let mut relation = Polynomial::zero(&alphabet);
    for (i, c) in chern.iter().enumerate() {
        relation = &relation - &(&pull(c)? * &x.pow(r - 1 - i as u32));
    }
    rules.push(Rule {
        generator: xi,
        power: r,
        replacement: relation,
    });

    let top = base.top_degree() + 2 * (r - 1);
    let mut exps = base.orientation().exponents().to_vec();
    exps.resize(xi, 0);
    exps.push(r - 1);
    let orientation = Monomial::from_exponents(&alphabet, exps).expect("even generators");

    let one = Polynomial::one(&alphabet);
    let one_plus_x = &one + &x;
    let mut vertical = one_plus_x.pow(r);
    for (i, c) in chern.iter().enumerate() {
        vertical = &vertical + &(&pull(c)? * &one_plus_x.pow(r - 1 - i as u32));
    }
    let tangent = pull(base.tangent_chern())?.multiply_truncated(&vertical, top)?;
    let label = format!("P(V) over {}", base.name());
    let total = CohomologyRing::new(label.clone(), alphabet, rules, top, orientation, tangent)?;
    let vertical_chern = total.reduce(&vertical)?;
    Ok(BundleModel {
        label,
        base: base.clone(),
        total,
        rank: r,
        chern,
        vertical_chern,
    })
}

/// Chern classes of a sum of line bundles `O(a_1) ⊕ ...` where each entry
/// lists the degree along every generator of the base.
pub fn line_bundle_sum(base: &CohomologyRing, degrees: &[Vec<i64>]) -> Result<Vec<Polynomial>> {
    let alphabet = base.alphabet();
    let mut total = Polynomial::one(alphabet);
    for entry in degrees {
        if entry.len() != alphabet.len() {
            return Err(Error::invalid(format!(
                "line bundle degree needs {} entries, got {}",
                alphabet.len(),
                entry.len()
            )));
        }
        let mut factor = Polynomial::one(alphabet);
        for (i, &a) in entry.iter().enumerate() {
            factor = &factor + &Polynomial::generator_at(alphabet, i).scale(&rat(a));
        }
        total = base.multiply(&total, &factor)?;
    }
    Ok((1..=degrees.len() as u32).map(|i| total.component(2 * i)).collect())
}

/// The Hirzebruch surface `F_k = P(O ⊕ O(k))` over `CP^1`.
pub fn hirzebruch(k: i64) -> Result<BundleModel> {
    let base = CohomologyRing::projective_space(1)?;
    let chern = line_bundle_sum(&base, &[vec![0], vec![k]])?;
    let mut bundle = projectivize(&base, &chern)?;
    bundle.label = format!("F_{k}");
    Ok(bundle)
}

/// `"pt"`, `"cp2"`, `"cp1xcp1"`, ...
pub fn parse_base(spec: &str) -> Result<CohomologyRing> {
    let spec = spec.trim().to_ascii_lowercase();
    if spec == "pt" || spec == "point" {
        return Ok(CohomologyRing::point());
    }
    let dims = spec
        .split('x')
        .map(|part| {
            part.trim()
                .strip_prefix("cp")
                .and_then(|n| n.parse::<u32>().ok())
                .filter(|&n| n > 0)
                .ok_or_else(|| Error::invalid(format!("bad base factor `{part}` (expected cpN)")))
        })
        .collect::<Result<Vec<_>>>()?;
    CohomologyRing::projective_product(&dims)
}

/// Line-bundle degrees: `"0,k"` over a single projective space, or tuples
/// `"(0,0),(a,b)"` over a product. A single entry `L` stands for `O ⊕ L`.
pub fn parse_twist(base: &CohomologyRing, spec: &str) -> Result<Vec<Vec<i64>>> {
    let gens = base.alphabet().len();
    let bad = |msg: &str| Error::invalid(format!("bad twist `{spec}`: {msg}"));
    let mut entries = Vec::new();
    let text: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    let mut rest = text.as_str();
    while !rest.is_empty() {
        let (entry, tail) = if let Some(inner) = rest.strip_prefix('(') {
            let close = inner.find(')').ok_or_else(|| bad("unclosed parenthesis"))?;
            let values = if inner[..close].is_empty() {
                Vec::new()
            } else {
                inner[..close]
                    .split(',')
                    .map(|v| v.parse::<i64>().map_err(|_| bad("expected integers")))
                    .collect::<Result<Vec<_>>>()?
            };
            (values, &inner[close + 1..])
        } else {
            let end = rest.find(',').unwrap_or(rest.len());
            let v = rest[..end].parse::<i64>().map_err(|_| bad("expected integers"))?;
            (vec![v], &rest[end..])
        };
        let entry = if gens == 0 && entry.iter().all(|&v| v == 0) {
            Vec::new()
        } else {
            entry
        };
        if entry.len() != gens {
            return Err(bad(&format!("each line bundle needs {gens} degree(s)")));
        }
        entries.push(entry);
        rest = tail.strip_prefix(',').unwrap_or(tail);
        if tail.starts_with(',') && rest.is_empty() {
            return Err(bad("trailing comma"));
        }
    }
    match entries.len() {
        0 => Err(bad("no line bundles given")),
        1 => Ok(vec![vec![0; gens], entries.remove(0)]),
        _ => Ok(entries),
    }
}

/// A projective bundle from text specifications of base and twist.
pub fn custom(base_spec: &str, twist_spec: &str) -> Result<BundleModel> {
    let base = parse_base(base_spec)?;
    let degrees = parse_twist(&base, twist_spec)?;
    let chern = line_bundle_sum(&base, &degrees)?;
    let mut bundle = projectivize(&base, &chern)?;
    let summands: Vec<String> = degrees
        .iter()
        .map(|d| {
            let inner: Vec<String> = d.iter().map(ToString::to_string).collect();
            format!("O({})", inner.join(","))
        })
        .collect();
    bundle.label = format!("P({}) over {}", summands.join("+"), base.name());
    Ok(bundle)
}

impl BundleModel {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn base(&self) -> &CohomologyRing {
        &self.base
    }

    pub fn total(&self) -> &CohomologyRing {
        &self.total
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// `c_1(V), ..., c_r(V)` in the base.
    pub fn chern_of_v(&self) -> &[Polynomial] {
        &self.chern
    }

    pub fn xi(&self) -> Polynomial {
        Polynomial::generator_at(self.total.alphabet(), self.base.alphabet().len())
    }

    pub fn vertical_chern(&self) -> &Polynomial {
        &self.vertical_chern
    }

    /// Euler class of the vertical tangent bundle, `c_{r-1}(TᵛE)`.
    pub fn vertical_euler(&self) -> Polynomial {
        self.vertical_chern.component(2 * (self.rank - 1))
    }

    pub fn pullback(&self, a: &Polynomial) -> Result<Polynomial> {
        self.total.reduce(&self.base.reduce(a)?.embed_into(self.total.alphabet())?)
    }

    /// Fibre integration `π_!`: the coefficient of `ξ^{r-1}` in normal form.
    pub fn pi_lower(&self, t: &Polynomial) -> Result<Polynomial> {
        let reduced = self.total.reduce(t)?;
        let xi = self.base.alphabet().len();
        let base_alphabet = self.base.alphabet();
        let terms = reduced
            .terms()
            .filter(|(m, _)| m.exponent(xi) == self.rank - 1)
            .map(|(m, c)| {
                let mut exps = m.exponents().to_vec();
                exps.truncate(xi);
                (Monomial::from_exponents(base_alphabet, exps).expect("even generators"), c.clone())
            });
        Ok(Polynomial::from_terms(base_alphabet, terms))
    }

    /// Restricts to a fibre (all base classes set to zero) and integrates:
    /// the Euler characteristic `r` of `CP^{r-1}`.
    pub fn fibre_euler_number(&self) -> Result<Rational> {
        Ok(self.pi_lower(&self.vertical_euler())?.constant_term())
    }

    /// `<X(e(TᵛE)), [B]>` after integrating over the fibre, for `X` a
    /// polynomial in one degree-2 class (`e` or `c1`). Needs `r = 2`.
    pub fn hat_number(&self, x: &Polynomial) -> Result<Rational> {
        self.require_sphere_fibres()?;
        if x.alphabet().len() != 1 || x.alphabet().degree(0) != 2 {
            return Err(Error::invalid("expected a polynomial in a single degree-2 class"));
        }
        if let Some(d) = x.homogeneous_degree()? {
            if d != self.base.top_degree() + 2 {
                return Err(Error::DegreeMismatch {
                    expected: self.base.top_degree() + 2,
                    found: d,
                });
            }
        }
        let fibre = self.total.substitute(x, &[self.vertical_euler()])?;
        self.base.evaluate(&self.pi_lower(&fibre)?)
    }

    fn require_sphere_fibres(&self) -> Result<()> {
        if self.rank != 2 {
            return Err(Error::invalid("MMM numbers here need CP^1 fibres (rank 2)"));
        }
        Ok(())
    }

    /// The characteristic number `x♯` of an element of `𝒞_2` or `𝒞ᶜ_1`.
    pub fn mmm_number(&self, algebra: &MmmAlgebra, x: &Polynomial) -> Result<Rational> {
        self.require_sphere_fibres()?;
        if !matches!(algebra.flavor(), Flavor::Oriented(2) | Flavor::Complex(1)) {
            return Err(Error::invalid("bundles with CP^1 fibres carry classes of C_2 or C^C_1"));
        }
        if let Some(d) = x.homogeneous_degree()? {
            if d != self.base.top_degree() {
                return Err(Error::DegreeMismatch {
                    expected: self.base.top_degree(),
                    found: d,
                });
            }
        }
        let e = self.vertical_euler();
        let mut hats: BTreeMap<usize, Polynomial> = BTreeMap::new();
        let mut total = Rational::zero();
        for (m, c) in x.terms() {
            let mut value = Polynomial::one(self.base.alphabet());
            for (i, k) in m.support() {
                if let Entry::Vacant(slot) = hats.entry(i) {
                    let origin = algebra.origin(i);
                    let power = self.total.substitute(
                        &Polynomial::from_monomial(algebra.restricted().alphabet(), origin.clone(), Rational::one()),
                        std::slice::from_ref(&e),
                    )?;
                    slot.insert(self.pi_lower(&power)?);
                }
                for _ in 0..k {
                    value = self.base.multiply(&value, &hats[&i])?;
                }
            }
            total += c * self.base.evaluate(&value)?;
        }
        Ok(total)
    }

    /// All numbers `μ♯` for `μ` a monomial of `𝒞_2` in the base dimension,
    /// keyed by `μ` written with `e_i` names.
    pub fn mmm_numbers(&self) -> Result<Vec<(String, Rational)>> {
        self.require_sphere_fibres()?;
        let n = self.base.top_degree();
        if n == 0 {
            return Ok(Vec::new());
        }
        let algebra = MmmAlgebra::new(Flavor::Oriented(2), n)?;
        algebra
            .slice_basis(n)?
            .into_iter()
            .map(|m| {
                let x = Polynomial::from_monomial(algebra.alphabet(), m, Rational::one());
                Ok((algebra.display(&x), self.mmm_number(&algebra, &x)?))
            })
            .collect()
    }

    pub fn tangent_chern_classes(&self) -> Vec<Polynomial> {
        self.total.chern_components(self.total.tangent_chern())
    }

    pub fn tangent_pontrjagin_classes(&self) -> Result<Vec<Polynomial>> {
        self.total.pontrjagin_components(self.total.tangent_chern())
    }

    fn evaluate_monomials(&self, prefix: &str, step: u32, classes: &[Polynomial]) -> Result<Vec<(String, Rational)>> {
        let top = self.total.top_degree();
        let count = (top / step) as usize;
        let alphabet = GeneratorAlphabet::indexed(prefix, count, step).shared();
        let mut images: Vec<Polynomial> = classes.iter().take(count).cloned().collect();
        images.resize(count, Polynomial::zero(self.total.alphabet()));
        enumerate_monomials(&alphabet, top)
            .into_iter()
            .map(|m| {
                let name = m.display(&alphabet);
                let poly = Polynomial::from_monomial(&alphabet, m, Rational::one());
                let value = self.total.substitute(&poly, &images)?;
                Ok((name, self.total.evaluate(&value)?))
            })
            .collect()
    }

    /// Chern numbers of `TE`, and Pontrjagin numbers when the real dimension
    /// is divisible by four.
    pub fn total_space_char_numbers(&self) -> Result<Vec<(String, Rational)>> {
        let top = self.total.top_degree();
        let mut out = self.evaluate_monomials("c", 2, &self.tangent_chern_classes())?;
        if top.is_multiple_of(4) {
            out.extend(self.evaluate_monomials("p", 4, &self.tangent_pontrjagin_classes()?)?);
        }
        Ok(out)
    }

    fn additive_class(&self, kind: CharacterKind, j: u32, total_chern: &Polynomial) -> Result<Polynomial> {
        let (model_kind, degree) = match kind {
            CharacterKind::Pontrjagin => (ModelKind::SpecialOrthogonal, 4 * j),
            CharacterKind::Chern => (ModelKind::Unitary, 2 * j),
        };
        let model = HopfModel::new(model_kind, degree);
        let class = match kind {
            CharacterKind::Pontrjagin => model.power_sum(j as usize)?.clone(),
            CharacterKind::Chern => model.character_component(j as usize)?,
        };
        let mut images = match kind {
            CharacterKind::Pontrjagin => self.total.pontrjagin_components(total_chern)?,
            CharacterKind::Chern => self.total.chern_components(total_chern),
        };
        images.resize(j as usize, Polynomial::zero(self.total.alphabet()));
        self.total.substitute(&class, &images)
    }

    /// Both sides of `<X(TE), [E]> = <π_! X(TᵛE), [B]>` for `X = s_j(p)` or
    /// `X = ch_j`.
    pub fn verify_motivating_identity(&self, kind: CharacterKind, j: u32) -> Result<IdentityCheck> {
        let degree = match kind {
            CharacterKind::Pontrjagin => 4 * j,
            CharacterKind::Chern => 2 * j,
        };
        if j == 0 || degree > self.total.top_degree() {
            return Err(Error::DegreeBound {
                requested: degree,
                bound: self.total.top_degree(),
            });
        }
        let lhs = self.additive_class(kind, j, self.total.tangent_chern())?;
        let rhs = self.additive_class(kind, j, &self.vertical_chern)?;
        Ok(IdentityCheck {
            kind,
            j,
            total_space: self.total.evaluate(&lhs)?,
            fibre_integrated: self.base.evaluate(&self.pi_lower(&rhs)?)?,
        })
    }

    /// The identity for every `j` in range, both real and complex.
    pub fn motivating_identities(&self) -> Result<Vec<IdentityCheck>> {
        let top = self.total.top_degree();
        let mut out = Vec::new();
        for j in 1..=top / 4 {
            out.push(self.verify_motivating_identity(CharacterKind::Pontrjagin, j)?);
        }
        for j in 1..=top / 2 {
            out.push(self.verify_motivating_identity(CharacterKind::Chern, j)?);
        }
        Ok(out)
    }

    /// Structural checks on the fibre integration of this bundle.
    pub fn structure_checks(&self) -> Result<Vec<Check>> {
        let mut checks = Vec::new();
        let xi = self.xi();
        let r = self.rank;
        let top_power = self.pi_lower(&xi.pow(r - 1))?;
        checks.push(Check::new(
            "pi_!(x^(r-1)) = 1",
            top_power == Polynomial::one(self.base.alphabet()),
            format!("got {top_power}"),
        ));
        let mut lower_ok = true;
        for i in 0..r - 1 {
            lower_ok &= self.pi_lower(&xi.pow(i))?.is_zero();
        }
        checks.push(Check::new("pi_!(x^i) = 0 for i < r-1", lower_ok, ""));

        let mut pullback_ok = true;
        let mut linear_ok = true;
        for degree in 0..=self.base.top_degree() {
            for m in self.base.basis(degree) {
                let a = Polynomial::from_monomial(self.base.alphabet(), m, Rational::one());
                let pa = self.pullback(&a)?;
                pullback_ok &= self.pi_lower(&pa)?.is_zero();
                for i in 0..=r {
                    let t = xi.pow(i);
                    let lhs = self.pi_lower(&self.total.multiply(&pa, &t)?)?;
                    let rhs = self.base.multiply(&a, &self.pi_lower(&t)?)?;
                    linear_ok &= lhs == rhs;
                }
            }
        }
        checks.push(Check::new("pi_! pi^* = 0", pullback_ok, ""));
        checks.push(Check::new("pi_! is base-linear", linear_ok, ""));
        let euler = self.fibre_euler_number()?;
        checks.push(Check::new(
            "fibre Euler number = r",
            euler == rat(r as i64),
            format!("got {euler}"),
        ));
        let eval_ok = self.total.evaluate(&self.total_orientation_polynomial())? == Rational::one();
        checks.push(Check::new("<orientation, [E]> = 1", eval_ok, ""));
        Ok(checks)
    }

    fn total_orientation_polynomial(&self) -> Polynomial {
        Polynomial::from_monomial(self.total.alphabet(), self.total.orientation().clone(), Rational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hirzebruch_relation() {
        let f3 = hirzebruch(3).unwrap();
        let x = f3.xi();
        let x2 = f3.total().multiply(&x, &x).unwrap();
        assert_eq!(x2.to_string(), "-3*h*x");
        assert_eq!(f3.vertical_euler().to_string(), "3*h + 2*x");
    }

    #[test]
    fn trivial_bundle_over_a_point() {
        let b = custom("pt", "0,0").unwrap();
        assert_eq!(b.total().betti_numbers(), [1, 0, 1]);
        assert_eq!(b.pi_lower(&b.xi()).unwrap().to_string(), "1");
        assert_eq!(b.fibre_euler_number().unwrap(), rat(2));
    }

    #[test]
    fn hirzebruch_numbers() {
        for k in 0..=4 {
            let f = hirzebruch(k).unwrap();
            let numbers: BTreeMap<String, Rational> = f.total_space_char_numbers().unwrap().into_iter().collect();
            assert_eq!(numbers["p1"], rat(0), "k = {k}");
            assert_eq!(numbers["c2"], rat(4));
            assert_eq!(numbers["c1^2"], rat(8));
            let e = f.mmm_numbers().unwrap();
            assert_eq!(e, vec![("e1".to_string(), rat(0))]);
            assert!(f.structure_checks().unwrap().iter().all(|c| c.pass));
        }
    }

    #[test]
    fn motivating_identity_on_products() {
        let b = custom("cp1xcp1", "(0,0),(1,2)").unwrap();
        for check in b.motivating_identities().unwrap() {
            assert!(check.holds(), "{check:?}");
        }
        assert!(b.structure_checks().unwrap().iter().all(|c| c.pass));
    }

    #[test]
    fn higher_rank_bundles_integrate_correctly() {
        let b = custom("cp2", "0,1,3").unwrap();
        assert_eq!(b.rank(), 3);
        assert_eq!(b.fibre_euler_number().unwrap(), rat(3));
        assert!(b.structure_checks().unwrap().iter().all(|c| c.pass));
        for check in b.motivating_identities().unwrap() {
            assert!(check.holds(), "{check:?}");
        }
    }

    #[test]
    fn twist_parsing() {
        let cp1 = CohomologyRing::projective_space(1).unwrap();
        assert_eq!(parse_twist(&cp1, "0,3").unwrap(), vec![vec![0], vec![3]]);
        assert_eq!(parse_twist(&cp1, "3").unwrap(), vec![vec![0], vec![3]]);
        let q = CohomologyRing::projective_product(&[1, 1]).unwrap();
        assert_eq!(parse_twist(&q, "(1,-2)").unwrap(), vec![vec![0, 0], vec![1, -2]]);
        assert!(parse_twist(&q, "1,2").is_err());
        assert!(parse_twist(&cp1, "0,").is_err());
        assert!(parse_base("cp0").is_err());
        assert!(parse_base("rp2").is_err());
    }

    #[test]
    fn wrong_degree_is_rejected() {
        let f = hirzebruch(1).unwrap();
        let algebra = MmmAlgebra::new(Flavor::Oriented(2), 4).unwrap();
        let x = algebra.parse("e2").unwrap();
        assert!(matches!(f.mmm_number(&algebra, &x), Err(Error::DegreeMismatch { .. })));
    }
}
