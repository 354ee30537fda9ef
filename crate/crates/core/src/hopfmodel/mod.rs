//! The Hopf algebras `H*(BU;Q)` and `H*(BSO;Q)`.
//!
//! A [`HopfModel`] carries two alphabets for the same ring: the Chern or
//! Pontrjagin classes `g_n` (with `Δ(g_n) = Σ g_i ⊗ g_{n-i}`) and the
//! primitive generators `Q_n`. Internally `Q_n` is the integral Newton power
//! sum `s_n`; [`HopfModel::character_component`] gives the `s_n / n!`
//! normalization of the Chern and Pontrjagin characters.
//!
//! Tables (coproducts of generators, power sums, change of basis, `L`-class)
//! are built eagerly up to the degree bound given at construction.

pub mod lclass;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num::{BigInt, One};

use crate::error::{Error, Result};
use crate::exactq::{rat, Rational};
use crate::gradedalg::{parse_expr, GeneratorAlphabet, Monomial, Polynomial, TensorElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelKind {
    /// `H*(BU;Q)`, Chern classes `c_i` in degree `2i`.
    Unitary,
    /// `H*(BSO;Q)`, Pontrjagin classes `p_i` in degree `4i`.
    SpecialOrthogonal,
}

impl ModelKind {
    /// Degree of the first generator; every generator degree is a multiple.
    pub fn step(self) -> u32 {
        match self {
            ModelKind::Unitary => 2,
            ModelKind::SpecialOrthogonal => 4,
        }
    }

    pub fn generator_prefix(self) -> &'static str {
        match self {
            ModelKind::Unitary => "c",
            ModelKind::SpecialOrthogonal => "p",
        }
    }

    pub fn character_prefix(self) -> &'static str {
        match self {
            ModelKind::Unitary => "ch",
            ModelKind::SpecialOrthogonal => "ph",
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            ModelKind::Unitary => "u",
            ModelKind::SpecialOrthogonal => "so",
        }
    }

    /// Whether `degree` carries a (one-dimensional) primitive slice.
    pub fn is_primitive_degree(self, degree: u32) -> bool {
        degree > 0 && degree.is_multiple_of(self.step())
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for ModelKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "u" => Ok(ModelKind::Unitary),
            "so" => Ok(ModelKind::SpecialOrthogonal),
            _ => Err(Error::invalid(format!("unknown model `{s}` (expected `so` or `u`)"))),
        }
    }
}

/// A model selector token: `so`, `u`, `so(d)` or `u(d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelSelector {
    Stable(ModelKind),
    Restricted(ModelKind, u32),
}

impl FromStr for ModelSelector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((head, tail)) = s.split_once('(') {
            let rank = tail
                .strip_suffix(')')
                .and_then(|r| r.trim().parse::<u32>().ok())
                .filter(|&r| r > 0)
                .ok_or_else(|| Error::invalid(format!("bad model selector `{s}`")))?;
            Ok(ModelSelector::Restricted(head.trim().parse()?, rank))
        } else {
            Ok(ModelSelector::Stable(s.parse()?))
        }
    }
}

/// `H*(BU(d);Q)` or `H*(BSO(d);Q)` as a free polynomial ring.
///
/// For `BSO(d)` with `d` even the relation `e^2 = p_{d/2}` is used to drop
/// `p_{d/2}`, leaving `p_1, ..., p_{d/2-1}, e`.
#[derive(Debug, Clone)]
pub struct RestrictedModel {
    kind: ModelKind,
    rank: u32,
    alphabet: Arc<GeneratorAlphabet>,
}

impl RestrictedModel {
    pub fn new(kind: ModelKind, rank: u32) -> Result<Self> {
        if rank == 0 {
            return Err(Error::invalid("restricted model needs rank d >= 1"));
        }
        let alphabet = match kind {
            ModelKind::Unitary => GeneratorAlphabet::indexed("c", rank as usize, 2),
            ModelKind::SpecialOrthogonal if rank % 2 == 1 => {
                GeneratorAlphabet::indexed("p", (rank as usize - 1) / 2, 4)
            }
            ModelKind::SpecialOrthogonal => {
                let pontrjagin = (1..rank / 2).map(|i| (format!("p{i}"), 4 * i));
                GeneratorAlphabet::new(pontrjagin.chain([("e".to_string(), rank)]))?
            }
        };
        Ok(RestrictedModel {
            kind,
            rank,
            alphabet: alphabet.shared(),
        })
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn alphabet(&self) -> &Arc<GeneratorAlphabet> {
        &self.alphabet
    }

    /// Index of the Euler class, present for `BSO(d)` with `d` even.
    pub fn euler_index(&self) -> Option<usize> {
        self.alphabet.position("e")
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        crate::gradedalg::parse_polynomial(text, &self.alphabet)
    }

    pub fn selector(&self) -> String {
        format!("{}({})", self.kind.token(), self.rank)
    }
}

#[derive(Clone)]
pub struct HopfModel {
    kind: ModelKind,
    max_degree: u32,
    generators: Arc<GeneratorAlphabet>,
    primitives: Arc<GeneratorAlphabet>,
    generator_coproducts: Vec<TensorElement>,
    primitive_coproducts: Vec<TensorElement>,
    power_sums: Vec<Polynomial>,
    generators_in_primitives: Vec<Polynomial>,
    l_class: Vec<Polynomial>,
}

impl fmt::Debug for HopfModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HopfModel")
            .field("kind", &self.kind)
            .field("max_degree", &self.max_degree)
            .finish()
    }
}

impl HopfModel {
    /// Builds the model with generators in degrees up to `max_degree`.
    pub fn new(kind: ModelKind, max_degree: u32) -> Self {
        let count = (max_degree / kind.step()) as usize;
        let generators = GeneratorAlphabet::indexed(kind.generator_prefix(), count, kind.step()).shared();
        let primitives = GeneratorAlphabet::indexed("Q", count, kind.step()).shared();

        let mono = |i: usize| -> Monomial {
            if i == 0 {
                Monomial::one()
            } else {
                Monomial::generator(&generators, i - 1)
            }
        };
        let generator_coproducts = (1..=count)
            .map(|n| {
                let mut t = TensorElement::zero(&generators);
                for i in 0..=n {
                    t.add_term(mono(i), mono(n - i), Rational::one());
                }
                t
            })
            .collect();
        let primitive_coproducts = (0..count)
            .map(|i| {
                let q = Monomial::generator(&primitives, i);
                let mut t = TensorElement::zero(&primitives);
                t.add_term(q.clone(), Monomial::one(), Rational::one());
                t.add_term(Monomial::one(), q, Rational::one());
                t
            })
            .collect();

        let g = |i: usize| Polynomial::generator_at(&generators, i - 1);
        let mut power_sums: Vec<Polynomial> = Vec::with_capacity(count);
        for j in 1..=count {
            let sign = |i: usize| if i % 2 == 1 { rat(1) } else { rat(-1) };
            let mut s = g(j).scale(&(sign(j) * rat(j as i64)));
            for i in 1..j {
                s = &s + &(&g(i) * &power_sums[j - i - 1]).scale(&sign(i));
            }
            power_sums.push(s);
        }

        // n g_n = sum_{i=1}^{n} (-1)^{i-1} g_{n-i} Q_i, with g_0 = 1.
        let q = |i: usize| Polynomial::generator_at(&primitives, i - 1);
        let mut generators_in_primitives: Vec<Polynomial> = Vec::with_capacity(count);
        for n in 1..=count {
            let mut acc = Polynomial::zero(&primitives);
            for i in 1..=n {
                let lower = if n == i {
                    Polynomial::one(&primitives)
                } else {
                    generators_in_primitives[n - i - 1].clone()
                };
                let term = &lower * &q(i);
                acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
            }
            generators_in_primitives.push(acc.scale(&(Rational::one() / rat(n as i64))));
        }

        let l_class = match kind {
            ModelKind::SpecialOrthogonal => lclass::l_class_components(&power_sums),
            ModelKind::Unitary => Vec::new(),
        };

        HopfModel {
            kind,
            max_degree,
            generators,
            primitives,
            generator_coproducts,
            primitive_coproducts,
            power_sums,
            generators_in_primitives,
            l_class,
        }
    }

    /// A copy whose `Δ(g_n)` has `delta` added to the coefficient of
    /// `g_i ⊗ g_{n-i}`. Only used to check that verification sweeps notice
    /// a broken coproduct.
    pub fn with_coproduct_perturbation(&self, n: usize, i: usize, delta: Rational) -> Result<Self> {
        if n == 0 || n > self.generator_coproducts.len() || i > n {
            return Err(Error::invalid("perturbation outside the generator range"));
        }
        let mono = |k: usize| {
            if k == 0 {
                Monomial::one()
            } else {
                Monomial::generator(&self.generators, k - 1)
            }
        };
        let mut model = self.clone();
        model.generator_coproducts[n - 1].add_term(mono(i), mono(n - i), delta);
        Ok(model)
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn generator_alphabet(&self) -> &Arc<GeneratorAlphabet> {
        &self.generators
    }

    pub fn primitive_alphabet(&self) -> &Arc<GeneratorAlphabet> {
        &self.primitives
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    fn check_index(&self, j: usize) -> Result<()> {
        if j == 0 {
            return Err(Error::invalid("index must be at least 1"));
        }
        if j > self.generator_count() {
            return Err(Error::DegreeBound {
                requested: j as u32 * self.kind.step(),
                bound: self.max_degree,
            });
        }
        Ok(())
    }

    pub fn check_degree(&self, degree: u32) -> Result<()> {
        if degree > self.max_degree {
            return Err(Error::DegreeBound {
                requested: degree,
                bound: self.max_degree,
            });
        }
        Ok(())
    }

    fn is_generator_poly(&self, x: &Polynomial) -> bool {
        Arc::ptr_eq(x.alphabet(), &self.generators) || **x.alphabet() == *self.generators
    }

    fn is_primitive_poly(&self, x: &Polynomial) -> bool {
        Arc::ptr_eq(x.alphabet(), &self.primitives) || **x.alphabet() == *self.primitives
    }

    /// `Δ(x)`, extended multiplicatively from the generator rule (or from
    /// `Δ(Q_i) = Q_i ⊗ 1 + 1 ⊗ Q_i` for polynomials in the primitives).
    pub fn coproduct(&self, x: &Polynomial) -> Result<TensorElement> {
        let images = if self.is_generator_poly(x) {
            &self.generator_coproducts
        } else if self.is_primitive_poly(x) {
            &self.primitive_coproducts
        } else {
            return Err(Error::AlphabetMismatch);
        };
        let alphabet = x.alphabet();
        let mut out = TensorElement::zero(alphabet);
        for (m, c) in x.terms() {
            let mut t = TensorElement::unit(alphabet);
            for (i, e) in m.support() {
                for _ in 0..e {
                    t = t.multiply(&images[i])?;
                }
            }
            out = out.try_add(&t.scale(c))?;
        }
        Ok(out)
    }

    /// `Δ̄ = Δ - 1 ⊗ id - id ⊗ 1` on positive degrees, zero in degree zero.
    pub fn reduced_coproduct(&self, x: &Polynomial) -> Result<TensorElement> {
        let positive = x.filter_terms(|m| !m.is_one());
        let one = Polynomial::one(x.alphabet());
        let full = self.coproduct(&positive)?;
        full.try_sub(&TensorElement::tensor(&positive, &one)?)?
            .try_sub(&TensorElement::tensor(&one, &positive)?)
    }

    /// Newton power sum `s_j` in the generator alphabet; primitive.
    pub fn power_sum(&self, j: usize) -> Result<&Polynomial> {
        self.check_index(j)?;
        Ok(&self.power_sums[j - 1])
    }

    /// `s_j / j!`: the degree-`j·step` character component.
    pub fn character_component(&self, j: usize) -> Result<Polynomial> {
        let s = self.power_sum(j)?;
        let fact = (1..=j as u64).fold(BigInt::one(), |a, i| a * BigInt::from(i));
        Ok(s.scale(&(Rational::one() / Rational::from_integer(fact))))
    }

    /// Rewrites a polynomial in the generators as one in the primitives `Q_i`.
    pub fn to_primitive_basis(&self, x: &Polynomial) -> Result<Polynomial> {
        if self.is_primitive_poly(x) {
            return Ok(x.clone());
        }
        if !self.is_generator_poly(x) {
            return Err(Error::AlphabetMismatch);
        }
        x.substitute(&self.primitives, &self.generators_in_primitives)
    }

    /// Rewrites a polynomial in the `Q_i` in terms of the generators.
    pub fn from_primitive_basis(&self, x: &Polynomial) -> Result<Polynomial> {
        if self.is_generator_poly(x) {
            return Ok(x.clone());
        }
        if !self.is_primitive_poly(x) {
            return Err(Error::AlphabetMismatch);
        }
        x.substitute(&self.generators, &self.power_sums)
    }

    /// Component `L_k` of the Hirzebruch `L`-class (oriented model only).
    pub fn l_class_component(&self, k: usize) -> Result<&Polynomial> {
        if self.kind != ModelKind::SpecialOrthogonal {
            return Err(Error::invalid("the L-class lives in the oriented model"));
        }
        if k == 0 {
            return Err(Error::invalid("L-class components start at k = 1"));
        }
        self.check_index(k)?;
        Ok(&self.l_class[k])
    }

    /// `L_0 = 1, L_1, ...` up to the model bound.
    pub fn l_class_total(&self) -> &[Polynomial] {
        &self.l_class
    }

    /// Value of a grammar name in the generator alphabet: `c_i`/`p_i`,
    /// `Q_i` (the power sum) and `ch_i`/`ph_i` (character components).
    pub fn resolve_name(&self, name: &str) -> Result<Polynomial> {
        let letters: String = name.chars().take_while(|c| c.is_ascii_alphabetic()).collect();
        let index: Option<usize> = name[letters.len()..].parse().ok();
        let unknown = || Error::UnknownGenerator(name.to_string());
        match (letters.as_str(), index) {
            (l, Some(i)) if l == self.kind.generator_prefix() => {
                self.check_index(i)?;
                Ok(Polynomial::generator_at(&self.generators, i - 1))
            }
            ("Q", Some(i)) => Ok(self.power_sum(i)?.clone()),
            (l, Some(i)) if l == self.kind.character_prefix() => self.character_component(i),
            _ => Err(unknown()),
        }
    }

    /// Parses grammar text into the generator alphabet.
    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        let expr = parse_expr(text)?;
        expr.evaluate(&self.generators, |f| self.resolve_name(&f.name))
    }

    pub fn restricted(&self, rank: u32) -> Result<RestrictedModel> {
        RestrictedModel::new(self.kind, rank)
    }

    /// Restriction along `BU(d) -> BU` or `BSO(d) -> BSO`.
    pub fn restrict(&self, target: &RestrictedModel, x: &Polynomial) -> Result<Polynomial> {
        if target.kind != self.kind {
            return Err(Error::invalid("restriction target has a different model kind"));
        }
        let x = self.from_primitive_basis(x)?;
        let alpha = target.alphabet();
        let d = target.rank as usize;
        let images: Vec<Polynomial> = (1..=self.generator_count())
            .map(|i| match self.kind {
                ModelKind::Unitary if i <= d => Polynomial::generator_at(alpha, i - 1),
                ModelKind::SpecialOrthogonal if d % 2 == 1 && i <= (d - 1) / 2 => {
                    Polynomial::generator_at(alpha, i - 1)
                }
                ModelKind::SpecialOrthogonal if d.is_multiple_of(2) && i < d / 2 => {
                    Polynomial::generator_at(alpha, i - 1)
                }
                ModelKind::SpecialOrthogonal if d.is_multiple_of(2) && i == d / 2 => {
                    let e = Polynomial::generator_at(alpha, target.euler_index().unwrap());
                    &e * &e
                }
                _ => Polynomial::zero(alpha),
            })
            .collect();
        x.substitute(alpha, &images)
    }

    pub fn restrict_to(&self, rank: u32, x: &Polynomial) -> Result<Polynomial> {
        self.restrict(&self.restricted(rank)?, x)
    }
}
