use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::{One, Signed, Zero};

use super::alphabet::{same_alphabet, GeneratorAlphabet};
use super::monomial::Monomial;
use crate::error::{Error, Result};
use crate::exactq::Rational;

/// A finite rational combination of monomials over one alphabet.
/// Zero coefficients are never stored.
#[derive(Clone)]
pub struct Polynomial {
    alphabet: Arc<GeneratorAlphabet>,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_alphabet(&self.alphabet, &other.alphabet) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(alphabet: &Arc<GeneratorAlphabet>) -> Self {
        Polynomial {
            alphabet: alphabet.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(alphabet: &Arc<GeneratorAlphabet>) -> Self {
        Self::constant(alphabet, Rational::one())
    }

    pub fn constant(alphabet: &Arc<GeneratorAlphabet>, c: Rational) -> Self {
        Self::from_monomial(alphabet, Monomial::one(), c)
    }

    pub fn from_monomial(alphabet: &Arc<GeneratorAlphabet>, m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(alphabet);
        p.add_term(m, c);
        p
    }

    pub fn generator_at(alphabet: &Arc<GeneratorAlphabet>, i: usize) -> Self {
        let m = Monomial::generator(alphabet, i);
        Self::from_monomial(alphabet, m, Rational::one())
    }

    pub fn generator(alphabet: &Arc<GeneratorAlphabet>, name: &str) -> Result<Self> {
        let i = alphabet
            .position(name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        Ok(Self::generator_at(alphabet, i))
    }

    pub fn from_terms<I>(alphabet: &Arc<GeneratorAlphabet>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(alphabet);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn alphabet(&self) -> &Arc<GeneratorAlphabet> {
        &self.alphabet
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Rational)> {
        self.terms.into_iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Constant term (degree-zero projection).
    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one())
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// The common degree of all terms: `Ok(None)` for zero, an error when
    /// terms of different degrees are present.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let Some(first) = degrees.next() else {
            return Ok(None);
        };
        if degrees.all(|d| d == first) {
            Ok(Some(first))
        } else {
            Err(Error::Inhomogeneous)
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_ok()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn component(&self, degree: u32) -> Polynomial {
        self.filter_terms(|m| m.degree() == degree)
    }

    pub fn filter_terms(&self, mut keep: impl FnMut(&Monomial) -> bool) -> Polynomial {
        Polynomial {
            alphabet: self.alphabet.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.alphabet);
        }
        Polynomial {
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    fn check_alphabet(&self, other: &Polynomial) -> Result<()> {
        if same_alphabet(&self.alphabet, &other.alphabet) {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_alphabet(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    /// Graded-commutative product; odd generators anticommute and square to zero.
    pub fn multiply(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_alphabet(other)?;
        let mut out = Polynomial::zero(&self.alphabet);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some((m, negative)) = a.multiply(b, &self.alphabet) {
                    let c = ca * cb;
                    out.add_term(m, if negative { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// Product truncated to degrees `<= max_degree`.
    pub fn multiply_truncated(&self, other: &Polynomial, max_degree: u32) -> Result<Polynomial> {
        self.check_alphabet(other)?;
        let mut out = Polynomial::zero(&self.alphabet);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if a.degree() + b.degree() > max_degree {
                    continue;
                }
                if let Some((m, negative)) = a.multiply(b, &self.alphabet) {
                    let c = ca * cb;
                    out.add_term(m, if negative { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.alphabet);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// The ring map sending generator `i` to `images[i]`, applied to `self`.
    /// Generator powers are multiplied in index order.
    pub fn substitute(&self, target: &Arc<GeneratorAlphabet>, images: &[Polynomial]) -> Result<Polynomial> {
        self.substitute_with(target, images, |a, b| a.multiply(b))
    }

    /// Like [`Polynomial::substitute`], with a caller-supplied product (used by
    /// quotient rings that reduce after every multiplication).
    pub fn substitute_with<F>(
        &self,
        target: &Arc<GeneratorAlphabet>,
        images: &[Polynomial],
        mut product: F,
    ) -> Result<Polynomial>
    where
        F: FnMut(&Polynomial, &Polynomial) -> Result<Polynomial>,
    {
        if images.len() < self.alphabet.len() {
            return Err(Error::DimensionMismatch {
                expected: self.alphabet.len(),
                found: images.len(),
            });
        }
        let mut powers: BTreeMap<(usize, u32), Polynomial> = BTreeMap::new();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut value = Polynomial::constant(target, c.clone());
            for (i, e) in m.support() {
                if let Entry::Vacant(slot) = powers.entry((i, e)) {
                    let mut p = Polynomial::one(target);
                    for _ in 0..e {
                        p = product(&p, &images[i])?;
                    }
                    slot.insert(p);
                }
                value = product(&value, &powers[&(i, e)])?;
            }
            out = out.try_add(&value)?;
        }
        Ok(out)
    }

    /// Re-expresses the polynomial over another alphabet that contains every
    /// generator of this one under the same name and degree.
    pub fn embed_into(&self, target: &Arc<GeneratorAlphabet>) -> Result<Polynomial> {
        let mut map = Vec::with_capacity(self.alphabet.len());
        for g in self.alphabet.generators() {
            let j = target
                .position(&g.name)
                .filter(|&j| target.degree(j) == g.degree)
                .ok_or_else(|| Error::UnknownGenerator(g.name.clone()))?;
            map.push(j);
        }
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0; target.len()];
            for (i, e) in m.support() {
                exps[map[i]] = e;
            }
            let mono = Monomial::from_exponents(target, exps).expect("exponents already valid");
            // Re-sorting odd generators into the target order can flip the sign.
            let sign_flip = embedding_sign(m, &map, &self.alphabet);
            out.add_term(mono, if sign_flip { -c.clone() } else { c.clone() });
        }
        Ok(out)
    }
}

fn embedding_sign(m: &Monomial, map: &[usize], alphabet: &GeneratorAlphabet) -> bool {
    let odd: Vec<usize> = m
        .support()
        .filter(|&(i, _)| alphabet.is_odd(i))
        .map(|(i, _)| map[i])
        .collect();
    let mut inversions = 0;
    for a in 0..odd.len() {
        for b in a + 1..odd.len() {
            if odd[a] > odd[b] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", m.display(&self.alphabet))?;
            } else {
                write!(f, "{abs}*{}", m.display(&self.alphabet))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

// Operator forms panic on alphabet mismatch; use the `try_*`/`multiply`
// methods where the alphabets are not known to agree.

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("alphabet mismatch in +")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(&-rhs).expect("alphabet mismatch in -")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.multiply(rhs).expect("alphabet mismatch in *")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
