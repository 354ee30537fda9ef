use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::{One, Signed, Zero};

use super::alphabet::{same_alphabet, GeneratorAlphabet};
use super::monomial::Monomial;
use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::exactq::Rational;

/// A finite rational combination of `a ⊗ b` with `a`, `b` monomials over the
/// same alphabet.
#[derive(Clone)]
pub struct TensorElement {
    alphabet: Arc<GeneratorAlphabet>,
    terms: BTreeMap<(Monomial, Monomial), Rational>,
}

impl PartialEq for TensorElement {
    fn eq(&self, other: &Self) -> bool {
        same_alphabet(&self.alphabet, &other.alphabet) && self.terms == other.terms
    }
}

impl Eq for TensorElement {}

impl TensorElement {
    pub fn zero(alphabet: &Arc<GeneratorAlphabet>) -> Self {
        TensorElement {
            alphabet: alphabet.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(alphabet: &Arc<GeneratorAlphabet>) -> Self {
        Self::pure(alphabet, Monomial::one(), Monomial::one(), Rational::one())
    }

    pub fn pure(alphabet: &Arc<GeneratorAlphabet>, a: Monomial, b: Monomial, c: Rational) -> Self {
        let mut t = Self::zero(alphabet);
        t.add_term(a, b, c);
        t
    }

    /// `x ⊗ y` for polynomials.
    pub fn tensor(x: &Polynomial, y: &Polynomial) -> Result<Self> {
        if !same_alphabet(x.alphabet(), y.alphabet()) {
            return Err(Error::AlphabetMismatch);
        }
        let mut t = Self::zero(x.alphabet());
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                t.add_term(a.clone(), b.clone(), ca * cb);
            }
        }
        Ok(t)
    }

    pub fn alphabet(&self) -> &Arc<GeneratorAlphabet> {
        &self.alphabet
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, Monomial), &Rational)> {
        self.terms.iter()
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

    pub fn coefficient(&self, a: &Monomial, b: &Monomial) -> Rational {
        self.terms
            .get(&(a.clone(), b.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, a: Monomial, b: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((a, b)) {
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

    pub fn try_add(&self, other: &TensorElement) -> Result<TensorElement> {
        if !same_alphabet(&self.alphabet, &other.alphabet) {
            return Err(Error::AlphabetMismatch);
        }
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &TensorElement) -> Result<TensorElement> {
        self.try_add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> TensorElement {
        let mut out = Self::zero(&self.alphabet);
        for ((a, b), x) in &self.terms {
            out.add_term(a.clone(), b.clone(), x * c);
        }
        out
    }

    /// Product in `H ⊗ H`: `(a⊗b)(c⊗d) = (-1)^{|b||c|} ac ⊗ bd`.
    pub fn multiply(&self, other: &TensorElement) -> Result<TensorElement> {
        if !same_alphabet(&self.alphabet, &other.alphabet) {
            return Err(Error::AlphabetMismatch);
        }
        let alpha = &self.alphabet;
        let mut out = Self::zero(alpha);
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &other.terms {
                let Some((ac, s1)) = a.multiply(c, alpha) else { continue };
                let Some((bd, s2)) = b.multiply(d, alpha) else { continue };
                let s3 = b.degree() % 2 == 1 && c.degree() % 2 == 1;
                let coef = x * y;
                let negative = s1 ^ s2 ^ s3;
                out.add_term(ac, bd, if negative { -coef } else { coef });
            }
        }
        Ok(out)
    }

    /// Keeps only the terms whose pair of monomials satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Monomial, &Monomial) -> bool) -> TensorElement {
        TensorElement {
            alphabet: self.alphabet.clone(),
            terms: self
                .terms
                .iter()
                .filter(|((a, b), _)| keep(a, b))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Collapses the right factor by its degree-zero projection.
    pub fn counit_right(&self) -> Polynomial {
        Polynomial::from_terms(
            &self.alphabet,
            self.terms
                .iter()
                .filter(|((_, b), _)| b.is_one())
                .map(|((a, _), c)| (a.clone(), c.clone())),
        )
    }

    /// Collapses the left factor by its degree-zero projection.
    pub fn counit_left(&self) -> Polynomial {
        Polynomial::from_terms(
            &self.alphabet,
            self.terms
                .iter()
                .filter(|((a, _), _)| a.is_one())
                .map(|((_, b), c)| (b.clone(), c.clone())),
        )
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((a, b), c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(
                f,
                "{}⊗{}",
                a.display(&self.alphabet),
                b.display(&self.alphabet)
            )?;
        }
        Ok(())
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorElement({self})")
    }
}
