//! Small commutative cohomology rings given by a generator alphabet and
//! rewrite rules `g^k -> (polynomial of lower g-degree)`.

use std::sync::Arc;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::exactq::Rational;
use crate::gradedalg::{enumerate_monomials, GeneratorAlphabet, Monomial, Polynomial};

/// `generator^power = replacement`, where the replacement has smaller
/// exponent in `generator`.
#[derive(Debug, Clone)]
pub struct Rule {
    pub generator: usize,
    pub power: u32,
    pub replacement: Polynomial,
}

/// A graded ring with finitely many even generators, a top degree and an
/// orientation monomial spanning the top slice.
#[derive(Debug, Clone)]
pub struct CohomologyRing {
    name: String,
    alphabet: Arc<GeneratorAlphabet>,
    rules: Vec<Rule>,
    top_degree: u32,
    orientation: Monomial,
    tangent_chern: Polynomial,
}

impl CohomologyRing {
    pub fn new(
        name: impl Into<String>,
        alphabet: Arc<GeneratorAlphabet>,
        rules: Vec<Rule>,
        top_degree: u32,
        orientation: Monomial,
        tangent_chern: Polynomial,
    ) -> Result<Self> {
        if alphabet.generators().iter().any(|g| g.degree % 2 == 1) {
            return Err(Error::invalid("cohomology rings here have even generators only"));
        }
        if orientation.degree() != top_degree {
            return Err(Error::DegreeMismatch {
                expected: top_degree,
                found: orientation.degree(),
            });
        }
        let mut ring = CohomologyRing {
            name: name.into(),
            alphabet,
            rules,
            top_degree,
            orientation,
            tangent_chern: Polynomial::zero(&GeneratorAlphabet::empty().shared()),
        };
        ring.tangent_chern = ring.reduce(&tangent_chern)?;
        Ok(ring)
    }

    /// The cohomology of a point.
    pub fn point() -> Self {
        let alphabet = GeneratorAlphabet::empty().shared();
        let one = Polynomial::one(&alphabet);
        CohomologyRing::new("pt", alphabet, Vec::new(), 0, Monomial::one(), one).expect("point ring")
    }

    /// `H*(CP^n) = Q[h]/h^{n+1}` with `c(T) = (1+h)^{n+1}`.
    pub fn projective_space(n: u32) -> Result<Self> {
        Self::projective_product(&[n])
    }

    /// `CP^{n_1} x ... x CP^{n_k}` with generators `h` (one factor) or
    /// `h1, ..., hk`.
    pub fn projective_product(dims: &[u32]) -> Result<Self> {
        if dims.is_empty() || dims.contains(&0) {
            return Err(Error::invalid("projective spaces need dimension at least 1"));
        }
        let names: Vec<String> = if dims.len() == 1 {
            vec!["h".to_string()]
        } else {
            (1..=dims.len()).map(|i| format!("h{i}")).collect()
        };
        let alphabet = GeneratorAlphabet::new(names.iter().map(|n| (n.clone(), 2)))?.shared();
        let rules = dims
            .iter()
            .enumerate()
            .map(|(i, &n)| Rule {
                generator: i,
                power: n + 1,
                replacement: Polynomial::zero(&alphabet),
            })
            .collect();
        let orientation = Monomial::from_exponents(&alphabet, dims.to_vec()).expect("even generators");
        let top = 2 * dims.iter().sum::<u32>();
        let one = Polynomial::one(&alphabet);
        let mut tangent = one.clone();
        for (i, &n) in dims.iter().enumerate() {
            let factor = &one + &Polynomial::generator_at(&alphabet, i);
            tangent = tangent.multiply_truncated(&factor.pow(n + 1), top)?;
        }
        let name = dims.iter().map(|n| format!("cp{n}")).collect::<Vec<_>>().join("x");
        CohomologyRing::new(name, alphabet, rules, top, orientation, tangent)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn alphabet(&self) -> &Arc<GeneratorAlphabet> {
        &self.alphabet
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn top_degree(&self) -> u32 {
        self.top_degree
    }

    pub fn orientation(&self) -> &Monomial {
        &self.orientation
    }

    /// Total Chern class of the (stable) tangent bundle.
    pub fn tangent_chern(&self) -> &Polynomial {
        &self.tangent_chern
    }

    fn is_reduced(&self, m: &Monomial) -> bool {
        self.rules.iter().all(|r| m.exponent(r.generator) < r.power)
    }

    /// Normal form: no rule applies and nothing lies above the top degree.
    pub fn reduce(&self, p: &Polynomial) -> Result<Polynomial> {
        let p = if Arc::ptr_eq(p.alphabet(), &self.alphabet) || **p.alphabet() == *self.alphabet {
            p.clone()
        } else if p.terms().all(|(m, _)| m.is_one()) {
            Polynomial::constant(&self.alphabet, p.constant_term())
        } else {
            return Err(Error::AlphabetMismatch);
        };
        let mut out = Polynomial::zero(&self.alphabet);
        let mut pending: Vec<(Monomial, Rational)> = p.into_terms().collect();
        while let Some((m, c)) = pending.pop() {
            if m.degree() > self.top_degree || c.is_zero() {
                continue;
            }
            let Some(rule) = self.rules.iter().find(|r| m.exponent(r.generator) >= r.power) else {
                out.add_term(m, c);
                continue;
            };
            let mut exps = m.exponents().to_vec();
            exps[rule.generator] -= rule.power;
            let rest = Monomial::from_exponents(&self.alphabet, exps).expect("even generators");
            let rest = Polynomial::from_monomial(&self.alphabet, rest, c);
            let expanded = rest.multiply_truncated(&rule.replacement, self.top_degree)?;
            pending.extend(expanded.into_terms());
        }
        Ok(out)
    }

    pub fn multiply(&self, a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
        self.reduce(&a.multiply_truncated(b, self.top_degree)?)
    }

    /// Additive basis of the degree-`k` slice.
    pub fn basis(&self, degree: u32) -> Vec<Monomial> {
        if degree > self.top_degree {
            return Vec::new();
        }
        enumerate_monomials(&self.alphabet, degree)
            .into_iter()
            .filter(|m| self.is_reduced(m))
            .collect()
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        (0..=self.top_degree).map(|k| self.basis(k).len()).collect()
    }

    /// Pairing with the fundamental class: the orientation coefficient of
    /// the normal form.
    pub fn evaluate(&self, p: &Polynomial) -> Result<Rational> {
        Ok(self.reduce(p)?.coefficient(&self.orientation))
    }

    /// Generator `name` as a polynomial.
    pub fn generator(&self, name: &str) -> Result<Polynomial> {
        Polynomial::generator(&self.alphabet, name)
    }

    /// Applies `g_i -> images[i]` with products taken in this ring.
    pub fn substitute(&self, x: &Polynomial, images: &[Polynomial]) -> Result<Polynomial> {
        x.substitute_with(&self.alphabet, images, |a, b| self.multiply(a, b))
    }

    /// The Chern classes `c_1, ..., c_n` of a total Chern class, as far as
    /// the top degree allows.
    pub fn chern_components(&self, total: &Polynomial) -> Vec<Polynomial> {
        (1..=self.top_degree / 2).map(|i| total.component(2 * i)).collect()
    }

    /// Pontrjagin classes of the underlying real bundle of a complex bundle
    /// with total Chern class `c`: `p_k = (-1)^k [c · c̄]_{4k}`.
    pub fn pontrjagin_components(&self, c: &Polynomial) -> Result<Vec<Polynomial>> {
        let conj = Polynomial::from_terms(
            &self.alphabet,
            c.terms().map(|(m, x)| {
                let sign = if (m.degree() / 2) % 2 == 1 { -x.clone() } else { x.clone() };
                (m.clone(), sign)
            }),
        );
        let product = self.multiply(c, &conj)?;
        Ok((1..=self.top_degree / 4)
            .map(|k| {
                let comp = product.component(4 * k);
                if k % 2 == 1 {
                    comp.scale(&-Rational::one())
                } else {
                    comp
                }
            })
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::rat;

    #[test]
    fn projective_space_examples() {
        let cp1 = CohomologyRing::projective_space(1).unwrap();
        assert_eq!(cp1.betti_numbers(), [1, 0, 1]);
        assert_eq!(cp1.evaluate(&cp1.generator("h").unwrap()).unwrap(), rat(1));

        let cp2 = CohomologyRing::projective_space(2).unwrap();
        let c = cp2.chern_components(cp2.tangent_chern());
        assert_eq!(c[0].to_string(), "3*h");
        assert_eq!(c[1].to_string(), "3*h^2");
        let h = cp2.generator("h").unwrap();
        assert!(cp2.multiply(&h, &cp2.multiply(&h, &h).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn product_of_lines() {
        let r = CohomologyRing::projective_product(&[1, 1]).unwrap();
        assert_eq!(r.betti_numbers(), [1, 0, 2, 0, 1]);
        let c = r.chern_components(r.tangent_chern());
        assert_eq!(r.evaluate(&c[1]).unwrap(), rat(4));
        assert_eq!(r.evaluate(&r.multiply(&c[0], &c[0]).unwrap()).unwrap(), rat(8));
    }

    #[test]
    fn poincare_duality_holds() {
        for dims in [&[3u32][..], &[1, 2], &[2, 2], &[1, 1, 1]] {
            let r = CohomologyRing::projective_product(dims).unwrap();
            let b = r.betti_numbers();
            let rev: Vec<usize> = b.iter().rev().copied().collect();
            assert_eq!(b, rev);
        }
    }

    #[test]
    fn pontrjagin_of_cp2() {
        let cp2 = CohomologyRing::projective_space(2).unwrap();
        let p = cp2.pontrjagin_components(cp2.tangent_chern()).unwrap();
        assert_eq!(p[0].to_string(), "3*h^2");
        assert_eq!(CohomologyRing::point().evaluate(&Polynomial::one(CohomologyRing::point().alphabet())).unwrap(), rat(1));
    }
}
