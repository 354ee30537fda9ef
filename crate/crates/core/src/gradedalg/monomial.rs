use std::cmp::Ordering;
use std::fmt::Write;

use super::alphabet::GeneratorAlphabet;

/// Exponent vector over a generator alphabet, trailing zeros trimmed.
///
/// Monomials order by degree first; within a degree, higher powers of
/// lower-index generators come first (`p1^2 < p2`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u32,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            degree: 0,
            exps: Vec::new(),
        }
    }

    /// Builds a monomial from a full exponent vector. Returns `None` when an
    /// odd generator appears with exponent above one (such a monomial is zero).
    pub fn from_exponents(alphabet: &GeneratorAlphabet, mut exps: Vec<u32>) -> Option<Self> {
        assert!(exps.len() <= alphabet.len(), "exponent vector longer than alphabet");
        let mut degree = 0;
        for (i, &e) in exps.iter().enumerate() {
            if e > 1 && alphabet.is_odd(i) {
                return None;
            }
            degree += e * alphabet.degree(i);
        }
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Some(Monomial { degree, exps })
    }

    pub fn generator(alphabet: &GeneratorAlphabet, i: usize) -> Self {
        let mut exps = vec![0; i + 1];
        exps[i] = 1;
        Monomial {
            degree: alphabet.degree(i),
            exps,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps.get(i).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Total number of generator factors, counted with multiplicity.
    pub fn length(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i, e))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() <= other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn complement_in(&self, other: &Monomial, alphabet: &GeneratorAlphabet) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = (0..other.exps.len())
            .map(|i| other.exponent(i) - self.exponent(i))
            .collect();
        Monomial::from_exponents(alphabet, exps)
    }

    /// Product of two monomials with the Koszul sign picked up by sorting odd
    /// generators into index order. `None` when an odd generator would square.
    pub fn multiply(&self, other: &Monomial, alphabet: &GeneratorAlphabet) -> Option<(Monomial, bool)> {
        let n = self.exps.len().max(other.exps.len());
        let mut exps = vec![0; n];
        for (i, e) in exps.iter_mut().enumerate() {
            *e = self.exponent(i) + other.exponent(i);
            if *e > 1 && alphabet.is_odd(i) {
                return None;
            }
        }
        // Each odd factor of `other` moves left past the odd factors of
        // `self` with a larger index.
        let mut negative = false;
        let mut odd_in_self_above = 0u32;
        for i in (0..n).rev() {
            if !alphabet.is_odd(i) {
                continue;
            }
            if other.exponent(i) == 1 && odd_in_self_above % 2 == 1 {
                negative = !negative;
            }
            if self.exponent(i) == 1 {
                odd_in_self_above += 1;
            }
        }
        Some((
            Monomial {
                degree: self.degree + other.degree,
                exps,
            },
            negative,
        ))
    }

    pub fn display(&self, alphabet: &GeneratorAlphabet) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut out = String::new();
        for (i, e) in self.support() {
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(&alphabet.generator(i).name);
            if e > 1 {
                write!(out, "^{e}").unwrap();
            }
        }
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            let n = self.exps.len().max(other.exps.len());
            for i in 0..n {
                let (a, b) = (self.exponent(i), other.exponent(i));
                if a != b {
                    return b.cmp(&a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
