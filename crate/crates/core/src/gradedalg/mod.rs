//! Graded-commutative polynomial and tensor algebra over weighted alphabets.

mod alphabet;
mod monomial;
pub mod parse;
mod polynomial;
mod tensor;

use std::sync::Arc;

pub use alphabet::{Generator, GeneratorAlphabet, Parity};
pub use monomial::Monomial;
pub use parse::{parse_expr, parse_polynomial, Expr};
pub use polynomial::Polynomial;
pub use tensor::TensorElement;

use num::Zero;

use crate::error::{Error, Result};
use crate::exactq::Rational;

/// All monomials of total degree `degree`, in canonical order.
pub fn enumerate_monomials(alphabet: &GeneratorAlphabet, degree: u32) -> Vec<Monomial> {
    fn walk(
        alphabet: &GeneratorAlphabet,
        i: usize,
        remaining: u32,
        exps: &mut Vec<u32>,
        out: &mut Vec<Monomial>,
    ) {
        if remaining == 0 {
            out.push(Monomial::from_exponents(alphabet, exps[..i].to_vec()).expect("valid exponents"));
            return;
        }
        if i == alphabet.len() {
            return;
        }
        let g = alphabet.degree(i);
        let mut max = remaining / g;
        if alphabet.is_odd(i) {
            max = max.min(1);
        }
        for e in (0..=max).rev() {
            exps[i] = e;
            walk(alphabet, i + 1, remaining - e * g, exps, out);
        }
        exps[i] = 0;
    }
    let mut out = Vec::new();
    let mut exps = vec![0; alphabet.len()];
    walk(alphabet, 0, degree, &mut exps, &mut out);
    out
}

/// Slice dimensions in degrees `0..=max_degree`, from the truncated product
/// of `(1 - t^|g|)^-1` over even generators and `(1 + t^|g|)` over odd ones.
pub fn poincare_series(alphabet: &GeneratorAlphabet, max_degree: u32) -> Vec<u64> {
    let n = max_degree as usize;
    let mut series = vec![0u64; n + 1];
    series[0] = 1;
    for g in alphabet.generators() {
        let d = g.degree as usize;
        if d > n {
            continue;
        }
        match g.parity {
            Parity::Even => {
                for k in d..=n {
                    series[k] += series[k - d];
                }
            }
            Parity::Odd => {
                for k in (d..=n).rev() {
                    series[k] += series[k - d];
                }
            }
        }
    }
    series
}

/// Coordinates of a homogeneous polynomial in a sorted monomial basis.
pub fn degree_slice_vector(p: &Polynomial, degree: u32, basis: &[Monomial]) -> Result<Vec<Rational>> {
    if let Some(d) = p.homogeneous_degree()? {
        if d != degree {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: d,
            });
        }
    }
    let mut v = vec![Rational::zero(); basis.len()];
    for (m, c) in p.terms() {
        let i = basis
            .binary_search(m)
            .map_err(|_| Error::MonomialNotInBasis(m.display(p.alphabet())))?;
        v[i] = c.clone();
    }
    Ok(v)
}

pub fn vector_to_polynomial(alphabet: &Arc<GeneratorAlphabet>, basis: &[Monomial], v: &[Rational]) -> Polynomial {
    Polynomial::from_terms(
        alphabet,
        basis.iter().cloned().zip(v.iter().cloned()),
    )
}
