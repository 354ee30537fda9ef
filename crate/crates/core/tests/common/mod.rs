//! Independent oracles shared by the integration tests.
//!
//! Everything here works with formal roots or plain coefficient maps rather
//! than with the library's Newton-identity or coproduct code.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use hopfchar::exactq::{rat, QMatrix};
use hopfchar::gradedalg::{enumerate_monomials, GeneratorAlphabet, Monomial};
use hopfchar::{HopfModel, Polynomial, Rational};
use num::{One, Zero};

/// A polynomial in `n` commuting variables, keyed by exponent vectors.
pub type RootPoly = BTreeMap<Vec<u32>, Rational>;

fn add_into(acc: &mut RootPoly, key: Vec<u32>, c: Rational) {
    let entry = acc.entry(key.clone()).or_insert_with(Rational::zero);
    *entry += c;
    if entry.is_zero() {
        acc.remove(&key);
    }
}

fn total_degree(key: &[u32]) -> u32 {
    key.iter().sum()
}

/// Product truncated above total degree `max`.
pub fn root_mul(a: &RootPoly, b: &RootPoly, max: u32) -> RootPoly {
    let mut out = RootPoly::new();
    for (ka, ca) in a {
        for (kb, cb) in b {
            let key: Vec<u32> = ka.iter().zip(kb).map(|(x, y)| x + y).collect();
            if total_degree(&key) <= max {
                add_into(&mut out, key, ca * cb);
            }
        }
    }
    out
}

fn factorial(n: u64) -> Rational {
    (1..=n).fold(Rational::one(), |acc, i| acc * rat(i as i64))
}

/// Power series division `a / b` up to `z^n`; `b[0]` must be nonzero.
pub fn series_div(a: &[Rational], b: &[Rational], n: usize) -> Vec<Rational> {
    let mut q = vec![Rational::zero(); n + 1];
    for k in 0..=n {
        let mut acc = a.get(k).cloned().unwrap_or_else(Rational::zero);
        for i in 1..=k {
            if let Some(bi) = b.get(i) {
                acc -= bi * &q[k - i];
            }
        }
        q[k] = acc / &b[0];
    }
    q
}

/// Coefficients of `sqrt(z)/tanh(sqrt(z))` as `cosh / (sinh(x)/x)` in `z = x^2`.
pub fn x_over_tanh_x(n: usize) -> Vec<Rational> {
    let cosh: Vec<Rational> = (0..=n).map(|k| Rational::one() / factorial(2 * k as u64)).collect();
    let sinhc: Vec<Rational> = (0..=n).map(|k| Rational::one() / factorial(2 * k as u64 + 1)).collect();
    series_div(&cosh, &sinhc, n)
}

/// `e_k` of `vars` commuting variables, as a root polynomial.
pub fn elementary(vars: usize, k: usize) -> RootPoly {
    let mut out = RootPoly::new();
    for mask in 0u32..(1 << vars) {
        if mask.count_ones() as usize == k {
            let key: Vec<u32> = (0..vars).map(|i| (mask >> i) & 1).collect();
            add_into(&mut out, key, Rational::one());
        }
    }
    out
}

/// Writes a symmetric root polynomial, homogeneous of degree `degree` in
/// the variables, as a polynomial in the elementary symmetric functions,
/// which are named by `alphabet` (generator `i` is `e_{i+1}`).
pub fn symmetric_to_elementary(
    f: &RootPoly,
    vars: usize,
    degree: u32,
    alphabet: &Arc<GeneratorAlphabet>,
    weight: u32,
) -> Polynomial {
    let basis = enumerate_monomials(alphabet, degree * weight);
    let columns: Vec<RootPoly> = basis
        .iter()
        .map(|m| {
            let mut acc = RootPoly::new();
            acc.insert(vec![0; vars], Rational::one());
            for (i, e) in m.support() {
                for _ in 0..e {
                    acc = root_mul(&acc, &elementary(vars, i + 1), degree);
                }
            }
            acc
        })
        .collect();
    let mut keys: Vec<Vec<u32>> = f.keys().cloned().collect();
    for c in &columns {
        keys.extend(c.keys().cloned());
    }
    keys.sort();
    keys.dedup();
    let rows: Vec<Vec<Rational>> = keys
        .iter()
        .map(|k| columns.iter().map(|c| c.get(k).cloned().unwrap_or_else(Rational::zero)).collect())
        .collect();
    let b: Vec<Rational> = keys.iter().map(|k| f.get(k).cloned().unwrap_or_else(Rational::zero)).collect();
    let m = QMatrix::from_rows(basis.len(), rows).unwrap();
    let x = m.solve(&b).unwrap().expect("symmetric input");
    Polynomial::from_terms(alphabet, basis.into_iter().zip(x))
}

/// `L_1, ..., L_n` in the Pontrjagin classes from `Π_i x_i/tanh(x_i)` over
/// `roots` formal roots, with `p_k = e_k(x_1^2, ...)`.
pub fn l_class_oracle(n: usize, roots: usize, alphabet: &Arc<GeneratorAlphabet>) -> Vec<Polynomial> {
    let q = x_over_tanh_x(n);
    let mut product = RootPoly::new();
    product.insert(vec![0; roots], Rational::one());
    for i in 0..roots {
        let mut factor = RootPoly::new();
        for (k, c) in q.iter().enumerate() {
            let mut key = vec![0; roots];
            key[i] = k as u32;
            factor.insert(key, c.clone());
        }
        product = root_mul(&product, &factor, n as u32);
    }
    (1..=n as u32)
        .map(|deg| {
            let slice: RootPoly = product
                .iter()
                .filter(|(k, _)| total_degree(k) == deg)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect();
            symmetric_to_elementary(&slice, roots, deg, alphabet, 4)
        })
        .collect()
}

/// Values `e_1, ..., e_n` of the elementary symmetric functions of `roots`.
pub fn elementary_values(roots: &[Rational], n: usize) -> Vec<Rational> {
    let mut e = vec![Rational::zero(); n + 1];
    e[0] = Rational::one();
    for r in roots {
        for k in (1..=n).rev() {
            let prev = e[k - 1].clone();
            e[k] += prev * r;
        }
    }
    e.remove(0);
    e
}

/// Evaluates a polynomial with generator `i` set to `values[i]`.
pub fn evaluate(p: &Polynomial, values: &[Rational]) -> Rational {
    let mut total = Rational::zero();
    for (m, c) in p.terms() {
        let mut v = c.clone();
        for (i, e) in m.support() {
            for _ in 0..e {
                v *= &values[i];
            }
        }
        total += v;
    }
    total
}

/// Three-fold tensors for coassociativity.
pub type Triple = BTreeMap<(Monomial, Monomial, Monomial), Rational>;

fn add_triple(acc: &mut Triple, key: (Monomial, Monomial, Monomial), c: Rational) {
    let entry = acc.entry(key.clone()).or_insert_with(Rational::zero);
    *entry += c;
    if entry.is_zero() {
        acc.remove(&key);
    }
}

/// `(Δ ⊗ id)Δ(x)` and `(id ⊗ Δ)Δ(x)` for an even model.
pub fn coassociativity_sides(model: &HopfModel, x: &Polynomial) -> (Triple, Triple) {
    let alphabet = x.alphabet().clone();
    let delta = model.coproduct(x).unwrap();
    let mut left = Triple::new();
    let mut right = Triple::new();
    for ((a, b), c) in delta.terms() {
        let da = model
            .coproduct(&Polynomial::from_monomial(&alphabet, a.clone(), Rational::one()))
            .unwrap();
        for ((a1, a2), c2) in da.terms() {
            add_triple(&mut left, (a1.clone(), a2.clone(), b.clone()), c * c2);
        }
        let db = model
            .coproduct(&Polynomial::from_monomial(&alphabet, b.clone(), Rational::one()))
            .unwrap();
        for ((b1, b2), c2) in db.terms() {
            add_triple(&mut right, (a.clone(), b1.clone(), b2.clone()), c * c2);
        }
    }
    (left, right)
}
