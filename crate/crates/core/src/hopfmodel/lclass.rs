//! Bernoulli numbers and the Hirzebruch `L`-class as a multiplicative sequence.

use num::{BigInt, One, Zero};

use crate::exactq::{rat, Rational};
use crate::gradedalg::Polynomial;

fn binomial(n: u64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `B_0 ..= B_n` from `sum_{k=0}^{m} C(m+1, k) B_k = 0`, so `B_1 = -1/2`.
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    b.push(Rational::one());
    for m in 1..=n {
        let mut acc = Rational::zero();
        for (k, bk) in b.iter().enumerate() {
            acc += Rational::from_integer(binomial(m as u64 + 1, k as u64)) * bk;
        }
        b.push(-acc / rat(m as i64 + 1));
    }
    b
}

/// Coefficients of `sqrt(z)/tanh(sqrt(z)) = sum_n 2^{2n} B_{2n} z^n / (2n)!`,
/// up to and including `z^n`.
pub fn characteristic_series(n: usize) -> Vec<Rational> {
    let b = bernoulli_numbers(2 * n);
    (0..=n)
        .map(|k| {
            let pow = Rational::from_integer(BigInt::one() << (2 * k));
            pow * &b[2 * k] / Rational::from_integer(factorial(2 * k as u64))
        })
        .collect()
}

/// Formal logarithm of a power series with constant term 1, via
/// `n l_n = n f_n - sum_{k<n} k l_k f_{n-k}`.
pub fn series_log(f: &[Rational]) -> Vec<Rational> {
    assert!(f.first().is_some_and(One::is_one), "log needs constant term 1");
    let mut l = vec![Rational::zero(); f.len()];
    for n in 1..f.len() {
        let mut acc = rat(n as i64) * &f[n];
        for k in 1..n {
            acc -= rat(k as i64) * &l[k] * &f[n - k];
        }
        l[n] = acc / rat(n as i64);
    }
    l
}

/// `L_0 ..= L_{power_sums.len()}` from `log L = sum_k a_k s_k(p)`.
///
/// `power_sums[k-1]` must be the Newton power sum `s_k` in the Pontrjagin
/// classes. The exponential is taken degree by degree:
/// `n L_n = sum_{k=1}^{n} k y_k L_{n-k}` with `y_k = a_k s_k`.
pub fn l_class_components(power_sums: &[Polynomial]) -> Vec<Polynomial> {
    let n = power_sums.len();
    let Some(first) = power_sums.first() else {
        return Vec::new();
    };
    let alphabet = first.alphabet().clone();
    let log_coeffs = series_log(&characteristic_series(n));
    let y: Vec<Polynomial> = (1..=n).map(|k| power_sums[k - 1].scale(&log_coeffs[k])).collect();
    let mut l = vec![Polynomial::one(&alphabet)];
    for m in 1..=n {
        let mut acc = Polynomial::zero(&alphabet);
        for k in 1..=m {
            let term = (&y[k - 1] * &l[m - k]).scale(&rat(k as i64));
            acc = &acc + &term;
        }
        l.push(acc.scale(&(Rational::one() / rat(m as i64))));
    }
    l
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::ratio;

    #[test]
    fn bernoulli_values() {
        let b = bernoulli_numbers(12);
        assert_eq!(b[1], ratio(-1, 2));
        assert_eq!(b[2], ratio(1, 6));
        assert_eq!(b[3], rat(0));
        assert_eq!(b[4], ratio(-1, 30));
        assert_eq!(b[6], ratio(1, 42));
        assert_eq!(b[12], ratio(-691, 2730));
    }

    #[test]
    fn characteristic_series_matches_x_coth_x() {
        let f = characteristic_series(3);
        assert_eq!(f, vec![rat(1), ratio(1, 3), ratio(-1, 45), ratio(2, 945)]);
    }

    #[test]
    fn log_of_exp_series() {
        // exp(z) truncated; its log is z.
        let f: Vec<Rational> = (0..6i64)
            .map(|k| Rational::one() / Rational::from_integer(factorial(k as u64)))
            .collect();
        let l = series_log(&f);
        assert_eq!(l[1], rat(1));
        assert!(l[2..].iter().all(Zero::is_zero));
    }
}
