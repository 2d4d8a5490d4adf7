//! Independent oracles for the acceptance and property tests. Nothing here
//! calls into the routines it is used to check.

#![allow(dead_code)]

use std::collections::BTreeMap;

use mpcone_core::rational::{int, Rational};
use mpcone_core::Partition;
use num_traits::{One, Zero};

pub fn rising(x: &Rational, k: usize) -> Rational {
    (0..k).fold(Rational::one(), |acc, i| acc * (x + int(i as i64)))
}

pub fn falling(x: &Rational, k: usize) -> Rational {
    (0..k).fold(Rational::one(), |acc, i| acc * (x - int(i as i64)))
}

pub fn fact(k: usize) -> Rational {
    (1..=k).fold(Rational::one(), |acc, i| acc * int(i as i64))
}

pub fn choose(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    fact(n) / (fact(k) * fact(n - k))
}

fn interlaces(outer: &[usize], inner: &[usize]) -> bool {
    // outer_1 >= inner_1 >= outer_2 >= inner_2 >= ...
    let at = |v: &[usize], i: usize| v.get(i).copied().unwrap_or(0);
    (0..outer.len().max(inner.len())).all(|i| at(outer, i) >= at(inner, i) && at(inner, i) >= at(outer, i + 1))
}

/// Kostka number `K_{λμ}`: semistandard tableaux of shape `λ` and content `μ`,
/// counted as chains of horizontal strips.
pub fn kostka(lambda: &Partition, content: &[usize]) -> u64 {
    fn go(lambda: &Partition, cur: &Partition, content: &[usize]) -> u64 {
        let Some((&first, rest)) = content.split_first() else {
            return u64::from(cur == lambda);
        };
        Partition::all_of_weight(cur.weight() + first, lambda.len().max(1))
            .into_iter()
            .filter(|nu| nu.is_contained_in(lambda) && interlaces(nu.parts(), cur.parts()))
            .map(|nu| go(lambda, &nu, rest))
            .sum()
    }
    go(lambda, &Partition::empty(), content)
}

/// Schur polynomial in `n` variables, monomial-symmetric coefficients from Kostka numbers.
pub fn schur_kostka(lambda: &Partition, n: usize) -> BTreeMap<Partition, Rational> {
    let mut out = BTreeMap::new();
    if lambda.len() > n {
        return out;
    }
    for mu in Partition::all_of_weight(lambda.weight(), n) {
        let k = kostka(lambda, mu.parts());
        if k != 0 {
            out.insert(mu, Rational::from_integer((k as i64).into()));
        }
    }
    out
}

/// `s_λ(1^n)` by the hook-content formula.
pub fn hook_content(lambda: &Partition, n: usize) -> Rational {
    let parts = lambda.parts();
    let mut acc = Rational::one();
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row {
            let hook = row - j + parts[i + 1..].iter().filter(|&&r| r > j).count();
            acc *= int(n as i64 + j as i64 - i as i64) / int(hook as i64);
        }
    }
    acc
}

/// `m_μ` coefficients of `(x_1 + … + x_n)^j / j!`: `1/Π μ_i!`.
pub fn trace_power_over_factorial(j: usize, n: usize) -> BTreeMap<Partition, Rational> {
    Partition::all_of_weight(j, n)
        .into_iter()
        .map(|mu| {
            let c = mu.parts().iter().fold(Rational::one(), |acc, &p| acc / fact(p));
            (mu, c)
        })
        .collect()
}

/// Leibniz determinant of a small exact matrix.
pub fn det(a: &[Vec<Rational>]) -> Rational {
    let n = a.len();
    if n == 0 {
        return Rational::one();
    }
    let mut total = Rational::zero();
    for (col, x) in a[0].iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rational>> = a[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != col).map(|(_, v)| v.clone()).collect())
            .collect();
        let t = x * det(&minor);
        total += if col % 2 == 0 { t } else { -t };
    }
    total
}

/// `q_m^{(ν)}(s)` from the terminating hypergeometric sum, evaluated directly.
pub fn mp_q_value(m: usize, nu: &Rational, s: &Rational) -> Rational {
    let half = nu / int(2);
    let mut acc = Rational::zero();
    for k in 0..=m {
        let sign = if k % 2 == 1 { -Rational::one() } else { Rational::one() };
        // (-m)_k = (-1)^k m!/(m-k)!
        let t = sign * fact(m) / fact(m - k) * rising(&(s + &half), k) * int(1 << k) / (rising(nu, k) * fact(k));
        acc += t;
    }
    acc * rising(nu, m) / fact(m)
}

/// `c(m, n)`: half the coefficient of `x^{m+1}` in `((1+x)/(1-x))^n`, by series products.
pub fn cmn_by_series(m: usize, n: usize) -> i128 {
    let len = m + 2;
    // (1+x)/(1-x) = 1 + 2x + 2x^2 + ...
    let base: Vec<i128> = (0..len).map(|k| if k == 0 { 1 } else { 2 }).collect();
    let mut acc = vec![0i128; len];
    acc[0] = 1;
    for _ in 0..n {
        let mut next = vec![0i128; len];
        for i in 0..len {
            for j in 0..len - i {
                next[i + j] += acc[i] * base[j];
            }
        }
        acc = next;
    }
    acc[m + 1] / 2
}

/// `(1/n)(2m)!/(2^m m!) c(m, n)`.
pub fn gue_exact(n: usize, m: usize) -> f64 {
    if m == 0 {
        return 1.0;
    }
    let double_fact: f64 = (1..=m).map(|k| (2 * k - 1) as f64).product();
    double_fact * cmn_by_series(m, n) as f64 / n as f64
}

/// `Π_{i<j} (x_j - x_i)`.
pub fn vandermonde(x: &[Rational]) -> Rational {
    let mut v = Rational::one();
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            v *= &x[j] - &x[i];
        }
    }
    v
}
