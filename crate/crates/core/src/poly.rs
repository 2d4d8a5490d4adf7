//! Polynomials in a fixed number of variables with exact coefficients,
//! stored as a sparse map from exponent vectors.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::rational::{int, to_f64, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<usize>, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    /// The coordinate `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, Rational::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, Rational> {
        &self.terms
    }

    pub fn coeff(&self, exps: &[usize]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c x^e`, dropping the entry if it cancels.
    pub fn add_term(&mut self, exps: Vec<usize>, c: Rational) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Product keeping only terms of total degree `≤ maxdeg`.
    pub fn mul_truncated(&self, other: &Poly, maxdeg: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            let da: usize = ea.iter().sum();
            if da > maxdeg {
                continue;
            }
            for (eb, cb) in &other.terms {
                let db: usize = eb.iter().sum();
                if da + db > maxdeg {
                    continue;
                }
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Poly {
        let mut acc = Poly::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn truncate(&self, maxdeg: usize) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<usize>() <= maxdeg)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn homogeneous_part(&self, degree: usize) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<usize>() == degree)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// `∂/∂x_i`.
    pub fn partial(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut f = e.clone();
            f[i] -= 1;
            out.add_term(f, c * int(e[i] as i64));
        }
        out
    }

    /// Multiplies by `x_i^k`.
    pub fn mul_var(&self, i: usize, k: usize) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut f = e.clone();
                    f[i] += k;
                    (f, c.clone())
                })
                .collect(),
        }
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        assert_eq!(x.len(), self.nvars);
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &k) in x.iter().zip(e) {
                if k > 0 {
                    t *= num_traits::pow(xi.clone(), k);
                }
            }
            acc += t;
        }
        acc
    }

    pub fn eval_complex(&self, x: &[Complex64]) -> Complex64 {
        assert_eq!(x.len(), self.nvars);
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let mut t = Complex64::new(to_f64(c), 0.0);
            for (xi, &k) in x.iter().zip(e) {
                if k > 0 {
                    t *= xi.powu(k as u32);
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes `x_i → a x_i + b` in every variable.
    pub fn affine_substitute(&self, a: &Rational, b: &Rational) -> Poly {
        let lin = {
            let mut p = Poly::zero(1);
            p.add_term(vec![1], a.clone());
            p.add_term(vec![0], b.clone());
            p
        };
        let max_exp = self.terms.keys().flat_map(|e| e.iter().copied()).max().unwrap_or(0);
        let mut powers = vec![Poly::one(1)];
        for k in 1..=max_exp {
            let next = &powers[k - 1] * &lin;
            powers.push(next);
        }
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut partial = Poly::constant(self.nvars, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let mut factor = Poly::zero(self.nvars);
                for (pe, pc) in &powers[k].terms {
                    let mut f = vec![0; self.nvars];
                    f[i] = pe[0];
                    factor.add_term(f, pc.clone());
                }
                partial = &partial * &factor;
            }
            out = &out + &partial;
        }
        out
    }

    /// Substitutes `x_i → g(x_i)` for a univariate polynomial or truncated
    /// series `g` (coefficients in increasing degree) and truncates at `maxdeg`.
    pub fn compose_univariate(&self, g: &[Rational], maxdeg: usize) -> Poly {
        let gpoly = {
            let mut p = Poly::zero(1);
            for (k, c) in g.iter().enumerate().take(maxdeg + 1) {
                p.add_term(vec![k], c.clone());
            }
            p
        };
        let max_exp = self.terms.keys().flat_map(|e| e.iter().copied()).max().unwrap_or(0);
        let mut powers = vec![Poly::one(1)];
        for k in 1..=max_exp {
            let next = powers[k - 1].mul_truncated(&gpoly, maxdeg);
            powers.push(next);
        }
        let lift = |i: usize, p: &Poly| {
            let mut out = Poly::zero(self.nvars);
            for (pe, pc) in &p.terms {
                let mut f = vec![0; self.nvars];
                f[i] = pe[0];
                out.add_term(f, pc.clone());
            }
            out
        };
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut partial = Poly::constant(self.nvars, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    partial = partial.mul_truncated(&lift(i, &powers[k]), maxdeg);
                }
            }
            out = &out + &partial;
        }
        out
    }

    /// Product of univariate series `Π_i g(x_i)`, truncated at `maxdeg`.
    pub fn product_of_univariate(nvars: usize, g: &[Rational], maxdeg: usize) -> Poly {
        let mut acc = Poly::one(nvars);
        for i in 0..nvars {
            let mut factor = Poly::zero(nvars);
            for (k, c) in g.iter().enumerate().take(maxdeg + 1) {
                let mut e = vec![0; nvars];
                e[i] = k;
                factor.add_term(e, c.clone());
            }
            acc = acc.mul_truncated(&factor, maxdeg);
        }
        acc
    }

    /// `true` when the polynomial is invariant under every transposition of
    /// adjacent variables.
    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.nvars.saturating_sub(1) {
            for (e, c) in &self.terms {
                let mut f = e.clone();
                f.swap(i, i + 1);
                if self.terms.get(&f) != Some(c) {
                    return false;
                }
            }
        }
        true
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&int(-1))
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.mul_truncated(rhs, usize::MAX)
    }
}
