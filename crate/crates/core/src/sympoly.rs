//! Symmetric polynomials in the monomial-symmetric basis `{m_λ}`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::Poly;
use crate::rational::{int, to_f64, Rational};

/// All distinct rearrangements of `v`, in lexicographic order.
pub fn distinct_permutations(v: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = v.to_vec();
    cur.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(cur.clone());
        // next permutation
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// Number of distinct rearrangements of `λ` padded to `n` entries, i.e. `m_λ(1,…,1)`.
pub fn orbit_size(lambda: &Partition, n: usize) -> u64 {
    let padded = lambda.padded(n);
    let mut total: u64 = (1..=n as u64).product();
    let mut i = 0;
    while i < padded.len() {
        let mut j = i;
        while j < padded.len() && padded[j] == padded[i] {
            j += 1;
        }
        total /= (1..=(j - i) as u64).product::<u64>();
        i = j;
    }
    total
}

/// Symmetric polynomial `Σ c_λ m_λ` in `nvars` variables.
///
/// Also used for polynomials in the spectral variables `s`; see [`SpectralPoly`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    nvars: usize,
    coeffs: BTreeMap<Partition, Rational>,
}

/// A symmetric polynomial in the spectral variables `s_1, …, s_n`.
pub type SpectralPoly = SymPoly;

impl SymPoly {
    pub fn zero(nvars: usize) -> Self {
        SymPoly { nvars, coeffs: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Partition::empty(), c);
        p
    }

    /// The monomial symmetric function `m_λ`.
    pub fn monomial(lambda: Partition, nvars: usize) -> Result<Self> {
        lambda.check_rank(nvars)?;
        let mut p = Self::zero(nvars);
        p.add_term(lambda, Rational::one());
        Ok(p)
    }

    /// Builds from a coefficient map; zero entries are dropped.
    pub fn from_coeffs(nvars: usize, coeffs: BTreeMap<Partition, Rational>) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (k, c) in coeffs {
            k.check_rank(nvars)?;
            p.add_term(k, c);
        }
        Ok(p)
    }

    /// Reads the coefficients of a symmetric [`Poly`] at its weakly decreasing exponents.
    pub fn from_poly(p: &Poly) -> Self {
        let mut out = Self::zero(p.nvars());
        for (e, c) in p.terms() {
            if e.windows(2).all(|w| w[0] >= w[1]) {
                out.add_term(Partition::from_unsorted(e), c.clone());
            }
        }
        out
    }

    /// As [`SymPoly::from_poly`], but rejects non-symmetric input.
    pub fn from_poly_checked(p: &Poly) -> Result<Self> {
        if !p.is_symmetric() {
            return Err(Error::InvalidInput("polynomial is not symmetric".into()));
        }
        Ok(Self::from_poly(p))
    }

    pub(crate) fn add_term(&mut self, k: Partition, c: Rational) {
        use alloc::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(k) {
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

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Rational> {
        &self.coeffs
    }

    pub fn coeff(&self, k: &Partition) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().map(Partition::weight).max()
    }

    /// Expands every `m_λ` into monomials.
    pub fn to_poly(&self) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (k, c) in &self.coeffs {
            for e in distinct_permutations(&k.padded(self.nvars)) {
                out.add_term(e, c.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        SymPoly {
            nvars: self.nvars,
            coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn mul_truncated(&self, other: &SymPoly, maxdeg: usize) -> SymPoly {
        SymPoly::from_poly(&self.to_poly().mul_truncated(&other.to_poly(), maxdeg))
    }

    pub fn homogeneous_part(&self, degree: usize) -> SymPoly {
        SymPoly {
            nvars: self.nvars,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| k.weight() == degree)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn truncate(&self, maxdeg: usize) -> SymPoly {
        SymPoly {
            nvars: self.nvars,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| k.weight() <= maxdeg)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Highest-degree homogeneous component.
    pub fn top_part(&self) -> SymPoly {
        match self.degree() {
            Some(d) => self.homogeneous_part(d),
            None => self.clone(),
        }
    }

    /// Value at `(1, …, 1)`.
    pub fn eval_ones(&self) -> Rational {
        self.coeffs
            .iter()
            .map(|(k, c)| c * int(orbit_size(k, self.nvars) as i64))
            .sum()
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        assert_eq!(x.len(), self.nvars);
        let mut acc = Rational::zero();
        for (k, c) in &self.coeffs {
            acc += c * monomial_eval(k, x);
        }
        acc
    }

    pub fn eval_complex(&self, x: &[Complex64]) -> Complex64 {
        self.to_poly().eval_complex(x)
    }

    pub fn eval_f64(&self, x: &[f64]) -> f64 {
        let z: Vec<Complex64> = x.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        self.eval_complex(&z).re
    }

    /// Substitutes `x_i → a x_i + b` in every variable.
    pub fn affine_substitute(&self, a: &Rational, b: &Rational) -> SymPoly {
        SymPoly::from_poly(&self.to_poly().affine_substitute(a, b))
    }

    /// `f(-x)`.
    pub fn reflect(&self) -> SymPoly {
        SymPoly {
            nvars: self.nvars,
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, c)| {
                    let c = if k.weight() % 2 == 1 { -c.clone() } else { c.clone() };
                    (k.clone(), c)
                })
                .collect(),
        }
    }

    /// `true` when every key has weight of the given parity.
    pub fn has_parity(&self, odd: bool) -> bool {
        self.coeffs.keys().all(|k| (k.weight() % 2 == 1) == odd)
    }

    /// Coefficients rendered as floats, for reports.
    pub fn coeffs_f64(&self) -> Vec<(Partition, f64)> {
        self.coeffs.iter().map(|(k, c)| (k.clone(), to_f64(c))).collect()
    }
}

/// `m_λ(x)` by summing over the distinct rearrangements.
pub fn monomial_eval(lambda: &Partition, x: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for e in distinct_permutations(&lambda.padded(x.len())) {
        let mut t = Rational::one();
        for (xi, &k) in x.iter().zip(&e) {
            if k > 0 {
                t *= num_traits::pow(xi.clone(), k);
            }
        }
        acc += t;
    }
    acc
}

impl Add for &SymPoly {
    type Output = SymPoly;
    fn add(self, rhs: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.coeffs {
            out.add_term(k.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SymPoly {
    type Output = SymPoly;
    fn sub(self, rhs: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.coeffs {
            out.add_term(k.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &SymPoly {
    type Output = SymPoly;
    fn neg(self) -> SymPoly {
        self.scale(&int(-1))
    }
}

impl Mul for &SymPoly {
    type Output = SymPoly;
    fn mul(self, rhs: &SymPoly) -> SymPoly {
        self.mul_truncated(rhs, usize::MAX)
    }
}

/// Symmetric power series truncated at total degree `maxdeg`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSymSeries {
    maxdeg: usize,
    body: SymPoly,
}

impl TruncatedSymSeries {
    pub fn new(body: SymPoly, maxdeg: usize) -> Self {
        TruncatedSymSeries { body: body.truncate(maxdeg), maxdeg }
    }

    /// Reads a symmetric [`Poly`] and truncates it.
    pub fn from_poly(p: &Poly, maxdeg: usize) -> Self {
        Self::new(SymPoly::from_poly(&p.truncate(maxdeg)), maxdeg)
    }

    pub fn maxdeg(&self) -> usize {
        self.maxdeg
    }

    pub fn body(&self) -> &SymPoly {
        &self.body
    }

    pub fn into_body(self) -> SymPoly {
        self.body
    }

    pub fn nvars(&self) -> usize {
        self.body.nvars()
    }

    pub fn mul(&self, other: &TruncatedSymSeries) -> TruncatedSymSeries {
        let maxdeg = self.maxdeg.min(other.maxdeg);
        TruncatedSymSeries::new(self.body.mul_truncated(&other.body, maxdeg), maxdeg)
    }

    pub fn add(&self, other: &TruncatedSymSeries) -> TruncatedSymSeries {
        let maxdeg = self.maxdeg.min(other.maxdeg);
        TruncatedSymSeries::new(&self.body + &other.body, maxdeg)
    }

    pub fn scale(&self, c: &Rational) -> TruncatedSymSeries {
        TruncatedSymSeries { body: self.body.scale(c), maxdeg: self.maxdeg }
    }
}
