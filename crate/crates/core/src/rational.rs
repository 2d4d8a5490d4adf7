//! Exact rational scalars and the factorial-type products used everywhere.

use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational, always reduced with a positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Rising factorial `x (x+1) ... (x+k-1)`.
pub fn rising_factorial(x: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut t = x.clone();
    for _ in 0..k {
        acc *= &t;
        t += Rational::one();
    }
    acc
}

/// Falling factorial `x (x-1) ... (x-k+1)`.
pub fn falling_factorial(x: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut t = x.clone();
    for _ in 0..k {
        acc *= &t;
        t -= Rational::one();
    }
    acc
}

pub fn factorial(k: usize) -> Rational {
    rising_factorial(&Rational::one(), k)
}

/// Generalised binomial coefficient `C(x, k) = [x]_k / k!`.
pub fn binomial(x: &Rational, k: usize) -> Rational {
    falling_factorial(x, k) / factorial(k)
}

pub fn binomial_int(n: i64, k: i64) -> BigInt {
    if k < 0 || (n >= 0 && k > n) {
        return BigInt::zero();
    }
    binomial(&int(n), k as usize).to_integer()
}

pub fn pow(x: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..k {
        acc *= x;
    }
    acc
}

pub fn to_f64(x: &Rational) -> f64 {
    match (x.numer().to_f64(), x.denom().to_f64()) {
        (Some(p), Some(q)) if p.is_finite() && q.is_finite() => p / q,
        _ => {
            // huge numerator or denominator: shift both down
            let bits = x.numer().bits().max(x.denom().bits()) as i64 - 60;
            let shift = bits.max(0) as usize;
            let p = (x.numer() >> shift).to_f64().unwrap_or(f64::NAN);
            let q = (x.denom() >> shift).to_f64().unwrap_or(f64::NAN);
            p / q
        }
    }
}

/// Parses `"p/q"`, `"p"` or a finite decimal such as `"0.25"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || Error::InvalidInput(alloc::format!("not a rational: {t:?}"));
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let digits: String = [whole.trim_start_matches(['-', '+']), frac].concat();
        let mut num: BigInt = digits.parse().map_err(|_| bad())?;
        if negative {
            num = -num;
        }
        let den = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(Rational::new(num, den));
    }
    let p: BigInt = t.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(p))
}

/// Canonical `"p/q"` form (`"p"` for integers).
pub fn format_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        alloc::format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn is_nonpositive_integer(x: &Rational) -> bool {
    x.is_integer() && !x.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorials() {
        assert_eq!(rising_factorial(&int(7), 0), int(1));
        assert_eq!(falling_factorial(&int(5), 2), int(20));
        assert_eq!(rising_factorial(&ratio(1, 2), 3), ratio(15, 8));
        assert_eq!(binomial(&int(-1), 3), int(-1));
        assert_eq!(binomial_int(6, 2), BigInt::from(15));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("3/6").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-0.25").unwrap(), ratio(-1, 4));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&ratio(-6, 4)), "-3/2");
        assert_eq!(format_rational(&int(4)), "4");
    }

    #[test]
    fn huge_to_f64() {
        let big = pow(&int(10), 400) / pow(&int(10), 399);
        assert!((to_f64(&big) - 10.0).abs() < 1e-12);
    }
}
