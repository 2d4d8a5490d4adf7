//! Jack polynomials, spherical polynomials `Φ_k`, dimensions and generalised
//! binomial coefficients.
//!
//! `P_k` is computed as the eigenfunction of the Calogero–Sutherland operator
//!
//! ```text
//! H = Σ (x_i ∂_i)² + θ Σ_{i<j} (x_i + x_j)/(x_i - x_j) (x_i ∂_i - x_j ∂_j)
//! ```
//!
//! which is triangular on `{m_μ}` with eigenvalue
//! `E_λ = Σ λ_i² + θ Σ (n + 1 - 2i) λ_i`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::cone::{pochhammer_generalized, ConeParams};
use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::partition::Partition;
use crate::poly::Poly;
use crate::rational::{factorial, int, Rational};
use crate::sympoly::SymPoly;

type Key = (usize, Rational, usize);
type Table = BTreeMap<Partition, SymPoly>;

static JACK: Memo<Key, Table> = Memo::new();
static PHI: Memo<Key, Table> = Memo::new();
static DIM_B: Memo<Key, BTreeMap<Partition, Rational>> = Memo::new();
static BINOMIAL: Memo<(usize, Rational, Partition), BTreeMap<Partition, Rational>> = Memo::new();

fn check_theta(theta: &Rational) -> Result<()> {
    if !theta.is_positive() {
        return Err(Error::InvalidInput("Jack parameter must be positive".into()));
    }
    Ok(())
}

/// `E_λ` for `λ` padded to `n` parts.
pub fn cs_eigenvalue(lambda: &Partition, theta: &Rational, n: usize) -> Rational {
    let mut e = Rational::zero();
    for (i, &l) in lambda.parts().iter().enumerate() {
        let l = int(l as i64);
        e += &l * &l + theta * int(n as i64 - 1 - 2 * i as i64) * &l;
    }
    e
}

/// Applies `H` to a symmetric polynomial given in expanded form.
fn apply_cs(p: &Poly, theta: &Rational) -> Poly {
    let n = p.nvars();
    let mut out = Poly::zero(n);
    for (a, c) in p.terms() {
        let diag: usize = a.iter().map(|x| x * x).sum();
        out.add_term(a.clone(), c * int(diag as i64));
        for i in 0..n {
            for j in 0..n {
                if i >= j || a[i] <= a[j] {
                    continue;
                }
                let r = a[i] - a[j];
                let base = theta * c * int(r as i64);
                for l in 0..=r {
                    let mut e = a.clone();
                    e[i] = a[i] - l;
                    e[j] = a[j] + l;
                    let w = if l == 0 || l == r { 1 } else { 2 };
                    out.add_term(e, &base * int(w));
                }
            }
            // pairs with a_i < a_j are produced by the swapped monomial
        }
    }
    out
}

fn jack_table(weight: usize, theta: &Rational, n: usize) -> Result<Arc<Table>> {
    check_theta(theta)?;
    JACK.get_or_try(&(n, theta.clone(), weight), || {
        let parts = Partition::all_of_weight(weight, n);
        // column ν of H in the m-basis
        let mut h: BTreeMap<Partition, SymPoly> = BTreeMap::new();
        for nu in &parts {
            let m = SymPoly::monomial(nu.clone(), n)?.to_poly();
            h.insert(nu.clone(), SymPoly::from_poly(&apply_cs(&m, theta)));
        }
        let mut table = Table::new();
        for (idx, lambda) in parts.iter().enumerate() {
            let e_top = cs_eigenvalue(lambda, theta, n);
            let mut coeffs: BTreeMap<Partition, Rational> = BTreeMap::new();
            coeffs.insert(lambda.clone(), Rational::one());
            // `parts` is lex-decreasing, so later entries sit lower
            for mu in &parts[idx + 1..] {
                let mut rhs = Rational::zero();
                for (nu, c) in &coeffs {
                    rhs += c * h[nu].coeff(mu);
                }
                if rhs.is_zero() {
                    continue;
                }
                let gap = &e_top - cs_eigenvalue(mu, theta, n);
                if gap.is_zero() {
                    return Err(Error::Internal(format!(
                        "degenerate eigenvalue for {lambda} and {mu}"
                    )));
                }
                coeffs.insert(mu.clone(), rhs / gap);
            }
            table.insert(lambda.clone(), SymPoly::from_coeffs(n, coeffs)?);
        }
        Ok(table)
    })
}

/// Jack polynomial `P_k(x; θ)` in `nvars` variables, monic in `m_k`.
pub fn jack_p(k: &Partition, theta: &Rational, nvars: usize) -> Result<SymPoly> {
    k.check_rank(nvars)?;
    let table = jack_table(k.weight(), theta, nvars)?;
    Ok(table[k].clone())
}

fn phi_table(weight: usize, p: &ConeParams) -> Result<Arc<Table>> {
    let n = p.rank();
    PHI.get_or_try(&(n, p.theta().clone(), weight), || {
        let jacks = jack_table(weight, p.theta(), n)?;
        let mut out = Table::new();
        for (k, pk) in jacks.iter() {
            let at_one = pk.eval_ones();
            out.insert(k.clone(), pk.scale(&at_one.recip()));
        }
        Ok(out)
    })
}

/// Spherical polynomial `Φ_k = P_k / P_k(1,…,1)` with `θ = d/2`.
pub fn spherical_phi(k: &Partition, p: &ConeParams) -> Result<SymPoly> {
    k.check_rank(p.rank())?;
    Ok(phi_table(k.weight(), p)?[k].clone())
}

/// Writes `f` as `Σ c_k Φ_k` by a top-monomial triangular solve in each degree.
pub fn expand_in_phi(f: &SymPoly, p: &ConeParams) -> Result<BTreeMap<Partition, Rational>> {
    if f.nvars() != p.rank() {
        return Err(Error::InvalidInput(format!(
            "polynomial has {} variables, cone has rank {}",
            f.nvars(),
            p.rank()
        )));
    }
    let mut out = BTreeMap::new();
    let Some(top) = f.degree() else {
        return Ok(out);
    };
    for w in 0..=top {
        let mut rest = f.homogeneous_part(w);
        if rest.is_zero() {
            continue;
        }
        let table = phi_table(w, p)?;
        while let Some((mu, c)) = rest.coeffs().iter().next_back().map(|(k, v)| (k.clone(), v.clone())) {
            let phi = &table[&mu];
            let coef = c / phi.coeff(&mu);
            rest = &rest - &phi.scale(&coef);
            out.insert(mu, coef);
        }
    }
    Ok(out)
}

/// Rebuilds `Σ c_k Φ_k`.
pub fn sum_in_phi(coeffs: &BTreeMap<Partition, Rational>, p: &ConeParams) -> Result<SymPoly> {
    let mut out = SymPoly::zero(p.rank());
    for (k, c) in coeffs {
        out = &out + &spherical_phi(k, p)?.scale(c);
    }
    Ok(out)
}

fn dim_b_table(weight: usize, p: &ConeParams) -> Result<Arc<BTreeMap<Partition, Rational>>> {
    let n = p.rank();
    DIM_B.get_or_try(&(n, p.theta().clone(), weight), || {
        let trace = SymPoly::monomial(Partition::new(&[1])?, n)?.to_poly();
        let power = SymPoly::from_poly(&trace.pow(weight)).scale(&factorial(weight).recip());
        expand_in_phi(&power, p)
    })
}

/// `B_k`, the `Φ_k` coefficient of `(x_1 + … + x_n)^{|k|} / |k|!`.
pub fn dim_ratio_b(k: &Partition, p: &ConeParams) -> Result<Rational> {
    k.check_rank(p.rank())?;
    let table = dim_b_table(k.weight(), p)?;
    table
        .get(k)
        .cloned()
        .ok_or_else(|| Error::Internal(format!("B_{k} vanished")))
}

/// `d_k = B_k (N/n)_k`.
pub fn dim_dk(k: &Partition, p: &ConeParams) -> Result<Rational> {
    Ok(dim_ratio_b(k, p)? * pochhammer_generalized(&p.n_over_rank(), k, p)?)
}

fn binomial_row(m: &Partition, p: &ConeParams) -> Result<Arc<BTreeMap<Partition, Rational>>> {
    m.check_rank(p.rank())?;
    BINOMIAL.get_or_try(&(p.rank(), p.theta().clone(), m.clone()), || {
        let phi = spherical_phi(m, p)?;
        let shifted = SymPoly::from_poly(&phi.to_poly().affine_substitute(&Rational::one(), &Rational::one()));
        expand_in_phi(&shifted, p)
    })
}

/// Generalised binomial coefficient: the `Φ_k` coefficient of `Φ_m(1 + x)`.
pub fn binomial_mk(m: &Partition, k: &Partition, p: &ConeParams) -> Result<Rational> {
    k.check_rank(p.rank())?;
    Ok(binomial_row(m, p)?.get(k).cloned().unwrap_or_else(Rational::zero))
}

/// All nonzero `(m choose k)` for fixed `m`.
pub fn binomial_row_of(m: &Partition, p: &ConeParams) -> Result<BTreeMap<Partition, Rational>> {
    Ok((*binomial_row(m, p)?).clone())
}

/// Pieri coefficients: `(tr x) Φ_m = Σ_j a_j(m) Φ_{m+ε_j}`.
pub fn pieri_a(m: &Partition, p: &ConeParams) -> Result<Vec<Rational>> {
    m.check_rank(p.rank())?;
    let n = p.rank();
    let mj: Vec<Rational> = m.padded(n).into_iter().map(|v| int(v as i64)).collect();
    let theta = p.theta();
    let mut out = Vec::with_capacity(n);
    for j in 0..n {
        let mut a = Rational::one();
        for k in 0..n {
            if k == j {
                continue;
            }
            let diff = &mj[j] - &mj[k];
            let jk = int(j as i64 - k as i64);
            let num = &diff - theta * (&jk - int(1));
            let den = &diff - theta * &jk;
            if den.is_zero() {
                return Err(Error::Internal(format!("Pieri denominator vanished at {m}, j={}", j + 1)));
            }
            a *= num / den;
        }
        out.push(a);
    }
    Ok(out)
}

/// Number of cached Jack tables, for diagnostics.
pub fn cached_tables() -> usize {
    JACK.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::rational::ratio;

    fn cone(n: usize, d: Rational) -> ConeParams {
        ConeParams::new(n, d).unwrap()
    }

    #[test]
    fn small_jacks() {
        let p1 = jack_p(&part![1], &int(3), 3).unwrap();
        assert_eq!(p1, SymPoly::monomial(part![1], 3).unwrap());
        let s21 = jack_p(&part![2, 1], &int(1), 3).unwrap();
        assert_eq!(s21.coeff(&part![2, 1]), int(1));
        assert_eq!(s21.coeff(&part![1, 1, 1]), int(2));
        let theta = ratio(3, 5);
        let p2 = jack_p(&part![2], &theta, 2).unwrap();
        let expect = &theta * int(2) / (&theta + int(1));
        assert_eq!(p2.coeff(&part![1, 1]), expect);
    }

    #[test]
    fn phi_examples() {
        let p = cone(2, int(2));
        assert_eq!(
            spherical_phi(&part![1, 1], &p).unwrap(),
            SymPoly::monomial(part![1, 1], 2).unwrap()
        );
        let f = SymPoly::monomial(part![1], 2).unwrap();
        let sq = &f * &f;
        let e = expand_in_phi(&sq, &p).unwrap();
        assert_eq!(e[&part![2]], int(3));
        assert_eq!(e[&part![1, 1]], int(1));
        assert_eq!(sum_in_phi(&e, &p).unwrap(), sq);
        assert!(expand_in_phi(&SymPoly::zero(2), &p).unwrap().is_empty());
    }

    #[test]
    fn dimension_examples() {
        let p = cone(2, int(2));
        assert_eq!(dim_ratio_b(&part![], &p).unwrap(), int(1));
        assert_eq!(dim_ratio_b(&part![1], &p).unwrap(), int(2));
        assert_eq!(dim_dk(&part![1], &p).unwrap(), int(4));
        assert_eq!(dim_dk(&part![1, 1], &p).unwrap(), int(1));
        let q = cone(3, ratio(3, 2));
        assert_eq!(dim_dk(&part![1], &q).unwrap(), q.dim_n().clone());
    }

    #[test]
    fn binomial_examples() {
        let p1 = cone(1, int(2));
        assert_eq!(binomial_mk(&part![3], &part![2], &p1).unwrap(), int(3));
        let p = cone(2, int(2));
        assert_eq!(binomial_mk(&part![1, 1], &part![1], &p).unwrap(), int(2));
        assert_eq!(binomial_mk(&part![2, 1], &part![2, 1], &p).unwrap(), int(1));
        assert_eq!(binomial_mk(&part![2, 1], &part![], &p).unwrap(), int(1));
        assert_eq!(binomial_mk(&part![2], &part![1, 1], &p).unwrap(), int(0));
    }

    #[test]
    fn pieri_examples() {
        let p = cone(3, int(1));
        assert_eq!(pieri_a(&part![], &p).unwrap(), alloc::vec![int(3), int(0), int(0)]);
        let a = pieri_a(&part![2, 2], &p).unwrap();
        assert!(a[1].is_zero());
        assert_eq!(a.iter().sum::<Rational>(), int(3));
    }
}
