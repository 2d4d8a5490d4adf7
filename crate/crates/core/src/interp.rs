//! Eigenvalue polynomials `γ_k` by symmetric interpolation on the lattice
//! `m - ρ`, and the shifted Jack cross-check.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::cone::ConeParams;
use crate::error::{Error, Result};
use crate::jack::{binomial_mk, dim_ratio_b};
use crate::linalg::solve;
use crate::memo::Memo;
use crate::partition::Partition;
use crate::rational::Rational;
use crate::sympoly::{monomial_eval, SpectralPoly};

static GAMMA: Memo<(usize, Rational, usize), BTreeMap<Partition, SpectralPoly>> = Memo::new();

/// Nodes and unknowns for symmetric interpolation of degree `≤ bound`.
#[derive(Clone, Debug)]
pub struct InterpolationGrid {
    pub partitions: Vec<Partition>,
    pub nodes: Vec<Vec<Rational>>,
}

impl InterpolationGrid {
    /// All `m - ρ + offset·(1,…,1)` with `|m| ≤ bound`.
    pub fn lattice(bound: usize, p: &ConeParams, offset: &Rational) -> Self {
        let partitions = Partition::all_up_to(bound, p.rank());
        let nodes = partitions
            .iter()
            .map(|m| p.spectral_point(m).into_iter().map(|x| x + offset).collect())
            .collect();
        InterpolationGrid { partitions, nodes }
    }

    /// `[m_λ(node)]` with rows indexed by nodes and columns by `λ`.
    pub fn matrix(&self) -> Vec<Vec<Rational>> {
        self.nodes
            .iter()
            .map(|x| self.partitions.iter().map(|l| monomial_eval(l, x)).collect())
            .collect()
    }

    /// Solves for one symmetric polynomial per value column.
    pub fn interpolate(&self, values: &[Vec<Rational>], nvars: usize) -> Option<Vec<SpectralPoly>> {
        let sol = solve(&self.matrix(), values)?;
        let cols = values.first().map_or(0, Vec::len);
        let mut out = Vec::with_capacity(cols);
        for c in 0..cols {
            let mut coeffs = BTreeMap::new();
            for (row, l) in sol.iter().zip(&self.partitions) {
                coeffs.insert(l.clone(), row[c].clone());
            }
            out.push(SpectralPoly::from_coeffs(nvars, coeffs).ok()?);
        }
        Some(out)
    }
}

fn gamma_table(weight: usize, p: &ConeParams) -> Result<Arc<BTreeMap<Partition, SpectralPoly>>> {
    GAMMA.get_or_try(&(p.rank(), p.theta().clone(), weight), || {
        let ks = Partition::all_of_weight(weight, p.rank());
        let mut last = None;
        for bound in [weight, weight + 1] {
            let grid = InterpolationGrid::lattice(bound, p, &Rational::zero());
            let mut values = Vec::with_capacity(grid.partitions.len());
            for m in &grid.partitions {
                let mut row = Vec::with_capacity(ks.len());
                for k in &ks {
                    row.push(binomial_mk(m, k, p)? / dim_ratio_b(k, p)?);
                }
                values.push(row);
            }
            if let Some(polys) = grid.interpolate(&values, p.rank()) {
                return Ok(ks.iter().cloned().zip(polys).collect());
            }
            last = Some(bound);
        }
        Err(Error::Unisolvent(format!(
            "lattice grid of degree {} singular for n={}, d={}",
            last.unwrap_or(weight),
            p.rank(),
            p.mult()
        )))
    })
}

/// `γ_k`, the symmetric polynomial with `γ_k(m - ρ) = (m choose k) / B_k`.
pub fn gamma_k(k: &Partition, p: &ConeParams) -> Result<SpectralPoly> {
    k.check_rank(p.rank())?;
    Ok(gamma_table(k.weight(), p)?[k].clone())
}

/// Shifted Jack polynomial `P*_k` written in the variables `s = m - ρ`.
///
/// It vanishes at every `μ - ρ` with `|μ| ≤ |k|`, `μ ≠ k`, and its top-degree
/// part equals `P_k(s; θ)`.
#[cfg(feature = "shifted-jack")]
pub fn shifted_jack_star(k: &Partition, p: &ConeParams) -> Result<SpectralPoly> {
    use crate::jack::jack_p;
    use num_traits::One;

    k.check_rank(p.rank())?;
    let grid = InterpolationGrid::lattice(k.weight(), p, &Rational::zero());
    let values: Vec<Vec<Rational>> = grid
        .partitions
        .iter()
        .map(|m| alloc::vec![if m == k { Rational::one() } else { Rational::zero() }])
        .collect();
    let raw = grid
        .interpolate(&values, p.rank())
        .ok_or_else(|| Error::Unisolvent(format!("vanishing system for {k}")))?
        .remove(0);
    let top = jack_p(k, p.theta(), p.rank())?;
    let lead = raw.coeff(k);
    if lead.is_zero() {
        return Err(Error::Internal(format!("shifted Jack {k} has no top term")));
    }
    let scaled = raw.scale(&(top.coeff(k) / lead));
    if scaled.top_part() != top {
        return Err(Error::Internal(format!("top part of shifted Jack {k} is not P_k")));
    }
    Ok(scaled)
}

/// `P*_k(m)` evaluated at the lattice point of `m`.
#[cfg(feature = "shifted-jack")]
pub fn shifted_jack_value(star: &SpectralPoly, m: &Partition, p: &ConeParams) -> Result<Rational> {
    m.check_rank(p.rank())?;
    Ok(star.eval(&p.spectral_point(m)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::rational::{falling_factorial, int, ratio};
    use crate::sympoly::SymPoly;

    #[test]
    fn rank_one_is_falling_factorial() {
        let p = ConeParams::new(1, int(2)).unwrap();
        for k in 0..=6 {
            let g = gamma_k(&Partition::new(&[k]).unwrap(), &p).unwrap();
            for s in -3..8 {
                assert_eq!(g.eval(&[int(s)]), falling_factorial(&int(s), k));
            }
        }
    }

    #[test]
    fn degree_one() {
        for d in [int(1), ratio(3, 2), int(2)] {
            let p = ConeParams::new(3, d).unwrap();
            let g = gamma_k(&part![1], &p).unwrap();
            let expect = SymPoly::monomial(part![1], 3).unwrap().scale(&ratio(1, 3));
            assert_eq!(g, expect);
            assert_eq!(gamma_k(&part![], &p).unwrap(), SymPoly::one(3));
        }
    }

    #[cfg(feature = "shifted-jack")]
    #[test]
    fn shifted_jack_rank_one() {
        let p = ConeParams::new(1, int(2)).unwrap();
        let star = shifted_jack_star(&part![2], &p).unwrap();
        assert_eq!(shifted_jack_value(&star, &part![3], &p).unwrap(), int(6));
        assert_eq!(shifted_jack_value(&star, &part![2], &p).unwrap(), int(2));
        assert_eq!(shifted_jack_value(&star, &part![1], &p).unwrap(), int(0));
    }
}
