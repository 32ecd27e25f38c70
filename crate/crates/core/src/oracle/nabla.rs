//! The operator `nabla`, diagonal on the modified Macdonald basis.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::laurent::{FracQT, LaurentQT};
use crate::shapes::{root_sets, Composition, Partition};
use crate::symfunc::SchurExpansion;
use crate::weyl::{contract, pol_schur, Factor, FactorList, Window};

use super::hhl::hhl_cached;
use super::llt::{attacking_count, llt_schur, ribbons_from_subset};

/// Solves `a x = b` over `Z[q^±1, t^±1]` by fraction-free elimination.
/// Returns `(d, y)` with `x = y / d`.
pub fn bareiss_solve(
    a: &[Vec<LaurentQT>],
    b: &[Vec<LaurentQT>],
) -> Result<(LaurentQT, Vec<Vec<LaurentQT>>)> {
    let n = a.len();
    let k = b.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<LaurentQT>> = a
        .iter()
        .zip(b)
        .map(|(r, s)| r.iter().chain(s).cloned().collect())
        .collect();
    let mut prev = LaurentQT::one();
    for p in 0..n {
        let pivot = (p..n)
            .find(|&r| !m[r][p].is_zero())
            .ok_or(Error::SingularBasisMatrix)?;
        m.swap(p, pivot);
        for r in p + 1..n {
            for c in p + 1..n + k {
                let v = &(&m[p][p] * &m[r][c]) - &(&m[r][p] * &m[p][c]);
                m[r][c] = v.exact_div(&prev).expect("Bareiss division is exact");
            }
            m[r][p] = LaurentQT::zero();
        }
        prev = m[p][p].clone();
    }
    let d = prev;
    let mut y = vec![vec![LaurentQT::zero(); k]; n];
    for col in 0..k {
        for i in (0..n).rev() {
            let mut acc = &d * &m[i][n + col];
            for j in i + 1..n {
                acc -= &(&m[i][j] * &y[j][col]);
            }
            y[i][col] = acc.exact_div(&m[i][i]).expect("back substitution is exact");
        }
    }
    Ok((d, y))
}

/// A Schur expansion whose coefficients may be genuine fractions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RationalSchur {
    pub terms: BTreeMap<Partition, FracQT>,
}

impl RationalSchur {
    pub fn to_laurent(&self) -> Result<SchurExpansion> {
        let mut out = SchurExpansion::zero();
        for (lam, c) in &self.terms {
            let v = c
                .to_laurent()
                .ok_or_else(|| Error::NonLaurentResult(c.to_string()))?;
            out.add_term(lam.clone(), &v);
        }
        Ok(out)
    }
}

fn eigenvalue(mu: &Partition) -> LaurentQT {
    LaurentQT::qt(mu.transpose().n_stat() as i32, mu.n_stat() as i32)
}

/// Applies the operator diagonal on `H~_mu` with eigenvalue `eig(mu)` to a
/// homogeneous `f`.
fn diagonal_in_h_basis(
    f: &SchurExpansion,
    eig: impl Fn(&Partition) -> LaurentQT,
) -> Result<RationalSchur> {
    let d = f.homogeneous_degree()?;
    if f.is_zero() {
        return Ok(RationalSchur::default());
    }
    let parts = Partition::all(d);
    let basis: Vec<SchurExpansion> = parts.iter().map(hhl_cached).collect();
    let a: Vec<Vec<LaurentQT>> = parts
        .iter()
        .map(|lam| basis.iter().map(|h| h.coeff(lam)).collect())
        .collect();
    let b: Vec<Vec<LaurentQT>> = parts.iter().map(|lam| vec![f.coeff(lam)]).collect();
    let (det, y) = bareiss_solve(&a, &b)?;
    let mut out = RationalSchur::default();
    for (r, lam) in parts.iter().enumerate() {
        let mut num = LaurentQT::zero();
        for (c, mu) in parts.iter().enumerate() {
            num += &(&(&a[r][c] * &eig(mu)) * &y[c][0]);
        }
        if !num.is_zero() {
            out.terms
                .insert(lam.clone(), FracQT::new(num, det.clone())?);
        }
    }
    Ok(out)
}

pub fn nabla(f: &SchurExpansion) -> Result<RationalSchur> {
    diagonal_in_h_basis(f, eigenvalue)
}

pub fn nabla_inverse(f: &SchurExpansion) -> Result<RationalSchur> {
    diagonal_in_h_basis(f, |mu| eigenvalue(mu).invert_q().invert_t())
}

/// `nabla^k f`, requiring Laurent coefficients at every step.
pub fn nabla_power(f: &SchurExpansion, k: usize) -> Result<SchurExpansion> {
    let mut g = f.clone();
    for _ in 0..k {
        g = nabla(&g)?.to_laurent()?;
    }
    Ok(g)
}

/// The raising-operator side of the `nabla`-on-LLT identity for `nu(S)`.
pub fn nabla_llt_engine(beta: &Composition, s: &[(usize, usize)]) -> Result<SchurExpansion> {
    let roots = root_sets(beta);
    let l = roots.l;
    let mut base = vec![1i32; l];
    let rest: Vec<_> = roots.v.iter().filter(|d| !s.contains(d)).collect();
    for &&(i, j) in &rest {
        base[i - 1] += 1;
        base[j - 1] -= 1;
    }
    let mut f = FactorList::new(base);
    for &(i, j) in &roots.r_hat {
        f.push(Factor::numer(i, j, LaurentQT::qt(1, 1)));
    }
    for i in 1..=l {
        for j in i + 1..=l {
            f.push(Factor::denom(i, j, LaurentQT::q()));
        }
    }
    for &(i, j) in &roots.r_set {
        f.push(Factor::denom(i, j, LaurentQT::t()));
    }
    let k = rest.len() as i32;
    let sign = if k % 2 == 0 { 1 } else { -1 };
    let scalar =
        LaurentQT::constant(sign).mul_monomial(&1.into(), k + attacking_count(beta) as i32, k);
    Ok(pol_schur(&contract(&f, Window::Weyl)?)
        .omega()
        .scale(&scalar))
}

/// Checks `nabla G_{nu(S)}` against the raising-operator formula.
pub fn verify_nabla_llt(beta: &Composition, s: &[(usize, usize)]) -> Result<bool> {
    let g = llt_schur(&ribbons_from_subset(beta, s)?);
    let lhs = nabla(&g)?.to_laurent()?;
    Ok(lhs == nabla_llt_engine(beta, s)?)
}
