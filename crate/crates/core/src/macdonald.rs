//! Macdonald, `(m, n)`-Macdonald, Hall-Littlewood and integral-form
//! polynomials from raising-operator series.

use crate::error::Result;
use crate::laurent::LaurentQT;
use crate::shapes::{bmn_weight, bmu_roots_with_order, dilate, Composition, Partition};
use crate::symfunc::SchurExpansion;
use crate::weyl::{contract, eprimex_eval, hx_eval, pol_schur, Factor, FactorList, Window};

/// `beta` if given (checked against `mu*`), otherwise `mu*` itself.
pub fn resolve_beta(mu: &Partition, beta: Option<&Composition>) -> Result<Composition> {
    match beta {
        Some(b) => {
            b.check_rearranges_transpose_of(mu)?;
            Ok(b.clone())
        }
        None => Ok(mu.transpose().as_composition()),
    }
}

/// The integrand of the `(m, n)`-Macdonald series for the column diagram of
/// `beta`: base weight `b(m, n, beta)`, arm-leg numerators on the dilated
/// dominoes, `(1 - qt)` numerators on the strict root set, and geometric
/// denominators in `q` over all positive roots and in `t` over the root set.
pub fn series_factors(beta: &Composition, m: usize, n: usize) -> Result<FactorList> {
    let base = bmn_weight(m, n, beta)?;
    let dil = dilate(beta, m);
    let roots = dil.dilated.root_datum();
    let l = roots.l;
    let mut out = FactorList::new(base);
    for &(i, j) in &dil.str_v {
        let cell = dil.base.cell(dil.tau[i - 1]);
        let (arm, leg) = dil.base.arm_leg(cell)?;
        out.push(Factor::numer(
            i,
            j,
            LaurentQT::qt(arm as i32 + 1, -(leg as i32)),
        ));
    }
    for &(i, j) in &roots.r_hat {
        out.push(Factor::numer(i, j, LaurentQT::qt(1, 1)));
    }
    for i in 1..=l {
        for j in i + 1..=l {
            out.push(Factor::denom(i, j, LaurentQT::q()));
        }
    }
    for &(i, j) in &roots.r_set {
        out.push(Factor::denom(i, j, LaurentQT::t()));
    }
    Ok(out)
}

fn with_shift(mut f: FactorList, a: i32) -> FactorList {
    for w in &mut f.base {
        *w += a;
    }
    f
}

fn invert_t(mut f: FactorList) -> FactorList {
    for x in &mut f.factors {
        x.coeff = x.coeff.invert_t();
    }
    f
}

fn with_positive_root_numerators(mut f: FactorList) -> FactorList {
    for i in 1..=f.l {
        for j in i + 1..=f.l {
            f.push(Factor::numer(i, j, LaurentQT::one()));
        }
    }
    f
}

/// `q^{m n(mu*)} t^{n(mu)}`.
pub fn mn_prefactor(mu: &Partition, m: usize) -> LaurentQT {
    LaurentQT::qt((m * mu.transpose().n_stat()) as i32, mu.n_stat() as i32)
}

fn omega_pol(f: &FactorList) -> Result<SchurExpansion> {
    Ok(pol_schur(&contract(f, Window::Weyl)?).omega())
}

/// `H~_mu(X; q, t) = omega pol(z_1 ... z_l HS_{beta*})`.
pub fn modified_macdonald(mu: &Partition, beta: Option<&Composition>) -> Result<SchurExpansion> {
    let beta = resolve_beta(mu, beta)?;
    omega_pol(&series_factors(&beta, 1, 1)?)
}

/// `H~^{m,n}_mu = omega pol(q^{m n(mu*)} t^{n(mu)} HS^{m,n}_{beta*})`.
pub fn mn_macdonald(
    mu: &Partition,
    m: usize,
    n: usize,
    beta: Option<&Composition>,
) -> Result<SchurExpansion> {
    shifted_mn_macdonald(mu, m, n, 0, beta)
}

/// The same with the series multiplied by `(z_1 ... z_l)^a`, which by the
/// stable-shift identity gives `H~^{m, n + a m}_mu`.
pub fn shifted_mn_macdonald(
    mu: &Partition,
    m: usize,
    n: usize,
    a: i32,
    beta: Option<&Composition>,
) -> Result<SchurExpansion> {
    let beta = resolve_beta(mu, beta)?;
    let f = with_shift(series_factors(&beta, m, n)?, a);
    Ok(omega_pol(&f)?.scale(&mn_prefactor(mu, m)))
}

/// `pol((z_1 ... z_l)^a HS_mu)`, with no `omega` and no prefactor.
pub fn series_truncation(
    mu: &Partition,
    a: i32,
    beta: Option<&Composition>,
) -> Result<SchurExpansion> {
    let beta = resolve_beta(mu, beta)?;
    let f = with_shift(series_factors(&beta, 1, 1)?, a - 1);
    Ok(pol_schur(&contract(&f, Window::Weyl)?))
}

/// `H~_mu = omega pol(t^{(1-m) n(mu)} HS^{m,1}_{beta*})`.
pub fn modified_macdonald_via_m1(
    mu: &Partition,
    m: usize,
    beta: Option<&Composition>,
) -> Result<SchurExpansion> {
    let beta = resolve_beta(mu, beta)?;
    let s = LaurentQT::qt(0, (1 - m as i32) * mu.n_stat() as i32);
    Ok(omega_pol(&series_factors(&beta, m, 1)?)?.scale(&s))
}

/// `H~_mu = omega h_X(z_1 ... z_l prod_{R+}(1 - z_i/z_j) HS^_mu)`.
pub fn modified_macdonald_via_h(
    mu: &Partition,
    beta: Option<&Composition>,
) -> Result<SchurExpansion> {
    let beta = resolve_beta(mu, beta)?;
    let f = with_positive_root_numerators(series_factors(&beta, 1, 1)?);
    Ok(hx_eval(&contract(&f, Window::NonNegative)?).omega())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HlVariant {
    /// `pol sigma(z^mu / prod_{R+}(1 - t z_i/z_j)) = t^{n(mu)} H~_mu(X; 0, 1/t)`.
    Weight,
    /// `omega pol sigma(z_1 ... z_l / prod_{B_mu}(1 - t z_i/z_j)) = H~_mu(X; 0, t)`.
    Root,
}

pub fn hall_littlewood(mu: &Partition, variant: HlVariant) -> Result<SchurExpansion> {
    match variant {
        HlVariant::Weight => {
            let l = mu.size();
            let base = (0..l).map(|i| mu.part(i) as i32).collect();
            let mut f = FactorList::new(base);
            for i in 1..=l {
                for j in i + 1..=l {
                    f.push(Factor::denom(i, j, LaurentQT::t()));
                }
            }
            Ok(pol_schur(&contract(&f, Window::Weyl)?))
        }
        HlVariant::Root => hall_littlewood_blocks(mu.parts().iter().rev().copied(), 1),
    }
}

/// `omega pol sigma((z_1 ... z_l)^n / prod_B (1 - t z_i/z_j))` for the block
/// root set `B` of the given block lengths.
pub fn hall_littlewood_blocks<I: IntoIterator<Item = usize>>(
    blocks: I,
    n: i32,
) -> Result<SchurExpansion> {
    let blocks: Vec<usize> = blocks.into_iter().collect();
    let l = blocks.iter().sum();
    let roots = bmu_roots_with_order(blocks);
    Ok(hl_from_roots(l, &roots, n)?.omega())
}

fn hl_from_roots(
    l: usize,
    roots: &std::collections::BTreeSet<(usize, usize)>,
    n: i32,
) -> Result<SchurExpansion> {
    let mut f = FactorList::new(vec![n; l]);
    for &(i, j) in roots {
        f.push(Factor::denom(i, j, LaurentQT::t()));
    }
    Ok(pol_schur(&contract(&f, Window::Weyl)?))
}

/// `omega pol sigma((z_1 ... z_l)^n / prod_{B_mu}(1 - t z_i/z_j))` with `l = |mu|`.
pub fn hall_littlewood_root_power(mu: &Partition, n: i32) -> Result<SchurExpansion> {
    let l = mu.size();
    let roots = bmu_roots_with_order(mu.parts().iter().rev().copied());
    Ok(hl_from_roots(l, &roots, n)?.omega())
}

/// `J_mu = t^{n(mu)} e'_X(z_1 ... z_l prod_{R+}(1 - z_i/z_j) HS^_{beta*}(q, 1/t))`.
pub fn integral_form_j(mu: &Partition, beta: Option<&Composition>) -> Result<SchurExpansion> {
    let beta = resolve_beta(mu, beta)?;
    let f = with_positive_root_numerators(invert_t(series_factors(&beta, 1, 1)?));
    let s = LaurentQT::qt(0, mu.n_stat() as i32);
    Ok(eprimex_eval(&contract(&f, Window::NonNegative)?).scale(&s))
}

/// `J_mu = t^{m n(mu)} e'_X(prod_{R+}(1 - z_i/z_j) HS^^{m,1}_{beta*}(q, 1/t))`.
pub fn integral_form_j_m1(
    mu: &Partition,
    m: usize,
    beta: Option<&Composition>,
) -> Result<SchurExpansion> {
    let beta = resolve_beta(mu, beta)?;
    let f = with_positive_root_numerators(invert_t(series_factors(&beta, m, 1)?));
    let s = LaurentQT::qt(0, (m * mu.n_stat()) as i32);
    Ok(eprimex_eval(&contract(&f, Window::NonNegative)?).scale(&s))
}

/// Outcome of one positivity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Positivity {
    Positive,
    Counterexample {
        partition: Partition,
        coeff: LaurentQT,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanEntry {
    pub mu: Partition,
    pub n: usize,
    pub result: Positivity,
}

/// First Schur coefficient outside `N[q, t]`, if any.
pub fn first_negative(f: &SchurExpansion) -> Positivity {
    for (lam, c) in f.terms().rev() {
        if !(c.is_polynomial() && c.is_nonnegative()) {
            return Positivity::Counterexample {
                partition: lam.clone(),
                coeff: c.clone(),
            };
        }
    }
    Positivity::Positive
}

/// Checks Schur positivity of `H~^{1,n}_mu` for `|mu| <= max_size`, `n <= max_n`.
pub fn positivity_scan(max_size: usize, max_n: usize) -> Result<Vec<ScanEntry>> {
    let mut out = Vec::new();
    for d in 1..=max_size {
        for mu in Partition::all(d) {
            for n in 1..=max_n {
                let f = mn_macdonald(&mu, 1, n, None)?;
                out.push(ScanEntry {
                    mu: mu.clone(),
                    n,
                    result: first_negative(&f),
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn c(s: &str) -> LaurentQT {
        s.parse().unwrap()
    }

    fn arm_leg_factors(beta: &str) -> Vec<(usize, usize, LaurentQT)> {
        let f = series_factors(&comp(beta), 1, 1).unwrap();
        let v = crate::shapes::root_sets(&comp(beta)).v;
        f.factors
            .iter()
            .filter(|x| !x.inverse && v.contains(&(x.i, x.j)))
            .map(|x| (x.i, x.j, x.coeff.clone()))
            .collect()
    }

    #[test]
    fn arm_leg_factors_for_4_2() {
        assert_eq!(
            arm_leg_factors("4,2"),
            vec![
                (1, 2, c("q")),
                (2, 3, c("q*t^-1")),
                (3, 5, c("q^2*t^-2")),
                (4, 6, c("q"))
            ]
        );
    }

    #[test]
    fn arm_leg_factors_for_1_4_2_4() {
        let f = arm_leg_factors("1,4,2,4");
        assert_eq!(f.len(), 7);
        assert!(f.contains(&(1, 3, c("q^2"))));
        assert!(f.contains(&(7, 11, c("q^3*t^-2"))));
    }

    #[test]
    fn single_box_series() {
        let f = series_factors(&comp("1"), 2, 3).unwrap();
        assert_eq!(f.base, vec![2, 1]);
        assert!(f.factors.iter().all(|x| x.inverse));
        assert_eq!(
            f.factors
                .iter()
                .filter(|x| x.coeff == LaurentQT::q())
                .count(),
            1
        );
        // a dilated column of height 3 already has a strict root (1, 3)
        let f = series_factors(&comp("1"), 3, 2).unwrap();
        assert_eq!(f.base, vec![1, 1, 0]);
        let numer: Vec<_> = f
            .factors
            .iter()
            .filter(|x| !x.inverse)
            .map(|x| (x.i, x.j))
            .collect();
        assert_eq!(numer, vec![(1, 3)]);
        assert_eq!(
            series_factors(&comp("1"), 2, 4),
            Err(Error::NotCoprime { m: 2, n: 4 })
        );
    }

    #[test]
    fn small_modified_macdonald() {
        assert_eq!(
            modified_macdonald(&p("1"), None).unwrap(),
            SchurExpansion::schur(p("1"))
        );
        assert_eq!(
            modified_macdonald(&p("2"), None).unwrap(),
            SchurExpansion::from_terms([(p("2"), c("1")), (p("1,1"), c("q"))])
        );
        assert_eq!(
            modified_macdonald(&p("1,1"), None).unwrap(),
            SchurExpansion::from_terms([(p("2"), c("1")), (p("1,1"), c("t"))])
        );
        assert!(matches!(
            modified_macdonald(&p("2,1"), Some(&comp("3"))),
            Err(Error::BadRearrangement { .. })
        ));
    }

    #[test]
    fn hall_littlewood_single_block() {
        // one block: no roots, omega s_{1^l} = s_l
        let f = hall_littlewood(&p("1,1,1"), HlVariant::Root);
        assert!(f.is_ok());
        let one_block = hall_littlewood_blocks([3], 1).unwrap();
        assert_eq!(one_block, SchurExpansion::schur(p("3")));
    }

    #[test]
    fn h_route_agrees_for_small_mu() {
        for mu in [p("2"), p("2,1"), p("1,1,1")] {
            assert_eq!(
                modified_macdonald_via_h(&mu, None).unwrap(),
                modified_macdonald(&mu, None).unwrap()
            );
        }
    }

    #[test]
    fn small_j() {
        assert_eq!(
            integral_form_j(&p("1"), None).unwrap(),
            SchurExpansion::schur(p("1")).scale(&c("1 - t"))
        );
    }
}
