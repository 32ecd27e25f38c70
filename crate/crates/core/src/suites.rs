//! Verification suites shared by the `verify` command and the test harness.
//!
//! Each suite compares two independently computed quantities with exact
//! equality and records one [`Check`] per instance.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::laurent::{LaurentQT, Specialization, Var};
use crate::macdonald::{
    first_negative, hall_littlewood, hall_littlewood_blocks, hall_littlewood_root_power,
    integral_form_j, integral_form_j_m1, mn_macdonald, modified_macdonald,
    modified_macdonald_via_m1, positivity_scan, series_factors, shifted_mn_macdonald, HlVariant,
    Positivity,
};
use crate::oracle::hhl::{domino_subsets, hhl_cached, hhl_macdonald};
use crate::oracle::nabla::{nabla_llt_engine, nabla_power};
use crate::oracle::{llt_schur, ribbons_from_subset};
use crate::shapes::{Composition, Partition};
use crate::symfunc::{
    e_product, h_product, plethysm_x_times, schur_multiply, Alphabet, SchurExpansion,
};
use crate::weyl::{
    contract, contract_capped_within, contract_with_stats, pol_schur, step_bound, Factor,
    FactorList, Window,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn eq(name: String, got: &SchurExpansion, want: &SchurExpansion) -> Check {
        let passed = got == want;
        let detail = if passed {
            String::new()
        } else {
            format!("got {got}, want {want}")
        };
        Check {
            name,
            passed,
            detail,
        }
    }

    fn flag(name: String, passed: bool, detail: String) -> Check {
        Check {
            name,
            passed,
            detail,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub title: &'static str,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Suite names with their default size bound.
pub const SUITES: [(&str, &str, usize); 10] = [
    (
        "oracle",
        "engine H~_mu equals the HHL oracle for several column orders",
        6,
    ),
    (
        "tabulated",
        "tabulated H~^{1,2}_mu expansions for |mu| = 2, 3",
        3,
    ),
    ("specializations", "q=t=1, q=0 and 1,n specializations", 6),
    ("symmetry", "H~^{1,n}_mu(q,t) = H~^{1,n}_{mu*}(t,q)", 5),
    ("nabla-llt", "nabla on LLT polynomials of ribbon tuples", 4),
    (
        "mn",
        "m,1 reduction, stable shift and the m,1 formula for H~_mu",
        3,
    ),
    ("integral", "integral forms J_mu", 5),
    (
        "engine",
        "pruned contraction against brute force; root expansion lemma",
        4,
    ),
    ("positivity", "Schur positivity of H~^{1,n}_mu", 4),
    ("normalization", "coefficient of s_{1^l} in omega H~_mu", 6),
];

pub fn run_suite(name: &str, max_size: Option<usize>) -> Result<SuiteReport> {
    let (suite, title, default) = SUITES
        .iter()
        .copied()
        .find(|(n, _, _)| *n == name)
        .ok_or_else(|| Error::Parse(format!("unknown suite {name:?}")))?;
    let k = max_size.map_or(default, |m| m.min(default));
    let checks = match suite {
        "oracle" => oracle_equivalence(k)?,
        "tabulated" => tabulated_examples()?,
        "specializations" => specializations(k, k.min(4), 3)?,
        "symmetry" => symmetry(k, 2)?,
        "nabla-llt" => nabla_llt(k)?,
        "mn" => mn_layer(k)?,
        "integral" => integral_forms(k, k.min(3))?,
        "engine" => engine_soundness(k, 5)?,
        "positivity" => positivity(k, 3)?,
        "normalization" => normalization(k)?,
        _ => unreachable!(),
    };
    Ok(SuiteReport {
        suite,
        title,
        checks,
    })
}

fn partitions_up_to(k: usize) -> Vec<Partition> {
    (1..=k).flat_map(Partition::all).collect()
}

fn collect<T: Send>(items: Vec<Result<T>>) -> Result<Vec<T>> {
    items.into_iter().collect()
}

/// `mu*` first, then up to `extra` other rearrangements.
fn betas(mu: &Partition, extra: usize) -> Vec<Composition> {
    let star = mu.transpose().as_composition();
    let mut out = vec![star.clone()];
    let others = Composition::rearrangements(star.parts());
    out.extend(others.into_iter().filter(|b| *b != star).take(extra));
    out
}

fn q_to_zero() -> Specialization {
    Specialization::zero(Var::Q)
}

pub fn oracle_equivalence(k: usize) -> Result<Vec<Check>> {
    let cells: Vec<(Partition, Composition)> = partitions_up_to(k)
        .into_iter()
        .flat_map(|mu| betas(&mu, 2).into_iter().map(move |b| (mu.clone(), b)))
        .collect();
    let out = cells
        .into_par_iter()
        .map(|(mu, beta)| {
            let want = hhl_cached(&mu);
            let got = modified_macdonald(&mu, Some(&beta))?;
            let mut c = Check::eq(format!("mu={mu} beta={beta}"), &got, &want);
            if c.passed && beta != mu.transpose().as_composition() {
                let oracle_beta = hhl_macdonald(&mu, Some(&beta))?;
                c = Check::eq(
                    format!("mu={mu} beta={beta} (oracle order)"),
                    &oracle_beta,
                    &want,
                );
            }
            Ok(c)
        })
        .collect();
    collect(out)
}

/// `(mu, scalar, inner)` with `H~^{1,2}_mu = omega(scalar * inner)`.
pub type TabulatedRow = (
    &'static str,
    &'static str,
    Vec<(&'static str, &'static str)>,
);

pub fn tabulated_table() -> Vec<TabulatedRow> {
    vec![
        ("2", "q", vec![("4", "q^2"), ("3,1", "q"), ("2,2", "1")]),
        ("1,1", "t", vec![("4", "t^2"), ("3,1", "t"), ("2,2", "1")]),
        (
            "3",
            "q^3",
            vec![
                ("6", "q^6"),
                ("5,1", "q^4 + q^5"),
                ("4,2", "q^2 + q^3 + q^4"),
                ("3,3", "q^3"),
                ("4,1,1", "q^3"),
                ("3,2,1", "q + q^2"),
                ("2,2,2", "1"),
            ],
        ),
        (
            "2,1",
            "q*t",
            vec![
                ("6", "q^2*t^2"),
                ("5,1", "q*t^2 + q^2*t"),
                ("4,2", "t^2 + q*t + q^2"),
                ("3,3", "q*t"),
                ("4,1,1", "q*t"),
                ("3,2,1", "t + q"),
                ("2,2,2", "1"),
            ],
        ),
        (
            "1,1,1",
            "t^3",
            vec![
                ("6", "t^6"),
                ("5,1", "t^4 + t^5"),
                ("4,2", "t^2 + t^3 + t^4"),
                ("3,3", "t^3"),
                ("4,1,1", "t^3"),
                ("3,2,1", "t + t^2"),
                ("2,2,2", "1"),
            ],
        ),
    ]
}

pub fn tabulated_expansion(scalar: &str, inner: &[(&str, &str)]) -> Result<SchurExpansion> {
    let mut f = SchurExpansion::zero();
    for (lam, c) in inner {
        f.add_term(lam.parse()?, &c.parse()?);
    }
    Ok(f.scale(&scalar.parse()?).omega())
}

pub fn tabulated_examples() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (mu, scalar, inner) in tabulated_table() {
        let mu: Partition = mu.parse()?;
        let want = tabulated_expansion(scalar, &inner)?;
        out.push(Check::eq(
            format!("H~^(1,2)_{mu}"),
            &mn_macdonald(&mu, 1, 2, None)?,
            &want,
        ));
    }
    Ok(out)
}

/// `H_lam(X; t) = t^{n(lam)} H~_lam(X; 0, 1/t)` from the weight-side formula.
fn hl_weight(lam: &Partition) -> Result<SchurExpansion> {
    hall_littlewood(lam, HlVariant::Weight)
}

pub fn specializations(k: usize, k1n: usize, max_n: usize) -> Result<Vec<Check>> {
    let mus = partitions_up_to(k);
    let basic = mus
        .par_iter()
        .map(|mu| -> Result<Vec<Check>> {
            let h = modified_macdonald(mu, None)?;
            let d = mu.size();
            let mut out = Vec::new();
            let at_one = h
                .specialize(Specialization::one(Var::Q))?
                .specialize(Specialization::one(Var::T))?;
            out.push(Check::eq(
                format!("H~_{mu}(1,1) = e_1^{d}"),
                &at_one,
                &h_product(&vec![1; d]),
            ));
            let q0 = h.specialize(q_to_zero())?;
            out.push(Check::eq(
                format!("H~_{mu}(0,t) root-side"),
                &q0,
                &hall_littlewood(mu, HlVariant::Root)?,
            ));
            let mut alt: Vec<usize> = mu.parts().to_vec();
            alt.rotate_left(1);
            out.push(Check::eq(
                format!("H~_{mu}(0,t) root-side, blocks {alt:?}"),
                &q0,
                &hall_littlewood_blocks(alt.iter().copied(), 1)?,
            ));
            let weight = q0
                .map_coeffs(|c| c.invert_t())
                .scale(&LaurentQT::qt(0, mu.n_stat() as i32));
            out.push(Check::eq(
                format!("t^n H~_{mu}(0,1/t) weight-side"),
                &weight,
                &hl_weight(mu)?,
            ));
            Ok(out)
        })
        .collect::<Vec<_>>();
    let cells: Vec<(Partition, usize)> = partitions_up_to(k1n)
        .into_iter()
        .flat_map(|mu| (1..=max_n).map(move |n| (mu.clone(), n)))
        .collect();
    let one_n = cells
        .par_iter()
        .map(|(mu, n)| -> Result<Vec<Check>> {
            let (mu, n) = (mu, *n);
            let l = mu.size();
            let h = mn_macdonald(mu, 1, n, None)?;
            let mut out = Vec::new();
            let q1 = h.specialize(Specialization::one(Var::Q))?;
            let q1t1 = q1.specialize(Specialization::one(Var::T))?;
            out.push(Check::eq(
                format!("H~^(1,{n})_{mu}(1,1)"),
                &q1t1,
                &e_product(&vec![n as i32; l]),
            ));
            let mut prod = SchurExpansion::scalar(LaurentQT::qt(0, mu.n_stat() as i32));
            for &nu_r in mu.transpose().parts() {
                let rect = Partition::new(vec![n; nu_r])?;
                prod = schur_multiply(&prod, &hl_weight(&rect)?.omega());
            }
            out.push(Check::eq(format!("H~^(1,{n})_{mu}(1,t)"), &q1, &prod));
            let scaled = h.scale(&LaurentQT::qt(
                -(mu.transpose().n_stat() as i32),
                -(mu.n_stat() as i32),
            ));
            out.push(Check::eq(
                format!("H~^(1,{n})_{mu} at q=0"),
                &scaled.specialize(q_to_zero())?,
                &hall_littlewood_root_power(mu, n as i32)?,
            ));
            Ok(out)
        })
        .collect::<Vec<_>>();
    Ok(collect(basic)?
        .into_iter()
        .chain(collect(one_n)?)
        .flatten()
        .collect())
}

pub fn symmetry(k: usize, max_n: usize) -> Result<Vec<Check>> {
    let cells: Vec<(Partition, usize)> = partitions_up_to(k)
        .into_iter()
        .flat_map(|mu| (1..=max_n).map(move |n| (mu.clone(), n)))
        .collect();
    collect(
        cells
            .par_iter()
            .map(|(mu, n)| {
                let a = mn_macdonald(mu, 1, *n, None)?;
                let b = mn_macdonald(&mu.transpose(), 1, *n, None)?
                    .specialize(Specialization::SwapQT)?;
                Ok(Check::eq(format!("mu={mu} n={n}"), &a, &b))
            })
            .collect(),
    )
}

/// All compositions of `d`.
pub fn compositions(d: usize) -> Vec<Composition> {
    if d == 0 {
        return vec![];
    }
    (0..1usize << (d - 1))
        .map(|mask| {
            let mut parts = Vec::new();
            let mut cur = 1;
            for b in 0..d - 1 {
                if mask >> b & 1 == 1 {
                    parts.push(cur);
                    cur = 1;
                } else {
                    cur += 1;
                }
            }
            parts.push(cur);
            Composition::new(parts).expect("positive parts")
        })
        .collect()
}

pub fn nabla_llt(k: usize) -> Result<Vec<Check>> {
    let cells: Vec<(Composition, Vec<(usize, usize)>)> = (1..=k)
        .flat_map(compositions)
        .flat_map(|b| domino_subsets(&b).into_iter().map(move |s| (b.clone(), s)))
        .collect();
    collect(
        cells
            .par_iter()
            .map(|(beta, s)| {
                let g = llt_schur(&ribbons_from_subset(beta, s)?);
                let lhs = nabla_power(&g, 1)?;
                Ok(Check::eq(
                    format!("beta={beta} S={s:?}"),
                    &lhs,
                    &nabla_llt_engine(beta, s)?,
                ))
            })
            .collect(),
    )
}

pub fn mn_layer(k: usize) -> Result<Vec<Check>> {
    let mus = partitions_up_to(k);
    let out = mus
        .par_iter()
        .map(|mu| -> Result<Vec<Check>> {
            let h = hhl_cached(mu);
            let mut out = Vec::new();
            for m in 1..=2 {
                out.push(Check::eq(
                    format!("H~^({m},1)_{mu} = nabla^{m} H~_{mu}"),
                    &mn_macdonald(mu, m, 1, None)?,
                    &nabla_power(&h, m)?,
                ));
            }
            out.push(Check::eq(
                format!("stable shift (2,1) -> (2,3), mu={mu}"),
                &shifted_mn_macdonald(mu, 2, 1, 1, None)?,
                &mn_macdonald(mu, 2, 3, None)?,
            ));
            out.push(Check::eq(
                format!("m,1 formula m=2, mu={mu}"),
                &modified_macdonald_via_m1(mu, 2, None)?,
                &h,
            ));
            Ok(out)
        })
        .collect::<Vec<_>>();
    Ok(collect(out)?.into_iter().flatten().collect())
}

/// `t^{n(mu)} H~_mu[X(1-t); q, 1/t]` from the oracle.
pub fn j_from_oracle(mu: &Partition) -> Result<SchurExpansion> {
    let h = hhl_cached(mu).map_coeffs(|c| c.invert_t());
    Ok(plethysm_x_times(&h, Alphabet::OneMinusT)?.scale(&LaurentQT::qt(0, mu.n_stat() as i32)))
}

pub fn integral_forms(k: usize, k_variants: usize) -> Result<Vec<Check>> {
    let mus = partitions_up_to(k);
    let out = mus
        .par_iter()
        .map(|mu| -> Result<Vec<Check>> {
            let want = j_from_oracle(mu)?;
            let mut out = vec![Check::eq(
                format!("J_{mu}"),
                &integral_form_j(mu, None)?,
                &want,
            )];
            if mu.size() <= k_variants {
                for beta in betas(mu, 2).into_iter().skip(1) {
                    out.push(Check::eq(
                        format!("J_{mu} beta={beta}"),
                        &integral_form_j(mu, Some(&beta))?,
                        &want,
                    ));
                }
                out.push(Check::eq(
                    format!("J_{mu} via m=2"),
                    &integral_form_j_m1(mu, 2, None)?,
                    &want,
                ));
            }
            Ok(out)
        })
        .collect::<Vec<_>>();
    Ok(collect(out)?.into_iter().flatten().collect())
}

/// Pruned contraction against the capped brute-force expansion, plus a bound
/// on the number of root steps taken.
pub fn soundness_check(name: String, f: &FactorList) -> Result<Check> {
    let (pruned, stats) = contract_with_stats(f, Window::Weyl)?;
    let bound = step_bound(&f.base);
    if stats.max_steps as i64 > bound {
        return Ok(Check::flag(
            name,
            false,
            format!("{} root steps exceed the bound {bound}", stats.max_steps),
        ));
    }
    let cap = (f.degree() as usize) + 2 * f.l;
    // the plain capped product runs out of memory from rank 4 on
    let limit = (f.l > 3).then(|| (f.l as i64 - 1) * f.degree() as i64);
    let brute = contract_capped_within(f, cap, limit)?;
    Ok(Check::eq(name, &pol_schur(&pruned), &pol_schur(&brute)))
}

/// Sets `B` of positive roots fixed by `s_k`, with each root `(k+1, j)` in `B`.
type LemmaInstance = (usize, BTreeSet<(usize, usize)>, (usize, usize));

fn root_expansion_instances(l: usize) -> Vec<LemmaInstance> {
    let roots: Vec<(usize, usize)> = (1..=l)
        .flat_map(|i| (i + 1..=l).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for k in 1..l {
        let swap = |x: usize| {
            if x == k {
                k + 1
            } else if x == k + 1 {
                k
            } else {
                x
            }
        };
        for mask in 0..1usize << roots.len() {
            let b: BTreeSet<(usize, usize)> = roots
                .iter()
                .enumerate()
                .filter(|(r, _)| mask >> r & 1 == 1)
                .map(|(_, x)| *x)
                .collect();
            let fixed = b.iter().all(|&(i, j)| {
                let (a, c) = (swap(i), swap(j));
                a < c && b.contains(&(a, c))
            });
            if !fixed {
                continue;
            }
            for &(i, j) in &b {
                if i == k + 1 && j > k + 1 {
                    out.push((k, b.clone(), (i, j)));
                }
            }
        }
    }
    out
}

fn root_denominators(l: usize, roots: impl IntoIterator<Item = (usize, usize)>) -> FactorList {
    let mut f = FactorList::new(vec![1; l]);
    for (i, j) in roots {
        f.push(Factor::denom(i, j, LaurentQT::t()));
    }
    f
}

pub fn engine_soundness(k: usize, max_l: usize) -> Result<Vec<Check>> {
    let mus = partitions_up_to(k);
    let brute = mus
        .par_iter()
        .map(|mu| -> Result<Vec<Check>> {
            let beta = mu.transpose().as_composition();
            let mut out = vec![soundness_check(
                format!("H~_{mu} series"),
                &series_factors(&beta, 1, 1)?,
            )?];
            let mut hl = FactorList::new((0..mu.size()).map(|i| mu.part(i) as i32).collect());
            for i in 1..=hl.l {
                for j in i + 1..=hl.l {
                    hl.push(Factor::denom(i, j, LaurentQT::t()));
                }
            }
            out.push(soundness_check(format!("weight-side HL {mu}"), &hl)?);
            Ok(out)
        })
        .collect::<Vec<_>>();
    let instances: Vec<_> = (2..=max_l)
        .flat_map(|l| root_expansion_instances(l).into_iter().map(move |x| (l, x)))
        .collect();
    let lemma = instances
        .par_iter()
        .map(|(l, (k, b, alpha))| -> Result<Check> {
            let full = pol_schur(&contract(
                &root_denominators(*l, b.iter().copied()),
                Window::Weyl,
            )?);
            let less = pol_schur(&contract(
                &root_denominators(*l, b.iter().copied().filter(|r| r != alpha)),
                Window::Weyl,
            )?);
            Ok(Check::eq(
                format!("l={l} k={k} B={b:?} drop {alpha:?}"),
                &full,
                &less,
            ))
        })
        .collect::<Vec<_>>();
    Ok(collect(brute)?
        .into_iter()
        .flatten()
        .chain(collect(lemma)?)
        .collect())
}

pub fn positivity(k: usize, max_n: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for e in positivity_scan(k, max_n)? {
        let name = format!("mu={} n={}", e.mu, e.n);
        out.push(match e.result {
            Positivity::Positive => Check::flag(name, true, String::new()),
            Positivity::Counterexample { partition, coeff } => Check::flag(
                name,
                false,
                format!("coefficient of s_{partition} is {coeff}"),
            ),
        });
    }
    if k >= 2 {
        // the tabulated H~^{1,2}_2 coefficients q^3, q^2, q
        let h = mn_macdonald(&Partition::new(vec![2])?, 1, 2, None)?;
        let want: Vec<LaurentQT> = ["q^3", "q^2", "q"]
            .iter()
            .map(|s| s.parse())
            .collect::<Result<_>>()?;
        let mut got: Vec<LaurentQT> = h.terms().map(|(_, c)| c.clone()).collect();
        got.sort_by_key(|c| std::cmp::Reverse(c.terms().next().map(|(e, _)| *e)));
        let ok = got == want && first_negative(&h) == Positivity::Positive;
        out.push(Check::flag(
            "tabulated coefficients of H~^(1,2)_2".into(),
            ok,
            format!("{got:?}"),
        ));
    }
    Ok(out)
}

pub fn normalization(k: usize) -> Result<Vec<Check>> {
    let mus = partitions_up_to(k);
    collect(
        mus.par_iter()
            .map(|mu| {
                let h = modified_macdonald(mu, None)?.omega();
                let ones = Partition::new(vec![1; mu.size()])?;
                let c = h.coeff(&ones);
                Ok(Check::flag(
                    format!("mu={mu}"),
                    c.is_one(),
                    format!("coefficient {c}"),
                ))
            })
            .collect(),
    )
}
