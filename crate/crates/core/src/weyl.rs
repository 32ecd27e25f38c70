//! Raising-operator products, Weyl symmetrization and polynomial truncation.
//!
//! A [`FactorList`] is `z^base * prod (1 - c z_i/z_j)^{±1}` over positive
//! roots. [`contract`] expands it into the finite [`WeightSeries`] of terms
//! that can still contribute after symmetrization, expanding inverse factors
//! as geometric series.
//!
//! Truncation rests on one monotone quantity. Each step along `e_i - e_j`
//! (`i < j`) adds 1 to every prefix sum `P_k = g_1 + ... + g_k` with
//! `i <= k < j` and leaves the others alone. A surviving weight is a
//! rearrangement of `nu + rho - rho` with `nu` a partition of `D`, so
//! `P_k <= nu_1 + ... + nu_k <= D`; once a prefix sum passes `D` the term and
//! everything it can still grow into are dead. This also bounds the total
//! number of steps by `(l - 1) D - Phi(base)` with `Phi = sum_k P_k`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentQT;
use crate::shapes::Partition;
use crate::symfunc::{eprime_product, h_product, SchurExpansion};

/// `(1 - coeff * z_i / z_j)`, or its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub i: usize,
    pub j: usize,
    pub coeff: LaurentQT,
    pub inverse: bool,
}

impl Factor {
    pub fn numer(i: usize, j: usize, coeff: LaurentQT) -> Self {
        Factor {
            i,
            j,
            coeff,
            inverse: false,
        }
    }

    pub fn denom(i: usize, j: usize, coeff: LaurentQT) -> Self {
        Factor {
            i,
            j,
            coeff,
            inverse: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorList {
    pub l: usize,
    pub base: Vec<i32>,
    pub factors: Vec<Factor>,
}

#[derive(Serialize, Deserialize)]
struct JsonFactor {
    i: usize,
    j: usize,
    coeff: String,
    inverse: bool,
}

#[derive(Serialize, Deserialize)]
struct JsonFactorList {
    l: usize,
    base: Vec<i32>,
    factors: Vec<JsonFactor>,
}

impl FactorList {
    pub fn new(base: Vec<i32>) -> Self {
        FactorList {
            l: base.len(),
            base,
            factors: Vec::new(),
        }
    }

    pub fn push(&mut self, f: Factor) {
        self.factors.push(f);
    }

    pub fn degree(&self) -> i32 {
        self.base.iter().sum()
    }

    pub fn validate(&self) -> Result<()> {
        if self.base.len() != self.l {
            return Err(Error::RankMismatch {
                expected: self.l,
                found: self.base.len(),
            });
        }
        for f in &self.factors {
            if f.i == 0 || f.i >= f.j {
                return Err(Error::InvalidShape(format!(
                    "factor ({}, {}) is not a positive root",
                    f.i, f.j
                )));
            }
            if f.j > self.l {
                return Err(Error::RankMismatch {
                    expected: self.l,
                    found: f.j,
                });
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let doc = JsonFactorList {
            l: self.l,
            base: self.base.clone(),
            factors: self
                .factors
                .iter()
                .map(|f| JsonFactor {
                    i: f.i,
                    j: f.j,
                    coeff: f.coeff.to_string(),
                    inverse: f.inverse,
                })
                .collect(),
        };
        serde_json::to_string(&doc).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: JsonFactorList =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let mut factors = Vec::with_capacity(doc.factors.len());
        for f in doc.factors {
            factors.push(Factor {
                i: f.i,
                j: f.j,
                coeff: f.coeff.parse()?,
                inverse: f.inverse,
            });
        }
        let out = FactorList {
            l: doc.l,
            base: doc.base,
            factors,
        };
        out.validate()?;
        Ok(out)
    }
}

/// A finite sum `sum c_g z^g` over weights of a fixed length.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightSeries {
    pub l: usize,
    terms: HashMap<Vec<i32>, LaurentQT>,
}

impl WeightSeries {
    pub fn new(l: usize) -> Self {
        WeightSeries {
            l,
            terms: HashMap::new(),
        }
    }

    pub fn add_term(&mut self, w: Vec<i32>, c: &LaurentQT) {
        debug_assert_eq!(w.len(), self.l);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn get(&self, w: &[i32]) -> Option<&LaurentQT> {
        self.terms.get(w)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &LaurentQT)> {
        self.terms.iter()
    }

    /// Terms sorted by weight, for deterministic rendering.
    pub fn sorted_terms(&self) -> Vec<(&Vec<i32>, &LaurentQT)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }
}

/// Which evaluation the contracted series feeds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Window {
    /// `pol_X sigma`: keep `g` with `g + rho` entries in `[0, D + l - 1]`.
    Weyl,
    /// `h_X` and `e'_X`: keep `g` with entries in `[0, D]`.
    NonNegative,
}

impl Window {
    /// Inclusive bounds on coordinate `c` (1-based) of a surviving weight.
    fn bounds(self, c: usize, l: usize, d: i32) -> (i32, i32) {
        match self {
            Window::Weyl => (-((l - c) as i32), d + c as i32 - 1),
            Window::NonNegative => (0, d),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ContractStats {
    /// Largest power of any single geometric series that was kept.
    pub max_power: usize,
    /// Total steps along positive roots in any kept term.
    pub max_steps: usize,
    /// Largest intermediate frontier.
    pub peak_terms: usize,
}

/// `Phi(g) = sum_i (l - i) g_i`, the sum of the first `l - 1` prefix sums.
pub fn potential(w: &[i32]) -> i64 {
    let l = w.len();
    w.iter()
        .enumerate()
        .map(|(i, &g)| (l - 1 - i) as i64 * g as i64)
        .sum()
}

/// Upper bound on the number of root steps any surviving term can contain.
pub fn step_bound(base: &[i32]) -> i64 {
    let l = base.len() as i64;
    let d: i64 = base.iter().map(|&g| g as i64).sum();
    (l - 1).max(0) * d - potential(base)
}

/// Capacity of the factors at positions `>= p` to raise or lower a coordinate.
/// `None` means unbounded (an inverse factor is still pending).
struct Capacity {
    raise: Vec<Vec<Option<u32>>>,
    lower: Vec<Vec<Option<u32>>>,
}

impl Capacity {
    fn new(l: usize, factors: &[Factor]) -> Self {
        let n = factors.len();
        let mut raise = vec![vec![Some(0u32); l + 1]; n + 1];
        let mut lower = vec![vec![Some(0u32); l + 1]; n + 1];
        for p in (0..n).rev() {
            raise[p] = raise[p + 1].clone();
            lower[p] = lower[p + 1].clone();
            let f = &factors[p];
            let bump = |x: Option<u32>| if f.inverse { None } else { x.map(|v| v + 1) };
            raise[p][f.i] = bump(raise[p][f.i]);
            lower[p][f.j] = bump(lower[p][f.j]);
        }
        Capacity { raise, lower }
    }
}

struct Pruner {
    l: usize,
    d: i32,
    lo: Vec<i32>,
    hi: Vec<i32>,
    cap: Capacity,
}

impl Pruner {
    fn new(expr: &FactorList, factors: &[Factor], window: Window) -> Self {
        let l = expr.l;
        let d = expr.degree();
        let (lo, hi) = (1..=l).map(|c| window.bounds(c, l, d)).unzip();
        Pruner {
            l,
            d,
            lo,
            hi,
            cap: Capacity::new(l, factors),
        }
    }

    /// True if some completion by the factors at positions `>= p` could survive.
    fn alive(&self, w: &[i32], p: usize) -> bool {
        let mut prefix = 0;
        for (k, &wk) in w.iter().enumerate() {
            prefix += wk;
            if k + 1 < self.l && prefix > self.d {
                return false;
            }
            let c = k + 1;
            if let Some(r) = self.cap.raise[p][c] {
                if wk + (r as i32) < self.lo[k] {
                    return false;
                }
            }
            if let Some(r) = self.cap.lower[p][c] {
                if wk - (r as i32) > self.hi[k] {
                    return false;
                }
            }
        }
        true
    }
}

/// Processing order: target `j` descending, then source `i` descending.
fn ordered(factors: &[Factor]) -> Vec<Factor> {
    let mut v = factors.to_vec();
    v.sort_by(|a, b| {
        b.j.cmp(&a.j)
            .then(b.i.cmp(&a.i))
            .then(a.inverse.cmp(&b.inverse))
    });
    v
}

/// Expands `expr`, keeping every term that can survive `window`.
pub fn contract(expr: &FactorList, window: Window) -> Result<WeightSeries> {
    contract_with_stats(expr, window).map(|(s, _)| s)
}

pub fn contract_with_stats(
    expr: &FactorList,
    window: Window,
) -> Result<(WeightSeries, ContractStats)> {
    expr.validate()?;
    let l = expr.l;
    let factors = ordered(&expr.factors);
    let pruner = Pruner::new(expr, &factors, window);
    let mut stats = ContractStats::default();
    // frontier: weight -> (coefficient, steps taken)
    let mut frontier: HashMap<Vec<i32>, LaurentQT> = HashMap::new();
    let mut steps_of: HashMap<Vec<i32>, usize> = HashMap::new();
    if pruner.alive(&expr.base, 0) {
        frontier.insert(expr.base.clone(), LaurentQT::one());
        steps_of.insert(expr.base.clone(), 0);
    }
    for (p, f) in factors.iter().enumerate() {
        let (i, j) = (f.i - 1, f.j - 1);
        let mut next: HashMap<Vec<i32>, LaurentQT> = HashMap::with_capacity(frontier.len() * 2);
        let mut next_steps: HashMap<Vec<i32>, usize> = HashMap::new();
        let neg = -&f.coeff;
        for (w, c) in frontier {
            let s0 = steps_of[&w];
            let mut push = |w: Vec<i32>, c: LaurentQT, s: usize| {
                let e = next_steps.entry(w.clone()).or_insert(s);
                *e = (*e).max(s);
                match next.get_mut(&w) {
                    Some(slot) => *slot += &c,
                    None => {
                        next.insert(w, c);
                    }
                }
            };
            if pruner.alive(&w, p + 1) {
                push(w.clone(), c.clone(), s0);
            }
            let mut cur = w;
            let mut coeff = c;
            let mut k = 0usize;
            loop {
                k += 1;
                cur[i] += 1;
                cur[j] -= 1;
                // every prune condition only gets worse as k grows
                if !pruner.alive(&cur, p + 1) {
                    break;
                }
                coeff = &coeff * if f.inverse { &f.coeff } else { &neg };
                stats.max_power = stats.max_power.max(k);
                push(cur.clone(), coeff.clone(), s0 + k * (f.j - f.i));
                if !f.inverse {
                    break;
                }
            }
        }
        next.retain(|_, c| !c.is_zero());
        next_steps.retain(|w, _| next.contains_key(w));
        stats.peak_terms = stats.peak_terms.max(next.len());
        frontier = next;
        steps_of = next_steps;
    }
    stats.max_steps = steps_of.values().copied().max().unwrap_or(0);
    let mut out = WeightSeries::new(l);
    for (w, c) in frontier {
        out.add_term(w, &c);
    }
    Ok((out, stats))
}

/// Expansion with no window at all: every inverse factor is expanded to
/// exactly `cap` extra terms. Used to test the pruned expansion.
pub fn contract_capped(expr: &FactorList, cap: usize) -> Result<WeightSeries> {
    contract_capped_within(expr, cap, None)
}

/// As [`contract_capped`], also dropping terms whose potential exceeds
/// `max_potential`. Every root step raises the potential, so a dropped term
/// never comes back under the limit.
pub fn contract_capped_within(
    expr: &FactorList,
    cap: usize,
    max_potential: Option<i64>,
) -> Result<WeightSeries> {
    expr.validate()?;
    let mut frontier: HashMap<Vec<i32>, LaurentQT> = HashMap::new();
    frontier.insert(expr.base.clone(), LaurentQT::one());
    for f in &expr.factors {
        let (i, j) = (f.i - 1, f.j - 1);
        let mut next: HashMap<Vec<i32>, LaurentQT> = HashMap::with_capacity(frontier.len() * 2);
        let kmax = if f.inverse { cap } else { 1 };
        let step = if f.inverse {
            f.coeff.clone()
        } else {
            -&f.coeff
        };
        for (w, c) in frontier {
            let mut cur = w;
            let mut coeff = c;
            for k in 0..=kmax {
                if k > 0 {
                    cur[i] += 1;
                    cur[j] -= 1;
                    coeff = &coeff * &step;
                }
                *next.entry(cur.clone()).or_default() += &coeff;
            }
        }
        next.retain(|w, c| !c.is_zero() && max_potential.is_none_or(|m| potential(w) <= m));
        frontier = next;
    }
    let mut out = WeightSeries::new(expr.l);
    for (w, c) in frontier {
        out.add_term(w, &c);
    }
    Ok(out)
}

/// Result of straightening `z^g` under Weyl symmetrization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Straightened {
    Zero,
    Char { sign: i32, nu: Vec<i32> },
}

pub fn straighten(gamma: &[i32]) -> Straightened {
    let l = gamma.len();
    let mut v: Vec<i32> = gamma
        .iter()
        .enumerate()
        .map(|(i, &g)| g + (l - 1 - i) as i32)
        .collect();
    // insertion sort into decreasing order, counting swaps
    let mut swaps = 0usize;
    for a in 1..l {
        let mut b = a;
        while b > 0 && v[b - 1] < v[b] {
            v.swap(b - 1, b);
            swaps += 1;
            b -= 1;
        }
    }
    if v.windows(2).any(|p| p[0] == p[1]) {
        return Straightened::Zero;
    }
    let nu = v
        .iter()
        .enumerate()
        .map(|(i, &x)| x - (l - 1 - i) as i32)
        .collect();
    Straightened::Char {
        sign: if swaps.is_multiple_of(2) { 1 } else { -1 },
        nu,
    }
}

/// `pol_X sigma`: straighten every term and drop characters with `nu_l < 0`.
pub fn pol_schur(series: &WeightSeries) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    for (w, c) in series.terms() {
        if let Straightened::Char { sign, nu } = straighten(w) {
            if nu.last().is_some_and(|&x| x < 0) {
                continue;
            }
            let lam = Partition::from_unsorted(nu.iter().map(|&x| x as usize));
            let c = if sign < 0 { -c } else { c.clone() };
            out.add_term(lam, &c);
        }
    }
    out
}

/// Groups coefficients by the sorted weight, which is all `h_X` and `e'_X` see.
fn by_multiset(series: &WeightSeries) -> Vec<(Vec<i32>, LaurentQT)> {
    let mut groups: HashMap<Vec<i32>, LaurentQT> = HashMap::new();
    for (w, c) in series.terms() {
        if w.iter().any(|&g| g < 0) {
            continue;
        }
        let mut key = w.clone();
        key.sort_unstable_by(|a, b| b.cmp(a));
        *groups.entry(key).or_default() += c;
    }
    let mut v: Vec<_> = groups.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    v.sort_by(|a, b| a.0.cmp(&b.0));
    v
}

/// `h_X`: `z^g -> h_g`.
pub fn hx_eval(series: &WeightSeries) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    for (g, c) in by_multiset(series) {
        out.add_scaled(&h_product(&g), &c);
    }
    out
}

/// `e'_X`: `z^g -> prod_i sum_j (-t)^j e_{g_i - j} h_j`.
pub fn eprimex_eval(series: &WeightSeries) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    for (g, c) in by_multiset(series) {
        out.add_scaled(&eprime_product(&g), &c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> LaurentQT {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn series(l: usize, terms: &[(&[i32], &str)]) -> WeightSeries {
        let mut out = WeightSeries::new(l);
        for (w, k) in terms {
            out.add_term(w.to_vec(), &c(k));
        }
        out
    }

    #[test]
    fn straighten_examples() {
        assert_eq!(straighten(&[1, 2, 0]), Straightened::Zero);
        assert_eq!(
            straighten(&[2, 1, 0]),
            Straightened::Char {
                sign: 1,
                nu: vec![2, 1, 0]
            }
        );
        assert_eq!(
            straighten(&[0, 2]),
            Straightened::Char {
                sign: -1,
                nu: vec![1, 1]
            }
        );
        assert_eq!(
            straighten(&[3, 3, 1]),
            Straightened::Char {
                sign: 1,
                nu: vec![3, 3, 1]
            }
        );
    }

    #[test]
    fn contract_examples() {
        let empty = FactorList::new(vec![1, 1]);
        assert_eq!(
            contract(&empty, Window::Weyl).unwrap(),
            series(2, &[(&[1, 1], "1")])
        );

        let mut num = FactorList::new(vec![1, 1]);
        num.push(Factor::numer(1, 2, c("q")));
        assert_eq!(
            contract(&num, Window::Weyl).unwrap(),
            series(2, &[(&[1, 1], "1"), (&[2, 0], "-q")])
        );

        let mut den = FactorList::new(vec![1, 1]);
        den.push(Factor::denom(1, 2, c("t")));
        let got = contract(&den, Window::Weyl).unwrap();
        assert_eq!(got, series(2, &[(&[1, 1], "1"), (&[2, 0], "t")]));
        // a brute-force expansion carries (3,-1) and more but they all vanish
        let brute = contract_capped(&den, 3).unwrap();
        assert_eq!(brute.get(&[3, -1]), Some(&c("t^2")));
        assert_eq!(pol_schur(&brute), pol_schur(&got));
    }

    #[test]
    fn rank_mismatch_is_reported() {
        let mut bad = FactorList::new(vec![1, 1]);
        bad.push(Factor::denom(1, 3, c("t")));
        assert_eq!(
            contract(&bad, Window::Weyl),
            Err(Error::RankMismatch {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn pol_schur_examples() {
        assert_eq!(
            pol_schur(&series(2, &[(&[1, 1], "1")])),
            SchurExpansion::schur(p("1,1"))
        );
        assert_eq!(
            pol_schur(&series(2, &[(&[2, 0], "-q"), (&[1, 1], "1")])),
            SchurExpansion::from_terms([(p("2"), c("-q")), (p("1,1"), c("1"))])
        );
        assert_eq!(
            pol_schur(&series(2, &[(&[0, 2], "1")])),
            SchurExpansion::from_terms([(p("1,1"), c("-1"))])
        );
        // nu_l < 0 is dropped
        assert!(pol_schur(&series(2, &[(&[2, -1], "1")])).is_zero());
    }

    #[test]
    fn hx_and_eprime_examples() {
        assert_eq!(
            hx_eval(&series(2, &[(&[2, 1], "1")])),
            SchurExpansion::from_terms([(p("3"), c("1")), (p("2,1"), c("1"))])
        );
        assert!(hx_eval(&series(2, &[(&[2, -1], "1")])).is_zero());
        assert_eq!(
            hx_eval(&series(2, &[(&[1, 1], "1"), (&[2, 0], "t")])),
            SchurExpansion::from_terms([(p("2"), c("1 + t")), (p("1,1"), c("1"))])
        );
        assert_eq!(
            eprimex_eval(&series(1, &[(&[1], "1")])),
            SchurExpansion::schur(p("1")).scale(&c("1 - t"))
        );
        assert!(eprimex_eval(&series(2, &[(&[3, -1], "1")])).is_zero());
    }

    #[test]
    fn eprime_of_one_one_by_hand() {
        // (e_1 - t h_1)^2 = (1 - t)^2 (s_2 + s_11)
        let want = SchurExpansion::from_terms([
            (p("2"), c("1 - 2*t + t^2")),
            (p("1,1"), c("1 - 2*t + t^2")),
        ]);
        assert_eq!(eprimex_eval(&series(2, &[(&[1, 1], "1")])), want);
    }

    #[test]
    fn json_round_trip() {
        let mut f = FactorList::new(vec![1, 0, 2]);
        f.push(Factor::numer(1, 3, c("q^2*t^-1")));
        f.push(Factor::denom(2, 3, c("t")));
        let s = f.to_json();
        assert_eq!(
            s,
            r#"{"l":3,"base":[1,0,2],"factors":[{"i":1,"j":3,"coeff":"q^2*t^-1","inverse":false},{"i":2,"j":3,"coeff":"t","inverse":true}]}"#
        );
        assert_eq!(FactorList::from_json(&s).unwrap(), f);
    }
}
