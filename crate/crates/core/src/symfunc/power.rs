//! Power-sum basis and the plethysms `f[X(1 - t)]`, `f[X(1 - 1/t)]`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::laurent::{FracQT, LaurentQT};
use crate::shapes::Partition;

use super::schur::SchurExpansion;

/// Character table of `S_d`: `chi[lam][rho]` with both indexed like `Partition::all(d)`.
#[derive(Debug)]
pub struct CharacterTable {
    pub partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    chi: Vec<Vec<i64>>,
    /// `d! / z_rho`, the size of the conjugacy class.
    class_size: Vec<BigInt>,
    factorial: BigInt,
}

impl CharacterTable {
    fn build(d: usize) -> Self {
        let partitions = Partition::all(d);
        let index = partitions
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let mut memo = HashMap::new();
        let chi = partitions
            .iter()
            .map(|lam| {
                partitions
                    .iter()
                    .map(|rho| mn_char(lam.parts(), rho.parts(), &mut memo))
                    .collect()
            })
            .collect();
        let factorial: BigInt = (1..=d).map(BigInt::from).product();
        let class_size = partitions
            .iter()
            .map(|rho| &factorial / z_rho(rho))
            .collect();
        CharacterTable {
            partitions,
            index,
            chi,
            class_size,
            factorial,
        }
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn chi(&self, lam: &Partition, rho: &Partition) -> i64 {
        self.chi[self.index[lam]][self.index[rho]]
    }
}

/// `z_rho = prod_i i^{m_i} m_i!`.
pub fn z_rho(rho: &Partition) -> BigInt {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &r in rho.parts() {
        *counts.entry(r).or_default() += 1;
    }
    counts.iter().fold(BigInt::from(1), |acc, (&i, &m)| {
        let fact: BigInt = (1..=m).map(BigInt::from).product();
        acc * BigInt::from(i).pow(m as u32) * fact
    })
}

/// Murnaghan-Nakayama on beta-numbers: strip a rim hook of size `rho[0]`.
fn mn_char(lam: &[usize], rho: &[usize], memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>) -> i64 {
    if rho.is_empty() {
        return i64::from(lam.is_empty());
    }
    let key = (lam.to_vec(), rho.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let k = rho[0];
    // pad with k beads so every removable hook has room
    let n = lam.len() + k;
    let beta: Vec<usize> = (0..n)
        .map(|i| lam.get(i).copied().unwrap_or(0) + (n - 1 - i))
        .collect();
    let mut total = 0i64;
    for i in 0..n {
        if beta[i] < k || beta.contains(&(beta[i] - k)) {
            continue;
        }
        let nb = beta[i] - k;
        // height = number of beta-numbers strictly between nb and beta[i]
        let height = beta.iter().filter(|&&b| b > nb && b < beta[i]).count();
        let mut next: Vec<usize> = beta.clone();
        next[i] = nb;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let m = next.len();
        let shape: Vec<usize> = (0..m)
            .map(|j| next[j] - (m - 1 - j))
            .filter(|&x| x > 0)
            .collect();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn_char(&shape, &rho[1..], memo);
    }
    memo.insert(key, total);
    total
}

pub fn character_table(d: usize) -> Arc<CharacterTable> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&d) {
        return t.clone();
    }
    let table = Arc::new(CharacterTable::build(d));
    cache.lock().unwrap().entry(d).or_insert(table).clone()
}

/// `sum_rho c_rho p_rho` with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PowerSumExpansion {
    terms: BTreeMap<Partition, FracQT>,
}

impl PowerSumExpansion {
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &FracQT)> {
        self.terms.iter()
    }

    pub fn coeff(&self, rho: &Partition) -> FracQT {
        self.terms.get(rho).cloned().unwrap_or_else(FracQT::zero)
    }

    fn add_term(&mut self, rho: Partition, c: FracQT) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&rho) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(rho, sum);
        }
    }

    /// Apply `p_k -> g(k) p_k` for a multiplicative family of Laurent scalars.
    pub fn scale_power_sums(&self, g: impl Fn(usize) -> LaurentQT) -> Self {
        let mut out = Self::default();
        for (rho, c) in &self.terms {
            let mut s = LaurentQT::one();
            for &k in rho.parts() {
                s = &s * &g(k);
            }
            out.add_term(rho.clone(), c * &FracQT::from_laurent(s));
        }
        out
    }
}

pub fn to_power_sum(f: &SchurExpansion) -> PowerSumExpansion {
    let mut out = PowerSumExpansion::default();
    for (lam, c) in f.terms() {
        let table = character_table(lam.size());
        for (j, rho) in table.partitions.iter().enumerate() {
            let chi = table.chi(lam, rho);
            if chi == 0 {
                continue;
            }
            let num = c.mul_monomial(&(&table.class_size[j] * chi), 0, 0);
            let den = LaurentQT::monomial(table.factorial.clone(), 0, 0);
            out.add_term(
                rho.clone(),
                FracQT::new(num, den).expect("nonzero factorial"),
            );
        }
    }
    out
}

/// Inverse of [`to_power_sum`]; fails if a Schur coefficient is not Laurent.
pub fn from_power_sum(p: &PowerSumExpansion) -> Result<SchurExpansion> {
    let mut by_degree: BTreeMap<usize, Vec<(&Partition, &FracQT)>> = BTreeMap::new();
    for (rho, c) in p.terms() {
        by_degree.entry(rho.size()).or_default().push((rho, c));
    }
    let mut out = SchurExpansion::zero();
    for (d, terms) in by_degree {
        let table = character_table(d);
        for lam in &table.partitions {
            let mut acc = FracQT::zero();
            for &(rho, c) in &terms {
                let chi = table.chi(lam, rho);
                if chi != 0 {
                    acc = &acc + &(c * &FracQT::from_laurent(LaurentQT::constant(chi)));
                }
            }
            let coeff = acc
                .to_laurent()
                .ok_or_else(|| Error::NonLaurentResult(acc.to_string()))?;
            out.add_term(lam.clone(), &coeff);
        }
    }
    Ok(out)
}

/// The alphabet multiplying `X` in a plethysm `f[X * A]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Alphabet {
    /// `A = 1 - t`
    OneMinusT,
    /// `A = 1 - 1/t`
    OneMinusTInv,
}

pub fn plethysm_x_times(f: &SchurExpansion, a: Alphabet) -> Result<SchurExpansion> {
    let p = to_power_sum(f).scale_power_sums(|k| {
        let e = match a {
            Alphabet::OneMinusT => k as i32,
            Alphabet::OneMinusTInv => -(k as i32),
        };
        &LaurentQT::one() - &LaurentQT::qt(0, e)
    });
    from_power_sum(&p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{Specialization, Var};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn c(s: &str) -> LaurentQT {
        s.parse().unwrap()
    }

    #[test]
    fn characters_of_s3_and_s4() {
        let t = character_table(3);
        assert_eq!(t.chi(&p("2,1"), &p("1,1,1")), 2);
        assert_eq!(t.chi(&p("2,1"), &p("3")), -1);
        assert_eq!(t.chi(&p("1,1,1"), &p("2,1")), -1);
        let t = character_table(4);
        assert_eq!(t.chi(&p("2,2"), &p("2,2")), 2);
        assert_eq!(t.chi(&p("3,1"), &p("4")), -1);
        assert_eq!(t.chi(&p("2,1,1"), &p("3,1")), 0);
        assert_eq!(z_rho(&p("2,1,1")), BigInt::from(4));
    }

    #[test]
    fn power_sum_round_trip() {
        for d in 1..=6 {
            for lam in Partition::all(d) {
                let f = SchurExpansion::from_terms([(lam, c("q - t^-1"))]);
                assert_eq!(from_power_sum(&to_power_sum(&f)).unwrap(), f);
            }
        }
    }

    #[test]
    fn plethysm_examples() {
        let s1 = SchurExpansion::schur(p("1"));
        assert_eq!(
            plethysm_x_times(&s1, Alphabet::OneMinusT).unwrap(),
            s1.scale(&c("1 - t"))
        );
        let s2 = SchurExpansion::schur(p("2"));
        // h_2[X - tX] = h_2 - t h_1 e_1 + t^2 e_2
        let want = SchurExpansion::from_terms([(p("2"), c("1 - t")), (p("1,1"), c("-t + t^2"))]);
        assert_eq!(plethysm_x_times(&s2, Alphabet::OneMinusT).unwrap(), want);
    }

    #[test]
    fn plethysm_then_t_zero_is_identity() {
        for lam in Partition::all(5) {
            let f = SchurExpansion::schur(lam);
            let g = plethysm_x_times(&f, Alphabet::OneMinusT).unwrap();
            assert_eq!(g.specialize(Specialization::zero(Var::T)).unwrap(), f);
        }
    }
}
