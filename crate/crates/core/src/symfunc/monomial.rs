//! Monomial-basis arithmetic and finite-variable symmetric polynomials.
//!
//! A symmetric polynomial in `N >= degree` variables is determined by its
//! coefficients on dominant monomials `x^lam`; [`MonomialExpansion`] stores
//! exactly those, which is all products and basis changes need.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::laurent::LaurentQT;
use crate::shapes::Partition;

use super::kostka::kostka_table;
use super::schur::SchurExpansion;

/// `sum_lam c_lam m_lam`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MonomialExpansion {
    terms: BTreeMap<Partition, LaurentQT>,
}

impl MonomialExpansion {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, lam: Partition, c: &LaurentQT) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(lam.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&lam);
        }
    }

    pub fn coeff(&self, lam: &Partition) -> Option<&LaurentQT> {
        self.terms.get(lam)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &LaurentQT)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn by_degree(&self) -> BTreeMap<usize, Vec<(&Partition, &LaurentQT)>> {
        let mut out: BTreeMap<usize, Vec<_>> = BTreeMap::new();
        for (p, c) in &self.terms {
            out.entry(p.size()).or_default().push((p, c));
        }
        out
    }

    /// Product of symmetric functions: the coefficient of `x^lam` in `f g`
    /// sums `f[alpha] g[lam - alpha]` over all splittings of `lam`.
    pub fn multiply(&self, other: &MonomialExpansion) -> MonomialExpansion {
        let mut out = MonomialExpansion::zero();
        for (da, fa) in self.by_degree() {
            let fmap: HashMap<&Partition, &LaurentQT> = fa.into_iter().collect();
            for (db, gb) in other.by_degree() {
                let gmap: HashMap<&Partition, &LaurentQT> = gb.into_iter().collect();
                for lam in Partition::all(da + db) {
                    let c = split_sum(&lam, da, &fmap, &gmap);
                    out.add_term(lam, &c);
                }
            }
        }
        out
    }

    pub fn to_schur(&self) -> SchurExpansion {
        let mut out = SchurExpansion::zero();
        for (d, terms) in self.by_degree() {
            let table = kostka_table(d);
            let n = table.partitions.len();
            let mut rem: Vec<LaurentQT> = vec![LaurentQT::zero(); n];
            for (p, c) in terms {
                rem[table.index_of(p).unwrap()] = c.clone();
            }
            // peel the lex-largest remaining monomial
            for i in 0..n {
                let c = std::mem::take(&mut rem[i]);
                if c.is_zero() {
                    continue;
                }
                for (j, &k) in table.row(i).iter().enumerate().skip(i + 1) {
                    if k != 0 {
                        rem[j].add_scaled(&c, &-BigInt::from(k), 0, 0);
                    }
                }
                out.add_term(table.partitions[i].clone(), &c);
            }
        }
        out
    }

    pub fn from_schur(f: &SchurExpansion) -> MonomialExpansion {
        let mut out = MonomialExpansion::zero();
        for (lam, c) in f.terms() {
            let table = kostka_table(lam.size());
            let i = table.index_of(lam).unwrap();
            for (j, &k) in table.row(i).iter().enumerate() {
                if k != 0 {
                    let mut v = LaurentQT::zero();
                    v.add_scaled(c, &k.into(), 0, 0);
                    out.add_term(table.partitions[j].clone(), &v);
                }
            }
        }
        out
    }
}

fn split_sum(
    lam: &Partition,
    da: usize,
    f: &HashMap<&Partition, &LaurentQT>,
    g: &HashMap<&Partition, &LaurentQT>,
) -> LaurentQT {
    let parts = lam.parts();
    let mut acc = LaurentQT::zero();
    let mut alpha = vec![0usize; parts.len()];
    fn rec(
        i: usize,
        left: usize,
        parts: &[usize],
        alpha: &mut Vec<usize>,
        f: &HashMap<&Partition, &LaurentQT>,
        g: &HashMap<&Partition, &LaurentQT>,
        acc: &mut LaurentQT,
    ) {
        if i == parts.len() {
            if left == 0 {
                let a = Partition::from_unsorted(alpha.iter().copied());
                let b =
                    Partition::from_unsorted(parts.iter().zip(alpha.iter()).map(|(p, x)| p - x));
                if let (Some(x), Some(y)) = (f.get(&a), g.get(&b)) {
                    *acc += &(*x * *y);
                }
            }
            return;
        }
        let rest: usize = parts[i + 1..].iter().sum();
        for v in 0..=parts[i].min(left) {
            if left - v > rest {
                continue;
            }
            alpha[i] = v;
            rec(i + 1, left - v, parts, alpha, f, g, acc);
        }
    }
    rec(0, da, parts, &mut alpha, f, g, &mut acc);
    acc
}

/// A polynomial in `N` variables: exponent vector to coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoly {
    pub nvars: usize,
    pub terms: BTreeMap<Vec<usize>, LaurentQT>,
}

impl FinitePoly {
    pub fn new(nvars: usize) -> Self {
        FinitePoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, exps: Vec<usize>, c: &LaurentQT) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn multiply(&self, other: &FinitePoly) -> FinitePoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = FinitePoly::new(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e = a.iter().zip(b).map(|(u, v)| u + v).collect();
                out.add_term(e, &(x * y));
            }
        }
        out
    }

    /// Checks permutation invariance and returns the dominant coefficients.
    pub fn to_monomial_expansion(&self) -> Result<MonomialExpansion> {
        let mut orbits: BTreeMap<Vec<usize>, (usize, &LaurentQT)> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut key = e.clone();
            key.sort_unstable_by(|a, b| b.cmp(a));
            match orbits.get_mut(&key) {
                None => {
                    orbits.insert(key, (1, c));
                }
                Some((n, c0)) => {
                    if *c0 != c {
                        return Err(Error::NotSymmetric(format!("{e:?}")));
                    }
                    *n += 1;
                }
            }
        }
        let mut out = MonomialExpansion::zero();
        for (key, (n, c)) in orbits {
            if n != orbit_size(&key) {
                return Err(Error::NotSymmetric(format!("{key:?}")));
            }
            out.add_term(Partition::from_unsorted(key), c);
        }
        Ok(out)
    }

    /// Expands `s_lam(x_1, ..., x_N)` by enumerating semistandard tableaux.
    pub fn schur(lam: &Partition, nvars: usize) -> FinitePoly {
        let mut out = FinitePoly::new(nvars);
        let cells: Vec<(usize, usize)> = lam
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
            .collect();
        let mut fill = vec![vec![0usize; lam.part(0)]; lam.len()];
        fn rec(
            k: usize,
            cells: &[(usize, usize)],
            fill: &mut Vec<Vec<usize>>,
            nvars: usize,
            out: &mut FinitePoly,
        ) {
            if k == cells.len() {
                let mut e = vec![0usize; nvars];
                for &(r, c) in cells {
                    e[fill[r][c] - 1] += 1;
                }
                out.add_term(e, &LaurentQT::one());
                return;
            }
            let (r, c) = cells[k];
            let lo_row = if c > 0 { fill[r][c - 1] } else { 1 };
            let lo_col = if r > 0 { fill[r - 1][c] + 1 } else { 1 };
            for v in lo_row.max(lo_col)..=nvars {
                fill[r][c] = v;
                rec(k + 1, cells, fill, nvars, out);
            }
        }
        rec(0, &cells, &mut fill, nvars, &mut out);
        out
    }
}

fn orbit_size(key: &[usize]) -> usize {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &k in key {
        *counts.entry(k).or_default() += 1;
    }
    let fact = |n: usize| (1..=n).product::<usize>();
    counts
        .values()
        .fold(fact(key.len()), |acc, &m| acc / fact(m))
}

/// Schur expansion of a finite-variable symmetric polynomial.
pub fn monomials_to_schur(f: &FinitePoly) -> Result<SchurExpansion> {
    let m = f.to_monomial_expansion()?;
    if let Some(d) = m.terms().map(|(p, _)| p.size()).max() {
        if d > f.nvars {
            return Err(Error::TooFewVariables {
                needed: d,
                given: f.nvars,
            });
        }
    }
    Ok(m.to_schur())
}

/// Product of symmetric functions in the Schur basis.
pub fn schur_multiply(f: &SchurExpansion, g: &SchurExpansion) -> SchurExpansion {
    if f.is_zero() || g.is_zero() {
        return SchurExpansion::zero();
    }
    MonomialExpansion::from_schur(f)
        .multiply(&MonomialExpansion::from_schur(g))
        .to_schur()
}

/// `h_gamma = prod h_{gamma_i}` in the Schur basis; zero if any entry is negative.
pub fn h_product(gamma: &[i32]) -> SchurExpansion {
    if gamma.iter().any(|&g| g < 0) {
        return SchurExpansion::zero();
    }
    let mu = Partition::from_unsorted(gamma.iter().map(|&g| g as usize));
    let table = kostka_table(mu.size());
    let j = table.index_of(&mu).unwrap();
    SchurExpansion::from_terms(
        table
            .partitions
            .iter()
            .enumerate()
            .filter(|(i, _)| table.row(*i)[j] != 0)
            .map(|(i, lam)| (lam.clone(), LaurentQT::constant(table.row(i)[j] as i64))),
    )
}

/// `e_gamma = omega h_gamma`.
pub fn e_product(gamma: &[i32]) -> SchurExpansion {
    h_product(gamma).omega()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn poly(nvars: usize, terms: &[(&[usize], i64)]) -> FinitePoly {
        let mut f = FinitePoly::new(nvars);
        for (e, c) in terms {
            f.add_term(e.to_vec(), &LaurentQT::constant(*c));
        }
        f
    }

    #[test]
    fn monomials_to_schur_examples() {
        assert_eq!(
            monomials_to_schur(&poly(2, &[(&[1, 1], 1)])).unwrap(),
            SchurExpansion::schur(p("1,1"))
        );
        let s2 = poly(2, &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1)]);
        assert_eq!(
            monomials_to_schur(&s2).unwrap(),
            SchurExpansion::schur(p("2"))
        );
        assert_eq!(
            monomials_to_schur(&FinitePoly::schur(&p("2"), 2)).unwrap(),
            h_product(&[2])
        );
        let bad = poly(2, &[(&[2, 0], 1)]);
        assert!(matches!(
            monomials_to_schur(&bad),
            Err(Error::NotSymmetric(_))
        ));
        let skew = poly(2, &[(&[2, 0], 1), (&[0, 2], 2)]);
        assert!(matches!(
            monomials_to_schur(&skew),
            Err(Error::NotSymmetric(_))
        ));
        let too_few = poly(1, &[(&[2], 1)]);
        assert!(matches!(
            monomials_to_schur(&too_few),
            Err(Error::TooFewVariables { .. })
        ));
    }

    #[test]
    fn schur_multiply_examples() {
        let s1 = SchurExpansion::schur(p("1"));
        assert_eq!(
            schur_multiply(&s1, &s1),
            SchurExpansion::from_terms([(p("2"), LaurentQT::one()), (p("1,1"), LaurentQT::one())])
        );
        let one = SchurExpansion::scalar(LaurentQT::one());
        assert_eq!(schur_multiply(&one, &s1), s1);
    }

    #[test]
    fn schur_multiply_matches_brute_force_in_four_variables() {
        let (a, b) = (p("2"), p("1,1"));
        let brute = FinitePoly::schur(&a, 4).multiply(&FinitePoly::schur(&b, 4));
        let want = monomials_to_schur(&brute).unwrap();
        assert_eq!(
            want,
            SchurExpansion::from_terms([
                (p("3,1"), LaurentQT::one()),
                (p("2,1,1"), LaurentQT::one())
            ])
        );
        assert_eq!(
            schur_multiply(&SchurExpansion::schur(a), &SchurExpansion::schur(b)),
            want
        );
    }

    #[test]
    fn h_and_e_products() {
        let h21 = h_product(&[2, 1]);
        assert_eq!(
            h21,
            SchurExpansion::from_terms([(p("3"), LaurentQT::one()), (p("2,1"), LaurentQT::one())])
        );
        assert!(h_product(&[1, -1]).is_zero());
        assert_eq!(h_product(&[0, 0]), SchurExpansion::scalar(LaurentQT::one()));
        assert_eq!(e_product(&[2]), SchurExpansion::schur(p("1,1")));
    }
}
