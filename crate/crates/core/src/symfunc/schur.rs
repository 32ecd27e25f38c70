use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{LaurentQT, Specialization};
use crate::shapes::Partition;

/// A symmetric function written in the Schur basis with `LaurentQT`
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, LaurentQT>,
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    partition: Vec<usize>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct JsonExpansion {
    basis: String,
    terms: Vec<JsonTerm>,
}

impl SchurExpansion {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The single Schur function `s_lam`.
    pub fn schur(lam: Partition) -> Self {
        Self::from_terms([(lam, LaurentQT::one())])
    }

    /// The constant symmetric function `c`.
    pub fn scalar(c: LaurentQT) -> Self {
        Self::from_terms([(Partition::empty(), c)])
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, LaurentQT)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (p, c) in iter {
            out.add_term(p, &c);
        }
        out
    }

    pub fn add_term(&mut self, lam: Partition, c: &LaurentQT) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lam);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &SchurExpansion, c: &LaurentQT) {
        for (lam, k) in &other.terms {
            self.add_term(lam.clone(), &(k * c));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of the partitions.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &LaurentQT)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lam: &Partition) -> LaurentQT {
        self.terms.get(lam).cloned().unwrap_or_default()
    }

    /// Common degree of all terms; `None` for zero or mixed degrees.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|p| p.size());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn homogeneous_degree(&self) -> Result<usize> {
        if self.is_zero() {
            return Ok(0);
        }
        self.degree().ok_or(Error::NotHomogeneous)
    }

    pub fn scale(&self, c: &LaurentQT) -> Self {
        Self::from_terms(self.terms.iter().map(|(p, k)| (p.clone(), k * c)))
    }

    pub fn map_coeffs(&self, f: impl Fn(&LaurentQT) -> LaurentQT) -> Self {
        Self::from_terms(self.terms.iter().map(|(p, k)| (p.clone(), f(k))))
    }

    pub fn try_map_coeffs(&self, f: impl Fn(&LaurentQT) -> Result<LaurentQT>) -> Result<Self> {
        let mut out = Self::zero();
        for (p, k) in &self.terms {
            out.add_term(p.clone(), &f(k)?);
        }
        Ok(out)
    }

    pub fn specialize(&self, spec: Specialization) -> Result<Self> {
        self.try_map_coeffs(|c| c.specialize(spec))
    }

    /// `omega s_lam = s_{lam*}`.
    pub fn omega(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(p, k)| (p.transpose(), k.clone())))
    }

    /// True when every coefficient lies in `N[q, t]`.
    pub fn is_schur_positive(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.is_polynomial() && c.is_nonnegative())
    }

    /// Canonical JSON: terms sorted by partition in decreasing lexicographic order.
    pub fn to_json(&self) -> String {
        let doc = JsonExpansion {
            basis: "schur".into(),
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(p, c)| JsonTerm {
                    partition: p.parts().to_vec(),
                    coeff: c.to_string(),
                })
                .collect(),
        };
        serde_json::to_string(&doc).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: JsonExpansion =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        if doc.basis != "schur" {
            return Err(Error::Parse(format!("unsupported basis {:?}", doc.basis)));
        }
        let mut out = Self::zero();
        for t in doc.terms {
            out.add_term(Partition::new(t.partition)?, &t.coeff.parse()?);
        }
        Ok(out)
    }
}

impl std::ops::Add for &SchurExpansion {
    type Output = SchurExpansion;
    fn add(self, rhs: &SchurExpansion) -> SchurExpansion {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentQT::one());
        out
    }
}

impl std::ops::Sub for &SchurExpansion {
    type Output = SchurExpansion;
    fn sub(self, rhs: &SchurExpansion) -> SchurExpansion {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentQT::constant(-1));
        out
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(p, c)| {
                let idx = if p.is_empty() {
                    "0".to_string()
                } else {
                    p.to_string()
                };
                if c.is_one() {
                    format!("s[{idx}]")
                } else if c.len() == 1 {
                    format!("{c}*s[{idx}]")
                } else {
                    format!("({c})*s[{idx}]")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn c(s: &str) -> LaurentQT {
        s.parse().unwrap()
    }

    #[test]
    fn omega_examples() {
        let f = SchurExpansion::schur(p("2,1"));
        assert_eq!(f.omega(), f);
        let g = SchurExpansion::from_terms([(p("4"), c("q")), (p("2,2"), c("1"))]);
        let want = SchurExpansion::from_terms([(p("1,1,1,1"), c("q")), (p("2,2"), c("1"))]);
        assert_eq!(g.omega(), want);
        assert_eq!(g.omega().omega(), g);
    }

    #[test]
    fn json_is_sorted_and_round_trips() {
        let f = SchurExpansion::schur(p("1"));
        assert_eq!(
            f.to_json(),
            r#"{"basis":"schur","terms":[{"partition":[1],"coeff":"1"}]}"#
        );
        let g = SchurExpansion::from_terms([(p("1,1"), c("t")), (p("2"), c("1 - q"))]);
        assert_eq!(
            g.to_json(),
            r#"{"basis":"schur","terms":[{"partition":[2],"coeff":"1 - q"},{"partition":[1,1],"coeff":"t"}]}"#
        );
        assert_eq!(SchurExpansion::from_json(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn cancellation_drops_terms() {
        let mut f = SchurExpansion::schur(p("3"));
        f.add_term(p("3"), &c("-1"));
        assert!(f.is_zero());
        assert_eq!(f.homogeneous_degree().unwrap(), 0);
        let mixed = SchurExpansion::from_terms([(p("1"), c("1")), (p("2"), c("1"))]);
        assert_eq!(mixed.degree(), None);
    }
}
