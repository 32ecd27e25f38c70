//! Modified Macdonald polynomials as positive sums of LLT polynomials.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::error::Result;
use crate::laurent::LaurentQT;
use crate::macdonald::resolve_beta;
use crate::shapes::{ColumnDiagram, Composition, Partition};
use crate::symfunc::SchurExpansion;

use super::llt::{llt_schur, ribbons_from_subset};

/// Subsets of the vertical dominoes of `beta`, enumerated by bitmask.
pub fn domino_subsets(beta: &Composition) -> Vec<Vec<(usize, usize)>> {
    let v = ColumnDiagram::new(beta).vertical_dominoes();
    (0..1usize << v.len())
        .map(|mask| {
            v.iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, d)| *d)
                .collect()
        })
        .collect()
}

/// `prod_{(b_i, b_j) in S} q^{-arm(b_i)} t^{leg(b_i) + 1}`.
pub fn hhl_weight(beta: &Composition, s: &[(usize, usize)]) -> Result<LaurentQT> {
    let diagram = ColumnDiagram::new(beta);
    let (mut a, mut b) = (0i32, 0i32);
    for &(upper, _) in s {
        let (arm, leg) = diagram.arm_leg(diagram.cell(upper))?;
        a -= arm as i32;
        b += leg as i32 + 1;
    }
    Ok(LaurentQT::qt(a, b))
}

pub fn hhl_macdonald(mu: &Partition, beta: Option<&Composition>) -> Result<SchurExpansion> {
    let beta = resolve_beta(mu, beta)?;
    let mut out = SchurExpansion::zero();
    for s in domino_subsets(&beta) {
        let g = llt_schur(&ribbons_from_subset(&beta, &s)?);
        out.add_scaled(&g, &hhl_weight(&beta, &s)?);
    }
    Ok(out)
}

/// `hhl_macdonald(mu, mu*)`, memoized.
pub fn hhl_cached(mu: &Partition) -> SchurExpansion {
    static CACHE: OnceLock<Mutex<HashMap<Partition, SchurExpansion>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(mu) {
        return v.clone();
    }
    let v = hhl_macdonald(mu, None).expect("transpose is a valid rearrangement");
    cache.lock().unwrap().insert(mu.clone(), v.clone());
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn c(s: &str) -> LaurentQT {
        s.parse().unwrap()
    }

    #[test]
    fn weights_for_2_3() {
        let beta = comp("2,3");
        let (v1, v2, v3) = ((1, 3), (2, 4), (3, 5));
        let cases: [(&[(usize, usize)], &str); 8] = [
            (&[v1, v2, v3], "q^-2*t^4"),
            (&[v2, v3], "q^-1*t^3"),
            (&[v1, v2], "q^-1*t^2"),
            (&[v1, v3], "q^-2*t^3"),
            (&[v2], "t"),
            (&[v3], "q^-1*t^2"),
            (&[v1], "q^-1*t"),
            (&[], "1"),
        ];
        for (s, want) in cases {
            assert_eq!(hhl_weight(&beta, s).unwrap(), c(want), "{s:?}");
        }
    }

    #[test]
    fn small_hhl() {
        assert_eq!(
            hhl_macdonald(&p("1"), None).unwrap(),
            SchurExpansion::schur(p("1"))
        );
        assert_eq!(
            hhl_macdonald(&p("2"), None).unwrap(),
            SchurExpansion::from_terms([(p("2"), c("1")), (p("1,1"), c("q"))])
        );
        assert_eq!(
            hhl_macdonald(&p("1,1"), None).unwrap(),
            SchurExpansion::from_terms([(p("2"), c("1")), (p("1,1"), c("t"))])
        );
    }

    #[test]
    fn beta_independence() {
        let mu = p("2,2,1");
        let base = hhl_macdonald(&mu, None).unwrap();
        for beta in Composition::rearrangements(mu.transpose().parts()) {
            assert_eq!(hhl_macdonald(&mu, Some(&beta)).unwrap(), base, "{beta}");
        }
    }
}
