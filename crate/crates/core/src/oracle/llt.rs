//! LLT polynomials of ribbon tuples via attacking inversions.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::laurent::LaurentQT;
use crate::shapes::{ColumnDiagram, Composition, Partition};
use crate::symfunc::{monomials_to_schur, FinitePoly, MonomialExpansion, SchurExpansion};

/// One box: component (1-based), column `x`, row `y`. Content is `x - y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TupleBox {
    pub comp: usize,
    pub x: i32,
    pub y: i32,
}

impl TupleBox {
    pub fn content(&self) -> i32 {
        self.x - self.y
    }
}

/// A tuple of skew shapes, stored as boxes in a filling order where west and
/// south neighbours always come first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonTuple {
    boxes: Vec<TupleBox>,
    /// `(a, b, strict)`: `T(a) <= T(b)`, or `T(a) < T(b)` when strict.
    constraints: Vec<(usize, usize, bool)>,
}

impl RibbonTuple {
    /// Builds a tuple from the cells `(x, y)` of each component.
    pub fn from_components(components: &[Vec<(i32, i32)>]) -> Self {
        let mut boxes: Vec<TupleBox> = components
            .iter()
            .enumerate()
            .flat_map(|(k, cells)| {
                cells
                    .iter()
                    .map(move |&(x, y)| TupleBox { comp: k + 1, x, y })
            })
            .collect();
        boxes.sort_by_key(|b| (b.comp, b.x + b.y, b.x));
        let mut constraints = Vec::new();
        for (bi, b) in boxes.iter().enumerate() {
            for (ai, a) in boxes.iter().enumerate() {
                if a.comp != b.comp {
                    continue;
                }
                if a.y == b.y && a.x + 1 == b.x {
                    constraints.push((ai, bi, false));
                }
                if a.x == b.x && a.y + 1 == b.y {
                    constraints.push((ai, bi, true));
                }
            }
        }
        RibbonTuple { boxes, constraints }
    }

    pub fn boxes(&self) -> &[TupleBox] {
        &self.boxes
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    /// Cells of component `k` (1-based), in filling order.
    pub fn component(&self, k: usize) -> Vec<(i32, i32)> {
        self.boxes
            .iter()
            .filter(|b| b.comp == k)
            .map(|b| (b.x, b.y))
            .collect()
    }

    /// Ordered pairs `(a, b)` with `0 < c~(b) - c~(a) < 1` for the adjusted
    /// content `c~ = c + comp * eps`.
    pub fn attacking_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (ai, a) in self.boxes.iter().enumerate() {
            for (bi, b) in self.boxes.iter().enumerate() {
                let same = b.content() == a.content() && a.comp < b.comp;
                let next = b.content() == a.content() + 1 && b.comp < a.comp;
                if same || next {
                    out.push((ai, bi));
                }
            }
        }
        out
    }

    fn inv(&self, fill: &[usize], pairs: &[(usize, usize)]) -> i32 {
        pairs.iter().filter(|&&(a, b)| fill[a] > fill[b]).count() as i32
    }

    /// Admissible values for box `k` given the already filled boxes.
    fn range(&self, k: usize, fill: &[usize], max: usize) -> (usize, usize) {
        let mut lo = 1;
        for &(a, b, strict) in &self.constraints {
            if b == k && a < k {
                lo = lo.max(fill[a] + usize::from(strict));
            }
        }
        (lo, max)
    }
}

/// The tuple of ribbons attached to `beta` and a set `s` of vertical dominoes
/// (pairs of reading-order indices `(upper, lower)`).
pub fn ribbons_from_subset(beta: &Composition, s: &[(usize, usize)]) -> Result<RibbonTuple> {
    let diagram = ColumnDiagram::new(beta);
    let v = diagram.vertical_dominoes();
    for &(a, b) in s {
        if !v.contains(&(a, b)) {
            return Err(Error::NotASubsetOfV(a, b));
        }
    }
    let mut components = Vec::with_capacity(beta.len());
    for (c, &h) in beta.parts().iter().enumerate() {
        let col = c + 1;
        // start at content -1 and walk down the contents
        let (mut x, mut y) = (0i32, 1i32);
        let mut cells = vec![(x, y)];
        for j in 2..=h {
            let upper = diagram.index_of((col, j)).unwrap();
            let lower = diagram.index_of((col, j - 1)).unwrap();
            if s.contains(&(upper, lower)) {
                y += 1;
            } else {
                x -= 1;
            }
            cells.push((x, y));
        }
        components.push(cells);
    }
    Ok(RibbonTuple::from_components(&components))
}

/// Number of attacking pairs of `nu(S)`; independent of `S`.
pub fn attacking_count(beta: &Composition) -> usize {
    ribbons_from_subset(beta, &[])
        .map(|r| r.attacking_pairs().len())
        .unwrap_or(0)
}

/// `G_nu(x_1..x_N; q)` by enumerating every semistandard filling.
pub fn llt_polynomial(nu: &RibbonTuple, nvars: usize) -> Result<SchurExpansion> {
    if nvars < nu.len() {
        return Err(Error::TooFewVariables {
            needed: nu.len(),
            given: nvars,
        });
    }
    monomials_to_schur(&llt_finite(nu, nvars))
}

/// All fillings with entries `<= nvars`, as a polynomial in `nvars` variables.
pub fn llt_finite(nu: &RibbonTuple, nvars: usize) -> FinitePoly {
    let pairs = nu.attacking_pairs();
    let mut out = FinitePoly::new(nvars);
    let mut fill = vec![0usize; nu.len()];
    fn rec(
        k: usize,
        nu: &RibbonTuple,
        fill: &mut Vec<usize>,
        n: usize,
        pairs: &[(usize, usize)],
        out: &mut FinitePoly,
    ) {
        if k == nu.len() {
            let mut e = vec![0usize; n];
            for &v in fill.iter() {
                e[v - 1] += 1;
            }
            out.add_term(e, &LaurentQT::qt(nu.inv(fill, pairs), 0));
            return;
        }
        let (lo, hi) = nu.range(k, fill, n);
        for v in lo..=hi {
            fill[k] = v;
            rec(k + 1, nu, fill, n, pairs, out);
        }
    }
    rec(0, nu, &mut fill, nvars, &pairs, &mut out);
    out
}

/// `G_nu` in the Schur basis, enumerating only fillings with partition content.
pub fn llt_schur(nu: &RibbonTuple) -> SchurExpansion {
    let pairs = nu.attacking_pairs();
    let n = nu.len();
    let mut m = MonomialExpansion::zero();
    for lam in Partition::all(n) {
        let mut remaining: Vec<usize> = lam.parts().to_vec();
        let mut fill = vec![0usize; n];
        let mut counts: BTreeMap<i32, i64> = BTreeMap::new();
        fn rec(
            k: usize,
            nu: &RibbonTuple,
            fill: &mut Vec<usize>,
            remaining: &mut Vec<usize>,
            pairs: &[(usize, usize)],
            counts: &mut BTreeMap<i32, i64>,
        ) {
            if k == nu.len() {
                *counts.entry(nu.inv(fill, pairs)).or_default() += 1;
                return;
            }
            let (lo, _) = nu.range(k, fill, remaining.len());
            for v in lo..=remaining.len() {
                if remaining[v - 1] == 0 {
                    continue;
                }
                remaining[v - 1] -= 1;
                fill[k] = v;
                rec(k + 1, nu, fill, remaining, pairs, counts);
                remaining[v - 1] += 1;
            }
        }
        rec(0, nu, &mut fill, &mut remaining, &pairs, &mut counts);
        let coeff = LaurentQT::from_terms(counts.into_iter().map(|(e, c)| ((e, 0), c.into())));
        m.add_term(lam, &coeff);
    }
    m.to_schur()
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
    fn ribbons_for_2_3() {
        let beta = comp("2,3");
        let v = ColumnDiagram::new(&beta).vertical_dominoes();
        let cols = ribbons_from_subset(&beta, &v).unwrap();
        assert_eq!(cols.component(1), vec![(0, 1), (0, 2)]);
        assert_eq!(cols.component(2), vec![(0, 1), (0, 2), (0, 3)]);
        let rows = ribbons_from_subset(&beta, &[]).unwrap();
        assert_eq!(rows.component(2), vec![(-2, 1), (-1, 1), (0, 1)]);
        assert_eq!(
            ribbons_from_subset(&beta, &[(1, 2)]),
            Err(Error::NotASubsetOfV(1, 2))
        );
        assert_eq!(ribbons_from_subset(&comp("1"), &[]).unwrap().len(), 1);
    }

    #[test]
    fn small_llt() {
        let single = RibbonTuple::from_components(&[vec![(0, 0)]]);
        assert_eq!(
            llt_polynomial(&single, 1).unwrap(),
            SchurExpansion::schur(p("1"))
        );
        let row = RibbonTuple::from_components(&[vec![(0, 0), (1, 0)]]);
        assert_eq!(
            llt_polynomial(&row, 2).unwrap(),
            SchurExpansion::schur(p("2"))
        );
        let two = ribbons_from_subset(&comp("1,1"), &[]).unwrap();
        let want = SchurExpansion::from_terms([(p("2"), c("1")), (p("1,1"), c("q"))]);
        assert_eq!(llt_polynomial(&two, 2).unwrap(), want);
        assert_eq!(llt_schur(&two), want);
        assert!(matches!(
            llt_polynomial(&two, 1),
            Err(Error::TooFewVariables { .. })
        ));
    }

    #[test]
    fn dominant_enumeration_matches_full_enumeration() {
        for beta in ["2,1", "1,2", "3,1", "2,2", "1,1,2"] {
            let beta = comp(beta);
            let v = ColumnDiagram::new(&beta).vertical_dominoes();
            for mask in 0..(1usize << v.len()) {
                let s: Vec<_> = v
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, d)| *d)
                    .collect();
                let nu = ribbons_from_subset(&beta, &s).unwrap();
                let full = llt_polynomial(&nu, nu.len()).unwrap();
                assert_eq!(llt_schur(&nu), full, "{beta} {s:?}");
                assert_eq!(llt_polynomial(&nu, nu.len() + 1).unwrap(), full);
            }
        }
    }
}
