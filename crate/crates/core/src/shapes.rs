//! Partitions, compositions and column diagrams.
//!
//! Boxes are `(column, row)` pairs, 1-based, French convention. Every
//! diagram numbers its boxes `1..=l` in reading order (rows top to bottom,
//! each row left to right), and every root set stores pairs of those indices.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad part {p:?} in {s:?}")))
        })
        .collect()
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    f.write_str(&s.join(","))
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidShape(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts the nonzero entries into a partition.
    pub fn from_unsorted<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let w = self.part(0);
        Partition(
            (1..=w)
                .map(|c| self.0.iter().filter(|&&p| p >= c).count())
                .collect(),
        )
    }

    /// `n(mu) = sum (i-1) mu_i`.
    pub fn n_stat(&self) -> usize {
        self.0.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    /// All partitions of `n` in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        Self::with_max_len(n, usize::MAX)
    }

    /// Partitions of `n` with at most `max_len` parts, decreasing lex order.
    pub fn with_max_len(n: usize, max_len: usize) -> Vec<Partition> {
        fn rec(
            n: usize,
            max_part: usize,
            max_len: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if cur.len() == max_len {
                return;
            }
            for p in (1..=max_part.min(n)).rev() {
                cur.push(p);
                rec(n - p, p, max_len, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, max_len, &mut Vec::new(), &mut out);
        out
    }

    /// `self >= other` in dominance order (equal sizes assumed).
    pub fn dominates(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.clone())
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

/// A finite sequence of positive integers (column heights of a diagram).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidShape(format!(
                "zero entry in composition {parts:?}"
            )));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The partition with the same multiset of entries.
    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(self.0.iter().copied())
    }

    pub fn scaled(&self, m: usize) -> Composition {
        Composition(self.0.iter().map(|p| p * m).collect())
    }

    /// Checks that `self` rearranges `mu*`.
    pub fn check_rearranges_transpose_of(&self, mu: &Partition) -> Result<()> {
        if self.sorted() != mu.transpose() {
            return Err(Error::BadRearrangement {
                mu: mu.to_string(),
                beta: self.to_string(),
            });
        }
        Ok(())
    }

    /// All distinct rearrangements of `parts`, in lexicographic order.
    pub fn rearrangements(parts: &[usize]) -> Vec<Composition> {
        let mut v = parts.to_vec();
        v.sort_unstable();
        let mut out = vec![Composition(v.clone())];
        // next_permutation
        while let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) {
            let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
            v.swap(i - 1, j);
            v[i..].reverse();
            out.push(Composition(v.clone()));
        }
        out
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Composition::new(v)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Vec<usize> {
        c.0
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_parts(s)?)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

/// A box `(column, row)`, both 1-based.
pub type Cell = (usize, usize);

/// The column diagram of a composition with its boxes in reading order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnDiagram {
    beta: Composition,
    boxes: Vec<Cell>,
}

/// Root subsets attached to a column diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    pub l: usize,
    /// `R_{beta*}`: pairs `(i, j)` with `south(b_i) <= b_j` in reading order.
    pub r_set: BTreeSet<(usize, usize)>,
    /// The strict version of `r_set`.
    pub r_hat: BTreeSet<(usize, usize)>,
    /// Vertical dominoes `(upper, lower)`, ordered by the upper box.
    pub v: Vec<(usize, usize)>,
}

impl ColumnDiagram {
    pub fn new(beta: &Composition) -> Self {
        let height = beta.parts().iter().copied().max().unwrap_or(0);
        let mut boxes = Vec::with_capacity(beta.size());
        for row in (1..=height).rev() {
            for (c, &h) in beta.parts().iter().enumerate() {
                if h >= row {
                    boxes.push((c + 1, row));
                }
            }
        }
        ColumnDiagram {
            beta: beta.clone(),
            boxes,
        }
    }

    pub fn beta(&self) -> &Composition {
        &self.beta
    }

    /// Number of boxes.
    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    /// Boxes in reading order; `boxes()[k]` has index `k + 1`.
    pub fn boxes(&self) -> &[Cell] {
        &self.boxes
    }

    pub fn contains(&self, (c, r): Cell) -> bool {
        c >= 1 && r >= 1 && c <= self.beta.len() && r <= self.beta.parts()[c - 1]
    }

    /// 1-based reading-order index of a box.
    pub fn index_of(&self, cell: Cell) -> Option<usize> {
        if !self.contains(cell) {
            return None;
        }
        // rows above `cell.1` come first
        let (c, r) = cell;
        let above: usize = self.beta.parts().iter().map(|&h| h.saturating_sub(r)).sum();
        let left = self.beta.parts()[..c - 1]
            .iter()
            .filter(|&&h| h >= r)
            .count();
        Some(above + left + 1)
    }

    pub fn cell(&self, index: usize) -> Cell {
        self.boxes[index - 1]
    }

    /// `(arm, leg)` of a box, with the column-diagram arm statistic.
    pub fn arm_leg(&self, cell: Cell) -> Result<(usize, usize)> {
        let (c, r) = cell;
        if !self.contains(cell) {
            return Err(Error::BoxOutsideDiagram { column: c, row: r });
        }
        let h = self.beta.parts();
        let own = h[c - 1];
        let leg = own - r;
        let west = h[..c - 1]
            .iter()
            .filter(|&&b| r - 1 <= b && b < own)
            .count();
        let east = h[c..].iter().filter(|&&b| r <= b && b <= own).count();
        Ok((west + east, leg))
    }

    /// Index of the box directly south of box `index`, if any.
    pub fn south(&self, index: usize) -> Option<usize> {
        let (c, r) = self.cell(index);
        if r > 1 {
            self.index_of((c, r - 1))
        } else {
            None
        }
    }

    /// Vertical dominoes `(upper, lower)` ordered by the upper index.
    pub fn vertical_dominoes(&self) -> Vec<(usize, usize)> {
        (1..=self.len())
            .filter_map(|i| self.south(i).map(|s| (i, s)))
            .collect()
    }

    pub fn root_datum(&self) -> RootDatum {
        let l = self.len();
        let mut r_set = BTreeSet::new();
        let mut r_hat = BTreeSet::new();
        for i in 1..=l {
            if let Some(s) = self.south(i) {
                for j in s..=l {
                    r_set.insert((i, j));
                    if j > s {
                        r_hat.insert((i, j));
                    }
                }
            }
        }
        RootDatum {
            l,
            r_set,
            r_hat,
            v: self.vertical_dominoes(),
        }
    }
}

/// Root subsets for the composition `beta` (the `R_{beta*}` family).
pub fn root_sets(beta: &Composition) -> RootDatum {
    ColumnDiagram::new(beta).root_datum()
}

/// Pairs `(i, j)`, `i < j`, lying in different blocks when `1..=|mu|` is cut
/// into consecutive intervals of lengths `mu_last, ..., mu_1`.
pub fn bmu_roots(mu: &Partition) -> BTreeSet<(usize, usize)> {
    bmu_roots_with_order(mu.parts().iter().rev().copied())
}

/// Same as [`bmu_roots`] with an explicit sequence of block lengths.
pub fn bmu_roots_with_order<I: IntoIterator<Item = usize>>(blocks: I) -> BTreeSet<(usize, usize)> {
    let mut block_of = Vec::new();
    for (b, len) in blocks.into_iter().enumerate() {
        block_of.extend(std::iter::repeat_n(b, len));
    }
    let l = block_of.len();
    let mut out = BTreeSet::new();
    for i in 0..l {
        for j in i + 1..l {
            if block_of[i] != block_of[j] {
                out.insert((i + 1, j + 1));
            }
        }
    }
    out
}

/// Vertical dilation of a column diagram by a factor `m`.
#[derive(Clone, Debug)]
pub struct Dilation {
    pub m: usize,
    pub base: ColumnDiagram,
    pub dilated: ColumnDiagram,
    /// `tau[r - 1]` is the index in `base` of the box collapsing from box `r`.
    pub tau: Vec<usize>,
    /// Image of each vertical domino of `base` (same order) in `dilated`.
    pub str_v: Vec<(usize, usize)>,
}

pub fn dilate(beta: &Composition, m: usize) -> Dilation {
    assert!(m >= 1, "dilation factor must be positive");
    let base = ColumnDiagram::new(beta);
    let dilated = ColumnDiagram::new(&beta.scaled(m));
    let tau = dilated
        .boxes()
        .iter()
        .map(|&(c, r)| {
            base.index_of((c, (r - 1) / m + 1))
                .expect("collapsed box exists")
        })
        .collect();
    let str_v = base
        .vertical_dominoes()
        .into_iter()
        .map(|(upper, lower)| {
            let (c, r) = base.cell(upper);
            debug_assert_eq!(base.cell(lower), (c, r - 1));
            let top_of_lower = (c, m * (r - 1));
            let bottom_of_upper = (c, m * (r - 1) + 1);
            (
                dilated.index_of(bottom_of_upper).unwrap(),
                dilated.index_of(top_of_lower).unwrap(),
            )
        })
        .collect();
    Dilation {
        m,
        base,
        dilated,
        tau,
        str_v,
    }
}

/// `b(m,n)_i = ceil(i n / m) - ceil((i - 1) n / m)`, `i = 1..=m`.
pub fn bmn_sequence(m: usize, n: usize) -> Result<Vec<i32>> {
    if m == 0 || n == 0 || m.gcd(&n) != 1 {
        return Err(Error::NotCoprime { m, n });
    }
    let ceil = |i: usize| (i * n).div_ceil(m) as i32;
    Ok((1..=m).map(|i| ceil(i) - ceil(i - 1)).collect())
}

/// The weight `b(m,n,beta)`: `b(m,n)` written north to south in every
/// dilated box of `m beta`, read in reading order.
pub fn bmn_weight(m: usize, n: usize, beta: &Composition) -> Result<Vec<i32>> {
    let b = bmn_sequence(m, n)?;
    let dilated = ColumnDiagram::new(&beta.scaled(m));
    Ok(dilated
        .boxes()
        .iter()
        .map(|&(_, j)| {
            // a = 1 - j mod m, taken in 1..=m
            let a = (m - (j - 1) % m) % m;
            let a = if a == 0 { m } else { a };
            b[a - 1]
        })
        .collect())
}
