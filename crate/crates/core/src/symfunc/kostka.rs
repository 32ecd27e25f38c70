//! Kostka numbers, cached per degree.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::shapes::Partition;

/// Kostka matrix for one degree. Partitions are listed in decreasing
/// lexicographic order, which refines dominance, so the matrix is upper
/// unitriangular.
#[derive(Debug)]
pub struct KostkaTable {
    pub degree: usize,
    pub partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `k[i][j] = K_{partitions[i], partitions[j]}`
    k: Vec<Vec<u64>>,
}

impl KostkaTable {
    fn build(d: usize) -> Self {
        let partitions = Partition::all(d);
        let index: HashMap<Partition, usize> = partitions
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let mut memo = HashMap::new();
        let k = partitions
            .iter()
            .map(|lam| {
                partitions
                    .iter()
                    .map(|mu| kostka_rec(lam.parts(), mu.parts(), &mut memo))
                    .collect()
            })
            .collect();
        KostkaTable {
            degree: d,
            partitions,
            index,
            k,
        }
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn get(&self, lam: &Partition, mu: &Partition) -> u64 {
        match (self.index_of(lam), self.index_of(mu)) {
            (Some(i), Some(j)) => self.k[i][j],
            _ => 0,
        }
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.k[i]
    }
}

/// `K_{lam, mu}` by peeling the last part of `mu` as a horizontal strip.
fn kostka_rec(
    lam: &[usize],
    mu: &[usize],
    memo: &mut HashMap<(Vec<usize>, Vec<usize>), u64>,
) -> u64 {
    let lsum: usize = lam.iter().sum();
    let msum: usize = mu.iter().sum();
    if lsum != msum {
        return 0;
    }
    if mu.is_empty() {
        return u64::from(lam.is_empty());
    }
    if lam.len() > mu.len() {
        return 0;
    }
    let key = (lam.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let k = mu[mu.len() - 1];
    let rest = &mu[..mu.len() - 1];
    let mut total = 0u64;
    // choose inner shape nu with lam/nu a horizontal strip of size k:
    // lam_{i+1} <= nu_i <= lam_i
    let n = lam.len();
    let mut nu = vec![0usize; n];
    fn choose(
        i: usize,
        remaining: usize,
        lam: &[usize],
        nu: &mut Vec<usize>,
        rest: &[usize],
        total: &mut u64,
        memo: &mut HashMap<(Vec<usize>, Vec<usize>), u64>,
    ) {
        if i == lam.len() {
            if remaining == 0 {
                let inner: Vec<usize> = nu.iter().copied().filter(|&x| x > 0).collect();
                *total += kostka_rec(&inner, rest, memo);
            }
            return;
        }
        let lo = lam.get(i + 1).copied().unwrap_or(0);
        for v in lo..=lam[i] {
            let removed = lam[i] - v;
            if removed > remaining {
                continue;
            }
            nu[i] = v;
            choose(i + 1, remaining - removed, lam, nu, rest, total, memo);
        }
    }
    choose(0, k, lam, &mut nu, rest, &mut total, memo);
    memo.insert(key, total);
    total
}

/// Shared Kostka table for degree `d`.
pub fn kostka_table(d: usize) -> Arc<KostkaTable> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<KostkaTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&d) {
        return t.clone();
    }
    let table = Arc::new(KostkaTable::build(d));
    cache.lock().unwrap().entry(d).or_insert(table).clone()
}
