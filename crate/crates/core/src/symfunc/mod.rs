//! Symmetric functions over `Z[q^±1, t^±1]`.

pub mod kostka;
pub mod monomial;
pub mod power;
pub mod schur;

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::error::Result;
use crate::laurent::LaurentQT;

pub use monomial::{
    e_product, h_product, monomials_to_schur, schur_multiply, FinitePoly, MonomialExpansion,
};
pub use power::{plethysm_x_times, Alphabet, PowerSumExpansion};
pub use schur::SchurExpansion;

/// A symmetric function in one of the supported representations.
#[derive(Clone, Debug)]
pub enum SymFunc {
    Schur(SchurExpansion),
    Finite(FinitePoly),
    PowerSum(PowerSumExpansion),
}

impl SymFunc {
    pub fn to_schur(&self) -> Result<SchurExpansion> {
        match self {
            SymFunc::Schur(f) => Ok(f.clone()),
            SymFunc::Finite(f) => monomials_to_schur(f),
            SymFunc::PowerSum(p) => power::from_power_sum(p),
        }
    }
}

/// `F_k = sum_{j=0}^{k} (-t)^j e_{k-j} h_j`, which is `e_k[X(1 - t)]`.
fn eprime_factor(k: usize) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    for j in 0..=k {
        let term = schur_multiply(&e_product(&[(k - j) as i32]), &h_product(&[j as i32]));
        let sign = if j % 2 == 0 { 1 } else { -1 };
        out.add_scaled(
            &term,
            &LaurentQT::constant(sign).mul_monomial(&1.into(), 0, j as i32),
        );
    }
    out
}

/// `prod_i F_{gamma_i}`; zero when some `gamma_i < 0`.
pub fn eprime_product(gamma: &[i32]) -> SchurExpansion {
    if gamma.iter().any(|&g| g < 0) {
        return SchurExpansion::zero();
    }
    let mut key: Vec<i32> = gamma.iter().copied().filter(|&g| g > 0).collect();
    key.sort_unstable_by(|a, b| b.cmp(a));
    static CACHE: OnceLock<Mutex<HashMap<Vec<i32>, SchurExpansion>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&key) {
        return v.clone();
    }
    let mut out = SchurExpansion::scalar(LaurentQT::one());
    for &g in &key {
        out = schur_multiply(&out, &eprime_factor(g as usize));
    }
    cache.lock().unwrap().insert(key, out.clone());
    out
}
