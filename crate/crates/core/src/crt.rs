//! Combining a p- and a q-distance magic labeling into a pq labeling.

use alloc::vec::Vec;

use num_integer::Integer;
use thiserror::Error;

use crate::graph::Graph;
use crate::labeling::{
    reduce_value, residue_counts, verify_p_distance_magic, LabelingError, ModularLabeling,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrtError {
    #[error("moduli {p} and {q} are not coprime")]
    NotCoprime { p: usize, q: usize },
    #[error("input labeling mod {modulus} is not p-distance magic: {source}")]
    Unverified {
        modulus: usize,
        source: LabelingError,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrtResult {
    pub modulus: usize,
    /// Per-vertex solutions in `1..=pq` (residue 0 written as `pq`).
    pub labeling: Vec<usize>,
    /// The residue in `0..pq` congruent to both input constants.
    pub constant: u64,
    /// The values form exactly the multiset `{1, ..., n}_pq`.
    pub consistent: bool,
}

impl CrtResult {
    pub fn as_modular(&self) -> Option<ModularLabeling> {
        self.consistent
            .then(|| ModularLabeling::from_values_unchecked(self.modulus, self.labeling.clone()))
    }
}

/// The `x` in `0..p*q` with `x ≡ a (mod p)` and `x ≡ b (mod q)`, for
/// coprime `p`, `q`.
pub fn crt_pair(a: u64, p: u64, b: u64, q: u64) -> u64 {
    let m = (p * q) as i128;
    let egcd = (p as i128).extended_gcd(&(q as i128));
    debug_assert_eq!(egcd.gcd, 1);
    // a + p * s * (b - a), where p s ≡ 1 (mod q)
    let x = a as i128 + (p as i128) * egcd.x * (b as i128 - a as i128);
    x.mod_floor(&m) as u64
}

/// Solves the CRT system vertex by vertex, and for the constants.
pub fn crt_combine(
    g: &Graph,
    f_p: &ModularLabeling,
    f_q: &ModularLabeling,
) -> Result<CrtResult, CrtError> {
    let (p, q) = (f_p.modulus(), f_q.modulus());
    if p.gcd(&q) != 1 {
        return Err(CrtError::NotCoprime { p, q });
    }
    let verify = |f: &ModularLabeling| {
        verify_p_distance_magic(g, f).map_err(|source| CrtError::Unverified {
            modulus: f.modulus(),
            source,
        })
    };
    let k_p = verify(f_p)?.constant;
    let k_q = verify(f_q)?.constant;
    let pq = p * q;
    let labeling: Vec<usize> = f_p
        .values()
        .iter()
        .zip(f_q.values())
        .map(|(&a, &b)| {
            let x = crt_pair(a as u64 % p as u64, p as u64, b as u64 % q as u64, q as u64);
            reduce_value(x as usize, pq)
        })
        .collect();
    for (y, (&a, &b)) in labeling.iter().zip(f_p.values().iter().zip(f_q.values())) {
        assert_eq!(y % p, a % p);
        assert_eq!(y % q, b % q);
    }
    let constant = crt_pair(k_p, p as u64, k_q, q as u64);
    let consistent = is_multiset(&labeling, pq);
    Ok(CrtResult {
        modulus: pq,
        labeling,
        constant,
        consistent,
    })
}

fn is_multiset(values: &[usize], m: usize) -> bool {
    let mut counts = residue_counts(values.len(), m);
    values.iter().all(|&v| {
        v >= 1
            && counts
                .get_mut(v - 1)
                .filter(|c| **c > 0)
                .map(|c| *c -= 1)
                .is_some()
    })
}
