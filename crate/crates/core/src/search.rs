//! Backtracking enumeration of distance magic and p-distance magic
//! labelings.
//!
//! Labels are placed vertex by vertex in an order chosen so that
//! neighbourhoods close early. The magic constant is fixed by the first
//! neighbourhood to close (or up front for regular graphs, where
//! `k = r(n+1)/2`), and every open neighbourhood is checked against the
//! smallest and largest sums the remaining labels could still give it.
//!
//! With symmetry reduction on, label 1 only goes on the smallest vertex of
//! each `Aut(G)` orbit; the rest are recovered by letting the group act.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::num::NonZeroUsize;

use thiserror::Error;

use crate::automorphism::{act, automorphisms, AutGroup};
use crate::graph::Graph;
use crate::labeling::{
    residue_counts, verify_distance_magic, verify_p_distance_magic, Labeling, MagicCertificate,
    ModularLabeling,
};
use crate::spectral::zero_eigenvalue_filter;
use crate::structural::{regular_filters, symm_diff_filter, FilterVerdict};

/// Labels are tracked in a `u128` bit set.
pub const MAX_SEARCH_ORDER: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    /// Stop after this many labelings; `None` enumerates all of them.
    pub limit: Option<NonZeroUsize>,
    /// Run the structural and spectral rejection filters before searching.
    pub prune_filters: bool,
    /// Quotient the search by `Aut(G)`.
    pub symmetry_reduction: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            limit: None,
            prune_filters: true,
            symmetry_reduction: true,
        }
    }
}

impl SearchConfig {
    pub fn first() -> Self {
        SearchConfig {
            limit: NonZeroUsize::new(1),
            ..SearchConfig::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("order {n} exceeds the search limit {MAX_SEARCH_ORDER}")]
    OrderTooLarge { n: usize },
    #[error("modulus must be at least 1")]
    ZeroModulus,
    #[error("labeling count overflows u64")]
    CountOverflow,
}

fn check_order(g: &Graph) -> Result<(), SearchError> {
    match g.order() {
        n if n > MAX_SEARCH_ORDER => Err(SearchError::OrderTooLarge { n }),
        _ => Ok(()),
    }
}

fn rejected_by_filters(g: &Graph) -> bool {
    symm_diff_filter(g).is_reject()
        || regular_filters(g).is_reject()
        || matches!(zero_eigenvalue_filter(g), FilterVerdict::Reject(_))
}

/// Orders vertices so each step closes or nearly closes some neighbourhood:
/// pick the vertex sitting in the neighbourhood with fewest unplaced members,
/// ties to larger degree, then smaller index.
fn branching_order(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut open: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let best = (0..n)
            .filter(|&u| !placed[u])
            .min_by_key(|&u| {
                let tightest = adj[u].iter().map(|&v| open[v]).min().unwrap_or(usize::MAX);
                (tightest, usize::MAX - adj[u].len(), u)
            })
            .expect("an unplaced vertex remains");
        placed[best] = true;
        for &v in &adj[best] {
            open[v] -= 1;
        }
        order.push(best);
    }
    order
}

fn symmetry_group(g: &Graph, cfg: &SearchConfig) -> Option<AutGroup> {
    if !cfg.symmetry_reduction {
        return None;
    }
    automorphisms(g).ok().filter(|group| group.order() > 1)
}

struct DmSearch<'a> {
    n: usize,
    adj: &'a [Vec<usize>],
    order: Vec<usize>,
    /// Vertices allowed to carry label 1.
    may_take_one: Vec<bool>,
    partial: Vec<u64>,
    open: Vec<usize>,
    available: u128,
    values: Vec<usize>,
    constant: Option<u64>,
    /// Depth at which `constant` was fixed, so it can be released.
    fixed_at: Option<usize>,
    limit: usize,
    on_found: &'a mut dyn FnMut(&[usize]) -> usize,
    found: usize,
}

impl DmSearch<'_> {
    fn run(&mut self, depth: usize) {
        if depth == self.n {
            self.found += (self.on_found)(&self.values);
            return;
        }
        let adj = self.adj;
        let u = self.order[depth];
        let mut candidates = self.available;
        while candidates != 0 && self.found < self.limit {
            let bit = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            let label = bit + 1;
            if label == 1 && !self.may_take_one[u] {
                continue;
            }
            self.available &= !(1u128 << bit);
            self.values[u] = label;
            for &v in &adj[u] {
                self.partial[v] += label as u64;
                self.open[v] -= 1;
            }
            if self.consistent(u, depth) {
                self.run(depth + 1);
            }
            if self.fixed_at == Some(depth) {
                self.constant = None;
                self.fixed_at = None;
            }
            for &v in &adj[u] {
                self.partial[v] -= label as u64;
                self.open[v] += 1;
            }
            self.values[u] = 0;
            self.available |= 1u128 << bit;
        }
    }

    fn consistent(&mut self, u: usize, depth: usize) -> bool {
        let adj = self.adj;
        for &v in &adj[u] {
            if self.open[v] == 0 {
                match self.constant {
                    Some(k) if k != self.partial[v] => return false,
                    Some(_) => {}
                    None => {
                        self.constant = Some(self.partial[v]);
                        self.fixed_at = Some(depth);
                    }
                }
            }
        }
        let Some(k) = self.constant else {
            return true;
        };
        self.adj[u].iter().all(|&v| {
            let r = self.open[v];
            r == 0 || {
                let (lo, hi) = extreme_sums(self.available, r);
                self.partial[v] + lo <= k && k <= self.partial[v] + hi
            }
        })
    }
}

/// Sums of the `r` smallest and `r` largest labels in `available`.
fn extreme_sums(available: u128, r: usize) -> (u64, u64) {
    let (mut lo, mut hi) = (0u64, 0u64);
    let (mut low_bits, mut high_bits) = (available, available);
    for _ in 0..r {
        if low_bits == 0 {
            return (u64::MAX / 2, 0);
        }
        let b = low_bits.trailing_zeros();
        lo += b as u64 + 1;
        low_bits &= low_bits - 1;
        let t = 127 - high_bits.leading_zeros();
        hi += t as u64 + 1;
        high_bits &= !(1u128 << t);
    }
    (lo, hi)
}

/// Runs the reduced search, calling `on_found` for each labeling found; it
/// returns how many labelings that find stands for.
fn drive_dm(
    g: &Graph,
    group: Option<&AutGroup>,
    limit: usize,
    on_found: &mut dyn FnMut(&[usize]) -> usize,
) {
    let n = g.order();
    let adj = g.adjacency_lists();
    let has_isolated = adj.iter().any(Vec::is_empty);
    if has_isolated && g.edge_count() > 0 {
        return;
    }
    let mut may_take_one = vec![true; n];
    if let Some(group) = group {
        may_take_one.fill(false);
        for orbit in group.vertex_orbits() {
            may_take_one[orbit[0] - 1] = true;
        }
    }
    let forced = match g.regular_degree() {
        Some(r) if (r * (n + 1)) % 2 == 1 => return,
        Some(r) => Some((r * (n + 1) / 2) as u64),
        None => None,
    };
    let mut search = DmSearch {
        n,
        adj: &adj,
        order: branching_order(&adj),
        may_take_one,
        partial: vec![0; n],
        open: adj.iter().map(Vec::len).collect(),
        available: if n == 128 {
            u128::MAX
        } else {
            (1u128 << n) - 1
        },
        values: vec![0; n],
        constant: forced,
        fixed_at: None,
        limit,
        on_found,
        found: 0,
    };
    search.run(0);
}

/// Distance magic labelings of `g`, each with its certificate.
///
/// Without a limit the list is complete and sorted lexicographically by
/// value sequence.
pub fn find_dm_labelings(
    g: &Graph,
    cfg: &SearchConfig,
) -> Result<Vec<(Labeling, MagicCertificate)>, SearchError> {
    check_order(g)?;
    if cfg.prune_filters && rejected_by_filters(g) {
        return Ok(Vec::new());
    }
    let limit = cfg.limit.map_or(usize::MAX, NonZeroUsize::get);
    let group = symmetry_group(g, cfg);
    let mut all = BTreeSet::new();
    let mut on_found = |values: &[usize]| {
        let f = Labeling::from_values_unchecked(values.to_vec());
        let before = all.len();
        match &group {
            Some(group) => {
                for sigma in group.elements() {
                    if all.len() >= limit {
                        break;
                    }
                    all.insert(act(sigma, &f).expect("sizes match"));
                }
            }
            None => {
                all.insert(f);
            }
        }
        all.len() - before
    };
    drive_dm(g, group.as_ref(), limit, &mut on_found);
    Ok(all
        .into_iter()
        .map(|f| {
            let cert = verify_distance_magic(g, &f).expect("search only yields magic labelings");
            (f, cert)
        })
        .collect())
}

/// Number of distance magic labelings of `g`, counted one `Aut(G)` orbit at
/// a time.
pub fn count_dm_labelings(g: &Graph) -> Result<u64, SearchError> {
    count_dm_labelings_with(g, &SearchConfig::default())
}

pub fn count_dm_labelings_with(g: &Graph, cfg: &SearchConfig) -> Result<u64, SearchError> {
    check_order(g)?;
    if cfg.prune_filters && rejected_by_filters(g) {
        return Ok(0);
    }
    let group = symmetry_group(
        g,
        &SearchConfig {
            limit: None,
            ..cfg.clone()
        },
    );
    let orbit_size: Vec<usize> = match &group {
        Some(group) => {
            let mut size = vec![1; g.order()];
            for orbit in group.vertex_orbits() {
                for &v in &orbit {
                    size[v - 1] = orbit.len();
                }
            }
            size
        }
        None => vec![1; g.order()],
    };
    let mut total: Option<u64> = Some(0);
    let mut on_found = |values: &[usize]| {
        let one_at = values
            .iter()
            .position(|&x| x == 1)
            .expect("label 1 is used");
        total = total.and_then(|t| t.checked_add(orbit_size[one_at] as u64));
        1
    };
    drive_dm(g, group.as_ref(), usize::MAX, &mut on_found);
    total.ok_or(SearchError::CountOverflow)
}

struct PdmSearch<'a> {
    n: usize,
    p: u64,
    adj: &'a [Vec<usize>],
    order: Vec<usize>,
    remaining: Vec<usize>,
    partial: Vec<u64>,
    open: Vec<usize>,
    values: Vec<usize>,
    constant: Option<u64>,
    fixed_at: Option<usize>,
    limit: usize,
    out: Vec<Vec<usize>>,
}

impl PdmSearch<'_> {
    fn run(&mut self, depth: usize) {
        if depth == self.n {
            self.out.push(self.values.clone());
            return;
        }
        let adj = self.adj;
        let u = self.order[depth];
        for slot in 0..self.remaining.len() {
            if self.out.len() >= self.limit {
                return;
            }
            if self.remaining[slot] == 0 {
                continue;
            }
            let label = slot + 1;
            self.remaining[slot] -= 1;
            self.values[u] = label;
            for &v in &adj[u] {
                self.partial[v] += label as u64;
                self.open[v] -= 1;
            }
            if self.consistent(u, depth) {
                self.run(depth + 1);
            }
            if self.fixed_at == Some(depth) {
                self.constant = None;
                self.fixed_at = None;
            }
            for &v in &adj[u] {
                self.partial[v] -= label as u64;
                self.open[v] += 1;
            }
            self.values[u] = 0;
            self.remaining[slot] += 1;
        }
    }

    fn consistent(&mut self, u: usize, depth: usize) -> bool {
        let adj = self.adj;
        for &v in &adj[u] {
            if self.open[v] == 0 {
                let w = self.partial[v] % self.p;
                match self.constant {
                    Some(k) if k != w => return false,
                    Some(_) => {}
                    None => {
                        self.constant = Some(w);
                        self.fixed_at = Some(depth);
                    }
                }
            }
        }
        true
    }
}

/// p-distance magic labelings of `g`: bijections onto the multiset
/// `{1, ..., n}_p` whose weights agree modulo `p`. Sorted lexicographically.
///
/// Repeated labels make stabilizers non-trivial, so this search is never
/// quotiented by `Aut(G)`.
pub fn find_p_dm_labelings(
    g: &Graph,
    p: usize,
    cfg: &SearchConfig,
) -> Result<Vec<(ModularLabeling, MagicCertificate)>, SearchError> {
    check_order(g)?;
    if p == 0 {
        return Err(SearchError::ZeroModulus);
    }
    let n = g.order();
    let adj = g.adjacency_lists();
    let isolated = adj.iter().any(Vec::is_empty);
    let mut search = PdmSearch {
        n,
        p: p as u64,
        adj: &adj,
        order: branching_order(&adj),
        remaining: residue_counts(n, p),
        partial: vec![0; n],
        open: adj.iter().map(Vec::len).collect(),
        values: vec![0; n],
        constant: isolated.then_some(0),
        fixed_at: None,
        limit: cfg.limit.map_or(usize::MAX, NonZeroUsize::get),
        out: Vec::new(),
    };
    search.run(0);
    let mut out = search.out;
    out.sort_unstable();
    Ok(out
        .into_iter()
        .map(|values| {
            let f = ModularLabeling::from_values_unchecked(p, values);
            let cert = verify_p_distance_magic(g, &f).expect("search only yields magic labelings");
            (f, cert)
        })
        .collect())
}
