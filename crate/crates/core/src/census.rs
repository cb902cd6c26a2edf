//! Exhaustive census of distance magic graphs of a given order.
//!
//! Internal generation walks every labelled graph on `n <= 8` vertices as an
//! edge mask, drops masks rejected by the cheap degree and neighbourhood
//! filters, and canonicalises the survivors. Each isomorphism class left is
//! then put through the zero-eigenvalue filter and a full labeling count.
//!
//! The mask range can be split into shards ([`scan_masks`]) and classes
//! evaluated independently ([`evaluate`]), which is how callers parallelise.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::ops::Range;

use thiserror::Error;

use crate::automorphism::canonical_form;
use crate::graph::Graph;
use crate::graph6::parse_graph6;
use crate::search::{count_dm_labelings, find_dm_labelings, SearchConfig, SearchError};
use crate::spectral::{is_singular, zero_eigenvalue_filter};
use crate::structural::{regular_filters, symm_diff_filter};

/// Largest order generated internally.
pub const MAX_GENERATED_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("internal generation supports n <= {MAX_GENERATED_ORDER}, got {n}")]
    OrderTooLarge { n: usize },
    #[error("order must be at least 1")]
    EmptyOrder,
    #[error(transparent)]
    Search(#[from] SearchError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CensusOptions {
    /// Keep the edgeless graph (and `K1`), whose labelings are all magic
    /// with constant 0.
    pub include_degenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CensusRecord {
    /// Canonical graph6 string.
    pub graph6: String,
    pub order: usize,
    pub labeling_count: u64,
    pub magic_constant: u64,
    pub singular: bool,
    /// Edgeless graph: every weight is 0.
    pub degenerate: bool,
}

/// Number of labelled graphs on `n` vertices.
pub fn mask_count(n: usize) -> u64 {
    1u64 << (n * (n.saturating_sub(1)) / 2)
}

fn check_order(n: usize) -> Result<(), CensusError> {
    match n {
        0 => Err(CensusError::EmptyOrder),
        n if n > MAX_GENERATED_ORDER => Err(CensusError::OrderTooLarge { n }),
        _ => Ok(()),
    }
}

/// Rows of the labelled graph encoded by `mask`; bit `e` stands for the
/// `e`-th pair `(i, j)`, `i < j`, in column order.
fn rows_of(n: usize, mut mask: u64) -> [u16; MAX_GENERATED_ORDER] {
    let mut rows = [0u16; MAX_GENERATED_ORDER];
    for j in 1..n {
        for i in 0..j {
            if mask & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            mask >>= 1;
        }
    }
    rows
}

/// The degree and neighbourhood filters on raw rows. `true` keeps the graph.
fn cheap_survivor(n: usize, rows: &[u16]) -> bool {
    let any_edge = rows[..n].iter().any(|&r| r != 0);
    // an isolated vertex forces k = 0, so only the edgeless graph survives
    if any_edge && rows[..n].contains(&0) {
        return false;
    }
    let degree = rows[0].count_ones();
    if rows[1..n].iter().all(|r| r.count_ones() == degree) && degree % 2 == 1 {
        return false;
    }
    for x in 0..n {
        for y in x + 1..n {
            let d = (rows[x] ^ rows[y]).count_ones();
            if d == 1 || d == 2 {
                return false;
            }
        }
    }
    true
}

fn graph_of(n: usize, rows: &[u16]) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| {
            (i + 1..n)
                .filter(move |&j| rows[i] >> j & 1 == 1)
                .map(move |j| (i + 1, j + 1))
        })
        .collect();
    Graph::from_edge_list(n, &edges).expect("edges are in range")
}

/// Canonical forms of the masks in `range` that pass the cheap filters.
pub fn scan_masks(n: usize, range: Range<u64>) -> Result<BTreeSet<String>, CensusError> {
    check_order(n)?;
    let mut out = BTreeSet::new();
    for mask in range {
        let rows = rows_of(n, mask);
        if !cheap_survivor(n, &rows) {
            continue;
        }
        let g = graph_of(n, &rows);
        if regular_filters(&g).is_reject() {
            continue;
        }
        out.insert(canonical_form(&g));
    }
    Ok(out)
}

/// Full evaluation of one graph: `None` unless it is distance magic (and,
/// when degenerate, unless degenerate graphs were asked for).
pub fn evaluate(g: &Graph, opts: CensusOptions) -> Result<Option<CensusRecord>, CensusError> {
    let degenerate = g.edge_count() == 0;
    if degenerate && !opts.include_degenerate {
        return Ok(None);
    }
    if symm_diff_filter(g).is_reject()
        || regular_filters(g).is_reject()
        || zero_eigenvalue_filter(g).is_reject()
    {
        return Ok(None);
    }
    let count = count_dm_labelings(g)?;
    if count == 0 {
        return Ok(None);
    }
    let first = find_dm_labelings(g, &SearchConfig::first())?;
    let magic_constant = first[0].1.constant;
    Ok(Some(CensusRecord {
        graph6: canonical_form(g),
        order: g.order(),
        labeling_count: count,
        magic_constant,
        singular: is_singular(g),
        degenerate,
    }))
}

/// Every distance magic graph on `n` vertices up to isomorphism, sorted by
/// canonical graph6 string.
pub fn census_dm_graphs(n: usize, opts: CensusOptions) -> Result<Vec<CensusRecord>, CensusError> {
    let classes = scan_masks(n, 0..mask_count(n))?;
    evaluate_classes(&classes, opts)
}

/// Evaluates canonical graph6 strings produced by [`scan_masks`].
pub fn evaluate_classes(
    classes: &BTreeSet<String>,
    opts: CensusOptions,
) -> Result<Vec<CensusRecord>, CensusError> {
    let mut out = Vec::new();
    for code in classes {
        let g = parse_graph6(code).expect("canonical forms are valid graph6");
        if let Some(record) = evaluate(&g, opts)? {
            out.push(record);
        }
    }
    Ok(out)
}

/// Census over a supplied list of graphs (any order), deduplicated up to
/// isomorphism and sorted by canonical form.
pub fn census_corpus<'a>(
    corpus: impl IntoIterator<Item = &'a Graph>,
    opts: CensusOptions,
) -> Result<Vec<CensusRecord>, CensusError> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for g in corpus {
        if !seen.insert(canonical_form(g)) {
            continue;
        }
        if let Some(record) = evaluate(g, opts)? {
            out.push(record);
        }
    }
    out.sort();
    Ok(out)
}
