//! Census fan-out over rayon. Shards are merged into ordered sets, so the
//! result does not depend on the thread count.

use std::collections::BTreeSet;

use magicdist_core::automorphism::canonical_form;
use magicdist_core::census::{
    evaluate, mask_count, scan_masks, CensusError, CensusOptions, CensusRecord,
};
use magicdist_core::graph6::parse_graph6;
use magicdist_core::Graph;
use rayon::prelude::*;

const SHARDS: u64 = 512;

pub fn thread_pool(threads: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .expect("thread pool")
}

pub fn census(
    n: usize,
    opts: CensusOptions,
    threads: usize,
) -> Result<Vec<CensusRecord>, CensusError> {
    thread_pool(threads).install(|| {
        let total = mask_count(n);
        let shards = SHARDS.min(total);
        let step = total.div_ceil(shards);
        let classes = (0..shards)
            .into_par_iter()
            .map(|s| scan_masks(n, s * step..((s + 1) * step).min(total)))
            .try_reduce(BTreeSet::new, |mut a, b| {
                a.extend(b);
                Ok(a)
            })?;
        let classes: Vec<String> = classes.into_iter().collect();
        let evaluated = classes
            .par_iter()
            .map(|code| evaluate(&parse_graph6(code).expect("canonical forms parse"), opts))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(evaluated.into_iter().flatten().collect())
    })
}

pub fn census_corpus(
    graphs: &[Graph],
    opts: CensusOptions,
    threads: usize,
) -> Result<Vec<CensusRecord>, CensusError> {
    thread_pool(threads).install(|| {
        let forms: Vec<String> = graphs.par_iter().map(canonical_form).collect();
        let mut seen = BTreeSet::new();
        let unique: Vec<&Graph> = graphs
            .iter()
            .zip(&forms)
            .filter(|(_, f)| seen.insert((*f).clone()))
            .map(|(g, _)| g)
            .collect();
        let mut out = unique
            .par_iter()
            .map(|g| evaluate(g, opts))
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .flatten()
            .collect::<Vec<_>>();
        out.sort();
        Ok(out)
    })
}
