//! One function per subcommand. Each returns the JSON payload and whether
//! the answer was affirmative; the binary turns that into an exit code.

use std::num::NonZeroUsize;

use anyhow::{Context, Result};
use magicdist_core::automorphism::{automorphisms, canonical_form, labeling_orbits};
use magicdist_core::census::{CensusOptions, CensusRecord};
use magicdist_core::construct::{construct, Family};
use magicdist_core::crt::crt_combine;
use magicdist_core::graph6::to_graph6;
use magicdist_core::labeling::{
    verify_distance_magic, verify_p_distance_magic, LabelingError, MagicCertificate,
};
use magicdist_core::search::{
    count_dm_labelings, find_dm_labelings, find_p_dm_labelings, SearchConfig,
};
use magicdist_core::spectral::{
    adjacency_spectrum, char_poly, is_integral, is_singular, main_angles_of, pinv_filter,
    zero_eigenvalue_filter,
};
use magicdist_core::structural::{regular_filters, symm_diff_filter, FilterVerdict, RejectWitness};
use magicdist_core::Graph;
use serde_json::{json, Value};

use crate::input::{AnyLabeling, LabelSpec};

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub result: Value,
    pub affirmative: bool,
}

impl Outcome {
    fn yes(result: Value) -> Self {
        Outcome {
            result,
            affirmative: true,
        }
    }
}

fn certificate_json(cert: &MagicCertificate) -> Value {
    json!({
        "magic": true,
        "constant": cert.constant,
        "modulus": cert.modulus,
        "weights": cert.weights,
        "degenerate": cert.degenerate,
    })
}

pub fn verify(g: &Graph, label: LabelSpec, modulus: Option<usize>) -> Result<Outcome> {
    let f = label.resolve(modulus)?;
    let (checked, modulus) = match &f {
        AnyLabeling::Exact(f) => (verify_distance_magic(g, f), None),
        AnyLabeling::Modular(f) => (verify_p_distance_magic(g, f), Some(f.modulus())),
    };
    match checked {
        Ok(cert) => Ok(Outcome::yes(certificate_json(&cert))),
        Err(LabelingError::NotMagic(w)) => Ok(Outcome {
            result: json!({
                "magic": false,
                "modulus": modulus,
                "witness": {
                    "first": w.first,
                    "second": w.second,
                    "first_weight": w.first_weight,
                    "second_weight": w.second_weight,
                },
            }),
            affirmative: false,
        }),
        Err(e) => Err(e.into()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchArgs {
    pub modulus: Option<usize>,
    pub limit: Option<NonZeroUsize>,
    pub count: bool,
}

pub fn search(g: &Graph, args: SearchArgs) -> Result<Outcome> {
    let cfg = SearchConfig {
        limit: args.limit,
        ..SearchConfig::default()
    };
    let complete_or = |len: usize| args.limit.is_none_or(|l| len < l.get());
    let result = match (args.modulus, args.count) {
        (None, true) if args.limit.is_none() => {
            json!({ "modulus": null, "count": count_dm_labelings(g)? })
        }
        (None, _) => {
            let found = find_dm_labelings(g, &cfg)?;
            let labelings: Vec<Value> = found
                .iter()
                .map(|(f, c)| json!({ "values": f.values(), "constant": c.constant }))
                .collect();
            let mut out = json!({
                "modulus": null,
                "count": found.len(),
                "complete": complete_or(found.len()),
            });
            if !args.count {
                out["labelings"] = Value::Array(labelings);
            }
            out
        }
        (Some(p), _) => {
            let found = find_p_dm_labelings(g, p, &cfg)?;
            let mut out = json!({
                "modulus": p,
                "count": found.len(),
                "complete": complete_or(found.len()),
            });
            if !args.count {
                out["labelings"] = found
                    .iter()
                    .map(|(f, c)| json!({ "values": f.values(), "constant": c.constant }))
                    .collect();
            }
            out
        }
    };
    let affirmative = result["count"].as_u64().unwrap_or(0) > 0;
    Ok(Outcome {
        result,
        affirmative,
    })
}

fn witness_json(w: &RejectWitness) -> Value {
    match w {
        RejectWitness::SymmetricDifference { x, y, size } => {
            json!({ "x": x, "y": y, "size": size })
        }
        RejectWitness::OddRegular { degree } => json!({ "degree": degree }),
        RejectWitness::NonC4Component { vertices } => json!({ "component": vertices }),
        RejectWitness::NonsingularEvenRegular { degree } => json!({ "degree": degree }),
    }
}

pub fn verdict_json(v: &FilterVerdict) -> Value {
    match v {
        FilterVerdict::Pass => json!({ "reject": false }),
        FilterVerdict::Reject(w) => json!({
            "reject": true,
            "filter": w.filter_name(),
            "witness": witness_json(w),
        }),
    }
}

/// Integer coefficients as JSON numbers when they fit in `i64`, strings
/// otherwise.
fn coefficients_json(g: &Graph) -> Value {
    char_poly(g)
        .coeffs()
        .iter()
        .map(|c| match i64::try_from(c) {
            Ok(v) => json!(v),
            Err(_) => json!(c.to_string()),
        })
        .collect()
}

pub fn spectral(g: &Graph) -> Result<Outcome> {
    let spec = adjacency_spectrum(g);
    let angles = main_angles_of(&spec);
    let pinv = pinv_filter(g);
    Ok(Outcome::yes(json!({
        "order": g.order(),
        "charpoly": coefficients_json(g),
        "singular": is_singular(g),
        "integral": is_integral(g),
        "eigenvalues": spec
            .groups
            .iter()
            .map(|grp| json!({ "value": grp.value, "multiplicity": grp.multiplicity() }))
            .collect::<Vec<_>>(),
        "residual": spec.residual,
        "main_angles": angles
            .iter()
            .map(|a| json!({ "eigenvalue": a.eigenvalue, "beta": a.beta }))
            .collect::<Vec<_>>(),
        "pinv_doubly_stochastic": pinv.doubly_stochastic,
        "pinv_row_sums": pinv.row_sums,
        "filters": {
            "symmetric_difference": verdict_json(&symm_diff_filter(g)),
            "regular": verdict_json(&regular_filters(g)),
            "even_regular_zero_eigenvalue": verdict_json(&zero_eigenvalue_filter(g)),
        },
    })))
}

pub fn census_record_json(r: &CensusRecord) -> Value {
    json!({
        "graph6": r.graph6,
        "order": r.order,
        "labeling_count": r.labeling_count,
        "magic_constant": r.magic_constant,
        "singular": r.singular,
        "degenerate": r.degenerate,
    })
}

pub fn census_json(n: Option<usize>, opts: CensusOptions, records: &[CensusRecord]) -> Outcome {
    Outcome::yes(json!({
        "order": n,
        "include_degenerate": opts.include_degenerate,
        "graphs": records.iter().map(census_record_json).collect::<Vec<_>>(),
    }))
}

pub fn aut(g: &Graph, list_elements: bool) -> Result<Outcome> {
    let group = automorphisms(g)?;
    let labelings: Vec<_> = find_dm_labelings(g, &SearchConfig::default())?
        .into_iter()
        .map(|(f, _)| f)
        .collect();
    let orbit_report = if labelings.is_empty() {
        json!({ "applicable": false, "reason": "graph is not distance magic" })
    } else {
        let orbits = labeling_orbits(g, &labelings)?;
        json!({
            "applicable": true,
            "labeling_count": orbits.total(),
            "orbit_count": orbits.orbits.len(),
            "orbit_sizes": orbits.sizes(),
            "bound_holds": group.order() <= orbits.total(),
        })
    };
    let mut result = json!({
        "order": group.order(),
        "vertex_orbits": group.vertex_orbits(),
        "canonical_form": canonical_form(g),
        "orbit_report": orbit_report,
    });
    if list_elements {
        result["elements"] = group.elements().iter().map(|s| json!(s.images())).collect();
    }
    Ok(Outcome::yes(result))
}

pub fn crt(g: &Graph, f_p: LabelSpec, f_q: LabelSpec) -> Result<Outcome> {
    let f_p = f_p.into_modular().context("--fp")?;
    let f_q = f_q.into_modular().context("--fq")?;
    let r = crt_combine(g, &f_p, &f_q)?;
    let verified = r
        .as_modular()
        .map(|f| verify_p_distance_magic(g, &f).is_ok());
    Ok(Outcome {
        result: json!({
            "modulus": r.modulus,
            "labeling": r.labeling,
            "constant": r.constant,
            "consistent": r.consistent,
            "verified": verified,
        }),
        affirmative: r.consistent,
    })
}

pub fn construct_family(spec: &str) -> Result<(Graph, Outcome)> {
    let family: Family = spec.parse()?;
    let g = construct(&family)?;
    let outcome = Outcome::yes(json!({
        "family": family.to_string(),
        "order": g.order(),
        "edge_count": g.edge_count(),
        "graph6": to_graph6(&g),
        "edges": g.edges(),
    }));
    Ok((g, outcome))
}
