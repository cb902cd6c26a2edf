//! Acceptance criteria 1-12. Each test prints one `criterion N: PASS|FAIL`
//! line with the observed values, then asserts.

use std::collections::BTreeSet;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use itertools::Itertools;
use magicdist_core::automorphism::{automorphisms, labeling_orbits};
use magicdist_core::census::{census_dm_graphs, CensusOptions, CensusRecord};
use magicdist_core::construct;
use magicdist_core::crt::crt_combine;
use magicdist_core::graph6::parse_graph6;
use magicdist_core::labeling::{
    reduce_mod_p, verify_distance_magic, verify_p_distance_magic, Labeling, ModularLabeling,
};
use magicdist_core::search::{
    count_dm_labelings, find_dm_labelings, find_p_dm_labelings, SearchConfig,
};
use magicdist_core::spectral::{
    adjacency_matrix, adjacency_spectrum, char_poly, is_integral, is_singular, knm_cone_charpoly,
    main_angles, moore_penrose, penrose_residuals, pinv_filter, zero_eigenvalue_filter, IntPoly,
    Matrix, PINV_RANK_TOL,
};
use magicdist_core::structural::{contains_p3_or_c4, regular_filters, symm_diff_filter};
use magicdist_core::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn criterion(number: u32, checks: &[(&str, bool)], detail: String) {
    let failed: Vec<&str> = checks
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(name, _)| *name)
        .collect();
    if failed.is_empty() {
        println!("criterion {number}: PASS  {detail}");
    } else {
        println!(
            "criterion {number}: FAIL  [{}]  {detail}",
            failed.join(", ")
        );
    }
    assert!(failed.is_empty(), "criterion {number} failed: {failed:?}");
}

/// Fastest of several runs, to keep timing checks stable on a busy machine.
fn best_of<T>(runs: usize, mut f: impl FnMut() -> T) -> (T, Duration) {
    let mut best = Duration::MAX;
    let mut out = None;
    for _ in 0..runs {
        let start = Instant::now();
        let value = f();
        best = best.min(start.elapsed());
        out = Some(value);
    }
    (out.unwrap(), best)
}

fn dm_labelings(g: &Graph) -> Vec<Labeling> {
    find_dm_labelings(g, &SearchConfig::default())
        .unwrap()
        .into_iter()
        .map(|(f, _)| f)
        .collect()
}

/// Census of orders 1-7 with all labelings of each graph.
fn census_up_to_seven() -> &'static [(CensusRecord, Graph, Vec<Labeling>)] {
    static CENSUS: OnceLock<Vec<(CensusRecord, Graph, Vec<Labeling>)>> = OnceLock::new();
    CENSUS.get_or_init(|| {
        (1..=7)
            .flat_map(|n| census_dm_graphs(n, CensusOptions::default()).unwrap())
            .map(|r| {
                let g = parse_graph6(&r.graph6).unwrap();
                let fs = dm_labelings(&g);
                (r, g, fs)
            })
            .collect()
    })
}

fn p3() -> Graph {
    construct::path(3).unwrap()
}

fn c4() -> Graph {
    construct::cycle(4).unwrap()
}

fn tuple(digits: &str) -> Vec<usize> {
    digits
        .chars()
        .map(|c| c.to_digit(10).unwrap() as usize)
        .collect()
}

#[test]
fn criterion_01_worked_constants() {
    let (results, elapsed) = best_of(20, || {
        let k_p3 = verify_distance_magic(&p3(), &Labeling::new(vec![1, 3, 2]).unwrap())
            .map(|c| c.constant);
        let k_c4 = verify_distance_magic(&c4(), &Labeling::new(vec![1, 2, 4, 3]).unwrap())
            .map(|c| c.constant);
        (k_p3, k_c4)
    });
    let (k_p3, k_c4) = results;
    criterion(
        1,
        &[
            ("P3 constant 3", k_p3 == Ok(3)),
            ("C4 constant 5", k_c4 == Ok(5)),
            ("under 1 ms", elapsed < Duration::from_millis(1)),
        ],
        format!("k(P3)={k_p3:?} k(C4)={k_c4:?} in {elapsed:?}"),
    );
}

#[test]
fn criterion_02_labeling_counts() {
    let (results, elapsed) = best_of(5, || {
        let list = |g: &Graph| -> BTreeSet<Vec<usize>> {
            dm_labelings(g)
                .into_iter()
                .map(|f| f.values().to_vec())
                .collect()
        };
        (
            count_dm_labelings(&p3()).unwrap(),
            list(&p3()),
            count_dm_labelings(&c4()).unwrap(),
            list(&c4()),
        )
    });
    let (n_p3, set_p3, n_c4, set_c4) = results;
    let expected_p3: BTreeSet<_> = ["132", "231"].map(tuple).into_iter().collect();
    let expected_c4: BTreeSet<_> = [
        "1243", "3124", "4312", "2431", "2134", "1342", "3421", "4213",
    ]
    .map(tuple)
    .into_iter()
    .collect();
    criterion(
        2,
        &[
            ("count(P3) = 2", n_p3 == 2),
            ("P3 set", set_p3 == expected_p3),
            ("count(C4) = 8", n_c4 == 8),
            ("C4 set", set_c4 == expected_c4),
            ("under 10 ms", elapsed < Duration::from_millis(10)),
        ],
        format!("count(P3)={n_p3} count(C4)={n_c4} in {elapsed:?}"),
    );
}

#[test]
fn criterion_03_automorphisms() {
    let start = Instant::now();
    let union = construct::disjoint_union(&p3(), &c4());
    let aut_p3 = automorphisms(&p3()).unwrap().order();
    let aut_c4 = automorphisms(&c4()).unwrap().order();
    let aut_union = automorphisms(&union).unwrap().order();
    let c4_orbits = labeling_orbits(&c4(), &dm_labelings(&c4()))
        .unwrap()
        .sizes();
    let union_count = count_dm_labelings(&union).unwrap();
    let elapsed = start.elapsed();
    criterion(
        3,
        &[
            ("|Aut(P3)| = 2", aut_p3 == 2),
            ("|Aut(C4)| = 8", aut_c4 == 8),
            ("|Aut(P3 u C4)| = 16", aut_union == 16),
            ("C4 one orbit of 8", c4_orbits == [8]),
            ("P3 u C4 count >= 48", union_count >= 48),
            ("P3 u C4 count divisible by 16", union_count.is_multiple_of(16)),
            ("under 5 s", elapsed < Duration::from_secs(5)),
        ],
        format!(
            "|Aut| = {aut_p3}, {aut_c4}, {aut_union}; C4 orbits {c4_orbits:?}; |M(P3 u C4)| = {union_count}; {elapsed:?}"
        ),
    );
}

#[test]
fn criterion_04_knm_spectrum() {
    let g = construct::complete_minus_matching(6).unwrap();
    // y^3 (y + 2)^2 (y - 4)
    let expected = IntPoly::linear(0)
        .pow(3)
        .mul(&IntPoly::linear(-2).pow(2))
        .mul(&IntPoly::linear(4));
    let exact = char_poly(&g);
    let spectrum = adjacency_spectrum(&g);
    let exact_roots = [4.0, 0.0, 0.0, 0.0, -2.0, -2.0];
    let eig_ok = spectrum
        .eigenvalues
        .iter()
        .zip(exact_roots)
        .all(|(a, b)| (a - b).abs() < 1e-8);
    let angles = main_angles(&g);
    let betas: Vec<f64> = angles.iter().map(|a| a.beta).collect();
    let stated = [1.0 / 6f64.sqrt(), 0.0, 0.0];
    let angles_ok = betas.len() == 3 && betas.iter().zip(stated).all(|(a, b)| (a - b).abs() < 1e-8);
    let beta_square_sum: f64 = betas.iter().map(|b| b * b).sum();
    criterion(
        4,
        &[
            ("exact char_poly", exact == expected),
            ("eig_sym within 1e-8", eig_ok),
            ("main angles (1/sqrt 6, 0, 0)", angles_ok),
        ],
        format!(
            "char_poly = {exact}; eigenvalues {:?}; main angles {betas:?} (sum of squares {beta_square_sum})",
            spectrum.distinct()
        ),
    );
}

#[test]
fn criterion_05_cone_covers() {
    let mut checks = Vec::new();
    let mut detail = Vec::new();
    for m in [4, 6, 8, 10] {
        let cone = construct::cone_cover(&construct::complete_minus_matching(m).unwrap());
        let closed = knm_cone_charpoly(m).unwrap();
        let exact = char_poly(&cone);
        let found = find_dm_labelings(&cone, &SearchConfig::first()).unwrap();
        let labeled = Labeling::new(construct::cone_knm_labeling(m).unwrap()).unwrap();
        checks.push((
            closed == exact,
            !is_integral(&cone),
            !found.is_empty() && verify_distance_magic(&cone, &labeled).is_ok(),
        ));
        detail.push(format!("m={m}: {exact}"));
    }
    criterion(
        5,
        &[
            ("closed form equals char_poly", checks.iter().all(|c| c.0)),
            ("not integral", checks.iter().all(|c| c.1)),
            ("distance magic by search", checks.iter().all(|c| c.2)),
        ],
        detail.join("; "),
    );
}

#[test]
fn criterion_06_moore_penrose() {
    let star = construct::star(3).unwrap();
    let a = adjacency_matrix(&star).to_f64();
    let pinv = moore_penrose(&a, PINV_RANK_TOL).unwrap();
    let third = 1.0 / 3.0;
    let displayed = Matrix::from_fn(4, 4, |i, j| match (i, j) {
        (0, 0) => 1.0,
        (0, _) | (_, 0) => 0.0,
        _ => third,
    });
    let defect = a.mul(&pinv).sub(&displayed).max_abs();
    let star_filter = pinv_filter(&star).doubly_stochastic;
    let star_dm = count_dm_labelings(&star).unwrap();
    let census = census_up_to_seven();
    let failures: Vec<&str> = census
        .iter()
        .filter(|(_, g, _)| !pinv_filter(g).doubly_stochastic)
        .map(|(r, _, _)| r.graph6.as_str())
        .collect();
    criterion(
        6,
        &[
            ("AA+ of K_{1,3} within 1e-9", defect < 1e-9),
            ("K_{1,3} passes the filter", star_filter),
            ("K_{1,3} not distance magic", star_dm == 0),
            ("filter holds on census", failures.is_empty()),
        ],
        format!(
            "max |AA+ - displayed| = {defect:.2e}; {} census graphs checked; failures {failures:?}",
            census.len()
        ),
    );
}

#[test]
fn criterion_07_singular_constructions() {
    let start = Instant::now();
    let mut ok_even = true;
    let mut ok_odd = true;
    let mut detail = Vec::new();
    for n in [4, 6, 8, 10, 12] {
        let g = construct::singular_even(n).unwrap();
        let k = verify_distance_magic(&g, &Labeling::identity(n)).map(|c| c.constant);
        let expected = (n * (n + 1) / 2 - (n + 1)) as u64;
        ok_even &= k == Ok(expected) && is_singular(&g);
        detail.push(format!("n={n}: k={k:?}"));
    }
    for n in [5, 7, 9, 11] {
        let g = construct::cone_cover(&construct::complete_minus_matching(n - 1).unwrap());
        let f = Labeling::new(construct::cone_knm_labeling(n - 1).unwrap()).unwrap();
        let k = verify_distance_magic(&g, &f).map(|c| c.constant);
        ok_odd &= k.is_ok() && is_singular(&g);
        detail.push(format!("n={n}: k={k:?}"));
    }
    let elapsed = start.elapsed();
    criterion(
        7,
        &[
            ("even orders", ok_even),
            ("odd orders (cones)", ok_odd),
            ("under 30 s", elapsed < Duration::from_secs(30)),
        ],
        format!("{}; {elapsed:?}", detail.join(", ")),
    );
}

#[test]
fn criterion_08_nonsingular_witness() {
    let g = construct::fig_ndm();
    let k = verify_distance_magic(&g, &Labeling::identity(11)).map(|c| c.constant);
    let singular = is_singular(&g);

    let start = Instant::now();
    let small: Vec<CensusRecord> = (1..=6)
        .flat_map(|n| census_dm_graphs(n, CensusOptions::default()).unwrap())
        .collect();
    let small_time = start.elapsed();
    let start = Instant::now();
    let seven = census_dm_graphs(7, CensusOptions::default()).unwrap();
    let seven_time = start.elapsed();
    let all_singular = small.iter().chain(&seven).all(|r| r.singular);
    criterion(
        8,
        &[
            ("11-vertex graph k = 31", k == Ok(31)),
            ("11-vertex graph nonsingular", !singular),
            ("every census graph singular", all_singular),
            ("n <= 6 within 1 min", small_time <= Duration::from_secs(60)),
            ("n = 7 within 10 min", seven_time <= Duration::from_secs(600)),
        ],
        format!(
            "k={k:?}, det(A) = {}; census {} graphs at n<=6 ({small_time:?}), {} at n=7 ({seven_time:?})",
            -char_poly(&g).constant_term(),
            small.len(),
            seven.len()
        ),
    );
}

#[test]
fn criterion_09_crt() {
    let f2 = ModularLabeling::new(2, vec![1, 2, 2, 1]).unwrap();
    let f3 = ModularLabeling::new(3, vec![2, 1, 3, 1]).unwrap();
    let k2 = verify_p_distance_magic(&c4(), &f2).map(|c| c.constant);
    let k3 = verify_p_distance_magic(&c4(), &f3).map(|c| c.constant);
    let r = crt_combine(&c4(), &f2, &f3).unwrap();

    let census = census_up_to_seven();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let pairs = [
        (2usize, 3usize),
        (2, 5),
        (3, 4),
        (3, 5),
        (4, 5),
        (2, 7),
        (5, 6),
    ];
    let mut round_trips = 0;
    for _ in 0..50 {
        let (_, g, fs) = census.choose(&mut rng).unwrap();
        let f = fs.choose(&mut rng).unwrap();
        let (p, q) = pairs[rng.gen_range(0..pairs.len())];
        let combined = crt_combine(
            g,
            &reduce_mod_p(f, p).unwrap(),
            &reduce_mod_p(f, q).unwrap(),
        )
        .unwrap();
        let expected = reduce_mod_p(f, p * q).unwrap();
        if combined.consistent && combined.labeling == expected.values() {
            round_trips += 1;
        }
    }
    criterion(
        9,
        &[
            ("labeling (2,4,6,1)", r.labeling == [2, 4, 6, 1]),
            ("k2 = 1 and k3 = 2", k2 == Ok(1) && k3 == Ok(2)),
            (
                "constant consistent with k2, k3",
                r.constant % 2 == 1 && r.constant % 3 == 2,
            ),
            ("flag inconsistent", !r.consistent),
            ("50 round trips", round_trips == 50),
        ],
        format!(
            "labeling {:?}, constant {} mod 6, consistent={}; round trips {round_trips}/50",
            r.labeling, r.constant, r.consistent
        ),
    );
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (1..=n)
        .array_combinations()
        .filter(|_| rng.gen_bool(density))
        .map(|[u, v]| (u, v))
        .collect();
    Graph::from_edge_list(n, &edges).unwrap()
}

fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<[usize; 2]> = (1..=n).array_combinations().collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &[u, v])| (u, v))
                .collect();
            Graph::from_edge_list(n, &edges).unwrap()
        })
        .collect()
}

fn brute_force_dm(g: &Graph) -> BTreeSet<Vec<usize>> {
    let n = g.order();
    (1..=n)
        .permutations(n)
        .filter(|f| {
            (1..=n)
                .map(|v| {
                    (1..=n)
                        .filter(|&u| g.adjacent(u, v))
                        .map(|u| f[u - 1])
                        .sum::<usize>()
                })
                .all_equal()
        })
        .collect()
}

fn brute_force_aut_order(g: &Graph) -> usize {
    let n = g.order();
    (1..=n)
        .permutations(n)
        .filter(|s| {
            (1..=n).all(|u| (1..=n).all(|v| g.adjacent(u, v) == g.adjacent(s[u - 1], s[v - 1])))
        })
        .count()
}

#[test]
fn criterion_10_property_suites() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let search_set = |g: &Graph| -> BTreeSet<Vec<usize>> {
        dm_labelings(g)
            .into_iter()
            .map(|f| f.values().to_vec())
            .collect()
    };

    let mut search_graphs: Vec<Graph> = (1..=4).flat_map(all_graphs).collect();
    search_graphs.extend((0..200).map(|i| random_graph(&mut rng, 5 + i % 2, 0.5)));
    let search_mismatch = search_graphs
        .iter()
        .filter(|g| search_set(g) != brute_force_dm(g))
        .count();

    let aut_graphs: Vec<Graph> = (0..50)
        .map(|i| random_graph(&mut rng, 1 + i % 7, 0.5))
        .collect();
    let aut_mismatch = aut_graphs
        .iter()
        .filter(|g| automorphisms(g).unwrap().order() != brute_force_aut_order(g))
        .count();

    let mut worst_penrose: f64 = 0.0;
    for i in 0..100 {
        let n = 1 + i % 10;
        let coins: Vec<bool> = (0..n * n).map(|_| rng.gen_bool(0.4)).collect();
        let b = Matrix::from_fn(n, n, |r, c| {
            if coins[r.min(c) * n + r.max(c)] {
                1.0
            } else {
                0.0
            }
        });
        let pinv = moore_penrose(&b, PINV_RANK_TOL).unwrap();
        worst_penrose = penrose_residuals(&b, &pinv)
            .into_iter()
            .fold(worst_penrose, f64::max);
    }

    let angle_graphs = search_graphs.iter().chain(&aut_graphs);
    let worst_beta = angle_graphs
        .map(|g| {
            let total: f64 = main_angles(g).iter().map(|a| a.beta * a.beta).sum();
            (total - 1.0).abs()
        })
        .fold(0.0, f64::max);

    criterion(
        10,
        &[
            ("search equals brute force", search_mismatch == 0),
            ("automorphisms equal brute force", aut_mismatch == 0),
            ("Penrose identities within 1e-7", worst_penrose < 1e-7),
            ("sum of beta^2 = 1 within 1e-8", worst_beta < 1e-8),
        ],
        format!(
            "{} search graphs, {} mismatches; {} automorphism graphs, {} mismatches; Penrose max {worst_penrose:.2e}; beta defect max {worst_beta:.2e}",
            search_graphs.len(),
            search_mismatch,
            aut_graphs.len(),
            aut_mismatch
        ),
    );
}

#[test]
fn criterion_11_filter_soundness() {
    let census = census_up_to_seven();
    let mut false_rejections = Vec::new();
    for (r, g, fs) in census {
        assert!(!fs.is_empty());
        let checks = [
            ("symm_diff_filter", symm_diff_filter(g).is_reject()),
            ("regular_filters", regular_filters(g).is_reject()),
            (
                "zero_eigenvalue_filter",
                zero_eigenvalue_filter(g).is_reject(),
            ),
            ("contains_p3_or_c4", contains_p3_or_c4(g).is_none()),
        ];
        for (name, bad) in checks {
            if bad {
                false_rejections.push(format!("{name} on {}", r.graph6));
            }
        }
    }
    criterion(
        11,
        &[("zero false rejections", false_rejections.is_empty())],
        format!(
            "{} census graphs; false rejections {false_rejections:?}",
            census.len()
        ),
    );
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn criterion_12_p_dm_coherence() {
    let census = census_up_to_seven();
    let mut reductions = 0;
    let mut reduction_failures = 0;
    let mut unit_cases = 0;
    let mut unique_failures = Vec::new();
    for (r, g, fs) in census {
        let n = g.order();
        let k = r.magic_constant;
        for p in 2..=13 {
            for f in fs {
                reductions += 1;
                let fp = reduce_mod_p(f, p).unwrap();
                if verify_p_distance_magic(g, &fp).map(|c| c.constant) != Ok(k % p as u64) {
                    reduction_failures += 1;
                }
            }
            if gcd(n * (n + 1) / 2 % p, p) == 1 {
                unit_cases += 1;
                let constants: BTreeSet<u64> = find_p_dm_labelings(g, p, &SearchConfig::default())
                    .unwrap()
                    .into_iter()
                    .map(|(_, c)| c.constant)
                    .collect();
                if constants.len() != 1 {
                    unique_failures.push(format!("{} p={p}: {constants:?}", r.graph6));
                }
            }
        }
    }
    criterion(
        12,
        &[
            ("reductions verify with k mod p", reduction_failures == 0),
            ("unique constants when n(n+1)/2 is a unit", unique_failures.is_empty()),
        ],
        format!(
            "{reductions} reductions, {reduction_failures} failures; {unit_cases} unit cases, non-unique {unique_failures:?}"
        ),
    );
}
