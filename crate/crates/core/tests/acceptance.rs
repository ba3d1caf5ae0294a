//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Expected values come from the brute-force oracles in `common`, or are
//! fixed by hand for the named small instances.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use common::*;
use ids_core::generate::random_odd_degree;
use ids_core::{
    build_idsc_gadget, build_mids_gadget, build_scb_gadget, check_ids, check_ids_tree, check_scb, collapse_ids,
    enumerate_valid_profiles, is_valid_profile, lift_profile, odd_transform, parse_graph, project_profile,
    solve_mids_exact, solve_mids_exact_with, solve_mids_tree, solve_spp, EnumerationConfig, Graph, IntegerSet,
    VertexSet,
};
use rand::seq::SliceRandom;
use rand::Rng;

struct Criterion {
    name: &'static str,
    budget: Duration,
    run: fn() -> String,
}

fn fixture(name: &str) -> Graph {
    let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    parse_graph(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn ints(values: &[u64]) -> IntegerSet {
    IntegerSet::new(values.to_vec()).unwrap()
}

fn profile_oracle() -> String {
    let mut rng = rng(1001);
    let mut profiles = 0;
    for _ in 0..200 {
        let n = rng.gen_range(1..=12);
        let g = random_gnp(n, 0.3, &mut rng);
        let u = enumerate_valid_profiles(&g, None).unwrap();
        assert!(u.is_complete());
        assert_eq!(u.masks(), naive_valid_profiles(&g).as_slice(), "graph {}", g.to_json());
        profiles += u.len();
    }
    format!("200 graphs, {profiles} profiles")
}

fn transform_bijection() -> String {
    let mut rng = rng(1002);
    for _ in 0..100 {
        let n = rng.gen_range(1..=10);
        let g = random_gnp(n, 0.3, &mut rng);
        let (gp, map) = odd_transform(&g);
        assert!((0..gp.vertex_count()).all(|v| gp.neighbors(v).len() % 2 == 1));
        let u = naive_valid_profiles(&g);
        let up = naive_valid_profiles(&gp);
        assert_eq!(u.len(), up.len(), "graph {}", g.to_json());
        let mut lifted = Vec::new();
        for &m in &u {
            let p = ids_core::OpinionProfile::from_mask(n, m);
            let l = lift_profile(&map, &p).unwrap();
            assert_eq!(project_profile(&map, &gp, &l).unwrap(), p);
            lifted.push(l.to_mask().unwrap());
        }
        lifted.sort_unstable();
        assert_eq!(lifted, up);
        for &m in &up {
            let p = ids_core::OpinionProfile::from_mask(gp.vertex_count(), m);
            let back = project_profile(&map, &gp, &p).unwrap();
            assert_eq!(lift_profile(&map, &back).unwrap(), p);
        }
    }
    "100 graphs".into()
}

/// A random vertex cover: greedy over shuffled edges, plus random extras.
fn sample_cover(g: &Graph, rng: &mut rand::rngs::StdRng) -> u64 {
    let mut edges: Vec<_> = g.edges().collect();
    edges.shuffle(rng);
    let mut mask = 0u64;
    for (a, b) in edges {
        if mask >> a & 1 == 0 && mask >> b & 1 == 0 {
            mask |= 1 << if rng.gen_bool(0.5) { a } else { b };
        }
    }
    for v in 0..g.vertex_count() {
        if rng.gen_bool(0.15) {
            mask |= 1 << v;
        }
    }
    mask
}

fn covers_are_ids() -> String {
    let mut rng = rng(1003);
    let mut sampled = 0;
    for _ in 0..100 {
        let n = 2 * rng.gen_range(1..=6);
        let g = random_odd_degree(n, 0.3, &mut rng);
        assert!((0..n).all(|v| g.neighbors(v).len() % 2 == 1));
        let u = enumerate_valid_profiles(&g, None).unwrap();
        let valid = naive_valid_profiles(&g);
        for _ in 0..10 {
            let mask = sample_cover(&g, &mut rng);
            assert!(covers(&g, mask));
            let d = VertexSet::from_mask(n, mask);
            assert!(check_ids(&g, &d, Some(&u)).unwrap().is_ids, "graph {} cover {d:?}", g.to_json());
            assert!(naive_is_ids(&valid, mask));
            sampled += 1;
        }
    }
    format!("100 graphs, {sampled} covers, 0 failures")
}

fn transfer_through_transform() -> String {
    let mut rng = rng(1004);
    for _ in 0..50 {
        let n = rng.gen_range(1..=8);
        let g = random_gnp(n, 0.3, &mut rng);
        let (gp, map) = odd_transform(&g);
        let u = enumerate_valid_profiles(&g, None).unwrap();
        let smallest = masks_by_size(gp.vertex_count())
            .into_iter()
            .find(|&m| {
                let d = collapse_ids(&map, &VertexSet::from_mask(gp.vertex_count(), m)).unwrap();
                check_ids(&g, &d, Some(&u)).unwrap().is_ids
            })
            .unwrap()
            .count_ones() as usize;
        let r = solve_mids_exact(&g, None).unwrap();
        assert!(r.optimal);
        assert_eq!(r.size, smallest, "graph {}", g.to_json());
        assert_eq!(r.size, naive_min_ids(&g));
    }
    "50 graphs".into()
}

fn forests() -> String {
    let mut rng = rng(1005);
    for _ in 0..200 {
        let n = rng.gen_range(1..=14);
        let g = random_forest(n, &mut rng);
        let tree = solve_mids_tree(&g).unwrap();
        let exact = solve_mids_exact(&g, None).unwrap();
        assert_eq!(tree.size, exact.size, "forest {}", g.to_json());
        assert!(check_ids(&g, &tree.set, None).unwrap().is_ids);
    }
    for _ in 0..1000 {
        let n = rng.gen_range(1..=12);
        let g = random_forest(n, &mut rng);
        let d = VertexSet::from_mask(n, rng.gen_range(0..1u64 << n));
        assert_eq!(
            check_ids_tree(&g, &d).unwrap(),
            naive_is_ids(&naive_valid_profiles(&g), d.to_mask().unwrap()),
            "forest {} set {d:?}",
            g.to_json()
        );
        assert_eq!(check_ids_tree(&g, &d).unwrap(), check_ids(&g, &d, None).unwrap().is_ids);
    }
    "200 forests, 1000 checker pairs".into()
}

fn partition_by_brute_force(values: &[u64]) -> bool {
    let total: u64 = values.iter().sum();
    (0..1u64 << values.len()).any(|m| {
        let side: u64 = (0..values.len()).filter(|i| m >> i & 1 == 1).map(|i| values[i]).sum();
        2 * side == total
    })
}

fn partition_vs_bisection() -> String {
    let sets: [&[u64]; 6] = [&[1], &[1, 1], &[1, 2], &[1, 1, 2], &[2, 2], &[1, 1, 1]];
    let mut yes = 0;
    for s in sets {
        let set = ints(s);
        let spp = solve_spp(&set);
        assert_eq!(spp.is_some(), partition_by_brute_force(s), "S = {s:?}");
        let (g, _) = build_scb_gadget(&set);
        let scb = check_scb(&g, None).unwrap();
        assert_eq!(spp.is_some(), scb.is_some(), "S = {s:?}");
        if let Some(b) = scb {
            assert_eq!(b.side_a.len(), b.side_b.len());
            for v in 0..g.vertex_count() {
                let inside = b.side_a.contains(v);
                let same = g.neighbors(v).iter().filter(|&&u| b.side_a.contains(u) == inside).count();
                assert!(2 * same > g.neighbors(v).len());
            }
            yes += 1;
        }
    }
    format!("6 sets, {yes} partitionable")
}

fn bisection_vs_ids() -> String {
    let (tt, d, meta) = build_idsc_gadget(&two_triangles()).unwrap();
    assert_eq!(tt.vertex_count(), 14);
    assert_eq!(d.len(), 12);
    assert!(meta.connector_ids.is_some_and(|c| c.iter().all(|v| !d.contains(*v))));
    let r = check_ids(&tt, &d, None).unwrap();
    assert!(!r.is_ids);
    let (a, b) = r.witness.expect("witness for a non-IDS");
    assert!(is_valid_profile(&tt, &a).unwrap() && is_valid_profile(&tt, &b).unwrap());
    assert_ne!(a, b);
    assert!(d.iter().all(|&v| a.get(v) == b.get(v)));
    assert!(!naive_is_ids(&naive_valid_profiles(&tt), d.to_mask().unwrap()));

    for (n, size) in [(4, 10), (6, 14)] {
        let (g, d, _) = build_idsc_gadget(&cycle(n)).unwrap();
        assert_eq!(g.vertex_count(), size);
        assert!(check_ids(&g, &d, None).unwrap().is_ids, "C{n}");
        assert!(naive_is_ids(&naive_valid_profiles(&g), d.to_mask().unwrap()));
    }
    format!("two triangles: witness {a} {b}; C4, C6: IDS")
}

fn gadget_threshold() -> String {
    let (g, threshold, _) = build_mids_gadget(&ints(&[1, 1]));
    assert_eq!((g.vertex_count(), threshold), (18, 4));
    let r = solve_mids_exact_with(&g, Some(threshold), &EnumerationConfig::default()).unwrap();
    assert_eq!(r.none_within, Some(4));
    assert!(!r.optimal);
    // every subset of size 0..=4 was tested
    let all: u128 = [1, 18, 153, 816, 3060].iter().sum();
    assert_eq!(r.subsets_tested, all);
    let mut detail = format!("{{1,1}}: no IDS of size <= 4 ({all} subsets)");

    // the non-partitionable {1,2} gadget (26 vertices) has one
    let (g, threshold, _) = build_mids_gadget(&ints(&[1, 2]));
    assert_eq!((g.vertex_count(), threshold), (26, 4));
    let r = solve_mids_exact_with(&g, Some(threshold), &EnumerationConfig::default()).unwrap();
    assert!(r.none_within.is_none() && r.size <= 4);
    assert!(check_ids(&g, &r.set, None).unwrap().is_ids);
    detail.push_str(&format!("; {{1,2}}: IDS of size {}", r.size));
    detail
}

fn ids_cli(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_ids")).args(args).output().unwrap();
    (out.status.code().unwrap(), out.stdout)
}

fn c4_regression() -> String {
    let g = cycle(4);
    let u = enumerate_valid_profiles(&g, None).unwrap();
    assert_eq!(u.len(), 6);
    assert_eq!(naive_valid_profiles(&g).len(), 6);
    let r = solve_mids_exact(&g, None).unwrap();
    assert_eq!(r.size, 3);
    assert_eq!(naive_min_ids(&g), 3);
    let c = check_ids(&g, &VertexSet::new(4, [0, 1]).unwrap(), Some(&u)).unwrap();
    assert!(!c.is_ids);
    let (a, b) = c.witness.unwrap();
    assert_eq!((a.to_string().as_str(), b.to_string().as_str()), ("0000", "0011"));

    let path = format!("{}/tests/fixtures/c4.edges", env!("CARGO_MANIFEST_DIR"));
    let runs: [(&[&str], i32, &str); 3] = [
        (&["enumerate"], 0, "|U| = 6\n"),
        (&["mids"], 0, "{v1,v2,v3} size=3 optimal\n"),
        (&["check", "v1,v2"], 1, "NOT IDS {v1,v2}\nwitness: 0000 0011\n"),
    ];
    for (cmd, code, expected) in runs {
        let mut args = vec![cmd[0], path.as_str()];
        args.extend(&cmd[1..]);
        let first = ids_cli(&args);
        assert_eq!(first, (code, expected.as_bytes().to_vec()), "ids {args:?}");
        for jobs in ["1", "3"] {
            let again = ids_cli(&[&["--jobs", jobs][..], &args].concat());
            assert_eq!(again, first, "ids --jobs {jobs} {args:?}");
        }
    }
    "|U| = 6, MIDS = 3, witness 0000 0011, CLI byte-stable".into()
}

fn separations() -> String {
    let g = fixture("mids_below_mvc.edges");
    let mids = solve_mids_exact(&g, None).unwrap().size;
    let mvc = min_vertex_cover_size(&g);
    assert_eq!(mids, naive_min_ids(&g));
    assert!(mids < mvc);

    let g = fixture("mds_not_ids.edges");
    let valid = naive_valid_profiles(&g);
    let failing = minimum_dominating_sets(&g)
        .into_iter()
        .find(|&m| !naive_is_ids(&valid, m))
        .expect("a minimum dominating set that is not an IDS");
    let d = VertexSet::from_mask(g.vertex_count(), failing);
    assert!(!check_ids(&g, &d, None).unwrap().is_ids);
    format!("MIDS {mids} < MVC {mvc}; minimum DS {} is not an IDS", d.display(&g))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { name: "valid profiles match the naive filter", budget: Duration::from_secs(60), run: profile_oracle },
        Criterion { name: "odd transform is a bijection on valid profiles", budget: Duration::from_secs(60), run: transform_bijection },
        Criterion { name: "vertex covers of odd-degree graphs are IDSs", budget: Duration::from_secs(60), run: covers_are_ids },
        Criterion { name: "minimum IDS transfers through the transform", budget: Duration::from_secs(60), run: transfer_through_transform },
        Criterion { name: "forest solver and checker match exact search", budget: Duration::from_secs(120), run: forests },
        Criterion { name: "partition iff strong bisection of the gadget", budget: Duration::from_secs(60), run: partition_vs_bisection },
        Criterion { name: "strong bisection iff candidate is not an IDS", budget: Duration::from_secs(120), run: bisection_vs_ids },
        Criterion { name: "partitionable set: no IDS within the threshold", budget: Duration::from_secs(600), run: gadget_threshold },
        Criterion { name: "C4 regression triple", budget: Duration::from_secs(60), run: c4_regression },
        Criterion { name: "separation fixtures", budget: Duration::from_secs(60), run: separations },
    ];

    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.run));
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(detail) if elapsed <= c.budget => (true, detail),
            Ok(detail) => (false, format!("{detail}; over the {:?} budget", c.budget)),
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "panicked".into());
                (false, msg)
            }
        };
        if !ok {
            failed += 1;
        }
        println!(
            "{} {:>2} {} ({detail}) [{:.2}s]",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            c.name,
            elapsed.as_secs_f64()
        );
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
