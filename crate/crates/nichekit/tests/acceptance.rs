//! End-to-end acceptance checks. Each test prints exactly one PASS/FAIL
//! line (run with `--nocapture` to see the PASS lines as they happen).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nichekit::enumerate::{niche_spectrum, Orientations};
use nichekit::graph::{bits, mask_below, Digraph, MultipartiteTournament, Partition};
use nichekit::niche::niche_graph;
use nichekit::props::canonical_form;
use nichekit::verify::{
    verify_cor2_1, verify_lem4_3, verify_lem4_5, verify_thm2_1, verify_thm2_2, verify_thm3_1,
    verify_thm3_2, verify_thm4_1, verify_thm4_2, verify_thm4_3, TheoremReport,
};
use nichekit::Graph;

fn settle(criterion: usize, what: &str, reports: &[TheoremReport]) {
    if reports.iter().all(|r| r.passed) {
        println!("PASS: criterion {criterion} — {what}");
    } else {
        println!("FAIL: criterion {criterion} — {what}");
        for r in reports.iter().filter(|r| !r.passed) {
            println!("  {r}");
        }
        panic!("criterion {criterion} failed");
    }
}

#[test]
fn criterion_1_connectivity() {
    settle(
        1,
        "niche graphs of k-partite tournaments are connected for k >= 4, all n <= 7",
        &[verify_thm2_1(7)],
    );
}

#[test]
fn criterion_2_stability_components_p6_diameter() {
    settle(
        2,
        "stability <= 3, <= 3 components, P6-free, component diameter <= 4, all k >= 3, n <= 7",
        &[verify_thm2_2(7), verify_cor2_1(7), verify_thm4_2(7)],
    );
}

#[test]
fn criterion_3_disconnected_characterization() {
    settle(
        3,
        "disconnected niche graphs for k = 3 are three cliques or expansions of P3 + K1 (n <= 7), \
         and the converse constructions round-trip",
        &[verify_thm3_1(7), verify_thm3_2(7)],
    );
}

#[test]
fn criterion_4_complete_graph_table() {
    // The exhaustive part of the No cases rests on these counts.
    let triv = Orientations::new(&Partition::new(&[1, 1, 1]).unwrap()).unwrap();
    assert_eq!(triv.count(), 8);
    let k4 = Orientations::new(&Partition::new(&[2, 1, 1]).unwrap()).unwrap();
    assert_eq!(k4.count(), 32);
    settle(
        4,
        "(K_n, k) is realizable exactly for (4,4) and n >= 5, checked for 3 <= k <= n <= 7",
        &[verify_thm4_1(7)],
    );
}

#[test]
fn criterion_5_path_and_cycle_tables() {
    settle(
        5,
        "paths realize exactly at (3,3),(4,3),(4,4),(5,3); cycles at (5,3),(5,4),(5,5),(6,3)",
        &[verify_lem4_3(6), verify_lem4_5(6)],
    );
}

#[test]
fn criterion_6_triangle_free_characterization() {
    settle(
        6,
        "connected triangle-free graphs on 3-6 vertices realize exactly per the k = 3,4,5 lists",
        &[verify_thm4_3(6)],
    );
}

fn random_tournament(rng: &mut ChaCha8Rng) -> MultipartiteTournament {
    let n = rng.gen_range(3..=10);
    let k = rng.gen_range(2..=n);
    // Random composition of n into k positive parts: k - 1 distinct cuts.
    let mut cuts = Vec::with_capacity(k + 1);
    cuts.push(0);
    while cuts.len() < k {
        let c = rng.gen_range(1..n);
        if !cuts.contains(&c) {
            cuts.push(c);
        }
    }
    cuts.push(n);
    cuts.sort_unstable();
    let sizes: Vec<usize> = cuts.windows(2).map(|w| w[1] - w[0]).collect();
    let mut arcs = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            for u in cuts[i]..cuts[i + 1] {
                for v in cuts[j]..cuts[j + 1] {
                    if rng.gen_bool(0.5) {
                        arcs.push((u, v));
                    } else {
                        arcs.push((v, u));
                    }
                }
            }
        }
    }
    MultipartiteTournament::new(&sizes, &arcs).expect("sampler emits valid tournaments")
}

fn check_converse_invariance(d: &Digraph) -> bool {
    niche_graph(d) == niche_graph(&d.converse())
}

fn check_subdigraph_monotonicity(d: &Digraph, mask: u64) -> bool {
    let vertices: Vec<usize> = bits(mask).collect();
    let sub = niche_graph(&d.induced(mask));
    let full = niche_graph(d);
    sub.edges()
        .iter()
        .all(|&(u, v)| full.has_edge(vertices[u], vertices[v]))
}

/// If some vertex has out- or in-degree >= m, the niche graph contains
/// K_m: each out- or in-neighborhood must induce a clique.
fn check_degree_bound(d: &Digraph) -> bool {
    let niche = niche_graph(d);
    (0..d.n()).all(|u| {
        [d.out_row(u), d.in_row(u)].into_iter().all(|row| {
            let members: Vec<usize> = bits(row).collect();
            members
                .iter()
                .enumerate()
                .all(|(i, &x)| members[..i].iter().all(|&y| niche.has_edge(x, y)))
        })
    })
}

#[test]
fn criterion_7_operator_properties() {
    let mut rng = ChaCha8Rng::seed_from_u64(20240917);
    let mut violations = 0u64;
    for _ in 0..10_000 {
        let t = random_tournament(&mut rng);
        let d = t.digraph();
        let mask = rng.gen::<u64>() & mask_below(d.n());
        if !check_converse_invariance(d)
            || !check_subdigraph_monotonicity(d, mask)
            || !check_degree_bound(d)
        {
            violations += 1;
        }
    }
    if violations == 0 {
        println!(
            "PASS: criterion 7 — converse invariance, subdigraph monotonicity, degree bound \
             on 10000 random tournaments"
        );
    } else {
        println!("FAIL: criterion 7 — {violations} violations in 10000 random tournaments");
        panic!("criterion 7 failed");
    }
}

#[test]
fn criterion_8_spectrum_sanity() {
    let p = Partition::new(&[1, 1, 1]).unwrap();
    let spectrum = niche_spectrum(&p, 28, false).unwrap();
    let i3 = canonical_form(&Graph::empty(3)).unwrap();
    let p3 = canonical_form(&Graph::path(3)).unwrap();
    let expected = [(i3, 2u64), (p3, 6u64)].into_iter().collect();
    if spectrum == expected {
        println!("PASS: criterion 8 — spectrum of the 3-cycle partition is {{I3: 2, P3: 6}}");
    } else {
        println!("FAIL: criterion 8 — unexpected spectrum {spectrum:?}");
        panic!("criterion 8 failed");
    }
}
