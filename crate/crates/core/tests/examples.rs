//! Worked examples for each module, checked through the public API.

use std::collections::BTreeSet;

use antipath::harness::{self, Construction, ExperimentConfig, Mode};
use antipath::oracle::{enumerate_oriented_graphs, longest_antipath_len, oriented_graph_count};
use antipath::rotation::greedy_antipath;
use antipath::{
    antipath_shapes, contains_antipath_of_length, cycle_blowup, improve, integer_threshold,
    longest_anticycle, longest_antipath, random_oriented_graph, random_with_min_pd, threshold,
    AnticycleWitness, AntipathWitness, ConstructionError, Direction, GraphError, MoveKind,
    OrientedGraph, RotationError, RotationState, WalkError,
};

fn graph(n: usize, arcs: &[(usize, usize)]) -> OrientedGraph {
    OrientedGraph::from_arcs(n, arcs.iter().copied()).unwrap()
}

/// 0 -> 1 <- 2 -> 3 plus `extra`.
fn zigzag(n: usize, extra: &[(usize, usize)]) -> (OrientedGraph, AntipathWitness) {
    let mut arcs = vec![(0, 1), (2, 1), (2, 3)];
    arcs.extend_from_slice(extra);
    let g = graph(n, &arcs);
    let p = AntipathWitness::validate(&g, &[0, 1, 2, 3]).unwrap();
    (g, p)
}

#[test]
fn graph_basics() {
    let g = OrientedGraph::new(0);
    assert_eq!((g.vertex_count(), g.arc_count()), (0, 0));

    let mut g = OrientedGraph::new(2);
    g.add_arc(0, 1).unwrap();
    assert_eq!(g.add_arc(1, 0), Err(GraphError::AntiparallelArc(1, 0)));
    let mut h = OrientedGraph::new(3);
    assert_eq!(h.add_arc(2, 2), Err(GraphError::SelfLoop(2)));

    let p = g.degree_profile();
    assert_eq!((p.out_degree[0], p.in_degree[0]), (1, 0));
    assert_eq!((p.min_semidegree, p.pd()), (0, 1));
    assert_eq!(g.reverse().arcs().collect::<Vec<_>>(), vec![(1, 0)]);

    let arcless = OrientedGraph::new(5).degree_profile();
    assert_eq!((arcless.min_semidegree, arcless.pd()), (0, 0));
}

#[test]
fn blowup_profile_and_reverse() {
    let g = cycle_blowup(3, 2).unwrap();
    assert_eq!((g.vertex_count(), g.arc_count()), (6, 12));
    let p = g.degree_profile();
    assert!(p.out_degree.iter().chain(&p.in_degree).all(|&d| d == 2));
    assert_eq!((p.min_semidegree, p.pd()), (2, 2));
    assert_eq!(g.reverse().degree_profile(), p);
    // Reversing the triangle of blobs is relabelling blobs 1 and 2.
    let perm = [0, 1, 4, 5, 2, 3];
    assert_eq!(g.reverse(), g.relabel(&perm));
}

#[test]
fn edge_list_round_trip_and_errors() {
    let g = cycle_blowup(3, 2).unwrap();
    let text = g.to_edge_list();
    assert!(text.starts_with("6 12\n"));
    assert_eq!(OrientedGraph::parse_edge_list(&text).unwrap(), g);

    let e = OrientedGraph::parse_edge_list("3 2\n0 1\n1 x\n").unwrap_err();
    assert_eq!(e.line, 3);
    let e = OrientedGraph::parse_edge_list("3 2\n0 1\n1 0\n").unwrap_err();
    assert_eq!(e.line, 3);
    assert!(OrientedGraph::parse_edge_list("3 1\n0 1\n1 2\n").is_err());
}

#[test]
fn dot_export_highlights_witness() {
    let g = cycle_blowup(3, 2).unwrap();
    let w = longest_antipath(&g).unwrap();
    let dot = g.to_dot(Some(w.vertices()));
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), 12);
    assert_eq!(dot.matches("color=red").count(), 3 + 4);
}

#[test]
fn antipath_validation_examples() {
    let (g, p) = zigzag(4, &[]);
    assert_eq!(p.len(), 3);
    assert_eq!(p.start_direction(), Direction::Forward);

    let directed = graph(3, &[(0, 1), (1, 2)]);
    assert_eq!(
        AntipathWitness::validate(&directed, &[0, 1, 2]),
        Err(WalkError::AlternationBroken(1))
    );
    assert_eq!(
        AntipathWitness::validate(&g, &[0, 1, 0]),
        Err(WalkError::RepeatedVertex(0))
    );

    let back = AntipathWitness::validate(&g, &[1, 2, 3]).unwrap();
    assert_eq!(back.start_direction(), Direction::Backward);
    let s = back.to_string();
    assert_eq!(s.parse::<AntipathWitness>().unwrap(), back);
}

#[test]
fn anticycle_validation_examples() {
    let (g, _) = zigzag(4, &[(0, 3)]);
    let c = AnticycleWitness::validate(&g, &[0, 1, 2, 3]).unwrap();
    assert_eq!(c.len(), 4);

    let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
    assert!(AnticycleWitness::validate(&c4, &[0, 1, 2, 3]).is_err());

    let tri = graph(3, &[(0, 1), (2, 1), (0, 2)]);
    assert!(AnticycleWitness::validate(&tri, &[0, 1, 2]).is_err());
}

#[test]
fn shape_counts() {
    assert_eq!(antipath_shapes(1).unwrap(), 1);
    assert_eq!(antipath_shapes(3).unwrap(), 1);
    assert_eq!(antipath_shapes(4).unwrap(), 2);
    assert!(antipath_shapes(0).is_err());
}

#[test]
fn oracle_examples() {
    assert_eq!(longest_antipath_len(&graph(2, &[(0, 1)])), 1);
    assert_eq!(longest_antipath_len(&cycle_blowup(3, 1).unwrap()), 1);
    assert_eq!(longest_antipath_len(&cycle_blowup(4, 1).unwrap()), 1);

    let b = cycle_blowup(3, 2).unwrap();
    assert_eq!(longest_antipath_len(&b), 3);
    assert!(contains_antipath_of_length(&b, 4, None).is_none());
    let w = contains_antipath_of_length(&b, 3, None).unwrap();
    assert_eq!(w.len(), 3);
    w.revalidate(&b).unwrap();
    assert_eq!(longest_anticycle(&b).unwrap().len(), 4);

    let (g, _) = zigzag(4, &[(0, 3)]);
    assert_eq!(longest_anticycle(&g).unwrap().len(), 4);
    assert!(longest_anticycle(&OrientedGraph::new(4)).is_none());

    let single = graph(5, &[(3, 1)]);
    let w = contains_antipath_of_length(&single, 1, None).unwrap();
    // Lexicographically least form of the arc 3 -> 1, traversed backward.
    assert_eq!(w.vertices(), &[1, 3]);
    assert_eq!(w.start_direction(), Direction::Backward);
}

#[test]
fn enumeration_counts() {
    assert_eq!(oriented_graph_count(2), 3);
    assert_eq!(oriented_graph_count(4), 729);
    assert_eq!(oriented_graph_count(5), 59049);
    assert_eq!(enumerate_oriented_graphs(4).unwrap().count(), 729);
    assert!(enumerate_oriented_graphs(6).is_err());
    let distinct: BTreeSet<_> = enumerate_oriented_graphs(3)
        .unwrap()
        .map(|g| g.arcs().collect::<Vec<_>>())
        .collect();
    assert_eq!(distinct.len(), 27);
}

#[test]
fn rotation_state_sets() {
    let (g, p) = zigzag(5, &[(4, 1)]);
    let st = RotationState::build(&g, &p).unwrap();
    assert_eq!(st.even, vec![0, 2]);
    assert_eq!(st.odd, vec![1, 3]);
    assert!(st.f_set.contains(&0) && st.f_set.contains(&4));
    assert_eq!(st.s_set, BTreeSet::from([1]));
    assert_eq!(st.p_set, BTreeSet::from([2]));

    let b = cycle_blowup(3, 2).unwrap();
    let best = longest_antipath(&b).unwrap();
    assert_eq!(RotationState::build(&b, &best).unwrap().len(), 3);

    let even = AntipathWitness::validate(&g, &[0, 1, 2]).unwrap();
    assert!(matches!(
        RotationState::build(&g, &even),
        Err(RotationError::EvenLengthPath(2))
    ));
}

#[test]
fn rotations() {
    let (g, p) = zigzag(4, &[(0, 3)]);
    let st = RotationState::build(&g, &p).unwrap();
    let mv = st.rotate_start(1).unwrap();
    assert_eq!(mv.kind, MoveKind::SameLengthRotation);
    assert_eq!(mv.result.vertices(), &[2, 1, 0, 3]);
    assert_eq!(st.rotate_end(0).unwrap().result.vertices(), &[0, 3, 2, 1]);
    assert!(st.rotate_start(2).is_err());
    assert!(st.s_set.contains(&1) && st.p_set.contains(&2));

    let (g, p) = zigzag(4, &[]);
    let st = RotationState::build(&g, &p).unwrap();
    assert!(matches!(
        st.rotate_start(1),
        Err(RotationError::MissingArc(0, 3))
    ));
}

#[test]
fn figure1_moves() {
    let (g, p) = zigzag(5, &[(1, 3), (1, 4)]);
    let st = RotationState::build(&g, &p).unwrap();
    let got: Vec<Vec<usize>> = st
        .figure1_moves()
        .into_iter()
        .map(|m| m.result.into_vertices())
        .collect();
    assert!(got.contains(&vec![2, 3, 1, 4]));

    let (g, p) = zigzag(5, &[(4, 1)]);
    let st = RotationState::build(&g, &p).unwrap();
    let got: Vec<Vec<usize>> = st
        .figure1_moves()
        .into_iter()
        .map(|m| m.result.into_vertices())
        .collect();
    assert_eq!(got, vec![vec![4, 1, 2, 3]]);
}

#[test]
fn extension_moves_on_minimal_hosts() {
    // 0 -> 1 <- 2 -> 3, F = {4, 5} through 4 -> 1 and 5 -> 1.
    let base = [(4, 1), (5, 1), (4, 2), (5, 3)];
    let (g, p) = zigzag(6, &base);
    let st = RotationState::build(&g, &p).unwrap();
    // figure 2 needs 5 -> v_1, already present.
    let mv = st.figure2_extension(4, 5, 1).unwrap();
    assert_eq!(mv.kind, MoveKind::LengthPlusOneExtension);
    assert_eq!(mv.result.vertices(), &[2, 4, 1, 5, 3]);
    mv.result.revalidate(&g).unwrap();
    assert!(matches!(
        st.figure2_extension(4, 4, 1),
        Err(RotationError::SameVertex(4))
    ));
    assert!(matches!(
        st.figure3_extension(4, 5, 1),
        Err(RotationError::MissingArc(5, 2))
    ));

    let mut arcs = base.to_vec();
    arcs.push((5, 2));
    let (g, p) = zigzag(6, &arcs);
    let st = RotationState::build(&g, &p).unwrap();
    let mv = st.figure3_extension(4, 5, 1).unwrap();
    assert_eq!(mv.result.vertices(), &[1, 4, 2, 5, 3]);
    mv.result.revalidate(&g).unwrap();
}

#[test]
fn improve_examples() {
    let b = cycle_blowup(3, 2).unwrap();
    for (u, v) in b.arcs() {
        let start = AntipathWitness::validate(&b, &[u, v]).unwrap();
        assert_eq!(improve(&b, &start).unwrap().len(), 3);
    }
    let best = longest_antipath(&b).unwrap();
    assert_eq!(improve(&b, &best).unwrap().len(), 3);
    assert_eq!(greedy_antipath(&OrientedGraph::new(3)), None);
}

#[test]
fn audit_on_blowup_is_consistent() {
    let b = cycle_blowup(3, 2).unwrap();
    let best = longest_antipath(&b).unwrap();
    let report = RotationState::build(&b, &best).unwrap().audit_claims(4);
    assert_eq!(report.length, 3);
    assert_eq!(report.pd, 2);
    assert_eq!(report.maximality_violations().count(), 0);
}

#[test]
fn threshold_values() {
    assert_eq!(threshold(4).unwrap(), 2.0);
    assert_eq!(threshold(7).unwrap(), 4.0);
    assert_eq!(threshold(12).unwrap(), 7.0);
    for (k, d) in [(4, 3), (5, 3), (7, 5), (12, 8), (103, 57)] {
        assert_eq!(integer_threshold(k).unwrap(), d);
    }
    assert!(threshold(3).is_err());
    for k in 4..2000usize {
        let t = threshold(k).unwrap();
        assert!(t < (k - 1) as f64);
        let gap = t - k as f64 / 2.0;
        assert!((gap - (((k - 3) as f64).sqrt() - 1.0) / 2.0).abs() < 1e-9);
    }
}

#[test]
fn tightness_family_has_no_length_k_antipath() {
    for k in [4usize, 6] {
        let g = cycle_blowup(3, k / 2).unwrap();
        assert!(
            contains_antipath_of_length(&g, k, None).is_none(),
            "k = {k}"
        );
        assert_eq!(longest_antipath_len(&g), k - 1);
    }
    // Odd k with blobs of size floor(k/2).
    let g = cycle_blowup(3, 2).unwrap();
    assert!(contains_antipath_of_length(&g, 5, None).is_none());
}

#[test]
fn random_generators() {
    let empty = random_oriented_graph(6, 0.0, 1).unwrap();
    assert_eq!(empty.arc_count(), 0);
    let t = random_oriented_graph(3, 1.0, 1).unwrap();
    assert_eq!(t.arc_count(), 3);
    assert_eq!(
        random_oriented_graph(9, 0.4, 5).unwrap(),
        random_oriented_graph(9, 0.4, 5).unwrap()
    );

    for seed in 0..20 {
        assert!(
            random_with_min_pd(9, 3, seed, 100)
                .unwrap()
                .degree_profile()
                .pd()
                >= 3
        );
    }
    assert!(matches!(
        random_with_min_pd(4, 2, 0, 100),
        Err(ConstructionError::NotEnoughVertices { n: 4, d: 2 })
    ));

    let mut arc_counts = BTreeSet::new();
    for seed in 0..100 {
        let g = random_with_min_pd(10, 3, seed, 100).unwrap();
        assert!(g.degree_profile().pd() >= 3);
        arc_counts.insert(g.arc_count());
    }
    assert!(arc_counts.len() >= 2);
}

#[test]
fn harness_examples() {
    let cfg = ExperimentConfig::new(Mode::VerifyTheorem)
        .with_k(5)
        .with_n(12)
        .with_samples(500)
        .with_seed(11);
    let out = harness::run(&cfg).unwrap();
    assert_eq!((out.records.len(), out.failures()), (500, 0));

    let cfg = ExperimentConfig::new(Mode::VerifyTheorem)
        .with_k(4)
        .with_n(4);
    assert_eq!(harness::run(&cfg).unwrap_err().exit_code(), 2);

    let mut cfg = ExperimentConfig::new(Mode::ExhaustiveLemmas).with_n(4);
    cfg.k_min = Some(4);
    cfg.k_max = Some(8);
    let out = harness::run(&cfg).unwrap();
    assert_eq!((out.records.len(), out.failures()), (729, 0));

    let cfg = ExperimentConfig::new(Mode::Audit)
        .with_k(4)
        .with_n(10)
        .with_samples(500)
        .with_seed(2);
    let out = harness::run(&cfg).unwrap();
    assert_eq!(out.failures(), 0);
    assert!(out.records.iter().all(|r| r.longest.unwrap() >= 4));

    let cfg = ExperimentConfig::new(Mode::Search)
        .with_construction(Construction::Blowup { ell: 3, b: 2 });
    let r = &harness::run(&cfg).unwrap().records[0];
    assert_eq!((r.longest, r.pd), (Some(3), 2));
    assert!(r.heuristic.unwrap() <= 3);
}
