//! The bundled reference graphs against their documented facts: shapes,
//! link tables, induced-neighborhood degree multisets, planarity, and the
//! isomorphic-link witness pairs.

use linkirr::data::{builtin, counterexample12, planar16, planar18, unique6};
use linkirr::graph::{cycle, icosahedron};
use linkirr::iso::are_isomorphic;
use linkirr::link::{is_link_irregular, link, verdict_explain, witness_mapping_is_valid};
use linkirr::planar::{is_planar, is_triangulation, verify_embedding, verify_obstruction};
use linkirr::verify::COUNTEREXAMPLE12_LINK_TABLE;

#[test]
fn counterexample12_full_profile() {
    let g = counterexample12();
    assert_eq!((g.order(), g.edge_count()), (12, 42));
    assert_eq!(g.regularity(), Some(7));
    assert_eq!(g.girth(), Some(3));
    assert!(!g.is_bipartite());

    // induced neighborhood of vertex 0
    let l0 = link(&g, 0);
    assert_eq!(l0.link.order(), 7);
    assert_eq!(l0.degree_multiset, vec![2, 3, 3, 3, 4, 4, 5]);

    // the full table
    for (v, row) in linkirr::link_degree_table(&g) {
        assert_eq!(row.as_slice(), COUNTEREXAMPLE12_LINK_TABLE[v], "row {v}");
    }

    // vertex 8 row called out separately
    assert_eq!(link(&g, 8).degree_multiset, vec![3, 3, 3, 3, 3, 3, 4]);

    // L(0) vs L(6): same degree multiset, non-isomorphic links
    let l6 = link(&g, 6);
    assert_eq!(l0.degree_multiset, l6.degree_multiset);
    assert!(!are_isomorphic(&l0.link, &l6.link));
    assert_ne!(l0.canon.code, l6.canon.code);

    let verdict = is_link_irregular(&g);
    assert!(verdict.irregular);
    let text = verdict_explain(&g, &verdict).unwrap();
    assert_eq!(text.matches("code ").count(), 12);

    // dense: 42 > 3*12 - 6 = 30, and the full procedure still certifies
    let pr = is_planar(&g);
    assert!(!pr.planar);
    assert!(verify_obstruction(&g, pr.obstruction.as_ref().unwrap()));
}

#[test]
fn planar16_profile() {
    let g = planar16();
    assert_eq!((g.order(), g.edge_count()), (16, 40));
    assert_eq!(g.regularity(), Some(5));
    let pr = is_planar(&g);
    assert!(pr.planar);
    assert!(verify_embedding(&g, pr.embedding.as_ref().unwrap()));
    assert_eq!(is_triangulation(&g), Ok(false)); // 40 < 3*16 - 6

    let verdict = is_link_irregular(&g);
    assert!(!verdict.irregular);
    let w = verdict.witness.unwrap();
    assert!(witness_mapping_is_valid(&g, w.u, w.v, &w.mapping));
    // (0, 1) here; the source labels vertices from 1, making it their (1, 2)
    assert_eq!((w.u, w.v), (0, 1));
}

#[test]
fn planar18_profile() {
    let g = planar18();
    assert_eq!((g.order(), g.edge_count()), (18, 45));
    assert_eq!(g.regularity(), Some(5));
    let pr = is_planar(&g);
    assert!(pr.planar);
    assert!(verify_embedding(&g, pr.embedding.as_ref().unwrap()));

    let verdict = is_link_irregular(&g);
    assert!(!verdict.irregular);
    let w = verdict.witness.unwrap();
    assert!(witness_mapping_is_valid(&g, w.u, w.v, &w.mapping));
    assert_eq!((w.u, w.v), (0, 1));
}

#[test]
fn icosahedron_profile() {
    let g = icosahedron();
    assert_eq!((g.order(), g.edge_count()), (12, 30));
    assert_eq!(g.regularity(), Some(5));
    assert_eq!(g.edge_count(), 3 * g.order() - 6);
    assert_eq!(is_triangulation(&g), Ok(true));
    assert!(!is_link_irregular(&g).irregular);
    let c5 = cycle(5).unwrap();
    for v in 0..12 {
        assert!(are_isomorphic(&link(&g, v).link, &c5));
    }
}

#[test]
fn unique6_profile() {
    let g = unique6();
    assert_eq!(g.order(), 6);
    assert!(is_link_irregular(&g).irregular);
    assert_eq!(g.regularity(), None);
    assert_eq!(g.girth(), Some(3));
    assert!(!g.is_bipartite());
    assert!(g.degree_summary().distinct.len() <= 4); // |D| <= n - 2
    assert!(is_planar(&g).planar);
    // edge count inside the [2n-5, floor((2n^2-5n+4)/4)] window at n = 6
    assert!(g.edge_count() >= 7 && g.edge_count() <= 11);
}

#[test]
fn builtin_lookup_round_trip() {
    for name in linkirr::data::BUILTIN_NAMES {
        assert!(builtin(name).is_ok(), "{name}");
    }
    assert!(builtin("no-such-graph").is_err());
}
