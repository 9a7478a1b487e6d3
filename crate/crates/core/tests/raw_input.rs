//! Hand-built strand diagrams and plabic graphs, read from JSON, that break
//! the axioms in controlled ways.

use scottmap::plabic::{check_rhombic, g_inverse, parse_plabic, trip_perm, RhombicAxiom};
use scottmap::strandmap::{is_absolute, is_minimalist, parse_strand_map, shrink, AbsoluteAxiom};
use scottmap::Error;

/// Strands A: 1+ → 2-, B: 3+ → 3-, C: 2+ → 1-. A and B bound a digon that
/// both traverse in the same direction; C crosses A twice outside it.
const PARALLEL_DIGON: &str = r#"{
  "n": 3,
  "crossings": [
    {"id": 0, "darts": [1, 6, 2, 5], "strand_pairs": [[1, 2], [5, 6]]},
    {"id": 1, "darts": [6, 3, 7, 2], "strand_pairs": [[2, 3], [6, 7]]},
    {"id": 2, "darts": [9, 4, 8, 3], "strand_pairs": [[3, 4], [8, 9]]},
    {"id": 3, "darts": [10, 0, 9, 1], "strand_pairs": [[0, 1], [9, 10]]}
  ],
  "endpoints": [
    {"label": "1+", "dart": 0}, {"label": "2-", "dart": 4},
    {"label": "3+", "dart": 5}, {"label": "3-", "dart": 7},
    {"label": "2+", "dart": 8}, {"label": "1-", "dart": 10}
  ]
}"#;

/// A strand 1+ → 1- passing through a clockwise closed loop.
const CLOSED_LOOP: &str = r#"{
  "n": 1,
  "crossings": [
    {"id": 0, "darts": [0, 3, 1, 4], "strand_pairs": [[0, 1], [4, 3]]},
    {"id": 1, "darts": [1, 3, 2, 4], "strand_pairs": [[1, 2], [3, 4]]}
  ],
  "endpoints": [{"label": "1+", "dart": 0}, {"label": "1-", "dart": 2}]
}"#;

/// Three chords i+ → (i+1)- with no crossings.
const SHORT_CHORDS: &str = r#"{
  "n": 3,
  "crossings": [],
  "endpoints": [
    {"label": "1+", "dart": 0}, {"label": "2-", "dart": 0},
    {"label": "2+", "dart": 1}, {"label": "3-", "dart": 1},
    {"label": "3+", "dart": 2}, {"label": "1-", "dart": 2}
  ]
}"#;

#[test]
fn parallel_digon_is_not_absolute() {
    let m = parse_strand_map(PARALLEL_DIGON).unwrap();
    let v = m.absolute_violations();
    assert!(v.contains(&AbsoluteAxiom::OrientedDigons), "{v:?}");
    assert!(!v.contains(&AbsoluteAxiom::Alternation), "{v:?}");
    assert!(!is_absolute(&m));
    assert!(!is_minimalist(&m));
    assert!(matches!(shrink(&m), Err(Error::NotMinimalist)));
    assert_eq!(m.boundary_permutation().unwrap().images(), &[2, 1, 3]);
}

#[test]
fn closed_loop_is_not_absolute() {
    let m = parse_strand_map(CLOSED_LOOP).unwrap();
    let v = m.absolute_violations();
    assert!(v.contains(&AbsoluteAxiom::NoClosedLoop), "{v:?}");
    assert!(!is_minimalist(&m));
}

#[test]
fn crossing_free_chords_are_absolute_but_not_minimalist() {
    let m = parse_strand_map(SHORT_CHORDS).unwrap();
    assert!(is_absolute(&m));
    assert!(!is_minimalist(&m));
    assert_eq!(m.boundary_permutation().unwrap().images(), &[2, 3, 1]);
}

#[test]
fn mirrored_crossing_breaks_planarity() {
    // reflect crossing 0 of the digon diagram: same pairs, reversed rotation
    let raw = PARALLEL_DIGON.replace(r#""darts": [1, 6, 2, 5]"#, r#""darts": [1, 5, 2, 6]"#);
    assert!(matches!(parse_strand_map(&raw), Err(Error::NonPlanar(_))));
}

#[test]
fn non_transversal_pairs_are_rejected() {
    let raw = PARALLEL_DIGON.replace(r#"[[1, 2], [5, 6]]"#, r#"[[1, 6], [5, 2]]"#);
    assert!(matches!(parse_strand_map(&raw), Err(Error::MalformedInput(_))));
}

#[test]
fn garbage_strand_json_is_malformed() {
    assert!(matches!(parse_strand_map("{\"n\": 3}"), Err(Error::MalformedInput(_))));
    assert!(matches!(parse_strand_map("not json"), Err(Error::MalformedInput(_))));
    let bad_label = SHORT_CHORDS.replace("\"3+\"", "\"3*\"");
    assert!(parse_strand_map(&bad_label).is_err());
}

/// The triangle's star with an extra black leaf on the black node.
const BLACK_LEAF: &str = r#"{
  "n": 3,
  "nodes": [
    {"id": 0, "color": "white", "label": 1, "rotation": ["tag", 0]},
    {"id": 1, "color": "white", "label": 2, "rotation": ["tag", 1]},
    {"id": 2, "color": "white", "label": 3, "rotation": ["tag", 2]},
    {"id": 3, "color": "black", "rotation": [0, 1, 2, 3]},
    {"id": 4, "color": "black", "rotation": [3]}
  ],
  "edges": [
    {"id": 0, "ends": [0, 3]}, {"id": 1, "ends": [1, 3]},
    {"id": 2, "ends": [2, 3]}, {"id": 3, "ends": [3, 4]}
  ]
}"#;

/// Whites 1, 3, 5 around a hexagonal closed face, each black node carrying
/// one leaf (2, 4, 6).
const HEXAGON: &str = r#"{
  "n": 6,
  "nodes": [
    {"id": 1, "color": "white", "label": 1, "rotation": ["tag", 0, 8]},
    {"id": 2, "color": "white", "label": 2, "rotation": ["tag", 1]},
    {"id": 3, "color": "white", "label": 3, "rotation": ["tag", 3, 2]},
    {"id": 4, "color": "white", "label": 4, "rotation": ["tag", 4]},
    {"id": 5, "color": "white", "label": 5, "rotation": ["tag", 6, 5]},
    {"id": 6, "color": "white", "label": 6, "rotation": ["tag", 7]},
    {"id": 10, "color": "black", "rotation": [0, 1, 2]},
    {"id": 11, "color": "black", "rotation": [3, 4, 5]},
    {"id": 12, "color": "black", "rotation": [6, 7, 8]}
  ],
  "edges": [
    {"id": 0, "ends": [1, 10]}, {"id": 1, "ends": [2, 10]}, {"id": 2, "ends": [3, 10]},
    {"id": 3, "ends": [3, 11]}, {"id": 4, "ends": [4, 11]}, {"id": 5, "ends": [5, 11]},
    {"id": 6, "ends": [5, 12]}, {"id": 7, "ends": [6, 12]}, {"id": 8, "ends": [1, 12]}
  ]
}"#;

#[test]
fn black_leaf_fails_degree_axiom() {
    let g = parse_plabic(BLACK_LEAF).unwrap();
    let r = check_rhombic(&g);
    assert!(!r.passes);
    assert!(r.violations.contains(&RhombicAxiom::B), "{r:?}");
    assert!(r.violations.contains(&RhombicAxiom::FullyReduced), "{r:?}");
    assert!(matches!(g_inverse(&g), Err(Error::NotRhombic)));
    assert!(matches!(trip_perm(&g), Err(Error::NotRhombic)));
}

#[test]
fn hexagonal_face_fails_quadrilateral_axiom() {
    let g = parse_plabic(HEXAGON).unwrap();
    let closed: Vec<usize> = g.faces().iter().filter(|f| f.closed).map(|f| f.half_edges.len()).collect();
    assert_eq!(closed, vec![6]);
    let r = check_rhombic(&g);
    assert!(r.violations.contains(&RhombicAxiom::C), "{r:?}");
    assert!(r.violations.contains(&RhombicAxiom::D), "{r:?}");
    assert!(!r.violations.contains(&RhombicAxiom::A));
    assert!(!r.violations.contains(&RhombicAxiom::B));
}

#[test]
fn inconsistent_plabic_input_is_rejected() {
    // edge 1 listed at a node it does not touch
    let raw = BLACK_LEAF.replace(r#""rotation": ["tag", 2]"#, r#""rotation": ["tag", 2, 1]"#);
    assert!(matches!(parse_plabic(&raw), Err(Error::MalformedInput(_))));
    // a label without a tag
    let raw = BLACK_LEAF.replace(r#""rotation": ["tag", 0]"#, r#""rotation": [0]"#);
    assert!(matches!(parse_plabic(&raw), Err(Error::MalformedInput(_))));
    // swapping two edges at the centre of the hexagon graph's black node breaks planarity
    let raw = HEXAGON.replace(r#""rotation": [0, 1, 2]"#, r#""rotation": [0, 2, 1]"#);
    assert!(matches!(parse_plabic(&raw), Err(Error::NonPlanar(_))));
}

/// Strands X: 1+ → 3-, Y: 2+ → 1-, Z: 3+ → 2-, each pair crossing once
/// around a clockwise central triangle. Same boundary permutation as the
/// triangle's diagram, which has a counterclockwise centre.
const CLOCKWISE_CENTRE: &str = r#"{
  "n": 3,
  "crossings": [
    {"id": 0, "darts": [7, 0, 8, 1], "strand_pairs": [[0, 1], [7, 8]]},
    {"id": 1, "darts": [4, 1, 3, 2], "strand_pairs": [[3, 4], [1, 2]]},
    {"id": 2, "darts": [6, 5, 7, 4], "strand_pairs": [[4, 5], [6, 7]]}
  ],
  "endpoints": [
    {"label": "1+", "dart": 0}, {"label": "3-", "dart": 2},
    {"label": "2+", "dart": 3}, {"label": "1-", "dart": 5},
    {"label": "3+", "dart": 6}, {"label": "2-", "dart": 8}
  ]
}"#;

#[test]
fn clockwise_interior_face_is_not_minimalist() {
    use scottmap::strandmap::{build_strand_map, FaceClass};
    let m = parse_strand_map(CLOCKWISE_CENTRE).unwrap();
    let centre: Vec<_> = m.disk_faces().filter(|f| f.is_interior()).collect();
    assert_eq!(centre.len(), 1);
    assert_eq!(centre[0].class, FaceClass::Clockwise);
    assert!(is_absolute(&m));
    assert!(!is_minimalist(&m));
    let triangle = build_strand_map(&scottmap::Tiling::untile(3).unwrap());
    assert_eq!(m.boundary_permutation().unwrap(), triangle.boundary_permutation().unwrap());
    assert!(is_minimalist(&triangle));
}

/// Strand diagram of a plabic graph: one crossing per edge, strands follow
/// trips. Along an edge drawn from its white end (south) to its black end
/// (north), the strand heading north enters from the south-west and leaves
/// to the north-east; the one heading south enters from the north-west and
/// leaves to the south-east.
fn medial_json(g: &scottmap::plabic::PlabicGraph) -> String {
    use scottmap::plabic::{Color, Slot};
    use serde_json::json;
    let other = |e: usize, v: usize| {
        let (a, b) = g.edges()[e];
        if a == v {
            b
        } else {
            a
        }
    };
    // per edge: (in, out) darts of the northbound and southbound strands
    let mut north = vec![None; g.edges().len()];
    let mut south = vec![None; g.edges().len()];
    let mut endpoints = Vec::new();
    let mut next_dart = 0u64;
    for i in 1..=g.n() {
        let mut v = g.tagged_node(i);
        let mut came = Slot::Tag;
        let mut dart = next_dart;
        next_dart += 1;
        endpoints.push(json!({"label": format!("{i}+"), "dart": dart}));
        loop {
            let rot = g.rotation(v);
            let k = rot.iter().position(|s| *s == came).unwrap();
            let len = rot.len();
            let out = match g.nodes()[v].color {
                Color::White => rot[(k + 1) % len],
                Color::Black => rot[(k + len - 1) % len],
            };
            match out {
                Slot::Tag => {
                    let j = g.nodes()[v].label.unwrap();
                    endpoints.push(json!({"label": format!("{j}-"), "dart": dart}));
                    break;
                }
                Slot::Edge(e) => {
                    let leaving = next_dart;
                    next_dart += 1;
                    if g.nodes()[v].color == Color::White {
                        north[e] = Some((dart, leaving));
                    } else {
                        south[e] = Some((dart, leaving));
                    }
                    dart = leaving;
                    v = other(e, v);
                    came = Slot::Edge(e);
                }
            }
        }
    }
    let crossings: Vec<_> = (0..g.edges().len())
        .map(|e| {
            let (n_in, n_out) = north[e].unwrap();
            let (s_in, s_out) = south[e].unwrap();
            json!({
                "id": e,
                "darts": [n_out, s_out, n_in, s_in],
                "strand_pairs": [[n_in, n_out], [s_in, s_out]],
            })
        })
        .collect();
    json!({"n": g.n(), "crossings": crossings, "endpoints": endpoints}).to_string()
}

#[test]
fn medial_diagram_of_each_image_shrinks_back() {
    use scottmap::enumerate::generate_all;
    use scottmap::plabic::g_map;
    use scottmap::scott::scott_perm;
    for n in 3..=7 {
        for t in generate_all(n).unwrap() {
            let m = parse_strand_map(&medial_json(&g_map(&t))).unwrap();
            assert!(is_minimalist(&m), "{t}");
            assert_eq!(shrink(&m).unwrap(), t);
            assert_eq!(m.boundary_permutation().unwrap(), scott_perm(&t));
        }
    }
}

#[test]
fn hexagonal_alternating_face_is_not_minimalist() {
    use scottmap::strandmap::FaceClass;
    let m = parse_strand_map(&medial_json(&parse_plabic(HEXAGON).unwrap())).unwrap();
    let hexagons = m
        .disk_faces()
        .filter(|f| f.class == FaceClass::Alternating && f.strand_sides == 6)
        .count();
    assert_eq!(hexagons, 1);
    assert!(is_absolute(&m));
    assert!(!is_minimalist(&m));
    assert!(matches!(shrink(&m), Err(Error::NotMinimalist)));
}
