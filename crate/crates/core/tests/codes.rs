mod common;

use common::BIPARTITE_ROWS;
use elc_core::bits::{bit, members};
use elc_core::codes::*;
use elc_core::constructions::*;
use elc_core::enumeration::{
    builtin_self_dual_codes, connected_graphs, self_dual_orbit_survey, GraphClass, OrbitCensus, OrbitSizeClass,
};
use elc_core::orbit::{sided_elc_orbit, OrbitKind};
use elc_core::{BitMatrix, ConstructionSpec, Graph};

/// Minimum weight of the code whose generator is `(I | P)` with the rows
/// of `P` read off the neighborhoods of `info`: a nonempty subset `S` of
/// `info` gives a codeword of weight `|S|` plus the size of the symmetric
/// difference of the neighborhoods in `S`.
fn oracle_distance(g: &Graph, info: u64) -> usize {
    let rows: Vec<u64> = members(info).map(|v| g.nbrs(v)).collect();
    let k = rows.len();
    (1u64..1 << k)
        .map(|s| {
            let x = members(s).fold(0u64, |acc, i| acc ^ rows[i]);
            s.count_ones() as usize + x.count_ones() as usize
        })
        .min()
        .unwrap()
}

fn report(spec: &str, info_smaller: bool) -> CodeReport {
    let g = spec.parse::<ConstructionSpec>().unwrap().build().unwrap();
    let p = g.bipartition().unwrap();
    let small = p.side(p.smaller_side());
    let info = if info_smaller { small } else { g.vertices() & !small };
    code_report(&g, info, None).unwrap()
}

#[test]
fn orbit_distance_matches_oracle_up_to_eight_vertices() {
    for n in 2..=8 {
        for g in connected_graphs(n, true, false).unwrap() {
            let p = g.bipartition().unwrap();
            for info in [p.left, p.right] {
                let want = oracle_distance(&g, info);
                assert_eq!(min_distance_via_orbit(&g, info, None).unwrap(), Some(want));
                assert_eq!(code_from_side(&g, info).unwrap().min_distance_bruteforce().unwrap(), want);
            }
        }
    }
}

#[test]
fn named_parameters() {
    let r = report("h3", false);
    assert_eq!(r.params.to_string(), "[7,4,3]");
    assert_eq!(r.dual_params.to_string(), "[7,3,4]");
    let r = report("he3", true);
    assert_eq!(r.params.to_string(), "[8,4,4]");
    assert!(r.self_dual);
    let r = report("H(s2)", true);
    assert_eq!(r.params.to_string(), "[14,7,4]");
    assert!(r.self_dual);
    for n in 2..=9 {
        let r = report(&format!("s{n}"), true);
        assert_eq!(r.params, CodeParams::new(n, 1, n));
        assert_eq!(r.dual_params, CodeParams::new(n, n - 1, 2));
    }
}

#[test]
fn hamming_expansion_prediction() {
    let (c, d) = predict_hamming_expansion_params(3, 1).unwrap();
    assert_eq!((c.to_string(), d.to_string()), ("[21,10,4]".to_string(), "[21,11,4]".to_string()));
    let g = hamming_expansion(&star_graph(3).unwrap()).unwrap();
    let p = g.bipartition().unwrap();
    let mut got: Vec<String> = [p.left, p.right]
        .iter()
        .map(|&s| code_from_side(&g, s).unwrap().params().unwrap().to_string())
        .collect();
    got.sort();
    assert_eq!(got, vec!["[21,10,4]", "[21,11,4]"]);
}

#[test]
fn star_expansion_predictions_match() {
    // S+ and S- of h3 at m = 2; base [7,3,4] with dual distance 3 on the
    // smaller side.
    let base = CodeParams::new(7, 3, 4);
    let (plus, plus_dual) = predict_star_expansion_params(base, 3, 2, Expansion::Plus).unwrap();
    let (minus, minus_dual) = predict_star_expansion_params(base, 3, 2, Expansion::Minus).unwrap();
    let check = |spec: &str, code: CodeParams, dual: CodeParams| {
        let g = spec.parse::<ConstructionSpec>().unwrap().build().unwrap();
        let p = g.bipartition().unwrap();
        let mut got: Vec<CodeParams> =
            [p.left, p.right].iter().map(|&s| code_from_side(&g, s).unwrap().params().unwrap()).collect();
        got.sort_by_key(|c| c.k);
        let mut want = vec![code, dual];
        want.sort_by_key(|c| c.k);
        assert_eq!(got, want, "{spec}");
    };
    check("S+2(h3)", plus, plus_dual);
    check("S-2(h3)", minus, minus_dual);
    assert_eq!(minus.to_string(), "[14,4,6]");
    assert_eq!(minus_dual.to_string(), "[14,10,2]");
}

#[test]
fn circulant_codes_are_self_dual_with_distance_four() {
    for m in 3..=5 {
        let g = circulant_size_two(m).unwrap();
        let p = g.bipartition().unwrap();
        let c = code_from_side(&g, p.left).unwrap();
        assert!(c.is_self_dual());
        assert_eq!(c.params().unwrap(), CodeParams::new(4 * m, 2 * m, 4));
        assert_eq!(oracle_distance(&g, p.left), 4);
    }
}

#[test]
fn self_dual_survey_of_builtins() {
    let rows = self_dual_orbit_survey(&builtin_self_dual_codes().unwrap()).unwrap();
    let got: Vec<(String, OrbitSizeClass, bool)> = rows.iter().map(|r| (r.name.clone(), r.orbit, r.self_dual)).collect();
    assert_eq!(
        got,
        vec![
            ("he3".into(), OrbitSizeClass::One, true),
            ("H(s2)".into(), OrbitSizeClass::One, true),
            ("circ(3)".into(), OrbitSizeClass::Two, true),
            ("circ(4)".into(), OrbitSizeClass::Two, true),
            ("circ(5)".into(), OrbitSizeClass::Two, true),
        ]
    );
}

#[test]
fn isodual_detection() {
    assert_eq!(report("he3", true).isodual, Isodual::Yes);
    assert_eq!(report("h3", true).isodual, Isodual::No);
    let g = circulant_size_two(3).unwrap();
    let p = g.bipartition().unwrap();
    assert_eq!(is_isodual_via_orbit(&g, p.left, None).unwrap(), Some(true));
}

#[test]
fn graph_code_roundtrip() {
    let g = hamming_graph(3).unwrap();
    let p = g.bipartition().unwrap();
    let c = code_from_side(&g, p.left).unwrap();
    let (h, q) = graph_from_code(&c).unwrap();
    assert!(elc_core::are_isomorphic(&g, &h));
    let c2 = code_from_side(&h, q.left).unwrap();
    assert!(are_equivalent(&c, &c2).unwrap());
    assert_eq!(c.weight_distribution().unwrap(), c2.weight_distribution().unwrap());
}

#[test]
fn generator_text_input() {
    let g = BitMatrix::from_text("# [7,4,3]\n1000110\n0100011\n0010111\n0001101\n").unwrap();
    let c = LinearCode::new(g).unwrap();
    assert_eq!(c.params().unwrap().to_string(), "[7,4,3]");
    assert_eq!(c.dual().params().unwrap().to_string(), "[7,3,4]");
    assert!(LinearCode::new(BitMatrix::from_text("11\n11\n").unwrap()).is_err());
}

#[test]
fn iterated_hamming_expansions_stay_self_dual() {
    for base in [IterBase::ExtendedHamming3, IterBase::Star2] {
        for r in 0..=2 {
            let rep = iterated_hamming_self_dual(r, base).unwrap();
            assert!(rep.self_dual, "{base:?} r={r}");
        }
    }
    let rep = iterated_hamming_self_dual(1, IterBase::Star2).unwrap();
    assert_eq!(rep.params.to_string(), "[14,7,4]");
}

#[test]
fn report_serializes_parameters_as_strings() {
    let v = serde_json::to_value(report("he3", true)).unwrap();
    assert_eq!(v["params"], "[8,4,4]");
    assert_eq!(v["isodual"], true);
    assert_eq!(v["self_dual"], true);
    assert_eq!(v["weight_distribution"], serde_json::json!([1, 0, 0, 0, 14, 0, 0, 0, 1]));
}

fn table_graphs() -> Vec<(&'static str, Graph)> {
    BIPARTITE_ROWS
        .iter()
        .flat_map(|(_, names)| names.iter())
        .map(|&name| (name, name.parse::<ConstructionSpec>().unwrap().build().unwrap()))
        .collect()
}

#[test]
fn orbit_distance_matches_oracle_on_table_graphs() {
    for (name, g) in table_graphs() {
        let p = g.bipartition().unwrap();
        for info in [p.left, p.right] {
            if info.count_ones() > 20 {
                continue;
            }
            let want = oracle_distance(&g, info);
            assert_eq!(min_distance_via_orbit(&g, info, None).unwrap(), Some(want), "{name}");
        }
    }
}

#[test]
fn elc_keeps_the_code_up_to_equivalence() {
    // Pivoting on {u, v} moves u and v across the bipartition, so the
    // information set follows them.
    let check = |g: &Graph, exact: bool| {
        let p = g.bipartition().unwrap();
        for info in [p.left, p.right] {
            let c = code_from_side(g, info).unwrap();
            let wd = c.weight_distribution().unwrap();
            for (u, v) in g.edges() {
                let h = g.elc(u, v).unwrap();
                let d = code_from_side(&h, info ^ bit(u) ^ bit(v)).unwrap();
                assert_eq!(d.weight_distribution().unwrap(), wd);
                if exact {
                    assert!(are_equivalent(&c, &d).unwrap());
                }
            }
        }
    };
    for n in 2..=8 {
        for g in connected_graphs(n, true, false).unwrap() {
            check(&g, true);
        }
    }
    for (_, g) in table_graphs() {
        let p = g.bipartition().unwrap();
        if p.left.count_ones() <= 20 && p.right.count_ones() <= 20 {
            check(&g, g.order() <= 12);
        }
    }
}

#[test]
fn preserved_graphs_have_one_standard_form() {
    let mut census = OrbitCensus::new(OrbitKind::Elc, true);
    let mut seen = 0;
    for n in 2..=10 {
        for (key, class) in census.preserved(n).unwrap() {
            assert_eq!(class, GraphClass::Bipartite);
            let g = key.to_graph();
            let p = g.bipartition().unwrap();
            for info in [p.left, p.right] {
                assert_eq!(sided_elc_orbit(&g, info, 1 << 20).unwrap().keys.len(), 1, "{}", key.graph6());
            }
            seen += 1;
        }
    }
    assert_eq!(seen, 15);
    let p4 = elc_core::graph6::decode("Ch").unwrap();
    assert!(sided_elc_orbit(&p4, p4.bipartition().unwrap().left, 1 << 20).unwrap().keys.len() > 1);
}

#[test]
fn dual_is_an_involution_and_orthogonal() {
    for n in 2..=7 {
        for g in connected_graphs(n, true, false).unwrap() {
            let p = g.bipartition().unwrap();
            for info in [p.left, p.right] {
                let c = code_from_side(&g, info).unwrap();
                let d = c.dual();
                assert!(c.generator().mul_transpose(d.generator()).is_zero());
                assert_eq!(d.length(), c.length());
                assert_eq!(d.dimension(), c.length() - c.dimension());
                assert!(are_equivalent(&d.dual(), &c).unwrap());
            }
        }
    }
}
