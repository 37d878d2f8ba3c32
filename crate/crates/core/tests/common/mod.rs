#![allow(dead_code)]

/// Named graphs with ELC orbit of size one, by order.
pub const BIPARTITE_ROWS: &[(usize, &[&str])] = &[
    (2, &["s2"]),
    (3, &["s3"]),
    (4, &["s4"]),
    (5, &["s5"]),
    (6, &["s6", "S-2(s3)"]),
    (7, &["s7", "h3"]),
    (8, &["s8", "S-2(s4)", "he3"]),
    (9, &["s9", "S-3(s3)"]),
    (10, &["s10", "S-2(s5)"]),
    (11, &["s11"]),
    (12, &["s12", "S-2(s6)", "S-3(s4)", "S-4(s3)", "S-2(S-2(s3))"]),
    (13, &["s13"]),
    (14, &["s14", "S-2(s7)", "S-2(h3)", "S+2(h3)", "H(s2)"]),
    (15, &["s15", "S-3(s5)", "S-5(s3)", "h4"]),
    (16, &["s16", "S-2(s8)", "S-4(s4)", "S-2(S-2(s4))", "S2(he3)", "he4"]),
];

pub const NONBIPARTITE_ROWS: &[(usize, &[&str])] = &[
    (3, &["c3"]),
    (4, &["c4"]),
    (5, &["c5"]),
    (6, &["c6", "C2(s3)"]),
    (7, &["c7"]),
    (8, &["c8", "C2(s4)"]),
    (9, &["c9", "C3(s3)", "Hkm(1,2)"]),
    (10, &["c10", "C2(s5)", "Hkm(1,3)"]),
    (11, &["c11", "Hkm(1,4)"]),
    (12, &["c12", "C2(s6)", "C3(s4)", "C4(s3)", "C2(S-2(s3))", "Hkm(1,5)"]),
];

/// Orbit counts `(n, b_n)` for connected bipartite graphs.
pub const B_N: &[(usize, u64)] = &[
    (2, 1), (3, 1), (4, 2), (5, 3), (6, 8), (7, 15), (8, 43), (9, 110), (10, 370), (11, 1260), (12, 5366),
    (13, 25684), (14, 154104), (15, 1156716),
];

/// Orbit counts `(n, nb_n)` for connected non-bipartite graphs.
pub const NB_N: &[(usize, u64)] = &[(3, 1), (4, 2), (5, 7), (6, 27), (7, 119), (8, 734), (9, 6592), (10, 104455)];

/// Counts `(n, bp_n)` of bipartite graphs with ELC orbit of size one.
pub const BP_N: &[(usize, u64)] = &[
    (2, 1), (3, 1), (4, 1), (5, 1), (6, 2), (7, 2), (8, 3), (9, 2), (10, 2), (11, 1), (12, 5), (13, 1), (14, 5),
    (15, 4), (16, 6),
];

/// Counts `(n, nbp_n)` of non-bipartite graphs with ELC orbit of size one.
pub const NBP_N: &[(usize, u64)] =
    &[(3, 1), (4, 1), (5, 1), (6, 2), (7, 1), (8, 2), (9, 3), (10, 3), (11, 2), (12, 6)];

/// Orbits of size two `(n, bipartite ELC, non-bipartite ELC, LC)`.
pub const SIZE_TWO: &[(usize, u64, u64, u64)] = &[
    (3, 0, 0, 1),
    (4, 1, 1, 1),
    (5, 2, 3, 1),
    (6, 4, 9, 2),
    (7, 6, 10, 1),
    (8, 9, 21, 1),
    (9, 12, 22, 1),
    (10, 22, 43, 1),
    (11, 22, 41, 1),
    (12, 33, 91, 1),
];

pub fn lookup(table: &[(usize, u64)], n: usize) -> u64 {
    table.iter().find(|&&(m, _)| m == n).map(|&(_, v)| v).expect("order present in table")
}
