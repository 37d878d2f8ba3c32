//! Binary linear codes and their bipartite graphs.
//!
//! A code with generator `(I | P)` corresponds to the bipartite graph with
//! adjacency `[[0, P], [P^T, 0]]`: the information coordinates form one
//! side, the redundancy coordinates the other.

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::bitmatrix::BitMatrix;
use crate::bits::{bit, members, VertexSet};
use crate::canon::sided_key;
use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph, Side};
use crate::orbit::{default_cap, sided_elc_orbit};

/// Largest dimension for codeword enumeration.
pub const MAX_ENUMERATION_DIMENSION: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    generator: BitMatrix,
    /// Standard form `(I | P)` reads column `perm[j]` of `generator` at
    /// position `j`.
    standard_p: BitMatrix,
    perm: Vec<usize>,
}

/// Reduces `generator` to `(I | P)` by row operations and a column
/// permutation. Pivots are taken in the leftmost available column. Returns
/// `P` and `perm`, where standard position `j` holds original column
/// `perm[j]`.
pub fn standard_form(generator: &BitMatrix) -> Result<(BitMatrix, Vec<usize>)> {
    let k = generator.rows();
    let n = generator.cols();
    let mut m = generator.clone();
    let mut pivots = Vec::with_capacity(k);
    let mut r = 0;
    for c in 0..n {
        if r == k {
            break;
        }
        let Some(p) = (r..k).find(|&i| m.get(i, c)) else { continue };
        m.swap_rows(p, r);
        for i in 0..k {
            if i != r && m.get(i, c) {
                m.xor_row_into(r, i);
            }
        }
        pivots.push(c);
        r += 1;
    }
    if r < k {
        return Err(Error::RankDeficient { rank: r, expected: k });
    }
    let pivot_set: HashSet<usize> = pivots.iter().copied().collect();
    let mut perm = pivots.clone();
    perm.extend((0..n).filter(|c| !pivot_set.contains(c)));
    let reduced = m.select_columns(&perm);
    Ok((reduced.submatrix(0..k, k..n), perm))
}

impl LinearCode {
    pub fn new(generator: BitMatrix) -> Result<Self> {
        if generator.rows() == 0 || generator.cols() == 0 {
            return Err(Error::InvalidParameter("generator matrix is empty".into()));
        }
        let (standard_p, perm) = standard_form(&generator)?;
        Ok(LinearCode { generator, standard_p, perm })
    }

    /// The code generated by `(I | P)`.
    pub fn from_standard_p(p: BitMatrix) -> Result<Self> {
        let g = BitMatrix::identity(p.rows()).hconcat(&p);
        LinearCode::new(g)
    }

    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    pub fn generator(&self) -> &BitMatrix {
        &self.generator
    }

    pub fn standard_p(&self) -> &BitMatrix {
        &self.standard_p
    }

    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    /// `(I | P)` in standard coordinates.
    pub fn standard_generator(&self) -> BitMatrix {
        BitMatrix::identity(self.dimension()).hconcat(&self.standard_p)
    }

    /// Generator `(P^T | I)` of the dual, mapped back to the original
    /// coordinates.
    pub fn dual(&self) -> LinearCode {
        let k = self.dimension();
        let n = self.length();
        let h_std = self.standard_p.transpose().hconcat(&BitMatrix::identity(n - k));
        let mut inverse = vec![0; n];
        for (j, &c) in self.perm.iter().enumerate() {
            inverse[c] = j;
        }
        let h = h_std.select_columns(&inverse);
        LinearCode::new(h).expect("(P^T | I) has full rank")
    }

    /// `n = 2k` and the code is contained in its dual, i.e. `P P^T = I`.
    pub fn is_self_dual(&self) -> bool {
        let k = self.dimension();
        if self.length() != 2 * k {
            return false;
        }
        let ppt = self.standard_p.mul_transpose(&self.standard_p);
        let by_p = ppt == BitMatrix::identity(k);
        debug_assert_eq!(by_p, self.generator.mul_transpose(&self.generator).is_zero());
        by_p
    }

    /// All codewords as words; requires `n <= 64` and `k <= 24`.
    pub fn codewords(&self) -> Result<Vec<u64>> {
        let (k, rows) = self.small_rows()?;
        let mut out = Vec::with_capacity(1 << k);
        let mut w = 0u64;
        out.push(0);
        for i in 1u64..(1 << k) {
            w ^= rows[i.trailing_zeros() as usize];
            out.push(w);
        }
        Ok(out)
    }

    fn small_rows(&self) -> Result<(usize, Vec<u64>)> {
        let k = self.dimension();
        if k > MAX_ENUMERATION_DIMENSION {
            return Err(Error::Capacity(format!(
                "dimension {k} is above the enumeration limit {MAX_ENUMERATION_DIMENSION}"
            )));
        }
        if self.length() > 64 {
            return Err(Error::Capacity(format!("length {} is above 64 for enumeration", self.length())));
        }
        Ok((k, (0..k).map(|i| self.generator.row_word(i)).collect()))
    }

    /// Number of codewords of every weight `0..=n`.
    pub fn weight_distribution(&self) -> Result<Vec<u64>> {
        let (k, rows) = self.small_rows()?;
        let n = self.length();
        Ok(enumerate(k, &rows, n + 1, |acc: &mut Vec<u64>, w| acc[w.count_ones() as usize] += 1))
    }

    /// Smallest weight of a nonzero codeword, by enumeration.
    pub fn min_distance_bruteforce(&self) -> Result<usize> {
        let (k, rows) = self.small_rows()?;
        let dist = enumerate(k, &rows, 1, |acc: &mut Vec<u64>, w| {
            if w != 0 {
                acc[0] = acc[0].min(w.count_ones() as u64)
            }
        });
        Ok(dist[0] as usize)
    }

    pub fn params(&self) -> Result<CodeParams> {
        Ok(CodeParams { n: self.length(), k: self.dimension(), d: Some(self.min_distance_bruteforce()?) })
    }
}

/// Gray-code walk over all `2^k` messages, split by the top message bits
/// into independent chunks. `fold` updates a per-chunk accumulator of
/// `slots` counters; chunks are merged by addition for counts and by
/// minimum when `slots == 1`.
fn enumerate<F>(k: usize, rows: &[u64], slots: usize, fold: F) -> Vec<u64>
where
    F: Fn(&mut Vec<u64>, u64) + Sync,
{
    let split = k.min(6);
    let low = k - split;
    let init = if slots == 1 { u64::MAX } else { 0 };
    let chunks: Vec<Vec<u64>> = (0u64..(1 << split))
        .into_par_iter()
        .map(|prefix| {
            let mut acc = vec![init; slots];
            let mut w = members(prefix).fold(0u64, |a, i| a ^ rows[low + i]);
            fold(&mut acc, w);
            for i in 1u64..(1 << low) {
                w ^= rows[i.trailing_zeros() as usize];
                fold(&mut acc, w);
            }
            acc
        })
        .collect();
    if slots == 1 {
        vec![chunks.iter().map(|c| c[0]).min().unwrap_or(u64::MAX)]
    } else {
        let mut total = vec![0; slots];
        for c in chunks {
            for (t, x) in total.iter_mut().zip(c) {
                *t += x;
            }
        }
        total
    }
}

/// `[n, k, d]`; `d` is `None` when it was not determined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
}

impl CodeParams {
    pub fn new(n: usize, k: usize, d: usize) -> Self {
        CodeParams { n, k, d: Some(d) }
    }
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.d {
            Some(d) => write!(f, "[{},{},{}]", self.n, self.k, d),
            None => write!(f, "[{},{},?]", self.n, self.k),
        }
    }
}

impl Serialize for CodeParams {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// The bipartite graph of the code: the first `k` vertices are the
/// information coordinates of the standard form.
pub fn graph_from_code(code: &LinearCode) -> Result<(Graph, Bipartition)> {
    let n = code.length();
    let k = code.dimension();
    if n > crate::graph::MAX_ORDER {
        return Err(Error::Capacity(format!("code length {n} exceeds the graph order limit")));
    }
    let p = code.standard_p();
    let mut edges = Vec::new();
    for i in 0..k {
        for j in 0..n - k {
            if p.get(i, j) {
                edges.push((i, k + j));
            }
        }
    }
    let g = Graph::from_edges(n, &edges)?;
    let left = (1u64 << k) - 1;
    let right = g.vertices() & !left;
    Ok((g, Bipartition::new(left, right)))
}

/// The code whose information coordinates are the vertices of `info`, a
/// side of a bipartition of `g`. Coordinates list `info` in increasing
/// order, then the other side.
pub fn code_from_side(g: &Graph, info: VertexSet) -> Result<LinearCode> {
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    let other = g.vertices() & !info;
    Bipartition::new(info, other).validate(g)?;
    if info == 0 || other == 0 {
        return Err(Error::InvalidParameter("both sides must be nonempty".into()));
    }
    let rows: Vec<usize> = members(info).collect();
    let cols: Vec<usize> = members(other).collect();
    let mut pm = BitMatrix::zeros(rows.len(), cols.len());
    for (i, &u) in rows.iter().enumerate() {
        for (j, &w) in cols.iter().enumerate() {
            if g.has_edge(u, w) {
                pm.set(i, j, true);
            }
        }
    }
    LinearCode::from_standard_p(pm)
}

pub fn code_from_graph(g: &Graph, p: &Bipartition, side: Side) -> Result<LinearCode> {
    p.validate(g)?;
    code_from_side(g, p.side(side))
}

/// Minimum distance of the code on side `info` as one more than the
/// smallest degree of that side over the whole ELC orbit. `None` if the
/// orbit exceeds `cap`.
pub fn min_distance_via_orbit(g: &Graph, info: VertexSet, cap: Option<usize>) -> Result<Option<usize>> {
    let orbit = sided_elc_orbit(g, info, cap.unwrap_or_else(default_cap))?;
    if orbit.truncated {
        return Ok(None);
    }
    let delta = orbit
        .members
        .iter()
        .filter_map(|(h, s)| h.min_degree_in(*s))
        .min()
        .ok_or_else(|| Error::InvalidParameter("empty information side".into()))?;
    Ok(Some(delta + 1))
}

/// Whether the code on `info` is equivalent to its dual: the graph with the
/// sides exchanged must appear in the side-tracking ELC orbit. `None` if
/// the orbit exceeds `cap` before a match is found.
pub fn is_isodual_via_orbit(g: &Graph, info: VertexSet, cap: Option<usize>) -> Result<Option<bool>> {
    let other = g.vertices() & !info;
    if info.count_ones() != other.count_ones() {
        return Ok(Some(false));
    }
    let target = sided_key(g, other);
    let orbit = sided_elc_orbit(g, info, cap.unwrap_or_else(default_cap))?;
    if orbit.keys.contains(&target) {
        return Ok(Some(true));
    }
    Ok(if orbit.truncated { None } else { Some(false) })
}

/// Searches for a coordinate permutation mapping one code onto the other.
/// Limited to length 12; columns are matched only when they have the same
/// profile of codeword weights through them, and a partial assignment
/// survives only if, over all codewords, the multiset of (restriction to
/// the assigned columns, weight on the rest) agrees on both sides.
pub fn are_equivalent(a: &LinearCode, b: &LinearCode) -> Result<bool> {
    let n = a.length();
    if n != b.length() || a.dimension() != b.dimension() {
        return Ok(false);
    }
    if n > 12 {
        return Err(Error::Capacity(format!("equivalence search limited to length 12, got {n}")));
    }
    let ca = a.codewords()?;
    let cb = b.codewords()?;
    let profile = |cw: &[u64], j: usize| {
        let mut p = vec![0u32; n + 1];
        for &w in cw {
            if w & bit(j) != 0 {
                p[w.count_ones() as usize] += 1;
            }
        }
        p
    };
    let pa: Vec<Vec<u32>> = (0..n).map(|j| profile(&ca, j)).collect();
    let pb: Vec<Vec<u32>> = (0..n).map(|j| profile(&cb, j)).collect();
    let mut sa = pa.clone();
    let mut sb = pb.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return Ok(false);
    }
    let set_b: HashSet<u64> = cb.iter().copied().collect();
    let mut map = vec![usize::MAX; n];
    let mut used = 0u64;
    fn project(words: &[u64], cols: &[usize]) -> Vec<(u64, u32)> {
        let mask = cols.iter().fold(0u64, |acc, &c| acc | bit(c));
        let mut out: Vec<(u64, u32)> = words
            .iter()
            .map(|&w| {
                let head = cols.iter().enumerate().fold(0u64, |acc, (i, &c)| acc | (((w >> c) & 1) << i));
                (head, (w & !mask).count_ones())
            })
            .collect();
        out.sort_unstable();
        out
    }
    fn go(
        j: usize,
        n: usize,
        pa: &[Vec<u32>],
        pb: &[Vec<u32>],
        ca: &[u64],
        cb: &[u64],
        set_b: &HashSet<u64>,
        map: &mut Vec<usize>,
        used: &mut u64,
    ) -> bool {
        if j == n {
            return ca.iter().all(|&w| {
                let img = (0..n).fold(0u64, |acc, c| acc | (((w >> c) & 1) << map[c]));
                set_b.contains(&img)
            });
        }
        for t in 0..n {
            if *used & bit(t) != 0 || pa[j] != pb[t] {
                continue;
            }
            map[j] = t;
            let src: Vec<usize> = (0..=j).collect();
            let dst: Vec<usize> = (0..=j).map(|c| map[c]).collect();
            if project(ca, &src) == project(cb, &dst) {
                *used |= bit(t);
                if go(j + 1, n, pa, pb, ca, cb, set_b, map, used) {
                    return true;
                }
                *used &= !bit(t);
            }
            map[j] = usize::MAX;
        }
        false
    }
    Ok(go(0, n, &pa, &pb, &ca, &cb, &set_b, &mut map, &mut used))
}

/// Isodual status of a code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Isodual {
    Yes,
    No,
    Unknown,
}

impl From<Option<bool>> for Isodual {
    fn from(v: Option<bool>) -> Self {
        match v {
            Some(true) => Isodual::Yes,
            Some(false) => Isodual::No,
            None => Isodual::Unknown,
        }
    }
}

impl Serialize for Isodual {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Isodual::Yes => s.serialize_bool(true),
            Isodual::No => s.serialize_bool(false),
            Isodual::Unknown => s.serialize_str("unknown"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeReport {
    pub params: CodeParams,
    pub dual_params: CodeParams,
    pub self_dual: bool,
    pub isodual: Isodual,
    /// Minimum distance from the ELC orbit degrees, when the orbit fit
    /// under the cap.
    pub d_via_orbit: Option<usize>,
    pub dual_d_via_orbit: Option<usize>,
    /// Minimum distance by enumeration, when the dimension allows it.
    pub d_bruteforce: Option<usize>,
    pub dual_d_bruteforce: Option<usize>,
    pub weight_distribution: Option<Vec<u64>>,
}

/// Report for the code whose information set is `info`.
pub fn code_report(g: &Graph, info: VertexSet, cap: Option<usize>) -> Result<CodeReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let code = code_from_side(g, info)?;
    let other = g.vertices() & !info;
    let dual = code_from_side(g, other)?;
    let d_orbit = min_distance_via_orbit(g, info, cap)?;
    let dual_d_orbit = min_distance_via_orbit(g, other, cap)?;
    let d_brute = code.min_distance_bruteforce().ok();
    let dual_d_brute = dual.min_distance_bruteforce().ok();
    if let (Some(a), Some(b)) = (d_orbit, d_brute) {
        if a != b {
            return Err(Error::Invariant(format!(
                "orbit distance {a} disagrees with enumerated distance {b}"
            )));
        }
    }
    Ok(CodeReport {
        params: CodeParams { n: code.length(), k: code.dimension(), d: d_brute.or(d_orbit) },
        dual_params: CodeParams { n: dual.length(), k: dual.dimension(), d: dual_d_brute.or(dual_d_orbit) },
        self_dual: code.is_self_dual(),
        isodual: is_isodual_via_orbit(g, info, cap)?.into(),
        d_via_orbit: d_orbit,
        dual_d_via_orbit: dual_d_orbit,
        d_bruteforce: d_brute,
        dual_d_bruteforce: dual_d_brute,
        weight_distribution: if code.dimension() <= 16 { code.weight_distribution().ok() } else { None },
    })
}

/// Which side a star expansion substitutes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expansion {
    /// The larger side.
    Plus,
    /// The smaller side.
    Minus,
}

/// Parameters of the code on a side of `S^m(G)` and of its dual, from the
/// parameters of `G`: `base` is the `[k, r, d]` code on the smaller side
/// (`r <= k - r`) and `dual_d` the distance of its dual.
pub fn predict_star_expansion_params(base: CodeParams, dual_d: usize, m: usize, which: Expansion) -> Result<(CodeParams, CodeParams)> {
    if m < 2 {
        return Err(Error::InvalidParameter("m must be at least 2".into()));
    }
    let (k, r) = (base.n, base.k);
    if 2 * r > k || r == 0 {
        return Err(Error::InvalidParameter("base dimension must satisfy 0 < r <= k - r".into()));
    }
    let d = base.d.ok_or_else(|| Error::InvalidParameter("base distance unknown".into()))?;
    let n = m * k;
    Ok(match which {
        Expansion::Plus => (CodeParams::new(n, r, m * d), CodeParams::new(n, n - r, 2)),
        Expansion::Minus => (CodeParams::new(n, k - r, m * dual_d), CodeParams::new(n, n - k + r, 2)),
    })
}

/// `H(G)` for an `(r, k - r)`-bipartite `G` on `k >= 2` vertices gives a
/// `[7k, 3k + r, 4]` code and its `[7k, 4k - r, 4]` dual.
pub fn predict_hamming_expansion_params(k: usize, r: usize) -> Result<(CodeParams, CodeParams)> {
    if k < 2 || r == 0 || r >= k {
        return Err(Error::InvalidParameter("need k >= 2 and 0 < r < k".into()));
    }
    Ok((CodeParams::new(7 * k, 3 * k + r, 4), CodeParams::new(7 * k, 4 * k - r, 4)))
}

/// Base graph of an iterated Hamming expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IterBase {
    /// `h^3_e`
    ExtendedHamming3,
    /// `s^2`
    Star2,
}

#[derive(Clone, Debug)]
pub struct IteratedHammingReport {
    pub params: CodeParams,
    /// The graph, when it fits the 64-vertex limit.
    pub graph: Option<Graph>,
    /// `P P^T = I` for the side-to-side matrix.
    pub self_dual: bool,
    /// `P` is symmetric when columns are ordered by a side-exchanging
    /// automorphism of order two.
    pub p_symmetric: bool,
}

/// Adjacency matrix of `H(G)` from that of `G`.
fn hamming_expansion_matrix(adj: &BitMatrix) -> BitMatrix {
    let k = adj.rows();
    let mut h = BitMatrix::zeros(7 * k, 7 * k);
    for i in 0..k {
        for &(a, b) in &crate::constructions::HAMMING_BLOCK_EDGES {
            h.set(7 * i + a, 7 * i + b, true);
            h.set(7 * i + b, 7 * i + a, true);
        }
        for j in 0..k {
            if adj.get(i, j) {
                for a in 0..3 {
                    for b in 0..3 {
                        h.set(7 * i + a, 7 * j + b, true);
                    }
                }
            }
        }
    }
    h
}

/// A side-exchanging automorphism of order two, by exhaustive search.
fn side_swapping_involution(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    let p = g.bipartition()?;
    fn go(g: &Graph, p: &Bipartition, v: usize, perm: &mut Vec<usize>, used: u64) -> bool {
        let n = g.order();
        if v == n {
            return (0..n).all(|u| perm[perm[u]] == u);
        }
        let target_side = if p.left & bit(v) != 0 { p.right } else { p.left };
        for t in members(target_side & !used) {
            let ok = (0..v).all(|u| g.has_edge(u, v) == g.has_edge(perm[u], t));
            if ok {
                perm[v] = t;
                if go(g, p, v + 1, perm, used | bit(t)) {
                    return true;
                }
            }
        }
        false
    }
    let mut perm = vec![usize::MAX; n];
    go(g, &p, 0, &mut perm, 0).then_some(perm)
}

/// `H^r(base)` where the expansion is applied `r` times. For orders above
/// 64 the adjacency is built as a plain matrix and only the matrix level
/// checks are made.
pub fn iterated_hamming_self_dual(r: usize, base: IterBase) -> Result<IteratedHammingReport> {
    if r > 3 {
        return Err(Error::Capacity(format!("iteration depth {r} exceeds 3")));
    }
    let base_graph = match base {
        IterBase::ExtendedHamming3 => crate::constructions::extended_hamming_graph(3)?,
        IterBase::Star2 => crate::constructions::star_graph(2)?,
    };
    let base_n = base_graph.order();
    let n = base_n * 7usize.pow(r as u32);
    let params = CodeParams::new(n, n / 2, if base == IterBase::Star2 && r == 0 { 2 } else { 4 });

    let mut adj = BitMatrix::zeros(base_n, base_n);
    for (u, v) in base_graph.edges() {
        adj.set(u, v, true);
        adj.set(v, u, true);
    }
    let mut sigma = side_swapping_involution(&base_graph)
        .ok_or_else(|| Error::InvalidParameter("base has no side-exchanging involution".into()))?;
    let mut side: Vec<bool> = (0..base_n).map(|v| base_graph.bipartition().expect("bipartite").left & bit(v) != 0).collect();
    for _ in 0..r {
        adj = hamming_expansion_matrix(&adj);
        sigma = (0..adj.rows()).map(|w| 7 * sigma[w / 7] + w % 7).collect();
        side = (0..adj.rows())
            .map(|w| {
                let in_head = matches!(w % 7, 0 | 1 | 2 | 6);
                side[w / 7] == in_head
            })
            .collect();
    }
    let rows: Vec<usize> = (0..n).filter(|&v| side[v]).collect();
    let cols: Vec<usize> = rows.iter().map(|&v| sigma[v]).collect();
    if rows.len() * 2 != n || cols.iter().any(|&c| side[c]) {
        return Err(Error::InvalidParameter("expanded graph is not balanced bipartite".into()));
    }
    let mut p = BitMatrix::zeros(rows.len(), cols.len());
    for (i, &u) in rows.iter().enumerate() {
        for (j, &w) in cols.iter().enumerate() {
            if adj.get(u, w) {
                p.set(i, j, true);
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if adj.get(i, j) && side[i] == side[j] {
                return Err(Error::InvalidParameter("edge inside a side of the expanded graph".into()));
            }
        }
    }
    let self_dual = p.mul_transpose(&p) == BitMatrix::identity(rows.len());
    let p_symmetric = p == p.transpose();
    let graph = if n <= crate::graph::MAX_ORDER {
        let mut g = base_graph.clone();
        for _ in 0..r {
            g = crate::constructions::hamming_expansion(&g)?;
        }
        Some(g)
    } else {
        None
    };
    Ok(IteratedHammingReport { params, graph, self_dual, p_symmetric })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{extended_hamming_graph, hamming_graph, star_graph};

    #[test]
    fn standard_form_basics() {
        let g = BitMatrix::from_text("1011\n0110\n").unwrap();
        let (p, perm) = standard_form(&g).unwrap();
        assert_eq!(perm, vec![0, 1, 2, 3]);
        assert_eq!(p.to_text(), "11\n10\n");
        let rep = BitMatrix::from_text("11111\n").unwrap();
        let (p, _) = standard_form(&rep).unwrap();
        assert_eq!(p.to_text(), "1111\n");
        let shifted = BitMatrix::from_text("0110\n0011\n").unwrap();
        let (p, perm) = standard_form(&shifted).unwrap();
        assert_eq!(perm, vec![1, 2, 0, 3]);
        assert_eq!(p.to_text(), "01\n01\n");
        let bad = BitMatrix::from_text("110\n110\n").unwrap();
        assert_eq!(standard_form(&bad), Err(Error::RankDeficient { rank: 1, expected: 2 }));
    }

    #[test]
    fn hamming_codes() {
        let h = hamming_graph(3).unwrap();
        let p = h.bipartition().unwrap();
        let big = if p.left.count_ones() == 4 { Side::Left } else { Side::Right };
        let c = code_from_graph(&h, &p, big).unwrap();
        assert_eq!(c.params().unwrap(), CodeParams::new(7, 4, 3));
        let d = code_from_graph(&h, &p, big.other()).unwrap();
        assert_eq!(d.params().unwrap(), CodeParams::new(7, 3, 4));
        assert_eq!(c.weight_distribution().unwrap(), vec![1, 0, 0, 7, 7, 0, 0, 1]);
        assert!(are_equivalent(&c.dual(), &d).unwrap());
        assert!(c.generator().mul_transpose(c.dual().generator()).is_zero());
    }

    #[test]
    fn extended_hamming_self_dual() {
        let he = extended_hamming_graph(3).unwrap();
        let p = he.bipartition().unwrap();
        let c = code_from_graph(&he, &p, Side::Left).unwrap();
        assert!(c.is_self_dual());
        assert_eq!(c.params().unwrap(), CodeParams::new(8, 4, 4));
        assert_eq!(is_isodual_via_orbit(&he, p.left, None).unwrap(), Some(true));
    }

    #[test]
    fn graph_roundtrip() {
        let rep = LinearCode::new(BitMatrix::from_text("111111\n").unwrap()).unwrap();
        let (g, p) = graph_from_code(&rep).unwrap();
        assert!(crate::canon::are_isomorphic(&g, &star_graph(6).unwrap()));
        assert_eq!(p.sizes(), (1, 5));
        let back = code_from_graph(&g, &p, Side::Left).unwrap();
        assert_eq!(back.params().unwrap(), CodeParams::new(6, 1, 6));
        let par = code_from_graph(&g, &p, Side::Right).unwrap();
        assert_eq!(par.params().unwrap(), CodeParams::new(6, 5, 2));
        assert!(are_equivalent(&rep.dual(), &par).unwrap());
    }

    #[test]
    fn path_distance_via_orbit() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let p = p4.bipartition().unwrap();
        assert_eq!(min_distance_via_orbit(&p4, p.left, None).unwrap(), Some(2));
        let c = code_from_graph(&p4, &p, Side::Left).unwrap();
        assert_eq!(c.min_distance_bruteforce().unwrap(), 2);
    }

    #[test]
    fn predictions() {
        let (c, d) = predict_star_expansion_params(CodeParams::new(3, 1, 3), 2, 2, Expansion::Minus).unwrap();
        assert_eq!((c, d), (CodeParams::new(6, 2, 4), CodeParams::new(6, 4, 2)));
        let (c, _) = predict_star_expansion_params(CodeParams::new(4, 1, 4), 2, 3, Expansion::Plus).unwrap();
        assert_eq!(c, CodeParams::new(12, 1, 12));
        let (c, d) = predict_hamming_expansion_params(3, 1).unwrap();
        assert_eq!((c.to_string(), d.to_string()), ("[21,10,4]".to_string(), "[21,11,4]".to_string()));
    }

    #[test]
    fn equivalence_rejects() {
        let a = LinearCode::new(BitMatrix::from_text("1100\n0011\n").unwrap()).unwrap();
        let b = LinearCode::new(BitMatrix::from_text("1110\n0001\n").unwrap()).unwrap();
        assert!(!are_equivalent(&a, &b).unwrap());
        let c = LinearCode::new(BitMatrix::from_text("1010\n0101\n").unwrap()).unwrap();
        assert!(are_equivalent(&a, &c).unwrap());
    }

    #[test]
    fn iterated_small_cases() {
        let r0 = iterated_hamming_self_dual(0, IterBase::ExtendedHamming3).unwrap();
        assert_eq!(r0.params, CodeParams::new(8, 4, 4));
        assert!(r0.self_dual && r0.p_symmetric);
        let r1 = iterated_hamming_self_dual(1, IterBase::Star2).unwrap();
        assert_eq!(r1.params, CodeParams::new(14, 7, 4));
        assert!(r1.self_dual && r1.p_symmetric);
        assert_eq!(r1.graph.unwrap().order(), 14);
    }
}
