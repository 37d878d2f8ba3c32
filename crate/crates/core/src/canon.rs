//! Canonical labeling by partition refinement and a pruned search tree.
//!
//! Refinement makes the ordered partition equitable: every vertex of a cell
//! has the same number of neighbors in every other cell. When refinement
//! stalls, the search branches on the first smallest non-singleton cell.
//! Leaves are ranked by the sequence of refinement traces along the path,
//! then by the relabeled adjacency rows; the smallest leaf is canonical.
//! Equal leaves yield automorphisms, which prune sibling subtrees.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::bits::{bit, low_mask, members, VertexSet};
use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};
use crate::graph6;

type Cells = SmallVec<[u64; 16]>;

const NORMAL: usize = usize::MAX;
const MAX_GENERATORS: usize = 256;

const TAG_PLAIN: u8 = 0;
const TAG_COLORED: u8 = 1;
const TAG_BIPARTITE: u8 = 2;

/// Byte string identifying an isomorphism class.
///
/// Layout: a tag byte, the order, the edge count (two bytes, big endian),
/// the sorted degree sequence, the sorted per-vertex triangle counts (two
/// bytes each), for colored forms the number of color classes and their
/// sizes, and finally the graph6 string of the canonically relabeled graph.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonKey(Box<[u8]>);

impl CanonKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0[1] as usize
    }

    pub fn edge_count(&self) -> usize {
        u16::from_be_bytes([self.0[2], self.0[3]]) as usize
    }

    /// Length of the invariant prefix in front of the graph6 payload.
    pub fn prefix_len(&self) -> usize {
        let n = self.order();
        let base = 4 + 3 * n;
        if self.0[0] == TAG_PLAIN {
            base
        } else {
            base + 1 + self.0[base] as usize
        }
    }

    /// graph6 string of the canonical representative.
    pub fn graph6(&self) -> &str {
        std::str::from_utf8(&self.0[self.prefix_len()..]).expect("graph6 payload is ASCII")
    }

    /// The canonical representative.
    pub fn to_graph(&self) -> Graph {
        graph6::decode(self.graph6()).expect("canonical payload decodes")
    }

    /// Sizes of the color classes for colored forms, empty for plain forms.
    pub fn color_sizes(&self) -> Vec<usize> {
        if self.0[0] == TAG_PLAIN {
            return Vec::new();
        }
        let base = 4 + 3 * self.order();
        let k = self.0[base] as usize;
        self.0[base + 1..base + 1 + k].iter().map(|&b| b as usize).collect()
    }
}

impl fmt::Debug for CanonKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonKey({})", self.graph6())
    }
}

impl fmt::Display for CanonKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.graph6())
    }
}

/// Canonical key plus the relabeling that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub key: CanonKey,
    /// `relabeling[v]` is the canonical label of input vertex `v`.
    pub relabeling: Vec<usize>,
}

impl CanonicalForm {
    pub fn canonical_graph(&self) -> Graph {
        self.key.to_graph()
    }
}

/// Canonical form of a bipartite graph under maps that keep the two sides
/// together as a set partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteCanonicalForm {
    pub form: CanonicalForm,
    /// The sides have equal size, so an isomorphism may exchange them.
    pub side_swap_allowed: bool,
    /// The canonical form lists the input's right side first.
    pub swapped: bool,
}

/// Full output of the canonical search.
#[derive(Clone, Debug)]
pub struct Labeling {
    /// `lab[i]` is the input vertex placed at canonical position `i`.
    pub lab: Vec<usize>,
    /// Adjacency rows of the canonically relabeled graph.
    pub rows: Vec<u64>,
    /// Automorphism generators found during the search, as vertex maps.
    pub generators: Vec<Vec<usize>>,
    /// `orbits[v]` is the smallest vertex in the automorphism orbit of `v`.
    pub orbits: Vec<usize>,
}

impl Labeling {
    pub fn relabeling(&self) -> Vec<usize> {
        let mut perm = vec![0; self.lab.len()];
        for (i, &v) in self.lab.iter().enumerate() {
            perm[v] = i;
        }
        perm
    }

    pub fn canonical_graph(&self) -> Graph {
        Graph::from_rows_unchecked(&self.rows)
    }
}

struct Mix(u64);

impl Mix {
    #[inline]
    fn push(&mut self, x: u64) {
        self.0 = (self.0 ^ x).wrapping_mul(0x0000_0100_0000_01b3).rotate_left(29);
    }
}

/// Refines `cells` to the coarsest equitable partition finer than it,
/// starting from the given splitters. Returns a hash of the refinement
/// trace; the trace depends only on the structure, not on vertex labels.
fn refine(adj: &[u64], cells: &mut Cells, queue: &mut Vec<u64>) -> u64 {
    let mut h = Mix(0xcbf2_9ce4_8422_2325);
    let mut qi = 0;
    while qi < queue.len() {
        let w = queue[qi];
        qi += 1;
        let mut ci = 0;
        while ci < cells.len() {
            let c = cells[ci];
            if c & (c - 1) == 0 {
                ci += 1;
                continue;
            }
            let first = (adj[c.trailing_zeros() as usize] & w).count_ones();
            let mut frag = [0u64; 65];
            let mut seen: u128 = 0;
            for x in members(c) {
                let k = (adj[x] & w).count_ones();
                frag[k as usize] |= bit(x);
                seen |= 1u128 << k;
            }
            if seen == 1u128 << first {
                ci += 1;
                continue;
            }
            let mut parts: SmallVec<[u64; 8]> = SmallVec::new();
            let mut s = seen;
            while s != 0 {
                let k = s.trailing_zeros() as usize;
                s &= s - 1;
                parts.push(frag[k]);
                h.push(((ci as u64) << 40) | ((k as u64) << 20) | frag[k].count_ones() as u64);
            }
            let np = parts.len();
            cells[ci] = parts[0];
            cells.insert_many(ci + 1, parts[1..].iter().copied());
            queue.extend_from_slice(&parts);
            ci += np;
        }
    }
    h.push(cells.len() as u64);
    h.0
}

#[derive(Clone)]
struct Leaf {
    invs: Vec<u64>,
    path: Vec<usize>,
    lab: Vec<usize>,
    cert: Vec<u64>,
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

struct UnionFind {
    parent: [u8; 64],
}

impl UnionFind {
    fn new(n: usize) -> Self {
        let mut parent = [0u8; 64];
        for (i, p) in parent.iter_mut().enumerate().take(n) {
            *p = i as u8;
        }
        UnionFind { parent }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let p = self.parent[x] as usize;
            self.parent[x] = self.parent[p];
            x = p;
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo as u8;
        }
    }
}

impl<'a> Search<'a> {
    fn search(&mut self, cells: &Cells, invs: &mut Vec<u64>, path: &mut Vec<usize>) -> usize {
        let depth = path.len();
        if let (Some(first), Some(best)) = (&self.first, &self.best) {
            let d = invs.len();
            let like_first = first.invs.len() >= d && first.invs[..d] == invs[..];
            if !like_first {
                let m = d.min(best.invs.len());
                if invs[..m].cmp(&best.invs[..m]) == Ordering::Greater {
                    return NORMAL;
                }
            }
        }
        if cells.len() == self.n {
            return self.leaf(cells, invs, path);
        }

        let mut ti = 0;
        let mut tsize = u32::MAX;
        for (i, &c) in cells.iter().enumerate() {
            let s = c.count_ones();
            if s > 1 && s < tsize {
                tsize = s;
                ti = i;
            }
        }
        let target = cells[ti];

        let mut explored: SmallVec<[usize; 16]> = SmallVec::new();
        let mut uf_gens = usize::MAX;
        let mut uf = UnionFind::new(self.n);
        let mut queue = Vec::with_capacity(self.n);
        for w in members(target) {
            if !explored.is_empty() {
                if uf_gens != self.generators.len() {
                    uf = self.stabilizer_orbits(path);
                    uf_gens = self.generators.len();
                }
                let rw = uf.find(w);
                if explored.iter().any(|&e| uf.find(e) == rw) {
                    continue;
                }
            }
            explored.push(w);
            let mut child = cells.clone();
            child[ti] = bit(w);
            child.insert(ti + 1, target & !bit(w));
            queue.clear();
            queue.push(bit(w));
            let h = refine(self.adj, &mut child, &mut queue);
            invs.push(h);
            path.push(w);
            let r = self.search(&child, invs, path);
            invs.pop();
            path.pop();
            if r < depth {
                return r;
            }
        }
        NORMAL
    }

    /// Orbits of the group generated by the stored automorphisms that fix
    /// every vertex of `path`.
    fn stabilizer_orbits(&self, path: &[usize]) -> UnionFind {
        let mut uf = UnionFind::new(self.n);
        for g in &self.generators {
            if path.iter().all(|&p| g[p] == p) {
                for (v, &gv) in g.iter().enumerate() {
                    uf.union(v, gv);
                }
            }
        }
        uf
    }

    fn leaf(&mut self, cells: &Cells, invs: &[u64], path: &[usize]) -> usize {
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut perm = [0u8; 64];
        for (i, &v) in lab.iter().enumerate() {
            perm[v] = i as u8;
        }
        let cert: Vec<u64> = lab
            .iter()
            .map(|&v| members(self.adj[v]).fold(0u64, |acc, u| acc | bit(perm[u] as usize)))
            .collect();
        let leaf = Leaf { invs: invs.to_vec(), path: path.to_vec(), lab, cert };

        let Some(first) = &self.first else {
            self.first = Some(leaf.clone());
            self.best = Some(leaf);
            return NORMAL;
        };
        if leaf.cert == first.cert {
            let k = common_prefix(&first.path, path);
            let gamma = map_between(&first.lab, &leaf.lab);
            self.add_generator(gamma);
            return k;
        }
        let best = self.best.as_ref().expect("best leaf set with first");
        match (&leaf.invs, &leaf.cert).cmp(&(&best.invs, &best.cert)) {
            Ordering::Equal => {
                let k = common_prefix(&best.path, path);
                let gamma = map_between(&best.lab, &leaf.lab);
                self.add_generator(gamma);
                k
            }
            Ordering::Less => {
                self.best = Some(leaf);
                NORMAL
            }
            Ordering::Greater => NORMAL,
        }
    }

    fn add_generator(&mut self, gamma: Vec<usize>) {
        if self.generators.len() < MAX_GENERATORS && gamma.iter().enumerate().any(|(i, &g)| i != g) {
            self.generators.push(gamma);
        }
    }
}

fn map_between(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut gamma = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        gamma[a] = b;
    }
    gamma
}

/// Runs the canonical search with an ordered initial coloring. Every vertex
/// must lie in exactly one of `colors`; empty classes are ignored.
pub fn canonical_labeling_colored(g: &Graph, colors: &[VertexSet]) -> Labeling {
    let n = g.order();
    let adj = g.rows();
    let mut cells: Cells = colors.iter().copied().filter(|&c| c != 0).collect();
    debug_assert_eq!(cells.iter().fold(0, |a, &c| a | c), low_mask(n));
    let mut queue: Vec<u64> = cells.to_vec();
    let h0 = refine(adj, &mut cells, &mut queue);
    let mut search = Search { adj, n, first: None, best: None, generators: Vec::new() };
    let mut invs = vec![h0];
    let mut path = Vec::new();
    search.search(&cells, &mut invs, &mut path);
    let best = search.best.expect("search reaches at least one leaf");
    let mut uf = UnionFind::new(n);
    for gamma in &search.generators {
        for (v, &gv) in gamma.iter().enumerate() {
            uf.union(v, gv);
        }
    }
    let orbits = (0..n).map(|v| uf.find(v)).collect();
    Labeling { lab: best.lab, rows: best.cert, generators: search.generators, orbits }
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    canonical_labeling_colored(g, &[g.vertices()])
}

fn invariant_prefix(tag: u8, g: &Graph, out: &mut Vec<u8>) {
    let n = g.order();
    out.push(tag);
    out.push(n as u8);
    out.extend_from_slice(&(g.edge_count() as u16).to_be_bytes());
    let mut deg: SmallVec<[u8; 64]> = g.rows().iter().map(|r| r.count_ones() as u8).collect();
    deg.sort_unstable();
    out.extend_from_slice(&deg);
    let mut tri: SmallVec<[u16; 64]> = g.triangle_counts().into_iter().map(|t| t as u16).collect();
    tri.sort_unstable();
    for t in tri {
        out.extend_from_slice(&t.to_be_bytes());
    }
}

fn key_from(tag: u8, g: &Graph, color_sizes: &[usize], rows: &[u64]) -> CanonKey {
    let mut out = Vec::with_capacity(8 + 3 * g.order() + g.order() * g.order() / 12);
    invariant_prefix(tag, g, &mut out);
    if tag != TAG_PLAIN {
        out.push(color_sizes.len() as u8);
        out.extend(color_sizes.iter().map(|&s| s as u8));
    }
    out.extend_from_slice(graph6::encode(&Graph::from_rows_unchecked(rows)).as_bytes());
    CanonKey(out.into_boxed_slice())
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let lab = canonical_labeling(g);
    CanonicalForm { key: key_from(TAG_PLAIN, g, &[], &lab.rows), relabeling: lab.relabeling() }
}

/// Canonical key without the relabeling.
pub fn canonical_key(g: &Graph) -> CanonKey {
    let lab = canonical_labeling(g);
    key_from(TAG_PLAIN, g, &[], &lab.rows)
}

/// Canonical form under isomorphisms that map each color class to itself.
pub fn colored_canonical_form(g: &Graph, colors: &[VertexSet]) -> Result<CanonicalForm> {
    let mut union = 0u64;
    for &c in colors {
        if union & c != 0 {
            return Err(Error::InvalidPartition("color classes overlap".into()));
        }
        union |= c;
    }
    if union != g.vertices() {
        return Err(Error::InvalidPartition("color classes do not cover the vertex set".into()));
    }
    let sizes: Vec<usize> = colors.iter().map(|c| c.count_ones() as usize).collect();
    let lab = canonical_labeling_colored(g, colors);
    Ok(CanonicalForm { key: key_from(TAG_COLORED, g, &sizes, &lab.rows), relabeling: lab.relabeling() })
}

/// Canonical key for a bipartite graph whose sides may not be exchanged.
pub(crate) fn sided_key(g: &Graph, left: VertexSet) -> CanonKey {
    let right = g.vertices() & !left;
    let lab = canonical_labeling_colored(g, &[left, right]);
    let sizes = [left.count_ones() as usize, right.count_ones() as usize];
    key_from(TAG_COLORED, g, &sizes, &lab.rows)
}

/// Canonical form of `g` with the bipartition `p`, where an isomorphism
/// must map sides onto sides but may exchange them when they have equal
/// size. The smaller side is listed first.
pub fn bipartite_canonical_form(g: &Graph, p: &Bipartition) -> Result<BipartiteCanonicalForm> {
    p.validate(g)?;
    let (a, b) = p.sizes();
    let form_for = |first: VertexSet, second: VertexSet| {
        let lab = canonical_labeling_colored(g, &[first, second]);
        let sizes = [first.count_ones() as usize, second.count_ones() as usize];
        CanonicalForm { key: key_from(TAG_BIPARTITE, g, &sizes, &lab.rows), relabeling: lab.relabeling() }
    };
    if a != b {
        let swapped = b < a;
        let form = if swapped { form_for(p.right, p.left) } else { form_for(p.left, p.right) };
        return Ok(BipartiteCanonicalForm { form, side_swap_allowed: false, swapped });
    }
    let straight = form_for(p.left, p.right);
    let flipped = form_for(p.right, p.left);
    let swapped = flipped.key < straight.key;
    let form = if swapped { flipped } else { straight };
    Ok(BipartiteCanonicalForm { form, side_swap_allowed: true, swapped })
}

/// Vertex orbits of the automorphism group: `orbits[v]` is the smallest
/// vertex equivalent to `v`.
pub fn automorphism_orbits(g: &Graph) -> Vec<usize> {
    canonical_labeling(g).orbits
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    canonical_labeling(g).rows == canonical_labeling(h).rows
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut p: Vec<usize> = (0..n).collect();
        fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if k <= 1 {
                out.push(p.clone());
                return;
            }
            for i in 0..k {
                heap(k - 1, p, out);
                let j = if k % 2 == 0 { i } else { 0 };
                p.swap(j, k - 1);
            }
        }
        heap(n, &mut p, &mut out);
        out
    }

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn relabeled_paths_agree() {
        let p = path(4);
        // labels 3-1-4-2 in one-based form
        let q = Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_key(&p), canonical_key(&q));
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_key(&p), canonical_key(&star));
        assert!(!are_isomorphic(&star, &Graph::empty(4).unwrap().complement()));
    }

    #[test]
    fn relabeling_maps_onto_canonical_graph() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap();
        let f = canonical_form(&g);
        assert_eq!(g.relabel(&f.relabeling).unwrap(), f.canonical_graph());
        assert_eq!(f.key.order(), 6);
        assert_eq!(f.key.edge_count(), 6);
    }

    #[test]
    fn orbits_match_brute_force_on_small_graphs() {
        let graphs = [
            path(5),
            Graph::empty(5).unwrap().complement(),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap(),
            Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap(),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4)]).unwrap(),
        ];
        for g in &graphs {
            let n = g.order();
            let mut orbit_min: Vec<usize> = (0..n).collect();
            for p in all_perms(n) {
                if g.relabel(&p).unwrap() == *g {
                    for v in 0..n {
                        orbit_min[v] = orbit_min[v].min(p[v]);
                    }
                }
            }
            assert_eq!(automorphism_orbits(g), orbit_min, "{g:?}");
        }
    }

    #[test]
    fn key_layout() {
        let g = path(4);
        let k = canonical_key(&g);
        assert_eq!(k.prefix_len(), 16);
        assert_eq!(&k.as_bytes()[4..8], &[1, 1, 2, 2]);
        assert_eq!(k.to_graph().edge_count(), 3);
        assert!(are_isomorphic(&k.to_graph(), &g));
        assert!(k.color_sizes().is_empty());
    }

    #[test]
    fn bipartite_forms() {
        // P4 has sides {0,2} and {1,3}; swapping them is an isomorphism
        let g = path(4);
        let p = g.bipartition().unwrap();
        let a = bipartite_canonical_form(&g, &p).unwrap();
        let b = bipartite_canonical_form(&g, &p.swapped()).unwrap();
        assert!(a.side_swap_allowed);
        assert_eq!(a.form.key, b.form.key);
        assert!(bipartite_canonical_form(&g, &Bipartition::new(0b11, 0b1100)).is_err());

        let s = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let ps = s.bipartition().unwrap();
        let f = bipartite_canonical_form(&s, &ps).unwrap();
        assert!(!f.side_swap_allowed && !f.swapped);
        assert_eq!(f.form.key.color_sizes(), vec![1, 3]);
        // sided keys distinguish which side is which
        assert_ne!(sided_key(&s, ps.left), sided_key(&s, ps.right));
    }

    #[test]
    fn vertex_transitive_graphs() {
        // Petersen graph
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        let pet = Graph::from_edges(10, &e).unwrap();
        let lab = canonical_labeling(&pet);
        assert!(lab.orbits.iter().all(|&o| o == 0));
        let shuffled = pet.relabel(&[3, 7, 1, 9, 0, 2, 8, 4, 6, 5]).unwrap();
        assert_eq!(canonical_key(&pet), canonical_key(&shuffled));
    }
}
