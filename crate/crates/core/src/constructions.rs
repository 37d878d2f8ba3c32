//! Named graphs and the expansion constructions that preserve ELC orbits
//! of size one.

use crate::bits::{bit, low_mask, members, set_of, VertexSet};
use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph, Side};

fn at_least(name: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        Err(Error::InvalidParameter(format!("{name} must be at least {min}, got {value}")))
    } else {
        Ok(())
    }
}

fn fits(n: usize) -> Result<()> {
    if n > crate::graph::MAX_ORDER {
        Err(Error::Capacity(format!("construction needs {n} vertices, above the {}-vertex limit", crate::graph::MAX_ORDER)))
    } else {
        Ok(())
    }
}

/// `e^n`, no edges.
pub fn empty_graph(n: usize) -> Result<Graph> {
    at_least("order of e^n", n, 1)?;
    Graph::empty(n)
}

/// `s^n`: vertex 0 is the center.
pub fn star_graph(n: usize) -> Result<Graph> {
    at_least("order of s^n", n, 2)?;
    fits(n)?;
    let mut rows = vec![bit(0); n];
    rows[0] = low_mask(n) & !1;
    Graph::from_rows(&rows)
}

/// `c^n`.
pub fn complete_graph(n: usize) -> Result<Graph> {
    at_least("order of c^n", n, 3)?;
    fits(n)?;
    Ok(Graph::empty(n)?.complement())
}

/// Replaces every vertex `v` of `g` by the graph `blocks[v]`; vertices of
/// adjacent blocks are joined completely. Blocks are laid out in vertex
/// order. Returns the graph and the first label of every block.
pub fn blow_up(g: &Graph, blocks: &[Graph]) -> Result<(Graph, Vec<usize>)> {
    if blocks.len() != g.order() {
        return Err(Error::InvalidParameter("one block per vertex is required".into()));
    }
    let mut start = Vec::with_capacity(blocks.len());
    let mut total = 0;
    for b in blocks {
        start.push(total);
        total += b.order();
    }
    fits(total)?;
    let span = |v: usize| low_mask(blocks[v].order()) << start[v];
    let mut rows = vec![0u64; total];
    for (v, b) in blocks.iter().enumerate() {
        let mut outside = 0;
        for u in members(g.nbrs(v)) {
            outside |= span(u);
        }
        for (i, &r) in b.rows().iter().enumerate() {
            rows[start[v] + i] = (r << start[v]) | outside;
        }
    }
    Ok((Graph::from_rows_unchecked(&rows), start))
}

/// Replaces `v` by `h`; the vertices of `h` inherit the neighbors of `v`.
/// They take the labels `v..v + h.order()`, later vertices shift up.
pub fn substitute(g: &Graph, v: usize, h: &Graph) -> Result<Graph> {
    g.neighborhood(v)?;
    let one = Graph::empty(1)?;
    let blocks: Vec<Graph> = (0..g.order()).map(|u| if u == v { h.clone() } else { one.clone() }).collect();
    Ok(blow_up(g, &blocks)?.0)
}

/// Adds a new vertex, labeled `g.order()`, adjacent only to `v`.
pub fn add_pendant(g: &Graph, v: usize) -> Result<Graph> {
    g.neighborhood(v)?;
    g.with_new_vertex(bit(v))
}

/// A star expansion together with where each original vertex went.
#[derive(Clone, Debug)]
pub struct StarExpansion {
    pub graph: Graph,
    /// `images[v]` lists the copies of a substituted vertex, or the single
    /// image of a kept vertex.
    pub images: Vec<Vec<usize>>,
    /// Pendant vertices added to each kept vertex.
    pub pendants: Vec<Vec<usize>>,
}

impl StarExpansion {
    pub fn bipartition(&self) -> Bipartition {
        self.graph.bipartition().expect("star expansion of a bipartite graph is bipartite")
    }
}

/// Substitutes every vertex on `side` of `p` by `e^m` and adds `m - 1`
/// pendants to every vertex on the other side.
pub fn star_expansion_labeled(g: &Graph, p: &Bipartition, side: Side, m: usize) -> Result<StarExpansion> {
    at_least("star expansion factor m", m, 2)?;
    p.validate(g)?;
    let subst = p.side(side);
    let em = Graph::empty(m)?;
    let one = Graph::empty(1)?;
    let blocks: Vec<Graph> =
        (0..g.order()).map(|v| if subst & bit(v) != 0 { em.clone() } else { one.clone() }).collect();
    let (mut h, start) = blow_up(g, &blocks)?;
    let images: Vec<Vec<usize>> = (0..g.order()).map(|v| (start[v]..start[v] + blocks[v].order()).collect()).collect();
    let mut pendants = vec![Vec::new(); g.order()];
    fits(h.order() + (g.order() - subst.count_ones() as usize) * (m - 1))?;
    for v in members(p.side(side.other())) {
        let at = images[v][0];
        for _ in 1..m {
            pendants[v].push(h.order());
            h = h.with_new_vertex(bit(at))?;
        }
    }
    Ok(StarExpansion { graph: h, images, pendants })
}

pub fn star_expansion(g: &Graph, p: &Bipartition, side: Side, m: usize) -> Result<Graph> {
    Ok(star_expansion_labeled(g, p, side, m)?.graph)
}

/// `C^m(g)`: every vertex becomes a copy of `c^m`.
pub fn clique_expansion(g: &Graph, m: usize) -> Result<Graph> {
    at_least("clique expansion factor m", m, 2)?;
    fits(g.order() * m)?;
    let cm = Graph::empty(m)?.complement();
    let blocks = vec![cm; g.order()];
    Ok(blow_up(g, &blocks)?.0)
}

/// Subsets of `0..r` with at least two elements, by size then
/// lexicographically.
fn hamming_subsets(r: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for size in 2..=r {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            out.push(set_of(idx.iter().copied()));
            let mut i = size;
            while i > 0 && idx[i - 1] == r - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    out
}

/// `h^r`: vertices `0..r` form `U`; the remaining vertices are joined to
/// the subsets of `U` of size at least two, ordered by size and then
/// lexicographically.
pub fn hamming_graph(r: usize) -> Result<Graph> {
    at_least("Hamming parameter r", r, 3)?;
    if r > 6 {
        return Err(Error::Capacity(format!("h^{r} has {} vertices", (1usize << r) - 1)));
    }
    let n = (1usize << r) - 1;
    let mut g = Graph::empty(n)?;
    for (i, s) in hamming_subsets(r).into_iter().enumerate() {
        for u in members(s) {
            g.set_edge(u, r + i, true);
        }
    }
    Ok(g)
}

/// Adds to `g` one vertex adjacent to every vertex of even degree.
fn attach_to_even(g: &Graph) -> Result<Graph> {
    let even = set_of((0..g.order()).filter(|&v| g.degree(v) % 2 == 0));
    g.with_new_vertex(even)
}

/// `h^r_e`: `h^r` plus vertex `2^r - 1` joined to the even-degree vertices.
pub fn extended_hamming_graph(r: usize) -> Result<Graph> {
    let h = hamming_graph(r)?;
    attach_to_even(&h)
}

/// The side of `h^r_e` holding `U` and the added vertex.
pub fn extended_hamming_u(r: usize) -> VertexSet {
    low_mask(r) | bit((1 << r) - 1)
}

/// `h^r_*`: local complementation on `U` and the added vertex of `h^r_e`,
/// in increasing order.
pub fn h_star(r: usize) -> Result<Graph> {
    let he = extended_hamming_graph(r)?;
    let order: Vec<usize> = members(extended_hamming_u(r)).collect();
    he.lc_sequence(&order)
}

/// Edges of the seven-vertex block placed for every vertex in a Hamming
/// expansion. Vertices `0, 1, 2, 6` and `3, 4, 5` are the two sides.
pub const HAMMING_BLOCK_EDGES: [(usize, usize); 9] =
    [(0, 3), (0, 4), (1, 3), (1, 5), (2, 4), (2, 5), (3, 6), (4, 6), (5, 6)];

pub fn hamming_block() -> Graph {
    Graph::from_edges(7, &HAMMING_BLOCK_EDGES).expect("block edges are valid")
}

/// `H(g)`: vertex `i` becomes the block on `7i..7i + 7`; adjacent vertices
/// `i, j` get all edges between `{7i, 7i+1, 7i+2}` and `{7j, 7j+1, 7j+2}`.
pub fn hamming_expansion(g: &Graph) -> Result<Graph> {
    let n = 7 * g.order();
    fits(n)?;
    let mut h = Graph::empty(n)?;
    for i in 0..g.order() {
        for &(a, b) in &HAMMING_BLOCK_EDGES {
            h.set_edge(7 * i + a, 7 * i + b, true);
        }
    }
    for (i, j) in g.edges() {
        for a in 0..3 {
            for b in 0..3 {
                h.set_edge(7 * i + a, 7 * j + b, true);
            }
        }
    }
    Ok(h)
}

/// `H_k^m`: `H(c^k)` plus a clique on `m` new vertices, each joined to
/// the first three vertices of every block.
pub fn hamming_clique_expansion(k: usize, m: usize) -> Result<Graph> {
    at_least("k", k, 1)?;
    at_least("m", m, 1)?;
    fits(7 * k + m)?;
    let ck = Graph::empty(k)?.complement();
    let mut g = hamming_expansion(&ck)?;
    let heads = (0..k).fold(0u64, |acc, i| acc | (0b111 << (7 * i)));
    let base = g.order();
    for j in 0..m {
        let clique = low_mask(base + j) & !low_mask(base);
        g = g.with_new_vertex(heads | clique)?;
    }
    Ok(g)
}

/// The `(2m, 2m)`-bipartite graph with `v_i = i` and `w_j = 2m + j`
/// adjacent exactly when `i != j`.
pub fn circulant_size_two(m: usize) -> Result<Graph> {
    at_least("circulant parameter m", m, 3)?;
    bipartite_complement_of_matching(2 * m)
}

/// Both sides of size `t`, `v_i` adjacent to `w_j` iff `i != j`.
pub(crate) fn bipartite_complement_of_matching(t: usize) -> Result<Graph> {
    fits(2 * t)?;
    let mut g = Graph::empty(2 * t)?;
    for i in 0..t {
        for j in 0..t {
            if i != j {
                g.set_edge(i, t + j, true);
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;

    #[test]
    fn atoms() {
        assert_eq!(star_graph(2).unwrap().edge_count(), 1);
        assert_eq!(complete_graph(3).unwrap().edge_count(), 3);
        assert_eq!(star_graph(6).unwrap().degree(0), 5);
        assert!(star_graph(1).is_err());
        assert!(complete_graph(2).is_err());
        assert!(empty_graph(0).is_err());
    }

    #[test]
    fn substitution_and_pendants() {
        let e1 = empty_graph(1).unwrap();
        let c4 = complete_graph(4).unwrap();
        assert_eq!(substitute(&e1, 0, &c4).unwrap(), c4);
        let s2 = star_graph(2).unwrap();
        let e3 = empty_graph(3).unwrap();
        assert!(are_isomorphic(&substitute(&s2, 1, &e3).unwrap(), &star_graph(4).unwrap()));
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(substitute(&p4, 2, &e1).unwrap(), p4);
        assert_eq!(add_pendant(&e1, 0).unwrap(), s2);
        assert_eq!(add_pendant(&star_graph(4).unwrap(), 0).unwrap(), star_graph(5).unwrap());
        assert!(are_isomorphic(&add_pendant(&s2, 1).unwrap(), &star_graph(3).unwrap()));
        assert!(substitute(&p4, 4, &e1).is_err());
    }

    #[test]
    fn hamming_labels() {
        let h = hamming_graph(3).unwrap();
        assert_eq!(h.order(), 7);
        assert_eq!(h.edge_count(), 9);
        assert_eq!(h.neighborhood(3).unwrap(), 0b011);
        assert_eq!(h.neighborhood(4).unwrap(), 0b101);
        assert_eq!(h.neighborhood(5).unwrap(), 0b110);
        assert_eq!(h.neighborhood(6).unwrap(), 0b111);
        assert!(are_isomorphic(&h, &hamming_block()));
        let h4 = hamming_graph(4).unwrap();
        assert_eq!(h4.order(), 15);
        for u in 0..4 {
            assert_eq!(h4.degree(u), 7);
        }
    }

    #[test]
    fn extended_hamming_is_odd() {
        for r in 3..=5 {
            let he = extended_hamming_graph(r).unwrap();
            assert_eq!(he.order(), 1 << r);
            assert!(he.is_odd());
            let p = he.bipartition().unwrap();
            assert_eq!(p.sizes(), (r + 1, (1 << r) - r - 1));
            assert_eq!(p.left, extended_hamming_u(r));
        }
    }

    #[test]
    fn hamming_expansion_of_single_vertex_is_block() {
        assert_eq!(hamming_expansion(&empty_graph(1).unwrap()).unwrap(), hamming_block());
        let hs2 = hamming_expansion(&star_graph(2).unwrap()).unwrap();
        assert_eq!(hs2.order(), 14);
        assert_eq!(hs2.edge_count(), 9 + 9 + 9);
        assert!(hs2.is_bipartite());
    }

    #[test]
    fn hamming_clique_expansion_sizes() {
        let h = hamming_clique_expansion(1, 1).unwrap();
        assert!(are_isomorphic(&h, &extended_hamming_graph(3).unwrap()));
        let h33 = hamming_clique_expansion(3, 3).unwrap();
        assert_eq!(h33.order(), 24);
        assert!(!hamming_clique_expansion(1, 5).unwrap().is_bipartite());
    }

    #[test]
    fn circulant_family() {
        let g = circulant_size_two(3).unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(g.bipartition().unwrap().sizes(), (6, 6));
        assert!(circulant_size_two(2).is_err());
        // the excluded parameter gives the extended Hamming graph
        let g2 = bipartite_complement_of_matching(4).unwrap();
        assert!(are_isomorphic(&g2, &extended_hamming_graph(3).unwrap()));
    }

    #[test]
    fn star_expansion_shapes() {
        let s3 = star_graph(3).unwrap();
        let p = s3.bipartition().unwrap();
        let x = star_expansion_labeled(&s3, &p, p.smaller_side(), 2).unwrap();
        assert_eq!(x.graph.order(), 6);
        assert_eq!(x.images[0], vec![0, 1]);
        assert_eq!(x.pendants[1], vec![4]);
        assert_eq!(x.bipartition().sizes(), (4, 2));
        assert!(star_expansion(&s3, &p, Side::Left, 1).is_err());
    }
}
