//! Simple undirected graphs on at most 64 vertices.
//!
//! A [`Graph`] stores one adjacency word per vertex, so neighborhood
//! manipulation in local complementation and pivoting is a handful of
//! word operations. Graphs are immutable values: every operation returns a
//! new graph.

use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::bits::{bit, low_mask, members, VertexSet};
use crate::error::{Error, Result};

/// Largest supported order.
pub const MAX_ORDER: usize = 64;

type Rows = SmallVec<[u64; 16]>;

/// A simple undirected graph. `adj[v]` is the neighborhood of `v`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Rows,
}

/// One side of a bipartition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// A split of the vertex set into two independent sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Bipartition {
    pub left: VertexSet,
    pub right: VertexSet,
}

impl Bipartition {
    pub fn new(left: VertexSet, right: VertexSet) -> Self {
        Bipartition { left, right }
    }

    /// `(|left|, |right|)`.
    pub fn sizes(&self) -> (usize, usize) {
        (self.left.count_ones() as usize, self.right.count_ones() as usize)
    }

    pub fn side(&self, side: Side) -> VertexSet {
        match side {
            Side::Left => self.left,
            Side::Right => self.right,
        }
    }

    pub fn swapped(&self) -> Bipartition {
        Bipartition { left: self.right, right: self.left }
    }

    /// The smaller side; `Left` on ties.
    pub fn smaller_side(&self) -> Side {
        let (a, b) = self.sizes();
        if b < a {
            Side::Right
        } else {
            Side::Left
        }
    }

    /// Checks that the two sides are disjoint, cover `g`, and are independent.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let all = low_mask(g.order());
        if self.left & self.right != 0 {
            return Err(Error::InvalidPartition("sides overlap".into()));
        }
        if self.left | self.right != all {
            return Err(Error::InvalidPartition("sides do not cover the vertex set".into()));
        }
        for v in members(self.left) {
            if g.nbrs(v) & self.left != 0 {
                return Err(Error::InvalidPartition(format!("edge inside left side at vertex {v}")));
            }
        }
        for v in members(self.right) {
            if g.nbrs(v) & self.right != 0 {
                return Err(Error::InvalidPartition(format!("edge inside right side at vertex {v}")));
            }
        }
        Ok(())
    }
}

impl Graph {
    /// The empty graph `e^n`.
    pub fn empty(n: usize) -> Result<Graph> {
        check_order(n)?;
        Ok(Graph { adj: SmallVec::from_elem(0, n) })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency words, validating symmetry and loops.
    pub fn from_rows(rows: &[u64]) -> Result<Graph> {
        let n = rows.len();
        check_order(n)?;
        let mask = low_mask(n);
        for (v, &r) in rows.iter().enumerate() {
            if r & !mask != 0 {
                return Err(Error::InvalidParameter(format!("row {v} has bits beyond the order")));
            }
            if r & bit(v) != 0 {
                return Err(Error::InvalidParameter(format!("loop at vertex {v}")));
            }
            for u in members(r) {
                if rows[u] & bit(v) == 0 {
                    return Err(Error::InvalidParameter(format!("asymmetric pair ({v},{u})")));
                }
            }
        }
        Ok(Graph { adj: SmallVec::from_slice(rows) })
    }

    /// Unchecked constructor for rows already known to be valid.
    pub(crate) fn from_rows_unchecked(rows: &[u64]) -> Graph {
        debug_assert!(Graph::from_rows(rows).is_ok());
        Graph { adj: SmallVec::from_slice(rows) }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// All vertices as a set.
    #[inline]
    pub fn vertices(&self) -> VertexSet {
        low_mask(self.order())
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// Neighborhood of `v` without range checks.
    #[inline(always)]
    pub fn nbrs(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|r| r.count_ones() as usize).collect()
    }

    pub fn min_degree_in(&self, set: VertexSet) -> Option<usize> {
        members(set).map(|v| self.degree(v)).min()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, &r)| members(r & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        if present {
            self.adj[u] |= bit(v);
            self.adj[v] |= bit(u);
        } else {
            self.adj[u] &= !bit(v);
            self.adj[v] &= !bit(u);
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, order: self.order() })
        }
    }

    fn check_edge(&self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v || !self.has_edge(u, v) {
            return Err(Error::NotAnEdge { u, v });
        }
        Ok(())
    }

    /// `g * v`: complements the subgraph induced on the neighborhood of `v`.
    pub fn local_complement(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.lc_unchecked(v))
    }

    #[inline]
    pub fn lc_unchecked(&self, v: usize) -> Graph {
        let mut g = self.clone();
        let nv = self.adj[v];
        for x in members(nv) {
            g.adj[x] ^= nv & !bit(x);
        }
        g
    }

    /// Applies local complementation at each vertex of `vs` in turn.
    pub fn lc_sequence(&self, vs: &[usize]) -> Result<Graph> {
        for &v in vs {
            self.check_vertex(v)?;
        }
        Ok(vs.iter().fold(self.clone(), |g, &v| g.lc_unchecked(v)))
    }

    /// Edge local complementation (pivot) on `{u, v}`.
    ///
    /// Splits the other vertices into those adjacent to `u` only, to `v`
    /// only, and to both, toggles every pair drawn from two different
    /// classes, then exchanges the labels of `u` and `v`. With the exchange
    /// the result is exactly `g * u * v * u`, and repeating the operation on
    /// the same labeled edge restores `g`.
    pub fn elc(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_edge(u, v)?;
        Ok(self.elc_unchecked(u, v))
    }

    #[inline]
    pub fn elc_unchecked(&self, u: usize, v: usize) -> Graph {
        let nu = self.adj[u];
        let nv = self.adj[v];
        let uv = bit(u) | bit(v);
        let both = nu & nv;
        let only_u = nu & !nv & !uv;
        let only_v = nv & !nu & !uv;
        let mut g = self.clone();
        for x in members(only_u) {
            g.adj[x] ^= only_v | both;
        }
        for x in members(only_v) {
            g.adj[x] ^= only_u | both;
        }
        for x in members(both) {
            g.adj[x] ^= only_u | only_v;
        }
        g.swap_labels(u, v);
        g
    }

    /// Pivot computed as three local complementations, `g * u * v * u`.
    pub fn elc_via_lc(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_edge(u, v)?;
        Ok(self.lc_unchecked(u).lc_unchecked(v).lc_unchecked(u))
    }

    /// Pivot by the bipartite shortcut: toggle all pairs between
    /// `N_u \ {v}` and `N_v \ {u}`, then exchange `u` and `v`. Agrees with
    /// [`Graph::elc`] when the graph is bipartite.
    pub fn elc_bipartite_rule(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_edge(u, v)?;
        let a = self.adj[u] & !bit(v);
        let b = self.adj[v] & !bit(u);
        let mut g = self.clone();
        for x in members(a) {
            for y in members(b) {
                let present = g.has_edge(x, y);
                g.set_edge(x, y, !present);
            }
        }
        g.swap_labels(u, v);
        Ok(g)
    }

    /// Exchanges the labels of two vertices in place.
    pub(crate) fn swap_labels(&mut self, u: usize, v: usize) {
        if u == v {
            return;
        }
        self.adj.swap(u, v);
        let (bu, bv) = (bit(u), bit(v));
        for r in self.adj.iter_mut() {
            let hu = *r & bu != 0;
            let hv = *r & bv != 0;
            if hu != hv {
                *r ^= bu | bv;
            }
        }
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        if perm.len() != n {
            return Err(Error::InvalidParameter("permutation length differs from order".into()));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= n || seen & bit(p) != 0 {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
            seen |= bit(p);
        }
        Ok(self.relabel_unchecked(perm))
    }

    pub(crate) fn relabel_unchecked(&self, perm: &[usize]) -> Graph {
        let mut rows: Rows = SmallVec::from_elem(0, self.order());
        for (v, &r) in self.adj.iter().enumerate() {
            rows[perm[v]] = members(r).fold(0, |acc, u| acc | bit(perm[u]));
        }
        Graph { adj: rows }
    }

    /// Subgraph induced on `w`, relabeled by increasing original index.
    pub fn induced_subgraph(&self, w: VertexSet) -> Result<Graph> {
        if w & !self.vertices() != 0 {
            let v = (w & !self.vertices()).trailing_zeros() as usize;
            return Err(Error::VertexOutOfRange { vertex: v, order: self.order() });
        }
        let kept: Vec<usize> = members(w).collect();
        let mut index = [usize::MAX; MAX_ORDER];
        for (i, &v) in kept.iter().enumerate() {
            index[v] = i;
        }
        let rows: Vec<u64> = kept
            .iter()
            .map(|&v| members(self.adj[v] & w).fold(0, |acc, u| acc | bit(index[u])))
            .collect();
        if rows.is_empty() {
            return Err(Error::InvalidParameter("induced subgraph on the empty set".into()));
        }
        Ok(Graph { adj: SmallVec::from_vec(rows) })
    }

    /// Removes one vertex, shifting higher labels down.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        self.induced_subgraph(self.vertices() & !bit(v))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = self.adj.iter().enumerate().map(|(v, &r)| !r & all & !bit(v)).collect();
        Graph { adj }
    }

    /// Adds a vertex adjacent to exactly `nbrs`.
    pub fn with_new_vertex(&self, nbrs: VertexSet) -> Result<Graph> {
        let n = self.order();
        check_order(n + 1)?;
        if nbrs & !self.vertices() != 0 {
            return Err(Error::InvalidParameter("new neighborhood outside the graph".into()));
        }
        let mut g = self.clone();
        for u in members(nbrs) {
            g.adj[u] |= bit(n);
        }
        g.adj.push(nbrs);
        Ok(g)
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in members(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0) == self.vertices()
    }

    /// Two-colors each component, placing its smallest vertex on the left.
    /// Returns `None` for graphs with an odd cycle.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let all = self.vertices();
        let (mut left, mut right) = (0u64, 0u64);
        while (left | right) != all {
            let start = (all & !(left | right)).trailing_zeros() as usize;
            let mut frontier = bit(start);
            let mut on_left = true;
            while frontier != 0 {
                if on_left {
                    left |= frontier;
                } else {
                    right |= frontier;
                }
                let mut next = 0;
                for v in members(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !(left | right);
                on_left = !on_left;
            }
        }
        for v in members(left) {
            if self.adj[v] & left != 0 {
                return None;
            }
        }
        for v in members(right) {
            if self.adj[v] & right != 0 {
                return None;
            }
        }
        Some(Bipartition { left, right })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Every vertex has odd degree.
    pub fn is_odd(&self) -> bool {
        self.adj.iter().all(|r| r.count_ones() % 2 == 1)
    }

    /// Every vertex has even degree.
    pub fn is_even(&self) -> bool {
        self.adj.iter().all(|r| r.count_ones() % 2 == 0)
    }

    /// Number of triangles through each vertex.
    pub fn triangle_counts(&self) -> Vec<usize> {
        self.adj
            .iter()
            .map(|&r| members(r).map(|u| (self.adj[u] & r).count_ones() as usize).sum::<usize>() / 2)
            .collect()
    }

    /// Row-per-line `0`/`1` adjacency matrix text.
    pub fn to_adjacency_text(&self) -> String {
        let n = self.order();
        let mut s = String::with_capacity(n * (n + 1));
        for &r in self.adj.iter() {
            for u in 0..n {
                s.push(if r & bit(u) != 0 { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }

    /// Parses the adjacency matrix text written by [`Graph::to_adjacency_text`].
    /// Blank lines and whitespace inside rows are ignored.
    pub fn from_adjacency_text(text: &str) -> Result<Graph> {
        let rows: Vec<Vec<bool>> = text
            .lines()
            .map(|l| l.chars().filter(|c| !c.is_whitespace()).collect::<String>())
            .filter(|l| !l.is_empty())
            .map(|l| {
                l.chars()
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        other => Err(Error::Parse(format!("unexpected character {other:?} in adjacency row"))),
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        let n = rows.len();
        if n == 0 {
            return Err(Error::Parse("empty adjacency matrix".into()));
        }
        check_order(n)?;
        let mut words = vec![0u64; n];
        for (v, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Parse(format!("row {v} has length {} but the matrix has {n} rows", row.len())));
            }
            for (u, &b) in row.iter().enumerate() {
                if b {
                    words[v] |= bit(u);
                }
            }
        }
        Graph::from_rows(&words).map_err(|e| Error::Parse(e.to_string()))
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("graph order must be at least 1".into()));
    }
    if n > MAX_ORDER {
        return Err(Error::Capacity(format!("order {n} exceeds the {MAX_ORDER}-vertex limit")));
    }
    Ok(())
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
