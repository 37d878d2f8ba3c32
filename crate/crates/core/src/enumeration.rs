//! Isomorph-free generation of connected graphs, orbit censuses by vertex
//! extension, and classification of graphs with ELC orbit of size one.
//!
//! Orbit censuses rely on one observation: if `v` is not a cut vertex of a
//! connected graph `G`, a pivot or local complementation away from `v`
//! commutes with deleting `v`. So every orbit of order `n` contains a graph
//! obtained by attaching a new vertex to a representative of some orbit of
//! order `n - 1`. Extending every representative in every possible way
//! therefore meets every orbit of order `n` at least once.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use dashmap::DashSet;
use rayon::prelude::*;
use serde::Serialize;

use crate::bits::{bit, members, VertexSet};
use crate::canon::{canonical_key, canonical_labeling, CanonKey};
use crate::codes::{graph_from_code, CodeParams, LinearCode};
use crate::constructions::{extended_hamming_graph, hamming_expansion, star_graph};
use crate::error::{Error, Result};
use crate::expr::{ConstructionSpec, StarSide};
use crate::graph::Graph;
use crate::graph6;
use crate::orbit::{default_cap, elc_witness_unchecked, explore_keys, OrbitKind};

/// Default order limits for orbit census levels.
pub const GENERAL_ORDER_CAP: usize = 9;
pub const BIPARTITE_ORDER_CAP: usize = 12;
/// Limits when `deep` is requested.
pub const GENERAL_ORDER_CAP_DEEP: usize = 11;
pub const BIPARTITE_ORDER_CAP_DEEP: usize = 16;
/// Default limit for plain generation of connected graphs, which has no
/// orbit exploration to pay for.
pub const GENERATION_ORDER_CAP: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphClass {
    Bipartite,
    NonBipartite,
}

impl GraphClass {
    pub fn of(g: &Graph) -> GraphClass {
        if g.is_bipartite() {
            GraphClass::Bipartite
        } else {
            GraphClass::NonBipartite
        }
    }
}

fn check_cap(n: usize, bipartite_only: bool, limit: usize, deep: bool) -> Result<()> {
    if n > limit {
        let what = if bipartite_only { "bipartite" } else { "general" };
        let hint = if deep { "" } else { " (the deep option raises it)" };
        return Err(Error::Capacity(format!("order {n} is above the {what} limit {limit}{hint}")));
    }
    Ok(())
}

fn level_cap(bipartite_only: bool, deep: bool) -> usize {
    match (bipartite_only, deep) {
        (true, false) => BIPARTITE_ORDER_CAP,
        (true, true) => BIPARTITE_ORDER_CAP_DEEP,
        (false, false) => GENERAL_ORDER_CAP,
        (false, true) => GENERAL_ORDER_CAP_DEEP,
    }
}

fn generation_cap(bipartite_only: bool, deep: bool) -> usize {
    match (bipartite_only, deep) {
        (true, false) => BIPARTITE_ORDER_CAP,
        (true, true) => BIPARTITE_ORDER_CAP_DEEP,
        (false, false) => GENERATION_ORDER_CAP,
        (false, true) => GENERAL_ORDER_CAP_DEEP,
    }
}

/// Neighborhoods for a new vertex attached to a connected graph: every
/// nonempty subset, or for bipartite extension every nonempty subset of
/// one side (`2^a + 2^b - 2` of them).
pub fn extension_sets(g: &Graph, bipartite_only: bool) -> Vec<VertexSet> {
    let subsets_of = |s: VertexSet| -> Vec<VertexSet> {
        let mut out = Vec::with_capacity((1usize << s.count_ones()) - 1);
        let mut sub = s;
        while sub != 0 {
            out.push(sub);
            sub = (sub - 1) & s;
        }
        out.reverse();
        out
    };
    if bipartite_only {
        let p = g.bipartition().expect("bipartite extension of a non-bipartite graph");
        let mut v = subsets_of(p.left);
        v.extend(subsets_of(p.right));
        v
    } else {
        subsets_of(g.vertices())
    }
}

/// Graphs obtained by attaching one vertex to `g` in every admissible way.
pub fn extend(g: &Graph, bipartite_only: bool) -> Vec<Graph> {
    extension_sets(g, bipartite_only)
        .into_iter()
        .map(|s| g.with_new_vertex(s).expect("order checked by caller"))
        .collect()
}

/// Vertices whose removal keeps `g` connected.
fn non_cut_vertices(g: &Graph) -> VertexSet {
    let all = g.vertices();
    let mut out = 0;
    for v in 0..g.order() {
        let rest = all & !bit(v);
        if rest == 0 {
            out |= bit(v);
            continue;
        }
        let start = rest.trailing_zeros() as usize;
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for u in members(frontier) {
                next |= g.nbrs(u);
            }
            next &= rest;
            frontier = next & !seen;
            seen |= next;
        }
        if seen == rest {
            out |= bit(v);
        }
    }
    out
}

/// Canonical augmentation test: the last vertex must be equivalent, under
/// automorphisms, to the vertex chosen for deletion, which is the
/// non-cut vertex of largest degree with the largest canonical label.
fn is_canonical_child(child: &Graph) -> bool {
    let x = child.order() - 1;
    let candidates = non_cut_vertices(child);
    let dmax = members(candidates).map(|v| child.degree(v)).max().unwrap_or(0);
    if child.degree(x) < dmax {
        return false;
    }
    let top = members(candidates).filter(|&v| child.degree(v) == dmax).fold(0u64, |a, v| a | bit(v));
    if top == bit(x) {
        return true;
    }
    let lab = canonical_labeling(child);
    let pos = lab.relabeling();
    let y = members(top).max_by_key(|&v| pos[v]).expect("x is a candidate");
    lab.orbits[x] == lab.orbits[y]
}

fn canonical_children(parent: &Graph, bipartite_only: bool) -> Vec<Graph> {
    let mut local: HashSet<CanonKey> = HashSet::new();
    let mut out = Vec::new();
    for s in extension_sets(parent, bipartite_only) {
        let child = parent.with_new_vertex(s).expect("order within limit");
        if !is_canonical_child(&child) {
            continue;
        }
        let key = canonical_key(&child);
        if local.insert(key.clone()) {
            out.push(key.to_graph());
        }
    }
    out
}

/// Streams one canonical representative of every isomorphism class of
/// connected (or connected bipartite) graphs of order `n` to `visit`.
/// Only the level below `n` is held in memory. Graphs arrive grouped by
/// parent, parents in a fixed order, so the stream is deterministic.
pub fn for_each_connected_graph<F>(n: usize, bipartite_only: bool, deep: bool, mut visit: F) -> Result<()>
where
    F: FnMut(Graph),
{
    if n == 0 {
        return Err(Error::InvalidParameter("order must be at least 1".into()));
    }
    check_cap(n, bipartite_only, generation_cap(bipartite_only, deep), deep)?;
    let mut level = vec![Graph::empty(1)?];
    for m in 2..=n {
        if m == n {
            for chunk in level.chunks(BATCH) {
                let kids: Vec<Vec<Graph>> = chunk.par_iter().map(|p| canonical_children(p, bipartite_only)).collect();
                kids.into_iter().flatten().for_each(&mut visit);
            }
            return Ok(());
        }
        let kids: Vec<Vec<Graph>> = level.par_iter().map(|p| canonical_children(p, bipartite_only)).collect();
        level = kids.into_iter().flatten().collect();
    }
    level.into_iter().for_each(visit);
    Ok(())
}

/// One canonical representative of every isomorphism class of connected
/// graphs (or connected bipartite graphs) of order `n`, sorted by key.
pub fn connected_graphs(n: usize, bipartite_only: bool, deep: bool) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for_each_connected_graph(n, bipartite_only, deep, |g| out.push(g))?;
    out.sort_by_cached_key(canonical_key);
    Ok(out)
}

/// Generate-and-deduplicate version of [`connected_graphs`] for small
/// orders, used to cross-check the canonical augmentation.
pub fn connected_graphs_naive(n: usize, bipartite_only: bool) -> Result<Vec<Graph>> {
    if n == 0 || n > 8 {
        return Err(Error::Capacity("naive generation is limited to orders 1..=8".into()));
    }
    let mut level = vec![canonical_key(&Graph::empty(1)?)];
    for _ in 2..=n {
        let mut next: Vec<CanonKey> = level
            .iter()
            .flat_map(|k| extend(&k.to_graph(), bipartite_only))
            .map(|g| canonical_key(&g))
            .collect();
        next.sort();
        next.dedup();
        level = next;
    }
    Ok(level.into_iter().map(|k| k.to_graph()).collect())
}

/// An orbit found by a census.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitRecord {
    /// Smallest canonical key in the orbit.
    pub representative: CanonKey,
    pub size: usize,
    pub bipartite: bool,
}

/// Orbit representatives level by level, each level computed by
/// extending the previous one. Levels can be saved to and resumed from a
/// checkpoint directory.
pub struct OrbitCensus {
    kind: OrbitKind,
    bipartite_only: bool,
    deep: bool,
    cap: usize,
    checkpoint: Option<PathBuf>,
    levels: Vec<Vec<OrbitRecord>>,
}

/// Candidate extensions are processed in batches of this many parents to
/// bound memory.
const BATCH: usize = 512;

impl OrbitCensus {
    pub fn new(kind: OrbitKind, bipartite_only: bool) -> Self {
        OrbitCensus { kind, bipartite_only, deep: false, cap: default_cap(), checkpoint: None, levels: Vec::new() }
    }

    pub fn deep(mut self, deep: bool) -> Self {
        self.deep = deep;
        self
    }

    pub fn cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn checkpoint_dir(mut self, dir: impl Into<PathBuf>) -> Self {
        self.checkpoint = Some(dir.into());
        self
    }

    pub fn kind(&self) -> OrbitKind {
        self.kind
    }

    pub fn bipartite_only(&self) -> bool {
        self.bipartite_only
    }

    fn checkpoint_path(&self, n: usize) -> Option<PathBuf> {
        let class = if self.bipartite_only { "bipartite" } else { "all" };
        self.checkpoint.as_ref().map(|d| d.join(format!("{}-{class}-{n}.txt", self.kind)))
    }

    fn load(path: &Path) -> Result<Vec<OrbitRecord>> {
        let text = fs::read_to_string(path)?;
        let mut out = Vec::new();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let mut parts = line.split_whitespace();
            let (Some(g6), Some(size)) = (parts.next(), parts.next()) else {
                return Err(Error::Parse(format!("bad checkpoint line {line:?}")));
            };
            let g = graph6::decode(g6)?;
            let size = size.parse().map_err(|_| Error::Parse(format!("bad orbit size in {line:?}")))?;
            out.push(OrbitRecord { representative: canonical_key(&g), size, bipartite: g.is_bipartite() });
        }
        out.sort_by(|a, b| a.representative.cmp(&b.representative));
        Ok(out)
    }

    fn save(path: &Path, records: &[OrbitRecord]) -> Result<()> {
        if let Some(dir) = path.parent() {
            fs::create_dir_all(dir)?;
        }
        let tmp = path.with_extension("tmp");
        let mut f = fs::File::create(&tmp)?;
        for r in records {
            writeln!(f, "{} {}", r.representative.graph6(), r.size)?;
        }
        f.sync_all()?;
        fs::rename(tmp, path)?;
        Ok(())
    }

    /// Orbit representatives of order `n`, sorted by key.
    pub fn level(&mut self, n: usize) -> Result<&[OrbitRecord]> {
        if n == 0 {
            return Err(Error::InvalidParameter("order must be at least 1".into()));
        }
        check_cap(n, self.bipartite_only, level_cap(self.bipartite_only, self.deep), self.deep)?;
        while self.levels.len() < n {
            let m = self.levels.len() + 1;
            let records = match self.checkpoint_path(m).filter(|p| p.exists()) {
                Some(path) => Self::load(&path)?,
                None => {
                    let r = if m == 1 {
                        vec![OrbitRecord { representative: canonical_key(&Graph::empty(1)?), size: 1, bipartite: true }]
                    } else {
                        self.next_level(m)?
                    };
                    if let Some(path) = self.checkpoint_path(m) {
                        Self::save(&path, &r)?;
                    }
                    r
                }
            };
            self.levels.push(records);
        }
        Ok(&self.levels[n - 1])
    }

    /// Distinct canonical keys of all extensions of the level below `n`,
    /// in batches, handed to `visit` in sorted order.
    fn for_each_candidate<F>(&mut self, n: usize, mut visit: F) -> Result<()>
    where
        F: FnMut(CanonKey) -> Result<()>,
    {
        let bip = self.bipartite_only;
        let parents: Vec<Graph> = self.level(n - 1)?.iter().map(|r| r.representative.to_graph()).collect();
        let seen: DashSet<CanonKey> = DashSet::new();
        for chunk in parents.chunks(BATCH) {
            let mut keys: Vec<CanonKey> = chunk
                .par_iter()
                .flat_map_iter(|p| {
                    extend(p, bip).into_iter().map(|g| canonical_key(&g)).collect::<Vec<_>>().into_iter()
                })
                .filter(|k| seen.insert(k.clone()))
                .collect();
            keys.sort();
            for k in keys {
                visit(k)?;
            }
        }
        Ok(())
    }

    fn next_level(&mut self, n: usize) -> Result<Vec<OrbitRecord>> {
        let kind = self.kind;
        let cap = self.cap;
        let mut covered: HashSet<CanonKey> = HashSet::new();
        let mut out = Vec::new();
        self.for_each_candidate(n, |key| {
            if covered.contains(&key) {
                return Ok(());
            }
            let g = key.to_graph();
            let (members, truncated) = explore_keys(&g, kind, cap);
            if truncated {
                return Err(Error::Capacity(format!("{kind} orbit of {key} exceeds {cap} members")));
            }
            let representative = members.iter().min().expect("orbit is nonempty").clone();
            out.push(OrbitRecord { representative, size: members.len(), bipartite: g.is_bipartite() });
            covered.extend(members);
            Ok(())
        })?;
        out.sort_by(|a, b| a.representative.cmp(&b.representative));
        Ok(out)
    }

    /// Number of orbits of order `n` in `class`.
    pub fn count_orbits(&mut self, n: usize, class: GraphClass) -> Result<u64> {
        self.ensure_class(class)?;
        let want = class == GraphClass::Bipartite;
        Ok(self.level(n)?.iter().filter(|r| r.bipartite == want).count() as u64)
    }

    fn ensure_class(&self, class: GraphClass) -> Result<()> {
        if self.bipartite_only && class == GraphClass::NonBipartite {
            return Err(Error::InvalidParameter("a bipartite census has no non-bipartite orbits".into()));
        }
        Ok(())
    }

    /// Graphs of order `n` with ELC orbit of size one, found among the
    /// extensions of the level below, with their class.
    pub fn preserved(&mut self, n: usize) -> Result<Vec<(CanonKey, GraphClass)>> {
        if self.kind != OrbitKind::Elc {
            return Err(Error::InvalidParameter("preserved graphs are counted on an ELC census".into()));
        }
        if n == 1 {
            return Ok(vec![(canonical_key(&Graph::empty(1)?), GraphClass::Bipartite)]);
        }
        let found: std::sync::Mutex<Vec<(CanonKey, GraphClass)>> = std::sync::Mutex::new(Vec::new());
        let mut batch: Vec<CanonKey> = Vec::new();
        let flush = |batch: &mut Vec<CanonKey>| {
            let hits: Vec<(CanonKey, GraphClass)> = batch
                .par_iter()
                .filter_map(|k| {
                    let g = k.to_graph();
                    elc_witness_unchecked(&g).is_none().then(|| (k.clone(), GraphClass::of(&g)))
                })
                .collect();
            found.lock().expect("no poisoning").extend(hits);
            batch.clear();
        };
        self.for_each_candidate(n, |k| {
            batch.push(k);
            if batch.len() >= 4096 {
                flush(&mut batch);
            }
            Ok(())
        })?;
        flush(&mut batch);
        let mut v = found.into_inner().expect("no poisoning");
        v.sort();
        Ok(v)
    }

    pub fn count_preserved(&mut self, n: usize, class: GraphClass) -> Result<u64> {
        self.ensure_class(class)?;
        Ok(self.preserved(n)?.iter().filter(|(_, c)| *c == class).count() as u64)
    }

    /// Orbits of order `n` with exactly two members. Each candidate is
    /// explored only until a third member appears.
    pub fn size_two(&mut self, n: usize) -> Result<Vec<OrbitRecord>> {
        if n == 1 {
            return Ok(Vec::new());
        }
        let kind = self.kind;
        let mut covered: HashSet<CanonKey> = HashSet::new();
        let mut out = Vec::new();
        self.for_each_candidate(n, |key| {
            if covered.contains(&key) {
                return Ok(());
            }
            let g = key.to_graph();
            let (members, truncated) = explore_keys(&g, kind, 2);
            if !truncated && members.len() == 2 {
                let representative = members.iter().min().expect("nonempty").clone();
                out.push(OrbitRecord { representative, size: 2, bipartite: g.is_bipartite() });
            }
            covered.extend(members);
            Ok(())
        })?;
        out.sort_by(|a, b| a.representative.cmp(&b.representative));
        Ok(out)
    }

    pub fn count_size_two(&mut self, n: usize, class: Option<GraphClass>) -> Result<u64> {
        if let Some(c) = class {
            self.ensure_class(c)?;
        }
        let want = class.map(|c| c == GraphClass::Bipartite);
        Ok(self.size_two(n)?.iter().filter(|r| want.is_none_or(|w| r.bipartite == w)).count() as u64)
    }
}

/// Which census column to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Column {
    /// `b_n`: bipartite ELC orbits.
    OrbitsBipartite,
    /// `nb_n`: non-bipartite ELC orbits.
    OrbitsNonBipartite,
    /// `bp_n`: bipartite graphs with ELC orbit of size one.
    PreservedBipartite,
    /// `nbp_n`: non-bipartite graphs with ELC orbit of size one.
    PreservedNonBipartite,
    SizeTwoBipartite,
    SizeTwoNonBipartite,
    SizeTwoLc,
    /// All LC orbits of connected graphs.
    OrbitsLc,
}

impl Column {
    pub fn header(self) -> &'static str {
        match self {
            Column::OrbitsBipartite => "b_n",
            Column::OrbitsNonBipartite => "nb_n",
            Column::PreservedBipartite => "bp_n",
            Column::PreservedNonBipartite => "nbp_n",
            Column::SizeTwoBipartite => "size_two_bipartite",
            Column::SizeTwoNonBipartite => "size_two_nonbipartite",
            Column::SizeTwoLc => "size_two_lc",
            Column::OrbitsLc => "lc_orbits",
        }
    }

    pub fn all() -> [Column; 8] {
        [
            Column::OrbitsBipartite,
            Column::OrbitsNonBipartite,
            Column::PreservedBipartite,
            Column::PreservedNonBipartite,
            Column::SizeTwoBipartite,
            Column::SizeTwoNonBipartite,
            Column::SizeTwoLc,
            Column::OrbitsLc,
        ]
    }
}

/// Shared censuses for computing several columns without repeating work.
pub struct Census {
    pub bipartite: OrbitCensus,
    pub general: OrbitCensus,
    pub lc: OrbitCensus,
}

impl Census {
    pub fn new(deep: bool) -> Self {
        Census {
            bipartite: OrbitCensus::new(OrbitKind::Elc, true).deep(deep),
            general: OrbitCensus::new(OrbitKind::Elc, false).deep(deep),
            lc: OrbitCensus::new(OrbitKind::Lc, false).deep(deep),
        }
    }

    pub fn with_checkpoints(deep: bool, dir: &Path) -> Self {
        Census {
            bipartite: OrbitCensus::new(OrbitKind::Elc, true).deep(deep).checkpoint_dir(dir),
            general: OrbitCensus::new(OrbitKind::Elc, false).deep(deep).checkpoint_dir(dir),
            lc: OrbitCensus::new(OrbitKind::Lc, false).deep(deep).checkpoint_dir(dir),
        }
    }

    pub fn value(&mut self, column: Column, n: usize) -> Result<u64> {
        use GraphClass::*;
        match column {
            Column::OrbitsBipartite => self.bipartite.count_orbits(n, Bipartite),
            Column::OrbitsNonBipartite => self.general.count_orbits(n, NonBipartite),
            Column::PreservedBipartite => self.bipartite.count_preserved(n, Bipartite),
            Column::PreservedNonBipartite => self.general.count_preserved(n, NonBipartite),
            Column::SizeTwoBipartite => self.bipartite.count_size_two(n, Some(Bipartite)),
            Column::SizeTwoNonBipartite => self.general.count_size_two(n, Some(NonBipartite)),
            Column::SizeTwoLc => self.lc.count_size_two(n, None),
            Column::OrbitsLc => Ok(self.lc.level(n)?.len() as u64),
        }
    }
}

/// Census counts for one order. A `None` field was not requested or lies
/// outside the range the class is defined for.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub n: usize,
    pub elc_orbits_bipartite: Option<u64>,
    pub elc_orbits_nonbipartite: Option<u64>,
    pub elc_preserved_bipartite: Option<u64>,
    pub elc_preserved_nonbipartite: Option<u64>,
    pub size_two_bipartite: Option<u64>,
    pub size_two_nonbipartite: Option<u64>,
    pub size_two_lc: Option<u64>,
}

impl CensusRow {
    fn slot(&mut self, column: Column) -> Option<&mut Option<u64>> {
        Some(match column {
            Column::OrbitsBipartite => &mut self.elc_orbits_bipartite,
            Column::OrbitsNonBipartite => &mut self.elc_orbits_nonbipartite,
            Column::PreservedBipartite => &mut self.elc_preserved_bipartite,
            Column::PreservedNonBipartite => &mut self.elc_preserved_nonbipartite,
            Column::SizeTwoBipartite => &mut self.size_two_bipartite,
            Column::SizeTwoNonBipartite => &mut self.size_two_nonbipartite,
            Column::SizeTwoLc => &mut self.size_two_lc,
            Column::OrbitsLc => return None,
        })
    }

    /// Checks that preserved counts do not exceed orbit counts where both
    /// are present.
    pub fn is_consistent(&self) -> bool {
        let le = |a: Option<u64>, b: Option<u64>| match (a, b) {
            (Some(a), Some(b)) => a <= b,
            _ => true,
        };
        le(self.elc_preserved_bipartite, self.elc_orbits_bipartite)
            && le(self.elc_preserved_nonbipartite, self.elc_orbits_nonbipartite)
            && le(self.size_two_bipartite, self.elc_orbits_bipartite)
            && le(self.size_two_nonbipartite, self.elc_orbits_nonbipartite)
    }
}

impl Census {
    /// Fills the requested columns of the row for order `n`.
    pub fn row(&mut self, n: usize, columns: &[Column]) -> Result<CensusRow> {
        let mut row = CensusRow { n, ..CensusRow::default() };
        for &c in columns {
            let v = self.value(c, n)?;
            if let Some(slot) = row.slot(c) {
                *slot = Some(v);
            }
        }
        Ok(row)
    }
}

pub fn count_orbits(n: usize, class: GraphClass) -> Result<u64> {
    OrbitCensus::new(OrbitKind::Elc, class == GraphClass::Bipartite).count_orbits(n, class)
}

pub fn count_preserved(n: usize, class: GraphClass) -> Result<u64> {
    OrbitCensus::new(OrbitKind::Elc, class == GraphClass::Bipartite).count_preserved(n, class)
}

/// Orbits of size two; `None` counts LC orbits of all connected graphs.
pub fn count_size_two(n: usize, class: Option<GraphClass>) -> Result<u64> {
    match class {
        Some(c) => OrbitCensus::new(OrbitKind::Elc, c == GraphClass::Bipartite).count_size_two(n, Some(c)),
        None => OrbitCensus::new(OrbitKind::Lc, false).count_size_two(n, None),
    }
}

/// Every expression of order at most `max_n` built from the atoms and
/// operators that yield ELC orbits of size one, keyed by the canonical
/// form of its graph. Where several expressions give the same graph the
/// preferred one is kept (fewest operators, then atom kind).
pub fn candidate_specs(max_n: usize) -> Result<Vec<BTreeMap<CanonKey, ConstructionSpec>>> {
    use ConstructionSpec::*;
    let mut by_order: Vec<BTreeMap<CanonKey, ConstructionSpec>> = vec![BTreeMap::new(); max_n + 1];
    let mut graphs: Vec<HashMap<CanonKey, Graph>> = vec![HashMap::new(); max_n + 1];
    let offer = |spec: ConstructionSpec,
                     by_order: &mut Vec<BTreeMap<CanonKey, ConstructionSpec>>,
                     graphs: &mut Vec<HashMap<CanonKey, Graph>>|
     -> Result<()> {
        let n = spec.order();
        let g = match spec.build() {
            Ok(g) => g,
            Err(Error::NotBipartite | Error::Disconnected | Error::InvalidParameter(_)) => return Ok(()),
            Err(e) => return Err(e),
        };
        if !g.is_connected() {
            return Ok(());
        }
        let key = canonical_key(&g);
        let slot = by_order[n].entry(key.clone()).or_insert_with(|| spec.clone());
        if spec.preference() < slot.preference() {
            *slot = spec;
        }
        graphs[n].entry(key).or_insert(g);
        Ok(())
    };
    for n in 1..=max_n {
        if n == 1 {
            offer(Empty(1), &mut by_order, &mut graphs)?;
        }
        if n >= 2 {
            offer(Star(n), &mut by_order, &mut graphs)?;
        }
        if n >= 3 {
            offer(Complete(n), &mut by_order, &mut graphs)?;
        }
        for r in 3..=6 {
            if (1 << r) - 1 == n {
                offer(Hamming(r), &mut by_order, &mut graphs)?;
            }
            if 1 << r == n {
                offer(ExtendedHamming(r), &mut by_order, &mut graphs)?;
                offer(HStar(r), &mut by_order, &mut graphs)?;
            }
        }
        for k in 1..=n / 7 {
            if n > 7 * k {
                offer(HammingClique(k, n - 7 * k), &mut by_order, &mut graphs)?;
            }
        }
        for m in 2..=n {
            if n % m != 0 {
                continue;
            }
            let k = n / m;
            let inner: Vec<(ConstructionSpec, Graph)> = by_order[k]
                .iter()
                .map(|(key, spec)| (spec.clone(), graphs[k][key].clone()))
                .collect();
            for (spec, g) in inner {
                if k >= 2 {
                    if let Some(p) = g.bipartition() {
                        let (a, b) = p.sizes();
                        if a == b {
                            offer(StarExpansion(StarSide::Equal, m, Box::new(spec.clone())), &mut by_order, &mut graphs)?;
                        } else {
                            for side in [StarSide::Plus, StarSide::Minus] {
                                offer(StarExpansion(side, m, Box::new(spec.clone())), &mut by_order, &mut graphs)?;
                            }
                        }
                    }
                }
                offer(CliqueExpansion(m, Box::new(spec)), &mut by_order, &mut graphs)?;
            }
        }
        if n % 7 == 0 {
            let k = n / 7;
            let inner: Vec<ConstructionSpec> = by_order[k].values().cloned().collect();
            for spec in inner {
                offer(HammingExpansion(Box::new(spec)), &mut by_order, &mut graphs)?;
            }
        }
    }
    Ok(by_order)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationEntry {
    pub n: usize,
    pub class: GraphClass,
    pub key: CanonKey,
    /// `None` when no expression matches.
    pub spec: Option<ConstructionSpec>,
}

impl ClassificationEntry {
    pub fn spec_string(&self) -> String {
        self.spec.as_ref().map_or_else(|| "UNMATCHED".to_string(), ToString::to_string)
    }
}

/// Finds every graph with ELC orbit of size one for bipartite orders
/// `2..=max_bipartite` and non-bipartite orders `3..=max_nonbipartite`,
/// and names each by a matching construction expression.
pub fn classify_preserved(census: &mut Census, max_bipartite: usize, max_nonbipartite: usize) -> Result<Vec<ClassificationEntry>> {
    let candidates = candidate_specs(max_bipartite.max(max_nonbipartite))?;
    let mut out = Vec::new();
    let mut push = |n: usize, class: GraphClass, keys: Vec<CanonKey>| {
        for key in keys {
            let spec = candidates[n].get(&key).cloned();
            out.push(ClassificationEntry { n, class, key, spec });
        }
    };
    for n in 2..=max_bipartite {
        let keys = census.bipartite.preserved(n)?.into_iter().map(|(k, _)| k).collect();
        push(n, GraphClass::Bipartite, keys);
    }
    for n in 3..=max_nonbipartite {
        let keys = census
            .general
            .preserved(n)?
            .into_iter()
            .filter(|(_, c)| *c == GraphClass::NonBipartite)
            .map(|(k, _)| k)
            .collect();
        push(n, GraphClass::NonBipartite, keys);
    }
    out.sort_by(|a, b| (a.n, a.class, a.spec_string()).cmp(&(b.n, b.class, b.spec_string())));
    Ok(out)
}

/// Orbit size bucket for the self-dual survey.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OrbitSizeClass {
    #[serde(rename = "1")]
    One,
    #[serde(rename = "2")]
    Two,
    #[serde(rename = ">2")]
    More,
}

#[derive(Clone, Debug, Serialize)]
pub struct SurveyRow {
    pub name: String,
    pub params: CodeParams,
    pub self_dual: bool,
    pub orbit: OrbitSizeClass,
}

/// Self-dual codes whose graphs are built here: `h^3_e`, `H(s^2)` and the
/// circulant family for `m = 3, 4, 5`.
pub fn builtin_self_dual_codes() -> Result<Vec<(String, LinearCode)>> {
    let mut graphs = vec![
        ("he3".to_string(), extended_hamming_graph(3)?),
        ("H(s2)".to_string(), hamming_expansion(&star_graph(2)?)?),
    ];
    for m in 3..=5 {
        graphs.push((format!("circ({m})"), crate::constructions::circulant_size_two(m)?));
    }
    graphs
        .into_iter()
        .map(|(name, g)| {
            let left = g.bipartition().ok_or(Error::NotBipartite)?.left;
            Ok((name, crate::codes::code_from_side(&g, left)?))
        })
        .collect()
}

/// Classifies the ELC orbit size of the graph of each code as 1, 2, or
/// more than 2.
pub fn self_dual_orbit_survey(codes: &[(String, LinearCode)]) -> Result<Vec<SurveyRow>> {
    codes
        .iter()
        .map(|(name, code)| {
            let (g, _) = graph_from_code(code)?;
            if !g.is_connected() {
                return Err(Error::Disconnected);
            }
            let (members, truncated) = explore_keys(&g, OrbitKind::Elc, 2);
            let orbit = match (members.len(), truncated) {
                (1, false) => OrbitSizeClass::One,
                (2, false) => OrbitSizeClass::Two,
                _ => OrbitSizeClass::More,
            };
            let d = code.min_distance_bruteforce().ok();
            Ok(SurveyRow {
                name: name.clone(),
                params: CodeParams { n: code.length(), k: code.dimension(), d },
                self_dual: code.is_self_dual(),
                orbit,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extension_counts() {
        let s2 = star_graph(2).unwrap();
        assert_eq!(extension_sets(&s2, true).len(), 2);
        assert_eq!(extension_sets(&s2, false).len(), 3);
        let s4 = star_graph(4).unwrap();
        assert_eq!(extension_sets(&s4, true).len(), 2 + 8 - 2);
    }

    #[test]
    fn small_connected_counts() {
        let expected = [1, 1, 2, 6, 21, 112];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(connected_graphs(i + 1, false, false).unwrap().len(), e, "n={}", i + 1);
        }
        let bip = [1, 1, 1, 3, 5, 17];
        for (i, &e) in bip.iter().enumerate() {
            assert_eq!(connected_graphs(i + 1, true, false).unwrap().len(), e, "n={}", i + 1);
        }
        assert!(connected_graphs(11, false, false).is_err());
        assert!(OrbitCensus::new(OrbitKind::Elc, false).level(10).is_err());
    }

    #[test]
    fn small_orbit_counts() {
        let mut c = OrbitCensus::new(OrbitKind::Elc, true);
        let b: Vec<u64> = (2..=7).map(|n| c.count_orbits(n, GraphClass::Bipartite).unwrap()).collect();
        assert_eq!(b, vec![1, 1, 2, 3, 8, 15]);
        assert!(c.count_orbits(5, GraphClass::NonBipartite).is_err());
    }

    #[test]
    fn candidates_contain_table_names() {
        let c = candidate_specs(12).unwrap();
        let names: Vec<String> = c[12].values().map(ToString::to_string).collect();
        for want in ["s12", "S-2(s6)", "S-3(s4)", "S-4(s3)", "S-2(S-2(s3))", "c12", "C2(S-2(s3))", "Hkm(1,5)"] {
            assert!(names.iter().any(|n| n == want), "{want} missing from {names:?}");
        }
    }
}
