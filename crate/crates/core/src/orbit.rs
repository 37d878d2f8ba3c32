//! Orbits under LC and ELC, up to isomorphism.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{bit, VertexSet};
use crate::canon::{canonical_key, sided_key, CanonKey};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_ORBIT_CAP: usize = 10_000_000;

/// Orbit size cap, overridable through `ELC_ORBIT_CAP`.
pub fn default_cap() -> usize {
    std::env::var("ELC_ORBIT_CAP")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&c: &usize| c > 0)
        .unwrap_or(DEFAULT_ORBIT_CAP)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrbitKind {
    Elc,
    Lc,
}

impl fmt::Display for OrbitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrbitKind::Elc => "elc",
            OrbitKind::Lc => "lc",
        })
    }
}

impl std::str::FromStr for OrbitKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "elc" => Ok(OrbitKind::Elc),
            "lc" => Ok(OrbitKind::Lc),
            other => Err(Error::Parse(format!("unknown orbit kind {other:?}"))),
        }
    }
}

/// Canonical forms reachable from a start graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub kind: OrbitKind,
    /// Sorted canonical keys.
    pub members: BTreeSet<CanonKey>,
    /// Exploration stopped at the size cap, so `members` is a subset.
    pub truncated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitSummary {
    pub kind: OrbitKind,
    pub size: usize,
    pub representative: String,
    pub truncated: bool,
}

impl Orbit {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// Smallest member key.
    pub fn representative(&self) -> &CanonKey {
        self.members.first().expect("orbits are never empty")
    }

    pub fn contains(&self, key: &CanonKey) -> bool {
        self.members.contains(key)
    }

    pub fn contains_graph(&self, g: &Graph) -> bool {
        self.members.contains(&canonical_key(g))
    }

    /// One graph6 string per line, in key order.
    pub fn dump(&self) -> String {
        let mut lines: Vec<&str> = self.members.iter().map(|k| k.graph6()).collect();
        lines.sort_unstable();
        let mut s = lines.join("\n");
        s.push('\n');
        s
    }

    pub fn summary(&self) -> OrbitSummary {
        OrbitSummary {
            kind: self.kind,
            size: self.size(),
            representative: self.representative().graph6().to_string(),
            truncated: self.truncated,
        }
    }
}

fn neighbors(g: &Graph, kind: OrbitKind) -> Vec<Graph> {
    match kind {
        OrbitKind::Elc => g.edges().map(|(u, v)| g.elc_unchecked(u, v)).collect(),
        OrbitKind::Lc => (0..g.order()).map(|v| g.lc_unchecked(v)).collect(),
    }
}

/// Breadth-first exploration returning the set of member keys and whether
/// the cap stopped it. The caller has checked connectivity.
pub(crate) fn explore_keys(g: &Graph, kind: OrbitKind, cap: usize) -> (HashSet<CanonKey>, bool) {
    let mut seen = HashSet::new();
    seen.insert(canonical_key(g));
    let mut frontier = VecDeque::from([g.clone()]);
    while let Some(h) = frontier.pop_front() {
        for x in neighbors(&h, kind) {
            let key = canonical_key(&x);
            if seen.contains(&key) {
                continue;
            }
            if seen.len() >= cap {
                return (seen, true);
            }
            seen.insert(key);
            frontier.push_back(x);
        }
    }
    (seen, false)
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// Orbit of `g` under `kind`, stopping once `cap` members are known and
/// another new member appears.
pub fn orbit(g: &Graph, kind: OrbitKind, cap: usize) -> Result<Orbit> {
    require_connected(g)?;
    let (keys, truncated) = explore_keys(g, kind, cap.max(1));
    Ok(Orbit { kind, members: keys.into_iter().collect(), truncated })
}

pub fn elc_orbit(g: &Graph, cap: Option<usize>) -> Result<Orbit> {
    orbit(g, OrbitKind::Elc, cap.unwrap_or_else(default_cap))
}

pub fn lc_orbit(g: &Graph, cap: Option<usize>) -> Result<Orbit> {
    orbit(g, OrbitKind::Lc, cap.unwrap_or_else(default_cap))
}

/// Returns `None` when every ELC result is isomorphic to `g`, otherwise the
/// first edge (in lexicographic order) whose ELC leaves the class.
pub fn elc_witness(g: &Graph) -> Result<Option<(usize, usize)>> {
    require_connected(g)?;
    Ok(elc_witness_unchecked(g))
}

pub(crate) fn elc_witness_unchecked(g: &Graph) -> Option<(usize, usize)> {
    let mut deg = g.degrees();
    deg.sort_unstable();
    let m = g.edge_count();
    let mut key: Option<CanonKey> = None;
    for (u, v) in g.edges() {
        let h = g.elc_unchecked(u, v);
        if h.edge_count() != m {
            return Some((u, v));
        }
        let mut dh = h.degrees();
        dh.sort_unstable();
        if dh != deg {
            return Some((u, v));
        }
        let k = key.get_or_insert_with(|| canonical_key(g));
        if canonical_key(&h) != *k {
            return Some((u, v));
        }
    }
    None
}

pub fn is_elc_preserved(g: &Graph) -> Result<bool> {
    Ok(elc_witness(g)?.is_none())
}

/// True iff local complementation at every vertex gives a graph
/// isomorphic to `g`.
pub fn is_lc_preserved(g: &Graph) -> Result<bool> {
    require_connected(g)?;
    let m = g.edge_count();
    if (0..g.order()).any(|v| g.lc_unchecked(v).edge_count() != m) {
        return Ok(false);
    }
    let key = canonical_key(g);
    Ok((0..g.order()).all(|v| canonical_key(&g.lc_unchecked(v)) == key))
}

/// Splits the LC orbit of `g` into ELC orbits, sorted by representative.
pub fn partition_lc_orbit(g: &Graph, cap: Option<usize>) -> Result<Vec<Orbit>> {
    let cap = cap.unwrap_or_else(default_cap);
    let lc = orbit(g, OrbitKind::Lc, cap)?;
    if lc.truncated {
        return Err(Error::Capacity(format!("LC orbit exceeds {cap} members")));
    }
    let mut covered: HashSet<CanonKey> = HashSet::new();
    let mut parts = Vec::new();
    for key in &lc.members {
        if covered.contains(key) {
            continue;
        }
        let part = orbit(&key.to_graph(), OrbitKind::Elc, cap)?;
        if part.truncated {
            return Err(Error::Capacity(format!("ELC orbit exceeds {cap} members")));
        }
        covered.extend(part.members.iter().cloned());
        parts.push(part);
    }
    parts.sort_by(|a, b| a.representative().cmp(b.representative()));
    Ok(parts)
}

/// ELC orbit of a bipartite graph whose side `side` is tracked through
/// every pivot. Members are pairs of a graph and the image of the side.
#[derive(Clone, Debug)]
pub struct SidedOrbit {
    pub members: Vec<(Graph, VertexSet)>,
    pub keys: HashSet<CanonKey>,
    pub truncated: bool,
}

/// Pivoting on `{u, v}` with the label exchange moves `u` and `v` across
/// the bipartition, so the tracked side changes by exactly those two.
pub fn sided_elc_orbit(g: &Graph, side: VertexSet, cap: usize) -> Result<SidedOrbit> {
    require_connected(g)?;
    let p = g.bipartition().ok_or(Error::NotBipartite)?;
    if side != p.left && side != p.right {
        return Err(Error::InvalidPartition("tracked set is not a side of the bipartition".into()));
    }
    let mut keys = HashSet::new();
    keys.insert(sided_key(g, side));
    let mut members = vec![(g.clone(), side)];
    let mut next = 0;
    while next < members.len() {
        let (h, s) = members[next].clone();
        next += 1;
        for (u, v) in h.edges() {
            let x = h.elc_unchecked(u, v);
            let xs = s ^ (bit(u) | bit(v));
            let key = sided_key(&x, xs);
            if keys.contains(&key) {
                continue;
            }
            if keys.len() >= cap {
                return Ok(SidedOrbit { members, keys, truncated: true });
            }
            keys.insert(key);
            members.push((x, xs));
        }
    }
    Ok(SidedOrbit { members, keys, truncated: false })
}
