//! Generators for the maximal cyclotomic graphs (families and sporadics),
//! maximality verification, the embedding oracle for family membership,
//! and the four-cycle parity predicates on profile drawings.

mod generators;
mod parity;

pub use generators::{generate, sporadics_for, weight2_sporadics, FamilyName, FamilySpec};
pub use parity::{parity_conditions, CycleKind, ParityReport};

use crate::grow;
use crate::lmatrix::{CanonKey, LGraph};
use crate::polynomial::is_cyclotomic_spectrum;
use crate::quadint::{label_set, LabelTag, QuadInt, RingSpec};
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::path::PathBuf;
use std::sync::Mutex;

/// Errors from family generation and verification.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FamilyError {
    OutOfRangeK { family: &'static str, k: u32, min: u32 },
    InapplicableRing { family: &'static str, d: i64 },
    NotCyclotomic,
    NotConnected,
    BadDrawing(String),
    UnsupportedRing(i64),
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::OutOfRangeK { family, k, min } => {
                write!(f, "{family} requires k >= {min}, got {k}")
            }
            FamilyError::InapplicableRing { family, d } => {
                write!(f, "{family} does not exist over d = {d}")
            }
            FamilyError::NotCyclotomic => write!(f, "input graph is not cyclotomic"),
            FamilyError::NotConnected => write!(f, "input graph is not connected"),
            FamilyError::BadDrawing(m) => write!(f, "invalid drawing: {m}"),
            FamilyError::UnsupportedRing(d) => write!(f, "parity conventions defined only for d = -2, -7; got {d}"),
        }
    }
}

impl std::error::Error for FamilyError {}

impl From<crate::lmatrix::GraphError> for FamilyError {
    fn from(e: crate::lmatrix::GraphError) -> FamilyError {
        FamilyError::BadDrawing(e.to_string())
    }
}

/// A profile drawing: ordered columns with every vertex in exactly one
/// column; two-vertex columns carry top/bottom rows, hub columns none.
#[derive(Clone, Debug)]
pub struct Drawing {
    pub graph: LGraph,
    pub columns: Vec<Vec<usize>>,
    /// Row of each vertex within its column: 0 = top, 1 = bottom,
    /// `None` for single-vertex (hub) columns.
    pub rows: Vec<Option<u8>>,
}

impl Drawing {
    pub fn column_of(&self, v: usize) -> usize {
        self.columns.iter().position(|c| c.contains(&v)).expect("vertex in a column")
    }
}

/// True iff no single-vertex addition yields a connected cyclotomic
/// supergraph. Columns range over the full label set with per-vertex
/// feasibility pruning: a cyclotomic supergraph keeps every weighted
/// degree at most 4, so position `i` only admits labels of norm at most
/// `4 - wd(v_i)` and the whole column at most `4 - x^2`.
pub fn verify_maximal(g: &LGraph) -> Result<bool, FamilyError> {
    if !is_cyclotomic_spectrum(&g.char_poly()).map_err(|_| FamilyError::NotCyclotomic)? {
        return Err(FamilyError::NotCyclotomic);
    }
    if !g.is_connected() {
        return Err(FamilyError::NotConnected);
    }
    let ring = g.ring();
    let n = g.n();
    let full = label_set(ring, LabelTag::FullL).members;
    let slack: Vec<i64> = (0..n).map(|v| 4 - g.weighted_degree(v)).collect();
    // Depth-first over column entries within the remaining budget.
    let mut column: Vec<QuadInt> = vec![ring.zero(); n];
    for &x in &[0i64, 1, -1] {
        let budget = 4 - x * x;
        if extends_cyclotomically(g, &full, &slack, &mut column, 0, budget, x) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn extends_cyclotomically(
    g: &LGraph,
    pool: &[QuadInt],
    slack: &[i64],
    column: &mut Vec<QuadInt>,
    pos: usize,
    budget: i64,
    x: i64,
) -> bool {
    if pos == g.n() {
        if column.iter().all(|q| q.is_zero()) {
            return false; // disconnected addition, never a cyclotomic addition
        }
        let sup = grow::add_vertex(g, column, x).expect("column length");
        return grow::classify_addition(&sup) == grow::Class::Cyclotomic;
    }
    let cap = slack[pos].min(budget);
    for label in pool {
        let nm = label.norm();
        if nm > cap {
            continue;
        }
        column[pos] = *label;
        if extends_cyclotomically(g, pool, slack, column, pos + 1, budget - nm, x) {
            return true;
        }
    }
    column[pos] = g.ring().zero();
    false
}

/// Memoized induced-subgraph canonical key sets per (family, k, d, size),
/// optionally persisted as versioned key-list files.
pub struct EmbedCache {
    disk_dir: Option<PathBuf>,
    mem: Mutex<HashMap<(FamilyName, u32, i64, usize), HashSet<CanonKey>>>,
}

const KEYSET_FORMAT: &str = "famkeys/1";

impl EmbedCache {
    pub fn in_memory() -> EmbedCache {
        EmbedCache { disk_dir: None, mem: Mutex::new(HashMap::new()) }
    }

    pub fn on_disk(dir: PathBuf) -> EmbedCache {
        EmbedCache { disk_dir: Some(dir), mem: Mutex::new(HashMap::new()) }
    }

    fn load_or_build(
        &self,
        fam: FamilyName,
        k: u32,
        ring: RingSpec,
        size: usize,
    ) -> Result<HashSet<CanonKey>, FamilyError> {
        let key = (fam, k, ring.d, size);
        if let Some(s) = self.mem.lock().unwrap().get(&key) {
            return Ok(s.clone());
        }
        let path = self.disk_dir.as_ref().map(|d| {
            d.join(format!("{}_d{}_k{}_m{}.keys", fam.token(), -ring.d, k, size))
        });
        if let Some(p) = &path {
            if let Ok(text) = std::fs::read_to_string(p) {
                if let Some(set) = parse_keyset(&text) {
                    self.mem.lock().unwrap().insert(key, set.clone());
                    return Ok(set);
                }
            }
        }
        let spec = FamilySpec { name: fam, k: Some(k), ring };
        let (g, _) = generate(&spec)?;
        let mut set = HashSet::new();
        let n = g.n();
        if size <= n {
            let mut subset: Vec<usize> = Vec::with_capacity(size);
            collect_subset_keys(&g, size, 0, &mut subset, &mut set);
        }
        if let Some(p) = &path {
            let _ = std::fs::create_dir_all(p.parent().unwrap());
            let mut text = String::from(KEYSET_FORMAT);
            text.push('\n');
            let mut keys: Vec<String> = set.iter().map(|k| k.hex()).collect();
            keys.sort();
            for k in keys {
                text.push_str(&k);
                text.push('\n');
            }
            let _ = std::fs::write(p, text);
        }
        self.mem.lock().unwrap().insert(key, set.clone());
        Ok(set)
    }
}

fn parse_keyset(text: &str) -> Option<HashSet<CanonKey>> {
    let mut lines = text.lines();
    if lines.next()? != KEYSET_FORMAT {
        return None;
    }
    let mut out = HashSet::new();
    for line in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if line.len() % 2 != 0 {
            return None;
        }
        let mut bytes = Vec::with_capacity(line.len() / 2);
        for i in (0..line.len()).step_by(2) {
            bytes.push(u8::from_str_radix(&line[i..i + 2], 16).ok()?);
        }
        out.insert(CanonKey(bytes));
    }
    Some(out)
}

fn collect_subset_keys(
    g: &LGraph,
    size: usize,
    from: usize,
    subset: &mut Vec<usize>,
    keys: &mut HashSet<CanonKey>,
) {
    if subset.len() == size {
        let sub = g.induced_subgraph(subset).expect("valid subset");
        keys.insert(sub.canonical_key());
        return;
    }
    let remaining = size - subset.len();
    for v in from..=g.n().saturating_sub(remaining) {
        subset.push(v);
        collect_subset_keys(g, size, v + 1, subset, keys);
        subset.pop();
    }
}

/// True iff `g` is equivalent (full group) to an induced subgraph of
/// `generate(fam, k)` for some `k <= k_max`; decided by canonical-key
/// membership against memoized induced-subgraph key sets.
pub fn embeds_in_family(
    g: &LGraph,
    fam: FamilyName,
    k_max: u32,
    cache: &EmbedCache,
) -> Result<bool, FamilyError> {
    let key = g.canonical_key();
    let kmin = fam.k_min().ok_or(FamilyError::OutOfRangeK { family: fam.token(), k: 0, min: 1 })?;
    if k_max < kmin {
        return Err(FamilyError::OutOfRangeK { family: fam.token(), k: k_max, min: kmin });
    }
    if !fam.applicable(g.ring().d) {
        return Err(FamilyError::InapplicableRing { family: fam.token(), d: g.ring().d });
    }
    for k in kmin..=k_max {
        let keys = cache.load_or_build(fam, k, g.ring(), g.n())?;
        if keys.contains(&key) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// True iff `g` is equivalent to an induced subgraph of some sporadic
/// maximal cyclotomic graph over its ring.
pub fn embeds_in_sporadic(g: &LGraph) -> bool {
    let key = g.canonical_key();
    for (_, s) in sporadics_for(g.ring()) {
        if g.n() > s.n() {
            continue;
        }
        let mut keys = HashSet::new();
        let mut subset = Vec::new();
        collect_subset_keys(&s, g.n(), 0, &mut subset, &mut keys);
        if keys.contains(&key) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadint::ring_make;

    #[test]
    fn maximality_examples() {
        let r2 = ring_make(-2).unwrap();
        // single weight-1 edge extends to a path
        let e = LGraph::new(r2, vec![0, 0], &[(0, 1, r2.integer(1))]).unwrap();
        assert_eq!(verify_maximal(&e).unwrap(), false);
        // S2: the weight-4 edge is maximal
        let s2 = LGraph::new(r2, vec![0, 0], &[(0, 1, r2.integer(2))]).unwrap();
        assert_eq!(verify_maximal(&s2).unwrap(), true);
        // 1x1 (2) and (1)
        assert_eq!(verify_maximal(&LGraph::single(r2, 2)).unwrap(), true);
        assert_eq!(verify_maximal(&LGraph::single(r2, 1)).unwrap(), false);
        // noncyclotomic input rejected
        let h1 = LGraph::new(r2, vec![1, 1], &[(0, 1, r2.root())]).unwrap();
        assert!(verify_maximal(&h1).is_err());
    }

    #[test]
    fn embedding_examples() {
        let r2 = ring_make(-2).unwrap();
        let cache = EmbedCache::in_memory();
        // single weight-1 edge embeds in T_2k
        let e = LGraph::new(r2, vec![0, 0], &[(0, 1, r2.integer(1))]).unwrap();
        assert!(embeds_in_family(&e, FamilyName::T2k, 4, &cache).unwrap());
        // H1 embeds nowhere (noncyclotomic, families hereditary cyclotomic)
        let h1 = LGraph::new(r2, vec![1, 1], &[(0, 1, r2.root())]).unwrap();
        for fam in [FamilyName::T2k, FamilyName::C2kPp, FamilyName::C2kPm, FamilyName::C2k2Plus, FamilyName::T2k4] {
            assert!(!embeds_in_family(&h1, fam, 4, &cache).unwrap(), "{fam:?}");
        }
        // 10-vertex all-positive path embeds in T_12
        let mut edges = Vec::new();
        for i in 0..9usize {
            edges.push((i, i + 1, r2.integer(1)));
        }
        let path = LGraph::new(r2, vec![0; 10], &edges).unwrap();
        assert!(embeds_in_family(&path, FamilyName::T2k, 6, &cache).unwrap());
    }
}
