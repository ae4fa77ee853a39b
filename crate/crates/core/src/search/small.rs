//! The small growth search: starting from the two-vertex weight-2 seeds,
//! grow round by round, classify every addition exactly, deduplicate by
//! canonical key, and persist each completed round atomically so an
//! interrupted run resumes from the last checkpoint.
//!
//! The pruned schedule follows the published search: unrestricted columns
//! for rounds 3-5; from round 6 a charged new vertex only takes weight-1
//! entries; rounds 7-9 bound column norms by the weighted-degree cap; and
//! round 10 splits into three restricted routes plus mixed columns passed
//! through the X2/X4A/X4B matchers. Full mode classifies every addition
//! over the unrestricted column set (allowed up to round 6) — both modes
//! provably produce identical class sets wherever both run.

use super::{mahler_of_chi, ClassRec, ClassRecFile, Enclosure, SearchError};
use crate::grow::{
    add_vertex, apply_filters, enumerate_columns, AdditionOutcome, ColumnSpec, FilterDecision,
    GrowthContext, GrowthFilterSet,
};
use crate::lmatrix::{CanonKey, LGraph};
use crate::polynomial::IntPoly;
use crate::quadint::{enumerate_norm, label_set, LabelTag, QuadInt, RingSpec};
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum SearchMode {
    Pruned,
    Full,
}

impl SearchMode {
    pub fn token(&self) -> &'static str {
        match self {
            SearchMode::Pruned => "pruned",
            SearchMode::Full => "full",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub ring: RingSpec,
    pub n_max: usize,
    pub mode: SearchMode,
    pub out_dir: Option<PathBuf>,
    pub resume: bool,
    pub jobs: Option<usize>,
}

/// Per-round statistics; wall time is informational and excluded from
/// determinism comparisons.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RoundStats {
    pub n: usize,
    pub sigma_count: usize,
    pub t_count: usize,
    pub additions: u64,
    pub pruned: BTreeMap<String, u64>,
    pub min_mahler: Option<Enclosure>,
    pub max_mahler: Option<Enclosure>,
    pub wall_ms: u128,
}

impl RoundStats {
    /// Everything except the wall clock.
    pub fn deterministic_view(&self) -> (usize, usize, usize, u64, Vec<(String, u64)>, Option<Enclosure>, Option<Enclosure>) {
        (
            self.n,
            self.sigma_count,
            self.t_count,
            self.additions,
            self.pruned.iter().map(|(k, v)| (k.clone(), *v)).collect(),
            self.min_mahler.clone(),
            self.max_mahler.clone(),
        )
    }
}

/// One completed round: deduplicated cyclotomic classes and minimal
/// noncyclotomic finds.
#[derive(Clone, Debug)]
pub struct SearchRound {
    pub stats: RoundStats,
    pub sigma: Vec<ClassRec>,
    pub t: Vec<ClassRec>,
}

/// Summary of a whole run (the machine-readable results table).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchSummary {
    pub format: String,
    pub d: i64,
    pub mode: String,
    pub n_max: usize,
    pub complete_through: usize,
    pub rounds: Vec<RoundStats>,
}

const SUMMARY_FORMAT: &str = "search-summary/1";
const ROUND_FORMAT: &str = "round/1";
const RECORDS_FORMAT: &str = "lrecords/1";

#[derive(Serialize, Deserialize)]
struct RoundFile {
    format: String,
    n: usize,
    stats: RoundStats,
    sigma: Vec<ClassRecFile>,
    t: Vec<ClassRecFile>,
}

/// The seed set: the three cyclotomic two-vertex graphs with a weight-2
/// edge, i.e. charge pairs (+,-), (0,0), (+,0) on the edge label omega.
pub fn seeds(ring: RingSpec) -> Vec<ClassRec> {
    let w = weight2_label(ring);
    let mut out = Vec::new();
    for charges in [vec![1, -1], vec![0, 0], vec![1, 0]] {
        let g = LGraph::new(ring, charges, &[(0, 1, w)]).expect("seed");
        let (canon, key) = g.canonical_form();
        let chi = canon.char_poly();
        out.push(ClassRec { key, graph: canon, chi, mahler: None });
    }
    out.sort_by(|a, b| a.key.cmp(&b.key));
    out
}

fn weight2_label(ring: RingSpec) -> QuadInt {
    match ring.d {
        -2 => ring.root(),
        -7 => QuadInt::new(ring, 1, 1).expect("omega"),
        _ => unreachable!("search rings are -2 and -7"),
    }
}

/// One growth route: a column set and the charges it serves.
struct Route {
    pool: Vec<QuadInt>,
    bound: Option<i64>,
    charges: Vec<i64>,
    /// keep only columns with entries from both L1 and L2
    mixed_only: bool,
    filters: GrowthFilterSet,
}

fn degree_cap_for(n: usize, mode: SearchMode) -> Option<i64> {
    if mode == SearchMode::Pruned && n >= 7 {
        Some(4)
    } else {
        None
    }
}

fn routes_for(ring: RingSpec, n: usize, mode: SearchMode) -> Vec<Route> {
    let lprime = label_set(ring, LabelTag::LPrime).members;
    let mut l1z = vec![ring.zero()];
    l1z.extend(enumerate_norm(ring, 1));
    let mut l2z = vec![ring.zero()];
    l2z.extend(enumerate_norm(ring, 2));
    let all_charges = vec![-1i64, 0, 1];
    match mode {
        SearchMode::Full => vec![Route {
            pool: lprime,
            bound: None,
            charges: all_charges,
            mixed_only: false,
            filters: GrowthFilterSet::none(),
        }],
        SearchMode::Pruned => {
            let patterns = GrowthFilterSet::all_patterns();
            match n {
                3..=5 => vec![Route {
                    pool: lprime,
                    bound: None,
                    charges: all_charges,
                    mixed_only: false,
                    filters: patterns,
                }],
                6 => vec![
                    Route {
                        pool: lprime,
                        bound: None,
                        charges: vec![0],
                        mixed_only: false,
                        filters: patterns,
                    },
                    Route {
                        pool: l1z,
                        bound: None,
                        charges: vec![-1, 1],
                        mixed_only: false,
                        filters: patterns,
                    },
                ],
                7..=9 => vec![
                    Route {
                        pool: lprime,
                        bound: Some(4),
                        charges: vec![0],
                        mixed_only: false,
                        filters: patterns,
                    },
                    Route {
                        pool: l1z,
                        bound: Some(3),
                        charges: vec![-1, 1],
                        mixed_only: false,
                        filters: patterns,
                    },
                ],
                10 => {
                    let mixed_filters = GrowthFilterSet {
                        x2: true,
                        x4a: true,
                        x4b: true,
                        x3a: false,
                        x3b: false,
                        degree_cap: None,
                    };
                    vec![
                        Route {
                            pool: l1z.clone(),
                            bound: Some(3),
                            charges: vec![-1, 1],
                            mixed_only: false,
                            filters: patterns,
                        },
                        Route {
                            pool: l1z,
                            bound: Some(4),
                            charges: vec![0],
                            mixed_only: false,
                            filters: patterns,
                        },
                        Route {
                            pool: l2z,
                            bound: Some(4),
                            charges: vec![0],
                            mixed_only: false,
                            filters: patterns,
                        },
                        Route {
                            pool: lprime,
                            bound: Some(4),
                            charges: vec![0],
                            mixed_only: true,
                            filters: mixed_filters,
                        },
                    ]
                }
                _ => unreachable!("rounds run from 3 to 10"),
            }
        }
    }
}

struct RoundAccum {
    sigma: BTreeMap<CanonKey, ClassRec>,
    t: BTreeMap<CanonKey, ClassRec>,
    additions: u64,
    pruned: BTreeMap<String, u64>,
}

impl RoundAccum {
    fn new() -> RoundAccum {
        RoundAccum { sigma: BTreeMap::new(), t: BTreeMap::new(), additions: 0, pruned: BTreeMap::new() }
    }

    fn merge(mut self, other: RoundAccum) -> RoundAccum {
        for (k, v) in other.sigma {
            self.sigma.entry(k).or_insert(v);
        }
        for (k, v) in other.t {
            self.t.entry(k).or_insert(v);
        }
        self.additions += other.additions;
        for (k, v) in other.pruned {
            *self.pruned.entry(k).or_insert(0) += v;
        }
        self
    }
}

fn grow_one_base(base: &LGraph, routes: &[Route], cap: Option<i64>) -> RoundAccum {
    let mut acc = RoundAccum::new();
    let ctx = GrowthContext::new(base);
    let n = base.n();
    let base_wd: Vec<i64> = (0..n).map(|v| base.weighted_degree(v)).collect();
    for route in routes {
        let spec =
            ColumnSpec { len: n, pool: route.pool.clone(), reduced: true, bound: route.bound };
        let columns = enumerate_columns(&spec).expect("nonempty pool");
        for c in &columns {
            if route.mixed_only {
                let has1 = c.iter().any(|q| q.norm() == 1);
                let has2 = c.iter().any(|q| q.norm() == 2);
                if !has1 || !has2 {
                    continue;
                }
            }
            for &x in &route.charges {
                acc.additions += 1;
                if let Some(cap) = cap {
                    // weighted-degree precheck without building the graph
                    let col_norm: i64 = c.iter().map(|q| q.norm()).sum();
                    let mut capped = col_norm + x * x > cap;
                    if !capped {
                        for (i, q) in c.iter().enumerate() {
                            if base_wd[i] + q.norm() > cap {
                                capped = true;
                                break;
                            }
                        }
                    }
                    if capped {
                        *acc.pruned.entry("degree".into()).or_insert(0) += 1;
                        continue;
                    }
                }
                let needs_patterns = route.filters.x2
                    || route.filters.x3a
                    || route.filters.x3b
                    || route.filters.x4a
                    || route.filters.x4b;
                if needs_patterns {
                    let sup = add_vertex(base, c, x).expect("column length");
                    if let FilterDecision::Prune(reason) = apply_filters(&sup, &route.filters) {
                        *acc.pruned.entry(reason.to_string()).or_insert(0) += 1;
                        continue;
                    }
                    record_outcome(&mut acc, &ctx, base, c, x, Some(sup));
                } else {
                    record_outcome(&mut acc, &ctx, base, c, x, None);
                }
            }
        }
    }
    acc
}

fn record_outcome(
    acc: &mut RoundAccum,
    ctx: &GrowthContext,
    base: &LGraph,
    c: &[QuadInt],
    x: i64,
    prebuilt: Option<LGraph>,
) {
    match ctx.classify(c, x) {
        AdditionOutcome::Discard => {}
        AdditionOutcome::Cyclotomic => {
            let sup = prebuilt.unwrap_or_else(|| add_vertex(base, c, x).expect("column length"));
            let (canon, key) = sup.canonical_form();
            acc.sigma.entry(key.clone()).or_insert_with(|| {
                let chi = IntPoly::from_i128(&ctx.chi_of_addition(c, x));
                ClassRec { key, graph: canon, chi, mahler: None }
            });
        }
        AdditionOutcome::MinimalNoncyclotomic => {
            let sup = prebuilt.unwrap_or_else(|| add_vertex(base, c, x).expect("column length"));
            assert!(sup.has_edge_of_norm(2), "search finds must carry a weight-2 edge");
            assert!(sup.is_connected(), "minimal noncyclotomic finds are connected");
            let (canon, key) = sup.canonical_form();
            acc.t.entry(key.clone()).or_insert_with(|| {
                let chi = IntPoly::from_i128(&ctx.chi_of_addition(c, x));
                ClassRec { key, graph: canon, chi, mahler: None }
            });
        }
    }
}

/// Runs one round from the previous cyclotomic classes.
fn run_round(prev_sigma: &[ClassRec], ring: RingSpec, n: usize, mode: SearchMode) -> SearchRound {
    let start = Instant::now();
    let routes = routes_for(ring, n, mode);
    let cap = degree_cap_for(n, mode);
    let acc = prev_sigma
        .par_iter()
        .map(|rec| grow_one_base(&rec.graph, &routes, cap))
        .reduce(RoundAccum::new, RoundAccum::merge);
    let sigma: Vec<ClassRec> = acc.sigma.into_values().collect();
    let mut t: Vec<ClassRec> = acc.t.into_values().collect();
    // Certified Mahler enclosures for the minimal noncyclotomic classes.
    let enclosures: Vec<(BigRational, BigRational)> =
        t.par_iter().map(|rec| mahler_of_chi(&rec.chi)).collect();
    for (rec, m) in t.iter_mut().zip(enclosures) {
        rec.mahler = Some(m);
    }
    let min_mahler = t
        .iter()
        .filter_map(|r| r.mahler.as_ref())
        .min_by(|a, b| (&a.1, &a.0).cmp(&(&b.1, &b.0)))
        .map(|(lo, hi)| Enclosure::from_bounds(lo, hi));
    let max_mahler = t
        .iter()
        .filter_map(|r| r.mahler.as_ref())
        .max_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)))
        .map(|(lo, hi)| Enclosure::from_bounds(lo, hi));
    let stats = RoundStats {
        n,
        sigma_count: sigma.len(),
        t_count: t.len(),
        additions: acc.additions,
        pruned: acc.pruned,
        min_mahler,
        max_mahler,
        wall_ms: start.elapsed().as_millis(),
    };
    SearchRound { stats, sigma, t }
}

fn atomic_write(path: &Path, contents: &str) -> Result<(), SearchError> {
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, contents)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

fn round_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("round_{n:02}.json"))
}

fn write_round(dir: &Path, round: &SearchRound) -> Result<(), SearchError> {
    let file = RoundFile {
        format: ROUND_FORMAT.into(),
        n: round.stats.n,
        stats: round.stats.clone(),
        sigma: round.sigma.iter().map(|r| r.to_file()).collect(),
        t: round.t.iter().map(|r| r.to_file()).collect(),
    };
    let text = serde_json::to_string(&file).expect("serialize round");
    atomic_write(&round_path(dir, round.stats.n), &text)
}

fn read_round(dir: &Path, n: usize) -> Result<SearchRound, SearchError> {
    let text = std::fs::read_to_string(round_path(dir, n))?;
    let file: RoundFile =
        serde_json::from_str(&text).map_err(|e| SearchError::Corrupt(e.to_string()))?;
    if file.format != ROUND_FORMAT {
        return Err(SearchError::Corrupt(format!("bad round format {}", file.format)));
    }
    let sigma = file.sigma.iter().map(ClassRec::from_file).collect::<Result<Vec<_>, _>>()?;
    let t = file.t.iter().map(ClassRec::from_file).collect::<Result<Vec<_>, _>>()?;
    Ok(SearchRound { stats: file.stats, sigma, t })
}

fn write_summary(dir: &Path, summary: &SearchSummary) -> Result<(), SearchError> {
    atomic_write(&dir.join("summary.json"), &serde_json::to_string_pretty(summary).unwrap())?;
    // human-readable table
    let mut text = String::new();
    text.push_str(&format!("{SUMMARY_FORMAT}\n"));
    text.push_str(&format!(
        "d = {}, mode = {}, complete through n = {}\n",
        summary.d, summary.mode, summary.complete_through
    ));
    text.push_str("  n  |Sigma_n|  |T_n|  min M(T_n)        additions\n");
    for r in &summary.rounds {
        let min = r
            .min_mahler
            .as_ref()
            .map(|e| e.decimal.clone())
            .unwrap_or_else(|| "-".into());
        text.push_str(&format!(
            "{:3}  {:8}  {:5}  {:16}  {}\n",
            r.n, r.sigma_count, r.t_count, min, r.additions
        ));
    }
    atomic_write(&dir.join("summary.txt"), &text)
}

/// Rewrites the record stream from the persisted rounds (source of truth).
fn rewrite_records(dir: &Path, rounds: &[SearchRound]) -> Result<(), SearchError> {
    let mut text = String::from(RECORDS_FORMAT);
    text.push('\n');
    for round in rounds {
        for (kind, recs) in [("sigma", &round.sigma), ("t", &round.t)] {
            for rec in recs.iter() {
                #[derive(Serialize)]
                struct Line<'a> {
                    round: usize,
                    kind: &'a str,
                    #[serde(flatten)]
                    rec: ClassRecFile,
                }
                let line = Line { round: round.stats.n, kind, rec: rec.to_file() };
                text.push_str(&serde_json::to_string(&line).unwrap());
                text.push('\n');
            }
        }
    }
    atomic_write(&dir.join("records.jsonl"), &text)
}

/// Runs the small search, optionally resuming from persisted rounds.
/// Returns the rounds `3..=n_max` in order.
pub fn run_small_search(opts: &SearchOptions) -> Result<Vec<SearchRound>, SearchError> {
    if opts.ring.d != -2 && opts.ring.d != -7 {
        return Err(SearchError::BadOptions(format!(
            "the weight-2 growth search applies to d = -2 and d = -7 only, got {}",
            opts.ring.d
        )));
    }
    if !(3..=10).contains(&opts.n_max) {
        return Err(SearchError::BadOptions("n_max must lie in 3..=10".into()));
    }
    if opts.mode == SearchMode::Full && opts.n_max > 6 {
        return Err(SearchError::BadOptions(
            "full mode is cost-guarded to n_max <= 6; use pruned mode beyond".into(),
        ));
    }
    let run = |rounds: &mut Vec<SearchRound>| -> Result<(), SearchError> {
        let mut prev: Vec<ClassRec> = if let Some(last) = rounds.last() {
            last.sigma.clone()
        } else {
            seeds(opts.ring)
        };
        for n in (3 + rounds.len())..=opts.n_max {
            let round = run_round(&prev, opts.ring, n, opts.mode);
            prev = round.sigma.clone();
            rounds.push(round);
            if let Some(dir) = &opts.out_dir {
                write_round(dir, rounds.last().unwrap())?;
                let summary = SearchSummary {
                    format: SUMMARY_FORMAT.into(),
                    d: opts.ring.d,
                    mode: opts.mode.token().into(),
                    n_max: opts.n_max,
                    complete_through: n,
                    rounds: rounds.iter().map(|r| r.stats.clone()).collect(),
                };
                write_summary(dir, &summary)?;
                rewrite_records(dir, rounds)?;
            }
        }
        Ok(())
    };

    let mut rounds: Vec<SearchRound> = Vec::new();
    if let Some(dir) = &opts.out_dir {
        std::fs::create_dir_all(dir)?;
        if opts.resume {
            // Load the last complete checkpoint; ignore anything newer or
            // partial (the summary is written after the round file).
            if let Ok(text) = std::fs::read_to_string(dir.join("summary.json")) {
                let summary: SearchSummary =
                    serde_json::from_str(&text).map_err(|e| SearchError::Corrupt(e.to_string()))?;
                if summary.d != opts.ring.d || summary.mode != opts.mode.token() {
                    return Err(SearchError::BadOptions(
                        "existing run directory holds a different search".into(),
                    ));
                }
                for n in 3..=summary.complete_through.min(opts.n_max) {
                    rounds.push(read_round(dir, n)?);
                }
            }
        }
    }
    run(&mut rounds)?;
    Ok(rounds)
}

/// Loads a persisted summary (for certificates and inspection).
pub fn load_summary(dir: &Path) -> Result<SearchSummary, SearchError> {
    let text = std::fs::read_to_string(dir.join("summary.json"))?;
    let summary: SearchSummary =
        serde_json::from_str(&text).map_err(|e| SearchError::Corrupt(e.to_string()))?;
    if summary.format != SUMMARY_FORMAT {
        return Err(SearchError::Corrupt(format!("bad summary format {}", summary.format)));
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadint::ring_make;

    #[test]
    fn seeds_are_the_three_classes() {
        for d in [-2, -7] {
            let s = seeds(ring_make(d).unwrap());
            assert_eq!(s.len(), 3);
            // distinct classes
            assert!(s[0].key != s[1].key && s[1].key != s[2].key && s[0].key != s[2].key);
            for rec in &s {
                assert!(crate::polynomial::is_cyclotomic_spectrum(&rec.chi).unwrap());
                assert!(rec.graph.has_edge_of_norm(2));
            }
        }
    }

    #[test]
    fn round3_counts_match_published_table() {
        for (d, expect_t) in [(-2i64, 34usize), (-7, 67)] {
            let opts = SearchOptions {
                ring: ring_make(d).unwrap(),
                n_max: 3,
                mode: SearchMode::Full,
                out_dir: None,
                resume: false,
                jobs: None,
            };
            let rounds = run_small_search(&opts).unwrap();
            assert_eq!(rounds.len(), 1);
            assert_eq!(rounds[0].stats.t_count, expect_t, "d={d}");
        }
    }

    #[test]
    fn full_and_pruned_agree_on_round_3() {
        let ring = ring_make(-2).unwrap();
        let mk = |mode| SearchOptions { ring, n_max: 3, mode, out_dir: None, resume: false, jobs: None };
        let full = run_small_search(&mk(SearchMode::Full)).unwrap();
        let pruned = run_small_search(&mk(SearchMode::Pruned)).unwrap();
        let keys = |r: &SearchRound| {
            (
                r.sigma.iter().map(|c| c.key.clone()).collect::<Vec<_>>(),
                r.t.iter().map(|c| c.key.clone()).collect::<Vec<_>>(),
            )
        };
        assert_eq!(keys(&full[0]), keys(&pruned[0]));
    }
}
