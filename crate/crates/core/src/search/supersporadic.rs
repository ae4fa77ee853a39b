//! The supersporadic sweeps: grow every k-vertex induced subgraph of the
//! large weight-1 sporadics (14 and 16 vertices) by one uncharged vertex
//! and confirm that no addition is minimal noncyclotomic with a weight-2
//! edge.
//!
//! Connected subgraph representatives take columns from the bounded set
//! over `L2 ∪ {0}` (anything with a weight-1 entry would induce an X3B or
//! X4B form); disconnected representatives qualify only when one of their
//! components is a singleton vertex, and then take bounded columns over
//! the whole of `L'` (restricted to those carrying a weight-2 entry, since
//! only weight-2 finds are in scope). The new vertex is always uncharged
//! (a charge would induce X2).

use super::{mahler_of_chi, ClassRec, ClassRecFile, SearchError};
use crate::families::{generate, FamilyName, FamilySpec};
use crate::grow::{add_vertex, enumerate_columns, AdditionOutcome, ColumnSpec, GrowthContext};
use crate::lmatrix::{CanonKey, LGraph};
use crate::polynomial::IntPoly;
use crate::quadint::{enumerate_norm, label_set, LabelTag, RingSpec};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

#[derive(Clone, Debug)]
pub struct SupersporadicOptions {
    pub ring: RingSpec,
    pub base: FamilyName,
    pub k_min: usize,
    pub k_max: usize,
    pub out_dir: Option<PathBuf>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct KReport {
    pub k: usize,
    pub subsets: usize,
    pub connected_classes: usize,
    pub disconnected_singleton_classes: usize,
    pub disconnected_skipped_x4b: usize,
    pub additions: u64,
    pub finds: Vec<ClassRecFile>,
    pub wall_ms: u128,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SupersporadicReport {
    pub format: String,
    pub d: i64,
    pub base: String,
    pub k_min: usize,
    pub k_max: usize,
    pub per_k: Vec<KReport>,
    pub total_finds: usize,
}

const SUPERSPORADIC_FORMAT: &str = "supersporadic/1";

/// Runs the sweep for one base sporadic over the given subgraph sizes.
pub fn run_supersporadic(opts: &SupersporadicOptions) -> Result<SupersporadicReport, SearchError> {
    if opts.ring.d != -2 && opts.ring.d != -7 {
        return Err(SearchError::BadOptions("supersporadic sweeps apply to d = -2, -7".into()));
    }
    if !matches!(opts.base, FamilyName::S14 | FamilyName::S16) {
        return Err(SearchError::BadOptions("base must be S14 or S16".into()));
    }
    let (base, _) = generate(&FamilySpec { name: opts.base, k: None, ring: opts.ring })
        .map_err(|e| SearchError::BadOptions(e.to_string()))?;
    if !(10..=base.n()).contains(&opts.k_min) || opts.k_max > base.n() || opts.k_min > opts.k_max {
        return Err(SearchError::BadOptions(format!(
            "k range must lie within 10..={}",
            base.n()
        )));
    }

    let mut per_k = Vec::new();
    for k in opts.k_min..=opts.k_max {
        let start = Instant::now();
        // Deduplicate the k-vertex induced subgraphs modulo equivalence.
        let mut subsets: Vec<Vec<usize>> = Vec::new();
        let mut pick = Vec::new();
        enumerate_subsets(base.n(), k, 0, &mut pick, &mut subsets);
        let reps: Vec<(CanonKey, LGraph, bool, bool)> = subsets
            .par_iter()
            .map(|s| {
                let sub = base.induced_subgraph(s).expect("subset");
                let (canon, key) = sub.canonical_form();
                let connected = canon.is_connected();
                let has_singleton = canon.components().iter().any(|c| c.len() == 1);
                (key, canon, connected, has_singleton)
            })
            .collect();
        let mut seen: BTreeMap<CanonKey, (LGraph, bool, bool)> = BTreeMap::new();
        for (key, g, conn, single) in reps {
            seen.entry(key).or_insert((g, conn, single));
        }
        let connected: Vec<&LGraph> =
            seen.values().filter(|(_, c, _)| *c).map(|(g, _, _)| g).collect();
        let disconnected_singleton: Vec<&LGraph> =
            seen.values().filter(|(_, c, s)| !*c && *s).map(|(g, _, _)| g).collect();
        let skipped = seen.values().filter(|(_, c, s)| !*c && !*s).count();

        // Column sets.
        let mut l2z = vec![opts.ring.zero()];
        l2z.extend(enumerate_norm(opts.ring, 2));
        let lprime = label_set(opts.ring, LabelTag::LPrime).members;
        let connected_cols = enumerate_columns(&ColumnSpec {
            len: k,
            pool: l2z,
            reduced: true,
            bound: Some(4),
        })
        .expect("pool");
        let disconnected_cols: Vec<_> = enumerate_columns(&ColumnSpec {
            len: k,
            pool: lprime,
            reduced: true,
            bound: Some(4),
        })
        .expect("pool")
        .into_iter()
        .filter(|c| c.iter().any(|q| q.norm() == 2))
        .collect();

        struct Acc {
            additions: u64,
            finds: BTreeMap<CanonKey, ClassRec>,
        }
        let sweep = |bases: &[&LGraph], cols: &Vec<Vec<crate::quadint::QuadInt>>| -> Acc {
            bases
                .par_iter()
                .map(|g| {
                    let ctx = GrowthContext::new(g);
                    let mut acc = Acc { additions: 0, finds: BTreeMap::new() };
                    for c in cols {
                        acc.additions += 1;
                        if let AdditionOutcome::MinimalNoncyclotomic = ctx.classify(c, 0) {
                            let sup = add_vertex(g, c, 0).expect("column length");
                            if !sup.has_edge_of_norm(2) {
                                continue;
                            }
                            let (canon, key) = sup.canonical_form();
                            let chi = IntPoly::from_i128(&ctx.chi_of_addition(c, 0));
                            let mahler = Some(mahler_of_chi(&chi));
                            acc.finds
                                .entry(key.clone())
                                .or_insert(ClassRec { key, graph: canon, chi, mahler });
                        }
                    }
                    acc
                })
                .reduce(
                    || Acc { additions: 0, finds: BTreeMap::new() },
                    |mut a, b| {
                        a.additions += b.additions;
                        for (k, v) in b.finds {
                            a.finds.entry(k).or_insert(v);
                        }
                        a
                    },
                )
        };
        let acc1 = sweep(&connected, &connected_cols);
        let acc2 = sweep(&disconnected_singleton, &disconnected_cols);
        let mut finds: BTreeMap<CanonKey, ClassRec> = acc1.finds;
        for (k2, v) in acc2.finds {
            finds.entry(k2).or_insert(v);
        }
        per_k.push(KReport {
            k,
            subsets: subsets.len(),
            connected_classes: connected.len(),
            disconnected_singleton_classes: disconnected_singleton.len(),
            disconnected_skipped_x4b: skipped,
            additions: acc1.additions + acc2.additions,
            finds: finds.values().map(|r| r.to_file()).collect(),
            wall_ms: start.elapsed().as_millis(),
        });
    }

    let total_finds = per_k.iter().map(|r| r.finds.len()).sum();
    let report = SupersporadicReport {
        format: SUPERSPORADIC_FORMAT.into(),
        d: opts.ring.d,
        base: opts.base.token().into(),
        k_min: opts.k_min,
        k_max: opts.k_max,
        per_k,
        total_finds,
    };
    if let Some(dir) = &opts.out_dir {
        std::fs::create_dir_all(dir)?;
        let name = format!("supersporadic_d{}_{}.json", -opts.ring.d, opts.base.token());
        let tmp = dir.join(format!("{name}.tmp"));
        std::fs::write(&tmp, serde_json::to_string_pretty(&report).unwrap())?;
        std::fs::rename(tmp, dir.join(name))?;
    }
    Ok(report)
}

/// Loads a persisted sweep report.
pub fn load_supersporadic(path: &std::path::Path) -> Result<SupersporadicReport, SearchError> {
    let text = std::fs::read_to_string(path)?;
    let report: SupersporadicReport =
        serde_json::from_str(&text).map_err(|e| SearchError::Corrupt(e.to_string()))?;
    if report.format != SUPERSPORADIC_FORMAT {
        return Err(SearchError::Corrupt(format!("bad report format {}", report.format)));
    }
    Ok(report)
}

fn enumerate_subsets(
    n: usize,
    k: usize,
    from: usize,
    pick: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if pick.len() == k {
        out.push(pick.clone());
        return;
    }
    let need = k - pick.len();
    for v in from..=n.saturating_sub(need) {
        pick.push(v);
        enumerate_subsets(n, k, v + 1, pick, out);
        pick.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadint::ring_make;

    #[test]
    fn s14_top_slice_has_zero_finds() {
        // The full-base case k = 14: all weighted degrees are 4, so the
        // bounded column sets admit nothing cyclotomic or minimal.
        let opts = SupersporadicOptions {
            ring: ring_make(-2).unwrap(),
            base: FamilyName::S14,
            k_min: 14,
            k_max: 14,
            out_dir: None,
        };
        let report = run_supersporadic(&opts).unwrap();
        assert_eq!(report.total_finds, 0);
        assert_eq!(report.per_k[0].connected_classes, 1);
    }

    #[test]
    fn option_validation() {
        let bad = SupersporadicOptions {
            ring: ring_make(-11).unwrap(),
            base: FamilyName::S14,
            k_min: 10,
            k_max: 12,
            out_dir: None,
        };
        assert!(run_supersporadic(&bad).is_err());
        let bad = SupersporadicOptions {
            ring: ring_make(-2).unwrap(),
            base: FamilyName::S7,
            k_min: 10,
            k_max: 10,
            out_dir: None,
        };
        assert!(run_supersporadic(&bad).is_err());
    }
}
