//! Acceptance suite: one test per criterion, each printing a PASS line
//! with its elapsed time (run with `--nocapture` to see them). Heavy
//! artifacts (searches, sweeps) are built once and shared.

use cyclomat::families::{
    generate, sporadics_for, verify_maximal, EmbedCache, FamilyName, FamilySpec,
};
use cyclomat::grow::{
    classify_addition, enumerate_columns, reduced_column_count, Class, ColumnSpec,
};
use cyclomat::lmatrix::{Action, LGraph};
use cyclomat::polynomial::{
    associated_reciprocal, is_cyclotomic_product, is_cyclotomic_spectrum, lehmer_polynomial,
    mahler_general, mahler_real_rooted, sturm_count, IntPoly,
};
use cyclomat::quadint::{enumerate_norm, label_set, ring_make, LabelTag, QuadInt, RingSpec};
use cyclomat::search::{
    emit_certificate, gather_inputs, run_small_search, run_supersporadic, verify_bounds,
    SearchMode, SearchOptions, SearchRound, SupersporadicOptions, SupersporadicReport, Verdict,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn tol9() -> BigRational {
    rat(1, 1_000_000_000)
}

fn ring(d: i64) -> RingSpec {
    ring_make(d).unwrap()
}

fn report(criterion: &str, elapsed: Duration, budget: Duration) {
    println!(
        "criterion {criterion}: PASS ({:.2}s, budget {:.0}s)",
        elapsed.as_secs_f64(),
        budget.as_secs_f64()
    );
    assert!(
        elapsed <= budget,
        "criterion {criterion} exceeded its runtime budget: {:.1}s > {:.1}s",
        elapsed.as_secs_f64(),
        budget.as_secs_f64()
    );
}

/// Shared heavy artifacts, built once.
struct Artifacts {
    full_runs: BTreeMap<i64, (Vec<SearchRound>, Duration)>,
    pruned_runs: BTreeMap<i64, (Vec<SearchRound>, Duration)>,
    s14: BTreeMap<i64, (SupersporadicReport, Duration)>,
    s16: BTreeMap<i64, (SupersporadicReport, Duration)>,
    evidence_dir: PathBuf,
}

fn artifacts() -> &'static Artifacts {
    static CELL: OnceLock<Artifacts> = OnceLock::new();
    CELL.get_or_init(|| {
        let evidence_dir =
            std::env::temp_dir().join(format!("cyclomat-acceptance-{}", std::process::id()));
        std::fs::create_dir_all(&evidence_dir).unwrap();
        let mut full_runs = BTreeMap::new();
        let mut pruned_runs = BTreeMap::new();
        let mut s14 = BTreeMap::new();
        let mut s16 = BTreeMap::new();
        for d in [-2i64, -7] {
            let t0 = Instant::now();
            let full = run_small_search(&SearchOptions {
                ring: ring(d),
                n_max: 6,
                mode: SearchMode::Full,
                out_dir: None,
                resume: false,
                jobs: None,
            })
            .unwrap();
            full_runs.insert(d, (full, t0.elapsed()));
            let t0 = Instant::now();
            let pruned = run_small_search(&SearchOptions {
                ring: ring(d),
                n_max: 10,
                mode: SearchMode::Pruned,
                out_dir: Some(evidence_dir.join(format!("search_d{}", -d))),
                resume: false,
                jobs: None,
            })
            .unwrap();
            pruned_runs.insert(d, (pruned, t0.elapsed()));
            let t0 = Instant::now();
            let r14 = run_supersporadic(&SupersporadicOptions {
                ring: ring(d),
                base: FamilyName::S14,
                k_min: 10,
                k_max: 14,
                out_dir: Some(evidence_dir.clone()),
            })
            .unwrap();
            s14.insert(d, (r14, t0.elapsed()));
            let t0 = Instant::now();
            let r16 = run_supersporadic(&SupersporadicOptions {
                ring: ring(d),
                base: FamilyName::S16,
                k_min: 10,
                k_max: 16,
                out_dir: Some(evidence_dir.clone()),
            })
            .unwrap();
            s16.insert(d, (r16, t0.elapsed()));
        }
        Artifacts { full_runs, pruned_runs, s14, s16, evidence_dir }
    })
}

/// Truncation-to-three-decimals equality against a published value.
fn matches_table(enclosure: &(BigRational, BigRational), table: f64) -> bool {
    let want = BigInt::from((table * 1000.0).round() as i64);
    let floor3 = |v: &BigRational| (v * rat(1000, 1)).floor().to_integer();
    floor3(&enclosure.0) == want && floor3(&enclosure.1) == want
}

fn round_min(round: &SearchRound) -> (BigRational, BigRational) {
    let e = round.stats.min_mahler.as_ref().expect("round with finds");
    (e.lower_rational().unwrap(), e.upper_rational().unwrap())
}

#[test]
fn criterion_1_lehmer_constant() {
    let t0 = Instant::now();
    let tol6 = rat(1, 1_000_000);
    let m = mahler_general(&lehmer_polynomial(), &tol6).unwrap();
    let target = BigRational::from_float(1.17628081825992f64).unwrap();
    assert!(m.lower <= target && target <= m.upper, "enclosure misses the Lehmer constant");
    assert!(m.width() <= tol6, "width {} exceeds 1e-6", m.width());
    report("1 (Lehmer constant)", t0.elapsed(), Duration::from_secs(1));
}

#[test]
fn criterion_2_h1_measure() {
    let t0 = Instant::now();
    for d in [-2i64, -7] {
        let r = ring(d);
        let w = if d == -2 { r.root() } else { QuadInt::new(r, 1, 1).unwrap() };
        let h1 = LGraph::new(r, vec![1, 1], &[(0, 1, w)]).unwrap();
        let m = mahler_real_rooted(&h1.char_poly(), &tol9()).unwrap();
        let lo = rat(18822, 10000);
        let hi = rat(18842, 10000);
        assert!(m.lower >= lo && m.upper <= hi, "H1 measure outside 1.8832 ± 1e-3 for d={d}");
    }
    report("2 (H1 measure)", t0.elapsed(), Duration::from_secs(1));
}

#[test]
fn criterion_3_proposition_sweep() {
    let t0 = Instant::now();
    let expected: &[(&str, i64, i64)] =
        &[("3.1", 2618, 1000), ("3.2", 236, 100), ("3.3", 1722, 1000), ("3.4", 208, 100)];
    for d in [-2i64, -7, -11, -15] {
        let rep = verify_bounds(ring(d));
        assert!(rep.all_pass, "bound sweep failed for d={d}");
        for (prop, n, den) in expected {
            let p = rep.props.iter().find(|p| p.prop == *prop).unwrap();
            assert!(p.min.lower_rational().unwrap() >= rat(*n, *den), "prop {prop} d={d}");
        }
        let has_w3 = !enumerate_norm(ring(d), 3).is_empty();
        assert_eq!(rep.props.iter().any(|p| p.prop == "3.5a"), has_w3, "d={d}");
        if has_w3 {
            let a = rep.props.iter().find(|p| p.prop == "3.5a").unwrap();
            let b = rep.props.iter().find(|p| p.prop == "3.5b").unwrap();
            assert!(a.min.lower_rational().unwrap() >= rat(252, 100));
            assert!(b.min.lower_rational().unwrap() >= rat(156, 100));
        }
    }
    report("3 (proposition sweep)", t0.elapsed(), Duration::from_secs(60));
}

#[test]
fn criterion_4_search_counts() {
    let arts = artifacts();
    let expectations: &[(i64, [usize; 4])] = &[(-2, [34, 51, 14, 12]), (-7, [67, 61, 25, 17])];
    let minima = [1.401, 1.401, 1.351, 1.401];
    let mut full_elapsed = Duration::ZERO;
    for (d, counts) in expectations {
        let (rounds, elapsed) = &arts.full_runs[d];
        full_elapsed += *elapsed;
        assert_eq!(rounds.len(), 4);
        for (i, round) in rounds.iter().enumerate() {
            assert_eq!(round.stats.t_count, counts[i], "full d={d} n={}", i + 3);
            assert!(matches_table(&round_min(round), minima[i]), "full d={d} min n={}", i + 3);
        }
    }
    report("4a (published counts, full mode n<=6)", full_elapsed, Duration::from_secs(30 * 60));

    let tail_minima = [1.506, 1.458, 1.425, 1.401];
    let mut pruned_elapsed = Duration::ZERO;
    for (d, counts) in expectations {
        let (rounds, elapsed) = &arts.pruned_runs[d];
        pruned_elapsed += *elapsed;
        assert_eq!(rounds.len(), 8);
        for (i, round) in rounds.iter().enumerate() {
            if i < 4 {
                assert_eq!(round.stats.t_count, counts[i], "pruned d={d} n={}", i + 3);
            } else {
                assert_eq!(round.stats.t_count, 1, "pruned d={d} n={}", i + 3);
                assert!(
                    matches_table(&round_min(round), tail_minima[i - 4]),
                    "pruned d={d} min n={}",
                    i + 3
                );
            }
        }
    }
    report("4b (pruned mode through n = 10)", pruned_elapsed, Duration::from_secs(4 * 3600));
}

#[test]
fn criterion_5_pruning_soundness() {
    let t0 = Instant::now();
    let mk = |mode| SearchOptions {
        ring: ring(-2),
        n_max: 5,
        mode,
        out_dir: None,
        resume: false,
        jobs: None,
    };
    let full = run_small_search(&mk(SearchMode::Full)).unwrap();
    let pruned = run_small_search(&mk(SearchMode::Pruned)).unwrap();
    assert_eq!(full.len(), pruned.len());
    for (f, p) in full.iter().zip(pruned.iter()) {
        let keys = |recs: &[cyclomat::search::ClassRec]| -> Vec<String> {
            recs.iter().map(|r| r.key.hex()).collect()
        };
        assert_eq!(keys(&f.sigma), keys(&p.sigma), "sigma sets differ at n={}", f.stats.n);
        assert_eq!(keys(&f.t), keys(&p.t), "t sets differ at n={}", f.stats.n);
    }
    report("5 (pruning soundness, exact set equality)", t0.elapsed(), Duration::from_secs(30 * 60));
}

#[test]
fn criterion_6_classification_generators() {
    let t0 = Instant::now();
    let rings: Vec<RingSpec> = [-2i64, -7, -11, -15, -5, -17].iter().map(|&d| ring(d)).collect();
    for r in &rings {
        for name in FamilyName::all() {
            if !name.applicable(r.d) {
                continue;
            }
            match name.k_min() {
                Some(kmin) => {
                    for k in kmin..=10 {
                        let (g, _) = generate(&FamilySpec { name, k: Some(k), ring: *r }).unwrap();
                        assert!(
                            is_cyclotomic_spectrum(&g.char_poly()).unwrap(),
                            "{name:?} k={k} d={} not cyclotomic",
                            r.d
                        );
                        if k <= 5 {
                            assert!(
                                verify_maximal(&g).unwrap(),
                                "{name:?} k={k} d={} not maximal",
                                r.d
                            );
                        }
                    }
                }
                None => {
                    let (g, _) = generate(&FamilySpec { name, k: None, ring: *r }).unwrap();
                    assert!(
                        is_cyclotomic_spectrum(&g.char_poly()).unwrap(),
                        "{name:?} d={} not cyclotomic",
                        r.d
                    );
                    assert!(verify_maximal(&g).unwrap(), "{name:?} d={} not maximal", r.d);
                }
            }
        }
    }
    report("6 (classification generators)", t0.elapsed(), Duration::from_secs(600));
}

#[test]
fn criterion_7_supersporadic_s14() {
    let arts = artifacts();
    let mut elapsed = Duration::ZERO;
    for d in [-2i64, -7] {
        let (rep, t) = &arts.s14[&d];
        elapsed += *t;
        assert_eq!(rep.total_finds, 0, "supersporadic finds over S14 for d={d}");
        assert_eq!(rep.per_k.len(), 5);
    }
    // The full S16 sweep is the extended target; it is exercised here as
    // certificate evidence and must also be clean.
    for d in [-2i64, -7] {
        let (rep, _) = &arts.s16[&d];
        assert_eq!(rep.total_finds, 0, "supersporadic finds over S16 for d={d}");
    }
    report("7 (supersporadic sweep, S14 k=10..14)", elapsed, Duration::from_secs(3600));
}

#[test]
fn criterion_8_property_suites() {
    let t0 = Instant::now();
    property_interlacing();
    property_hereditary_cyclotomicity();
    property_canonical_orbits();
    property_spectrum_product_agreement();
    property_column_counts();
    report("8 (property suites)", t0.elapsed(), Duration::from_secs(300));
}

#[test]
fn criterion_9_certificates() {
    let arts = artifacts();
    let t0 = Instant::now();
    // Refusal without prerequisites.
    let bare = gather_inputs(ring(-2), None);
    let refused = emit_certificate(ring(-2), &bare);
    assert!(matches!(refused.verdict, Verdict::Incomplete(_)), "must refuse without artifacts");
    // Proved with the evidence directory.
    for d in [-2i64, -7, -11, -15, -5, -17] {
        let inputs = gather_inputs(ring(d), Some(&arts.evidence_dir));
        let cert = emit_certificate(ring(d), &inputs);
        assert_eq!(cert.verdict, Verdict::Proved, "d={d}: {:?}", cert.verdict);
        let text = cert.render_text();
        assert!(text.contains("verdict: proved"));
        assert!(text.contains("provenance: cited-[McSm2]"), "citations must be tagged (d={d})");
        if d == -2 || d == -7 {
            assert!(text.contains("provenance: computed-here"));
            assert!(text.contains("supersporadic"));
        }
    }
    report("9 (certificates)", t0.elapsed(), Duration::from_secs(600));
}

// ---- criterion 8 sub-suites ----

/// Deterministic xorshift for test-local randomness.
struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

fn random_graph(rng: &mut Rng, r: RingSpec, n: usize, pool: &[QuadInt], density: usize) -> LGraph {
    loop {
        let charges: Vec<i64> = (0..n).map(|_| rng.below(3) as i64 - 1).collect();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if rng.below(100) < density {
                    let l = pool[rng.below(pool.len())];
                    if !l.is_zero() {
                        edges.push((i, j, l));
                    }
                }
            }
        }
        let g = LGraph::new(r, charges, &edges).unwrap();
        if n == 1 || g.edges().count() > 0 {
            return g;
        }
    }
}

/// Roots-below-t counting with multiplicity, exact.
fn count_leq(p: &IntPoly, t: &BigRational, bound: &BigRational) -> usize {
    let mut total = 0;
    for (factor, mult) in p.squarefree_decomposition() {
        if factor.degree().unwrap_or(0) == 0 {
            continue;
        }
        total += mult * sturm_count(&factor, &(-bound.clone()), t).unwrap_or(0);
    }
    total
}

fn property_interlacing() {
    let mut rng = Rng(0x1dea_c0de_5eed_cafe);
    for trial in 0..500 {
        let d = if trial % 2 == 0 { -2 } else { -7 };
        let r = ring(d);
        let pool = label_set(r, LabelTag::LPrime).members;
        let n = 2 + rng.below(7);
        let g = random_graph(&mut rng, r, n, &pool, 45);
        let v = rng.below(n);
        let p = g.char_poly();
        let q = g.delete_vertex(v).char_poly();
        let bound = p.cauchy_bound().ceil() + BigRational::one();
        // sample points: endpoints of a joint isolation plus the extremes
        let mut points: Vec<BigRational> = vec![-bound.clone(), bound.clone()];
        for (iv, _) in cyclomat::polynomial::isolate_real_roots(&p.mul(&q), &rat(1, 8)) {
            points.push(iv.lo.clone());
            points.push(iv.hi.clone());
        }
        points.sort();
        points.dedup();
        for t in &points {
            let np = count_leq(&p, t, &bound);
            let nq = count_leq(&q, t, &bound);
            assert!(
                nq <= np && np <= nq + 1,
                "interlacing violated at t={t} for {g} minus {v}: {np} vs {nq}"
            );
        }
    }
}

fn property_hereditary_cyclotomicity() {
    // Exhaustive over L'-graphs with up to 4 vertices for d = -2.
    let r = ring(-2);
    let pool = label_set(r, LabelTag::LPrime).members;
    let pool_len = pool.len();
    for n in 2..=4usize {
        let slots = n * (n - 1) / 2;
        let mut edge_idx = vec![0usize; slots];
        loop {
            let mut charge_idx = vec![0usize; n];
            loop {
                let charges: Vec<i64> = charge_idx.iter().map(|&c| c as i64 - 1).collect();
                let mut edges = Vec::new();
                let mut slot = 0;
                for i in 0..n {
                    for j in (i + 1)..n {
                        let l = pool[edge_idx[slot]];
                        slot += 1;
                        if !l.is_zero() {
                            edges.push((i, j, l));
                        }
                    }
                }
                let g = LGraph::new(r, charges, &edges).unwrap();
                if classify_addition(&g) == Class::Cyclotomic {
                    for mask in 1u32..(1 << n) - 1 {
                        let subset: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
                        let sub = g.induced_subgraph(&subset).unwrap();
                        assert_eq!(
                            classify_addition(&sub),
                            Class::Cyclotomic,
                            "hereditary failure in {g}"
                        );
                    }
                }
                // odometer over charges
                let mut pos = 0;
                loop {
                    if pos == n {
                        break;
                    }
                    charge_idx[pos] += 1;
                    if charge_idx[pos] < 3 {
                        break;
                    }
                    charge_idx[pos] = 0;
                    pos += 1;
                }
                if pos == n {
                    break;
                }
            }
            // odometer over edges
            let mut pos = 0;
            loop {
                if pos == slots {
                    break;
                }
                edge_idx[pos] += 1;
                if edge_idx[pos] < pool_len {
                    break;
                }
                edge_idx[pos] = 0;
                pos += 1;
            }
            if pos == slots {
                break;
            }
        }
    }
}

fn property_canonical_orbits() {
    let mut rng = Rng(0xfeed_beef_0123_4567);
    for trial in 0..100 {
        let d = if trial % 2 == 0 { -2 } else { -7 };
        let r = ring(d);
        let pool = label_set(r, LabelTag::LPrime).members;
        let n = 2 + rng.below(5);
        let g = random_graph(&mut rng, r, n, &pool, 55);
        let key = g.canonical_key();
        let mut h = g.clone();
        for _ in 0..1000 {
            let action = match rng.below(4) {
                0 => Action::Switch(rng.below(n)),
                1 => Action::Negate,
                2 => Action::Conjugate,
                _ => {
                    let mut perm: Vec<usize> = (0..n).collect();
                    for i in (1..n).rev() {
                        perm.swap(i, rng.below(i + 1));
                    }
                    Action::Permute(perm)
                }
            };
            h = h.transform(&action);
            assert_eq!(h.canonical_key(), key, "orbit constancy failed");
        }
        // Mahler measure is an equivalence invariant on noncyclotomic orbits.
        if classify_addition(&g) == Class::Noncyclotomic {
            let m0 = mahler_real_rooted(&g.char_poly(), &tol9()).unwrap();
            let m1 = mahler_real_rooted(&h.char_poly(), &tol9()).unwrap();
            assert!(
                (m0.lower.clone() - m1.upper.clone()).abs() < rat(1, 100_000_000)
                    || (m0.lower <= m1.upper && m1.lower <= m0.upper),
                "mahler not constant on an orbit"
            );
        }
    }
}

fn property_spectrum_product_agreement() {
    // Every characteristic polynomial encountered here must satisfy
    // spectrum-in-band iff reciprocal-is-cyclotomic-product.
    let mut batch: Vec<IntPoly> = Vec::new();
    for d in [-2i64, -7] {
        let r = ring(d);
        for rec in cyclomat::search::seeds(r) {
            batch.push(rec.chi.clone());
        }
        for (_, g) in sporadics_for(r) {
            batch.push(g.char_poly());
        }
        for name in [FamilyName::T2k, FamilyName::C2kPp, FamilyName::C2k2Plus, FamilyName::T2k4] {
            if !name.applicable(d) {
                continue;
            }
            let k = name.k_min().unwrap() + 1;
            let (g, _) = generate(&FamilySpec { name, k: Some(k), ring: r }).unwrap();
            batch.push(g.char_poly());
        }
    }
    let mut rng = Rng(0xabcdef12_3456789a);
    let r = ring(-2);
    let pool = label_set(r, LabelTag::FullL).members;
    for _ in 0..200 {
        let n = 1 + rng.below(6);
        batch.push(random_graph(&mut rng, r, n, &pool, 50).char_poly());
    }
    for chi in batch {
        let spectral = is_cyclotomic_spectrum(&chi).unwrap();
        let product = is_cyclotomic_product(&associated_reciprocal(&chi).unwrap());
        assert_eq!(spectral, product, "disagreement for {chi}");
    }
}

fn property_column_counts() {
    for d in [-2i64, -7] {
        let r = ring(d);
        let mut pools = vec![label_set(r, LabelTag::LPrime).members];
        let mut l1z = vec![r.zero()];
        l1z.extend(enumerate_norm(r, 1));
        pools.push(l1z);
        let mut l2z = vec![r.zero()];
        l2z.extend(enumerate_norm(r, 2));
        pools.push(l2z);
        for pool in pools {
            for n in 1..=4usize {
                let spec = ColumnSpec { len: n, pool: pool.clone(), reduced: true, bound: None };
                let direct = enumerate_columns(&spec).unwrap().len();
                assert_eq!(direct, reduced_column_count(pool.len(), n as u32));
            }
        }
    }
}

#[test]
fn embedding_spotcheck_small_cyclotomics() {
    // Every cyclotomic class found by round 3-4 growth over d = -2 embeds
    // in a growing family or a sporadic.
    let rounds = run_small_search(&SearchOptions {
        ring: ring(-2),
        n_max: 4,
        mode: SearchMode::Full,
        out_dir: None,
        resume: false,
        jobs: None,
    })
    .unwrap();
    let cache = EmbedCache::in_memory();
    let fams = [
        FamilyName::T2k,
        FamilyName::C2kPp,
        FamilyName::C2kPm,
        FamilyName::C2k2Plus,
        FamilyName::T2k4,
    ];
    for round in &rounds {
        for rec in &round.sigma {
            let mut ok = false;
            for fam in fams {
                if cyclomat::families::embeds_in_family(&rec.graph, fam, 6, &cache).unwrap() {
                    ok = true;
                    break;
                }
            }
            if !ok {
                ok = cyclomat::families::embeds_in_sporadic(&rec.graph);
            }
            assert!(ok, "cyclotomic class fails to embed: {}", rec.graph);
        }
    }
}
