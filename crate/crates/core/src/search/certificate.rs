//! Assembly of the per-ring case chains into a machine-checkable
//! certificate: every case carries either a certified computed bound or an
//! explicit citation, and the verdict is "proved" only when every
//! prerequisite artifact is present and every enclosure clears its
//! threshold.

use super::bounds::{type_one_minima, verify_bounds, BoundsReport, TypeOneReport};
use super::small::{load_summary, SearchSummary};
use super::supersporadic::{load_supersporadic, SupersporadicReport};
use super::Enclosure;
use crate::polynomial::lambda0;
use crate::quadint::{enumerate_norm, RingSpec};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use std::path::Path;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Provenance {
    #[serde(rename = "computed-here")]
    ComputedHere,
    #[serde(rename = "cited-[McSm2]")]
    CitedMcSm2,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CertCase {
    pub label: String,
    pub when: String,
    pub fact: String,
    pub provenance: Provenance,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<Enclosure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threshold: Option<String>,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "proved")]
    Proved,
    #[serde(rename = "incomplete")]
    Incomplete(Vec<String>),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Certificate {
    pub format: String,
    pub d: i64,
    pub claim: String,
    pub lambda0: Enclosure,
    pub cases: Vec<CertCase>,
    pub notes: Vec<String>,
    pub verdict: Verdict,
}

const CERTIFICATE_FORMAT: &str = "certificate/1";

/// Everything a certificate consumes.
pub struct CertificateInputs {
    pub bounds: BoundsReport,
    pub type_one: Option<TypeOneReport>,
    pub search: Option<SearchSummary>,
    pub supersporadic: Vec<SupersporadicReport>,
}

/// Computes the fast inputs fresh and loads search artifacts from an
/// evidence directory (searches live under `search_d{|d|}`, sweep reports
/// at the top level).
pub fn gather_inputs(ring: RingSpec, evidence: Option<&Path>) -> CertificateInputs {
    let bounds = verify_bounds(ring);
    let needs_search = ring.d == -2 || ring.d == -7;
    let type_one = if needs_search { type_one_minima(ring).ok() } else { None };
    let mut search = None;
    let mut supersporadic = Vec::new();
    if needs_search {
        if let Some(dir) = evidence {
            search = load_summary(&dir.join(format!("search_d{}", -ring.d))).ok();
            for base in ["S14", "S16"] {
                if let Ok(rep) =
                    load_supersporadic(&dir.join(format!("supersporadic_d{}_{base}.json", -ring.d)))
                {
                    supersporadic.push(rep);
                }
            }
        }
    }
    CertificateInputs { bounds, type_one, search, supersporadic }
}

fn prop_case(
    inputs: &CertificateInputs,
    prop: &str,
    label: &str,
    when: &str,
    missing: &mut Vec<String>,
) -> CertCase {
    match inputs.bounds.props.iter().find(|p| p.prop == prop) {
        Some(p) => CertCase {
            label: label.into(),
            when: when.into(),
            fact: format!(
                "certified minimum over the {} members of the proof family is {} (enclosure [{}, {}]), above the stated bound {}",
                p.family_size, p.min.decimal, p.min.lower, p.min.upper, p.threshold
            ),
            provenance: Provenance::ComputedHere,
            bound: Some(p.min.clone()),
            threshold: Some(p.threshold.clone()),
            ok: p.pass,
        },
        None => {
            missing.push(format!("bounds sweep is missing proposition {prop}"));
            CertCase {
                label: label.into(),
                when: when.into(),
                fact: format!("proposition {prop} sweep missing"),
                provenance: Provenance::ComputedHere,
                bound: None,
                threshold: None,
                ok: false,
            }
        }
    }
}

fn emptiness_case(ring: RingSpec, levels: &[i64], label: &str, when: &str) -> CertCase {
    let all_empty = levels.iter().all(|&n| enumerate_norm(ring, n).is_empty());
    let lv: Vec<String> = levels.iter().map(|n| format!("L{n}")).collect();
    CertCase {
        label: label.into(),
        when: when.into(),
        fact: format!(
            "norm-level enumeration confirms {} {} empty over d = {}",
            lv.join(" = "),
            if levels.len() > 1 { "are" } else { "is" },
            ring.d
        ),
        provenance: Provenance::ComputedHere,
        bound: None,
        threshold: None,
        ok: all_empty,
    }
}

fn rational_labels_case(ring: RingSpec) -> CertCase {
    let mut ok = true;
    for n in 1..=4i64 {
        for q in enumerate_norm(ring, n) {
            if !q.is_rational() {
                ok = false;
            }
        }
    }
    CertCase {
        label: "labels".into(),
        when: "entries of norm at most 4".into(),
        fact: format!(
            "norm-level enumeration confirms L = {{0, ±1, ±2}} over d = {}: every admissible matrix is integer symmetric",
            ring.d
        ),
        provenance: Provenance::ComputedHere,
        bound: None,
        threshold: None,
        ok,
    }
}

fn mcsm2_csg_case() -> CertCase {
    CertCase {
        label: "charged signed graphs".into(),
        when: "the remaining matrices are integer symmetric (charged signed graphs)".into(),
        fact: "any noncyclotomic charged signed graph has Mahler measure at least lambda_0".into(),
        provenance: Provenance::CitedMcSm2,
        bound: None,
        threshold: None,
        ok: true,
    }
}

fn structural_case() -> CertCase {
    CertCase {
        label: "large graphs".into(),
        when: "non-supersporadic minimal noncyclotomic graphs on 11 or more vertices".into(),
        fact: "structural containment in the growing families (profile/parity machinery extending the charged-signed-graph argument); the parity necessity conditions are machine-checked on the generators".into(),
        provenance: Provenance::CitedMcSm2,
        bound: None,
        threshold: None,
        ok: true,
    }
}

/// Assembles the case chain for one ring.
pub fn emit_certificate(ring: RingSpec, inputs: &CertificateInputs) -> Certificate {
    let mut missing: Vec<String> = Vec::new();
    let mut cases: Vec<CertCase> = Vec::new();
    let l0 = lambda0();
    let threshold_13 = BigRational::new(BigInt::from(13), BigInt::from(10));

    // Shared head of every chain.
    cases.push(prop_case(inputs, "3.1", "case 1", "some diagonal entry has modulus at least 3", &mut missing));
    cases.push(prop_case(inputs, "3.2", "case 2", "diagonal moduli at most 2, some off-diagonal norm at least 5", &mut missing));

    match ring.d {
        -2 | -7 => {
            cases.push(prop_case(inputs, "3.3", "case 3", "entries admissible, some diagonal entry of modulus 2", &mut missing));
            cases.push(prop_case(inputs, "3.4", "case 4", "an L-graph with a weight-4 edge", &mut missing));
            if ring.d == -2 {
                cases.push(prop_case(inputs, "3.5a", "case 5a", "a weight-3 edge on a charged pair", &mut missing));
                cases.push(prop_case(inputs, "3.5b", "case 5b", "other minimal graphs with a weight-3 edge", &mut missing));
            } else {
                cases.push(emptiness_case(ring, &[3], "case 5", "weight-3 edges cannot occur"));
            }
            // Type I minima (used by the small-search completeness argument).
            match &inputs.type_one {
                Some(t) if t.d == ring.d => {
                    cases.push(CertCase {
                        label: "type I forms".into(),
                        when: "excluded-subgraph forms X3A and X4A".into(),
                        fact: format!(
                            "every labeling is minimal noncyclotomic; certified minima {} (X3A, {} members) and {} (X4A, {} members)",
                            t.x3a_min.decimal, t.x3a_family_size, t.x4a_min.decimal, t.x4a_family_size
                        ),
                        provenance: Provenance::ComputedHere,
                        bound: Some(t.x3a_min.clone()),
                        threshold: Some(t.x3a_threshold.clone()),
                        ok: t.pass,
                    });
                }
                _ => missing.push("type I form minima not computed".into()),
            }
            // Small search rounds 3..10.
            match &inputs.search {
                Some(s) if s.d == ring.d && s.complete_through >= 10 => {
                    let mut ok = true;
                    let mut worst: Option<BigRational> = None;
                    for r in &s.rounds {
                        match &r.min_mahler {
                            Some(e) => {
                                let lo = e.lower_rational().unwrap_or_else(|_| BigRational::from_integer(BigInt::from(0)));
                                if worst.as_ref().is_none_or(|w| &lo < w) {
                                    worst = Some(lo.clone());
                                }
                                if lo <= threshold_13 {
                                    ok = false;
                                }
                            }
                            None => {
                                if r.t_count > 0 {
                                    ok = false;
                                }
                            }
                        }
                    }
                    let worst = worst.unwrap_or_else(|| BigRational::from_integer(BigInt::from(0)));
                    cases.push(CertCase {
                        label: "small search".into(),
                        when: "minimal noncyclotomic graphs with a weight-2 edge on 3..10 vertices".into(),
                        fact: format!(
                            "exhaustive growth through n = {} found per-round class counts {:?}; the least certified lower bound on any Mahler measure is {}, above 1.3",
                            s.complete_through,
                            s.rounds.iter().map(|r| r.t_count).collect::<Vec<_>>(),
                            super::ratio_string(&worst)
                        ),
                        provenance: Provenance::ComputedHere,
                        bound: Some(Enclosure::from_bounds(&worst, &worst)),
                        threshold: Some(super::ratio_string(&threshold_13)),
                        ok,
                    });
                }
                Some(s) => {
                    missing.push(format!(
                        "small search complete only through n = {} (need 10)",
                        s.complete_through
                    ));
                }
                None => missing.push("small search artifacts missing (rounds 3..10)".into()),
            }
            // Supersporadic sweeps over both large sporadics.
            for base in ["S14", "S16"] {
                match inputs.supersporadic.iter().find(|r| r.base == base && r.d == ring.d) {
                    Some(r) => {
                        let full = r.k_min <= 10 && r.k_max >= (if base == "S14" { 14 } else { 16 });
                        if !full {
                            missing.push(format!(
                                "supersporadic sweep over {base} covers k = {}..{} (need 10..{})",
                                r.k_min,
                                r.k_max,
                                if base == "S14" { 14 } else { 16 }
                            ));
                        }
                        cases.push(CertCase {
                            label: format!("supersporadic {base}"),
                            when: format!("minimal noncyclotomic graphs over 10-vertex-plus subgraphs of {base}"),
                            fact: format!(
                                "sweep over k = {}..{} classified {} additions and found {} minimal noncyclotomic graphs with a weight-2 edge",
                                r.k_min,
                                r.k_max,
                                r.per_k.iter().map(|k| k.additions).sum::<u64>(),
                                r.total_finds
                            ),
                            provenance: Provenance::ComputedHere,
                            bound: None,
                            threshold: None,
                            ok: full && r.total_finds == 0,
                        });
                    }
                    None => missing.push(format!("supersporadic sweep over {base} missing")),
                }
            }
            cases.push(structural_case());
            cases.push(mcsm2_csg_case());
        }
        -11 => {
            cases.push(prop_case(inputs, "3.3", "case 3", "entries admissible, some diagonal entry of modulus 2", &mut missing));
            cases.push(prop_case(inputs, "3.4", "case 4", "an L-graph with a weight-4 edge", &mut missing));
            cases.push(prop_case(inputs, "3.5a", "case 5a", "a weight-3 edge on a charged pair", &mut missing));
            cases.push(prop_case(inputs, "3.5b", "case 5b", "other minimal graphs with a weight-3 edge", &mut missing));
            cases.push(emptiness_case(ring, &[2], "case 6", "weight-2 edges cannot occur"));
            cases.push(mcsm2_csg_case());
        }
        -15 => {
            cases.push(prop_case(inputs, "3.3", "case 3", "entries admissible, some diagonal entry of modulus 2", &mut missing));
            cases.push(prop_case(inputs, "3.4", "case 4", "an L-graph with a weight-4 edge", &mut missing));
            cases.push(emptiness_case(ring, &[3, 2], "case 5", "weight-3 and weight-2 edges cannot occur"));
            cases.push(mcsm2_csg_case());
        }
        _ => {
            cases.push(rational_labels_case(ring));
            cases.push(mcsm2_csg_case());
        }
    }

    let mut notes = vec![
        "the doubled-end family generator accepts size parameter k >= 2, following the classification statement; the family figure is drawn from k >= 3".into(),
        "the excludable-subgraph table row labelled X4 is read as the X4B form".into(),
        "lambda_0 is computed from the degree-10 polynomial, never hardcoded".into(),
    ];
    if ring.d == -2 || ring.d == -7 {
        notes.push("class counts are the comparable quantity for the published table; representative selection uses the canonical key order".into());
    }

    for c in &cases {
        if !c.ok {
            missing.push(format!("case {:?} failed its check", c.label));
        }
    }
    let verdict = if missing.is_empty() { Verdict::Proved } else { Verdict::Incomplete(missing) };
    Certificate {
        format: CERTIFICATE_FORMAT.into(),
        d: ring.d,
        claim: format!(
            "every Hermitian matrix over the ring of integers of Q(sqrt({})) has Mahler measure 1 or at least lambda_0",
            ring.d
        ),
        lambda0: Enclosure::from_bounds(&l0.lower, &l0.upper),
        cases,
        notes,
        verdict,
    }
}

impl Certificate {
    /// Structured text rendering with provenance tags.
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        s.push_str(CERTIFICATE_FORMAT);
        s.push('\n');
        s.push_str(&format!("d: {}\n", self.d));
        s.push_str(&format!("claim: {}\n", self.claim));
        s.push_str(&format!(
            "lambda0: {} (enclosure [{}, {}])\n",
            self.lambda0.decimal, self.lambda0.lower, self.lambda0.upper
        ));
        for c in &self.cases {
            s.push_str(&format!("case: {}\n", c.label));
            s.push_str(&format!("  when: {}\n", c.when));
            s.push_str(&format!("  fact: {}\n", c.fact));
            if let (Some(b), Some(t)) = (&c.bound, &c.threshold) {
                s.push_str(&format!("  bound: [{}, {}] threshold: {}\n", b.lower, b.upper, t));
            }
            s.push_str(&format!(
                "  provenance: {}\n",
                match c.provenance {
                    Provenance::ComputedHere => "computed-here",
                    Provenance::CitedMcSm2 => "cited-[McSm2]",
                }
            ));
            s.push_str(&format!("  ok: {}\n", c.ok));
        }
        for n in &self.notes {
            s.push_str(&format!("note: {n}\n"));
        }
        match &self.verdict {
            Verdict::Proved => s.push_str("verdict: proved\n"),
            Verdict::Incomplete(reasons) => {
                s.push_str("verdict: incomplete\n");
                for r in reasons {
                    s.push_str(&format!("  missing: {r}\n"));
                }
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadint::ring_make;

    #[test]
    fn generic_rings_prove_without_search_artifacts() {
        for d in [-5, -17] {
            let ring = ring_make(d).unwrap();
            let inputs = gather_inputs(ring, None);
            let cert = emit_certificate(ring, &inputs);
            assert_eq!(cert.verdict, Verdict::Proved, "d={d}: {:?}", cert.verdict);
            assert!(cert.cases.iter().any(|c| c.provenance == Provenance::CitedMcSm2));
            let text = cert.render_text();
            assert!(text.contains("verdict: proved"));
        }
    }

    #[test]
    fn weight2_rings_refuse_without_search_artifacts() {
        let ring = ring_make(-2).unwrap();
        let inputs = gather_inputs(ring, None);
        let cert = emit_certificate(ring, &inputs);
        assert!(matches!(cert.verdict, Verdict::Incomplete(_)));
        let text = cert.render_text();
        assert!(text.contains("verdict: incomplete"));
    }

    #[test]
    fn minus15_proves_via_emptiness() {
        let ring = ring_make(-15).unwrap();
        let inputs = gather_inputs(ring, None);
        let cert = emit_certificate(ring, &inputs);
        assert_eq!(cert.verdict, Verdict::Proved, "{:?}", cert.verdict);
    }
}
