//! Command-line surface for the toolkit. Every numeric output is a
//! certified lower/upper enclosure, never a bare point value. Exit codes:
//! 0 success, 2 validation error, 3 computation refused (missing
//! prerequisite artifacts or an enclosure straddling its threshold).

use clap::{Parser, Subcommand};
use cyclomat::families::{
    generate, parity_conditions, verify_maximal, FamilyName, FamilySpec,
};
use cyclomat::grow::{
    add_vertex, classify_addition, enumerate_columns, is_minimal_noncyclotomic, Class, ColumnSpec,
};
use cyclomat::lmatrix::{read_graph_str, write_graph_string, LGraph};
use cyclomat::polynomial::{
    associated_reciprocal, decimal_string, is_cyclotomic_product, is_cyclotomic_spectrum,
    mahler_general, mahler_real_rooted, IntPoly, MahlerResult,
};
use cyclomat::quadint::{enumerate_norm, label_set, ring_make, LabelTag, RingSpec};
use cyclomat::search::{
    emit_certificate, gather_inputs, run_small_search, run_supersporadic, verify_bounds,
    SearchMode, SearchOptions, SupersporadicOptions, Verdict,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_VALIDATION: u8 = 2;
const EXIT_REFUSED: u8 = 3;

#[derive(Parser)]
#[command(name = "cyclomat", about = "Exact toolkit for cyclotomic Hermitian matrices over imaginary quadratic integer rings", version)]
struct Cli {
    /// Worker count for parallel sections (results are identical for any value).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ring information and norm-level label sets.
    Ring {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        /// Print the elements of this norm level.
        #[arg(long)]
        norm: Option<i64>,
        /// Print a label set: "lprime" or "full".
        #[arg(long)]
        labels: Option<String>,
    },
    /// Mahler measure of a polynomial file (ascending integer coefficients).
    Mahler {
        #[arg(long)]
        poly: PathBuf,
        #[arg(long, default_value = "1e-9")]
        tol: String,
    },
    /// Cyclotomicity of a graph, with the product-test cross-check and a
    /// Mahler enclosure when noncyclotomic.
    Cyclo {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value = "1e-9")]
        tol: String,
    },
    /// Minimal-noncyclotomicity of a graph.
    Minimal {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value = "1e-9")]
        tol: String,
    },
    /// Canonical form and key; equivalence against a second graph.
    Canon {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        other: Option<PathBuf>,
    },
    /// One round of single-vertex growth of a graph.
    Grow {
        #[arg(long)]
        graph: PathBuf,
        /// Label pool: lprime, l1, l2 or full (each plus zero).
        #[arg(long, default_value = "lprime")]
        pool: String,
        /// Total norm bound on the column.
        #[arg(long)]
        bound: Option<i64>,
        /// Charges for the new vertex.
        #[arg(long, default_value = "-1,0,1", allow_hyphen_values = true)]
        charges: String,
        /// Write the record stream here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The weight-2 growth search (d = -2 or -7).
    Search {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(long = "max-n", default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value = "pruned")]
        mode: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        resume: bool,
    },
    /// Supersporadic sweep over S14 or S16 subgraphs.
    Supersporadic {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(long, default_value = "S14")]
        base: String,
        #[arg(long = "k-min", default_value_t = 10)]
        k_min: usize,
        #[arg(long = "k-max")]
        k_max: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate maximal cyclotomic family members and sporadics.
    Families {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        /// A single family token (e.g. T2k, S14, C2k2plus).
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        k: Option<u32>,
        /// Generate every applicable family up to this k.
        #[arg(long = "k-max")]
        k_max: Option<u32>,
        /// Check cyclotomicity (and maximality for small members).
        #[arg(long)]
        verify: bool,
        /// Write graphs into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive verification of the reduction bounds.
    VerifyBounds {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
    },
    /// Assemble the case-chain certificate for a ring.
    Certify {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        /// Directory holding search and supersporadic artifacts.
        #[arg(long)]
        evidence: Option<PathBuf>,
        /// Write the certificate text here as well.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Parity-condition report for a profile family member.
    Parity {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(long)]
        family: String,
        #[arg(long)]
        k: u32,
    },
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn parse_tol(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.parse().ok()?;
        let d: BigInt = d.parse().ok()?;
        return Some(BigRational::new(n, d));
    }
    // decimal with optional exponent: m[.f][e±k]
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    let digits = format!("{int_part}{frac_part}");
    let num: BigInt = digits.parse().ok()?;
    let mut v = BigRational::from_integer(num);
    let shift = exp - frac_part.len() as i32;
    let ten = BigRational::from_integer(BigInt::from(10));
    let mut k = shift;
    while k > 0 {
        v *= ten.clone();
        k -= 1;
    }
    while k < 0 {
        v /= ten.clone();
        k += 1;
    }
    Some(v)
}

fn ring_or_fail(d: i64) -> Result<RingSpec, String> {
    ring_make(d).map_err(|e| e.to_string())
}

fn load_graph(path: &PathBuf) -> Result<LGraph, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    read_graph_str(&text).map_err(|e| e.to_string())
}

fn load_poly(path: &PathBuf) -> Result<IntPoly, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut lines = text.lines();
    let header = lines.next().unwrap_or_default().trim();
    let body: String = if header == "intpoly/1" {
        lines.collect::<Vec<_>>().join(" ")
    } else {
        // headerless files are accepted: coefficients only
        text.clone()
    };
    let coeffs: Result<Vec<BigInt>, _> = body.split_whitespace().map(str::parse).collect();
    let coeffs = coeffs.map_err(|e| format!("bad coefficient: {e}"))?;
    if coeffs.is_empty() {
        return Err("polynomial file holds no coefficients".into());
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

fn print_mahler(label: &str, m: &MahlerResult) {
    println!(
        "{label}: [{}, {}] ~ {} (width {})",
        m.lower,
        m.upper,
        m.decimal(),
        decimal_string(&m.width(), 12)
    );
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return fail(EXIT_VALIDATION, "--jobs must be positive");
        }
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => fail(EXIT_VALIDATION, msg),
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Ring { d, norm, labels } => {
            let ring = ring_or_fail(d)?;
            println!("ring: O_Q(sqrt({})), denominator scale s = {}", ring.d, ring.s);
            if let Some(n) = norm {
                if n < 0 {
                    return Err("norm level must be non-negative".into());
                }
                let elems = enumerate_norm(ring, n);
                println!("L_{n} has {} elements:", elems.len());
                for e in elems {
                    println!("  [{}, {}]  = {}", e.x, e.y, e);
                }
            }
            if let Some(tag) = labels {
                let tag = match tag.as_str() {
                    "lprime" => LabelTag::LPrime,
                    "full" => LabelTag::FullL,
                    other => return Err(format!("unknown label set {other:?} (lprime|full)")),
                };
                let set = label_set(ring, tag);
                println!("label set has {} elements:", set.members.len());
                for e in set.members {
                    println!("  [{}, {}]  = {}", e.x, e.y, e);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Mahler { poly, tol } => {
            let p = load_poly(&poly)?;
            let tol = parse_tol(&tol).ok_or("could not parse --tol")?;
            if tol <= BigRational::from_integer(BigInt::from(0)) {
                return Err("--tol must be positive".into());
            }
            let m = mahler_general(&p, &tol).map_err(|e| e.to_string())?;
            println!("polynomial: {p}");
            print_mahler("mahler", &m);
            if m.width() > tol && m.lower != m.upper {
                eprintln!("note: enclosure wider than the requested tolerance (best-effort complex path)");
                return Ok(ExitCode::from(EXIT_REFUSED));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Cyclo { graph, tol } => {
            let g = load_graph(&graph)?;
            let tol = parse_tol(&tol).ok_or("could not parse --tol")?;
            let chi = g.char_poly();
            let cyclo = is_cyclotomic_spectrum(&chi).map_err(|e| e.to_string())?;
            let recip = associated_reciprocal(&chi).map_err(|e| e.to_string())?;
            let product = is_cyclotomic_product(&recip);
            if cyclo != product {
                return Err("internal cross-check failed: spectrum and product tests disagree".into());
            }
            println!("char poly: {chi}");
            println!("classification: {}", if cyclo { "cyclotomic" } else { "noncyclotomic" });
            println!("cross-check (reciprocal product test): agrees");
            if !cyclo {
                let m = mahler_real_rooted(&chi, &tol).map_err(|e| e.to_string())?;
                print_mahler("mahler", &m);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Minimal { graph, tol } => {
            let g = load_graph(&graph)?;
            let tol = parse_tol(&tol).ok_or("could not parse --tol")?;
            let minimal = is_minimal_noncyclotomic(&g);
            println!(
                "classification: {}",
                if minimal {
                    "minimal noncyclotomic"
                } else if classify_addition(&g) == Class::Cyclotomic {
                    "cyclotomic"
                } else {
                    "noncyclotomic, not minimal"
                }
            );
            if classify_addition(&g) == Class::Noncyclotomic {
                let m = mahler_real_rooted(&g.char_poly(), &tol).map_err(|e| e.to_string())?;
                print_mahler("mahler", &m);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Canon { graph, other } => {
            let g = load_graph(&graph)?;
            let (canon, key) = g.canonical_form();
            println!("canonical key: {}", key.hex());
            print!("{}", write_graph_string(&canon));
            if let Some(path) = other {
                let h = load_graph(&path)?;
                let same = g.ring() == h.ring() && g.canonical_key() == h.canonical_key();
                println!("equivalent: {same}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Grow { graph, pool, bound, charges, out } => {
            let g = load_graph(&graph)?;
            let ring = g.ring();
            let mut members = vec![ring.zero()];
            match pool.as_str() {
                "lprime" => members.extend(label_set(ring, LabelTag::LPrime).members.into_iter().filter(|q| !q.is_zero())),
                "full" => members.extend(label_set(ring, LabelTag::FullL).members.into_iter().filter(|q| !q.is_zero())),
                "l1" => members.extend(enumerate_norm(ring, 1)),
                "l2" => members.extend(enumerate_norm(ring, 2)),
                other => return Err(format!("unknown pool {other:?} (lprime|l1|l2|full)")),
            }
            let charges: Result<Vec<i64>, _> = charges.split(',').map(str::trim).map(str::parse).collect();
            let charges = charges.map_err(|e| format!("bad charge list: {e}"))?;
            if charges.iter().any(|x| x.abs() > 1) {
                return Err("charges must come from {-1, 0, 1}".into());
            }
            let cols = enumerate_columns(&ColumnSpec { len: g.n(), pool: members, reduced: true, bound })
                .map_err(|e| e.to_string())?;
            let mut lines = vec!["lrecords/1".to_string()];
            let mut cyclotomic = 0usize;
            let mut minimal = 0usize;
            let mut seen = std::collections::BTreeSet::new();
            for c in &cols {
                for &x in &charges {
                    let sup = add_vertex(&g, c, x).map_err(|e| e.to_string())?;
                    let class = classify_addition(&sup);
                    let kind = if class == Class::Cyclotomic {
                        cyclotomic += 1;
                        "sigma"
                    } else if is_minimal_noncyclotomic(&sup) {
                        minimal += 1;
                        "t"
                    } else {
                        continue;
                    };
                    let (canon, key) = sup.canonical_form();
                    if seen.insert(key.hex()) {
                        lines.push(format!(
                            "{{\"kind\":\"{kind}\",\"key\":\"{}\",\"graph\":{}}}",
                            key.hex(),
                            serde_json::to_string(&write_graph_string(&canon)).unwrap()
                        ));
                    }
                }
            }
            let body = lines.join("\n") + "\n";
            match out {
                Some(path) => std::fs::write(&path, body).map_err(|e| e.to_string())?,
                None => print!("{body}"),
            }
            eprintln!(
                "examined {} additions: {} cyclotomic, {} minimal noncyclotomic, {} classes kept",
                cols.len() * charges.len(),
                cyclotomic,
                minimal,
                seen.len()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Search { d, max_n, mode, out, resume } => {
            let ring = ring_or_fail(d)?;
            let mode = match mode.as_str() {
                "pruned" => SearchMode::Pruned,
                "full" => SearchMode::Full,
                other => return Err(format!("unknown mode {other:?} (pruned|full)")),
            };
            let opts = SearchOptions { ring, n_max: max_n, mode, out_dir: out, resume, jobs: None };
            let rounds = run_small_search(&opts).map_err(|e| e.to_string())?;
            println!("  n  |Sigma_n|  |T_n|  min M(T_n)");
            for r in &rounds {
                let min = r
                    .stats
                    .min_mahler
                    .as_ref()
                    .map(|e| e.decimal.clone())
                    .unwrap_or_else(|| "-".into());
                println!("{:3}  {:8}  {:5}  {}", r.stats.n, r.stats.sigma_count, r.stats.t_count, min);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Supersporadic { d, base, k_min, k_max, out } => {
            let ring = ring_or_fail(d)?;
            let base = FamilyName::parse(&base).ok_or_else(|| format!("unknown base {base:?}"))?;
            let default_max = if base == FamilyName::S16 { 16 } else { 14 };
            let opts = SupersporadicOptions {
                ring,
                base,
                k_min,
                k_max: k_max.unwrap_or(default_max),
                out_dir: out,
            };
            let report = run_supersporadic(&opts).map_err(|e| e.to_string())?;
            for k in &report.per_k {
                println!(
                    "k={:2}: {} subsets, {} connected classes, {} disconnected-singleton, {} additions, {} finds",
                    k.k, k.subsets, k.connected_classes, k.disconnected_singleton_classes, k.additions, k.finds.len()
                );
            }
            println!("total minimal noncyclotomic finds with a weight-2 edge: {}", report.total_finds);
            Ok(ExitCode::SUCCESS)
        }
        Command::Families { d, family, k, k_max, verify, out } => {
            let ring = ring_or_fail(d)?;
            let mut specs: Vec<FamilySpec> = Vec::new();
            match family {
                Some(token) => {
                    let name = FamilyName::parse(&token).ok_or_else(|| format!("unknown family {token:?}"))?;
                    specs.push(FamilySpec { name, k, ring });
                }
                None => {
                    let k_max = k_max.unwrap_or(5);
                    for name in FamilyName::all() {
                        if !name.applicable(ring.d) {
                            continue;
                        }
                        match name.k_min() {
                            Some(kmin) => {
                                for kk in kmin..=k_max.max(kmin) {
                                    specs.push(FamilySpec { name, k: Some(kk), ring });
                                }
                            }
                            None => specs.push(FamilySpec { name, k: None, ring }),
                        }
                    }
                }
            }
            if let Some(dir) = &out {
                std::fs::create_dir_all(dir).map_err(|e| e.to_string())?;
            }
            for spec in specs {
                let (g, _) = generate(&spec).map_err(|e| e.to_string())?;
                let label = match spec.k {
                    Some(k) => format!("{}_k{}", spec.name.token(), k),
                    None => spec.name.token().to_string(),
                };
                let mut status = String::new();
                if verify {
                    let cyclo = is_cyclotomic_spectrum(&g.char_poly()).map_err(|e| e.to_string())?;
                    status.push_str(if cyclo { " cyclotomic" } else { " NONCYCLOTOMIC" });
                    if !cyclo {
                        return Err(format!("{label} failed the cyclotomicity check"));
                    }
                    if g.n() <= 11 {
                        let maximal = verify_maximal(&g).map_err(|e| e.to_string())?;
                        status.push_str(if maximal { ", maximal" } else { ", NOT MAXIMAL" });
                        if !maximal {
                            return Err(format!("{label} failed the maximality check"));
                        }
                    }
                }
                println!("{label}: {} vertices{status}", g.n());
                if let Some(dir) = &out {
                    std::fs::write(dir.join(format!("{label}.lgraph")), write_graph_string(&g))
                        .map_err(|e| e.to_string())?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyBounds { d } => {
            let ring = ring_or_fail(d)?;
            let report = verify_bounds(ring);
            println!("bound verification for d = {d}:");
            for p in &report.props {
                println!(
                    "  prop {:4}  family of {:5}  min in [{}, {}] ~ {}  threshold {}  {}",
                    p.prop,
                    p.family_size,
                    p.min.lower,
                    p.min.upper,
                    p.min.decimal,
                    p.threshold,
                    if p.pass { "ok" } else { "FAIL" }
                );
            }
            if report.all_pass {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("error: a certified minimum fell below its stated bound");
                Ok(ExitCode::from(EXIT_REFUSED))
            }
        }
        Command::Certify { d, evidence, out } => {
            let ring = ring_or_fail(d)?;
            let inputs = gather_inputs(ring, evidence.as_deref());
            let cert = emit_certificate(ring, &inputs);
            let text = cert.render_text();
            print!("{text}");
            if let Some(path) = out {
                std::fs::write(&path, &text).map_err(|e| e.to_string())?;
            }
            match cert.verdict {
                Verdict::Proved => Ok(ExitCode::SUCCESS),
                Verdict::Incomplete(_) => Ok(ExitCode::from(EXIT_REFUSED)),
            }
        }
        Command::Parity { d, family, k } => {
            let ring = ring_or_fail(d)?;
            let name = FamilyName::parse(&family).ok_or_else(|| format!("unknown family {family:?}"))?;
            let (_, drawing) = generate(&FamilySpec { name, k: Some(k), ring }).map_err(|e| e.to_string())?;
            let drawing = drawing.ok_or("family has no profile drawing")?;
            let report = parity_conditions(&drawing).map_err(|e| e.to_string())?;
            for c in &report.cycles {
                println!(
                    "4-cycle {:?} {:?}: {} positive edges -> {}",
                    c.vertices,
                    c.kind,
                    c.positive_edges,
                    if c.pass { "ok" } else { "FAIL" }
                );
            }
            for t in &report.triangles {
                println!(
                    "charged triangle {:?} (charge {}): {} matching-sign edges -> {}",
                    t.vertices,
                    t.charge,
                    t.matching_sign_edges,
                    if t.pass { "ok" } else { "FAIL" }
                );
            }
            println!("parity conditions: {}", if report.pass { "pass" } else { "fail" });
            Ok(if report.pass { ExitCode::SUCCESS } else { ExitCode::from(EXIT_REFUSED) })
        }
    }
}
