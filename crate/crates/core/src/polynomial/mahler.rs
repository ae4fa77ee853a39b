//! Mahler measures with rational enclosures.
//!
//! Two routes:
//!
//! * [`mahler_real_rooted`] — for monic real-rooted input (Hermitian
//!   characteristic polynomials). Fully certified: Sturm isolation of the
//!   roots, then directed-rounding interval evaluation of the surviving
//!   reciprocal-root factor `(|x| + sqrt(x^2 - 4)) / 2` per root with
//!   `|x| > 2`, refined until the product enclosure is narrower than the
//!   requested tolerance. Returns exactly 1 on cyclotomic spectra.
//!
//! * [`mahler_general`] — for arbitrary monic input. Simultaneous complex
//!   root iteration seeds Weierstrass inclusion disks whose radii are then
//!   re-derived from exact rational residuals, so the reported enclosure is
//!   honest to the root-finder's residual bound (best effort: the enclosure
//!   may be wider than the requested tolerance on ill-separated roots).

use super::sturm::{isolate_squarefree, refine_half, RootInterval, SturmChain};
use super::{is_cyclotomic_product, IntPoly, PolyError};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};
use std::sync::OnceLock;

/// A certified enclosure of a Mahler measure.
#[derive(Clone, PartialEq, Debug)]
pub struct MahlerResult {
    pub lower: BigRational,
    pub upper: BigRational,
    /// Enclosures of the roots that contribute factors greater than 1.
    pub witnesses: Vec<RootWitness>,
}

/// Where a contributing root lives.
#[derive(Clone, PartialEq, Debug)]
pub enum RootWitness {
    /// Real eigenvalue outside `[-2, 2]`, with multiplicity.
    RealInterval { lo: BigRational, hi: BigRational, mult: usize },
    /// Complex root with modulus enclosure, with multiplicity.
    Modulus { lo: BigRational, hi: BigRational, mult: usize },
}

impl MahlerResult {
    pub fn exactly_one() -> MahlerResult {
        MahlerResult { lower: BigRational::one(), upper: BigRational::one(), witnesses: Vec::new() }
    }

    pub fn width(&self) -> BigRational {
        &self.upper - &self.lower
    }

    /// Decimal rendering of the enclosure midpoint, with enough digits for
    /// the enclosure width; purely cosmetic, bounds stay exact.
    pub fn decimal(&self) -> String {
        let mid = (&self.lower + &self.upper) / BigRational::from_integer(BigInt::from(2));
        rational_decimal(&mid, 12)
    }

    /// True when the whole enclosure is strictly above `t`.
    pub fn certainly_above(&self, t: &BigRational) -> bool {
        &self.lower > t
    }
}

pub fn rational_decimal(v: &BigRational, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = (v * BigRational::from_integer(scale.clone())).floor().to_integer();
    let (ip, fp) = num_integer::div_mod_floor(scaled, scale);
    format!("{}.{:0width$}", ip, fp, width = digits as usize)
}

/// Rational bounds `lo <= sqrt(v) <= hi` with `hi - lo <= 1/2^bits * denom
/// adjustment`; exact integer square roots give `lo == hi`.
pub(crate) fn sqrt_bounds(v: &BigRational, bits: u64) -> (BigRational, BigRational) {
    assert!(!v.is_negative(), "sqrt of negative rational");
    if v.is_zero() {
        return (BigRational::zero(), BigRational::zero());
    }
    // sqrt(p/q) = sqrt(p*q)/q; scale by 4^bits for precision.
    let p = v.numer();
    let q = v.denom();
    let scaled = p * q << (2 * bits);
    let s = scaled.sqrt(); // floor integer sqrt
    let denom = q << bits;
    let lo = BigRational::new(s.clone(), denom.clone());
    let hi = BigRational::new(s + 1, denom);
    (lo, hi)
}

/// Interval bounds of the reciprocal-root factor `f(m) = (m + sqrt(m^2-4))/2`
/// for a modulus interval `[mlo, mhi]` with `mlo >= 2`. `f` is increasing.
fn factor_bounds(mlo: &BigRational, mhi: &BigRational, bits: u64) -> (BigRational, BigRational) {
    let four = BigRational::from_integer(BigInt::from(4));
    let two = BigRational::from_integer(BigInt::from(2));
    let (slo, _) = sqrt_bounds(&(mlo * mlo - &four), bits);
    let (_, shi) = sqrt_bounds(&(mhi * mhi - &four), bits);
    ((mlo + slo) / &two, (mhi + shi) / &two)
}

/// Certified Mahler measure of the associated reciprocal polynomial of a
/// monic, real-rooted `p`: the product over roots `x` with `|x| > 2`
/// (with multiplicity) of `(|x| + sqrt(x^2 - 4)) / 2`.
pub fn mahler_real_rooted(p: &IntPoly, tol: &BigRational) -> Result<MahlerResult, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if !p.is_monic() {
        return Err(PolyError::NotMonic);
    }
    if tol <= &BigRational::zero() {
        return Err(PolyError::BadTolerance);
    }
    // Divide out roots at exactly ±2: they contribute factor 1.
    let mut q = p.clone();
    for root in [IntPoly::from_i64(&[-2, 1]), IntPoly::from_i64(&[2, 1])] {
        loop {
            match q.div_exact(&root) {
                Some(next) => q = next,
                None => break,
            }
        }
    }
    if q.degree().unwrap_or(0) == 0 {
        return Ok(MahlerResult::exactly_one());
    }

    // Outside roots per squarefree factor.
    struct Outside {
        factor: IntPoly,
        interval: RootInterval,
        mult: usize,
        negative_side: bool,
    }
    let mut outs: Vec<Outside> = Vec::new();
    let two_r = BigRational::from_integer(BigInt::from(2));
    let start_width = BigRational::new(BigInt::one(), BigInt::from(16));
    for (factor, mult) in q.squarefree_decomposition() {
        if factor.degree().unwrap_or(0) == 0 {
            continue;
        }
        let chain = SturmChain::new(&factor);
        let neg_two = -two_r.clone();
        for mut iv in isolate_squarefree(&factor, &start_width) {
            // Refine until the interval is strictly inside or outside [-2, 2].
            loop {
                if iv.hi < neg_two || iv.lo > two_r {
                    break; // outside
                }
                if iv.lo >= neg_two && iv.hi <= two_r {
                    // inside or touching; a root exactly at ±2 was divided
                    // out, so touching means the root is interior.
                    break;
                }
                iv = refine_half(&factor, &chain, &iv);
            }
            if iv.hi < neg_two {
                outs.push(Outside { factor: factor.clone(), interval: iv, mult, negative_side: true });
            } else if iv.lo > two_r {
                outs.push(Outside { factor: factor.clone(), interval: iv, mult, negative_side: false });
            }
        }
    }
    if outs.is_empty() {
        return Ok(MahlerResult::exactly_one());
    }

    let mut bits: u64 = 32;
    loop {
        let mut lower = BigRational::one();
        let mut upper = BigRational::one();
        for o in &outs {
            let (mlo, mhi) = if o.negative_side {
                (-o.interval.hi.clone(), -o.interval.lo.clone())
            } else {
                (o.interval.lo.clone(), o.interval.hi.clone())
            };
            let (flo, fhi) = factor_bounds(&mlo, &mhi, bits);
            for _ in 0..o.mult {
                lower *= &flo;
                upper *= &fhi;
            }
        }
        if &upper - &lower <= *tol {
            let witnesses = outs
                .iter()
                .map(|o| RootWitness::RealInterval {
                    lo: o.interval.lo.clone(),
                    hi: o.interval.hi.clone(),
                    mult: o.mult,
                })
                .collect();
            let lower = if lower < BigRational::one() { BigRational::one() } else { lower };
            return Ok(MahlerResult { lower, upper, witnesses });
        }
        for o in outs.iter_mut() {
            let chain = SturmChain::new(&o.factor);
            o.interval = refine_half(&o.factor, &chain, &o.interval);
        }
        bits += 16;
    }
}

/// Mahler measure of an arbitrary monic integer polynomial over its complex
/// roots. Exact fast path for cyclotomic products; otherwise simultaneous
/// iteration with exact-residual Weierstrass disks (best-effort enclosure).
pub fn mahler_general(p: &IntPoly, tol: &BigRational) -> Result<MahlerResult, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if !p.is_monic() {
        return Err(PolyError::NotMonic);
    }
    if tol <= &BigRational::zero() {
        return Err(PolyError::BadTolerance);
    }
    if is_cyclotomic_product(p) {
        return Ok(MahlerResult::exactly_one());
    }
    let mut lower = BigRational::one();
    let mut upper = BigRational::one();
    let mut witnesses = Vec::new();
    let one = BigRational::one();
    for (factor, mult) in p.squarefree_decomposition() {
        let deg = factor.degree().unwrap_or(0);
        if deg == 0 {
            continue;
        }
        let clusters = weierstrass_clusters(&factor);
        for cl in clusters {
            // Every root of this cluster has modulus within [cl.lo, cl.hi];
            // the cluster holds cl.count roots of the squarefree factor.
            let flo = if cl.lo > one { cl.lo.clone() } else { one.clone() };
            let fhi = if cl.hi > one { cl.hi.clone() } else { one.clone() };
            for _ in 0..cl.count * mult {
                lower *= &flo;
                upper *= &fhi;
            }
            if cl.hi > one {
                witnesses.push(RootWitness::Modulus { lo: cl.lo, hi: cl.hi, mult: cl.count * mult });
            }
        }
    }
    if lower < BigRational::one() {
        lower = BigRational::one();
    }
    Ok(MahlerResult { lower, upper, witnesses })
}

struct ModulusCluster {
    lo: BigRational,
    hi: BigRational,
    count: usize,
}

/// Runs deterministic Durand–Kerner on a squarefree monic factor, then turns
/// the approximations into certified Weierstrass disks using exact rational
/// residuals: all roots lie in the union of disks `D(z_i, n |p(z_i)| /
/// prod_{j != i} |z_i - z_j|)`, and a connected component of k disks holds
/// exactly k roots. Disks are merged into modulus clusters.
fn weierstrass_clusters(factor: &IntPoly) -> Vec<ModulusCluster> {
    let n = factor.degree().unwrap();
    let coeffs: Vec<f64> = factor.coeffs().iter().map(|c| c.to_f64().unwrap_or(f64::MAX)).collect();
    let radius = 1.0
        + coeffs[..n]
            .iter()
            .map(|c| c.abs())
            .fold(0.0f64, f64::max)
            / coeffs[n].abs();
    // Deterministic, symmetry-breaking start points: spiral of slightly
    // different moduli with an irrational angular offset.
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let ang = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.3533;
            let r = radius * (0.55 + 0.4 * (k as f64 + 1.0) / (n as f64));
            Complex64::new(r * ang.cos(), r * ang.sin())
        })
        .collect();
    let eval = |x: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    };
    for _ in 0..500 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if j != i {
                    denom *= z[i] - z[j];
                }
            }
            if denom.norm() == 0.0 {
                // collided start points; nudge deterministically
                z[i] += Complex64::new(1e-3, 2e-3);
                continue;
            }
            let w = eval(z[i]) / denom;
            z[i] -= w;
            delta = delta.max(w.norm());
        }
        if delta < 1e-14 * radius.max(1.0) {
            break;
        }
    }
    // Exact residual disks at dyadic approximations of the z_i.
    let zr: Vec<(BigRational, BigRational)> = z
        .iter()
        .map(|c| {
            (
                BigRational::from_f64(c.re).unwrap_or_else(BigRational::zero),
                BigRational::from_f64(c.im).unwrap_or_else(BigRational::zero),
            )
        })
        .collect();
    let bits = 80u64;
    let mut radii: Vec<BigRational> = Vec::with_capacity(n);
    for i in 0..n {
        // |p(z_i)| upper bound
        let (pre, pim) = eval_complex_rational(factor, &zr[i].0, &zr[i].1);
        let norm2 = &pre * &pre + &pim * &pim;
        let (_, num_hi) = sqrt_bounds(&norm2, bits);
        // prod |z_i - z_j| lower bound
        let mut den_lo = BigRational::one();
        for j in 0..n {
            if j == i {
                continue;
            }
            let dre = &zr[i].0 - &zr[j].0;
            let dim = &zr[i].1 - &zr[j].1;
            let d2 = &dre * &dre + &dim * &dim;
            let (lo, _) = sqrt_bounds(&d2, bits);
            den_lo *= lo;
        }
        if den_lo.is_zero() {
            // Degenerate spacing: fall back to a radius covering everything.
            radii.push(BigRational::from_integer(BigInt::from(10)) * BigRational::from_f64(radius).unwrap());
        } else {
            radii.push(BigRational::from_integer(BigInt::from(n as i64)) * num_hi / den_lo);
        }
    }
    // Merge overlapping disks into connected components (union-find).
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        let mut i = i;
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            let dre = &zr[i].0 - &zr[j].0;
            let dim = &zr[i].1 - &zr[j].1;
            let d2 = &dre * &dre + &dim * &dim;
            let rsum = &radii[i] + &radii[j];
            if d2 <= &rsum * &rsum {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut clusters: Vec<ModulusCluster> = Vec::new();
    let mut cluster_of = vec![usize::MAX; n];
    for i in 0..n {
        let root = find(&mut parent, i);
        // modulus bounds for disk i
        let m2 = &zr[i].0 * &zr[i].0 + &zr[i].1 * &zr[i].1;
        let (mlo, mhi) = sqrt_bounds(&m2, bits);
        let lo = &mlo - &radii[i];
        let lo = if lo.is_negative() { BigRational::zero() } else { lo };
        let hi = &mhi + &radii[i];
        if cluster_of[root] == usize::MAX {
            cluster_of[root] = clusters.len();
            clusters.push(ModulusCluster { lo, hi, count: 1 });
        } else {
            let cl = &mut clusters[cluster_of[root]];
            cl.count += 1;
            if lo < cl.lo {
                cl.lo = lo;
            }
            if hi > cl.hi {
                cl.hi = hi;
            }
        }
    }
    clusters
}

/// Exact evaluation of `p` at the complex rational `re + im*i`:
/// returns (real, imaginary) parts.
fn eval_complex_rational(p: &IntPoly, re: &BigRational, im: &BigRational) -> (BigRational, BigRational) {
    let mut are = BigRational::zero();
    let mut aim = BigRational::zero();
    for c in p.coeffs().iter().rev() {
        // (are + aim i)(re + im i) + c
        let nre = &are * re - &aim * im + BigRational::from_integer(c.clone());
        let nim = &are * im + &aim * re;
        are = nre;
        aim = nim;
    }
    (are, aim)
}

/// Lehmer's degree-10 polynomial.
pub fn lehmer_polynomial() -> IntPoly {
    IntPoly::from_i64(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
}

/// The Mahler measure of Lehmer's polynomial, computed once and cached with
/// its enclosure; never hardcoded.
pub fn lambda0() -> &'static MahlerResult {
    static LAMBDA0: OnceLock<MahlerResult> = OnceLock::new();
    LAMBDA0.get_or_init(|| {
        let tol = BigRational::new(BigInt::one(), BigInt::from(10u64.pow(9)));
        mahler_general(&lehmer_polynomial(), &tol).expect("lambda0 computation")
    })
}
