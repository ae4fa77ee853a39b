//! Sturm chains and exact real-root isolation.
//!
//! Chains are built on the squarefree part with a primitive pseudo-remainder
//! sequence, so all arithmetic stays in the integers; interval endpoints are
//! dyadic rationals. With the zero-skipping sign-variation convention,
//! `V(a) - V(b)` counts distinct roots in the half-open interval `(a, b]`.

use super::{IntPoly, PolyError};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A rational interval known to contain exactly one distinct real root.
/// `lo == hi` marks an exact rational root.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootInterval {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
}

/// The Sturm chain of a squarefree polynomial.
pub(crate) struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub(crate) fn new(squarefree: &IntPoly) -> SturmChain {
        let mut chain = vec![squarefree.clone()];
        let d = squarefree.derivative();
        if !d.is_zero() {
            chain.push(d);
        }
        while chain.len() >= 2 {
            let f = &chain[chain.len() - 2];
            let g = &chain[chain.len() - 1];
            if g.degree().is_none() || f.degree() < g.degree() {
                break;
            }
            let (m, r) = f.pseudo_rem(g);
            if r.is_zero() {
                break;
            }
            // Next element is -rem(f, g) up to a positive constant; the
            // pseudo-remainder is m * rem(f, g), so correct for sign(m).
            let prim = r.primitive();
            let next = if m.is_negative() { prim } else { prim.neg() };
            chain.push(next);
            if chain.last().unwrap().degree() == Some(0) {
                break;
            }
        }
        SturmChain { chain }
    }

    /// Sign variations at `t`, zeros skipped. Equals the number of distinct
    /// roots of the squarefree polynomial in `(t, +inf)`.
    pub(crate) fn variations_at(&self, t: &BigRational) -> usize {
        let mut count = 0usize;
        let mut last: i8 = 0;
        for p in &self.chain {
            let s = p.sign_at(t);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct roots in `(a, b]`.
    pub(crate) fn count_half_open(&self, a: &BigRational, b: &BigRational) -> usize {
        debug_assert!(a < b);
        self.variations_at(a) - self.variations_at(b)
    }
}

/// Number of distinct real roots of `p` in the half-open interval `(a, b]`,
/// computed on the squarefree part with exact rational arithmetic.
pub fn sturm_count(p: &IntPoly, a: &BigRational, b: &BigRational) -> Result<usize, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if a >= b {
        return Err(PolyError::EmptyInterval);
    }
    let sf = p.squarefree_part();
    if sf.degree().unwrap_or(0) == 0 {
        return Ok(0);
    }
    Ok(SturmChain::new(&sf).count_half_open(a, b))
}

/// Like [`sturm_count`] but assumes `p` is already squarefree of degree >= 1.
pub(crate) fn sturm_count_squarefree(p: &IntPoly, a: &BigRational, b: &BigRational) -> usize {
    SturmChain::new(p).count_half_open(a, b)
}

/// Isolates all distinct real roots of `p` into disjoint rational-endpoint
/// intervals, each narrower than `width`, with multiplicities recovered from
/// the squarefree (Yun) decomposition. Exact rational roots come back as
/// zero-width intervals.
pub fn isolate_real_roots(p: &IntPoly, width: &BigRational) -> Vec<(RootInterval, usize)> {
    assert!(width > &BigRational::zero(), "width must be positive");
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let mut out: Vec<(RootInterval, usize)> = Vec::new();
    for (factor, mult) in p.squarefree_decomposition() {
        if factor.degree().unwrap_or(0) == 0 {
            continue;
        }
        for iv in isolate_squarefree(&factor, width) {
            out.push((iv, mult));
        }
    }
    // Distinct factors have disjoint root sets; refine any overlapping
    // intervals until the isolation is globally disjoint.
    loop {
        let mut changed = false;
        out.sort_by(|x, y| x.0.lo.cmp(&y.0.lo));
        for i in 1..out.len() {
            if out[i].0.lo < out[i - 1].0.hi {
                // Re-isolate both offenders at half their width.
                changed = true;
            }
        }
        if !changed {
            break;
        }
        let tighter: BigRational = out
            .iter()
            .map(|(iv, _)| iv.width())
            .filter(|w| !w.is_zero())
            .min()
            .unwrap_or_else(BigRational::one)
            / BigRational::from_integer(BigInt::from(4));
        out = Vec::new();
        for (factor, mult) in p.squarefree_decomposition() {
            if factor.degree().unwrap_or(0) == 0 {
                continue;
            }
            for iv in isolate_squarefree(&factor, &tighter) {
                out.push((iv, mult));
            }
        }
    }
    out
}

/// Isolation on a squarefree polynomial via Sturm-counted bisection.
pub(crate) fn isolate_squarefree(q: &IntPoly, width: &BigRational) -> Vec<RootInterval> {
    let chain = SturmChain::new(q);
    let b = q.cauchy_bound().ceil();
    let lo = -b.clone();
    let hi = b;
    let total = chain.count_half_open(&lo, &hi);
    let mut out = Vec::new();
    if total == 0 {
        return out;
    }
    // Work stack of (a, b, count in (a, b]).
    let mut stack = vec![(lo, hi, total)];
    while let Some((a, b, k)) = stack.pop() {
        if k == 0 {
            continue;
        }
        let w = &b - &a;
        if k == 1 {
            if q.sign_at(&b) == 0 {
                out.push(RootInterval { lo: b.clone(), hi: b });
                continue;
            }
            if &w <= width {
                out.push(RootInterval { lo: a, hi: b });
                continue;
            }
        }
        let mid = (&a + &b) / BigRational::from_integer(BigInt::from(2));
        let left = chain.count_half_open(&a, &mid);
        stack.push((a, mid.clone(), left));
        stack.push((mid, b, k - left));
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    out
}

/// Halves an isolating interval around the single root of squarefree `q`.
/// Requires the interval to contain exactly one root, counted as `(lo, hi]`.
pub(crate) fn refine_half(q: &IntPoly, chain: &SturmChain, iv: &RootInterval) -> RootInterval {
    if iv.is_exact() {
        return iv.clone();
    }
    let mid = (&iv.lo + &iv.hi) / BigRational::from_integer(BigInt::from(2));
    if q.sign_at(&mid) == 0 {
        return RootInterval { lo: mid.clone(), hi: mid };
    }
    if chain.count_half_open(&iv.lo, &mid) == 1 {
        RootInterval { lo: iv.lo.clone(), hi: mid }
    } else {
        RootInterval { lo: mid, hi: iv.hi.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn sturm_count_examples() {
        // x^2 - 5 has one root in (2, 3]
        let p = IntPoly::from_i64(&[-5, 0, 1]);
        assert_eq!(sturm_count(&p, &rat(2, 1), &rat(3, 1)).unwrap(), 1);
        // x^2 - 4 on (-2, 2]: only +2 counted
        let p = IntPoly::from_i64(&[-4, 0, 1]);
        assert_eq!(sturm_count(&p, &rat(-2, 1), &rat(2, 1)).unwrap(), 1);
        // x^2 + 1: no real roots
        let p = IntPoly::from_i64(&[1, 0, 1]);
        assert_eq!(sturm_count(&p, &rat(-10, 1), &rat(10, 1)).unwrap(), 0);
        // zero polynomial rejected
        assert_eq!(sturm_count(&IntPoly::zero(), &rat(0, 1), &rat(1, 1)), Err(PolyError::ZeroPolynomial));
        // bad interval rejected
        assert_eq!(sturm_count(&p, &rat(1, 1), &rat(1, 1)), Err(PolyError::EmptyInterval));
    }

    #[test]
    fn half_open_endpoint_convention() {
        // roots 0 and 1 of x(x-1)
        let p = IntPoly::from_i64(&[0, 1]).mul(&IntPoly::from_i64(&[-1, 1]));
        assert_eq!(sturm_count(&p, &rat(-1, 1), &rat(0, 1)).unwrap(), 1); // 0 in (-1,0]
        assert_eq!(sturm_count(&p, &rat(0, 1), &rat(1, 1)).unwrap(), 1); // 1 in (0,1], 0 excluded
        assert_eq!(sturm_count(&p, &rat(-1, 1), &rat(1, 1)).unwrap(), 2);
    }

    #[test]
    fn multiplicities_do_not_confuse_counts() {
        // (x-1)^2 (x+3): distinct roots 1, -3
        let p = IntPoly::from_i64(&[-1, 1])
            .mul(&IntPoly::from_i64(&[-1, 1]))
            .mul(&IntPoly::from_i64(&[3, 1]));
        assert_eq!(sturm_count(&p, &rat(-10, 1), &rat(10, 1)).unwrap(), 2);
    }

    #[test]
    fn isolate_examples() {
        // x^2 - 5: two intervals around ±2.2360679...
        let p = IntPoly::from_i64(&[-5, 0, 1]);
        let w = rat(1, 1000);
        let roots = isolate_real_roots(&p, &w);
        assert_eq!(roots.len(), 2);
        let approx = BigRational::from_f64(2.2360679).unwrap();
        assert!(roots[1].0.lo <= approx && approx <= roots[1].0.hi);
        assert!(roots[1].0.width() < w);
        assert_eq!(roots[0].1, 1);
        // (x-1)^2: one interval at exactly 1, multiplicity 2
        let p = IntPoly::from_i64(&[1, -2, 1]);
        let roots = isolate_real_roots(&p, &rat(1, 10));
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].1, 2);
        assert!(roots[0].0.lo <= BigRational::one() && BigRational::one() <= roots[0].0.hi);
        // x^2 + 1: empty
        assert!(isolate_real_roots(&IntPoly::from_i64(&[1, 0, 1]), &rat(1, 10)).is_empty());
    }

    #[test]
    fn isolation_agrees_with_sturm_totals() {
        let battery = [
            IntPoly::from_i64(&[-5, 0, 1]),
            IntPoly::from_i64(&[-1, -2, 1]),
            IntPoly::from_i64(&[0, -1, 0, 1]),      // x^3 - x
            IntPoly::from_i64(&[6, -5, -2, 1]),     // roots 1, -2, 3... (x-1)(x+2)(x-3)
            IntPoly::from_i64(&[2, 0, -4, 0, 1]),   // biquadratic
            IntPoly::from_i64(&[1, 4, 1]),
        ];
        for p in battery {
            let b = p.cauchy_bound().ceil();
            let total = sturm_count(&p, &(-b.clone()), &b).unwrap();
            let isolated = isolate_real_roots(&p, &rat(1, 64));
            assert_eq!(isolated.len(), total, "poly {p}");
        }
    }
}
