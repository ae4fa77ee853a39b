//! Exact integer-polynomial machinery: the associated reciprocal
//! transform, Sturm-based root location, cyclotomicity tests and Mahler
//! measures with certified rational enclosures.

mod band;
mod cyclo;
mod mahler;
mod sturm;

pub use band::{band_counts_bigint, band_counts_i128};
pub use cyclo::{cyclotomic_polynomial, is_cyclotomic_product, is_cyclotomic_spectrum};
pub use mahler::{
    lambda0, lehmer_polynomial, mahler_general, mahler_real_rooted, rational_decimal as decimal_string,
    MahlerResult, RootWitness,
};
pub use sturm::{isolate_real_roots, sturm_count, RootInterval};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Errors from the polynomial operations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PolyError {
    ZeroPolynomial,
    NotMonic,
    EmptyInterval,
    BadTolerance,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::ZeroPolynomial => write!(f, "operation undefined for the zero polynomial"),
            PolyError::NotMonic => write!(f, "polynomial must be monic"),
            PolyError::EmptyInterval => write!(f, "interval bounds must satisfy a < b"),
            PolyError::BadTolerance => write!(f, "tolerance must be positive"),
        }
    }
}

impl std::error::Error for PolyError {}

/// An exact integer-coefficient univariate polynomial, coefficients stored
/// in ascending degree with the leading coefficient nonzero. The zero
/// polynomial is the empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> IntPoly {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> IntPoly {
        IntPoly { coeffs: vec![BigInt::one()] }
    }

    /// `x`
    pub fn x() -> IntPoly {
        IntPoly { coeffs: vec![BigInt::zero(), BigInt::one()] }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> IntPoly {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_i128(coeffs: &[i128]) -> IntPoly {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs: out }
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::from_coeffs(
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect(),
        )
    }

    pub fn eval_bigint(&self, t: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn eval_rational(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of `p(a/b)` computed without building rationals:
    /// `sign(sum c_i a^i b^(n-i))` for `b > 0`.
    pub fn sign_at(&self, t: &BigRational) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let a = t.numer();
        let b = t.denom(); // always > 0 in num-rational
        let mut bpow = BigInt::one();
        let mut terms: Vec<BigInt> = Vec::with_capacity(self.coeffs.len());
        for c in self.coeffs.iter().rev() {
            terms.push(c * &bpow);
            bpow *= b;
        }
        let mut acc = BigInt::zero();
        for t in terms {
            acc = acc * a + t;
        }
        match acc.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    /// Sign at +infinity (0 for the zero polynomial).
    pub fn sign_at_pos_inf(&self) -> i8 {
        match self.leading() {
            None => 0,
            Some(c) => {
                if c.is_positive() {
                    1
                } else {
                    -1
                }
            }
        }
    }

    /// Content (gcd of coefficients), non-negative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num_integer::gcd(g, c.abs());
        }
        g
    }

    /// Divides by the content, preserving sign.
    pub fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let g = self.content();
        IntPoly { coeffs: self.coeffs.iter().map(|c| c / &g).collect() }
    }

    /// Exact division: returns `self / divisor` when the division leaves no
    /// remainder over the integers.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let dn = divisor.degree().unwrap();
        let n = self.degree().unwrap();
        if n < dn {
            return None;
        }
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - dn + 1];
        for k in (0..=n - dn).rev() {
            let c = &rem[k + dn];
            if c.is_zero() {
                continue;
            }
            let (q, r) = num_integer::div_rem(c.clone(), lead.clone());
            if !r.is_zero() {
                return None;
            }
            quot[k] = q.clone();
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                let prod = dc * &q;
                rem[k + i] -= prod;
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::from_coeffs(quot))
    }

    /// Pseudo-remainder: returns `(m, r)` with `m = lc(g)^(deg f - deg g + 1)`
    /// and `r = m*f mod g` computed without fractions. Requires `g` nonzero
    /// and `deg f >= deg g`.
    pub fn pseudo_rem(&self, g: &IntPoly) -> (BigInt, IntPoly) {
        let df = self.degree().expect("pseudo_rem of zero");
        let dg = g.degree().expect("pseudo_rem by zero");
        assert!(df >= dg);
        let lc = g.leading().unwrap().clone();
        let mut m = BigInt::one();
        let mut rem = self.coeffs.clone();
        for k in (dg..=df).rev() {
            let coef = rem[k].clone();
            for c in rem.iter_mut() {
                *c *= &lc;
            }
            m *= &lc;
            for (i, gc) in g.coeffs.iter().enumerate() {
                let prod = gc * &coef;
                rem[k - dg + i] -= prod;
            }
            debug_assert!(rem[k].is_zero());
        }
        (m, IntPoly::from_coeffs(rem))
    }

    /// Primitive polynomial gcd, normalized to positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.is_zero() {
            return normalize_sign(b);
        }
        if b.is_zero() {
            return normalize_sign(a);
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            if b.is_zero() {
                return normalize_sign(a.primitive());
            }
            if b.degree() == Some(0) {
                return IntPoly::one();
            }
            let (_, r) = a.pseudo_rem(&b);
            a = b;
            b = r.primitive();
        }
    }

    /// The squarefree part `p / gcd(p, p')`, primitive, positive leading.
    pub fn squarefree_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let p = self.primitive();
        let g = p.gcd(&p.derivative());
        if g.degree() == Some(0) {
            return normalize_sign(p);
        }
        normalize_sign(p.div_exact(&g).expect("gcd divides").primitive())
    }

    /// Yun squarefree decomposition: returns `(q_i, i)` pairs with the `q_i`
    /// squarefree, pairwise coprime, and `p = c * prod q_i^i`.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let p = normalize_sign(self.primitive());
        let dp = p.derivative();
        let g = p.gcd(&dp);
        if g.degree() == Some(0) {
            out.push((p, 1));
            return out;
        }
        let mut w = p.div_exact(&g).expect("gcd divides p").primitive();
        let mut y = dp.div_exact(&g).expect("gcd divides p'").primitive();
        // Gauss: contents may differ; recompute z from the rational identity
        // by clearing denominators each round.
        let mut i = 1usize;
        loop {
            // z = y - w'
            let z = y.sub(&w.derivative());
            if z.is_zero() {
                if w.degree().unwrap_or(0) >= 1 {
                    out.push((normalize_sign(w), i));
                }
                break;
            }
            let a = w.gcd(&z);
            if a.degree().unwrap_or(0) >= 1 {
                out.push((normalize_sign(a.clone()), i));
            }
            w = w.div_exact(&a).expect("a divides w").primitive();
            y = z.div_exact(&a).expect("a divides z").primitive();
            if w.degree() == Some(0) {
                break;
            }
            i += 1;
        }
        out
    }

    /// Cauchy root bound: all real roots lie in `(-B, B)` with
    /// `B = 1 + max|c_i| / |c_n|`, returned as an exact rational.
    pub fn cauchy_bound(&self) -> BigRational {
        let lead = self.leading().expect("cauchy bound of zero").abs();
        let mut m = BigInt::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let a = c.abs();
            if a > m {
                m = a;
            }
        }
        BigRational::one() + BigRational::new(m, lead)
    }

    /// Taylor shift: returns `p(x + c)`.
    pub fn compose_x_plus(&self, c: &BigInt) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        // Synthetic division (Horner) repeated: classic O(n^2) shift.
        let mut a = self.coeffs.clone();
        let n = a.len();
        for i in 0..n - 1 {
            for j in (i..n - 1).rev() {
                let add = &a[j + 1] * c;
                a[j] += add;
            }
        }
        IntPoly::from_coeffs(a)
    }

    /// Returns `p(-x)`.
    pub fn reflect(&self) -> IntPoly {
        IntPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Number of distinct real roots (on the squarefree part), for tests
    /// and cross-checks.
    pub fn count_distinct_real_roots(&self) -> usize {
        let q = self.squarefree_part();
        if q.degree().unwrap_or(0) == 0 {
            return 0;
        }
        let b = q.cauchy_bound();
        sturm::sturm_count_squarefree(&q, &(-b.clone()), &b)
    }
}

fn normalize_sign(p: IntPoly) -> IntPoly {
    if p.leading().is_some_and(|c| c.is_negative()) {
        p.neg()
    } else {
        p
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            if i == 0 || !a.is_one() {
                write!(f, "{a}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// The associated reciprocal polynomial `z^n g(z + 1/z)` of a monic degree-n
/// polynomial, computed exactly as `sum g_k z^(n-k) (z^2+1)^k`. The output is
/// monic, palindromic, of degree `2n`.
pub fn associated_reciprocal(g: &IntPoly) -> Result<IntPoly, PolyError> {
    if !g.is_monic() {
        return Err(PolyError::NotMonic);
    }
    let n = g.degree().unwrap();
    if n < 1 {
        return Err(PolyError::NotMonic);
    }
    let z2p1 = IntPoly::from_i64(&[1, 0, 1]);
    let mut pow = IntPoly::one();
    let mut acc = IntPoly::zero();
    for k in 0..=n {
        // g_k * z^(n-k) * (z^2+1)^k
        let term = pow.scale(&g.coeff(k)).shift_up(n - k);
        acc = acc.add(&term);
        if k < n {
            pow = pow.mul(&z2p1);
        }
    }
    Ok(acc)
}
