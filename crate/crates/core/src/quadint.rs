//! Exact arithmetic in `R = O_Q(sqrt(d))` for squarefree `d < 0`,
//! `d != -1, -3`, plus enumeration of the norm-level label sets `L_n`.
//!
//! Elements are stored as `(x + y*sqrt(d)) / s` with `s = 2` exactly when
//! `d = 1 (mod 4)` (half-integers obey the parity rule `x = y (mod 2)`),
//! and `s = 1` otherwise. One code path serves both congruence classes.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

/// A supported ring of integers `O_Q(sqrt(d))`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct RingSpec {
    /// Squarefree negative field discriminant parameter; never -1 or -3.
    pub d: i64,
    /// Denominator scale: 2 iff `d = 1 (mod 4)`, else 1.
    pub s: i64,
}

/// Why a requested ring is not supported.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RingError {
    NotNegative(i64),
    NotSquarefree(i64),
    Excluded(i64),
}

impl fmt::Display for RingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingError::NotNegative(d) => write!(f, "d = {d} is not negative"),
            RingError::NotSquarefree(d) => write!(f, "d = {d} is not squarefree"),
            RingError::Excluded(d) => {
                write!(f, "d = {d} is excluded (Gaussian/Eisenstein case, handled elsewhere)")
            }
        }
    }
}

impl std::error::Error for RingError {}

fn is_squarefree(n: u64) -> bool {
    let mut n = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % (p * p) == 0 {
            return false;
        }
        while n % p == 0 {
            n /= p;
        }
        p += 1;
    }
    true
}

/// Builds the ring for a given `d`, validating all preconditions.
pub fn ring_make(d: i64) -> Result<RingSpec, RingError> {
    if d >= 0 {
        return Err(RingError::NotNegative(d));
    }
    if d == -1 || d == -3 {
        return Err(RingError::Excluded(d));
    }
    if !is_squarefree(d.unsigned_abs()) {
        return Err(RingError::NotSquarefree(d));
    }
    // d < 0: d = 1 (mod 4) means |d| = 3 (mod 4).
    let s = if d.rem_euclid(4) == 1 { 2 } else { 1 };
    Ok(RingSpec { d, s })
}

impl RingSpec {
    /// Zero element of this ring.
    pub fn zero(&self) -> QuadInt {
        QuadInt { x: 0, y: 0, ring: *self }
    }

    /// The rational integer `n` as a ring element.
    pub fn integer(&self, n: i64) -> QuadInt {
        QuadInt { x: n * self.s, y: 0, ring: *self }
    }

    /// `sqrt(d)` as a ring element.
    pub fn root(&self) -> QuadInt {
        QuadInt { x: 0, y: self.s, ring: *self }
    }
}

/// An element `(x + y*sqrt(d)) / s` of the ring of integers.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct QuadInt {
    pub x: i64,
    pub y: i64,
    pub ring: RingSpec,
}

/// Errors from the checked arithmetic surface.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum QuadIntError {
    MismatchedRings { left: i64, right: i64 },
    ParityViolation { x: i64, y: i64, d: i64 },
}

impl fmt::Display for QuadIntError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuadIntError::MismatchedRings { left, right } => {
                write!(f, "operands live in different rings (d = {left} vs d = {right})")
            }
            QuadIntError::ParityViolation { x, y, d } => {
                write!(f, "({x} + {y}*sqrt({d}))/2 violates the half-integer parity rule")
            }
        }
    }
}

impl std::error::Error for QuadIntError {}

/// Binary ring operation selector for the checked surface.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl QuadInt {
    /// Builds `(x + y*sqrt(d))/s`, enforcing the parity invariant when `s = 2`.
    pub fn new(ring: RingSpec, x: i64, y: i64) -> Result<QuadInt, QuadIntError> {
        if ring.s == 2 && (x - y) % 2 != 0 {
            return Err(QuadIntError::ParityViolation { x, y, d: ring.d });
        }
        Ok(QuadInt { x, y, ring })
    }

    pub fn is_zero(&self) -> bool {
        self.x == 0 && self.y == 0
    }

    /// Is this a rational integer (no sqrt(d) part)?
    pub fn is_rational(&self) -> bool {
        self.y == 0
    }

    /// The rational integer value, if this element is rational.
    pub fn as_rational(&self) -> Option<i64> {
        if self.y == 0 && self.x % self.ring.s == 0 {
            Some(self.x / self.ring.s)
        } else {
            None
        }
    }

    /// Complex conjugate: negates the `sqrt(d)` part. An involution.
    pub fn conj(&self) -> QuadInt {
        QuadInt { x: self.x, y: -self.y, ring: self.ring }
    }

    /// The field norm `a * conj(a) = (x^2 - d*y^2) / s^2`, a non-negative
    /// rational integer.
    pub fn norm(&self) -> i64 {
        let n = self.x as i128 * self.x as i128 - self.ring.d as i128 * self.y as i128 * self.y as i128;
        let s2 = (self.ring.s * self.ring.s) as i128;
        debug_assert!(n % s2 == 0, "norm must be integral");
        i64::try_from(n / s2).expect("norm overflow")
    }

    /// Canonical total order key: lexicographic on (norm, x, y).
    pub fn order_key(&self) -> (i64, i64, i64) {
        (self.norm(), self.x, self.y)
    }

    /// True when this element is the canonical representative of the pair
    /// `{q, -q}`, i.e. `q > -q` under the (norm, x, y) order. Zero is not
    /// positive.
    pub fn is_positive_rep(&self) -> bool {
        !self.is_zero() && self.order_key() > self.neg().order_key()
    }

    pub fn neg(&self) -> QuadInt {
        QuadInt { x: -self.x, y: -self.y, ring: self.ring }
    }

    fn require_same_ring(&self, other: &QuadInt) -> Result<(), QuadIntError> {
        if self.ring != other.ring {
            return Err(QuadIntError::MismatchedRings { left: self.ring.d, right: other.ring.d });
        }
        Ok(())
    }

    pub fn add(&self, other: &QuadInt) -> QuadInt {
        assert_eq!(self.ring, other.ring, "mismatched rings in add");
        QuadInt { x: self.x + other.x, y: self.y + other.y, ring: self.ring }
    }

    pub fn sub(&self, other: &QuadInt) -> QuadInt {
        assert_eq!(self.ring, other.ring, "mismatched rings in sub");
        QuadInt { x: self.x - other.x, y: self.y - other.y, ring: self.ring }
    }

    /// Exact product. With values `(x1 + y1 r)/s` and `(x2 + y2 r)/s`,
    /// the product is `((x1 x2 + d y1 y2) + (x1 y2 + x2 y1) r) / s^2`;
    /// both numerator components are divisible by `s`.
    pub fn mul(&self, other: &QuadInt) -> QuadInt {
        assert_eq!(self.ring, other.ring, "mismatched rings in mul");
        let d = self.ring.d;
        let s = self.ring.s;
        let nx = self.x * other.x + d * self.y * other.y;
        let ny = self.x * other.y + self.y * other.x;
        debug_assert!(nx % s == 0 && ny % s == 0, "product must stay integral");
        QuadInt { x: nx / s, y: ny / s, ring: self.ring }
    }

    /// Checked binary operation surface; rejects mismatched rings.
    pub fn arith(a: &QuadInt, b: &QuadInt, op: ArithOp) -> Result<QuadInt, QuadIntError> {
        a.require_same_ring(b)?;
        Ok(match op {
            ArithOp::Add => a.add(b),
            ArithOp::Sub => a.sub(b),
            ArithOp::Mul => a.mul(b),
        })
    }
}

impl PartialOrd for QuadInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadInt {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.ring, other.ring, "ordering across rings");
        self.order_key().cmp(&other.order_key())
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.y == 0 {
            if self.ring.s == 2 {
                return write!(f, "{}", self.x / 2);
            }
            return write!(f, "{}", self.x);
        }
        if self.ring.s == 2 {
            write!(f, "({} + {}*r{})/2", self.x, self.y, self.ring.d)
        } else {
            write!(f, "{} + {}*r{}", self.x, self.y, self.ring.d)
        }
    }
}

/// Tag choosing which label set to build.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum LabelTag {
    /// All elements of norm exactly `n`.
    Level(u8),
    /// `{0} ∪ L1 ∪ L2 ∪ L3 ∪ L4`.
    FullL,
    /// `{0} ∪ L1 ∪ L2`.
    LPrime,
}

/// A finite, canonically sorted label set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabelSet {
    pub ring: RingSpec,
    pub tag: LabelTag,
    pub members: Vec<QuadInt>,
}

/// All ring elements of norm exactly `n`, sorted by the canonical order.
///
/// Scans `|y| <= floor(sqrt(n*s^2/|d|))` and solves for `x` exactly.
/// Closed under negation and conjugation; empty when `L_n` is.
pub fn enumerate_norm(ring: RingSpec, n: i64) -> Vec<QuadInt> {
    assert!(n >= 0, "norm levels are non-negative");
    let mut out = Vec::new();
    if n == 0 {
        out.push(ring.zero());
        return out;
    }
    let target = n * ring.s * ring.s; // x^2 + |d| y^2 = n s^2
    let ad = -ring.d;
    let ymax = {
        let mut y = 0i64;
        while (y + 1) * (y + 1) * ad <= target {
            y += 1;
        }
        y
    };
    for y in -ymax..=ymax {
        let rem = target - ad * y * y;
        if rem < 0 {
            continue;
        }
        let x = isqrt(rem);
        if x * x != rem {
            continue;
        }
        let cands: &[i64] = if x == 0 { &[0] } else { &[x, -x] };
        for &cand in cands {
            if let Ok(q) = QuadInt::new(ring, cand, y) {
                out.push(q);
            }
        }
    }
    out.sort_by_key(|q| q.order_key());
    out
}

fn isqrt(n: i64) -> i64 {
    debug_assert!(n >= 0);
    let mut r = (n as f64).sqrt() as i64;
    while r > 0 && r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Builds the requested label set (union of norm levels, plus 0 where the
/// tag includes it), sorted canonically.
pub fn label_set(ring: RingSpec, tag: LabelTag) -> LabelSet {
    let mut members = Vec::new();
    match tag {
        LabelTag::Level(n) => {
            members = enumerate_norm(ring, n as i64);
        }
        LabelTag::FullL => {
            members.push(ring.zero());
            for n in 1..=4 {
                members.extend(enumerate_norm(ring, n));
            }
        }
        LabelTag::LPrime => {
            members.push(ring.zero());
            for n in 1..=2 {
                members.extend(enumerate_norm(ring, n));
            }
        }
    }
    members.sort_by_key(|q| q.order_key());
    LabelSet { ring, tag, members }
}
