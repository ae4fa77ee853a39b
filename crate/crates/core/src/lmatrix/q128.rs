//! Internal exact arithmetic for characteristic polynomials: ring elements
//! as (x, y) i128 numerator pairs over a fixed (d, s), and the
//! Faddeev–LeVerrier recurrence, which also yields the adjugate polynomial
//! matrix used by the bordered-determinant fast path in `grow`.
//!
//! All products go through checked ops: an overflow here means a scale
//! violation upstream and panics rather than corrupting an exact result.

use super::LGraph;

/// Numerator pair of `(x + y*sqrt(d)) / s`.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub(crate) struct Q128 {
    pub x: i128,
    pub y: i128,
}

pub(crate) const Q128_ZERO: Q128 = Q128 { x: 0, y: 0 };

impl Q128 {
    pub(crate) fn is_zero(&self) -> bool {
        self.x == 0 && self.y == 0
    }

    pub(crate) fn conj(&self) -> Q128 {
        Q128 { x: self.x, y: -self.y }
    }

    pub(crate) fn add(&self, o: &Q128) -> Q128 {
        Q128 { x: self.x.checked_add(o.x).expect("q128 add"), y: self.y.checked_add(o.y).expect("q128 add") }
    }

    pub(crate) fn sub(&self, o: &Q128) -> Q128 {
        Q128 { x: self.x.checked_sub(o.x).expect("q128 sub"), y: self.y.checked_sub(o.y).expect("q128 sub") }
    }

    pub(crate) fn mul(&self, o: &Q128, d: i128, s: i128) -> Q128 {
        let xx = self.x.checked_mul(o.x).expect("q128 mul");
        let yy = self.y.checked_mul(o.y).expect("q128 mul");
        let xy = self.x.checked_mul(o.y).expect("q128 mul");
        let yx = self.y.checked_mul(o.x).expect("q128 mul");
        let nx = xx.checked_add(d.checked_mul(yy).expect("q128 mul")).expect("q128 mul");
        let ny = xy.checked_add(yx).expect("q128 mul");
        debug_assert!(nx % s == 0 && ny % s == 0);
        Q128 { x: nx / s, y: ny / s }
    }

    /// The rational-integer value; panics when the element is not rational.
    pub(crate) fn to_int(&self, s: i128) -> i128 {
        assert_eq!(self.y, 0, "expected a rational integer");
        assert_eq!(self.x % s, 0, "expected an integral value");
        self.x / s
    }

    pub(crate) fn from_int(v: i128, s: i128) -> Q128 {
        Q128 { x: v.checked_mul(s).expect("q128 scale"), y: 0 }
    }
}

/// Dense Hermitian matrix snapshot of a graph.
pub(crate) struct QMatrix {
    pub n: usize,
    pub d: i128,
    pub s: i128,
    pub a: Vec<Q128>, // row-major n*n
}

impl QMatrix {
    pub(crate) fn from_graph(g: &LGraph) -> QMatrix {
        let n = g.n();
        let mut a = vec![Q128_ZERO; n * n];
        for i in 0..n {
            for j in 0..n {
                let e = g.entry(i, j);
                a[i * n + j] = Q128 { x: e.x as i128, y: e.y as i128 };
            }
        }
        QMatrix { n, d: g.ring().d as i128, s: g.ring().s as i128, a }
    }

    pub(crate) fn at(&self, i: usize, j: usize) -> Q128 {
        self.a[i * self.n + j]
    }

    fn mul(&self, other: &[Q128]) -> Vec<Q128> {
        let n = self.n;
        let mut out = vec![Q128_ZERO; n * n];
        for i in 0..n {
            for k in 0..n {
                let aik = self.a[i * n + k];
                if aik.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other[k * n + j];
                    if b.is_zero() {
                        continue;
                    }
                    out[i * n + j] = out[i * n + j].add(&aik.mul(&b, self.d, self.s));
                }
            }
        }
        out
    }
}

/// Faddeev–LeVerrier output: ascending characteristic-polynomial
/// coefficients and, optionally, the adjugate polynomial matrix
/// `adj(xI - A) = sum_k M_k x^(n-1-k)`.
pub(crate) struct Leverrier {
    pub coeffs: Vec<i128>,
    /// `adj_terms[k]` is the matrix coefficient of `x^(n-1-k)`, k = 0..n-1.
    pub adj_terms: Vec<Vec<Q128>>,
}

pub(crate) fn leverrier(m: &QMatrix, want_adjugate: bool) -> Leverrier {
    let n = m.n;
    let s = m.s;
    let mut coeffs = vec![0i128; n + 1];
    coeffs[n] = 1;
    let mut mk: Vec<Q128> = (0..n * n)
        .map(|idx| if idx % (n + 1) == 0 { Q128::from_int(1, s) } else { Q128_ZERO })
        .collect();
    let mut adj_terms = Vec::new();
    if want_adjugate {
        adj_terms.push(mk.clone());
    }
    for k in 1..=n {
        let am = m.mul(&mk);
        let mut tr: i128 = 0;
        for i in 0..n {
            tr = tr.checked_add(am[i * n + i].to_int(s)).expect("trace");
        }
        assert_eq!(tr % (k as i128), 0, "Leverrier trace divisibility");
        let c = -tr / (k as i128);
        coeffs[n - k] = c;
        if k < n {
            mk = am;
            let cq = Q128::from_int(c, s);
            for i in 0..n {
                mk[i * n + i] = mk[i * n + i].add(&cq);
            }
            if want_adjugate {
                adj_terms.push(mk.clone());
            }
        }
    }
    Leverrier { coeffs, adj_terms }
}

/// Exact ascending characteristic polynomial coefficients of a graph.
pub(crate) fn char_poly(g: &LGraph) -> Vec<i128> {
    let m = QMatrix::from_graph(g);
    leverrier(&m, false).coeffs
}
