//! Exact cyclotomicity tests: the Kronecker-style product test by trial
//! division with cyclotomic polynomials, and the spectral band test for
//! real-rooted (Hermitian characteristic) polynomials via Sturm counts.

use super::sturm::SturmChain;
use super::{IntPoly, PolyError};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::Mutex;
use std::sync::OnceLock;

fn euler_phi(mut m: usize) -> usize {
    let mut phi = 1usize;
    let mut p = 2usize;
    while p * p <= m {
        if m % p == 0 {
            let mut pk = 1;
            while m % p == 0 {
                m /= p;
                pk *= p;
            }
            phi *= pk - pk / p;
        }
        p += 1;
    }
    if m > 1 {
        phi *= m - 1;
    }
    phi
}

fn phi_cache() -> &'static Mutex<HashMap<usize, IntPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, IntPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The m-th cyclotomic polynomial, computed by dividing `z^m - 1` by the
/// cyclotomic polynomials of the proper divisors of `m`. Cached.
pub fn cyclotomic_polynomial(m: usize) -> IntPoly {
    assert!(m >= 1);
    if let Some(p) = phi_cache().lock().unwrap().get(&m) {
        return p.clone();
    }
    let mut num = {
        let mut c = vec![BigInt::zero(); m + 1];
        c[0] = -BigInt::one();
        c[m] = BigInt::one();
        IntPoly::from_coeffs(c)
    };
    for div in 1..m {
        if m % div == 0 {
            let phi_d = cyclotomic_polynomial(div);
            num = num.div_exact(&phi_d).expect("cyclotomic division is exact");
        }
    }
    phi_cache().lock().unwrap().insert(m, num.clone());
    num
}

/// True iff `±P = z^k * (product of cyclotomic polynomials)`, decided
/// exactly: strip the power of `z`, then trial-divide by every `Phi_m` with
/// `phi(m) <= deg` until nothing remains.
pub fn is_cyclotomic_product(p: &IntPoly) -> bool {
    assert!(p.is_monic(), "is_cyclotomic_product expects a monic polynomial");
    let mut q = p.clone();
    // strip z^k
    let k = q.coeffs().iter().take_while(|c| c.is_zero()).count();
    if k > 0 {
        q = IntPoly::from_coeffs(q.coeffs()[k..].to_vec());
    }
    let deg0 = q.degree().unwrap();
    if deg0 == 0 {
        return true;
    }
    // All roots must be roots of unity, so m is bounded by phi(m) <= deg0;
    // phi(m) >= sqrt(m/2) gives m <= 2 deg0^2.
    let mut m = 1usize;
    while q.degree().unwrap() > 0 && m <= 2 * deg0 * deg0 + 1 {
        if euler_phi(m) <= q.degree().unwrap() {
            loop {
                let phi_m = cyclotomic_polynomial(m);
                match q.div_exact(&phi_m) {
                    Some(next) => q = next,
                    None => break,
                }
                if q.degree().unwrap() == 0 {
                    break;
                }
            }
        }
        m += 1;
    }
    q == IntPoly::one()
}

/// True iff every root of the monic, real-rooted `p` lies in `[-2, 2]`.
///
/// Decided exactly by Sturm counts on the squarefree part: zero roots in
/// `(2, B]` and zero roots in `[-B, -2)` for the Cauchy bound `B`; roots at
/// exactly ±2 are permitted. The caller asserts real-rootedness (always true
/// for Hermitian characteristic polynomials).
pub fn is_cyclotomic_spectrum(p: &IntPoly) -> Result<bool, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if !p.is_monic() {
        return Err(PolyError::NotMonic);
    }
    if p.degree() == Some(0) {
        return Ok(true);
    }
    let sf = p.squarefree_part();
    let chain = SturmChain::new(&sf);
    let b = p.cauchy_bound().ceil() + BigRational::one();
    let two = BigRational::from_integer(BigInt::from(2));
    // roots in (2, B]
    if chain.count_half_open(&two, &b) != 0 {
        return Ok(false);
    }
    // roots in [-B, -2) = roots in (-B-1, -2] minus a root at exactly -2
    let mut low = chain.count_half_open(&(-b.clone()), &(-two.clone()));
    if sf.sign_at(&(-two)) == 0 {
        low -= 1;
    }
    Ok(low == 0)
}
