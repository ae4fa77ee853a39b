//! Fast exact spectral band counts for real-rooted integer polynomials.
//!
//! For a monic polynomial with all roots real, the number of roots greater
//! than 2 (with multiplicity) equals the number of coefficient sign changes
//! of the Taylor shift `p(x + 2)` — Descartes' rule is exact on real-rooted
//! input. Counting below -2 reflects first. This gives the cyclotomicity
//! predicate of the search loop in O(n^2) machine-integer operations with
//! no divisions; a BigInt twin serves as overflow fallback and test oracle.

use super::IntPoly;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Sign variations of an i128 coefficient sequence, zeros skipped.
fn variations_i128(coeffs: &[i128]) -> u32 {
    let mut count = 0;
    let mut last = 0i128;
    for &c in coeffs {
        if c == 0 {
            continue;
        }
        if last != 0 && (c > 0) != (last > 0) {
            count += 1;
        }
        last = c;
    }
    count
}

/// Taylor shift `p(x + c)` in place; `None` on overflow.
fn shift_i128(coeffs: &mut [i128], c: i128) -> Option<()> {
    let n = coeffs.len();
    if n == 0 {
        return Some(());
    }
    for i in 0..n - 1 {
        for j in (i..n - 1).rev() {
            let add = coeffs[j + 1].checked_mul(c)?;
            coeffs[j] = coeffs[j].checked_add(add)?;
        }
    }
    Some(())
}

/// For real-rooted `p` (ascending i128 coefficients): the pair
/// `(#roots > 2, #roots < -2)` with multiplicity. `None` if the shift
/// overflows i128 (callers fall back to the BigInt path).
pub fn band_counts_i128(coeffs: &[i128]) -> Option<(u32, u32)> {
    let mut up = coeffs.to_vec();
    shift_i128(&mut up, 2)?;
    let gt2 = variations_i128(&up);
    // p(-x): negate odd coefficients, then roots < -2 become roots > 2.
    let mut down = coeffs.to_vec();
    for (i, c) in down.iter_mut().enumerate() {
        if i % 2 == 1 {
            *c = c.checked_neg()?;
        }
    }
    shift_i128(&mut down, 2)?;
    let ltm2 = variations_i128(&down);
    Some((gt2, ltm2))
}

/// BigInt twin of [`band_counts_i128`]; never overflows.
pub fn band_counts_bigint(p: &IntPoly) -> (u32, u32) {
    let two = BigInt::from(2);
    let up = p.compose_x_plus(&two);
    let gt2 = variations_big(up.coeffs());
    let down = p.reflect().compose_x_plus(&two);
    let ltm2 = variations_big(down.coeffs());
    (gt2, ltm2)
}

fn variations_big(coeffs: &[BigInt]) -> u32 {
    let mut count = 0;
    let mut last = 0i8;
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        let s = if c.is_positive() { 1 } else { -1 };
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::is_cyclotomic_spectrum;

    fn counts(coeffs: &[i128]) -> (u32, u32) {
        band_counts_i128(coeffs).unwrap()
    }

    #[test]
    fn band_count_examples() {
        assert_eq!(counts(&[-4, 0, 1]), (0, 0)); // roots ±2: on the boundary
        assert_eq!(counts(&[-1, -2, 1]), (1, 0)); // roots 1 ± sqrt2
        assert_eq!(counts(&[-3, 1]), (1, 0)); // root 3
        assert_eq!(counts(&[3, 1]), (0, 1)); // root -3
        assert_eq!(counts(&[-9, 0, 1]), (1, 1)); // roots ±3
        assert_eq!(counts(&[9, -6, 1]), (2, 0)); // (x-3)^2: multiplicity 2
        assert_eq!(counts(&[0, 1]), (0, 0));
    }

    #[test]
    fn agrees_with_bigint_twin_and_sturm() {
        let battery: Vec<Vec<i128>> = vec![
            vec![-4, 0, 1],
            vec![-1, -2, 1],
            vec![-3, 1],
            vec![2, -1, -2, 1],
            vec![0, -5, 0, 1],
            vec![-6, 11, -6, 1],
            vec![9, -6, 1],
            vec![-12, -4, 3, 1],
            vec![1, -4, 1],
        ];
        for c in battery {
            let p = IntPoly::from_i128(&c);
            let fast = counts(&c);
            let slow = band_counts_bigint(&p);
            assert_eq!(fast, slow, "i128 vs bigint for {p}");
            let cyclo = is_cyclotomic_spectrum(&p).unwrap();
            assert_eq!(cyclo, fast == (0, 0), "band test vs sturm for {p}");
        }
    }
}
