//! Coefficient-shape checks.
//!
//! All checks look at the window between the lowest and highest nonzero
//! coefficients, re-indexed from zero. Negative coefficients are rejected.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::IntPoly;
use crate::error::{Error, Result};

/// Coefficients from the lowest to the highest nonzero term.
pub fn window(p: &IntPoly) -> Result<&[BigInt]> {
    if let Some(k) = p.coeffs().iter().position(Signed::is_negative) {
        return Err(Error::NegativeCoefficient(k));
    }
    Ok(match p.lowest_degree() {
        Some(low) => &p.coeffs()[low..],
        None => &[],
    })
}

pub fn is_unimodal(p: &IntPoly) -> Result<bool> {
    let w = window(p)?;
    let mut i = 1;
    while i < w.len() && w[i - 1] <= w[i] {
        i += 1;
    }
    while i < w.len() && w[i - 1] >= w[i] {
        i += 1;
    }
    Ok(i >= w.len())
}

/// `a_k^2 >= a_{k-1} a_{k+1}` for every interior `k`.
pub fn is_log_concave(p: &IntPoly) -> Result<bool> {
    let w = window(p)?;
    Ok(w.windows(3).all(|t| &t[1] * &t[1] >= &t[0] * &t[2]))
}

pub fn is_symmetric(p: &IntPoly) -> Result<bool> {
    let w = window(p)?;
    Ok(w.iter().eq(w.iter().rev()))
}

/// Newton's inequalities on the window `a_0..a_n`:
/// `a_k^2 >= a_{k-1} a_{k+1} (1 + 1/k)(1 + 1/(n-k))`, checked in integers as
/// `a_k^2 k (n-k) >= a_{k-1} a_{k+1} (k+1)(n-k+1)`.
pub fn newton_check(p: &IntPoly) -> Result<bool> {
    let w = window(p)?;
    if w.len() < 3 {
        return Ok(true);
    }
    let n = w.len() - 1;
    Ok((1..n).all(|k| {
        let lhs = &w[k] * &w[k] * BigInt::from(k * (n - k));
        let rhs = &w[k - 1] * &w[k + 1] * BigInt::from((k + 1) * (n - k + 1));
        lhs >= rhs
    }))
}

/// Whether every window coefficient is strictly positive.
pub fn has_positive_window(p: &IntPoly) -> bool {
    window(p).is_ok_and(|w| w.iter().all(|c| !c.is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn examples() {
        assert!(is_unimodal(&p(&[0, 0, 1, 4])).unwrap());
        assert!(is_log_concave(&p(&[0, 0, 1, 6, 2])).unwrap());
        assert!(is_symmetric(&p(&[1, 3, 3, 1])).unwrap());
        assert!(!is_unimodal(&p(&[0, 1, 0, 1])).unwrap());
        assert!(!is_log_concave(&p(&[0, 1, 0, 1])).unwrap());
        assert!(!is_symmetric(&p(&[0, 1, 2])).unwrap());
        assert!(is_unimodal(&p(&[0, 1, 3, 3, 1])).unwrap());
        assert!(!is_unimodal(&p(&[2, 1, 2])).unwrap());
        assert!(is_unimodal(&IntPoly::zero()).unwrap());
    }

    #[test]
    fn newton_examples() {
        assert!(newton_check(&p(&[1, 3, 3, 1])).unwrap());
        assert!(newton_check(&p(&[0, 0, 0, 6, 2])).unwrap());
        assert!(!newton_check(&p(&[1, 1, 1])).unwrap());
        // log-concave but not Newton: 1 + 2x + 2x^2 (4 >= 2 but 4 < 2*2*2)
        assert!(is_log_concave(&p(&[1, 2, 2])).unwrap());
        assert!(!newton_check(&p(&[1, 2, 2])).unwrap());
    }

    #[test]
    fn negative_coefficients_rejected() {
        assert_eq!(is_unimodal(&p(&[1, -1])), Err(Error::NegativeCoefficient(1)));
        assert_eq!(newton_check(&p(&[-1, 1])), Err(Error::NegativeCoefficient(0)));
    }

    fn positive_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(1i64..30, 1..6).prop_map(|c| IntPoly::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn log_concave_implies_unimodal(a in positive_poly()) {
            if is_log_concave(&a).unwrap() {
                prop_assert!(is_unimodal(&a).unwrap());
            }
        }

        #[test]
        fn log_concave_closed_under_products(a in positive_poly(), b in positive_poly()) {
            prop_assume!(is_log_concave(&a).unwrap() && is_log_concave(&b).unwrap());
            prop_assert!(is_log_concave(&(&a * &b)).unwrap());
        }

        #[test]
        fn log_concave_times_unimodal_is_unimodal(a in positive_poly(), b in positive_poly()) {
            prop_assume!(is_log_concave(&a).unwrap() && is_unimodal(&b).unwrap());
            prop_assert!(is_unimodal(&(&a * &b)).unwrap());
        }

        #[test]
        fn symmetric_unimodal_closed_under_products(a in positive_poly(), b in positive_poly()) {
            let a = &a * &IntPoly::new(a.coeffs().iter().rev().cloned().collect());
            let b = &b * &IntPoly::new(b.coeffs().iter().rev().cloned().collect());
            prop_assume!(is_unimodal(&a).unwrap() && is_unimodal(&b).unwrap());
            let prod = &a * &b;
            prop_assert!(is_symmetric(&prod).unwrap() && is_unimodal(&prod).unwrap());
        }

        #[test]
        fn newton_implies_log_concave(a in positive_poly()) {
            if newton_check(&a).unwrap() {
                prop_assert!(is_log_concave(&a).unwrap());
            }
        }
    }
}
