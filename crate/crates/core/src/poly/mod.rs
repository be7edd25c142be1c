//! Dense integer polynomials.

mod complex;
mod qpoly;
mod real;
mod shape;

pub use complex::{complex_roots, DEFAULT_TOL, min_expansion_for_unit_disk, ComplexRoot, RootReport, UnitDiskExpansion};
pub use real::{is_real_rooted, isolate_real_roots, refine_root, square_free_decomposition, sturm_real_root_count, Bound, RealRoot};
pub use shape::{has_positive_window, is_log_concave, is_symmetric, is_unimodal, newton_check, window};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Polynomial with arbitrary-precision integer coefficients, stored
/// densely from the constant term up. The top coefficient is never zero;
/// the zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly::default()
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn x() -> Self {
        IntPoly::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        IntPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^k`; zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Exponent of the lowest nonzero term.
    pub fn lowest_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn pow(&self, k: u32) -> IntPoly {
        let mut result = IntPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `p(r x)`: coefficient `k` is multiplied by `r^k`.
    pub fn scale_arg(&self, r: &BigInt) -> IntPoly {
        let mut factor = BigInt::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &factor);
            factor *= r;
        }
        IntPoly::new(out)
    }

    /// `self(inner(x))`, by Horner's scheme.
    pub fn compose(&self, inner: &IntPoly) -> IntPoly {
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &IntPoly::constant(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// Divides out `x^k`; the low coefficients must be zero.
    pub(crate) fn shift_down(&self, k: usize) -> IntPoly {
        debug_assert!(self.coeffs.iter().take(k).all(Zero::is_zero));
        IntPoly::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn evaluate(&self, a: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * a + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn evaluate_int(&self, a: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * a + c;
        }
        acc
    }

    /// Exact quotient when `divisor` divides `self` in `Z[x]`.
    pub fn exact_div(&self, divisor: &IntPoly) -> Option<IntPoly> {
        if divisor.is_zero() {
            return None;
        }
        let (quot, rem) = qpoly::QPoly::from(self).div_rem(&qpoly::QPoly::from(divisor));
        if !rem.is_zero() {
            return None;
        }
        quot.to_int()
    }

    pub fn divides(&self, dividend: &IntPoly) -> bool {
        dividend.exact_div(self).is_some()
    }

    pub fn has_negative_coeff(&self) -> bool {
        self.coeffs.iter().any(Signed::is_negative)
    }
}

/// `Σ_m iG[m] · x^m · diH^(q - m)`: the independent domination polynomial
/// of a compound graph built from a `q`-block clique cover, given the
/// independence polynomial of the base graph and `D_i` of the attached graph.
pub fn compound_combine(ig: &IntPoly, dih: &IntPoly, q: usize) -> Result<IntPoly> {
    if dih.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let degree = ig.degree().unwrap_or(0);
    if degree > q {
        return Err(Error::DegreeExceedsCover { degree, q });
    }
    // powers[j] = dih^j
    let mut powers = vec![IntPoly::one()];
    for j in 1..=q {
        powers.push(&powers[j - 1] * dih);
    }
    let mut acc = IntPoly::zero();
    for (m, c) in ig.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = &IntPoly::monomial(c.clone(), m) * &powers[q - m];
        acc = &acc + &term;
    }
    Ok(acc)
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

/// Ascending exponents, `x^k` notation, unit coefficients elided:
/// `x + 3x^2`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            if k == 0 || !abs.is_one() {
                write!(f, "{abs}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    coeffs: Vec<String>,
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson { coeffs: self.coeffs.iter().map(ToString::to_string).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PolyJson::deserialize(d)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(IntPoly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p(&[0, 1]) + &p(&[0, 2]), p(&[0, 3]));
        assert_eq!(&p(&[0, 1, 1]) * &p(&[0, 1]), p(&[0, 0, 1, 1]));
        assert_eq!(p(&[0, 1, 1]).scale_arg(&BigInt::from(2)), p(&[0, 2, 4]));
        assert_eq!(p(&[1, 1]).pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(p(&[5]).pow(0), IntPoly::one());
        assert_eq!(&p(&[1, 2]) - &p(&[1, 2]), IntPoly::zero());
        assert_eq!(p(&[0, 0, 0]).degree(), None);
    }

    #[test]
    fn compose_examples() {
        assert_eq!(p(&[0, 2]).compose(&p(&[0, 2])), p(&[0, 4]));
        assert_eq!(p(&[0, 0, 2]).compose(&p(&[0, 2])), p(&[0, 0, 8]));
        let q = p(&[0, 3, 0, 7]);
        assert_eq!(q.compose(&IntPoly::x()), q);
    }

    #[test]
    fn compound_combine_examples() {
        // I(P4) with D_i(2K1) = x^2 over the two-pair cover gives D_i(H_4)
        assert_eq!(compound_combine(&p(&[1, 4, 3]), &p(&[0, 0, 1]), 2).unwrap(), p(&[0, 0, 3, 4, 1]));
        // I(P2) = 1 + 2x with H = K1, q = 2: D_i(P4)
        assert_eq!(compound_combine(&p(&[1, 2]), &p(&[0, 1]), 2).unwrap(), p(&[0, 0, 3]));
        assert_eq!(
            compound_combine(&p(&[1, 4, 3]), &p(&[0, 1]), 1),
            Err(Error::DegreeExceedsCover { degree: 2, q: 1 })
        );
        assert_eq!(compound_combine(&p(&[1]), &IntPoly::zero(), 1), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn evaluation() {
        let p8 = p(&[0, 0, 0, 4, 5]);
        assert_eq!(p8.evaluate_int(&BigInt::from(-1)), BigInt::from(1));
        assert_eq!(p(&[0, 1]).evaluate(&BigRational::from_integer((-1).into())), BigRational::from_integer((-1).into()));
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(p(&[1, 2, 4]).evaluate(&half), BigRational::from_integer(3.into()));
    }

    #[test]
    fn exact_division() {
        let a = p(&[0, 0, 3, 4, 1]);
        assert_eq!(a.exact_div(&p(&[0, 0, 1])), Some(p(&[3, 4, 1])));
        assert_eq!(a.exact_div(&p(&[1, 1])), Some(p(&[0, 0, 3, 1])));
        assert_eq!(a.exact_div(&p(&[2, 1])), None);
        assert_eq!(p(&[1, 1]).exact_div(&p(&[2, 2])), None);
        assert!(p(&[0, 1]).divides(&a));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[0, 1, 1]).to_string(), "x + x^2");
        assert_eq!(p(&[1, -2, 0, 3]).to_string(), "1 - 2x + 3x^3");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(IntPoly::one().to_string(), "1");
    }

    #[test]
    fn json_form() {
        let s = serde_json::to_string(&p(&[0, 1, 1])).unwrap();
        assert_eq!(s, r#"{"coeffs":["0","1","1"]}"#);
        let big: IntPoly = serde_json::from_str(r#"{"coeffs":["123456789012345678901234567890","0","0"]}"#).unwrap();
        assert_eq!(big.degree(), Some(0));
        assert!(serde_json::from_str::<IntPoly>(r#"{"coeffs":["1.5"]}"#).is_err());
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-20i64..20, 0..6).prop_map(|c| IntPoly::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn compose_associative(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(a.compose(&b.compose(&c)), a.compose(&b).compose(&c));
        }

        #[test]
        fn json_round_trip(a in small_poly()) {
            let s = serde_json::to_string(&a).unwrap();
            prop_assert_eq!(serde_json::from_str::<IntPoly>(&s).unwrap(), a);
        }

        #[test]
        fn product_is_divisible(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.exact_div(&b), Some(a));
        }
    }
}
