//! Rational-coefficient polynomials for gcd and division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::IntPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct QPoly(Vec<BigRational>);

impl From<&IntPoly> for QPoly {
    fn from(p: &IntPoly) -> Self {
        QPoly(p.coeffs().iter().cloned().map(BigRational::from_integer).collect())
    }
}

impl QPoly {
    fn trimmed(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        QPoly(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.0[dd].clone();
        let mut rem = self.0.clone();
        let mut quot = vec![BigRational::zero(); self.0.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let factor = &rem[top] / &lead;
            if !factor.is_zero() {
                for (i, c) in d.0.iter().enumerate() {
                    rem[top - dd + i] -= &factor * c;
                }
                quot[top - dd] = factor;
            }
            rem.pop();
        }
        (QPoly::trimmed(quot), QPoly::trimmed(rem))
    }

    fn monic(&self) -> QPoly {
        match self.0.last() {
            None => self.clone(),
            Some(lead) => QPoly(self.0.iter().map(|c| c / lead).collect()),
        }
    }

    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> QPoly {
        QPoly::trimmed(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(k.into()))
                .collect(),
        )
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        let len = self.0.len().max(other.0.len());
        let zero = BigRational::zero();
        QPoly::trimmed(
            (0..len)
                .map(|k| self.0.get(k).unwrap_or(&zero) - other.0.get(k).unwrap_or(&zero))
                .collect(),
        )
    }

    /// Integer polynomial when every coefficient is integral.
    pub fn to_int(&self) -> Option<IntPoly> {
        self.0
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPoly::new)
    }

    /// Positive rational multiple with coprime integer coefficients.
    pub fn primitive(&self) -> IntPoly {
        let denom_lcm = self.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.0.iter().map(|c| (c * &denom_lcm).to_integer()).collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if content.is_zero() {
            return IntPoly::zero();
        }
        IntPoly::new(ints.into_iter().map(|c| c / content.abs()).collect())
    }
}
