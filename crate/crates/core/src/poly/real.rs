//! Exact real-root work: square-free decomposition, Sturm sequences and
//! bisection isolation.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::qpoly::QPoly;
use super::IntPoly;
use crate::error::{Error, Result};

/// Endpoint of a Sturm counting interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(BigRational),
    PosInf,
}

impl Bound {
    pub fn int(v: i64) -> Bound {
        Bound::Finite(BigRational::from_integer(v.into()))
    }
}

/// A real root: the exact value when `lo == hi`, otherwise the unique
/// distinct root in the half-open interval `(lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealRoot {
    pub lo: BigRational,
    pub hi: BigRational,
    pub multiplicity: usize,
}

impl RealRoot {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn exact_value(&self) -> Option<&BigRational> {
        self.is_exact().then_some(&self.lo)
    }

    pub fn midpoint_f64(&self) -> f64 {
        rat_to_f64(&((&self.lo + &self.hi) / BigRational::from_integer(2.into())))
    }
}

impl Serialize for RealRoot {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            lo: String,
            hi: String,
            exact: bool,
            multiplicity: usize,
        }
        Repr {
            lo: self.lo.to_string(),
            hi: self.hi.to_string(),
            exact: self.is_exact(),
            multiplicity: self.multiplicity,
        }
        .serialize(s)
    }
}

pub(crate) fn rat_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

fn sign_at(p: &IntPoly, at: &Bound) -> Ordering {
    let Some(deg) = p.degree() else {
        return Ordering::Equal;
    };
    let lead = p.leading_coeff().expect("nonzero").sign();
    let lead = if lead == num_bigint::Sign::Minus { Ordering::Less } else { Ordering::Greater };
    match at {
        Bound::PosInf => lead,
        Bound::NegInf if deg % 2 == 1 => lead.reverse(),
        Bound::NegInf => lead,
        Bound::Finite(a) => p.evaluate(a).cmp(&BigRational::zero()),
    }
}

pub(crate) struct SturmSequence {
    polys: Vec<IntPoly>,
}

impl SturmSequence {
    /// Sequence for a square-free polynomial of degree at least one.
    pub fn new(p: &IntPoly) -> Self {
        let mut polys = vec![p.clone(), QPoly::from(&p.derivative()).primitive()];
        loop {
            let n = polys.len();
            let (_, rem) = QPoly::from(&polys[n - 2]).div_rem(&QPoly::from(&polys[n - 1]));
            if rem.is_zero() {
                break;
            }
            polys.push(-&rem.primitive());
        }
        SturmSequence { polys }
    }

    fn variations(&self, at: &Bound) -> usize {
        let signs: Vec<Ordering> = self
            .polys
            .iter()
            .map(|p| sign_at(p, at))
            .filter(|s| *s != Ordering::Equal)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Distinct roots in `(lo, hi]`.
    pub fn count(&self, lo: &Bound, hi: &Bound) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }

    fn count_finite(&self, lo: &BigRational, hi: &BigRational) -> usize {
        self.count(&Bound::Finite(lo.clone()), &Bound::Finite(hi.clone()))
    }
}

/// Primitive square-free part `p / gcd(p, p')`.
pub(crate) fn square_free_part(p: &IntPoly) -> IntPoly {
    let q = QPoly::from(p);
    let g = q.gcd(&q.derivative());
    q.div_rem(&g).0.primitive()
}

/// Yun's decomposition `p = c · Π f_i^i` with each `f_i` square-free,
/// primitive and pairwise coprime. Returns the nonconstant `(f_i, i)`.
pub fn square_free_decomposition(p: &IntPoly) -> Result<Vec<(IntPoly, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let a = QPoly::from(p);
    let da = a.derivative();
    let b = a.gcd(&da);
    let mut c = a.div_rem(&b).0;
    let mut d = da.div_rem(&b).0.sub(&c.derivative());
    let mut out = Vec::new();
    let mut i = 1;
    while c.degree().unwrap_or(0) > 0 {
        let factor = c.gcd(&d);
        c = c.div_rem(&factor).0;
        d = d.div_rem(&factor).0.sub(&c.derivative());
        if factor.degree().unwrap_or(0) > 0 {
            out.push((factor.primitive(), i));
        }
        i += 1;
    }
    Ok(out)
}

/// Number of distinct real roots of `p` in `(lo, hi]`.
pub fn sturm_real_root_count(p: &IntPoly, lo: &Bound, hi: &Bound) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sqf = square_free_part(p);
    if sqf.degree() == Some(0) {
        return Ok(0);
    }
    Ok(SturmSequence::new(&sqf).count(lo, hi))
}

/// Exact certification that every root of `p` is real.
pub fn is_real_rooted(p: &IntPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sqf = square_free_part(p);
    let degree = sqf.degree().unwrap_or(0);
    if degree == 0 {
        return Ok(true);
    }
    Ok(SturmSequence::new(&sqf).count(&Bound::NegInf, &Bound::PosInf) == degree)
}

fn cauchy_bound(p: &IntPoly) -> BigRational {
    let lead = p.leading_coeff().expect("nonzero").abs();
    let max = p.coeffs().iter().map(Signed::abs).max().unwrap_or_default();
    BigRational::from_integer(BigInt::from(2)) + BigRational::new(max, lead)
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

/// Isolates the distinct real roots of `p` in ascending order.
///
/// Rational roots are always reported exactly (`lo == hi`): intervals are
/// narrowed below `1/|lc|` of the square-free part, where at most one
/// candidate `k/|lc|` remains to test.
pub fn isolate_real_roots(p: &IntPoly) -> Result<Vec<RealRoot>> {
    let factors = square_free_decomposition(p)?;
    let sqf = square_free_part(p);
    if sqf.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let seq = SturmSequence::new(&sqf);
    let bound = cauchy_bound(&sqf);
    let mut pending = vec![(-bound.clone(), bound)];
    let mut isolated = Vec::new();
    while let Some((lo, hi)) = pending.pop() {
        match seq.count_finite(&lo, &hi) {
            0 => {}
            1 => isolated.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) * half();
                // upper half first so that popping yields ascending order
                pending.push((mid.clone(), hi));
                pending.push((lo, mid));
            }
        }
    }
    let lead = BigRational::from_integer(sqf.leading_coeff().expect("nonzero").abs());
    let grid = BigRational::one() / &lead;
    let zero = BigRational::zero();
    let mut roots = Vec::with_capacity(isolated.len());
    for (mut lo, mut hi) in isolated {
        let mut exact = None;
        if sqf.evaluate(&hi) == zero {
            exact = Some(hi.clone());
        }
        while exact.is_none() && &hi - &lo >= grid {
            let mid = (&lo + &hi) * half();
            if sqf.evaluate(&mid) == zero {
                exact = Some(mid);
            } else if seq.count_finite(&lo, &mid) == 1 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        if exact.is_none() {
            let candidate = ((&lo * &lead).floor() + BigRational::one()) / &lead;
            if candidate <= hi && sqf.evaluate(&candidate) == zero {
                exact = Some(candidate);
            }
        }
        if let Some(r) = exact {
            lo = r.clone();
            hi = r;
        }
        let multiplicity = factors
            .iter()
            .find(|(f, _)| {
                if lo == hi {
                    f.evaluate(&lo).is_zero()
                } else {
                    f.degree().unwrap_or(0) > 0 && SturmSequence::new(f).count_finite(&lo, &hi) == 1
                }
            })
            .map(|&(_, m)| m)
            .expect("each root of the square-free part belongs to one factor");
        roots.push(RealRoot { lo, hi, multiplicity });
    }
    Ok(roots)
}

/// Narrows an isolating interval `(lo, hi]` of `p` by bisection until its
/// width is below `tol` and returns the midpoint (or the root itself when
/// a bisection point hits it).
pub fn refine_root(p: &IntPoly, lo: &BigRational, hi: &BigRational, tol: &BigRational) -> Result<BigRational> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo == hi {
        return if p.evaluate(lo).is_zero() {
            Ok(lo.clone())
        } else {
            Err(Error::NotIsolating { lo: lo.to_string(), hi: hi.to_string(), count: 0 })
        };
    }
    if !tol.is_positive() {
        return Err(Error::Parse("tolerance must be positive".into()));
    }
    let sqf = square_free_part(p);
    let count = if sqf.degree().unwrap_or(0) == 0 {
        0
    } else {
        SturmSequence::new(&sqf).count_finite(lo, hi)
    };
    if lo > hi || count != 1 {
        return Err(Error::NotIsolating { lo: lo.to_string(), hi: hi.to_string(), count });
    }
    let seq = SturmSequence::new(&sqf);
    let (mut lo, mut hi) = (lo.clone(), hi.clone());
    if sqf.evaluate(&hi).is_zero() {
        return Ok(hi);
    }
    while &hi - &lo >= *tol {
        let mid = (&lo + &hi) * half();
        if sqf.evaluate(&mid).is_zero() {
            return Ok(mid);
        }
        if seq.count_finite(&lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok((lo + hi) * half())
}
