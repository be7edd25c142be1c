//! Numeric complex roots (Aberth–Ehrlich) and the unit-disk expansion.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::real::{is_real_rooted, isolate_real_roots, rat_to_f64, square_free_decomposition, RealRoot};
use super::shape::window;
use super::IntPoly;
use crate::error::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-12;
const MAX_ITERATIONS: usize = 1000;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComplexRoot {
    pub re: f64,
    pub im: f64,
    pub multiplicity: usize,
    /// `|p(z)| / |p'(z)|` for the square-free factor the root came from;
    /// zero for the exact root at the origin.
    pub residual: f64,
}

impl ComplexRoot {
    pub fn modulus(&self) -> f64 {
        self.re.hypot(self.im)
    }
}

/// Root analysis of one polynomial.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootReport {
    pub degree: usize,
    pub real_rooted: bool,
    pub certification: &'static str,
    pub real_roots: Vec<RealRoot>,
    pub complex_roots: Vec<ComplexRoot>,
    /// Largest `|z| + residual` over all roots.
    pub max_modulus: f64,
    pub converged: bool,
    pub iterations: usize,
}

impl RootReport {
    /// Every nonzero root satisfies `|z| <= 1 + margin`.
    pub fn nonzero_roots_within(&self, margin: f64) -> bool {
        self.complex_roots
            .iter()
            .filter(|z| z.re != 0.0 || z.im != 0.0)
            .all(|z| z.modulus() <= 1.0 + margin)
    }
}

fn to_f64_normalized(p: &IntPoly) -> Vec<f64> {
    let lead = p.leading_coeff().expect("nonzero").clone();
    p.coeffs()
        .iter()
        .map(|c| rat_to_f64(&BigRational::new(c.clone(), lead.clone())))
        .collect()
}

fn horner(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut value = Complex64::zero();
    let mut deriv = Complex64::zero();
    for &c in coeffs.iter().rev() {
        deriv = deriv * z + value;
        value = value * z + c;
    }
    (value, deriv)
}

/// Aberth–Ehrlich on a monic square-free polynomial with nonzero constant
/// term. Returns the approximations, their Newton residuals and the number
/// of iterations used.
fn aberth(coeffs: &[f64], tol: f64) -> (Vec<Complex64>, Vec<f64>, usize) {
    let degree = coeffs.len() - 1;
    let radius = 1.0 + coeffs[..degree].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let mut z: Vec<Complex64> = (0..degree)
        .map(|k| Complex64::from_polar(radius, std::f64::consts::TAU * k as f64 / degree as f64 + 0.4))
        .collect();
    let mut iterations = 0;
    while iterations < MAX_ITERATIONS {
        iterations += 1;
        let mut largest = 0.0f64;
        for k in 0..degree {
            let (value, deriv) = horner(coeffs, z[k]);
            if value.norm() == 0.0 {
                continue;
            }
            let newton = value / deriv;
            let repulsion: Complex64 = (0..degree)
                .filter(|&j| j != k)
                .map(|j| Complex64::one() / (z[k] - z[j]))
                .sum();
            let step = newton / (Complex64::one() - newton * repulsion);
            if step.is_finite() {
                z[k] -= step;
                largest = largest.max(step.norm());
            }
        }
        if largest < tol * 1e-2 {
            break;
        }
    }
    let residuals = z
        .iter()
        .map(|&zk| {
            let (value, deriv) = horner(coeffs, zk);
            if value.norm() == 0.0 {
                0.0
            } else {
                (value / deriv).norm()
            }
        })
        .collect();
    (z, residuals, iterations)
}

/// Exact real-root certification plus numeric approximations of every
/// root. The root at zero is split off exactly; each remaining
/// square-free factor is solved with Aberth–Ehrlich (at most 1000
/// iterations). Non-convergence is reported through `converged`.
pub fn complex_roots(p: &IntPoly, tol: f64) -> Result<RootReport> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Parse("tolerance must be positive".into()));
    }
    let degree = p.degree().expect("nonzero");
    let zero_mult = p.lowest_degree().expect("nonzero");
    let mut roots = Vec::new();
    if zero_mult > 0 {
        roots.push(ComplexRoot { re: 0.0, im: 0.0, multiplicity: zero_mult, residual: 0.0 });
    }
    let mut converged = true;
    let mut iterations = 0;
    for (factor, multiplicity) in square_free_decomposition(p)? {
        let factor = match factor.lowest_degree() {
            Some(0) => factor,
            Some(k) => factor.shift_down(k),
            None => unreachable!(),
        };
        if factor.degree().unwrap_or(0) == 0 {
            continue;
        }
        let coeffs = to_f64_normalized(&factor);
        let (approx, residuals, used) = aberth(&coeffs, tol);
        iterations = iterations.max(used);
        for (z, residual) in approx.into_iter().zip(residuals) {
            converged &= residual < tol;
            roots.push(ComplexRoot { re: z.re, im: z.im, multiplicity, residual });
        }
    }
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let max_modulus = roots.iter().map(|z| z.modulus() + z.residual).fold(0.0, f64::max);
    Ok(RootReport {
        degree,
        real_rooted: is_real_rooted(p)?,
        certification: "sturm",
        real_roots: isolate_real_roots(p)?,
        complex_roots: roots,
        max_modulus,
        converged,
        iterations,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UnitDiskExpansion {
    /// Smallest clique size making the scaled coefficient window nondecreasing.
    #[serde(serialize_with = "ser_display")]
    pub r: BigInt,
    pub scaled: IntPoly,
    pub report: RootReport,
    /// Whether every nonzero root satisfies `|z| <= 1 + tol`.
    pub within_unit_disk: bool,
}

fn ser_display<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Smallest `r >= 1` such that the window of `p(r x)` is nondecreasing, so
/// that all nonzero roots of `p(r x)` lie in the closed unit disk.
///
/// The window must not contain internal zeros.
pub fn min_expansion_for_unit_disk(p: &IntPoly, tol: f64) -> Result<UnitDiskExpansion> {
    let win = window(p)?;
    let low = p.lowest_degree().unwrap_or(0);
    if let Some(i) = win.iter().position(Zero::is_zero) {
        return Err(Error::InternalZero(low + i));
    }
    // r^(k+1) c_{k+1} >= r^k c_k  <=>  r >= c_k / c_{k+1}
    let mut r = BigInt::one();
    for pair in win.windows(2) {
        let need = BigRational::new(pair[0].clone(), pair[1].clone()).ceil().to_integer();
        if need > r {
            r = need;
        }
    }
    let scaled = p.scale_arg(&r);
    debug_assert!(window(&scaled)
        .unwrap()
        .windows(2)
        .all(|w| w[0] <= w[1] && w[0].is_positive()));
    let report = complex_roots(&scaled, tol)?;
    let within_unit_disk = report.nonzero_roots_within(tol);
    Ok(UnitDiskExpansion { r, scaled, report, within_unit_disk })
}
