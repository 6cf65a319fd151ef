//! Roots of complex polynomials.
//!
//! Coefficients are given highest power first. Degrees up to three use the
//! closed forms; higher degrees use Aberth–Ehrlich simultaneous iteration.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::linalg::{c, Complex};

pub const ABERTH_TOL: f64 = 1e-12;
pub const ABERTH_MAX_ITER: usize = 200;

/// All roots of `coeffs[0] z^d + coeffs[1] z^(d-1) + ... + coeffs[d]`.
///
/// The leading coefficient must be non-zero. Exact trailing zeros produce
/// exact roots at the origin.
pub fn roots(coeffs: &[Complex]) -> Result<Vec<Complex>> {
    let lead = *coeffs
        .first()
        .ok_or_else(|| Error::RootFinding("empty coefficient list".into()))?;
    if lead == c(0.0, 0.0) {
        return Err(Error::RootFinding("leading coefficient is zero".into()));
    }
    let mut end = coeffs.len();
    while end > 1 && coeffs[end - 1] == c(0.0, 0.0) {
        end -= 1;
    }
    let zeros = coeffs.len() - end;
    let monic: Vec<Complex> = coeffs[..end].iter().map(|&a| a / lead).collect();

    let mut found = match monic.len() - 1 {
        0 => Vec::new(),
        1 => vec![-monic[1]],
        2 => quadratic(monic[1], monic[2]),
        3 => polish(&monic, cubic(monic[1], monic[2], monic[3])),
        _ => aberth(&monic)?,
    };
    found.extend(std::iter::repeat_n(c(0.0, 0.0), zeros));
    Ok(found)
}

/// Horner evaluation of the polynomial and its derivative.
pub fn eval(coeffs: &[Complex], z: Complex) -> (Complex, Complex) {
    let mut p = c(0.0, 0.0);
    let mut dp = c(0.0, 0.0);
    for &a in coeffs {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// Roots of `z^2 + b z + c0`.
fn quadratic(b: Complex, c0: Complex) -> Vec<Complex> {
    let disc = (b * b - c0 * 4.0).sqrt();
    // pick the sign that avoids cancellation
    let q = if (b.conj() * disc).re >= 0.0 {
        -(b + disc) * 0.5
    } else {
        -(b - disc) * 0.5
    };
    if q == c(0.0, 0.0) {
        return vec![c(0.0, 0.0), c(0.0, 0.0)];
    }
    vec![q, c0 / q]
}

/// Roots of `z^3 + a2 z^2 + a1 z + a0` by Cardano's formula.
fn cubic(a2: Complex, a1: Complex, a0: Complex) -> Vec<Complex> {
    let shift = a2 / 3.0;
    let p = a1 - a2 * a2 / 3.0;
    let q = a2 * a2 * a2 * (2.0 / 27.0) - a2 * a1 / 3.0 + a0;

    let disc = (q * q / 4.0 + p * p * p / 27.0).sqrt();
    let u3a = -q / 2.0 + disc;
    let u3b = -q / 2.0 - disc;
    let u3 = if u3a.norm() >= u3b.norm() { u3a } else { u3b };

    let omega = Complex::from_polar(1.0, 2.0 * PI / 3.0);
    if u3.norm() == 0.0 {
        return vec![-shift; 3];
    }
    let u = u3.powf(1.0 / 3.0);
    let mut out = Vec::with_capacity(3);
    let mut w = c(1.0, 0.0);
    for _ in 0..3 {
        let uk = u * w;
        let vk = -p / (uk * 3.0);
        out.push(uk + vk - shift);
        w *= omega;
    }
    out
}

/// A few Newton steps, kept only when they reduce the residual.
fn polish(coeffs: &[Complex], mut zs: Vec<Complex>) -> Vec<Complex> {
    for z in zs.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = eval(coeffs, *z);
            if p.norm() == 0.0 || dp.norm() == 0.0 {
                break;
            }
            let next = *z - p / dp;
            if eval(coeffs, next).0.norm() < p.norm() {
                *z = next;
            } else {
                break;
            }
        }
    }
    zs
}

fn aberth(coeffs: &[Complex]) -> Result<Vec<Complex>> {
    let d = coeffs.len() - 1;
    // Fujiwara bound on root moduli
    let radius = (1..=d)
        .map(|k| coeffs[k].norm().powf(1.0 / k as f64))
        .fold(0.0, f64::max)
        * 2.0;
    let radius = if radius > 0.0 { radius } else { 1.0 };
    let mut zs: Vec<Complex> = (0..d)
        .map(|k| Complex::from_polar(radius, 2.0 * PI * k as f64 / d as f64 + 0.4))
        .collect();

    let magnitudes: Vec<f64> = coeffs.iter().map(|a| a.norm()).collect();
    let backward_bound = |z: Complex| -> f64 {
        let r = z.norm();
        magnitudes.iter().fold(0.0, |acc, &m| acc * r + m) * 8.0 * f64::EPSILON
    };

    for _ in 0..ABERTH_MAX_ITER {
        let mut max_step = 0.0_f64;
        let mut settled = true;
        for i in 0..d {
            let (p, dp) = eval(coeffs, zs[i]);
            if p.norm() <= backward_bound(zs[i]) {
                continue;
            }
            settled = false;
            let ratio = if dp.norm() == 0.0 { p } else { p / dp };
            let repulsion: Complex = (0..d)
                .filter(|&j| j != i)
                .map(|j| {
                    let diff = zs[i] - zs[j];
                    if diff.norm() == 0.0 {
                        c(0.0, 0.0)
                    } else {
                        diff.inv()
                    }
                })
                .sum();
            let step = ratio / (c(1.0, 0.0) - ratio * repulsion);
            if !(step.re.is_finite() && step.im.is_finite()) {
                return Err(Error::RootFinding("non-finite Aberth correction".into()));
            }
            zs[i] -= step;
            max_step = max_step.max(step.norm() / (1.0 + zs[i].norm()));
        }
        if settled || max_step <= ABERTH_TOL {
            return Ok(zs);
        }
    }
    Err(Error::RootFinding(format!(
        "Aberth iteration exceeded {ABERTH_MAX_ITER} iterations"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_roots(rs: &[Complex]) -> Vec<Complex> {
        let mut coeffs = vec![c(1.0, 0.0)];
        for &r in rs {
            let mut next = vec![c(0.0, 0.0); coeffs.len() + 1];
            for (k, &a) in coeffs.iter().enumerate() {
                next[k] += a;
                next[k + 1] -= a * r;
            }
            coeffs = next;
        }
        coeffs
    }

    fn matched(found: &[Complex], expected: &[Complex], tol: f64) -> bool {
        let mut used = vec![false; expected.len()];
        found.iter().all(|z| {
            match (0..expected.len()).filter(|&j| !used[j]).min_by(|&a, &b| {
                (z - expected[a])
                    .norm()
                    .total_cmp(&(z - expected[b]).norm())
            }) {
                Some(j) if (z - expected[j]).norm() < tol => {
                    used[j] = true;
                    true
                }
                _ => false,
            }
        })
    }

    #[test]
    fn cube_roots_of_unity() {
        let rs = roots(&[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)]).unwrap();
        let omega = Complex::from_polar(1.0, 2.0 * PI / 3.0);
        assert!(matched(&rs, &[c(1.0, 0.0), omega, omega * omega], 1e-14));
    }

    #[test]
    fn quadratic_and_linear() {
        let expected = [c(2.0, 1.0), c(-0.5, 3.0)];
        assert!(matched(
            &roots(&from_roots(&expected)).unwrap(),
            &expected,
            1e-13
        ));
        assert_eq!(
            roots(&[c(2.0, 0.0), c(-4.0, 0.0)]).unwrap(),
            vec![c(2.0, 0.0)]
        );
    }

    #[test]
    fn trailing_zeros_give_exact_zero_roots() {
        let rs = roots(&[c(1.0, 0.0), c(-0.5, 0.0), c(0.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert!(matched(
            &rs,
            &[c(0.5, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            1e-15
        ));
        assert_eq!(rs.iter().filter(|z| **z == c(0.0, 0.0)).count(), 2);
    }

    #[test]
    fn cubic_with_double_root() {
        let expected = [c(0.3, -0.2), c(0.3, -0.2), c(-1.1, 0.4)];
        assert!(matched(
            &roots(&from_roots(&expected)).unwrap(),
            &expected,
            1e-7
        ));
    }

    #[test]
    fn aberth_distinct_roots() {
        let expected = [
            c(1.0, 0.0),
            c(-2.0, 0.5),
            c(0.0, 3.0),
            c(0.25, -0.75),
            c(4.0, 4.0),
        ];
        assert!(matched(
            &roots(&from_roots(&expected)).unwrap(),
            &expected,
            1e-10
        ));
    }

    #[test]
    fn aberth_repeated_roots() {
        let expected = [
            c(0.5, 0.5),
            c(0.5, 0.5),
            c(-1.0, 0.0),
            c(-1.0, 0.0),
            c(2.0, 0.0),
        ];
        assert!(matched(
            &roots(&from_roots(&expected)).unwrap(),
            &expected,
            1e-6
        ));
    }

    #[test]
    fn rejects_zero_leading_coefficient() {
        assert!(roots(&[c(0.0, 0.0), c(1.0, 0.0)]).is_err());
        assert!(roots(&[]).is_err());
    }
}
