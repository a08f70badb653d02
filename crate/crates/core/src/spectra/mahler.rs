//! Floating-point Mahler measure. Kept apart from every exact decision.

use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::IntPolynomial;

/// Complex roots of a square-free polynomial by Aberth–Ehrlich iteration.
fn roots_squarefree(p: &IntPolynomial) -> Vec<Complex64> {
    let n = p.degree();
    let c = p.to_f64s();
    let lead = c[n];
    // Cauchy bound on the root moduli.
    let radius = 1.0 + c[..n].iter().map(|a| (a / lead).abs()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius * 0.5 + 0.25, 0.4 + std::f64::consts::TAU * k as f64 / n as f64))
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (f, df) = horner(&c, z[i]);
            if f.norm() == 0.0 {
                continue;
            }
            let ratio = f / df;
            let repulsion: Complex64 = (0..n).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            z[i] -= step;
            moved = moved.max(step.norm() / z[i].norm().max(1.0));
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

fn horner(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut f = Complex64::new(0.0, 0.0);
    let mut df = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        df = df * z + f;
        f = f * z + a;
    }
    (f, df)
}

/// `|lead| · Π max(1, |α|)` over the complex roots `α` of `p`.
///
/// Repeated roots are split off exactly first (square-free decomposition), so
/// the numerical root finder only sees simple roots.
pub fn mahler_measure(p: &IntPolynomial) -> f64 {
    assert!(!p.is_zero(), "Mahler measure of the zero polynomial");
    // p = ±content · Π f_i^i with each f_i primitive, and M is multiplicative.
    let mut m = p.content().to_f64().unwrap_or(f64::INFINITY);
    if p.degree() == 0 {
        return m;
    }
    for (f, mult) in p.squarefree_decomposition() {
        let lead = f.leading().to_f64().unwrap_or(f64::INFINITY);
        let roots: f64 = roots_squarefree(&f).iter().map(|z| z.norm().max(1.0)).product();
        m *= (lead * roots).powi(mult as i32);
    }
    m
}
