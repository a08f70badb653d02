//! Fraction-free determinants over the ring and exact interpolation of the
//! characteristic polynomial. Generic over the coefficient type so the hot path
//! can run in checked `i128` and fall back to `BigInt` on overflow.

use num_bigint::BigInt;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Zero};

use crate::lgraph::LGraph;
use crate::ring::{RingElement, RingId};

pub(crate) trait Coef:
    Clone + Zero + One + PartialEq + PartialOrd + From<i64> + CheckedAdd + CheckedSub + CheckedMul + CheckedDiv
{
    fn is_divisible_by(&self, d: &Self) -> bool;
}

impl Coef for i128 {
    fn is_divisible_by(&self, d: &Self) -> bool {
        self.checked_rem(*d) == Some(0)
    }
}

impl Coef for BigInt {
    fn is_divisible_by(&self, d: &Self) -> bool {
        (self % d).is_zero()
    }
}

/// Dense Hermitian matrix over the ring, entries as `(a, b)` coordinates.
#[derive(Clone, Debug)]
pub(crate) struct QMatrix {
    pub ring: RingId,
    pub n: usize,
    pub data: Vec<(i64, i64)>,
}

impl QMatrix {
    pub fn from_graph(g: &LGraph) -> Self {
        let n = g.n();
        let mut data = vec![(0, 0); n * n];
        for (v, &c) in g.charges().iter().enumerate() {
            data[v * n + v] = (c as i64, 0);
        }
        for (i, j, x) in g.edges() {
            let y = x.conj();
            data[i * n + j] = (x.a, x.b);
            data[j * n + i] = (y.a, y.b);
        }
        QMatrix { ring: g.ring(), n, data }
    }

    /// The matrix with one vertex appended; `column[i]` is the entry `(i, n)`.
    pub fn with_vertex(&self, charge: i8, column: &[RingElement]) -> QMatrix {
        let n = self.n;
        let m = n + 1;
        let mut data = vec![(0, 0); m * m];
        for i in 0..n {
            data[i * m..i * m + n].copy_from_slice(&self.data[i * n..i * n + n]);
            let x = column[i];
            let y = x.conj();
            data[i * m + n] = (x.a, x.b);
            data[n * m + i] = (y.a, y.b);
        }
        data[n * m + n] = (charge as i64, 0);
        QMatrix { ring: self.ring, n: m, data }
    }
}

#[derive(Clone, Debug, PartialEq)]
struct Q<T> {
    a: T,
    b: T,
}

struct Arith<T> {
    t: T,
    nn: T,
}

impl<T: Coef> Arith<T> {
    fn new(ring: RingId) -> Self {
        Arith { t: T::from(ring.trace_omega()), nn: T::from(ring.norm_omega()) }
    }

    fn is_zero(x: &Q<T>) -> bool {
        x.a.is_zero() && x.b.is_zero()
    }

    fn mul(&self, x: &Q<T>, y: &Q<T>) -> Option<Q<T>> {
        let ac = x.a.checked_mul(&y.a)?;
        let be = x.b.checked_mul(&y.b)?;
        let a = ac.checked_sub(&self.nn.checked_mul(&be)?)?;
        let b = x
            .a
            .checked_mul(&y.b)?
            .checked_add(&x.b.checked_mul(&y.a)?)?
            .checked_add(&self.t.checked_mul(&be)?)?;
        Some(Q { a, b })
    }

    fn sub(x: &Q<T>, y: &Q<T>) -> Option<Q<T>> {
        Some(Q { a: x.a.checked_sub(&y.a)?, b: x.b.checked_sub(&y.b)? })
    }

    fn conj(&self, x: &Q<T>) -> Option<Q<T>> {
        Some(Q { a: x.a.checked_add(&self.t.checked_mul(&x.b)?)?, b: T::zero().checked_sub(&x.b)? })
    }

    fn norm(&self, x: &Q<T>) -> Option<T> {
        let p = self.mul(x, &self.conj(x)?)?;
        debug_assert!(p.b.is_zero());
        Some(p.a)
    }

    /// Exact quotient; panics if `y` does not divide `x`, which would mean the
    /// elimination is broken.
    fn div_exact(&self, x: &Q<T>, y: &Q<T>) -> Option<Q<T>> {
        let n = self.norm(y)?;
        let p = self.mul(x, &self.conj(y)?)?;
        assert!(
            p.a.is_divisible_by(&n) && p.b.is_divisible_by(&n),
            "inexact division in fraction-free elimination"
        );
        Some(Q { a: p.a.checked_div(&n)?, b: p.b.checked_div(&n)? })
    }
}

/// `det(kI − M)` by Bareiss elimination. `None` on overflow of `T`.
fn det_shifted<T: Coef>(m: &QMatrix, k: i64, ar: &Arith<T>) -> Option<T> {
    let n = m.n;
    let mut a: Vec<Q<T>> = m
        .data
        .iter()
        .enumerate()
        .map(|(idx, &(x, y))| {
            let diag = if idx / n == idx % n { k } else { 0 };
            Q { a: T::from(diag - x), b: T::from(-y) }
        })
        .collect();
    let mut prev = Q { a: T::one(), b: T::zero() };
    let mut negate = false;
    for p in 0..n.saturating_sub(1) {
        if Arith::is_zero(&a[p * n + p]) {
            let Some(r) = (p + 1..n).find(|&r| !Arith::is_zero(&a[r * n + p])) else {
                return Some(T::zero());
            };
            for c in 0..n {
                a.swap(p * n + c, r * n + c);
            }
            negate = !negate;
        }
        let piv = a[p * n + p].clone();
        for i in p + 1..n {
            let lead = a[i * n + p].clone();
            for j in p + 1..n {
                let num = Arith::sub(&ar.mul(&a[i * n + j], &piv)?, &ar.mul(&lead, &a[p * n + j])?)?;
                a[i * n + j] = ar.div_exact(&num, &prev)?;
            }
            a[i * n + p] = Q { a: T::zero(), b: T::zero() };
        }
        prev = piv;
    }
    let d = a[n * n - 1].clone();
    assert!(d.b.is_zero(), "determinant of a Hermitian matrix must be rational");
    if negate {
        T::zero().checked_sub(&d.a)
    } else {
        Some(d.a)
    }
}

/// Coefficients (low to high) of `det(xI − M)`, from its values at 0..=n via
/// Newton forward differences. `None` on overflow of `T`.
pub(crate) fn char_poly_coeffs<T: Coef>(m: &QMatrix) -> Option<Vec<T>> {
    let n = m.n;
    let ar = Arith::<T>::new(m.ring);
    let mut diffs = Vec::with_capacity(n + 1);
    for k in 0..=n {
        diffs.push(det_shifted(m, k as i64, &ar)?);
    }
    // After this loop diffs[j] = Δ^j p(0).
    for j in 1..=n {
        for i in (j..=n).rev() {
            diffs[i] = diffs[i].checked_sub(&diffs[i - 1])?;
        }
    }
    // p(x) = Σ_j (Δ^j p(0) / j!) · x(x−1)…(x−j+1); the quotients are integers
    // because p has integer coefficients.
    let mut coeffs = vec![T::zero(); n + 1];
    let mut falling = vec![T::one()];
    let mut fact = T::one();
    for (j, dj) in diffs.iter().enumerate() {
        if j > 0 {
            fact = fact.checked_mul(&T::from(j as i64))?;
            let mut next = vec![T::zero(); falling.len() + 1];
            let shift = T::from(j as i64 - 1);
            for (i, c) in falling.iter().enumerate() {
                next[i + 1] = next[i + 1].checked_add(c)?;
                next[i] = next[i].checked_sub(&c.checked_mul(&shift)?)?;
            }
            falling = next;
        }
        assert!(dj.is_divisible_by(&fact), "non-integral characteristic polynomial coefficient");
        let bj = dj.checked_div(&fact)?;
        for (i, c) in falling.iter().enumerate() {
            coeffs[i] = coeffs[i].checked_add(&bj.checked_mul(c)?)?;
        }
    }
    assert!(coeffs[n] == T::one(), "characteristic polynomial must be monic");
    Some(coeffs)
}

/// Coefficients of `p(x + s)`.
pub(crate) fn shift_coeffs<T: Coef>(c: &[T], s: i64) -> Option<Vec<T>> {
    let mut c = c.to_vec();
    let s = T::from(s);
    let n = c.len();
    for i in 0..n {
        for j in (i..n.saturating_sub(1)).rev() {
            let t = c[j + 1].checked_mul(&s)?;
            c[j] = c[j].checked_add(&t)?;
        }
    }
    Some(c)
}

/// Exact test that all eigenvalues lie in [−2, 2], given `p = det(xI − M)`.
///
/// `p(x + 2) = Π(x + 2 − λ)` has only nonnegative coefficients iff every
/// `λ ≤ 2` (the roots are real), and `(−1)^n p(−x − 2) = Π(x + 2 + λ)` likewise
/// iff every `λ ≥ −2`.
pub(crate) fn cyclotomic_from_coeffs<T: Coef>(p: &[T]) -> Option<bool> {
    let upper = shift_coeffs(p, 2)?;
    if upper.iter().any(|c| *c < T::zero()) {
        return Some(false);
    }
    let n = p.len() - 1;
    let mut neg = Vec::with_capacity(p.len());
    for (k, c) in p.iter().enumerate() {
        neg.push(if (n - k) % 2 == 1 { T::zero().checked_sub(c)? } else { c.clone() });
    }
    let lower = shift_coeffs(&neg, 2)?;
    Some(lower.iter().all(|c| *c >= T::zero()))
}

pub(crate) fn is_cyclotomic_matrix(m: &QMatrix) -> bool {
    if let Some(r) = char_poly_coeffs::<i128>(m).and_then(|c| cyclotomic_from_coeffs(&c)) {
        return r;
    }
    let c = char_poly_coeffs::<BigInt>(m).expect("BigInt arithmetic does not overflow");
    cyclotomic_from_coeffs(&c).expect("BigInt arithmetic does not overflow")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qm(ring: RingId, n: usize, data: &[(i64, i64)]) -> QMatrix {
        QMatrix { ring, n, data: data.to_vec() }
    }

    #[test]
    fn bigint_and_i128_paths_agree() {
        let r = RingId::NEG7;
        // [[1, ω], [ω̄, −1]] with ω̄ = 1 − ω
        let m = qm(r, 2, &[(1, 0), (0, 1), (1, -1), (-1, 0)]);
        let a = char_poly_coeffs::<i128>(&m).unwrap();
        let b = char_poly_coeffs::<BigInt>(&m).unwrap();
        assert_eq!(a, vec![-3, 0, 1]);
        assert_eq!(b, a.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>());
    }

    #[test]
    fn zero_pivot_requires_row_swap() {
        let r = RingId::NEG2;
        // [[0,1,0],[1,0,1],[0,1,0]]: x³ − 2x
        let m = qm(r, 3, &[(0, 0), (1, 0), (0, 0), (1, 0), (0, 0), (1, 0), (0, 0), (1, 0), (0, 0)]);
        assert_eq!(char_poly_coeffs::<i128>(&m).unwrap(), vec![0, -2, 0, 1]);
    }

    #[test]
    fn overflow_reports_none_for_small_type() {
        // Interpolation with i128 overflows long before BigInt would; just check
        // that a big uniform matrix still gives a consistent answer on both paths.
        let r = RingId::NEG2;
        let n = 16;
        let data: Vec<_> = (0..n * n).map(|i| if i / n == i % n { (0, 0) } else { (1, 0) }).collect();
        let m = qm(r, n, &data);
        let big = char_poly_coeffs::<BigInt>(&m).unwrap();
        if let Some(small) = char_poly_coeffs::<i128>(&m) {
            assert_eq!(big, small.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>());
        }
        // K_16 has eigenvalues 15 and −1 (×15).
        assert!(!is_cyclotomic_matrix(&m));
    }
}
