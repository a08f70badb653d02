//! Characteristic polynomials, the exact cyclotomicity test, reciprocal
//! polynomials and Mahler measure.

mod det;
mod mahler;
mod poly;

pub use mahler::mahler_measure;
pub use poly::IntPolynomial;

pub(crate) use det::{is_cyclotomic_matrix, QMatrix};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::lgraph::LGraph;

/// `det(xI − M)`, exact.
pub fn char_poly(g: &LGraph) -> IntPolynomial {
    let m = QMatrix::from_graph(g);
    if let Some(c) = det::char_poly_coeffs::<i128>(&m) {
        return IntPolynomial::new(c.into_iter().map(BigInt::from).collect());
    }
    IntPolynomial::new(det::char_poly_coeffs::<BigInt>(&m).expect("BigInt arithmetic does not overflow"))
}

/// Whether every eigenvalue of the graph's matrix lies in [−2, 2]. Exact.
pub fn is_cyclotomic(g: &LGraph) -> bool {
    is_cyclotomic_matrix(&QMatrix::from_graph(g))
}

/// Same test on a precomputed characteristic polynomial.
pub fn is_cyclotomic_poly(p: &IntPolynomial) -> bool {
    let upper = p.shift(2);
    let lower = if p.degree() % 2 == 1 { p.reflect().scale(&BigInt::from(-1)) } else { p.reflect() }.shift(2);
    upper.coeffs().iter().chain(lower.coeffs()).all(|c| *c >= BigInt::zero())
}

/// Multiplicity of `r` as a root of `p`.
pub fn root_multiplicity(p: &IntPolynomial, r: i64) -> usize {
    if p.is_zero() {
        return 0;
    }
    p.shift(r).coeffs().iter().take_while(|c| c.is_zero()).count()
}

/// Whether the characteristic polynomial is `(x − 2)^a (x + 2)^b`.
pub fn eigenvalues_all_pm2(g: &LGraph) -> bool {
    let p = char_poly(g);
    root_multiplicity(&p, 2) + root_multiplicity(&p, -2) == g.n()
}

/// `z^n · p(z + 1/z)`.
pub fn reciprocal_poly(p: &IntPolynomial) -> IntPolynomial {
    p.reciprocal()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{c2k2plus, sporadic, t2k4};
    use crate::ring::RingId;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn char_poly_examples() {
        let r = RingId::NEG2;
        assert_eq!(char_poly(&sporadic("S_2", r).unwrap()), p(&[-4, 0, 1]));
        assert_eq!(char_poly(&LGraph::vertex(r, 1)), p(&[-1, 1]));
        assert_eq!(char_poly(&t2k4(2, r, false).unwrap()), p(&[16, 0, -8, 0, 1]));
        // (x−2)²(x+2)
        assert_eq!(char_poly(&c2k2plus(1, RingId::NEG7).unwrap()), p(&[8, -4, -2, 1]));
    }

    #[test]
    fn cyclotomic_examples() {
        assert!(is_cyclotomic(&sporadic("S_8*", RingId::NEG2).unwrap()));
        assert!(is_cyclotomic(&LGraph::vertex(RingId::NEG2, 1)));
        let r = RingId::NEG7;
        let k3 = LGraph::new(r, vec![0; 3], [(0, 1, r.one()), (1, 2, r.one()), (0, 2, r.one())]).unwrap();
        assert!(is_cyclotomic(&k3));
        let k4 = LGraph::new(r, vec![0; 4], (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j, r.one())))).unwrap();
        assert!(!is_cyclotomic(&k4)); // eigenvalue 3
    }

    #[test]
    fn all_pm2_examples() {
        assert!(eigenvalues_all_pm2(&t2k4(3, RingId::NEG2, false).unwrap()));
        assert!(!eigenvalues_all_pm2(&LGraph::vertex(RingId::NEG2, 0)));
        assert!(eigenvalues_all_pm2(&c2k2plus(1, RingId::NEG7).unwrap()));
        assert!(eigenvalues_all_pm2(&t2k4(5, RingId::NEG7, true).unwrap()));
    }

    #[test]
    fn poly_test_agrees_with_matrix_test() {
        for r in [RingId::NEG2, RingId::NEG7] {
            for g in [sporadic("S_4", r).unwrap(), t2k4(4, r, false).unwrap(), LGraph::vertex(r, -1)] {
                assert_eq!(is_cyclotomic(&g), is_cyclotomic_poly(&char_poly(&g)));
            }
        }
        assert!(!is_cyclotomic_poly(&p(&[-5, 0, 1])));
    }

    #[test]
    fn disconnected_char_poly_is_product() {
        let r = RingId::NEG7;
        let a = sporadic("S_6†", r).unwrap();
        let b = c2k2plus(2, r).unwrap();
        let u = a.disjoint_union(&b).unwrap();
        assert_eq!(char_poly(&u), char_poly(&a).mul(&char_poly(&b)));
    }

    #[test]
    fn reciprocal_of_cyclotomic_has_measure_one() {
        for r in [RingId::NEG2, RingId::NEG7] {
            let g = t2k4(4, r, false).unwrap();
            let m = mahler_measure(&reciprocal_poly(&char_poly(&g)));
            assert!((m - 1.0).abs() < 1e-9);
        }
        let k4 = LGraph::new(RingId::NEG2, vec![0; 4], (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j, RingId::NEG2.one())))).unwrap();
        assert!(mahler_measure(&reciprocal_poly(&char_poly(&k4))) > 1.5);
    }
}
