use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Integer polynomial, coefficients lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::from_i64s(&[1])
    }

    /// `x − r`.
    pub fn linear(r: i64) -> Self {
        IntPolynomial::from_i64s(&[-r, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(IntPolynomial::one(), |acc, _| acc.mul(self))
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        IntPolynomial::new((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        IntPolynomial::new((0..len).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IntPolynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        IntPolynomial::new(
            self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect(),
        )
    }

    /// `p(x + s)`.
    pub fn shift(&self, s: i64) -> Self {
        let mut c = self.coeffs.clone();
        let s = BigInt::from(s);
        let n = c.len();
        // Repeated synthetic division by (x − (−s)) yields the Taylor coefficients at s.
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &c[j + 1] * &s;
                c[j] += t;
            }
        }
        IntPolynomial::new(c)
    }

    /// `p(−x)`.
    pub fn reflect(&self) -> Self {
        IntPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Gcd of the coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        use num_integer::Integer;
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        IntPolynomial::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Pseudo-remainder of `self` by `d`.
    fn pseudo_rem(&self, d: &Self) -> Self {
        assert!(!d.is_zero());
        let mut r = self.clone();
        let lc = d.leading();
        while !r.is_zero() && r.degree() >= d.degree() {
            let shift = r.degree() - d.degree();
            let lr = r.leading();
            let mut t = vec![BigInt::zero(); shift];
            t.extend(d.coeffs.iter().map(|c| c * &lr));
            r = r.scale(&lc).sub(&IntPolynomial::new(t));
        }
        r
    }

    /// Primitive gcd over Q, normalized to positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a.primitive()
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide over Z.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        use num_integer::Integer;
        assert!(!d.is_zero());
        if self.is_zero() {
            return Some(IntPolynomial::zero());
        }
        if self.degree() < d.degree() {
            return None;
        }
        let mut r = self.coeffs.clone();
        let lc = d.leading();
        let dn = d.degree();
        let mut q = vec![BigInt::zero(); self.degree() - dn + 1];
        for k in (0..q.len()).rev() {
            let (qk, rem) = r[k + dn].div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                r[k + j] -= &qk * c;
            }
            q[k] = qk;
        }
        r.iter().all(|c| c.is_zero()).then(|| IntPolynomial::new(q))
    }

    /// Yun's square-free decomposition: `[(f_1, 1), (f_2, 2), ...]` with each
    /// `f_i` primitive and square-free and `self = c · Π f_i^i`.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPolynomial, u32)> {
        let mut out = Vec::new();
        if self.degree() == 0 {
            return out;
        }
        let a = self.primitive();
        let b = a.derivative();
        let c = a.gcd(&b);
        let mut w = a.div_exact(&c).expect("gcd divides");
        // c is primitive and divides b over Q, so b / c has integer coefficients.
        let mut y = b.div_exact(&c).expect("gcd divides derivative");
        let mut i = 1;
        while w.degree() > 0 {
            let z = y.sub(&w.derivative());
            let g = w.gcd(&z);
            if g.degree() > 0 {
                out.push((g.clone(), i));
            }
            w = w.div_exact(&g).expect("gcd divides");
            y = z.div_exact(&g).expect("gcd divides");
            i += 1;
        }
        out
    }

    /// `z^n · p(z + 1/z)` for `p` of degree `n`.
    pub fn reciprocal(&self) -> Self {
        let n = self.degree();
        let z2p1 = IntPolynomial::from_i64s(&[1, 0, 1]);
        let mut acc = IntPolynomial::zero();
        let mut pow = IntPolynomial::one();
        for (k, c) in self.coeffs.iter().enumerate() {
            // c · z^(n−k) · (z² + 1)^k
            let mut term = vec![BigInt::zero(); n - k];
            term.extend(pow.coeffs.iter().map(|x| x * c));
            acc = acc.add(&IntPolynomial::new(term));
            pow = pow.mul(&z2p1);
        }
        acc
    }

    /// Coefficients as f64 (lossy beyond 2^53).
    pub fn to_f64s(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

/// Coefficients serialize as JSON numbers when they fit in i64, else as strings.
impl Serialize for IntPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let vals: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .map(|c| match c.to_i64() {
                Some(v) => serde_json::Value::from(v),
                None => serde_json::Value::from(c.to_string()),
            })
            .collect();
        vals.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let vals: Vec<serde_json::Value> = Vec::deserialize(d)?;
        let coeffs = vals
            .into_iter()
            .map(|v| match v {
                serde_json::Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| D::Error::custom("non-integer coefficient")),
                serde_json::Value::String(s) => s.parse().map_err(D::Error::custom),
                _ => Err(D::Error::custom("coefficient must be a number or string")),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPolynomial::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn display() {
        assert_eq!(p(&[16, 0, -8, 0, 1]).to_string(), "x^4 - 8*x^2 + 16");
        assert_eq!(p(&[-1, 1]).to_string(), "x - 1");
        assert_eq!(p(&[0, -2, 0, -1]).to_string(), "-x^3 - 2*x");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(p(&[0, 1]).reciprocal(), p(&[1, 0, 1]));
        assert_eq!(p(&[-4, 0, 1]).reciprocal(), p(&[1, 0, -2, 0, 1]));
        assert_eq!(p(&[-1, 1]).reciprocal(), p(&[1, -1, 1]));
    }

    #[test]
    fn shift_and_reflect() {
        // (x−2)² shifted by 2 is x².
        assert_eq!(p(&[4, -4, 1]).shift(2), p(&[0, 0, 1]));
        assert_eq!(p(&[1, 2, 3]).reflect(), p(&[1, -2, 3]));
    }

    #[test]
    fn squarefree_decomposition_example() {
        // (x−1)(x+2)²(x²+1)³
        let f = p(&[-1, 1]).mul(&p(&[2, 1]).pow(2)).mul(&p(&[1, 0, 1]).pow(3));
        let d = f.squarefree_decomposition();
        assert_eq!(d, vec![(p(&[-1, 1]), 1), (p(&[2, 1]), 2), (p(&[1, 0, 1]), 3)]);
    }

    #[test]
    fn serde_round_trip() {
        let big = IntPolynomial::new(vec![BigInt::from(i64::MAX) * 4, BigInt::from(-3), BigInt::one()]);
        let s = serde_json::to_string(&big).unwrap();
        assert!(s.starts_with("[\"36893488147419103228\",-3,1]"));
        let back: IntPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, big);
    }

    fn poly_strategy() -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-6i64..=6, 1..6).prop_map(|c| IntPolynomial::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn shift_matches_evaluation(f in poly_strategy(), s in -4i64..=4, x in -5i64..=5) {
            let lhs = f.shift(s).eval(&BigInt::from(x));
            let rhs = f.eval(&BigInt::from(x + s));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn exact_division_recovers_factor(f in poly_strategy(), g in poly_strategy()) {
            prop_assume!(!g.is_zero() && !f.is_zero());
            prop_assert_eq!(f.mul(&g).div_exact(&g), Some(f.clone()));
        }

        #[test]
        fn squarefree_product_recovers_primitive(f in poly_strategy(), g in poly_strategy()) {
            let h = f.mul(&g).mul(&g);
            prop_assume!(h.degree() > 0);
            let rebuilt = h
                .squarefree_decomposition()
                .into_iter()
                .fold(IntPolynomial::one(), |acc, (q, i)| acc.mul(&q.pow(i)));
            prop_assert_eq!(rebuilt.primitive(), h.primitive());
        }
    }
}
