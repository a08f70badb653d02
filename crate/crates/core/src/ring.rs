//! Arithmetic in the imaginary quadratic rings O_Q(√d), d ∈ {−2, −7, −11, −15}.
//!
//! Elements are stored as integer coordinates `(a, b)` over the basis `{1, ω}`,
//! with `ω = √−2` for d = −2 and `ω = (1+√d)/2` otherwise. `ω` satisfies
//! `ω² = tω − N` where `t = ω + ω̄` and `N = ωω̄`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One of the four supported rings, identified by `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub struct RingId(i8);

impl RingId {
    pub const NEG2: RingId = RingId(-2);
    pub const NEG7: RingId = RingId(-7);
    pub const NEG11: RingId = RingId(-11);
    pub const NEG15: RingId = RingId(-15);
    pub const ALL: [RingId; 4] = [Self::NEG2, Self::NEG7, Self::NEG11, Self::NEG15];

    pub fn new(d: i64) -> Result<Self> {
        match d {
            -2 | -7 | -11 | -15 => Ok(RingId(d as i8)),
            _ => Err(Error::UnsupportedRing(d)),
        }
    }

    pub fn d(self) -> i64 {
        self.0 as i64
    }

    /// Trace of ω.
    pub fn trace_omega(self) -> i64 {
        if self.0 == -2 {
            0
        } else {
            1
        }
    }

    /// Norm of ω.
    pub fn norm_omega(self) -> i64 {
        if self.0 == -2 {
            2
        } else {
            (1 - self.d()) / 4
        }
    }

    pub fn zero(self) -> RingElement {
        RingElement::new(self, 0, 0)
    }

    pub fn one(self) -> RingElement {
        RingElement::new(self, 1, 0)
    }

    pub fn int(self, a: i64) -> RingElement {
        RingElement::new(self, a, 0)
    }

    pub fn omega(self) -> RingElement {
        RingElement::new(self, 0, 1)
    }

    pub fn elem(self, a: i64, b: i64) -> RingElement {
        RingElement::new(self, a, b)
    }

    /// Legend for the `w` in rendered labels.
    pub fn legend(self) -> String {
        if self.0 == -2 {
            "w = sqrt(-2)".to_string()
        } else {
            format!("w = (1+sqrt({}))/2", self.0)
        }
    }
}

impl TryFrom<i64> for RingId {
    type Error = Error;
    fn try_from(d: i64) -> Result<Self> {
        RingId::new(d)
    }
}

impl From<RingId> for i64 {
    fn from(r: RingId) -> i64 {
        r.d()
    }
}

impl fmt::Display for RingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d={}", self.0)
    }
}

/// `a + b·ω` in the ring `ring`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RingElement {
    pub ring: RingId,
    pub a: i64,
    pub b: i64,
}

/// Serialized as the coordinate pair `[a, b]`; the ring travels separately.
impl Serialize for RingElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.a, self.b].serialize(s)
    }
}

impl RingElement {
    pub fn new(ring: RingId, a: i64, b: i64) -> Self {
        RingElement { ring, a, b }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// `x·x̄`, always a nonnegative integer.
    pub fn norm(&self) -> i64 {
        let (t, n) = (self.ring.trace_omega(), self.ring.norm_omega());
        self.a * self.a + t * self.a * self.b + n * self.b * self.b
    }

    pub fn conj(&self) -> Self {
        let t = self.ring.trace_omega();
        RingElement::new(self.ring, self.a + t * self.b, -self.b)
    }

    /// The rational integer value, if `b = 0`.
    pub fn as_int(&self) -> Option<i64> {
        (self.b == 0).then_some(self.a)
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        same_ring(self.ring, rhs.ring)?;
        Ok(RingElement::new(self.ring, self.a + rhs.a, self.b + rhs.b))
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        same_ring(self.ring, rhs.ring)?;
        Ok(RingElement::new(self.ring, self.a - rhs.a, self.b - rhs.b))
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        same_ring(self.ring, rhs.ring)?;
        let (t, n) = (self.ring.trace_omega(), self.ring.norm_omega());
        let (a, b, c, e) = (self.a, self.b, rhs.a, rhs.b);
        Ok(RingElement::new(
            self.ring,
            a * c - n * b * e,
            a * e + b * c + t * b * e,
        ))
    }

    /// Exact quotient, if `rhs` divides `self`.
    pub fn checked_div(self, rhs: Self) -> Result<Option<Self>> {
        same_ring(self.ring, rhs.ring)?;
        let n = rhs.norm();
        if n == 0 {
            return Ok(None);
        }
        let p = self.checked_mul(rhs.conj())?;
        if p.a % n != 0 || p.b % n != 0 {
            return Ok(None);
        }
        Ok(Some(RingElement::new(self.ring, p.a / n, p.b / n)))
    }

    /// Sort key: (norm, a, b).
    fn order_key(&self) -> (i64, i64, i64) {
        (self.norm(), self.a, self.b)
    }
}

fn same_ring(l: RingId, r: RingId) -> Result<()> {
    if l == r {
        Ok(())
    } else {
        Err(Error::RingMismatch { left: l.d(), right: r.d() })
    }
}

impl Add for RingElement {
    type Output = RingElement;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("mixed-ring addition")
    }
}

impl Sub for RingElement {
    type Output = RingElement;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs).expect("mixed-ring subtraction")
    }
}

impl Mul for RingElement {
    type Output = RingElement;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs).expect("mixed-ring multiplication")
    }
}

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> Self {
        RingElement::new(self.ring, -self.a, -self.b)
    }
}

impl PartialOrd for RingElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order: ring first, then lexicographic on (norm, a, b).
impl Ord for RingElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ring
            .cmp(&other.ring)
            .then_with(|| self.order_key().cmp(&other.order_key()))
    }
}

/// Renders as `a+b*w`, dropping zero parts and unit coefficients.
impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = match self.b {
            0 => String::new(),
            1 => "w".to_string(),
            -1 => "-w".to_string(),
            b => format!("{b}*w"),
        };
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, _) => write!(f, "{w}"),
            (a, b) if b > 0 => write!(f, "{a}+{w}"),
            (a, _) => write!(f, "{a}{w}"),
        }
    }
}

/// The label alphabet `L = {0} ∪ L_1 ∪ L_2 ∪ L_3 ∪ L_4` of a ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelSet {
    pub ring: RingId,
    by_norm: [Vec<RingElement>; 5],
}

impl LabelSet {
    /// Elements of norm `n` in increasing order.
    pub fn of_norm(&self, n: usize) -> &[RingElement] {
        self.by_norm.get(n).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// All nonzero labels, ordered by (norm, a, b).
    pub fn nonzero(&self) -> impl Iterator<Item = RingElement> + '_ {
        self.by_norm[1..].iter().flatten().copied()
    }

    /// Nonzero labels whose norm lies in `norms`.
    pub fn with_norms(&self, norms: &[u8]) -> Vec<RingElement> {
        self.nonzero()
            .filter(|x| norms.contains(&(x.norm() as u8)))
            .collect()
    }

    /// Norms `n ≥ 1` with `L_n` nonempty.
    pub fn present_norms(&self) -> Vec<u8> {
        (1..=4u8).filter(|&n| !self.by_norm[n as usize].is_empty()).collect()
    }

    pub fn contains(&self, x: &RingElement) -> bool {
        x.ring == self.ring && (x.is_zero() || self.of_norm(x.norm() as usize).contains(x))
    }
}

fn enumerate_labels(ring: RingId) -> LabelSet {
    // norm(a+bω) = (a + tb/2)² + b²(4N − t²)/4 with 4N − t² = |d|, so norm ≤ 4
    // forces b² ≤ 16/|d| and |a| ≤ 2 + |b|/2; the box [−3, 3]² covers every ring.
    let mut by_norm: [Vec<RingElement>; 5] = Default::default();
    for a in -3..=3 {
        for b in -3..=3 {
            let x = ring.elem(a, b);
            let n = x.norm();
            if n <= 4 {
                by_norm[n as usize].push(x);
            }
        }
    }
    for v in by_norm.iter_mut() {
        v.sort();
    }
    LabelSet { ring, by_norm }
}

/// The label set of `ring`, computed once and cached.
pub fn label_set(ring: RingId) -> &'static LabelSet {
    static CACHE: OnceLock<[LabelSet; 4]> = OnceLock::new();
    let all = CACHE.get_or_init(|| RingId::ALL.map(enumerate_labels));
    let idx = RingId::ALL.iter().position(|r| *r == ring).unwrap();
    &all[idx]
}
