//! Points, the orientation predicate and canonical line keys.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::rational::{common_denominator, int, Rational};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Self::new(int(x), int(y))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    pub fn sign(self) -> i8 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }
}

/// Sign of the cross product `(q - p) x (r - p)`, computed exactly.
pub fn orient(p: &Point, q: &Point, r: &Point) -> Orientation {
    let det = (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x);
    if det.is_zero() {
        Orientation::Collinear
    } else if det.is_positive() {
        Orientation::CounterClockwise
    } else {
        Orientation::Clockwise
    }
}

/// Canonical integer form `a x + b y + c = 0` of a line.
///
/// Coefficients are coprime and the leading nonzero coefficient among
/// `(a, b)` is positive, so coincident lines always compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LineKey {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl LineKey {
    /// Normalizes arbitrary rational coefficients. `(a, b)` must not both be zero.
    fn from_rational(a: &Rational, b: &Rational, c: &Rational) -> Self {
        let den = common_denominator([a, b, c]);
        let scale = |q: &Rational| q.numer() * (&den / q.denom());
        let (mut a, mut b, mut c) = (scale(a), scale(b), scale(c));
        let g = a.gcd(&b).gcd(&c);
        a /= &g;
        b /= &g;
        c /= &g;
        if a.is_negative() || (a.is_zero() && b.is_negative()) {
            a = -a;
            b = -b;
            c = -c;
        }
        Self { a, b, c }
    }

    /// Whether `p` satisfies the line equation.
    pub fn contains(&self, p: &Point) -> bool {
        (int(self.a.clone()) * &p.x + int(self.b.clone()) * &p.y + int(self.c.clone())).is_zero()
    }
}

impl fmt::Display for LineKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// The normalized key of the unique line through two distinct points.
pub fn line_through(p: &Point, q: &Point) -> Result<LineKey> {
    if p == q {
        return Err(Error::IdenticalPoints);
    }
    let a = &q.y - &p.y;
    let b = &p.x - &q.x;
    let c = &q.x * &p.y - &p.x * &q.y;
    Ok(LineKey::from_rational(&a, &b, &c))
}
