//! Rigorous enclosures of the tails `sum_{i >= c} 1/i^2` and
//! `sum_{i >= c} (i+1)/i^3`.
//!
//! Terms `c..=cutoff` are summed exactly; the remainder is bracketed by the
//! integral test, `int_{M+1}^inf <= sum_{i > M} <= int_M^inf`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::One;

use crate::interval::Interval;
use crate::rational::{int, Rational};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    /// `1/i^2`
    InverseSquare,
    /// `(i+1)/i^3 = 1/i^2 + 1/i^3`
    SuccessorOverCube,
}

impl SeriesKind {
    fn power(self) -> u32 {
        match self {
            SeriesKind::InverseSquare => 2,
            SeriesKind::SuccessorOverCube => 3,
        }
    }

    fn numerator(self, i: u64) -> u64 {
        match self {
            SeriesKind::InverseSquare => 1,
            SeriesKind::SuccessorOverCube => i + 1,
        }
    }

    /// Bounds on `sum_{i > m}` of the term.
    fn remainder(self, m: u64) -> (Rational, Rational) {
        let (m, m1) = (int(m), int(m + 1));
        let sq = (m1.recip(), m.recip());
        match self {
            SeriesKind::InverseSquare => sq,
            SeriesKind::SuccessorOverCube => {
                let two = int(2);
                let cube_lo = (&two * &m1 * &m1).recip();
                let cube_hi = (&two * &m * &m).recip();
                (sq.0 + cube_lo, sq.1 + cube_hi)
            }
        }
    }
}

/// `lcm(from..=to)`.
fn lcm_range(from: u64, to: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in from..=to {
        let rem: u64 = (&acc % i)
            .try_into()
            .expect("remainder below a u64 modulus");
        let g = rem.gcd(&i);
        acc *= i / g;
    }
    acc
}

/// Exact `sum_{i=from}^{to}` of the term, over a common denominator so that
/// only one reduction happens.
fn exact_partial(kind: SeriesKind, from: u64, to: u64) -> Rational {
    if from > to {
        return int(0);
    }
    let den = lcm_range(from, to).pow(kind.power());
    let mut num = BigUint::ZERO;
    for i in from..=to {
        let ip = BigUint::from(i).pow(kind.power());
        num += (&den / ip) * kind.numerator(i);
    }
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn check_range(c: u64, cutoff: u64) -> Result<()> {
    if c < 1 {
        return Err(Error::Domain("series start must be at least 1".into()));
    }
    if cutoff < c {
        return Err(Error::InvalidCutoff { start: c, cutoff });
    }
    Ok(())
}

/// Enclosure of `sum_{i >= c}` with exact terms up to `cutoff`.
pub fn tail_sum(kind: SeriesKind, c: u64, cutoff: u64) -> Result<Interval> {
    check_range(c, cutoff)?;
    let partial = exact_partial(kind, c, cutoff);
    let (lo, hi) = kind.remainder(cutoff);
    Interval::new(&partial + lo, partial + hi)
}

/// Exact prefix sums up to a fixed cutoff for both series, so that the tail
/// from any start `c <= cutoff` costs only `c` small additions.
#[derive(Clone, Debug)]
pub struct TailTable {
    cutoff: u64,
    inverse_square: Rational,
    successor_over_cube: Rational,
}

impl TailTable {
    pub fn new(cutoff: u64) -> Result<Self> {
        check_range(1, cutoff)?;
        Ok(Self {
            cutoff,
            inverse_square: exact_partial(SeriesKind::InverseSquare, 1, cutoff),
            successor_over_cube: exact_partial(SeriesKind::SuccessorOverCube, 1, cutoff),
        })
    }

    pub fn cutoff(&self) -> u64 {
        self.cutoff
    }

    /// Same enclosure as [`tail_sum`]`(kind, c, self.cutoff())`.
    pub fn tail(&self, kind: SeriesKind, c: u64) -> Result<Interval> {
        check_range(c, self.cutoff)?;
        let full = match kind {
            SeriesKind::InverseSquare => &self.inverse_square,
            SeriesKind::SuccessorOverCube => &self.successor_over_cube,
        };
        let partial = full - exact_partial(kind, 1, c - 1);
        let (lo, hi) = kind.remainder(self.cutoff);
        Interval::new(&partial + lo, partial + hi)
    }
}
