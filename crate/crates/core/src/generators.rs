//! Deterministic point configurations for sweeping the inequality checks.
//!
//! Random sets draw from `ChaCha20Rng::seed_from_u64(seed)` (rand_chacha) via
//! `Rng::gen_range`, so a `(n, seed, bound)` triple always yields the same set.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

use crate::arrangement::PointSet;
use crate::geometry::Point;
use crate::rational::int;
use crate::{Error, Result};

/// A named configuration family with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GeneratorSpec {
    Grid { w: u64, h: u64 },
    NearPencil { n: u64 },
    Circle { n: u64 },
    Random { n: u64, seed: u64, bound: u64 },
    Collinear { n: u64 },
}

impl GeneratorSpec {
    pub fn generate(&self) -> Result<PointSet> {
        match *self {
            GeneratorSpec::Grid { w, h } => grid(w, h),
            GeneratorSpec::NearPencil { n } => near_pencil(n),
            GeneratorSpec::Circle { n } => circle(n),
            GeneratorSpec::Random { n, seed, bound } => random_points(n, seed, bound),
            GeneratorSpec::Collinear { n } => collinear(n),
        }
    }
}

fn build(points: Vec<Point>) -> Result<PointSet> {
    PointSet::new(points)
}

/// `{0..w-1} x {0..h-1}`, row by row.
pub fn grid(w: u64, h: u64) -> Result<PointSet> {
    if w < 2 || h < 2 {
        return Err(Error::Domain(format!(
            "grid sides must be at least 2, got {w}x{h}"
        )));
    }
    build(
        (0..h)
            .flat_map(|y| (0..w).map(move |x| Point::from_ints(x as i64, y as i64)))
            .collect(),
    )
}

/// `n - 1` points on the x-axis plus the apex `(0, 1)`, which comes last.
pub fn near_pencil(n: u64) -> Result<PointSet> {
    if n < 3 {
        return Err(Error::Domain(format!("near-pencil needs n >= 3, got {n}")));
    }
    let mut points: Vec<Point> = (0..n - 1).map(|x| Point::from_ints(x as i64, 0)).collect();
    points.push(Point::from_ints(0, 1));
    build(points)
}

/// Rational points `((1-t^2)/(1+t^2), 2t/(1+t^2))` for `t = 0..n-1` on the
/// unit circle; no three are collinear.
pub fn circle(n: u64) -> Result<PointSet> {
    if n < 3 {
        return Err(Error::Domain(format!("circle needs n >= 3, got {n}")));
    }
    build(
        (0..n)
            .map(|t| {
                let t = int(t);
                let den = int(1) + &t * &t;
                Point::new((int(1) - &t * &t) / &den, int(2) * &t / den)
            })
            .collect(),
    )
}

/// `n` distinct lattice points uniform in `[-bound, bound]^2`.
pub fn random_points(n: u64, seed: u64, bound: u64) -> Result<PointSet> {
    if n < 2 || bound < 1 {
        return Err(Error::Domain(format!(
            "need n >= 2 and bound >= 1, got n={n}, bound={bound}"
        )));
    }
    let side = 2 * bound as u128 + 1;
    if n as u128 > side * side {
        return Err(Error::Domain(format!(
            "{n} distinct points do not fit in [-{bound}, {bound}]^2"
        )));
    }
    let b = bound as i64;
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut seen = HashSet::new();
    let mut points = Vec::with_capacity(n as usize);
    while points.len() < n as usize {
        let xy = (rng.gen_range(-b..=b), rng.gen_range(-b..=b));
        if seen.insert(xy) {
            points.push(Point::from_ints(xy.0, xy.1));
        }
    }
    build(points)
}

/// `(0,0), (1,0), .., (n-1,0)`.
pub fn collinear(n: u64) -> Result<PointSet> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "collinear set needs n >= 2, got {n}"
        )));
    }
    build((0..n).map(|x| Point::from_ints(x as i64, 0)).collect())
}
