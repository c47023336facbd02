//! Constants of the incidence bound `I >= delta n^2 + r n` for point sets
//! with at most `eps n + q` collinear points, and the objective `f(c)` whose
//! maximum gives the best admissible `eps`.

use crate::bounds::scan::{isolate_argmax, ScanResult, DEFAULT_CUTOFF_LIMIT};
use crate::bounds::series::{SeriesKind, TailTable};
use crate::bounds::CrossingConstants;
use crate::interval::Interval;
use crate::rational::{int, is_positive, r, Rational};
use crate::{Error, Result};

/// Smallest `c` the bound is stated for.
pub const WD_MIN_C: u64 = 8;

/// `h = c(c-2) / (5c-18)`.
pub fn wd_h(c: u64) -> Rational {
    let c = c as i64;
    r(c * (c - 2), 5 * c - 18)
}

/// `X = (h+1)/2`.
pub fn wd_x(c: u64) -> Rational {
    (wd_h(c) + int(1)) / int(2)
}

/// `Y = c - 5h - 2 + 18h/(c+1)`.
pub fn wd_y(c: u64) -> Rational {
    let h = wd_h(c);
    int(c as i64 - 2) - int(5) * &h + int(18) * &h / int(c as i64 + 1)
}

/// `-18(c-2) / (c^3 (5c-18))`, the correction term inside `delta` and `f`.
pub fn wd_correction(c: u64) -> Rational {
    let c = int(c as i64);
    int(-18) * (&c - int(2)) / (&c * &c * &c * (int(5) * &c - int(18)))
}

/// `X` as the maximum over its defining candidates
/// `(h+1)/2, (h+4)/4, 3/2` and `(i-1)/2 - 2h + 9h/i` for `5 <= i <= c`.
pub fn wd_x_by_max(c: u64) -> Rational {
    let h = wd_h(c);
    let fixed = [(&h + int(1)) / int(2), (&h + int(4)) / int(4), r(3, 2)];
    let gamma = (5..=c as i64).map(|i| r(i - 1, 2) - int(2) * &h + int(9) * &h / int(i));
    fixed
        .into_iter()
        .chain(gamma)
        .max()
        .expect("nonempty candidates")
}

fn check_c(c: u64) -> Result<()> {
    if c < WD_MIN_C {
        return Err(Error::Domain(format!(
            "c must be at least {WD_MIN_C}, got {c}"
        )));
    }
    Ok(())
}

/// `1 - beta/2 (correction + sum_{i >= c} (i+1)/i^3)`, the numerator shared
/// by `delta` and `f`.
fn numerator(c: u64, k: &CrossingConstants, table: &TailTable) -> Result<Interval> {
    let series = table.tail(SeriesKind::SuccessorOverCube, c)?;
    Ok(series
        .shift(&wd_correction(c))
        .scale(&(-&k.beta / int(2)))
        .shift(&int(1)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundParamsWD {
    pub c: u64,
    pub eps: Rational,
    pub q: u32,
    pub h: Rational,
    pub x: Rational,
    pub y: Rational,
    /// Enclosure of the `n^2` coefficient.
    pub delta: Interval,
    /// `(2h - 1 + alpha) / (h + 1)`.
    pub r: Rational,
}

/// [`wd_params`] against a precomputed [`TailTable`].
pub fn wd_params_with(
    c: u64,
    eps: &Rational,
    q: u32,
    k: &CrossingConstants,
    table: &TailTable,
) -> Result<BoundParamsWD> {
    check_c(c)?;
    if !is_positive(eps) || eps >= &r(1, 2) {
        return Err(Error::Domain(format!(
            "eps must lie in (0, 1/2), got {eps}"
        )));
    }
    if q > 3 {
        return Err(Error::Domain(format!("q must lie in [0, 3], got {q}")));
    }
    let h = wd_h(c);
    let h1 = &h + int(1);
    let delta = numerator(c, k, table)?
        .shift(&-(eps * &k.alpha))
        .scale(&h1.recip());
    let r = (int(2) * &h - int(1) + &k.alpha) / &h1;
    Ok(BoundParamsWD {
        c,
        eps: eps.clone(),
        q,
        x: wd_x(c),
        y: wd_y(c),
        h,
        delta,
        r,
    })
}

/// All constants of the incidence bound for `(c, eps, q)`, with the series in
/// `delta` summed exactly up to `cutoff`.
pub fn wd_params(
    c: u64,
    eps: &Rational,
    q: u32,
    k: &CrossingConstants,
    cutoff: u64,
) -> Result<BoundParamsWD> {
    check_c(c)?;
    wd_params_with(c, eps, q, k, &TailTable::new(cutoff.max(1))?)
}

pub fn f_wd_with(c: u64, k: &CrossingConstants, table: &TailTable) -> Result<Interval> {
    check_c(c)?;
    let den = wd_h(c) + int(1) + &k.alpha;
    Ok(numerator(c, k, table)?.scale(&den.recip()))
}

/// Enclosure of `f(c) = (1 - beta/2 (correction + sum)) / (h + 1 + alpha)`,
/// the largest `eps` for which `delta >= eps` at this `c`.
pub fn f_wd(c: u64, k: &CrossingConstants, cutoff: u64) -> Result<Interval> {
    check_c(c)?;
    f_wd_with(c, k, &TailTable::new(cutoff.max(1))?)
}

/// Maximizes `f` over `c_min..=c_max`.
pub fn scan_constants_wd(
    c_min: u64,
    c_max: u64,
    k: &CrossingConstants,
    cutoff: u64,
) -> Result<ScanResult> {
    scan_constants_wd_limited(c_min, c_max, k, cutoff, DEFAULT_CUTOFF_LIMIT)
}

/// [`scan_constants_wd`] with an explicit refinement limit.
pub fn scan_constants_wd_limited(
    c_min: u64,
    c_max: u64,
    k: &CrossingConstants,
    cutoff: u64,
    limit: u64,
) -> Result<ScanResult> {
    check_c(c_min)?;
    if c_max < c_min {
        return Err(Error::Domain(format!("empty range {c_min}..={c_max}")));
    }
    isolate_argmax(c_min, c_max, cutoff, limit, |table, c| {
        f_wd_with(c, k, table)
    })
}
