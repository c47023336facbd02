//! Constants of the bound `A n^2 - B l n` on the number of lines with at
//! most `c` points, and the resulting Beck-type coefficient `2A / (1 + 2B)`.

use crate::bounds::scan::{isolate_argmax, ScanResult, DEFAULT_CUTOFF_LIMIT};
use crate::bounds::series::{SeriesKind, TailTable};
use crate::bounds::CrossingConstants;
use crate::interval::Interval;
use crate::rational::{int, r, Rational};
use crate::{Error, Result};

pub const FEW_MIN_C: u64 = 29;

/// `h = (c^2 - c - 2) / (4c - 16)`.
pub fn few_h(c: u64) -> Rational {
    let c = c as i64;
    r(c * c - c - 2, 4 * c - 16)
}

/// `X` as the maximum of `h+1, 3(h+4)/4, 6` and
/// `i(i-1)/2 - h(2i-9)` for `5 <= i <= c`.
pub fn few_x_by_max(c: u64) -> Rational {
    let h = few_h(c);
    let fixed = [&h + int(1), r(3, 4) * (&h + int(4)), int(6)];
    let per_size = (5..=c as i64).map(|i| int(i * (i - 1) / 2) - &h * int(2 * i - 9));
    fixed
        .into_iter()
        .chain(per_size)
        .max()
        .expect("nonempty candidates")
}

fn check_c(c: u64) -> Result<()> {
    if c < FEW_MIN_C {
        return Err(Error::Domain(format!(
            "c must be at least {FEW_MIN_C}, got {c}"
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundParamsFew {
    pub c: u64,
    pub h: Rational,
    /// `h + 1 = (c^2 + 3c - 18) / (4c - 16)`.
    pub x: Rational,
    /// Enclosure of the `n^2` coefficient.
    pub a: Interval,
    /// `(2c - 8) alpha / (c^2 + 3c - 18)`.
    pub b: Rational,
}

/// [`few_params`] against a precomputed [`TailTable`].
pub fn few_params_with(c: u64, k: &CrossingConstants, table: &TailTable) -> Result<BoundParamsFew> {
    check_c(c)?;
    let ci = c as i64;
    let weight = r(2 * ci - 8, ci * ci + 3 * ci - 18);
    let correction = r(ci * ci - 3 * ci - 14, 2 * ci * ci * ci * (ci - 4));
    let a = table
        .tail(SeriesKind::InverseSquare, c)?
        .shift(&correction)
        .scale(&(-&k.beta / int(2)))
        .shift(&int(1))
        .scale(&weight);
    let h = few_h(c);
    Ok(BoundParamsFew {
        c,
        x: &h + int(1),
        h,
        a,
        b: &weight * &k.alpha,
    })
}

pub fn few_params(c: u64, k: &CrossingConstants, cutoff: u64) -> Result<BoundParamsFew> {
    check_c(c)?;
    few_params_with(c, k, &TailTable::new(cutoff.max(1))?)
}

/// `A n^2 - B l n`.
pub fn few_lines_lower_bound(n: u64, l: u64, p: &BoundParamsFew) -> Result<Interval> {
    if l < 2 || l > n {
        return Err(Error::Domain(format!("need 2 <= l <= n, got l={l}, n={n}")));
    }
    let (n, l) = (int(n), int(l));
    Ok(p.a.scale(&(&n * &n)).shift(&-(&p.b * &l * &n)))
}

/// [`eps_few`] against a precomputed [`TailTable`].
pub fn eps_few_with(c: u64, k: &CrossingConstants, table: &TailTable) -> Result<Interval> {
    let p = few_params_with(c, k, table)?;
    let den = int(1) + int(2) * &p.b;
    Ok(p.a.scale(&(int(2) / den)))
}

/// Enclosure of `2A(c) / (1 + 2B(c))`.
pub fn eps_few(c: u64, k: &CrossingConstants, cutoff: u64) -> Result<Interval> {
    check_c(c)?;
    eps_few_with(c, k, &TailTable::new(cutoff.max(1))?)
}

/// Maximizes `2A / (1 + 2B)` over `c_min..=c_max`.
pub fn scan_constants_few(
    c_min: u64,
    c_max: u64,
    k: &CrossingConstants,
    cutoff: u64,
) -> Result<ScanResult> {
    scan_constants_few_limited(c_min, c_max, k, cutoff, DEFAULT_CUTOFF_LIMIT)
}

pub fn scan_constants_few_limited(
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
        eps_few_with(c, k, table)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k() -> CrossingConstants {
        CrossingConstants::default()
    }

    #[test]
    fn params_at_36() {
        let p = few_params(36, &k(), 4096).unwrap();
        assert_eq!(p.b, r(206, 693));
        assert!(p.b <= r(1, 3));
        assert!(p.a.lo() >= &r(1, 39));
    }

    #[test]
    fn h_at_29() {
        // (841 - 29 - 2) / (116 - 16)
        let p = few_params(29, &k(), 4096).unwrap();
        assert_eq!(p.h, r(81, 10));
        assert_eq!(p.x, r(91, 10));
    }

    #[test]
    fn domain_errors() {
        assert!(few_params(28, &k(), 4096).is_err());
        assert!(eps_few(28, &k(), 4096).is_err());
        let p = few_params(36, &k(), 4096).unwrap();
        assert!(few_lines_lower_bound(10, 1, &p).is_err());
        assert!(few_lines_lower_bound(10, 11, &p).is_err());
    }

    #[test]
    fn eps_at_44_above_two_over_61_and_above_29() {
        let e44 = eps_few(44, &k(), 4096).unwrap();
        assert!(e44.lo() >= &r(2, 61));
        assert!(eps_few(29, &k(), 4096).unwrap().strictly_below(&e44));
    }

    #[test]
    fn lower_bound_substitution() {
        let p = few_params(36, &k(), 4096).unwrap();
        let b = few_lines_lower_bound(100, 10, &p).unwrap();
        let lo = p.a.lo() * int(10_000) - r(206, 693) * int(1000);
        let hi = p.a.hi() * int(10_000) - r(206, 693) * int(1000);
        assert_eq!(b, Interval::new(lo, hi).unwrap());
    }

    #[test]
    fn lower_bound_degenerates_when_all_collinear() {
        let p = few_params(36, &k(), 4096).unwrap();
        for n in [2u64, 10, 50] {
            assert!(few_lines_lower_bound(n, n, &p).unwrap().hi() <= &int(0));
        }
    }

    #[test]
    fn doubling_n_quadruples_square_term() {
        let p = few_params(36, &k(), 4096).unwrap();
        let l = 5;
        for n in [10u64, 40, 100] {
            let small = few_lines_lower_bound(n, l, &p).unwrap();
            let big = few_lines_lower_bound(2 * n, l, &p).unwrap();
            // A (2n)^2 - 4 A n^2 = 0, so the gap is exactly the l-term change
            let gap = &big - &small.scale(&int(4));
            let expected = &p.b * int(l as i64) * int(n as i64) * int(2);
            assert!(gap.contains(&expected));
        }
    }
}
