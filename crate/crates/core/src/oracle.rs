//! Brute-force reference for the determined lines of a point set.
//!
//! Lines are identified by their member sets only; no [`LineKey`] is ever
//! built here, so the oracle shares nothing with the key-based enumeration
//! in [`Arrangement::build`] beyond the orientation predicate.
//!
//! [`LineKey`]: crate::LineKey

use std::collections::BTreeSet;

use crate::arrangement::{Arrangement, PointSet};
use crate::geometry::{orient, Orientation};
use crate::{Error, Result};

/// Sorted member lists of every determined line, in lexicographic order.
///
/// `O(n^3)`; meant for `n` up to a few hundred.
pub fn brute_force_lines(ps: &PointSet) -> Result<Vec<Vec<usize>>> {
    let n = ps.len();
    if n < 2 {
        return Err(Error::TooFewPoints(n));
    }
    let mut covered = vec![false; n * n];
    let mut lines = BTreeSet::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if covered[i * n + j] {
                continue;
            }
            let members: Vec<usize> = (0..n)
                .filter(|&r| orient(&ps[i], &ps[j], &ps[r]) == Orientation::Collinear)
                .collect();
            for (x, &u) in members.iter().enumerate() {
                for &v in &members[x + 1..] {
                    covered[u * n + v] = true;
                }
            }
            lines.insert(members);
        }
    }
    Ok(lines.into_iter().collect())
}

/// A disagreement between the oracle and an arrangement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    /// Member sets only the oracle found.
    pub missing: Vec<Vec<usize>>,
    /// Member sets only the arrangement reported.
    pub unexpected: Vec<Vec<usize>>,
}

/// Compares `arr` line-by-line against the oracle for `ps`.
pub fn cross_check(ps: &PointSet, arr: &Arrangement) -> Result<Option<Mismatch>> {
    let expected = brute_force_lines(ps)?;
    let actual = arr.member_sets();
    if expected == actual {
        return Ok(None);
    }
    let exp: BTreeSet<_> = expected.iter().collect();
    let act: BTreeSet<_> = actual.iter().collect();
    let missing = exp.difference(&act).map(|v| (*v).clone()).collect();
    let mut unexpected: Vec<Vec<usize>> = act.difference(&exp).map(|v| (*v).clone()).collect();
    // duplicates in the arrangement would not show up as a set difference
    if unexpected.is_empty() && actual.len() != expected.len() {
        unexpected = actual
            .windows(2)
            .filter(|w| w[0] == w[1])
            .map(|w| w[0].clone())
            .collect();
    }
    Ok(Some(Mismatch {
        missing,
        unexpected,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::Point;

    #[test]
    fn two_points_one_line() {
        let ps = generators::collinear(2).unwrap();
        assert_eq!(brute_force_lines(&ps).unwrap(), vec![vec![0, 1]]);
    }

    #[test]
    fn general_position_four() {
        let ps = PointSet::new(vec![
            Point::from_ints(0, 0),
            Point::from_ints(3, 1),
            Point::from_ints(1, 4),
            Point::from_ints(5, 5),
        ])
        .unwrap();
        let lines = brute_force_lines(&ps).unwrap();
        assert_eq!(lines.len(), 6);
        assert!(lines.iter().all(|m| m.len() == 2));
    }

    #[test]
    fn grid_matches_arrangement() {
        let ps = generators::grid(3, 3).unwrap();
        let lines = brute_force_lines(&ps).unwrap();
        assert_eq!(lines.len(), 20);
        assert_eq!(lines.iter().filter(|m| m.len() == 3).count(), 8);
        let arr = Arrangement::build(&ps).unwrap();
        assert_eq!(cross_check(&ps, &arr).unwrap(), None);
    }

    #[test]
    fn single_point_rejected() {
        let ps = generators::collinear(2).unwrap();
        let one = PointSet::new(vec![ps[0].clone()]).unwrap();
        assert_eq!(brute_force_lines(&one), Err(Error::TooFewPoints(1)));
    }
}
