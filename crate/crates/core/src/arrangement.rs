//! Lines determined by a point set and the statistics the incidence bounds
//! quantify over.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use num_traits::ToPrimitive;

use crate::geometry::{line_through, LineKey, Point};
use crate::rational::{choose2, int, Rational};
use crate::{Error, Result};

/// An ordered, duplicate-free, nonempty list of points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        let mut seen = HashSet::with_capacity(points.len());
        for (index, p) in points.iter().enumerate() {
            if !seen.insert(p) {
                return Err(Error::DuplicatePoint {
                    index,
                    x: p.x.to_string(),
                    y: p.y.to_string(),
                });
            }
        }
        Ok(Self { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn into_points(self) -> Vec<Point> {
        self.points
    }
}

impl std::ops::Index<usize> for PointSet {
    type Output = Point;

    fn index(&self, i: usize) -> &Point {
        &self.points[i]
    }
}

/// A determined line and the sorted indices of the points on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineRecord {
    pub key: LineKey,
    pub members: Vec<usize>,
}

impl LineRecord {
    /// Number of points on the line (the `i` of an i-line).
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Full line structure of a point set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    n: usize,
    lines: Vec<LineRecord>,
    s: BTreeMap<usize, u64>,
    l: usize,
    incidences: u64,
    per_point_lines: Vec<u64>,
}

impl Arrangement {
    /// Enumerates every line through at least two points.
    ///
    /// All `C(n, 2)` pairs are grouped by their canonical [`LineKey`]; lines
    /// come out sorted by key.
    pub fn build(ps: &PointSet) -> Result<Self> {
        let n = ps.len();
        if n < 2 {
            return Err(Error::TooFewPoints(n));
        }
        let mut groups: HashMap<LineKey, BTreeSet<usize>> = HashMap::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let key = line_through(&ps[i], &ps[j])?;
                let members = groups.entry(key).or_default();
                members.insert(i);
                members.insert(j);
            }
        }
        let mut lines: Vec<LineRecord> = groups
            .into_iter()
            .map(|(key, members)| LineRecord {
                key,
                members: members.into_iter().collect(),
            })
            .collect();
        lines.sort_by(|a, b| a.key.cmp(&b.key));
        Ok(Self::from_lines(n, lines))
    }

    fn from_lines(n: usize, lines: Vec<LineRecord>) -> Self {
        let mut s = BTreeMap::new();
        let mut per_point_lines = vec![0u64; n];
        for line in &lines {
            *s.entry(line.size()).or_insert(0) += 1;
            for &v in &line.members {
                per_point_lines[v] += 1;
            }
        }
        let l = s.keys().next_back().copied().unwrap_or(0);
        let incidences = s.iter().map(|(&i, &count)| i as u64 * count).sum();
        Self {
            n,
            lines,
            s,
            l,
            incidences,
            per_point_lines,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lines(&self) -> &[LineRecord] {
        &self.lines
    }

    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    /// Sparse histogram: `i -> s_i`, only for `s_i > 0`.
    pub fn histogram(&self) -> &BTreeMap<usize, u64> {
        &self.s
    }

    /// Number of lines with exactly `i` points.
    pub fn s(&self, i: usize) -> u64 {
        self.s.get(&i).copied().unwrap_or(0)
    }

    /// Size of the longest line.
    pub fn max_collinear(&self) -> usize {
        self.l
    }

    /// Total point-line incidences `I = sum i s_i`.
    pub fn incidences(&self) -> u64 {
        self.incidences
    }

    pub fn per_point_lines(&self) -> &[u64] {
        &self.per_point_lines
    }

    /// True when a single line holds every point.
    pub fn is_collinear(&self) -> bool {
        self.l == self.n
    }

    /// Sorted member lists of all lines, sorted lexicographically.
    pub fn member_sets(&self) -> Vec<Vec<usize>> {
        let mut sets: Vec<Vec<usize>> = self.lines.iter().map(|l| l.members.clone()).collect();
        sets.sort();
        sets
    }

    /// `|E(G_i)| = sum_{j >= i} (j - 1) s_j`, the edges of the visibility
    /// graph lying on lines with at least `i` points.
    pub fn visibility_edge_count(&self, i: usize) -> u64 {
        self.s
            .range(i.max(2)..)
            .map(|(&j, &count)| (j as u64 - 1) * count)
            .sum()
    }

    /// `sum_{j >= i} s_j`.
    pub fn lines_with_at_least(&self, i: usize) -> u64 {
        self.s.range(i.max(2)..).map(|(_, &count)| count).sum()
    }

    /// Point lying on the most determined lines; ties go to the smallest index.
    pub fn max_lines_through_point(&self) -> (usize, u64) {
        self.per_point_lines
            .iter()
            .enumerate()
            .fold(
                (0, 0),
                |best, (v, &count)| if count > best.1 { (v, count) } else { best },
            )
    }

    /// `sum_{2 <= i <= c} s_i`.
    pub fn lines_with_at_most(&self, c: usize) -> u64 {
        self.s.range(..=c).map(|(_, &count)| count).sum()
    }

    /// Least `k` in `2..=floor(eps n) + q` with `|E(G_k)| <= alpha n`, or
    /// `floor(eps n) + q + 1` when there is none.
    pub fn compute_k(&self, alpha: &Rational, eps: &Rational, q: u32) -> Result<usize> {
        let top = self.index_range_top(eps, q)?;
        let alpha_n = alpha * int(self.n as u64);
        let k = (2..=top)
            .find(|&k| int(self.visibility_edge_count(k)) <= alpha_n)
            .unwrap_or(top + 1);
        Ok(k)
    }

    /// `floor(eps n) + q`, validating `eps n >= 2` and `q <= 3`.
    fn index_range_top(&self, eps: &Rational, q: u32) -> Result<usize> {
        if q > 3 {
            return Err(Error::PreconditionViolated(format!(
                "q must lie in [0, 3], got {q}"
            )));
        }
        let eps_n = eps * int(self.n as u64);
        if eps_n < int(2) {
            return Err(Error::PreconditionViolated(format!(
                "eps * n must be at least 2, got {eps_n}"
            )));
        }
        let floor = eps_n.floor().to_integer().to_usize().ok_or_else(|| {
            Error::PreconditionViolated(format!("eps * n = {eps_n} is out of range"))
        })?;
        Ok(floor + q as usize)
    }

    /// Splits pairs and incidences into small (`i <= c`), medium
    /// (`c < i < k`) and large (`i >= k`) line sizes.
    ///
    /// When `k <= c` the small and large ranges overlap; large wins and the
    /// breakdown is flagged `degenerate_k`.
    pub fn classify_pairs_incidences(
        &self,
        c: usize,
        eps: &Rational,
        q: u32,
        alpha: &Rational,
    ) -> Result<IncidenceBreakdown> {
        if c < 8 {
            return Err(Error::PreconditionViolated(format!(
                "c must be at least 8, got {c}"
            )));
        }
        let k = self.compute_k(alpha, eps, q)?;
        let mut b = IncidenceBreakdown {
            c,
            eps: eps.clone(),
            q,
            k,
            degenerate_k: k <= c,
            small_pairs: 0,
            medium_pairs: 0,
            large_pairs: 0,
            small_incidences: 0,
            medium_incidences: 0,
            large_incidences: 0,
        };
        for (&i, &count) in &self.s {
            let pairs = choose2(i as u64) * count;
            let incidences = i as u64 * count;
            if i >= k {
                b.large_pairs += pairs;
                b.large_incidences += incidences;
            } else if i <= c {
                b.small_pairs += pairs;
                b.small_incidences += incidences;
            } else {
                b.medium_pairs += pairs;
                b.medium_incidences += incidences;
            }
        }
        Ok(b)
    }
}

/// Small/medium/large split of pairs and incidences for given `(c, eps, q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceBreakdown {
    pub c: usize,
    pub eps: Rational,
    pub q: u32,
    pub k: usize,
    /// `k <= c`: some sizes are both small and large (counted as large).
    pub degenerate_k: bool,
    pub small_pairs: u64,
    pub medium_pairs: u64,
    pub large_pairs: u64,
    pub small_incidences: u64,
    pub medium_incidences: u64,
    pub large_incidences: u64,
}

impl IncidenceBreakdown {
    pub fn total_pairs(&self) -> u64 {
        self.small_pairs + self.medium_pairs + self.large_pairs
    }

    pub fn total_incidences(&self) -> u64 {
        self.small_incidences + self.medium_incidences + self.large_incidences
    }
}
