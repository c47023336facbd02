use crate::bounds::series::TailTable;
use crate::interval::Interval;
use crate::{Error, Result};

pub const DEFAULT_CUTOFF: u64 = 4096;
/// Refinement stops doubling the cutoff past this many exact terms.
pub const DEFAULT_CUTOFF_LIMIT: u64 = 1 << 20;

/// Outcome of maximizing an enclosed function over an integer range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanResult {
    /// The `c` whose enclosure lies strictly above every other enclosure.
    pub argmax: u64,
    /// Cutoff at which the maximum was isolated.
    pub cutoff: u64,
    /// One enclosure per `c`, ascending. Rows refined during isolation carry
    /// the tighter enclosure.
    pub rows: Vec<(u64, Interval)>,
}

impl ScanResult {
    pub fn row(&self, c: u64) -> Option<&Interval> {
        self.rows.iter().find(|(rc, _)| *rc == c).map(|(_, iv)| iv)
    }
}

/// Finds the `c` in `c_min..=c_max` maximizing `eval`, doubling the series
/// cutoff for the still-overlapping candidates until the top enclosure is
/// disjoint from all others or `limit` is reached.
pub(crate) fn isolate_argmax<F>(
    c_min: u64,
    c_max: u64,
    cutoff: u64,
    limit: u64,
    eval: F,
) -> Result<ScanResult>
where
    F: Fn(&TailTable, u64) -> Result<Interval>,
{
    if cutoff < c_max {
        return Err(Error::InvalidCutoff {
            start: c_max,
            cutoff,
        });
    }
    let mut cutoff = cutoff;
    let table = TailTable::new(cutoff)?;
    let mut rows = (c_min..=c_max)
        .map(|c| Ok((c, eval(&table, c)?)))
        .collect::<Result<Vec<_>>>()?;

    loop {
        let best = rows.iter().enumerate().fold(0, |best, (idx, (_, iv))| {
            if iv.lo() > rows[best].1.lo() {
                idx
            } else {
                best
            }
        });
        let rivals: Vec<usize> = (0..rows.len())
            .filter(|&idx| idx != best && !rows[idx].1.strictly_below(&rows[best].1))
            .collect();
        if rivals.is_empty() {
            return Ok(ScanResult {
                argmax: rows[best].0,
                cutoff,
                rows,
            });
        }
        let mut contested: Vec<usize> = rivals;
        contested.push(best);
        contested.sort_unstable();
        if cutoff.saturating_mul(2) > limit {
            return Err(Error::Unresolved {
                candidates: contested.iter().map(|&idx| rows[idx].0).collect(),
                cutoff,
            });
        }
        cutoff *= 2;
        let table = TailTable::new(cutoff)?;
        for idx in contested {
            rows[idx].1 = eval(&table, rows[idx].0)?;
        }
    }
}
