//! Crossing-lemma constants, Szemerédi-Trotter and Hirzebruch checks, and
//! the constant families behind the incidence and line-count bounds.

mod few_lines;
mod scan;
mod series;
mod weak_dirac;

pub use few_lines::{
    eps_few, few_h, few_lines_lower_bound, few_params, few_x_by_max, scan_constants_few,
    scan_constants_few_limited, BoundParamsFew, FEW_MIN_C,
};
pub use few_lines::{eps_few_with as eps_few_with_table, few_params_with as few_params_with_table};
pub use scan::{ScanResult, DEFAULT_CUTOFF, DEFAULT_CUTOFF_LIMIT};
pub use series::{tail_sum, SeriesKind, TailTable};
pub use weak_dirac::{
    f_wd, scan_constants_wd, scan_constants_wd_limited, wd_correction, wd_h, wd_params, wd_x,
    wd_x_by_max, wd_y, BoundParamsWD, WD_MIN_C,
};
pub use weak_dirac::{f_wd_with as f_wd_with_table, wd_params_with as wd_params_with_table};

use crate::arrangement::Arrangement;
use crate::rational::{int, is_positive, max, r, Rational};
use crate::{Error, Result};

/// Constants `(alpha, beta)` of a crossing lemma: every graph with `n`
/// vertices and `m >= alpha n` edges has `cr(G) >= m^3 / (beta n^2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingConstants {
    pub alpha: Rational,
    pub beta: Rational,
}

impl CrossingConstants {
    pub fn new(alpha: Rational, beta: Rational) -> Result<Self> {
        if !is_positive(&alpha) || !is_positive(&beta) {
            return Err(Error::Domain(format!(
                "crossing constants must be positive, got alpha={alpha}, beta={beta}"
            )));
        }
        Ok(Self { alpha, beta })
    }
}

impl Default for CrossingConstants {
    /// `alpha = 103/16`, `beta = 31827/1024`.
    fn default() -> Self {
        Self {
            alpha: r(103, 16),
            beta: r(31827, 1024),
        }
    }
}

/// Vertex and edge counts of a simple graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphSize {
    n_vertices: u64,
    m_edges: u64,
}

impl GraphSize {
    pub fn new(n_vertices: u64, m_edges: u64) -> Result<Self> {
        if n_vertices == 0 {
            return Err(Error::Domain("a graph needs at least one vertex".into()));
        }
        let max_edges = n_vertices * (n_vertices - 1) / 2;
        if m_edges > max_edges {
            return Err(Error::Domain(format!(
                "{m_edges} edges exceed C({n_vertices}, 2) = {max_edges}"
            )));
        }
        Ok(Self {
            n_vertices,
            m_edges,
        })
    }

    pub fn n_vertices(&self) -> u64 {
        self.n_vertices
    }

    pub fn m_edges(&self) -> u64 {
        self.m_edges
    }
}

/// `m^3 / (beta n^2)` when `m >= alpha n`, otherwise 0.
pub fn crossing_lower_bound(g: GraphSize, k: &CrossingConstants) -> Rational {
    let n = int(g.n_vertices);
    let m = int(g.m_edges);
    if m < &k.alpha * &n {
        return int(0);
    }
    &m * &m * &m / (&k.beta * &n * &n)
}

fn check_st_args(n: u64, i: u64) -> Result<()> {
    if i < 2 || n < 1 {
        return Err(Error::Domain(format!(
            "need i >= 2 and n >= 1, got i={i}, n={n}"
        )));
    }
    Ok(())
}

/// `max{alpha n, beta n^2 / (2 (i-1)^2)}`, the Szemerédi-Trotter bound on
/// `sum_{j >= i} (j-1) s_j`.
pub fn st_bound_edges(n: u64, i: u64, k: &CrossingConstants) -> Result<Rational> {
    check_st_args(n, i)?;
    let n = int(n);
    let d = int(i - 1);
    Ok(max(&k.alpha * &n, &k.beta * &n * &n / (int(2) * &d * &d)))
}

/// `max{alpha n / (i-1), beta n^2 / (2 (i-1)^3)}`, the bound on `sum_{j >= i} s_j`.
pub fn st_bound_lines(n: u64, i: u64, k: &CrossingConstants) -> Result<Rational> {
    check_st_args(n, i)?;
    let n = int(n);
    let d = int(i - 1);
    Ok(max(
        &k.alpha * &n / &d,
        &k.beta * &n * &n / (int(2) * &d * &d * &d),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HirzebruchReport {
    /// At most `n - 3` points collinear.
    pub applicable: bool,
    pub lhs: Rational,
    pub rhs: Rational,
    /// `lhs >= rhs`; only meaningful when applicable.
    pub holds: bool,
}

/// `s_2 + 3/4 s_3 >= n + sum_{i >= 5} (2i - 9) s_i`, for sets with at most
/// `n - 3` collinear points.
pub fn hirzebruch_check(arr: &Arrangement) -> HirzebruchReport {
    let n = arr.n() as i64;
    let applicable = (arr.max_collinear() as i64) <= n - 3;
    let lhs = int(arr.s(2)) + r(3, 4) * int(arr.s(3));
    let tail: i64 = arr
        .histogram()
        .range(5..)
        .map(|(&i, &count)| (2 * i as i64 - 9) * count as i64)
        .sum();
    let rhs = int(n + tail);
    let holds = lhs >= rhs;
    HirzebruchReport {
        applicable,
        lhs,
        rhs,
        holds,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{generators, Arrangement};

    fn k() -> CrossingConstants {
        CrossingConstants::default()
    }

    #[test]
    fn crossing_bound_at_threshold() {
        let g = GraphSize::new(16, 103).unwrap();
        let expected = int(1024i64 * 103 * 103 * 103) / int(31827i64 * 256);
        assert_eq!(crossing_lower_bound(g, &k()), expected);
    }

    #[test]
    fn crossing_bound_below_threshold_is_zero() {
        let g = GraphSize::new(100, 100).unwrap();
        assert_eq!(crossing_lower_bound(g, &k()), int(0));
    }

    #[test]
    fn crossing_bound_complete_graph_is_below_threshold() {
        // K10 has 45 < 103/16 * 10 edges, so the lemma makes no claim
        let g = GraphSize::new(10, 45).unwrap();
        assert_eq!(crossing_lower_bound(g, &k()), int(0));
        // with the edge threshold dropped the formula still undershoots cr(K10) = 60
        let loose = CrossingConstants::new(r(1, 1), k().beta).unwrap();
        let bound = crossing_lower_bound(g, &loose);
        assert_eq!(bound, int(1024i64 * 45 * 45 * 45) / int(31827i64 * 100));
        assert!(bound <= int(60));
    }

    #[test]
    fn graph_size_validation() {
        assert!(GraphSize::new(0, 0).is_err());
        assert!(GraphSize::new(4, 7).is_err());
        assert!(GraphSize::new(4, 6).is_ok());
    }

    #[test]
    fn crossing_constants_must_be_positive() {
        assert!(CrossingConstants::new(r(0, 1), r(1, 1)).is_err());
        assert!(CrossingConstants::new(r(1, 1), r(-1, 1)).is_err());
    }

    #[test]
    fn st_edges_examples() {
        assert_eq!(st_bound_edges(9, 2, &k()).unwrap(), r(2577987, 2048));
        // large i: the alpha n branch wins
        assert_eq!(st_bound_edges(9, 50, &k()).unwrap(), r(927, 16));
        assert!(st_bound_edges(0, 2, &k()).is_err());
        assert!(st_bound_edges(9, 1, &k()).is_err());
    }

    #[test]
    fn st_lines_examples() {
        let expected = max(r(927, 32), r(31827 * 81, 16384));
        assert_eq!(st_bound_lines(9, 3, &k()).unwrap(), expected);
        let n = int(9);
        let i2 = max(&k().alpha * &n, &k().beta * &n * &n / int(2));
        assert_eq!(st_bound_lines(9, 2, &k()).unwrap(), i2);
    }

    #[test]
    fn st_bounds_monotone_in_n() {
        for i in 2..12 {
            for n in 1..60 {
                for t in 1..4 {
                    assert!(
                        st_bound_lines(n * t, i, &k()).unwrap()
                            >= st_bound_lines(n, i, &k()).unwrap()
                    );
                    assert!(
                        st_bound_edges(n * t, i, &k()).unwrap()
                            >= st_bound_edges(n, i, &k()).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn hirzebruch_grids() {
        let g3 = Arrangement::build(&generators::grid(3, 3).unwrap()).unwrap();
        let rep = hirzebruch_check(&g3);
        assert!(rep.applicable && rep.holds);
        assert_eq!((rep.lhs, rep.rhs), (int(18), int(9)));

        // 4x4 grid: s = {2: 48, 3: 4, 4: 10}
        let g4 = Arrangement::build(&generators::grid(4, 4).unwrap()).unwrap();
        let rep = hirzebruch_check(&g4);
        assert!(rep.applicable && rep.holds);
        assert_eq!((rep.lhs, rep.rhs), (int(51), int(16)));
    }

    #[test]
    fn hirzebruch_inapplicable_for_near_pencil() {
        let a = Arrangement::build(&generators::near_pencil(5).unwrap()).unwrap();
        assert!(!hirzebruch_check(&a).applicable);
    }
}
