//! Checks every incidence and line-count inequality on a concrete
//! arrangement, with exact rational comparisons against un-rounded bounds.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Pow;

use crate::arrangement::Arrangement;
use crate::bounds::{few_params_with_table, wd_params_with_table};
use crate::bounds::{
    hirzebruch_check, st_bound_edges, st_bound_lines, BoundParamsFew, BoundParamsWD,
    CrossingConstants, TailTable,
};
use crate::rational::{int, r, round_down, Rational};
use crate::Result;

pub const WEAK_DIRAC: &str = "weak_dirac";
pub const INCIDENCE_BOUND: &str = "incidence_bound";
pub const INCIDENCE_DELTA_BOUND: &str = "incidence_delta_bound";
pub const HIRZEBRUCH: &str = "hirzebruch";
pub const ST_EDGES: &str = "st_edges";
pub const ST_LINES: &str = "st_lines";
pub const BECK_LINES: &str = "beck_lines";
pub const FEW_POINT_LINES: &str = "few_point_lines";
pub const HALF_LINES_AT_MOST_THREE: &str = "half_lines_at_most_three";
pub const LINES_AT_MOST_36: &str = "lines_at_most_36";

/// Direction of the inequality a check asserts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    AtLeast,
    AtMost,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::AtLeast => ">=",
            Relation::AtMost => "<=",
        }
    }

    fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::AtLeast => lhs >= rhs,
            Relation::AtMost => lhs <= rhs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremCheck {
    pub name: String,
    /// Whether the premises of the statement hold for this point set.
    pub applicable: bool,
    pub lhs: Rational,
    pub rhs: Rational,
    pub relation: Relation,
    /// Truth of `lhs relation rhs`, reported even when inapplicable.
    pub holds: bool,
}

impl TheoremCheck {
    fn new(
        name: impl Into<String>,
        applicable: bool,
        lhs: Rational,
        relation: Relation,
        rhs: Rational,
    ) -> Self {
        let holds = relation.holds(&lhs, &rhs);
        Self {
            name: name.into(),
            applicable,
            lhs,
            rhs,
            relation,
            holds,
        }
    }

    /// Inapplicable checks count as passed.
    pub fn passed(&self) -> bool {
        !self.applicable || self.holds
    }
}

impl fmt::Display for TheoremCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} {} {} -> {}",
            self.name,
            self.lhs,
            self.relation.symbol(),
            self.rhs,
            self.holds
        )?;
        if !self.applicable {
            write!(f, " (inapplicable)")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TheoremReport {
    pub checks: Vec<TheoremCheck>,
}

impl TheoremReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(TheoremCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &TheoremCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn get(&self, name: &str) -> Option<&TheoremCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Keeps checks whose name starts with one of `suites` (`st_edges`
    /// selects every `st_edges[i=..]`).
    pub fn retain_suites<S: AsRef<str>>(&mut self, suites: &[S]) {
        if suites.is_empty() {
            return;
        }
        self.checks
            .retain(|c| suites.iter().any(|s| c.name.starts_with(s.as_ref())));
    }
}

/// Constants shared by all verifications at one `(alpha, beta, cutoff)`.
///
/// Building this sums the series once; reuse it across a corpus.
#[derive(Clone, Debug)]
pub struct VerifyContext {
    k: CrossingConstants,
    incidence: BoundParamsWD,
    few: BoundParamsFew,
    delta_floor: Rational,
    a_floor: Rational,
}

impl VerifyContext {
    pub fn new(k: CrossingConstants, cutoff: u64) -> Result<Self> {
        let table = TailTable::new(cutoff.max(1))?;
        let incidence = wd_params_with_table(46, &r(1, 26), 2, &k, &table)?;
        let few = few_params_with_table(36, &k, &table)?;
        // Lower endpoints rounded down to 18 decimals keep the printed bounds
        // short and only weaken them.
        let grid = BigInt::from(10u32).pow(18u32);
        let delta_floor = round_down(incidence.delta.lo(), &grid);
        let a_floor = round_down(few.a.lo(), &grid);
        Ok(Self {
            k,
            incidence,
            few,
            delta_floor,
            a_floor,
        })
    }

    pub fn constants(&self) -> &CrossingConstants {
        &self.k
    }

    pub fn verify(&self, arr: &Arrangement) -> TheoremReport {
        use Relation::*;

        let n_us = arr.n();
        let n = int(n_us as u64);
        let l_us = arr.max_collinear();
        let l = int(l_us as u64);
        let num_lines = int(arr.num_lines() as u64);
        let noncollinear = !arr.is_collinear();
        let big_enough = n_us >= 5;
        let dirac_threshold = &n / int(26) + int(2);
        let mut checks = Vec::new();

        let (_, max_count) = arr.max_lines_through_point();
        checks.push(TheoremCheck::new(
            WEAK_DIRAC,
            noncollinear && big_enough,
            int(max_count),
            AtLeast,
            dirac_threshold.clone(),
        ));

        let few_collinear = l <= dirac_threshold;
        checks.push(TheoremCheck::new(
            INCIDENCE_BOUND,
            noncollinear && big_enough && few_collinear,
            int(arr.incidences()),
            AtLeast,
            &n * &n / int(26) + int(2) * &n,
        ));

        let eps_n = &self.incidence.eps * &n;
        let eps_premise = eps_n >= int(2) && l <= &eps_n + int(self.incidence.q);
        checks.push(TheoremCheck::new(
            INCIDENCE_DELTA_BOUND,
            noncollinear && big_enough && eps_premise,
            int(arr.incidences()),
            AtLeast,
            &self.delta_floor * &n * &n + &self.incidence.r * &n,
        ));

        let hz = hirzebruch_check(arr);
        checks.push(TheoremCheck::new(
            HIRZEBRUCH,
            hz.applicable,
            hz.lhs,
            AtLeast,
            hz.rhs,
        ));

        for i in 2..=l_us {
            let (n64, i64_) = (n_us as u64, i as u64);
            let edges_bound = st_bound_edges(n64, i64_, &self.k).expect("i >= 2, n >= 2");
            let lines_bound = st_bound_lines(n64, i64_, &self.k).expect("i >= 2, n >= 2");
            checks.push(TheoremCheck::new(
                format!("{ST_EDGES}[i={i}]"),
                true,
                int(arr.visibility_edge_count(i)),
                AtMost,
                edges_bound,
            ));
            checks.push(TheoremCheck::new(
                format!("{ST_LINES}[i={i}]"),
                true,
                int(arr.lines_with_at_least(i)),
                AtMost,
                lines_bound,
            ));
        }

        let spread = &n * (&n - &l);
        checks.push(TheoremCheck::new(
            BECK_LINES,
            true,
            num_lines.clone(),
            AtLeast,
            &spread / int(61),
        ));

        let at_most_three = int(arr.lines_with_at_most(3));
        checks.push(TheoremCheck::new(
            FEW_POINT_LINES,
            true,
            at_most_three.clone(),
            AtLeast,
            &spread / int(122),
        ));

        checks.push(TheoremCheck::new(
            HALF_LINES_AT_MOST_THREE,
            noncollinear,
            at_most_three,
            AtLeast,
            num_lines / int(2),
        ));

        checks.push(TheoremCheck::new(
            LINES_AT_MOST_36,
            true,
            int(arr.lines_with_at_most(self.few.c as usize)),
            AtLeast,
            &self.a_floor * &n * &n - &self.few.b * &l * &n,
        ));

        TheoremReport { checks }
    }
}

/// Runs every check on `arr` with crossing constants `k`; the series inside
/// the incidence and few-point-line constants are summed up to `cutoff`.
pub fn verify_theorems(
    arr: &Arrangement,
    k: &CrossingConstants,
    cutoff: u64,
) -> Result<TheoremReport> {
    Ok(VerifyContext::new(k.clone(), cutoff)?.verify(arr))
}
