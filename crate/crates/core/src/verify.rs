//! Grid verification suites and the case table.
//!
//! Each check runs a closed formula and an independent oracle over a grid and
//! counts the points where they disagree; an error on either side counts as a
//! mismatch.

use std::fmt::Write as _;
use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::audit::audit_cases;
use crate::error::Result;
use crate::g2::{partition_tarski, qpartition, qpartition_bruteforce};
use crate::qkwmf::{multiplicity, qmultiplicity_closed, qmultiplicity_weyl_sum, Method};
use crate::rootsys::{FundCoord, RootCoord};
use crate::sp4::{
    multiplicity_c2_closed, multiplicity_c2_weyl_sum, partition_c2_closed_with, qpartition_c2,
    qpartition_c2_bruteforce, RegionRule,
};
use crate::QPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algebra {
    G2,
    C2,
}

impl Algebra {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::G2 => "g2",
            Self::C2 => "c2",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub cases: u64,
    pub mismatches: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub algebra: Algebra,
    pub grid_max: u32,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn total_mismatches(&self) -> u64 {
        self.checks.iter().map(|c| c.mismatches).sum()
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

/// Runs `same` on every point; `same` returns `Ok(None)` on agreement and a
/// description of the disagreement otherwise.
fn run_check<P: Copy + std::fmt::Debug>(
    name: &str,
    points: impl IntoIterator<Item = P>,
    mut same: impl FnMut(P) -> Result<Option<String>>,
) -> Check {
    let mut check = Check { name: name.to_owned(), cases: 0, mismatches: 0, first_mismatch: None };
    for p in points {
        check.cases += 1;
        let failure = match same(p) {
            Ok(None) => continue,
            Ok(Some(detail)) => detail,
            Err(e) => e.to_string(),
        };
        check.mismatches += 1;
        check.first_mismatch.get_or_insert_with(|| format!("{p:?}: {failure}"));
    }
    check
}

fn compare<T: PartialEq + std::fmt::Display>(left: T, right: T) -> Option<String> {
    (left != right).then(|| format!("{left} != {right}"))
}

/// All `(i, j)` with `0 ≤ i, j ≤ max`, lexicographic.
pub fn grid2(max: u32) -> impl Iterator<Item = (u32, u32)> {
    (0..=max).flat_map(move |i| (0..=max).map(move |j| (i, j)))
}

/// All `(m, n, x, y) ∈ [0, max]⁴`, lexicographic.
pub fn grid4(max: u32) -> impl Iterator<Item = [u32; 4]> {
    grid2(max).flat_map(move |(m, n)| grid2(max).map(move |(x, y)| [m, n, x, y]))
}

fn pair(t: [u32; 4]) -> (FundCoord, FundCoord) {
    (FundCoord::new(t[0], t[1]), FundCoord::new(t[2], t[3]))
}

fn root(p: (u32, u32)) -> RootCoord {
    RootCoord::new(p.0.into(), p.1.into())
}

pub fn check_g2_qmultiplicity(max: u32) -> Check {
    run_check("g2 qmultiplicity closed vs weyl sum", grid4(max), |t| {
        let (lambda, mu) = pair(t);
        Ok(compare(qmultiplicity_closed::<i64>(lambda, mu)?.mq, qmultiplicity_weyl_sum::<i64>(lambda, mu)?))
    })
}

pub fn check_g2_qpartition(max: u32) -> Check {
    run_check("g2 qpartition vs bruteforce", grid2(max), |p| {
        Ok(compare(qpartition::<i64>(root(p))?, qpartition_bruteforce::<i64>(root(p))?))
    })
}

pub fn check_g2_tarski(max: u32) -> Check {
    run_check("g2 tarski vs qpartition at q=1", grid2(max), |p| {
        Ok(compare(partition_tarski(root(p))?, qpartition::<i64>(root(p))?.eval_at_one()?))
    })
}

pub fn check_g2_multiplicity_methods(max: u32) -> Check {
    run_check("g2 multiplicity tarski vs qpoly", grid4(max), |t| {
        let (lambda, mu) = pair(t);
        Ok(compare(multiplicity(lambda, mu, Method::Tarski)?, multiplicity(lambda, mu, Method::QPoly)?))
    })
}

pub fn check_g2_case_audit(max: u32) -> Check {
    let report = audit_cases(max);
    Check {
        name: "g2 case audit".to_owned(),
        cases: report.cases(),
        mismatches: report.counterexamples.len() as u64,
        first_mismatch: report.counterexamples.first().map(|c| format!("{:?}: {}", c.tuple, c.reason)),
    }
}

pub fn check_c2_qpartition(max: u32) -> Check {
    run_check("c2 qpartition vs bruteforce", grid2(max), |p| {
        Ok(compare(qpartition_c2::<i64>(root(p))?, qpartition_c2_bruteforce::<i64>(root(p))?))
    })
}

pub fn check_c2_closed_partition(max: u32, rule: RegionRule) -> Check {
    run_check("c2 closed partition vs qpartition at q=1", grid2(max), |p| {
        Ok(compare(partition_c2_closed_with(root(p), rule)?, qpartition_c2::<i64>(root(p))?.eval_at_one()?))
    })
}

pub fn check_c2_multiplicity(max: u32) -> Check {
    run_check("c2 multiplicity closed vs weyl sum at q=1", grid4(max), |t| {
        let (lambda, mu) = pair(t);
        Ok(compare(
            multiplicity_c2_closed(lambda, mu)?.value,
            multiplicity_c2_weyl_sum::<i64>(lambda, mu)?.eval_at_one()?,
        ))
    })
}

pub fn check_c2_highest_weight(max: u32) -> Check {
    run_check("c2 highest weight multiplicity is 1", grid2(max), |(m, n)| {
        let lambda = FundCoord::new(m, n);
        Ok(compare(multiplicity_c2_closed(lambda, lambda)?.value, 1))
    })
}

/// Runs every suite for `algebra`. Multiplicity grids use `[0, max]⁴`,
/// partition oracles `[0, 5·max]²` and the q = 1 closed forms `[0, 10·max]²`.
pub fn verify(algebra: Algebra, max: u32) -> VerifyReport {
    let (wide, wider) = (max.saturating_mul(5), max.saturating_mul(10));
    let checks = match algebra {
        Algebra::G2 => vec![
            check_g2_qmultiplicity(max),
            check_g2_qpartition(wide),
            check_g2_tarski(wider),
            check_g2_multiplicity_methods(max),
            check_g2_case_audit(max),
        ],
        Algebra::C2 => vec![
            check_c2_qpartition(wide),
            check_c2_closed_partition(wider, RegionRule::Corrected),
            check_c2_multiplicity(max),
            check_c2_highest_weight(wider),
        ],
    };
    VerifyReport { algebra, grid_max: max, checks }
}

pub const TABLE_HEADER: &str = "m,n,x,y,a,b,c,d,e,f,case,mq_coeffs,m_at_1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub tuple: [u32; 4],
    pub abcdef: [i64; 6],
    pub case: String,
    pub mq: QPoly,
    pub m_at_one: i64,
}

impl TableRow {
    pub fn new(tuple: [u32; 4]) -> Result<Self> {
        let (lambda, mu) = pair(tuple);
        let r = qmultiplicity_closed::<i64>(lambda, mu)?;
        Ok(Self {
            tuple,
            abcdef: r.case_data.values(),
            case: r.case_data.label.to_string(),
            mq: r.mq,
            m_at_one: r.m_at_one,
        })
    }

    /// One CSV line without the trailing newline. The zero polynomial is written as `0`.
    pub fn to_csv(&self) -> String {
        let mut line = String::new();
        for v in self.tuple {
            write!(line, "{v},").unwrap();
        }
        for v in self.abcdef {
            write!(line, "{v},").unwrap();
        }
        let coeffs = if self.mq.is_zero() {
            "0".to_owned()
        } else {
            self.mq.coeffs().iter().map(i64::to_string).collect::<Vec<_>>().join("|")
        };
        write!(line, "{},{coeffs},{}", self.case, self.m_at_one).unwrap();
        line
    }
}

/// One row per `(m, n, x, y) ∈ [0, max]⁴` in lexicographic order.
pub fn table_rows(max: u32) -> Result<Vec<TableRow>> {
    grid4(max).map(TableRow::new).collect()
}

pub fn write_table<W: Write>(rows: &[TableRow], mut out: W) -> io::Result<()> {
    writeln!(out, "{TABLE_HEADER}")?;
    for row in rows {
        writeln!(out, "{}", row.to_csv())?;
    }
    out.flush()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids_are_lexicographic() {
        let g: Vec<_> = grid2(1).collect();
        assert_eq!(g, vec![(0, 0), (0, 1), (1, 0), (1, 1)]);
        assert_eq!(grid4(2).count(), 81);
        assert_eq!(grid4(1).nth(1), Some([0, 0, 0, 1]));
    }

    #[test]
    fn small_verify_runs_clean() {
        for algebra in [Algebra::G2, Algebra::C2] {
            let report = verify(algebra, 2);
            assert!(report.passed(), "{report:?}");
            assert!(report.checks.iter().all(|c| c.cases > 0));
        }
    }

    #[test]
    fn missing_edge_region_is_detected() {
        let check = check_c2_closed_partition(20, RegionRule::WithoutEdge);
        assert!(check.mismatches > 0);
        assert!(check.first_mismatch.unwrap().starts_with("(3, 2)"));
    }

    #[test]
    fn table_rows_match_fixtures() {
        let rows = table_rows(0).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].to_csv(), "0,0,0,0,0,0,-1,-1,-2,-4,P,1,1");

        let rows = table_rows(1).unwrap();
        let row = rows.iter().find(|r| r.tuple == [0, 1, 0, 0]).unwrap();
        assert_eq!(row.case, "PQR");
        assert_eq!(row.mq.coeffs(), &[0, 1, 0, 0, 0, 1]);
        assert!(row.to_csv().ends_with("PQR,0|1|0|0|0|1,2"));

        let row = TableRow::new([5, 6, 0, 0]).unwrap();
        assert_eq!(row.abcdef, [28, 17, 22, 10, 4, 1]);
        assert_eq!(row.case, "PQRST");
    }

    #[test]
    fn csv_has_header_and_one_line_per_row() {
        let rows = table_rows(1).unwrap();
        let mut buf = Vec::new();
        write_table(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0], TABLE_HEADER);
        assert_eq!(lines.len(), 17);
        assert!(lines.iter().all(|l| l.split(',').count() == 13));
    }

    #[test]
    fn report_json_round_trips() {
        let report = verify(Algebra::C2, 1);
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.starts_with(r#"{"algebra":"c2","grid_max":1,"checks":[{"name":"#));
        let back: VerifyReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
    }
}
