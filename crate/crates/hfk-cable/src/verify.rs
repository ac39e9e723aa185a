//! Cross-validation of a companion complex and its cable tables: structural
//! axioms, symmetry, degree and extreme-row predictions, and the Euler
//! characteristic identity against the Alexander polynomial.

use crate::alexander::{cable_alexander, euler_poly, torsion_entries};
use crate::cable::{cable_hfk, top_groups, CableParams, ValidRange};
use crate::complex::FilteredComplex;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Warn,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyCheck {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<VerifyCheck>,
}

impl VerifyReport {
    pub fn exit_code(&self) -> i32 {
        if self.checks.iter().any(|c| c.status == CheckStatus::Fail) {
            1
        } else {
            0
        }
    }

    fn push(&mut self, name: &'static str, status: CheckStatus, detail: impl Into<String>) {
        self.checks.push(VerifyCheck { name, status, detail: detail.into() });
    }
}

/// Run the full check battery.  Without explicit parameters the cable under
/// test is (2, 2n+1) with n = 2d + 1, the smallest twisting that clears the
/// heuristic bound.
pub fn run_verify(cx: &FilteredComplex, params: Option<&CableParams>) -> VerifyReport {
    let mut report = VerifyReport::default();

    let validation = cx.validate();
    if let Some(first) = validation.checks.iter().find(|c| !c.passed) {
        let detail = first.detail.as_deref().unwrap_or("");
        report.push(
            "complex_validation",
            CheckStatus::Fail,
            format!("{}: {detail}", first.name),
        );
        return report;
    }
    report.push("complex_validation", CheckStatus::Pass, "all four axioms hold");

    let graded = match cx.associated_graded() {
        Ok(t) => t,
        Err(e) => {
            report.push("complex_validation", CheckStatus::Fail, format!("graded homology: {e}"));
            return report;
        }
    };
    let d = match graded.degree() {
        Ok(d) => d,
        Err(e) => {
            report.push("complex_validation", CheckStatus::Fail, format!("{e}"));
            return report;
        }
    };

    let torsion = torsion_entries(&graded);
    if torsion.is_empty() {
        report.push("graded_torsion", CheckStatus::Pass, "graded homology is torsion free");
    } else {
        report.push(
            "graded_torsion",
            CheckStatus::Warn,
            format!("torsion at (alexander, maslov) {torsion:?}; euler checks see only ranks"),
        );
    }

    match graded.symmetry_check() {
        Ok(()) => report.push("companion_symmetry", CheckStatus::Pass, "table equals its reflection"),
        Err(e) => report.push("companion_symmetry", CheckStatus::Fail, format!("{e}")),
    }

    let default_params = CableParams::new(2, 2 * d + 1);
    let params = params.cloned().unwrap_or(default_params);
    let (p, n) = (params.p, params.n);

    let cable = match cable_hfk(cx, &params) {
        Ok(c) => c,
        Err(e) => {
            report.push("cable_construction", CheckStatus::Fail, format!("{e}"));
            return report;
        }
    };
    report.push(
        "cable_construction",
        CheckStatus::Pass,
        format!("(p, n) = ({p}, {n}), {} entries", cable.table.len()),
    );

    if cable.assumptions.conjectural {
        report.push(
            "large_n_bound",
            CheckStatus::Warn,
            format!(
                "|n| = {} below heuristic bound {}; structure checks downgrade to warnings",
                n.abs(),
                cable.assumptions.heuristic_bound
            ),
        );
    } else {
        report.push(
            "large_n_bound",
            CheckStatus::Pass,
            format!("|n| = {} meets heuristic bound {}", n.abs(), cable.assumptions.heuristic_bound),
        );
    }
    // a mismatch below the bound indicts the extrapolation, not the table
    let mismatch = if cable.assumptions.conjectural { CheckStatus::Warn } else { CheckStatus::Fail };

    let prediction = match top_groups(cx, p, n) {
        Ok(t) => t,
        Err(e) => {
            report.push("cable_degree", CheckStatus::Fail, format!("{e}"));
            return report;
        }
    };
    let deg = prediction.degree;

    let extreme_in_range = cable.valid_range.contains(prediction.alexander);
    if !extreme_in_range {
        report.push(
            "cable_degree",
            CheckStatus::Warn,
            format!("not checked: grading {} outside the valid range", prediction.alexander),
        );
    } else {
        let observed = if n > 0 {
            cable.table.degree().ok()
        } else {
            cable.table.alexander_range().map(|(lo, _)| lo)
        };
        if observed == Some(prediction.alexander) {
            report.push(
                "cable_degree",
                CheckStatus::Pass,
                format!("extreme grading {} matches p*d + correction (deg = {deg})", prediction.alexander),
            );
        } else {
            report.push(
                "cable_degree",
                mismatch,
                format!("extreme grading is {observed:?}, expected {}", prediction.alexander),
            );
        }
    }

    if extreme_in_range && cable.valid_range.contains(prediction.next_alexander) {
        let top_ok = cable.table.row(prediction.alexander) == prediction.top;
        let next_ok = cable.table.row(prediction.next_alexander) == prediction.next;
        if top_ok && next_ok {
            report.push(
                "extreme_rows",
                CheckStatus::Pass,
                "outermost rows repeat the companion's top row",
            );
        } else {
            report.push(
                "extreme_rows",
                mismatch,
                format!("row match: outermost {top_ok}, neighbor {next_ok}"),
            );
        }
    } else {
        report.push("extreme_rows", CheckStatus::Warn, "not checked: rows outside the valid range");
    }

    if cable.valid_range == ValidRange::All {
        let lhs = euler_poly(&cable.table);
        match cable_alexander(&euler_poly(&graded), p, p * n + 1) {
            Ok(rhs) if lhs == rhs => {
                report.push(
                    "euler_identity",
                    CheckStatus::Pass,
                    "table euler characteristic equals the cable alexander polynomial",
                );
            }
            Ok(rhs) => {
                report.push(
                    "euler_identity",
                    mismatch,
                    format!("table gives {lhs}, polynomial formula gives {rhs}"),
                );
            }
            Err(e) => {
                report.push("euler_identity", CheckStatus::Fail, format!("{e}"));
            }
        }
    } else {
        report.push("euler_identity", CheckStatus::Warn, "not checked: partial table");
    }

    report
}
