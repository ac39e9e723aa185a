//! Knot Floer homology tables of cable knots, assembled from the filtration
//! structure of the companion complex.
//!
//! For a companion knot K with top Alexander grading d, the (2, 2n+1) cable
//! table is built from homologies of the filtration subcomplexes of K, two
//! consecutive Alexander rows per subcomplex, and completed by reflection.
//! General (p, pn+1) cables with n > 0 get a partial table valid above a
//! threshold that depends on a projection parameter c'; cables with n < 0 are
//! built the same way from quotient complexes, bottom up.  All constructions
//! assume the cabling parameter is large; below a heuristic bound the output
//! is labeled conjectural.

use crate::complex::{ComplexError, FilteredComplex, HFKTable, TableError};
use crate::homalg::GradedGroup;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CableParams {
    /// Cabling index, at least 2.
    pub p: i64,
    /// Twisting parameter: the cable is (p, pn+1) for p > 2, and (2, 2n+1)
    /// for p = 2.  Must be nonzero.
    pub n: i64,
    /// Filtration level of the outermost basepoint region in a projection of
    /// the companion; required for p > 2, defaults to 0 for p = 2.
    pub c_prime: Option<i64>,
    /// Accept the cabling parameter as large even below the heuristic bound,
    /// silencing the warning.  The conjectural label stays.
    pub large_n_override: bool,
}

impl CableParams {
    pub fn new(p: i64, n: i64) -> Self {
        CableParams { p, n, c_prime: None, large_n_override: false }
    }

    pub fn with_c_prime(mut self, c_prime: i64) -> Self {
        self.c_prime = Some(c_prime);
        self
    }

    pub fn assume_large_n(mut self) -> Self {
        self.large_n_override = true;
        self
    }
}

/// Alexander gradings where a computed table is authoritative.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ValidRange {
    /// Whole table.
    All,
    /// Only gradings strictly above the bound.
    Above(i64),
    /// Only gradings strictly below the bound.
    Below(i64),
}

impl ValidRange {
    pub fn contains(&self, alexander: i64) -> bool {
        match *self {
            ValidRange::All => true,
            ValidRange::Above(c) => alexander > c,
            ValidRange::Below(c) => alexander < c,
        }
    }
}

/// Parameters and caveats a cable table was computed under.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CableAssumptions {
    pub p: i64,
    pub n: i64,
    /// The projection parameter actually used, if the construction needed one.
    pub c_prime: Option<i64>,
    /// Heuristic bound on |n| for the structural description to apply: twice the
    /// top Alexander grading of the companion.
    pub heuristic_bound: i64,
    /// The caller vouched for |n| being large.
    pub large_n_assumed: bool,
    /// |n| is below the heuristic bound, so the table rests on an unproven
    /// extrapolation.
    pub conjectural: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CableTable {
    pub table: HFKTable,
    pub valid_range: ValidRange,
    pub assumptions: CableAssumptions,
    pub warnings: Vec<String>,
}

/// Top row prediction for a cable table: the extreme Alexander row mirrors
/// the companion's top row, and its neighbor is the same row shifted by one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopGroups {
    pub degree: i64,
    /// Alexander grading of the extreme nonzero row (top for n > 0, bottom
    /// for n < 0).
    pub alexander: i64,
    pub next_alexander: i64,
    pub top: GradedGroup,
    pub next: GradedGroup,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CableError {
    #[error("companion complex fails validation: {0}")]
    InvalidComplex(String),
    #[error("invalid cable parameters: {0}")]
    InvalidParams(String),
    #[error("cabling index p > 2 needs the projection parameter c'")]
    MissingCPrime,
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Table(#[from] TableError),
}

/// Genus bound read off the companion: the top Alexander grading of its
/// associated graded homology.
fn knot_degree(cx: &FilteredComplex) -> Result<i64, CableError> {
    Ok(cx.associated_graded()?.degree()?)
}

fn validated_degree(cx: &FilteredComplex) -> Result<i64, CableError> {
    let report = cx.validate();
    if let Some(check) = report.checks.iter().find(|c| !c.passed) {
        let detail = check.detail.as_deref().unwrap_or("");
        return Err(CableError::InvalidComplex(format!("{}: {detail}", check.name)));
    }
    knot_degree(cx)
}

/// Top Alexander grading of the (p, pn+1) cable (of (2, 2n+1) for p = 2).
pub fn cable_degree(d: i64, p: i64, n: i64) -> i64 {
    if n > 0 {
        p * d + (p - 1) * p * n / 2
    } else {
        p * d + (p - 1) * (p * n.abs() - 2) / 2
    }
}

/// Threshold above which the partial table of a (p, pn+1) cable, n > 0, is
/// authoritative.
pub fn threshold_c(d: i64, p: i64, n: i64, c_prime: i64) -> i64 {
    cable_degree(d, p, n) - p * (n - c_prime) - 1
}

/// Mirror threshold for n < 0: the table is authoritative below its negative.
pub fn threshold_c_neg(d: i64, p: i64, n: i64, c_prime: i64) -> i64 {
    cable_degree(d, p, n) - p * (n.abs() - 1 - c_prime) - 1
}

fn assumptions(
    p: i64,
    n: i64,
    c_prime: Option<i64>,
    d: i64,
    large_n_override: bool,
    warnings: &mut Vec<String>,
) -> CableAssumptions {
    let heuristic_bound = 2 * d;
    let conjectural = n.abs() < heuristic_bound;
    if conjectural && !large_n_override {
        warnings.push(format!(
            "conjectural: |n| = {} is below the heuristic cabling bound {heuristic_bound} \
             (twice the companion's top alexander grading)",
            n.abs()
        ));
    }
    CableAssumptions {
        p,
        n,
        c_prime,
        heuristic_bound,
        large_n_assumed: large_n_override,
        conjectural,
    }
}

/// Full knot Floer table of the (2, 2n+1) cable, n > 0.
///
/// Row pairs descend from the top grading 2d + n: the pair at
/// (2d + n - 2k, 2d + n - 2k - 1) copies the homology of the filtration
/// subcomplex at level k - d, with Maslov shifts 2(k - d) and 2(k - d) + 1.
/// Negative Alexander gradings come from the reflection symmetry.
pub fn cable2_hfk(
    cx: &FilteredComplex,
    n: i64,
    large_n_override: bool,
) -> Result<CableTable, CableError> {
    if n <= 0 {
        return Err(CableError::InvalidParams(format!(
            "cable2 needs n > 0, got {n}; use the negative cable construction"
        )));
    }
    let d = validated_degree(cx)?;
    let mut warnings = Vec::new();
    let assumptions = assumptions(2, n, None, d, large_n_override, &mut warnings);

    let mut half = HFKTable::new();
    let mut k = 0;
    loop {
        let i1 = 2 * d + n - 2 * k;
        let i2 = i1 - 1;
        if i1 < 0 && i2 < 0 {
            break;
        }
        let level = cx.filtration_homology(k - d)?;
        for (nu, group) in level.iter() {
            if i1 >= 0 {
                half.insert(i1, nu - 2 * (k - d), group.clone());
            }
            if i2 >= 0 {
                half.insert(i2, nu - 2 * (k - d) - 1, group.clone());
            }
        }
        k += 1;
    }
    let table = half.symmetrized()?;
    Ok(CableTable { table, valid_range: ValidRange::All, assumptions, warnings })
}

/// Partial knot Floer table of the (p, pn+1) cable, n > 0, authoritative at
/// Alexander gradings above the threshold determined by `c_prime`.
pub fn cablep_hfk(
    cx: &FilteredComplex,
    p: i64,
    n: i64,
    c_prime: i64,
    large_n_override: bool,
) -> Result<CableTable, CableError> {
    if p < 2 {
        return Err(CableError::InvalidParams(format!("cabling index must be at least 2, got {p}")));
    }
    if n <= 0 {
        return Err(CableError::InvalidParams(format!(
            "positive cable construction needs n > 0, got {n}"
        )));
    }
    let d = validated_degree(cx)?;
    let mut warnings = Vec::new();
    let assumptions = assumptions(p, n, Some(c_prime), d, large_n_override, &mut warnings);

    let deg = cable_degree(d, p, n);
    let c = threshold_c(d, p, n, c_prime);
    let mut table = HFKTable::new();
    let mut k = 0;
    loop {
        let i1 = deg - p * k;
        let i2 = i1 - 1;
        if i1 <= c && i2 <= c {
            break;
        }
        let level = cx.filtration_homology(k - d)?;
        for (nu, group) in level.iter() {
            if i1 > c {
                table.insert(i1, nu - 2 * (k - d), group.clone());
            }
            if i2 > c {
                table.insert(i2, nu - 2 * (k - d) - 1, group.clone());
            }
        }
        k += 1;
    }
    Ok(CableTable { table, valid_range: ValidRange::Above(c), assumptions, warnings })
}

/// Knot Floer table of the (p, pn+1) cable with n < 0, built bottom up from
/// quotient complexes of the companion.
///
/// The row pair at (pk - deg, pk - deg + 1) copies the homology of the
/// quotient by the filtration at level d - k - 1, with Maslov shifts
/// 2(d - k) and 2(d - k) - 1.  For p = 2 the threshold is negative whenever
/// |n| clears the heuristic bound, and the table closes up to a full one by
/// reflection; otherwise the result is partial, authoritative strictly below
/// the negated threshold.
pub fn cablep_neg_hfk(
    cx: &FilteredComplex,
    p: i64,
    n: i64,
    c_prime: Option<i64>,
    large_n_override: bool,
) -> Result<CableTable, CableError> {
    if p < 2 {
        return Err(CableError::InvalidParams(format!("cabling index must be at least 2, got {p}")));
    }
    if n >= 0 {
        return Err(CableError::InvalidParams(format!(
            "negative cable construction needs n < 0, got {n}"
        )));
    }
    let c_prime = match c_prime {
        Some(c) => c,
        None if p == 2 => 0,
        None => return Err(CableError::MissingCPrime),
    };
    let d = validated_degree(cx)?;
    let mut warnings = Vec::new();
    let assumptions = assumptions(p, n, Some(c_prime), d, large_n_override, &mut warnings);

    let deg = cable_degree(d, p, n);
    let c = threshold_c_neg(d, p, n, c_prime);
    let mut lower = HFKTable::new();
    let mut k = 0;
    loop {
        let i1 = p * k - deg;
        let i2 = i1 + 1;
        if i1 >= -c && i2 >= -c {
            break;
        }
        let level = cx.quotient_complex(d - k - 1).total_homology()?;
        for (nu, group) in level.iter() {
            if i1 < -c {
                lower.insert(i1, nu - 2 * (d - k), group.clone());
            }
            if i2 < -c {
                lower.insert(i2, nu - 2 * (d - k) + 1, group.clone());
            }
        }
        k += 1;
    }

    if p == 2 && c < 0 {
        // the computed gradings reach past the center, so reflection closes
        // the table; overlapping entries must agree
        let mut full = lower.clone();
        for (a, m, group) in lower.entries() {
            full.merge(-a, m - 2 * a, group.clone())?;
        }
        Ok(CableTable { table: full, valid_range: ValidRange::All, assumptions, warnings })
    } else {
        Ok(CableTable { table: lower, valid_range: ValidRange::Below(-c), assumptions, warnings })
    }
}

/// Route to the right construction for the given parameters.
pub fn cable_hfk(cx: &FilteredComplex, params: &CableParams) -> Result<CableTable, CableError> {
    if params.p < 2 {
        return Err(CableError::InvalidParams(format!(
            "cabling index must be at least 2, got {}",
            params.p
        )));
    }
    if params.n == 0 {
        return Err(CableError::InvalidParams("twisting parameter n must be nonzero".into()));
    }
    if params.n < 0 {
        cablep_neg_hfk(cx, params.p, params.n, params.c_prime, params.large_n_override)
    } else if params.p == 2 {
        cable2_hfk(cx, params.n, params.large_n_override)
    } else {
        match params.c_prime {
            Some(c) => cablep_hfk(cx, params.p, params.n, c, params.large_n_override),
            None => Err(CableError::MissingCPrime),
        }
    }
}

/// Predicted extreme rows of a cable table: the outermost row copies the
/// companion's top row, its neighbor is the same row with a Maslov shift.
pub fn top_groups(cx: &FilteredComplex, p: i64, n: i64) -> Result<TopGroups, CableError> {
    if p < 2 || n == 0 {
        return Err(CableError::InvalidParams(format!("need p >= 2 and n != 0, got p = {p}, n = {n}")));
    }
    let d = validated_degree(cx)?;
    let top_row = cx.associated_graded()?.row(d);
    let degree = cable_degree(d, p, n);
    if n > 0 {
        Ok(TopGroups {
            degree,
            alexander: degree,
            next_alexander: degree - 1,
            top: top_row.clone(),
            next: top_row.shifted(-1),
        })
    } else {
        Ok(TopGroups {
            degree,
            alexander: -degree,
            next_alexander: -degree + 1,
            top: top_row.shifted(-2 * d),
            next: top_row.shifted(-2 * d + 1),
        })
    }
}
