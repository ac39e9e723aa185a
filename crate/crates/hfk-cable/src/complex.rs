//! Filtered chain complexes of knot type: generators carry a Maslov grading
//! and an Alexander filtration level, the differential drops Maslov by one
//! and never increases the filtration.

use crate::homalg::{chain_homology, AbelianGroup, GradedGroup, HomologyError, IntMatrix};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub id: String,
    pub maslov: i64,
    pub alexander: i64,
}

impl Generator {
    pub fn new(id: impl Into<String>, maslov: i64, alexander: i64) -> Self {
        Generator { id: id.into(), maslov, alexander }
    }
}

/// One differential entry: `d(from)` contains `coefficient * to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub from: String,
    pub to: String,
    pub coefficient: i64,
}

impl Edge {
    pub fn new(from: impl Into<String>, to: impl Into<String>, coefficient: i64) -> Self {
        Edge { from: from.into(), to: to.into(), coefficient }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("duplicate generator id {0:?}")]
    DuplicateId(String),
    #[error("differential references unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("differential entry {from:?} -> {to:?} has zero coefficient")]
    ZeroCoefficient { from: String, to: String },
    #[error("duplicate differential entry {from:?} -> {to:?}")]
    DuplicateEdge { from: String, to: String },
    #[error("edge {from:?} -> {to:?} changes the maslov grading by {drop}, expected 1")]
    UngradedEdge { from: String, to: String, drop: i64 },
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

/// A named filtered complex.  Construction checks referential integrity only;
/// the grading and differential axioms are the business of [`validate`].
///
/// Equality is by value: storage order of generators and edges does not
/// matter, so a complex compares equal to its serialized-and-reparsed copy.
///
/// [`validate`]: FilteredComplex::validate
#[derive(Clone, Debug, Eq)]
pub struct FilteredComplex {
    name: String,
    generators: Vec<Generator>,
    differential: Vec<Edge>,
    index: BTreeMap<String, usize>,
}

impl PartialEq for FilteredComplex {
    fn eq(&self, other: &Self) -> bool {
        fn sorted_gens(cx: &FilteredComplex) -> Vec<&Generator> {
            let mut gens: Vec<&Generator> = cx.generators.iter().collect();
            gens.sort_by_key(|g| &g.id);
            gens
        }
        fn sorted_edges(cx: &FilteredComplex) -> Vec<&Edge> {
            let mut edges: Vec<&Edge> = cx.differential.iter().collect();
            edges.sort_by_key(|e| (&e.from, &e.to));
            edges
        }
        self.name == other.name
            && sorted_gens(self) == sorted_gens(other)
            && sorted_edges(self) == sorted_edges(other)
    }
}

impl FilteredComplex {
    pub fn new(
        name: impl Into<String>,
        generators: Vec<Generator>,
        differential: Vec<Edge>,
    ) -> Result<Self, ComplexError> {
        let mut index = BTreeMap::new();
        for (i, g) in generators.iter().enumerate() {
            if index.insert(g.id.clone(), i).is_some() {
                return Err(ComplexError::DuplicateId(g.id.clone()));
            }
        }
        let mut seen = BTreeMap::new();
        for e in &differential {
            for end in [&e.from, &e.to] {
                if !index.contains_key(end) {
                    return Err(ComplexError::UnknownGenerator(end.clone()));
                }
            }
            if e.coefficient == 0 {
                return Err(ComplexError::ZeroCoefficient {
                    from: e.from.clone(),
                    to: e.to.clone(),
                });
            }
            if seen.insert((e.from.clone(), e.to.clone()), ()).is_some() {
                return Err(ComplexError::DuplicateEdge {
                    from: e.from.clone(),
                    to: e.to.clone(),
                });
            }
        }
        Ok(FilteredComplex { name: name.into(), generators, differential, index })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn differential(&self) -> &[Edge] {
        &self.differential
    }

    pub fn generator(&self, id: &str) -> Option<&Generator> {
        self.index.get(id).map(|&i| &self.generators[i])
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Largest Alexander level among the generators.
    pub fn max_alexander(&self) -> Option<i64> {
        self.generators.iter().map(|g| g.alexander).max()
    }

    pub fn min_alexander(&self) -> Option<i64> {
        self.generators.iter().map(|g| g.alexander).min()
    }

    /// Verify the defining axioms, one named check per axiom.  Never fails
    /// outright: every problem lands in the report.
    pub fn validate(&self) -> ValidationReport {
        let mut checks = Vec::new();
        let mut warnings = Vec::new();

        let d2 = self.differential_square_witness();
        checks.push(ValidationCheck::from_witness("differential_squared_zero", d2));

        let drop = self.differential.iter().find_map(|e| {
            let step = self.generator(&e.from).unwrap().maslov - self.generator(&e.to).unwrap().maslov;
            (step != 1).then(|| {
                format!("edge {} -> {} changes the maslov grading by {step}", e.from, e.to)
            })
        });
        checks.push(ValidationCheck::from_witness("maslov_drop_one", drop));

        let filt = self.differential.iter().find_map(|e| {
            let from = self.generator(&e.from).unwrap().alexander;
            let to = self.generator(&e.to).unwrap().alexander;
            (to > from).then(|| {
                format!("edge {} -> {} raises the alexander filtration from {from} to {to}", e.from, e.to)
            })
        });
        checks.push(ValidationCheck::from_witness("alexander_nonincreasing", filt));

        let structural_ok = checks.iter().all(|c| c.passed);
        let total = if structural_ok {
            match self.total_homology() {
                Ok(h) => {
                    let expected = h.len() == 1
                        && h.get(0).map(|g| *g == AbelianGroup::free(1)).unwrap_or(false);
                    if expected {
                        None
                    } else {
                        Some(format!("total homology is {h}, expected (Z)_{{0}}"))
                    }
                }
                Err(e) => Some(format!("total homology not computable: {e}")),
            }
        } else {
            Some("skipped: differential axioms fail".to_string())
        };
        checks.push(ValidationCheck::from_witness("total_homology_z_maslov_zero", total));

        if structural_ok {
            if let Ok(graded) = self.associated_graded() {
                for (a, m, group) in graded.entries() {
                    if group.has_torsion() {
                        warnings.push(format!(
                            "torsion {group} in the associated graded at alexander {a}, maslov {m}"
                        ));
                    }
                }
            }
        }

        ValidationReport { checks, warnings }
    }

    // first generator whose differential fails d^2 = 0, with the offending target
    fn differential_square_witness(&self) -> Option<String> {
        let mut out: BTreeMap<&str, Vec<(&str, i64)>> = BTreeMap::new();
        for e in &self.differential {
            out.entry(e.from.as_str()).or_default().push((e.to.as_str(), e.coefficient));
        }
        for g in &self.generators {
            let mut acc: BTreeMap<&str, BigInt> = BTreeMap::new();
            for (mid, c1) in out.get(g.id.as_str()).into_iter().flatten() {
                for (end, c2) in out.get(mid).into_iter().flatten() {
                    *acc.entry(end).or_insert_with(BigInt::zero) += BigInt::from(*c1) * c2;
                }
            }
            if let Some((end, c)) = acc.iter().find(|(_, c)| !c.is_zero()) {
                return Some(format!("d^2({}) hits {end} with coefficient {c}", g.id));
            }
        }
        None
    }

    /// Boundary matrices grouped by Maslov grading, mapping level `m` to
    /// level `m - 1`.  Requires every edge to drop the grading by exactly one.
    fn graded_boundaries(&self) -> Result<GradedBoundaries, ComplexError> {
        let mut levels: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for (i, g) in self.generators.iter().enumerate() {
            levels.entry(g.maslov).or_default().push(i);
        }
        let position: BTreeMap<usize, usize> = levels
            .values()
            .flat_map(|ids| ids.iter().enumerate().map(|(p, &i)| (i, p)))
            .collect();
        let mut matrices: BTreeMap<i64, IntMatrix> = BTreeMap::new();
        for e in &self.differential {
            let from = self.index[&e.from];
            let to = self.index[&e.to];
            let m_from = self.generators[from].maslov;
            let m_to = self.generators[to].maslov;
            if m_from - m_to != 1 {
                return Err(ComplexError::UngradedEdge {
                    from: e.from.clone(),
                    to: e.to.clone(),
                    drop: m_from - m_to,
                });
            }
            let rows = levels.get(&m_to).map_or(0, Vec::len);
            let cols = levels[&m_from].len();
            let mat = matrices
                .entry(m_from)
                .or_insert_with(|| IntMatrix::zero(rows, cols));
            let mut v = mat.get(position[&to], position[&from]);
            v += BigInt::from(e.coefficient);
            mat.set(position[&to], position[&from], v);
        }
        Ok(GradedBoundaries { levels, matrices })
    }

    /// Homology of the whole complex in each Maslov grading, forgetting the
    /// filtration.
    pub fn total_homology(&self) -> Result<GradedGroup, ComplexError> {
        let b = self.graded_boundaries()?;
        let mut h = GradedGroup::new();
        for (&m, ids) in &b.levels {
            let dim = ids.len();
            let boundary_out = b.boundary_from(m, dim);
            let boundary_in = b.boundary_into(m, dim);
            h.insert(m, chain_homology(&boundary_in, &boundary_out)?);
        }
        Ok(h)
    }

    /// Subcomplex spanned by the generators with Alexander level at most `j`.
    pub fn filtration_subcomplex(&self, j: i64) -> FilteredComplex {
        self.span(format!("{}[A<={j}]", self.name), |g| g.alexander <= j)
    }

    /// Quotient by the filtration subcomplex at level `j`: generators above
    /// `j` survive, differential entries landing in the subcomplex are
    /// dropped.
    pub fn quotient_complex(&self, j: i64) -> FilteredComplex {
        self.span(format!("{}/[A<={j}]", self.name), |g| g.alexander > j)
    }

    fn span(&self, name: String, keep: impl Fn(&Generator) -> bool) -> FilteredComplex {
        let generators: Vec<Generator> =
            self.generators.iter().filter(|g| keep(g)).cloned().collect();
        let kept: BTreeMap<&str, ()> =
            generators.iter().map(|g| (g.id.as_str(), ())).collect();
        let differential: Vec<Edge> = self
            .differential
            .iter()
            .filter(|e| kept.contains_key(e.from.as_str()) && kept.contains_key(e.to.as_str()))
            .cloned()
            .collect();
        FilteredComplex::new(name, generators, differential)
            .expect("a span of a well formed complex is well formed")
    }

    /// Homology of the filtration subcomplex at level `j`.
    pub fn filtration_homology(&self, j: i64) -> Result<GradedGroup, ComplexError> {
        self.filtration_subcomplex(j).total_homology()
    }

    /// Homology of the associated graded object: only the differential
    /// entries preserving the Alexander level survive, and homology is taken
    /// level by level.
    pub fn associated_graded(&self) -> Result<HFKTable, ComplexError> {
        let mut table = HFKTable::new();
        let min = match self.min_alexander() {
            Some(a) => a,
            None => return Ok(table),
        };
        let max = self.max_alexander().unwrap();
        for a in min..=max {
            let generators: Vec<Generator> =
                self.generators.iter().filter(|g| g.alexander == a).cloned().collect();
            if generators.is_empty() {
                continue;
            }
            let kept: BTreeMap<&str, ()> =
                generators.iter().map(|g| (g.id.as_str(), ())).collect();
            let differential: Vec<Edge> = self
                .differential
                .iter()
                .filter(|e| kept.contains_key(e.from.as_str()) && kept.contains_key(e.to.as_str()))
                .cloned()
                .collect();
            let piece = FilteredComplex::new(format!("{}@{a}", self.name), generators, differential)
                .expect("graded piece of a well formed complex is well formed");
            for (m, group) in piece.total_homology()?.iter() {
                table.insert(a, m, group.clone());
            }
        }
        Ok(table)
    }

    /// Dual complex: differential transposed, both gradings negated.  This is
    /// the complex of the mirror knot.  Torsion-free inputs dualize cleanly;
    /// for complexes whose homology has torsion the universal coefficient
    /// correction is not applied, which [`validate`] reports as a warning.
    ///
    /// [`validate`]: FilteredComplex::validate
    pub fn mirror(&self) -> FilteredComplex {
        let name = match self.name.strip_prefix("mirror(").and_then(|s| s.strip_suffix(')')) {
            Some(inner) => inner.to_string(),
            None => format!("mirror({})", self.name),
        };
        let generators = self
            .generators
            .iter()
            .map(|g| Generator::new(g.id.clone(), -g.maslov, -g.alexander))
            .collect();
        let differential = self
            .differential
            .iter()
            .map(|e| Edge::new(e.to.clone(), e.from.clone(), e.coefficient))
            .collect();
        FilteredComplex::new(name, generators, differential)
            .expect("mirror of a well formed complex is well formed")
    }
}

struct GradedBoundaries {
    levels: BTreeMap<i64, Vec<usize>>,
    matrices: BTreeMap<i64, IntMatrix>,
}

impl GradedBoundaries {
    fn boundary_from(&self, m: i64, dim: usize) -> IntMatrix {
        match self.matrices.get(&m) {
            Some(mat) => mat.clone(),
            None => {
                let rows = self.levels.get(&(m - 1)).map_or(0, Vec::len);
                IntMatrix::zero(rows, dim)
            }
        }
    }

    fn boundary_into(&self, m: i64, dim: usize) -> IntMatrix {
        match self.matrices.get(&(m + 1)) {
            Some(mat) => mat.clone(),
            None => {
                let cols = self.levels.get(&(m + 1)).map_or(0, Vec::len);
                IntMatrix::zero(dim, cols)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: Option<String>,
}

impl ValidationCheck {
    fn from_witness(name: &'static str, witness: Option<String>) -> Self {
        ValidationCheck { name, passed: witness.is_none(), detail: witness }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<ValidationCheck>,
    pub warnings: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableError {
    #[error("table has no nonzero entries")]
    EmptyTable,
    #[error("table is asymmetric at alexander {alexander}, maslov {maslov}")]
    Asymmetric { alexander: i64, maslov: i64 },
    #[error("entry at alexander {alexander}, maslov {maslov} conflicts with its reflection")]
    ConflictingEntry { alexander: i64, maslov: i64 },
}

/// Bigraded table of abelian groups indexed by (Alexander, Maslov); zero
/// groups are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HFKTable {
    entries: BTreeMap<(i64, i64), AbelianGroup>,
}

impl HFKTable {
    pub fn new() -> Self {
        HFKTable::default()
    }

    pub fn insert(&mut self, alexander: i64, maslov: i64, group: AbelianGroup) {
        if group.is_zero() {
            return;
        }
        let prev = self.entries.insert((alexander, maslov), group);
        assert!(prev.is_none(), "duplicate table entry at ({alexander}, {maslov})");
    }

    /// Insert, tolerating an identical existing entry; a differing one is a
    /// conflict.
    pub fn merge(&mut self, alexander: i64, maslov: i64, group: AbelianGroup) -> Result<(), TableError> {
        if group.is_zero() {
            return Ok(());
        }
        match self.entries.get(&(alexander, maslov)) {
            None => {
                self.entries.insert((alexander, maslov), group);
                Ok(())
            }
            Some(existing) if *existing == group => Ok(()),
            Some(_) => Err(TableError::ConflictingEntry { alexander, maslov }),
        }
    }

    pub fn get(&self, alexander: i64, maslov: i64) -> Option<&AbelianGroup> {
        self.entries.get(&(alexander, maslov))
    }

    pub fn entries(&self) -> impl Iterator<Item = (i64, i64, &AbelianGroup)> {
        self.entries.iter().map(|(&(a, m), g)| (a, m, g))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Top nonzero Alexander grading.
    pub fn degree(&self) -> Result<i64, TableError> {
        self.entries.keys().map(|&(a, _)| a).max().ok_or(TableError::EmptyTable)
    }

    pub fn alexander_range(&self) -> Option<(i64, i64)> {
        let mut it = self.entries.keys().map(|&(a, _)| a);
        let first = it.next()?;
        let (lo, hi) = it.fold((first, first), |(lo, hi), a| (lo.min(a), hi.max(a)));
        Some((lo, hi))
    }

    pub fn maslov_range(&self) -> Option<(i64, i64)> {
        let mut it = self.entries.keys().map(|&(_, m)| m);
        let first = it.next()?;
        let (lo, hi) = it.fold((first, first), |(lo, hi), m| (lo.min(m), hi.max(m)));
        Some((lo, hi))
    }

    /// All groups at a fixed Alexander grading, as a Maslov graded group.
    pub fn row(&self, alexander: i64) -> GradedGroup {
        let mut row = GradedGroup::new();
        for (&(a, m), g) in &self.entries {
            if a == alexander {
                row.insert(m, g.clone());
            }
        }
        row
    }

    pub fn has_torsion(&self) -> bool {
        self.entries.values().any(|g| g.has_torsion())
    }

    /// Check the reflection symmetry: the group at (i, m) must equal the one
    /// at (-i, m - 2i).
    pub fn symmetry_check(&self) -> Result<(), TableError> {
        for (&(a, m), g) in &self.entries {
            let mirrored = self.entries.get(&(-a, m - 2 * a));
            if mirrored != Some(g) {
                return Err(TableError::Asymmetric { alexander: a, maslov: m });
            }
        }
        Ok(())
    }

    /// Complete a table from its half at nonnegative Alexander gradings by
    /// reflection.  Entries at negative gradings are allowed in the input but
    /// must agree with the reflection of the positive side.
    pub fn symmetrized(&self) -> Result<HFKTable, TableError> {
        let mut out = HFKTable::new();
        for (&(a, m), g) in &self.entries {
            if a >= 0 {
                out.insert(a, m, g.clone());
                if a > 0 {
                    out.merge(-a, m - 2 * a, g.clone())
                        .map_err(|_| TableError::ConflictingEntry { alexander: -a, maslov: m - 2 * a })?;
                }
            }
        }
        for (&(a, m), g) in &self.entries {
            if a < 0 && out.get(a, m) != Some(g) {
                return Err(TableError::ConflictingEntry { alexander: a, maslov: m });
            }
        }
        Ok(out)
    }
}

impl fmt::Display for HFKTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        let mut rows: Vec<i64> = self.entries.keys().map(|&(a, _)| a).collect();
        rows.dedup();
        for (i, a) in rows.iter().rev().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "A={a}: {}", self.row(*a))?;
        }
        Ok(())
    }
}
