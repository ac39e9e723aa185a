//! Built-in torus knot data: staircase complexes for the (2, odd) family,
//! closed-form homology tables, and grading propagation from holomorphic
//! disk counts.

use crate::complex::{Edge, FilteredComplex, Generator, HFKTable};
use crate::homalg::AbelianGroup;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TorusError {
    #[error("staircase parameter must be nonzero")]
    ZeroParameter,
}

/// The unknot complex: a single generator at bidegree (0, 0).
pub fn unknot() -> FilteredComplex {
    FilteredComplex::new("unknot", vec![Generator::new("x0", 0, 0)], vec![])
        .expect("one generator, no differential")
}

/// Staircase model complex of T(2, 2m+1) for m > 0, and of its mirror
/// T(2, 2m-1) for m < 0.
///
/// For m > 0 the generators are x_0, ..., x_{2m} with maslov(x_j) = -j and
/// alexander(x_j) = m - j; the differential sends each odd-index generator to
/// its successor.
pub fn staircase_t2(m: i64) -> Result<FilteredComplex, TorusError> {
    if m == 0 {
        return Err(TorusError::ZeroParameter);
    }
    if m < 0 {
        let name = format!("T(2,{}) staircase", 2 * m - 1);
        return Ok(staircase_t2(-m)?.mirror().with_name(name));
    }
    let generators = (0..=2 * m).map(|j| Generator::new(format!("x{j}"), -j, m - j)).collect();
    let differential = (0..2 * m)
        .filter(|j| j % 2 == 1)
        .map(|j| Edge::new(format!("x{j}"), format!("x{}", j + 1), 1))
        .collect();
    FilteredComplex::new(format!("T(2,{}) staircase", 2 * m + 1), generators, differential)
        .map_err(|e| unreachable!("staircase construction is well formed: {e}"))
}

/// Knot Floer homology of T(2, 2n+1) in closed form: a single Z on each
/// diagonal position.
pub fn hfk_torus_2(n: i64) -> HFKTable {
    let mut table = HFKTable::new();
    if n >= 0 {
        for i in -n..=n {
            table.insert(i, i - n, AbelianGroup::free(1));
        }
    } else {
        for i in n + 1..=-n - 1 {
            table.insert(i, i - n - 1, AbelianGroup::free(1));
        }
    }
    table
}

/// Knot Floer homology of T(3, 7).
pub fn hfk_torus_3_7() -> HFKTable {
    let mut half = HFKTable::new();
    for (i, m) in [(6, 0), (5, -1), (3, -2), (2, -3), (0, -4)] {
        half.insert(i, m, AbelianGroup::free(1));
    }
    half.symmetrized().expect("half table has no negative entries")
}

/// Count data of one holomorphic disk between two generators of a doubly
/// pointed (plus an auxiliary basepoint) Heegaard diagram.  A `None` Maslov
/// index records a disk whose index is not pinned down; such disks still
/// constrain both filtrations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiskDatum {
    pub from_id: String,
    pub to_id: String,
    pub maslov_index: Option<i64>,
    pub n_w: u32,
    pub n_z: u32,
    pub n_zprime: u32,
}

impl DiskDatum {
    pub fn new(
        from_id: impl Into<String>,
        to_id: impl Into<String>,
        maslov_index: impl Into<Option<i64>>,
        n_w: u32,
        n_z: u32,
        n_zprime: u32,
    ) -> Self {
        DiskDatum {
            from_id: from_id.into(),
            to_id: to_id.into(),
            maslov_index: maslov_index.into(),
            n_w,
            n_z,
            n_zprime,
        }
    }
}

/// Absolute gradings of one reference generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Anchor {
    pub id: String,
    pub maslov: i64,
    pub filt_z: i64,
    pub filt_zprime: i64,
}

impl Anchor {
    pub fn new(id: impl Into<String>, maslov: i64, filt_z: i64, filt_zprime: i64) -> Self {
        Anchor { id: id.into(), maslov, filt_z, filt_zprime }
    }
}

/// Gradings of one generator after propagation.  The Maslov grading stays
/// `None` when no chain of index-carrying disks reaches the anchor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorGrading {
    pub maslov: Option<i64>,
    pub filt_z: i64,
    pub filt_zprime: i64,
}

pub type GradingAssignment = BTreeMap<String, GeneratorGrading>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GradingError {
    #[error("disk references unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("generator {0:?} is not connected to the anchor by any disk")]
    DisconnectedGraph(String),
    #[error("disk constraints between {from:?} and {to:?} are inconsistent")]
    InconsistentDisks { from: String, to: String },
    #[error("anchor {0:?} is not among the generators")]
    UnknownAnchor(String),
}

/// Assign absolute gradings to every generator from relative disk data.
///
/// Each disk from `a` to `b` forces filt_z(a) - filt_z(b) = n_z - n_w and
/// filt_zprime(a) - filt_zprime(b) = n_zprime - n_w; a disk with a known
/// Maslov index mu additionally forces maslov(a) - maslov(b) = mu - 2 n_w.
/// Values spread outward from the anchor; afterwards every disk is checked
/// against the result, so an overdetermined but consistent set is fine.
pub fn propagate_gradings(
    ids: &[String],
    disks: &[DiskDatum],
    anchor: &Anchor,
) -> Result<GradingAssignment, GradingError> {
    let known: BTreeSet<&str> = ids.iter().map(String::as_str).collect();
    if !known.contains(anchor.id.as_str()) {
        return Err(GradingError::UnknownAnchor(anchor.id.clone()));
    }
    for d in disks {
        for end in [&d.from_id, &d.to_id] {
            if !known.contains(end.as_str()) {
                return Err(GradingError::UnknownGenerator(end.clone()));
            }
        }
    }

    // undirected adjacency; each edge carries the (filt_z, filt_zprime,
    // maslov) difference from -> to
    let mut adj: BTreeMap<&str, Vec<(&str, i64, i64, Option<i64>)>> = BTreeMap::new();
    for d in disks {
        let dz = i64::from(d.n_z) - i64::from(d.n_w);
        let dzp = i64::from(d.n_zprime) - i64::from(d.n_w);
        let dm = d.maslov_index.map(|mu| mu - 2 * i64::from(d.n_w));
        adj.entry(d.from_id.as_str()).or_default().push((d.to_id.as_str(), -dz, -dzp, dm.map(|m| -m)));
        adj.entry(d.to_id.as_str()).or_default().push((d.from_id.as_str(), dz, dzp, dm));
    }

    // breadth first filtration assignment over all disks
    let mut filt: BTreeMap<&str, (i64, i64)> = BTreeMap::new();
    filt.insert(anchor.id.as_str(), (anchor.filt_z, anchor.filt_zprime));
    let mut queue = VecDeque::from([anchor.id.as_str()]);
    while let Some(cur) = queue.pop_front() {
        let (z, zp) = filt[cur];
        for &(next, dz, dzp, _) in adj.get(cur).into_iter().flatten() {
            if !filt.contains_key(next) {
                filt.insert(next, (z + dz, zp + dzp));
                queue.push_back(next);
            }
        }
    }
    if let Some(id) = ids.iter().find(|id| !filt.contains_key(id.as_str())) {
        return Err(GradingError::DisconnectedGraph(id.clone()));
    }

    // second pass restricted to disks with a known index
    let mut maslov: BTreeMap<&str, i64> = BTreeMap::new();
    maslov.insert(anchor.id.as_str(), anchor.maslov);
    let mut queue = VecDeque::from([anchor.id.as_str()]);
    while let Some(cur) = queue.pop_front() {
        let m = maslov[cur];
        for &(next, _, _, dm) in adj.get(cur).into_iter().flatten() {
            if let Some(dm) = dm {
                if !maslov.contains_key(next) {
                    maslov.insert(next, m + dm);
                    queue.push_back(next);
                }
            }
        }
    }

    // every disk must agree with the final assignment
    for d in disks {
        let (fz, fzp) = filt[d.from_id.as_str()];
        let (tz, tzp) = filt[d.to_id.as_str()];
        let dz = i64::from(d.n_z) - i64::from(d.n_w);
        let dzp = i64::from(d.n_zprime) - i64::from(d.n_w);
        let mut ok = fz - tz == dz && fzp - tzp == dzp;
        if let Some(mu) = d.maslov_index {
            if let (Some(&fm), Some(&tm)) = (maslov.get(d.from_id.as_str()), maslov.get(d.to_id.as_str())) {
                ok = ok && fm - tm == mu - 2 * i64::from(d.n_w);
            }
        }
        if !ok {
            return Err(GradingError::InconsistentDisks {
                from: d.from_id.clone(),
                to: d.to_id.clone(),
            });
        }
    }

    Ok(ids
        .iter()
        .map(|id| {
            let (filt_z, filt_zprime) = filt[id.as_str()];
            let grading = GeneratorGrading {
                maslov: maslov.get(id.as_str()).copied(),
                filt_z,
                filt_zprime,
            };
            (id.clone(), grading)
        })
        .collect())
}

/// Disk data of the standard spiral diagram of T(2, 2n+1): each odd-index
/// generator supports one disk through the w basepoint down to its
/// predecessor and one through z' up to its successor.
pub fn t2_spiral_disks(n: u32) -> (Vec<String>, Vec<DiskDatum>, Anchor) {
    let ids: Vec<String> = (0..=2 * n).map(|j| format!("x{j}")).collect();
    let mut disks = Vec::new();
    for j in (1..2 * n).step_by(2) {
        let j = j as usize;
        disks.push(DiskDatum::new(&ids[j], &ids[j - 1], 1, 1, 0, 0));
        disks.push(DiskDatum::new(&ids[j], &ids[j + 1], 1, 0, 0, 1));
    }
    let anchor = Anchor::new("x0", 0, 0, n as i64);
    (ids, disks, anchor)
}

/// Disk data of the genus one diagram whose z' basepoint reads off T(3, 7).
/// Two of the disks have an unconstrained Maslov index, so the propagated
/// gradings of x5 through x8 come out undetermined.
pub fn t37_disks() -> (Vec<String>, Vec<DiskDatum>, Anchor) {
    let ids: Vec<String> = (0..=8).map(|j| format!("x{j}")).collect();
    let disks = vec![
        DiskDatum::new("x1", "x0", 1, 1, 0, 0),
        DiskDatum::new("x3", "x2", 1, 1, 0, 0),
        DiskDatum::new("x1", "x2", 1, 0, 0, 2),
        DiskDatum::new("x3", "x4", 1, 0, 0, 2),
        DiskDatum::new("x5", "x6", 1, 0, 0, 1),
        DiskDatum::new("x7", "x8", 1, 0, 0, 1),
        DiskDatum::new("x4", "x6", None, 0, 0, 3),
        DiskDatum::new("x5", "x7", None, 0, 0, 3),
    ];
    let anchor = Anchor::new("x0", 0, 0, 6);
    (ids, disks, anchor)
}
