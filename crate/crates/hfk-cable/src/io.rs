//! JSON serialization of complexes and tables.
//!
//! Writing is canonical: object keys are sorted, generators are ordered by
//! id, differential entries by (from, to), table entries by (alexander,
//! maslov), and torsion coefficients appear as decimal strings.  Reading a
//! written document and writing it again reproduces the bytes.

use crate::cable::{CableAssumptions, CableTable, ValidRange};
use crate::complex::{ComplexError, Edge, FilteredComplex, Generator, HFKTable};
use crate::homalg::AbelianGroup;
use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("invalid torsion coefficient {0:?}: {1}")]
    BadTorsion(String, String),
    #[error("duplicate table entry at alexander {alexander}, maslov {maslov}")]
    DuplicateEntry { alexander: i64, maslov: i64 },
    #[error("zero group stored at alexander {alexander}, maslov {maslov}")]
    ZeroEntry { alexander: i64, maslov: i64 },
    #[error("invalid valid_range kind {0:?}, expected \"all\", \"above\" or \"below\"")]
    BadRangeKind(String),
    #[error("valid_range kind {0:?} needs a bound")]
    MissingBound(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexDoc {
    name: String,
    generators: Vec<GeneratorDoc>,
    differential: Vec<EdgeDoc>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GeneratorDoc {
    id: String,
    maslov: i64,
    alexander: i64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeDoc {
    from: String,
    to: String,
    coefficient: i64,
}

pub fn parse_complex(text: &str) -> Result<FilteredComplex, IoError> {
    let doc: ComplexDoc = serde_json::from_str(text)?;
    let generators = doc
        .generators
        .into_iter()
        .map(|g| Generator::new(g.id, g.maslov, g.alexander))
        .collect();
    let differential = doc
        .differential
        .into_iter()
        .map(|e| Edge::new(e.from, e.to, e.coefficient))
        .collect();
    Ok(FilteredComplex::new(doc.name, generators, differential)?)
}

pub fn write_complex(cx: &FilteredComplex) -> String {
    let mut generators: Vec<&Generator> = cx.generators().iter().collect();
    generators.sort_by(|a, b| a.id.cmp(&b.id));
    let mut edges: Vec<&Edge> = cx.differential().iter().collect();
    edges.sort_by(|a, b| (&a.from, &a.to).cmp(&(&b.from, &b.to)));
    let value = json!({
        "name": cx.name(),
        "generators": generators
            .iter()
            .map(|g| json!({"id": g.id, "maslov": g.maslov, "alexander": g.alexander}))
            .collect::<Vec<_>>(),
        "differential": edges
            .iter()
            .map(|e| json!({"from": e.from, "to": e.to, "coefficient": e.coefficient}))
            .collect::<Vec<_>>(),
    });
    to_pretty(&value)
}

/// A table document read back from disk, metadata included when present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SavedTable {
    pub name: Option<String>,
    pub table: HFKTable,
    pub valid_range: Option<ValidRange>,
    pub assumptions: Option<CableAssumptions>,
    pub warnings: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TableDoc {
    #[serde(default)]
    name: Option<String>,
    entries: Vec<EntryDoc>,
    #[serde(default)]
    valid_range: Option<RangeDoc>,
    #[serde(default)]
    assumptions: Option<AssumptionsDoc>,
    #[serde(default)]
    warnings: Option<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryDoc {
    alexander: i64,
    maslov: i64,
    group: GroupDoc,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupDoc {
    free_rank: u64,
    #[serde(default)]
    torsion: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RangeDoc {
    kind: String,
    #[serde(default)]
    bound: Option<i64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AssumptionsDoc {
    p: i64,
    n: i64,
    c_prime: Option<i64>,
    heuristic_bound: i64,
    large_n_assumed: bool,
    conjectural: bool,
}

fn parse_group(doc: &GroupDoc) -> Result<AbelianGroup, IoError> {
    let mut torsion = Vec::new();
    for s in &doc.torsion {
        let d: BigInt = s
            .parse()
            .map_err(|e| IoError::BadTorsion(s.clone(), format!("{e}")))?;
        if d < BigInt::from(2) {
            return Err(IoError::BadTorsion(s.clone(), "must be at least 2".into()));
        }
        if let Some(prev) = torsion.last() {
            let rem: BigInt = &d % prev;
            if !rem.eq(&BigInt::from(0)) {
                return Err(IoError::BadTorsion(
                    s.clone(),
                    "coefficients must form a divisibility chain".into(),
                ));
            }
        }
        torsion.push(d);
    }
    Ok(AbelianGroup::new(doc.free_rank as usize, torsion))
}

pub fn parse_table(text: &str) -> Result<SavedTable, IoError> {
    let doc: TableDoc = serde_json::from_str(text)?;
    let mut table = HFKTable::new();
    for e in &doc.entries {
        let group = parse_group(&e.group)?;
        if group.is_zero() {
            return Err(IoError::ZeroEntry { alexander: e.alexander, maslov: e.maslov });
        }
        if table.get(e.alexander, e.maslov).is_some() {
            return Err(IoError::DuplicateEntry { alexander: e.alexander, maslov: e.maslov });
        }
        table.insert(e.alexander, e.maslov, group);
    }
    let valid_range = match doc.valid_range {
        None => None,
        Some(r) => Some(match r.kind.as_str() {
            "all" => ValidRange::All,
            "above" => ValidRange::Above(r.bound.ok_or(IoError::MissingBound(r.kind.clone()))?),
            "below" => ValidRange::Below(r.bound.ok_or(IoError::MissingBound(r.kind.clone()))?),
            other => return Err(IoError::BadRangeKind(other.to_string())),
        }),
    };
    let assumptions = doc.assumptions.map(|a| CableAssumptions {
        p: a.p,
        n: a.n,
        c_prime: a.c_prime,
        heuristic_bound: a.heuristic_bound,
        large_n_assumed: a.large_n_assumed,
        conjectural: a.conjectural,
    });
    Ok(SavedTable {
        name: doc.name,
        table,
        valid_range,
        assumptions,
        warnings: doc.warnings.unwrap_or_default(),
    })
}

fn group_value(g: &AbelianGroup) -> Value {
    json!({
        "free_rank": g.free_rank() as u64,
        "torsion": g.torsion().iter().map(|d| d.to_string()).collect::<Vec<_>>(),
    })
}

fn entries_value(table: &HFKTable) -> Value {
    // BTreeMap iteration already orders by (alexander, maslov)
    Value::Array(
        table
            .entries()
            .map(|(a, m, g)| json!({"alexander": a, "maslov": m, "group": group_value(g)}))
            .collect(),
    )
}

fn range_value(range: &ValidRange) -> Value {
    match range {
        ValidRange::All => json!({"kind": "all"}),
        ValidRange::Above(b) => json!({"kind": "above", "bound": b}),
        ValidRange::Below(b) => json!({"kind": "below", "bound": b}),
    }
}

/// Bare table, no metadata.
pub fn write_table(table: &HFKTable, name: Option<&str>) -> String {
    let mut value = json!({"entries": entries_value(table)});
    if let Some(name) = name {
        value["name"] = json!(name);
    }
    to_pretty(&value)
}

/// Cable table with its validity metadata.
pub fn write_cable_table(cable: &CableTable, name: Option<&str>) -> String {
    let a = &cable.assumptions;
    let mut value = json!({
        "entries": entries_value(&cable.table),
        "valid_range": range_value(&cable.valid_range),
        "assumptions": {
            "p": a.p,
            "n": a.n,
            "c_prime": a.c_prime,
            "heuristic_bound": a.heuristic_bound,
            "large_n_assumed": a.large_n_assumed,
            "conjectural": a.conjectural,
        },
        "warnings": cable.warnings,
    });
    if let Some(name) = name {
        value["name"] = json!(name);
    }
    to_pretty(&value)
}

fn to_pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("no non-string keys");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cable::cable2_hfk;
    use crate::torus::staircase_t2;

    #[test]
    fn complex_roundtrip_is_canonical() {
        let cx = staircase_t2(2).unwrap();
        let text = write_complex(&cx);
        let back = parse_complex(&text).unwrap();
        assert_eq!(back, cx.clone().with_name(back.name().to_string()));
        assert_eq!(back.name(), cx.name());
        assert_eq!(write_complex(&back), text);
    }

    #[test]
    fn complex_parsing_rejects_unknown_and_duplicate() {
        let unknown = r#"{"name":"x","generators":[],"differential":[],"extra":1}"#;
        assert!(matches!(parse_complex(unknown), Err(IoError::Json(_))));

        let dup = r#"{
            "name": "x",
            "generators": [
                {"id": "a", "maslov": 0, "alexander": 0},
                {"id": "a", "maslov": 1, "alexander": 0}
            ],
            "differential": []
        }"#;
        assert!(matches!(
            parse_complex(dup),
            Err(IoError::Complex(ComplexError::DuplicateId(_)))
        ));
    }

    #[test]
    fn table_roundtrip_with_metadata() {
        let cable = cable2_hfk(&staircase_t2(1).unwrap(), 5, false).unwrap();
        let text = write_cable_table(&cable, Some("trefoil cable"));
        let saved = parse_table(&text).unwrap();
        assert_eq!(saved.name.as_deref(), Some("trefoil cable"));
        assert_eq!(saved.table, cable.table);
        assert_eq!(saved.valid_range, Some(cable.valid_range));
        assert_eq!(saved.assumptions.as_ref(), Some(&cable.assumptions));
        // byte stability through a parse/write cycle
        let rewritten = write_cable_table(
            &CableTable {
                table: saved.table.clone(),
                valid_range: saved.valid_range.unwrap(),
                assumptions: saved.assumptions.clone().unwrap(),
                warnings: saved.warnings.clone(),
            },
            saved.name.as_deref(),
        );
        assert_eq!(rewritten, text);
    }

    #[test]
    fn torsion_strings_roundtrip() {
        let big = BigInt::from(2) * BigInt::from(1_000_000_007u64) * BigInt::from(1_000_000_007u64);
        let mut table = HFKTable::new();
        table.insert(0, 0, AbelianGroup::new(1, vec![BigInt::from(2), big.clone()]));
        let text = write_table(&table, None);
        assert!(text.contains(&big.to_string()));
        let saved = parse_table(&text).unwrap();
        assert_eq!(saved.table, table);
    }

    #[test]
    fn table_parsing_rejects_bad_groups() {
        let bad_torsion = r#"{"entries":[{"alexander":0,"maslov":0,"group":{"free_rank":0,"torsion":["1"]}}]}"#;
        assert!(matches!(parse_table(bad_torsion), Err(IoError::BadTorsion(..))));

        let bad_chain = r#"{"entries":[{"alexander":0,"maslov":0,"group":{"free_rank":0,"torsion":["4","6"]}}]}"#;
        assert!(matches!(parse_table(bad_chain), Err(IoError::BadTorsion(..))));

        let zero = r#"{"entries":[{"alexander":0,"maslov":0,"group":{"free_rank":0,"torsion":[]}}]}"#;
        assert!(matches!(parse_table(zero), Err(IoError::ZeroEntry { .. })));

        let dup = r#"{"entries":[
            {"alexander":0,"maslov":0,"group":{"free_rank":1,"torsion":[]}},
            {"alexander":0,"maslov":0,"group":{"free_rank":2,"torsion":[]}}
        ]}"#;
        assert!(matches!(parse_table(dup), Err(IoError::DuplicateEntry { .. })));

        let bad_range = r#"{"entries":[],"valid_range":{"kind":"sideways"}}"#;
        assert!(matches!(parse_table(bad_range), Err(IoError::BadRangeKind(_))));

        let no_bound = r#"{"entries":[],"valid_range":{"kind":"above"}}"#;
        assert!(matches!(parse_table(no_bound), Err(IoError::MissingBound(_))));
    }

    #[test]
    fn keys_are_sorted_in_output() {
        let cx = staircase_t2(1).unwrap();
        let text = write_complex(&cx);
        let differential_pos = text.find("\"differential\"").unwrap();
        let generators_pos = text.find("\"generators\"").unwrap();
        let name_pos = text.find("\"name\"").unwrap();
        assert!(differential_pos < generators_pos && generators_pos < name_pos);
    }
}
