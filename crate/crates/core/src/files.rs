//! JSON file formats.
//!
//! - group: `{"name": string, "order": n, "table": [[int]]}`
//! - fuzzy subset: `{"group": string, "grades": ["1", "1/2", ...]}`
//! - fuzzy map: `{"domain": string, "codomain": string, "grades": [["p/q", ...], ...]}`
//!
//! Grades are exact rational strings and element indices follow the
//! group's canonical order. Writers emit key-sorted, pretty-printed JSON
//! with a trailing newline.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{FileError, GroupError};
use crate::grade::Grade;
use crate::group::FiniteGroup;
use crate::map::{FuzzyMap, FuzzyRelation};
use crate::subset::FuzzySubset;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub name: String,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuFile {
    pub group: String,
    pub grades: Vec<Grade>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapFile {
    pub domain: String,
    pub codomain: String,
    pub grades: Vec<Vec<Grade>>,
}

/// Key-sorted pretty JSON with a trailing newline.
pub fn to_sorted_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("file types serialize");
    let mut out = serde_json::to_string_pretty(&v).expect("values serialize");
    out.push('\n');
    out
}

pub fn read_file(path: impl AsRef<Path>) -> Result<String, FileError> {
    let path = path.as_ref();
    std::fs::read_to_string(path).map_err(|source| FileError::Io { path: path.display().to_string(), source })
}

pub fn write_file(path: impl AsRef<Path>, contents: &str) -> Result<(), FileError> {
    let path = path.as_ref();
    std::fs::write(path, contents).map_err(|source| FileError::Io { path: path.display().to_string(), source })
}

pub fn group_to_json(group: &FiniteGroup) -> String {
    to_sorted_json(&GroupFile { name: group.name().to_string(), order: group.order(), table: group.rows() })
}

/// Parses and validates a group file.
pub fn group_from_json(text: &str) -> Result<FiniteGroup, FileError> {
    let file: GroupFile = serde_json::from_str(text)?;
    if file.order != file.table.len() {
        return Err(GroupError::OrderMismatch { declared: file.order, actual: file.table.len() }.into());
    }
    Ok(FiniteGroup::from_table(file.table)?.with_name(file.name))
}

pub fn load_group(path: impl AsRef<Path>) -> Result<FiniteGroup, FileError> {
    group_from_json(&read_file(path)?)
}

pub fn mu_to_json(mu: &FuzzySubset) -> String {
    to_sorted_json(&MuFile { group: mu.group().name().to_string(), grades: mu.grades().to_vec() })
}

/// Parses a fuzzy subset of `group`. The file must name the same group.
pub fn mu_from_json(text: &str, group: &Arc<FiniteGroup>) -> Result<FuzzySubset, FileError> {
    let file: MuFile = serde_json::from_str(text)?;
    if file.group != group.name() {
        return Err(FileError::GroupMismatch { expected: group.name().to_string(), found: file.group });
    }
    Ok(FuzzySubset::new(group.clone(), file.grades)?)
}

pub fn load_mu(path: impl AsRef<Path>, group: &Arc<FiniteGroup>) -> Result<FuzzySubset, FileError> {
    mu_from_json(&read_file(path)?, group)
}

pub fn map_to_json(f: &FuzzyMap) -> String {
    to_sorted_json(&MapFile {
        domain: f.domain().name().to_string(),
        codomain: f.codomain().name().to_string(),
        grades: f.relation().rows(),
    })
}

/// Parses a fuzzy map between the given groups, which the file must name.
pub fn map_from_json(text: &str, domain: &Arc<FiniteGroup>, codomain: &Arc<FiniteGroup>) -> Result<FuzzyMap, FileError> {
    let file: MapFile = serde_json::from_str(text)?;
    for (expected, found) in [(domain, file.domain), (codomain, file.codomain)] {
        if found != expected.name() {
            return Err(FileError::GroupMismatch { expected: expected.name().to_string(), found });
        }
    }
    let relation = FuzzyRelation::new(domain.clone(), codomain.clone(), file.grades)?;
    Ok(FuzzyMap::new(relation)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::{MapError, SubsetError};
    use crate::group::builtin_group;
    use crate::hom::lift_hom;
    use crate::subset::MuStrategy;

    fn g(t: &str) -> Arc<FiniteGroup> {
        Arc::new(builtin_group(t).unwrap())
    }

    #[test]
    fn group_round_trip() {
        for t in ["cyclic(1)", "symmetric(3)", "direct_product(klein4,cyclic(3))"] {
            let group = g(t);
            let back = group_from_json(&group_to_json(&group)).unwrap();
            assert_eq!(back.name(), group.name());
            assert!(back.same_structure(&group));
        }
    }

    #[test]
    fn group_errors() {
        let bad_order = r#"{"name": "x", "order": 3, "table": [[0,1],[1,0]]}"#;
        assert!(matches!(
            group_from_json(bad_order),
            Err(FileError::Group(GroupError::OrderMismatch { declared: 3, actual: 2 }))
        ));
        let bad_entry = r#"{"name": "x", "order": 2, "table": [[0,1],[1,2]]}"#;
        assert!(matches!(
            group_from_json(bad_entry),
            Err(FileError::Group(GroupError::IndexOutOfRange { row: 1, col: 1, .. }))
        ));
        assert!(matches!(group_from_json("{"), Err(FileError::Json(_))));
    }

    #[test]
    fn mu_round_trip_is_exact() {
        let z4 = g("cyclic(4)");
        let mu = MuStrategy::Chain.generate(&z4);
        let text = mu_to_json(&mu);
        assert!(text.contains("\"1/4\""));
        let back = mu_from_json(&text, &z4).unwrap();
        assert_eq!(back, mu);
        assert_eq!(mu_to_json(&back), text);
    }

    #[test]
    fn mu_errors() {
        let z4 = g("cyclic(4)");
        let other = r#"{"group": "klein4", "grades": ["1","0","0","0"]}"#;
        assert!(matches!(mu_from_json(other, &z4), Err(FileError::GroupMismatch { .. })));
        let short = r#"{"group": "cyclic(4)", "grades": ["1"]}"#;
        assert!(matches!(mu_from_json(short, &z4), Err(FileError::Subset(SubsetError::LengthMismatch { .. }))));
        let malformed = r#"{"group": "cyclic(4)", "grades": ["1","2/1","0","0"]}"#;
        assert!(matches!(mu_from_json(malformed, &z4), Err(FileError::Json(_))));
    }

    #[test]
    fn map_round_trip() {
        let s3 = g("symmetric(3)");
        let z2 = g("cyclic(2)");
        let mu2 = MuStrategy::Chain.generate(&z2);
        let sign = lift_hom(s3.clone(), &[0, 1, 1, 0, 0, 1], &mu2).unwrap();
        let back = map_from_json(&map_to_json(&sign), &s3, &z2).unwrap();
        assert_eq!(back, sign);

        let two_units = r#"{"domain": "cyclic(2)", "codomain": "cyclic(2)", "grades": [["1","1"],["0","1"]]}"#;
        assert!(matches!(map_from_json(two_units, &z2, &z2), Err(FileError::Map(MapError::MultipleUnitEntries(0)))));
    }

    #[test]
    fn files_on_disk() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("q8.json");
        let q8 = g("quaternion8");
        write_file(&path, &group_to_json(&q8)).unwrap();
        assert!(load_group(&path).unwrap().same_structure(&q8));
        assert!(matches!(load_group(dir.path().join("missing.json")), Err(FileError::Io { .. })));
    }
}
