//! The structure file format and report documents.
//!
//! Structures and reports share one self-describing JSON format carrying a
//! `format_version` field. Structure files are written in a fixed layout
//! (one table row per line) so that `serialize(load(f)) == f` byte for byte
//! for any file this module wrote.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{AxiomFailure, GammaTables, OrderRelation, PoGammaSemigroup, StructureError, ValidationReport};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation error: {} ({})", .0.axiom, .0)]
    Validation(AxiomFailure, ValidationReport),
}

/// On-disk form of a structure. `order[a][b] = 1` means `a ≤ b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureDoc {
    pub format_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub n: usize,
    pub m: usize,
    pub tables: Vec<Vec<Vec<usize>>>,
    pub order: Vec<Vec<u8>>,
}

impl StructureDoc {
    pub fn from_structure(s: &PoGammaSemigroup, name: Option<&str>) -> Self {
        Self {
            format_version: FORMAT_VERSION,
            name: name.map(str::to_string),
            n: s.n(),
            m: s.m(),
            tables: s.tables().to_nested(),
            order: s
                .order()
                .to_rows()
                .into_iter()
                .map(|r| r.into_iter().map(u8::from).collect())
                .collect(),
        }
    }

    /// Checks shape and ranges, naming the first offending coordinate.
    fn check_shape(&self) -> Result<(GammaTables, OrderRelation), LoadError> {
        let (n, m) = (self.n, self.m);
        let err = |msg: String| Err(LoadError::Parse(msg));
        if self.format_version != FORMAT_VERSION {
            return err(format!(
                "unsupported format_version {} (expected {FORMAT_VERSION})",
                self.format_version
            ));
        }
        if n == 0 || n > crate::model::MAX_ELEMENTS {
            return err(format!("n must be in 1..={}, got {n}", crate::model::MAX_ELEMENTS));
        }
        if m == 0 {
            return err("m must be at least 1".into());
        }
        if self.tables.len() != m {
            return err(format!("tables: expected {m} tables, found {}", self.tables.len()));
        }
        for (g, table) in self.tables.iter().enumerate() {
            if table.len() != n {
                return err(format!("tables[{g}]: expected {n} rows, found {}", table.len()));
            }
            for (a, row) in table.iter().enumerate() {
                if row.len() != n {
                    return err(format!("tables[{g}][{a}]: expected {n} entries, found {}", row.len()));
                }
                if let Some(b) = row.iter().position(|&v| v >= n) {
                    return err(format!(
                        "tables[{g}][{a}][{b}] = {} is out of range 0..{n}",
                        row[b]
                    ));
                }
            }
        }
        if self.order.len() != n {
            return err(format!("order: expected {n} rows, found {}", self.order.len()));
        }
        for (a, row) in self.order.iter().enumerate() {
            if row.len() != n {
                return err(format!("order[{a}]: expected {n} entries, found {}", row.len()));
            }
            if let Some(b) = row.iter().position(|&v| v > 1) {
                return err(format!("order[{a}][{b}] = {} must be 0 or 1", row[b]));
            }
        }
        let tables = GammaTables::from_nested(n, m, &self.tables).map_err(|e| LoadError::Parse(e.to_string()))?;
        let rows: Vec<Vec<bool>> = self.order.iter().map(|r| r.iter().map(|&v| v == 1).collect()).collect();
        let order = OrderRelation::from_rows(&rows).map_err(|e| LoadError::Parse(e.to_string()))?;
        Ok((tables, order))
    }

    pub fn to_structure(&self) -> Result<PoGammaSemigroup, LoadError> {
        let (tables, order) = self.check_shape()?;
        PoGammaSemigroup::new(tables, order).map_err(validation_error)
    }

    /// As [`StructureDoc::to_structure`] without the compatibility axiom.
    pub fn to_structure_without_compatibility(&self) -> Result<PoGammaSemigroup, LoadError> {
        let (tables, order) = self.check_shape()?;
        PoGammaSemigroup::new_without_compatibility(tables, order).map_err(validation_error)
    }

    /// The canonical text layout.
    pub fn to_text(&self) -> String {
        let row = |r: &[usize]| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ");
        let mut out = String::new();
        out.push_str("{\n");
        let _ = writeln!(out, "  \"format_version\": {},", self.format_version);
        if let Some(name) = &self.name {
            let _ = writeln!(out, "  \"name\": {},", serde_json::to_string(name).expect("strings serialize"));
        }
        let _ = writeln!(out, "  \"n\": {},", self.n);
        let _ = writeln!(out, "  \"m\": {},", self.m);
        out.push_str("  \"tables\": [\n");
        for (g, table) in self.tables.iter().enumerate() {
            out.push_str("    [\n");
            for (a, r) in table.iter().enumerate() {
                let sep = if a + 1 < table.len() { "," } else { "" };
                let _ = writeln!(out, "      [{}]{sep}", row(r));
            }
            let sep = if g + 1 < self.tables.len() { "," } else { "" };
            let _ = writeln!(out, "    ]{sep}");
        }
        out.push_str("  ],\n");
        out.push_str("  \"order\": [\n");
        for (a, r) in self.order.iter().enumerate() {
            let sep = if a + 1 < self.order.len() { "," } else { "" };
            let r: Vec<usize> = r.iter().map(|&v| v as usize).collect();
            let _ = writeln!(out, "    [{}]{sep}", row(&r));
        }
        out.push_str("  ]\n}\n");
        out
    }
}

fn validation_error(e: StructureError) -> LoadError {
    match e {
        StructureError::Invalid(report) => LoadError::Validation(report.failures[0].clone(), report),
        other => LoadError::Parse(other.to_string()),
    }
}

pub fn parse_doc(text: &str) -> Result<StructureDoc, LoadError> {
    serde_json::from_str(text).map_err(|e| LoadError::Parse(e.to_string()))
}

pub fn parse(text: &str) -> Result<PoGammaSemigroup, LoadError> {
    parse_doc(text)?.to_structure()
}

pub fn read_doc(path: &Path) -> Result<StructureDoc, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_doc(&text)
}

pub fn load(path: &Path) -> Result<PoGammaSemigroup, LoadError> {
    read_doc(path)?.to_structure()
}

pub fn serialize(s: &PoGammaSemigroup, name: Option<&str>) -> String {
    StructureDoc::from_structure(s, name).to_text()
}

/// Machine rendering of any report type.
pub fn to_machine<T: Serialize>(report: &T) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("reports serialize");
    text.push('\n');
    text
}

pub fn from_machine<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, LoadError> {
    serde_json::from_str(text).map_err(|e| LoadError::Parse(e.to_string()))
}

/// A versioned envelope around a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument<T> {
    pub format_version: u32,
    pub kind: String,
    pub report: T,
}

impl<T> ReportDocument<T> {
    pub fn new(kind: &str, report: T) -> Self {
        Self {
            format_version: FORMAT_VERSION,
            kind: kind.to_string(),
            report,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::model::Axiom;

    #[test]
    fn one_element_text() {
        let text = serialize(&fixtures::one_element(), Some("one-element"));
        assert_eq!(
            text,
            "{\n  \"format_version\": 1,\n  \"name\": \"one-element\",\n  \"n\": 1,\n  \"m\": 1,\n  \"tables\": [\n    [\n      [0]\n    ]\n  ],\n  \"order\": [\n    [1]\n  ]\n}\n"
        );
        assert_eq!(parse(&text).unwrap(), fixtures::one_element());
    }

    #[test]
    fn fixtures_round_trip() {
        for (name, s) in fixtures::named() {
            let text = serialize(&s, Some(name));
            let doc = parse_doc(&text).unwrap();
            assert_eq!(doc.name.as_deref(), Some(name));
            assert_eq!(doc.to_structure().unwrap(), s);
            assert_eq!(doc.to_text(), text);
        }
    }

    #[test]
    fn out_of_range_names_coordinate() {
        let text = r#"{"format_version":1,"n":2,"m":1,"tables":[[[0,0],[0,2]]],"order":[[1,0],[0,1]]}"#;
        let err = parse(text).unwrap_err();
        assert!(matches!(&err, LoadError::Parse(msg) if msg.contains("tables[0][1][1]")), "{err}");
    }

    #[test]
    fn non_associative_is_validation_error() {
        let text = r#"{"format_version":1,"n":2,"m":1,"tables":[[[1,0],[0,0]]],"order":[[1,0],[0,1]]}"#;
        match parse(text).unwrap_err() {
            LoadError::Validation(first, report) => {
                assert_eq!(first.axiom, Axiom::Associativity);
                assert_eq!(first.witness.len(), 5);
                assert!(!report.ok);
            }
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn malformed_json_is_parse_error() {
        assert!(matches!(parse("{\"n\": 1,"), Err(LoadError::Parse(_))));
        assert!(matches!(
            parse(r#"{"format_version":1,"n":1,"m":1,"tables":[[[0]]],"order":[[1]],"extra":1}"#),
            Err(LoadError::Parse(_))
        ));
        assert!(matches!(
            parse(r#"{"format_version":9,"n":1,"m":1,"tables":[[[0]]],"order":[[1]]}"#),
            Err(LoadError::Parse(_))
        ));
    }

    #[test]
    fn missing_file_is_io_error() {
        assert!(matches!(load(Path::new("/nonexistent/x.json")), Err(LoadError::Io { .. })));
    }

    #[test]
    fn reports_round_trip() {
        let s = fixtures::null_table();
        let reports = crate::theorems::run_all(&s);
        let doc = ReportDocument::new("check", reports);
        let text = to_machine(&doc);
        let back: ReportDocument<Vec<crate::theorems::CheckReport>> = from_machine(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(to_machine(&back), text);
    }
}
