//! Catalog files: one group spec per line, `#` starts a comment.

use std::path::Path;

use crate::error::{Error, Result};
use crate::spec::{parse_group_spec, GroupSpec};

/// The catalog shipped with the crate.
pub const DEFAULT_CATALOG: &str = include_str!("../../catalog/default.txt");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub line: usize,
    pub spec: GroupSpec,
}

pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>> {
    let mut entries = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let spec = parse_group_spec(line).map_err(|e| match e {
            Error::Syntax { position, expected, found } => Error::Syntax {
                position,
                expected: format!("{expected} (catalog line {})", k + 1),
                found,
            },
            other => other,
        })?;
        entries.push(CatalogEntry { line: k + 1, spec });
    }
    Ok(entries)
}

pub fn read_catalog(path: &Path) -> Result<Vec<CatalogEntry>> {
    parse_catalog(&std::fs::read_to_string(path)?)
}

pub fn default_catalog() -> Vec<CatalogEntry> {
    parse_catalog(DEFAULT_CATALOG).expect("the shipped catalog parses")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comments_and_blanks() {
        let text = "# header\n\ncyclic:3   # trailing\n  q8\n";
        let entries = parse_catalog(text).unwrap();
        assert_eq!(entries.len(), 2);
        assert_eq!(entries[0], CatalogEntry { line: 3, spec: GroupSpec::Cyclic(3) });
        assert_eq!(entries[1].spec, GroupSpec::Quaternion8);
    }

    #[test]
    fn errors_mention_line() {
        let err = parse_catalog("cyclic:3\ncyclic 4\n").unwrap_err();
        assert!(err.to_string().contains("catalog line 2"), "{err}");
    }

    #[test]
    fn default_catalog_contents() {
        let specs: Vec<String> = default_catalog().iter().map(|e| e.spec.to_string()).collect();
        assert_eq!(specs.len(), 30 + 4 + 10 + 4 + 2 + 1 + 3 + 1 + 1);
        for k in 1..=30 {
            assert!(specs.contains(&format!("cyclic:{k}")));
        }
        for s in ["abelian:2,2", "abelian:2,4", "abelian:2,2,2", "abelian:3,9", "q8", "sl2:16"] {
            assert!(specs.contains(&s.to_string()), "{s}");
        }
        assert!(specs.contains(&"perm:[(1 2 3 4 5 6 7),(2 3 5)(4 7 6)]".to_string()));
        assert!(specs.contains(&"cyclic:3*dihedral:4".to_string()));
    }
}
