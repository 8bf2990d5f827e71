//! On-disk character-table cache in the "ctab-v1" text format:
//!
//! ```text
//! ctab-v1 N=<n> count=<p(n)>
//! <p(n) partition labels, canonical order, one per line>
//! <p(n) rows of p(n) decimal integers, identity class first>
//! sha256=<hex digest of every preceding byte>
//! ```
//!
//! Writes go to a temporary file in the target directory and are
//! renamed into place, so readers never observe a partial file. A
//! digest or structure mismatch surfaces as a corrupt-cache error,
//! distinct from plain I/O failure.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_bigint::BigInt;
use sha2::{Digest, Sha256};

use crate::character::CharacterTable;
use crate::error::{Error, Result};
use crate::partition::enumerate_partitions;

/// Whether `load_or_build` found a usable file or had to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheOutcome {
    Hit,
    Computed,
}

/// The cache file for degree `n` inside `dir`.
pub fn cache_path(dir: &Path, n: u64) -> PathBuf {
    dir.join(format!("ctab-{n}.txt"))
}

/// Serializes a table to the ctab-v1 text format, digest line included.
pub fn render_ctab(table: &CharacterTable) -> String {
    let mut body = String::new();
    let count = table.rows().len();
    writeln!(body, "ctab-v1 N={} count={count}", table.degree()).unwrap();
    for lam in table.rows() {
        writeln!(body, "{lam}").unwrap();
    }
    for i in 0..count {
        let row: Vec<String> = (0..table.classes().class_count())
            .map(|j| table.value_at(i, j).to_string())
            .collect();
        writeln!(body, "{}", row.join(" ")).unwrap();
    }
    let digest = hex::encode(Sha256::digest(body.as_bytes()));
    writeln!(body, "sha256={digest}").unwrap();
    body
}

fn corrupt(path: &Path, reason: impl Into<String>) -> Error {
    Error::CorruptCache {
        path: path.to_path_buf(),
        reason: reason.into(),
    }
}

/// Parses and verifies ctab-v1 content. The expected degree guards
/// against a file renamed across degrees.
pub fn parse_ctab(content: &str, expected_n: u64, path: &Path) -> Result<CharacterTable> {
    let digest_at = content
        .rfind("sha256=")
        .ok_or_else(|| corrupt(path, "missing sha256 trailer"))?;
    if digest_at == 0 || content.as_bytes()[digest_at - 1] != b'\n' {
        return Err(corrupt(path, "sha256 trailer is not on its own line"));
    }
    let body = &content[..digest_at];
    let stated = content[digest_at..]
        .trim_end()
        .strip_prefix("sha256=")
        .unwrap()
        .to_string();
    let actual = hex::encode(Sha256::digest(body.as_bytes()));
    if stated != actual {
        return Err(corrupt(path, "sha256 digest mismatch"));
    }

    let mut lines = body.lines();
    let header = lines.next().ok_or_else(|| corrupt(path, "empty file"))?;
    let expected_header = format!(
        "ctab-v1 N={expected_n} count={}",
        enumerate_partitions(expected_n).len()
    );
    if header != expected_header {
        return Err(corrupt(
            path,
            format!("header {header:?} does not match expected {expected_header:?}"),
        ));
    }

    let labels = enumerate_partitions(expected_n);
    for (i, lam) in labels.iter().enumerate() {
        let line = lines
            .next()
            .ok_or_else(|| corrupt(path, format!("missing label line {i}")))?;
        if line != lam.to_string() {
            return Err(corrupt(
                path,
                format!("label line {i} is {line:?}, expected {lam}"),
            ));
        }
    }

    let mut values: Vec<Vec<BigInt>> = Vec::with_capacity(labels.len());
    for i in 0..labels.len() {
        let line = lines
            .next()
            .ok_or_else(|| corrupt(path, format!("missing value row {i}")))?;
        let row: Vec<BigInt> = line
            .split_whitespace()
            .map(|tok| {
                BigInt::from_str(tok)
                    .map_err(|_| corrupt(path, format!("bad integer {tok:?} in row {i}")))
            })
            .collect::<Result<_>>()?;
        if row.len() != labels.len() {
            return Err(corrupt(
                path,
                format!("row {i} has {} values, expected {}", row.len(), labels.len()),
            ));
        }
        values.push(row);
    }
    if lines.next().is_some() {
        return Err(corrupt(path, "trailing content after value rows"));
    }

    CharacterTable::from_values(expected_n, values)
}

fn io_err(path: &Path, source: std::io::Error) -> Error {
    Error::CacheIo {
        path: path.to_path_buf(),
        source,
    }
}

/// Loads the table for degree `n` from `dir`, or builds it and writes
/// the file atomically. A present-but-invalid file is reported as
/// corrupt rather than silently rebuilt.
pub fn load_or_build(n: u64, dir: &Path) -> Result<(CharacterTable, CacheOutcome)> {
    std::fs::create_dir_all(dir).map_err(|e| io_err(dir, e))?;
    let path = cache_path(dir, n);
    if path.exists() {
        let content = std::fs::read_to_string(&path).map_err(|e| io_err(&path, e))?;
        let table = parse_ctab(&content, n, &path)?;
        return Ok((table, CacheOutcome::Hit));
    }
    let table = CharacterTable::build(n);
    let rendered = render_ctab(&table);
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| io_err(dir, e))?;
    std::io::Write::write_all(&mut tmp, rendered.as_bytes()).map_err(|e| io_err(&path, e))?;
    tmp.persist(&path)
        .map_err(|e| io_err(&path, e.error))?;
    Ok((table, CacheOutcome::Computed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn render_and_parse_round_trip() {
        for n in [0u64, 1, 3, 5] {
            let table = CharacterTable::build(n);
            let text = render_ctab(&table);
            let back = parse_ctab(&text, n, Path::new("test")).unwrap();
            for i in 0..table.rows().len() {
                for j in 0..table.classes().class_count() {
                    assert_eq!(table.value_at(i, j), back.value_at(i, j));
                }
            }
        }
    }

    #[test]
    fn rendered_shape() {
        let table = CharacterTable::build(3);
        let text = render_ctab(&table);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "ctab-v1 N=3 count=3");
        assert_eq!(&lines[1..4], &["[3]", "[2,1]", "[1,1,1]"]);
        assert_eq!(lines[4], "1 1 1");
        assert_eq!(lines[5], "2 0 -1");
        assert_eq!(lines[6], "1 -1 1");
        assert!(lines[7].starts_with("sha256="));
        assert_eq!(lines.len(), 8);
    }

    #[test]
    fn cache_hit_and_miss() {
        let dir = tempfile::tempdir().unwrap();
        let (first, outcome) = load_or_build(4, dir.path()).unwrap();
        assert_eq!(outcome, CacheOutcome::Computed);
        let (second, outcome) = load_or_build(4, dir.path()).unwrap();
        assert_eq!(outcome, CacheOutcome::Hit);
        assert_eq!(first.value_at(1, 0), second.value_at(1, 0));

        let bytes_a = std::fs::read(cache_path(dir.path(), 4)).unwrap();
        let rendered = render_ctab(&second);
        assert_eq!(bytes_a, rendered.into_bytes());
    }

    #[test]
    fn corruption_is_detected() {
        let dir = tempfile::tempdir().unwrap();
        load_or_build(3, dir.path()).unwrap();
        let path = cache_path(dir.path(), 3);

        let mut content = std::fs::read_to_string(&path).unwrap();
        content = content.replacen("2 0 -1", "2 0 1", 1);
        std::fs::write(&path, &content).unwrap();
        let err = load_or_build(3, dir.path()).unwrap_err();
        match err {
            Error::CorruptCache { reason, .. } => assert!(reason.contains("digest mismatch")),
            other => panic!("expected corrupt cache, got {other:?}"),
        }

        // a well-digested file with the wrong header is also corrupt
        let table = CharacterTable::build(2);
        let wrong = render_ctab(&table);
        std::fs::write(&path, wrong).unwrap();
        assert!(matches!(
            load_or_build(3, dir.path()),
            Err(Error::CorruptCache { .. })
        ));
    }

    #[test]
    fn identity_column_is_positive() {
        let (table, _) = load_or_build(6, tempfile::tempdir().unwrap().path()).unwrap();
        for lam in table.rows() {
            assert!(table.dimension(lam).unwrap() >= &BigInt::one());
        }
    }
}
