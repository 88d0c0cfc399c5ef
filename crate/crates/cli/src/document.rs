//! Matrix documents: `{"rows": [[...]], "labels": [...]}` or a whitespace grid.
//!
//! A grid may carry labels on a leading `# labels: a b c` line; other lines
//! starting with `#` are comments.

use std::collections::HashSet;
use std::fmt::Write as _;

use kmcover::{CartanMatrix, Int, IntMatrix};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

const LABELS_PREFIX: &str = "labels:";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixDocument {
    pub n: usize,
    pub rows: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    #[serde(default)]
    n: Option<usize>,
    rows: Vec<Vec<i64>>,
    #[serde(default)]
    labels: Option<Vec<String>>,
}

impl MatrixDocument {
    pub fn new(rows: Vec<Vec<i64>>, labels: Option<Vec<String>>) -> Result<Self, String> {
        let n = rows.len();
        if n == 0 {
            return Err("matrix is empty".into());
        }
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(format!("row {} has {} entries, expected {n}", i + 1, row.len()));
        }
        if let Some(labels) = &labels {
            if labels.len() != n {
                return Err(format!("{} labels for a rank {n} matrix", labels.len()));
            }
            let mut seen = HashSet::new();
            if let Some(dup) = labels.iter().find(|l| !seen.insert(l.as_str())) {
                return Err(format!("duplicate label `{dup}`"));
            }
            if let Some(bad) = labels.iter().find(|l| l.is_empty() || l.contains([',', ' ', '\t'])) {
                return Err(format!("label `{bad}` is empty or contains a separator"));
            }
        }
        Ok(Self { n, rows, labels })
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        if text.trim_start().starts_with('{') {
            Self::parse_json(text)
        } else {
            Self::parse_grid(text)
        }
    }

    fn parse_json(text: &str) -> Result<Self, String> {
        let raw: RawDocument = serde_json::from_str(text).map_err(|e| e.to_string())?;
        if let Some(n) = raw.n {
            if n != raw.rows.len() {
                return Err(format!("n = {n} but {} rows given", raw.rows.len()));
            }
        }
        Self::new(raw.rows, raw.labels)
    }

    fn parse_grid(text: &str) -> Result<Self, String> {
        let mut labels = None;
        let mut rows = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if let Some(comment) = line.strip_prefix('#') {
                if let Some(list) = comment.trim_start().strip_prefix(LABELS_PREFIX) {
                    labels = Some(list.split_whitespace().map(str::to_string).collect());
                }
                continue;
            }
            if line.is_empty() {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<i64>()
                        .map_err(|_| format!("line {}: `{tok}` is not an integer", lineno + 1))
                })
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
        Self::new(rows, labels)
    }

    pub fn labels_or_default(&self) -> Vec<String> {
        self.labels
            .clone()
            .unwrap_or_else(|| (1..=self.n).map(|i| i.to_string()).collect())
    }

    pub fn from_cartan(a: &CartanMatrix) -> Self {
        let rows = a
            .matrix()
            .row_vecs()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| i64::try_from(x).expect("builtin entries are small"))
                    .collect()
            })
            .collect();
        Self {
            n: a.n(),
            rows,
            labels: Some(a.labels().to_vec()),
        }
    }

    pub fn matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, self.n, |r, c| Int::from(self.rows[r][c]))
    }

    /// `sha256:<hex>` of the canonical JSON form, default labels filled in.
    pub fn digest(&self) -> String {
        let canonical = MatrixDocument {
            labels: Some(self.labels_or_default()),
            ..self.clone()
        };
        let bytes = serde_json::to_vec(&canonical).expect("document serializes");
        format!("sha256:{}", hex::encode(Sha256::digest(&bytes)))
    }

    pub fn to_grid(&self) -> String {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        if let Some(labels) = &self.labels {
            writeln!(out, "# {LABELS_PREFIX} {}", labels.join(" ")).unwrap();
        }
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
            writeln!(out, "{}", cells.join(" ")).unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_formats() {
        let json = MatrixDocument::parse(r#"{"rows": [[2, -1], [-1, 2]], "labels": ["a", "b"]}"#).unwrap();
        let grid = MatrixDocument::parse("# labels: a b\n 2 -1\n-1  2\n").unwrap();
        assert_eq!(json, grid);
        assert_eq!(json.n, 2);
        let plain = MatrixDocument::parse("2 -1\n-1 2").unwrap();
        assert_eq!(plain.labels, None);
        assert_eq!(plain.labels_or_default(), vec!["1", "2"]);
    }

    #[test]
    fn rejects_malformed_documents() {
        assert!(MatrixDocument::parse("2 -1\n-1").is_err());
        assert!(MatrixDocument::parse("2 x\n-1 2").is_err());
        assert!(MatrixDocument::parse("").is_err());
        assert!(MatrixDocument::parse(r#"{"rows": [[2]], "labels": ["a", "b"]}"#).is_err());
        assert!(MatrixDocument::parse(r#"{"n": 3, "rows": [[2]]}"#).is_err());
        assert!(MatrixDocument::parse(r#"{"rows": [[2, 0], [0, 2]], "labels": ["a", "a"]}"#).is_err());
        assert!(MatrixDocument::parse(r#"{"rows": [[2]], "extra": 1}"#).is_err());
        assert!(MatrixDocument::parse("{ not json").is_err());
    }

    #[test]
    fn grid_round_trip() {
        let doc = MatrixDocument::new(
            vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]],
            Some(vec!["0".into(), "1".into(), "2".into()]),
        )
        .unwrap();
        assert_eq!(MatrixDocument::parse(&doc.to_grid()).unwrap(), doc);
        let json = serde_json::to_string(&doc).unwrap();
        assert_eq!(MatrixDocument::parse(&json).unwrap(), doc);
    }

    #[test]
    fn digest_ignores_format_and_default_labels() {
        let a = MatrixDocument::parse("2 -1\n-1 2").unwrap();
        let b = MatrixDocument::parse(r#"{"rows": [[2, -1], [-1, 2]], "labels": ["1", "2"]}"#).unwrap();
        assert_eq!(a.digest(), b.digest());
        let c = MatrixDocument::parse("2 -2\n-1 2").unwrap();
        assert_ne!(a.digest(), c.digest());
        assert!(a.digest().starts_with("sha256:"));
    }
}
