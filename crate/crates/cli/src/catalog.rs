//! Append-only JSONL catalog of parabolic reports, one record per
//! `(digest, subset)`.

use std::collections::HashSet;
use std::fs::OpenOptions;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::render::ReportView;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Serialize)]
pub struct CatalogRecord<'a> {
    pub digest: &'a str,
    pub subset: Vec<String>,
    pub report: ReportView,
    pub tool_version: &'static str,
    pub format_version: u32,
}

#[derive(Deserialize)]
struct RecordKey {
    digest: String,
    subset: Vec<String>,
}

#[derive(Debug)]
pub enum CatalogError {
    Io(io::Error),
    Malformed { line: usize, message: String },
}

impl From<io::Error> for CatalogError {
    fn from(e: io::Error) -> Self {
        CatalogError::Io(e)
    }
}

/// Subsets (as label lists) already recorded for `digest`.
///
/// A trailing line without a newline is the remnant of an interrupted write;
/// it is cut off so appending can resume cleanly.
pub fn existing_subsets(path: &Path, digest: &str) -> Result<HashSet<Vec<String>>, CatalogError> {
    let mut seen = HashSet::new();
    let file = match OpenOptions::new().read(true).write(true).open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(seen),
        Err(e) => return Err(e.into()),
    };
    let mut reader = BufReader::new(&file);
    let mut line = String::new();
    let mut complete_len = 0u64;
    let mut lineno = 0;
    loop {
        line.clear();
        let read = reader.read_line(&mut line)?;
        if read == 0 {
            break;
        }
        if !line.ends_with('\n') {
            file.set_len(complete_len)?;
            break;
        }
        lineno += 1;
        complete_len += read as u64;
        if line.trim().is_empty() {
            continue;
        }
        let key: RecordKey = serde_json::from_str(&line).map_err(|e| CatalogError::Malformed {
            line: lineno,
            message: e.to_string(),
        })?;
        if key.digest == digest {
            seen.insert(key.subset);
        }
    }
    Ok(seen)
}

pub struct CatalogWriter<W: Write> {
    out: BufWriter<W>,
}

impl<W: Write> CatalogWriter<W> {
    pub fn new(inner: W) -> Self {
        Self {
            out: BufWriter::new(inner),
        }
    }

    pub fn write(&mut self, record: &CatalogRecord<'_>) -> io::Result<()> {
        serde_json::to_writer(&mut self.out, record)?;
        self.out.write_all(b"\n")
    }

    pub fn finish(mut self) -> io::Result<()> {
        self.out.flush()
    }
}
