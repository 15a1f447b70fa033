//! Line-oriented text cache of p(0), p(1), ...
//!
//! ```text
//! pcache v1<TAB>euler
//! 0<TAB>1
//! 1<TAB>1
//! 2<TAB>2
//! ```
//!
//! The method tag after the version is optional on read.

use std::fs;
use std::io;
use std::path::Path;

use thiserror::Error;

use crate::count::BigCount;

pub const CACHE_HEADER: &str = "pcache v1";

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache io: {0}")]
    Io(#[from] io::Error),
    #[error("cache line {line}: {reason}")]
    Corrupt { line: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CacheFile {
    /// Method that produced the values, if recorded.
    pub method: Option<String>,
    /// `values[n]` = p(n), starting from n = 0.
    pub values: Vec<BigCount>,
}

fn corrupt(line: usize, reason: impl Into<String>) -> CacheError {
    CacheError::Corrupt {
        line,
        reason: reason.into(),
    }
}

impl CacheFile {
    pub fn new(method: Option<String>, values: Vec<BigCount>) -> Self {
        CacheFile { method, values }
    }

    pub fn parse(text: &str) -> Result<Self, CacheError> {
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| corrupt(0, "empty file"))?;
        let method = match header.split_once('\t') {
            None if header == CACHE_HEADER => None,
            Some((h, tag)) if h == CACHE_HEADER && !tag.is_empty() && !tag.contains('\t') => {
                Some(tag.to_string())
            }
            _ => return Err(corrupt(0, format!("bad header {header:?}"))),
        };

        let mut values = Vec::new();
        for (i, line) in lines.enumerate() {
            let lineno = i + 1;
            let (n, digits) = line
                .split_once('\t')
                .ok_or_else(|| corrupt(lineno, "expected n<TAB>digits"))?;
            let n: usize = n
                .parse()
                .map_err(|_| corrupt(lineno, format!("bad index {n:?}")))?;
            if n != values.len() {
                return Err(corrupt(
                    lineno,
                    format!("expected n = {}, found {n}", values.len()),
                ));
            }
            let v: BigCount = digits
                .parse()
                .map_err(|e| corrupt(lineno, format!("{e}")))?;
            values.push(v);
        }
        match values.first() {
            None => return Err(corrupt(1, "no entries")),
            Some(v) if *v != 1u64 => return Err(corrupt(1, "p(0) must be 1")),
            _ => {}
        }
        if !text.ends_with('\n') {
            return Err(corrupt(values.len(), "truncated final line"));
        }
        Ok(CacheFile { method, values })
    }

    pub fn render(&self) -> String {
        let mut out = String::from(CACHE_HEADER);
        if let Some(m) = &self.method {
            out.push('\t');
            out.push_str(m);
        }
        out.push('\n');
        for (n, v) in self.values.iter().enumerate() {
            out.push_str(&format!("{n}\t{v}\n"));
        }
        out
    }

    pub fn read(path: &Path) -> Result<Self, CacheError> {
        Self::parse(&fs::read_to_string(path)?)
    }

    /// Reads `path`, or returns `None` if it does not exist.
    pub fn read_if_exists(path: &Path) -> Result<Option<Self>, CacheError> {
        match fs::read_to_string(path) {
            Ok(text) => Self::parse(&text).map(Some),
            Err(e) if e.kind() == io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(e.into()),
        }
    }

    /// Writes through a temporary sibling file and renames it into place.
    pub fn write(&self, path: &Path) -> Result<(), CacheError> {
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, self.render())?;
        fs::rename(&tmp, path)?;
        Ok(())
    }
}
