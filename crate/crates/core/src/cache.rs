//! Persistent store for enumerated counts.
//!
//! One record per line, `k<TAB>n<TAB>value<LF>`, strictly sorted by `(k, n)`.
//! Anything else in the file is an error.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use num_bigint::BigUint;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default)]
pub struct CacheStore {
    path: Option<PathBuf>,
    entries: BTreeMap<(u32, usize), BigUint>,
    dirty: bool,
}

impl CacheStore {
    pub fn in_memory() -> Self {
        CacheStore::default()
    }

    /// Loads `path`; a missing file is an empty cache.
    pub fn open(path: impl Into<PathBuf>) -> Result<Self> {
        let path = path.into();
        let text = match fs::read_to_string(&path) {
            Ok(text) => text,
            Err(e) if e.kind() == io::ErrorKind::NotFound => String::new(),
            Err(e) => return Err(e.into()),
        };
        let entries = parse(&path, &text)?;
        Ok(CacheStore { path: Some(path), entries, dirty: false })
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn get(&self, k: u32, n: usize) -> Option<&BigUint> {
        self.entries.get(&(k, n))
    }

    pub fn insert(&mut self, k: u32, n: usize, value: BigUint) {
        if self.entries.get(&(k, n)) != Some(&value) {
            self.entries.insert((k, n), value);
            self.dirty = true;
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for ((k, n), v) in &self.entries {
            out.push_str(&format!("{k}\t{n}\t{v}\n"));
        }
        out
    }

    /// Writes the file if anything changed. Goes through a temporary file in
    /// the same directory so readers never see a partial cache.
    pub fn save(&mut self) -> Result<()> {
        let Some(path) = self.path.as_ref().filter(|_| self.dirty) else {
            return Ok(());
        };
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir)?;
        }
        let tmp = path.with_extension("tsv.tmp");
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(self.to_tsv().as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, path)?;
        self.dirty = false;
        Ok(())
    }
}

fn parse(path: &Path, text: &str) -> Result<BTreeMap<(u32, usize), BigUint>> {
    let mut entries = BTreeMap::new();
    let mut last: Option<(u32, usize)> = None;
    let bad = |line: usize, content: &str| Error::CacheFormat {
        path: path.to_path_buf(),
        line,
        content: content.to_string(),
    };
    for (i, line) in text.split_inclusive('\n').enumerate() {
        let Some(record) = line.strip_suffix('\n') else {
            return Err(bad(i + 1, line));
        };
        let fields: Vec<&str> = record.split('\t').collect();
        let [k, n, v] = fields[..] else {
            return Err(bad(i + 1, record));
        };
        let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
        if !digits(k) || !digits(n) || !digits(v) {
            return Err(bad(i + 1, record));
        }
        let key = match (k.parse::<u32>(), n.parse::<usize>()) {
            (Ok(k), Ok(n)) if k >= 1 && n >= 1 => (k, n),
            _ => return Err(bad(i + 1, record)),
        };
        if last.is_some_and(|prev| prev >= key) {
            return Err(bad(i + 1, record));
        }
        last = Some(key);
        let value: BigUint = v.parse().map_err(|_| bad(i + 1, record))?;
        entries.insert(key, value);
    }
    Ok(entries)
}
