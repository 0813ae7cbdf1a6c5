use std::fmt;
use std::io::{self, Write};

use clap::ValueEnum;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Tab-separated columns.
    Tsv,
    /// "index value" lines.
    Bfile,
    /// One JSON object per line; big integers are strings.
    Jsonl,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Tsv => "tsv",
            Format::Bfile => "bfile",
            Format::Jsonl => "jsonl",
        })
    }
}

pub fn tsv(out: &mut impl Write, fields: &[&dyn fmt::Display]) -> io::Result<()> {
    for (i, field) in fields.iter().enumerate() {
        if i > 0 {
            out.write_all(b"\t")?;
        }
        write!(out, "{field}")?;
    }
    out.write_all(b"\n")
}

pub fn bfile(out: &mut impl Write, index: impl fmt::Display, value: impl fmt::Display) -> io::Result<()> {
    writeln!(out, "{index} {value}")
}

pub fn jsonl(out: &mut impl Write, value: Value) -> io::Result<()> {
    serde_json::to_writer(&mut *out, &value)?;
    out.write_all(b"\n")
}
