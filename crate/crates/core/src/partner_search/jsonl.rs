//! JSON Lines triad files: enumeration output and the resumable cache.
//!
//! ```text
//! {"schema":1,"max_norm":N,"quadrant":true}
//! {"triad":[[a1,a2],[b1,b2],[c1,c2]],"source_n":[n1,n2],"norms2":[|a|²,|b|²,|c|²]}
//! ...
//! ```
//!
//! The cache additionally carries `{"done":[n1,n2]}` after the triad records
//! of each searched point; a point counts as cached only once its marker is
//! on disk.

use std::collections::{BTreeMap, BTreeSet};
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufWriter, Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::enumerate::EnumerationReport;
use crate::error::{Error, Result};
use crate::exact_core::{ResonantTriad, Wavenumber};

type Point = Wavenumber<i64>;
type Triad = ResonantTriad<i64>;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Header {
    pub schema: u32,
    pub max_norm: i64,
    pub quadrant: bool,
}

impl Header {
    pub fn new(max_norm: i64) -> Self {
        Self {
            schema: SCHEMA,
            max_norm,
            quadrant: true,
        }
    }

    fn check(&self) -> Result<()> {
        if self.schema != SCHEMA || !self.quadrant {
            return Err(Error::Format(format!("unsupported header {self:?}")));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TriadRecord {
    pub triad: Triad,
    pub source_n: Point,
    pub norms2: [i64; 3],
}

impl TriadRecord {
    pub fn new(triad: Triad, source_n: Point) -> Result<Self> {
        let norms2 = triad.norms2()?;
        Ok(Self {
            triad,
            source_n,
            norms2,
        })
    }

    fn validate(&self) -> Result<()> {
        if self.triad.norms2()? != self.norms2 {
            return Err(Error::Format(format!("norms2 mismatch for triad {}", self.triad)));
        }
        Ok(())
    }
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum CacheLine {
    Done { done: Point },
    Triad(TriadRecord),
}

#[derive(Serialize)]
struct DoneMarker<'a> {
    done: &'a Point,
}

/// Writes the header and one record per triad, in canonical triad order.
pub fn write_report<W: Write>(report: &EnumerationReport, out: W) -> Result<()> {
    let mut out = BufWriter::new(out);
    serde_json::to_writer(&mut out, &Header::new(report.max_norm))?;
    out.write_all(b"\n")?;
    for (triad, src) in &report.triads {
        serde_json::to_writer(&mut out, &TriadRecord::new(triad.clone(), src.clone())?)?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

/// Parses a file produced by [`write_report`]; every triad is re-validated.
pub fn read_report<R: BufRead>(input: R) -> Result<EnumerationReport> {
    let mut lines = input.lines();
    let header = match lines.next() {
        Some(line) => serde_json::from_str::<Header>(&line?).map_err(|e| Error::Format(format!("bad header: {e}")))?,
        None => return Err(Error::Format("empty file".into())),
    };
    header.check()?;
    let mut triads = BTreeMap::new();
    for (i, line) in lines.enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let rec: TriadRecord =
            serde_json::from_str(&line).map_err(|e| Error::Format(format!("line {}: {e}", i + 2)))?;
        rec.validate()?;
        triads.insert(rec.triad, rec.source_n);
    }
    Ok(EnumerationReport::from_triads(header.max_norm, triads))
}

/// Append-only per-point cache with a single writer.
pub(crate) struct Cache {
    file: BufWriter<File>,
    done: BTreeMap<Point, Vec<Triad>>,
}

impl Cache {
    /// Opens or creates the cache. A torn final line from an interrupted run
    /// is cut off; triad records without a following marker are ignored.
    pub(crate) fn open(path: &Path, max_norm: i64) -> Result<Self> {
        if !path.exists() {
            let mut file = BufWriter::new(File::create(path)?);
            serde_json::to_writer(&mut file, &Header::new(max_norm))?;
            file.write_all(b"\n")?;
            file.flush()?;
            return Ok(Self {
                file,
                done: BTreeMap::new(),
            });
        }

        let mut text = String::new();
        File::open(path)?.read_to_string(&mut text)?;
        let complete = text.rfind('\n').map_or(0, |i| i + 1);
        let body = &text[..complete];
        let mut lines = body.lines();
        let header: Header = match lines.next() {
            Some(l) => serde_json::from_str(l).map_err(|e| Error::Format(format!("bad cache header: {e}")))?,
            None => return Err(Error::Format("cache file has no complete header".into())),
        };
        header.check()?;

        let mut open: BTreeMap<Point, BTreeSet<Triad>> = BTreeMap::new();
        let mut done = BTreeMap::new();
        for (i, line) in lines.enumerate() {
            let rec: CacheLine =
                serde_json::from_str(line).map_err(|e| Error::Format(format!("cache line {}: {e}", i + 2)))?;
            match rec {
                CacheLine::Triad(r) => {
                    r.validate()?;
                    open.entry(r.source_n).or_default().insert(r.triad);
                }
                CacheLine::Done { done: p } => {
                    let ts = open.remove(&p).unwrap_or_default();
                    done.insert(p, ts.into_iter().collect());
                }
            }
        }

        let file = OpenOptions::new().write(true).open(path)?;
        file.set_len(complete as u64)?;
        let mut file = OpenOptions::new().append(true).open(path)?;
        file.flush()?;
        Ok(Self {
            file: BufWriter::new(file),
            done,
        })
    }

    pub(crate) fn lookup(&self, p: &Point) -> Option<&[Triad]> {
        self.done.get(p).map(Vec::as_slice)
    }

    pub(crate) fn append(&mut self, p: &Point, triads: &[Triad]) -> Result<()> {
        for t in triads {
            serde_json::to_writer(&mut self.file, &TriadRecord::new(t.clone(), p.clone())?)?;
            self.file.write_all(b"\n")?;
        }
        serde_json::to_writer(&mut self.file, &DoneMarker { done: p })?;
        self.file.write_all(b"\n")?;
        self.done.insert(p.clone(), triads.to_vec());
        Ok(())
    }

    pub(crate) fn flush(&mut self) -> Result<()> {
        self.file.flush()?;
        Ok(())
    }
}
