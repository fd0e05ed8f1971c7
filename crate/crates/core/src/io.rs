// SPDX-License-Identifier: Apache-2.0

//! Streaming writers for CSV, WKT and GeoJSON.
//!
//! All three emit UTF-8 with `\n` line endings and print every coordinate as
//! the shortest decimal that parses back to the same `f64`. A dataset whose
//! kind is [`GeometryKind::Points`] is written as points, anything else as
//! boxes (`xmax = x + w`, `ymax = y + h`).
//!
//! ```text
//! CSV      id,x,y                      | id,xmin,ymin,xmax,ymax
//!          1,0.5,0.5                   | 1,0,0,1,1
//! WKT      POINT (0.5 0.5)             | POLYGON ((0 0, 1 0, 1 1, 0 1, 0 0))
//! GeoJSON  {"type":"FeatureCollection","features":[
//!          {"type":"Feature","id":1,"properties":{"id":1},"geometry":{...}},
//!          ...
//!          ]}
//! ```
//!
//! Polygon rings are counter-clockwise and closed.

use std::fmt;
use std::io::{self, BufWriter, Write};
use std::str::FromStr;

use crate::geometry::{BoxGeom, GeometryKind};
use crate::stream::GeometryStream;

const BUFFER_SIZE: usize = 64 * 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OutputFormat {
    Csv,
    Wkt,
    GeoJson,
}

impl OutputFormat {
    pub const ALL: [OutputFormat; 3] = [Self::Csv, Self::Wkt, Self::GeoJson];

    pub fn name(self) -> &'static str {
        match self {
            Self::Csv => "csv",
            Self::Wkt => "wkt",
            Self::GeoJson => "geojson",
        }
    }

    pub fn content_type(self) -> &'static str {
        match self {
            Self::Csv => "text/csv; charset=utf-8",
            Self::Wkt => "text/plain; charset=utf-8",
            Self::GeoJson => "application/geo+json",
        }
    }

    pub fn extension(self) -> &'static str {
        match self {
            Self::Csv => "csv",
            Self::Wkt => "wkt",
            Self::GeoJson => "geojson",
        }
    }

    /// Writes a whole stream in this format and returns the geometry count.
    pub fn write<W: Write>(self, stream: GeometryStream, sink: W) -> io::Result<u64> {
        let kind = stream.kind();
        match self {
            Self::Csv => write_csv(kind, stream, sink),
            Self::Wkt => write_wkt(kind, stream, sink),
            Self::GeoJson => write_geojson(kind, stream, sink),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown format '{0}' (expected csv, wkt or geojson)")]
pub struct UnknownFormat(pub String);

impl FromStr for OutputFormat {
    type Err = UnknownFormat;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s) || (s.eq_ignore_ascii_case("json") && *f == Self::GeoJson))
            .ok_or_else(|| UnknownFormat(s.to_owned()))
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn write_csv<W, I>(kind: GeometryKind, geoms: I, sink: W) -> io::Result<u64>
where
    W: Write,
    I: IntoIterator<Item = BoxGeom>,
{
    let mut w = BufWriter::with_capacity(BUFFER_SIZE, sink);
    let mut id = 0u64;
    match kind {
        GeometryKind::Points => {
            w.write_all(b"id,x,y\n")?;
            for g in geoms {
                id += 1;
                writeln!(w, "{id},{},{}", g.x, g.y)?;
            }
        }
        GeometryKind::Boxes => {
            w.write_all(b"id,xmin,ymin,xmax,ymax\n")?;
            for g in geoms {
                id += 1;
                let hi = g.max_corner();
                writeln!(w, "{id},{},{},{},{}", g.x, g.y, hi.x, hi.y)?;
            }
        }
    }
    w.flush()?;
    Ok(id)
}

pub fn write_wkt<W, I>(kind: GeometryKind, geoms: I, sink: W) -> io::Result<u64>
where
    W: Write,
    I: IntoIterator<Item = BoxGeom>,
{
    let mut w = BufWriter::with_capacity(BUFFER_SIZE, sink);
    let mut n = 0u64;
    for g in geoms {
        n += 1;
        match kind {
            GeometryKind::Points => writeln!(w, "POINT ({} {})", g.x, g.y)?,
            GeometryKind::Boxes => {
                let (x1, y1) = (g.x, g.y);
                let hi = g.max_corner();
                let (x2, y2) = (hi.x, hi.y);
                writeln!(
                    w,
                    "POLYGON (({x1} {y1}, {x2} {y1}, {x2} {y2}, {x1} {y2}, {x1} {y1}))"
                )?
            }
        }
    }
    w.flush()?;
    Ok(n)
}

pub fn write_geojson<W, I>(kind: GeometryKind, geoms: I, sink: W) -> io::Result<u64>
where
    W: Write,
    I: IntoIterator<Item = BoxGeom>,
{
    write_geojson_with_members(kind, geoms, sink, &[])
}

/// GeoJSON with extra top-level members. Each value must already be JSON
/// text.
pub fn write_geojson_with_members<W, I>(
    kind: GeometryKind,
    geoms: I,
    sink: W,
    members: &[(&str, &str)],
) -> io::Result<u64>
where
    W: Write,
    I: IntoIterator<Item = BoxGeom>,
{
    let mut w = BufWriter::with_capacity(BUFFER_SIZE, sink);
    w.write_all(br#"{"type":"FeatureCollection","#)?;
    for (key, value) in members {
        write!(w, "\"{key}\":{value},")?;
    }
    w.write_all(b"\"features\":[\n")?;
    let mut id = 0u64;
    for g in geoms {
        if id > 0 {
            w.write_all(b",\n")?;
        }
        id += 1;
        write!(
            w,
            r#"{{"type":"Feature","id":{id},"properties":{{"id":{id}}},"geometry":"#
        )?;
        match kind {
            GeometryKind::Points => {
                write!(w, r#"{{"type":"Point","coordinates":[{},{}]}}}}"#, g.x, g.y)?
            }
            GeometryKind::Boxes => {
                let (x1, y1) = (g.x, g.y);
                let hi = g.max_corner();
                let (x2, y2) = (hi.x, hi.y);
                write!(
                    w,
                    r#"{{"type":"Polygon","coordinates":[[[{x1},{y1}],[{x2},{y1}],[{x2},{y2}],[{x1},{y2}],[{x1},{y1}]]]}}}}"#
                )?
            }
        }
    }
    if id > 0 {
        w.write_all(b"\n")?;
    }
    w.write_all(b"]}\n")?;
    w.flush()?;
    Ok(id)
}
