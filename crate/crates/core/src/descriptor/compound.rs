// SPDX-License-Identifier: Apache-2.0

use std::fmt;
use std::str::FromStr;

use super::{parse_descriptor, DatasetDescriptor};
use crate::error::{ParseError, ParseErrorKind};
use crate::rng::splitmix64;
use crate::stream::GeometryStream;

/// Seed of the random stream for part `index` of a compound dataset.
///
/// `splitmix64(seed + index * 0xD1B54A32D192ED03)`. Part 0 of a compound and
/// a dataset generated alone with the same seed share a stream.
pub fn part_seed(seed: u64, index: usize) -> u64 {
    let mut state = seed.wrapping_add((index as u64).wrapping_mul(0xD1B5_4A32_D192_ED03));
    splitmix64(&mut state)
}

/// An ordered, non-empty list of simple descriptors.
#[derive(Debug, Clone, PartialEq)]
pub struct CompoundDescriptor {
    parts: Vec<DatasetDescriptor>,
}

impl CompoundDescriptor {
    pub fn new(parts: Vec<DatasetDescriptor>) -> Option<Self> {
        (!parts.is_empty()).then_some(Self { parts })
    }

    pub fn parts(&self) -> &[DatasetDescriptor] {
        &self.parts
    }

    pub fn total_card(&self) -> u64 {
        self.parts.iter().map(DatasetDescriptor::card).sum()
    }

    /// Parses each text as one part, in order.
    pub fn parse_parts<S: AsRef<str>>(texts: &[S]) -> Result<Self, (usize, ParseError)> {
        let parts = texts
            .iter()
            .enumerate()
            .map(|(i, t)| parse_descriptor(t.as_ref()).map_err(|e| (i, e)))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(parts).ok_or((
            0,
            ParseError {
                field: 1,
                column: 0,
                kind: ParseErrorKind::Empty,
            },
        ))
    }

    pub fn generate(&self, seed: u64) -> GeometryStream {
        combine(self, seed)
    }
}

/// Concatenates the parts' datasets, each from its own derived stream.
pub fn combine(parts: &CompoundDescriptor, seed: u64) -> GeometryStream {
    GeometryStream::new(&parts.parts, seed)
}

impl From<DatasetDescriptor> for CompoundDescriptor {
    fn from(d: DatasetDescriptor) -> Self {
        Self { parts: vec![d] }
    }
}

/// Parts separated by `;`. Error columns are relative to the whole text.
impl FromStr for CompoundDescriptor {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = Vec::new();
        let mut offset = 0;
        for text in s.split(';') {
            let part = parse_descriptor(text).map_err(|mut e| {
                e.column += offset;
                e
            })?;
            parts.push(part);
            offset += text.len() + 1;
        }
        Ok(Self { parts })
    }
}

impl fmt::Display for CompoundDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{part}")?;
        }
        Ok(())
    }
}
