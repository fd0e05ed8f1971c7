// SPDX-License-Identifier: Apache-2.0

//! The six dataset generators.
//!
//! Five of them (uniform, diagonal, gaussian, sierpinski, bit) produce a
//! point per record, reject points that fall outside the unit square, and
//! grow each accepted point into a box with random extents. The sixth
//! (parcel) tiles the unit square by repeated splitting.
//!
//! Draw order is part of the output contract: x before y, the point before
//! its width before its height, one die roll per Sierpinski step. Rejected
//! points keep the draws they consumed but never draw extents.

mod parcel;
mod points;

use std::fmt;

pub use parcel::{generate_parcel, split_unit_square, ParcelDataset};
pub use points::{
    gen_bit_coordinate, gen_point_bit, gen_point_diagonal, gen_point_gaussian,
    gen_point_sierpinski, gen_point_uniform, generate_point_dataset, PointDataset,
    SIERPINSKI_VERTICES,
};

use crate::error::ParamError;
use crate::geometry::BoxGeom;
use crate::rng::UnitSource;

/// Largest number of binary digits for the bit distribution. Keeps every
/// coordinate exactly representable as an `f64`.
pub const MAX_BIT_DIGITS: u32 = 52;

/// Numeric distribution ids, as used in descriptors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(u8)]
pub enum DistributionId {
    Uniform = 1,
    Diagonal = 2,
    Gaussian = 3,
    Sierpinski = 4,
    Bit = 5,
    Parcel = 6,
}

impl DistributionId {
    pub const ALL: [DistributionId; 6] = [
        Self::Uniform,
        Self::Diagonal,
        Self::Gaussian,
        Self::Sierpinski,
        Self::Bit,
        Self::Parcel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Uniform => "uniform",
            Self::Diagonal => "diagonal",
            Self::Gaussian => "gaussian",
            Self::Sierpinski => "sierpinski",
            Self::Bit => "bit",
            Self::Parcel => "parcel",
        }
    }

    pub fn number(self) -> u8 {
        self as u8
    }

    /// Accepts the keyword (any case) or the numeric id.
    pub fn parse(s: &str) -> Option<Self> {
        if let Ok(n) = s.parse::<u8>() {
            return Self::ALL.into_iter().find(|d| d.number() == n);
        }
        Self::ALL
            .into_iter()
            .find(|d| d.name().eq_ignore_ascii_case(s))
    }

    /// Number of distribution-specific parameters in a descriptor.
    pub fn arity(self) -> usize {
        match self {
            Self::Diagonal | Self::Bit => 4,
            _ => 2,
        }
    }
}

impl fmt::Display for DistributionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Maximum box extents drawn for each point of a point-based dataset.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoxSize {
    pub max_w: f64,
    pub max_h: f64,
}

impl BoxSize {
    pub const POINT: BoxSize = BoxSize {
        max_w: 0.0,
        max_h: 0.0,
    };

    pub const fn new(max_w: f64, max_h: f64) -> Self {
        Self { max_w, max_h }
    }

    pub fn is_point(&self) -> bool {
        self.max_w == 0.0 && self.max_h == 0.0
    }

    fn validate(&self) -> Result<(), ParamError> {
        check_range("maxW", self.max_w, 0.0, 1.0, "[0, 1]")?;
        check_range("maxH", self.max_h, 0.0, 1.0, "[0, 1]")
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PointDistribution {
    Uniform,
    Diagonal { perc: f64, buf: f64 },
    Gaussian,
    Sierpinski,
    Bit { p: f64, digits: u32 },
}

impl PointDistribution {
    pub fn id(&self) -> DistributionId {
        match self {
            Self::Uniform => DistributionId::Uniform,
            Self::Diagonal { .. } => DistributionId::Diagonal,
            Self::Gaussian => DistributionId::Gaussian,
            Self::Sierpinski => DistributionId::Sierpinski,
            Self::Bit { .. } => DistributionId::Bit,
        }
    }

    pub fn validate(&self) -> Result<(), ParamError> {
        match *self {
            Self::Diagonal { perc, buf } => {
                check_range("perc", perc, 0.0, 1.0, "[0, 1]")?;
                check_range("buf", buf, 0.0, 1.0, "[0, 1]")
            }
            Self::Bit { p, digits } => {
                check_range("p", p, 0.0, 1.0, "[0, 1]")?;
                check_digits(digits)
            }
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Distribution {
    Points {
        model: PointDistribution,
        size: BoxSize,
    },
    Parcel {
        r: f64,
        dither: f64,
    },
}

impl Distribution {
    pub fn id(&self) -> DistributionId {
        match self {
            Self::Points { model, .. } => model.id(),
            Self::Parcel { .. } => DistributionId::Parcel,
        }
    }

    pub fn validate(&self) -> Result<(), ParamError> {
        match self {
            Self::Points { model, size } => {
                size.validate()?;
                model.validate()
            }
            Self::Parcel { r, dither } => {
                check_range("r", *r, 0.0, 0.5, "[0, 0.5]")?;
                check_range("dither", *dither, 0.0, 1.0, "[0, 1]")
            }
        }
    }

    /// True when the dataset is made of zero-extent geometries.
    pub fn emits_points(&self) -> bool {
        matches!(self, Self::Points { size, .. } if size.is_point())
    }
}

/// Validated cardinality plus distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenParams {
    card: u64,
    distribution: Distribution,
}

impl GenParams {
    pub fn new(card: u64, distribution: Distribution) -> Result<Self, ParamError> {
        if card == 0 {
            return Err(ParamError::ZeroCardinality);
        }
        distribution.validate()?;
        Ok(Self { card, distribution })
    }

    pub fn card(&self) -> u64 {
        self.card
    }

    pub fn distribution(&self) -> &Distribution {
        &self.distribution
    }

    pub fn generate<R: UnitSource>(&self, rng: R) -> Dataset<R> {
        match self.distribution {
            Distribution::Points { model, size } => {
                Dataset::Points(PointDataset::new_unchecked(self.card, model, size, rng))
            }
            Distribution::Parcel { r, dither } => {
                Dataset::Parcel(ParcelDataset::new_unchecked(self.card, r, dither, rng))
            }
        }
    }
}

/// Iterator over the boxes of one simple dataset, before transformation.
#[derive(Debug)]
pub enum Dataset<R> {
    Points(PointDataset<R>),
    Parcel(ParcelDataset<R>),
}

impl<R: UnitSource> Iterator for Dataset<R> {
    type Item = BoxGeom;

    fn next(&mut self) -> Option<BoxGeom> {
        match self {
            Self::Points(d) => d.next(),
            Self::Parcel(d) => d.next(),
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        match self {
            Self::Points(d) => d.size_hint(),
            Self::Parcel(d) => d.size_hint(),
        }
    }
}

pub(crate) fn check_range(
    name: &'static str,
    value: f64,
    low: f64,
    high: f64,
    range: &'static str,
) -> Result<(), ParamError> {
    if value >= low && value <= high {
        Ok(())
    } else {
        Err(ParamError::out_of_range(name, value, range))
    }
}

pub(crate) fn check_digits(digits: u32) -> Result<(), ParamError> {
    if (1..=MAX_BIT_DIGITS).contains(&digits) {
        Ok(())
    } else {
        Err(ParamError::out_of_range("digits", digits as f64, "[1, 52]"))
    }
}
