// SPDX-License-Identifier: Apache-2.0

//! Deterministic synthetic spatial data.
//!
//! A [`DatasetDescriptor`] names one of six distributions (uniform,
//! diagonal, gaussian, sierpinski, bit, parcel), a cardinality, the
//! distribution's parameters and an affine matrix. Together with a seed it
//! fixes every byte of the generated dataset.
//!
//! ```
//! use spatialgen::{parse_descriptor, OutputFormat};
//!
//! let d = parse_descriptor("uniform,3,2,0.02,0.02,1,0,0,0,1,0").unwrap();
//! let mut csv = Vec::new();
//! OutputFormat::Csv.write(d.generate(7), &mut csv).unwrap();
//! assert_eq!(csv.iter().filter(|&&b| b == b'\n').count(), 4);
//! ```

pub mod descriptor;
pub mod error;
pub mod generators;
pub mod geometry;
pub mod io;
pub mod rng;
pub mod stream;
pub mod transform;

pub use descriptor::{
    combine, format_descriptor, parse_descriptor, CompoundDescriptor, DatasetDescriptor,
    SAMPLE_DESCRIPTORS,
};
pub use error::{ParamError, ParseError, ParseErrorKind};
pub use generators::{BoxSize, Distribution, DistributionId, GenParams, PointDistribution};
pub use geometry::{BoxGeom, GeometryKind, Point2};
pub use io::OutputFormat;
pub use rng::{RngState, UnitSource};
pub use stream::GeometryStream;
pub use transform::AffineMatrix2D;
