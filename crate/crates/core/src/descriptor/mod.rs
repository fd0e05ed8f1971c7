// SPDX-License-Identifier: Apache-2.0

//! Dataset descriptors: the text vector that identifies a dataset.
//!
//! Grammar (one simple dataset):
//!
//! ```text
//! name,card,dim,sp1,...,spN,a1,a2,a3,a4,a5,a6[,seed=K]
//! ```
//!
//! `name` is a distribution keyword or its numeric id (1-6), `dim` must be
//! 2, and `N` depends on the distribution:
//!
//! | distribution | sp fields                |
//! |--------------|--------------------------|
//! | uniform (1)  | maxW, maxH               |
//! | diagonal (2) | maxW, maxH, perc, buf    |
//! | gaussian (3) | maxW, maxH               |
//! | sierpinski(4)| maxW, maxH               |
//! | bit (5)      | maxW, maxH, p, digits    |
//! | parcel (6)   | r, dither                |
//!
//! Canonical text uses the keyword, no whitespace and the shortest decimal
//! that round-trips each number. Compound datasets join simple descriptors
//! with `;`.

mod compound;

use std::fmt;
use std::str::FromStr;

pub use compound::{combine, part_seed, CompoundDescriptor};

use crate::error::{ParamError, ParseError, ParseErrorKind};
use crate::generators::{
    BoxSize, Distribution, DistributionId, GenParams, PointDistribution, MAX_BIT_DIGITS,
};
use crate::stream::GeometryStream;
use crate::transform::AffineMatrix2D;

/// Number of spatial dimensions supported.
pub const DIMENSIONS: u32 = 2;

/// Descriptors of the six reference sample datasets, one per distribution.
pub const SAMPLE_DESCRIPTORS: [&str; 6] = [
    "uniform,1000,2,0.02,0.02,1,0,0,0,1,0",
    "diagonal,1000,2,0.01,0.01,0.2,0.1,1,0,0,0,1,0",
    "gaussian,2000,2,0.1,0.1,1,0,0,0,1,0",
    "sierpinski,1000,2,0.01,0.01,1,0,0,0,1,0",
    "bit,5000,2,0.01,0.01,0.3,10,1,0,0,0,1,0",
    "parcel,1000,2,0.2,0.2,1,0,0,0,1,0",
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DatasetDescriptor {
    pub params: GenParams,
    pub affine: AffineMatrix2D,
    pub seed: Option<u64>,
}

impl DatasetDescriptor {
    pub fn new(params: GenParams, affine: AffineMatrix2D) -> Self {
        Self {
            params,
            affine,
            seed: None,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn distribution_id(&self) -> DistributionId {
        self.params.distribution().id()
    }

    pub fn card(&self) -> u64 {
        self.params.card()
    }

    pub fn dim(&self) -> u32 {
        DIMENSIONS
    }

    /// The distribution-specific parameters in descriptor order.
    pub fn specific_params(&self) -> Vec<f64> {
        match *self.params.distribution() {
            Distribution::Points { model, size } => {
                let mut sp = vec![size.max_w, size.max_h];
                match model {
                    PointDistribution::Diagonal { perc, buf } => sp.extend([perc, buf]),
                    PointDistribution::Bit { p, digits } => sp.extend([p, digits as f64]),
                    _ => {}
                }
                sp
            }
            Distribution::Parcel { r, dither } => vec![r, dither],
        }
    }

    /// Generates this dataset alone, as the single part of a compound.
    pub fn generate(&self, seed: u64) -> GeometryStream {
        GeometryStream::new(std::slice::from_ref(self), seed)
    }
}

pub fn parse_descriptor(text: &str) -> Result<DatasetDescriptor, ParseError> {
    Parser::new(text).parse()
}

pub fn format_descriptor(d: &DatasetDescriptor) -> String {
    d.to_string()
}

impl FromStr for DatasetDescriptor {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_descriptor(s)
    }
}

impl fmt::Display for DatasetDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.distribution_id(), self.card(), DIMENSIONS)?;
        match *self.params.distribution() {
            Distribution::Points { model, size } => {
                write!(f, ",{},{}", size.max_w, size.max_h)?;
                match model {
                    PointDistribution::Diagonal { perc, buf } => write!(f, ",{perc},{buf}")?,
                    PointDistribution::Bit { p, digits } => write!(f, ",{p},{digits}")?,
                    _ => {}
                }
            }
            Distribution::Parcel { r, dither } => write!(f, ",{r},{dither}")?,
        }
        for a in self.affine.to_array() {
            write!(f, ",{a}")?;
        }
        if let Some(seed) = self.seed {
            write!(f, ",seed={seed}")?;
        }
        Ok(())
    }
}

const AFFINE_NAMES: [&str; 6] = ["a1", "a2", "a3", "a4", "a5", "a6"];

/// One distribution-specific slot: name and admissible closed range.
struct Slot {
    name: &'static str,
    low: f64,
    high: f64,
    range: &'static str,
    integer: bool,
}

const fn slot(name: &'static str, low: f64, high: f64, range: &'static str) -> Slot {
    Slot {
        name,
        low,
        high,
        range,
        integer: false,
    }
}

const MAX_W: Slot = slot("maxW", 0.0, 1.0, "[0, 1]");
const MAX_H: Slot = slot("maxH", 0.0, 1.0, "[0, 1]");

fn slots(id: DistributionId) -> &'static [Slot] {
    const BOX: [Slot; 2] = [MAX_W, MAX_H];
    const DIAGONAL: [Slot; 4] = [
        MAX_W,
        MAX_H,
        slot("perc", 0.0, 1.0, "[0, 1]"),
        slot("buf", 0.0, 1.0, "[0, 1]"),
    ];
    const BIT: [Slot; 4] = [
        MAX_W,
        MAX_H,
        slot("p", 0.0, 1.0, "[0, 1]"),
        Slot {
            name: "digits",
            low: 1.0,
            high: MAX_BIT_DIGITS as f64,
            range: "[1, 52]",
            integer: true,
        },
    ];
    const PARCEL: [Slot; 2] = [
        slot("r", 0.0, 0.5, "[0, 0.5]"),
        slot("dither", 0.0, 1.0, "[0, 1]"),
    ];
    match id {
        DistributionId::Diagonal => &DIAGONAL,
        DistributionId::Bit => &BIT,
        DistributionId::Parcel => &PARCEL,
        _ => &BOX,
    }
}

struct Field<'a> {
    text: &'a str,
    column: usize,
}

struct Parser<'a> {
    fields: Vec<Field<'a>>,
    len: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        let mut fields = Vec::new();
        let mut column = 0;
        for raw in text.split(',') {
            let lead = raw.len() - raw.trim_start().len();
            fields.push(Field {
                text: raw.trim(),
                column: column + lead,
            });
            column += raw.len() + 1;
        }
        Self {
            fields,
            len: text.len(),
        }
    }

    fn error(&self, index: usize, kind: ParseErrorKind) -> ParseError {
        let column = self.fields.get(index).map_or(self.len, |f| f.column);
        ParseError {
            field: index + 1,
            column,
            kind,
        }
    }

    fn number(&self, index: usize, name: &'static str) -> Result<f64, ParseError> {
        let text = self.fields[index].text;
        match text.parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(v),
            _ => Err(self.error(
                index,
                ParseErrorKind::Number {
                    name,
                    text: text.to_owned(),
                },
            )),
        }
    }

    fn parse(mut self) -> Result<DatasetDescriptor, ParseError> {
        if self.fields.len() == 1 && self.fields[0].text.is_empty() {
            return Err(self.error(0, ParseErrorKind::Empty));
        }
        let name = self.fields[0].text;
        let id = DistributionId::parse(name)
            .ok_or_else(|| self.error(0, ParseErrorKind::UnknownDistribution(name.to_owned())))?;

        let mut seed = None;
        if let Some(last) = self.fields.last() {
            if let Some(value) = last.text.strip_prefix("seed") {
                let index = self.fields.len() - 1;
                let parsed = value
                    .trim_start()
                    .strip_prefix('=')
                    .and_then(|v| v.trim().parse::<u64>().ok());
                match parsed {
                    Some(v) => seed = Some(v),
                    None => return Err(self.error(index, ParseErrorKind::Seed(last.text.to_owned()))),
                }
                self.fields.pop();
            }
        }

        let slots = slots(id);
        let expected = 3 + slots.len() + AFFINE_NAMES.len();
        let found = self.fields.len();
        if found != expected {
            let at = found.min(expected);
            return Err(self.error(
                at,
                ParseErrorKind::Arity {
                    distribution: id.name(),
                    expected,
                    found,
                },
            ));
        }

        let card_text = self.fields[1].text;
        let card = card_text.parse::<u64>().map_err(|_| {
            self.error(
                1,
                ParseErrorKind::Integer {
                    name: "card",
                    text: card_text.to_owned(),
                },
            )
        })?;
        if card == 0 {
            return Err(self.error(1, ParseErrorKind::Param(ParamError::ZeroCardinality)));
        }
        let dim_text = self.fields[2].text;
        if dim_text.parse::<u32>() != Ok(DIMENSIONS) {
            return Err(self.error(2, ParseErrorKind::Dimension(dim_text.to_owned())));
        }

        let mut sp = [0.0; 4];
        for (k, slot) in slots.iter().enumerate() {
            let index = 3 + k;
            let text = self.fields[index].text;
            let value = if slot.integer {
                text.parse::<u32>().map(f64::from).map_err(|_| {
                    self.error(
                        index,
                        ParseErrorKind::Integer {
                            name: slot.name,
                            text: text.to_owned(),
                        },
                    )
                })?
            } else {
                self.number(index, slot.name)?
            };
            if !(value >= slot.low && value <= slot.high) {
                return Err(self.error(
                    index,
                    ParseErrorKind::Param(ParamError::OutOfRange {
                        name: slot.name,
                        value,
                        range: slot.range,
                    }),
                ));
            }
            sp[k] = value;
        }

        let mut a = [0.0; 6];
        for (k, name) in AFFINE_NAMES.iter().enumerate() {
            a[k] = self.number(3 + slots.len() + k, name)?;
        }

        let size = BoxSize::new(sp[0], sp[1]);
        let distribution = match id {
            DistributionId::Uniform => points(PointDistribution::Uniform, size),
            DistributionId::Diagonal => points(
                PointDistribution::Diagonal {
                    perc: sp[2],
                    buf: sp[3],
                },
                size,
            ),
            DistributionId::Gaussian => points(PointDistribution::Gaussian, size),
            DistributionId::Sierpinski => points(PointDistribution::Sierpinski, size),
            DistributionId::Bit => points(
                PointDistribution::Bit {
                    p: sp[2],
                    digits: sp[3] as u32,
                },
                size,
            ),
            DistributionId::Parcel => Distribution::Parcel {
                r: sp[0],
                dither: sp[1],
            },
        };
        let params = GenParams::new(card, distribution)
            .map_err(|e| self.error(3, ParseErrorKind::Param(e)))?;
        Ok(DatasetDescriptor {
            params,
            affine: AffineMatrix2D::new(a),
            seed,
        })
    }
}

fn points(model: PointDistribution, size: BoxSize) -> Distribution {
    Distribution::Points { model, size }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sample_rows_parse() {
        let uniform = parse_descriptor(SAMPLE_DESCRIPTORS[0]).unwrap();
        assert_eq!(uniform.distribution_id(), DistributionId::Uniform);
        assert_eq!(uniform.card(), 1000);
        assert_eq!(uniform.specific_params(), [0.02, 0.02]);
        assert!(uniform.affine.is_identity());
        assert_eq!(uniform.seed, None);

        let diag = parse_descriptor(SAMPLE_DESCRIPTORS[1]).unwrap();
        assert_eq!(
            *diag.params.distribution(),
            Distribution::Points {
                model: PointDistribution::Diagonal { perc: 0.2, buf: 0.1 },
                size: BoxSize::new(0.01, 0.01),
            }
        );

        let bit = parse_descriptor(SAMPLE_DESCRIPTORS[4]).unwrap();
        assert_eq!(bit.card(), 5000);
        assert_eq!(
            *bit.params.distribution(),
            Distribution::Points {
                model: PointDistribution::Bit { p: 0.3, digits: 10 },
                size: BoxSize::new(0.01, 0.01),
            }
        );

        let parcel = parse_descriptor(SAMPLE_DESCRIPTORS[5]).unwrap();
        assert_eq!(
            *parcel.params.distribution(),
            Distribution::Parcel { r: 0.2, dither: 0.2 }
        );
    }

    #[test]
    fn sample_rows_are_canonical() {
        for text in SAMPLE_DESCRIPTORS {
            assert_eq!(parse_descriptor(text).unwrap().to_string(), text);
        }
        assert_eq!(
            format_descriptor(&parse_descriptor(SAMPLE_DESCRIPTORS[5]).unwrap()),
            "parcel,1000,2,0.2,0.2,1,0,0,0,1,0"
        );
    }

    #[test]
    fn seed_suffix() {
        let d = parse_descriptor(SAMPLE_DESCRIPTORS[0]).unwrap().with_seed(42);
        assert_eq!(d.to_string(), "uniform,1000,2,0.02,0.02,1,0,0,0,1,0,seed=42");
        assert_eq!(parse_descriptor(&d.to_string()).unwrap(), d);
    }

    #[test]
    fn canonicalization() {
        let d = parse_descriptor(" 3 , 2000, 2, 0.10, 1e-1, 1.0,0,0,0,1,0 , seed = 9").unwrap();
        assert_eq!(d.to_string(), "gaussian,2000,2,0.1,0.1,1,0,0,0,1,0,seed=9");
        assert_eq!(parse_descriptor("BIT,10,2,0,0,0.5,3,1,0,0,0,1,0").unwrap().to_string(),
            "bit,10,2,0,0,0.5,3,1,0,0,0,1,0");
    }

    fn err(text: &str) -> ParseError {
        parse_descriptor(text).unwrap_err()
    }

    #[test]
    fn errors_carry_positions() {
        let e = err("");
        assert_eq!(e.kind, ParseErrorKind::Empty);

        let e = err("zipf,10,2,0,0,1,0,0,0,1,0");
        assert_eq!((e.field, e.column), (1, 0));
        assert!(matches!(e.kind, ParseErrorKind::UnknownDistribution(_)));

        let e = err("uniform,10,2,0.01,1,0,0,0,1,0");
        assert!(matches!(
            e.kind,
            ParseErrorKind::Arity { expected: 11, found: 10, .. }
        ));
        assert_eq!(e.field, 11);

        let e = err("uniform,10,2,0.01,0.01,0.5,1,0,0,0,1,0");
        assert!(matches!(e.kind, ParseErrorKind::Arity { found: 12, .. }));
        assert_eq!(e.field, 12);

        let e = err("uniform,ten,2,0.01,0.01,1,0,0,0,1,0");
        assert_eq!((e.field, e.column), (2, 8));

        let e = err("uniform,0,2,0.01,0.01,1,0,0,0,1,0");
        assert_eq!(e.kind, ParseErrorKind::Param(ParamError::ZeroCardinality));

        let e = err("uniform,10,3,0.01,0.01,1,0,0,0,1,0");
        assert_eq!(e.field, 3);
        assert!(matches!(e.kind, ParseErrorKind::Dimension(_)));

        let e = err("diagonal,10,2,0.01,0.01,1.5,0.1,1,0,0,0,1,0");
        assert_eq!((e.field, e.column), (6, 24));
        assert!(e.to_string().contains("perc"), "{e}");

        let e = err("bit,10,2,0.01,0.01,0.3,10.5,1,0,0,0,1,0");
        assert_eq!(e.field, 7);
        let e = err("bit,10,2,0.01,0.01,0.3,53,1,0,0,0,1,0");
        assert_eq!(e.field, 7);

        let e = err("parcel,10,2,0.6,0.1,1,0,0,0,1,0");
        assert_eq!(e.field, 4);

        let e = err("uniform,10,2,0.01,0.01,1,0,x,0,1,0");
        assert_eq!(e.field, 8);
        let e = err("uniform,10,2,0.01,0.01,1,0,inf,0,1,0");
        assert_eq!(e.field, 8);
        let e = err("uniform,10,2,0.01,NaN,1,0,0,0,1,0");
        assert_eq!(e.field, 5);

        let e = err("uniform,10,2,0.01,0.01,1,0,0,0,1,0,seed=-1");
        assert_eq!(e.field, 12);
        assert!(matches!(e.kind, ParseErrorKind::Seed(_)));
    }

    fn unit() -> impl Strategy<Value = f64> {
        prop_oneof![Just(0.0), Just(1.0), 0.0f64..=1.0]
    }

    fn finite() -> impl Strategy<Value = f64> {
        prop_oneof![Just(0.0), Just(1.0), -1e6f64..1e6, any::<f64>().prop_filter("finite", |v| v.is_finite())]
    }

    pub(crate) fn descriptor_strategy() -> impl Strategy<Value = DatasetDescriptor> {
        let model = prop_oneof![
            Just(PointDistribution::Uniform),
            (unit(), unit()).prop_map(|(perc, buf)| PointDistribution::Diagonal { perc, buf }),
            Just(PointDistribution::Gaussian),
            Just(PointDistribution::Sierpinski),
            (unit(), 1u32..=52).prop_map(|(p, digits)| PointDistribution::Bit { p, digits }),
        ];
        let distribution = prop_oneof![
            (model, unit(), unit()).prop_map(|(model, w, h)| Distribution::Points {
                model,
                size: BoxSize::new(w, h)
            }),
            (0.0f64..=0.5, unit()).prop_map(|(r, dither)| Distribution::Parcel { r, dither }),
        ];
        (
            1u64..u64::MAX,
            distribution,
            proptest::array::uniform6(finite()),
            proptest::option::of(any::<u64>()),
        )
            .prop_map(|(card, distribution, a, seed)| DatasetDescriptor {
                params: GenParams::new(card, distribution).unwrap(),
                affine: AffineMatrix2D::new(a),
                seed,
            })
    }

    proptest! {
        #[test]
        fn parse_format_round_trip(d in descriptor_strategy()) {
            let text = d.to_string();
            let back = parse_descriptor(&text).unwrap();
            prop_assert_eq!(back, d);
            prop_assert_eq!(back.to_string(), text);
        }

        #[test]
        fn parse_never_panics(s in "[a-z0-9.,=e+-]{0,60}") {
            let _ = parse_descriptor(&s);
        }
    }
}
