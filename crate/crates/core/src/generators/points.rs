// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::SQRT_2;

use super::{check_digits, check_range, BoxSize, PointDistribution};
use crate::error::ParamError;
use crate::geometry::{BoxGeom, Point2};
use crate::rng::{bernoulli_unchecked, dice5, normal_unchecked, uniform_unchecked, UnitSource};

/// Corners of the Sierpinski triangle, in the order the chaos game emits them.
pub const SIERPINSKI_VERTICES: [Point2; 3] = [
    Point2::new(0.0, 0.0),
    Point2::new(1.0, 0.0),
    Point2::new(0.5, 0.866_025_403_784_438_6),
];

pub fn gen_point_uniform<R: UnitSource + ?Sized>(rng: &mut R) -> Point2 {
    let x = uniform_unchecked(rng, 0.0, 1.0);
    let y = uniform_unchecked(rng, 0.0, 1.0);
    Point2::new(x, y)
}

/// With probability `perc` a point exactly on `x = y`; otherwise a point
/// displaced orthogonally from the diagonal by `N(0, buf / 5)`. The result
/// may leave the unit square.
pub fn gen_point_diagonal<R: UnitSource + ?Sized>(
    rng: &mut R,
    perc: f64,
    buf: f64,
) -> Result<Point2, ParamError> {
    check_range("perc", perc, 0.0, 1.0, "[0, 1]")?;
    check_range("buf", buf, 0.0, 1.0, "[0, 1]")?;
    Ok(diagonal(rng, perc, buf))
}

fn diagonal<R: UnitSource + ?Sized>(rng: &mut R, perc: f64, buf: f64) -> Point2 {
    if bernoulli_unchecked(rng, perc) == 1 {
        let v = uniform_unchecked(rng, 0.0, 1.0);
        Point2::new(v, v)
    } else {
        let c = uniform_unchecked(rng, 0.0, 1.0);
        let d = normal_unchecked(rng, 0.0, buf / 5.0);
        Point2::new(c + d / SQRT_2, c - d / SQRT_2)
    }
}

/// Both coordinates from `N(0.5, 0.1)`, x first.
pub fn gen_point_gaussian<R: UnitSource + ?Sized>(rng: &mut R) -> Point2 {
    let x = normal_unchecked(rng, 0.5, 0.1);
    let y = normal_unchecked(rng, 0.5, 0.1);
    Point2::new(x, y)
}

/// One step of the chaos game.
///
/// Steps 0, 1 and 2 return the triangle corners without drawing. Later steps
/// roll one five-sided die: 1-2 moves halfway to (0, 0), 3-4 halfway to
/// (1, 0), 5 halfway to the apex.
pub fn gen_point_sierpinski<R: UnitSource + ?Sized>(rng: &mut R, prev: Point2, i: u64) -> Point2 {
    match i {
        0..=2 => SIERPINSKI_VERTICES[i as usize],
        _ => {
            let target = match dice5(rng) {
                1 | 2 => SIERPINSKI_VERTICES[0],
                3 | 4 => SIERPINSKI_VERTICES[1],
                _ => SIERPINSKI_VERTICES[2],
            };
            prev.midpoint(target)
        }
    }
}

/// Sum of `digits` Bernoulli(p) bits weighted by 1/2, 1/4, ...
pub fn gen_bit_coordinate<R: UnitSource + ?Sized>(
    rng: &mut R,
    p: f64,
    digits: u32,
) -> Result<f64, ParamError> {
    check_range("p", p, 0.0, 1.0, "[0, 1]")?;
    check_digits(digits)?;
    Ok(bit_coordinate(rng, p, digits))
}

fn bit_coordinate<R: UnitSource + ?Sized>(rng: &mut R, p: f64, digits: u32) -> f64 {
    let mut n = 0.0;
    let mut weight = 1.0;
    for _ in 0..digits {
        weight *= 0.5;
        if bernoulli_unchecked(rng, p) == 1 {
            n += weight;
        }
    }
    n
}

pub fn gen_point_bit<R: UnitSource + ?Sized>(
    rng: &mut R,
    p: f64,
    digits: u32,
) -> Result<Point2, ParamError> {
    let x = gen_bit_coordinate(rng, p, digits)?;
    let y = gen_bit_coordinate(rng, p, digits)?;
    Ok(Point2::new(x, y))
}

/// Point generator with the little state the chaos game needs.
#[derive(Debug, Clone)]
enum PointGen {
    Uniform,
    Diagonal { perc: f64, buf: f64 },
    Gaussian,
    Sierpinski { prev: Point2 },
    Bit { p: f64, digits: u32 },
}

impl PointGen {
    fn new(model: PointDistribution) -> Self {
        match model {
            PointDistribution::Uniform => Self::Uniform,
            PointDistribution::Diagonal { perc, buf } => Self::Diagonal { perc, buf },
            PointDistribution::Gaussian => Self::Gaussian,
            PointDistribution::Sierpinski => Self::Sierpinski {
                prev: Point2::default(),
            },
            PointDistribution::Bit { p, digits } => Self::Bit { p, digits },
        }
    }

    #[inline]
    fn next<R: UnitSource>(&mut self, rng: &mut R, index: u64) -> Point2 {
        match self {
            Self::Uniform => gen_point_uniform(rng),
            Self::Diagonal { perc, buf } => diagonal(rng, *perc, *buf),
            Self::Gaussian => gen_point_gaussian(rng),
            Self::Sierpinski { prev } => {
                *prev = gen_point_sierpinski(rng, *prev, index);
                *prev
            }
            Self::Bit { p, digits } => {
                let x = bit_coordinate(rng, *p, *digits);
                let y = bit_coordinate(rng, *p, *digits);
                Point2::new(x, y)
            }
        }
    }
}

/// Rejection loop shared by the five point-based distributions.
///
/// Each accepted point `(x, y)` becomes `Box(x - w/2, y - h/2, w, h)` with
/// `w = U(0, maxW)` and `h = U(0, maxH)`.
#[derive(Debug, Clone)]
pub struct PointDataset<R> {
    rng: R,
    gen: PointGen,
    size: BoxSize,
    card: u64,
    emitted: u64,
    attempts: u64,
}

impl<R: UnitSource> PointDataset<R> {
    pub(crate) fn new_unchecked(card: u64, model: PointDistribution, size: BoxSize, rng: R) -> Self {
        Self {
            rng,
            gen: PointGen::new(model),
            size,
            card,
            emitted: 0,
            attempts: 0,
        }
    }

    /// Points drawn so far, including rejected ones.
    pub fn attempts(&self) -> u64 {
        self.attempts
    }

    pub fn emitted(&self) -> u64 {
        self.emitted
    }

    pub fn into_rng(self) -> R {
        self.rng
    }
}

/// Validates the parameters and returns the lazy dataset.
pub fn generate_point_dataset<R: UnitSource>(
    card: u64,
    model: PointDistribution,
    size: BoxSize,
    rng: R,
) -> Result<PointDataset<R>, ParamError> {
    super::GenParams::new(card, super::Distribution::Points { model, size })?;
    Ok(PointDataset::new_unchecked(card, model, size, rng))
}

impl<R: UnitSource> Iterator for PointDataset<R> {
    type Item = BoxGeom;

    fn next(&mut self) -> Option<BoxGeom> {
        if self.emitted >= self.card {
            return None;
        }
        loop {
            self.attempts += 1;
            let p = self.gen.next(&mut self.rng, self.emitted);
            if p.in_unit_square() {
                let w = uniform_unchecked(&mut self.rng, 0.0, self.size.max_w);
                let h = uniform_unchecked(&mut self.rng, 0.0, self.size.max_h);
                self.emitted += 1;
                return Some(BoxGeom::centered(p, w, h));
            }
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = usize::try_from(self.card - self.emitted).unwrap_or(usize::MAX);
        (left, Some(left))
    }
}
