// SPDX-License-Identifier: Apache-2.0

/// A coordinate pair in the reference space `[0, 1]^2`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn midpoint(self, other: Point2) -> Point2 {
        Point2::new((self.x + other.x) / 2.0, (self.y + other.y) / 2.0)
    }

    /// True if both coordinates lie in the closed unit interval.
    pub fn in_unit_square(self) -> bool {
        (0.0..=1.0).contains(&self.x) && (0.0..=1.0).contains(&self.y)
    }
}

/// Axis-aligned box given by its lower-left corner and extents.
///
/// Points are boxes with zero width and height.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BoxGeom {
    pub x: f64,
    pub y: f64,
    pub w: f64,
    pub h: f64,
}

impl BoxGeom {
    pub const fn new(x: f64, y: f64, w: f64, h: f64) -> Self {
        Self { x, y, w, h }
    }

    /// Box of size `w` x `h` centred on `center`.
    pub fn centered(center: Point2, w: f64, h: f64) -> Self {
        Self::new(center.x - w / 2.0, center.y - h / 2.0, w, h)
    }

    pub fn point(p: Point2) -> Self {
        Self::new(p.x, p.y, 0.0, 0.0)
    }

    pub fn min_corner(&self) -> Point2 {
        Point2::new(self.x, self.y)
    }

    pub fn max_corner(&self) -> Point2 {
        Point2::new(self.x + self.w, self.y + self.h)
    }

    pub fn center(&self) -> Point2 {
        Point2::new(self.x + self.w / 2.0, self.y + self.h / 2.0)
    }

    pub fn area(&self) -> f64 {
        self.w * self.h
    }

    pub fn is_point(&self) -> bool {
        self.w == 0.0 && self.h == 0.0
    }
}

/// Whether a dataset is serialized as points or as boxes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeometryKind {
    Points,
    Boxes,
}
