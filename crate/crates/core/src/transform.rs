// SPDX-License-Identifier: Apache-2.0

//! Affine post-transformation.
//!
//! ```text
//! | x' |   | a1 a2 a3 |   | x |
//! | y' | = | a4 a5 a6 | . | y |
//! | 1  |   | 0  0  1  |   | 1 |
//! ```
//!
//! Boxes are transformed through their lower-left and upper-right corners
//! and re-normalized so the result is axis-aligned with non-negative extents.

use crate::geometry::{BoxGeom, Point2};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineMatrix2D {
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    pub a4: f64,
    pub a5: f64,
    pub a6: f64,
}

impl AffineMatrix2D {
    pub const IDENTITY: AffineMatrix2D = AffineMatrix2D::new([1.0, 0.0, 0.0, 0.0, 1.0, 0.0]);

    pub const fn new(a: [f64; 6]) -> Self {
        Self {
            a1: a[0],
            a2: a[1],
            a3: a[2],
            a4: a[3],
            a5: a[4],
            a6: a[5],
        }
    }

    pub const fn identity() -> Self {
        Self::IDENTITY
    }

    pub fn translation(dx: f64, dy: f64) -> Self {
        Self::new([1.0, 0.0, dx, 0.0, 1.0, dy])
    }

    pub fn scale(sx: f64, sy: f64) -> Self {
        Self::new([sx, 0.0, 0.0, 0.0, sy, 0.0])
    }

    pub fn to_array(&self) -> [f64; 6] {
        [self.a1, self.a2, self.a3, self.a4, self.a5, self.a6]
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    /// `self * other`: applies `other` first.
    pub fn then_after(&self, other: &AffineMatrix2D) -> AffineMatrix2D {
        let (a, b) = (self, other);
        Self::new([
            a.a1 * b.a1 + a.a2 * b.a4,
            a.a1 * b.a2 + a.a2 * b.a5,
            a.a1 * b.a3 + a.a2 * b.a6 + a.a3,
            a.a4 * b.a1 + a.a5 * b.a4,
            a.a4 * b.a2 + a.a5 * b.a5,
            a.a4 * b.a3 + a.a5 * b.a6 + a.a6,
        ])
    }

    pub fn apply_point(&self, p: Point2) -> Point2 {
        apply_affine_point(self, p)
    }

    pub fn apply_box(&self, b: BoxGeom) -> BoxGeom {
        apply_affine_box(self, b)
    }
}

impl Default for AffineMatrix2D {
    fn default() -> Self {
        Self::IDENTITY
    }
}

pub fn apply_affine_point(m: &AffineMatrix2D, p: Point2) -> Point2 {
    Point2::new(
        m.a1 * p.x + m.a2 * p.y + m.a3,
        m.a4 * p.x + m.a5 * p.y + m.a6,
    )
}

pub fn apply_affine_box(m: &AffineMatrix2D, b: BoxGeom) -> BoxGeom {
    if m.is_identity() {
        return b;
    }
    if m.a2 == 0.0 && m.a4 == 0.0 {
        // Axis-aligned scale plus shift: extents scale directly, which keeps
        // pure translations exact.
        let (x, w) = scale_interval(m.a1, m.a3, b.x, b.w);
        let (y, h) = scale_interval(m.a5, m.a6, b.y, b.h);
        return BoxGeom::new(x, y, w, h);
    }
    let lo = apply_affine_point(m, b.min_corner());
    let hi = apply_affine_point(m, b.max_corner());
    BoxGeom::new(
        lo.x.min(hi.x),
        lo.y.min(hi.y),
        (hi.x - lo.x).abs(),
        (hi.y - lo.y).abs(),
    )
}

fn scale_interval(scale: f64, shift: f64, start: f64, len: f64) -> (f64, f64) {
    let a = scale * start + shift;
    if scale >= 0.0 {
        (a, (scale * len).abs())
    } else {
        (a + scale * len, -scale * len)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn identity_values() {
        assert_eq!(AffineMatrix2D::identity().to_array(), [1.0, 0.0, 0.0, 0.0, 1.0, 0.0]);
        let p = Point2::new(0.3, 0.4);
        assert_eq!(apply_affine_point(&AffineMatrix2D::IDENTITY, p), p);
    }

    #[test]
    fn translation_and_scale_points() {
        let p = Point2::new(0.3, 0.4);
        let t = apply_affine_point(&AffineMatrix2D::translation(0.1, 0.2), p);
        assert!((t.x - 0.4).abs() < 1e-15 && (t.y - 0.6).abs() < 1e-15);
        assert_eq!(
            apply_affine_point(&AffineMatrix2D::scale(2.0, 1.0), p),
            Point2::new(0.6, 0.4)
        );
    }

    #[test]
    fn quarter_turn_box() {
        let rot = AffineMatrix2D::new([0.0, -1.0, 1.0, 1.0, 0.0, 0.0]);
        let b = apply_affine_box(&rot, BoxGeom::new(0.0, 0.0, 0.2, 0.1));
        let want = BoxGeom::new(0.9, 0.0, 0.1, 0.2);
        for (got, want) in [(b.x, want.x), (b.y, want.y), (b.w, want.w), (b.h, want.h)] {
            assert!((got - want).abs() < 1e-15, "{b:?}");
        }
    }

    #[test]
    fn translation_keeps_extents() {
        let b = BoxGeom::new(0.123, 0.456, 0.017, 0.031);
        let t = apply_affine_box(&AffineMatrix2D::translation(0.5, -0.25), b);
        assert_eq!((t.w, t.h), (b.w, b.h));
        assert_eq!((t.x, t.y), (0.123 + 0.5, 0.456 - 0.25));
    }

    #[test]
    fn reflection_normalizes_corners() {
        let flip = AffineMatrix2D::scale(-1.0, -2.0);
        let b = apply_affine_box(&flip, BoxGeom::new(0.1, 0.2, 0.3, 0.4));
        assert!((b.x + 0.4).abs() < 1e-15 && (b.y + 1.2).abs() < 1e-15);
        assert!((b.w - 0.3).abs() < 1e-15 && (b.h - 0.8).abs() < 1e-15);
    }

    #[test]
    fn composition_matches_hand_product() {
        let t = AffineMatrix2D::translation(0.1, 0.2);
        let s = AffineMatrix2D::scale(2.0, 3.0);
        // S . T by hand: [2, 0, 0.2; 0, 3, 0.6]
        let st = AffineMatrix2D::new([2.0, 0.0, 0.2, 0.0, 3.0, 3.0 * 0.2]);
        assert_eq!(s.then_after(&t), st);
        let p = Point2::new(0.3, 0.4);
        let two_step = apply_affine_point(&s, apply_affine_point(&t, p));
        let one_step = apply_affine_point(&st, p);
        assert!((two_step.x - one_step.x).abs() < 1e-15);
        assert!((two_step.y - one_step.y).abs() < 1e-15);
    }

    proptest! {
        #[test]
        fn identity_is_bit_exact(x in -10.0f64..10.0, y in -10.0f64..10.0, w in 0.0f64..1.0, h in 0.0f64..1.0) {
            let b = BoxGeom::new(x, y, w, h);
            prop_assert_eq!(apply_affine_box(&AffineMatrix2D::IDENTITY, b), b);
        }

        #[test]
        fn extents_never_negative(
            a in proptest::array::uniform6(-5.0f64..5.0),
            x in -1.0f64..1.0, y in -1.0f64..1.0, w in 0.0f64..1.0, h in 0.0f64..1.0,
        ) {
            let b = apply_affine_box(&AffineMatrix2D::new(a), BoxGeom::new(x, y, w, h));
            prop_assert!(b.w >= 0.0 && b.h >= 0.0);
        }

        #[test]
        fn box_spans_transformed_corners(
            a in proptest::array::uniform6(-5.0f64..5.0),
            x in -1.0f64..1.0, y in -1.0f64..1.0, w in 0.0f64..1.0, h in 0.0f64..1.0,
        ) {
            let m = AffineMatrix2D::new(a);
            let b = BoxGeom::new(x, y, w, h);
            let out = apply_affine_box(&m, b);
            for c in [b.min_corner(), b.max_corner()] {
                let p = apply_affine_point(&m, c);
                prop_assert!(p.x >= out.x - 1e-9 && p.x <= out.x + out.w + 1e-9);
                prop_assert!(p.y >= out.y - 1e-9 && p.y <= out.y + out.h + 1e-9);
            }
        }
    }
}
