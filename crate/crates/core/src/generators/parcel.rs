// SPDX-License-Identifier: Apache-2.0

use std::collections::VecDeque;

use super::{Distribution, GenParams};
use crate::error::ParamError;
use crate::geometry::BoxGeom;
use crate::rng::{uniform_unchecked, UnitSource};

/// Tiles the unit square into `card` boxes.
///
/// Boxes are taken from the front of a FIFO queue and split across their
/// longer side (height on ties) at a fraction drawn from `U(r, 1 - r)`;
/// both halves go to the back. `on_split` sees every drawn fraction.
pub fn split_unit_square<R: UnitSource + ?Sized>(
    card: u64,
    r: f64,
    rng: &mut R,
    mut on_split: impl FnMut(f64),
) -> VecDeque<BoxGeom> {
    let mut queue = VecDeque::with_capacity(card.min(1 << 20) as usize);
    queue.push_back(BoxGeom::new(0.0, 0.0, 1.0, 1.0));
    while (queue.len() as u64) < card {
        let b = queue.pop_front().expect("queue never empties");
        let fraction = uniform_unchecked(rng, r, 1.0 - r);
        on_split(fraction);
        if b.w > b.h {
            let split = b.w * fraction;
            queue.push_back(BoxGeom::new(b.x, b.y, split, b.h));
            queue.push_back(BoxGeom::new(b.x + split, b.y, b.w - split, b.h));
        } else {
            let split = b.h * fraction;
            queue.push_back(BoxGeom::new(b.x, b.y, b.w, split));
            queue.push_back(BoxGeom::new(b.x, b.y + split, b.w, b.h - split));
        }
    }
    queue
}

/// Parcel tiles, shrunk lazily by `1 - U(0, dither)` per axis as they are
/// emitted. The lower-left corner of each tile is kept.
#[derive(Debug, Clone)]
pub struct ParcelDataset<R> {
    rng: R,
    tiles: VecDeque<BoxGeom>,
    dither: f64,
}

impl<R: UnitSource> ParcelDataset<R> {
    pub(crate) fn new_unchecked(card: u64, r: f64, dither: f64, mut rng: R) -> Self {
        let tiles = split_unit_square(card, r, &mut rng, |_| {});
        Self { rng, tiles, dither }
    }
}

pub fn generate_parcel<R: UnitSource>(
    card: u64,
    r: f64,
    dither: f64,
    rng: R,
) -> Result<ParcelDataset<R>, ParamError> {
    GenParams::new(card, Distribution::Parcel { r, dither })?;
    Ok(ParcelDataset::new_unchecked(card, r, dither, rng))
}

impl<R: UnitSource> Iterator for ParcelDataset<R> {
    type Item = BoxGeom;

    fn next(&mut self) -> Option<BoxGeom> {
        let mut b = self.tiles.pop_front()?;
        b.w *= 1.0 - uniform_unchecked(&mut self.rng, 0.0, self.dither);
        b.h *= 1.0 - uniform_unchecked(&mut self.rng, 0.0, self.dither);
        Some(b)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.tiles.len(), Some(self.tiles.len()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::RngState;

    fn sorted(mut v: Vec<BoxGeom>) -> Vec<BoxGeom> {
        v.sort_by(|a, b| {
            (a.x, a.y, a.w, a.h)
                .partial_cmp(&(b.x, b.y, b.w, b.h))
                .unwrap()
        });
        v
    }

    // shared edges may disagree in the last bit
    fn interiors_overlap(a: &BoxGeom, b: &BoxGeom) -> bool {
        const EPS: f64 = 1e-12;
        a.x + EPS < b.x + b.w
            && b.x + EPS < a.x + a.w
            && a.y + EPS < b.y + b.h
            && b.y + EPS < a.y + a.h
    }

    #[test]
    fn single_tile_is_unit_square() {
        let tiles: Vec<_> = generate_parcel(1, 0.2, 0.0, RngState::new(0)).unwrap().collect();
        assert_eq!(tiles, [BoxGeom::new(0.0, 0.0, 1.0, 1.0)]);
    }

    #[test]
    fn forced_halving_three_tiles() {
        let tiles: Vec<_> = generate_parcel(3, 0.5, 0.0, RngState::new(0)).unwrap().collect();
        assert_eq!(
            tiles,
            [
                BoxGeom::new(0.0, 0.5, 1.0, 0.5),
                BoxGeom::new(0.0, 0.0, 0.5, 0.5),
                BoxGeom::new(0.5, 0.0, 0.5, 0.5),
            ]
        );
    }

    #[test]
    fn forced_halving_four_quadrants() {
        let tiles: Vec<_> = generate_parcel(4, 0.5, 0.0, RngState::new(9)).unwrap().collect();
        assert_eq!(
            sorted(tiles),
            [
                BoxGeom::new(0.0, 0.0, 0.5, 0.5),
                BoxGeom::new(0.0, 0.5, 0.5, 0.5),
                BoxGeom::new(0.5, 0.0, 0.5, 0.5),
                BoxGeom::new(0.5, 0.5, 0.5, 0.5),
            ]
        );
    }

    #[test]
    fn tiling_covers_square_without_overlap() {
        for seed in 0..5 {
            let tiles: Vec<_> = generate_parcel(200, 0.1, 0.0, RngState::new(seed))
                .unwrap()
                .collect();
            assert_eq!(tiles.len(), 200);
            let area: f64 = tiles.iter().map(BoxGeom::area).sum();
            assert!((area - 1.0).abs() < 1e-9);
            for (i, a) in tiles.iter().enumerate() {
                assert!(a.x >= 0.0 && a.y >= 0.0 && a.x + a.w <= 1.0 + 1e-12 && a.y + a.h <= 1.0 + 1e-12);
                for b in &tiles[i + 1..] {
                    assert!(!interiors_overlap(a, b), "{a:?} {b:?}");
                }
            }
        }
    }

    #[test]
    fn split_fractions_respect_range() {
        let mut rng = RngState::new(3);
        let mut fractions = Vec::new();
        split_unit_square(500, 0.3, &mut rng, |f| fractions.push(f));
        assert_eq!(fractions.len(), 499);
        assert!(fractions.iter().all(|f| (0.3..=0.7).contains(f)));
    }

    #[test]
    fn dither_shrinks_inside_tile() {
        let mut rng = RngState::new(12);
        let tiles = split_unit_square(300, 0.2, &mut rng, |_| {});
        let dithered: Vec<_> = generate_parcel(300, 0.2, 0.6, RngState::new(12))
            .unwrap()
            .collect();
        for (t, d) in tiles.iter().zip(&dithered) {
            assert_eq!((t.x, t.y), (d.x, d.y));
            assert!(d.w <= t.w && d.h <= t.h && d.w >= 0.0 && d.h >= 0.0);
        }
    }

    #[test]
    fn dither_one_may_reach_zero_but_not_negative() {
        let ds: Vec<_> = generate_parcel(64, 0.0, 1.0, RngState::new(1)).unwrap().collect();
        assert!(ds.iter().all(|b| b.w >= 0.0 && b.h >= 0.0));
    }

    #[test]
    fn dither_area_factor_matches_independent_axes() {
        // w and h shrink by independent factors, so E[area ratio] = (1 - d/2)^2
        let d = 0.2;
        let n = 100_000u64;
        let mut rng = RngState::new(21);
        let tiles = split_unit_square(n, 0.1, &mut rng, |_| {});
        let ds: Vec<_> = generate_parcel(n, 0.1, d, RngState::new(21)).unwrap().collect();
        let ratios: Vec<f64> = tiles
            .iter()
            .zip(&ds)
            .map(|(t, b)| b.area() / t.area())
            .collect();
        let mean = ratios.iter().sum::<f64>() / n as f64;
        let var = ratios.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1) as f64;
        let expected = (1.0 - d / 2.0) * (1.0 - d / 2.0);
        assert!((mean - expected).abs() <= 4.0 * (var / n as f64).sqrt(), "{mean}");
    }
}
