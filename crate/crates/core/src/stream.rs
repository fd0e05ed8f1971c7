// SPDX-License-Identifier: Apache-2.0

use crate::descriptor::{part_seed, DatasetDescriptor};
use crate::generators::{Dataset, GenParams};
use crate::geometry::{BoxGeom, GeometryKind};
use crate::rng::RngState;
use crate::transform::{apply_affine_box, AffineMatrix2D};

/// Lazily generated, transformed geometries of one or more datasets.
///
/// Parts are generated in order; a part's generator is only built once the
/// previous part is exhausted, so at most one part's state is alive.
pub struct GeometryStream {
    pending: std::vec::IntoIter<(GenParams, AffineMatrix2D, u64)>,
    current: Option<(Dataset<RngState>, AffineMatrix2D)>,
    kind: GeometryKind,
    total: u64,
}

impl GeometryStream {
    pub(crate) fn new(parts: &[DatasetDescriptor], seed: u64) -> Self {
        let kind = if parts.iter().all(|p| p.params.distribution().emits_points()) {
            GeometryKind::Points
        } else {
            GeometryKind::Boxes
        };
        let total = parts.iter().map(DatasetDescriptor::card).sum();
        let pending: Vec<_> = parts
            .iter()
            .enumerate()
            .map(|(i, p)| (p.params, p.affine, part_seed(p.seed.unwrap_or(seed), i)))
            .collect();
        Self {
            pending: pending.into_iter(),
            current: None,
            kind,
            total,
        }
    }

    pub fn kind(&self) -> GeometryKind {
        self.kind
    }

    /// Total number of geometries across all parts.
    pub fn total(&self) -> u64 {
        self.total
    }
}

impl Iterator for GeometryStream {
    type Item = BoxGeom;

    fn next(&mut self) -> Option<BoxGeom> {
        loop {
            if let Some((dataset, affine)) = &mut self.current {
                if let Some(b) = dataset.next() {
                    return Some(apply_affine_box(affine, b));
                }
            }
            let (params, affine, seed) = self.pending.next()?;
            self.current = Some((params.generate(RngState::new(seed)), affine));
        }
    }
}

impl std::fmt::Debug for GeometryStream {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GeometryStream")
            .field("kind", &self.kind)
            .field("total", &self.total)
            .finish_non_exhaustive()
    }
}
