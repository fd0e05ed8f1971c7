// SPDX-License-Identifier: Apache-2.0

//! Seeded random source and the primitive distributions every generator
//! draws from.
//!
//! The generator is xoshiro256** (Blackman & Vigna) with its 256-bit state
//! expanded from a 64-bit seed by SplitMix64. Unit draws take the top 53
//! bits of each output, so `next_unit` returns a multiple of 2^-53 in
//! `[0, 1)`. Both algorithms are fixed: changing either changes every
//! dataset ever produced from a descriptor.
//!
//! The primitives follow the textbook formulas literally so that output can
//! be audited by hand:
//!
//! * `bernoulli(p)` is `1` iff one draw is `< p`;
//! * `uniform(a, b)` is `(b - a) * r + a`;
//! * `normal(mu, sigma)` is Box-Muller with the sine branch,
//!   `mu + sigma * sqrt(-2 ln(1 - r1)) * sin(2 pi r2)`. The logarithm takes
//!   `1 - r1` so its argument lies in `(0, 1]`;
//! * `dice5()` is `floor(uniform(0, 5)) + 1`.

use crate::error::ParamError;

/// Anything that yields unit draws in `[0, 1)`.
///
/// Generators are written against this trait so that a scripted sequence of
/// draws can stand in for the real generator when tracing an algorithm by
/// hand.
pub trait UnitSource {
    fn next_unit(&mut self) -> f64;
}

impl<T: UnitSource + ?Sized> UnitSource for &mut T {
    fn next_unit(&mut self) -> f64 {
        (**self).next_unit()
    }
}

const UNIT_SCALE: f64 = 1.0 / (1u64 << 53) as f64;

/// One step of SplitMix64. Also used to derive per-part seeds.
pub fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// xoshiro256** state plus the seed it came from and a draw counter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RngState {
    seed: u64,
    s: [u64; 4],
    draws: u64,
}

impl RngState {
    pub fn new(seed: u64) -> Self {
        let mut sm = seed;
        let s = [
            splitmix64(&mut sm),
            splitmix64(&mut sm),
            splitmix64(&mut sm),
            splitmix64(&mut sm),
        ];
        Self { seed, s, draws: 0 }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Number of 64-bit outputs consumed since construction.
    pub fn draws(&self) -> u64 {
        self.draws
    }

    pub fn next_u64(&mut self) -> u64 {
        let s = &mut self.s;
        let result = s[1].wrapping_mul(5).rotate_left(7).wrapping_mul(9);
        let t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = s[3].rotate_left(45);
        self.draws += 1;
        result
    }
}

impl Default for RngState {
    fn default() -> Self {
        Self::new(0)
    }
}

impl UnitSource for RngState {
    #[inline]
    fn next_unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * UNIT_SCALE
    }
}

/// A fixed list of draws, replayed in order. Panics when exhausted.
#[derive(Debug, Clone)]
pub struct ScriptedDraws {
    values: Vec<f64>,
    pos: usize,
}

impl ScriptedDraws {
    pub fn new(values: impl Into<Vec<f64>>) -> Self {
        Self {
            values: values.into(),
            pos: 0,
        }
    }

    /// Draws consumed so far.
    pub fn consumed(&self) -> usize {
        self.pos
    }
}

impl UnitSource for ScriptedDraws {
    fn next_unit(&mut self) -> f64 {
        let v = *self
            .values
            .get(self.pos)
            .unwrap_or_else(|| panic!("scripted draws exhausted after {} values", self.pos));
        self.pos += 1;
        v
    }
}

fn check_unit(name: &'static str, value: f64) -> Result<(), ParamError> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(ParamError::out_of_range(name, value, "[0, 1]"))
    }
}

pub fn bernoulli<R: UnitSource + ?Sized>(rng: &mut R, p: f64) -> Result<u8, ParamError> {
    check_unit("p", p)?;
    Ok(bernoulli_unchecked(rng, p))
}

pub fn uniform<R: UnitSource + ?Sized>(rng: &mut R, a: f64, b: f64) -> Result<f64, ParamError> {
    if !(a <= b) {
        return Err(ParamError::Interval { low: a, high: b });
    }
    Ok(uniform_unchecked(rng, a, b))
}

pub fn normal<R: UnitSource + ?Sized>(rng: &mut R, mu: f64, sigma: f64) -> Result<f64, ParamError> {
    if !(sigma >= 0.0) {
        return Err(ParamError::out_of_range("sigma", sigma, "[0, inf)"));
    }
    Ok(normal_unchecked(rng, mu, sigma))
}

/// Uniform integer in `1..=5`.
pub fn dice5<R: UnitSource + ?Sized>(rng: &mut R) -> u8 {
    // 5 * r < 5 for every r < 1 representable as k * 2^-53; min() covers
    // other UnitSource implementations.
    (uniform_unchecked(rng, 0.0, 5.0).floor() as u8 + 1).min(5)
}

#[inline]
pub(crate) fn bernoulli_unchecked<R: UnitSource + ?Sized>(rng: &mut R, p: f64) -> u8 {
    u8::from(rng.next_unit() < p)
}

#[inline]
pub(crate) fn uniform_unchecked<R: UnitSource + ?Sized>(rng: &mut R, a: f64, b: f64) -> f64 {
    (b - a) * rng.next_unit() + a
}

#[inline]
pub(crate) fn normal_unchecked<R: UnitSource + ?Sized>(rng: &mut R, mu: f64, sigma: f64) -> f64 {
    let r1 = rng.next_unit();
    let r2 = rng.next_unit();
    mu + sigma * (-2.0 * (1.0 - r1).ln()).sqrt() * (2.0 * std::f64::consts::PI * r2).sin()
}
