// SPDX-License-Identifier: Apache-2.0

//! Stateless permalinks.
//!
//! A token is the URL-safe base64 (no padding) of
//! `"<canonical compound descriptor>|<seed>"` followed by the first eight
//! bytes of that text's SHA-256. The checksum rejects edited tokens; nothing
//! is stored server-side.

use base64::engine::general_purpose::URL_SAFE_NO_PAD;
use base64::Engine;
use sha2::{Digest, Sha256};
use spatialgen::{CompoundDescriptor, ParseError};

const CHECKSUM_LEN: usize = 8;

#[derive(Debug, Clone, PartialEq)]
pub struct Permalink {
    pub descriptors: CompoundDescriptor,
    pub seed: u64,
}

#[derive(Debug, thiserror::Error)]
pub enum PermalinkError {
    #[error("token is not valid base64")]
    Encoding,
    #[error("token checksum mismatch")]
    Checksum,
    #[error("token payload is malformed")]
    Payload,
    #[error("token descriptor is invalid: {0}")]
    Descriptor(#[from] ParseError),
}

impl Permalink {
    pub fn new(descriptors: CompoundDescriptor, seed: u64) -> Self {
        Self { descriptors, seed }
    }

    pub fn encode(&self) -> String {
        let text = format!("{}|{}", self.descriptors, self.seed);
        let mut bytes = text.into_bytes();
        let digest = Sha256::digest(&bytes);
        bytes.extend_from_slice(&digest[..CHECKSUM_LEN]);
        URL_SAFE_NO_PAD.encode(bytes)
    }

    pub fn decode(token: &str) -> Result<Self, PermalinkError> {
        let bytes = URL_SAFE_NO_PAD
            .decode(token)
            .map_err(|_| PermalinkError::Encoding)?;
        if bytes.len() <= CHECKSUM_LEN {
            return Err(PermalinkError::Payload);
        }
        let (text, checksum) = bytes.split_at(bytes.len() - CHECKSUM_LEN);
        if Sha256::digest(text)[..CHECKSUM_LEN] != *checksum {
            return Err(PermalinkError::Checksum);
        }
        let text = std::str::from_utf8(text).map_err(|_| PermalinkError::Payload)?;
        let (descriptors, seed) = text.rsplit_once('|').ok_or(PermalinkError::Payload)?;
        let seed = seed.parse().map_err(|_| PermalinkError::Payload)?;
        Ok(Self {
            descriptors: descriptors.parse()?,
            seed,
        })
    }
}
