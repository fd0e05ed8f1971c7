// SPDX-License-Identifier: Apache-2.0

//! HTTP front end for the generators.
//!
//! | route                         | purpose                                   |
//! |-------------------------------|-------------------------------------------|
//! | `GET  /api/generate`          | full dataset, streamed                    |
//! | `GET  /api/preview`           | first `limit` geometries as GeoJSON       |
//! | `POST /api/permalink`         | `{descriptors, seed}` to a token          |
//! | `GET  /api/permalink/{token}` | token back to `{descriptors, seed}`       |
//! | `GET  /api/samples`           | the six reference descriptors             |
//!
//! `generate` and `preview` take repeated `descriptor` parameters (one per
//! compound part), `seed` (default 0) and, for `generate`, `format`
//! (`csv`, `wkt` or `geojson`; default `csv`). Bodies are byte-identical to
//! the CLI for the same inputs.

mod error;
pub mod permalink;

use std::io::{self, Write};
use std::net::SocketAddr;

use axum::body::{Body, Bytes};
use axum::extract::{Path, RawQuery};
use axum::http::{header, HeaderValue};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use spatialgen::io::write_geojson_with_members;
use spatialgen::{CompoundDescriptor, OutputFormat, SAMPLE_DESCRIPTORS};
use tokio::sync::mpsc;
use tower_http::cors::{AllowOrigin, CorsLayer};

pub use error::ApiError;
pub use permalink::{Permalink, PermalinkError};

/// Most features a preview returns.
pub const PREVIEW_CAP: u64 = 10_000;

/// Environment variable holding the default listen port.
pub const PORT_ENV: &str = "SPATIALGEN_PORT";

pub const DEFAULT_PORT: u16 = 8080;

#[derive(Debug, Clone, Default)]
pub struct ServiceConfig {
    /// Origin allowed by CORS. `None` allows any origin.
    pub allowed_origin: Option<HeaderValue>,
}

pub fn router(config: &ServiceConfig) -> Router {
    let origin = match &config.allowed_origin {
        Some(o) => AllowOrigin::exact(o.clone()),
        None => AllowOrigin::any(),
    };
    let cors = CorsLayer::new()
        .allow_origin(origin)
        .allow_methods([axum::http::Method::GET, axum::http::Method::POST])
        .allow_headers([header::CONTENT_TYPE]);
    Router::new()
        .route("/api/generate", get(generate))
        .route("/api/preview", get(preview))
        .route("/api/permalink", post(create_permalink))
        .route("/api/permalink/{token}", get(resolve_permalink))
        .route("/api/samples", get(samples))
        .layer(cors)
}

pub async fn serve(addr: SocketAddr, config: ServiceConfig) -> io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    tracing::info!("listening on {}", listener.local_addr()?);
    axum::serve(listener, router(&config)).await
}

/// Parsed query of `generate` and `preview`.
#[derive(Debug)]
struct DatasetQuery {
    descriptors: CompoundDescriptor,
    seed: u64,
    format: OutputFormat,
    limit: Option<u64>,
}

impl DatasetQuery {
    fn parse(raw: Option<&str>) -> Result<Self, ApiError> {
        let mut texts = Vec::new();
        let mut seed = 0;
        let mut format = OutputFormat::Csv;
        let mut limit = None;
        for (key, value) in form_urlencoded::parse(raw.unwrap_or_default().as_bytes()) {
            match &*key {
                "descriptor" => texts.push(value.into_owned()),
                "seed" => {
                    seed = value.parse().map_err(|_| {
                        ApiError::bad_request("invalid_seed", format!("seed '{value}' is not a u64"))
                    })?
                }
                "format" => {
                    format = value
                        .parse()
                        .map_err(|e: spatialgen::io::UnknownFormat| ApiError::bad_request("invalid_format", e.to_string()))?
                }
                "limit" => {
                    limit = Some(value.parse().map_err(|_| {
                        ApiError::bad_request("invalid_limit", format!("limit '{value}' is not a non-negative integer"))
                    })?)
                }
                other => {
                    return Err(ApiError::bad_request(
                        "unknown_parameter",
                        format!("unknown query parameter '{other}'"),
                    ))
                }
            }
        }
        if texts.is_empty() {
            return Err(ApiError::bad_request(
                "missing_descriptor",
                "at least one descriptor parameter is required",
            ));
        }
        let descriptors = CompoundDescriptor::parse_parts(&texts)
            .map_err(|(i, e)| ApiError::descriptor(i, &e))?;
        Ok(Self {
            descriptors,
            seed,
            format,
            limit,
        })
    }
}

/// Forwards writes to the response body channel. Fails once the client
/// has gone away, which stops generation.
struct ChannelWriter {
    tx: mpsc::Sender<Result<Bytes, io::Error>>,
}

impl Write for ChannelWriter {
    fn write(&mut self, buf: &[u8]) -> io::Result<usize> {
        self.tx
            .blocking_send(Ok(Bytes::copy_from_slice(buf)))
            .map_err(|_| io::Error::new(io::ErrorKind::BrokenPipe, "client disconnected"))?;
        Ok(buf.len())
    }

    fn flush(&mut self) -> io::Result<()> {
        Ok(())
    }
}

async fn generate(RawQuery(raw): RawQuery) -> Result<Response, ApiError> {
    let query = DatasetQuery::parse(raw.as_deref())?;
    let (tx, rx) = mpsc::channel(16);
    let format = query.format;
    tokio::task::spawn_blocking(move || {
        let stream = query.descriptors.generate(query.seed);
        let err_tx = tx.clone();
        if let Err(e) = format.write(stream, ChannelWriter { tx }) {
            if e.kind() != io::ErrorKind::BrokenPipe {
                tracing::warn!("generation failed: {e}");
                let _ = err_tx.blocking_send(Err(e));
            }
        }
    });
    let body = futures::stream::unfold(rx, |mut rx| async move {
        rx.recv().await.map(|chunk| (chunk, rx))
    });
    let filename = format!("attachment; filename=\"dataset.{}\"", format.extension());
    Ok((
        [
            (header::CONTENT_TYPE, format.content_type().to_owned()),
            (header::CONTENT_DISPOSITION, filename),
        ],
        Body::from_stream(body),
    )
        .into_response())
}

#[derive(Debug, Clone, Copy, Serialize)]
struct PreviewInfo {
    requested: u64,
    limit: u64,
    clamped: bool,
    total: u64,
}

async fn preview(RawQuery(raw): RawQuery) -> Result<Response, ApiError> {
    let query = DatasetQuery::parse(raw.as_deref())?;
    let requested = query.limit.unwrap_or(PREVIEW_CAP);
    let info = PreviewInfo {
        requested,
        limit: requested.min(PREVIEW_CAP),
        clamped: requested > PREVIEW_CAP,
        total: query.descriptors.total_card(),
    };
    let body = tokio::task::spawn_blocking(move || -> io::Result<Vec<u8>> {
        let meta = serde_json::to_string(&info).map_err(io::Error::other)?;
        let stream = query.descriptors.generate(query.seed);
        let kind = stream.kind();
        let mut out = Vec::new();
        write_geojson_with_members(
            kind,
            stream.take(info.limit as usize),
            &mut out,
            &[("preview", &meta)],
        )?;
        Ok(out)
    })
    .await
    .map_err(|e| ApiError::internal(e.to_string()))?
    .map_err(|e| ApiError::internal(e.to_string()))?;
    Ok((
        [
            (header::CONTENT_TYPE, HeaderValue::from_static("application/geo+json")),
            (
                header::HeaderName::from_static("x-preview-clamped"),
                HeaderValue::from_static(if info.clamped { "true" } else { "false" }),
            ),
        ],
        body,
    )
        .into_response())
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct PermalinkPayload {
    pub descriptors: Vec<String>,
    #[serde(default)]
    pub seed: u64,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PermalinkToken {
    pub token: String,
}

async fn create_permalink(
    payload: Result<Json<PermalinkPayload>, axum::extract::rejection::JsonRejection>,
) -> Result<Json<PermalinkToken>, ApiError> {
    let Json(payload) =
        payload.map_err(|e| ApiError::bad_request("invalid_payload", e.body_text()))?;
    if payload.descriptors.is_empty() {
        return Err(ApiError::bad_request(
            "missing_descriptor",
            "at least one descriptor is required",
        ));
    }
    let descriptors = CompoundDescriptor::parse_parts(&payload.descriptors)
        .map_err(|(i, e)| ApiError::descriptor(i, &e))?;
    let token = Permalink::new(descriptors, payload.seed).encode();
    Ok(Json(PermalinkToken { token }))
}

async fn resolve_permalink(Path(token): Path<String>) -> Result<Json<PermalinkPayload>, ApiError> {
    let link = Permalink::decode(&token)?;
    Ok(Json(PermalinkPayload {
        descriptors: link
            .descriptors
            .parts()
            .iter()
            .map(ToString::to_string)
            .collect(),
        seed: link.seed,
    }))
}

async fn samples() -> Json<Vec<&'static str>> {
    Json(SAMPLE_DESCRIPTORS.to_vec())
}
