// SPDX-License-Identifier: Apache-2.0

use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::Json;
use serde::Serialize;
use spatialgen::ParseError;

use crate::permalink::PermalinkError;

/// JSON error body: `{code, message, position?, field?, descriptor?}`.
#[derive(Debug, Serialize)]
pub struct ApiError {
    #[serde(skip)]
    pub status: StatusCode,
    pub code: &'static str,
    pub message: String,
    /// Byte column inside the offending descriptor.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub position: Option<usize>,
    /// 1-based field index inside the offending descriptor.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<usize>,
    /// 0-based index of the offending descriptor parameter.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub descriptor: Option<usize>,
}

impl ApiError {
    pub fn bad_request(code: &'static str, message: impl Into<String>) -> Self {
        Self {
            status: StatusCode::BAD_REQUEST,
            code,
            message: message.into(),
            position: None,
            field: None,
            descriptor: None,
        }
    }

    pub fn internal(message: impl Into<String>) -> Self {
        Self {
            status: StatusCode::INTERNAL_SERVER_ERROR,
            code: "internal",
            message: message.into(),
            position: None,
            field: None,
            descriptor: None,
        }
    }

    pub fn descriptor(index: usize, e: &ParseError) -> Self {
        Self {
            position: Some(e.column),
            field: Some(e.field),
            descriptor: Some(index),
            ..Self::bad_request("invalid_descriptor", format!("descriptor {}: {e}", index + 1))
        }
    }
}

impl From<PermalinkError> for ApiError {
    fn from(e: PermalinkError) -> Self {
        Self::bad_request("invalid_permalink", e.to_string())
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(self)).into_response()
    }
}
