use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::Json;
use serde::Serialize;

use advisor_match_core::{Error, LoadError};

/// Error body: `{code, message, line_number?}`.
#[derive(Debug, Serialize)]
pub struct ErrorBody {
    pub code: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line_number: Option<usize>,
}

#[derive(Debug)]
pub struct ApiError {
    pub status: StatusCode,
    pub body: ErrorBody,
}

impl ApiError {
    pub fn new(status: StatusCode, code: &str, message: impl Into<String>) -> Self {
        Self {
            status,
            body: ErrorBody {
                code: code.to_string(),
                message: message.into(),
                line_number: None,
            },
        }
    }

    pub fn bad_request(code: &str, message: impl Into<String>) -> Self {
        Self::new(StatusCode::BAD_REQUEST, code, message)
    }
}

impl From<Error> for ApiError {
    fn from(err: Error) -> Self {
        let status = match err {
            Error::UnknownName { .. } => StatusCode::NOT_FOUND,
            _ => StatusCode::BAD_REQUEST,
        };
        let message = match &err {
            Error::UnknownName { candidates, .. } if !candidates.is_empty() => {
                format!("{err}; did you mean: {}", candidates.join(", "))
            }
            _ => err.to_string(),
        };
        Self::new(status, err.code(), message)
    }
}

impl From<LoadError> for ApiError {
    fn from(err: LoadError) -> Self {
        match err {
            LoadError::Parse(parse) => Self {
                status: StatusCode::CONFLICT,
                body: ErrorBody {
                    code: "ParseError".into(),
                    message: parse.to_string(),
                    line_number: Some(parse.line_number),
                },
            },
            LoadError::Io { .. } => Self::new(StatusCode::CONFLICT, "ReadError", err.to_string()),
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(self.body)).into_response()
    }
}
