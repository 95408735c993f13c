//! Stateless HTTP scoring API.
//!
//! | Route               | Body                                  | Response                         |
//! |---------------------|---------------------------------------|----------------------------------|
//! | `POST /api/measure` | layout document, `?detail=true` opt.  | report document                  |
//! | `POST /api/rank`    | `{"layouts":[{"id","layout"}, ...]}`  | `{"ranking":[{"id","aesthetic_value","rank"}]}` |
//! | `GET /api/health`   |                                       | `{"status":"ok","version":..}`   |
//!
//! Errors are `{"code","message","field"?,"id"?}` with `code` one of
//! `malformed`, `schema`, `validation`, `too_large`, `internal`.

use std::collections::HashSet;
use std::path::PathBuf;
use std::time::Instant;

use axum::body::{to_bytes, Body};
use axum::extract::{RawQuery, Request};
use axum::http::{header, HeaderMap, StatusCode};
use axum::middleware::{self, Next};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::Serialize;
use serde_json::Value;
use tower_http::cors::CorsLayer;
use tower_http::services::{ServeDir, ServeFile};

use sda_core::{detail, parse_layout, rank, FormatError, MetricsError};

/// Largest accepted request body.
pub const MAX_BODY_BYTES: usize = 1 << 20;

/// Most layouts accepted by one rank request.
pub const MAX_RANK_ENTRIES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorCode {
    Malformed,
    Schema,
    Validation,
    TooLarge,
    Internal,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ApiError {
    #[serde(skip)]
    pub status: StatusCode,
    pub code: ErrorCode,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
}

impl ApiError {
    fn new(status: StatusCode, code: ErrorCode, message: impl Into<String>) -> Self {
        Self {
            status,
            code,
            message: message.into(),
            field: None,
            id: None,
        }
    }

    fn bad_request(code: ErrorCode, message: impl Into<String>) -> Self {
        Self::new(StatusCode::BAD_REQUEST, code, message)
    }

    fn with_field(mut self, field: impl Into<String>) -> Self {
        self.field = Some(field.into());
        self
    }

    fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = Some(id.into());
        self
    }

    fn too_large() -> Self {
        Self::new(
            StatusCode::PAYLOAD_TOO_LARGE,
            ErrorCode::TooLarge,
            format!("request body exceeds {MAX_BODY_BYTES} bytes"),
        )
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(&self)).into_response()
    }
}

impl From<FormatError> for ApiError {
    fn from(err: FormatError) -> Self {
        let message = err.to_string();
        match err {
            FormatError::MalformedSyntax { .. } => ApiError::bad_request(ErrorCode::Malformed, message),
            FormatError::SchemaViolation { field, .. } => {
                ApiError::bad_request(ErrorCode::Schema, message).with_field(field)
            }
            FormatError::Invalid(_) => ApiError::bad_request(ErrorCode::Validation, message),
        }
    }
}

impl From<MetricsError> for ApiError {
    fn from(err: MetricsError) -> Self {
        match err {
            MetricsError::Invalid(v) => ApiError::bad_request(ErrorCode::Validation, v.to_string()),
            other => ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, ErrorCode::Internal, other.to_string()),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct ServiceConfig {
    /// Directory served at `/` alongside the API.
    pub static_dir: Option<PathBuf>,
    /// Allow any origin. Development only.
    pub permissive_cors: bool,
}

pub fn router(config: &ServiceConfig) -> Router {
    let api = Router::new()
        .route("/api/health", get(health))
        .route("/api/measure", post(measure))
        .route("/api/rank", post(rank_layouts));

    let mut app = match &config.static_dir {
        Some(dir) => {
            let index = dir.join("index.html");
            api.fallback_service(ServeDir::new(dir).not_found_service(ServeFile::new(index)))
        }
        None => api,
    };
    if config.permissive_cors {
        app = app.layer(CorsLayer::permissive());
    }
    app.layer(middleware::from_fn(log_request))
}

async fn log_request(req: Request, next: Next) -> Response {
    let method = req.method().clone();
    let uri = req.uri().clone();
    let start = Instant::now();
    let response = next.run(req).await;
    log::info!(
        "{} {} {} {:.1}ms",
        method,
        uri,
        response.status().as_u16(),
        start.elapsed().as_secs_f64() * 1e3
    );
    response
}

#[derive(Serialize)]
struct Health {
    status: &'static str,
    version: &'static str,
}

async fn health() -> Json<Health> {
    Json(Health {
        status: "ok",
        version: env!("CARGO_PKG_VERSION"),
    })
}

fn require_json(headers: &HeaderMap) -> Result<(), ApiError> {
    let content_type = headers
        .get(header::CONTENT_TYPE)
        .and_then(|v| v.to_str().ok())
        .unwrap_or("");
    let mime = content_type.split(';').next().unwrap_or("").trim();
    if mime.eq_ignore_ascii_case("application/json") {
        Ok(())
    } else {
        Err(ApiError::new(
            StatusCode::UNSUPPORTED_MEDIA_TYPE,
            ErrorCode::Malformed,
            "content-type must be application/json",
        ))
    }
}

async fn read_body(headers: &HeaderMap, body: Body) -> Result<Vec<u8>, ApiError> {
    require_json(headers)?;
    let bytes = to_bytes(body, MAX_BODY_BYTES).await.map_err(|_| ApiError::too_large())?;
    Ok(bytes.to_vec())
}

fn detail_flag(query: Option<&str>) -> Result<bool, ApiError> {
    let mut detail = false;
    for pair in query.unwrap_or("").split('&').filter(|p| !p.is_empty()) {
        let (key, value) = pair.split_once('=').unwrap_or((pair, "true"));
        if key != "detail" {
            continue;
        }
        detail = match value {
            "true" | "1" => true,
            "false" | "0" => false,
            other => {
                return Err(ApiError::bad_request(
                    ErrorCode::Schema,
                    format!("detail must be true or false, got `{other}`"),
                )
                .with_field("detail"))
            }
        };
    }
    Ok(detail)
}

/// Scores one layout document. The response body is the same JSON the CLI
/// prints for `measure --format json`.
pub fn measure_document(bytes: &[u8], include_detail: bool) -> Result<Value, ApiError> {
    let layout = parse_layout(bytes)?;
    let report = detail(&layout)?;
    Ok(sda_core::report::report_json(&report, include_detail))
}

async fn measure(RawQuery(query): RawQuery, headers: HeaderMap, body: Body) -> Result<Json<Value>, ApiError> {
    let include_detail = detail_flag(query.as_deref())?;
    let bytes = read_body(&headers, body).await?;
    Ok(Json(measure_document(&bytes, include_detail)?))
}

#[derive(Serialize)]
pub struct RankResponse {
    pub ranking: Vec<sda_core::RankedEntry>,
}

/// Scores and ranks a `{"layouts":[{"id","layout"}]}` request body.
pub fn rank_document(bytes: &[u8]) -> Result<RankResponse, ApiError> {
    let doc: Value = serde_json::from_slice(bytes)
        .map_err(|e| ApiError::bad_request(ErrorCode::Malformed, format!("malformed JSON: {e}")))?;
    let schema = |field: &str, message: &str| ApiError::bad_request(ErrorCode::Schema, message).with_field(field);

    let obj = doc.as_object().ok_or_else(|| schema("$", "expected an object"))?;
    if let Some(key) = obj.keys().find(|k| *k != "layouts") {
        return Err(schema(key, &format!("unknown field `{key}`")));
    }
    let entries = obj
        .get("layouts")
        .ok_or_else(|| schema("layouts", "missing field `layouts`"))?
        .as_array()
        .ok_or_else(|| schema("layouts", "expected an array"))?;
    if entries.is_empty() || entries.len() > MAX_RANK_ENTRIES {
        return Err(schema(
            "layouts",
            &format!("expected 1 to {MAX_RANK_ENTRIES} layouts, got {}", entries.len()),
        ));
    }

    let mut seen = HashSet::new();
    let mut scored = Vec::with_capacity(entries.len());
    for (i, entry) in entries.iter().enumerate() {
        let at = |f: &str| format!("layouts[{i}].{f}");
        let entry = entry.as_object().ok_or_else(|| schema(&format!("layouts[{i}]"), "expected an object"))?;
        if let Some(key) = entry.keys().find(|k| *k != "id" && *k != "layout") {
            return Err(schema(&at(key), &format!("unknown field `{key}`")));
        }
        let id = entry
            .get("id")
            .and_then(Value::as_str)
            .ok_or_else(|| schema(&at("id"), "expected a string id"))?;
        if !seen.insert(id) {
            return Err(ApiError::bad_request(ErrorCode::Validation, format!("duplicate layout id `{id}`"))
                .with_field(at("id"))
                .with_id(id));
        }
        let layout = entry.get("layout").ok_or_else(|| schema(&at("layout"), "missing field `layout`"))?;
        let bytes = serde_json::to_vec(layout).expect("values always serialize");
        let report = measure_document(&bytes, false).map_err(|mut e| {
            e.field = Some(match e.field.take() {
                Some(f) => at(&format!("layout.{f}")),
                None => at("layout"),
            });
            e.message = format!("layout `{id}`: {}", e.message);
            e.with_id(id)
        })?;
        let value = report["aesthetic_value"]
            .as_f64()
            .expect("reports carry an aesthetic value");
        scored.push((id.to_string(), value));
    }
    Ok(RankResponse { ranking: rank(scored) })
}

async fn rank_layouts(headers: HeaderMap, body: Body) -> Result<Json<RankResponse>, ApiError> {
    let bytes = read_body(&headers, body).await?;
    Ok(Json(rank_document(&bytes)?))
}
