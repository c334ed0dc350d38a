//! JSON-over-HTTP front end for the recommender.
//!
//! | route                      | body                                        |
//! |----------------------------|---------------------------------------------|
//! | `GET /api/health`          | `{status, roster_version}`                  |
//! | `GET /api/areas`           | `{areas, roster_version}`                   |
//! | `GET /api/supervisors`     | `{supervisors: [{name, ratings}], roster_version}` |
//! | `POST /api/recommend`      | `{results, metric, roster_version}`         |
//! | `GET /api/peers/{name}`    | same shape as recommend; `?k=&metric=`      |
//! | `POST /api/reload`         | `{roster_version}`                          |
//!
//! Every request reads exactly one roster snapshot, so a concurrent reload
//! is never observed half-applied.

mod error;
mod state;

use std::sync::Arc;
use std::time::Instant;

use axum::extract::rejection::JsonRejection;
use axum::extract::{Path, Query, Request, State};
use axum::http::{HeaderValue, Method};
use axum::middleware::{self, Next};
use axum::response::Response;
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use tokio::net::TcpListener;
use tower_http::cors::{AllowOrigin, Any, CorsLayer};

use advisor_match_core::{
    recommend, top_peers, Metric, QueryProfile, Recommendation, SupervisorProfile, DEFAULT_K,
};

pub use error::{ApiError, ErrorBody};
pub use state::{content_digest, AppState, Snapshot};

type Shared = Arc<AppState>;

#[derive(Debug, Clone, Deserialize)]
pub struct RecommendRequest {
    pub ratings: Vec<f64>,
    #[serde(default)]
    pub k: Option<i64>,
    #[serde(default)]
    pub metric: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RecommendResponse {
    pub results: Vec<Recommendation>,
    pub metric: Metric,
    pub roster_version: String,
}

#[derive(Debug, Serialize)]
struct AreasResponse<'a> {
    areas: &'a [String],
    roster_version: &'a str,
}

#[derive(Debug, Serialize)]
struct SupervisorsResponse<'a> {
    supervisors: &'a [SupervisorProfile],
    roster_version: &'a str,
}

#[derive(Debug, Serialize)]
struct HealthResponse<'a> {
    status: &'static str,
    roster_version: &'a str,
}

#[derive(Debug, Serialize)]
pub struct ReloadResponse {
    pub roster_version: String,
}

#[derive(Debug, Deserialize)]
pub struct PeersQuery {
    k: Option<String>,
    metric: Option<String>,
}

/// Which browser origins may call the API.
#[derive(Debug, Clone, Default)]
pub enum CorsPolicy {
    #[default]
    Permissive,
    Origins(Vec<String>),
}

fn parse_metric(raw: Option<&str>) -> Result<Metric, ApiError> {
    match raw {
        None => Ok(Metric::default()),
        Some(s) => s.parse().map_err(|e: advisor_match_core::UnknownMetric| {
            ApiError::bad_request("BadMetric", e.to_string())
        }),
    }
}

fn check_k(k: Option<i64>) -> Result<usize, ApiError> {
    match k {
        None => Ok(DEFAULT_K),
        Some(k) if k >= 1 => {
            usize::try_from(k).map_err(|_| ApiError::from(advisor_match_core::Error::InvalidK))
        }
        Some(_) => Err(advisor_match_core::Error::InvalidK.into()),
    }
}

async fn health(State(state): State<Shared>) -> Response {
    let snap = state.snapshot();
    json(&HealthResponse {
        status: "ok",
        roster_version: &snap.version,
    })
}

async fn areas(State(state): State<Shared>) -> Response {
    let snap = state.snapshot();
    json(&AreasResponse {
        areas: snap.roster.schema().areas(),
        roster_version: &snap.version,
    })
}

async fn supervisors(State(state): State<Shared>) -> Response {
    let snap = state.snapshot();
    json(&SupervisorsResponse {
        supervisors: snap.roster.profiles(),
        roster_version: &snap.version,
    })
}

async fn post_recommend(
    State(state): State<Shared>,
    body: Result<Json<RecommendRequest>, JsonRejection>,
) -> Result<Json<RecommendResponse>, ApiError> {
    let Json(req) = body.map_err(|e| ApiError::bad_request("BadRequest", e.body_text()))?;
    let k = check_k(req.k)?;
    let metric = parse_metric(req.metric.as_deref())?;
    let snap = state.snapshot();
    let query = QueryProfile::new(snap.roster.schema(), &req.ratings)?;
    let results = recommend(&query, &snap.roster, k, metric)?;
    Ok(Json(RecommendResponse {
        results,
        metric,
        roster_version: snap.version.clone(),
    }))
}

async fn get_peers(
    State(state): State<Shared>,
    Path(name): Path<String>,
    Query(params): Query<PeersQuery>,
) -> Result<Json<RecommendResponse>, ApiError> {
    let k = match params.k.as_deref() {
        None => None,
        Some(raw) => Some(raw.parse::<i64>().map_err(|_| {
            ApiError::bad_request("InvalidK", format!("k {raw:?} is not an integer"))
        })?),
    };
    let k = check_k(k)?;
    let metric = parse_metric(params.metric.as_deref())?;
    let snap = state.snapshot();
    let results = top_peers(&snap.roster, &name, k, metric)?;
    Ok(Json(RecommendResponse {
        results,
        metric,
        roster_version: snap.version.clone(),
    }))
}

async fn reload(State(state): State<Shared>) -> Result<Json<ReloadResponse>, ApiError> {
    let state = Arc::clone(&state);
    let snap = tokio::task::spawn_blocking(move || state.reload())
        .await
        .map_err(|e| {
            ApiError::new(
                axum::http::StatusCode::INTERNAL_SERVER_ERROR,
                "Internal",
                e.to_string(),
            )
        })??;
    tracing::info!(version = %snap.version, profiles = snap.roster.len(), "roster reloaded");
    Ok(Json(ReloadResponse {
        roster_version: snap.version.clone(),
    }))
}

fn json<T: Serialize>(body: &T) -> Response {
    use axum::response::IntoResponse;
    Json(body).into_response()
}

async fn log_request(req: Request, next: Next) -> Response {
    let method = req.method().clone();
    let uri = req.uri().clone();
    let started = Instant::now();
    let response = next.run(req).await;
    tracing::info!(
        "{} {} {} {:.1}ms",
        method,
        uri,
        response.status().as_u16(),
        started.elapsed().as_secs_f64() * 1e3
    );
    response
}

fn cors_layer(policy: &CorsPolicy) -> CorsLayer {
    let layer = CorsLayer::new()
        .allow_methods([Method::GET, Method::POST])
        .allow_headers(Any);
    match policy {
        CorsPolicy::Permissive => layer.allow_origin(Any),
        CorsPolicy::Origins(origins) => layer.allow_origin(AllowOrigin::list(
            origins.iter().filter_map(|o| HeaderValue::from_str(o).ok()),
        )),
    }
}

pub fn router(state: Arc<AppState>, cors: &CorsPolicy) -> Router {
    Router::new()
        .route("/api/health", get(health))
        .route("/api/areas", get(areas))
        .route("/api/supervisors", get(supervisors))
        .route("/api/recommend", post(post_recommend))
        .route("/api/peers/{name}", get(get_peers))
        .route("/api/reload", post(reload))
        .layer(cors_layer(cors))
        .layer(middleware::from_fn(log_request))
        .with_state(state)
}

/// Serves until `shutdown` resolves.
pub async fn serve(
    listener: TcpListener,
    state: Arc<AppState>,
    cors: CorsPolicy,
    shutdown: impl std::future::Future<Output = ()> + Send + 'static,
) -> std::io::Result<()> {
    axum::serve(listener, router(state, &cors))
        .with_graceful_shutdown(shutdown)
        .await
}
