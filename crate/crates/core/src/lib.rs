//! Matching students with project supervisors by comparing interest ratings.
//!
//! A [`Roster`] of supervisor profiles is loaded from CSV ([`ingest`]), a
//! student's ratings become a [`QueryProfile`], and [`recommend`] ranks the
//! roster by similarity under a chosen [`Metric`].

pub mod domain;
pub mod error;
pub mod ingest;
pub mod metrics;
pub mod recommender;

pub use domain::{
    build_roster, validate_vector, AreaSchema, InterestVector, QueryProfile, Roster,
    SupervisorProfile,
};
pub use error::{Error, Operand, Result};
pub use ingest::{
    load_roster, parse_roster, serialize_roster, LoadError, ParseError, ParseErrorKind,
};
pub use metrics::{
    euclidean_distance, pearson_similarity, similarity_percent, similarity_unit, Distance, Metric,
    Score, UnknownMetric,
};
pub use recommender::{peer_matrix, recommend, top_peers, PeerMatrix, Recommendation, DEFAULT_K};
