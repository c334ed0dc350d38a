//! Top-k ranking of supervisors against a query, and supervisor-to-supervisor
//! similarity.
//!
//! Ranking is an exhaustive scan: every profile is scored, then sorted by score
//! descending with ties broken by name ascending (byte order). The name-based
//! tie rule makes the output independent of roster order.

use std::cmp::Ordering;

use serde::Serialize;

use crate::domain::{InterestVector, QueryProfile, Roster};
use crate::error::{Error, Result};
use crate::metrics::{Metric, Score};

/// Number of results returned when the caller does not ask for a specific k.
pub const DEFAULT_K: usize = 5;

/// One row of a ranked result list.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Recommendation {
    pub name: String,
    #[serde(serialize_with = "score_value")]
    pub score: Score,
    /// 1-based.
    pub rank: usize,
}

fn score_value<S: serde::Serializer>(score: &Score, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(score.value)
}

/// Descending score, then ascending name.
fn ranking_order(a: &(&str, Score), b: &(&str, Score)) -> Ordering {
    b.1.value
        .total_cmp(&a.1.value)
        .then_with(|| a.0.as_bytes().cmp(b.0.as_bytes()))
}

fn rank(mut scored: Vec<(&str, Score)>, k: usize) -> Vec<Recommendation> {
    scored.sort_unstable_by(ranking_order);
    scored
        .into_iter()
        .take(k)
        .enumerate()
        .map(|(i, (name, score))| Recommendation {
            name: name.to_string(),
            score,
            rank: i + 1,
        })
        .collect()
}

fn score_all<'a>(
    target: &InterestVector,
    roster: &'a Roster,
    metric: Metric,
    skip: Option<&str>,
) -> Result<Vec<(&'a str, Score)>> {
    roster
        .profiles()
        .iter()
        .filter(|p| Some(p.name()) != skip)
        .map(|p| Ok((p.name(), metric.score(p.vector(), target)?)))
        .collect()
}

/// The `k` supervisors most similar to `query`; fewer if the roster is smaller.
///
/// Under [`Metric::Pearson`] a constant query or profile fails the whole call.
pub fn recommend(
    query: &QueryProfile,
    roster: &Roster,
    k: usize,
    metric: Metric,
) -> Result<Vec<Recommendation>> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    let query = query.vector();
    if query.len() != roster.schema().len() {
        return Err(Error::LengthMismatch {
            expected: roster.schema().len(),
            got: query.len(),
        });
    }
    Ok(rank(score_all(query, roster, metric, None)?, k))
}

/// Ranks every other supervisor against the named one.
pub fn top_peers(
    roster: &Roster,
    name: &str,
    k: usize,
    metric: Metric,
) -> Result<Vec<Recommendation>> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    let subject = roster.require(name)?;
    Ok(rank(
        score_all(subject.vector(), roster, metric, Some(subject.name()))?,
        k,
    ))
}

/// All-pairs similarity between supervisors, in roster order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PeerMatrix {
    pub metric: Metric,
    pub names: Vec<String>,
    /// Row-major; `cells[i][j]` is the score of profile `i` against profile `j`.
    pub cells: Vec<Vec<f64>>,
}

impl PeerMatrix {
    pub fn get(&self, a: &str, b: &str) -> Option<f64> {
        let i = self.names.iter().position(|n| n == a)?;
        let j = self.names.iter().position(|n| n == b)?;
        Some(self.cells[i][j])
    }
}

/// Scores each unordered pair once and mirrors it, so the matrix is symmetric
/// to the last bit.
pub fn peer_matrix(roster: &Roster, metric: Metric) -> Result<PeerMatrix> {
    let profiles = roster.profiles();
    let n = profiles.len();
    let mut cells = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in i..n {
            let value = metric
                .score(profiles[i].vector(), profiles[j].vector())?
                .value;
            cells[i][j] = value;
            cells[j][i] = value;
        }
    }
    Ok(PeerMatrix {
        metric,
        names: profiles.iter().map(|p| p.name().to_string()).collect(),
        cells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{AreaSchema, SupervisorProfile};

    fn roster(rows: &[(&str, &[f64])]) -> Roster {
        let schema = AreaSchema::new((0..rows[0].1.len()).map(|i| format!("A{i}"))).unwrap();
        let profiles = rows
            .iter()
            .map(|(n, r)| {
                SupervisorProfile::new(n, InterestVector::new(r.to_vec()).unwrap()).unwrap()
            })
            .collect();
        Roster::new(schema, profiles).unwrap()
    }

    fn query(r: &Roster, xs: &[f64]) -> QueryProfile {
        QueryProfile::new(r.schema(), xs).unwrap()
    }

    #[test]
    fn exact_match_ranks_first_with_perfect_score() {
        let r = roster(&[("A", &[1.0, 2.0]), ("B", &[3.0, 4.0]), ("C", &[5.0, 0.0])]);
        let out = recommend(&query(&r, &[3.0, 4.0]), &r, 1, Metric::EuclideanPercent).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].name, "B");
        assert_eq!(out[0].score.value, 100.0);
        assert_eq!(out[0].rank, 1);
    }

    #[test]
    fn ties_break_by_name() {
        let r = roster(&[("Zed", &[1.0]), ("Amy", &[3.0]), ("Bob", &[2.0])]);
        let out = recommend(&query(&r, &[2.0]), &r, 3, Metric::EuclideanUnit).unwrap();
        let names: Vec<_> = out.iter().map(|r| r.name.as_str()).collect();
        assert_eq!(names, ["Bob", "Amy", "Zed"]);
        assert_eq!(out[1].score, out[2].score);
        assert_eq!(out.iter().map(|r| r.rank).collect::<Vec<_>>(), [1, 2, 3]);
    }

    #[test]
    fn k_larger_than_roster_truncates() {
        let r = roster(&[("A", &[1.0]), ("B", &[2.0])]);
        assert_eq!(
            recommend(&query(&r, &[1.0]), &r, 50, Metric::default())
                .unwrap()
                .len(),
            2
        );
    }

    #[test]
    fn k_zero_is_rejected() {
        let r = roster(&[("A", &[1.0])]);
        assert_eq!(
            recommend(&query(&r, &[1.0]), &r, 0, Metric::default()),
            Err(Error::InvalidK)
        );
        assert_eq!(
            top_peers(&r, "A", 0, Metric::default()),
            Err(Error::InvalidK)
        );
    }

    #[test]
    fn query_length_must_match_schema() {
        let r = roster(&[("A", &[1.0, 2.0])]);
        let q = QueryProfile::from(InterestVector::new(vec![1.0, 2.0, 3.0]).unwrap());
        assert_eq!(
            recommend(&q, &r, 1, Metric::default()),
            Err(Error::LengthMismatch {
                expected: 2,
                got: 3
            })
        );
    }

    #[test]
    fn pearson_fails_on_constant_profile() {
        let r = roster(&[("A", &[1.0, 2.0, 3.0]), ("Flat", &[2.0, 2.0, 2.0])]);
        let err = recommend(&query(&r, &[1.0, 3.0, 2.0]), &r, 5, Metric::Pearson).unwrap_err();
        assert!(matches!(err, Error::ConstantVector(_)));
        let err = recommend(&query(&r, &[1.0, 1.0, 1.0]), &r, 5, Metric::Pearson).unwrap_err();
        assert!(matches!(err, Error::ConstantVector(_)));
    }

    #[test]
    fn top_peers_excludes_self() {
        let r = roster(&[("A", &[1.0, 2.0]), ("B", &[1.0, 2.0]), ("C", &[4.0, 4.0])]);
        let out = top_peers(&r, "A", 1, Metric::EuclideanPercent).unwrap();
        assert_eq!(out[0].name, "B");
        assert_eq!(out[0].score.value, 100.0);
        let all = top_peers(&r, "A", 10, Metric::EuclideanPercent).unwrap();
        assert!(all.iter().all(|x| x.name != "A"));
        assert_eq!(all.len(), 2);
    }

    #[test]
    fn top_peers_singleton_is_empty() {
        let r = roster(&[("Solo", &[1.0, 2.0])]);
        assert!(top_peers(&r, "Solo", 5, Metric::default())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn top_peers_unknown_name() {
        let r = roster(&[("Solo", &[1.0, 2.0])]);
        assert!(matches!(
            top_peers(&r, "solo", 5, Metric::default()),
            Err(Error::UnknownName { .. })
        ));
    }

    #[test]
    fn peer_matrix_diagonal_and_singleton() {
        let r = roster(&[("Solo", &[1.0, 2.0])]);
        let m = peer_matrix(&r, Metric::EuclideanPercent).unwrap();
        assert_eq!(m.cells, vec![vec![100.0]]);

        let r = roster(&[
            ("A", &[1.0, 2.0, 4.0]),
            ("B", &[0.0, 2.5, 3.0]),
            ("C", &[5.0, 0.0, 1.0]),
        ]);
        for metric in Metric::ALL {
            let m = peer_matrix(&r, metric).unwrap();
            for i in 0..3 {
                assert_eq!(m.cells[i][i], metric.perfect(), "{metric}");
                for j in 0..3 {
                    assert_eq!(m.cells[i][j].to_bits(), m.cells[j][i].to_bits());
                }
            }
        }
    }
}
