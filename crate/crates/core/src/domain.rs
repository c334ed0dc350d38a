//! Interest-area schema, rating vectors, supervisor profiles and rosters.
//!
//! Every type here is validated on construction and immutable afterwards, so a
//! `Roster` can be shared between threads and scored by any number of
//! concurrent queries.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};

/// Lowest permitted rating.
pub const MIN_RATING: f64 = 0.0;
/// Highest permitted rating.
pub const MAX_RATING: f64 = 5.0;

/// The five interest areas of the supervisor questionnaire, in column order.
pub const DEFAULT_AREAS: [&str; 5] = [
    "Multimedia",
    "Web Application",
    "Network",
    "Artificial Intelligence",
    "Mobile Application",
];

/// Ordered list of interest-area names; its length is the vector dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct AreaSchema {
    areas: Vec<String>,
}

impl AreaSchema {
    pub fn new<I, S>(areas: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let areas: Vec<String> = areas
            .into_iter()
            .map(|a| a.into().trim().to_string())
            .collect();
        if areas.is_empty() {
            return Err(Error::InvalidSchema("at least one area is required".into()));
        }
        let mut seen = HashSet::new();
        for area in &areas {
            if area.is_empty() {
                return Err(Error::InvalidSchema("area names must not be empty".into()));
            }
            if area.contains([',', '\n', '\r']) {
                return Err(Error::InvalidSchema(format!(
                    "area name {area:?} contains a comma or line break"
                )));
            }
            if !seen.insert(area.as_str()) {
                return Err(Error::InvalidSchema(format!("duplicate area {area:?}")));
            }
        }
        Ok(Self { areas })
    }

    pub fn areas(&self) -> &[String] {
        &self.areas
    }

    pub fn len(&self) -> usize {
        self.areas.len()
    }

    /// Always false; a schema has at least one area.
    pub fn is_empty(&self) -> bool {
        self.areas.is_empty()
    }

    /// Checks `raw` against this schema's arity and the rating range.
    pub fn validate(&self, raw: &[f64]) -> Result<InterestVector> {
        validate_vector(self, raw)
    }
}

impl Default for AreaSchema {
    fn default() -> Self {
        Self {
            areas: DEFAULT_AREAS.iter().map(|a| a.to_string()).collect(),
        }
    }
}

/// Validates a raw rating list against `schema`. Never clamps.
pub fn validate_vector(schema: &AreaSchema, raw: &[f64]) -> Result<InterestVector> {
    if raw.len() != schema.len() {
        return Err(Error::LengthMismatch {
            expected: schema.len(),
            got: raw.len(),
        });
    }
    InterestVector::new(raw.to_vec())
}

/// Ratings in `[0, 5]`, one per area.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct InterestVector(Vec<f64>);

impl InterestVector {
    /// Range and finiteness checks only. Arity is the schema's concern, see
    /// [`validate_vector`].
    pub fn new(ratings: Vec<f64>) -> Result<Self> {
        for (index, &value) in ratings.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::NotFinite { index });
            }
            if !(MIN_RATING..=MAX_RATING).contains(&value) {
                return Err(Error::OutOfRange { index, value });
            }
        }
        Ok(Self(ratings))
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl AsRef<[f64]> for InterestVector {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

/// A student's ratings, scored against every profile of a roster.
#[derive(Debug, Clone, PartialEq)]
pub struct QueryProfile {
    vector: InterestVector,
}

impl QueryProfile {
    pub fn new(schema: &AreaSchema, raw: &[f64]) -> Result<Self> {
        Ok(Self {
            vector: validate_vector(schema, raw)?,
        })
    }

    pub fn vector(&self) -> &InterestVector {
        &self.vector
    }
}

impl From<InterestVector> for QueryProfile {
    fn from(vector: InterestVector) -> Self {
        Self { vector }
    }
}

/// One supervisor: a name and an interest vector.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SupervisorProfile {
    name: String,
    #[serde(rename = "ratings")]
    vector: InterestVector,
}

impl SupervisorProfile {
    /// Surrounding whitespace is trimmed from `name`; interior spacing is kept.
    pub fn new(name: impl AsRef<str>, vector: InterestVector) -> Result<Self> {
        let name = name.as_ref().trim();
        if name.is_empty() || name.contains([',', '\n', '\r']) {
            return Err(Error::InvalidName(name.to_string()));
        }
        Ok(Self {
            name: name.to_string(),
            vector,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vector(&self) -> &InterestVector {
        &self.vector
    }
}

/// Validated, non-empty set of profiles sharing one schema. File order is kept.
#[derive(Debug, Clone, PartialEq)]
pub struct Roster {
    schema: AreaSchema,
    profiles: Vec<SupervisorProfile>,
}

impl Roster {
    /// Reports the first violation found, scanning profiles in order.
    pub fn new(schema: AreaSchema, profiles: Vec<SupervisorProfile>) -> Result<Self> {
        if profiles.is_empty() {
            return Err(Error::EmptyRoster);
        }
        let mut names = HashSet::with_capacity(profiles.len());
        for profile in &profiles {
            if profile.vector.len() != schema.len() {
                return Err(Error::LengthMismatch {
                    expected: schema.len(),
                    got: profile.vector.len(),
                });
            }
            if !names.insert(profile.name.as_str()) {
                return Err(Error::DuplicateName(profile.name.clone()));
            }
        }
        Ok(Self { schema, profiles })
    }

    pub fn schema(&self) -> &AreaSchema {
        &self.schema
    }

    pub fn profiles(&self) -> &[SupervisorProfile] {
        &self.profiles
    }

    pub fn len(&self) -> usize {
        self.profiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.profiles.is_empty()
    }

    /// Exact, case-sensitive lookup.
    pub fn get(&self, name: &str) -> Option<&SupervisorProfile> {
        self.profiles.iter().find(|p| p.name == name)
    }

    /// Names starting with `partial`, ignoring case. Falls back to matching
    /// on the first word of `partial` when nothing matches in full.
    pub fn suggestions(&self, partial: &str) -> Vec<String> {
        let partial = partial.trim().to_lowercase();
        if partial.is_empty() {
            return Vec::new();
        }
        let matching = |prefix: &str| -> Vec<String> {
            self.profiles
                .iter()
                .filter(|p| p.name.to_lowercase().starts_with(prefix))
                .map(|p| p.name.clone())
                .collect()
        };
        let found = matching(&partial);
        if !found.is_empty() {
            return found;
        }
        match partial.split_whitespace().next() {
            Some(first) if first != partial => matching(first),
            _ => Vec::new(),
        }
    }

    /// Profile lookup that reports close candidates on a miss.
    pub fn require(&self, name: &str) -> Result<&SupervisorProfile> {
        self.get(name).ok_or_else(|| Error::UnknownName {
            name: name.to_string(),
            candidates: self.suggestions(name),
        })
    }
}

/// Same as [`Roster::new`].
pub fn build_roster(schema: AreaSchema, profiles: Vec<SupervisorProfile>) -> Result<Roster> {
    Roster::new(schema, profiles)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(name: &str, ratings: &[f64]) -> SupervisorProfile {
        SupervisorProfile::new(name, InterestVector::new(ratings.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn default_schema_is_the_five_areas_in_order() {
        let schema = AreaSchema::default();
        assert_eq!(
            schema.areas(),
            [
                "Multimedia",
                "Web Application",
                "Network",
                "Artificial Intelligence",
                "Mobile Application"
            ]
        );
    }

    #[test]
    fn schema_rejects_bad_names() {
        assert!(AreaSchema::new(Vec::<String>::new()).is_err());
        assert!(AreaSchema::new(["A", "A"]).is_err());
        assert!(AreaSchema::new(["A", "  "]).is_err());
        assert!(AreaSchema::new(["A,B"]).is_err());
        assert_eq!(AreaSchema::new([" A ", "B"]).unwrap().areas(), ["A", "B"]);
    }

    #[test]
    fn validate_vector_accepts_query_and_zero_boundary() {
        let schema = AreaSchema::default();
        let v = validate_vector(&schema, &[5.0, 4.5, 1.0, 2.5, 3.0]).unwrap();
        assert_eq!(v.as_slice(), [5.0, 4.5, 1.0, 2.5, 3.0]);
        assert!(validate_vector(&schema, &[0.0; 5]).is_ok());
    }

    #[test]
    fn validate_vector_errors() {
        let schema = AreaSchema::default();
        assert_eq!(
            validate_vector(&schema, &[1.0, 2.0, 3.0]),
            Err(Error::LengthMismatch {
                expected: 5,
                got: 3
            })
        );
        assert_eq!(
            validate_vector(&schema, &[1.0, 2.0, 5.5, 3.0, 1.0]),
            Err(Error::OutOfRange {
                index: 2,
                value: 5.5
            })
        );
        assert_eq!(
            validate_vector(&schema, &[-0.5, 2.0, 1.0, 3.0, 1.0]),
            Err(Error::OutOfRange {
                index: 0,
                value: -0.5
            })
        );
        assert_eq!(
            validate_vector(&schema, &[1.0, 2.0, 1.0, f64::NAN, 1.0]),
            Err(Error::NotFinite { index: 3 })
        );
        assert_eq!(
            validate_vector(&schema, &[1.0, f64::INFINITY, 1.0, 1.0, 1.0]),
            Err(Error::NotFinite { index: 1 })
        );
    }

    #[test]
    fn validate_vector_is_idempotent() {
        let schema = AreaSchema::default();
        let once = validate_vector(&schema, &[4.0, 4.0, 1.0, 2.0, 3.0]).unwrap();
        let twice = validate_vector(&schema, once.as_slice()).unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn names_are_trimmed_but_interior_spaces_kept() {
        let p = profile("  Arzami bin Othman \t", &[4.0, 4.0, 1.0, 2.0, 3.0]);
        assert_eq!(p.name(), "Arzami bin Othman");
        let v = InterestVector::new(vec![1.0]).unwrap();
        assert!(SupervisorProfile::new("   ", v.clone()).is_err());
        assert!(SupervisorProfile::new("a,b", v).is_err());
    }

    #[test]
    fn roster_rejects_duplicates_and_empty() {
        let schema = AreaSchema::default();
        let faris = profile("Faris", &[4.0, 3.0, 4.0, 3.5, 4.5]);
        assert_eq!(
            Roster::new(schema.clone(), vec![faris.clone(), faris]),
            Err(Error::DuplicateName("Faris".into()))
        );
        assert_eq!(Roster::new(schema, vec![]), Err(Error::EmptyRoster));
    }

    #[test]
    fn names_compare_case_sensitively() {
        let schema = AreaSchema::new(["A"]).unwrap();
        let roster = Roster::new(
            schema,
            vec![profile("Faris", &[1.0]), profile("faris", &[2.0])],
        )
        .unwrap();
        assert_eq!(roster.len(), 2);
        assert!(roster.get("FARIS").is_none());
    }

    #[test]
    fn roster_rejects_wrong_arity_profile() {
        let schema = AreaSchema::default();
        let short = profile("Short", &[1.0, 2.0]);
        assert_eq!(
            Roster::new(schema, vec![short]),
            Err(Error::LengthMismatch {
                expected: 5,
                got: 2
            })
        );
    }

    #[test]
    fn suggestions_use_case_insensitive_prefix() {
        let schema = AreaSchema::new(["A"]).unwrap();
        let roster = Roster::new(
            schema,
            vec![
                profile("Arzami bin Othman", &[1.0]),
                profile("Arifah Fasha bt Rosmani", &[1.0]),
                profile("Faris", &[1.0]),
            ],
        )
        .unwrap();
        assert_eq!(
            roster.suggestions("ar"),
            ["Arzami bin Othman", "Arifah Fasha bt Rosmani"]
        );
        assert_eq!(roster.suggestions("arzami bin"), ["Arzami bin Othman"]);
        assert_eq!(roster.suggestions("Arzami Othman"), ["Arzami bin Othman"]);
        assert!(roster.suggestions("Zed").is_empty());
        match roster.require("faris") {
            Err(Error::UnknownName { candidates, .. }) => assert_eq!(candidates, ["Faris"]),
            other => panic!("unexpected {other:?}"),
        }
    }
}
