//! The semigroup file format and JSON helpers shared by the reports.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ehresmann::{BiUnaryStructure, EhresmannError};
use crate::linalg::{format_rational, Matrix};
use crate::semigroup::{FiniteSemigroup, SemigroupError};

/// Version stamped on every report.
pub const SCHEMA_VERSION: u32 = 1;

/// Where a zoo member came from, so reports can add family-specific checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Family {
    pub name: String,
    pub n: usize,
}

impl Family {
    /// Family of a numbered zoo name such as `pt3`; `None` for the named
    /// examples.
    pub fn from_zoo_name(name: &str) -> Option<Self> {
        let split = name.find(|c: char| c.is_ascii_digit())?;
        let (family, digits) = name.split_at(split);
        Some(Self {
            name: family.to_ascii_lowercase(),
            n: digits.parse().ok()?,
        })
    }
}

/// `{ "labels", "table", "star"?, "plus"?, "projections"? }`, 0-based, with
/// `table[a][b]` the index of `a·b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupFile {
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub star: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plus: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub projections: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
}

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed JSON")]
    Parse(#[from] serde_json::Error),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Ehresmann(#[from] EhresmannError),
    #[error("`star` and `plus` must be given together")]
    HalfUnary,
    #[error("{size} elements exceed the limit of {max}")]
    TooLarge { size: usize, max: usize },
}

impl SemigroupFile {
    pub fn from_structure(b: &BiUnaryStructure, family: Option<Family>) -> Self {
        Self {
            labels: b.base().labels().to_vec(),
            table: b.base().table_rows(),
            star: Some(b.star_map().to_vec()),
            plus: Some(b.plus_map().to_vec()),
            projections: Some(b.projections().to_vec()),
            family,
        }
    }

    /// Validates the table and builds the structure. Without unary maps they
    /// are inferred from `projections`, which default to all idempotents.
    pub fn to_structure(&self) -> Result<BiUnaryStructure, JsonError> {
        let base = FiniteSemigroup::new(self.labels.clone(), self.table.clone())?;
        let b = match (&self.star, &self.plus) {
            (Some(star), Some(plus)) => {
                let projections = self.projections.clone().unwrap_or_else(|| star.clone());
                BiUnaryStructure::new(base, star.clone(), plus.clone(), projections)?
            }
            (None, None) => {
                let projections = self
                    .projections
                    .clone()
                    .unwrap_or_else(|| base.idempotents());
                BiUnaryStructure::from_projections(base, projections)?
            }
            _ => return Err(JsonError::HalfUnary),
        };
        Ok(b)
    }

    pub fn parse(text: &str, max_size: Option<usize>) -> Result<Self, JsonError> {
        let file: SemigroupFile = serde_json::from_str(text)?;
        if let Some(max) = max_size {
            if file.labels.len() > max {
                return Err(JsonError::TooLarge {
                    size: file.labels.len(),
                    max,
                });
            }
        }
        Ok(file)
    }
}

/// A matrix of rationals as rows of `"p/q"` strings.
pub fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(format_rational).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo::pt_n;

    #[test]
    fn round_trip() {
        let b = pt_n(2).unwrap();
        let file = SemigroupFile::from_structure(&b, Some(Family { name: "pt".into(), n: 2 }));
        let text = serde_json::to_string(&file).unwrap();
        let back = SemigroupFile::parse(&text, None).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.to_structure().unwrap(), b);
        assert!(matches!(
            SemigroupFile::parse(&text, Some(4)),
            Err(JsonError::TooLarge { size: 9, max: 4 })
        ));
    }

    #[test]
    fn projections_are_inferred() {
        let text = r#"{"labels":["1","0"],"table":[[0,1],[1,1]]}"#;
        let b = SemigroupFile::parse(text, None).unwrap().to_structure().unwrap();
        assert_eq!(b.projections(), &[0, 1]);
        assert_eq!(b.star_map(), &[0, 1]);
        let bad = r#"{"labels":["a"],"table":[[0]],"star":[0]}"#;
        assert!(matches!(
            SemigroupFile::parse(bad, None).unwrap().to_structure(),
            Err(JsonError::HalfUnary)
        ));
        assert!(SemigroupFile::parse("{", None).is_err());
        assert_eq!(Family::from_zoo_name("pt3"), Some(Family { name: "pt".into(), n: 3 }));
        assert_eq!(Family::from_zoo_name("non-embeddable"), None);
    }
}
