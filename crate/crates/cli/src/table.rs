//! Star-table files: `{"order": n, "star": [[...], ...]}` with element
//! indices.

use mlaw::MlaStructure;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StarTableFile {
    pub order: usize,
    pub star: Vec<Vec<usize>>,
}

impl StarTableFile {
    pub fn from_structure(s: &MlaStructure) -> Self {
        StarTableFile {
            order: s.order(),
            star: s.rows(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

/// Parses a star-table document, checking that it is square and that the
/// declared order matches.
pub fn parse_star_table(text: &str) -> Result<MlaStructure, CliError> {
    let file: StarTableFile = serde_json::from_str(text)?;
    if file.star.len() != file.order {
        return Err(CliError::Input(format!(
            "star table declares order {} but has {} rows",
            file.order,
            file.star.len()
        )));
    }
    MlaStructure::from_rows(&file.star).map_err(CliError::from)
}
