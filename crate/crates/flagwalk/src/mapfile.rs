//! Mapfile v1: one JSON object `{"flags":n,"r0":[..],"r1":[..],"r2":[..],"name":..}`
//! holding the three connections as image lists.

use flagwalk_core::flagmap::ValidationReport;
use flagwalk_core::{FlagSystem, Permutation};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapFile {
    pub flags: usize,
    pub r0: Vec<usize>,
    pub r1: Vec<usize>,
    pub r2: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

#[derive(Debug, Error)]
pub enum MapFileError {
    #[error("malformed mapfile: {0}")]
    Json(#[from] serde_json::Error),
    #[error("a map needs at least 4 flags, the file declares {0}")]
    TooSmall(usize),
    #[error("r{which} has {got} entries, expected {flags}")]
    Length {
        which: usize,
        got: usize,
        flags: usize,
    },
    #[error("r{which} is not a permutation of 0..{flags}")]
    NotPermutation { which: usize, flags: usize },
    #[error("map axioms violated: {0}")]
    Invalid(ValidationReport),
}

impl MapFileError {
    /// True for well-formed files whose connections break the map axioms.
    pub fn is_validation(&self) -> bool {
        matches!(self, MapFileError::Invalid(_))
    }
}

impl MapFile {
    pub fn from_map(m: &FlagSystem) -> Self {
        MapFile {
            flags: m.n_flags(),
            r0: m.r(0).images().to_vec(),
            r1: m.r(1).images().to_vec(),
            r2: m.r(2).images().to_vec(),
            name: m.name().map(String::from),
        }
    }

    /// The connections as permutations, without checking the map axioms.
    pub fn to_unchecked(&self) -> Result<FlagSystem, MapFileError> {
        if self.flags < 4 {
            return Err(MapFileError::TooSmall(self.flags));
        }
        let mut perms = Vec::with_capacity(3);
        for (which, images) in [&self.r0, &self.r1, &self.r2].into_iter().enumerate() {
            if images.len() != self.flags {
                return Err(MapFileError::Length {
                    which,
                    got: images.len(),
                    flags: self.flags,
                });
            }
            let p = Permutation::from_images(images.clone()).map_err(|_| {
                MapFileError::NotPermutation {
                    which,
                    flags: self.flags,
                }
            })?;
            perms.push(p);
        }
        let r2 = perms.pop().unwrap();
        let r1 = perms.pop().unwrap();
        let r0 = perms.pop().unwrap();
        let mut m = FlagSystem::new_unchecked(r0, r1, r2);
        m.set_name(self.name.clone());
        Ok(m)
    }

    pub fn to_map(&self) -> Result<FlagSystem, MapFileError> {
        let m = self.to_unchecked()?;
        let report = m.validate();
        if report.is_valid() {
            Ok(m)
        } else {
            Err(MapFileError::Invalid(report))
        }
    }
}

/// Compact single-line encoding with a trailing newline.
pub fn to_string(m: &FlagSystem) -> String {
    let mut s = serde_json::to_string(&MapFile::from_map(m)).expect("mapfile serializes");
    s.push('\n');
    s
}

pub fn parse_unchecked(text: &str) -> Result<FlagSystem, MapFileError> {
    serde_json::from_str::<MapFile>(text)?.to_unchecked()
}

pub fn parse(text: &str) -> Result<FlagSystem, MapFileError> {
    serde_json::from_str::<MapFile>(text)?.to_map()
}

#[cfg(test)]
mod tests {
    use super::*;
    use flagwalk_core::families::{pp_loop, tetrahedron};

    #[test]
    fn round_trip() {
        let m = tetrahedron();
        let text = to_string(&m);
        assert!(text.starts_with("{\"flags\":24,\"r0\":["));
        assert!(text.ends_with("\"name\":\"tetrahedron\"}\n"));
        assert_eq!(parse(&text).unwrap(), m);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse("{"), Err(MapFileError::Json(_))));
        assert!(matches!(
            parse(r#"{"flags":2,"r0":[1,0],"r1":[1,0],"r2":[1,0]}"#),
            Err(MapFileError::TooSmall(2))
        ));
        assert!(matches!(
            parse(r#"{"flags":4,"r0":[1,0,3,2],"r1":[3,2,1,0],"r2":[2,3,0,1],"extra":1}"#),
            Err(MapFileError::Json(_))
        ));
        assert!(matches!(
            parse(r#"{"flags":4,"r0":[1,1,3,2],"r1":[3,2,1,0],"r2":[2,3,0,1]}"#),
            Err(MapFileError::NotPermutation { which: 0, .. })
        ));
        let err = parse(r#"{"flags":4,"r0":[1,0,3,2],"r1":[1,0,3,2],"r2":[2,3,0,1]}"#).unwrap_err();
        assert!(err.is_validation());
    }

    #[test]
    fn name_is_optional() {
        let m = parse(r#"{"flags":4,"r0":[1,0,3,2],"r1":[3,2,1,0],"r2":[2,3,0,1]}"#).unwrap();
        assert_eq!(m.name(), None);
        let mut expected = pp_loop();
        expected.set_name(None);
        assert_eq!(m, expected);
    }
}
