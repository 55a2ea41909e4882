//! The named maps shipped with the tool, embedded as mapfiles and checked
//! against a SHA-256 digest on load.

use flagwalk_core::families;
use flagwalk_core::FlagSystem;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::mapfile::{self, MapFileError};

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("unknown fixture {0:?}")]
    Unknown(String),
    #[error("embedded fixture {0:?} does not match its checksum")]
    Checksum(&'static str),
    #[error("embedded fixture {name:?} is unreadable: {source}")]
    Map {
        name: &'static str,
        source: MapFileError,
    },
}

struct Embedded {
    name: &'static str,
    text: &'static str,
    sha256: &'static str,
}

const EMBEDDED: [Embedded; 5] = [
    Embedded {
        name: "M12_7",
        text: include_str!("../../../fixtures/M12_7.map"),
        sha256: "be7d890e1b3be4e572e14bdcef45b44bddfec1abe3537593e76e1b6eeb501bcc",
    },
    Embedded {
        name: "DM12_7",
        text: include_str!("../../../fixtures/DM12_7.map"),
        sha256: "db49aa6705a5a93aa1a7bb4fdf5a90b3e96bc2d0aa01ca767eceb82cfd6c5e1c",
    },
    Embedded {
        name: "cunningham",
        text: include_str!("../../../fixtures/cunningham.map"),
        sha256: "2514898ae5e7ddcb573653248f33344ce27ba94f29a9549a45b62ef215f89aa8",
    },
    Embedded {
        name: "tetrahedron",
        text: include_str!("../../../fixtures/tetrahedron.map"),
        sha256: "db9b5271b7dd9ccdcc0832e85ee2fc3a8af61b4f9d2bc0ab42a5f46e633daee1",
    },
    Embedded {
        name: "pp_loop",
        text: include_str!("../../../fixtures/pp_loop.map"),
        sha256: "a64a22fe448b91c3336d22bdb1f6959765ed3c7afd99d7ba4954286a0aa8a789",
    },
];

pub fn names() -> impl Iterator<Item = &'static str> {
    EMBEDDED.iter().map(|e| e.name)
}

pub fn checksum(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// The embedded mapfile text, unchecked.
pub fn text(name: &str) -> Option<&'static str> {
    EMBEDDED.iter().find(|e| e.name == name).map(|e| e.text)
}

pub fn fixture(name: &str) -> Result<FlagSystem, FixtureError> {
    let e = EMBEDDED
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| FixtureError::Unknown(name.to_string()))?;
    if checksum(e.text) != e.sha256 {
        return Err(FixtureError::Checksum(e.name));
    }
    mapfile::parse(e.text).map_err(|source| FixtureError::Map {
        name: e.name,
        source,
    })
}

/// The fixture as built by the library constructors; the embedded data is
/// the serialization of this.
pub fn construct(name: &str) -> Option<FlagSystem> {
    Some(match name {
        "M12_7" => families::m12_7(),
        "DM12_7" => families::m12_7().dual(),
        "cunningham" => families::cunningham(),
        "tetrahedron" => families::tetrahedron(),
        "pp_loop" => families::pp_loop(),
        _ => return None,
    })
}
