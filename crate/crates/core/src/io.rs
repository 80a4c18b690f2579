//! JSON file formats.
//!
//! Polytope file: `{"name": "...", "dim": n, "vertices": [[int, ...], ...]}`.
//!
//! Weight file: `{"kind": "constant"|"ic"|"indicator"|"subcomplex"|"table",
//! "face": [..], "faces": [[..], ..], "entries": [{"face": [..], "weight":
//! [[exp, num, den], ..]}]}`, where `face` is required for `indicator`,
//! `faces` for `subcomplex` and `entries` for `table`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::LaurentPolyY;
use crate::polytope::{FaceId, LatticePolytope};
use crate::stanley::WeightKind;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeFile {
    pub name: String,
    pub dim: usize,
    pub vertices: Vec<Vec<i64>>,
}

impl PolytopeFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn from_polytope(name: impl Into<String>, p: &LatticePolytope) -> Self {
        PolytopeFile {
            name: name.into(),
            dim: p.ambient_dim(),
            vertices: p.vertices().to_vec(),
        }
    }

    pub fn to_polytope(&self) -> Result<LatticePolytope> {
        for (i, v) in self.vertices.iter().enumerate() {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    index: i,
                    expected: self.dim,
                    got: v.len(),
                });
            }
        }
        LatticePolytope::new(self.vertices.clone())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableEntry {
    pub face: Vec<usize>,
    pub weight: LaurentPolyY,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightFile {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub face: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub faces: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<TableEntry>>,
}

impl WeightFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_kind(&self) -> Result<WeightKind> {
        let missing = |field: &str| Error::Parse(format!("weight kind {:?} requires \"{field}\"", self.kind));
        match self.kind.as_str() {
            "constant" => Ok(WeightKind::Constant),
            "ic" => Ok(WeightKind::Ic),
            "indicator" => {
                let face = self.face.clone().ok_or_else(|| missing("face"))?;
                Ok(WeightKind::Indicator(FaceId::new(face)))
            }
            "subcomplex" => {
                let faces = self.faces.clone().ok_or_else(|| missing("faces"))?;
                Ok(WeightKind::Subcomplex(faces.into_iter().map(FaceId::new).collect()))
            }
            "table" => {
                let entries = self.entries.clone().ok_or_else(|| missing("entries"))?;
                Ok(WeightKind::Table(
                    entries.into_iter().map(|e| (FaceId::new(e.face), e.weight)).collect(),
                ))
            }
            other => Err(Error::Parse(format!("unknown weight kind {other:?}"))),
        }
    }
}
