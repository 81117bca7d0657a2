use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::lattice::IntVector;

/// On-disk description of a fan: rays, and cones as lists of ray indices.
/// Listing only the maximal cones is enough.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanDocument {
    pub rank: usize,
    pub rays: Vec<Vec<i64>>,
    pub cones: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

/// Strict parse followed by [`FanDocument::check`].
pub fn parse_fan(text: &str) -> Result<FanDocument> {
    let doc: FanDocument = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    doc.check()?;
    Ok(doc)
}

impl FanDocument {
    /// Ray lengths, nonzero and pairwise distinct ray directions, and cone
    /// indices in range.
    pub fn check(&self) -> Result<()> {
        let mut seen: BTreeMap<IntVector, usize> = BTreeMap::new();
        for (i, r) in self.rays.iter().enumerate() {
            if r.len() != self.rank {
                return Err(Error::InvalidDocument(format!(
                    "ray {i} has length {}, expected {}",
                    r.len(),
                    self.rank
                )));
            }
            let v = IntVector::from_i64s(r);
            if v.is_zero() {
                return Err(Error::InvalidDocument(format!("ray {i} is zero")));
            }
            if let Some(j) = seen.insert(v.primitive(), i) {
                return Err(Error::InvalidDocument(format!(
                    "rays {j} and {i} span the same ray"
                )));
            }
        }
        for (c, cone) in self.cones.iter().enumerate() {
            if let Some(&bad) = cone.iter().find(|&&i| i >= self.rays.len()) {
                return Err(Error::InvalidDocument(format!(
                    "cone {c} refers to ray {bad}, but there are only {} rays",
                    self.rays.len()
                )));
            }
        }
        Ok(())
    }

    pub fn ray_vectors(&self) -> Vec<IntVector> {
        self.rays.iter().map(|r| IntVector::from_i64s(r)).collect()
    }

    pub fn to_fan(&self) -> Result<Fan> {
        self.check()?;
        Fan::from_ray_indices(self.rank, &self.ray_vectors(), &self.cones)
    }

    /// Rays in the fan's canonical order and maximal cones as index lists.
    pub fn from_fan(fan: &Fan, name: Option<String>) -> Result<FanDocument> {
        let rays = fan
            .rays()
            .iter()
            .map(|r| to_i64s(r.generator()))
            .collect::<Result<Vec<_>>>()?;
        let cones = fan
            .maximal_cones()
            .into_iter()
            .filter(|c| !c.is_zero())
            .map(|c| fan.ray_indices(c))
            .collect();
        Ok(FanDocument {
            rank: fan.ambient_rank(),
            rays,
            cones,
            name,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("fan documents serialize")
    }
}

pub(crate) fn to_i64s(v: &IntVector) -> Result<Vec<i64>> {
    v.to_i64s()
        .ok_or_else(|| Error::Internal(format!("{v} does not fit in 64-bit integers")))
}
