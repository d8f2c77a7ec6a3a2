//! JSON input documents.

use std::fmt;
use std::path::Path;

use ghk_core::families::{explicit, Family, ToricInstance};
use ghk_core::geometry::{LatticePoint, Rat};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::CliError;

/// An arbitrary-precision integer. Reads JSON numbers or decimal strings;
/// writes a number when it fits in 64 bits and a string otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Integer(pub BigInt);

impl From<BigInt> for Integer {
    fn from(v: BigInt) -> Self {
        Integer(v)
    }
}

impl From<&BigInt> for Integer {
    fn from(v: &BigInt) -> Self {
        Integer(v.clone())
    }
}

impl Serialize for Integer {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if let Some(v) = self.0.to_i64() {
            s.serialize_i64(v)
        } else if let Some(v) = self.0.to_u64() {
            s.serialize_u64(v)
        } else {
            s.serialize_str(&self.0.to_string())
        }
    }
}

impl<'de> Deserialize<'de> for Integer {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;

        impl Visitor<'_> for V {
            type Value = Integer;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a decimal integer string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Integer, E> {
                Ok(Integer(v.into()))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Integer, E> {
                Ok(Integer(v.into()))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Integer, E> {
                v.trim()
                    .parse()
                    .map(Integer)
                    .map_err(|_| E::custom(format!("`{v}` is not an integer")))
            }
        }

        d.deserialize_any(V)
    }
}

pub type Pair = [Integer; 2];

pub fn pair(p: &LatticePoint) -> Pair {
    [Integer(p.x.clone()), Integer(p.y.clone())]
}

fn point(p: &Pair) -> LatticePoint {
    LatticePoint::new(p[0].0.clone(), p[1].0.clone())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeSpec {
    pub rays: [Pair; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealSpec {
    pub generators: Vec<Pair>,
}

/// Stable CM type data. Either `r` (the built-in `A_{r-1}` table with
/// `v_j = 1/r`) or an explicit `torTable` with densities `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReptypeSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<u64>,
    #[serde(rename = "torTable", default, skip_serializing_if = "Option::is_none")]
    pub tor_table: Option<Vec<Vec<Integer>>>,
    pub u: Vec<Integer>,
    /// Densities as `"p/q"` strings or integers.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<Vec<RatInput>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RatInput {
    Int(Integer),
    Text(String),
}

impl RatInput {
    pub fn value(&self) -> Result<Rat, CliError> {
        match self {
            RatInput::Int(i) => Ok(Rat::from_integer(i.0.clone())),
            RatInput::Text(s) => s
                .trim()
                .parse()
                .map_err(|_| CliError::Input(format!("`{s}` is not a rational number"))),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cone: Option<ConeSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<IdealSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reptype: Option<ReptypeSpec>,
}

impl InputDocument {
    pub fn from_family(spec: &str) -> Self {
        InputDocument {
            family: Some(spec.to_string()),
            ..Default::default()
        }
    }

    pub fn from_path(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    }

    pub fn has_toric(&self) -> bool {
        self.family.is_some() || self.cone.is_some() || self.ideal.is_some()
    }

    /// The toric instance described by the document.
    pub fn instance(&self) -> Result<ToricInstance, CliError> {
        match (&self.family, &self.cone, &self.ideal) {
            (Some(spec), None, None) => Ok(spec.parse::<Family>()?.instantiate()?),
            (None, Some(cone), Some(ideal)) => Ok(explicit(
                [point(&cone.rays[0]), point(&cone.rays[1])],
                ideal.generators.iter().map(point).collect(),
            )?),
            (None, None, None) => Err(CliError::Input(
                "no toric input: give `family`, or both `cone` and `ideal`".into(),
            )),
            _ => Err(CliError::Input(
                "give exactly one of `family` or the explicit `cone` + `ideal` pair".into(),
            )),
        }
    }
}
