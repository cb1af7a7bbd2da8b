//! Typed JSON reports. Every command's JSON output deserializes into one of these.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rigidcount::class::{big_from_json, big_to_json};
use rigidcount::ClassVector;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

/// Integer written as a JSON number when it fits in i64, as a decimal string otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigNum(pub BigInt);

impl Serialize for BigNum {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        big_to_json(&self.0).serialize(s)
    }
}

impl<'de> Deserialize<'de> for BigNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        big_from_json(&v).map(BigNum).ok_or_else(|| D::Error::custom(format!("not an integer: {v}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson(pub [BigNum; 3]);

impl From<&ClassVector> for ClassJson {
    fn from(c: &ClassVector) -> Self {
        ClassJson([BigNum(c.a.clone()), BigNum(c.b.clone()), BigNum(c.c.clone())])
    }
}

impl ClassJson {
    pub fn to_class(&self) -> ClassVector {
        let [a, b, c] = &self.0;
        ClassVector::from_big(a.0.clone(), b.0.clone(), c.0.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceJson {
    pub graph: Value,
    pub method: String,
    pub value: Value,
    pub children: Vec<TraceJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub count: BigNum,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trace: Option<TraceJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub class: ClassJson,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trace: Option<TraceJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityJson {
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub candidates: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub authoritative: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionJson {
    pub parts: Vec<[i64; 3]>,
    pub degrees: Vec<i64>,
    pub genus_bounds: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionJson {
    pub with: String,
    pub value: Value,
    pub integral: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsReport {
    pub class: ClassJson,
    pub multiplicity: MultiplicityJson,
    pub degree: Option<BigNum>,
    pub partitions: Vec<PartitionJson>,
    pub intersections: Vec<IntersectionJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionJson {
    pub condition: u8,
    pub c: Option<String>,
    pub status: String,
    pub base_points: Option<Value>,
    pub s_divides_eliminant: Option<bool>,
    pub product_divides_eliminant: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentricReport {
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub step: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    pub conditions: Vec<ConditionJson>,
    pub series: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub count: u64,
    pub seed: u64,
    pub max_vertices: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainStep {
    pub delta: Option<u32>,
    pub walks: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalksReport {
    pub graph: Value,
    pub route: Vec<u32>,
    pub labeling: Vec<(u32, u32, i8)>,
    pub chain: Vec<ChainStep>,
    pub final_ideal: Vec<String>,
    pub b0_ideal: String,
    pub checks: BTreeMap<String, bool>,
}
