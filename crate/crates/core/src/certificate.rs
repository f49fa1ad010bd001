//! Structured, byte-stable records of what a construction verified.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Witness;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    /// The check ran out of budget before proving or refuting.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Predicate {
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Parameters, predicate verdicts, measured quantities and seeds of one run.
///
/// Keys are namespaced with dots (`efr.R`, `sunflower.R`) where the same
/// symbol means different things in different constructions. All maps are
/// ordered, so [`Certificate::to_json`] is byte-stable.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub construction: String,
    pub parameters: BTreeMap<String, Value>,
    pub predicates: BTreeMap<String, Predicate>,
    pub measurements: BTreeMap<String, Value>,
    pub seeds: BTreeMap<String, u64>,
}

fn to_value(v: impl Serialize) -> Value {
    let v = serde_json::to_value(v).expect("certificate values are plain data");
    match v {
        Value::Null => Value::String("null".into()),
        other => other,
    }
}

/// Non-finite floats become strings; JSON has no spelling for them.
fn number(x: f64) -> Value {
    if x.is_finite() {
        to_value(x)
    } else {
        Value::String(format!("{x}"))
    }
}

impl Certificate {
    pub fn new(construction: impl Into<String>) -> Self {
        Certificate {
            construction: construction.into(),
            parameters: BTreeMap::new(),
            predicates: BTreeMap::new(),
            measurements: BTreeMap::new(),
            seeds: BTreeMap::new(),
        }
    }

    pub fn param(&mut self, key: impl Into<String>, value: impl Serialize) -> &mut Self {
        self.parameters.insert(key.into(), to_value(value));
        self
    }

    pub fn pass(&mut self, key: impl Into<String>) -> &mut Self {
        self.predicate(key, Verdict::Pass, None, None)
    }

    pub fn fail(&mut self, key: impl Into<String>, witness: Witness) -> &mut Self {
        self.predicate(key, Verdict::Fail, Some(witness), None)
    }

    pub fn unknown(&mut self, key: impl Into<String>, note: impl Into<String>) -> &mut Self {
        self.predicate(key, Verdict::Unknown, None, Some(note.into()))
    }

    /// Records `Pass` on `Ok`, `Fail` with the witness on `Err`.
    pub fn check(&mut self, key: impl Into<String>, outcome: Result<(), Witness>) -> &mut Self {
        match outcome {
            Ok(()) => self.pass(key),
            Err(w) => self.fail(key, w),
        }
    }

    pub fn predicate(
        &mut self,
        key: impl Into<String>,
        verdict: Verdict,
        witness: Option<Witness>,
        note: Option<String>,
    ) -> &mut Self {
        self.predicates.insert(key.into(), Predicate { verdict, witness, note });
        self
    }

    /// Records an integer or other exact measurement.
    pub fn measure(&mut self, key: impl Into<String>, value: impl Serialize) -> &mut Self {
        self.measurements.insert(key.into(), to_value(value));
        self
    }

    pub fn measure_f64(&mut self, key: impl Into<String>, value: f64) -> &mut Self {
        self.measurements.insert(key.into(), number(value));
        self
    }

    pub fn seed(&mut self, key: impl Into<String>, seed: u64) -> &mut Self {
        self.seeds.insert(key.into(), seed);
        self
    }

    /// Copies another certificate's entries unchanged; later keys win.
    pub fn merge(&mut self, other: &Certificate) -> &mut Self {
        self.parameters.extend(other.parameters.iter().map(|(k, v)| (k.clone(), v.clone())));
        self.predicates.extend(other.predicates.iter().map(|(k, v)| (k.clone(), v.clone())));
        self.measurements.extend(other.measurements.iter().map(|(k, v)| (k.clone(), v.clone())));
        self.seeds.extend(other.seeds.iter().map(|(k, v)| (k.clone(), *v)));
        self
    }

    /// Copies another certificate's entries under `prefix.`.
    pub fn absorb(&mut self, prefix: &str, other: &Certificate) -> &mut Self {
        for (k, v) in &other.parameters {
            self.parameters.insert(format!("{prefix}.{k}"), v.clone());
        }
        for (k, v) in &other.predicates {
            self.predicates.insert(format!("{prefix}.{k}"), v.clone());
        }
        for (k, v) in &other.measurements {
            self.measurements.insert(format!("{prefix}.{k}"), v.clone());
        }
        for (k, v) in &other.seeds {
            self.seeds.insert(format!("{prefix}.{k}"), *v);
        }
        self
    }

    pub fn verdict(&self, key: &str) -> Option<Verdict> {
        self.predicates.get(key).map(|p| p.verdict)
    }

    pub fn all_pass(&self) -> bool {
        self.predicates.values().all(|p| p.verdict == Verdict::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = (&String, &Predicate)> {
        self.predicates.iter().filter(|(_, p)| p.verdict == Verdict::Fail)
    }

    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_is_sorted_and_round_trips() {
        let mut c = Certificate::new("demo");
        c.param("z", 1).param("a", "x").pass("linear").fail("triangle_free", Witness::Vertices(vec![0, 1, 2]));
        c.measure("edges", 50).measure_f64("bound", 0.5).measure_f64("inf", f64::INFINITY).seed("blowup", 7);
        let json = c.to_json();
        assert!(json.find("\"a\"").unwrap() < json.find("\"z\"").unwrap());
        assert!(json.contains("\"inf\": \"inf\""));
        let back = Certificate::from_json(&json).unwrap();
        assert_eq!(back.to_json(), json);
        assert!(!c.all_pass());
        assert_eq!(c.failures().count(), 1);
    }
}
