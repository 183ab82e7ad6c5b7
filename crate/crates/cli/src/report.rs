//! Machine-readable reports written to standard output.

use std::time::Duration;

use nakayama_core::Error;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok,
    Inconclusive,
    Violated,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Inconclusive => "inconclusive",
            Status::Violated => "violated",
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Violated => 1,
            Status::Inconclusive => 2,
        }
    }
}

/// The body of a report. A violated outcome always has a witness.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub status: Status,
    pub results: Value,
    pub witness: Option<Value>,
}

impl Outcome {
    pub fn ok(results: Value) -> Self {
        Outcome { status: Status::Ok, results, witness: None }
    }

    pub fn inconclusive(results: Value) -> Self {
        Outcome { status: Status::Inconclusive, results, witness: None }
    }

    pub fn violated(results: Value, witness: Value) -> Self {
        Outcome { status: Status::Violated, results, witness: Some(witness) }
    }

    /// Turn a core error into an outcome, or `Err` with a message for errors
    /// caused by unsupported input.
    pub fn from_error(e: Error) -> Result<Self, String> {
        let msg = json!({ "error": e.to_string() });
        match e {
            Error::Validation { axiom, witness } => Ok(Outcome::violated(
                msg,
                json!({ "axiom": axiom, "indices": witness }),
            )),
            Error::Inconclusive(_) | Error::NonStabilized(_) => Ok(Outcome::inconclusive(msg)),
            Error::RouteDisagreement(flag) => Ok(Outcome::violated(msg, json!({ "routeDisagreement": flag }))),
            Error::IsoNotFound(what) => Ok(Outcome::violated(msg, json!({ "isoNotFound": what }))),
            Error::NotOneDimensional(d) => Ok(Outcome::violated(msg, json!({ "dim": d }))),
            Error::NoSolution | Error::NoPreantipode | Error::NotConvolutionInvertible => {
                Ok(Outcome::violated(msg.clone(), msg))
            }
            other => Err(other.to_string()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub digest: String,
    pub outcome: Outcome,
    pub elapsed: Option<Duration>,
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl Report {
    pub fn to_value(&self) -> Value {
        let mut v = json!({
            "command": self.command,
            "input": { "sha256": self.digest },
            "results": self.outcome.results,
            "status": self.outcome.status.name(),
        });
        if let Some(w) = &self.outcome.witness {
            v["witness"] = w.clone();
        }
        if let Some(t) = self.elapsed {
            v["timing"] = json!({ "seconds": t.as_secs_f64() });
        }
        v
    }

    pub fn to_json(&self) -> String {
        crate::json::render(&self.to_value())
    }
}
