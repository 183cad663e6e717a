//! JSON forms of words and of every subcommand's output object. All output
//! objects carry a schema version field `v`.

use braid_core::reversing::ReversalStep;
use braid_core::{BraidWord, Family};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

/// The JSON form of a braid word. Letters use the same tokens as the text
/// grammar, one per entry.
#[derive(Serialize, Deserialize, Debug)]
pub struct WordJson {
    pub strands: usize,
    pub family: String,
    pub letters: Vec<String>,
}

impl WordJson {
    pub fn of(word: &BraidWord) -> WordJson {
        WordJson {
            strands: word.strands(),
            family: word.family().to_string(),
            letters: word.letters().iter().map(|l| l.to_string()).collect(),
        }
    }

    pub fn to_word(&self) -> Result<BraidWord, String> {
        let family = match self.family.as_str() {
            "artin" => Family::Artin,
            "band" => Family::Band,
            other => return Err(format!("unknown family `{other}`")),
        };
        BraidWord::parse(&self.letters.join(" "), self.strands, family)
            .map_err(|e| e.to_string())
    }
}

#[derive(Serialize)]
pub struct ReverseOut {
    pub v: u32,
    pub numerator: String,
    pub denominator: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceStepOut>>,
}

#[derive(Serialize)]
pub struct TraceStepOut {
    pub position: usize,
    pub x: String,
    pub y: String,
    pub across: Vec<String>,
    pub down: Vec<String>,
}

impl TraceStepOut {
    pub fn of(step: &ReversalStep) -> TraceStepOut {
        TraceStepOut {
            position: step.position,
            x: step.x.to_string(),
            y: step.y.to_string(),
            across: step.across.iter().map(|g| g.to_string()).collect(),
            down: step.down.iter().map(|g| g.to_string()).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct WordOut {
    pub v: u32,
    pub word: String,
}

#[derive(Serialize)]
pub struct SplitOut {
    pub v: u32,
    pub breadth: usize,
    /// Entries leftmost first: the top entry of the splitting comes first.
    pub entries: Vec<String>,
}

#[derive(Serialize)]
pub struct FractionOut {
    pub v: u32,
    pub t: usize,
    pub numerator: String,
}

#[derive(Serialize)]
pub struct NfOut {
    pub v: u32,
    pub neg: String,
    pub pos: String,
}

#[derive(Serialize)]
pub struct IndexOut {
    pub v: u32,
    pub index: usize,
    pub word: String,
}

#[derive(Serialize)]
pub struct SigmaOut {
    pub v: u32,
    pub word: String,
    pub class: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub level: Option<usize>,
}

#[derive(Serialize)]
pub struct CompareOut {
    pub v: u32,
    pub order: String,
}

#[derive(Serialize)]
pub struct BfsOut {
    pub v: u32,
    pub geodesic: Option<usize>,
}

#[derive(Serialize)]
pub struct SelectorEntryOut {
    pub x: String,
    pub y: String,
    pub word: Vec<String>,
}

#[derive(Serialize)]
pub struct AutomorphismEntryOut {
    pub from: String,
    pub to: String,
}

#[derive(Serialize)]
pub struct DualTableOut {
    pub v: u32,
    pub strands: usize,
    pub garside: String,
    pub automorphism: Vec<AutomorphismEntryOut>,
    pub left: Vec<SelectorEntryOut>,
    pub right: Vec<SelectorEntryOut>,
}
