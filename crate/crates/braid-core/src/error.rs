use alloc::string::String;
use core::fmt;

use crate::words::Generator;

/// Errors produced while parsing a braid word from its text form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    /// A token that matches neither the Artin nor the band grammar.
    Malformed { token: String },
    /// A syntactically valid generator that does not fit the strand count.
    OutOfRange { token: String, strands: usize },
    /// A token of the other generator family.
    MixedFamily { token: String },
    /// Strand counts below 2 name no braid group.
    StrandCount { strands: usize },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Malformed { token } => write!(f, "malformed token `{token}`"),
            ParseError::OutOfRange { token, strands } => {
                write!(f, "generator `{token}` out of range for {strands} strands")
            }
            ParseError::MixedFamily { token } => {
                write!(f, "token `{token}` belongs to the other generator family")
            }
            ParseError::StrandCount { strands } => {
                write!(f, "strand count {strands} is below 2")
            }
        }
    }
}

impl core::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    Parse(ParseError),
    /// A letter outside the alphabet of the Garside context in use.
    UnknownLetter { gen: Generator },
    /// Operands built over different generator families.
    FamilyMismatch,
    /// Operands declared over different strand counts.
    StrandMismatch { left: usize, right: usize },
    /// A reversing run exceeded its step budget; this signals a broken
    /// selector table, not a property of the input word.
    StepBudget { budget: usize },
    /// The operation is defined for nontrivial braids only.
    EmptyWord,
    /// A negative letter where a positive word was required.
    NotPositive,
    /// Selector-table derivation for a dual context failed validation.
    Derivation { message: String },
    /// A brute-force guard (ball size, word length) was exceeded.
    Guard { message: String },
    /// An internal invariant was violated; always a bug.
    Internal { message: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse(e) => write!(f, "{e}"),
            Error::UnknownLetter { gen } => write!(f, "letter {gen} outside context alphabet"),
            Error::FamilyMismatch => write!(f, "mixed generator families"),
            Error::StrandMismatch { left, right } => {
                write!(f, "strand counts differ: {left} vs {right}")
            }
            Error::StepBudget { budget } => {
                write!(f, "reversing exceeded its step budget of {budget}")
            }
            Error::EmptyWord => write!(f, "operation undefined for the trivial braid"),
            Error::NotPositive => write!(f, "positive word required"),
            Error::Derivation { message } => write!(f, "selector derivation failed: {message}"),
            Error::Guard { message } => write!(f, "brute-force guard exceeded: {message}"),
            Error::Internal { message } => write!(f, "internal invariant violated: {message}"),
        }
    }
}

impl core::error::Error for Error {}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Error::Parse(e)
    }
}
