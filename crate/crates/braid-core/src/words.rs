//! Generator alphabets, signed braid words, parsing and printing.
//!
//! Words are immutable values: every operation returns a new word. The text
//! grammar is whitespace-separated tokens, signed integers for Artin letters
//! (`-2` is the inverse of the second Artin generator) and `p:q` / `-p:q`
//! for band letters.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, ParseError};

/// Which presentation a word is written in.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Family {
    Artin,
    Band,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Artin => write!(f, "artin"),
            Family::Band => write!(f, "band"),
        }
    }
}

/// An unsigned generator: an Artin crossing or a band generator.
///
/// Artin generators are indexed from 1; a band generator joins strands
/// `p < q`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Generator {
    Artin(usize),
    Band(usize, usize),
}

impl Generator {
    pub fn family(self) -> Family {
        match self {
            Generator::Artin(_) => Family::Artin,
            Generator::Band(..) => Family::Band,
        }
    }

    /// Smallest strand count whose braid group contains this generator.
    pub fn min_strands(self) -> usize {
        match self {
            Generator::Artin(i) => i + 1,
            Generator::Band(_, q) => q,
        }
    }

    pub fn valid_for(self, strands: usize) -> bool {
        let ok = match self {
            Generator::Artin(i) => i >= 1,
            Generator::Band(p, q) => p >= 1 && p < q,
        };
        ok && self.min_strands() <= strands
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Artin(i) => write!(f, "{i}"),
            Generator::Band(p, q) => write!(f, "{p}:{q}"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// A signed generator occurrence.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    pub gen: Generator,
    pub sign: Sign,
}

impl Letter {
    pub fn pos(gen: Generator) -> Letter {
        Letter { gen, sign: Sign::Pos }
    }

    pub fn neg(gen: Generator) -> Letter {
        Letter { gen, sign: Sign::Neg }
    }

    pub fn inverse(self) -> Letter {
        Letter { gen: self.gen, sign: self.sign.flip() }
    }

    pub fn is_positive(self) -> bool {
        self.sign == Sign::Pos
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == Sign::Neg {
            write!(f, "-")?;
        }
        write!(f, "{}", self.gen)
    }
}

/// A finite sequence of signed generator letters over a declared strand
/// count. The empty sequence is the trivial word.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BraidWord {
    strands: usize,
    family: Family,
    letters: Vec<Letter>,
}

impl BraidWord {
    /// Builds a word, checking every letter against `strands` and `family`.
    pub fn new(strands: usize, family: Family, letters: Vec<Letter>) -> Result<Self, Error> {
        if strands < 2 {
            return Err(ParseError::StrandCount { strands }.into());
        }
        for l in &letters {
            if l.gen.family() != family {
                return Err(Error::FamilyMismatch);
            }
            if !l.gen.valid_for(strands) {
                return Err(ParseError::OutOfRange {
                    token: l.to_string(),
                    strands,
                }
                .into());
            }
        }
        Ok(BraidWord { strands, family, letters })
    }

    /// The trivial word over `strands` strands.
    pub fn empty(strands: usize, family: Family) -> Self {
        assert!(strands >= 2, "strand count below 2");
        BraidWord { strands, family, letters: Vec::new() }
    }

    pub(crate) fn from_letters_unchecked(
        strands: usize,
        family: Family,
        letters: Vec<Letter>,
    ) -> Self {
        debug_assert!(letters.iter().all(|l| l.gen.family() == family));
        debug_assert!(letters.iter().all(|l| l.gen.valid_for(strands)));
        BraidWord { strands, family, letters }
    }

    /// Parses the whitespace-separated token grammar.
    pub fn parse(text: &str, strands: usize, family: Family) -> Result<Self, Error> {
        if strands < 2 {
            return Err(ParseError::StrandCount { strands }.into());
        }
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            letters.push(parse_letter(token, strands, family)?);
        }
        Ok(BraidWord { strands, family, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// True iff every letter is positive; the trivial word is positive.
    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.is_positive())
    }

    /// Letters reversed with all signs flipped; an involution.
    pub fn invert(&self) -> BraidWord {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        BraidWord { strands: self.strands, family: self.family, letters }
    }

    /// Deletes adjacent mutually inverse letters until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match out.last() {
                Some(&top) if top.gen == l.gen && top.sign != l.sign => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        BraidWord { strands: self.strands, family: self.family, letters: out }
    }

    /// Strand count of the smallest braid group syntactically containing the
    /// word: `1 + max generator index` for Artin letters, the maximal `q`
    /// for band letters, and 2 for the trivial word.
    pub fn word_index(&self) -> usize {
        self.letters
            .iter()
            .map(|l| l.gen.min_strands())
            .max()
            .unwrap_or(2)
    }

    /// The same letters re-declared over `strands` strands.
    pub fn with_strands(&self, strands: usize) -> Result<BraidWord, Error> {
        BraidWord::new(strands, self.family, self.letters.clone())
    }

    /// Concatenation; the operands must share strand count and family.
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.family, other.family, "mixed generator families");
        assert_eq!(self.strands, other.strands, "strand counts differ");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { strands: self.strands, family: self.family, letters }
    }

    pub(crate) fn push(&mut self, letter: Letter) {
        debug_assert!(letter.gen.valid_for(self.strands));
        debug_assert_eq!(letter.gen.family(), self.family);
        self.letters.push(letter);
    }

    pub(crate) fn extend(&mut self, letters: impl IntoIterator<Item = Letter>) {
        for l in letters {
            self.push(l);
        }
    }

    /// Translates band letters to their Artin words; Artin words pass
    /// through unchanged. The result represents the same braid.
    pub fn to_artin(&self) -> BraidWord {
        if self.family == Family::Artin {
            return self.clone();
        }
        let mut letters = Vec::new();
        for l in &self.letters {
            let expansion = band_letter_to_artin(l.gen);
            match l.sign {
                Sign::Pos => letters.extend(expansion),
                Sign::Neg => letters.extend(expansion.into_iter().rev().map(Letter::inverse)),
            }
        }
        BraidWord { strands: self.strands, family: Family::Artin, letters }
    }
}

/// The Artin spelling of a band generator: the crossing of strands `q-1, q`
/// conjugated down to strand `p`.
fn band_letter_to_artin(gen: Generator) -> Vec<Letter> {
    let (p, q) = match gen {
        Generator::Band(p, q) => (p, q),
        Generator::Artin(_) => unreachable!("artin letter in band word"),
    };
    let mut letters = Vec::with_capacity(2 * (q - p) - 1);
    for i in p..q - 1 {
        letters.push(Letter::pos(Generator::Artin(i)));
    }
    letters.push(Letter::pos(Generator::Artin(q - 1)));
    for i in (p..q - 1).rev() {
        letters.push(Letter::neg(Generator::Artin(i)));
    }
    letters
}

fn parse_letter(token: &str, strands: usize, family: Family) -> Result<Letter, ParseError> {
    let malformed = || ParseError::Malformed { token: token.to_string() };
    let (sign, body) = match token.strip_prefix('-') {
        Some(rest) => (Sign::Neg, rest),
        None => (Sign::Pos, token),
    };
    if body.is_empty() {
        return Err(malformed());
    }
    let gen = if let Some((p, q)) = body.split_once(':') {
        let p: usize = p.parse().map_err(|_| malformed())?;
        let q: usize = q.parse().map_err(|_| malformed())?;
        if p < 1 || p >= q {
            return Err(malformed());
        }
        Generator::Band(p, q)
    } else {
        let i: usize = body.parse().map_err(|_| malformed())?;
        if i < 1 {
            return Err(malformed());
        }
        Generator::Artin(i)
    };
    if gen.family() != family {
        return Err(ParseError::MixedFamily { token: token.to_string() });
    }
    if !gen.valid_for(strands) {
        return Err(ParseError::OutOfRange { token: token.to_string(), strands });
    }
    Ok(Letter { gen, sign })
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}
