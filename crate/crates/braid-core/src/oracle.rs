//! Independent ground truth for every other module.
//!
//! Equality of braids is decided through the faithful action on a free
//! group, never through the reversing machinery under test. Geodesic
//! lengths come from breadth-first search over small Cayley balls, and
//! divisors, tails, gcds and splittings are recomputed here by exhaustive
//! enumeration at desk scale.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::reversing::GarsideContext;
use crate::words::{BraidWord, Family, Generator, Letter, Sign};

/// A freely reduced word over the free generators `x_1, ..., x_n`,
/// stored as signed indices.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FreeWord(Vec<i32>);

impl FreeWord {
    pub fn generator(i: usize) -> FreeWord {
        FreeWord(vec![i as i32])
    }

    pub fn identity() -> FreeWord {
        FreeWord(Vec::new())
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn push_reduced(out: &mut Vec<i32>, x: i32) {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }

    fn concat3(a: &[i32], b: &[i32], c: Concat3Tail<'_>) -> FreeWord {
        let mut out = Vec::with_capacity(a.len() + b.len() + c.len());
        for &x in a {
            Self::push_reduced(&mut out, x);
        }
        for &x in b {
            Self::push_reduced(&mut out, x);
        }
        match c {
            Concat3Tail::Forward(w) => {
                for &x in w {
                    Self::push_reduced(&mut out, x);
                }
            }
            Concat3Tail::Inverse(w) => {
                for &x in w.iter().rev() {
                    Self::push_reduced(&mut out, -x);
                }
            }
        }
        FreeWord(out)
    }
}

enum Concat3Tail<'a> {
    Forward(&'a [i32]),
    Inverse(&'a [i32]),
}

impl Concat3Tail<'_> {
    fn len(&self) -> usize {
        match self {
            Concat3Tail::Forward(w) | Concat3Tail::Inverse(w) => w.len(),
        }
    }
}

/// The images of the free generators under a braid's action. Equal
/// fingerprints characterize equal braids.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BraidFingerprint(Vec<FreeWord>);

impl BraidFingerprint {
    pub fn identity(strands: usize) -> BraidFingerprint {
        BraidFingerprint((1..=strands).map(FreeWord::generator).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, w)| w.0.len() == 1 && w.0[0] == (i + 1) as i32)
    }

    pub fn strands(&self) -> usize {
        self.0.len()
    }

    /// Total letter count across the images; a rough size measure.
    pub fn size(&self) -> usize {
        self.0.iter().map(|w| w.len()).sum()
    }

    /// Extends the fingerprint by one more Artin letter on the right.
    pub fn apply_letter(&mut self, letter: Letter) {
        let i = match letter.gen {
            Generator::Artin(i) => i,
            Generator::Band(..) => unreachable!("band letter reaches the free action"),
        };
        debug_assert!(i < self.0.len(), "letter outside the strand count");
        let a = core::mem::take(&mut self.0[i - 1]);
        let b = core::mem::take(&mut self.0[i]);
        match letter.sign {
            Sign::Pos => {
                // x_i -> x_i x_{i+1} x_i^{-1},  x_{i+1} -> x_i
                self.0[i - 1] = FreeWord::concat3(&a.0, &b.0, Concat3Tail::Inverse(&a.0));
                self.0[i] = a;
            }
            Sign::Neg => {
                // x_i -> x_{i+1},  x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}
                let mut inv_b = Vec::with_capacity(b.len());
                for &x in b.0.iter().rev() {
                    inv_b.push(-x);
                }
                self.0[i] = FreeWord::concat3(&inv_b, &a.0, Concat3Tail::Forward(&b.0));
                self.0[i - 1] = b;
            }
        }
    }
}

/// Composes the letter substitutions of `w` left to right. Band words are
/// translated to their Artin form first.
pub fn fingerprint(w: &BraidWord) -> BraidFingerprint {
    let artin = w.to_artin();
    let mut fp = BraidFingerprint::identity(artin.strands());
    for &l in artin.letters() {
        fp.apply_letter(l);
    }
    fp
}

/// Word-problem oracle: true iff the two words represent the same braid.
/// The operands must be declared over the same strand count.
pub fn equivalent(w1: &BraidWord, w2: &BraidWord) -> bool {
    assert_eq!(w1.strands(), w2.strands(), "strand counts differ");
    fingerprint(w1) == fingerprint(w2)
}

/// Explicit guards for the brute-force machinery. Every bound lives here so
/// desk experiments can raise them in one place.
#[derive(Clone, Copy, Debug)]
pub struct OracleLimits {
    /// Node cap for Cayley-ball breadth-first searches.
    pub max_ball_nodes: usize,
    /// Longest positive word accepted by the divisor enumerators.
    pub max_brute_len: usize,
    /// Node cap for positive-ball level sets.
    pub max_brute_nodes: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_ball_nodes: 4_000_000,
            max_brute_len: 10,
            max_brute_nodes: 2_000_000,
        }
    }
}

fn signed_atoms(strands: usize, family: Family) -> Vec<Letter> {
    let mut letters = Vec::new();
    match family {
        Family::Artin => {
            for i in 1..strands {
                letters.push(Letter::pos(Generator::Artin(i)));
                letters.push(Letter::neg(Generator::Artin(i)));
            }
        }
        Family::Band => {
            for q in 2..=strands {
                for p in 1..q {
                    letters.push(Letter::pos(Generator::Band(p, q)));
                    letters.push(Letter::neg(Generator::Band(p, q)));
                }
            }
        }
    }
    letters
}

/// Every braid within `radius` steps of the identity in the Cayley graph of
/// the chosen generating set, each with a geodesic witness word.
pub fn geodesic_ball(
    strands: usize,
    family: Family,
    radius: usize,
    limits: &OracleLimits,
) -> Result<Vec<(BraidWord, usize)>, Error> {
    let atoms = signed_atoms(strands, family);
    let mut seen: BTreeMap<BraidFingerprint, (BraidWord, usize)> = BTreeMap::new();
    let empty = BraidWord::empty(strands, family);
    seen.insert(fingerprint(&empty), (empty.clone(), 0));
    let mut frontier = vec![empty];
    for dist in 1..=radius {
        let mut next = Vec::new();
        for word in &frontier {
            for &l in &atoms {
                let mut cand = word.clone();
                {
                    // extend via the private push; concat would re-scan
                    let mut letters: Vec<Letter> = cand.letters().to_vec();
                    letters.push(l);
                    cand = BraidWord::from_letters_unchecked(strands, family, letters);
                }
                let fp = fingerprint(&cand);
                if seen.contains_key(&fp) {
                    continue;
                }
                if seen.len() >= limits.max_ball_nodes {
                    return Err(Error::Guard {
                        message: format!("Cayley ball exceeds {} nodes", limits.max_ball_nodes),
                    });
                }
                seen.insert(fp, (cand.clone(), dist));
                next.push(cand);
            }
        }
        frontier = next;
    }
    Ok(seen.into_values().collect())
}

/// Geodesic length of the braid represented by `w`, if it lies within
/// `radius` of the identity; `None` when the ball does not reach it.
pub fn geodesic_length(
    w: &BraidWord,
    radius: usize,
    limits: &OracleLimits,
) -> Result<Option<usize>, Error> {
    let target = fingerprint(w);
    let atoms = signed_atoms(w.strands(), w.family());
    let mut seen: BTreeSet<BraidFingerprint> = BTreeSet::new();
    let empty = BraidWord::empty(w.strands(), w.family());
    let start = fingerprint(&empty);
    if start == target {
        return Ok(Some(0));
    }
    seen.insert(start);
    let mut frontier = vec![empty];
    for dist in 1..=radius {
        let mut next = Vec::new();
        for word in &frontier {
            for &l in &atoms {
                let mut letters: Vec<Letter> = word.letters().to_vec();
                letters.push(l);
                let cand = BraidWord::from_letters_unchecked(w.strands(), w.family(), letters);
                let fp = fingerprint(&cand);
                if fp == target {
                    return Ok(Some(dist));
                }
                if seen.contains(&fp) {
                    continue;
                }
                if seen.len() >= limits.max_ball_nodes {
                    return Err(Error::Guard {
                        message: format!("Cayley ball exceeds {} nodes", limits.max_ball_nodes),
                    });
                }
                seen.insert(fp);
                next.push(cand);
            }
        }
        frontier = next;
    }
    Ok(None)
}

/// Level sets of the positive ball: all distinct braids represented by
/// positive words of each length up to `max_len` over `atoms`, with one
/// canonical witness per braid.
pub(crate) fn positive_levels(
    strands: usize,
    family: Family,
    atoms: &[Generator],
    max_len: usize,
    limits: &OracleLimits,
) -> Result<Vec<BTreeMap<BraidFingerprint, BraidWord>>, Error> {
    let mut levels: Vec<BTreeMap<BraidFingerprint, BraidWord>> = Vec::with_capacity(max_len + 1);
    let empty = BraidWord::empty(strands, family);
    let mut level0 = BTreeMap::new();
    level0.insert(fingerprint(&empty), empty);
    levels.push(level0);
    let mut total = 1usize;
    for len in 1..=max_len {
        let mut level = BTreeMap::new();
        for word in levels[len - 1].values() {
            for &g in atoms {
                let mut letters: Vec<Letter> = word.letters().to_vec();
                letters.push(Letter::pos(g));
                let cand = BraidWord::from_letters_unchecked(strands, family, letters);
                let fp = fingerprint(&cand);
                level.entry(fp).or_insert(cand);
                total += 1;
                if total > limits.max_brute_nodes {
                    return Err(Error::Guard {
                        message: format!(
                            "positive ball exceeds {} nodes",
                            limits.max_brute_nodes
                        ),
                    });
                }
            }
        }
        levels.push(level);
    }
    Ok(levels)
}

fn check_brute_input(w: &BraidWord, ctx: &GarsideContext, limits: &OracleLimits) -> Result<(), Error> {
    if !w.is_positive() {
        return Err(Error::NotPositive);
    }
    if w.len() > limits.max_brute_len {
        return Err(Error::Guard {
            message: format!(
                "brute-force enumeration limited to words of length {}",
                limits.max_brute_len
            ),
        });
    }
    ctx.check_word(w)
}

/// All positive left divisors of the braid represented by `w`, as a map
/// from fingerprint to a canonical witness word.
pub fn brute_left_divisors(
    w: &BraidWord,
    ctx: &GarsideContext,
    limits: &OracleLimits,
) -> Result<BTreeMap<BraidFingerprint, BraidWord>, Error> {
    check_brute_input(w, ctx, limits)?;
    let len = w.len();
    let levels = positive_levels(ctx.strands(), ctx.family(), ctx.alphabet(), len, limits)?;
    // downward pass: keep the elements that extend to the target
    let mut admitted: Vec<BTreeSet<BraidFingerprint>> = vec![BTreeSet::new(); len + 1];
    let target = fingerprint(&w.with_strands(ctx.strands())?);
    admitted[len].insert(target);
    for j in (0..len).rev() {
        let (lower, upper) = {
            let (a, b) = admitted.split_at_mut(j + 1);
            (&mut a[j], &b[0])
        };
        for (fp, word) in &levels[j] {
            'atoms: for &g in ctx.alphabet() {
                let mut letters: Vec<Letter> = word.letters().to_vec();
                letters.push(Letter::pos(g));
                let cand = BraidWord::from_letters_unchecked(ctx.strands(), ctx.family(), letters);
                if upper.contains(&fingerprint(&cand)) {
                    lower.insert(fp.clone());
                    break 'atoms;
                }
            }
        }
    }
    let mut out = BTreeMap::new();
    for (j, level) in levels.iter().enumerate() {
        for fp in &admitted[j] {
            out.insert(fp.clone(), level[fp].clone());
        }
    }
    Ok(out)
}

/// All positive right divisors, each with a canonical witness and the
/// complementary cofactor word (`w = complement · divisor`).
pub fn brute_right_divisors(
    w: &BraidWord,
    ctx: &GarsideContext,
    limits: &OracleLimits,
) -> Result<BTreeMap<BraidFingerprint, (BraidWord, BraidWord)>, Error> {
    check_brute_input(w, ctx, limits)?;
    let len = w.len();
    let levels = positive_levels(ctx.strands(), ctx.family(), ctx.alphabet(), len, limits)?;
    let target = fingerprint(&w.with_strands(ctx.strands())?);
    let mut admitted: Vec<BTreeMap<BraidFingerprint, BraidWord>> = vec![BTreeMap::new(); len + 1];
    admitted[len].insert(target, BraidWord::empty(ctx.strands(), ctx.family()));
    for j in (0..len).rev() {
        let (lower, upper) = {
            let (a, b) = admitted.split_at_mut(j + 1);
            (&mut a[j], &b[0])
        };
        for (fp, word) in &levels[j] {
            'atoms: for &g in ctx.alphabet() {
                let mut letters: Vec<Letter> = Vec::with_capacity(word.len() + 1);
                letters.push(Letter::pos(g));
                letters.extend_from_slice(word.letters());
                let cand = BraidWord::from_letters_unchecked(ctx.strands(), ctx.family(), letters);
                if let Some(comp_above) = upper.get(&fingerprint(&cand)) {
                    // w = comp_above · (g · divisor): the complement of the
                    // divisor gains the letter g on the right.
                    let mut comp = comp_above.clone();
                    comp.push(Letter::pos(g));
                    lower.insert(fp.clone(), comp);
                    break 'atoms;
                }
            }
        }
    }
    let mut out = BTreeMap::new();
    for (j, level) in levels.iter().enumerate() {
        for (fp, comp) in &admitted[j] {
            out.insert(fp.clone(), (level[fp].clone(), comp.clone()));
        }
    }
    Ok(out)
}

/// Membership test inside the full positive ball: is there a positive word
/// of length `len` representing `w`?
fn in_positive_ball(
    levels: &[BTreeMap<BraidFingerprint, BraidWord>],
    fp: &BraidFingerprint,
    len: usize,
) -> bool {
    len < levels.len() && levels[len].contains_key(fp)
}

/// Maximal right divisor of `w` lying in the `k`-twisted copy of the
/// one-strand-smaller submonoid. Returns the untwisted divisor word and the
/// remaining cofactor, exactly as the production `tail` does.
pub fn brute_tail(
    w: &BraidWord,
    ctx: &GarsideContext,
    k: usize,
    limits: &OracleLimits,
) -> Result<(BraidWord, BraidWord), Error> {
    check_brute_input(w, ctx, limits)?;
    let len = w.len();
    let divisors = brute_right_divisors(w, ctx, limits)?;
    let levels = positive_levels(ctx.strands(), ctx.family(), ctx.alphabet(), len, limits)?;
    let sub: Vec<Generator> = ctx
        .sub_alphabet()
        .iter()
        .map(|&g| ctx.twist_gen(g, k))
        .collect();
    let sub_levels = positive_levels(ctx.strands(), ctx.family(), &sub, len, limits)?;

    let mut candidates: Vec<(&BraidFingerprint, &BraidWord, &BraidWord, usize)> = Vec::new();
    for (fp, (div, comp)) in &divisors {
        for (j, level) in sub_levels.iter().enumerate() {
            if let Some(sub_word) = level.get(fp) {
                candidates.push((fp, sub_word, comp, j));
                break;
            }
        }
        let _ = div;
    }
    let best_len = candidates.iter().map(|c| c.3).max().unwrap_or(0);
    let best: Vec<_> = candidates.iter().filter(|c| c.3 == best_len).collect();
    if best.len() != 1 {
        return Err(Error::Internal {
            message: "maximal twisted tail is not unique".to_string(),
        });
    }
    let (best_fp, tail_word, comp, _) = *best[0];
    // every other candidate must right-divide the maximal one
    for (fp, other_word, _, j) in &candidates {
        if *fp == best_fp {
            continue;
        }
        let quotient = tail_word.concat(&other_word.invert()).to_artin();
        if !in_positive_ball(&levels, &fingerprint(&quotient), best_len - j) {
            return Err(Error::Internal {
                message: "twisted tail candidate does not divide the maximum".to_string(),
            });
        }
    }
    // untwist letterwise
    let mut untwisted = BraidWord::empty(ctx.strands(), ctx.family());
    for &l in tail_word.letters() {
        untwisted.push(Letter {
            gen: ctx.untwist_gen(l.gen, k),
            sign: l.sign,
        });
    }
    Ok((untwisted, comp.clone()))
}

/// Maximal common left divisor of two positive words, by enumeration.
pub fn brute_gcd(
    u: &BraidWord,
    v: &BraidWord,
    ctx: &GarsideContext,
    limits: &OracleLimits,
) -> Result<BraidWord, Error> {
    let du = brute_left_divisors(u, ctx, limits)?;
    let dv = brute_left_divisors(v, ctx, limits)?;
    let max_len = u.len().max(v.len());
    let levels = positive_levels(ctx.strands(), ctx.family(), ctx.alphabet(), max_len, limits)?;
    let common: Vec<(&BraidFingerprint, &BraidWord)> = du
        .iter()
        .filter(|(fp, _)| dv.contains_key(fp))
        .map(|(fp, w)| (fp, w))
        .collect();
    let best_len = common.iter().map(|(_, w)| w.len()).max().unwrap_or(0);
    let best: Vec<_> = common.iter().filter(|(_, w)| w.len() == best_len).collect();
    if best.len() != 1 {
        return Err(Error::Internal {
            message: "maximal common left divisor is not unique".to_string(),
        });
    }
    let (_, gcd_word) = *best[0];
    for (_, d) in &common {
        let quotient = d.invert().concat(gcd_word).to_artin();
        if !in_positive_ball(&levels, &fingerprint(&quotient), best_len - d.len()) {
            return Err(Error::Internal {
                message: "a common divisor does not divide the gcd".to_string(),
            });
        }
    }
    Ok(gcd_word.clone())
}

/// Iterated twisted-tail extraction; the reference for the splitting.
pub fn brute_splitting(
    w: &BraidWord,
    ctx: &GarsideContext,
    limits: &OracleLimits,
) -> Result<Vec<BraidWord>, Error> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut rest = w.clone();
    let mut entries_rev = Vec::new();
    let mut k = 0usize;
    while !rest.is_empty() {
        let (u, r) = brute_tail(&rest, ctx, k, limits)?;
        entries_rev.push(u);
        rest = r;
        k += 1;
        if k > 2 * w.len() + 2 {
            return Err(Error::Internal {
                message: "splitting does not terminate".to_string(),
            });
        }
    }
    entries_rev.reverse();
    Ok(entries_rev)
}

/// Random-word and rewrite helpers shared by the test suites live with the
/// oracle so that they stay independent of the engines under test.
pub mod rewrite {
    use super::*;

    /// The defining relation pairs of the positive braid presentation on
    /// `strands` strands: commutations for distant indices and the length-3
    /// relations for adjacent ones.
    pub fn artin_relations(strands: usize) -> Vec<(BraidWord, BraidWord)> {
        let mut out = Vec::new();
        for i in 1..strands {
            for j in (i + 1)..strands {
                let gi = Generator::Artin(i);
                let gj = Generator::Artin(j);
                if j - i >= 2 {
                    out.push((
                        BraidWord::from_letters_unchecked(
                            strands,
                            Family::Artin,
                            vec![Letter::pos(gi), Letter::pos(gj)],
                        ),
                        BraidWord::from_letters_unchecked(
                            strands,
                            Family::Artin,
                            vec![Letter::pos(gj), Letter::pos(gi)],
                        ),
                    ));
                } else {
                    out.push((
                        BraidWord::from_letters_unchecked(
                            strands,
                            Family::Artin,
                            vec![Letter::pos(gi), Letter::pos(gj), Letter::pos(gi)],
                        ),
                        BraidWord::from_letters_unchecked(
                            strands,
                            Family::Artin,
                            vec![Letter::pos(gj), Letter::pos(gi), Letter::pos(gj)],
                        ),
                    ));
                }
            }
        }
        out
    }
}
