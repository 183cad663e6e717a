//! Garside quotients and the Garside--Thurston normal form.
//!
//! Every braid has a unique expression `Δ⁻ᵗ·β'` with `β'` positive and not
//! left-divisible by the Garside element unless `t = 0`, and a unique
//! fraction `β'⁻¹·β''` of positive braids with trivial left gcd. The second
//! form detects the braid's index: the minimal strand count containing it.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::classical::artin_context;
use crate::error::Error;
use crate::reversing::{left_reverse, right_reverse, GarsideContext};
use crate::words::{BraidWord, Family, Generator, Letter};

/// The quotient `Δ⁻ᵗ · numerator` of a braid by powers of the Garside
/// element. When `t > 0` the numerator is not left-divisible by it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Fraction {
    pub t: usize,
    pub numerator: BraidWord,
}

/// The fraction `neg⁻¹ · pos` of two positive braids with trivial left gcd.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GTForm {
    pub neg: BraidWord,
    pub pos: BraidWord,
}

/// Complement of an atom inside the Garside element: the positive word `u`
/// with `Δ ≡ u·x`, computed by left-reversing `Δ·x⁻¹`.
fn garside_complement(
    ctx: &GarsideContext,
    cache: &mut BTreeMap<Generator, BraidWord>,
    x: Generator,
) -> Result<BraidWord, Error> {
    if let Some(hit) = cache.get(&x) {
        return Ok(hit.clone());
    }
    let delta = ctx.garside_word();
    let single = ctx.word(alloc::vec![Letter::neg(x)]);
    let pair = left_reverse(&delta.concat(&single), ctx)?;
    if !pair.denominator.is_empty() {
        return Err(Error::Internal {
            message: alloc::format!("atom {x} does not right-divide the Garside element"),
        });
    }
    cache.insert(x, pair.numerator.clone());
    Ok(pair.numerator)
}

/// Computes the Garside quotient of the braid represented by `w`: rewrites
/// each inverted letter as `Δ⁻¹` times its complement, pushes the `Δ⁻¹`s to
/// the front through the automorphism, and strips the leading Garside
/// divisors that remain.
pub fn garside_fraction_in(w: &BraidWord, ctx: &GarsideContext) -> Result<Fraction, Error> {
    ctx.check_word(w)?;
    // split `w` into positive runs separated by the inverted letters
    let mut runs: Vec<Vec<Letter>> = alloc::vec![Vec::new()];
    let mut inverted: Vec<Generator> = Vec::new();
    for &l in w.letters() {
        if l.is_positive() {
            runs.last_mut().expect("runs is nonempty").push(l);
        } else {
            inverted.push(l.gen);
            runs.push(Vec::new());
        }
    }
    let t = inverted.len();
    let mut cache = BTreeMap::new();
    let mut v = ctx.twist_word(&ctx.word(runs[0].clone()), t);
    for (i, x) in inverted.iter().enumerate() {
        let complement = garside_complement(ctx, &mut cache, *x)?;
        let mut block = complement;
        block.extend(runs[i + 1].iter().copied());
        v = v.concat(&ctx.twist_word(&block, t - (i + 1)));
    }
    // strip leading Garside divisors while the exponent lasts
    let mut t_cur = t;
    let delta_inv = ctx.garside_word().invert();
    while t_cur > 0 {
        let pair = right_reverse(&delta_inv.concat(&v), ctx)?;
        if pair.denominator.is_empty() {
            v = pair.numerator;
            t_cur -= 1;
        } else {
            break;
        }
    }
    Ok(Fraction { t: t_cur, numerator: v })
}

/// `garside_fraction_in` over the classical monoid on `n` strands.
pub fn garside_fraction(w: &BraidWord, n: usize) -> Result<Fraction, Error> {
    garside_fraction_in(w, &artin_context(n))
}

/// The normal form `β'⁻¹·β''` with trivial left gcd: right reverse, then
/// left reverse the resulting fraction.
pub fn garside_thurston(w: &BraidWord, ctx: &GarsideContext) -> Result<GTForm, Error> {
    let first = right_reverse(w, ctx)?;
    let fraction = first.numerator.concat(&first.denominator.invert());
    let second = left_reverse(&fraction, ctx)?;
    Ok(GTForm {
        neg: second.denominator,
        pos: second.numerator,
    })
}

/// Double reversing in the given context; returns the index of the result
/// (the strand count of the smallest group containing the braid) and the
/// reduced fraction word `neg⁻¹·pos`, re-declared over that many strands.
pub fn index_and_reduce_in(
    w: &BraidWord,
    ctx: &GarsideContext,
) -> Result<(usize, BraidWord), Error> {
    let gt = garside_thurston(w, ctx)?;
    let reduced = gt.neg.invert().concat(&gt.pos);
    let k = reduced.word_index();
    Ok((k, reduced.with_strands(k)?))
}

/// Index computation for Artin words.
pub fn index_and_reduce(w: &BraidWord) -> Result<(usize, BraidWord), Error> {
    assert_eq!(w.family(), Family::Artin, "index of an Artin word");
    let n = w.strands().max(w.word_index());
    index_and_reduce_in(w, &artin_context(n))
}
