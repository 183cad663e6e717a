//! Generic word reversing over a finitely generated Garside monoid given by
//! lcm selector tables.
//!
//! Right reversing rewrites each subword `x⁻¹y` into `f_L(x,y)·f_L(y,x)⁻¹`
//! until the word has the shape `u·v⁻¹`; left reversing symmetrically
//! rewrites `x·y⁻¹` into `f_R(y,x)⁻¹·f_R(x,y)` and ends on `v⁻¹·u`. The
//! terminal pair is independent of the rewrite order, which makes the
//! divisibility tests and the left-gcd recipe below well defined.
//!
//! Terminology: the left lcm of two elements is their minimal common right
//! multiple with respect to left divisibility, and symmetrically for the
//! right lcm. The selectors satisfy `x·f_L(x,y) ≡ y·f_L(y,x)` (the left
//! lcm) and `f_R(x,y)·y ≡ f_R(y,x)·x` (the right lcm).

use alloc::collections::VecDeque;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::words::{BraidWord, Family, Generator, Letter, Sign};

/// Step-budget multiplier: a reversing run of a word with `p` positive and
/// `n` negative letters may take at most `BUDGET_FACTOR·(p+1)·(n+1)·m²`
/// elementary steps, `m` the longest selector entry. Generously above the
/// quadratic bound that holds in a Garside monoid; exceeding it means a
/// broken selector table.
const BUDGET_FACTOR: usize = 1024;

/// A monoid instance: alphabet, lcm selector tables, Garside element and
/// the automorphism induced by conjugation with it. Immutable once built.
#[derive(Clone, Debug)]
pub struct GarsideContext {
    strands: usize,
    family: Family,
    alphabet: Vec<Generator>,
    /// Flattened `m×m` tables of positive selector words, row = first atom.
    left: Vec<Vec<Generator>>,
    right: Vec<Vec<Generator>>,
    garside: BraidWord,
    /// Image of each alphabet entry under conjugation by the Garside word.
    auto: Vec<Generator>,
    auto_order: usize,
    max_selector: usize,
}

impl GarsideContext {
    pub(crate) fn from_parts(
        strands: usize,
        family: Family,
        alphabet: Vec<Generator>,
        left: Vec<Vec<Generator>>,
        right: Vec<Vec<Generator>>,
        garside: BraidWord,
        auto: Vec<Generator>,
    ) -> Result<GarsideContext, Error> {
        let m = alphabet.len();
        let internal = |message: &str| Error::Internal { message: message.to_string() };
        if alphabet.windows(2).any(|w| w[0] >= w[1]) {
            return Err(internal("context alphabet not sorted"));
        }
        if left.len() != m * m || right.len() != m * m {
            return Err(internal("selector table has wrong shape"));
        }
        for i in 0..m {
            if !left[i * m + i].is_empty() || !right[i * m + i].is_empty() {
                return Err(internal("selector diagonal must be empty"));
            }
        }
        if auto.len() != m {
            return Err(internal("automorphism table has wrong shape"));
        }
        let mut seen = vec![false; m];
        for &g in &auto {
            match alphabet.binary_search(&g) {
                Ok(idx) if !seen[idx] => seen[idx] = true,
                _ => return Err(internal("automorphism is not a permutation of the alphabet")),
            }
        }
        if !garside.is_positive() || garside.family() != family {
            return Err(internal("garside word must be positive in-family"));
        }
        let auto_order = permutation_order(&alphabet, &auto);
        let max_selector = left
            .iter()
            .chain(right.iter())
            .map(|w| w.len())
            .max()
            .unwrap_or(1)
            .max(1);
        Ok(GarsideContext {
            strands,
            family,
            alphabet,
            left,
            right,
            garside,
            auto,
            auto_order,
            max_selector,
        })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn alphabet(&self) -> &[Generator] {
        &self.alphabet
    }

    /// The canonical positive word for the Garside element.
    pub fn garside_word(&self) -> &BraidWord {
        &self.garside
    }

    /// Order of the Garside automorphism as a permutation of the alphabet.
    pub fn automorphism_order(&self) -> usize {
        self.auto_order
    }

    pub fn gen_index(&self, g: Generator) -> Result<usize, Error> {
        self.alphabet
            .binary_search(&g)
            .map_err(|_| Error::UnknownLetter { gen: g })
    }

    /// `f_L(x, y)`: the positive word with `x·f_L(x,y)` representing the
    /// left lcm of `x` and `y`.
    pub fn left_selector(&self, x: Generator, y: Generator) -> Result<&[Generator], Error> {
        let (i, j) = (self.gen_index(x)?, self.gen_index(y)?);
        Ok(&self.left[i * self.alphabet.len() + j])
    }

    /// `f_R(x, y)`: the positive word with `f_R(x,y)·y` representing the
    /// right lcm of `x` and `y`.
    pub fn right_selector(&self, x: Generator, y: Generator) -> Result<&[Generator], Error> {
        let (i, j) = (self.gen_index(x)?, self.gen_index(y)?);
        Ok(&self.right[i * self.alphabet.len() + j])
    }

    /// Image of `g` under the `k`-th power of the Garside automorphism.
    pub fn twist_gen(&self, g: Generator, k: usize) -> Generator {
        let mut out = g;
        for _ in 0..(k % self.auto_order) {
            let idx = self
                .alphabet
                .binary_search(&out)
                .expect("twist of a letter outside the alphabet");
            out = self.auto[idx];
        }
        out
    }

    /// Inverse twist: `untwist_gen(twist_gen(g, k), k) == g`.
    pub fn untwist_gen(&self, g: Generator, k: usize) -> Generator {
        let back = (self.auto_order - k % self.auto_order) % self.auto_order;
        self.twist_gen(g, back)
    }

    /// Applies the automorphism letterwise, `k` times.
    pub fn twist_word(&self, w: &BraidWord, k: usize) -> BraidWord {
        let letters = w
            .letters()
            .iter()
            .map(|l| Letter {
                gen: self.twist_gen(l.gen, k),
                sign: l.sign,
            })
            .collect();
        BraidWord::from_letters_unchecked(self.strands, self.family, letters)
    }

    /// Generators of the one-strand-smaller submonoid, in increasing order.
    pub fn sub_alphabet(&self) -> Vec<Generator> {
        self.alphabet
            .iter()
            .copied()
            .filter(|g| g.valid_for(self.strands.saturating_sub(1)))
            .collect()
    }

    /// Checks that every letter of `w` belongs to this context.
    pub fn check_word(&self, w: &BraidWord) -> Result<(), Error> {
        if w.family() != self.family {
            return Err(Error::FamilyMismatch);
        }
        for l in w.letters() {
            self.gen_index(l.gen)?;
        }
        Ok(())
    }

    fn budget(&self, w: &BraidWord) -> usize {
        let pos = w.letters().iter().filter(|l| l.is_positive()).count();
        let neg = w.len() - pos;
        BUDGET_FACTOR
            .saturating_mul(pos + 1)
            .saturating_mul(neg + 1)
            .saturating_mul(self.max_selector * self.max_selector)
    }

    pub(crate) fn word(&self, letters: Vec<Letter>) -> BraidWord {
        BraidWord::from_letters_unchecked(self.strands, self.family, letters)
    }
}

fn permutation_order(alphabet: &[Generator], auto: &[Generator]) -> usize {
    // lcm of cycle lengths
    let m = alphabet.len();
    let mut seen = vec![false; m];
    let mut order = 1usize;
    for start in 0..m {
        if seen[start] {
            continue;
        }
        let mut len = 0usize;
        let mut at = start;
        while !seen[at] {
            seen[at] = true;
            len += 1;
            at = alphabet.binary_search(&auto[at]).expect("permutation image");
        }
        order = lcm(order, len);
    }
    order.max(1)
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(mut a: usize, mut b: usize) -> usize {
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a
    }
    if a == 0 || b == 0 {
        a.max(b)
    } else {
        a / gcd(a, b) * b
    }
}

/// Outcome of a reversing run: both components are positive words. For
/// right reversing `numerator·denominator⁻¹` is equivalent to the input;
/// for left reversing `denominator⁻¹·numerator` is.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReversedPair {
    pub numerator: BraidWord,
    pub denominator: BraidWord,
}

/// One elementary reversing step, enough to rebuild the reversing grid.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReversalStep {
    /// Letter offset of the rewritten pattern in the word at that moment.
    pub position: usize,
    /// The inverted letter of the pattern.
    pub x: Generator,
    /// The plain letter of the pattern.
    pub y: Generator,
    /// Selector word inserted positively, `f(x,y)`.
    pub across: Vec<Generator>,
    /// Selector word inserted inverted, `f(y,x)`.
    pub down: Vec<Generator>,
}

/// Right-reverses `w`, rewriting the leftmost `x⁻¹y` pattern first. The
/// resulting pair is independent of that choice.
pub fn right_reverse(w: &BraidWord, ctx: &GarsideContext) -> Result<ReversedPair, Error> {
    right_reverse_impl(w, ctx, None)
}

/// Right reversing with a step log.
pub fn right_reverse_traced(
    w: &BraidWord,
    ctx: &GarsideContext,
) -> Result<(ReversedPair, Vec<ReversalStep>), Error> {
    let mut trace = Vec::new();
    let pair = right_reverse_impl(w, ctx, Some(&mut trace))?;
    Ok((pair, trace))
}

fn right_reverse_impl(
    w: &BraidWord,
    ctx: &GarsideContext,
    mut trace: Option<&mut Vec<ReversalStep>>,
) -> Result<ReversedPair, Error> {
    ctx.check_word(w)?;
    let budget = ctx.budget(w);
    let mut steps = 0usize;
    let mut input: VecDeque<Letter> = w.letters().iter().copied().collect();
    // processed prefix, always of the irreducible shape pos·neg⁻¹
    let mut out_pos: Vec<Generator> = Vec::new();
    let mut out_neg: Vec<Generator> = Vec::new();
    while let Some(l) = input.pop_front() {
        match l.sign {
            Sign::Neg => out_neg.push(l.gen),
            Sign::Pos => {
                let y = l.gen;
                match out_neg.pop() {
                    None => out_pos.push(y),
                    Some(x) => {
                        steps += 1;
                        if steps > budget {
                            return Err(Error::StepBudget { budget });
                        }
                        let fx = ctx.left_selector(x, y)?;
                        let fy = ctx.left_selector(y, x)?;
                        if let Some(t) = trace.as_deref_mut() {
                            t.push(ReversalStep {
                                position: out_pos.len() + out_neg.len(),
                                x,
                                y,
                                across: fx.to_vec(),
                                down: fy.to_vec(),
                            });
                        }
                        // prepend f_L(x,y) · f_L(y,x)⁻¹ to the input
                        for &g in fy {
                            input.push_front(Letter::neg(g));
                        }
                        for &g in fx.iter().rev() {
                            input.push_front(Letter::pos(g));
                        }
                    }
                }
            }
        }
    }
    let numerator = ctx.word(out_pos.into_iter().map(Letter::pos).collect());
    out_neg.reverse();
    let denominator = ctx.word(out_neg.into_iter().map(Letter::pos).collect());
    Ok(ReversedPair { numerator, denominator })
}

/// Right reversing with the opposite scheduling: the rightmost reducible
/// pattern is rewritten first. The terminal pair is the same as for
/// [`right_reverse`]; this entry point exists so large-scale checks can
/// confirm that independence without paying for the naive reference engine.
pub fn right_reverse_alt(w: &BraidWord, ctx: &GarsideContext) -> Result<ReversedPair, Error> {
    ctx.check_word(w)?;
    let budget = ctx.budget(w);
    let mut steps = 0usize;
    let mut input: VecDeque<Letter> = w.letters().iter().copied().collect();
    // processed suffix of the shape u·v⁻¹, fed from the right; stacks hold
    // the letters in arrival order (reverse word order for `u`)
    let mut u_rev: Vec<Generator> = Vec::new();
    let mut v_arrival: Vec<Generator> = Vec::new();
    while let Some(l) = input.pop_back() {
        match l.sign {
            Sign::Pos => u_rev.push(l.gen),
            Sign::Neg => {
                let x = l.gen;
                match u_rev.pop() {
                    None => v_arrival.push(x),
                    Some(y) => {
                        steps += 1;
                        if steps > budget {
                            return Err(Error::StepBudget { budget });
                        }
                        let fx = ctx.left_selector(x, y)?;
                        let fy = ctx.left_selector(y, x)?;
                        // append f_L(x,y)·f_L(y,x)⁻¹ after the input
                        for &g in fx {
                            input.push_back(Letter::pos(g));
                        }
                        for &g in fy.iter().rev() {
                            input.push_back(Letter::neg(g));
                        }
                    }
                }
            }
        }
    }
    u_rev.reverse();
    let numerator = ctx.word(u_rev.into_iter().map(Letter::pos).collect());
    let denominator = ctx.word(v_arrival.into_iter().map(Letter::pos).collect());
    Ok(ReversedPair { numerator, denominator })
}

/// Left-reverses `w`, rewriting the rightmost `x·y⁻¹` pattern first.
pub fn left_reverse(w: &BraidWord, ctx: &GarsideContext) -> Result<ReversedPair, Error> {
    left_reverse_impl(w, ctx, None)
}

/// Left reversing scheduled leftmost-first; see [`right_reverse_alt`].
pub fn left_reverse_alt(w: &BraidWord, ctx: &GarsideContext) -> Result<ReversedPair, Error> {
    ctx.check_word(w)?;
    let budget = ctx.budget(w);
    let mut steps = 0usize;
    let mut input: VecDeque<Letter> = w.letters().iter().copied().collect();
    // processed prefix of the shape v⁻¹·u, fed from the left
    let mut v_arrival: Vec<Generator> = Vec::new();
    let mut u: Vec<Generator> = Vec::new();
    let mut block: Vec<Letter> = Vec::new();
    while let Some(l) = input.pop_front() {
        match l.sign {
            Sign::Pos => u.push(l.gen),
            Sign::Neg => {
                let x = l.gen;
                match u.pop() {
                    None => v_arrival.push(x),
                    Some(y) => {
                        steps += 1;
                        if steps > budget {
                            return Err(Error::StepBudget { budget });
                        }
                        let fx = ctx.right_selector(x, y)?;
                        let fy = ctx.right_selector(y, x)?;
                        // prepend f_R(x,y)⁻¹·f_R(y,x) to the input
                        block.clear();
                        block.extend(fx.iter().rev().map(|&g| Letter::neg(g)));
                        block.extend(fy.iter().map(|&g| Letter::pos(g)));
                        for &b in block.iter().rev() {
                            input.push_front(b);
                        }
                    }
                }
            }
        }
    }
    let numerator = ctx.word(u.into_iter().map(Letter::pos).collect());
    v_arrival.reverse();
    let denominator = ctx.word(v_arrival.into_iter().map(Letter::pos).collect());
    Ok(ReversedPair { numerator, denominator })
}

/// Left reversing with a step log.
pub fn left_reverse_traced(
    w: &BraidWord,
    ctx: &GarsideContext,
) -> Result<(ReversedPair, Vec<ReversalStep>), Error> {
    let mut trace = Vec::new();
    let pair = left_reverse_impl(w, ctx, Some(&mut trace))?;
    Ok((pair, trace))
}

fn left_reverse_impl(
    w: &BraidWord,
    ctx: &GarsideContext,
    mut trace: Option<&mut Vec<ReversalStep>>,
) -> Result<ReversedPair, Error> {
    ctx.check_word(w)?;
    let budget = ctx.budget(w);
    let mut steps = 0usize;
    let mut input: VecDeque<Letter> = w.letters().iter().copied().collect();
    // processed suffix, always of the irreducible shape neg⁻¹·pos;
    // suf_neg holds the denominator letters in word order, its last entry
    // being the innermost (leftmost) inverted letter.
    let mut suf_neg: Vec<Generator> = Vec::new();
    let mut suf_pos_rev: Vec<Generator> = Vec::new();
    while let Some(l) = input.pop_back() {
        match l.sign {
            Sign::Pos => {
                let x = l.gen;
                match suf_neg.pop() {
                    None => suf_pos_rev.push(x),
                    Some(y) => {
                        steps += 1;
                        if steps > budget {
                            return Err(Error::StepBudget { budget });
                        }
                        let fy = ctx.right_selector(y, x)?;
                        let fx = ctx.right_selector(x, y)?;
                        if let Some(t) = trace.as_deref_mut() {
                            t.push(ReversalStep {
                                position: input.len(),
                                x: y,
                                y: x,
                                across: fx.to_vec(),
                                down: fy.to_vec(),
                            });
                        }
                        // append f_R(y,x)⁻¹ · f_R(x,y) after the input
                        for &g in fy.iter().rev() {
                            input.push_back(Letter::neg(g));
                        }
                        for &g in fx {
                            input.push_back(Letter::pos(g));
                        }
                    }
                }
            }
            Sign::Neg => suf_neg.push(l.gen),
        }
    }
    suf_pos_rev.reverse();
    let numerator = ctx.word(suf_pos_rev.into_iter().map(Letter::pos).collect());
    let denominator = ctx.word(suf_neg.into_iter().map(Letter::pos).collect());
    Ok(ReversedPair { numerator, denominator })
}

/// Which reducible pattern a reference reversing run rewrites first.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    Right,
    Left,
}

/// Reference engine: scans the whole word for the chosen pattern each step.
/// Slow, but independent of the production engines above; used to check
/// that the terminal pair does not depend on the rewrite order.
pub fn reverse_with_strategy(
    w: &BraidWord,
    ctx: &GarsideContext,
    direction: Direction,
    strategy: Strategy,
) -> Result<ReversedPair, Error> {
    ctx.check_word(w)?;
    let budget = ctx.budget(w);
    let mut steps = 0usize;
    let mut letters: Vec<Letter> = w.letters().to_vec();
    loop {
        let hit = find_pattern(&letters, direction, strategy);
        let Some(at) = hit else { break };
        steps += 1;
        if steps > budget {
            return Err(Error::StepBudget { budget });
        }
        let replacement = match direction {
            Direction::Right => {
                let (x, y) = (letters[at].gen, letters[at + 1].gen);
                let fx = ctx.left_selector(x, y)?;
                let fy = ctx.left_selector(y, x)?;
                let mut r: Vec<Letter> = fx.iter().map(|&g| Letter::pos(g)).collect();
                r.extend(fy.iter().rev().map(|&g| Letter::neg(g)));
                r
            }
            Direction::Left => {
                let (x, y) = (letters[at].gen, letters[at + 1].gen);
                let fy = ctx.right_selector(y, x)?;
                let fx = ctx.right_selector(x, y)?;
                let mut r: Vec<Letter> = fy.iter().rev().map(|&g| Letter::neg(g)).collect();
                r.extend(fx.iter().map(|&g| Letter::pos(g)));
                r
            }
        };
        letters.splice(at..at + 2, replacement);
    }
    // terminal shapes: u·v⁻¹ for right reversing, v⁻¹·u for left
    match direction {
        Direction::Right => {
            let split = letters
                .iter()
                .position(|l| !l.is_positive())
                .unwrap_or(letters.len());
            let numerator = ctx.word(letters[..split].to_vec());
            let denominator = ctx.word(
                letters[split..]
                    .iter()
                    .rev()
                    .map(|l| Letter::pos(l.gen))
                    .collect(),
            );
            Ok(ReversedPair { numerator, denominator })
        }
        Direction::Left => {
            let split = letters
                .iter()
                .position(|l| l.is_positive())
                .unwrap_or(letters.len());
            let denominator = ctx.word(
                letters[..split]
                    .iter()
                    .rev()
                    .map(|l| Letter::pos(l.gen))
                    .collect(),
            );
            let numerator = ctx.word(letters[split..].to_vec());
            Ok(ReversedPair { numerator, denominator })
        }
    }
}

fn find_pattern(letters: &[Letter], direction: Direction, strategy: Strategy) -> Option<usize> {
    let matches = |i: usize| match direction {
        Direction::Right => !letters[i].is_positive() && letters[i + 1].is_positive(),
        Direction::Left => letters[i].is_positive() && !letters[i + 1].is_positive(),
    };
    if letters.len() < 2 {
        return None;
    }
    match strategy {
        Strategy::Leftmost => (0..letters.len() - 1).find(|&i| matches(i)),
        Strategy::Rightmost => (0..letters.len() - 1).rev().find(|&i| matches(i)),
    }
}

/// Left-divisibility test: returns the quotient word `u\v` (with
/// `u·(u\v) ≡ v`) when the braid of `u` left-divides the braid of `v`.
pub fn divides_left(
    u: &BraidWord,
    v: &BraidWord,
    ctx: &GarsideContext,
) -> Result<Option<BraidWord>, Error> {
    let pair = right_reverse(&u.invert().concat(v), ctx)?;
    if pair.denominator.is_empty() {
        Ok(Some(pair.numerator))
    } else {
        Ok(None)
    }
}

/// Right-divisibility test: returns the quotient word `u/v` (with
/// `(u/v)·v ≡ u`) when the braid of `u` is right-divisible by that of `v`.
pub fn divides_right(
    u: &BraidWord,
    v: &BraidWord,
    ctx: &GarsideContext,
) -> Result<Option<BraidWord>, Error> {
    let pair = left_reverse(&u.concat(&v.invert()), ctx)?;
    if pair.denominator.is_empty() {
        Ok(Some(pair.numerator))
    } else {
        Ok(None)
    }
}

/// Maximal common left divisor of two positive words, computed by the
/// three-stage reversing recipe: right reverse `u⁻¹v`, left reverse the
/// resulting fraction to isolate its denominator, and close the square by
/// left reversing `u` against it.
pub fn left_gcd(u: &BraidWord, v: &BraidWord, ctx: &GarsideContext) -> Result<BraidWord, Error> {
    if !u.is_positive() || !v.is_positive() {
        return Err(Error::NotPositive);
    }
    let first = right_reverse(&u.invert().concat(v), ctx)?;
    let fraction = first.numerator.concat(&first.denominator.invert());
    let second = left_reverse(&fraction, ctx)?;
    let third = left_reverse(&u.concat(&second.denominator.invert()), ctx)?;
    if !third.denominator.is_empty() {
        return Err(Error::Internal {
            message: "gcd recipe left a nontrivial denominator".to_string(),
        });
    }
    Ok(third.numerator)
}
