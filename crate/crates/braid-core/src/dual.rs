//! The dual braid monoid: band generators, machine-derived lcm selector
//! tables, the rotating splitting and the dual normalization pipeline.
//!
//! No hand-written selector table exists for the band presentation, so the
//! tables are derived from the divisor lattice of the dual Garside element
//! (whose divisors are the noncrossing partitions) and validated at build
//! time: every table entry must close an lcm square under the free-group
//! oracle, and the conjectured automorphism action must match conjugation
//! by the Garside element. Construction fails loudly otherwise.

use alloc::format;
use alloc::vec::Vec;

use crate::error::Error;
use crate::lattice::derive_selectors;
use crate::oracle::fingerprint;
use crate::reversing::GarsideContext;
use crate::sigmadef::sigma_definite_in;
use crate::words::{BraidWord, Family, Generator, Letter};

use crate::classical::{monoid_splitting, Splitting};

/// Translates a band word into the Artin word obtained by expanding each
/// band generator into its conjugated-crossing spelling.
pub fn band_to_artin(w: &BraidWord) -> BraidWord {
    w.to_artin()
}

/// The defining relations of the band presentation on `n` strands:
/// commutation for disjoint or nested intervals, and the three pairwise
/// equal products around each triple `p < q < r`.
#[derive(Clone, Debug)]
pub struct BandPresentation {
    strands: usize,
}

impl BandPresentation {
    pub fn new(strands: usize) -> BandPresentation {
        assert!(strands >= 2, "strand count below 2");
        BandPresentation { strands }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Relation pairs `(lhs, rhs)` of equivalent positive band words.
    pub fn relations(&self) -> Vec<(BraidWord, BraidWord)> {
        let n = self.strands;
        let word = |gens: &[Generator]| {
            BraidWord::from_letters_unchecked(
                n,
                Family::Band,
                gens.iter().map(|&g| Letter::pos(g)).collect(),
            )
        };
        let mut out = Vec::new();
        let atoms = band_alphabet(n);
        for (i, &a) in atoms.iter().enumerate() {
            for &b in &atoms[i + 1..] {
                let (Generator::Band(p, q), Generator::Band(r, s)) = (a, b) else {
                    unreachable!()
                };
                // atoms are sorted, so (p,q) <= (r,s) lexicographically:
                // disjoint means the first interval ends before the second
                // starts, nested means it strictly contains the second
                let disjoint = q < r;
                let nested = p < r && s < q;
                if disjoint || nested {
                    out.push((word(&[a, b]), word(&[b, a])));
                }
            }
        }
        for p in 1..=n {
            for q in (p + 1)..=n {
                for r in (q + 1)..=n {
                    let apq = Generator::Band(p, q);
                    let aqr = Generator::Band(q, r);
                    let apr = Generator::Band(p, r);
                    out.push((word(&[apq, aqr]), word(&[aqr, apr])));
                    out.push((word(&[aqr, apr]), word(&[apr, apq])));
                }
            }
        }
        out
    }
}

fn band_alphabet(n: usize) -> Vec<Generator> {
    let mut atoms = Vec::with_capacity(n * (n - 1) / 2);
    for p in 1..n {
        for q in (p + 1)..=n {
            atoms.push(Generator::Band(p, q));
        }
    }
    atoms.sort();
    atoms
}

fn dual_garside_word(n: usize) -> BraidWord {
    let letters = (1..n)
        .map(|p| Letter::pos(Generator::Band(p, p + 1)))
        .collect();
    BraidWord::from_letters_unchecked(n, Family::Band, letters)
}

/// The conjectured Garside automorphism: all strand labels shift by one,
/// cyclically. Checked against the oracle before use.
fn rotate_gen(g: Generator, n: usize) -> Generator {
    let Generator::Band(p, q) = g else {
        unreachable!("band alphabet")
    };
    if q == n {
        Generator::Band(1, p + 1)
    } else {
        Generator::Band(p + 1, q + 1)
    }
}

/// Builds the dual-monoid context on `n` strands. Selector tables are
/// derived from the divisor lattice of the Garside element and every entry
/// is validated against the oracle; the rotation action is verified to be
/// conjugation by the Garside element. Any failure is a bug in the
/// derivation, reported as an error rather than silently accepted.
pub fn dual_context(n: usize) -> Result<GarsideContext, Error> {
    assert!(n >= 2, "strand count below 2");
    let atoms = band_alphabet(n);
    let delta = dual_garside_word(n);

    let selectors = derive_selectors(n, Family::Band, &atoms, &delta)?;

    // rotation must agree with conjugation by the Garside element
    let auto: Vec<Generator> = atoms.iter().map(|&g| rotate_gen(g, n)).collect();
    for (&g, &image) in atoms.iter().zip(auto.iter()) {
        let single = BraidWord::from_letters_unchecked(
            n,
            Family::Band,
            alloc::vec![Letter::pos(g)],
        );
        let conjugated = delta.concat(&single).concat(&delta.invert());
        let rotated = BraidWord::from_letters_unchecked(
            n,
            Family::Band,
            alloc::vec![Letter::pos(image)],
        );
        if fingerprint(&conjugated) != fingerprint(&rotated) {
            return Err(Error::Derivation {
                message: format!("rotation of {g} does not match conjugation"),
            });
        }
    }

    let ctx = GarsideContext::from_parts(
        n,
        Family::Band,
        atoms.clone(),
        selectors.left,
        selectors.right,
        delta.clone(),
        auto,
    )?;

    // every derived entry must close its lcm square, and the closed square
    // must divide the Garside element on the matching side
    for &x in &atoms {
        for &y in &atoms {
            if x == y {
                continue;
            }
            let word_of = |head: Generator, tail: &[Generator]| {
                let mut letters = alloc::vec![Letter::pos(head)];
                letters.extend(tail.iter().map(|&g| Letter::pos(g)));
                BraidWord::from_letters_unchecked(n, Family::Band, letters)
            };
            let lhs = word_of(x, ctx.left_selector(x, y)?);
            let rhs = word_of(y, ctx.left_selector(y, x)?);
            if fingerprint(&lhs) != fingerprint(&rhs) {
                return Err(Error::Derivation {
                    message: format!("left lcm square of {x}, {y} does not close"),
                });
            }
            let rev_word_of = |tail: &[Generator], last: Generator| {
                let mut letters: Vec<Letter> =
                    tail.iter().map(|&g| Letter::pos(g)).collect();
                letters.push(Letter::pos(last));
                BraidWord::from_letters_unchecked(n, Family::Band, letters)
            };
            let lhs = rev_word_of(ctx.right_selector(x, y)?, y);
            let rhs = rev_word_of(ctx.right_selector(y, x)?, x);
            if fingerprint(&lhs) != fingerprint(&rhs) {
                return Err(Error::Derivation {
                    message: format!("right lcm square of {x}, {y} does not close"),
                });
            }
        }
    }

    Ok(ctx)
}

/// The rotating splitting: iterated maximal-tail extraction in the dual
/// monoid, with the rotation in place of the flip.
pub fn dual_splitting(w: &BraidWord, n: usize) -> Result<Splitting, Error> {
    assert!(n >= 3, "splittings need at least three strands");
    monoid_splitting(w, &dual_context(n)?)
}

/// Dual sigma-definite representative: the normalization pipeline run with
/// dual contexts. The output's letters of maximal upper strand carry a
/// single sign, its band length is at most `(2n-3)` times the dual geodesic
/// length, and its Artin translation is sigma-definite.
pub fn dual_sigma_definite(w: &BraidWord) -> Result<BraidWord, Error> {
    assert_eq!(w.family(), Family::Band, "dual pipeline takes band words");
    let out = sigma_definite_in(w, dual_context)?;
    out.with_strands(w.strands())
}
