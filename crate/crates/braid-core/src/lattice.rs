//! Derivation of lcm selector tables from the divisor lattice of a Garside
//! element, by exhaustive enumeration against the free-group oracle.
//!
//! Used to machine-derive the dual-monoid tables (which no table in the
//! literature pins down letter by letter) and, in tests, to cross-check the
//! hand-written classical tables.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::error::Error;
use crate::oracle::{fingerprint, BraidFingerprint};
use crate::words::{BraidWord, Family, Generator, Letter};

pub(crate) struct DerivedSelectors {
    /// Row-major `m×m` table of `f_L` entries.
    pub left: Vec<Vec<Generator>>,
    /// Row-major `m×m` table of `f_R` entries.
    pub right: Vec<Vec<Generator>>,
}

struct Lattice {
    /// Divisors of the Garside element grouped by length; each holds a
    /// witness word.
    levels: Vec<Vec<(BraidFingerprint, BraidWord)>>,
    /// `edges[level][i]` lists `(atom index, target index in level+1)`.
    edges: Vec<Vec<Vec<(usize, usize)>>>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    /// Extend divisors on the right: enumerates left divisors.
    Left,
    /// Extend divisors on the left: enumerates right divisors.
    Right,
}

fn extend(word: &BraidWord, g: Generator, side: Side) -> BraidWord {
    let letter = Letter::pos(g);
    let mut letters = Vec::with_capacity(word.len() + 1);
    match side {
        Side::Left => {
            letters.extend_from_slice(word.letters());
            letters.push(letter);
        }
        Side::Right => {
            letters.push(letter);
            letters.extend_from_slice(word.letters());
        }
    }
    BraidWord::from_letters_unchecked(word.strands(), word.family(), letters)
}

/// Enumerates the divisors of `garside` on the chosen side, level by level.
/// Works bottom-up with a memoized completion test, so no selector table is
/// needed: an element divides the Garside element iff some positive word of
/// the complementary length closes the gap, checked by fingerprint.
fn divisor_lattice(
    strands: usize,
    family: Family,
    atoms: &[Generator],
    garside: &BraidWord,
    side: Side,
) -> Lattice {
    let glen = garside.len();
    let gfp = fingerprint(garside);
    let mut memo: BTreeMap<(BraidFingerprint, usize), bool> = BTreeMap::new();

    // completes(w, r): can w be extended by r more atoms to reach the element?
    fn completes(
        word: &BraidWord,
        remaining: usize,
        atoms: &[Generator],
        side: Side,
        gfp: &BraidFingerprint,
        memo: &mut BTreeMap<(BraidFingerprint, usize), bool>,
    ) -> bool {
        let fp = fingerprint(word);
        if remaining == 0 {
            return fp == *gfp;
        }
        if let Some(&hit) = memo.get(&(fp.clone(), remaining)) {
            return hit;
        }
        let mut ok = false;
        for &g in atoms {
            if completes(&extend(word, g, side), remaining - 1, atoms, side, gfp, memo) {
                ok = true;
                break;
            }
        }
        memo.insert((fp, remaining), ok);
        ok
    }

    let mut levels: Vec<Vec<(BraidFingerprint, BraidWord)>> = Vec::with_capacity(glen + 1);
    let empty = BraidWord::empty(strands, family);
    levels.push(alloc::vec![(fingerprint(&empty), empty)]);
    let mut edges: Vec<Vec<Vec<(usize, usize)>>> = Vec::new();
    for len in 0..glen {
        let mut next: Vec<(BraidFingerprint, BraidWord)> = Vec::new();
        let mut level_edges: Vec<Vec<(usize, usize)>> = alloc::vec![Vec::new(); levels[len].len()];
        for (src, (_, word)) in levels[len].iter().enumerate() {
            for (ai, &g) in atoms.iter().enumerate() {
                let cand = extend(word, g, side);
                if !completes(&cand, glen - len - 1, atoms, side, &gfp, &mut memo) {
                    continue;
                }
                let cfp = fingerprint(&cand);
                let tgt = match next.iter().position(|(fp, _)| *fp == cfp) {
                    Some(i) => i,
                    None => {
                        next.push((cfp, cand));
                        next.len() - 1
                    }
                };
                level_edges[src].push((ai, tgt));
            }
        }
        edges.push(level_edges);
        levels.push(next);
    }
    Lattice { levels, edges }
}

impl Lattice {
    /// Indices (level, position) of the atoms, in atom order.
    fn atom_nodes(&self, atoms: &[Generator], strands: usize, family: Family) -> Vec<usize> {
        atoms
            .iter()
            .map(|&g| {
                let w = BraidWord::from_letters_unchecked(
                    strands,
                    family,
                    alloc::vec![Letter::pos(g)],
                );
                let fp = fingerprint(&w);
                self.levels[1]
                    .iter()
                    .position(|(f, _)| *f == fp)
                    .expect("every atom divides the Garside element")
            })
            .collect()
    }

    /// All nodes of `level` reachable from node `(1, from)`.
    fn reachable_from(&self, from: usize, level: usize) -> Vec<bool> {
        let mut cur = alloc::vec![false; self.levels[1].len()];
        cur[from] = true;
        let mut at = 1;
        while at < level {
            let mut next = alloc::vec![false; self.levels[at + 1].len()];
            for (src, ok) in cur.iter().enumerate() {
                if !ok {
                    continue;
                }
                for &(_, tgt) in &self.edges[at][src] {
                    next[tgt] = true;
                }
            }
            cur = next;
            at += 1;
        }
        cur
    }

    /// Lexicographically least path of atoms from node `(1, from)` up to
    /// node `(level, target)`; the complement word in traversal order.
    fn complement_path(&self, from: usize, level: usize, target: usize) -> Option<Vec<usize>> {
        fn go(
            lat: &Lattice,
            at_level: usize,
            at: usize,
            level: usize,
            target: usize,
            acc: &mut Vec<usize>,
        ) -> bool {
            if at_level == level {
                return at == target;
            }
            let mut sorted = lat.edges[at_level][at].clone();
            sorted.sort();
            for (ai, tgt) in sorted {
                acc.push(ai);
                if go(lat, at_level + 1, tgt, level, target, acc) {
                    return true;
                }
                acc.pop();
            }
            false
        }
        let mut acc = Vec::new();
        if go(self, 1, from, level, target, &mut acc) {
            Some(acc)
        } else {
            None
        }
    }
}

/// Derives both selector tables for the monoid whose atoms are `atoms` and
/// whose Garside element is represented by `garside`. Every entry is read
/// off the divisor lattice and validated against the oracle by the caller.
pub(crate) fn derive_selectors(
    strands: usize,
    family: Family,
    atoms: &[Generator],
    garside: &BraidWord,
) -> Result<DerivedSelectors, Error> {
    let m = atoms.len();
    let left_lat = divisor_lattice(strands, family, atoms, garside, Side::Left);
    let right_lat = divisor_lattice(strands, family, atoms, garside, Side::Right);

    // the simple elements of a Garside structure divide on both sides;
    // a mismatch means the supplied Garside word is wrong
    for (lv, rv) in left_lat.levels.iter().zip(right_lat.levels.iter()) {
        let mut lf: Vec<&BraidFingerprint> = lv.iter().map(|(f, _)| f).collect();
        let mut rf: Vec<&BraidFingerprint> = rv.iter().map(|(f, _)| f).collect();
        lf.sort();
        rf.sort();
        if lf != rf {
            return Err(Error::Derivation {
                message: format!(
                    "left and right divisor sets of the Garside element differ at length {}",
                    lv.first().map(|(_, w)| w.len()).unwrap_or(0)
                ),
            });
        }
    }

    let mut left = alloc::vec![Vec::new(); m * m];
    let mut right = alloc::vec![Vec::new(); m * m];

    for (side, lat, table) in [
        (Side::Left, &left_lat, &mut left),
        (Side::Right, &right_lat, &mut right),
    ] {
        let atom_nodes = lat.atom_nodes(atoms, strands, family);
        for (i, &ni) in atom_nodes.iter().enumerate() {
            for (j, &nj) in atom_nodes.iter().enumerate() {
                if i == j {
                    continue; // lcm of an atom with itself is the atom: empty complement
                }
                // the lcm is the unique common bound at the lowest level
                let mut found = None;
                for level in 2..lat.levels.len() {
                    let from_i = lat.reachable_from(ni, level);
                    let from_j = lat.reachable_from(nj, level);
                    let common: Vec<usize> = (0..lat.levels[level].len())
                        .filter(|&t| from_i[t] && from_j[t])
                        .collect();
                    if common.len() > 1 {
                        return Err(Error::Derivation {
                            message: format!(
                                "lcm of atoms {} and {} is not unique at length {level}",
                                atoms[i], atoms[j]
                            ),
                        });
                    }
                    if let Some(&t) = common.first() {
                        found = Some((level, t));
                        break;
                    }
                }
                let Some((level, t)) = found else {
                    return Err(Error::Derivation {
                        message: format!("atoms {} and {} admit no lcm", atoms[i], atoms[j]),
                    });
                };
                // f_L(x,y) completes x on the right; f_R(x,y) completes y
                // on the left
                let start = match side {
                    Side::Left => atom_nodes[i],
                    Side::Right => atom_nodes[j],
                };
                let path = lat.complement_path(start, level, t).ok_or_else(|| {
                    Error::Derivation {
                        message: format!(
                            "no complement path from atom {} to the lcm",
                            atoms[if side == Side::Left { i } else { j }]
                        ),
                    }
                })?;
                let mut word: Vec<Generator> = path.into_iter().map(|ai| atoms[ai]).collect();
                if side == Side::Right {
                    // prepending steps build the complement right-to-left
                    word.reverse();
                }
                table[i * m + j] = word;
            }
        }
    }

    Ok(DerivedSelectors { left, right })
}
