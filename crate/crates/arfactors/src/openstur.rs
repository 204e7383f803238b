//! Finite-word machinery for open Sturmian factors: shortest unrepeated
//! prefix/suffix lengths, the closed-prefix and closed-suffix position
//! sets, special-factor counts, and the constructive split of an open
//! word into two closed ones.

use crate::error::{Error, Result};
use crate::factorlab::{is_closed, prefix_occurrence_counts, special_factors, Side};
use crate::words::{reversed, Letter, Word};
use std::collections::BTreeSet;

/// Positional profile of a finite word: which prefixes and suffixes are
/// closed, and how long the shortest unrepeated prefix and suffix are.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PrefixSuffixProfile {
    pub word: Word,
    /// `H_w`: length of the shortest prefix occurring exactly once.
    pub unrepeated_prefix_len: usize,
    /// `K_w`: length of the shortest suffix occurring exactly once.
    pub unrepeated_suffix_len: usize,
    /// `A_w`: 1-based positions `i` with `w_1⋯w_i` closed.
    pub closed_prefixes: BTreeSet<usize>,
    /// `A'_w`: 1-based positions `i` with `w_i⋯w_n` closed.
    pub closed_suffixes: BTreeSet<usize>,
}

impl PrefixSuffixProfile {
    pub fn new(w: &[Letter]) -> Result<Self> {
        if w.is_empty() {
            return Err(Error::EmptyWord);
        }
        let n = w.len();
        let back = reversed(w);

        let prefix_counts = prefix_occurrence_counts(w);
        let unrepeated_prefix_len = 1 + prefix_counts
            .iter()
            .position(|&c| c == 1)
            .expect("the full word occurs exactly once");
        let suffix_counts = prefix_occurrence_counts(&back);
        let unrepeated_suffix_len =
            1 + suffix_counts.iter().position(|&c| c == 1).expect("the full word occurs exactly once");

        let closed_prefixes: BTreeSet<usize> =
            (1..=n).filter(|&i| is_closed(&w[..i]).expect("non-empty prefix")).collect();
        // the suffix starting at i is the reversed prefix of the reversal,
        // and closedness is reversal-invariant
        let closed_suffixes: BTreeSet<usize> = (1..=n)
            .filter(|&i| is_closed(&back[..n - i + 1]).expect("non-empty suffix"))
            .collect();

        assert_eq!(
            closed_prefixes.len(),
            unrepeated_prefix_len,
            "|A_w| must equal H_w"
        );
        assert_eq!(
            closed_suffixes.len(),
            unrepeated_suffix_len,
            "|A'_w| must equal K_w"
        );

        Ok(PrefixSuffixProfile {
            word: w.to_vec(),
            unrepeated_prefix_len,
            unrepeated_suffix_len,
            closed_prefixes,
            closed_suffixes,
        })
    }

    /// `B_w`: positions whose prefix is open.
    pub fn open_prefixes(&self) -> BTreeSet<usize> {
        (1..=self.word.len()).filter(|i| !self.closed_prefixes.contains(i)).collect()
    }

    /// `B'_w`: positions whose suffix is open.
    pub fn open_suffixes(&self) -> BTreeSet<usize> {
        (1..=self.word.len()).filter(|i| !self.closed_suffixes.contains(i)).collect()
    }
}

/// Shorthand for [`PrefixSuffixProfile::new`].
pub fn prefix_suffix_profile(w: &[Letter]) -> Result<PrefixSuffixProfile> {
    PrefixSuffixProfile::new(w)
}

/// Counts of distinct left and right special factors (ε included when it
/// qualifies). Restricted to words over at most two distinct letters,
/// where the identities `S^l = |w| − H_w` and `S^r = |w| − K_w` hold and
/// are enforced.
pub fn special_counts(w: &[Letter]) -> Result<(usize, usize)> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let distinct: BTreeSet<Letter> = w.iter().copied().collect();
    if distinct.len() > 2 {
        return Err(Error::NonBinaryAlphabet);
    }
    let left = special_factors(w, Side::Left).len();
    let right = special_factors(w, Side::Right).len();
    let profile = PrefixSuffixProfile::new(w)?;
    assert_eq!(left, w.len() - profile.unrepeated_prefix_len, "S^l = |w| − H_w");
    assert_eq!(right, w.len() - profile.unrepeated_suffix_len, "S^r = |w| − K_w");
    Ok((left, right))
}

/// Splits an open word into a closed prefix and a closed suffix, at the
/// smallest position `i` with `i ∈ A_w` and `i + 1 ∈ A'_w`.
pub fn decompose_open(w: &[Letter]) -> Result<(Word, Word)> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    if is_closed(w)? {
        return Err(Error::ClosedWord);
    }
    let profile = PrefixSuffixProfile::new(w)?;
    for &i in &profile.closed_prefixes {
        if profile.closed_suffixes.contains(&(i + 1)) {
            return Ok((w[..i].to_vec(), w[i..].to_vec()));
        }
    }
    Err(Error::NoDecomposition {
        closed_prefixes: profile.closed_prefixes.len(),
        open_suffixes: profile.open_suffixes().len(),
    })
}
