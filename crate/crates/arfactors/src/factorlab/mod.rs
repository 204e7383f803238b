//! Intrinsic word predicates: borders, the open/closed dichotomy,
//! complete first returns, special factors, palindromic richness, and the
//! level-index machinery over bispecial prefixes.

mod generated;

pub use generated::{
    classify_closed, closed_census, complete_first_returns_in_word, stabilized_closed_profile,
    stabilized_factor_set, ArFactorOracle, CensusRow, ClosedAnalysis, FactorCensus,
    StabilizedFactors, StabilizedRow, DEFAULT_PREFIX_BUDGET,
};

use crate::error::{Error, Result};
use crate::palindromes::{distinct_palindromic_factors, Manacher};
use crate::wordgen::longest_palindromic_suffix;
use crate::words::{Letter, Word};
use std::collections::BTreeSet;
use std::collections::HashMap;

/// Knuth-Morris-Pratt failure table: `pi[i]` is the length of the longest
/// proper border of `w[..=i]`.
pub fn prefix_function(w: &[Letter]) -> Vec<usize> {
    let mut pi = vec![0usize; w.len()];
    for i in 1..w.len() {
        let mut j = pi[i - 1];
        while j > 0 && w[i] != w[j] {
            j = pi[j - 1];
        }
        if w[i] == w[j] {
            j += 1;
        }
        pi[i] = j;
    }
    pi
}

/// Number of occurrences in `w` of each of its prefixes; entry `l - 1`
/// counts the prefix of length `l`.
pub fn prefix_occurrence_counts(w: &[Letter]) -> Vec<u64> {
    let n = w.len();
    let pi = prefix_function(w);
    let mut counts = vec![0u64; n + 1];
    for i in 0..n {
        counts[pi[i]] += 1;
    }
    for l in (1..n).rev() {
        counts[pi[l - 1]] += counts[l];
    }
    (1..=n).map(|l| counts[l] + 1).collect()
}

/// Start positions of every occurrence of `needle` in `hay`.
pub fn occurrences(needle: &[Letter], hay: &[Letter]) -> Vec<usize> {
    let m = needle.len();
    let mut out = Vec::new();
    if m == 0 || m > hay.len() {
        return out;
    }
    let pi = prefix_function(needle);
    let mut q = 0;
    for (i, &c) in hay.iter().enumerate() {
        while q > 0 && needle[q] != c {
            q = pi[q - 1];
        }
        if needle[q] == c {
            q += 1;
        }
        if q == m {
            out.push(i + 1 - m);
            q = pi[m - 1];
        }
    }
    out
}

/// Whether `needle` occurs in `hay`; the empty word is a factor of
/// everything.
pub fn is_factor_of(needle: &[Letter], hay: &[Letter]) -> bool {
    needle.is_empty() || !occurrences(needle, hay).is_empty()
}

/// The longest proper prefix of `w` that is also a suffix; ε when `w` is
/// unbordered.
pub fn longest_border(w: &[Letter]) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let pi = prefix_function(w);
    Ok(w[..pi[w.len() - 1]].to_vec())
}

/// A word is closed when it is a single letter or its longest border
/// occurs in it exactly twice (as prefix and as suffix).
pub fn is_closed(w: &[Letter]) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EpsilonNotClassifiable);
    }
    if w.len() == 1 {
        return Ok(true);
    }
    let pi = prefix_function(w);
    let border = pi[w.len() - 1];
    if border == 0 {
        return Ok(false);
    }
    Ok(prefix_occurrence_counts(w)[border - 1] == 2)
}

/// The longest border of a closed word; ε for single letters. Open words
/// are rejected.
pub fn frontier(w: &[Letter]) -> Result<Word> {
    if !is_closed(w)? {
        return Err(Error::OpenWord);
    }
    if w.len() == 1 {
        return Ok(Word::new());
    }
    longest_border(w)
}

/// The words spanned by consecutive occurrences of `v` in `host`; each
/// contains exactly two occurrences of `v`, one as prefix and one as
/// suffix. Fewer than two occurrences give the empty set.
pub fn complete_first_returns(v: &[Letter], host: &[Letter]) -> Result<BTreeSet<Word>> {
    if v.is_empty() {
        return Err(Error::EmptyWord);
    }
    let occ = occurrences(v, host);
    let mut out = BTreeSet::new();
    for pair in occ.windows(2) {
        let span = host[pair[0]..pair[1] + v.len()].to_vec();
        debug_assert_eq!(occurrences(v, &span).len(), 2);
        out.insert(span);
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// All factors of `host` (including ε) that extend on the given side by
/// at least two distinct letters, in lexicographic order.
pub fn special_factors(host: &[Letter], side: Side) -> BTreeSet<Word> {
    let n = host.len();
    let mut out = BTreeSet::new();
    let distinct: BTreeSet<Letter> = host.iter().copied().collect();
    if distinct.len() >= 2 {
        out.insert(Word::new());
    }
    for len in 1..n {
        let mut extensions: HashMap<&[Letter], BTreeSet<Letter>> = HashMap::new();
        match side {
            Side::Left => {
                for i in 1..=n - len {
                    extensions.entry(&host[i..i + len]).or_default().insert(host[i - 1]);
                }
            }
            Side::Right => {
                for i in 0..n - len {
                    extensions.entry(&host[i..i + len]).or_default().insert(host[i + len]);
                }
            }
        }
        for (factor, exts) in extensions {
            if exts.len() >= 2 {
                out.insert(factor.to_vec());
            }
        }
    }
    out
}

/// Richness by count: `w` has the maximal number `|w| + 1` of distinct
/// palindromic factors (ε included).
pub fn is_rich(w: &[Letter]) -> bool {
    distinct_palindromic_factors(w) == w.len()
}

/// Richness by the uni-occurrence characterization: the longest
/// palindromic suffix of every prefix occurs in that prefix exactly once.
///
/// Equivalent to [`is_rich`]; implemented independently so the two can be
/// played against each other.
pub fn is_rich_by_uni_occurrence(w: &[Letter]) -> bool {
    if w.is_empty() {
        return true;
    }
    let manacher = Manacher::new(w);
    let suffix_lens = manacher.longest_palindromic_suffixes();
    for j in 0..w.len() {
        let suffix = &w[j + 1 - suffix_lens[j]..=j];
        if occurrences(suffix, &w[..=j]).len() != 1 {
            return false;
        }
    }
    true
}

/// The level index φ: the least `k` with `v` a factor of `B_k`;
/// `φ(ε) = 0`.
pub fn phi_index(v: &[Letter], bispecials: &[Word]) -> Result<usize> {
    if v.is_empty() {
        return Ok(0);
    }
    bispecials
        .iter()
        .position(|b| is_factor_of(v, b))
        .ok_or(Error::InsufficientHorizon)
}

/// `S_k`, the longest palindromic suffix of `B_{k-1}·a_k`, recovered from
/// consecutive bispecial prefixes.
pub fn level_palindromic_suffix(bispecials: &[Word], k: usize) -> Result<Word> {
    if k == 0 || k >= bispecials.len() {
        return Err(Error::InsufficientHorizon);
    }
    let prev = &bispecials[k - 1];
    let cur = &bispecials[k];
    let mut stem = prev.clone();
    stem.push(cur[prev.len()]);
    longest_palindromic_suffix(&stem)
}

/// The fiber `φ⁻¹(k)`: all factors of `B_k` containing `S_k`. Every
/// member is uni-occurrent in `B_k`, which makes the windows around the
/// single occurrence of `S_k` pairwise distinct.
pub fn phi_fiber(k: usize, bispecials: &[Word]) -> Result<BTreeSet<Word>> {
    let (position, suffix_len, word) = fiber_anchor(k, bispecials)?;
    let mut out = BTreeSet::new();
    for start in 0..=position {
        for end in position + suffix_len..=word.len() {
            out.insert(word[start..end].to_vec());
        }
    }
    Ok(out)
}

/// Counting view of the fiber: how many members have each length.
#[derive(Clone, Debug)]
pub struct FiberProfile {
    pub level: usize,
    /// `S_k`.
    pub suffix: Word,
    /// Start of the unique occurrence of `S_k` in `B_k`.
    pub position: usize,
    /// `(m, count)` for every member length `m`, ascending.
    pub counts: Vec<(u64, u64)>,
    pub total: u64,
}

pub fn phi_fiber_profile(k: usize, bispecials: &[Word]) -> Result<FiberProfile> {
    let (position, suffix_len, word) = fiber_anchor(k, bispecials)?;
    let b = word.len();
    let mut counts = Vec::new();
    let mut total = 0u64;
    for m in suffix_len..=b {
        let start_lo = (position + suffix_len).saturating_sub(m);
        let start_hi = position.min(b - m);
        assert!(start_lo <= start_hi, "empty window range inside the fiber length interval");
        let count = (start_hi + 1 - start_lo) as u64;
        total += count;
        counts.push((m as u64, count));
    }
    Ok(FiberProfile {
        level: k,
        suffix: word[position..position + suffix_len].to_vec(),
        position,
        counts,
        total,
    })
}

fn fiber_anchor<'a>(k: usize, bispecials: &'a [Word]) -> Result<(usize, usize, &'a Word)> {
    let suffix = level_palindromic_suffix(bispecials, k)?;
    let word = &bispecials[k];
    let occ = occurrences(&suffix, word);
    assert_eq!(occ.len(), 1, "level suffix must be uni-occurrent in its bispecial");
    Ok((occ[0], suffix.len(), word))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wordgen::{bispecial_prefixes, corpus_word, CorpusWord, DirectiveSpec};
    use crate::words::Alphabet;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        Alphabet::quaternary().word(s).unwrap()
    }

    fn render(word: &[Letter]) -> String {
        Alphabet::quaternary().render(word)
    }

    #[test]
    fn border_examples() {
        assert_eq!(longest_border(&w("aabaaabaa")).unwrap(), w("aabaa"));
        assert_eq!(longest_border(&w("ab")).unwrap(), Word::new());
        assert_eq!(longest_border(&w("aa")).unwrap(), w("a"));
        assert_eq!(longest_border(&[]).unwrap_err(), Error::EmptyWord);
    }

    #[test]
    fn closed_examples() {
        assert!(is_closed(&w("aabaaabaa")).unwrap());
        assert!(!is_closed(&w("abaabbababbaaba")).unwrap());
        assert!(is_closed(&w("b")).unwrap());
        assert!(!is_closed(&w("ab")).unwrap());
        assert_eq!(is_closed(&[]).unwrap_err(), Error::EpsilonNotClassifiable);
    }

    #[test]
    fn frontier_examples() {
        assert_eq!(frontier(&w("aabaaabaa")).unwrap(), w("aabaa"));
        assert_eq!(frontier(&w("a")).unwrap(), Word::new());
        assert_eq!(frontier(&w("abaab")).unwrap(), w("ab"));
        assert_eq!(frontier(&w("ab")).unwrap_err(), Error::OpenWord);
    }

    #[test]
    fn return_examples() {
        let host = w("abaababa");
        let got = complete_first_returns(&w("a"), &host).unwrap();
        let expect: BTreeSet<Word> = [w("aa"), w("aba")].into_iter().collect();
        assert_eq!(got, expect);

        let (_, fib) = corpus_word(CorpusWord::Fibonacci, 17).unwrap();
        let got = complete_first_returns(&w("aba"), &fib).unwrap();
        let expect: BTreeSet<Word> = [w("abaaba"), w("ababa")].into_iter().collect();
        assert_eq!(got, expect);

        assert!(complete_first_returns(&w("ab"), &w("ab")).unwrap().is_empty());
        assert!(complete_first_returns(&[], &host).is_err());
    }

    #[test]
    fn richness_examples() {
        assert!(is_rich(&w("abaaba")));
        assert!(is_rich(&[]));
        assert!(!is_rich(&w("abcabc")));
        assert!(is_rich_by_uni_occurrence(&w("abaaba")));
        assert!(!is_rich_by_uni_occurrence(&w("abcabc")));
    }

    #[test]
    fn special_factor_examples() {
        let aab = w("aab");
        let left = special_factors(&aab, Side::Left);
        assert_eq!(left, [Word::new()].into_iter().collect());

        let right = special_factors(&aab, Side::Right);
        let expect: BTreeSet<Word> = [Word::new(), w("a")].into_iter().collect();
        assert_eq!(right, expect);

        assert!(special_factors(&w("aaaa"), Side::Left).is_empty());
    }

    #[test]
    fn phi_examples() {
        let bs = bispecial_prefixes(&DirectiveSpec::fibonacci(), 6).unwrap();
        assert_eq!(phi_index(&[], &bs).unwrap(), 0);
        assert_eq!(phi_index(&w("b"), &bs).unwrap(), 2);
        assert_eq!(phi_index(&w("aa"), &bs).unwrap(), 3);
        assert_eq!(phi_index(&w("bb"), &bs).unwrap_err(), Error::InsufficientHorizon);
    }

    #[test]
    fn fiber_examples() {
        let bs = bispecial_prefixes(&DirectiveSpec::fibonacci(), 6).unwrap();

        let f1 = phi_fiber(1, &bs).unwrap();
        assert_eq!(f1, [w("a")].into_iter().collect());

        let f2 = phi_fiber(2, &bs).unwrap();
        let expect: BTreeSet<Word> =
            [w("b"), w("ab"), w("ba"), w("aba")].into_iter().collect();
        assert_eq!(f2, expect);

        let f3 = phi_fiber(3, &bs).unwrap();
        assert_eq!(f3.len(), 9);

        // members are uni-occurrent factors of B_k containing S_k
        let s3 = level_palindromic_suffix(&bs, 3).unwrap();
        assert_eq!(render(&s3), "aa");
        for member in &f3 {
            assert_eq!(occurrences(member, &bs[3]).len(), 1);
            assert!(is_factor_of(&s3, member));
        }
    }

    #[test]
    fn fiber_profile_matches_materialized_fiber() {
        for d in [DirectiveSpec::fibonacci(), DirectiveSpec::tribonacci()] {
            let bs = bispecial_prefixes(&d, 7).unwrap();
            for k in 1..=7 {
                let fiber = phi_fiber(k, &bs).unwrap();
                let profile = phi_fiber_profile(k, &bs).unwrap();
                assert_eq!(profile.total as usize, fiber.len());
                for &(m, count) in &profile.counts {
                    let actual = fiber.iter().filter(|v| v.len() as u64 == m).count() as u64;
                    assert_eq!(actual, count, "level {k} length {m}");
                }
            }
        }
    }

    #[test]
    fn level_suffix_of_first_levels() {
        let bs = bispecial_prefixes(&DirectiveSpec::fibonacci(), 4).unwrap();
        assert_eq!(render(&level_palindromic_suffix(&bs, 1).unwrap()), "a");
        assert_eq!(render(&level_palindromic_suffix(&bs, 2).unwrap()), "b");
        assert_eq!(render(&level_palindromic_suffix(&bs, 3).unwrap()), "aa");
        assert!(level_palindromic_suffix(&bs, 0).is_err());
        assert!(level_palindromic_suffix(&bs, 5).is_err());
    }

    fn naive_occurrences(needle: &[Letter], hay: &[Letter]) -> Vec<usize> {
        if needle.is_empty() || needle.len() > hay.len() {
            return vec![];
        }
        (0..=hay.len() - needle.len()).filter(|&i| &hay[i..i + needle.len()] == needle).collect()
    }

    /// Closed per the first-return definition: some proper non-empty
    /// border occurs exactly twice.
    fn brute_is_closed(word: &[Letter]) -> bool {
        if word.len() == 1 {
            return true;
        }
        for l in 1..word.len() {
            let v = &word[..l];
            if word.ends_with(v) && naive_occurrences(v, word).len() == 2 {
                return true;
            }
        }
        false
    }

    proptest! {
        #[test]
        fn occurrences_match_naive(
            needle in proptest::collection::vec(0u8..2, 1..6),
            hay in proptest::collection::vec(0u8..2, 0..50),
        ) {
            let needle: Word = needle.iter().map(|&x| Letter(x)).collect();
            let hay: Word = hay.iter().map(|&x| Letter(x)).collect();
            prop_assert_eq!(occurrences(&needle, &hay), naive_occurrences(&needle, &hay));
        }

        #[test]
        fn prefix_counts_match_naive(s in proptest::collection::vec(0u8..2, 1..40)) {
            let word: Word = s.iter().map(|&x| Letter(x)).collect();
            let counts = prefix_occurrence_counts(&word);
            for l in 1..=word.len() {
                let naive = naive_occurrences(&word[..l], &word).len() as u64;
                prop_assert_eq!(counts[l - 1], naive, "prefix length {}", l);
            }
        }

        #[test]
        fn closed_agrees_with_first_return_definition(s in proptest::collection::vec(0u8..3, 1..30)) {
            let word: Word = s.iter().map(|&x| Letter(x)).collect();
            prop_assert_eq!(is_closed(&word).unwrap(), brute_is_closed(&word));
        }

        #[test]
        fn closedness_is_reversal_invariant(s in proptest::collection::vec(0u8..2, 1..40)) {
            let word: Word = s.iter().map(|&x| Letter(x)).collect();
            let back: Word = word.iter().rev().copied().collect();
            prop_assert_eq!(is_closed(&word).unwrap(), is_closed(&back).unwrap());
        }

        #[test]
        fn richness_criteria_agree(s in proptest::collection::vec(0u8..3, 0..40)) {
            let word: Word = s.iter().map(|&x| Letter(x)).collect();
            prop_assert_eq!(is_rich(&word), is_rich_by_uni_occurrence(&word));
        }
    }
}
