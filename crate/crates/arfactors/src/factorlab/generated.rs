//! Operations against the infinite word a directive generates: the
//! saturation-guarded factor oracle, the brute-force closed census, the
//! doubling-stabilization guard for words of unknown complexity, and the
//! classification of closed factors by level and type.

use crate::arformula::ReturnTable;
use crate::error::{Error, Result};
use crate::factorlab::{complete_first_returns, is_closed, is_factor_of, longest_border, occurrences};
use crate::wordgen::{palindromic_closure, DirectiveSpec};
use crate::words::{Letter, Word};
use std::collections::{BTreeSet, HashSet};

/// Default cap on generated prefix length for saturation attempts.
pub const DEFAULT_PREFIX_BUDGET: usize = 10_000_000;

/// A growing characteristic prefix with the exact-complexity saturation
/// guard: once the prefix holds `(t−1)n + 1` distinct length-`n` windows,
/// its length-`n` factor set is the factor set of the infinite word.
pub struct ArFactorOracle {
    directive: DirectiveSpec,
    budget: usize,
    prefix: Word,
    level: usize,
    saturated_upto: usize,
}

impl ArFactorOracle {
    pub fn new(directive: &DirectiveSpec, budget: usize) -> Result<Self> {
        if !directive.is_ar_usable() {
            return Err(Error::NotArValid);
        }
        Ok(ArFactorOracle {
            directive: directive.clone(),
            budget,
            prefix: Word::new(),
            level: 0,
            saturated_upto: 0,
        })
    }

    pub fn prefix(&self) -> &[Letter] {
        &self.prefix
    }

    pub fn level(&self) -> usize {
        self.level
    }

    fn target_count(&self, n: usize) -> usize {
        (self.directive.alphabet().size() - 1) * n + 1
    }

    fn distinct_count(&self, n: usize) -> usize {
        if n == 0 || n > self.prefix.len() {
            return 0;
        }
        let set: HashSet<&[Letter]> = self.prefix.windows(n).collect();
        set.len()
    }

    /// Advances the generation by one bispecial level.
    fn grow(&mut self) -> Result<()> {
        if self.prefix.len() >= self.budget {
            return Err(Error::BudgetExhausted { budget: self.budget });
        }
        let next = self.level + 1;
        let a = self
            .directive
            .letter(next)
            .ok_or(Error::DirectiveExhausted { level: next })?;
        self.prefix.push(a);
        self.prefix = palindromic_closure(&self.prefix)?;
        self.level = next;
        Ok(())
    }

    /// Extends the prefix to at least `len` symbols (budget permitting).
    pub fn extend_to(&mut self, len: usize) -> Result<()> {
        while self.prefix.len() < len {
            self.grow()?;
        }
        Ok(())
    }

    /// Grows until the length-`n` factor set is certified complete.
    pub fn ensure_saturated(&mut self, n: usize) -> Result<()> {
        assert!(n >= 1);
        if self.saturated_upto >= n {
            return Ok(());
        }
        let target = self.target_count(n);
        loop {
            let count = self.distinct_count(n);
            assert!(count <= target, "factor count exceeds the AR complexity bound");
            if count == target {
                self.saturated_upto = n;
                return Ok(());
            }
            self.grow()?;
        }
    }

    /// Largest `n ≤ limit` whose factor set is complete in the current
    /// prefix. Completeness is downward closed, so this is a threshold.
    pub fn max_saturated(&self, limit: usize) -> usize {
        let saturated = |n: usize| self.distinct_count(n) == self.target_count(n);
        if limit == 0 || !saturated(1) {
            return 0;
        }
        let (mut lo, mut hi) = (1, limit);
        while lo < hi {
            let mid = (lo + hi + 1) / 2;
            if saturated(mid) {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        lo
    }

    /// The complete set of length-`n` factors of the infinite word.
    pub fn factor_set(&mut self, n: usize) -> Result<BTreeSet<Word>> {
        self.ensure_saturated(n)?;
        Ok(self.prefix.windows(n).map(|w| w.to_vec()).collect())
    }

    /// Membership in the factor set of the infinite word.
    pub fn is_factor(&mut self, w: &[Letter]) -> Result<bool> {
        if w.is_empty() {
            return Ok(true);
        }
        self.ensure_saturated(w.len())?;
        Ok(is_factor_of(w, &self.prefix))
    }
}

/// One census row: counts of closed and open factors at one length.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CensusRow {
    pub n: usize,
    /// Observed factor count (`(t−1)n + 1` whenever `complete`).
    pub p: u64,
    pub f_closed: u64,
    pub f_open: u64,
    pub complete: bool,
}

/// Brute-force closed/open counts per length.
#[derive(Clone, Debug)]
pub struct FactorCensus {
    pub rows: Vec<CensusRow>,
    /// Set when some lengths could not be certified complete.
    pub warning: Option<String>,
}

impl FactorCensus {
    pub fn row(&self, n: usize) -> &CensusRow {
        &self.rows[n - 1]
    }

    pub fn all_complete(&self) -> bool {
        self.rows.iter().all(|r| r.complete)
    }
}

fn census_row(n: usize, factors: &BTreeSet<Word>, complete: bool) -> CensusRow {
    let mut f_closed = 0u64;
    for factor in factors {
        if is_closed(factor).expect("census factors are non-empty") {
            f_closed += 1;
        }
    }
    let p = factors.len() as u64;
    CensusRow { n, p, f_closed, f_open: p - f_closed, complete }
}

/// Enumerates and classifies every factor of the generated word up to
/// `n_max`. Lengths whose factor set cannot be certified complete within
/// the budget are flagged `complete = false` and a warning is attached.
pub fn closed_census(d: &DirectiveSpec, n_max: usize, budget: usize) -> Result<FactorCensus> {
    assert!(n_max >= 1);
    let mut oracle = ArFactorOracle::new(d, budget)?;
    let (complete_to, warning) = match oracle.ensure_saturated(n_max) {
        Ok(()) => (n_max, None),
        Err(e @ (Error::BudgetExhausted { .. } | Error::DirectiveExhausted { .. })) => {
            (oracle.max_saturated(n_max), Some(e.to_string()))
        }
        Err(e) => return Err(e),
    };

    let mut rows = Vec::with_capacity(n_max);
    if complete_to >= 1 {
        // Walk downward from the widest complete set: every shorter factor
        // of the infinite word is a prefix of a longer one, so truncation
        // preserves completeness.
        let mut sets: Vec<BTreeSet<Word>> = Vec::with_capacity(complete_to);
        let top: BTreeSet<Word> =
            oracle.prefix().windows(complete_to).map(|w| w.to_vec()).collect();
        sets.push(top);
        for n in (1..complete_to).rev() {
            let shorter: BTreeSet<Word> =
                sets.last().unwrap().iter().map(|w| w[..n].to_vec()).collect();
            sets.push(shorter);
        }
        sets.reverse();
        for (i, set) in sets.iter().enumerate() {
            rows.push(census_row(i + 1, set, true));
        }
    }
    for n in complete_to + 1..=n_max {
        let set: BTreeSet<Word> = if n <= oracle.prefix().len() {
            oracle.prefix().windows(n).map(|w| w.to_vec()).collect()
        } else {
            BTreeSet::new()
        };
        rows.push(census_row(n, &set, false));
    }
    Ok(FactorCensus { rows, warning })
}

/// A closed factor of a generated word, resolved against its directive:
/// the frontier, its level `φ(fr(u))`, and the type letter.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClosedAnalysis {
    pub word: Word,
    /// ε for single letters.
    pub frontier: Word,
    /// `φ(frontier)`.
    pub level: usize,
    pub type_letter: Letter,
    /// `|u| − |fr(u)|`, which equals the return length `p_a^(k)`.
    pub return_length: u64,
}

/// Resolves a closed factor `u` of the word generated by `d` into its
/// frontier, level and type; the identity `|u| − |fr(u)| = p_a^(k)` is
/// checked against the return table.
pub fn classify_closed(u: &[Letter], d: &DirectiveSpec, budget: usize) -> Result<ClosedAnalysis> {
    if u.is_empty() {
        return Err(Error::EpsilonNotClassifiable);
    }
    if !is_closed(u)? {
        return Err(Error::OpenWord);
    }
    let mut oracle = ArFactorOracle::new(d, budget)?;
    if !oracle.is_factor(u)? {
        return Err(Error::NotAFactor);
    }
    if u.len() == 1 {
        return Ok(ClosedAnalysis {
            word: u.to_vec(),
            frontier: Word::new(),
            level: 0,
            type_letter: u[0],
            return_length: 1,
        });
    }

    let border = longest_border(u)?;
    debug_assert!(!border.is_empty(), "closed words of length ≥ 2 are bordered");

    // φ(frontier): grow the bispecial prefixes until the frontier appears.
    let mut bispecial = Word::new();
    let mut level = 0;
    loop {
        level += 1;
        let a = d.letter(level).ok_or(Error::DirectiveExhausted { level })?;
        bispecial.push(a);
        bispecial = palindromic_closure(&bispecial)?;
        if is_factor_of(&border, &bispecial) {
            break;
        }
        if bispecial.len() > budget {
            return Err(Error::BudgetExhausted { budget });
        }
    }

    let occ = occurrences(&border, &bispecial);
    assert_eq!(occ.len(), 1, "frontier must be uni-occurrent in its first bispecial");
    let pos = occ[0];
    let mut surrounded: Word = bispecial[..pos].to_vec();
    surrounded.extend_from_slice(u);
    surrounded.extend_from_slice(&bispecial[pos + border.len()..]);
    // u₁·u·u₂ is the complete first return to B_k that determines the type.
    assert!(surrounded.len() > bispecial.len());
    assert_eq!(&surrounded[..bispecial.len()], &bispecial[..]);
    assert_eq!(&surrounded[surrounded.len() - bispecial.len()..], &bispecial[..]);
    assert_eq!(occurrences(&bispecial, &surrounded).len(), 2);
    let type_letter = surrounded[bispecial.len()];
    let return_length = (u.len() - border.len()) as u64;

    let mut rt = ReturnTable::new(d)?;
    rt.ensure_level(level)?;
    assert_eq!(return_length, rt.p(level, type_letter), "length gap must equal the return length");

    Ok(ClosedAnalysis { word: u.to_vec(), frontier: border, level, type_letter, return_length })
}

/// The distinct complete first returns to `v` in the generated word,
/// collected with a doubling guard: the set must survive one doubling of
/// the host prefix unchanged.
pub fn complete_first_returns_in_word(
    d: &DirectiveSpec,
    v: &[Letter],
    budget: usize,
) -> Result<BTreeSet<Word>> {
    if v.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut oracle = ArFactorOracle::new(d, budget)?;
    if !oracle.is_factor(v)? {
        return Err(Error::NotAFactor);
    }
    let mut previous: Option<BTreeSet<Word>> = None;
    loop {
        let current = complete_first_returns(v, oracle.prefix())?;
        if !current.is_empty() {
            if let Some(prev) = &previous {
                if *prev == current {
                    return Ok(current);
                }
            }
        }
        previous = Some(current);
        oracle.extend_to(oracle.prefix().len().max(v.len()) * 2)?;
    }
}

/// A factor set gathered under the doubling-stabilization guard, for
/// infinite words whose complexity is not known in advance.
#[derive(Clone, Debug)]
pub struct StabilizedFactors {
    pub factors: BTreeSet<Word>,
    /// True when the set was identical for two consecutive doublings.
    pub stabilized: bool,
    pub prefix_len: usize,
}

/// Length-`n` factor set of the infinite word produced by `prefix_of`,
/// accepted once it is unchanged across a doubling of the prefix.
pub fn stabilized_factor_set(
    mut prefix_of: impl FnMut(usize) -> Word,
    n: usize,
    budget: usize,
) -> StabilizedFactors {
    assert!(n >= 1);
    let window_set = |w: &Word| -> BTreeSet<Word> {
        if n > w.len() {
            BTreeSet::new()
        } else {
            w.windows(n).map(|x| x.to_vec()).collect()
        }
    };
    if budget < n {
        return StabilizedFactors { factors: BTreeSet::new(), stabilized: false, prefix_len: 0 };
    }
    let mut len = (4 * n).max(64).min(budget);
    let mut current = window_set(&prefix_of(len));
    loop {
        if len >= budget || len * 2 > budget {
            return StabilizedFactors { factors: current, stabilized: false, prefix_len: len };
        }
        let next_len = len * 2;
        let next = window_set(&prefix_of(next_len));
        if next == current {
            return StabilizedFactors { factors: next, stabilized: true, prefix_len: next_len };
        }
        len = next_len;
        current = next;
    }
}

/// Per-length closed counts of a stabilization-guarded word.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct StabilizedRow {
    pub n: usize,
    pub p: u64,
    pub f_closed: u64,
    pub f_open: u64,
    pub stabilized: bool,
}

/// Closed/open counts for every length up to `n_max` of the word produced
/// by `prefix_of`. When the top length stabilizes, the shorter factor
/// sets are derived by truncation; otherwise each length is guarded on
/// its own with whatever budget allows.
pub fn stabilized_closed_profile(
    mut prefix_of: impl FnMut(usize) -> Word,
    n_max: usize,
    budget: usize,
) -> Vec<StabilizedRow> {
    assert!(n_max >= 1);
    let top = stabilized_factor_set(&mut prefix_of, n_max, budget);
    let row = |n: usize, set: &BTreeSet<Word>, stabilized: bool| {
        let census = census_row(n, set, stabilized);
        StabilizedRow {
            n,
            p: census.p,
            f_closed: census.f_closed,
            f_open: census.f_open,
            stabilized,
        }
    };
    if top.stabilized {
        let mut rows = Vec::with_capacity(n_max);
        let mut set = top.factors;
        rows.push(row(n_max, &set, true));
        for n in (1..n_max).rev() {
            set = set.iter().map(|w| w[..n].to_vec()).collect();
            rows.push(row(n, &set, true));
        }
        rows.reverse();
        rows
    } else {
        (1..=n_max)
            .map(|n| {
                let guarded = stabilized_factor_set(&mut prefix_of, n, budget);
                row(n, &guarded.factors, guarded.stabilized)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wordgen::{paperfolding_morphism, sturmian_directive_from_cf, DirectiveSpec};
    use crate::words::Alphabet;

    fn w(s: &str) -> Word {
        Alphabet::quaternary().word(s).unwrap()
    }

    #[test]
    fn fibonacci_census_matches_reference_table() {
        let census = closed_census(&DirectiveSpec::fibonacci(), 15, DEFAULT_PREFIX_BUDGET).unwrap();
        let closed: Vec<u64> = census.rows.iter().map(|r| r.f_closed).collect();
        assert_eq!(closed, vec![2, 1, 2, 3, 4, 3, 4, 5, 6, 5, 6, 7, 8, 9, 10]);
        assert!(census.all_complete());
        assert!(census.warning.is_none());
        for row in &census.rows {
            assert_eq!(row.p, row.n as u64 + 1, "Sturmian complexity at {}", row.n);
            assert_eq!(row.p, row.f_closed + row.f_open);
        }
    }

    #[test]
    fn small_census_values() {
        let trib = closed_census(&DirectiveSpec::tribonacci(), 2, DEFAULT_PREFIX_BUDGET).unwrap();
        assert_eq!(trib.row(1).f_closed, 3);
        assert_eq!(trib.row(2).f_closed, 1);
        assert_eq!(trib.row(2).p, 5);

        let fib = closed_census(&DirectiveSpec::fibonacci(), 1, DEFAULT_PREFIX_BUDGET).unwrap();
        assert_eq!(fib.row(1).f_closed, 2);
        assert_eq!(fib.row(1).f_open, 0);
    }

    #[test]
    fn budget_exhaustion_is_flagged_not_fatal() {
        let census = closed_census(&DirectiveSpec::fibonacci(), 40, 30).unwrap();
        assert!(census.warning.is_some());
        assert!(!census.all_complete());
        // the certified prefix of lengths is still correct
        for row in census.rows.iter().take_while(|r| r.complete) {
            assert_eq!(row.p, row.n as u64 + 1);
        }
        assert!(census.rows.iter().any(|r| !r.complete));
    }

    #[test]
    fn truncated_directive_census_is_partial_but_honest() {
        let d = sturmian_directive_from_cf(&[2, 1]).unwrap();
        let census = closed_census(&d, 30, DEFAULT_PREFIX_BUDGET).unwrap();
        assert!(census.warning.is_some());
        assert!(census.rows.iter().any(|r| !r.complete));
    }

    #[test]
    fn oracle_saturation_and_membership() {
        let mut oracle = ArFactorOracle::new(&DirectiveSpec::fibonacci(), DEFAULT_PREFIX_BUDGET).unwrap();
        let set = oracle.factor_set(4).unwrap();
        assert_eq!(set.len(), 5);
        assert!(oracle.is_factor(&w("abaab")).unwrap());
        assert!(!oracle.is_factor(&w("bb")).unwrap());
        assert!(oracle.is_factor(&[]).unwrap());
    }

    #[test]
    fn classify_closed_examples() {
        let fib = DirectiveSpec::fibonacci();
        let al = Alphabet::binary();

        let a = classify_closed(&w("a"), &fib, DEFAULT_PREFIX_BUDGET).unwrap();
        assert_eq!(a.level, 0);
        assert_eq!(a.frontier, Word::new());
        assert_eq!(a.type_letter, al.letter_of('a').unwrap());
        assert_eq!(a.return_length, 1);

        let abaaba = classify_closed(&w("abaaba"), &fib, DEFAULT_PREFIX_BUDGET).unwrap();
        assert_eq!(abaaba.frontier, w("aba"));
        assert_eq!(abaaba.level, 2);
        assert_eq!(abaaba.type_letter, al.letter_of('a').unwrap());
        assert_eq!(abaaba.return_length, 3);

        let aa = classify_closed(&w("aa"), &fib, DEFAULT_PREFIX_BUDGET).unwrap();
        assert_eq!(aa.frontier, w("a"));
        assert_eq!(aa.level, 1);
        assert_eq!(aa.return_length, 1);

        assert_eq!(
            classify_closed(&w("ab"), &fib, DEFAULT_PREFIX_BUDGET).unwrap_err(),
            Error::OpenWord
        );
        assert_eq!(
            classify_closed(&w("bb"), &fib, DEFAULT_PREFIX_BUDGET).unwrap_err(),
            Error::NotAFactor
        );
    }

    #[test]
    fn returns_in_fibonacci() {
        let fib = DirectiveSpec::fibonacci();
        let got = complete_first_returns_in_word(&fib, &w("aba"), DEFAULT_PREFIX_BUDGET).unwrap();
        let expect: BTreeSet<Word> = [w("abaaba"), w("ababa")].into_iter().collect();
        assert_eq!(got, expect);

        let got = complete_first_returns_in_word(&fib, &w("a"), DEFAULT_PREFIX_BUDGET).unwrap();
        assert_eq!(got.len(), 2);
    }

    #[test]
    fn stabilization_guard_on_the_morphic_word() {
        let m = paperfolding_morphism();
        let prefix_of = |len: usize| m.fixed_point_prefix(Letter(0), len);
        let guarded = stabilized_factor_set(prefix_of, 2, DEFAULT_PREFIX_BUDGET);
        assert!(guarded.stabilized);
        // letters alternate {a,b}/{c,d}, so no length-2 factor repeats a letter
        for f in &guarded.factors {
            assert_ne!(f[0], f[1]);
        }

        let starved = stabilized_factor_set(|len| m.fixed_point_prefix(Letter(0), len), 64, 100);
        assert!(!starved.stabilized);
    }

    #[test]
    fn stabilized_profile_flags_lengths() {
        let m = paperfolding_morphism();
        let rows =
            stabilized_closed_profile(|len| m.fixed_point_prefix(Letter(0), len), 8, DEFAULT_PREFIX_BUDGET);
        assert_eq!(rows.len(), 8);
        assert!(rows.iter().all(|r| r.stabilized));
        assert_eq!(rows[0].f_open, 0, "single letters are closed");
        assert_eq!(rows[1].f_closed, 0, "length-2 factors are all open");
        assert_eq!(rows[3].f_closed, 0, "length-4 factors are all open");
        assert_eq!(rows[7].f_closed, 0, "length-8 factors are all open");
    }
}
