//! Generation of Arnoux-Rauzy / episturmian prefixes from directive
//! sequences by iterated palindromic closure, plus the named corpus words
//! and the continued-fraction route into Sturmian directives.

use crate::error::{Error, Result};
use crate::palindromes::Manacher;
use crate::words::{reversed, Alphabet, Letter, Word};
use std::collections::BTreeSet;

/// How a directive relates to the Arnoux-Rauzy requirements.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DirectiveClass {
    /// Eventually periodic, at least two letters, every letter recurs.
    ArValid,
    /// A finite block (typically cut from a continued fraction); usable for
    /// AR computations up to the depth it determines.
    TruncatedBlock,
    /// Episturmian but not Arnoux-Rauzy: some letter stops recurring, or
    /// the alphabet is unary.
    NotAr,
}

/// An eventually periodic (or explicitly truncated) directive sequence
/// `(a_k)` together with its alphabet.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DirectiveSpec {
    alphabet: Alphabet,
    preperiod: Word,
    period: Word,
}

impl DirectiveSpec {
    /// An eventually periodic directive `preperiod · period · period · …`.
    pub fn new(alphabet: Alphabet, preperiod: Word, period: Word) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::InvalidDirective("empty period".into()));
        }
        Self::check_letters(&alphabet, preperiod.iter().chain(period.iter()))?;
        Ok(DirectiveSpec { alphabet, preperiod, period })
    }

    /// A finite directive block with no periodic continuation.
    pub fn finite(alphabet: Alphabet, block: Word) -> Result<Self> {
        Self::check_letters(&alphabet, block.iter())?;
        Ok(DirectiveSpec { alphabet, preperiod: block, period: Word::new() })
    }

    fn check_letters<'a>(alphabet: &Alphabet, letters: impl Iterator<Item = &'a Letter>) -> Result<()> {
        for &l in letters {
            if (l.0 as usize) >= alphabet.size() {
                return Err(Error::InvalidDirective(format!(
                    "letter index {} outside alphabet of size {}",
                    l.0,
                    alphabet.size()
                )));
            }
        }
        Ok(())
    }

    /// Parses the CLI text format `"<preperiod>:<period>"`, e.g. `":ab"`.
    ///
    /// The alphabet defaults to the distinct characters of the text in
    /// first-appearance order; `alphabet` overrides it.
    pub fn parse(text: &str, alphabet: Option<&Alphabet>) -> Result<Self> {
        let (pre, per) = text
            .split_once(':')
            .ok_or_else(|| Error::InvalidDirective(format!("missing ':' in {text:?}")))?;
        if per.contains(':') {
            return Err(Error::InvalidDirective(format!("more than one ':' in {text:?}")));
        }
        if per.is_empty() {
            return Err(Error::InvalidDirective("empty period".into()));
        }
        let alphabet = match alphabet {
            Some(a) => a.clone(),
            None => {
                let mut seen = Vec::new();
                for c in pre.chars().chain(per.chars()) {
                    if !seen.contains(&c) {
                        seen.push(c);
                    }
                }
                Alphabet::new(seen)?
            }
        };
        let preperiod = alphabet.word(pre)?;
        let period = alphabet.word(per)?;
        Self::new(alphabet, preperiod, period)
    }

    /// The Fibonacci directive `(ab)^ω` over `{a, b}`.
    pub fn fibonacci() -> Self {
        let al = Alphabet::binary();
        DirectiveSpec { alphabet: al, preperiod: vec![], period: vec![Letter(0), Letter(1)] }
    }

    /// The Tribonacci directive `(abc)^ω` over `{a, b, c}`.
    pub fn tribonacci() -> Self {
        let al = Alphabet::ternary();
        DirectiveSpec {
            alphabet: al,
            preperiod: vec![],
            period: vec![Letter(0), Letter(1), Letter(2)],
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn preperiod(&self) -> &[Letter] {
        &self.preperiod
    }

    pub fn period(&self) -> &[Letter] {
        &self.period
    }

    pub fn is_truncated(&self) -> bool {
        self.period.is_empty()
    }

    /// The directive letter `a_k`, `k ≥ 1`; `None` once a truncated block
    /// is exhausted.
    pub fn letter(&self, k: usize) -> Option<Letter> {
        debug_assert!(k >= 1);
        let idx = k - 1;
        if idx < self.preperiod.len() {
            Some(self.preperiod[idx])
        } else if !self.period.is_empty() {
            Some(self.period[(idx - self.preperiod.len()) % self.period.len()])
        } else {
            None
        }
    }

    /// Number of levels a truncated block determines; `None` when periodic.
    pub fn available_levels(&self) -> Option<usize> {
        self.is_truncated().then_some(self.preperiod.len())
    }

    pub fn classify(&self) -> DirectiveClass {
        if self.alphabet.size() < 2 {
            return DirectiveClass::NotAr;
        }
        if self.is_truncated() {
            return DirectiveClass::TruncatedBlock;
        }
        let all_recur = self.alphabet.letters().all(|l| self.period.contains(&l));
        if all_recur {
            DirectiveClass::ArValid
        } else {
            DirectiveClass::NotAr
        }
    }

    /// True for directives on which the AR theory applies without caveats.
    pub fn is_ar_valid(&self) -> bool {
        self.classify() == DirectiveClass::ArValid
    }

    /// True when AR computations may proceed (possibly depth-limited).
    pub fn is_ar_usable(&self) -> bool {
        self.classify() != DirectiveClass::NotAr
    }
}

/// The longest suffix of `w` that is a palindrome; never empty.
pub fn longest_palindromic_suffix(w: &[Letter]) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let m = Manacher::new(w);
    let len = m.longest_palindromic_suffix_at(w.len() - 1);
    Ok(w[w.len() - len..].to_vec())
}

/// The shortest palindrome having `w` as a prefix.
///
/// Writing `w = x·s` with `s` the longest palindromic suffix, the closure
/// is `x·s·reverse(x)`.
pub fn palindromic_closure(w: &[Letter]) -> Result<Word> {
    let s = longest_palindromic_suffix(w)?;
    let x = &w[..w.len() - s.len()];
    let mut out = w.to_vec();
    out.extend(reversed(x));
    Ok(out)
}

/// The bispecial prefixes `[B_0, …, B_K]` of the word directed by `d`,
/// with `B_0 = ε` and `B_k` the palindromic closure of `B_{k-1}·a_k`.
pub fn bispecial_prefixes(d: &DirectiveSpec, levels: usize) -> Result<Vec<Word>> {
    let mut out = vec![Word::new()];
    let mut current = Word::new();
    for k in 1..=levels {
        let a = d.letter(k).ok_or(Error::DirectiveExhausted { level: k })?;
        current.push(a);
        current = palindromic_closure(&current)?;
        out.push(current.clone());
    }
    Ok(out)
}

/// A generated prefix of the characteristic word, with its level and a
/// flag warning when the directive is not Arnoux-Rauzy valid.
#[derive(Clone, Debug)]
pub struct CharacteristicPrefix {
    pub word: Word,
    /// `B_level` is the returned word.
    pub level: usize,
    pub ar_valid: bool,
}

/// `B_K` for the least `K` with `|B_K| ≥ min_len`.
///
/// The characteristic word is the increasing limit of the `B_k`, so the
/// result is a prefix of every longer generation from the same directive.
pub fn characteristic_prefix(d: &DirectiveSpec, min_len: usize) -> Result<CharacteristicPrefix> {
    assert!(min_len >= 1, "min_len must be positive");
    let mut current = Word::new();
    let mut level = 0;
    while current.len() < min_len {
        level += 1;
        let a = d.letter(level).ok_or(Error::DirectiveExhausted { level })?;
        current.push(a);
        current = palindromic_closure(&current)?;
    }
    Ok(CharacteristicPrefix { word: current, level, ar_valid: d.is_ar_valid() })
}

/// Largest prefix a truncated directive determines (the full `B_K` for
/// periodic input is unbounded, so `levels` caps the depth either way).
pub fn deepest_prefix(d: &DirectiveSpec, max_levels: usize) -> Result<CharacteristicPrefix> {
    let levels = match d.available_levels() {
        Some(avail) => avail.min(max_levels),
        None => max_levels,
    };
    let mut current = Word::new();
    for k in 1..=levels {
        let a = d.letter(k).expect("level bounded by availability");
        current.push(a);
        current = palindromic_closure(&current)?;
    }
    Ok(CharacteristicPrefix { word: current, level: levels, ar_valid: d.is_ar_valid() })
}

/// Converts a continued-fraction expansion `[0; d_1, d_2, …, d_m]` of a
/// Sturmian slope into the finite directive block
/// `a^(d_1−1) b^(d_2) a^(d_3) b^(d_4) …` over `{a, b}`.
pub fn sturmian_directive_from_cf(cf: &[u64]) -> Result<DirectiveSpec> {
    if cf.is_empty() {
        return Err(Error::InvalidContinuedFraction("no terms".into()));
    }
    if cf.iter().any(|&d| d == 0) {
        return Err(Error::InvalidContinuedFraction("zero term".into()));
    }
    let alphabet = Alphabet::binary();
    let mut block = Word::new();
    for (i, &d) in cf.iter().enumerate() {
        let reps = if i == 0 { d - 1 } else { d };
        let letter = Letter((i % 2) as u8);
        for _ in 0..reps {
            block.push(letter);
        }
    }
    DirectiveSpec::finite(alphabet, block)
}

/// A morphism over an alphabet, as one image word per letter.
#[derive(Clone, Debug)]
pub struct Morphism {
    alphabet: Alphabet,
    images: Vec<Word>,
}

impl Morphism {
    pub fn new(alphabet: Alphabet, images: Vec<Word>) -> Self {
        assert_eq!(alphabet.size(), images.len());
        Morphism { alphabet, images }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn apply(&self, w: &[Letter]) -> Word {
        let mut out = Word::new();
        for &l in w {
            out.extend_from_slice(&self.images[l.0 as usize]);
        }
        out
    }

    /// Prefix of the fixed point beginning in `start`: iterates until the
    /// first image of length ≥ `len`, then truncates.
    pub fn fixed_point_prefix(&self, start: Letter, len: usize) -> Word {
        assert!(len >= 1);
        let mut w = vec![start];
        while w.len() < len {
            let next = self.apply(&w);
            assert!(next.len() > w.len(), "morphism is not growing from this seed");
            w = next;
        }
        w.truncate(len);
        w
    }
}

/// Fibonacci morphism `a → ab, b → a`.
pub fn fibonacci_morphism() -> Morphism {
    let al = Alphabet::binary();
    Morphism::new(al.clone(), vec![al.word("ab").unwrap(), al.word("a").unwrap()])
}

/// Tribonacci morphism `a → ab, b → ac, c → a`.
pub fn tribonacci_morphism() -> Morphism {
    let al = Alphabet::ternary();
    Morphism::new(
        al.clone(),
        vec![al.word("ab").unwrap(), al.word("ac").unwrap(), al.word("a").unwrap()],
    )
}

/// The 2-uniform morphism `a → ac, b → ad, c → bc, d → bd` whose fixed
/// point projects onto the regular paperfolding word.
pub fn paperfolding_morphism() -> Morphism {
    let al = Alphabet::quaternary();
    Morphism::new(
        al.clone(),
        vec![
            al.word("ac").unwrap(),
            al.word("ad").unwrap(),
            al.word("bc").unwrap(),
            al.word("bd").unwrap(),
        ],
    )
}

/// Names of the built-in corpus words.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CorpusWord {
    Fibonacci,
    Tribonacci,
    /// Fixed point of `a → ac, b → ad, c → bc, d → bd` beginning in `a`.
    PfMorphism,
    /// Its projection `a,c → 0`, `b,d → 1`: the regular paperfolding word.
    Paperfolding,
}

impl std::str::FromStr for CorpusWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fibonacci" => Ok(CorpusWord::Fibonacci),
            "tribonacci" => Ok(CorpusWord::Tribonacci),
            "pf_morphism" => Ok(CorpusWord::PfMorphism),
            "paperfolding" => Ok(CorpusWord::Paperfolding),
            other => Err(Error::UnknownCorpus(other.into())),
        }
    }
}

impl CorpusWord {
    /// The generating directive, for the corpus words that are AR words.
    pub fn directive(self) -> Option<DirectiveSpec> {
        match self {
            CorpusWord::Fibonacci => Some(DirectiveSpec::fibonacci()),
            CorpusWord::Tribonacci => Some(DirectiveSpec::tribonacci()),
            CorpusWord::PfMorphism | CorpusWord::Paperfolding => None,
        }
    }
}

/// The length-`len` prefix of a named corpus word, with its alphabet.
pub fn corpus_word(name: CorpusWord, len: usize) -> Result<(Alphabet, Word)> {
    assert!(len >= 1);
    match name {
        CorpusWord::Fibonacci | CorpusWord::Tribonacci => {
            let d = name.directive().expect("AR corpus word");
            let mut w = characteristic_prefix(&d, len)?.word;
            w.truncate(len);
            Ok((d.alphabet().clone(), w))
        }
        CorpusWord::PfMorphism => {
            let m = paperfolding_morphism();
            let w = m.fixed_point_prefix(Letter(0), len);
            Ok((m.alphabet().clone(), w))
        }
        CorpusWord::Paperfolding => {
            let m = paperfolding_morphism();
            let w = m.fixed_point_prefix(Letter(0), len);
            // a, c → 0 and b, d → 1
            let projected: Word = w.iter().map(|&l| Letter(l.0 % 2)).collect();
            Ok((Alphabet::new("01".chars())?, projected))
        }
    }
}

/// The set of distinct length-`n` factors of `w`, in lexicographic order
/// of the declared alphabet.
pub fn factors(w: &[Letter], n: usize) -> Result<BTreeSet<Word>> {
    if n == 0 || n > w.len() {
        return Err(Error::WindowExceedsWord { n, len: w.len() });
    }
    Ok(w.windows(n).map(|win| win.to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::is_palindrome;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        Alphabet::quaternary().word(s).unwrap()
    }

    fn render(word: &[Letter]) -> String {
        Alphabet::quaternary().render(word)
    }

    /// Independent oracle: the shortest palindrome with prefix `w`, found
    /// by trying every length from |w| to 2|w| and checking consistency of
    /// the overlap between `w` and `reverse(w)`.
    fn brute_force_closure(word: &[Letter]) -> Word {
        let n = word.len();
        'outer: for total in n..=2 * n {
            let mut cand: Vec<Option<Letter>> = vec![None; total];
            for (i, &c) in word.iter().enumerate() {
                cand[i] = Some(c);
            }
            for (i, &c) in word.iter().rev().enumerate() {
                let pos = total - n + i;
                match cand[pos] {
                    Some(existing) if existing != c => continue 'outer,
                    _ => cand[pos] = Some(c),
                }
            }
            if cand.iter().all(Option::is_some) {
                let filled: Word = cand.into_iter().map(Option::unwrap).collect();
                if is_palindrome(&filled) {
                    return filled;
                }
            }
        }
        unreachable!("w·reverse(w without last letter) is always a palindromic bound")
    }

    #[test]
    fn pal_suffix_examples() {
        assert_eq!(longest_palindromic_suffix(&w("a")).unwrap(), w("a"));
        assert_eq!(longest_palindromic_suffix(&w("ab")).unwrap(), w("b"));
        assert_eq!(longest_palindromic_suffix(&w("abaa")).unwrap(), w("aa"));
        assert_eq!(longest_palindromic_suffix(&[]).unwrap_err(), Error::EmptyWord);
    }

    #[test]
    fn closure_examples() {
        assert_eq!(palindromic_closure(&w("a")).unwrap(), w("a"));
        assert_eq!(palindromic_closure(&w("ab")).unwrap(), w("aba"));
        assert_eq!(palindromic_closure(&w("abaa")).unwrap(), w("abaaba"));
        assert_eq!(brute_force_closure(&w("abaa")), w("abaaba"));
        assert_eq!(palindromic_closure(&[]).unwrap_err(), Error::EmptyWord);
    }

    #[test]
    fn bispecials_fibonacci_and_tribonacci() {
        let fib = bispecial_prefixes(&DirectiveSpec::fibonacci(), 3).unwrap();
        assert_eq!(
            fib.iter().map(|b| render(b)).collect::<Vec<_>>(),
            vec!["", "a", "aba", "abaaba"]
        );
        let trib = bispecial_prefixes(&DirectiveSpec::tribonacci(), 3).unwrap();
        assert_eq!(
            trib.iter().map(|b| render(b)).collect::<Vec<_>>(),
            vec!["", "a", "aba", "abacaba"]
        );
        assert_eq!(bispecial_prefixes(&DirectiveSpec::fibonacci(), 0).unwrap(), vec![Word::new()]);
    }

    #[test]
    fn bispecial_lengths_strictly_increase() {
        let bs = bispecial_prefixes(&DirectiveSpec::tribonacci(), 10).unwrap();
        for k in 1..bs.len() {
            assert!(bs[k].len() > bs[k - 1].len());
            assert!(is_palindrome(&bs[k]));
            // B_{k-1}·a_k is a prefix of B_k
            assert_eq!(&bs[k][..bs[k - 1].len()], &bs[k - 1][..]);
        }
    }

    #[test]
    fn characteristic_prefix_examples() {
        let fib = characteristic_prefix(&DirectiveSpec::fibonacci(), 10).unwrap();
        assert_eq!(render(&fib.word), "abaababaaba");
        assert_eq!(fib.level, 4);
        assert!(fib.ar_valid);

        let one = characteristic_prefix(&DirectiveSpec::fibonacci(), 1).unwrap();
        assert_eq!(render(&one.word), "a");

        let trib = characteristic_prefix(&DirectiveSpec::tribonacci(), 5).unwrap();
        assert_eq!(render(&trib.word), "abacaba");
    }

    #[test]
    fn directive_parsing() {
        let d = DirectiveSpec::parse(":ab", None).unwrap();
        assert_eq!(d, DirectiveSpec::fibonacci());
        assert!(d.is_ar_valid());

        let d = DirectiveSpec::parse("a:bc", None).unwrap();
        assert_eq!(d.preperiod().len(), 1);
        assert_eq!(d.period().len(), 2);
        // 'a' never recurs, so this one is episturmian but not AR
        assert_eq!(d.classify(), DirectiveClass::NotAr);

        let d = DirectiveSpec::parse("b:ab", None).unwrap();
        assert!(d.is_ar_valid());

        // unary period: not AR
        let d = DirectiveSpec::parse(":a", None).unwrap();
        assert_eq!(d.classify(), DirectiveClass::NotAr);

        // letter only in the preperiod: episturmian, not AR
        let al = Alphabet::ternary();
        let d = DirectiveSpec::parse("c:ab", Some(&al)).unwrap();
        assert_eq!(d.classify(), DirectiveClass::NotAr);

        assert!(DirectiveSpec::parse("ab", None).is_err());
        assert!(DirectiveSpec::parse("a:", None).is_err());
        assert!(DirectiveSpec::parse("a:b:c", None).is_err());
    }

    #[test]
    fn truncated_directives_exhaust() {
        let d = sturmian_directive_from_cf(&[2]).unwrap();
        assert_eq!(d.available_levels(), Some(1));
        assert_eq!(d.letter(1), Some(Letter(0)));
        assert_eq!(d.letter(2), None);
        let err = bispecial_prefixes(&d, 2).unwrap_err();
        assert_eq!(err, Error::DirectiveExhausted { level: 2 });
    }

    #[test]
    fn cf_conversion_examples() {
        let al = Alphabet::binary();
        let golden = sturmian_directive_from_cf(&[1, 1, 1]).unwrap();
        assert_eq!(al.render(golden.preperiod()), "ba");

        let single = sturmian_directive_from_cf(&[2]).unwrap();
        assert_eq!(al.render(single.preperiod()), "a");

        let mixed = sturmian_directive_from_cf(&[3, 1, 5, 4]).unwrap();
        assert_eq!(al.render(mixed.preperiod()), "aabaaaaabbbb");

        assert!(sturmian_directive_from_cf(&[]).is_err());
        assert!(sturmian_directive_from_cf(&[0, 1]).is_err());
        assert!(sturmian_directive_from_cf(&[1, 0]).is_err());
    }

    #[test]
    fn golden_cf_matches_fibonacci_up_to_letter_exchange() {
        let d = sturmian_directive_from_cf(&[1; 17]).unwrap();
        let gen = deepest_prefix(&d, usize::MAX).unwrap().word;
        let (al, fib) = corpus_word(CorpusWord::Fibonacci, gen.len()).unwrap();
        let swapped: Word = fib.iter().map(|&l| Letter(1 - l.0)).collect();
        assert_eq!(al.render(&gen), al.render(&swapped));
    }

    #[test]
    fn cf_letter_frequency_tracks_slope() {
        // frequency of b approaches α = [0; d_1, d_2, …]
        for cf in [
            vec![1u64; 20],
            vec![3, 1, 5, 4, 1, 5, 1, 1, 1, 2, 1, 3, 2, 2, 4],
            vec![2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2],
        ] {
            let mut alpha = 0.0_f64;
            for &d in cf.iter().rev() {
                alpha = 1.0 / (d as f64 + alpha);
            }
            let d = sturmian_directive_from_cf(&cf).unwrap();
            let word = deepest_prefix(&d, usize::MAX).unwrap().word;
            let len = word.len();
            assert!(len >= 1000, "prefix of length {len} too short for the check");
            let b_count = word.iter().filter(|&&l| l == Letter(1)).count();
            let freq = b_count as f64 / len as f64;
            assert!(
                (freq - alpha).abs() <= 2.0 / len as f64,
                "freq {freq} vs slope {alpha} at length {len}"
            );
        }
    }

    #[test]
    fn corpus_examples() {
        let (al, fib) = corpus_word(CorpusWord::Fibonacci, 17).unwrap();
        assert_eq!(al.render(&fib), "abaababaabaababaa");

        let (al, pf) = corpus_word(CorpusWord::PfMorphism, 8).unwrap();
        assert_eq!(al.render(&pf), "acbcadbc");

        let (al, fold) = corpus_word(CorpusWord::Paperfolding, 8).unwrap();
        assert_eq!(al.render(&fold), "00100110");

        assert!("nonsense".parse::<CorpusWord>().is_err());
    }

    #[test]
    fn paperfolding_matches_fold_recurrence() {
        // Independent oracle: bit n (1-based) is 1 iff the odd part of n
        // is ≡ 3 (mod 4).
        let (_, fold) = corpus_word(CorpusWord::Paperfolding, 4096).unwrap();
        for (i, &bit) in fold.iter().enumerate() {
            let mut m = i + 1;
            while m % 2 == 0 {
                m /= 2;
            }
            let expect = if m % 4 == 3 { Letter(1) } else { Letter(0) };
            assert_eq!(bit, expect, "position {}", i + 1);
        }
    }

    #[test]
    fn directive_and_morphism_constructions_agree() {
        for (name, morphism) in [
            (CorpusWord::Fibonacci, fibonacci_morphism()),
            (CorpusWord::Tribonacci, tribonacci_morphism()),
        ] {
            let (_, generated) = corpus_word(name, 10_000).unwrap();
            let iterated = morphism.fixed_point_prefix(Letter(0), 10_000);
            assert_eq!(generated, iterated);
        }
    }

    #[test]
    fn factor_window_examples() {
        let al = Alphabet::binary();
        let aba = al.word("aba").unwrap();
        let got = factors(&aba, 2).unwrap();
        assert_eq!(got.len(), 2);
        assert!(got.contains(&al.word("ab").unwrap()));
        assert!(got.contains(&al.word("ba").unwrap()));

        let abaaba = al.word("abaaba").unwrap();
        let got = factors(&abaaba, 3).unwrap();
        let expect: BTreeSet<Word> =
            ["aab", "aba", "baa"].iter().map(|s| al.word(s).unwrap()).collect();
        assert_eq!(got, expect);

        let aaaa = al.word("aaaa").unwrap();
        assert_eq!(factors(&aaaa, 2).unwrap().len(), 1);

        assert!(factors(&aba, 4).is_err());
        assert!(factors(&aba, 0).is_err());
    }

    proptest! {
        #[test]
        fn closure_is_minimal_palindrome_with_prefix(s in proptest::collection::vec(0u8..3, 1..20)) {
            let word: Word = s.iter().map(|&x| Letter(x)).collect();
            let closure = palindromic_closure(&word).unwrap();
            prop_assert!(is_palindrome(&closure));
            prop_assert_eq!(&closure[..word.len()], &word[..]);
            prop_assert_eq!(closure, brute_force_closure(&word));
        }

        #[test]
        fn closure_length_identity(s in proptest::collection::vec(0u8..4, 1..30)) {
            let word: Word = s.iter().map(|&x| Letter(x)).collect();
            let suffix = longest_palindromic_suffix(&word).unwrap();
            let closure = palindromic_closure(&word).unwrap();
            prop_assert_eq!(closure.len(), 2 * word.len() - suffix.len());
        }
    }
}
