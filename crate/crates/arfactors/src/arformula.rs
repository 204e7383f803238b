//! The closed-complexity formula for Arnoux-Rauzy words: the per-level
//! return-length recursion, the length intervals it induces, and the
//! counting of closed factors per length, with the binary (Sturmian)
//! specialization and the liminf witness construction.

use crate::error::{Error, Result};
use crate::wordgen::DirectiveSpec;
use crate::words::Letter;

/// A closed integer interval `[lo, hi]`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Interval {
    pub lo: u64,
    pub hi: u64,
}

impl Interval {
    pub fn new(lo: u64, hi: u64) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn contains(&self, n: u64) -> bool {
        self.lo <= n && n <= self.hi
    }

    /// Minimal distance from an interior point to the two endpoints.
    pub fn boundary_distance(&self, n: u64) -> Result<u64> {
        if !self.contains(n) {
            return Err(Error::OutsideInterval { n, lo: self.lo, hi: self.hi });
        }
        Ok((n - self.lo).min(self.hi - n))
    }

    pub fn width(&self) -> u64 {
        self.hi - self.lo
    }
}

#[derive(Clone, Debug)]
struct Level {
    /// Directive letter `a_k`; `None` at level 0.
    letter: Option<Letter>,
    /// Length `b_k` of the k-th bispecial factor.
    b: u64,
    /// First-return lengths `p_a^(k)`, one per alphabet letter.
    p: Vec<u64>,
    /// `p_k = min_a p_a^(k)`.
    p_min: u64,
}

/// The per-level return-length table of a directive: `b_k`, the return
/// lengths `p_a^(k)` and `p_k`, extended lazily level by level.
#[derive(Clone, Debug)]
pub struct ReturnTable {
    directive: DirectiveSpec,
    levels: Vec<Level>,
}

impl ReturnTable {
    /// Starts a table at level 0: `p_a^(0) = 1` for every letter, `b_0 = 0`.
    pub fn new(directive: &DirectiveSpec) -> Result<Self> {
        if !directive.is_ar_usable() {
            return Err(Error::NotArValid);
        }
        let t = directive.alphabet().size();
        let level0 = Level { letter: None, b: 0, p: vec![1; t], p_min: 1 };
        Ok(ReturnTable { directive: directive.clone(), levels: vec![level0] })
    }

    pub fn directive(&self) -> &DirectiveSpec {
        &self.directive
    }

    pub fn alphabet_size(&self) -> usize {
        self.directive.alphabet().size()
    }

    /// Highest level currently computed.
    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    /// Extends the table with one more level.
    fn grow(&mut self) -> Result<()> {
        let k = self.levels.len();
        let a = self.directive.letter(k).ok_or(Error::DirectiveExhausted { level: k })?;
        let prev = &self.levels[k - 1];
        let step = prev.p[a.0 as usize];
        let mut p = prev.p.clone();
        for (i, value) in p.iter_mut().enumerate() {
            if i != a.0 as usize {
                *value = value.checked_add(step).ok_or(Error::Overflow)?;
            }
        }
        let t = p.len() as u64;
        let sum: u64 = p.iter().try_fold(0u64, |acc, &x| acc.checked_add(x).ok_or(Error::Overflow))?;
        // b_k = (Σ_a p_a^(k) − t)/(t−1); the division is exact by construction
        // and a remainder would mean the recursion itself is broken.
        assert_eq!((sum - t) % (t - 1), 0, "inexact b_k division");
        let b = (sum - t) / (t - 1);
        assert_eq!(b, prev.b + step, "b_k must advance by p_k");
        let p_min = *p.iter().min().expect("non-empty alphabet");
        debug_assert_eq!(p_min, p[a.0 as usize]);
        self.levels.push(Level { letter: Some(a), b, p, p_min });
        Ok(())
    }

    pub fn ensure_level(&mut self, k: usize) -> Result<()> {
        while self.depth() < k {
            self.grow()?;
        }
        Ok(())
    }

    /// Ensures every level that can contribute to length `n` is present and
    /// returns the greatest such level `D`: the least one with
    /// `b_D + 2 > n`, since `lo(I_{k,a}) ≥ b_{k−1} + 2` for `k ≥ 1`.
    pub fn ensure_for_length(&mut self, n: u64) -> Result<usize> {
        loop {
            if let Some(d) = (0..=self.depth()).find(|&k| self.levels[k].b + 2 > n) {
                return Ok(d);
            }
            self.grow()?;
        }
    }

    pub fn b(&self, k: usize) -> u64 {
        self.levels[k].b
    }

    /// `p_a^(k)`.
    pub fn p(&self, k: usize, a: Letter) -> u64 {
        self.levels[k].p[a.0 as usize]
    }

    /// `p_k = min_a p_a^(k)` (equal to `b_k − b_{k−1}` for `k ≥ 1`).
    pub fn p_min(&self, k: usize) -> u64 {
        self.levels[k].p_min
    }

    /// The directive letter `a_k` of a computed level (`None` at 0).
    pub fn level_letter(&self, k: usize) -> Option<Letter> {
        self.levels[k].letter
    }

    /// Binary alphabets only: the non-minimal return length `q_k`
    /// (with `q_0 = 1`).
    pub fn q(&self, k: usize) -> Result<u64> {
        if self.alphabet_size() != 2 {
            return Err(Error::NonBinaryAlphabet);
        }
        Ok(*self.levels[k].p.iter().max().expect("binary alphabet"))
    }

    /// `I_{k,a} = [b_k − 2p_k + p_a^(k) + 2, b_k + p_a^(k)]`.
    pub fn interval(&self, k: usize, a: Letter) -> Interval {
        let level = &self.levels[k];
        let pa = level.p[a.0 as usize];
        let lo = level.b + pa + 2 - 2 * level.p_min;
        let hi = level.b + pa;
        Interval::new(lo, hi)
    }
}

/// One contribution to the closed-complexity sum.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FormulaTerm {
    pub level: usize,
    pub letter: Letter,
    pub interval: Interval,
    /// `d(n, I_{k,a})`.
    pub distance: u64,
    /// Whether `letter` is the directive letter of this level.
    pub is_directed_return: bool,
}

/// Every `(k, a)` with `n ∈ I_{k,a}`, with its boundary distance, ordered
/// by level then by letter.
pub fn closed_complexity_terms(rt: &mut ReturnTable, n: u64) -> Result<Vec<FormulaTerm>> {
    assert!(n >= 1);
    let top = rt.ensure_for_length(n)?;
    let t = rt.alphabet_size();
    let mut terms = Vec::new();
    for k in 0..=top {
        for i in 0..t {
            let a = Letter(i as u8);
            let iv = rt.interval(k, a);
            if iv.contains(n) {
                terms.push(FormulaTerm {
                    level: k,
                    letter: a,
                    interval: iv,
                    distance: iv.boundary_distance(n)?,
                    is_directed_return: rt.level_letter(k) == Some(a),
                });
            }
        }
    }
    Ok(terms)
}

/// The number of closed factors of length `n`:
/// `f^c(n) = Σ_a Σ_{k : n ∈ I_{k,a}} (d(n, I_{k,a}) + 1)`.
pub fn closed_complexity(rt: &mut ReturnTable, n: u64) -> Result<u64> {
    Ok(closed_complexity_terms(rt, n)?.iter().map(|term| term.distance + 1).sum())
}

/// `[f^c(1), …, f^c(n_max)]` from a single table.
pub fn closed_complexity_profile(rt: &mut ReturnTable, n_max: u64) -> Result<Vec<u64>> {
    (1..=n_max).map(|n| closed_complexity(rt, n)).collect()
}

/// The Sturmian specialization via the intervals
/// `P_k = [q_k, q_k + 2p_k − 2]` and `Q_k = [2q_k − p_k, 2q_k + p_k − 2]`.
pub fn sturmian_closed_complexity(rt: &mut ReturnTable, n: u64) -> Result<u64> {
    assert!(n >= 1);
    if rt.alphabet_size() != 2 {
        return Err(Error::NonBinaryAlphabet);
    }
    let top = rt.ensure_for_length(n)?;
    let mut total = 0u64;
    for k in 0..=top {
        let p = rt.p_min(k);
        let q = rt.q(k)?;
        let p_interval = Interval::new(q, q + 2 * p - 2);
        let q_interval = Interval::new(2 * q - p, 2 * q + p - 2);
        for iv in [p_interval, q_interval] {
            if iv.contains(n) {
                total += iv.boundary_distance(n)? + 1;
            }
        }
    }
    Ok(total)
}

/// `f^o(n) = p_x(n) − f^c(n)` with `p_x(n) = (t−1)n + 1`.
pub fn open_complexity(rt: &mut ReturnTable, n: u64) -> Result<u64> {
    let t = rt.alphabet_size() as u64;
    let closed = closed_complexity(rt, n)?;
    let total = (t - 1) * n + 1;
    debug_assert!(closed <= total);
    Ok(total - closed)
}

/// The threshold `N = b_j + 2` for the least `j ≥ 1` with `p_j − 1 > 2m`;
/// beyond it every length has at least `m` closed factors.
pub fn liminf_witness(rt: &mut ReturnTable, m: u64) -> Result<u64> {
    assert!(m >= 1);
    let mut j = 1;
    loop {
        rt.ensure_level(j)?;
        if rt.p_min(j) > 2 * m + 1 {
            return Ok(rt.b(j) + 2);
        }
        j += 1;
    }
}
