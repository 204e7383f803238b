//! Palindrome machinery shared by the generator and the word predicates.
//!
//! Two independent routes are provided on purpose: [`Manacher`] answers
//! "is this window a palindrome" in O(1) after linear preprocessing, and
//! [`PalindromeIndex`] (an Eertree) counts distinct palindromic factors in
//! linear time. Tests play them against each other and against brute force.

use crate::words::Letter;

/// Manacher palindromic-radius arrays over a fixed word.
pub struct Manacher {
    n: usize,
    /// `d1[i]`: max k such that `w[i-k+1..=i+k-1]` is an odd palindrome.
    d1: Vec<usize>,
    /// `d2[i]`: max k such that `w[i-k..=i+k-1]` is an even palindrome.
    d2: Vec<usize>,
}

impl Manacher {
    pub fn new(w: &[Letter]) -> Self {
        let n = w.len();
        let mut d1 = vec![0usize; n];
        let (mut l, mut r) = (0isize, -1isize);
        for i in 0..n as isize {
            let mut k = if i > r {
                1
            } else {
                (d1[(l + r - i) as usize] as isize).min(r - i + 1) as usize as isize
            };
            while i - k >= 0 && i + k < n as isize && w[(i - k) as usize] == w[(i + k) as usize] {
                k += 1;
            }
            d1[i as usize] = k as usize;
            if i + k - 1 > r {
                l = i - k + 1;
                r = i + k - 1;
            }
        }
        let mut d2 = vec![0usize; n];
        let (mut l, mut r) = (0isize, -1isize);
        for i in 0..n as isize {
            let mut k = if i > r {
                0
            } else {
                (d2[(l + r - i + 1) as usize] as isize).min(r - i + 1) as usize as isize
            };
            while i - k - 1 >= 0 && i + k < n as isize && w[(i - k - 1) as usize] == w[(i + k) as usize]
            {
                k += 1;
            }
            d2[i as usize] = k as usize;
            if i + k - 1 > r {
                l = i - k;
                r = i + k - 1;
            }
        }
        Manacher { n, d1, d2 }
    }

    /// Whether the inclusive window `w[i..=j]` is a palindrome.
    pub fn is_palindrome(&self, i: usize, j: usize) -> bool {
        debug_assert!(i <= j && j < self.n);
        let len = j - i + 1;
        if len % 2 == 1 {
            let m = (i + j) / 2;
            self.d1[m] >= len / 2 + 1
        } else {
            let m = (i + j) / 2 + 1;
            self.d2[m] >= len / 2
        }
    }

    /// Length of the longest palindromic suffix of the prefix `w[..=j]`.
    pub fn longest_palindromic_suffix_at(&self, j: usize) -> usize {
        for i in 0..=j {
            if self.is_palindrome(i, j) {
                return j - i + 1;
            }
        }
        unreachable!("a single letter is a palindrome")
    }

    /// Longest palindromic suffix of every prefix, in one pass.
    ///
    /// Uses the fact that the value can grow by at most 2 per appended
    /// letter, so the total scan is linear.
    pub fn longest_palindromic_suffixes(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.n);
        let mut cur = 0usize;
        for j in 0..self.n {
            let mut len = (cur + 2).min(j + 1);
            while !self.is_palindrome(j + 1 - len, j) {
                len -= 1;
            }
            cur = len;
            out.push(len);
        }
        out
    }
}

struct Node {
    len: isize,
    suffix_link: usize,
    next: Vec<(Letter, usize)>,
}

impl Node {
    fn get(&self, c: Letter) -> Option<usize> {
        self.next.iter().find(|&&(l, _)| l == c).map(|&(_, v)| v)
    }
}

/// Palindromic tree over a word, built by appending letters.
///
/// Nodes (beyond the two roots) are in bijection with the distinct
/// non-empty palindromic factors of the word seen so far.
pub struct PalindromeIndex {
    word: Vec<Letter>,
    nodes: Vec<Node>,
    last: usize,
}

const ROOT_MINUS1: usize = 0;
const ROOT_0: usize = 1;

impl PalindromeIndex {
    pub fn new() -> Self {
        let nodes = vec![
            Node { len: -1, suffix_link: ROOT_MINUS1, next: Vec::new() },
            Node { len: 0, suffix_link: ROOT_MINUS1, next: Vec::new() },
        ];
        PalindromeIndex { word: Vec::new(), nodes, last: ROOT_0 }
    }

    pub fn of(w: &[Letter]) -> Self {
        let mut t = Self::new();
        for &c in w {
            t.push(c);
        }
        t
    }

    fn suffix_candidate(&self, mut v: usize) -> usize {
        let pos = self.word.len() - 1;
        loop {
            let len = self.nodes[v].len;
            let mirror = pos as isize - 1 - len;
            if mirror >= 0 && self.word[mirror as usize] == self.word[pos] {
                return v;
            }
            v = self.nodes[v].suffix_link;
        }
    }

    /// Appends a letter; returns true when it created a new palindrome.
    pub fn push(&mut self, c: Letter) -> bool {
        self.word.push(c);
        let cand = self.suffix_candidate(self.last);
        if let Some(existing) = self.nodes[cand].get(c) {
            self.last = existing;
            return false;
        }
        let len = self.nodes[cand].len + 2;
        let suffix_link = if len == 1 {
            ROOT_0
        } else {
            let link_cand = self.suffix_candidate(self.nodes[cand].suffix_link);
            self.nodes[link_cand].get(c).expect("shorter palindrome already indexed")
        };
        let id = self.nodes.len();
        self.nodes.push(Node { len, suffix_link, next: Vec::new() });
        self.nodes[cand].next.push((c, id));
        self.last = id;
        true
    }

    /// Count of distinct non-empty palindromic factors.
    pub fn distinct_palindromes(&self) -> usize {
        self.nodes.len() - 2
    }

    /// Length of the longest palindromic suffix of the current word.
    pub fn longest_suffix_palindrome(&self) -> usize {
        self.nodes[self.last].len.max(0) as usize
    }
}

impl Default for PalindromeIndex {
    fn default() -> Self {
        Self::new()
    }
}

/// Count of distinct non-empty palindromic factors of `w`.
pub fn distinct_palindromic_factors(w: &[Letter]) -> usize {
    PalindromeIndex::of(w).distinct_palindromes()
}
