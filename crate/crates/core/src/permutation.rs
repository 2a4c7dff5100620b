//! The symmetric group S_n in one-line notation.
//!
//! Composition is right-to-left: `v.compose(&w)` maps m to v(w(m)). A word
//! s_{i_1}···s_{i_k} therefore denotes the function that applies s_{i_k}
//! first, and appending s_i to a word is `w.compose(&s_i)`, which swaps the
//! entries at positions i and i+1 of the one-line notation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n as u8).collect(),
        }
    }

    /// One-line notation `[w(1), ..., w(n)]`, 1-based.
    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection of 1..{n}")));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// The simple transposition s_i = (i, i+1).
    pub fn simple(i: usize, n: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        let mut images: Vec<u8> = (1..=n as u8).collect();
        images.swap(i - 1, i);
        Ok(Permutation { images })
    }

    /// The product s_{i_1}···s_{i_k}.
    pub fn from_word(word: &[usize], n: usize) -> Result<Self> {
        let mut w = Self::identity(n);
        for &i in word {
            if i == 0 || i >= n {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
            w.images.swap(i - 1, i);
        }
        Ok(w)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// w(m), 1-based.
    pub fn image(&self, m: usize) -> usize {
        self.images[m - 1] as usize
    }

    pub fn compose(&self, w: &Self) -> Result<Self> {
        if self.n() != w.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                found: w.n(),
            });
        }
        Ok(Permutation {
            images: w.images.iter().map(|&m| self.images[m as usize - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u8; self.n()];
        for (k, &x) in self.images.iter().enumerate() {
            images[x as usize - 1] = (k + 1) as u8;
        }
        Permutation { images }
    }

    /// Coxeter length, i.e. the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        (0..w.len())
            .flat_map(|a| (a + 1..w.len()).map(move |b| (a, b)))
            .filter(|&(a, b)| w[a] > w[b])
            .count()
    }

    /// True when appending s_i lengthens the word: w(i) < w(i+1).
    pub fn is_right_ascent(&self, i: usize) -> bool {
        self.images[i - 1] < self.images[i]
    }

    /// Canonical reduced word: repeatedly strip the smallest right descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.images.clone();
        let mut reversed = Vec::new();
        while let Some(i) = (1..w.len()).find(|&i| w[i - 1] > w[i]) {
            reversed.push(i);
            w.swap(i - 1, i);
        }
        reversed.reverse();
        reversed
    }

    /// All of S_n in lexicographic order of one-line notation.
    pub fn enumerate(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (1..=n as u8).collect();
        loop {
            out.push(Permutation { images: cur.clone() });
            // next lexicographic permutation
            let Some(k) = (0..n.saturating_sub(1)).rev().find(|&k| cur[k] < cur[k + 1]) else {
                break;
            };
            let l = (k + 1..n).rev().find(|&l| cur[l] > cur[k]).unwrap();
            cur.swap(k, l);
            cur[k + 1..].reverse();
        }
        out
    }

    /// Word text "s1.s2.s1"; the empty word renders as "e".
    pub fn word_string(word: &[usize]) -> String {
        if word.is_empty() {
            return "e".to_string();
        }
        word.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(".")
    }

    pub fn parse_word(text: &str) -> Result<Vec<usize>> {
        let text = text.trim();
        if text == "e" || text.is_empty() {
            return Ok(Vec::new());
        }
        text.split('.')
            .map(|t| {
                t.trim()
                    .strip_prefix('s')
                    .and_then(|d| d.parse().ok())
                    .ok_or_else(|| Error::Parse(format!("bad generator {t:?} in word {text:?}")))
            })
            .collect()
    }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.images.iter().map(u8::to_string).collect();
        write!(f, "[{}]", body.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let inner = text
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::InvalidPermutation(format!("expected [..], got {text:?}")))?;
        let images = inner
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u8>()
                    .map_err(|_| Error::InvalidPermutation(format!("bad entry {x:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(i: usize, n: usize) -> Permutation {
        Permutation::simple(i, n).unwrap()
    }

    #[test]
    fn compose_examples() {
        assert_eq!(s(1, 3).compose(&s(1, 3)).unwrap(), Permutation::identity(3));
        let w = s(2, 3).compose(&s(1, 3)).unwrap();
        assert_eq!((w.image(2), w.image(3), w.image(1)), (1, 2, 3));
        let v: Permutation = "[3,1,2]".parse().unwrap();
        assert_eq!(v.compose(&Permutation::identity(3)).unwrap(), v);
        assert!(v.compose(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn word_matches_composition() {
        let w = Permutation::from_word(&[2, 1], 3).unwrap();
        assert_eq!(w, s(2, 3).compose(&s(1, 3)).unwrap());
    }

    #[test]
    fn reduced_word_examples() {
        assert!(Permutation::identity(3).reduced_word().is_empty());
        let longest: Permutation = "[3,2,1]".parse().unwrap();
        assert_eq!(longest.reduced_word().len(), 3);
        assert_eq!(s(1, 3).reduced_word(), vec![1]);
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(Permutation::enumerate(1).len(), 1);
        assert_eq!(Permutation::enumerate(3).len(), 6);
        assert_eq!(Permutation::enumerate(4).len(), 24);
        assert_eq!(Permutation::enumerate(3)[0], Permutation::identity(3));
    }

    #[test]
    fn exhaustive_word_and_length_properties() {
        for n in 1..=5 {
            for w in Permutation::enumerate(n) {
                let word = w.reduced_word();
                assert_eq!(word.len(), w.length());
                assert_eq!(Permutation::from_word(&word, n).unwrap(), w);
                for i in 1..n {
                    let ws = w.compose(&s(i, n)).unwrap();
                    let expected = if w.is_right_ascent(i) { w.length() + 1 } else { w.length() - 1 };
                    assert_eq!(ws.length(), expected);
                }
            }
        }
    }

    #[test]
    fn text_forms() {
        let w: Permutation = "[2,1,3]".parse().unwrap();
        assert_eq!(w.to_string(), "[2,1,3]");
        assert!("[1,1,3]".parse::<Permutation>().is_err());
        assert_eq!(Permutation::word_string(&[1, 2, 1]), "s1.s2.s1");
        assert_eq!(Permutation::parse_word("s1.s2.s1").unwrap(), vec![1, 2, 1]);
        assert_eq!(Permutation::parse_word("e").unwrap(), Vec::<usize>::new());
        assert!(Permutation::parse_word("t1").is_err());
    }
}
