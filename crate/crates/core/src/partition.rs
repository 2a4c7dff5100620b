//! Set partitions of {1..n}: the commutative idempotent monoid under join.
//!
//! A partition is stored as its restricted-growth string: `rgs[k]` is the
//! block label of element `k + 1`, labels appear in order of first
//! occurrence, so every partition has exactly one encoding.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permutation::Permutation;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SetPartition {
    rgs: Vec<u8>,
}

impl SetPartition {
    /// The finest partition {{1},{2},...,{n}}.
    pub fn unit(n: usize) -> Self {
        SetPartition {
            rgs: (0..n as u8).collect(),
        }
    }

    /// The coarsest partition {{1,...,n}}.
    pub fn full(n: usize) -> Self {
        SetPartition { rgs: vec![0; n] }
    }

    pub fn from_rgs(rgs: Vec<u8>) -> Result<Self> {
        let mut next = 0u8;
        for &label in &rgs {
            if label > next {
                return Err(Error::InvalidPartition(format!("{rgs:?} is not a restricted-growth string")));
            }
            if label == next {
                next += 1;
            }
        }
        Ok(SetPartition { rgs })
    }

    /// Canonicalizes an arbitrary labelling (equal labels share a block).
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut map: Vec<(usize, u8)> = Vec::new();
        let rgs = labels
            .iter()
            .map(|l| match map.iter().find(|(k, _)| k == l) {
                Some(&(_, v)) => v,
                None => {
                    let v = map.len() as u8;
                    map.push((*l, v));
                    v
                }
            })
            .collect();
        SetPartition { rgs }
    }

    /// Builds a partition of {1..n} from 1-based blocks; unlisted elements are singletons.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut labels: Vec<usize> = (0..n).map(|k| n + k).collect();
        let mut seen = vec![false; n];
        for (b, block) in blocks.iter().enumerate() {
            for &x in block {
                if x == 0 || x > n {
                    return Err(Error::InvalidPartition(format!("element {x} outside 1..{n}")));
                }
                if seen[x - 1] {
                    return Err(Error::InvalidPartition(format!("element {x} appears twice")));
                }
                seen[x - 1] = true;
                labels[x - 1] = b;
            }
        }
        Ok(Self::from_labels(&labels))
    }

    /// The one-arc partition p_i = {{i, i+1}, singletons}.
    pub fn generator(i: usize, n: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        Self::from_blocks(n, &[vec![i, i + 1]])
    }

    pub fn n(&self) -> usize {
        self.rgs.len()
    }

    pub fn rgs(&self) -> &[u8] {
        &self.rgs
    }

    pub fn block_count(&self) -> usize {
        self.rgs.iter().map(|&l| l as usize + 1).max().unwrap_or(0)
    }

    /// Blocks as sorted 1-based element lists, ordered by their minima.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for (k, &l) in self.rgs.iter().enumerate() {
            blocks[l as usize].push(k + 1);
        }
        blocks
    }

    pub fn same_block(&self, i: usize, j: usize) -> bool {
        self.rgs[i - 1] == self.rgs[j - 1]
    }

    fn check_n(&self, other: &Self) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        Ok(())
    }

    /// The finest partition coarser than both.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.check_n(other)?;
        let n = self.n();
        let mut uf = UnionFind::new(n);
        for part in [self, other] {
            let mut first: Vec<Option<usize>> = vec![None; n];
            for (k, &l) in part.rgs.iter().enumerate() {
                match first[l as usize] {
                    Some(root) => uf.union(root, k),
                    None => first[l as usize] = Some(k),
                }
            }
        }
        let labels: Vec<usize> = (0..n).map(|k| uf.find(k)).collect();
        Ok(Self::from_labels(&labels))
    }

    /// `self ⪯ other`: every block of `self` lies inside a block of `other`.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.check_n(other)?;
        let mut image: Vec<Option<u8>> = vec![None; self.block_count()];
        for (&a, &b) in self.rgs.iter().zip(&other.rgs) {
            match image[a as usize] {
                Some(x) if x != b => return Ok(false),
                _ => image[a as usize] = Some(b),
            }
        }
        Ok(true)
    }

    /// The image partition wI = {w(I_1), ..., w(I_m)}.
    pub fn permuted(&self, w: &Permutation) -> Result<Self> {
        if w.n() != self.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                found: w.n(),
            });
        }
        let mut labels = vec![0usize; self.n()];
        for (k, &l) in self.rgs.iter().enumerate() {
            labels[w.image(k + 1) - 1] = l as usize;
        }
        Ok(Self::from_labels(&labels))
    }

    /// Pairs (i, j), i < j, of consecutive elements within a block, sorted.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut arcs: Vec<(usize, usize)> = self
            .blocks()
            .iter()
            .flat_map(|b| b.windows(2).map(|w| (w[0], w[1])).collect::<Vec<_>>())
            .collect();
        arcs.sort_unstable();
        arcs
    }

    /// All partitions of {1..n} in lexicographic order of their rgs.
    pub fn enumerate(n: usize) -> Vec<SetPartition> {
        let mut out = Vec::new();
        let mut rgs = vec![0u8; n];
        fn rec(k: usize, max: u8, rgs: &mut Vec<u8>, out: &mut Vec<SetPartition>) {
            if k == rgs.len() {
                out.push(SetPartition { rgs: rgs.clone() });
                return;
            }
            for label in 0..=max + 1 {
                rgs[k] = label;
                rec(k + 1, max.max(label), rgs, out);
            }
        }
        if n == 0 {
            return vec![SetPartition { rgs }];
        }
        rec(1, 0, &mut rgs, &mut out);
        out
    }

    /// Renders the rgs form "0,0,1".
    pub fn rgs_string(&self) -> String {
        self.rgs.iter().map(u8::to_string).collect::<Vec<_>>().join(",")
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Bell numbers b_0..=b_n by the recurrence b_{m+1} = Σ C(m,k) b_k.
pub fn bell_numbers(n: usize) -> Vec<u128> {
    let mut bell = vec![1u128];
    let mut row = vec![1u128];
    for m in 0..n {
        let next: u128 = row.iter().zip(&bell).map(|(c, b)| c * b).sum();
        bell.push(next);
        let mut new_row = vec![1u128; m + 2];
        for k in 1..=m {
            new_row[k] = row[k - 1] + row[k];
        }
        row = new_row;
    }
    bell
}

pub fn bell(n: usize) -> u128 {
    bell_numbers(n)[n]
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| format!("{{{}}}", b.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "{{{}}}", blocks.join(","))
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    /// Accepts the block form `{{1,2},{3}}` or the rgs form `0,0,1`.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let bad = || Error::InvalidPartition(format!("cannot parse {text:?}"));
        if let Some(inner) = text.strip_prefix('{').and_then(|t| t.strip_suffix('}')) {
            let mut blocks = Vec::new();
            for chunk in inner.split('}') {
                let chunk = chunk.trim().trim_start_matches(',').trim();
                if chunk.is_empty() {
                    continue;
                }
                let body = chunk.strip_prefix('{').ok_or_else(bad)?;
                let block: Vec<usize> = body
                    .split(',')
                    .map(|x| x.trim().parse::<usize>().map_err(|_| bad()))
                    .collect::<Result<_>>()?;
                blocks.push(block);
            }
            let n = blocks.iter().map(Vec::len).sum();
            let covered: usize = blocks.iter().flatten().copied().max().unwrap_or(0);
            if covered != n {
                return Err(Error::InvalidPartition(format!("{text:?} does not cover 1..{n}")));
            }
            return Self::from_blocks(n, &blocks);
        }
        let rgs: Vec<u8> = text
            .split(',')
            .map(|x| x.trim().parse::<u8>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        Self::from_rgs(rgs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(text: &str) -> SetPartition {
        text.parse().unwrap()
    }

    #[test]
    fn join_examples() {
        assert_eq!(sp("{{1,2},{3}}").join(&sp("{{1},{2,3}}")).unwrap(), sp("{{1,2,3}}"));
        let i = sp("{{1,3},{2},{4}}");
        assert_eq!(i.join(&SetPartition::unit(4)).unwrap(), i);
        assert_eq!(i.join(&i).unwrap(), i);
        let p1 = SetPartition::generator(1, 3).unwrap();
        let p2 = SetPartition::generator(2, 3).unwrap();
        assert_eq!(p1.join(&p2).unwrap(), SetPartition::full(3));
    }

    #[test]
    fn join_size_mismatch() {
        assert_eq!(
            SetPartition::unit(3).join(&SetPartition::unit(4)),
            Err(Error::SizeMismatch { expected: 3, found: 4 })
        );
    }

    #[test]
    fn permutation_action_examples() {
        let s2 = Permutation::simple(2, 3).unwrap();
        assert_eq!(sp("{{1,2},{3}}").permuted(&s2).unwrap(), sp("{{1,3},{2}}"));
        let i = sp("{{1,3},{2}}");
        assert_eq!(i.permuted(&Permutation::identity(3)).unwrap(), i);
        let w = Permutation::from_word(&[2, 1], 3).unwrap();
        assert_eq!(sp("{{2,3},{1}}").permuted(&w).unwrap(), sp("{{1,2},{3}}"));
    }

    #[test]
    fn arcs_examples() {
        assert_eq!(sp("{{1,2,3}}").arcs(), vec![(1, 2), (2, 3)]);
        assert!(SetPartition::unit(4).arcs().is_empty());
        assert_eq!(sp("{{1,3},{2}}").arcs(), vec![(1, 3)]);
        assert_eq!(sp("{{1,3,4},{2,5}}").arcs(), vec![(1, 3), (2, 5), (3, 4)]);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(SetPartition::enumerate(1).len(), 1);
        assert_eq!(SetPartition::enumerate(3).len(), 5);
        assert_eq!(SetPartition::enumerate(4).len(), 15);
        for n in 1..=7 {
            assert_eq!(SetPartition::enumerate(n).len() as u128, bell(n));
        }
        let p3 = SetPartition::enumerate(3);
        let mut sorted = p3.clone();
        sorted.sort();
        assert_eq!(p3, sorted);
    }

    #[test]
    fn bell_values() {
        assert_eq!(bell_numbers(8), vec![1, 1, 2, 5, 15, 52, 203, 877, 4140]);
    }

    #[test]
    fn order_examples() {
        let unit = SetPartition::unit(3);
        for i in SetPartition::enumerate(3) {
            assert!(unit.leq(&i).unwrap());
        }
        assert!(sp("{{1,2},{3}}").leq(&sp("{{1,2,3}}")).unwrap());
        assert!(!sp("{{1,2},{3}}").leq(&sp("{{1,3},{2}}")).unwrap());
    }

    #[test]
    fn generator_examples() {
        assert_eq!(SetPartition::generator(1, 3).unwrap(), sp("{{1,2},{3}}"));
        assert_eq!(SetPartition::generator(2, 3).unwrap(), sp("{{1},{2,3}}"));
        assert_eq!(SetPartition::generator(3, 3), Err(Error::IndexOutOfRange { index: 3, n: 3 }));
        assert_eq!(SetPartition::generator(0, 3), Err(Error::IndexOutOfRange { index: 0, n: 3 }));
    }

    #[test]
    fn text_forms() {
        let i = sp("{{1,3},{2}}");
        assert_eq!(i.to_string(), "{{1,3},{2}}");
        assert_eq!(i.rgs_string(), "0,1,0");
        assert_eq!(sp("0,1,0"), i);
        assert!("0,2".parse::<SetPartition>().is_err());
        assert!("{{1,2},{4}}".parse::<SetPartition>().is_err());
        assert!("{{1,1}}".parse::<SetPartition>().is_err());
    }
}
