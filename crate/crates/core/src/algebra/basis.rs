//! Index tables for the basis {E_I T_w : I ∈ P_n, w ∈ S_n}.
//!
//! Partitions are indexed in rgs-lexicographic order and permutations in
//! one-line lexicographic order; a basis key orders by partition first, which
//! is also the rendering order of algebra elements.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::SetPartition;
use crate::permutation::Permutation;

/// Compact handle for the basis element E_I T_w.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct BasisKey {
    pub partition: u32,
    pub perm: u32,
}

/// A basis element spelled out as (I, w).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct BasisElement {
    pub partition: SetPartition,
    pub perm: Permutation,
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E{}T{}", self.partition, self.perm)
    }
}

#[derive(Debug)]
pub struct BasisTables {
    n: usize,
    partitions: Vec<SetPartition>,
    partition_index: HashMap<SetPartition, u32>,
    perms: Vec<Permutation>,
    perm_index: HashMap<Permutation, u32>,
    join: Vec<u32>,
    act: Vec<u32>,
    right_s: Vec<(u32, bool)>,
    left_s: Vec<(u32, bool)>,
    generators: Vec<u32>,
    words: Vec<Vec<usize>>,
    lengths: Vec<usize>,
    unit: u32,
}

impl BasisTables {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > 6 {
            return Err(Error::Unsupported {
                n,
                reason: "basis tables are built for 1 <= n <= 6".into(),
            });
        }
        let partitions = SetPartition::enumerate(n);
        let perms = Permutation::enumerate(n);
        let partition_index: HashMap<_, _> =
            partitions.iter().enumerate().map(|(k, p)| (p.clone(), k as u32)).collect();
        let perm_index: HashMap<_, _> = perms.iter().enumerate().map(|(k, w)| (w.clone(), k as u32)).collect();
        let b = partitions.len();

        let mut join = Vec::with_capacity(b * b);
        for p in &partitions {
            for q in &partitions {
                join.push(partition_index[&p.join(q)?]);
            }
        }
        let mut act = Vec::with_capacity(perms.len() * b);
        for w in &perms {
            for p in &partitions {
                act.push(partition_index[&p.permuted(w)?]);
            }
        }
        let mut right_s = Vec::with_capacity(perms.len() * (n - 1));
        let mut left_s = Vec::with_capacity(perms.len() * (n - 1));
        for w in &perms {
            for i in 1..n {
                let s = Permutation::simple(i, n)?;
                let ws = w.compose(&s)?;
                let sw = s.compose(w)?;
                right_s.push((perm_index[&ws], ws.length() > w.length()));
                left_s.push((perm_index[&sw], sw.length() > w.length()));
            }
        }
        let generators = (1..n)
            .map(|i| SetPartition::generator(i, n).map(|p| partition_index[&p]))
            .collect::<Result<_>>()?;
        let words = perms.iter().map(Permutation::reduced_word).collect();
        let lengths = perms.iter().map(Permutation::length).collect();
        let unit = partition_index[&SetPartition::unit(n)];
        Ok(BasisTables {
            n,
            unit,
            partitions,
            partition_index,
            perms,
            perm_index,
            join,
            act,
            right_s,
            left_s,
            generators,
            words,
            lengths,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partition_count(&self) -> usize {
        self.partitions.len()
    }

    pub fn perm_count(&self) -> usize {
        self.perms.len()
    }

    /// b_n · n!
    pub fn dim(&self) -> usize {
        self.partitions.len() * self.perms.len()
    }

    pub fn partitions(&self) -> &[SetPartition] {
        &self.partitions
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn partition(&self, idx: u32) -> &SetPartition {
        &self.partitions[idx as usize]
    }

    pub fn perm(&self, idx: u32) -> &Permutation {
        &self.perms[idx as usize]
    }

    pub fn partition_idx(&self, p: &SetPartition) -> Result<u32> {
        self.partition_index.get(p).copied().ok_or(Error::SizeMismatch {
            expected: self.n,
            found: p.n(),
        })
    }

    pub fn perm_idx(&self, w: &Permutation) -> Result<u32> {
        self.perm_index.get(w).copied().ok_or(Error::SizeMismatch {
            expected: self.n,
            found: w.n(),
        })
    }

    /// Index of the all-singletons partition, i.e. E_I = 1.
    pub fn unit_partition(&self) -> u32 {
        self.unit
    }

    pub fn identity_perm(&self) -> u32 {
        0
    }

    pub fn join(&self, a: u32, b: u32) -> u32 {
        self.join[a as usize * self.partitions.len() + b as usize]
    }

    /// Index of wI.
    pub fn act(&self, w: u32, p: u32) -> u32 {
        self.act[w as usize * self.partitions.len() + p as usize]
    }

    /// (w·s_i, whether the length increases).
    pub fn right_s(&self, w: u32, i: usize) -> (u32, bool) {
        self.right_s[w as usize * (self.n - 1) + i - 1]
    }

    /// (s_i·w, whether the length increases).
    pub fn left_s(&self, w: u32, i: usize) -> (u32, bool) {
        self.left_s[w as usize * (self.n - 1) + i - 1]
    }

    /// Index of the one-arc partition p_i.
    pub fn generator(&self, i: usize) -> u32 {
        self.generators[i - 1]
    }

    pub fn word(&self, w: u32) -> &[usize] {
        &self.words[w as usize]
    }

    pub fn length(&self, w: u32) -> usize {
        self.lengths[w as usize]
    }

    pub fn key_index(&self, key: BasisKey) -> usize {
        key.partition as usize * self.perms.len() + key.perm as usize
    }

    pub fn key_at(&self, index: usize) -> BasisKey {
        BasisKey {
            partition: (index / self.perms.len()) as u32,
            perm: (index % self.perms.len()) as u32,
        }
    }

    pub fn keys(&self) -> impl Iterator<Item = BasisKey> + '_ {
        (0..self.dim()).map(|k| self.key_at(k))
    }

    pub fn key(&self, element: &BasisElement) -> Result<BasisKey> {
        Ok(BasisKey {
            partition: self.partition_idx(&element.partition)?,
            perm: self.perm_idx(&element.perm)?,
        })
    }

    pub fn element(&self, key: BasisKey) -> BasisElement {
        BasisElement {
            partition: self.partition(key.partition).clone(),
            perm: self.perm(key.perm).clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(BasisTables::new(1).unwrap().dim(), 1);
        assert_eq!(BasisTables::new(2).unwrap().dim(), 4);
        assert_eq!(BasisTables::new(3).unwrap().dim(), 30);
        assert_eq!(BasisTables::new(4).unwrap().dim(), 360);
        assert!(BasisTables::new(0).is_err());
    }

    #[test]
    fn key_round_trip() {
        let t = BasisTables::new(3).unwrap();
        for idx in 0..t.dim() {
            let key = t.key_at(idx);
            assert_eq!(t.key_index(key), idx);
            assert_eq!(t.key(&t.element(key)).unwrap(), key);
        }
        assert_eq!(t.partition(t.unit_partition()), &SetPartition::unit(3));
        assert_eq!(t.perm(t.identity_perm()), &Permutation::identity(3));
    }

    #[test]
    fn key_order_follows_partition_then_permutation() {
        let t = BasisTables::new(3).unwrap();
        let elements: Vec<BasisElement> = t.keys().map(|k| t.element(k)).collect();
        let mut sorted = elements.clone();
        sorted.sort();
        assert_eq!(elements, sorted);
    }
}
