//! Multicompositions and multipartitions with their enumerations and the
//! bracket text format `[[2,1],[1]]`.

use std::fmt;
use std::str::FromStr;

use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// An r-tuple of integer sequences; trailing zeros are trimmed so equality
/// of the stored form is equality of weights.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiComposition {
    comps: Vec<Vec<usize>>,
}

impl MultiComposition {
    pub fn new(mut comps: Vec<Vec<usize>>) -> Self {
        for c in comps.iter_mut() {
            while c.last() == Some(&0) {
                c.pop();
            }
        }
        MultiComposition { comps }
    }

    pub fn empty(r: usize) -> Self {
        MultiComposition {
            comps: vec![Vec::new(); r],
        }
    }

    pub fn num_components(&self) -> usize {
        self.comps.len()
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.comps
    }

    pub fn size(&self) -> usize {
        self.comps.iter().map(|c| c.iter().sum::<usize>()).sum()
    }

    pub fn component_size(&self, k: usize) -> usize {
        self.comps[k - 1].iter().sum()
    }

    /// Number of stored (trimmed) rows of component `k` (1-based).
    pub fn rows(&self, k: usize) -> usize {
        self.comps[k - 1].len()
    }

    /// The entry `mu_i^{(k)}` (1-based in both `i` and `k`); zero beyond the
    /// stored rows.
    pub fn part(&self, i: usize, k: usize) -> usize {
        self.comps[k - 1].get(i - 1).copied().unwrap_or(0)
    }

    pub fn set_part(&mut self, i: usize, k: usize, v: usize) {
        let c = &mut self.comps[k - 1];
        if c.len() < i {
            c.resize(i, 0);
        }
        c[i - 1] = v;
        while c.last() == Some(&0) {
            c.pop();
        }
    }

    /// True iff every trimmed component fits its row bound.
    pub fn fits(&self, m: &[usize]) -> bool {
        self.comps.len() == m.len() && self.comps.iter().zip(m).all(|(c, &mk)| c.len() <= mk)
    }

    pub fn is_partition(&self) -> bool {
        self.comps.iter().all(|c| c.windows(2).all(|w| w[0] >= w[1]))
    }

    pub fn as_partition(&self) -> Option<MultiPartition> {
        if self.is_partition() {
            Some(MultiPartition {
                inner: self.clone(),
            })
        } else {
            None
        }
    }
}

/// A multipartition: each component weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiPartition {
    inner: MultiComposition,
}

impl MultiPartition {
    pub fn new(comps: Vec<Vec<usize>>) -> Self {
        let inner = MultiComposition::new(comps);
        assert!(
            inner.is_partition(),
            "components must be weakly decreasing: {inner}"
        );
        MultiPartition { inner }
    }

    pub fn empty(r: usize) -> Self {
        MultiPartition {
            inner: MultiComposition::empty(r),
        }
    }

    pub fn as_composition(&self) -> &MultiComposition {
        &self.inner
    }

    pub fn num_components(&self) -> usize {
        self.inner.num_components()
    }

    pub fn components(&self) -> &[Vec<usize>] {
        self.inner.components()
    }

    pub fn size(&self) -> usize {
        self.inner.size()
    }

    pub fn rows(&self, k: usize) -> usize {
        self.inner.rows(k)
    }

    pub fn part(&self, i: usize, k: usize) -> usize {
        self.inner.part(i, k)
    }

    pub fn fits(&self, m: &[usize]) -> bool {
        self.inner.fits(m)
    }
}

impl fmt::Display for MultiComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.comps.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.inner.fmt(f)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseShapeError {
    #[error("malformed shape string `{0}`")]
    Malformed(String),
    #[error("component {0} is not weakly decreasing")]
    NotAPartition(usize),
}

impl FromStr for MultiComposition {
    type Err = ParseShapeError;

    /// Parses `[[2,1],[1]]`; the empty component is `[]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseShapeError::Malformed(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(bad)?;
        let mut comps = Vec::new();
        let mut rest = inner;
        while !rest.is_empty() {
            let body = rest.strip_prefix('[').ok_or_else(bad)?;
            let end = body.find(']').ok_or_else(bad)?;
            let (list, tail) = body.split_at(end);
            let mut parts = Vec::new();
            if !list.is_empty() {
                for tok in list.split(',') {
                    parts.push(tok.parse::<usize>().map_err(|_| bad())?);
                }
            }
            comps.push(parts);
            rest = &tail[1..];
            if let Some(stripped) = rest.strip_prefix(',') {
                if stripped.is_empty() {
                    return Err(bad());
                }
                rest = stripped;
            } else if !rest.is_empty() {
                return Err(bad());
            }
        }
        if comps.is_empty() {
            return Err(bad());
        }
        Ok(MultiComposition::new(comps))
    }
}

impl FromStr for MultiPartition {
    type Err = ParseShapeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let c: MultiComposition = s.parse()?;
        for (k, comp) in c.components().iter().enumerate() {
            if !comp.windows(2).all(|w| w[0] >= w[1]) {
                return Err(ParseShapeError::NotAPartition(k + 1));
            }
        }
        Ok(MultiPartition { inner: c })
    }
}

// JSON mirror of the bracket format: nested arrays.
impl Serialize for MultiComposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.comps.len()))?;
        for c in &self.comps {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

impl Serialize for MultiPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.inner.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MultiComposition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = MultiComposition;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "a sequence of integer sequences")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Self::Value, A::Error> {
                let mut comps = Vec::new();
                while let Some(c) = seq.next_element::<Vec<usize>>()? {
                    comps.push(c);
                }
                Ok(MultiComposition::new(comps))
            }
        }
        deserializer.deserialize_seq(V)
    }
}

impl<'de> Deserialize<'de> for MultiPartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let c = MultiComposition::deserialize(deserializer)?;
        c.as_partition()
            .ok_or_else(|| serde::de::Error::custom("components must be weakly decreasing"))
    }
}

/// All partitions of `n`, lexicographically descending: (n), (n-1,1), ...
pub fn partitions_of(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p);
            rec(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All r-partitions of `n`. Component sizes are taken largest-first on the
/// leftmost component, and each component runs through its partitions in
/// descending lexicographic order, so the whole list is deterministic.
pub fn enumerate_multipartitions(n: usize, r: usize) -> Vec<MultiPartition> {
    assert!(r >= 1);
    fn rec(n: usize, k: usize, r: usize, acc: &mut Vec<Vec<usize>>, out: &mut Vec<MultiPartition>) {
        if k == r {
            if n == 0 {
                out.push(MultiPartition::new(acc.clone()));
            }
            return;
        }
        for size in (0..=n).rev() {
            if k == r - 1 && size != n {
                continue;
            }
            for p in partitions_of(size) {
                acc.push(p);
                rec(n - size, k + 1, r, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, 0, r, &mut Vec::new(), &mut out);
    out
}

/// All weights in `Lambda_{n,r}(m)`: compositions of `n` laid out in the
/// row slots prescribed by `m`, in descending lexicographic order of the
/// concatenated entry vector.
pub fn enumerate_weights(n: usize, r: usize, m: &[usize]) -> Vec<MultiComposition> {
    assert_eq!(m.len(), r, "bounds length must equal r");
    let slots: usize = m.iter().sum();
    fn rec(n: usize, slot: usize, slots: usize, flat: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slot == slots {
            if n == 0 {
                out.push(flat.clone());
            }
            return;
        }
        let remaining_slots = slots - slot - 1;
        for v in (0..=n).rev() {
            if remaining_slots == 0 && v != n {
                continue;
            }
            flat.push(v);
            rec(n - v, slot + 1, slots, flat, out);
            flat.pop();
        }
    }
    let mut flats = Vec::new();
    rec(n, 0, slots, &mut Vec::new(), &mut flats);
    flats
        .into_iter()
        .map(|flat| {
            let mut comps = Vec::with_capacity(r);
            let mut pos = 0;
            for &mk in m {
                comps.push(flat[pos..pos + mk].to_vec());
                pos += mk;
            }
            MultiComposition::new(comps)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(s: &str) -> MultiPartition {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_matches_documented_order() {
        assert_eq!(
            enumerate_multipartitions(0, 3),
            vec![MultiPartition::empty(3)]
        );
        assert_eq!(enumerate_multipartitions(1, 3).len(), 3);
        let two_two = enumerate_multipartitions(2, 2);
        let expected: Vec<MultiPartition> = ["[[2],[]]", "[[1,1],[]]", "[[1],[1]]", "[[],[2]]", "[[],[1,1]]"]
            .iter()
            .map(|s| mp(s))
            .collect();
        assert_eq!(two_two, expected);
    }

    #[test]
    fn weights_cover_the_simplex() {
        let w = enumerate_weights(2, 1, &[3]);
        assert_eq!(w.len(), 6);
        assert_eq!(w[0], "[[2,0,0]]".parse::<MultiComposition>().unwrap());
        assert_eq!(w[5], "[[0,0,2]]".parse::<MultiComposition>().unwrap());
        // |Lambda_{3,2}(3,3)| = C(8,5)
        assert_eq!(enumerate_weights(3, 2, &[3, 3]).len(), 56);
        for x in enumerate_weights(3, 2, &[3, 3]) {
            assert_eq!(x.size(), 3);
            assert!(x.fits(&[3, 3]));
        }
    }

    #[test]
    fn text_format_round_trips() {
        for s in ["[[2,1],[1]]", "[[],[]]", "[[1],[]]", "[[3,3,1],[2],[1,1]]"] {
            let c: MultiComposition = s.parse().unwrap();
            assert_eq!(c.to_string(), s);
        }
        // trailing zeros trim away
        let c: MultiComposition = "[[2,0],[1,0,0]]".parse().unwrap();
        assert_eq!(c.to_string(), "[[2],[1]]");
        assert!("[[2,1],2]".parse::<MultiComposition>().is_err());
        assert!("".parse::<MultiComposition>().is_err());
        assert!("[[1,2]]".parse::<MultiPartition>().is_err());
    }

    #[test]
    fn json_mirror() {
        let c = mp("[[2,1],[1]]");
        assert_eq!(serde_json::to_string(&c).unwrap(), "[[2,1],[1]]");
        let back: MultiPartition = serde_json::from_str("[[2,1],[1]]").unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn part_access_and_bounds() {
        let c = mp("[[2,1],[1]]");
        assert_eq!(c.part(1, 1), 2);
        assert_eq!(c.part(3, 1), 0);
        assert_eq!(c.part(1, 2), 1);
        assert_eq!(c.size(), 4);
        assert!(c.fits(&[2, 1]));
        assert!(!c.fits(&[1, 1]));
    }
}
