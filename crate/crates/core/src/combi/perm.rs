//! Permutations of {1..n} in one-line notation. Length is the inversion
//! count; reduced words are produced by repeatedly removing the smallest
//! descent.

use std::fmt;

/// A permutation `w` of `{1..n}`, stored as the one-line array
/// `[w(1), ..., w(n)]`. Products compose as functions: `(u * v)(x) = u(v(x))`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((1..=n as u8).collect())
    }

    /// The adjacent transposition `s_i = (i, i+1)`, `1 <= i <= n-1`.
    pub fn adjacent(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "s_{i} undefined in S_{n}");
        let mut v: Vec<u8> = (1..=n as u8).collect();
        v.swap(i - 1, i);
        Perm(v)
    }

    pub fn from_one_line(v: Vec<u8>) -> Self {
        let mut seen = vec![false; v.len()];
        for &x in &v {
            assert!(
                x >= 1 && (x as usize) <= v.len() && !seen[x as usize - 1],
                "not a permutation: {v:?}"
            );
            seen[x as usize - 1] = true;
        }
        Perm(v)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[u8] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// `w(x)` for `1 <= x <= n`.
    pub fn apply(&self, x: usize) -> usize {
        self.0[x - 1] as usize
    }

    /// Function composition `self . other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree());
        Perm(other.0.iter().map(|&x| self.0[x as usize - 1]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0u8; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            v[x as usize - 1] = (i + 1) as u8;
        }
        Perm(v)
    }

    /// Coxeter length = number of inversions.
    pub fn len(&self) -> usize {
        let v = &self.0;
        let mut c = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    c += 1;
                }
            }
        }
        c
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Right multiplication by `s_i`: swaps positions `i`, `i+1`.
    pub fn right_mul_adjacent(&self, i: usize) -> Perm {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Perm(v)
    }

    /// Left multiplication by `s_i`: swaps the values `i`, `i+1`.
    pub fn left_mul_adjacent(&self, i: usize) -> Perm {
        let mut v = self.0.clone();
        for x in v.iter_mut() {
            if *x as usize == i {
                *x = (i + 1) as u8;
            } else if *x as usize == i + 1 {
                *x = i as u8;
            }
        }
        Perm(v)
    }

    /// True iff `l(w s_i) > l(w)`, i.e. `w(i) < w(i+1)`.
    pub fn right_ascent(&self, i: usize) -> bool {
        self.0[i - 1] < self.0[i]
    }

    /// True iff `l(s_i w) > l(w)`, i.e. `w^-1(i) < w^-1(i+1)`.
    pub fn left_ascent(&self, i: usize) -> bool {
        let mut pos_i = 0;
        let mut pos_i1 = 0;
        for (p, &x) in self.0.iter().enumerate() {
            if x as usize == i {
                pos_i = p;
            } else if x as usize == i + 1 {
                pos_i1 = p;
            }
        }
        pos_i < pos_i1
    }

    /// A reduced word `[i_1, ..., i_k]` with `w = s_{i_1} ... s_{i_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.len());
        'outer: loop {
            for i in 1..w.degree() {
                if !w.right_ascent(i) {
                    word.push(i);
                    w = w.right_mul_adjacent(i);
                    continue 'outer;
                }
            }
            break;
        }
        word.reverse();
        word
    }

    pub fn from_word(n: usize, word: &[usize]) -> Perm {
        word.iter()
            .fold(Perm::identity(n), |acc, &i| acc.right_mul_adjacent(i))
    }

    /// All permutations of `{1..n}` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (1..=n as u8).collect();
        loop {
            out.push(Perm(cur.clone()));
            // next lexicographic permutation
            let mut i = match (0..cur.len().saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1])
            {
                Some(i) => i,
                None => break,
            };
            let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            i += 1;
            cur[i..].reverse();
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_and_lengths() {
        let w = Perm::from_word(3, &[1, 2, 1]);
        assert_eq!(w.one_line(), &[3, 2, 1]);
        assert_eq!(w.len(), 3);
        assert_eq!(w.reduced_word().len(), 3);
        assert_eq!(Perm::from_word(3, &w.reduced_word()), w);
        assert_eq!(w.inverse(), w);
        // braid equality s1 s2 s1 = s2 s1 s2
        assert_eq!(Perm::from_word(3, &[2, 1, 2]), w);
    }

    #[test]
    fn compose_applies_right_factor_first() {
        let s1 = Perm::adjacent(3, 1);
        let s2 = Perm::adjacent(3, 2);
        let p = s1.compose(&s2); // s1 . s2
        assert_eq!(p.apply(3), s1.apply(s2.apply(3)));
        assert_eq!(p, Perm::from_word(3, &[1, 2]));
    }

    #[test]
    fn all_permutations_and_reduced_words_round_trip() {
        let perms = Perm::all(4);
        assert_eq!(perms.len(), 24);
        for w in &perms {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.len());
            assert_eq!(&Perm::from_word(4, &word), w);
        }
        assert_eq!(Perm::all(0).len(), 1);
    }
}
