//! Basis words `L_1^{a_1} ... L_n^{a_n} T_w` and sparse elements over them.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::combi::Perm;
use crate::exactalg::GroundElement;

/// A normal-form basis word: the Jucys-Murphy exponents `(a_1, ..., a_n)`
/// with `0 <= a_i <= r-1`, followed by a Hecke basis element `T_w`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AKWord {
    pub lexp: Vec<u8>,
    pub perm: Perm,
}

impl AKWord {
    pub fn identity(n: usize) -> Self {
        AKWord {
            lexp: vec![0; n],
            perm: Perm::identity(n),
        }
    }

    pub fn from_perm(perm: Perm) -> Self {
        AKWord {
            lexp: vec![0; perm.degree()],
            perm,
        }
    }

    pub fn l_degree(&self) -> usize {
        self.lexp.iter().map(|&a| a as usize).sum()
    }
}

impl fmt::Display for AKWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, &a) in self.lexp.iter().enumerate() {
            if a == 1 {
                write!(f, "L{}", i + 1)?;
                wrote = true;
            } else if a > 1 {
                write!(f, "L{}^{}", i + 1, a)?;
                wrote = true;
            }
        }
        if !self.perm.is_identity() {
            write!(f, "T{}", self.perm)?;
            wrote = true;
        }
        if !wrote {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// An element of the Ariki-Koike algebra in normal form: a finite map from
/// basis words to non-zero ground-ring coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AKElement {
    n: usize,
    r: usize,
    terms: BTreeMap<AKWord, GroundElement>,
}

impl AKElement {
    pub fn zero(n: usize, r: usize) -> Self {
        AKElement {
            n,
            r,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(n: usize, r: usize) -> Self {
        Self::from_word(n, r, AKWord::identity(n), GroundElement::one(r))
    }

    pub fn from_word(n: usize, r: usize, word: AKWord, coeff: GroundElement) -> Self {
        debug_assert_eq!(word.lexp.len(), n);
        debug_assert_eq!(word.perm.degree(), n);
        debug_assert!(word.lexp.iter().all(|&a| (a as usize) < r.max(1)));
        let mut out = Self::zero(n, r);
        out.add_term(word, &coeff);
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AKWord, &GroundElement)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &AKWord) -> GroundElement {
        self.terms
            .get(word)
            .cloned()
            .unwrap_or_else(|| GroundElement::zero(self.r))
    }

    pub fn add_term(&mut self, word: AKWord, coeff: &GroundElement) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&word) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&word);
                }
            }
            None => {
                self.terms.insert(word, coeff.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &AKElement, scale: &GroundElement) {
        debug_assert_eq!((self.n, self.r), (other.n, other.r));
        if scale.is_zero() {
            return;
        }
        for (w, c) in &other.terms {
            self.add_term(w.clone(), &(c * scale));
        }
    }

    pub fn add(&self, other: &AKElement) -> AKElement {
        let mut out = self.clone();
        out.add_scaled(other, &GroundElement::one(self.r));
        out
    }

    pub fn sub(&self, other: &AKElement) -> AKElement {
        let mut out = self.clone();
        out.add_scaled(other, &GroundElement::from_int(self.r, -1));
        out
    }

    pub fn scale(&self, c: &GroundElement) -> AKElement {
        let mut out = Self::zero(self.n, self.r);
        out.add_scaled(self, c);
        out
    }

    pub fn neg(&self) -> AKElement {
        self.scale(&GroundElement::from_int(self.r, -1))
    }
}

impl fmt::Display for AKElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{w}")?;
        }
        Ok(())
    }
}

// JSON dump: a list of {lexp, perm, coeff} with the canonical ground string.
impl Serialize for AKElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            lexp: &'a [u8],
            perm: &'a [u8],
            coeff: String,
        }
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (w, c) in &self.terms {
            seq.serialize_element(&Term {
                lexp: &w.lexp,
                perm: w.perm.one_line(),
                coeff: c.to_string(),
            })?;
        }
        seq.end()
    }
}
