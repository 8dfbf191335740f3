//! The ground ring `Z[q, q^-1, Q_1, ..., Q_r]` in canonical form.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exponent pattern of one term: an integer power of `q` and non-negative
/// powers of each cyclotomic parameter `Q_k`. Terms are ordered
/// lexicographically on `(q_exp, param_exp[0], ..., param_exp[r-1])`, which
/// fixes the canonical serialization order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub q_exp: i32,
    pub param_exp: Vec<u16>,
}

impl Monomial {
    pub fn constant(r: usize) -> Self {
        Monomial {
            q_exp: 0,
            param_exp: vec![0; r],
        }
    }

    fn is_constant(&self) -> bool {
        self.q_exp == 0 && self.param_exp.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            q_exp: self.q_exp + other.q_exp,
            param_exp: self
                .param_exp
                .iter()
                .zip(&other.param_exp)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// An element of `Z[q, q^-1, Q_1, ..., Q_r]`.
///
/// Invariants: no stored term has a zero coefficient, and the number of
/// parameter slots of every monomial equals `num_params`. Two elements are
/// equal iff their term maps are identical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroundElement {
    num_params: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl GroundElement {
    pub fn zero(r: usize) -> Self {
        GroundElement {
            num_params: r,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(r: usize) -> Self {
        Self::from_int(r, 1)
    }

    pub fn from_int(r: usize, v: i64) -> Self {
        Self::from_bigint(r, BigInt::from(v))
    }

    pub fn from_bigint(r: usize, v: BigInt) -> Self {
        Self::monomial(r, Monomial::constant(r), v)
    }

    /// A single term `coeff * monomial`; zero coefficients collapse to zero.
    pub fn monomial(r: usize, mono: Monomial, coeff: BigInt) -> Self {
        assert_eq!(mono.param_exp.len(), r, "monomial arity mismatch");
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mono, coeff);
        }
        GroundElement {
            num_params: r,
            terms,
        }
    }

    /// `q^k`.
    pub fn q_power(r: usize, k: i32) -> Self {
        Self::monomial(
            r,
            Monomial {
                q_exp: k,
                param_exp: vec![0; r],
            },
            BigInt::one(),
        )
    }

    /// The parameter `Q_k` (1-based).
    pub fn parameter(r: usize, k: usize) -> Self {
        assert!(k >= 1 && k <= r, "parameter index {k} out of 1..={r}");
        let mut exp = vec![0u16; r];
        exp[k - 1] = 1;
        Self::monomial(
            r,
            Monomial {
                q_exp: 0,
                param_exp: exp,
            },
            BigInt::one(),
        )
    }

    pub fn num_params(&self) -> usize {
        self.num_params
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, c)| m.is_constant() && c.is_one())
                .unwrap_or(false)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, mono: Monomial, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&mono);
                }
            }
            None => {
                self.terms.insert(mono, coeff.clone());
            }
        }
    }

    pub fn scale_int(&self, c: &BigInt) -> GroundElement {
        if c.is_zero() {
            return GroundElement::zero(self.num_params);
        }
        GroundElement {
            num_params: self.num_params,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Multiply by `q^k`.
    pub fn shift_q(&self, k: i32) -> GroundElement {
        GroundElement {
            num_params: self.num_params,
            terms: self
                .terms
                .iter()
                .map(|(m, v)| {
                    (
                        Monomial {
                            q_exp: m.q_exp + k,
                            param_exp: m.param_exp.clone(),
                        },
                        v.clone(),
                    )
                })
                .collect(),
        }
    }

    /// GCD of the integer coefficients (non-negative; 0 for the zero element).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Componentwise minimum of all exponent vectors, i.e. the largest
    /// monomial dividing every term. Zero element gives the trivial monomial.
    pub fn monomial_gcd(&self) -> Monomial {
        let mut it = self.terms.keys();
        let first = match it.next() {
            Some(m) => m.clone(),
            None => return Monomial::constant(self.num_params),
        };
        it.fold(first, |acc, m| Monomial {
            q_exp: acc.q_exp.min(m.q_exp),
            param_exp: acc
                .param_exp
                .iter()
                .zip(&m.param_exp)
                .map(|(a, b)| *a.min(b))
                .collect(),
        })
    }

    /// Exact division by `c * mono`; both must divide every term.
    pub(crate) fn div_term_exact(&self, mono: &Monomial, c: &BigInt) -> GroundElement {
        assert!(!c.is_zero());
        GroundElement {
            num_params: self.num_params,
            terms: self
                .terms
                .iter()
                .map(|(m, v)| {
                    let (quot, rem) = v.div_rem(c);
                    assert!(rem.is_zero(), "inexact coefficient division");
                    let exp: Vec<u16> = m
                        .param_exp
                        .iter()
                        .zip(&mono.param_exp)
                        .map(|(a, b)| {
                            assert!(a >= b, "inexact monomial division");
                            a - b
                        })
                        .collect();
                    (
                        Monomial {
                            q_exp: m.q_exp - mono.q_exp,
                            param_exp: exp,
                        },
                        quot,
                    )
                })
                .collect(),
        }
    }

    /// Sign of the lexicographically largest term, used to normalize
    /// fraction denominators. Zero gives 0.
    pub(crate) fn leading_sign(&self) -> i8 {
        match self.terms.iter().next_back() {
            Some((_, c)) => {
                if c.is_negative() {
                    -1
                } else {
                    1
                }
            }
            None => 0,
        }
    }

    /// Evaluate at an exact point. The root-of-unity tag computes in
    /// `Z[q, q^-1]/(1 + q^2 + ... + (q^2)^{e-1})`, where `q^{2e} = 1`.
    pub fn specialize(
        &self,
        q: &QValue,
        params: &[BigRational],
    ) -> Result<Scalar, SpecializeError> {
        if params.len() != self.num_params {
            return Err(SpecializeError::ParamCount {
                expected: self.num_params,
                got: params.len(),
            });
        }
        match q {
            QValue::Rational(qv) => {
                if qv.is_zero() {
                    return Err(SpecializeError::NonInvertibleQ);
                }
                let mut acc = BigRational::zero();
                for (m, c) in &self.terms {
                    let mut term = BigRational::from_integer(c.clone());
                    term *= rational_pow(qv, m.q_exp as i64);
                    for (pv, &e) in params.iter().zip(&m.param_exp) {
                        term *= rational_pow_nonneg(pv, e as u32);
                    }
                    acc += term;
                }
                Ok(Scalar::Rational(acc))
            }
            QValue::RootOfUnity { e } => {
                let e = *e;
                assert!(e >= 2, "root-of-unity order must be at least 2");
                let period = 2 * e as i64;
                // accumulate on exponents normalized into [0, 2e)
                let mut raw = vec![BigRational::zero(); period as usize];
                for (m, c) in &self.terms {
                    let mut coeff = BigRational::from_integer(c.clone());
                    for (pv, &pe) in params.iter().zip(&m.param_exp) {
                        coeff *= rational_pow_nonneg(pv, pe as u32);
                    }
                    let idx = (m.q_exp as i64).rem_euclid(period) as usize;
                    raw[idx] += coeff;
                }
                // reduce modulo 1 + q^2 + ... + q^{2e-2} (monic of degree 2e-2);
                // q^d = -(q^{d-2e+2} + q^{d-2e+4} + ... + q^{d-2}) for d >= 2e-2
                let top = (period - 2) as usize;
                for d in ((top)..(period as usize)).rev() {
                    if raw[d].is_zero() {
                        continue;
                    }
                    let c = std::mem::replace(&mut raw[d], BigRational::zero());
                    for j in 0..(e as usize - 1) {
                        raw[d - top + 2 * j] -= &c;
                    }
                }
                raw.truncate(top);
                Ok(Scalar::Cyclotomic { e, coeffs: raw })
            }
        }
    }

    /// Parse the canonical string form, e.g. `"q^-2*Q1 + 3*q^0"`.
    pub fn parse(s: &str, r: usize) -> Result<GroundElement, ParseGroundError> {
        parse_ground(s, r)
    }
}

fn rational_pow(base: &BigRational, e: i64) -> BigRational {
    if e >= 0 {
        rational_pow_nonneg(base, e as u32)
    } else {
        rational_pow_nonneg(base, (-e) as u32).recip()
    }
}

fn rational_pow_nonneg(base: &BigRational, e: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}

/// Evaluation point for `q`.
#[derive(Clone, Debug)]
pub enum QValue {
    Rational(BigRational),
    /// `q^2` a primitive e-th root of unity: arithmetic happens modulo
    /// `1 + q^2 + ... + (q^2)^{e-1}`.
    RootOfUnity { e: u32 },
}

/// Result of an exact evaluation.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Rational(BigRational),
    /// Residue class in `Q[q]/(1 + q^2 + ... + q^{2e-2})`, coefficients of
    /// `q^0 .. q^{2e-3}`.
    Cyclotomic { e: u32, coeffs: Vec<BigRational> },
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(v) => v.is_zero(),
            Scalar::Cyclotomic { coeffs, .. } => coeffs.iter().all(|c| c.is_zero()),
        }
    }
}

#[derive(Debug, Error)]
pub enum SpecializeError {
    #[error("q must be invertible; got 0")]
    NonInvertibleQ,
    #[error("expected {expected} parameter values, got {got}")]
    ParamCount { expected: usize, got: usize },
    #[error("denominator specializes to zero")]
    ZeroDenominator,
    #[error("denominator does not specialize to an invertible scalar")]
    NonInvertibleDenominator,
}

impl Add for &GroundElement {
    type Output = GroundElement;
    fn add(self, rhs: &GroundElement) -> GroundElement {
        assert_eq!(self.num_params, rhs.num_params, "ground ring mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Sub for &GroundElement {
    type Output = GroundElement;
    fn sub(self, rhs: &GroundElement) -> GroundElement {
        assert_eq!(self.num_params, rhs.num_params, "ground ring mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &(-c));
        }
        out
    }
}

impl AddAssign<&GroundElement> for GroundElement {
    fn add_assign(&mut self, rhs: &GroundElement) {
        assert_eq!(self.num_params, rhs.num_params, "ground ring mismatch");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c);
        }
    }
}

impl SubAssign<&GroundElement> for GroundElement {
    fn sub_assign(&mut self, rhs: &GroundElement) {
        assert_eq!(self.num_params, rhs.num_params, "ground ring mismatch");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), &(-c));
        }
    }
}

impl Neg for &GroundElement {
    type Output = GroundElement;
    fn neg(self) -> GroundElement {
        GroundElement {
            num_params: self.num_params,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &GroundElement {
    type Output = GroundElement;
    fn mul(self, rhs: &GroundElement) -> GroundElement {
        assert_eq!(self.num_params, rhs.num_params, "ground ring mismatch");
        let mut out = GroundElement::zero(self.num_params);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }
}

// Canonical text form. Terms appear in ascending lexicographic order of
// their exponent vectors; a term with no variable factors prints as
// `<coeff>*q^0` so that the form is trivially parseable.
impl fmt::Display for GroundElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if m.q_exp == 1 {
                factors.push("q".to_string());
            } else if m.q_exp != 0 {
                factors.push(format!("q^{}", m.q_exp));
            }
            for (k, &e) in m.param_exp.iter().enumerate() {
                if e == 1 {
                    factors.push(format!("Q{}", k + 1));
                } else if e > 1 {
                    factors.push(format!("Q{}^{}", k + 1, e));
                }
            }
            if factors.is_empty() {
                write!(f, "{}*q^0", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseGroundError {
    #[error("empty term at position {0}")]
    EmptyTerm(usize),
    #[error("bad factor `{0}`")]
    BadFactor(String),
    #[error("parameter index {0} out of range for {1} parameters")]
    ParamOutOfRange(usize, usize),
}

fn parse_ground(s: &str, r: usize) -> Result<GroundElement, ParseGroundError> {
    let s = s.trim();
    let mut out = GroundElement::zero(r);
    if s == "0" {
        return Ok(out);
    }
    // split into signed terms on top-level " + " / " - ", with an optional
    // leading "-"
    let mut rest = s;
    let mut sign = 1i64;
    if let Some(stripped) = rest.strip_prefix('-') {
        sign = -1;
        rest = stripped.trim_start();
    }
    loop {
        let (term, next) = match (rest.find(" + "), rest.find(" - ")) {
            (Some(p), Some(m)) if p < m => (&rest[..p], Some((1i64, &rest[p + 3..]))),
            (Some(_), Some(m)) => (&rest[..m], Some((-1i64, &rest[m + 3..]))),
            (Some(p), None) => (&rest[..p], Some((1i64, &rest[p + 3..]))),
            (None, Some(m)) => (&rest[..m], Some((-1i64, &rest[m + 3..]))),
            (None, None) => (rest, None),
        };
        out += &parse_term(term.trim(), r, sign)?;
        match next {
            Some((sg, nx)) => {
                sign = sg;
                rest = nx;
            }
            None => break,
        }
    }
    Ok(out)
}

fn parse_term(t: &str, r: usize, sign: i64) -> Result<GroundElement, ParseGroundError> {
    if t.is_empty() {
        return Err(ParseGroundError::EmptyTerm(0));
    }
    let mut coeff = BigInt::from(sign);
    let mut mono = Monomial::constant(r);
    for factor in t.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(ParseGroundError::BadFactor(t.to_string()));
        }
        if let Ok(v) = factor.parse::<BigInt>() {
            coeff *= v;
        } else if let Some(rest) = factor.strip_prefix('q') {
            if rest.is_empty() {
                mono.q_exp += 1;
            } else if let Some(e) = rest.strip_prefix('^') {
                let e: i32 = e
                    .parse()
                    .map_err(|_| ParseGroundError::BadFactor(factor.to_string()))?;
                mono.q_exp += e;
            } else {
                return Err(ParseGroundError::BadFactor(factor.to_string()));
            }
        } else if let Some(rest) = factor.strip_prefix('Q') {
            let (idx_str, exp) = match rest.find('^') {
                Some(pos) => {
                    let e: u16 = rest[pos + 1..]
                        .parse()
                        .map_err(|_| ParseGroundError::BadFactor(factor.to_string()))?;
                    (&rest[..pos], e)
                }
                None => (rest, 1),
            };
            let idx: usize = idx_str
                .parse()
                .map_err(|_| ParseGroundError::BadFactor(factor.to_string()))?;
            if idx == 0 || idx > r {
                return Err(ParseGroundError::ParamOutOfRange(idx, r));
            }
            mono.param_exp[idx - 1] += exp;
        } else {
            return Err(ParseGroundError::BadFactor(factor.to_string()));
        }
    }
    Ok(GroundElement::monomial(r, mono, coeff))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_string_matches_documented_example() {
        // q^-2*Q1 + 3
        let x = &(&GroundElement::q_power(1, -2) * &GroundElement::parameter(1, 1))
            + &GroundElement::from_int(1, 3);
        assert_eq!(x.to_string(), "q^-2*Q1 + 3*q^0");
        assert_eq!(GroundElement::parse("q^-2*Q1 + 3*q^0", 1).unwrap(), x);
    }

    #[test]
    fn display_edge_cases() {
        assert_eq!(GroundElement::zero(2).to_string(), "0");
        assert_eq!(GroundElement::one(2).to_string(), "1*q^0");
        assert_eq!(GroundElement::from_int(2, -1).to_string(), "-1*q^0");
        let x = -&(&GroundElement::q_power(1, 2) * &GroundElement::parameter(1, 1));
        assert_eq!(x.to_string(), "-q^2*Q1");
        let y = &GroundElement::q_power(1, 1) - &GroundElement::q_power(1, -1);
        assert_eq!(y.to_string(), "-q^-1 + q");
        for s in ["0", "1*q^0", "-1*q^0", "-q^2*Q1", "-q^-1 + q", "Q2^3"] {
            let parsed = GroundElement::parse(s, 2).unwrap();
            assert_eq!(parsed.to_string(), s, "round trip through {s}");
        }
    }

    fn arb_ground(r: usize) -> impl Strategy<Value = GroundElement> {
        proptest::collection::vec(
            (
                -4i32..=4,
                proptest::collection::vec(0u16..=2, r),
                -5i64..=5,
            ),
            0..5,
        )
        .prop_map(move |terms| {
            let mut out = GroundElement::zero(r);
            for (qe, pe, c) in terms {
                out += &GroundElement::monomial(
                    r,
                    Monomial {
                        q_exp: qe,
                        param_exp: pe,
                    },
                    BigInt::from(c),
                );
            }
            out
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_ground(2), b in arb_ground(2), c in arb_ground(2)) {
            // associativity and commutativity of + and *
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            // distributivity
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            // units
            prop_assert_eq!(&a + &GroundElement::zero(2), a.clone());
            prop_assert_eq!(&a * &GroundElement::one(2), a.clone());
        }

        #[test]
        fn display_parse_round_trip(a in arb_ground(3)) {
            let s = a.to_string();
            let back = GroundElement::parse(&s, 3).unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
