//! The fraction field of the ground ring, needed for divided powers
//! `E^(l)/[l]!`. Fractions are reduced by integer content and by the
//! monomial GCD of numerator and denominator; full polynomial GCDs are not
//! computed, so equality is tested by cross-multiplication.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use super::ground::{GroundElement, QValue, Scalar, SpecializeError};

#[derive(Clone, Debug)]
pub struct FieldElement {
    num: GroundElement,
    den: GroundElement,
}

impl FieldElement {
    /// `num / den`. Panics if `den` is zero.
    pub fn new(num: GroundElement, den: GroundElement) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        assert_eq!(num.num_params(), den.num_params(), "ground ring mismatch");
        let mut out = FieldElement { num, den };
        out.reduce();
        out
    }

    pub fn from_ground(x: GroundElement) -> Self {
        let r = x.num_params();
        FieldElement {
            num: x,
            den: GroundElement::one(r),
        }
    }

    pub fn zero(r: usize) -> Self {
        Self::from_ground(GroundElement::zero(r))
    }

    pub fn one(r: usize) -> Self {
        Self::from_ground(GroundElement::one(r))
    }

    pub fn numerator(&self) -> &GroundElement {
        &self.num
    }

    pub fn denominator(&self) -> &GroundElement {
        &self.den
    }

    pub fn num_params(&self) -> usize {
        self.num.num_params()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inv(&self) -> FieldElement {
        assert!(!self.is_zero(), "division by zero");
        FieldElement::new(self.den.clone(), self.num.clone())
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = GroundElement::one(self.den.num_params());
            return;
        }
        // shared integer content
        let g = self.num.content().gcd(&self.den.content());
        // shared monomial divisor
        let mn = self.num.monomial_gcd();
        let md = self.den.monomial_gcd();
        let shared = super::ground::Monomial {
            q_exp: mn.q_exp.min(md.q_exp),
            param_exp: mn
                .param_exp
                .iter()
                .zip(&md.param_exp)
                .map(|(a, b)| *a.min(b))
                .collect(),
        };
        self.num = self.num.div_term_exact(&shared, &g);
        self.den = self.den.div_term_exact(&shared, &g);
        if self.den.leading_sign() < 0 {
            self.num = -&self.num;
            self.den = -&self.den;
        }
    }

    pub fn specialize(
        &self,
        q: &QValue,
        params: &[BigRational],
    ) -> Result<Scalar, SpecializeError> {
        let den = self.den.specialize(q, params)?;
        match den {
            Scalar::Rational(d) => {
                if d.is_zero() {
                    return Err(SpecializeError::ZeroDenominator);
                }
                match self.num.specialize(q, params)? {
                    Scalar::Rational(n) => Ok(Scalar::Rational(n / d)),
                    other => Ok(other),
                }
            }
            Scalar::Cyclotomic { coeffs, .. } => {
                // only support denominators that collapse to a nonzero
                // rational in the quotient ring
                if coeffs.iter().all(|c| c.is_zero()) {
                    return Err(SpecializeError::ZeroDenominator);
                }
                let rational_part = coeffs[0].clone();
                if coeffs.iter().skip(1).any(|c| !c.is_zero()) {
                    return Err(SpecializeError::NonInvertibleDenominator);
                }
                match self.num.specialize(q, params)? {
                    Scalar::Rational(n) => Ok(Scalar::Rational(n / rational_part)),
                    Scalar::Cyclotomic { e, coeffs } => Ok(Scalar::Cyclotomic {
                        e,
                        coeffs: coeffs.into_iter().map(|c| c / &rational_part).collect(),
                    }),
                }
            }
        }
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        // n1/d1 = n2/d2 iff n1*d2 = n2*d1
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for FieldElement {}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{quantum_factorial, quantum_integer};

    #[test]
    fn cross_multiplication_equality() {
        let r = 1;
        let two = quantum_integer(r, 2); // q + q^-1
        let three = quantum_integer(r, 3);
        let a = FieldElement::new(GroundElement::one(r), two.clone());
        // (1*[3]) / ([2]*[3]) reduces to the same class even without
        // polynomial gcd, because equality is cross-multiplied
        let b = FieldElement::new(three.clone(), &two * &three);
        assert_eq!(a, b);
        let c = FieldElement::new(GroundElement::one(r), three.clone());
        assert_ne!(a, c);
    }

    #[test]
    fn arithmetic_and_reduction() {
        let r = 2;
        let half_fac = FieldElement::new(GroundElement::one(r), quantum_factorial(r, 2));
        let prod = &half_fac * &FieldElement::from_ground(quantum_factorial(r, 2));
        assert_eq!(prod, FieldElement::one(r));
        let sum = &half_fac - &half_fac;
        assert!(sum.is_zero());
        // content + monomial reduction keeps the denominator monic-positive
        let x = FieldElement::new(
            GroundElement::from_int(r, 6),
            -&GroundElement::q_power(r, 3).scale_int(&num_bigint::BigInt::from(4)),
        );
        assert_eq!(
            x,
            FieldElement::new(
                GroundElement::from_int(r, -3),
                GroundElement::q_power(r, 3).scale_int(&num_bigint::BigInt::from(2)),
            )
        );
    }
}
