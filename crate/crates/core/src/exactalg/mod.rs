//! Exact arithmetic over the generic ground ring `A = Z[q, q^-1, Q_1, ..., Q_r]`
//! and its fraction field, plus quantum integers and factorials.
//!
//! Elements are kept in a canonical form (a sorted term map with no zero
//! coefficients), so structural equality is ring equality. Coefficients are
//! arbitrary-precision integers throughout.

mod field;
mod ground;

pub use field::FieldElement;
pub use ground::{GroundElement, Monomial, ParseGroundError, QValue, Scalar, SpecializeError};

/// The quantum integer `[k] = (q^k - q^-k)/(q - q^-1)`.
///
/// Expands to `q^{k-1} + q^{k-3} + ... + q^{1-k}` for `k > 0`, is `0` for
/// `k = 0`, and satisfies `[-k] = -[k]`.
pub fn quantum_integer(r: usize, k: i64) -> GroundElement {
    if k == 0 {
        return GroundElement::zero(r);
    }
    if k < 0 {
        return -&quantum_integer(r, -k);
    }
    let mut out = GroundElement::zero(r);
    let mut e = k - 1;
    while e >= 1 - k {
        out += &GroundElement::q_power(r, e as i32);
        e -= 2;
    }
    out
}

/// The quantum factorial `[t]! = [t][t-1]...[1]`, with `[0]! = 1`.
pub fn quantum_factorial(r: usize, t: u64) -> GroundElement {
    let mut out = GroundElement::one(r);
    for k in 1..=t {
        out = &out * &quantum_integer(r, k as i64);
    }
    out
}

/// The elementary symmetric polynomial `e_s(Q_1, ..., Q_r)`.
pub fn elementary_symmetric(r: usize, s: usize) -> GroundElement {
    if s > r {
        return GroundElement::zero(r);
    }
    // dp[j] accumulates e_j of the parameters seen so far
    let mut dp: Vec<GroundElement> = (0..=s)
        .map(|j| {
            if j == 0 {
                GroundElement::one(r)
            } else {
                GroundElement::zero(r)
            }
        })
        .collect();
    for k in 1..=r {
        let qk = GroundElement::parameter(r, k);
        for j in (1..=s).rev() {
            let add = &dp[j - 1] * &qk;
            dp[j] += &add;
        }
    }
    dp.pop().unwrap()
}

/// `q - q^-1`, the recurring structure constant of the Hecke quadratic
/// relation in the normalization `(T_i - q)(T_i + q^-1) = 0`.
pub fn q_minus_qinv(r: usize) -> GroundElement {
    &GroundElement::q_power(r, 1) - &GroundElement::q_power(r, -1)
}

/// Convenience: the unit coefficient `1`.
pub fn unit(r: usize) -> GroundElement {
    GroundElement::one(r)
}

/// Convenience: an integer constant.
pub fn int(r: usize, v: i64) -> GroundElement {
    GroundElement::from_int(r, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn br(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn quantum_integer_small_values() {
        // k = 0 is the empty sum
        assert!(quantum_integer(1, 0).is_zero());
        // k = 1 is the single term q^0
        assert_eq!(quantum_integer(1, 1), GroundElement::one(1));
        // k = 3 -> q^2 + 1 + q^-2, forced by telescoping
        let expected = &(&GroundElement::q_power(1, 2) + &GroundElement::one(1))
            + &GroundElement::q_power(1, -2);
        assert_eq!(quantum_integer(1, 3), expected);
        // [-k] = -[k]
        assert_eq!(quantum_integer(2, -3), -&quantum_integer(2, 3));
    }

    #[test]
    fn quantum_integer_defining_quotient() {
        // [k]*(q - q^-1) = q^k - q^-k for -8 <= k <= 8
        for k in -8..=8i64 {
            let lhs = &quantum_integer(1, k) * &q_minus_qinv(1);
            let rhs = &GroundElement::q_power(1, k as i32) - &GroundElement::q_power(1, -k as i32);
            assert_eq!(lhs, rhs, "k = {k}");
        }
    }

    #[test]
    fn quantum_factorial_small_values() {
        assert_eq!(quantum_factorial(1, 0), GroundElement::one(1));
        assert_eq!(quantum_factorial(1, 1), GroundElement::one(1));
        // [3]! = [3][2][1]; frozen from expanding (q^2+1+q^-2)(q+q^-1)
        // by brute-force convolution: q^3 + 2q + 2q^-1 + q^-3.
        let expected = GroundElement::parse("q^-3 + 2*q^-1 + 2*q + q^3", 1).unwrap();
        assert_eq!(quantum_factorial(1, 3), expected);
        // independent oracle: naive coefficient convolution of [3]*[2]
        let oracle = naive_mul(&quantum_integer(1, 3), &quantum_integer(1, 2));
        assert_eq!(quantum_factorial(1, 3), oracle);
    }

    // brute-force product on raw term lists, independent of GroundElement::mul
    fn naive_mul(a: &GroundElement, b: &GroundElement) -> GroundElement {
        let mut out = GroundElement::zero(a.num_params());
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                let mut exp = ma.param_exp.clone();
                for (e, f) in exp.iter_mut().zip(&mb.param_exp) {
                    *e += f;
                }
                let mono = Monomial {
                    q_exp: ma.q_exp + mb.q_exp,
                    param_exp: exp,
                };
                out += &GroundElement::monomial(a.num_params(), mono, ca * cb);
            }
        }
        out
    }

    #[test]
    fn elementary_symmetric_values() {
        // e_1(Q_1,Q_2) = Q_1 + Q_2, e_2 = Q_1 Q_2
        let q1 = GroundElement::parameter(2, 1);
        let q2 = GroundElement::parameter(2, 2);
        assert_eq!(elementary_symmetric(2, 1), &q1 + &q2);
        assert_eq!(elementary_symmetric(2, 2), &q1 * &q2);
        assert_eq!(elementary_symmetric(2, 0), GroundElement::one(2));
        assert!(elementary_symmetric(2, 3).is_zero());
    }

    #[test]
    fn specialize_examples() {
        // [2] at q = 1 is 2
        let two = quantum_integer(1, 2);
        let got = two
            .specialize(&QValue::Rational(br(1)), &[br(5)])
            .unwrap();
        assert_eq!(got, Scalar::Rational(br(2)));

        // q*Q_1 at q = 2, Q = (3) gives 6
        let x = &GroundElement::q_power(1, 1) * &GroundElement::parameter(1, 1);
        let got = x.specialize(&QValue::Rational(br(2)), &[br(3)]).unwrap();
        assert_eq!(got, Scalar::Rational(br(6)));

        // 1 + q^2 + q^4 dies at the e = 3 root-of-unity tag
        let x = &(&GroundElement::one(0) + &GroundElement::q_power(0, 2))
            + &GroundElement::q_power(0, 4);
        let got = x.specialize(&QValue::RootOfUnity { e: 3 }, &[]).unwrap();
        assert!(got.is_zero(), "got {got:?}");
    }
}
