//! Newton identities between Chern classes and power sums, the tensor-product
//! power-sum expansion, and the coefficient a rank-one twisting class
//! contributes to the power sums of a tensor product.

use super::ChernError;
use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::ops::{Add, Mul, Neg, Sub};

/// Scalars the symmetric-function identities are evaluated over.
pub trait Scalar:
    Clone
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + From<BigInt>
{
}

impl<T> Scalar for T where
    T: Clone
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
        + From<BigInt>
{
}

/// Power sums from Chern classes:
/// `s_n = c_1 s_{n-1} - c_2 s_{n-2} + ... + (-1)^{n-1} n c_n`.
pub fn newton_c_to_s<T: Scalar>(c: &[T]) -> Vec<T> {
    let m = c.len();
    let mut s: Vec<T> = Vec::with_capacity(m);
    for n in 1..=m {
        let mut acc = T::zero();
        let mut positive = true;
        for j in 1..n {
            let term = c[j - 1].clone() * s[n - j - 1].clone();
            acc = if positive { acc + term } else { acc - term };
            positive = !positive;
        }
        let trailing = T::from(BigInt::from(n)) * c[n - 1].clone();
        acc = if positive { acc + trailing } else { acc - trailing };
        s.push(acc);
    }
    s
}

/// Chern classes from power sums; inverse of [`newton_c_to_s`].
pub fn newton_s_to_c(s: &[BigRational]) -> Vec<BigRational> {
    let m = s.len();
    let mut c: Vec<BigRational> = Vec::with_capacity(m);
    for n in 1..=m {
        // (-1)^{n-1} n c_n = s_n - c_1 s_{n-1} + c_2 s_{n-2} - ...
        let mut acc = s[n - 1].clone();
        let mut positive = false;
        for j in 1..n {
            let term = &c[j - 1] * &s[n - j - 1];
            acc = if positive { acc + term } else { acc - term };
            positive = !positive;
        }
        let sign: BigRational = if n % 2 == 1 {
            BigRational::one()
        } else {
            -BigRational::one()
        };
        c.push(acc * sign / BigRational::from(BigInt::from(n)));
    }
    c
}

/// `s_n(E (x) F) = sum_i binom(n, i) s_{n-i}(E) s_i(F)`, with the lists
/// indexed from `s_0` (the rank) and missing entries read as zero.
pub fn tensor_power_sums<T: Scalar>(s_e: &[T], s_f: &[T], n: usize) -> T {
    let mut acc = T::zero();
    for i in 0..=n {
        let (Some(a), Some(b)) = (s_e.get(n - i), s_f.get(i)) else {
            continue;
        };
        let coeff = T::from(binomial(BigInt::from(n), BigInt::from(i)));
        acc = acc + coeff * a.clone() * b.clone();
    }
    acc
}

/// Linear polynomial in a base class `v` of degree `2k`, truncated modulo
/// `v^2` (the class lives on a `2k`-dimensional space).
#[derive(Clone, PartialEq, Eq, Debug)]
struct VLinear {
    constant: BigRational,
    v: BigRational,
}

impl VLinear {
    fn v() -> Self {
        Self {
            constant: BigRational::zero(),
            v: BigRational::one(),
        }
    }
}

impl Add for VLinear {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self {
            constant: self.constant + rhs.constant,
            v: self.v + rhs.v,
        }
    }
}

impl Sub for VLinear {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self {
            constant: self.constant - rhs.constant,
            v: self.v - rhs.v,
        }
    }
}

impl Mul for VLinear {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self {
            constant: &self.constant * &rhs.constant,
            // the v^2 component is discarded
            v: self.constant * rhs.v + self.v * rhs.constant,
        }
    }
}

impl Neg for VLinear {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            constant: -self.constant,
            v: -self.v,
        }
    }
}

impl Zero for VLinear {
    fn zero() -> Self {
        Self {
            constant: BigRational::zero(),
            v: BigRational::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.v.is_zero()
    }
}

impl One for VLinear {
    fn one() -> Self {
        Self {
            constant: BigRational::one(),
            v: BigRational::zero(),
        }
    }
}

impl From<BigInt> for VLinear {
    fn from(n: BigInt) -> Self {
        Self {
            constant: BigRational::from(n),
            v: BigRational::zero(),
        }
    }
}

/// Coefficient of `v s_{n-k}(F)` in `s_n(E (x) F)` for a virtual line bundle
/// `E` whose only nonvanishing Chern class below the truncation is `c_k = v`.
///
/// The value is derived, not assumed: the power sums of `E` are produced by
/// the Newton identities over `Q[v]/(v^2)` and fed through the tensor
/// expansion against an indicator power sum for `F`.
pub fn special_tensor_coefficient(k: usize, n: usize) -> Result<BigRational, ChernError> {
    if k < 1 || n < k {
        return Err(ChernError::BadArguments {
            n: n as u32,
            k: k as u32,
        });
    }
    // c(E) = (0, ..., 0, v, 0, ...): classes above degree 2k vanish on a
    // 2k-dimensional space
    let mut c = vec![VLinear::zero(); n];
    c[k - 1] = VLinear::v();
    let mut s_e = newton_c_to_s(&c);
    s_e.insert(0, VLinear::one()); // s_0(E) = rank 1

    // the expansion is linear in the s_i(F); an indicator at slot n-k picks
    // out the s_{n-k}(F) coefficient
    let mut s_f = vec![VLinear::zero(); n + 1];
    s_f[n - k] = VLinear::one();

    Ok(tensor_power_sums(&s_e, &s_f, n).v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn single_chern_root() {
        // rank one: s_n = c_1^n
        let c = vec![rat(3)];
        let s = newton_c_to_s(&c);
        assert_eq!(s, vec![rat(3)]);
        let c = vec![rat(3), rat(0), rat(0)];
        let s = newton_c_to_s(&c);
        assert_eq!(s, vec![rat(3), rat(9), rat(27)]);
    }

    #[test]
    fn two_classes() {
        let s = newton_c_to_s(&[rat(2), rat(1)]);
        // s_2 = c_1^2 - 2 c_2
        assert_eq!(s, vec![rat(2), rat(2)]);
    }

    #[test]
    fn vanishing_lower_classes() {
        // c = (0, ..., 0, c_k): s_j = 0 for j < k and s_k = (-1)^{k-1} k c_k
        for k in 1..=5usize {
            let mut c = vec![rat(0); k];
            c[k - 1] = rat(7);
            let s = newton_c_to_s(&c);
            for low in s.iter().take(k - 1) {
                assert!(low.is_zero());
            }
            let expected = if k % 2 == 1 { rat(7 * k as i64) } else { -rat(7 * k as i64) };
            assert_eq!(s[k - 1], expected);
        }
    }

    #[test]
    fn inverse_example() {
        let c = newton_s_to_c(&[rat(2), rat(2)]);
        assert_eq!(c, vec![rat(2), rat(1)]);
    }

    #[test]
    fn tensor_rank_multiplicativity() {
        // n = 0 reduces to rank(E) rank(F)
        let e = vec![rat(3)];
        let f = vec![rat(5)];
        assert_eq!(tensor_power_sums(&e, &f, 0), rat(15));
    }

    #[test]
    fn tensor_first_power_sum() {
        // n = 1: rank(F) s_1(E) + rank(E) s_1(F)
        let e = vec![rat(2), rat(7)];
        let f = vec![rat(3), rat(11)];
        assert_eq!(tensor_power_sums(&e, &f, 1), rat(3 * 7 + 2 * 11));
    }

    #[test]
    fn tensor_symmetric_in_factors() {
        let e = vec![rat(2), rat(7), ratio(1, 2)];
        let f = vec![rat(3), rat(11), ratio(5, 3)];
        for n in 0..=2 {
            assert_eq!(
                tensor_power_sums(&e, &f, n),
                tensor_power_sums(&f, &e, n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn tensor_n2_shape() {
        // s_2(E)s_0(F) + 2 s_1(E)s_1(F) + s_0(E)s_2(F), checked on generic values
        let e = vec![ratio(1, 3), rat(5), rat(-2)];
        let f = vec![rat(4), ratio(7, 2), rat(9)];
        let by_formula = &e[2] * &f[0] + rat(2) * &e[1] * &f[1] + &e[0] * &f[2];
        assert_eq!(tensor_power_sums(&e, &f, 2), by_formula);
    }

    #[test]
    fn special_coefficient_examples() {
        assert_eq!(special_tensor_coefficient(2, 5).unwrap(), rat(-20));
        assert_eq!(special_tensor_coefficient(1, 1).unwrap(), rat(1));
        assert_eq!(special_tensor_coefficient(1, 3).unwrap(), rat(3));
    }

    #[test]
    fn special_coefficient_rejects_bad_arguments() {
        assert!(special_tensor_coefficient(3, 2).is_err());
        assert!(special_tensor_coefficient(0, 2).is_err());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_rationals(len: usize) -> impl Strategy<Value = Vec<BigRational>> {
            proptest::collection::vec((-40i64..=40, 1i64..=12), len)
                .prop_map(|pairs| pairs.into_iter().map(|(n, d)| ratio(n, d)).collect())
        }

        proptest! {
            #[test]
            fn newton_round_trip(c in arb_rationals(8)) {
                let s = newton_c_to_s(&c);
                prop_assert_eq!(newton_s_to_c(&s), c);
            }

            #[test]
            fn tensor_symmetry(e in arb_rationals(6), f in arb_rationals(6), n in 0usize..=5) {
                prop_assert_eq!(
                    tensor_power_sums(&e, &f, n),
                    tensor_power_sums(&f, &e, n)
                );
            }
        }
    }
}
