//! Exact integer and rational arithmetic plus the bits of elementary number
//! theory the verifiers need: binomials, odd primes, modular inverses and the
//! reduction of a rational number modulo an integer.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::MathError;

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;

/// Reduced fraction of [`Integer`]s with a positive denominator.
///
/// `BigRational` normalizes on construction, so `0` is always `0/1` and two
/// equal values are structurally equal.
pub type Rational = BigRational;

pub fn int(v: i64) -> Integer {
    Integer::from(v)
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(Integer::from(num), Integer::from(den))
}

pub fn rat_from_int(v: Integer) -> Rational {
    Rational::from_integer(v)
}

/// Formats a rational as `num/den` in lowest terms, or just `num` when the
/// denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `C(n, k)`, zero when `k` is outside `[0, n]`.
///
/// Uses the running product `C(n, i+1) = C(n, i) * (n - i) / (i + 1)`; every
/// intermediate is itself a binomial, so each division is exact.
pub fn binomial(n: u64, k: i64) -> Integer {
    if k < 0 || k as u64 > n {
        return Integer::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = Integer::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(2k, k)`.
pub fn central_binomial(k: u64) -> Integer {
    binomial(2 * k, k as i64)
}

/// Central binomial coefficients `C(2j, j)` for `j = 0..=max`, built by the
/// recurrence `C(2j+2, j+1) = C(2j, j) * 2(2j+1) / (j+1)`.
pub fn central_binomials(max: u64) -> Vec<Integer> {
    let mut out = Vec::with_capacity(max as usize + 1);
    let mut cur = Integer::one();
    out.push(cur.clone());
    for j in 0..max {
        cur *= 2 * (2 * j + 1);
        cur /= j + 1;
        out.push(cur.clone());
    }
    out
}

/// Canonical residue of `a` in `[0, m)`.
pub fn modulo(a: &Integer, m: &Integer) -> Integer {
    a.mod_floor(m)
}

/// The unique `x` in `[0, m)` with `a * x = 1 (mod m)`.
pub fn mod_inverse(a: &Integer, m: &Integer) -> Result<Integer, MathError> {
    if *m < int(2) {
        return Err(MathError::InvalidModulus(m.clone()));
    }
    let ext = modulo(a, m).extended_gcd(m);
    if !ext.gcd.is_one() {
        return Err(MathError::NotInvertible {
            value: a.clone(),
            modulus: m.clone(),
        });
    }
    Ok(modulo(&ext.x, m))
}

/// Reduces `num/den` modulo `m` as `num * den^-1 mod m`.
///
/// Fails with [`MathError::DenominatorNotCoprime`] when the denominator shares
/// a factor with `m`, in which case the congruence has no meaning.
pub fn rational_mod(r: &Rational, m: &Integer) -> Result<Integer, MathError> {
    if *m < int(2) {
        return Err(MathError::InvalidModulus(m.clone()));
    }
    let inv = mod_inverse(r.denom(), m).map_err(|_| MathError::DenominatorNotCoprime {
        denominator: r.denom().clone(),
        modulus: m.clone(),
    })?;
    Ok(modulo(&(r.numer() * inv), m))
}

/// All primes `3 <= p <= limit` in ascending order (sieve of Eratosthenes).
pub fn odd_primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 3 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    let mut i = 3;
    while i <= n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += 2 * i;
            }
        }
        i += 2;
    }
    out
}

pub fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// True when the integer is `2^e` for some `e >= 0`.
pub fn is_power_of_two(v: &Integer) -> bool {
    v.is_positive() && (v & (v - 1u32)).is_zero()
}

/// `base^exp` for a rational base, exact.
pub fn rational_pow(base: &Rational, exp: u64) -> Rational {
    num_traits::pow(base.clone(), exp.to_usize().expect("exponent fits in usize"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn factorial(n: u64) -> Integer {
        (1..=n).fold(Integer::one(), |acc, i| acc * i)
    }

    // Factorial formula, used as the independent oracle for `binomial`.
    fn binomial_by_factorials(n: u64, k: i64) -> Integer {
        if k < 0 || k as u64 > n {
            return Integer::zero();
        }
        let k = k as u64;
        factorial(n) / (factorial(k) * factorial(n - k))
    }

    fn inverse_by_search(a: i64, m: i64) -> Option<i64> {
        (0..m).find(|x| (a.rem_euclid(m) * x) % m == 1)
    }

    fn primes_by_trial_division(limit: u64) -> Vec<u64> {
        (3..=limit)
            .filter(|&p| (2..p).all(|d| p % d != 0))
            .collect()
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(0, 0), int(1));
        assert_eq!(binomial(6, 3), binomial_by_factorials(6, 3));
        assert_eq!(binomial(6, 3), int(20));
        assert_eq!(binomial(5, 7), int(0));
        assert_eq!(binomial(5, -1), int(0));
    }

    #[test]
    fn binomial_matches_factorials() {
        for n in 0..40 {
            for k in -2..=(n as i64 + 2) {
                assert_eq!(binomial(n, k), binomial_by_factorials(n, k), "C({n},{k})");
            }
        }
    }

    #[test]
    fn pascal_recurrence_up_to_200() {
        for n in 1..=200u64 {
            for k in 1..(n as i64) {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn central_binomial_examples() {
        assert_eq!(central_binomial(0), int(1));
        assert_eq!(central_binomial(3), binomial_by_factorials(6, 3));
        assert_eq!(central_binomial(5), int(252));
        let table = central_binomials(60);
        for (j, c) in table.iter().enumerate() {
            assert_eq!(*c, central_binomial(j as u64));
        }
    }

    #[test]
    fn mod_inverse_examples() {
        assert_eq!(mod_inverse(&int(1), &int(7)).unwrap(), int(1));
        assert_eq!(inverse_by_search(2, 25), Some(13));
        assert_eq!(mod_inverse(&int(2), &int(25)).unwrap(), int(13));
        assert_eq!(inverse_by_search(16, 25), Some(11));
        assert_eq!(mod_inverse(&int(16), &int(25)).unwrap(), int(11));
        assert_eq!(mod_inverse(&int(-2), &int(25)).unwrap(), int(12));
    }

    #[test]
    fn mod_inverse_errors() {
        assert!(matches!(
            mod_inverse(&int(5), &int(25)),
            Err(MathError::NotInvertible { .. })
        ));
        assert!(matches!(
            mod_inverse(&int(3), &int(1)),
            Err(MathError::InvalidModulus(_))
        ));
    }

    #[test]
    fn rational_mod_examples() {
        assert_eq!(rational_mod(&rat(0, 1), &int(9)).unwrap(), int(0));
        assert_eq!(rational_mod(&rat(35, 16), &int(25)).unwrap(), int(10));
        assert_eq!(rational_mod(&rat(-5, 2), &int(25)).unwrap(), int(10));
        assert!(matches!(
            rational_mod(&rat(1, 5), &int(25)),
            Err(MathError::DenominatorNotCoprime { .. })
        ));
    }

    #[test]
    fn primes_examples() {
        assert!(odd_primes_up_to(2).is_empty());
        assert_eq!(odd_primes_up_to(10), primes_by_trial_division(10));
        assert_eq!(odd_primes_up_to(10), vec![3, 5, 7]);
        assert_eq!(odd_primes_up_to(30), vec![3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(odd_primes_up_to(1000), primes_by_trial_division(1000));
        for p in 0..200 {
            assert_eq!(is_odd_prime(p), primes_by_trial_division(p).last() == Some(&p));
        }
    }

    #[test]
    fn powers_of_two() {
        assert!(is_power_of_two(&int(1)));
        assert!(is_power_of_two(&(Integer::one() << 300)));
        assert!(!is_power_of_two(&int(12)));
        assert!(!is_power_of_two(&int(0)));
    }

    proptest! {
        #[test]
        fn binomial_symmetry(n in 0u64..300, k in 0i64..300) {
            prop_assume!(k as u64 <= n);
            prop_assert_eq!(binomial(n, k), binomial(n, n as i64 - k));
        }

        #[test]
        fn inverse_property(a in -10_000i64..10_000, m in 2i64..5_000) {
            let (a, m) = (int(a), int(m));
            match mod_inverse(&a, &m) {
                Ok(x) => {
                    prop_assert!(x >= int(0) && x < m);
                    prop_assert_eq!(modulo(&(&a * &x), &m), modulo(&int(1), &m));
                }
                Err(_) => prop_assert!(!a.gcd(&m).is_one()),
            }
        }

        #[test]
        fn rational_mod_property(a in -10_000i64..10_000, b in 1i64..10_000, m in 2i64..5_000) {
            let r = rat(a, b);
            let m = int(m);
            if let Ok(x) = rational_mod(&r, &m) {
                prop_assert_eq!(modulo(&(x * r.denom()), &m), modulo(r.numer(), &m));
            }
        }
    }
}
