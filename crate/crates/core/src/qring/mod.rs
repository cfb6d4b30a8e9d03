//! Exact arithmetic in `Q[q]` and `Q(q)`: q-integers, q-shifted factorials,
//! cyclotomic polynomials, and the congruence `f = 0 (mod [n])` for rational
//! functions `f`, meaning the numerator is divisible by `[n]` and the
//! denominator is coprime to it.

mod cyclo;
pub(crate) mod dense;
mod poly;
mod rat;

use std::fmt;

use num_traits::{One, Zero};

pub use cyclo::{cyclotomic, divisors, reduce_over_cyclotomic, CycloProduct};
pub use poly::{poly_gcd, QPoly};
pub use rat::QRat;

use crate::bigmath::{Integer, Rational};
use crate::error::RingError;

/// `[n] = 1 + q + ... + q^(n-1)`; the zero polynomial for `n = 0`.
pub fn q_integer(n: u64) -> QPoly {
    QPoly::from_coeffs(vec![Rational::one(); n as usize])
}

/// `(sign * q^e; q^step)_k = prod_{i<k} (1 - sign * q^(e + i*step))`.
pub fn q_pochhammer(sign: i8, e: u64, step: u64, k: u64) -> QPoly {
    assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
    let mut acc = vec![Integer::one()];
    for i in 0..k {
        let m = (e + i * step) as usize;
        // multiply by (1 - sign * q^m) in place
        acc.resize(acc.len() + m, Integer::zero());
        for j in (m..acc.len()).rev() {
            let shifted = acc[j - m].clone();
            if sign > 0 {
                acc[j] -= shifted;
            } else {
                acc[j] += shifted;
            }
        }
        dense::trim(&mut acc);
    }
    QPoly::from_integers(acc)
}

/// Either an integer (for congruences modulo `p` or `p^2`) or a polynomial
/// (for congruences modulo `[n]`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingElement {
    Integer(Integer),
    Poly(QPoly),
}

impl RingElement {
    pub fn is_zero(&self) -> bool {
        match self {
            Self::Integer(v) => v.is_zero(),
            Self::Poly(p) => p.is_zero(),
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Integer(v) => write!(f, "{v}"),
            Self::Poly(p) => write!(f, "{p}"),
        }
    }
}

/// Outcome of a single divisibility check. `holds` is true exactly when
/// `residue` is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub modulus: RingElement,
    pub residue: RingElement,
    pub detail: String,
}

impl Verdict {
    pub fn new(modulus: RingElement, residue: RingElement, detail: impl Into<String>) -> Self {
        Self {
            holds: residue.is_zero(),
            modulus,
            residue,
            detail: detail.into(),
        }
    }
}

/// How the numerator is reduced modulo `[n]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ModStrategy {
    /// Fold modulo `q^n - 1` first when the numerator has degree above `4n`.
    #[default]
    Auto,
    /// Always fold before dividing.
    Fold,
    /// Plain long division by `[n]`.
    Direct,
    /// Test divisibility by each `Phi_d`, `d | n`, `d > 1`, separately.
    Cyclotomic,
}

/// Decides `f = 0 (mod [n])` with the default strategy.
pub fn congruent_zero_mod_qint(f: &QRat, n: u64) -> Result<Verdict, RingError> {
    congruent_zero_mod_qint_with(f, n, ModStrategy::Auto)
}

pub fn congruent_zero_mod_qint_with(
    f: &QRat,
    n: u64,
    strategy: ModStrategy,
) -> Result<Verdict, RingError> {
    if n == 0 {
        return Err(RingError::InvalidModulus(0));
    }
    let modulus = q_integer(n);
    let nu = n as usize;
    let fold_first = match strategy {
        ModStrategy::Auto => f.num().degree().is_some_and(|d| d > 4 * nu),
        ModStrategy::Fold | ModStrategy::Cyclotomic => true,
        ModStrategy::Direct => false,
    };

    let (den_coprime, residue, detail) = if strategy == ModStrategy::Cyclotomic {
        let (den_ints, _) = f.den().to_scaled_integers();
        let (num_ints, _) = f.num().to_scaled_integers();
        let factors: Vec<u64> = divisors(n).into_iter().filter(|&d| d > 1).collect();
        let coprime = factors
            .iter()
            .all(|&d| !cyclo::cyclotomic_divides(&den_ints, d));
        let failing: Vec<String> = factors
            .iter()
            .filter(|&&d| !cyclo::cyclotomic_divides(&num_ints, d))
            .map(|d| format!("Phi_{d}"))
            .collect();
        let residue = f.num().fold_mod_qn_minus_1(nu).rem(&modulus)?;
        debug_assert_eq!(failing.is_empty(), residue.is_zero());
        let detail = if failing.is_empty() {
            format!("every Phi_d with d | {n}, d > 1 divides the numerator")
        } else {
            format!("numerator not divisible by {}", failing.join(", "))
        };
        (coprime, residue, detail)
    } else {
        let coprime = poly_gcd(f.den(), &modulus)?.is_one();
        let num = if fold_first {
            f.num().fold_mod_qn_minus_1(nu)
        } else {
            f.num().clone()
        };
        let residue = num.rem(&modulus)?;
        let how = if fold_first { "folded mod q^n - 1, " } else { "" };
        let detail = if residue.is_zero() {
            format!("{how}numerator divisible by [{n}]")
        } else {
            format!("{how}numerator leaves a nonzero remainder mod [{n}]")
        };
        (coprime, residue, detail)
    };

    if !den_coprime {
        return Err(RingError::DenominatorNotCoprime { modulus: n });
    }
    Ok(Verdict::new(
        RingElement::Poly(modulus),
        RingElement::Poly(residue),
        detail,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigmath::rat;
    use proptest::prelude::*;

    fn p(xs: &[i64]) -> QPoly {
        QPoly::from_i64s(xs)
    }

    // Expands a product of binomials one factor at a time with generic QPoly
    // multiplication.
    fn pochhammer_by_product(sign: i8, e: u64, step: u64, k: u64) -> QPoly {
        (0..k).fold(QPoly::one(), |acc, i| {
            let m = (e + i * step) as usize;
            let factor = &QPoly::one() - &QPoly::monomial(rat(sign as i64, 1), m);
            &acc * &factor
        })
    }

    #[test]
    fn q_integer_examples() {
        assert_eq!(q_integer(1), QPoly::one());
        assert_eq!(q_integer(3), p(&[1, 1, 1]));
        assert!(q_integer(0).is_zero());
    }

    #[test]
    fn q_pochhammer_examples() {
        for (s, e, st) in [(1, 0, 1), (-1, 3, 2), (1, 4, 4)] {
            assert_eq!(q_pochhammer(s, e, st, 0), QPoly::one());
        }
        assert_eq!(pochhammer_by_product(1, 1, 2, 2), p(&[1, -1, 0, -1, 1]));
        assert_eq!(q_pochhammer(1, 1, 2, 2), p(&[1, -1, 0, -1, 1]));
        assert_eq!(q_pochhammer(-1, 1, 2, 1), p(&[1, 1]));
        // (1; q)_k vanishes
        assert!(q_pochhammer(1, 0, 1, 3).is_zero());
    }

    #[test]
    fn q_pochhammer_matches_factored_form() {
        for k in 0..8 {
            for (s, e, st) in [(1, 1, 2), (-1, 1, 2), (1, 4, 4), (-1, 4, 4), (1, 2, 4)] {
                assert_eq!(
                    q_pochhammer(s, e, st, k),
                    CycloProduct::q_pochhammer(s, e, st, k).expand().unwrap()
                );
                assert_eq!(q_pochhammer(s, e, st, k), pochhammer_by_product(s, e, st, k));
            }
        }
    }

    #[test]
    fn congruence_examples() {
        let v = congruent_zero_mod_qint(&QRat::from_poly(q_integer(3)), 3).unwrap();
        assert!(v.holds);
        let v = congruent_zero_mod_qint(&QRat::from_poly(p(&[-1, 0, 0, 1])), 3).unwrap();
        assert!(v.holds);
        let v = congruent_zero_mod_qint(&QRat::from_poly(p(&[0, 1])), 3).unwrap();
        assert!(!v.holds);
        assert_eq!(v.residue, RingElement::Poly(p(&[0, 1])));
    }

    #[test]
    fn non_coprime_denominator_is_an_error() {
        // [3] / (1 + q + q^2) reduces to 1, so use q^3 / (q^2 + q + 1)
        let f = QRat::new(p(&[0, 0, 0, 1]), p(&[1, 1, 1])).unwrap();
        for s in [ModStrategy::Auto, ModStrategy::Direct, ModStrategy::Cyclotomic] {
            assert_eq!(
                congruent_zero_mod_qint_with(&f, 3, s),
                Err(RingError::DenominatorNotCoprime { modulus: 3 })
            );
        }
        // coprime denominator, divisible numerator
        let g = QRat::new(q_integer(5), p(&[1, 1])).unwrap();
        assert!(congruent_zero_mod_qint(&g, 5).unwrap().holds);
    }

    #[test]
    fn unit_modulus_always_holds() {
        let f = QRat::new(p(&[3, 0, 1]), p(&[1, 1])).unwrap();
        assert!(congruent_zero_mod_qint(&f, 1).unwrap().holds);
        assert_eq!(congruent_zero_mod_qint(&f, 0), Err(RingError::InvalidModulus(0)));
    }

    #[test]
    fn cyclotomic_product_is_q_integer() {
        for n in 1..=60u64 {
            let prod = divisors(n)
                .into_iter()
                .filter(|&d| d > 1)
                .fold(QPoly::one(), |acc, d| &acc * &cyclotomic(d));
            assert_eq!(prod, q_integer(n), "n = {n}");
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn fold_is_congruent_mod_q_integer(
            cs in prop::collection::vec(-9i64..9, 0..500),
            n in 1u64..30,
        ) {
            let f = QPoly::from_i64s(&cs);
            let diff = &f - &f.fold_mod_qn_minus_1(n as usize);
            let v = congruent_zero_mod_qint_with(&QRat::from_poly(diff), n, ModStrategy::Direct).unwrap();
            prop_assert!(v.holds);
        }

        #[test]
        fn strategies_agree(cs in prop::collection::vec(-3i64..3, 0..200), n in 1u64..25) {
            let f = QRat::from_poly(QPoly::from_i64s(&cs));
            let a = congruent_zero_mod_qint_with(&f, n, ModStrategy::Direct).unwrap();
            let b = congruent_zero_mod_qint_with(&f, n, ModStrategy::Fold).unwrap();
            let c = congruent_zero_mod_qint_with(&f, n, ModStrategy::Cyclotomic).unwrap();
            prop_assert_eq!(&a.residue, &b.residue);
            prop_assert_eq!(&a.residue, &c.residue);
            prop_assert_eq!(a.holds, c.holds);
        }

        #[test]
        fn pochhammer_degree(sign in prop::sample::select(vec![1i8, -1]), e in 1u64..6, step in 1u64..5, k in 0u64..10) {
            let deg = q_pochhammer(sign, e, step, k).degree().unwrap() as u64;
            prop_assert_eq!(deg, e * k + step * k * k.saturating_sub(1) / 2);
        }
    }
}
