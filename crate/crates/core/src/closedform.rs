//! Closed forms for `sum_{k<n} (q/4)^k * inner_conv_sum(k)`.
//!
//! By the inner convolution identity the sum collapses to
//! `sum_{k<n} q^k (9k^2/2 + 3k/2 + 1)`, and the moment sums
//! `S_n = sum k q^k` and `T_n = sum k^2 q^k` have telescoped closed forms.
//! Assembling them gives
//!
//! ```text
//! [(9n^2-15n+8) q^{n+2} - (18n^2-12n-8) q^{n+1} + (9n^2+3n+2) q^n - 2(2q+1)^2] / (2 (q-1)^3)
//! ```
//!
//! Note the denominator is `2(q-1)^3`. The same numerator over `2(1-q)^3`
//! is the negative of the sum (at `n = 1` it gives `-1`), so that variant is
//! kept only as [`printed_form_parts`] for regression tests.

use num_traits::{One, Zero};

use crate::bigmath::{rat, rat_from_int, rational_pow, Integer, Rational};
use crate::error::RingError;
use crate::qring::{q_integer, QPoly, QRat};
use crate::sums::inner_conv_sum_with;

fn poly(p: QPoly) -> QRat {
    QRat::from_poly(p)
}

/// `1 - q^m`
fn one_minus_q_pow(m: u64) -> QPoly {
    &QPoly::one() - &QPoly::monomial(Rational::one(), m as usize)
}

fn n_rat(n: u64) -> Rational {
    rat_from_int(Integer::from(n))
}

/// `S_n = q(1 - q^{n-1})/(1-q)^2 - q^n (n-1)/(1-q)`, reduced.
pub fn geometric_s(n: u64) -> QRat {
    assert!(n >= 1, "n must be positive");
    let one_minus_q = poly(one_minus_q_pow(1));
    let head = poly(&QPoly::q() * &one_minus_q_pow(n - 1))
        .checked_div(&one_minus_q.pow(2))
        .expect("nonzero");
    let tail = poly(QPoly::monomial(n_rat(n - 1), n as usize))
        .checked_div(&one_minus_q)
        .expect("nonzero");
    &head - &tail
}

/// `T_n = 2q(1-q^{n-1})/(1-q)^3 - 2q^n(n-1)/(1-q)^2 - q(1-q^{n-1})/(1-q)^2 - q^n(n-1)^2/(1-q)`.
pub fn geometric_t(n: u64) -> QRat {
    assert!(n >= 1, "n must be positive");
    let one_minus_q = poly(one_minus_q_pow(1));
    let q_head = poly(&QPoly::q() * &one_minus_q_pow(n - 1));
    let m = n_rat(n - 1);
    let a = q_head.scale(&rat(2, 1)).checked_div(&one_minus_q.pow(3)).expect("nonzero");
    let b = poly(QPoly::monomial(&m * rat(2, 1), n as usize))
        .checked_div(&one_minus_q.pow(2))
        .expect("nonzero");
    let c = q_head.checked_div(&one_minus_q.pow(2)).expect("nonzero");
    let d = poly(QPoly::monomial(&m * &m, n as usize))
        .checked_div(&one_minus_q)
        .expect("nonzero");
    &(&(&a - &b) - &c) - &d
}

/// `sum_{k<n} k q^k` summed term by term.
pub fn geometric_s_direct(n: u64) -> QPoly {
    QPoly::from_coeffs((0..n).map(n_rat).collect())
}

/// `sum_{k<n} k^2 q^k` summed term by term.
pub fn geometric_t_direct(n: u64) -> QPoly {
    QPoly::from_coeffs((0..n).map(|k| n_rat(k * k)).collect())
}

/// Right side of the telescoping step `(1-q) S_n = sum_{k=1}^{n-1} q^k - (n-1) q^n`.
pub fn telescoped_s(n: u64) -> QPoly {
    let mut coeffs: Vec<Rational> = (0..n)
        .map(|k| if k == 0 { Rational::zero() } else { Rational::one() })
        .collect();
    coeffs.push(-n_rat(n - 1));
    QPoly::from_coeffs(coeffs)
}

/// `sum_{k<n} (9k^2/2 + 3k/2 + 1) q^k`.
pub fn reduced_double_sum_poly(n: u64) -> QPoly {
    QPoly::from_coeffs(
        (0..n)
            .map(|k| rat((9 * k * k + 3 * k + 2) as i64, 2))
            .collect(),
    )
}

/// `(9/2) T_n + (3/2) S_n + [n]`, assembled from the closed moment forms.
pub fn reduced_double_sum_from_moments(n: u64) -> QRat {
    let t = geometric_t(n).scale(&rat(9, 2));
    let s = geometric_s(n).scale(&rat(3, 2));
    &(&t + &s) + &QRat::from_poly(q_integer(n))
}

/// `sum_{k<n} (q/4)^k * inner_conv_sum(k)` straight from the binomial sums.
pub fn weighted_sum_poly(n: u64) -> QPoly {
    let table = crate::bigmath::central_binomials(n.saturating_sub(1));
    QPoly::from_coeffs(
        (0..n)
            .map(|k| {
                Rational::new(inner_conv_sum_with(&table, k), Integer::one() << (2 * k))
            })
            .collect(),
    )
}

fn closed_numerator(n: u64) -> QPoly {
    let n = n as i64;
    let nu = n as usize;
    let lead = QPoly::monomial(rat(9 * n * n - 15 * n + 8, 1), nu + 2);
    let mid = QPoly::monomial(rat(18 * n * n - 12 * n - 8, 1), nu + 1);
    let low = QPoly::monomial(rat(9 * n * n + 3 * n + 2, 1), nu);
    // 2(2q + 1)^2 = 2 + 8q + 8q^2
    let tail = QPoly::from_i64s(&[2, 8, 8]);
    &(&(&lead - &mid) + &low) - &tail
}

/// Unreduced numerator and denominator `2(q-1)^3` of the closed form.
pub fn closed_form_parts(n: u64) -> (QPoly, QPoly) {
    assert!(n >= 1, "n must be positive");
    let den = QPoly::from_i64s(&[-1, 1]).pow(3).scale(&rat(2, 1));
    (closed_numerator(n), den)
}

/// The same numerator over `2(1-q)^3`; equals `-1` times the sum.
pub fn printed_form_parts(n: u64) -> (QPoly, QPoly) {
    assert!(n >= 1, "n must be positive");
    let den = one_minus_q_pow(1).pow(3).scale(&rat(2, 1));
    (closed_numerator(n), den)
}

/// The closed form as a reduced rational function. Since it equals a
/// polynomial, the reduced denominator is one.
pub fn closed_form(n: u64) -> QRat {
    let (num, den) = closed_form_parts(n);
    QRat::new(num, den).expect("nonzero denominator")
}

/// `(-1/2)^n n (1 - 3n)`, the value at `q = -1/2`.
pub fn special_q_neg_half(n: u64) -> Rational {
    let n_i = n as i64;
    rational_pow(&rat(-1, 2), n) * rat(n_i * (1 - 3 * n_i), 1)
}

/// `n (3n^2 - 3n + 2) / 2`, the value at `q = 1`.
pub fn special_q_one(n: u64) -> Rational {
    let n = Integer::from(n);
    Rational::new(&n * (Integer::from(3u32) * &n * &n - 3u32 * &n + 2u32), 2.into())
}

/// The closed form together with an optional evaluation point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormValue {
    pub n: u64,
    pub as_qrat: QRat,
    pub at_q: Option<(Rational, Rational)>,
}

impl ClosedFormValue {
    pub fn new(n: u64) -> Self {
        Self {
            n,
            as_qrat: closed_form(n),
            at_q: None,
        }
    }

    /// Evaluates the unreduced formula at `q0`. `q = 1` is a removable
    /// singularity of that formula (`0/0`), so it is answered by
    /// [`special_q_one`] instead.
    pub fn at(n: u64, q0: &Rational) -> Self {
        let value = evaluate_closed_form(n, q0)
            .unwrap_or_else(|_| special_q_one(n));
        Self {
            at_q: Some((q0.clone(), value)),
            ..Self::new(n)
        }
    }

    pub fn value(&self) -> Option<&Rational> {
        self.at_q.as_ref().map(|(_, v)| v)
    }
}

/// Numerator over denominator at `q0`; fails only at `q0 = 1`.
pub fn evaluate_closed_form(n: u64, q0: &Rational) -> Result<Rational, RingError> {
    let (num, den) = closed_form_parts(n);
    let d = den.eval(q0);
    if d.is_zero() {
        return Err(RingError::SingularPoint(q0.clone()));
    }
    Ok(num.eval(q0) / d)
}

pub fn evaluate_printed_form(n: u64, q0: &Rational) -> Result<Rational, RingError> {
    let (num, den) = printed_form_parts(n);
    let d = den.eval(q0);
    if d.is_zero() {
        return Err(RingError::SingularPoint(q0.clone()));
    }
    Ok(num.eval(q0) / d)
}
