//! Instance checks for the supercongruences modulo `p` and `p^2` and the
//! q-congruences modulo `[n]`.
//!
//! Rational sums are read p-adically: `a/b mod m` is `a * b^-1 mod m`, which
//! requires `gcd(b, m) = 1`. Both sides are reduced into `[0, m)` before they
//! are compared.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_traits::Zero;

use crate::bigmath::{is_odd_prime, is_power_of_two, rat, rational_mod, Integer, Rational};
use crate::closedform::{special_q_neg_half, special_q_one};
use crate::error::{CongruenceError, MathError};
use crate::qring::{
    congruent_zero_mod_qint_with, divisors, q_integer, ModStrategy, QPoly, RingElement,
};
use crate::sums::{double_sum, double_sum_unreduced, single_sum_unreduced, TermFamily, UnreducedSum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClaimId {
    /// `sum_{k<n} c_q(k) = 0 (mod [n])`
    Eq1,
    /// `sum_{k<n} c'_q(k) = 0 (mod [n])`
    Eq2,
    /// `sum_{k<n} sum_{j<=k} c_q(j) c_q(k-j) = 0 (mod [n])`
    Eq3,
    /// `sum_{k<n} sum_{j<=k} c'_q(j) c'_q(k-j) = 0 (mod [n])`
    Eq4,
    /// weight `(-1/8)^k`, `= 0 (mod p)`
    Eq5,
    /// weight `(1/4)^k`, `= 0 (mod p)`
    Eq6,
    /// weight `(-1/8)^k`, `= -p/2 (mod p^2)`
    Eq7,
    /// weight `(1/4)^k`, `= p (mod p^2)`
    Eq8,
}

impl ClaimId {
    pub const ALL: [ClaimId; 8] = [
        ClaimId::Eq1,
        ClaimId::Eq2,
        ClaimId::Eq3,
        ClaimId::Eq4,
        ClaimId::Eq5,
        ClaimId::Eq6,
        ClaimId::Eq7,
        ClaimId::Eq8,
    ];

    /// Claims indexed by a prime `p`; the rest are indexed by an odd `n`.
    pub fn is_prime_indexed(self) -> bool {
        matches!(self, ClaimId::Eq5 | ClaimId::Eq6 | ClaimId::Eq7 | ClaimId::Eq8)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::Eq1 => "eq1",
            ClaimId::Eq2 => "eq2",
            ClaimId::Eq3 => "eq3",
            ClaimId::Eq4 => "eq4",
            ClaimId::Eq5 => "eq5",
            ClaimId::Eq6 => "eq6",
            ClaimId::Eq7 => "eq7",
            ClaimId::Eq8 => "eq8",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown congruence claim `{s}`"))
    }
}

/// Result of checking one claim at one instance. `holds` is true exactly
/// when the two residues agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceReport {
    pub claim: ClaimId,
    pub instance: u64,
    pub holds: bool,
    pub lhs: RingElement,
    pub rhs: RingElement,
    pub modulus: String,
    pub elapsed_ms: u64,
}

impl CongruenceReport {
    fn new(
        claim: ClaimId,
        instance: u64,
        lhs: RingElement,
        rhs: RingElement,
        modulus: String,
        started: Instant,
    ) -> Self {
        Self {
            claim,
            instance,
            holds: lhs == rhs,
            lhs,
            rhs,
            modulus,
            elapsed_ms: started.elapsed().as_millis() as u64,
        }
    }
}

/// Which pipeline decides a q-congruence.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum QPath {
    /// Numerator over the unreduced common denominator, built directly in
    /// `Q[q] / (q^n - 1)`, then divided by `[n]`.
    #[default]
    Folded,
    /// Full sum reduced to lowest terms, then long division by `[n]`.
    Exact,
    /// Full sum reduced to lowest terms, then one check per `Phi_d`, `d | n`.
    Cyclotomic,
}

fn require_odd_prime(p: u64) -> Result<(), CongruenceError> {
    if is_odd_prime(p) {
        Ok(())
    } else {
        Err(CongruenceError::NotOddPrime(p))
    }
}

/// `double_sum(p, x)` cross-checked against its closed-form value, with the
/// denominator confirmed to be a power of two (so invertible mod odd `p^2`).
fn weighted_sum_checked(
    p: u64,
    x: &Rational,
    closed: fn(u64) -> Rational,
) -> Result<Rational, CongruenceError> {
    let direct = double_sum(p, x);
    let expected = closed(p);
    if direct != expected {
        return Err(CongruenceError::OracleMismatch {
            instance: p,
            direct: direct.to_string(),
            closed: expected.to_string(),
        });
    }
    if !is_power_of_two(direct.denom()) {
        return Err(MathError::DenominatorNotCoprime {
            denominator: direct.denom().clone(),
            modulus: Integer::from(p) * p,
        }
        .into());
    }
    Ok(direct)
}

fn neg_eighth() -> Rational {
    rat(-1, 8)
}

fn quarter() -> Rational {
    rat(1, 4)
}

/// Weight `(-1/8)^k`: the sum is `-p/2 (mod p^2)`.
pub fn check_eq7(p: u64) -> Result<CongruenceReport, CongruenceError> {
    require_odd_prime(p)?;
    let started = Instant::now();
    let sum = weighted_sum_checked(p, &neg_eighth(), special_q_neg_half)?;
    let m = Integer::from(p) * p;
    let lhs = rational_mod(&sum, &m)?;
    let rhs = rational_mod(&rat(-(p as i64), 2), &m)?;
    Ok(CongruenceReport::new(
        ClaimId::Eq7,
        p,
        RingElement::Integer(lhs),
        RingElement::Integer(rhs),
        m.to_string(),
        started,
    ))
}

/// Weight `(1/4)^k`: the sum is `p (mod p^2)`.
pub fn check_eq8(p: u64) -> Result<CongruenceReport, CongruenceError> {
    require_odd_prime(p)?;
    let started = Instant::now();
    let sum = weighted_sum_checked(p, &quarter(), special_q_one)?;
    let m = Integer::from(p) * p;
    let lhs = rational_mod(&sum, &m)?;
    let rhs = Integer::from(p) % &m;
    Ok(CongruenceReport::new(
        ClaimId::Eq8,
        p,
        RingElement::Integer(lhs),
        RingElement::Integer(rhs),
        m.to_string(),
        started,
    ))
}

fn mod_p_report(
    claim: ClaimId,
    p: u64,
    x: &Rational,
    closed: fn(u64) -> Rational,
) -> Result<CongruenceReport, CongruenceError> {
    require_odd_prime(p)?;
    let started = Instant::now();
    let sum = weighted_sum_checked(p, x, closed)?;
    let m = Integer::from(p);
    let lhs = rational_mod(&sum, &m)?;
    Ok(CongruenceReport::new(
        claim,
        p,
        RingElement::Integer(lhs),
        RingElement::Integer(Integer::zero()),
        m.to_string(),
        started,
    ))
}

/// Weight `(-1/8)^k`: the sum is `0 (mod p)`.
pub fn check_eq5(p: u64) -> Result<CongruenceReport, CongruenceError> {
    mod_p_report(ClaimId::Eq5, p, &neg_eighth(), special_q_neg_half)
}

/// Weight `(1/4)^k`: the sum is `0 (mod p)`.
pub fn check_eq6(p: u64) -> Result<CongruenceReport, CongruenceError> {
    mod_p_report(ClaimId::Eq6, p, &quarter(), special_q_one)
}

fn q_sum(claim: ClaimId, n: u64, fold: Option<u64>) -> UnreducedSum {
    match claim {
        ClaimId::Eq1 => single_sum_unreduced(TermFamily::C, n, fold),
        ClaimId::Eq2 => single_sum_unreduced(TermFamily::CPrime, n, fold),
        ClaimId::Eq3 => double_sum_unreduced(TermFamily::C, n, fold),
        ClaimId::Eq4 => double_sum_unreduced(TermFamily::CPrime, n, fold),
        _ => unreachable!("not a q-congruence claim"),
    }
}

/// Checks one of the q-congruences at odd `n` along the chosen path.
pub fn check_q_congruence(
    claim: ClaimId,
    n: u64,
    path: QPath,
) -> Result<CongruenceReport, CongruenceError> {
    assert!(!claim.is_prime_indexed(), "{claim} is indexed by primes");
    if n.is_multiple_of(2) {
        return Err(CongruenceError::EvenN(n));
    }
    let started = Instant::now();
    let modulus = format!("[{n}]");
    let zero = RingElement::Poly(QPoly::zero());

    if path == QPath::Folded {
        let folded = q_sum(claim, n, Some(n));
        // The common denominator must avoid every Phi_d with d | n, d > 1;
        // otherwise only the reduced form can decide, so fall through.
        let coprime = divisors(n)
            .into_iter()
            .filter(|&d| d > 1)
            .all(|d| folded.denominator.exponent(d) == 0);
        if coprime {
            let residue = folded.numerator.rem(&q_integer(n))?;
            return Ok(CongruenceReport::new(
                claim,
                n,
                RingElement::Poly(residue),
                zero,
                modulus,
                started,
            ));
        }
    }

    let reduced = q_sum(claim, n, None).reduce();
    let strategy = if path == QPath::Cyclotomic {
        ModStrategy::Cyclotomic
    } else {
        ModStrategy::Direct
    };
    let verdict = congruent_zero_mod_qint_with(&reduced, n, strategy)?;
    Ok(CongruenceReport::new(
        claim,
        n,
        verdict.residue,
        zero,
        modulus,
        started,
    ))
}

pub fn check_eq1(n: u64) -> Result<CongruenceReport, CongruenceError> {
    check_q_congruence(ClaimId::Eq1, n, QPath::default())
}

pub fn check_eq2(n: u64) -> Result<CongruenceReport, CongruenceError> {
    check_q_congruence(ClaimId::Eq2, n, QPath::default())
}

pub fn check_eq3(n: u64) -> Result<CongruenceReport, CongruenceError> {
    check_q_congruence(ClaimId::Eq3, n, QPath::default())
}

pub fn check_eq4(n: u64) -> Result<CongruenceReport, CongruenceError> {
    check_q_congruence(ClaimId::Eq4, n, QPath::default())
}

/// Dispatches to the check for `claim` at `instance`.
pub fn check(claim: ClaimId, instance: u64) -> Result<CongruenceReport, CongruenceError> {
    match claim {
        ClaimId::Eq5 => check_eq5(instance),
        ClaimId::Eq6 => check_eq6(instance),
        ClaimId::Eq7 => check_eq7(instance),
        ClaimId::Eq8 => check_eq8(instance),
        q => check_q_congruence(q, instance, QPath::default()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigmath::{int, modulo, odd_primes_up_to};

    fn residue(r: &CongruenceReport) -> (Integer, Integer) {
        match (&r.lhs, &r.rhs) {
            (RingElement::Integer(a), RingElement::Integer(b)) => (a.clone(), b.clone()),
            _ => panic!("integer report expected"),
        }
    }

    #[test]
    fn eq7_examples() {
        let r = check_eq7(3).unwrap();
        assert!(r.holds);
        assert_eq!(residue(&r), (int(3), int(3)));
        assert_eq!(r.modulus, "9");
        let r = check_eq7(5).unwrap();
        assert_eq!(residue(&r), (int(10), int(10)));
        assert_eq!(check_eq7(2), Err(CongruenceError::NotOddPrime(2)));
        assert_eq!(check_eq7(9), Err(CongruenceError::NotOddPrime(9)));
    }

    #[test]
    fn eq8_examples() {
        let r = check_eq8(3).unwrap();
        assert_eq!(residue(&r), (int(3), int(3)));
        let r = check_eq8(5).unwrap();
        assert_eq!(residue(&r), (int(5), int(5)));
        assert!(check_eq8(7).unwrap().holds);
        assert_eq!(modulo(&int(448), &int(49)), int(7));
    }

    #[test]
    fn mod_p_examples() {
        assert_eq!(residue(&check_eq5(3).unwrap()), (int(0), int(0)));
        assert_eq!(residue(&check_eq6(5).unwrap()), (int(0), int(0)));
        assert_eq!(check_eq5(2), Err(CongruenceError::NotOddPrime(2)));
        assert_eq!(check_eq6(1), Err(CongruenceError::NotOddPrime(1)));
    }

    #[test]
    fn mod_p_follows_from_mod_p_squared() {
        for p in odd_primes_up_to(60) {
            let (l7, _) = residue(&check_eq7(p).unwrap());
            let (l5, _) = residue(&check_eq5(p).unwrap());
            assert_eq!(modulo(&l7, &int(p as i64)), l5);
            let (l8, _) = residue(&check_eq8(p).unwrap());
            let (l6, _) = residue(&check_eq6(p).unwrap());
            assert_eq!(modulo(&l8, &int(p as i64)), l6);
        }
    }

    #[test]
    fn q_congruence_small_instances() {
        for claim in [ClaimId::Eq1, ClaimId::Eq2, ClaimId::Eq3, ClaimId::Eq4] {
            for n in [1, 3, 5, 7] {
                for path in [QPath::Folded, QPath::Exact, QPath::Cyclotomic] {
                    let r = check_q_congruence(claim, n, path).unwrap();
                    assert!(r.holds, "{claim} n={n} {path:?}: {}", r.lhs);
                }
            }
            assert_eq!(
                check_q_congruence(claim, 4, QPath::Folded),
                Err(CongruenceError::EvenN(4))
            );
        }
    }

    #[test]
    fn even_n_sums_are_not_claimed() {
        // the sums exist for even n, only the congruence is unclaimed
        for claim in [ClaimId::Eq1, ClaimId::Eq2, ClaimId::Eq3, ClaimId::Eq4] {
            let reduced = q_sum(claim, 2, None).reduce();
            let v = congruent_zero_mod_qint_with(&reduced, 2, ModStrategy::Direct).unwrap();
            assert_eq!(v.residue, RingElement::Poly(QPoly::from_i64s(&[8])));
            let reduced = q_sum(claim, 4, None).reduce();
            assert_eq!(
                congruent_zero_mod_qint_with(&reduced, 4, ModStrategy::Direct),
                Err(crate::error::RingError::DenominatorNotCoprime { modulus: 4 })
            );
        }
    }

    #[test]
    fn dispatch_and_parse() {
        assert_eq!("EQ7".parse::<ClaimId>(), Ok(ClaimId::Eq7));
        assert!("eq9".parse::<ClaimId>().is_err());
        assert!(check(ClaimId::Eq8, 11).unwrap().holds);
        assert!(check(ClaimId::Eq3, 5).unwrap().holds);
    }
}
