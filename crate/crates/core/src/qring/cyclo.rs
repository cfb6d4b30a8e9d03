//! Cyclotomic polynomials and products of them.
//!
//! Every factor `1 - q^m`, `1 + q^m` and `[m]` splits into cyclotomic
//! polynomials, which are irreducible and pairwise coprime. A q-series term
//! built only from such factors can therefore be kept as an exponent vector
//! `d -> e_d`, where multiplication adds vectors and reduction to lowest terms
//! is just cancelling positive against negative exponents.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};

use super::dense;
use super::poly::QPoly;
use super::rat::QRat;
use crate::bigmath::{Integer, Rational};

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn cache() -> &'static RwLock<HashMap<u64, Arc<Vec<Integer>>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<Vec<Integer>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, memoized.
///
/// Computed as `(q^n - 1) / prod_{d | n, d < n} Phi_d`.
pub(crate) fn cyclotomic_coeffs(n: u64) -> Arc<Vec<Integer>> {
    assert!(n >= 1, "cyclotomic index must be positive");
    if let Some(c) = cache().read().expect("cache poisoned").get(&n) {
        return Arc::clone(c);
    }
    let coeffs = if n == 1 {
        vec![Integer::from(-1), Integer::one()]
    } else {
        let mut acc = vec![Integer::zero(); n as usize + 1];
        acc[0] = Integer::from(-1);
        acc[n as usize] = Integer::one();
        let proper: Vec<Vec<Integer>> = divisors(n)
            .into_iter()
            .filter(|&d| d < n)
            .map(|d| cyclotomic_coeffs(d).as_ref().clone())
            .collect();
        let (quot, rem) = dense::divrem_monic(&acc, &dense::product(proper));
        debug_assert!(rem.is_empty());
        quot
    };
    let coeffs = Arc::new(coeffs);
    cache()
        .write()
        .expect("cache poisoned")
        .entry(n)
        .or_insert_with(|| Arc::clone(&coeffs));
    coeffs
}

/// The `n`-th cyclotomic polynomial `Phi_n(q)` (monic, integer coefficients).
pub fn cyclotomic(n: u64) -> QPoly {
    QPoly::from_integers(cyclotomic_coeffs(n).as_ref().clone())
}

/// True when `Phi_d` divides the integer polynomial `f`. Folds `f` modulo
/// `q^d - 1` first, which `Phi_d` divides, so the actual division only
/// touches a polynomial of degree below `d`.
pub(crate) fn cyclotomic_divides(f: &[Integer], d: u64) -> bool {
    let folded = dense::fold(f, d as usize);
    dense::divrem_monic(&folded, &cyclotomic_coeffs(d)).1.is_empty()
}

/// `scalar * q^q_shift * prod_d Phi_d^{e_d}` with integer exponents, which may
/// be negative. A zero scalar represents the zero function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloProduct {
    scalar: Rational,
    q_shift: i64,
    exponents: BTreeMap<u64, i64>,
}

impl CycloProduct {
    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self {
            scalar: c,
            q_shift: 0,
            exponents: BTreeMap::new(),
        }
    }

    pub fn q_power(e: i64) -> Self {
        Self {
            q_shift: e,
            ..Self::one()
        }
    }

    pub fn cyclotomic(d: u64) -> Self {
        let mut out = Self::one();
        out.exponents.insert(d, 1);
        out
    }

    /// `1 - sign * q^m`. For `m >= 1`,
    /// `1 - q^m = -prod_{d | m} Phi_d` and
    /// `1 + q^m = prod_{d | 2m, d does not divide m} Phi_d`.
    pub fn one_minus_signed_q_power(sign: i8, m: u64) -> Self {
        if m == 0 {
            return Self::constant(Rational::from_integer(Integer::from(1 - sign as i64)));
        }
        let mut out = Self::one();
        if sign > 0 {
            out.scalar = -out.scalar;
            for d in divisors(m) {
                out.exponents.insert(d, 1);
            }
        } else {
            for d in divisors(2 * m) {
                if !m.is_multiple_of(d) {
                    out.exponents.insert(d, 1);
                }
            }
        }
        out
    }

    /// `[m] = prod_{d | m, d > 1} Phi_d`; zero for `m = 0`.
    pub fn q_integer(m: u64) -> Self {
        if m == 0 {
            return Self::constant(Rational::zero());
        }
        let mut out = Self::one();
        for d in divisors(m).into_iter().filter(|&d| d > 1) {
            out.exponents.insert(d, 1);
        }
        out
    }

    /// `(sign * q^e; q^step)_k`
    pub fn q_pochhammer(sign: i8, e: u64, step: u64, k: u64) -> Self {
        (0..k).fold(Self::one(), |acc, i| {
            acc * Self::one_minus_signed_q_power(sign, e + i * step)
        })
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero()
    }

    pub fn scalar(&self) -> &Rational {
        &self.scalar
    }

    pub fn q_shift(&self) -> i64 {
        self.q_shift
    }

    pub fn exponents(&self) -> &BTreeMap<u64, i64> {
        &self.exponents
    }

    pub fn exponent(&self, d: u64) -> i64 {
        self.exponents.get(&d).copied().unwrap_or(0)
    }

    pub fn scale(mut self, c: &Rational) -> Self {
        self.scalar *= c;
        self
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self {
            scalar: self.scalar.recip(),
            q_shift: -self.q_shift,
            exponents: self.exponents.iter().map(|(&d, &e)| (d, -e)).collect(),
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        Self {
            scalar: num_traits::pow(self.scalar.clone(), e as usize),
            q_shift: self.q_shift * e as i64,
            exponents: self
                .exponents
                .iter()
                .map(|(&d, &x)| (d, x * e as i64))
                .collect(),
        }
    }

    /// Denominator part: `q^max(0,-shift) * prod_{e_d < 0} Phi_d^{-e_d}`,
    /// returned with unit scalar.
    pub fn denominator(&self) -> Self {
        Self {
            scalar: Rational::one(),
            q_shift: (-self.q_shift).max(0),
            exponents: self
                .exponents
                .iter()
                .filter(|(_, &e)| e < 0)
                .map(|(&d, &e)| (d, -e))
                .collect(),
        }
    }

    /// Numerator part (carrying the scalar).
    pub fn numerator(&self) -> Self {
        Self {
            scalar: self.scalar.clone(),
            q_shift: self.q_shift.max(0),
            exponents: self
                .exponents
                .iter()
                .filter(|(_, &e)| e > 0)
                .map(|(&d, &e)| (d, e))
                .collect(),
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.q_shift >= 0 && self.exponents.values().all(|&e| e >= 0)
    }

    /// Least common multiple of the denominators of `terms`, with unit scalar.
    pub fn common_denominator<'a>(terms: impl IntoIterator<Item = &'a CycloProduct>) -> Self {
        let mut out = Self::one();
        for t in terms.into_iter().filter(|t| !t.is_zero()) {
            let den = t.denominator();
            out.q_shift = out.q_shift.max(den.q_shift);
            for (d, e) in den.exponents {
                let slot = out.exponents.entry(d).or_insert(0);
                *slot = (*slot).max(e);
            }
        }
        out
    }

    fn integer_factors(&self) -> Vec<Vec<Integer>> {
        let mut factors = Vec::new();
        for (&d, &e) in &self.exponents {
            let phi = cyclotomic_coeffs(d);
            for _ in 0..e {
                factors.push(phi.as_ref().clone());
            }
        }
        factors
    }

    /// Expands a product with no negative exponents into integer coefficients
    /// (scalar excluded).
    fn expand_integer(&self) -> Vec<Integer> {
        debug_assert!(self.is_polynomial());
        let mut out = dense::product(self.integer_factors());
        if self.q_shift > 0 {
            let mut shifted = vec![Integer::zero(); self.q_shift as usize];
            shifted.append(&mut out);
            out = shifted;
        }
        out
    }

    /// The polynomial, or `None` if some exponent is negative.
    pub fn expand(&self) -> Option<QPoly> {
        if !self.is_polynomial() {
            return None;
        }
        if self.is_zero() {
            return Some(QPoly::zero());
        }
        Some(QPoly::from_integers(self.expand_integer()).scale(&self.scalar))
    }

    /// The polynomial reduced modulo `q^n - 1`, computed factor by factor in
    /// the quotient ring so no intermediate exceeds degree `n`.
    pub fn expand_folded(&self, n: u64) -> Option<QPoly> {
        if !self.is_polynomial() {
            return None;
        }
        if self.is_zero() {
            return Some(QPoly::zero());
        }
        let n = n as usize;
        let mut acc = vec![Integer::one()];
        for (&d, &e) in &self.exponents {
            let phi = dense::fold(&cyclotomic_coeffs(d), n);
            for _ in 0..e {
                acc = dense::cyclic_mul(&acc, &phi, n);
            }
        }
        let mut shifted = vec![Integer::zero(); n];
        let s = self.q_shift as usize;
        for (i, c) in acc.into_iter().enumerate() {
            shifted[(i + s) % n] += c;
        }
        dense::trim(&mut shifted);
        Some(QPoly::from_integers(shifted).scale(&self.scalar))
    }

    /// The reduced rational function. Distinct cyclotomic polynomials are
    /// coprime, so splitting exponents by sign already gives lowest terms.
    pub fn to_qrat(&self) -> QRat {
        if self.is_zero() {
            return QRat::zero();
        }
        let num = self.numerator().expand().expect("nonnegative exponents");
        let den = self.denominator().expand().expect("nonnegative exponents");
        QRat::from_reduced_parts(num, den)
    }

    pub fn eval(&self, q: &Rational) -> Option<Rational> {
        let mut acc = self.scalar.clone();
        if self.is_zero() {
            return Some(acc);
        }
        let qpow = |e: i64| -> Option<Rational> {
            if q.is_zero() && e < 0 {
                return None;
            }
            Some(num_traits::pow(q.clone(), e.unsigned_abs() as usize))
                .map(|v| if e < 0 { v.recip() } else { v })
        };
        acc *= qpow(self.q_shift)?;
        for (&d, &e) in &self.exponents {
            let v = cyclotomic(d).eval(q);
            if v.is_zero() && e < 0 {
                return None;
            }
            let v = num_traits::pow(v, e.unsigned_abs() as usize);
            acc *= if e < 0 { v.recip() } else { v };
        }
        Some(acc)
    }
}

impl std::ops::Mul for CycloProduct {
    type Output = CycloProduct;
    fn mul(self, rhs: CycloProduct) -> CycloProduct {
        &self * &rhs
    }
}

impl std::ops::Mul<&CycloProduct> for &CycloProduct {
    type Output = CycloProduct;
    fn mul(self, rhs: &CycloProduct) -> CycloProduct {
        if self.is_zero() || rhs.is_zero() {
            return CycloProduct::constant(Rational::zero());
        }
        let mut exponents = self.exponents.clone();
        for (&d, &e) in &rhs.exponents {
            let slot = exponents.entry(d).or_insert(0);
            *slot += e;
            if *slot == 0 {
                exponents.remove(&d);
            }
        }
        CycloProduct {
            scalar: &self.scalar * &rhs.scalar,
            q_shift: self.q_shift + rhs.q_shift,
            exponents,
        }
    }
}

/// Reduces `num / den` to lowest terms when `den` is a cyclotomic product
/// (positive exponents, unit scalar): each `Phi_d` and each power of `q` is
/// cancelled for as long as it divides the numerator.
pub fn reduce_over_cyclotomic(num: &QPoly, den: &CycloProduct) -> QRat {
    if num.is_zero() {
        return QRat::zero();
    }
    debug_assert!(den.is_polynomial() && den.scalar.is_one());
    let (mut ints, scale) = num.to_scaled_integers();
    let mut remaining = den.clone();

    let mut shift = remaining.q_shift;
    let low = ints.iter().take_while(|c| c.is_zero()).count() as i64;
    let cancel = low.min(shift);
    ints.drain(..cancel as usize);
    shift -= cancel;
    remaining.q_shift = shift;

    let indices: Vec<u64> = remaining.exponents.keys().copied().collect();
    for d in indices {
        let phi = cyclotomic_coeffs(d);
        let mut e = remaining.exponent(d);
        while e > 0 && cyclotomic_divides(&ints, d) {
            ints = dense::divrem_monic(&ints, &phi).0;
            e -= 1;
        }
        if e == 0 {
            remaining.exponents.remove(&d);
        } else {
            remaining.exponents.insert(d, e);
        }
    }
    let num = QPoly::from_scaled_integers(ints, &scale);
    let den = remaining.expand().expect("positive exponents");
    QRat::from_reduced_parts(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigmath::rat;
    use crate::qring::q_integer;

    fn mobius(mut n: u64) -> i64 {
        let mut mu = 1;
        let mut p = 2;
        while p * p <= n {
            if n.is_multiple_of(p) {
                n /= p;
                if n.is_multiple_of(p) {
                    return 0;
                }
                mu = -mu;
            }
            p += 1;
        }
        if n > 1 {
            mu = -mu;
        }
        mu
    }

    // Phi_n = prod_{d | n} (q^d - 1)^{mu(n/d)}, evaluated with plain QPoly
    // arithmetic as an oracle independent of the recursive division.
    fn cyclotomic_by_mobius(n: u64) -> QPoly {
        let mut num = QPoly::one();
        let mut den = QPoly::one();
        for d in divisors(n) {
            let f = &QPoly::monomial(Rational::one(), d as usize) - &QPoly::one();
            match mobius(n / d) {
                1 => num = &num * &f,
                -1 => den = &den * &f,
                _ => {}
            }
        }
        let (quot, rem) = num.divrem(&den).unwrap();
        assert!(rem.is_zero());
        quot
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), QPoly::from_i64s(&[-1, 1]));
        assert_eq!(cyclotomic(2), QPoly::from_i64s(&[1, 1]));
        assert_eq!(cyclotomic_by_mobius(6), QPoly::from_i64s(&[1, -1, 1]));
        assert_eq!(cyclotomic(6), QPoly::from_i64s(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), QPoly::from_i64s(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn recursive_division_matches_mobius_product() {
        for n in 1..=105 {
            assert_eq!(cyclotomic(n), cyclotomic_by_mobius(n), "Phi_{n}");
        }
    }

    #[test]
    fn signed_factors_expand_correctly() {
        for m in 0..30u64 {
            let minus = &QPoly::one() - &QPoly::monomial(Rational::one(), m as usize);
            let plus = &QPoly::one() + &QPoly::monomial(Rational::one(), m as usize);
            assert_eq!(CycloProduct::one_minus_signed_q_power(1, m).expand().unwrap(), minus);
            assert_eq!(CycloProduct::one_minus_signed_q_power(-1, m).expand().unwrap(), plus);
            assert_eq!(CycloProduct::q_integer(m).expand().unwrap(), q_integer(m));
        }
    }

    #[test]
    fn folded_expansion_agrees_with_fold_of_expansion() {
        let f = CycloProduct::q_pochhammer(-1, 1, 2, 6) * CycloProduct::q_power(11);
        for n in 1..15 {
            assert_eq!(
                f.expand_folded(n).unwrap(),
                f.expand().unwrap().fold_mod_qn_minus_1(n as usize)
            );
        }
    }

    #[test]
    fn to_qrat_is_reduced() {
        let f = CycloProduct::q_pochhammer(1, 1, 2, 3)
            * CycloProduct::q_pochhammer(1, 4, 4, 3).recip().unwrap();
        let r = f.to_qrat();
        let unreduced = QRat::new(
            CycloProduct::q_pochhammer(1, 1, 2, 3).expand().unwrap(),
            CycloProduct::q_pochhammer(1, 4, 4, 3).expand().unwrap(),
        )
        .unwrap();
        assert_eq!(r, unreduced);
        assert_eq!(f.eval(&rat(2, 1)).unwrap(), r.eval(&rat(2, 1)).unwrap());
    }

    #[test]
    fn reduction_over_cyclotomic_denominator() {
        // (q;q)_6 has six sign flips, so its scalar is one
        let den = CycloProduct::q_pochhammer(1, 1, 1, 6) * CycloProduct::q_power(2);
        let num = &q_integer(6) * &QPoly::from_i64s(&[0, 3, 1]);
        let fast = reduce_over_cyclotomic(&num, &den);
        let slow = QRat::new(num, den.expand().unwrap()).unwrap();
        assert_eq!(fast, slow);
    }
}
