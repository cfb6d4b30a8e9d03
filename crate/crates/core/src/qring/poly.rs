use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer as _;
use num_traits::{One, Zero};

use super::dense;
use crate::bigmath::{format_rational, Integer, Rational};
use crate::error::RingError;

/// Dense polynomial in `q` with exact rational coefficients, lowest exponent
/// first. Highest-degree zeros are always trimmed, so the zero polynomial has
/// no coefficients and `degree()` returns `None` for it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<Rational>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn q() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * q^exp`
    pub fn monomial(c: Rational, exp: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); exp + 1];
        coeffs[exp] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_integers(coeffs: Vec<Integer>) -> Self {
        Self::from_coeffs(coeffs.into_iter().map(Rational::from_integer).collect())
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_integers(coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `q^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Rational::is_integer)
    }

    pub fn eval(&self, q: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * q + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiply by `q^e`.
    pub fn shift(&self, e: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `self = ints / den` with `den > 0` the lcm of the coefficient denominators.
    pub(crate) fn to_scaled_integers(&self) -> (Vec<Integer>, Integer) {
        let den = self
            .coeffs
            .iter()
            .fold(Integer::one(), |acc, c| acc.lcm(c.denom()));
        let ints = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        (ints, den)
    }

    pub(crate) fn from_scaled_integers(ints: Vec<Integer>, den: &Integer) -> Self {
        if den.is_one() {
            return Self::from_integers(ints);
        }
        Self::from_coeffs(
            ints.into_iter()
                .map(|c| Rational::new(c, den.clone()))
                .collect(),
        )
    }

    /// Quotient and remainder with `self = quot * divisor + rem` and
    /// `deg(rem) < deg(divisor)`.
    pub fn divrem(&self, divisor: &QPoly) -> Result<(QPoly, QPoly), RingError> {
        let lead = divisor.leading().ok_or(RingError::DivisionByZeroPoly)?.clone();
        let monic = divisor.scale(&lead.recip());
        if monic.is_integral() {
            let (b, _) = monic.to_scaled_integers();
            let (a, den) = self.to_scaled_integers();
            let (quot, rem) = dense::divrem_monic(&a, &b);
            let quot = Self::from_scaled_integers(quot, &den).scale(&lead.recip());
            return Ok((quot, Self::from_scaled_integers(rem, &den)));
        }
        Ok(self.divrem_generic(&monic, &lead))
    }

    fn divrem_generic(&self, monic: &QPoly, lead: &Rational) -> (QPoly, QPoly) {
        let db = monic.coeffs.len() - 1;
        if self.coeffs.len() <= db {
            return (Self::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - db];
        for i in (0..quot.len()).rev() {
            let c = std::mem::take(&mut rem[i + db]);
            if c.is_zero() {
                continue;
            }
            for (j, m) in monic.coeffs[..db].iter().enumerate() {
                if !m.is_zero() {
                    rem[i + j] -= &c * m;
                }
            }
            quot[i] = c;
        }
        rem.truncate(db);
        (
            Self::from_coeffs(quot).scale(&lead.recip()),
            Self::from_coeffs(rem),
        )
    }

    pub fn rem(&self, divisor: &QPoly) -> Result<QPoly, RingError> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Product in `Q[q] / (q^n - 1)`.
    pub fn mul_mod_qn_minus_1(&self, rhs: &QPoly, n: usize) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let (a, da) = self.fold_mod_qn_minus_1(n).to_scaled_integers();
        let (b, db) = rhs.fold_mod_qn_minus_1(n).to_scaled_integers();
        Self::from_scaled_integers(dense::cyclic_mul(&a, &b, n), &(da * db))
    }

    /// Remainder modulo `q^n - 1`, obtained by adding together the
    /// coefficients of exponents that agree mod `n`. The result has degree
    /// below `n`.
    pub fn fold_mod_qn_minus_1(&self, n: usize) -> QPoly {
        assert!(n >= 1, "fold modulus must be positive");
        if self.coeffs.len() <= n {
            return self.clone();
        }
        let mut out = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out[i % n] += c;
            }
        }
        Self::from_coeffs(out)
    }
}

/// Monic gcd over the rationals. Denominators are cleared and the gcd is
/// taken by the primitive remainder sequence over the integers, which agrees
/// with the rational gcd up to a unit (Gauss's lemma).
pub fn poly_gcd(a: &QPoly, b: &QPoly) -> Result<QPoly, RingError> {
    if a.is_zero() && b.is_zero() {
        return Err(RingError::BothZero);
    }
    if a.is_zero() {
        return Ok(b.monic());
    }
    if b.is_zero() {
        return Ok(a.monic());
    }
    let (ai, _) = a.to_scaled_integers();
    let (bi, _) = b.to_scaled_integers();
    Ok(QPoly::from_integers(dense::gcd_primitive(&ai, &bi)).monic())
}

impl fmt::Display for QPoly {
    /// Ascending `c0 + c1*q + c2*q^2`, zero coefficients omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let c = format_rational(c);
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*q")?,
                _ => write!(f, "{c}*q^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub<&QPoly> for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let (a, da) = self.to_scaled_integers();
        let (b, db) = rhs.to_scaled_integers();
        QPoly::from_scaled_integers(dense::mul(&a, &b), &(da * db))
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<QPoly> for QPoly {
            type Output = QPoly;
            fn $m(self, rhs: QPoly) -> QPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}
