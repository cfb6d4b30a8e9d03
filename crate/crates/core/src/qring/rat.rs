use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::{poly_gcd, QPoly};
use crate::bigmath::Rational;
use crate::error::RingError;

/// Rational function `num / den` in lowest terms with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QRat {
    num: QPoly,
    den: QPoly,
}

impl QRat {
    /// Builds `num / den` and reduces it: divide out the gcd, then scale so the
    /// denominator is monic.
    pub fn new(num: QPoly, den: QPoly) -> Result<Self, RingError> {
        if den.is_zero() {
            return Err(RingError::DivisionByZeroPoly);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = poly_gcd(&num, &den)?;
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.divrem(&g)?.0, den.divrem(&g)?.0)
        };
        let lead = den.leading().expect("nonzero denominator").recip();
        Ok(Self {
            num: num.scale(&lead),
            den: den.scale(&lead),
        })
    }

    /// Caller guarantees `num` and `den` are coprime and `den` is monic.
    pub(crate) fn from_reduced_parts(num: QPoly, den: QPoly) -> Self {
        debug_assert!(den.is_monic());
        if num.is_zero() {
            return Self::zero();
        }
        Self { num, den }
    }

    pub fn zero() -> Self {
        Self::from_poly(QPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(QPoly::one())
    }

    pub fn from_poly(p: QPoly) -> Self {
        Self {
            num: p,
            den: QPoly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(QPoly::constant(c))
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The numerator, when the denominator is one.
    pub fn as_poly(&self) -> Option<&QPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn eval(&self, q: &Rational) -> Result<Rational, RingError> {
        let d = self.den.eval(q);
        if d.is_zero() {
            return Err(RingError::SingularPoint(q.clone()));
        }
        Ok(self.num.eval(q) / d)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_reduced_parts(self.num.scale(c), self.den.clone())
    }

    pub fn recip(&self) -> Result<Self, RingError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &QRat) -> Result<Self, RingError> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        Self::from_reduced_parts(self.num.pow(e), self.den.pow(e))
    }
}

impl From<QPoly> for QRat {
    fn from(p: QPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add<&QRat> for &QRat {
    type Output = QRat;
    fn add(self, rhs: &QRat) -> QRat {
        if self.den == rhs.den {
            return QRat::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero denominator");
        }
        let g = poly_gcd(&self.den, &rhs.den).expect("nonzero denominators");
        let left = rhs.den.divrem(&g).expect("gcd divides").0;
        let right = self.den.divrem(&g).expect("gcd divides").0;
        let num = &(&self.num * &left) + &(&rhs.num * &right);
        QRat::new(num, &self.den * &left).expect("nonzero denominator")
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat::from_reduced_parts(-&self.num, self.den.clone())
    }
}

impl Sub<&QRat> for &QRat {
    type Output = QRat;
    fn sub(self, rhs: &QRat) -> QRat {
        self + &(-rhs)
    }
}

impl Mul<&QRat> for &QRat {
    type Output = QRat;
    fn mul(self, rhs: &QRat) -> QRat {
        if self.is_zero() || rhs.is_zero() {
            return QRat::zero();
        }
        // cross-cancel first so the final gcd works on smaller inputs
        let g1 = poly_gcd(&self.num, &rhs.den).expect("nonzero");
        let g2 = poly_gcd(&rhs.num, &self.den).expect("nonzero");
        let n1 = self.num.divrem(&g1).expect("gcd divides").0;
        let d2 = rhs.den.divrem(&g1).expect("gcd divides").0;
        let n2 = rhs.num.divrem(&g2).expect("gcd divides").0;
        let d1 = self.den.divrem(&g2).expect("gcd divides").0;
        QRat::new(&n1 * &n2, &d1 * &d2).expect("nonzero denominator")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<QRat> for QRat {
            type Output = QRat;
            fn $m(self, rhs: QRat) -> QRat {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        -&self
    }
}

impl Default for QRat {
    fn default() -> Self {
        Self::zero()
    }
}

impl One for QRat {
    fn one() -> Self {
        QRat::one()
    }
}

impl Zero for QRat {
    fn zero() -> Self {
        QRat::zero()
    }

    fn is_zero(&self) -> bool {
        QRat::is_zero(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigmath::rat;

    fn p(xs: &[i64]) -> QPoly {
        QPoly::from_i64s(xs)
    }

    #[test]
    fn reduces_and_normalizes() {
        // (q^2 - 1) / (2q - 2) = (q + 1) / 2 -> (q/2 + 1/2) / 1
        let r = QRat::new(p(&[-1, 0, 1]), p(&[-2, 2])).unwrap();
        assert_eq!(r.den(), &QPoly::one());
        assert_eq!(r.num(), &QPoly::from_coeffs(vec![rat(1, 2), rat(1, 2)]));
        assert_eq!(QRat::new(p(&[1]), QPoly::zero()), Err(RingError::DivisionByZeroPoly));
    }

    #[test]
    fn arithmetic_matches_evaluation() {
        let a = QRat::new(p(&[1, 2]), p(&[3, 0, 1])).unwrap();
        let b = QRat::new(p(&[0, 1, 1]), p(&[1, 1])).unwrap();
        for x in [rat(2, 1), rat(-1, 2), rat(5, 3)] {
            let (ax, bx) = (a.eval(&x).unwrap(), b.eval(&x).unwrap());
            assert_eq!((&a + &b).eval(&x).unwrap(), &ax + &bx);
            assert_eq!((&a - &b).eval(&x).unwrap(), &ax - &bx);
            assert_eq!((&a * &b).eval(&x).unwrap(), &ax * &bx);
            assert_eq!(a.checked_div(&b).unwrap().eval(&x).unwrap(), &ax / &bx);
        }
    }

    #[test]
    fn pole_is_reported() {
        let r = QRat::new(p(&[1]), p(&[-1, 1])).unwrap();
        assert_eq!(r.eval(&rat(1, 1)), Err(RingError::SingularPoint(rat(1, 1))));
    }

    #[test]
    fn cancellation_to_polynomial() {
        let a = QRat::new(p(&[1]), p(&[-1, 1])).unwrap();
        let b = QRat::from_poly(p(&[-1, 1]));
        assert_eq!(&a * &b, QRat::one());
        assert_eq!((&a - &a), QRat::zero());
    }
}
