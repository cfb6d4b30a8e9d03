//! Central binomial convolutions, the weighted double sums over them, and the
//! q-series terms `c_q(k)`, `c'_q(k)` together with their single and double
//! (Cauchy product) partial sums.

use num_traits::{One, Zero};

use crate::bigmath::{central_binomials, Integer, Rational};
use crate::qring::{reduce_over_cyclotomic, CycloProduct, QPoly, QRat};

/// `sum_{j=0}^{k} C(2j,j) C(2k-2j,k-j) (6j+1)(6k-6j+1)` given the table of
/// central binomials up to at least `k`.
pub fn inner_conv_sum_with(table: &[Integer], k: u64) -> Integer {
    let k = k as usize;
    (0..=k)
        .map(|j| {
            let weight = (6 * j as u64 + 1) * (6 * (k - j) as u64 + 1);
            &table[j] * &table[k - j] * weight
        })
        .sum()
}

pub fn inner_conv_sum(k: u64) -> Integer {
    inner_conv_sum_with(&central_binomials(k), k)
}

/// `4^k (9k^2 + 3k + 2) / 2`. The quadratic is always even because
/// `3k(3k+1)` is a product of consecutive integers.
pub fn inner_closed(k: u64) -> Integer {
    let k_big = Integer::from(k);
    let quad: Integer = Integer::from(9u32) * &k_big * &k_big + 3u32 * &k_big + 2u32;
    (Integer::one() << (2 * k)) * (quad / 2u32)
}

/// `sum_j C(2j,j) C(2k-2j,k-j)`, which equals `4^k`.
pub fn plain_conv_sum(k: u64) -> Integer {
    let table = central_binomials(k);
    let k = k as usize;
    (0..=k).map(|j| &table[j] * &table[k - j]).sum()
}

/// `sum_j C(2j,j) C(2k-2j,k-j) j (k-j)`, which equals `4^k k(k-1) / 8`.
pub fn weighted_conv_sum(k: u64) -> Integer {
    let table = central_binomials(k);
    let k = k as usize;
    (0..=k)
        .map(|j| &table[j] * &table[k - j] * (j * (k - j)) as u64)
        .sum()
}

/// `sum_{k=0}^{n-1} x^k * inner_conv_sum(k)`.
pub fn double_sum(n: u64, x: &Rational) -> Rational {
    double_sum_prefixes(n, x).pop().unwrap_or_else(Rational::zero)
}

/// All partial sums at once: entry `i` is `double_sum(i + 1, x)`.
pub fn double_sum_prefixes(n_max: u64, x: &Rational) -> Vec<Rational> {
    if n_max == 0 {
        return Vec::new();
    }
    let table = central_binomials(n_max - 1);
    // sum with a common denominator den^k so only one reduction per prefix
    let (xn, xd) = (x.numer().clone(), x.denom().clone());
    let mut out = Vec::with_capacity(n_max as usize);
    let mut acc = Integer::zero();
    let mut num_pow = Integer::one();
    let mut den_pow = Integer::one();
    for k in 0..n_max {
        if k > 0 {
            acc *= &xd;
            num_pow *= &xn;
            den_pow *= &xd;
        }
        acc += &num_pow * inner_conv_sum_with(&table, k);
        out.push(Rational::new(acc.clone(), den_pow.clone()));
    }
    out
}

/// Which of the two q-series families a term belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TermFamily {
    /// `c_q(k) = (-1)^k (q;q^2)_k (-q;q^2)_k^2 / ((q^4;q^4)_k (-q^4;q^4)_k^2) [6k+1] q^{3k^2}`
    C,
    /// `c'_q(k) = (q^2;q^4)_k (-q;q^2)_k^2 / ((q^4;q^4)_k (-q^4;q^4)_k^2) [6k+1] q^{k^2}`
    CPrime,
}

impl TermFamily {
    /// The term kept as a product of cyclotomic polynomials, hence already
    /// in lowest terms.
    pub fn factored(self, k: u64) -> CycloProduct {
        let shared = CycloProduct::q_pochhammer(-1, 1, 2, k).pow(2)
            * CycloProduct::q_pochhammer(1, 4, 4, k).recip().expect("nonzero")
            * CycloProduct::q_pochhammer(-1, 4, 4, k)
                .pow(2)
                .recip()
                .expect("nonzero")
            * CycloProduct::q_integer(6 * k + 1);
        match self {
            TermFamily::C => {
                let sign = if k.is_multiple_of(2) { 1 } else { -1 };
                shared
                    * CycloProduct::q_pochhammer(1, 1, 2, k)
                    * CycloProduct::q_power(3 * (k * k) as i64)
                    * CycloProduct::constant(Rational::from_integer(sign.into()))
            }
            TermFamily::CPrime => {
                shared
                    * CycloProduct::q_pochhammer(1, 2, 4, k)
                    * CycloProduct::q_power((k * k) as i64)
            }
        }
    }

    pub fn term(self, k: u64) -> QRat {
        self.factored(k).to_qrat()
    }

    pub fn terms(self, n: u64) -> Vec<CycloProduct> {
        (0..n).map(|k| self.factored(k)).collect()
    }
}

pub fn c_q_term(k: u64) -> QRat {
    TermFamily::C.term(k)
}

pub fn cp_q_term(k: u64) -> QRat {
    TermFamily::CPrime.term(k)
}

/// A sum written over a cyclotomic common denominator, not yet reduced.
/// When built with folding, `numerator` is only known modulo `q^n - 1`.
#[derive(Clone, Debug)]
pub struct UnreducedSum {
    pub numerator: QPoly,
    pub denominator: CycloProduct,
    pub folded_mod: Option<u64>,
}

impl UnreducedSum {
    /// Lowest-terms value; only meaningful for an unfolded numerator.
    pub fn reduce(&self) -> QRat {
        assert!(self.folded_mod.is_none(), "cannot reduce a folded numerator");
        reduce_over_cyclotomic(&self.numerator, &self.denominator)
    }
}

/// Numerators `N_k` with `t_k = N_k / L` for the common denominator `L`.
fn numerators_over(
    terms: &[CycloProduct],
    den: &CycloProduct,
    fold: Option<u64>,
) -> Vec<QPoly> {
    terms
        .iter()
        .map(|t| {
            let scaled = t * den;
            match fold {
                Some(n) => scaled.expand_folded(n),
                None => scaled.expand(),
            }
            .expect("common denominator clears every term")
        })
        .collect()
}

/// `sum_{k<n} t_k` over the lcm of the term denominators.
pub fn single_sum_unreduced(family: TermFamily, n: u64, fold: Option<u64>) -> UnreducedSum {
    let terms = family.terms(n);
    let den = CycloProduct::common_denominator(&terms);
    let numerator = numerators_over(&terms, &den, fold)
        .iter()
        .fold(QPoly::zero(), |acc, p| &acc + p);
    UnreducedSum {
        numerator,
        denominator: den,
        folded_mod: fold,
    }
}

/// `sum_{k<n} sum_{j<=k} t_j t_{k-j} = sum_j N_j (N_0 + ... + N_{n-1-j}) / L^2`.
pub fn double_sum_unreduced(family: TermFamily, n: u64, fold: Option<u64>) -> UnreducedSum {
    let terms = family.terms(n);
    let den = CycloProduct::common_denominator(&terms);
    let nums = numerators_over(&terms, &den, fold);
    let mut prefix = Vec::with_capacity(nums.len());
    let mut running = QPoly::zero();
    for p in &nums {
        running = &running + p;
        prefix.push(running.clone());
    }
    let mut numerator = QPoly::zero();
    for (j, nj) in nums.iter().enumerate() {
        let partner = &prefix[nums.len() - 1 - j];
        let prod = match fold {
            Some(m) => nj.mul_mod_qn_minus_1(partner, m as usize),
            None => nj * partner,
        };
        numerator = &numerator + &prod;
    }
    UnreducedSum {
        numerator,
        denominator: den.pow(2),
        folded_mod: fold,
    }
}

/// `sum_{k<n} t_k` in lowest terms.
pub fn q_single_sum(family: TermFamily, n: u64) -> QRat {
    single_sum_unreduced(family, n, None).reduce()
}

/// `sum_{k<n} sum_{j<=k} t_j t_{k-j}` in lowest terms.
pub fn q_double_sum(family: TermFamily, n: u64) -> QRat {
    double_sum_unreduced(family, n, None).reduce()
}
