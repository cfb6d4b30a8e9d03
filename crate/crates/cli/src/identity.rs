//! Exact identity checks: each pairs a direct computation with its closed form.

use std::fmt;
use std::time::Instant;

use num_traits::{One, Pow};

use qcong_core::bigmath::{format_rational, Integer, Rational};
use qcong_core::closedform::{
    closed_form, geometric_s, geometric_s_direct, geometric_t, geometric_t_direct,
    special_q_neg_half, special_q_one, weighted_sum_poly,
};
use qcong_core::sums::{double_sum, inner_closed, inner_conv_sum, plain_conv_sum, weighted_conv_sum};
use qcong_core::QRat;

use crate::report::Record;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, clap::ValueEnum)]
pub enum IdentityId {
    /// weighted sum of the inner convolution against its rational closed form
    Eq9,
    /// double sum at weight -1/8 against `(-1/2)^n n (1 - 3n)`
    Eq10,
    /// double sum at weight 1/4 against `n (3n^2 - 3n + 2) / 2`
    Eq11,
    /// inner convolution against `4^k (9k^2 + 3k + 2) / 2`
    Eq12,
    /// `sum binom(2j,j) binom(2k-2j,k-j) = 4^k`
    Eq15,
    /// weighted convolution against `4^k k(k-1)/8`
    Eq19,
    /// `sum_{k<n} k q^k` against its closed form
    Eq21,
    /// `sum_{k<n} k^2 q^k` against its closed form
    Eq23,
}

impl IdentityId {
    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::Eq9 => "eq9",
            IdentityId::Eq10 => "eq10",
            IdentityId::Eq11 => "eq11",
            IdentityId::Eq12 => "eq12",
            IdentityId::Eq15 => "eq15",
            IdentityId::Eq19 => "eq19",
            IdentityId::Eq21 => "eq21",
            IdentityId::Eq23 => "eq23",
        }
    }

    /// Ids indexed by `k` start at 0; the others start at `n = 1`.
    pub fn first_instance(self) -> u64 {
        match self {
            IdentityId::Eq12 | IdentityId::Eq15 | IdentityId::Eq19 => 0,
            _ => 1,
        }
    }

    pub fn instances(self, max_n: u64) -> impl Iterator<Item = u64> {
        self.first_instance()..=max_n
    }

    pub fn check(self, instance: u64) -> Record {
        let started = Instant::now();
        let (lhs, rhs, holds) = match self {
            IdentityId::Eq9 => {
                let direct = QRat::from(weighted_sum_poly(instance));
                let closed = closed_form(instance);
                let holds = direct == closed;
                (direct.to_string(), closed.to_string(), holds)
            }
            IdentityId::Eq10 => rationals(
                double_sum(instance, &Rational::new((-1).into(), 8.into())),
                special_q_neg_half(instance),
            ),
            IdentityId::Eq11 => rationals(
                double_sum(instance, &Rational::new(1.into(), 4.into())),
                special_q_one(instance),
            ),
            IdentityId::Eq12 => integers(inner_conv_sum(instance), inner_closed(instance)),
            IdentityId::Eq15 => integers(plain_conv_sum(instance), four_pow(instance)),
            IdentityId::Eq19 => {
                let k = Integer::from(instance);
                let rhs = four_pow(instance) * &k * (&k - Integer::one()) / 8u32;
                integers(weighted_conv_sum(instance), rhs)
            }
            IdentityId::Eq21 => {
                let direct = QRat::from(geometric_s_direct(instance));
                let closed = geometric_s(instance);
                let holds = direct == closed;
                (direct.to_string(), closed.to_string(), holds)
            }
            IdentityId::Eq23 => {
                let direct = QRat::from(geometric_t_direct(instance));
                let closed = geometric_t(instance);
                let holds = direct == closed;
                (direct.to_string(), closed.to_string(), holds)
            }
        };
        Record {
            claim: self.as_str().to_string(),
            instance,
            holds,
            lhs,
            rhs,
            modulus: "exact".to_string(),
            elapsed_ms: started.elapsed().as_millis() as u64,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn four_pow(k: u64) -> Integer {
    Integer::from(4u32).pow(k)
}

fn integers(lhs: Integer, rhs: Integer) -> (String, String, bool) {
    let holds = lhs == rhs;
    (lhs.to_string(), rhs.to_string(), holds)
}

fn rationals(lhs: Rational, rhs: Rational) -> (String, String, bool) {
    let holds = lhs == rhs;
    (format_rational(&lhs), format_rational(&rhs), holds)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instance_ranges() {
        assert_eq!(IdentityId::Eq12.instances(2).count(), 3);
        assert_eq!(IdentityId::Eq10.instances(1).collect::<Vec<_>>(), vec![1]);
        assert_eq!(IdentityId::Eq9.instances(0).count(), 0);
    }

    #[test]
    fn small_values() {
        let r = IdentityId::Eq10.check(1);
        assert!(r.holds);
        assert_eq!((r.lhs.as_str(), r.rhs.as_str()), ("1", "1"));
        let r = IdentityId::Eq12.check(1);
        assert_eq!(r.lhs, "28");
        let r = IdentityId::Eq19.check(2);
        assert_eq!(r.lhs, "4");
        assert!(r.holds);
    }

    #[test]
    fn every_id_holds_on_small_instances() {
        use clap::ValueEnum;
        for id in IdentityId::value_variants() {
            for i in id.instances(6) {
                let r = id.check(i);
                assert!(r.holds, "{id} at {i}: {} vs {}", r.lhs, r.rhs);
            }
        }
    }
}
