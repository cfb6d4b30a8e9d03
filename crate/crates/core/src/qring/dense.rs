//! Dense integer polynomial kernels (ascending coefficients).
//!
//! `QPoly` clears denominators and runs its heavy arithmetic through these
//! routines, which keeps big-integer multiplication free of per-step gcds.

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::bigmath::Integer;

const KARATSUBA_CUTOFF: usize = 48;

pub fn trim(v: &mut Vec<Integer>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

pub fn add_assign(acc: &mut Vec<Integer>, other: &[Integer]) {
    if acc.len() < other.len() {
        acc.resize(other.len(), Integer::zero());
    }
    for (a, b) in acc.iter_mut().zip(other) {
        *a += b;
    }
}

fn sub_assign(acc: &mut Vec<Integer>, other: &[Integer]) {
    if acc.len() < other.len() {
        acc.resize(other.len(), Integer::zero());
    }
    for (a, b) in acc.iter_mut().zip(other) {
        *a -= b;
    }
}

fn schoolbook(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    let mut out = vec![Integer::zero(); a.len() + b.len() - 1];
    // cyclotomic factors are sparse, so walk the sparser side on the outside
    let (outer, inner) = if count_nonzero(a) <= count_nonzero(b) {
        (a, b)
    } else {
        (b, a)
    };
    for (i, x) in outer.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (slot, y) in out[i..].iter_mut().zip(inner) {
            if !y.is_zero() {
                *slot += x * y;
            }
        }
    }
    out
}

fn count_nonzero(v: &[Integer]) -> usize {
    v.iter().filter(|c| !c.is_zero()).count()
}

fn karatsuba(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    if a.len().min(b.len()) < KARATSUBA_CUTOFF {
        return schoolbook(a, b);
    }
    let half = a.len().max(b.len()) / 2;
    let (a0, a1) = a.split_at(half.min(a.len()));
    let (b0, b1) = b.split_at(half.min(b.len()));
    if a1.is_empty() || b1.is_empty() {
        // lopsided operands: split the longer one only
        let (long, short) = if a1.is_empty() { (b, a) } else { (a, b) };
        let mut out = vec![Integer::zero(); long.len() + short.len() - 1];
        for (chunk_idx, chunk) in long.chunks(short.len().max(1)).enumerate() {
            let part = karatsuba(chunk, short);
            let off = chunk_idx * short.len().max(1);
            for (slot, v) in out[off..].iter_mut().zip(part) {
                *slot += v;
            }
        }
        return out;
    }
    let z0 = karatsuba(a0, b0);
    let z2 = karatsuba(a1, b1);
    let mut sa = a0.to_vec();
    add_assign(&mut sa, a1);
    let mut sb = b0.to_vec();
    add_assign(&mut sb, b1);
    let mut z1 = karatsuba(&sa, &sb);
    sub_assign(&mut z1, &z0);
    sub_assign(&mut z1, &z2);

    let mut out = vec![Integer::zero(); a.len() + b.len() - 1];
    for (slot, v) in out.iter_mut().zip(z0) {
        *slot += v;
    }
    for (slot, v) in out[half..].iter_mut().zip(z1) {
        *slot += v;
    }
    for (slot, v) in out[2 * half..].iter_mut().zip(z2) {
        *slot += v;
    }
    out
}

pub fn mul(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = karatsuba(a, b);
    trim(&mut out);
    out
}

/// Product of many polynomials by a balanced tree, so that large operands
/// meet each other late and Karatsuba gets balanced inputs.
pub fn product(mut factors: Vec<Vec<Integer>>) -> Vec<Integer> {
    if factors.is_empty() {
        return vec![Integer::one()];
    }
    while factors.len() > 1 {
        factors.sort_by_key(Vec::len);
        let mut next = Vec::with_capacity(factors.len() / 2 + 1);
        let mut it = factors.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(mul(&a, &b)),
                None => next.push(a),
            }
        }
        factors = next;
    }
    factors.pop().unwrap()
}

/// Division by a monic divisor; both quotient and remainder stay integral.
pub fn divrem_monic(a: &[Integer], b: &[Integer]) -> (Vec<Integer>, Vec<Integer>) {
    debug_assert!(b.last().is_some_and(One::is_one));
    let db = b.len() - 1;
    if a.len() <= db {
        let mut r = a.to_vec();
        trim(&mut r);
        return (Vec::new(), r);
    }
    let tail: Vec<(usize, &Integer)> = b[..db]
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let mut rem = a.to_vec();
    let mut quot = vec![Integer::zero(); a.len() - db];
    for i in (0..quot.len()).rev() {
        let lead = std::mem::take(&mut rem[i + db]);
        if lead.is_zero() {
            continue;
        }
        for &(j, c) in &tail {
            rem[i + j] -= &lead * c;
        }
        quot[i] = lead;
    }
    rem.truncate(db);
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

fn content(a: &[Integer]) -> Integer {
    a.iter().fold(Integer::zero(), |g, c| g.gcd(c))
}

/// `a / content(a)`, with a positive leading coefficient.
pub fn primitive_part(a: &[Integer]) -> Vec<Integer> {
    let g = content(a);
    if g.is_zero() {
        return Vec::new();
    }
    let g = if a.last().is_some_and(Signed::is_negative) { -g } else { g };
    a.iter().map(|c| c / &g).collect()
}

/// Pseudo-remainder: the remainder of `lc(b)^(deg a - deg b + 1) * a` by `b`,
/// computed without leaving the integers.
fn pseudo_rem(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    trim(&mut r);
    while r.len() > db {
        let lr = r.pop().unwrap();
        let shift = r.len() - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bj) in b[..db].iter().enumerate() {
            if !bj.is_zero() {
                r[shift + j] -= &lr * bj;
            }
        }
        trim(&mut r);
    }
    r
}

/// Gcd of two integer polynomials by the primitive remainder sequence; the
/// result is primitive with positive leading coefficient.
pub fn gcd_primitive(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    let mut x = primitive_part(a);
    let mut y = primitive_part(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = primitive_part(&pseudo_rem(&x, &y));
        x = y;
        y = r;
    }
    x
}

/// Remainder modulo `q^n - 1`: coefficients of exponents congruent mod `n`
/// are summed.
pub fn fold(a: &[Integer], n: usize) -> Vec<Integer> {
    let mut out = vec![Integer::zero(); n.min(a.len())];
    for (i, c) in a.iter().enumerate() {
        out[i % n] += c;
    }
    trim(&mut out);
    out
}

/// Product in `Z[q] / (q^n - 1)` of two already-folded operands.
pub fn cyclic_mul(a: &[Integer], b: &[Integer], n: usize) -> Vec<Integer> {
    let full = mul(a, b);
    fold(&full, n)
}
