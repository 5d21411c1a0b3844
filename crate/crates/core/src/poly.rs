//! Dense univariate polynomials over `Z` and `Q`, coefficients stored from
//! the constant term upward. Zero is the empty vector.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{divisors, mobius};

pub type IntPoly = Vec<BigInt>;
pub type RatPoly = Vec<BigRational>;

pub fn trim<T: Zero>(p: &mut Vec<T>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn degree<T>(p: &[T]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub fn mul<T>(a: &[T], b: &[T]) -> Vec<T>
where
    T: Clone + Zero,
    for<'x> &'x T: std::ops::Mul<&'x T, Output = T>,
{
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x * y;
        }
    }
    out
}

/// Quotient and remainder of `a` by a monic `b`, over any ring.
pub fn divrem_monic<T>(a: &[T], b: &[T]) -> (Vec<T>, Vec<T>)
where
    T: Clone + Zero + std::ops::Sub<Output = T>,
    for<'x> &'x T: std::ops::Mul<&'x T, Output = T>,
{
    let db = b.len() - 1;
    let mut rem: Vec<T> = a.to_vec();
    if rem.len() <= db {
        trim(&mut rem);
        return (Vec::new(), rem);
    }
    let mut quot = vec![T::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let lead = rem[k + db].clone();
        if lead.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[k + j] = rem[k + j].clone() - &lead * bj;
        }
        quot[k] = lead;
    }
    rem.truncate(db);
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

/// `x^k - 1`.
fn x_pow_minus_one(k: usize) -> IntPoly {
    let mut p = vec![BigInt::zero(); k + 1];
    p[0] = -BigInt::one();
    p[k] = BigInt::one();
    p
}

/// The m-th cyclotomic polynomial from the Mobius product
/// `prod_{d | m} (x^{m/d} - 1)^{mu(d)}`.
pub fn cyclotomic_polynomial(m: u64) -> IntPoly {
    assert!(m >= 1, "cyclotomic_polynomial needs m >= 1");
    let mut num: IntPoly = vec![BigInt::one()];
    let mut den: IntPoly = vec![BigInt::one()];
    for d in divisors(m) {
        match mobius(d) {
            1 => num = mul(&num, &x_pow_minus_one((m / d) as usize)),
            -1 => den = mul(&den, &x_pow_minus_one((m / d) as usize)),
            _ => {}
        }
    }
    let (q, r) = divrem_monic(&num, &den);
    debug_assert!(r.is_empty());
    q
}

fn rat_lead_inv(b: &[BigRational]) -> BigRational {
    b.last().expect("nonzero divisor").recip()
}

/// Division with remainder over `Q`; `b` must be nonzero.
pub fn rat_divrem(a: &[BigRational], b: &[BigRational]) -> (RatPoly, RatPoly) {
    let inv = rat_lead_inv(b);
    let monic: RatPoly = b.iter().map(|c| c * &inv).collect();
    let (q, r) = divrem_monic(a, &monic);
    (q.into_iter().map(|c| c * &inv).collect(), r)
}

fn rat_sub(a: &[BigRational], b: &[BigRational]) -> RatPoly {
    let n = a.len().max(b.len());
    let mut out: RatPoly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect();
    trim(&mut out);
    out
}

/// Extended Euclid over `Q`: `(g, s, t)` with `s*a + t*b = g`, `g` monic.
pub fn rat_xgcd(a: &[BigRational], b: &[BigRational]) -> (RatPoly, RatPoly, RatPoly) {
    let one: RatPoly = vec![BigRational::one()];
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (one.clone(), RatPoly::new());
    let (mut t0, mut t1) = (RatPoly::new(), one);
    trim(&mut r0);
    trim(&mut r1);
    while !r1.is_empty() {
        let (q, r) = rat_divrem(&r0, &r1);
        let s2 = rat_sub(&s0, &mul(&q, &s1));
        let t2 = rat_sub(&t0, &mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if let Some(lead) = r0.last().cloned() {
        let inv = lead.recip();
        for v in [&mut r0, &mut s0, &mut t0] {
            for c in v.iter_mut() {
                *c = &*c * &inv;
            }
        }
    }
    (r0, s0, t0)
}

/// Resultant `Res(a, b)` over `Q` by the Euclidean recurrence.
pub fn rat_resultant(a: &[BigRational], b: &[BigRational]) -> BigRational {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    if a.is_empty() || b.is_empty() {
        return BigRational::zero();
    }
    let mut acc = BigRational::one();
    loop {
        let da = a.len() - 1;
        let db = b.len() - 1;
        if db == 0 {
            return acc * pow_rat(&b[0], da);
        }
        let (_, r) = rat_divrem(&a, &b);
        if r.is_empty() {
            return BigRational::zero();
        }
        let dr = r.len() - 1;
        if (da * db) % 2 == 1 {
            acc = -acc;
        }
        acc *= pow_rat(b.last().unwrap(), da - dr);
        a = b;
        b = r;
    }
}

fn pow_rat(x: &BigRational, e: usize) -> BigRational {
    (0..e).fold(BigRational::one(), |acc, _| acc * x)
}

pub fn to_rat(p: &[BigInt]) -> RatPoly {
    p.iter().map(|c| BigRational::from_integer(c.clone())).collect()
}
