//! Polynomials over `F_p`, their factorization, and the residue fields
//! `F_q = F_p[x]/(g)` in which power residue symbols are evaluated.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{factor_u64, inv_mod, mul_mod, require_prime};
use crate::{Error, Result};

/// Polynomial over `F_p`, constant term first, no trailing zeros.
pub type FpPoly = Vec<u64>;

fn trim(a: &mut FpPoly) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

/// Reduces an integer polynomial modulo `p`.
pub fn from_int_poly(poly: &[BigInt], p: u64) -> FpPoly {
    let pb = BigInt::from(p);
    let mut out: FpPoly = poly
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().expect("residue fits in u64"))
        .collect();
    trim(&mut out);
    out
}

pub fn add(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let n = a.len().max(b.len());
    let mut out: FpPoly = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            ((x as u128 + y as u128) % p as u128) as u64
        })
        .collect();
    trim(&mut out);
    out
}

pub fn sub(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let n = a.len().max(b.len());
    let mut out: FpPoly = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            ((x as u128 + p as u128 - y as u128) % p as u128) as u64
        })
        .collect();
    trim(&mut out);
    out
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut acc = vec![0u128; a.len() + b.len() - 1];
    let pp = p as u128;
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            acc[i + j] = (acc[i + j] + x as u128 * y as u128) % pp;
        }
    }
    let mut out: FpPoly = acc.into_iter().map(|c| c as u64).collect();
    trim(&mut out);
    out
}

pub fn scale(a: &[u64], c: u64, p: u64) -> FpPoly {
    let mut out: FpPoly = a.iter().map(|&x| mul_mod(x, c, p)).collect();
    trim(&mut out);
    out
}

pub fn monic(a: &[u64], p: u64) -> FpPoly {
    match a.last() {
        None => Vec::new(),
        Some(&lead) => scale(a, inv_mod(lead, p), p),
    }
}

/// Quotient and remainder; `b` must be nonzero.
pub fn divrem(a: &[u64], b: &[u64], p: u64) -> (FpPoly, FpPoly) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    trim(&mut rem);
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let lead_inv = inv_mod(*b.last().unwrap(), p);
    let mut quot = vec![0u64; rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = mul_mod(rem[k + db], lead_inv, p);
        if c == 0 {
            continue;
        }
        quot[k] = c;
        for (j, &bj) in b.iter().enumerate() {
            let t = mul_mod(c, bj, p);
            rem[k + j] = (rem[k + j] + p - t) % p;
        }
    }
    rem.truncate(db);
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

pub fn rem(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    divrem(a, b, p).1
}

/// Monic gcd (zero if both inputs are zero).
pub fn gcd(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = std::mem::replace(&mut y, r);
    }
    monic(&x, p)
}

/// `(g, s, t)` with `s*a + t*b = g` monic.
pub fn xgcd(a: &[u64], b: &[u64], p: u64) -> (FpPoly, FpPoly, FpPoly) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    trim(&mut r0);
    trim(&mut r1);
    let (mut s0, mut s1): (FpPoly, FpPoly) = (vec![1], vec![]);
    let (mut t0, mut t1): (FpPoly, FpPoly) = (vec![], vec![1]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let s2 = sub(&s0, &mul(&q, &s1, p), p);
        let t2 = sub(&t0, &mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    match r0.last() {
        None => (r0, s0, t0),
        Some(&lead) => {
            let inv = inv_mod(lead, p);
            (scale(&r0, inv, p), scale(&s0, inv, p), scale(&t0, inv, p))
        }
    }
}

pub fn derivative(a: &[u64], p: u64) -> FpPoly {
    let mut out: FpPoly = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
        .collect();
    trim(&mut out);
    out
}

/// `base^exp mod modulus`.
pub fn pow_mod(base: &[u64], exp: &BigUint, modulus: &[u64], p: u64) -> FpPoly {
    let mut acc: FpPoly = rem(&[1], modulus, p);
    let base = rem(base, modulus, p);
    for i in (0..exp.bits()).rev() {
        acc = rem(&mul(&acc, &acc, p), modulus, p);
        if exp.bit(i) {
            acc = rem(&mul(&acc, &base, p), modulus, p);
        }
    }
    acc
}

fn is_one(a: &[u64]) -> bool {
    a == [1]
}

/// Square-free decomposition of a monic polynomial: pairs `(s_i, i)` with
/// `a = prod s_i^i` and each `s_i` square-free.
fn squarefree(a: &[u64], p: u64) -> Vec<(FpPoly, u32)> {
    let mut out = Vec::new();
    let d = derivative(a, p);
    let mut c = gcd(a, &d, p);
    let mut w = divrem(a, &c, p).0;
    let mut i = 1u32;
    while !is_one(&w) {
        let y = gcd(&w, &c, p);
        let fac = divrem(&w, &y, p).0;
        if !is_one(&fac) {
            out.push((fac, i));
        }
        c = divrem(&c, &y, p).0;
        w = y;
        i += 1;
    }
    if !is_one(&c) {
        // c is a polynomial in x^p; over F_p its p-th root just drops exponents
        let root: FpPoly = c.iter().step_by(p as usize).copied().collect();
        for (g, e) in squarefree(&root, p) {
            out.push((g, e * p as u32));
        }
    }
    out
}

/// Distinct-degree split of a square-free monic polynomial.
fn distinct_degree(a: &[u64], p: u64) -> Vec<(FpPoly, usize)> {
    let mut out = Vec::new();
    let mut rest = a.to_vec();
    let x: FpPoly = vec![0, 1];
    let pb = BigUint::from(p);
    let mut h = rem(&x, &rest, p);
    let mut d = 1;
    while rest.len() > 2 * d {
        h = pow_mod(&h, &pb, &rest, p);
        let g = gcd(&rest, &sub(&h, &x, p), p);
        if !is_one(&g) {
            rest = divrem(&rest, &g, p).0;
            h = rem(&h, &rest, p);
            out.push((g, d));
        }
        d += 1;
    }
    if rest.len() > 1 {
        let deg = rest.len() - 1;
        out.push((rest, deg));
    }
    out
}

fn random_poly(rng: &mut ChaCha8Rng, below_degree: usize, p: u64) -> FpPoly {
    let mut v: FpPoly = (0..below_degree).map(|_| rng.gen_range(0..p)).collect();
    trim(&mut v);
    v
}

/// Cantor-Zassenhaus equal-degree splitting into irreducible factors of degree `d`.
fn equal_degree(a: &[u64], d: usize, p: u64, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    let n = a.len() - 1;
    if n == d {
        return vec![a.to_vec()];
    }
    let exponent = if p == 2 {
        BigUint::zero()
    } else {
        (BigUint::from(p).pow(d as u32) - 1u32) / 2u32
    };
    loop {
        let r = random_poly(rng, n, p);
        if r.len() < 2 {
            continue;
        }
        let mut g = gcd(a, &r, p);
        if is_one(&g) {
            let b = if p == 2 {
                // trace map r + r^2 + ... + r^{2^{d-1}}
                let mut t = r.clone();
                let mut acc = r.clone();
                for _ in 1..d {
                    t = rem(&mul(&t, &t, p), a, p);
                    acc = add(&acc, &t, p);
                }
                acc
            } else {
                sub(&pow_mod(&r, &exponent, a, p), &[1], p)
            };
            g = gcd(a, &b, p);
        }
        if !is_one(&g) && g.len() < a.len() {
            let other = divrem(a, &g, p).0;
            let mut out = equal_degree(&g, d, p, rng);
            out.extend(equal_degree(&other, d, p, rng));
            return out;
        }
    }
}

fn factor_order(a: &(FpPoly, u32), b: &(FpPoly, u32)) -> std::cmp::Ordering {
    a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)).then(a.1.cmp(&b.1))
}

/// Complete factorization of an integer polynomial modulo `p` into monic
/// irreducibles with multiplicities. The leading unit is dropped.
///
/// The random equal-degree splitting is driven by a generator seeded from
/// `seed`; output is sorted by degree, then by coefficients from the
/// constant term up, so it does not depend on the seed.
pub fn factor_poly_mod_p(poly: &[BigInt], p: u64, seed: u64) -> Result<Vec<(FpPoly, u32)>> {
    require_prime(p)?;
    let a = from_int_poly(poly, p);
    factor_fp(&a, p, seed)
}

/// As [`factor_poly_mod_p`] for a polynomial already reduced mod `p`.
pub fn factor_fp(a: &[u64], p: u64, seed: u64) -> Result<Vec<(FpPoly, u32)>> {
    let mut a = a.to_vec();
    trim(&mut a);
    if a.is_empty() {
        return Err(Error::ZeroPolynomial(p));
    }
    let a = monic(&a, p);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (s, mult) in squarefree(&a, p) {
        for (g, d) in distinct_degree(&s, p) {
            for f in equal_degree(&g, d, p, &mut rng) {
                out.push((f, mult));
            }
        }
    }
    out.sort_by(factor_order);
    Ok(out)
}

/// Rabin's irreducibility test for a monic polynomial of degree >= 1.
pub fn is_irreducible(g: &[u64], p: u64) -> bool {
    let f = match g.len().checked_sub(1) {
        Some(0) | None => return false,
        Some(f) => f,
    };
    let x: FpPoly = vec![0, 1];
    let frob = |k: usize| -> FpPoly {
        let e = BigUint::from(p).pow(k as u32);
        pow_mod(&x, &e, g, p)
    };
    if sub(&frob(f), &rem(&x, g, p), p) != FpPoly::new() {
        return false;
    }
    factor_u64(f as u64).into_iter().all(|(r, _)| {
        let h = sub(&frob(f / r as usize), &x, p);
        is_one(&gcd(g, &h, p))
    })
}

/// An element of a residue field, reduced modulo its modulus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FqElem(pub FpPoly);

impl FqElem {
    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        is_one(&self.0)
    }
}

/// The finite field `F_q = F_p[x]/(modulus)`, `q = p^f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueField {
    p: u64,
    f: usize,
    modulus: FpPoly,
    q: BigUint,
}

impl ResidueField {
    /// Builds the field after checking that `modulus` is irreducible mod `p`.
    pub fn new(p: u64, modulus: &[u64]) -> Result<Self> {
        require_prime(p)?;
        let mut g: FpPoly = modulus.iter().map(|c| c % p).collect();
        trim(&mut g);
        if g.is_empty() {
            return Err(Error::ZeroPolynomial(p));
        }
        let g = monic(&g, p);
        if !is_irreducible(&g, p) {
            return Err(Error::NotIrreducible(p));
        }
        let f = g.len() - 1;
        Ok(ResidueField {
            p,
            f,
            modulus: g,
            q: BigUint::from(p).pow(f as u32),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.f
    }

    pub fn modulus(&self) -> &FpPoly {
        &self.modulus
    }

    pub fn order(&self) -> &BigUint {
        &self.q
    }

    pub fn reduce(&self, a: &[u64]) -> FqElem {
        let a: FpPoly = a.iter().map(|c| c % self.p).collect();
        FqElem(rem(&a, &self.modulus, self.p))
    }

    /// Reduction of an integer polynomial (e.g. power-basis coordinates).
    pub fn reduce_int(&self, a: &[BigInt]) -> FqElem {
        FqElem(rem(&from_int_poly(a, self.p), &self.modulus, self.p))
    }

    pub fn from_u64(&self, c: u64) -> FqElem {
        self.reduce(&[c])
    }

    pub fn one(&self) -> FqElem {
        self.from_u64(1)
    }

    pub fn mul(&self, a: &FqElem, b: &FqElem) -> FqElem {
        FqElem(rem(&mul(&a.0, &b.0, self.p), &self.modulus, self.p))
    }

    pub fn inv(&self, a: &FqElem) -> Result<FqElem> {
        if a.is_zero() {
            return Err(Error::ZeroUnit);
        }
        let (_, s, _) = xgcd(&a.0, &self.modulus, self.p);
        Ok(FqElem(rem(&s, &self.modulus, self.p)))
    }

    pub fn pow(&self, a: &FqElem, e: &BigUint) -> FqElem {
        FqElem(pow_mod(&a.0, e, &self.modulus, self.p))
    }

    pub fn pow_u64(&self, a: &FqElem, e: u64) -> FqElem {
        self.pow(a, &BigUint::from(e))
    }

    /// Multiplicative order of a nonzero element dividing `n`, by scanning.
    fn order_dividing(&self, a: &FqElem, n: u64) -> Option<u64> {
        let mut cur = a.clone();
        for k in 1..=n {
            if cur.is_one() {
                return Some(k);
            }
            cur = self.mul(&cur, a);
        }
        None
    }
}

/// Euler criterion `u^{(q-1)/n}`, an n-th root of unity in `F_q`.
pub fn euler_residue(u: &FqElem, field: &ResidueField, n: u64) -> Result<FqElem> {
    if u.is_zero() {
        return Err(Error::ZeroUnit);
    }
    let q1 = field.order() - 1u32;
    let (e, r) = q1.div_rem(&BigUint::from(n));
    if !r.is_zero() {
        return Err(Error::OrderMismatch {
            n,
            q_minus_one: q1.to_string(),
        });
    }
    Ok(field.pow(u, &e))
}

/// Discrete logarithm of `w` in `mu_n` relative to `zeta_bar`, which must
/// have exact order `n`.
pub fn dlog_mu_n(w: &FqElem, zeta_bar: &FqElem, n: u64, field: &ResidueField) -> Result<u64> {
    match field.order_dividing(zeta_bar, n) {
        Some(ord) if ord == n => {}
        Some(ord) => return Err(Error::NotPrimitive { order: ord, n }),
        None => return Err(Error::NotInSubgroup(n)),
    }
    let mut cur = field.one();
    for k in 0..n {
        if &cur == w {
            return Ok(k);
        }
        cur = field.mul(&cur, zeta_bar);
    }
    Err(Error::NotInSubgroup(n))
}
