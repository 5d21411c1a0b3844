//! Residues of `P`-units, `n`-th power residue symbols and the tame
//! Hilbert symbol at primes not dividing `m`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::cyclotomic::CycloElement;
use crate::finitefield::{dlog_mu_n, euler_residue, FqElem};
use crate::ideals::{strip_prime, PrimeIdeal};
use crate::{Error, Result};

/// An element `k/n` of `(1/n)Z/Z`, stored with `0 <= k < n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModFraction {
    n: u64,
    k: u64,
}

impl ModFraction {
    pub fn new(k: i64, n: u64) -> Self {
        assert!(n > 0, "ModFraction needs n > 0");
        ModFraction {
            n,
            k: k.rem_euclid(n as i64) as u64,
        }
    }

    pub fn zero(n: u64) -> Self {
        ModFraction { n, k: 0 }
    }

    /// Numerator in `[0, n)`.
    pub fn k(&self) -> u64 {
        self.k
    }

    /// Denominator `n`.
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.k == 0
    }
}

impl fmt::Display for ModFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.k, self.n)
    }
}

impl Add for ModFraction {
    type Output = ModFraction;

    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.n, rhs.n, "adding fractions with different n");
        ModFraction {
            n: self.n,
            k: (self.k + rhs.k) % self.n,
        }
    }
}

impl Neg for ModFraction {
    type Output = ModFraction;

    fn neg(self) -> Self {
        ModFraction {
            n: self.n,
            k: (self.n - self.k) % self.n,
        }
    }
}

impl Sub for ModFraction {
    type Output = ModFraction;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul<i64> for ModFraction {
    type Output = ModFraction;

    fn mul(self, c: i64) -> Self {
        let n = self.n as i128;
        let k = (self.k as i128 * c as i128).rem_euclid(n);
        ModFraction { n: self.n, k: k as u64 }
    }
}

impl std::iter::Sum for ModFraction {
    fn sum<I: Iterator<Item = Self>>(mut iter: I) -> Self {
        let first = iter.next().expect("sum of an empty fraction iterator");
        iter.fold(first, |a, b| a + b)
    }
}

/// `(v_P(x), residue of x * t^{v_P(x)})` where `t` is the anti-uniformizer.
pub fn normalized_residue(x: &CycloElement, prime: &PrimeIdeal) -> Result<(i64, FqElem)> {
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    let (y, mut d) = x.split_denominator();
    let (k, unit) = strip_prime(&y, prime);
    let p = BigInt::from(prime.p());
    let mut vd = 0i64;
    while d.is_multiple_of(&p) {
        d /= &p;
        vd += 1;
    }
    let field = prime.residue_field();
    // p * t = tau = 1 mod P, so the p-part of the denominator drops out
    let den = field.reduce_int(&[d]);
    let value = field.mul(&prime.reduce(&unit), &field.inv(&den)?);
    Ok((k as i64 - vd, value))
}

/// Image of a `P`-unit in the residue field `Z[zeta]/P`.
pub fn residue_of_unit(c: &CycloElement, prime: &PrimeIdeal) -> Result<FqElem> {
    let (v, r) = normalized_residue(c, prime)?;
    if v != 0 {
        return Err(Error::NonUnitAtP(v));
    }
    Ok(r)
}

fn check_level(prime: &PrimeIdeal, n: u64) -> Result<()> {
    let m = prime.field().m();
    if n == 0 || !m.is_multiple_of(n) {
        return Err(Error::InvalidInput(format!("n = {n} must divide m = {m}")));
    }
    Ok(())
}

fn symbol_of_residue(u: &FqElem, prime: &PrimeIdeal, n: u64) -> Result<ModFraction> {
    let field = prime.residue_field();
    let m = prime.field().m();
    let zeta_bar = prime.reduce(prime.field().zeta_power_coeffs((m / n) as i64));
    let w = euler_residue(u, field, n)?;
    let k = dlog_mu_n(&w, &zeta_bar, n, field)?;
    Ok(ModFraction::new(k as i64, n))
}

fn signed_pow(u: &FqElem, e: i64, prime: &PrimeIdeal) -> Result<FqElem> {
    let field = prime.residue_field();
    let base = if e < 0 { field.inv(u)? } else { u.clone() };
    Ok(field.pow(&base, &BigUint::from(e.unsigned_abs())))
}

/// `(a/P)_n = k/n` where `zeta_bar^k = a^{(q-1)/n}` mod `P` and `zeta_bar`
/// reduces `zeta_m^{m/n}`.
pub fn power_residue_symbol(a: &CycloElement, prime: &PrimeIdeal, n: u64) -> Result<ModFraction> {
    check_level(prime, n)?;
    let u = residue_of_unit(a, prime)?;
    symbol_of_residue(&u, prime, n)
}

/// Tame symbol `(a, b)_P` of level `n`: the power residue symbol of
/// `(-1)^{alpha beta} a^beta b^{-alpha}` with `alpha = v_P(a)`,
/// `beta = v_P(b)`.
pub fn tame_hilbert(a: &CycloElement, b: &CycloElement, prime: &PrimeIdeal, n: u64) -> Result<ModFraction> {
    check_level(prime, n)?;
    let (alpha, ra) = normalized_residue(a, prime)?;
    let (beta, rb) = normalized_residue(b, prime)?;
    // the t-powers cancel: (a t^alpha)^beta (b t^beta)^{-alpha}
    let field = prime.residue_field();
    let mut c = field.mul(&signed_pow(&ra, beta, prime)?, &signed_pow(&rb, -alpha, prime)?);
    if (alpha * beta).is_odd() {
        c = field.mul(&c, &field.from_u64(prime.p() - 1));
    }
    symbol_of_residue(&c, prime, n)
}

/// Whether `x` is a root of unity `±zeta^j` or has norm of absolute value 1.
pub fn is_unit_candidate(u: &CycloElement) -> bool {
    u.to_integral().is_some() && u.norm().abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{is_prime, pow_mod};
    use crate::cyclotomic::CycloField;
    use crate::ideals::{split_prime, uniformizer, FactoredIdeal};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::sync::Arc;

    fn prime(m: u64, p: u64, g: &[i64]) -> PrimeIdeal {
        PrimeIdeal::from_parts(&CycloField::new(m), p, g, 0).unwrap()
    }

    fn elt(m: u64, c: &[i64]) -> CycloElement {
        CycloField::new(m).from_i64_coeffs(c)
    }

    fn random_nonzero(field: &Arc<CycloField>, rng: &mut ChaCha8Rng) -> CycloElement {
        loop {
            let num: Vec<i64> = (0..field.degree()).map(|_| rng.gen_range(-9..=9)).collect();
            let x = field.from_i64_coeffs(&num);
            if x.is_zero() {
                continue;
            }
            let den = field.from_int(rng.gen_range(1..=4));
            return x.checked_div(&den).unwrap();
        }
    }

    #[test]
    fn fraction_arithmetic() {
        let a = ModFraction::new(3, 4);
        assert_eq!(a + ModFraction::new(3, 4), ModFraction::new(2, 4));
        assert_eq!(-a, ModFraction::new(1, 4));
        assert_eq!(a * 4, ModFraction::zero(4));
        assert_eq!(ModFraction::new(-1, 5).k(), 4);
        assert_eq!(a.to_string(), "3/4");
    }

    #[test]
    fn residue_examples() {
        let q = prime(4, 13, &[8, 1]);
        let x = elt(4, &[3, 4]);
        assert_eq!(residue_of_unit(&x, &q).unwrap(), q.residue_field().from_u64(10));
        assert_eq!(residue_of_unit(&x.inv().unwrap(), &q).unwrap(), q.residue_field().from_u64(4));
        assert!(residue_of_unit(&elt(4, &[1]), &q).unwrap().is_one());
        let p2 = prime(4, 5, &[2, 1]);
        assert_eq!(residue_of_unit(&elt(4, &[2, 1]), &p2).unwrap_err(), Error::NonUnitAtP(1));
        assert_eq!(residue_of_unit(&elt(4, &[0]), &p2).unwrap_err(), Error::ZeroElement);
        // 5/(2+z) = 2-z is a unit at (5, z+2) with residue 2-(-2) = 4
        let y = elt(4, &[5]).checked_div(&elt(4, &[2, 1])).unwrap();
        assert_eq!(residue_of_unit(&y, &p2).unwrap(), p2.residue_field().from_u64(4));
    }

    #[test]
    fn power_residue_examples() {
        let z = elt(4, &[0, 1]);
        for g in [[2, 1], [3, 1]] {
            assert_eq!(power_residue_symbol(&z, &prime(4, 5, &g), 4).unwrap(), ModFraction::new(1, 4));
        }
        let p3 = prime(4, 5, &[3, 1]);
        assert!(power_residue_symbol(&elt(4, &[1]), &p3, 4).unwrap().is_zero());
        assert_eq!(power_residue_symbol(&elt(4, &[2]), &p3, 2).unwrap(), ModFraction::new(1, 2));
        assert!(power_residue_symbol(&elt(4, &[2]), &p3, 3).is_err());
    }

    #[test]
    fn tame_examples() {
        let p3 = prime(4, 5, &[3, 1]);
        let w = uniformizer(&p3);
        assert!(tame_hilbert(&elt(4, &[2]), &elt(4, &[3]), &p3, 2).unwrap().is_zero());
        assert!(tame_hilbert(&w, &w, &p3, 2).unwrap().is_zero());
        assert_eq!(tame_hilbert(&elt(4, &[2]), &w, &p3, 2).unwrap(), ModFraction::new(1, 2));
    }

    #[test]
    fn unit_against_uniformizer_is_power_residue() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let f = CycloField::new(8);
        for p in [17u64, 41, 73, 3, 5] {
            for q in split_prime(&f, p, 0).unwrap() {
                let w = uniformizer(&q);
                for _ in 0..10 {
                    let u = random_nonzero(&f, &mut rng);
                    if crate::ideals::valuation(&u, &q).unwrap() != 0 {
                        continue;
                    }
                    for n in [2, 4, 8] {
                        assert_eq!(tame_hilbert(&u, &w, &q, n).unwrap(), power_residue_symbol(&u, &q, n).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn tame_symbol_laws() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for (m, n, p) in [(4u64, 2u64, 5u64), (4, 4, 13), (8, 4, 17), (12, 6, 13), (12, 3, 7)] {
            let f = CycloField::new(m);
            let primes = split_prime(&f, p, 0).unwrap();
            let q = &primes[0];
            let w = uniformizer(q);
            let draw = |rng: &mut ChaCha8Rng| {
                let x = random_nonzero(&f, rng);
                let k = rng.gen_range(-2..=2);
                x.checked_mul(&w.pow(k).unwrap()).unwrap()
            };
            for _ in 0..300 {
                let (a1, a2, b) = (draw(&mut rng), draw(&mut rng), draw(&mut rng));
                let s = |x: &CycloElement, y: &CycloElement| tame_hilbert(x, y, q, n).unwrap();
                let a12 = a1.checked_mul(&a2).unwrap();
                assert_eq!(s(&a12, &b), s(&a1, &b) + s(&a2, &b));
                assert_eq!(s(&b, &a12), s(&b, &a1) + s(&b, &a2));
                assert!((s(&a1, &b) * n as i64).is_zero());
                assert!(s(&a1.pow(n as i64).unwrap(), &b).is_zero());
                if n == 2 {
                    assert_eq!(s(&a1, &b), s(&b, &a1));
                }
                assert_eq!(s(&a1, &b), -s(&b, &a1));
            }
        }
    }

    /// Independent Euler criterion: `x^{(N-1)/4}` mod a degree one Gaussian
    /// prime, compared with powers of `i`.
    fn quartic_oracle(a: i64, b: i64, pi: (i64, i64)) -> u64 {
        let p = (pi.0 * pi.0 + pi.1 * pi.1) as u64;
        // i = -pi.0 / pi.1 mod p
        let inv = pow_mod((pi.1.rem_euclid(p as i64)) as u64, p - 2, p);
        let i = ((p - (pi.0.rem_euclid(p as i64) as u64)) % p) * inv % p;
        let x = (a.rem_euclid(p as i64) as u64 + b.rem_euclid(p as i64) as u64 * i % p) % p;
        let r = pow_mod(x, (p - 1) / 4, p);
        (0..4).find(|&k| pow_mod(i, k, p) == r).expect("fourth root of unity")
    }

    fn gaussian_prime(f: &Arc<CycloField>, a: i64, b: i64) -> PrimeIdeal {
        let x = f.from_i64_coeffs(&[a, b]);
        let fac = FactoredIdeal::principal(&x, 0).unwrap();
        assert_eq!(fac.factors().len(), 1);
        fac.support().remove(0)
    }

    /// Primary Gaussian primes `a + bi` of prime norm `p = 1 mod 4`.
    fn primary_primes(limit: u64) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        for p in (5..limit).filter(|&p| is_prime(p) && p % 4 == 1) {
            'search: for a in -(p as i64)..=(p as i64) {
                for b in -(p as i64)..=(p as i64) {
                    if (a * a + b * b) as u64 == p && b % 2 == 0 && (a + b).rem_euclid(4) == 1 {
                        out.push((a, b));
                        break 'search;
                    }
                }
            }
        }
        out
    }

    #[test]
    fn quartic_symbol_of_zeta() {
        let f = CycloField::new(4);
        let z = f.zeta();
        let primes = primary_primes(300);
        assert!(primes.len() >= 20);
        for &(a, b) in primes.iter().take(20) {
            let q = gaussian_prime(&f, a, b);
            let norm = a * a + b * b;
            let sym = power_residue_symbol(&z, &q, 4).unwrap();
            assert_eq!(sym, ModFraction::new((norm - 1) / 4, 4));
            assert_eq!(sym.k(), quartic_oracle(0, 1, (a, b)));
        }
    }

    #[test]
    fn biquadratic_reciprocity() {
        let f = CycloField::new(4);
        let primes = primary_primes(120);
        let mut pairs = 0;
        for (i, &pi) in primes.iter().enumerate() {
            for &theta in &primes[i + 1..] {
                let big_pi = gaussian_prime(&f, pi.0, pi.1);
                let big_theta = gaussian_prime(&f, theta.0, theta.1);
                let x = f.from_i64_coeffs(&[pi.0, pi.1]);
                let y = f.from_i64_coeffs(&[theta.0, theta.1]);
                let lhs = power_residue_symbol(&x, &big_theta, 4).unwrap() - power_residue_symbol(&y, &big_pi, 4).unwrap();
                let e = ((pi.0 * pi.0 + pi.1 * pi.1 - 1) / 4) * ((theta.0 * theta.0 + theta.1 * theta.1 - 1) / 4);
                assert_eq!(lhs, ModFraction::new(2 * e, 4), "{pi:?} {theta:?}");
                assert_eq!(
                    power_residue_symbol(&x, &big_theta, 4).unwrap().k(),
                    quartic_oracle(pi.0, pi.1, theta)
                );
                pairs += 1;
            }
        }
        assert!(pairs >= 10);
    }
}
