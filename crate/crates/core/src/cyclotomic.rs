//! Exact arithmetic in the cyclotomic field `Q(zeta_m)`.
//!
//! Elements are rational vectors in the power basis `1, zeta, ..., zeta^{d-1}`
//! with `d = phi(m)`, always fully reduced modulo the cyclotomic polynomial.
//! The distinguished root `zeta` is the residue class of `x`.

use std::fmt;
use std::sync::Arc;

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{divisors, euler_phi, gcd_u64, mobius};
use crate::poly::{self, IntPoly, RatPoly};
use crate::{Error, Result};

/// `Q(zeta_m)` together with the tables needed for fast reduction.
#[derive(Debug)]
pub struct CycloField {
    m: u64,
    degree: usize,
    phi: IntPoly,
    phi_rat: RatPoly,
    // zeta^j reduced to the power basis, for j in 0..m
    powers: Vec<IntPoly>,
    // Tr(zeta^j) for j in 0..m (Ramanujan sums)
    traces: Vec<BigInt>,
}

impl CycloField {
    pub fn new(m: u64) -> Arc<CycloField> {
        assert!(m >= 1, "conductor must be positive");
        let phi = poly::cyclotomic_polynomial(m);
        let degree = euler_phi(m) as usize;
        debug_assert_eq!(phi.len(), degree + 1);
        let phi_rat = poly::to_rat(&phi);

        let mut powers = Vec::with_capacity(m as usize);
        let mut cur = vec![BigInt::zero(); degree];
        cur[0] = BigInt::one();
        for _ in 0..m {
            powers.push(cur.clone());
            // multiply by x and reduce: shift up, fold the top coefficient back
            let top = cur[degree - 1].clone();
            let mut next = vec![BigInt::zero(); degree];
            next[1..degree].clone_from_slice(&cur[..(degree - 1)]);
            if !top.is_zero() {
                for (k, c) in phi.iter().take(degree).enumerate() {
                    next[k] -= &top * c;
                }
            }
            cur = next;
        }

        let traces = (0..m)
            .map(|j| {
                let g = gcd_u64(j, m);
                divisors(g).into_iter().fold(BigInt::zero(), |acc, d| {
                    acc + BigInt::from(mobius(m / d)) * BigInt::from(d)
                })
            })
            .collect();

        Arc::new(CycloField {
            m,
            degree,
            phi,
            phi_rat,
            powers,
            traces,
        })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn phi_poly(&self) -> &IntPoly {
        &self.phi
    }

    /// `zeta^j` in the power basis, any integer `j`.
    pub fn zeta_power_coeffs(&self, j: i64) -> &IntPoly {
        &self.powers[j.rem_euclid(self.m as i64) as usize]
    }

    /// Reduces an integer polynomial in `zeta` of any degree.
    pub fn reduce_int(&self, p: &[BigInt]) -> IntPoly {
        let mut out = vec![BigInt::zero(); self.degree];
        for (j, c) in p.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let pw = &self.powers[j % self.m as usize];
            for (o, z) in out.iter_mut().zip(pw) {
                if !z.is_zero() {
                    *o += c * z;
                }
            }
        }
        out
    }

    fn reduce_rat(&self, p: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.degree];
        for (j, c) in p.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let pw = &self.powers[j % self.m as usize];
            for (o, z) in out.iter_mut().zip(pw) {
                if !z.is_zero() {
                    *o += c * BigRational::from_integer(z.clone());
                }
            }
        }
        out
    }

    /// Product of two integral elements given by power-basis coordinates.
    pub fn mul_int(&self, a: &[BigInt], b: &[BigInt]) -> IntPoly {
        self.reduce_int(&poly::mul(a, b))
    }

    /// Columns of the multiplication-by-`a` matrix: `a * zeta^j` for each `j`.
    pub fn mul_matrix_columns(&self, a: &[BigInt]) -> Vec<IntPoly> {
        (0..self.degree)
            .map(|j| {
                let mut shifted = vec![BigInt::zero(); j];
                shifted.extend_from_slice(a);
                self.reduce_int(&shifted)
            })
            .collect()
    }

    pub fn trace_int(&self, a: &[BigInt]) -> BigInt {
        a.iter()
            .zip(&self.traces)
            .fold(BigInt::zero(), |acc, (c, t)| acc + c * t)
    }

    /// Exact norm of an integral element.
    pub fn norm_int(&self, a: &[BigInt]) -> BigInt {
        let n = poly::rat_resultant(&self.phi_rat, &poly::to_rat(a));
        debug_assert!(n.is_integer());
        n.to_integer()
    }

    /// Gram matrix of the positive definite form `Tr(x * conj(y))` on the
    /// power basis: entry `(i, j)` is `Tr(zeta^{i-j})`.
    pub fn trace_form(&self) -> Vec<Vec<BigInt>> {
        let m = self.m as i64;
        (0..self.degree as i64)
            .map(|i| {
                (0..self.degree as i64)
                    .map(|j| self.traces[(i - j).rem_euclid(m) as usize].clone())
                    .collect()
            })
            .collect()
    }

    pub fn zero(self: &Arc<Self>) -> CycloElement {
        CycloElement {
            field: Arc::clone(self),
            coeffs: vec![BigRational::zero(); self.degree],
        }
    }

    pub fn one(self: &Arc<Self>) -> CycloElement {
        self.from_int(1)
    }

    pub fn from_int(self: &Arc<Self>, c: i64) -> CycloElement {
        self.from_bigint(BigInt::from(c))
    }

    pub fn from_bigint(self: &Arc<Self>, c: BigInt) -> CycloElement {
        let mut e = self.zero();
        e.coeffs[0] = BigRational::from_integer(c);
        e
    }

    pub fn from_rational(self: &Arc<Self>, c: BigRational) -> CycloElement {
        let mut e = self.zero();
        e.coeffs[0] = c;
        e
    }

    /// `zeta_m^k` for any integer `k`.
    pub fn zeta_pow(self: &Arc<Self>, k: i64) -> CycloElement {
        self.from_int_coeffs(self.zeta_power_coeffs(k))
    }

    pub fn zeta(self: &Arc<Self>) -> CycloElement {
        self.zeta_pow(1)
    }

    /// Element from integer coefficients of any length (reduced on entry).
    pub fn from_int_coeffs(self: &Arc<Self>, c: &[BigInt]) -> CycloElement {
        let red = self.reduce_int(c);
        CycloElement {
            field: Arc::clone(self),
            coeffs: red.into_iter().map(BigRational::from_integer).collect(),
        }
    }

    pub fn from_i64_coeffs(self: &Arc<Self>, c: &[i64]) -> CycloElement {
        let v: IntPoly = c.iter().map(|&x| BigInt::from(x)).collect();
        self.from_int_coeffs(&v)
    }

    /// Element from rational coefficients of any length (reduced on entry).
    pub fn from_coeffs(self: &Arc<Self>, c: &[BigRational]) -> CycloElement {
        CycloElement {
            field: Arc::clone(self),
            coeffs: self.reduce_rat(c),
        }
    }
}

/// An element of `Q(zeta_m)`.
#[derive(Clone, Debug)]
pub struct CycloElement {
    field: Arc<CycloField>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for CycloElement {
    fn eq(&self, other: &Self) -> bool {
        self.field.m == other.field.m && self.coeffs == other.coeffs
    }
}

impl Eq for CycloElement {}

impl CycloElement {
    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field.m == other.field.m {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field.m, other.field.m))
        }
    }

    fn with_coeffs(&self, coeffs: Vec<BigRational>) -> CycloElement {
        CycloElement {
            field: Arc::clone(&self.field),
            coeffs,
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.with_coeffs(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect()))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self.with_coeffs(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect()))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let prod = poly::mul(&self.coeffs, &other.coeffs);
        Ok(self.with_coeffs(self.field.reduce_rat(&prod)))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        self.checked_mul(&other.inv()?)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        self.with_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplicative inverse via the extended gcd with the cyclotomic polynomial.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut a = self.coeffs.clone();
        poly::trim(&mut a);
        let (g, s, _) = poly::rat_xgcd(&a, &self.field.phi_rat);
        // Phi_m is irreducible, so the gcd with any nonzero reduced element is 1.
        debug_assert!(g.len() == 1 && g[0].is_one());
        Ok(self.with_coeffs(self.field.reduce_rat(&s)))
    }

    /// Integer power; negative exponents go through [`CycloElement::inv`].
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = self.field.one();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            k >>= 1;
            if k > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// `N_{K/Q}(x) = Res(Phi_m, x)`.
    pub fn norm(&self) -> BigRational {
        poly::rat_resultant(&self.field.phi_rat, &self.coeffs)
    }

    pub fn trace(&self) -> BigRational {
        self.coeffs
            .iter()
            .zip(&self.field.traces)
            .fold(BigRational::zero(), |acc, (c, t)| acc + c * BigRational::from_integer(t.clone()))
    }

    /// Complex conjugation `zeta -> zeta^{-1}`.
    pub fn conjugate(&self) -> Self {
        let m = self.field.m as usize;
        let mut lifted = vec![BigRational::zero(); m];
        for (k, c) in self.coeffs.iter().enumerate() {
            lifted[(m - k) % m] += c;
        }
        self.with_coeffs(self.field.reduce_rat(&lifted))
    }

    /// Integer coordinates when every coefficient is an integer.
    pub fn to_integral(&self) -> Option<IntPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Writes `x = y / d` with `y` integral and `d` the least positive common denominator.
    pub fn split_denominator(&self) -> (IntPoly, BigInt) {
        let d = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let y = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(d.clone())).to_integer())
            .collect();
        (y, d)
    }

    /// Values of `x` at every primitive m-th root of unity `e^{2 pi i k / m}`,
    /// `k` coprime to `m` in increasing order.
    pub fn embed_numeric(&self, digits: u32) -> Vec<Complex> {
        let mut ev = Evaluator::new(self.field.m, digits.max(15));
        (1..=self.field.m)
            .filter(|&k| gcd_u64(k, self.field.m) == 1)
            .map(|k| ev.evaluate(&self.coeffs, k))
            .collect()
    }
}

impl<'a> std::ops::Add<&'a CycloElement> for &'a CycloElement {
    type Output = CycloElement;
    fn add(self, rhs: &'a CycloElement) -> CycloElement {
        self.checked_add(rhs).expect("field mismatch in addition")
    }
}

impl<'a> std::ops::Sub<&'a CycloElement> for &'a CycloElement {
    type Output = CycloElement;
    fn sub(self, rhs: &'a CycloElement) -> CycloElement {
        self.checked_sub(rhs).expect("field mismatch in subtraction")
    }
}

impl<'a> std::ops::Mul<&'a CycloElement> for &'a CycloElement {
    type Output = CycloElement;
    fn mul(self, rhs: &'a CycloElement) -> CycloElement {
        self.checked_mul(rhs).expect("field mismatch in multiplication")
    }
}

impl std::ops::Neg for &CycloElement {
    type Output = CycloElement;
    fn neg(self) -> CycloElement {
        self.with_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for CycloElement {
    /// Renders in the expression grammar accepted by the command line,
    /// e.g. `3 + 4*z` or `2^-1 - 2^-1*z`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let a = c.abs();
            let mut parts = Vec::new();
            if !a.numer().is_one() || (k == 0 && a.denom().is_one()) {
                parts.push(a.numer().to_string());
            }
            if !a.denom().is_one() {
                parts.push(format!("{}^-1", a.denom()));
            }
            match k {
                0 => {}
                1 => parts.push("z".into()),
                _ => parts.push(format!("z^{k}")),
            }
            write!(f, "{}", parts.join("*"))?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `Tr(b_i * conj(b_j))` for a list of elements of one field.
pub fn trace_gram(basis: &[CycloElement]) -> Result<Vec<Vec<BigRational>>> {
    if let Some(first) = basis.first() {
        for b in basis {
            first.same_field(b)?;
        }
    }
    let conj: Vec<CycloElement> = basis.iter().map(CycloElement::conjugate).collect();
    Ok(basis
        .iter()
        .map(|bi| conj.iter().map(|cj| (bi * cj).trace()).collect())
        .collect())
}

/// A multiprecision complex number produced by [`CycloElement::embed_numeric`].
#[derive(Clone, Debug)]
pub struct Complex {
    pub re: BigFloat,
    pub im: BigFloat,
    digits: u32,
}

impl Complex {
    pub fn to_f64(&self) -> (f64, f64) {
        (bigfloat_to_f64(&self.re), bigfloat_to_f64(&self.im))
    }

    /// Decimal renderings of the real and imaginary parts, truncated to
    /// the precision the value was computed with.
    /// Both parts to `digits` significant digits; a part below the working
    /// precision relative to the modulus prints as `0`.
    pub fn to_decimal_strings(&self) -> (String, String) {
        let (re, im) = self.to_f64();
        let floor = re.abs().max(im.abs()) * 10f64.powi(-(self.digits as i32));
        let part = |x: &BigFloat, v: f64| {
            if v.abs() < floor {
                "0".to_string()
            } else {
                format_digits(x, self.digits)
            }
        };
        (part(&self.re, re), part(&self.im, im))
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Modulus of `self - other`, as f64.
    pub fn distance(&self, other: &Complex) -> f64 {
        let (a, b) = self.to_f64();
        let (c, d) = other.to_f64();
        ((a - c).powi(2) + (b - d).powi(2)).sqrt()
    }

    pub fn abs(&self) -> f64 {
        let (a, b) = self.to_f64();
        a.hypot(b)
    }
}

const RM: RoundingMode = RoundingMode::ToEven;

fn bigfloat_to_f64(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let mut cc = Consts::new().expect("constants cache");
    x.format(Radix::Dec, RM, &mut cc)
        .ok()
        .and_then(|s| s.parse::<f64>().ok())
        .unwrap_or(f64::NAN)
}

fn format_digits(x: &BigFloat, digits: u32) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let mut cc = Consts::new().expect("constants cache");
    let s = x.format(Radix::Dec, RM, &mut cc).unwrap_or_else(|_| "NaN".into());
    // "d.ddddde+X": keep `digits` significant digits of the mantissa
    match s.split_once('e') {
        Some((mant, exp)) => {
            let keep = digits as usize + mant.find('.').map_or(0, |p| p + 1);
            let mant = &mant[..mant.len().min(keep)];
            format!("{mant}e{exp}")
        }
        None => s,
    }
}

struct Evaluator {
    m: u64,
    bits: usize,
    digits: u32,
    cc: Consts,
    // (cos, sin) of 2 pi j / m, for j in 0..m
    roots: Vec<(BigFloat, BigFloat)>,
}

impl Evaluator {
    fn new(m: u64, digits: u32) -> Self {
        let bits = (digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + 64;
        let mut cc = Consts::new().expect("constants cache");
        let pi = cc.pi(bits, RM);
        let two_pi_over_m = pi
            .mul(&BigFloat::from_u64(2, bits), bits, RM)
            .div(&BigFloat::from_u64(m, bits), bits, RM);
        let roots = (0..m)
            .map(|j| {
                let angle = two_pi_over_m.mul(&BigFloat::from_u64(j, bits), bits, RM);
                (angle.cos(bits, RM, &mut cc), angle.sin(bits, RM, &mut cc))
            })
            .collect();
        Evaluator {
            m,
            bits,
            digits,
            cc,
            roots,
        }
    }

    fn rational(&mut self, c: &BigRational) -> BigFloat {
        let num = BigFloat::parse(&c.numer().to_string(), Radix::Dec, self.bits, RM, &mut self.cc);
        if c.denom().is_one() {
            return num;
        }
        let den = BigFloat::parse(&c.denom().to_string(), Radix::Dec, self.bits, RM, &mut self.cc);
        num.div(&den, self.bits, RM)
    }

    fn evaluate(&mut self, coeffs: &[BigRational], k: u64) -> Complex {
        let mut re = BigFloat::from_u64(0, self.bits);
        let mut im = BigFloat::from_u64(0, self.bits);
        for (j, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cf = self.rational(c);
            let (cos, sin) = &self.roots[((j as u64 * k) % self.m) as usize];
            re = re.add(&cf.mul(cos, self.bits, RM), self.bits, RM);
            im = im.add(&cf.mul(sin, self.bits, RM), self.bits, RM);
        }
        Complex {
            re,
            im,
            digits: self.digits,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn gaussian_arithmetic() {
        let k = CycloField::new(4);
        let z = k.zeta();
        let one = k.one();
        assert_eq!(&(&one + &z) * &(&one - &z), k.from_int(2));
        assert_eq!(z.inv().unwrap(), -&z);
        let inv = (&one + &z).inv().unwrap();
        assert_eq!(inv.coeffs(), &[q(1, 2), q(-1, 2)]);
        assert_eq!(&inv * &(&one + &z), one);
        assert_eq!(k.zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(k.zero().pow(-1), Err(Error::DivisionByZero));
        assert_eq!(z.pow(-3).unwrap(), z);
    }

    #[test]
    fn field_mismatch_is_reported() {
        let a = CycloField::new(4).one();
        let b = CycloField::new(8).one();
        assert_eq!(a.checked_mul(&b), Err(Error::FieldMismatch(4, 8)));
    }

    #[test]
    fn norms() {
        let k = CycloField::new(4);
        assert_eq!(k.from_i64_coeffs(&[3, 4]).norm(), q(25, 1));
        assert_eq!(k.one().norm(), q(1, 1));
        assert_eq!(k.zeta().norm(), q(1, 1));
        assert_eq!(k.from_int(3).norm(), q(9, 1));
    }

    #[test]
    fn conjugation() {
        let k4 = CycloField::new(4);
        assert_eq!(k4.zeta().conjugate(), -&k4.zeta());
        assert_eq!(k4.from_i64_coeffs(&[5, -7]).conjugate(), k4.from_i64_coeffs(&[5, 7]));
        let k8 = CycloField::new(8);
        assert_eq!(k8.zeta().conjugate(), -&k8.zeta_pow(3));
    }

    #[test]
    fn trace_grams() {
        let k4 = CycloField::new(4);
        let g = trace_gram(&[k4.one(), k4.zeta()]).unwrap();
        assert_eq!(g, vec![vec![q(2, 1), q(0, 1)], vec![q(0, 1), q(2, 1)]]);
        assert_eq!(trace_gram(&[k4.one()]).unwrap(), vec![vec![q(2, 1)]]);
        let k8 = CycloField::new(8);
        let basis: Vec<_> = (0..4).map(|j| k8.zeta_pow(j)).collect();
        let g = trace_gram(&basis).unwrap();
        for (i, row) in g.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                assert_eq!(*v, q(if i == j { 4 } else { 0 }, 1));
            }
        }
    }

    #[test]
    fn root_of_unity_orders() {
        for m in [2u64, 4, 6, 8, 12, 20, 56] {
            let k = CycloField::new(m);
            let z = k.zeta();
            for e in 1..m {
                assert!(!z.pow(e as i64).unwrap().is_one(), "m={m} e={e}");
            }
            assert!(z.pow(m as i64).unwrap().is_one());
            // Phi_m(zeta) = 0
            let phi = k.phi_poly().clone();
            let val = phi
                .iter()
                .enumerate()
                .fold(k.zero(), |acc, (j, c)| &acc + &k.zeta_pow(j as i64).scale(&BigRational::from_integer(c.clone())));
            assert!(val.is_zero());
        }
    }

    #[test]
    fn numeric_embeddings() {
        let k4 = CycloField::new(4);
        let e = k4.zeta().embed_numeric(15);
        let (re0, im0) = e[0].to_f64();
        let (re1, im1) = e[1].to_f64();
        assert!(re0.abs() < 1e-15 && (im0 - 1.0).abs() < 1e-15);
        assert!(re1.abs() < 1e-15 && (im1 + 1.0).abs() < 1e-15);
        let two = k4.from_int(2).embed_numeric(15);
        assert!(two.iter().all(|c| (c.to_f64().0 - 2.0).abs() < 1e-15));

        let k3 = CycloField::new(3);
        let e = k3.from_i64_coeffs(&[1, 2]).embed_numeric(30);
        let (re, im) = e[0].to_f64();
        assert!(re.abs() < 1e-14 && (im - 3f64.sqrt()).abs() < 1e-14);
        let (re_s, im_s) = e[1].to_decimal_strings();
        assert!(im_s.starts_with("-1.73205080756887729352744634150"), "{im_s}");
        assert!(re_s.len() < 50, "{re_s}");
    }

    #[test]
    fn display_forms() {
        let k = CycloField::new(4);
        assert_eq!(k.from_i64_coeffs(&[3, 4]).to_string(), "3 + 4*z");
        assert_eq!(k.from_i64_coeffs(&[0, -1]).to_string(), "-z");
        assert_eq!((k.from_i64_coeffs(&[1, 1])).inv().unwrap().to_string(), "2^-1 - 2^-1*z");
        assert_eq!(k.zero().to_string(), "0");
    }
}
