//! Finite model of the abelian Chern-Simons partition sum over `F_p^a`.
//!
//! A symmetric matrix `D` over `F_p` plays the role of the pairing and
//! sources are vectors in its image. The brute-force sum
//! `sum_rho zeta_p^{rho^T D rho + sum_j xi_j . rho}` is computed exactly in
//! `Z[zeta_{4p}]` and compared with the Gauss-sum closed form.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::arith::{inv_mod, is_prime, legendre, mul_mod};
use crate::cyclotomic::{CycloElement, CycloField};
use crate::symbols::ModFraction;
use crate::{Error, Result};

pub type FpMatrix = Vec<Vec<u64>>;

/// Reduced row echelon form of `d` over `F_p` and its pivot columns.
fn rref(d: &[Vec<u64>], p: u64) -> (FpMatrix, Vec<usize>) {
    let mut a: FpMatrix = d.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(k) = (r..rows).find(|&k| a[k][c] != 0) else { continue };
        a.swap(r, k);
        let inv = inv_mod(a[r][c], p);
        for x in a[r].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        for k in 0..rows {
            if k != r && a[k][c] != 0 {
                let f = a[k][c];
                for j in 0..cols {
                    let t = mul_mod(f, a[r][j], p);
                    a[k][j] = (a[k][j] + p - t) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    (a, pivots)
}

/// Rank, kernel and a solver for `D x = xi` over `F_p`.
#[derive(Clone, Debug)]
pub struct KernelData {
    pub p: u64,
    pub rank: usize,
    /// `dim ker D`.
    pub b: usize,
    pub kernel: Vec<Vec<u64>>,
    matrix: FpMatrix,
}

impl KernelData {
    /// Some `x` with `D x = xi`.
    pub fn solve(&self, xi: &[u64]) -> Result<Vec<u64>> {
        let p = self.p;
        let n = self.matrix.len();
        let aug: FpMatrix = self
            .matrix
            .iter()
            .zip(xi)
            .map(|(row, &v)| {
                let mut r = row.clone();
                r.push(v % p);
                r
            })
            .collect();
        let (red, pivots) = rref(&aug, p);
        if pivots.last() == Some(&n) {
            return Err(Error::NotInImage);
        }
        let mut x = vec![0; n];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = red[r][n];
        }
        Ok(x)
    }
}

pub fn kernel_and_cokernel_data(d: &[Vec<u64>], p: u64) -> KernelData {
    let n = d.len();
    let matrix: FpMatrix = d.iter().map(|r| r.iter().map(|x| x % p).collect()).collect();
    let (red, pivots) = rref(&matrix, p);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let kernel = free
        .iter()
        .map(|&f| {
            let mut v = vec![0; n];
            v[f] = 1;
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = (p - red[r][f]) % p;
            }
            v
        })
        .collect();
    KernelData {
        p,
        rank: pivots.len(),
        b: n - pivots.len(),
        kernel,
        matrix,
    }
}

/// Determinant over `F_p` by elimination.
pub fn det_mod_p(m: &[Vec<u64>], p: u64) -> u64 {
    let mut a: FpMatrix = m.to_vec();
    let n = a.len();
    let mut det = 1;
    for c in 0..n {
        let Some(k) = (c..n).find(|&k| !a[k][c].is_multiple_of(p)) else { return 0 };
        if k != c {
            a.swap(k, c);
            det = (p - det) % p;
        }
        det = mul_mod(det, a[c][c], p);
        let inv = inv_mod(a[c][c], p);
        for k in (c + 1)..n {
            let f = mul_mod(a[k][c], inv, p);
            for j in c..n {
                let t = mul_mod(f, a[c][j], p);
                a[k][j] = (a[k][j] + p - t) % p;
            }
        }
    }
    det
}

/// Legendre symbol of `det(B^T D B)` for `B` a basis of a complement of
/// `ker D`; `+1` when `D = 0`.
pub fn dbar_det_legendre(d: &[Vec<u64>], p: u64) -> i32 {
    // for symmetric D the pivot columns index a nonsingular principal minor
    let (_, pivots) = rref(d, p);
    let minor: FpMatrix = pivots
        .iter()
        .map(|&i| pivots.iter().map(|&j| d[i][j] % p).collect())
        .collect();
    legendre(det_mod_p(&minor, p) as i64, p)
}

fn dot(x: &[u64], y: &[u64], p: u64) -> u64 {
    x.iter().zip(y).fold(0, |acc, (a, b)| (acc + mul_mod(*a, *b, p)) % p)
}

/// `ht_p(xi_i, xi_j) = (x . xi_j)/p` for any `x` with `D x = xi_i`.
pub fn finite_height(d: &[Vec<u64>], xi_i: &[u64], xi_j: &[u64], p: u64) -> Result<ModFraction> {
    let x = kernel_and_cokernel_data(d, p).solve(xi_i)?;
    Ok(ModFraction::new(dot(&x, xi_j, p) as i64, p))
}

/// A symmetric matrix over `F_p` with sources in its image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingInstance {
    p: u64,
    a: usize,
    d: FpMatrix,
    sources: Vec<Vec<u64>>,
}

impl PairingInstance {
    pub fn new(p: u64, d: FpMatrix, sources: Vec<Vec<u64>>) -> Result<Self> {
        if p == 2 || !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not an odd prime")));
        }
        let a = d.len();
        if a == 0 || d.iter().any(|r| r.len() != a) {
            return Err(Error::InvalidInput("matrix must be square and nonempty".into()));
        }
        let d: FpMatrix = d.into_iter().map(|r| r.into_iter().map(|x| x % p).collect()).collect();
        for i in 0..a {
            for j in 0..i {
                if d[i][j] != d[j][i] {
                    return Err(Error::InvalidInput(format!("matrix is not symmetric at ({i}, {j})")));
                }
            }
        }
        let kd = kernel_and_cokernel_data(&d, p);
        let mut reduced = Vec::with_capacity(sources.len());
        for s in sources {
            if s.len() != a {
                return Err(Error::InvalidInput(format!("source has length {}, expected {a}", s.len())));
            }
            let s: Vec<u64> = s.into_iter().map(|x| x % p).collect();
            kd.solve(&s)?;
            reduced.push(s);
        }
        Ok(PairingInstance { p, a, d, sources: reduced })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.a
    }

    pub fn matrix(&self) -> &FpMatrix {
        &self.d
    }

    pub fn sources(&self) -> &[Vec<u64>] {
        &self.sources
    }

    pub fn with_sources(&self, sources: Vec<Vec<u64>>) -> Result<Self> {
        PairingInstance::new(self.p, self.d.clone(), sources)
    }

    /// The field `Q(zeta_{4p})` holding both sides.
    pub fn field(&self) -> Arc<CycloField> {
        CycloField::new(4 * self.p)
    }

    /// `e(rho) = rho^T D rho + sum_j xi_j . rho mod p`.
    pub fn exponent(&self, rho: &[u64]) -> u64 {
        let p = self.p;
        let mut e = 0;
        for (i, row) in self.d.iter().enumerate() {
            e = (e + mul_mod(rho[i], dot(row, rho, p), p)) % p;
        }
        for s in &self.sources {
            e = (e + dot(s, rho, p)) % p;
        }
        e
    }
}

/// `sum_e counts[e] * zeta_p^e` in `Q(zeta_{4p})`.
fn from_histogram(field: &Arc<CycloField>, counts: &[u64]) -> CycloElement {
    let mut acc = vec![BigInt::zero(); field.degree()];
    for (e, &c) in counts.iter().enumerate() {
        if c == 0 {
            continue;
        }
        for (o, z) in acc.iter_mut().zip(field.zeta_power_coeffs(4 * e as i64)) {
            *o += z * c;
        }
    }
    field.from_int_coeffs(&acc)
}

fn nth_vector(mut idx: u64, a: usize, p: u64) -> Vec<u64> {
    (0..a)
        .map(|_| {
            let d = idx % p;
            idx /= p;
            d
        })
        .collect()
}

/// Exponent histogram of the brute-force sum: `counts[e]` is the number of
/// `rho` with `e(rho) = e`.
pub fn exponent_histogram(inst: &PairingInstance, term_cap: u64) -> Result<Vec<u64>> {
    let p = inst.p;
    let terms = (p as u128).checked_pow(inst.a as u32);
    match terms {
        Some(t) if t <= term_cap as u128 => {}
        _ => {
            return Err(Error::TermCapExceeded {
                terms: format!("{p}^{}", inst.a),
                cap: term_cap,
            })
        }
    }
    // partition rho-space by its first coordinate
    let rest = p.pow(inst.a as u32 - 1);
    let partials: Vec<Vec<u64>> = (0..p)
        .into_par_iter()
        .map(|first| {
            let mut counts = vec![0u64; p as usize];
            for idx in 0..rest {
                let mut rho = vec![first];
                rho.extend(nth_vector(idx, inst.a - 1, p));
                counts[inst.exponent(&rho) as usize] += 1;
            }
            counts
        })
        .collect();
    Ok(partials.into_iter().fold(vec![0; p as usize], |mut acc, c| {
        acc.iter_mut().zip(c).for_each(|(a, b)| *a += b);
        acc
    }))
}

/// Exact value of the partition sum in `Z[zeta_{4p}]`.
pub fn brute_force_partition(inst: &PairingInstance, term_cap: u64) -> Result<CycloElement> {
    let counts = exponent_histogram(inst, term_cap)?;
    Ok(from_histogram(&inst.field(), &counts))
}

/// Quadratic Gauss sum `sum_{x mod p} zeta_p^{x^2}` in a field whose
/// conductor is divisible by `p`.
pub fn gauss_sum(field: &Arc<CycloField>, p: u64) -> CycloElement {
    assert!(field.m().is_multiple_of(p), "p must divide m");
    let mut counts = vec![0u64; p as usize];
    for x in 0..p {
        counts[mul_mod(x, x, p) as usize] += 1;
    }
    let step = (field.m() / p) as i64;
    let mut acc = vec![BigInt::zero(); field.degree()];
    for (e, &c) in counts.iter().enumerate() {
        for (o, z) in acc.iter_mut().zip(field.zeta_power_coeffs(step * e as i64)) {
            *o += z * c;
        }
    }
    field.from_int_coeffs(&acc)
}

/// `sqrt(p) = eps_p^{-1} g_p` in `Q(zeta_{4p})`, with `eps_p = 1` or `i`
/// according as `p = 1` or `3 mod 4`.
pub fn sqrt_p(field: &Arc<CycloField>, p: u64) -> CycloElement {
    let g = gauss_sum(field, p);
    if p % 4 == 1 {
        g
    } else {
        let i_inv = field.zeta_pow(-((field.m() / 4) as i64));
        &g * &i_inv
    }
}

/// `sum_{i,j} ht_p(xi_i, xi_j)` as an element of `(1/p)Z/Z`.
pub fn total_height(inst: &PairingInstance) -> Result<ModFraction> {
    let kd = kernel_and_cokernel_data(&inst.d, inst.p);
    let mut total = ModFraction::zero(inst.p);
    for si in &inst.sources {
        let x = kd.solve(si)?;
        for sj in &inst.sources {
            total = total + ModFraction::new(dot(&x, sj, inst.p) as i64, inst.p);
        }
    }
    Ok(total)
}

/// `p^{(a+b)/2} (det dbar / p) i^{(a-b)(p-1)^2/4} zeta_p^{-(1/4) H}` with `H`
/// the total height of the sources, exactly in `Z[zeta_{4p}]`.
pub fn closed_form_partition(inst: &PairingInstance) -> Result<CycloElement> {
    let p = inst.p;
    let field = inst.field();
    let kd = kernel_and_cokernel_data(&inst.d, p);
    let (a, b) = (inst.a as u64, kd.b as u64);
    let mut value = field.from_bigint(num_traits::pow(BigInt::from(p), ((a + b) / 2) as usize));
    if (a + b) % 2 == 1 {
        value = &value * &sqrt_p(&field, p);
    }
    if dbar_det_legendre(&inst.d, p) < 0 {
        value = -&value;
    }
    let i_exp = ((a - b) as u128 * ((p - 1) as u128).pow(2) / 4 % 4) as i64;
    value = &value * &field.zeta_pow(i_exp * p as i64);
    let h = total_height(inst)?.k();
    let shift = mul_mod(inv_mod(4, p), h, p);
    value = &value * &field.zeta_pow(-4 * shift as i64);
    Ok(value)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CompareMode {
    Exact,
    /// Relative tolerance on every complex embedding.
    Numeric { tol: f64, digits: u32 },
}

#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub equal: bool,
    pub lhs: CycloElement,
    pub rhs: CycloElement,
}

/// Compares brute force with the closed form.
pub fn verify_theorem(inst: &PairingInstance, mode: CompareMode, term_cap: u64) -> Result<TheoremReport> {
    let lhs = brute_force_partition(inst, term_cap)?;
    let rhs = closed_form_partition(inst)?;
    let equal = match mode {
        CompareMode::Exact => lhs == rhs,
        CompareMode::Numeric { tol, digits } => numerically_equal(&lhs, &rhs, tol, digits),
    };
    Ok(TheoremReport { equal, lhs, rhs })
}

/// `|x_k - y_k| <= tol * max(|x_k|, |y_k|)` at every embedding `k`.
pub fn numerically_equal(x: &CycloElement, y: &CycloElement, tol: f64, digits: u32) -> bool {
    let ex = x.embed_numeric(digits);
    let ey = y.embed_numeric(digits);
    ex.iter().zip(&ey).all(|(u, v)| {
        let scale = u.abs().max(v.abs());
        u.distance(v) <= tol * scale
    })
}

/// Random symmetric `a x a` matrix over `F_p` of rank `rank`.
pub fn random_symmetric<R: Rng>(p: u64, a: usize, rank: usize, rng: &mut R) -> FpMatrix {
    let v = loop {
        let v: FpMatrix = (0..a).map(|_| (0..a).map(|_| rng.gen_range(0..p)).collect()).collect();
        if det_mod_p(&v, p) != 0 {
            break v;
        }
    };
    let c: Vec<u64> = (0..rank).map(|_| rng.gen_range(1..p)).collect();
    // D = V^T diag(c) V
    (0..a)
        .map(|i| {
            (0..a)
                .map(|j| (0..rank).fold(0, |acc, k| (acc + mul_mod(mul_mod(v[k][i], c[k], p), v[k][j], p)) % p))
                .collect()
        })
        .collect()
}

/// Random instance: rank uniform in `0..=a`, then 0 to 3 sources `D y`
/// for uniform `y`.
pub fn random_instance<R: Rng>(p: u64, a: usize, rng: &mut R) -> PairingInstance {
    let rank = rng.gen_range(0..=a);
    let d = random_symmetric(p, a, rank, rng);
    let count = rng.gen_range(0..=3);
    let sources = (0..count)
        .map(|_| {
            let y: Vec<u64> = (0..a).map(|_| rng.gen_range(0..p)).collect();
            d.iter().map(|row| dot(row, &y, p)).collect()
        })
        .collect();
    PairingInstance::new(p, d, sources).expect("sources lie in the image")
}

/// One instance of a seeded sweep and its comparison outcome.
#[derive(Clone, Debug)]
pub struct SweepEntry {
    pub instance: PairingInstance,
    pub trial: usize,
    pub report: TheoremReport,
}

/// Draws `trials` random instances for every `(p, a)` from one generator
/// seeded with `seed`, then verifies them in parallel. Instance generation
/// is sequential, so results do not depend on the worker count.
pub fn theorem_sweep(
    primes: &[u64],
    dims: &[usize],
    trials: usize,
    seed: u64,
    mode: CompareMode,
    term_cap: u64,
) -> Result<Vec<SweepEntry>> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut jobs = Vec::new();
    for &p in primes {
        if p == 2 || !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not an odd prime")));
        }
        for &a in dims {
            if a == 0 {
                return Err(Error::InvalidInput("dimension must be positive".into()));
            }
            for trial in 0..trials {
                jobs.push((trial, random_instance(p, a, &mut rng)));
            }
        }
    }
    jobs.into_par_iter()
        .map(|(trial, instance)| {
            let report = verify_theorem(&instance, mode, term_cap)?;
            Ok(SweepEntry { instance, trial, report })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::euler_phi;
    use rand_chacha::ChaCha8Rng;

    const CAP: u64 = 10_000_000;

    fn inst(p: u64, d: &[&[u64]], sources: &[&[u64]]) -> PairingInstance {
        PairingInstance::new(
            p,
            d.iter().map(|r| r.to_vec()).collect(),
            sources.iter().map(|r| r.to_vec()).collect(),
        )
        .unwrap()
    }

    /// Independent oracle: sum `exp(2 pi i e(rho)/p)` in floating point.
    fn naive_complex(inst: &PairingInstance) -> (f64, f64) {
        let p = inst.p();
        let total = p.pow(inst.dim() as u32);
        let (mut re, mut im) = (0.0, 0.0);
        for idx in 0..total {
            let rho = nth_vector(idx, inst.dim(), p);
            let mut e = 0u64;
            for i in 0..inst.dim() {
                for j in 0..inst.dim() {
                    e += rho[i] * inst.matrix()[i][j] * rho[j];
                }
            }
            for s in inst.sources() {
                e += s.iter().zip(&rho).map(|(a, b)| a * b).sum::<u64>();
            }
            let t = 2.0 * std::f64::consts::PI * (e % p) as f64 / p as f64;
            re += t.cos();
            im += t.sin();
        }
        (re, im)
    }

    fn principal_value(x: &CycloElement) -> (f64, f64) {
        x.embed_numeric(20)[0].to_f64()
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_and_cokernel_data(&[vec![0, 0], vec![0, 0]], 3).b, 2);
        let kd = kernel_and_cokernel_data(&[vec![1, 0], vec![0, 0]], 3);
        assert_eq!(kd.b, 1);
        assert_eq!(kd.kernel, vec![vec![0, 1]]);
        assert_eq!(kernel_and_cokernel_data(&[vec![1, 2], vec![2, 4]], 5).b, 1);
        assert_eq!(kd.solve(&[0, 1]).unwrap_err(), Error::NotInImage);
        assert_eq!(kd.solve(&[2, 0]).unwrap(), vec![2, 0]);
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(dbar_det_legendre(&[vec![1]], 3), 1);
        assert_eq!(dbar_det_legendre(&[vec![2]], 5), -1);
        assert_eq!(dbar_det_legendre(&[vec![0, 0], vec![0, 0]], 7), 1);
        // no nonsingular 1x1 principal minor
        assert_eq!(dbar_det_legendre(&[vec![0, 1], vec![1, 0]], 5), legendre(-1, 5));
    }

    #[test]
    fn legendre_is_basis_independent() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for &p in &[3u64, 5, 7, 11] {
            for a in 1..=4 {
                let d = random_symmetric(p, a, rng.gen_range(0..=a), &mut rng);
                let kd = kernel_and_cokernel_data(&d, p);
                let expected = dbar_det_legendre(&d, p);
                let (_, pivots) = rref(&d, p);
                let r = kd.rank;
                for _ in 0..50 {
                    // B = E_S M + K N with M invertible
                    let m = random_symmetric(p, r, r, &mut rng);
                    let mixed: Vec<Vec<u64>> = (0..r)
                        .map(|col| {
                            let mut v = vec![0; a];
                            for (k, &s) in pivots.iter().enumerate() {
                                v[s] = (v[s] + m[k][col]) % p;
                            }
                            for kv in &kd.kernel {
                                let c = rng.gen_range(0..p);
                                for (x, y) in v.iter_mut().zip(kv) {
                                    *x = (*x + mul_mod(c, *y, p)) % p;
                                }
                            }
                            v
                        })
                        .collect();
                    let btdb: FpMatrix = mixed
                        .iter()
                        .map(|bi| {
                            mixed
                                .iter()
                                .map(|bj| {
                                    let dbj: Vec<u64> = d.iter().map(|row| dot(row, bj, p)).collect();
                                    dot(bi, &dbj, p)
                                })
                                .collect()
                        })
                        .collect();
                    assert_eq!(legendre(det_mod_p(&btdb, p) as i64, p), expected);
                }
            }
        }
    }

    #[test]
    fn height_examples() {
        assert_eq!(finite_height(&[vec![2]], &[1], &[1], 5).unwrap(), ModFraction::new(3, 5));
        assert!(finite_height(&[vec![2]], &[0], &[1], 5).unwrap().is_zero());
        assert_eq!(
            finite_height(&[vec![1, 0], vec![0, 0]], &[0, 1], &[0, 1], 3).unwrap_err(),
            Error::NotInImage
        );
    }

    #[test]
    fn height_is_symmetric_and_solution_independent() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for _ in 0..200 {
            let p = [3u64, 5, 7, 11][rng.gen_range(0..4)];
            let x = random_instance(p, rng.gen_range(1..=4), &mut rng);
            let kd = kernel_and_cokernel_data(x.matrix(), p);
            for si in x.sources() {
                for sj in x.sources() {
                    let h = finite_height(x.matrix(), si, sj, p).unwrap();
                    assert_eq!(h, finite_height(x.matrix(), sj, si, p).unwrap());
                    let mut sol = kd.solve(si).unwrap();
                    for kv in &kd.kernel {
                        let c = rng.gen_range(0..p);
                        sol.iter_mut().zip(kv).for_each(|(s, k)| *s = (*s + mul_mod(c, *k, p)) % p);
                    }
                    assert_eq!(ModFraction::new(dot(&sol, sj, p) as i64, p), h);
                }
            }
        }
    }

    #[test]
    fn brute_force_examples() {
        let f3 = CycloField::new(12);
        assert_eq!(brute_force_partition(&inst(3, &[&[0]], &[]), CAP).unwrap(), f3.from_int(3));
        let v = brute_force_partition(&inst(3, &[&[1]], &[]), CAP).unwrap();
        let expected = &f3.from_int(1) + &(&f3.from_int(2) * &f3.zeta_pow(4));
        assert_eq!(v, expected);
        let (re, im) = principal_value(&v);
        assert!(re.abs() < 1e-12 && (im - 3f64.sqrt()).abs() < 1e-12);

        let f5 = CycloField::new(20);
        let v = brute_force_partition(&inst(5, &[&[2]], &[&[1]]), CAP).unwrap();
        let z5 = f5.zeta_pow(4);
        let expected = &(&f5.from_int(2) + &(&f5.from_int(2) * &z5)) + &z5.pow(3).unwrap();
        assert_eq!(v, expected);
        let (re, im) = principal_value(&v);
        assert!((re - 1.8090).abs() < 1e-4 && (im - 1.3143).abs() < 1e-4);
    }

    #[test]
    fn closed_form_examples() {
        let f3 = CycloField::new(12);
        assert_eq!(closed_form_partition(&inst(3, &[&[0]], &[])).unwrap(), f3.from_int(3));
        let v = closed_form_partition(&inst(3, &[&[1]], &[])).unwrap();
        let (re, im) = principal_value(&v);
        assert!(re.abs() < 1e-12 && (im - 3f64.sqrt()).abs() < 1e-12);

        let f5 = CycloField::new(20);
        let v = closed_form_partition(&inst(5, &[&[2]], &[&[1]])).unwrap();
        let expected = -&(&sqrt_p(&f5, 5) * &f5.zeta_pow(12));
        assert_eq!(v, expected);
    }

    #[test]
    fn theorem_examples() {
        for x in [inst(3, &[&[1]], &[]), inst(3, &[&[0, 0], &[0, 0]], &[])] {
            let r = verify_theorem(&x, CompareMode::Exact, CAP).unwrap();
            assert!(r.equal);
        }
        let r = verify_theorem(&inst(3, &[&[0, 0], &[0, 0]], &[]), CompareMode::Exact, CAP).unwrap();
        assert_eq!(r.lhs, CycloField::new(12).from_int(9));
        let numeric = CompareMode::Numeric { tol: 1e-12, digits: 30 };
        assert!(verify_theorem(&inst(5, &[&[2]], &[&[1]]), numeric, CAP).unwrap().equal);
    }

    #[test]
    fn term_cap_and_validation() {
        let x = inst(5, &[&[1, 0], &[0, 1]], &[]);
        assert!(matches!(brute_force_partition(&x, 24), Err(Error::TermCapExceeded { .. })));
        assert!(brute_force_partition(&x, 25).is_ok());
        assert!(PairingInstance::new(5, vec![vec![1, 2], vec![3, 1]], vec![]).is_err());
        assert!(PairingInstance::new(4, vec![vec![1]], vec![]).is_err());
        assert_eq!(
            PairingInstance::new(3, vec![vec![1, 0], vec![0, 0]], vec![vec![0, 1]]).unwrap_err(),
            Error::NotInImage
        );
    }

    #[test]
    fn random_theorem_sweep_matches_naive_sum() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for &p in &[3u64, 5, 7] {
            for a in 1..=3 {
                for _ in 0..15 {
                    let x = random_instance(p, a, &mut rng);
                    let r = verify_theorem(&x, CompareMode::Exact, CAP).unwrap();
                    assert!(r.equal, "{x:?}");
                    let (re, im) = naive_complex(&x);
                    let (vr, vi) = principal_value(&r.lhs);
                    assert!((re - vr).abs() < 1e-8 && (im - vi).abs() < 1e-8);
                }
            }
        }
    }

    #[test]
    fn source_shift_and_kernel_restriction() {
        let mut rng = ChaCha8Rng::seed_from_u64(24);
        for _ in 0..40 {
            let p = [3u64, 5, 7][rng.gen_range(0..3)];
            let x = random_instance(p, rng.gen_range(1..=3), &mut rng);
            let mut sources = x.sources().to_vec();
            sources.push(vec![0; x.dim()]);
            let y = x.with_sources(sources).unwrap();
            assert_eq!(brute_force_partition(&x, CAP).unwrap(), brute_force_partition(&y, CAP).unwrap());
            assert_eq!(closed_form_partition(&x).unwrap(), closed_form_partition(&y).unwrap());

            let kd = kernel_and_cokernel_data(x.matrix(), p);
            for kv in &kd.kernel {
                assert_eq!(x.exponent(kv), 0);
            }
            // sum over the complement spanned by pivot coordinates, times p^b
            let (_, pivots) = rref(x.matrix(), p);
            let mut counts = vec![0u64; p as usize];
            for idx in 0..p.pow(pivots.len() as u32) {
                let digits = nth_vector(idx, pivots.len(), p);
                let mut rho = vec![0; x.dim()];
                for (&c, d) in pivots.iter().zip(digits) {
                    rho[c] = d;
                }
                counts[x.exponent(&rho) as usize] += p.pow(kd.b as u32);
            }
            assert_eq!(from_histogram(&x.field(), &counts), brute_force_partition(&x, CAP).unwrap());
        }
    }

    #[test]
    fn gauss_sums() {
        for p in (3..100u64).filter(|&p| is_prime(p)) {
            let f = CycloField::new(p);
            let g = gauss_sum(&f, p);
            let sign = if p % 4 == 1 { 1 } else { -1 };
            assert_eq!(g.pow(2).unwrap(), f.from_int(sign * p as i64));
            assert_eq!(f.degree() as u64, euler_phi(p));
            let (re, im) = principal_value(&g);
            let s = (p as f64).sqrt();
            let (er, ei) = if p % 4 == 1 { (s, 0.0) } else { (0.0, s) };
            assert!(((re - er).hypot(im - ei)) / s < 1e-9);
        }
    }

    #[test]
    fn sweep_is_deterministic() {
        let a = theorem_sweep(&[3, 5], &[1, 2], 5, 7, CompareMode::Exact, CAP).unwrap();
        let b = theorem_sweep(&[3, 5], &[1, 2], 5, 7, CompareMode::Exact, CAP).unwrap();
        assert_eq!(a.len(), 20);
        assert!(a.iter().all(|e| e.report.equal));
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.instance, y.instance);
            assert_eq!(x.report.lhs, y.report.lhs);
        }
    }
}
