//! Ideals of `Z[zeta_m]` away from the primes dividing `m`.
//!
//! Primes are found by Dedekind-Kummer splitting of the cyclotomic
//! polynomial; ideals are carried in factored form and turned into
//! HNF lattices on demand. Valuations use anti-uniformizers, and
//! principal generators are searched for by exact lattice enumeration.

pub mod enumerate;
pub mod hnf;
pub mod lll;

use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{factor_biguint, gcd_u64, p_adic_valuation, require_prime};
use crate::cyclotomic::{CycloElement, CycloField};
use crate::finitefield::{factor_poly_mod_p, FpPoly, FqElem, ResidueField};
use crate::poly::IntPoly;
use crate::{Error, Result};

use self::enumerate::FinckePohst;
use self::hnf::Column;

/// A prime `(p, g(zeta))` of `Z[zeta_m]` with `p` not dividing `m`.
#[derive(Clone)]
pub struct PrimeIdeal {
    inner: Arc<PrimeData>,
}

struct PrimeData {
    field: Arc<CycloField>,
    p: u64,
    g: FpPoly,
    label: usize,
    seed: u64,
    residue: ResidueField,
    lattice: OnceLock<IdealLattice>,
    // tau = 1 mod P, lying in every other prime Q over p but not in Q^2
    tau: OnceLock<IntPoly>,
}

impl PartialEq for PrimeIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for PrimeIdeal {}

impl Hash for PrimeIdeal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state)
    }
}

impl PartialOrd for PrimeIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PrimeIdeal {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Debug for PrimeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P({}, {:?})", self.inner.p, self.inner.g)
    }
}

impl fmt::Display for PrimeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P({}, {:?})", self.inner.p, self.inner.g)
    }
}

impl PrimeIdeal {
    fn key(&self) -> (u64, u64, usize, &FpPoly) {
        let d = &self.inner;
        (d.field.m(), d.p, d.g.len(), &d.g)
    }

    fn build(field: &Arc<CycloField>, p: u64, g: FpPoly, label: usize, seed: u64) -> Result<Self> {
        let residue = ResidueField::new(p, &g)?;
        Ok(PrimeIdeal {
            inner: Arc::new(PrimeData {
                field: Arc::clone(field),
                p,
                g,
                label,
                seed,
                residue,
                lattice: OnceLock::new(),
                tau: OnceLock::new(),
            }),
        })
    }

    /// The prime `(p, g(zeta))` given by its rational prime and the
    /// coefficients of `g` (constant term first). `g` must reduce to a
    /// monic irreducible factor of the cyclotomic polynomial mod `p`.
    pub fn from_parts(field: &Arc<CycloField>, p: u64, g: &[i64], seed: u64) -> Result<Self> {
        let target: FpPoly = {
            let mut v: FpPoly = g.iter().map(|&c| c.rem_euclid(p as i64) as u64).collect();
            while v.last() == Some(&0) {
                v.pop();
            }
            v
        };
        let primes = split_prime(field, p, seed)?;
        primes
            .into_iter()
            .find(|q| q.inner.g == target)
            .ok_or_else(|| {
                Error::InvalidInput(format!(
                    "{g:?} is not a monic irreducible factor of the cyclotomic polynomial mod {p}"
                ))
            })
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.inner.field
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }

    /// Monic generator polynomial mod `p`, coefficients in `[0, p)`.
    pub fn g(&self) -> &FpPoly {
        &self.inner.g
    }

    pub fn residue_degree(&self) -> usize {
        self.inner.g.len() - 1
    }

    pub fn label(&self) -> usize {
        self.inner.label
    }

    pub fn norm(&self) -> BigUint {
        BigUint::from(self.inner.p).pow(self.residue_degree() as u32)
    }

    pub fn residue_field(&self) -> &ResidueField {
        &self.inner.residue
    }

    /// Reduction `Z[zeta] -> Z[zeta]/P` of an integral element.
    pub fn reduce(&self, x: &[BigInt]) -> FqElem {
        self.inner.residue.reduce_int(x)
    }

    pub fn contains_int(&self, x: &[BigInt]) -> bool {
        self.reduce(x).is_zero()
    }

    pub fn lattice(&self) -> &IdealLattice {
        self.inner.lattice.get_or_init(|| {
            let d = &self.inner;
            let n = d.field.degree();
            let p = BigInt::from(d.p);
            let g: IntPoly = d.g.iter().map(|&c| BigInt::from(c)).collect();
            let mut gens: Vec<Column> = (0..n)
                .map(|i| {
                    let mut c = vec![BigInt::zero(); n];
                    c[i] = p.clone();
                    c
                })
                .collect();
            gens.extend(d.field.mul_matrix_columns(&g));
            IdealLattice::from_generators(&d.field, &gens, Some(&p))
        })
    }

    fn tau(&self) -> &IntPoly {
        self.inner.tau.get_or_init(|| {
            let d = &self.inner;
            let n = d.field.degree();
            let siblings: Vec<PrimeIdeal> = split_prime(&d.field, d.p, d.seed)
                .expect("splitting succeeded once already")
                .into_iter()
                .filter(|q| q != self)
                .collect();
            let other = siblings
                .iter()
                .fold(IdealLattice::unit(&d.field), |acc, q| acc.product(q.lattice()));
            let mut gens: Vec<Column> = self.lattice().basis.clone();
            gens.extend(other.basis.iter().cloned());
            let (h, track) = hnf::hnf_tracked(&gens, n).expect("coprime ideals sum to the whole ring");
            debug_assert!(h.iter().enumerate().all(|(i, c)| c[i].is_one()));
            // column 0 of the reduced HNF is the element 1 = a + b
            let b_part = hnf::combine_columns(&other.basis, &track[0][n..]);
            let p = BigInt::from(d.p);
            let base: IntPoly = b_part.iter().map(|c| c.mod_floor(&p)).collect();
            // shift by p*s so that tau lies in no square of a sibling
            let squares: Vec<IdealLattice> = siblings.iter().map(|q| q.lattice().product(q.lattice())).collect();
            (0u64..)
                .map(|k| {
                    let mut digits = k;
                    let mut tau = base.clone();
                    for c in tau.iter_mut() {
                        *c += &p * BigInt::from(digits % d.p);
                        digits /= d.p;
                    }
                    tau
                })
                .find(|tau| squares.iter().all(|sq| !sq.contains(tau)))
                .expect("some shift avoids every square")
        })
    }
}

/// The primes of `Z[zeta_m]` above `p`, one per irreducible factor of the
/// cyclotomic polynomial mod `p`, labelled in the deterministic factor order.
pub fn split_prime(field: &Arc<CycloField>, p: u64, seed: u64) -> Result<Vec<PrimeIdeal>> {
    require_prime(p)?;
    if field.m().is_multiple_of(p) {
        return Err(Error::RamifiedPrime { p, m: field.m() });
    }
    let factors = factor_poly_mod_p(field.phi_poly(), p, seed)?;
    factors
        .into_iter()
        .enumerate()
        .map(|(label, (g, e))| {
            debug_assert_eq!(e, 1, "unramified primes split with multiplicity one");
            PrimeIdeal::build(field, p, g, label, seed)
        })
        .collect()
}

/// A full-rank sublattice of `Z[zeta_m]` in column HNF, in power-basis
/// coordinates. For an integral ideal the determinant is its norm.
#[derive(Clone, Debug)]
pub struct IdealLattice {
    field: Arc<CycloField>,
    pub basis: Vec<Column>,
}

impl PartialEq for IdealLattice {
    fn eq(&self, other: &Self) -> bool {
        self.field.m() == other.field.m() && self.basis == other.basis
    }
}

impl Eq for IdealLattice {}

impl IdealLattice {
    pub fn unit(field: &Arc<CycloField>) -> Self {
        let n = field.degree();
        let basis = (0..n)
            .map(|i| {
                let mut c = vec![BigInt::zero(); n];
                c[i] = BigInt::one();
                c
            })
            .collect();
        IdealLattice {
            field: Arc::clone(field),
            basis,
        }
    }

    /// HNF of the span of `gens`; `modulus` must lie in the span.
    /// Panics if the generators are not of full rank.
    pub fn from_generators(field: &Arc<CycloField>, gens: &[Column], modulus: Option<&BigInt>) -> Self {
        let basis = hnf::hnf(gens, field.degree(), modulus).expect("ideal generators have full rank");
        IdealLattice {
            field: Arc::clone(field),
            basis,
        }
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn determinant(&self) -> BigInt {
        hnf::determinant(&self.basis)
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        hnf::solve(&self.basis, x).is_some()
    }

    /// Lattice of the product ideal.
    pub fn product(&self, other: &IdealLattice) -> IdealLattice {
        let modulus = self.determinant() * other.determinant();
        let mut gens = Vec::with_capacity(self.basis.len() * other.basis.len());
        for a in &self.basis {
            for b in &other.basis {
                gens.push(self.field.mul_int(a, b));
            }
        }
        IdealLattice::from_generators(&self.field, &gens, Some(&modulus))
    }

    pub fn element(&self, coords: &[BigInt]) -> CycloElement {
        self.field.from_int_coeffs(&hnf::combine_columns(&self.basis, coords))
    }
}

/// `t` with `v_P(t) = -1` and `v_Q(t) >= 0` at every other prime `Q`.
pub fn anti_uniformizer(prime: &PrimeIdeal) -> CycloElement {
    let field = prime.field();
    let tau = field.from_int_coeffs(prime.tau());
    tau.scale(&BigRational::new(BigInt::one(), BigInt::from(prime.p())))
}

/// Removes the `P`-part of a nonzero integral `y`: returns `k = v_P(y)` and
/// an integral `y'` that is a `P`-unit with `y' = y * t^k * w`, where `t`
/// is the anti-uniformizer and `w = 1 mod P`. The residue of `y'` is
/// therefore the residue of `y * t^k`.
pub fn strip_prime(y: &[BigInt], prime: &PrimeIdeal) -> (u64, IntPoly) {
    debug_assert!(y.iter().any(|c| !c.is_zero()));
    let p = BigInt::from(prime.p());
    let mut y = y.to_vec();
    let mut k = 0;
    while prime.contains_int(&y) {
        if y.iter().all(|c| c.is_multiple_of(&p)) {
            y.iter_mut().for_each(|c| *c = &*c / &p);
        } else {
            let prod = prime.field().mul_int(&y, prime.tau());
            debug_assert!(prod.iter().all(|c| c.is_multiple_of(&p)));
            y = prod.iter().map(|c| c / &p).collect();
        }
        k += 1;
    }
    (k, y)
}

/// `v_P(x)` for nonzero `x`.
pub fn valuation(x: &CycloElement, prime: &PrimeIdeal) -> Result<i64> {
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    let (y, d) = x.split_denominator();
    let (k, _) = strip_prime(&y, prime);
    Ok(k as i64 - p_adic_valuation(&d, prime.p()) as i64)
}

/// Deterministic `varpi` with `v_P(varpi) = 1`: the first HNF column of
/// `P` outside `P^2`.
pub fn uniformizer(prime: &PrimeIdeal) -> CycloElement {
    let lat = prime.lattice();
    let square = lat.product(lat);
    let col = lat
        .basis
        .iter()
        .find(|c| !square.contains(c))
        .expect("P differs from P^2");
    prime.field().from_int_coeffs(col)
}

/// A fractional ideal as a finite product of primes with nonzero exponents.
#[derive(Clone)]
pub struct FactoredIdeal {
    field: Arc<CycloField>,
    factors: BTreeMap<PrimeIdeal, i64>,
}

impl PartialEq for FactoredIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.field.m() == other.field.m() && self.factors == other.factors
    }
}

impl Eq for FactoredIdeal {}

impl fmt::Debug for FactoredIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for FactoredIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "(1)");
        }
        for (i, (q, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            write!(f, "{q}")?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl FactoredIdeal {
    pub fn unit(field: &Arc<CycloField>) -> Self {
        FactoredIdeal {
            field: Arc::clone(field),
            factors: BTreeMap::new(),
        }
    }

    pub fn from_prime(prime: &PrimeIdeal, e: i64) -> Self {
        let mut out = FactoredIdeal::unit(prime.field());
        out.add_exponent(prime, e);
        out
    }

    fn add_exponent(&mut self, prime: &PrimeIdeal, e: i64) {
        assert_eq!(prime.field().m(), self.field.m(), "prime from another field");
        let slot = self.factors.entry(prime.clone()).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.factors.remove(prime);
        }
    }

    /// The principal ideal `(x)`. Fails with `RamifiedPrime` when `x` has
    /// nonzero valuation at some prime dividing `m`.
    pub fn principal(x: &CycloElement, seed: u64) -> Result<Self> {
        if x.is_zero() {
            return Err(Error::ZeroElement);
        }
        let field = x.field();
        let (y, d) = x.split_denominator();
        let norm = field.norm_int(&y).abs().to_biguint().expect("absolute value");
        let mut rational_primes: Vec<u64> = factor_biguint(&norm)?.into_iter().map(|(p, _)| p).collect();
        let d = d.to_biguint().expect("positive denominator");
        rational_primes.extend(factor_biguint(&d)?.into_iter().map(|(p, _)| p));
        rational_primes.sort_unstable();
        rational_primes.dedup();
        let mut out = FactoredIdeal::unit(field);
        for p in rational_primes {
            if field.m().is_multiple_of(p) {
                return Err(Error::RamifiedPrime { p, m: field.m() });
            }
            for q in split_prime(field, p, seed)? {
                let v = valuation(x, &q)?;
                out.add_exponent(&q, v);
            }
        }
        Ok(out)
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn factors(&self) -> &BTreeMap<PrimeIdeal, i64> {
        &self.factors
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent(&self, prime: &PrimeIdeal) -> i64 {
        self.factors.get(prime).copied().unwrap_or(0)
    }

    pub fn support(&self) -> Vec<PrimeIdeal> {
        self.factors.keys().cloned().collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (q, e) in &other.factors {
            out.add_exponent(q, *e);
        }
        out
    }

    pub fn pow(&self, k: i64) -> Self {
        let mut out = FactoredIdeal::unit(&self.field);
        if k != 0 {
            out.factors = self.factors.iter().map(|(q, e)| (q.clone(), e * k)).collect();
        }
        out
    }

    pub fn inverse(&self) -> Self {
        self.pow(-1)
    }

    pub fn norm(&self) -> BigRational {
        self.factors.iter().fold(BigRational::one(), |acc, (q, e)| {
            let n = BigRational::from_integer(BigInt::from(q.norm()));
            if *e >= 0 {
                acc * num_traits::pow(n, *e as usize)
            } else {
                acc / num_traits::pow(n, (-*e) as usize)
            }
        })
    }

    pub fn is_integral(&self) -> bool {
        self.factors.values().all(|&e| e >= 0)
    }

    /// `(A_+, A_-)` with `A = A_+ / A_-`, both integral and coprime.
    pub fn split_signs(&self) -> (Self, Self) {
        let mut pos = FactoredIdeal::unit(&self.field);
        let mut neg = FactoredIdeal::unit(&self.field);
        for (q, &e) in &self.factors {
            if e > 0 {
                pos.add_exponent(q, e);
            } else {
                neg.add_exponent(q, -e);
            }
        }
        (pos, neg)
    }

    /// Whether `(x)` agrees with this ideal at every prime of its support
    /// and at every prime of `(x)`, checked through valuations and norms.
    pub fn is_generated_by(&self, x: &CycloElement) -> Result<bool> {
        if x.is_zero() {
            return Err(Error::ZeroElement);
        }
        for (q, e) in &self.factors {
            if valuation(x, q)? != *e {
                return Ok(false);
            }
        }
        Ok(x.norm().abs() == self.norm())
    }
}

/// HNF lattice of an integral ideal.
pub fn ideal_lattice(a: &FactoredIdeal) -> Result<IdealLattice> {
    if !a.is_integral() {
        return Err(Error::NegativeExponent);
    }
    let mut acc = IdealLattice::unit(a.field());
    for (q, &e) in a.factors() {
        for _ in 0..e {
            acc = acc.product(q.lattice());
        }
    }
    Ok(acc)
}

/// Tuning for [`find_generator_with`].
#[derive(Clone, Debug)]
pub struct GeneratorSearch {
    /// Multiple of the arithmetic-geometric floor used as the final squared radius.
    pub bound_factor: BigRational,
    /// Optional cap on Fincke-Pohst tree nodes per shell.
    pub max_nodes: Option<u64>,
}

impl Default for GeneratorSearch {
    fn default() -> Self {
        GeneratorSearch {
            bound_factor: BigRational::from_integer(4.into()),
            max_nodes: None,
        }
    }
}

/// A generator found by [`find_generator_with`] with search statistics.
#[derive(Clone, Debug)]
pub struct GeneratorWitness {
    pub element: CycloElement,
    /// Value of the trace form `Tr(alpha * conj(alpha))`.
    pub trace_norm: BigInt,
    /// Coordinates in the HNF basis of the ideal lattice.
    pub coords: Vec<BigInt>,
    pub radius: BigInt,
    pub nodes: u64,
}

pub fn find_generator(a: &FactoredIdeal, bound_factor: &BigRational) -> Result<CycloElement> {
    let opts = GeneratorSearch {
        bound_factor: bound_factor.clone(),
        max_nodes: None,
    };
    find_generator_with(a, &opts).map(|w| w.element)
}

/// Smallest `R` with `R^k >= c`, for rational `c > 0`.
fn ceil_root(c: &BigRational, k: u32) -> BigInt {
    let c = c.ceil().to_integer();
    let r = c.nth_root(k);
    if num_traits::pow(r.clone(), k as usize) < c {
        r + 1
    } else {
        r
    }
}

/// Largest `R` with `R^k <= c`.
fn floor_root(c: &BigRational, k: u32) -> BigInt {
    c.floor().to_integer().nth_root(k)
}

struct LogNorm {
    // (cos, sin) of 2 pi k j / m for each embedding k and coordinate j
    table: Vec<Vec<(f64, f64)>>,
}

impl LogNorm {
    fn new(field: &CycloField) -> Self {
        let m = field.m();
        let n = field.degree();
        let table = (1..=m)
            .filter(|&k| gcd_u64(k, m) == 1)
            .map(|k| {
                (0..n)
                    .map(|j| {
                        let a = 2.0 * std::f64::consts::PI * ((k * j as u64) % m) as f64 / m as f64;
                        (a.cos(), a.sin())
                    })
                    .collect()
            })
            .collect();
        LogNorm { table }
    }

    fn eval(&self, a: &[BigInt]) -> f64 {
        let af: Vec<f64> = a.iter().map(|c| c.to_f64().unwrap_or(f64::INFINITY)).collect();
        self.table
            .iter()
            .map(|row| {
                let (re, im) = row
                    .iter()
                    .zip(&af)
                    .fold((0.0, 0.0), |(re, im), ((c, s), x)| (re + c * x, im + s * x));
                0.5 * (re * re + im * im).ln()
            })
            .sum()
    }
}

/// Searches `A` for `alpha` with `|N(alpha)| = N(A)` by enumerating lattice
/// vectors under the trace form in doubling shells, from the
/// arithmetic-geometric floor `phi * N(A)^{2/phi}` up to `bound_factor`
/// times it. Returns the candidate minimal in `(Tr(alpha conj(alpha)),
/// lattice coordinates)`.
pub fn find_generator_with(a: &FactoredIdeal, opts: &GeneratorSearch) -> Result<GeneratorWitness> {
    let lat = ideal_lattice(a)?;
    let field = a.field();
    let n = field.degree();
    let norm = lat.determinant();
    if norm.is_one() {
        return Ok(GeneratorWitness {
            element: field.one(),
            trace_norm: BigInt::from(n),
            coords: (0..n).map(|i| BigInt::from((i == 0) as u8)).collect(),
            radius: BigInt::from(n),
            nodes: 0,
        });
    }

    let t = field.trace_form();
    let th: Vec<Vec<BigInt>> = lat
        .basis
        .iter()
        .map(|h| {
            (0..n)
                .map(|r| t[r].iter().zip(h).fold(BigInt::zero(), |acc, (x, y)| acc + x * y))
                .collect()
        })
        .collect();
    let gram: Vec<Vec<BigInt>> = lat
        .basis
        .iter()
        .map(|hi| {
            th.iter()
                .map(|thj| hi.iter().zip(thj).fold(BigInt::zero(), |acc, (x, y)| acc + x * y))
                .collect()
        })
        .collect();

    let k = n as u32;
    let phi_pow = BigRational::from_integer(num_traits::pow(BigInt::from(n), n));
    let floor_c = &phi_pow * BigRational::from_integer(&norm * &norm);
    let r_min = ceil_root(&floor_c, k);
    let r_max = floor_root(&(num_traits::pow(opts.bound_factor.clone(), n) * &floor_c), k);

    // enumerate in an LLL-reduced basis; candidates are still ranked by
    // their HNF coordinates x = U^T y
    let red = lll::reduce(&gram);
    let fp = FinckePohst::new(&red.gram);
    let to_hnf = |y: &[i64]| -> Vec<BigInt> {
        let mut x = vec![BigInt::zero(); n];
        for (row, &c) in red.transform.iter().zip(y) {
            if c != 0 {
                for (xi, u) in x.iter_mut().zip(row) {
                    *xi += u * c;
                }
            }
        }
        if x.iter().rev().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative()) {
            x.iter_mut().for_each(|c| *c = -&*c);
        }
        x
    };
    let log_target = norm.to_f64().map_or(f64::INFINITY, f64::ln);
    let log_norm = LogNorm::new(field);
    let mut nodes = 0u64;
    let mut complete = true;
    let mut radius = r_min.clone().min(r_max.clone());
    loop {
        let mut best: Option<(BigInt, Vec<BigInt>, IntPoly)> = None;
        let bound = BigRational::from_integer(radius.clone());
        let stats = fp.enumerate(&bound, opts.max_nodes, |y, q| {
            let q = q.to_integer();
            if best.as_ref().is_some_and(|(bq, _, _)| &q > bq) {
                return;
            }
            let x = to_hnf(y);
            if let Some((bq, bx, _)) = &best {
                if (&q, &x) >= (bq, bx) {
                    return;
                }
            }
            let alpha = hnf::combine_columns(&lat.basis, &x);
            let est = log_norm.eval(&alpha);
            if est.is_finite() && log_target.is_finite() && (est - log_target).abs() > 1e-6 * (1.0 + log_target) {
                return;
            }
            if field.norm_int(&alpha).abs() == norm {
                best = Some((q, x, alpha));
            }
        });
        nodes += stats.nodes;
        complete &= stats.complete;
        if let Some((q, x, alpha)) = best {
            let element = field.from_int_coeffs(&alpha);
            if !lat.contains(&alpha) || field.norm_int(&alpha).abs() != norm {
                return Err(Error::InvalidInput("generator failed re-verification".into()));
            }
            return Ok(GeneratorWitness {
                element,
                trace_norm: q,
                coords: x,
                radius,
                nodes,
            });
        }
        if radius >= r_max || !stats.complete {
            return Err(Error::SearchExhausted {
                radius: radius.to_string(),
                norm: norm.to_string(),
                nodes,
                complete,
            });
        }
        radius = (&radius * BigInt::from(2)).min(r_max.clone());
    }
}

/// Class numbers of `Q(zeta_m)` for `m <= 60`.
pub fn class_number(m: u64) -> Option<u64> {
    let m = if m % 4 == 2 { m / 2 } else { m };
    let h = match m {
        1 | 3 | 4 | 5 | 7 | 8 | 9 | 11 | 12 | 13 | 15 | 16 | 17 | 19 | 20 | 21 | 24 | 25 | 27 | 28 | 32 | 33
        | 35 | 36 | 40 | 44 | 45 | 48 | 60 => 1,
        23 => 3,
        29 => 8,
        31 => 9,
        37 => 37,
        39 => 2,
        41 => 121,
        43 => 211,
        47 => 695,
        49 => 43,
        51 => 5,
        52 => 3,
        53 => 4889,
        55 => 10,
        56 => 2,
        57 => 9,
        59 => 41421,
        _ => return None,
    };
    Some(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{euler_phi, is_prime};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn prime(m: u64, p: u64, g: &[i64]) -> PrimeIdeal {
        PrimeIdeal::from_parts(&CycloField::new(m), p, g, 0).unwrap()
    }

    fn elt(m: u64, c: &[i64]) -> CycloElement {
        CycloField::new(m).from_i64_coeffs(c)
    }

    fn random_integral(field: &Arc<CycloField>, rng: &mut ChaCha8Rng, size: i64) -> CycloElement {
        loop {
            let c: Vec<i64> = (0..field.degree()).map(|_| rng.gen_range(-size..=size)).collect();
            let x = field.from_i64_coeffs(&c);
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// Unramified primes below `bound` for the field.
    fn good_primes(m: u64, bound: u64) -> Vec<u64> {
        (2..bound).filter(|&p| is_prime(p) && !m.is_multiple_of(p)).collect()
    }

    #[test]
    fn splitting_in_gaussian_integers() {
        let f = CycloField::new(4);
        let five = split_prime(&f, 5, 1).unwrap();
        let gs: Vec<&FpPoly> = five.iter().map(|q| q.g()).collect();
        assert_eq!(gs, vec![&vec![2, 1], &vec![3, 1]]);
        assert!(five.iter().all(|q| q.residue_degree() == 1));
        assert_eq!(five[1].label(), 1);

        let three = split_prime(&f, 3, 1).unwrap();
        assert_eq!(three.len(), 1);
        assert_eq!(three[0].g(), &vec![1, 0, 1]);
        assert_eq!(three[0].residue_degree(), 2);

        assert_eq!(split_prime(&f, 2, 1).unwrap_err(), Error::RamifiedPrime { p: 2, m: 4 });
        assert!(PrimeIdeal::from_parts(&f, 5, &[1, 1], 0).is_err());
    }

    #[test]
    fn lattice_examples() {
        let f = CycloField::new(4);
        let unit = ideal_lattice(&FactoredIdeal::unit(&f)).unwrap();
        assert_eq!(unit, IdealLattice::unit(&f));
        let p = prime(4, 5, &[3, 1]);
        let a = FactoredIdeal::from_prime(&p, 1);
        assert_eq!(ideal_lattice(&a).unwrap().determinant(), BigInt::from(5));
        assert_eq!(ideal_lattice(&a.pow(2)).unwrap().determinant(), BigInt::from(25));
        assert_eq!(ideal_lattice(&a.inverse()).unwrap_err(), Error::NegativeExponent);
    }

    #[test]
    fn valuations_over_five() {
        let x = elt(4, &[2, 1]);
        let p2 = prime(4, 5, &[2, 1]);
        let p3 = prime(4, 5, &[3, 1]);
        assert_eq!(valuation(&x, &p2).unwrap(), 1);
        assert_eq!(valuation(&x, &p3).unwrap(), 0);
        assert_eq!(valuation(&x.inv().unwrap(), &p2).unwrap(), -1);
        assert_eq!(valuation(&elt(4, &[1]), &p3).unwrap(), 0);
        assert_eq!(valuation(&elt(4, &[25]), &p3).unwrap(), 2);
        assert_eq!(valuation(&elt(4, &[0]), &p3).unwrap_err(), Error::ZeroElement);
        // (5, z + 3) = (2 - z)
        assert_eq!(valuation(&elt(4, &[2, -1]), &p3).unwrap(), 1);
        assert_eq!(valuation(&elt(4, &[3, -4]), &p3).unwrap(), 2);
    }

    #[test]
    fn anti_uniformizer_properties() {
        for (m, bound) in [(4u64, 60u64), (8, 60), (12, 60), (20, 45)] {
            let f = CycloField::new(m);
            for p in good_primes(m, bound) {
                let primes = split_prime(&f, p, 3).unwrap();
                for q in &primes {
                    let t = anti_uniformizer(q);
                    assert_eq!(valuation(&t, q).unwrap(), -1, "m={m} p={p} {q}");
                    for other in primes.iter().filter(|o| *o != q) {
                        assert_eq!(valuation(&t, other).unwrap(), 0);
                    }
                    let expected = BigInt::from(q.norm());
                    assert_eq!(t.norm().denom(), &expected);
                }
            }
        }
        let p3 = prime(4, 5, &[3, 1]);
        let t = anti_uniformizer(&p3);
        assert_eq!(valuation(&t, &prime(4, 5, &[2, 1])).unwrap(), 0);
        assert_eq!(t.norm().denom(), &BigInt::from(5));
    }

    #[test]
    fn uniformizers() {
        let inert = prime(4, 3, &[1, 0, 1]);
        assert_eq!(uniformizer(&inert), elt(4, &[3]));
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut count = 0;
        while count < 50 {
            let m = [4u64, 8, 12][rng.gen_range(0..3)];
            let p = rng.gen_range(2..400u64);
            if !is_prime(p) || m.is_multiple_of(p) {
                continue;
            }
            let f = CycloField::new(m);
            let primes = split_prime(&f, p, rng.gen()).unwrap();
            let q = &primes[rng.gen_range(0..primes.len())];
            assert_eq!(valuation(&uniformizer(q), q).unwrap(), 1, "m={m} {q}");
            count += 1;
        }
    }

    fn assert_associate(a: &CycloElement, b: &CycloElement) {
        let u = a.checked_div(b).unwrap();
        assert!(u.to_integral().is_some(), "{a} / {b} is not integral");
        assert_eq!(u.norm().abs(), BigRational::one());
    }

    #[test]
    fn generator_examples() {
        let f = CycloField::new(4);
        let four = BigRational::from_integer(4.into());
        let p3 = prime(4, 5, &[3, 1]);
        let g = find_generator(&FactoredIdeal::from_prime(&p3, 1), &four).unwrap();
        assert_eq!(g.norm().abs(), BigRational::from_integer(5.into()));
        assert!(p3.lattice().contains(&g.to_integral().unwrap()));
        assert_associate(&g, &elt(4, &[2, -1]));

        let three = split_prime(&f, 3, 0).unwrap().remove(0);
        let g = find_generator(&FactoredIdeal::from_prime(&three, 1), &four).unwrap();
        assert_associate(&g, &elt(4, &[3]));

        let p2 = prime(4, 5, &[2, 1]);
        let g = find_generator(&FactoredIdeal::from_prime(&p2, 2), &four).unwrap();
        assert_associate(&g, &elt(4, &[3, 4]));

        assert!(find_generator(&FactoredIdeal::unit(&f), &four).unwrap().is_one());
    }

    #[test]
    fn generator_search_is_deterministic_and_verified() {
        let f = CycloField::new(8);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let x = random_integral(&f, &mut rng, 3);
            let Ok(a) = FactoredIdeal::principal(&x, 0) else { continue };
            let w = find_generator_with(&a, &GeneratorSearch::default()).unwrap();
            assert!(a.is_generated_by(&w.element).unwrap());
            let again = find_generator_with(&a, &GeneratorSearch::default()).unwrap();
            assert_eq!(w.element, again.element);
            assert_eq!(w.trace_norm, w.element.checked_mul(&w.element.conjugate()).unwrap().trace().to_integer());
        }
    }

    #[test]
    fn node_budget_reports_incomplete_search() {
        let p = prime(8, 17, &[2, 1]);
        let a = FactoredIdeal::from_prime(&p, 3);
        let opts = GeneratorSearch {
            bound_factor: BigRational::one(),
            max_nodes: Some(1),
        };
        match find_generator_with(&a, &opts) {
            Err(Error::SearchExhausted { complete, .. }) => assert!(!complete),
            Ok(w) => assert!(a.is_generated_by(&w.element).unwrap()),
            Err(e) => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn splitting_closure() {
        for m in [4u64, 8, 12, 20] {
            let f = CycloField::new(m);
            for p in good_primes(m, 200) {
                let primes = split_prime(&f, p, p).unwrap();
                let total: usize = primes.iter().map(|q| q.residue_degree()).sum();
                assert_eq!(total as u64, euler_phi(m));
                let prod = primes
                    .iter()
                    .fold(IdealLattice::unit(&f), |acc, q| acc.product(q.lattice()));
                let n = f.degree();
                let gens: Vec<Column> = (0..n)
                    .map(|i| {
                        let mut c = vec![BigInt::zero(); n];
                        c[i] = BigInt::from(p);
                        c
                    })
                    .collect();
                assert_eq!(prod, IdealLattice::from_generators(&f, &gens, None), "m={m} p={p}");
            }
        }
    }

    #[test]
    fn norm_coherence() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for m in [4u64, 8, 12] {
            let f = CycloField::new(m);
            let pool: Vec<PrimeIdeal> = good_primes(m, 40)
                .into_iter()
                .flat_map(|p| split_prime(&f, p, 0).unwrap())
                .collect();
            for _ in 0..10 {
                let mut a = FactoredIdeal::unit(&f);
                for _ in 0..3 {
                    let q = &pool[rng.gen_range(0..pool.len())];
                    a = a.mul(&FactoredIdeal::from_prime(q, rng.gen_range(1..3)));
                }
                let det = ideal_lattice(&a).unwrap().determinant();
                assert_eq!(BigRational::from_integer(det), a.norm());
            }
        }
    }

    #[test]
    fn valuation_additivity() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let configs: Vec<(Arc<CycloField>, Vec<PrimeIdeal>)> = [4u64, 8, 12]
            .iter()
            .map(|&m| {
                let f = CycloField::new(m);
                let ps = good_primes(m, 30).into_iter().flat_map(|p| split_prime(&f, p, 0).unwrap()).collect();
                (f, ps)
            })
            .collect();
        for i in 0..500 {
            let (f, ps) = &configs[i % configs.len()];
            let q = &ps[rng.gen_range(0..ps.len())];
            let x = random_integral(f, &mut rng, 20);
            let y = random_integral(f, &mut rng, 20).checked_div(&random_integral(f, &mut rng, 5)).unwrap();
            let vx = valuation(&x, q).unwrap();
            let vy = valuation(&y, q).unwrap();
            assert_eq!(valuation(&x.checked_mul(&y).unwrap(), q).unwrap(), vx + vy);
        }
    }

    #[test]
    fn element_factorization_closure() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for m in [4u64, 8, 12, 20] {
            let f = CycloField::new(m);
            let mut done = 0;
            while done < 15 {
                let x = random_integral(&f, &mut rng, 6);
                let norm = x.norm().abs().to_integer();
                let Ok(fac) = factor_biguint(&norm.to_biguint().unwrap()) else { continue };
                if fac.iter().any(|(p, _)| m % p == 0) {
                    continue;
                }
                for (p, e) in fac {
                    let sum: i64 = split_prime(&f, p, 0)
                        .unwrap()
                        .iter()
                        .map(|q| valuation(&x, q).unwrap() * q.residue_degree() as i64)
                        .sum();
                    assert_eq!(sum, e as i64);
                }
                let a = FactoredIdeal::principal(&x, 9).unwrap();
                assert!(a.is_generated_by(&x).unwrap());
                assert_eq!(a.norm(), x.norm().abs());
                done += 1;
            }
        }
    }

    #[test]
    fn principal_rejects_ramified_support() {
        let x = elt(4, &[1, 1]);
        assert!(matches!(FactoredIdeal::principal(&x, 0), Err(Error::RamifiedPrime { p: 2, m: 4 })));
    }

    #[test]
    fn class_number_table() {
        assert_eq!(class_number(4), Some(1));
        assert_eq!(class_number(46), Some(3));
        assert_eq!(class_number(56), Some(2));
        assert_eq!(class_number(61), None);
    }
}
