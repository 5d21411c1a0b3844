//! Mod-`n` height pairing (linking number) of ideals whose `n`-th powers
//! are principal, together with probes of its well-definedness.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cyclotomic::{CycloElement, CycloField};
use crate::ideals::{find_generator_with, uniformizer, valuation, FactoredIdeal, GeneratorSearch, PrimeIdeal};
use crate::symbols::{is_unit_candidate, tame_hilbert, ModFraction};
use crate::{Error, Result};

/// Ideals `I`, `J` of `Q(zeta_m)` and a level `n` with `n^2 | m`.
#[derive(Clone, Debug)]
pub struct LinkingInstance {
    field: Arc<CycloField>,
    n: u64,
    i: FactoredIdeal,
    j: FactoredIdeal,
}

impl LinkingInstance {
    pub fn new(i: FactoredIdeal, j: FactoredIdeal, n: u64) -> Result<Self> {
        let field = Arc::clone(i.field());
        let m = field.m();
        if j.field().m() != m {
            return Err(Error::FieldMismatch(m, j.field().m()));
        }
        if !m.is_multiple_of(2) {
            return Err(Error::InvalidInput(format!("m = {m} must be even")));
        }
        if n == 0 || !m.is_multiple_of(n * n) {
            return Err(Error::InvalidInput(format!("n^2 = {} must divide m = {m}", n * n)));
        }
        Ok(LinkingInstance { field, n, i, j })
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn i(&self) -> &FactoredIdeal {
        &self.i
    }

    pub fn j(&self) -> &FactoredIdeal {
        &self.j
    }

    /// The same pair with the roles of `I` and `J` exchanged.
    pub fn swapped(&self) -> Self {
        LinkingInstance {
            field: Arc::clone(&self.field),
            n: self.n,
            i: self.j.clone(),
            j: self.i.clone(),
        }
    }

    pub fn with_j(&self, j: FactoredIdeal) -> Self {
        LinkingInstance {
            field: Arc::clone(&self.field),
            n: self.n,
            i: self.i.clone(),
            j,
        }
    }
}

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Certificate {
    fn new(name: &str, passed: bool, detail: String) -> Self {
        Certificate {
            name: name.to_string(),
            passed,
            detail,
        }
    }
}

#[derive(Clone, Debug)]
pub struct LinkingReport {
    pub value: ModFraction,
    pub f_used: CycloElement,
    pub certificates: Vec<Certificate>,
    /// Pairing value with `f` replaced by `u * f`, keyed by the printed unit.
    pub probes: BTreeMap<String, ModFraction>,
    /// Every value seen under random re-selection of the uniformizers.
    pub uniformizer_values: BTreeSet<ModFraction>,
}

/// Checks that `(f^{-1}) = I^n` by valuations on the support of `I` and
/// by comparing norms.
pub fn witnesses(i: &FactoredIdeal, n: u64, f: &CycloElement) -> Result<bool> {
    let target = i.pow(n as i64);
    target.is_generated_by(&f.inv()?)
}

/// Finds `f` with `(f^{-1}) = I^n` from a generator of `I^n` scaled into
/// an integral ideal. A failed search is reported as
/// `TrivialityUndetermined`, which says nothing about nontriviality.
pub fn certify_trivial(i: &FactoredIdeal, n: u64, opts: &GeneratorSearch) -> Result<CycloElement> {
    let field = i.field();
    if i.is_unit() {
        return Ok(field.one());
    }
    let (pos, neg) = i.pow(n as i64).split_signs();
    // c = N(A_-) lies in A_-, so (c) * I^n = A_+ * (c) / A_- is integral
    let c = neg.norm().to_integer();
    let scale = if c.is_one() {
        FactoredIdeal::unit(field)
    } else {
        FactoredIdeal::principal(&field.from_bigint(c.clone()), 0)?
    };
    let integral = pos.mul(&scale).mul(&neg.inverse());
    let g = match find_generator_with(&integral, opts) {
        Ok(w) => w.element,
        Err(Error::SearchExhausted {
            radius,
            norm,
            nodes,
            complete,
        }) => {
            return Err(Error::TrivialityUndetermined(format!(
                "no generator of norm {norm} within squared radius {radius} ({nodes} nodes, complete: {complete})"
            )))
        }
        Err(e) => return Err(e),
    };
    let f = field.from_bigint(c).checked_div(&g)?;
    if !witnesses(i, n, &f)? {
        return Err(Error::UncertifiedWitness(format!("{f} does not generate the inverse of I^{n}")));
    }
    Ok(f)
}

fn check_witness(inst: &LinkingInstance, f: &CycloElement) -> Result<()> {
    if f.is_zero() || !witnesses(&inst.i, inst.n, f)? {
        return Err(Error::UncertifiedWitness(format!(
            "({f})^-1 is not I^{} for I = {}",
            inst.n, inst.i
        )));
    }
    Ok(())
}

fn pairing_with<U>(inst: &LinkingInstance, f: &CycloElement, mut unif: U) -> Result<ModFraction>
where
    U: FnMut(&PrimeIdeal) -> CycloElement,
{
    let mut total = ModFraction::zero(inst.n);
    for (v, &e) in inst.j.factors() {
        let w = unif(v).pow(e)?;
        total = total + tame_hilbert(f, &w, v, inst.n)?;
    }
    Ok(total)
}

/// `ht(I, J) = sum_{v | J} (f, varpi_v^{e_v})_v` in `(1/n)Z/Z`.
pub fn height_pairing(inst: &LinkingInstance, f: &CycloElement) -> Result<ModFraction> {
    check_witness(inst, f)?;
    pairing_with(inst, f, uniformizer)
}

fn random_unit_at(prime: &PrimeIdeal, rng: &mut ChaCha8Rng) -> CycloElement {
    let field = prime.field();
    loop {
        let c: Vec<i64> = (0..field.degree()).map(|_| rng.gen_range(-7..=7)).collect();
        let x = field.from_i64_coeffs(&c);
        if !x.is_zero() && valuation(&x, prime).ok() == Some(0) {
            return x;
        }
    }
}

/// Recomputes the pairing under `f -> u f` for each candidate unit and
/// under `trials` random re-selections of every uniformizer.
pub fn probe_well_definedness(
    inst: &LinkingInstance,
    f: &CycloElement,
    unit_candidates: &[CycloElement],
    trials: usize,
    seed: u64,
) -> Result<LinkingReport> {
    let value = height_pairing(inst, f)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut uniformizer_values = BTreeSet::from([value]);
    for _ in 0..trials {
        let v = pairing_with(inst, f, |q| {
            let u = random_unit_at(q, &mut rng);
            uniformizer(q).checked_mul(&u).expect("same field")
        })?;
        uniformizer_values.insert(v);
    }

    let mut probes = BTreeMap::new();
    for u in unit_candidates {
        if !is_unit_candidate(u) {
            return Err(Error::InvalidInput(format!("{u} is not a unit")));
        }
        let uf = u.checked_mul(f)?;
        probes.insert(u.to_string(), pairing_with(inst, &uf, uniformizer)?);
    }
    let generator_values: BTreeSet<ModFraction> = probes.values().copied().collect();

    let mut certificates = vec![
        Certificate::new("witness", true, format!("(f^-1) = I^{}", inst.n)),
        Certificate::new(
            "uniformizer_independence",
            uniformizer_values.len() == 1,
            format!("{} draws, {} distinct values", trials, uniformizer_values.len()),
        ),
    ];
    if !probes.is_empty() {
        certificates.push(Certificate::new(
            "generator_independence",
            generator_values.iter().all(|v| *v == value),
            format!("{} unit multiples, values {:?}", probes.len(), fmt_set(&generator_values)),
        ));
    }
    Ok(LinkingReport {
        value,
        f_used: f.clone(),
        certificates,
        probes,
        uniformizer_values,
    })
}

fn fmt_set(s: &BTreeSet<ModFraction>) -> Vec<String> {
    s.iter().map(ModFraction::to_string).collect()
}

/// The roots of unity `zeta^j`, `0 <= j < m`, as unit candidates.
pub fn roots_of_unity(field: &Arc<CycloField>) -> Vec<CycloElement> {
    (0..field.m() as i64).map(|j| field.zeta_pow(j)).collect()
}

/// Result of checking one law over a sample.
#[derive(Clone, Debug)]
pub struct LawOutcome {
    pub name: &'static str,
    pub checked: usize,
    pub counterexamples: Vec<String>,
}

impl LawOutcome {
    fn new(name: &'static str) -> Self {
        LawOutcome {
            name,
            checked: 0,
            counterexamples: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.counterexamples.push(detail());
        }
    }
}

#[derive(Clone, Debug)]
pub struct LawReport {
    pub laws: Vec<LawOutcome>,
    /// Instances skipped because a witness could not be certified.
    pub uncertified: usize,
}

impl LawReport {
    pub fn law(&self, name: &str) -> Option<&LawOutcome> {
        self.laws.iter().find(|l| l.name == name)
    }
}

/// Checks symmetry, additivity in `J`, `n`-torsion and vanishing against
/// exact `n`-th powers over a sample of instances.
pub fn verify_pairing_laws(
    field: &Arc<CycloField>,
    n: u64,
    sample: &[LinkingInstance],
    opts: &GeneratorSearch,
) -> Result<LawReport> {
    let mut symmetry = LawOutcome::new("symmetry");
    let mut additivity = LawOutcome::new("additivity");
    let mut torsion = LawOutcome::new("torsion");
    let mut nullity = LawOutcome::new("principal_power_nullity");
    let mut uncertified = 0;
    let mut cache: BTreeMap<String, Option<CycloElement>> = BTreeMap::new();
    let mut witness = |a: &FactoredIdeal| -> Result<Option<CycloElement>> {
        let key = a.to_string();
        if let Some(f) = cache.get(&key) {
            return Ok(f.clone());
        }
        let f = match certify_trivial(a, n, opts) {
            Ok(f) => Some(f),
            Err(Error::TrivialityUndetermined(_)) => None,
            Err(e) => return Err(e),
        };
        cache.insert(key, f.clone());
        Ok(f)
    };

    for inst in sample {
        if inst.field().m() != field.m() || inst.n() != n {
            return Err(Error::InvalidInput("instance from another field or level".into()));
        }
        let (Some(fi), Some(fj)) = (witness(inst.i())?, witness(inst.j())?) else {
            uncertified += 1;
            continue;
        };
        let ij = height_pairing(inst, &fi)?;
        let ji = height_pairing(&inst.swapped(), &fj)?;
        symmetry.record(ij == ji, || format!("ht({}, {}) = {ij}, reversed {ji}", inst.i(), inst.j()));
        torsion.record((ij * n as i64).is_zero() && (ji * n as i64).is_zero(), || {
            format!("{ij} or {ji} is not {n}-torsion")
        });

        let squared = height_pairing(&inst.with_j(inst.j().pow(2)), &fi)?;
        additivity.record(squared == ij + ij, || format!("ht(I, J^2) = {squared} for {}", inst.j()));
        let mut parts = inst.j().factors().iter();
        if let (Some((q1, &e1)), Some(_)) = (parts.next(), parts.clone().next()) {
            let j1 = FactoredIdeal::from_prime(q1, e1);
            let j2 = inst.j().mul(&j1.inverse());
            let a = height_pairing(&inst.with_j(j1), &fi)?;
            let b = height_pairing(&inst.with_j(j2), &fi)?;
            additivity.record(ij == a + b, || format!("ht(I, J1 J2) = {ij}, parts {a} + {b}"));
        }

        if inst.i().is_integral() {
            if let Ok(w) = find_generator_with(inst.i(), opts) {
                let f = w.element.pow(-(n as i64))?;
                let disjoint = inst.j().support().iter().all(|q| inst.i().exponent(q) == 0);
                if disjoint {
                    let v = height_pairing(inst, &f)?;
                    nullity.record(v.is_zero(), || format!("ht({}, {}) = {v} with f = pi^-{n}", inst.i(), inst.j()));
                }
            }
        }
    }
    Ok(LawReport {
        laws: vec![symmetry, additivity, torsion, nullity],
        uncertified,
    })
}
