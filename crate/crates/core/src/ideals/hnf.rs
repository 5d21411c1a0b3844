//! Column-style Hermite normal form for full-rank integer lattices.
//!
//! A basis is stored as `n` columns; column `i` vanishes above row `i`,
//! has a positive pivot in row `i`, and every entry to the left of a pivot
//! lies in `[0, pivot)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::xgcd;

pub type Column = Vec<BigInt>;

struct Slot {
    col: Column,
    track: Vec<BigInt>,
}

fn combine(a: &[BigInt], x: &BigInt, b: &[BigInt], y: &BigInt) -> Vec<BigInt> {
    a.iter().zip(b).map(|(u, v)| x * u + y * v).collect()
}

struct Builder {
    n: usize,
    slots: Vec<Option<Slot>>,
    modulus: Option<BigInt>,
}

impl Builder {
    fn new(n: usize, modulus: Option<&BigInt>) -> Self {
        let mut slots: Vec<Option<Slot>> = (0..n).map(|_| None).collect();
        if let Some(d) = modulus {
            for (i, s) in slots.iter_mut().enumerate() {
                let mut col = vec![BigInt::zero(); n];
                col[i] = d.clone();
                *s = Some(Slot { col, track: Vec::new() });
            }
        }
        Builder {
            n,
            slots,
            modulus: modulus.cloned(),
        }
    }

    fn reduce_mod(&self, v: &mut Column) {
        if let Some(d) = &self.modulus {
            for c in v.iter_mut() {
                *c = c.mod_floor(d);
            }
        }
    }

    fn insert(&mut self, mut v: Column, mut track: Vec<BigInt>) {
        self.reduce_mod(&mut v);
        for i in 0..self.n {
            if v[i].is_zero() {
                continue;
            }
            match self.slots[i].take() {
                None => {
                    if v[i].is_negative() {
                        v.iter_mut().for_each(|c| *c = -&*c);
                        track.iter_mut().for_each(|c| *c = -&*c);
                    }
                    self.slots[i] = Some(Slot { col: v, track });
                    return;
                }
                Some(h) => {
                    let (g, s, t) = xgcd(&h.col[i], &v[i]);
                    let a = &h.col[i] / &g;
                    let b = &v[i] / &g;
                    let new_h = combine(&h.col, &s, &v, &t);
                    let new_ht = combine(&h.track, &s, &track, &t);
                    let mut new_v = combine(&h.col, &b, &v, &-&a);
                    let new_vt = combine(&h.track, &b, &track, &-&a);
                    debug_assert!(new_v[i].is_zero());
                    self.slots[i] = Some(Slot {
                        col: new_h,
                        track: new_ht,
                    });
                    self.reduce_mod(&mut new_v);
                    v = new_v;
                    track = new_vt;
                }
            }
        }
    }

    fn finish(self) -> Option<Vec<Slot>> {
        let mut cols: Vec<Slot> = self.slots.into_iter().collect::<Option<Vec<_>>>()?;
        let n = cols.len();
        for i in 0..n {
            for j in 0..i {
                let q = cols[j].col[i].div_floor(&cols[i].col[i]);
                if q.is_zero() {
                    continue;
                }
                let (left, right) = cols.split_at_mut(i);
                let (cj, ci) = (&mut left[j], &right[0]);
                for (x, y) in cj.col.iter_mut().zip(&ci.col) {
                    *x -= &q * y;
                }
                for (x, y) in cj.track.iter_mut().zip(&ci.track) {
                    *x -= &q * y;
                }
            }
        }
        Some(cols)
    }
}

/// HNF basis of the lattice spanned by `gens` in `Z^n`, or `None` when the
/// generators do not have full rank. When `modulus` is given the caller
/// asserts that `modulus * Z^n` lies in the lattice, which keeps entries small.
pub fn hnf(gens: &[Column], n: usize, modulus: Option<&BigInt>) -> Option<Vec<Column>> {
    let mut b = Builder::new(n, modulus);
    for g in gens {
        b.insert(g.clone(), Vec::new());
    }
    b.finish().map(|cols| cols.into_iter().map(|s| s.col).collect())
}

/// HNF together with, for each output column, its integer coefficients
/// in terms of the input generators.
pub fn hnf_tracked(gens: &[Column], n: usize) -> Option<(Vec<Column>, Vec<Vec<BigInt>>)> {
    let k = gens.len();
    let mut b = Builder::new(n, None);
    for (idx, g) in gens.iter().enumerate() {
        let mut t = vec![BigInt::zero(); k];
        t[idx] = BigInt::one();
        b.insert(g.clone(), t);
    }
    let cols = b.finish()?;
    Some(cols.into_iter().map(|s| (s.col, s.track)).unzip())
}

/// Coordinates of `v` in the HNF basis, if `v` lies in the lattice.
pub fn solve(basis: &[Column], v: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut rest = v.to_vec();
    let mut coords = Vec::with_capacity(basis.len());
    for (i, col) in basis.iter().enumerate() {
        let (q, r) = rest[i].div_rem(&col[i]);
        if !r.is_zero() {
            return None;
        }
        if !q.is_zero() {
            for (x, y) in rest.iter_mut().zip(col) {
                *x -= &q * y;
            }
        }
        coords.push(q);
    }
    Some(coords)
}

pub fn determinant(basis: &[Column]) -> BigInt {
    basis
        .iter()
        .enumerate()
        .fold(BigInt::one(), |acc, (i, c)| acc * &c[i])
}

/// `sum_i coords[i] * basis[i]`.
pub fn combine_columns(basis: &[Column], coords: &[BigInt]) -> Column {
    let n = basis.first().map_or(0, Vec::len);
    let mut out = vec![BigInt::zero(); n];
    for (c, col) in coords.iter().zip(basis) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(col) {
            *o += c * x;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn col(v: &[i64]) -> Column {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn gaussian_prime_over_five() {
        // (5, 3 + z) in Z[i]: generators 5, 5z, 3+z, -1+3z
        let gens = vec![col(&[5, 0]), col(&[0, 5]), col(&[3, 1]), col(&[-1, 3])];
        let h = hnf(&gens, 2, None).unwrap();
        assert_eq!(h, vec![col(&[1, 2]), col(&[0, 5])]);
        assert_eq!(determinant(&h), BigInt::from(5));
        assert_eq!(hnf(&gens, 2, Some(&BigInt::from(5))).unwrap(), h);
        assert!(solve(&h, &col(&[2, -1])).is_some());
        assert!(solve(&h, &col(&[2, 1])).is_none());
    }

    #[test]
    fn rank_deficient_is_none() {
        assert!(hnf(&[col(&[1, 2]), col(&[2, 4])], 2, None).is_none());
    }

    proptest! {
        #[test]
        fn hnf_spans_the_same_lattice(entries in proptest::collection::vec(-30i64..30, 12)) {
            let gens: Vec<Column> = entries.chunks(3).map(col).collect();
            if let Some((h, track)) = hnf_tracked(&gens, 3) {
                // each basis column is the tracked combination of the generators
                for (c, t) in h.iter().zip(&track) {
                    prop_assert_eq!(c, &combine_columns(&gens, t));
                }
                // each generator lies in the HNF lattice
                for g in &gens {
                    prop_assert!(solve(&h, g).is_some());
                }
                for (i, c) in h.iter().enumerate() {
                    prop_assert!(c[i].is_positive());
                    for (r, x) in c.iter().enumerate().take(i) {
                        prop_assert!(x.is_zero(), "entry above pivot at row {}", r);
                    }
                    for j in 0..i {
                        prop_assert!(!h[j][i].is_negative() && h[j][i] < c[i]);
                    }
                }
                prop_assert_eq!(hnf(&gens, 3, None).unwrap(), h);
            }
        }
    }
}
