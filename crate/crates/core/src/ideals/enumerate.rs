//! Fincke-Pohst enumeration of short lattice vectors under an exact
//! rational positive definite quadratic form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

/// Exact Cholesky-style decomposition
/// `Q(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2`.
pub struct FinckePohst {
    n: usize,
    diag: Vec<BigRational>,
    upper: Vec<Vec<BigRational>>,
}

/// Statistics of one enumeration run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumStats {
    pub nodes: u64,
    pub complete: bool,
}

struct Walk<'a, F> {
    fp: &'a FinckePohst,
    bound: &'a BigRational,
    max_nodes: Option<u64>,
    nodes: u64,
    aborted: bool,
    x: Vec<i64>,
    visit: F,
}

impl FinckePohst {
    /// Decomposes a symmetric positive definite Gram matrix.
    pub fn new(gram: &[Vec<BigInt>]) -> Self {
        let n = gram.len();
        let mut q: Vec<Vec<BigRational>> = gram
            .iter()
            .map(|row| row.iter().map(|c| BigRational::from_integer(c.clone())).collect())
            .collect();
        for i in 0..n {
            assert!(q[i][i] > BigRational::zero(), "Gram matrix is not positive definite");
            for j in (i + 1)..n {
                q[j][i] = q[i][j].clone();
                q[i][j] = &q[i][j] / &q[i][i];
            }
            for k in (i + 1)..n {
                for l in k..n {
                    let t = &q[k][i] * &q[i][l];
                    q[k][l] -= t;
                }
            }
        }
        let diag = (0..n).map(|i| q[i][i].clone()).collect();
        let upper = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if j > i { q[i][j].clone() } else { BigRational::zero() })
                    .collect()
            })
            .collect();
        FinckePohst { n, diag, upper }
    }

    /// Calls `visit(x, Q(x))` for every nonzero integer vector with
    /// `Q(x) <= bound` whose last nonzero coordinate is positive (one
    /// representative of each `{x, -x}` pair). Stops early after
    /// `max_nodes` search-tree nodes.
    pub fn enumerate<F>(&self, bound: &BigRational, max_nodes: Option<u64>, visit: F) -> EnumStats
    where
        F: FnMut(&[i64], &BigRational),
    {
        if self.n == 0 {
            return EnumStats { nodes: 0, complete: true };
        }
        let mut walk = Walk {
            fp: self,
            bound,
            max_nodes,
            nodes: 0,
            aborted: false,
            x: vec![0; self.n],
            visit,
        };
        walk.descend(self.n - 1, bound.clone(), true);
        EnumStats {
            nodes: walk.nodes,
            complete: !walk.aborted,
        }
    }
}

fn fits(x: i64, center: &BigRational, s: &BigRational) -> bool {
    let d = BigRational::from_integer(x.into()) - center;
    &d * &d <= *s
}

/// Integer interval `{x : (x - center)^2 <= s}`, possibly empty.
fn integer_window(center: &BigRational, s: &BigRational) -> Option<(i64, i64)> {
    let c = center.to_f64().unwrap_or(0.0);
    let r = s.to_f64().unwrap_or(0.0).max(0.0).sqrt();
    let mut lo = (c - r).ceil() as i64;
    let mut hi = (c + r).floor() as i64;
    while fits(lo - 1, center, s) {
        lo -= 1;
    }
    while lo <= hi + 1 && !fits(lo, center, s) {
        lo += 1;
    }
    while fits(hi + 1, center, s) {
        hi += 1;
    }
    while hi >= lo && !fits(hi, center, s) {
        hi -= 1;
    }
    (lo <= hi).then_some((lo, hi))
}

impl<F> Walk<'_, F>
where
    F: FnMut(&[i64], &BigRational),
{
    fn descend(&mut self, i: usize, remaining: BigRational, higher_zero: bool) {
        let fp = self.fp;
        let mut shift = BigRational::zero();
        for j in (i + 1)..fp.n {
            if self.x[j] != 0 {
                shift += &fp.upper[i][j] * BigRational::from_integer(self.x[j].into());
            }
        }
        let center = -shift.clone();
        let s = &remaining / &fp.diag[i];
        let Some((mut lo, hi)) = integer_window(&center, &s) else {
            return;
        };
        if higher_zero {
            lo = lo.max(0);
        }
        for xi in lo..=hi {
            self.nodes += 1;
            if self.max_nodes.is_some_and(|cap| self.nodes > cap) {
                self.aborted = true;
                break;
            }
            let d = BigRational::from_integer(xi.into()) + &shift;
            let rest = &remaining - &fp.diag[i] * &d * &d;
            self.x[i] = xi;
            if i == 0 {
                if !(higher_zero && xi == 0) {
                    let q = self.bound - &rest;
                    (self.visit)(&self.x, &q);
                }
            } else {
                self.descend(i - 1, rest, higher_zero && xi == 0);
            }
            if self.aborted {
                break;
            }
        }
        self.x[i] = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn gram(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&c| BigInt::from(c)).collect()).collect()
    }

    fn quad(g: &[Vec<BigInt>], x: &[i64]) -> BigInt {
        let mut acc = BigInt::zero();
        for (i, row) in g.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                acc += c * x[i] * x[j];
            }
        }
        acc
    }

    #[test]
    fn matches_brute_force_listing() {
        let g = gram(&[&[4, 1, -1], &[1, 3, 0], &[-1, 0, 5]]);
        let bound = BigRational::from_integer(20.into());
        let fp = FinckePohst::new(&g);
        let mut found = BTreeSet::new();
        let stats = fp.enumerate(&bound, None, |x, q| {
            assert_eq!(q.to_integer(), quad(&g, x));
            found.insert(x.to_vec());
        });
        assert!(stats.complete);

        let mut brute = BTreeSet::new();
        for a in -6i64..=6 {
            for b in -6i64..=6 {
                for c in -6i64..=6 {
                    let x = [a, b, c];
                    let last = x.iter().rev().find(|&&v| v != 0);
                    if last.is_some_and(|&v| v > 0) && quad(&g, &x) <= BigInt::from(20) {
                        brute.insert(x.to_vec());
                    }
                }
            }
        }
        assert_eq!(found, brute);
    }

    #[test]
    fn node_cap_aborts() {
        let g = gram(&[&[1, 0], &[0, 1]]);
        let fp = FinckePohst::new(&g);
        let stats = fp.enumerate(&BigRational::from_integer(100.into()), Some(5), |_, _| {});
        assert!(!stats.complete);
    }
}
