//! Integral LLL reduction (`delta = 3/4`) of a lattice basis under an
//! integer positive definite Gram form, in exact arithmetic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Reduced basis `b_j = sum_i u[j][i] * e_i` where `e` is the input basis.
pub struct Reduced {
    /// Rows of the unimodular transform, one per reduced vector.
    pub transform: Vec<Vec<BigInt>>,
    /// Gram matrix of the reduced basis.
    pub gram: Vec<Vec<BigInt>>,
}

struct State {
    g: Vec<Vec<BigInt>>,
    h: Vec<Vec<BigInt>>,
    d: Vec<BigInt>,
    lambda: Vec<Vec<BigInt>>,
}

impl State {
    /// `b_k <- b_k - q b_l`, updating the Gram matrix and the transform.
    fn sub_multiple(&mut self, k: usize, l: usize, q: &BigInt) {
        let n = self.g.len();
        let gkl = self.g[k][l].clone();
        let gll = self.g[l][l].clone();
        for i in 0..n {
            if i != k {
                let t = q * &self.g[l][i];
                self.g[k][i] -= &t;
                self.g[i][k] = self.g[k][i].clone();
            }
        }
        self.g[k][k] += q * q * gll - BigInt::from(2) * q * gkl;
        for i in 0..n {
            let t = q * &self.h[l][i];
            self.h[k][i] -= t;
        }
    }

    fn swap(&mut self, a: usize, b: usize) {
        self.g.swap(a, b);
        for row in &mut self.g {
            row.swap(a, b);
        }
        self.h.swap(a, b);
    }

    // d is shifted by one: d[i + 1] is Cohen's d_i, d[0] = 1.
    fn red(&mut self, k: usize, l: usize) {
        let dl = self.d[l + 1].clone();
        let two_lambda = BigInt::from(2) * &self.lambda[k][l];
        if two_lambda.abs() <= dl {
            return;
        }
        // nearest integer to lambda / d_l
        let q = (&two_lambda + &dl).div_floor(&(BigInt::from(2) * &dl));
        self.sub_multiple(k, l, &q);
        self.lambda[k][l] -= &q * &dl;
        for i in 0..l {
            let t = &q * &self.lambda[l][i];
            self.lambda[k][i] -= t;
        }
    }

    fn swap_step(&mut self, k: usize, kmax: usize) {
        self.swap(k, k - 1);
        for j in 0..k - 1 {
            let t = self.lambda[k][j].clone();
            self.lambda[k][j] = std::mem::replace(&mut self.lambda[k - 1][j], t);
        }
        let lam = self.lambda[k][k - 1].clone();
        let (dk, dk1, dk2) = (self.d[k + 1].clone(), self.d[k].clone(), self.d[k - 1].clone());
        let b = (&dk2 * &dk + &lam * &lam) / &dk1;
        for i in k + 1..=kmax {
            let t = self.lambda[i][k].clone();
            self.lambda[i][k] = (&dk * &self.lambda[i][k - 1] - &lam * &t) / &dk1;
            self.lambda[i][k - 1] = (&b * &t + &lam * &self.lambda[i][k]) / &dk;
        }
        self.d[k] = b;
    }
}

/// LLL-reduces the lattice with Gram matrix `gram`.
pub fn reduce(gram: &[Vec<BigInt>]) -> Reduced {
    let n = gram.len();
    let identity = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let mut st = State {
        g: gram.to_vec(),
        h: identity,
        d: vec![BigInt::zero(); n + 1],
        lambda: vec![vec![BigInt::zero(); n]; n],
    };
    if n <= 1 {
        return Reduced {
            transform: st.h,
            gram: st.g,
        };
    }
    st.d[0] = BigInt::one();
    st.d[1] = st.g[0][0].clone();
    let (mut k, mut kmax) = (1usize, 0usize);
    loop {
        if k > kmax {
            kmax = k;
            for j in 0..=k {
                let mut u = st.g[k][j].clone();
                for i in 0..j {
                    u = (&st.d[i + 1] * u - &st.lambda[k][i] * &st.lambda[j][i]) / &st.d[i];
                }
                if j < k {
                    st.lambda[k][j] = u;
                } else {
                    assert!(u.is_positive(), "Gram matrix is not positive definite");
                    st.d[k + 1] = u;
                }
            }
        }
        loop {
            st.red(k, k - 1);
            let lhs = BigInt::from(4) * &st.d[k + 1] * &st.d[k - 1];
            let rhs = BigInt::from(3) * &st.d[k] * &st.d[k] - BigInt::from(4) * &st.lambda[k][k - 1] * &st.lambda[k][k - 1];
            if lhs < rhs {
                st.swap_step(k, kmax);
                k = (k - 1).max(1);
            } else {
                for l in (0..k - 1).rev() {
                    st.red(k, l);
                }
                k += 1;
                break;
            }
        }
        if k >= n {
            break;
        }
    }
    Reduced {
        transform: st.h,
        gram: st.g,
    }
}
