//! Exact rational matrices and characteristic polynomials.
//!
//! The characteristic polynomial is computed by an exact similarity
//! reduction to upper Hessenberg form (Gaussian elimination with row/
//! column pivot swaps, O(n^3) rational operations) followed by the
//! standard leading-principal-minor recurrence on the Hessenberg form.

use crate::error::Result;
use crate::exact::Rational;
use crate::graph::Graph;
use crate::poly::RationalPolynomial;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq)]
pub struct RationalMatrix {
    n: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(n: usize) -> Self {
        RationalMatrix { n, data: vec![Rational::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            *m.get_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.n + j]
    }

    #[inline]
    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        &mut self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.n + j] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.n {
            self.data.swap(a * self.n + j, b * self.n + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.n {
            self.data.swap(i * self.n + a, i * self.n + b);
        }
    }

    /// Trace of the matrix.
    pub fn trace(&self) -> Rational {
        (0..self.n).map(|i| self.get(i, i).clone()).sum()
    }
}

/// Random-walk transition matrix P = D^{-1} A. Requires every vertex to
/// have a neighbor. P is similar to the symmetric D^{-1/2} A D^{-1/2},
/// so its eigenvalues are real and equal 1 - lambda over the normalized
/// Laplacian eigenvalues lambda.
pub fn transition_matrix(g: &Graph) -> Result<RationalMatrix> {
    let n = g.n();
    let mut m = RationalMatrix::zeros(n);
    for u in 0..n {
        let d = g.degree(u);
        if d == 0 {
            return Err(crate::error::Error::IsolatedVertex { vertex: u });
        }
        let inv = Rational::new(1.into(), (d as u64).into());
        for v in g.neighbors(u) {
            m.set(u, v, inv.clone());
        }
    }
    Ok(m)
}

/// Characteristic polynomial det(xI - M), monic of degree n.
pub fn char_poly(m: &RationalMatrix) -> RationalPolynomial {
    let n = m.n();
    let mut h = m.clone();
    // Similarity reduction to upper Hessenberg form.
    for c in 0..n.saturating_sub(2) {
        let pivot = (c + 1..n).find(|&r| !h.get(r, c).is_zero());
        let Some(p) = pivot else { continue };
        if p != c + 1 {
            h.swap_rows(p, c + 1);
            h.swap_cols(p, c + 1);
        }
        for r in c + 2..n {
            if h.get(r, c).is_zero() {
                continue;
            }
            let f = h.get(r, c) / h.get(c + 1, c);
            // row r -= f * row (c+1)
            for j in 0..n {
                let t = &f * h.get(c + 1, j);
                *h.get_mut(r, j) -= t;
            }
            // col (c+1) += f * col r
            for i in 0..n {
                let t = &f * h.get(i, r);
                *h.get_mut(i, c + 1) += t;
            }
        }
    }
    // det(xI - H) for upper Hessenberg H via expansion along the last
    // column of each leading principal submatrix:
    //   p_k = (x - h[k-1][k-1]) p_{k-1}
    //         - sum_{i=1}^{k-1} h[i-1][k-1] (prod_{j=i}^{k-2} h[j+1][j]) p_{i-1}
    let mut p: Vec<RationalPolynomial> = Vec::with_capacity(n + 1);
    p.push(RationalPolynomial::one());
    for k in 1..=n {
        let x_minus = RationalPolynomial::x_minus(h.get(k - 1, k - 1));
        let mut acc = x_minus.mul(&p[k - 1]);
        let mut sub = Rational::one();
        // i runs downward so the subdiagonal product can grow incrementally.
        for i in (1..k).rev() {
            sub *= h.get(i, i - 1);
            if sub.is_zero() {
                break;
            }
            let c = h.get(i - 1, k - 1) * &sub;
            if !c.is_zero() {
                acc = acc.sub(&p[i - 1].scale(&c));
            }
        }
        p.push(acc);
    }
    p.pop().unwrap()
}
