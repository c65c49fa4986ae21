//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored ascending (index i holds the coefficient of
//! x^i) with no trailing zeros, so the zero polynomial is the empty
//! vector. All arithmetic is exact; divisions are field divisions.

use crate::exact::{rat, Rational};
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl std::fmt::Debug for RationalPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl std::fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        RationalPolynomial { coeffs: vec![Rational::one()] }
    }

    /// The monomial c * x^k.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        RationalPolynomial { coeffs }
    }

    /// x - c.
    pub fn x_minus(c: &Rational) -> Self {
        RationalPolynomial { coeffs: vec![-c.clone(), Rational::one()] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Self::new(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Self::new(coeffs)
    }

    pub fn neg(&self) -> Self {
        RationalPolynomial { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division; panics on division by the zero polynomial.
    pub fn divmod(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dlead = divisor.leading().unwrap().clone();
        let ddeg = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return (Self::zero(), self.clone());
        }
        let mut quo = vec![Rational::zero(); rem.len() - ddeg];
        for k in (ddeg..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] / &dlead;
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let t = &q * dc;
                rem[k - ddeg + j] -= t;
            }
            quo[k - ddeg] = q;
        }
        (Self::new(quo), Self::new(rem))
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.divmod(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat(i as i64, 1))
            .collect();
        Self::new(coeffs)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    /// Substitutes x -> 1 - x, i.e. returns p(1 - x).
    pub fn compose_one_minus_x(&self) -> Self {
        let arg = RationalPolynomial::new(vec![Rational::one(), -Rational::one()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&arg).add(&Self::monomial(c.clone(), 0));
        }
        acc
    }
}

/// Radical of a polynomial: the product of its distinct irreducible
/// factors, each once. For the characteristic polynomial of a matrix
/// that is similar to a symmetric one (hence diagonalizable), this is
/// exactly the minimal polynomial.
pub fn minimal_poly(p: &RationalPolynomial) -> RationalPolynomial {
    let d = p.gcd(&p.derivative());
    p.div_exact(&d).monic()
}

/// Yun's square-free decomposition: returns pairwise-coprime square-free
/// factors with their multiplicities, so that the product of
/// factor^multiplicity recovers the monic part of the input.
pub fn square_free_decomposition(p: &RationalPolynomial) -> Vec<(RationalPolynomial, usize)> {
    let f = p.monic();
    if f.degree().unwrap_or(0) == 0 {
        return vec![];
    }
    let df = f.derivative();
    let g = f.gcd(&df);
    let mut a = f.div_exact(&g);
    let mut b = df.div_exact(&g);
    let mut out = Vec::new();
    let mut mult = 1usize;
    while a.degree().unwrap_or(0) > 0 {
        let c = b.sub(&a.derivative());
        let d = a.gcd(&c);
        if d.degree().unwrap_or(0) > 0 {
            out.push((d.clone(), mult));
        }
        a = a.div_exact(&d);
        b = c.div_exact(&d);
        mult += 1;
    }
    out
}
