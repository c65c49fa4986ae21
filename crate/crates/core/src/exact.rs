//! Exact arithmetic: arbitrary-precision rationals, quadratic surds,
//! and the exact eigenvalue structure of a graph.
//!
//! Eigenvalues are computed through the transition matrix P = D^{-1}A,
//! whose characteristic polynomial has rational coefficients; normalized
//! Laplacian eigenvalues are `lambda = 1 - x` for each root x of P.
//! Square-free (Yun) decomposition yields each distinct root's
//! multiplicity. Roots of linear and quadratic factors are represented
//! exactly (rationals, or conjugate surds for irreducible quadratics);
//! factors of degree three and higher that resist the budgeted rational
//! root search are reported symbolically.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{minimal_poly, square_free_decomposition, RationalPolynomial};
use crate::rmatrix::{char_poly, transition_matrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

pub type Rational = num_rational::BigRational;

/// Shorthand rational constructor.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Exact square root of a non-negative rational, when one exists.
pub fn exact_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let sn = r.numer().sqrt();
    let sd = r.denom().sqrt();
    (&sn * &sn == *r.numer() && &sd * &sd == *r.denom()).then(|| Rational::new(sn, sd))
}

/// The conjugate pair `add - sqrt(rad)` / `add + sqrt(rad)` with
/// `rad > 0` not a perfect square, so both values are irrational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Surd {
    pub add: Rational,
    pub rad: Rational,
}

impl Surd {
    pub fn new(add: Rational, rad: Rational) -> Self {
        debug_assert!(rad.is_positive() && exact_sqrt(&rad).is_none());
        Surd { add, rad }
    }

    pub fn value(&self, plus: bool) -> f64 {
        let root = to_f64(&self.rad).sqrt();
        to_f64(&self.add) + if plus { root } else { -root }
    }

    /// Normalized integer form `(a ± sqrt(d)) / m` with m > 0.
    pub fn integer_form(&self) -> (BigInt, BigInt, BigInt) {
        let m0 = self.add.denom().clone();
        let k = sqrt_multiple(self.rad.denom());
        let m = m0.lcm(&k);
        let a = (&self.add * Rational::from_integer(m.clone())).to_integer();
        let d = (&self.rad * Rational::from_integer(&m * &m)).to_integer();
        (a, d, m)
    }
}

impl std::fmt::Display for Surd {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (a, d, m) = self.integer_form();
        if m.is_one() {
            write!(f, "{a}±sqrt({d})")
        } else {
            write!(f, "({a}±sqrt({d}))/{m}")
        }
    }
}

/// Smallest practically-found k > 0 with n | k^2 (exactly the product of
/// p^ceil(e/2) over the factorization of n when the factoring budget
/// suffices; a valid multiple otherwise).
fn sqrt_multiple(n: &BigInt) -> BigInt {
    let (factors, rest) = factor_with_budget(&n.abs(), 1_000_000);
    if !rest.is_one() {
        return n.abs();
    }
    let mut k = BigInt::one();
    for (p, e) in factors {
        k *= p.pow(((e + 1) / 2) as u32);
    }
    k
}

/// Trial division up to `limit`; returns (prime factors, unfactored rest).
fn factor_with_budget(n: &BigInt, limit: u64) -> (Vec<(BigInt, usize)>, BigInt) {
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut p = BigInt::from(2u64);
    while &p * &p <= n && p <= BigInt::from(limit) {
        if (&n % &p).is_zero() {
            let mut e = 0;
            while (&n % &p).is_zero() {
                n /= &p;
                e += 1;
            }
            out.push((p.clone(), e));
        }
        p += if p == BigInt::from(2u64) { 1u32 } else { 2u32 };
    }
    if n > BigInt::one() && &p * &p > n {
        out.push((n.clone(), 1));
        n = BigInt::one();
    }
    (out, n)
}

/// An exactly represented eigenvalue.
#[derive(Debug, Clone, PartialEq)]
pub enum ExactEigen {
    Rational(Rational),
    /// One branch of a conjugate surd pair; `plus` selects add + sqrt(rad).
    Surd { surd: Surd, plus: bool },
}

impl ExactEigen {
    pub fn to_f64(&self) -> f64 {
        match self {
            ExactEigen::Rational(r) => to_f64(r),
            ExactEigen::Surd { surd, plus } => surd.value(*plus),
        }
    }

    pub fn exact_cmp(&self, other: &Self) -> Ordering {
        use ExactEigen::*;
        match (self, other) {
            (Rational(a), Rational(b)) => a.cmp(b),
            (Rational(q), Surd { surd, plus }) => {
                sign_sqrt_plus(&(q - &surd.add), &surd.rad, *plus).reverse()
            }
            (Surd { surd, plus }, Rational(q)) => sign_sqrt_plus(&(q - &surd.add), &surd.rad, *plus),
            (Surd { surd: s1, plus: p1 }, Surd { surd: s2, plus: p2 }) => {
                surd_cmp(s1, *p1, s2, *p2)
            }
        }
    }
}

/// Sum and product of an eigenvalue pair, when both are rational: two
/// rationals, or the two branches of one conjugate surd.
pub fn pair_sum_product(a: &ExactEigen, b: &ExactEigen) -> Option<(Rational, Rational)> {
    match (a, b) {
        (ExactEigen::Rational(x), ExactEigen::Rational(y)) => Some((x + y, x * y)),
        (ExactEigen::Surd { surd: s1, plus: p1 }, ExactEigen::Surd { surd: s2, plus: p2 })
            if s1 == s2 && p1 != p2 =>
        {
            Some((rat_int(2) * &s1.add, &s1.add * &s1.add - &s1.rad))
        }
        _ => None,
    }
}

/// The ascending pair with sum s and product p, when it consists of two
/// distinct real values: rational roots if the discriminant is a
/// square, one conjugate surd pair otherwise.
pub fn conjugate_pair(s: &Rational, p: &Rational) -> Option<(ExactEigen, ExactEigen)> {
    let disc = s * s - rat_int(4) * p;
    if !disc.is_positive() {
        return None;
    }
    let half_s = s / rat_int(2);
    Some(match exact_sqrt(&disc) {
        Some(root) => {
            let half = root / rat_int(2);
            (ExactEigen::Rational(&half_s - &half), ExactEigen::Rational(&half_s + &half))
        }
        None => {
            let surd = Surd { add: half_s, rad: &disc / rat_int(4) };
            (
                ExactEigen::Surd { surd: surd.clone(), plus: false },
                ExactEigen::Surd { surd, plus: true },
            )
        }
    })
}

impl std::fmt::Display for ExactEigen {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExactEigen::Rational(r) => write!(f, "{r}"),
            ExactEigen::Surd { surd, plus } => {
                let (a, d, m) = surd.integer_form();
                let sign = if *plus { '+' } else { '-' };
                if m.is_one() {
                    write!(f, "{a}{sign}sqrt({d})")
                } else {
                    write!(f, "({a}{sign}sqrt({d}))/{m}")
                }
            }
        }
    }
}

/// Sign of `eps*sqrt(rad) - d` with rad > 0 irrational, eps = +1/-1.
fn sign_sqrt_comb(eps: i8, rad: &Rational, d: &Rational) -> Ordering {
    if eps > 0 {
        if !d.is_positive() {
            return Ordering::Greater;
        }
        rad.cmp(&(d * d))
    } else {
        if !d.is_negative() {
            return Ordering::Less;
        }
        (d * d).cmp(rad)
    }
}

/// Sign of `(add ± sqrt(rad)) - q` expressed through t = q - add:
/// sign of `±sqrt(rad) - t`.
fn sign_sqrt_plus(t: &Rational, rad: &Rational, plus: bool) -> Ordering {
    sign_sqrt_comb(if plus { 1 } else { -1 }, rad, t)
}

/// Exact comparison of two surd branches.
fn surd_cmp(s1: &Surd, p1: bool, s2: &Surd, p2: bool) -> Ordering {
    if s1 == s2 {
        return p1.cmp(&p2);
    }
    // Sign of c + e1*sqrt(r1) - e2*sqrt(r2), c = add1 - add2.
    let c = &s1.add - &s2.add;
    match (p1, p2) {
        (true, false) => sign_sum(&c, &s1.rad, &s2.rad),
        (false, true) => sign_sum(&(-&c), &s2.rad, &s1.rad).reverse(),
        (true, true) => sign_diff(&c, &s1.rad, &s2.rad),
        (false, false) => sign_diff(&c, &s2.rad, &s1.rad),
    }
}

/// Sign of c + sqrt(r1) + sqrt(r2).
fn sign_sum(c: &Rational, r1: &Rational, r2: &Rational) -> Ordering {
    if !c.is_negative() {
        return Ordering::Greater;
    }
    // Compare sqrt(r1) + sqrt(r2) with |c|: square both sides.
    let t = c * c - r1 - r2;
    if t.is_negative() {
        return Ordering::Greater;
    }
    (rat_int(4) * r1 * r2).cmp(&(&t * &t))
}

/// Sign of c + sqrt(r1) - sqrt(r2).
fn sign_diff(c: &Rational, r1: &Rational, r2: &Rational) -> Ordering {
    // Sign of (sqrt(r1) + c) - sqrt(r2); first the sign of the left side.
    let lhs_sign = sign_sqrt_comb(1, r1, &(-c));
    if lhs_sign != Ordering::Greater {
        return Ordering::Less;
    }
    // Both sides positive: compare r1 + c^2 + 2c*sqrt(r1) with r2,
    // i.e. 2c*sqrt(r1) with w = r2 - r1 - c^2.
    let w = r2 - r1 - c * c;
    let lhs2 = rat_int(4) * c * c * r1;
    let w2 = &w * &w;
    if !c.is_negative() {
        if w.is_negative() {
            return Ordering::Greater;
        }
        lhs2.cmp(&w2)
    } else {
        if !w.is_negative() {
            return Ordering::Less;
        }
        w2.cmp(&lhs2)
    }
}

/// Rational roots of a polynomial via the rational root theorem on the
/// integer-cleared form. The boolean reports whether the candidate set
/// was provably exhaustive under the factoring budget.
pub fn rational_roots(f: &RationalPolynomial) -> (Vec<Rational>, bool) {
    let Some(deg) = f.degree() else { return (vec![], true) };
    if deg == 0 {
        return (vec![], true);
    }
    let mut roots = Vec::new();
    let mut f = f.clone();
    while f.coeff(0).is_zero() && f.degree().unwrap_or(0) > 0 {
        roots.push(Rational::zero());
        f = f.div_exact(&RationalPolynomial::monomial(Rational::one(), 1));
    }
    if f.degree().unwrap_or(0) == 0 {
        return (roots, true);
    }
    // Clear denominators.
    let mut den = BigInt::one();
    for c in f.coeffs() {
        den = den.lcm(c.denom());
    }
    let scaled: Vec<BigInt> =
        f.coeffs().iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
    let a0 = scaled.first().unwrap().abs();
    let lead = scaled.last().unwrap().abs();
    let (num_divs, complete_n) = bounded_divisors(&a0);
    let (den_divs, complete_d) = bounded_divisors(&lead);
    let mut complete = complete_n && complete_d;
    for p in &num_divs {
        for q in &den_divs {
            if p.gcd(q) != BigInt::one() {
                continue;
            }
            for sgn in [1i64, -1] {
                let cand = Rational::new(p * BigInt::from(sgn), q.clone());
                if f.eval(&cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    if num_divs.len().saturating_mul(den_divs.len()) > 200_000 {
        complete = false;
    }
    (roots, complete)
}

/// Divisors of |n|, exhaustive only when the factoring budget suffices.
fn bounded_divisors(n: &BigInt) -> (Vec<BigInt>, bool) {
    if n.is_zero() {
        return (vec![BigInt::one()], true);
    }
    let (factors, rest) = factor_with_budget(n, 1_000_000);
    let complete = rest.is_one();
    let mut divs = vec![BigInt::one()];
    for (p, e) in &factors {
        let prev = divs.clone();
        let mut pk = BigInt::one();
        for _ in 0..*e {
            pk *= p;
            divs.extend(prev.iter().map(|d| d * &pk));
            if divs.len() > 4096 {
                return (divs, false);
            }
        }
    }
    if !complete {
        let prev = divs.clone();
        divs.extend(prev.iter().map(|d| d * &rest));
    }
    (divs, complete)
}

/// Exact eigenvalue structure of the normalized Laplacian of a connected
/// graph, derived from the transition characteristic polynomial.
#[derive(Debug, Clone)]
pub struct EigenStructureExact {
    /// Factors of char_poly(P) in the transition variable, each with the
    /// multiplicity of its roots. Linear and quadratic entries are
    /// irreducible; anything of higher degree was left unresolved.
    pub factors: Vec<(RationalPolynomial, usize)>,
    /// Resolved normalized Laplacian eigenvalues, ascending.
    pub eigenvalues: Vec<(ExactEigen, usize)>,
    /// Unresolved factors, rewritten in the Laplacian variable; every
    /// root carries the given multiplicity.
    pub unresolved: Vec<(RationalPolynomial, usize)>,
}

impl EigenStructureExact {
    /// Number of distinct normalized Laplacian eigenvalues.
    pub fn distinct_count(&self) -> usize {
        self.eigenvalues.len()
            + self.unresolved.iter().map(|(f, _)| f.degree().unwrap_or(0)).sum::<usize>()
    }

    /// Total multiplicity, which must equal the number of vertices.
    pub fn total_multiplicity(&self) -> usize {
        self.eigenvalues.iter().map(|&(_, m)| m).sum::<usize>()
            + self.unresolved.iter().map(|(f, m)| f.degree().unwrap_or(0) * m).sum::<usize>()
    }

    pub fn multiplicity_of(&self, value: &ExactEigen) -> Option<usize> {
        self.eigenvalues
            .iter()
            .find(|(e, _)| e.exact_cmp(value) == Ordering::Equal)
            .map(|&(_, m)| m)
    }
}

pub fn eigen_structure_exact(g: &Graph) -> Result<EigenStructureExact> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let p = transition_matrix(g)?;
    let cp = char_poly(&p);
    let parts = square_free_decomposition(&cp);
    let mut factors = Vec::new();
    let mut eigenvalues: Vec<(ExactEigen, usize)> = Vec::new();
    let mut unresolved = Vec::new();
    for (part, mult) in parts {
        let mut rest = part;
        let (roots, _complete) = rational_roots(&rest);
        for r in roots {
            rest = rest.div_exact(&RationalPolynomial::x_minus(&r));
            factors.push((RationalPolynomial::x_minus(&r), mult));
            eigenvalues.push((ExactEigen::Rational(Rational::one() - r), mult));
        }
        match rest.degree().unwrap_or(0) {
            0 => {}
            2 => {
                // Monic x^2 + bx + c with no rational roots: conjugate surds.
                let b = rest.coeff(1);
                let c = rest.coeff(0);
                let disc4 = (&b * &b - rat_int(4) * &c) / rat_int(4);
                debug_assert!(exact_sqrt(&disc4).is_none());
                let surd = Surd::new(Rational::one() + b / rat_int(2), disc4);
                eigenvalues.push((ExactEigen::Surd { surd: surd.clone(), plus: false }, mult));
                eigenvalues.push((ExactEigen::Surd { surd, plus: true }, mult));
                factors.push((rest, mult));
            }
            _ => {
                factors.push((rest.clone(), mult));
                let in_lambda = rest.compose_one_minus_x().monic();
                unresolved.push((in_lambda, mult));
            }
        }
    }
    eigenvalues.sort_by(|(a, _), (b, _)| a.exact_cmp(b));
    let structure = EigenStructureExact { factors, eigenvalues, unresolved };
    debug_assert_eq!(structure.total_multiplicity(), g.n());
    // Connectivity makes the Laplacian eigenvalue 0 simple, so the factor
    // (x - 1) of the transition polynomial always appears with multiplicity 1.
    assert_eq!(
        structure.multiplicity_of(&ExactEigen::Rational(Rational::zero())),
        Some(1),
        "connected graph must have a simple zero eigenvalue"
    );
    Ok(structure)
}

/// Number of distinct normalized Laplacian eigenvalues, via the degree
/// of the exact minimal polynomial of the transition matrix.
pub fn distinct_count_exact(g: &Graph) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let p = transition_matrix(g)?;
    Ok(minimal_poly(&char_poly(&p)).degree().unwrap_or(0))
}
