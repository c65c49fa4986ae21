//! Constructors for the graph families with three normalized Laplacian
//! eigenvalues, their expected eigenvalue formulas, and the exact
//! verifiers for the design equation systems.

use num_traits::{One, Zero};

use crate::designs::{
    intersection_size, multiple_design, paley_graph, projective_plane, qs_parameters,
    steiner_system, verify_2design, Design, QSParameters, SteinerKind,
};
use crate::error::{Error, Result};
use crate::exact::{conjugate_pair, pair_sum_product, rat, rat_int, ExactEigen, Rational, Surd};
use crate::graph::Graph;

/// K_{a,b}; eigenvalues {0, 1 (n-2 times), 2}.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::BadParameter("both sides need at least one vertex".into()));
    }
    let n = a + b;
    if n > 64 {
        return Err(Error::TooManyVertices { n });
    }
    let mut edges = Vec::with_capacity(a * b);
    for u in 0..a {
        for v in a..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Apex vertex 0 joined to m disjoint cliques of size d; the non-trivial
/// eigenvalues are 1/d and 1 + 1/d.
pub fn cone_over_cliques(m: usize, d: usize) -> Result<Graph> {
    if m < 2 {
        return Err(Error::BadParameter("need at least two cliques".into()));
    }
    if d == 0 {
        return Err(Error::BadParameter("clique size must be positive".into()));
    }
    let n = 1 + m * d;
    if n > 64 {
        return Err(Error::TooManyVertices { n });
    }
    let mut edges = Vec::new();
    for c in 0..m {
        let base = 1 + c * d;
        for i in 0..d {
            edges.push((0, base + i));
            for j in (i + 1)..d {
                edges.push((base + i, base + j));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Expected non-trivial eigenvalue pair for the cone over cliques.
pub fn cone_expected(d: usize) -> (Rational, Rational) {
    (rat(1, d as i64), rat(1, 1) + rat(1, d as i64))
}

/// Apex vertex 0 joined to an isolated vertex (index 1) plus the
/// quadratic-residue graph on a prime q = 1 mod 4 (indices 2..q+2).
/// The non-trivial eigenvalues are (n - sqrt(n-2))/(n-1) and
/// (n + sqrt(n-2))/(n-1) with n = q+2, each of multiplicity (n-1)/2.
pub fn conference_cone(q: u64) -> Result<Graph> {
    let base = paley_graph(q)?;
    let n = base.n() + 2;
    if n > 64 {
        return Err(Error::TooManyVertices { n });
    }
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
    for u in 0..base.n() {
        for v in u + 1..base.n() {
            if base.has_edge(u, v) {
                edges.push((u + 2, v + 2));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Expected eigenvalue pair of the conference cone on n = q+2 vertices.
pub fn conference_cone_expected(q: u64) -> (ExactEigen, ExactEigen) {
    let n = rat_int(q as i64 + 2);
    let nm1 = &n - rat_int(1);
    let surd = Surd { add: &n / &nm1, rad: (&n - rat_int(2)) / (&nm1 * &nm1) };
    (
        ExactEigen::Surd { surd: surd.clone(), plus: false },
        ExactEigen::Surd { surd, plus: true },
    )
}

/// Point-line incidence graph of the projective plane of prime order q
/// with all line pairs made adjacent: points 0..v form a coclique,
/// lines v..2v a clique. Non-trivial eigenvalues v/k^2 and 1 + 1/k for
/// line size k = q+1.
pub fn plane_graph(q: u64) -> Result<Graph> {
    let design = projective_plane(q)?;
    qs_graph(&design, 1, QsMode::Empty)
}

/// Expected eigenvalue pair of the plane graph of prime order q.
pub fn plane_expected(q: u64) -> (ExactEigen, ExactEigen) {
    let k = q as i64 + 1;
    let v = k * k - k + 1;
    (
        ExactEigen::Rational(rat(v, k * k)),
        ExactEigen::Rational(rat(1, 1) + rat(1, k)),
    )
}

/// Which induced subgraph the point side forms in a design graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QsMode {
    /// Points form a coclique.
    Empty,
    /// Points form a clique.
    Complete,
}

/// The graph of a design with block intersection adjacency: points
/// first (empty or complete per mode), then blocks; a point is joined
/// to the blocks through it, and two blocks are joined when they
/// intersect in exactly y points.
///
/// Blocks of a quasi-symmetric design meet in one of two sizes; the
/// degenerate single-size case (a symmetric design, where the block
/// side turns into a clique for y equal to that size) is accepted too.
pub fn qs_graph(d: &Design, y: usize, mode: QsMode) -> Result<Graph> {
    verify_2design(d)?;
    let mut sizes = std::collections::BTreeSet::new();
    let blocks = d.blocks();
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            sizes.insert(intersection_size(&blocks[i], &blocks[j]));
        }
    }
    if sizes.len() > 2 {
        return Err(Error::NotQuasiSymmetric { found: sizes.len() });
    }
    if !sizes.contains(&y) {
        return Err(Error::BadIntersectionChoice { y });
    }
    let v = d.v();
    let n = v + blocks.len();
    if n > 64 {
        return Err(Error::TooManyVertices { n });
    }
    let mut edges = Vec::new();
    if mode == QsMode::Complete {
        for p in 0..v {
            for q in p + 1..v {
                edges.push((p, q));
            }
        }
    }
    for (j, block) in blocks.iter().enumerate() {
        for &p in block {
            edges.push((p, v + j));
        }
    }
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            if intersection_size(&blocks[i], &blocks[j]) == y {
                edges.push((v + i, v + j));
            }
        }
    }
    let g = Graph::from_edges(n, &edges)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(g)
}

/// Expected eigenvalue pair of the graph of a Steiner system with
/// replication r and block size k (empty mode, y = 1).
pub fn steiner_expected(r: usize, k: usize) -> (ExactEigen, ExactEigen) {
    let (r, k) = (r as i64, k as i64);
    (
        ExactEigen::Rational(rat(1, 1) - rat(1, k) + rat(1, r * k)),
        ExactEigen::Rational(rat(1, 1) + rat(1, r)),
    )
}

/// Expected eigenvalue pair of the graph of an m-fold projective plane
/// of line size k = q+1 (complete mode, y = k).
pub fn plane_multiple_expected(q: u64, m: usize) -> (ExactEigen, ExactEigen) {
    let k = q as i64 + 1;
    let v = k * k - k + 1;
    let m = m as i64;
    (
        ExactEigen::Rational(rat(v, k * k + k * (m - 1))),
        ExactEigen::Rational(rat(1, 1) + rat(1, k + m - 1)),
    )
}

/// One linear condition `lhs = t*tc + q*qc + s*sc + konst` over the
/// rationals, in the three spectral unknowns t, q = (theta1-1)(theta2-1),
/// s = theta1+theta2.
struct QsEquation {
    lhs: Rational,
    tc: Rational,
    qc: Rational,
    sc: Rational,
    konst: Rational,
}

/// The seven equations of the selected design system, plus the
/// denominator N that defines t = theta1*theta2 / N.
fn qs_system(p: &QSParameters, mode: QsMode) -> (Vec<QsEquation>, Rational) {
    let ri = |n: usize| rat_int(n as i64);
    let zero = Rational::zero;
    let (v, b, r, k, lambda) = (ri(p.v), ri(p.b), ri(p.r), ri(p.k), ri(p.lambda));
    let (x, y) = (ri(p.x), ri(p.y));
    let kb = ri(p.k) + ri(p.a);
    let (a, c, d) = (ri(p.a), ri(p.c), ri(p.d));
    // point-side degree: r alone, or clique edges plus r
    let k1 = match mode {
        QsMode::Empty => r.clone(),
        QsMode::Complete => &v - rat_int(1) + &r,
    };
    let n = &v * &k1 + &b * &kb;
    let pair_den = (&y - &x) * &kb;
    let meets = (&lambda * &k - &x * &r) / &pair_den;
    let meets_inc = ((&lambda - rat_int(1)) * (&k - rat_int(1))
        - (&x - rat_int(1)) * (&r - rat_int(1)))
        / &pair_den;
    // in complete mode every left-hand side gains the clique's
    // reciprocal-degree contribution
    let side = |w: Rational| match mode {
        QsMode::Empty => zero(),
        QsMode::Complete => w / &k1,
    };
    let eqs = vec![
        QsEquation {
            lhs: side(&v - rat_int(1)) + &r / &kb,
            tc: &k1 * &k1,
            qc: -&k1,
            sc: zero(),
            konst: zero(),
        },
        QsEquation {
            lhs: side(&v - rat_int(2)) + &lambda / &kb,
            tc: &k1 * &k1,
            qc: zero(),
            sc: match mode {
                QsMode::Empty => zero(),
                QsMode::Complete => -Rational::one(),
            },
            konst: match mode {
                QsMode::Empty => zero(),
                QsMode::Complete => rat_int(2),
            },
        },
        QsEquation {
            lhs: &k / &k1 + &a / &kb,
            tc: &kb * &kb,
            qc: -&kb,
            sc: zero(),
            konst: zero(),
        },
        QsEquation { lhs: &x / &k1 + &d / &kb, tc: &kb * &kb, qc: zero(), sc: zero(), konst: zero() },
        QsEquation {
            lhs: &y / &k1 + &c / &kb,
            tc: &kb * &kb,
            qc: zero(),
            sc: -Rational::one(),
            konst: rat_int(2),
        },
        QsEquation { lhs: side(k.clone()) + meets, tc: &k1 * &kb, qc: zero(), sc: zero(), konst: zero() },
        QsEquation {
            lhs: side(&k - rat_int(1)) + meets_inc,
            tc: &k1 * &kb,
            qc: zero(),
            sc: -Rational::one(),
            konst: rat_int(2),
        },
    ];
    (eqs, n)
}

/// Outcome of evaluating a seven-equation design system.
#[derive(Debug, Clone)]
pub struct QuasiSystemReport {
    pub holds: bool,
    /// lhs - rhs for each equation, in order.
    pub residuals: Vec<Rational>,
}

/// Evaluates all seven equations of the empty- or complete-mode system
/// for the given eigenvalue pair, exactly.
pub fn verify_prop_quasi1(
    params: &QSParameters,
    mode: QsMode,
    theta: &(ExactEigen, ExactEigen),
) -> Result<QuasiSystemReport> {
    let (s, p) = pair_sum_product(&theta.0, &theta.1).ok_or_else(|| {
        Error::BadParameter("eigenvalue pair must be rational or one conjugate surd pair".into())
    })?;
    let (eqs, n) = qs_system(params, mode);
    let t = &p / &n;
    let q = &p - &s + Rational::one();
    let residuals: Vec<Rational> = eqs
        .iter()
        .map(|e| &e.lhs - (&t * &e.tc + &q * &e.qc + &s * &e.sc + &e.konst))
        .collect();
    let holds = residuals.iter().all(|r| r.is_zero());
    Ok(QuasiSystemReport { holds, residuals })
}

/// Candidate spectral data forced by the first two equations of a
/// design system.
#[derive(Debug, Clone)]
pub struct QuasiCandidate {
    pub s: Rational,
    pub p: Rational,
    /// Present when s and p describe two distinct real values.
    pub theta: Option<(ExactEigen, ExactEigen)>,
}

/// Solves the first two equations of the selected system for
/// (p, s) = (theta1*theta2, theta1+theta2). The remaining five
/// equations then accept or reject the candidate.
pub fn solve_quasi_theta(params: &QSParameters, mode: QsMode) -> Option<QuasiCandidate> {
    let (eqs, n) = qs_system(params, mode);
    // substitute t = p/n and q = p - s + 1: each equation becomes
    // (tc/n + qc) p + (sc - qc) s = lhs - qc - konst
    let coeffs = |e: &QsEquation| {
        (&e.tc / &n + &e.qc, &e.sc - &e.qc, &e.lhs - &e.qc - &e.konst)
    };
    let (a1, b1, d1) = coeffs(&eqs[0]);
    let (a2, b2, d2) = coeffs(&eqs[1]);
    let det = &a1 * &b2 - &a2 * &b1;
    if det.is_zero() {
        return None;
    }
    let p = (&d1 * &b2 - &d2 * &b1) / &det;
    let s = (&a1 * &d2 - &a2 * &d1) / &det;
    let theta = conjugate_pair(&s, &p);
    Some(QuasiCandidate { s, p, theta })
}

/// With v = k^2-k+1, a = v-1, t = 1/(k+a)^2 and coverage 1, checks the
/// six incidence equations of the plane system for the eigenvalue
/// pair, plus the two closed forms they force:
/// theta1+theta2-2 = 1/k^2 and (theta1-1)(theta2-1) = 1/k^3 - 1/k^2.
pub fn verify_projective_equations(k: usize, theta: &(ExactEigen, ExactEigen)) -> bool {
    if k < 2 {
        return false;
    }
    let Some((s, p)) = pair_sum_product(&theta.0, &theta.1) else {
        return false;
    };
    let ki = k as i64;
    let k = rat_int(ki);
    let v = rat_int(ki * ki - ki + 1);
    let a = &v - rat_int(1);
    let ka = &k + &a;
    let t = Rational::one() / (&ka * &ka);
    let q = &p - &s + Rational::one();
    let lambda = Rational::one();
    let mu12 = k.clone();
    let lambda12 = &k - rat_int(1);
    let checks = [
        &k / &ka == &t * &k * &k - &q * &k,
        &lambda / &ka == &t * &k * &k,
        Rational::one() + &a / &ka == &t * &ka * &ka - &q * &ka,
        &mu12 / &ka == &t * &k * &ka,
        &lambda12 / &ka == &t * &k * &ka + rat_int(2) - &s,
        rat(1, ki) + (&v - rat_int(2)) / &ka == &t * &ka * &ka + rat_int(2) - &s,
        &s - rat_int(2) == rat(1, ki * ki),
        q == rat(1, ki * ki * ki) - rat(1, ki * ki),
    ];
    checks.into_iter().all(|ok| ok)
}

/// A family instance: enough data to construct the graph and state its
/// eigenvalues.
#[derive(Debug, Clone)]
pub enum FamilyKind {
    CompleteBipartite { a: usize, b: usize },
    ConeCliques { m: usize, d: usize },
    ConferenceCone { q: u64 },
    Plane { q: u64 },
    Steiner(SteinerKind),
    QsEmpty { design: Design, y: usize },
    QsComplete { design: Design, y: usize },
    PlaneMultiple { q: u64, m: usize },
}

#[derive(Debug, Clone)]
pub struct FamilyDescriptor {
    pub kind: FamilyKind,
}

/// Builds the graph of the family instance.
pub fn construct(f: &FamilyDescriptor) -> Result<Graph> {
    match &f.kind {
        FamilyKind::CompleteBipartite { a, b } => complete_bipartite(*a, *b),
        FamilyKind::ConeCliques { m, d } => cone_over_cliques(*m, *d),
        FamilyKind::ConferenceCone { q } => conference_cone(*q),
        FamilyKind::Plane { q } => plane_graph(*q),
        FamilyKind::Steiner(kind) => qs_graph(&steiner_system(*kind)?, 1, QsMode::Empty),
        FamilyKind::QsEmpty { design, y } => qs_graph(design, *y, QsMode::Empty),
        FamilyKind::QsComplete { design, y } => qs_graph(design, *y, QsMode::Complete),
        FamilyKind::PlaneMultiple { q, m } => {
            let plane = projective_plane(*q)?;
            let repeated = multiple_design(&plane, *m)?;
            qs_graph(&repeated, *q as usize + 1, QsMode::Complete)
        }
    }
}

/// The exact non-trivial eigenvalue pair the family formulas predict,
/// ascending.
pub fn expected_eigenvalues(f: &FamilyDescriptor) -> Result<(ExactEigen, ExactEigen)> {
    let theta = match &f.kind {
        FamilyKind::CompleteBipartite { .. } => {
            (ExactEigen::Rational(rat_int(1)), ExactEigen::Rational(rat_int(2)))
        }
        FamilyKind::ConeCliques { d, .. } => {
            let (lo, hi) = cone_expected(*d);
            (ExactEigen::Rational(lo), ExactEigen::Rational(hi))
        }
        FamilyKind::ConferenceCone { q } => conference_cone_expected(*q),
        FamilyKind::Plane { q } => plane_expected(*q),
        FamilyKind::Steiner(kind) => {
            let params = verify_2design(&steiner_system(*kind)?)?;
            steiner_expected(params.r, params.k)
        }
        FamilyKind::QsEmpty { design, y } => {
            let params = qs_parameters(design, *y)?;
            solve_quasi_theta(&params, QsMode::Empty)
                .and_then(|c| c.theta)
                .ok_or_else(|| Error::BadParameter("system has no real eigenvalue pair".into()))?
        }
        FamilyKind::QsComplete { design, y } => {
            let params = qs_parameters(design, *y)?;
            solve_quasi_theta(&params, QsMode::Complete)
                .and_then(|c| c.theta)
                .ok_or_else(|| Error::BadParameter("system has no real eigenvalue pair".into()))?
        }
        FamilyKind::PlaneMultiple { q, m } => plane_multiple_expected(*q, *m),
    };
    debug_assert_eq!(theta.0.exact_cmp(&theta.1), std::cmp::Ordering::Less);
    debug_assert!(theta.0.to_f64() > 0.0 && theta.1.to_f64() <= 2.0 + 1e-12);
    Ok(theta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::isomorphic;
    use crate::characterization::{check_three_eigenvalues, CharStatus};
    use crate::designs::{biplane_residual, TwoDesignParams};
    use crate::exact::eigen_structure_exact;
    use crate::graph::valency_partition;

    fn assert_family(f: FamilyDescriptor) -> Graph {
        let g = construct(&f).unwrap();
        let expected = expected_eigenvalues(&f).unwrap();
        let v = check_three_eigenvalues(&g).unwrap();
        assert_eq!(v.status, CharStatus::ThreeEigenvalues, "{:?}", f.kind);
        assert_eq!(v.theta.unwrap(), expected, "{:?}", f.kind);
        g
    }

    #[test]
    fn complete_bipartite_family() {
        for (a, b) in [(1, 3), (2, 3), (4, 4)] {
            assert_family(FamilyDescriptor { kind: FamilyKind::CompleteBipartite { a, b } });
        }
    }

    #[test]
    fn cone_family() {
        for (m, d) in [(2, 2), (3, 1), (2, 3), (3, 4)] {
            assert_family(FamilyDescriptor { kind: FamilyKind::ConeCliques { m, d } });
        }
    }

    #[test]
    fn conference_cone_family() {
        let g = assert_family(FamilyDescriptor { kind: FamilyKind::ConferenceCone { q: 5 } });
        assert_eq!(g.n(), 7);
        // multiplicities (n-1)/2 each
        let s = eigen_structure_exact(&g).unwrap();
        let mut mults: Vec<usize> = s.eigenvalues.iter().map(|&(_, m)| m).collect();
        mults.sort_unstable();
        assert_eq!(mults, vec![1, 3, 3]);

        let g13 = assert_family(FamilyDescriptor { kind: FamilyKind::ConferenceCone { q: 13 } });
        assert_eq!(g13.n(), 15);
        let s = eigen_structure_exact(&g13).unwrap();
        let mut mults: Vec<usize> = s.eigenvalues.iter().map(|&(_, m)| m).collect();
        mults.sort_unstable();
        assert_eq!(mults, vec![1, 7, 7]);

        assert!(matches!(conference_cone(9), Err(Error::NotPrime { q: 9 })));
    }

    #[test]
    fn conference_cone_surd_display() {
        let (lo, hi) = conference_cone_expected(5);
        assert_eq!(lo.to_string(), "(7-sqrt(5))/6");
        assert_eq!(hi.to_string(), "(7+sqrt(5))/6");
    }

    #[test]
    fn plane_family() {
        let g = assert_family(FamilyDescriptor { kind: FamilyKind::Plane { q: 2 } });
        assert_eq!(g.n(), 14);
        let v = check_three_eigenvalues(&g).unwrap();
        assert_eq!(v.t.unwrap(), rat(1, 81));
        assert_eq!(
            plane_expected(2),
            (ExactEigen::Rational(rat(7, 9)), ExactEigen::Rational(rat(4, 3)))
        );

        let g3 = assert_family(FamilyDescriptor { kind: FamilyKind::Plane { q: 3 } });
        assert_eq!(g3.n(), 26);
        let v3 = check_three_eigenvalues(&g3).unwrap();
        assert_eq!(v3.t.unwrap(), rat(1, 256));
        assert_eq!(
            plane_expected(3),
            (ExactEigen::Rational(rat(13, 16)), ExactEigen::Rational(rat(5, 4)))
        );
    }

    #[test]
    fn steiner_graphs() {
        let g = assert_family(FamilyDescriptor { kind: FamilyKind::Steiner(SteinerKind::Sts9) });
        assert_eq!(g.n(), 21);
        assert_eq!(
            steiner_expected(4, 3),
            (ExactEigen::Rational(rat(3, 4)), ExactEigen::Rational(rat(5, 4)))
        );
        // the symmetric Steiner system degenerates to the plane graph
        let fano_graph =
            assert_family(FamilyDescriptor { kind: FamilyKind::Steiner(SteinerKind::Sts7) });
        assert!(isomorphic(&fano_graph, &plane_graph(2).unwrap()));
    }

    #[test]
    fn residual_biplane_graph() {
        let design = biplane_residual();
        let g = assert_family(FamilyDescriptor { kind: FamilyKind::QsEmpty { design, y: 1 } });
        assert_eq!(g.n(), 25);
        let v = check_three_eigenvalues(&g).unwrap();
        assert_eq!(
            v.theta.unwrap(),
            (ExactEigen::Rational(rat(5, 6)), ExactEigen::Rational(rat(4, 3)))
        );
    }

    #[test]
    fn double_fano_complete_mode() {
        let g = assert_family(FamilyDescriptor { kind: FamilyKind::PlaneMultiple { q: 2, m: 2 } });
        assert_eq!(g.n(), 21);
        assert_eq!(
            plane_multiple_expected(2, 2),
            (ExactEigen::Rational(rat(7, 12)), ExactEigen::Rational(rat(5, 4)))
        );
    }

    #[test]
    fn double_fano_empty_mode_fails() {
        let fano = steiner_system(SteinerKind::Sts7).unwrap();
        let doubled = multiple_design(&fano, 2).unwrap();
        let params = qs_parameters(&doubled, 3).unwrap();
        let candidate = solve_quasi_theta(&params, QsMode::Empty).unwrap();
        let theta = candidate.theta.expect("candidate pair is real");
        let report = verify_prop_quasi1(&params, QsMode::Empty, &theta).unwrap();
        assert!(!report.holds);
        assert!(report.residuals.iter().any(|r| !r.is_zero()));
        // the complete-mode system accepts the true pair
        let good = verify_prop_quasi1(&params, QsMode::Complete, &plane_multiple_expected(2, 2))
            .unwrap();
        assert!(good.holds);
    }

    #[test]
    fn steiner_parameters_satisfy_empty_system() {
        for kind in [SteinerKind::Pairs(5), SteinerKind::Pairs(6), SteinerKind::Sts9] {
            let d = steiner_system(kind).unwrap();
            let params = qs_parameters(&d, 1).unwrap();
            let theta = steiner_expected(params.r, params.k);
            let report = verify_prop_quasi1(&params, QsMode::Empty, &theta).unwrap();
            assert!(report.holds, "{kind:?}: {:?}", report.residuals);
        }
    }

    #[test]
    fn quasi_symmetric_21_6_4_parameters() {
        let base = TwoDesignParams { v: 21, b: 56, r: 16, k: 6, lambda: 4 };
        let params = QSParameters::from_design_numbers(base, 2, 0).unwrap();
        assert_eq!((params.a, params.c, params.d), (10, 0, 2));
        let theta =
            (ExactEigen::Rational(rat(7, 8)), ExactEigen::Rational(rat(11, 8)));
        let report = verify_prop_quasi1(&params, QsMode::Empty, &theta).unwrap();
        assert!(report.holds, "{:?}", report.residuals);
        let candidate = solve_quasi_theta(&params, QsMode::Empty).unwrap();
        assert_eq!(candidate.theta.unwrap(), theta);
    }

    #[test]
    fn projective_equation_check() {
        let good3 = (ExactEigen::Rational(rat(7, 9)), ExactEigen::Rational(rat(4, 3)));
        assert!(verify_projective_equations(3, &good3));
        let good4 = (ExactEigen::Rational(rat(13, 16)), ExactEigen::Rational(rat(5, 4)));
        assert!(verify_projective_equations(4, &good4));
        let bad = (ExactEigen::Rational(rat(1, 1)), ExactEigen::Rational(rat(4, 3)));
        assert!(!verify_projective_equations(3, &bad));
    }

    #[test]
    fn pairs_graph_is_clipped_triangular_graph() {
        for v in [4usize, 5, 6] {
            let d = steiner_system(SteinerKind::Pairs(v)).unwrap();
            let g = qs_graph(&d, 1, QsMode::Empty).unwrap();
            // triangular graph on v+1 points minus the edges of the
            // maximal clique of pairs through the last point
            let big = steiner_system(SteinerKind::Pairs(v + 1)).unwrap();
            let blocks = big.blocks();
            let mut edges = Vec::new();
            for i in 0..blocks.len() {
                for j in i + 1..blocks.len() {
                    let both_at_last = blocks[i].contains(&v) && blocks[j].contains(&v);
                    if intersection_size(&blocks[i], &blocks[j]) == 1 && !both_at_last {
                        edges.push((i, j));
                    }
                }
            }
            let clipped = Graph::from_edges(blocks.len(), &edges).unwrap();
            assert!(isomorphic(&g, &clipped), "v = {v}");
        }
    }

    #[test]
    fn plane_graph_matches_dual_construction() {
        let plane = projective_plane(2).unwrap();
        let dual = plane.dual().unwrap();
        let direct = plane_graph(2).unwrap();
        let from_dual = qs_graph(&dual, 1, QsMode::Empty).unwrap();
        assert!(isomorphic(&direct, &from_dual));
    }

    #[test]
    fn constructed_graphs_have_equitable_valency_partition() {
        let instances = [
            construct(&FamilyDescriptor { kind: FamilyKind::Plane { q: 2 } }).unwrap(),
            construct(&FamilyDescriptor { kind: FamilyKind::Steiner(SteinerKind::Sts9) }).unwrap(),
            construct(&FamilyDescriptor { kind: FamilyKind::PlaneMultiple { q: 2, m: 2 } })
                .unwrap(),
            construct(&FamilyDescriptor { kind: FamilyKind::ConeCliques { m: 2, d: 2 } }).unwrap(),
        ];
        for g in &instances {
            assert!(valency_partition(g).equitable);
        }
    }

    #[test]
    fn qs_graph_rejects_bad_input() {
        let fano = steiner_system(SteinerKind::Sts7).unwrap();
        assert!(matches!(
            qs_graph(&fano, 2, QsMode::Empty),
            Err(Error::BadIntersectionChoice { y: 2 })
        ));
    }
}
