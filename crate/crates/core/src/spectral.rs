//! Floating-point normalized Laplacian spectra. Advisory only: every
//! verdict about eigenvalue counts is issued by the exact path, and the
//! float path exists to cross-check it and to serve quick numeric output.

use crate::error::{Error, Result};
use crate::exact::ExactEigen;
use crate::graph::Graph;

pub const DEFAULT_SWEEP_TOL: f64 = 1e-12;
pub const DEFAULT_CLUSTER_TOL: f64 = 1e-8;
const MAX_SWEEPS: usize = 100;
const SYMMETRY_LIMIT: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumSource {
    Float,
    Exact,
}

/// Distinct eigenvalues with multiplicities after clustering.
#[derive(Debug, Clone)]
pub struct SpectrumReport {
    /// All eigenvalues, ascending.
    pub eigenvalues: Vec<f64>,
    pub distinct: Vec<(f64, usize)>,
    pub source: SpectrumSource,
    pub cluster_tol: f64,
}

impl SpectrumReport {
    pub fn distinct_count(&self) -> usize {
        self.distinct.len()
    }
}

/// I - D^{-1/2} A D^{-1/2} as dense rows.
pub fn normalized_laplacian(g: &Graph) -> Result<Vec<Vec<f64>>> {
    for u in 0..g.n() {
        if g.degree(u) == 0 {
            return Err(Error::IsolatedVertex { vertex: u });
        }
    }
    Ok(laplacian_rows(g))
}

/// Same matrix, with all-zero rows for isolated vertices (their diagonal
/// entry is 0 because d_u = 0). Lets the basic-properties validator look
/// at graphs the public constructor rejects.
pub(crate) fn laplacian_rows(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.n();
    let mut rows = vec![vec![0.0; n]; n];
    for u in 0..n {
        if g.degree(u) == 0 {
            continue;
        }
        rows[u][u] = 1.0;
        for v in g.neighbors(u) {
            rows[u][v] = -1.0 / ((g.degree(u) as f64) * (g.degree(v) as f64)).sqrt();
        }
    }
    rows
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, run
/// until the off-diagonal Frobenius norm drops below sweep_tol.
pub fn symmetric_eigenvalues(rows: &[Vec<f64>], sweep_tol: f64) -> Result<Vec<f64>> {
    let n = rows.len();
    let mut max_asym = 0.0f64;
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NonSymmetric { max_asymmetry: f64::INFINITY });
        }
        for j in 0..i {
            max_asym = max_asym.max((row[j] - rows[j][i]).abs());
        }
    }
    if max_asym > SYMMETRY_LIMIT {
        return Err(Error::NonSymmetric { max_asymmetry: max_asym });
    }
    let mut a: Vec<f64> = rows.iter().flatten().copied().collect();
    let at = |a: &[f64], i: usize, j: usize| a[i * n + j];
    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                off += 2.0 * at(&a, i, j).powi(2);
            }
        }
        if off.sqrt() < sweep_tol {
            let mut eig: Vec<f64> = (0..n).map(|i| at(&a, i, i)).collect();
            eig.sort_by(f64::total_cmp);
            return Ok(eig);
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = at(&a, p, q);
                if apq == 0.0 {
                    continue;
                }
                let theta = (at(&a, q, q) - at(&a, p, p)) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = at(&a, k, p);
                    let akq = at(&a, k, q);
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = at(&a, p, k);
                    let aqk = at(&a, q, k);
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    Err(Error::NoConvergence { sweeps: MAX_SWEEPS })
}

fn cluster(eigenvalues: &[f64], cluster_tol: f64) -> Result<Vec<(f64, usize)>> {
    let mut groups: Vec<Vec<f64>> = Vec::new();
    for &v in eigenvalues {
        match groups.last_mut() {
            Some(grp) if v - *grp.last().unwrap() <= cluster_tol => grp.push(v),
            _ => groups.push(vec![v]),
        }
    }
    let distinct: Vec<(f64, usize)> =
        groups.iter().map(|grp| (grp.iter().sum::<f64>() / grp.len() as f64, grp.len())).collect();
    for w in distinct.windows(2) {
        let gap = w[1].0 - w[0].0;
        if gap < 10.0 * cluster_tol {
            return Err(Error::ClusterAmbiguity { gap, limit: 10.0 * cluster_tol });
        }
    }
    Ok(distinct)
}

/// Float spectrum of a connected graph, clustered into distinct values.
pub fn spectrum_report(g: &Graph, cluster_tol: f64) -> Result<SpectrumReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    spectrum_report_any(g, cluster_tol)
}

/// Clustered float spectrum without the connectivity precondition;
/// isolated vertices contribute eigenvalue 0. This is the input the
/// basic-property checklist expects.
pub fn spectrum_report_any(g: &Graph, cluster_tol: f64) -> Result<SpectrumReport> {
    let eigenvalues = symmetric_eigenvalues(&laplacian_rows(g), DEFAULT_SWEEP_TOL)?;
    for &v in &eigenvalues {
        if !(-cluster_tol..=2.0 + cluster_tol).contains(&v) {
            return Err(Error::Numerical(format!("eigenvalue {v} outside [0, 2]")));
        }
    }
    let distinct = cluster(&eigenvalues, cluster_tol)?;
    Ok(SpectrumReport { eigenvalues, distinct, source: SpectrumSource::Float, cluster_tol })
}

/// Spectrum report taken from the exact eigen structure; values are
/// rounded for display but multiplicities are exact.
pub fn spectrum_report_exact(g: &Graph) -> Result<SpectrumReport> {
    let s = crate::exact::eigen_structure_exact(g)?;
    if !s.unresolved.is_empty() {
        return Err(Error::Numerical(
            "eigenvalues of degree three or higher factors are not representable".into(),
        ));
    }
    let distinct: Vec<(f64, usize)> =
        s.eigenvalues.iter().map(|(e, m)| (e.to_f64(), *m)).collect();
    let mut eigenvalues = Vec::with_capacity(g.n());
    for &(v, m) in &distinct {
        eigenvalues.extend(std::iter::repeat_n(v, m));
    }
    Ok(SpectrumReport { eigenvalues, distinct, source: SpectrumSource::Exact, cluster_tol: 0.0 })
}

/// Exact distinct eigenvalues for reporting, when every factor resolves.
pub fn exact_distinct(g: &Graph) -> Result<Vec<(ExactEigen, usize)>> {
    let s = crate::exact::eigen_structure_exact(g)?;
    if !s.unresolved.is_empty() {
        return Err(Error::Numerical(
            "eigenvalues of degree three or higher factors are not representable".into(),
        ));
    }
    Ok(s.eigenvalues)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::testutil::{complete, cycle, petersen};

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-10
    }

    #[test]
    fn laplacian_entries() {
        let l = normalized_laplacian(&complete(2)).unwrap();
        assert_eq!(l, vec![vec![1.0, -1.0], vec![-1.0, 1.0]]);
        let star = crate::families::complete_bipartite(1, 2).unwrap();
        let l = normalized_laplacian(&star).unwrap();
        assert!(close(l[0][1], -1.0 / 2.0f64.sqrt()));
        assert!(close(l[0][0], 1.0));
    }

    #[test]
    fn trace_is_n() {
        for g in [complete(4), cycle(5), petersen()] {
            let l = normalized_laplacian(&g).unwrap();
            let tr: f64 = (0..g.n()).map(|i| l[i][i]).sum();
            assert!(close(tr, g.n() as f64));
        }
    }

    #[test]
    fn jacobi_identity_and_k2() {
        let id = vec![
            vec![1.0, 0.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0, 0.0],
            vec![0.0, 0.0, 1.0, 0.0],
            vec![0.0, 0.0, 0.0, 1.0],
        ];
        assert_eq!(symmetric_eigenvalues(&id, 1e-12).unwrap(), vec![1.0; 4]);
        let eig =
            symmetric_eigenvalues(&normalized_laplacian(&complete(2)).unwrap(), 1e-12).unwrap();
        assert!(close(eig[0], 0.0) && close(eig[1], 2.0));
    }

    #[test]
    fn jacobi_cycle5() {
        let eig = symmetric_eigenvalues(&normalized_laplacian(&cycle(5)).unwrap(), 1e-12).unwrap();
        let lo = (5.0 - 5.0f64.sqrt()) / 4.0;
        let hi = (5.0 + 5.0f64.sqrt()) / 4.0;
        let want = [0.0, lo, lo, hi, hi];
        for (a, b) in eig.iter().zip(want) {
            assert!(close(*a, b), "{eig:?}");
        }
    }

    #[test]
    fn jacobi_rejects_asymmetry() {
        let m = vec![vec![1.0, 0.5], vec![0.25, 1.0]];
        assert!(matches!(
            symmetric_eigenvalues(&m, 1e-12),
            Err(Error::NonSymmetric { .. })
        ));
    }

    #[test]
    fn report_complete_bipartite() {
        let g = crate::families::complete_bipartite(2, 3).unwrap();
        let r = spectrum_report(&g, DEFAULT_CLUSTER_TOL).unwrap();
        assert_eq!(r.distinct.len(), 3);
        let mults: Vec<usize> = r.distinct.iter().map(|&(_, m)| m).collect();
        assert_eq!(mults, vec![1, 3, 1]);
        assert!(close(r.distinct[0].0, 0.0));
        assert!(close(r.distinct[1].0, 1.0));
        assert!(close(r.distinct[2].0, 2.0));
    }

    #[test]
    fn report_rejects_disconnected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(spectrum_report(&g, 1e-8), Err(Error::Disconnected)));
    }

    #[test]
    fn oversized_tolerance_is_ambiguous() {
        // C6 eigenvalues {0, 1/2, 1, 3/2, 2}: gaps of 1/2 fall below the
        // 10x safety factor once cluster_tol reaches 0.06.
        assert!(matches!(
            spectrum_report(&cycle(6), 0.06),
            Err(Error::ClusterAmbiguity { .. })
        ));
    }

    #[test]
    fn exact_report_matches_float() {
        for g in [complete(4), cycle(5), petersen()] {
            let f = spectrum_report(&g, DEFAULT_CLUSTER_TOL).unwrap();
            let e = spectrum_report_exact(&g).unwrap();
            assert_eq!(f.distinct.len(), e.distinct.len());
            for (a, b) in f.distinct.iter().zip(e.distinct.iter()) {
                assert!(close(a.0, b.0));
                assert_eq!(a.1, b.1);
            }
        }
    }

    #[test]
    fn relabeling_invariance() {
        let g = petersen();
        let p: Vec<usize> = vec![5, 2, 7, 0, 9, 4, 1, 8, 3, 6];
        let a = symmetric_eigenvalues(&normalized_laplacian(&g).unwrap(), 1e-12).unwrap();
        let b = symmetric_eigenvalues(&normalized_laplacian(&g.relabel(&p)).unwrap(), 1e-12)
            .unwrap();
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).abs() < 1e-10);
        }
    }
}
