//! Checklist validator for the basic normalized Laplacian properties:
//! nine numbered facts about eigenvalue bounds, traces, component
//! counts, and bipartite symmetry. Disconnected graphs are allowed;
//! items whose hypotheses fail are marked not applicable.

use crate::graph::Graph;
use crate::spectral::SpectrumReport;

#[derive(Debug, Clone)]
pub struct LemmaItem {
    pub label: &'static str,
    pub applicable: bool,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct LemmaChecklist {
    pub items: Vec<LemmaItem>,
}

impl LemmaChecklist {
    pub fn violations(&self) -> usize {
        self.items.iter().filter(|i| i.applicable && !i.pass).count()
    }
}

fn item(label: &'static str, applicable: bool, pass: bool, detail: String) -> LemmaItem {
    LemmaItem { label, applicable, pass: pass || !applicable, detail }
}

/// Evaluates the nine basic properties against a float spectrum within
/// the report's cluster tolerance. The report must come from `g`
/// (the component-union item recomputes per-component spectra itself).
pub fn validate_basic_lemma(g: &Graph, r: &SpectrumReport) -> LemmaChecklist {
    let n = g.n();
    let nf = n as f64;
    let tol = r.cluster_tol.max(1e-9);
    let e = &r.eigenvalues;
    let has_isolated = (0..n).any(|u| g.degree(u) == 0);
    let complete = g.is_complete();
    let connected = g.is_connected();
    let components = g.components();
    let mut items = Vec::with_capacity(9);

    // (i) smallest eigenvalue is 0
    items.push(item("i", true, e[0].abs() <= tol, format!("smallest = {}", e[0])));

    // (ii) trace bound, equality iff no isolated vertices
    let sum: f64 = e.iter().sum();
    let pass_ii = if has_isolated { sum <= nf - 1.0 + nf * tol } else { (sum - nf).abs() <= nf * tol };
    items.push(item("ii", true, pass_ii, format!("sum = {sum}, n = {n}")));

    // (iii) second-smallest at most n/(n-1), equality iff complete
    let bound = nf / (nf - 1.0);
    let e1 = e.get(1).copied();
    let pass_iii = match e1 {
        Some(v) if complete => (v - bound).abs() <= tol,
        Some(v) => v < bound - tol,
        None => true,
    };
    items.push(item("iii", n >= 2, pass_iii, format!("second smallest = {e1:?}, bound = {bound}")));

    // (iv) second-smallest at most 1 for non-complete graphs
    let pass_iv = e1.map_or(true, |v| v <= 1.0 + tol);
    items.push(item("iv", n >= 2 && !complete, pass_iv, format!("second smallest = {e1:?}")));

    // (v) largest at least n/(n-1) without isolated vertices
    let top = e[n - 1];
    items.push(item(
        "v",
        n >= 2 && !has_isolated,
        top >= bound - tol,
        format!("largest = {top}, bound = {bound}"),
    ));

    // (vi) zero multiplicity equals component count; positive second
    // eigenvalue when connected
    let zeros = e.iter().filter(|v| v.abs() <= tol).count();
    let mut pass_vi = zeros == components.len();
    if connected {
        pass_vi = pass_vi && e1.map_or(true, |v| v > tol);
    }
    items.push(item(
        "vi",
        true,
        pass_vi,
        format!("zero multiplicity = {zeros}, components = {}", components.len()),
    ));

    // (vii) spectrum is the union of component spectra
    let mut union: Vec<f64> = Vec::with_capacity(n);
    let mut vii_ok = true;
    for mask in &components {
        let verts: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        let sub = g.induced(&verts);
        match crate::spectral::symmetric_eigenvalues(
            &crate::spectral::laplacian_rows(&sub),
            crate::spectral::DEFAULT_SWEEP_TOL,
        ) {
            Ok(vals) => union.extend(vals),
            Err(_) => vii_ok = false,
        }
    }
    union.sort_by(f64::total_cmp);
    vii_ok = vii_ok
        && union.len() == e.len()
        && union.iter().zip(e).all(|(a, b)| (a - b).abs() <= tol.max(1e-8));
    items.push(item("vii", true, vii_ok, format!("component union size = {}", union.len())));

    // (viii) eigenvalues at most 2; max equals 2 iff some component is
    // bipartite with an edge
    let bip_component = components.iter().any(|mask| {
        let verts: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        let sub = g.induced(&verts);
        sub.edge_count() > 0 && sub.is_bipartite()
    });
    let all_bounded = e.iter().all(|v| *v <= 2.0 + tol);
    let hits_two = (top - 2.0).abs() <= tol;
    items.push(item(
        "viii",
        true,
        all_bounded && hits_two == bip_component,
        format!("largest = {top}, bipartite component = {bip_component}"),
    ));

    // (ix) bipartite iff the distinct spectrum is symmetric about 1.
    // Needs every degree positive: isolated vertices keep 2 out of the
    // spectrum while leaving the graph trivially two-colorable.
    let distinct: Vec<f64> = r.distinct.iter().map(|&(v, _)| v).collect();
    let symmetric = distinct
        .iter()
        .all(|v| distinct.iter().any(|w| (2.0 - v - w).abs() <= tol.max(1e-8)));
    items.push(item(
        "ix",
        !has_isolated,
        g.is_bipartite() == symmetric,
        format!("bipartite = {}, symmetric spectrum = {symmetric}", g.is_bipartite()),
    ));

    LemmaChecklist { items }
}
