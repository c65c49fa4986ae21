//! Incidence structures: 2-design verification, quasi-symmetric block
//! intersection analysis, and constructors for the concrete designs
//! whose graphs have three normalized Laplacian eigenvalues.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::exact::{rat_int, Rational};
use crate::graph::Graph;

/// Point set 0..v with a multiset of blocks. Blocks are kept sorted;
/// duplicate blocks are legal (multiples of a design).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Design {
    v: usize,
    blocks: Vec<Vec<usize>>,
}

impl Design {
    pub fn new(v: usize, blocks: Vec<Vec<usize>>) -> Result<Design> {
        if v == 0 {
            return Err(Error::BadParameter("design needs at least one point".into()));
        }
        let mut sorted = blocks;
        for (i, block) in sorted.iter_mut().enumerate() {
            if block.is_empty() {
                return Err(Error::EmptyBlock { block: i });
            }
            block.sort_unstable();
            for w in block.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::RepeatedPoint { block: i, point: w[0] });
                }
            }
            if *block.last().unwrap() >= v {
                return Err(Error::DesignPointRange { point: *block.last().unwrap(), v });
            }
        }
        Ok(Design { v, blocks: sorted })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn b(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Interchanges points and blocks: dual point j is original block j,
    /// dual block p collects the blocks through original point p.
    pub fn dual(&self) -> Result<Design> {
        let blocks = (0..self.v)
            .map(|p| {
                (0..self.blocks.len())
                    .filter(|&j| self.blocks[j].binary_search(&p).is_ok())
                    .collect()
            })
            .collect();
        Design::new(self.blocks.len(), blocks)
    }
}

/// Parameters of a 2-(v, k, lambda) design.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoDesignParams {
    pub v: usize,
    pub b: usize,
    pub r: usize,
    pub k: usize,
    pub lambda: usize,
}

impl std::fmt::Display for TwoDesignParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "2-({},{},{}) with b={}, r={}", self.v, self.k, self.lambda, self.b, self.r)
    }
}

/// Checks constant block size, constant replication, and constant pair
/// coverage; the counting identities bk = vr and lambda(v-1) = r(k-1)
/// then hold automatically and are asserted.
pub fn verify_2design(d: &Design) -> Result<TwoDesignParams> {
    if d.blocks.is_empty() {
        return Err(Error::NoBlocks);
    }
    if d.v < 2 {
        return Err(Error::NotTwoDesign("needs at least two points".into()));
    }
    let k = d.blocks[0].len();
    for (i, block) in d.blocks.iter().enumerate() {
        if block.len() != k {
            return Err(Error::NotTwoDesign(format!(
                "block 0 has size {k} but block {i} has size {}",
                block.len()
            )));
        }
    }
    let mut replication = vec![0usize; d.v];
    for block in &d.blocks {
        for &p in block {
            replication[p] += 1;
        }
    }
    let r = replication[0];
    if let Some(p) = (0..d.v).find(|&p| replication[p] != r) {
        return Err(Error::NotTwoDesign(format!(
            "point 0 lies in {r} blocks but point {p} lies in {}",
            replication[p]
        )));
    }
    let mut coverage = vec![0usize; d.v * d.v];
    for block in &d.blocks {
        for (i, &p) in block.iter().enumerate() {
            for &q in &block[i + 1..] {
                coverage[p * d.v + q] += 1;
            }
        }
    }
    let lambda = coverage[1];
    for p in 0..d.v {
        for q in p + 1..d.v {
            if coverage[p * d.v + q] != lambda {
                return Err(Error::NotTwoDesign(format!(
                    "pair (0,1) lies in {lambda} blocks but ({p},{q}) lies in {}",
                    coverage[p * d.v + q]
                )));
            }
        }
    }
    if lambda == 0 {
        return Err(Error::NotTwoDesign("no pair coverage".into()));
    }
    let params = TwoDesignParams { v: d.v, b: d.blocks.len(), r, k, lambda };
    debug_assert_eq!(params.b * params.k, params.v * params.r);
    debug_assert_eq!(params.lambda * (params.v - 1), params.r * (params.k - 1));
    Ok(params)
}

/// Quasi-symmetric design parameters together with the derived block
/// graph data: adjacency is intersection size y, the block graph is
/// strongly regular with parameters (b, a, c, d) and restricted
/// eigenvalues rho1, rho2.
#[derive(Debug, Clone, PartialEq)]
pub struct QSParameters {
    pub v: usize,
    pub b: usize,
    pub r: usize,
    pub k: usize,
    pub lambda: usize,
    pub x: usize,
    pub y: usize,
    pub a: usize,
    pub c: usize,
    pub d: usize,
    pub rho1: Rational,
    pub rho2: Rational,
}

fn integral_nonneg(what: &'static str, value: &Rational) -> Result<usize> {
    if !value.is_integer() || value < &rat_int(0) {
        return Err(Error::NonIntegral { what, value: value.to_string() });
    }
    Ok(value.to_integer().try_into().map_err(|_| Error::NonIntegral {
        what,
        value: value.to_string(),
    })?)
}

pub(crate) fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    let mut i = 0;
    let mut j = 0;
    let mut count = 0;
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Derives the block-graph parameters of a quasi-symmetric 2-design.
/// `y_choice` selects which of the two intersection sizes counts as
/// adjacency; both orientations are legal.
pub fn qs_parameters(d: &Design, y_choice: usize) -> Result<QSParameters> {
    let params = verify_2design(d)?;
    let mut sizes = BTreeSet::new();
    for i in 0..d.blocks.len() {
        for j in i + 1..d.blocks.len() {
            sizes.insert(intersection_size(&d.blocks[i], &d.blocks[j]));
        }
    }
    if sizes.len() != 2 {
        return Err(Error::NotQuasiSymmetric { found: sizes.len() });
    }
    if !sizes.contains(&y_choice) {
        return Err(Error::BadIntersectionChoice { y: y_choice });
    }
    let y = y_choice;
    let x = *sizes.iter().find(|&&s| s != y).unwrap();
    QSParameters::from_design_numbers(params, x, y)
}

impl QSParameters {
    /// Derives the block-graph data from raw quasi-symmetric numbers,
    /// checking integrality. Allows working with designs known only by
    /// their parameters.
    pub fn from_design_numbers(params: TwoDesignParams, x: usize, y: usize) -> Result<QSParameters> {
        let ri = |n: usize| rat_int(n as i64);
        let TwoDesignParams { v, b, r, k, lambda } = params;
        let den = ri(y) - ri(x);
        let a_exact = ((ri(r) - ri(1)) * ri(k) - ri(x) * (ri(b) - ri(1))) / &den;
        let rho1 = (ri(r) - ri(lambda) - ri(k) + ri(x)) / &den;
        let rho2 = (ri(x) - ri(k)) / &den;
        let d_exact = &a_exact + &rho1 * &rho2;
        let c_exact = &d_exact + &rho1 + &rho2;

        let a = integral_nonneg("block-graph degree a", &a_exact)?;
        if !rho1.is_integer() {
            return Err(Error::NonIntegral {
                what: "block-graph eigenvalue rho1",
                value: rho1.to_string(),
            });
        }
        if !rho2.is_integer() {
            return Err(Error::NonIntegral {
                what: "block-graph eigenvalue rho2",
                value: rho2.to_string(),
            });
        }
        let d_param = integral_nonneg("block-graph parameter d", &d_exact)?;
        let c = integral_nonneg("block-graph parameter c", &c_exact)?;
        Ok(QSParameters { v, b, r, k, lambda, x, y, a, c, d: d_param, rho1, rho2 })
    }
}

/// Counts of blocks through a point P that meet / avoid a block B not
/// containing P, per the standard quasi-symmetric identities.
pub fn point_block_counts(p: &QSParameters) -> Result<(usize, usize)> {
    let ri = |n: usize| rat_int(n as i64);
    let den = ri(p.y) - ri(p.x);
    let incident =
        ((ri(p.lambda) - ri(1)) * (ri(p.k) - ri(1)) - (ri(p.x) - ri(1)) * (ri(p.r) - ri(1))) / &den;
    let non_incident = (ri(p.lambda) * ri(p.k) - ri(p.x) * ri(p.r)) / &den;
    Ok((
        integral_nonneg("incident point-block count", &incident)?,
        integral_nonneg("non-incident point-block count", &non_incident)?,
    ))
}

/// Blocks as vertices, adjacent when they intersect in exactly y points.
pub fn block_graph(d: &Design, y: usize) -> Result<Graph> {
    let b = d.blocks.len();
    if b > 64 {
        return Err(Error::TooManyVertices { n: b });
    }
    let mut edges = Vec::new();
    for i in 0..b {
        for j in i + 1..b {
            if intersection_size(&d.blocks[i], &d.blocks[j]) == y {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(b, &edges)
}

fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut f = 2;
    while f * f <= q {
        if q % f == 0 {
            return false;
        }
        f += 1;
    }
    true
}

/// The projective plane over the integers mod a prime q, as the
/// 2-(q^2+q+1, q+1, 1) design of lines. Points are the 1-dimensional
/// subspaces of the 3-dimensional vector space, lines the 2-dimensional
/// ones.
pub fn projective_plane(q: u64) -> Result<Design> {
    if !is_prime(q) {
        return Err(Error::NotPrime { q });
    }
    let q = q as usize;
    // projective representatives: first non-zero coordinate is 1
    let mut points: Vec<[usize; 3]> = Vec::with_capacity(q * q + q + 1);
    for y in 0..q {
        for z in 0..q {
            points.push([1, y, z]);
        }
    }
    for z in 0..q {
        points.push([0, 1, z]);
    }
    points.push([0, 0, 1]);

    // a line is the kernel of a functional, itself taken projectively
    let blocks = points
        .iter()
        .map(|&[a, b, c]| {
            (0..points.len())
                .filter(|&i| {
                    let [x, y, z] = points[i];
                    (a * x + b * y + c * z) % q == 0
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let d = Design::new(points.len(), blocks)?;
    debug_assert_eq!(
        verify_2design(&d)?,
        TwoDesignParams { v: q * q + q + 1, b: q * q + q + 1, r: q + 1, k: q + 1, lambda: 1 }
    );
    Ok(d)
}

/// Quadratic-residue graph on 0..q-1 for a prime q congruent to 1 mod
/// 4 (so that adjacency is symmetric).
pub fn paley_graph(q: u64) -> Result<Graph> {
    if !is_prime(q) {
        return Err(Error::NotPrime { q });
    }
    if q % 4 != 1 {
        return Err(Error::NotOneModFour { q });
    }
    let q = q as usize;
    if q > 64 {
        return Err(Error::TooManyVertices { n: q });
    }
    let mut residues = vec![false; q];
    for i in 1..q {
        residues[i * i % q] = true;
    }
    let mut edges = Vec::new();
    for u in 0..q {
        for v in u + 1..q {
            if residues[(v - u) % q] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(q, &edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SteinerKind {
    /// All 2-subsets of a v-set: the 2-(v,2,1) design.
    Pairs(usize),
    /// The 2-(7,3,1) design.
    Sts7,
    /// Lines of the 3x3 grid: the 2-(9,3,1) design.
    Sts9,
}

pub fn steiner_system(kind: SteinerKind) -> Result<Design> {
    match kind {
        SteinerKind::Pairs(v) => {
            if v < 3 {
                return Err(Error::BadParameter(format!(
                    "pairs design needs v >= 3, got {v}"
                )));
            }
            let mut blocks = Vec::with_capacity(v * (v - 1) / 2);
            for i in 0..v {
                for j in i + 1..v {
                    blocks.push(vec![i, j]);
                }
            }
            Design::new(v, blocks)
        }
        SteinerKind::Sts7 => {
            // develop the base block {0, 1, 3} mod 7
            let blocks = (0..7)
                .map(|i| vec![i, (i + 1) % 7, (i + 3) % 7])
                .collect();
            Design::new(7, blocks)
        }
        SteinerKind::Sts9 => {
            // point (row, col) = 3*row + col; 4 parallel classes
            let mut blocks = Vec::with_capacity(12);
            for m in 0..3 {
                for c in 0..3 {
                    blocks.push((0..3).map(|x| 3 * x + (m * x + c) % 3).collect());
                }
            }
            for x in 0..3 {
                blocks.push((0..3).map(|y| 3 * x + y).collect());
            }
            Design::new(9, blocks)
        }
    }
}

/// Every block repeated m times; replication and pair coverage scale
/// by m.
pub fn multiple_design(d: &Design, m: usize) -> Result<Design> {
    if m < 2 {
        return Err(Error::MultiplicityTooSmall { m });
    }
    let mut blocks = Vec::with_capacity(d.blocks.len() * m);
    for block in &d.blocks {
        for _ in 0..m {
            blocks.push(block.clone());
        }
    }
    Design::new(d.v, blocks)
}

/// Finds the lexicographically first (16,6,2) difference set in the
/// elementary abelian group of order 16 (bit vectors under xor),
/// develops it into the symmetric 2-(16,6,2) biplane, and returns the
/// residual with respect to the first block: a 2-(10,4,2) design.
pub fn biplane_residual() -> Design {
    let set = find_biplane_difference_set().expect("a (16,6,2) difference set exists");
    let mut blocks: Vec<Vec<usize>> = (0..16usize)
        .map(|g| {
            let mut b: Vec<usize> = set.iter().map(|&d| d ^ g).collect();
            b.sort_unstable();
            b
        })
        .collect();
    let first = blocks.remove(0);
    let outside: Vec<usize> = (0..16).filter(|p| !first.contains(p)).collect();
    let relabel: std::collections::BTreeMap<usize, usize> =
        outside.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let residual_blocks: Vec<Vec<usize>> = blocks
        .iter()
        .map(|b| b.iter().filter_map(|p| relabel.get(p).copied()).collect())
        .collect();
    let d = Design::new(10, residual_blocks).expect("residual blocks are valid");
    let params = verify_2design(&d).expect("residual of a biplane is a 2-design");
    assert_eq!(params, TwoDesignParams { v: 10, b: 15, r: 6, k: 4, lambda: 2 });
    d
}

/// Six group elements whose 30 pairwise xors cover each of the 15
/// non-zero elements exactly twice.
fn find_biplane_difference_set() -> Option<[usize; 6]> {
    let mut idx = [0usize, 1, 2, 3, 4, 5];
    loop {
        let mut counts = [0u8; 16];
        for i in 0..6 {
            for j in i + 1..6 {
                counts[idx[i] ^ idx[j]] += 2;
            }
        }
        if counts[1..].iter().all(|&c| c == 2) {
            return Some(idx);
        }
        // next lexicographic 6-subset of 0..16
        let mut pos = 5;
        loop {
            if idx[pos] < 16 - (6 - pos) {
                idx[pos] += 1;
                for p in pos + 1..6 {
                    idx[p] = idx[p - 1] + 1;
                }
                break;
            }
            if pos == 0 {
                return None;
            }
            pos -= 1;
        }
    }
}

/// Parses the plain design text format: first line is the point count,
/// each following line is one block of space-separated 0-based point
/// indices. Trailing blank lines are ignored.
pub fn load_design(text: &str) -> Result<Design> {
    let mut lines: Vec<&str> = text.lines().collect();
    while lines.last().is_some_and(|l| l.trim().is_empty()) {
        lines.pop();
    }
    let mut it = lines.into_iter().enumerate();
    let (_, header) = it
        .next()
        .ok_or(Error::DesignText { line: 1, message: "missing point count".into() })?;
    let v: usize = header.trim().parse().map_err(|_| Error::DesignText {
        line: 1,
        message: format!("expected a point count, got {header:?}"),
    })?;
    let mut blocks = Vec::new();
    for (i, raw) in it {
        let line = i + 1;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(Error::DesignText { line, message: "empty block".into() });
        }
        let mut block = Vec::with_capacity(tokens.len());
        for tok in tokens {
            block.push(tok.parse().map_err(|_| Error::DesignText {
                line,
                message: format!("expected a point index, got {tok:?}"),
            })?);
        }
        blocks.push(block);
    }
    Design::new(v, blocks)
}

/// Inverse of `load_design`.
pub fn design_to_text(d: &Design) -> String {
    let mut out = format!("{}\n", d.v);
    for block in &d.blocks {
        let words: Vec<String> = block.iter().map(|p| p.to_string()).collect();
        out.push_str(&words.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::{canonical_certificate, isomorphic};
    use crate::characterization::detect_srg;
    use crate::exact::rat;
    use crate::graph::testutil::cycle;

    fn fano() -> Design {
        steiner_system(SteinerKind::Sts7).unwrap()
    }

    #[test]
    fn fano_parameters() {
        let params = verify_2design(&fano()).unwrap();
        assert_eq!(params, TwoDesignParams { v: 7, b: 7, r: 3, k: 3, lambda: 1 });
        let plane = projective_plane(2).unwrap();
        assert_eq!(verify_2design(&plane).unwrap(), params);
    }

    #[test]
    fn pairs_design() {
        let d = steiner_system(SteinerKind::Pairs(5)).unwrap();
        assert_eq!(
            verify_2design(&d).unwrap(),
            TwoDesignParams { v: 5, b: 10, r: 4, k: 2, lambda: 1 }
        );
        assert!(steiner_system(SteinerKind::Pairs(2)).is_err());
    }

    #[test]
    fn broken_replication_detected() {
        let mut blocks: Vec<Vec<usize>> = fano().blocks().to_vec();
        blocks.pop();
        let d = Design::new(7, blocks).unwrap();
        assert!(matches!(verify_2design(&d), Err(Error::NotTwoDesign(_))));
    }

    #[test]
    fn projective_planes() {
        let d = projective_plane(3).unwrap();
        assert_eq!(
            verify_2design(&d).unwrap(),
            TwoDesignParams { v: 13, b: 13, r: 4, k: 4, lambda: 1 }
        );
        assert!(matches!(projective_plane(4), Err(Error::NotPrime { q: 4 })));
        // any two distinct lines meet in exactly one point
        for q in [2u64, 3, 5] {
            let d = projective_plane(q).unwrap();
            for i in 0..d.b() {
                for j in i + 1..d.b() {
                    assert_eq!(intersection_size(&d.blocks()[i], &d.blocks()[j]), 1);
                }
            }
        }
    }

    #[test]
    fn sts9_block_structure() {
        let d = steiner_system(SteinerKind::Sts9).unwrap();
        assert_eq!(
            verify_2design(&d).unwrap(),
            TwoDesignParams { v: 9, b: 12, r: 4, k: 3, lambda: 1 }
        );
        let qs = qs_parameters(&d, 1).unwrap();
        assert_eq!((qs.x, qs.y), (0, 1));
        assert_eq!((qs.a, qs.c, qs.d), (9, 6, 9));
        assert_eq!(qs.rho1, rat(0, 1));
        assert_eq!(qs.rho2, rat(-3, 1));
        assert_eq!(point_block_counts(&qs).unwrap(), (3, 3));
        // formulas agree with the graph itself
        let bg = block_graph(&d, 1).unwrap();
        let srg = detect_srg(&bg).unwrap();
        assert_eq!((srg.n, srg.k, srg.lambda, srg.mu), (12, 9, 6, 9));
    }

    #[test]
    fn symmetric_design_is_not_quasi_symmetric() {
        assert!(matches!(
            qs_parameters(&fano(), 1),
            Err(Error::NotQuasiSymmetric { found: 1 })
        ));
    }

    #[test]
    fn intersection_choice_is_validated() {
        let d = steiner_system(SteinerKind::Sts9).unwrap();
        assert!(matches!(
            qs_parameters(&d, 2),
            Err(Error::BadIntersectionChoice { y: 2 })
        ));
    }

    #[test]
    fn paley_graphs() {
        let p5 = paley_graph(5).unwrap();
        assert_eq!(
            canonical_certificate(&p5).unwrap(),
            canonical_certificate(&cycle(5)).unwrap()
        );
        let p13 = paley_graph(13).unwrap();
        let srg = detect_srg(&p13).unwrap();
        assert_eq!((srg.n, srg.k, srg.lambda, srg.mu), (13, 6, 2, 3));
        assert!(matches!(paley_graph(7), Err(Error::NotOneModFour { q: 7 })));
        assert!(matches!(paley_graph(9), Err(Error::NotPrime { q: 9 })));
    }

    #[test]
    fn paley_self_complementary() {
        let p5 = paley_graph(5).unwrap();
        assert_eq!(
            canonical_certificate(&p5).unwrap(),
            canonical_certificate(&p5.complement()).unwrap()
        );
        // 13 vertices is past the certificate range; use the
        // isomorphism test directly
        let p13 = paley_graph(13).unwrap();
        assert!(isomorphic(&p13, &p13.complement()));
    }

    #[test]
    fn residual_biplane() {
        let d = biplane_residual();
        let qs = qs_parameters(&d, 1).unwrap();
        assert_eq!((qs.x, qs.y), (2, 1));
        assert_eq!((qs.a, qs.c, qs.d), (8, 4, 4));
        assert_eq!(qs.rho1, rat(-2, 1));
        assert_eq!(qs.rho2, rat(2, 1));
        assert_eq!(point_block_counts(&qs).unwrap(), (2, 4));
        // block graph is the triangular graph on pairs of a 6-set
        let bg = block_graph(&d, 1).unwrap();
        let t6 = block_graph(&steiner_system(SteinerKind::Pairs(6)).unwrap(), 1).unwrap();
        assert!(isomorphic(&bg, &t6));
        let srg = detect_srg(&bg).unwrap();
        assert_eq!((srg.n, srg.k, srg.lambda, srg.mu), (15, 8, 4, 4));
    }

    #[test]
    fn multiples_scale() {
        let double = multiple_design(&fano(), 2).unwrap();
        assert_eq!(
            verify_2design(&double).unwrap(),
            TwoDesignParams { v: 7, b: 14, r: 6, k: 3, lambda: 2 }
        );
        let qs = qs_parameters(&double, 3).unwrap();
        assert_eq!((qs.x, qs.y), (1, 3));
        assert_eq!((qs.a, qs.c, qs.d), (1, 0, 0));

        let triple = multiple_design(&steiner_system(SteinerKind::Pairs(4)).unwrap(), 3).unwrap();
        assert_eq!(verify_2design(&triple).unwrap().r, 9);
        assert!(matches!(multiple_design(&fano(), 1), Err(Error::MultiplicityTooSmall { m: 1 })));
    }

    #[test]
    fn text_round_trip() {
        let d = fano();
        let text = design_to_text(&d);
        assert_eq!(load_design(&text).unwrap(), d);
        assert!(text.starts_with("7\n"));
    }

    #[test]
    fn text_rejects_malformed() {
        assert!(matches!(
            load_design("7\n0 1 2\n\n3 4 5\n"),
            Err(Error::DesignText { line: 3, .. })
        ));
        assert!(matches!(
            load_design("7\n0 one 2\n"),
            Err(Error::DesignText { line: 2, .. })
        ));
        assert!(matches!(load_design(""), Err(Error::DesignText { line: 1, .. })));
        assert!(matches!(
            load_design("3\n0 1 3\n"),
            Err(Error::DesignPointRange { point: 3, v: 3 })
        ));
        assert!(matches!(
            load_design("3\n0 1 1\n"),
            Err(Error::RepeatedPoint { block: 0, point: 1 })
        ));
    }
}
