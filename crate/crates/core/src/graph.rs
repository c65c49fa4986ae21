//! Simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` bitset row per vertex, which keeps
//! neighborhood intersections (`rows[u] & rows[v]`) and breadth-first
//! sweeps word-parallel. Vertices are 0-indexed everywhere.
//!
//! Besides the plain structure, this module computes the exact rational
//! statistics used by the three-eigenvalue criterion: for a vertex `u`
//! the weighted degree `dhat(u) = sum over neighbors v of 1/d(v)`, and
//! for a pair `u, v` the common-neighbor weight
//! `sum over common neighbors w of 1/d(w)` (written `lambda_hat` on
//! edges and `mu_hat` on non-edges).

use crate::error::{Error, Result};
use crate::exact::Rational;
use num_traits::Zero;

/// Undirected simple graph with bitset adjacency rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Column-major index of the pair (u, v) with u < v in the upper triangle:
/// bits are ordered (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
/// This matches the graph6 payload order.
#[inline]
pub(crate) fn pair_index(u: usize, v: usize) -> usize {
    debug_assert!(u < v);
    v * (v - 1) / 2 + u
}

impl Graph {
    /// Builds a graph from an explicit edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroVertices);
        }
        if n > 64 {
            return Err(Error::TooManyVertices { n });
        }
        let mut rows = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            if rows[u] >> v & 1 == 1 {
                return Err(Error::DuplicateEdge { u, v });
            }
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        Ok(Graph { n, rows })
    }

    /// Builds a graph from raw adjacency rows, validating shape and symmetry.
    pub fn from_adjacency_rows(n: usize, rows: Vec<u64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroVertices);
        }
        if n > 64 || rows.len() != n {
            return Err(Error::TooManyVertices { n: rows.len().max(n) });
        }
        let legal = Self::mask_for(n);
        for u in 0..n {
            if rows[u] & !legal != 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: (rows[u] & !legal).trailing_zeros() as usize,
                    n,
                });
            }
            if rows[u] >> u & 1 == 1 {
                return Err(Error::SelfLoop { vertex: u });
            }
            for v in BitIter(rows[u]) {
                if rows[v] >> u & 1 == 0 {
                    return Err(Error::AsymmetricRows { u, v });
                }
            }
        }
        Ok(Graph { n, rows })
    }

    /// Builds a graph from a packed upper-triangle bitmask in column-major
    /// pair order. Only meaningful for n <= 11 (C(n,2) <= 55 bits).
    pub(crate) fn from_upper_mask(n: usize, mask: u64) -> Self {
        debug_assert!((2..=11).contains(&n));
        let mut rows = vec![0u64; n];
        let mut idx = 0;
        for v in 1..n {
            for u in 0..v {
                if mask >> idx & 1 == 1 {
                    rows[u] |= 1 << v;
                    rows[v] |= 1 << u;
                }
                idx += 1;
            }
        }
        Graph { n, rows }
    }

    /// Packs the upper triangle into a bitmask, inverse of `from_upper_mask`.
    pub(crate) fn upper_mask(&self) -> u64 {
        debug_assert!(self.n <= 11);
        let mut mask = 0u64;
        let mut idx = 0;
        for v in 1..self.n {
            for u in 0..v {
                if self.has_edge(u, v) {
                    mask |= 1 << idx;
                }
                idx += 1;
            }
        }
        mask
    }

    #[inline]
    fn mask_for(n: usize) -> u64 {
        if n == 64 {
            !0
        } else {
            (1u64 << n) - 1
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, u: usize) -> u64 {
        self.rows[u]
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.rows[u].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.rows[u])
    }

    /// Edges as (u, v) with u < v, in column-major pair order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for v in 1..self.n {
            for u in 0..v {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    pub fn complement(&self) -> Graph {
        let legal = Self::mask_for(self.n);
        let rows = (0..self.n)
            .map(|u| !self.rows[u] & legal & !(1u64 << u))
            .collect();
        Graph { n: self.n, rows }
    }

    /// Subgraph induced by `vertices`; vertex i of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let m = vertices.len();
        let mut rows = vec![0u64; m];
        for (i, &vi) in vertices.iter().enumerate() {
            for (j, &vj) in vertices.iter().enumerate() {
                if i != j && self.has_edge(vi, vj) {
                    rows[i] |= 1 << j;
                }
            }
        }
        Graph { n: m, rows }
    }

    /// Relabeled copy: new vertex i takes the role of old vertex `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut rows = vec![0u64; self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j && self.has_edge(perm[i], perm[j]) {
                    rows[i] |= 1 << j;
                }
            }
        }
        Graph { n: self.n, rows }
    }

    /// Vertex set reachable from `start`, as a bitmask.
    pub(crate) fn reach(&self, start: usize) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for u in BitIter(frontier) {
                next |= self.rows[u];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0).count_ones() as usize == self.n
    }

    /// Connected components as vertex bitmasks, ordered by smallest member.
    pub fn components(&self) -> Vec<u64> {
        let mut left = Self::mask_for(self.n);
        let mut out = Vec::new();
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let comp = self.reach(start);
            out.push(comp);
            left &= !comp;
        }
        out
    }

    /// BFS distances from `u`; unreachable vertices get `None`.
    pub fn distances_from(&self, u: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n];
        dist[u] = Some(0);
        let mut seen = 1u64 << u;
        let mut frontier = seen;
        let mut level = 0u32;
        while frontier != 0 {
            level += 1;
            let mut next = 0u64;
            for w in BitIter(frontier) {
                next |= self.rows[w];
            }
            frontier = next & !seen;
            seen |= next;
            for w in BitIter(frontier) {
                dist[w] = Some(level);
            }
        }
        dist
    }

    /// Diameter, or `None` when the graph is disconnected.
    pub fn diameter(&self) -> Option<u32> {
        let mut best = 0u32;
        for u in 0..self.n {
            let d = self.distances_from(u);
            for x in &d {
                match x {
                    Some(v) => best = best.max(*v),
                    None => return None,
                }
            }
        }
        Some(best)
    }

    /// Every pair of vertices is adjacent or shares a neighbor.
    pub(crate) fn diameter_at_most_two(&self) -> bool {
        for v in 1..self.n {
            for u in 0..v {
                if !self.has_edge(u, v) && self.rows[u] & self.rows[v] == 0 {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_triangle_free(&self) -> bool {
        for (u, v) in self.edges() {
            if self.rows[u] & self.rows[v] != 0 {
                return false;
            }
        }
        true
    }

    /// Proper 2-coloring as (side0, side1) bitmasks, if one exists.
    /// Disconnected graphs are colored component by component.
    pub fn bipartition(&self) -> Option<(u64, u64)> {
        let mut color = vec![u8::MAX; self.n];
        let mut side = [0u64; 2];
        for comp in self.components() {
            let start = comp.trailing_zeros() as usize;
            color[start] = 0;
            side[0] |= 1 << start;
            let mut frontier = 1u64 << start;
            let mut seen = frontier;
            let mut c = 0u8;
            while frontier != 0 {
                c ^= 1;
                let mut next = 0u64;
                for u in BitIter(frontier) {
                    next |= self.rows[u];
                }
                frontier = next & !seen;
                seen |= next;
                for u in BitIter(frontier) {
                    color[u] = c;
                    side[c as usize] |= 1 << u;
                }
            }
        }
        for (u, v) in self.edges() {
            if color[u] == color[v] {
                return None;
            }
        }
        Some((side[0], side[1]))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }
}

/// Iterator over set bit positions of a word.
#[derive(Clone, Copy)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(b)
        }
    }
}

/// One-pass structural summary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralProfile {
    pub connected: bool,
    /// `None` encodes an infinite diameter (disconnected graph).
    pub diameter: Option<u32>,
    pub triangle_free: bool,
    /// Degrees sorted ascending.
    pub degree_multiset: Vec<usize>,
    pub is_regular: bool,
    pub is_biregular: bool,
    /// Some vertex is adjacent to all others.
    pub is_cone: bool,
    pub is_complete: bool,
    pub is_bipartite: bool,
}

pub fn structural_profile(g: &Graph) -> StructuralProfile {
    let mut degs = g.degrees();
    degs.sort_unstable();
    let distinct = {
        let mut d = degs.clone();
        d.dedup();
        d.len()
    };
    let connected = g.is_connected();
    StructuralProfile {
        connected,
        diameter: if connected { g.diameter() } else { None },
        triangle_free: g.is_triangle_free(),
        is_regular: distinct == 1,
        is_biregular: distinct == 2,
        is_cone: g.n() >= 2 && degs.last() == Some(&(g.n() - 1)),
        is_complete: g.is_complete(),
        is_bipartite: g.is_bipartite(),
        degree_multiset: degs,
    }
}

/// Exact reciprocal-degree statistics.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedStats {
    n: usize,
    dhat: Vec<Rational>,
    /// Common-neighbor weights for every unordered pair, column-major.
    pairs: Vec<Rational>,
    adjacent: Vec<bool>,
}

impl NormalizedStats {
    /// `sum over neighbors v of u of 1/d(v)`.
    pub fn dhat(&self, u: usize) -> &Rational {
        &self.dhat[u]
    }

    /// Common-neighbor weight of any pair, with its adjacency flag.
    pub fn pair(&self, u: usize, v: usize) -> (&Rational, bool) {
        let i = pair_index(u.min(v), u.max(v));
        (&self.pairs[i], self.adjacent[i])
    }

    /// Edge statistic; `None` when u and v are not adjacent.
    pub fn lambda_hat(&self, u: usize, v: usize) -> Option<&Rational> {
        let (val, adj) = self.pair(u, v);
        adj.then_some(val)
    }

    /// Non-edge statistic; `None` when u and v are adjacent.
    pub fn mu_hat(&self, u: usize, v: usize) -> Option<&Rational> {
        let (val, adj) = self.pair(u, v);
        (!adj).then_some(val)
    }
}

/// Computes `dhat` for every vertex and the common-neighbor weight for
/// every unordered pair. Rejects graphs with isolated vertices, whose
/// reciprocal degrees are undefined.
pub fn normalized_stats(g: &Graph) -> Result<NormalizedStats> {
    let n = g.n();
    let mut inv = Vec::with_capacity(n);
    for u in 0..n {
        let d = g.degree(u);
        if d == 0 {
            return Err(Error::IsolatedVertex { vertex: u });
        }
        inv.push(Rational::new(1.into(), (d as u64).into()));
    }
    let weight = |mask: u64| -> Rational {
        let mut s = Rational::zero();
        for w in BitIter(mask) {
            s += &inv[w];
        }
        s
    };
    let dhat = (0..n).map(|u| weight(g.row(u))).collect();
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    let mut adjacent = Vec::with_capacity(n * (n - 1) / 2);
    for v in 1..n {
        for u in 0..v {
            pairs.push(weight(g.row(u) & g.row(v)));
            adjacent.push(g.has_edge(u, v));
        }
    }
    Ok(NormalizedStats { n, dhat, pairs, adjacent })
}

/// Partition of the vertex set by degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValencyPartition {
    /// Vertex classes, ordered by decreasing degree.
    pub parts: Vec<Vec<usize>>,
    /// Degree of each class, parallel to `parts`.
    pub part_degrees: Vec<usize>,
    /// Class-to-class neighbor counts, present when the partition is equitable.
    pub k: Option<Vec<Vec<usize>>>,
    pub equitable: bool,
    /// First (vertex, class) pair whose neighbor count deviates.
    pub witness: Option<(usize, usize)>,
}

pub fn valency_partition(g: &Graph) -> ValencyPartition {
    let mut degrees: Vec<usize> = g.degrees().into_iter().collect::<std::collections::BTreeSet<_>>().into_iter().collect();
    degrees.reverse();
    let parts: Vec<Vec<usize>> = degrees
        .iter()
        .map(|&d| (0..g.n()).filter(|&u| g.degree(u) == d).collect())
        .collect();
    let mut part_mask = vec![0u64; parts.len()];
    for (i, part) in parts.iter().enumerate() {
        for &u in part {
            part_mask[i] |= 1 << u;
        }
    }
    let mut k = vec![vec![0usize; parts.len()]; parts.len()];
    let mut witness = None;
    'outer: for (i, part) in parts.iter().enumerate() {
        for (j, &mask) in part_mask.iter().enumerate() {
            let counts: Vec<usize> = part
                .iter()
                .map(|&u| (g.row(u) & mask).count_ones() as usize)
                .collect();
            if counts.windows(2).any(|w| w[0] != w[1]) {
                let bad = part
                    .iter()
                    .zip(&counts)
                    .find(|&(_, &c)| c != counts[0])
                    .map(|(&u, _)| u)
                    .unwrap();
                witness = Some((bad, j));
                break 'outer;
            }
            k[i][j] = counts.first().copied().unwrap_or(0);
        }
    }
    let equitable = witness.is_none();
    ValencyPartition {
        parts,
        part_degrees: degrees,
        k: equitable.then_some(k),
        equitable,
        witness,
    }
}
