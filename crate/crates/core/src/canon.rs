//! Canonical certificates by pruned permutation search, and a general
//! isomorphism test for graphs beyond the certificate range.
//!
//! The certificate of a graph is the lexicographically minimal
//! upper-triangle adjacency bit string over all vertex relabelings,
//! packed behind the vertex count. Only census survivors ever get
//! canonicalized (tens of graphs), so branch-and-bound over permutations
//! is fast enough and simple to trust.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::cmp::Ordering;
use std::collections::BTreeMap;

/// Column-major upper-triangle columns of the current labeling.
/// Column k holds bits for pairs (0,k)..(k-1,k), pair (0,k) most
/// significant, so comparing column sequences is comparing bit strings.
fn columns_of(g: &Graph) -> Vec<u32> {
    (1..g.n())
        .map(|k| {
            let mut val = 0u32;
            for i in 0..k {
                val = val << 1 | u32::from(g.has_edge(i, k));
            }
            val
        })
        .collect()
}

fn column_value(g: &Graph, placed: &[usize], v: usize) -> u32 {
    let mut val = 0u32;
    for &p in placed {
        val = val << 1 | u32::from(g.has_edge(p, v));
    }
    val
}

fn minimal_columns(g: &Graph) -> Vec<u32> {
    let mut best: Option<Vec<u32>> = None;
    let mut perm = Vec::with_capacity(g.n());
    let mut cols = Vec::with_capacity(g.n().saturating_sub(1));
    descend(g, &mut perm, &mut 0u64, &mut cols, &mut best);
    best.unwrap_or_default()
}

fn descend(
    g: &Graph,
    perm: &mut Vec<usize>,
    used: &mut u64,
    cols: &mut Vec<u32>,
    best: &mut Option<Vec<u32>>,
) {
    let n = g.n();
    let k = perm.len();
    if k == n {
        if best.as_ref().is_none_or(|b| cols[..] < b[..]) {
            *best = Some(cols.clone());
        }
        return;
    }
    let mut cands: Vec<(u32, usize)> = (0..n)
        .filter(|v| *used >> *v & 1 == 0)
        .map(|v| (column_value(g, perm, v), v))
        .collect();
    cands.sort_unstable();
    for (col, v) in cands {
        if k > 0 {
            if let Some(b) = best.as_ref() {
                cols.push(col);
                let cmp = cols.as_slice().cmp(&b[..cols.len()]);
                cols.pop();
                if cmp == Ordering::Greater {
                    // Candidates are ascending by column value, so every
                    // later sibling extends to a larger prefix too.
                    break;
                }
            }
            cols.push(col);
        }
        perm.push(v);
        *used |= 1 << v;
        descend(g, perm, used, cols, best);
        perm.pop();
        *used &= !(1 << v);
        if k > 0 {
            cols.pop();
        }
    }
}

/// Canonical certificate: vertex count byte, then the minimal bit string
/// as a big-endian 64-bit block. Equal certificates iff isomorphic.
pub fn canonical_certificate(g: &Graph) -> Result<Vec<u8>> {
    let n = g.n();
    if n > 10 {
        return Err(Error::CertificateRange { n });
    }
    let cols = minimal_columns(g);
    let mut val = 0u64;
    for (idx, &c) in cols.iter().enumerate() {
        val = val << (idx + 1) | c as u64;
    }
    let mut out = Vec::with_capacity(9);
    out.push(n as u8);
    out.extend_from_slice(&val.to_be_bytes());
    Ok(out)
}

/// True when the graph's own labeling is already the minimal one. Lets
/// enumeration emit exactly one representative per isomorphism class
/// without storing certificates.
pub(crate) fn is_canonical(g: &Graph) -> bool {
    let n = g.n();
    // The minimal string starts with bit (0,1) = 0 unless no non-edge exists.
    if n > 1 && g.has_edge(0, 1) && !g.is_complete() {
        return false;
    }
    let target = columns_of(g);
    !smaller_labeling(g, &target, &mut Vec::with_capacity(n), &mut 0u64)
}

fn smaller_labeling(g: &Graph, target: &[u32], perm: &mut Vec<usize>, used: &mut u64) -> bool {
    let n = g.n();
    let k = perm.len();
    if k == n {
        return false;
    }
    let mut cands: Vec<(u32, usize)> = (0..n)
        .filter(|v| *used >> *v & 1 == 0)
        .map(|v| (column_value(g, perm, v), v))
        .collect();
    cands.sort_unstable();
    for (col, v) in cands {
        if k > 0 {
            match col.cmp(&target[k - 1]) {
                Ordering::Less => return true,
                Ordering::Greater => break,
                Ordering::Equal => {}
            }
        }
        perm.push(v);
        *used |= 1 << v;
        if smaller_labeling(g, target, perm, used) {
            return true;
        }
        perm.pop();
        *used &= !(1 << v);
    }
    false
}

/// Isomorphism for any two graphs within the vertex cap, via joint color
/// refinement plus backtracking. Used where certificates are out of
/// range (block graphs and Steiner graphs run past 10 vertices).
pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let Some((cg, ch)) = joint_refine(g, h) else { return false };
    // Most-constrained first: smaller color classes narrow the search.
    let mut class_size: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in &cg {
        *class_size.entry(c).or_insert(0) += 1;
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (class_size[&cg[v]], cg[v], v));
    let mut map = vec![usize::MAX; g.n()];
    extend_map(g, h, &order, 0, &mut map, &mut 0u64, &cg, &ch)
}

/// One round of joint 1-dimensional color refinement; None = proven
/// non-isomorphic by color counts.
fn joint_refine(g: &Graph, h: &Graph) -> Option<(Vec<u32>, Vec<u32>)> {
    let n = g.n();
    let mut cg: Vec<u32> = g.degrees().iter().map(|&d| d as u32).collect();
    let mut ch: Vec<u32> = h.degrees().iter().map(|&d| d as u32).collect();
    let mut distinct = 0usize;
    for _ in 0..=n {
        let sig = |graph: &Graph, colors: &[u32], v: usize| {
            let mut nb: Vec<u32> = graph.neighbors(v).map(|w| colors[w]).collect();
            nb.sort_unstable();
            (colors[v], nb)
        };
        let sigs_g: Vec<_> = (0..n).map(|v| sig(g, &cg, v)).collect();
        let sigs_h: Vec<_> = (0..n).map(|v| sig(h, &ch, v)).collect();
        let mut ids: BTreeMap<&(u32, Vec<u32>), u32> = BTreeMap::new();
        for s in sigs_g.iter().chain(sigs_h.iter()) {
            let next = ids.len() as u32;
            ids.entry(s).or_insert(next);
        }
        // Renumber in sorted signature order so ids are label-independent.
        let mut sorted: Vec<_> = ids.keys().copied().collect();
        sorted.sort();
        let rank: BTreeMap<_, u32> =
            sorted.iter().enumerate().map(|(i, s)| (*s, i as u32)).collect();
        cg = sigs_g.iter().map(|s| rank[s]).collect();
        ch = sigs_h.iter().map(|s| rank[s]).collect();
        let mut mg = cg.clone();
        let mut mh = ch.clone();
        mg.sort_unstable();
        mh.sort_unstable();
        if mg != mh {
            return None;
        }
        let now = rank.len();
        if now == distinct {
            break;
        }
        distinct = now;
    }
    Some((cg, ch))
}

fn extend_map(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    pos: usize,
    map: &mut Vec<usize>,
    used_h: &mut u64,
    cg: &[u32],
    ch: &[u32],
) -> bool {
    if pos == order.len() {
        return true;
    }
    let v = order[pos];
    for w in 0..h.n() {
        if *used_h >> w & 1 == 1 || ch[w] != cg[v] {
            continue;
        }
        let ok = order[..pos]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if !ok {
            continue;
        }
        map[v] = w;
        *used_h |= 1 << w;
        if extend_map(g, h, order, pos + 1, map, used_h, cg, ch) {
            return true;
        }
        *used_h &= !(1 << w);
        map[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::testutil::{complete, cycle, path, petersen};

    #[test]
    fn certificate_is_relabeling_invariant() {
        let g = petersen();
        let c = canonical_certificate(&g).unwrap();
        let p1: Vec<usize> = vec![3, 1, 4, 0, 5, 9, 2, 6, 8, 7];
        let p2: Vec<usize> = vec![9, 8, 7, 6, 5, 4, 3, 2, 1, 0];
        assert_eq!(canonical_certificate(&g.relabel(&p1)).unwrap(), c);
        assert_eq!(canonical_certificate(&g.relabel(&p2)).unwrap(), c);
    }

    #[test]
    fn certificates_separate_classes_on_four_vertices() {
        let classes = [
            path(4),
            Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap(),
            cycle(4),
            Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap(),
            Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap(),
            complete(4),
        ];
        let mut certs: Vec<_> =
            classes.iter().map(|g| canonical_certificate(g).unwrap()).collect();
        certs.sort();
        certs.dedup();
        assert_eq!(certs.len(), 6);
    }

    #[test]
    fn certificate_range_enforced() {
        let g = cycle(11);
        assert!(matches!(canonical_certificate(&g), Err(Error::CertificateRange { n: 11 })));
    }

    #[test]
    fn canonical_masks_count_classes() {
        // Over all labeled connected graphs on 4 vertices, exactly one
        // labeling per isomorphism class may be canonical: 6 classes.
        let mut canonical = 0;
        for mask in 0u64..64 {
            let g = Graph::from_upper_mask(4, mask);
            if !g.is_connected() {
                continue;
            }
            if is_canonical(&g) {
                canonical += 1;
                let cert = canonical_certificate(&g).unwrap();
                assert_eq!(columns_of(&g), minimal_columns(&g), "cert {cert:?}");
            }
        }
        assert_eq!(canonical, 6);
    }

    #[test]
    fn isomorphic_accepts_relabelings() {
        let g = petersen();
        let p: Vec<usize> = vec![5, 2, 7, 0, 9, 4, 1, 8, 3, 6];
        assert!(isomorphic(&g, &g.relabel(&p)));
    }

    #[test]
    fn isomorphic_rejects_different_regular_graphs() {
        let k33 = crate::families::complete_bipartite(3, 3).unwrap();
        let prism =
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
                .unwrap();
        assert_eq!(k33.edge_count(), prism.edge_count());
        assert!(!isomorphic(&k33, &prism));
    }

    #[test]
    fn isomorphic_rejects_on_connectivity_shape() {
        let c6 = cycle(6);
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!isomorphic(&c6, &two_triangles));
    }
}
