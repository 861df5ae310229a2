use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::matroid::{canonicalize, CircuitMatroid};
use crate::set::ElementSet;

/// A multigraph on vertices `1..=vertex_count`. Edge `i` (1-based position)
/// is ground element `i` of its cycle matroid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidParams("graph needs at least one vertex".into()));
        }
        for &(u, v) in &edges {
            for w in [u, v] {
                if w == 0 || w > vertex_count {
                    return Err(Error::OutOfRange {
                        element: w,
                        n: vertex_count,
                    });
                }
            }
        }
        Ok(Graph { vertex_count, edges })
    }

    /// `K_k` with edges in lexicographic order `12, 13, .., 1k, 23, ..`.
    pub fn complete(k: usize) -> Self {
        let mut edges = Vec::new();
        for u in 1..=k {
            for v in u + 1..=k {
                edges.push((u, v));
            }
        }
        Graph { vertex_count: k, edges }
    }

    /// `C_k` with edges `12, 23, .., (k-1)k, k1`.
    pub fn cycle(k: usize) -> Self {
        let edges = (1..=k).map(|u| (u, u % k + 1)).collect();
        Graph { vertex_count: k, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Graph minus the edge at 1-based position `label`.
    pub fn without_edge(&self, label: usize) -> Graph {
        let mut edges = self.edges.clone();
        edges.remove(label - 1);
        Graph {
            vertex_count: self.vertex_count,
            edges,
        }
    }

    fn check_simple(&self) -> Result<()> {
        let mut seen = std::collections::HashSet::new();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if u == v {
                return Err(Error::NotSimpleGraph(format!("edge {} is a loop at vertex {u}", i + 1)));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::NotSimpleGraph(format!("edge {} duplicates {u}-{v}", i + 1)));
            }
        }
        Ok(())
    }

    fn vertices_of(&self, edges: ElementSet) -> u64 {
        edges.iter().fold(0u64, |acc, e| {
            let (u, v) = self.edges[e - 1];
            acc | 1 << (u - 1) | 1 << (v - 1)
        })
    }

    /// Edges of the subgraph induced on `vertices` (bit `i` = vertex `i+1`).
    fn induced_edges(&self, vertices: u64) -> ElementSet {
        let mut out = ElementSet::EMPTY;
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if vertices >> (u - 1) & 1 == 1 && vertices >> (v - 1) & 1 == 1 {
                out.insert(i + 1);
            }
        }
        out
    }

    /// Whether `edges` connect every vertex in `vertices`.
    fn connects(&self, vertices: u64, edges: ElementSet) -> bool {
        let Some(start) = (vertices != 0).then(|| vertices.trailing_zeros()) else {
            return true;
        };
        let mut reached = 1u64 << start;
        loop {
            let before = reached;
            for e in edges.iter() {
                let (u, v) = self.edges[e - 1];
                let (bu, bv) = (1u64 << (u - 1), 1u64 << (v - 1));
                if reached & (bu | bv) != 0 {
                    reached |= bu | bv;
                }
            }
            if reached == before {
                break;
            }
        }
        reached & vertices == vertices
    }

    /// Connected and bridgeless on the induced subgraph; a single vertex counts.
    fn two_edge_connected(&self, vertices: u64) -> bool {
        let inside = self.induced_edges(vertices);
        if !self.connects(vertices, inside) {
            return false;
        }
        inside.iter().all(|e| {
            let mut rest = inside;
            rest.remove(e);
            self.connects(vertices, rest)
        })
    }

    fn is_cycle(&self, edges: ElementSet) -> bool {
        let mut degree = vec![0u8; self.vertex_count + 1];
        for e in edges.iter() {
            let (u, v) = self.edges[e - 1];
            degree[u] += 1;
            degree[v] += 1;
            if degree[u] > 2 || degree[v] > 2 {
                return false;
            }
        }
        if degree.contains(&1) {
            return false;
        }
        self.connects(self.vertices_of(edges), edges)
    }
}

/// Circuits are the edge sets of cycles (loops and parallel pairs included).
pub fn cycle_matroid(g: &Graph, limits: &Limits) -> Result<CircuitMatroid> {
    let m = g.edge_count();
    limits.check_graph_edges(m)?;
    let mut circuits: Vec<ElementSet> = (1u64..1u64 << m)
        .into_par_iter()
        .map(ElementSet::from_bits)
        .filter(|&s| g.is_cycle(s))
        .collect();
    canonicalize(&mut circuits);
    Ok(CircuitMatroid::from_trusted(m, circuits))
}

/// Edge sets of chordless cycles of a simple graph.
pub fn induced_cycles(g: &Graph, limits: &Limits) -> Result<Vec<ElementSet>> {
    g.check_simple()?;
    let m = cycle_matroid(g, limits)?;
    Ok(m.circuits()
        .iter()
        .copied()
        .filter(|&c| g.induced_edges(g.vertices_of(c)) == c)
        .collect())
}

/// Bonds of a connected simple graph whose two sides are each
/// 2-edge-connected (a lone vertex qualifies).
pub fn splitting_edge_cuts(g: &Graph, limits: &Limits) -> Result<Vec<ElementSet>> {
    g.check_simple()?;
    let v = g.vertex_count();
    limits.check_graph_vertices(v)?;
    let all_vertices = if v == 64 { u64::MAX } else { (1u64 << v) - 1 };
    let all_edges = ElementSet::full(g.edge_count());
    if !g.connects(all_vertices, all_edges) {
        return Err(Error::NotConnected);
    }
    // vertex 1 always sits on side A
    let mut cuts: Vec<ElementSet> = (0u64..1u64 << (v - 1))
        .into_par_iter()
        .filter_map(|mask| {
            let side_b = mask << 1;
            if side_b == 0 {
                return None;
            }
            let side_a = all_vertices & !side_b;
            if !(g.two_edge_connected(side_a) && g.two_edge_connected(side_b)) {
                return None;
            }
            let cut = all_edges
                .difference(g.induced_edges(side_a))
                .difference(g.induced_edges(side_b));
            Some(cut)
        })
        .collect();
    canonicalize(&mut cuts);
    Ok(cuts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(lists: &[&[usize]]) -> Vec<ElementSet> {
        lists.iter().map(|l| l.iter().copied().collect()).collect()
    }

    fn l() -> Limits {
        Limits::default()
    }

    #[test]
    fn triangle_has_one_circuit() {
        let m = cycle_matroid(&Graph::complete(3), &l()).unwrap();
        assert_eq!(m.circuits(), &sets(&[&[1, 2, 3]])[..]);
    }

    #[test]
    fn k4_circuits() {
        let m = cycle_matroid(&Graph::complete(4), &l()).unwrap();
        // 12,13,14,23,24,34
        let expected = sets(&[
            &[1, 2, 4],
            &[1, 3, 5],
            &[2, 3, 6],
            &[4, 5, 6],
            &[1, 2, 5, 6],
            &[1, 3, 4, 6],
            &[2, 3, 4, 5],
        ]);
        assert_eq!(m.circuits(), &expected[..]);
    }

    #[test]
    fn loops_and_parallel_edges() {
        let g = Graph::new(2, vec![(1, 2), (1, 2)]).unwrap();
        assert_eq!(cycle_matroid(&g, &l()).unwrap().circuits(), &sets(&[&[1, 2]])[..]);
        let g = Graph::new(2, vec![(1, 1), (1, 2)]).unwrap();
        assert_eq!(cycle_matroid(&g, &l()).unwrap().circuits(), &sets(&[&[1]])[..]);
    }

    #[test]
    fn graph_rejects_bad_endpoint() {
        assert!(Graph::new(3, vec![(1, 4)]).is_err());
        assert!(Graph::new(0, vec![]).is_err());
    }

    #[test]
    fn cycle_matroid_is_valid() {
        let g = Graph::new(4, vec![(1, 2), (2, 3), (3, 1), (3, 4), (4, 1), (1, 2), (4, 4)]).unwrap();
        let m = cycle_matroid(&g, &l()).unwrap();
        assert!(crate::matroid::validate_circuits(m.n(), m.circuits()).is_ok());
    }

    #[test]
    fn induced_cycles_examples() {
        assert_eq!(
            induced_cycles(&Graph::complete(4), &l()).unwrap(),
            sets(&[&[1, 2, 4], &[1, 3, 5], &[2, 3, 6], &[4, 5, 6]])
        );
        assert_eq!(induced_cycles(&Graph::cycle(4), &l()).unwrap(), sets(&[&[1, 2, 3, 4]]));
        // drop 34: edges 12,13,14,23,24 -> triangles {12,13,23} and {12,14,24}
        let g = Graph::complete(4).without_edge(6);
        assert_eq!(induced_cycles(&g, &l()).unwrap(), sets(&[&[1, 2, 4], &[1, 3, 5]]));
    }

    #[test]
    fn induced_cycles_requires_simple_graph() {
        let g = Graph::new(2, vec![(1, 2), (2, 1)]).unwrap();
        assert!(matches!(induced_cycles(&g, &l()), Err(Error::NotSimpleGraph(_))));
    }

    #[test]
    fn splitting_cuts_of_k4_are_vertex_stars() {
        let cuts = splitting_edge_cuts(&Graph::complete(4), &l()).unwrap();
        assert_eq!(cuts, sets(&[&[1, 2, 3], &[1, 4, 5], &[2, 4, 6], &[3, 5, 6]]));
    }

    #[test]
    fn triangle_has_no_splitting_cut() {
        assert!(splitting_edge_cuts(&Graph::complete(3), &l()).unwrap().is_empty());
    }

    #[test]
    fn disconnected_graph_is_rejected() {
        let g = Graph::new(4, vec![(1, 2), (3, 4)]).unwrap();
        assert_eq!(splitting_edge_cuts(&g, &l()), Err(Error::NotConnected));
    }
}
