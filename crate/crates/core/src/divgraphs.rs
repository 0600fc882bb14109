//! Divisibility graphs on sets of positive integers.
//!
//! The graph on a multiset `X` has vertex set `X \ {1}` (deduplicated) and an
//! undirected edge `{a, b}` whenever `a | b` or `b | a`. For a finite group the
//! vertex set is either the non-central class sizes or, equivalently, the
//! centralizer orders of non-central elements; [`from_centralizer_orders`]
//! converts the latter into the former.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Undirected graph on distinct integers `> 1` with divisibility adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivGraph {
    vertices: Vec<u128>,
    edges: Vec<(u128, u128)>,
}

/// Shape of one connected component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentShape {
    #[serde(rename = "v")]
    pub vertex_count: usize,
    #[serde(rename = "e")]
    pub edge_count: usize,
    pub complete: bool,
}

/// Per-component shapes, sorted descending by vertex count then edge count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ShapeDescriptor {
    pub components: Vec<ComponentShape>,
}

/// JSON export form; all arrays ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivGraphJson {
    pub vertices: Vec<u128>,
    pub edges: Vec<[u128; 2]>,
    pub components: Vec<Vec<u128>>,
    pub shape: ShapeDescriptor,
}

/// Builds the divisibility graph of `values`. Duplicates and `1` are dropped.
///
/// # Panics
/// If some value is zero. Use [`try_divisibility_graph`] for untrusted input.
pub fn divisibility_graph(values: &[u128]) -> DivGraph {
    try_divisibility_graph(values).expect("divisibility graph values must be positive")
}

pub fn try_divisibility_graph(values: &[u128]) -> Result<DivGraph> {
    if values.contains(&0) {
        return Err(Error::InvalidInput("vertex values must be positive".into()));
    }
    let vertices: Vec<u128> = values
        .iter()
        .copied()
        .filter(|&v| v > 1)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut edges = Vec::new();
    for (i, &a) in vertices.iter().enumerate() {
        for &b in &vertices[i + 1..] {
            // a < b, so only a | b is possible
            if b % a == 0 {
                edges.push((a, b));
            }
        }
    }
    Ok(DivGraph { vertices, edges })
}

/// Divisibility graph on the class sizes `group_order / c`.
pub fn from_centralizer_orders(cents: &[u128], group_order: u128) -> Result<DivGraph> {
    let mut sizes = Vec::with_capacity(cents.len());
    for &c in cents {
        if c == 0 || !group_order.is_multiple_of(c) {
            return Err(Error::NotDivisible {
                value: c,
                modulus: group_order,
            });
        }
        sizes.push(group_order / c);
    }
    try_divisibility_graph(&sizes)
}

impl DivGraph {
    pub fn vertices(&self) -> &[u128] {
        &self.vertices
    }

    /// Edges `(a, b)` with `a < b`, sorted ascending.
    pub fn edges(&self) -> &[(u128, u128)] {
        &self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: u128) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn has_edge(&self, a: u128, b: u128) -> bool {
        let key = if a < b { (a, b) } else { (b, a) };
        self.edges.binary_search(&key).is_ok()
    }

    pub fn degree(&self, v: u128) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn is_isolated(&self, v: u128) -> bool {
        self.contains(v) && self.degree(v) == 0
    }

    fn index_of(&self, v: u128) -> usize {
        self.vertices.binary_search(&v).expect("vertex present")
    }

    /// Connected components, each ascending, ordered by minimum vertex.
    pub fn connected_components(&self) -> Vec<Vec<u128>> {
        let mut dsu = Dsu::new(self.vertices.len());
        for &(a, b) in &self.edges {
            dsu.union(self.index_of(a), self.index_of(b));
        }
        let mut comps: Vec<Vec<u128>> = Vec::new();
        let mut slot = vec![usize::MAX; self.vertices.len()];
        for (i, &v) in self.vertices.iter().enumerate() {
            let root = dsu.find(i);
            if slot[root] == usize::MAX {
                slot[root] = comps.len();
                comps.push(Vec::new());
            }
            comps[slot[root]].push(v);
        }
        // vertices are scanned ascending, so comps are already ordered by minimum
        comps
    }

    /// Component containing `v`, if `v` is a vertex.
    pub fn component_of(&self, v: u128) -> Option<Vec<u128>> {
        self.connected_components()
            .into_iter()
            .find(|c| c.binary_search(&v).is_ok())
    }

    pub fn shape(&self) -> ShapeDescriptor {
        let mut components: Vec<ComponentShape> = self
            .connected_components()
            .iter()
            .map(|comp| {
                let k = comp.len();
                let e = self
                    .edges
                    .iter()
                    .filter(|(a, _)| comp.binary_search(a).is_ok())
                    .count();
                ComponentShape {
                    vertex_count: k,
                    edge_count: e,
                    complete: e == k * (k - 1) / 2,
                }
            })
            .collect();
        components
            .sort_by(|x, y| (y.vertex_count, y.edge_count).cmp(&(x.vertex_count, x.edge_count)));
        ShapeDescriptor { components }
    }

    /// Undirected DOT rendering; isolated vertices get `shape=box`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph D {\n");
        for &v in &self.vertices {
            if self.degree(v) == 0 {
                out.push_str(&format!("  {v} [shape=box];\n"));
            } else {
                out.push_str(&format!("  {v};\n"));
            }
        }
        for &(a, b) in &self.edges {
            out.push_str(&format!("  {a} -- {b};\n"));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> DivGraphJson {
        DivGraphJson {
            vertices: self.vertices.clone(),
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
            components: self.connected_components(),
            shape: self.shape(),
        }
    }

    /// Components with at least two vertices.
    pub fn non_singleton_components(&self) -> Vec<Vec<u128>> {
        self.connected_components()
            .into_iter()
            .filter(|c| c.len() >= 2)
            .collect()
    }
}

impl ShapeDescriptor {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Vertex counts in descending order, e.g. `[7, 1]`.
    pub fn vertex_counts(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.vertex_count).collect()
    }

    pub fn total_vertices(&self) -> usize {
        self.components.iter().map(|c| c.vertex_count).sum()
    }
}

impl fmt::Display for ComponentShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.complete {
            write!(f, "K{}", self.vertex_count)
        } else {
            write!(f, "G({},{})", self.vertex_count, self.edge_count)
        }
    }
}

/// Compact notation such as `3K1`, `K2+2K1` or `G(7,6)+K1`; `0` when empty.
impl fmt::Display for ShapeDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.components.len() {
            let c = self.components[i];
            let run = self.components[i..].iter().take_while(|&&d| d == c).count();
            if !first {
                write!(f, "+")?;
            }
            if run > 1 {
                write!(f, "{run}")?;
            }
            write!(f, "{c}")?;
            first = false;
            i += run;
        }
        Ok(())
    }
}

/// Union-find with path halving and union by size.
#[derive(Debug, Clone)]
pub(crate) struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psl25_class_sizes_are_three_isolated_vertices() {
        let g = divisibility_graph(&[15, 20, 12, 12]);
        assert_eq!(g.vertices(), &[12, 15, 20]);
        assert!(g.edges().is_empty());
        assert_eq!(g.shape().to_string(), "3K1");
    }

    #[test]
    fn one_is_not_a_vertex() {
        assert!(divisibility_graph(&[1]).is_empty());
        assert!(divisibility_graph(&[]).is_empty());
        assert!(divisibility_graph(&[]).connected_components().is_empty());
    }

    #[test]
    fn small_components() {
        let g = divisibility_graph(&[2, 3, 6, 5]);
        assert_eq!(g.edges(), &[(2, 6), (3, 6)]);
        assert_eq!(g.connected_components(), vec![vec![2, 3, 6], vec![5]]);
        assert_eq!(g.shape().to_string(), "G(3,2)+K1");
    }

    #[test]
    fn k2_shape() {
        let g = divisibility_graph(&[2, 4]);
        assert_eq!(
            g.shape().components,
            vec![ComponentShape {
                vertex_count: 2,
                edge_count: 1,
                complete: true
            }]
        );
        assert_eq!(g.shape().to_string(), "K2");
        assert!(g.to_dot().contains("  2 -- 4;\n"));
    }

    #[test]
    fn zero_rejected() {
        assert!(try_divisibility_graph(&[0, 2]).is_err());
    }

    #[test]
    fn psl33_from_centralizers() {
        let g = from_centralizer_orders(&[54, 9, 48, 6, 4, 8, 13], 5616).unwrap();
        assert_eq!(g.vertices(), &[104, 117, 432, 624, 702, 936, 1404]);
        assert_eq!(
            g.connected_components(),
            vec![vec![104, 117, 624, 702, 936, 1404], vec![432]]
        );
        assert!(g.is_isolated(432));
        let dot = g.to_dot();
        assert!(dot.contains("  432 [shape=box];\n"));
        assert!(!dot.contains("432 --") && !dot.contains("-- 432"));
        assert_eq!(
            dot.lines()
                .filter(|l| !l.contains("--") && l.ends_with(';'))
                .count(),
            7
        );
    }

    #[test]
    fn sl23_from_centralizers() {
        let g = from_centralizer_orders(&[4, 6], 24).unwrap();
        assert_eq!(g.vertices(), &[4, 6]);
        assert!(g.edges().is_empty());
        let single = from_centralizer_orders(&[7], 7 * 5).unwrap();
        assert_eq!(single.vertices(), &[5]);
        assert!(from_centralizer_orders(&[5], 24).is_err());
    }

    #[test]
    fn empty_dot_is_header_and_footer() {
        assert_eq!(divisibility_graph(&[]).to_dot(), "graph D {\n}\n");
    }

    #[test]
    fn json_layout() {
        let g = divisibility_graph(&[2, 4, 3]);
        let v = serde_json::to_value(g.to_json()).unwrap();
        assert_eq!(
            v,
            serde_json::json!({
                "vertices": [2, 3, 4],
                "edges": [[2, 4]],
                "components": [[2, 4], [3]],
                "shape": [{"v": 2, "e": 1, "complete": true}, {"v": 1, "e": 0, "complete": true}]
            })
        );
    }
}
