//! The Hermitian L-matrix / L-graph core: construction, subgraph
//! extraction, exact characteristic polynomials, the equivalence group
//! (switching, permutation, negation, conjugation), canonical forms and
//! form-pattern matching.
//!
//! A graph stores only the upper triangle; the lower triangle is the
//! conjugate by construction and the diagonal (the vertex charges) is
//! rational-integer.

mod canon;
mod fileformat;
mod pattern;
pub(crate) mod q128;

pub use canon::CanonKey;
pub use fileformat::{read_graph, read_graph_str, write_graph, write_graph_string};
pub use pattern::{ChargeConstraint, EdgeConstraint, FormPattern};

use crate::polynomial::IntPoly;
use crate::quadint::{QuadInt, RingSpec};
use std::fmt;

/// Errors from graph construction and parsing.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GraphError {
    EmptyVertexSet,
    IndexOutOfRange { index: usize, n: usize },
    DuplicateIndex(usize),
    NonRealDiagonal,
    WrongRing,
    LengthMismatch { expected: usize, got: usize },
    Parse(String),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::EmptyVertexSet => write!(f, "vertex set must be nonempty"),
            GraphError::IndexOutOfRange { index, n } => {
                write!(f, "vertex index {index} out of range for n = {n}")
            }
            GraphError::DuplicateIndex(i) => write!(f, "duplicate vertex index {i}"),
            GraphError::NonRealDiagonal => write!(f, "diagonal entries must be rational integers"),
            GraphError::WrongRing => write!(f, "edge label from a different ring"),
            GraphError::LengthMismatch { expected, got } => {
                write!(f, "expected {expected} entries, got {got}")
            }
            GraphError::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for GraphError {}

/// A Hermitian matrix over `O_Q(sqrt(d))` viewed as a charged,
/// edge-labelled graph.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LGraph {
    ring: RingSpec,
    n: usize,
    charges: Vec<i64>,
    upper: Vec<QuadInt>, // packed (i < j), row-major
}

/// One generator of the equivalence group.
#[derive(Clone, Debug)]
pub enum Action {
    /// Negate all edge labels incident at the vertex.
    Switch(usize),
    /// Negate every entry (charges included).
    Negate,
    /// Conjugate every entry.
    Conjugate,
    /// Relabel vertices: vertex `i` moves to position `perm[i]`.
    Permute(Vec<usize>),
}

pub(crate) fn upper_len(n: usize) -> usize {
    n * (n - 1) / 2
}

pub(crate) fn upper_idx(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

impl LGraph {
    /// Builds a graph from charges and explicit upper-triangle edges.
    pub fn new(
        ring: RingSpec,
        charges: Vec<i64>,
        edges: &[(usize, usize, QuadInt)],
    ) -> Result<LGraph, GraphError> {
        let n = charges.len();
        if n == 0 {
            return Err(GraphError::EmptyVertexSet);
        }
        let mut upper = vec![ring.zero(); upper_len(n)];
        for &(i, j, label) in edges {
            if i >= n || j >= n {
                return Err(GraphError::IndexOutOfRange { index: i.max(j), n });
            }
            if i == j {
                return Err(GraphError::NonRealDiagonal);
            }
            if label.ring != ring {
                return Err(GraphError::WrongRing);
            }
            let (a, b) = if i < j { (i, j) } else { (j, i) };
            let stored = if i < j { label } else { label.conj() };
            upper[upper_idx(n, a, b)] = stored;
        }
        Ok(LGraph { ring, n, charges, upper })
    }

    /// A single vertex with the given charge.
    pub fn single(ring: RingSpec, charge: i64) -> LGraph {
        LGraph { ring, n: 1, charges: vec![charge], upper: Vec::new() }
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn charge(&self, v: usize) -> i64 {
        self.charges[v]
    }

    pub fn charges(&self) -> &[i64] {
        &self.charges
    }

    /// Matrix entry `(i, j)`; the lower triangle is the conjugate of the
    /// upper, the diagonal the charge.
    pub fn entry(&self, i: usize, j: usize) -> QuadInt {
        if i == j {
            self.ring.integer(self.charges[i])
        } else if i < j {
            self.upper[upper_idx(self.n, i, j)]
        } else {
            self.upper[upper_idx(self.n, j, i)].conj()
        }
    }

    /// Upper-triangle label for `i < j`.
    pub fn upper_entry(&self, i: usize, j: usize) -> QuadInt {
        self.upper[upper_idx(self.n, i, j)]
    }

    pub(crate) fn set_upper(&mut self, i: usize, j: usize, label: QuadInt) {
        let idx = upper_idx(self.n, i, j);
        self.upper[idx] = label;
    }

    /// Iterates the nonzero edges `(i, j, label)` with `i < j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, QuadInt)> + '_ {
        (0..self.n).flat_map(move |i| {
            ((i + 1)..self.n).filter_map(move |j| {
                let l = self.upper[upper_idx(self.n, i, j)];
                if l.is_zero() {
                    None
                } else {
                    Some((i, j, l))
                }
            })
        })
    }

    /// Sum of incident edge norms plus the squared charge.
    pub fn weighted_degree(&self, v: usize) -> i64 {
        let mut acc = self.charges[v] * self.charges[v];
        for j in 0..self.n {
            if j != v {
                acc += self.entry(v, j).norm();
            }
        }
        acc
    }

    /// Largest edge norm (0 for edgeless graphs).
    pub fn max_edge_norm(&self) -> i64 {
        self.edges().map(|(_, _, l)| l.norm()).max().unwrap_or(0)
    }

    pub fn has_edge_of_norm(&self, w: i64) -> bool {
        self.edges().any(|(_, _, l)| l.norm() == w)
    }

    /// Restriction to the vertex subset `s`, in the order given.
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<LGraph, GraphError> {
        if s.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        let mut seen = vec![false; self.n];
        for &v in s {
            if v >= self.n {
                return Err(GraphError::IndexOutOfRange { index: v, n: self.n });
            }
            if seen[v] {
                return Err(GraphError::DuplicateIndex(v));
            }
            seen[v] = true;
        }
        let m = s.len();
        let charges = s.iter().map(|&v| self.charges[v]).collect();
        let mut h = LGraph { ring: self.ring, n: m, charges, upper: vec![self.ring.zero(); upper_len(m)] };
        for a in 0..m {
            for b in (a + 1)..m {
                let label = self.entry(s[a], s[b]);
                if !label.is_zero() {
                    h.set_upper(a, b, label);
                }
            }
        }
        Ok(h)
    }

    /// Drops one vertex.
    pub fn delete_vertex(&self, v: usize) -> LGraph {
        let s: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&s).expect("nonempty")
    }

    /// Connectivity of the nonzero off-diagonal support.
    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Vertex partition into connected components.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for u in 0..self.n {
                    if !seen[u] && u != v && !self.entry(v, u).is_zero() {
                        seen[u] = true;
                        comp.push(u);
                        queue.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Applies one equivalence-group generator.
    pub fn transform(&self, action: &Action) -> LGraph {
        match action {
            Action::Switch(v) => {
                let mut g = self.clone();
                for u in 0..self.n {
                    if u == *v {
                        continue;
                    }
                    let (i, j) = if u < *v { (u, *v) } else { (*v, u) };
                    let l = g.upper[upper_idx(self.n, i, j)];
                    g.set_upper(i, j, l.neg());
                }
                g
            }
            Action::Negate => {
                let mut g = self.clone();
                for c in g.charges.iter_mut() {
                    *c = -*c;
                }
                for l in g.upper.iter_mut() {
                    *l = l.neg();
                }
                g
            }
            Action::Conjugate => {
                let mut g = self.clone();
                for l in g.upper.iter_mut() {
                    *l = l.conj();
                }
                g
            }
            Action::Permute(perm) => {
                assert_eq!(perm.len(), self.n, "permutation length");
                let mut charges = vec![0i64; self.n];
                for i in 0..self.n {
                    charges[perm[i]] = self.charges[i];
                }
                let mut g = LGraph {
                    ring: self.ring,
                    n: self.n,
                    charges,
                    upper: vec![self.ring.zero(); upper_len(self.n)],
                };
                for i in 0..self.n {
                    for j in (i + 1)..self.n {
                        let l = self.upper[upper_idx(self.n, i, j)];
                        if l.is_zero() {
                            continue;
                        }
                        let (a, b) = (perm[i], perm[j]);
                        if a < b {
                            g.set_upper(a, b, l);
                        } else {
                            g.set_upper(b, a, l.conj());
                        }
                    }
                }
                g
            }
        }
    }

    /// Exact monic characteristic polynomial `det(xI - A)`.
    ///
    /// Computed by Faddeev–LeVerrier over the ring adjoined sqrt(d); the
    /// terminal assertion that every coefficient is a rational integer is a
    /// construction-bug tripwire, not an error path.
    pub fn char_poly(&self) -> IntPoly {
        IntPoly::from_i128(&self.char_poly_i128())
    }

    /// Ascending i128 coefficients of the characteristic polynomial.
    pub(crate) fn char_poly_i128(&self) -> Vec<i128> {
        q128::char_poly(self)
    }

    /// Canonical representative of the full equivalence class
    /// (permutations, switchings, global negation, global conjugation)
    /// plus its byte key. Equal keys hold exactly for equivalent graphs.
    pub fn canonical_form(&self) -> (LGraph, CanonKey) {
        canon::canonical_form(self)
    }

    /// Key-only convenience.
    pub fn canonical_key(&self) -> CanonKey {
        self.canonical_form().1
    }

    /// Full-group equivalence via canonical keys.
    pub fn is_equivalent(&self, other: &LGraph) -> bool {
        if self.ring != other.ring || self.n != other.n {
            return false;
        }
        self.canonical_key() == other.canonical_key()
    }

    /// Induced-subgraph form matching; returns one witness injection
    /// (pattern vertex -> graph vertex) if any exists.
    pub fn contains_form(&self, pat: &FormPattern) -> Option<Vec<usize>> {
        pattern::find_injection(self, pat)
    }
}

impl fmt::Display for LGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LGraph(d={}, n={}, charges={:?}", self.ring.d, self.n, self.charges)?;
        for (i, j, l) in self.edges() {
            write!(f, ", {i}-{j}: {l}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::is_cyclotomic_spectrum;
    use crate::quadint::ring_make;

    fn r2() -> RingSpec {
        ring_make(-2).unwrap()
    }

    fn h1() -> LGraph {
        LGraph::new(r2(), vec![1, 1], &[(0, 1, r2().root())]).unwrap()
    }

    #[test]
    fn construction_and_entries() {
        let g = h1();
        assert_eq!(g.n(), 2);
        assert_eq!(g.entry(0, 0), r2().integer(1));
        assert_eq!(g.entry(0, 1), r2().root());
        assert_eq!(g.entry(1, 0), r2().root().conj());
        // 1x1 (2)
        let one = LGraph::single(ring_make(-7).unwrap(), 2);
        assert_eq!(one.char_poly(), IntPoly::from_i64(&[-2, 1]));
        // non-real diagonal is unrepresentable through the API: self-loops rejected
        assert_eq!(
            LGraph::new(r2(), vec![0], &[(0, 0, r2().root())]),
            Err(GraphError::NonRealDiagonal)
        );
        assert_eq!(
            LGraph::new(r2(), vec![0, 0], &[(0, 5, r2().root())]),
            Err(GraphError::IndexOutOfRange { index: 5, n: 2 })
        );
    }

    #[test]
    fn char_poly_examples() {
        // H1 (d=-2): x^2 - 2x - 1
        assert_eq!(h1().char_poly(), IntPoly::from_i64(&[-1, -2, 1]));
        // weight-4 edge, uncharged: x^2 - 4
        let s2 = LGraph::new(r2(), vec![0, 0], &[(0, 1, r2().integer(2))]).unwrap();
        assert_eq!(s2.char_poly(), IntPoly::from_i64(&[-4, 0, 1]));
        // 1x1 (0): x
        assert_eq!(LGraph::single(r2(), 0).char_poly(), IntPoly::x());
        // d=-7 H1 analogue has the same polynomial
        let r7 = ring_make(-7).unwrap();
        let w = QuadInt::new(r7, 1, 1).unwrap();
        let h1_7 = LGraph::new(r7, vec![1, 1], &[(0, 1, w)]).unwrap();
        assert_eq!(h1_7.char_poly(), IntPoly::from_i64(&[-1, -2, 1]));
    }

    #[test]
    fn subgraphs_and_connectivity() {
        let g = h1();
        let sub = g.induced_subgraph(&[0]).unwrap();
        assert_eq!(sub.char_poly(), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(g.induced_subgraph(&[0, 1]).unwrap(), g);
        assert!(g.induced_subgraph(&[]).is_err());
        assert!(g.is_connected());
        assert!(LGraph::single(r2(), 0).is_connected());
        // two disjoint weight-1 edges
        let two = LGraph::new(
            r2(),
            vec![0, 0, 0, 0],
            &[(0, 1, r2().integer(1)), (2, 3, r2().integer(1))],
        )
        .unwrap();
        assert!(!two.is_connected());
        assert_eq!(two.components(), vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn weighted_degrees() {
        let s2 = LGraph::new(r2(), vec![0, 0], &[(0, 1, r2().integer(2))]).unwrap();
        assert_eq!(s2.weighted_degree(0), 4);
        let e = LGraph::new(r2(), vec![0, 0], &[(0, 1, r2().integer(1))]).unwrap();
        assert_eq!(e.weighted_degree(0), 1);
        // H4: charge + weight-2 edge
        let h4 = LGraph::new(r2(), vec![1, 0], &[(0, 1, r2().root())]).unwrap();
        assert_eq!(h4.weighted_degree(0), 3);
    }

    #[test]
    fn transforms_preserve_spectrum() {
        let g = LGraph::new(
            r2(),
            vec![1, 0, -1],
            &[(0, 1, r2().root()), (1, 2, r2().integer(1)), (0, 2, r2().integer(-1))],
        )
        .unwrap();
        let p = g.char_poly();
        assert_eq!(g.transform(&Action::Switch(1)).char_poly(), p);
        assert_eq!(g.transform(&Action::Conjugate).char_poly(), p);
        assert_eq!(g.transform(&Action::Permute(vec![2, 0, 1])).char_poly(), p);
        // negation reflects x -> -x (n = 3 is odd, so the sign flips)
        let neg = g.transform(&Action::Negate).char_poly();
        assert_eq!(neg, p.reflect().neg());
        // double switch at both endpoints of an edge restores the graph
        let e = h1();
        assert_eq!(e.transform(&Action::Switch(0)).transform(&Action::Switch(1)), e);
    }

    #[test]
    fn hereditary_cyclotomicity_small() {
        // H2 = (+) w (-) is cyclotomic; its subgraphs stay cyclotomic.
        let h2 = LGraph::new(r2(), vec![1, -1], &[(0, 1, r2().root())]).unwrap();
        assert!(is_cyclotomic_spectrum(&h2.char_poly()).unwrap());
        for v in 0..2 {
            assert!(is_cyclotomic_spectrum(&h2.delete_vertex(v).char_poly()).unwrap());
        }
    }
}
