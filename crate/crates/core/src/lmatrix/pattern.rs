//! Form patterns: template graphs constrained only by edge weight and
//! charge wildcards, matched against induced subgraphs.

use super::{upper_idx, upper_len, LGraph};

/// Charge constraint at a pattern vertex.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum ChargeConstraint {
    Exact(i64),
    /// Any charge, including neutral.
    Any,
    /// Charged, either polarity.
    ChargedEither,
}

/// Edge constraint between a pattern vertex pair.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum EdgeConstraint {
    /// No edge in the induced subgraph.
    Absent,
    /// An edge of exactly this norm.
    Weight(i64),
    /// An edge of any nonzero weight.
    AnyNonzero,
    /// Unspecified: possibly absent, possibly any edge.
    Unspecified,
}

/// A small template graph; `edges` is the packed upper triangle.
#[derive(Clone, Debug)]
pub struct FormPattern {
    pub name: &'static str,
    pub charges: Vec<ChargeConstraint>,
    pub edges: Vec<EdgeConstraint>,
}

impl FormPattern {
    pub fn new(name: &'static str, charges: Vec<ChargeConstraint>, edge_list: &[(usize, usize, EdgeConstraint)]) -> FormPattern {
        let n = charges.len();
        let mut edges = vec![EdgeConstraint::Absent; upper_len(n)];
        for &(i, j, c) in edge_list {
            assert!(i < j && j < n);
            edges[upper_idx(n, i, j)] = c;
        }
        FormPattern { name, charges, edges }
    }

    pub fn n(&self) -> usize {
        self.charges.len()
    }

    fn edge(&self, i: usize, j: usize) -> EdgeConstraint {
        debug_assert!(i != j);
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        self.edges[upper_idx(self.n(), a, b)]
    }
}

fn charge_ok(c: ChargeConstraint, charge: i64) -> bool {
    match c {
        ChargeConstraint::Exact(v) => charge == v,
        ChargeConstraint::Any => true,
        ChargeConstraint::ChargedEither => charge != 0,
    }
}

fn edge_ok(c: EdgeConstraint, norm: i64) -> bool {
    match c {
        EdgeConstraint::Absent => norm == 0,
        EdgeConstraint::Weight(w) => norm == w,
        EdgeConstraint::AnyNonzero => norm != 0,
        EdgeConstraint::Unspecified => true,
    }
}

/// Backtracking search for an injection of the pattern into the graph
/// satisfying every charge and weight constraint.
pub(crate) fn find_injection(g: &LGraph, pat: &FormPattern) -> Option<Vec<usize>> {
    let pn = pat.n();
    if pn > g.n() {
        return None;
    }
    let mut assign: Vec<usize> = Vec::with_capacity(pn);
    let mut used = vec![false; g.n()];
    fn rec(
        g: &LGraph,
        pat: &FormPattern,
        assign: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let k = assign.len();
        if k == pat.n() {
            return true;
        }
        for v in 0..g.n() {
            if used[v] || !charge_ok(pat.charges[k], g.charge(v)) {
                continue;
            }
            let mut ok = true;
            for (p, &gv) in assign.iter().enumerate() {
                if !edge_ok(pat.edge(p, k), g.entry(gv, v).norm()) {
                    ok = false;
                    break;
                }
            }
            if ok {
                assign.push(v);
                used[v] = true;
                if rec(g, pat, assign, used) {
                    return true;
                }
                assign.pop();
                used[v] = false;
            }
        }
        false
    }
    if rec(g, pat, &mut assign, &mut used) {
        Some(assign)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadint::ring_make;

    #[test]
    fn pattern_matching_examples() {
        let r = ring_make(-2).unwrap();
        // X2: charged vertex on a weight-2 edge, other end any charge.
        let x2 = FormPattern::new(
            "X2",
            vec![ChargeConstraint::ChargedEither, ChargeConstraint::Any],
            &[(0, 1, EdgeConstraint::Weight(2))],
        );
        // H4 = (+) w (.) matches X2
        let h4 = LGraph::new(r, vec![1, 0], &[(0, 1, r.root())]).unwrap();
        assert!(h4.contains_form(&x2).is_some());
        // S2 (uncharged weight-4 edge) does not
        let s2 = LGraph::new(r, vec![0, 0], &[(0, 1, r.integer(2))]).unwrap();
        assert!(s2.contains_form(&x2).is_none());
        // triangle with weights (2,2,1): X3A
        let x3a = FormPattern::new(
            "X3A",
            vec![ChargeConstraint::Exact(0); 3],
            &[
                (0, 1, EdgeConstraint::Weight(2)),
                (1, 2, EdgeConstraint::Weight(2)),
                (0, 2, EdgeConstraint::Weight(1)),
            ],
        );
        let tri = LGraph::new(
            r,
            vec![0, 0, 0],
            &[(0, 1, r.root()), (1, 2, r.root()), (0, 2, r.integer(1))],
        )
        .unwrap();
        let witness = tri.contains_form(&x3a).unwrap();
        assert_eq!(witness.len(), 3);
        // and an absent-edge constraint is enforced: path of two w2 edges
        // with NO closing w1 edge must not match X3A
        let path = LGraph::new(r, vec![0, 0, 0], &[(0, 1, r.root()), (1, 2, r.root())]).unwrap();
        assert!(path.contains_form(&x3a).is_none());
    }
}
