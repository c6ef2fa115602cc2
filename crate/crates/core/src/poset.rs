//! Finite posets given by an explicit comparison, with Hasse diagrams and DOT output.

use std::fmt::Write as _;

/// A finite poset stored as its full order relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset<T> {
    elements: Vec<T>,
    leq: Vec<Vec<bool>>,
}

impl<T> Poset<T> {
    pub fn new(elements: Vec<T>, leq: impl Fn(&T, &T) -> bool) -> Self {
        let rel = elements
            .iter()
            .map(|a| elements.iter().map(|b| leq(a, b)).collect())
            .collect();
        Poset { elements, leq: rel }
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    /// Reflexive, antisymmetric and transitive.
    pub fn is_partial_order(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| self.leq[a][a])
            && (0..n).all(|a| (0..n).all(|b| a == b || !(self.leq[a][b] && self.leq[b][a])))
            && (0..n).all(|a| (0..n).all(|b| !self.leq[a][b] || (0..n).all(|c| !self.leq[b][c] || self.leq[a][c])))
    }

    /// Covering pairs `(a, b)`: `a < b` with nothing strictly between, sorted.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut edges = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.lt(a, b) && !(0..n).any(|c| self.lt(a, c) && self.lt(c, b)) {
                    edges.push((a, b));
                }
            }
        }
        edges
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| !(0..self.len()).any(|b| self.lt(b, a)))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| !(0..self.len()).any(|b| self.lt(a, b)))
            .collect()
    }

    /// Graphviz digraph of the Hasse diagram, edges pointing upwards.
    pub fn to_dot(&self, name: &str, label: impl Fn(&T) -> String) -> String {
        let mut out = format!("digraph \"{name}\" {{\n  rankdir=BT;\n");
        for (i, e) in self.elements.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{}\"];", label(e));
        }
        for (a, b) in self.hasse_edges() {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }
}
