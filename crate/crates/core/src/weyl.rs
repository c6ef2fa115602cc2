//! Weyl group elements as integer matrices on the simple-root basis.
//!
//! Column `j` of an element's matrix holds the coordinates of `w(alpha_j)`.
//! Everything here is exact; lengths, descents and Bruhat comparisons are read
//! off the matrix directly, so no multiplication table is needed.

use std::collections::{HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::root_system::{RootSystem, RootVector};

/// Largest rank an element can carry.
pub const MAX_RANK: usize = 8;
const STRIDE: usize = MAX_RANK;

/// An element of a Weyl group, stored as its matrix on the simple roots.
///
/// Ordering is lexicographic on the row-major matrix entries.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    rank: u8,
    m: [i8; STRIDE * STRIDE],
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        assert!(rank <= MAX_RANK, "rank {rank} exceeds {MAX_RANK}");
        let mut m = [0i8; STRIDE * STRIDE];
        for i in 0..rank {
            m[i * STRIDE + i] = 1;
        }
        WeylElement { rank: rank as u8, m }
    }

    /// Builds an element from its rows. The caller vouches that it lies in a Weyl group;
    /// see [`WeylGroup::element_from_matrix`] for a checked version.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let mut w = WeylElement::identity(rows.len());
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), rows.len());
            for (c, &x) in row.iter().enumerate() {
                w.m[r * STRIDE + c] = i8::try_from(x).expect("matrix entry out of range");
            }
        }
        w
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> i64 {
        i64::from(self.m[r * STRIDE + c])
    }

    #[inline]
    fn set(&mut self, r: usize, c: usize, x: i64) {
        self.m[r * STRIDE + c] = x as i8;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        (0..n).map(|r| (0..n).map(|c| self.get(r, c)).collect()).collect()
    }

    /// `w(alpha_c)` for `c` in `0..n`.
    pub fn column(&self, c: usize) -> RootVector {
        RootVector((0..self.rank()).map(|r| self.get(r, c)).collect())
    }

    pub fn is_identity(&self) -> bool {
        *self == WeylElement::identity(self.rank())
    }

    /// Matrix product `self * other`, i.e. the composite "apply `other`, then `self`".
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.rank();
        debug_assert_eq!(n, other.rank());
        let mut out = WeylElement::identity(n);
        for r in 0..n {
            for c in 0..n {
                let mut s = 0i64;
                for k in 0..n {
                    s += self.get(r, k) * other.get(k, c);
                }
                out.set(r, c, s);
            }
        }
        out
    }

    pub fn act(&self, v: &RootVector) -> RootVector {
        let n = self.rank();
        RootVector((0..n).map(|r| (0..n).map(|c| self.get(r, c) * v.0[c]).sum()).collect())
    }

    pub fn is_involution(&self) -> bool {
        self.compose(self).is_identity()
    }

    /// Heights of the images of the simple roots.
    #[inline]
    fn column_heights(&self) -> [i64; MAX_RANK] {
        let mut h = [0i64; MAX_RANK];
        let n = self.rank();
        for r in 0..n {
            for (c, hc) in h.iter_mut().enumerate().take(n) {
                *hc += self.get(r, c);
            }
        }
        h
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement{:?}", self.rows())
    }
}

/// A Weyl group, given by its root system. Elements are plain values; all
/// operations that need the Cartan data go through this context.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    sys: RootSystem,
    /// For each simple index `i`, the `j != i` with `cartan[i][j] != 0`, with that entry.
    neighbors: Vec<Vec<(usize, i64)>>,
    reflections: Vec<WeylElement>,
}

impl WeylGroup {
    pub fn new(sys: &RootSystem) -> Self {
        let n = sys.rank();
        assert!(n <= MAX_RANK);
        let neighbors = (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| j != i && sys.cartan()[i][j] != 0)
                    .map(|j| (j, sys.cartan()[i][j]))
                    .collect()
            })
            .collect();
        let mut group = WeylGroup {
            sys: sys.clone(),
            neighbors,
            reflections: Vec::new(),
        };
        group.reflections = sys.positive_roots().iter().map(|b| group.reflection(b)).collect();
        group
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.sys
    }

    pub fn rank(&self) -> usize {
        self.sys.rank()
    }

    pub fn order(&self) -> usize {
        self.sys.cartan_type().weyl_order()
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::identity(self.rank())
    }

    /// `s_i` for `i` in `1..=n`.
    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        assert!((1..=self.rank()).contains(&i), "simple index {i} out of range");
        self.mul_simple(&self.identity(), i - 1)
    }

    /// The reflection `t_beta(v) = v - <beta^vee, v> beta`.
    pub fn reflection(&self, beta: &RootVector) -> WeylElement {
        let n = self.rank();
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        let alpha = self.sys.simple_root(c + 1);
                        let image = alpha.add_scaled(-self.sys.pairing(beta, &alpha), beta);
                        image.0[r]
                    })
                    .collect()
            })
            .collect();
        WeylElement::from_rows(&rows)
    }

    /// All reflections, indexed like the positive roots.
    pub fn reflections(&self) -> &[WeylElement] {
        &self.reflections
    }

    pub fn compose(&self, u: &WeylElement, w: &WeylElement) -> WeylElement {
        u.compose(w)
    }

    pub fn act(&self, w: &WeylElement, v: &RootVector) -> RootVector {
        w.act(v)
    }

    /// `w s_i` with `i` zero-based.
    #[inline]
    pub(crate) fn mul_simple(&self, w: &WeylElement, i: usize) -> WeylElement {
        let n = self.rank();
        let mut out = *w;
        for r in 0..n {
            out.set(r, i, -w.get(r, i));
        }
        for &(j, a) in &self.neighbors[i] {
            for r in 0..n {
                out.set(r, j, w.get(r, j) - a * w.get(r, i));
            }
        }
        out
    }

    /// `s_i w` with `i` zero-based.
    #[inline]
    pub(crate) fn simple_mul(&self, i: usize, w: &WeylElement) -> WeylElement {
        let n = self.rank();
        let mut out = *w;
        for c in 0..n {
            let mut x = -w.get(i, c);
            for &(j, a) in &self.neighbors[i] {
                x -= a * w.get(j, c);
            }
            out.set(i, c, x);
        }
        out
    }

    /// `s_i w s_i` with `i` zero-based.
    #[inline]
    pub(crate) fn conjugate_simple(&self, i: usize, w: &WeylElement) -> WeylElement {
        self.simple_mul(i, &self.mul_simple(w, i))
    }

    /// Zero-based right descents: `i` with `w(alpha_i) < 0`.
    pub fn right_descents(&self, w: &WeylElement) -> Vec<usize> {
        let h = w.column_heights();
        (0..self.rank()).filter(|&i| h[i] < 0).collect()
    }

    #[inline]
    fn first_right_descent(&self, w: &WeylElement) -> Option<usize> {
        let h = w.column_heights();
        (0..self.rank()).find(|&i| h[i] < 0)
    }

    #[inline]
    fn is_right_descent(&self, w: &WeylElement, i: usize) -> bool {
        (0..self.rank()).map(|r| w.get(r, i)).sum::<i64>() < 0
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, w: &WeylElement) -> usize {
        let h = w.column_heights();
        let n = self.rank();
        self.sys
            .positive_roots()
            .iter()
            .filter(|b| (0..n).map(|c| h[c] * b.0[c]).sum::<i64>() < 0)
            .count()
    }

    /// `rk(1 - w)` over the rationals.
    pub fn reflection_rank(&self, w: &WeylElement) -> usize {
        linalg::rank(&linalg::mat_sub(&linalg::identity(self.rank()), &w.rows()))
    }

    /// Minimal number of reflections whose product is `w`, by breadth-first search.
    pub fn absolute_length(&self, w: &WeylElement) -> usize {
        if w.is_identity() {
            return 0;
        }
        let mut seen: HashSet<WeylElement> = HashSet::from([*w]);
        let mut frontier = vec![*w];
        let mut depth = 0;
        loop {
            depth += 1;
            let mut next = Vec::new();
            for x in &frontier {
                for t in &self.reflections {
                    let y = x.compose(t);
                    if y.is_identity() {
                        return depth;
                    }
                    if seen.insert(y) {
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
    }

    /// Reduced word (one-based simple indices), canonical: built by always stripping the
    /// smallest right descent.
    pub fn reduced_word(&self, w: &WeylElement) -> Vec<usize> {
        let mut word = Vec::new();
        let mut x = *w;
        while let Some(i) = self.first_right_descent(&x) {
            word.push(i + 1);
            x = self.mul_simple(&x, i);
        }
        word.reverse();
        word
    }

    /// Product `s_{i_1} ... s_{i_k}` of a word of one-based indices.
    pub fn from_word(&self, word: &[usize]) -> WeylElement {
        word.iter().fold(self.identity(), |x, &i| self.mul_simple(&x, i - 1))
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let mut word = self.reduced_word(w);
        word.reverse();
        self.from_word(&word)
    }

    /// Checks that a matrix permutes the root set before accepting it as an element.
    pub fn element_from_matrix(&self, rows: &[Vec<i64>]) -> Result<WeylElement> {
        let n = self.rank();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Precondition(format!("expected a {n}x{n} matrix")));
        }
        if rows.iter().flatten().any(|x| x.abs() > 127) {
            return Err(Error::Precondition("entry out of range".into()));
        }
        let w = WeylElement::from_rows(rows);
        let images: HashSet<RootVector> = self.sys.roots().iter().map(|r| w.act(r)).collect();
        if images.len() != self.sys.roots().len() || !images.iter().all(|r| self.sys.is_root(r)) {
            return Err(Error::Precondition("matrix does not permute the roots".into()));
        }
        Ok(w)
    }

    /// Longest element of the parabolic subgroup generated by the simple reflections
    /// whose zero-based indices are set in `mask`.
    pub fn longest_parabolic(&self, mask: u32) -> WeylElement {
        let mut w = self.identity();
        'grow: loop {
            for i in 0..self.rank() {
                if mask >> i & 1 == 1 && !self.is_right_descent(&w, i) {
                    w = self.mul_simple(&w, i);
                    continue 'grow;
                }
            }
            return w;
        }
    }

    /// The longest element `w_0`.
    pub fn longest(&self) -> WeylElement {
        self.longest_parabolic((1u32 << self.rank()) - 1)
    }

    /// Bruhat order, by descent recursion: for a right descent `s` of `w`,
    /// `u <= w` iff `min(u, us) <= ws`.
    pub fn bruhat_leq(&self, u: &WeylElement, w: &WeylElement) -> bool {
        let (mut u, mut w) = (*u, *w);
        loop {
            let Some(i) = self.first_right_descent(&w) else {
                return u.is_identity();
            };
            if self.is_right_descent(&u, i) {
                u = self.mul_simple(&u, i);
            }
            w = self.mul_simple(&w, i);
        }
    }

    fn check_budget(&self, needed: usize, budget: usize) -> Result<()> {
        if needed > budget {
            Err(Error::BudgetExceeded { needed, budget })
        } else {
            Ok(())
        }
    }

    /// All elements, grouped by length (ascending) and sorted within each length.
    pub fn elements(&self, budget: usize) -> Result<Vec<WeylElement>> {
        self.check_budget(self.order(), budget)?;
        let mut all = vec![self.identity()];
        let mut layer = vec![self.identity()];
        while !layer.is_empty() {
            let next: HashSet<WeylElement> = layer
                .par_iter()
                .flat_map_iter(|w| {
                    (0..self.rank())
                        .filter(|&i| !self.is_right_descent(w, i))
                        .map(|i| self.mul_simple(w, i))
                        .collect::<Vec<_>>()
                })
                .collect();
            let mut next: Vec<WeylElement> = next.into_iter().collect();
            next.sort_unstable();
            all.extend_from_slice(&next);
            layer = next;
        }
        debug_assert_eq!(all.len(), self.order());
        Ok(all)
    }

    /// Absolute length of every element, by one breadth-first search over reflections.
    pub fn absolute_lengths(&self, budget: usize) -> Result<HashMap<WeylElement, usize>> {
        self.check_budget(self.order(), budget)?;
        let mut dist: HashMap<WeylElement, usize> = HashMap::from([(self.identity(), 0)]);
        let mut frontier = vec![self.identity()];
        let mut depth = 0;
        while !frontier.is_empty() {
            depth += 1;
            let candidates: Vec<WeylElement> = frontier
                .par_iter()
                .flat_map_iter(|x| self.reflections.iter().map(move |t| x.compose(t)))
                .collect();
            let mut next = Vec::new();
            for y in candidates {
                if let std::collections::hash_map::Entry::Vacant(e) = dist.entry(y) {
                    e.insert(depth);
                    next.push(y);
                }
            }
            frontier = next;
        }
        Ok(dist)
    }

    /// Conjugacy class of `w`, closed under conjugation by simple reflections.
    pub fn conjugacy_class(&self, w: &WeylElement, budget: usize) -> Result<ConjClass> {
        let mut seen: HashSet<WeylElement> = HashSet::from([*w]);
        let mut stack = vec![*w];
        while let Some(x) = stack.pop() {
            for i in 0..self.rank() {
                let y = self.conjugate_simple(i, &x);
                if seen.insert(y) {
                    if seen.len() > budget {
                        return Err(Error::BudgetExceeded {
                            needed: seen.len(),
                            budget,
                        });
                    }
                    stack.push(y);
                }
            }
        }
        Ok(self.class_from_elements(seen.into_iter().collect()))
    }

    fn class_from_elements(&self, elements: Vec<WeylElement>) -> ConjClass {
        let mut tagged: Vec<(usize, WeylElement)> = elements.into_par_iter().map(|x| (self.length(&x), x)).collect();
        tagged.sort_unstable();
        let min_length = tagged.first().map_or(0, |t| t.0);
        let max_length = tagged.last().map_or(0, |t| t.0);
        let c_min: Vec<WeylElement> = tagged.iter().filter(|t| t.0 == min_length).map(|t| t.1).collect();
        let c_max: Vec<WeylElement> = tagged.iter().filter(|t| t.0 == max_length).map(|t| t.1).collect();
        let unique_max_length = c_max.len() == 1;
        let bruhat_maximum = unique_max_length && tagged.par_iter().all(|(_, x)| self.bruhat_leq(x, &c_max[0]));
        let maximum = bruhat_maximum.then(|| c_max[0]);
        let (lengths, elements) = tagged.into_iter().unzip();
        ConjClass {
            elements,
            lengths,
            c_min,
            c_max,
            maximum,
            unique_max_length,
        }
    }

    /// All conjugacy classes, sorted by (minimal length, smallest minimal element).
    pub fn conjugacy_classes(&self, budget: usize) -> Result<Vec<ConjClass>> {
        let elements = self.elements(budget)?;
        let mut classes = self.partition_into_classes(elements, budget)?;
        classes.sort_by(|a, b| (a.min_length(), &a.c_min()[0]).cmp(&(b.min_length(), &b.c_min()[0])));
        Ok(classes)
    }

    fn partition_into_classes(&self, elements: Vec<WeylElement>, budget: usize) -> Result<Vec<ConjClass>> {
        let mut remaining: HashSet<WeylElement> = elements.iter().copied().collect();
        let mut classes = Vec::new();
        for w in elements {
            if !remaining.contains(&w) {
                continue;
            }
            let class = self.conjugacy_class(&w, budget)?;
            for x in class.elements() {
                remaining.remove(x);
            }
            classes.push(class);
        }
        Ok(classes)
    }

    /// All elements with `w^2 = 1`.
    pub fn involutions(&self, budget: usize) -> Result<Vec<WeylElement>> {
        Ok(self
            .elements(budget)?
            .into_par_iter()
            .filter(WeylElement::is_involution)
            .collect())
    }

    /// Conjugacy classes of involutions (identity class included), sorted by the
    /// dimension quantity `l + rk(1 - w)` of their maximal-length elements, then by
    /// maximal length, then by the smallest maximal-length element.
    pub fn involution_classes(&self, budget: usize) -> Result<Vec<ConjClass>> {
        let involutions = self.involutions(budget)?;
        let mut classes = self.partition_into_classes(involutions, budget)?;
        let key = |c: &ConjClass| {
            let m = c.c_max()[0];
            (c.max_length() + self.reflection_rank(&m), c.max_length(), m)
        };
        classes.sort_by_cached_key(key);
        Ok(classes)
    }

    pub fn export_class(&self, class: &ConjClass) -> ConjClassExport {
        ConjClassExport {
            size: class.len(),
            min_length: class.min_length(),
            max_length: class.max_length(),
            has_maximum: class.maximum().is_some(),
            maximum_word: class.maximum().map(|m| self.reduced_word(m)),
        }
    }
}

/// A conjugacy class of a Weyl group with its extremal-length elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjClass {
    /// Sorted by (length, matrix).
    elements: Vec<WeylElement>,
    lengths: Vec<usize>,
    c_min: Vec<WeylElement>,
    c_max: Vec<WeylElement>,
    maximum: Option<WeylElement>,
    unique_max_length: bool,
}

impl ConjClass {
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, w: &WeylElement) -> bool {
        self.elements.contains(w)
    }

    pub fn c_min(&self) -> &[WeylElement] {
        &self.c_min
    }

    pub fn c_max(&self) -> &[WeylElement] {
        &self.c_max
    }

    pub fn min_length(&self) -> usize {
        self.lengths.first().copied().unwrap_or(0)
    }

    pub fn max_length(&self) -> usize {
        self.lengths.last().copied().unwrap_or(0)
    }

    /// The Bruhat-greatest element, when the maximal-length element is unique and
    /// dominates the whole class.
    pub fn maximum(&self) -> Option<&WeylElement> {
        self.maximum.as_ref()
    }

    pub fn has_unique_max_length(&self) -> bool {
        self.unique_max_length
    }

    /// True when the maximal-length element is unique but fails to dominate the class.
    pub fn maximum_discrepancy(&self) -> bool {
        self.unique_max_length && self.maximum.is_none()
    }
}

/// JSON shape of an exported conjugacy class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjClassExport {
    pub size: usize,
    pub min_length: usize,
    pub max_length: usize,
    pub has_maximum: bool,
    pub maximum_word: Option<Vec<usize>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::Family;

    fn group(f: Family, n: usize) -> WeylGroup {
        WeylGroup::new(&RootSystem::of(f, n).unwrap())
    }

    /// Every element below `w` obtained from subwords of a fixed reduced word.
    fn subword_ideal(g: &WeylGroup, w: &WeylElement) -> HashSet<WeylElement> {
        let word = g.reduced_word(w);
        (0u32..1 << word.len())
            .map(|mask| {
                let sub: Vec<usize> = word
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &i)| i)
                    .collect();
                g.from_word(&sub)
            })
            .collect()
    }

    #[test]
    fn simple_reflections_and_action() {
        let a1 = group(Family::A, 1);
        let s1 = a1.simple_reflection(1);
        assert!(s1.compose(&s1).is_identity());

        let a2 = group(Family::A, 2);
        let s1 = a2.simple_reflection(1);
        assert_eq!(s1.act(&RootVector(vec![0, 1])), RootVector(vec![1, 1]));
        let v = RootVector(vec![3, -2]);
        assert_eq!(a2.identity().act(&v), v);
    }

    #[test]
    fn lengths_of_longest_elements() {
        let g = group(Family::B, 2);
        assert_eq!(g.length(&g.identity()), 0);
        assert_eq!(g.length(&g.longest()), 4);
        let g = group(Family::D, 4);
        assert_eq!(g.length(&g.longest()), 12);
        assert_eq!(g.reflection_rank(&g.longest()), 4);
        assert_eq!(
            g.longest(),
            WeylElement::from_rows(
                &(0..4)
                    .map(|r| (0..4).map(|c| if r == c { -1 } else { 0 }).collect())
                    .collect::<Vec<_>>()
            )
        );
    }

    #[test]
    fn absolute_length_small_cases() {
        let g = group(Family::B, 2);
        assert_eq!(g.absolute_length(&g.identity()), 0);
        assert_eq!(g.absolute_length(&g.longest()), 2);
        for t in g.reflections() {
            assert_eq!(g.absolute_length(t), 1);
            assert_eq!(g.reflection_rank(t), 1);
        }
        let a3 = group(Family::A, 3);
        assert_eq!(a3.reflection_rank(&a3.simple_reflection(2)), 1);
    }

    #[test]
    fn length_equals_reduced_word_length() {
        for (f, n) in [(Family::A, 3), (Family::B, 3), (Family::G, 2), (Family::D, 4)] {
            let g = group(f, n);
            for w in g.elements(usize::MAX).unwrap() {
                let word = g.reduced_word(&w);
                assert_eq!(word.len(), g.length(&w));
                assert_eq!(g.from_word(&word), w);
                assert!(g.inverse(&w).compose(&w).is_identity());
            }
        }
    }

    #[test]
    fn element_counts() {
        for (f, n, order) in [
            (Family::A, 3, 24),
            (Family::B, 3, 48),
            (Family::G, 2, 12),
            (Family::F, 4, 1152),
        ] {
            assert_eq!(group(f, n).elements(usize::MAX).unwrap().len(), order);
        }
        let g = group(Family::E, 6);
        assert_eq!(
            g.elements(1000),
            Err(Error::BudgetExceeded {
                needed: 51_840,
                budget: 1000
            })
        );
    }

    #[test]
    fn bruhat_order_on_a2_matches_subwords() {
        let g = group(Family::A, 2);
        let elements = g.elements(usize::MAX).unwrap();
        let mut related = 0;
        for w in &elements {
            let ideal = subword_ideal(&g, w);
            for u in &elements {
                assert_eq!(g.bruhat_leq(u, w), ideal.contains(u));
                related += usize::from(ideal.contains(u));
            }
        }
        assert_eq!(related, 19);
        let s1 = g.simple_reflection(1);
        assert!(g.bruhat_leq(&s1, &g.from_word(&[1, 2, 1])));
    }

    #[test]
    fn bruhat_order_matches_subwords_in_rank_three() {
        for (f, n) in [(Family::A, 3), (Family::B, 3), (Family::C, 3), (Family::G, 2)] {
            let g = group(f, n);
            let elements = g.elements(usize::MAX).unwrap();
            for w in &elements {
                let ideal = subword_ideal(&g, w);
                for u in &elements {
                    assert_eq!(g.bruhat_leq(u, w), ideal.contains(u), "{f:?}{n}");
                }
            }
        }
    }

    #[test]
    fn bruhat_is_a_partial_order() {
        for (f, n) in [(Family::A, 3), (Family::B, 3), (Family::G, 2)] {
            let g = group(f, n);
            let el = g.elements(usize::MAX).unwrap();
            let k = el.len();
            let rel: Vec<Vec<bool>> = el
                .iter()
                .map(|u| el.iter().map(|w| g.bruhat_leq(u, w)).collect())
                .collect();
            for a in 0..k {
                assert!(rel[a][a]);
                for b in 0..k {
                    if a != b {
                        assert!(!(rel[a][b] && rel[b][a]));
                    }
                    if rel[a][b] {
                        for c in 0..k {
                            if rel[b][c] {
                                assert!(rel[a][c]);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn conjugacy_classes_in_a2() {
        let g = group(Family::A, 2);
        let s1 = g.simple_reflection(1);
        let s2 = g.simple_reflection(2);
        let w0 = g.from_word(&[1, 2, 1]);
        let c = g.conjugacy_class(&s1, usize::MAX).unwrap();
        assert_eq!(c.len(), 3);
        let mut cmin = [s1, s2];
        cmin.sort();
        assert_eq!(c.c_min(), &cmin[..]);
        assert_eq!(c.c_max(), &[w0]);
        assert_eq!(c.maximum(), Some(&w0));

        let cox = g.from_word(&[1, 2]);
        let c = g.conjugacy_class(&cox, usize::MAX).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.c_max().len(), 2);
        assert!(c.maximum().is_none());
        assert!(!c.maximum_discrepancy());
    }

    #[test]
    fn w0_is_central_in_d4() {
        let g = group(Family::D, 4);
        let c = g.conjugacy_class(&g.longest(), usize::MAX).unwrap();
        assert_eq!(c.elements(), &[g.longest()]);
        assert_eq!(c.maximum(), Some(&g.longest()));
    }

    #[test]
    fn class_budget_is_enforced() {
        let g = group(Family::A, 4);
        let t = g.simple_reflection(1);
        assert!(matches!(g.conjugacy_class(&t, 5), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn simple_conjugation_agrees_with_full_conjugation() {
        for (f, n) in [(Family::A, 3), (Family::B, 3), (Family::G, 2)] {
            let g = group(f, n);
            let el = g.elements(usize::MAX).unwrap();
            for w in el.iter().step_by(3) {
                let full: HashSet<WeylElement> = el.iter().map(|x| x.compose(w).compose(&g.inverse(x))).collect();
                let bfs: HashSet<WeylElement> = g
                    .conjugacy_class(w, usize::MAX)
                    .unwrap()
                    .elements()
                    .iter()
                    .copied()
                    .collect();
                assert_eq!(full, bfs);
            }
        }
    }

    #[test]
    fn involution_class_counts() {
        let count = |f, n| group(f, n).involution_classes(usize::MAX).unwrap().len();
        assert_eq!(count(Family::A, 1), 2);
        assert_eq!(count(Family::A, 2), 2);
        assert_eq!(count(Family::A, 3), 3);
        let a3 = group(Family::A, 3).involution_classes(usize::MAX).unwrap();
        let mut sizes: Vec<usize> = a3.iter().map(ConjClass::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 6]);
    }

    #[test]
    fn element_from_matrix_rejects_non_elements() {
        let g = group(Family::A, 2);
        assert!(g.element_from_matrix(&[vec![2, 0], vec![0, 1]]).is_err());
        let s1 = g.simple_reflection(1);
        assert_eq!(g.element_from_matrix(&s1.rows()).unwrap(), s1);
    }

    #[test]
    fn whole_group_absolute_lengths_match_single_element_search() {
        let g = group(Family::B, 3);
        let all = g.absolute_lengths(usize::MAX).unwrap();
        assert_eq!(all.len(), 48);
        for (w, &d) in &all {
            assert_eq!(g.absolute_length(w), d);
        }
    }
}
