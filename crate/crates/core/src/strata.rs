//! The subsets 𝒯 and ℳ of the simple roots and the spherical strata they index.
//!
//! For `Π ⊂ Δ`, `w_Π` is the longest element of the parabolic subgroup `W_Π`.
//! `Π ∈ 𝒯` when `w_0` and `w_Π` agree on every root supported in `Π`, and
//! `Π ∈ ℳ` when moreover `w_0 w_Π` is the Bruhat maximum of its conjugacy class.
//! Each `Π ∈ ℳ` gives one stratum with top element `m_C = w_0 w_Π`; an involution
//! class joins the stratum of `w_0 w_{M_Σ}` where `w_0 w_Σ` is one of its
//! maximal-length elements.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::root_system::RootSystem;
use crate::weyl::{ConjClass, WeylElement, WeylGroup};

/// A subset of the simple roots with the longest element of its parabolic subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TSubset {
    mask: u32,
    w_pi: WeylElement,
    in_m: Option<bool>,
}

impl TSubset {
    /// Bit `i-1` is set for `alpha_i`.
    pub fn mask(&self) -> u32 {
        self.mask
    }

    /// One-based simple-root indices.
    pub fn pi(&self) -> Vec<usize> {
        mask_indices(self.mask)
    }

    pub fn w_pi(&self) -> &WeylElement {
        &self.w_pi
    }

    /// Membership in ℳ, once the class scan has run.
    pub fn in_m(&self) -> Option<bool> {
        self.in_m
    }

    pub fn contains(&self, other: &TSubset) -> bool {
        other.mask & !self.mask == 0
    }
}

fn mask_indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

fn subset_order(a: u32, b: u32) -> std::cmp::Ordering {
    (a.count_ones(), mask_indices(a)).cmp(&(b.count_ones(), mask_indices(b)))
}

/// Whether `w_0` and `w_Π` agree on every root of `Φ_Π`.
fn in_t(sys: &RootSystem, group: &WeylGroup, w0: &WeylElement, w_pi: &WeylElement, mask: u32) -> bool {
    sys.parabolic_roots(mask)
        .iter()
        .all(|a| group.act(w0, a) == group.act(w_pi, a))
}

/// All `Π ∈ 𝒯`, ordered by size and then by index list. Membership in ℳ is left open.
pub fn compute_t(sys: &RootSystem) -> Vec<TSubset> {
    let group = WeylGroup::new(sys);
    t_with_group(sys, &group)
}

fn t_with_group(sys: &RootSystem, group: &WeylGroup) -> Vec<TSubset> {
    let w0 = group.longest();
    let mut t: Vec<TSubset> = (0u32..1 << sys.rank())
        .filter_map(|mask| {
            let w_pi = group.longest_parabolic(mask);
            in_t(sys, group, &w0, &w_pi, mask).then_some(TSubset { mask, w_pi, in_m: None })
        })
        .collect();
    t.sort_by(|a, b| subset_order(a.mask, b.mask));
    t
}

/// The members of ℳ.
pub fn compute_m(sys: &RootSystem, budget: usize) -> Result<Vec<TSubset>> {
    Ok(StrataAnalysis::new(sys, budget)?
        .t()
        .iter()
        .filter(|t| t.in_m == Some(true))
        .cloned()
        .collect())
}

/// `ℓ(w) + rk(1 - w)` for an involution `w`.
pub fn dimension_formula(group: &WeylGroup, w: &WeylElement) -> Result<usize> {
    if !w.is_involution() {
        return Err(Error::NotAnInvolution);
    }
    Ok(group.length(w) + group.reflection_rank(w))
}

/// One spherical stratum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumDescriptor {
    pub m_c: WeylElement,
    pub dim_spherical: usize,
    /// The involution classes making up the stratum.
    pub w_union: Vec<ConjClass>,
    /// The `Π ∈ ℳ` with `m_C = w_0 w_Π`, one-based.
    pub m_set_rep: Vec<usize>,
}

/// JSON shape of a stratum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StratumExport {
    pub m_word: Vec<usize>,
    pub dim: usize,
    pub classes: Vec<StratumClassExport>,
    pub pi: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StratumClassExport {
    pub size: usize,
    pub max_word: Vec<usize>,
}

/// Where an involution class lands, read off each of its maximal-length elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassAssignment {
    /// For each element of `C_max`: the `Σ ∈ 𝒯` with that element equal to `w_0 w_Σ`, if any.
    pub sigmas: Vec<Option<u32>>,
    /// `w_0 w_{M_Σ}` for each recognised `Σ`.
    pub keys: Vec<WeylElement>,
}

impl ClassAssignment {
    /// The common key, when every `C_max` element was recognised and all keys agree.
    pub fn key(&self) -> Option<&WeylElement> {
        let first = self.keys.first()?;
        (self.sigmas.iter().all(Option::is_some) && self.keys.iter().all(|k| k == first)).then_some(first)
    }
}

/// Everything computed about 𝒯, ℳ and the strata of one Weyl group.
#[derive(Debug, Clone)]
pub struct StrataAnalysis {
    sys: RootSystem,
    group: WeylGroup,
    w0: WeylElement,
    t: Vec<TSubset>,
    /// Class of `w_0 w_Π`, parallel to `t`.
    t_classes: Vec<ConjClass>,
    involution_classes: Vec<ConjClass>,
    assignments: Vec<ClassAssignment>,
}

impl StrataAnalysis {
    pub fn new(sys: &RootSystem, budget: usize) -> Result<Self> {
        let group = WeylGroup::new(sys);
        if group.order() > budget {
            return Err(Error::BudgetExceeded {
                needed: group.order(),
                budget,
            });
        }
        let w0 = group.longest();
        let mut t = t_with_group(sys, &group);
        let t_classes: Vec<ConjClass> = t
            .par_iter()
            .map(|p| group.conjugacy_class(&w0.compose(&p.w_pi), budget))
            .collect::<Result<_>>()?;
        for (p, class) in t.iter_mut().zip(&t_classes) {
            let sigma = w0.compose(&p.w_pi);
            p.in_m = Some(class.maximum() == Some(&sigma));
        }
        let involution_classes = group.involution_classes(budget)?;
        let mut analysis = StrataAnalysis {
            sys: sys.clone(),
            group,
            w0,
            t,
            t_classes,
            involution_classes,
            assignments: Vec::new(),
        };
        analysis.assignments = analysis.involution_classes.iter().map(|c| analysis.assign(c)).collect();
        Ok(analysis)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.sys
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn w0(&self) -> &WeylElement {
        &self.w0
    }

    pub fn t(&self) -> &[TSubset] {
        &self.t
    }

    pub fn m(&self) -> Vec<&TSubset> {
        self.t.iter().filter(|p| p.in_m == Some(true)).collect()
    }

    pub fn involution_classes(&self) -> &[ConjClass] {
        &self.involution_classes
    }

    pub fn assignments(&self) -> &[ClassAssignment] {
        &self.assignments
    }

    /// The entry of 𝒯 with the given one-based indices.
    pub fn t_subset(&self, pi: &[usize]) -> Result<&TSubset> {
        let mask = pi.iter().fold(0u32, |m, &i| m | 1 << (i - 1));
        self.find(mask)
            .ok_or_else(|| Error::Precondition(format!("{pi:?} is not in T")))
    }

    fn find(&self, mask: u32) -> Option<&TSubset> {
        self.t.iter().find(|p| p.mask == mask)
    }

    /// `M_Π`: `Π` itself when `Π ∈ ℳ`, otherwise the largest member of ℳ inside `Π`.
    pub fn m_pi(&self, pi: &TSubset) -> Result<&TSubset> {
        let pi = self
            .find(pi.mask)
            .ok_or_else(|| Error::Precondition(format!("{:?} is not in T", pi.pi())))?;
        if pi.in_m == Some(true) {
            return Ok(pi);
        }
        let below: Vec<&TSubset> = self
            .t
            .iter()
            .filter(|q| q.in_m == Some(true) && pi.contains(q))
            .collect();
        below
            .iter()
            .find(|q| below.iter().all(|r| q.contains(r)))
            .copied()
            .ok_or_else(|| Error::LemmaViolation(format!("no largest member of M inside {:?}", pi.pi())))
    }

    /// For `Π ∈ 𝒯 ∖ ℳ`: every root of `Π ∖ M_Π` is orthogonal to `Φ_{M_Π}` and to the
    /// other roots of `Π ∖ M_Π`.
    pub fn decomposition_check(&self, pi: &TSubset) -> Result<bool> {
        if self.find(pi.mask).and_then(|p| p.in_m) == Some(true) {
            return Err(Error::Precondition(format!("{:?} is in M", pi.pi())));
        }
        let m = self.m_pi(pi)?;
        let rest = mask_indices(pi.mask & !m.mask);
        let phi_m = self.sys.parabolic_roots(m.mask);
        Ok(rest.iter().all(|&i| {
            let a = self.sys.simple_root(i);
            phi_m.iter().all(|b| self.sys.is_orthogonal(&a, b))
                && rest
                    .iter()
                    .filter(|&&j| j != i)
                    .all(|&j| self.sys.is_orthogonal(&a, &self.sys.simple_root(j)))
        }))
    }

    /// The `Σ ∈ 𝒯` with `sigma = w_0 w_Σ`, if there is one.
    pub fn recognise(&self, sigma: &WeylElement) -> Option<&TSubset> {
        let w_sigma = self.w0.compose(sigma);
        let mask = self
            .group
            .right_descents(&w_sigma)
            .iter()
            .fold(0u32, |m, &i| m | 1 << i);
        self.find(mask).filter(|p| p.w_pi == w_sigma)
    }

    fn assign(&self, class: &ConjClass) -> ClassAssignment {
        let mut sigmas = Vec::new();
        let mut keys = Vec::new();
        for sigma in class.c_max() {
            let found = self.recognise(sigma);
            sigmas.push(found.map(TSubset::mask));
            if let Some(m) = found.and_then(|p| self.m_pi(p).ok()) {
                keys.push(self.w0.compose(&m.w_pi));
            }
        }
        ClassAssignment { sigmas, keys }
    }

    /// `C_max` elements of involution classes that are not of the form `w_0 w_Σ`, `Σ ∈ 𝒯`.
    pub fn cmax_form_violations(&self) -> Vec<WeylElement> {
        self.involution_classes
            .iter()
            .zip(&self.assignments)
            .flat_map(|(c, a)| {
                c.c_max()
                    .iter()
                    .zip(&a.sigmas)
                    .filter(|(_, s)| s.is_none())
                    .map(|(w, _)| *w)
            })
            .collect()
    }

    /// Members of 𝒯 whose class has a unique maximal-length element that is not a Bruhat maximum.
    pub fn maximum_discrepancies(&self) -> Vec<&TSubset> {
        self.t
            .iter()
            .zip(&self.t_classes)
            .filter(|(_, c)| c.maximum_discrepancy())
            .map(|(p, _)| p)
            .collect()
    }

    /// Pairs `(Π, Π')` of 𝒯 where `Π ⊇ Π'` and `w_0 w_Π <= w_0 w_Π'` disagree.
    pub fn antiisomorphism_failures(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let tops: Vec<WeylElement> = self.t.iter().map(|p| self.w0.compose(&p.w_pi)).collect();
        let k = self.t.len();
        (0..k)
            .flat_map(|a| (0..k).map(move |b| (a, b)))
            .collect::<Vec<_>>()
            .into_par_iter()
            .filter(|&(a, b)| self.t[a].contains(&self.t[b]) != self.group.bruhat_leq(&tops[a], &tops[b]))
            .map(|(a, b)| (self.t[a].pi(), self.t[b].pi()))
            .collect()
    }

    /// One stratum per member of ℳ, ordered like 𝒯.
    pub fn spherical_strata(&self) -> Vec<StratumDescriptor> {
        let mut by_key: HashMap<WeylElement, Vec<ConjClass>> = HashMap::new();
        for (c, a) in self.involution_classes.iter().zip(&self.assignments) {
            if let Some(key) = a.key() {
                by_key.entry(*key).or_default().push(c.clone());
            }
        }
        self.m()
            .into_iter()
            .map(|p| {
                let m_c = self.w0.compose(&p.w_pi);
                StratumDescriptor {
                    dim_spherical: self.group.length(&m_c) + self.group.reflection_rank(&m_c),
                    w_union: by_key.remove(&m_c).unwrap_or_default(),
                    m_set_rep: p.pi(),
                    m_c,
                }
            })
            .collect()
    }

    /// Involution classes not placed in exactly one stratum.
    pub fn unassigned_classes(&self, strata: &[StratumDescriptor]) -> Vec<&ConjClass> {
        self.involution_classes
            .iter()
            .filter(|c| strata.iter().filter(|s| s.w_union.contains(c)).count() != 1)
            .collect()
    }

    /// Strata whose top element fails to dominate every element of its union.
    pub fn dominance_failures<'a>(&self, strata: &'a [StratumDescriptor]) -> Vec<&'a StratumDescriptor> {
        strata
            .iter()
            .filter(|s| {
                !s.w_union
                    .iter()
                    .flat_map(ConjClass::elements)
                    .collect::<Vec<_>>()
                    .par_iter()
                    .all(|x| self.group.bruhat_leq(x, &s.m_c))
            })
            .collect()
    }

    pub fn export_stratum(&self, s: &StratumDescriptor) -> StratumExport {
        StratumExport {
            m_word: self.group.reduced_word(&s.m_c),
            dim: s.dim_spherical,
            classes: s
                .w_union
                .iter()
                .map(|c| StratumClassExport {
                    size: c.len(),
                    max_word: self.group.reduced_word(&c.c_max()[0]),
                })
                .collect(),
            pi: s.m_set_rep.clone(),
        }
    }
}

/// The spherical strata of `sys`.
pub fn spherical_strata(sys: &RootSystem, budget: usize) -> Result<Vec<StratumDescriptor>> {
    Ok(StrataAnalysis::new(sys, budget)?.spherical_strata())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::Family;

    fn analysis(f: Family, n: usize) -> StrataAnalysis {
        StrataAnalysis::new(&RootSystem::of(f, n).unwrap(), usize::MAX).unwrap()
    }

    fn pis(t: &[TSubset]) -> Vec<Vec<usize>> {
        t.iter().map(TSubset::pi).collect()
    }

    #[test]
    fn t_in_rank_two() {
        let a2 = RootSystem::of(Family::A, 2).unwrap();
        assert_eq!(pis(&compute_t(&a2)), vec![vec![], vec![1, 2]]);
        let b2 = RootSystem::of(Family::B, 2).unwrap();
        assert_eq!(pis(&compute_t(&b2)), vec![vec![], vec![1], vec![2], vec![1, 2]]);
    }

    #[test]
    fn empty_and_full_sets_are_in_t() {
        for (f, n) in [(Family::A, 4), (Family::C, 3), (Family::D, 5), (Family::G, 2)] {
            let sys = RootSystem::of(f, n).unwrap();
            let t = compute_t(&sys);
            assert!(t.iter().any(|p| p.mask() == 0));
            assert!(t.iter().any(|p| p.mask() == (1 << n) - 1));
        }
    }

    #[test]
    fn m_in_small_types() {
        let a2 = analysis(Family::A, 2);
        assert_eq!(a2.m().len(), 2);
        let d4 = analysis(Family::D, 4);
        assert_eq!(d4.t_subset(&[]).unwrap().in_m(), Some(true));
    }

    #[test]
    fn m_pi_fixes_members_of_m() {
        let a = analysis(Family::B, 3);
        for p in a.m() {
            assert_eq!(a.m_pi(p).unwrap(), p);
            assert!(matches!(a.decomposition_check(p), Err(Error::Precondition(_))));
        }
    }

    #[test]
    fn strata_of_a1() {
        let a = analysis(Family::A, 1);
        let strata = a.spherical_strata();
        let dims: Vec<usize> = strata.iter().map(|s| s.dim_spherical).collect();
        assert_eq!(dims, vec![2, 0]);
        assert_eq!(a.unassigned_classes(&strata).len(), 0);
    }

    #[test]
    fn top_stratum_of_d4() {
        let a = analysis(Family::D, 4);
        let strata = a.spherical_strata();
        let top = strata.iter().find(|s| s.m_c == *a.w0()).unwrap();
        assert_eq!(top.dim_spherical, 16);
        assert_eq!(top.m_set_rep, Vec::<usize>::new());
    }

    #[test]
    fn dimension_formula_values() {
        let b2 = WeylGroup::new(&RootSystem::of(Family::B, 2).unwrap());
        assert_eq!(dimension_formula(&b2, &b2.identity()).unwrap(), 0);
        assert_eq!(dimension_formula(&b2, &b2.longest()).unwrap(), 6);
        let a1 = WeylGroup::new(&RootSystem::of(Family::A, 1).unwrap());
        assert_eq!(dimension_formula(&a1, &a1.simple_reflection(1)).unwrap(), 2);
        let a2 = WeylGroup::new(&RootSystem::of(Family::A, 2).unwrap());
        assert_eq!(
            dimension_formula(&a2, &a2.from_word(&[1, 2])),
            Err(Error::NotAnInvolution)
        );
    }

    #[test]
    fn budget_is_checked() {
        let e6 = RootSystem::of(Family::E, 6).unwrap();
        assert!(matches!(
            StrataAnalysis::new(&e6, 1000),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
