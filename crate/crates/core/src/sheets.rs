//! Pseudo-Levi subsystems from the extended Dynkin diagram, and the pairs
//! (pseudo-Levi, rigid orbit) that index sheets of conjugacy classes.
//!
//! A subset `J` of the extended diagram nodes generates a root subsystem `Φ_J`. Two subsets
//! are identified when their subsystems are `W`-conjugate; this is decided on root sets, so
//! subsystems of equal type that are not conjugate stay apart.

use std::collections::{BTreeSet, HashMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::orbits::{self, sheet_preceq, Algebra, OrbitLabel, Partition};
use crate::poset::Poset;
use crate::root_system::{subsystem_components, Component, ComponentType, Family, RootSystem, SubsystemBasis};

type RootSet = u128;

/// Order of the torsion subgroup of the root lattice modulo the span of `basis`.
pub fn center_component_order(basis: &SubsystemBasis) -> i64 {
    let Some(first) = basis.roots().first() else {
        return 1;
    };
    let n = first.0.len();
    let m: Vec<Vec<i64>> = (0..n)
        .map(|r| basis.roots().iter().map(|root| root.0[r]).collect())
        .collect();
    linalg::torsion_order(&m)
}

/// Bitmask over root indices of the subsystem generated by the given roots.
fn generated_root_set(sys: &RootSystem, basis: &SubsystemBasis) -> RootSet {
    let mut seen: RootSet = 0;
    let mut queue = Vec::new();
    for r in basis.roots() {
        for v in [r.clone(), r.neg()] {
            let i = sys.index_of(&v).expect("basis element is a root");
            if seen >> i & 1 == 0 {
                seen |= 1 << i;
                queue.push(v);
            }
        }
    }
    while let Some(v) = queue.pop() {
        for b in basis.roots() {
            let w = sys.reflect(b, &v);
            let i = sys.index_of(&w).expect("reflection of a root is a root");
            if seen >> i & 1 == 0 {
                seen |= 1 << i;
                queue.push(w);
            }
        }
    }
    seen
}

fn permute(set: RootSet, perm: &[usize]) -> RootSet {
    let mut out = 0;
    let mut rest = set;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        out |= 1 << perm[i];
    }
    out
}

/// A `W`-conjugacy class of pseudo-Levi subsystems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudoLeviClass {
    representative: SubsystemBasis,
    members: Vec<Vec<usize>>,
    components: Vec<Component>,
    is_levi: bool,
    center_component_order: i64,
    orbit_size: usize,
    component_symmetries: Vec<Vec<usize>>,
}

impl PseudoLeviClass {
    /// The first member subset, by size then indices.
    pub fn representative(&self) -> &SubsystemBasis {
        &self.representative
    }

    /// Every subset of the extended diagram lying in this class.
    pub fn members(&self) -> &[Vec<usize>] {
        &self.members
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component_types(&self) -> Vec<ComponentType> {
        self.components.iter().map(|c| c.ty).collect()
    }

    pub fn semisimple_rank(&self) -> usize {
        self.representative.len()
    }

    /// Whether the subsystem is conjugate to one with a basis in `Δ`.
    pub fn is_levi(&self) -> bool {
        self.is_levi
    }

    pub fn center_component_order(&self) -> i64 {
        self.center_component_order
    }

    /// Number of distinct root subsystems in the `W`-orbit.
    pub fn orbit_size(&self) -> usize {
        self.orbit_size
    }

    /// Permutations of the components induced by the normalizer of the subsystem, as a
    /// group (identity first).
    pub fn component_symmetries(&self) -> &[Vec<usize>] {
        &self.component_symmetries
    }

    pub fn type_label(&self) -> String {
        if self.components.is_empty() {
            return "T".into();
        }
        self.components
            .iter()
            .map(|c| c.ty.to_string())
            .collect::<Vec<_>>()
            .join("x")
    }

    pub fn export(&self) -> LeviExport {
        LeviExport {
            indices: self.representative.indices().to_vec(),
            types: self
                .components
                .iter()
                .map(|c| (c.ty.family.letter().to_string(), c.ty.rank))
                .collect(),
            is_levi: self.is_levi,
            z_order: self.center_component_order,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeviExport {
    pub indices: Vec<usize>,
    pub types: Vec<(String, usize)>,
    pub is_levi: bool,
    pub z_order: i64,
}

/// All pseudo-Levi classes of one root system.
#[derive(Debug, Clone)]
pub struct PseudoLevis {
    sys: RootSystem,
    classes: Vec<PseudoLeviClass>,
    by_mask: HashMap<u32, usize>,
}

impl PseudoLevis {
    pub fn new(sys: &RootSystem, budget: usize) -> Result<Self> {
        let order = sys.cartan_type().weyl_order();
        if order > budget {
            return Err(Error::BudgetExceeded { needed: order, budget });
        }
        let n = sys.rank();
        let full = (1u32 << (n + 1)) - 1;
        let mut subsets: Vec<u32> = (0..full).collect();
        subsets.sort_by_key(|&m| (m.count_ones(), mask_list(m)));
        let bases: Vec<SubsystemBasis> = subsets
            .iter()
            .map(|&m| SubsystemBasis::from_mask(sys, m))
            .collect::<Result<_>>()?;
        let root_sets: Vec<RootSet> = bases.par_iter().map(|b| generated_root_set(sys, b)).collect();
        let perms = sys.simple_reflection_permutations();

        let mut by_set: HashMap<RootSet, Vec<usize>> = HashMap::new();
        for (k, &s) in root_sets.iter().enumerate() {
            by_set.entry(s).or_default().push(k);
        }

        let mut assigned = vec![false; subsets.len()];
        let mut seeds = Vec::new();
        for k in 0..subsets.len() {
            if !assigned[k] {
                let orbit = set_orbit(root_sets[k], &perms);
                let mut members = Vec::new();
                for s in &orbit {
                    if let Some(ks) = by_set.get(s) {
                        for &j in ks {
                            assigned[j] = true;
                            members.push(j);
                        }
                    }
                }
                members.sort_unstable();
                seeds.push((k, orbit.len(), members));
            }
        }

        let mut classes: Vec<PseudoLeviClass> = seeds
            .into_par_iter()
            .map(|(k, orbit_size, members)| {
                let basis = bases[k].clone();
                let components = subsystem_components(sys, &basis)?;
                let component_symmetries = component_group(sys, &basis, &components, root_sets[k], &perms);
                Ok(PseudoLeviClass {
                    is_levi: members.iter().any(|&j| subsets[j] & 1 == 0),
                    members: members.iter().map(|&j| mask_list(subsets[j])).collect(),
                    center_component_order: center_component_order(&basis),
                    representative: basis,
                    components,
                    orbit_size,
                    component_symmetries,
                })
            })
            .collect::<Result<_>>()?;
        classes.sort_by(|a, b| {
            (a.semisimple_rank(), a.component_types(), a.representative.indices()).cmp(&(
                b.semisimple_rank(),
                b.component_types(),
                b.representative.indices(),
            ))
        });
        let mut by_mask = HashMap::new();
        for (c, class) in classes.iter().enumerate() {
            for m in &class.members {
                by_mask.insert(list_mask(m), c);
            }
        }
        Ok(PseudoLevis {
            sys: sys.clone(),
            classes,
            by_mask,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.sys
    }

    pub fn classes(&self) -> &[PseudoLeviClass] {
        &self.classes
    }

    /// The class containing the subset with the given node indices.
    pub fn class_of(&self, indices: &[usize]) -> Result<&PseudoLeviClass> {
        let basis = SubsystemBasis::new(&self.sys, indices)?;
        self.by_mask
            .get(&basis.mask())
            .map(|&c| &self.classes[c])
            .ok_or_else(|| Error::InvalidBasis(format!("{indices:?} is the whole extended diagram")))
    }

    /// Extends `J` to a full-rank subset of the extended diagram, adding the smallest
    /// missing indices first.
    pub fn isolated_extension(&self, indices: &[usize]) -> Result<IsolatedExtension> {
        let class = self.class_of(indices)?;
        let basis = SubsystemBasis::new(&self.sys, indices)?;
        let r = self.sys.rank();
        if basis.len() == r {
            return Ok(IsolatedExtension::Isolated(basis));
        }
        if class.is_levi {
            return Ok(IsolatedExtension::Levi(basis));
        }
        let mut ext = basis.indices().to_vec();
        for i in 0..=r {
            if ext.len() == r {
                break;
            }
            if !ext.contains(&i) {
                ext.push(i);
            }
        }
        let ext = SubsystemBasis::new(&self.sys, &ext)?;
        if !ext.is_linearly_independent() || subsystem_components(&self.sys, &ext).is_err() {
            return Err(Error::LemmaViolation(format!("{:?} does not extend", basis.indices())));
        }
        Ok(IsolatedExtension::Extended(ext))
    }

    /// Every full-rank subset of the extended diagram containing `J`, in index order.
    pub fn isolated_extensions(&self, indices: &[usize]) -> Result<Vec<SubsystemBasis>> {
        let basis = SubsystemBasis::new(&self.sys, indices)?;
        let r = self.sys.rank();
        let mask = basis.mask();
        let mut out: Vec<SubsystemBasis> = (0u32..1 << (r + 1))
            .filter(|m| m.count_ones() as usize == r && m & mask == mask)
            .map(|m| SubsystemBasis::from_mask(&self.sys, m))
            .collect::<Result<_>>()?;
        out.retain(|b| b.is_linearly_independent() && subsystem_components(&self.sys, b).is_ok());
        out.sort_by(|a, b| a.indices().cmp(b.indices()));
        Ok(out)
    }

    /// All pairs of a pseudo-Levi class and a rigid orbit on each of its components,
    /// up to the normalizer permuting the components.
    pub fn sheet_pairs(&self, rigidity_bound: usize) -> Result<Vec<SheetPair>> {
        if !self.sys.cartan_type().family.is_classical() {
            return Err(Error::UnsupportedType(format!(
                "sheet pairs need rigid orbit data; {} is exceptional",
                self.sys.cartan_type()
            )));
        }
        let mut pairs = Vec::new();
        for (c, class) in self.classes.iter().enumerate() {
            let choices: Vec<Vec<OrbitLabel>> = class
                .components
                .iter()
                .map(|comp| component_rigid_orbits(comp.ty, rigidity_bound))
                .collect::<Result<_>>()?;
            let mut tuples: BTreeSet<Vec<OrbitLabel>> = BTreeSet::new();
            for t in cartesian(&choices) {
                let canonical = class
                    .component_symmetries
                    .iter()
                    .map(|perm| {
                        let mut image = t.clone();
                        for (i, o) in t.iter().enumerate() {
                            image[perm[i]] = o.clone();
                        }
                        image
                    })
                    .min()
                    .unwrap_or(t);
                tuples.insert(canonical);
            }
            pairs.extend(tuples.into_iter().map(|orbits| SheetPair {
                class: c,
                levi: class.clone(),
                orbits,
            }));
        }
        Ok(pairs)
    }
}

fn mask_list(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

fn list_mask(list: &[usize]) -> u32 {
    list.iter().fold(0, |m, &i| m | 1 << i)
}

fn set_orbit(start: RootSet, perms: &[Vec<usize>]) -> HashSet<RootSet> {
    let mut seen = HashSet::from([start]);
    let mut stack = vec![start];
    while let Some(s) = stack.pop() {
        for p in perms {
            let t = permute(s, p);
            if seen.insert(t) {
                stack.push(t);
            }
        }
    }
    seen
}

/// The group of component permutations induced by the stabilizer of `root_set` in `W`,
/// from Schreier generators of the orbit search. Only computed when two components share
/// a type that carries more than the zero orbit; otherwise just the identity.
fn component_group(
    sys: &RootSystem,
    basis: &SubsystemBasis,
    components: &[Component],
    root_set: RootSet,
    perms: &[Vec<usize>],
) -> Vec<Vec<usize>> {
    let k = components.len();
    let identity: Vec<usize> = (0..k).collect();
    let repeated = (0..k)
        .any(|a| (a + 1..k).any(|b| components[a].ty == components[b].ty && components[a].ty.family != Family::A));
    if !repeated {
        return vec![identity];
    }
    let comp_sets: Vec<RootSet> = components
        .iter()
        .map(|c| generated_root_set(sys, &SubsystemBasis::new(sys, &c.nodes).expect("component nodes")))
        .collect();
    let probes: Vec<usize> = components
        .iter()
        .map(|c| {
            let pos = basis.indices().iter().position(|&i| i == c.nodes[0]).unwrap();
            sys.index_of(&basis.roots()[pos]).unwrap()
        })
        .collect();
    let nroots = sys.roots().len();
    let id_perm: Vec<usize> = (0..nroots).collect();
    // transporter g with g(root_set) = key, and its inverse
    let mut transport: HashMap<RootSet, (Vec<usize>, Vec<usize>)> =
        HashMap::from([(root_set, (id_perm.clone(), id_perm))]);
    let mut stack = vec![root_set];
    let mut gens: BTreeSet<Vec<usize>> = BTreeSet::new();
    while let Some(x) = stack.pop() {
        let (g, _) = transport[&x].clone();
        for s in perms {
            let y = permute(x, s);
            let sg: Vec<usize> = g.iter().map(|&i| s[i]).collect();
            if let Some((_, hinv)) = transport.get(&y) {
                let image: Vec<usize> = probes
                    .iter()
                    .map(|&r| {
                        let z = hinv[sg[r]];
                        comp_sets
                            .iter()
                            .position(|c| c >> z & 1 == 1)
                            .expect("stabilizer preserves the subsystem")
                    })
                    .collect();
                gens.insert(image);
            } else {
                let mut inv = vec![0; nroots];
                for (i, &j) in sg.iter().enumerate() {
                    inv[j] = i;
                }
                transport.insert(y, (sg, inv));
                stack.push(y);
            }
        }
    }
    let mut group: Vec<Vec<usize>> = vec![identity.clone()];
    let mut seen: HashSet<Vec<usize>> = HashSet::from([identity]);
    let mut head = 0;
    while head < group.len() {
        let p = group[head].clone();
        head += 1;
        for g in &gens {
            let q: Vec<usize> = p.iter().map(|&i| g[i]).collect();
            if seen.insert(q.clone()) {
                group.push(q);
            }
        }
    }
    group.sort();
    group
}

fn cartesian(choices: &[Vec<OrbitLabel>]) -> Vec<Vec<OrbitLabel>> {
    choices.iter().fold(vec![Vec::new()], |acc, opts| {
        acc.into_iter()
            .flat_map(|prefix| {
                opts.iter().map(move |o| {
                    let mut v = prefix.clone();
                    v.push(o.clone());
                    v
                })
            })
            .collect()
    })
}

/// The classical Lie algebra of a simple component, if it has nonzero rigid orbits.
pub fn component_algebra(ty: ComponentType) -> Result<Algebra> {
    let k = ty.rank;
    match ty.family {
        Family::A => Ok(Algebra::Sl(k + 1)),
        Family::B => Ok(Algebra::So(2 * k + 1)),
        Family::C => Ok(Algebra::Sp(2 * k)),
        Family::D => Ok(Algebra::So(2 * k)),
        _ => Err(Error::UnsupportedType(format!("no rigid orbit data for {ty}"))),
    }
}

/// Rigid orbits of one component; type A components only carry the zero orbit.
pub fn component_rigid_orbits(ty: ComponentType, bound: usize) -> Result<Vec<OrbitLabel>> {
    let algebra = component_algebra(ty)?;
    if ty.family == Family::A {
        return Ok(vec![OrbitLabel::zero(algebra)]);
    }
    orbits::rigid_orbits(algebra, bound)
}

/// A pseudo-Levi class with a rigid orbit on each component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SheetPair {
    /// Position of the class in [`PseudoLevis::classes`].
    pub class: usize,
    pub levi: PseudoLeviClass,
    /// One orbit per component, in the order of [`PseudoLeviClass::components`].
    pub orbits: Vec<OrbitLabel>,
}

impl SheetPair {
    pub fn export(&self) -> SheetPairExport {
        SheetPairExport {
            levi: self.levi.export(),
            orbits: self
                .orbits
                .iter()
                .enumerate()
                .map(|(component, o)| ComponentOrbitExport {
                    component,
                    partition: o.partition().parts().to_vec(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SheetPairExport {
    pub levi: LeviExport,
    pub orbits: Vec<ComponentOrbitExport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentOrbitExport {
    pub component: usize,
    pub partition: Vec<usize>,
}

/// Outcome of extending a pseudo-Levi basis to full rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsolatedExtension {
    /// Already of full rank.
    Isolated(SubsystemBasis),
    /// A Levi subsystem; its sheets contain a unipotent class and no extension is needed.
    Levi(SubsystemBasis),
    Extended(SubsystemBasis),
}

impl IsolatedExtension {
    pub fn basis(&self) -> &SubsystemBasis {
        match self {
            IsolatedExtension::Isolated(b) | IsolatedExtension::Levi(b) | IsolatedExtension::Extended(b) => b,
        }
    }
}

pub fn pseudo_levi_classes(sys: &RootSystem, budget: usize) -> Result<Vec<PseudoLeviClass>> {
    Ok(PseudoLevis::new(sys, budget)?.classes)
}

pub fn enumerate_sheet_pairs(sys: &RootSystem, budget: usize, rigidity_bound: usize) -> Result<Vec<SheetPair>> {
    PseudoLevis::new(sys, budget)?.sheet_pairs(rigidity_bound)
}

/// Partitions of `n` under `⪯`: the closure order on sheets of `sl(n)`.
pub fn sl_sheet_poset(n: usize, bound: usize) -> Result<Poset<Partition>> {
    if n > bound {
        return Err(Error::BoundExceeded { size: n, bound });
    }
    Ok(Poset::new(Partition::all(n), |p, q| {
        sheet_preceq(p, q).expect("same size")
    }))
}

/// Pairs `(p, q)` of partitions of `n` with `p` dominated by `q` but `p ⪯ q` failing.
pub fn sl_counterexample_pairs(poset: &Poset<Partition>) -> Vec<(Partition, Partition)> {
    let el = poset.elements();
    let mut out = Vec::new();
    for (a, p) in el.iter().enumerate() {
        for (b, q) in el.iter().enumerate() {
            if a != b && !poset.leq(a, b) && orbits::dominance_leq(p, q).expect("same size") {
                out.push((p.clone(), q.clone()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(f: Family, n: usize) -> RootSystem {
        RootSystem::of(f, n).unwrap()
    }

    #[test]
    fn center_orders() {
        let d4 = sys(Family::D, 4);
        let b = SubsystemBasis::new(&d4, &[0, 1, 3, 4]).unwrap();
        assert_eq!(center_component_order(&b), 2);
        let full = SubsystemBasis::new(&d4, &[1, 2, 3, 4]).unwrap();
        assert_eq!(center_component_order(&full), 1);
        assert_eq!(center_component_order(&SubsystemBasis::new(&d4, &[]).unwrap()), 1);
    }

    #[test]
    fn type_a_classes_are_levis() {
        for n in 1..=5 {
            let p = PseudoLevis::new(&sys(Family::A, n), usize::MAX).unwrap();
            assert!(p.classes().iter().all(PseudoLeviClass::is_levi));
            assert_eq!(p.classes().len(), Partition::all(n + 1).len());
        }
    }

    #[test]
    fn long_and_short_a1_are_not_merged() {
        let p = PseudoLevis::new(&sys(Family::B, 2), usize::MAX).unwrap();
        let a1: Vec<_> = p.classes().iter().filter(|c| c.semisimple_rank() == 1).collect();
        assert_eq!(a1.len(), 2);
    }

    #[test]
    fn d4_pseudo_levi_of_four_a1() {
        let p = PseudoLevis::new(&sys(Family::D, 4), usize::MAX).unwrap();
        let c = p.class_of(&[1, 3, 4, 0]).unwrap();
        assert_eq!(c.type_label(), "A1xA1xA1xA1");
        assert!(!c.is_levi());
        assert_eq!(c.center_component_order(), 2);
        let full = p.class_of(&[1, 2, 3, 4]).unwrap();
        assert!(full.is_levi());
        assert_eq!(full.type_label(), "D4");
    }

    #[test]
    fn c5_fixture() {
        let p = PseudoLevis::new(&sys(Family::C, 5), usize::MAX).unwrap();
        let c = p.class_of(&[0, 3, 5]).unwrap();
        assert_eq!(c.type_label(), "A1xC1xC1");
        assert!(!c.is_levi());
        let exts: Vec<Vec<usize>> = p
            .isolated_extensions(&[0, 3, 5])
            .unwrap()
            .iter()
            .map(|b| b.indices().to_vec())
            .collect();
        assert!(exts.contains(&vec![0, 1, 3, 4, 5]));
        assert!(exts.contains(&vec![0, 2, 3, 4, 5]));
        let ext = p.isolated_extension(&[0, 3, 5]).unwrap();
        assert!(matches!(ext, IsolatedExtension::Extended(_)));
        assert_eq!(ext.basis().indices(), &[0, 1, 2, 3, 5]);
        let full = p.isolated_extension(&[0, 1, 3, 4, 5]).unwrap();
        assert!(matches!(full, IsolatedExtension::Isolated(_)));
        assert!(matches!(
            p.isolated_extension(&[1, 2]).unwrap(),
            IsolatedExtension::Levi(_)
        ));
    }

    #[test]
    fn sheet_pairs_of_type_a_match_partitions() {
        for n in 1..=5 {
            let pairs = enumerate_sheet_pairs(&sys(Family::A, n), usize::MAX, 14).unwrap();
            assert_eq!(pairs.len(), Partition::all(n + 1).len());
        }
    }

    #[test]
    fn d4_sheet_pairs() {
        let pairs = enumerate_sheet_pairs(&sys(Family::D, 4), usize::MAX, 14).unwrap();
        assert!(pairs
            .iter()
            .any(|p| p.levi.type_label() == "A1xA1xA1xA1" && p.orbits.iter().all(OrbitLabel::is_zero)));
        assert!(pairs
            .iter()
            .any(|p| p.levi.type_label() == "D4" && p.orbits[0].partition() == &Partition::parse("3,2^2,1").unwrap()));
        assert!(pairs.iter().any(|p| p.levi.semisimple_rank() == 0));
    }

    #[test]
    fn exceptional_sheet_pairs_are_rejected() {
        assert!(matches!(
            enumerate_sheet_pairs(&sys(Family::G, 2), usize::MAX, 14),
            Err(Error::UnsupportedType(_))
        ));
    }

    #[test]
    fn sl4_poset() {
        let poset = sl_sheet_poset(4, 12).unwrap();
        assert!(poset.is_partial_order());
        let min = poset.minimal_elements();
        assert_eq!(min.len(), 1);
        assert_eq!(poset.elements()[min[0]], Partition::ones(4));
        let pairs = sl_counterexample_pairs(&poset);
        assert!(pairs.contains(&(Partition::parse("2,1,1").unwrap(), Partition::parse("2,2").unwrap())));
        assert!(sl_sheet_poset(13, 12).is_err());
    }
}
