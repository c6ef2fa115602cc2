//! Nilpotent orbits of classical Lie algebras, labelled by partitions.
//!
//! An orbit of `gl(N)`, `sl(N)`, `so(N)` or `sp(N)` (with `N` the natural module dimension)
//! is given by the Jordan type of its elements. This module covers duals, the dominance
//! order, the sheet order `⪯` of type A, the B/C/D collapse, induction from Levi
//! subalgebras, rigidity and orbit dimensions.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

/// A weakly decreasing list of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `[1^n]`.
    pub fn ones(n: usize) -> Self {
        Partition(vec![1; n])
    }

    /// Parses `3,2^2,1`. Whitespace and enclosing brackets are ignored.
    pub fn parse(s: &str) -> Result<Self> {
        let body: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '[' && *c != ']')
            .collect();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for item in body.split(',') {
            let (base, exp) = match item.split_once('^') {
                Some((b, e)) => (b, e),
                None => (item, "1"),
            };
            let base: usize = base.parse().map_err(|_| Error::Parse(format!("bad part {item:?}")))?;
            let exp: usize = exp
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in {item:?}")))?;
            if base == 0 {
                return Err(Error::InvalidPartition("parts must be positive".into()));
            }
            parts.extend(std::iter::repeat_n(base, exp));
        }
        Ok(Partition::new(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`-th part (zero-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn multiplicity(&self, k: usize) -> usize {
        self.0.iter().filter(|&&p| p == k).count()
    }

    /// Conjugate partition: `dual_i = #{j : p_j >= i}`.
    pub fn dual(&self) -> Partition {
        let first = self.part(0);
        Partition(
            (1..=first)
                .map(|i| self.0.iter().filter(|&&p| p >= i).count())
                .collect(),
        )
    }

    /// Row-wise sum, padding the shorter partition with zeros.
    pub fn row_sum(&self, other: &Partition) -> Partition {
        let k = self.len().max(other.len());
        Partition::new((0..k).map(|i| self.part(i) + other.part(i)).collect())
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=max.min(rest)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Exponent notation, e.g. `3,2^2,1`.
    pub fn compact(&self) -> String {
        let mut items = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let p = self.0[i];
            let m = self.multiplicity(p);
            items.push(if m == 1 { p.to_string() } else { format!("{p}^{m}") });
            i += m;
        }
        items.join(",")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "{}", items.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::parse(s)
    }
}

fn check_sizes(p: &Partition, q: &Partition) -> Result<()> {
    if p.size() != q.size() {
        return Err(Error::SizeMismatch(p.size(), q.size()));
    }
    Ok(())
}

pub fn dual(p: &Partition) -> Partition {
    p.dual()
}

/// Dominance: every prefix sum of `p` is at most that of `q`.
pub fn dominance_leq(p: &Partition, q: &Partition) -> Result<bool> {
    check_sizes(p, q)?;
    let (mut sp, mut sq) = (0, 0);
    for i in 0..p.len().max(q.len()) {
        sp += p.part(i);
        sq += q.part(i);
        if sp > sq {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `p ⪯ q`: the parts of `dual(q)` split into groups whose sums are the parts of `dual(p)`.
pub fn sheet_preceq(p: &Partition, q: &Partition) -> Result<bool> {
    check_sizes(p, q)?;
    let bins = p.dual().0;
    let items = q.dual().0;
    let mut failed = HashSet::new();
    Ok(pack(&items, 0, bins, &mut failed))
}

/// Places `items[k..]` (descending) into bins with the given remaining capacities, each
/// bin to be filled exactly.
fn pack(items: &[usize], k: usize, caps: Vec<usize>, failed: &mut HashSet<(usize, Vec<usize>)>) -> bool {
    if k == items.len() {
        return caps.iter().all(|&c| c == 0);
    }
    let mut key = caps.clone();
    key.sort_unstable();
    if failed.contains(&(k, key.clone())) {
        return false;
    }
    let mut tried = BTreeSet::new();
    for b in 0..caps.len() {
        if caps[b] >= items[k] && tried.insert(caps[b]) {
            let mut next = caps.clone();
            next[b] -= items[k];
            if pack(items, k + 1, next, failed) {
                return true;
            }
        }
    }
    failed.insert((k, key));
    false
}

/// Ambient classical Lie algebra, by natural module dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algebra {
    Gl(usize),
    Sl(usize),
    So(usize),
    Sp(usize),
}

impl Algebra {
    pub fn natural_dim(self) -> usize {
        match self {
            Algebra::Gl(n) | Algebra::Sl(n) | Algebra::So(n) | Algebra::Sp(n) => n,
        }
    }

    pub fn dim(self) -> usize {
        match self {
            Algebra::Gl(n) => n * n,
            Algebra::Sl(n) => (n * n).saturating_sub(1),
            Algebra::So(n) => n * n.saturating_sub(1) / 2,
            Algebra::Sp(n) => n * (n + 1) / 2,
        }
    }

    pub fn is_type_a(self) -> bool {
        matches!(self, Algebra::Gl(_) | Algebra::Sl(_))
    }

    /// Same family, different natural dimension.
    pub fn with_dim(self, n: usize) -> Algebra {
        match self {
            Algebra::Gl(_) => Algebra::Gl(n),
            Algebra::Sl(_) => Algebra::Sl(n),
            Algebra::So(_) => Algebra::So(n),
            Algebra::Sp(_) => Algebra::Sp(n),
        }
    }

    /// Whether some nilpotent orbit exists, i.e. the dimension has the right parity.
    pub fn is_well_formed(self) -> bool {
        !matches!(self, Algebra::Sp(n) if n % 2 == 1)
    }

    /// Jordan-type constraint: in `sp` odd parts, in `so` even parts, occur with even multiplicity.
    pub fn admits(self, p: &Partition) -> bool {
        if p.size() != self.natural_dim() {
            return false;
        }
        let bad_parity = match self {
            Algebra::Gl(_) | Algebra::Sl(_) => return true,
            Algebra::Sp(_) => 1,
            Algebra::So(_) => 0,
        };
        p.parts()
            .iter()
            .all(|&k| k % 2 != bad_parity || p.multiplicity(k).is_multiple_of(2))
    }

    /// `so(2m)` with all parts even.
    pub fn is_very_even(self, p: &Partition) -> bool {
        matches!(self, Algebra::So(n) if n % 2 == 0 && n > 0) && p.parts().iter().all(|&k| k % 2 == 0)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        let (head, digits) = s.split_at(s.find(|c: char| c.is_ascii_digit()).unwrap_or(s.len()));
        let n: usize = digits.parse().map_err(|_| Error::Parse(format!("bad algebra {s:?}")))?;
        let a = match head {
            "gl" => Algebra::Gl(n),
            "sl" => Algebra::Sl(n),
            "so" => Algebra::So(n),
            "sp" => Algebra::Sp(n),
            _ => return Err(Error::Parse(format!("bad algebra {s:?}"))),
        };
        if n == 0 || !a.is_well_formed() {
            return Err(Error::Parse(format!("bad algebra {s:?}")));
        }
        Ok(a)
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algebra::Gl(n) => write!(f, "gl{n}"),
            Algebra::Sl(n) => write!(f, "sl{n}"),
            Algebra::So(n) => write!(f, "so{n}"),
            Algebra::Sp(n) => write!(f, "sp{n}"),
        }
    }
}

impl FromStr for Algebra {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Algebra::parse(s)
    }
}

/// The two orbits sharing a very even partition, or a label whose tag is not determined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum VeryEvenMark {
    I,
    II,
    Unresolved,
}

/// A nilpotent orbit of a classical Lie algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitLabel {
    algebra: Algebra,
    partition: Partition,
    mark: Option<VeryEvenMark>,
}

impl OrbitLabel {
    /// Very even partitions get the `Unresolved` mark.
    pub fn new(algebra: Algebra, partition: Partition) -> Result<Self> {
        let mark = algebra.is_very_even(&partition).then_some(VeryEvenMark::Unresolved);
        OrbitLabel::with_mark(algebra, partition, mark)
    }

    pub fn with_mark(algebra: Algebra, partition: Partition, mark: Option<VeryEvenMark>) -> Result<Self> {
        if !algebra.admits(&partition) {
            return Err(Error::InvalidOrbit(format!(
                "{} is not an orbit of {algebra}",
                partition.compact()
            )));
        }
        if mark.is_some() != algebra.is_very_even(&partition) {
            return Err(Error::InvalidOrbit(format!(
                "very even mark given for {} in {algebra}",
                partition.compact()
            )));
        }
        Ok(OrbitLabel {
            algebra,
            partition,
            mark,
        })
    }

    pub fn zero(algebra: Algebra) -> Self {
        OrbitLabel::new(algebra, Partition::ones(algebra.natural_dim())).expect("zero orbit")
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn mark(&self) -> Option<VeryEvenMark> {
        self.mark
    }

    pub fn is_zero(&self) -> bool {
        self.partition.parts().iter().all(|&p| p == 1)
    }

    /// Closure order: dominance of partitions, with the two very even orbits on one
    /// partition incomparable to each other.
    pub fn closure_leq(&self, other: &OrbitLabel) -> Result<bool> {
        if self.algebra != other.algebra {
            return Err(Error::Precondition(format!("{} vs {}", self.algebra, other.algebra)));
        }
        if self.partition == other.partition {
            return Ok(!matches!(
                (self.mark, other.mark),
                (Some(VeryEvenMark::I), Some(VeryEvenMark::II)) | (Some(VeryEvenMark::II), Some(VeryEvenMark::I))
            ));
        }
        dominance_leq(&self.partition, &other.partition)
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.algebra, self.partition.compact())?;
        match self.mark {
            Some(VeryEvenMark::I) => write!(f, "_I"),
            Some(VeryEvenMark::II) => write!(f, "_II"),
            Some(VeryEvenMark::Unresolved) => write!(f, "_?"),
            None => Ok(()),
        }
    }
}

/// Every nilpotent orbit of `algebra`, by decreasing partition; very even partitions
/// appear twice (marks I and II).
pub fn orbits(algebra: Algebra) -> Vec<OrbitLabel> {
    Partition::all(algebra.natural_dim())
        .into_iter()
        .filter(|p| algebra.admits(p))
        .flat_map(|p| {
            if algebra.is_very_even(&p) {
                vec![
                    OrbitLabel {
                        algebra,
                        partition: p.clone(),
                        mark: Some(VeryEvenMark::I),
                    },
                    OrbitLabel {
                        algebra,
                        partition: p,
                        mark: Some(VeryEvenMark::II),
                    },
                ]
            } else {
                vec![OrbitLabel {
                    algebra,
                    partition: p,
                    mark: None,
                }]
            }
        })
        .collect()
}

/// `⪯` for orbits of `gl`/`sl`.
pub fn sheet_closure_leq(a: &OrbitLabel, b: &OrbitLabel) -> Result<bool> {
    if !a.algebra.is_type_a() || !b.algebra.is_type_a() {
        return Err(Error::Precondition("sheet order is defined for type A only".into()));
    }
    sheet_preceq(&a.partition, &b.partition)
}

/// The largest partition of the algebra dominated by `p`.
pub fn collapse(algebra: Algebra, p: &Partition) -> Result<OrbitLabel> {
    if p.size() != algebra.natural_dim() {
        return Err(Error::SizeMismatch(p.size(), algebra.natural_dim()));
    }
    if !algebra.is_well_formed() {
        return Err(Error::InvalidOrbit(format!("{algebra} has no nilpotent orbits")));
    }
    let bad_parity = match algebra {
        Algebra::Gl(_) | Algebra::Sl(_) => return OrbitLabel::new(algebra, p.clone()),
        Algebra::Sp(_) => 1,
        Algebra::So(_) => 0,
    };
    let mut parts = p.0.clone();
    loop {
        let current = Partition::new(parts.clone());
        let bad = current
            .parts()
            .iter()
            .copied()
            .filter(|&k| k % 2 == bad_parity && current.multiplicity(k) % 2 == 1)
            .max();
        let Some(q) = bad else {
            return OrbitLabel::new(algebra, current);
        };
        parts = current.0;
        let last = parts.iter().rposition(|&k| k == q).expect("part present");
        parts[last] = q - 1;
        match (last + 1..parts.len()).find(|&j| parts[j] + 1 < q) {
            Some(j) => parts[j] += 1,
            None => parts.push(1),
        }
    }
}

/// A Levi subalgebra `gl(b_1) x ... x gl(b_k) x g'(m)` of a classical algebra, with `g'`
/// of the ambient family. For `gl`/`sl` ambient algebras the residual factor is absent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassicalLevi {
    algebra: Algebra,
    gl_blocks: Vec<usize>,
    residual: usize,
}

impl ClassicalLevi {
    pub fn new(algebra: Algebra, mut gl_blocks: Vec<usize>, residual: usize) -> Result<Self> {
        gl_blocks.retain(|&b| b > 0);
        gl_blocks.sort_unstable_by(|a, b| b.cmp(a));
        let total: usize = gl_blocks.iter().sum();
        let ok = if algebra.is_type_a() {
            residual == 0 && total == algebra.natural_dim()
        } else {
            2 * total + residual == algebra.natural_dim() && algebra.with_dim(residual).is_well_formed()
        };
        if !ok {
            return Err(Error::Precondition(format!(
                "blocks {gl_blocks:?} with residual {residual} do not fit {algebra}"
            )));
        }
        Ok(ClassicalLevi {
            algebra,
            gl_blocks,
            residual,
        })
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn gl_blocks(&self) -> &[usize] {
        &self.gl_blocks
    }

    pub fn residual(&self) -> usize {
        self.residual
    }

    /// The residual classical factor, if the ambient algebra is not of type A.
    pub fn residual_algebra(&self) -> Option<Algebra> {
        (!self.algebra.is_type_a()).then(|| self.algebra.with_dim(self.residual))
    }

    pub fn dim(&self) -> usize {
        let gl: usize = self.gl_blocks.iter().map(|b| b * b).sum();
        match self.algebra {
            Algebra::Sl(_) => gl - 1,
            Algebra::Gl(_) => gl,
            a => gl + a.with_dim(self.residual).dim(),
        }
    }

    /// Whether this is the whole algebra.
    pub fn is_full(&self) -> bool {
        if self.algebra.is_type_a() {
            self.gl_blocks.len() == 1
        } else {
            self.gl_blocks.is_empty()
        }
    }
}

/// Every Levi of `algebra` up to the block multiset, the whole algebra included.
pub fn levis(algebra: Algebra) -> Vec<ClassicalLevi> {
    let n = algebra.natural_dim();
    if algebra.is_type_a() {
        return Partition::all(n)
            .into_iter()
            .map(|p| ClassicalLevi {
                algebra,
                gl_blocks: p.0,
                residual: 0,
            })
            .collect();
    }
    (0..=n / 2)
        .flat_map(|k| {
            Partition::all(k).into_iter().map(move |p| ClassicalLevi {
                algebra,
                gl_blocks: p.0,
                residual: n - 2 * k,
            })
        })
        .filter(|l| algebra.with_dim(l.residual).is_well_formed())
        .collect()
}

/// An orbit of a Levi: one partition per `gl` block and one for the residual factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LeviOrbit {
    pub nus: Vec<Partition>,
    pub mu: Partition,
}

impl LeviOrbit {
    pub fn zero(levi: &ClassicalLevi) -> Self {
        LeviOrbit {
            nus: levi.gl_blocks.iter().map(|&b| Partition::ones(b)).collect(),
            mu: Partition::ones(levi.residual),
        }
    }

    /// `dim` of the orbit inside the Levi.
    pub fn dim(&self, levi: &ClassicalLevi) -> usize {
        let gl: usize = self.nus.iter().map(gl_orbit_dim).sum();
        match levi.residual_algebra() {
            Some(a) => gl + partition_orbit_dim(a, &self.mu),
            None => gl,
        }
    }
}

/// All orbits of a Levi.
pub fn levi_orbits(levi: &ClassicalLevi) -> Vec<LeviOrbit> {
    let mut out = vec![Vec::new()];
    for &b in &levi.gl_blocks {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Partition>| {
                Partition::all(b).into_iter().map(move |nu| {
                    let mut v = prefix.clone();
                    v.push(nu);
                    v
                })
            })
            .collect();
    }
    let mus: Vec<Partition> = match levi.residual_algebra() {
        Some(a) => Partition::all(levi.residual)
            .into_iter()
            .filter(|p| a.admits(p))
            .collect(),
        None => vec![Partition::empty()],
    };
    out.into_iter()
        .flat_map(|nus| {
            mus.iter().map(move |mu| LeviOrbit {
                nus: nus.clone(),
                mu: mu.clone(),
            })
        })
        .collect()
}

fn check_levi_orbit(levi: &ClassicalLevi, orbit: &LeviOrbit) -> Result<()> {
    if orbit.nus.len() != levi.gl_blocks.len() {
        return Err(Error::SizeMismatch(orbit.nus.len(), levi.gl_blocks.len()));
    }
    for (nu, &b) in orbit.nus.iter().zip(&levi.gl_blocks) {
        if nu.size() != b {
            return Err(Error::SizeMismatch(nu.size(), b));
        }
    }
    match levi.residual_algebra() {
        Some(a) if !a.admits(&orbit.mu) => Err(Error::InvalidOrbit(format!(
            "{} is not an orbit of {a}",
            orbit.mu.compact()
        ))),
        None if !orbit.mu.is_empty() => Err(Error::InvalidOrbit("type A Levis have no residual factor".into())),
        _ => Ok(()),
    }
}

/// Induced orbit. In type A the partition is the row sum of the block partitions; otherwise
/// it is the collapse of `mu + 2 * sum(nu_i)`, sums taken row by row.
pub fn induce(levi: &ClassicalLevi, orbit: &LeviOrbit) -> Result<OrbitLabel> {
    check_levi_orbit(levi, orbit)?;
    let sum = orbit.nus.iter().fold(Partition::empty(), |acc, nu| acc.row_sum(nu));
    if levi.algebra.is_type_a() {
        return OrbitLabel::new(levi.algebra, sum);
    }
    let doubled = Partition::new(sum.parts().iter().map(|p| 2 * p).collect());
    collapse(levi.algebra, &orbit.mu.row_sum(&doubled))
}

/// An intermediate Levi between a Levi `L` and the whole algebra, given by how the `gl`
/// blocks of `L` merge: each group becomes one `gl` block, and the blocks in `to_residual`
/// join the residual factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coarsening {
    pub groups: Vec<Vec<usize>>,
    pub to_residual: Vec<usize>,
}

/// Every coarsening of `levi` (block positions in set partitions, with an optional
/// residual group for classical algebras).
pub fn coarsenings(levi: &ClassicalLevi) -> Vec<Coarsening> {
    let k = levi.gl_blocks.len();
    let classical = !levi.algebra.is_type_a();
    // label 0 = residual, labels 1.. = groups in order of first appearance
    let mut out = Vec::new();
    let mut labels = vec![0usize; k];
    fn rec(i: usize, used: usize, labels: &mut Vec<usize>, classical: bool, out: &mut Vec<Vec<usize>>) {
        if i == labels.len() {
            out.push(labels.clone());
            return;
        }
        let first = if classical { 0 } else { 1 };
        for l in first..=used + 1 {
            labels[i] = l;
            rec(i + 1, used.max(l), labels, classical, out);
        }
    }
    let mut assignments = Vec::new();
    rec(0, 0, &mut labels, classical, &mut assignments);
    for a in assignments {
        let groups_n = a.iter().copied().max().unwrap_or(0);
        let groups = (1..=groups_n)
            .map(|g| (0..k).filter(|&i| a[i] == g).collect())
            .collect();
        let to_residual = (0..k).filter(|&i| a[i] == 0).collect();
        out.push(Coarsening { groups, to_residual });
    }
    out
}

/// Induces `orbit` from `levi` to the intermediate Levi described by `c`, then on to
/// the whole algebra.
pub fn induce_in_stages(levi: &ClassicalLevi, orbit: &LeviOrbit, c: &Coarsening) -> Result<OrbitLabel> {
    check_levi_orbit(levi, orbit)?;
    let mut blocks = Vec::new();
    let mut nus = Vec::new();
    for group in &c.groups {
        let b: usize = group.iter().map(|&i| levi.gl_blocks[i]).sum();
        let sub = ClassicalLevi::new(Algebra::Gl(b), group.iter().map(|&i| levi.gl_blocks[i]).collect(), 0)?;
        let mut sub_orbit: Vec<(usize, Partition)> = group
            .iter()
            .map(|&i| (levi.gl_blocks[i], orbit.nus[i].clone()))
            .collect();
        // ClassicalLevi sorts its blocks; keep the orbits aligned.
        sub_orbit.sort_by_key(|x| std::cmp::Reverse(x.0));
        let sub_orbit = LeviOrbit {
            nus: sub_orbit.into_iter().map(|x| x.1).collect(),
            mu: Partition::empty(),
        };
        blocks.push(b);
        nus.push(induce(&sub, &sub_orbit)?.partition);
    }
    let mu = if levi.algebra.is_type_a() {
        Partition::empty()
    } else {
        let absorbed: usize = c.to_residual.iter().map(|&i| levi.gl_blocks[i]).sum();
        let m2 = levi.residual + 2 * absorbed;
        let mut sub_orbit: Vec<(usize, Partition)> = c
            .to_residual
            .iter()
            .map(|&i| (levi.gl_blocks[i], orbit.nus[i].clone()))
            .collect();
        sub_orbit.sort_by_key(|x| std::cmp::Reverse(x.0));
        let sub = ClassicalLevi::new(
            levi.algebra.with_dim(m2),
            sub_orbit.iter().map(|x| x.0).collect(),
            levi.residual,
        )?;
        let sub_orbit = LeviOrbit {
            nus: sub_orbit.into_iter().map(|x| x.1).collect(),
            mu: orbit.mu.clone(),
        };
        induce(&sub, &sub_orbit)?.partition
    };
    let mut paired: Vec<(usize, Partition)> = blocks.into_iter().zip(nus).collect();
    paired.sort_by_key(|x| std::cmp::Reverse(x.0));
    let residual = if levi.algebra.is_type_a() {
        0
    } else {
        levi.algebra.natural_dim() - 2 * paired.iter().map(|x| x.0).sum::<usize>()
    };
    let mid = ClassicalLevi::new(levi.algebra, paired.iter().map(|x| x.0).collect(), residual)?;
    induce(
        &mid,
        &LeviOrbit {
            nus: paired.into_iter().map(|x| x.1).collect(),
            mu,
        },
    )
}

fn gl_orbit_dim(p: &Partition) -> usize {
    let n = p.size();
    n * n - p.dual().parts().iter().map(|d| d * d).sum::<usize>()
}

fn partition_orbit_dim(algebra: Algebra, p: &Partition) -> usize {
    let squares: usize = p.dual().parts().iter().map(|d| d * d).sum();
    let odd = p.parts().iter().filter(|&&k| k % 2 == 1).count();
    match algebra {
        Algebra::Gl(_) | Algebra::Sl(_) => gl_orbit_dim(p),
        Algebra::Sp(_) => algebra.dim() - (squares + odd) / 2,
        Algebra::So(_) => algebra.dim() - (squares - odd) / 2,
    }
}

/// `dim g - dim` of the centralizer.
pub fn orbit_dimension(o: &OrbitLabel) -> usize {
    partition_orbit_dim(o.algebra, &o.partition)
}

fn check_bound(algebra: Algebra, bound: usize) -> Result<()> {
    if algebra.natural_dim() > bound {
        return Err(Error::BoundExceeded {
            size: algebra.natural_dim(),
            bound,
        });
    }
    Ok(())
}

/// Maximal proper Levis: `gl(b) x g'(N - 2b)`, or `gl(a) x gl(b)` in type A.
pub fn maximal_levis(algebra: Algebra) -> Vec<ClassicalLevi> {
    let n = algebra.natural_dim();
    if algebra.is_type_a() {
        (1..=n / 2)
            .map(|a| ClassicalLevi {
                algebra,
                gl_blocks: vec![n - a, a],
                residual: 0,
            })
            .collect()
    } else {
        (1..=n / 2)
            .map(|b| ClassicalLevi {
                algebra,
                gl_blocks: vec![b],
                residual: n - 2 * b,
            })
            .filter(|l| algebra.with_dim(l.residual).is_well_formed())
            .collect()
    }
}

fn induced_from(levis: &[ClassicalLevi], target: &Partition) -> bool {
    levis.iter().any(|l| {
        levi_orbits(l)
            .iter()
            .any(|o| induce(l, o).is_ok_and(|x| x.partition() == target))
    })
}

/// Whether `o` is not induced from any proper Levi. Searches the maximal Levis, which
/// suffices because induction is transitive.
pub fn is_rigid(o: &OrbitLabel, bound: usize) -> Result<bool> {
    check_bound(o.algebra, bound)?;
    Ok(!induced_from(&maximal_levis(o.algebra), &o.partition))
}

/// Same as [`is_rigid`] but searching every proper Levi.
pub fn is_rigid_exhaustive(o: &OrbitLabel, bound: usize) -> Result<bool> {
    check_bound(o.algebra, bound)?;
    let proper: Vec<ClassicalLevi> = levis(o.algebra).into_iter().filter(|l| !l.is_full()).collect();
    Ok(!induced_from(&proper, &o.partition))
}

/// The rigid orbits of `algebra`, in the order of [`orbits`].
pub fn rigid_orbits(algebra: Algebra, bound: usize) -> Result<Vec<OrbitLabel>> {
    check_bound(algebra, bound)?;
    let all = orbits(algebra);
    let flags: Vec<bool> = all.par_iter().map(|o| is_rigid(o, bound)).collect::<Result<_>>()?;
    Ok(all.into_iter().zip(flags).filter(|(_, r)| *r).map(|(o, _)| o).collect())
}

/// Pairs `(o1, o2)` with `o1` rigid, `o2` not rigid and `o2` strictly below `o1`.
pub fn counterexample_scan(algebra: Algebra, bound: usize) -> Result<Vec<(OrbitLabel, OrbitLabel)>> {
    check_bound(algebra, bound)?;
    let all = orbits(algebra);
    let rigid: Vec<bool> = all.par_iter().map(|o| is_rigid(o, bound)).collect::<Result<_>>()?;
    let mut pairs = Vec::new();
    for (a, o1) in all.iter().enumerate() {
        if !rigid[a] {
            continue;
        }
        for (b, o2) in all.iter().enumerate() {
            if !rigid[b] && o2 != o1 && o2.closure_leq(o1)? {
                pairs.push((o1.clone(), o2.clone()));
            }
        }
    }
    Ok(pairs)
}

/// JSON shape of an orbit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitExport {
    pub algebra: String,
    pub partition: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mark: Option<VeryEvenMark>,
    pub rigid: bool,
    pub dim: usize,
}

pub fn export_orbit(o: &OrbitLabel, bound: usize) -> Result<OrbitExport> {
    Ok(OrbitExport {
        algebra: o.algebra.to_string(),
        partition: o.partition.parts().to_vec(),
        mark: o.mark,
        rigid: is_rigid(o, bound)?,
        dim: orbit_dimension(o),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn parsing_and_display() {
        assert_eq!(p("3,2^2,1").parts(), &[3, 2, 2, 1]);
        assert_eq!(p("[1, 3 ,2]").parts(), &[3, 2, 1]);
        assert_eq!(p("3,2^2,1").compact(), "3,2^2,1");
        assert_eq!(p("3,1^5").to_string(), "3,1,1,1,1,1");
        assert!(Partition::parse("3,x").is_err());
        assert!(Partition::parse("0,1").is_err());
        assert_eq!(Algebra::parse("so8").unwrap(), Algebra::So(8));
        assert!(Algebra::parse("sp5").is_err());
    }

    #[test]
    fn duals() {
        assert_eq!(p("2,2").dual(), p("2,2"));
        assert_eq!(p("2,1,1").dual(), p("3,1"));
        assert_eq!(p("5").dual(), Partition::ones(5));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=12).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p("3,1^5"), &p("3,2^2,1")).unwrap());
        assert!(dominance_leq(&p("2,1,1"), &p("2,2")).unwrap());
        assert!(!dominance_leq(&p("2,2"), &p("3")).is_ok());
        assert!(!dominance_leq(&p("2,2"), &p("2,1,1")).unwrap());
    }

    #[test]
    fn sheet_order_examples() {
        assert!(!sheet_preceq(&p("2,1,1"), &p("2,2")).unwrap());
        assert!(sheet_preceq(&p("1^4"), &p("2,2")).unwrap());
        assert!(sheet_preceq(&p("2,2"), &p("2,2")).unwrap());
        let gl = Algebra::Gl(4);
        let a = OrbitLabel::new(gl, p("2,1,1")).unwrap();
        let b = OrbitLabel::new(gl, p("2,2")).unwrap();
        assert!(!sheet_closure_leq(&a, &b).unwrap());
        let so = OrbitLabel::zero(Algebra::So(4));
        assert!(sheet_closure_leq(&so, &so).is_err());
    }

    #[test]
    fn validity_and_marks() {
        assert!(Algebra::Sp(4).admits(&p("2,2")));
        assert!(!Algebra::Sp(4).admits(&p("3,1")));
        assert!(Algebra::So(8).admits(&p("5,3")));
        assert!(!Algebra::So(8).admits(&p("4,2,1,1")));
        let o = OrbitLabel::new(Algebra::So(8), p("2^4")).unwrap();
        assert_eq!(o.mark(), Some(VeryEvenMark::Unresolved));
        assert!(OrbitLabel::with_mark(Algebra::So(8), p("3,1^5"), Some(VeryEvenMark::I)).is_err());
        assert_eq!(orbits(Algebra::So(8)).len(), 12);
        let i = OrbitLabel::with_mark(Algebra::So(8), p("2^4"), Some(VeryEvenMark::I)).unwrap();
        let ii = OrbitLabel::with_mark(Algebra::So(8), p("2^4"), Some(VeryEvenMark::II)).unwrap();
        assert!(!i.closure_leq(&ii).unwrap());
        assert!(i.closure_leq(&i).unwrap());
    }

    #[test]
    fn collapse_examples() {
        assert_eq!(collapse(Algebra::Sp(4), &p("3,1")).unwrap().partition(), &p("2,2"));
        assert_eq!(collapse(Algebra::Sp(4), &p("2,2")).unwrap().partition(), &p("2,2"));
        assert_eq!(collapse(Algebra::So(8), &p("5,3")).unwrap().partition(), &p("5,3"));
        assert_eq!(collapse(Algebra::So(2), &p("2")).unwrap().partition(), &p("1,1"));
        assert!(collapse(Algebra::Sp(4), &p("3")).is_err());
    }

    #[test]
    fn orbit_dimensions() {
        assert_eq!(orbit_dimension(&OrbitLabel::zero(Algebra::Gl(5))), 0);
        assert_eq!(orbit_dimension(&OrbitLabel::new(Algebra::Sp(4), p("4")).unwrap()), 8);
        assert_eq!(
            orbit_dimension(&OrbitLabel::new(Algebra::So(8), p("3,2^2,1")).unwrap()),
            16
        );
        assert_eq!(orbit_dimension(&OrbitLabel::new(Algebra::So(8), p("7,1")).unwrap()), 24);
        assert_eq!(orbit_dimension(&OrbitLabel::new(Algebra::Gl(3), p("3")).unwrap()), 6);
    }

    #[test]
    fn induction_examples() {
        let gl4 = ClassicalLevi::new(Algebra::Gl(4), vec![2, 2], 0).unwrap();
        assert_eq!(induce(&gl4, &LeviOrbit::zero(&gl4)).unwrap().partition(), &p("2,2"));
        let whole = ClassicalLevi::new(Algebra::Gl(4), vec![4], 0).unwrap();
        let nu = LeviOrbit {
            nus: vec![p("3,1")],
            mu: Partition::empty(),
        };
        assert_eq!(induce(&whole, &nu).unwrap().partition(), &p("3,1"));
        let bad = LeviOrbit {
            nus: vec![p("3")],
            mu: Partition::empty(),
        };
        assert!(induce(&whole, &bad).is_err());
        assert!(ClassicalLevi::new(Algebra::So(8), vec![2], 3).is_err());
    }

    #[test]
    fn rigidity_in_so8_and_gl() {
        let so8 = Algebra::So(8);
        let rigid = |s: &str| is_rigid(&OrbitLabel::new(so8, p(s)).unwrap(), 14).unwrap();
        assert!(rigid("3,2^2,1"));
        assert!(!rigid("3,1^5"));
        assert!(rigid("1^8"));
        for n in 1..=7 {
            let r = rigid_orbits(Algebra::Gl(n), 14).unwrap();
            assert_eq!(r, vec![OrbitLabel::zero(Algebra::Gl(n))]);
        }
        assert!(matches!(
            is_rigid(&OrbitLabel::zero(Algebra::So(16)), 14),
            Err(Error::BoundExceeded { .. })
        ));
    }
}
