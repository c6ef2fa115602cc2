//! Root systems as explicit integer data in the simple-root basis.
//!
//! Simple roots are numbered as in Bourbaki. Index `0` addresses the extra node
//! of the extended Dynkin diagram, `alpha_0 = -highest_root`; indices `1..=n`
//! address the simple roots.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }
}

/// A Cartan–Killing type `X_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    /// Validates against the supported build matrix:
    /// A1–A8, B2–B6, C2–C6, D4–D7, G2, F4, E6.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => (1..=8).contains(&rank),
            Family::B | Family::C => (2..=6).contains(&rank),
            Family::D => (4..=7).contains(&rank),
            Family::G => rank == 2,
            Family::F => rank == 4,
            Family::E => rank == 6,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::UnsupportedType(format!("{}{}", family.letter(), rank)))
        }
    }

    /// Parses `"D"` plus a rank, or a self-contained label such as `"E6"`.
    pub fn parse(label: &str, rank: Option<usize>) -> Result<Self> {
        let label = label.trim();
        let mut chars = label.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::UnsupportedType(label.to_string())),
        };
        let rest = chars.as_str();
        let embedded = if rest.is_empty() {
            None
        } else {
            Some(
                rest.parse::<usize>()
                    .map_err(|_| Error::UnsupportedType(label.to_string()))?,
            )
        };
        let rank = match (embedded, rank) {
            (Some(a), Some(b)) if a != b => return Err(Error::UnsupportedType(format!("{label} with rank {b}"))),
            (Some(r), _) | (None, Some(r)) => r,
            (None, None) => match family {
                Family::G => 2,
                Family::F => 4,
                Family::E => 6,
                _ => return Err(Error::UnsupportedType(format!("{label} needs a rank"))),
            },
        };
        CartanType::new(family, rank)
    }

    /// Label as used in exports: the family letter for classical types,
    /// the full symbol (`G2`, `F4`, `E6`) otherwise.
    pub fn label(&self) -> String {
        if self.family.is_classical() {
            self.family.letter().to_string()
        } else {
            self.to_string()
        }
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> usize {
        let n = self.rank;
        let fact = |k: usize| (1..=k).product::<usize>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1usize << n) * fact(n),
            Family::D => (1usize << (n - 1)) * fact(n),
            Family::G => 12,
            Family::F => 1152,
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
        }
    }

    /// Number of roots (positive and negative).
    pub fn root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1),
            Family::B | Family::C => 2 * n * n,
            Family::D => 2 * n * (n - 1),
            Family::G => 12,
            Family::F => 48,
            Family::E => match n {
                6 => 72,
                7 => 126,
                _ => 240,
            },
        }
    }

    /// Bourbaki Cartan matrix, `cartan[i][j] = <alpha_i^vee, alpha_j>`.
    fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = linalg::identity(n);
        for row in a.iter_mut() {
            for x in row.iter_mut() {
                *x *= 2;
            }
        }
        let mut bond = |i: usize, j: usize, aij: i64, aji: i64| {
            a[i][j] = aij;
            a[j][i] = aji;
        };
        match self.family {
            Family::A => (0..n.saturating_sub(1)).for_each(|i| bond(i, i + 1, -1, -1)),
            Family::B => {
                (0..n - 2).for_each(|i| bond(i, i + 1, -1, -1));
                bond(n - 2, n - 1, -1, -2);
            }
            Family::C => {
                (0..n - 2).for_each(|i| bond(i, i + 1, -1, -1));
                bond(n - 2, n - 1, -2, -1);
            }
            Family::D => {
                (0..n - 2).for_each(|i| bond(i, i + 1, -1, -1));
                bond(n - 3, n - 1, -1, -1);
            }
            Family::G => bond(0, 1, -3, -1),
            Family::F => {
                bond(0, 1, -1, -1);
                bond(1, 2, -1, -2);
                bond(2, 3, -1, -1);
            }
            Family::E => {
                bond(0, 2, -1, -1);
                bond(1, 3, -1, -1);
                (2..n - 1).for_each(|i| bond(i, i + 1, -1, -1));
            }
        }
        a
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CartanType::parse(s, None)
    }
}

/// Coordinates of a root (or any lattice vector) in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn zero(n: usize) -> Self {
        RootVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        RootVector(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0) && self.0.iter().any(|&c| c < 0)
    }

    pub fn neg(&self) -> RootVector {
        RootVector(self.0.iter().map(|c| -c).collect())
    }

    pub fn add_scaled(&self, k: i64, other: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&other.0).map(|(a, b)| a + k * b).collect())
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let coeff = if c.abs() == 1 {
                String::new()
            } else {
                c.abs().to_string()
            };
            write!(f, "{sign}{coeff}a{}", i + 1)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    form: Vec<Vec<i64>>,
    /// Positive roots sorted by (height, coordinates), followed by their negatives in the same order.
    roots: Vec<RootVector>,
    highest_root: RootVector,
    index: HashMap<RootVector, usize>,
}

impl RootSystem {
    pub fn build(cartan_type: CartanType) -> Self {
        let n = cartan_type.rank;
        let cartan = cartan_type.cartan_matrix();
        let form = symmetrize(&cartan);

        // Closure of the simple roots under simple reflections.
        let mut seen: BTreeSet<RootVector> = BTreeSet::new();
        let mut queue: VecDeque<RootVector> = (0..n).map(|i| RootVector::unit(n, i)).collect();
        while let Some(root) = queue.pop_front() {
            if !seen.insert(root.clone()) {
                continue;
            }
            for i in 0..n {
                let image = simple_reflect(&cartan, i, &root);
                if !seen.contains(&image) {
                    queue.push_back(image);
                }
            }
        }
        let mut positive: Vec<RootVector> = seen.into_iter().filter(RootVector::is_positive).collect();
        positive.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
        let highest_root = positive.last().cloned().expect("nonempty root system");
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(RootVector::neg));
        let index = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        RootSystem {
            cartan_type,
            cartan,
            form,
            roots,
            highest_root,
            index,
        }
    }

    /// Builds the root system of a supported `(family, rank)`.
    pub fn of(family: Family, rank: usize) -> Result<Self> {
        Ok(Self::build(CartanType::new(family, rank)?))
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Invariant form in the simple-root basis; shortest roots have squared length 2.
    pub fn form(&self) -> &[Vec<i64>] {
        &self.form
    }

    pub fn roots(&self) -> &[RootVector] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[RootVector] {
        &self.roots[..self.roots.len() / 2]
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn simple_root(&self, i: usize) -> RootVector {
        RootVector::unit(self.rank(), i - 1)
    }

    pub fn simple_roots(&self) -> Vec<RootVector> {
        (1..=self.rank()).map(|i| self.simple_root(i)).collect()
    }

    pub fn highest_root(&self) -> &RootVector {
        &self.highest_root
    }

    /// Node `i` of the extended diagram: `0` is `-highest_root`, `1..=n` the simple roots.
    pub fn extended_node(&self, i: usize) -> Result<RootVector> {
        match i {
            0 => Ok(self.highest_root.neg()),
            i if i <= self.rank() => Ok(self.simple_root(i)),
            _ => Err(Error::InvalidBasis(format!(
                "node {i} out of range 0..={}",
                self.rank()
            ))),
        }
    }

    pub fn index_of(&self, v: &RootVector) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn is_root(&self, v: &RootVector) -> bool {
        self.index.contains_key(v)
    }

    pub fn inner(&self, a: &RootVector, b: &RootVector) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += a.0[i] * self.form[i][j] * b.0[j];
            }
        }
        s
    }

    /// `<a^vee, b> = 2(a,b)/(a,a)`.
    pub fn pairing(&self, a: &RootVector, b: &RootVector) -> i64 {
        2 * self.inner(a, b) / self.inner(a, a)
    }

    pub fn is_orthogonal(&self, a: &RootVector, b: &RootVector) -> bool {
        self.inner(a, b) == 0
    }

    /// Reflection of `v` in the hyperplane orthogonal to the root `a`.
    pub fn reflect(&self, a: &RootVector, v: &RootVector) -> RootVector {
        v.add_scaled(-(2 * self.inner(a, v) / self.inner(a, a)), a)
    }

    /// True when the root is long (or the system is simply laced).
    pub fn is_long(&self, a: &RootVector) -> bool {
        let max = (0..self.rank()).map(|i| self.form[i][i]).max().unwrap_or(2);
        self.inner(a, a) == max
    }

    /// Roots whose simple-root support lies in `mask` (bit `i-1` for `alpha_i`).
    pub fn parabolic_roots(&self, mask: u32) -> Vec<RootVector> {
        self.roots
            .iter()
            .filter(|r| r.0.iter().enumerate().all(|(i, &c)| c == 0 || mask >> i & 1 == 1))
            .cloned()
            .collect()
    }

    /// Permutation of root indices induced by each simple reflection.
    pub fn simple_reflection_permutations(&self) -> Vec<Vec<usize>> {
        (0..self.rank())
            .map(|i| {
                self.roots
                    .iter()
                    .map(|r| self.index[&simple_reflect(&self.cartan, i, r)])
                    .collect()
            })
            .collect()
    }

    pub fn export(&self) -> RootSystemExport {
        RootSystemExport {
            label: self.cartan_type.label(),
            rank: self.rank(),
            simple_roots: self.simple_roots().into_iter().map(|r| r.0).collect(),
            positive_roots: self.positive_roots().iter().map(|r| r.0.clone()).collect(),
            highest_root: self.highest_root.0.clone(),
        }
    }
}

/// JSON shape of an exported root system.
#[derive(Debug, Clone, Serialize)]
pub struct RootSystemExport {
    pub label: String,
    pub rank: usize,
    pub simple_roots: Vec<Vec<i64>>,
    pub positive_roots: Vec<Vec<i64>>,
    pub highest_root: Vec<i64>,
}

fn simple_reflect(cartan: &[Vec<i64>], i: usize, v: &RootVector) -> RootVector {
    let pairing: i64 = (0..v.0.len()).map(|j| cartan[i][j] * v.0[j]).sum();
    let mut out = v.clone();
    out.0[i] -= pairing;
    out
}

/// Symmetric invariant form `B` with `B_ij = d_i a_ij`, normalized so the shortest roots have
/// `B_ii = 2`. Works componentwise, so it also applies to reducible Cartan matrices.
pub fn symmetrize(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    // d_i as a fraction num/den, propagated along the diagram.
    let mut d: Vec<Option<(i64, i64)>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some((1, 1));
        let mut queue = VecDeque::from([start]);
        let mut component = vec![start];
        while let Some(i) = queue.pop_front() {
            let (num, den) = d[i].unwrap();
            for j in 0..n {
                if j == i || cartan[i][j] == 0 || d[j].is_some() {
                    continue;
                }
                // d_j a_ji = d_i a_ij
                let (mut nn, mut dd) = (num * cartan[i][j], den * cartan[j][i]);
                if dd < 0 {
                    nn = -nn;
                    dd = -dd;
                }
                let g = linalg::gcd(nn, dd);
                d[j] = Some((nn / g, dd / g));
                queue.push_back(j);
                component.push(j);
            }
        }
        // Scale this component to integers with minimum 1.
        let lcm = component
            .iter()
            .fold(1i64, |l, &i| l / linalg::gcd(l, d[i].unwrap().1) * d[i].unwrap().1);
        let mut ints: Vec<i64> = component
            .iter()
            .map(|&i| d[i].unwrap().0 * (lcm / d[i].unwrap().1))
            .collect();
        let g = ints.iter().fold(0, |g, &x| linalg::gcd(g, x));
        ints.iter_mut().for_each(|x| *x /= g);
        for (&i, &v) in component.iter().zip(&ints) {
            d[i] = Some((v, 1));
        }
    }
    (0..n)
        .map(|i| (0..n).map(|j| d[i].unwrap().0 * cartan[i][j]).collect())
        .collect()
}

/// A set of nodes of the extended Dynkin diagram, resolved to roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsystemBasis {
    indices: Vec<usize>,
    roots: Vec<RootVector>,
}

impl SubsystemBasis {
    /// Indices in `0..=n`; `0` is `alpha_0`. Duplicates are rejected.
    pub fn new(sys: &RootSystem, indices: &[usize]) -> Result<Self> {
        let mut sorted = indices.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidBasis(format!("repeated node in {indices:?}")));
        }
        let roots = sorted
            .iter()
            .map(|&i| sys.extended_node(i))
            .collect::<Result<Vec<_>>>()?;
        Ok(SubsystemBasis { indices: sorted, roots })
    }

    /// Bitmask over the `n+1` extended nodes (bit `i` for node `i`).
    pub fn from_mask(sys: &RootSystem, mask: u32) -> Result<Self> {
        let indices: Vec<usize> = (0..=sys.rank()).filter(|i| mask >> i & 1 == 1).collect();
        Self::new(sys, &indices)
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn roots(&self) -> &[RootVector] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn mask(&self) -> u32 {
        self.indices.iter().fold(0, |m, &i| m | 1 << i)
    }

    pub fn contains_alpha0(&self) -> bool {
        self.indices.first() == Some(&0)
    }

    pub fn is_linearly_independent(&self) -> bool {
        if self.roots.is_empty() {
            return true;
        }
        let rows: Vec<Vec<i64>> = self.roots.iter().map(|r| r.0.clone()).collect();
        linalg::rank(&rows) == self.roots.len()
    }
}

/// One simple factor of a subsystem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ComponentType {
    pub family: Family,
    pub rank: usize,
}

impl fmt::Display for ComponentType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A connected component of a subsystem basis, as positions into the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub ty: ComponentType,
    /// Extended-diagram node indices of this component.
    pub nodes: Vec<usize>,
}

/// Decomposes the subsystem generated by `basis` into simple components, sorted by
/// (type, nodes).
pub fn subsystem_components(sys: &RootSystem, basis: &SubsystemBasis) -> Result<Vec<Component>> {
    let roots = basis.roots();
    let k = roots.len();
    if k == 0 {
        return Ok(Vec::new());
    }
    if !basis.is_linearly_independent() {
        return Err(Error::LinearlyDependent);
    }
    let gram: Vec<Vec<i64>> = roots
        .iter()
        .map(|a| roots.iter().map(|b| sys.inner(a, b)).collect())
        .collect();
    let mut cartan = vec![vec![0i64; k]; k];
    for i in 0..k {
        for j in 0..k {
            if (2 * gram[i][j]) % gram[i][i] != 0 {
                return Err(Error::InvalidBasis("non-integral Cartan entry".into()));
            }
            cartan[i][j] = 2 * gram[i][j] / gram[i][i];
        }
    }
    for i in 0..k {
        for j in 0..k {
            if i != j {
                let prod = cartan[i][j] * cartan[j][i];
                if cartan[i][j] > 0 || !(0..=3).contains(&prod) {
                    return Err(Error::InvalidBasis(format!(
                        "nodes {} and {} do not form a simple system",
                        basis.indices[i], basis.indices[j]
                    )));
                }
            }
        }
    }
    // Positive definiteness via leading principal minors.
    for m in 1..=k {
        let minor: Vec<Vec<i64>> = gram[..m].iter().map(|r| r[..m].to_vec()).collect();
        if linalg::determinant(&minor) <= 0 {
            return Err(Error::NotFiniteType);
        }
    }

    let mut seen = vec![false; k];
    let mut components = Vec::new();
    for start in 0..k {
        if seen[start] {
            continue;
        }
        let mut nodes = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < nodes.len() {
            let i = nodes[head];
            head += 1;
            for j in 0..k {
                if !seen[j] && cartan[i][j] != 0 {
                    seen[j] = true;
                    nodes.push(j);
                }
            }
        }
        nodes.sort_unstable();
        let ty = classify_component(sys, &cartan, &gram, &nodes)?;
        components.push(Component {
            ty,
            nodes: nodes.iter().map(|&p| basis.indices[p]).collect(),
        });
    }
    components.sort_by(|a, b| a.ty.cmp(&b.ty).then_with(|| a.nodes.cmp(&b.nodes)));
    Ok(components)
}

/// Multiset of simple component types of the subsystem generated by `basis`.
pub fn subsystem_type(sys: &RootSystem, basis: &SubsystemBasis) -> Result<Vec<ComponentType>> {
    Ok(subsystem_components(sys, basis)?.into_iter().map(|c| c.ty).collect())
}

fn classify_component(
    sys: &RootSystem,
    cartan: &[Vec<i64>],
    gram: &[Vec<i64>],
    nodes: &[usize],
) -> Result<ComponentType> {
    let k = nodes.len();
    let ambient = sys.cartan_type().family;
    let ty = |family, rank| Ok(ComponentType { family, rank });
    if k == 1 {
        let long = gram[nodes[0]][nodes[0]] == (0..sys.rank()).map(|i| sys.form()[i][i]).max().unwrap();
        // Isolated long roots of C_n are C1 (Sp2); isolated short roots of B_n are B1 (SO3).
        return match (ambient, long) {
            (Family::C, true) => ty(Family::C, 1),
            (Family::B, false) => ty(Family::B, 1),
            _ => ty(Family::A, 1),
        };
    }
    let mut degree = vec![0usize; k];
    let mut edges = 0;
    let mut multi: Option<(usize, usize, i64)> = None;
    for a in 0..k {
        for b in a + 1..k {
            let (i, j) = (nodes[a], nodes[b]);
            let prod = cartan[i][j] * cartan[j][i];
            if prod != 0 {
                degree[a] += 1;
                degree[b] += 1;
                edges += 1;
                if prod > 1 {
                    multi = Some((a, b, prod));
                }
            }
        }
    }
    if edges != k - 1 {
        return Err(Error::NotFiniteType);
    }
    match multi {
        Some((_, _, 3)) if k == 2 => ty(Family::G, 2),
        Some((_, _, 3)) => Err(Error::NotFiniteType),
        Some((a, b, _)) => {
            let (i, j) = (nodes[a], nodes[b]);
            let long_pos = if gram[i][i] > gram[j][j] { a } else { b };
            if k == 2 {
                return ty(if ambient == Family::C { Family::C } else { Family::B }, 2);
            }
            if degree[a] >= 2 && degree[b] >= 2 {
                return if k == 4 {
                    ty(Family::F, 4)
                } else {
                    Err(Error::NotFiniteType)
                };
            }
            if degree[long_pos] == 1 {
                ty(Family::C, k)
            } else {
                ty(Family::B, k)
            }
        }
        None => {
            let Some(branch) = (0..k).find(|&a| degree[a] >= 3) else {
                return ty(Family::A, k);
            };
            if degree[branch] > 3 {
                return Err(Error::NotFiniteType);
            }
            // Arm lengths from the branch node.
            let mut arms = Vec::new();
            for start in 0..k {
                let (i, bi) = (nodes[start], nodes[branch]);
                if start == branch || cartan[bi][i] == 0 {
                    continue;
                }
                let mut len = 1;
                let (mut prev, mut cur) = (branch, start);
                loop {
                    let next = (0..k).find(|&c| c != prev && c != cur && cartan[nodes[cur]][nodes[c]] != 0);
                    match next {
                        Some(c) => {
                            len += 1;
                            prev = cur;
                            cur = c;
                        }
                        None => break,
                    }
                }
                arms.push(len);
            }
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => ty(Family::D, k),
                [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => ty(Family::E, k),
                _ => Err(Error::NotFiniteType),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(f: Family, n: usize) -> RootSystem {
        RootSystem::of(f, n).unwrap()
    }

    fn all_supported() -> Vec<CartanType> {
        let mut v = Vec::new();
        for n in 1..=8 {
            v.push(CartanType::new(Family::A, n).unwrap());
        }
        for n in 2..=6 {
            v.push(CartanType::new(Family::B, n).unwrap());
            v.push(CartanType::new(Family::C, n).unwrap());
        }
        for n in 4..=7 {
            v.push(CartanType::new(Family::D, n).unwrap());
        }
        v.push(CartanType::new(Family::G, 2).unwrap());
        v.push(CartanType::new(Family::F, 4).unwrap());
        v.push(CartanType::new(Family::E, 6).unwrap());
        v
    }

    #[test]
    fn root_counts_match_formulas() {
        for t in all_supported() {
            let s = RootSystem::build(t);
            assert_eq!(s.roots().len(), t.root_count(), "{t}");
        }
        assert_eq!(sys(Family::D, 4).roots().len(), 24);
        assert_eq!(sys(Family::F, 4).roots().len(), 48);
        let a1 = sys(Family::A, 1);
        assert_eq!(a1.roots(), &[RootVector(vec![1]), RootVector(vec![-1])]);
    }

    #[test]
    fn reflection_closure_and_sign_coherence() {
        for t in all_supported() {
            let s = RootSystem::build(t);
            for r in s.roots() {
                assert!(r.is_positive() || r.is_negative());
                for i in 1..=s.rank() {
                    assert!(s.is_root(&s.reflect(&s.simple_root(i), r)));
                }
            }
            let h = s.highest_root();
            for r in s.positive_roots() {
                assert!(r.0.iter().zip(&h.0).all(|(a, b)| a <= b), "{t}: {r}");
            }
        }
    }

    #[test]
    fn unsupported_types_are_rejected() {
        assert!(CartanType::new(Family::E, 7).is_err());
        assert!(CartanType::new(Family::D, 3).is_err());
        assert!(CartanType::new(Family::A, 9).is_err());
        assert!(CartanType::parse("F", Some(3)).is_err());
        assert_eq!(CartanType::parse("g2", None).unwrap().to_string(), "G2");
        assert_eq!(CartanType::parse("D", Some(4)).unwrap().to_string(), "D4");
    }

    #[test]
    fn highest_roots() {
        let cases: Vec<(Family, usize, Vec<i64>)> = vec![
            (Family::A, 3, vec![1, 1, 1]),
            (Family::B, 4, vec![1, 2, 2, 2]),
            (Family::C, 5, vec![2, 2, 2, 2, 1]),
            (Family::D, 4, vec![1, 2, 1, 1]),
            (Family::G, 2, vec![3, 2]),
            (Family::F, 4, vec![2, 3, 4, 2]),
            (Family::E, 6, vec![1, 2, 2, 3, 2, 1]),
        ];
        for (f, n, h) in cases {
            assert_eq!(sys(f, n).highest_root().0, h, "{f:?}{n}");
        }
    }

    #[test]
    fn form_is_symmetric_and_matches_cartan() {
        for t in all_supported() {
            let s = RootSystem::build(t);
            let n = s.rank();
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(s.form()[i][j], s.form()[j][i]);
                    assert_eq!(2 * s.form()[i][j] / s.form()[i][i], s.cartan()[i][j]);
                }
            }
        }
    }

    #[test]
    fn orthogonality() {
        let a2 = sys(Family::A, 2);
        assert!(!a2.is_orthogonal(&a2.simple_root(1), &a2.simple_root(2)));
        let d4 = sys(Family::D, 4);
        assert!(d4.is_orthogonal(&d4.simple_root(1), &d4.simple_root(3)));
        // B2: (a1, a1+a2) expanded in the form [[4,-2],[-2,2]] is 4 - 2 = 2.
        let b2 = sys(Family::B, 2);
        let v = RootVector(vec![1, 1]);
        assert_eq!(b2.form(), &[vec![4, -2], vec![-2, 2]]);
        assert_eq!(b2.inner(&b2.simple_root(1), &v), 2);
        assert!(!b2.is_orthogonal(&b2.simple_root(1), &v));
        // The long roots a1 and a1+2a2 are orthogonal: 4 + 2(-2) = 0.
        let w = RootVector(vec![1, 2]);
        assert!(b2.is_orthogonal(&b2.simple_root(1), &w));
    }

    #[test]
    fn subsystem_types_from_extended_diagram() {
        let d4 = sys(Family::D, 4);
        let b = SubsystemBasis::new(&d4, &[1, 3, 4, 0]).unwrap();
        let a1 = ComponentType {
            family: Family::A,
            rank: 1,
        };
        assert_eq!(subsystem_type(&d4, &b).unwrap(), vec![a1; 4]);

        let c5 = sys(Family::C, 5);
        let b = SubsystemBasis::new(&c5, &[0, 3, 5]).unwrap();
        let c1 = ComponentType {
            family: Family::C,
            rank: 1,
        };
        assert_eq!(subsystem_type(&c5, &b).unwrap(), vec![a1, c1, c1]);
        let b = SubsystemBasis::new(&c5, &[0, 1, 3, 4, 5]).unwrap();
        let got = subsystem_type(&c5, &b).unwrap();
        assert_eq!(
            got,
            vec![
                ComponentType {
                    family: Family::C,
                    rank: 2
                },
                ComponentType {
                    family: Family::C,
                    rank: 3
                }
            ]
        );

        let empty = SubsystemBasis::new(&d4, &[]).unwrap();
        assert!(subsystem_type(&d4, &empty).unwrap().is_empty());

        let all = SubsystemBasis::new(&d4, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(subsystem_type(&d4, &all), Err(Error::LinearlyDependent));
    }

    #[test]
    fn full_basis_recovers_ambient_type() {
        for t in all_supported() {
            let s = RootSystem::build(t);
            let idx: Vec<usize> = (1..=s.rank()).collect();
            let b = SubsystemBasis::new(&s, &idx).unwrap();
            let got = subsystem_type(&s, &b).unwrap();
            assert_eq!(got.len(), 1);
            let expect = match (t.family, t.rank) {
                (Family::B, 2) => ComponentType {
                    family: Family::B,
                    rank: 2,
                },
                _ => ComponentType {
                    family: t.family,
                    rank: t.rank,
                },
            };
            assert_eq!(got[0], expect, "{t}");
        }
    }

    #[test]
    fn every_proper_extended_subset_is_finite_type() {
        for t in all_supported() {
            let s = RootSystem::build(t);
            let full = (1u32 << (s.rank() + 1)) - 1;
            for mask in 0..full {
                let b = SubsystemBasis::from_mask(&s, mask).unwrap();
                let comps = subsystem_type(&s, &b).unwrap_or_else(|e| panic!("{t} {mask:b}: {e}"));
                assert_eq!(comps.iter().map(|c| c.rank).sum::<usize>(), b.len());
            }
        }
    }
}
