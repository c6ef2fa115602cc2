//! Machine checks of the finitely checkable statements, with a plain-text report.
//!
//! Every check is deterministic; the report contains no timings, so two runs with the
//! same inputs produce identical text.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::orbits::{self, Algebra, OrbitLabel, Partition};
use crate::root_system::{CartanType, Family, RootSystem, SubsystemBasis};
use crate::sheets::{self, IsolatedExtension, PseudoLevis};
use crate::strata::StrataAnalysis;
use crate::weyl::{WeylElement, WeylGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Kostant,
    GradedInvolutions,
    LemmaInvolutions,
    TMDecomposition,
    BruhatAntiiso,
    WcPartition,
    CodimInduction,
    D4Counterexample,
    SlnCounterexample,
    McninchBound,
    IsolatedExtension,
}

impl Check {
    pub const ALL: [Check; 11] = [
        Check::Kostant,
        Check::GradedInvolutions,
        Check::LemmaInvolutions,
        Check::TMDecomposition,
        Check::BruhatAntiiso,
        Check::WcPartition,
        Check::CodimInduction,
        Check::D4Counterexample,
        Check::SlnCounterexample,
        Check::McninchBound,
        Check::IsolatedExtension,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Kostant => "kostant",
            Check::GradedInvolutions => "graded-involutions",
            Check::LemmaInvolutions => "lemma-involutions",
            Check::TMDecomposition => "t-m-decomposition",
            Check::BruhatAntiiso => "bruhat-antiiso",
            Check::WcPartition => "wc-partition",
            Check::CodimInduction => "codim-induction",
            Check::D4Counterexample => "d4-counterexample",
            Check::SlnCounterexample => "sln-counterexample",
            Check::McninchBound => "mcninch-bound",
            Check::IsolatedExtension => "isolated-extension",
        }
    }

    /// Whether the check is parametrized by a root system type.
    pub fn takes_type(self) -> bool {
        !matches!(self, Check::D4Counterexample | Check::SlnCounterexample)
    }

    /// The types swept by `--all`.
    pub fn default_targets(self) -> Vec<CartanType> {
        match self {
            Check::Kostant | Check::GradedInvolutions | Check::LemmaInvolutions => weyl_matrix(),
            Check::TMDecomposition | Check::BruhatAntiiso | Check::WcPartition => strata_matrix(),
            Check::CodimInduction => Vec::new(),
            Check::McninchBound | Check::IsolatedExtension => pseudo_levi_matrix(),
            Check::D4Counterexample | Check::SlnCounterexample => Vec::new(),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

fn types(list: &[(Family, &[usize])]) -> Vec<CartanType> {
    list.iter()
        .flat_map(|(f, ranks)| ranks.iter().map(move |&n| CartanType::new(*f, n).expect("supported")))
        .collect()
}

/// Exhaustive Weyl-group sweeps: groups of order at most 10^5 up to F4.
pub fn weyl_matrix() -> Vec<CartanType> {
    types(&[
        (Family::A, &[1, 2, 3, 4, 5]),
        (Family::B, &[2, 3, 4]),
        (Family::C, &[3, 4]),
        (Family::D, &[4, 5]),
        (Family::G, &[2]),
        (Family::F, &[4]),
    ])
}

/// Every type whose involution classes are scanned.
pub fn strata_matrix() -> Vec<CartanType> {
    types(&[
        (Family::A, &[1, 2, 3, 4, 5, 6, 7]),
        (Family::B, &[2, 3, 4, 5, 6]),
        (Family::C, &[2, 3, 4, 5, 6]),
        (Family::D, &[4, 5, 6, 7]),
        (Family::G, &[2]),
        (Family::F, &[4]),
        (Family::E, &[6]),
    ])
}

/// Every supported root system.
pub fn pseudo_levi_matrix() -> Vec<CartanType> {
    types(&[
        (Family::A, &[1, 2, 3, 4, 5, 6, 7, 8]),
        (Family::B, &[2, 3, 4, 5, 6]),
        (Family::C, &[2, 3, 4, 5, 6]),
        (Family::D, &[4, 5, 6, 7]),
        (Family::G, &[2]),
        (Family::F, &[4]),
        (Family::E, &[6]),
    ])
}

/// Classical algebras swept by the induction check.
pub fn induction_matrix(max_dim: usize) -> Vec<Algebra> {
    let mut out = Vec::new();
    for n in 1..=max_dim {
        out.push(Algebra::Gl(n));
        out.push(Algebra::So(n));
        if n % 2 == 0 {
            out.push(Algebra::Sp(n));
        }
    }
    out
}

/// The classical algebra with the given root system.
pub fn algebra_of(ty: CartanType) -> Result<Algebra> {
    let n = ty.rank;
    match ty.family {
        Family::A => Ok(Algebra::Sl(n + 1)),
        Family::B => Ok(Algebra::So(2 * n + 1)),
        Family::C => Ok(Algebra::Sp(2 * n)),
        Family::D => Ok(Algebra::So(2 * n)),
        _ => Err(Error::UnsupportedType(format!("{ty} is not classical"))),
    }
}

/// Result of one check on one scope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub check: Check,
    pub scope: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {:<20} {:<6} {}",
            self.check.name(),
            self.scope,
            self.detail
        )
    }
}

/// An ordered list of outcomes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub outcomes: Vec<Outcome>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for o in &self.outcomes {
            out.push_str(&o.to_string());
            out.push('\n');
        }
        let failed = self.outcomes.iter().filter(|o| !o.passed).count();
        out.push_str(&format!(
            "{} checks, {} passed, {} failed\n",
            self.outcomes.len(),
            self.outcomes.len() - failed,
            failed
        ));
        out
    }
}

fn outcome(check: Check, scope: impl Into<String>, passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        check,
        scope: scope.into(),
        passed,
        detail: detail.into(),
    }
}

fn error_outcome(check: Check, scope: impl Into<String>, e: Error) -> Outcome {
    outcome(check, scope, false, format!("error: {e}"))
}

/// Runs one check, on `ty` when given and otherwise over the check's default matrix.
pub fn run(check: Check, ty: Option<CartanType>, config: &Config) -> Result<Report> {
    let outcomes = if check.takes_type() && check != Check::CodimInduction {
        match ty {
            Some(ty) => run_typed(&[check], ty, config),
            None => {
                let per_type: Vec<Vec<Outcome>> = check
                    .default_targets()
                    .into_par_iter()
                    .map(|t| run_typed(&[check], t, config))
                    .collect();
                per_type.into_iter().flatten().collect()
            }
        }
    } else if check == Check::CodimInduction {
        match ty {
            Some(ty) => vec![codim_induction(algebra_of(ty)?)],
            None => induction_matrix(10).into_par_iter().map(codim_induction).collect(),
        }
    } else {
        vec![run_untyped(check, config)]
    };
    Ok(Report { outcomes })
}

/// Runs every check over its default matrix. Outcomes are grouped by check, in the order
/// of [`Check::ALL`], and by type within a check.
pub fn run_all(config: &Config) -> Report {
    let weyl_checks = [Check::Kostant, Check::GradedInvolutions, Check::LemmaInvolutions];
    let strata_checks = [Check::TMDecomposition, Check::BruhatAntiiso, Check::WcPartition];
    let levi_checks = [Check::McninchBound, Check::IsolatedExtension];

    let weyl: Vec<Vec<Outcome>> = weyl_matrix()
        .into_par_iter()
        .map(|t| run_typed(&weyl_checks, t, config))
        .collect();
    let strata: Vec<Vec<Outcome>> = strata_matrix()
        .into_par_iter()
        .map(|t| run_typed(&strata_checks, t, config))
        .collect();
    let levis: Vec<Vec<Outcome>> = pseudo_levi_matrix()
        .into_par_iter()
        .map(|t| run_typed(&levi_checks, t, config))
        .collect();
    let induction: Vec<Outcome> = induction_matrix(10).into_par_iter().map(codim_induction).collect();

    let mut outcomes = Vec::new();
    for check in Check::ALL {
        let pick = |rows: &Vec<Vec<Outcome>>| -> Vec<Outcome> {
            rows.iter().flatten().filter(|o| o.check == check).cloned().collect()
        };
        match check {
            Check::Kostant | Check::GradedInvolutions | Check::LemmaInvolutions => outcomes.extend(pick(&weyl)),
            Check::TMDecomposition | Check::BruhatAntiiso | Check::WcPartition => outcomes.extend(pick(&strata)),
            Check::McninchBound | Check::IsolatedExtension => outcomes.extend(pick(&levis)),
            Check::CodimInduction => outcomes.extend(induction.iter().cloned()),
            Check::D4Counterexample | Check::SlnCounterexample => outcomes.push(run_untyped(check, config)),
        }
    }
    Report { outcomes }
}

fn run_typed(checks: &[Check], ty: CartanType, config: &Config) -> Vec<Outcome> {
    let scope = ty.to_string();
    let sys = RootSystem::build(ty);
    let mut out = Vec::new();
    let weyl: Vec<Check> = checks
        .iter()
        .copied()
        .filter(|c| matches!(c, Check::Kostant | Check::GradedInvolutions | Check::LemmaInvolutions))
        .collect();
    if !weyl.is_empty() {
        out.extend(weyl_checks(&weyl, &sys, config));
    }
    let strata: Vec<Check> = checks
        .iter()
        .copied()
        .filter(|c| matches!(c, Check::TMDecomposition | Check::BruhatAntiiso | Check::WcPartition))
        .collect();
    if !strata.is_empty() {
        match StrataAnalysis::new(&sys, config.scan_budget) {
            Ok(a) => out.extend(strata.iter().map(|&c| strata_check(c, &a))),
            Err(e) => out.extend(strata.iter().map(|&c| error_outcome(c, scope.clone(), e.clone()))),
        }
    }
    let levi: Vec<Check> = checks
        .iter()
        .copied()
        .filter(|c| matches!(c, Check::McninchBound | Check::IsolatedExtension))
        .collect();
    if !levi.is_empty() {
        match PseudoLevis::new(&sys, config.scan_budget) {
            Ok(p) => out.extend(levi.iter().map(|&c| levi_check(c, &p))),
            Err(e) => out.extend(levi.iter().map(|&c| error_outcome(c, scope.clone(), e.clone()))),
        }
    }
    if checks.contains(&Check::CodimInduction) {
        out.push(match algebra_of(ty) {
            Ok(a) => codim_induction(a),
            Err(e) => error_outcome(Check::CodimInduction, scope.clone(), e),
        });
    }
    out
}

/// Upper-set bitsets of the Bruhat order restricted to `elements`.
fn bruhat_bitsets(group: &WeylGroup, elements: &[WeylElement]) -> Vec<Vec<u64>> {
    let words = elements.len().div_ceil(64);
    elements
        .par_iter()
        .map(|u| {
            let mut row = vec![0u64; words];
            for (j, w) in elements.iter().enumerate() {
                if group.bruhat_leq(u, w) {
                    row[j / 64] |= 1 << (j % 64);
                }
            }
            row
        })
        .collect()
}

fn weyl_checks(checks: &[Check], sys: &RootSystem, config: &Config) -> Vec<Outcome> {
    let scope = sys.cartan_type().to_string();
    let group = WeylGroup::new(sys);
    let absolute = match group.absolute_lengths(config.scan_budget) {
        Ok(a) => a,
        Err(e) => {
            return checks
                .iter()
                .map(|&c| error_outcome(c, scope.clone(), e.clone()))
                .collect()
        }
    };
    let mut out = Vec::new();
    if checks.contains(&Check::Kostant) {
        let mut entries: Vec<(&WeylElement, &usize)> = absolute.iter().collect();
        entries.sort();
        let bad = entries
            .par_iter()
            .filter(|(w, &d)| group.reflection_rank(w) != d)
            .count();
        out.push(outcome(
            Check::Kostant,
            scope.clone(),
            bad == 0 && entries.len() == group.order(),
            format!("{} elements, {} mismatches", entries.len(), bad),
        ));
    }
    if !checks
        .iter()
        .any(|c| matches!(c, Check::GradedInvolutions | Check::LemmaInvolutions))
    {
        return out;
    }
    let mut inv: Vec<WeylElement> = absolute.keys().copied().filter(WeylElement::is_involution).collect();
    inv.sort_by_cached_key(|w| (group.length(w), *w));
    let lengths: Vec<usize> = inv.iter().map(|w| group.length(w)).collect();
    let abs: Vec<usize> = inv.iter().map(|w| absolute[w]).collect();
    let up = bruhat_bitsets(&group, &inv);
    let k = inv.len();
    let leq = |a: usize, b: usize| up[a][b / 64] >> (b % 64) & 1 == 1;

    if checks.contains(&Check::GradedInvolutions) {
        // below[b] as bitsets, to test for elements strictly between a and b
        let words = k.div_ceil(64);
        let mut down = vec![vec![0u64; words]; k];
        for a in 0..k {
            for b in 0..k {
                if leq(a, b) {
                    down[b][a / 64] |= 1 << (a % 64);
                }
            }
        }
        let (covers, bad): (usize, usize) = (0..k)
            .into_par_iter()
            .map(|a| {
                let mut covers = 0;
                let mut bad = 0;
                for b in 0..k {
                    if a == b || !leq(a, b) {
                        continue;
                    }
                    let between = (0..words).any(|i| {
                        let mut x = up[a][i] & down[b][i];
                        if i == a / 64 {
                            x &= !(1 << (a % 64));
                        }
                        if i == b / 64 {
                            x &= !(1 << (b % 64));
                        }
                        x != 0
                    });
                    if !between {
                        covers += 1;
                        if lengths[b] + abs[b] != lengths[a] + abs[a] + 2 {
                            bad += 1;
                        }
                    }
                }
                (covers, bad)
            })
            .reduce(|| (0, 0), |x, y| (x.0 + y.0, x.1 + y.1));
        out.push(outcome(
            Check::GradedInvolutions,
            scope.clone(),
            bad == 0,
            format!("{k} involutions, {covers} covers, {bad} violations"),
        ));
    }
    if checks.contains(&Check::LemmaInvolutions) {
        let bad = (0..k)
            .into_par_iter()
            .map(|a| {
                (0..k)
                    .filter(|&b| a != b && leq(a, b) && lengths[a] + abs[a] == lengths[b] + abs[b])
                    .count()
            })
            .sum::<usize>();
        out.push(outcome(
            Check::LemmaInvolutions,
            scope,
            bad == 0,
            format!("{k} involutions, {bad} violating pairs"),
        ));
    }
    out
}

fn strata_check(check: Check, a: &StrataAnalysis) -> Outcome {
    let scope = a.root_system().cartan_type().to_string();
    match check {
        Check::TMDecomposition => {
            let outside: Vec<_> = a.t().iter().filter(|p| p.in_m() == Some(false)).collect();
            let mut bad = 0;
            let mut errors = 0;
            for p in &outside {
                match a.decomposition_check(p) {
                    Ok(true) => {}
                    Ok(false) => bad += 1,
                    Err(_) => errors += 1,
                }
            }
            let discrepancies = a.maximum_discrepancies().len();
            outcome(
                check,
                scope,
                bad == 0 && errors == 0,
                format!(
                    "|T|={}, |M|={}, {} checked, {} failures, {} lemma violations, {} unique-length non-maxima",
                    a.t().len(),
                    a.m().len(),
                    outside.len(),
                    bad,
                    errors,
                    discrepancies
                ),
            )
        }
        Check::BruhatAntiiso => {
            let bad = a.antiisomorphism_failures().len();
            let k = a.t().len();
            outcome(check, scope, bad == 0, format!("{} pairs, {} failures", k * k, bad))
        }
        Check::WcPartition => {
            let strata = a.spherical_strata();
            let cmax = a.cmax_form_violations().len();
            let inconsistent = a.assignments().iter().filter(|x| x.key().is_none()).count();
            let unassigned = a.unassigned_classes(&strata).len();
            let dominance = a.dominance_failures(&strata).len();
            let without_max = a.involution_classes().iter().filter(|c| c.maximum().is_none()).count();
            let ok = cmax == 0 && inconsistent == 0 && unassigned == 0 && dominance == 0 && strata.len() == a.m().len();
            outcome(
                check,
                scope,
                ok,
                format!(
                    "{} strata, {} involution classes ({} without maximum), {} non-w0wS maxima, {} inconsistent, {} unassigned, {} undominated",
                    strata.len(),
                    a.involution_classes().len(),
                    without_max,
                    cmax,
                    inconsistent,
                    unassigned,
                    dominance
                ),
            )
        }
        _ => unreachable!("not a strata check"),
    }
}

fn levi_check(check: Check, p: &PseudoLevis) -> Outcome {
    let sys = p.root_system();
    let ty = sys.cartan_type();
    let scope = ty.to_string();
    match check {
        Check::McninchBound => {
            let max = p
                .classes()
                .iter()
                .map(|c| c.center_component_order())
                .max()
                .unwrap_or(1);
            let classical = ty.family.is_classical();
            let mut detail = format!("{} classes, max order {}", p.classes().len(), max);
            let mut ok = !classical || max <= 2;
            if ty == CartanType::new(Family::D, 4).expect("D4") {
                let order = SubsystemBasis::new(sys, &[0, 1, 3, 4])
                    .map(|b| sheets::center_component_order(&b))
                    .unwrap_or(0);
                ok &= order == 2;
                detail.push_str(&format!(", D2xD2 order {order}"));
            }
            if !classical {
                detail.push_str(" (bound not asserted)");
            }
            outcome(check, scope, ok, detail)
        }
        Check::IsolatedExtension => {
            let mut non_levi = 0;
            let mut bad = 0;
            for class in p.classes() {
                if class.is_levi() {
                    continue;
                }
                for m in class.members() {
                    non_levi += 1;
                    match p.isolated_extension(m) {
                        Ok(IsolatedExtension::Extended(b)) | Ok(IsolatedExtension::Isolated(b))
                            if b.len() == sys.rank() && p.class_of(b.indices()).is_ok_and(|c| !c.is_levi()) => {}
                        _ => bad += 1,
                    }
                }
            }
            let mut detail = format!("{non_levi} non-Levi subsets, {bad} failures");
            let mut ok = bad == 0;
            if ty == CartanType::new(Family::C, 5).expect("C5") {
                let found = p.isolated_extensions(&[0, 3, 5]).map(|exts| {
                    exts.iter()
                        .map(|b| p.class_of(b.indices()).map(|c| c.type_label()).unwrap_or_default())
                        .collect::<Vec<_>>()
                });
                let labels = found.unwrap_or_default();
                let c2c3 = labels.iter().any(|l| l == "C2xC3");
                let c1c4 = labels.iter().any(|l| l == "C1xC4");
                ok &= c2c3 && c1c4;
                detail.push_str(&format!(", C5 {{0,3,5}} extends to C2xC3: {c2c3}, C1xC4: {c1c4}"));
            }
            outcome(check, scope, ok, detail)
        }
        _ => unreachable!("not a pseudo-Levi check"),
    }
}

/// Codimension preservation for every Levi and orbit of `algebra`, and agreement of
/// one-stage and two-stage induction when the natural dimension is at most 8.
pub fn codim_induction(algebra: Algebra) -> Outcome {
    let mut cases = 0usize;
    let mut codim_bad = 0usize;
    let mut staged = 0usize;
    let mut staged_bad = 0usize;
    let mut errors = 0usize;
    for levi in orbits::levis(algebra) {
        for orbit in orbits::levi_orbits(&levi) {
            cases += 1;
            let Ok(induced) = orbits::induce(&levi, &orbit) else {
                errors += 1;
                continue;
            };
            let lhs = algebra.dim() - orbits::orbit_dimension(&induced);
            let rhs = levi.dim() - orbit.dim(&levi);
            if lhs != rhs {
                codim_bad += 1;
            }
            if algebra.natural_dim() <= 8 {
                for c in orbits::coarsenings(&levi) {
                    staged += 1;
                    match orbits::induce_in_stages(&levi, &orbit, &c) {
                        Ok(two) if two.partition() == induced.partition() => {}
                        Ok(_) => staged_bad += 1,
                        Err(_) => errors += 1,
                    }
                }
            }
        }
    }
    outcome(
        Check::CodimInduction,
        algebra.to_string(),
        codim_bad == 0 && staged_bad == 0 && errors == 0,
        format!(
            "{cases} inductions, {codim_bad} codimension failures, {staged} two-stage, {staged_bad} mismatches, {errors} errors"
        ),
    )
}

/// The so8 facts: `[3,2^2,1]` rigid, `[3,1^5]` not, and the only rigid orbit with a
/// non-rigid orbit in its closure is `[3,2^2,1]`.
pub fn d4_counterexample(config: &Config) -> Result<(bool, Vec<(OrbitLabel, OrbitLabel)>)> {
    let so8 = Algebra::So(8);
    let top = OrbitLabel::new(so8, Partition::parse("3,2^2,1")?)?;
    let low = OrbitLabel::new(so8, Partition::parse("3,1^5")?)?;
    let bound = config.rigidity_dim_bound;
    let pairs = orbits::counterexample_scan(so8, bound)?;
    let tops: std::collections::BTreeSet<&Partition> = pairs.iter().map(|(a, _)| a.partition()).collect();
    let ok = orbits::is_rigid(&top, bound)?
        && !orbits::is_rigid(&low, bound)?
        && orbits::dominance_leq(low.partition(), top.partition())?
        && pairs.contains(&(top.clone(), low))
        && tops.len() == 1
        && tops.contains(top.partition());
    Ok((ok, pairs))
}

/// The sl(n) facts for `4 <= n <= bound`: the `⪯`-failure `[2,1^(n-2)]` vs `[2^2,1^(n-4)]`
/// with dominance holding, and one sheet per partition.
pub fn sln_counterexample(config: &Config) -> Result<(bool, Vec<String>)> {
    let mut ok = Partition::parse("2,2")?.dual() == Partition::parse("2,2")?
        && Partition::parse("2,1,1")?.dual() == Partition::parse("3,1")?;
    let mut lines = Vec::new();
    for n in 1..=config.poset_bound {
        let poset = sheets::sl_sheet_poset(n, config.poset_bound)?;
        let count_ok = poset.len() == Partition::all(n).len() && poset.is_partial_order();
        let min_ok =
            poset.minimal_elements().len() == 1 && poset.elements()[poset.minimal_elements()[0]] == Partition::ones(n);
        ok &= count_ok && min_ok;
        if n >= 4 {
            let mut p = vec![2];
            p.extend(std::iter::repeat_n(1, n - 2));
            let mut q = vec![2, 2];
            q.extend(std::iter::repeat_n(1, n - 4));
            let (p, q) = (Partition::new(p), Partition::new(q));
            let witness = orbits::dominance_leq(&p, &q)? && !orbits::sheet_preceq(&p, &q)?;
            ok &= witness;
            lines.push(format!(
                "n={n}: {} sheets, witness [{}] vs [{}]: {}",
                poset.len(),
                p.compact(),
                q.compact(),
                if witness { "ok" } else { "missing" }
            ));
        } else {
            lines.push(format!("n={n}: {} sheets", poset.len()));
        }
    }
    Ok((ok, lines))
}

fn run_untyped(check: Check, config: &Config) -> Outcome {
    match check {
        Check::D4Counterexample => match d4_counterexample(config) {
            Ok((ok, pairs)) => {
                let shown: Vec<String> = pairs
                    .iter()
                    .map(|(a, b)| {
                        format!(
                            "([{}],[{}]{})",
                            a.partition().compact(),
                            b.partition().compact(),
                            mark_suffix(b)
                        )
                    })
                    .collect();
                outcome(check, "so8", ok, format!("pairs {}", shown.join(" ")))
            }
            Err(e) => error_outcome(check, "so8", e),
        },
        Check::SlnCounterexample => match sln_counterexample(config) {
            Ok((ok, lines)) => outcome(
                check,
                "sl_n",
                ok,
                format!(
                    "n<={}; {}",
                    config.poset_bound,
                    lines.last().cloned().unwrap_or_default()
                ),
            ),
            Err(e) => error_outcome(check, "sl_n", e),
        },
        _ => unreachable!("typed check"),
    }
}

fn mark_suffix(o: &OrbitLabel) -> &'static str {
    match o.mark() {
        Some(crate::orbits::VeryEvenMark::I) => "_I",
        Some(crate::orbits::VeryEvenMark::II) => "_II",
        Some(crate::orbits::VeryEvenMark::Unresolved) => "_?",
        None => "",
    }
}
