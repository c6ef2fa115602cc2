use proptest::prelude::*;
use stratalab::orbits::{self, Algebra, OrbitLabel, Partition};

fn all_upto(n: usize) -> impl Iterator<Item = (usize, Vec<Partition>)> {
    (1..=n).map(|k| (k, Partition::all(k)))
}

/// Every way of splitting `items` into unordered blocks, as lists of block sums.
fn block_sums(items: &[usize]) -> Vec<Vec<usize>> {
    fn go(items: &[usize], blocks: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some((&x, rest)) = items.split_first() else {
            let mut s = blocks.clone();
            s.sort_unstable_by(|a, b| b.cmp(a));
            out.push(s);
            return;
        };
        for i in 0..blocks.len() {
            blocks[i] += x;
            go(rest, blocks, out);
            blocks[i] -= x;
        }
        blocks.push(x);
        go(rest, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    go(items, &mut Vec::new(), &mut out);
    out
}

fn partition_strategy() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..12, 0..12).prop_map(Partition::new)
}

proptest! {
    #[test]
    fn dual_is_an_involution(p in partition_strategy()) {
        prop_assert_eq!(p.dual().dual(), p.clone());
        prop_assert_eq!(p.dual().size(), p.size());
    }

    #[test]
    fn dual_parts_count_rows(p in partition_strategy()) {
        let d = p.dual();
        for i in 1..=d.len() {
            prop_assert_eq!(d.part(i - 1), p.parts().iter().filter(|&&x| x >= i).count());
        }
    }

    #[test]
    fn dominance_reverses_under_dual(a in partition_strategy(), b in partition_strategy()) {
        if a.size() == b.size() {
            prop_assert_eq!(
                orbits::dominance_leq(&a, &b).unwrap(),
                orbits::dominance_leq(&b.dual(), &a.dual()).unwrap()
            );
        }
    }
}

#[test]
fn dominance_and_preceq_are_partial_orders() {
    for (_, ps) in all_upto(10) {
        for rel in [orbits::dominance_leq, orbits::sheet_preceq] {
            let m: Vec<Vec<bool>> = ps
                .iter()
                .map(|a| ps.iter().map(|b| rel(a, b).unwrap()).collect())
                .collect();
            let k = ps.len();
            for a in 0..k {
                assert!(m[a][a]);
                for b in 0..k {
                    assert!(a == b || !(m[a][b] && m[b][a]));
                    for c in 0..k {
                        assert!(!(m[a][b] && m[b][c]) || m[a][c]);
                    }
                }
            }
        }
    }
}

#[test]
fn preceq_implies_dominance() {
    for (_, ps) in all_upto(10) {
        for a in &ps {
            for b in &ps {
                if orbits::sheet_preceq(a, b).unwrap() {
                    assert!(orbits::dominance_leq(a, b).unwrap(), "{a} {b}");
                }
            }
        }
    }
}

#[test]
fn preceq_matches_set_partition_search() {
    for (_, ps) in all_upto(8) {
        for a in &ps {
            for b in &ps {
                let target = a.dual().parts().to_vec();
                let expected = block_sums(b.dual().parts()).contains(&target);
                assert_eq!(orbits::sheet_preceq(a, b).unwrap(), expected, "{a} {b}");
            }
        }
    }
}

#[test]
fn mismatched_sizes_are_rejected() {
    let a = Partition::parse("2,1").unwrap();
    let b = Partition::parse("2,2").unwrap();
    assert!(orbits::dominance_leq(&a, &b).is_err());
    assert!(orbits::sheet_preceq(&a, &b).is_err());
}

fn classical(max: usize) -> Vec<Algebra> {
    let mut out = Vec::new();
    for n in 2..=max {
        if n % 2 == 0 {
            out.push(Algebra::Sp(n));
        }
        if n >= 3 {
            out.push(Algebra::So(n));
        }
    }
    out
}

#[test]
fn collapse_is_the_largest_dominated_orbit() {
    for a in classical(10) {
        let valid: Vec<Partition> = Partition::all(a.natural_dim())
            .into_iter()
            .filter(|p| a.admits(p))
            .collect();
        for p in Partition::all(a.natural_dim()) {
            let below: Vec<&Partition> = valid.iter().filter(|q| orbits::dominance_leq(q, &p).unwrap()).collect();
            let max: Vec<&&Partition> = below
                .iter()
                .filter(|q| below.iter().all(|r| orbits::dominance_leq(r, q).unwrap()))
                .collect();
            assert_eq!(max.len(), 1, "{a} {p}");
            assert_eq!(orbits::collapse(a, &p).unwrap().partition(), *max[0], "{a} {p}");
        }
    }
}

/// Gaps of at most one between consecutive parts (the last part against zero), and no
/// part of the critical parity occurring exactly twice.
fn closed_form_rigid(a: Algebra, p: &Partition) -> bool {
    let mut parts = p.parts().to_vec();
    parts.push(0);
    if parts.windows(2).any(|w| w[0] - w[1] > 1) {
        return false;
    }
    let critical = |k: usize| match a {
        Algebra::Sp(_) => k.is_multiple_of(2),
        _ => k % 2 == 1,
    };
    !p.parts().iter().any(|&k| critical(k) && p.multiplicity(k) == 2)
}

#[test]
fn rigidity_matches_closed_form() {
    for a in classical(14) {
        for o in orbits::orbits(a) {
            assert_eq!(
                orbits::is_rigid(&o, 14).unwrap(),
                closed_form_rigid(a, o.partition()),
                "{o}"
            );
        }
    }
}

#[test]
fn maximal_levis_suffice_for_rigidity() {
    for a in classical(10).into_iter().chain((2..=8).map(Algebra::Gl)) {
        for o in orbits::orbits(a) {
            assert_eq!(
                orbits::is_rigid(&o, 14).unwrap(),
                orbits::is_rigid_exhaustive(&o, 14).unwrap(),
                "{o}"
            );
        }
    }
}

#[test]
fn only_zero_is_rigid_in_type_a() {
    for n in 1..=8 {
        for a in [Algebra::Gl(n), Algebra::Sl(n)] {
            let rigid = orbits::rigid_orbits(a, 14).unwrap();
            assert_eq!(rigid.len(), 1);
            assert!(rigid[0].is_zero());
            assert!(orbits::counterexample_scan(a, 14).unwrap().is_empty());
        }
    }
}

#[test]
fn rigidity_bound_is_enforced() {
    let o = OrbitLabel::zero(Algebra::Sp(16));
    assert!(orbits::is_rigid(&o, 14).is_err());
}

#[test]
fn orbit_dimension_matches_weighted_row_sum() {
    // dim of the centraliser as sum of (2i-1) times the i-th part
    for a in classical(12).into_iter().chain((1..=8).map(Algebra::Gl)) {
        for o in orbits::orbits(a) {
            let p = o.partition();
            let weighted: usize = p.parts().iter().enumerate().map(|(i, &x)| (2 * i + 1) * x).sum();
            let odd = p.parts().iter().filter(|&&x| x % 2 == 1).count();
            let centraliser = match a {
                Algebra::Gl(_) => weighted,
                Algebra::Sp(_) => (weighted + odd) / 2,
                Algebra::So(_) => (weighted - odd) / 2,
                Algebra::Sl(_) => weighted - 1,
            };
            assert_eq!(orbits::orbit_dimension(&o), a.dim() - centraliser, "{o}");
        }
    }
}

#[test]
fn regular_orbit_dimension_is_dim_minus_rank() {
    let sp4 = OrbitLabel::new(Algebra::Sp(4), Partition::parse("4").unwrap()).unwrap();
    assert_eq!(orbits::orbit_dimension(&sp4), 8);
    let so8 = OrbitLabel::new(Algebra::So(8), Partition::parse("7,1").unwrap()).unwrap();
    assert_eq!(orbits::orbit_dimension(&so8), 28 - 4);
}

#[test]
fn invalid_labels_are_rejected() {
    assert!(OrbitLabel::new(Algebra::Sp(4), Partition::parse("3,1").unwrap()).is_err());
    assert!(OrbitLabel::new(Algebra::So(5), Partition::parse("2,2,1").unwrap()).is_ok());
    assert!(OrbitLabel::new(Algebra::So(6), Partition::parse("2,1^4").unwrap()).is_err());
}
