//! Exact integer linear algebra on small dense matrices.

pub type IntMatrix = Vec<Vec<i64>>;

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

/// Rank over the rationals, by fraction-free elimination.
pub fn rank(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|row| row.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        for r in rank + 1..rows {
            if a[r][col] == 0 {
                continue;
            }
            let (p, q) = (a[rank][col], a[r][col]);
            for c in col..cols {
                a[r][c] = a[r][c] * p - a[rank][c] * q;
            }
            let g = a[r].iter().fold(0i128, |g, &x| gcd128(g, x));
            if g > 1 {
                a[r].iter_mut().for_each(|x| *x /= g);
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn gcd128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Determinant of a square matrix (Bareiss).
pub fn determinant(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|row| row.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

/// Nonzero invariant factors `d_1 | d_2 | ...` of an integer matrix (Smith form diagonal).
pub fn invariant_factors(m: &[Vec<i64>]) -> Vec<i64> {
    let mut a: IntMatrix = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut factors = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Smallest nonzero entry in the trailing block becomes the pivot.
        let mut best: Option<(usize, usize)> = None;
        for r in t..rows {
            for c in t..cols {
                if a[r][c] != 0 && best.is_none_or(|(br, bc)| a[r][c].abs() < a[br][bc].abs()) {
                    best = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = best else { break };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        let mut clean = true;
        for r in t + 1..rows {
            let q = a[r][t] / a[t][t];
            if q != 0 {
                for c in t..cols {
                    a[r][c] -= q * a[t][c];
                }
            }
            clean &= a[r][t] == 0;
        }
        for c in t + 1..cols {
            let q = a[t][c] / a[t][t];
            if q != 0 {
                for r in t..rows {
                    a[r][c] -= q * a[r][t];
                }
            }
            clean &= a[t][c] == 0;
        }
        if !clean {
            continue;
        }
        let d = a[t][t];
        if let Some(r) = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| a[r][c] % d != 0)) {
            for c in t..cols {
                a[t][c] += a[r][c];
            }
            continue;
        }
        factors.push(d.abs());
        t += 1;
    }
    factors
}

/// Order of the torsion subgroup of `Z^rows / (column span of m)`.
pub fn torsion_order(m: &[Vec<i64>]) -> i64 {
    invariant_factors(m).iter().product()
}

pub fn mat_sub(a: &[Vec<i64>], b: &[Vec<i64>]) -> IntMatrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x - y).collect())
        .collect()
}
