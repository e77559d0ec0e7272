//! Independent reference computations for the integration tests. Nothing
//! here calls into the library's matrix or homology code.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;

pub type Dense = Vec<Vec<BigInt>>;

pub fn dense_from_i64(rows: &[Vec<i64>]) -> Dense {
    rows.iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect()
}

/// Invariant factors by plain row and column reduction on a dense matrix.
pub fn dense_snf(mut a: Dense) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero()
                    && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let p = a[t][t].clone();
        let mut clean = true;
        for i in t + 1..rows {
            let q = a[i][t].div_floor(&p);
            if !q.is_zero() {
                for j in t..cols {
                    let v = &q * &a[t][j];
                    a[i][j] -= v;
                }
            }
            clean &= a[i][t].is_zero();
        }
        for j in t + 1..cols {
            let q = a[t][j].div_floor(&p);
            if !q.is_zero() {
                for i in t..rows {
                    let v = &q * &a[i][t];
                    a[i][j] -= v;
                }
            }
            clean &= a[t][j].is_zero();
        }
        if !clean {
            continue;
        }
        // the pivot must divide the rest; otherwise fold a row in and retry
        let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&p)));
        if let Some(i) = bad {
            for j in t..cols {
                let v = a[i][j].clone();
                a[t][j] += v;
            }
            continue;
        }
        out.push(p.abs());
        t += 1;
    }
    out
}

fn det(m: &[Vec<BigInt>]) -> BigInt {
    let k = m.len();
    if k == 0 {
        return BigInt::one();
    }
    if k == 1 {
        return m[0][0].clone();
    }
    // cofactor expansion along the first row; k is at most 6
    let mut total = BigInt::zero();
    for c in 0..k {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != c)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][c] * det(&minor);
        if c % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors from determinantal divisors: `d_k` is the gcd of all
/// `k x k` minors and `s_k = d_k / d_{k-1}`.
pub fn minor_gcd_factors(a: &Dense) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut prev = BigInt::one();
    for k in 1..=rows.min(cols) {
        let mut g = BigInt::zero();
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let m: Vec<Vec<BigInt>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| a[r][c].clone()).collect())
                    .collect();
                g = g.gcd(&det(&m));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push(&g / &prev);
        prev = g;
    }
    out
}

pub fn random_dense(rng: &mut impl Rng, max_dim: usize, bound: i64) -> Dense {
    let r = rng.gen_range(1..=max_dim);
    let c = rng.gen_range(1..=max_dim);
    let zero_bias = rng.gen_range(0.0..0.7);
    (0..r)
        .map(|_| {
            (0..c)
                .map(|_| {
                    if rng.gen_bool(zero_bias) {
                        BigInt::zero()
                    } else {
                        BigInt::from(rng.gen_range(-bound..=bound))
                    }
                })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &Dense, b: &Dense) -> Dense {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn is_zero(a: &Dense) -> bool {
    a.iter().all(|r| r.iter().all(Zero::is_zero))
}

pub fn rank(a: &Dense) -> usize {
    dense_snf(a.clone()).len()
}

/// `(x_0, ..., x_d)` for a lexicographic index, leftmost entry most
/// significant.
pub fn tuple_of(mut idx: usize, len: usize, n: usize) -> Vec<usize> {
    let mut t = vec![0; len];
    for slot in t.iter_mut().rev() {
        *slot = idx % n;
        idx /= n;
    }
    t
}

pub fn index_of(t: &[usize], n: usize) -> usize {
    t.iter().fold(0, |acc, &x| acc * n + x)
}

/// Table as a row-major vector, `op[x * n + y] = x * y`.
pub type Op = Vec<usize>;

/// Boundary `C_d -> C_{d-1}` of `sum_k c_k d^k` straight from the face
/// formula. Degree 0 gives the augmentation row, or an empty matrix.
pub fn boundary(n: usize, ops: &[Op], c: &[i64], d: usize, augmented: bool) -> Dense {
    let cols = n.pow(d as u32 + 1);
    if d == 0 {
        let rows = usize::from(augmented);
        return vec![vec![BigInt::from(1); cols]; rows];
    }
    let rows = n.pow(d as u32);
    let mut m = vec![vec![0i64; cols]; rows];
    for col in 0..cols {
        let t = tuple_of(col, d + 1, n);
        for (op, &ck) in ops.iter().zip(c) {
            for i in 0..=d {
                let mut face = Vec::with_capacity(d);
                for (j, &x) in t.iter().enumerate() {
                    if j < i {
                        face.push(op[x * n + t[i]]);
                    } else if j > i {
                        face.push(x);
                    }
                }
                let sign = if i % 2 == 0 { 1 } else { -1 };
                m[index_of(&face, n)][col] += sign * ck;
            }
        }
    }
    dense_from_i64(&m)
}

/// Free ranks and torsion of `H_0 .. H_maxdeg` from dense boundaries.
pub fn homology(n: usize, ops: &[Op], c: &[i64], maxdeg: usize, augmented: bool) -> Vec<(usize, Vec<BigInt>)> {
    let mats: Vec<Dense> = (0..=maxdeg + 1)
        .map(|d| boundary(n, ops, c, d, augmented))
        .collect();
    let dims: Vec<usize> = (0..=maxdeg).map(|d| n.pow(d as u32 + 1)).collect();
    homology_from(&mats, &dims)
}

/// Given `d_0 .. d_{k+1}` and the chain group ranks `dims[0..=k]`, the
/// groups `H_0 .. H_k`.
pub fn homology_from(mats: &[Dense], dims: &[usize]) -> Vec<(usize, Vec<BigInt>)> {
    let snfs: Vec<Vec<BigInt>> = mats.iter().map(|m| dense_snf(m.clone())).collect();
    (0..dims.len())
        .map(|d| {
            let rank = dims[d] - snfs[d].len() - snfs[d + 1].len();
            let torsion = snfs[d + 1]
                .iter()
                .filter(|s| !s.is_one())
                .cloned()
                .collect();
            (rank, torsion)
        })
        .collect()
}

pub fn is_shelf(n: usize, op: &[usize]) -> bool {
    mutually_distributive(n, op, op)
}

/// `(x a y) b z = (x b z) a (y b z)` everywhere.
pub fn mutually_distributive(n: usize, a: &[usize], b: &[usize]) -> bool {
    (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| b[a[x * n + y] * n + z] == a[b[x * n + z] * n + b[y * n + z]])
        })
    })
}

/// Every shelf table on `n` elements by exhaustive search.
pub fn all_shelves(n: usize) -> Vec<Op> {
    let cells = n * n;
    let total = n.pow(cells as u32);
    (0..total)
        .map(|code| tuple_of(code, cells, n))
        .filter(|t| is_shelf(n, t))
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Number of isomorphism classes among `tables`, by orbit counting under
/// relabeling.
pub fn class_count(n: usize, tables: &[Op]) -> usize {
    let perms = permutations(n);
    let mut seen = std::collections::HashSet::new();
    let mut classes = 0;
    for t in tables {
        if seen.contains(t) {
            continue;
        }
        classes += 1;
        for p in &perms {
            let mut r = vec![0; n * n];
            for x in 0..n {
                for y in 0..n {
                    r[p[x] * n + p[y]] = p[t[x * n + y]];
                }
            }
            seen.insert(r);
        }
    }
    classes
}

/// Left orbits by repeated merging until nothing changes.
pub fn orbit_count(n: usize, op: &[usize]) -> usize {
    let mut label: Vec<usize> = (0..n).collect();
    loop {
        let mut changed = false;
        for x in 0..n {
            for y in 0..n {
                let z = op[y * n + x];
                let (a, b) = (label[x], label[z]);
                if a != b {
                    let lo = a.min(b);
                    let hi = a.max(b);
                    for l in label.iter_mut() {
                        if *l == hi {
                            *l = lo;
                        }
                    }
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut distinct = label.clone();
    distinct.sort_unstable();
    distinct.dedup();
    distinct.len()
}

pub fn compose(n: usize, a: &[usize], b: &[usize]) -> Op {
    (0..n * n)
        .map(|i| {
            let (x, y) = (i / n, i % n);
            b[a[x * n + y] * n + y]
        })
        .collect()
}
