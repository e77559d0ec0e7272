//! Invariant factors of sparse integer matrices.
//!
//! The elimination always pivots on an entry of least absolute value
//! (ties: lowest row, then lowest column). Row and column operations reduce
//! the pivot's row and column by rounded division; a nonzero remainder is
//! strictly smaller than the pivot and becomes the next pivot. Once a pivot
//! is isolated it is recorded and removed. The recorded diagonal is then
//! brought into divisibility order with gcd/lcm exchanges.
//!
//! Arithmetic runs in `i64` with overflow checks and restarts in `BigInt`
//! if any intermediate value leaves that range.

use std::fmt::Debug;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::sparse::SparseIntMatrix;

/// Invariant factors `s_1 | s_2 | ... | s_r`, all positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub factors: Vec<BigUint>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// Factors greater than one.
    pub fn torsion(&self) -> Vec<BigUint> {
        self.factors.iter().filter(|f| !f.is_one()).cloned().collect()
    }

    pub fn from_diagonal(diagonal: Vec<BigUint>) -> Self {
        Self {
            factors: normalize_diagonal(diagonal),
        }
    }
}

/// Turns a diagonal into the invariant factors of the same diagonal matrix.
fn normalize_diagonal(diagonal: Vec<BigUint>) -> Vec<BigUint> {
    let mut units = 0usize;
    let mut rest: Vec<BigUint> = Vec::new();
    for d in diagonal {
        if d.is_zero() {
            continue;
        }
        if d.is_one() {
            units += 1;
        } else {
            rest.push(d);
        }
    }
    // diag(a, b) ~ diag(gcd, lcm)
    for i in 0..rest.len() {
        for j in i + 1..rest.len() {
            if (&rest[j] % &rest[i]).is_zero() {
                continue;
            }
            let g = rest[i].gcd(&rest[j]);
            let l = &rest[i] / &g * &rest[j];
            rest[i] = g;
            rest[j] = l;
        }
    }
    rest.sort();
    let mut factors = vec![BigUint::one(); units];
    factors.extend(rest);
    factors.sort();
    factors
}

trait Scalar: Clone + Debug + PartialEq {
    fn is_zero(&self) -> bool;
    fn abs_key(&self) -> BigUint;
    fn lt_abs(&self, other: &Self) -> bool;
    fn is_unit(&self) -> bool;
    /// `round(a / p)`, the quotient leaving the remainder of least
    /// absolute value.
    fn quotient(a: &Self, p: &Self) -> Self;
    /// `a - q * b`, or `None` on overflow.
    fn sub_mul(a: &Self, q: &Self, b: &Self) -> Option<Self>;
    fn zero() -> Self;
}

impl Scalar for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn abs_key(&self) -> BigUint {
        BigUint::from(self.unsigned_abs())
    }
    fn lt_abs(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn quotient(a: &Self, p: &Self) -> Self {
        let (a, p) = (*a as i128, *p as i128);
        let q = a.div_euclid(p);
        let r = a - q * p;
        // r in [0, |p|); move to the nearest representative
        let q = if 2 * r > p.abs() {
            q + p.signum()
        } else {
            q
        };
        q as i64
    }
    fn sub_mul(a: &Self, q: &Self, b: &Self) -> Option<Self> {
        a.checked_sub(q.checked_mul(*b)?)
    }
    fn zero() -> Self {
        0
    }
}

impl Scalar for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn abs_key(&self) -> BigUint {
        self.magnitude().clone()
    }
    fn lt_abs(&self, other: &Self) -> bool {
        self.magnitude() < other.magnitude()
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn quotient(a: &Self, p: &Self) -> Self {
        let q = a.div_floor(p);
        let r = a - &q * p;
        // floor division leaves r with the sign of p
        let twice: BigInt = &r * 2;
        if twice.abs() > p.abs() {
            q + 1
        } else {
            q
        }
    }
    fn sub_mul(a: &Self, q: &Self, b: &Self) -> Option<Self> {
        Some(a - q * b)
    }
    fn zero() -> Self {
        Zero::zero()
    }
}

struct Elimination<T> {
    columns: Vec<Vec<(usize, T)>>,
    /// For each row, columns that may hold an entry there (may be stale).
    row_index: Vec<Vec<usize>>,
    alive: Vec<bool>,
}

impl<T: Scalar> Elimination<T> {
    fn new(rows: usize, columns: Vec<Vec<(usize, T)>>) -> Self {
        let mut row_index = vec![Vec::new(); rows];
        for (c, col) in columns.iter().enumerate() {
            for (r, _) in col {
                row_index[*r].push(c);
            }
        }
        let alive = columns.iter().map(|c| !c.is_empty()).collect();
        Self {
            columns,
            row_index,
            alive,
        }
    }

    fn pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, &T)> = None;
        for (c, col) in self.columns.iter().enumerate() {
            if !self.alive[c] {
                continue;
            }
            for (r, v) in col {
                let better = match best {
                    None => true,
                    Some((br, bc, bv)) => {
                        v.lt_abs(bv) || (!bv.lt_abs(v) && (*r, c) < (br, bc))
                    }
                };
                if better {
                    if v.is_unit() && *r == 0 {
                        return Some((0, c));
                    }
                    best = Some((*r, c, v));
                }
            }
        }
        best.map(|(r, c, _)| (r, c))
    }

    fn entry(&self, c: usize, r: usize) -> Option<&T> {
        let col = &self.columns[c];
        col.binary_search_by_key(&r, |e| e.0).ok().map(|i| &col[i].1)
    }

    /// `col[target] -= q * col[source]`. Returns `None` on overflow.
    fn column_op(&mut self, target: usize, q: &T, source: usize) -> Option<()> {
        let (a, b) = (&self.columns[target], &self.columns[source]);
        let mut merged = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ra = a.get(i).map_or(usize::MAX, |e| e.0);
            let rb = b.get(j).map_or(usize::MAX, |e| e.0);
            if ra < rb {
                merged.push(a[i].clone());
                i += 1;
            } else if rb < ra {
                let v = T::sub_mul(&T::zero(), q, &b[j].1)?;
                self.row_index[rb].push(target);
                merged.push((rb, v));
                j += 1;
            } else {
                let v = T::sub_mul(&a[i].1, q, &b[j].1)?;
                if !v.is_zero() {
                    merged.push((ra, v));
                }
                i += 1;
                j += 1;
            }
        }
        self.columns[target] = merged;
        Some(())
    }

    fn columns_with_row(&mut self, r: usize, except: usize) -> Vec<usize> {
        let mut cand = std::mem::take(&mut self.row_index[r]);
        cand.sort_unstable();
        cand.dedup();
        cand.retain(|&c| self.alive[c] && self.entry(c, r).is_some());
        self.row_index[r] = cand.clone();
        cand.retain(|&c| c != except);
        cand
    }

    fn run(mut self) -> Option<Vec<BigUint>> {
        let mut diagonal = Vec::new();
        while let Some((r, c)) = self.pivot() {
            let p = self.entry(c, r).expect("pivot present").clone();

            // Clear row r outside column c with column operations.
            let mut clean = true;
            for other in self.columns_with_row(r, c) {
                let a = self.entry(other, r).expect("indexed").clone();
                let q = T::quotient(&a, &p);
                self.column_op(other, &q, c)?;
                if self.entry(other, r).is_some() {
                    clean = false;
                }
                if self.columns[other].is_empty() {
                    self.alive[other] = false;
                }
            }
            if !clean {
                continue;
            }

            // Row r is now zero outside column c, so a row operation
            // against row r only touches column c.
            let mut clean = true;
            let mut kept = Vec::with_capacity(1);
            for (row, b) in std::mem::take(&mut self.columns[c]) {
                if row == r {
                    kept.push((row, b));
                    continue;
                }
                let q = T::quotient(&b, &p);
                let rem = T::sub_mul(&b, &q, &p)?;
                if !rem.is_zero() {
                    clean = false;
                    kept.push((row, rem));
                }
            }
            self.columns[c] = kept;
            if !clean {
                continue;
            }
            diagonal.push(p.abs_key());
            self.columns[c].clear();
            self.alive[c] = false;
        }
        Some(diagonal)
    }
}

pub fn smith_normal_form(m: &SparseIntMatrix) -> SmithForm {
    let small: Option<Vec<Vec<(usize, i64)>>> = (0..m.cols())
        .map(|c| {
            m.column(c)
                .iter()
                .map(|(r, v)| v.to_i64().map(|v| (*r, v)))
                .collect()
        })
        .collect();
    if let Some(columns) = small {
        if let Some(diag) = Elimination::new(m.rows(), columns).run() {
            return SmithForm::from_diagonal(diag);
        }
        log::debug!("i64 elimination overflowed; retrying with big integers");
    }
    let columns = (0..m.cols()).map(|c| m.column(c).to_vec()).collect();
    let diag = Elimination::<BigInt>::new(m.rows(), columns)
        .run()
        .expect("big integer arithmetic cannot overflow");
    SmithForm::from_diagonal(diag)
}

/// Rank over the integers (equivalently over the rationals).
pub fn rank(m: &SparseIntMatrix) -> usize {
    smith_normal_form(m).rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factors(dense: &[Vec<i64>]) -> Vec<u64> {
        smith_normal_form(&SparseIntMatrix::from_dense(dense))
            .factors
            .iter()
            .map(|f| f.to_u64().unwrap())
            .collect()
    }

    #[test]
    fn small_examples() {
        assert_eq!(factors(&[vec![2, 4], vec![6, 8]]), vec![2, 4]);
        assert_eq!(factors(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]), vec![1, 1, 1]);
        assert_eq!(factors(&[vec![0, 0], vec![0, 0]]), Vec::<u64>::new());
        assert_eq!(factors(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(factors(&[vec![4, 0], vec![0, 6]]), vec![2, 12]);
    }

    #[test]
    fn known_four_by_four() {
        let m = [
            vec![-6, 111, -36, 6],
            vec![5, -672, 210, 74],
            vec![0, -255, 81, 24],
            vec![-7, 255, -81, -10],
        ];
        assert_eq!(factors(&m), vec![1, 3, 21]);
    }

    #[test]
    fn rounding_quotients() {
        assert_eq!(<i64 as Scalar>::quotient(&7, &3), 2);
        assert_eq!(<i64 as Scalar>::quotient(&8, &3), 3);
        assert_eq!(<i64 as Scalar>::quotient(&-8, &3), -3);
        assert_eq!(<i64 as Scalar>::quotient(&8, &-3), -3);
        for a in -20i64..20 {
            for p in [-7i64, -3, -2, 2, 3, 7] {
                let qi = <i64 as Scalar>::quotient(&a, &p);
                let qb = <BigInt as Scalar>::quotient(&BigInt::from(a), &BigInt::from(p));
                let ri = a - qi * p;
                let rb = BigInt::from(a) - &qb * p;
                assert!(2 * ri.abs() <= p.abs());
                assert!(BigInt::from(2) * rb.abs() <= BigInt::from(p.abs()));
            }
        }
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        let big = i64::MAX / 3;
        let m = [vec![big, big - 1], vec![big - 2, big - 7]];
        let f = smith_normal_form(&SparseIntMatrix::from_dense(&m));
        let det = BigInt::from(big) * BigInt::from(big - 7)
            - BigInt::from(big - 1) * BigInt::from(big - 2);
        let prod: BigUint = f.factors.iter().product();
        assert_eq!(prod, det.magnitude().clone());
    }
}
