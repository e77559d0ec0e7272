//! Binary operation tables and the distributivity laws on them.
//!
//! Elements of a carrier of size `n` are the indices `0..n`, and a table
//! stores `x * y` at row `x`, column `y`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A raw magma: an `n x n` table with entries in `0..n`. No law is assumed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct BinaryOpTable {
    size: usize,
    entries: Vec<usize>,
}

impl BinaryOpTable {
    /// Builds a table from its row-major entries.
    pub fn new(size: usize, entries: Vec<usize>) -> Result<Self> {
        if size == 0 {
            return Err(Error::MalformedTable("carrier must be nonempty".into()));
        }
        if entries.len() != size * size {
            return Err(Error::MalformedTable(format!(
                "expected {} entries, got {}",
                size * size,
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|&&v| v >= size) {
            return Err(Error::MalformedTable(format!(
                "entry {bad} outside 0..{size}"
            )));
        }
        Ok(Self { size, entries })
    }

    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(Error::MalformedTable("table is not square".into()));
        }
        Self::new(size, rows.into_iter().flatten().collect())
    }

    /// Same as [`from_rows`](Self::from_rows) for tables printed with
    /// elements `1..=n`.
    pub fn from_one_indexed_rows(rows: &[&[usize]]) -> Result<Self> {
        let shifted = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&v| {
                        v.checked_sub(1)
                            .ok_or_else(|| Error::MalformedTable("0 in a 1-indexed table".into()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(shifted)
    }

    pub fn from_fn(size: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let mut entries = Vec::with_capacity(size * size);
        for x in 0..size {
            for y in 0..size {
                entries.push(f(x, y));
            }
        }
        Self::new(size, entries)
    }

    /// `x *0 y = x`, the identity of composition.
    pub fn identity(size: usize) -> Self {
        Self::from_fn(size, |x, _| x).expect("nonempty carrier")
    }

    /// `x * y = y`.
    pub fn right_trivial(size: usize) -> Self {
        Self::from_fn(size, |_, y| y).expect("nonempty carrier")
    }

    pub(crate) fn from_raw(size: usize, entries: Vec<usize>) -> Self {
        debug_assert_eq!(entries.len(), size * size);
        Self { size, entries }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.entries[x * self.size + y]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.entries.chunks(self.size).map(<[usize]>::to_vec).collect()
    }

    /// `x (self . other) y = (x self y) other y`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.size != other.size {
            return Err(Error::SizeMismatch(self.size, other.size));
        }
        Ok(Self::from_fn(self.size, |x, y| other.get(self.get(x, y), y)).expect("in range"))
    }

    /// The first triple, in lexicographic order, where `(x*y)*z != (x*z)*(y*z)`.
    pub fn first_distributivity_violation(&self) -> Option<(usize, usize, usize, usize, usize)> {
        mutual_violation(self, self)
    }

    pub fn is_self_distributive(&self) -> bool {
        self.first_distributivity_violation().is_none()
    }

    pub fn is_idempotent(&self) -> bool {
        (0..self.size).all(|x| self.get(x, x) == x)
    }

    /// Whether the right translation `x -> x * y` is a bijection.
    pub fn right_translation_is_bijective(&self, y: usize) -> bool {
        let mut seen = vec![false; self.size];
        for x in 0..self.size {
            let v = self.get(x, y);
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    /// Every right translation is a bijection.
    pub fn is_invertible(&self) -> bool {
        (0..self.size).all(|y| self.right_translation_is_bijective(y))
    }

    /// The table of `x *^-1 y`, inverting each right translation.
    pub fn right_inverse(&self) -> Option<Self> {
        if !self.is_invertible() {
            return None;
        }
        let n = self.size;
        let mut entries = vec![0; n * n];
        for y in 0..n {
            for x in 0..n {
                entries[self.get(x, y) * n + y] = x;
            }
        }
        Some(Self::from_raw(n, entries))
    }

    /// Transport the table along a bijection `perm: old -> new`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.size;
        debug_assert_eq!(perm.len(), n);
        let mut entries = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                entries[perm[x] * n + perm[y]] = perm[self.get(x, y)];
            }
        }
        Self::from_raw(n, entries)
    }

    /// Left-normed product `((x0 * x1) * x2) * ... * xk`.
    pub fn left_normed_product(&self, elements: &[usize]) -> Result<usize> {
        let (&first, rest) = elements.split_first().ok_or(Error::EmptyList)?;
        if let Some(&bad) = elements.iter().find(|&&e| e >= self.size) {
            return Err(Error::OutOfRange(bad));
        }
        Ok(rest.iter().fold(first, |acc, &e| self.get(acc, e)))
    }
}

impl fmt::Debug for BinaryOpTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.entries.chunks(self.size)).finish()
    }
}

impl TryFrom<Vec<Vec<usize>>> for BinaryOpTable {
    type Error = Error;
    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::from_rows(rows)
    }
}

impl From<BinaryOpTable> for Vec<Vec<usize>> {
    fn from(t: BinaryOpTable) -> Self {
        t.rows()
    }
}

/// First `(x, y, z, lhs, rhs)` with `(x *k y) *l z != (x *l z) *k (y *l z)`.
fn mutual_violation(
    k: &BinaryOpTable,
    l: &BinaryOpTable,
) -> Option<(usize, usize, usize, usize, usize)> {
    let n = k.size;
    for x in 0..n {
        for y in 0..n {
            let xy = k.get(x, y);
            for z in 0..n {
                let lhs = l.get(xy, z);
                let rhs = k.get(l.get(x, z), l.get(y, z));
                if lhs != rhs {
                    return Some((x, y, z, lhs, rhs));
                }
            }
        }
    }
    None
}

/// Whether `(x *a y) *b z = (x *b z) *a (y *b z)` holds for all triples.
pub fn distributes_over(a: &BinaryOpTable, b: &BinaryOpTable) -> bool {
    a.size == b.size && mutual_violation(a, b).is_none()
}

/// A table satisfying right self-distributivity.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Shelf(BinaryOpTable);

impl Shelf {
    pub fn table(&self) -> &BinaryOpTable {
        &self.0
    }

    pub fn into_table(self) -> BinaryOpTable {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.size
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.0.get(x, y)
    }

    /// The shelf as a one-operation multi-shelf.
    pub fn to_multishelf(&self) -> MultiShelf {
        MultiShelf {
            size: self.size(),
            ops: vec![self.0.clone()],
        }
    }

    pub(crate) fn new_unchecked(table: BinaryOpTable) -> Self {
        debug_assert!(table.is_self_distributive());
        Self(table)
    }
}

/// Checks self-distributivity on all `n^3` triples.
pub fn validate_shelf(table: BinaryOpTable) -> Result<Shelf> {
    match table.first_distributivity_violation() {
        None => Ok(Shelf(table)),
        Some((x, y, z, lhs, rhs)) => Err(Error::DistributivityViolation { x, y, z, lhs, rhs }),
    }
}

/// An ordered family of operations on one carrier, pairwise and
/// individually distributive.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiShelf {
    size: usize,
    ops: Vec<BinaryOpTable>,
}

impl MultiShelf {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn ops(&self) -> &[BinaryOpTable] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// Operation `k` as a shelf.
    pub fn shelf(&self, k: usize) -> Shelf {
        Shelf(self.ops[k].clone())
    }

    pub(crate) fn new_unchecked(ops: Vec<BinaryOpTable>) -> Self {
        Self {
            size: ops[0].size,
            ops,
        }
    }
}

/// Checks mutual distributivity for every ordered pair `(k, l)`, `k == l`
/// included.
pub fn validate_multishelf(tables: Vec<BinaryOpTable>) -> Result<MultiShelf> {
    let size = tables.first().ok_or(Error::EmptyList)?.size;
    if let Some(t) = tables.iter().find(|t| t.size != size) {
        return Err(Error::SizeMismatch(size, t.size));
    }
    for (k, a) in tables.iter().enumerate() {
        for (l, b) in tables.iter().enumerate() {
            if let Some((x, y, z, lhs, rhs)) = mutual_violation(a, b) {
                return Err(Error::MutualDistributivityViolation {
                    k,
                    l,
                    x,
                    y,
                    z,
                    lhs,
                    rhs,
                });
            }
        }
    }
    Ok(MultiShelf { size, ops: tables })
}

/// Closes the operations of `ms` (plus the identity) under composition.
///
/// Fails with [`Error::BoundExceeded`] carrying the partial set once more
/// than `max_ops` distinct tables are reached.
pub fn distributive_closure(ms: &MultiShelf, max_ops: usize) -> Result<MultiShelf> {
    let mut ops = vec![BinaryOpTable::identity(ms.size)];
    for op in &ms.ops {
        if !ops.contains(op) {
            ops.push(op.clone());
        }
    }
    let generators = ops.clone();
    let mut frontier = 0;
    while frontier < ops.len() {
        if ops.len() > max_ops {
            return Err(Error::BoundExceeded {
                bound: max_ops,
                partial: ops,
            });
        }
        let current = ops[frontier].clone();
        for g in &generators {
            let next = current.compose(g)?;
            if !ops.contains(&next) {
                ops.push(next);
            }
        }
        frontier += 1;
    }
    if ops.len() > max_ops {
        return Err(Error::BoundExceeded {
            bound: max_ops,
            partial: ops,
        });
    }
    validate_multishelf(ops).map_err(|e| Error::Internal(format!("closure lost distributivity: {e}")))
}
