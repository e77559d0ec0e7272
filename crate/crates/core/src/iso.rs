//! Isomorphism classes of small tables and enumeration of shelves.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::table::BinaryOpTable;

/// Largest carrier for which [`canonical_form`] tries every permutation.
pub const CANONICAL_SIZE_LIMIT: usize = 8;
/// Largest carrier [`enumerate_shelves`] accepts.
pub const ENUMERATION_SIZE_LIMIT: usize = 5;

/// The lexicographically least relabeling of a table. Two tables have the
/// same key exactly when they are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct IsoClassKey(BinaryOpTable);

impl IsoClassKey {
    pub fn table(&self) -> &BinaryOpTable {
        &self.0
    }

    pub fn into_table(self) -> BinaryOpTable {
        self.0
    }

    pub fn flattened(&self) -> Vec<usize> {
        self.0.entries().to_vec()
    }
}

impl From<IsoClassKey> for Vec<usize> {
    fn from(k: IsoClassKey) -> Self {
        k.flattened()
    }
}

impl TryFrom<Vec<usize>> for IsoClassKey {
    type Error = Error;
    fn try_from(flat: Vec<usize>) -> Result<Self> {
        let n = (flat.len() as f64).sqrt().round() as usize;
        let t = BinaryOpTable::new(n, flat)?;
        let key = canonical_form(&t)?;
        if key.0 != t {
            return Err(Error::MalformedTable("table is not in canonical form".into()));
        }
        Ok(key)
    }
}

/// Heap's algorithm over all permutations of `0..n`.
fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    f(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            f(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

pub fn canonical_form(table: &BinaryOpTable) -> Result<IsoClassKey> {
    let n = table.size();
    if n > CANONICAL_SIZE_LIMIT {
        return Err(Error::PracticalSizeLimit {
            what: "canonical form",
            size: n,
            limit: CANONICAL_SIZE_LIMIT,
        });
    }
    Ok(IsoClassKey(canonical_unchecked(table)))
}

fn canonical_unchecked(table: &BinaryOpTable) -> BinaryOpTable {
    let n = table.size();
    let mut best = table.entries().to_vec();
    let mut inv = vec![0; n];
    let mut candidate = vec![0; n * n];
    for_each_permutation(n, |perm| {
        // candidate[i][j] = perm(table[perm⁻¹ i][perm⁻¹ j]), built in
        // row-major order so we can stop at the first larger entry.
        for (x, &p) in perm.iter().enumerate() {
            inv[p] = x;
        }
        let mut ordering = std::cmp::Ordering::Equal;
        for i in 0..n {
            for j in 0..n {
                let v = perm[table.get(inv[i], inv[j])];
                let idx = i * n + j;
                candidate[idx] = v;
                if ordering == std::cmp::Ordering::Equal {
                    ordering = v.cmp(&best[idx]);
                    if ordering == std::cmp::Ordering::Greater {
                        return;
                    }
                }
            }
        }
        if ordering == std::cmp::Ordering::Less {
            best.copy_from_slice(&candidate);
        }
    });
    BinaryOpTable::from_raw(n, best)
}

/// Every self-distributive table on `0..n` (not up to isomorphism), found
/// by filling cells in row-major order and rejecting a partial table as
/// soon as some fully determined instance of the law fails.
pub fn all_shelf_tables(n: usize) -> Result<Vec<BinaryOpTable>> {
    if n == 0 || n > ENUMERATION_SIZE_LIMIT {
        return Err(Error::PracticalSizeLimit {
            what: "shelf enumeration",
            size: n,
            limit: ENUMERATION_SIZE_LIMIT,
        });
    }
    let mut out = Vec::new();
    let mut cells = vec![UNSET; n * n];
    search(n, 0, &mut cells, &mut out);
    Ok(out)
}

const UNSET: usize = usize::MAX;

fn search(n: usize, pos: usize, cells: &mut [usize], out: &mut Vec<BinaryOpTable>) {
    if pos == n * n {
        out.push(BinaryOpTable::from_raw(n, cells.to_vec()));
        return;
    }
    for v in 0..n {
        cells[pos] = v;
        if consistent_at(n, cells, pos) {
            search(n, pos + 1, cells, out);
        }
    }
    cells[pos] = UNSET;
}

/// Checks every fully determined instance of `(x*y)*z = (x*z)*(y*z)` that
/// reads the cell `pos`. Earlier instances were checked when their last
/// cell was filled.
fn consistent_at(n: usize, cells: &[usize], pos: usize) -> bool {
    let idx = |a: usize, b: usize| a * n + b;
    for x in 0..n {
        for y in 0..n {
            let xy = cells[idx(x, y)];
            if xy == UNSET {
                continue;
            }
            for z in 0..n {
                let (xz, yz) = (cells[idx(x, z)], cells[idx(y, z)]);
                if xz == UNSET || yz == UNSET {
                    continue;
                }
                let (l, r) = (idx(xy, z), idx(xz, yz));
                let (lhs, rhs) = (cells[l], cells[r]);
                if lhs == UNSET || rhs == UNSET {
                    continue;
                }
                let reads_pos = [idx(x, y), idx(x, z), idx(y, z), l, r].contains(&pos);
                if reads_pos && lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// Isomorphism classes of shelves on `n` elements, as sorted canonical keys.
pub fn enumerate_shelves(n: usize) -> Result<Vec<IsoClassKey>> {
    let tables = all_shelf_tables(n)?;
    let mut keys: Vec<BinaryOpTable> = tables.iter().map(canonical_unchecked).collect();
    keys.sort();
    keys.dedup();
    Ok(keys.into_iter().map(IsoClassKey).collect())
}
