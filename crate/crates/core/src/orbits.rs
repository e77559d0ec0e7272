//! Left orbits, the orbit quotient, and exhaustive classification flags.

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::table::{BinaryOpTable, Shelf};

/// The partition of a carrier into left orbits, the classes of the
/// smallest equivalence relation with `x ~ y * x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    block_of: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl OrbitPartition {
    /// Builds the partition from union-find labels, numbering blocks by
    /// their smallest element.
    pub(crate) fn from_labels(labels: &[usize]) -> Self {
        let mut block_of = vec![usize::MAX; labels.len()];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut label_block = std::collections::HashMap::new();
        for (x, &l) in labels.iter().enumerate() {
            let b = *label_block.entry(l).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            block_of[x] = b;
            blocks[b].push(x);
        }
        Self { block_of, blocks }
    }

    pub fn carrier_size(&self) -> usize {
        self.block_of.len()
    }

    pub fn count(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    /// Smallest element of each block.
    pub fn representatives(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b[0]).collect()
    }
}

pub fn left_orbits(shelf: &Shelf) -> OrbitPartition {
    table_left_orbits(shelf.table())
}

pub(crate) fn table_left_orbits(t: &BinaryOpTable) -> OrbitPartition {
    let n = t.size();
    let mut uf = UnionFind::<usize>::new(n);
    for x in 0..n {
        for y in 0..n {
            uf.union(x, t.get(y, x));
        }
    }
    OrbitPartition::from_labels(&uf.into_labeling())
}

/// The quotient shelf on left orbits together with the quotient map.
#[derive(Clone, Debug)]
pub struct OrbitQuotient {
    pub shelf: Shelf,
    /// `projection[x]` is the block containing `x`.
    pub projection: Vec<usize>,
}

pub fn orbit_quotient(shelf: &Shelf) -> Result<OrbitQuotient> {
    let orbits = left_orbits(shelf);
    let r = orbits.count();
    let n = shelf.size();
    let projection: Vec<usize> = (0..n).map(|x| orbits.block_of(x)).collect();
    let mut entries = vec![usize::MAX; r * r];
    for x in 0..n {
        for y in 0..n {
            let cell = &mut entries[projection[x] * r + projection[y]];
            let v = projection[shelf.op(x, y)];
            if *cell != usize::MAX && *cell != v {
                return Err(Error::Internal(format!(
                    "orbit product not well defined at ({x}, {y})"
                )));
            }
            *cell = v;
        }
    }
    let table = BinaryOpTable::new(r, entries)?;
    if table != BinaryOpTable::right_trivial(r) {
        return Err(Error::Internal("orbit quotient is not right trivial".into()));
    }
    Ok(OrbitQuotient {
        shelf: Shelf::new_unchecked(table),
        projection,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub is_spindle: bool,
    pub is_rack: bool,
    pub is_left_connected: bool,
    pub is_invertible: bool,
}

pub fn classify(shelf: &Shelf) -> Classification {
    let t = shelf.table();
    let is_invertible = t.is_invertible();
    Classification {
        is_spindle: t.is_idempotent(),
        is_rack: is_invertible,
        is_left_connected: left_orbits(shelf).count() == 1,
        is_invertible,
    }
}
