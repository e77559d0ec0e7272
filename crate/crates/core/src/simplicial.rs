//! The shelf complex: the simplicial complex on the carrier whose simplices
//! are the vertex sets `{x_0 * ... * x_d, x_1 * ... * x_d, ..., x_d}` with
//! all entries distinct.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::chain::basis::decode_into;
use crate::chain::complex::{HomologyGroup, DEFAULT_BASIS_CAP};
use crate::chain::snf::smith_normal_form;
use crate::chain::sparse::SparseIntMatrix;
use crate::error::{Error, Result};
use crate::table::Shelf;

/// Sorted, distinct vertices.
pub type Simplex = Vec<usize>;

#[derive(Clone, Debug)]
pub struct ShelfComplex {
    carrier: usize,
    maxdim: usize,
    /// `simplices[d]` holds the `d`-simplices in lexicographic order.
    simplices: Vec<Vec<Simplex>>,
    /// Faces that were missing after generation and had to be added.
    repaired_faces: Vec<Simplex>,
}

/// `(x_j * x_{j+1} * ... * x_d)` for each `j`, left-normed.
pub(crate) fn suffix_products(op: impl Fn(usize, usize) -> usize, tuple: &[usize], out: &mut Vec<usize>) {
    out.clear();
    for j in 0..tuple.len() {
        let v = tuple[j + 1..].iter().fold(tuple[j], |acc, &x| op(acc, x));
        out.push(v);
    }
}

fn all_distinct(v: &[usize]) -> bool {
    v.iter()
        .enumerate()
        .all(|(i, a)| v[i + 1..].iter().all(|b| a != b))
}

/// Sorts `v` in place and returns the sign of the sorting permutation, or
/// `None` if two entries coincide.
pub(crate) fn sort_with_sign(v: &mut [usize]) -> Option<i64> {
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && v[j - 1] == v[j] {
            return None;
        }
    }
    // equal neighbours can also meet after later insertions
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(sign)
}

pub fn build_shelf_complex(shelf: &Shelf, maxdim: Option<usize>) -> Result<ShelfComplex> {
    let n = shelf.size();
    let maxdim = maxdim.unwrap_or(n - 1).min(n - 1);
    let needed = (n as u128).checked_pow(maxdim as u32 + 1).unwrap_or(u128::MAX);
    if needed > DEFAULT_BASIS_CAP {
        return Err(Error::MemoryCapExceeded {
            needed,
            cap: DEFAULT_BASIS_CAP,
        });
    }
    let mut sets: Vec<BTreeSet<Simplex>> = vec![BTreeSet::new(); maxdim + 1];
    let mut tuple = Vec::new();
    let mut products = Vec::new();
    for d in 0..=maxdim {
        tuple.resize(d + 1, 0);
        for idx in 0..n.pow(d as u32 + 1) {
            decode_into(idx, n, &mut tuple);
            suffix_products(|a, b| shelf.op(a, b), &tuple, &mut products);
            if all_distinct(&products) {
                let mut s = products.clone();
                s.sort_unstable();
                sets[d].insert(s);
            }
        }
    }
    let mut repaired_faces = Vec::new();
    for d in (1..=maxdim).rev() {
        let (lower, upper) = sets.split_at_mut(d);
        for s in upper[0].iter() {
            for skip in 0..s.len() {
                let face: Simplex = s
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect();
                if lower[d - 1].insert(face.clone()) {
                    log::warn!("face {face:?} of {s:?} was not generated; adding it");
                    repaired_faces.push(face);
                }
            }
        }
    }
    Ok(ShelfComplex {
        carrier: n,
        maxdim,
        simplices: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
        repaired_faces,
    })
}

/// Connected components of the 1-skeleton.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Components {
    pub count: usize,
    /// Component of each vertex, numbered by smallest vertex.
    pub labels: Vec<usize>,
}

impl ShelfComplex {
    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn maxdim(&self) -> usize {
        self.maxdim
    }

    pub fn simplices(&self, d: usize) -> &[Simplex] {
        self.simplices.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn repaired_faces(&self) -> &[Simplex] {
        &self.repaired_faces
    }

    /// Highest dimension with a simplex.
    pub fn dimension(&self) -> usize {
        (0..self.simplices.len())
            .rev()
            .find(|&d| !self.simplices[d].is_empty())
            .unwrap_or(0)
    }

    pub fn index_of(&self, simplex: &[usize]) -> Option<usize> {
        let d = simplex.len().checked_sub(1)?;
        self.simplices
            .get(d)?
            .binary_search_by(|s| s.as_slice().cmp(simplex))
            .ok()
    }

    /// Simplices that are not a face of another simplex.
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        let mut out = Vec::new();
        for d in 0..self.simplices.len() {
            for s in &self.simplices[d] {
                let covered = self.simplices.get(d + 1).is_some_and(|up| {
                    up.iter()
                        .any(|t| s.iter().all(|v| t.binary_search(v).is_ok()))
                });
                if !covered {
                    out.push(s.clone());
                }
            }
        }
        out.sort();
        out
    }

    pub fn components(&self) -> Components {
        let mut uf = UnionFind::<usize>::new(self.carrier);
        for e in self.simplices(1) {
            uf.union(e[0], e[1]);
        }
        let labels = uf.into_labeling();
        let mut seen: Vec<usize> = Vec::new();
        let labels: Vec<usize> = labels
            .into_iter()
            .map(|l| match seen.iter().position(|&s| s == l) {
                Some(i) => i,
                None => {
                    seen.push(l);
                    seen.len() - 1
                }
            })
            .collect();
        Components {
            count: seen.len(),
            labels,
        }
    }

    /// Oriented boundary `C_d -> C_{d-1}`; zero in degree 0.
    pub fn boundary(&self, d: usize) -> SparseIntMatrix {
        let cols = self.simplices(d);
        if d == 0 {
            return SparseIntMatrix::zeros(0, cols.len());
        }
        let rows = self.simplices(d - 1).len();
        let mut triplets = Vec::new();
        for (c, s) in cols.iter().enumerate() {
            for skip in 0..s.len() {
                let face: Simplex = s
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect();
                let r = self.index_of(&face).expect("complex is face closed");
                let sign = if skip % 2 == 0 { 1 } else { -1 };
                triplets.push((r, c, BigInt::from(sign)));
            }
        }
        SparseIntMatrix::from_triplets(rows, cols.len(), triplets).expect("indices in range")
    }

    /// Unreduced simplicial homology in degree `d`.
    pub fn homology(&self, d: usize) -> Result<HomologyGroup> {
        // Chain groups above carrier - 1 vanish, so the top degree is
        // available when the complex was built all the way up.
        let top = if self.maxdim + 1 >= self.carrier {
            self.maxdim
        } else {
            self.maxdim.saturating_sub(1)
        };
        if d > top || (self.maxdim + 1 < self.carrier && d + 1 > self.maxdim) {
            return Err(Error::DegreeOutOfRange { degree: d, max: top });
        }
        let outgoing = smith_normal_form(&self.boundary(d)).rank();
        let incoming = smith_normal_form(&self.boundary(d + 1));
        Ok(HomologyGroup {
            degree: d,
            rank: self.simplices(d).len() - outgoing - incoming.rank(),
            torsion: incoming.torsion(),
        })
    }
}

pub fn simplicial_homology(cx: &ShelfComplex, d: usize) -> Result<HomologyGroup> {
    cx.homology(d)
}

/// The chain map from the algebraic complex to the oriented simplicial
/// chains, sending `(x_0, ..., x_d)` to the oriented simplex of its suffix
/// products (zero when two coincide). In positive degrees the result is
/// checked against both boundaries.
pub fn simplicial_projection_map(shelf: &Shelf, cx: &ShelfComplex, d: usize) -> Result<SparseIntMatrix> {
    let map = projection_matrix(shelf, cx, d)?;
    if d >= 1 {
        let lower = projection_matrix(shelf, cx, d - 1)?;
        let alg = crate::chain::complex::boundary_matrix(
            &shelf.to_multishelf(),
            &crate::chain::complex::CoefficientVector::new(vec![1]),
            d,
            false,
        )?;
        let lhs = cx.boundary(d).mul(&map)?;
        let rhs = lower.mul(&alg)?;
        if lhs != rhs {
            return Err(Error::ChainMapViolation(d));
        }
    }
    Ok(map)
}

fn projection_matrix(shelf: &Shelf, cx: &ShelfComplex, d: usize) -> Result<SparseIntMatrix> {
    let n = shelf.size();
    // past the top dimension every image repeats a vertex
    if d > cx.maxdim() && cx.maxdim() + 1 < n {
        return Err(Error::DegreeOutOfRange {
            degree: d,
            max: cx.maxdim(),
        });
    }
    let rows = cx.simplices(d).len();
    let mut m = SparseIntMatrix::empty_with_rows(rows);
    let mut tuple = vec![0; d + 1];
    let mut products = Vec::new();
    for idx in 0..n.pow(d as u32 + 1) {
        decode_into(idx, n, &mut tuple);
        suffix_products(|a, b| shelf.op(a, b), &tuple, &mut products);
        let col = match sort_with_sign(&mut products) {
            None => vec![],
            Some(sign) => {
                let r = cx.index_of(&products).ok_or_else(|| {
                    Error::Internal(format!("simplex {products:?} missing from the complex"))
                })?;
                vec![(r, sign)]
            }
        };
        m.push_column_i64(col);
    }
    Ok(m)
}
