//! Chain complexes of multi-shelves on the tuple basis.
//!
//! `C_d` is free on the tuples `(x_0, ..., x_d)` and the `i`-th face of a
//! tuple under an operation `*` is
//! `(x_0 * x_i, ..., x_{i-1} * x_i, x_{i+1}, ..., x_d)`. The boundary of a
//! multi-shelf with coefficients `c_k` is `sum_k c_k sum_i (-1)^i face_i^k`.
//! In degree 0 the boundary is either the augmentation `(x) -> 1` or zero.

use std::sync::OnceLock;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use super::basis::{decode_into, encode};
use super::snf::{smith_normal_form, SmithForm};
use super::sparse::SparseIntMatrix;
use crate::error::{Error, Result};
use crate::table::{BinaryOpTable, MultiShelf, Shelf};

/// Refuse complexes whose largest chain group exceeds this many generators.
pub const DEFAULT_BASIS_CAP: u128 = 1 << 26;

/// One integer coefficient per operation of a multi-shelf.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CoefficientVector(Vec<i64>);

impl CoefficientVector {
    pub fn new(entries: Vec<i64>) -> Self {
        Self(entries)
    }

    /// `e_k` of length `len`.
    pub fn unit(len: usize, k: usize) -> Self {
        let mut v = vec![0; len];
        v[k] = 1;
        Self(v)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn check(&self, ms: &MultiShelf) -> Result<()> {
        if self.0.len() != ms.len() {
            return Err(Error::CoefficientLength {
                expected: ms.len(),
                got: self.0.len(),
            });
        }
        Ok(())
    }
}

/// Free rank and torsion coefficients of one homology group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub degree: usize,
    pub rank: usize,
    #[serde(serialize_with = "serialize_factors")]
    pub torsion: Vec<BigUint>,
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

/// Factors as JSON numbers, or decimal strings past `u64`.
pub(crate) fn serialize_factors<S: Serializer>(f: &[BigUint], s: S) -> std::result::Result<S::Ok, S::Error> {
    use num_traits::ToPrimitive;
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(f.len()))?;
    for v in f {
        match v.to_u64() {
            Some(x) => seq.serialize_element(&x)?,
            None => seq.serialize_element(&v.to_string())?,
        }
    }
    seq.end()
}

/// Which tuples span each chain group.
#[derive(Clone, Debug)]
enum Basis {
    /// All tuples, lexicographically.
    Full,
    /// Tuples with no two equal neighbours; `members[d]` lists their full
    /// indices in lexicographic order.
    NonDegenerate { members: Vec<Vec<usize>> },
}

#[derive(Debug)]
pub struct ChainComplex {
    carrier: usize,
    augmented: bool,
    coefficients: CoefficientVector,
    basis: Basis,
    /// `boundaries[d]` is `d_d : C_d -> C_{d-1}`.
    boundaries: Vec<SparseIntMatrix>,
    smith: Vec<OnceLock<SmithForm>>,
}

impl ChainComplex {
    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn maxdeg(&self) -> usize {
        self.boundaries.len() - 1
    }

    pub fn augmented(&self) -> bool {
        self.augmented
    }

    pub fn coefficients(&self) -> &CoefficientVector {
        &self.coefficients
    }

    pub fn dim(&self, d: usize) -> usize {
        self.boundaries[d].cols()
    }

    pub fn boundary(&self, d: usize) -> &SparseIntMatrix {
        &self.boundaries[d]
    }

    pub fn is_degenerate_quotient(&self) -> bool {
        matches!(self.basis, Basis::NonDegenerate { .. })
    }

    /// The tuple behind basis element `i` of `C_d`.
    pub fn basis_tuple(&self, d: usize, i: usize) -> Vec<usize> {
        let full = match &self.basis {
            Basis::Full => i,
            Basis::NonDegenerate { members } => members[d][i],
        };
        let mut t = vec![0; d + 1];
        decode_into(full, self.carrier, &mut t);
        t
    }

    /// Smith form of `d_d`, computed once.
    pub fn smith(&self, d: usize) -> &SmithForm {
        self.smith[d].get_or_init(|| smith_normal_form(&self.boundaries[d]))
    }

    /// `H_d`; needs `d_{d+1}`, so `d < maxdeg`.
    pub fn homology(&self, d: usize) -> Result<HomologyGroup> {
        if d + 1 > self.maxdeg() {
            return Err(Error::DegreeOutOfRange {
                degree: d,
                max: self.maxdeg().saturating_sub(1),
            });
        }
        let outgoing = self.smith(d).rank();
        let incoming = self.smith(d + 1);
        Ok(HomologyGroup {
            degree: d,
            rank: self.dim(d) - outgoing - incoming.rank(),
            torsion: incoming.torsion(),
        })
    }

    /// `H_0 .. H_{maxdeg - 1}`.
    pub fn homology_all(&self) -> Result<Vec<HomologyGroup>> {
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            (0..=self.maxdeg()).into_par_iter().for_each(|d| {
                self.smith(d);
            });
        }
        (0..self.maxdeg()).map(|d| self.homology(d)).collect()
    }

    fn verify(&self) -> Result<()> {
        for d in 1..self.boundaries.len() {
            let dd = self.boundaries[d - 1].mul(&self.boundaries[d])?;
            if !dd.is_zero() {
                return Err(if d == 1 && self.augmented {
                    Error::AugmentationNotZero
                } else {
                    Error::DDNotZero(d)
                });
            }
        }
        Ok(())
    }
}

fn check_cap(n: usize, maxdeg: usize, cap: u128) -> Result<()> {
    let needed = (n as u128).checked_pow(maxdeg as u32 + 1).unwrap_or(u128::MAX);
    if needed > cap {
        return Err(Error::MemoryCapExceeded { needed, cap });
    }
    Ok(())
}

/// The boundary of one tuple as `(full row index, coefficient)` pairs,
/// unmerged.
fn tuple_boundary(
    n: usize,
    terms: &[(&BinaryOpTable, i64)],
    tuple: &[usize],
    face: &mut Vec<usize>,
    out: &mut Vec<(usize, i64)>,
) {
    out.clear();
    let d = tuple.len() - 1;
    for i in 0..=d {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let xi = tuple[i];
        for &(op, c) in terms {
            face.clear();
            face.extend(tuple[..i].iter().map(|&x| op.get(x, xi)));
            face.extend_from_slice(&tuple[i + 1..]);
            out.push((encode(face, n), sign * c));
        }
    }
}

fn nonzero_terms<'a>(ms: &'a MultiShelf, c: &CoefficientVector) -> Vec<(&'a BinaryOpTable, i64)> {
    ms.ops()
        .iter()
        .zip(c.entries())
        .filter(|(_, &c)| c != 0)
        .map(|(op, &c)| (op, c))
        .collect()
}

fn augmentation_row(n: usize, augmented: bool) -> SparseIntMatrix {
    let mut m = SparseIntMatrix::empty_with_rows(usize::from(augmented));
    for _ in 0..n {
        m.push_column_i64(if augmented { vec![(0, 1)] } else { vec![] });
    }
    m
}

/// Matrix of `sum_k c_k d_d^k` on the tuple bases. In degree 0 this is the
/// augmentation row when `augmented`, and the `0 x n` zero map otherwise.
pub fn boundary_matrix(
    ms: &MultiShelf,
    c: &CoefficientVector,
    degree: usize,
    augmented: bool,
) -> Result<SparseIntMatrix> {
    c.check(ms)?;
    let n = ms.size();
    check_cap(n, degree, DEFAULT_BASIS_CAP)?;
    if degree == 0 {
        return Ok(augmentation_row(n, augmented));
    }
    Ok(full_boundary(n, &nonzero_terms(ms, c), degree))
}

fn full_boundary(n: usize, terms: &[(&BinaryOpTable, i64)], d: usize) -> SparseIntMatrix {
    let rows = n.pow(d as u32);
    let cols = rows * n;
    let mut m = SparseIntMatrix::empty_with_rows(rows);
    let mut tuple = vec![0; d + 1];
    let (mut face, mut out) = (Vec::with_capacity(d), Vec::new());
    for idx in 0..cols {
        decode_into(idx, n, &mut tuple);
        tuple_boundary(n, terms, &tuple, &mut face, &mut out);
        m.push_column_i64(std::mem::take(&mut out));
    }
    m
}

/// The single face map `d_{d,i}` of one operation, as a matrix.
pub fn face_matrix(op: &BinaryOpTable, d: usize, i: usize) -> Result<SparseIntMatrix> {
    if i > d {
        return Err(Error::DegreeOutOfRange { degree: i, max: d });
    }
    let n = op.size();
    check_cap(n, d, DEFAULT_BASIS_CAP)?;
    let rows = if d == 0 { 1 } else { n.pow(d as u32) };
    let mut m = SparseIntMatrix::empty_with_rows(rows);
    let mut tuple = vec![0; d + 1];
    let mut face = Vec::with_capacity(d);
    for idx in 0..n.pow(d as u32 + 1) {
        decode_into(idx, n, &mut tuple);
        face.clear();
        face.extend(tuple[..i].iter().map(|&x| op.get(x, tuple[i])));
        face.extend_from_slice(&tuple[i + 1..]);
        m.push_column_i64(vec![(encode(&face, n), 1)]);
    }
    Ok(m)
}

pub fn build_complex(
    ms: &MultiShelf,
    c: &CoefficientVector,
    maxdeg: usize,
    augmented: bool,
) -> Result<ChainComplex> {
    build_complex_with_cap(ms, c, maxdeg, augmented, DEFAULT_BASIS_CAP)
}

/// Builds `d_0 .. d_maxdeg` and checks that consecutive boundaries compose
/// to zero.
pub fn build_complex_with_cap(
    ms: &MultiShelf,
    c: &CoefficientVector,
    maxdeg: usize,
    augmented: bool,
    cap: u128,
) -> Result<ChainComplex> {
    c.check(ms)?;
    let n = ms.size();
    check_cap(n, maxdeg, cap)?;
    let terms = nonzero_terms(ms, c);
    let mut boundaries = vec![augmentation_row(n, augmented)];
    for d in 1..=maxdeg {
        boundaries.push(full_boundary(n, &terms, d));
    }
    let cx = ChainComplex {
        carrier: n,
        augmented,
        coefficients: c.clone(),
        basis: Basis::Full,
        smith: (0..=maxdeg).map(|_| OnceLock::new()).collect(),
        boundaries,
    };
    cx.verify()?;
    Ok(cx)
}

fn is_degenerate(t: &[usize]) -> bool {
    t.windows(2).any(|w| w[0] == w[1])
}

/// The quotient of the complex by degenerate chains (tuples with two equal
/// neighbours). The first operation must be idempotent, and the requested
/// differential must map degenerate chains to degenerate chains.
pub fn quandle_quotient_complex(
    ms: &MultiShelf,
    c: &CoefficientVector,
    maxdeg: usize,
    augmented: bool,
) -> Result<ChainComplex> {
    quandle_quotient_complex_with_cap(ms, c, maxdeg, augmented, DEFAULT_BASIS_CAP)
}

pub fn quandle_quotient_complex_with_cap(
    ms: &MultiShelf,
    c: &CoefficientVector,
    maxdeg: usize,
    augmented: bool,
    cap: u128,
) -> Result<ChainComplex> {
    c.check(ms)?;
    let first = &ms.ops()[0];
    if let Some(x) = (0..first.size()).find(|&x| first.get(x, x) != x) {
        return Err(Error::NotASpindle(x));
    }
    let n = ms.size();
    check_cap(n, maxdeg, cap)?;
    let terms = nonzero_terms(ms, c);

    let mut members: Vec<Vec<usize>> = Vec::with_capacity(maxdeg + 1);
    let mut position: Vec<Vec<usize>> = Vec::with_capacity(maxdeg + 1);
    for d in 0..=maxdeg {
        let total = n.pow(d as u32 + 1);
        let mut pos = vec![usize::MAX; total];
        let mut mem = Vec::new();
        let mut t = vec![0; d + 1];
        for idx in 0..total {
            decode_into(idx, n, &mut t);
            if !is_degenerate(&t) {
                pos[idx] = mem.len();
                mem.push(idx);
            }
        }
        members.push(mem);
        position.push(pos);
    }

    let mut boundaries = vec![augmentation_row(n, augmented)];
    let (mut face, mut out) = (Vec::new(), Vec::new());
    for d in 1..=maxdeg {
        let mut m = SparseIntMatrix::empty_with_rows(members[d - 1].len());
        let mut t = vec![0; d + 1];
        let mut merged: Vec<(usize, i64)> = Vec::new();
        for idx in 0..n.pow(d as u32 + 1) {
            decode_into(idx, n, &mut t);
            tuple_boundary(n, &terms, &t, &mut face, &mut out);
            let degenerate = position[d][idx] == usize::MAX;
            if degenerate {
                // every surviving term must lie in D_{d-1}
                merged.clear();
                merged.extend(out.iter().copied());
                merged.sort_unstable();
                let mut i = 0;
                while i < merged.len() {
                    let row = merged[i].0;
                    let mut sum = 0;
                    while i < merged.len() && merged[i].0 == row {
                        sum += merged[i].1;
                        i += 1;
                    }
                    if sum != 0 && position[d - 1][row] != usize::MAX {
                        return Err(Error::DegenerateNotSubcomplex(d));
                    }
                }
            } else {
                let col = out
                    .iter()
                    .filter_map(|&(row, v)| {
                        let p = position[d - 1][row];
                        (p != usize::MAX).then_some((p, v))
                    })
                    .collect();
                m.push_column_i64(col);
            }
        }
        boundaries.push(m);
    }
    let cx = ChainComplex {
        carrier: n,
        augmented,
        coefficients: c.clone(),
        basis: Basis::NonDegenerate { members },
        smith: (0..=maxdeg).map(|_| OnceLock::new()).collect(),
        boundaries,
    };
    cx.verify()?;
    Ok(cx)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HomologyKind {
    /// One operation, coefficient 1; augmented by default.
    Shelf,
    /// `(*, *0)` with coefficients `(1, -1)`; not augmented by default.
    Rack,
    /// The rack differential on the quotient by degenerate chains; not
    /// augmented by default. Requires a spindle.
    Quandle,
}

impl HomologyKind {
    pub fn default_augmented(self) -> bool {
        matches!(self, HomologyKind::Shelf)
    }

    pub fn name(self) -> &'static str {
        match self {
            HomologyKind::Shelf => "shelf",
            HomologyKind::Rack => "rack",
            HomologyKind::Quandle => "quandle",
        }
    }
}

impl std::str::FromStr for HomologyKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "shelf" => Ok(Self::Shelf),
            "rack" => Ok(Self::Rack),
            "quandle" => Ok(Self::Quandle),
            other => Err(format!("unknown homology kind {other:?}")),
        }
    }
}

/// The multi-shelf and coefficients behind a preset.
pub fn preset_setup(shelf: &Shelf, kind: HomologyKind) -> (MultiShelf, CoefficientVector) {
    match kind {
        HomologyKind::Shelf => (shelf.to_multishelf(), CoefficientVector::new(vec![1])),
        HomologyKind::Rack | HomologyKind::Quandle => (
            MultiShelf::new_unchecked(vec![
                shelf.table().clone(),
                BinaryOpTable::identity(shelf.size()),
            ]),
            CoefficientVector::new(vec![1, -1]),
        ),
    }
}

/// Complex for a preset, built one degree past `maxdeg` so that
/// `H_0 .. H_maxdeg` are available.
pub fn preset_complex(
    shelf: &Shelf,
    kind: HomologyKind,
    maxdeg: usize,
    augmented: Option<bool>,
    cap: u128,
) -> Result<ChainComplex> {
    let augmented = augmented.unwrap_or(kind.default_augmented());
    let (ms, c) = preset_setup(shelf, kind);
    match kind {
        HomologyKind::Quandle => {
            quandle_quotient_complex_with_cap(&ms, &c, maxdeg + 1, augmented, cap)
        }
        _ => build_complex_with_cap(&ms, &c, maxdeg + 1, augmented, cap),
    }
}

/// `H_0 .. H_maxdeg` for a preset (degrees as in `boundary_matrix`, so
/// rack degree `d` is rack homology in degree `d + 1` of the usual
/// convention).
pub fn preset_homology(
    shelf: &Shelf,
    kind: HomologyKind,
    maxdeg: usize,
    augmented: Option<bool>,
) -> Result<Vec<HomologyGroup>> {
    preset_complex(shelf, kind, maxdeg, augmented, DEFAULT_BASIS_CAP)?.homology_all()
}

/// Free ranks of `H_0 .. H_maxdeg` of the augmented shelf complex.
pub fn shelf_ranks(shelf: &Shelf, maxdeg: usize) -> Result<Vec<usize>> {
    Ok(preset_homology(shelf, HomologyKind::Shelf, maxdeg, None)?
        .into_iter()
        .map(|g| g.rank)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{construct_family, FamilySpec};
    use crate::orbits::left_orbits;
    use crate::table::{validate_multishelf, validate_shelf};
    use num_bigint::BigInt;

    fn shelf(t: BinaryOpTable) -> Shelf {
        validate_shelf(t).unwrap()
    }

    fn exceptional3() -> Shelf {
        shelf(BinaryOpTable::from_fn(3, |x, y| if y >= x { y } else { 0 }).unwrap())
    }

    fn dihedral(n: usize) -> Shelf {
        shelf(BinaryOpTable::from_fn(n, |x, y| (2 * y + n - x) % n).unwrap())
    }

    #[test]
    fn degree_one_column() {
        let s = exceptional3();
        let ms = s.to_multishelf();
        let d1 = boundary_matrix(&ms, &CoefficientVector::new(vec![1]), 1, true).unwrap();
        assert_eq!(d1.shape(), (3, 9));
        for x0 in 0..3 {
            for x1 in 0..3 {
                let col = x0 * 3 + x1;
                let mut expect = vec![0i64; 3];
                expect[x1] += 1;
                expect[s.op(x0, x1)] -= 1;
                for r in 0..3 {
                    assert_eq!(d1.get(r, col), BigInt::from(expect[r]));
                }
            }
        }
    }

    #[test]
    fn zero_coefficients_give_zero_matrix() {
        let ms = construct_family(&FamilySpec::BooleanMultiShelf { omega: 1 })
            .unwrap()
            .into_multishelf();
        let c = CoefficientVector::new(vec![0; 4]);
        let m = boundary_matrix(&ms, &c, 2, true).unwrap();
        assert_eq!(m.shape(), (4, 8));
        assert!(m.is_zero());
        let cx = build_complex(&ms, &c, 3, true).unwrap();
        assert!(!cx.boundary(0).is_zero());
        assert!((1..=3).all(|d| cx.boundary(d).is_zero()));
        assert!(boundary_matrix(&ms, &CoefficientVector::new(vec![1]), 1, true).is_err());
    }

    #[test]
    fn rack_degree_one_column() {
        let s = dihedral(3);
        let (ms, c) = preset_setup(&s, HomologyKind::Rack);
        let d1 = boundary_matrix(&ms, &c, 1, false).unwrap();
        for x0 in 0..3 {
            for x1 in 0..3 {
                let mut expect = vec![0i64; 3];
                expect[x0] += 1;
                expect[s.op(x0, x1)] -= 1;
                for r in 0..3 {
                    assert_eq!(d1.get(r, x0 * 3 + x1), BigInt::from(expect[r]));
                }
            }
        }
    }

    #[test]
    fn face_interchange() {
        // d_{d-1,i} d_{d,j+1} = d_{d-1,j} d_{d,i} for i <= j
        let s = exceptional3();
        let t = s.table();
        for d in 2..5 {
            for j in 0..d {
                for i in 0..=j {
                    let lhs = face_matrix(t, d - 1, i).unwrap().mul(&face_matrix(t, d, j + 1).unwrap());
                    let rhs = face_matrix(t, d - 1, j).unwrap().mul(&face_matrix(t, d, i).unwrap());
                    assert_eq!(lhs.unwrap(), rhs.unwrap(), "d={d} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn right_trivial_homology() {
        for n in 2..=3 {
            let s = shelf(BinaryOpTable::right_trivial(n));
            let groups = preset_homology(&s, HomologyKind::Shelf, 3, None).unwrap();
            for g in groups {
                assert_eq!(g.rank, (n - 1) * n.pow(g.degree as u32));
                assert!(g.torsion.is_empty());
            }
        }
    }

    #[test]
    fn h0_counts_orbits() {
        let s = exceptional3();
        let g = preset_homology(&s, HomologyKind::Shelf, 0, None).unwrap();
        assert_eq!(g[0].rank, left_orbits(&s).count() - 1);
    }

    #[test]
    fn racks_have_vanishing_shelf_homology() {
        for g in preset_homology(&dihedral(3), HomologyKind::Shelf, 3, None).unwrap() {
            assert!(g.is_trivial(), "{g:?}");
        }
    }

    #[test]
    fn exceptional_three_element_ranks() {
        assert_eq!(shelf_ranks(&exceptional3(), 3).unwrap(), vec![1, 2, 6, 18]);
    }

    #[test]
    fn kamada_small() {
        let s = shelf(BinaryOpTable::from_fn(4, |x, _| (x + 1) % 4).unwrap());
        let inv = shelf(s.table().right_inverse().unwrap());
        let a = preset_homology(&s, HomologyKind::Rack, 2, None).unwrap();
        let b = preset_homology(&inv, HomologyKind::Rack, 2, None).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn one_element_quandle() {
        let s = shelf(BinaryOpTable::identity(1));
        let cx = preset_complex(&s, HomologyKind::Quandle, 3, None, DEFAULT_BASIS_CAP).unwrap();
        assert_eq!(cx.dim(0), 1);
        assert!((1..=4).all(|d| cx.dim(d) == 0));
        let groups = cx.homology_all().unwrap();
        assert_eq!(groups[0].rank, 1);
        assert!(groups[1..].iter().all(HomologyGroup::is_trivial));
        let aug = preset_homology(&s, HomologyKind::Quandle, 3, Some(true)).unwrap();
        assert!(aug.iter().all(HomologyGroup::is_trivial));
    }

    #[test]
    fn quandle_needs_spindle() {
        let s = shelf(BinaryOpTable::from_fn(3, |_, _| 0).unwrap());
        assert!(matches!(
            preset_homology(&s, HomologyKind::Quandle, 1, None),
            Err(Error::NotASpindle(1))
        ));
    }

    #[test]
    fn dihedral_quandle_quotient_is_a_complex() {
        let cx = preset_complex(&dihedral(3), HomologyKind::Quandle, 3, None, DEFAULT_BASIS_CAP)
            .unwrap();
        assert!(cx.is_degenerate_quotient());
        // 3 * 2^d non-degenerate tuples
        assert_eq!(cx.dim(2), 12);
    }

    #[test]
    fn degenerate_chains_not_closed() {
        // the first operation is a spindle but the second, with a nonzero
        // coefficient, is not: d(1, 1) = (1) - (0)
        let ms = validate_multishelf(vec![
            BinaryOpTable::identity(2),
            BinaryOpTable::from_fn(2, |_, _| 0).unwrap(),
        ])
        .unwrap();
        let c = CoefficientVector::new(vec![0, 1]);
        assert!(matches!(
            quandle_quotient_complex(&ms, &c, 3, false),
            Err(Error::DegenerateNotSubcomplex(1))
        ));
    }

    #[test]
    fn caps_and_ranges() {
        let s = exceptional3();
        assert!(matches!(
            preset_complex(&s, HomologyKind::Shelf, 5, None, 100),
            Err(Error::MemoryCapExceeded { .. })
        ));
        let cx = preset_complex(&s, HomologyKind::Shelf, 1, None, DEFAULT_BASIS_CAP).unwrap();
        assert!(matches!(cx.homology(2), Err(Error::DegreeOutOfRange { .. })));
    }
}
