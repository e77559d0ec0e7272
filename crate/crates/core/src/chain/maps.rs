//! Chain maps between tuple complexes and the induced map on first
//! homology of the projection to the orbit quotient.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::chain::basis::{decode_into, encode};
use crate::chain::complex::{build_complex, ChainComplex, CoefficientVector, HomologyGroup};
use crate::chain::snf::smith_normal_form;
use crate::chain::sparse::SparseIntMatrix;
use crate::error::{Error, Result};
use crate::orbits::orbit_quotient;
use crate::simplicial::suffix_products;
use crate::table::{BinaryOpTable, Shelf};

/// The basis map `(x_0, ..., x_d) -> (x_0 * ... * x_d, x_1 * ... * x_d, ..., x_d)`.
pub fn suffix_product_map(op: &BinaryOpTable, d: usize) -> SparseIntMatrix {
    let n = op.size();
    let dim = n.pow(d as u32 + 1);
    let mut m = SparseIntMatrix::empty_with_rows(dim);
    let mut t = vec![0; d + 1];
    let mut s = Vec::with_capacity(d + 1);
    for idx in 0..dim {
        decode_into(idx, n, &mut t);
        suffix_products(|a, b| op.get(a, b), &t, &mut s);
        m.push_column_i64(vec![(encode(&s, n), 1)]);
    }
    m
}

/// `F` in degree `d` from `source` to `target`, checked against the
/// boundaries of both complexes.
pub fn f_chain_map(
    star1: &BinaryOpTable,
    source: &ChainComplex,
    target: &ChainComplex,
    d: usize,
) -> Result<SparseIntMatrix> {
    let n = star1.size();
    if source.carrier() != n || target.carrier() != n {
        return Err(Error::SizeMismatch(n, source.carrier().max(target.carrier())));
    }
    if source.is_degenerate_quotient() || target.is_degenerate_quotient() {
        return Err(Error::Internal("F is defined on the full tuple complex".into()));
    }
    let top = source.maxdeg().min(target.maxdeg());
    if d > top {
        return Err(Error::DegreeOutOfRange { degree: d, max: top });
    }
    let f = suffix_product_map(star1, d);
    let commutes = if d == 0 {
        source.augmented() == target.augmented()
    } else {
        let lower = suffix_product_map(star1, d - 1);
        target.boundary(d).mul(&f)? == lower.mul(source.boundary(d))?
    };
    if !commutes {
        return Err(Error::ChainMapViolation(d));
    }
    Ok(f)
}

/// A basis of the integer kernel of `m`, from a unimodular column
/// reduction.
pub fn integer_kernel(m: &SparseIntMatrix) -> Vec<Vec<BigInt>> {
    let (rows, cols) = m.shape();
    let mut a = m.to_dense();
    // v tracks the column operations; its columns are indexed like a's.
    let mut v: Vec<Vec<BigInt>> = (0..cols)
        .map(|c| (0..cols).map(|r| if r == c { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    // column-major copy of a for cheap column operations
    let mut ac: Vec<Vec<BigInt>> = (0..cols)
        .map(|c| (0..rows).map(|r| std::mem::take(&mut a[r][c])).collect())
        .collect();
    let mut pivot = 0;
    for r in 0..rows {
        if pivot == cols {
            break;
        }
        loop {
            // smallest nonzero in row r among the unreduced columns
            let best = (pivot..cols)
                .filter(|&c| !ac[c][r].is_zero())
                .min_by(|&x, &y| ac[x][r].abs().cmp(&ac[y][r].abs()));
            let Some(b) = best else { break };
            ac.swap(pivot, b);
            v.swap(pivot, b);
            let mut done = true;
            for c in pivot + 1..cols {
                if ac[c][r].is_zero() {
                    continue;
                }
                let q = ac[c][r].div_floor(&ac[pivot][r]);
                let (head, tail) = ac.split_at_mut(c);
                for (x, y) in tail[0].iter_mut().zip(&head[pivot]) {
                    *x -= &q * y;
                }
                let (head, tail) = v.split_at_mut(c);
                for (x, y) in tail[0].iter_mut().zip(&head[pivot]) {
                    *x -= &q * y;
                }
                if !ac[c][r].is_zero() {
                    done = false;
                }
            }
            if done {
                pivot += 1;
                break;
            }
        }
    }
    v.split_off(pivot)
}

/// What the projection to the orbit quotient does on `H_d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducedMapReport {
    pub degree: usize,
    pub source: HomologyGroup,
    pub target: HomologyGroup,
    /// Rank of the induced map after tensoring with the rationals.
    pub rational_rank: usize,
    pub injective: bool,
    pub surjective: bool,
}

/// Induced map of `X -> O` on `H_d`, both augmented with one operation.
pub fn orbit_projection_on_homology(shelf: &Shelf, d: usize) -> Result<InducedMapReport> {
    let quotient = orbit_quotient(shelf)?;
    let n = shelf.size();
    let r = quotient.shelf.size();
    let c = CoefficientVector::new(vec![1]);
    let x_cx = build_complex(&shelf.to_multishelf(), &c, d + 1, true)?;
    let o_cx = build_complex(&quotient.shelf.to_multishelf(), &c, d + 1, true)?;
    let source = x_cx.homology(d)?;
    let target = o_cx.homology(d)?;

    let cycles = integer_kernel(x_cx.boundary(d));
    let mut t = vec![0; d + 1];
    let mut image = Vec::new();
    for z in &cycles {
        let mut col = Vec::new();
        for (idx, coeff) in z.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            decode_into(idx, n, &mut t);
            let p: Vec<usize> = t.iter().map(|&x| quotient.projection[x]).collect();
            col.push((encode(&p, r), coeff.clone()));
        }
        image.push(col);
    }
    let b = o_cx.boundary(d + 1);
    let dim_o = o_cx.dim(d);
    let mut triplets: Vec<(usize, usize, BigInt)> = Vec::new();
    for (c, col) in image.iter().enumerate() {
        triplets.extend(col.iter().map(|(r, v)| (*r, c, v.clone())));
    }
    let offset = image.len();
    triplets.extend(b.triplets().map(|(r, c, v)| (r, c + offset, v.clone())));
    let joined = SparseIntMatrix::from_triplets(dim_o, offset + b.cols(), triplets)?;
    let joined_snf = smith_normal_form(&joined);
    let b_rank = o_cx.smith(d + 1).rank();
    let rational_rank = joined_snf.rank() - b_rank;
    let cycle_rank_o = dim_o - o_cx.smith(d).rank();
    let surjective = joined_snf.rank() == cycle_rank_o && joined_snf.torsion().is_empty();
    let injective = source.torsion.is_empty() && rational_rank == source.rank;
    Ok(InducedMapReport {
        degree: d,
        source,
        target,
        rational_rank,
        injective,
        surjective,
    })
}
