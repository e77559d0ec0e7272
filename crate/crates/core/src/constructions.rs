//! Building larger shelves from smaller ones.

use crate::error::{Error, Result};
use crate::table::{validate_shelf, BinaryOpTable, Shelf};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombineMode {
    /// Blocks act on themselves; across blocks `x * x' = x`.
    DisjointUnion,
    /// Componentwise product; the first factor is the most significant
    /// digit of an element index.
    DirectProduct,
}

pub fn combine(mode: CombineMode, shelves: &[Shelf]) -> Result<Shelf> {
    if shelves.is_empty() {
        return Err(Error::EmptyList);
    }
    let table = match mode {
        CombineMode::DisjointUnion => {
            let n: usize = shelves.iter().map(Shelf::size).sum();
            let mut block = Vec::with_capacity(n);
            let mut offset = Vec::with_capacity(shelves.len());
            let mut start = 0;
            for (i, s) in shelves.iter().enumerate() {
                offset.push(start);
                block.extend(std::iter::repeat_n(i, s.size()));
                start += s.size();
            }
            BinaryOpTable::from_fn(n, |x, y| {
                let (bx, by) = (block[x], block[y]);
                if bx == by {
                    offset[bx] + shelves[bx].op(x - offset[bx], y - offset[bx])
                } else {
                    x
                }
            })?
        }
        CombineMode::DirectProduct => {
            let sizes: Vec<usize> = shelves.iter().map(Shelf::size).collect();
            let n: usize = sizes.iter().product();
            let digits = |mut v: usize| {
                let mut d = vec![0; sizes.len()];
                for (i, &s) in sizes.iter().enumerate().rev() {
                    d[i] = v % s;
                    v /= s;
                }
                d
            };
            BinaryOpTable::from_fn(n, |x, y| {
                let (dx, dy) = (digits(x), digits(y));
                shelves
                    .iter()
                    .zip(dx.iter().zip(&dy))
                    .fold(0, |acc, (s, (&a, &b))| acc * s.size() + s.op(a, b))
            })?
        }
    };
    validate_shelf(table).map_err(|e| Error::Internal(format!("combined table: {e}")))
}

/// Extends a shelf on `A = {0..m}` to `{0..n}` along a retraction `r`
/// (identity on `A`) by `x * y = r(x) * r(y)`.
pub fn strong_retract_extend(base: &Shelf, carrier_size: usize, retraction: &[usize]) -> Result<Shelf> {
    let m = base.size();
    if retraction.len() != carrier_size || carrier_size < m {
        return Err(Error::SpecPreconditionFailed(format!(
            "retraction must map 0..{carrier_size} onto 0..{m}"
        )));
    }
    if let Some(&v) = retraction.iter().find(|&&v| v >= m) {
        return Err(Error::OutOfRange(v));
    }
    if let Some(a) = (0..m).find(|&a| retraction[a] != a) {
        return Err(Error::RetractionNotIdentityOnA(a));
    }
    let t = BinaryOpTable::from_fn(carrier_size, |x, y| base.op(retraction[x], retraction[y]))?;
    validate_shelf(t).map_err(|e| Error::Internal(format!("retract extension: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{construct_family, FamilySpec};
    use crate::orbits::left_orbits;

    fn shelf(t: BinaryOpTable) -> Shelf {
        validate_shelf(t).unwrap()
    }

    #[test]
    fn union_of_points_is_identity() {
        let p = shelf(BinaryOpTable::identity(1));
        let u = combine(CombineMode::DisjointUnion, &[p.clone(), p]).unwrap();
        assert_eq!(u.table(), &BinaryOpTable::identity(2));
    }

    #[test]
    fn product_of_right_trivials() {
        let rt = shelf(BinaryOpTable::right_trivial(2));
        let p = combine(CombineMode::DirectProduct, &[rt.clone(), rt]).unwrap();
        assert_eq!(p.table(), &BinaryOpTable::right_trivial(4));
    }

    #[test]
    fn union_is_left_connected() {
        // y * x = y across blocks, and x ~ y * x joins the blocks
        let d3 = shelf(BinaryOpTable::from_fn(3, |x, y| (2 * y + 3 - x) % 3).unwrap());
        let c2 = shelf(BinaryOpTable::from_fn(2, |_, _| 1).unwrap());
        let u = combine(CombineMode::DisjointUnion, &[d3, c2]).unwrap();
        assert_eq!(left_orbits(&u).count(), 1);
        assert!(combine(CombineMode::DirectProduct, &[]).is_err());
    }

    #[test]
    fn retract_examples() {
        let d3 = shelf(BinaryOpTable::from_fn(3, |x, y| (2 * y + 3 - x) % 3).unwrap());
        assert_eq!(strong_retract_extend(&d3, 3, &[0, 1, 2]).unwrap(), d3);

        let pt = shelf(BinaryOpTable::right_trivial(1));
        let e = strong_retract_extend(&pt, 2, &[0, 0]).unwrap();
        assert_eq!(e.table(), &BinaryOpTable::from_fn(2, |_, _| 0).unwrap());

        assert!(matches!(
            strong_retract_extend(&d3, 4, &[1, 0, 2, 2]),
            Err(Error::RetractionNotIdentityOnA(0))
        ));
    }

    #[test]
    fn idempotent_right_is_a_retract_extension() {
        // g has image {0, 1} and fixes it
        let g = vec![0, 1, 1, 0, 1];
        let direct = construct_family(&FamilySpec::IdempotentRight { g: g.clone() })
            .unwrap()
            .into_shelf()
            .unwrap();
        let base = shelf(BinaryOpTable::right_trivial(2));
        assert_eq!(strong_retract_extend(&base, 5, &g).unwrap(), direct);
    }
}
