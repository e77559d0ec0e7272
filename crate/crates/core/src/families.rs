//! Constructors for the standard families of shelves and multi-shelves.

use crate::error::{Error, Result};
use crate::table::{validate_multishelf, validate_shelf, BinaryOpTable, MultiShelf, Shelf};

/// A set of subsets of a finite ground set, each encoded as a bitmask.
pub type SubsetFamily = Vec<u64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// `x * y = f(x)`.
    ConstLeft { f: Vec<usize> },
    /// `x * y = g(y)` with `g` idempotent.
    IdempotentRight { g: Vec<usize> },
    /// `x * y = x` if `y` is in the subset, else `y`.
    SubsetSwitch { n: usize, subset: Vec<usize> },
    /// `b * y = g(y)`, `x * y = y` otherwise; requires `g⁻¹(b) = {b}`.
    PointedMap { b: usize, g: Vec<usize> },
    /// `x * y = g_i(y)` for `x` in block `i`. `block_of[x]` names the block,
    /// `maps[i]` is `g_i`.
    PartitionFamily {
        block_of: Vec<usize>,
        maps: Vec<Vec<usize>>,
    },
    /// Subsets closed under intersection, with `∩`. Element `i` is `family[i]`.
    IntersectionShelf { family: SubsetFamily },
    /// Subsets closed under difference, with `x - y`.
    SubtractionShelf { family: SubsetFamily },
    /// All subsets of an `omega`-point set with the operations
    /// `x *0 y = x`, `∩`, `∪`, `x *~ y = y` in that order. Element `i` is
    /// the subset with bitmask `i`.
    BooleanMultiShelf { omega: usize },
    /// `x * y = x`.
    IdentityOp { n: usize },
    /// `x * y = y`.
    RightTrivialOp { n: usize },
}

#[derive(Clone, Debug)]
pub enum Constructed {
    Shelf(Shelf),
    MultiShelf(MultiShelf),
}

impl Constructed {
    pub fn into_shelf(self) -> Option<Shelf> {
        match self {
            Constructed::Shelf(s) => Some(s),
            Constructed::MultiShelf(_) => None,
        }
    }

    pub fn into_multishelf(self) -> MultiShelf {
        match self {
            Constructed::Shelf(s) => s.to_multishelf(),
            Constructed::MultiShelf(m) => m,
        }
    }
}

fn precondition(msg: impl Into<String>) -> Error {
    Error::SpecPreconditionFailed(msg.into())
}

fn check_map(g: &[usize], n: usize, name: &str) -> Result<()> {
    if g.len() != n {
        return Err(precondition(format!("{name} has {} values, expected {n}", g.len())));
    }
    if n == 0 {
        return Err(precondition("empty carrier"));
    }
    if let Some(v) = g.iter().find(|&&v| v >= n) {
        return Err(precondition(format!("{name} takes value {v} outside 0..{n}")));
    }
    Ok(())
}

fn subset_table(family: &[u64], op: impl Fn(u64, u64) -> u64, what: &str) -> Result<BinaryOpTable> {
    if family.is_empty() {
        return Err(precondition("empty family"));
    }
    let index_of = |set: u64| family.iter().position(|&s| s == set);
    let n = family.len();
    let mut entries = Vec::with_capacity(n * n);
    for &a in family {
        for &b in family {
            let v = op(a, b);
            entries.push(index_of(v).ok_or_else(|| {
                precondition(format!("family not closed under {what}: {a:#b}, {b:#b}"))
            })?);
        }
    }
    BinaryOpTable::new(n, entries)
}

/// Builds a member of one of the standard families, checking its
/// preconditions eagerly and validating the result.
pub fn construct_family(family: &FamilySpec) -> Result<Constructed> {
    let shelf = |t: BinaryOpTable| -> Result<Constructed> {
        validate_shelf(t)
            .map(Constructed::Shelf)
            .map_err(|e| Error::Internal(format!("family member is not a shelf: {e}")))
    };
    match family {
        FamilySpec::ConstLeft { f } => {
            check_map(f, f.len(), "f")?;
            shelf(BinaryOpTable::from_fn(f.len(), |x, _| f[x])?)
        }
        FamilySpec::IdempotentRight { g } => {
            check_map(g, g.len(), "g")?;
            if let Some(x) = (0..g.len()).find(|&x| g[g[x]] != g[x]) {
                return Err(precondition(format!("g(g({x})) != g({x})")));
            }
            shelf(BinaryOpTable::from_fn(g.len(), |_, y| g[y])?)
        }
        FamilySpec::SubsetSwitch { n, subset } => {
            if *n == 0 {
                return Err(precondition("empty carrier"));
            }
            let mut member = vec![false; *n];
            for &a in subset {
                *member
                    .get_mut(a)
                    .ok_or_else(|| precondition(format!("{a} not in carrier")))? = true;
            }
            shelf(BinaryOpTable::from_fn(*n, |x, y| if member[y] { x } else { y })?)
        }
        FamilySpec::PointedMap { b, g } => {
            let n = g.len();
            check_map(g, n, "g")?;
            if *b >= n {
                return Err(precondition(format!("base point {b} not in carrier")));
            }
            if let Some(x) = (0..n).find(|&x| (g[x] == *b) != (x == *b)) {
                return Err(precondition(format!("g⁻¹(b) != {{b}} (witness {x})")));
            }
            shelf(BinaryOpTable::from_fn(n, |x, y| if x == *b { g[y] } else { y })?)
        }
        FamilySpec::PartitionFamily { block_of, maps } => {
            let n = block_of.len();
            if n == 0 {
                return Err(precondition("empty carrier"));
            }
            if let Some(&i) = block_of.iter().find(|&&i| i >= maps.len()) {
                return Err(precondition(format!("block {i} has no map")));
            }
            for (i, g) in maps.iter().enumerate() {
                check_map(g, n, &format!("g_{i}"))?;
            }
            for (i, gi) in maps.iter().enumerate() {
                for x in 0..n {
                    let j = block_of[x];
                    if block_of[gi[x]] != j {
                        return Err(precondition(format!("g_{i} moves {x} out of its block")));
                    }
                    if maps[j][gi[x]] != gi[x] {
                        return Err(precondition(format!(
                            "g_{i} != g_{j} g_{i} at {x}"
                        )));
                    }
                }
            }
            shelf(BinaryOpTable::from_fn(n, |x, y| maps[block_of[x]][y])?)
        }
        FamilySpec::IntersectionShelf { family } => shelf(subset_table(family, |a, b| a & b, "∩")?),
        FamilySpec::SubtractionShelf { family } => {
            shelf(subset_table(family, |a, b| a & !b, "−")?)
        }
        FamilySpec::BooleanMultiShelf { omega } => {
            if *omega > 8 {
                return Err(Error::PracticalSizeLimit {
                    what: "Boolean multi-shelf ground set",
                    size: *omega,
                    limit: 8,
                });
            }
            let n = 1usize << omega;
            let ops = vec![
                BinaryOpTable::identity(n),
                BinaryOpTable::from_fn(n, |x, y| x & y)?,
                BinaryOpTable::from_fn(n, |x, y| x | y)?,
                BinaryOpTable::right_trivial(n),
            ];
            validate_multishelf(ops)
                .map(Constructed::MultiShelf)
                .map_err(|e| Error::Internal(format!("Boolean multi-shelf: {e}")))
        }
        FamilySpec::IdentityOp { n } => {
            if *n == 0 {
                return Err(precondition("empty carrier"));
            }
            shelf(BinaryOpTable::identity(*n))
        }
        FamilySpec::RightTrivialOp { n } => {
            if *n == 0 {
                return Err(precondition("empty carrier"));
            }
            shelf(BinaryOpTable::right_trivial(*n))
        }
    }
}

/// Whether the table has the shape `b * y = g(y)`, `x * y = y` for `x != b`,
/// with `g⁻¹(b) = {b}`, for some base point `b`.
pub fn is_pointed_map_type(table: &BinaryOpTable) -> bool {
    let n = table.size();
    (0..n).any(|b| {
        let others_trivial = (0..n)
            .filter(|&x| x != b)
            .all(|x| (0..n).all(|y| table.get(x, y) == y));
        others_trivial && (0..n).all(|y| (table.get(b, y) == b) == (y == b))
    })
}
