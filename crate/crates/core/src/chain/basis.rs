use crate::error::{Error, Result};

/// Lexicographic index of a tuple over `0..n`, leftmost entry most
/// significant.
pub fn basis_index(tuple: &[usize], n: usize) -> Result<usize> {
    tuple.iter().try_fold(0usize, |acc, &x| {
        if x >= n {
            Err(Error::OutOfRange(x))
        } else {
            Ok(acc * n + x)
        }
    })
}

/// Inverse of [`basis_index`] for tuples of the given length.
pub fn index_tuple(mut index: usize, len: usize, n: usize) -> Result<Vec<usize>> {
    let total = (n as u128).checked_pow(len as u32).unwrap_or(u128::MAX);
    if index as u128 >= total {
        return Err(Error::OutOfRange(index));
    }
    let mut t = vec![0; len];
    for slot in t.iter_mut().rev() {
        *slot = index % n;
        index /= n;
    }
    Ok(t)
}

/// Fills `out` with the digits of `index`; no range checks.
#[inline]
pub(crate) fn decode_into(mut index: usize, n: usize, out: &mut [usize]) {
    for slot in out.iter_mut().rev() {
        *slot = index % n;
        index /= n;
    }
}

#[inline]
pub(crate) fn encode(tuple: &[usize], n: usize) -> usize {
    tuple.iter().fold(0, |acc, &x| acc * n + x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        assert_eq!(basis_index(&[0, 0], 3).unwrap(), 0);
        assert_eq!(basis_index(&[2, 1], 3).unwrap(), 7);
        assert!(basis_index(&[3, 0], 3).is_err());
        assert_eq!(index_tuple(7, 2, 3).unwrap(), vec![2, 1]);
        assert!(index_tuple(9, 2, 3).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn round_trip(n in 1usize..6, t in proptest::collection::vec(0usize..6, 1..6)) {
            let t: Vec<usize> = t.into_iter().map(|x| x % n).collect();
            let i = basis_index(&t, n).unwrap();
            prop_assert_eq!(index_tuple(i, t.len(), n).unwrap(), t);
        }
    }
}
