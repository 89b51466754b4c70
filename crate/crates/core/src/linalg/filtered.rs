use super::{prefix_ranks, IntMatrix};
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// Filtration levels of a basis, listed in nonincreasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilteredBasis {
    levels: Vec<i32>,
}

impl FilteredBasis {
    pub fn new(levels: Vec<i32>) -> Result<Self> {
        if levels.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Internal(
                "filtered basis levels must be nonincreasing".into(),
            ));
        }
        Ok(FilteredBasis { levels })
    }

    pub fn empty() -> Self {
        FilteredBasis { levels: Vec::new() }
    }

    pub fn levels(&self) -> &[i32] {
        &self.levels
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// Number of basis vectors of level at least `k`.
    pub fn count_at_least(&self, k: i32) -> usize {
        self.levels.partition_point(|&l| l >= k)
    }
}

/// dim F^k H at every level of the middle basis.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FilteredDims {
    dims: BTreeMap<i32, usize>,
}

impl FilteredDims {
    /// dim F^k H for any `k`.
    pub fn get(&self, k: i32) -> usize {
        self.dims.range(k..).next().map_or(0, |(_, &d)| d)
    }

    pub fn levels(&self) -> impl Iterator<Item = (i32, usize)> + '_ {
        self.dims.iter().map(|(&k, &d)| (k, d))
    }

    pub fn total(&self) -> usize {
        self.dims.values().next().copied().unwrap_or(0)
    }

    /// Largest `k` with dim F^k H >= `at_least`.
    pub fn max_level_with(&self, at_least: usize) -> Option<i32> {
        self.dims
            .iter()
            .rev()
            .find(|(_, &d)| d >= at_least)
            .map(|(&k, _)| k)
    }
}

fn check_filtered(d: &IntMatrix, src: &FilteredBasis, dst: &FilteredBasis) -> Result<()> {
    if d.cols() != src.len() || d.rows() != dst.len() {
        return Err(Error::Internal(format!(
            "differential shape {}x{} does not match bases {}->{}",
            d.rows(),
            d.cols(),
            src.len(),
            dst.len()
        )));
    }
    for (r, c, _) in d.entries() {
        let (row_level, col_level) = (dst.levels[r], src.levels[c]);
        if row_level < col_level {
            return Err(Error::FiltrationViolation {
                col_level,
                row_level,
            });
        }
    }
    Ok(())
}

/// Dimensions of the filtered pieces F^k H of the homology at the middle of
/// `C_in --d_in--> C --d_out--> C_out`.
///
/// Uses only ranks: dim F^k H = #C_{>=k} - rank(d_out on C_{>=k})
/// - rank(d_in) + rank(rows of d_in landing in C_{<k}).
pub fn filtered_image_dims(
    d_in: &IntMatrix,
    d_out: &IntMatrix,
    basis_in: &FilteredBasis,
    basis: &FilteredBasis,
    basis_out: &FilteredBasis,
) -> Result<FilteredDims> {
    check_filtered(d_in, basis_in, basis)?;
    check_filtered(d_out, basis, basis_out)?;
    let n = basis.len();
    let col_ranks = prefix_ranks(&d_out.columns());
    let mut low_rows: Vec<_> = d_in.row_vectors().to_vec();
    low_rows.reverse();
    let low_ranks = prefix_ranks(&low_rows);
    let rank_in = low_ranks.last().copied().unwrap_or(0);
    let at = |v: &[usize], len: usize| if len == 0 { 0 } else { v[len - 1] };
    let mut dims = BTreeMap::new();
    for &k in &basis.levels {
        if dims.contains_key(&k) {
            continue;
        }
        let high = basis.count_at_least(k);
        let dim = high + at(&low_ranks, n - high) - at(&col_ranks, high) - rank_in;
        dims.insert(k, dim);
    }
    Ok(FilteredDims { dims })
}
