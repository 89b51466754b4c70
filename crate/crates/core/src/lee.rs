//! Lee's deformation, its quantum filtration and the Rasmussen invariant.

use crate::diagram::{resolve_state, Diagram, State};
use crate::error::{Error, Result};
use crate::khovanov::{build_cube_source_sink, differential_matrix, generators, Cube, Generator};
use crate::linalg::{filtered_image_dims, rank, FilteredBasis, FilteredDims, IntMatrix};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

/// Lee complex: Khovanov generators, filtered by quantum degree, with the
/// deformed differential d' = d + Φ.
#[derive(Debug, Clone)]
pub struct LeeComplex {
    /// Generators per homological degree, quantum degree nonincreasing.
    chains: BTreeMap<i32, Vec<Generator>>,
    bases: BTreeMap<i32, FilteredBasis>,
    /// `d[i]` maps C^i to C^{i+1}.
    d: BTreeMap<i32, IntMatrix>,
}

impl LeeComplex {
    pub fn degrees(&self) -> impl Iterator<Item = i32> + '_ {
        self.chains.keys().copied()
    }

    pub fn generators(&self, i: i32) -> &[Generator] {
        self.chains.get(&i).map_or(&[], Vec::as_slice)
    }

    pub fn differential(&self, i: i32) -> Option<&IntMatrix> {
        self.d.get(&i)
    }

    fn basis(&self, i: i32) -> FilteredBasis {
        self.bases
            .get(&i)
            .cloned()
            .unwrap_or_else(FilteredBasis::empty)
    }

    fn matrix(&self, i: i32) -> IntMatrix {
        self.d.get(&i).cloned().unwrap_or_else(|| {
            IntMatrix::zeros(
                self.chains.get(&(i + 1)).map_or(0, Vec::len),
                self.chains.get(&i).map_or(0, Vec::len),
            )
        })
    }

    /// dim F^k H^i for every level k.
    pub fn filtered_dims(&self, i: i32) -> Result<FilteredDims> {
        filtered_image_dims(
            &self.matrix(i - 1),
            &self.matrix(i),
            &self.basis(i - 1),
            &self.basis(i),
            &self.basis(i + 1),
        )
    }

    /// Total dimension of Lee homology in each degree.
    pub fn homology_dims(&self) -> BTreeMap<i32, usize> {
        let ranks: BTreeMap<i32, usize> = self.d.par_iter().map(|(&i, m)| (i, rank(m))).collect();
        self.chains
            .iter()
            .map(|(&i, g)| {
                let r =
                    ranks.get(&i).copied().unwrap_or(0) + ranks.get(&(i - 1)).copied().unwrap_or(0);
                (i, g.len() - r)
            })
            .filter(|&(_, d)| d > 0)
            .collect()
    }

    /// dim F^j H^i / F^{j+1} H^i over all bidegrees with nonzero value.
    pub fn e_infinity(&self) -> Result<BTreeMap<(i32, i32), usize>> {
        let mut out = BTreeMap::new();
        for (i, _) in self.homology_dims() {
            let dims = self.filtered_dims(i)?;
            for (j, _) in dims.levels() {
                let e = dims.get(j) - dims.get(j + 1);
                if e > 0 {
                    out.insert((i, j), e);
                }
            }
        }
        Ok(out)
    }
}

/// Assembles d' over a cube without single-cycle edges.
pub fn lee_complex(cube: &Cube) -> Result<LeeComplex> {
    if let Some(e) = cube
        .edges()
        .find(|e| e.map == crate::khovanov::EdgeMap::SingleCycle)
    {
        return Err(Error::SingleCycleFound { crossing: e.bit });
    }
    let mut chains: BTreeMap<i32, Vec<Generator>> = BTreeMap::new();
    for g in generators(cube) {
        chains.entry(g.i).or_default().push(g);
    }
    for v in chains.values_mut() {
        v.sort_by(|a, b| {
            b.j.cmp(&a.j)
                .then(a.state.cmp(&b.state))
                .then(a.mask.cmp(&b.mask))
        });
    }
    let bases = chains
        .iter()
        .map(|(&i, g)| Ok((i, FilteredBasis::new(g.iter().map(|x| x.j).collect())?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    let empty = Vec::new();
    let degrees: Vec<i32> = chains.keys().copied().collect();
    let d = degrees
        .par_iter()
        .map(|&i| {
            let dst = chains.get(&(i + 1)).unwrap_or(&empty);
            differential_matrix(cube, &chains[&i], dst, true).map(|m| (i, m))
        })
        .collect::<Result<BTreeMap<_, _>>>()?;
    for (i, d0) in &d {
        if let Some(d1) = d.get(&(i + 1)) {
            if d1.rows() > 0 && d0.cols() > 0 && !d1.mul(d0).is_zero() {
                return Err(Error::Internal(format!("(d')² ≠ 0 at degree {i}")));
            }
        }
    }
    Ok(LeeComplex { chains, bases, d })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RasmussenResult {
    pub s: i64,
    pub s_min: i64,
    pub s_max: i64,
    pub lee_dim: usize,
    /// Bidegrees (i, j) surviving to E∞.
    pub survivors: Vec<(i32, i32)>,
}

/// Rasmussen invariant from the filtration on Lee homology.
pub fn rasmussen(d: &Diagram) -> Result<RasmussenResult> {
    if d.components().len() != 1 {
        return Err(Error::NotAKnot {
            components: d.components().len(),
        });
    }
    let lee = lee_complex(&build_cube_source_sink(d)?)?;
    let lee_dim: usize = lee.homology_dims().values().sum();
    let dims = lee.filtered_dims(0)?;
    let (Some(s_max), Some(s_min)) = (dims.max_level_with(1), dims.max_level_with(2)) else {
        return Err(Error::Internal(format!(
            "Lee homology in degree 0 has dimension {}",
            dims.total()
        )));
    };
    if s_max - s_min != 2 {
        return Err(Error::Internal(format!(
            "s_max - s_min = {} instead of 2",
            s_max - s_min
        )));
    }
    let survivors = lee
        .e_infinity()?
        .into_iter()
        .flat_map(|((i, j), n)| std::iter::repeat_n((i, j), n));
    Ok(RasmussenResult {
        s: i64::from(s_min) + 1,
        s_min: s_min.into(),
        s_max: s_max.into(),
        lee_dim,
        survivors: survivors.collect(),
    })
}

fn require_knot(d: &Diagram) -> Result<()> {
    match d.components().len() {
        1 => Ok(()),
        c => Err(Error::NotAKnot { components: c }),
    }
}

/// s = n - k + 1 for a positive diagram, k the all-0 circle count.
pub fn rasmussen_positive(d: &Diagram) -> Result<i64> {
    require_knot(d)?;
    if d.n_minus() > 0 {
        return Err(Error::NotPositive);
    }
    let k = resolve_state(d, State::zeros(d.n()))?.circle_count() as i64;
    Ok(d.n() as i64 - k + 1)
}

/// s = k - n - 1 for a negative diagram, k the all-1 circle count.
pub fn rasmussen_negative(d: &Diagram) -> Result<i64> {
    require_knot(d)?;
    if d.n_plus() > 0 {
        return Err(Error::NotNegative);
    }
    let k = resolve_state(d, State::ones(d.n()))?.circle_count() as i64;
    Ok(k - d.n() as i64 - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_gauss_code;

    const LEFT_TREFOIL: &str = "O1-U2-O3-U1-O2-U3-";

    #[test]
    fn left_trefoil() {
        let d = parse_gauss_code(LEFT_TREFOIL).unwrap();
        let r = rasmussen(&d).unwrap();
        assert_eq!(r.s, -2);
        assert_eq!(r.lee_dim, 2);
        assert_eq!(r.survivors, vec![(0, -3), (0, -1)]);
        assert_eq!(rasmussen_negative(&d).unwrap(), -2);
        assert!(matches!(rasmussen_positive(&d), Err(Error::NotPositive)));
    }

    #[test]
    fn unknot() {
        let r = rasmussen(&Diagram::unknot()).unwrap();
        assert_eq!((r.s, r.s_min, r.s_max, r.lee_dim), (0, -1, 1, 2));
    }

    #[test]
    fn kinks() {
        let p = parse_gauss_code("O1+U1+").unwrap();
        assert_eq!(rasmussen_positive(&p).unwrap(), 0);
        assert_eq!(rasmussen(&p).unwrap().s, 0);
        let n = parse_gauss_code("O1-U1-").unwrap();
        assert_eq!(rasmussen_negative(&n).unwrap(), 0);
    }

    #[test]
    fn hopf_link_lee_dim() {
        let d = parse_gauss_code("O1+U2+;U1+O2+").unwrap();
        let lee = lee_complex(&build_cube_source_sink(&d).unwrap()).unwrap();
        assert_eq!(lee.homology_dims().values().sum::<usize>(), 4);
        assert!(matches!(
            rasmussen(&d),
            Err(Error::NotAKnot { components: 2 })
        ));
    }
}
