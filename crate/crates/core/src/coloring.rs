//! Checkerboard colorings, Goeritz matrices and the signature pair.

use crate::diagram::{resolve_state, trace_faces, Diagram, Resolution, State, SurfaceData};
use crate::error::{Error, Result};
use crate::linalg::{symmetric_signature, IntMatrix};
use serde::Serialize;
use std::collections::VecDeque;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    White,
    Black,
}

impl Color {
    pub fn swap(self) -> Self {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CrossingType {
    I,
    II,
}

/// A checkerboard coloring of the faces of S_D.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    /// Color of each face, indexed as in [`SurfaceData::faces`].
    pub color: Vec<Color>,
    /// White faces X_0, ..., X_m in tracing order.
    pub white_faces: Vec<usize>,
    /// Incidence η(c) of each crossing.
    pub eta: Vec<i8>,
    /// s∂: 0-smoothing where η = +1, 1-smoothing where η = -1.
    #[serde(skip)]
    pub s_boundary: State,
}

impl Coloring {
    fn from_colors(color: Vec<Color>, s: &SurfaceData) -> Self {
        let white_faces = (0..color.len())
            .filter(|&f| color[f] == Color::White)
            .collect();
        // the 0-smoothing hugs corners 1 and 3
        let eta: Vec<i8> = s
            .corner_face
            .iter()
            .map(|cf| if color[cf[1]] == Color::White { 1 } else { -1 })
            .collect();
        let bits: Vec<bool> = eta.iter().map(|&e| e == -1).collect();
        Coloring {
            color,
            white_faces,
            eta,
            s_boundary: State::from_slice(&bits),
        }
    }

    /// The dual coloring ξ*.
    pub fn dual(&self, s: &SurfaceData) -> Coloring {
        Coloring::from_colors(self.color.iter().map(|c| c.swap()).collect(), s)
    }

    pub fn s_boundary_dual(&self) -> State {
        self.s_boundary.complement()
    }
}

/// Two-colors the faces so that the two sides of every arc differ.
///
/// The face on the left of the first arc of the first component is white.
/// Returns `None` when the face graph is not bipartite.
pub fn find_checkerboard_coloring(d: &Diagram, s: &SurfaceData) -> Option<Coloring> {
    let f = s.face_count();
    let mut adj = vec![Vec::new(); f];
    for &(l, r) in &s.arc_sides {
        if l == r {
            return None;
        }
        adj[l].push(r);
        adj[r].push(l);
    }
    let mut color: Vec<Option<Color>> = vec![None; f];
    let root = s.arc_sides.first().map_or(0, |&(l, _)| l);
    let mut order: Vec<usize> = vec![root];
    order.extend((0..f).filter(|&x| x != root));
    for start in order {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(Color::White);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            let cx = color[x].expect("colored");
            for &y in &adj[x] {
                match color[y] {
                    None => {
                        color[y] = Some(cx.swap());
                        queue.push_back(y);
                    }
                    Some(cy) if cy == cx => return None,
                    Some(_) => {}
                }
            }
        }
    }
    debug_assert_eq!(s.corner_face.len(), d.n());
    Some(Coloring::from_colors(
        color
            .into_iter()
            .map(|c| c.expect("all faces colored"))
            .collect(),
        s,
    ))
}

/// Convenience: trace faces and color them.
pub fn coloring_of(d: &Diagram) -> Result<(SurfaceData, Coloring)> {
    let s = trace_faces(d)?;
    let c = find_checkerboard_coloring(d, &s).ok_or(Error::NotColorable)?;
    Ok((s, c))
}

/// Pre-Goeritz and Goeritz matrices with the correction term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoeritzData {
    pub pre_goeritz: IntMatrix,
    pub goeritz: IntMatrix,
    pub mu: i64,
    pub sigma: i64,
    pub types: Vec<CrossingType>,
}

pub fn crossing_type(sign: i8, eta: i8) -> CrossingType {
    if sign * eta == 1 {
        CrossingType::II
    } else {
        CrossingType::I
    }
}

pub fn goeritz_data(d: &Diagram, s: &SurfaceData, c: &Coloring) -> Result<GoeritzData> {
    let m1 = c.white_faces.len();
    let mut index = vec![usize::MAX; s.face_count()];
    for (i, &f) in c.white_faces.iter().enumerate() {
        index[f] = i;
    }
    let mut entries = Vec::new();
    let mut row_sum = vec![0i64; m1];
    for (ci, cf) in s.corner_face.iter().enumerate() {
        let whites: Vec<usize> = if c.color[cf[1]] == Color::White {
            vec![cf[1], cf[3]]
        } else {
            vec![cf[0], cf[2]]
        };
        if whites.iter().any(|&w| c.color[w] != Color::White) {
            return Err(Error::Internal(format!(
                "corners of crossing {} are not checkerboard",
                d.crossings()[ci].label
            )));
        }
        let (i, j) = (index[whites[0]], index[whites[1]]);
        if i == j {
            continue;
        }
        let v = -i64::from(c.eta[ci]);
        entries.push((i, j, v));
        entries.push((j, i, v));
        row_sum[i] += v;
        row_sum[j] += v;
    }
    for (i, &r) in row_sum.iter().enumerate() {
        entries.push((i, i, -r));
    }
    let pre = IntMatrix::from_triplets(m1, m1, entries.iter().copied());
    let minor = if m1 == 0 {
        IntMatrix::zeros(0, 0)
    } else {
        IntMatrix::from_triplets(
            m1 - 1,
            m1 - 1,
            entries
                .iter()
                .filter(|&&(i, j, _)| i > 0 && j > 0)
                .map(|&(i, j, v)| (i - 1, j - 1, v)),
        )
    };
    let types: Vec<CrossingType> = d
        .crossings()
        .iter()
        .zip(&c.eta)
        .map(|(x, &e)| crossing_type(x.sign, e))
        .collect();
    let mu: i64 = types
        .iter()
        .zip(&c.eta)
        .filter(|(t, _)| **t == CrossingType::II)
        .map(|(_, &e)| i64::from(e))
        .sum();
    let sigma = symmetric_signature(&minor)? - mu;
    Ok(GoeritzData {
        pre_goeritz: pre,
        goeritz: minor,
        mu,
        sigma,
        types,
    })
}

/// (σ_ξ, σ_ξ*) for the given coloring and its dual.
pub fn signature_pair(d: &Diagram, c: &Coloring) -> Result<(i64, i64)> {
    let s = trace_faces(d)?;
    if c.color.len() != s.face_count() || c.eta.len() != d.n() {
        return Err(Error::Internal(
            "coloring does not belong to diagram".into(),
        ));
    }
    let a = goeritz_data(d, &s, c)?.sigma;
    let b = goeritz_data(d, &s, &c.dual(&s))?.sigma;
    Ok((a, b))
}

/// Signatures of both colorings, reported as (min, max).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SignaturePair {
    pub sigma_xi: i64,
    pub sigma_xi_star: i64,
}

impl SignaturePair {
    pub fn sorted(self) -> (i64, i64) {
        let (a, b) = (self.sigma_xi, self.sigma_xi_star);
        (a.min(b), a.max(b))
    }
}

/// Signature pair of a diagram under its normalized coloring.
pub fn signatures(d: &Diagram) -> Result<SignaturePair> {
    let (_, c) = coloring_of(d)?;
    let (a, b) = signature_pair(d, &c)?;
    Ok(SignaturePair {
        sigma_xi: a,
        sigma_xi_star: b,
    })
}

/// The boundary states s∂ and its dual.
pub fn boundary_states(d: &Diagram, c: &Coloring) -> Result<(Resolution, Resolution)> {
    let a = resolve_state(d, c.s_boundary)?;
    let b = resolve_state(d, c.s_boundary_dual())?;
    let s = trace_faces(d)?;
    if a.circle_count() + b.circle_count() != s.face_count() {
        return Err(Error::Internal(format!(
            "boundary states have {} + {} circles but S_D has {} faces",
            a.circle_count(),
            b.circle_count(),
            s.face_count()
        )));
    }
    Ok((a, b))
}
