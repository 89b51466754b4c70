use super::{Diagram, HalfEdge};
use crate::error::{Error, Result};

/// A boundary component of the disk-band surface S_D.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    /// Half-edges left along this boundary, in walking order.
    pub darts: Vec<HalfEdge>,
}

/// Faces of the ribbon graph of a connected diagram.
///
/// Faces are traced by leaving each crossing along the half-edge
/// counterclockwise from the one we arrived on; such a walk keeps the face
/// on its right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceData {
    pub faces: Vec<Face>,
    /// `corner_face[c][p]`: face holding the corner between rotation
    /// positions `p` and `p + 1` at crossing `c`.
    pub corner_face: Vec<[usize; 4]>,
    /// `(left, right)` faces of each arc relative to its orientation.
    pub arc_sides: Vec<(usize, usize)>,
    pub genus: usize,
}

impl SurfaceData {
    pub fn face_count(&self) -> usize {
        self.faces.len()
    }
}

/// Traces the boundary components of S_D and computes its genus.
pub fn trace_faces(d: &Diagram) -> Result<SurfaceData> {
    d.require_connected()?;
    let n = d.n();
    if n == 0 {
        // a lone crossing-free circle: an annulus, one face on each side
        return Ok(SurfaceData {
            faces: vec![Face { darts: vec![] }, Face { darts: vec![] }],
            corner_face: vec![],
            arc_sides: vec![(0, 1)],
            genus: 0,
        });
    }
    let arcs = d.arcs();
    let mut dart_face = vec![usize::MAX; 4 * n];
    let mut corner_face = vec![[usize::MAX; 4]; n];
    let mut faces = Vec::new();
    for start in 0..4 * n {
        if dart_face[start] != usize::MAX {
            continue;
        }
        let id = faces.len();
        let mut darts = Vec::new();
        let mut h = HalfEdge(start as u32);
        while dart_face[h.index()] == usize::MAX {
            dart_face[h.index()] = id;
            darts.push(h);
            let (a, is_start) = d.arc_at(h);
            let other = if is_start { arcs[a].end } else { arcs[a].start }
                .expect("arc with crossings has endpoints");
            let rot = d.rotation(other.crossing());
            let p = d.rotation_position(other);
            corner_face[other.crossing()][p] = id;
            h = rot[(p + 1) % 4];
        }
        faces.push(Face { darts });
    }
    let arc_sides = arcs
        .iter()
        .map(|arc| {
            let right = dart_face[arc.start.expect("endpoint").index()];
            let left = dart_face[arc.end.expect("endpoint").index()];
            (left, right)
        })
        .collect();
    let f = faces.len();
    if n + 2 < f || !(n + 2 - f).is_multiple_of(2) {
        return Err(Error::Internal(format!(
            "Euler characteristic mismatch: n = {n}, F = {f}"
        )));
    }
    Ok(SurfaceData {
        faces,
        corner_face,
        arc_sides,
        genus: (n + 2 - f) / 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_gauss_code;

    #[test]
    fn left_trefoil_is_planar() {
        let d = parse_gauss_code("O1-U2-O3-U1-O2-U3-").unwrap();
        let s = trace_faces(&d).unwrap();
        assert_eq!(s.face_count(), 5);
        assert_eq!(s.genus, 0);
    }

    #[test]
    fn virtual_trefoil_has_genus_one() {
        let d = parse_gauss_code("O1+O2+U1+U2+").unwrap();
        let s = trace_faces(&d).unwrap();
        assert_eq!(s.genus, 1);
        assert_eq!(s.face_count(), 2);
    }

    #[test]
    fn unknot_is_an_annulus() {
        let s = trace_faces(&crate::diagram::Diagram::unknot()).unwrap();
        assert_eq!(s.face_count(), 2);
        assert_eq!(s.genus, 0);
    }

    #[test]
    fn disconnected_rejected() {
        let d = parse_gauss_code("();()").unwrap();
        assert!(matches!(
            trace_faces(&d),
            Err(Error::DisconnectedDiagram { blocks: 2 })
        ));
    }

    #[test]
    fn every_corner_assigned() {
        let d = parse_gauss_code("O1-U2-O3+U1-O2-U3+").unwrap();
        let s = trace_faces(&d).unwrap();
        assert!(s.corner_face.iter().flatten().all(|&f| f < s.face_count()));
        let darts: usize = s.faces.iter().map(|f| f.darts.len()).sum();
        assert_eq!(darts, 4 * d.n());
    }
}
