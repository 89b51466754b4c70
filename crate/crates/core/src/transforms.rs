//! Crossing moves, mirror images, alternatization and genus bounds.

use crate::coloring::{coloring_of, signatures, Coloring};
use crate::diagram::{resolve_state, trace_faces, Diagram, State, Token};
use crate::error::{Error, Result};
use crate::khovanov::{diagonal_support, khovanov, BuilderKind, KhPolynomial};
use serde::Serialize;
use std::collections::BTreeSet;
use std::str::FromStr;

/// A crossing move: `Or` swaps over and under keeping ε, `Sc` flips ε, and
/// `Cc` does both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MoveKind {
    Or,
    Sc,
    Cc,
}

impl FromStr for MoveKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "or" => Ok(MoveKind::Or),
            "sc" => Ok(MoveKind::Sc),
            "cc" => Ok(MoveKind::Cc),
            _ => Err(Error::Internal(format!("unknown move '{s}'"))),
        }
    }
}

fn edit(tok: &mut Token, mv: MoveKind) {
    if matches!(mv, MoveKind::Or | MoveKind::Cc) {
        tok.strand = tok.strand.flip();
    }
    if matches!(mv, MoveKind::Sc | MoveKind::Cc) {
        tok.sign = -tok.sign;
    }
}

/// Applies `mv` at every crossing whose label is in `labels`.
pub fn apply_moves(d: &Diagram, mv: MoveKind, labels: &[u32]) -> Result<Diagram> {
    for &l in labels {
        if d.crossing_index(l).is_none() {
            return Err(Error::UnknownCrossing { label: l });
        }
    }
    let mut comps = d.components().to_vec();
    for tok in comps.iter_mut().flatten() {
        if labels.contains(&tok.label) {
            edit(tok, mv);
        }
    }
    Diagram::from_components(comps)
}

pub fn apply_move(d: &Diagram, mv: MoveKind, label: u32) -> Result<Diagram> {
    apply_moves(d, mv, &[label])
}

fn all_labels(d: &Diagram) -> Vec<u32> {
    d.crossings().iter().map(|c| c.label).collect()
}

/// Orientation reversal −D.
pub fn reverse(d: &Diagram) -> Diagram {
    let comps = d
        .components()
        .iter()
        .map(|c| c.iter().rev().copied().collect())
        .collect();
    Diagram::from_components(comps).expect("reversal keeps a valid code")
}

/// Vertical mirror D*: cc everywhere.
pub fn star(d: &Diagram) -> Diagram {
    apply_moves(d, MoveKind::Cc, &all_labels(d)).expect("labels exist")
}

/// Horizontal mirror D†: sc everywhere.
pub fn dagger(d: &Diagram) -> Diagram {
    apply_moves(d, MoveKind::Sc, &all_labels(d)).expect("labels exist")
}

/// D*†: or everywhere.
pub fn star_dagger(d: &Diagram) -> Diagram {
    apply_moves(d, MoveKind::Or, &all_labels(d)).expect("labels exist")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mirrors {
    pub minus: Diagram,
    pub star: Diagram,
    pub dagger: Diagram,
    pub star_dagger: Diagram,
}

pub fn mirrors(d: &Diagram) -> Mirrors {
    Mirrors {
        minus: reverse(d),
        star: star(d),
        dagger: dagger(d),
        star_dagger: star_dagger(d),
    }
}

/// D_alt: `or` at every crossing with η = -1 under `c`.
pub fn alternatize(d: &Diagram, c: &Coloring) -> Result<Diagram> {
    if c.eta.len() != d.n() {
        return Err(Error::Internal(
            "coloring does not belong to diagram".into(),
        ));
    }
    let labels: Vec<u32> = d
        .crossings()
        .iter()
        .zip(&c.eta)
        .filter(|(_, &e)| e == -1)
        .map(|(x, _)| x.label)
        .collect();
    apply_moves(d, MoveKind::Or, &labels)
}

/// D_alt under the normalized coloring.
pub fn alternatize_diagram(d: &Diagram) -> Result<Diagram> {
    let (_, c) = coloring_of(d)?;
    alternatize(d, &c)
}

/// Genus of the surface carrying the diagram.
pub fn supporting_genus(d: &Diagram) -> Result<usize> {
    Ok(trace_faces(d)?.genus)
}

/// g_T(D) = (c + 2 - |s₀| - |s₁|) / 2 for a classical connected diagram.
pub fn turaev_genus_diagram(d: &Diagram) -> Result<usize> {
    let g = supporting_genus(d)?;
    if g != 0 {
        return Err(Error::NotClassical { genus: g });
    }
    let n = d.n();
    let s0 = resolve_state(d, State::zeros(n))?.circle_count();
    let s1 = resolve_state(d, State::ones(n))?.circle_count();
    let twice = n + 2 - s0 - s1;
    if (n + 2) < s0 + s1 || !twice.is_multiple_of(2) {
        return Err(Error::Internal(format!(
            "Turaev genus formula gave non-integer value for n = {n}, |s0| = {s0}, |s1| = {s1}"
        )));
    }
    Ok(twice / 2)
}

/// Diagonals j - 2i predicted by the signature pair: -σ_ξ* + 1 down to
/// -σ_ξ - 1 in steps of 2.
pub fn predicted_lines(sigma_xi: i64, sigma_xi_star: i64, g: i64) -> Result<BTreeSet<i32>> {
    let diff = sigma_xi - sigma_xi_star;
    if diff != 2 * g {
        return Err(Error::InconsistentInputs { diff, two_g: 2 * g });
    }
    Ok((0..=g + 1)
        .map(|t| (-sigma_xi_star + 1 - 2 * t) as i32)
        .collect())
}

/// Does every nonzero term of `p` lie on a predicted diagonal?
pub fn support_verdict(
    p: &KhPolynomial,
    sigma_xi: i64,
    sigma_xi_star: i64,
    g: i64,
) -> Result<bool> {
    let lines = predicted_lines(sigma_xi, sigma_xi_star, g)?;
    Ok(diagonal_support(p).is_subset(&lines))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenusReport {
    pub g_diagram: usize,
    pub g_alt_diagram: usize,
    pub g_t_diagram: Option<usize>,
    /// Signature pair of D_alt as (σ_ξ*, σ_ξ).
    pub alt_signatures: (i64, i64),
    pub support_lines: BTreeSet<i32>,
    pub observed_lines: BTreeSet<i32>,
    pub verdict: bool,
}

/// Genus data and the diagonal-support check for a colorable diagram.
pub fn genus_report(d: &Diagram) -> Result<GenusReport> {
    let g_diagram = supporting_genus(d)?;
    let alt = alternatize_diagram(d)?;
    let g_alt = supporting_genus(&alt)?;
    let g_t = turaev_genus_diagram(d).ok();
    let (lo, hi) = signatures(&alt)?.sorted();
    let kh = khovanov(d, BuilderKind::SourceSink)?;
    let support_lines = predicted_lines(hi, lo, g_alt as i64)?;
    let observed = diagonal_support(&kh);
    Ok(GenusReport {
        g_diagram,
        g_alt_diagram: g_alt,
        g_t_diagram: g_t,
        alt_signatures: (lo, hi),
        verdict: observed.is_subset(&support_lines),
        support_lines,
        observed_lines: observed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_gauss_code;

    const LEFT_TREFOIL: &str = "O1-U2-O3-U1-O2-U3-";

    #[test]
    fn moves_compose() {
        let d = parse_gauss_code(LEFT_TREFOIL).unwrap();
        let a = apply_move(&apply_move(&d, MoveKind::Sc, 2).unwrap(), MoveKind::Or, 2).unwrap();
        assert_eq!(a, apply_move(&d, MoveKind::Cc, 2).unwrap());
        for mv in [MoveKind::Or, MoveKind::Sc, MoveKind::Cc] {
            let twice = apply_move(&apply_move(&d, mv, 1).unwrap(), mv, 1).unwrap();
            assert_eq!(twice, d);
        }
        assert!(matches!(
            apply_move(&d, MoveKind::Or, 9),
            Err(Error::UnknownCrossing { label: 9 })
        ));
    }

    #[test]
    fn star_is_involution() {
        let d = parse_gauss_code(LEFT_TREFOIL).unwrap();
        assert_eq!(star(&star(&d)), d);
        assert_eq!(star(&d).to_code(), "U1+O2+U3+O1+U2+O3+");
    }

    #[test]
    fn trefoil_is_already_alternating() {
        let d = parse_gauss_code(LEFT_TREFOIL).unwrap();
        let alt = alternatize_diagram(&d).unwrap();
        assert!(alt.is_alternating());
        assert_eq!(turaev_genus_diagram(&d).unwrap(), 0);
    }

    #[test]
    fn verdicts() {
        let p = KhPolynomial::parse("1/q^9t^3+1/q^5t^2+1/q^3+1/q").unwrap();
        assert!(support_verdict(&p, 2, 2, 0).unwrap());
        let u = KhPolynomial::parse("q+1/q").unwrap();
        assert!(support_verdict(&u, 0, 0, 0).unwrap());
        assert_eq!(predicted_lines(0, 0, 0).unwrap(), BTreeSet::from([1, -1]));
        assert_eq!(
            predicted_lines(4, 2, 1).unwrap(),
            BTreeSet::from([-1, -3, -5])
        );
        assert!(matches!(
            support_verdict(&u, 2, 0, 0),
            Err(Error::InconsistentInputs { diff: 2, two_g: 0 })
        ));
    }

    #[test]
    fn virtual_trefoil_is_not_classical() {
        let d = parse_gauss_code("O1+O2+U1+U2+").unwrap();
        assert!(matches!(
            turaev_genus_diagram(&d),
            Err(Error::NotClassical { genus: 1 })
        ));
    }
}
