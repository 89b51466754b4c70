//! The combined invariants report printed by `vkh invariants`.

use crate::coloring::{coloring_of, signature_pair};
use crate::diagram::{trace_faces, Diagram};
use crate::error::{Error, Result};
use crate::khovanov::{diagonal_support, khovanov, BuilderKind};
use crate::lee::rasmussen;
use crate::transforms::{alternatize, predicted_lines, supporting_genus};
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;

/// Which of the two checkerboard colorings plays the role of ξ.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ColoringChoice {
    #[default]
    Primal,
    Dual,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Support {
    pub lines: BTreeSet<i32>,
    pub observed: BTreeSet<i32>,
    pub verdict: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantsReport {
    pub code: String,
    pub components: usize,
    pub crossings: usize,
    pub writhe: i64,
    pub connected: bool,
    pub alternating: bool,
    pub genus: Option<usize>,
    pub colorable: bool,
    /// (σ_ξ*, σ_ξ) under the chosen coloring.
    pub signatures: Option<(i64, i64)>,
    pub builder: BuilderKind,
    pub kh: Option<String>,
    pub rasmussen: Option<i64>,
    pub support: Option<Support>,
    pub alt_code: Option<String>,
    pub alt_genus: Option<usize>,
}

fn colorable_part(d: &Diagram, choice: ColoringChoice) -> Result<((i64, i64), Diagram, usize)> {
    let (s, c) = coloring_of(d)?;
    let c = match choice {
        ColoringChoice::Primal => c,
        ColoringChoice::Dual => c.dual(&s),
    };
    let (xi, xi_star) = signature_pair(d, &c)?;
    let alt = alternatize(d, &c)?;
    let g = supporting_genus(&alt)?;
    Ok(((xi_star, xi), alt, g))
}

/// Everything `vkh invariants` reports. Colorable diagrams default to the
/// source-sink builder and the rest to the general one.
pub fn invariants_report(
    d: &Diagram,
    choice: ColoringChoice,
    builder: Option<BuilderKind>,
) -> Result<InvariantsReport> {
    let connected = d.is_connected();
    let genus = if connected {
        Some(trace_faces(d)?.genus)
    } else {
        None
    };
    let colored = if connected {
        match colorable_part(d, choice) {
            Ok(x) => Some(x),
            Err(Error::NotColorable) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    let colorable = colored.is_some();
    let builder = builder.unwrap_or(if colorable {
        BuilderKind::SourceSink
    } else {
        BuilderKind::General
    });
    let kh = if connected {
        Some(khovanov(d, builder)?)
    } else {
        None
    };
    let rasmussen = if colorable && d.components().len() == 1 {
        Some(rasmussen(d)?.s)
    } else {
        None
    };
    let support = match (&colored, &kh) {
        (Some(((lo, hi), _, g)), Some(kh)) => {
            let (lo, hi) = ((*lo).min(*hi), (*lo).max(*hi));
            let lines = predicted_lines(hi, lo, *g as i64)?;
            let observed = diagonal_support(kh);
            Some(Support {
                verdict: observed.is_subset(&lines),
                lines,
                observed,
            })
        }
        _ => None,
    };
    Ok(InvariantsReport {
        code: d.to_code(),
        components: d.components().len(),
        crossings: d.n(),
        writhe: d.writhe(),
        connected,
        alternating: d.is_alternating(),
        genus,
        colorable,
        signatures: colored.as_ref().map(|x| x.0),
        builder,
        kh: kh.map(|p| p.to_string()),
        rasmussen,
        support,
        alt_code: colored.as_ref().map(|x| x.1.to_code()),
        alt_genus: colored.as_ref().map(|x| x.2),
    })
}

fn opt<T: fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "n/a".to_string(), T::to_string)
}

impl fmt::Display for InvariantsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let code = if self.code.is_empty() {
            "(unknot)"
        } else {
            &self.code
        };
        writeln!(f, "code: {code}")?;
        writeln!(
            f,
            "components: {}, crossings: {}, writhe: {}",
            self.components, self.crossings, self.writhe
        )?;
        writeln!(
            f,
            "connected: {}, alternating: {}",
            self.connected, self.alternating
        )?;
        writeln!(f, "genus: {}", opt(&self.genus))?;
        writeln!(f, "colorable: {}", self.colorable)?;
        if let Some((a, b)) = self.signatures {
            writeln!(f, "signatures (xi*, xi): ({a}, {b})")?;
        }
        writeln!(f, "kh: {}", opt(&self.kh))?;
        if let Some(s) = self.rasmussen {
            writeln!(f, "rasmussen: {s}")?;
        }
        if let Some(s) = &self.support {
            let lines: Vec<String> = s.lines.iter().map(i32::to_string).collect();
            writeln!(
                f,
                "support lines j-2i: {{{}}}, verdict: {}",
                lines.join(", "),
                s.verdict
            )?;
        }
        if let (Some(c), Some(g)) = (&self.alt_code, self.alt_genus) {
            writeln!(f, "alt: {c} (genus {g})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_gauss_code;

    #[test]
    fn left_trefoil() {
        let d = parse_gauss_code("O1-U2-O3-U1-O2-U3-").unwrap();
        let r = invariants_report(&d, ColoringChoice::Primal, None).unwrap();
        assert_eq!(r.signatures, Some((2, 2)));
        assert_eq!(r.rasmussen, Some(-2));
        assert_eq!(r.kh.as_deref(), Some("1/q^9t^3+1/q^5t^2+1/q^3+1/q"));
        assert!(r.support.unwrap().verdict);
    }

    #[test]
    fn unknot() {
        let r = invariants_report(&Diagram::unknot(), ColoringChoice::Primal, None).unwrap();
        assert_eq!(r.kh.as_deref(), Some("1/q+q"));
        assert_eq!(r.rasmussen, Some(0));
    }

    #[test]
    fn virtual_trefoil_uses_general_builder() {
        let d = parse_gauss_code("O1+O2+U1+U2+").unwrap();
        let r = invariants_report(&d, ColoringChoice::Primal, None).unwrap();
        assert!(!r.colorable);
        assert_eq!(r.signatures, None);
        assert_eq!(r.builder, BuilderKind::General);
        assert!(r.kh.is_some());
    }

    #[test]
    fn dual_swaps_the_pair() {
        let k = parse_gauss_code("O1-U2+O3+U1-O4-O5-U6-U3+O2+U4-U7+O8+U9+O6-U5-O7+U8+O9+").unwrap();
        let d = crate::transforms::alternatize_diagram(&k).unwrap();
        let p = invariants_report(&d, ColoringChoice::Primal, None).unwrap();
        let q = invariants_report(&d, ColoringChoice::Dual, None).unwrap();
        let (a, b) = p.signatures.unwrap();
        assert_ne!(a, b);
        assert_eq!(q.signatures, Some((b, a)));
    }
}
