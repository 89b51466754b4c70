//! Cube of resolutions, the bigraded Khovanov complex and its homology.

mod complex;
mod cube;
mod poly;

pub(crate) use complex::differential_matrix;
pub use complex::{generators, khovanov_homology, BigradedComplex, Generator};
pub use cube::{
    bar_natan_sign, build_cube, build_cube_general, build_cube_source_sink, BuilderKind, Cube,
    Edge, EdgeMap, MAX_CUBE_CROSSINGS,
};
pub use poly::{diagonal_support, graded_euler_characteristic, KhPolynomial, KhTerm, LaurentPoly};

use crate::diagram::Diagram;
use crate::error::Result;

/// Khovanov polynomial of a diagram with the chosen cube builder.
pub fn khovanov(d: &Diagram, kind: BuilderKind) -> Result<KhPolynomial> {
    khovanov_homology(&build_cube(d, kind)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_gauss_code;

    #[test]
    fn unknot() {
        let p = khovanov(&Diagram::unknot(), BuilderKind::General).unwrap();
        assert_eq!(p.to_string(), "1/q+q");
    }

    #[test]
    fn left_trefoil_both_builders() {
        let d = parse_gauss_code("O1-U2-O3-U1-O2-U3-").unwrap();
        let expected = "1/q^9t^3+1/q^5t^2+1/q^3+1/q";
        assert_eq!(
            khovanov(&d, BuilderKind::SourceSink).unwrap().to_string(),
            expected
        );
        assert_eq!(
            khovanov(&d, BuilderKind::General).unwrap().to_string(),
            expected
        );
    }

    #[test]
    fn figure_eight() {
        let d = parse_gauss_code("O1+U2-O3-U1+O4+U3-O2-U4+").unwrap();
        let p = khovanov(&d, BuilderKind::SourceSink).unwrap();
        assert_eq!(
            p,
            KhPolynomial::parse("1/q^5t^2+1/qt+1/q+q+qt+q^5t^2").unwrap()
        );
    }

    #[test]
    fn virtual_trefoil_general_builder() {
        let d = parse_gauss_code("O1+O2+U1+U2+").unwrap();
        let p = khovanov(&d, BuilderKind::General).unwrap();
        assert!(!p.is_zero());
    }
}
