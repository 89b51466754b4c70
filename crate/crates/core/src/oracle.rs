//! State-sum Jones polynomial, independent of the chain complex.

use crate::diagram::{resolve_state, Diagram, State};
use crate::error::{Error, Result};
use crate::khovanov::LaurentPoly;

/// Largest crossing count accepted by the O(2^n) state sum.
pub const MAX_ORACLE_CROSSINGS: usize = 24;

/// Unnormalized Jones polynomial
/// (-1)^{n₋} q^{n₊ - 2n₋} Σ_α (-q)^{r_α} (q + q⁻¹)^{k_α}.
pub fn bracket_oracle(d: &Diagram) -> Result<LaurentPoly> {
    let n = d.n();
    if n > MAX_ORACLE_CROSSINGS {
        return Err(Error::TooLarge {
            crossings: n,
            limit: MAX_ORACLE_CROSSINGS,
        });
    }
    let circle = LaurentPoly::from_terms([(1, 1), (-1, 1)]);
    let max_k = 2 * n + d.components().len() + 1;
    let mut circle_powers = vec![LaurentPoly::from_terms([(0, 1)])];
    for k in 1..=max_k {
        circle_powers.push(circle_powers[k - 1].mul(&circle));
    }
    let mut sum = LaurentPoly::default();
    for bits in 0..1u64 << n {
        let s = State::from_bits(bits, n);
        let k = resolve_state(d, s)?.circle_count();
        let r = s.weight() as i32;
        let sign = if r % 2 == 0 { 1 } else { -1 };
        for (p, c) in circle_powers[k].terms() {
            sum.add_term(p + r, sign * c);
        }
    }
    let (np, nm) = (d.n_plus() as i32, d.n_minus() as i32);
    let sign = if nm % 2 == 0 { 1 } else { -1 };
    Ok(LaurentPoly::from_terms(
        sum.terms().map(|(p, c)| (p + np - 2 * nm, sign * c)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_gauss_code;

    #[test]
    fn left_trefoil() {
        let d = parse_gauss_code("O1-U2-O3-U1-O2-U3-").unwrap();
        assert_eq!(
            bracket_oracle(&d).unwrap(),
            LaurentPoly::from_terms([(-9, -1), (-5, 1), (-3, 1), (-1, 1)])
        );
    }

    #[test]
    fn unknot() {
        assert_eq!(
            bracket_oracle(&Diagram::unknot()).unwrap().to_string(),
            "q^-1+q"
        );
    }

    #[test]
    fn kinks_are_trivial() {
        for code in ["O1+U1+", "O1-U1-", "U1+O1+"] {
            let d = parse_gauss_code(code).unwrap();
            assert_eq!(bracket_oracle(&d).unwrap().to_string(), "q^-1+q", "{code}");
        }
    }
}
