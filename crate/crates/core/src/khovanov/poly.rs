use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Laurent polynomial in q with integer coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn add_term(&mut self, power: i32, c: i64) {
        let e = self.coeffs.entry(power).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&power);
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        let mut p = LaurentPoly::default();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    pub fn coeff(&self, power: i32) -> i64 {
        self.coeffs.get(&power).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs.iter().map(|(&k, &c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut p = LaurentPoly::default();
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                p.add_term(a + b, x * y);
            }
        }
        p
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (n, (k, c)) in self.terms().enumerate() {
            let sign = if c < 0 {
                "-"
            } else if n > 0 {
                "+"
            } else {
                ""
            };
            let a = c.abs();
            let coef = if a == 1 && k != 0 {
                String::new()
            } else {
                a.to_string()
            };
            let var = match k {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{k}"),
            };
            write!(f, "{sign}{coef}{var}")?;
        }
        Ok(())
    }
}

/// Poincaré polynomial of Khovanov homology: dim Kh^{i,j} at t^i q^j.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct KhPolynomial {
    terms: BTreeMap<(i32, i32), usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct KhTerm {
    pub i: i32,
    pub j: i32,
    pub dim: usize,
}

#[derive(Serialize, Deserialize)]
struct KhJson {
    terms: Vec<KhTerm>,
}

impl KhPolynomial {
    pub fn add(&mut self, i: i32, j: i32, dim: usize) {
        if dim == 0 {
            return;
        }
        *self.terms.entry((i, j)).or_insert(0) += dim;
    }

    pub fn get(&self, i: i32, j: i32) -> usize {
        self.terms.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Terms in ascending (i, j) order.
    pub fn terms(&self) -> impl Iterator<Item = KhTerm> + '_ {
        self.terms
            .iter()
            .map(|(&(i, j), &dim)| KhTerm { i, j, dim })
    }

    pub fn total_dim(&self) -> usize {
        self.terms.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// dim Kh^{i,j} ↦ dim Kh^{-i,-j}.
    pub fn mirrored(&self) -> KhPolynomial {
        KhPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), &d)| ((-i, -j), d))
                .collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(KhJson {
            terms: self.terms().collect(),
        })
        .expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let parsed: KhJson = serde_json::from_value(v.clone())
            .map_err(|e| Error::PolynomialSyntax(e.to_string()))?;
        let mut p = KhPolynomial::default();
        for t in parsed.terms {
            p.add(t.i, t.j, t.dim);
        }
        Ok(p)
    }

    /// Parses the fraction notation, e.g. `1/q^9t^3+1/q^5t^2+1/q^3+1/q`.
    /// Spaces and TeX braces are ignored; `q^{-3}` style exponents are
    /// accepted too.
    pub fn parse(text: &str) -> Result<Self> {
        let s: String = text
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '{' && *c != '}' && *c != '$')
            .collect();
        let mut p = KhPolynomial::default();
        if s.is_empty() || s == "0" {
            return Ok(p);
        }
        for term in s.split('+') {
            if term.is_empty() {
                return Err(Error::PolynomialSyntax(format!("empty term in '{text}'")));
            }
            let (num, den) = match term.split_once('/') {
                Some((a, b)) => (a, Some(b)),
                None => (term, None),
            };
            let (coef, qn, tn) = parse_monomial(num, true)?;
            let (i, j) = match den {
                Some(den) => {
                    let (dc, qd, td) = parse_monomial(den, false)?;
                    if dc != 1 {
                        return Err(Error::PolynomialSyntax(format!(
                            "coefficient in denominator of '{term}'"
                        )));
                    }
                    (tn - td, qn - qd)
                }
                None => (tn, qn),
            };
            if coef < 0 {
                return Err(Error::PolynomialSyntax(format!("negative term '{term}'")));
            }
            p.add(i, j, coef as usize);
        }
        Ok(p)
    }
}

/// Parses `[coef](q[^e])?(t[^e])?` in either variable order; returns the
/// coefficient and the q and t exponents.
fn parse_monomial(s: &str, allow_coef: bool) -> Result<(i64, i32, i32)> {
    let err = || Error::PolynomialSyntax(format!("cannot parse monomial '{s}'"));
    let bytes: Vec<char> = s.chars().collect();
    let mut pos = 0;
    let digits_end = bytes
        .iter()
        .position(|c| !c.is_ascii_digit())
        .unwrap_or(bytes.len());
    let coef = if digits_end > 0 {
        if !allow_coef {
            let v: i64 = s[..digits_end].parse().map_err(|_| err())?;
            if v != 1 {
                return Err(err());
            }
        }
        pos = digits_end;
        s[..digits_end].parse::<i64>().map_err(|_| err())?
    } else {
        1
    };
    let (mut q, mut t) = (0i32, 0i32);
    let (mut seen_q, mut seen_t) = (false, false);
    while pos < bytes.len() {
        let var = bytes[pos];
        pos += 1;
        let mut exp = 1i32;
        if bytes.get(pos) == Some(&'^') {
            pos += 1;
            let start = pos;
            if bytes.get(pos) == Some(&'-') {
                pos += 1;
            }
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let e: String = bytes[start..pos].iter().collect();
            exp = e.parse().map_err(|_| err())?;
        }
        match var {
            'q' if !seen_q => {
                q = exp;
                seen_q = true;
            }
            't' if !seen_t => {
                t = exp;
                seen_t = true;
            }
            _ => return Err(err()),
        }
    }
    if digits_end == 0 && !seen_q && !seen_t {
        return Err(err());
    }
    Ok((coef, q, t))
}

fn power(var: char, e: i32) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

impl fmt::Display for KhPolynomial {
    /// Fraction notation: positive powers q then t, negative ones after `/`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for t in self.terms() {
            if !first {
                f.write_str("+")?;
            }
            first = false;
            let num = format!("{}{}", power('q', t.j.max(0)), power('t', t.i.max(0)));
            let den = format!("{}{}", power('q', (-t.j).max(0)), power('t', (-t.i).max(0)));
            let coef = if t.dim == 1 && !num.is_empty() {
                String::new()
            } else {
                t.dim.to_string()
            };
            write!(f, "{coef}{num}")?;
            if !den.is_empty() {
                write!(f, "/{den}")?;
            }
        }
        Ok(())
    }
}

/// Σ (-1)^i q^j dim Kh^{i,j}.
pub fn graded_euler_characteristic(p: &KhPolynomial) -> LaurentPoly {
    LaurentPoly::from_terms(p.terms().map(|t| {
        let s = if t.i.rem_euclid(2) == 0 { 1 } else { -1 };
        (t.j, s * t.dim as i64)
    }))
}

/// Intercepts j - 2i of the diagonals carrying homology.
pub fn diagonal_support(p: &KhPolynomial) -> BTreeSet<i32> {
    p.terms().map(|t| t.j - 2 * t.i).collect()
}
