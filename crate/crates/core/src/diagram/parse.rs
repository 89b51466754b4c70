use super::{Strand, Token};
use crate::error::{Error, Result};

/// Splits Gauss-code text into per-component token lists.
///
/// Grammar: `code := component (";" component)*`,
/// `component := token* | "()"`, `token := ("O"|"U") digits ("+"|"-")`.
/// Whitespace is ignored everywhere.
pub(super) fn tokenize(text: &str) -> Result<Vec<Vec<Token>>> {
    let chars: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut components = vec![Vec::new()];
    let mut explicit_empty = false;
    let mut i = 0;
    let malformed = |pos: usize, msg: &str| Error::MalformedToken {
        pos,
        msg: msg.to_string(),
    };
    while i < chars.len() {
        let (pos, c) = chars[i];
        match c {
            ';' => {
                components.push(Vec::new());
                explicit_empty = false;
                i += 1;
            }
            '(' => {
                let cur = components.last().expect("nonempty");
                if !cur.is_empty() || explicit_empty {
                    return Err(malformed(pos, "'()' must stand alone in its component"));
                }
                match chars.get(i + 1) {
                    Some((_, ')')) => {}
                    _ => return Err(malformed(pos, "expected ')'")),
                }
                explicit_empty = true;
                i += 2;
            }
            'O' | 'U' => {
                if explicit_empty {
                    return Err(malformed(pos, "'()' must stand alone in its component"));
                }
                let strand = if c == 'O' {
                    Strand::Over
                } else {
                    Strand::Under
                };
                i += 1;
                let mut label: u64 = 0;
                let mut digits = 0;
                while let Some(&(_, d)) = chars.get(i) {
                    match d.to_digit(10) {
                        Some(v) => {
                            label = label * 10 + v as u64;
                            if label > u32::MAX as u64 {
                                return Err(malformed(pos, "crossing label too large"));
                            }
                            digits += 1;
                            i += 1;
                        }
                        None => break,
                    }
                }
                if digits == 0 {
                    return Err(malformed(pos, "expected crossing label digits"));
                }
                let sign = match chars.get(i) {
                    Some((_, '+')) => 1,
                    Some((_, '-')) => -1,
                    _ => return Err(malformed(pos, "expected '+' or '-' after label")),
                };
                i += 1;
                components.last_mut().expect("nonempty").push(Token {
                    label: label as u32,
                    strand,
                    sign,
                });
            }
            other => return Err(malformed(pos, &format!("unexpected character '{other}'"))),
        }
    }
    Ok(components)
}
