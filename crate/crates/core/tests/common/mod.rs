#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vkh::{coloring, parse_gauss_code, Diagram};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Gauss code of the closure of a braid on `strands` strands. Each letter
/// is (i, positive) for the generator exchanging positions i and i + 1.
pub fn braid_closure(strands: usize, word: &[(usize, bool)]) -> String {
    let mut seen = vec![false; strands];
    let mut comps = Vec::new();
    for start in 0..strands {
        if seen[start] {
            continue;
        }
        let mut comp = String::new();
        let mut pos = start;
        loop {
            seen[pos] = true;
            for (m, &(i, positive)) in word.iter().enumerate() {
                let sign = if positive { '+' } else { '-' };
                if pos == i {
                    comp.push_str(&format!(
                        "{}{}{sign}",
                        if positive { 'O' } else { 'U' },
                        m + 1
                    ));
                    pos = i + 1;
                } else if pos == i + 1 {
                    comp.push_str(&format!(
                        "{}{}{sign}",
                        if positive { 'U' } else { 'O' },
                        m + 1
                    ));
                    pos = i;
                }
            }
            if pos == start {
                break;
            }
        }
        comps.push(comp);
    }
    comps.join(";")
}

/// A random connected closed braid with `n` crossings (so a classical,
/// colorable diagram).
pub fn random_braid(rng: &mut ChaCha8Rng, n: usize) -> Diagram {
    loop {
        let strands = rng.gen_range(2..=3.min(n + 1).max(2));
        let word: Vec<(usize, bool)> = (0..n)
            .map(|_| (rng.gen_range(0..strands - 1), rng.gen_bool(0.5)))
            .collect();
        if (0..strands - 1).all(|i| word.iter().any(|w| w.0 == i)) {
            return parse_gauss_code(&braid_closure(strands, &word)).unwrap();
        }
    }
}

/// A random one-component Gauss word with `n` crossings.
pub fn random_word(rng: &mut ChaCha8Rng, n: usize) -> Diagram {
    let mut tokens: Vec<(usize, bool)> = (0..n).flat_map(|c| [(c, true), (c, false)]).collect();
    tokens.shuffle(rng);
    let signs: Vec<char> = (0..n)
        .map(|_| if rng.gen_bool(0.5) { '+' } else { '-' })
        .collect();
    let code: String = tokens
        .iter()
        .map(|&(c, over)| format!("{}{}{}", if over { 'O' } else { 'U' }, c + 1, signs[c]))
        .collect();
    parse_gauss_code(&code).unwrap()
}

/// A random checkerboard-colorable one-component diagram, usually virtual.
pub fn random_colorable(rng: &mut ChaCha8Rng, n: usize) -> Diagram {
    loop {
        let d = random_word(rng, n);
        if coloring::coloring_of(&d).is_ok() {
            return d;
        }
    }
}
