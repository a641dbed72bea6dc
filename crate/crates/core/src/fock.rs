//! Two-mode Fock states `|n₁, n₂⟩` and operators built from ladder words.
//!
//! A fixed-`N` block uses the basis `|n, N-n⟩` with `n = N, N-1, …, 0`, so
//! index `i = N - n` coincides with the spin index `s - m`, `m = n - N/2`.

use crate::{CMatrix, Complex64};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Alpha,
    Beta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ladder {
    Create(Mode),
    Annihilate(Mode),
}

/// Product of ladder operators; the last entry acts first.
pub type Word = Vec<Ladder>;

/// Linear combination of words.
pub type Terms = Vec<(Complex64, Word)>;

/// `α†α`, `β†β`, `α†β`, `αβ†` and friends.
pub fn word(spec: &str) -> Word {
    // tokens: "a+", "a", "b+", "b"
    spec.split_whitespace()
        .map(|tok| match tok {
            "a+" => Ladder::Create(Mode::Alpha),
            "a" => Ladder::Annihilate(Mode::Alpha),
            "b+" => Ladder::Create(Mode::Beta),
            "b" => Ladder::Annihilate(Mode::Beta),
            other => panic!("bad ladder token {other:?}"),
        })
        .collect()
}

/// Applies a word to `|n₁, n₂⟩`; `None` when the result vanishes.
pub fn apply(word: &[Ladder], state: (u32, u32)) -> Option<(f64, (u32, u32))> {
    let (mut n1, mut n2) = state;
    let mut coeff = 1.0f64;
    for op in word.iter().rev() {
        let slot = match op {
            Ladder::Create(Mode::Alpha) | Ladder::Annihilate(Mode::Alpha) => &mut n1,
            _ => &mut n2,
        };
        match op {
            Ladder::Create(_) => {
                *slot += 1;
                coeff *= (*slot as f64).sqrt();
            }
            Ladder::Annihilate(_) => {
                if *slot == 0 {
                    return None;
                }
                coeff *= (*slot as f64).sqrt();
                *slot -= 1;
            }
        }
    }
    Some((coeff, (n1, n2)))
}

/// Excitation-number change of a word.
pub fn number_shift(word: &[Ladder]) -> i64 {
    word.iter()
        .map(|op| match op {
            Ladder::Create(_) => 1,
            Ladder::Annihilate(_) => -1,
        })
        .sum()
}

/// Matrix of a number-conserving combination on the `N` block.
///
/// Words that change the excitation number have no block and are rejected.
pub fn block_matrix(n_total: u32, terms: &Terms) -> CMatrix {
    let dim = n_total as usize + 1;
    let mut m = CMatrix::zeros(dim, dim);
    for (c, w) in terms {
        assert_eq!(number_shift(w), 0, "word does not conserve N");
        for col in 0..dim {
            let n = n_total - col as u32;
            if let Some((amp, (n1, _))) = apply(w, (n, n_total - n)) {
                let row = (n_total - n1) as usize;
                m[(row, col)] += c * amp;
            }
        }
    }
    m
}

/// Truncated lattice `0 <= n₁, n₂ <= cutoff`, indexed `n₁ (cutoff+1) + n₂`.
pub fn lattice_matrix(cutoff: u32, terms: &Terms) -> CMatrix {
    let side = cutoff as usize + 1;
    let mut m = CMatrix::zeros(side * side, side * side);
    for (c, w) in terms {
        for n1 in 0..=cutoff {
            for n2 in 0..=cutoff {
                if let Some((amp, (m1, m2))) = apply(w, (n1, n2)) {
                    if m1 <= cutoff && m2 <= cutoff {
                        let row = m1 as usize * side + m2 as usize;
                        let col = n1 as usize * side + n2 as usize;
                        m[(row, col)] += c * amp;
                    }
                }
            }
        }
    }
    m
}
