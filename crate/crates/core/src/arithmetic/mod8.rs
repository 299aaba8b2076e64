use std::collections::BTreeSet;

use serde::Serialize;

/// Stage counts of the mod-8 search for bend vectors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiltrationReport {
    /// Five-vectors mod 8 on which the Descartes form vanishes mod 8.
    pub solutions: usize,
    /// Distinct eight-tuples `(b₁,…,b₄, 2b_μ−b₁,…,2b_μ−b₄)` mod 8.
    pub eight_tuples: usize,
    /// Eight-tuples with at least one odd entry.
    pub with_odd_entry: usize,
    /// Those with `b_k ≤ b_{k+4}` for every pair.
    pub pair_ordered: usize,
    /// Those additionally with `b₁ ≤ b₂ ≤ b₃ ≤ b₄`.
    pub representatives: Vec<[u8; 8]>,
    /// Representatives reduced mod 4 and put in the same normal form.
    pub mod4_classes: Vec<[u8; 8]>,
}

fn form_mod8(b: [u8; 5]) -> u32 {
    let [b1, b2, b3, b4, m] = b.map(u32::from);
    let sum = b1 + b2 + b3 + b4;
    let squares = b1 * b1 + b2 * b2 + b3 * b3 + b4 * b4;
    (2 * m * m + squares + 8 - (2 * m * sum) % 8) % 8
}

/// Normal form of an eight-tuple: order within each complementary pair, then order the pairs.
fn pair_normal_form(t: [u8; 8]) -> [u8; 8] {
    let mut pairs: Vec<(u8, u8)> = (0..4)
        .map(|k| (t[k].min(t[k + 4]), t[k].max(t[k + 4])))
        .collect();
    pairs.sort();
    std::array::from_fn(|i| if i < 4 { pairs[i].0 } else { pairs[i - 4].1 })
}

pub fn enumerate_mod8() -> FiltrationReport {
    let mut solutions = 0;
    let mut tuples = BTreeSet::new();
    for code in 0..8u32.pow(5) {
        let b: [u8; 5] = std::array::from_fn(|i| ((code >> (3 * (4 - i))) & 7) as u8);
        if form_mod8(b) != 0 {
            continue;
        }
        solutions += 1;
        let m = b[4];
        let t: [u8; 8] = std::array::from_fn(|i| {
            if i < 4 {
                b[i]
            } else {
                (2 * m + 8 - b[i - 4]) % 8
            }
        });
        tuples.insert(t);
    }
    let odd: Vec<[u8; 8]> = tuples
        .iter()
        .copied()
        .filter(|t| t.iter().any(|x| x % 2 == 1))
        .collect();
    let pair_ordered: Vec<[u8; 8]> = odd
        .iter()
        .copied()
        .filter(|t| (0..4).all(|k| t[k] <= t[k + 4]))
        .collect();
    let representatives: Vec<[u8; 8]> = pair_ordered
        .iter()
        .copied()
        .filter(|t| (0..3).all(|k| t[k] <= t[k + 1]))
        .collect();
    let mod4_classes: BTreeSet<[u8; 8]> = representatives
        .iter()
        .map(|t| pair_normal_form(t.map(|x| x % 4)))
        .collect();
    FiltrationReport {
        solutions,
        eight_tuples: tuples.len(),
        with_odd_entry: odd.len(),
        pair_ordered: pair_ordered.len(),
        representatives,
        mod4_classes: mod4_classes.into_iter().collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn form_matches_integer_evaluation() {
        for code in (0..8u32.pow(5)).step_by(37) {
            let b: [u8; 5] = std::array::from_fn(|i| ((code >> (3 * (4 - i))) & 7) as u8);
            let [b1, b2, b3, b4, m] = b.map(i64::from);
            let f = 2 * m * m - 2 * m * (b1 + b2 + b3 + b4) + b1 * b1 + b2 * b2 + b3 * b3 + b4 * b4;
            assert_eq!(i64::from(form_mod8(b)), f.rem_euclid(8));
        }
    }

    #[test]
    fn normal_form() {
        assert_eq!(
            pair_normal_form([2, 2, 3, 3, 0, 0, 3, 3]),
            [0, 0, 3, 3, 2, 2, 3, 3]
        );
    }
}
