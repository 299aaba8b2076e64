//! Apollonian moves written directly on configurations.
//!
//! The generator `S_F` keeps the four spheres labelled by `F` and reflects the other four
//! through them: with kept spheres `w₁..w₄` and antipodal vector `μ`, the new antipodal vector
//! is `μ' = w₁+w₂+w₃+w₄ − μ` and the new spheres are `2μ' − w_k`. Bit `k` of a move mask set
//! means position `k+1` keeps its complement `2μ − v_{k+1}` rather than `v_{k+1}`.

use num_bigint::BigInt;

use crate::groups::{GroupElement, TableName};
use crate::packing::PackingError;

pub const MOVES: [u8; 16] = [0, 1, 2, 4, 8, 3, 5, 9, 6, 10, 12, 7, 11, 13, 14, 15];

/// The generator label of a move mask, e.g. `0b0101 → "S5274"`.
pub fn move_label(mask: u8) -> String {
    let digits: String = (0..4)
        .map(|k| char::from(b'1' + k + if mask & (1 << k) != 0 { 4 } else { 0 }))
        .collect();
    format!("S{digits}")
}

fn flipped(mask: u8, k: usize) -> bool {
    mask & (1 << k) != 0
}

/// Child bend vector and its four new bends, in checked `i64`.
pub fn child_bends(v: &[i64; 5], mask: u8) -> Result<([i64; 5], [i64; 4]), PackingError> {
    let overflow = || PackingError::Overflow;
    let m = v[4];
    let two_m = m.checked_mul(2).ok_or_else(overflow)?;
    let mut kept = [0i64; 4];
    for k in 0..4 {
        kept[k] = if flipped(mask, k) {
            two_m.checked_sub(v[k]).ok_or_else(overflow)?
        } else {
            v[k]
        };
    }
    let sum = kept
        .iter()
        .try_fold(0i64, |acc, &x| acc.checked_add(x))
        .ok_or_else(overflow)?;
    let m2 = sum.checked_sub(m).ok_or_else(overflow)?;
    let two_m2 = m2.checked_mul(2).ok_or_else(overflow)?;
    let mut new = [0i64; 4];
    let mut child = [0i64; 5];
    for k in 0..4 {
        new[k] = two_m2.checked_sub(kept[k]).ok_or_else(overflow)?;
        child[k] = if flipped(mask, k) { new[k] } else { kept[k] };
    }
    child[4] = m2;
    Ok((child, new))
}

/// Arbitrary-precision version of [`child_bends`].
pub fn child_bends_big(v: &[BigInt; 5], mask: u8) -> ([BigInt; 5], [BigInt; 4]) {
    let m = &v[4];
    let kept: [BigInt; 4] = std::array::from_fn(|k| {
        if flipped(mask, k) {
            m * 2 - &v[k]
        } else {
            v[k].clone()
        }
    });
    let m2: BigInt = kept.iter().sum::<BigInt>() - m;
    let new: [BigInt; 4] = std::array::from_fn(|k| &m2 * 2 - &kept[k]);
    let child: [BigInt; 5] = std::array::from_fn(|k| {
        if k == 4 {
            m2.clone()
        } else if flipped(mask, k) {
            new[k].clone()
        } else {
            kept[k].clone()
        }
    });
    (child, new)
}

/// Canonical representative under admissible reorderings: each position holds the smaller
/// sphere of its complementary pair, and positions are sorted.
pub fn canonical(v: &[i64; 5]) -> [i64; 5] {
    let m = v[4];
    let mut rows: [i64; 4] = std::array::from_fn(|k| v[k].min(2 * m - v[k]));
    rows.sort_unstable();
    [rows[0], rows[1], rows[2], rows[3], m]
}

fn flip_word(k: usize) -> Vec<String> {
    // R4 reflects position 4; conjugating by R_k⋯R_3 moves it to position k.
    let down: Vec<String> = (k..4).map(|i| format!("R{i}")).collect();
    let mut w = down.clone();
    w.push("R4".into());
    w.extend(down.into_iter().rev());
    w
}

/// [`canonical`] for arbitrary-precision bend vectors, returning the Platonic element `g`
/// with `g·v` equal to the canonical form.
pub fn canonical_with_word(v: &[BigInt; 5]) -> ([BigInt; 5], GroupElement) {
    let mut cur = v.clone();
    let mut ops: Vec<Vec<String>> = Vec::new();
    for k in 0..4 {
        let comp = &cur[4] * 2 - &cur[k];
        if comp < cur[k] {
            cur[k] = comp;
            ops.push(flip_word(k + 1));
        }
    }
    for end in (1..4).rev() {
        for i in 0..end {
            if cur[i] > cur[i + 1] {
                cur.swap(i, i + 1);
                ops.push(vec![format!("R{}", i + 1)]);
            }
        }
    }
    let word: Vec<String> = ops.into_iter().rev().flatten().collect();
    let g = GroupElement::from_word(TableName::Platonic, &word).expect("Platonic labels");
    (cur, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{bend_vector, f1, f7d};
    use crate::groups::generators;

    #[test]
    fn labels_cover_the_table() {
        let table = generators(TableName::Apollonian);
        let labels: Vec<String> = MOVES.iter().map(|&m| move_label(m)).collect();
        let expected: Vec<&str> = table.labels().collect();
        assert_eq!(labels, expected);
    }

    #[test]
    fn moves_match_matrix_action() {
        for f in [f1(), f7d()] {
            let bv = bend_vector(&f).to_integral().unwrap();
            let v: [i64; 5] = bv.entries().clone().map(|x| i64::try_from(x).unwrap());
            for &mask in &MOVES {
                let g = GroupElement::generator(TableName::Apollonian, &move_label(mask)).unwrap();
                let expect = g.matrix().mul_vec(bv.entries());
                let (child, _) = child_bends(&v, mask).unwrap();
                assert_eq!(
                    child.map(BigInt::from).to_vec(),
                    expect,
                    "{}",
                    move_label(mask)
                );
            }
        }
    }

    #[test]
    fn overflow_is_reported() {
        assert!(matches!(
            child_bends(&[i64::MAX, 0, 0, 0, 1], 1),
            Err(PackingError::Overflow)
        ));
    }

    #[test]
    fn canonical_word_reproduces_canonical_form() {
        let v = [20, 12, 17, -7, 21].map(BigInt::from);
        let (c, g) = canonical_with_word(&v);
        assert_eq!(g.matrix().mul_vec(&v), c.to_vec());
        assert_eq!(c, canonical(&[20, 12, 17, -7, 21]).map(BigInt::from));
        assert!(g.provenance_holds());
    }
}
