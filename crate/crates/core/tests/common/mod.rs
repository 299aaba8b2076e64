#![allow(dead_code)]

use orthoplex::config::{self, FMatrix};
use orthoplex::groups::{generators, GroupElement, TableName};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn seeds() -> Vec<(&'static str, FMatrix)> {
    config::BUILTIN_NAMES
        .iter()
        .map(|&n| (n, config::builtin(n).unwrap()))
        .collect()
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A reduced random word in the Apollonian generators (no letter twice in a row).
pub fn random_apollonian_word(rng: &mut impl Rng, len: usize) -> GroupElement {
    let labels: Vec<&str> = generators(TableName::Apollonian).labels().collect();
    let mut word: Vec<&str> = Vec::with_capacity(len);
    while word.len() < len {
        let l = labels[rng.gen_range(0..labels.len())];
        if word.last() != Some(&l) {
            word.push(l);
        }
    }
    GroupElement::from_word(TableName::Apollonian, &word).unwrap()
}

/// The 24 mod-8 bend-vector representatives, as frozen from a brute-force enumeration.
pub const MOD8_REPRESENTATIVES: [[u8; 8]; 24] = [
    [0, 0, 1, 1, 2, 2, 1, 1],
    [0, 0, 1, 1, 6, 6, 5, 5],
    [0, 0, 1, 5, 2, 2, 1, 5],
    [0, 0, 3, 3, 2, 2, 7, 7],
    [0, 0, 3, 3, 6, 6, 3, 3],
    [0, 0, 3, 7, 6, 6, 3, 7],
    [0, 0, 5, 5, 2, 2, 5, 5],
    [0, 0, 7, 7, 6, 6, 7, 7],
    [0, 1, 1, 2, 6, 5, 5, 4],
    [0, 1, 1, 4, 2, 1, 1, 6],
    [0, 1, 4, 5, 2, 1, 6, 5],
    [0, 2, 3, 3, 6, 4, 3, 3],
    [0, 2, 3, 7, 6, 4, 3, 7],
    [0, 2, 7, 7, 6, 4, 7, 7],
    [0, 3, 3, 4, 2, 7, 7, 6],
    [0, 4, 5, 5, 2, 6, 5, 5],
    [1, 1, 2, 2, 5, 5, 4, 4],
    [1, 1, 4, 4, 1, 1, 6, 6],
    [1, 4, 4, 5, 1, 6, 6, 5],
    [2, 2, 3, 3, 4, 4, 3, 3],
    [2, 2, 3, 7, 4, 4, 3, 7],
    [2, 2, 7, 7, 4, 4, 7, 7],
    [3, 3, 4, 4, 7, 7, 6, 6],
    [4, 4, 5, 5, 6, 6, 5, 5],
];
