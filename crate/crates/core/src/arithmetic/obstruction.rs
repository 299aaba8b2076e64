use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use super::ArithmeticError;

/// The residue class mod 4 that no bend of a primitive integral packing can occupy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ObstructionClass {
    pub epsilon: i8,
    pub forbidden_residue: u8,
}

impl ObstructionClass {
    pub fn from_epsilon(epsilon: i8) -> Self {
        assert!(epsilon == 1 || epsilon == -1, "epsilon must be ±1");
        Self {
            epsilon,
            forbidden_residue: (4 - epsilon as i32).rem_euclid(4) as u8,
        }
    }

    /// Whether `n` avoids the forbidden residue.
    pub fn admits(&self, n: &BigInt) -> bool {
        mod4(n) != self.forbidden_residue
    }

    pub fn admits_i64(&self, n: i64) -> bool {
        n.rem_euclid(4) as u8 != self.forbidden_residue
    }
}

fn mod4(n: &BigInt) -> u8 {
    let r: BigInt = n.mod_floor(&BigInt::from(4));
    u8::try_from(&r).expect("residue in 0..4")
}

/// Finds ε from the eight bends `(b₁,…,b₄, b₅,…,b₈)` where `b_{k+4}` is the complement of `b_k`.
///
/// Mod 4 the complementary pairs must be two copies of `{0, 2}` and two copies of `(ε, ε)`.
pub fn epsilon_of(bends8: &[BigInt; 8]) -> Result<ObstructionClass, ArithmeticError> {
    let r: [u8; 8] = std::array::from_fn(|i| mod4(&bends8[i]));
    let mut even_pairs = 0;
    let mut odd_residue = None;
    for k in 0..4 {
        match (r[k], r[k + 4]) {
            (0, 2) | (2, 0) => even_pairs += 1,
            (x, y) if x == y && x % 2 == 1 => match odd_residue {
                None => odd_residue = Some(x),
                Some(prev) if prev == x => {}
                Some(_) => return Err(ArithmeticError::NoValidEpsilon(r)),
            },
            _ => return Err(ArithmeticError::NoValidEpsilon(r)),
        }
    }
    match (even_pairs, odd_residue) {
        (2, Some(1)) => Ok(ObstructionClass::from_epsilon(1)),
        (2, Some(3)) => Ok(ObstructionClass::from_epsilon(-1)),
        _ => Err(ArithmeticError::NoValidEpsilon(r)),
    }
}

pub fn epsilon_of_i64(bends8: [i64; 8]) -> Result<ObstructionClass, ArithmeticError> {
    epsilon_of(&bends8.map(BigInt::from))
}
