//! Bend arithmetic: the mod-4 obstruction, the mod-8 search, the spin pipeline and the
//! quaternary forms behind the local-global principle.

mod mod8;
mod obstruction;
mod qform;
pub mod spin;

pub use mod8::{enumerate_mod8, FiltrationReport};
pub use obstruction::{epsilon_of, epsilon_of_i64, ObstructionClass};
pub use qform::{
    bend_from_eta, discriminant, is_isotropic_at, is_isotropic_exhaustive, is_positive_definite,
    is_positive_semidefinite, is_prime, local_classes, local_classes_unrestricted, primes_below,
    qform_from_bend_vector, Isotropy, QuaternaryForm,
};
pub use spin::{
    bend_from_xi, bend_via_matrix, complete_unimodular, conjugate_by_j, in_level2_subgroup, spin,
    MobiusPair,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithmeticError {
    #[error("bends reduce to {0:?} mod 4, which matches no obstruction class (not a primitive configuration)")]
    NoValidEpsilon([u8; 8]),
    #[error("matrix {0} is not unimodular")]
    NotUnimodular(String),
    #[error("matrix {0} is not in the oriented sphere stabilizer")]
    NotInStabilizer(String),
    #[error("bend vector {0} has an odd sum of the first four entries")]
    OddBendSum(String),
    #[error("{0} is not a bend vector (Descartes form is nonzero)")]
    NotABendVector(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("alpha = {0}, beta = {1} violate alpha = 1 or i and beta = 0 (mod 2)")]
    Congruence(String, String),
    #[error("alpha = {0} and beta = {1} are not coprime")]
    NotCoprime(String, String),
}
