use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::ArithmeticError;
use crate::config::{descartes_form, BendVector};
use crate::IntMat;

/// The quaternary form attached to the first sphere of a bend vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuaternaryForm {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
    pub shift_b: BigInt,
}

impl fmt::Display for QuaternaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(A, B, C, D) = ({}, {}, {}, {}), b = {}",
            self.a, self.b, self.c, self.d, self.shift_b
        )
    }
}

pub fn qform_from_bend_vector(bv: &BendVector<BigInt>) -> Result<QuaternaryForm, ArithmeticError> {
    let [b, b2, b3, b4, bmu] = bv.entries();
    if (b + b2 + b3 + b4).is_odd() {
        return Err(ArithmeticError::OddBendSum(bv.to_string()));
    }
    if !descartes_form(bv.entries()).is_zero() {
        return Err(ArithmeticError::NotABendVector(bv.to_string()));
    }
    let two = BigInt::from(2);
    Ok(QuaternaryForm {
        a: b + b2,
        b: -(b + b2 + b3 + b4 - &two * bmu) / &two,
        c: -(b + b2 + b3 - b4) / &two,
        d: b + b3,
        shift_b: b.clone(),
    })
}

impl QuaternaryForm {
    pub fn matrix(&self) -> IntMat {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let z = BigInt::zero;
        IntMat::from_rows(&[
            vec![a.clone(), z(), b.clone(), -c.clone()],
            vec![z(), a.clone(), c.clone(), b.clone()],
            vec![b.clone(), c.clone(), d.clone(), z()],
            vec![-c.clone(), b.clone(), z(), d.clone()],
        ])
    }

    pub fn eval(&self, eta: &[BigInt; 4]) -> BigInt {
        let qe = self.matrix().mul_vec(eta);
        eta.iter().zip(&qe).map(|(x, y)| x * y).sum()
    }

    pub fn eval_i64(&self, eta: [i64; 4]) -> BigInt {
        self.eval(&eta.map(BigInt::from))
    }

    /// `B² + C² − A·D`, which equals `−b²` for a genuine bend vector.
    pub fn binary_discriminant(&self) -> BigInt {
        &self.b * &self.b + &self.c * &self.c - &self.a * &self.d
    }

    pub fn eigen_witnesses(&self) -> [[BigInt; 4]; 2] {
        let z = BigInt::zero;
        [
            [self.c.clone(), -self.b.clone(), z(), self.a.clone()],
            [-self.b.clone(), -self.c.clone(), self.a.clone(), z()],
        ]
    }
}

/// `2⁴·det Q_b`.
pub fn discriminant(q: &QuaternaryForm) -> BigInt {
    BigInt::from(16) * q.matrix().det_expansion().expect("square")
}

pub fn is_positive_definite(q: &QuaternaryForm) -> bool {
    let m = q.matrix();
    (1..=4).all(|k| m.principal_minor(&(0..k).collect::<Vec<_>>()).is_positive())
}

pub fn is_positive_semidefinite(q: &QuaternaryForm) -> bool {
    let m = q.matrix();
    (1u32..16).all(|mask| {
        let idx: Vec<usize> = (0..4).filter(|i| mask & (1 << i) != 0).collect();
        !m.principal_minor(&idx).is_negative()
    })
}

pub fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Isotropy {
    pub prime: u64,
    pub isotropic: bool,
    /// Nonzero `w` mod `p` with `Q_b(w) ≡ 0 (mod p)`.
    pub witness: Option<[u64; 4]>,
}

/// Form coefficients reduced mod `p`, evaluated in `u64`.
struct ModForm {
    p: u64,
    m: [[u64; 4]; 4],
}

impl ModForm {
    fn new(q: &QuaternaryForm, p: u64) -> Self {
        let pb = BigInt::from(p);
        let mm = q.matrix();
        let m = std::array::from_fn(|i| {
            std::array::from_fn(|j| mm.get(i, j).mod_floor(&pb).to_u64().expect("residue fits"))
        });
        Self { p, m }
    }

    fn eval(&self, w: [u64; 4]) -> u64 {
        let mut acc = 0u64;
        for i in 0..4 {
            for j in 0..4 {
                acc = (acc + self.m[i][j] * w[i] % self.p * w[j]) % self.p;
            }
        }
        acc
    }
}

fn reduce(w: &[BigInt; 4], p: u64) -> [u64; 4] {
    let pb = BigInt::from(p);
    std::array::from_fn(|i| w[i].mod_floor(&pb).to_u64().expect("residue fits"))
}

/// Searches one representative of each projective point mod `p`, stopping at the first zero.
fn projective_search(f: &ModForm) -> Option<[u64; 4]> {
    let p = f.p;
    for x in 0..p {
        for y in 0..p {
            for z in 0..p {
                if f.eval([x, y, z, 1]) == 0 {
                    return Some([x, y, z, 1]);
                }
            }
        }
    }
    for x in 0..p {
        for y in 0..p {
            if f.eval([x, y, 1, 0]) == 0 {
                return Some([x, y, 1, 0]);
            }
        }
    }
    (0..p)
        .map(|x| [x, 1, 0, 0])
        .chain(std::iter::once([1, 0, 0, 0]))
        .find(|&w| f.eval(w) == 0)
}

/// Isotropy of `Q_b` modulo a prime, with a checked witness.
///
/// When `p | b` the witness comes from the null vectors `(C, −B, 0, A)`, `(−B, −C, A, 0)`, or `e₁`;
/// otherwise it is found by search.
pub fn is_isotropic_at(q: &QuaternaryForm, p: u64) -> Result<Isotropy, ArithmeticError> {
    if !is_prime(p) {
        return Err(ArithmeticError::NotPrime(p));
    }
    let f = ModForm::new(q, p);
    let witness = if q.shift_b.is_multiple_of(&BigInt::from(p)) {
        let [e1, e2] = q.eigen_witnesses();
        [reduce(&e1, p), reduce(&e2, p), [1, 0, 0, 0]]
            .into_iter()
            .find(|w| w.iter().any(|&x| x != 0))
    } else {
        projective_search(&f)
    };
    let witness = witness.filter(|&w| f.eval(w) == 0);
    Ok(Isotropy {
        prime: p,
        isotropic: witness.is_some(),
        witness,
    })
}

/// Exhaustive isotropy test over all of `(ℤ/p)⁴`.
pub fn is_isotropic_exhaustive(q: &QuaternaryForm, p: u64) -> bool {
    let f = ModForm::new(q, p);
    (1..p.pow(4)).any(|code| {
        let w = std::array::from_fn(|i| (code / p.pow(i as u32)) % p);
        f.eval(w) == 0
    })
}

pub fn primes_below(n: u64) -> Vec<u64> {
    (2..n).filter(|&p| is_prime(p)).collect()
}

fn residues(q: &QuaternaryForm, restricted: bool) -> BTreeSet<u8> {
    let four = BigInt::from(4);
    let mut out = BTreeSet::new();
    for code in 0..256u32 {
        let eta: [i64; 4] = std::array::from_fn(|i| ((code >> (2 * i)) & 3) as i64);
        if restricted && ((eta[0] + eta[1]) % 2 == 0 || eta[2] % 2 == 1 || eta[3] % 2 == 1) {
            continue;
        }
        let v = q.eval_i64(eta).mod_floor(&four);
        out.insert(v.to_u8().expect("residue mod 4"));
    }
    out
}

/// Values of `Q_b(η)` mod 4 over `η = (Re α, Im α, Re β, Im β)` with `α ≡ 1, i` and `β ≡ 0 (mod 2)`.
pub fn local_classes(q: &QuaternaryForm) -> BTreeSet<u8> {
    residues(q, true)
}

/// Values of `Q_b(η)` mod 4 with no congruence restriction on `η`.
pub fn local_classes_unrestricted(q: &QuaternaryForm) -> BTreeSet<u8> {
    residues(q, false)
}

/// `Q_b(η) − b`, the bend produced by the stabilizer element with top row `(α, β)`.
pub fn bend_from_eta(q: &QuaternaryForm, eta: [i64; 4]) -> BigInt {
    q.eval_i64(eta) - &q.shift_b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(v: [i64; 5]) -> QuaternaryForm {
        qform_from_bend_vector(&BendVector::from_i64(v)).unwrap()
    }

    fn big(v: [i64; 4]) -> [BigInt; 4] {
        v.map(BigInt::from)
    }

    #[test]
    fn seed_forms() {
        let q1 = form([2, 2, 3, -1, 3]);
        assert_eq!([&q1.a, &q1.b, &q1.c, &q1.d], big([4, 0, -4, 5]).each_ref());
        assert_eq!(q1.binary_discriminant(), BigInt::from(-4));
        let q0 = form([0, 0, 1, 1, 1]);
        assert_eq!([&q0.a, &q0.b, &q0.c, &q0.d], big([0, 0, 0, 1]).each_ref());
        assert_eq!(q0.binary_discriminant(), BigInt::zero());
        assert_eq!(
            form([20, 12, 17, -7, 21]).binary_discriminant(),
            BigInt::from(-400)
        );
    }

    #[test]
    fn rejects_non_bend_vectors() {
        assert!(matches!(
            qform_from_bend_vector(&BendVector::from_i64([1, 0, 0, 0, 0])),
            Err(ArithmeticError::OddBendSum(_))
        ));
        assert!(matches!(
            qform_from_bend_vector(&BendVector::from_i64([1, 1, 0, 0, 0])),
            Err(ArithmeticError::NotABendVector(_))
        ));
    }

    #[test]
    fn discriminants_and_definiteness() {
        let q1 = form([2, 2, 3, -1, 3]);
        assert_eq!(discriminant(&q1), BigInt::from(256));
        assert!(is_positive_definite(&q1));
        let q0 = form([0, 0, 1, 1, 1]);
        assert_eq!(discriminant(&q0), BigInt::zero());
        assert!(!is_positive_definite(&q0));
        assert!(is_positive_semidefinite(&q0));
        assert_eq!(
            discriminant(&form([20, 12, 17, -7, 21])),
            BigInt::from(2_560_000)
        );
    }

    #[test]
    fn null_vectors_for_zero_bend() {
        let q = form([0, 0, 1, 1, 1]);
        for w in q.eigen_witnesses() {
            assert!(q.matrix().mul_vec(&w).iter().all(Zero::is_zero));
        }
        let q1 = form([2, 2, 3, -1, 3]);
        let [e1, _] = q1.eigen_witnesses();
        assert_eq!(q1.matrix().mul_vec(&e1), big([0, 0, 0, 4]).to_vec());
    }

    #[test]
    fn isotropy_examples() {
        let q1 = form([2, 2, 3, -1, 3]);
        for p in [2, 7] {
            let r = is_isotropic_at(&q1, p).unwrap();
            assert!(r.isotropic && r.witness.unwrap().iter().any(|&x| x != 0));
        }
        let q7 = form([20, 12, 17, -7, 21]);
        assert!(is_isotropic_at(&q7, 5).unwrap().isotropic);
        assert!(matches!(
            is_isotropic_at(&q7, 9),
            Err(ArithmeticError::NotPrime(9))
        ));
    }

    #[test]
    fn isotropy_agrees_with_exhaustive_search() {
        for v in [[2, 2, 3, -1, 3], [20, 12, 17, -7, 21], [0, 0, 1, 1, 1]] {
            let q = form(v);
            for p in primes_below(14) {
                assert_eq!(
                    is_isotropic_at(&q, p).unwrap().isotropic,
                    is_isotropic_exhaustive(&q, p),
                    "{v:?} p={p}"
                );
            }
        }
    }

    #[test]
    fn local_classes_examples() {
        let q1 = form([2, 2, 3, -1, 3]);
        assert_eq!(local_classes(&q1), BTreeSet::from([0]));
        assert!(local_classes_unrestricted(&q1).len() > 1);
        assert_eq!(local_classes(&form([0, 0, 1, 1, 1])).len(), 1);
    }

    #[test]
    fn primes() {
        assert_eq!(primes_below(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(!is_prime(1));
        assert_eq!(primes_below(100).len(), 25);
    }
}
