//! Change of variables, the spin homomorphism and the level-2 congruence subgroup.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ArithmeticError;
use crate::config::BendVector;
use crate::groups::{generators, TableName};
use crate::ring::Mat;
use crate::{GaussianInt, IntMat, Rational};

pub fn gi(re: i64, im: i64) -> GaussianInt {
    GaussianInt::new(BigInt::from(re), BigInt::from(im))
}

fn is_even(z: &GaussianInt) -> bool {
    z.re.is_even() && z.im.is_even()
}

/// `z ≡ 1 (mod 2)` in ℤ[i].
fn is_one_mod2(z: &GaussianInt) -> bool {
    z.re.is_odd() && z.im.is_even()
}

/// `z ≡ i (mod 2)` in ℤ[i].
fn is_i_mod2(z: &GaussianInt) -> bool {
    z.re.is_even() && z.im.is_odd()
}

/// A unimodular 2×2 matrix `[[α, β], [γ, δ]]` over ℤ[i].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MobiusPair {
    pub alpha: GaussianInt,
    pub beta: GaussianInt,
    pub gamma: GaussianInt,
    pub delta: GaussianInt,
}

impl MobiusPair {
    pub fn new(
        alpha: GaussianInt,
        beta: GaussianInt,
        gamma: GaussianInt,
        delta: GaussianInt,
    ) -> Result<Self, ArithmeticError> {
        let m = Self {
            alpha,
            beta,
            gamma,
            delta,
        };
        if m.det() != GaussianInt::one() {
            return Err(ArithmeticError::NotUnimodular(m.to_string()));
        }
        Ok(m)
    }

    /// Entries as `(re, im)` pairs in row order.
    pub fn from_parts(e: [(i64, i64); 4]) -> Result<Self, ArithmeticError> {
        let [a, b, c, d] = e.map(|(r, i)| gi(r, i));
        Self::new(a, b, c, d)
    }

    pub fn identity() -> Self {
        Self {
            alpha: gi(1, 0),
            beta: gi(0, 0),
            gamma: gi(0, 0),
            delta: gi(1, 0),
        }
    }

    pub fn det(&self) -> GaussianInt {
        &self.alpha * &self.delta - &self.beta * &self.gamma
    }

    pub fn inverse(&self) -> Self {
        Self {
            alpha: self.delta.clone(),
            beta: -self.beta.clone(),
            gamma: -self.gamma.clone(),
            delta: self.alpha.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            alpha: -self.alpha.clone(),
            beta: -self.beta.clone(),
            gamma: -self.gamma.clone(),
            delta: -self.delta.clone(),
        }
    }

    pub fn pow(&self, e: i32) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        (0..e.unsigned_abs()).fold(Self::identity(), |acc, _| &acc * &base)
    }

    /// Equality up to sign.
    pub fn projectively_eq(&self, other: &Self) -> bool {
        self == other || *self == other.neg()
    }
}

impl Mul for &MobiusPair {
    type Output = MobiusPair;

    fn mul(self, o: &MobiusPair) -> MobiusPair {
        MobiusPair {
            alpha: &self.alpha * &o.alpha + &self.beta * &o.gamma,
            beta: &self.alpha * &o.beta + &self.beta * &o.delta,
            gamma: &self.gamma * &o.alpha + &self.delta * &o.gamma,
            delta: &self.gamma * &o.beta + &self.delta * &o.delta,
        }
    }
}

impl fmt::Display for MobiusPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.alpha, self.beta, self.gamma, self.delta
        )
    }
}

impl fmt::Debug for MobiusPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn conj_mul(x: &GaussianInt, y: &GaussianInt) -> GaussianInt {
    x.conj() * y
}

/// The spin image of a unimodular pair, acting on `(b, A, B, C, D)`.
pub fn spin(m: &MobiusPair) -> IntMat {
    let (a, b, c, d) = (&m.alpha, &m.beta, &m.gamma, &m.delta);
    let z = BigInt::zero;
    let two = BigInt::from(2);
    let ba = conj_mul(b, a);
    let ac = conj_mul(a, c);
    let bc = conj_mul(b, c);
    let da = conj_mul(d, a);
    let bd = conj_mul(b, d);
    let dc = conj_mul(d, c);
    Mat::from_rows(&[
        vec![BigInt::one(), z(), z(), z(), z()],
        vec![
            z(),
            a.norm_sqr(),
            &two * &ba.re,
            &two * &ba.im,
            b.norm_sqr(),
        ],
        vec![
            z(),
            ac.re.clone(),
            &bc.re + &da.re,
            &da.im + &bc.im,
            bd.re.clone(),
        ],
        vec![
            z(),
            ac.im.clone(),
            &bc.im - &da.im,
            &da.re - &bc.re,
            bd.im.clone(),
        ],
        vec![
            z(),
            c.norm_sqr(),
            &two * &dc.re,
            &two * &dc.im,
            d.norm_sqr(),
        ],
    ])
}

/// Change of variables taking `(b₁, b₂, b₃, b₄, b_μ)` to `(b, A, B, C, D)`.
pub fn change_of_variables() -> Mat<Rational> {
    let r = |n: i64, d: i64| Rational::new(n.into(), d.into());
    let h = r(1, 2);
    let mh = r(-1, 2);
    let (o, z) = (r(1, 1), r(0, 1));
    Mat::from_rows(&[
        vec![o.clone(), z.clone(), z.clone(), z.clone(), z.clone()],
        vec![o.clone(), o.clone(), z.clone(), z.clone(), z.clone()],
        vec![mh.clone(), mh.clone(), mh.clone(), mh.clone(), o.clone()],
        vec![mh.clone(), mh.clone(), mh, h, z.clone()],
        vec![o.clone(), z.clone(), o, z.clone(), z],
    ])
}

fn to_rational(m: &IntMat) -> Mat<Rational> {
    m.map(|x| Rational::from_integer(x.clone()))
}

fn to_integer(m: &Mat<Rational>) -> Option<IntMat> {
    m.entries()
        .iter()
        .all(|x| x.is_integer())
        .then(|| m.map(|x| x.to_integer()))
}

/// `J·g·J⁻¹`, required to be integral and to fix the first coordinate.
pub fn conjugate_by_j(g: &IntMat) -> Result<IntMat, ArithmeticError> {
    let j = change_of_variables();
    let ji = j.inverse().expect("J is invertible");
    let hat = &(&j * &to_rational(g)) * &ji;
    to_integer(&hat)
        .filter(fixes_first_coordinate)
        .ok_or_else(|| ArithmeticError::NotInStabilizer(g.to_string()))
}

fn fixes_first_coordinate(m: &IntMat) -> bool {
    (0..5).all(|k| {
        let e = if k == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
        *m.get(0, k) == e && *m.get(k, 0) == e
    })
}

/// `J⁻¹·m·J`, pulling a spin image back to bend-vector coordinates.
pub fn pull_back_by_j(m: &IntMat) -> Mat<Rational> {
    let j = change_of_variables();
    let ji = j.inverse().expect("J is invertible");
    &(&ji * &to_rational(m)) * &j
}

/// `m ≡ [[1,0],[0,1]]` or `[[i,0],[0,i]]` modulo 2, up to sign.
pub fn in_level2_subgroup(m: &MobiusPair) -> bool {
    is_even(&m.beta)
        && is_even(&m.gamma)
        && ((is_one_mod2(&m.alpha) && is_one_mod2(&m.delta))
            || (is_i_mod2(&m.alpha) && is_i_mod2(&m.delta)))
}

pub const STABILIZER_LABELS: [&str; 7] = ["238", "274", "634", "278", "638", "674", "678"];

/// Preimages in the level-2 subgroup of the seven oriented stabilizer generators.
pub fn sbar_generators() -> Vec<(&'static str, MobiusPair)> {
    let table: [(&str, [(i64, i64); 4]); 7] = [
        ("238", [(0, 1), (0, 0), (0, 0), (0, -1)]),
        ("274", [(0, 1), (0, 0), (2, 0), (0, -1)]),
        ("634", [(0, 1), (2, 0), (0, 0), (0, -1)]),
        ("278", [(1, 0), (0, 0), (2, 0), (1, 0)]),
        ("638", [(1, 0), (2, 0), (0, 0), (1, 0)]),
        ("674", [(1, 2), (2, 0), (2, 0), (1, -2)]),
        ("678", [(2, 1), (2, 0), (2, 0), (2, -1)]),
    ];
    table
        .into_iter()
        .map(|(l, e)| (l, MobiusPair::from_parts(e).expect("unimodular")))
        .collect()
}

pub fn sbar(label: &str) -> Option<MobiusPair> {
    sbar_generators()
        .into_iter()
        .find(|(l, _)| *l == label)
        .map(|(_, m)| m)
}

/// The conjugated stabilizer generators `Ŝ`, rows 2–5 (row 1 is always `e₁`).
pub fn shat_generators() -> Vec<(&'static str, IntMat)> {
    let table: [(&str, [[i64; 5]; 4]); 7] = [
        (
            "238",
            [
                [0, 1, 0, 0, 0],
                [0, 0, -1, 0, 0],
                [0, 0, 0, -1, 0],
                [0, 0, 0, 0, 1],
            ],
        ),
        (
            "274",
            [
                [0, 1, 0, 0, 0],
                [0, 0, -1, 0, 0],
                [0, -2, 0, -1, 0],
                [0, 4, 0, 4, 1],
            ],
        ),
        (
            "634",
            [
                [0, 1, 0, 4, 4],
                [0, 0, -1, 0, 0],
                [0, 0, 0, -1, -2],
                [0, 0, 0, 0, 1],
            ],
        ),
        (
            "278",
            [
                [0, 1, 0, 0, 0],
                [0, 2, 1, 0, 0],
                [0, 0, 0, 1, 0],
                [0, 4, 4, 0, 1],
            ],
        ),
        (
            "638",
            [
                [0, 1, 4, 0, 4],
                [0, 0, 1, 0, 2],
                [0, 0, 0, 1, 0],
                [0, 0, 0, 0, 1],
            ],
        ),
        (
            "674",
            [
                [0, 5, 4, 8, 4],
                [0, 2, 1, 4, 2],
                [0, -4, -4, -7, -4],
                [0, 4, 4, 8, 5],
            ],
        ),
        (
            "678",
            [
                [0, 5, 8, 4, 4],
                [0, 4, 7, 4, 4],
                [0, -2, -4, -1, -2],
                [0, 4, 8, 4, 5],
            ],
        ),
    ];
    table
        .into_iter()
        .map(|(l, r)| {
            (
                l,
                IntMat::from_i64(&[[1, 0, 0, 0, 0], r[0], r[1], r[2], r[3]]),
            )
        })
        .collect()
}

/// Stabilizer generator matrix by its three-digit label.
pub fn stabilizer_generator(label: &str) -> Option<&'static IntMat> {
    generators(TableName::Stabilizer1Oriented).get(&format!("S{label}"))
}

/// A small level-2 matrix together with a word in the `S̄` generators equal to it up to sign.
#[derive(Debug, Clone)]
pub struct SmallMatrixWord {
    pub matrix: MobiusPair,
    pub word: Vec<(&'static str, i32)>,
}

impl SmallMatrixWord {
    pub fn evaluate(&self) -> MobiusPair {
        self.word
            .iter()
            .fold(MobiusPair::identity(), |acc, (l, e)| {
                &acc * &sbar(l).expect("known label").pow(*e)
            })
    }

    pub fn holds(&self) -> bool {
        self.evaluate().projectively_eq(&self.matrix)
    }
}

/// The generating set of the level-2 subgroup written in the `S̄` generators.
pub fn small_matrix_words() -> Vec<SmallMatrixWord> {
    let entry = |e: [(i64, i64); 4], word: &[(&'static str, i32)]| SmallMatrixWord {
        matrix: MobiusPair::from_parts(e).expect("unimodular"),
        word: word.to_vec(),
    };
    let mut out = vec![
        entry([(0, 1), (0, 0), (0, 0), (0, -1)], &[("238", 1)]),
        entry([(0, 1), (0, 0), (2, 0), (0, -1)], &[("274", 1)]),
        entry(
            [(0, 1), (0, 0), (-2, 0), (0, -1)],
            &[("238", 1), ("274", 1), ("238", 1)],
        ),
        entry([(0, 1), (2, 0), (0, 0), (0, -1)], &[("634", 1)]),
        entry(
            [(0, 1), (-2, 0), (0, 0), (0, -1)],
            &[("238", 1), ("634", 1), ("238", 1)],
        ),
    ];
    for s in [1i64, -1] {
        let e = s as i32;
        out.push(entry([(1, 0), (0, 0), (2 * s, 0), (1, 0)], &[("278", e)]));
        out.push(entry([(1, 0), (2 * s, 0), (0, 0), (1, 0)], &[("638", e)]));
        let lower: &[(&str, i32)] = if s > 0 {
            &[("238", 1), ("274", 1)]
        } else {
            &[("274", -1), ("238", -1)]
        };
        out.push(entry([(1, 0), (0, 0), (0, 2 * s), (1, 0)], lower));
        out.push(entry(
            [(0, 1), (0, 0), (0, 2 * s), (0, -1)],
            &[("238", 1), ("278", -e)],
        ));
        let upper: &[(&str, i32)] = if s > 0 {
            &[("634", -1), ("238", -1)]
        } else {
            &[("238", 1), ("634", 1)]
        };
        out.push(entry([(1, 0), (0, 2 * s), (0, 0), (1, 0)], upper));
        out.push(entry(
            [(0, 1), (0, 2 * s), (0, 0), (0, -1)],
            &[("238", 1), ("638", e)],
        ));
    }
    out
}

/// Division with remainder in ℤ[i], rounding the quotient to the nearest lattice point.
fn gaussian_div_rem(a: &GaussianInt, b: &GaussianInt) -> (GaussianInt, GaussianInt) {
    let n = b.norm_sqr();
    let num = a * b.conj();
    let two = BigInt::from(2);
    let round = |x: &BigInt| -> BigInt { (x * &two + &n).div_floor(&(&n * &two)) };
    let q = GaussianInt::new(round(&num.re), round(&num.im));
    let r = a - &q * b;
    (q, r)
}

/// `(g, x, y)` with `a·x + b·y = g`, `g` a greatest common divisor.
pub fn gaussian_xgcd(a: &GaussianInt, b: &GaussianInt) -> (GaussianInt, GaussianInt, GaussianInt) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut x0, mut x1) = (gi(1, 0), gi(0, 0));
    let (mut y0, mut y1) = (gi(0, 0), gi(1, 0));
    while !r1.is_zero() {
        let (q, r) = gaussian_div_rem(&r0, &r1);
        let x = &x0 - &q * &x1;
        let y = &y0 - &q * &y1;
        (r0, r1) = (r1, r);
        (x0, x1) = (x1, x);
        (y0, y1) = (y1, y);
    }
    (r0, x0, y0)
}

fn unit_inverse(u: &GaussianInt) -> Option<GaussianInt> {
    [gi(1, 0), gi(-1, 0), gi(0, 1), gi(0, -1)]
        .into_iter()
        .find(|v| u * v == gi(1, 0))
}

/// Completes `(α, β)` to a unimodular pair, preferring a completion in the level-2 subgroup.
pub fn complete_unimodular(alpha: &GaussianInt, beta: &GaussianInt) -> Option<MobiusPair> {
    let (g, x, y) = gaussian_xgcd(alpha, beta);
    let inv = unit_inverse(&g)?;
    // α·x·u⁻¹ + β·y·u⁻¹ = 1, so δ = x·u⁻¹ and γ = −y·u⁻¹.
    let base = MobiusPair {
        alpha: alpha.clone(),
        beta: beta.clone(),
        gamma: -(&y * &inv),
        delta: &x * &inv,
    };
    debug_assert!(base.det().is_one());
    let shifts = [gi(0, 0), gi(1, 0), gi(0, 1), gi(1, 1)];
    shifts
        .iter()
        .map(|t| MobiusPair {
            alpha: alpha.clone(),
            beta: beta.clone(),
            gamma: &base.gamma + t * alpha,
            delta: &base.delta + t * beta,
        })
        .find(in_level2_subgroup)
        .or(Some(base))
}

/// `α ≡ 1` or `i` and `β ≡ 0` modulo 2.
pub fn satisfies_congruence(alpha: &GaussianInt, beta: &GaussianInt) -> bool {
    (is_one_mod2(alpha) || is_i_mod2(alpha)) && is_even(beta)
}

/// Bend of the sphere that replaces the second sphere under the stabilizer element with top row `(α, β)`.
pub fn bend_from_xi(
    bv: &BendVector<BigInt>,
    alpha: &GaussianInt,
    beta: &GaussianInt,
) -> Result<BigInt, ArithmeticError> {
    if !satisfies_congruence(alpha, beta) {
        return Err(ArithmeticError::Congruence(
            alpha.to_string(),
            beta.to_string(),
        ));
    }
    let [b, b2, b3, b4, bmu] = bv.entries().clone();
    let na = alpha.norm_sqr();
    let nb = beta.norm_sqr();
    let re_ab = conj_mul(alpha, beta).re;
    let im_ba = conj_mul(beta, alpha).im;
    let two = BigInt::from(2);
    Ok((&na - &re_ab - &im_ba + &nb - 1u32) * b
        + (&na - &re_ab - &im_ba) * b2
        + (-&re_ab - &im_ba + &nb) * b3
        + (-&re_ab + &im_ba) * b4
        + two * re_ab * bmu)
}

/// The same bend through the matrix `J⁻¹·ρ(m)·J` for a unimodular completion `m`.
pub fn bend_via_matrix(
    bv: &BendVector<BigInt>,
    alpha: &GaussianInt,
    beta: &GaussianInt,
) -> Result<BigInt, ArithmeticError> {
    let m = complete_unimodular(alpha, beta)
        .ok_or_else(|| ArithmeticError::NotCoprime(alpha.to_string(), beta.to_string()))?;
    let pulled = pull_back_by_j(&spin(&m));
    let v: Vec<Rational> = bv
        .entries()
        .iter()
        .map(|x| Rational::from_integer(x.clone()))
        .collect();
    let out = pulled.mul_vec(&v);
    out[1]
        .is_integer()
        .then(|| out[1].to_integer())
        .ok_or(ArithmeticError::NotInStabilizer(m.to_string()))
}

/// `|z| ≤ r` in the sup norm of both coordinates.
pub fn gaussian_box(r: i64) -> impl Iterator<Item = GaussianInt> {
    (-r..=r).flat_map(move |a| (-r..=r).map(move |b| gi(a, b)))
}

pub fn abs_le(z: &GaussianInt, r: i64) -> bool {
    z.re.abs() <= BigInt::from(r) && z.im.abs() <= BigInt::from(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugation_matches_table_and_spin() {
        let hats = shat_generators();
        for (label, m) in sbar_generators() {
            let s = stabilizer_generator(label).unwrap();
            let hat = conjugate_by_j(s).unwrap();
            let printed = &hats.iter().find(|(l, _)| *l == label).unwrap().1;
            assert_eq!(&hat, printed, "{label}");
            assert_eq!(spin(&m), hat, "{label}");
        }
    }

    #[test]
    fn identity_cases() {
        assert!(conjugate_by_j(&IntMat::identity(5)).unwrap().is_identity());
        assert!(spin(&MobiusPair::identity()).is_identity());
    }

    #[test]
    fn outside_stabilizer_is_not_integral() {
        let s = generators(TableName::Apollonian).get("S5234").unwrap();
        assert!(conjugate_by_j(s).is_err());
        let half = IntMat::from_i64(&[
            [1, 0, 0, 0, 0],
            [0, 1, 0, 0, 0],
            [0, 0, 1, 0, 1],
            [0, 0, 0, 1, 0],
            [0, 0, 0, 0, 1],
        ]);
        assert!(conjugate_by_j(&half).is_err());
    }

    #[test]
    fn level2_membership() {
        assert!(sbar_generators().iter().all(|(_, m)| in_level2_subgroup(m)));
        assert!(!in_level2_subgroup(
            &MobiusPair::from_parts([(1, 0), (1, 0), (0, 0), (1, 0)]).unwrap()
        ));
        assert!(in_level2_subgroup(
            &MobiusPair::from_parts([(0, 1), (0, 0), (0, 0), (0, -1)]).unwrap()
        ));
    }

    #[test]
    fn non_unimodular_rejected() {
        assert!(MobiusPair::from_parts([(2, 0), (0, 0), (0, 0), (1, 0)]).is_err());
    }

    #[test]
    fn small_matrix_words_hold() {
        let words = small_matrix_words();
        assert_eq!(words.len(), 17);
        for w in &words {
            assert!(w.holds(), "{:?} gives {:?}", w, w.evaluate());
        }
    }

    #[test]
    fn xgcd_and_completion() {
        let (g, x, y) = gaussian_xgcd(&gi(3, 4), &gi(1, 2));
        assert_eq!(&gi(3, 4) * &x + &gi(1, 2) * &y, g);
        let m = complete_unimodular(&gi(1, 0), &gi(2, 0)).unwrap();
        assert!(m.det().is_one());
        assert!(in_level2_subgroup(&m));
        assert!(complete_unimodular(&gi(1, 1), &gi(2, 0)).is_none());
    }

    #[test]
    fn trivial_bends() {
        let bv = BendVector::from_i64([2, 2, 3, -1, 3]);
        assert_eq!(
            bend_from_xi(&bv, &gi(1, 0), &gi(0, 0)).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(
            bend_from_xi(&bv, &gi(0, 1), &gi(0, 0)).unwrap(),
            BigInt::from(2)
        );
        assert!(bend_from_xi(&bv, &gi(1, 1), &gi(0, 0)).is_err());
        assert!(bend_from_xi(&bv, &gi(1, 0), &gi(1, 0)).is_err());
    }

    #[test]
    fn both_routes_agree_on_a_sample() {
        let bv = BendVector::from_i64([2, 2, 3, -1, 3]);
        let a = bend_from_xi(&bv, &gi(1, 0), &gi(2, 0)).unwrap();
        let b = bend_via_matrix(&bv, &gi(1, 0), &gi(2, 0)).unwrap();
        assert_eq!(a, b);
    }
}
