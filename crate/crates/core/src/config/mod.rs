//! Orthoplicial configurations: V-matrices, F-matrices and bend vectors.
//!
//! An F-matrix holds four pairwise tangent spheres in rows 1–4 and the antipodal vector
//! `v_μ = ½(v₁ + v₅)` in row 5. The remaining four spheres are the complements
//! `2v_μ − v_k`.

mod seeds;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::inversive::{classify_pair, inversive_product, q_sigma, q_wilker, PairRelation};
use crate::ring::{Mat, QSqrt2, Scalar, ToInteger};
use crate::{Coord5, ExactMat, IntMat};

pub use seeds::{builtin, f0, f0_prime, f1, f7d, BUILTIN_NAMES};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("expected a {expected} matrix, got {rows}x{cols}")]
    Shape {
        expected: &'static str,
        rows: usize,
        cols: usize,
    },
    #[error("spheres {0} and {1} are not externally tangent")]
    NonTangentQuadruple(usize, usize),
    #[error("the four spheres do not determine a configuration (degenerate linear system)")]
    Degenerate,
    #[error("the completing sphere is not representable over Q(sqrt2)")]
    NotRepresentable,
    #[error("not a configuration: {0}")]
    NotAConfiguration(&'static str),
    #[error("malformed F-matrix JSON: {0}")]
    Json(String),
    #[error("unknown builtin seed {0:?} (expected one of F0, F1, F7d)")]
    UnknownSeed(String),
}

/// The five-entry column `(b₁, b₂, b₃, b₄, b_μ)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BendVector<T>(pub [T; 5]);

impl<T: Scalar> BendVector<T> {
    pub fn entries(&self) -> &[T; 5] {
        &self.0
    }

    pub fn mu(&self) -> &T {
        &self.0[4]
    }

    /// Bend of sphere `k` in `1..=8`; `k > 4` gives the complement `2b_μ − b_{k−4}`.
    pub fn bend(&self, k: usize) -> T {
        match k {
            1..=4 => self.0[k - 1].clone(),
            5..=8 => T::two() * self.0[4].clone() - self.0[k - 5].clone(),
            _ => panic!("sphere index {k} out of range 1..=8"),
        }
    }

    pub fn eight(&self) -> [T; 8] {
        std::array::from_fn(|i| self.bend(i + 1))
    }
}

impl<T: fmt::Display> fmt::Display for BendVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d, m] = &self.0;
        write!(f, "({a}, {b}, {c}, {d}, {m})")
    }
}

impl<T: fmt::Debug> fmt::Debug for BendVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl BendVector<QSqrt2> {
    pub fn to_integral(&self) -> Option<BendVector<BigInt>> {
        let v: Option<Vec<BigInt>> = self.0.iter().map(ToInteger::to_integer).collect();
        v.map(|v| BendVector(v.try_into().expect("five entries")))
    }
}

impl BendVector<BigInt> {
    pub fn from_i64(v: [i64; 5]) -> Self {
        Self(v.map(BigInt::from))
    }

    pub fn gcd(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }
}

pub fn is_integral(bv: &BendVector<QSqrt2>) -> bool {
    bv.to_integral().is_some()
}

pub fn is_primitive(bv: &BendVector<BigInt>) -> bool {
    bv.gcd().is_one()
}

/// Integer matrix `Q_F = 2·G_{Σ,F}⁻¹` of the orthoplicial Descartes form.
pub fn q_f<T: Scalar + FromPrimitive>() -> Mat<T> {
    Mat::from_i64(&[
        [1, 0, 0, 0, -1],
        [0, 1, 0, 0, -1],
        [0, 0, 1, 0, -1],
        [0, 0, 0, 1, -1],
        [-1, -1, -1, -1, 2],
    ])
}

/// Gram matrix `F·Q_Σ·Fᵀ` shared by every F-matrix.
pub fn g_sigma_f<T: Scalar + FromPrimitive>() -> Mat<T> {
    Mat::from_i64(&[
        [1, -1, -1, -1, -1],
        [-1, 1, -1, -1, -1],
        [-1, -1, 1, -1, -1],
        [-1, -1, -1, 1, -1],
        [-1, -1, -1, -1, -1],
    ])
}

/// The 8×5 decompression matrix `D` with `V = D·F`.
pub fn decompression<T: Scalar + FromPrimitive>() -> Mat<T> {
    Mat::from_i64(&[
        [1, 0, 0, 0, 0],
        [0, 1, 0, 0, 0],
        [0, 0, 1, 0, 0],
        [0, 0, 0, 1, 0],
        [-1, 0, 0, 0, 2],
        [0, -1, 0, 0, 2],
        [0, 0, -1, 0, 2],
        [0, 0, 0, -1, 2],
    ])
}

/// `F(ζ) = 2ζ_μ² − 2ζ_μ(ζ₁+ζ₂+ζ₃+ζ₄) + ζ₁²+ζ₂²+ζ₃²+ζ₄²`.
pub fn descartes_form<T: Scalar>(z: &[T; 5]) -> T {
    let mu = z[4].clone();
    let sum = z[..4].iter().fold(T::zero(), |acc, x| acc + x.clone());
    let squares = z[..4]
        .iter()
        .fold(T::zero(), |acc, x| acc + x.clone() * x.clone());
    T::two() * mu.clone() * mu.clone() - T::two() * mu * sum + squares
}

/// A root `sum ± √disc` of the quadratic for `2b_μ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwiceBMu {
    pub sum: BigInt,
    pub disc: BigInt,
    pub sign: i8,
}

impl TwiceBMu {
    pub fn as_integer(&self) -> Option<BigInt> {
        let r = self.disc.sqrt();
        (&r * &r == self.disc).then(|| &self.sum + BigInt::from(self.sign) * r)
    }

    pub fn as_qsqrt2(&self) -> Option<QSqrt2> {
        if let Some(n) = self.as_integer() {
            return Some(QSqrt2::from_integer(n));
        }
        let half: BigInt = &self.disc / 2;
        let r = half.sqrt();
        (self.disc.is_even() && &r * &r == half).then(|| {
            QSqrt2::from(&self.sum) + QSqrt2::from(BigInt::from(self.sign) * r) * QSqrt2::sqrt2()
        })
    }

    pub fn to_f64(&self) -> f64 {
        let s: f64 = self.sum.to_string().parse().unwrap_or(f64::NAN);
        let d: f64 = self.disc.to_string().parse().unwrap_or(f64::NAN);
        s + f64::from(self.sign) * d.sqrt()
    }
}

impl fmt::Display for TwiceBMu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_qsqrt2() {
            Some(x) => write!(f, "{x}"),
            None => write!(
                f,
                "{}{}sqrt({})",
                self.sum,
                if self.sign < 0 { '-' } else { '+' },
                self.disc
            ),
        }
    }
}

/// Real roots `2b_μ = Σbᵢ ± √((Σbᵢ)² − 2Σbᵢ²)`, smaller root first.
pub fn solve_b_mu(b: [&BigInt; 4]) -> Vec<TwiceBMu> {
    let sum: BigInt = b.iter().copied().sum();
    let squares: BigInt = b.iter().map(|x| *x * *x).sum();
    let disc = &sum * &sum - BigInt::from(2) * squares;
    if disc.is_negative() {
        return Vec::new();
    }
    if disc.is_zero() {
        return vec![TwiceBMu { sum, disc, sign: 1 }];
    }
    vec![
        TwiceBMu {
            sum: sum.clone(),
            disc: disc.clone(),
            sign: -1,
        },
        TwiceBMu { sum, disc, sign: 1 },
    ]
}

/// 5×5 exact matrix whose rows are four spheres and the antipodal vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FMatrix(ExactMat);

impl FMatrix {
    pub fn from_mat(m: ExactMat) -> Result<Self, ConfigError> {
        if m.rows() != 5 || m.cols() != 5 {
            return Err(ConfigError::Shape {
                expected: "5x5",
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        Ok(Self(m))
    }

    pub fn from_rows(rows: &[Coord5; 5]) -> Self {
        Self(Mat::from_rows(
            &rows.iter().map(Coord5::to_array).collect::<Vec<_>>(),
        ))
    }

    /// Entries given as `(a, b)` meaning `a + b√2`.
    pub fn from_pairs(rows: &[[(i64, i64); 5]; 5]) -> Self {
        let rows: Vec<Vec<QSqrt2>> = rows
            .iter()
            .map(|r| r.iter().map(|&(a, b)| QSqrt2::from_ints(a, b)).collect())
            .collect();
        Self(Mat::from_rows(&rows))
    }

    pub fn mat(&self) -> &ExactMat {
        &self.0
    }

    pub fn into_mat(self) -> ExactMat {
        self.0
    }

    /// Row `k` in `1..=5`.
    pub fn row(&self, k: usize) -> Coord5 {
        Coord5::from_slice(self.0.row(k - 1))
    }

    pub fn antipodal(&self) -> Coord5 {
        self.row(5)
    }

    /// Coordinates of sphere `k` in `1..=8`.
    pub fn sphere(&self, k: usize) -> Coord5 {
        match k {
            1..=4 => self.row(k),
            5..=8 => self
                .antipodal()
                .scaled(&QSqrt2::from(2))
                .minus(&self.row(k - 4)),
            _ => panic!("sphere index {k} out of range 1..=8"),
        }
    }

    pub fn spheres(&self) -> [Coord5; 8] {
        std::array::from_fn(|i| self.sphere(i + 1))
    }

    /// Left action `g·F` of an integer matrix.
    pub fn left_mul(&self, g: &IntMat) -> Self {
        assert!(g.rows() == 5 && g.cols() == 5, "5x5 group matrix");
        let mut out: ExactMat = Mat::zeros(5, 5);
        for i in 0..5 {
            for k in 0..5 {
                let c = g.get(i, k);
                if c.is_zero() {
                    continue;
                }
                for j in 0..5 {
                    let x = self.0.get(k, j);
                    if x.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).clone() + x * c;
                    out.set(i, j, v);
                }
            }
        }
        Self(out)
    }

    /// Right action `F·M` of a Möbius matrix.
    pub fn right_mul(&self, m: &ExactMat) -> Self {
        Self(&self.0 * m)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if !check_gramian(self) {
            return Err(ConfigError::NotAConfiguration(
                "F·Q_Σ·Fᵀ differs from the configuration Gramian",
            ));
        }
        if !check_dgm(self) {
            return Err(ConfigError::NotAConfiguration(
                "Fᵀ·Q_F·F differs from the Wilker matrix",
            ));
        }
        Ok(())
    }

    pub fn to_json(&self) -> FMatrixJson {
        FMatrixJson {
            rows: self
                .0
                .to_rows()
                .into_iter()
                .map(|r| r.iter().map(|x| x.to_string()).collect())
                .collect(),
        }
    }

    pub fn from_json(j: &FMatrixJson) -> Result<Self, ConfigError> {
        if j.rows.len() != 5 || j.rows.iter().any(|r| r.len() != 5) {
            return Err(ConfigError::Json("expected 5 rows of 5 entries".into()));
        }
        let rows: Result<Vec<Vec<QSqrt2>>, _> = j
            .rows
            .iter()
            .map(|r| r.iter().map(|s| s.parse::<QSqrt2>()).collect())
            .collect();
        let rows = rows.map_err(|e| ConfigError::Json(e.to_string()))?;
        Ok(Self(Mat::from_rows(&rows)))
    }
}

impl fmt::Display for FMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for FMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FMatrix{}", self.0)
    }
}

/// Serialized form `{"rows": [[five QSqrt2 strings] × 5]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FMatrixJson {
    pub rows: Vec<Vec<String>>,
}

/// 8×5 matrix of all sphere coordinates in admissible order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VMatrix(ExactMat);

impl VMatrix {
    pub fn from_mat(m: ExactMat) -> Result<Self, ConfigError> {
        if m.rows() != 8 || m.cols() != 5 {
            return Err(ConfigError::Shape {
                expected: "8x5",
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        Ok(Self(m))
    }

    pub fn mat(&self) -> &ExactMat {
        &self.0
    }

    /// Row `k` in `1..=8`.
    pub fn row(&self, k: usize) -> Coord5 {
        Coord5::from_slice(self.0.row(k - 1))
    }

    pub fn right_mul(&self, m: &ExactMat) -> Self {
        Self(&self.0 * m)
    }
}

pub fn antipodal(v1: &Coord5, v5: &Coord5) -> Coord5 {
    v1.plus(v5).scaled(&QSqrt2::ratio(1, 2))
}

pub fn v_from_f(f: &FMatrix) -> VMatrix {
    VMatrix(&decompression::<QSqrt2>() * f.mat())
}

pub fn f_from_v(v: &VMatrix) -> FMatrix {
    let mu = antipodal(&v.row(1), &v.row(5));
    FMatrix::from_rows(&[v.row(1), v.row(2), v.row(3), v.row(4), mu])
}

pub fn check_gramian(f: &FMatrix) -> bool {
    &(f.mat() * &q_sigma::<QSqrt2>()) * &f.mat().transpose() == g_sigma_f()
}

/// `Fᵀ·Q_F·F = Q_W`, together with its diagonal: `F(a) = F(b) = 0` and `F(x̂) = F(ŷ) = F(ẑ) = 2`.
pub fn check_dgm(f: &FMatrix) -> bool {
    let full = &(&f.mat().transpose() * &q_f::<QSqrt2>()) * f.mat() == q_wilker();
    let targets = [0, 0, 2, 2, 2];
    let diagonal = (0..5).all(|j| {
        let col: [QSqrt2; 5] = f.mat().col(j).try_into().expect("five rows");
        descartes_form(&col) == QSqrt2::from(targets[j])
    });
    full && diagonal
}

pub fn bend_vector(f: &FMatrix) -> BendVector<QSqrt2> {
    BendVector(f.mat().col(1).try_into().expect("five rows"))
}

/// The two configurations whose first four spheres are the given pairwise tangent quadruple,
/// ordered by their antipodal rows.
pub fn complete_quadruple(rows: &[Coord5; 4]) -> Result<(FMatrix, FMatrix), ConfigError> {
    for i in 0..4 {
        for j in i + 1..4 {
            if classify_pair(&rows[i], &rows[j]) != PairRelation::TangentExternal {
                return Err(ConfigError::NonTangentQuadruple(i + 1, j + 1));
            }
        }
        if inversive_product(&rows[i], &rows[i]) != QSqrt2::one() {
            return Err(ConfigError::NonTangentQuadruple(i + 1, i + 1));
        }
    }
    // Σ(w, v_k) = −1 for k = 1..4: solve for w = w0 + t·n.
    let qs = q_sigma::<QSqrt2>();
    let lhs: Vec<Vec<QSqrt2>> = rows.iter().map(|v| qs.mul_vec(&v.to_array())).collect();
    let (w0, n) = solve_line(&lhs, &vec![-QSqrt2::one(); 4]).ok_or(ConfigError::Degenerate)?;
    let (w0, n) = (Coord5::from_slice(&w0), Coord5::from_slice(&n));
    // Σ(w, w) = −1 is quadratic in t.
    let qa = inversive_product(&n, &n);
    let qb = inversive_product(&w0, &n);
    let qc = inversive_product(&w0, &w0) + QSqrt2::one();
    if qa.is_zero() {
        return Err(ConfigError::Degenerate);
    }
    let disc = &qb * &qb - &qa * &qc;
    let root = disc.sqrt().ok_or(ConfigError::NotRepresentable)?;
    let mut mus: Vec<Coord5> = [&root, &-root.clone()]
        .into_iter()
        .map(|r| {
            let t = (r - &qb) / &qa;
            w0.plus(&n.scaled(&t))
        })
        .collect();
    mus.sort();
    let [a, b]: [Coord5; 2] = mus.try_into().expect("two roots");
    let make = |mu: Coord5| {
        FMatrix::from_rows(&[
            rows[0].clone(),
            rows[1].clone(),
            rows[2].clone(),
            rows[3].clone(),
            mu,
        ])
    };
    Ok((make(a), make(b)))
}

/// Particular solution and kernel direction of a rank-4 system of four equations in five unknowns.
fn solve_line(a: &[Vec<QSqrt2>], rhs: &[QSqrt2]) -> Option<(Vec<QSqrt2>, Vec<QSqrt2>)> {
    let n = 5;
    let mut m: Vec<Vec<QSqrt2>> = a
        .iter()
        .zip(rhs)
        .map(|(row, r)| {
            row.iter()
                .cloned()
                .chain(std::iter::once(r.clone()))
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if pivots.len() != 4 {
        return None;
    }
    let free = (0..n).find(|c| !pivots.contains(c))?;
    let mut particular = vec![QSqrt2::zero(); n];
    let mut kernel = vec![QSqrt2::zero(); n];
    kernel[free] = QSqrt2::one();
    for (row, &c) in pivots.iter().enumerate() {
        particular[c] = m[row][n].clone();
        kernel[c] = -m[row][free].clone();
    }
    Some((particular, kernel))
}
