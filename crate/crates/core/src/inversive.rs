//! Oriented spheres in Möbius 3-space and their inversive coordinates `(a, b, x̂, ŷ, ẑ)`.
//!
//! Coordinates are row vectors. Möbius matrices act on the right: `v ↦ v·M`.

use std::cmp::Ordering;
use std::fmt;

use num_traits::FromPrimitive;
use serde::{Deserialize, Serialize};

use crate::ring::{Field, Mat, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InversiveError {
    #[error("oriented radius must be nonzero")]
    ZeroRadius,
    #[error("plane normal must have unit length")]
    NonUnitNormal,
    #[error("coordinate vector has self-product {0}, expected 1")]
    NotNormalized(String),
    #[error("rescale factor must be nonzero")]
    ZeroScale,
    #[error("rotation is not exact: axis must be a unit vector and cos² + sin² = 1")]
    NonExactRotation,
}

/// Inversive coordinate vector `(a, b, x̂, ŷ, ẑ)`: augmented bend, bend, and bend-scaled center.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Coord<T> {
    pub a: T,
    pub b: T,
    pub xhat: T,
    pub yhat: T,
    pub zhat: T,
}

impl<T: Scalar> Coord<T> {
    pub fn new(a: T, b: T, xhat: T, yhat: T, zhat: T) -> Self {
        Self {
            a,
            b,
            xhat,
            yhat,
            zhat,
        }
    }

    pub fn from_slice(v: &[T]) -> Self {
        assert_eq!(v.len(), 5, "coordinate vectors have five entries");
        Self::new(
            v[0].clone(),
            v[1].clone(),
            v[2].clone(),
            v[3].clone(),
            v[4].clone(),
        )
    }

    pub fn to_array(&self) -> [T; 5] {
        [
            self.a.clone(),
            self.b.clone(),
            self.xhat.clone(),
            self.yhat.clone(),
            self.zhat.clone(),
        ]
    }

    pub fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        Self::new(
            f(&self.a, &other.a),
            f(&self.b, &other.b),
            f(&self.xhat, &other.xhat),
            f(&self.yhat, &other.yhat),
            f(&self.zhat, &other.zhat),
        )
    }

    pub fn plus(&self, other: &Self) -> Self {
        self.zip_with(other, |x, y| x.clone() + y.clone())
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.zip_with(other, |x, y| x.clone() - y.clone())
    }

    pub fn scaled(&self, k: &T) -> Self {
        Self::from_slice(&self.to_array().map(|x| x * k.clone()))
    }

    /// `v·M` for a 5×5 matrix `M`.
    pub fn transform(&self, m: &Mat<T>) -> Self {
        Self::from_slice(&m.vec_mul(&self.to_array()))
    }
}

impl<T: fmt::Display> fmt::Display for Coord<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {}, {})",
            self.a, self.b, self.xhat, self.yhat, self.zhat
        )
    }
}

impl<T: fmt::Debug> fmt::Debug for Coord<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({:?}, {:?}, {:?}, {:?}, {:?})",
            self.a, self.b, self.xhat, self.yhat, self.zhat
        )
    }
}

/// Geometry of an oriented sphere. A plane is `{p : n·p = offset}`; its normal points into
/// the orienting region. A negative radius orients the sphere toward the ball complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SphereKind<T> {
    Honest { center: [T; 3], radius: T },
    Planar { normal: [T; 3], offset: T },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedSphere<T>(SphereKind<T>);

impl<T: Field> OrientedSphere<T> {
    pub fn honest(center: [T; 3], radius: T) -> Result<Self, InversiveError> {
        if radius.is_zero() {
            return Err(InversiveError::ZeroRadius);
        }
        Ok(Self(SphereKind::Honest { center, radius }))
    }

    pub fn planar(normal: [T; 3], offset: T) -> Result<Self, InversiveError> {
        if dot(&normal, &normal) != T::one() {
            return Err(InversiveError::NonUnitNormal);
        }
        Ok(Self(SphereKind::Planar { normal, offset }))
    }

    pub fn kind(&self) -> &SphereKind<T> {
        &self.0
    }

    pub fn is_planar(&self) -> bool {
        matches!(self.0, SphereKind::Planar { .. })
    }
}

fn dot<T: Scalar>(u: &[T; 3], w: &[T; 3]) -> T {
    u.iter()
        .zip(w)
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// The bilinear form matrix with `Σ(u, w) = u·Q_Σ·wᵀ`.
pub fn q_sigma<T: Field>() -> Mat<T> {
    let h = -T::half();
    let (o, z) = (T::one(), T::zero());
    Mat::from_rows(&[
        [z.clone(), h.clone(), z.clone(), z.clone(), z.clone()],
        [h, z.clone(), z.clone(), z.clone(), z.clone()],
        [z.clone(), z.clone(), o.clone(), z.clone(), z.clone()],
        [z.clone(), z.clone(), z.clone(), o.clone(), z.clone()],
        [z.clone(), z.clone(), z.clone(), z, o],
    ])
}

/// The Wilker matrix `2·Q_Σ⁻¹`.
pub fn q_wilker<T: Scalar + FromPrimitive>() -> Mat<T> {
    Mat::from_i64(&[
        [0, -4, 0, 0, 0],
        [-4, 0, 0, 0, 0],
        [0, 0, 2, 0, 0],
        [0, 0, 0, 2, 0],
        [0, 0, 0, 0, 2],
    ])
}

/// `Σ(u, w) = −½(u_a·w_b + u_b·w_a) + u_x̂·w_x̂ + u_ŷ·w_ŷ + u_ẑ·w_ẑ`.
pub fn inversive_product<T: Field>(u: &Coord<T>, w: &Coord<T>) -> T {
    let cross = u.a.clone() * w.b.clone() + u.b.clone() * w.a.clone();
    -(T::half() * cross)
        + u.xhat.clone() * w.xhat.clone()
        + u.yhat.clone() * w.yhat.clone()
        + u.zhat.clone() * w.zhat.clone()
}

pub fn coords_from_sphere<T: Field>(s: &OrientedSphere<T>) -> Coord<T> {
    match s.kind() {
        SphereKind::Honest { center, radius } => {
            let b = radius.try_inv().expect("nonzero radius");
            let a = b.clone() * dot(center, center) - radius.clone();
            let [x, y, z] = center.clone();
            Coord::new(a, b.clone(), b.clone() * x, b.clone() * y, b * z)
        }
        SphereKind::Planar { normal, offset } => {
            let [x, y, z] = normal.clone();
            Coord::new(T::two() * offset.clone(), T::zero(), x, y, z)
        }
    }
}

pub fn sphere_from_coords<T: Field>(v: &Coord<T>) -> Result<OrientedSphere<T>, InversiveError> {
    let norm = inversive_product(v, v);
    if norm != T::one() {
        return Err(InversiveError::NotNormalized(format!("{norm:?}")));
    }
    match v.b.try_inv() {
        Some(r) => {
            let center = [
                v.xhat.clone() * r.clone(),
                v.yhat.clone() * r.clone(),
                v.zhat.clone() * r.clone(),
            ];
            OrientedSphere::honest(center, r)
        }
        None => OrientedSphere::planar(
            [v.xhat.clone(), v.yhat.clone(), v.zhat.clone()],
            v.a.clone() * T::half(),
        ),
    }
}

/// Inversion in the unit sphere: swaps `a` and `b`.
pub fn mobius_inversion<T: Scalar + FromPrimitive>() -> Mat<T> {
    Mat::from_i64(&[
        [0, 1, 0, 0, 0],
        [1, 0, 0, 0, 0],
        [0, 0, 1, 0, 0],
        [0, 0, 0, 1, 0],
        [0, 0, 0, 0, 1],
    ])
}

/// Dilation `p ↦ t·p`.
pub fn mobius_rescale<T: Field>(t: &T) -> Result<Mat<T>, InversiveError> {
    let inv = t.try_inv().ok_or(InversiveError::ZeroScale)?;
    Ok(Mat::diagonal(&[
        t.clone(),
        inv,
        T::one(),
        T::one(),
        T::one(),
    ]))
}

/// Translation `p ↦ p + (x, y, z)`.
pub fn mobius_translate<T: Scalar>(x: &T, y: &T, z: &T) -> Mat<T> {
    let (o, n) = (T::one(), T::zero());
    let sq = x.clone() * x.clone() + y.clone() * y.clone() + z.clone() * z.clone();
    let two = T::two();
    Mat::from_rows(&[
        [o.clone(), n.clone(), n.clone(), n.clone(), n.clone()],
        [sq, o.clone(), x.clone(), y.clone(), z.clone()],
        [
            two.clone() * x.clone(),
            n.clone(),
            o.clone(),
            n.clone(),
            n.clone(),
        ],
        [
            two.clone() * y.clone(),
            n.clone(),
            n.clone(),
            o.clone(),
            n.clone(),
        ],
        [two * z.clone(), n.clone(), n.clone(), n, o],
    ])
}

/// Rotation about a unit axis, embedded as the lower-right 3×3 block. No exactness check.
pub fn rodrigues<T: Scalar>(axis: &[T; 3], cos: &T, sin: &T) -> Mat<T> {
    let [x, y, z] = axis.clone();
    let c = cos.clone();
    let s = sin.clone();
    let k = T::one() - c.clone();
    let (o, n) = (T::one(), T::zero());
    let e = |p: &T, q: &T| k.clone() * p.clone() * q.clone();
    Mat::from_rows(&[
        [o.clone(), n.clone(), n.clone(), n.clone(), n.clone()],
        [n.clone(), o, n.clone(), n.clone(), n.clone()],
        [
            n.clone(),
            n.clone(),
            e(&x, &x) + c.clone(),
            e(&x, &y) + z.clone() * s.clone(),
            e(&x, &z) - y.clone() * s.clone(),
        ],
        [
            n.clone(),
            n.clone(),
            e(&y, &x) - z.clone() * s.clone(),
            e(&y, &y) + c.clone(),
            e(&y, &z) + x.clone() * s.clone(),
        ],
        [
            n.clone(),
            n,
            e(&z, &x) + y.clone() * s.clone(),
            e(&z, &y) - x.clone() * s.clone(),
            e(&z, &z) + c,
        ],
    ])
}

/// Exact rotation; requires a unit axis and `cos² + sin² = 1`.
pub fn mobius_rotate<T: Field>(axis: &[T; 3], cos: &T, sin: &T) -> Result<Mat<T>, InversiveError> {
    let unit = cos.clone() * cos.clone() + sin.clone() * sin.clone() == T::one();
    if !unit || dot(axis, axis) != T::one() {
        return Err(InversiveError::NonExactRotation);
    }
    Ok(rodrigues(axis, cos, sin))
}

/// Checks `M·Q_Σ·Mᵀ = Q_Σ` and `Mᵀ·Q_W·M = Q_W`.
pub fn verify_mobius_invariance<T: Field + FromPrimitive>(m: &Mat<T>) -> bool {
    if m.rows() != 5 || m.cols() != 5 {
        return false;
    }
    let qs = q_sigma::<T>();
    let qw = q_wilker::<T>();
    &(m * &qs) * &m.transpose() == qs && &(&m.transpose() * &qw) * m == qw
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairRelation<T> {
    Intersecting { cos_theta: T },
    TangentNested,
    TangentExternal,
    DisjointNested { cosh_delta: T },
    DisjointExternal { cosh_delta: T },
}

impl<T> PairRelation<T> {
    pub fn is_tangent(&self) -> bool {
        matches!(self, Self::TangentNested | Self::TangentExternal)
    }

    pub fn is_disjoint(&self) -> bool {
        matches!(
            self,
            Self::DisjointNested { .. } | Self::DisjointExternal { .. }
        )
    }
}

pub fn classify_pair<T: Field + PartialOrd>(u: &Coord<T>, w: &Coord<T>) -> PairRelation<T> {
    let s = inversive_product(u, w);
    let one = T::one();
    let minus_one = -T::one();
    match (s.partial_cmp(&one), s.partial_cmp(&minus_one)) {
        (Some(Ordering::Equal), _) => PairRelation::TangentNested,
        (_, Some(Ordering::Equal)) => PairRelation::TangentExternal,
        (Some(Ordering::Greater), _) => PairRelation::DisjointNested { cosh_delta: s },
        (_, Some(Ordering::Less)) => PairRelation::DisjointExternal { cosh_delta: -s },
        _ => PairRelation::Intersecting { cos_theta: s },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::QSqrt2;

    fn q(a: i64, b: i64) -> QSqrt2 {
        QSqrt2::from_ints(a, b)
    }

    fn c(v: [QSqrt2; 5]) -> Coord<QSqrt2> {
        Coord::from_slice(&v)
    }

    #[test]
    fn honest_sphere_coordinates() {
        let s = OrientedSphere::honest([q(0, 1), q(0, 0), q(0, 0)], q(1, 0)).unwrap();
        assert_eq!(
            coords_from_sphere(&s),
            c([q(1, 0), q(1, 0), q(0, 1), q(0, 0), q(0, 0)])
        );

        let s = OrientedSphere::honest(
            [q(0, 0), q(0, 0), QSqrt2::ratio(-1, 2)],
            QSqrt2::ratio(1, 2),
        )
        .unwrap();
        assert_eq!(
            coords_from_sphere(&s),
            c([q(0, 0), q(2, 0), q(0, 0), q(0, 0), q(-1, 0)])
        );
    }

    #[test]
    fn planar_sphere_coordinates() {
        let s = OrientedSphere::planar([q(0, 0), q(0, 0), q(1, 0)], q(1, 0)).unwrap();
        assert_eq!(
            coords_from_sphere(&s),
            c([q(2, 0), q(0, 0), q(0, 0), q(0, 0), q(1, 0)])
        );
        assert_eq!(
            OrientedSphere::planar([q(1, 0), q(1, 0), q(0, 0)], q(0, 0)),
            Err(InversiveError::NonUnitNormal)
        );
        assert_eq!(
            OrientedSphere::honest([q(0, 0), q(0, 0), q(0, 0)], q(0, 0)),
            Err(InversiveError::ZeroRadius)
        );
    }

    #[test]
    fn spheres_from_coordinates() {
        let s = sphere_from_coords(&c([q(1, 0), q(1, 0), q(0, 1), q(0, 0), q(0, 0)])).unwrap();
        assert_eq!(
            s.kind(),
            &SphereKind::Honest {
                center: [q(0, 1), q(0, 0), q(0, 0)],
                radius: q(1, 0)
            }
        );
        assert!(
            sphere_from_coords(&c([q(2, 0), q(0, 0), q(0, 0), q(0, 0), q(1, 0)]))
                .unwrap()
                .is_planar()
        );
        let s = sphere_from_coords(&c([q(0, 0), q(2, 0), q(0, 0), q(0, 0), q(1, 0)])).unwrap();
        assert_eq!(
            s.kind(),
            &SphereKind::Honest {
                center: [q(0, 0), q(0, 0), QSqrt2::ratio(1, 2)],
                radius: QSqrt2::ratio(1, 2)
            }
        );
        assert!(matches!(
            sphere_from_coords(&c([q(1, 0), q(1, 0), q(0, 0), q(0, 0), q(0, 0)])),
            Err(InversiveError::NotNormalized(_))
        ));
    }

    #[test]
    fn wilker_is_twice_inverse_of_sigma() {
        let prod = &q_sigma::<QSqrt2>() * &q_wilker::<QSqrt2>().scale(&QSqrt2::ratio(1, 2));
        assert!(prod.is_identity());
    }

    #[test]
    fn generator_matrices() {
        let t = mobius_translate(&q(1, 0), &q(2, 0), &q(3, 0));
        assert_eq!(t.row(1), &[q(14, 0), q(1, 0), q(1, 0), q(2, 0), q(3, 0)]);
        assert!(verify_mobius_invariance(&t));
        assert!(mobius_rescale(&q(1, 0)).unwrap().is_identity());
        assert_eq!(mobius_rescale(&q(0, 0)), Err(InversiveError::ZeroScale));
        let inv = mobius_inversion::<QSqrt2>();
        assert!((&inv * &inv).is_identity());
        assert!(verify_mobius_invariance(&Mat::<QSqrt2>::identity(5)));
        assert!(!verify_mobius_invariance(&Mat::<QSqrt2>::diagonal(&[
            q(2, 0),
            q(1, 0),
            q(1, 0),
            q(1, 0),
            q(1, 0)
        ])));
    }

    #[test]
    fn exact_rotations() {
        let h = QSqrt2::sqrt2() * QSqrt2::ratio(1, 2);
        let r = mobius_rotate(&[q(0, 0), q(0, 0), q(1, 0)], &h, &h).unwrap();
        assert!(verify_mobius_invariance(&r));
        let r = mobius_rotate(
            &[q(1, 0), q(0, 0), q(0, 0)],
            &QSqrt2::ratio(3, 5),
            &QSqrt2::ratio(4, 5),
        )
        .unwrap();
        assert!(verify_mobius_invariance(&r));
        assert_eq!(
            mobius_rotate(&[q(1, 0), q(0, 0), q(0, 0)], &q(1, 0), &q(1, 0)),
            Err(InversiveError::NonExactRotation)
        );
    }

    #[test]
    fn quarter_turn_moves_x_axis_to_y_axis() {
        let r = mobius_rotate(&[q(0, 0), q(0, 0), q(1, 0)], &q(0, 0), &q(1, 0)).unwrap();
        let v = c([q(1, 0), q(1, 0), q(0, 1), q(0, 0), q(0, 0)]);
        assert_eq!(
            v.transform(&r),
            c([q(1, 0), q(1, 0), q(0, 0), q(0, 1), q(0, 0)])
        );
    }

    #[test]
    fn pair_classification() {
        let p1 = c([q(2, 0), q(0, 0), q(0, 0), q(0, 0), q(1, 0)]);
        let p2 = c([q(2, 0), q(0, 0), q(0, 0), q(0, 0), q(-1, 0)]);
        let s5 = c([q(0, 0), q(2, 0), q(0, 0), q(0, 0), q(-1, 0)]);
        assert_eq!(inversive_product(&p1, &p2), q(-1, 0));
        assert_eq!(classify_pair(&p1, &p2), PairRelation::TangentExternal);
        assert_eq!(
            classify_pair(&p1, &s5),
            PairRelation::DisjointExternal {
                cosh_delta: q(3, 0)
            }
        );
        let big = c([q(-1, 0), q(1, 0), q(0, 0), q(0, 0), q(0, 0)]);
        let small = c([QSqrt2::ratio(-1, 3), q(3, 0), q(0, 0), q(0, 0), q(0, 0)]);
        assert!(matches!(
            classify_pair(&big, &small),
            PairRelation::DisjointNested { .. }
        ));
    }
}
