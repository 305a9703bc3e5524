//! Unit quaternions and rigid transforms.

use crate::error::{Error, Result};
use nalgebra::{Matrix3, Unit, Vector3};

/// Rigid transform: rotation as a unit quaternion (w, x, y, z) plus a
/// translation in meters. The quaternion is kept normalized with `w >= 0`
/// so equal transforms compare equal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pose {
    q: [f64; 4],
    t: Vector3<f64>,
}

impl Pose {
    pub fn identity() -> Self {
        Self {
            q: [1.0, 0.0, 0.0, 0.0],
            t: Vector3::zeros(),
        }
    }

    /// Build from a quaternion (normalized and sign-canonicalized here) and a
    /// translation. Fails on an all-zero quaternion.
    pub fn new(q: [f64; 4], t: Vector3<f64>) -> Result<Self> {
        Ok(Self {
            q: canonicalize(q)?,
            t,
        })
    }

    pub fn from_translation(t: Vector3<f64>) -> Self {
        Self {
            q: [1.0, 0.0, 0.0, 0.0],
            t,
        }
    }

    pub fn from_axis_angle(axis: &Unit<Vector3<f64>>, angle: f64, t: Vector3<f64>) -> Self {
        let half = 0.5 * angle;
        let s = half.sin();
        let q = [half.cos(), s * axis.x, s * axis.y, s * axis.z];
        Self {
            q: canonicalize(q).expect("unit axis"),
            t,
        }
    }

    pub fn from_rotation_matrix(r: &Matrix3<f64>, t: Vector3<f64>) -> Self {
        Self {
            q: matrix_to_quat(r),
            t,
        }
    }

    pub fn quaternion(&self) -> [f64; 4] {
        self.q
    }

    pub fn translation(&self) -> Vector3<f64> {
        self.t
    }

    pub fn rotation_matrix(&self) -> Matrix3<f64> {
        quat_to_matrix(&self.q).expect("stored quaternion is unit")
    }

    /// Apply to a point: `R x + t`.
    #[inline]
    pub fn apply(&self, x: &Vector3<f64>) -> Vector3<f64> {
        rotate(&self.q, x) + self.t
    }

    /// Composition: `(other ∘ self)`, i.e. if `self` maps a→b and `other`
    /// maps b→c, the result maps a→c.
    pub fn then(&self, other: &Pose) -> Pose {
        let q = quat_mul(&other.q, &self.q);
        let t = rotate(&other.q, &self.t) + other.t;
        Pose {
            q: canonicalize(q).expect("product of unit quaternions"),
            t,
        }
    }

    pub fn inverse(&self) -> Pose {
        let qc = [self.q[0], -self.q[1], -self.q[2], -self.q[3]];
        let t = -rotate(&qc, &self.t);
        Pose {
            q: canonicalize(qc).expect("conjugate of unit quaternion"),
            t,
        }
    }

    /// Rotation angle in radians, in [0, pi].
    pub fn rotation_angle(&self) -> f64 {
        let v = (self.q[1] * self.q[1] + self.q[2] * self.q[2] + self.q[3] * self.q[3]).sqrt();
        2.0 * v.atan2(self.q[0])
    }

    pub fn is_identity(&self, tol: f64) -> bool {
        self.rotation_angle() < tol && self.t.norm() < tol
    }
}

/// Compose two poses: `b_from_a` then `c_from_b` gives `c_from_a`.
pub fn pose_compose(b_from_a: &Pose, c_from_b: &Pose) -> Pose {
    b_from_a.then(c_from_b)
}

fn canonicalize(q: [f64; 4]) -> Result<[f64; 4]> {
    let n = (q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]).sqrt();
    if n < 1e-12 {
        return Err(Error::InvalidArgument("all-zero quaternion".into()));
    }
    let s = if q[0] < 0.0 { -1.0 / n } else { 1.0 / n };
    Ok([q[0] * s, q[1] * s, q[2] * s, q[3] * s])
}

#[inline]
fn quat_mul(a: &[f64; 4], b: &[f64; 4]) -> [f64; 4] {
    [
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    ]
}

/// Rotate a vector by a unit quaternion: v + 2 q_v x (q_v x v + w v).
#[inline]
fn rotate(q: &[f64; 4], v: &Vector3<f64>) -> Vector3<f64> {
    let qv = Vector3::new(q[1], q[2], q[3]);
    let t = 2.0 * qv.cross(v);
    v + q[0] * t + qv.cross(&t)
}

/// Rotation matrix of a unit quaternion. Normalizes internally when the
/// input is slightly off unit length; an all-zero quaternion is an error.
pub fn quat_to_matrix(q: &[f64; 4]) -> Result<Matrix3<f64>> {
    let q = canonicalize(*q)?;
    let (w, x, y, z) = (q[0], q[1], q[2], q[3]);
    Ok(Matrix3::new(
        1.0 - 2.0 * (y * y + z * z),
        2.0 * (x * y - w * z),
        2.0 * (x * z + w * y),
        2.0 * (x * y + w * z),
        1.0 - 2.0 * (x * x + z * z),
        2.0 * (y * z - w * x),
        2.0 * (x * z - w * y),
        2.0 * (y * z + w * x),
        1.0 - 2.0 * (x * x + y * y),
    ))
}

/// Quaternion of a rotation matrix (Shepperd's method, canonical sign).
pub fn matrix_to_quat(r: &Matrix3<f64>) -> [f64; 4] {
    let trace = r[(0, 0)] + r[(1, 1)] + r[(2, 2)];
    let q = if trace > 0.0 {
        let s = (trace + 1.0).sqrt() * 2.0;
        [
            0.25 * s,
            (r[(2, 1)] - r[(1, 2)]) / s,
            (r[(0, 2)] - r[(2, 0)]) / s,
            (r[(1, 0)] - r[(0, 1)]) / s,
        ]
    } else if r[(0, 0)] > r[(1, 1)] && r[(0, 0)] > r[(2, 2)] {
        let s = (1.0 + r[(0, 0)] - r[(1, 1)] - r[(2, 2)]).sqrt() * 2.0;
        [
            (r[(2, 1)] - r[(1, 2)]) / s,
            0.25 * s,
            (r[(0, 1)] + r[(1, 0)]) / s,
            (r[(0, 2)] + r[(2, 0)]) / s,
        ]
    } else if r[(1, 1)] > r[(2, 2)] {
        let s = (1.0 + r[(1, 1)] - r[(0, 0)] - r[(2, 2)]).sqrt() * 2.0;
        [
            (r[(0, 2)] - r[(2, 0)]) / s,
            (r[(0, 1)] + r[(1, 0)]) / s,
            0.25 * s,
            (r[(1, 2)] + r[(2, 1)]) / s,
        ]
    } else {
        let s = (1.0 + r[(2, 2)] - r[(0, 0)] - r[(1, 1)]).sqrt() * 2.0;
        [
            (r[(1, 0)] - r[(0, 1)]) / s,
            (r[(0, 2)] + r[(2, 0)]) / s,
            (r[(1, 2)] + r[(2, 1)]) / s,
            0.25 * s,
        ]
    };
    canonicalize(q).expect("rotation matrix yields nonzero quaternion")
}
